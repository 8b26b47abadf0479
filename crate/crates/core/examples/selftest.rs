//! Runs a reduced property suite and prints the summary.

use abelian_spectra::selftest::{run, SelftestConfig};

fn main() {
    let config = SelftestConfig {
        max_group_size: 8,
        representations: 10,
        gns_functions: 20,
        rigging_setups: 10,
        ..SelftestConfig::default()
    };
    let report = run(&config);
    print!("{}", report.summary());
    println!("passed: {}", report.passed);
}
