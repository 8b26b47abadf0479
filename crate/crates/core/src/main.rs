fn main() {
    std::process::exit(abelian_spectra::cli::main_with(std::env::args_os()));
}
