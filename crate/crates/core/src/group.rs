//! Finite abelian groups written as products of cyclic factors
//! `Z_{n_1} x ... x Z_{n_k}`, their elements, the dual group and the
//! character pairing `<g|chi> = exp(2 pi i sum_j g_j chi_j / n_j)`.
//!
//! Elements and characters are enumerated lexicographically on their
//! coordinates (last coordinate fastest). Every vector and matrix in the
//! crate is indexed in this order.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `|G|`. Most algorithms are `O(|G|^2)` or worse.
pub const DEFAULT_SIZE_CAP: usize = 65_536;

/// A group element as a tuple of residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub Vec<usize>);

/// A character of the group, written in the same coordinates as elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<usize>);

impl Element {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl Character {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{:?}", self.0)
    }
}

/// On-disk form of a group: `{"orders": [n1, ..., nk]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub orders: Vec<usize>,
}

/// A finite abelian group `Z_{n_1} x ... x Z_{n_k}` with counting Haar measure.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GroupSpec", into = "GroupSpec")]
pub struct Group {
    orders: Vec<usize>,
    size: usize,
    haar_weight: f64,
    /// Least common multiple of the orders; every pairing is an `lcm`-th root of unity.
    lcm: usize,
    /// Flattened coordinate table, `size * rank` entries.
    coords: Arc<[usize]>,
    /// `roots[k] = exp(2 pi i k / lcm)`.
    roots: Arc<[Complex64]>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("orders", &self.orders)
            .field("size", &self.size)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders
    }
}

impl Eq for Group {}

impl TryFrom<GroupSpec> for Group {
    type Error = Error;

    fn try_from(spec: GroupSpec) -> Result<Self> {
        Group::new(&spec.orders)
    }
}

impl From<Group> for GroupSpec {
    fn from(g: Group) -> Self {
        GroupSpec { orders: g.orders }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Group {
    /// Builds `Z_{n_1} x ... x Z_{n_k}` with the default size cap.
    pub fn new(orders: &[usize]) -> Result<Self> {
        Self::with_size_cap(orders, DEFAULT_SIZE_CAP)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn with_size_cap(orders: &[usize], cap: usize) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("orders must be non-empty".into()));
        }
        if let Some(pos) = orders.iter().position(|&n| n == 0) {
            return Err(Error::InvalidGroup(format!("order at position {pos} is zero")));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .filter(|&s| s <= cap)
            .ok_or_else(|| {
                Error::InvalidGroup(format!("group size exceeds the cap of {cap} elements"))
            })?;

        let lcm = orders.iter().fold(1usize, |acc, &n| acc / gcd(acc, n) * n);
        let rank = orders.len();
        let mut coords = vec![0usize; size * rank];
        for idx in 0..size {
            let mut rem = idx;
            for j in (0..rank).rev() {
                coords[idx * rank + j] = rem % orders[j];
                rem /= orders[j];
            }
        }
        let roots: Vec<Complex64> = (0..lcm)
            .map(|k| Complex64::cis(2.0 * PI * k as f64 / lcm as f64))
            .collect();

        Ok(Group {
            orders: orders.to_vec(),
            size,
            haar_weight: 1.0,
            lcm,
            coords: coords.into(),
            roots: roots.into(),
        })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Haar measure of a single element (counting measure).
    pub fn haar_weight(&self) -> f64 {
        self.haar_weight
    }

    /// Weight of a single character under the Plancherel measure, `1/|G|`.
    pub fn dual_weight(&self) -> f64 {
        1.0 / self.size as f64
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec {
            orders: self.orders.clone(),
        }
    }

    pub(crate) fn coords_of(&self, index: usize) -> &[usize] {
        let r = self.rank();
        &self.coords[index * r..(index + 1) * r]
    }

    pub fn identity(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    pub fn element(&self, index: usize) -> Element {
        Element(self.coords_of(index).to_vec())
    }

    pub fn character(&self, index: usize) -> Character {
        Character(self.coords_of(index).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size).map(|i| self.element(i))
    }

    /// All characters, in the same order as the elements.
    pub fn dual_group(&self) -> Vec<Character> {
        (0..self.size).map(|i| self.character(i)).collect()
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.rank() {
            return Err(Error::ElementShape {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        for (index, (&value, &order)) in coords.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(Error::CoordinateRange { index, value, order });
            }
        }
        Ok(())
    }

    fn index_unchecked(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&c, &n)| acc * n + c)
    }

    /// Position of an element in the enumeration order.
    pub fn index_of(&self, g: &Element) -> Result<usize> {
        self.check_coords(&g.0)?;
        Ok(self.index_unchecked(&g.0))
    }

    pub fn character_index(&self, chi: &Character) -> Result<usize> {
        self.check_coords(&chi.0)?;
        Ok(self.index_unchecked(&chi.0))
    }

    /// The group law: componentwise addition modulo the orders.
    pub fn op(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_coords(&a.0)?;
        self.check_coords(&b.0)?;
        Ok(Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check_coords(&a.0)?;
        Ok(Element(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        ))
    }

    /// Index of `a + b`, by enumeration indices.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords_of(a), self.coords_of(b));
        ca.iter()
            .zip(cb)
            .zip(&self.orders)
            .fold(0, |acc, ((&x, &y), &n)| acc * n + (x + y) % n)
    }

    /// Index of `a - b`.
    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords_of(a), self.coords_of(b));
        ca.iter()
            .zip(cb)
            .zip(&self.orders)
            .fold(0, |acc, ((&x, &y), &n)| acc * n + (x + n - y) % n)
    }

    /// Index of `-a`.
    pub fn neg_index(&self, a: usize) -> usize {
        self.coords_of(a)
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&x, &n)| acc * n + (n - x) % n)
    }

    /// Exponent `k` with `<g|chi> = exp(2 pi i k / lcm)`.
    fn phase_index(&self, g: usize, chi: usize) -> usize {
        let (cg, cc) = (self.coords_of(g), self.coords_of(chi));
        cg.iter()
            .zip(cc)
            .zip(&self.orders)
            .fold(0, |acc, ((&x, &y), &n)| (acc + x * y % n * (self.lcm / n)) % self.lcm)
    }

    /// `<g|chi>` by enumeration indices.
    #[inline]
    pub fn pairing_by_index(&self, g: usize, chi: usize) -> Complex64 {
        self.roots[self.phase_index(g, chi)]
    }

    /// `<g|chi> = exp(2 pi i sum_j g_j chi_j / n_j)`.
    pub fn pairing(&self, g: &Element, chi: &Character) -> Result<Complex64> {
        let gi = self.index_of(g)?;
        let ci = self.character_index(chi)?;
        Ok(self.pairing_by_index(gi, ci))
    }

    /// The `|G| x |G|` table with rows indexed by elements and columns by characters.
    pub fn pairing_table(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.size, self.size, |g, chi| self.pairing_by_index(g, chi))
    }

    /// Order of an element: the least `m >= 1` with `m g = 0`.
    pub fn element_order(&self, g: usize) -> usize {
        self.coords_of(g)
            .iter()
            .zip(&self.orders)
            .fold(1usize, |acc, (&x, &n)| {
                let m = n / gcd(n, x);
                acc / gcd(acc, m) * m
            })
    }
}
