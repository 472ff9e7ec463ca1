//! Ideal-theoretic route to nonlinearity: polynomials over F_2 modulo the
//! field equations, square-free monomial composition, and exhaustive
//! variety computation.
//!
//! No term orders or basis reduction appear anywhere: every ideal handled
//! here contains the field equations, so it is zero-dimensional and radical
//! and its variety is computable by finite enumeration.

use std::collections::BTreeSet;
use std::fmt;

use crate::affine::AffineFunction;
use crate::error::{Error, Result};
use crate::transforms::mobius;
use crate::truth_table::TruthTable;

/// Polynomial over F_2 in m variables, reduced modulo the field equations:
/// a set of square-free monomials with XOR addition. Monomial masks use
/// plain bit k for variable k (rendered a0..a(m-1)).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyF2 {
    m: u32,
    monomials: BTreeSet<u64>,
}

impl PolyF2 {
    pub fn zero(m: u32) -> Self {
        assert!((1..=64).contains(&m), "variable count {m} out of range");
        Self {
            m,
            monomials: BTreeSet::new(),
        }
    }

    pub fn one(m: u32) -> Self {
        let mut p = Self::zero(m);
        p.toggle(0);
        p
    }

    pub fn variable(m: u32, k: u32) -> Self {
        assert!(k < m, "variable index {k} out of range for m={m}");
        let mut p = Self::zero(m);
        p.toggle(1u64 << k);
        p
    }

    /// XOR-toggles one monomial mask.
    pub fn toggle(&mut self, mask: u64) {
        assert!(
            self.m == 64 || mask < 1u64 << self.m,
            "monomial mask out of range"
        );
        if !self.monomials.remove(&mask) {
            self.monomials.insert(mask);
        }
    }

    pub fn var_count(&self) -> u32 {
        self.m
    }

    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        self.monomials.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monomials.len() == 1 && self.monomials.contains(&0)
    }

    pub fn degree(&self) -> u32 {
        self.monomials
            .iter()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "variable count mismatch");
        let mut out = self.clone();
        for &mono in &other.monomials {
            out.toggle(mono);
        }
        out
    }

    /// Product reduced modulo the field equations: exponents cap at one, so
    /// each pair of monomials multiplies to the union of their supports.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "variable count mismatch");
        let mut out = Self::zero(self.m);
        for &a in &self.monomials {
            for &b in &other.monomials {
                out.toggle(a | b);
            }
        }
        out
    }

    /// Value at a 0/1 assignment; bit k of the mask is the value of
    /// variable k.
    pub fn evaluate(&self, assignment: u64) -> bool {
        self.monomials
            .iter()
            .filter(|&&mono| mono & assignment == mono)
            .count()
            & 1
            == 1
    }
}

impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let mut supports: Vec<Vec<u32>> = self
            .monomials
            .iter()
            .map(|&mono| (0..self.m).filter(|k| (mono >> k) & 1 == 1).collect())
            .collect();
        supports.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let terms: Vec<String> = supports
            .iter()
            .map(|support| {
                if support.is_empty() {
                    "1".to_string()
                } else {
                    support
                        .iter()
                        .map(|k| format!("a{k}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyF2(m={}, {})", self.m, self)
    }
}

/// Product of t distinct variables z_{h_1}..z_{h_t}, 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SquareFreeMonomial {
    s: u32,
    mask: u64,
}

impl SquareFreeMonomial {
    pub fn from_indices(s: u32, indices: &[u32]) -> Self {
        assert!((1..=64).contains(&s), "variable count {s} out of range");
        let mut mask = 0u64;
        for &k in indices {
            assert!(k >= 1 && k <= s, "index z{k} out of range");
            assert!(mask & (1 << (k - 1)) == 0, "repeated index z{k}");
            mask |= 1 << (k - 1);
        }
        assert!(mask != 0, "a square-free monomial has degree >= 1");
        Self { s, mask }
    }

    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    /// 1-based variable indices, ascending.
    pub fn indices(&self) -> Vec<u32> {
        (1..=self.s)
            .filter(|k| (self.mask >> (k - 1)) & 1 == 1)
            .collect()
    }
}

/// Lazy lexicographic stream of all degree-t square-free monomials in s
/// variables.
pub struct SquareFreeMonomials {
    s: u32,
    t: u32,
    next: Option<Vec<u32>>,
}

pub fn square_free_monomials(s: u32, t: u32) -> Result<SquareFreeMonomials> {
    if !(1..=64).contains(&s) || t < 1 || t > s {
        return Err(Error::Invalid(format!(
            "square-free monomials need 1 <= t <= s <= 64, got s={s} t={t}"
        )));
    }
    Ok(SquareFreeMonomials {
        s,
        t,
        next: Some((1..=t).collect()),
    })
}

impl Iterator for SquareFreeMonomials {
    type Item = SquareFreeMonomial;

    fn next(&mut self) -> Option<SquareFreeMonomial> {
        let current = self.next.take()?;
        let item = SquareFreeMonomial::from_indices(self.s, &current);
        // Advance to the next combination, rightmost index first.
        let t = self.t as usize;
        let mut next = current;
        let mut i = t;
        loop {
            if i == 0 {
                return Some(item);
            }
            i -= 1;
            if next[i] < self.s - (t - 1 - i) as u32 {
                next[i] += 1;
                for k in i + 1..t {
                    next[k] = next[k - 1] + 1;
                }
                self.next = Some(next);
                return Some(item);
            }
        }
    }
}

/// m(W): the product of the entries of W selected by the monomial's
/// support, reduced modulo the field equations.
pub fn compose_monomial(mono: &SquareFreeMonomial, w: &[PolyF2]) -> Result<PolyF2> {
    let indices = mono.indices();
    if let Some(&max) = indices.iter().max() {
        if max as usize > w.len() {
            return Err(Error::Invalid(format!(
                "monomial index z{max} exceeds vector length {}",
                w.len()
            )));
        }
    }
    let m = w[indices[0] as usize - 1].var_count();
    let mut product = PolyF2::one(m);
    for k in indices {
        product = product.mul(&w[k as usize - 1]);
    }
    Ok(product)
}

/// Evaluation vector of the generic affine function a_0 + a_1 x_1 + ... +
/// a_n x_n: entry p is the polynomial a_0 + sum of a_j over coordinates set
/// in point p, over the m = n+1 variables a_0..a_n.
pub fn generic_affine_vector(n: u32) -> Result<Vec<PolyF2>> {
    if !(1..=16).contains(&n) {
        return Err(Error::SizeLimit(format!(
            "generic affine vector is capped at n<=16, got n={n}"
        )));
    }
    let m = n + 1;
    let mut out = Vec::with_capacity(1 << n);
    for p in 0..1u32 << n {
        let mut entry = PolyF2::variable(m, 0);
        for j in 1..=n {
            if (p >> (n - j)) & 1 == 1 {
                entry.toggle(1u64 << j);
            }
        }
        out.push(entry);
    }
    Ok(out)
}

/// Generators over a_0..a_n whose common zeros are the coefficient tuples
/// of affine functions within distance t-1 of f (field equations implied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerators {
    m: u32,
    gens: Vec<PolyF2>,
}

impl IdealGenerators {
    pub fn new(m: u32, gens: Vec<PolyF2>) -> Self {
        assert!(gens.iter().all(|g| g.var_count() == m));
        Self { m, gens }
    }

    pub fn var_count(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> &[PolyF2] {
        &self.gens
    }
}

fn binomial_capped(s: u64, t: u64, cap: u64) -> u64 {
    let t = t.min(s - t);
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (s - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return cap + 1;
        }
    }
    acc as u64
}

const MATERIALIZE_CAP: u64 = 1_000_000;

/// All products of t distinct entries of the vector of affine polynomials
/// a_0 + a.x(p) + f(p). Guarded: materializing C(2^n, t) generators is
/// refused beyond 10^6; the lazy scan covers those sizes.
pub fn distance_ideal_generators(tt: &TruthTable, t: u32) -> Result<IdealGenerators> {
    let n = tt.var_count();
    let size = 1u64 << n;
    if t < 1 || u64::from(t) > size {
        return Err(Error::Invalid(format!(
            "ideal degree must satisfy 1 <= t <= 2^n, got t={t} for n={n}"
        )));
    }
    if binomial_capped(size, u64::from(t), MATERIALIZE_CAP) > MATERIALIZE_CAP {
        return Err(Error::SizeLimit(format!(
            "C({size},{t}) generators exceed the materialization cap of {MATERIALIZE_CAP}"
        )));
    }
    let mut shifted = generic_affine_vector(n)?;
    for (p, entry) in shifted.iter_mut().enumerate() {
        if tt.get(p) {
            entry.toggle(0);
        }
    }
    let mut gens = Vec::new();
    for mono in square_free_monomials(size as u32, t)? {
        gens.push(compose_monomial(&mono, &shifted)?);
    }
    Ok(IdealGenerators::new(n + 1, gens))
}

/// Common zeros in {0,1}^m of all generators (plus the always-adjoined
/// field equations, which every 0/1 point satisfies), by enumeration.
pub fn variety_points(g: &IdealGenerators) -> Result<BTreeSet<AffineFunction>> {
    let m = g.var_count();
    if m > 24 {
        return Err(Error::SizeLimit(format!(
            "variety enumeration is capped at 24 variables, got {m}"
        )));
    }
    assert!(m >= 2, "variety points decode as affine coefficient tuples");
    let mut points = BTreeSet::new();
    for assignment in 0..1u64 << m {
        if g.generators().iter().all(|p| !p.evaluate(assignment)) {
            points.insert(AffineFunction::from_var_mask(m - 1, assignment));
        }
    }
    Ok(points)
}

const LAZY_MAX_VARS: u32 = 16;

fn check_lazy_args(tt: &TruthTable, t: u32) -> Result<()> {
    let n = tt.var_count();
    if n > LAZY_MAX_VARS {
        return Err(Error::SizeLimit(format!(
            "lazy variety scan is capped at n<={LAZY_MAX_VARS}, got n={n}"
        )));
    }
    if t < 1 || u64::from(t) > 1u64 << n {
        return Err(Error::Invalid(format!(
            "ideal degree must satisfy 1 <= t <= 2^n, got t={t} for n={n}"
        )));
    }
    Ok(())
}

/// Sweeps the distances from f to every linear function in ascending mask
/// order, updating one shared table incrementally (the mask walk flips an
/// amortized-constant number of coordinates per step).
fn linear_distance_sweep(tt: &TruthTable, mut visit: impl FnMut(u32, u32) -> bool) {
    let n = tt.var_count();
    let size = 1u32 << n;
    let mut lin = TruthTable::zero(n);
    for mask in 0..size {
        if mask > 0 {
            let mut delta = mask ^ (mask - 1);
            while delta != 0 {
                let b = delta.trailing_zeros();
                lin.xor_coordinate(b);
                delta &= delta - 1;
            }
        }
        if visit(mask, tt.distance(&lin)) {
            return;
        }
    }
}

/// Emptiness test for the distance-t ideal without materializing any
/// generator: a tuple lies in the variety exactly when all degree-t
/// square-free products of the shifted affine vector vanish there, i.e.
/// when fewer than t of its entries are nonzero, i.e. when the distance
/// from f to that affine function is at most t-1. Returns the first
/// witness in ascending tuple index, scanning the a_0=0 half first.
pub fn variety_witness_lazy(tt: &TruthTable, t: u32) -> Result<Option<AffineFunction>> {
    check_lazy_args(tt, t)?;
    let n = tt.var_count();
    let size = 1u32 << n;
    let radius = t - 1;
    let mut distances = vec![0u32; size as usize];
    let mut witness = None;
    linear_distance_sweep(tt, |mask, d| {
        distances[mask as usize] = d;
        if d <= radius {
            witness = Some(AffineFunction::from_index(n, mask));
            true
        } else {
            false
        }
    });
    if witness.is_some() {
        return Ok(witness);
    }
    for mask in 0..size {
        if size - distances[mask as usize] <= radius {
            return Ok(Some(AffineFunction::from_index(n, size | mask)));
        }
    }
    Ok(None)
}

/// Full witness set of the distance-t ideal by the same lazy criterion.
pub fn variety_points_lazy(tt: &TruthTable, t: u32) -> Result<BTreeSet<AffineFunction>> {
    check_lazy_args(tt, t)?;
    let n = tt.var_count();
    let size = 1u32 << n;
    let radius = t - 1;
    let mut points = BTreeSet::new();
    linear_distance_sweep(tt, |mask, d| {
        if d <= radius {
            points.insert(AffineFunction::from_index(n, mask));
        }
        if size - d <= radius {
            points.insert(AffineFunction::from_index(n, size | mask));
        }
        false
    });
    Ok(points)
}

/// Nonlinearity as the search for the least t whose distance-t ideal has a
/// nonempty variety, returning t-1. Non-affine inputs start at t=2.
pub fn nonlinearity(tt: &TruthTable) -> Result<u32> {
    let n = tt.var_count();
    if n > LAZY_MAX_VARS {
        return Err(Error::SizeLimit(format!(
            "ideal-based nonlinearity is capped at n<={LAZY_MAX_VARS}, got n={n}"
        )));
    }
    let mut t = if mobius(tt).is_affine() { 1 } else { 2 };
    loop {
        if variety_witness_lazy(tt, t)?.is_some() {
            return Ok(t - 1);
        }
        t += 1;
    }
}

/// Nonlinearity plus the full closest-affine set: the witnesses of the
/// first nonempty variety are exactly the minimizing tuples.
pub fn closest_affine(tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
    let nl = nonlinearity(tt)?;
    let points = variety_points_lazy(tt, nl + 1)?;
    Ok((nl, points))
}
