//! Algebraic normal form: a Boolean function written as an XOR of
//! square-free monomials in x_1..x_n.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::truth_table::{BooleanPoint, TruthTable, MAX_VARS};

/// Set of square-free monomials over x_1..x_n; the empty monomial is the
/// constant 1, the empty set is the zero polynomial.
///
/// A monomial is stored as a mask in the point-index convention: x_j sits at
/// bit n-j, so a monomial evaluates to 1 at point p exactly when its mask is
/// contained in p.
#[derive(Clone, PartialEq, Eq)]
pub struct AnfPolynomial {
    n: u32,
    monomials: BTreeSet<u32>,
}

impl AnfPolynomial {
    /// The zero polynomial on n variables.
    pub fn zero(n: u32) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        Self {
            n,
            monomials: BTreeSet::new(),
        }
    }

    pub fn from_monomial_masks(n: u32, masks: impl IntoIterator<Item = u32>) -> Self {
        let mut anf = Self::zero(n);
        for m in masks {
            anf.toggle(m);
        }
        anf
    }

    /// XOR-toggles one monomial: adding a monomial twice cancels it.
    pub fn toggle(&mut self, mask: u32) {
        assert!(mask < 1u32 << self.n, "monomial mask out of range");
        if !self.monomials.remove(&mask) {
            self.monomials.insert(mask);
        }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn monomial_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Largest monomial degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.monomials
            .iter()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }

    /// 1-based variable indices of one monomial mask, ascending.
    pub fn monomial_support(&self, mask: u32) -> Vec<u32> {
        (1..=self.n)
            .filter(|j| (mask >> (self.n - j)) & 1 == 1)
            .collect()
    }

    pub fn evaluate(&self, point: BooleanPoint) -> bool {
        assert_eq!(point.var_count(), self.n, "point dimension mismatch");
        let p = point.index();
        self.monomials.iter().filter(|&&m| m & p == m).count() & 1 == 1
    }

    /// Truth table by direct evaluation at every canonical point.
    pub fn truth_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n, |p| self.evaluate(p))
    }

    /// Parses an expression of '+'-separated terms, each term either '1' or
    /// '*'-separated factors `x<i>`. Whitespace is ignored, a repeated
    /// variable inside one term is rejected, repeated terms cancel (XOR).
    /// The single term '0' contributes nothing so that rendered zero
    /// polynomials parse back.
    pub fn parse(expr: &str, n: u32) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&n) {
            return Err(Error::Invalid(format!(
                "variable count {n} out of range 1..={MAX_VARS}"
            )));
        }
        let cleaned: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty ANF expression".into()));
        }
        let mut anf = Self::zero(n);
        for term in cleaned.split('+') {
            match term {
                "" => return Err(Error::Parse("empty term in ANF expression".into())),
                "0" => continue,
                "1" => anf.toggle(0),
                _ => {
                    let mut mask = 0u32;
                    for factor in term.split('*') {
                        let rest = factor.strip_prefix('x').ok_or_else(|| {
                            Error::Parse(format!("expected '1' or 'x<i>' factor, got {factor:?}"))
                        })?;
                        let j: u32 = rest.parse().map_err(|_| {
                            Error::Parse(format!("invalid variable index in {factor:?}"))
                        })?;
                        if j < 1 || j > n {
                            return Err(Error::Parse(format!(
                                "variable x{j} out of range 1..={n}"
                            )));
                        }
                        let bit = 1u32 << (n - j);
                        if mask & bit != 0 {
                            return Err(Error::Parse(format!(
                                "repeated variable x{j} in term {term:?}"
                            )));
                        }
                        mask |= bit;
                    }
                    anf.toggle(mask);
                }
            }
        }
        Ok(anf)
    }
}

impl fmt::Display for AnfPolynomial {
    /// Terms ordered by degree, then by variable indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<Vec<u32>> = self
            .monomials
            .iter()
            .map(|&m| self.monomial_support(m))
            .collect();
        terms.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let rendered: Vec<String> = terms
            .iter()
            .map(|support| {
                if support.is_empty() {
                    "1".to_string()
                } else {
                    support
                        .iter()
                        .map(|j| format!("x{j}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "{}", rendered.join("+"))
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n, self)
    }
}
