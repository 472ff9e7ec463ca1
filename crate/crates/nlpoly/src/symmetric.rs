//! Elementary symmetric polynomials over prime fields and the two
//! generator families whose common zeros are the Hamming balls of (F_q)^s:
//! the tail of elementary symmetric functions, and the degree-t square-free
//! monomials. Both varieties are computed by exact enumeration.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::square_free_monomials;

/// A vector over the prime field F_q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FqVector {
    q: u32,
    entries: Vec<u32>,
}

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FqVector {
    pub fn new(q: u32, entries: Vec<u32>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::Invalid(format!("modulus {q} is not prime")));
        }
        if entries.is_empty() {
            return Err(Error::Invalid("vector length must be >= 1".into()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= q) {
            return Err(Error::Invalid(format!("entry {bad} not reduced mod {q}")));
        }
        Ok(Self { q, entries })
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().filter(|&&e| e != 0).count() as u32
    }
}

impl fmt::Display for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// All coefficients of prod_j (1 + v_j z) mod q up to degree `up_to`;
/// entry i is the elementary symmetric function sigma_i at v (entry 0 = 1).
fn sigma_prefix(v: &FqVector, up_to: usize) -> Vec<u64> {
    let q = u64::from(v.q);
    let mut coeffs = vec![0u64; up_to + 1];
    coeffs[0] = 1;
    for &e in &v.entries {
        let e = u64::from(e);
        for d in (1..=up_to).rev() {
            coeffs[d] = (coeffs[d] + coeffs[d - 1] * e) % q;
        }
    }
    coeffs
}

/// sigma_i(v) mod q via the product recurrence, 1 <= i <= s.
pub fn elementary_symmetric_eval(i: u32, v: &FqVector) -> Result<u32> {
    if i < 1 || i as usize > v.len() {
        return Err(Error::Invalid(format!(
            "sigma index must satisfy 1 <= i <= {}, got {i}",
            v.len()
        )));
    }
    Ok(sigma_prefix(v, i as usize)[i as usize] as u32)
}

const ENUMERATION_CAP: u64 = 10_000_000;

fn check_enumeration(s: u32, q: u32) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::Invalid(format!("modulus {q} is not prime")));
    }
    if s < 1 {
        return Err(Error::Invalid("vector length must be >= 1".into()));
    }
    let mut points = 1u64;
    for _ in 0..s {
        points = points.saturating_mul(u64::from(q));
        if points > ENUMERATION_CAP {
            return Err(Error::SizeLimit(format!(
                "q^s = {q}^{s} exceeds the enumeration cap of {ENUMERATION_CAP}"
            )));
        }
    }
    Ok(())
}

fn enumerate_fq(s: u32, q: u32, mut keep: impl FnMut(&FqVector) -> bool) -> BTreeSet<FqVector> {
    let mut out = BTreeSet::new();
    let mut entries = vec![0u32; s as usize];
    loop {
        let v = FqVector {
            q,
            entries: entries.clone(),
        };
        if keep(&v) {
            out.insert(v);
        }
        // Odometer increment, last entry fastest.
        let mut i = s as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            entries[i] += 1;
            if entries[i] < q {
                break;
            }
            entries[i] = 0;
        }
    }
}

/// Common zeros of sigma_t, ..., sigma_s over (F_q)^s; t = s+1 imposes no
/// constraint beyond the field equations and yields every point.
pub fn symmetric_variety(s: u32, t: u32, q: u32) -> Result<BTreeSet<FqVector>> {
    check_enumeration(s, q)?;
    if t < 1 || t > s + 1 {
        return Err(Error::Invalid(format!(
            "need 1 <= t <= s+1, got t={t} for s={s}"
        )));
    }
    Ok(enumerate_fq(s, q, |v| {
        let sigma = sigma_prefix(v, s as usize);
        (t..=s).all(|i| sigma[i as usize] == 0)
    }))
}

/// Common zeros of every degree-t square-free monomial over (F_q)^s,
/// checked by evaluating the monomials themselves (early exit on the first
/// nonzero product).
pub fn monomial_variety(s: u32, t: u32, q: u32) -> Result<BTreeSet<FqVector>> {
    check_enumeration(s, q)?;
    if t < 1 || t > s {
        return Err(Error::Invalid(format!(
            "need 1 <= t <= s, got t={t} for s={s}"
        )));
    }
    Ok(enumerate_fq(s, q, |v| {
        for mono in square_free_monomials(s, t).expect("range checked") {
            let mut product = 1u64;
            for k in mono.indices() {
                product = product * u64::from(v.entries[k as usize - 1]) % u64::from(q);
            }
            if product != 0 {
                return false;
            }
        }
        true
    }))
}

/// The Hamming ball Q_w: all vectors of weight at most w.
pub fn weight_ball(s: u32, w: u32, q: u32) -> Result<BTreeSet<FqVector>> {
    check_enumeration(s, q)?;
    Ok(enumerate_fq(s, q, |v| v.weight() <= w))
}
