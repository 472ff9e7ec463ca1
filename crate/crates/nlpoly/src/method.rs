//! Nonlinearity algorithms behind one trait, registered by name and
//! selected at runtime.
//!
//! Four strategies ship by default: `brute` (enumerate all affine
//! functions), `fwt` (fast Walsh transform), `nlp` (nonlinearity-polynomial
//! butterfly plus fast evaluation), and `ideal` (variety search over the
//! distance ideals). They accept the same inputs and must agree; callers
//! can register their own implementations alongside.

use std::collections::BTreeSet;

use crate::affine::{brute_force_nonlinearity, AffineFunction, BRUTE_FORCE_MAX_VARS};
use crate::error::{Error, Result};
use crate::nlp::{NlpCoefficients, OpCounters};
use crate::truth_table::{TruthTable, MAX_VARS};
use crate::{ideal, nlp, transforms};

/// One interchangeable nonlinearity algorithm.
pub trait NonlinearityMethod: Send + Sync {
    /// Registry key, also the `--method` spelling on the command line.
    fn name(&self) -> &'static str;

    /// One-line description for listings.
    fn summary(&self) -> &'static str;

    /// Largest supported variable count.
    fn max_vars(&self) -> u32;

    /// Nonlinearity of `tt`.
    fn nonlinearity(&self, tt: &TruthTable) -> Result<u32>;

    /// Nonlinearity plus every affine function attaining it.
    fn closest_affine(&self, tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)>;

    /// One instrumented run; methods without integer-operation counters
    /// report zeros.
    fn counted_nonlinearity(&self, tt: &TruthTable) -> Result<(u32, OpCounters)> {
        Ok((self.nonlinearity(tt)?, OpCounters::default()))
    }

    fn check_size(&self, tt: &TruthTable) -> Result<()> {
        let n = tt.var_count();
        if n > self.max_vars() {
            return Err(Error::SizeLimit(format!(
                "method `{}` is capped at n<={}, got n={n}",
                self.name(),
                self.max_vars()
            )));
        }
        Ok(())
    }
}

/// Exhaustive comparison against all 2^(n+1) affine functions.
pub struct BruteForce;

impl NonlinearityMethod for BruteForce {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn summary(&self) -> &'static str {
        "enumerate all affine functions and take the minimum distance"
    }

    fn max_vars(&self) -> u32 {
        BRUTE_FORCE_MAX_VARS
    }

    fn nonlinearity(&self, tt: &TruthTable) -> Result<u32> {
        self.check_size(tt)?;
        Ok(brute_force_nonlinearity(tt)?.0)
    }

    fn closest_affine(&self, tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
        self.check_size(tt)?;
        brute_force_nonlinearity(tt)
    }
}

/// Fast Walsh transform baseline.
pub struct FastWalsh;

impl NonlinearityMethod for FastWalsh {
    fn name(&self) -> &'static str {
        "fwt"
    }

    fn summary(&self) -> &'static str {
        "fast Walsh transform, nonlinearity from the peak spectrum value"
    }

    fn max_vars(&self) -> u32 {
        MAX_VARS
    }

    fn nonlinearity(&self, tt: &TruthTable) -> Result<u32> {
        self.check_size(tt)?;
        Ok(transforms::fwt_nonlinearity(tt))
    }

    fn closest_affine(&self, tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
        self.check_size(tt)?;
        Ok(transforms::fwt_closest_affine(tt))
    }

    fn counted_nonlinearity(&self, tt: &TruthTable) -> Result<(u32, OpCounters)> {
        self.check_size(tt)?;
        let mut counters = OpCounters::default();
        let spectrum = transforms::walsh_spectrum_counted(tt, &mut counters);
        let n = tt.var_count();
        let value = ((1i64 << (n - 1)) - spectrum.max_abs() / 2) as u32;
        Ok((value, counters))
    }
}

/// Nonlinearity polynomial: butterfly coefficients, then fast evaluation
/// over all coefficient tuples.
pub struct NlpMethod;

impl NonlinearityMethod for NlpMethod {
    fn name(&self) -> &'static str {
        "nlp"
    }

    fn summary(&self) -> &'static str {
        "nonlinearity polynomial via butterfly construction and fast evaluation"
    }

    fn max_vars(&self) -> u32 {
        MAX_VARS
    }

    fn nonlinearity(&self, tt: &TruthTable) -> Result<u32> {
        self.check_size(tt)?;
        Ok(nlp::nonlinearity_value(tt))
    }

    fn closest_affine(&self, tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
        self.check_size(tt)?;
        Ok(nlp::nonlinearity(tt))
    }

    /// Counters cover the coefficient construction, the piece with the
    /// pinned n 2^(n-1) sums and n 2^(n-1) + 2^n doublings; the value still
    /// comes from a full construct-and-evaluate run.
    fn counted_nonlinearity(&self, tt: &TruthTable) -> Result<(u32, OpCounters)> {
        self.check_size(tt)?;
        let mut counters = OpCounters::default();
        let coeffs = NlpCoefficients::from_butterfly(tt, &mut counters);
        let mut scratch = OpCounters::default();
        let value = coeffs.evaluate_all(&mut scratch).min_value() as u32;
        Ok((value, counters))
    }
}

/// Variety search over the distance ideals.
pub struct IdealSearch;

impl NonlinearityMethod for IdealSearch {
    fn name(&self) -> &'static str {
        "ideal"
    }

    fn summary(&self) -> &'static str {
        "least t whose distance-t ideal has a nonempty variety"
    }

    fn max_vars(&self) -> u32 {
        16
    }

    fn nonlinearity(&self, tt: &TruthTable) -> Result<u32> {
        self.check_size(tt)?;
        ideal::nonlinearity(tt)
    }

    fn closest_affine(&self, tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
        self.check_size(tt)?;
        ideal::closest_affine(tt)
    }
}

/// Name-indexed collection of nonlinearity methods.
pub struct MethodRegistry {
    methods: Vec<Box<dyn NonlinearityMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        Self {
            methods: Vec::new(),
        }
    }

    /// Registry with the four built-in methods.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(BruteForce));
        reg.register(Box::new(FastWalsh));
        reg.register(Box::new(NlpMethod));
        reg.register(Box::new(IdealSearch));
        reg
    }

    /// Registers a method; a later registration replaces an earlier one
    /// with the same name.
    pub fn register(&mut self, method: Box<dyn NonlinearityMethod>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn NonlinearityMethod> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string(), self.names().join(", ")))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn NonlinearityMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn standard_registry_lists_all_methods() {
        let reg = MethodRegistry::standard();
        assert_eq!(reg.names(), vec!["brute", "fwt", "nlp", "ideal"]);
        assert!(reg.get("nlp").is_ok());
        assert!(matches!(reg.get("magic"), Err(Error::UnknownMethod(_, _))));
    }

    #[test]
    fn registration_by_name_replaces() {
        struct Fake;
        impl NonlinearityMethod for Fake {
            fn name(&self) -> &'static str {
                "fwt"
            }
            fn summary(&self) -> &'static str {
                "always zero"
            }
            fn max_vars(&self) -> u32 {
                4
            }
            fn nonlinearity(&self, _tt: &TruthTable) -> Result<u32> {
                Ok(0)
            }
            fn closest_affine(&self, _tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
                Ok((0, BTreeSet::new()))
            }
        }
        let mut reg = MethodRegistry::standard();
        reg.register(Box::new(Fake));
        assert_eq!(reg.get("fwt").unwrap().max_vars(), 4);
        assert_eq!(reg.names().len(), 4);
    }

    #[test]
    fn all_methods_agree_on_random_functions() {
        let reg = MethodRegistry::standard();
        let mut rng = SplitMix64::new(47);
        for n in 1..=7u32 {
            for _ in 0..10 {
                let tt = TruthTable::random(&mut rng, n);
                let reference = reg.get("brute").unwrap().closest_affine(&tt).unwrap();
                for m in reg.iter() {
                    assert_eq!(
                        m.closest_affine(&tt).unwrap(),
                        reference,
                        "method {} disagrees at n={n}",
                        m.name()
                    );
                    assert_eq!(m.nonlinearity(&tt).unwrap(), reference.0);
                }
            }
        }
    }

    #[test]
    fn size_guards_reported_per_method() {
        let reg = MethodRegistry::standard();
        let tt = TruthTable::zero(17);
        assert!(matches!(
            reg.get("brute").unwrap().nonlinearity(&tt),
            Err(Error::SizeLimit(_))
        ));
        assert!(matches!(
            reg.get("ideal").unwrap().nonlinearity(&tt),
            Err(Error::SizeLimit(_))
        ));
        assert!(reg.get("fwt").unwrap().nonlinearity(&tt).is_ok());
    }
}
