//! Nonlinearity of Boolean functions.
//!
//! The central object is an integer "nonlinearity polynomial" in the
//! coefficients a_0..a_n of a generic affine function: its value at every
//! 0/1 coefficient tuple is the Hamming distance from f to that affine
//! function, so the minimum over the 2^(n+1) evaluations is the
//! nonlinearity and the minimizers are the closest affine functions. Both
//! building the coefficients from the truth table and evaluating them
//! everywhere take O(n 2^n) integer additions and doublings.
//!
//! Three more routes to the same number are provided for cross-validation
//! and comparison: the fast Walsh transform, an exhaustive brute-force
//! search, and a search over polynomial ideals whose varieties are the
//! coefficient tuples of affine functions within a given distance. All
//! four sit behind the [`method::NonlinearityMethod`] trait and are picked
//! by name from a [`method::MethodRegistry`].
//!
//! ```
//! use nlpoly::nlp::{NlpCoefficients, OpCounters};
//! use nlpoly::{AnfPolynomial, MethodRegistry};
//!
//! let f = AnfPolynomial::parse("x1*x2+x1*x3+x2+1", 3).unwrap().truth_table();
//!
//! // Pick an algorithm by name; all four agree.
//! let registry = MethodRegistry::standard();
//! for name in ["brute", "fwt", "nlp", "ideal"] {
//!     assert_eq!(registry.get(name).unwrap().nonlinearity(&f).unwrap(), 2);
//! }
//! let (nl, closest) = registry.get("nlp").unwrap().closest_affine(&f).unwrap();
//! assert_eq!(nl, 2);
//! assert_eq!(closest.len(), 4);
//!
//! // Or drive the polynomial directly, with operation counting.
//! let mut counters = OpCounters::default();
//! let coeffs = NlpCoefficients::from_butterfly(&f, &mut counters);
//! let evals = coeffs.evaluate_all(&mut counters);
//! assert_eq!(evals.min_value(), 2);
//! ```

pub mod affine;
pub mod anf;
pub mod bench;
pub mod error;
pub mod ideal;
pub mod method;
pub mod nlp;
pub mod rng;
pub mod symmetric;
pub mod transforms;
pub mod truth_table;

pub use affine::AffineFunction;
pub use anf::AnfPolynomial;
pub use error::{Error, Result};
pub use method::{MethodRegistry, NonlinearityMethod};
pub use nlp::{NlpCoefficients, NlpEvaluations, OpCounters};
pub use rng::SplitMix64;
pub use transforms::{IntegerPolynomial, WalshSpectrum};
pub use truth_table::{BooleanPoint, TruthTable, MAX_VARS};
