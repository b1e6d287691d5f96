//! Exact computations in non-archimedean dynamics.
//!
//! The crate works over three valued fields (p-adic rationals, totally
//! ramified radical extensions of them, and rational functions with the
//! t-adic valuation) and never uses floating point in a computation. All
//! logarithms are exact rationals in log-units: `log|x| = -v(x)` where the
//! valuation is normalized by `v(p) = 1` (resp. `v(t) = 1`).
//!
//! * [`exactval`]: valued scalars and their residues.
//! * [`polynewt`]: polynomials, Newton polygons, ball degree and image radius,
//!   resultants.
//! * [`berkpoly`]: ball points, diameter, hyperbolic metric, spherical
//!   derivative, wildness function and exact profiles along segments.
//! * [`greenlyap`]: Green functions, the Lyapunov exponent of a polynomial via
//!   critical escape rates, fixed-point reports and the t-adic family test.
//! * [`bernoulli`]: the affine Bernoulli interval model with its measures,
//!   entropies and periodic points.
//! * [`cli`]: the command-line front end used by the `nadyn` binary.

pub mod berkpoly;
pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exactval;
pub mod greenlyap;
pub mod parse;
pub mod polynewt;
pub mod rat;
pub mod report;

pub use error::{Error, Result};
pub use exactval::{FieldDesc, Scalar, Valuation};
pub use polynewt::Poly;
pub use rat::Q;
