//! Exact construction of the polynomial solutions of the generalized
//! hypergeometric equation, finite Romanovski polynomials, and the bound
//! states of the hyperbolic Scarf potential.
//!
//! Every symbolic object is built in exact rational arithmetic. Floating point
//! only enters through the numerical oracles: quadrature, the finite-difference
//! eigensolver and the associated-Legendre recurrence.
//!
//! ```
//! use scarf_core::{romanovski, RomanovskiParams, Rational};
//!
//! let params = RomanovskiParams::new(Rational::new(5.into(), 2.into()), Rational::from_integer(0.into())).unwrap();
//! let r2 = romanovski::romanovski(&params, 2);
//! assert_eq!(r2.poly.to_string(), "-1 + 2*x^2");
//! ```

pub mod error;
pub mod fdoracle;
pub mod hypergeq;
pub mod noncentral;
pub mod polycore;
pub mod quadrature;
pub mod romanovski;
pub mod scarf;

pub use error::{Error, Result};
pub use fdoracle::{FdGrid, SpectrumReport};
pub use hypergeq::{CanonicalFamily, ClosedWeight, FamilyTag, HypergeqParams};
pub use noncentral::{AngularProblem, Strategy, Su11Labels};
pub use polycore::{ExactPoly, GaussianRational, QArctanForm, Rational};
pub use quadrature::{GramMatrix, QuadratureSpec, Rule, Transform};
pub use romanovski::{RomanovskiParams, RomanovskiPoly};
pub use scarf::{EnergyLevel, ScarfParams, WaveFunction};
