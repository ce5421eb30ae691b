//! Irreducible cyclic codes over finite fields.
//!
//! * [`gf`]: table-backed finite fields and relative traces.
//! * [`cyclotomy`]: cyclotomic classes, Gaussian periods, period polynomials.
//! * [`codes`]: the codes `C(r, N)` and brute-force weight distributions.
//! * [`analytic`]: closed-form weight enumerators and period polynomials for
//!   `N = 5, 6, 7, 8`, plus the Diophantine data they need.
//! * [`verify`]: cross-checks of the closed forms against enumeration.

pub mod analytic;
pub mod arith;
pub mod codes;
pub mod cyclotomy;
pub mod error;
pub mod gf;
pub mod par;
pub mod poly;
pub mod ser;
pub mod verify;

pub use codes::{brute_weight_distribution, build_code, CodeParams, CodeSpec, Strategy, WeightDistribution};
pub use error::{Error, Result};
pub use gf::{build_field, Element, FieldTable};
pub use par::Exec;
