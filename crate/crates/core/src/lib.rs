//! Exact certification of holomorphic extendability for polynomial boundary
//! data on the unit sphere.
//!
//! Boundary data `f` on the sphere in ℂ² is pulled back to the straight
//! analytic discs through the pole `z_o = (0, 1)`. `f` extends
//! holomorphically to the ball exactly when every moment
//! `∮ τ^N f(D_a(τ)) dτ` vanishes, and a nonzero moment is turned into an
//! explicit obstruction by expanding at the pole and letting `|a| → ∞`.
//! Higher dimensions are handled by slicing along 2-planes through the
//! origin and the pole.

pub mod algebra;
pub mod boundary;
pub mod certifier;
pub mod cli;
pub mod disc;
pub mod error;
pub mod expr;
pub mod moment;
pub mod numeric;
pub mod report;
pub mod slicer;

pub use algebra::{CircPoly, GComplex, ParamPoly};
pub use boundary::{BPoly2, Mono2};
pub use certifier::{certify, Certificate, Witness};
pub use error::{Error, ParseError, Result};
pub use slicer::{certify_nd, BPolyN, SlicePlane};
