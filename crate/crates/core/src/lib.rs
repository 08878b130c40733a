//! Exact symbolic computations on the quantum hyperboloid: the quantized
//! function algebra A = C_q[sl(2)^*]/<C - c>, its U_q(sl(2)) symmetry, the
//! braided Lie bracket, the tangent module, the invariant metric and the
//! Levi-Civita connection.

pub mod algebra;
pub mod braided_lie;
pub mod error;
pub mod expr;
pub mod geometry;
pub mod linalg;
pub mod qrat;
pub mod report;
pub mod suite;
pub mod tangent;
pub mod uqsl2;

pub use error::{Error, Result};
pub use qrat::{Params, Poly, RatFunc};
