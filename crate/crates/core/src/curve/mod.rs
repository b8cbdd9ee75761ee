pub mod count;
pub mod divpoly;
pub mod model;
pub mod point;

pub use count::{count_extension, reduce_and_count};
pub use divpoly::{division_polynomial, DivPolys, DivisionPolynomial};
pub use model::{EllipticCurveQ, GroupShape};
pub use point::{point_mul, CurveOver, CurvePoint};
