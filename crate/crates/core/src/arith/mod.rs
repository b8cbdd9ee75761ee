pub mod cyclo;
pub mod factor;
pub mod ffpoly;
pub mod field;
pub mod numfield;
pub mod poly;
pub mod rat;
pub mod resultant;

pub use cyclo::{cyclotomic_poly, cyclotomic_real_minpoly};
pub use factor::{poly_factor_rationals, rational_roots};
pub use ffpoly::{ff_factor, FFPoly};
pub use field::{FieldElem, Fp};
pub use numfield::{make_number_field, nf_roots, quadratic_field, rationals, Field, NFElement, NFPoly, NumberField};
pub use poly::UniPoly;
pub use rat::Rat;
pub use resultant::resultant;
