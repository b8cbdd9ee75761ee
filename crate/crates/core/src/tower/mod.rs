//! Finite levels of Z_p-extensions of quadratic fields and the arithmetic
//! predicates the classifier asks of them.

pub mod fingerprint;
pub mod level;
pub mod predicates;
pub mod spec;

pub use fingerprint::FieldFingerprint;
pub use level::{compositum_with_quadratic, cyclotomic_p_subfield, quadratic_base, tower_level};
pub use predicates::{admits_subfield, admits_subfield_with, contains_mu, global_torsion_bound, max_mu, Admits, GlobalBound};
pub use spec::{TowerKind, TowerSpec};
