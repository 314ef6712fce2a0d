//! Verma modules: weight spaces, characters, singular and subsingular
//! vectors, quotients, and structure classification.

pub mod character;
pub mod classify;
pub mod quotient;
pub mod scan;
pub mod singular;

pub use crate::pbw::weight_space_basis;
pub use character::{characters, CharacterSeries, Characters};
pub use classify::{classify, irreducible_quotient, StructureReport, Verdict};
pub use quotient::Quotient;
pub use scan::{conjecture_scan, scan_point, ScanReport, ScanRow};
pub use singular::{
    basis_l, basis_lprime, hv_singular, jprime_span, necessary_h, singular_space, subsingular,
    subsingular_r1_recursive, u_prime, zd_find_p, HvCase,
};
