//! Exact symbolic checks for generalized complex structures on an elliptic
//! K3 surface with a section: cohomology classes, the twistor family, pure
//! spinors on a flat model and the mirror transformation.

pub mod checks;
pub mod cohomology;
pub mod expr;
pub mod families;
pub mod gcs;
pub mod harmonic;
pub mod linalg;
pub mod mirror;
pub mod properties;
pub mod scalar;
pub mod spinor;
