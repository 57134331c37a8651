//! Binary cubic forms, their invariant lattices and the associated
//! Shintani zeta function coefficients.

pub mod analytic;
pub mod enumerate;
pub mod error;
pub mod forms;
pub mod golden;
pub mod lattice_class;
pub mod oracle;
pub mod qrt3;
pub mod reduction;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use forms::{CubicForm, LatticeId, QuadraticForm, Sign, UnimodularMatrix};
