//! Exact linear algebra: generic dense matrices, Smith normal form,
//! torsion-point arithmetic, and the cyclotomic field `Q(zeta_12)`.

pub mod cyclotomic;
pub mod matrix;
pub mod snf;
pub mod torsion;
