//! Exact-arithmetic engine for finite symplectic group actions on abelian
//! fourfolds and the invariants of their terminalized quotients.
//!
//! The crate models a complex torus `A = C^2 / Lambda` together with a finite
//! group `G` of symplectic affine automorphisms whose linear parts preserve
//! `Lambda`.  Such a `G` acts on the generalized Kummer fourfold `K_2(A)` or
//! sixfold `K_3(A)`, and the quotient admits a terminalization `Y` whose
//! numerical invariants (second Betti number, fundamental group of the regular
//! locus, singularity census, Euler characteristic and Chern numbers) are all
//! computable by exact integer and rational arithmetic.  Everything in this
//! crate is deterministic and exact: no floating point is used anywhere.
//!
//! Organization:
//!
//! * [`algebra`] — generic dense matrices, Smith normal form, torsion-point
//!   congruence solving, and the cyclotomic field `Q(zeta_12)` used as the
//!   coefficient field for complexified tangent actions.
//! * [`models`] — the four concrete torus models (square of the Gaussian
//!   elliptic curve in two bases, square of the hexagonal curve, and the
//!   quaternionic torus `H / Gamma` for the Hurwitz order `Gamma`), each with
//!   validated integer/complex generator pairs.
//! * [`group`] — affine group elements, group closure, abstract multiplication
//!   tables, fingerprints, isomorphism testing, a catalogue of named small
//!   groups, permutation groups, and subgroup enumeration.
//! * [`invariants`] — counts of qualifying involution and order-three classes,
//!   the rank of the invariant lattice, `b_2`, and the fundamental group of
//!   the regular locus.
//! * [`fixed_loci`] — fixed surfaces and isolated fixed points of every group
//!   element on `K_2(A)`, with incidence between points and fixed surfaces.
//! * [`singularities`] — the singularity census `(a_2, a_3, a_4)` of the
//!   terminalization for `n = 2`, the census `(a_2, s_2)` for `n = 3`, and the
//!   smoothness gate.
//! * [`topology`] — Betti numbers, Euler characteristic and Chern numbers.
//! * [`hilb2`] — the analogous second-cohomology invariants for induced
//!   actions on Hilbert squares of K3 surfaces, driven by a permutation-group
//!   fixture.
//! * [`catalog`] — the built-in catalogue of group actions together with the
//!   expected value tables used by `verify`.
//! * [`report`] — deterministic rendering of result tables (markdown, CSV,
//!   JSON).

pub mod algebra;
pub mod models;
pub mod group;
pub mod invariants;
pub mod fixed_loci;
pub mod singularities;
pub mod topology;
pub mod hilb2;
pub mod catalog;
pub mod report;

/// Exact arbitrary-precision integer scalar used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Integer matrix (entries in `Z`).
pub type IMat = algebra::matrix::Matrix<Int>;

/// Rational matrix (entries in `Q`).
pub type QMat = algebra::matrix::Matrix<Rat>;

/// Matrix over the cyclotomic field `Q(zeta_12)`.
pub type CMat = algebra::matrix::Matrix<algebra::cyclotomic::CycNumber>;

/// Convenience constructor for an `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Convenience constructor for a `Rat` from a pair of machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Environment variable consulted as a hard cap on group closure sizes.
pub const SIZE_CAP_ENV: &str = "TERMINVAR_SIZE_CAP";

/// Default cap on the number of elements a group closure may reach.
pub const DEFAULT_SIZE_CAP: usize = 100_000;

/// The effective group-size cap: `TERMINVAR_SIZE_CAP` if set and parseable,
/// otherwise [`DEFAULT_SIZE_CAP`].
pub fn size_cap() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// Errors shared across the engine.
#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    /// A group closure exceeded the configured size cap.
    #[error("group closure exceeded the size cap of {cap} elements")]
    SizeCapExceeded {
        /// The cap that was in force.
        cap: usize,
    },
    /// An input specification was malformed: an unknown model, symbol,
    /// catalogue id or table name, or an ill-formed action description.
    #[error("invalid specification: {0}")]
    BadSpec(String),
    /// A singular-point local model had no entry in the transfer table.
    #[error("unclassified local model: {0}")]
    UnknownLocalModel(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, EngineError>;
