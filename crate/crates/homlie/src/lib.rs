//! Exact-arithmetic toolkit for regular Hom-Lie structures on incidence
//! algebras of finite posets.
//!
//! The crate builds the incidence algebra `I(X, K)` of a finite connected
//! poset `X` over an exact field `K` (the rationals or a prime field),
//! represents linear endomorphisms of the algebra, and provides two
//! independent routes to the question *"is this endomorphism a regular
//! Hom-Lie structure?"*:
//!
//! * a brute-force check of the Hom-Jacobi identity over all basis triples
//!   ([`LinearEndo::is_hom_lie_structure`]), and
//! * a direct decision procedure that recognizes the normal form
//!   `inner ∘ multiplicative + central` and recovers its parameters
//!   ([`decide_regular_homlie`]).
//!
//! The two routes are cross-validated against each other on randomized
//! inputs; [`cross_validate`] packages that comparison.
//!
//! Modules:
//!
//! * [`scalar`] — exact field elements over `Q` or `GF(p)`.
//! * [`poset`] — finite posets from cover relations, interval lengths,
//!   maximal chains, and enumeration of small connected posets.
//! * [`incidence`] — the incidence algebra, its elements, unit inversion,
//!   and the radical filtration.
//! * [`endo`] — dense linear endomorphisms, Lie-automorphism and
//!   Hom-Jacobi checks.
//! * [`structures`] — scaling tables, Hom-Lie parameter triples, the
//!   structure builder, and the parameter group operations.
//! * [`decide`] — the decision procedure and the cross-validation oracle.
//! * [`sampling`] — seeded random generators for units, scaling tables,
//!   parameters, and Lie automorphisms.

pub mod decide;
pub mod endo;
pub mod incidence;
pub mod poset;
pub mod sampling;
pub mod scalar;
pub mod structures;

pub use decide::{
    cross_validate, decide_regular_homlie, structure_parameter_count, DecideError, Decision,
    LieAutoWitness, RejectReason,
};
pub use endo::{EndoError, LinearEndo};
pub use incidence::{AlgebraError, IncidenceAlgebra, IncidenceElement};
pub use poset::{Poset, PosetError};
pub use scalar::{Field, Scalar, ScalarError};
pub use structures::{
    central_map, free_sigma_support, inner_automorphism, HomLieParams, ParamsError, SigmaTable,
};

/// Errors produced when parsing the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number of the offending line.
    pub line: usize,
    /// Human-readable description of the problem.
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
