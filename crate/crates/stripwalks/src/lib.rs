//! Exact enumeration of directed walks confined to a horizontal strip.
//!
//! The library computes, by several independent routes, the generating
//! functions of walks with steps (1,±1) and (p,±2) (and the Dyck-step
//! baseline) that start and end on the floor of the strip 0 ≤ y ≤ w, and
//! cross-checks every route against a brute-force counting oracle:
//!
//! * [`poly`] / [`rational`] — exact big-integer polynomial and rational
//!   arithmetic in `t`, where `t² = z` and each step weighs `t^dx`.
//! * [`strip`] — the functional-equation system iterated width by width;
//!   the ground-truth symbolic path.
//! * [`recurrence`] — the closed recurrences: a fifth-order nonlinear
//!   relation in the width, its generalized-step variant, and linear
//!   recurrences for the numerator/denominator families.
//! * [`oracle`] — dynamic-programming walk counts, no polynomials involved.
//! * [`series`] — expansion of rational functions into coefficient
//!   prefixes, comparison helpers, and the stabilized (width-independent)
//!   sequences.
//! * [`report`] — the shared shape of verification reports.
//!
//! All values are immutable after construction and every operation is pure,
//! so anything here can be shared or sent across threads freely.

pub mod oracle;
pub mod poly;
pub mod rational;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod strip;

pub use oracle::{count_irreducible, count_walks, verify_decompositions, OracleError, WalkModel};
pub use poly::{IntPoly, Parity, PolyError, Var};
pub use rational::{RationalError, RationalGF};
pub use recurrence::{
    basketball_denominators, basketball_gf_linear, generalized_step, generalized_weights,
    nonlinear_step, soccer_linear, verify_initial_table, verify_linear_agreement,
    verify_linear_agreement_with, verify_recurrence_identity, verify_soccer_agreement,
    DenomSequence, RecurrenceKind, SequenceOrigin,
};
pub use report::{all_ok, to_json_report, CheckResult};
pub use series::{
    compare, expand, stabilized_series, CompareOutcome, ExpansionRequest, SeriesError, SeriesVec,
};
pub use strip::{
    g_closed_form, soccer_chain, soccer_continued_fraction, soccer_step, verify_structure,
    StripError, StripState, StripSystem,
};
