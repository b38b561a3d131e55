//! Finite bounded lattices, t-norms and t-conorms on their sub-intervals,
//! piecewise uninorm constructions, exhaustive axiom checking with witness
//! extraction, and sweep machinery that verifies the structural
//! characterizations of those constructions over all small lattices.

pub mod axioms;
pub mod conditions;
pub mod construct;
pub mod enumerate;
pub mod lattice;
pub mod norms;
pub mod sweep;

#[cfg(feature = "parallel")]
pub use axioms::check_axiom_par;
pub use axioms::{check_axiom, check_axiom_seq, is_uninorm, AxiomCheckError, UninormReport};
pub use conditions::{
    ie_incomp_condition, join_closure_condition, meet_closure_condition, norm_on_ie01_condition,
    p_annihilation_condition, p_set, CondWitness, ConditionError, ConditionId, ConditionResult,
};
pub use construct::{
    construct, evaluate, matching_cases, spec_for, Case, ConflictReport, ConstructError,
    ConstructionKind, PiecewiseSpec, Reg, ValueRule,
};
pub use enumerate::{
    canonical_form, enumerate_bounded_lattices, CanonicalForm, EnumerateError, ENUMERATION_CAP,
};
pub use lattice::{
    build_poset, validate_bounded_lattice, BoundedLattice, CoordClass, Elem, LatticeError, Poset,
    RegionPair,
};
pub use norms::{
    canonical_tconorm_join, canonical_tnorm_meet, check_axioms_on, check_norm_axioms,
    drastic_tconorm, drastic_tnorm, enumerate_norms, enumerate_norms_with_cap, replay_witness,
    Axiom, AxiomWitness, NormError, NormRole, OpTable, DEFAULT_DOMAIN_CAP,
};
pub use sweep::{
    search_counterexample, sweep, verify_characterization, BranchCounters, CaseRecord,
    CounterexampleOutcome, SweepError, SweepReport, TheoremId,
};
