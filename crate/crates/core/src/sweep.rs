//! Exhaustive verification of the characterization theorems: for every small
//! lattice, neutral element, and sub-operation, the structural predicate's
//! verdict is compared against the brute-force axiom check of the
//! corresponding construction. Also hosts the counterexample search used
//! against the legacy definitions.

use thiserror::Error;

use crate::axioms::{check_axiom, is_uninorm};
use crate::conditions::{
    ie_incomp_condition, join_closure_condition, meet_closure_condition, p_annihilation_condition,
    p_set,
};
use crate::construct::{construct, ConflictReport, ConstructError, ConstructionKind};
use crate::enumerate::{canonical_form, enumerate_bounded_lattices, EnumerateError};
use crate::lattice::{BoundedLattice, Elem};
use crate::norms::{
    canonical_tconorm_join, canonical_tnorm_meet, check_norm_axioms, drastic_tconorm,
    drastic_tnorm, enumerate_norms, Axiom, AxiomWitness, NormError, NormRole, OpTable,
};

/// One characterization theorem: a construction kind paired with the
/// structural predicate claimed equivalent to "the construction is a
/// uninorm".
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TheoremId {
    UTChar,
    USChar,
    UtChar,
    UsChar,
    UTeChar,
    USeChar,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::UTChar,
        TheoremId::USChar,
        TheoremId::UtChar,
        TheoremId::UsChar,
        TheoremId::UTeChar,
        TheoremId::USeChar,
    ];

    pub fn kind(self) -> ConstructionKind {
        match self {
            TheoremId::UTChar => ConstructionKind::UT,
            TheoremId::USChar => ConstructionKind::USCorrected,
            TheoremId::UtChar => ConstructionKind::UtCorrected,
            TheoremId::UsChar => ConstructionKind::UsCorrected,
            TheoremId::UTeChar => ConstructionKind::UTe,
            TheoremId::USeChar => ConstructionKind::USe,
        }
    }

    pub fn role(self) -> NormRole {
        self.kind().role()
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::UTChar => "UT_char",
            TheoremId::USChar => "US_char",
            TheoremId::UtChar => "Ut_char",
            TheoremId::UsChar => "Us_char",
            TheoremId::UTeChar => "UTe_char",
            TheoremId::USeChar => "USe_char",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// How many verified cases exercised each predicate branch. Distinguishes
/// vacuous passes (no incomparable elements) from substantive ones.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct BranchCounters {
    /// `I_e` was empty, the predicate held vacuously
    pub vacuous: u64,
    /// some meet of incomparables hit bottom
    pub meet_zero: u64,
    /// some meet of incomparables stayed incomparable with `e`
    pub meet_in_ie: u64,
    /// some join of incomparables hit top
    pub join_one: u64,
    /// some join of incomparables stayed incomparable with `e`
    pub join_in_ie: u64,
    /// the annihilation premise held because `P` was empty
    pub p_empty: u64,
    /// `P` was nonempty and the t-norm annihilated it
    pub p_annihilated: u64,
}

impl BranchCounters {
    pub fn merge(&mut self, other: &BranchCounters) {
        self.vacuous += other.vacuous;
        self.meet_zero += other.meet_zero;
        self.meet_in_ie += other.meet_in_ie;
        self.join_one += other.join_one;
        self.join_in_ie += other.join_in_ie;
        self.p_empty += other.p_empty;
        self.p_annihilated += other.p_annihilated;
    }

    /// True when every branch fired at least once.
    pub fn all_fired(&self) -> bool {
        self.vacuous > 0
            && self.meet_zero > 0
            && self.meet_in_ie > 0
            && self.join_one > 0
            && self.join_in_ie > 0
            && self.p_empty > 0
            && self.p_annihilated > 0
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SweepError {
    #[error(transparent)]
    Enumeration(#[from] EnumerateError),
    #[error("neutral element must lie strictly between bottom and top")]
    BadNeutral,
    #[error("sub-operation domain does not match the theorem's required interval")]
    RoleMismatch,
    #[error("sub-operation violates the axioms of its required role")]
    SubOpInvalid,
}

/// One verified case. `witness` is the first brute-force axiom violation
/// when the construction is not a uninorm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub certificate: String,
    pub e_label: String,
    pub subop_hash: u64,
    pub theorem: TheoremId,
    pub predicted: bool,
    pub observed: bool,
    pub witness: Option<AxiomWitness>,
    /// the sub-op pool was representatives only (interval above the
    /// enumeration cap), not the full enumeration
    pub representative_only: bool,
}

impl CaseRecord {
    pub fn consistent(&self) -> bool {
        self.predicted == self.observed
    }

    /// Tab-separated archival line: certificate, neutral element, sub-op
    /// hash, theorem, both verdicts, plus a marker for representative-only
    /// sub-op pools.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{}\t{}\t{:016x}\t{}\t{}\t{}",
            self.certificate,
            self.e_label,
            self.subop_hash,
            self.theorem,
            self.predicted,
            self.observed
        );
        if self.representative_only {
            s.push_str("\trepresentative-only");
        }
        s
    }
}

/// Aggregate outcome of a [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub lattices_checked: usize,
    pub cases_checked: usize,
    pub inconsistencies: Vec<CaseRecord>,
    pub branches: BranchCounters,
    pub cases: Vec<CaseRecord>,
}

impl SweepReport {
    pub fn lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&c.line());
            out.push('\n');
        }
        out
    }
}

fn cert_hex(lattice: &BoundedLattice) -> String {
    canonical_form(lattice)
        .0
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Evaluates the theorem's structural predicate, recording which branch of
/// its clause fired (at most once per call and branch).
fn predict(
    lattice: &BoundedLattice,
    e: Elem,
    thm: TheoremId,
    sub_op: &OpTable,
    c: &mut BranchCounters,
) -> bool {
    let ie = lattice.incomparables(e);
    let mark_meet_branches = |c: &mut BranchCounters| {
        let (mut zero, mut in_ie) = (false, false);
        for &y in &ie {
            for &z in &ie {
                let m = lattice.meet(y, z);
                if m == lattice.bottom() {
                    zero = true;
                } else if lattice.incomp(m, e) {
                    in_ie = true;
                }
            }
        }
        c.meet_zero += zero as u64;
        c.meet_in_ie += in_ie as u64;
    };
    match thm {
        TheoremId::UTChar | TheoremId::UtChar => {
            if ie.is_empty() {
                c.vacuous += 1;
            } else {
                let (mut one, mut in_ie) = (false, false);
                for &y in &ie {
                    for &z in &ie {
                        let j = lattice.join(y, z);
                        if j == lattice.top() {
                            one = true;
                        } else if lattice.incomp(j, e) {
                            in_ie = true;
                        }
                    }
                }
                c.join_one += one as u64;
                c.join_in_ie += in_ie as u64;
            }
            join_closure_condition(lattice, e).unwrap().holds
        }
        TheoremId::USChar | TheoremId::UsChar => {
            if ie.is_empty() {
                c.vacuous += 1;
            } else {
                mark_meet_branches(c);
            }
            meet_closure_condition(lattice, e).unwrap().holds
        }
        TheoremId::UTeChar => {
            if ie.is_empty() {
                c.vacuous += 1;
            } else {
                mark_meet_branches(c);
            }
            let annihilates = p_annihilation_condition(lattice, e, sub_op).unwrap().holds;
            if p_set(lattice, e).unwrap().is_empty() {
                c.p_empty += 1;
            } else if annihilates {
                c.p_annihilated += 1;
            }
            annihilates && meet_closure_condition(lattice, e).unwrap().holds
        }
        TheoremId::USeChar => {
            if ie.is_empty() {
                c.vacuous += 1;
            }
            ie_incomp_condition(lattice, e).unwrap().holds
        }
    }
}

fn verify_with_cert(
    lattice: &BoundedLattice,
    certificate: &str,
    e: Elem,
    thm: TheoremId,
    sub_op: &OpTable,
    representative_only: bool,
) -> Result<(CaseRecord, BranchCounters), SweepError> {
    if e == lattice.bottom() || e == lattice.top() {
        return Err(SweepError::BadNeutral);
    }
    match check_norm_axioms(lattice, sub_op, thm.role(), e) {
        Err(NormError::DomainMismatch) => return Err(SweepError::RoleMismatch),
        Err(_) => return Err(SweepError::BadNeutral),
        Ok(ws) if !ws.is_empty() => return Err(SweepError::SubOpInvalid),
        Ok(_) => {}
    }
    let mut branches = BranchCounters::default();
    let predicted = predict(lattice, e, thm, sub_op, &mut branches);
    let (observed, witness) = match construct(lattice, e, thm.kind(), sub_op) {
        Ok(u) => {
            let report = is_uninorm(lattice, &u, e);
            let witness = report.witnesses().next().cloned();
            (report.is_uninorm, witness)
        }
        Err(ConstructError::Conflicts(_)) => (false, None),
        Err(ConstructError::SubOpDomainMismatch) => return Err(SweepError::RoleMismatch),
        Err(ConstructError::SubOpInvalid { .. }) => return Err(SweepError::SubOpInvalid),
        Err(ConstructError::BadNeutral) | Err(ConstructError::ConflictAt(..)) => {
            return Err(SweepError::BadNeutral)
        }
    };
    let record = CaseRecord {
        certificate: certificate.to_string(),
        e_label: lattice.label(e).to_string(),
        subop_hash: sub_op.content_hash(),
        theorem: thm,
        predicted,
        observed,
        witness,
        representative_only,
    };
    Ok((record, branches))
}

/// Verifies one characterization case: structural predicate vs brute-force
/// uninorm status of the constructed table.
pub fn verify_characterization(
    lattice: &BoundedLattice,
    e: Elem,
    thm: TheoremId,
    sub_op: &OpTable,
) -> Result<CaseRecord, SweepError> {
    let cert = cert_hex(lattice);
    verify_with_cert(lattice, &cert, e, thm, sub_op, false).map(|(record, _)| record)
}

/// All sub-ops of the role on the relevant interval: the full enumeration
/// when the interval is within the cap, otherwise the canonical and drastic
/// representatives (flagged).
fn sub_op_pool(lattice: &BoundedLattice, e: Elem, role: NormRole) -> (Vec<OpTable>, bool) {
    match enumerate_norms(lattice, e, role) {
        Ok(v) => (v, false),
        Err(NormError::DomainTooLarge { .. }) => {
            let (a, b) = match role {
                NormRole::TNorm => (
                    canonical_tnorm_meet(lattice, e).unwrap(),
                    drastic_tnorm(lattice, e).unwrap(),
                ),
                NormRole::TConorm => (
                    canonical_tconorm_join(lattice, e).unwrap(),
                    drastic_tconorm(lattice, e).unwrap(),
                ),
            };
            let mut pool = vec![a];
            if !pool.contains(&b) {
                pool.push(b);
            }
            (pool, true)
        }
        Err(err) => panic!("interior neutral element expected: {err}"),
    }
}

fn interior_elems(lattice: &BoundedLattice) -> Vec<Elem> {
    lattice
        .linear_ext()
        .into_iter()
        .filter(|&x| x != lattice.bottom() && x != lattice.top())
        .collect()
}

/// Runs every characterization case over every lattice of size 1 to
/// `n_max`, every interior neutral element, and every sub-op in the pool.
/// The report is deterministic and identical with and without workers.
pub fn sweep(n_max: usize, theorems: &[TheoremId]) -> Result<SweepReport, SweepError> {
    let mut lattices = Vec::new();
    for n in 1..=n_max {
        lattices.extend(enumerate_bounded_lattices(n)?);
    }
    struct Job {
        lattice_idx: usize,
        certificate: String,
        e: Elem,
        theorem: TheoremId,
        sub_op: OpTable,
        representative_only: bool,
    }
    let mut jobs = Vec::new();
    for (li, lattice) in lattices.iter().enumerate() {
        let certificate = cert_hex(lattice);
        for e in interior_elems(lattice) {
            for role in [NormRole::TNorm, NormRole::TConorm] {
                if !theorems.iter().any(|t| t.role() == role) {
                    continue;
                }
                let (pool, representative_only) = sub_op_pool(lattice, e, role);
                for &thm in theorems.iter().filter(|t| t.role() == role) {
                    for sub_op in &pool {
                        jobs.push(Job {
                            lattice_idx: li,
                            certificate: certificate.clone(),
                            e,
                            theorem: thm,
                            sub_op: sub_op.clone(),
                            representative_only,
                        });
                    }
                }
            }
        }
    }

    let run = |job: &Job| {
        verify_with_cert(
            &lattices[job.lattice_idx],
            &job.certificate,
            job.e,
            job.theorem,
            &job.sub_op,
            job.representative_only,
        )
    };
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = jobs.iter().map(run).collect();

    let mut report = SweepReport {
        lattices_checked: lattices.len(),
        cases_checked: 0,
        inconsistencies: Vec::new(),
        branches: BranchCounters::default(),
        cases: Vec::new(),
    };
    for result in results {
        let (record, branches) = result?;
        report.cases_checked += 1;
        report.branches.merge(&branches);
        if !record.consistent() {
            report.inconsistencies.push(record.clone());
        }
        report.cases.push(record);
    }
    Ok(report)
}

/// Outcome of a counterexample search: either a constructed table breaking
/// the target axiom, or a construction whose displayed cases conflict.
#[derive(Clone, Debug)]
pub enum CounterexampleOutcome {
    AxiomViolation {
        lattice: BoundedLattice,
        e: Elem,
        sub_op: OpTable,
        witness: AxiomWitness,
    },
    ConstructionConflicts {
        lattice: BoundedLattice,
        e: Elem,
        sub_op: OpTable,
        conflicts: Vec<ConflictReport>,
    },
}

/// Scans lattices in enumeration order (smallest first) for the first
/// instance where `kind` fails `axiom`, or reports construction conflicts
/// if the cases disagree before any table exists.
pub fn search_counterexample(
    n_max: usize,
    kind: ConstructionKind,
    axiom: Axiom,
) -> Result<Option<CounterexampleOutcome>, SweepError> {
    for n in 1..=n_max {
        for lattice in enumerate_bounded_lattices(n)? {
            for e in interior_elems(&lattice) {
                let (pool, _) = sub_op_pool(&lattice, e, kind.role());
                for sub_op in pool {
                    match construct(&lattice, e, kind, &sub_op) {
                        Ok(u) => {
                            if let Some(witness) =
                                check_axiom(&lattice, &u, axiom, Some(e)).unwrap()
                            {
                                return Ok(Some(CounterexampleOutcome::AxiomViolation {
                                    lattice,
                                    e,
                                    sub_op,
                                    witness,
                                }));
                            }
                        }
                        Err(ConstructError::Conflicts(conflicts)) => {
                            return Ok(Some(CounterexampleOutcome::ConstructionConflicts {
                                lattice,
                                e,
                                sub_op,
                                conflicts,
                            }));
                        }
                        Err(_) => {}
                    }
                }
            }
        }
    }
    Ok(None)
}
