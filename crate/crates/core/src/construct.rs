//! The piecewise uninorm constructions: the corrected variants, the two
//! incomparability-aware extensions, and the flawed legacy definitions kept
//! for counterexample work.
//!
//! Every kind is encoded literally as a list of region cases plus a final
//! complement case. Evaluation collects *all* matching cases for a pair;
//! overlapping cases that disagree are surfaced as conflicts, never resolved
//! by case order.

use thiserror::Error;

use crate::lattice::{BoundedLattice, CoordClass, Elem};
use crate::norms::{check_norm_axioms, AxiomWitness, NormRole, OpTable};

/// One of the nine displayed piecewise definitions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ConstructionKind {
    /// t-norm on `[0,e]`, top on `(e,1]^2`, join otherwise
    UT,
    /// corrected conorm extension: meet on the leftovers
    USCorrected,
    /// corrected norm extension: join on the cross regions, top otherwise
    UtCorrected,
    /// corrected conorm extension: meet on the cross regions, bottom otherwise
    UsCorrected,
    /// incomparability-aware norm extension (annihilates `[0,e) x I_e`)
    UTe,
    /// incomparability-aware conorm extension
    USe,
    /// legacy conorm extension; well-defined but non-monotone in general
    USLegacy,
    /// legacy norm extension; ill-defined (overlapping cases disagree)
    UtLegacy,
    /// legacy conorm extension; ill-defined (overlapping cases disagree)
    UsLegacy,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 9] = [
        ConstructionKind::UT,
        ConstructionKind::USCorrected,
        ConstructionKind::UtCorrected,
        ConstructionKind::UsCorrected,
        ConstructionKind::UTe,
        ConstructionKind::USe,
        ConstructionKind::USLegacy,
        ConstructionKind::UtLegacy,
        ConstructionKind::UsLegacy,
    ];

    /// Which sub-operation the kind consumes.
    pub fn role(self) -> NormRole {
        match self {
            ConstructionKind::UT
            | ConstructionKind::UtCorrected
            | ConstructionKind::UtLegacy
            | ConstructionKind::UTe => NormRole::TNorm,
            ConstructionKind::USCorrected
            | ConstructionKind::UsCorrected
            | ConstructionKind::USLegacy
            | ConstructionKind::UsLegacy
            | ConstructionKind::USe => NormRole::TConorm,
        }
    }

    pub fn is_legacy(self) -> bool {
        matches!(
            self,
            ConstructionKind::USLegacy | ConstructionKind::UtLegacy | ConstructionKind::UsLegacy
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::UT => "UT",
            ConstructionKind::USCorrected => "US_corrected",
            ConstructionKind::UtCorrected => "Ut_corrected",
            ConstructionKind::UsCorrected => "Us_corrected",
            ConstructionKind::UTe => "UTe",
            ConstructionKind::USe => "USe",
            ConstructionKind::USLegacy => "US_legacy",
            ConstructionKind::UtLegacy => "Ut_legacy",
            ConstructionKind::UsLegacy => "Us_legacy",
        }
    }

    pub fn parse(s: &str) -> Option<ConstructionKind> {
        ConstructionKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl std::fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A region an argument may range over, relative to `e`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reg {
    /// `[0, e]`
    BelowC,
    /// `[0, e)`
    BelowO,
    /// `[e, 1]`
    AboveC,
    /// `(e, 1]`
    AboveO,
    /// `I_e`
    Inc,
}

impl Reg {
    pub fn contains(self, c: CoordClass) -> bool {
        match self {
            Reg::BelowC => matches!(c, CoordClass::Below | CoordClass::Equal),
            Reg::BelowO => matches!(c, CoordClass::Below),
            Reg::AboveC => matches!(c, CoordClass::Above | CoordClass::Equal),
            Reg::AboveO => matches!(c, CoordClass::Above),
            Reg::Inc => matches!(c, CoordClass::Incomp),
        }
    }
}

/// How a matching case computes its value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ValueRule {
    ApplySubOp,
    TakeFirst,
    TakeSecond,
    MeetOf,
    JoinOf,
    ConstBottom,
    ConstTop,
}

/// An explicit case: a union of region products plus a value rule.
#[derive(Clone, Debug)]
pub struct Case {
    pub regions: Vec<(Reg, Reg)>,
    pub rule: ValueRule,
}

/// The literal encoding of a displayed piecewise definition. The final
/// `otherwise` rule fires exactly when no explicit case matches.
#[derive(Clone, Debug)]
pub struct PiecewiseSpec {
    pub cases: Vec<Case>,
    pub otherwise: ValueRule,
}

/// Two cases matching the same pair with different values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictReport {
    pub pair: (Elem, Elem),
    pub case_a: usize,
    pub value_a: Elem,
    pub case_b: usize,
    pub value_b: Elem,
}

#[derive(Debug, Error, Clone)]
pub enum ConstructError {
    #[error("neutral element must lie strictly between bottom and top")]
    BadNeutral,
    #[error("sub-operation is not a valid {role:?} (first witness: {witness:?})")]
    SubOpInvalid {
        role: NormRole,
        witness: Option<AxiomWitness>,
    },
    #[error("sub-operation domain does not match the required interval")]
    SubOpDomainMismatch,
    #[error("piecewise cases disagree on {} pair(s); first at ({:?}, {:?})", .0.len(), .0[0].pair.0, .0[0].pair.1)]
    Conflicts(Vec<ConflictReport>),
    #[error("piecewise cases disagree at ({0:?}, {1:?})")]
    ConflictAt(Elem, Elem),
}

fn case(regions: &[(Reg, Reg)], rule: ValueRule) -> Case {
    Case {
        regions: regions.to_vec(),
        rule,
    }
}

/// The case list for each kind, transcribed from its display.
pub fn spec_for(kind: ConstructionKind) -> PiecewiseSpec {
    use ConstructionKind::*;
    use Reg::*;
    use ValueRule::*;
    let (cases, otherwise) = match kind {
        UT => (
            vec![
                case(&[(BelowC, BelowC)], ApplySubOp),
                case(&[(AboveO, AboveO)], ConstTop),
                case(&[(BelowC, Inc)], TakeSecond),
                case(&[(Inc, BelowC)], TakeFirst),
            ],
            JoinOf,
        ),
        USLegacy => (
            vec![
                case(&[(BelowO, BelowO)], ConstBottom),
                case(&[(AboveC, AboveC)], ApplySubOp),
                case(&[(BelowC, Inc)], TakeSecond),
                case(&[(Inc, BelowC)], TakeFirst),
            ],
            MeetOf,
        ),
        UtLegacy => (
            vec![
                case(&[(BelowC, BelowC)], ApplySubOp),
                case(&[(BelowC, AboveC), (AboveC, BelowC), (Inc, Inc)], JoinOf),
                case(&[(BelowC, Inc)], TakeSecond),
                case(&[(Inc, BelowC)], TakeFirst),
            ],
            ConstTop,
        ),
        UsLegacy => (
            vec![
                case(&[(AboveC, AboveC)], ApplySubOp),
                case(&[(BelowC, AboveC), (AboveC, BelowC), (Inc, Inc)], MeetOf),
                case(&[(AboveC, Inc)], TakeSecond),
                case(&[(Inc, AboveC)], TakeFirst),
            ],
            ConstBottom,
        ),
        USCorrected => (
            vec![
                case(&[(BelowO, BelowO)], ConstBottom),
                case(&[(AboveC, AboveC)], ApplySubOp),
                case(&[(AboveC, Inc)], TakeSecond),
                case(&[(Inc, AboveC)], TakeFirst),
            ],
            MeetOf,
        ),
        UtCorrected => (
            vec![
                case(&[(BelowC, BelowC)], ApplySubOp),
                case(&[(BelowC, AboveO), (AboveO, BelowC), (Inc, Inc)], JoinOf),
                case(&[(BelowC, Inc)], TakeSecond),
                case(&[(Inc, BelowC)], TakeFirst),
            ],
            ConstTop,
        ),
        UsCorrected => (
            vec![
                case(&[(AboveC, AboveC)], ApplySubOp),
                case(&[(BelowO, AboveC), (AboveC, BelowO), (Inc, Inc)], MeetOf),
                case(&[(AboveC, Inc)], TakeSecond),
                case(&[(Inc, AboveC)], TakeFirst),
            ],
            ConstBottom,
        ),
        UTe => (
            vec![
                case(&[(BelowC, BelowC)], ApplySubOp),
                case(&[(AboveC, Inc)], TakeSecond),
                case(&[(Inc, AboveC)], TakeFirst),
                case(&[(BelowO, Inc), (Inc, BelowO)], ConstBottom),
                case(&[(BelowO, AboveC), (AboveC, BelowO), (Inc, Inc)], MeetOf),
            ],
            JoinOf,
        ),
        USe => (
            vec![
                case(&[(AboveC, AboveC)], ApplySubOp),
                case(&[(AboveC, Inc)], TakeSecond),
                case(&[(Inc, AboveC)], TakeFirst),
                case(&[(BelowO, Inc), (Inc, BelowO)], ConstBottom),
                case(&[(BelowO, AboveC), (AboveC, BelowO), (Inc, Inc)], MeetOf),
            ],
            // the residual region is [0,e)^2; the meet keeps the restriction
            // to [0,e] a t-norm, which neutrality and monotonicity force
            MeetOf,
        ),
    };
    PiecewiseSpec { cases, otherwise }
}

fn rule_value(
    lattice: &BoundedLattice,
    sub_op: &OpTable,
    rule: ValueRule,
    x: Elem,
    y: Elem,
) -> Elem {
    match rule {
        ValueRule::ApplySubOp => sub_op
            .apply(x, y)
            .expect("sub-op case predicate matches its domain"),
        ValueRule::TakeFirst => x,
        ValueRule::TakeSecond => y,
        ValueRule::MeetOf => lattice.meet(x, y),
        ValueRule::JoinOf => lattice.join(x, y),
        ValueRule::ConstBottom => lattice.bottom(),
        ValueRule::ConstTop => lattice.top(),
    }
}

/// All `(case index, value)` pairs whose predicate matches `(x, y)`.
/// The final complement case has index `cases.len()`.
pub fn matching_cases(
    lattice: &BoundedLattice,
    e: Elem,
    spec: &PiecewiseSpec,
    sub_op: &OpTable,
    x: Elem,
    y: Elem,
) -> Vec<(usize, Elem)> {
    let (cx, cy) = (lattice.classify(e, x), lattice.classify(e, y));
    let mut out = Vec::new();
    for (i, c) in spec.cases.iter().enumerate() {
        if c.regions
            .iter()
            .any(|&(rx, ry)| rx.contains(cx) && ry.contains(cy))
        {
            out.push((i, rule_value(lattice, sub_op, c.rule, x, y)));
        }
    }
    if out.is_empty() {
        out.push((
            spec.cases.len(),
            rule_value(lattice, sub_op, spec.otherwise, x, y),
        ));
    }
    out
}

fn validate_inputs(
    lattice: &BoundedLattice,
    e: Elem,
    kind: ConstructionKind,
    sub_op: &OpTable,
) -> Result<(), ConstructError> {
    if e == lattice.bottom() || e == lattice.top() {
        return Err(ConstructError::BadNeutral);
    }
    let role = kind.role();
    match check_norm_axioms(lattice, sub_op, role, e) {
        Err(_) => Err(ConstructError::SubOpDomainMismatch),
        Ok(ws) if !ws.is_empty() => Err(ConstructError::SubOpInvalid {
            role,
            witness: ws.into_iter().next(),
        }),
        Ok(_) => Ok(()),
    }
}

/// Builds the full `L x L` table for `kind`, or reports every pair on which
/// the displayed cases genuinely disagree.
pub fn construct(
    lattice: &BoundedLattice,
    e: Elem,
    kind: ConstructionKind,
    sub_op: &OpTable,
) -> Result<OpTable, ConstructError> {
    validate_inputs(lattice, e, kind, sub_op)?;
    let spec = spec_for(kind);
    let carrier: Vec<Elem> = lattice.elems().collect();
    let mut conflicts = Vec::new();
    let mut values = vec![lattice.bottom(); lattice.n() * lattice.n()];
    for &x in &carrier {
        for &y in &carrier {
            let matched = matching_cases(lattice, e, &spec, sub_op, x, y);
            let (first_case, v) = matched[0];
            if let Some(&(other_case, w)) = matched.iter().find(|&&(_, w)| w != v) {
                conflicts.push(ConflictReport {
                    pair: (x, y),
                    case_a: first_case,
                    value_a: v,
                    case_b: other_case,
                    value_b: w,
                });
            }
            values[x.0 * lattice.n() + y.0] = v;
        }
    }
    if !conflicts.is_empty() {
        return Err(ConstructError::Conflicts(conflicts));
    }
    Ok(OpTable::from_fn(lattice, &carrier, Some(e), |x, y| {
        values[x.0 * lattice.n() + y.0]
    }))
}

/// Pointwise form of [`construct`].
pub fn evaluate(
    lattice: &BoundedLattice,
    e: Elem,
    kind: ConstructionKind,
    sub_op: &OpTable,
    x: Elem,
    y: Elem,
) -> Result<Elem, ConstructError> {
    validate_inputs(lattice, e, kind, sub_op)?;
    let spec = spec_for(kind);
    let matched = matching_cases(lattice, e, &spec, sub_op, x, y);
    let v = matched[0].1;
    if matched.iter().any(|&(_, w)| w != v) {
        return Err(ConstructError::ConflictAt(x, y));
    }
    Ok(v)
}
