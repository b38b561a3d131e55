//! Structural conditions from the characterization theorems, evaluated
//! directly on the order, independent of any constructed operation table.

use thiserror::Error;

use crate::lattice::{BoundedLattice, Elem};
use crate::norms::{check_axioms_on, check_norm_axioms, NormRole, OpTable};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ConditionId {
    MeetClosure,
    JoinClosure,
    MeetNormOnIe01,
    JoinConormOnIe01,
    PAnnihilation,
    IeIncompWithZeroE,
}

impl std::fmt::Display for ConditionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConditionId::MeetClosure => "meet-closure",
            ConditionId::JoinClosure => "join-closure",
            ConditionId::MeetNormOnIe01 => "meet-tnorm-on-Ie01",
            ConditionId::JoinConormOnIe01 => "join-tconorm-on-Ie01",
            ConditionId::PAnnihilation => "p-annihilation",
            ConditionId::IeIncompWithZeroE => "Ie-incomparable-with-(0,e]",
        };
        f.write_str(s)
    }
}

/// A failed condition carries the elements that break it and, where
/// meaningful, the offending value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondWitness {
    pub elems: Vec<Elem>,
    pub value: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub id: ConditionId,
    pub holds: bool,
    pub witness: Option<CondWitness>,
}

impl ConditionResult {
    fn holds(id: ConditionId) -> ConditionResult {
        ConditionResult {
            id,
            holds: true,
            witness: None,
        }
    }

    fn fails(id: ConditionId, elems: Vec<Elem>, value: Option<Elem>) -> ConditionResult {
        ConditionResult {
            id,
            holds: false,
            witness: Some(CondWitness { elems, value }),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ConditionError {
    #[error("neutral element must lie strictly between bottom and top")]
    BadNeutral,
    #[error("the supplied sub-operation is not a valid t-norm on [0, e]")]
    SubOpInvalid,
}

fn require_interior(lattice: &BoundedLattice, e: Elem) -> Result<(), ConditionError> {
    if e == lattice.bottom() || e == lattice.top() {
        Err(ConditionError::BadNeutral)
    } else {
        Ok(())
    }
}

fn ie_in_ext_order(lattice: &BoundedLattice, e: Elem) -> Vec<Elem> {
    lattice
        .linear_ext()
        .into_iter()
        .filter(|&x| lattice.incomp(x, e))
        .collect()
}

/// `y /\ z` stays in `I_e \/ {0}` for all `y, z` in `I_e`; vacuous when
/// `I_e` is empty. A failure witness has `y /\ z` strictly inside `(0, e)`.
pub fn meet_closure_condition(
    lattice: &BoundedLattice,
    e: Elem,
) -> Result<ConditionResult, ConditionError> {
    require_interior(lattice, e)?;
    let ie = ie_in_ext_order(lattice, e);
    for &y in &ie {
        for &z in &ie {
            let m = lattice.meet(y, z);
            if m != lattice.bottom() && !lattice.incomp(m, e) {
                return Ok(ConditionResult::fails(
                    ConditionId::MeetClosure,
                    vec![y, z],
                    Some(m),
                ));
            }
        }
    }
    Ok(ConditionResult::holds(ConditionId::MeetClosure))
}

/// Dual of [`meet_closure_condition`]: joins of incomparables stay in
/// `I_e \/ {1}`.
pub fn join_closure_condition(
    lattice: &BoundedLattice,
    e: Elem,
) -> Result<ConditionResult, ConditionError> {
    require_interior(lattice, e)?;
    let ie = ie_in_ext_order(lattice, e);
    for &y in &ie {
        for &z in &ie {
            let j = lattice.join(y, z);
            if j != lattice.top() && !lattice.incomp(j, e) {
                return Ok(ConditionResult::fails(
                    ConditionId::JoinClosure,
                    vec![y, z],
                    Some(j),
                ));
            }
        }
    }
    Ok(ConditionResult::holds(ConditionId::JoinClosure))
}

/// Whether meet (role `TNorm`) or join (role `TConorm`) restricted to
/// `I_e \/ {0, 1}` is closed there and satisfies the norm axioms, with
/// neutral top resp. bottom.
pub fn norm_on_ie01_condition(
    lattice: &BoundedLattice,
    e: Elem,
    role: NormRole,
) -> Result<ConditionResult, ConditionError> {
    require_interior(lattice, e)?;
    let mut domain = lattice.incomparables(e);
    domain.push(lattice.bottom());
    domain.push(lattice.top());
    let (id, neutral) = match role {
        NormRole::TNorm => (ConditionId::MeetNormOnIe01, lattice.top()),
        NormRole::TConorm => (ConditionId::JoinConormOnIe01, lattice.bottom()),
    };
    let op = OpTable::from_fn(lattice, &domain, Some(neutral), |x, y| match role {
        NormRole::TNorm => lattice.meet(x, y),
        NormRole::TConorm => lattice.join(x, y),
    });
    match check_axioms_on(lattice, &op, neutral).first() {
        None => Ok(ConditionResult::holds(id)),
        Some(w) => Ok(ConditionResult::fails(id, w.elems.clone(), Some(w.lhs))),
    }
}

/// `P = {x in (0, e) : exists y in I_e with x <= y}`.
pub fn p_set(lattice: &BoundedLattice, e: Elem) -> Result<Vec<Elem>, ConditionError> {
    require_interior(lattice, e)?;
    let ie = lattice.incomparables(e);
    Ok(lattice
        .interval(lattice.bottom(), e, false, false)
        .unwrap()
        .into_iter()
        .filter(|&x| ie.iter().any(|&y| lattice.leq(x, y)))
        .collect())
}

/// `P` is empty, or `T` annihilates `P x [0, e)` (both orientations scanned).
pub fn p_annihilation_condition(
    lattice: &BoundedLattice,
    e: Elem,
    t: &OpTable,
) -> Result<ConditionResult, ConditionError> {
    require_interior(lattice, e)?;
    if !check_norm_axioms(lattice, t, NormRole::TNorm, e)
        .map(|w| w.is_empty())
        .unwrap_or(false)
    {
        return Err(ConditionError::SubOpInvalid);
    }
    let p = p_set(lattice, e)?;
    if p.is_empty() {
        return Ok(ConditionResult::holds(ConditionId::PAnnihilation));
    }
    let below_open = lattice.interval(lattice.bottom(), e, true, false).unwrap();
    for &x in &p {
        for &y in &below_open {
            for (a, b) in [(x, y), (y, x)] {
                let v = t.get(a, b);
                if v != lattice.bottom() {
                    return Ok(ConditionResult::fails(
                        ConditionId::PAnnihilation,
                        vec![a, b],
                        Some(v),
                    ));
                }
            }
        }
    }
    Ok(ConditionResult::holds(ConditionId::PAnnihilation))
}

/// `I_e || (0, e]`: every element incomparable with `e` is incomparable with
/// everything strictly above bottom and at most `e`.
pub fn ie_incomp_condition(
    lattice: &BoundedLattice,
    e: Elem,
) -> Result<ConditionResult, ConditionError> {
    require_interior(lattice, e)?;
    let ie = ie_in_ext_order(lattice, e);
    let zero_e = lattice.interval(lattice.bottom(), e, false, true).unwrap();
    for &x in &ie {
        for &y in &zero_e {
            if !lattice.incomp(x, y) {
                return Ok(ConditionResult::fails(
                    ConditionId::IeIncompWithZeroE,
                    vec![x, y],
                    None,
                ));
            }
        }
    }
    Ok(ConditionResult::holds(ConditionId::IeIncompWithZeroE))
}
