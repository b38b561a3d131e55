//! Exhaustive uninorm-axiom verification over a full carrier.
//!
//! This is the brute-force side of every theorem check: no structural
//! knowledge, just scans. Witnesses are the lexicographically first
//! violations under the lattice's fixed linear extension, so reports are
//! stable golden artifacts regardless of scheduling.

use thiserror::Error;

use crate::lattice::{BoundedLattice, Elem};
use crate::norms::{Axiom, AxiomWitness, OpTable};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AxiomCheckError {
    #[error("the neutrality check needs the neutral element parameter")]
    MissingNeutralParam,
}

/// Outcome of checking all four uninorm axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UninormReport {
    pub commutative: Option<AxiomWitness>,
    pub associative: Option<AxiomWitness>,
    pub monotone: Option<AxiomWitness>,
    pub neutral: Option<AxiomWitness>,
    pub is_uninorm: bool,
}

impl UninormReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &AxiomWitness> {
        [
            self.commutative.as_ref(),
            self.associative.as_ref(),
            self.monotone.as_ref(),
            self.neutral.as_ref(),
        ]
        .into_iter()
        .flatten()
    }
}

/// Checks a single axiom of `op` (total on the carrier), returning the first
/// witness in linear-extension order, or nothing if the axiom holds.
pub fn check_axiom(
    lattice: &BoundedLattice,
    op: &OpTable,
    axiom: Axiom,
    e: Option<Elem>,
) -> Result<Option<AxiomWitness>, AxiomCheckError> {
    #[cfg(feature = "parallel")]
    {
        check_axiom_par(lattice, op, axiom, e)
    }
    #[cfg(not(feature = "parallel"))]
    {
        check_axiom_seq(lattice, op, axiom, e)
    }
}

/// Single-threaded scan; always available and used as the bench baseline.
pub fn check_axiom_seq(
    lattice: &BoundedLattice,
    op: &OpTable,
    axiom: Axiom,
    e: Option<Elem>,
) -> Result<Option<AxiomWitness>, AxiomCheckError> {
    let order = lattice.linear_ext();
    if axiom == Axiom::Neutrality && e.is_none() {
        return Err(AxiomCheckError::MissingNeutralParam);
    }
    Ok(order
        .iter()
        .enumerate()
        .find_map(|(i, &x)| scan_slice(lattice, op, axiom, e, &order, i, x)))
}

/// Worker-parallel scan over the outer loop; each worker returns its local
/// first witness and the global minimum (by outer position) wins, so the
/// result is identical to the sequential scan.
#[cfg(feature = "parallel")]
pub fn check_axiom_par(
    lattice: &BoundedLattice,
    op: &OpTable,
    axiom: Axiom,
    e: Option<Elem>,
) -> Result<Option<AxiomWitness>, AxiomCheckError> {
    use rayon::prelude::*;
    let order = lattice.linear_ext();
    if axiom == Axiom::Neutrality && e.is_none() {
        return Err(AxiomCheckError::MissingNeutralParam);
    }
    Ok(order
        .par_iter()
        .enumerate()
        .filter_map(|(i, &x)| scan_slice(lattice, op, axiom, e, &order, i, x).map(|w| (i, w)))
        .min_by_key(|&(i, _)| i)
        .map(|(_, w)| w))
}

/// Scans the slice of the axiom's search space whose outer element is `x`
/// (at position `xi` in the fixed order). Inner loops run in order, so the
/// returned witness is the slice's lexicographic minimum.
fn scan_slice(
    lattice: &BoundedLattice,
    op: &OpTable,
    axiom: Axiom,
    e: Option<Elem>,
    order: &[Elem],
    xi: usize,
    x: Elem,
) -> Option<AxiomWitness> {
    match axiom {
        Axiom::Closure => order.iter().find_map(|&y| {
            let v = op.get(x, y);
            (!op.contains(v)).then(|| AxiomWitness {
                axiom,
                elems: vec![x, y],
                lhs: v,
                rhs: v,
            })
        }),
        Axiom::Neutrality => {
            let e = e.unwrap();
            // outer loop is over x; e is fixed
            for (lhs, rhs) in [(op.get(e, x), x), (op.get(x, e), x)] {
                if lhs != rhs {
                    return Some(AxiomWitness {
                        axiom,
                        elems: vec![e, x],
                        lhs,
                        rhs,
                    });
                }
            }
            None
        }
        Axiom::Commutativity => order.iter().find_map(|&y| {
            let (lhs, rhs) = (op.get(x, y), op.get(y, x));
            (lhs != rhs).then(|| AxiomWitness {
                axiom,
                elems: vec![x, y],
                lhs,
                rhs,
            })
        }),
        Axiom::Associativity => {
            for &y in order {
                for &z in order {
                    let (lhs, rhs) = (op.get(x, op.get(y, z)), op.get(op.get(x, y), z));
                    if lhs != rhs {
                        return Some(AxiomWitness {
                            axiom,
                            elems: vec![x, y, z],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
            None
        }
        Axiom::Monotonicity => {
            let _ = xi;
            for &y in order {
                if !lattice.leq(x, y) {
                    continue;
                }
                for &z in order {
                    for (lhs, rhs) in [(op.get(x, z), op.get(y, z)), (op.get(z, x), op.get(z, y))] {
                        if !lattice.leq(lhs, rhs) {
                            return Some(AxiomWitness {
                                axiom,
                                elems: vec![x, y, z],
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
            None
        }
    }
}

/// Runs all four uninorm axiom checks (no short-circuiting).
pub fn is_uninorm(lattice: &BoundedLattice, op: &OpTable, e: Elem) -> UninormReport {
    let commutative = check_axiom(lattice, op, Axiom::Commutativity, None).unwrap();
    let associative = check_axiom(lattice, op, Axiom::Associativity, None).unwrap();
    let monotone = check_axiom(lattice, op, Axiom::Monotonicity, None).unwrap();
    let neutral = check_axiom(lattice, op, Axiom::Neutrality, Some(e)).unwrap();
    let is_uninorm =
        commutative.is_none() && associative.is_none() && monotone.is_none() && neutral.is_none();
    UninormReport {
        commutative,
        associative,
        monotone,
        neutral,
        is_uninorm,
    }
}
