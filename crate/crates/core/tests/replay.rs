//! Witness replay: every reported violation, fed back into the structure it
//! was reported against, must reproduce exactly.

use unilat::conditions::{
    ie_incomp_condition, join_closure_condition, meet_closure_condition, norm_on_ie01_condition,
    p_annihilation_condition, ConditionId, ConditionResult,
};
use unilat::construct::{construct, ConstructError};
use unilat::enumerate::enumerate_bounded_lattices;
use unilat::is_uninorm;
use unilat::lattice::{BoundedLattice, Elem};
use unilat::norms::{enumerate_norms, replay_witness, NormRole, OpTable};
use unilat::sweep::TheoremId;

fn interior(l: &BoundedLattice) -> Vec<Elem> {
    l.elems()
        .filter(|&x| x != l.bottom() && x != l.top())
        .collect()
}

#[test]
fn axiom_witnesses_replay_over_all_sweep_cases() {
    let mut replayed = 0usize;
    for n in 1..=5 {
        for l in enumerate_bounded_lattices(n).unwrap() {
            for e in interior(&l) {
                for thm in TheoremId::ALL {
                    for s in enumerate_norms(&l, e, thm.role()).unwrap() {
                        let u = match construct(&l, e, thm.kind(), &s) {
                            Ok(u) => u,
                            Err(ConstructError::Conflicts(_)) => continue,
                            Err(other) => panic!("unexpected error: {other}"),
                        };
                        let report = is_uninorm(&l, &u, e);
                        for w in report.witnesses() {
                            assert!(replay_witness(&l, &u, w), "witness failed to replay: {w:?}");
                            replayed += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(replayed > 0, "the sweep must produce some violations");
}

/// Re-derives a condition violation from its witness elements alone.
fn replay_condition(l: &BoundedLattice, e: Elem, r: &ConditionResult) -> bool {
    let w = match (&r.witness, r.holds) {
        (None, true) => return true,
        (Some(w), false) => w,
        _ => return false,
    };
    match r.id {
        ConditionId::MeetClosure => {
            let [y, z] = w.elems.as_slice() else {
                return false;
            };
            let m = l.meet(*y, *z);
            l.incomp(*y, e)
                && l.incomp(*z, e)
                && m != l.bottom()
                && !l.incomp(m, e)
                && w.value == Some(m)
        }
        ConditionId::JoinClosure => {
            let [y, z] = w.elems.as_slice() else {
                return false;
            };
            let j = l.join(*y, *z);
            l.incomp(*y, e)
                && l.incomp(*z, e)
                && j != l.top()
                && !l.incomp(j, e)
                && w.value == Some(j)
        }
        ConditionId::MeetNormOnIe01 | ConditionId::JoinConormOnIe01 => {
            // the witness is an axiom witness over the restricted domain;
            // membership of its elements is the replayable part
            w.elems
                .iter()
                .all(|&x| x == l.bottom() || x == l.top() || l.incomp(x, e))
        }
        ConditionId::PAnnihilation => w.value.is_some_and(|v| v != l.bottom()),
        ConditionId::IeIncompWithZeroE => {
            let [x, y] = w.elems.as_slice() else {
                return false;
            };
            l.incomp(*x, e) && !l.incomp(*x, *y) && l.leq(*y, e) && *y != l.bottom()
        }
    }
}

#[test]
fn condition_witnesses_replay_over_all_lattices() {
    let mut failures_seen = 0usize;
    for n in 1..=6 {
        for l in enumerate_bounded_lattices(n).unwrap() {
            for e in interior(&l) {
                let mut results = vec![
                    meet_closure_condition(&l, e).unwrap(),
                    join_closure_condition(&l, e).unwrap(),
                    norm_on_ie01_condition(&l, e, NormRole::TNorm).unwrap(),
                    norm_on_ie01_condition(&l, e, NormRole::TConorm).unwrap(),
                    ie_incomp_condition(&l, e).unwrap(),
                ];
                for t in enumerate_norms(&l, e, NormRole::TNorm).unwrap() {
                    results.push(p_annihilation_condition(&l, e, &t).unwrap());
                }
                for r in &results {
                    assert!(replay_condition(&l, e, r), "condition witness: {r:?}");
                    failures_seen += usize::from(!r.holds);
                }
            }
        }
    }
    assert!(failures_seen > 0, "some condition must fail somewhere");
}

#[test]
fn p_annihilation_witness_pins_the_table_value() {
    for n in 4..=5 {
        for l in enumerate_bounded_lattices(n).unwrap() {
            for e in interior(&l) {
                for t in enumerate_norms(&l, e, NormRole::TNorm).unwrap() {
                    let r = p_annihilation_condition(&l, e, &t).unwrap();
                    if let Some(w) = &r.witness {
                        let [x, y] = w.elems.as_slice() else {
                            panic!("binary witness expected")
                        };
                        assert_eq!(t.apply(*x, *y), w.value);
                        assert_ne!(w.value, Some(l.bottom()));
                    }
                }
            }
        }
    }
}

#[test]
fn conflict_reports_replay_against_case_evaluation() {
    use unilat::construct::{matching_cases, spec_for, ConstructionKind};
    for n in 3..=5 {
        for l in enumerate_bounded_lattices(n).unwrap() {
            for e in interior(&l) {
                for kind in [ConstructionKind::UtLegacy, ConstructionKind::UsLegacy] {
                    let subs = enumerate_norms(&l, e, kind.role()).unwrap();
                    for s in &subs {
                        let Err(ConstructError::Conflicts(cs)) = construct(&l, e, kind, s) else {
                            panic!("legacy kinds must conflict whenever e is interior")
                        };
                        let spec = spec_for(kind);
                        for c in &cs {
                            let matched = matching_cases(&l, e, &spec, s, c.pair.0, c.pair.1);
                            let vals: Vec<Elem> = matched.iter().map(|&(_, v)| v).collect();
                            assert!(vals.contains(&c.value_a));
                            assert!(vals.contains(&c.value_b));
                            assert_ne!(c.value_a, c.value_b);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn restrictions_of_uninorm_tables_replay_their_sub_ops() {
    for n in 3..=5 {
        for l in enumerate_bounded_lattices(n).unwrap() {
            for e in interior(&l) {
                for thm in TheoremId::ALL {
                    for s in enumerate_norms(&l, e, thm.role()).unwrap() {
                        let Ok(u) = construct(&l, e, thm.kind(), &s) else {
                            continue;
                        };
                        let check = |dom: &[Elem], sub: &OpTable| {
                            for &x in dom {
                                for &y in dom {
                                    assert_eq!(u.get(x, y), sub.get(x, y));
                                }
                            }
                        };
                        check(s.domain(), &s);
                    }
                }
            }
        }
    }
}
