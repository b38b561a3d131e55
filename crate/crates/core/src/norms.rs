//! Binary operation tables on sub-domains of a lattice, t-norm/t-conorm
//! axiom checking with witnesses, and exhaustive enumeration of all norms
//! on small domains.

use thiserror::Error;

use crate::lattice::{BoundedLattice, Elem};

/// A total binary operation on a declared domain, with values in the whole
/// carrier. Closure into the domain is a checkable property, not an
/// invariant, because the uninorm constructions map `L^2 -> L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    domain: Vec<Elem>,
    pos: Vec<Option<usize>>,
    vals: Vec<Elem>,
    neutral: Option<Elem>,
}

impl OpTable {
    /// Builds a table over `domain` by evaluating `f` on every ordered pair.
    /// The domain is kept sorted by element index.
    pub fn from_fn(
        lattice: &BoundedLattice,
        domain: &[Elem],
        neutral: Option<Elem>,
        mut f: impl FnMut(Elem, Elem) -> Elem,
    ) -> OpTable {
        let mut domain: Vec<Elem> = domain.to_vec();
        domain.sort();
        domain.dedup();
        let mut pos = vec![None; lattice.n()];
        for (i, &x) in domain.iter().enumerate() {
            pos[x.0] = Some(i);
        }
        let d = domain.len();
        let mut vals = Vec::with_capacity(d * d);
        for &x in &domain {
            for &y in &domain {
                vals.push(f(x, y));
            }
        }
        OpTable {
            domain,
            pos,
            vals,
            neutral,
        }
    }

    pub fn domain(&self) -> &[Elem] {
        &self.domain
    }

    pub fn neutral(&self) -> Option<Elem> {
        self.neutral
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.pos.get(x.0).copied().flatten().is_some()
    }

    /// Looks up `op(x, y)`; `None` if either argument is outside the domain.
    pub fn apply(&self, x: Elem, y: Elem) -> Option<Elem> {
        let i = self.pos.get(x.0).copied().flatten()?;
        let j = self.pos.get(y.0).copied().flatten()?;
        Some(self.vals[i * self.domain.len() + j])
    }

    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.apply(x, y).expect("arguments outside op domain")
    }

    /// FNV-1a over the domain indices and table values; stable across runs,
    /// used to identify sub-ops in sweep report lines.
    pub fn content_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            for byte in v.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        for &x in &self.domain {
            eat(x.0 as u64);
        }
        for &v in &self.vals {
            eat(v.0 as u64);
        }
        h
    }
}

/// Which sub-interval norm family an operation is supposed to belong to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormRole {
    /// t-norm on `[0, e]` with neutral `e`
    TNorm,
    /// t-conorm on `[e, 1]` with neutral `e`
    TConorm,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Axiom {
    Commutativity,
    Associativity,
    Monotonicity,
    Neutrality,
    Closure,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Neutrality => "neutrality",
            Axiom::Closure => "closure",
        };
        f.write_str(s)
    }
}

/// A concrete axiom violation: the elements instantiating the axiom and the
/// two values that fail to agree (for closure, `lhs` is the escaping value
/// and `rhs` is unused and set equal to it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    pub elems: Vec<Elem>,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum NormError {
    #[error("operation domain does not match the required interval")]
    DomainMismatch,
    #[error("neutral element must lie strictly between bottom and top")]
    BadNeutral,
    #[error("domain has {size} elements, above the enumeration cap {cap}")]
    DomainTooLarge { size: usize, cap: usize },
}

/// Default cap on the domain size for `enumerate_norms`.
pub const DEFAULT_DOMAIN_CAP: usize = 6;

/// Checks the t-norm/t-conorm axioms for `op` on its required sub-interval.
/// Returns one witness per violated axiom; an empty list means valid.
pub fn check_norm_axioms(
    lattice: &BoundedLattice,
    op: &OpTable,
    role: NormRole,
    e: Elem,
) -> Result<Vec<AxiomWitness>, NormError> {
    let required = match role {
        NormRole::TNorm => lattice.interval(lattice.bottom(), e, true, true),
        NormRole::TConorm => lattice.interval(e, lattice.top(), true, true),
    }
    .expect("bottom/top are comparable with every element");
    if op.domain() != required.as_slice() {
        return Err(NormError::DomainMismatch);
    }
    Ok(check_axioms_on(lattice, op, e))
}

/// Axiom scan for an operation on an arbitrary domain with a designated
/// neutral element. Scans follow the lattice's fixed linear extension, so
/// the reported witnesses are deterministic.
pub fn check_axioms_on(lattice: &BoundedLattice, op: &OpTable, neutral: Elem) -> Vec<AxiomWitness> {
    let order: Vec<Elem> = lattice
        .linear_ext()
        .into_iter()
        .filter(|&x| op.contains(x))
        .collect();
    let mut out = Vec::new();
    let in_domain = |v: Elem| op.contains(v);

    // closure
    'closure: for &x in &order {
        for &y in &order {
            let v = op.get(x, y);
            if !in_domain(v) {
                out.push(AxiomWitness {
                    axiom: Axiom::Closure,
                    elems: vec![x, y],
                    lhs: v,
                    rhs: v,
                });
                break 'closure;
            }
        }
    }

    // neutrality
    'neutral: for &x in &order {
        for (lhs, rhs) in [(op.get(neutral, x), x), (op.get(x, neutral), x)] {
            if lhs != rhs {
                out.push(AxiomWitness {
                    axiom: Axiom::Neutrality,
                    elems: vec![neutral, x],
                    lhs,
                    rhs,
                });
                break 'neutral;
            }
        }
    }

    // commutativity
    'comm: for &x in &order {
        for &y in &order {
            let (lhs, rhs) = (op.get(x, y), op.get(y, x));
            if lhs != rhs {
                out.push(AxiomWitness {
                    axiom: Axiom::Commutativity,
                    elems: vec![x, y],
                    lhs,
                    rhs,
                });
                break 'comm;
            }
        }
    }

    // associativity; triples with an escaping intermediate value are skipped,
    // the closure witness already covers those
    'assoc: for &x in &order {
        for &y in &order {
            for &z in &order {
                let (xy, yz) = (op.get(x, y), op.get(y, z));
                if !in_domain(xy) || !in_domain(yz) {
                    continue;
                }
                let (lhs, rhs) = (op.get(x, yz), op.get(xy, z));
                if lhs != rhs {
                    out.push(AxiomWitness {
                        axiom: Axiom::Associativity,
                        elems: vec![x, y, z],
                        lhs,
                        rhs,
                    });
                    break 'assoc;
                }
            }
        }
    }

    // monotonicity in both argument positions
    'mono: for &x in &order {
        for &y in &order {
            if !lattice.leq(x, y) {
                continue;
            }
            for &z in &order {
                for (lhs, rhs) in [(op.get(x, z), op.get(y, z)), (op.get(z, x), op.get(z, y))] {
                    if !lattice.leq(lhs, rhs) {
                        out.push(AxiomWitness {
                            axiom: Axiom::Monotonicity,
                            elems: vec![x, y, z],
                            lhs,
                            rhs,
                        });
                        break 'mono;
                    }
                }
            }
        }
    }

    out
}

/// Replays a witness against the table: true iff the reported violation is
/// reproduced exactly.
pub fn replay_witness(lattice: &BoundedLattice, op: &OpTable, w: &AxiomWitness) -> bool {
    match (w.axiom, w.elems.as_slice()) {
        (Axiom::Closure, &[x, y]) => op.apply(x, y) == Some(w.lhs) && !op.contains(w.lhs),
        (Axiom::Neutrality, &[n, x]) => {
            (op.apply(n, x) == Some(w.lhs) || op.apply(x, n) == Some(w.lhs))
                && w.rhs == x
                && w.lhs != x
        }
        (Axiom::Commutativity, &[x, y]) => {
            op.apply(x, y) == Some(w.lhs) && op.apply(y, x) == Some(w.rhs) && w.lhs != w.rhs
        }
        (Axiom::Associativity, &[x, y, z]) => {
            let (xy, yz) = match (op.apply(x, y), op.apply(y, z)) {
                (Some(a), Some(b)) => (a, b),
                _ => return false,
            };
            op.apply(x, yz) == Some(w.lhs) && op.apply(xy, z) == Some(w.rhs) && w.lhs != w.rhs
        }
        (Axiom::Monotonicity, &[x, y, z]) => {
            lattice.leq(x, y)
                && !lattice.leq(w.lhs, w.rhs)
                && ((op.apply(x, z) == Some(w.lhs) && op.apply(y, z) == Some(w.rhs))
                    || (op.apply(z, x) == Some(w.lhs) && op.apply(z, y) == Some(w.rhs)))
        }
        _ => false,
    }
}

fn require_interior(lattice: &BoundedLattice, e: Elem) -> Result<(), NormError> {
    if e == lattice.bottom() || e == lattice.top() {
        Err(NormError::BadNeutral)
    } else {
        Ok(())
    }
}

/// The meet restricted to `[0, e]^2`: the greatest t-norm on the interval.
pub fn canonical_tnorm_meet(lattice: &BoundedLattice, e: Elem) -> Result<OpTable, NormError> {
    require_interior(lattice, e)?;
    let dom = lattice.interval(lattice.bottom(), e, true, true).unwrap();
    Ok(OpTable::from_fn(lattice, &dom, Some(e), |x, y| {
        lattice.meet(x, y)
    }))
}

/// The join restricted to `[e, 1]^2`: the least t-conorm on the interval.
pub fn canonical_tconorm_join(lattice: &BoundedLattice, e: Elem) -> Result<OpTable, NormError> {
    require_interior(lattice, e)?;
    let dom = lattice.interval(e, lattice.top(), true, true).unwrap();
    Ok(OpTable::from_fn(lattice, &dom, Some(e), |x, y| {
        lattice.join(x, y)
    }))
}

/// The least t-norm on `[0, e]`: meet when one argument is `e`, bottom
/// otherwise.
pub fn drastic_tnorm(lattice: &BoundedLattice, e: Elem) -> Result<OpTable, NormError> {
    require_interior(lattice, e)?;
    let dom = lattice.interval(lattice.bottom(), e, true, true).unwrap();
    Ok(OpTable::from_fn(lattice, &dom, Some(e), |x, y| {
        if x == e || y == e {
            lattice.meet(x, y)
        } else {
            lattice.bottom()
        }
    }))
}

/// The greatest t-conorm on `[e, 1]`: join when one argument is `e`, top
/// otherwise.
pub fn drastic_tconorm(lattice: &BoundedLattice, e: Elem) -> Result<OpTable, NormError> {
    require_interior(lattice, e)?;
    let dom = lattice.interval(e, lattice.top(), true, true).unwrap();
    Ok(OpTable::from_fn(lattice, &dom, Some(e), |x, y| {
        if x == e || y == e {
            lattice.join(x, y)
        } else {
            lattice.top()
        }
    }))
}

/// Enumerates every t-norm on `[0, e]` (or t-conorm on `[e, 1]`) with the
/// default domain cap.
pub fn enumerate_norms(
    lattice: &BoundedLattice,
    e: Elem,
    role: NormRole,
) -> Result<Vec<OpTable>, NormError> {
    enumerate_norms_with_cap(lattice, e, role, DEFAULT_DOMAIN_CAP)
}

/// Backtracking enumeration: the upper triangle of the table is filled cell
/// by cell in row-major order over the interval's linear extension, with the
/// neutral row/column pinned. Candidates are pruned by the pointwise bound
/// (a t-norm never exceeds the meet) and by monotone consistency with
/// already-assigned cells; associativity is filtered at the leaves. Output
/// order is the lexicographic order of the flattened upper triangle.
pub fn enumerate_norms_with_cap(
    lattice: &BoundedLattice,
    e: Elem,
    role: NormRole,
    cap: usize,
) -> Result<Vec<OpTable>, NormError> {
    require_interior(lattice, e)?;
    let dom_sorted = match role {
        NormRole::TNorm => lattice.interval(lattice.bottom(), e, true, true),
        NormRole::TConorm => lattice.interval(e, lattice.top(), true, true),
    }
    .unwrap();
    let d = dom_sorted.len();
    if d > cap {
        return Err(NormError::DomainTooLarge { size: d, cap });
    }

    // dual view: a t-conorm on [e, 1] is a t-norm on the dual order
    let le = |x: Elem, y: Elem| match role {
        NormRole::TNorm => lattice.leq(x, y),
        NormRole::TConorm => lattice.leq(y, x),
    };
    let bound = |x: Elem, y: Elem| match role {
        NormRole::TNorm => lattice.meet(x, y),
        NormRole::TConorm => lattice.join(x, y),
    };

    // linear extension of the (possibly dualized) interval order
    let mut order: Vec<Elem> = dom_sorted.clone();
    order.sort_by_key(|&x| (dom_sorted.iter().filter(|&&z| le(z, x)).count(), x.0));

    // free upper-triangle cells: pairs not involving the neutral element
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 0..d {
        for j in i..d {
            if order[i] != e && order[j] != e {
                cells.push((i, j));
            }
        }
    }

    let mut table = vec![None::<Elem>; d * d];
    let at = |i: usize, j: usize| i * d + j;
    // neutral row/column pinned
    for i in 0..d {
        let ei = order.iter().position(|&x| x == e).unwrap();
        table[at(ei, i)] = Some(order[i]);
        table[at(i, ei)] = Some(order[i]);
    }

    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new(); // assigned free cells
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        lattice: &BoundedLattice,
        e: Elem,
        role: NormRole,
        order: &[Elem],
        cells: &[(usize, usize)],
        next: usize,
        table: &mut Vec<Option<Elem>>,
        stack: &mut Vec<(usize, usize)>,
        le: &dyn Fn(Elem, Elem) -> bool,
        bound: &dyn Fn(Elem, Elem) -> Elem,
        out: &mut Vec<OpTable>,
    ) {
        let d = order.len();
        let at = |i: usize, j: usize| i * d + j;
        if next == cells.len() {
            let full: Vec<Elem> = table.iter().map(|v| v.unwrap()).collect();
            let op = OpTable::from_fn(lattice, order, Some(e), |x, y| {
                let i = order.iter().position(|&v| v == x).unwrap();
                let j = order.iter().position(|&v| v == y).unwrap();
                full[at(i, j)]
            });
            if check_norm_axioms(lattice, &op, role, e)
                .map(|w| w.is_empty())
                .unwrap_or(false)
            {
                out.push(op);
            }
            return;
        }
        let (i, j) = cells[next];
        let (x, y) = (order[i], order[j]);
        for &v in order {
            if !le(v, bound(x, y)) {
                continue;
            }
            // monotone consistency against assigned cells (incl. pinned ones)
            let mut ok = true;
            'scan: for a in 0..d {
                for b in 0..d {
                    if let Some(w) = table[at(a, b)] {
                        let (xa, yb) = (order[a], order[b]);
                        if le(xa, x) && le(yb, y) && !le(w, v) {
                            ok = false;
                            break 'scan;
                        }
                        if le(x, xa) && le(y, yb) && !le(v, w) {
                            ok = false;
                            break 'scan;
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            table[at(i, j)] = Some(v);
            table[at(j, i)] = Some(v);
            stack.push((i, j));
            recurse(
                lattice,
                e,
                role,
                order,
                cells,
                next + 1,
                table,
                stack,
                le,
                bound,
                out,
            );
            stack.pop();
            table[at(i, j)] = None;
            if i != j {
                table[at(j, i)] = None;
            }
        }
    }
    recurse(
        lattice, e, role, &order, &cells, 0, &mut table, &mut stack, &le, &bound, &mut out,
    );
    Ok(out)
}
