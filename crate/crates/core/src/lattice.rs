//! Finite posets and bounded lattices with dense order tables.
//!
//! The order relation is stored as an `n x n` truth table so that every
//! query downstream (region classification, axiom scans, table builds)
//! is a constant-time lookup. Meet and join tables are materialized once
//! at validation time.

use std::fmt;

use thiserror::Error;

/// Index of an element within one lattice carrier.
///
/// An `Elem` is only meaningful together with the lattice it came from;
/// mixing elements of different carriers is a caller bug.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub usize);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LatticeError {
    #[error("carrier must contain at least one element")]
    NoElements,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}` in cover relation")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle: {}", .0.join(" < "))]
    CycleDetected(Vec<String>),
    #[error("elements `{x}` and `{y}` have no unique meet (maximal lower bounds: {})", .candidates.join(", "))]
    NoMeet {
        x: String,
        y: String,
        candidates: Vec<String>,
    },
    #[error("elements `{x}` and `{y}` have no unique join (minimal upper bounds: {})", .candidates.join(", "))]
    NoJoin {
        x: String,
        y: String,
        candidates: Vec<String>,
    },
    #[error("poset has no global bottom or top element")]
    NotBounded,
    #[error("`{a}` and `{b}` are not comparable")]
    NotComparable { a: String, b: String },
    #[error("neutral element must lie strictly between bottom and top")]
    BadNeutral,
}

/// Position of an element relative to a fixed neutral candidate `e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoordClass {
    /// `x < e`
    Below,
    /// `x = e`
    Equal,
    /// `x > e`
    Above,
    /// `x || e`
    Incomp,
}

/// Classification of an ordered pair; the 16 values partition `L x L`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RegionPair(pub CoordClass, pub CoordClass);

/// A finite partially ordered set: labelled elements plus a dense `leq` table.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x.0]
    }

    pub fn elem_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x.0 * self.n() + y.0]
    }

    /// Builds a poset directly from a full order table, checking the poset
    /// axioms. Used by the lattice enumerator, which produces closures itself.
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<Poset, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::NoElements);
        }
        assert_eq!(leq.len(), n * n, "order table size mismatch");
        for i in 0..n {
            for j in 0..n {
                if labels[i] == labels[j] && i != j {
                    return Err(LatticeError::DuplicateLabel(labels[i].clone()));
                }
            }
        }
        let p = Poset { labels, leq };
        for i in 0..n {
            if !p.leq(Elem(i), Elem(i)) {
                // not reachable from our own constructors; guard for from_leq callers
                return Err(LatticeError::CycleDetected(vec![p.labels[i].clone()]));
            }
            for j in 0..n {
                if i != j && p.leq(Elem(i), Elem(j)) && p.leq(Elem(j), Elem(i)) {
                    return Err(LatticeError::CycleDetected(vec![
                        p.labels[i].clone(),
                        p.labels[j].clone(),
                        p.labels[i].clone(),
                    ]));
                }
                for k in 0..n {
                    if p.leq(Elem(i), Elem(j))
                        && p.leq(Elem(j), Elem(k))
                        && !p.leq(Elem(i), Elem(k))
                    {
                        panic!("from_leq: relation is not transitively closed");
                    }
                }
            }
        }
        Ok(p)
    }
}

/// Builds a poset from labels and a cover (Hasse) relation.
///
/// The input need not be a transitive reduction; the reflexive-transitive
/// closure is always recomputed. Cycles in the closure are rejected.
pub fn build_poset<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Poset, LatticeError> {
    if labels.is_empty() {
        return Err(LatticeError::NoElements);
    }
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let n = labels.len();
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(LatticeError::DuplicateLabel(l.clone()));
        }
    }
    let index_of = |label: &str| -> Result<usize, LatticeError> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))
    };
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(covers.len());
    for (lo, hi) in covers {
        let lo = index_of(lo.as_ref())?;
        let hi = index_of(hi.as_ref())?;
        if lo == hi {
            return Err(LatticeError::CycleDetected(vec![labels[lo].clone()]));
        }
        edges.push((lo, hi));
    }
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(lo, hi) in &edges {
        leq[lo * n + hi] = true;
    }
    // Warshall closure
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i * n + j] && leq[j * n + i] {
                return Err(LatticeError::CycleDetected(cycle_through(
                    &labels, &edges, i, j,
                )));
            }
        }
    }
    Ok(Poset { labels, leq })
}

/// Reconstructs a concrete cycle through the cover edges for the error report.
fn cycle_through(labels: &[String], edges: &[(usize, usize)], i: usize, j: usize) -> Vec<String> {
    let path = |from: usize, to: usize| -> Vec<usize> {
        // BFS over cover edges
        let mut prev = vec![usize::MAX; labels.len()];
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(lo, hi) in edges {
                if lo == v && prev[hi] == usize::MAX && hi != from {
                    prev[hi] = v;
                    queue.push_back(hi);
                }
            }
        }
        let mut out = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            out.push(cur);
        }
        out.reverse();
        out
    };
    let mut cycle = path(i, j);
    let back = path(j, i);
    cycle.extend(back.into_iter().skip(1));
    cycle.into_iter().map(|v| labels[v].clone()).collect()
}

/// A validated bounded lattice: poset plus materialized meet/join tables.
#[derive(Clone, Debug)]
pub struct BoundedLattice {
    poset: Poset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

/// Checks that every pair has a unique meet and join and that global
/// bottom/top elements exist, materializing the tables.
pub fn validate_bounded_lattice(p: Poset) -> Result<BoundedLattice, LatticeError> {
    let n = p.n();
    let all: Vec<Elem> = (0..n).map(Elem).collect();
    let bottom = all
        .iter()
        .copied()
        .find(|&b| all.iter().all(|&x| p.leq(b, x)))
        .ok_or(LatticeError::NotBounded)?;
    let top = all
        .iter()
        .copied()
        .find(|&t| all.iter().all(|&x| p.leq(x, t)))
        .ok_or(LatticeError::NotBounded)?;

    let mut meet = vec![Elem(0); n * n];
    let mut join = vec![Elem(0); n * n];
    for x in 0..n {
        for y in 0..n {
            let (xe, ye) = (Elem(x), Elem(y));
            let lower: Vec<Elem> = all
                .iter()
                .copied()
                .filter(|&z| p.leq(z, xe) && p.leq(z, ye))
                .collect();
            let maximal: Vec<Elem> = lower
                .iter()
                .copied()
                .filter(|&z| !lower.iter().any(|&w| w != z && p.leq(z, w)))
                .collect();
            if maximal.len() != 1 {
                return Err(LatticeError::NoMeet {
                    x: p.label(xe).to_string(),
                    y: p.label(ye).to_string(),
                    candidates: maximal.iter().map(|&z| p.label(z).to_string()).collect(),
                });
            }
            meet[x * n + y] = maximal[0];

            let upper: Vec<Elem> = all
                .iter()
                .copied()
                .filter(|&z| p.leq(xe, z) && p.leq(ye, z))
                .collect();
            let minimal: Vec<Elem> = upper
                .iter()
                .copied()
                .filter(|&z| !upper.iter().any(|&w| w != z && p.leq(w, z)))
                .collect();
            if minimal.len() != 1 {
                return Err(LatticeError::NoJoin {
                    x: p.label(xe).to_string(),
                    y: p.label(ye).to_string(),
                    candidates: minimal.iter().map(|&z| p.label(z).to_string()).collect(),
                });
            }
            join[x * n + y] = minimal[0];
        }
    }
    Ok(BoundedLattice {
        poset: p,
        meet,
        join,
        bottom,
        top,
    })
}

impl BoundedLattice {
    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, x: Elem) -> &str {
        self.poset.label(x)
    }

    pub fn elem_by_label(&self, label: &str) -> Option<Elem> {
        self.poset.elem_by_label(label)
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n()).map(Elem)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.poset.leq(x, y)
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn incomp(&self, x: Elem, y: Elem) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x.0 * self.n() + y.0]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x.0 * self.n() + y.0]
    }

    /// `{x : a <= x <= b}` with endpoints included per the flags.
    pub fn interval(
        &self,
        a: Elem,
        b: Elem,
        lower_closed: bool,
        upper_closed: bool,
    ) -> Result<Vec<Elem>, LatticeError> {
        if !self.leq(a, b) {
            return Err(LatticeError::NotComparable {
                a: self.label(a).to_string(),
                b: self.label(b).to_string(),
            });
        }
        Ok(self
            .elems()
            .filter(|&x| {
                self.leq(a, x)
                    && self.leq(x, b)
                    && (lower_closed || x != a)
                    && (upper_closed || x != b)
            })
            .collect())
    }

    /// `I_e`: the elements incomparable with `e`.
    pub fn incomparables(&self, e: Elem) -> Vec<Elem> {
        self.elems().filter(|&x| self.incomp(x, e)).collect()
    }

    /// True iff `x || y` for every `x` in `a` and `y` in `b` (vacuously true
    /// when either set is empty).
    pub fn sets_incomparable(&self, a: &[Elem], b: &[Elem]) -> bool {
        a.iter().all(|&x| b.iter().all(|&y| self.incomp(x, y)))
    }

    pub fn classify(&self, e: Elem, x: Elem) -> CoordClass {
        if x == e {
            CoordClass::Equal
        } else if self.leq(x, e) {
            CoordClass::Below
        } else if self.leq(e, x) {
            CoordClass::Above
        } else {
            CoordClass::Incomp
        }
    }

    pub fn classify_pair(&self, e: Elem, x: Elem, y: Elem) -> RegionPair {
        RegionPair(self.classify(e, x), self.classify(e, y))
    }

    /// Cover relation (transitive reduction) as `(lower, upper)` pairs.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elems() {
            for y in self.elems() {
                if self.lt(x, y)
                    && !self
                        .elems()
                        .any(|z| z != x && z != y && self.lt(x, z) && self.lt(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// A fixed linear extension of the order: elements sorted by down-set
    /// size, ties broken by index. All deterministic scans use this order.
    pub fn linear_ext(&self) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.elems().collect();
        let down = |x: Elem| self.elems().filter(|&z| self.leq(z, x)).count();
        v.sort_by_key(|&x| (down(x), x.0));
        v
    }
}
