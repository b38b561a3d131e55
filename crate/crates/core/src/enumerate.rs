//! Enumeration of all bounded lattices with a given carrier size, one per
//! isomorphism class, and the canonical certificate used for deduplication.
//!
//! Generation walks every strict upper-triangular relation on indices
//! (every finite poset admits a linear extension, so every isomorphism
//! class appears), keeps the transitively closed ones, filters by the
//! lattice property, and dedupes by certificate.

use std::collections::HashSet;

use thiserror::Error;

use crate::lattice::{validate_bounded_lattice, BoundedLattice, Elem, Poset};

/// Hard cap on the carrier size for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 7;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EnumerateError {
    #[error("carrier size {0} exceeds the enumeration cap {ENUMERATION_CAP}")]
    CapExceeded(usize),
    #[error("carrier size must be at least 1")]
    Empty,
}

/// A byte certificate identifying a lattice up to isomorphism: the
/// lexicographically least bit-packed order matrix over all relabelings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm(pub Vec<u8>);

/// Computes the certificate. Candidate permutations are pruned by an
/// iteratively refined coloring (down-set/up-set sizes, then neighbor color
/// multisets); only color-preserving relabelings are tried, with the full
/// search as the fallback when the coloring does not discriminate.
pub fn canonical_form(lattice: &BoundedLattice) -> CanonicalForm {
    let n = lattice.n();
    let leq = |x: usize, y: usize| lattice.leq(Elem(x), Elem(y));

    // iterative color refinement
    let mut colors: Vec<u64> = (0..n)
        .map(|x| {
            let down = (0..n).filter(|&z| leq(z, x)).count() as u64;
            let up = (0..n).filter(|&z| leq(x, z)).count() as u64;
            down << 32 | up
        })
        .collect();
    for _ in 0..n {
        let mut sigs: Vec<(u64, Vec<u64>, Vec<u64>)> = (0..n)
            .map(|x| {
                let mut below: Vec<u64> =
                    (0..n).filter(|&z| leq(z, x)).map(|z| colors[z]).collect();
                let mut above: Vec<u64> =
                    (0..n).filter(|&z| leq(x, z)).map(|z| colors[z]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (colors[x], below, above)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u64> = sigs
            .drain(..)
            .map(|s| uniq.binary_search(&s).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }

    // group positions by color, in color order; permutations permute within groups
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (colors[x], x));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match groups.last_mut() {
            Some(g) if colors[g[0]] == colors[x] => g.push(x),
            _ => groups.push(vec![x]),
        }
    }

    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    fn descend(
        groups: &[Vec<usize>],
        gi: usize,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        n: usize,
        leq: &dyn Fn(usize, usize) -> bool,
        best: &mut Option<Vec<u8>>,
    ) {
        if gi == groups.len() {
            // perm[i] = original element placed at canonical position i
            let mut bytes = vec![0u8; (n * n).div_ceil(8)];
            for i in 0..n {
                for j in 0..n {
                    if leq(perm[i], perm[j]) {
                        let bit = i * n + j;
                        bytes[bit / 8] |= 1 << (bit % 8);
                    }
                }
            }
            if best.as_ref().is_none_or(|b| bytes < *b) {
                *best = Some(bytes);
            }
            return;
        }
        let group = &groups[gi];
        // all orderings of this color class
        #[allow(clippy::too_many_arguments)]
        fn perms_of(
            group: &[usize],
            used: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            groups: &[Vec<usize>],
            gi: usize,
            n: usize,
            leq: &dyn Fn(usize, usize) -> bool,
            best: &mut Option<Vec<u8>>,
            picked: usize,
        ) {
            if picked == group.len() {
                descend(groups, gi + 1, used, perm, n, leq, best);
                return;
            }
            for &x in group {
                if !used[x] {
                    used[x] = true;
                    perm.push(x);
                    perms_of(group, used, perm, groups, gi, n, leq, best, picked + 1);
                    perm.pop();
                    used[x] = false;
                }
            }
        }
        perms_of(group, used, perm, groups, gi, n, leq, best, 0);
    }
    let mut used = vec![false; n];
    descend(&groups, 0, &mut used, &mut perm, n, &leq, &mut best);
    CanonicalForm(best.unwrap())
}

/// Yields one representative per isomorphism class of bounded lattices on
/// `n` elements, in a deterministic order.
pub fn enumerate_bounded_lattices(n: usize) -> Result<Vec<BoundedLattice>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::Empty);
    }
    if n > ENUMERATION_CAP {
        return Err(EnumerateError::CapExceeded(n));
    }
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        // up[i]: bitset of j > i with i < j in the relation
        let mut up = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        // transitivity: i < j implies up[j] subset of up[i]
        let transitive =
            (0..n).all(|i| (i + 1..n).all(|j| up[i] >> j & 1 == 0 || up[j] & !up[i] == 0));
        if !transitive {
            continue;
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
            for j in i + 1..n {
                if up[i] >> j & 1 == 1 {
                    leq[i * n + j] = true;
                }
            }
        }
        let poset = Poset::from_leq(labels.clone(), leq).expect("relation is a poset");
        let Ok(lattice) = validate_bounded_lattice(poset) else {
            continue;
        };
        if seen.insert(canonical_form(&lattice)) {
            out.push(lattice);
        }
    }
    Ok(out)
}
