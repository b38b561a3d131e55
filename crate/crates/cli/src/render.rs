//! Text renderings: tab-separated Cayley tables and DOT Hasse diagrams.

use unilat::lattice::{BoundedLattice, Elem};
use unilat::norms::OpTable;

/// Renders `op` as a TSV grid with a header row and column. `order` must be
/// a permutation of the carrier; the file declaration order is the usual
/// choice.
pub fn render_cayley_table(
    lattice: &BoundedLattice,
    op: &OpTable,
    order: &[Elem],
) -> Result<String, String> {
    let mut seen = vec![false; lattice.n()];
    for &x in order {
        if x.0 >= lattice.n() || seen[x.0] {
            return Err("order is not a permutation of the carrier".into());
        }
        seen[x.0] = true;
    }
    if order.len() != lattice.n() {
        return Err("order is not a permutation of the carrier".into());
    }
    let mut out = String::new();
    for &x in order {
        out.push('\t');
        out.push_str(lattice.label(x));
    }
    out.push('\n');
    for &x in order {
        out.push_str(lattice.label(x));
        for &y in order {
            out.push('\t');
            out.push_str(lattice.label(op.get(x, y)));
        }
        out.push('\n');
    }
    Ok(out)
}

/// The Hasse diagram as a DOT digraph, edges pointing upward from each
/// element to its covers.
pub fn export_dot(lattice: &BoundedLattice) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for label in lattice.labels() {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for (a, b) in lattice.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            lattice.label(a),
            lattice.label(b)
        ));
    }
    out.push_str("}\n");
    out
}
