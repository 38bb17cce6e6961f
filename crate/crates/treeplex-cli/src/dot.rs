//! DOT (Graphviz) rendering of Hasse diagrams.

use treeplex_core::FinitePoset;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Render the cover relation of `poset` as a DOT digraph drawn bottom-up.
pub fn poset_to_dot(name: &str, poset: &FinitePoset) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(name)));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, key) in poset.elements().iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(key)));
    }
    for &(lo, hi) in poset.covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use treeplex_core::{associahedron, boolean_star, build_pnr_poset};

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn three_mark_poset_renders() {
        let dot = poset_to_dot("pnr-3", &build_pnr_poset(3).unwrap());
        assert_eq!(count(&dot, "[label="), 5);
        assert_eq!(count(&dot, " -> "), 6, "each of 2 minima under each of 3 maxima");
        assert!(dot.starts_with("digraph \"pnr-3\" {"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn pentagon_face_lattice_renders() {
        let dot = poset_to_dot("assoc-4", &associahedron(4).unwrap());
        assert_eq!(count(&dot, "[label="), 11);
    }

    #[test]
    fn boolean_star_renders() {
        let dot = poset_to_dot("bool-star-3", &boolean_star(3));
        assert_eq!(count(&dot, "[label="), 7);
        assert_eq!(count(&dot, " -> "), 9, "subset lattice covers 3 + 6");
    }
}
