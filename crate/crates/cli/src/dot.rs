//! Hasse diagrams in DOT. Edges are covering pairs `a -> b` with `a < b`,
//! laid out bottom to top; nodes and edges follow point indices.

use std::fmt::Write as _;

use t0kit::FiniteSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn hasse_dot(name: &str, labels: &[String], x: &FiniteSpace) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for l in labels {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    let mut edges = x.covers();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "  {} -> {};", quote(&labels[a]), quote(&labels[b])).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn sigma2_and_v() {
        let s = hasse_dot("S", &names(&["a", "b"]), &FiniteSpace::sigma2());
        assert_eq!(
            s,
            "digraph \"S\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\";\n}\n"
        );
        let v = FiniteSpace::from_generating_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        let d = hasse_dot("V", &names(&["l", "r", "t"]), &v);
        let edges: Vec<&str> = d.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edges, ["  \"l\" -> \"t\";", "  \"r\" -> \"t\";"]);
    }

    #[test]
    fn quoting() {
        let d = hasse_dot("q\"x", &names(&["(1,∞)"]), &FiniteSpace::point());
        assert!(d.starts_with("digraph \"q\\\"x\" {"));
        assert!(d.contains("\"(1,∞)\";"));
    }
}
