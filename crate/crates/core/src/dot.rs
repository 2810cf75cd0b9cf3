//! Graphviz export of Hasse diagrams.

use std::fmt::Write;

use crate::completion::SetFamilyLattice;
use crate::Poset;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Length of the longest chain ending at each element.
fn levels(p: &Poset) -> Vec<usize> {
    let mut level = vec![0; p.len()];
    for x in p.linear_extension() {
        level[x] = p
            .lower_covers(x)
            .into_iter()
            .map(|y| level[y] + 1)
            .max()
            .unwrap_or(0);
    }
    level
}

/// The covering relation as a bottom-up digraph, one rank group per level.
/// Output depends only on the poset.
pub fn poset_to_dot(p: &Poset, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..p.len() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", escape(p.label(x)));
    }
    let level = levels(p);
    let top = level.iter().copied().max().unwrap_or(0);
    for l in 0..=top {
        let nodes: Vec<String> = (0..p.len())
            .filter(|&x| level[x] == l)
            .map(|x| format!("n{x};"))
            .collect();
        if nodes.len() > 1 {
            let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
        }
    }
    for &(a, b) in p.covering_relation() {
        let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
    }
    out.push_str("}\n");
    out
}

pub fn family_to_dot(f: &SetFamilyLattice, name: &str) -> String {
    poset_to_dot(f.lattice().poset(), name)
}
