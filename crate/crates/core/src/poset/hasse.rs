use std::fmt::Write;

use crate::error::Result;

use super::PosetElement;

/// Covering relations of a finite set of elements, computed within the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    /// Input order with duplicates removed.
    pub nodes: Vec<PosetElement>,
    /// `(lower, upper)` index pairs in lexicographic order.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn new(elements: &[PosetElement]) -> Result<Self> {
        let mut nodes: Vec<PosetElement> = Vec::new();
        for p in elements {
            if !nodes.contains(p) {
                nodes.push(p.clone());
            }
        }
        let k = nodes.len();
        let mut lt = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                lt[i][j] = i != j && nodes[i].leq(&nodes[j])?;
            }
        }
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if lt[i][j] && !(0..k).any(|m| lt[i][m] && lt[m][j]) {
                    edges.push((i, j));
                }
            }
        }
        Ok(HasseDiagram { nodes, edges })
    }

    /// Kind letter and dimension, e.g. `h1`.
    pub fn label(&self, i: usize) -> String {
        let p = &self.nodes[i];
        format!("{}{}", p.kind().letter(), p.dim())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let tip = p.to_string().replace('"', "\\\"");
            writeln!(out, "  n{i} [label=\"{}\", tooltip=\"{tip}\"];", self.label(i)).unwrap();
        }
        for (i, j) in &self.edges {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Graphviz Hasse diagram, edges drawn from lower to upper.
pub fn hasse_dot(elements: &[PosetElement]) -> Result<String> {
    Ok(HasseDiagram::new(elements)?.to_dot())
}
