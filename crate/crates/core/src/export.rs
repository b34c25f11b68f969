//! Text renderings: DOT, plain edge lists, summaries and figure graphs.

use std::fmt::Write as _;

use crate::constructions::Construction;
use crate::graph::{self, Edge, EdgeSet};
use crate::group::Group;

/// One undirected DOT graph per tree; each edge carries its factor index as
/// the `color` attribute.
pub fn trees_dot(c: &Construction) -> String {
    let mut out = String::new();
    for (t, tree) in c.trees.trees.iter().enumerate() {
        let _ = writeln!(out, "graph tree_{t} {{");
        for e in tree {
            let colour = c
                .factorization
                .factor_of(*e)
                .expect("tree edges are coloured");
            let _ = writeln!(out, "  \"{}\" -- \"{}\" [color={colour}];", e.u(), e.v());
        }
        out.push_str("}\n");
    }
    out
}

/// `# factor i` and `# tree i` sections with one `u v` line per edge.
pub fn edgelist(c: &Construction) -> String {
    let mut out = String::new();
    let mut section = |name: &str, i: usize, set: &EdgeSet| {
        let _ = writeln!(out, "# {name} {i}");
        for e in set {
            let _ = writeln!(out, "{} {}", e.u(), e.v());
        }
    };
    for (i, f) in c.factorization.factors.iter().enumerate() {
        section("factor", i, f);
    }
    for (i, t) in c.trees.trees.iter().enumerate() {
        section("tree", i, t);
    }
    out
}

pub fn summary(c: &Construction) -> String {
    let g = &c.group;
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", c.family);
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(out, "starter blocks: {}", c.starter.blocks.len());
    let _ = writeln!(out, "factors: {}", c.factorization.len());
    let _ = writeln!(out, "trees: {}", c.trees.len());
    let _ = writeln!(out, "edges per tree: {}", c.trees.t1.len());
    let _ = writeln!(out, "base graph edges: {}", c.lemma.base_graph.len());
    let _ = writeln!(out, "e1: {}", c.lemma.e1);
    let _ = writeln!(out, "e2: {}", c.lemma.e2);
    let _ = writeln!(
        out,
        "base graph components: {}",
        graph::component_count(g, &c.lemma.base_graph)
    );
    out
}

/// Style class of an edge in a figure graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureStyle {
    /// Component of `R` containing the smallest vertex.
    First,
    /// Any other component of `R`.
    Second,
    Bridge,
}

impl FigureStyle {
    pub fn colour(self) -> &'static str {
        match self {
            Self::First => "blue",
            Self::Second => "green",
            Self::Bridge => "red",
        }
    }
}

/// Edges of `base + bridge`, each tagged with its style.
pub fn figure_edges(group: &Group, base: &EdgeSet, bridge: Edge) -> Vec<(Edge, FigureStyle)> {
    let comps = graph::components(group, base);
    let first = comps
        .iter()
        .find(|c| base.iter().any(|e| c.contains(&e.u())))
        .cloned()
        .unwrap_or_default();
    let mut out: Vec<_> = base
        .iter()
        .map(|&e| {
            let style = if first.contains(&e.u()) {
                FigureStyle::First
            } else {
                FigureStyle::Second
            };
            (e, style)
        })
        .collect();
    out.push((bridge, FigureStyle::Bridge));
    out
}

fn figure_graph(out: &mut String, name: &str, group: &Group, base: &EdgeSet, bridge: Edge) {
    let _ = writeln!(out, "graph {name} {{");
    let _ = writeln!(out, "  node [shape=circle];");
    for x in group.elements() {
        let _ = writeln!(out, "  \"{x}\";");
    }
    for (e, style) in figure_edges(group, base, bridge) {
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [color={}, class=\"{}\"];",
            e.u(),
            e.v(),
            style.colour(),
            format!("{style:?}").to_lowercase()
        );
    }
    out.push_str("}\n");
}

/// `R + e1` and `R*j + e2`, components of the base graph in blue and green
/// and the bridge in red.
pub fn figure_dot(c: &Construction) -> String {
    let g = &c.group;
    let mut out = String::new();
    figure_graph(&mut out, "T1", g, &c.lemma.base_graph, c.lemma.e1);
    let rj = c.lemma.base_graph.translate(g, c.lemma.central_involution);
    figure_graph(&mut out, "T2", g, &rj, c.lemma.e2);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupFamily;

    fn q8() -> Construction {
        Construction::new(GroupFamily::Dicyclic(2)).unwrap()
    }

    #[test]
    fn dot_has_one_graph_per_tree() {
        let dot = trees_dot(&q8());
        assert_eq!(dot.matches("graph tree_").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 28);
        assert!(dot.contains("\"1\" -- \"a^2\" [color=6];"));
    }

    #[test]
    fn dot_is_deterministic() {
        assert_eq!(trees_dot(&q8()), trees_dot(&q8()));
    }

    #[test]
    fn edgelist_sections() {
        let text = edgelist(&q8());
        assert_eq!(
            text.lines().filter(|l| l.starts_with("# factor")).count(),
            7
        );
        assert_eq!(text.lines().filter(|l| l.starts_with("# tree")).count(), 4);
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 56);
    }

    #[test]
    fn summary_counts() {
        let s = summary(&q8());
        assert!(s.contains("order: 8"));
        assert!(s.contains("factors: 7"));
        assert!(s.contains("trees: 4"));
    }

    #[test]
    fn figure_styles() {
        let c = Construction::new(GroupFamily::Dicyclic(5)).unwrap();
        let edges = figure_edges(&c.group, &c.lemma.base_graph, c.lemma.e1);
        assert_eq!(edges.len(), 19);
        assert_eq!(
            edges
                .iter()
                .filter(|(_, s)| *s == FigureStyle::Bridge)
                .count(),
            1
        );
        assert!(edges.iter().any(|(_, s)| *s == FigureStyle::First));
        assert!(edges.iter().any(|(_, s)| *s == FigureStyle::Second));
        let dot = figure_dot(&c);
        assert_eq!(dot.matches("color=red").count(), 2);
    }
}
