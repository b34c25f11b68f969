#![allow(dead_code)]

use regfact::graph::Edge;
use regfact::group::{GroupElement, GroupFamily};
use regfact::EdgeSet;
use serde::Deserialize;

/// Every instance the end-to-end checks run over.
pub const GRID: &[GroupFamily] = &[
    GroupFamily::Dicyclic(2),
    GroupFamily::Dicyclic(3),
    GroupFamily::Dicyclic(4),
    GroupFamily::Dicyclic(5),
    GroupFamily::Dicyclic(6),
    GroupFamily::Dicyclic(7),
    GroupFamily::Dicyclic(8),
    GroupFamily::Dicyclic(10),
    GroupFamily::Dicyclic(12),
    GroupFamily::Abelian(4),
    GroupFamily::Abelian(8),
    GroupFamily::Abelian(12),
    GroupFamily::Abelian(16),
    GroupFamily::Abelian(20),
    GroupFamily::Abelian(24),
    GroupFamily::Abelian(32),
    GroupFamily::Semidihedral(8),
    GroupFamily::Semidihedral(16),
    GroupFamily::Semidihedral(32),
    GroupFamily::Modular(8),
    GroupFamily::Modular(16),
    GroupFamily::Modular(32),
];

/// A hand-drawn graph: `R + e1` (or `R*j + e2` for the second Q8 drawing)
/// with the colour each edge was drawn in.
#[derive(Debug, Deserialize)]
pub struct Drawn {
    pub family: String,
    pub parameter: u32,
    pub graph: usize,
    pub edges: Vec<[GroupElement; 2]>,
    pub styles: Vec<String>,
}

impl Drawn {
    pub fn family(&self) -> GroupFamily {
        GroupFamily::from_name(&self.family, self.parameter).unwrap()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges
            .iter()
            .map(|&[x, y]| Edge::new(x, y).unwrap())
            .collect()
    }

    pub fn styled(&self, style: &str) -> EdgeSet {
        self.edges
            .iter()
            .zip(&self.styles)
            .filter(|(_, s)| *s == style)
            .map(|(&[x, y], _)| Edge::new(x, y).unwrap())
            .collect()
    }
}

pub fn drawn() -> Vec<Drawn> {
    serde_json::from_str(include_str!("../fixtures/drawn_graphs.json")).unwrap()
}

pub fn drawing(family: GroupFamily, graph: usize) -> Drawn {
    drawn()
        .into_iter()
        .find(|d| d.family() == family && d.graph == graph)
        .unwrap()
}

pub fn edges(pairs: &[(&str, &str)]) -> EdgeSet {
    pairs
        .iter()
        .map(|(x, y)| Edge::new(x.parse().unwrap(), y.parse().unwrap()).unwrap())
        .collect()
}
