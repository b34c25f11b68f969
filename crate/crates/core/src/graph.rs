//! Edges of `K_{2n}` over group vertices and the maps defined on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Subgroup};

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: GroupElement,
    v: GroupElement,
}

impl Edge {
    pub fn new(x: GroupElement, y: GroupElement) -> Result<Self> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Self { u: x, v: y }),
            std::cmp::Ordering::Greater => Ok(Self { u: y, v: x }),
            std::cmp::Ordering::Equal => Err(Error::LoopEdge(x)),
        }
    }

    pub fn u(self) -> GroupElement {
        self.u
    }

    pub fn v(self) -> GroupElement {
        self.v
    }

    pub fn endpoints(self) -> [GroupElement; 2] {
        [self.u, self.v]
    }

    pub fn touches(self, x: GroupElement) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[GroupElement; 2]>::deserialize(deserializer)?;
        Edge::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// `{xy^-1, yx^-1}` for a long edge, `{xy^-1}` for a short one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DifferenceSet {
    Short(GroupElement),
    /// Two mutually inverse elements, smaller first.
    Long(GroupElement, GroupElement),
}

impl DifferenceSet {
    pub fn is_short(self) -> bool {
        matches!(self, Self::Short(_))
    }

    pub fn len(self) -> usize {
        match self {
            Self::Short(_) => 1,
            Self::Long(..) => 2,
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn elements(self) -> impl Iterator<Item = GroupElement> {
        let (x, y) = match self {
            Self::Short(x) => (x, None),
            Self::Long(x, y) => (x, Some(y)),
        };
        std::iter::once(x).chain(y)
    }

    pub fn contains(self, g: GroupElement) -> bool {
        self.elements().any(|x| x == g)
    }
}

impl fmt::Display for DifferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Short(x) => write!(f, "{{{x}}}"),
            Self::Long(x, y) => write!(f, "{{{x},{y}}}"),
        }
    }
}

/// A set of canonical edges, iterated in edge order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    /// Right translate `S * g`.
    pub fn translate(&self, group: &Group, g: GroupElement) -> EdgeSet {
        self.iter().map(|&e| act(group, e, g)).collect()
    }

    /// All vertices touched by an edge.
    pub fn vertices(&self) -> BTreeSet<GroupElement> {
        self.iter().flat_map(|e| e.endpoints()).collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::collections::btree_set::IntoIter<Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub fn delta(group: &Group, e: Edge) -> DifferenceSet {
    let (x, y) = (e.u, e.v);
    let d1 = group.mul(x, group.inv(y));
    let d2 = group.mul(y, group.inv(x));
    match d1.cmp(&d2) {
        std::cmp::Ordering::Equal => DifferenceSet::Short(d1),
        std::cmp::Ordering::Less => DifferenceSet::Long(d1, d2),
        std::cmp::Ordering::Greater => DifferenceSet::Long(d2, d1),
    }
}

pub fn is_short(group: &Group, e: Edge) -> bool {
    delta(group, e).is_short()
}

/// The involution `x^-1 y` fixing a short edge `[x,y]`, `None` for long edges.
pub fn associated_involution(group: &Group, e: Edge) -> Option<GroupElement> {
    is_short(group, e).then(|| group.mul(group.inv(e.u), e.v))
}

/// Both endpoints of a long edge; the smaller endpoint of a short edge.
pub fn phi(group: &Group, e: Edge) -> Vec<GroupElement> {
    if is_short(group, e) {
        vec![e.u]
    } else {
        vec![e.u, e.v]
    }
}

/// `[x,y] * g = [xg, yg]`.
pub fn act(group: &Group, e: Edge, g: GroupElement) -> Edge {
    let (x, y) = (group.mul(e.u, g), group.mul(e.v, g));
    Edge::new(x, y).expect("right translation is injective")
}

pub fn orbit(group: &Group, e: Edge, h: &Subgroup) -> EdgeSet {
    h.elements().iter().map(|&g| act(group, e, g)).collect()
}

/// Orbit under the whole group.
pub fn full_orbit(group: &Group, e: Edge) -> EdgeSet {
    group.elements().map(|g| act(group, e, g)).collect()
}

/// Every edge of `K_{2n}` in canonical order.
pub fn complete_graph(group: &Group) -> impl Iterator<Item = Edge> + '_ {
    let n = group.order();
    (0..n).flat_map(move |i| {
        (i + 1..n).map(move |j| Edge {
            u: group.element_at(i),
            v: group.element_at(j),
        })
    })
}

/// Disjoint-set forest over vertex indices.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already connected.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Number of connected components of the graph on all `2n` vertices.
pub fn component_count<'a>(group: &Group, edges: impl IntoIterator<Item = &'a Edge>) -> usize {
    let mut uf = UnionFind::new(group.order());
    for e in edges {
        uf.union(group.index(e.u), group.index(e.v));
    }
    uf.components()
}

/// Vertex sets of the connected components, ordered by smallest vertex.
pub fn components<'a>(
    group: &Group,
    edges: impl IntoIterator<Item = &'a Edge>,
) -> Vec<BTreeSet<GroupElement>> {
    let mut uf = UnionFind::new(group.order());
    for e in edges {
        uf.union(group.index(e.u), group.index(e.v));
    }
    let mut by_root = std::collections::BTreeMap::<usize, BTreeSet<GroupElement>>::new();
    for x in group.elements() {
        let root = uf.find(group.index(x));
        by_root.entry(root).or_default().insert(x);
    }
    let mut comps: Vec<_> = by_root.into_values().collect();
    comps.sort();
    comps
}

/// True iff every vertex is covered and the graph is connected.
pub fn is_spanning_connected(group: &Group, edges: &EdgeSet) -> bool {
    !edges.is_empty() && component_count(group, edges) == 1
}

/// True iff `edges` covers every vertex exactly once.
pub fn is_perfect_matching(group: &Group, edges: &EdgeSet) -> bool {
    if edges.len() * 2 != group.order() {
        return false;
    }
    let mut seen = vec![false; group.order()];
    edges
        .iter()
        .flat_map(|e| e.endpoints())
        .all(|x| group.contains(x) && !std::mem::replace(&mut seen[group.index(x)], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupFamily;

    fn q8() -> Group {
        Group::new(GroupFamily::Dicyclic(2)).unwrap()
    }

    fn edge(x: GroupElement, y: GroupElement) -> Edge {
        Edge::new(x, y).unwrap()
    }

    #[test]
    fn canonical_order() {
        let g = q8();
        assert_eq!(edge(g.ba(1), g.a(3)), edge(g.a(3), g.ba(1)));
        assert!(Edge::new(g.a(1), g.a(1)).is_err());
    }

    #[test]
    fn difference_sets() {
        let g = q8();
        assert_eq!(
            delta(&g, edge(g.a(0), g.a(2))),
            DifferenceSet::Short(g.a(2))
        );
        assert_eq!(
            delta(&g, edge(g.a(0), g.ba(1))),
            DifferenceSet::Long(g.ba(1), g.ba(3))
        );
        assert_eq!(
            delta(&g, edge(g.a(1), g.a(3))),
            DifferenceSet::Short(g.a(2))
        );
    }

    #[test]
    fn phi_values() {
        let g = q8();
        assert_eq!(phi(&g, edge(g.a(0), g.a(1))), vec![g.a(0), g.a(1)]);
        assert_eq!(phi(&g, edge(g.a(0), g.a(2))), vec![g.a(0)]);
        assert_eq!(phi(&g, edge(g.ba(1), g.a(3))), vec![g.a(3), g.ba(1)]);
    }

    #[test]
    fn translation() {
        let g = q8();
        assert_eq!(act(&g, edge(g.a(0), g.a(1)), g.a(1)), edge(g.a(1), g.a(2)));
        let e = edge(g.a(0), g.ba(1));
        assert_eq!(act(&g, e, g.identity()), e);
        assert_eq!(act(&g, e, g.a(1)), edge(g.a(1), g.ba(2)));
    }

    #[test]
    fn orbit_sizes() {
        let g = q8();
        let full = g.full_subgroup();
        assert_eq!(orbit(&g, edge(g.a(0), g.a(2)), &full).len(), 4);
        assert_eq!(orbit(&g, edge(g.a(0), g.a(1)), &full).len(), 8);
        let e = edge(g.a(0), g.a(1));
        assert_eq!(orbit(&g, e, &g.subgroup(&[])), EdgeSet::from_iter([e]));
    }

    #[test]
    fn connectivity() {
        let g = q8();
        let star: EdgeSet = g.elements().skip(1).map(|x| edge(g.a(0), x)).collect();
        assert!(is_spanning_connected(&g, &star));
        assert!(!is_spanning_connected(&g, &EdgeSet::new()));
    }

    #[test]
    fn matchings() {
        let g = q8();
        let m: EdgeSet = [
            edge(g.a(0), g.a(2)),
            edge(g.a(1), g.a(3)),
            edge(g.ba(0), g.ba(2)),
            edge(g.ba(1), g.ba(3)),
        ]
        .into_iter()
        .collect();
        assert!(is_perfect_matching(&g, &m));
        assert_eq!(m, full_orbit(&g, edge(g.a(0), g.a(2))));
        assert!(!is_perfect_matching(
            &g,
            &EdgeSet::from_iter([edge(g.a(0), g.a(2))])
        ));
        let clash: EdgeSet = [
            edge(g.a(0), g.a(2)),
            edge(g.a(0), g.a(3)),
            edge(g.ba(0), g.ba(2)),
            edge(g.ba(1), g.ba(3)),
        ]
        .into_iter()
        .collect();
        assert!(!is_perfect_matching(&g, &clash));
    }

    #[test]
    fn complete_graph_size() {
        let g = q8();
        assert_eq!(complete_graph(&g).count(), 28);
    }
}
