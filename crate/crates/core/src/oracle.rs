//! Brute-force ground truth for small instances.
//!
//! Nothing here reuses the colouring or expansion code: the recount works on
//! a dense matrix, and the starter search builds its own multiplication
//! table and difference sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet};
use crate::group::{Group, GroupElement, GroupFamily, Subgroup};
use crate::starter::{Starter, StarterBlock};

/// Edge multiplicities across a list of edge sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecountReport {
    /// Edges seen more than once, with their count.
    pub duplicated: Vec<(Edge, usize)>,
    pub missing: Vec<Edge>,
    /// Edges with an endpoint outside the group.
    pub foreign: Vec<Edge>,
    pub total_edges: usize,
}

impl RecountReport {
    pub fn passed(&self) -> bool {
        self.duplicated.is_empty() && self.missing.is_empty() && self.foreign.is_empty()
    }
}

impl fmt::Display for RecountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "recount: all {} edges counted once", self.total_edges);
        }
        write!(
            f,
            "recount: {} duplicated, {} missing, {} foreign",
            self.duplicated.len(),
            self.missing.len(),
            self.foreign.len()
        )
    }
}

/// Counts every edge of `K_{2n}` across `sets`; passes iff each count is 1.
pub fn recount_partition(sets: &[EdgeSet], group: &Group) -> RecountReport {
    let m = group.cyclic_order() as usize;
    let v = 2 * m;
    let slot = |x: GroupElement| -> Option<usize> {
        (x.eps() <= 1 && (x.k() as usize) < m).then(|| x.eps() as usize * m + x.k() as usize)
    };
    let mut count = vec![0usize; v * v];
    let mut foreign = Vec::new();
    for &e in sets.iter().flatten() {
        match (slot(e.u()), slot(e.v())) {
            (Some(i), Some(j)) => count[i.min(j) * v + i.max(j)] += 1,
            _ => foreign.push(e),
        }
    }
    let element = |i: usize| GroupElement::new(i >= m, (i % m) as u32);
    let mut duplicated = Vec::new();
    let mut missing = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            let c = count[i * v + j];
            if c == 1 {
                continue;
            }
            let e = Edge::new(element(i), element(j)).expect("distinct indices");
            if c == 0 {
                missing.push(e);
            } else {
                duplicated.push((e, c));
            }
        }
    }
    RecountReport {
        duplicated,
        missing,
        foreign,
        total_edges: v * (v - 1) / 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    NotClosed {
        x: GroupElement,
        y: GroupElement,
    },
    Associativity {
        x: GroupElement,
        y: GroupElement,
        z: GroupElement,
    },
    Identity(GroupElement),
    Inverse(GroupElement),
    Relation(&'static str),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotClosed { x, y } => write!(f, "{x} * {y} is not a normal form"),
            Self::Associativity { x, y, z } => write!(f, "({x} {y}) {z} != {x} ({y} {z})"),
            Self::Identity(x) => write!(f, "identity law fails at {x}"),
            Self::Inverse(x) => write!(f, "inverse law fails at {x}"),
            Self::Relation(r) => write!(f, "relation {r} fails"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub triples: usize,
    pub relations: Vec<&'static str>,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Associativity over all `|G|^3` triples, identity and inverse laws, and
/// the defining relations of the family.
pub fn exhaustive_group_axiom_check(group: &Group) -> AxiomReport {
    let els: Vec<GroupElement> = group.elements().collect();
    let one = group.identity();
    let mut violations = Vec::new();

    let n = els.len();
    let mut table = vec![one; n * n];
    for (i, &x) in els.iter().enumerate() {
        for (j, &y) in els.iter().enumerate() {
            let z = group.mul(x, y);
            if !group.contains(z) {
                violations.push(AxiomViolation::NotClosed { x, y });
            }
            table[i * n + j] = z;
        }
    }
    if !violations.is_empty() {
        return AxiomReport {
            triples: 0,
            relations: Vec::new(),
            violations,
        };
    }
    let idx = |x: GroupElement| group.index(x);
    let mut triples = 0;
    for i in 0..n {
        for j in 0..n {
            let xy = idx(table[i * n + j]);
            for k in 0..n {
                triples += 1;
                let yz = idx(table[j * n + k]);
                if table[xy * n + k] != table[i * n + yz] {
                    violations.push(AxiomViolation::Associativity {
                        x: els[i],
                        y: els[j],
                        z: els[k],
                    });
                }
            }
        }
    }
    for &x in &els {
        if group.mul(x, one) != x || group.mul(one, x) != x {
            violations.push(AxiomViolation::Identity(x));
        }
        let y = group.inv(x);
        if group.mul(x, y) != one || group.mul(y, x) != one {
            violations.push(AxiomViolation::Inverse(x));
        }
    }

    let a = group.a(1);
    let b = group.ba(0);
    let m = u64::from(group.cyclic_order());
    let pow = |x, e| group.pow(x, e);
    let mut relations = Vec::new();
    let mut relation = |name: &'static str, holds: bool| {
        relations.push(name);
        if !holds {
            violations.push(AxiomViolation::Relation(name));
        }
    };
    relation(
        "ord(a) = m",
        pow(a, m) == one && (1..m).all(|e| pow(a, e) != one),
    );
    match group.family() {
        GroupFamily::Dicyclic(s) => {
            relation("b^2 = a^s", pow(b, 2) == pow(a, u64::from(s)));
            relation(
                "b^-1 a b = a^-1",
                group.mul(group.mul(group.inv(b), a), b) == group.inv(a),
            );
        }
        GroupFamily::Abelian(_) => {
            relation("b^2 = 1", pow(b, 2) == one);
            relation("ab = ba", group.mul(a, b) == group.mul(b, a));
        }
        GroupFamily::Semidihedral(n) => {
            relation("b^2 = 1", pow(b, 2) == one);
            relation(
                "bab = a^(n/2-1)",
                group.mul(group.mul(b, a), b) == pow(a, u64::from(n / 2 - 1)),
            );
        }
        GroupFamily::Modular(n) => {
            relation("b^2 = 1", pow(b, 2) == one);
            relation(
                "bab = a^(n/2+1)",
                group.mul(group.mul(b, a), b) == pow(a, u64::from(n / 2 + 1)),
            );
        }
    }
    relation(
        "b not in <a>",
        !b.is_identity() && (0..m).all(|e| pow(a, e) != b),
    );

    AxiomReport {
        triples,
        relations,
        violations,
    }
}

/// Limits for [`exhaustive_starter_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// At most 16.
    pub max_group_order: usize,
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const ORDER_LIMIT: usize = 16;
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_group_order: Self::ORDER_LIMIT,
            max_nodes: 10_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub starters: Vec<Starter>,
    /// False when the node budget ran out before the tree was exhausted.
    pub complete: bool,
    pub nodes: u64,
}

impl SearchOutcome {
    /// True iff some found starter has the same blocks as `starter`, in any order.
    pub fn contains(&self, starter: &Starter) -> bool {
        let key = block_key(starter);
        self.starters.iter().any(|s| block_key(s) == key)
    }
}

/// Blocks as sorted (edges, stabilizer elements) pairs, ignoring generators.
pub fn block_key(starter: &Starter) -> Vec<(Vec<Edge>, Vec<GroupElement>)> {
    let mut key: Vec<_> = starter
        .blocks
        .iter()
        .map(|b| {
            (
                b.edges.iter().copied().collect(),
                b.stabilizer.elements().to_vec(),
            )
        })
        .collect();
    key.sort();
    key
}

struct Tables {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl Tables {
    fn new(group: &Group) -> Self {
        let els: Vec<GroupElement> = group.elements().collect();
        let n = els.len();
        let pos = |x: GroupElement| els.iter().position(|&y| y == x).expect("closed");
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = pos(group.mul(els[i], els[j]));
            }
        }
        let inv = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| mul[i * n + j] == 0)
                    .expect("inverse exists")
            })
            .collect();
        Self { n, mul, inv }
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }
}

#[derive(Clone)]
struct Cand {
    u: usize,
    v: usize,
    /// Bitmask of the difference set.
    diff: u32,
    /// `u^-1 v` when the edge is short.
    involution: Option<usize>,
}

struct Search<'a> {
    t: &'a Tables,
    edges: Vec<Cand>,
    subgroups: Vec<(u32, Vec<usize>)>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    found: Vec<Vec<(Vec<usize>, usize)>>,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn phi(&self, e: usize) -> Vec<usize> {
        let c = &self.edges[e];
        if c.involution.is_some() {
            vec![c.u]
        } else {
            vec![c.u, c.v]
        }
    }

    fn coset(&self, x: usize, h: &[usize]) -> u32 {
        h.iter().fold(0, |acc, &y| acc | 1 << self.t.m(x, y))
    }

    fn fits(&self, e: usize, hmask: u32, cov: u32) -> bool {
        let c = &self.edges[e];
        c.diff & cov == 0 && c.involution.is_none_or(|i| hmask >> i & 1 == 1)
    }

    fn run(&mut self, cov: u32, blocks: &mut Vec<(Vec<usize>, usize)>) {
        if !self.tick() {
            return;
        }
        let full = (1u32 << self.t.n) - 2;
        if cov == full {
            self.found.push(blocks.clone());
            return;
        }
        let d = (full & !cov).trailing_zeros();
        for s in 0..self.subgroups.len() {
            let (hmask, h) = self.subgroups[s].clone();
            let index = self.t.n / h.len();
            for e in 0..self.edges.len() {
                if self.edges[e].diff >> d & 1 == 0 || !self.fits(e, hmask, cov) {
                    continue;
                }
                let phi = self.phi(e);
                if phi.len() > index {
                    continue;
                }
                let cosets: Vec<u32> = phi.iter().map(|&x| self.coset(x, &h)).collect();
                if cosets.len() == 2 && cosets[0] == cosets[1] {
                    continue;
                }
                let used = (1 << self.edges[e].u) | (1 << self.edges[e].v);
                let mut out = Vec::new();
                self.grow(
                    &h,
                    hmask,
                    d,
                    vec![e],
                    phi.len(),
                    cosets.iter().fold(0, |a, &c| a | c),
                    used,
                    cov | self.edges[e].diff,
                    0,
                    &mut out,
                );
                for (edges, c) in out {
                    blocks.push((edges, s));
                    self.run(c, blocks);
                    blocks.pop();
                    if self.exhausted {
                        return;
                    }
                }
            }
        }
    }

    /// Extends a block by edges later in the list than `from`, none holding `d`.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        h: &[usize],
        hmask: u32,
        d: u32,
        chosen: Vec<usize>,
        phi_len: usize,
        covered: u32,
        used: u32,
        cov: u32,
        from: usize,
        out: &mut Vec<(Vec<usize>, u32)>,
    ) {
        if !self.tick() {
            return;
        }
        let index = self.t.n / h.len();
        if phi_len == index {
            if covered.count_ones() as usize == self.t.n {
                out.push((chosen, cov));
            }
            return;
        }
        for e in from..self.edges.len() {
            let c = &self.edges[e];
            if chosen.contains(&e)
                || c.diff >> d & 1 == 1
                || used & ((1 << c.u) | (1 << c.v)) != 0
                || !self.fits(e, hmask, cov)
            {
                continue;
            }
            let phi = self.phi(e);
            if phi_len + phi.len() > index {
                continue;
            }
            let cosets: Vec<u32> = phi.iter().map(|&x| self.coset(x, h)).collect();
            if cosets.iter().any(|&c| c & covered != 0)
                || (cosets.len() == 2 && cosets[0] == cosets[1])
            {
                continue;
            }
            let mut next = chosen.clone();
            next.push(e);
            let (u, v, diff) = (c.u, c.v, c.diff);
            self.grow(
                h,
                hmask,
                d,
                next,
                phi_len + phi.len(),
                covered | cosets.iter().fold(0, |a, &c| a | c),
                used | (1 << u) | (1 << v),
                cov | diff,
                e + 1,
                out,
            );
            if self.exhausted {
                return;
            }
        }
    }
}

/// Every starter of `group`, found by covering the least uncovered
/// difference first. Each starter is reported once, as a set of blocks.
pub fn exhaustive_starter_search(group: &Group, budget: SearchBudget) -> Result<SearchOutcome> {
    let limit = budget.max_group_order.min(SearchBudget::ORDER_LIMIT);
    if group.order() > limit {
        return Err(Error::SearchTooLarge {
            order: group.order(),
            limit,
        });
    }
    let t = Tables::new(group);
    let n = t.n;
    let els: Vec<GroupElement> = group.elements().collect();

    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let d1 = t.m(u, t.inv[v]);
            let d2 = t.m(v, t.inv[u]);
            edges.push(Cand {
                u,
                v,
                diff: (1 << d1) | (1 << d2),
                involution: (d1 == d2).then(|| t.m(t.inv[u], v)),
            });
        }
    }

    let mut masks = BTreeSet::new();
    let mut subgroups = Vec::new();
    for x in 0..n {
        for y in x..n {
            let mut set: u32 = 1 | 1 << x | 1 << y;
            loop {
                let mut next = set;
                for i in (0..n).filter(|&i| set >> i & 1 == 1) {
                    for j in (0..n).filter(|&j| set >> j & 1 == 1) {
                        next |= 1 << t.m(i, j);
                    }
                }
                if next == set {
                    break;
                }
                set = next;
            }
            if masks.insert((set.count_ones(), set)) {
                subgroups.push((set, (x, y)));
            }
        }
    }
    subgroups.sort_by_key(|&(mask, _)| (mask.count_ones(), mask));
    let gens: Vec<(usize, usize)> = subgroups.iter().map(|&(_, g)| g).collect();
    let subgroups: Vec<(u32, Vec<usize>)> = subgroups
        .into_iter()
        .map(|(mask, _)| (mask, (0..n).filter(|&i| mask >> i & 1 == 1).collect()))
        .collect();

    let mut search = Search {
        t: &t,
        edges,
        subgroups,
        budget: budget.max_nodes,
        nodes: 0,
        exhausted: false,
        found: Vec::new(),
    };
    search.run(0, &mut Vec::new());

    let subgroup_of = |s: usize| -> Subgroup {
        let (x, y) = gens[s];
        let gens: Vec<GroupElement> = [x, y]
            .into_iter()
            .filter(|&i| i != 0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .map(|i| els[i])
            .collect();
        group.subgroup(&gens)
    };
    let starters = search
        .found
        .iter()
        .map(|blocks| Starter {
            group: *group,
            blocks: blocks
                .iter()
                .map(|(es, s)| StarterBlock {
                    edges: es
                        .iter()
                        .map(|&e| {
                            let c = &search.edges[e];
                            Edge::new(els[c.u], els[c.v]).expect("u < v")
                        })
                        .collect(),
                    stabilizer: subgroup_of(*s),
                })
                .collect(),
        })
        .collect();
    Ok(SearchOutcome {
        starters,
        complete: !search.exhausted,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Construction;
    use crate::starter::validate_starter;

    fn group(f: GroupFamily) -> Group {
        Group::new(f).unwrap()
    }

    #[test]
    fn recount_of_q8_trees() {
        let c = Construction::new(GroupFamily::Dicyclic(2)).unwrap();
        let r = recount_partition(&c.trees.trees, &c.group);
        assert!(r.passed(), "{r}");
        assert_eq!(r.total_edges, 28);
    }

    #[test]
    fn recount_with_duplicated_tree() {
        let c = Construction::new(GroupFamily::Dicyclic(2)).unwrap();
        let mut trees = c.trees.trees.clone();
        trees[1] = trees[0].clone();
        let r = recount_partition(&trees, &c.group);
        assert_eq!(r.duplicated.len(), 7);
        assert!(r.duplicated.iter().all(|&(_, n)| n == 2));
        assert_eq!(r.missing.len(), 7);
    }

    #[test]
    fn recount_of_nothing() {
        let g = group(GroupFamily::Dicyclic(2));
        let r = recount_partition(&[], &g);
        assert_eq!(r.missing.len(), 28);
        assert!(r.duplicated.is_empty());
    }

    #[test]
    fn q8_axioms() {
        let r = exhaustive_group_axiom_check(&group(GroupFamily::Dicyclic(2)));
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.triples, 512);
    }

    #[test]
    fn two_group_relations() {
        let r = exhaustive_group_axiom_check(&group(GroupFamily::Semidihedral(8)));
        assert!(r.passed());
        assert!(r.relations.contains(&"bab = a^(n/2-1)"));
        let r = exhaustive_group_axiom_check(&group(GroupFamily::Modular(8)));
        assert!(r.passed());
        assert!(r.relations.contains(&"bab = a^(n/2+1)"));
    }

    #[test]
    fn zero_budget_is_incomplete() {
        let g = group(GroupFamily::Dicyclic(2));
        let out = exhaustive_starter_search(
            &g,
            SearchBudget {
                max_group_order: 16,
                max_nodes: 0,
            },
        )
        .unwrap();
        assert!(!out.complete);
        assert!(out.starters.is_empty());
    }

    #[test]
    fn large_groups_are_refused() {
        let g = group(GroupFamily::Dicyclic(5));
        assert!(matches!(
            exhaustive_starter_search(&g, SearchBudget::default()),
            Err(Error::SearchTooLarge {
                order: 20,
                limit: 16
            })
        ));
    }

    #[test]
    fn q8_search_finds_the_explicit_starter() {
        let c = Construction::new(GroupFamily::Dicyclic(2)).unwrap();
        let out = exhaustive_starter_search(&c.group, SearchBudget::default()).unwrap();
        assert!(out.complete);
        assert!(out.contains(&c.starter));
        for s in out.starters.iter().step_by(97) {
            assert!(validate_starter(s).passed());
        }
    }
}
