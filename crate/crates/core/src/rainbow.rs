//! Complete sets of rainbow spanning trees from a base graph and two bridges.
//!
//! Given a factorization coming from a starter, a base graph `R` and two
//! edges `e1`, `e2` of the fixed factor with difference `{j}`, the trees are
//!
//! ```text
//! T1 = R + e1,  T2 = R*j + e2,  trees = { T1*h, T2*h : h in transversal }
//! ```
//!
//! where the transversal picks one element from each coset of `{1, j}` in the
//! cyclic subgroup `H`. The construction is correct whenever the three checks
//! in this module pass.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::constructions::LemmaOneInput;
use crate::error::{Error, IntegrityFailure, Result};
use crate::graph::{self, DifferenceSet, Edge, EdgeSet};
use crate::group::{Group, GroupElement, Subgroup};
use crate::starter::Factorization;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    /// An edge of `R` is not an edge of `K_{2n}`.
    EdgeOutsideGraph { edge: Edge },
    /// `R` uses a colour of the fixed factor reserved for the bridges.
    BridgeFactorUsed { edge: Edge, factor: usize },
    /// Block `block` has `found` edges in `R` but contributes `expected` factors.
    BlockEdgeCount {
        block: usize,
        expected: usize,
        found: usize,
    },
    /// Factor `factor` of block `block` is met `count` times by `R`.
    FactorHits {
        block: usize,
        factor: usize,
        count: usize,
    },
    /// The differences of `R_i` are not those of `S_i`.
    Differences { block: usize },
    /// A long edge does not have exactly one partner with the same difference
    /// set outside its `H`-orbit.
    LongPartner {
        block: usize,
        edge: Edge,
        partners: Vec<Edge>,
    },
    /// A short edge shares its difference set with another edge of `R_i`.
    ShortNotUnique { block: usize, edge: Edge },
    /// A bridge edge does not have difference set `{j}`.
    BridgeDifference { edge: Edge },
    /// `e2` lies in the `H`-orbit of `e1`.
    BridgesSameOrbit,
    /// `R + e` is not spanning and connected.
    Disconnected { bridge: Edge, components: usize },
}

impl LemmaViolation {
    /// 1, 2 or 3.
    pub fn condition(&self) -> u8 {
        match self {
            Self::EdgeOutsideGraph { .. }
            | Self::BridgeFactorUsed { .. }
            | Self::BlockEdgeCount { .. }
            | Self::FactorHits { .. }
            | Self::Differences { .. } => 1,
            Self::LongPartner { .. } | Self::ShortNotUnique { .. } => 2,
            Self::BridgeDifference { .. } | Self::BridgesSameOrbit | Self::Disconnected { .. } => 3,
        }
    }
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lemma.{}: ", self.condition())?;
        match self {
            Self::EdgeOutsideGraph { edge } => write!(f, "{edge} is not an edge of the graph"),
            Self::BridgeFactorUsed { edge, factor } => {
                write!(f, "{edge} lies in the bridge factor {factor}")
            }
            Self::BlockEdgeCount {
                block,
                expected,
                found,
            } => write!(f, "block {block}: {found} edges, expected {expected}"),
            Self::FactorHits {
                block,
                factor,
                count,
            } => write!(f, "block {block}: factor {factor} met {count} times"),
            Self::Differences { block } => {
                write!(
                    f,
                    "block {block}: differences do not match the starter block"
                )
            }
            Self::LongPartner {
                block,
                edge,
                partners,
            } => write!(
                f,
                "block {block}: long edge {edge} has {} partners outside its orbit",
                partners.len()
            ),
            Self::ShortNotUnique { block, edge } => {
                write!(f, "block {block}: short edge {edge} is not unique")
            }
            Self::BridgeDifference { edge } => {
                write!(f, "bridge {edge} does not lie in the fixed factor")
            }
            Self::BridgesSameOrbit => write!(f, "bridges lie in one orbit of the cyclic subgroup"),
            Self::Disconnected { bridge, components } => {
                write!(f, "R + {bridge} has {components} components")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, condition: u8) -> bool {
        self.violations.iter().any(|v| v.condition() == condition)
    }

    pub fn merge(mut self, other: LemmaReport) -> Self {
        self.violations.extend(other.violations);
        self
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "lemma: conditions 1-3 hold");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The block that owns the bridge factor: the fixed factor whose edges have
/// difference `{j}`.
pub fn bridge_block(factorization: &Factorization, j: GroupElement) -> Option<usize> {
    let group = &factorization.group;
    let probe = Edge::new(group.identity(), j).ok()?;
    factorization
        .factor_of(probe)
        .map(|f| factorization.block_of[f])
}

/// Splits `R` by the block of each edge's factor. Edges outside `K_{2n}`
/// are returned separately.
pub fn partition_by_block(r: &EdgeSet, factorization: &Factorization) -> (Vec<EdgeSet>, Vec<Edge>) {
    let blocks = factorization.block_of.iter().max().map_or(0, |b| b + 1);
    let mut parts = vec![EdgeSet::new(); blocks];
    let mut stray = Vec::new();
    for &e in r {
        match factorization.factor_of(e) {
            Some(f) => {
                parts[factorization.block_of[f]].insert(e);
            }
            None => stray.push(e),
        }
    }
    (parts, stray)
}

/// Each non-bridge block `i` meets its `t_i` factors once each and has the
/// differences of `S_i`; no edge of `R` lies in the bridge factor.
pub fn check_condition_1(
    parts: &[EdgeSet],
    starter_blocks: &[EdgeSet],
    factorization: &Factorization,
    bridge_block: usize,
) -> LemmaReport {
    let group = &factorization.group;
    let mut violations = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        if i == bridge_block {
            for &e in part {
                violations.push(LemmaViolation::BridgeFactorUsed {
                    edge: e,
                    factor: factorization.factor_of(e).unwrap_or(usize::MAX),
                });
            }
            continue;
        }
        let own: Vec<usize> = factorization.factors_of_block(i).collect();
        if part.len() != own.len() {
            violations.push(LemmaViolation::BlockEdgeCount {
                block: i,
                expected: own.len(),
                found: part.len(),
            });
        }
        let mut hits: BTreeMap<usize, usize> = own.iter().map(|&f| (f, 0)).collect();
        for &e in part {
            if let Some(f) = factorization.factor_of(e) {
                *hits.entry(f).or_default() += 1;
            }
        }
        for (factor, count) in hits {
            if count != 1 {
                violations.push(LemmaViolation::FactorHits {
                    block: i,
                    factor,
                    count,
                });
            }
        }
        let ours: std::collections::BTreeSet<_> = part
            .iter()
            .flat_map(|&e| graph::delta(group, e).elements())
            .collect();
        let theirs: std::collections::BTreeSet<_> = starter_blocks
            .get(i)
            .into_iter()
            .flatten()
            .flat_map(|&e| graph::delta(group, e).elements())
            .collect();
        if ours != theirs {
            violations.push(LemmaViolation::Differences { block: i });
        }
    }
    LemmaReport { violations }
}

/// Long edges of each `R_i` pair up across `H`-orbits; short edges are alone
/// with their difference set.
pub fn check_condition_2(group: &Group, parts: &[EdgeSet], h: &Subgroup) -> LemmaReport {
    let mut violations = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let deltas: Vec<(Edge, DifferenceSet)> =
            part.iter().map(|&e| (e, graph::delta(group, e))).collect();
        for &(l, d) in &deltas {
            let same: Vec<Edge> = deltas
                .iter()
                .filter(|&&(m, dm)| m != l && dm == d)
                .map(|&(m, _)| m)
                .collect();
            if d.is_short() {
                if !same.is_empty() {
                    violations.push(LemmaViolation::ShortNotUnique { block: i, edge: l });
                }
                continue;
            }
            let orbit = graph::orbit(group, l, h);
            let partners: Vec<Edge> = same.into_iter().filter(|m| !orbit.contains(m)).collect();
            if partners.len() != 1 {
                violations.push(LemmaViolation::LongPartner {
                    block: i,
                    edge: l,
                    partners,
                });
            }
        }
    }
    LemmaReport { violations }
}

/// The bridges have difference `{j}`, lie in distinct `H`-orbits, and each
/// completes `R` to a spanning connected graph.
pub fn check_condition_3(
    group: &Group,
    r: &EdgeSet,
    e1: Edge,
    e2: Edge,
    h: &Subgroup,
    j: GroupElement,
) -> LemmaReport {
    let mut violations = Vec::new();
    for e in [e1, e2] {
        if graph::delta(group, e) != DifferenceSet::Short(j) {
            violations.push(LemmaViolation::BridgeDifference { edge: e });
        }
    }
    if graph::orbit(group, e1, h).contains(&e2) {
        violations.push(LemmaViolation::BridgesSameOrbit);
    }
    for e in [e1, e2] {
        let mut t = r.clone();
        t.insert(e);
        let components = graph::component_count(group, &t);
        if components != 1 {
            violations.push(LemmaViolation::Disconnected {
                bridge: e,
                components,
            });
        }
    }
    LemmaReport { violations }
}

/// Runs all three checks on a base graph against a factorization.
pub fn check_lemma(
    input: &LemmaOneInput,
    starter_blocks: &[EdgeSet],
    factorization: &Factorization,
) -> LemmaReport {
    let group = &factorization.group;
    let (parts, stray) = partition_by_block(&input.base_graph, factorization);
    let mut report = LemmaReport {
        violations: stray
            .into_iter()
            .map(|edge| LemmaViolation::EdgeOutsideGraph { edge })
            .collect(),
    };
    match bridge_block(factorization, input.central_involution) {
        Some(b) => {
            report = report.merge(check_condition_1(&parts, starter_blocks, factorization, b));
        }
        None => report
            .violations
            .push(LemmaViolation::BridgeDifference { edge: input.e1 }),
    }
    report
        .merge(check_condition_2(group, &parts, &input.cyclic_subgroup))
        .merge(check_condition_3(
            group,
            &input.base_graph,
            input.e1,
            input.e2,
            &input.cyclic_subgroup,
            input.central_involution,
        ))
}

/// `n` trees together with the two generating trees and the translating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowTreeSet {
    pub trees: Vec<EdgeSet>,
    pub t1: EdgeSet,
    pub t2: EdgeSet,
    pub transversal: Vec<GroupElement>,
}

impl RainbowTreeSet {
    /// Translates `t1` and `t2` by every transversal element, `T1*h` first.
    pub fn from_generators(
        group: &Group,
        t1: EdgeSet,
        t2: EdgeSet,
        transversal: Vec<GroupElement>,
    ) -> Self {
        let trees = [&t1, &t2]
            .into_iter()
            .flat_map(|t| transversal.iter().map(move |&h| t.translate(group, h)))
            .collect();
        Self {
            trees,
            t1,
            t2,
            transversal,
        }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// Checks the lemma conditions, builds the trees and certifies them.
pub fn assemble(
    input: &LemmaOneInput,
    starter_blocks: &[EdgeSet],
    factorization: &Factorization,
) -> Result<RainbowTreeSet> {
    let report = check_lemma(input, starter_blocks, factorization);
    if !report.passed() {
        return Err(Error::Integrity(IntegrityFailure::Lemma(report)));
    }
    let group = &factorization.group;
    let mut t1 = input.base_graph.clone();
    t1.insert(input.e1);
    let mut t2 = input.base_graph.translate(group, input.central_involution);
    t2.insert(input.e2);
    let set = RainbowTreeSet::from_generators(group, t1, t2, input.transversal.clone());
    let cert = certify(&set.trees, factorization);
    if !cert.passed() {
        return Err(Error::Integrity(IntegrityFailure::Certification(cert)));
    }
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyViolation {
    TreeCount {
        expected: usize,
        found: usize,
    },
    EdgeCount {
        tree: usize,
        found: usize,
    },
    NotSpanningConnected {
        tree: usize,
        components: usize,
    },
    /// The tree contains an edge outside `K_{2n}` or in no factor.
    Uncoloured {
        tree: usize,
        edge: Edge,
    },
    /// The factor lists give `edge` more than one colour.
    AmbiguousColour {
        edge: Edge,
    },
    ColourMultiplicity {
        tree: usize,
        colour: usize,
        count: usize,
    },
    EdgeMultiplicity {
        edge: Edge,
        count: usize,
    },
}

impl CertifyViolation {
    pub fn id(&self) -> &'static str {
        match self {
            Self::TreeCount { .. } => "certify.count",
            Self::EdgeCount { .. } | Self::NotSpanningConnected { .. } => "certify.tree",
            Self::Uncoloured { .. }
            | Self::AmbiguousColour { .. }
            | Self::ColourMultiplicity { .. } => "certify.rainbow",
            Self::EdgeMultiplicity { .. } => "certify.partition",
        }
    }
}

impl fmt::Display for CertifyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.id())?;
        match self {
            Self::TreeCount { expected, found } => write!(f, "{found} trees, expected {expected}"),
            Self::EdgeCount { tree, found } => write!(f, "tree {tree} has {found} edges"),
            Self::NotSpanningConnected { tree, components } => {
                write!(f, "tree {tree} has {components} components")
            }
            Self::Uncoloured { tree, edge } => write!(f, "tree {tree}: {edge} has no colour"),
            Self::AmbiguousColour { edge } => write!(f, "{edge} lies in several factors"),
            Self::ColourMultiplicity {
                tree,
                colour,
                count,
            } => write!(f, "tree {tree}: colour {colour} used {count} times"),
            Self::EdgeMultiplicity { edge, count } => {
                write!(f, "{edge} lies in {count} trees")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertifyReport {
    pub violations: Vec<CertifyViolation>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, id: &str) -> bool {
        self.violations.iter().any(|v| v.id() == id)
    }
}

impl fmt::Display for CertifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "certify: complete set of rainbow spanning trees");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Re-checks a tree list from scratch against the factor lists: tree count,
/// tree size, connectivity, one edge per colour and an exact edge partition.
pub fn certify(trees: &[EdgeSet], factorization: &Factorization) -> CertifyReport {
    let group = &factorization.group;
    let n = group.half_order();
    let colours = factorization.factors.len();
    let mut violations = Vec::new();

    let mut colour_of: HashMap<Edge, usize> = HashMap::new();
    for (c, factor) in factorization.factors.iter().enumerate() {
        for &e in factor {
            if colour_of.insert(e, c).is_some() {
                violations.push(CertifyViolation::AmbiguousColour { edge: e });
            }
        }
    }

    if trees.len() != n {
        violations.push(CertifyViolation::TreeCount {
            expected: n,
            found: trees.len(),
        });
    }
    for (t, tree) in trees.iter().enumerate() {
        if tree.len() != 2 * n - 1 {
            violations.push(CertifyViolation::EdgeCount {
                tree: t,
                found: tree.len(),
            });
        }
        let mut count = vec![0usize; colours];
        for &e in tree {
            match colour_of.get(&e) {
                Some(&c) if e.endpoints().iter().all(|&x| group.contains(x)) => count[c] += 1,
                _ => violations.push(CertifyViolation::Uncoloured { tree: t, edge: e }),
            }
        }
        for (colour, count) in count.into_iter().enumerate() {
            if count != 1 {
                violations.push(CertifyViolation::ColourMultiplicity {
                    tree: t,
                    colour,
                    count,
                });
            }
        }
        if tree
            .iter()
            .all(|e| e.endpoints().iter().all(|&x| group.contains(x)))
        {
            let components = graph::component_count(group, tree);
            if components != 1 {
                violations.push(CertifyViolation::NotSpanningConnected {
                    tree: t,
                    components,
                });
            }
        }
    }

    let mut multiplicity: BTreeMap<Edge, usize> =
        graph::complete_graph(group).map(|e| (e, 0)).collect();
    for &e in trees.iter().flatten() {
        *multiplicity.entry(e).or_default() += 1;
    }
    for (edge, count) in multiplicity {
        if count != 1 {
            violations.push(CertifyViolation::EdgeMultiplicity { edge, count });
        }
    }
    CertifyReport { violations }
}
