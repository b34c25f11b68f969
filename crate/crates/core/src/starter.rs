//! Starters and the `G`-regular 1-factorizations they expand to.
//!
//! A starter is a list of blocks `(S_i, H_i)` such that
//!
//! 1. the difference sets of all edges of all `S_i` partition `G \ {1}`;
//! 2. `phi(S_i)` is a left transversal of `H_i` in `G`;
//! 3. `H_i` contains the involution associated with every short edge of `S_i`.
//!
//! Block `i` yields the base factor `F_i`, the union of the `H_i`-orbits of the
//! edges of `S_i`, and its `[G:H_i]` distinct right translates.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, IntegrityFailure, Result};
use crate::graph::{self, Edge, EdgeSet};
use crate::group::{Group, GroupElement, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarterBlock {
    pub edges: EdgeSet,
    pub stabilizer: Subgroup,
}

impl StarterBlock {
    pub fn new(edges: impl IntoIterator<Item = Edge>, stabilizer: Subgroup) -> Self {
        Self {
            edges: edges.into_iter().collect(),
            stabilizer,
        }
    }

    /// `t_i = [G:H_i]`, the number of factors this block contributes.
    pub fn orbit_length(&self, group: &Group) -> usize {
        self.stabilizer.index_in(group)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Starter {
    pub group: Group,
    pub blocks: Vec<StarterBlock>,
}

/// Which defining condition a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StarterCondition {
    /// Differences partition `G \ {1}`.
    Differences,
    /// `phi(S_i)` is a left transversal of `H_i`.
    Transversal,
    /// Short-edge involutions lie in `H_i`.
    Involutions,
}

impl StarterCondition {
    pub fn id(self) -> &'static str {
        match self {
            Self::Differences => "starter.i",
            Self::Transversal => "starter.ii",
            Self::Involutions => "starter.iii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarterViolation {
    NoBlocks,
    UncoveredDifference(GroupElement),
    /// `element` is a difference of edges in more than one place.
    RepeatedDifference {
        element: GroupElement,
        blocks: Vec<usize>,
    },
    /// Two edges of a block share a vertex, so `phi(S_i)` is not a set.
    PhiNotASet {
        block: usize,
        vertex: GroupElement,
    },
    PhiWrongSize {
        block: usize,
        size: usize,
        index: usize,
    },
    CosetCollision {
        block: usize,
        first: GroupElement,
        second: GroupElement,
    },
    InvolutionOutsideStabilizer {
        block: usize,
        edge: Edge,
        involution: GroupElement,
    },
    ElementOutsideGroup {
        block: usize,
        element: GroupElement,
    },
}

impl StarterViolation {
    pub fn condition(&self) -> StarterCondition {
        match self {
            Self::NoBlocks | Self::UncoveredDifference(_) | Self::RepeatedDifference { .. } => {
                StarterCondition::Differences
            }
            Self::PhiNotASet { .. }
            | Self::PhiWrongSize { .. }
            | Self::CosetCollision { .. }
            | Self::ElementOutsideGroup { .. } => StarterCondition::Transversal,
            Self::InvolutionOutsideStabilizer { .. } => StarterCondition::Involutions,
        }
    }

    pub fn block(&self) -> Option<usize> {
        match self {
            Self::NoBlocks | Self::UncoveredDifference(_) | Self::RepeatedDifference { .. } => None,
            Self::PhiNotASet { block, .. }
            | Self::PhiWrongSize { block, .. }
            | Self::CosetCollision { block, .. }
            | Self::InvolutionOutsideStabilizer { block, .. }
            | Self::ElementOutsideGroup { block, .. } => Some(*block),
        }
    }
}

impl fmt::Display for StarterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.condition().id())?;
        match self {
            Self::NoBlocks => write!(f, "starter has no blocks"),
            Self::UncoveredDifference(x) => write!(f, "{x} is not a difference of any edge"),
            Self::RepeatedDifference { element, blocks } => {
                write!(f, "{element} is a difference in blocks {blocks:?}")
            }
            Self::PhiNotASet { block, vertex } => {
                write!(f, "block {block}: vertex {vertex} is covered twice")
            }
            Self::PhiWrongSize { block, size, index } => write!(
                f,
                "block {block}: phi has {size} elements but the stabilizer has index {index}"
            ),
            Self::CosetCollision {
                block,
                first,
                second,
            } => write!(
                f,
                "block {block}: {first} and {second} lie in the same left coset"
            ),
            Self::InvolutionOutsideStabilizer {
                block,
                edge,
                involution,
            } => write!(
                f,
                "block {block}: involution {involution} of short edge {edge} is not in the stabilizer"
            ),
            Self::ElementOutsideGroup { block, element } => {
                write!(f, "block {block}: {element} is not a group element")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StarterReport {
    pub violations: Vec<StarterViolation>,
}

impl StarterReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, condition: StarterCondition) -> bool {
        self.violations.iter().any(|v| v.condition() == condition)
    }
}

impl fmt::Display for StarterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "starter: conditions (i)-(iii) hold");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the three defining conditions; failures are reported, not raised.
pub fn validate_starter(starter: &Starter) -> StarterReport {
    let group = &starter.group;
    let mut violations = Vec::new();
    if starter.blocks.is_empty() {
        violations.push(StarterViolation::NoBlocks);
    }

    let mut seen: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
    for (i, block) in starter.blocks.iter().enumerate() {
        if let Some(x) = block
            .edges
            .iter()
            .flat_map(|e| e.endpoints())
            .chain(block.stabilizer.elements().iter().copied())
            .find(|&x| !group.contains(x))
        {
            violations.push(StarterViolation::ElementOutsideGroup {
                block: i,
                element: x,
            });
            continue;
        }

        for &e in &block.edges {
            for d in graph::delta(group, e).elements() {
                seen.entry(d).or_default().push(i);
            }
        }

        // (ii)
        let mut phi = Vec::new();
        let mut used = BTreeSet::new();
        for &e in &block.edges {
            for x in graph::phi(group, e) {
                phi.push(x);
            }
            for x in e.endpoints() {
                if !used.insert(x) {
                    violations.push(StarterViolation::PhiNotASet {
                        block: i,
                        vertex: x,
                    });
                }
            }
        }
        let index = block.orbit_length(group);
        if phi.len() != index {
            violations.push(StarterViolation::PhiWrongSize {
                block: i,
                size: phi.len(),
                index,
            });
        } else {
            let mut coset_of = HashMap::new();
            for &x in &phi {
                let coset: BTreeSet<_> = block
                    .stabilizer
                    .elements()
                    .iter()
                    .map(|&h| group.mul(x, h))
                    .collect();
                if let Some(prev) = coset_of.insert(coset, x) {
                    violations.push(StarterViolation::CosetCollision {
                        block: i,
                        first: prev,
                        second: x,
                    });
                }
            }
        }

        // (iii)
        for &e in &block.edges {
            if let Some(inv) = graph::associated_involution(group, e) {
                if !block.stabilizer.contains(inv) {
                    violations.push(StarterViolation::InvolutionOutsideStabilizer {
                        block: i,
                        edge: e,
                        involution: inv,
                    });
                }
            }
        }
    }

    // (i)
    for x in group.elements().filter(|x| !x.is_identity()) {
        match seen.get(&x) {
            None => violations.push(StarterViolation::UncoveredDifference(x)),
            Some(blocks) if blocks.len() > 1 => {
                violations.push(StarterViolation::RepeatedDifference {
                    element: x,
                    blocks: blocks.clone(),
                })
            }
            Some(_) => {}
        }
    }

    violations.sort_by_key(|v| (v.condition(), v.block()));
    StarterReport { violations }
}

/// The distinct right translates of the base factor of `block`.
///
/// Translates are taken in the order of their smallest representative, i.e.
/// by scanning `G` in element order and keeping each new translate.
pub fn expand_block(group: &Group, block: &StarterBlock, index: usize) -> Result<Vec<EdgeSet>> {
    let mut base = EdgeSet::new();
    for &e in &block.edges {
        base.extend(graph::orbit(group, e, &block.stabilizer));
    }
    if !graph::is_perfect_matching(group, &base) {
        return Err(Error::Integrity(IntegrityFailure::BlockNotAMatching {
            block: index,
        }));
    }
    let mut seen = BTreeSet::new();
    let mut translates = Vec::new();
    for g in group.elements() {
        let f = base.translate(group, g);
        if seen.insert(f.clone()) {
            translates.push(f);
        }
    }
    let expected = block.orbit_length(group);
    if translates.len() != expected {
        return Err(Error::Integrity(IntegrityFailure::OrbitLength {
            block: index,
            expected,
            found: translates.len(),
        }));
    }
    Ok(translates)
}

/// A 1-factorization together with its edge colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub group: Group,
    pub factors: Vec<EdgeSet>,
    /// Starter block that produced each factor.
    pub block_of: Vec<usize>,
    color_of: HashMap<Edge, usize>,
}

impl Factorization {
    /// Builds the colouring from explicit factor lists, rejecting overlaps and
    /// uncovered edges.
    pub fn from_factors(group: Group, factors: Vec<EdgeSet>, block_of: Vec<usize>) -> Result<Self> {
        let mut color_of = HashMap::with_capacity(group.order() * (group.order() - 1) / 2);
        for (i, f) in factors.iter().enumerate() {
            for &e in f {
                if let Some(prev) = color_of.insert(e, i) {
                    return Err(Error::Integrity(IntegrityFailure::Overlap {
                        edge: e,
                        first: prev,
                        second: i,
                    }));
                }
            }
        }
        let expected = group.order() - 1;
        if factors.len() != expected {
            return Err(Error::Integrity(IntegrityFailure::FactorCount {
                expected,
                found: factors.len(),
            }));
        }
        if let Some(e) = graph::complete_graph(&group).find(|e| !color_of.contains_key(e)) {
            return Err(Error::Integrity(IntegrityFailure::UncoveredEdge(e)));
        }
        Ok(Self {
            group,
            factors,
            block_of,
            color_of,
        })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Index of the unique factor containing `e`; `None` if `e` is not an
    /// edge of this complete graph.
    pub fn factor_of(&self, e: Edge) -> Option<usize> {
        self.color_of.get(&e).copied()
    }

    /// Factor indices contributed by `block`.
    pub fn factors_of_block(&self, block: usize) -> impl Iterator<Item = usize> + '_ {
        self.block_of
            .iter()
            .enumerate()
            .filter(move |&(_, &b)| b == block)
            .map(|(i, _)| i)
    }
}

/// Validates the starter and concatenates the expansions of its blocks.
pub fn expand_starter(starter: &Starter) -> Result<Factorization> {
    let report = validate_starter(starter);
    if !report.passed() {
        return Err(Error::InvalidStarter(report));
    }
    let mut factors = Vec::new();
    let mut block_of = Vec::new();
    for (i, block) in starter.blocks.iter().enumerate() {
        for f in expand_block(&starter.group, block, i)? {
            factors.push(f);
            block_of.push(i);
        }
    }
    Factorization::from_factors(starter.group, factors, block_of)
}

/// Shorthand for [`Factorization::factor_of`].
pub fn factor_of(factorization: &Factorization, e: Edge) -> Option<usize> {
    factorization.factor_of(e)
}

/// Problems found when checking an arbitrary list of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationViolation {
    FactorCount {
        expected: usize,
        found: usize,
    },
    NotAMatching {
        factor: usize,
    },
    EdgeMultiplicity {
        edge: Edge,
        count: usize,
    },
    /// `F_i * g` is not one of the factors.
    NotRegular {
        factor: usize,
        by: GroupElement,
    },
}

impl fmt::Display for FactorizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FactorCount { expected, found } => {
                write!(
                    f,
                    "factorization.count: {found} factors, expected {expected}"
                )
            }
            Self::NotAMatching { factor } => {
                write!(
                    f,
                    "factorization.matching: factor {factor} is not a perfect matching"
                )
            }
            Self::EdgeMultiplicity { edge, count } => write!(
                f,
                "factorization.partition: edge {edge} lies in {count} factors"
            ),
            Self::NotRegular { factor, by } => write!(
                f,
                "factorization.regular: factor {factor} translated by {by} is not a factor"
            ),
        }
    }
}

/// Checks that `factors` is a `G`-regular 1-factorization of `K_{2n}`.
pub fn check_factorization(group: &Group, factors: &[EdgeSet]) -> Vec<FactorizationViolation> {
    let mut out = Vec::new();
    let expected = group.order() - 1;
    if factors.len() != expected {
        out.push(FactorizationViolation::FactorCount {
            expected,
            found: factors.len(),
        });
    }
    for (i, f) in factors.iter().enumerate() {
        if !graph::is_perfect_matching(group, f) {
            out.push(FactorizationViolation::NotAMatching { factor: i });
        }
    }
    let mut count: BTreeMap<Edge, usize> = graph::complete_graph(group).map(|e| (e, 0)).collect();
    for e in factors.iter().flatten() {
        *count.entry(*e).or_default() += 1;
    }
    for (edge, count) in count {
        if count != 1 {
            out.push(FactorizationViolation::EdgeMultiplicity { edge, count });
        }
    }
    if out.is_empty() {
        let known: BTreeSet<&EdgeSet> = factors.iter().collect();
        'factors: for (i, f) in factors.iter().enumerate() {
            for g in group.elements() {
                if !known.contains(&f.translate(group, g)) {
                    out.push(FactorizationViolation::NotRegular { factor: i, by: g });
                    continue 'factors;
                }
            }
        }
    }
    out
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

    /// The s-even dicyclic starter specialised to s = 2.
    fn q8_starter() -> Starter {
        let g = q8();
        Starter {
            group: g,
            blocks: vec![
                StarterBlock::new([edge(g.a(0), g.ba(1))], g.subgroup(&[g.ba(0)])),
                StarterBlock::new([edge(g.a(0), g.a(1))], g.subgroup(&[g.ba(0), g.a(2)])),
                StarterBlock::new([edge(g.a(0), g.ba(0))], g.subgroup(&[g.a(1)])),
                StarterBlock::new([edge(g.a(0), g.a(2))], g.full_subgroup()),
            ],
        }
    }

    #[test]
    fn q8_starter_is_valid() {
        let report = validate_starter(&q8_starter());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn missing_block_breaks_differences() {
        let g = q8();
        let mut s = q8_starter();
        s.blocks.pop();
        let report = validate_starter(&s);
        assert!(report.fails(StarterCondition::Differences));
        assert!(report
            .violations
            .contains(&StarterViolation::UncoveredDifference(g.a(2))));
    }

    #[test]
    fn trivial_stabilizer_breaks_transversal() {
        let g = q8();
        let mut s = q8_starter();
        s.blocks[2].stabilizer = g.subgroup(&[]);
        let report = validate_starter(&s);
        assert!(report.fails(StarterCondition::Transversal));
        assert!(report.violations.iter().any(|v| matches!(
            v,
            StarterViolation::PhiWrongSize {
                block: 2,
                size: 2,
                index: 8
            }
        )));
    }

    #[test]
    fn short_edge_needs_its_involution() {
        let g = q8();
        let mut s = q8_starter();
        s.blocks[3].stabilizer = g.subgroup(&[g.a(1)]);
        let report = validate_starter(&s);
        // phi([1,a^2]) = {1} is no longer a transversal of an index-2 subgroup,
        // and a^2 still lies in <a>, so only (ii) fires.
        assert!(report.fails(StarterCondition::Transversal));
        assert!(!report.fails(StarterCondition::Involutions));

        let mut s = q8_starter();
        s.blocks[3].stabilizer = g.subgroup(&[]);
        assert!(validate_starter(&s).fails(StarterCondition::Involutions));
    }

    #[test]
    fn expansion_counts() {
        let g = q8();
        let s = q8_starter();
        let lens: Vec<_> = s
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| expand_block(&g, b, i).unwrap().len())
            .collect();
        assert_eq!(lens, vec![2, 2, 2, 1]);
        let f = expand_starter(&s).unwrap();
        assert_eq!(f.len(), 7);
        assert!(check_factorization(&g, &f.factors).is_empty());
    }

    #[test]
    fn fixed_factor_is_short_orbit() {
        let g = q8();
        let s = q8_starter();
        let fixed = expand_block(&g, &s.blocks[3], 3).unwrap();
        assert_eq!(fixed, vec![graph::full_orbit(&g, edge(g.a(0), g.a(2)))]);
        let pair = expand_block(&g, &s.blocks[2], 2).unwrap();
        assert_eq!(pair[1], pair[0].translate(&g, g.ba(0)));
    }

    #[test]
    fn factor_lookup() {
        let g = q8();
        let f = expand_starter(&q8_starter()).unwrap();
        assert_eq!(f.factor_of(edge(g.a(0), g.a(2))), Some(6));
        assert_eq!(f.factor_of(edge(g.a(0), g.ba(1))), Some(0));
        // <b> fixes factor 0
        for h in g.subgroup(&[g.ba(0)]).elements() {
            assert_eq!(
                f.factor_of(graph::act(&g, edge(g.a(0), g.ba(1)), *h)),
                Some(0)
            );
        }
        let outside = Edge::new(g.a(0), GroupElement::new(false, 9)).unwrap();
        assert_eq!(f.factor_of(outside), None);
    }

    #[test]
    fn invalid_starter_is_not_expanded() {
        let mut s = q8_starter();
        s.blocks.pop();
        assert!(matches!(expand_starter(&s), Err(Error::InvalidStarter(_))));
    }
}
