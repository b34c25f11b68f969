//! Versioned JSON documents and their independent verification.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "group": {"family": "dicyclic", "parameter": 2},
//!   "starter": {"blocks": [{"edges": [["1", "b*a"]], "stabilizer_generators": ["b"]}]},
//!   "factorization": {"factors": [[["1", "a^2"], ...], ...], "block_of": [0, ...]},
//!   "trees": {"trees": [...], "t1": [...], "t2": [...], "transversal": ["1", "a"]}
//! }
//! ```
//!
//! Every section except `schema` and `group` is optional. Edges are read as
//! raw element pairs so that loops and out-of-range elements surface as
//! verification failures rather than parse errors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::Construction;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet};
use crate::group::{Group, GroupElement, GroupFamily};
use crate::oracle;
use crate::rainbow::{self, RainbowTreeSet};
use crate::starter::{self, Factorization, Starter, StarterBlock};

pub const SCHEMA_VERSION: u32 = 1;

pub type RawEdge = [GroupElement; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema: u32,
    pub group: GroupFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starter: Option<StarterDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trees: Option<TreesDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarterDoc {
    pub blocks: Vec<BlockDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub edges: Vec<RawEdge>,
    pub stabilizer_generators: Vec<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDoc {
    pub factors: Vec<Vec<RawEdge>>,
    pub block_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreesDoc {
    pub trees: Vec<Vec<RawEdge>>,
    pub t1: Vec<RawEdge>,
    pub t2: Vec<RawEdge>,
    pub transversal: Vec<GroupElement>,
}

fn raw(set: &EdgeSet) -> Vec<RawEdge> {
    set.iter().map(|e| e.endpoints()).collect()
}

impl StarterDoc {
    pub fn from_starter(s: &Starter) -> Self {
        Self {
            blocks: s
                .blocks
                .iter()
                .map(|b| BlockDoc {
                    edges: raw(&b.edges),
                    stabilizer_generators: b.stabilizer.generators().to_vec(),
                })
                .collect(),
        }
    }
}

impl Document {
    pub fn new(family: GroupFamily) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            group: family,
            starter: None,
            factorization: None,
            trees: None,
        }
    }

    pub fn from_construction(c: &Construction) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            group: c.family,
            starter: Some(StarterDoc::from_starter(&c.starter)),
            factorization: Some(FactorizationDoc {
                factors: c.factorization.factors.iter().map(raw).collect(),
                block_of: c.factorization.block_of.clone(),
            }),
            trees: Some(TreesDoc {
                trees: c.trees.trees.iter().map(raw).collect(),
                t1: raw(&c.trees.t1),
                t2: raw(&c.trees.t2),
                transversal: c.trees.transversal.clone(),
            }),
        }
    }

    pub fn from_starter(s: &Starter) -> Self {
        Self {
            starter: Some(StarterDoc::from_starter(s)),
            ..Self::new(s.group.family())
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Parses and checks the schema version and the group parameter.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Parse {
                what: "schema version",
                input: doc.schema.to_string(),
            });
        }
        Group::new(doc.group)?;
        Ok(doc)
    }
}

/// One named check in a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.id)
            .collect()
    }

    fn push(&mut self, id: &'static str, details: Vec<String>) {
        self.checks.push(Check {
            id,
            passed: details.is_empty(),
            details,
        });
    }

    fn skip(&mut self, id: &'static str, why: &str) {
        self.checks.push(Check {
            id,
            passed: false,
            details: vec![format!("not checked: {why}")],
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.id)?;
            for d in c.details.iter().take(10) {
                writeln!(f, "    {d}")?;
            }
            if c.details.len() > 10 {
                writeln!(f, "    ... {} more", c.details.len() - 10)?;
            }
        }
        Ok(())
    }
}

/// Converts raw pairs, collecting a message for every loop or foreign element.
fn edge_list(group: &Group, where_: &str, pairs: &[RawEdge], bad: &mut Vec<String>) -> EdgeSet {
    let mut out = EdgeSet::new();
    for (i, &[x, y]) in pairs.iter().enumerate() {
        if let Some(z) = [x, y].into_iter().find(|&z| !group.contains(z)) {
            bad.push(format!(
                "{where_} edge {i}: {z} is not an element of {}",
                group.family()
            ));
            continue;
        }
        match Edge::new(x, y) {
            Ok(e) => {
                if !out.insert(e) {
                    bad.push(format!("{where_} edge {i}: {e} listed twice"));
                }
            }
            Err(_) => bad.push(format!("{where_} edge {i}: loop at {x}")),
        }
    }
    out
}

/// Checks every section present in `doc` from first principles.
///
/// Errors are reserved for documents whose group cannot be built; all other
/// problems are reported as failed checks.
pub fn verify(doc: &Document) -> Result<VerifyReport> {
    let group = Group::new(doc.group)?;
    let mut report = VerifyReport::default();
    let mut bad = Vec::new();

    let starter = doc.starter.as_ref().map(|s| {
        let blocks = s
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let gens: Vec<GroupElement> = b
                    .stabilizer_generators
                    .iter()
                    .copied()
                    .filter(|&x| {
                        let ok = group.contains(x);
                        if !ok {
                            bad.push(format!("block {i}: generator {x} is not a group element"));
                        }
                        ok
                    })
                    .collect();
                StarterBlock {
                    edges: edge_list(&group, &format!("block {i}"), &b.edges, &mut bad),
                    stabilizer: group.subgroup(&gens),
                }
            })
            .collect();
        Starter { group, blocks }
    });
    let factors: Option<Vec<EdgeSet>> = doc.factorization.as_ref().map(|f| {
        f.factors
            .iter()
            .enumerate()
            .map(|(i, p)| edge_list(&group, &format!("factor {i}"), p, &mut bad))
            .collect()
    });
    let trees = doc.trees.as_ref().map(|t| {
        let trees: Vec<EdgeSet> = t
            .trees
            .iter()
            .enumerate()
            .map(|(i, p)| edge_list(&group, &format!("tree {i}"), p, &mut bad))
            .collect();
        let t1 = edge_list(&group, "t1", &t.t1, &mut bad);
        let t2 = edge_list(&group, "t2", &t.t2, &mut bad);
        for &x in &t.transversal {
            if !group.contains(x) {
                bad.push(format!("transversal: {x} is not a group element"));
            }
        }
        (trees, t1, t2, t.transversal.clone())
    });
    report.push("edges", bad);

    // starter
    let mut expanded: Option<Factorization> = None;
    if let Some(s) = &starter {
        let r = starter::validate_starter(s);
        report.push(
            "starter",
            r.violations.iter().map(ToString::to_string).collect(),
        );
        if r.passed() {
            match starter::expand_starter(s) {
                Ok(f) => expanded = Some(f),
                Err(e) => report.push("starter.expansion", vec![e.to_string()]),
            }
        }
    }

    // factorization
    let mut factorization: Option<Factorization> = None;
    if let Some(fs) = &factors {
        let problems = starter::check_factorization(&group, fs);
        report.push(
            "factorization",
            problems.iter().map(ToString::to_string).collect(),
        );
        let block_of = doc
            .factorization
            .as_ref()
            .map(|f| f.block_of.clone())
            .unwrap_or_default();
        if problems.is_empty() {
            factorization = Factorization::from_factors(group, fs.clone(), block_of.clone()).ok();
        }
        if let Some(exp) = &expanded {
            let mut details = Vec::new();
            if &exp.factors != fs {
                details.push("factors differ from the expansion of the starter".to_string());
            }
            if exp.block_of != block_of {
                details.push("block_of differs from the expansion of the starter".to_string());
            }
            report.push("factorization.provenance", details);
        } else if starter.is_some() {
            report.skip("factorization.provenance", "the starter is invalid");
        }
    } else {
        factorization = expanded.clone();
    }

    // trees
    if let Some((trees, t1, t2, transversal)) = trees {
        let recount = oracle::recount_partition(&trees, &group);
        let mut details = Vec::new();
        details.extend(
            recount
                .duplicated
                .iter()
                .map(|(e, c)| format!("{e} in {c} trees")),
        );
        details.extend(recount.missing.iter().map(|e| format!("{e} in no tree")));
        details.extend(recount.foreign.iter().map(|e| format!("{e} is foreign")));
        report.push("trees.partition", details);
        match &factorization {
            Some(f) => {
                let cert = rainbow::certify(&trees, f);
                report.push(
                    "trees.certify",
                    cert.violations.iter().map(ToString::to_string).collect(),
                );
            }
            None => report.skip("trees.certify", "no valid factorization to colour against"),
        }
        let rebuilt = RainbowTreeSet::from_generators(&group, t1, t2, transversal);
        let details = if rebuilt.trees == trees {
            Vec::new()
        } else {
            vec!["trees are not the translates of t1 and t2 by the transversal".to_string()]
        };
        report.push("trees.provenance", details);
    }

    if doc.starter.is_none() && doc.factorization.is_none() && doc.trees.is_none() {
        report.push(
            "content",
            vec!["document has no starter, factorization or trees".into()],
        );
    }
    Ok(report)
}
