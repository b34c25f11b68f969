//! Exact arithmetic in groups `G = <a, b>` with `<a>` cyclic of index two.
//!
//! Every element has a unique normal form `b^eps * a^k` with `eps` in `{0, 1}`
//! and `0 <= k < ord(a)`. All four families share the rewriting rules
//!
//! ```text
//! a^k * b = b * a^(k * twist)        b * b = a^square
//! ```
//!
//! so a family is fully described by `ord(a)`, the twist multiplier and the
//! exponent of `b^2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Family tag plus its numeric parameter (`s` for dicyclic, `n` otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", content = "parameter", rename_all = "lowercase")]
pub enum GroupFamily {
    /// Order `4s`, `s >= 2`.
    Dicyclic(u32),
    /// `Z_2 x Z_n`, order `2n`, `4 | n`.
    Abelian(u32),
    /// Order `2n`, `n` a power of two, `n >= 8`.
    Semidihedral(u32),
    /// Modular maximal-cyclic group, order `2n`, `n` a power of two, `n >= 8`.
    Modular(u32),
}

impl GroupFamily {
    pub const NAMES: [&'static str; 4] = ["dicyclic", "abelian", "semidihedral", "modular"];

    /// Builds a family from its command-line name and parameter. No
    /// validation happens here; see [`Group::new`].
    pub fn from_name(name: &str, parameter: u32) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "dicyclic" => Ok(Self::Dicyclic(parameter)),
            "abelian" => Ok(Self::Abelian(parameter)),
            "semidihedral" => Ok(Self::Semidihedral(parameter)),
            "modular" => Ok(Self::Modular(parameter)),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Dicyclic(_) => "dicyclic",
            Self::Abelian(_) => "abelian",
            Self::Semidihedral(_) => "semidihedral",
            Self::Modular(_) => "modular",
        }
    }

    pub fn parameter(self) -> u32 {
        match self {
            Self::Dicyclic(p) | Self::Abelian(p) | Self::Semidihedral(p) | Self::Modular(p) => p,
        }
    }

    /// Rejects parameters for which the constructions are undefined.
    pub fn check(self) -> Result<()> {
        let reject = |reason: &str| {
            Err(Error::UnsupportedParameter {
                family: self.name(),
                parameter: self.parameter(),
                reason: reason.to_string(),
            })
        };
        match self {
            Self::Dicyclic(s) if s < 2 => reject("the dicyclic family needs s >= 2"),
            Self::Abelian(n) if n < 4 || n % 4 != 0 => {
                // n = 2 mod 4 is left open: the starter needs the element a^(n/4).
                reject("the abelian family needs n >= 4 with 4 | n")
            }
            Self::Semidihedral(n) | Self::Modular(n) if n < 8 || !n.is_power_of_two() => {
                reject("n must be a power of two with n >= 8")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self {
            Self::Dicyclic(_) => "s",
            _ => "n",
        };
        write!(f, "{}({}={})", self.name(), symbol, self.parameter())
    }
}

/// An element `b^eps * a^k` in normal form.
///
/// The derived ordering is `(eps, k)` lexicographic, which is the total order
/// used for canonical edges and vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    eps: u8,
    k: u32,
}

impl GroupElement {
    pub const IDENTITY: Self = Self { eps: 0, k: 0 };

    /// Raw constructor; `k` is not reduced. Use [`Group::element`] to get a
    /// checked normal form.
    pub const fn new(b_power: bool, k: u32) -> Self {
        Self {
            eps: b_power as u8,
            k,
        }
    }

    pub fn eps(self) -> u8 {
        self.eps
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn has_b(self) -> bool {
        self.eps == 1
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.eps, self.k) {
            (0, 0) => f.write_str("1"),
            (0, k) => write!(f, "a^{k}"),
            (_, 0) => f.write_str("b"),
            (_, k) => write!(f, "b*a^{k}"),
        }
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Accepts `1`, `a`, `a^k`, `b`, `b*a`, `b*a^k`, and the same without the
    /// `*` (`ba^3`).
    fn from_str(s: &str) -> Result<Self> {
        let fail = || Error::Parse {
            what: "group element",
            input: s.to_string(),
        };
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "1" {
            return Ok(Self::IDENTITY);
        }
        let (b_power, rest) = match text.strip_prefix('b') {
            Some(r) => (true, r.strip_prefix('*').unwrap_or(r)),
            None => (false, text.as_str()),
        };
        if rest.is_empty() {
            return if b_power {
                Ok(Self::new(true, 0))
            } else {
                Err(fail())
            };
        }
        let exponent = rest.strip_prefix('a').ok_or_else(fail)?;
        let k = match exponent {
            "" => 1,
            e => {
                let digits = e.strip_prefix('^').ok_or_else(fail)?;
                let digits = digits
                    .strip_prefix('{')
                    .and_then(|d| d.strip_suffix('}'))
                    .unwrap_or(digits);
                digits.parse().map_err(|_| fail())?
            }
        };
        Ok(Self::new(b_power, k))
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A validated group of one of the four families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Group {
    family: GroupFamily,
    cyclic_order: u32,
    twist: u32,
    b_square: u32,
}

impl Group {
    pub fn new(family: GroupFamily) -> Result<Self> {
        family.check()?;
        let (cyclic_order, twist, b_square) = match family {
            GroupFamily::Dicyclic(s) => (2 * s, 2 * s - 1, s),
            GroupFamily::Abelian(n) => (n, 1, 0),
            GroupFamily::Semidihedral(n) => (n, n / 2 - 1, 0),
            GroupFamily::Modular(n) => (n, n / 2 + 1, 0),
        };
        Ok(Self {
            family,
            cyclic_order,
            twist,
            b_square,
        })
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    /// `|G|`, the number of vertices of the complete graph.
    pub fn order(&self) -> usize {
        2 * self.cyclic_order as usize
    }

    /// `n` with `|G| = 2n`; the number of trees in a complete set.
    pub fn half_order(&self) -> usize {
        self.cyclic_order as usize
    }

    /// `ord(a)`.
    pub fn cyclic_order(&self) -> u32 {
        self.cyclic_order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    /// `a^k`, with `k` reduced modulo `ord(a)`.
    pub fn a(&self, k: i64) -> GroupElement {
        GroupElement::new(false, self.reduce(k))
    }

    /// `b * a^k`, with `k` reduced modulo `ord(a)`.
    pub fn ba(&self, k: i64) -> GroupElement {
        GroupElement::new(true, self.reduce(k))
    }

    /// The unique involution `a^(ord(a)/2)` of the cyclic subgroup `<a>`.
    pub fn central_involution(&self) -> GroupElement {
        self.a(i64::from(self.cyclic_order / 2))
    }

    fn reduce(&self, k: i64) -> u32 {
        k.rem_euclid(i64::from(self.cyclic_order)) as u32
    }

    /// Checks that `x` is a normal form of this group.
    pub fn element(&self, x: GroupElement) -> Result<GroupElement> {
        if x.eps > 1 || x.k >= self.cyclic_order {
            return Err(Error::ElementOutOfRange {
                element: x,
                group: self.family.to_string(),
            });
        }
        Ok(x)
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        x.eps <= 1 && x.k < self.cyclic_order
    }

    /// All elements in the total order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let m = self.cyclic_order;
        [false, true]
            .into_iter()
            .flat_map(move |b| (0..m).map(move |k| GroupElement::new(b, k)))
    }

    /// Position of `x` in the total order; a vertex index in `0..order()`.
    pub fn index(&self, x: GroupElement) -> usize {
        debug_assert!(self.contains(x), "{x} is not an element of {}", self.family);
        x.eps as usize * self.cyclic_order as usize + x.k as usize
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        let m = self.cyclic_order as usize;
        GroupElement::new(index >= m, (index % m) as u32)
    }

    /// Normal form of `x * y`.
    pub fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        debug_assert!(
            self.contains(x) && self.contains(y),
            "operands outside {}",
            self.family
        );
        let m = u64::from(self.cyclic_order);
        if y.eps == 0 {
            return GroupElement::new(x.has_b(), ((u64::from(x.k) + u64::from(y.k)) % m) as u32);
        }
        // b^e a^k1 * b a^k2 = b^e b a^(k1 * twist) a^k2
        let k = (u64::from(x.k) * u64::from(self.twist) + u64::from(y.k)) % m;
        if x.has_b() {
            GroupElement::new(false, ((k + u64::from(self.b_square)) % m) as u32)
        } else {
            GroupElement::new(true, k as u32)
        }
    }

    pub fn inv(&self, x: GroupElement) -> GroupElement {
        let m = i64::from(self.cyclic_order);
        let k = i64::from(x.k);
        if x.has_b() {
            // (b a^k)(b a^k') = a^(k * twist + k' + square)
            self.ba(-k * i64::from(self.twist) - i64::from(self.b_square))
        } else {
            self.a(m - k)
        }
    }

    pub fn pow(&self, x: GroupElement, e: u64) -> GroupElement {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, x))
    }

    pub fn is_involution(&self, x: GroupElement) -> bool {
        !x.is_identity() && self.mul(x, x).is_identity()
    }

    /// All elements of order two, in the total order.
    pub fn involutions(&self) -> Vec<GroupElement> {
        self.elements().filter(|&x| self.is_involution(x)).collect()
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[GroupElement]) -> Subgroup {
        let mut elements = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if elements.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            elements: elements.into_iter().collect(),
            generators: gens.to_vec(),
        }
    }

    /// The whole group as a subgroup, generated by `a` and `b`.
    pub fn full_subgroup(&self) -> Subgroup {
        self.subgroup(&[self.a(1), self.ba(0)])
    }

    /// The cyclic subgroup `<a>` of index two.
    pub fn cyclic_subgroup(&self) -> Subgroup {
        self.subgroup(&[self.a(1)])
    }

    /// True iff `reps` has `[G:H]` elements whose left cosets `xH` partition `G`.
    pub fn is_left_transversal(&self, reps: &[GroupElement], h: &Subgroup) -> bool {
        if reps.len() * h.order() != self.order() {
            return false;
        }
        let mut seen = vec![false; self.order()];
        for &x in reps {
            for &y in h.elements() {
                let idx = self.index(self.mul(x, y));
                if std::mem::replace(&mut seen[idx], true) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of order {}", self.family, self.order())
    }
}

/// A subgroup stored as its sorted element list together with the
/// generators it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Index `[G:H]`.
    pub fn index_in(&self, group: &Group) -> usize {
        group.order() / self.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> Group {
        Group::new(GroupFamily::Dicyclic(2)).unwrap()
    }

    #[test]
    fn dicyclic_square_of_ba() {
        let g = q8();
        assert_eq!(g.mul(g.ba(1), g.ba(1)), g.a(2));
    }

    #[test]
    fn right_identity() {
        for fam in [
            GroupFamily::Dicyclic(3),
            GroupFamily::Abelian(8),
            GroupFamily::Semidihedral(8),
            GroupFamily::Modular(16),
        ] {
            let g = Group::new(fam).unwrap();
            for x in g.elements() {
                assert_eq!(g.mul(x, g.identity()), x);
                assert_eq!(g.mul(g.identity(), x), x);
            }
        }
    }

    #[test]
    fn semidihedral_a_times_b() {
        let g = Group::new(GroupFamily::Semidihedral(8)).unwrap();
        assert_eq!(g.mul(g.a(1), g.ba(0)), g.ba(3));
    }

    #[test]
    fn inverses() {
        let g = q8();
        assert_eq!(g.inv(g.ba(1)), g.ba(3));
        assert_eq!(g.inv(g.identity()), g.identity());
        let ab = Group::new(GroupFamily::Abelian(4)).unwrap();
        assert_eq!(ab.inv(ab.ba(3)), ab.ba(1));
    }

    #[test]
    fn involution_sets() {
        assert_eq!(q8().involutions(), vec![q8().a(2)]);

        let ab = Group::new(GroupFamily::Abelian(4)).unwrap();
        assert_eq!(ab.involutions(), vec![ab.a(2), ab.ba(0), ab.ba(2)]);

        let sd = Group::new(GroupFamily::Semidihedral(8)).unwrap();
        assert_eq!(
            sd.involutions(),
            vec![sd.a(4), sd.ba(0), sd.ba(2), sd.ba(4), sd.ba(6)]
        );
    }

    #[test]
    fn generated_subgroups() {
        let g = q8();
        let b = g.subgroup(&[g.ba(0)]);
        assert_eq!(b.elements(), &[g.a(0), g.a(2), g.ba(0), g.ba(2)]);
        assert!(g.subgroup(&[g.identity()]).is_trivial());
        let b_a2 = g.subgroup(&[g.ba(0), g.a(2)]);
        assert_eq!(b_a2.elements(), b.elements());
        assert_eq!(b_a2.generators(), &[g.ba(0), g.a(2)]);
    }

    #[test]
    fn left_transversals() {
        let g = q8();
        let b_a2 = g.subgroup(&[g.ba(0), g.a(2)]);
        assert!(g.is_left_transversal(&[g.a(0), g.a(1)], &b_a2));
        let all: Vec<_> = g.elements().collect();
        assert!(g.is_left_transversal(&all, &g.subgroup(&[])));
        let b = g.subgroup(&[g.ba(0)]);
        assert!(!g.is_left_transversal(&[g.a(0), g.a(2)], &b));
    }

    #[test]
    fn parameter_guards() {
        assert!(Group::new(GroupFamily::Dicyclic(1)).is_err());
        assert!(Group::new(GroupFamily::Abelian(6)).is_err());
        assert!(Group::new(GroupFamily::Abelian(2)).is_err());
        assert!(Group::new(GroupFamily::Semidihedral(4)).is_err());
        assert!(Group::new(GroupFamily::Modular(12)).is_err());
        assert!(Group::new(GroupFamily::Modular(8)).is_ok());
    }

    #[test]
    fn element_strings() {
        let g = q8();
        for x in g.elements() {
            assert_eq!(x.to_string().parse::<GroupElement>().unwrap(), x);
        }
        assert_eq!("ba^3".parse::<GroupElement>().unwrap(), g.ba(3));
        assert_eq!("b*a".parse::<GroupElement>().unwrap(), g.ba(1));
        assert_eq!("a".parse::<GroupElement>().unwrap(), g.a(1));
        assert!("c".parse::<GroupElement>().is_err());
        assert!("a^".parse::<GroupElement>().is_err());
        assert!(g.element("a^9".parse().unwrap()).is_err());
    }
}
