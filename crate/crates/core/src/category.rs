//! Categories of coloured partitions as membership oracles.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::closure::{Closure, OneRow};
use crate::colour::{Colour, ColourSet};
use crate::enumerate::{enumerate, PartitionClass};
use crate::error::{Error, Result};
use crate::fusion::{FusionSet, FusionSetRecord};
use crate::group::{FiniteGroup, GroupSpec};
use crate::partition::{ColouredPartition, PartitionRecord};

/// Answer of a membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Membership {
    Yes,
    No,
    UnknownAtBound,
}

impl Membership {
    pub fn is_yes(self) -> bool {
        self == Membership::Yes
    }
}

#[derive(Clone, Debug)]
enum Kind {
    All,
    NonCrossing,
    NonCrossingPair,
    Gamma0 {
        group: FiniteGroup,
        elements: Vec<usize>,
    },
    SAb {
        s: usize,
    },
    FusionSet(FusionSet),
    FreeProduct(Box<Category>, Box<Category>),
    Abelianized(Box<Category>),
    Generated(Closure),
}

/// A category of partitions over a colour set.
#[derive(Clone, Debug)]
pub struct Category {
    colours: ColourSet,
    kind: Kind,
}

impl Category {
    pub fn all(colours: ColourSet) -> Self {
        Self {
            colours,
            kind: Kind::All,
        }
    }

    pub fn noncrossing(colours: ColourSet) -> Self {
        Self {
            colours,
            kind: Kind::NonCrossing,
        }
    }

    /// Noncrossing pairings whose pairs are rotated identities.
    pub fn noncrossing_pair(colours: ColourSet) -> Self {
        Self {
            colours,
            kind: Kind::NonCrossingPair,
        }
    }

    /// Colours are the elements of `subset`; blocks balance the ordered products of both rows.
    pub fn gamma0(group: FiniteGroup, subset: &[usize]) -> Result<Self> {
        let mut elements = subset.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() || elements.iter().any(|&g| g >= group.order()) {
            return Err(Error::InvalidParameter(
                "subset must be a non-empty set of group elements".into(),
            ));
        }
        let pos = |g: usize| elements.iter().position(|&h| h == g);
        let conj = elements
            .iter()
            .map(|&g| pos(group.inv(g)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::InvalidParameter("subset must be closed under inverses".into())
            })?;
        let names = elements
            .iter()
            .map(|&g| {
                if g == group.identity() {
                    "e".to_string()
                } else {
                    format!("g{g}")
                }
            })
            .collect();
        Ok(Self {
            colours: ColourSet::new(names, conj)?,
            kind: Kind::Gamma0 { group, elements },
        })
    }

    /// Colours `w` and `b`, conjugate to each other; blocks balance `#w - #b` on both rows mod `s`.
    pub fn s_ab(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("s must be at least 1".into()));
        }
        Ok(Self {
            colours: ColourSet::from_pairs(&[("w", "b")])?,
            kind: Kind::SAb { s },
        })
    }

    pub fn c_s(s: &FusionSet) -> Result<Self> {
        if !s.check_axioms().associative {
            return Err(Error::NonAssociativeFusionSet);
        }
        Ok(Self {
            colours: s.colour_set(),
            kind: Kind::FusionSet(s.clone()),
        })
    }

    /// Free product over the disjoint union of the colour sets.
    pub fn free_product(a: Category, b: Category) -> Self {
        Self {
            colours: a.colours.disjoint_union(&b.colours),
            kind: Kind::FreeProduct(Box::new(a), Box::new(b)),
        }
    }

    /// Adds every crossing between two colours.
    pub fn abelianize(c: Category) -> Self {
        Self {
            colours: c.colours.clone(),
            kind: Kind::Abelianized(Box::new(c)),
        }
    }

    pub fn generated(
        colours: ColourSet,
        generators: Vec<ColouredPartition>,
        bound: usize,
        slack: usize,
    ) -> Result<Self> {
        let c = Closure::new(colours.clone(), generators, bound, slack)?;
        Ok(Self {
            colours,
            kind: Kind::Generated(c),
        })
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn closure(&self) -> Option<&Closure> {
        match &self.kind {
            Kind::Generated(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_generated(&self) -> bool {
        matches!(self.kind, Kind::Generated(_))
    }

    /// Whether membership implies noncrossing.
    pub fn is_noncrossing(&self) -> bool {
        match &self.kind {
            Kind::NonCrossing
            | Kind::NonCrossingPair
            | Kind::Gamma0 { .. }
            | Kind::FusionSet(_) => true,
            Kind::FreeProduct(a, b) => a.is_noncrossing() && b.is_noncrossing(),
            Kind::All | Kind::SAb { .. } | Kind::Abelianized(_) | Kind::Generated(_) => false,
        }
    }

    /// Builtins whose equivalence of projectives is decided by the through-block witness.
    pub fn witness_decides(&self) -> bool {
        matches!(
            self.kind,
            Kind::NonCrossing | Kind::NonCrossingPair | Kind::Gamma0 { .. } | Kind::FusionSet(_)
        )
    }

    pub fn contains(&self, p: &ColouredPartition) -> Membership {
        if p.colours().any(|c| !self.colours.contains(c)) {
            return Membership::No;
        }
        if p.size() == 0 {
            return Membership::Yes;
        }
        let yes = |b: bool| if b { Membership::Yes } else { Membership::No };
        match &self.kind {
            Kind::All => Membership::Yes,
            Kind::NonCrossing => yes(p.is_noncrossing()),
            Kind::NonCrossingPair => yes(p.is_noncrossing() && self.pairs_are_identities(p)),
            Kind::Gamma0 { group, elements } => {
                yes(p.is_noncrossing() && gamma0_balanced(p, group, elements))
            }
            Kind::SAb { s } => yes(s_ab_balanced(p, *s)),
            Kind::FusionSet(s) => yes(p.is_noncrossing() && c_s_blocks(p, s)),
            Kind::FreeProduct(a, b) => free_product_contains(self, a, b, p),
            Kind::Abelianized(c) => abelianized_contains(&self.colours, c, p),
            Kind::Generated(c) => {
                if c.contains(p) {
                    Membership::Yes
                } else {
                    Membership::UnknownAtBound
                }
            }
        }
    }

    fn pairs_are_identities(&self, p: &ColouredPartition) -> bool {
        let r = p.to_one_row(&self.colours);
        r.partition()
            .blocks()
            .iter()
            .all(|b| b.len() == 2 && r.lower()[b[1]] == self.colours.conj(r.lower()[b[0]]))
    }

    /// Members with `k` upper and `l` lower points and the given words.
    pub fn members(&self, upper: &[Colour], lower: &[Colour]) -> Vec<ColouredPartition> {
        let class = match self.kind {
            Kind::NonCrossingPair => PartitionClass::NonCrossingPair,
            _ if self.is_noncrossing() => PartitionClass::NonCrossing,
            _ => PartitionClass::All,
        };
        enumerate(upper.len(), lower.len(), class)
            .unwrap_or_default()
            .into_iter()
            .map(|p| {
                ColouredPartition::new(p, upper.to_vec(), lower.to_vec()).expect("word lengths")
            })
            .filter(|p| self.contains(p).is_yes())
            .collect()
    }

    /// One-row classes of members with between 1 and `max_points` points.
    pub fn member_classes(&self, max_points: usize) -> Vec<OneRow> {
        if let Kind::Generated(c) = &self.kind {
            return c.classes_up_to(max_points);
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for n in 1..=max_points {
            for word in self.colours.words(n) {
                for p in self.members(&[], &word) {
                    let r = OneRow::of(&p, &self.colours);
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Every block of every member with at most `bound` points is itself a member.
    pub fn is_block_stable(&self, bound: usize) -> bool {
        self.block_stability_violation(bound).is_none()
    }

    /// A member with a block that is not a member.
    pub fn block_stability_violation(
        &self,
        bound: usize,
    ) -> Option<(ColouredPartition, ColouredPartition)> {
        for r in self.member_classes(bound) {
            let p = r.to_partition();
            for b in 0..r.num_blocks() {
                let block = r.block(b as u16).to_partition();
                if !self.contains(&block).is_yes() {
                    return Some((p, block));
                }
            }
        }
        None
    }

    pub fn descriptor(&self) -> CategoryDescriptor {
        let colours = Some(self.colours.clone());
        match &self.kind {
            Kind::All => CategoryDescriptor::Builtin(Builtin::All { colours }),
            Kind::NonCrossing => CategoryDescriptor::Builtin(Builtin::NonCrossing { colours }),
            Kind::NonCrossingPair => {
                CategoryDescriptor::Builtin(Builtin::NonCrossingPair { colours })
            }
            Kind::Gamma0 { group, elements } => CategoryDescriptor::Builtin(Builtin::Gamma0 {
                group: group.to_spec(),
                subset: elements.clone(),
            }),
            Kind::SAb { s } => CategoryDescriptor::Builtin(Builtin::SAb { s: *s }),
            Kind::FusionSet(s) => CategoryDescriptor::Builtin(Builtin::FusionSet {
                fusion_set: s.to_record(),
            }),
            Kind::FreeProduct(a, b) => CategoryDescriptor::Builtin(Builtin::FreeProduct {
                left: Box::new(a.descriptor()),
                right: Box::new(b.descriptor()),
            }),
            Kind::Abelianized(c) => CategoryDescriptor::Builtin(Builtin::Abelianize {
                inner: Box::new(c.descriptor()),
            }),
            Kind::Generated(c) => CategoryDescriptor::Generated {
                generators: c
                    .generators()
                    .iter()
                    .map(|g| g.to_record(&self.colours))
                    .collect(),
                bound: c.bound(),
                slack: Some(c.slack()),
                colours,
            },
        }
    }
}

fn block_points(p: &ColouredPartition) -> Vec<(Vec<Colour>, Vec<Colour>)> {
    p.partition()
        .blocks()
        .into_iter()
        .map(|b| {
            let (up, down): (Vec<usize>, Vec<usize>) = b.into_iter().partition(|&i| i < p.k());
            (
                up.iter().map(|&i| p.colour(i)).collect(),
                down.iter().map(|&i| p.colour(i)).collect(),
            )
        })
        .collect()
}

fn gamma0_balanced(p: &ColouredPartition, g: &FiniteGroup, elements: &[usize]) -> bool {
    let prod = |w: &[Colour]| {
        w.iter()
            .fold(g.identity(), |acc, c| g.mul(acc, elements[c.index()]))
    };
    block_points(p).iter().all(|(u, d)| prod(u) == prod(d))
}

fn s_ab_balanced(p: &ColouredPartition, s: usize) -> bool {
    let diff = |w: &[Colour]| -> i64 { w.iter().map(|c| if c.0 == 0 { 1 } else { -1 }).sum() };
    block_points(p)
        .iter()
        .all(|(u, d)| (diff(u) - diff(d)).rem_euclid(s as i64) == 0)
}

fn c_s_blocks(p: &ColouredPartition, s: &FusionSet) -> bool {
    let units: Vec<usize> = (0..s.len()).filter_map(|x| s.fuse(s.conj(x), x)).collect();
    let idx = |w: &[Colour]| w.iter().map(|c| c.index()).collect::<Vec<_>>();
    block_points(p).iter().all(|(u, d)| {
        let (u, d) = (idx(u), idx(d));
        let all_h = u.iter().chain(&d).all(|&x| s.in_h(x));
        let none_h = u.iter().chain(&d).all(|&x| !s.in_h(x));
        if all_h {
            match (u.is_empty(), d.is_empty()) {
                (false, false) => s.fold(&u).is_some() && s.fold(&u) == s.fold(&d),
                (false, true) => s.fold(&u).is_some_and(|f| units.contains(&f)),
                (true, false) => s.fold(&d).is_some_and(|f| units.contains(&f)),
                (true, true) => true,
            }
        } else if none_h {
            match (u.as_slice(), d.as_slice()) {
                ([a], [b]) => a == b,
                ([a, b], []) | ([], [a, b]) => *b == s.conj(*a),
                _ => false,
            }
        } else {
            false
        }
    })
}

/// Removes circular runs of one factor's colours that are unions of blocks and members of that factor.
fn free_product_contains(
    whole: &Category,
    a: &Category,
    b: &Category,
    p: &ColouredPartition,
) -> Membership {
    let offset = a.colours.len() as u16;
    let r = p.to_one_row(&whole.colours);
    let mut labels: Vec<u16> = r.partition().labels().to_vec();
    let mut colours: Vec<Colour> = r.lower().to_vec();
    let mut unknown = false;
    let family = |c: Colour| c.0 >= offset;
    let local = |c: Colour| {
        if c.0 >= offset {
            Colour(c.0 - offset)
        } else {
            c
        }
    };
    let factor = |f: bool| if f { b } else { a };
    let test = |idx: &[usize], labels: &[u16], colours: &[Colour], unknown: &mut bool| -> bool {
        let sub = OneRow::class_of(
            &idx.iter().map(|&i| labels[i]).collect::<Vec<_>>(),
            &idx.iter().map(|&i| local(colours[i])).collect::<Vec<_>>(),
        );
        match factor(family(colours[idx[0]])).contains(&sub.to_partition()) {
            Membership::Yes => true,
            Membership::UnknownAtBound => {
                *unknown = true;
                false
            }
            Membership::No => false,
        }
    };
    loop {
        let n = labels.len();
        if n == 0 {
            return Membership::Yes;
        }
        if colours.iter().all(|&c| family(c) == family(colours[0])) {
            let idx: Vec<usize> = (0..n).collect();
            return if test(&idx, &labels, &colours, &mut unknown) {
                Membership::Yes
            } else if unknown {
                Membership::UnknownAtBound
            } else {
                Membership::No
            };
        }
        let mut removed = None;
        'search: for start in 0..n {
            let f = family(colours[start]);
            for len in 1..n {
                let idx: Vec<usize> = (0..len).map(|t| (start + t) % n).collect();
                if idx.iter().any(|&i| family(colours[i]) != f) {
                    break;
                }
                let inside: HashSet<u16> = idx.iter().map(|&i| labels[i]).collect();
                let closed = (0..n).all(|i| idx.contains(&i) || !inside.contains(&labels[i]));
                if closed && test(&idx, &labels, &colours, &mut unknown) {
                    removed = Some(idx);
                    break 'search;
                }
            }
        }
        match removed {
            Some(idx) => {
                let keep: Vec<usize> = (0..n).filter(|i| !idx.contains(i)).collect();
                labels = keep.iter().map(|&i| labels[i]).collect();
                colours = keep.iter().map(|&i| colours[i]).collect();
            }
            None => {
                return if unknown {
                    Membership::UnknownAtBound
                } else {
                    Membership::No
                }
            }
        }
    }
}

/// Some permutation of the points of the one-row form lies in the inner category.
fn abelianized_contains(cs: &ColourSet, inner: &Category, p: &ColouredPartition) -> Membership {
    let r = p.to_one_row(cs);
    let labels = r.partition().labels().to_vec();
    let colours = r.lower().to_vec();
    let mut seen = HashSet::new();
    let mut unknown = false;
    let mut perm: Vec<usize> = (0..labels.len()).collect();
    loop {
        let cand = OneRow::class_of(
            &perm.iter().map(|&i| labels[i]).collect::<Vec<_>>(),
            &perm.iter().map(|&i| colours[i]).collect::<Vec<_>>(),
        );
        if seen.insert(cand.clone()) {
            match inner.contains(&cand.to_partition()) {
                Membership::Yes => return Membership::Yes,
                Membership::UnknownAtBound => unknown = true,
                Membership::No => {}
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    if unknown {
        Membership::UnknownAtBound
    } else {
        Membership::No
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// JSON description of a category.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CategoryDescriptor {
    Builtin(Builtin),
    Generated {
        generators: Vec<PartitionRecord>,
        bound: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        slack: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colours: Option<ColourSet>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Builtin {
    #[serde(rename = "ALL")]
    All {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colours: Option<ColourSet>,
    },
    #[serde(rename = "NC")]
    NonCrossing {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colours: Option<ColourSet>,
    },
    #[serde(rename = "NC2")]
    NonCrossingPair {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colours: Option<ColourSet>,
    },
    #[serde(rename = "C_gamma0")]
    Gamma0 {
        group: GroupSpec,
        subset: Vec<usize>,
    },
    #[serde(rename = "C_s_ab")]
    SAb { s: usize },
    #[serde(rename = "C_S")]
    FusionSet { fusion_set: FusionSetRecord },
    #[serde(rename = "free_product")]
    FreeProduct {
        left: Box<CategoryDescriptor>,
        right: Box<CategoryDescriptor>,
    },
    #[serde(rename = "abelianize")]
    Abelianize { inner: Box<CategoryDescriptor> },
}

/// Default intermediate slack: the closure works with up to twice the point bound.
pub fn default_slack(bound: usize) -> usize {
    bound
}

impl CategoryDescriptor {
    pub fn build(&self) -> Result<Category> {
        match self {
            CategoryDescriptor::Builtin(b) => match b {
                Builtin::All { colours } => Ok(Category::all(colours.clone().unwrap_or_default())),
                Builtin::NonCrossing { colours } => {
                    Ok(Category::noncrossing(colours.clone().unwrap_or_default()))
                }
                Builtin::NonCrossingPair { colours } => Ok(Category::noncrossing_pair(
                    colours.clone().unwrap_or_default(),
                )),
                Builtin::Gamma0 { group, subset } => Category::gamma0(group.build()?, subset),
                Builtin::SAb { s } => Category::s_ab(*s),
                Builtin::FusionSet { fusion_set } => {
                    Category::c_s(&FusionSet::from_record(fusion_set)?)
                }
                Builtin::FreeProduct { left, right } => {
                    Ok(Category::free_product(left.build()?, right.build()?))
                }
                Builtin::Abelianize { inner } => Ok(Category::abelianize(inner.build()?)),
            },
            CategoryDescriptor::Generated {
                generators,
                bound,
                slack,
                colours,
            } => {
                let cs = colours.clone().unwrap_or_default();
                let gens = generators
                    .iter()
                    .map(|g| ColouredPartition::from_record(g, &cs))
                    .collect::<Result<Vec<_>>>()?;
                Category::generated(
                    cs,
                    gens,
                    *bound,
                    slack.unwrap_or_else(|| default_slack(*bound)),
                )
            }
        }
    }

    /// Builtin from a bare tag such as `NC2`.
    pub fn from_tag(tag: &str) -> Result<Self> {
        let b = match tag {
            "ALL" => Builtin::All { colours: None },
            "NC" => Builtin::NonCrossing { colours: None },
            "NC2" => Builtin::NonCrossingPair { colours: None },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "builtin `{tag}` needs parameters"
                )))
            }
        };
        Ok(CategoryDescriptor::Builtin(b))
    }
}
