//! Projective partitions, their equivalence classes and fusion rules.
//!
//! A projective `p` labels the subrepresentation `u_p` of `u^{⊗w}`. Only the
//! combinatorics is modelled: terms of tensor products are returned as
//! projective partitions and compared up to equivalence.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::category::{Category, Membership};
use crate::colour::Colour;
use crate::error::{Error, Result};
use crate::fusion::FusionSet;
use crate::partition::{ColouredPartition, Partition};

/// Colour of the middle row in through-block decompositions.
pub const X0: Colour = Colour(0);

/// `pp = p = p*` at partition level, with equal words on both rows.
pub fn is_projective(p: &ColouredPartition) -> bool {
    p.upper() == p.lower()
        && p.adjoint() == *p
        && ColouredPartition::compose(p, p).is_ok_and(|c| c.result == *p)
}

/// A coloured partition known to be projective.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Projective(ColouredPartition);

impl Projective {
    pub fn new(p: ColouredPartition) -> Result<Self> {
        if is_projective(&p) {
            Ok(Self(p))
        } else {
            Err(Error::NotProjective)
        }
    }

    pub fn partition(&self) -> &ColouredPartition {
        &self.0
    }

    pub fn into_inner(self) -> ColouredPartition {
        self.0
    }

    pub fn word(&self) -> &[Colour] {
        self.0.upper()
    }

    /// Number of through-blocks `t(p)`.
    pub fn t(&self) -> usize {
        self.0.through_blocks()
    }

    pub fn upper_half(&self, x0: Colour) -> Result<ColouredPartition> {
        through_decomposition(&self.0, x0)
    }
}

/// The upper half `p_u ∈ P(w, x₀^t)` with `p_u* p_u = p`.
///
/// Each through-block keeps its upper points and gets one lower point, in the
/// order of the leftmost upper points.
pub fn through_decomposition(p: &ColouredPartition, x0: Colour) -> Result<ColouredPartition> {
    if !is_projective(p) {
        return Err(Error::NotProjective);
    }
    let part = p.partition();
    let through = part.through_labels();
    let upper = part.upper_labels().iter().map(|&x| x as usize);
    let pu = Partition::from_labels(
        part.k(),
        through.len(),
        upper.chain(through.iter().copied()),
    );
    let pu = ColouredPartition::new(pu, p.upper().to_vec(), vec![x0; through.len()])?;
    let back = ColouredPartition::compose(&pu.adjoint(), &pu)?.result;
    if back != *p {
        return Err(Error::NotProjective);
    }
    Ok(pu)
}

/// Projective members of `C(w, w)`.
pub fn proj_enumerate(c: &Category, w: &[Colour]) -> Vec<Projective> {
    c.members(w, w)
        .into_iter()
        .filter(is_projective)
        .map(Projective)
        .collect()
}

fn witnesses(r: &ColouredPartition, p: &ColouredPartition, q: &ColouredPartition) -> bool {
    let rs = r.adjoint();
    ColouredPartition::compose(&rs, r).is_ok_and(|c| c.result == *p)
        && ColouredPartition::compose(r, &rs).is_ok_and(|c| c.result == *q)
}

/// Whether some `r ∈ C` has `r*r = p` and `rr* = q`.
pub fn equivalent(p: &Projective, q: &Projective, c: &Category) -> Result<bool> {
    if p.t() != q.t() {
        return Ok(false);
    }
    let pu = p.upper_half(X0)?;
    let qu = q.upper_half(X0)?;
    let r = ColouredPartition::compose(&qu.adjoint(), &pu)?.result;
    let found = witnesses(&r, p.partition(), q.partition()) && c.contains(&r).is_yes();
    if found || c.witness_decides() {
        return Ok(found);
    }
    if c.members(p.word(), q.word())
        .iter()
        .any(|r| witnesses(r, p.partition(), q.partition()))
    {
        return Ok(true);
    }
    if c.is_generated() {
        Err(Error::UnknownAtBound)
    } else {
        Ok(false)
    }
}

type MixingCache = Mutex<HashMap<(usize, usize), Vec<Partition>>>;

/// The `(k, l)`-mixing partitions other than the identity, uncoloured on `k + l` points per row.
pub fn enumerate_mixing(k: usize, l: usize) -> Vec<Partition> {
    static CACHE: OnceLock<MixingCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("mixing cache").get(&(k, l)) {
        return m.clone();
    }
    let m = mixing_uncached(k, l);
    cache
        .lock()
        .expect("mixing cache")
        .insert((k, l), m.clone());
    m
}

fn mixing_uncached(k: usize, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; l];
    match_left(k, l, 0, &mut used, &mut pairs, &mut out);
    out.sort();
    out
}

/// Partial matchings of left points with right points, each pair either capped or merged.
fn match_left(
    k: usize,
    l: usize,
    i: usize,
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize, bool)>,
    out: &mut Vec<Partition>,
) {
    if i == k {
        if !pairs.is_empty() {
            out.push(mixing_from_pairs(k + l, pairs));
        }
        return;
    }
    match_left(k, l, i + 1, used, pairs, out);
    for j in 0..l {
        if used[j] {
            continue;
        }
        used[j] = true;
        for merge in [false, true] {
            pairs.push((i, k + j, merge));
            match_left(k, l, i + 1, used, pairs, out);
            pairs.pop();
        }
        used[j] = false;
    }
}

fn mixing_from_pairs(n: usize, pairs: &[(usize, usize, bool)]) -> Partition {
    let mut upper: Vec<usize> = (0..n).collect();
    let mut lower: Vec<usize> = (0..n).collect();
    for &(a, b, merge) in pairs {
        upper[b] = a;
        let low = if merge { a } else { n + a };
        lower[a] = low;
        lower[b] = low;
    }
    Partition::from_labels(n, n, upper.into_iter().chain(lower))
}

/// `h_□^k`: in each row, point `i` is paired with point `2k - i + 1`.
pub fn h_square(k: usize) -> Partition {
    nested(k, false)
}

/// `h_⊡^k`: `h_□^k` with the outermost upper and lower pairs merged into one block.
pub fn h_boxvert(k: usize) -> Partition {
    nested(k, true)
}

fn nested(k: usize, merge: bool) -> Partition {
    let pair = |i: usize| i.min(2 * k - 1 - i);
    let upper = (0..2 * k).map(pair);
    let lower = (0..2 * k).map(|i| {
        let b = pair(i);
        if merge && b == 0 {
            0
        } else {
            k + b
        }
    });
    Partition::from_labels(2 * k, 2 * k, upper.chain(lower))
}

/// `(p_u* ⊗ q_u*) h (p_u ⊗ q_u)` with `h` coloured by [`X0`].
pub fn mix(p: &Projective, q: &Projective, h: &Partition) -> Result<ColouredPartition> {
    let pu = p.upper_half(X0)?;
    let qu = q.upper_half(X0)?;
    let bottom = pu.tensor(&qu);
    let h = ColouredPartition::monochrome(h.clone(), X0);
    let mid = ColouredPartition::compose(&h, &bottom)?.result;
    Ok(ColouredPartition::compose(&bottom.adjoint(), &mid)?.result)
}

fn keep(c: &Category, r: ColouredPartition, out: &mut Vec<Projective>) -> Result<()> {
    match c.contains(&r) {
        Membership::Yes => out.push(Projective::new(r)?),
        Membership::No => {}
        Membership::UnknownAtBound => return Err(Error::UnknownAtBound),
    }
    Ok(())
}

fn tensor_term(p: &Projective, q: &Projective) -> Projective {
    Projective(p.partition().tensor(q.partition()))
}

/// Terms of `u_p ⊗ u_q`: `p ⊗ q` and every `p ∗_h q` lying in `c`.
pub fn fuse_general(p: &Projective, q: &Projective, c: &Category) -> Result<Vec<Projective>> {
    let mut out = vec![tensor_term(p, q)];
    for h in enumerate_mixing(p.t(), q.t()) {
        keep(c, mix(p, q, &h)?, &mut out)?;
    }
    Ok(out)
}

/// Terms of `u_p ⊗ u_q` for noncrossing `c`: `p ⊗ q`, then `p □^k q` and `p ⊡^k q` for each `k`.
pub fn fuse_noncrossing(p: &Projective, q: &Projective, c: &Category) -> Result<Vec<Projective>> {
    if !c.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    let mut out = vec![tensor_term(p, q)];
    for k in 1..=p.t().min(q.t()) {
        let outer = |h: Partition| {
            Partition::identity(p.t() - k)
                .tensor(&h)
                .tensor(&Partition::identity(q.t() - k))
        };
        keep(c, mix(p, q, &outer(h_square(k)))?, &mut out)?;
        keep(c, mix(p, q, &outer(h_boxvert(k)))?, &mut out)?;
    }
    Ok(out)
}

/// Index of an equivalence class within a [`RepClasses`] table.
pub type RepLabel = usize;

/// Equivalence classes of projectives met so far, each with its least member.
#[derive(Clone, Debug)]
pub struct RepClasses<'a> {
    category: &'a Category,
    reps: Vec<Projective>,
}

fn smaller(a: &Projective, b: &Projective) -> bool {
    (a.partition().size(), a) < (b.partition().size(), b)
}

impl<'a> RepClasses<'a> {
    pub fn new(category: &'a Category) -> Self {
        Self {
            category,
            reps: Vec::new(),
        }
    }

    pub fn representatives(&self) -> &[Projective] {
        &self.reps
    }

    pub fn representative(&self, label: RepLabel) -> &Projective {
        &self.reps[label]
    }

    pub fn label(&mut self, p: &Projective) -> Result<RepLabel> {
        for (i, r) in self.reps.iter_mut().enumerate() {
            if equivalent(p, r, self.category)? {
                if smaller(p, r) {
                    *r = p.clone();
                }
                return Ok(i);
            }
        }
        self.reps.push(p.clone());
        Ok(self.reps.len() - 1)
    }

    /// Multiplicity of each class among `terms`.
    pub fn multiset(&mut self, terms: &[Projective]) -> Result<BTreeMap<RepLabel, usize>> {
        let mut out = BTreeMap::new();
        for p in terms {
            *out.entry(self.label(p)?).or_insert(0) += 1;
        }
        Ok(out)
    }
}

fn word_name(c: &Category, w: &[Colour]) -> String {
    let names: Vec<&str> = w.iter().map(|&x| c.colours().name(x)).collect();
    names.join("·")
}

/// The fusion set `S(C)` together with the word of each class representative.
#[derive(Clone, Debug)]
pub struct OneBlockClasses {
    pub fusion_set: FusionSet,
    pub words: Vec<Vec<Colour>>,
}

impl OneBlockClasses {
    /// `π(w₁,w₁) ⊗ … ⊗ π(wₙ,wₙ)` for a word `w` over the classes.
    pub fn projective(&self, word: &[usize]) -> Projective {
        let p = word.iter().fold(ColouredPartition::empty(), |acc, &x| {
            acc.tensor(&ColouredPartition::one_block(
                &self.words[x],
                &self.words[x],
            ))
        });
        Projective(p)
    }
}

/// Classes of one-block projectives `π(w, w)` with at most `bound` points, as a fusion set.
///
/// `π(w,w) ∼ π(v,v)` iff `π(w,v) ∈ C`; conjugation reverses and conjugates the word,
/// and `[π(w,w)] * [π(v,v)] = [π(wv,wv)]` when that partition lies in `C`.
pub fn one_block_fusion_set(c: &Category, bound: usize) -> Result<FusionSet> {
    Ok(one_block_classes(c, bound)?.fusion_set)
}

pub fn one_block_classes(c: &Category, bound: usize) -> Result<OneBlockClasses> {
    let cs = c.colours();
    let member = |u: &[Colour], l: &[Colour]| c.contains(&ColouredPartition::one_block(u, l));
    let mut reps: Vec<Vec<Colour>> = Vec::new();
    for len in 1..=bound / 2 {
        for w in cs.words(len) {
            if !member(&w, &w).is_yes() {
                continue;
            }
            if !reps.iter().any(|r| member(r, &w).is_yes()) {
                reps.push(w);
            }
        }
    }
    let find = |w: &[Colour]| -> Result<Option<usize>> {
        match member(w, w) {
            Membership::Yes => {}
            Membership::No => return Ok(None),
            Membership::UnknownAtBound => return Err(Error::UnknownAtBound),
        }
        for (i, r) in reps.iter().enumerate() {
            if member(r, w).is_yes() {
                return Ok(Some(i));
            }
        }
        Err(Error::UnknownAtBound)
    };
    let conj = reps
        .iter()
        .map(|r| find(&cs.conj_word(r))?.ok_or(Error::UnknownAtBound))
        .collect::<Result<Vec<_>>>()?;
    let table = reps
        .iter()
        .map(|a| {
            reps.iter()
                .map(|b| find(&[a.as_slice(), b].concat()))
                .collect()
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    let names = reps.iter().map(|r| word_name(c, r)).collect();
    Ok(OneBlockClasses {
        fusion_set: FusionSet::new(names, conj, table)?,
        words: reps,
    })
}

/// The category `C_S` of a fusion set.
pub fn build_cs(s: &FusionSet) -> Result<Category> {
    Category::c_s(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::ColourSet;
    use crate::group::FiniteGroup;

    fn proj(s: &str) -> Projective {
        Projective::new(ColouredPartition::parse(s, &ColourSet::uncoloured()).unwrap()).unwrap()
    }

    fn nc() -> Category {
        Category::noncrossing(ColourSet::uncoloured())
    }

    fn nc2() -> Category {
        Category::noncrossing_pair(ColourSet::uncoloured())
    }

    #[test]
    fn decomposition_of_small_projectives() {
        let id = proj("a|a");
        assert_eq!(id.upper_half(X0).unwrap(), ColouredPartition::identity(X0));
        let pair = proj("a|b");
        assert_eq!(pair.t(), 0);
        let pu = pair.upper_half(X0).unwrap();
        assert_eq!((pu.k(), pu.l()), (1, 0));
        let block = proj("aa|aa");
        assert_eq!(block.upper_half(X0).unwrap().partition().to_text(), "aa|a");
        let bad = ColouredPartition::parse("ab|ba", &ColourSet::uncoloured()).unwrap();
        assert!(Projective::new(bad.clone()).is_err());
        assert_eq!(through_decomposition(&bad, X0), Err(Error::NotProjective));
    }

    #[test]
    fn projective_counts() {
        let x = [Colour(0)];
        assert_eq!(proj_enumerate(&nc(), &x).len(), 2);
        assert_eq!(proj_enumerate(&nc2(), &x).len(), 1);
        assert_eq!(proj_enumerate(&nc2(), &[Colour(0); 2]).len(), 2);
        assert_eq!(proj_enumerate(&nc(), &[Colour(0); 2]).len(), 6);
    }

    #[test]
    fn equivalences() {
        let c = nc2();
        let ps = proj_enumerate(&c, &[Colour(0); 4]);
        let zero: Vec<_> = ps.iter().filter(|p| p.t() == 0).collect();
        assert_eq!(zero.len(), 2);
        for a in &zero {
            assert!(equivalent(a, &proj("aa|bb"), &c).unwrap());
        }
        let two: Vec<_> = ps.iter().filter(|p| p.t() == 2).collect();
        assert!(equivalent(two[0], &proj("ab|ab"), &c).unwrap());
        assert!(!equivalent(&proj("ab|ab"), &proj("aa|bb"), &c).unwrap());
        assert!(equivalent(&proj("a|a"), &proj("aa|aa"), &nc()).unwrap());
    }

    #[test]
    fn mixing_shapes() {
        let m = enumerate_mixing(1, 1);
        assert_eq!(m.len(), 2);
        assert!(m.contains(&h_square(1)) && m.contains(&h_boxvert(1)));
        assert!(enumerate_mixing(0, 3).is_empty());
        for k in 1..=2 {
            let m = enumerate_mixing(k, k);
            assert!(m.contains(&h_square(k)) && m.contains(&h_boxvert(k)));
        }
        assert_eq!(h_boxvert(2).to_text(), "abba|acca");
        assert!(h_boxvert(3).is_noncrossing());
    }

    #[test]
    fn fusion_of_fundamentals() {
        let id = proj("a|a");
        let ts =
            |c: &Category,
             f: fn(&Projective, &Projective, &Category) -> Result<Vec<Projective>>| {
                let mut t: Vec<usize> = f(&id, &id, c).unwrap().iter().map(Projective::t).collect();
                t.sort_unstable();
                t
            };
        assert_eq!(ts(&nc2(), fuse_noncrossing), vec![0, 2]);
        assert_eq!(ts(&nc(), fuse_noncrossing), vec![0, 1, 2]);
        assert_eq!(ts(&nc2(), fuse_general), vec![0, 2]);
        assert_eq!(ts(&nc(), fuse_general), vec![0, 1, 2]);
        let single = proj("a|b");
        assert_eq!(fuse_noncrossing(&single, &id, &nc()).unwrap().len(), 1);
    }

    #[test]
    fn one_block_sets() {
        let s = one_block_fusion_set(&nc2(), 8).unwrap();
        assert!(s.is_isomorphic(&FusionSet::o_set()));
        let s = one_block_fusion_set(&nc(), 8).unwrap();
        assert!(s.is_isomorphic(&FusionSet::idempotent()));
        let g = FiniteGroup::cyclic(2);
        let c = Category::gamma0(g.clone(), &[0, 1]).unwrap();
        let s = one_block_fusion_set(&c, 8).unwrap();
        assert!(s.is_isomorphic(&FusionSet::from_group(&g, "")));
    }

    #[test]
    fn c_s_bridge_for_z() {
        let z = FusionSet::z_set();
        let s = one_block_fusion_set(&build_cs(&z).unwrap(), 8).unwrap();
        assert!(s.is_isomorphic(&z), "{:?}", s.to_record());
    }
}
