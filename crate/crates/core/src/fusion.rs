//! Fusion sets, the free fusion semiring on their words, admissibility axioms
//! and isomorphism testing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colour::ColourSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A finite set with an involution and a partial binary fusion; `None` stands for ∅.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionSet {
    names: Vec<String>,
    conj: Vec<usize>,
    table: Vec<Vec<Option<usize>>>,
}

/// Outcome of the three admissibility axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Axioms {
    pub associative: bool,
    pub frobenius: bool,
    pub antisymmetric: bool,
}

impl Axioms {
    pub fn all(&self) -> bool {
        self.associative && self.frobenius && self.antisymmetric
    }
}

impl FusionSet {
    pub fn new(
        names: Vec<String>,
        conj: Vec<usize>,
        table: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let n = names.len();
        if conj.len() != n || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidFusionSet(
                "sizes of elements, conj and table differ".into(),
            ));
        }
        if conj
            .iter()
            .enumerate()
            .any(|(i, &c)| c >= n || conj[c] != i)
        {
            return Err(Error::InvalidFusionSet(
                "conjugation is not an involution".into(),
            ));
        }
        if table.iter().flatten().flatten().any(|&z| z >= n) {
            return Err(Error::InvalidFusionSet("table entry out of range".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n || names.iter().any(|s| s == "0" || s.is_empty()) {
            return Err(Error::InvalidFusionSet(
                "element names must be distinct, non-empty and not `0`".into(),
            ));
        }
        Ok(Self { names, conj, table })
    }

    /// The group as a fusion set: conjugation is inversion and fusion is the product.
    pub fn from_group(g: &FiniteGroup, prefix: &str) -> Self {
        let n = g.order();
        let names = (0..n)
            .map(|a| {
                if a == g.identity() {
                    format!("{prefix}e")
                } else {
                    format!("{prefix}g{a}")
                }
            })
            .collect();
        let conj = (0..n).map(|a| g.inv(a)).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| Some(g.mul(a, b))).collect())
            .collect();
        Self::new(names, conj, table).expect("group fusion set")
    }

    /// Morphisms `(i, λ, j)` of the groupoid with `objects` objects and vertex group `g`.
    pub fn groupoid(g: &FiniteGroup, objects: usize, prefix: &str) -> Self {
        let m = g.order();
        let idx = |i: usize, a: usize, j: usize| (i * m + a) * objects + j;
        let n = objects * objects * m;
        let mut names = vec![String::new(); n];
        let mut conj = vec![0; n];
        let mut table = vec![vec![None; n]; n];
        for i in 0..objects {
            for a in 0..m {
                for j in 0..objects {
                    let x = idx(i, a, j);
                    names[x] = format!("{prefix}{i}.{a}.{j}");
                    conj[x] = idx(j, g.inv(a), i);
                    for b in 0..m {
                        for k in 0..objects {
                            table[x][idx(j, b, k)] = Some(idx(i, g.mul(a, b), k));
                        }
                    }
                }
            }
        }
        Self::new(names, conj, table).expect("groupoid fusion set")
    }

    /// `𝒪`: one self-conjugate element with `x * x = ∅`.
    pub fn o_set() -> Self {
        Self::new(vec!["x".into()], vec![0], vec![vec![None]]).unwrap()
    }

    /// `𝒰`: a conjugate pair with every fusion empty.
    pub fn u_set() -> Self {
        Self::new(
            vec!["x".into(), "xb".into()],
            vec![1, 0],
            vec![vec![None; 2]; 2],
        )
        .unwrap()
    }

    /// `𝒵`: the groupoid on two objects with trivial vertex groups.
    pub fn z_set() -> Self {
        // x: 0 -> 1, xb: 1 -> 0, e0 = x * xb, e1 = xb * x
        let (x, xb, e0, e1) = (0, 1, 2, 3);
        let mut t = vec![vec![None; 4]; 4];
        t[x][xb] = Some(e0);
        t[xb][x] = Some(e1);
        t[e0][e0] = Some(e0);
        t[e1][e1] = Some(e1);
        t[e0][x] = Some(x);
        t[x][e1] = Some(x);
        t[e1][xb] = Some(xb);
        t[xb][e0] = Some(xb);
        Self::new(
            vec!["x".into(), "xb".into(), "e0".into(), "e1".into()],
            vec![xb, x, e0, e1],
            t,
        )
        .unwrap()
    }

    /// One self-conjugate idempotent letter: `x * x = x`.
    pub fn idempotent() -> Self {
        Self::new(vec!["x".into()], vec![0], vec![vec![Some(0)]]).unwrap()
    }

    /// Disjoint union; elements of `other` follow those of `self`, clashing names get a `'`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.len();
        let n = off + other.len();
        let mut names = self.names.clone();
        for s in &other.names {
            let mut s = s.clone();
            while names.contains(&s) {
                s.push('\'');
            }
            names.push(s);
        }
        let conj = self
            .conj
            .iter()
            .copied()
            .chain(other.conj.iter().map(|c| c + off))
            .collect();
        let mut table = vec![vec![None; n]; n];
        for (row, src) in table.iter_mut().zip(&self.table) {
            row[..off].copy_from_slice(src);
        }
        for a in 0..other.len() {
            for b in 0..other.len() {
                table[a + off][b + off] = other.table[a][b].map(|c| c + off);
            }
        }
        Self::new(names, conj, table).expect("disjoint union")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn conj(&self, x: usize) -> usize {
        self.conj[x]
    }

    pub fn fuse(&self, x: usize, y: usize) -> Option<usize> {
        self.table[x][y]
    }

    /// Fusion extended by ∅ absorbing.
    pub fn fuse_opt(&self, x: Option<usize>, y: Option<usize>) -> Option<usize> {
        self.fuse(x?, y?)
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidFusionSet(format!("unknown element `{name}`")))
    }

    /// Left fold `w₁ * … * wₙ`; ∅ for the empty word.
    pub fn fold(&self, word: &[usize]) -> Option<usize> {
        let (&first, rest) = word.split_first()?;
        rest.iter().try_fold(first, |acc, &y| self.fuse(acc, y))
    }

    /// `x̄ * x ≠ ∅`.
    pub fn in_h(&self, x: usize) -> bool {
        self.fuse(self.conj(x), x).is_some()
    }

    /// Colour set with the element names and the conjugation of `self`.
    pub fn colour_set(&self) -> ColourSet {
        ColourSet::new(self.names.clone(), self.conj.clone()).expect("fusion set colours")
    }

    pub fn conj_word(&self, w: &[usize]) -> Vec<usize> {
        w.iter().rev().map(|&x| self.conj(x)).collect()
    }

    pub fn check_axioms(&self) -> Axioms {
        let n = self.len();
        let mut associative = true;
        let mut frobenius = true;
        let mut antisymmetric = true;
        for x in 0..n {
            for y in 0..n {
                let xy = self.fuse(x, y);
                if xy.map(|z| self.conj(z)) != self.fuse(self.conj(y), self.conj(x)) {
                    antisymmetric = false;
                }
                for z in 0..n {
                    if self.fuse_opt(xy, Some(z)) != self.fuse_opt(Some(x), self.fuse(y, z)) {
                        associative = false;
                    }
                    let lhs = self.fuse(y, z) == Some(x);
                    let rhs = self.fuse(self.conj(x), y) == Some(self.conj(z));
                    if lhs != rhs {
                        frobenius = false;
                    }
                }
            }
        }
        Axioms {
            associative,
            frobenius,
            antisymmetric,
        }
    }

    pub fn require_admissible(&self) -> Result<()> {
        let a = self.check_axioms();
        if !a.associative {
            return Err(Error::NotAdmissible("fusion is not associative".into()));
        }
        if !a.frobenius {
            return Err(Error::NotAdmissible("Frobenius reciprocity fails".into()));
        }
        if !a.antisymmetric {
            return Err(Error::NotAdmissible(
                "conjugation does not reverse fusion".into(),
            ));
        }
        Ok(())
    }

    /// `ȳ * y * z = z` whenever `y * z ≠ ∅`.
    pub fn lemma_inverse_check(&self) -> bool {
        let n = self.len();
        (0..n).all(|y| {
            (0..n).all(|z| {
                self.fuse(y, z).is_none()
                    || self.fuse_opt(self.fuse(self.conj(y), y), Some(z)) == Some(z)
            })
        })
    }

    /// `w ⊗ w'` in the free fusion semiring.
    pub fn word_tensor(&self, w: &[usize], v: &[usize]) -> SemiringElement {
        let mut out = SemiringElement::default();
        for j in 0..=w.len().min(v.len()) {
            if (0..j).any(|t| v[t] != self.conj(w[w.len() - 1 - t])) {
                break;
            }
            let a = &w[..w.len() - j];
            let b = &v[j..];
            out.add([a, b].concat(), 1);
            if let (Some(&last), Some(&first)) = (a.last(), b.first()) {
                if let Some(c) = self.fuse(last, first) {
                    let mut word = a[..a.len() - 1].to_vec();
                    word.push(c);
                    word.extend_from_slice(&b[1..]);
                    out.add(word, 1);
                }
            }
        }
        out
    }

    pub fn tensor_elements(&self, a: &SemiringElement, b: &SemiringElement) -> SemiringElement {
        let mut out = SemiringElement::default();
        for (w, &m) in &a.terms {
            for (v, &n) in &b.terms {
                for (u, &k) in &self.word_tensor(w, v).terms {
                    out.add(u.clone(), m * n * k);
                }
            }
        }
        out
    }

    /// Word as a string of element names, joined by `·` when some name is longer than one character.
    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if self.names.iter().all(|s| s.chars().count() == 1) {
            ""
        } else {
            "·"
        };
        w.iter()
            .map(|&x| self.name(x))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// A fusion- and conjugation-preserving bijection `self → other`, if one exists.
    pub fn isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let sa: Vec<Signature> = (0..self.len()).map(|x| self.signature(x)).collect();
        let sb: Vec<Signature> = (0..other.len()).map(|x| other.signature(x)).collect();
        let mut ka = sa.clone();
        let mut kb = sb.clone();
        ka.sort();
        kb.sort();
        if ka != kb {
            return None;
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        // most constrained first: rarest signature
        order.sort_by_key(|&x| sa.iter().filter(|s| **s == sa[x]).count());
        let state = IsoState {
            fwd: vec![None; self.len()],
            bwd: vec![None; other.len()],
        };
        self.extend_iso(other, &sa, &sb, &order, state)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.isomorphism(other).is_some()
    }

    fn signature(&self, x: usize) -> Signature {
        let n = self.len();
        let xc = self.conj(x);
        let mut power_len = 0;
        let mut cur = Some(x);
        let mut seen = Vec::new();
        while let Some(c) = cur {
            if seen.contains(&c) || power_len > n {
                break;
            }
            seen.push(c);
            power_len += 1;
            cur = self.fuse(c, x);
        }
        Signature {
            self_conj: xc == x,
            left_h: self.fuse(xc, x).is_some(),
            right_h: self.fuse(x, xc).is_some(),
            central: self.fuse(xc, x) == self.fuse(x, xc),
            row: (0..n).filter(|&y| self.fuse(x, y).is_some()).count(),
            col: (0..n).filter(|&y| self.fuse(y, x).is_some()).count(),
            hits: self
                .table
                .iter()
                .flatten()
                .filter(|&&z| z == Some(x))
                .count(),
            idempotent: self.fuse(x, x) == Some(x),
            powers: power_len,
        }
    }

    fn extend_iso(
        &self,
        other: &Self,
        sa: &[Signature],
        sb: &[Signature],
        order: &[usize],
        state: IsoState,
    ) -> Option<Vec<usize>> {
        let Some(&x) = order.iter().find(|&&x| state.fwd[x].is_none()) else {
            return Some(state.fwd.into_iter().map(|y| y.unwrap()).collect());
        };
        for y in 0..other.len() {
            if state.bwd[y].is_some() || sa[x] != sb[y] {
                continue;
            }
            let mut next = state.clone();
            if next.assign_and_propagate(self, other, x, y) {
                if let Some(f) = self.extend_iso(other, sa, sb, order, next) {
                    return Some(f);
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    self_conj: bool,
    left_h: bool,
    right_h: bool,
    central: bool,
    row: usize,
    col: usize,
    hits: usize,
    idempotent: bool,
    powers: usize,
}

#[derive(Clone)]
struct IsoState {
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
}

impl IsoState {
    fn bind(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        match (self.fwd[x], self.bwd[y]) {
            (Some(a), _) => a == y,
            (None, Some(_)) => false,
            (None, None) => {
                self.fwd[x] = Some(y);
                self.bwd[y] = Some(x);
                queue.push(x);
                true
            }
        }
    }

    fn assign_and_propagate(&mut self, a: &FusionSet, b: &FusionSet, x: usize, y: usize) -> bool {
        let mut queue = Vec::new();
        if !self.bind(x, y, &mut queue) {
            return false;
        }
        while let Some(u) = queue.pop() {
            let fu = self.fwd[u].unwrap();
            if !self.bind(a.conj(u), b.conj(fu), &mut queue) {
                return false;
            }
            let mapped: Vec<usize> = (0..a.len()).filter(|&v| self.fwd[v].is_some()).collect();
            for v in mapped {
                let fv = self.fwd[v].unwrap();
                for (p, q, fp, fq) in [(u, v, fu, fv), (v, u, fv, fu)] {
                    match (a.fuse(p, q), b.fuse(fp, fq)) {
                        (None, None) => {}
                        (Some(r), Some(s)) => {
                            if !self.bind(r, s, &mut queue) {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}

/// A finite ℕ-combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SemiringElement {
    pub terms: BTreeMap<Vec<usize>, u64>,
}

impl SemiringElement {
    pub fn word(w: Vec<usize>) -> Self {
        let mut s = Self::default();
        s.add(w, 1);
        s
    }

    pub fn add(&mut self, w: Vec<usize>, n: u64) {
        if n > 0 {
            *self.terms.entry(w).or_insert(0) += n;
        }
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Terms longest word first, then in increasing order.
    pub fn ordered_terms(&self) -> Vec<(&Vec<usize>, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, &n)| (w, n)).collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        v
    }

    pub fn format(&self, s: &FusionSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, n)) in self.ordered_terms().into_iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if n > 1 {
                let _ = write!(out, "{n} ");
            }
            out.push_str(&s.format_word(w));
        }
        out
    }
}

/// JSON shape of a fusion set; table entries are element names or `"0"` for ∅.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionSetRecord {
    pub elements: Vec<String>,
    pub conj: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl FusionSet {
    pub fn to_record(&self) -> FusionSetRecord {
        FusionSetRecord {
            elements: self.names.clone(),
            conj: self.conj.iter().map(|&c| self.names[c].clone()).collect(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|z| z.map_or_else(|| "0".to_string(), |z| self.names[z].clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_record(r: &FusionSetRecord) -> Result<Self> {
        let pos = |s: &str| {
            r.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::InvalidFusionSet(format!("unknown element `{s}`")))
        };
        let conj = r.conj.iter().map(|s| pos(s)).collect::<Result<Vec<_>>>()?;
        let table = r
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| if s == "0" { Ok(None) } else { pos(s).map(Some) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r.elements.clone(), conj, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &FusionSet, names: &[&str]) -> Vec<usize> {
        names.iter().map(|n| s.lookup(n).unwrap()).collect()
    }

    #[test]
    fn tensor_examples() {
        let o = FusionSet::o_set();
        assert_eq!(o.word_tensor(&[0], &[0]).format(&o), "xx + 1");
        assert_eq!(o.word_tensor(&[0, 0], &[0, 0]).format(&o), "xxxx + xx + 1");
        let i = FusionSet::idempotent();
        assert_eq!(i.word_tensor(&[0], &[0]).format(&i), "xx + x + 1");
    }

    #[test]
    fn axioms_of_small_sets() {
        for s in [
            FusionSet::o_set(),
            FusionSet::u_set(),
            FusionSet::z_set(),
            FusionSet::idempotent(),
            FusionSet::from_group(&FiniteGroup::symmetric3(), ""),
            FusionSet::groupoid(&FiniteGroup::cyclic(2), 3, ""),
        ] {
            assert!(s.check_axioms().all());
            assert!(s.lemma_inverse_check());
        }
        let bad = FusionSet::new(
            vec!["x".into(), "y".into()],
            vec![0, 1],
            vec![vec![Some(1), None], vec![None, None]],
        )
        .unwrap();
        assert!(!bad.check_axioms().frobenius);
    }

    #[test]
    fn z_set_is_groupoid_on_two_objects() {
        let z = FusionSet::z_set();
        let g = FusionSet::groupoid(&FiniteGroup::trivial(), 2, "");
        assert!(z.is_isomorphic(&g));
        assert_eq!(z.fold(&w(&z, &["x", "xb", "x"])), Some(0));
    }

    #[test]
    fn isomorphism_distinguishes() {
        let oo = FusionSet::o_set().disjoint_union(&FusionSet::o_set());
        assert!(!oo.is_isomorphic(&FusionSet::u_set()));
        let z4 = FusionSet::from_group(&FiniteGroup::cyclic(4), "");
        let v4 = FusionSet::from_group(&FiniteGroup::klein(), "");
        assert!(!z4.is_isomorphic(&v4));
        assert!(z4.is_isomorphic(&z4));
    }

    #[test]
    fn record_round_trip() {
        let z = FusionSet::z_set();
        let r = z.to_record();
        let s = serde_json::to_string(&r).unwrap();
        let back: FusionSetRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(FusionSet::from_record(&back).unwrap(), z);
    }
}
