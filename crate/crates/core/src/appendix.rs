//! Word sets in the free monoid on a fusion set, checked on truncated initial segments.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::FusionSet;

pub type Word = Vec<usize>;

/// A set of words together with whether longer products were discarded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSet {
    pub words: BTreeSet<Word>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixSets {
    pub all: Vec<Word>,
    pub d: Vec<Word>,
    pub e: Vec<Word>,
    pub f: Vec<Word>,
    pub r: [Word; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub max_len: usize,
    pub words: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
    pub r: [String; 3],
    pub d_e_partition: bool,
    pub f_circ_d_misses_d: bool,
    pub r_circ_e_disjoint: bool,
    pub truncated: bool,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.d_e_partition && self.f_circ_d_misses_d && self.r_circ_e_disjoint
    }
}

/// All words of length at most `max_len`, shortest first.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Word| {
                (0..n).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `|S| ≥ 2` and no `τ` satisfies `x̄ * x = τ` for every `x`.
pub fn main_condition(s: &FusionSet) -> bool {
    let n = s.len();
    n >= 2 && !(0..n).any(|t| (0..n).all(|x| s.fuse(s.conj(x), x) == Some(t)))
}

fn check_condition(s: &FusionSet) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::ConditionFails(
            "the fusion set has fewer than two elements".into(),
        ));
    }
    if !main_condition(s) {
        return Err(Error::ConditionFails(
            "x̄ * x takes one common value on every x".into(),
        ));
    }
    Ok(())
}

fn r_word(s: &FusionSet, beta: usize, gamma: usize, reps: usize) -> Word {
    let mut w = vec![beta];
    w.extend(std::iter::repeat_n(gamma, reps));
    w.push(beta);
    let bad = s.conj(beta);
    if w.len() < 4 || *w.last().unwrap() == bad {
        let fill = (0..s.len())
            .find(|&x| x != bad)
            .expect("at least two elements");
        w.push(fill);
    }
    w
}

pub fn appendix_sets(
    s: &FusionSet,
    beta: usize,
    gamma: usize,
    max_len: usize,
) -> Result<AppendixSets> {
    check_condition(s)?;
    if beta == gamma || beta >= s.len() || gamma >= s.len() {
        return Err(Error::InvalidParameter(
            "β and γ must be distinct elements".into(),
        ));
    }
    let all = words_up_to(s.len(), max_len);
    let starts_beta = |w: &Word| w.first() == Some(&beta);
    let d = all
        .iter()
        .filter(|w| !w.is_empty() && !starts_beta(w))
        .cloned()
        .collect();
    let e = all
        .iter()
        .filter(|w| w.is_empty() || starts_beta(w))
        .cloned()
        .collect();
    let f = all
        .iter()
        .filter(|w| w.len() >= 2 && starts_beta(w) && *w.last().unwrap() == s.conj(beta))
        .cloned()
        .collect();
    let r = [1, 2, 3].map(|i| r_word(s, beta, gamma, i));
    Ok(AppendixSets { all, d, e, f, r })
}

/// Supports of `x ⊗ y` over `x ∈ X`, `y ∈ Y`, keeping words of length at most `max_len`.
pub fn circ(x: &[Word], y: &[Word], s: &FusionSet, max_len: usize) -> WordSet {
    let parts: Vec<WordSet> = x
        .par_iter()
        .map(|a| {
            let mut out = WordSet::default();
            for b in y {
                // every term of a ⊗ b is at least this long
                let shortest = a.len().abs_diff(b.len());
                if shortest > max_len {
                    out.truncated = true;
                    continue;
                }
                for w in s.word_tensor(a, b).terms.into_keys() {
                    if w.len() <= max_len {
                        out.words.insert(w);
                    } else {
                        out.truncated = true;
                    }
                }
            }
            out
        })
        .collect();
    parts.into_iter().fold(WordSet::default(), |mut acc, p| {
        acc.words.extend(p.words);
        acc.truncated |= p.truncated;
        acc
    })
}

pub fn appendix_report(
    s: &FusionSet,
    beta: usize,
    gamma: usize,
    max_len: usize,
) -> Result<AppendixReport> {
    let sets = appendix_sets(s, beta, gamma, max_len)?;
    let d_set: BTreeSet<&Word> = sets.d.iter().collect();
    let e_set: BTreeSet<&Word> = sets.e.iter().collect();
    let d_e_partition = d_set.is_disjoint(&e_set) && d_set.len() + e_set.len() == sets.all.len();

    let fd = circ(&sets.f, &sets.d, s, max_len);
    let f_circ_d_misses_d = fd.words.iter().all(|w| !d_set.contains(w));

    let re: Vec<WordSet> = sets
        .r
        .iter()
        .map(|r| circ(std::slice::from_ref(r), &sets.e, s, max_len))
        .collect();
    let r_circ_e_disjoint =
        (0..3).all(|i| (i + 1..3).all(|j| re[i].words.is_disjoint(&re[j].words)));

    Ok(AppendixReport {
        max_len,
        words: sets.all.len(),
        d: sets.d.len(),
        e: sets.e.len(),
        f: sets.f.len(),
        r: sets.r.clone().map(|w| s.format_word(&w)),
        d_e_partition,
        f_circ_d_misses_d,
        r_circ_e_disjoint,
        truncated: fd.truncated || re.iter().any(|w| w.truncated),
    })
}
