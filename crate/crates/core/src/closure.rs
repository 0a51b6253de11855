//! Bounded saturation of generators under the category operations.
//!
//! Partitions are stored as one-row forms up to cyclic rotation. In that form
//! adjoint reverses the row and conjugates every colour, tensor inserts one
//! row into a gap of the other, and composition reduces to contracting a
//! cyclically adjacent pair coloured `(a, ā)`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::colour::{Colour, ColourSet};
use crate::error::{Error, Result};
use crate::partition::{canonical_labels, ColouredPartition, Partition};

/// A one-row partition in its least cyclic rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneRow {
    labels: Vec<u16>,
    colours: Vec<Colour>,
}

impl OneRow {
    fn rotated(labels: &[u16], colours: &[Colour], r: usize) -> OneRow {
        let n = labels.len();
        let idx = (0..n).map(|i| (i + r) % n);
        OneRow {
            labels: canonical_labels(idx.clone().map(|i| labels[i] as usize)),
            colours: idx.map(|i| colours[i]).collect(),
        }
    }

    /// Least rotation of the given row.
    pub fn class_of(labels: &[u16], colours: &[Colour]) -> OneRow {
        (0..labels.len().max(1))
            .map(|r| Self::rotated(labels, colours, r))
            .min()
            .expect("at least one rotation")
    }

    pub fn of(p: &ColouredPartition, cs: &ColourSet) -> OneRow {
        let r = p.to_one_row(cs);
        Self::class_of(r.partition().labels(), r.lower())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn to_partition(&self) -> ColouredPartition {
        let n = self.len();
        let p = Partition::from_labels(0, n, self.labels.iter().map(|&x| x as usize));
        ColouredPartition::new(p, Vec::new(), self.colours.clone()).expect("one-row word")
    }

    /// Every two-row partition whose one-row form lies in this class, with at most `max_k` upper points.
    pub fn two_row_forms(&self, cs: &ColourSet) -> Vec<ColouredPartition> {
        let n = self.len();
        let mut out = HashSet::new();
        for r in 0..n.max(1) {
            let row = Self::rotated(&self.labels, &self.colours, r).to_partition();
            for k in 0..=n {
                out.insert(row.from_one_row(k, cs).expect("k within row"));
            }
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort();
        v
    }

    pub fn adjoint(&self, cs: &ColourSet) -> OneRow {
        let labels: Vec<u16> = self.labels.iter().rev().copied().collect();
        let colours: Vec<Colour> = self.colours.iter().rev().map(|&c| cs.conj(c)).collect();
        Self::class_of(&labels, &colours)
    }

    /// Restriction to the points of block `b`.
    pub fn block(&self, b: u16) -> OneRow {
        let pts: Vec<usize> = (0..self.len()).filter(|&i| self.labels[i] == b).collect();
        let labels = vec![0; pts.len()];
        let colours: Vec<Colour> = pts.iter().map(|&i| self.colours[i]).collect();
        Self::class_of(&labels, &colours)
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Results of contracting each cyclically adjacent `(a, ā)` pair; empty results are skipped.
    pub fn contractions(&self, cs: &ColourSet) -> Vec<OneRow> {
        let n = self.len();
        let mut out = Vec::new();
        if n < 3 {
            return out;
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if self.colours[j] != cs.conj(self.colours[i]) {
                continue;
            }
            let (a, b) = (self.labels[i], self.labels[j]);
            let keep: Vec<usize> = (0..n).filter(|&t| t != i && t != j).collect();
            let labels: Vec<u16> = keep
                .iter()
                .map(|&t| {
                    if self.labels[t] == b {
                        a
                    } else {
                        self.labels[t]
                    }
                })
                .collect();
            let colours: Vec<Colour> = keep.iter().map(|&t| self.colours[t]).collect();
            out.push(Self::class_of(&labels, &colours));
        }
        out
    }

    /// `x` with a rotation of `y` inserted into each gap.
    pub fn insertions(x: &OneRow, y: &OneRow) -> Vec<OneRow> {
        let (n, m) = (x.len(), y.len());
        let shift = x.num_blocks() as u16;
        let mut out = Vec::with_capacity(n.max(1) * m);
        for i in 0..n.max(1) {
            for j in 0..m {
                let yi = (0..m).map(|t| (t + j) % m);
                let labels: Vec<u16> = x.labels[..i.min(n)]
                    .iter()
                    .copied()
                    .chain(yi.clone().map(|t| y.labels[t] + shift))
                    .chain(x.labels[i.min(n)..].iter().copied())
                    .collect();
                let colours: Vec<Colour> = x.colours[..i.min(n)]
                    .iter()
                    .copied()
                    .chain(yi.map(|t| y.colours[t]))
                    .chain(x.colours[i.min(n)..].iter().copied())
                    .collect();
                out.push(Self::class_of(&labels, &colours));
            }
        }
        out
    }
}

/// Saturated set of one-row classes with at most `bound + slack` points.
#[derive(Clone, Debug)]
pub struct Closure {
    colours: ColourSet,
    generators: Vec<ColouredPartition>,
    bound: usize,
    slack: usize,
    classes: HashSet<OneRow>,
}

impl Closure {
    /// Saturates the generators together with the cup of every colour.
    pub fn new(
        colours: ColourSet,
        generators: Vec<ColouredPartition>,
        bound: usize,
        slack: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.size() > bound {
                return Err(Error::BoundTooSmall {
                    points: g.size(),
                    bound,
                });
            }
            if let Some(c) = g.colours().find(|&c| !colours.contains(c)) {
                return Err(Error::UnknownColour(format!("#{}", c.0)));
            }
        }
        let max = bound + slack;
        let mut seeds: Vec<OneRow> = colours
            .colours()
            .map(|c| OneRow::of(&ColouredPartition::cup(c, &colours), &colours))
            .collect();
        seeds.extend(
            generators
                .iter()
                .filter(|g| g.size() > 0)
                .map(|g| OneRow::of(g, &colours)),
        );
        let classes = saturate(&colours, seeds, max);
        Ok(Self {
            colours,
            generators,
            bound,
            slack,
            classes,
        })
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn generators(&self) -> &[ColouredPartition] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    pub fn contains_class(&self, r: &OneRow) -> bool {
        r.is_empty() || self.classes.contains(r)
    }

    pub fn contains(&self, p: &ColouredPartition) -> bool {
        p.size() == 0
            || (p.size() <= self.bound + self.slack
                && self.classes.contains(&OneRow::of(p, &self.colours)))
    }

    /// Classes with at most `max_points` points, in canonical order.
    pub fn classes_up_to(&self, max_points: usize) -> Vec<OneRow> {
        let mut v: Vec<OneRow> = self
            .classes
            .iter()
            .filter(|r| r.len() <= max_points)
            .cloned()
            .collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    /// Members with `k` upper and `l` lower points, all within the point bound.
    pub fn members(&self, k: usize, l: usize) -> Vec<ColouredPartition> {
        let mut v: Vec<ColouredPartition> = self
            .classes_up_to(k + l)
            .iter()
            .filter(|r| r.len() == k + l)
            .flat_map(|r| r.two_row_forms(&self.colours))
            .filter(|p| p.k() == k)
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

fn saturate(cs: &ColourSet, seeds: Vec<OneRow>, max: usize) -> HashSet<OneRow> {
    let mut all: HashSet<OneRow> = HashSet::new();
    let mut list: Vec<OneRow> = Vec::new();
    let mut frontier: Vec<OneRow> = Vec::new();
    for s in seeds {
        if s.len() <= max && all.insert(s.clone()) {
            list.push(s.clone());
            frontier.push(s);
        }
    }
    while !frontier.is_empty() {
        let snapshot = &list;
        let found: Vec<Vec<OneRow>> = frontier
            .par_iter()
            .map(|x| {
                let mut out = vec![x.adjoint(cs)];
                out.extend(x.contractions(cs));
                for y in snapshot {
                    if x.len() + y.len() <= max {
                        out.extend(OneRow::insertions(x, y));
                        out.extend(OneRow::insertions(y, x));
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for r in found.into_iter().flatten() {
            if !r.is_empty() && r.len() <= max && !all.contains(&r) {
                all.insert(r.clone());
                next.push(r);
            }
        }
        next.sort();
        list.extend(next.iter().cloned());
        frontier = next;
    }
    all
}
