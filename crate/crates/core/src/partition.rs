//! Two-row set partitions in restricted-growth form, with colours attached.
//!
//! Points are indexed globally and 0-based: `0..k` is the upper row from left to
//! right, `k..k+l` the lower row from left to right. The external 1-based
//! numbering used by the JSON format is converted at the boundary.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::colour::{Colour, ColourSet};
use crate::error::{Error, Result};

/// An uncoloured partition of `k` upper and `l` lower points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    k: usize,
    l: usize,
    labels: Vec<u16>,
}

/// One of the four rotations moving an extremal point to the other row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    UpperLeftToLower,
    LowerLeftToUpper,
    UpperRightToLower,
    LowerRightToUpper,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::UpperLeftToLower,
        Corner::LowerLeftToUpper,
        Corner::UpperRightToLower,
        Corner::LowerRightToUpper,
    ];

    pub fn inverse(self) -> Corner {
        match self {
            Corner::UpperLeftToLower => Corner::LowerLeftToUpper,
            Corner::LowerLeftToUpper => Corner::UpperLeftToLower,
            Corner::UpperRightToLower => Corner::LowerRightToUpper,
            Corner::LowerRightToUpper => Corner::UpperRightToLower,
        }
    }
}

pub(crate) fn canonical_labels<I: IntoIterator<Item = usize>>(raw: I) -> Vec<u16> {
    let mut seen: Vec<(usize, u16)> = Vec::new();
    raw.into_iter()
        .map(|r| match seen.iter().find(|(x, _)| *x == r) {
            Some(&(_, c)) => c,
            None => {
                let c = seen.len() as u16;
                seen.push((r, c));
                c
            }
        })
        .collect()
}

impl Partition {
    /// Canonicalizes an arbitrary labelling of the `k + l` points.
    pub fn from_labels<I: IntoIterator<Item = usize>>(k: usize, l: usize, raw: I) -> Self {
        let labels = canonical_labels(raw);
        assert_eq!(labels.len(), k + l, "label count must equal k + l");
        Self { k, l, labels }
    }

    /// Builds a partition from 1-based blocks.
    pub fn from_blocks(k: usize, l: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = k + l;
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::OverlapOrGap {
                    points: n,
                    detail: "empty block".into(),
                });
            }
            for &pt in block {
                if pt == 0 || pt > n {
                    return Err(Error::OverlapOrGap {
                        points: n,
                        detail: format!("point {pt} out of range"),
                    });
                }
                if owner[pt - 1] != usize::MAX {
                    return Err(Error::OverlapOrGap {
                        points: n,
                        detail: format!("point {pt} appears twice"),
                    });
                }
                owner[pt - 1] = b;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::OverlapOrGap {
                points: n,
                detail: format!("point {} uncovered", i + 1),
            });
        }
        Ok(Self::from_labels(k, l, owner))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_labels(n, n, (0..n).chain(0..n))
    }

    pub fn empty() -> Self {
        Self {
            k: 0,
            l: 0,
            labels: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn size(&self) -> usize {
        self.k + self.l
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> usize {
        self.labels[point] as usize
    }

    pub fn upper_labels(&self) -> &[u16] {
        &self.labels[..self.k]
    }

    pub fn lower_labels(&self) -> &[u16] {
        &self.labels[self.k..]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Blocks as sorted lists of 0-based points, ordered by smallest point.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    /// Labels of blocks meeting both rows, in increasing order.
    pub fn through_labels(&self) -> Vec<usize> {
        let nb = self.num_blocks();
        let mut up = vec![false; nb];
        let mut down = vec![false; nb];
        for &b in self.upper_labels() {
            up[b as usize] = true;
        }
        for &b in self.lower_labels() {
            down[b as usize] = true;
        }
        (0..nb).filter(|&b| up[b] && down[b]).collect()
    }

    pub fn through_blocks(&self) -> usize {
        self.through_labels().len()
    }

    /// Points in circular order: upper row left to right, then lower row right to left.
    pub fn circular_order(&self) -> Vec<usize> {
        (0..self.k).chain((self.k..self.size()).rev()).collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let order = self.circular_order();
        let nb = self.num_blocks();
        let mut last = vec![0usize; nb];
        for (pos, &pt) in order.iter().enumerate() {
            last[self.label(pt)] = pos;
        }
        let mut open = vec![false; nb];
        let mut stack: Vec<usize> = Vec::new();
        for (pos, &pt) in order.iter().enumerate() {
            let b = self.label(pt);
            if open[b] {
                if stack.last() != Some(&b) {
                    return false;
                }
                if last[b] == pos {
                    stack.pop();
                    open[b] = false;
                }
            } else if last[b] != pos {
                open[b] = true;
                stack.push(b);
            }
        }
        true
    }

    /// Four 0-based points `a, b, c, d` in circular order with `a ~ c`, `b ~ d`, `a ≁ b`.
    pub fn crossing_witness(&self) -> Option<[usize; 4]> {
        let order = self.circular_order();
        let n = order.len();
        let lab = |i: usize| self.label(order[i]);
        for a in 0..n {
            for b in a + 1..n {
                if lab(a) == lab(b) {
                    continue;
                }
                for c in b + 1..n {
                    if lab(c) != lab(a) {
                        continue;
                    }
                    for d in c + 1..n {
                        if lab(d) == lab(b) {
                            return Some([order[a], order[b], order[c], order[d]]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_pair(&self) -> bool {
        self.blocks().iter().all(|b| b.len() == 2)
    }

    pub fn adjoint(&self) -> Self {
        let (up, down) = self.labels.split_at(self.k);
        Self::from_labels(self.l, self.k, down.iter().chain(up).map(|&x| x as usize))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let off = self.num_blocks();
        let lab = |p: &Self, i: usize, shift: usize| p.label(i) + shift;
        let upper = (0..self.k)
            .map(|i| lab(self, i, 0))
            .chain((0..other.k).map(|i| lab(other, i, off)));
        let lower = (self.k..self.size())
            .map(|i| lab(self, i, 0))
            .chain((other.k..other.size()).map(|i| lab(other, i, off)));
        Self::from_labels(
            self.k + other.k,
            self.l + other.l,
            upper.chain(lower).collect::<Vec<_>>(),
        )
    }

    /// `q ∘ p`: `p` on top, `q` below. Returns the result and the number of removed loops.
    pub fn compose(q: &Self, p: &Self) -> Result<(Self, usize)> {
        if p.l != q.k {
            return Err(Error::ShapeMismatch {
                lower: p.l,
                upper: q.k,
            });
        }
        let bp = p.num_blocks();
        let bq = q.num_blocks();
        let mut uf = UnionFind::<usize>::new(bp + bq);
        for j in 0..p.l {
            uf.union(p.label(p.k + j), bp + q.label(j));
        }
        let raw: Vec<usize> = (0..p.k)
            .map(|i| uf.find(p.label(i)))
            .chain((q.k..q.size()).map(|j| uf.find(bp + q.label(j))))
            .collect();
        let mut kept = vec![false; bp + bq];
        for &r in &raw {
            kept[r] = true;
        }
        let loops = (0..bp + bq)
            .filter(|&x| uf.find(x) == x && !kept[x])
            .count();
        Ok((Self::from_labels(p.k, q.l, raw), loops))
    }

    /// Partition on the old points listed in `order`; the first `new_k` form the upper row.
    pub fn reorder(&self, new_k: usize, order: &[usize]) -> Self {
        Self::from_labels(
            new_k,
            order.len() - new_k,
            order.iter().map(|&i| self.label(i)).collect::<Vec<_>>(),
        )
    }

    fn rotation_order(&self, corner: Corner) -> Result<(usize, Vec<usize>)> {
        let (k, n) = (self.k, self.size());
        let upper = 0..k;
        let lower = k..n;
        Ok(match corner {
            Corner::UpperLeftToLower => {
                if k == 0 {
                    return Err(Error::EmptyRow);
                }
                (
                    k - 1,
                    (1..k).chain(std::iter::once(0)).chain(lower).collect(),
                )
            }
            Corner::LowerLeftToUpper => {
                if self.l == 0 {
                    return Err(Error::EmptyRow);
                }
                (
                    k + 1,
                    std::iter::once(k).chain(upper).chain(k + 1..n).collect(),
                )
            }
            Corner::UpperRightToLower => {
                if k == 0 {
                    return Err(Error::EmptyRow);
                }
                (
                    k - 1,
                    (0..k - 1)
                        .chain(lower)
                        .chain(std::iter::once(k - 1))
                        .collect(),
                )
            }
            Corner::LowerRightToUpper => {
                if self.l == 0 {
                    return Err(Error::EmptyRow);
                }
                (
                    k + 1,
                    upper
                        .chain(std::iter::once(n - 1))
                        .chain(k..n - 1)
                        .collect(),
                )
            }
        })
    }

    pub fn rotate(&self, corner: Corner) -> Result<Self> {
        let (nk, order) = self.rotation_order(corner)?;
        Ok(self.reorder(nk, &order))
    }

    /// Growth string with `|` between the rows, e.g. `ab|ba`.
    pub fn to_text(&self) -> String {
        let ch = |b: u16| label_char(b as usize);
        let mut s: String = self.upper_labels().iter().map(|&b| ch(b)).collect();
        s.push('|');
        s.extend(self.lower_labels().iter().map(|&b| ch(b)));
        s
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (up, down) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing `|` in `{s}`")))?;
        if down.contains('|') {
            return Err(Error::Parse(format!("more than one `|` in `{s}`")));
        }
        let raw: Vec<usize> = up
            .chars()
            .chain(down.chars())
            .map(|c| {
                if c.is_alphanumeric() {
                    Ok(c as usize)
                } else {
                    Err(Error::Parse(format!("unexpected character `{c}`")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_labels(
            up.chars().count(),
            down.chars().count(),
            raw,
        ))
    }
}

fn label_char(b: usize) -> char {
    const ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    ALPHABET.get(b).map(|&c| c as char).unwrap_or('?')
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A partition with a colour on every point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ColouredPartition {
    partition: Partition,
    upper: Vec<Colour>,
    lower: Vec<Colour>,
}

/// Result of a vertical composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    pub result: ColouredPartition,
    pub loops: usize,
}

impl ColouredPartition {
    pub fn new(partition: Partition, upper: Vec<Colour>, lower: Vec<Colour>) -> Result<Self> {
        if upper.len() != partition.k {
            return Err(Error::WordLengthMismatch {
                expected: partition.k,
                found: upper.len(),
            });
        }
        if lower.len() != partition.l {
            return Err(Error::WordLengthMismatch {
                expected: partition.l,
                found: lower.len(),
            });
        }
        Ok(Self {
            partition,
            upper,
            lower,
        })
    }

    /// Validating constructor from 1-based blocks.
    pub fn from_blocks(
        k: usize,
        l: usize,
        blocks: &[Vec<usize>],
        upper: Vec<Colour>,
        lower: Vec<Colour>,
    ) -> Result<Self> {
        Self::new(Partition::from_blocks(k, l, blocks)?, upper, lower)
    }

    /// Every point gets the same colour.
    pub fn monochrome(partition: Partition, c: Colour) -> Self {
        let (k, l) = (partition.k, partition.l);
        Self {
            partition,
            upper: vec![c; k],
            lower: vec![c; l],
        }
    }

    pub fn uncoloured(partition: Partition) -> Self {
        Self::monochrome(partition, Colour(0))
    }

    pub fn identity(c: Colour) -> Self {
        Self::monochrome(Partition::identity(1), c)
    }

    /// The identity on a word.
    pub fn identity_word(word: &[Colour]) -> Self {
        Self {
            partition: Partition::identity(word.len()),
            upper: word.to_vec(),
            lower: word.to_vec(),
        }
    }

    /// The pair in `C(∅, x̄x)`, obtained by rotating the x-identity down.
    pub fn cup(c: Colour, cs: &ColourSet) -> Self {
        Self::identity(c)
            .rotate(Corner::UpperLeftToLower, cs)
            .expect("identity has an upper point")
    }

    /// The pair in `C(x̄x, ∅)`.
    pub fn cap(c: Colour, cs: &ColourSet) -> Self {
        Self::cup(c, cs).adjoint()
    }

    /// One-block partition `π(w, w')`.
    pub fn one_block(upper: &[Colour], lower: &[Colour]) -> Self {
        let n = upper.len() + lower.len();
        Self {
            partition: Partition::from_labels(upper.len(), lower.len(), vec![0; n]),
            upper: upper.to_vec(),
            lower: lower.to_vec(),
        }
    }

    pub fn empty() -> Self {
        Self {
            partition: Partition::empty(),
            upper: Vec::new(),
            lower: Vec::new(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn upper(&self) -> &[Colour] {
        &self.upper
    }

    pub fn lower(&self) -> &[Colour] {
        &self.lower
    }

    pub fn k(&self) -> usize {
        self.partition.k
    }

    pub fn l(&self) -> usize {
        self.partition.l
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    /// Colour of a global 0-based point.
    pub fn colour(&self, point: usize) -> Colour {
        if point < self.k() {
            self.upper[point]
        } else {
            self.lower[point - self.k()]
        }
    }

    pub fn colours(&self) -> impl Iterator<Item = Colour> + '_ {
        self.upper.iter().chain(&self.lower).copied()
    }

    pub fn num_blocks(&self) -> usize {
        self.partition.num_blocks()
    }

    pub fn through_blocks(&self) -> usize {
        self.partition.through_blocks()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.partition.is_noncrossing()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            partition: self.partition.adjoint(),
            upper: self.lower.clone(),
            lower: self.upper.clone(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            partition: self.partition.tensor(&other.partition),
            upper: [self.upper.as_slice(), &other.upper].concat(),
            lower: [self.lower.as_slice(), &other.lower].concat(),
        }
    }

    /// `q ∘ p`: `p` first, then `q`.
    pub fn compose(q: &Self, p: &Self) -> Result<Composition> {
        if p.l() != q.k() {
            return Err(Error::ShapeMismatch {
                lower: p.l(),
                upper: q.k(),
            });
        }
        if let Some(pos) = p.lower.iter().zip(&q.upper).position(|(a, b)| a != b) {
            return Err(Error::ColourMismatch { position: pos + 1 });
        }
        let (partition, loops) = Partition::compose(&q.partition, &p.partition)?;
        Ok(Composition {
            result: Self {
                partition,
                upper: p.upper.clone(),
                lower: q.lower.clone(),
            },
            loops,
        })
    }

    pub fn rotate(&self, corner: Corner, cs: &ColourSet) -> Result<Self> {
        let (nk, order) = self.partition.rotation_order(corner)?;
        let partition = self.partition.reorder(nk, &order);
        let moved = match corner {
            Corner::UpperLeftToLower => nk,
            Corner::LowerLeftToUpper => 0,
            Corner::UpperRightToLower => order.len() - 1,
            Corner::LowerRightToUpper => nk - 1,
        };
        let colours: Vec<Colour> = order
            .iter()
            .enumerate()
            .map(|(pos, &old)| {
                let c = self.colour(old);
                if pos == moved {
                    cs.conj(c)
                } else {
                    c
                }
            })
            .collect();
        let (up, down) = colours.split_at(nk);
        Ok(Self {
            partition,
            upper: up.to_vec(),
            lower: down.to_vec(),
        })
    }

    /// All points on the lower row: the upper row is turned down, reversed and conjugated.
    pub fn to_one_row(&self, cs: &ColourSet) -> Self {
        let (k, n) = (self.k(), self.size());
        let order: Vec<usize> = (0..k).rev().chain(k..n).collect();
        Self {
            partition: self.partition.reorder(0, &order),
            upper: Vec::new(),
            lower: self
                .upper
                .iter()
                .rev()
                .map(|&c| cs.conj(c))
                .chain(self.lower.iter().copied())
                .collect(),
        }
    }

    /// Inverse of [`Self::to_one_row`]: the first `k` points of a one-row partition go back up.
    pub fn from_one_row(&self, k: usize, cs: &ColourSet) -> Result<Self> {
        if self.k() != 0 {
            return Err(Error::InvalidParameter("partition has an upper row".into()));
        }
        if k > self.l() {
            return Err(Error::EmptyRow);
        }
        let n = self.size();
        let order: Vec<usize> = (0..k).rev().chain(k..n).collect();
        Ok(Self {
            partition: self.partition.reorder(k, &order),
            upper: self.lower[..k].iter().rev().map(|&c| cs.conj(c)).collect(),
            lower: self.lower[k..].to_vec(),
        })
    }

    /// Restriction to a subset of points, keeping their rows and order.
    pub fn restrict(&self, points: &[usize]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        let nk = pts.iter().filter(|&&p| p < self.k()).count();
        Self {
            partition: self.partition.reorder(nk, &pts),
            upper: pts[..nk].iter().map(|&p| self.colour(p)).collect(),
            lower: pts[nk..].iter().map(|&p| self.colour(p)).collect(),
        }
    }

    /// Each block as a standalone partition.
    pub fn block_partitions(&self) -> Vec<Self> {
        self.partition
            .blocks()
            .iter()
            .map(|b| self.restrict(b))
            .collect()
    }

    pub fn with_colours(&self, upper: Vec<Colour>, lower: Vec<Colour>) -> Result<Self> {
        Self::new(self.partition.clone(), upper, lower)
    }

    /// Recolours every point with `f(point, colour)`.
    pub fn map_colours(&self, mut f: impl FnMut(usize, Colour) -> Colour) -> Self {
        let k = self.k();
        Self {
            partition: self.partition.clone(),
            upper: self
                .upper
                .iter()
                .enumerate()
                .map(|(i, &c)| f(i, c))
                .collect(),
            lower: self
                .lower
                .iter()
                .enumerate()
                .map(|(j, &c)| f(k + j, c))
                .collect(),
        }
    }

    /// Growth string, followed by `@upper/lower` colour names unless the colour set has one colour.
    pub fn to_text(&self, cs: &ColourSet) -> String {
        let mut s = self.partition.to_text();
        if cs.len() > 1 {
            s.push('@');
            s.push_str(&cs.format_word(&self.upper));
            s.push('/');
            s.push_str(&cs.format_word(&self.lower));
        }
        s
    }

    /// Parses `ab|ba` or `ab|ba@x,y/y,x`; without annotation every point gets the first colour.
    pub fn parse(s: &str, cs: &ColourSet) -> Result<Self> {
        let (shape, colours) = match s.split_once('@') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let partition = Partition::parse(shape)?;
        match colours {
            None => Ok(Self::monochrome(partition, Colour(0))),
            Some(c) => {
                let (u, d) = c.split_once('/').ok_or_else(|| {
                    Error::Parse(format!("missing `/` in colour annotation `{c}`"))
                })?;
                Self::new(partition, cs.parse_word(u)?, cs.parse_word(d)?)
            }
        }
    }

    pub fn to_record(&self, cs: &ColourSet) -> PartitionRecord {
        let names = |w: &[Colour]| w.iter().map(|&c| cs.name(c).to_string()).collect();
        PartitionRecord {
            k: self.k(),
            l: self.l(),
            blocks: self.partition.blocks_one_based(),
            upper: Some(names(&self.upper)),
            lower: Some(names(&self.lower)),
        }
    }

    pub fn from_record(r: &PartitionRecord, cs: &ColourSet) -> Result<Self> {
        let word = |w: &Option<Vec<String>>, n: usize| -> Result<Vec<Colour>> {
            match w {
                None => Ok(vec![Colour(0); n]),
                Some(v) => v.iter().map(|s| cs.lookup(s)).collect(),
            }
        };
        Self::from_blocks(
            r.k,
            r.l,
            &r.blocks,
            word(&r.upper, r.k)?,
            word(&r.lower, r.l)?,
        )
    }
}

/// JSON shape of a coloured partition; colour words default to the first colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub k: usize,
    pub l: usize,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> Partition {
        Partition::from_blocks(4, 4, &[vec![1, 8], vec![2, 6], vec![3, 4], vec![5, 7]]).unwrap()
    }

    fn p2() -> Partition {
        Partition::from_blocks(3, 3, &[vec![1, 4, 5, 6], vec![2, 3]]).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let id = Partition::from_blocks(1, 1, &[vec![1, 2]]).unwrap();
        assert_eq!(id.to_text(), "a|a");
        assert!(matches!(
            Partition::from_blocks(2, 2, &[vec![1, 2], vec![3]]),
            Err(Error::OverlapOrGap { .. })
        ));
        assert!(matches!(
            Partition::from_blocks(1, 1, &[vec![1, 2], vec![2]]),
            Err(Error::OverlapOrGap { .. })
        ));
        let cs = ColourSet::uncoloured();
        let x = cs.lookup("x").unwrap();
        assert!(matches!(
            ColouredPartition::new(id, vec![x, x], vec![x]),
            Err(Error::WordLengthMismatch { .. })
        ));
    }

    #[test]
    fn crossing_examples() {
        assert!(!p1().is_noncrossing());
        assert!(p1().crossing_witness().is_some());
        assert!(p2().is_noncrossing());
        assert!(p2().crossing_witness().is_none());
        assert!(Partition::identity(2).is_noncrossing());
        assert!(!Partition::parse("ab|ba").unwrap().is_noncrossing());
    }

    #[test]
    fn tensor_and_counts() {
        let id = Partition::identity(1);
        assert_eq!(id.tensor(&id).to_text(), "ab|ab");
        let cap = Partition::parse("aa|").unwrap();
        let cup = Partition::parse("|aa").unwrap();
        assert_eq!(
            cap.tensor(&cup).blocks_one_based(),
            vec![vec![1, 2], vec![3, 4]]
        );
        assert_eq!(p1().tensor(&id).num_blocks(), 5);
        let t = id.tensor(&cup);
        assert_eq!((t.through_blocks(), t.num_blocks()), (1, 2));
    }

    #[test]
    fn composition_examples() {
        let cap = Partition::parse("aa|").unwrap();
        let cup = Partition::parse("|aa").unwrap();
        assert_eq!(
            Partition::compose(&cap, &cup).unwrap(),
            (Partition::empty(), 1)
        );
        let id = Partition::identity(1);
        assert_eq!(Partition::compose(&id, &id).unwrap(), (id.clone(), 0));
        let y = Partition::parse("a|aa").unwrap();
        let (r, loops) = Partition::compose(&y.adjoint(), &y).unwrap();
        assert_eq!((r.to_text(), loops), ("a|a".to_string(), 0));
        assert!(matches!(
            Partition::compose(&cap, &id),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn coloured_composition_checks_colours() {
        let cs = ColourSet::from_pairs(&[("x", "y")]).unwrap();
        let x = cs.lookup("x").unwrap();
        let y = cs.lookup("y").unwrap();
        let a = ColouredPartition::identity(x);
        let b = ColouredPartition::identity(y);
        assert_eq!(
            ColouredPartition::compose(&b, &a),
            Err(Error::ColourMismatch { position: 1 })
        );
    }

    #[test]
    fn adjoint_examples() {
        let cup = Partition::parse("|aa").unwrap();
        assert_eq!(cup.adjoint().to_text(), "aa|");
        assert_eq!(p1().adjoint().adjoint(), p1());
        let cs = ColourSet::self_conjugate(&["x", "y", "z"]);
        let w = cs.parse_word("x,y").unwrap();
        let z = cs.parse_word("z").unwrap();
        let pi = ColouredPartition::one_block(&w, &z);
        assert_eq!(pi.adjoint(), ColouredPartition::one_block(&z, &w));
    }

    #[test]
    fn rotation_examples() {
        let cs = ColourSet::from_pairs(&[("x", "y")]).unwrap();
        let x = cs.lookup("x").unwrap();
        let y = cs.lookup("y").unwrap();
        let r = ColouredPartition::identity(x)
            .rotate(Corner::LowerLeftToUpper, &cs)
            .unwrap();
        assert_eq!(r.upper(), &[y, x]);
        assert!(r.lower().is_empty());
        assert_eq!(r.num_blocks(), 1);

        let cross = Partition::parse("ab|ba").unwrap();
        let rc = cross.rotate(Corner::UpperLeftToLower).unwrap();
        assert_eq!((rc.k(), rc.l()), (1, 3));
        assert_eq!(rc.blocks_one_based(), vec![vec![1, 3], vec![2, 4]]);

        for corner in Corner::ALL {
            if let Ok(q) = p2().rotate(corner) {
                assert_eq!(q.rotate(corner.inverse()).unwrap(), p2());
            }
        }
        assert_eq!(
            Partition::parse("|a")
                .unwrap()
                .rotate(Corner::UpperLeftToLower),
            Err(Error::EmptyRow)
        );
    }

    #[test]
    fn text_and_json() {
        let cs = ColourSet::from_pairs(&[("x", "y")]).unwrap();
        let p = ColouredPartition::parse("ab|ba@x,y/y,x", &cs).unwrap();
        assert_eq!(p.to_text(&cs), "ab|ba@x,y/y,x");
        let rec = p.to_record(&cs);
        let s = serde_json::to_string(&rec).unwrap();
        let back: PartitionRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(ColouredPartition::from_record(&back, &cs).unwrap(), p);
        let bare: PartitionRecord =
            serde_json::from_str(r#"{"k":0,"l":2,"blocks":[[1,2]]}"#).unwrap();
        assert_eq!(
            ColouredPartition::from_record(&bare, &cs)
                .unwrap()
                .to_text(&cs),
            "|aa@/x,x"
        );
    }

    #[test]
    fn one_row_matches_rotations() {
        let cs = ColourSet::from_pairs(&[("x", "y"), ("z", "z")]).unwrap();
        let p = ColouredPartition::parse("abc|bca@x,z,y/y,x,z", &cs).unwrap();
        let mut q = p.clone();
        for _ in 0..3 {
            q = q.rotate(Corner::UpperLeftToLower, &cs).unwrap();
        }
        assert_eq!(p.to_one_row(&cs), q);
        assert_eq!(q.from_one_row(3, &cs).unwrap(), p);
    }

    #[test]
    fn block_extraction() {
        let cs = ColourSet::uncoloured();
        let p = ColouredPartition::uncoloured(p2());
        let blocks: Vec<String> = p
            .block_partitions()
            .iter()
            .map(|b| b.to_text(&cs))
            .collect();
        assert_eq!(blocks, vec!["a|aaa", "aa|"]);
    }
}
