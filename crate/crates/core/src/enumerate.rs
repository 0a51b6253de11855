//! Exhaustive enumeration of partitions in canonical order.

use crate::colour::Colour;
use crate::error::{Error, Result};
use crate::partition::{ColouredPartition, Partition};

/// Upper bound on `k + l` for exhaustive enumeration.
pub const DEFAULT_POINT_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    All,
    NonCrossing,
    Pair,
    NonCrossingPair,
}

impl PartitionClass {
    fn pairs_only(self) -> bool {
        matches!(self, PartitionClass::Pair | PartitionClass::NonCrossingPair)
    }

    fn noncrossing_only(self) -> bool {
        matches!(
            self,
            PartitionClass::NonCrossing | PartitionClass::NonCrossingPair
        )
    }

    pub fn admits(self, p: &Partition) -> bool {
        (!self.pairs_only() || p.is_pair()) && (!self.noncrossing_only() || p.is_noncrossing())
    }
}

/// All partitions of the class in `P(k, l)`, in increasing growth-string order.
pub fn enumerate(k: usize, l: usize, class: PartitionClass) -> Result<Vec<Partition>> {
    enumerate_with_limit(k, l, class, DEFAULT_POINT_LIMIT)
}

pub fn enumerate_with_limit(
    k: usize,
    l: usize,
    class: PartitionClass,
    limit: usize,
) -> Result<Vec<Partition>> {
    let n = k + l;
    if n > limit {
        return Err(Error::LimitExceeded { points: n, limit });
    }
    if class.pairs_only() && n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(n);
    let mut sizes = Vec::new();
    grow(
        n,
        class.pairs_only(),
        &mut labels,
        &mut sizes,
        &mut |labels| {
            let p = Partition::from_labels(k, l, labels.iter().copied());
            if !class.noncrossing_only() || p.is_noncrossing() {
                out.push(p);
            }
        },
    );
    Ok(out)
}

fn grow(
    n: usize,
    pairs: bool,
    labels: &mut Vec<usize>,
    sizes: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if labels.len() == n {
        if !pairs || sizes.iter().all(|&s| s == 2) {
            emit(labels);
        }
        return;
    }
    if pairs {
        let open = sizes.iter().filter(|&&s| s == 1).count();
        if open > n - labels.len() {
            return;
        }
    }
    for b in 0..=sizes.len() {
        if b == sizes.len() {
            sizes.push(0);
        } else if pairs && sizes[b] >= 2 {
            continue;
        }
        sizes[b] += 1;
        labels.push(b);
        grow(n, pairs, labels, sizes, emit);
        labels.pop();
        sizes[b] -= 1;
        if sizes[b] == 0 {
            sizes.pop();
        }
    }
}

/// Enumerates with the given colour words attached.
pub fn enumerate_coloured(
    upper: &[Colour],
    lower: &[Colour],
    class: PartitionClass,
) -> Result<Vec<ColouredPartition>> {
    Ok(enumerate(upper.len(), lower.len(), class)?
        .into_iter()
        .map(|p| ColouredPartition::new(p, upper.to_vec(), lower.to_vec()).expect("word lengths"))
        .collect())
}
