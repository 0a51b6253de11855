//! Inputs shared by the benchmarks.

use pqg_core::rep::proj_enumerate;
use pqg_core::{
    enumerate, Category, Colour, ColourSet, ColouredPartition, Partition, PartitionClass,
    Projective,
};

/// Every composable pair `(p, q)` with `q` in `P(k, m)` and `p` in `P(m, l)`, first `limit` of them.
pub fn composable_pairs(k: usize, m: usize, l: usize, limit: usize) -> Vec<(Partition, Partition)> {
    let tops = enumerate(m, l, PartitionClass::All).expect("small enumeration");
    let bottoms = enumerate(k, m, PartitionClass::All).expect("small enumeration");
    tops.iter()
        .flat_map(|p| bottoms.iter().map(move |q| (p.clone(), q.clone())))
        .step_by(7)
        .take(limit)
        .collect()
}

pub fn noncrossing(k: usize, l: usize) -> Vec<ColouredPartition> {
    enumerate(k, l, PartitionClass::NonCrossing)
        .expect("small enumeration")
        .into_iter()
        .map(ColouredPartition::uncoloured)
        .collect()
}

/// Noncrossing projectives on `n` uncoloured points per row.
pub fn nc_projectives(n: usize) -> (Category, Vec<Projective>) {
    let c = Category::noncrossing(ColourSet::uncoloured());
    let ps = proj_enumerate(&c, &vec![Colour(0); n]);
    (c, ps)
}
