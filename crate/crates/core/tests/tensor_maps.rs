use num_bigint::BigInt;
use pqg_core::tensor::{gram_entry, support, verify_functor_uncoloured, Law};
use pqg_core::{
    enumerate, gram_rank, tp_matrix, ColouredPartition, Error, Partition, PartitionClass,
};
use proptest::prelude::*;

fn digits(mut x: usize, n: usize, legs: usize) -> Vec<usize> {
    let mut out = vec![0; legs];
    for d in out.iter_mut().rev() {
        *d = x % n;
        x /= n;
    }
    out
}

/// Entry `(row, col)` is 1 iff the upper digits of `col` and lower digits of `row` agree within each block.
fn dense_oracle(p: &Partition, n: usize) -> Vec<Vec<i128>> {
    let rows = n.pow(p.l() as u32);
    let cols = n.pow(p.k() as u32);
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut idx = digits(c, n, p.k());
                    idx.extend(digits(r, n, p.l()));
                    let ok = p
                        .blocks()
                        .iter()
                        .all(|b| b.iter().all(|&i| idx[i] == idx[b[0]]));
                    ok as i128
                })
                .collect()
        })
        .collect()
}

fn stirling2(n: usize, k: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    if k > n {
        0
    } else {
        s[n][k]
    }
}

fn coloured(ps: Vec<Partition>) -> Vec<ColouredPartition> {
    ps.into_iter().map(ColouredPartition::uncoloured).collect()
}

fn with_labels(k: usize, l: usize) -> impl Strategy<Value = Partition> {
    let n = k + l;
    prop::collection::vec(0..n.max(1), n).prop_map(move |raw| Partition::from_labels(k, l, raw))
}

fn partition(max_row: usize) -> impl Strategy<Value = Partition> {
    (0..=max_row, 0..=max_row).prop_flat_map(|(k, l)| with_labels(k, l))
}

#[test]
fn small_matrices() {
    let t = |s: &str, n| {
        tp_matrix(
            &ColouredPartition::uncoloured(Partition::parse(s).unwrap()),
            n,
        )
        .unwrap()
    };
    let id = t("a|a", 3);
    assert_eq!(
        id.to_dense(),
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
    );
    assert_eq!(
        t("|aa", 2).to_dense(),
        vec![vec![1], vec![0], vec![0], vec![1]]
    );
    assert_eq!(t("|a", 3).to_dense(), vec![vec![1], vec![1], vec![1]]);
    assert_eq!(t("aa|", 2).to_dense(), vec![vec![1, 0, 0, 1]]);
    assert_eq!(t("|", 4).to_dense(), vec![vec![1]]);
    let cross = t("ab|ba", 2);
    assert_eq!(
        cross.to_dense(),
        vec![
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1]
        ]
    );
    assert_eq!(t("aa|aa", 3).nnz(), 3);
}

#[test]
fn size_errors() {
    let p = Partition::parse("a|a").unwrap();
    assert!(matches!(support(&p, 0), Err(Error::InvalidParameter(_))));
    let wide = Partition::identity(21);
    assert!(matches!(support(&wide, 2), Err(Error::SizeOverflow { .. })));
    let mixed = vec![
        ColouredPartition::uncoloured(Partition::parse("a|a").unwrap()),
        ColouredPartition::uncoloured(Partition::parse("|aa").unwrap()),
    ];
    assert!(matches!(
        gram_rank(&mixed, 2),
        Err(Error::ShapeMismatch { .. })
    ));
}

#[test]
fn gram_ranks_follow_stirling_numbers() {
    for points in 1..=5 {
        let all = coloured(enumerate(0, points, PartitionClass::All).unwrap());
        for n in 1..=4 {
            let expected: u64 = (1..=n).map(|j| stirling2(points, j)).sum();
            assert_eq!(
                gram_rank(&all, n).unwrap() as u64,
                expected,
                "P(0,{points}) at N={n}"
            );
        }
    }
}

#[test]
fn noncrossing_spans_everything_for_small_n() {
    let nc = coloured(enumerate(0, 6, PartitionClass::NonCrossing).unwrap());
    assert_eq!(nc.len(), 132);
    assert_eq!(gram_rank(&nc, 1).unwrap(), 1);
    assert_eq!(
        gram_rank(&nc, 2).unwrap() as u64,
        stirling2(6, 1) + stirling2(6, 2)
    );
    assert_eq!(
        gram_rank(&nc, 3).unwrap() as u64,
        (1..=3).map(|j| stirling2(6, j)).sum::<u64>()
    );
}

#[test]
fn pairings_are_independent_at_two() {
    for half in 1..=4 {
        let nc2 = coloured(enumerate(0, 2 * half, PartitionClass::NonCrossingPair).unwrap());
        assert_eq!(gram_rank(&nc2, 2).unwrap(), nc2.len());
        assert_eq!(gram_rank(&nc2, 1).unwrap(), 1);
    }
    let pairs = coloured(enumerate(0, 4, PartitionClass::Pair).unwrap());
    assert_eq!(gram_rank(&pairs, 1).unwrap(), 1);
    assert_eq!(gram_rank(&pairs, 2).unwrap(), 3);
}

proptest! {
    #[test]
    fn matches_dense_oracle(p in partition(3), n in 1usize..=3) {
        let m = tp_matrix(&ColouredPartition::uncoloured(p.clone()), n).unwrap();
        prop_assert_eq!(m.to_dense(), dense_oracle(&p, n));
        prop_assert_eq!(m.nnz(), n.pow(p.num_blocks() as u32));
    }

    #[test]
    fn gram_entry_is_frobenius_product(k in 0usize..=2, l in 1usize..=3, n in 1usize..=3, seed in any::<u64>()) {
        let ps = enumerate(k, l, PartitionClass::All).unwrap();
        let p = &ps[(seed % ps.len() as u64) as usize];
        let q = &ps[((seed >> 32) % ps.len() as u64) as usize];
        let (a, b) = (dense_oracle(p, n), dense_oracle(q, n));
        let inner: i128 = a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| x * y).sum();
        prop_assert_eq!(gram_entry(p, q, n), BigInt::from(inner));
    }

    #[test]
    fn functor_laws_hold(k in 0usize..=2, m in 0usize..=2, l in 0usize..=2, n in 1usize..=3, seed in any::<u64>()) {
        let top = enumerate(m, l, PartitionClass::All).unwrap();
        let bottom = enumerate(k, m, PartitionClass::All).unwrap();
        let p = &top[(seed % top.len() as u64) as usize];
        let q = &bottom[((seed >> 32) % bottom.len() as u64) as usize];
        let report = verify_functor_uncoloured(p, q, n).unwrap();
        prop_assert_eq!(report.violation, None);
        prop_assert_eq!(report.checked, vec![Law::Adjoint, Law::Tensor, Law::Composition]);
    }

    #[test]
    fn composition_law_is_skipped_for_mismatched_shapes(p in with_labels(1, 2), q in with_labels(3, 2), n in 1usize..=2) {
        let report = verify_functor_uncoloured(&p, &q, n).unwrap();
        prop_assert_eq!(report.checked, vec![Law::Adjoint, Law::Tensor]);
    }
}
