use std::collections::{BTreeMap, BTreeSet};

use pqg_core::rep::{
    enumerate_mixing, equivalent, fuse_general, fuse_noncrossing, h_boxvert, h_square,
    one_block_classes, proj_enumerate, through_decomposition, X0,
};
use pqg_core::{
    enumerate, Category, Colour, ColourSet, ColouredPartition, Error, FiniteGroup, FusionSet,
    Partition, PartitionClass, Projective, RepClasses,
};

fn uncoloured_word(n: usize) -> Vec<Colour> {
    vec![Colour(0); n]
}

fn nc() -> Category {
    Category::noncrossing(ColourSet::uncoloured())
}

fn nc2() -> Category {
    Category::noncrossing_pair(ColourSet::uncoloured())
}

/// Blocks of `q ∘ p` (p first), by union-find on the stacked diagram.
fn compose_blocks(q: &Partition, p: &Partition) -> BTreeSet<BTreeSet<usize>> {
    let (k, m, l) = (p.k(), p.l(), q.l());
    let mut parent: Vec<usize> = (0..k + m + l).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut join = |pts: Vec<usize>| {
        for w in pts.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    };
    for b in p.blocks() {
        join(b);
    }
    for b in q.blocks() {
        join(b.into_iter().map(|x| x + k).collect());
    }
    let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for x in (0..k).chain(k + m..k + m + l) {
        let r = find(&mut parent, x);
        let y = if x < k { x } else { x - m };
        groups.entry(r).or_default().insert(y);
    }
    groups.into_values().collect()
}

fn block_set(p: &Partition) -> BTreeSet<BTreeSet<usize>> {
    p.blocks()
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect()
}

fn mirrored(p: &Partition) -> BTreeSet<BTreeSet<usize>> {
    let k = p.k();
    p.blocks()
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|x| if x < k { x + k } else { x - k })
                .collect()
        })
        .collect()
}

fn projective_oracle(p: &Partition) -> bool {
    p.k() == p.l() && mirrored(p) == block_set(p) && compose_blocks(p, p) == block_set(p)
}

#[test]
fn projective_counts_match_direct_search() {
    for n in 1..=3 {
        let w = uncoloured_word(n);
        let all = enumerate(n, n, PartitionClass::All).unwrap();
        let nc_expected = all
            .iter()
            .filter(|p| p.is_noncrossing() && projective_oracle(p))
            .count();
        let nc2_expected = all
            .iter()
            .filter(|p| p.is_noncrossing() && p.is_pair() && projective_oracle(p))
            .count();
        assert_eq!(proj_enumerate(&nc(), &w).len(), nc_expected, "NC {n}");
        assert_eq!(proj_enumerate(&nc2(), &w).len(), nc2_expected, "NC2 {n}");
    }
    assert_eq!(proj_enumerate(&nc2(), &uncoloured_word(2)).len(), 2);
}

#[test]
fn through_decomposition_round_trips() {
    for n in 1..=4 {
        for p in proj_enumerate(&nc(), &uncoloured_word(n)) {
            let pu = through_decomposition(p.partition(), X0).unwrap();
            assert_eq!(pu.l(), p.t());
            assert!(pu.is_noncrossing());
            assert_eq!(
                ColouredPartition::compose(&pu.adjoint(), &pu)
                    .unwrap()
                    .result,
                *p.partition()
            );
            let back = ColouredPartition::compose(&pu, &pu.adjoint())
                .unwrap()
                .result;
            assert_eq!(back, ColouredPartition::identity_word(&vec![X0; p.t()]));
        }
    }
}

#[test]
fn non_projectives_are_refused() {
    let cs = ColourSet::uncoloured();
    for s in ["ab|ba", "a|", "aa|ab", "ab|aa"] {
        let p = ColouredPartition::parse(s, &cs).unwrap();
        assert!(
            matches!(Projective::new(p.clone()), Err(Error::NotProjective)),
            "{s}"
        );
        assert!(
            matches!(through_decomposition(&p, X0), Err(Error::NotProjective)),
            "{s}"
        );
    }
    let id = Projective::new(ColouredPartition::parse("a|a", &cs).unwrap()).unwrap();
    let all = Category::all(cs);
    assert!(matches!(
        fuse_noncrossing(&id, &id, &all),
        Err(Error::NotNoncrossing)
    ));
}

/// For NC and NC2 the classes are exactly the through-block counts.
#[test]
fn equivalence_is_decided_by_through_blocks() {
    for (c, max) in [(nc(), 3), (nc2(), 4)] {
        let ps: Vec<Projective> = (1..=max)
            .flat_map(|n| proj_enumerate(&c, &uncoloured_word(n)))
            .collect();
        for p in &ps {
            for q in &ps {
                assert_eq!(equivalent(p, q, &c).unwrap(), p.t() == q.t());
            }
        }
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let c = Category::gamma0(FiniteGroup::cyclic(2), &[0, 1]).unwrap();
    let cs = c.colours().clone();
    let ps: Vec<Projective> = (1..=2)
        .flat_map(|n| cs.words(n))
        .flat_map(|w| proj_enumerate(&c, &w))
        .collect();
    assert!(ps.len() > 10);
    let rel: Vec<Vec<bool>> = ps
        .iter()
        .map(|p| ps.iter().map(|q| equivalent(p, q, &c).unwrap()).collect())
        .collect();
    for i in 0..ps.len() {
        assert!(rel[i][i]);
        for j in 0..ps.len() {
            assert_eq!(rel[i][j], rel[j][i]);
            if rel[i][j] {
                assert_eq!(ps[i].t(), ps[j].t());
            }
            for k in 0..ps.len() {
                assert!(!(rel[i][j] && rel[j][k]) || rel[i][k]);
            }
        }
    }
}

/// Mixings by exhaustive search: projective, not the identity, and every block is a
/// through-line, a left-right pair in one row, or a left-right pair joined across rows.
fn mixing_oracle(k: usize, l: usize) -> BTreeSet<Partition> {
    let n = k + l;
    let allowed = |b: &Vec<usize>| {
        let (up, low): (Vec<usize>, Vec<usize>) = b.iter().partition(|&&i| i < n);
        let low: Vec<usize> = low.into_iter().map(|i| i - n).collect();
        match (up.as_slice(), low.as_slice()) {
            ([a], [b]) => a == b,
            ([a, b], []) | ([], [a, b]) | ([a, b], [_, _]) => *a < k && *b >= k,
            _ => false,
        }
    };
    enumerate(n, n, PartitionClass::All)
        .unwrap()
        .into_iter()
        .filter(|h| {
            *h != Partition::identity(n) && h.blocks().iter().all(allowed) && projective_oracle(h)
        })
        .collect()
}

#[test]
fn mixings_match_exhaustive_search() {
    for k in 0..=4 {
        for l in 0..=4 - k {
            let found: BTreeSet<Partition> = enumerate_mixing(k, l).into_iter().collect();
            assert_eq!(found, mixing_oracle(k, l), "({k},{l})");
        }
    }
    assert_eq!(enumerate_mixing(1, 1).len(), 2);
    assert!(enumerate_mixing(0, 5).is_empty());
}

#[test]
fn noncrossing_mixings_are_the_nested_ones() {
    for k in 0..=3 {
        for l in 0..=3 {
            let all = enumerate_mixing(k, l);
            assert_eq!(all.len(), enumerate_mixing(l, k).len());
            assert!(all
                .iter()
                .all(|h| projective_oracle(h) && *h != Partition::identity(k + l)));
            let found: BTreeSet<Partition> =
                all.into_iter().filter(Partition::is_noncrossing).collect();
            let mut expected = BTreeSet::new();
            for j in 1..=k.min(l) {
                for h in [h_square(j), h_boxvert(j)] {
                    expected.insert(
                        Partition::identity(k - j)
                            .tensor(&h)
                            .tensor(&Partition::identity(l - j)),
                    );
                }
            }
            assert_eq!(found, expected, "({k},{l})");
        }
    }
}

fn t_multiset(terms: &[Projective]) -> Vec<usize> {
    let mut v: Vec<usize> = terms.iter().map(Projective::t).collect();
    v.sort_unstable();
    v
}

#[test]
fn fusion_rules_of_free_orthogonal_and_permutation_types() {
    for n in 1..=3 {
        let ps = proj_enumerate(&nc(), &uncoloured_word(n));
        for p in &ps {
            for q in &ps {
                let (a, b) = (p.t(), q.t());
                let expected: Vec<usize> = (a.abs_diff(b)..=a + b).collect();
                assert_eq!(t_multiset(&fuse_general(p, q, &nc()).unwrap()), expected);
                assert_eq!(
                    t_multiset(&fuse_noncrossing(p, q, &nc()).unwrap()),
                    expected
                );
            }
        }
    }
    for n in [2, 4] {
        let ps = proj_enumerate(&nc2(), &uncoloured_word(n));
        for p in &ps {
            for q in &ps {
                let (a, b) = (p.t(), q.t());
                let expected: Vec<usize> = (0..=a.min(b)).map(|k| a + b - 2 * k).rev().collect();
                assert_eq!(t_multiset(&fuse_general(p, q, &nc2()).unwrap()), expected);
            }
        }
    }
}

#[test]
fn fusion_terms_stay_in_the_category() {
    let c = Category::gamma0(FiniteGroup::cyclic(3), &[1, 2]).unwrap();
    let cs = c.colours().clone();
    let ps: Vec<Projective> = (1..=2)
        .flat_map(|n| cs.words(n))
        .flat_map(|w| proj_enumerate(&c, &w))
        .collect();
    let mut classes = RepClasses::new(&c);
    for p in ps.iter().take(12) {
        for q in ps.iter().take(12) {
            let general = fuse_general(p, q, &c).unwrap();
            let nested = fuse_noncrossing(p, q, &c).unwrap();
            for r in &general {
                assert!(c.contains(r.partition()).is_yes());
                assert_eq!(r.word(), [p.word(), q.word()].concat());
            }
            assert_eq!(
                classes.multiset(&general).unwrap(),
                classes.multiset(&nested).unwrap()
            );
        }
    }
}

#[test]
fn rep_classes_keep_least_representatives() {
    let c = nc();
    let mut classes = RepClasses::new(&c);
    let big: Vec<Projective> = proj_enumerate(&c, &uncoloured_word(3));
    for p in &big {
        classes.label(p).unwrap();
    }
    assert_eq!(classes.representatives().len(), 4);
    for p in proj_enumerate(&c, &uncoloured_word(1)) {
        let label = classes.label(&p).unwrap();
        assert_eq!(classes.representative(label), &p);
    }
    let counts = classes.multiset(&big).unwrap();
    assert_eq!(counts.values().sum::<usize>(), big.len());
}

#[test]
fn one_block_sets_of_group_categories() {
    for (g, subset) in [
        (FiniteGroup::cyclic(3), vec![1, 2]),
        (FiniteGroup::cyclic(4), vec![1, 3]),
        (FiniteGroup::klein(), vec![1, 2, 3]),
    ] {
        let c = Category::gamma0(g.clone(), &subset).unwrap();
        let s = one_block_classes(&c, 6).unwrap().fusion_set;
        assert!(
            s.is_isomorphic(&FusionSet::from_group(&g, "")),
            "{:?}",
            g.name()
        );
    }
    let nc = one_block_classes(&nc(), 6).unwrap();
    assert!(nc.fusion_set.is_isomorphic(&FusionSet::idempotent()));
    assert_eq!(nc.words, vec![vec![Colour(0)]]);
}
