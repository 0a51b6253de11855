use std::collections::BTreeMap;

use pqg_core::classify::TripleRecord;
use pqg_core::{classify, realize, Error, FiniteGroup, FusionSet, FusionTriple, SemiringElement};
use proptest::prelude::*;

fn zoo() -> Vec<(&'static str, FusionSet)> {
    vec![
        ("O", FusionSet::o_set()),
        ("U", FusionSet::u_set()),
        ("Z", FusionSet::z_set()),
        ("idempotent", FusionSet::idempotent()),
        ("Z3", FusionSet::from_group(&FiniteGroup::cyclic(3), "")),
        ("S3", FusionSet::from_group(&FiniteGroup::symmetric3(), "")),
        (
            "groupoid Z2 x2",
            FusionSet::groupoid(&FiniteGroup::cyclic(2), 2, ""),
        ),
        (
            "O+Z",
            FusionSet::o_set().disjoint_union(&FusionSet::z_set()),
        ),
        (
            "U+Z2",
            FusionSet::u_set().disjoint_union(&FusionSet::from_group(&FiniteGroup::cyclic(2), "")),
        ),
    ]
}

fn words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
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

/// `wa ⊗ bv = wabv + w(a*b)v + [b = ā] (w ⊗ v)`, with `1 ⊗ v = v` and `w ⊗ 1 = w`.
fn tensor_oracle(s: &FusionSet, w: &[usize], v: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let (Some((&a, w0)), Some((&b, v0))) = (w.split_last(), v.split_first()) else {
        out.insert([w, v].concat(), 1);
        return out;
    };
    *out.entry([w, v].concat()).or_insert(0) += 1;
    if let Some(c) = s.fuse(a, b) {
        *out.entry([w0, &[c], v0].concat()).or_insert(0) += 1;
    }
    if b == s.conj(a) {
        for (u, m) in tensor_oracle(s, w0, v0) {
            *out.entry(u).or_insert(0) += m;
        }
    }
    out
}

fn max_len(s: &FusionSet) -> usize {
    if s.len() <= 4 {
        3
    } else {
        2
    }
}

#[test]
fn word_tensor_matches_recursive_definition() {
    for (name, s) in zoo() {
        let ws = words(s.len(), max_len(&s));
        for w in &ws {
            for v in &ws {
                assert_eq!(
                    s.word_tensor(w, v).terms,
                    tensor_oracle(&s, w, v),
                    "{name}: {w:?} {v:?}"
                );
            }
        }
    }
}

#[test]
fn tensor_is_associative_with_unit() {
    for (name, s) in zoo() {
        let ws = words(s.len(), 2);
        for u in &ws {
            assert_eq!(s.word_tensor(&[], u), SemiringElement::word(u.clone()));
            assert_eq!(s.word_tensor(u, &[]), SemiringElement::word(u.clone()));
            for v in &ws {
                let uv = s.word_tensor(u, v);
                for w in &ws {
                    let left = s.tensor_elements(&uv, &SemiringElement::word(w.clone()));
                    let right =
                        s.tensor_elements(&SemiringElement::word(u.clone()), &s.word_tensor(v, w));
                    assert_eq!(left, right, "{name}: {u:?} {v:?} {w:?}");
                }
            }
        }
    }
}

#[test]
fn conjugation_reverses_tensor_products() {
    for (name, s) in zoo() {
        let ws = words(s.len(), max_len(&s));
        for w in &ws {
            for v in &ws {
                let conj: BTreeMap<Vec<usize>, u64> = s
                    .word_tensor(w, v)
                    .terms
                    .into_iter()
                    .map(|(u, m)| (s.conj_word(&u), m))
                    .collect();
                assert_eq!(
                    conj,
                    s.word_tensor(&s.conj_word(v), &s.conj_word(w)).terms,
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn zoo_is_admissible() {
    for (name, s) in zoo() {
        assert!(s.check_axioms().all(), "{name}");
        assert!(s.lemma_inverse_check(), "{name}");
    }
}

#[test]
fn broken_frobenius_is_rejected() {
    let s = FusionSet::new(
        vec!["x".into(), "y".into()],
        vec![0, 1],
        vec![vec![Some(1), None], vec![None, None]],
    )
    .unwrap();
    let a = s.check_axioms();
    assert!(a.associative && a.antisymmetric && !a.frobenius);
    assert!(matches!(
        s.require_admissible(),
        Err(Error::NotAdmissible(_))
    ));
    assert!(classify(&s).is_err());

    let skew = FusionSet::new(
        vec!["x".into(), "xb".into()],
        vec![1, 0],
        vec![vec![Some(0), None], vec![None, None]],
    )
    .unwrap();
    assert!(!skew.check_axioms().antisymmetric);
}

#[test]
fn invalid_tables_are_refused() {
    let bad_conj = FusionSet::new(
        vec!["x".into(), "y".into()],
        vec![1, 1],
        vec![vec![None; 2]; 2],
    );
    assert!(matches!(bad_conj, Err(Error::InvalidFusionSet(_))));
    let zero_name = FusionSet::new(vec!["0".into()], vec![0], vec![vec![None]]);
    assert!(matches!(zero_name, Err(Error::InvalidFusionSet(_))));
}

#[test]
fn small_isomorphism_examples() {
    let oo = FusionSet::o_set().disjoint_union(&FusionSet::o_set());
    assert_eq!(oo.len(), FusionSet::u_set().len());
    assert!(!oo.is_isomorphic(&FusionSet::u_set()));
    assert!(
        FusionSet::from_group(&FiniteGroup::klein(), "").is_isomorphic(&FusionSet::from_group(
            &FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)),
            "h"
        ))
    );
    assert!(!FusionSet::from_group(&FiniteGroup::klein(), "")
        .is_isomorphic(&FusionSet::from_group(&FiniteGroup::cyclic(4), "")));
    let z = FusionSet::z_set();
    assert!(z.is_isomorphic(&FusionSet::groupoid(&FiniteGroup::trivial(), 2, "")));
}

#[test]
fn z_set_classifies_to_one_component() {
    let t = classify(&FusionSet::z_set()).unwrap();
    let json = serde_json::to_string(&t.to_record()).unwrap();
    assert_eq!(
        json,
        r#"{"nO":0,"nU":0,"components":[{"group":"trivial","n":1}]}"#
    );
    let back: TripleRecord = serde_json::from_str(&json).unwrap();
    assert!(FusionTriple::from_record(&back).unwrap().is_isomorphic(&t));
}

#[test]
fn records_round_trip() {
    for (name, s) in zoo() {
        let json = serde_json::to_string(&s.to_record()).unwrap();
        let back = FusionSet::from_record(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, s, "{name}");
    }
}

fn permuted(s: &FusionSet, perm: &[usize]) -> FusionSet {
    let n = s.len();
    let mut names = vec![String::new(); n];
    let mut conj = vec![0; n];
    let mut table = vec![vec![None; n]; n];
    for x in 0..n {
        names[perm[x]] = format!("p{}", s.name(x));
        conj[perm[x]] = perm[s.conj(x)];
        for y in 0..n {
            table[perm[x]][perm[y]] = s.fuse(x, y).map(|z| perm[z]);
        }
    }
    FusionSet::new(names, conj, table).unwrap()
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        Just(FiniteGroup::trivial()),
        Just(FiniteGroup::cyclic(2)),
        Just(FiniteGroup::cyclic(3)),
        Just(FiniteGroup::cyclic(4)),
        Just(FiniteGroup::klein()),
        Just(FiniteGroup::symmetric3()),
    ]
}

fn triple() -> impl Strategy<Value = FusionTriple> {
    (
        0usize..=2,
        0usize..=2,
        prop::collection::vec((group(), 0usize..=1), 0..=2),
    )
        .prop_map(|(n_o, n_u, components)| FusionTriple {
            n_o,
            n_u,
            components,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn realize_then_classify_is_identity(t in triple()) {
        let s = realize(&t);
        prop_assert!(s.check_axioms().all());
        prop_assert!(s.lemma_inverse_check());
        prop_assert!(classify(&s).unwrap().is_isomorphic(&t));
    }

    #[test]
    fn isomorphisms_survive_relabelling(t in triple(), seed in any::<u64>()) {
        let s = realize(&t);
        let n = s.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let p = permuted(&s, &perm);
        let f = s.isomorphism(&p).expect("relabelled copy is isomorphic");
        for a in 0..n {
            prop_assert_eq!(f[s.conj(a)], p.conj(f[a]));
            for b in 0..n {
                prop_assert_eq!(s.fuse(a, b).map(|c| f[c]), p.fuse(f[a], f[b]));
            }
        }
        prop_assert!(classify(&p).unwrap().is_isomorphic(&t));
    }
}
