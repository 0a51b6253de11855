//! Structure of admissible fusion sets: derived subsets, fusion triples and their realization.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::FusionSet;
use crate::group::{FiniteGroup, GroupSpec};

/// The subsets and relations attached to an admissible fusion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSubsets {
    /// `x̄ * x ≠ ∅`.
    pub h: Vec<usize>,
    /// Self-conjugate elements outside `h`.
    pub o_part: Vec<usize>,
    /// Remaining elements outside `h`.
    pub u_part: Vec<usize>,
    /// Elements of `h` with `x * x̄ = x̄ * x`, grouped into the groups `Γᵢ`.
    pub gamma: Vec<Vec<usize>>,
    /// Groups of `gamma` that fuse trivially with all of `z`.
    pub gamma_prime: Vec<usize>,
    /// The other groups of `gamma`.
    pub lambda: Vec<usize>,
    /// Elements of `h` outside `gamma`.
    pub z: Vec<usize>,
    /// `≈`-classes of `z`.
    pub approx_classes: Vec<Vec<usize>>,
    /// Connected components as sets of indices into `gamma`, one per component of `lambda`.
    pub components: Vec<Vec<usize>>,
}

/// `(n_O, n_U, (Γᵢ, nᵢ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTriple {
    pub n_o: usize,
    pub n_u: usize,
    pub components: Vec<(FiniteGroup, usize)>,
}

pub fn derived_subsets(s: &FusionSet) -> Result<DerivedSubsets> {
    s.require_admissible()?;
    let n = s.len();
    let h: Vec<usize> = (0..n).filter(|&x| s.in_h(x)).collect();
    let o_part: Vec<usize> = (0..n).filter(|&x| !s.in_h(x) && s.conj(x) == x).collect();
    let u_part: Vec<usize> = (0..n).filter(|&x| !s.in_h(x) && s.conj(x) != x).collect();
    let is_gamma = |x: usize| s.fuse(x, s.conj(x)) == s.fuse(s.conj(x), x);
    let gamma_elems: Vec<usize> = h.iter().copied().filter(|&x| is_gamma(x)).collect();
    let z: Vec<usize> = h.iter().copied().filter(|&x| !is_gamma(x)).collect();

    let mut uf = UnionFind::<usize>::new(n);
    for &x in &gamma_elems {
        for &y in &gamma_elems {
            if s.fuse(x, s.conj(y)).is_some() {
                uf.union(x, y);
            }
        }
    }
    let mut gamma: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    for &x in &gamma_elems {
        let r = uf.find(x);
        match gamma.iter().position(|g| uf.find(g[0]) == r) {
            Some(i) => {
                gamma[i].push(x);
                group_of[x] = i;
            }
            None => {
                group_of[x] = gamma.len();
                gamma.push(vec![x]);
            }
        }
    }

    let touches_z = |x: usize| {
        z.iter()
            .any(|&t| s.fuse(x, t).is_some() || s.fuse(t, x).is_some())
    };
    let (lambda, gamma_prime): (Vec<usize>, Vec<usize>) =
        (0..gamma.len()).partition(|&i| gamma[i].iter().any(|&x| touches_z(x)));

    let lambda_of = |x: usize| -> Result<usize> {
        s.fuse(x, s.conj(x))
            .map(|e| group_of[e])
            .filter(|&g| g != usize::MAX)
            .ok_or_else(|| Error::NotAdmissible(format!("`{}` has no vertex group", s.name(x))))
    };

    let mut comp_uf = UnionFind::<usize>::new(gamma.len().max(1));
    for &x in &z {
        comp_uf.union(lambda_of(x)?, lambda_of(s.conj(x))?);
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    for &g in &lambda {
        let r = comp_uf.find(g);
        match components.iter().position(|c| comp_uf.find(c[0]) == r) {
            Some(i) => components[i].push(g),
            None => components.push(vec![g]),
        }
    }

    let lambda_set: Vec<usize> = lambda
        .iter()
        .flat_map(|&g| gamma[g].iter().copied())
        .collect();
    let mut approx_classes: Vec<Vec<usize>> = Vec::new();
    for &x in &z {
        match approx_classes.iter().position(|c| {
            s.fuse(x, s.conj(c[0]))
                .is_some_and(|e| lambda_set.contains(&e))
        }) {
            Some(i) => approx_classes[i].push(x),
            None => approx_classes.push(vec![x]),
        }
    }

    Ok(DerivedSubsets {
        h,
        o_part,
        u_part,
        gamma,
        gamma_prime,
        lambda,
        z,
        approx_classes,
        components,
    })
}

fn subgroup(s: &FusionSet, elems: &[usize]) -> Result<FiniteGroup> {
    let idx = |x: usize| elems.iter().position(|&e| e == x);
    let table = elems
        .iter()
        .map(|&a| {
            elems
                .iter()
                .map(|&b| {
                    s.fuse(a, b)
                        .and_then(idx)
                        .ok_or_else(|| Error::NotAdmissible("group part is not closed".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::new(table).map_err(|e| Error::NotAdmissible(e.to_string()))
}

fn component_key(g: &FiniteGroup, n: usize) -> (usize, Vec<usize>, usize, Vec<Vec<usize>>) {
    (g.order(), g.order_profile(), n, g.table().to_vec())
}

pub fn classify(s: &FusionSet) -> Result<FusionTriple> {
    let d = derived_subsets(s)?;
    let mut components: Vec<(FiniteGroup, usize)> = Vec::new();
    for &g in &d.gamma_prime {
        components.push((subgroup(s, &d.gamma[g])?, 0));
    }
    for comp in &d.components {
        components.push((subgroup(s, &d.gamma[comp[0]])?, comp.len() - 1));
    }
    components.sort_by_key(|(g, n)| component_key(g, *n));
    Ok(FusionTriple {
        n_o: d.o_part.len(),
        n_u: d.u_part.len() / 2,
        components,
    })
}

pub fn realize(t: &FusionTriple) -> FusionSet {
    let mut parts: Vec<FusionSet> = Vec::new();
    for i in 0..t.n_o {
        let o = FusionSet::o_set();
        parts.push(rename(&o, &format!("o{i}:")));
    }
    for i in 0..t.n_u {
        parts.push(rename(&FusionSet::u_set(), &format!("u{i}:")));
    }
    for (i, (g, n)) in t.components.iter().enumerate() {
        let prefix = format!("c{i}:");
        parts.push(if *n == 0 {
            FusionSet::from_group(g, &prefix)
        } else {
            FusionSet::groupoid(g, n + 1, &prefix)
        });
    }
    parts
        .into_iter()
        .reduce(|a, b| a.disjoint_union(&b))
        .unwrap_or_else(|| FusionSet::new(vec![], vec![], vec![]).expect("empty fusion set"))
}

fn rename(s: &FusionSet, prefix: &str) -> FusionSet {
    let r = s.to_record();
    let p = |v: &str| format!("{prefix}{v}");
    FusionSet::from_record(&crate::fusion::FusionSetRecord {
        elements: r.elements.iter().map(|e| p(e)).collect(),
        conj: r.conj.iter().map(|e| p(e)).collect(),
        table: r
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| if e == "0" { e.clone() } else { p(e) })
                    .collect()
            })
            .collect(),
    })
    .expect("renamed fusion set")
}

pub fn groups_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order()
        && a.order_profile() == b.order_profile()
        && FusionSet::from_group(a, "").is_isomorphic(&FusionSet::from_group(b, ""))
}

impl FusionTriple {
    /// Equal counts and a bijection of components with isomorphic groups and equal `n`.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if self.n_o != other.n_o
            || self.n_u != other.n_u
            || self.components.len() != other.components.len()
        {
            return false;
        }
        let mut used = vec![false; other.components.len()];
        fn go(a: &[(FiniteGroup, usize)], b: &[(FiniteGroup, usize)], used: &mut [bool]) -> bool {
            let Some(((g, n), rest)) = a.split_first() else {
                return true;
            };
            for j in 0..b.len() {
                if !used[j] && b[j].1 == *n && groups_isomorphic(g, &b[j].0) {
                    used[j] = true;
                    if go(rest, b, used) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        go(&self.components, &other.components, &mut used)
    }

    pub fn to_record(&self) -> TripleRecord {
        TripleRecord {
            n_o: self.n_o,
            n_u: self.n_u,
            components: self
                .components
                .iter()
                .map(|(g, n)| ComponentRecord {
                    group: g.to_spec(),
                    n: *n,
                })
                .collect(),
        }
    }

    pub fn from_record(r: &TripleRecord) -> Result<Self> {
        Ok(Self {
            n_o: r.n_o,
            n_u: r.n_u,
            components: r
                .components
                .iter()
                .map(|c| Ok((c.group.build()?, c.n)))
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

/// JSON shape of a fusion triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    #[serde(rename = "nO")]
    pub n_o: usize,
    #[serde(rename = "nU")]
    pub n_u: usize,
    pub components: Vec<ComponentRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub group: GroupSpec,
    pub n: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_subsets() {
        let z = FusionSet::z_set();
        let d = derived_subsets(&z).unwrap();
        assert_eq!(d.h.len(), 4);
        assert_eq!(d.z, vec![0, 1]);
        assert_eq!(d.gamma.len(), 2);
        assert_eq!(d.lambda.len(), 2);
        assert!(d.gamma_prime.is_empty());
        assert_eq!(d.components, vec![vec![0, 1]]);
    }

    #[test]
    fn u_and_group_subsets() {
        let d = derived_subsets(&FusionSet::u_set()).unwrap();
        assert!(d.h.is_empty());
        assert_eq!(d.u_part, vec![0, 1]);
        let g = FusionSet::from_group(&FiniteGroup::cyclic(3), "");
        let d = derived_subsets(&g).unwrap();
        assert_eq!((d.h.len(), d.gamma.len(), d.z.len()), (3, 1, 0));
    }

    #[test]
    fn classify_examples() {
        let t = classify(&FusionSet::o_set()).unwrap();
        assert_eq!((t.n_o, t.n_u, t.components.len()), (1, 0, 0));
        let t = classify(&FusionSet::z_set()).unwrap();
        assert_eq!((t.n_o, t.n_u), (0, 0));
        assert_eq!(t.components.len(), 1);
        assert_eq!((t.components[0].0.order(), t.components[0].1), (1, 1));
        let t = classify(&FusionSet::from_group(&FiniteGroup::cyclic(3), "")).unwrap();
        assert_eq!(t.components[0].0.name().as_deref(), Some("Z3"));
        assert_eq!(t.components[0].1, 0);
    }

    #[test]
    fn realize_sizes() {
        let t = FusionTriple {
            n_o: 1,
            n_u: 1,
            components: vec![],
        };
        assert_eq!(realize(&t).len(), 3);
        let t = FusionTriple {
            n_o: 0,
            n_u: 0,
            components: vec![(FiniteGroup::trivial(), 1)],
        };
        assert!(realize(&t).is_isomorphic(&FusionSet::z_set()));
        let t = FusionTriple {
            n_o: 0,
            n_u: 0,
            components: vec![(FiniteGroup::cyclic(2), 1)],
        };
        assert_eq!(realize(&t).len(), 8);
    }

    #[test]
    fn triple_json() {
        let t = classify(&FusionSet::z_set()).unwrap();
        let s = serde_json::to_string(&t.to_record()).unwrap();
        assert_eq!(
            s,
            r#"{"nO":0,"nU":0,"components":[{"group":"trivial","n":1}]}"#
        );
    }
}
