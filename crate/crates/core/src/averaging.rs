//! Averaged operators over a finite group acting on colours by left multiplication.

use std::collections::BTreeMap;

use crate::colour::{Colour, ColourSet};
use crate::diagram::{DiagramElement, Poly};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::partition::ColouredPartition;
use crate::tensor::{tp_matrix, TpMatrix};

/// Group elements as self-conjugate colours, named `e`, `g1`, `g2`, ….
pub fn group_colours(g: &FiniteGroup) -> ColourSet {
    let names: Vec<String> = (0..g.order())
        .map(|a| {
            if a == g.identity() {
                "e".into()
            } else {
                format!("g{a}")
            }
        })
        .collect();
    let n = names.len();
    ColourSet::new(names, (0..n).collect()).expect("group colours")
}

/// `g.p`: every colour multiplied on the left by `g`.
pub fn translate(p: &ColouredPartition, g: &FiniteGroup, a: usize) -> ColouredPartition {
    p.map_colours(|_, c| Colour(g.mul(a, c.index()) as u16))
}

/// Blocks ordered by leftmost upper point, then blocks without upper points by smallest point.
pub fn ordered_blocks(p: &ColouredPartition) -> Vec<Vec<usize>> {
    let mut blocks = p.partition().blocks();
    blocks.sort_by_key(|b| {
        let up = b.iter().copied().filter(|&i| i < p.k()).min();
        (up.is_none(), up.unwrap_or(0), b[0])
    });
    blocks
}

/// Block-wise action of a tuple indexed like [`ordered_blocks`].
pub fn translate_blocks(
    p: &ColouredPartition,
    g: &FiniteGroup,
    tuple: &[usize],
) -> ColouredPartition {
    let blocks = ordered_blocks(p);
    let mut owner = vec![0; p.size()];
    for (i, b) in blocks.iter().enumerate() {
        for &pt in b {
            owner[pt] = i;
        }
    }
    p.map_colours(|pt, c| Colour(g.mul(tuple[owner[pt]], c.index()) as u16))
}

fn check_colours(p: &ColouredPartition, g: &FiniteGroup) -> Result<()> {
    if p.colours().any(|c| c.index() >= g.order()) {
        return Err(Error::UnknownColour("colour outside the group".into()));
    }
    Ok(())
}

fn tuples(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..order).map(move |a| {
                    let mut v = t.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// `L_p = Σ_g g.p` as a formal sum.
pub fn averaged_l(p: &ColouredPartition, g: &FiniteGroup) -> Result<DiagramElement> {
    check_colours(p, g)?;
    let mut out = DiagramElement::zero(p.k(), p.l());
    for a in 0..g.order() {
        out.add_term(translate(p, g, a), Poly::integer(1))?;
    }
    Ok(out)
}

/// `M_p = Σ_{(g₁, …, g_b)} (g₁, …, g_b).p` as a formal sum.
pub fn averaged_m(p: &ColouredPartition, g: &FiniteGroup) -> Result<DiagramElement> {
    check_colours(p, g)?;
    let mut out = DiagramElement::zero(p.k(), p.l());
    for t in tuples(g.order(), p.num_blocks()) {
        out.add_term(translate_blocks(p, g, &t), Poly::integer(1))?;
    }
    Ok(out)
}

fn sum_matrices(terms: &DiagramElement, n: usize) -> Result<TpMatrix> {
    let mut acc = TpMatrix::zero(n, terms.k(), terms.l())?;
    for (p, c) in terms.terms() {
        let m = c
            .coeffs()
            .first()
            .map(|x| x.to_integer())
            .unwrap_or_default();
        let f: i128 = i128::try_from(m)
            .map_err(|_| Error::InvalidParameter("coefficient too large".into()))?;
        acc = acc.add(&tp_matrix(p, n)?.scale(f))?;
    }
    Ok(acc)
}

/// `Σ_g T_{g.p}`.
pub fn averaged_l_matrix(p: &ColouredPartition, g: &FiniteGroup, n: usize) -> Result<TpMatrix> {
    sum_matrices(&averaged_l(p, g)?, n)
}

/// `Σ_tuples T_{tuple.p}`.
pub fn averaged_m_matrix(p: &ColouredPartition, g: &FiniteGroup, n: usize) -> Result<TpMatrix> {
    sum_matrices(&averaged_m(p, g)?, n)
}

/// Result of the closure identities for a pair of coloured partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragingReport {
    pub l_tensor: bool,
    pub l_compose: Option<bool>,
    pub m_tensor: bool,
    pub m_adjoint: bool,
    pub m_compose_orbits: Option<bool>,
    pub m_from_l: bool,
}

impl AveragingReport {
    pub fn all(&self) -> bool {
        self.l_tensor
            && self.l_compose.unwrap_or(true)
            && self.m_tensor
            && self.m_adjoint
            && self.m_compose_orbits.unwrap_or(true)
            && self.m_from_l
    }
}

/// `Σ_k L_{p⊗(k.q)}`.
pub fn l_tensor_rhs(
    p: &ColouredPartition,
    q: &ColouredPartition,
    g: &FiniteGroup,
) -> Result<DiagramElement> {
    let mut rhs = DiagramElement::zero(p.k() + q.k(), p.l() + q.l());
    for a in 0..g.order() {
        rhs = rhs.add(&averaged_l(&p.tensor(&translate(q, g, a)), g)?)?;
    }
    Ok(rhs)
}

/// `Σ θ^{rl} L_{p∘(k.q)}` over the translates `k.q` composable with `p`.
pub fn l_compose_rhs(
    p: &ColouredPartition,
    q: &ColouredPartition,
    g: &FiniteGroup,
) -> Result<DiagramElement> {
    let mut rhs = DiagramElement::zero(q.k(), p.l());
    for a in 0..g.order() {
        let kq = translate(q, g, a);
        if kq.lower() != p.upper() {
            continue;
        }
        let c = ColouredPartition::compose(p, &kq)?;
        rhs = rhs.add(&averaged_l(&c.result, g)?.scale(&Poly::theta_pow(c.loops)))?;
    }
    Ok(rhs)
}

/// Whether a formal sum is a combination of `M_r`, i.e. constant on every block-tuple orbit.
pub fn is_m_combination(x: &DiagramElement, g: &FiniteGroup) -> Result<bool> {
    let mut rest: BTreeMap<ColouredPartition, Poly> = x.terms().clone();
    while let Some((r, c)) = rest.iter().next().map(|(r, c)| (r.clone(), c.clone())) {
        for t in tuples(g.order(), r.num_blocks()) {
            let s = translate_blocks(&r, g, &t);
            match rest.remove(&s) {
                Some(d) if d == c => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Checks the tensor, adjoint and composition identities for the averaged operators.
pub fn verify_averaging(
    p: &ColouredPartition,
    q: &ColouredPartition,
    g: &FiniteGroup,
) -> Result<AveragingReport> {
    let lp = averaged_l(p, g)?;
    let lq = averaged_l(q, g)?;
    let l_tensor = lp.tensor(&lq) == l_tensor_rhs(p, q, g)?;
    let l_compose = if q.l() == p.k() {
        Some(DiagramElement::multiply(&lp, &lq)? == l_compose_rhs(p, q, g)?)
    } else {
        None
    };

    let mp = averaged_m(p, g)?;
    let mq = averaged_m(q, g)?;
    let m_tensor = mp.tensor(&mq) == averaged_m(&p.tensor(q), g)?;
    let m_adjoint = mp.adjoint() == averaged_m(&p.adjoint(), g)?;
    let m_compose_orbits = if q.l() == p.k() {
        Some(is_m_combination(&DiagramElement::multiply(&mp, &mq)?, g)?)
    } else {
        None
    };

    let mut l_sum = DiagramElement::zero(p.k(), p.l());
    for t in tuples(g.order(), p.num_blocks()) {
        l_sum = l_sum.add(&averaged_l(&translate_blocks(p, g, &t), g)?)?;
    }
    let m_from_l = l_sum == mp.scale(&Poly::integer(g.order() as i64));

    Ok(AveragingReport {
        l_tensor,
        l_compose,
        m_tensor,
        m_adjoint,
        m_compose_orbits,
        m_from_l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn l_of_identity_over_z2() {
        let g = FiniteGroup::cyclic(2);
        let cs = group_colours(&g);
        let id = ColouredPartition::parse("a|a@e/e", &cs).unwrap();
        let l = averaged_l(&id, &g).unwrap();
        let gid = ColouredPartition::parse("a|a@g1/g1", &cs).unwrap();
        assert_eq!(l.terms().len(), 2);
        assert!(l.terms().contains_key(&id) && l.terms().contains_key(&gid));
    }

    #[test]
    fn matrices_collapse() {
        let g = FiniteGroup::cyclic(3);
        let p = ColouredPartition::monochrome(Partition::parse("ab|ab").unwrap(), Colour(1));
        let t = tp_matrix(&p, 2).unwrap();
        assert_eq!(averaged_l_matrix(&p, &g, 2).unwrap(), t.scale(3));
        assert_eq!(averaged_m_matrix(&p, &g, 2).unwrap(), t.scale(9));
    }

    #[test]
    fn identities_for_one_block_pair() {
        let g = FiniteGroup::cyclic(3);
        let cs = group_colours(&g);
        let p = ColouredPartition::parse("a|aa@g1/e,g2", &cs).unwrap();
        let q = ColouredPartition::parse("aa|a@e,g1/g1", &cs).unwrap();
        let r = verify_averaging(&p, &q, &g).unwrap();
        assert!(r.all(), "{r:?}");
        assert_eq!(r.l_compose, Some(true));
    }
}
