//! Formal linear combinations of partitions with coefficients in ℚ[θ].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::colour::ColourSet;
use crate::error::{Error, Result};
use crate::partition::ColouredPartition;
use crate::tensor::{tp_matrix, TpMatrix};

/// Polynomial in θ; `coeffs[i]` multiplies `θ^i`, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// `θ^deg`.
    pub fn theta_pow(deg: usize) -> Self {
        Self::monomial(BigRational::one(), deg)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn eval(&self, theta: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * theta + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}·")?;
                    }
                    if i == 1 {
                        f.write_str("θ")?;
                    } else {
                        write!(f, "θ^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A formal combination of partitions sharing `k` upper and `l` lower points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramElement {
    k: usize,
    l: usize,
    terms: BTreeMap<ColouredPartition, Poly>,
}

impl DiagramElement {
    pub fn zero(k: usize, l: usize) -> Self {
        Self {
            k,
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(p: ColouredPartition) -> Self {
        let mut e = Self::zero(p.k(), p.l());
        e.terms.insert(p, Poly::integer(1));
        e
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &BTreeMap<ColouredPartition, Poly> {
        &self.terms
    }

    pub fn coefficient(&self, p: &ColouredPartition) -> Poly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: ColouredPartition, c: Poly) -> Result<()> {
        if (p.k(), p.l()) != (self.k, self.l) {
            return Err(Error::ShapeMismatch {
                lower: p.l(),
                upper: self.l,
            });
        }
        let sum = self.coefficient(&p).add(&c);
        if sum.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.k, self.l);
        for (p, d) in &self.terms {
            let v = d.mul(c);
            if !v.is_zero() {
                out.terms.insert(p.clone(), v);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self {
            k: self.l,
            l: self.k,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.adjoint(), c.clone()))
                .collect(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.k + other.k, self.l + other.l);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.tensor(q), a.mul(b)).expect("tensor shape");
            }
        }
        out
    }

    /// `a · b = Σ θ^{rl(p, q)} p∘q` over terms `p` of `a` and `q` of `b`; `b` acts first.
    /// Pairs whose colour words do not match contribute nothing.
    pub fn multiply(a: &Self, b: &Self) -> Result<Self> {
        if b.l != a.k {
            return Err(Error::ShapeMismatch {
                lower: b.l,
                upper: a.k,
            });
        }
        let mut out = Self::zero(b.k, a.l);
        for (p, x) in &a.terms {
            for (q, y) in &b.terms {
                if q.lower() != p.upper() {
                    continue;
                }
                let c = ColouredPartition::compose(p, q)?;
                out.add_term(c.result, x.mul(y).mul(&Poly::theta_pow(c.loops)))?;
            }
        }
        Ok(out)
    }

    /// `Σ c(θ = N) T_p` with rational entries.
    pub fn evaluate(&self, n: usize) -> Result<BTreeMap<(usize, usize), BigRational>> {
        let theta = BigRational::from_integer(BigInt::from(n));
        let mut out: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (p, c) in &self.terms {
            let v = c.eval(&theta);
            for ((r, col), e) in tp_matrix(p, n)?.entries() {
                *out.entry((r, col)).or_insert_with(BigRational::zero) +=
                    &v * BigRational::from_integer(BigInt::from(e));
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn format(&self, cs: &ColourSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("({c})·[{}]", p.to_text(cs)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Rational form of an integer matrix, for comparison with evaluated diagrams.
pub fn rational_entries(m: &TpMatrix) -> BTreeMap<(usize, usize), BigRational> {
    m.entries()
        .map(|(key, v)| (key, BigRational::from_integer(BigInt::from(v))))
        .collect()
}
