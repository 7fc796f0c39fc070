//! Sparse multivariate polynomials with cyclotomic coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so the
//! representation is canonical: zero coefficients are never stored and
//! iteration order is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::matrix::ExactMatrix;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// A polynomial in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `c`.
    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Cyclotomic::one())
    }

    /// A single term `c·x^e`.
    pub fn monomial(e: Monomial, c: Cyclotomic) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether there are no terms (same as [`Self::is_zero`]).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: &[u32]) -> Cyclotomic {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Adds `c·x^e` in place.
    pub fn add_term(&mut self, e: Monomial, c: Cyclotomic) {
        assert_eq!(e.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Non-negative power.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Cyclotomic::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Linear change of variables x_j ↦ Σ_i m_{ij}·x_i, i.e. the action of
    /// a matrix on the coordinate functions: column `j` gives the image of `x_j`.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> Self {
        assert_eq!(m.dim(), self.nvars);
        let images: Vec<MultiPoly> = (0..self.nvars)
            .map(|j| {
                let mut p = Self::zero(self.nvars);
                for i in 0..self.nvars {
                    let mut e = vec![0; self.nvars];
                    e[i] = 1;
                    p.add_term(e, m.get(i, j).clone());
                }
                p
            })
            .collect();
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[j].pow(k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Whether every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// lexicographically descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{k}")
                        }
                    })
                    .collect();
                format!(
                    "({c})*{}",
                    if mono.is_empty() {
                        "1".to_string()
                    } else {
                        mono.join("*")
                    }
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
