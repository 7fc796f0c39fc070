//! Compact exact matrices over Z[ζ_n]·(1/D) for group enumeration.
//!
//! A [`FastMatrix`] stores, for every entry, the integer power-basis
//! coefficients modulo Φ_n, together with one positive common denominator.
//! Numerators and denominator are kept coprime, so the representation is
//! canonical and can be hashed directly. Products are accumulated in `i128`
//! and checked for overflow.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactmath::cyclotomic::cyclotomic_polynomial;
use crate::exactmath::ntheory::{euler_totient, lcm};
use crate::exactmath::{Cyclotomic, ExactMatrix, Rational};

/// The field context shared by all matrices of a group: conductor and Φ_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    /// Conductor n.
    pub n: u64,
    /// Degree φ(n).
    pub phi: usize,
    poly: Arc<Vec<i64>>,
}

impl FieldContext {
    /// Context for Q(ζ_n).
    pub fn new(n: u64) -> Self {
        FieldContext {
            n,
            phi: euler_totient(n) as usize,
            poly: cyclotomic_polynomial(n),
        }
    }

    /// The smallest context containing every entry of `mats`.
    pub fn for_matrices<'a>(mats: impl IntoIterator<Item = &'a ExactMatrix>) -> Self {
        let mut n = 1;
        for m in mats {
            for row in m.rows() {
                for e in row {
                    n = lcm(n, e.working_conductor());
                }
            }
        }
        Self::new(n)
    }

    /// Reduces a polynomial of degree < 2φ − 1 modulo Φ_n in place.
    fn reduce(&self, buf: &mut [i128]) -> Result<()> {
        let phi = self.phi;
        for i in (phi..buf.len()).rev() {
            let c = buf[i];
            if c != 0 {
                buf[i] = 0;
                for (j, &pj) in self.poly.iter().take(phi).enumerate() {
                    let t = c.checked_mul(i128::from(pj)).ok_or_else(overflow)?;
                    buf[i - phi + j] = buf[i - phi + j].checked_sub(t).ok_or_else(overflow)?;
                }
            }
        }
        Ok(())
    }
}

fn overflow() -> Error {
    Error::Limit("matrix entry overflow during group enumeration".into())
}

/// A square matrix with entries (1/den)·Σ num_k ζ^k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FastMatrix {
    dim: usize,
    num: Vec<i64>,
    den: i64,
}

impl FastMatrix {
    /// The identity of size `dim`.
    pub fn identity(ctx: &FieldContext, dim: usize) -> Self {
        let mut num = vec![0; dim * dim * ctx.phi];
        for i in 0..dim {
            num[(i * dim + i) * ctx.phi] = 1;
        }
        FastMatrix { dim, num, den: 1 }
    }

    /// Converts an exact matrix whose entries lie in Q(ζ_n).
    pub fn from_exact(ctx: &FieldContext, m: &ExactMatrix) -> Result<Self> {
        let dim = m.dim();
        let mut coeffs: Vec<Rational> = Vec::with_capacity(dim * dim * ctx.phi);
        for row in m.rows() {
            for e in row {
                if ctx.n % e.working_conductor() != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "entry {e} is not in Q(ζ_{})",
                        ctx.n
                    )));
                }
                coeffs.extend(e.lift(ctx.n).coefficients().iter().cloned());
            }
        }
        let den = coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let mut num = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            let v = c.numer() * (&den / c.denom());
            num.push(v.to_i64().ok_or_else(overflow)?);
        }
        let den = den.to_i64().ok_or_else(overflow)?;
        Ok(FastMatrix { dim, num, den })
    }

    /// Converts back to an [`ExactMatrix`].
    pub fn to_exact(&self, ctx: &FieldContext) -> ExactMatrix {
        let phi = ctx.phi;
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let base = (i * self.dim + j) * phi;
                        let poly = self.num[base..base + phi]
                            .iter()
                            .map(|&c| Rational::new(c, self.den))
                            .collect();
                        Cyclotomic::from_poly(ctx.n, poly)
                    })
                    .collect()
            })
            .collect();
        ExactMatrix::from_rows(rows).expect("square by construction")
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self, ctx: &FieldContext) -> bool {
        *self == Self::identity(ctx, self.dim)
    }

    /// Whether the matrix is a scalar multiple of the identity.
    pub fn is_scalar(&self, ctx: &FieldContext) -> bool {
        let phi = ctx.phi;
        let d = self.dim;
        let first = &self.num[0..phi];
        (0..d).all(|i| {
            (0..d).all(|j| {
                let base = (i * d + j) * phi;
                let e = &self.num[base..base + phi];
                if i == j {
                    e == first
                } else {
                    e.iter().all(|&c| c == 0)
                }
            })
        })
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Self, ctx: &FieldContext) -> Result<Self> {
        let d = self.dim;
        let phi = ctx.phi;
        let mut out = vec![0i64; d * d * phi];
        let mut buf = vec![0i128; 2 * phi];
        for i in 0..d {
            for j in 0..d {
                buf.iter_mut().for_each(|b| *b = 0);
                for k in 0..d {
                    let a = &self.num[(i * d + k) * phi..(i * d + k + 1) * phi];
                    let b = &other.num[(k * d + j) * phi..(k * d + j + 1) * phi];
                    if a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0) {
                        continue;
                    }
                    for (s, &x) in a.iter().enumerate() {
                        if x == 0 {
                            continue;
                        }
                        for (t, &y) in b.iter().enumerate() {
                            let p = i128::from(x) * i128::from(y);
                            buf[s + t] = buf[s + t].checked_add(p).ok_or_else(overflow)?;
                        }
                    }
                }
                ctx.reduce(&mut buf)?;
                let base = (i * d + j) * phi;
                for s in 0..phi {
                    out[base + s] = i64::try_from(buf[s]).map_err(|_| overflow())?;
                }
            }
        }
        let den = self.den.checked_mul(other.den).ok_or_else(overflow)?;
        Ok(Self::normalized(d, out, den))
    }

    fn normalized(dim: usize, mut num: Vec<i64>, mut den: i64) -> Self {
        let mut g = den.abs();
        for &c in &num {
            if g == 1 {
                break;
            }
            g = g.gcd(&c);
        }
        if den < 0 {
            g = -g;
        }
        if g != 1 && g != 0 {
            num.iter_mut().for_each(|c| *c /= g);
            den /= g;
        }
        FastMatrix { dim, num, den }
    }

    /// Multiplicative order (identity power), up to `cap`.
    pub fn order(&self, ctx: &FieldContext, cap: u64) -> Result<u64> {
        let id = Self::identity(ctx, self.dim);
        let mut p = self.clone();
        for k in 1..=cap {
            if p == id {
                return Ok(k);
            }
            p = p.mul(self, ctx)?;
        }
        Err(Error::Limit(format!("element order exceeds {cap}")))
    }

    /// Non-negative power.
    pub fn pow(&self, e: u64, ctx: &FieldContext) -> Result<Self> {
        let mut acc = Self::identity(ctx, self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, ctx)?;
            }
        }
        Ok(acc)
    }

    /// For a monomial matrix, the row of the unique nonzero entry in each column.
    pub fn monomial_pattern(&self, ctx: &FieldContext) -> Option<Vec<usize>> {
        let d = self.dim;
        let phi = ctx.phi;
        let mut perm = Vec::with_capacity(d);
        for j in 0..d {
            let rows: Vec<usize> = (0..d)
                .filter(|&i| {
                    let base = (i * d + j) * phi;
                    self.num[base..base + phi].iter().any(|&c| c != 0)
                })
                .collect();
            if rows.len() != 1 {
                return None;
            }
            perm.push(rows[0]);
        }
        Some(perm)
    }
}
