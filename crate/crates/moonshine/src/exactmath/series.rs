//! Truncated Laurent series in a nome `q` with a global fractional offset.
//!
//! A [`LaurentSeries`] stores the coefficients of q^r, q^{r+1}, q^{r+2}, …
//! for an offset `r` whose denominator divides 24 (which covers q^{1/24} for
//! eta products and q^{±1/3} for cube roots). The number of stored
//! coefficients is the relative precision; every operation keeps the
//! smallest precision of its inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Default number of coefficients kept by series constructors.
pub const DEFAULT_TERMS: usize = 32;

/// A truncated Laurent series `q^offset · Σ_{i < len} c_i q^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    offset: Rational,
    coeffs: Vec<Rational>,
}

fn check_offset(r: &Rational) -> Result<()> {
    if (BigInt::from(24) % r.denom()).is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "series offset {r} must have a denominator dividing 24"
        )))
    }
}

impl LaurentSeries {
    /// Builds a series from its offset and coefficients.
    pub fn new(offset: Rational, coeffs: Vec<Rational>) -> Result<Self> {
        check_offset(&offset)?;
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "series needs at least one coefficient".into(),
            ));
        }
        Ok(LaurentSeries { offset, coeffs })
    }

    /// Builds a series with an integer offset from integer coefficients.
    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        LaurentSeries {
            offset: Rational::from(offset),
            coeffs: coeffs.iter().map(|&c| Rational::from(c)).collect(),
        }
    }

    /// The constant `c` known to `terms` coefficients.
    pub fn constant(c: Rational, terms: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); terms.max(1)];
        coeffs[0] = c;
        LaurentSeries {
            offset: Rational::zero(),
            coeffs,
        }
    }

    /// One, to `terms` coefficients.
    pub fn one(terms: usize) -> Self {
        Self::constant(Rational::one(), terms)
    }

    /// Exponent of the first stored coefficient.
    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Stored coefficients, starting at q^offset.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of stored coefficients (relative precision).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Always false: a series stores at least one coefficient.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// First exponent that is no longer known.
    pub fn precision_end(&self) -> Rational {
        &self.offset + Rational::from(self.coeffs.len())
    }

    /// Coefficient of q^e; `None` outside the known range or off the exponent lattice.
    pub fn coeff(&self, e: &Rational) -> Option<Rational> {
        let d = e - &self.offset;
        let i = d.to_integer()?;
        if i < BigInt::zero() {
            return Some(Rational::zero());
        }
        let i: usize = i.try_into().ok()?;
        self.coeffs.get(i).cloned()
    }

    /// Coefficient of q^e for an integer offset difference `e − offset = i`.
    pub fn coeff_at(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Coefficient of the integer power q^e.
    pub fn coeff_int(&self, e: i64) -> Option<Rational> {
        self.coeff(&Rational::from(e))
    }

    /// Truncates to at most `terms` coefficients.
    pub fn truncate(mut self, terms: usize) -> Self {
        self.coeffs.truncate(terms.max(1));
        self
    }

    /// Multiplies by q^s (shifts the offset).
    pub fn shift(&self, s: &Rational) -> Result<Self> {
        let offset = &self.offset + s;
        check_offset(&offset)?;
        Ok(LaurentSeries {
            offset,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Multiplies every coefficient by `r`.
    pub fn scale(&self, r: &Rational) -> Self {
        LaurentSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Substitutes q ↦ q^m.
    pub fn substitute_power(&self, m: usize) -> Result<Self> {
        assert!(m >= 1);
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        // Precision grows: everything up to the next unknown power is known.
        coeffs.resize(self.coeffs.len() * m, Rational::zero());
        LaurentSeries::new(&self.offset * Rational::from(m), coeffs)
    }

    /// Drops leading zero coefficients (keeping at least one).
    pub fn normalized(&self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None | Some(0) => self.clone(),
            Some(k) => LaurentSeries {
                offset: &self.offset + Rational::from(k),
                coeffs: self.coeffs[k..].to_vec(),
            },
        }
    }

    fn aligned(&self, other: &Self) -> Result<(Rational, Vec<Rational>, Vec<Rational>)> {
        let diff = &other.offset - &self.offset;
        let d = diff.to_integer().ok_or_else(|| {
            Error::InvalidArgument("cannot add series on different exponent lattices".into())
        })?;
        let d: i64 = d
            .try_into()
            .map_err(|_| Error::InvalidArgument("offset gap too large".into()))?;
        let (lo, lo_off, hi, shift) = if d >= 0 {
            (self, &self.offset, other, d as usize)
        } else {
            (other, &other.offset, self, (-d) as usize)
        };
        let end = lo.coeffs.len().min(hi.coeffs.len() + shift);
        let mut a = lo.coeffs[..end].to_vec();
        let mut b = vec![Rational::zero(); end];
        for (i, c) in hi.coeffs.iter().enumerate() {
            if i + shift < end {
                b[i + shift] = c.clone();
            }
        }
        if d < 0 {
            std::mem::swap(&mut a, &mut b);
        }
        Ok((lo_off.clone(), a, b))
    }

    /// Sum; offsets must differ by an integer.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (offset, a, b) = self.aligned(other)?;
        Ok(LaurentSeries {
            offset,
            coeffs: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        })
    }

    /// Difference; offsets must differ by an integer.
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let (offset, a, b) = self.aligned(other)?;
        Ok(LaurentSeries {
            offset,
            coeffs: a.iter().zip(&b).map(|(x, y)| x - y).collect(),
        })
    }

    /// Product; offsets add.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let offset = &self.offset + &other.offset;
        check_offset(&offset)?;
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, x) in self.coeffs.iter().take(n).enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().take(n - i).enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        Ok(LaurentSeries { offset, coeffs })
    }

    /// Multiplicative inverse; the leading coefficient must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Arithmetic(
                "series inverse needs a nonzero leading coefficient".into(),
            ));
        }
        let inv0 = a0.recip()?;
        let n = self.coeffs.len();
        let mut b = vec![Rational::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut s = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -(s * &inv0);
        }
        let offset = -&self.offset;
        Ok(LaurentSeries { offset, coeffs: b })
    }

    /// Integer power (negative powers invert first).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = LaurentSeries::one(self.coeffs.len());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Exact k-th root with leading coefficient 1 (see [`series_root`]).
    pub fn root(&self, k: u32) -> Result<Self> {
        series_root(self, k)
    }
}

/// The k-th root `t` of `s` with `t^k = s` to the precision of `s`.
///
/// Requires the leading coefficient of `s` to be 1 and the offset divided by
/// `k` to be a valid series offset (denominator dividing 24).
pub fn series_root(s: &LaurentSeries, k: u32) -> Result<LaurentSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("root index must be positive".into()));
    }
    if !s.coeffs[0].is_one() {
        return Err(Error::InvalidArgument(
            "series root needs leading coefficient 1".into(),
        ));
    }
    let offset = &s.offset / Rational::from(k);
    if !(BigInt::from(24) % offset.denom()).is_zero() {
        return Err(Error::InvalidArgument(format!(
            "offset {} is not divisible by {k}",
            s.offset
        )));
    }
    // g = f^α with f(0) = 1: n·g_n = Σ_{j=1}^{n} ((α+1)·j − n)·f_j·g_{n−j}.
    let alpha = Rational::new(1, k);
    let n = s.coeffs.len();
    let mut g = vec![Rational::zero(); n];
    g[0] = Rational::one();
    for m in 1..n {
        let mut acc = Rational::zero();
        for j in 1..=m {
            let f = &s.coeffs[j];
            if f.is_zero() {
                continue;
            }
            let w = (&alpha + Rational::one()) * Rational::from(j) - Rational::from(m);
            acc += w * f * &g[m - j];
        }
        g[m] = acc / Rational::from(m);
    }
    Ok(LaurentSeries { offset, coeffs: g })
}

macro_rules! series_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            /// # Panics
            /// Panics on incompatible offsets; use the `try_` form to handle that case.
            fn $m(self, rhs: &LaurentSeries) -> LaurentSeries {
                self.$f(rhs).expect("incompatible series offsets")
            }
        }
    };
}
series_op!(Add, add, try_add);
series_op!(Sub, sub, try_sub);
series_op!(Mul, mul, try_mul);

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = &self.offset + Rational::from(i);
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^({e})")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", self.precision_end())
    }
}
