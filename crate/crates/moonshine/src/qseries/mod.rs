//! Exact q-expansions of the modular forms behind moonshine.
//!
//! - [`eta_series`] and [`EtaQuotientSpec`] build Dedekind eta products from
//!   the Euler product Π(1 − q^k).
//! - [`eisenstein_e4`], [`delta_series`] and [`j_series`] give E4, Δ = η²⁴ and
//!   j = E4³/Δ in three normalisations; [`j_cube_root`] gives j^{1/3}.
//! - [`theta_e8`] enumerates the E8 lattice directly and [`leech_theta`]
//!   evaluates the Leech theta series from σ11 and Ramanujan's τ. Both use
//!   the convention θ(q) = Σ q^{|x|²}, so minimal vectors of norm 2 sit at q².
//! - [`mckay_thompson_2a`] and [`mckay_thompson_3a`] are the eta-quotient
//!   hauptmoduln of the classes 2A and 3A.
//! - [`head_character_decompose`] splits a coefficient greedily into
//!   irreducible dimensions.
//!
//! A series built with `order` terms stores `order` coefficients starting at
//! its leading exponent.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{LaurentSeries, Rational};

pub use crate::exactmath::ntheory::sigma;

/// The first irreducible dimensions of the Monster.
pub const MONSTER_DIMS: [u64; 5] = [1, 196883, 21296876, 842609326, 18538750076];

/// The first irreducible dimensions of the double cover 2.B of the Baby Monster.
pub const BABY_COVER_DIMS: [u64; 4] = [1, 4371, 96255, 1139374];

/// The Euler product Π_{k≥1}(1 − q^{mk}) to `terms` coefficients (integer vector).
fn euler_product(m: usize, terms: usize) -> Vec<i64> {
    let mut c = vec![0i64; terms];
    c[0] = 1;
    let mut k = m;
    while k < terms {
        for i in (k..terms).rev() {
            c[i] -= c[i - k];
        }
        k += m;
    }
    c
}

fn ints_to_series(offset: Rational, coeffs: &[i64]) -> Result<LaurentSeries> {
    LaurentSeries::new(offset, coeffs.iter().map(|&c| Rational::from(c)).collect())
}

/// A product Π η(q^m)^a, stored as (m, a) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    /// Factors (argument multiplier m ≥ 1, exponent a).
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    /// Builds a spec from its factors.
    pub fn new(factors: &[(u32, i32)]) -> Result<Self> {
        if factors.iter().any(|&(m, _)| m == 0) {
            return Err(Error::InvalidArgument(
                "eta multiplier must be positive".into(),
            ));
        }
        Ok(EtaQuotientSpec {
            factors: factors.to_vec(),
        })
    }

    /// Leading exponent Σ m·a/24.
    pub fn offset(&self) -> Rational {
        self.factors
            .iter()
            .map(|&(m, a)| Rational::new(i64::from(m) * i64::from(a), 24))
            .sum()
    }

    /// The q-expansion with `order` coefficients.
    pub fn series(&self, order: usize) -> Result<LaurentSeries> {
        let order = order.max(1);
        let mut acc = LaurentSeries::one(order);
        for &(m, a) in &self.factors {
            let p = ints_to_series(Rational::zero(), &euler_product(m as usize, order))?;
            acc = acc.try_mul(&p.pow(i64::from(a))?)?;
        }
        acc.shift(&self.offset())
    }
}

/// η(q) = q^{1/24}·Π(1 − q^k) with `order` coefficients.
pub fn eta_series(order: usize) -> LaurentSeries {
    ints_to_series(Rational::new(1, 24), &euler_product(1, order.max(1))).expect("valid eta offset")
}

/// Δ(q) = η(q)²⁴ = q − 24q² + 252q³ − … with `order` coefficients.
pub fn delta_series(order: usize) -> LaurentSeries {
    EtaQuotientSpec {
        factors: vec![(1, 24)],
    }
    .series(order)
    .expect("valid eta quotient")
}

/// Ramanujan's τ(1..=count), read off Δ.
pub fn ramanujan_tau(count: usize) -> Vec<BigInt> {
    delta_series(count)
        .coeffs()
        .iter()
        .map(|c| c.to_integer().expect("integral"))
        .collect()
}

/// E4(q) = 1 + 240·Σ σ3(n)qⁿ with `order` coefficients.
pub fn eisenstein_e4(order: usize) -> LaurentSeries {
    let order = order.max(1);
    let coeffs = (0..order)
        .map(|n| {
            if n == 0 {
                Rational::one()
            } else {
                Rational::from_int(sigma(3, n as u64) * 240)
            }
        })
        .collect();
    LaurentSeries::new(Rational::zero(), coeffs).expect("integral offset")
}

/// Normalisation of the j-function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JVariant {
    /// E4³/Δ = q⁻¹ + 744 + 196884q + …
    Arithmetic,
    /// E4³/(1728·Δ).
    Analytic,
    /// E4³/Δ − 744, the Monster module's graded dimension.
    Monster,
}

/// The j-function in the chosen normalisation, with `order` coefficients from q⁻¹.
pub fn j_series(order: usize, variant: JVariant) -> LaurentSeries {
    let order = order.max(2);
    let e4 = eisenstein_e4(order);
    let e4_cubed = e4.pow(3).expect("cube of a series");
    let j = e4_cubed
        .try_mul(
            &delta_series(order)
                .inverse()
                .expect("Δ has leading coefficient 1"),
        )
        .expect("mul");
    match variant {
        JVariant::Arithmetic => j,
        JVariant::Analytic => j.scale(&Rational::new(1, 1728)),
        JVariant::Monster => j
            .try_sub(&LaurentSeries::constant(Rational::from(744), order))
            .expect("aligned"),
    }
}

/// j^{1/3} = q^{−1/3}(1 + 248q + 4124q² + …) with `order` coefficients.
pub fn j_cube_root(order: usize) -> Result<LaurentSeries> {
    let j = j_series(order, JVariant::Arithmetic);
    let shifted = j.shift(&Rational::one())?;
    shifted.root(3)?.shift(&Rational::new(-1, 3))
}

/// Number of E8 lattice vectors of each norm 0..order, by enumeration.
///
/// Vectors are enumerated in doubled coordinates y = 2x: all entries even or
/// all odd, with Σy ≡ 0 (mod 4); the norm is |y|²/4.
pub fn e8_norm_counts(order: usize) -> Vec<u64> {
    let order = order.max(1);
    let limit = 4 * order as i64; // |y|² < limit
    let bound = (limit as f64).sqrt() as i64 + 1;
    let mut firsts: Vec<(bool, i64)> = Vec::new();
    for odd in [false, true] {
        for y0 in -bound..=bound {
            if (y0 % 2 != 0) == odd && y0 * y0 < limit {
                firsts.push((odd, y0));
            }
        }
    }
    let partials: Vec<Vec<u64>> = firsts
        .par_iter()
        .map(|&(odd, y0)| {
            let mut counts = vec![0u64; order];
            e8_recurse(1, y0 * y0, y0, odd, limit, bound, &mut counts);
            counts
        })
        .collect();
    let mut total = vec![0u64; order];
    for p in partials {
        for (t, c) in total.iter_mut().zip(p) {
            *t += c;
        }
    }
    total
}

fn e8_recurse(
    idx: usize,
    norm: i64,
    sum: i64,
    odd: bool,
    limit: i64,
    bound: i64,
    counts: &mut [u64],
) {
    if idx == 8 {
        if sum.rem_euclid(4) == 0 {
            counts[(norm / 4) as usize] += 1;
        }
        return;
    }
    for y in -bound..=bound {
        if (y % 2 != 0) != odd {
            continue;
        }
        let nn = norm + y * y;
        if nn < limit {
            e8_recurse(idx + 1, nn, sum + y, odd, limit, bound, counts);
        }
    }
}

/// Theta series of E8 by lattice enumeration, θ(q) = Σ q^{|x|²}, with `order` coefficients.
pub fn theta_e8(order: usize) -> LaurentSeries {
    let counts: Vec<i64> = e8_norm_counts(order)
        .into_iter()
        .map(|c| c as i64)
        .collect();
    ints_to_series(Rational::zero(), &counts).expect("integral offset")
}

/// Theta series of the Leech lattice with `order` coefficients:
/// the coefficient of q^{2m} is (65520/691)(σ11(m) − τ(m)) for m ≥ 1.
///
/// Fails if a coefficient is not a non-negative integer.
pub fn leech_theta(order: usize) -> Result<LaurentSeries> {
    let order = order.max(1);
    let mmax = (order - 1) / 2;
    let tau = ramanujan_tau(mmax.max(1));
    let mut coeffs = vec![Rational::zero(); order];
    coeffs[0] = Rational::one();
    for m in 1..=mmax {
        let c = Rational::new(65520, 691) * Rational::from_int(sigma(11, m as u64) - &tau[m - 1]);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Arithmetic(format!(
                "Leech theta coefficient at q^{} is {c}",
                2 * m
            )));
        }
        coeffs[2 * m] = c;
    }
    LaurentSeries::new(Rational::zero(), coeffs)
}

fn hauptmodul_from_eta(
    p: u32,
    a: i32,
    weight: i64,
    constant: i64,
    order: usize,
) -> Result<LaurentSeries> {
    // [(η(q)/η(q^p))^a + w·(η(q^p)/η(q))^a]² − constant
    let order = order.max(2);
    let up = EtaQuotientSpec::new(&[(1, a), (p, -a)])?.series(order)?;
    let down = EtaQuotientSpec::new(&[(p, a), (1, -a)])?
        .series(order)?
        .scale(&Rational::from(weight));
    let s = up.try_add(&down)?;
    s.try_mul(&s)?
        .try_sub(&LaurentSeries::constant(Rational::from(constant), order))
}

/// McKay–Thompson series of 2A: [(η(q)/η(q²))¹² + 2⁶(η(q²)/η(q))¹²]² − 104.
pub fn mckay_thompson_2a(order: usize) -> Result<LaurentSeries> {
    hauptmodul_from_eta(2, 12, 64, 104, order)
}

/// McKay–Thompson series of 3A: [(η(q)/η(q³))⁶ + 3³(η(q³)/η(q))⁶]² − 42.
pub fn mckay_thompson_3a(order: usize) -> Result<LaurentSeries> {
    hauptmodul_from_eta(3, 6, 27, 42, order)
}

/// Greedy decomposition of `coefficient` into the dimensions `dims` (ascending),
/// taking the largest dimension first. Returns multiplicities aligned with `dims`.
pub fn head_character_decompose(coefficient: &BigInt, dims: &[u64]) -> Result<Vec<u64>> {
    if coefficient.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "cannot decompose negative {coefficient}"
        )));
    }
    let mut rest = coefficient.clone();
    let mut mult = vec![0u64; dims.len()];
    for (i, &d) in dims.iter().enumerate().rev() {
        if d == 0 {
            return Err(Error::InvalidArgument("zero dimension".into()));
        }
        let db = BigInt::from(d);
        let k = &rest / &db;
        rest -= &k * &db;
        mult[i] = u64::try_from(k).map_err(|_| Error::Limit("multiplicity exceeds u64".into()))?;
    }
    if !rest.is_zero() {
        return Err(Error::Arithmetic(format!(
            "{coefficient} has no decomposition over the given dimensions"
        )));
    }
    Ok(mult)
}

/// Integer coefficient of q^e in `s` (panics if missing or not integral).
pub fn int_coeff(s: &LaurentSeries, e: &Rational) -> BigInt {
    s.coeff(e)
        .and_then(|c| c.to_integer())
        .expect("integral coefficient within precision")
}
