//! Enumerative geometry checks around del Pezzo surfaces and the
//! Horrocks–Mumford bundle.
//!
//! - [`minus_one_curves`] and [`root_classes`] enumerate Picard classes of
//!   the blow-up of P² in k = 9 − d points exhaustively, within an a-range
//!   proved sufficient by Cauchy–Schwarz ([`search_bound`]).
//! - [`theta_char_counts`] and [`ci_curve_genus`] give odd/even theta
//!   characteristics and genera of complete-intersection curves.
//! - [`hrr_chi_p4`] evaluates Hirzebruch–Riemann–Roch for rank-2 bundles on
//!   P⁴; [`hm_hilbert_series_check`] compares the Horrocks–Mumford generating
//!   function with its closed form.
//! - [`duval_weight_check`] tests weighted homogeneity of the E-type du Val
//!   equations.
//!
//! Classes are written D = aH − Σ bᵢEᵢ, stored as (a; b₁, …, b_k), so that
//! D² = a² − Σbᵢ² and −K·D = 3a − Σbᵢ with −K = (3; 1, …, 1).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::ntheory::binomial;
use crate::exactmath::Rational;

/// Number of tritangent planes of the Fricke octavic, recorded as a constant.
pub const FRICKE_OCTAVIC_TRITANGENTS: u64 = 2048;

/// Rank of the Horrocks–Mumford monad middle term minus the outer terms: 2·6 − 5 − 5.
pub const HM_MONAD_RANK: i64 = 2 * 6 - 5 - 5;

/// A divisor class aH − Σ bᵢEᵢ on a blow-up of P².
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PicardClass {
    /// Coefficient of the hyperplane class H.
    pub a: i64,
    /// Exceptional coefficients (D = aH − Σ bᵢEᵢ).
    pub b: Vec<i64>,
}

impl PicardClass {
    /// Self-intersection a² − Σbᵢ².
    pub fn self_intersection(&self) -> i64 {
        self.a * self.a - self.b.iter().map(|x| x * x).sum::<i64>()
    }

    /// Anticanonical degree −K·D = 3a − Σbᵢ.
    pub fn anticanonical_degree(&self) -> i64 {
        3 * self.a - self.b.iter().sum::<i64>()
    }

    /// The residual class −mK − D.
    pub fn residual(&self, m: i64) -> PicardClass {
        PicardClass {
            a: 3 * m - self.a,
            b: self.b.iter().map(|x| m - x).collect(),
        }
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(i64::to_string).collect();
        write!(f, "({}; {})", self.a, b.join(","))
    }
}

/// Which classes to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// D² = −1, −K·D = 1.
    MinusOneCurve,
    /// D² = −2, K·D = 0.
    Root,
}

impl ClassKind {
    fn targets(self) -> (i64, i64) {
        // (−K·D, −D²)
        match self {
            ClassKind::MinusOneCurve => (1, 1),
            ClassKind::Root => (0, 2),
        }
    }
}

fn check_degree(d: u32) -> Result<usize> {
    if !(1..=8).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "del Pezzo degree must be 1..=8, got {d}"
        )));
    }
    Ok(9 - d as usize)
}

/// The a-range forced by Cauchy–Schwarz: (3a − c)² ≤ k·(a² + s).
pub fn search_bound(d: u32, kind: ClassKind) -> Result<(i64, i64)> {
    let k = check_degree(d)? as i64;
    let (c, s) = kind.targets();
    let ok = |a: i64| (3 * a - c).pow(2) <= k * (a * a + s);
    // (9 − k)a² − 6ca + c² − ks ≤ 0 with 9 − k ≥ 1: the solution set is an interval.
    let (qa, qb, qc) = ((9 - k) as f64, (-6 * c) as f64, (c * c - k * s) as f64);
    let disc = (qb * qb - 4.0 * qa * qc).max(0.0).sqrt();
    let lo = ((-qb - disc) / (2.0 * qa)).floor() as i64 - 1;
    let hi = ((-qb + disc) / (2.0 * qa)).ceil() as i64 + 1;
    let members: Vec<i64> = (lo..=hi).filter(|&a| ok(a)).collect();
    match (members.first(), members.last()) {
        (Some(&l), Some(&h)) => {
            debug_assert!(!ok(l - 1) && !ok(h + 1));
            Ok((l, h))
        }
        _ => Err(Error::Arithmetic("empty search range".into())),
    }
}

/// Enumerates classes of the given kind with a in `a_range`, sorted.
pub fn enumerate_classes(d: u32, kind: ClassKind, a_range: (i64, i64)) -> Result<Vec<PicardClass>> {
    let k = check_degree(d)?;
    let (c, s) = kind.targets();
    let mut out = Vec::new();
    for a in a_range.0..=a_range.1 {
        let sq = a * a + s;
        let sum = 3 * a - c;
        let mut b = Vec::with_capacity(k);
        fill(k, sq, sum, &mut b, &mut |b| {
            out.push(PicardClass { a, b: b.to_vec() })
        });
    }
    out.sort();
    Ok(out)
}

fn fill(k: usize, sq: i64, sum: i64, b: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    let left = k - b.len();
    if left == 0 {
        if sq == 0 && sum == 0 {
            emit(b);
        }
        return;
    }
    // Cauchy–Schwarz prune on the remaining coordinates.
    if sum * sum > left as i64 * sq || sq < 0 {
        return;
    }
    let r = (sq as f64).sqrt() as i64 + 1;
    for x in -r..=r {
        if x * x <= sq {
            b.push(x);
            fill(k, sq - x * x, sum - x, b, emit);
            b.pop();
        }
    }
}

/// All (−1)-curves on the del Pezzo surface of degree `d`.
pub fn minus_one_curves(d: u32) -> Result<Vec<PicardClass>> {
    enumerate_classes(
        d,
        ClassKind::MinusOneCurve,
        search_bound(d, ClassKind::MinusOneCurve)?,
    )
}

/// All roots (D² = −2, K·D = 0) on the del Pezzo surface of degree `d`.
pub fn root_classes(d: u32) -> Result<Vec<PicardClass>> {
    enumerate_classes(d, ClassKind::Root, search_bound(d, ClassKind::Root)?)
}

/// Confirms exhaustion: widening the a-range by `extra` on each side finds nothing new,
/// and every class found lies inside the bound.
pub fn verify_exhaustive(d: u32, kind: ClassKind, extra: i64) -> Result<bool> {
    let (lo, hi) = search_bound(d, kind)?;
    let base = enumerate_classes(d, kind, (lo, hi))?;
    let wide = enumerate_classes(d, kind, (lo - extra, hi + extra))?;
    Ok(base == wide && base.iter().all(|c| (lo..=hi).contains(&c.a)))
}

/// The multiple m for which D ↦ −mK − D preserves (−1)-curves: the Geiser
/// involution (m = 1) in degree 2 and the Bertini involution (m = 2) in degree 1.
pub fn involution_multiple(d: u32) -> Result<i64> {
    match d {
        2 => Ok(1),
        1 => Ok(2),
        _ => Err(Error::InvalidArgument(format!(
            "no anticanonical involution in degree {d}"
        ))),
    }
}

/// Whether D ↦ −mK − D permutes `classes` without fixed points.
pub fn residual_pairing_is_free(classes: &[PicardClass], m: i64) -> bool {
    let set: std::collections::BTreeSet<&PicardClass> = classes.iter().collect();
    classes.iter().all(|c| {
        let r = c.residual(m);
        r != *c && set.contains(&r)
    })
}

/// Odd and even theta characteristics on a genus-g curve: 2^{g−1}(2^g ∓ 1).
pub fn theta_char_counts(g: u32) -> Result<(u128, u128)> {
    if g > 60 {
        return Err(Error::Limit(format!("genus {g} is too large")));
    }
    let four = 1u128 << (2 * g);
    let two = 1u128 << g;
    Ok(((four - two) / 2, (four + two) / 2))
}

/// Genus of a complete intersection of hypersurfaces of the given degrees in Pⁿ,
/// by adjunction: 2g − 2 = (Π dᵢ)(Σ dᵢ − n − 1).
pub fn ci_curve_genus(degrees: &[u32], n: u32) -> Result<u64> {
    if n < 2 || degrees.len() as u32 != n - 1 || degrees.iter().any(|&d| d == 0) {
        return Err(Error::InvalidArgument(format!(
            "{degrees:?} does not cut out a curve in P^{n}"
        )));
    }
    let deg: i64 = degrees.iter().map(|&d| i64::from(d)).product();
    let excess: i64 = degrees.iter().map(|&d| i64::from(d)).sum::<i64>() - i64::from(n) - 1;
    let two_g_minus_two = deg * excess;
    Ok(((two_g_minus_two + 2) / 2) as u64)
}

type Trunc = [Rational; 5];

fn tmul(a: &Trunc, b: &Trunc) -> Trunc {
    let mut out: Trunc = Default::default();
    for i in 0..5 {
        for j in 0..5 - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

fn factorial(n: u64) -> i64 {
    (1..=n as i64).product()
}

/// Todd class of P⁴, (H/(1 − e^{−H}))⁵, truncated at H⁴.
pub fn todd_p4() -> [Rational; 5] {
    // (1 − e^{−H})/H = Σ (−1)^k H^k/(k+1)!.
    let f: Trunc = std::array::from_fn(|k| {
        Rational::new(if k % 2 == 0 { 1 } else { -1 }, factorial(k as u64 + 1))
    });
    let mut inv: Trunc = Default::default();
    inv[0] = Rational::one();
    for m in 1..5 {
        let s: Rational = (1..=m).map(|j| &f[j] * &inv[m - j]).sum();
        inv[m] = -s;
    }
    let mut td = inv.clone();
    for _ in 0..4 {
        td = tmul(&td, &inv);
    }
    td
}

/// χ(F ⊗ O(n)) for a rank-2 bundle on P⁴ with Chern classes c1·H, c2·H².
pub fn hrr_chi_p4(c1: i64, c2: i64, n: i64) -> Rational {
    let (c1, c2) = (Rational::from(c1), Rational::from(c2));
    let r = |x: i64| Rational::from(x);
    // ch(F) for rank 2 from c1, c2.
    let ch: Trunc = [
        r(2),
        c1.clone(),
        (&c1 * &c1 - r(2) * &c2) / r(2),
        (&c1 * &c1 * &c1 - r(3) * &c1 * &c2) / r(6),
        (&c1 * &c1 * &c1 * &c1 - r(4) * &c1 * &c1 * &c2 + r(2) * &c2 * &c2) / r(24),
    ];
    let twist: Trunc = std::array::from_fn(|k| Rational::new(n.pow(k as u32), factorial(k as u64)));
    let total = tmul(&tmul(&ch, &twist), &todd_p4());
    total[4].clone()
}

/// The quartic n⁴/12 + 5n³/3 + 125n²/12 + 125n/6 + 2 expected for (c1, c2) = (5, 10).
pub fn hm_hilbert_polynomial(n: i64) -> Rational {
    let n = Rational::from(n);
    let n2 = &n * &n;
    &n2 * &n2 / Rational::from(12)
        + Rational::new(5, 3) * &n2 * &n
        + Rational::new(125, 12) * &n2
        + Rational::new(125, 6) * &n
        + Rational::from(2)
}

/// χ(O_{P⁴}(n)) for the split trivial rank-2 check: 2·C(n+4, 4).
pub fn trivial_rank2_chi(n: i64) -> Rational {
    if n >= -4 {
        Rational::from_int(binomial((n + 4) as u64, 4) * 2)
    } else {
        // C(n+4, 4) as a polynomial in n.
        let m = Rational::from(n);
        let p = (1..=4).fold(Rational::one(), |acc, i| acc * (&m + Rational::from(i)));
        p / Rational::from(12)
    }
}

/// Numerator of the Horrocks–Mumford closed form, (4 + 15t − 35t² + 20t³ − 2t⁵)/(1 − t)⁵.
pub const HM_NUMERATOR: [i64; 6] = [4, 15, -35, 20, 0, -2];

/// Coefficients of N(t)/(1 − t)⁵ through t^{order−1}.
pub fn expand_over_one_minus_t5(numerator: &[i64], order: usize) -> Vec<Rational> {
    (0..order)
        .map(|m| {
            // [t^m] 1/(1−t)⁵ = C(m + 4, 4).
            numerator
                .iter()
                .enumerate()
                .filter(|&(i, _)| i <= m)
                .map(|(i, &c)| Rational::from_int(binomial((m - i + 4) as u64, 4) * c))
                .sum()
        })
        .collect()
}

/// The other side: 4 + (1/12)·Σ_{n≥6}(n² − 1)(n² − 24)·t^{n−5}.
pub fn hm_sections_series(order: usize) -> Vec<Rational> {
    (0..order)
        .map(|m| {
            if m == 0 {
                Rational::from(4)
            } else {
                let n = m as i64 + 5;
                Rational::new((n * n - 1) * (n * n - 24), 12)
            }
        })
        .collect()
}

/// Compares N(t)/(1 − t)⁵ with the sections series through t^{order−1}.
pub fn hm_hilbert_series_check_with(numerator: &[i64], order: usize) -> Result<bool> {
    if order < 6 {
        return Err(Error::InvalidArgument("order must be at least 6".into()));
    }
    Ok(expand_over_one_minus_t5(numerator, order) == hm_sections_series(order))
}

/// [`hm_hilbert_series_check_with`] for the Horrocks–Mumford numerator.
pub fn hm_hilbert_series_check(order: usize) -> Result<bool> {
    hm_hilbert_series_check_with(&HM_NUMERATOR, order)
}

/// The E-type surface singularities with an equation and tabulated weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DuValLabel {
    /// x² + y³ + z⁴.
    E6,
    /// x² + y³ + yz³.
    E7,
    /// x² + y³ + z⁵.
    E8,
}

impl std::str::FromStr for DuValLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E6" => Ok(DuValLabel::E6),
            "E7" => Ok(DuValLabel::E7),
            "E8" => Ok(DuValLabel::E8),
            _ => Err(Error::Parse(format!("unknown du Val label {s:?}"))),
        }
    }
}

/// Weighted-degree evaluation of an equation under one weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCheck {
    /// Weights of (x, y, z).
    pub weights: [u32; 3],
    /// Weighted degree of each monomial, with its name.
    pub monomial_degrees: Vec<(String, u32)>,
    /// The common degree when the equation is weighted homogeneous.
    pub homogeneous_degree: Option<u32>,
}

/// Du Val report: the tabulated weights and the standard weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuValReport {
    /// Singularity type.
    pub label: DuValLabel,
    /// Equation as text.
    pub equation: String,
    /// Check under the tabulated weights.
    pub tabulated: WeightCheck,
    /// Check under the standard weights.
    pub standard: WeightCheck,
}

fn weight_check(monos: &[(&str, [u32; 3])], weights: [u32; 3]) -> WeightCheck {
    let monomial_degrees: Vec<(String, u32)> = monos
        .iter()
        .map(|(name, e)| {
            (
                name.to_string(),
                e.iter().zip(&weights).map(|(a, w)| a * w).sum(),
            )
        })
        .collect();
    let first = monomial_degrees[0].1;
    let homogeneous_degree = monomial_degrees
        .iter()
        .all(|(_, d)| *d == first)
        .then_some(first);
    WeightCheck {
        weights,
        monomial_degrees,
        homogeneous_degree,
    }
}

/// Checks the du Val equation of `label` under tabulated and standard weights.
pub fn duval_weight_check(label: DuValLabel) -> DuValReport {
    let (equation, monos, tab, std_w): (&str, Vec<(&str, [u32; 3])>, [u32; 3], [u32; 3]) =
        match label {
            DuValLabel::E6 => (
                "x^2+y^3+z^4",
                vec![("x^2", [2, 0, 0]), ("y^3", [0, 3, 0]), ("z^4", [0, 0, 4])],
                [6, 4, 3],
                [6, 4, 3],
            ),
            DuValLabel::E7 => (
                "x^2+y^3+y*z^3",
                vec![("x^2", [2, 0, 0]), ("y^3", [0, 3, 0]), ("y*z^3", [0, 1, 3])],
                [12, 8, 6],
                [9, 6, 4],
            ),
            DuValLabel::E8 => (
                "x^2+y^3+z^5",
                vec![("x^2", [2, 0, 0]), ("y^3", [0, 3, 0]), ("z^5", [0, 0, 5])],
                [30, 20, 12],
                [15, 10, 6],
            ),
        };
    DuValReport {
        label,
        equation: equation.to_string(),
        tabulated: weight_check(&monos, tab),
        standard: weight_check(&monos, std_w),
    }
}
