//! Γ0(N) machinery.
//!
//! - Indices, cusp counts, cusp representatives and an explicit cusp
//!   equivalence test (Cremona's criterion).
//! - Atkin–Lehner matrices W_e for Hall divisors e‖N and their composition law.
//! - Genera of X0(N) from the classical index / elliptic point / cusp formula.
//! - Class numbers of imaginary quadratic orders by reduced-form enumeration,
//!   Fricke-quotient genera of prime level and the supersingular primes.
//! - Chen primes and Hasse polynomials.

mod cusps;
mod genus;

pub use cusps::{
    count_cusp_classes_by_enumeration, cusp_class, cusp_equivalent, cusp_representatives, Cusp,
    CuspClass,
};
pub use genus::{
    class_number_imag, elliptic_points, fricke_quotient_genus_prime, gamma0_genus,
    genus_zero_levels, hasse_polynomial, is_chen_prime, supersingular_primes,
};

use crate::error::{Error, Result};
use crate::exactmath::ntheory::{
    divisors, euler_totient, factorize, gcd, is_hall_divisor, mod_inverse,
};

/// Index [PSL2(Z) : Γ0(N)] = N·Π_{p|N}(1 + 1/p).
pub fn gamma0_index(n: u64) -> u64 {
    assert!(n >= 1, "level must be positive");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p + 1))
}

/// Number of cusps of Γ0(N): Σ_{d|N} φ(gcd(d, N/d)).
pub fn gamma0_cusp_count(n: u64) -> u64 {
    assert!(n >= 1, "level must be positive");
    divisors(n)
        .into_iter()
        .map(|d| euler_totient(gcd(d, n / d)))
        .sum()
}

/// A 2×2 integer matrix with positive determinant, acting projectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModularMatrix {
    /// Upper-left entry.
    pub a: i64,
    /// Upper-right entry.
    pub b: i64,
    /// Lower-left entry.
    pub c: i64,
    /// Lower-right entry.
    pub d: i64,
}

impl ModularMatrix {
    /// Builds `(a, b; c, d)`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        ModularMatrix { a, b, c, d }
    }

    /// The identity.
    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// Determinant.
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product.
    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    /// Divides every entry by `k` (which must divide all of them).
    pub fn div_scalar(&self, k: i64) -> Self {
        debug_assert!(self.a % k == 0 && self.b % k == 0 && self.c % k == 0 && self.d % k == 0);
        Self::new(self.a / k, self.b / k, self.c / k, self.d / k)
    }

    /// Image of a cusp under the Möbius action.
    pub fn act(&self, x: &Cusp) -> Cusp {
        Cusp::new(self.a * x.p + self.b * x.q, self.c * x.p + self.d * x.q)
    }

    /// Whether the matrix lies in Γ0(N) (determinant one, N | c).
    pub fn in_gamma0(&self, n: u64) -> bool {
        self.det() == 1 && self.c % n as i64 == 0
    }
}

/// The canonical Atkin–Lehner matrix W_e of level N for a Hall divisor e.
///
/// Shape `(e, b; N, d·e)` with determinant `e`, built from the extended gcd of
/// `e` and `N/e` with the smallest non-negative `b`. The cases `e = 1`
/// (identity) and `e = N` (Fricke matrix `(0, −1; N, 0)`) are special.
pub fn atkin_lehner_matrix(n: u64, e: u64) -> Result<ModularMatrix> {
    if n == 0 || !is_hall_divisor(e, n) {
        return Err(Error::InvalidArgument(format!(
            "{e} is not a Hall divisor of {n}"
        )));
    }
    if e == 1 {
        return Ok(ModularMatrix::identity());
    }
    if e == n {
        return Ok(ModularMatrix::new(0, -1, n as i64, 0));
    }
    let (ei, f) = (e as i64, (n / e) as i64);
    // Need d·e − b·f = 1 with 0 ≤ b < e: b ≡ −f⁻¹ (mod e).
    let finv = mod_inverse(f, ei).expect("Hall divisor implies coprime cofactor");
    let b = (-finv).rem_euclid(ei);
    let d = (1 + b * f) / ei;
    debug_assert_eq!(d * ei - b * f, 1);
    Ok(ModularMatrix::new(ei, b, n as i64, d * ei))
}

/// Composition of Atkin–Lehner involutions: W_e·W_f ≡ W_{ef/gcd(e,f)²}.
pub fn al_compose(n: u64, e: u64, f: u64) -> Result<u64> {
    for x in [e, f] {
        if !is_hall_divisor(x, n) {
            return Err(Error::InvalidArgument(format!(
                "{x} is not a Hall divisor of {n}"
            )));
        }
    }
    let g = gcd(e, f);
    Ok(e / g * (f / g))
}

/// Whether a matrix of determinant e is in the Atkin–Lehner coset of W_e at level N.
pub fn is_atkin_lehner(n: u64, e: u64, m: &ModularMatrix) -> bool {
    let (ei, ni) = (e as i64, n as i64);
    m.det() == ei && m.a % ei == 0 && m.d % ei == 0 && m.c % ni == 0
}
