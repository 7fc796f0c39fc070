//! Genera of modular curves, class numbers and the supersingular primes.

use crate::error::{Error, Result};
use crate::exactmath::ntheory::{big_omega, binomial, factorize, gcd_i, is_prime, primes_up_to};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{gamma0_cusp_count, gamma0_index};

/// Numbers (ν2, ν3) of elliptic points of order 2 and 3 on X0(N).
///
/// ν2 = 0 if 4 | N, else Π_{p|N}(1 + (−1/p)); ν3 = 0 if 9 | N, else Π_{p|N}(1 + (−3/p)).
pub fn elliptic_points(n: u64) -> (u64, u64) {
    let primes = factorize(n);
    let nu2 = if n % 4 == 0 {
        0
    } else {
        primes
            .iter()
            .map(|&(p, _)| match p {
                2 => 1,
                p if p % 4 == 1 => 2,
                _ => 0,
            })
            .product()
    };
    let nu3 = if n % 9 == 0 {
        0
    } else {
        primes
            .iter()
            .map(|&(p, _)| match p {
                3 => 1,
                p if p % 3 == 1 => 2,
                _ => 0,
            })
            .product()
    };
    (nu2, nu3)
}

/// Genus of X0(N): g = 1 + μ/12 − ν2/4 − ν3/3 − c/2.
pub fn gamma0_genus(n: u64) -> u64 {
    let mu = gamma0_index(n) as i64;
    let (nu2, nu3) = elliptic_points(n);
    let c = gamma0_cusp_count(n) as i64;
    let twelve_g = 12 + mu - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * c;
    debug_assert!(twelve_g >= 0 && twelve_g % 12 == 0);
    (twelve_g / 12) as u64
}

/// All levels N ≤ bound for which X0(N) has genus zero.
pub fn genus_zero_levels(bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&n| gamma0_genus(n) == 0).collect()
}

/// Class number h(D) of primitive positive definite binary quadratic forms of
/// discriminant D < 0, counted via reduced forms.
pub fn class_number_imag(disc: i64) -> Result<u64> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidArgument(format!(
            "{disc} is not a negative discriminant"
        )));
    }
    let d = -disc;
    let mut h = 0;
    // Reduced: |b| ≤ a ≤ c, and b ≥ 0 when |b| = a or a = c; a ≤ sqrt(|D|/3).
    let mut a = 1i64;
    while 3 * a * a <= d {
        for b in -a + 1..=a {
            let num = b * b + d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (a == c && b < 0) {
                continue;
            }
            if gcd_i(gcd_i(a, b), c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    Ok(h)
}

/// Genus of X0(p)⁺ = X0(p)/w_p for a prime p.
///
/// From the Riemann–Hurwitz relation 2 − 2g = 2(2 − 2g⁺) − f, where f is the
/// number of fixed points of the Fricke involution: f = h(−4p), plus h(−p)
/// when −p ≡ 1 (mod 4). For p = 2 the involution additionally fixes the
/// elliptic point of discriminant −4, so f = h(−8) + h(−4).
pub fn fricke_quotient_genus_prime(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let g = gamma0_genus(p) as i64;
    let pi = p as i64;
    let mut f = class_number_imag(-4 * pi)? as i64;
    if (-pi).rem_euclid(4) == 1 {
        f += class_number_imag(-pi)? as i64;
    }
    if p == 2 {
        f += class_number_imag(-4)? as i64;
    }
    let four_gplus = 2 + 2 * g - f;
    if four_gplus < 0 || four_gplus % 4 != 0 {
        return Err(Error::Arithmetic(format!(
            "non-integral Fricke quotient genus at p = {p}"
        )));
    }
    Ok((four_gplus / 4) as u64)
}

/// Primes p ≤ bound with X0(p)⁺ of genus zero.
pub fn supersingular_primes(bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| {
            fricke_quotient_genus_prime(p)
                .map(|g| g == 0)
                .unwrap_or(false)
        })
        .collect()
}

/// Whether p is a Chen prime: p prime and p + 2 prime or a product of two primes.
pub fn is_chen_prime(p: u64) -> bool {
    is_prime(p) && big_omega(p + 2) <= 2
}

/// Hasse polynomial Σ_{i ≤ m} C(m, i)² λ^i mod p with m = (p − 1)/2,
/// as residues in ascending degree.
pub fn hasse_polynomial(p: u64) -> Result<Vec<u64>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "Hasse polynomial needs an odd prime, got {p}"
        )));
    }
    let m = (p - 1) / 2;
    let pb = BigInt::from(p);
    Ok((0..=m)
        .map(|i| {
            let c = binomial(m, i);
            ((&c * &c) % &pb).to_u64().expect("residue fits")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        assert_eq!(gamma0_genus(1), 0);
        assert_eq!(gamma0_genus(25), 0);
        assert_eq!(gamma0_genus(11), 1);
        assert_eq!(gamma0_genus(37), 2);
    }

    #[test]
    fn genus_zero_examples() {
        let fifteen = vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25];
        assert_eq!(genus_zero_levels(25), fifteen);
        assert_eq!(genus_zero_levels(1), vec![1]);
        assert_eq!(genus_zero_levels(100), fifteen);
    }

    #[test]
    fn class_number_examples() {
        assert_eq!(class_number_imag(-3).unwrap(), 1);
        assert_eq!(class_number_imag(-163).unwrap(), 1);
        assert_eq!(class_number_imag(-23).unwrap(), 3);
        assert_eq!(class_number_imag(-4).unwrap(), 1);
        assert!(class_number_imag(-5).is_err());
        assert!(class_number_imag(5).is_err());
    }

    #[test]
    fn class_number_heegner() {
        let heegner = [3, 4, 7, 8, 11, 19, 43, 67, 163];
        for d in 1..=200i64 {
            let disc = -d;
            if disc.rem_euclid(4) > 1 {
                continue;
            }
            // Fundamental discriminants of class number one are exactly the Heegner ones.
            let fundamental = (disc.rem_euclid(4) == 1 && squarefree(d))
                || (disc % 4 == 0 && matches!((d / 4) % 4, 1 | 2) && squarefree(d / 4));
            if fundamental {
                assert_eq!(
                    class_number_imag(disc).unwrap() == 1,
                    heegner.contains(&d),
                    "D={disc}"
                );
            }
        }
    }

    fn squarefree(n: i64) -> bool {
        factorize(n as u64).iter().all(|&(_, e)| e == 1)
    }

    #[test]
    fn fricke_examples() {
        assert_eq!(fricke_quotient_genus_prime(2).unwrap(), 0);
        assert_eq!(fricke_quotient_genus_prime(71).unwrap(), 0);
        assert!(fricke_quotient_genus_prime(37).unwrap() > 0);
        assert!(fricke_quotient_genus_prime(15).is_err());
    }

    #[test]
    fn supersingular_examples() {
        let ss = vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71];
        assert_eq!(supersingular_primes(71), ss);
        assert_eq!(supersingular_primes(100), ss);
        assert_eq!(supersingular_primes(2), vec![2]);
    }

    #[test]
    fn chen_examples() {
        assert!(is_chen_prime(71));
        assert!(is_chen_prime(47));
        // 45 = 3²·5 has three prime factors; 9 is not prime.
        assert!(!is_chen_prime(43));
        assert!(!is_chen_prime(9));
        for p in supersingular_primes(71) {
            assert!(is_chen_prime(p), "{p}");
        }
    }

    #[test]
    fn hasse_examples() {
        assert_eq!(hasse_polynomial(3).unwrap(), vec![1, 1]);
        assert_eq!(hasse_polynomial(5).unwrap(), vec![1, 4, 1]);
        assert_eq!(hasse_polynomial(7).unwrap(), vec![1, 2, 2, 1]);
        assert!(hasse_polynomial(2).is_err());
    }
}
