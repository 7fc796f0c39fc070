//! Elementary number theory on machine integers.
//!
//! All helpers work on `u64`/`i64`/`i128` values; the sizes occurring in this
//! crate (levels up to a few thousand, orders of small groups) never come
//! close to overflowing.

use num_bigint::BigInt;
use num_integer::Integer;

/// Greatest common divisor of two unsigned integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Greatest common divisor of two signed integers (non-negative result).
pub fn gcd_i(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Least common multiple.
pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Extended gcd: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Inverse of `a` modulo `m > 0`, if it exists (result in `0..m`).
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// Prime factorization as ascending `(prime, exponent)` pairs; `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Primes up to and including `bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&p| is_prime(p)).collect()
}

/// All positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient φ(m) = m·Π_{p|m}(1 − 1/p).
pub fn euler_totient(m: u64) -> u64 {
    assert!(m >= 1, "euler_totient requires m ≥ 1");
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Hall divisors of `n`: the divisors `e` with gcd(e, n/e) = 1, ascending.
pub fn hall_divisors(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|&e| gcd(e, n / e) == 1)
        .collect()
}

/// Whether `e` is a Hall divisor of `n` (written e‖n).
pub fn is_hall_divisor(e: u64, n: u64) -> bool {
    e >= 1 && n % e == 0 && gcd(e, n / e) == 1
}

/// Divisor power sum σ_k(n) = Σ_{d|n} d^k.
pub fn sigma(k: u32, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

/// Moduli `h ≤ bound` for which every unit squares to one modulo `h`.
pub fn unit_square_moduli(bound: u64) -> Vec<u64> {
    (1..=bound)
        .filter(|&h| {
            (0..h)
                .filter(|&x| gcd(x, h) == 1)
                .all(|x| (x * x) % h == 1 % h)
        })
        .collect()
}

/// Number of prime factors counted with multiplicity.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).into_iter().map(|(_, e)| e).sum()
}

/// Chinese remainder theorem for pairwise coprime moduli: returns the unique
/// residue modulo the product.
pub fn crt(residues: &[(i64, i64)]) -> i64 {
    let mut x = 0i128;
    let mut m = 1i128;
    for &(r, q) in residues {
        let q = q as i128;
        let r = (r as i128).rem_euclid(q);
        // Solve x + m·t ≡ r (mod q).
        let inv =
            mod_inverse((m % q) as i64, q as i64).expect("crt moduli must be coprime") as i128;
        let t = ((r - x).rem_euclid(q) * inv).rem_euclid(q);
        x += m * t;
        m *= q;
        x = x.rem_euclid(m);
    }
    x as i64
}

/// Binomial coefficient as a big integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(1), 1);
        assert_eq!(euler_totient(12), 4);
        assert_eq!(euler_totient(5), 4);
    }

    #[test]
    fn totient_examples_match_residue_count() {
        for m in [1u64, 5, 12] {
            let count = (0..m).filter(|&x| gcd(x, m) == 1).count() as u64;
            assert_eq!(euler_totient(m), count);
        }
    }

    #[test]
    fn hall_divisor_examples() {
        assert_eq!(hall_divisors(1), vec![1]);
        assert_eq!(hall_divisors(12), vec![1, 3, 4, 12]);
        assert_eq!(hall_divisors(30), vec![1, 2, 3, 5, 6, 10, 15, 30]);
    }

    #[test]
    fn unit_square_examples() {
        assert_eq!(unit_square_moduli(1), vec![1]);
        assert_eq!(unit_square_moduli(24), vec![1, 2, 3, 4, 6, 8, 12, 24]);
        assert_eq!(unit_square_moduli(100), divisors(24));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1, 240), BigInt::from(744));
        assert_eq!(sigma(3, 1), BigInt::from(1));
        assert_eq!(sigma(11, 2), BigInt::from(2049));
    }

    #[test]
    fn crt_combines() {
        assert_eq!(crt(&[(2, 3), (3, 5), (2, 7)]), 23);
        assert_eq!(crt(&[]), 0);
    }

    #[test]
    fn factor_and_divisors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(big_omega(49), 2);
        assert_eq!(binomial(8, 4), BigInt::from(70));
    }
}
