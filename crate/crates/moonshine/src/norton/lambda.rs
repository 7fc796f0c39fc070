//! The eigenvalue character λ of Γ0(n|h) in the conjugated frame.
//!
//! Conjugating by F_h = diag(h, 1) turns Γ0(n|h) into a normal subgroup of
//! Γ0(M)·E (M = n/h) with cyclic quotient Z/h. The character λ is assembled
//! prime by prime over the prime powers q ‖ h and glued by the CRT:
//! - if p | M: λ_q(a, b; c, d) = −a·b + (c/M)·d (mod q);
//! - if p ∤ M (p odd): λ_q = ψ (mod q), where ψ: SL2(Z) → Z/12 is the
//!   character with ψ(T) = −1 and ψ(S) = 3.
//!
//! Atkin–Lehner elements W (determinant e) are handled by
//! (−A·B + (C/M)·D)/e for shared primes and by halving λ(W²/e) otherwise.
//! The prime 2 not dividing M is not supported (it does not occur for the
//! symbols of interest and reports an error).

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactmath::ntheory::{crt, factorize, gcd, mod_inverse};
use crate::modgroup::ModularMatrix;

/// The character ψ: SL2(Z) → Z/12 with ψ(T) = −1, ψ(S) = 3 (S = (0, −1; 1, 0)).
pub fn psi12(x: &ModularMatrix) -> i64 {
    let (mut a, mut b, mut c, mut d) = (x.a, x.b, x.c, x.d);
    let mut acc: i64 = 0;
    while c != 0 {
        // X = T^k·Y with Y = (a − kc, b − kd; c, d).
        let k = Integer::div_floor(&a, &c);
        a -= k * c;
        b -= k * d;
        acc -= k;
        // Y = S·Z with Z = (c, d; −a, −b).
        let (na, nb, nc, nd) = (c, d, -a, -b);
        a = na;
        b = nb;
        c = nc;
        d = nd;
        acc += 3;
    }
    // Now X = ±T^{±b}: (1, b; 0, 1) = T^b, and (−1, b; 0, −1) = S²·T^{−b}.
    if a == 1 {
        acc -= b;
    } else {
        acc += 6 + b;
    }
    let _ = d;
    acc.rem_euclid(12)
}

/// λ on an element of Γ0(M) (e = 1) or of the Atkin–Lehner coset W_e (determinant e).
pub fn lambda(m: u64, h: u64, e: u64, w: &ModularMatrix) -> Result<u64> {
    if h == 1 {
        return Ok(0);
    }
    let mi = m as i64;
    let ei = e as i64;
    let mut parts = Vec::new();
    for (p, k) in factorize(h) {
        let q = p.pow(k) as i64;
        let v = if m % p == 0 {
            let raw = -w.a * w.b + (w.c / mi) * w.d;
            if raw % ei != 0 {
                return Err(Error::Arithmetic(
                    "Atkin–Lehner element outside its coset".into(),
                ));
            }
            (raw / ei).rem_euclid(q)
        } else if p == 2 {
            return Err(Error::Unsupported(format!(
                "eigenvalue character for 2 ∤ M (level {m}, h = {h})"
            )));
        } else if e == 1 {
            psi12(w).rem_euclid(q)
        } else {
            let sq = w.mul(w).div_scalar(ei);
            let inv2 = mod_inverse(2, q).expect("q is odd");
            (psi12(&sq) * inv2).rem_euclid(q)
        };
        parts.push((v, q));
    }
    Ok(crt(&parts) as u64)
}

/// A parabolic generator of a cusp stabiliser, with its Atkin–Lehner type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parabolic {
    /// The Hall divisor e (a perfect square) whose coset contains the element.
    pub e: u64,
    /// The element, of determinant e.
    pub matrix: ModularMatrix,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Generator of the stabiliser of the cusp x/d in Γ0(M)·E.
///
/// Parabolic elements fixing x/d have the form
/// ±(s − kxd, kx²; −kd², s + kxd) with determinant s² = e, so only square e
/// contribute. The generator is the one with the smallest translation t = k/s.
pub fn stabilizer_generator(m: u64, e_set: &[u64], x: i64, d: i64) -> Result<Parabolic> {
    let (x, d) = if d == 0 { (1, m as i64) } else { (x, d) };
    let mi = m as i64;
    let w = (m / gcd((d * d) as u64, m)) as i64;
    let mut best: Option<(i64, i64, Parabolic)> = None;
    for &e in e_set {
        let s = isqrt(e);
        if s * s != e {
            continue;
        }
        let (si, ei) = (s as i64, e as i64);
        for k in 1..=si * w {
            let cand = ModularMatrix::new(si - k * x * d, k * x * x, -k * d * d, si + k * x * d);
            if cand.a % ei == 0 && cand.d % ei == 0 && cand.c % mi == 0 {
                let better = match &best {
                    None => true,
                    Some((bk, bs, _)) => k * bs < bk * si,
                };
                if better {
                    best = Some((k, si, Parabolic { e, matrix: cand }));
                }
                break;
            }
        }
    }
    best.map(|(_, _, p)| p).ok_or_else(|| {
        Error::Arithmetic(format!(
            "no parabolic stabiliser found for {x}/{d} at level {m}"
        ))
    })
}
