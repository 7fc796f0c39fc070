//! Cusps of Γ0(N): canonical form, class invariants, representatives and equivalence.

use std::fmt;

use crate::exactmath::ntheory::{divisors, gcd, gcd_i, mod_inverse};

/// A point of Q ∪ {∞} written as `p/q` in lowest terms with `q ≥ 0`; ∞ is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cusp {
    /// Numerator.
    pub p: i64,
    /// Non-negative denominator (0 for ∞).
    pub q: i64,
}

impl Cusp {
    /// Reduces `p/q` to canonical form.
    ///
    /// # Panics
    /// Panics on `0/0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(p != 0 || q != 0, "0/0 is not a cusp");
        let g = gcd_i(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Cusp { p, q }
    }

    /// The cusp ∞.
    pub fn infinity() -> Self {
        Cusp { p: 1, q: 0 }
    }

    /// Whether this is ∞.
    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "∞")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Canonical invariant of a Γ0(N)-class of cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspClass {
    /// Level N.
    pub level: u64,
    /// d = gcd(q, N), a divisor of N.
    pub d: u64,
    /// Residue of p·(q/d) modulo gcd(d, N/d).
    pub a: u64,
}

/// The class invariant of a cusp for Γ0(N).
///
/// Two cusps are Γ0(N)-equivalent exactly when their invariants agree.
pub fn cusp_class(n: u64, x: &Cusp) -> CuspClass {
    let (p, q) = if x.is_infinity() {
        (1, n as i64)
    } else {
        (x.p, x.q)
    };
    let d = gcd(q as u64, n);
    let t = gcd(d, n / d);
    let a = if t == 1 {
        0
    } else {
        (p.rem_euclid(t as i64) * ((q as u64 / d) % t) as i64).rem_euclid(t as i64) as u64
    };
    CuspClass { level: n, d, a }
}

/// One cusp per Γ0(N)-class, ordered by denominator then residue.
pub fn cusp_representatives(n: u64) -> Vec<Cusp> {
    let mut out = Vec::new();
    for d in divisors(n) {
        let t = gcd(d, n / d);
        for x in 0..t.max(1) {
            if t > 1 && gcd(x, t) != 1 {
                continue;
            }
            let mut xx = x;
            while gcd(xx, d) != 1 {
                xx += t;
            }
            out.push(Cusp::new(xx as i64, d as i64));
        }
    }
    out
}

/// Whether some element of Γ0(N) maps `x` to `y` (Cremona's criterion).
///
/// With ∞ replaced by the equivalent cusp 1/N and `s_i` an inverse of `p_i`
/// modulo `q_i`: p1/q1 ~ p2/q2 iff s1·q2 ≡ s2·q1 (mod gcd(q1·q2, N)).
pub fn cusp_equivalent(n: u64, x: &Cusp, y: &Cusp) -> bool {
    let norm = |c: &Cusp| {
        if c.is_infinity() {
            (1i64, n as i64)
        } else {
            (c.p, c.q)
        }
    };
    let (p1, q1) = norm(x);
    let (p2, q2) = norm(y);
    let s1 = mod_inverse(p1, q1).expect("cusp is reduced");
    let s2 = mod_inverse(p2, q2).expect("cusp is reduced");
    let m = gcd((q1 as u64) * (q2 as u64), n) as i128;
    ((s1 as i128) * (q2 as i128) - (s2 as i128) * (q1 as i128)).rem_euclid(m) == 0
}

/// Number of Γ0(N)-classes among ∞ and all p/q with 0 ≤ p < q ≤ N, found by
/// pairwise [`cusp_equivalent`] tests (independent of the count formula).
pub fn count_cusp_classes_by_enumeration(n: u64) -> u64 {
    // Classes are bucketed by gcd(q, N), an invariant of the class, which
    // keeps the number of pairwise tests small.
    let mut buckets: std::collections::HashMap<u64, Vec<Cusp>> = std::collections::HashMap::new();
    let mut add = |c: Cusp| {
        let key = if c.is_infinity() {
            n
        } else {
            gcd(c.q as u64, n)
        };
        let reps = buckets.entry(key).or_default();
        if !reps.iter().any(|r| cusp_equivalent(n, r, &c)) {
            reps.push(c);
        }
    };
    add(Cusp::infinity());
    for q in 1..=n as i64 {
        for p in 0..q {
            if gcd_i(p, q) == 1 {
                add(Cusp::new(p, q));
            }
        }
    }
    buckets.values().map(|v| v.len() as u64).sum()
}
