//! Elements of cyclotomic fields Q(ζ_n).
//!
//! - Storage: a working conductor `n` and the coefficients of the power basis
//!   1, ζ, …, ζ^{φ(n)−1} modulo the cyclotomic polynomial Φ_n, so equality at a
//!   fixed conductor is coefficient equality.
//! - Mixed conductors are combined by lifting both operands to the lcm.
//! - [`Cyclotomic::canonical`] finds the smallest field containing a value,
//!   which makes equality, hashing and printing independent of the working
//!   conductor.
//! - Text form: signed sums of `c/d*E(n)^k` terms plus a bare rational, e.g.
//!   `-2*E(5)^3-1*E(5)^2`; printing then parsing reproduces the value exactly.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::ntheory::{divisors, euler_totient, gcd, lcm};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficients (low degree first) of the cyclotomic polynomial Φ_n.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &div);
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let ql = num.len() - dl + 1;
    let mut q = vec![0i64; ql];
    for i in (0..ql).rev() {
        let c = rem[i + dl - 1];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// An element of Q(ζ_n), stored in the power basis modulo Φ_n.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u64,
    c: Vec<Rational>,
}

impl Cyclotomic {
    /// The rational number `r`.
    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { n: 1, c: vec![r] }
    }

    /// The integer `k`.
    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from(k))
    }

    /// Zero.
    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// One.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The root of unity E(n)^k = exp(2πik/n).
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); n as usize];
        poly[k] = Rational::one();
        Self::from_poly(n, poly)
    }

    /// Reduces an arbitrary polynomial in ζ_n into canonical coefficients.
    pub fn from_poly(n: u64, poly: Vec<Rational>) -> Self {
        Cyclotomic {
            n,
            c: reduce(n, poly),
        }
    }

    /// Working conductor (not necessarily minimal; see [`Self::conductor`]).
    pub fn working_conductor(&self) -> u64 {
        self.n
    }

    /// Power-basis coefficients at the working conductor.
    pub fn coefficients(&self) -> &[Rational] {
        &self.c
    }

    /// Smallest conductor of a cyclotomic field containing the value.
    pub fn conductor(&self) -> u64 {
        self.canonical().n
    }

    /// Whether the value is zero.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// Whether the value is one.
    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Embeds into Q(ζ_m) for a multiple `m` of the working conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.n == 0, "cannot lift conductor {} to {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut poly = vec![Rational::zero(); m as usize];
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                poly[(j * step) % m as usize] += cj;
            }
        }
        Self::from_poly(m, poly)
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            (a.clone(), b.clone())
        } else {
            let m = lcm(a.n, b.n);
            (a.lift(m), b.lift(m))
        }
    }

    /// Applies the Galois automorphism ζ ↦ ζ^k (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        assert!(
            gcd(k.rem_euclid(n) as u64, self.n) == 1,
            "galois exponent must be a unit"
        );
        let mut poly = vec![Rational::zero(); self.n as usize];
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                poly[(j as i64 * k).rem_euclid(n) as usize] += cj;
            }
        }
        Self::from_poly(self.n, poly)
    }

    /// Complex conjugate (ζ ↦ ζ^{−1}).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Product of all Galois conjugates except the identity.
    fn conjugate_product(&self) -> Self {
        let mut acc = Cyclotomic::one().lift(self.n);
        for k in 2..self.n.max(2) {
            if gcd(k, self.n) == 1 {
                acc = &acc * &self.galois(k as i64);
            }
        }
        acc
    }

    /// Field norm from Q(ζ_n) (working conductor) down to Q.
    pub fn norm(&self) -> Rational {
        let p = self * &self.conjugate_product();
        p.as_rational()
            .expect("norm of a cyclotomic number is rational")
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()?));
        }
        let rest = self.conjugate_product();
        let norm = (self * &rest).as_rational().expect("norm is rational");
        Ok(rest.scale(&norm.recip()?))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The same value expressed over its smallest cyclotomic field.
    pub fn canonical(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(r);
        }
        for m in divisors(self.n) {
            if m == 1 || m % 4 == 2 {
                continue;
            }
            if m == self.n {
                return self.clone();
            }
            if let Some(x) = self.descend(m) {
                return x;
            }
        }
        unreachable!("a conductor ≡ 2 mod 4 always descends to its odd half")
    }

    /// Tries to express the value inside Q(ζ_m) for a divisor `m` of the working conductor.
    fn descend(&self, m: u64) -> Option<Self> {
        let dm = euler_totient(m) as usize;
        let dn = self.c.len();
        // Columns: lifts of the basis ζ_m^j into the working field.
        let cols: Vec<Vec<Rational>> = (0..dm)
            .map(|j| Cyclotomic::root_of_unity(m, j as i64).lift(self.n).c)
            .collect();
        // Augmented system rows: dn equations in dm unknowns.
        let mut rows: Vec<Vec<Rational>> = (0..dn)
            .map(|i| {
                let mut r: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                r.push(self.c[i].clone());
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..dm {
            let Some(p) = (r..dn).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].recip().ok()?;
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..dn {
                if i != r && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..=dm {
                        let t = &rows[r][j] * &f;
                        rows[i][j] -= t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if rows[r..].iter().any(|row| !row[dm].is_zero()) {
            return None;
        }
        let mut y = vec![Rational::zero(); dm];
        for (i, &col) in pivots.iter().enumerate() {
            y[col] = rows[i][dm].clone();
        }
        Some(Cyclotomic { n: m, c: y })
    }

    /// Parses the literal text form (see module docs).
    pub fn parse(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("invalid cyclotomic literal {s:?}: {why}"));
        if text.is_empty() {
            return Err(bad("empty"));
        }
        // Split into signed terms, not splitting the sign of an exponent.
        let bytes = text.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        let mut acc = Cyclotomic::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef, root) = match body.find("E(") {
                None => (body, None),
                Some(0) => ("1", Some(body)),
                Some(i) => {
                    let c = body[..i]
                        .strip_suffix('*')
                        .ok_or_else(|| bad("missing '*'"))?;
                    (c, Some(&body[i..]))
                }
            };
            if coef.starts_with(['+', '-']) {
                return Err(bad("misplaced sign"));
            }
            let mut value = Cyclotomic::from_rational(
                coef.parse::<Rational>()
                    .map_err(|_| bad("bad coefficient"))?,
            );
            if let Some(root) = root {
                let inner = root.strip_prefix("E(").ok_or_else(|| bad("bad root"))?;
                let close = inner.find(')').ok_or_else(|| bad("unclosed E("))?;
                let n: u64 = inner[..close].parse().map_err(|_| bad("bad conductor"))?;
                if n == 0 {
                    return Err(bad("zero conductor"));
                }
                let rest = &inner[close + 1..];
                let k: i64 = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(|| bad("trailing text"))?
                        .parse()
                        .map_err(|_| bad("bad exponent"))?
                };
                value = &value * &Cyclotomic::root_of_unity(n, k);
            }
            if neg {
                acc = &acc - &value;
            } else {
                acc = &acc + &value;
            }
        }
        Ok(acc)
    }
}

/// Reduces a polynomial in ζ_n modulo ζ^n − 1 and then modulo Φ_n.
fn reduce(n: u64, poly: Vec<Rational>) -> Vec<Rational> {
    let phi = euler_totient(n) as usize;
    let nn = n as usize;
    let mut folded = if poly.len() > nn {
        let mut f = vec![Rational::zero(); nn];
        for (i, c) in poly.into_iter().enumerate() {
            if !c.is_zero() {
                f[i % nn] += c;
            }
        }
        f
    } else {
        poly
    };
    if folded.len() < phi {
        folded.resize(phi, Rational::zero());
        return folded;
    }
    let cp = cyclotomic_polynomial(n);
    for i in (phi..folded.len()).rev() {
        if folded[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut folded[i]);
        let shift = i - phi;
        for (j, &pj) in cp.iter().enumerate().take(phi) {
            if pj != 0 {
                folded[shift + j] -= &c * &Rational::from(pj);
            }
        }
    }
    folded.truncate(phi);
    folded
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = Self::align(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        c.n.hash(state);
        c.c.hash(state);
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        if c.n == 1 {
            return write!(f, "{}", c.c[0]);
        }
        let mut first = true;
        let mut emit =
            |f: &mut fmt::Formatter<'_>, coef: &Rational, suffix: String| -> fmt::Result {
                if coef.is_negative() {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                first = false;
                write!(f, "{}{}", coef.abs(), suffix)
            };
        for k in (1..c.c.len()).rev() {
            if !c.c[k].is_zero() {
                emit(f, &c.c[k], format!("*E({})^{}", c.n, k))?;
            }
        }
        if !c.c[0].is_zero() {
            emit(f, &c.c[0], String::new())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n
                .to_string()
                .parse::<Rational>()
                .map(Cyclotomic::from_rational)
                .map_err(serde::de::Error::custom),
            other => Err(serde::de::Error::custom(format!(
                "expected cyclotomic literal, got {other}"
            ))),
        }
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::align(self, rhs);
        Cyclotomic {
            n: a.n,
            c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::align(self, rhs);
        Cyclotomic {
            n: a.n,
            c: a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.c[0]);
        }
        let (a, b) = Cyclotomic::align(self, rhs);
        let mut poly = vec![Rational::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_poly(a.n, poly)
    }
}

impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    /// # Panics
    /// Panics on division by zero; use [`Cyclotomic::inverse`] for a fallible form.
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inverse().expect("division by zero cyclotomic")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(&rhs.c) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(&rhs.c) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_sum_to_zero() {
        let s: Cyclotomic = (0..5).map(|k| e(5, k)).sum();
        assert!(s.is_zero());
        assert_eq!(e(4, 1) * e(4, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn literal_round_trip() {
        let x: Cyclotomic = "-2*E(5)^3-1*E(5)^2".parse().unwrap();
        assert_eq!(x.to_string(), "-2*E(5)^3-1*E(5)^2");
        let y: Cyclotomic = "1/2+1/2*E(4)".parse().unwrap();
        assert_eq!(y.to_string(), "1/2*E(4)^1+1/2");
        assert_eq!(y.to_string().parse::<Cyclotomic>().unwrap(), y);
        assert_eq!("-3/7".parse::<Cyclotomic>().unwrap().to_string(), "-3/7");
        assert_eq!(
            "E(3)^2".parse::<Cyclotomic>().unwrap().to_string(),
            "-1*E(3)^1-1"
        );
    }

    #[test]
    fn literal_rejects_garbage() {
        for s in ["", "E(0)", "2E(5)", "E(5)^", "1/0", "E(5)x", "+-1"] {
            assert!(s.parse::<Cyclotomic>().is_err(), "{s}");
        }
    }

    #[test]
    fn mixed_conductors_descend() {
        // E(20)^5 = E(4)
        assert_eq!(e(20, 5).conductor(), 4);
        // E(3)·E(5)^0 lifted to 15 then back.
        assert_eq!(e(3, 1).lift(15).conductor(), 3);
        // sqrt(5) lives in Q(ζ5)
        let r5 = e(5, 1) + e(5, 4) - e(5, 2) - e(5, 3);
        assert_eq!(&r5 * &r5, Cyclotomic::from_int(5));
        // E(6) = -E(3)^2
        assert_eq!(e(6, 1), -e(3, 2));
        assert_eq!(e(6, 1).conductor(), 3);
        assert_eq!(e(8, 1) * e(8, 1), e(4, 1));
    }

    #[test]
    fn inverse_and_norm() {
        let x: Cyclotomic = "1+2*E(7)^3".parse().unwrap();
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(Cyclotomic::zero().inverse().is_err());
        assert_eq!(e(5, 1).norm(), Rational::one());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn hash_is_conductor_independent() {
        use std::collections::HashSet;
        let mut s = HashSet::new();
        s.insert(e(4, 1));
        assert!(s.contains(&e(20, 5)));
        assert!(s.contains(&e(4, 1).lift(12)));
    }
}
