//! Invariant theory of enumerated matrix groups.
//!
//! - [`molien_series`] sums 1/det(I − z·g) over conjugacy classes.
//! - [`molien_closed_form_check`] compares a candidate rational function and
//!   reports numerator palindromicity.
//! - [`reynolds_invariants`] averages monomials over a monomial group and
//!   row-reduces the images to a basis of invariants.
//! - [`verify_presentation`] evaluates relator words literally and
//!   projectively; [`binary_presentation_witness`] searches for r, s, t with
//!   r^a = s^b = t^c = rst.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::poly::{monomials_of_degree, Monomial};
use crate::exactmath::{Cyclotomic, LaurentSeries, MultiPoly, Rational};

use super::fastmat::FastMatrix;
use super::group::MatrixGroup;

/// Molien series (1/|G|)·Σ_g 1/det(I − z·g) through z^degree.
///
/// Fails if a coefficient is not a non-negative integer.
pub fn molien_series(g: &MatrixGroup, degree: usize) -> Result<LaurentSeries> {
    let terms = degree + 1;
    let n = g.dim();
    let mut total = vec![Cyclotomic::zero(); terms];
    for (ci, cls) in g.classes().iter().enumerate() {
        let cp = g.class_representative(ci).charpoly();
        // det(I − zM) = Σ_k c_{n−k} z^k for charpoly Σ c_k x^k.
        let p: Vec<Cyclotomic> = (0..=n).map(|k| cp[n - k].clone()).collect();
        let mut b = vec![Cyclotomic::zero(); terms];
        b[0] = Cyclotomic::one();
        for m in 1..terms {
            let mut s = Cyclotomic::zero();
            for k in 1..=n.min(m) {
                if !p[k].is_zero() {
                    s += &(&p[k] * &b[m - k]);
                }
            }
            b[m] = -s;
        }
        let w = Cyclotomic::from_int(cls.size as i64);
        for (t, bm) in total.iter_mut().zip(&b) {
            *t += &(&w * bm);
        }
    }
    let inv = Rational::new(1, g.order() as i64);
    let mut coeffs = Vec::with_capacity(terms);
    for (k, c) in total.iter().enumerate() {
        let r = c.as_rational().map(|r| r * &inv).ok_or_else(|| {
            Error::Arithmetic(format!("Molien coefficient at z^{k} is irrational"))
        })?;
        if !r.is_integer() || r.is_negative() {
            return Err(Error::Arithmetic(format!(
                "Molien coefficient at z^{k} is {r}"
            )));
        }
        coeffs.push(r);
    }
    LaurentSeries::new(Rational::zero(), coeffs)
}

/// Expands N(z)/Π_k(1 − z^k) through z^degree (numerator dense, low degree first).
pub fn expand_rational_function(
    numerator: &[i64],
    denominator_exponents: &[u32],
    degree: usize,
) -> Vec<Rational> {
    let terms = degree + 1;
    let mut s: Vec<Rational> = (0..terms)
        .map(|i| Rational::from(numerator.get(i).copied().unwrap_or(0)))
        .collect();
    for &k in denominator_exponents {
        // Multiply by 1/(1 − z^k): prefix sums with stride k.
        let k = k as usize;
        for i in k..terms {
            let prev = s[i - k].clone();
            s[i] += prev;
        }
    }
    s
}

/// Result of comparing a candidate closed form with the Molien series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    /// Series agree through the requested degree.
    pub matches: bool,
    /// The numerator's coefficient list reads the same reversed.
    pub palindromic: bool,
}

/// Checks N(z)/Π(1 − z^k) against the Molien series of `g` through `degree`.
pub fn molien_closed_form_check(
    g: &MatrixGroup,
    numerator: &[i64],
    denominator_exponents: &[u32],
    degree: usize,
) -> Result<ClosedFormCheck> {
    let series = molien_series(g, degree)?;
    let candidate = expand_rational_function(numerator, denominator_exponents, degree);
    Ok(ClosedFormCheck {
        matches: series.coeffs() == candidate.as_slice(),
        palindromic: is_palindromic(numerator),
    })
}

/// Whether a coefficient list (trailing zeros ignored) is a palindrome.
pub fn is_palindromic(coeffs: &[i64]) -> bool {
    let end = coeffs.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
    let c = &coeffs[..end];
    c.iter().eq(c.iter().rev())
}

/// Dense numerator z^m·f(z + 1/z)-style symmetrisation: the polynomial
/// z^m·(c_0 + Σ_{k>0} c_k (z^k + z^{−k})) from the pairs (k, c_k).
pub fn symmetrized_numerator(center: usize, half: &[(usize, i64)]) -> Vec<i64> {
    let mut out = vec![0i64; 2 * center + 1];
    for &(k, c) in half {
        assert!(k <= center, "term exponent exceeds the centre");
        if k == 0 {
            out[center] += c;
        } else {
            out[center + k] += c;
            out[center - k] += c;
        }
    }
    out
}

/// Action of a monomial matrix: x_j ↦ scale[j]·x_{perm[j]}.
struct MonomialAction {
    perm: Vec<usize>,
    scale: Vec<Cyclotomic>,
}

fn monomial_actions(g: &MatrixGroup) -> Result<Vec<MonomialAction>> {
    let ctx = g.field();
    g.fast_elements()
        .iter()
        .map(|f: &FastMatrix| {
            let perm = f.monomial_pattern(ctx).ok_or_else(|| {
                Error::Unsupported("Reynolds averaging needs a monomial group".into())
            })?;
            let m = f.to_exact(ctx);
            let scale = perm
                .iter()
                .enumerate()
                .map(|(j, &i)| m.get(i, j).clone())
                .collect();
            Ok(MonomialAction { perm, scale })
        })
        .collect()
}

fn apply_monomial(act: &MonomialAction, e: &[u32]) -> Result<(Monomial, Cyclotomic)> {
    let mut out = vec![0u32; e.len()];
    let mut c = Cyclotomic::one();
    for (j, &k) in e.iter().enumerate() {
        if k > 0 {
            out[act.perm[j]] += k;
            c *= &act.scale[j].pow(i64::from(k))?;
        }
    }
    Ok((out, c))
}

/// The six quintics fixed by the Heisenberg group of level 5, indices mod 5:
/// Σx_i⁵, Σx_i³x_{i+1}x_{i+4}, Σx_ix_{i+1}²x_{i+4}², Σx_i³x_{i+2}x_{i+3},
/// Σx_ix_{i+2}²x_{i+3}² and x_0x_1x_2x_3x_4.
pub fn heisenberg_quintics() -> Vec<MultiPoly> {
    let patterns: [&[(usize, u32)]; 5] = [
        &[(0, 5)],
        &[(0, 3), (1, 1), (4, 1)],
        &[(0, 1), (1, 2), (4, 2)],
        &[(0, 3), (2, 1), (3, 1)],
        &[(0, 1), (2, 2), (3, 2)],
    ];
    let mut out: Vec<MultiPoly> = patterns
        .iter()
        .map(|pat| {
            let mut p = MultiPoly::zero(5);
            for i in 0..5 {
                let mut e = vec![0u32; 5];
                for &(off, k) in pat.iter() {
                    e[(i + off) % 5] += k;
                }
                p.add_term(e, Cyclotomic::one());
            }
            p
        })
        .collect();
    out.push(MultiPoly::monomial(vec![1; 5], Cyclotomic::one()));
    out
}

/// Basis of the degree-`degree` invariants of a monomial group, via the Reynolds operator.
pub fn reynolds_invariants(g: &MatrixGroup, degree: u32) -> Result<Vec<MultiPoly>> {
    let acts = monomial_actions(g)?;
    let n = g.dim();
    let inv_order = Rational::new(1, g.order() as i64);
    let mut echelon = Echelon::default();
    for mono in monomials_of_degree(n, degree) {
        let mut img: BTreeMap<Monomial, Cyclotomic> = BTreeMap::new();
        for a in &acts {
            let (m, c) = apply_monomial(a, &mono)?;
            *img.entry(m).or_insert_with(Cyclotomic::zero) += &c;
        }
        img.retain(|_, c| !c.is_zero());
        for c in img.values_mut() {
            *c = c.scale(&inv_order);
        }
        echelon.insert(img)?;
    }
    Ok(echelon
        .rows
        .into_iter()
        .map(|row| {
            let mut p = MultiPoly::zero(n);
            for (m, c) in row {
                p.add_term(m, c);
            }
            p
        })
        .collect())
}

/// Whether `p` is fixed by every generator of `g`.
pub fn is_invariant(g: &MatrixGroup, p: &MultiPoly) -> bool {
    g.generators().iter().all(|m| p.substitute_linear(m) == *p)
}

/// Rank of a list of polynomials (exact elimination on their coefficients).
pub fn polynomial_rank(polys: &[MultiPoly]) -> Result<usize> {
    let mut echelon = Echelon::default();
    for p in polys {
        echelon.insert(p.terms().map(|(m, c)| (m.clone(), c.clone())).collect())?;
    }
    Ok(echelon.rows.len())
}

/// Fully reduced row-echelon basis of sparse vectors indexed by monomials.
#[derive(Default)]
struct Echelon {
    rows: Vec<BTreeMap<Monomial, Cyclotomic>>,
    pivots: Vec<Monomial>,
}

fn axpy(
    target: &mut BTreeMap<Monomial, Cyclotomic>,
    f: &Cyclotomic,
    row: &BTreeMap<Monomial, Cyclotomic>,
) {
    for (m, c) in row {
        let e = target.entry(m.clone()).or_insert_with(Cyclotomic::zero);
        *e -= &(f * c);
    }
    target.retain(|_, c| !c.is_zero());
}

impl Echelon {
    /// Adds a vector; returns whether it was independent of the current rows.
    fn insert(&mut self, mut v: BTreeMap<Monomial, Cyclotomic>) -> Result<bool> {
        v.retain(|_, c| !c.is_zero());
        for (row, piv) in self.rows.iter().zip(&self.pivots) {
            if let Some(f) = v.get(piv).cloned() {
                axpy(&mut v, &f, row);
            }
        }
        let Some((piv, lead)) = v.iter().next().map(|(m, c)| (m.clone(), c.clone())) else {
            return Ok(false);
        };
        let inv = lead.inverse()?;
        for c in v.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.iter_mut() {
            if let Some(f) = row.get(&piv).cloned() {
                axpy(row, &f, &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        Ok(true)
    }
}

/// Evaluation of one relator word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    /// The word.
    pub word: String,
    /// It evaluates to the identity matrix.
    pub identity: bool,
    /// It evaluates to a scalar matrix.
    pub scalar: bool,
}

/// Relator-by-relator presentation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    /// One entry per relator.
    pub relators: Vec<RelatorCheck>,
}

impl PresentationReport {
    /// Every relator is the identity matrix (literal convention).
    pub fn holds(&self) -> bool {
        self.relators.iter().all(|r| r.identity)
    }

    /// Every relator is scalar (projective convention).
    pub fn holds_projectively(&self) -> bool {
        self.relators.iter().all(|r| r.scalar)
    }
}

/// Evaluates relator words in `g`.
pub fn verify_presentation<S: AsRef<str>>(
    g: &MatrixGroup,
    relators: &[S],
) -> Result<PresentationReport> {
    let relators = relators
        .iter()
        .map(|w| {
            let m = g.evaluate_word(w.as_ref())?;
            Ok(RelatorCheck {
                word: w.as_ref().to_string(),
                identity: m.is_identity(),
                scalar: m.scalar_value().is_some(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentationReport { relators })
}

/// Elements r, s, t (as element indices) with r^a = s^b = t^c = rst = z, z² = 1 ≠ z,
/// generating the whole group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryWitness {
    /// Index of r = st.
    pub r: usize,
    /// Index of s.
    pub s: usize,
    /// Index of t.
    pub t: usize,
    /// Order of ⟨s, t⟩.
    pub generated_order: usize,
}

/// Searches for a witness of ⟨r, s, t | r^a = s^b = t^c = rst⟩ with (rst)² = 1 in `g`.
///
/// When `t` is given, only that element is tried for t.
pub fn binary_presentation_witness(
    g: &MatrixGroup,
    (a, b, c): (u64, u64, u64),
    fixed_t: Option<usize>,
) -> Result<Option<BinaryWitness>> {
    let ctx = g.field();
    let els = g.fast_elements();
    let dim = g.dim();
    let id = FastMatrix::identity(ctx, dim);
    let powers = |x: &FastMatrix, e: u64| x.pow(e, ctx);
    let t_candidates: Vec<usize> = match fixed_t {
        Some(t) => vec![t],
        None => (0..els.len()).collect(),
    };
    for &ti in &t_candidates {
        let z = powers(&els[ti], c)?;
        if z == id || z.mul(&z, ctx)? != id {
            continue;
        }
        for (si, s) in els.iter().enumerate() {
            if powers(s, b)? != z {
                continue;
            }
            let r = s.mul(&els[ti], ctx)?;
            // r = st, so rst = r².
            if powers(&r, a)? != z || r.mul(&r, ctx)? != z {
                continue;
            }
            let sub = MatrixGroup::from_named(
                vec![
                    ("s".into(), s.to_exact(ctx)),
                    ("t".into(), els[ti].to_exact(ctx)),
                ],
                g.order(),
            )?;
            if sub.order() == g.order() {
                let ri = g
                    .index_of(&r.to_exact(ctx))?
                    .expect("product stays in the group");
                return Ok(Some(BinaryWitness {
                    r: ri,
                    s: si,
                    t: ti,
                    generated_order: sub.order(),
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::group::enumerate_matrix_group;
    use crate::exactmath::ExactMatrix;

    fn heisenberg() -> MatrixGroup {
        let sigma = ExactMatrix::from_ints(&[
            vec![0, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap();
        let tau = ExactMatrix::diagonal((0..5).map(|k| Cyclotomic::root_of_unity(5, k)).collect());
        enumerate_matrix_group(&[sigma, tau]).unwrap()
    }

    #[test]
    fn heisenberg_molien_and_reynolds() {
        let h = heisenberg();
        let m = molien_series(&h, 10).unwrap();
        assert_eq!(m.coeff_int(5).unwrap(), Rational::from(6));
        assert_eq!(m.coeff_int(10).unwrap(), Rational::from(41));
        let num = symmetrized_numerator(10, &[(0, 21), (5, 1), (10, 1)]);
        let chk = molien_closed_form_check(&h, &num, &[5; 5], 20).unwrap();
        assert!(chk.matches && chk.palindromic);
        let mut wrong = num.clone();
        wrong[10] = 20;
        assert!(
            !molien_closed_form_check(&h, &wrong, &[5; 5], 20)
                .unwrap()
                .matches
        );
        for d in 1..=5u32 {
            let basis = reynolds_invariants(&h, d).unwrap();
            assert_eq!(
                Rational::from(basis.len()),
                m.coeff_int(i64::from(d)).unwrap()
            );
            assert!(basis.iter().all(|p| is_invariant(&h, p)));
        }
    }

    #[test]
    fn trivial_group_invariants_are_everything() {
        let g = enumerate_matrix_group(&[ExactMatrix::identity(3)]).unwrap();
        assert_eq!(reynolds_invariants(&g, 2).unwrap().len(), 6);
        let m = molien_series(&g, 3).unwrap();
        assert_eq!(m.coeff_int(3).unwrap(), Rational::from(10));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&[1, 0, 2, 0, 1, 0]));
        assert!(!is_palindromic(&[1, 2]));
        assert_eq!(
            expand_rational_function(&[1], &[1], 3),
            vec![Rational::one(); 4]
        );
    }

    #[test]
    fn relators_literal_and_projective() {
        let h = heisenberg();
        let r = verify_presentation(&h, &["g1^5", "g2^5"]).unwrap();
        assert!(r.holds());
        let r = verify_presentation(&h, &["g1*g2*g1^-1*g2^-1", "g1"]).unwrap();
        assert!(!r.holds());
        assert!(r.relators[0].scalar && !r.relators[1].scalar);
    }
}
