//! Conway–Norton symbols and the groups they name.
//!
//! - [`parse_norton`] reads the symbol grammar into a [`NortonSymbol`].
//! - [`resolve_group`] produces a [`MoonshineGroup`]: the level M = n/h of
//!   the conjugated frame and the Atkin–Lehner subgroup E (closed under
//!   composition).
//! - [`cusp_number`] counts cusps and [`area_invariant_d`] evaluates the
//!   area invariant D = 2·h·[PSL2(Z):Γ0(M)]/|E|.
//! - [`reconcile_bare_symbol`] decides a bare `n|h` against target values.
//!
//! All cusp work happens in the conjugated frame at level M. For h = 1 the
//! cusp number is the number of orbits of Γ0(M)-cusps under E. For h > 1 the
//! group Γ0(n|h) is the kernel of a character λ: Γ0(M)·E → Z/h, and each
//! orbit splits into h/|⟨λ(P)⟩| cusps, where P generates the orbit's
//! stabiliser (see [`lambda`]).

pub mod lambda;
mod symbol;

pub use symbol::{parse_norton, Adjoined, NortonSymbol};

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exactmath::ntheory::{gcd, hall_divisors};
use crate::modgroup::{
    al_compose, atkin_lehner_matrix, cusp_class, cusp_representatives, gamma0_index,
};

/// A resolved group between Γ0(n|h) and its normaliser, in the conjugated frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoonshineGroup {
    /// Level n of the symbol.
    pub n: u64,
    /// The divisor h.
    pub h: u64,
    /// M = n/h.
    pub m: u64,
    /// The Atkin–Lehner subgroup E ⊆ Hall(M), ascending, containing 1.
    pub e: Vec<u64>,
    /// Notes produced during resolution (e.g. a defaulted bare symbol).
    pub warnings: Vec<String>,
}

/// Closure of a set of Hall divisors of `m` under [`al_compose`], ascending.
pub fn al_closure(m: u64, gens: &[u64]) -> Result<Vec<u64>> {
    let mut set: BTreeSet<u64> = BTreeSet::from([1]);
    set.extend(gens.iter().copied());
    loop {
        let items: Vec<u64> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                if set.insert(al_compose(m, a, b)?) {
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(set.into_iter().collect());
        }
    }
}

/// Resolves a symbol into its group. A bare `n|h` defaults to `n|h+` with a warning.
pub fn resolve_group(sym: &NortonSymbol) -> Result<MoonshineGroup> {
    let m = sym.m();
    let mut warnings = Vec::new();
    let e = match &sym.adjoined {
        Adjoined::All => hall_divisors(m),
        Adjoined::None => vec![1],
        Adjoined::Explicit(es) => al_closure(m, es)?,
        Adjoined::Ambiguous => {
            warnings.push(format!("bare symbol {} read as {}+", sym.raw, sym));
            hall_divisors(m)
        }
    };
    Ok(MoonshineGroup {
        n: sym.n,
        h: sym.h,
        m,
        e,
        warnings,
    })
}

/// Orbits of the Γ0(M)-cusp representatives under the involutions in E.
pub fn cusp_orbits(m: u64, e: &[u64]) -> Result<Vec<Vec<crate::modgroup::Cusp>>> {
    let reps = cusp_representatives(m);
    let index: HashMap<_, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, c)| (cusp_class(m, c), i))
        .collect();
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for &ei in e {
        let w = atkin_lehner_matrix(m, ei)?;
        for (i, c) in reps.iter().enumerate() {
            let j = index[&cusp_class(m, &w.act(c))];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut orbits: Vec<Vec<crate::modgroup::Cusp>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, c) in reps.iter().enumerate() {
        let r = find(&mut parent, i);
        let k = *slot.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[k].push(*c);
    }
    Ok(orbits)
}

/// Cusp number C of the group.
pub fn cusp_number(g: &MoonshineGroup) -> Result<u64> {
    let orbits = cusp_orbits(g.m, &g.e)?;
    if g.h == 1 {
        return Ok(orbits.len() as u64);
    }
    let mut total = 0;
    for orbit in &orbits {
        let mut split = None;
        for c in orbit {
            let p = lambda::stabilizer_generator(g.m, &g.e, c.p, c.q)?;
            let l = lambda::lambda(g.m, g.h, p.e, &p.matrix)?;
            let s = gcd(l, g.h);
            match split {
                None => split = Some(s),
                Some(prev) if prev != s => {
                    return Err(Error::Arithmetic(format!(
                        "inconsistent cusp splitting in orbit of {} for level {}|{}",
                        c, g.n, g.h
                    )))
                }
                _ => {}
            }
        }
        total += split.expect("orbits are non-empty");
    }
    Ok(total)
}

/// Area invariant D = 2·h·[PSL2(Z):Γ0(M)]/|E|.
pub fn area_invariant_d(g: &MoonshineGroup) -> Result<u64> {
    let num = 2 * g.h * gamma0_index(g.m);
    let den = g.e.len() as u64;
    if num % den != 0 {
        return Err(Error::Arithmetic(format!(
            "non-integral area invariant for {}|{}",
            g.n, g.h
        )));
    }
    Ok(num / den)
}

/// Cusp number and area invariant of a symbol (bare symbols default to `+`).
pub fn cusp_and_area(sym: &NortonSymbol) -> Result<(u64, u64)> {
    let g = resolve_group(sym)?;
    Ok((cusp_number(&g)?, area_invariant_d(&g)?))
}

/// Outcome of deciding a bare `n|h` against target values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BareResolution {
    /// (C, D) under the `+` reading.
    pub plus: (u64, u64),
    /// (C, D) under the `−` reading.
    pub minus: (u64, u64),
    /// The reading that matches the targets: `Some(true)` for `+`,
    /// `Some(false)` for `−`, `None` when neither matches. When both match
    /// `+` is preferred.
    pub matches: Option<bool>,
}

/// Evaluates both readings of a bare symbol and reports which matches `(c, d)`.
pub fn reconcile_bare_symbol(sym: &NortonSymbol, c: u64, d: u64) -> Result<BareResolution> {
    let plus = cusp_and_area(&sym.with_sign(true))?;
    let minus = cusp_and_area(&sym.with_sign(false))?;
    let matches = if plus == (c, d) {
        Some(true)
    } else if minus == (c, d) {
        Some(false)
    } else {
        None
    };
    Ok(BareResolution {
        plus,
        minus,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(s: &str) -> (u64, u64) {
        cusp_and_area(&parse_norton(s).unwrap()).unwrap()
    }

    #[test]
    fn resolve_examples() {
        let g = resolve_group(&parse_norton("2+").unwrap()).unwrap();
        assert_eq!((g.m, g.e.clone()), (2, vec![1, 2]));
        let g = resolve_group(&parse_norton("30+6,10,15").unwrap()).unwrap();
        assert_eq!((g.m, g.e.clone()), (30, vec![1, 6, 10, 15]));
        let g = resolve_group(&parse_norton("3|3").unwrap()).unwrap();
        assert_eq!((g.m, g.e.clone()), (1, vec![1]));
        assert_eq!(g.warnings.len(), 1);
    }

    #[test]
    fn cusp_number_examples() {
        assert_eq!(cd("2+").0, 1);
        assert_eq!(cd("4-").0, 3);
        assert_eq!(cd("18-").0, 8);
    }

    #[test]
    fn area_examples() {
        assert_eq!(cd("1").1, 2);
        assert_eq!(cd("12-").1, 48);
        assert_eq!(cd("30+6,10,15").1, 36);
        assert_eq!(cd("2-").1, 6);
        assert_eq!(cd("4|2-").1, 12);
    }

    #[test]
    fn bare_symbol_examples() {
        let r = reconcile_bare_symbol(&parse_norton("8|4").unwrap(), 1, 12).unwrap();
        assert_eq!((r.plus, r.minus, r.matches), ((1, 12), (2, 24), Some(true)));
        let r = reconcile_bare_symbol(&parse_norton("12|6").unwrap(), 2, 36).unwrap();
        assert_eq!((r.minus, r.matches), ((2, 36), Some(false)));
        let r = reconcile_bare_symbol(&parse_norton("6|3").unwrap(), 2, 18).unwrap();
        assert_eq!((r.minus, r.matches), ((2, 18), Some(false)));
    }

    #[test]
    fn shared_prime_split_example() {
        // 4|2- has two cusps although Γ0(2) has two as well: both split trivially.
        assert_eq!(cd("4|2-").0, 2);
    }
}
