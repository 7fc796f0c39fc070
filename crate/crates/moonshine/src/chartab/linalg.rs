//! Exact linear solving over cyclotomic fields.

use crate::error::{Error, Result};
use crate::exactmath::Cyclotomic;

/// Solves `A·x = b` exactly, where `a` lists the equations (rows) over the unknowns.
///
/// The system may be overdetermined but must be consistent and have a unique solution.
pub fn solve_exact(a: &[Vec<Cyclotomic>], b: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(
            "right-hand side length mismatch".into(),
        ));
    }
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Cyclotomic>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    if m.iter().any(|r| r.len() != n + 1) {
        return Err(Error::InvalidArgument("ragged coefficient matrix".into()));
    }
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Arithmetic(format!(
                "linear system is underdetermined (column {col})"
            )));
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].inverse()?;
        for x in m[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow).skip(col) {
                    *x -= &(&f * p);
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::Arithmetic("linear system is inconsistent".into()));
    }
    Ok(m[..n].iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(k)
    }

    #[test]
    fn solves_square_and_overdetermined() {
        let a = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        let x = solve_exact(&a, &[c(3), c(1), c(4)]).unwrap();
        assert_eq!(x, vec![c(2), c(1)]);
        assert!(solve_exact(&a, &[c(3), c(1), c(5)]).is_err());
        assert!(solve_exact(&[vec![c(1), c(1)]], &[c(1)]).is_err());
    }
}
