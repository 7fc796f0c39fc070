//! Exact-arithmetic engine for moonshine groups and their companions.
//!
//! The crate is organised as a stack of small modules:
//! - [`exactmath`]: rationals, cyclotomic numbers, truncated Laurent series,
//!   exact matrices and polynomials, elementary number theory.
//! - [`modgroup`]: Γ0(N) indices, cusps, Atkin–Lehner matrices, genera,
//!   class numbers and supersingular primes.
//! - [`norton`]: Conway–Norton symbols, their groups, cusp numbers and
//!   area invariants.
//! - [`qseries`]: eta quotients, Eisenstein series, the j-function,
//!   McKay–Thompson series and lattice theta series.
//! - [`chartab`]: character tables, McKay quivers, finite matrix groups,
//!   Molien series and Reynolds invariants.
//! - [`geometry`]: del Pezzo Picard lattices, theta characteristics,
//!   complete-intersection genera and Riemann–Roch on P⁴.
//! - [`moonshine_data`]: shipped class tables and every cusp-sum statistic
//!   derived from them.
//! - [`cli`]: the command-line front end and the reconciliation report.

pub mod chartab;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod geometry;
pub mod modgroup;
pub mod moonshine_data;
pub mod norton;
pub mod qseries;

pub use error::{Error, Result};
