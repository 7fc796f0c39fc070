//! Conway–Norton symbol grammar.
//!
//! Accepted forms (no whitespace): `n`, `n+`, `n-`, `n+e1,e2,…`, `n|h`,
//! `n|h+`, `n|h-`, `n|h+e1,…`. An empty `h` slot (`24|+8`) is normalised to
//! `h = 1` with the raw text kept.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::ntheory::is_hall_divisor;

/// Which Atkin–Lehner involutions are adjoined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Adjoined {
    /// Every Hall divisor of n/h (`+`).
    All,
    /// None (`-`, or bare `n`).
    None,
    /// An explicit list (`+e1,e2,…`), ascending and deduplicated.
    Explicit(Vec<u64>),
    /// Bare `n|h`: `+` or `−` must be decided from context.
    Ambiguous,
}

/// A parsed symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NortonSymbol {
    /// Level n.
    pub n: u64,
    /// The divisor h (h | n, h | 24).
    pub h: u64,
    /// Adjoined involutions.
    pub adjoined: Adjoined,
    /// The text that was parsed.
    pub raw: String,
}

impl NortonSymbol {
    /// Level of the conjugated frame, M = n/h.
    pub fn m(&self) -> u64 {
        self.n / self.h
    }

    /// Whether the symbol is a bare `n|h`.
    pub fn is_ambiguous(&self) -> bool {
        self.adjoined == Adjoined::Ambiguous
    }

    /// The same symbol with the ambiguity resolved to `+` or `−`.
    pub fn with_sign(&self, plus: bool) -> Self {
        let mut s = self.clone();
        if s.adjoined == Adjoined::Ambiguous {
            s.adjoined = if plus { Adjoined::All } else { Adjoined::None };
        }
        s
    }

    /// Canonical text form.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NortonSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        if self.h != 1 {
            write!(f, "|{}", self.h)?;
        }
        match &self.adjoined {
            Adjoined::All => write!(f, "+"),
            Adjoined::None if self.h == 1 && self.n == 1 => Ok(()),
            Adjoined::None => write!(f, "-"),
            Adjoined::Explicit(es) => {
                let list: Vec<String> = es.iter().map(u64::to_string).collect();
                write!(f, "+{}", list.join(","))
            }
            Adjoined::Ambiguous => {
                if self.h == 1 {
                    write!(f, "|1")
                } else {
                    Ok(())
                }
            }
        }
    }
}

fn parse_uint(s: &str, what: &str, raw: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("symbol {raw:?}: bad {what} {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("symbol {raw:?}: {what} out of range")))
}

/// Parses a symbol, enforcing h | n, h | 24 and e‖(n/h) for explicit e.
pub fn parse_norton(text: &str) -> Result<NortonSymbol> {
    let raw = text.to_string();
    if text.is_empty() || text.chars().any(char::is_whitespace) {
        return Err(Error::Parse(format!(
            "symbol {raw:?}: empty or contains whitespace"
        )));
    }
    let (head, sign, tail) = match text.find(['+', '-']) {
        Some(i) => (&text[..i], Some(&text[i..i + 1]), &text[i + 1..]),
        None => (text, None, ""),
    };
    let (n_str, h_str) = match head.split_once('|') {
        Some((a, b)) => (a, Some(b)),
        None => (head, None),
    };
    let n = parse_uint(n_str, "level", &raw)?;
    let h = match h_str {
        None | Some("") => 1,
        Some(s) => parse_uint(s, "h", &raw)?,
    };
    if n == 0 || h == 0 {
        return Err(Error::Parse(format!("symbol {raw:?}: zero level")));
    }
    if h_str == Some("") && sign.is_none() {
        return Err(Error::Parse(format!("symbol {raw:?}: empty h slot")));
    }
    if n % h != 0 {
        return Err(Error::InvalidArgument(format!(
            "symbol {raw:?}: {h} does not divide {n}"
        )));
    }
    if 24 % h != 0 {
        return Err(Error::InvalidArgument(format!(
            "symbol {raw:?}: {h} does not divide 24"
        )));
    }
    let m = n / h;
    let adjoined = match (sign, tail) {
        (None, _) if h_str.is_some_and(|s| !s.is_empty()) => Adjoined::Ambiguous,
        (None, _) => Adjoined::None,
        (Some("-"), "") => Adjoined::None,
        (Some("-"), _) => return Err(Error::Parse(format!("symbol {raw:?}: '-' takes no list"))),
        (Some(_), "") => Adjoined::All,
        (Some(_), list) => {
            let mut es = Vec::new();
            for part in list.split(',') {
                let e = parse_uint(part, "involution", &raw)?;
                if !is_hall_divisor(e, m) {
                    return Err(Error::InvalidArgument(format!(
                        "symbol {raw:?}: {e} is not a Hall divisor of {m}"
                    )));
                }
                es.push(e);
            }
            es.sort_unstable();
            es.dedup();
            es.retain(|&e| e != 1);
            if es.is_empty() {
                Adjoined::None
            } else {
                Adjoined::Explicit(es)
            }
        }
    };
    Ok(NortonSymbol {
        n,
        h,
        adjoined,
        raw,
    })
}
