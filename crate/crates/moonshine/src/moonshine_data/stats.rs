//! Cusp-number statistics over the shipped tables.
//!
//! - [`cusp_sums`] folds (count, Σ C, Σ C²) over a list of [`CuspItem`]s
//!   after an optional deduplication.
//! - Dataset helpers produce the item lists: Monster rows, Baby series,
//!   the Fischer twist expansion and the Conway square-free names.
//! - [`genus_zero_sums`] works from the modular curves directly and ingests
//!   nothing.

use std::collections::{BTreeMap, BTreeSet};

use regex::Regex;
use serde::Serialize;

use super::DatasetBundle;
use crate::error::{Error, Result};
use crate::modgroup::{gamma0_cusp_count, genus_zero_levels};
use crate::norton::{cusp_and_area, parse_norton};

/// One cusp-number-carrying item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspItem {
    /// Class (or expanded class) name.
    pub name: String,
    /// Series identity used for deduplication.
    pub series: String,
    /// Cusp number.
    pub cusp: u64,
}

/// Count, Σ C and Σ C².
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CuspSums {
    /// Number of items summed.
    pub count: u64,
    /// Σ C.
    pub sum: u64,
    /// Σ C².
    pub sum_sq: u64,
}

impl CuspSums {
    fn add(&mut self, c: u64) {
        self.count += 1;
        self.sum += c;
        self.sum_sq += c * c;
    }
}

/// Deduplication policy for [`cusp_sums`]; the first item per key is kept.
#[derive(Clone, Copy)]
pub enum Dedup<'a> {
    /// Keep every item.
    None,
    /// One item per series label.
    BySeriesLabel,
    /// One item per caller-supplied key.
    Custom(&'a dyn Fn(&CuspItem) -> String),
}

/// Applies a deduplication policy, keeping first occurrences in order.
pub fn dedup_items(items: &[CuspItem], dedup: Dedup<'_>) -> Vec<CuspItem> {
    let key: Box<dyn Fn(&CuspItem) -> Option<String> + '_> = match dedup {
        Dedup::None => Box::new(|_| None),
        Dedup::BySeriesLabel => Box::new(|it| Some(it.series.clone())),
        Dedup::Custom(f) => Box::new(move |it| Some(f(it))),
    };
    let mut seen = BTreeSet::new();
    items
        .iter()
        .filter(|it| key(it).map_or(true, |k| seen.insert(k)))
        .cloned()
        .collect()
}

/// (count, Σ C, Σ C²) after deduplication.
pub fn cusp_sums(items: &[CuspItem], dedup: Dedup<'_>) -> CuspSums {
    let mut s = CuspSums::default();
    for it in dedup_items(items, dedup) {
        s.add(it.cusp);
    }
    s
}

/// Monster rows as items (series identity = class name).
pub fn monster_items(b: &DatasetBundle) -> Vec<CuspItem> {
    b.monster
        .iter()
        .map(|r| CuspItem {
            name: r.name.clone(),
            series: r.name.clone(),
            cusp: r.cusp,
        })
        .collect()
}

/// Baby rows as items.
pub fn baby_items(b: &DatasetBundle) -> Vec<CuspItem> {
    b.baby
        .iter()
        .map(|r| CuspItem {
            name: r.name.clone(),
            series: r.series.clone(),
            cusp: r.cusp,
        })
        .collect()
}

/// Frequency of each cusp number among the Monster rows.
pub fn cusp_histogram(b: &DatasetBundle) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for r in &b.monster {
        *h.entry(r.cusp).or_insert(0) += 1;
    }
    h
}

/// Σ C over all 194 classes, merged rows counted with multiplicity.
pub fn monster_full_sum(b: &DatasetBundle) -> u64 {
    b.monster.iter().map(|r| r.cusp * r.multiplicity).sum()
}

/// (number of merged rows, Σ C over those rows): what the second member of each pair adds.
pub fn monster_paired_sum(b: &DatasetBundle) -> (u64, u64) {
    b.monster
        .iter()
        .filter(|r| r.multiplicity == 2)
        .fold((0, 0), |(n, s), r| (n + 1, s + r.cusp))
}

/// Labels of Monster McKay–Thompson series: a number followed by capitals.
pub fn monstrous_label_regex() -> Regex {
    Regex::new(r"^\d+[A-Z]+$").expect("static regex")
}

/// Baby rows with a Monstrous series label, counted with repeats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonstrousSubset {
    /// Rows with a Monstrous label.
    pub count: u64,
    /// Σ C over them.
    pub sum: u64,
    /// Rows with any other label.
    pub complement: u64,
}

/// Restricts the Baby table to Monstrous labels.
pub fn baby_monstrous_subset(b: &DatasetBundle) -> MonstrousSubset {
    let re = monstrous_label_regex();
    let (count, sum) = b
        .baby
        .iter()
        .filter(|r| re.is_match(&r.series))
        .fold((0, 0), |(n, s), r| (n + 1, s + r.cusp));
    MonstrousSubset {
        count,
        sum,
        complement: b.baby.len() as u64 - count,
    }
}

/// The Fischer classes expanded, with the distinct series under the twist rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FischerExpansion {
    /// Every expanded class name, in table order.
    pub classes: Vec<String>,
    /// Rows with a single class.
    pub singlets: u64,
    /// Rows with a class triplet.
    pub triplets: u64,
    /// Distinct essential series (first occurrence per label).
    pub essentials: Vec<CuspItem>,
    /// Distinct twisted series `label·q^{k/3}` from triplet rows, deduped by (label, k).
    pub twisted: Vec<CuspItem>,
}

impl FischerExpansion {
    /// Essentials followed by twisted series.
    pub fn all_series(&self) -> Vec<CuspItem> {
        self.essentials
            .iter()
            .chain(&self.twisted)
            .cloned()
            .collect()
    }
}

/// Expands the Fischer table. Essential series are deduplicated by label; each
/// triplet row contributes the twists k = 1, 2 of its label, deduplicated by
/// (label, k). This rule is a reconstruction checked only against totals.
pub fn fischer_expand(b: &DatasetBundle) -> FischerExpansion {
    let mut classes = Vec::new();
    let (mut singlets, mut triplets) = (0, 0);
    let mut rows = Vec::new();
    let mut twist_rows = Vec::new();
    for r in &b.fischer {
        classes.extend(r.orbit.iter().cloned());
        let item = CuspItem {
            name: r.orbit[0].clone(),
            series: r.series.clone(),
            cusp: r.cusp,
        };
        if r.orbit.len() == 3 {
            triplets += 1;
            for k in 1..=2 {
                twist_rows.push(CuspItem {
                    name: format!("{}*q^{k}/3", r.orbit[0]),
                    series: format!("{}*q^{k}/3", r.series),
                    cusp: r.cusp,
                });
            }
        } else {
            singlets += 1;
        }
        rows.push(item);
    }
    FischerExpansion {
        classes,
        singlets,
        triplets,
        essentials: dedup_items(&rows, Dedup::BySeriesLabel),
        twisted: dedup_items(&twist_rows, Dedup::BySeriesLabel),
    }
}

/// Sums over the distinct essential Fischer series.
pub fn fischer_essential_sums(b: &DatasetBundle) -> CuspSums {
    cusp_sums(&fischer_expand(b).essentials, Dedup::None)
}

/// Conway square-free sums with repeats and after deduplication by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SquarefreeSums {
    /// With repeats.
    pub with_repeats: CuspSums,
    /// One per class name.
    pub deduped: CuspSums,
}

/// Looks up each name's cusp number in the Monster table.
pub fn conway_squarefree_sums(names: &[String], b: &DatasetBundle) -> Result<SquarefreeSums> {
    let items = names
        .iter()
        .map(|n| {
            let row = b
                .monster_row(n)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown Monster class {n}")))?;
            Ok(CuspItem {
                name: n.clone(),
                series: n.clone(),
                cusp: row.cusp,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquarefreeSums {
        with_repeats: cusp_sums(&items, Dedup::None),
        deduped: cusp_sums(&items, Dedup::BySeriesLabel),
    })
}

/// Tabulated cusp numbers of Γ0(N) at the 15 genus-zero levels.
pub const GAMMA0_GENUS_ZERO_CUSPS: [u64; 15] = [1, 2, 2, 3, 2, 4, 2, 4, 4, 4, 6, 2, 6, 8, 6];
/// Tabulated cusp numbers of Γ0(N)+ at the same levels.
pub const NORMALIZER_GENUS_ZERO_CUSPS: [u64; 15] = [1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 1, 3, 2, 3];

/// Genus-zero cusp statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusZeroSums {
    /// The genus-zero levels.
    pub levels: Vec<u64>,
    /// Cusp numbers of Γ0(N).
    pub gamma0_cusps: Vec<u64>,
    /// Cusp numbers of Γ0(N)+.
    pub normalizer_cusps: Vec<u64>,
    /// (Σ, Σ²) for Γ0(N).
    pub gamma0: (u64, u64),
    /// (Σ, Σ²) for Γ0(N)+.
    pub normalizer: (u64, u64),
}

fn sum_and_squares(v: &[u64]) -> (u64, u64) {
    (v.iter().sum(), v.iter().map(|c| c * c).sum())
}

/// Computes the genus-zero sums and checks the computed rows against the tabulated ones.
pub fn genus_zero_sums() -> Result<GenusZeroSums> {
    let levels = genus_zero_levels(25);
    let gamma0_cusps: Vec<u64> = levels.iter().map(|&n| gamma0_cusp_count(n)).collect();
    let normalizer_cusps = levels
        .iter()
        .map(|&n| {
            let text = if n == 1 {
                "1".to_string()
            } else {
                format!("{n}+")
            };
            Ok(cusp_and_area(&parse_norton(&text)?)?.0)
        })
        .collect::<Result<Vec<u64>>>()?;
    if levels.len() != 15 {
        return Err(Error::Data(format!(
            "found {} genus-zero levels, expected 15",
            levels.len()
        )));
    }
    if gamma0_cusps != GAMMA0_GENUS_ZERO_CUSPS {
        return Err(Error::Data(format!(
            "Γ0 cusp row {gamma0_cusps:?} differs from the tabulated row"
        )));
    }
    if normalizer_cusps != NORMALIZER_GENUS_ZERO_CUSPS {
        return Err(Error::Data(format!(
            "Γ0+ cusp row {normalizer_cusps:?} differs from the tabulated row"
        )));
    }
    Ok(GenusZeroSums {
        gamma0: sum_and_squares(&gamma0_cusps),
        normalizer: sum_and_squares(&normalizer_cusps),
        levels,
        gamma0_cusps,
        normalizer_cusps,
    })
}
