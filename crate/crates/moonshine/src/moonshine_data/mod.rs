//! Shipped class tables, their integrity checks and every statistic derived
//! from them.
//!
//! - [`load_datasets`] reads the CSV transcriptions after checking each file
//!   against the `SHA256SUMS` manifest, validates row counts and Norton
//!   symbols, and resolves the class-name joins between files.
//! - [`stats`] computes cusp sums with configurable deduplication, the
//!   Monster histogram, the Baby Monstrous subset, the Fischer twist
//!   expansion, the Conway square-free list and the genus-zero sums.
//! - [`checks`] reconciles the Monster table against symbols evaluated by
//!   [`crate::norton`], checks the centralizer orders and records the pure
//!   constant identities.
//!
//! File schemas (UTF-8 CSV with a header row):
//! - `monster_classes.csv`: `name,cusp,D,symbol` (172 rows, Galois pairs merged as `23AB`).
//! - `monster_centralizers.csv`: `name,factorization` with `p^e*p^e*…` (194 rows).
//! - `baby_classes.csv`: `name,series,cusp` (247 rows).
//! - `fischer_classes.csv`: `orbit,series,cusp`, orbit `;`-joined (108 rows).
//! - `conway_squarefree.txt`: one Monster class name per line (41 lines).
//! - `galois_pairs.txt`: `A,B` per line, the pairs as tabulated (22 lines).

pub mod checks;
pub mod stats;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactmath::ntheory::is_prime;
use crate::norton::{parse_norton, NortonSymbol};

pub use checks::{
    centralizer_consistency, constants_ledger, lenient_reading, reconcile_monster_table,
    CentralizerReport, ConstantCheck, NamedCheck, Reconciliation, RowReconciliation, RowStatus,
};
pub use stats::{
    baby_monstrous_subset, conway_squarefree_sums, cusp_histogram, cusp_sums,
    fischer_essential_sums, fischer_expand, genus_zero_sums, monster_full_sum, monster_paired_sum,
    CuspItem, CuspSums, Dedup, FischerExpansion, GenusZeroSums, MonstrousSubset, SquarefreeSums,
};

/// Name of the hash manifest inside the data directory.
pub const MANIFEST: &str = "SHA256SUMS";
/// Monster class table file.
pub const MONSTER_FILE: &str = "monster_classes.csv";
/// Monster centralizer file.
pub const CENTRALIZER_FILE: &str = "monster_centralizers.csv";
/// Baby Monster class file.
pub const BABY_FILE: &str = "baby_classes.csv";
/// Fischer class file.
pub const FISCHER_FILE: &str = "fischer_classes.csv";
/// Conway square-free name list.
pub const CONWAY_FILE: &str = "conway_squarefree.txt";
/// Tabulated Galois pairs of Monster classes.
pub const PAIRS_FILE: &str = "galois_pairs.txt";

/// Expected row counts.
pub const MONSTER_ROWS: usize = 172;
/// Expected centralizer rows.
pub const CENTRALIZER_ROWS: usize = 194;
/// Expected Baby rows.
pub const BABY_ROWS: usize = 247;
/// Expected Fischer rows.
pub const FISCHER_ROWS: usize = 108;
/// Expected Conway names.
pub const CONWAY_NAMES: usize = 41;
/// Expected Galois pairs.
pub const GALOIS_PAIRS: usize = 22;

/// One row of the Monster table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonsterClassRecord {
    /// Class name, Galois pairs merged (`23AB`).
    pub name: String,
    /// Cusp number C.
    pub cusp: u64,
    /// Area invariant D.
    pub d: u64,
    /// Symbol text as tabulated.
    pub symbol_text: String,
    /// Parsed symbol, `None` when the row carries a soft anomaly.
    #[serde(skip)]
    pub symbol: Option<NortonSymbol>,
    /// Number of unmerged classes the row stands for (1 or 2).
    pub multiplicity: u64,
}

/// One row of the centralizer table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerRecord {
    /// Unmerged class name.
    pub name: String,
    /// Prime → exponent.
    pub factors: BTreeMap<u64, u32>,
}

impl CentralizerRecord {
    /// The centralizer order.
    pub fn order(&self) -> BigUint {
        factored_value(&self.factors)
    }
}

/// Multiplies out a prime-exponent map.
pub fn factored_value(factors: &BTreeMap<u64, u32>) -> BigUint {
    factors.iter().fold(BigUint::from(1u32), |acc, (&p, &e)| {
        acc * BigUint::from(p).pow(e)
    })
}

/// One row of the Baby Monster table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BabyClassRecord {
    /// Class name.
    pub name: String,
    /// McKay–Thompson series label.
    pub series: String,
    /// Cusp number.
    pub cusp: u64,
}

/// One row of the Fischer table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FischerClassRecord {
    /// One class or a triplet fused under the central 3.
    pub orbit: Vec<String>,
    /// McKay–Thompson series label.
    pub series: String,
    /// Cusp number.
    pub cusp: u64,
}

/// A non-fatal irregularity found while loading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    /// Data file concerned.
    pub file: String,
    /// Row or item concerned.
    pub item: String,
    /// What is irregular.
    pub message: String,
}

/// Everything loaded from a data directory.
#[derive(Clone, Debug, Serialize)]
pub struct DatasetBundle {
    /// Monster rows (172).
    pub monster: Vec<MonsterClassRecord>,
    /// Centralizer rows (194).
    pub centralizers: Vec<CentralizerRecord>,
    /// Baby rows (247).
    pub baby: Vec<BabyClassRecord>,
    /// Fischer rows (108).
    pub fischer: Vec<FischerClassRecord>,
    /// Conway square-free names (41, with repeats).
    pub conway_names: Vec<String>,
    /// Tabulated Galois pairs (22).
    pub galois_pairs: Vec<(String, String)>,
    /// Soft anomalies.
    pub anomalies: Vec<Anomaly>,
    /// File name → sha256 hex digest, as verified.
    pub hashes: BTreeMap<String, String>,
}

impl DatasetBundle {
    /// Looks up a Monster row by its (possibly merged) name.
    pub fn monster_row(&self, name: &str) -> Option<&MonsterClassRecord> {
        self.monster.iter().find(|r| r.name == name)
    }

    /// Looks up a centralizer row by unmerged name.
    pub fn centralizer(&self, name: &str) -> Option<&CentralizerRecord> {
        self.centralizers.iter().find(|r| r.name == name)
    }
}

/// Hex sha256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Files every data directory must contain and hash.
pub fn required_files() -> [&'static str; 6] {
    [
        MONSTER_FILE,
        CENTRALIZER_FILE,
        BABY_FILE,
        FISCHER_FILE,
        CONWAY_FILE,
        PAIRS_FILE,
    ]
}

/// Parses a `sha256sum`-style manifest (`<hex>  <file>` per line).
pub fn parse_manifest(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (hash, file) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Integrity(format!("{MANIFEST} line {}: malformed", i + 1)))?;
        let file = file.trim_start().trim_start_matches('*');
        if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::Integrity(format!(
                "{MANIFEST} line {}: bad digest",
                i + 1
            )));
        }
        out.insert(file.to_string(), hash.to_ascii_lowercase());
    }
    Ok(out)
}

/// Checks every manifest entry (and the presence of the required files) against disk.
pub fn verify_integrity(dir: &Path) -> Result<BTreeMap<String, String>> {
    if !dir.is_dir() {
        return Err(Error::Integrity(format!(
            "data directory {} not found",
            dir.display()
        )));
    }
    let manifest_path = dir.join(MANIFEST);
    let text = fs::read_to_string(&manifest_path)
        .map_err(|e| Error::Integrity(format!("cannot read {}: {e}", manifest_path.display())))?;
    let manifest = parse_manifest(&text)?;
    for f in required_files() {
        if !manifest.contains_key(f) {
            return Err(Error::Integrity(format!("{f} is not listed in {MANIFEST}")));
        }
    }
    for (file, want) in &manifest {
        let bytes = fs::read(dir.join(file))
            .map_err(|e| Error::Integrity(format!("cannot read {file}: {e}")))?;
        let got = sha256_hex(&bytes);
        if &got != want {
            return Err(Error::Integrity(format!(
                "{file}: sha256 {got} does not match manifest {want}"
            )));
        }
    }
    Ok(manifest)
}

/// Renders a manifest for the files present in `dir` (sorted by name).
pub fn render_manifest(dir: &Path, files: &[&str]) -> Result<String> {
    let mut names: Vec<&str> = files.to_vec();
    names.sort_unstable();
    let mut out = String::new();
    for f in names {
        let bytes = fs::read(dir.join(f))?;
        out.push_str(&format!("{}  {f}\n", sha256_hex(&bytes)));
    }
    Ok(out)
}

fn expect_rows<T>(rows: &[T], want: usize, file: &str) -> Result<()> {
    if rows.len() != want {
        return Err(Error::Data(format!(
            "{file}: expected {want} rows, found {}",
            rows.len()
        )));
    }
    Ok(())
}

fn csv_rows<T: for<'de> Deserialize<'de>>(text: &str, file: &str) -> Result<Vec<T>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    rdr.deserialize()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::Parse(format!("{file} row {}: {e}", i + 1))))
        .collect()
}

/// Splits a class name like `23AB` into its unmerged names `23A`, `23B`.
pub fn expand_merged_name(name: &str) -> Result<Vec<String>> {
    let digits: String = name.chars().take_while(char::is_ascii_digit).collect();
    let letters = &name[digits.len()..];
    if digits.is_empty() || letters.is_empty() || !letters.chars().all(|c| c.is_ascii_uppercase()) {
        return Err(Error::Parse(format!(
            "class name {name:?} is not of the form nX or nXY"
        )));
    }
    Ok(letters.chars().map(|c| format!("{digits}{c}")).collect())
}

/// Parses `monster_classes.csv`. Symbols whose structure parses but whose
/// involution list is inadmissible become soft anomalies; other symbol errors are fatal.
pub fn parse_monster_csv(text: &str) -> Result<(Vec<MonsterClassRecord>, Vec<Anomaly>)> {
    #[derive(Deserialize)]
    struct Raw {
        name: String,
        cusp: u64,
        #[serde(rename = "D")]
        d: u64,
        symbol: String,
    }
    let raw: Vec<Raw> = csv_rows(text, MONSTER_FILE)?;
    expect_rows(&raw, MONSTER_ROWS, MONSTER_FILE)?;
    let mut anomalies = Vec::new();
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(raw.len());
    for r in raw {
        if !seen.insert(r.name.clone()) {
            return Err(Error::Data(format!(
                "{MONSTER_FILE}: duplicate class {}",
                r.name
            )));
        }
        if r.cusp == 0 || r.d == 0 {
            return Err(Error::Data(format!(
                "{MONSTER_FILE}: {} has a zero entry",
                r.name
            )));
        }
        let multiplicity = expand_merged_name(&r.name)?.len() as u64;
        if multiplicity > 2 {
            return Err(Error::Data(format!(
                "{MONSTER_FILE}: {} merges more than two classes",
                r.name
            )));
        }
        let symbol = match parse_norton(&r.symbol) {
            Ok(s) => Some(s),
            Err(e) => {
                let head = r.symbol.split_once('+').map(|(h, _)| format!("{h}+"));
                match head.map(|h| parse_norton(&h)) {
                    Some(Ok(_)) => {
                        anomalies.push(Anomaly {
                            file: MONSTER_FILE.into(),
                            item: r.name.clone(),
                            message: format!("symbol {:?} rejected: {e}", r.symbol),
                        });
                        None
                    }
                    _ => return Err(Error::Parse(format!("{MONSTER_FILE} row {}: {e}", r.name))),
                }
            }
        };
        if r.d % r.cusp != 0 {
            anomalies.push(Anomaly {
                file: MONSTER_FILE.into(),
                item: r.name.clone(),
                message: format!("D = {} is not a multiple of C = {}", r.d, r.cusp),
            });
        }
        out.push(MonsterClassRecord {
            name: r.name,
            cusp: r.cusp,
            d: r.d,
            symbol_text: r.symbol,
            symbol,
            multiplicity,
        });
    }
    Ok((out, anomalies))
}

/// Parses a factorization `p^e*p^e*…` into a prime-exponent map.
pub fn parse_factorization(text: &str) -> Result<BTreeMap<u64, u32>> {
    let mut out = BTreeMap::new();
    for part in text.split('*') {
        let (p, e) = part.split_once('^').unwrap_or((part, "1"));
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in {text:?}")))?;
        let e: u32 = e
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))?;
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime in {text:?}")));
        }
        if out.insert(p, e).is_some() {
            return Err(Error::Parse(format!("prime {p} repeated in {text:?}")));
        }
    }
    Ok(out)
}

/// Parses `monster_centralizers.csv`.
pub fn parse_centralizer_csv(text: &str) -> Result<Vec<CentralizerRecord>> {
    #[derive(Deserialize)]
    struct Raw {
        name: String,
        factorization: String,
    }
    let raw: Vec<Raw> = csv_rows(text, CENTRALIZER_FILE)?;
    expect_rows(&raw, CENTRALIZER_ROWS, CENTRALIZER_FILE)?;
    let mut seen = BTreeSet::new();
    raw.into_iter()
        .map(|r| {
            if !seen.insert(r.name.clone()) {
                return Err(Error::Data(format!(
                    "{CENTRALIZER_FILE}: duplicate class {}",
                    r.name
                )));
            }
            Ok(CentralizerRecord {
                factors: parse_factorization(&r.factorization)?,
                name: r.name,
            })
        })
        .collect()
}

/// Parses `baby_classes.csv`.
pub fn parse_baby_csv(text: &str) -> Result<Vec<BabyClassRecord>> {
    let rows: Vec<BabyClassRecord> = csv_rows(text, BABY_FILE)?;
    expect_rows(&rows, BABY_ROWS, BABY_FILE)?;
    Ok(rows)
}

/// Parses `fischer_classes.csv`.
pub fn parse_fischer_csv(text: &str) -> Result<Vec<FischerClassRecord>> {
    #[derive(Deserialize)]
    struct Raw {
        orbit: String,
        series: String,
        cusp: u64,
    }
    let raw: Vec<Raw> = csv_rows(text, FISCHER_FILE)?;
    expect_rows(&raw, FISCHER_ROWS, FISCHER_FILE)?;
    raw.into_iter()
        .map(|r| {
            let orbit: Vec<String> = r.orbit.split(';').map(|s| s.trim().to_string()).collect();
            if !(orbit.len() == 1 || orbit.len() == 3) || orbit.iter().any(String::is_empty) {
                return Err(Error::Data(format!(
                    "{FISCHER_FILE}: orbit {:?} must list 1 or 3 classes",
                    r.orbit
                )));
            }
            Ok(FischerClassRecord {
                orbit,
                series: r.series,
                cusp: r.cusp,
            })
        })
        .collect()
}

fn parse_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

/// Parses `conway_squarefree.txt`.
pub fn parse_conway_names(text: &str) -> Result<Vec<String>> {
    let names = parse_lines(text);
    expect_rows(&names, CONWAY_NAMES, CONWAY_FILE)?;
    Ok(names)
}

/// Parses `galois_pairs.txt`.
pub fn parse_galois_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let pairs = parse_lines(text)
        .into_iter()
        .map(|l| match l.split_once(',') {
            Some((a, b)) => Ok((a.trim().to_string(), b.trim().to_string())),
            None => Err(Error::Parse(format!("{PAIRS_FILE}: bad line {l:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    expect_rows(&pairs, GALOIS_PAIRS, PAIRS_FILE)?;
    Ok(pairs)
}

/// Loading options.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadOptions {
    /// Check the `SHA256SUMS` manifest before parsing.
    pub verify_hashes: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            verify_hashes: true,
        }
    }
}

/// Loads and validates every dataset in `dir`, checking hashes first.
pub fn load_datasets(dir: &Path) -> Result<DatasetBundle> {
    load_datasets_with(dir, LoadOptions::default())
}

/// [`load_datasets`] with explicit options.
pub fn load_datasets_with(dir: &Path, opts: LoadOptions) -> Result<DatasetBundle> {
    let hashes = if opts.verify_hashes {
        verify_integrity(dir)?
    } else {
        BTreeMap::new()
    };
    let read = |f: &str| -> Result<String> {
        let p: PathBuf = dir.join(f);
        fs::read_to_string(&p)
            .map_err(|e| Error::Integrity(format!("cannot read {}: {e}", p.display())))
    };
    let (monster, mut anomalies) = parse_monster_csv(&read(MONSTER_FILE)?)?;
    let centralizers = parse_centralizer_csv(&read(CENTRALIZER_FILE)?)?;
    let baby = parse_baby_csv(&read(BABY_FILE)?)?;
    let fischer = parse_fischer_csv(&read(FISCHER_FILE)?)?;
    let conway_names = parse_conway_names(&read(CONWAY_FILE)?)?;
    let galois_pairs = parse_galois_pairs(&read(PAIRS_FILE)?)?;
    let mut bundle = DatasetBundle {
        monster,
        centralizers,
        baby,
        fischer,
        conway_names,
        galois_pairs,
        anomalies: Vec::new(),
        hashes,
    };
    anomalies.extend(resolve_joins(&bundle)?);
    bundle.anomalies = anomalies;
    Ok(bundle)
}

/// Checks cross-file class-name joins. Hard failures are errors; irregularities
/// that leave the data usable are returned as anomalies.
fn resolve_joins(b: &DatasetBundle) -> Result<Vec<Anomaly>> {
    let mut anomalies = Vec::new();
    let cent: BTreeSet<&str> = b.centralizers.iter().map(|r| r.name.as_str()).collect();
    let mut covered = BTreeSet::new();
    for r in &b.monster {
        for n in expand_merged_name(&r.name)? {
            if !cent.contains(n.as_str()) {
                return Err(Error::Data(format!(
                    "{MONSTER_FILE}: {} has no centralizer row {n}",
                    r.name
                )));
            }
            covered.insert(n);
        }
    }
    if covered.len() != cent.len() {
        return Err(Error::Data(format!(
            "{MONSTER_FILE} covers {} of the {} centralizer classes",
            covered.len(),
            cent.len()
        )));
    }
    let monster_names: BTreeSet<&str> = b.monster.iter().map(|r| r.name.as_str()).collect();
    for n in &b.conway_names {
        if !monster_names.contains(n.as_str()) {
            return Err(Error::Data(format!(
                "{CONWAY_FILE}: unknown Monster class {n}"
            )));
        }
    }
    // Monstrous series labels of the Baby and Fischer tables must name Monster classes.
    let labels = b
        .baby
        .iter()
        .map(|r| (BABY_FILE, &r.series))
        .chain(b.fischer.iter().map(|r| (FISCHER_FILE, &r.series)));
    let monstrous = stats::monstrous_label_regex();
    for (file, s) in labels {
        if monstrous.is_match(s)
            && !cent.contains(s.as_str())
            && !monster_names.contains(s.as_str())
        {
            return Err(Error::Data(format!(
                "{file}: series {s} is not a Monster class"
            )));
        }
    }
    let lower = regex::Regex::new(r"^\d+[a-z]+$").expect("static regex");
    for r in &b.baby {
        if !lower.is_match(&r.name) {
            anomalies.push(Anomaly {
                file: BABY_FILE.into(),
                item: r.name.clone(),
                message: "class name is not in lower-case nx form".into(),
            });
        }
    }
    let merged_pairs: BTreeSet<(String, String)> = b
        .monster
        .iter()
        .filter(|r| r.multiplicity == 2)
        .map(|r| {
            let v = expand_merged_name(&r.name)?;
            Ok((v[0].clone(), v[1].clone()))
        })
        .collect::<Result<_>>()?;
    let listed: BTreeSet<(String, String)> = b.galois_pairs.iter().cloned().collect();
    for (x, y) in listed.difference(&merged_pairs) {
        anomalies.push(Anomaly {
            file: PAIRS_FILE.into(),
            item: format!("({x},{y})"),
            message: if cent.contains(x.as_str()) {
                "listed pair is not merged in the Monster table".into()
            } else {
                "listed pair names no Monster class".into()
            },
        });
    }
    for (x, y) in merged_pairs.difference(&listed) {
        anomalies.push(Anomaly {
            file: PAIRS_FILE.into(),
            item: format!("({x},{y})"),
            message: "merged Monster row is missing from the pair list".into(),
        });
    }
    Ok(anomalies)
}
