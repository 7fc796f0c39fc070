//! Character tables: loading, orthogonality, decomposition and McKay quivers.
//!
//! - Tables are read from JSON with exact cyclotomic literals.
//! - Three kinds are understood: `ordinary` (square tables of irreducible
//!   characters), `rational` (rows are sums over Galois orbits of
//!   irreducibles, listed in `galois_orbits`) and `brauer` (modular tables
//!   without class sizes, used only through pointwise products).
//! - Class sizes come from centralizer orders in the document or, via
//!   [`CharacterTable::with_enumerated_sizes`], from an enumerated group.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Cyclotomic, ExactMatrix, Rational};

use super::group::{MatrixGroup, DEFAULT_ORDER_CAP};
use super::linalg::solve_exact;

/// What the rows of a table are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Irreducible ordinary characters (square table).
    Ordinary,
    /// Sums of Galois-conjugate irreducibles.
    Rational,
    /// Brauer characters on p-regular classes.
    Brauer,
}

/// Column metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassInfo {
    /// Class name.
    pub name: String,
    /// |Z(g)| for g in the class, when known.
    pub centralizer_order: Option<u64>,
    /// Order of the elements, when recorded.
    #[serde(default, rename = "order", skip_serializing_if = "Option::is_none")]
    pub element_order: Option<u64>,
    /// A word in the generators naming a representative, when recorded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    group: String,
    order: u64,
    #[serde(default)]
    kind: Option<TableKind>,
    classes: Vec<ClassInfo>,
    #[serde(default)]
    galois_orbits: Option<Vec<Vec<usize>>>,
    irreducibles: Vec<Vec<Cyclotomic>>,
    #[serde(default)]
    irreducible_names: Option<Vec<String>>,
    #[serde(default)]
    generators: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default)]
    generators_file: Option<String>,
    #[serde(default)]
    natural: Option<usize>,
    #[serde(default)]
    distinguished: Option<usize>,
}

/// A validated character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    /// Group name.
    pub group: String,
    /// |G|.
    pub order: u64,
    /// Kind of rows.
    pub kind: TableKind,
    /// Columns.
    pub classes: Vec<ClassInfo>,
    /// values[row][class].
    pub values: Vec<Vec<Cyclotomic>>,
    /// For rational tables, the irreducible indices (1-based) summed into each row.
    pub galois_orbits: Option<Vec<Vec<usize>>>,
    /// Row names (defaults to χ1, χ2, …).
    pub irreducible_names: Vec<String>,
    /// Generator matrices (name, literal rows), when the document provides them.
    pub generators: Vec<(String, Vec<Vec<String>>)>,
    /// Sibling file holding the generators, if referenced.
    pub generators_file: Option<String>,
    /// Row whose character is the trace of the generator matrices.
    pub natural: Option<usize>,
    /// Row used as the distinguished representation for quivers.
    pub distinguished: Option<usize>,
}

/// Outcome of the orthogonality checks.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct OrthogonalityReport {
    /// False when the table kind has no weighted inner product (Brauer tables).
    pub applicable: bool,
    /// Row relations hold (for rational tables: diagonal = orbit size).
    pub rows_ok: bool,
    /// Column relations hold; `None` when not applicable (merged tables).
    pub columns_ok: Option<bool>,
    /// Diagonal inner products ⟨χ_i, χ_i⟩.
    pub row_norms: Vec<String>,
    /// Human-readable descriptions of failing relations.
    pub failures: Vec<String>,
}

impl OrthogonalityReport {
    /// Whether every applicable relation holds.
    pub fn passed(&self) -> bool {
        self.applicable && self.rows_ok && self.columns_ok != Some(false)
    }
}

/// Parses and validates a table document (orthogonality included when class sizes are known).
pub fn load_char_table(document: &str) -> Result<CharacterTable> {
    let doc: TableDoc =
        serde_json::from_str(document).map_err(|e| Error::Data(format!("character table: {e}")))?;
    let t = CharacterTable {
        group: doc.group,
        order: doc.order,
        kind: doc.kind.unwrap_or(TableKind::Ordinary),
        irreducible_names: doc.irreducible_names.unwrap_or_else(|| {
            (1..=doc.irreducibles.len())
                .map(|i| format!("χ{i}"))
                .collect()
        }),
        classes: doc.classes,
        values: doc.irreducibles,
        galois_orbits: doc.galois_orbits,
        generators: doc
            .generators
            .map(|g| g.into_iter().collect())
            .unwrap_or_default(),
        generators_file: doc.generators_file,
        natural: doc.natural,
        distinguished: doc.distinguished,
    };
    t.validate_structure()?;
    if t.kind != TableKind::Brauer && t.class_sizes()?.is_some() {
        let rep = verify_orthogonality(&t)?;
        if !rep.passed() {
            return Err(Error::Data(format!(
                "{}: orthogonality fails: {}",
                t.group,
                rep.failures.join("; ")
            )));
        }
    }
    Ok(t)
}

/// Loads a table from a file, resolving `generators_file` relative to it.
pub fn load_char_table_file(path: &Path) -> Result<CharacterTable> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut t = load_char_table(&text)?;
    if t.generators.is_empty() {
        if let Some(f) = &t.generators_file {
            let sibling = path.parent().unwrap_or(Path::new(".")).join(f);
            let gtext = std::fs::read_to_string(&sibling)
                .map_err(|e| Error::Io(format!("{}: {e}", sibling.display())))?;
            let doc: serde_json::Value = serde_json::from_str(&gtext)?;
            let gens: BTreeMap<String, Vec<Vec<String>>> = serde_json::from_value(
                doc.get("generators")
                    .cloned()
                    .ok_or_else(|| Error::Data("generators file lacks generators".into()))?,
            )?;
            t.generators = gens.into_iter().collect();
        }
    }
    Ok(t)
}

impl CharacterTable {
    fn validate_structure(&self) -> Result<()> {
        let k = self.classes.len();
        let bad = |m: String| Err(Error::Data(format!("{}: {m}", self.group)));
        if k == 0 || self.values.is_empty() {
            return bad("empty table".into());
        }
        if let Some(i) = self.values.iter().position(|r| r.len() != k) {
            return bad(format!(
                "row {} has {} entries for {k} classes",
                i + 1,
                self.values[i].len()
            ));
        }
        if self.irreducible_names.len() != self.values.len() {
            return bad("irreducible_names length differs from the row count".into());
        }
        match self.kind {
            TableKind::Ordinary | TableKind::Brauer if self.values.len() != k => {
                return bad(format!("{} rows for {k} classes", self.values.len()));
            }
            TableKind::Rational => {
                let Some(orbits) = &self.galois_orbits else {
                    return bad("rational table without galois_orbits".into());
                };
                if orbits.len() != self.values.len() {
                    return bad("one Galois orbit per row expected".into());
                }
                let all: BTreeSet<usize> = orbits.iter().flatten().copied().collect();
                let count: usize = orbits.iter().map(Vec::len).sum();
                if count != k || all != (1..=k).collect() {
                    return bad("galois_orbits must partition 1..=number of classes".into());
                }
            }
            _ => {}
        }
        for idx in [self.natural, self.distinguished].into_iter().flatten() {
            if idx >= self.values.len() {
                return bad(format!("row index {idx} out of range"));
            }
        }
        Ok(())
    }

    /// Number of classes (columns).
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Number of rows.
    pub fn num_rows(&self) -> usize {
        self.values.len()
    }

    /// Class sizes |G|/|Z(c)|, when every centralizer order is known.
    ///
    /// Fails if a size is non-integral or the sizes do not sum to |G|.
    pub fn class_sizes(&self) -> Result<Option<Vec<u64>>> {
        let mut sizes = Vec::with_capacity(self.classes.len());
        for c in &self.classes {
            let Some(z) = c.centralizer_order else {
                return Ok(None);
            };
            if z == 0 || self.order % z != 0 {
                return Err(Error::Data(format!(
                    "{}: class {} has non-integral size",
                    self.group, c.name
                )));
            }
            sizes.push(self.order / z);
        }
        let total: u64 = sizes.iter().sum();
        if total != self.order {
            return Err(Error::Data(format!(
                "{}: class sizes sum to {total}, not {}",
                self.group, self.order
            )));
        }
        Ok(Some(sizes))
    }

    /// Expected ⟨row, row⟩: 1 for irreducible rows, the orbit size for merged rows.
    pub fn expected_norms(&self) -> Vec<u64> {
        match &self.galois_orbits {
            Some(o) if self.kind == TableKind::Rational => {
                o.iter().map(|x| x.len() as u64).collect()
            }
            _ => vec![1; self.values.len()],
        }
    }

    /// Degrees χ(1) of the rows (values on the first class).
    pub fn degrees(&self) -> Vec<Cyclotomic> {
        self.values.iter().map(|r| r[0].clone()).collect()
    }

    /// Enumerates the group from the table's generators.
    pub fn matrix_group(&self) -> Result<MatrixGroup> {
        if self.generators.is_empty() {
            return Err(Error::Data(format!(
                "{}: no generators available",
                self.group
            )));
        }
        let named = self
            .generators
            .iter()
            .map(|(n, rows)| Ok((n.clone(), ExactMatrix::from_literals(rows)?)))
            .collect::<Result<Vec<_>>>()?;
        MatrixGroup::from_named(named, DEFAULT_ORDER_CAP)
    }

    /// Replaces centralizer orders with those of the enumerated group, matching
    /// columns through their representative words.
    ///
    /// Fails unless the words hit every class of `g` exactly once.
    pub fn with_enumerated_sizes(&self, g: &MatrixGroup) -> Result<CharacterTable> {
        if g.order() as u64 != self.order {
            return Err(Error::Data(format!(
                "{}: enumerated order {} ≠ {}",
                self.group,
                g.order(),
                self.order
            )));
        }
        if g.classes().len() != self.classes.len() {
            return Err(Error::Data(format!(
                "{}: {} enumerated classes for {} columns",
                self.group,
                g.classes().len(),
                self.classes.len()
            )));
        }
        let mut seen = vec![false; g.classes().len()];
        let mut out = self.clone();
        for c in &mut out.classes {
            let word = c.representative.as_deref().ok_or_else(|| {
                Error::Data(format!("class {} has no representative word", c.name))
            })?;
            let k = g.class_of_word(word)?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::Data(format!(
                    "class {} repeats an enumerated class",
                    c.name
                )));
            }
            let cls = &g.classes()[k];
            c.centralizer_order = Some((g.order() / cls.size) as u64);
            if let Some(o) = c.element_order {
                if o != cls.element_order {
                    return Err(Error::Data(format!(
                        "class {}: element order {} ≠ {o}",
                        c.name, cls.element_order
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Values of the class function `row` permuted into the enumerated class order of `g`.
    pub fn column_classes(&self, g: &MatrixGroup) -> Result<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| g.class_of_word(c.representative.as_deref().unwrap_or("1")))
            .collect()
    }
}

/// Checks the weighted row (and, for square ordinary tables, column) relations exactly.
pub fn verify_orthogonality(t: &CharacterTable) -> Result<OrthogonalityReport> {
    let mut rep = OrthogonalityReport::default();
    if t.kind == TableKind::Brauer {
        return Ok(rep);
    }
    let sizes = t.class_sizes()?.ok_or_else(|| {
        Error::Data(format!(
            "{}: class sizes unknown; supply them by enumeration",
            t.group
        ))
    })?;
    rep.applicable = true;
    let order = Rational::from(t.order);
    let conj: Vec<Vec<Cyclotomic>> = t
        .values
        .iter()
        .map(|r| r.iter().map(Cyclotomic::conj).collect())
        .collect();
    let weights: Vec<Cyclotomic> = sizes
        .iter()
        .map(|&s| Cyclotomic::from_int(s as i64))
        .collect();
    let expected = t.expected_norms();
    rep.rows_ok = true;
    for i in 0..t.num_rows() {
        let weighted: Vec<Cyclotomic> = t.values[i]
            .iter()
            .zip(&weights)
            .map(|(v, w)| v * w)
            .collect();
        for j in i..t.num_rows() {
            let s: Cyclotomic = weighted.iter().zip(&conj[j]).map(|(a, b)| a * b).sum();
            let ip = s.scale(&order.recip()?);
            let want = if i == j {
                Cyclotomic::from_int(expected[i] as i64)
            } else {
                Cyclotomic::zero()
            };
            if i == j {
                rep.row_norms.push(ip.to_string());
            }
            if ip != want {
                rep.rows_ok = false;
                rep.failures.push(format!(
                    "<{}, {}> = {ip}, expected {want}",
                    t.irreducible_names[i], t.irreducible_names[j]
                ));
            }
        }
    }
    if t.kind == TableKind::Ordinary {
        let mut ok = true;
        for a in 0..t.num_classes() {
            for b in a..t.num_classes() {
                let s: Cyclotomic = (0..t.num_rows())
                    .map(|i| &t.values[i][a] * &conj[i][b])
                    .sum();
                let want = if a == b {
                    Cyclotomic::from_int(t.classes[a].centralizer_order.unwrap_or(0) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if s != want {
                    ok = false;
                    rep.failures.push(format!(
                        "columns {} and {}: {s}, expected {want}",
                        t.classes[a].name, t.classes[b].name
                    ));
                }
            }
        }
        rep.columns_ok = Some(ok);
    }
    Ok(rep)
}

/// Writes `f` as an exact combination Σ m_i·row_i by solving over the classes.
pub fn class_function_decompose(t: &CharacterTable, f: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    if f.len() != t.num_classes() {
        return Err(Error::InvalidArgument(format!(
            "class function has {} values for {} classes",
            f.len(),
            t.num_classes()
        )));
    }
    let a: Vec<Vec<Cyclotomic>> = (0..t.num_classes())
        .map(|c| t.values.iter().map(|r| r[c].clone()).collect())
        .collect();
    solve_exact(&a, f)
}

/// The weighted cusp sums b_j = Σ_γ χ_j(c_γ)·C_γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspRepresentation {
    /// One value per row.
    pub values: Vec<Cyclotomic>,
    /// Whether every value is a positive integer.
    pub all_positive_integers: bool,
}

/// Computes b_j = Σ_γ χ_j(c_γ)·C_γ for a cusp number per class.
pub fn cusp_rep_multiplicities(
    t: &CharacterTable,
    cusps: &[Cyclotomic],
) -> Result<CuspRepresentation> {
    if cusps.len() != t.num_classes() {
        return Err(Error::InvalidArgument(format!(
            "{} cusp numbers for {} classes",
            cusps.len(),
            t.num_classes()
        )));
    }
    let values: Vec<Cyclotomic> = t
        .values
        .iter()
        .map(|row| row.iter().zip(cusps).map(|(x, c)| x * c).sum())
        .collect();
    let all_positive_integers = values.iter().all(|v| {
        v.as_rational()
            .is_some_and(|r| r.is_integer() && r > Rational::zero())
    });
    Ok(CuspRepresentation {
        values,
        all_positive_integers,
    })
}

/// Multiplicities a_j = Σ_γ χ_j(c_γ) of the conjugation (centralizing) representation.
pub fn centralizing_multiplicities(t: &CharacterTable) -> Result<CuspRepresentation> {
    cusp_rep_multiplicities(t, &vec![Cyclotomic::one(); t.num_classes()])
}

/// The McKay matrix a with χ_R·χ_i = Σ_j a_ij·χ_j, solved pointwise over classes.
pub fn mckay_quiver(t: &CharacterTable, distinguished: &[Cyclotomic]) -> Result<Vec<Vec<i64>>> {
    if distinguished.len() != t.num_classes() {
        return Err(Error::InvalidArgument(
            "distinguished character has the wrong length".into(),
        ));
    }
    let mut out = Vec::with_capacity(t.num_rows());
    for (i, row) in t.values.iter().enumerate() {
        let prod: Vec<Cyclotomic> = row.iter().zip(distinguished).map(|(a, b)| a * b).collect();
        let sol = class_function_decompose(t, &prod)?;
        let mut ints = Vec::with_capacity(sol.len());
        for (j, v) in sol.iter().enumerate() {
            match v
                .as_rational()
                .and_then(|r| if r.is_integer() { r.to_i64() } else { None })
            {
                Some(k) if k >= 0 => ints.push(k),
                _ => {
                    return Err(Error::Arithmetic(format!(
                        "quiver entry ({}, {}) = {v} is not a non-negative integer",
                        t.irreducible_names[i], t.irreducible_names[j]
                    )))
                }
            }
        }
        out.push(ints);
    }
    Ok(out)
}

/// Affine Dynkin diagrams recognised by [`affine_dynkin_type`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AffineType {
    /// Ã_n, a cycle on n+1 nodes (n ≥ 2).
    A(usize),
    /// D̃_n on n+1 nodes.
    D(usize),
    /// Ẽ6.
    E6,
    /// Ẽ7.
    E7,
    /// Ẽ8.
    E8,
}

/// Identifies a simply-laced affine Dynkin diagram from a symmetric 0/1 adjacency matrix.
pub fn affine_dynkin_type(a: &[Vec<i64>]) -> Option<AffineType> {
    let n = a.len();
    if n < 3 || a.iter().any(|r| r.len() != n) {
        return None;
    }
    for i in 0..n {
        if a[i][i] != 0 {
            return None;
        }
        for j in 0..n {
            if a[i][j] != a[j][i] || !(0..=1).contains(&a[i][j]) {
                return None;
            }
        }
    }
    let deg: Vec<usize> = a
        .iter()
        .map(|r| r.iter().filter(|&&x| x == 1).count())
        .collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    // Connectivity.
    let mut seen = vec![false; n];
    let mut q = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = q.pop_front() {
        for w in 0..n {
            if a[v][w] == 1 && !seen[w] {
                seen[w] = true;
                q.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return None;
    }
    if edges == n && deg.iter().all(|&d| d == 2) {
        return Some(AffineType::A(n - 1));
    }
    if edges != n - 1 {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if deg.iter().any(|&d| d > 4) {
        return None;
    }
    if branch.len() == 1 && deg[branch[0]] == 4 && n == 5 {
        return Some(AffineType::D(4));
    }
    if branch.len() == 2 && branch.iter().all(|&b| deg[b] == 3) {
        // Both branch nodes carry two leaves.
        let leaves_ok = branch
            .iter()
            .all(|&b| (0..n).filter(|&w| a[b][w] == 1 && deg[w] == 1).count() == 2);
        return leaves_ok.then_some(AffineType::D(n - 1));
    }
    if branch.len() != 1 || deg[branch[0]] != 3 {
        return None;
    }
    let c = branch[0];
    let mut arms: Vec<usize> = (0..n)
        .filter(|&w| a[c][w] == 1)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next = (0..n).find(|&w| a[cur][w] == 1 && w != prev);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => return len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [2, 2, 2] => Some(AffineType::E6),
        [1, 3, 3] => Some(AffineType::E7),
        [1, 2, 5] => Some(AffineType::E8),
        _ => None,
    }
}
