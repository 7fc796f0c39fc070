//! Finite matrix groups: enumeration, conjugacy classes, words and centres.
//!
//! - [`MatrixGroup`] closes a generator list under multiplication, keeping a
//!   hash index of canonical [`FastMatrix`] elements.
//! - Conjugacy classes are orbits under conjugation by the generators, which
//!   suffices because the generators generate the group.
//! - Words such as `f2*f1^-1*f2^3` are evaluated in the group (`1` is the
//!   empty word); inverses are positive powers g^{ord(g)−1}.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactmath::ntheory::factorize;
use crate::exactmath::{Cyclotomic, ExactMatrix};

use super::fastmat::{FastMatrix, FieldContext};

/// Default safety cap on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// A conjugacy class of an enumerated group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index of the representative element.
    pub representative: usize,
    /// Number of elements.
    pub size: usize,
    /// Order of its elements.
    pub element_order: u64,
}

/// Centre of a group and the structure of the central quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterStructure {
    /// |Z(G)|.
    pub center_order: usize,
    /// Elementary divisors of G/Z(G) when it is abelian, ascending; `None` otherwise.
    pub quotient_invariants: Option<Vec<u64>>,
}

/// An enumerated finite group of matrices over a cyclotomic field.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    ctx: FieldContext,
    names: Vec<String>,
    generators: Vec<ExactMatrix>,
    fast_gens: Vec<FastMatrix>,
    fast_inv: Vec<FastMatrix>,
    elements: Vec<FastMatrix>,
    index: HashMap<FastMatrix, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

/// Enumerates the group generated by `generators` (named g1, g2, …).
pub fn enumerate_matrix_group(generators: &[ExactMatrix]) -> Result<MatrixGroup> {
    let named = generators
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{}", i + 1), g.clone()))
        .collect();
    MatrixGroup::from_named(named, DEFAULT_ORDER_CAP)
}

/// Conjugacy classes of an enumerated group (computed at enumeration time).
pub fn conjugacy_classes(g: &MatrixGroup) -> &[ConjugacyClass] {
    g.classes()
}

/// Centre order and central-quotient invariants.
pub fn center_structure(g: &MatrixGroup) -> Result<CenterStructure> {
    g.center_structure()
}

impl MatrixGroup {
    /// Enumerates the group generated by named matrices, failing beyond `cap` elements.
    pub fn from_named(named: Vec<(String, ExactMatrix)>, cap: usize) -> Result<Self> {
        if named.is_empty() {
            return Err(Error::InvalidArgument(
                "a matrix group needs at least one generator".into(),
            ));
        }
        let dim = named[0].1.dim();
        if named.iter().any(|(_, m)| m.dim() != dim) {
            return Err(Error::InvalidArgument(
                "generators have different sizes".into(),
            ));
        }
        let ctx = FieldContext::for_matrices(named.iter().map(|(_, m)| m));
        let fast_gens = named
            .iter()
            .map(|(_, m)| FastMatrix::from_exact(&ctx, m))
            .collect::<Result<Vec<_>>>()?;
        let mut fast_inv = Vec::with_capacity(fast_gens.len());
        for g in &fast_gens {
            let ord = g.order(&ctx, cap as u64)?;
            fast_inv.push(g.pow(ord - 1, &ctx)?);
        }
        let id = FastMatrix::identity(&ctx, dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &fast_gens {
                let y = x.mul(g, &ctx)?;
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::Limit(format!(
                            "group order exceeds the cap of {cap}"
                        )));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let (names, generators) = named.into_iter().unzip();
        let mut g = MatrixGroup {
            ctx,
            names,
            generators,
            fast_gens,
            fast_inv,
            elements,
            index,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.compute_classes()?;
        Ok(g)
    }

    /// Parses a `{"generators": {name: [[literal, …], …]}}` document and enumerates.
    pub fn from_generators_json(text: &str) -> Result<Self> {
        let doc: serde_json::Value = serde_json::from_str(text)?;
        let gens = doc
            .get("generators")
            .and_then(|g| g.as_object())
            .ok_or_else(|| Error::Data("missing \"generators\" object".into()))?;
        let mut named = Vec::new();
        for (name, rows) in gens {
            let rows: Vec<Vec<String>> = serde_json::from_value(rows.clone())?;
            named.push((name.clone(), ExactMatrix::from_literals(&rows)?));
        }
        Self::from_named(named, DEFAULT_ORDER_CAP)
    }

    fn compute_classes(&mut self) -> Result<()> {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[start] = cid;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = self.elements[orbit[head]].clone();
                head += 1;
                for (g, gi) in self.fast_gens.iter().zip(&self.fast_inv) {
                    let y = gi.mul(&x, &self.ctx)?.mul(g, &self.ctx)?;
                    let j = *self.index.get(&y).ok_or_else(|| {
                        Error::Arithmetic("conjugate left the enumerated set".into())
                    })?;
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        orbit.push(j);
                    }
                }
            }
            let element_order = self.elements[start].order(&self.ctx, n as u64 + 1)?;
            classes.push(ConjugacyClass {
                representative: start,
                size: orbit.len(),
                element_order,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
        Ok(())
    }

    /// |G|.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Size of the matrices.
    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    /// The field context (conductor) of the entries.
    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    /// Generator names in order.
    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    /// Generator matrices in order.
    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    /// Element `i` as an exact matrix.
    pub fn element(&self, i: usize) -> ExactMatrix {
        self.elements[i].to_exact(&self.ctx)
    }

    /// All elements in compact form.
    pub fn fast_elements(&self) -> &[FastMatrix] {
        &self.elements
    }

    /// Conjugacy classes in discovery order (the identity class first).
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// Class index of element `i`.
    pub fn class_of_element(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Representative of class `c` as an exact matrix.
    pub fn class_representative(&self, c: usize) -> ExactMatrix {
        self.element(self.classes[c].representative)
    }

    /// Index of a matrix in the group, if it belongs to it.
    pub fn index_of(&self, m: &ExactMatrix) -> Result<Option<usize>> {
        let f = FastMatrix::from_exact(&self.ctx, m)?;
        Ok(self.index.get(&f).copied())
    }

    /// Class of a matrix, if it belongs to the group.
    pub fn class_of_matrix(&self, m: &ExactMatrix) -> Result<Option<usize>> {
        Ok(self.index_of(m)?.map(|i| self.class_of[i]))
    }

    /// Parses a word into (generator index, exponent) pairs.
    pub fn parse_word(&self, word: &str) -> Result<Vec<(usize, i64)>> {
        parse_word(word, &self.names)
    }

    fn eval_fast(&self, word: &str) -> Result<FastMatrix> {
        let mut acc = FastMatrix::identity(&self.ctx, self.dim());
        for (g, e) in self.parse_word(word)? {
            let base = if e < 0 {
                &self.fast_inv[g]
            } else {
                &self.fast_gens[g]
            };
            acc = acc.mul(&base.pow(e.unsigned_abs(), &self.ctx)?, &self.ctx)?;
        }
        Ok(acc)
    }

    /// Evaluates a word in the generators.
    pub fn evaluate_word(&self, word: &str) -> Result<ExactMatrix> {
        Ok(self.eval_fast(word)?.to_exact(&self.ctx))
    }

    /// Class of the element named by a word.
    pub fn class_of_word(&self, word: &str) -> Result<usize> {
        let f = self.eval_fast(word)?;
        let i = self
            .index
            .get(&f)
            .ok_or_else(|| Error::Arithmetic(format!("word {word} left the group")))?;
        Ok(self.class_of[*i])
    }

    /// Whether every generator has determinant 1 (hence every element).
    pub fn all_determinants_one(&self) -> bool {
        self.generators.iter().all(|g| g.det().is_one())
    }

    /// Whether the group is abelian.
    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    /// Centre order and, when G/Z is abelian, its elementary divisors.
    pub fn center_structure(&self) -> Result<CenterStructure> {
        let center: Vec<usize> = self
            .classes
            .iter()
            .filter(|c| c.size == 1)
            .map(|c| c.representative)
            .collect();
        let center_order = center.len();
        let in_center = |f: &FastMatrix| {
            self.index
                .get(f)
                .is_some_and(|&i| self.classes[self.class_of[i]].size == 1)
        };
        let k = self.fast_gens.len();
        let mut abelian = true;
        for a in 0..k {
            for b in 0..k {
                let c = self.fast_inv[a]
                    .mul(&self.fast_inv[b], &self.ctx)?
                    .mul(&self.fast_gens[a], &self.ctx)?
                    .mul(&self.fast_gens[b], &self.ctx)?;
                abelian &= in_center(&c);
            }
        }
        if !abelian {
            return Ok(CenterStructure {
                center_order,
                quotient_invariants: None,
            });
        }
        let q = (self.order() / center_order) as u64;
        let mut invariants = Vec::new();
        for (p, e) in factorize(q) {
            // r_k = log_p |{x ∈ G/Z : x^{p^k} = 1}| / |{… p^{k−1} …}|.
            let mut counts = vec![1u64];
            for kk in 1..=e {
                let pk = p.pow(kk);
                let mut cnt = 0u64;
                for x in &self.elements {
                    if in_center(&x.pow(pk, &self.ctx)?) {
                        cnt += 1;
                    }
                }
                counts.push(cnt / center_order as u64);
            }
            let mut r = Vec::new();
            for kk in 1..=e as usize {
                let ratio = counts[kk] / counts[kk - 1];
                r.push(ratio.ilog(p) as usize);
            }
            r.push(0);
            for kk in 1..=e as usize {
                for _ in 0..(r[kk - 1] - r[kk]) {
                    invariants.push(p.pow(kk as u32));
                }
            }
        }
        invariants.sort_unstable();
        Ok(CenterStructure {
            center_order,
            quotient_invariants: Some(invariants),
        })
    }

    /// Histogram of element orders of the class representatives: order ↦ number of classes.
    pub fn class_order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.element_order).or_insert(0) += 1;
        }
        h
    }

    /// Traces of the class representatives (the natural character).
    pub fn natural_character(&self) -> Vec<Cyclotomic> {
        (0..self.classes.len())
            .map(|c| self.class_representative(c).trace())
            .collect()
    }
}

/// Parses a word like `f2*f1^-1*f2^3` against generator names; `1` is the empty word.
pub fn parse_word(word: &str, names: &[String]) -> Result<Vec<(usize, i64)>> {
    let word = word.trim();
    if word.is_empty() || word == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in word.split('*') {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in word token {tok:?}")))?;
                (n, e)
            }
            None => (tok, 1),
        };
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown generator {name:?} in word {word:?}")))?;
        out.push((g, exp));
    }
    Ok(out)
}

/// Rewrites the generator letters of a word through `map` (letters not in the map are kept).
pub fn rename_letters(word: &str, map: &BTreeMap<String, String>) -> String {
    let word = word.trim();
    if word.is_empty() || word == "1" {
        return word.to_string();
    }
    word.split('*')
        .map(|tok| {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, Some(e)),
                None => (tok, None),
            };
            let name = map.get(name).map_or(name, String::as_str);
            match exp {
                Some(e) => format!("{name}^{e}"),
                None => name.to_string(),
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
