//! Finite semigroups given by a multiplication table.
//!
//! Elements are the dense indices `0..size`; labels are for display only.
//! Row `i` of the table holds the products `i * j` (row = left factor).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest carrier accepted by any constructor.
pub const MAX_SIZE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    table: Vec<u16>,
    zero: Option<usize>,
    identity: Option<usize>,
}

/// Per-element regularity witnesses: `witnesses[a] = Some(b)` with `aba = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub regular: bool,
    pub witnesses: Vec<Option<usize>>,
}

impl RegularityReport {
    /// Smallest element with no regularity witness.
    pub fn first_irregular(&self) -> Option<usize> {
        self.witnesses.iter().position(Option::is_none)
    }
}

/// Returns `base`, or `base` followed by enough primes to avoid every taken label.
pub(crate) fn fresh_label(base: &str, taken: &HashSet<&str>) -> String {
    let mut label = base.to_string();
    while taken.contains(label.as_str()) {
        label.push('\u{2032}');
    }
    label
}

impl FiniteSemigroup {
    /// Builds and fully validates a semigroup from a table of element indices.
    ///
    /// A zero or identity that is not supplied is detected automatically (each is
    /// unique when it exists); a supplied one is checked.
    pub fn from_table(
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        zero: Option<usize>,
        identity: Option<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if table.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} labels but {} rows",
                n,
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                flat.push(v);
            }
        }
        let s = Self::from_flat(labels, flat)?;
        if let Some((i, j, k)) = s.associativity_witness() {
            return Err(Error::NonAssociative(i, j, k));
        }
        if let Some(z) = zero {
            if z >= n || !s.is_zero_element(z) {
                return Err(Error::BadZero(z));
            }
        }
        if let Some(e) = identity {
            if e >= n || !s.is_identity_element(e) {
                return Err(Error::BadIdentity(e));
            }
        }
        Ok(s)
    }

    /// Builds a semigroup without checking associativity.
    ///
    /// Used by constructions that are associative by construction, and by the
    /// verification harness to inject deliberately broken tables.
    pub fn from_table_unchecked(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("table is not square".into()));
        }
        let flat = table.into_iter().flatten().collect();
        Self::from_flat(labels, flat)
    }

    pub(crate) fn from_flat(labels: Vec<String>, flat: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::ShapeMismatch("a semigroup needs at least one element".into()));
        }
        if n > MAX_SIZE {
            return Err(Error::SizeLimit(n));
        }
        if flat.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries, found {}",
                n * n,
                flat.len()
            )));
        }
        if let Some(pos) = flat.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: flat[pos],
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut s = FiniteSemigroup {
            labels,
            table: flat.into_iter().map(|v| v as u16).collect(),
            zero: None,
            identity: None,
        };
        s.zero = (0..n).find(|&z| s.is_zero_element(z));
        s.identity = (0..n).find(|&e| s.is_identity_element(e));
        Ok(s)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, elements: I) -> ElementSet {
        ElementSet::from_elements(self.size(), elements)
    }

    /// Looks up labels and returns the corresponding set; `None` on an unknown label.
    pub fn set_of_labels<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Option<ElementSet> {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.index_of(l)?);
        }
        Some(set)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.mul(i, j)).collect()).collect()
    }

    fn is_zero_element(&self, z: usize) -> bool {
        self.elements().all(|i| self.mul(z, i) == z && self.mul(i, z) == z)
    }

    fn is_identity_element(&self, e: usize) -> bool {
        self.elements().all(|i| self.mul(e, i) == i && self.mul(i, e) == i)
    }

    /// First triple (in lexicographic order) violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Light's test: associativity need only be checked against a generating set.
    fn associativity_witness_with_generators(&self, gens: &[usize]) -> Option<(usize, usize, usize)> {
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.mul(i, j);
                for &g in gens {
                    if self.mul(ij, g) != self.mul(i, self.mul(j, g)) {
                        return Some((i, j, g));
                    }
                }
            }
        }
        None
    }

    /// The opposite semigroup (`a * b` becomes `b * a`), with the same labels.
    pub fn dual(&self) -> FiniteSemigroup {
        let n = self.size();
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(self.mul(j, i));
            }
        }
        FiniteSemigroup::from_flat(self.labels.clone(), flat).expect("dual of a valid table")
    }

    /// The subsemigroup on `set` as a semigroup in its own right.
    ///
    /// Returns the restricted semigroup and the map from its indices back to ours.
    pub fn restrict(&self, set: &ElementSet) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let members = set.to_vec();
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut index = vec![usize::MAX; self.size()];
        for (k, &m) in members.iter().enumerate() {
            index[m] = k;
        }
        let mut flat = Vec::with_capacity(members.len() * members.len());
        for &a in &members {
            for &b in &members {
                let ab = self.mul(a, b);
                if index[ab] == usize::MAX {
                    return Err(Error::NotASubsemigroup(a, b));
                }
                flat.push(index[ab]);
            }
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        Ok((FiniteSemigroup::from_flat(labels, flat)?, members))
    }

    /// `S¹`: returns a clone when an identity already exists.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.size();
        let taken: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        let mut labels = self.labels.clone();
        labels.push(fresh_label("1", &taken));
        let mut flat = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..=n {
            for j in 0..=n {
                flat.push(match (i == n, j == n) {
                    (true, _) => j,
                    (_, true) => i,
                    _ => self.mul(i, j),
                });
            }
        }
        FiniteSemigroup::from_flat(labels, flat).expect("adjoining an identity")
    }

    /// `S⁰`: returns a clone when a zero already exists.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        if self.zero.is_some() {
            return self.clone();
        }
        let n = self.size();
        let taken: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        let mut labels = self.labels.clone();
        labels.push(fresh_label("0", &taken));
        let mut flat = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..=n {
            for j in 0..=n {
                flat.push(if i == n || j == n { n } else { self.mul(i, j) });
            }
        }
        FiniteSemigroup::from_flat(labels, flat).expect("adjoining a zero")
    }

    /// `{xy : x ∈ X, y ∈ Y}`.
    pub fn product_set(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for a in x.iter() {
            for b in y.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// The subsemigroup generated by `x`.
    pub fn closure(&self, x: &ElementSet) -> Result<ElementSet> {
        if x.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let gens = x.to_vec();
        let mut out = x.clone();
        let mut queue: VecDeque<usize> = gens.iter().copied().collect();
        // right Cayley closure: every product of generators is reached
        while let Some(a) = queue.pop_front() {
            for &g in &gens {
                let ag = self.mul(a, g);
                if out.insert(ag) {
                    queue.push_back(ag);
                }
            }
        }
        Ok(out)
    }

    /// Semigroup generated by transformations of `{0..k-1}` (images listed per point).
    ///
    /// Maps act on the right: `x · f · g = g(f(x))`, so the product `f * g` first
    /// applies `f`. Two constant maps therefore generate a right zero semigroup.
    pub fn from_transformations(k: usize, maps: &[Vec<usize>]) -> Result<FiniteSemigroup> {
        Self::from_transformations_capped(k, maps, MAX_SIZE)?.ok_or(Error::SizeLimit(MAX_SIZE + 1))
    }

    /// As [`from_transformations`](Self::from_transformations), but gives up with
    /// `Ok(None)` once more than `cap` elements have been generated.
    pub fn from_transformations_capped(
        k: usize,
        maps: &[Vec<usize>],
        cap: usize,
    ) -> Result<Option<FiniteSemigroup>> {
        if maps.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if k == 0 {
            return Err(Error::BadTransformation("domain must be non-empty".into()));
        }
        for m in maps {
            if m.len() != k || m.iter().any(|&p| p >= k) {
                return Err(Error::BadTransformation(format!("{:?} is not a map on {} points", m, k)));
            }
        }
        let cap = cap.min(MAX_SIZE);
        let mut elements: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        // parent[e] = (prefix element, generator index) with e = prefix * gen
        let mut parent: Vec<Option<(usize, usize)>> = Vec::new();
        let mut gen_index = Vec::with_capacity(maps.len());
        for m in maps {
            let id = *index.entry(m.clone()).or_insert_with(|| {
                elements.push(m.clone());
                parent.push(None);
                elements.len() - 1
            });
            gen_index.push(id);
        }
        let mut right_cayley: Vec<Vec<usize>> = Vec::new();
        let mut next = 0;
        while next < elements.len() {
            if elements.len() > cap {
                return Ok(None);
            }
            let e = elements[next].clone();
            let mut row = Vec::with_capacity(maps.len());
            for (gi, g) in maps.iter().enumerate() {
                let prod: Vec<usize> = e.iter().map(|&x| g[x]).collect();
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        elements.push(prod.clone());
                        parent.push(Some((next, gi)));
                        index.insert(prod, elements.len() - 1);
                        elements.len() - 1
                    }
                };
                row.push(id);
            }
            right_cayley.push(row);
            next += 1;
        }
        if elements.len() > cap {
            return Ok(None);
        }
        let n = elements.len();
        let mut flat = vec![0usize; n * n];
        for i in 0..n {
            // elements were discovered in BFS order, so prefixes come first
            for j in 0..n {
                let v = match parent[j] {
                    None => {
                        let gi = gen_index.iter().position(|&g| g == j).expect("generator");
                        right_cayley[i][gi]
                    }
                    Some((p, gi)) => right_cayley[flat[i * n + p]][gi],
                };
                flat[i * n + j] = v;
            }
        }
        let labels = elements
            .iter()
            .map(|e| {
                let imgs: Vec<String> = e.iter().map(|x| (x + 1).to_string()).collect();
                format!("[{}]", imgs.join(" "))
            })
            .collect();
        let s = FiniteSemigroup::from_flat(labels, flat)?;
        let mut gens = gen_index.clone();
        gens.sort_unstable();
        gens.dedup();
        if let Some((i, j, k)) = s.associativity_witness_with_generators(&gens) {
            return Err(Error::NonAssociative(i, j, k));
        }
        Ok(Some(s))
    }

    pub fn is_regular_element(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.mul(self.mul(a, b), a) == a)
    }

    pub fn regularity(&self) -> RegularityReport {
        let witnesses: Vec<Option<usize>> = self.elements().map(|a| self.is_regular_element(a)).collect();
        RegularityReport {
            regular: witnesses.iter().all(Option::is_some),
            witnesses,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|a| self.is_regular_element(a).is_some())
    }

    pub fn idempotents(&self) -> ElementSet {
        self.set_of(self.elements().filter(|&e| self.mul(e, e) == e))
    }

    /// True iff `a ∈ aS`.
    pub fn has_local_right_identity(&self, a: usize) -> bool {
        self.elements().any(|s| self.mul(a, s) == a)
    }
}
