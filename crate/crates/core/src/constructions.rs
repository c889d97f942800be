//! Derived semigroups: Rees quotients, 0-direct unions, Rees matrix semigroups
//! with zero, the `U(S, A)` extension by an act, null semigroups and principal
//! factors.

use std::collections::HashSet;

use serde::Serialize;

use crate::acts::Act;
use crate::error::{Error, Result};
use crate::green::principal_two_sided_ideals;
use crate::ideals::{ideal_witness, is_null_set, kernel};
use crate::semigroup::{fresh_label, FiniteSemigroup};
use crate::set::ElementSet;

/// A finite group: a semigroup whose table rows and columns are permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    semigroup: FiniteSemigroup,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn from_semigroup(s: FiniteSemigroup) -> Result<FiniteGroup> {
        let e = s
            .identity()
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(s.size());
        for g in s.elements() {
            let inv = s
                .elements()
                .find(|&h| s.mul(g, h) == e && s.mul(h, g) == e)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", s.label(g))))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            semigroup: s,
            inverse,
            identity: e,
        })
    }

    /// `Cₙ = {e, g, g^2, …}`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::NotAGroup("a group needs at least one element".into()));
        }
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{}", k),
            })
            .collect();
        let flat = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        FiniteGroup::from_semigroup(FiniteSemigroup::from_flat(labels, flat)?)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).expect("trivial group")
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn order(&self) -> usize {
        self.semigroup.size()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.semigroup.mul(g, h)
    }
}

/// Sandwich matrix entry: a group element or the zero marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SandwichEntry<G> {
    Group(G),
    Zero,
}

impl<G> SandwichEntry<G> {
    pub fn is_group(&self) -> bool {
        matches!(self, SandwichEntry::Group(_))
    }
}

/// Checks shape `J×I` and that every row and column holds a group entry.
pub(crate) fn check_sandwich<G>(rows: usize, cols: usize, p: &[Vec<SandwichEntry<G>>]) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::ShapeMismatch("index sets must be non-empty".into()));
    }
    if p.len() != cols || p.iter().any(|r| r.len() != rows) {
        return Err(Error::ShapeMismatch(format!(
            "sandwich matrix must be {}x{} (columns x rows)",
            cols, rows
        )));
    }
    if let Some(j) = p.iter().position(|r| !r.iter().any(SandwichEntry::is_group)) {
        return Err(Error::BadSandwichMatrix(format!("row {}", j + 1)));
    }
    if let Some(i) = (0..rows).find(|&i| !p.iter().any(|r| r[i].is_group())) {
        return Err(Error::BadSandwichMatrix(format!("column {}", i + 1)));
    }
    Ok(())
}

/// `M⁰(G; I, J; P)` with `|I| = rows`, `|J| = cols` and `P` indexed `[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixSpec {
    pub group: FiniteGroup,
    pub rows: usize,
    pub cols: usize,
    pub p: Vec<Vec<SandwichEntry<usize>>>,
}

impl ReesMatrixSpec {
    pub fn new(group: FiniteGroup, rows: usize, cols: usize, p: Vec<Vec<SandwichEntry<usize>>>) -> Result<Self> {
        check_sandwich(rows, cols, &p)?;
        if p.iter().flatten().any(|e| matches!(e, SandwichEntry::Group(g) if *g >= group.order())) {
            return Err(Error::ShapeMismatch("sandwich entry outside the group".into()));
        }
        Ok(ReesMatrixSpec { group, rows, cols, p })
    }

    /// Index of `(i, g, j)` (all 0-based) in the semigroup built by [`rees_matrix_zero`].
    pub fn index(&self, i: usize, g: usize, j: usize) -> usize {
        (i * self.group.order() + g) * self.cols + j
    }

    pub fn zero_index(&self) -> usize {
        self.rows * self.group.order() * self.cols
    }

    /// `(i, g, j)` of a non-zero index.
    pub fn triple(&self, x: usize) -> Option<(usize, usize, usize)> {
        if x >= self.zero_index() {
            return None;
        }
        let j = x % self.cols;
        let rest = x / self.cols;
        Some((rest / self.group.order(), rest % self.group.order(), j))
    }
}

/// Elements ordered by row index, then group element, then column index, with the zero last.
pub fn rees_matrix_zero(spec: &ReesMatrixSpec) -> Result<FiniteSemigroup> {
    check_sandwich(spec.rows, spec.cols, &spec.p)?;
    let g = &spec.group;
    let n = spec.zero_index() + 1;
    let zero = n - 1;
    let mut labels = Vec::with_capacity(n);
    for x in 0..zero {
        let (i, h, j) = spec.triple(x).expect("non-zero");
        labels.push(format!("({},{},{})", i + 1, g.semigroup().label(h), j + 1));
    }
    labels.push("0".to_string());
    let mut flat = vec![zero; n * n];
    for x in 0..zero {
        let (i, a, j) = spec.triple(x).expect("non-zero");
        for y in 0..zero {
            let (k, b, l) = spec.triple(y).expect("non-zero");
            if let SandwichEntry::Group(p) = spec.p[j][k] {
                flat[x * n + y] = spec.index(i, g.mul(g.mul(a, p), b), l);
            }
        }
    }
    FiniteSemigroup::from_flat(labels, flat)
}

/// `S/I` with the surjection from `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesQuotient {
    pub semigroup: FiniteSemigroup,
    /// Image in the quotient of each element of `S`.
    pub map: Vec<usize>,
    pub zero: usize,
}

/// Survivors keep their order; the collapsed ideal becomes the last element.
///
/// The zero keeps the label of `S`'s zero when that lies in `I`; otherwise it is
/// a fresh `0` (primed until unused).
pub fn rees_quotient(s: &FiniteSemigroup, i: &ElementSet) -> Result<ReesQuotient> {
    if i.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some((a, b)) = ideal_witness(s, i) {
        return Err(Error::NotAnIdeal(a, b));
    }
    let survivors: Vec<usize> = s.elements().filter(|&a| !i.contains(a)).collect();
    let zero = survivors.len();
    let mut map = vec![zero; s.size()];
    for (k, &a) in survivors.iter().enumerate() {
        map[a] = k;
    }
    let mut labels: Vec<String> = survivors.iter().map(|&a| s.label(a).to_string()).collect();
    let zero_label = match s.zero() {
        Some(z) if i.contains(z) => s.label(z).to_string(),
        _ => {
            let taken: HashSet<&str> = s.labels().iter().map(String::as_str).collect();
            fresh_label("0", &taken)
        }
    };
    labels.push(zero_label);
    let n = zero + 1;
    let mut flat = vec![zero; n * n];
    for (x, &a) in survivors.iter().enumerate() {
        for (y, &b) in survivors.iter().enumerate() {
            flat[x * n + y] = map[s.mul(a, b)];
        }
    }
    Ok(ReesQuotient {
        semigroup: FiniteSemigroup::from_flat(labels, flat)?,
        map,
        zero,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDirectUnion {
    pub semigroup: FiniteSemigroup,
    /// For each part, the image of each of its elements.
    pub embeddings: Vec<Vec<usize>>,
}

/// Zeros are identified (index 0); non-zero elements follow part by part. When
/// labels collide across parts, part `k` gets the suffix `_k` (1-based).
pub fn zero_direct_union(parts: &[FiniteSemigroup]) -> Result<ZeroDirectUnion> {
    if parts.is_empty() {
        return Err(Error::EmptySubset);
    }
    let zeros: Vec<usize> = parts
        .iter()
        .enumerate()
        .map(|(k, p)| p.zero().ok_or(Error::MissingZero(k)))
        .collect::<Result<_>>()?;
    if parts.len() == 1 {
        return Ok(ZeroDirectUnion {
            semigroup: parts[0].clone(),
            embeddings: vec![parts[0].elements().collect()],
        });
    }
    let mut seen = HashSet::new();
    let collide = parts.iter().zip(&zeros).any(|(p, &z)| {
        p.elements()
            .filter(|&a| a != z)
            .any(|a| !seen.insert(p.label(a).to_string()))
    });
    let mut labels = vec![parts[0].label(zeros[0]).to_string()];
    let mut embeddings = Vec::with_capacity(parts.len());
    for (k, (p, &z)) in parts.iter().zip(&zeros).enumerate() {
        let mut emb = vec![0; p.size()];
        for a in p.elements().filter(|&a| a != z) {
            emb[a] = labels.len();
            labels.push(if collide {
                format!("{}_{}", p.label(a), k + 1)
            } else {
                p.label(a).to_string()
            });
        }
        embeddings.push(emb);
    }
    if labels[1..].contains(&labels[0]) {
        let taken: HashSet<&str> = labels[1..].iter().map(String::as_str).collect();
        labels[0] = fresh_label("0", &taken);
    }
    let n = labels.len();
    let mut flat = vec![0; n * n];
    for (p, emb) in parts.iter().zip(&embeddings) {
        for a in p.elements() {
            for b in p.elements() {
                flat[emb[a] * n + emb[b]] = emb[p.mul(a, b)];
            }
        }
    }
    Ok(ZeroDirectUnion {
        semigroup: FiniteSemigroup::from_flat(labels, flat)?,
        embeddings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UConstruction {
    pub semigroup: FiniteSemigroup,
    /// Image of each element of `S`.
    pub s_embedding: Vec<usize>,
    /// `a ↦ x_a`.
    pub x_map: Vec<usize>,
    pub zero: usize,
}

impl UConstruction {
    /// `{x_a : a ∈ A} ∪ {0}`.
    pub fn x_ideal(&self) -> ElementSet {
        let mut set = self.semigroup.set_of(self.x_map.iter().copied());
        set.insert(self.zero);
        set
    }
}

/// `U(S, A) = S ∪ {x_a} ∪ {0}` with `x_a s = x_{as}` and all other mixed products 0.
/// A label `x_a` already used in `S` gets primes appended.
pub fn u_construction(s: &FiniteSemigroup, act: &Act) -> Result<UConstruction> {
    if act.semigroup_size() != s.size() {
        return Err(Error::ActMismatch(format!(
            "act is over a semigroup of size {}, not {}",
            act.semigroup_size(),
            s.size()
        )));
    }
    for a in 0..act.len() {
        for x in s.elements() {
            for y in s.elements() {
                if act.apply(act.apply(a, x), y) != act.apply(a, s.mul(x, y)) {
                    return Err(Error::ActMismatch(format!(
                        "{}.({}{}) differs from ({}.{}).{}",
                        act.label(a),
                        s.label(x),
                        s.label(y),
                        act.label(a),
                        s.label(x),
                        s.label(y)
                    )));
                }
            }
        }
    }
    let n = s.size();
    let m = act.len();
    let size = n + m + 1;
    let zero = size - 1;
    let mut labels: Vec<String> = s.labels().to_vec();
    for a in 0..m {
        let taken: HashSet<&str> = labels.iter().map(String::as_str).collect();
        let xl = fresh_label(&format!("x_{}", act.label(a)), &taken);
        labels.push(xl);
    }
    let taken: HashSet<&str> = labels.iter().map(String::as_str).collect();
    let zl = fresh_label("0", &taken);
    labels.push(zl);
    let mut flat = vec![zero; size * size];
    for x in 0..n {
        for y in 0..n {
            flat[x * size + y] = s.mul(x, y);
        }
    }
    for a in 0..m {
        for y in 0..n {
            flat[(n + a) * size + y] = n + act.apply(a, y);
        }
    }
    Ok(UConstruction {
        semigroup: FiniteSemigroup::from_flat(labels, flat)?,
        s_embedding: (0..n).collect(),
        x_map: (n..n + m).collect(),
        zero,
    })
}

/// `{0, u1, …, uk}` with all products 0 (`{0, u}` for `k = 1`).
pub fn null_semigroup(k: usize) -> FiniteSemigroup {
    let mut labels = vec!["0".to_string()];
    if k == 1 {
        labels.push("u".into());
    } else {
        labels.extend((1..=k).map(|i| format!("u{}", i)));
    }
    let n = k + 1;
    FiniteSemigroup::from_flat(labels, vec![0; n * n]).expect("null semigroup")
}

pub fn left_zero(n: usize) -> Result<FiniteSemigroup> {
    let labels = (1..=n).map(|i| format!("l{}", i)).collect();
    FiniteSemigroup::from_flat(labels, (0..n * n).map(|x| x / n).collect())
}

pub fn right_zero(n: usize) -> Result<FiniteSemigroup> {
    let labels = (1..=n).map(|i| format!("r{}", i)).collect();
    FiniteSemigroup::from_flat(labels, (0..n * n).map(|x| x % n).collect())
}

/// The semilattice `0 < 1 < … < n-1` under minimum.
pub fn chain(n: usize) -> Result<FiniteSemigroup> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteSemigroup::from_flat(labels, (0..n * n).map(|x| (x / n).min(x % n)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorTag {
    Kernel,
    ZeroSimple,
    Null,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalFactor {
    pub semigroup: FiniteSemigroup,
    pub tag: FactorTag,
    /// The J-class of the chosen element.
    pub class: ElementSet,
    /// Image in the factor of each element of `S¹aS¹`.
    pub map: Vec<Option<usize>>,
}

pub fn principal_factor(s: &FiniteSemigroup, a: usize) -> PrincipalFactor {
    principal_factor_with(s, a, &principal_two_sided_ideals(s), &kernel(s))
}

/// [`principal_factor`] given every `S¹bS¹` and the kernel.
pub(crate) fn principal_factor_with(s: &FiniteSemigroup, a: usize, ideals: &[ElementSet], k: &ElementSet) -> PrincipalFactor {
    let ideal = &ideals[a];
    let class = s.set_of(ideal.iter().filter(|&b| ideals[b] == *ideal));
    if class == *k {
        let (sg, members) = s.restrict(k).expect("the kernel is a subsemigroup");
        let mut map = vec![None; s.size()];
        for (idx, &m) in members.iter().enumerate() {
            map[m] = Some(idx);
        }
        return PrincipalFactor {
            semigroup: sg,
            tag: FactorTag::Kernel,
            class,
            map,
        };
    }
    let (p, members) = s.restrict(ideal).expect("principal ideals are subsemigroups");
    let below = p.set_of((0..members.len()).filter(|&x| !class.contains(members[x])));
    let q = rees_quotient(&p, &below).expect("the part below a J-class is an ideal");
    let mut map = vec![None; s.size()];
    for (idx, &m) in members.iter().enumerate() {
        map[m] = Some(q.map[idx]);
    }
    let tag = if is_null_set(&q.semigroup, &q.semigroup.all()) {
        FactorTag::Null
    } else {
        FactorTag::ZeroSimple
    };
    PrincipalFactor {
        semigroup: q.semigroup,
        tag,
        class,
        map,
    }
}

/// `U = S ∪ T ∪ {x}` over a shared zero, extending the products of `S` and `T`
/// by `sx = x` for non-zero `s ∈ S`, every other mixed product being 0.
///
/// Elements of `S` are prefixed `s`, those of `T` prefixed `t`; the order is
/// `S∖0`, `T∖0`, `x`, `0`. Fails with `NonAssociative` unless the non-zero part
/// of `S` is closed under multiplication.
pub fn x_extension(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let zs = s.zero().ok_or(Error::MissingZero(0))?;
    let zt = t.zero().ok_or(Error::MissingZero(1))?;
    let s_el: Vec<usize> = s.elements().filter(|&a| a != zs).collect();
    let t_el: Vec<usize> = t.elements().filter(|&a| a != zt).collect();
    let ns = s_el.len();
    let nt = t_el.len();
    let x = ns + nt;
    let zero = x + 1;
    let size = zero + 1;
    let mut s_map = vec![zero; s.size()];
    for (k, &a) in s_el.iter().enumerate() {
        s_map[a] = k;
    }
    let mut t_map = vec![zero; t.size()];
    for (k, &a) in t_el.iter().enumerate() {
        t_map[a] = ns + k;
    }
    let mut labels: Vec<String> = s_el.iter().map(|&a| format!("s{}", s.label(a))).collect();
    labels.extend(t_el.iter().map(|&a| format!("t{}", t.label(a))));
    labels.push("x".into());
    labels.push("0".into());
    let mut rows = vec![vec![zero; size]; size];
    for &a in &s_el {
        for &b in &s_el {
            rows[s_map[a]][s_map[b]] = s_map[s.mul(a, b)];
        }
        rows[s_map[a]][x] = x;
    }
    for &a in &t_el {
        for &b in &t_el {
            rows[t_map[a]][t_map[b]] = t_map[t.mul(a, b)];
        }
    }
    FiniteSemigroup::from_table(labels, rows, Some(zero), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{
        generated_right_ideal, is_globally_idempotent, is_ideal, zero_minimal_right_ideals,
    };

    #[test]
    fn nested_u_construction_relabels() {
        let t = FiniteGroup::trivial().semigroup().clone();
        let u = u_construction(&t, &Act::one_point(&t)).unwrap().semigroup;
        let uu = u_construction(&u, &Act::one_point(&u)).unwrap().semigroup;
        assert_eq!(uu.labels(), &["e", "x_a", "0", "x_a′", "0′"]);
    }

    fn c2_spec(p: [[Option<usize>; 2]; 2]) -> ReesMatrixSpec {
        let entries = p
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(SandwichEntry::Zero, SandwichEntry::Group))
                    .collect()
            })
            .collect();
        ReesMatrixSpec::new(FiniteGroup::cyclic(2).unwrap(), 2, 2, entries).unwrap()
    }

    #[test]
    fn rees_matrix_nine_elements() {
        let spec = c2_spec([[Some(0), None], [None, Some(0)]]);
        let m = rees_matrix_zero(&spec).unwrap();
        assert_eq!(m.size(), 9);
        assert!(m.associativity_witness().is_none());
        assert_eq!(m.zero(), Some(8));
        let zm = zero_minimal_right_ideals(&m).unwrap();
        assert_eq!(zm.len(), 2);
        for r in &zm {
            assert_eq!(r.len(), 5);
            assert!(is_globally_idempotent(&m, r));
        }
        // R_1 = {1} x G x J ∪ {0}
        let spec_ref = &spec;
        let r1 = m.set_of((0..2).flat_map(|g| (0..2).map(move |j| spec_ref.index(0, g, j))).chain([8]));
        assert_eq!(zm[0], r1);
        assert_eq!(generated_right_ideal(&m, &m.set_of([spec.index(0, 0, 0)])).unwrap(), r1);
        assert_eq!(m.label(0), "(1,e,1)");
    }

    #[test]
    fn rees_matrix_degenerate_and_bad() {
        let spec = ReesMatrixSpec::new(FiniteGroup::trivial(), 1, 1, vec![vec![SandwichEntry::Group(0)]]).unwrap();
        let m = rees_matrix_zero(&spec).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.mul(0, 0), 0);
        let bad = ReesMatrixSpec::new(FiniteGroup::cyclic(2).unwrap(), 1, 1, vec![vec![SandwichEntry::Zero]]);
        assert!(matches!(bad, Err(Error::BadSandwichMatrix(_))));
    }

    #[test]
    fn quotients() {
        let c = chain(2).unwrap();
        let q = rees_quotient(&c, &c.set_of([0])).unwrap();
        assert_eq!(q.semigroup.size(), 2);
        assert_eq!(q.semigroup.label(q.zero), "0");
        assert_eq!(q.semigroup.rows(), vec![vec![0, 1], vec![1, 1]]);
        let c0 = FiniteGroup::cyclic(2).unwrap().semigroup().adjoin_zero();
        let q = rees_quotient(&c0, &c0.set_of([2])).unwrap();
        assert_eq!(q.semigroup, c0);
        let lz = left_zero(2).unwrap();
        assert_eq!(rees_quotient(&lz, &lz.set_of([0])).unwrap_err(), Error::NotAnIdeal(1, 0));
    }

    #[test]
    fn direct_unions() {
        let u = zero_direct_union(&[null_semigroup(1), null_semigroup(1)]).unwrap();
        assert_eq!(u.semigroup.size(), 3);
        assert_eq!(u.semigroup.labels(), &["0", "u_1", "u_2"]);
        assert!(is_null_set(&u.semigroup, &u.semigroup.all()));
        let c0 = FiniteGroup::cyclic(2).unwrap().semigroup().adjoin_zero();
        assert_eq!(zero_direct_union(std::slice::from_ref(&c0)).unwrap().semigroup, c0);
        let two = zero_direct_union(&[c0.clone(), c0.clone()]).unwrap();
        assert_eq!(two.semigroup.size(), 5);
        for emb in &two.embeddings {
            let part = two.semigroup.set_of(emb.iter().copied());
            assert!(is_ideal(&two.semigroup, &part));
        }
        assert_eq!(
            zero_direct_union(&[c0, left_zero(2).unwrap()]).unwrap_err(),
            Error::MissingZero(1)
        );
    }

    #[test]
    fn null_semigroups() {
        assert_eq!(null_semigroup(0).size(), 1);
        assert_eq!(null_semigroup(1).labels(), &["0", "u"]);
        let n5 = null_semigroup(5);
        assert_eq!(n5.size(), 6);
        assert_eq!(n5.product_set(&n5.all(), &n5.all()).to_vec(), vec![0]);
    }

    #[test]
    fn principal_factors() {
        let c = chain(2).unwrap();
        let f0 = principal_factor(&c, 0);
        assert_eq!(f0.tag, FactorTag::Kernel);
        assert_eq!(f0.semigroup.size(), 1);
        let f1 = principal_factor(&c, 1);
        assert_eq!(f1.tag, FactorTag::ZeroSimple);
        assert_eq!(f1.semigroup.size(), 2);
        let n = null_semigroup(1);
        let fu = principal_factor(&n, 1);
        assert_eq!(fu.tag, FactorTag::Null);
        assert_eq!(fu.semigroup.size(), 2);
    }

    #[test]
    fn u_construction_trivial() {
        let s = FiniteGroup::trivial().semigroup().clone();
        let act = Act::one_point(&s);
        let u = u_construction(&s, &act).unwrap();
        assert_eq!(u.semigroup.size(), 3);
        let (e, xa, z) = (0, 1, 2);
        assert_eq!(u.semigroup.mul(e, e), e);
        assert_eq!(u.semigroup.mul(xa, e), xa);
        assert_eq!(u.semigroup.mul(e, xa), z);
        assert_eq!(u.semigroup.mul(xa, xa), z);
        assert!(u.semigroup.associativity_witness().is_none());
    }

    #[test]
    fn u_construction_regular_c2() {
        let s = FiniteGroup::cyclic(2).unwrap().semigroup().clone();
        let act = Act::regular(&s);
        let u = u_construction(&s, &act).unwrap();
        assert_eq!(u.semigroup.size(), 5);
        assert!(u.semigroup.associativity_witness().is_none());
        for g in 0..2 {
            for h in 0..2 {
                assert_eq!(u.semigroup.mul(u.x_map[g], h), u.x_map[s.mul(g, h)]);
            }
        }
        let x = u.x_ideal();
        assert!(is_ideal(&u.semigroup, &x));
        assert!(is_null_set(&u.semigroup, &x));
    }

    #[test]
    fn x_extension_needs_closed_nonzero_part() {
        let t = rees_matrix_zero(&c2_spec([[Some(0), None], [None, Some(0)]])).unwrap();
        let s = rees_matrix_zero(&c2_spec([[Some(0), Some(0)], [Some(0), Some(0)]])).unwrap();
        let u = x_extension(&s, &t).unwrap();
        assert_eq!(u.size(), 18);
        assert!(matches!(x_extension(&t, &s), Err(Error::NonAssociative(..))));
    }
}
