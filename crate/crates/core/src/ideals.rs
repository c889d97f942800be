//! Ideals of finite semigroups: principal and generated ideals, minimal and
//! 0-minimal ideals, the kernel, socles and structural classification.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::constructions::{principal_factor_with, FactorTag};
use crate::error::{Error, Result};
use crate::green::{principal_left_ideals, principal_right_ideals, principal_two_sided_ideals};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

/// One verified clause of a structure theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

impl Clause {
    fn new(name: &str, failure: Option<String>) -> Clause {
        Clause {
            name: name.to_string(),
            holds: failure.is_none(),
            witness: failure,
        }
    }
}

pub fn all_hold(clauses: &[Clause]) -> bool {
    clauses.iter().all(|c| c.holds)
}

pub fn principal_right_ideal(s: &FiniteSemigroup, a: usize) -> ElementSet {
    let mut set = s.set_of(s.elements().map(|x| s.mul(a, x)));
    set.insert(a);
    set
}

pub fn principal_left_ideal(s: &FiniteSemigroup, a: usize) -> ElementSet {
    let mut set = s.set_of(s.elements().map(|x| s.mul(x, a)));
    set.insert(a);
    set
}

pub fn principal_ideal(s: &FiniteSemigroup, a: usize) -> ElementSet {
    let r = principal_right_ideal(s, a);
    let mut out = r.clone();
    for x in r.iter() {
        out.union_with(&principal_left_ideal(s, x));
    }
    out
}

/// `XS¹`.
pub fn generated_right_ideal(s: &FiniteSemigroup, x: &ElementSet) -> Result<ElementSet> {
    if x.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(x.union(&s.product_set(x, &s.all())))
}

/// `S¹X`.
pub fn generated_left_ideal(s: &FiniteSemigroup, x: &ElementSet) -> Result<ElementSet> {
    if x.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(x.union(&s.product_set(&s.all(), x)))
}

/// `S¹XS¹`.
pub fn generated_ideal(s: &FiniteSemigroup, x: &ElementSet) -> Result<ElementSet> {
    let r = generated_right_ideal(s, x)?;
    generated_left_ideal(s, &r)
}

/// First pair `(a, t)` with `a ∈ I` and `at ∉ I`.
pub fn right_ideal_witness(s: &FiniteSemigroup, i: &ElementSet) -> Option<(usize, usize)> {
    i.iter()
        .flat_map(|a| s.elements().map(move |t| (a, t)))
        .find(|&(a, t)| !i.contains(s.mul(a, t)))
}

/// First pair `(t, a)` with `a ∈ I` and `ta ∉ I`.
pub fn left_ideal_witness(s: &FiniteSemigroup, i: &ElementSet) -> Option<(usize, usize)> {
    s.elements()
        .flat_map(|t| i.iter().map(move |a| (t, a)))
        .find(|&(t, a)| !i.contains(s.mul(t, a)))
}

/// First violating product for two-sided absorption, in product order.
pub fn ideal_witness(s: &FiniteSemigroup, i: &ElementSet) -> Option<(usize, usize)> {
    right_ideal_witness(s, i).or_else(|| left_ideal_witness(s, i))
}

pub fn is_right_ideal(s: &FiniteSemigroup, i: &ElementSet) -> bool {
    !i.is_empty() && right_ideal_witness(s, i).is_none()
}

pub fn is_left_ideal(s: &FiniteSemigroup, i: &ElementSet) -> bool {
    !i.is_empty() && left_ideal_witness(s, i).is_none()
}

pub fn is_ideal(s: &FiniteSemigroup, i: &ElementSet) -> bool {
    !i.is_empty() && ideal_witness(s, i).is_none()
}

pub fn is_subsemigroup(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    subsemigroup_witness(s, a).is_none()
}

fn subsemigroup_witness(s: &FiniteSemigroup, a: &ElementSet) -> Option<(usize, usize)> {
    a.iter()
        .flat_map(|x| a.iter().map(move |y| (x, y)))
        .find(|&(x, y)| !a.contains(s.mul(x, y)))
}

fn power(s: &FiniteSemigroup, a: &ElementSet, m: usize) -> ElementSet {
    let mut p = a.clone();
    for _ in 1..m {
        p = s.product_set(&p, a);
    }
    p
}

/// Least element of `AᵐSAⁿ` outside `A`, if any.
pub fn mn_ideal_witness(s: &FiniteSemigroup, a: &ElementSet, m: usize, n: usize) -> Result<Option<usize>> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if m == 0 || n == 0 {
        return Err(Error::PreconditionFailed("m and n must be positive".into()));
    }
    if let Some((x, y)) = subsemigroup_witness(s, a) {
        return Err(Error::NotASubsemigroup(x, y));
    }
    let left = s.product_set(&power(s, a, m), &s.all());
    let full = s.product_set(&left, &power(s, a, n));
    Ok(full.difference(a).first())
}

pub fn is_mn_ideal(s: &FiniteSemigroup, a: &ElementSet, m: usize, n: usize) -> Result<bool> {
    Ok(mn_ideal_witness(s, a, m, n)?.is_none())
}

fn minimal_among(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = sets
        .iter()
        .filter(|x| !sets.iter().any(|y| y.is_subset(x) && y != *x))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every minimal right ideal is principal, so these are the minimal sets `aS¹`.
pub fn minimal_right_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    minimal_among(&principal_right_ideals(s))
}

pub fn minimal_left_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    minimal_among(&principal_left_ideals(s))
}

/// A finite semigroup has exactly one minimal ideal, its kernel.
pub fn minimal_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    vec![kernel(s)]
}

fn zero_minimal_among(s: &FiniteSemigroup, principal: &[ElementSet]) -> Result<Vec<ElementSet>> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let mut out: Vec<ElementSet> = s
        .elements()
        .filter(|&a| a != z)
        .map(|a| &principal[a])
        .filter(|p| p.iter().filter(|&b| b != z).all(|b| principal[b] == **p))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// 0-minimal right ideals: the sets `aS¹` (a ≠ 0) generated by each of their non-zero elements.
pub fn zero_minimal_right_ideals(s: &FiniteSemigroup) -> Result<Vec<ElementSet>> {
    zero_minimal_among(s, &principal_right_ideals(s))
}

pub fn zero_minimal_left_ideals(s: &FiniteSemigroup) -> Result<Vec<ElementSet>> {
    zero_minimal_among(s, &principal_left_ideals(s))
}

pub fn zero_minimal_ideals(s: &FiniteSemigroup) -> Result<Vec<ElementSet>> {
    let principal: Vec<ElementSet> = s.elements().map(|a| principal_ideal(s, a)).collect();
    zero_minimal_among(s, &principal)
}

pub fn zero_minimal_one_sided(s: &FiniteSemigroup, side: Side) -> Result<Vec<ElementSet>> {
    match side {
        Side::Right => zero_minimal_right_ideals(s),
        Side::Left => zero_minimal_left_ideals(s),
    }
}

/// Intersection of all principal two-sided ideals.
pub fn kernel(s: &FiniteSemigroup) -> ElementSet {
    let mut k = s.all();
    for a in s.elements() {
        k = k.intersection(&principal_ideal(s, a));
    }
    k
}

pub fn is_globally_idempotent(s: &FiniteSemigroup, r: &ElementSet) -> bool {
    s.product_set(r, r) == *r
}

/// True iff `X·X ⊆ {0}`; false when there is no zero.
pub fn is_null_set(s: &FiniteSemigroup, x: &ElementSet) -> bool {
    match s.zero() {
        Some(z) => s.product_set(x, x).is_subset(&s.set_of([z])),
        None => false,
    }
}

/// Elements `a ∈ R∖{0}` with `aR = 0`.
pub fn annihilator_set(s: &FiniteSemigroup, r: &ElementSet) -> Result<ElementSet> {
    let z = s.zero().ok_or(Error::NoZero)?;
    Ok(s.set_of(r.iter().filter(|&a| a != z && r.iter().all(|b| s.mul(a, b) == z))))
}

/// Checks that `parts` form a 0-disjoint union of subsemigroups covering `whole`.
fn zero_disjoint_failure(s: &FiniteSemigroup, whole: &ElementSet, parts: &[&ElementSet]) -> Option<String> {
    let z = s.zero()?;
    let mut union = s.set_of([z]);
    for (k, p) in parts.iter().enumerate() {
        if !p.contains(z) {
            return Some(format!("part {} misses 0", k));
        }
        if let Some((x, y)) = subsemigroup_witness(s, p) {
            return Some(format!("part {} not closed: {}*{}", k, s.label(x), s.label(y)));
        }
        for q in &parts[k + 1..] {
            let common = p.intersection(q);
            let shared = common.iter().find(|&x| x != z);
            if let Some(x) = shared {
                return Some(format!("parts overlap in {}", s.label(x)));
            }
        }
        union.union_with(p);
    }
    if union != *whole {
        return Some(format!("union {:?} differs from {:?}", union, whole));
    }
    None
}

/// First cross product between distinct parts that is not 0.
pub fn zero_direct_witness(s: &FiniteSemigroup, parts: &[ElementSet]) -> Option<(usize, usize)> {
    let z = s.zero()?;
    for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate() {
            if i == j {
                continue;
            }
            for a in p.iter() {
                for b in q.iter() {
                    if s.mul(a, b) != z {
                        return Some((a, b));
                    }
                }
            }
        }
    }
    None
}

/// True iff `X²≠0` and the only ideals of the restricted semigroup are `{0}` and itself.
pub fn is_zero_simple_subset(s: &FiniteSemigroup, x: &ElementSet) -> bool {
    match s.restrict(x) {
        Ok((t, _)) => is_zero_simple(&t),
        Err(_) => false,
    }
}

/// `S² ≠ 0` and every non-zero element generates `S` as an ideal.
pub fn is_zero_simple(s: &FiniteSemigroup) -> bool {
    let Some(z) = s.zero() else { return false };
    if is_null_set(s, &s.all()) {
        return false;
    }
    let all = s.all();
    s.elements().filter(|&a| a != z).all(|a| principal_ideal(s, a) == all)
}

fn fmt_set(s: &FiniteSemigroup, x: &ElementSet) -> String {
    let labels: Vec<&str> = x.iter().map(|a| s.label(a)).collect();
    format!("{{{}}}", labels.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrReport {
    pub sr: ElementSet,
    pub null_part: ElementSet,
    pub gi_part: ElementSet,
    pub clauses: Vec<Clause>,
}

/// Splits the ideal `SR` generated by a globally idempotent 0-minimal right ideal
/// `R` into its null and globally idempotent parts and checks the four clauses.
pub fn decompose_sr(s: &FiniteSemigroup, r: &ElementSet) -> Result<SrReport> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let zero_min = zero_minimal_right_ideals(s)?;
    if !zero_min.contains(r) {
        return Err(Error::PreconditionFailed(format!(
            "{} is not a 0-minimal right ideal",
            fmt_set(s, r)
        )));
    }
    if !is_globally_idempotent(s, r) {
        return Err(Error::PreconditionFailed(format!(
            "{} is not globally idempotent",
            fmt_set(s, r)
        )));
    }
    let sr = s.product_set(&s.all(), r);
    let inside: Vec<&ElementSet> = zero_min.iter().filter(|m| m.is_subset(&sr)).collect();
    let mut null_part = s.set_of([z]);
    let mut gi_part = s.set_of([z]);
    for m in &inside {
        if is_globally_idempotent(s, m) {
            gi_part.union_with(m);
        } else {
            null_part.union_with(m);
        }
    }
    let mut clauses = Vec::new();
    clauses.push(Clause::new(
        "zero_disjoint_union",
        zero_disjoint_failure(s, &sr, &[&null_part, &gi_part]),
    ));
    let null_fail = if !is_null_set(s, &null_part) {
        Some(format!("{} is not null", fmt_set(s, &null_part)))
    } else {
        ideal_witness(s, &null_part).map(|(a, b)| format!("{}*{} escapes the null part", s.label(a), s.label(b)))
    };
    clauses.push(Clause::new("null_part_null_ideal", null_fail));
    let gi_fail = if !is_zero_simple_subset(s, &gi_part) {
        Some(format!("{} is not 0-simple", fmt_set(s, &gi_part)))
    } else {
        right_ideal_witness(s, &gi_part).map(|(a, b)| format!("{}*{} escapes", s.label(a), s.label(b)))
    };
    clauses.push(Clause::new("gi_part_zero_simple_right_ideal", gi_fail));
    clauses.push(Clause::new(
        "right_ideal_correspondence",
        right_ideal_correspondence_failure(s, &gi_part),
    ));
    Ok(SrReport {
        sr,
        null_part,
        gi_part,
        clauses,
    })
}

/// For a right ideal `B` of `S`, the right ideals of the semigroup `B` are exactly
/// the right ideals of `S` inside `B` iff `bB¹ = bS¹` for every `b ∈ B`: both
/// families consist of the unions of their principal members.
fn right_ideal_correspondence_failure(s: &FiniteSemigroup, b: &ElementSet) -> Option<String> {
    for x in b.iter() {
        let mut in_b = s.product_set(&s.set_of([x]), b);
        in_b.insert(x);
        let in_s = principal_right_ideal(s, x);
        if in_b != in_s {
            return Some(format!(
                "{}B¹ = {} but {}S¹ = {}",
                s.label(x),
                fmt_set(s, &in_b),
                s.label(x),
                fmt_set(s, &in_s)
            ));
        }
    }
    // with equal principal right ideals the 0-minimal members agree as well
    let (t, map) = s.restrict(b).ok()?;
    let inner: Vec<ElementSet> = zero_minimal_right_ideals(&t)
        .ok()?
        .iter()
        .map(|m| s.set_of(m.iter().map(|k| map[k])))
        .collect();
    let mut outer: Vec<ElementSet> = zero_minimal_right_ideals(s)
        .ok()?
        .into_iter()
        .filter(|m| m.is_subset(b))
        .collect();
    outer.sort();
    let mut inner = inner;
    inner.sort();
    if inner != outer {
        return Some("0-minimal right ideals differ".into());
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub side: Side,
    pub sigma: ElementSet,
    pub null_part: ElementSet,
    pub gi_part: ElementSet,
    /// The distinct `B^{R}` (resp. `B^{L}`) for the globally idempotent 0-minimal one-sided ideals.
    pub blocks: Vec<ElementSet>,
    pub zero_minimal: Vec<ElementSet>,
    pub clauses: Vec<Clause>,
}

pub fn socle(s: &FiniteSemigroup, side: Side) -> Result<SocleReport> {
    match side {
        Side::Right => right_socle(s),
        Side::Left => {
            let mut report = right_socle(&s.dual())?;
            report.side = Side::Left;
            Ok(report)
        }
    }
}

fn right_socle(s: &FiniteSemigroup) -> Result<SocleReport> {
    let z = s.zero().ok_or(Error::NoZero)?;
    let zero_min = zero_minimal_right_ideals(s)?;
    let mut sigma = s.set_of([z]);
    let mut null_part = s.set_of([z]);
    let mut gi_part = s.set_of([z]);
    let mut blocks: Vec<ElementSet> = Vec::new();
    for r in &zero_min {
        sigma.union_with(r);
        if is_globally_idempotent(s, r) {
            gi_part.union_with(r);
            let sr = decompose_sr(s, r)?;
            if !blocks.contains(&sr.gi_part) {
                blocks.push(sr.gi_part);
            }
        } else {
            null_part.union_with(r);
        }
    }
    blocks.sort();
    let mut clauses = Vec::new();
    clauses.push(Clause::new(
        "sigma_ideal",
        ideal_witness(s, &sigma).map(|(a, b)| format!("{}*{} escapes the socle", s.label(a), s.label(b))),
    ));
    clauses.push(Clause::new(
        "zero_disjoint_union",
        zero_disjoint_failure(s, &sigma, &[&null_part, &gi_part]),
    ));
    let null_fail = if !is_null_set(s, &null_part) {
        Some(format!("{} is not null", fmt_set(s, &null_part)))
    } else {
        ideal_witness(s, &null_part).map(|(a, b)| format!("{}*{} escapes the null part", s.label(a), s.label(b)))
    };
    clauses.push(Clause::new("null_part_null_ideal", null_fail));
    clauses.push(Clause::new(
        "gi_part_right_ideal",
        right_ideal_witness(s, &gi_part).map(|(a, b)| format!("{}*{} escapes", s.label(a), s.label(b))),
    ));
    let blocks_fail = if gi_part.is_singleton_of(z) {
        None
    } else {
        let parts: Vec<&ElementSet> = blocks.iter().collect();
        zero_disjoint_failure(s, &gi_part, &parts)
            .or_else(|| {
                zero_direct_witness(s, &blocks)
                    .map(|(a, b)| format!("{}*{} is non-zero across blocks", s.label(a), s.label(b)))
            })
            .or_else(|| {
                blocks
                    .iter()
                    .find(|b| !is_zero_simple_subset(s, b))
                    .map(|b| format!("block {} is not 0-simple", fmt_set(s, b)))
            })
    };
    clauses.push(Clause::new("gi_part_zero_direct_blocks", blocks_fail));
    Ok(SocleReport {
        side: Side::Right,
        sigma,
        null_part,
        gi_part,
        blocks,
        zero_minimal: zero_min,
        clauses,
    })
}

/// Checks the clauses that hold when `S` equals its left socle. Returns
/// `PreconditionFailed` when it does not.
pub fn left_socle_lemma(s: &FiniteSemigroup) -> Result<Vec<Clause>> {
    let left = socle(s, Side::Left)?;
    let right = socle(s, Side::Right)?;
    if left.sigma != s.all() {
        return Err(Error::PreconditionFailed("S is not its own left socle".into()));
    }
    let mut clauses = Vec::new();
    clauses.push(Clause::new(
        "null_parts_equal",
        (right.null_part != left.null_part).then(|| {
            format!(
                "A^r = {} but A^l = {}",
                fmt_set(s, &right.null_part),
                fmt_set(s, &left.null_part)
            )
        }),
    ));
    clauses.push(Clause::new(
        "gi_right_within_gi_left",
        right
            .gi_part
            .difference(&left.gi_part)
            .first()
            .map(|a| format!("{} lies in B^r but not B^l", s.label(a))),
    ));
    clauses.push(Clause::new(
        "gi_right_ideal",
        ideal_witness(s, &right.gi_part).map(|(a, b)| format!("{}*{} escapes B^r", s.label(a), s.label(b))),
    ));
    let direct = zero_disjoint_failure(s, &right.sigma, &[&right.null_part, &right.gi_part]).or_else(|| {
        zero_direct_witness(s, &[right.null_part.clone(), right.gi_part.clone()])
            .map(|(a, b)| format!("{}*{} is non-zero", s.label(a), s.label(b)))
    });
    clauses.push(Clause::new("sigma_zero_direct_union", direct));
    clauses.push(Clause::new(
        "quotient_isomorphism",
        quotient_iso_failure(s, &right.sigma, &left.gi_part, &right.gi_part),
    ));
    Ok(clauses)
}

/// Compares `S/Σ` with `Bl/Br` under the map that fixes the surviving elements.
fn quotient_iso_failure(s: &FiniteSemigroup, sigma: &ElementSet, bl: &ElementSet, br: &ElementSet) -> Option<String> {
    use crate::constructions::rees_quotient;
    let q1 = match rees_quotient(s, sigma) {
        Ok(q) => q,
        Err(e) => return Some(format!("S/Σ^r: {}", e)),
    };
    let (bl_sg, bl_map) = match s.restrict(bl) {
        Ok(x) => x,
        Err(e) => return Some(format!("B^l: {}", e)),
    };
    let br_inner = bl_sg.set_of((0..bl_map.len()).filter(|&k| br.contains(bl_map[k])));
    let q2 = match rees_quotient(&bl_sg, &br_inner) {
        Ok(q) => q,
        Err(e) => return Some(format!("B^l/B^r: {}", e)),
    };
    // element of S -> index in q1, and element of S -> index in q2
    let n1 = q1.semigroup.size();
    let n2 = q2.semigroup.size();
    if n1 != n2 {
        return Some(format!("sizes differ: {} vs {}", n1, n2));
    }
    let mut iso = vec![usize::MAX; n1];
    iso[q1.zero] = q2.zero;
    for a in s.elements() {
        if sigma.contains(a) {
            continue;
        }
        let k = bl_map.iter().position(|&x| x == a);
        let Some(k) = k else {
            return Some(format!("{} survives in S/Σ^r but is not in B^l", s.label(a)));
        };
        if br.contains(a) {
            return Some(format!("{} survives in S/Σ^r but lies in B^r", s.label(a)));
        }
        iso[q1.map[a]] = q2.map[k];
    }
    if iso.iter().any(|&v| v == usize::MAX) {
        return Some("induced map is not total".into());
    }
    for x in 0..n1 {
        for y in 0..n1 {
            if iso[q1.semigroup.mul(x, y)] != q2.semigroup.mul(iso[x], iso[y]) {
                return Some(format!(
                    "product {}*{} not preserved",
                    q1.semigroup.label(x),
                    q1.semigroup.label(y)
                ));
            }
        }
    }
    None
}

/// `I = IA` for a right ideal `I` of `A`.
pub fn is_decomposable_right_ideal(a: &FiniteSemigroup, i: &ElementSet) -> Result<bool> {
    if let Some((x, y)) = right_ideal_witness(a, i) {
        return Err(Error::NotARightIdeal(x, y));
    }
    if i.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(a.product_set(i, &a.all()) == *i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub is_null: bool,
    pub is_right_simple: bool,
    pub is_left_simple: bool,
    pub is_simple: bool,
    /// `None` when the semigroup has no zero.
    pub is_right_0_simple: Option<bool>,
    pub is_left_0_simple: Option<bool>,
    pub is_0_simple: Option<bool>,
    pub is_completely_simple: bool,
    pub is_completely_0_simple: Option<bool>,
    pub is_semisimple: bool,
    pub is_regular: bool,
    /// Smallest counterexample for each failed predicate.
    pub witnesses: BTreeMap<String, String>,
}

pub fn classify(s: &FiniteSemigroup) -> StructureReport {
    let mut witnesses = BTreeMap::new();
    let right = principal_right_ideals(s);
    let left = principal_left_ideals(s);
    let two = principal_two_sided_ideals(s);
    let all = s.all();
    let mut note = |name: &str, w: Option<String>| -> bool {
        match w {
            Some(w) => {
                witnesses.insert(name.to_string(), w);
                false
            }
            None => true,
        }
    };
    let squared_zero = s.zero().is_some() && is_null_set(s, &all);

    let is_null = note(
        "is_null",
        match s.zero() {
            None => Some("no zero".into()),
            Some(z) => s
                .elements()
                .flat_map(|a| s.elements().map(move |b| (a, b)))
                .find(|&(a, b)| s.mul(a, b) != z)
                .map(|(a, b)| format!("{}*{} != 0", s.label(a), s.label(b))),
        },
    );
    let proper = |ideals: &[ElementSet], kind: &str| -> Option<String> {
        s.elements()
            .find(|&a| ideals[a] != all)
            .map(|a| format!("{} generates the proper {} {}", s.label(a), kind, fmt_set(s, &ideals[a])))
    };
    let is_right_simple = note("is_right_simple", proper(&right, "right ideal"));
    let is_left_simple = note("is_left_simple", proper(&left, "left ideal"));
    let is_simple = note("is_simple", proper(&two, "ideal"));

    let zero_proper = |ideals: &[ElementSet], kind: &str| -> Option<Option<String>> {
        let z = s.zero()?;
        if squared_zero {
            return Some(Some("S² = 0".into()));
        }
        Some(
            s.elements()
                .filter(|&a| a != z)
                .find(|&a| ideals[a] != all)
                .map(|a| format!("{} generates the proper {} {}", s.label(a), kind, fmt_set(s, &ideals[a]))),
        )
    };
    let is_right_0_simple = zero_proper(&right, "right ideal").map(|w| note("is_right_0_simple", w));
    let is_left_0_simple = zero_proper(&left, "left ideal").map(|w| note("is_left_0_simple", w));
    let is_0_simple = zero_proper(&two, "ideal").map(|w| note("is_0_simple", w));

    let is_completely_simple = note(
        "is_completely_simple",
        if !is_simple {
            Some("not simple".into())
        } else if minimal_right_ideals(s).is_empty() || minimal_left_ideals(s).is_empty() {
            Some("missing minimal one-sided ideals".into())
        } else {
            None
        },
    );
    let is_completely_0_simple = is_0_simple.map(|zs| {
        note(
            "is_completely_0_simple",
            if !zs {
                Some("not 0-simple".into())
            } else if zero_minimal_right_ideals(s).map(|v| v.is_empty()).unwrap_or(true)
                || zero_minimal_left_ideals(s).map(|v| v.is_empty()).unwrap_or(true)
            {
                Some("missing 0-minimal one-sided ideals".into())
            } else {
                None
            },
        )
    });

    let k = kernel(s);
    let null_factor = s
        .elements()
        .filter(|&a| two[..a].iter().all(|earlier| *earlier != two[a]))
        .find(|&a| principal_factor_with(s, a, &two, &k).tag == FactorTag::Null)
        .map(|a| format!("the principal factor of {} is null", s.label(a)));
    let is_semisimple = note("is_semisimple", null_factor);
    let regularity = s.regularity();
    let is_regular = note(
        "is_regular",
        regularity
            .first_irregular()
            .map(|a| format!("{} has no b with {}b{} = {}", s.label(a), s.label(a), s.label(a), s.label(a))),
    );
    StructureReport {
        is_null,
        is_right_simple,
        is_left_simple,
        is_simple,
        is_right_0_simple,
        is_left_0_simple,
        is_0_simple,
        is_completely_simple,
        is_completely_0_simple,
        is_semisimple,
        is_regular,
        witnesses,
    }
}
