//! Antichains and ascending chains of principal right ideals, searched over a
//! uniform interface for finite tables, confluent presentations and Rees matrix
//! semigroups over the integers.

use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::constructions::{check_sandwich, FiniteGroup, ReesMatrixSpec, SandwichEntry};
use crate::error::{Error, Result};
use crate::green::compute_green;
use crate::ideals::{annihilator_set, zero_minimal_right_ideals};
use crate::rewrite::{FpSemigroup, IdealMembership, Word};
use crate::{ElementSet, FiniteSemigroup};

/// Answer to `x ∈ yS¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Yes,
    Equal,
    NoUpTo(usize),
    ExactNo,
}

impl Membership {
    pub fn is_member(self) -> bool {
        matches!(self, Membership::Yes | Membership::Equal)
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Membership::NoUpTo(_))
    }
}

pub trait ExplorableSemigroup {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    /// Elements within `radius`, in an order where each radius extends the previous one.
    fn enumerate(&self, radius: usize) -> Vec<Self::Elem>;

    /// Radius at which `x` first appears.
    fn layer(&self, x: &Self::Elem) -> usize;

    fn multiply(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn in_principal_right_ideal(&self, x: &Self::Elem, y: &Self::Elem) -> Membership;

    /// Exploration bound used by `in_principal_right_ideal` (0 when membership is exact).
    fn bound(&self) -> usize;

    fn display(&self, x: &Self::Elem) -> String;

    /// Candidate order tried first by the antichain search.
    fn search_order(&self, radius: usize) -> Vec<Self::Elem> {
        self.enumerate(radius)
    }
}

/// A finite semigroup, or a subsemigroup `T` of one, with membership in `yT¹`.
#[derive(Clone, Debug)]
pub struct FiniteBackend {
    s: FiniteSemigroup,
    carrier: Vec<usize>,
    ideals: Vec<ElementSet>,
}

impl FiniteBackend {
    pub fn new(s: &FiniteSemigroup) -> FiniteBackend {
        FiniteBackend::on_subsemigroup(s, &s.all()).expect("S is closed")
    }

    pub fn on_subsemigroup(s: &FiniteSemigroup, t: &ElementSet) -> Result<FiniteBackend> {
        s.restrict(t)?;
        let carrier = t.to_vec();
        let ideals = s
            .elements()
            .map(|y| {
                let mut set = s.empty_set();
                if t.contains(y) {
                    set.insert(y);
                    for z in t.iter() {
                        set.insert(s.mul(y, z));
                    }
                }
                set
            })
            .collect();
        Ok(FiniteBackend {
            s: s.clone(),
            carrier,
            ideals,
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.s
    }
}

impl ExplorableSemigroup for FiniteBackend {
    type Elem = usize;

    fn enumerate(&self, _radius: usize) -> Vec<usize> {
        self.carrier.clone()
    }

    fn layer(&self, _x: &usize) -> usize {
        0
    }

    fn multiply(&self, x: &usize, y: &usize) -> usize {
        self.s.mul(*x, *y)
    }

    fn in_principal_right_ideal(&self, x: &usize, y: &usize) -> Membership {
        if x == y {
            Membership::Equal
        } else if self.ideals[*y].contains(*x) {
            Membership::Yes
        } else {
            Membership::ExactNo
        }
    }

    fn bound(&self) -> usize {
        0
    }

    fn display(&self, x: &usize) -> String {
        self.s.label(*x).to_string()
    }

    /// A maximum antichain of principal right ideals first, so first-fit reaches the width.
    fn search_order(&self, _radius: usize) -> Vec<usize> {
        let n = self.carrier.len();
        let reps = if n == self.s.size() {
            let g = compute_green(&self.s);
            g.r_poset
                .maximum_antichain()
                .into_iter()
                .map(|c| g.r.classes[c].first().expect("non-empty class"))
                .collect::<Vec<_>>()
        } else {
            let local = |a: usize, b: usize| self.ideals[self.carrier[b]].contains(self.carrier[a]);
            // R-classes of T by mutual containment
            let mut reps: Vec<usize> = Vec::new();
            for a in 0..n {
                if !reps.iter().any(|&r| local(a, r) && local(r, a)) {
                    reps.push(a);
                }
            }
            match crate::green::Poset::from_relation(reps.len(), |p, q| local(reps[p], reps[q])) {
                Ok(poset) => poset.maximum_antichain().into_iter().map(|k| self.carrier[reps[k]]).collect(),
                Err(_) => Vec::new(),
            }
        };
        let mut order = reps.clone();
        order.extend(self.carrier.iter().copied().filter(|x| !reps.contains(x)));
        order
    }
}

/// A confluent presentation explored up to a word-length radius.
#[derive(Clone, Debug)]
pub struct FpBackend {
    fp: FpSemigroup,
    bound: usize,
}

impl FpBackend {
    pub fn new(fp: FpSemigroup, bound: usize) -> Result<FpBackend> {
        if !fp.is_confluent() {
            return Err(Error::NotConfluent);
        }
        Ok(FpBackend { fp, bound })
    }

    pub fn fp(&self) -> &FpSemigroup {
        &self.fp
    }
}

impl ExplorableSemigroup for FpBackend {
    type Elem = Word;

    fn enumerate(&self, radius: usize) -> Vec<Word> {
        self.fp
            .enumerate_normal_forms(radius)
            .expect("confluent")
            .into_iter()
            .flatten()
            .collect()
    }

    fn layer(&self, x: &Word) -> usize {
        x.len()
    }

    fn multiply(&self, x: &Word, y: &Word) -> Word {
        self.fp.multiply(x, y)
    }

    fn in_principal_right_ideal(&self, x: &Word, y: &Word) -> Membership {
        if self.fp.is_free() {
            return if x == y {
                Membership::Equal
            } else if y.is_prefix_of(x) {
                Membership::Yes
            } else {
                Membership::ExactNo
            };
        }
        match self.fp.right_ideal_membership(x, y, self.bound).expect("confluent") {
            IdealMembership::Yes(_) => Membership::Yes,
            IdealMembership::Equal => Membership::Equal,
            IdealMembership::NoUpTo(b) => Membership::NoUpTo(b),
        }
    }

    fn bound(&self) -> usize {
        if self.fp.is_free() {
            0
        } else {
            self.bound
        }
    }

    fn display(&self, x: &Word) -> String {
        self.fp.rs().format_word(x)
    }
}

/// The ideal `I` of words containing a fixed letter, as a semigroup in its own
/// right: membership is `x ∈ yI¹`.
#[derive(Clone, Debug)]
pub struct FpIdealBackend {
    fp: FpSemigroup,
    letter: u16,
    bound: usize,
    multipliers: Vec<Word>,
}

impl FpIdealBackend {
    pub fn new(fp: FpSemigroup, letter: u16, bound: usize) -> Result<FpIdealBackend> {
        if !fp.is_confluent() {
            return Err(Error::NotConfluent);
        }
        let name = fp
            .rs()
            .alphabet()
            .get(letter as usize)
            .cloned()
            .ok_or_else(|| Error::UnknownLetter(format!("#{}", letter)))?;
        if fp
            .rs()
            .rules()
            .iter()
            .any(|r| r.lhs.contains_letter(letter) != r.rhs.contains_letter(letter))
        {
            return Err(Error::ContentNotPreserved(name));
        }
        let multipliers = if fp.is_free() {
            Vec::new()
        } else {
            fp.enumerate_normal_forms(bound)?
                .into_iter()
                .flatten()
                .filter(|w| w.contains_letter(letter))
                .collect()
        };
        Ok(FpIdealBackend {
            fp,
            letter,
            bound,
            multipliers,
        })
    }

    pub fn kernel_abb_aba(bound: usize) -> FpIdealBackend {
        FpIdealBackend::new(FpSemigroup::abb_aba(), 1, bound).expect("b defines the kernel")
    }

    pub fn fp(&self) -> &FpSemigroup {
        &self.fp
    }

    pub fn letter(&self) -> u16 {
        self.letter
    }
}

impl ExplorableSemigroup for FpIdealBackend {
    type Elem = Word;

    fn enumerate(&self, radius: usize) -> Vec<Word> {
        self.fp
            .enumerate_normal_forms(radius)
            .expect("confluent")
            .into_iter()
            .flatten()
            .filter(|w| w.contains_letter(self.letter))
            .collect()
    }

    fn layer(&self, x: &Word) -> usize {
        x.len()
    }

    fn multiply(&self, x: &Word, y: &Word) -> Word {
        self.fp.multiply(x, y)
    }

    fn in_principal_right_ideal(&self, x: &Word, y: &Word) -> Membership {
        let (x, y) = (self.fp.rs().reduce(x), self.fp.rs().reduce(y));
        if x == y {
            return Membership::Equal;
        }
        if self.fp.is_free() {
            let ok = y.is_prefix_of(&x) && x.0[y.len()..].contains(&self.letter);
            return if ok { Membership::Yes } else { Membership::ExactNo };
        }
        if self.multipliers.iter().any(|s| self.fp.multiply(&y, s) == x) {
            Membership::Yes
        } else {
            Membership::NoUpTo(self.bound)
        }
    }

    fn bound(&self) -> usize {
        if self.fp.is_free() {
            0
        } else {
            self.bound
        }
    }

    fn display(&self, x: &Word) -> String {
        self.fp.rs().format_word(x)
    }
}

/// Element of `M⁰(ℤ; I, J; P)`; indices are 0-based, the group is written additively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ZElem {
    Triple(usize, i64, usize),
    Zero,
}

/// `M⁰(ℤ; I, J; P)` with `P` indexed `[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicReesZ {
    rows: usize,
    cols: usize,
    p: Vec<Vec<SandwichEntry<i64>>>,
}

impl SymbolicReesZ {
    pub fn new(rows: usize, cols: usize, p: Vec<Vec<SandwichEntry<i64>>>) -> Result<SymbolicReesZ> {
        check_sandwich(rows, cols, &p)?;
        Ok(SymbolicReesZ { rows, cols, p })
    }

    /// The `n×n` matrix with the identity on the diagonal and sandwich zeros elsewhere.
    pub fn identity_pattern(n: usize) -> Result<SymbolicReesZ> {
        let p = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { SandwichEntry::Group(0) } else { SandwichEntry::Zero })
                    .collect()
            })
            .collect();
        SymbolicReesZ::new(n, n, p)
    }

    /// Every entry the identity.
    pub fn all_group(rows: usize, cols: usize) -> Result<SymbolicReesZ> {
        SymbolicReesZ::new(rows, cols, vec![vec![SandwichEntry::Group(0); rows]; cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, j: usize, i: usize) -> SandwichEntry<i64> {
        self.p[j][i]
    }

    pub fn multiply(&self, x: ZElem, y: ZElem) -> ZElem {
        match (x, y) {
            (ZElem::Triple(i, g, j), ZElem::Triple(k, h, l)) => match self.p[j][k] {
                SandwichEntry::Group(p) => ZElem::Triple(i, g + p + h, l),
                SandwichEntry::Zero => ZElem::Zero,
            },
            _ => ZElem::Zero,
        }
    }

    /// `x ∈ yS¹`: equal, or both non-zero in the same row, or `x = 0`.
    pub fn in_principal_right_ideal(&self, x: ZElem, y: ZElem) -> Membership {
        match (x, y) {
            _ if x == y => Membership::Equal,
            (ZElem::Zero, _) => Membership::Yes,
            (_, ZElem::Zero) => Membership::ExactNo,
            (ZElem::Triple(k, _, _), ZElem::Triple(i, _, _)) => {
                if k == i {
                    Membership::Yes
                } else {
                    Membership::ExactNo
                }
            }
        }
    }

    /// `x ∈ y R_i¹` where `R_i` is row `i` together with 0.
    pub fn in_row_ideal(&self, row: usize, x: ZElem, y: ZElem) -> Membership {
        match (x, y) {
            _ if x == y => Membership::Equal,
            (ZElem::Zero, _) => Membership::Yes,
            (_, ZElem::Zero) => Membership::ExactNo,
            (ZElem::Triple(k, _, _), ZElem::Triple(i, _, j)) => {
                if k == row && i == row && self.p[j][row].is_group() {
                    Membership::Yes
                } else {
                    Membership::ExactNo
                }
            }
        }
    }

    pub fn label(&self, x: ZElem) -> String {
        match x {
            ZElem::Zero => "0".to_string(),
            ZElem::Triple(i, g, j) => {
                let gs = match g {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{}", g),
                };
                format!("({},{},{})", i + 1, gs, j + 1)
            }
        }
    }

    fn magnitudes(radius: usize) -> impl Iterator<Item = i64> {
        (0..=radius as i64).flat_map(|m| if m == 0 { vec![0] } else { vec![m, -m] })
    }

    /// Triples by `(|g|, sign, i, j)`, then 0.
    pub fn enumerate(&self, radius: usize) -> Vec<ZElem> {
        let mut out = Vec::new();
        for g in Self::magnitudes(radius) {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    out.push(ZElem::Triple(i, g, j));
                }
            }
        }
        out.push(ZElem::Zero);
        out
    }

    /// Projection `g ↦ g mod n` onto `M⁰(C_n; I, J; P)`.
    pub fn project(&self, n: usize) -> Result<ReesMatrixSpec> {
        let group = FiniteGroup::cyclic(n)?;
        let p = self
            .p
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match *e {
                        SandwichEntry::Group(g) => SandwichEntry::Group(g.rem_euclid(n as i64) as usize),
                        SandwichEntry::Zero => SandwichEntry::Zero,
                    })
                    .collect()
            })
            .collect();
        ReesMatrixSpec::new(group, self.rows, self.cols, p)
    }

    /// Columns `j` with `p_{ji}` a sandwich zero: these give `aR_i = 0`.
    pub fn annihilating_columns(&self, row: usize) -> Vec<usize> {
        (0..self.cols).filter(|&j| !self.p[j][row].is_group()).collect()
    }

    /// For the 0-minimal right ideal `R_i`: the set `{a ∈ R_i∖0 : aR_i = 0}` is
    /// `{i}×ℤ×{j : p_{ji} = 0}`; when infinite, an antichain of the requested size is drawn from it.
    pub fn zero_min_right_ideal_report(&self, row: usize, antichain_size: usize) -> Result<ZeroMinReport<ZElem>> {
        if row >= self.rows {
            return Err(Error::NotZeroMinimal(format!("row {} out of range", row + 1)));
        }
        let cols = self.annihilating_columns(row);
        let Some(&j) = cols.first() else {
            return Ok(ZeroMinReport {
                annihilator: AnnihilatorSize::Finite(0),
                elements: Vec::new(),
                certificate: None,
            });
        };
        let elements: Vec<ZElem> = (0..antichain_size as i64).map(|g| ZElem::Triple(row, g, j)).collect();
        let labels = elements.iter().map(|&x| self.label(x)).collect();
        let certificate = (antichain_size >= 2).then(|| Certificate {
            kind: CertificateKind::Antichain,
            elements: elements.clone(),
            labels,
            checked_bound: 0,
            verdict_basis: VerdictBasis::Exact,
        });
        Ok(ZeroMinReport {
            annihilator: AnnihilatorSize::Infinite,
            elements: cols
                .iter()
                .map(|&j| format!("({},g^n,{}) for all n", row + 1, j + 1))
                .collect(),
            certificate,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReesZBackend {
    pub spec: SymbolicReesZ,
}

impl ExplorableSemigroup for ReesZBackend {
    type Elem = ZElem;

    fn enumerate(&self, radius: usize) -> Vec<ZElem> {
        self.spec.enumerate(radius)
    }

    fn layer(&self, x: &ZElem) -> usize {
        match x {
            ZElem::Triple(_, g, _) => g.unsigned_abs() as usize,
            ZElem::Zero => 0,
        }
    }

    fn multiply(&self, x: &ZElem, y: &ZElem) -> ZElem {
        self.spec.multiply(*x, *y)
    }

    fn in_principal_right_ideal(&self, x: &ZElem, y: &ZElem) -> Membership {
        self.spec.in_principal_right_ideal(*x, *y)
    }

    fn bound(&self) -> usize {
        0
    }

    fn display(&self, x: &ZElem) -> String {
        self.spec.label(*x)
    }
}

/// The 0-minimal right ideal `R_i` as a semigroup in its own right.
#[derive(Clone, Debug)]
pub struct ReesZRowBackend {
    pub spec: SymbolicReesZ,
    pub row: usize,
}

impl ExplorableSemigroup for ReesZRowBackend {
    type Elem = ZElem;

    fn enumerate(&self, radius: usize) -> Vec<ZElem> {
        let mut out = Vec::new();
        for g in SymbolicReesZ::magnitudes(radius) {
            for j in 0..self.spec.cols {
                out.push(ZElem::Triple(self.row, g, j));
            }
        }
        out.push(ZElem::Zero);
        out
    }

    fn layer(&self, x: &ZElem) -> usize {
        match x {
            ZElem::Triple(_, g, _) => g.unsigned_abs() as usize,
            ZElem::Zero => 0,
        }
    }

    fn multiply(&self, x: &ZElem, y: &ZElem) -> ZElem {
        self.spec.multiply(*x, *y)
    }

    fn in_principal_right_ideal(&self, x: &ZElem, y: &ZElem) -> Membership {
        self.spec.in_row_ideal(self.row, *x, *y)
    }

    /// Elements with `aR_i = 0` first: each other non-zero element generates all of `R_i`.
    fn search_order(&self, radius: usize) -> Vec<ZElem> {
        let (mut ann, rest): (Vec<ZElem>, Vec<ZElem>) = self
            .enumerate(radius)
            .into_iter()
            .partition(|x| matches!(x, ZElem::Triple(_, _, j) if !self.spec.p[*j][self.row].is_group()));
        ann.extend(rest);
        ann
    }

    fn bound(&self) -> usize {
        0
    }

    fn display(&self, x: &ZElem) -> String {
        self.spec.label(*x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    Antichain,
    AscendingChain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictBasis {
    Exact,
    BoundedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate<T> {
    pub kind: CertificateKind,
    /// For chains, ordered from the smallest principal right ideal upwards.
    pub elements: Vec<T>,
    pub labels: Vec<String>,
    pub checked_bound: usize,
    pub verdict_basis: VerdictBasis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Search<T> {
    Found(Certificate<T>),
    NotFoundUpTo { radius: usize, best: usize },
}

impl<T> Search<T> {
    pub fn certificate(&self) -> Option<&Certificate<T>> {
        match self {
            Search::Found(c) => Some(c),
            Search::NotFoundUpTo { .. } => None,
        }
    }
}

fn incomparable(m1: Membership, m2: Membership) -> Option<bool> {
    if m1.is_member() || m2.is_member() {
        None
    } else {
        Some(m1.is_exact() && m2.is_exact())
    }
}

fn first_fit<E: ExplorableSemigroup>(e: &E, order: &[E::Elem], target: usize) -> (Vec<E::Elem>, bool) {
    let mut chosen: Vec<E::Elem> = Vec::new();
    let mut exact = true;
    for c in order {
        if chosen.len() == target {
            break;
        }
        let mut ok = true;
        let mut this_exact = true;
        for d in &chosen {
            match incomparable(e.in_principal_right_ideal(c, d), e.in_principal_right_ideal(d, c)) {
                None => {
                    ok = false;
                    break;
                }
                Some(x) => this_exact &= x,
            }
        }
        if ok {
            chosen.push(c.clone());
            exact &= this_exact;
        }
    }
    (chosen, exact)
}

fn certificate<E: ExplorableSemigroup>(e: &E, kind: CertificateKind, elements: Vec<E::Elem>, exact: bool) -> Certificate<E::Elem> {
    Certificate {
        kind,
        labels: elements.iter().map(|x| e.display(x)).collect(),
        elements,
        checked_bound: e.bound(),
        verdict_basis: if exact {
            VerdictBasis::Exact
        } else {
            VerdictBasis::BoundedSearch
        },
    }
}

/// First-fit over `search_order(radius)`; if that stalls, first-fit over
/// `enumerate(r)` with the outermost layer first, for `r = radius, …, 1`.
pub fn antichain_certificate<E: ExplorableSemigroup>(e: &E, target: usize, radius: usize) -> Result<Search<E::Elem>> {
    if target < 2 {
        return Err(Error::PreconditionFailed("antichain target must be at least 2".into()));
    }
    let (chosen, exact) = first_fit(e, &e.search_order(radius), target);
    if chosen.len() == target {
        return Ok(Search::Found(certificate(e, CertificateKind::Antichain, chosen, exact)));
    }
    let mut best = chosen.len();
    for r in (1..=radius).rev() {
        let mut order = e.enumerate(r);
        if order.iter().all(|x| e.layer(x) == 0) {
            break;
        }
        order.sort_by_key(|x| std::cmp::Reverse(e.layer(x)));
        let (chosen, exact) = first_fit(e, &order, target);
        if chosen.len() == target {
            return Ok(Search::Found(certificate(e, CertificateKind::Antichain, chosen, exact)));
        }
        best = best.max(chosen.len());
    }
    Ok(Search::NotFoundUpTo { radius, best })
}

/// Above this many candidates the chain search descends greedily instead of
/// computing a longest chain.
pub const EXACT_CHAIN_LIMIT: usize = 2048;

fn strictly_below(m_up: Membership, m_down: Membership) -> Option<bool> {
    (m_up == Membership::Yes && !m_down.is_member()).then_some(m_down.is_exact())
}

/// A chain `x₁S¹ ⊊ x₂S¹ ⊊ …` of `target` enumerated elements.
pub fn ascending_chain_certificate<E: ExplorableSemigroup>(e: &E, target: usize, radius: usize) -> Result<Search<E::Elem>> {
    if target < 2 {
        return Err(Error::PreconditionFailed("chain length must be at least 2".into()));
    }
    let elems = e.enumerate(radius);
    let n = elems.len();
    let below = |x: usize, y: usize| {
        strictly_below(
            e.in_principal_right_ideal(&elems[x], &elems[y]),
            e.in_principal_right_ideal(&elems[y], &elems[x]),
        )
    };
    if n <= EXACT_CHAIN_LIMIT {
        // preds[y] = elements strictly below y
        let preds: Vec<Vec<(usize, bool)>> = (0..n)
            .map(|y| (0..n).filter(|&x| x != y).filter_map(|x| below(x, y).map(|ex| (x, ex))).collect())
            .collect();
        // len[y] = longest chain topped by y, capped at target
        let mut len = vec![1usize; n];
        let mut prev: Vec<Option<usize>> = vec![None; n];
        for _ in 1..target {
            let mut changed = false;
            let snapshot = len.clone();
            for y in 0..n {
                for &(x, _) in &preds[y] {
                    if snapshot[x] + 1 > len[y] && snapshot[x] < target {
                        len[y] = snapshot[x] + 1;
                        prev[y] = Some(x);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let best = len.iter().copied().max().unwrap_or(0);
        if let Some(top) = (0..n).find(|&y| len[y] >= target) {
            let mut chain = vec![top];
            while chain.len() < target {
                let cur = *chain.last().expect("non-empty");
                chain.push(prev[cur].expect("chain continues"));
            }
            chain.reverse();
            let exact = chain.windows(2).all(|w| below(w[0], w[1]) == Some(true));
            let elements = chain.into_iter().map(|k| elems[k].clone()).collect();
            return Ok(Search::Found(certificate(e, CertificateKind::AscendingChain, elements, exact)));
        }
        return Ok(Search::NotFoundUpTo { radius, best: best.min(n) });
    }
    let mut best = 0;
    for start in 0..n {
        let mut chain = vec![start];
        let mut exact = true;
        while chain.len() < target {
            let cur = *chain.last().expect("non-empty");
            match (0..n).find_map(|x| below(x, cur).map(|ex| (x, ex))) {
                Some((x, ex)) if !chain.contains(&x) => {
                    exact &= ex;
                    chain.push(x);
                }
                _ => break,
            }
        }
        best = best.max(chain.len());
        if chain.len() == target {
            chain.reverse();
            let elements = chain.into_iter().map(|k| elems[k].clone()).collect();
            return Ok(Search::Found(certificate(e, CertificateKind::AscendingChain, elements, exact)));
        }
    }
    Ok(Search::NotFoundUpTo { radius, best })
}

/// Re-checks every claim of a certificate against the backend.
pub fn validate_certificate<E: ExplorableSemigroup>(e: &E, cert: &Certificate<E::Elem>) -> Result<()> {
    let fail = |msg: String| Err(Error::CertificateViolation(msg));
    let xs = &cert.elements;
    if xs.len() < 2 {
        return fail("fewer than two elements".into());
    }
    if cert.labels.len() != xs.len() {
        return fail("label count differs from element count".into());
    }
    let exact = cert.verdict_basis == VerdictBasis::Exact;
    let acceptable_no = |m: Membership| match m {
        Membership::ExactNo => true,
        Membership::NoUpTo(_) => !exact,
        _ => false,
    };
    match cert.kind {
        CertificateKind::Antichain => {
            let distinct: HashSet<&E::Elem> = xs.iter().collect();
            if distinct.len() != xs.len() {
                return fail("repeated element".into());
            }
            for (a, x) in xs.iter().enumerate() {
                for (b, y) in xs.iter().enumerate() {
                    if a != b && !acceptable_no(e.in_principal_right_ideal(x, y)) {
                        return fail(format!("{} vs {}", e.display(x), e.display(y)));
                    }
                }
            }
        }
        CertificateKind::AscendingChain => {
            for w in xs.windows(2) {
                if e.in_principal_right_ideal(&w[0], &w[1]) != Membership::Yes {
                    return fail(format!("{} not below {}", e.display(&w[0]), e.display(&w[1])));
                }
                if !acceptable_no(e.in_principal_right_ideal(&w[1], &w[0])) {
                    return fail(format!("{} not strictly below {}", e.display(&w[0]), e.display(&w[1])));
                }
            }
        }
    }
    Ok(())
}

/// `b a^i` in the built-in presentation.
pub fn ba_power(i: usize) -> Word {
    let mut v = vec![1u16];
    v.extend(std::iter::repeat_n(0u16, i));
    Word(v)
}

/// Checks that `b a^i · u ≠ b a^j` for all `i ≠ j < n` and every kernel normal
/// form `u` of length at most `mult_bound`, and returns `{b a^i : i < n}`.
pub fn kernel_antichain(n: usize, mult_bound: usize) -> Result<Certificate<Word>> {
    if n < 2 {
        return Err(Error::PreconditionFailed("antichain size must be at least 2".into()));
    }
    let fp = FpSemigroup::abb_aba();
    let kernel: Vec<Word> = fp
        .enumerate_normal_forms(mult_bound)?
        .into_iter()
        .flatten()
        .filter(|w| w.contains_letter(1))
        .collect();
    for i in 0..n {
        let x = ba_power(i);
        for u in &kernel {
            let r = fp.multiply(&x, u);
            let is_ba = r.0[0] == 1 && r.0[1..].iter().all(|&c| c == 0);
            let j = r.len() - 1;
            if is_ba && j < n && j != i {
                return Err(Error::CertificateViolation(format!(
                    "{} * {} = {}",
                    fp.rs().format_word(&x),
                    fp.rs().format_word(u),
                    fp.rs().format_word(&r)
                )));
            }
        }
    }
    let elements: Vec<Word> = (0..n).map(ba_power).collect();
    Ok(Certificate {
        kind: CertificateKind::Antichain,
        labels: elements.iter().map(|w| fp.rs().format_word(w)).collect(),
        elements,
        checked_bound: mult_bound,
        verdict_basis: VerdictBasis::BoundedSearch,
    })
}

/// Generators `{b^{i₀}} ∪ Y ∪ Z` of the right ideal `XS¹` of the built-in
/// presentation, compared with `XS¹` on the ball of normal forms of length ≤ radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FgSubact {
    pub i0: usize,
    pub y: Option<Word>,
    pub z: Option<Word>,
    pub generators: Vec<Word>,
    pub ball_members: usize,
    pub agrees: bool,
}

/// Right ideal generated by `gens`, restricted to words of length ≤ `limit`
/// reachable through words of length ≤ `limit`.
pub fn bounded_closure(fp: &FpSemigroup, gens: &[Word], limit: usize) -> HashSet<Word> {
    let k = fp.alphabet_len() as u16;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    for g in gens {
        let g = fp.rs().reduce(g);
        if g.len() <= limit && seen.insert(g.clone()) {
            queue.push_back(g);
        }
    }
    while let Some(w) = queue.pop_front() {
        for x in 0..k {
            let nw = fp.rs().reduce(&w.push(x));
            if nw.len() <= limit && seen.insert(nw.clone()) {
                queue.push_back(nw);
            }
        }
    }
    seen
}

pub fn kernel_subact_generators(xs: &[Word], radius: usize) -> Result<FgSubact> {
    if xs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let fp = FpSemigroup::abb_aba();
    for x in xs {
        if !x.contains_letter(1) {
            return Err(Error::NotInKernel(fp.rs().format_word(x)));
        }
    }
    let limit = 2 * radius + 2;
    let ball = |set: &HashSet<Word>| -> HashSet<Word> { set.iter().filter(|w| w.len() <= radius).cloned().collect() };
    let ideal = bounded_closure(&fp, xs, limit);
    let b_pow = |i: usize| Word::power(1, i);
    let i0 = (1..=radius)
        .find(|&i| ideal.contains(&b_pow(i)))
        .ok_or_else(|| Error::BoundExceeded(format!("no power of b within length {}", radius)))?;
    let prefix = b_pow(i0 - 1);
    let y = (1..=radius.saturating_sub(i0 - 1))
        .map(|j| prefix.concat(&Word::power(0, j)))
        .find(|w| ideal.contains(w));
    let z = (1..=radius.saturating_sub(i0))
        .map(|k| prefix.concat(&Word::power(0, k)).push(1))
        .find(|w| ideal.contains(w));
    let mut generators = vec![b_pow(i0)];
    generators.extend(y.iter().cloned());
    generators.extend(z.iter().cloned());
    let generated = bounded_closure(&fp, &generators, limit);
    let lhs = ball(&ideal);
    let agrees = lhs == ball(&generated);
    Ok(FgSubact {
        i0,
        y,
        z,
        generators,
        ball_members: lhs.len(),
        agrees,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AnnihilatorSize {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroMinReport<T> {
    pub annihilator: AnnihilatorSize,
    /// Labels of the annihilating elements (a description of each family when infinite).
    pub elements: Vec<String>,
    /// Antichain of principal right ideals of `R` drawn from the annihilating elements.
    pub certificate: Option<Certificate<T>>,
}

/// `{a ∈ R∖0 : aR = 0}` for a 0-minimal right ideal `R` of a finite semigroup.
pub fn zero_min_right_ideal_report(s: &FiniteSemigroup, r: &ElementSet) -> Result<ZeroMinReport<usize>> {
    if !zero_minimal_right_ideals(s)?.contains(r) {
        return Err(Error::NotZeroMinimal(format!("{:?}", r.iter().map(|x| s.label(x)).collect::<Vec<_>>())));
    }
    let ann = annihilator_set(s, r)?;
    let elements: Vec<usize> = ann.to_vec();
    let labels: Vec<String> = elements.iter().map(|&x| s.label(x).to_string()).collect();
    let certificate = (elements.len() >= 2).then(|| Certificate {
        kind: CertificateKind::Antichain,
        elements: elements.clone(),
        labels: labels.clone(),
        checked_bound: 0,
        verdict_basis: VerdictBasis::Exact,
    });
    Ok(ZeroMinReport {
        annihilator: AnnihilatorSize::Finite(elements.len()),
        elements: labels,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{left_zero, null_semigroup, rees_matrix_zero};

    fn w(fp: &FpSemigroup, t: &str) -> Word {
        fp.rs().parse_word(t).unwrap()
    }

    #[test]
    fn finite_membership() {
        let lz = left_zero(2).unwrap();
        let e = FiniteBackend::new(&lz);
        assert_eq!(e.in_principal_right_ideal(&0, &1), Membership::ExactNo);
        assert_eq!(e.in_principal_right_ideal(&1, &1), Membership::Equal);
        let n2 = null_semigroup(1);
        let e = FiniteBackend::new(&n2);
        let (z, u) = (n2.index_of("0").unwrap(), n2.index_of("u").unwrap());
        assert_eq!(e.in_principal_right_ideal(&z, &u), Membership::Yes);
    }

    #[test]
    fn finite_searches() {
        let lz = left_zero(2).unwrap();
        let e = FiniteBackend::new(&lz);
        let c = antichain_certificate(&e, 2, 0).unwrap();
        let cert = c.certificate().unwrap();
        assert_eq!(cert.elements, vec![0, 1]);
        assert_eq!(cert.verdict_basis, VerdictBasis::Exact);
        validate_certificate(&e, cert).unwrap();
        assert!(matches!(ascending_chain_certificate(&e, 2, 0).unwrap(), Search::NotFoundUpTo { .. }));

        let n2 = null_semigroup(1);
        let e = FiniteBackend::new(&n2);
        let c = ascending_chain_certificate(&e, 2, 0).unwrap();
        let cert = c.certificate().unwrap();
        assert_eq!(cert.labels, vec!["0", "u"]);
        validate_certificate(&e, cert).unwrap();
    }

    #[test]
    fn fp_membership() {
        let fp = FpSemigroup::abb_aba();
        let e = FpBackend::new(fp.clone(), 3).unwrap();
        assert_eq!(e.in_principal_right_ideal(&w(&fp, "b"), &w(&fp, "ab")), Membership::Yes);
        let free = FpSemigroup::free(2).unwrap();
        let e = FpBackend::new(free.clone(), 3).unwrap();
        assert_eq!(e.in_principal_right_ideal(&w(&free, "ab"), &w(&free, "ba")), Membership::ExactNo);
    }

    #[test]
    fn rees_z_membership() {
        let spec = SymbolicReesZ::identity_pattern(2).unwrap();
        assert_eq!(
            spec.in_principal_right_ideal(ZElem::Triple(0, 5, 1), ZElem::Triple(0, 3, 0)),
            Membership::Yes
        );
        assert_eq!(spec.multiply(ZElem::Triple(0, 3, 0), ZElem::Triple(0, 2, 1)), ZElem::Triple(0, 5, 1));
        assert_eq!(
            spec.in_principal_right_ideal(ZElem::Triple(1, 0, 0), ZElem::Triple(0, 0, 0)),
            Membership::ExactNo
        );
        assert_eq!(
            spec.in_row_ideal(0, ZElem::Triple(0, 4, 0), ZElem::Triple(0, 1, 1)),
            Membership::ExactNo
        );
        assert_eq!(spec.multiply(ZElem::Triple(0, 1, 1), ZElem::Triple(0, 7, 0)), ZElem::Zero);
        assert_eq!(spec.label(ZElem::Triple(0, 5, 1)), "(1,g^5,2)");
        assert!(SymbolicReesZ::new(2, 2, vec![vec![SandwichEntry::Zero; 2], vec![SandwichEntry::Group(0); 2]]).is_err());
    }

    #[test]
    fn rees_z_reports() {
        let spec = SymbolicReesZ::identity_pattern(2).unwrap();
        let report = spec.zero_min_right_ideal_report(0, 100).unwrap();
        assert_eq!(report.annihilator, AnnihilatorSize::Infinite);
        let cert = report.certificate.unwrap();
        assert_eq!(cert.elements.len(), 100);
        assert_eq!(cert.elements[0], ZElem::Triple(0, 0, 1));
        validate_certificate(&ReesZRowBackend { spec: spec.clone(), row: 0 }, &cert).unwrap();

        let full = SymbolicReesZ::all_group(2, 2).unwrap();
        let report = full.zero_min_right_ideal_report(0, 100).unwrap();
        assert_eq!(report.annihilator, AnnihilatorSize::Finite(0));
        let row = ReesZRowBackend { spec: full, row: 0 };
        assert!(matches!(antichain_certificate(&row, 2, 10).unwrap(), Search::NotFoundUpTo { .. }));

        let row = ReesZRowBackend { spec, row: 0 };
        let found = antichain_certificate(&row, 100, 100).unwrap();
        let cert = found.certificate().unwrap();
        assert_eq!(cert.verdict_basis, VerdictBasis::Exact);
        assert!(cert.elements.iter().all(|x| matches!(x, ZElem::Triple(0, _, 1))));
        validate_certificate(&row, cert).unwrap();
    }

    #[test]
    fn rees9_annihilators() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let spec = ReesMatrixSpec::new(
            c2,
            2,
            2,
            vec![
                vec![SandwichEntry::Group(0), SandwichEntry::Zero],
                vec![SandwichEntry::Zero, SandwichEntry::Group(0)],
            ],
        )
        .unwrap();
        let s = rees_matrix_zero(&spec).unwrap();
        let r1 = s.set_of_labels(["(1,e,1)", "(1,g,1)", "(1,e,2)", "(1,g,2)", "0"]).unwrap();
        let report = zero_min_right_ideal_report(&s, &r1).unwrap();
        assert_eq!(report.annihilator, AnnihilatorSize::Finite(2));
        assert_eq!(report.elements, vec!["(1,e,2)", "(1,g,2)"]);
        let cert = report.certificate.unwrap();
        validate_certificate(&FiniteBackend::on_subsemigroup(&s, &r1).unwrap(), &cert).unwrap();
        assert!(matches!(
            zero_min_right_ideal_report(&s, &s.all()),
            Err(Error::NotZeroMinimal(_))
        ));
    }

    #[test]
    fn free_dichotomy() {
        let one = FpBackend::new(FpSemigroup::free(1).unwrap(), 0).unwrap();
        assert!(matches!(antichain_certificate(&one, 2, 15).unwrap(), Search::NotFoundUpTo { .. }));
        let chain = ascending_chain_certificate(&one, 15, 15).unwrap();
        let cert = chain.certificate().unwrap();
        assert_eq!(cert.elements.len(), 15);
        assert_eq!(cert.elements[0].len(), 15);
        validate_certificate(&one, cert).unwrap();

        let two = FpBackend::new(FpSemigroup::free(2).unwrap(), 0).unwrap();
        let found = antichain_certificate(&two, 20, 12).unwrap();
        let cert = found.certificate().unwrap();
        assert_eq!(cert.verdict_basis, VerdictBasis::Exact);
        validate_certificate(&two, cert).unwrap();
    }

    #[test]
    fn kernel_antichain_small() {
        let cert = kernel_antichain(3, 8).unwrap();
        assert_eq!(cert.labels, vec!["b", "ba", "baa"]);
        let fp = FpSemigroup::abb_aba();
        assert_eq!(fp.rs().format_word(&fp.multiply(&w(&fp, "b"), &w(&fp, "bb"))), "bbb");
        validate_certificate(&FpIdealBackend::kernel_abb_aba(8), &cert).unwrap();
        assert!(kernel_antichain(1, 8).is_err());
    }

    #[test]
    fn kernel_generic_search() {
        let k = FpIdealBackend::kernel_abb_aba(12);
        let found = antichain_certificate(&k, 10, 12).unwrap();
        let cert = found.certificate().unwrap();
        assert_eq!(cert.labels[..3], ["b", "ba", "baa"]);
        validate_certificate(&k, cert).unwrap();
    }

    #[test]
    fn fg_subacts() {
        let fp = FpSemigroup::abb_aba();
        let r = kernel_subact_generators(&[w(&fp, "b")], 8).unwrap();
        assert_eq!((r.i0, r.y.clone(), r.z.clone()), (1, None, None));
        assert!(r.agrees);
        let r = kernel_subact_generators(&[w(&fp, "ba"), w(&fp, "bb")], 8).unwrap();
        assert!(r.agrees);
        assert!(r.generators.len() <= 3);
        assert!(matches!(kernel_subact_generators(&[w(&fp, "aa")], 8), Err(Error::NotInKernel(_))));
    }
}
