//! Verification suites: structural checks over the built-in zoo, every
//! three-element semigroup and seeded random transformation semigroups, plus
//! certificate checks for the infinite instances.

use std::cell::OnceCell;
use std::collections::{BTreeMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sgchain_core::acts::Act;
use sgchain_core::chains::{
    antichain_certificate, ascending_chain_certificate, ba_power, bounded_closure, kernel_antichain,
    kernel_subact_generators, validate_certificate, AnnihilatorSize, FiniteBackend, FpBackend, FpIdealBackend,
    ReesZBackend, ReesZRowBackend, Search, SymbolicReesZ, VerdictBasis, ZElem,
};
use sgchain_core::constructions::{principal_factor, rees_matrix_zero, rees_quotient, u_construction, FactorTag};
use sgchain_core::green::{compute_green, GreenStructure};
use sgchain_core::ideals::{
    annihilator_set, classify, decompose_sr, is_globally_idempotent, is_ideal, is_left_ideal, is_right_ideal, kernel,
    left_socle_lemma, minimal_left_ideals, minimal_right_ideals, principal_left_ideal, principal_right_ideal, socle,
    zero_minimal_right_ideals, Clause, Side,
};
use sgchain_core::rewrite::{knuth_bendix, FpSemigroup, RewritingSystem, Word, DEFAULT_MAX_LEN, DEFAULT_MAX_RULES};
use sgchain_core::{ElementSet, FiniteSemigroup};

use crate::report::{Outcome, Record, VerificationReport};
use crate::zoo;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PaperFinite,
    PaperInfinite,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "paper-finite" => Some(Suite::PaperFinite),
            "paper-infinite" => Some(Suite::PaperInfinite),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperFinite => "paper-finite",
            Suite::PaperInfinite => "paper-infinite",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    /// Zoo instance to corrupt with a single table flip.
    pub mutate: Option<String>,
}

/// Per-instance state shared by the finite checks.
pub struct Ctx<'a> {
    pub s: &'a FiniteSemigroup,
    green: OnceCell<GreenStructure>,
    right: OnceCell<Vec<ElementSet>>,
    left: OnceCell<Vec<ElementSet>>,
    two_sided: OnceCell<Vec<ElementSet>>,
}

impl<'a> Ctx<'a> {
    pub fn new(s: &'a FiniteSemigroup) -> Ctx<'a> {
        Ctx {
            s,
            green: OnceCell::new(),
            right: OnceCell::new(),
            left: OnceCell::new(),
            two_sided: OnceCell::new(),
        }
    }

    fn g(&self) -> &GreenStructure {
        self.green.get_or_init(|| compute_green(self.s))
    }

    /// `aS¹` by direct enumeration.
    fn nr(&self) -> &[ElementSet] {
        self.right.get_or_init(|| {
            let s = self.s;
            s.elements()
                .map(|a| s.set_of(std::iter::once(a).chain(s.elements().map(|b| s.mul(a, b)))))
                .collect()
        })
    }

    fn nl(&self) -> &[ElementSet] {
        self.left.get_or_init(|| {
            let s = self.s;
            s.elements()
                .map(|a| s.set_of(std::iter::once(a).chain(s.elements().map(|b| s.mul(b, a)))))
                .collect()
        })
    }

    fn nj(&self) -> &[ElementSet] {
        self.two_sided.get_or_init(|| {
            let s = self.s;
            let nl = self.nl();
            s.elements()
                .map(|a| {
                    let mut set = nl[a].clone();
                    for x in nl[a].iter() {
                        for b in s.elements() {
                            set.insert(s.mul(x, b));
                        }
                    }
                    set
                })
                .collect()
        })
    }
}

pub struct FiniteCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: fn(&Ctx) -> Outcome,
}

macro_rules! fail {
    ($($arg:tt)*) => { return Outcome::Fail(format!($($arg)*)) };
}

fn fmt_set(s: &FiniteSemigroup, set: &ElementSet) -> String {
    let labels: Vec<&str> = set.iter().map(|a| s.label(a)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn clauses_outcome(what: &str, clauses: &[Clause]) -> Option<String> {
    clauses.iter().find(|c| !c.holds).map(|c| {
        format!(
            "{} clause {} fails: {}",
            what,
            c.name,
            c.witness.as_deref().unwrap_or("no witness")
        )
    })
}

/// `{x r : r ∈ R}` for each `x`.
fn product_with(s: &FiniteSemigroup, x: usize, r: &ElementSet) -> ElementSet {
    s.set_of(r.iter().map(|y| s.mul(x, y)))
}

fn check_associative(c: &Ctx) -> Outcome {
    let s = c.s;
    match s.associativity_witness() {
        None => Outcome::Pass,
        Some((a, b, d)) => fail!(
            "({}*{})*{} = {} but {}*({}*{}) = {}",
            s.label(a),
            s.label(b),
            s.label(d),
            s.label(s.mul(s.mul(a, b), d)),
            s.label(a),
            s.label(b),
            s.label(d),
            s.label(s.mul(a, s.mul(b, d)))
        ),
    }
}

fn check_dual(c: &Ctx) -> Outcome {
    let d = c.s.dual();
    if d.dual() != *c.s {
        fail!("dual of the dual differs");
    }
    for a in c.s.elements() {
        for b in c.s.elements() {
            if d.mul(a, b) != c.s.mul(b, a) {
                fail!("dual product {}*{} is wrong", c.s.label(a), c.s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_regularity(c: &Ctx) -> Outcome {
    let s = c.s;
    for a in s.elements() {
        let naive = s.elements().any(|x| s.mul(s.mul(a, x), a) == a);
        match s.is_regular_element(a) {
            Some(x) if s.mul(s.mul(a, x), a) != a => fail!("{} is not an inverse witness for {}", s.label(x), s.label(a)),
            Some(_) if !naive => fail!("{} reported regular", s.label(a)),
            None if naive => fail!("{} is regular but reported irregular", s.label(a)),
            _ => {}
        }
    }
    if s.is_regular() != s.elements().all(|a| s.is_regular_element(a).is_some()) {
        fail!("is_regular disagrees with the elementwise test");
    }
    Outcome::Pass
}

fn check_idempotents(c: &Ctx) -> Outcome {
    let s = c.s;
    let naive = s.set_of(s.elements().filter(|&e| s.mul(e, e) == e));
    if s.idempotents() != naive {
        fail!("idempotents {} but expected {}", fmt_set(s, &s.idempotents()), fmt_set(s, &naive));
    }
    Outcome::Pass
}

fn partition_matches(c: &Ctx, name: &str, related: impl Fn(usize, usize) -> bool, ideals: &[ElementSet]) -> Outcome {
    let s = c.s;
    for a in s.elements() {
        for b in s.elements() {
            if related(a, b) != (ideals[a] == ideals[b]) {
                fail!("{} relation wrong on ({}, {})", name, s.label(a), s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_r(c: &Ctx) -> Outcome {
    partition_matches(c, "R", |a, b| c.g().r.related(a, b), c.nr())
}

fn check_l(c: &Ctx) -> Outcome {
    partition_matches(c, "L", |a, b| c.g().l.related(a, b), c.nl())
}

fn check_j(c: &Ctx) -> Outcome {
    partition_matches(c, "J", |a, b| c.g().j.related(a, b), c.nj())
}

fn check_h_meet(c: &Ctx) -> Outcome {
    let g = c.g();
    let s = c.s;
    for a in s.elements() {
        for b in s.elements() {
            if g.h.related(a, b) != (g.r.related(a, b) && g.l.related(a, b)) {
                fail!("H differs from R∧L on ({}, {})", s.label(a), s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_d_composition(c: &Ctx) -> Outcome {
    let g = c.g();
    let s = c.s;
    for a in s.elements() {
        for b in s.elements() {
            let rl = s.elements().any(|x| g.r.related(a, x) && g.l.related(x, b));
            let lr = s.elements().any(|x| g.l.related(a, x) && g.r.related(x, b));
            if rl != lr {
                fail!("R∘L and L∘R differ on ({}, {})", s.label(a), s.label(b));
            }
            if g.d.related(a, b) != rl {
                fail!("D differs from R∘L on ({}, {})", s.label(a), s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_inclusions(c: &Ctx) -> Outcome {
    let g = c.g();
    let pairs = [
        ("H", &g.h, "R", &g.r),
        ("H", &g.h, "L", &g.l),
        ("R", &g.r, "D", &g.d),
        ("L", &g.l, "D", &g.d),
        ("D", &g.d, "J", &g.j),
    ];
    for (n1, p1, n2, p2) in pairs {
        for class in &p1.classes {
            let a = class.first().expect("non-empty class");
            if let Some(b) = class.iter().find(|&b| !p2.related(a, b)) {
                fail!("{} ⊄ {}: ({}, {})", n1, n2, c.s.label(a), c.s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_r_left_congruence(c: &Ctx) -> Outcome {
    let g = c.g();
    let s = c.s;
    for class in &g.r.classes {
        let a = class.first().expect("non-empty class");
        for b in class.iter() {
            for x in s.elements() {
                if !g.r.related(s.mul(x, a), s.mul(x, b)) {
                    fail!("{} R {} but not {}{} R {}{}", s.label(a), s.label(b), s.label(x), s.label(a), s.label(x), s.label(b));
                }
            }
        }
    }
    Outcome::Pass
}

fn check_l_right_congruence(c: &Ctx) -> Outcome {
    let g = c.g();
    let s = c.s;
    for class in &g.l.classes {
        let a = class.first().expect("non-empty class");
        for b in class.iter() {
            for x in s.elements() {
                if !g.l.related(s.mul(a, x), s.mul(b, x)) {
                    fail!("{} L {} but not {}{} L {}{}", s.label(a), s.label(b), s.label(a), s.label(x), s.label(b), s.label(x));
                }
            }
        }
    }
    Outcome::Pass
}

fn check_right_ideals_unions(c: &Ctx) -> Outcome {
    let g = c.g();
    let s = c.s;
    for a in s.elements() {
        let a_s = s.set_of(s.elements().map(|b| s.mul(a, b)));
        for (name, set) in [("aS¹", &c.nr()[a]), ("aS", &a_s)] {
            if !is_right_ideal(s, set) {
                fail!("{} for a = {} is not a right ideal", name, s.label(a));
            }
            for x in set.iter() {
                if !g.r.classes[g.r.class_of[x]].is_subset(set) {
                    fail!("{} for a = {} splits the R-class of {}", name, s.label(a), s.label(x));
                }
            }
        }
    }
    Outcome::Pass
}

fn check_r_poset(c: &Ctx) -> Outcome {
    let g = c.g();
    let nr = c.nr();
    let reps: Vec<usize> = g.r.classes.iter().map(|k| k.first().expect("non-empty")).collect();
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            if g.r_poset.leq(i, j) != nr[a].is_subset(&nr[b]) {
                fail!("order between R-classes of {} and {} is wrong", c.s.label(a), c.s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_poset_bounds(c: &Ctx) -> Outcome {
    let p = &c.g().r_poset;
    let anti = p.maximum_antichain();
    if !p.is_antichain(&anti) || anti.len() != p.width() {
        fail!("maximum antichain {:?} does not realise width {}", anti, p.width());
    }
    let chain = p.longest_chain();
    if chain.len() != p.height() || chain.windows(2).any(|w| !p.lt(w[0], w[1])) {
        fail!("longest chain {:?} does not realise height {}", chain, p.height());
    }
    if p.width() * p.height() < p.len() {
        fail!("width {} times height {} is below {} elements", p.width(), p.height(), p.len());
    }
    if p.len() <= 12 {
        let n = p.len();
        let brute = (0u32..1 << n)
            .filter(|m| {
                let v: Vec<usize> = (0..n).filter(|i| m & (1 << i) != 0).collect();
                p.is_antichain(&v)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        if brute != p.width() {
            fail!("width {} but brute force finds {}", p.width(), brute);
        }
    }
    Outcome::Pass
}

fn check_principal_ideals(c: &Ctx) -> Outcome {
    let s = c.s;
    for a in s.elements() {
        let r = principal_right_ideal(s, a);
        let l = principal_left_ideal(s, a);
        if r != c.nr()[a] || l != c.nl()[a] {
            fail!("principal one-sided ideals of {} are wrong", s.label(a));
        }
        if !is_right_ideal(s, &r) || !is_left_ideal(s, &l) || !is_ideal(s, &c.nj()[a]) {
            fail!("principal ideals of {} are not closed", s.label(a));
        }
    }
    Outcome::Pass
}

fn check_min_right_simple(c: &Ctx) -> Outcome {
    let s = c.s;
    for r in minimal_right_ideals(s) {
        if let Some(a) = r.iter().find(|&a| product_with(s, a, &r) != r) {
            fail!("minimal right ideal {} is not right simple at {}", fmt_set(s, &r), s.label(a));
        }
    }
    for l in minimal_left_ideals(s) {
        if let Some(a) = l.iter().find(|&a| s.set_of(l.iter().map(|y| s.mul(y, a))) != l) {
            fail!("minimal left ideal {} is not left simple at {}", fmt_set(s, &l), s.label(a));
        }
    }
    Outcome::Pass
}

fn check_kernel_simple(c: &Ctx) -> Outcome {
    let s = c.s;
    let k = kernel(s);
    if !is_ideal(s, &k) {
        fail!("kernel {} is not an ideal", fmt_set(s, &k));
    }
    for a in k.iter() {
        let ka = s.set_of(k.iter().map(|x| s.mul(x, a)));
        let mut kak = s.empty_set();
        for y in ka.iter() {
            kak.union_with(&product_with(s, y, &k));
        }
        if kak != k {
            fail!("K{}K = {} differs from K", s.label(a), fmt_set(s, &kak));
        }
    }
    Outcome::Pass
}

fn check_kernel_minimum(c: &Ctx) -> Outcome {
    let s = c.s;
    let k = kernel(s);
    if let Some(a) = s.elements().find(|&a| !k.is_subset(&c.nj()[a])) {
        fail!("kernel is not inside the principal ideal of {}", s.label(a));
    }
    Outcome::Pass
}

fn check_kernel_union(c: &Ctx) -> Outcome {
    let s = c.s;
    let k = kernel(s);
    for (side, ideals) in [("right", minimal_right_ideals(s)), ("left", minimal_left_ideals(s))] {
        if ideals.is_empty() {
            continue;
        }
        let mut u = s.empty_set();
        for r in &ideals {
            u.union_with(r);
        }
        if u != k {
            fail!("union of minimal {} ideals {} differs from the kernel {}", side, fmt_set(s, &u), fmt_set(s, &k));
        }
    }
    Outcome::Pass
}

fn check_completely_simple_kernel(c: &Ctx) -> Outcome {
    let s = c.s;
    let k = kernel(s);
    let (ks, _) = match s.restrict(&k) {
        Ok(x) => x,
        Err(e) => fail!("kernel does not restrict: {}", e),
    };
    let both = !minimal_right_ideals(s).is_empty() && !minimal_left_ideals(s).is_empty();
    if classify(&ks).is_completely_simple != both {
        fail!("kernel completely simple = {} but minimal right and left ideals exist = {}", !both, both);
    }
    Outcome::Pass
}

fn zero_min(c: &Ctx) -> Option<(usize, Vec<ElementSet>)> {
    let z = c.s.zero()?;
    let list = zero_minimal_right_ideals(c.s).ok()?;
    Some((z, list))
}

fn check_zero_minimal(c: &Ctx) -> Outcome {
    let s = c.s;
    let Some((z, list)) = zero_min(c) else { return Outcome::Skip };
    let zero_set = s.set_of([z]);
    let generated: Vec<ElementSet> = s
        .elements()
        .map(|a| {
            let mut set = c.nr()[a].clone();
            set.insert(z);
            set
        })
        .collect();
    for r in &list {
        if !r.contains(z) || *r == zero_set || !is_right_ideal(s, r) {
            fail!("{} is not a non-trivial right ideal containing 0", fmt_set(s, r));
        }
        if let Some(a) = r.iter().find(|&a| a != z && generated[a] != *r) {
            fail!("{} generates less than {}", s.label(a), fmt_set(s, r));
        }
    }
    // every aS¹ ∪ 0 with nothing strictly smaller and non-zero below it is listed
    for a in s.elements().filter(|&a| a != z) {
        let ga = &generated[a];
        let minimal = ga.iter().filter(|&b| b != z).all(|b| generated[b] == *ga);
        if minimal && !list.contains(ga) {
            fail!("0-minimal right ideal {} is missing", fmt_set(s, ga));
        }
    }
    Outcome::Pass
}

fn check_sr(c: &Ctx) -> Outcome {
    let Some((_, list)) = zero_min(c) else { return Outcome::Skip };
    let list: Vec<ElementSet> = list.into_iter().filter(|r| is_globally_idempotent(c.s, r)).collect();
    if list.is_empty() {
        return Outcome::Skip;
    }
    for r in &list {
        match decompose_sr(c.s, r) {
            Ok(rep) => {
                if let Some(w) = clauses_outcome("SR", &rep.clauses) {
                    fail!("R = {}: {}", fmt_set(c.s, r), w);
                }
            }
            Err(e) => fail!("R = {}: {}", fmt_set(c.s, r), e),
        }
    }
    Outcome::Pass
}

fn socle_outcome(s: &FiniteSemigroup, side: Side) -> Outcome {
    if s.zero().is_none() {
        return Outcome::Skip;
    }
    match socle(s, side) {
        Ok(rep) => {
            if rep.zero_minimal.is_empty() {
                return Outcome::Skip;
            }
            match clauses_outcome("socle", &rep.clauses) {
                Some(w) => Outcome::Fail(w),
                None => Outcome::Pass,
            }
        }
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn check_socle_right(c: &Ctx) -> Outcome {
    socle_outcome(c.s, Side::Right)
}

fn check_socle_left(c: &Ctx) -> Outcome {
    socle_outcome(c.s, Side::Left)
}

fn check_socle_parts(c: &Ctx) -> Outcome {
    let s = c.s;
    let Some((z, list)) = zero_min(c) else { return Outcome::Skip };
    let rep = match socle(s, Side::Right) {
        Ok(r) => r,
        Err(e) => fail!("{}", e),
    };
    let mut sigma = s.set_of([z]);
    for r in &list {
        sigma.union_with(r);
    }
    if rep.sigma != sigma {
        fail!("Σ^r = {} but the union of 0-minimal right ideals is {}", fmt_set(s, &rep.sigma), fmt_set(s, &sigma));
    }
    if rep.null_part.union(&rep.gi_part) != sigma {
        fail!("A^r ∪ B^r does not cover Σ^r");
    }
    if !rep.null_part.intersection(&rep.gi_part).is_subset(&s.set_of([z])) {
        fail!("A^r and B^r meet outside 0");
    }
    Outcome::Pass
}

fn check_left_lemma(c: &Ctx) -> Outcome {
    let s = c.s;
    if s.zero().is_none() {
        return Outcome::Skip;
    }
    match socle(s, Side::Left) {
        Ok(left) if left.sigma == s.all() && !left.zero_minimal.is_empty() => {}
        _ => return Outcome::Skip,
    }
    match left_socle_lemma(s) {
        Ok(clauses) => match clauses_outcome("left socle lemma", &clauses) {
            Some(w) => Outcome::Fail(w),
            None => Outcome::Pass,
        },
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn check_kernel_quotient_socle(c: &Ctx) -> Outcome {
    let s = c.s;
    let q = match rees_quotient(s, &kernel(s)) {
        Ok(q) => q.semigroup,
        Err(e) => fail!("S/K: {}", e),
    };
    let mut any = false;
    for side in [Side::Right, Side::Left] {
        match socle_outcome(&q, side) {
            Outcome::Fail(w) => fail!("S/K: {}", w),
            Outcome::Pass => any = true,
            Outcome::Skip => {}
        }
    }
    let qc = Ctx::new(&q);
    if let Outcome::Fail(w) = check_sr(&qc) {
        fail!("S/K: {}", w);
    }
    if any {
        Outcome::Pass
    } else {
        Outcome::Skip
    }
}

fn check_annihilator_antichains(c: &Ctx) -> Outcome {
    let s = c.s;
    let Some((z, list)) = zero_min(c) else { return Outcome::Skip };
    if list.is_empty() {
        return Outcome::Skip;
    }
    for r in &list {
        let within: Vec<ElementSet> = s
            .elements()
            .map(|a| {
                let mut set = product_with(s, a, r);
                set.insert(a);
                set
            })
            .collect();
        let kills = |a: usize| r.iter().all(|b| s.mul(a, b) == z);
        let nonzero: Vec<usize> = r.iter().filter(|&a| a != z).collect();
        for &a in &nonzero {
            for &b in &nonzero {
                if a == b {
                    continue;
                }
                let incomparable = !within[a].is_subset(&within[b]) && !within[b].is_subset(&within[a]);
                if incomparable != (kills(a) && kills(b)) {
                    fail!(
                        "in R = {}: aR¹, bR¹ incomparable = {} for a = {}, b = {}",
                        fmt_set(s, r),
                        incomparable,
                        s.label(a),
                        s.label(b)
                    );
                }
            }
        }
    }
    Outcome::Pass
}

fn check_annihilator_report(c: &Ctx) -> Outcome {
    let s = c.s;
    let Some((z, list)) = zero_min(c) else { return Outcome::Skip };
    if list.is_empty() {
        return Outcome::Skip;
    }
    for r in &list {
        let naive = s.set_of(r.iter().filter(|&a| a != z && r.iter().all(|b| s.mul(a, b) == z)));
        match annihilator_set(s, r) {
            Ok(set) if set == naive => {}
            Ok(set) => fail!("annihilator of {} is {} not {}", fmt_set(s, r), fmt_set(s, &set), fmt_set(s, &naive)),
            Err(e) => fail!("{}", e),
        }
        let rep = match sgchain_core::chains::zero_min_right_ideal_report(s, r) {
            Ok(rep) => rep,
            Err(e) => fail!("{}", e),
        };
        if rep.annihilator != AnnihilatorSize::Finite(naive.len()) {
            fail!("report gives {:?} for {} annihilating elements", rep.annihilator, naive.len());
        }
        if let Some(cert) = &rep.certificate {
            let backend = match FiniteBackend::on_subsemigroup(s, r) {
                Ok(b) => b,
                Err(e) => fail!("{}", e),
            };
            if let Err(e) = validate_certificate(&backend, cert) {
                fail!("{}", e);
            }
        }
    }
    Outcome::Pass
}

fn check_kernel_rees_quotient(c: &Ctx) -> Outcome {
    let s = c.s;
    let k = kernel(s);
    let q = match rees_quotient(s, &k) {
        Ok(q) => q,
        Err(e) => fail!("{}", e),
    };
    if q.semigroup.size() != s.size() - k.len() + 1 {
        fail!("S/K has {} elements", q.semigroup.size());
    }
    if let Some(a) = k.iter().find(|&a| q.map[a] != q.zero) {
        fail!("{} in K does not map to 0", s.label(a));
    }
    for a in s.elements() {
        for b in s.elements() {
            if q.map[s.mul(a, b)] != q.semigroup.mul(q.map[a], q.map[b]) {
                fail!("quotient map is not multiplicative at ({}, {})", s.label(a), s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_principal_factors(c: &Ctx) -> Outcome {
    let s = c.s;
    let g = c.g();
    let k = kernel(s);
    for class in &g.j.classes {
        let a = class.first().expect("non-empty class");
        let pf = principal_factor(s, a);
        if pf.class != *class {
            fail!("principal factor of {} has the wrong J-class", s.label(a));
        }
        let rep = classify(&pf.semigroup);
        let ok = match pf.tag {
            FactorTag::Kernel => *class == k && rep.is_simple,
            FactorTag::ZeroSimple => *class != k && rep.is_0_simple == Some(true),
            FactorTag::Null => *class != k && rep.is_null,
        };
        if !ok {
            fail!("principal factor of {} tagged {:?} does not fit", s.label(a), pf.tag);
        }
        if pf.tag != FactorTag::Kernel && pf.semigroup.size() != class.len() + 1 {
            fail!("principal factor of {} has {} elements", s.label(a), pf.semigroup.size());
        }
    }
    Outcome::Pass
}

fn check_adjoin(c: &Ctx) -> Outcome {
    let s = c.s;
    let s1 = s.adjoin_identity();
    let Some(e) = s1.identity() else { fail!("S¹ has no identity") };
    if s.identity().is_some() && s1 != *s {
        fail!("adjoining an identity to a monoid changed it");
    }
    if s.identity().is_none() && (s1.size() != s.size() + 1 || e != s.size()) {
        fail!("S¹ has the wrong shape");
    }
    let s0 = s.adjoin_zero();
    if s0.zero().is_none() {
        fail!("S⁰ has no zero");
    }
    if s.zero().is_some() && s0 != *s {
        fail!("adjoining a zero to a semigroup with zero changed it");
    }
    for t in [&s1, &s0] {
        if let Some((a, b, d)) = t.associativity_witness() {
            fail!("extension not associative at ({}, {}, {})", t.label(a), t.label(b), t.label(d));
        }
    }
    Outcome::Pass
}

/// The R-classes of `{x_a} ∪ {0}` in `U(S, A)` and their order against those of `A`.
pub fn u_poset_outcome(s: &FiniteSemigroup, act: &Act) -> Outcome {
    let uc = match u_construction(s, act) {
        Ok(u) => u,
        Err(e) => fail!("{}", e),
    };
    let g = compute_green(&uc.semigroup);
    let (part, poset) = act.rs_classes();
    let xc = |a: usize| g.r.class_of[uc.x_map[a]];
    let zc = g.r.class_of[uc.zero];
    if g.r.classes[zc].len() != 1 {
        fail!("0 shares its R-class");
    }
    for a in 0..act.len() {
        if !g.r_poset.lt(zc, xc(a)) {
            fail!("0 is not strictly below x_{}", act.label(a));
        }
        if !g.r.classes[xc(a)].is_subset(&uc.x_ideal()) {
            fail!("R-class of x_{} leaves the ideal", act.label(a));
        }
        for b in 0..act.len() {
            if part.related(a, b) != g.r.related(uc.x_map[a], uc.x_map[b]) {
                fail!("classes of {} and {} differ", act.label(a), act.label(b));
            }
            if poset.leq(part.class_of[a], part.class_of[b]) != g.r_poset.leq(xc(a), xc(b)) {
                fail!("order between {} and {} differs", act.label(a), act.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_u_regular(c: &Ctx) -> Outcome {
    u_poset_outcome(c.s, &Act::regular(c.s))
}

fn check_u_one_point(c: &Ctx) -> Outcome {
    u_poset_outcome(c.s, &Act::one_point(c.s))
}

fn check_regular_act(c: &Ctx) -> Outcome {
    let g = c.g();
    let (part, poset) = Act::regular(c.s).rs_classes();
    let s = c.s;
    for a in s.elements() {
        for b in s.elements() {
            if part.related(a, b) != g.r.related(a, b) {
                fail!("act classes differ from R at ({}, {})", s.label(a), s.label(b));
            }
            if poset.leq(part.class_of[a], part.class_of[b]) != g.r_poset.leq(g.r.class_of[a], g.r.class_of[b]) {
                fail!("act order differs from the R-order at ({}, {})", s.label(a), s.label(b));
            }
        }
    }
    Outcome::Pass
}

fn check_finite_antichain(c: &Ctx) -> Outcome {
    let backend = FiniteBackend::new(c.s);
    let width = c.g().r_poset.width();
    match antichain_certificate(&backend, width.max(2), 0) {
        Ok(Search::Found(cert)) => {
            if width < 2 {
                fail!("antichain of size 2 found in a chain of R-classes");
            }
            if cert.verdict_basis != VerdictBasis::Exact {
                fail!("finite certificate is not exact");
            }
            if let Err(e) = validate_certificate(&backend, &cert) {
                fail!("{}", e);
            }
        }
        Ok(Search::NotFoundUpTo { best, .. }) => {
            if width >= 2 {
                fail!("search stopped at {} below the width {}", best, width);
            }
        }
        Err(e) => fail!("{}", e),
    }
    match antichain_certificate(&backend, width + 1, 0) {
        Ok(Search::Found(_)) => fail!("antichain larger than the width"),
        Ok(_) => Outcome::Pass,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn check_finite_chain(c: &Ctx) -> Outcome {
    let backend = FiniteBackend::new(c.s);
    let height = c.g().r_poset.height();
    if height >= 2 {
        match ascending_chain_certificate(&backend, height, 0) {
            Ok(Search::Found(cert)) => {
                if let Err(e) = validate_certificate(&backend, &cert) {
                    fail!("{}", e);
                }
            }
            Ok(_) => fail!("no chain of length {}", height),
            Err(e) => fail!("{}", e),
        }
    }
    match ascending_chain_certificate(&backend, (height + 1).max(2), 0) {
        Ok(Search::Found(_)) => fail!("chain longer than the height {}", height),
        Ok(_) => Outcome::Pass,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn check_classify(c: &Ctx) -> Outcome {
    let s = c.s;
    let r = classify(s);
    let implications = [
        ("completely simple ⇒ simple", !r.is_completely_simple || r.is_simple),
        ("right simple ⇒ simple", !r.is_right_simple || r.is_simple),
        ("left simple ⇒ simple", !r.is_left_simple || r.is_simple),
        ("null ⇒ has zero", !r.is_null || s.zero().is_some()),
        ("completely 0-simple ⇒ 0-simple", r.is_completely_0_simple != Some(true) || r.is_0_simple == Some(true)),
        ("zero flags present iff zero", r.is_0_simple.is_some() == s.zero().is_some()),
        ("simple and finite ⇒ completely simple", !r.is_simple || r.is_completely_simple),
        ("regular flag", r.is_regular == s.is_regular()),
    ];
    for (name, ok) in implications {
        if !ok {
            fail!("{}", name);
        }
    }
    let nj = c.nj();
    let simple = s.elements().all(|a| nj[a].len() == s.size());
    if r.is_simple != simple {
        fail!("is_simple = {} but the principal ideals say {}", r.is_simple, simple);
    }
    Outcome::Pass
}

pub const FINITE_CHECKS: &[FiniteCheck] = &[
    FiniteCheck { id: "semigroup.associative", anchor: "a semigroup is a set with an associative operation", run: check_associative },
    FiniteCheck { id: "semigroup.dual", anchor: "left-right duality", run: check_dual },
    FiniteCheck { id: "semigroup.regularity", anchor: "regular elements a = axa", run: check_regularity },
    FiniteCheck { id: "semigroup.idempotents", anchor: "idempotents e = ee", run: check_idempotents },
    FiniteCheck { id: "green.r_from_ideals", anchor: "R: equal principal right ideals", run: check_r },
    FiniteCheck { id: "green.l_from_ideals", anchor: "L: equal principal left ideals", run: check_l },
    FiniteCheck { id: "green.j_from_ideals", anchor: "J: equal principal two-sided ideals", run: check_j },
    FiniteCheck { id: "green.h_meet", anchor: "H is the meet of R and L", run: check_h_meet },
    FiniteCheck { id: "green.d_composition", anchor: "D = R∘L = L∘R", run: check_d_composition },
    FiniteCheck { id: "green.inclusions", anchor: "H ⊆ R, L ⊆ D ⊆ J", run: check_inclusions },
    FiniteCheck { id: "green.r_left_congruence", anchor: "R is compatible with left multiplication", run: check_r_left_congruence },
    FiniteCheck { id: "green.l_right_congruence", anchor: "L is compatible with right multiplication", run: check_l_right_congruence },
    FiniteCheck { id: "green.right_ideals_unions", anchor: "right ideals are unions of R-classes", run: check_right_ideals_unions },
    FiniteCheck { id: "green.r_poset", anchor: "R-classes ordered by principal right ideals", run: check_r_poset },
    FiniteCheck { id: "posets.width_height", anchor: "width and height of the R-class poset", run: check_poset_bounds },
    FiniteCheck { id: "ideals.principal", anchor: "principal right, left and two-sided ideals", run: check_principal_ideals },
    FiniteCheck { id: "minimal.one_sided_simple", anchor: "minimal right ideals are right simple", run: check_min_right_simple },
    FiniteCheck { id: "minimal.kernel_simple", anchor: "the kernel is a simple ideal", run: check_kernel_simple },
    FiniteCheck { id: "minimal.kernel_minimum", anchor: "the kernel lies in every ideal", run: check_kernel_minimum },
    FiniteCheck { id: "minimal.kernel_union", anchor: "the kernel is the union of the minimal right ideals", run: check_kernel_union },
    FiniteCheck { id: "minimal.completely_simple_kernel", anchor: "completely simple kernel", run: check_completely_simple_kernel },
    FiniteCheck { id: "zero.zero_minimal_right", anchor: "0-minimal right ideals", run: check_zero_minimal },
    FiniteCheck { id: "socle.sr_decomposition", anchor: "SR is a 0-disjoint union", run: check_sr },
    FiniteCheck { id: "socle.right_clauses", anchor: "the right socle is a 0-disjoint union", run: check_socle_right },
    FiniteCheck { id: "socle.left_clauses", anchor: "the left socle is a 0-disjoint union", run: check_socle_left },
    FiniteCheck { id: "socle.parts", anchor: "the right socle splits into null and globally idempotent parts", run: check_socle_parts },
    FiniteCheck { id: "socle.left_lemma", anchor: "S equal to its left socle", run: check_left_lemma },
    FiniteCheck { id: "socle.kernel_quotient", anchor: "socle clauses on the Rees quotient by the kernel", run: check_kernel_quotient_socle },
    FiniteCheck { id: "annihilator.antichains", anchor: "incomparable principal right ideals of R are exactly those with aR = 0", run: check_annihilator_antichains },
    FiniteCheck { id: "annihilator.report", anchor: "the set {a : aR = 0}", run: check_annihilator_report },
    FiniteCheck { id: "constructions.kernel_quotient", anchor: "Rees quotient by an ideal", run: check_kernel_rees_quotient },
    FiniteCheck { id: "constructions.principal_factors", anchor: "principal factors are 0-simple or null", run: check_principal_factors },
    FiniteCheck { id: "constructions.adjoin", anchor: "adjoining an identity or a zero", run: check_adjoin },
    FiniteCheck { id: "constructions.u_poset_regular", anchor: "U(S, A): the ideal of the x_a mirrors A (regular act)", run: check_u_regular },
    FiniteCheck { id: "constructions.u_poset_one_point", anchor: "U(S, A): the ideal of the x_a mirrors A (one-point act)", run: check_u_one_point },
    FiniteCheck { id: "acts.regular_act_classes", anchor: "subacts of S_S are right ideals", run: check_regular_act },
    FiniteCheck { id: "chains.finite_antichain", anchor: "antichains of principal right ideals", run: check_finite_antichain },
    FiniteCheck { id: "chains.finite_chain", anchor: "ascending chains of principal right ideals", run: check_finite_chain },
    FiniteCheck { id: "classify.consistency", anchor: "simplicity notions", run: check_classify },
];

/// Runs one check, turning a panic into a failure.
pub fn run_check(check: &FiniteCheck, ctx: &Ctx) -> Outcome {
    match panic::catch_unwind(AssertUnwindSafe(|| (check.run)(ctx))) {
        Ok(o) => o,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".to_string());
            Outcome::Fail(format!("panicked: {}", msg))
        }
    }
}

/// Every associative table on three elements.
pub fn three_element_semigroups() -> Vec<FiniteSemigroup> {
    let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    for code in 0..3usize.pow(9) {
        let t: Vec<usize> = (0..9).map(|k| (code / 3usize.pow(k)) % 3).collect();
        let assoc = (0..3).all(|a| (0..3).all(|b| (0..3).all(|c| t[t[a * 3 + b] * 3 + c] == t[a * 3 + t[b * 3 + c]])));
        if assoc {
            let rows = t.chunks(3).map(|r| r.to_vec()).collect();
            out.push(FiniteSemigroup::from_table(labels.clone(), rows, None, None).expect("associative"));
        }
    }
    out
}

pub const RANDOM_MAX_SIZE: usize = 200;

/// The `index`-th random transformation semigroup for `seed`: 3 to 5 points,
/// 2 or 3 maps, resampled until it has at most 200 elements.
pub fn random_transformation_semigroup(seed: u64, index: usize) -> FiniteSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    loop {
        let k = rng.gen_range(3..=5);
        let m = rng.gen_range(2..=3);
        let maps: Vec<Vec<usize>> = (0..m).map(|_| (0..k).map(|_| rng.gen_range(0..k)).collect()).collect();
        if let Some(s) = FiniteSemigroup::from_transformations_capped(k, &maps, RANDOM_MAX_SIZE).expect("valid maps") {
            return s;
        }
    }
}

/// A copy of a built-in finite instance with the first single table entry
/// change (row-major, smallest new value first) that breaks associativity.
pub fn mutated(name: &str) -> Option<FiniteSemigroup> {
    let s = zoo::finite(name)?;
    let n = s.size();
    let rows = s.rows();
    for a in 0..n {
        for b in 0..n {
            for v in 0..n {
                if v == rows[a][b] {
                    continue;
                }
                let mut t = rows.clone();
                t[a][b] = v;
                let m = FiniteSemigroup::from_table_unchecked(s.labels().to_vec(), t).ok()?;
                if m.associativity_witness().is_some() {
                    return Some(m);
                }
            }
        }
    }
    None
}

struct Instance {
    id: String,
    family: String,
    s: FiniteSemigroup,
}

fn finite_instances(opts: &VerifyOptions) -> Result<Vec<Instance>, String> {
    let mut out: Vec<Instance> = zoo::finite_instances()
        .into_iter()
        .map(|(n, s)| Instance {
            id: format!("zoo:{}", n),
            family: format!("zoo:{}", n),
            s,
        })
        .collect();
    if let Some(name) = &opts.mutate {
        let s = mutated(name).ok_or_else(|| format!("no finite built-in instance {:?} to mutate", name))?;
        out.push(Instance {
            id: format!("mutated:{}", name),
            family: format!("mutated:{}", name),
            s,
        });
    }
    for (k, s) in three_element_semigroups().into_iter().enumerate() {
        out.push(Instance {
            id: format!("three-element#{}", k),
            family: "three-element".to_string(),
            s,
        });
    }
    let family = format!("random(seed={},count={})", opts.seed, opts.count);
    let random: Vec<FiniteSemigroup> = (0..opts.count)
        .into_par_iter()
        .map(|i| random_transformation_semigroup(opts.seed, i))
        .collect();
    for (i, s) in random.into_iter().enumerate() {
        out.push(Instance {
            id: format!("random#{}", i),
            family: family.clone(),
            s,
        });
    }
    Ok(out)
}

type Timings = BTreeMap<String, Duration>;

fn run_finite(opts: &VerifyOptions, timings: &mut Timings) -> Result<Vec<Record>, String> {
    let instances = finite_instances(opts)?;
    let results: Vec<Vec<(Outcome, Duration)>> = instances
        .par_iter()
        .map(|inst| {
            let ctx = Ctx::new(&inst.s);
            FINITE_CHECKS
                .iter()
                .map(|check| {
                    let t = Instant::now();
                    let o = run_check(check, &ctx);
                    (o, t.elapsed())
                })
                .collect()
        })
        .collect();
    let mut families: Vec<&str> = Vec::new();
    for inst in &instances {
        if !families.contains(&inst.family.as_str()) {
            families.push(&inst.family);
        }
    }
    let mut records = Vec::new();
    for (ci, check) in FINITE_CHECKS.iter().enumerate() {
        let total: Duration = results.iter().map(|r| r[ci].1).sum();
        *timings.entry(check.id.to_string()).or_default() += total;
        for fam in &families {
            let outs = instances
                .iter()
                .zip(&results)
                .filter(|(inst, _)| inst.family == *fam)
                .map(|(inst, r)| (inst.id.as_str(), &r[ci].0));
            records.push(Record::aggregate(check.id, check.anchor, fam, outs));
        }
    }
    Ok(records)
}

pub struct InfiniteCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub instance: &'static str,
    pub run: fn(u64) -> Outcome,
}

fn abb_aba() -> FpSemigroup {
    FpSemigroup::abb_aba()
}

fn word(letters: &str) -> Word {
    Word::new(letters.bytes().map(|c| (c - b'a') as u16).collect())
}

fn a_pow(n: usize) -> Word {
    Word::power(0, n)
}

fn inf_confluence(_: u64) -> Outcome {
    let fp = abb_aba();
    let rep = fp.rs().local_confluence();
    if !rep.confluent {
        let (cp, l, r) = rep.witness.expect("witness on failure");
        fail!(
            "critical pair on {} reduces to {} and {}",
            fp.rs().format_word(&cp.overlap),
            fp.rs().format_word(&l),
            fp.rs().format_word(&r)
        );
    }
    if rep.pairs_checked == 0 {
        fail!("no critical pairs were examined");
    }
    match knuth_bendix(fp.rs(), DEFAULT_MAX_RULES, DEFAULT_MAX_LEN) {
        Ok(c) if c.is_completed() && c.system().rules() == fp.rs().rules() => Outcome::Pass,
        Ok(_) => Outcome::Fail("completion changed a confluent system".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn all_words(k: u16, n: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    for _ in 0..n {
        out = out.iter().flat_map(|w| (0..k).map(move |x| w.push(x))).collect();
    }
    out
}

fn inf_normal_forms(_: u64) -> Outcome {
    let fp = abb_aba();
    let forms = match fp.enumerate_normal_forms(12) {
        Ok(f) => f,
        Err(e) => fail!("{}", e),
    };
    let lhs = [word("abb"), word("aba")];
    for n in 1..=12 {
        let got = &forms[n - 1];
        if got.len() != 2 * n {
            fail!("{} normal forms of length {}, expected {}", got.len(), n, 2 * n);
        }
        let oracle: HashSet<Word> = all_words(2, n).into_iter().filter(|w| !lhs.iter().any(|l| w.contains_factor(l))).collect();
        let got_set: HashSet<Word> = got.iter().cloned().collect();
        if got_set != oracle {
            fail!("normal forms of length {} differ from the subword filter", n);
        }
    }
    Outcome::Pass
}

fn inf_identity(_: u64) -> Outcome {
    let fp = abb_aba();
    let b = Word::letter(1);
    for i in 1..=6 {
        for j in 1..=6 {
            let w = a_pow(i).concat(&Word::power(1, i)).concat(&a_pow(j)).concat(&Word::power(1, j + 1));
            if fp.rs().reduce(&w) != b {
                fail!("a^{} b^{} a^{} b^{} reduces to {}", i, i, j, j + 1, fp.rs().format_word(&fp.rs().reduce(&w)));
            }
        }
    }
    Outcome::Pass
}

fn inf_kernel(_: u64) -> Outcome {
    let fp = abb_aba();
    let forms: Vec<Word> = fp.enumerate_normal_forms(7).expect("confluent").into_iter().flatten().collect();
    let b = Word::letter(1);
    if let Err(e) = FpIdealBackend::new(fp.clone(), 1, 4) {
        fail!("{}", e);
    }
    for x in forms.iter().filter(|w| w.contains_letter(1)) {
        // products with kernel elements stay in the kernel
        for y in &forms {
            if !fp.multiply(x, y).contains_letter(1) || !fp.multiply(y, x).contains_letter(1) {
                fail!("{} times {} leaves the kernel", fp.rs().format_word(x), fp.rs().format_word(y));
            }
        }
        // b lies in the ideal generated by every kernel element
        if x.len() <= 5 {
            let mults: Vec<Option<&Word>> = std::iter::once(None).chain(forms.iter().map(Some)).collect();
            let reach = mults.iter().any(|u| {
                let left = u.map_or_else(|| x.clone(), |u| fp.multiply(u, x));
                mults.iter().any(|v| v.map_or_else(|| left.clone(), |v| fp.multiply(&left, v)) == b)
            });
            if !reach {
                fail!("b is not found in the ideal generated by {}", fp.rs().format_word(x));
            }
        }
    }
    // the words without b are the powers of a, all distinct and irreducible
    for n in 1..=12 {
        if !fp.rs().is_irreducible(&a_pow(n)) {
            fail!("a^{} is reducible", n);
        }
    }
    Outcome::Pass
}

fn inf_quotient_chain(_: u64) -> Outcome {
    let fp = abb_aba();
    let backend = match FpBackend::new(fp.clone(), 12) {
        Ok(b) => b,
        Err(e) => fail!("{}", e),
    };
    use sgchain_core::chains::ExplorableSemigroup;
    for n in 1..=10 {
        let (big, small) = (a_pow(n), a_pow(n + 1));
        if !backend.in_principal_right_ideal(&small, &big).is_member() {
            fail!("a^{} is not in a^{}S¹", n + 1, n);
        }
        if backend.in_principal_right_ideal(&big, &small).is_member() {
            fail!("a^{} lies in a^{}S¹", n, n + 1);
        }
        // modulo the kernel: a^{n+1} w never returns to a^n
        for w in fp.enumerate_normal_forms(6).expect("confluent").into_iter().flatten() {
            if fp.multiply(&small, &w) == big {
                fail!("a^{} {} = a^{}", n + 1, fp.rs().format_word(&w), n);
            }
        }
    }
    Outcome::Pass
}

fn inf_kernel_antichain(_: u64) -> Outcome {
    let cert = match kernel_antichain(50, 12) {
        Ok(c) => c,
        Err(e) => fail!("{}", e),
    };
    if cert.elements.len() != 50 || cert.checked_bound != 12 {
        fail!("certificate has {} elements at bound {}", cert.elements.len(), cert.checked_bound);
    }
    if (0..50).any(|i| cert.elements[i] != ba_power(i)) {
        fail!("certificate is not {{b a^i : i < 50}}");
    }
    match validate_certificate(&FpIdealBackend::kernel_abb_aba(12), &cert) {
        Ok(()) => Outcome::Pass,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn inf_subacts(seed: u64) -> Outcome {
    let fp = abb_aba();
    let kernel_forms: Vec<Word> = fp
        .enumerate_normal_forms(6)
        .expect("confluent")
        .into_iter()
        .flatten()
        .filter(|w| w.contains_letter(1))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..100 {
        let k = rng.gen_range(1..=4);
        let xs: Vec<Word> = (0..k).map(|_| kernel_forms[rng.gen_range(0..kernel_forms.len())].clone()).collect();
        let r = match kernel_subact_generators(&xs, 6) {
            Ok(r) => r,
            Err(e) => fail!("trial {}: {}", trial, e),
        };
        if r.generators.len() > 3 || r.generators.is_empty() {
            fail!("trial {}: {} generators", trial, r.generators.len());
        }
        if !r.agrees {
            fail!("trial {}: generators disagree with the closure", trial);
        }
        // independent comparison on the ball
        let limit = 14;
        let ball: HashSet<Word> = fp.enumerate_normal_forms(6).expect("confluent").into_iter().flatten().collect();
        let left = bounded_closure(&fp, &xs, limit);
        let right = bounded_closure(&fp, &r.generators, limit);
        if ball.iter().any(|w| left.contains(w) != right.contains(w)) {
            fail!("trial {}: closures differ on the ball", trial);
        }
    }
    Outcome::Pass
}

fn inf_free1(_: u64) -> Outcome {
    let fp = match FpSemigroup::free(1) {
        Ok(f) => f,
        Err(e) => fail!("{}", e),
    };
    let b = FpBackend::new(fp, 15).expect("free semigroups are confluent");
    match antichain_certificate(&b, 2, 15) {
        Ok(Search::NotFoundUpTo { radius: 15, best }) if best <= 1 => Outcome::Pass,
        Ok(other) => Outcome::Fail(format!("unexpected result {:?}", other)),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn inf_free2(_: u64) -> Outcome {
    let fp = FpSemigroup::free(2).expect("free");
    let b = FpBackend::new(fp, 12).expect("free semigroups are confluent");
    match antichain_certificate(&b, 20, 12) {
        Ok(Search::Found(cert)) => {
            if cert.verdict_basis != VerdictBasis::Exact || cert.elements.len() != 20 {
                fail!("certificate is not an exact antichain of 20");
            }
            match validate_certificate(&b, &cert) {
                Ok(()) => Outcome::Pass,
                Err(e) => Outcome::Fail(e.to_string()),
            }
        }
        Ok(other) => Outcome::Fail(format!("no antichain of 20: {:?}", other)),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn reesz(name: &str) -> SymbolicReesZ {
    match zoo::resolve(name) {
        Some(crate::instance::Resolved::ReesZ(r)) => r,
        _ => panic!("{} is not a Rees matrix semigroup over Z", name),
    }
}

fn inf_reesz_identity(_: u64) -> Outcome {
    let spec = reesz("reesz_identity");
    let backend = ReesZRowBackend { spec: spec.clone(), row: 0 };
    match antichain_certificate(&backend, 100, 100) {
        Ok(Search::Found(cert)) => {
            if cert.verdict_basis != VerdictBasis::Exact {
                fail!("not exact");
            }
            if let Err(e) = validate_certificate(&backend, &cert) {
                fail!("{}", e);
            }
        }
        other => fail!("no antichain of 100 in R_1: {:?}", other.map(|s| s.certificate().is_some())),
    }
    match spec.zero_min_right_ideal_report(0, 100) {
        Ok(rep) if rep.annihilator == AnnihilatorSize::Infinite && rep.certificate.is_some() => Outcome::Pass,
        Ok(rep) => Outcome::Fail(format!("annihilator {:?}", rep.annihilator)),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn inf_reesz_full(_: u64) -> Outcome {
    let spec = reesz("reesz_full");
    for row in 0..spec.rows() {
        match spec.zero_min_right_ideal_report(row, 2) {
            Ok(rep) if rep.annihilator == AnnihilatorSize::Finite(0) && rep.certificate.is_none() => {}
            Ok(rep) => fail!("row {}: annihilator {:?}", row + 1, rep.annihilator),
            Err(e) => fail!("{}", e),
        }
        let backend = ReesZRowBackend { spec: spec.clone(), row };
        match antichain_certificate(&backend, 2, 20) {
            Ok(Search::NotFoundUpTo { .. }) => {}
            Ok(_) => fail!("antichain of size 2 in R_{}", row + 1),
            Err(e) => fail!("{}", e),
        }
    }
    Outcome::Pass
}

fn inf_reesz_projection(_: u64) -> Outcome {
    for name in ["reesz_identity", "reesz_full"] {
        let spec = reesz(name);
        let n = 101;
        let proj = match spec.project(n) {
            Ok(p) => p,
            Err(e) => fail!("{}", e),
        };
        let fin = match rees_matrix_zero(&proj) {
            Ok(f) => f,
            Err(e) => fail!("{}", e),
        };
        let idx = |x: ZElem| match x {
            ZElem::Zero => proj.zero_index(),
            ZElem::Triple(i, g, j) => proj.index(i, g.rem_euclid(n as i64) as usize, j),
        };
        let elems = spec.enumerate(4);
        let backend = ReesZBackend { spec: spec.clone() };
        use sgchain_core::chains::ExplorableSemigroup;
        for &x in &elems {
            for &y in &elems {
                if idx(spec.multiply(x, y)) != fin.mul(idx(x), idx(y)) {
                    fail!("{}: product {} {} disagrees mod {}", name, spec.label(x), spec.label(y), n);
                }
                let m = backend.in_principal_right_ideal(&x, &y).is_member();
                let fm = x == y || fin.elements().any(|z| fin.mul(idx(y), z) == idx(x));
                if m != fm {
                    fail!("{}: membership of {} in {}S¹ disagrees", name, spec.label(x), spec.label(y));
                }
            }
        }
    }
    Outcome::Pass
}

fn inf_completion(_: u64) -> Outcome {
    // ab = b, ba = a is not confluent: aba rewrites to aa and to a
    let alphabet = vec!["a".to_string(), "b".to_string()];
    let rs = match RewritingSystem::from_relations(alphabet, vec![(word("ab"), word("b")), (word("ba"), word("a"))]) {
        Ok(r) => r,
        Err(e) => fail!("{}", e),
    };
    if rs.is_locally_confluent() {
        fail!("the starting system is already confluent");
    }
    let done = match knuth_bendix(&rs, DEFAULT_MAX_RULES, DEFAULT_MAX_LEN) {
        Ok(c) if c.is_completed() => c.system().clone(),
        Ok(_) => fail!("completion gave up"),
        Err(e) => fail!("{}", e),
    };
    if !done.is_locally_confluent() {
        fail!("completed system is not confluent");
    }
    for (l, r) in [("ab", "b"), ("ba", "a"), ("aba", "aa"), ("aa", "a"), ("bb", "b")] {
        if done.reduce(&word(l)) != done.reduce(&word(r)) {
            fail!("{} and {} have different normal forms", l, r);
        }
    }
    for n in 1..=8 {
        for w in all_words(2, n) {
            let nf = done.reduce(&w);
            if !done.is_irreducible(&nf) || nf.len() != 1 || nf.letters()[0] != w.letters()[n - 1] {
                fail!("{} reduces to {}", done.format_word(&w), done.format_word(&nf));
            }
        }
    }
    Outcome::Pass
}

pub const INFINITE_CHECKS: &[InfiniteCheck] = &[
    InfiniteCheck { id: "rewrite.abb_aba_confluence", anchor: "the rules abb → b, aba → aab are locally confluent", instance: "zoo:abb_aba", run: inf_confluence },
    InfiniteCheck { id: "rewrite.abb_aba_normal_forms", anchor: "2n normal forms of each length n", instance: "zoo:abb_aba", run: inf_normal_forms },
    InfiniteCheck { id: "rewrite.abb_aba_identity", anchor: "a^i b^i a^j b^(j+1) = b", instance: "zoo:abb_aba", run: inf_identity },
    InfiniteCheck { id: "rewrite.abb_aba_kernel", anchor: "the kernel is the set of words containing b", instance: "zoo:abb_aba", run: inf_kernel },
    InfiniteCheck { id: "rewrite.abb_aba_quotient_chain", anchor: "aS¹ ⊋ a²S¹ ⊋ … modulo the kernel", instance: "zoo:abb_aba", run: inf_quotient_chain },
    InfiniteCheck { id: "rewrite.completion", anchor: "Knuth-Bendix completion", instance: "ab = b, ba = a", run: inf_completion },
    InfiniteCheck { id: "chains.kernel_antichain", anchor: "the kernel contains the infinite antichain {b a^i}", instance: "zoo:abb_aba", run: inf_kernel_antichain },
    InfiniteCheck { id: "chains.kernel_subacts", anchor: "finitely generated right ideals of the kernel need at most three generators", instance: "zoo:abb_aba", run: inf_subacts },
    InfiniteCheck { id: "chains.free_rank_one", anchor: "the free monogenic semigroup is right noetherian", instance: "zoo:free1", run: inf_free1 },
    InfiniteCheck { id: "chains.free_rank_two", anchor: "free semigroups of rank at least two contain infinite antichains", instance: "zoo:free2", run: inf_free2 },
    InfiniteCheck { id: "chains.reesz_annihilator_antichain", anchor: "infinite {a : aR = 0} gives an infinite antichain", instance: "zoo:reesz_identity", run: inf_reesz_identity },
    InfiniteCheck { id: "chains.reesz_no_annihilator", anchor: "empty {a : aR = 0} leaves R without antichains", instance: "zoo:reesz_full", run: inf_reesz_full },
    InfiniteCheck { id: "chains.reesz_projection", anchor: "integer Rees matrix arithmetic against a finite cyclic image", instance: "zoo:reesz_identity", run: inf_reesz_projection },
];

fn run_infinite(seed: u64, timings: &mut Timings) -> Vec<Record> {
    let outcomes: Vec<(Outcome, Duration)> = INFINITE_CHECKS
        .par_iter()
        .map(|c| {
            let t = Instant::now();
            let o = match panic::catch_unwind(|| (c.run)(seed)) {
                Ok(o) => o,
                Err(_) => Outcome::Fail("panicked".into()),
            };
            (o, t.elapsed())
        })
        .collect();
    INFINITE_CHECKS
        .iter()
        .zip(outcomes)
        .map(|(c, (o, d))| {
            *timings.entry(c.id.to_string()).or_default() += d;
            Record::aggregate(c.id, c.anchor, c.instance, [(c.instance, &o)])
        })
        .collect()
}

pub struct VerifyRun {
    pub report: VerificationReport,
    pub timings: Vec<(String, Duration)>,
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyRun, String> {
    let mut timings = Timings::new();
    let mut records = Vec::new();
    // failures are reported as records; keep panic messages off stderr meanwhile
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let finite = if matches!(opts.suite, Suite::PaperFinite | Suite::All) {
        Some(run_finite(opts, &mut timings))
    } else {
        None
    };
    let infinite = if matches!(opts.suite, Suite::PaperInfinite | Suite::All) {
        Some(run_infinite(opts.seed, &mut timings))
    } else {
        None
    };
    panic::set_hook(hook);
    if let Some(f) = finite {
        records.extend(f?);
    }
    if let Some(i) = infinite {
        records.extend(i);
    }
    Ok(VerifyRun {
        report: VerificationReport::new(opts.suite.name(), opts.seed, opts.count, records),
        timings: timings.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_element_count() {
        assert_eq!(three_element_semigroups().len(), 113);
    }

    #[test]
    fn random_instances_in_range() {
        for i in 0..20 {
            let s = random_transformation_semigroup(7, i);
            assert!(s.size() <= RANDOM_MAX_SIZE);
            assert_eq!(s, random_transformation_semigroup(7, i));
        }
    }

    #[test]
    fn check_ids_are_distinct() {
        let mut ids: Vec<&str> = FINITE_CHECKS.iter().map(|c| c.id).chain(INFINITE_CHECKS.iter().map(|c| c.id)).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(FINITE_CHECKS.len() >= 30);
    }

    #[test]
    fn mutation_breaks_associativity() {
        let m = mutated("lz2").unwrap();
        let ctx = Ctx::new(&m);
        assert!(matches!(check_associative(&ctx), Outcome::Fail(_)));
    }

    #[test]
    fn zoo_passes_every_finite_check() {
        for (name, s) in zoo::finite_instances() {
            let ctx = Ctx::new(&s);
            for check in FINITE_CHECKS {
                if let Outcome::Fail(w) = run_check(check, &ctx) {
                    panic!("{} on {}: {}", check.id, name, w);
                }
            }
        }
    }
}
