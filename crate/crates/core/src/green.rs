//! Green's relations of a finite semigroup and finite poset utilities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::set::ElementSet;

/// A partition of `0..n` into classes, listed in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<ElementSet>,
    pub class_of: Vec<usize>,
}

impl Partition {
    /// Groups `0..keys.len()` by equal keys.
    pub fn by_key<K: PartialEq>(keys: &[K]) -> Partition {
        let n = keys.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ElementSet> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..n {
            match reps.iter().position(|&r| keys[r] == keys[a]) {
                Some(c) => {
                    class_of[a] = c;
                    classes[c].insert(a);
                }
                None => {
                    class_of[a] = classes.len();
                    reps.push(a);
                    classes.push(ElementSet::singleton(n, a));
                }
            }
        }
        Partition { classes, class_of }
    }

    /// Builds a partition from arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Partition {
        Self::by_key(labels)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_containing(&self, a: usize) -> &ElementSet {
        &self.classes[self.class_of[a]]
    }

    /// True iff every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.classes.iter().all(|c| {
            let target = other.class_of[c.first().expect("classes are non-empty")];
            c.iter().all(|x| other.class_of[x] == target)
        })
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let keys: Vec<(usize, usize)> = (0..self.class_of.len())
            .map(|a| (self.class_of[a], other.class_of[a]))
            .collect();
        Partition::by_key(&keys)
    }

    /// Finest partition coarser than both.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.class_of.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in [self, other] {
            for c in &p.classes {
                let mut it = c.iter();
                let first = it.next().expect("classes are non-empty");
                for x in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, x));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Partition::by_key(&roots)
    }

    /// The relation `self ∘ other` as a list of image sets: `x ↦ {z : x self y, y other z}`.
    pub fn compose(&self, other: &Partition) -> Vec<ElementSet> {
        let n = self.class_of.len();
        (0..n)
            .map(|x| {
                let mut out = ElementSet::empty(n);
                for y in self.class_containing(x).iter() {
                    out.union_with(other.class_containing(y));
                }
                out
            })
            .collect()
    }
}

/// A finite partial order on `0..n`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates a full order relation given as `leq[i][j] = (i ≤ j)`.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Poset> {
        let n = leq.len();
        if leq.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("order relation is not square".into()));
        }
        let p = Poset {
            n,
            leq: leq.into_iter().flatten().collect(),
        };
        for i in 0..n {
            if !p.leq(i, i) {
                return Err(Error::NotAPartialOrder(format!("{} is not below itself", i)));
            }
            for j in 0..n {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(Error::NotAPartialOrder(format!("{} and {} are mutually below", i, j)));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                        return Err(Error::NotAPartialOrder(format!("{} <= {} <= {} but not {} <= {}", i, j, k, i, k)));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of a relation, then validated.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let mut m: Vec<bool> = (0..n * n).map(|x| x / n == x % n || rel(x / n, x % n)).collect();
        // iterated squaring: after k rounds, paths of length up to 2^k are covered
        loop {
            let mut next = m.clone();
            for i in 0..n {
                for k in 0..n {
                    if m[i * n + k] {
                        for j in 0..n {
                            if m[k * n + j] {
                                next[i * n + j] = true;
                            }
                        }
                    }
                }
            }
            if next == m {
                break;
            }
            m = next;
        }
        let rows = (0..n).map(|i| m[i * n..(i + 1) * n].to_vec()).collect();
        Poset::new(rows)
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Poset {
        Poset {
            n,
            leq: (0..n * n).map(|x| x / n <= x % n).collect(),
        }
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            leq: (0..n * n).map(|x| x / n == x % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn is_antichain(&self, elements: &[usize]) -> bool {
        elements
            .iter()
            .enumerate()
            .all(|(k, &a)| elements[k + 1..].iter().all(|&b| a != b && !self.comparable(a, b)))
    }

    pub fn maximal_elements(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut out: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&a| !subset.iter().any(|&b| self.lt(a, b)))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn minimal_elements(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut out: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&a| !subset.iter().any(|&b| self.lt(b, a)))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (0..self.n).filter(|&j| self.leq(j, i)).count());
        let mut best = vec![1usize; self.n];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if self.lt(j, i) {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// A longest chain listed bottom first; ties go to the lexicographically least
    /// sequence read from the top.
    pub fn longest_chain(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (0..self.n).filter(|&j| self.leq(j, i)).count());
        // down[i] = longest chain with top i
        let mut down = vec![1usize; self.n];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if self.lt(j, i) {
                    down[i] = down[i].max(down[j] + 1);
                }
            }
        }
        let h = *down.iter().max().expect("non-empty");
        let mut top = (0..self.n).find(|&i| down[i] == h).expect("top exists");
        let mut chain = vec![top];
        while down[top] > 1 {
            top = (0..self.n)
                .find(|&j| self.lt(j, top) && down[j] == down[top] - 1)
                .expect("chain continues");
            chain.push(top);
        }
        chain.reverse();
        chain
    }

    /// Size of a largest antichain.
    pub fn width(&self) -> usize {
        if self.n <= 24 {
            self.branch_and_bound().len()
        } else {
            self.width_by_matching(&(0..self.n).collect::<Vec<_>>())
        }
    }

    /// A largest antichain; among those, the lexicographically least index set.
    pub fn maximum_antichain(&self) -> Vec<usize> {
        if self.n <= 24 {
            return self.branch_and_bound();
        }
        let w = self.width();
        let mut chosen: Vec<usize> = Vec::new();
        let mut next = 0;
        while chosen.len() < w {
            let pick = (next..self.n)
                .find(|&y| {
                    if chosen.iter().any(|&c| self.comparable(c, y)) {
                        return false;
                    }
                    let rest: Vec<usize> = (y + 1..self.n)
                        .filter(|&z| !self.comparable(y, z) && chosen.iter().all(|&c| !self.comparable(c, z)))
                        .collect();
                    self.width_by_matching(&rest) + chosen.len() + 1 >= w
                })
                .expect("a maximum antichain extends the current prefix");
            chosen.push(pick);
            next = pick + 1;
        }
        chosen
    }

    /// Depth-first search in lexicographic order; the first antichain of maximum
    /// size reached is the lexicographically least one.
    fn branch_and_bound(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        let candidates: Vec<usize> = (0..self.n).collect();
        self.bb(&candidates, &mut current, &mut best);
        best
    }

    fn bb(&self, candidates: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for (k, &c) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - k <= best.len() {
                return;
            }
            let rest: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&d| !self.comparable(c, d))
                .collect();
            if current.len() + 1 + rest.len() <= best.len() {
                continue;
            }
            current.push(c);
            self.bb(&rest, current, best);
            current.pop();
        }
    }

    /// Width of the subposet on `elements` via Dilworth: `|elements|` minus a
    /// maximum matching in the strict comparability bipartite graph.
    fn width_by_matching(&self, elements: &[usize]) -> usize {
        let m = elements.len();
        let adj: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).filter(|&b| self.lt(elements[a], elements[b])).collect())
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; m];
        let mut matched = 0;
        for a in 0..m {
            let mut seen = vec![false; m];
            if augment(a, &adj, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        m - matched
    }
}

fn augment(a: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &b in &adj[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if match_right[b].is_none_or(|a2| augment(a2, adj, seen, match_right)) {
            match_right[b] = Some(a);
            return true;
        }
    }
    false
}

/// Green's relations of a finite semigroup together with the principal ideals
/// they were computed from.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    /// `aS¹` for each element `a`.
    pub right_ideals: Vec<ElementSet>,
    /// `S¹a` for each element `a`.
    pub left_ideals: Vec<ElementSet>,
    /// `S¹aS¹` for each element `a`.
    pub ideals: Vec<ElementSet>,
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
    pub d: Partition,
    /// Order on R-class indices by containment of principal right ideals.
    pub r_poset: Poset,
}

pub fn principal_right_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    s.elements()
        .map(|a| {
            let mut set = s.set_of(s.elements().map(|x| s.mul(a, x)));
            set.insert(a);
            set
        })
        .collect()
}

pub fn principal_left_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    s.elements()
        .map(|a| {
            let mut set = s.set_of(s.elements().map(|x| s.mul(x, a)));
            set.insert(a);
            set
        })
        .collect()
}

/// `S¹aS¹` for each `a`, from the one-sided principal ideals.
fn two_sided_from(right_ideals: &[ElementSet], left_ideals: &[ElementSet]) -> Vec<ElementSet> {
    right_ideals
        .iter()
        .map(|r| {
            let mut set = r.clone();
            for x in r.iter() {
                set.union_with(&left_ideals[x]);
            }
            set
        })
        .collect()
}

pub fn principal_two_sided_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    two_sided_from(&principal_right_ideals(s), &principal_left_ideals(s))
}

pub fn compute_green(s: &FiniteSemigroup) -> GreenStructure {
    let right_ideals = principal_right_ideals(s);
    let left_ideals = principal_left_ideals(s);
    let ideals = two_sided_from(&right_ideals, &left_ideals);
    let r = Partition::by_key(&right_ideals);
    let l = Partition::by_key(&left_ideals);
    let j = Partition::by_key(&ideals);
    let h = r.meet(&l);
    let d = r.join(&l);
    let reps: Vec<usize> = r.classes.iter().map(|c| c.first().expect("non-empty")).collect();
    let r_poset = Poset::new(
        reps.iter()
            .map(|&a| reps.iter().map(|&b| right_ideals[a].is_subset(&right_ideals[b])).collect())
            .collect(),
    )
    .expect("containment of principal right ideals is a partial order on R-classes");
    GreenStructure {
        right_ideals,
        left_ideals,
        ideals,
        r,
        l,
        j,
        h,
        d,
        r_poset,
    }
}

impl GreenStructure {
    pub fn compute(s: &FiniteSemigroup) -> GreenStructure {
        compute_green(s)
    }
}
