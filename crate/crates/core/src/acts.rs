//! Finite right acts of a finite semigroup.
//!
//! An act zero is a point `z` with `z·s = z` for every `s`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::green::{Partition, Poset};
use crate::semigroup::{fresh_label, FiniteSemigroup};
use crate::set::ElementSet;

/// Exhaustive subact enumeration refuses carriers larger than this.
pub const MAX_SUBACT_CARRIER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Act {
    labels: Vec<String>,
    degree: usize,
    action: Vec<usize>,
    zero: Option<usize>,
}

/// `A/B` with the quotient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActQuotient {
    pub act: Act,
    pub map: Vec<usize>,
    pub zero: usize,
}

impl Act {
    /// `rows[a][s] = a·s`.
    pub fn from_table(s: &FiniteSemigroup, labels: Vec<String>, rows: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Act> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::ShapeMismatch("an act needs at least one point".into()));
        }
        if rows.len() != m || rows.iter().any(|r| r.len() != s.size()) {
            return Err(Error::ShapeMismatch(format!(
                "action table must be {}x{}",
                m,
                s.size()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for (a, r) in rows.iter().enumerate() {
            if let Some(t) = r.iter().position(|&v| v >= m) {
                return Err(Error::EntryOutOfRange { row: a, col: t, value: r[t] });
            }
        }
        let act = Act {
            labels,
            degree: s.size(),
            action: rows.into_iter().flatten().collect(),
            zero: None,
        };
        for a in 0..m {
            for x in s.elements() {
                for y in s.elements() {
                    if act.apply(a, s.mul(x, y)) != act.apply(act.apply(a, x), y) {
                        return Err(Error::NotAnAction(a, x, y));
                    }
                }
            }
        }
        match zero {
            Some(z) => act.with_zero(z),
            None => Ok(act),
        }
    }

    /// Designates `z` as the act zero.
    pub fn with_zero(mut self, z: usize) -> Result<Act> {
        if z >= self.len() || (0..self.degree).any(|s| self.apply(z, s) != z) {
            return Err(Error::BadZero(z));
        }
        self.zero = Some(z);
        Ok(self)
    }

    /// `S_S`: the semigroup acting on itself by right multiplication (no act zero designated).
    pub fn regular(s: &FiniteSemigroup) -> Act {
        Act {
            labels: s.labels().to_vec(),
            degree: s.size(),
            action: s.rows().into_iter().flatten().collect(),
            zero: None,
        }
    }

    pub fn one_point(s: &FiniteSemigroup) -> Act {
        Act {
            labels: vec!["a".into()],
            degree: s.size(),
            action: vec![0; s.size()],
            zero: None,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn semigroup_size(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn apply(&self, a: usize, s: usize) -> usize {
        self.action[a * self.degree + s]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|a| (0..self.degree).map(|s| self.apply(a, s)).collect())
            .collect()
    }

    /// `aS¹`.
    pub fn orbit(&self, a: usize) -> ElementSet {
        let mut set = ElementSet::from_elements(self.len(), (0..self.degree).map(|s| self.apply(a, s)));
        set.insert(a);
        set
    }

    /// `XS¹`.
    pub fn generated_subact(&self, x: &ElementSet) -> Result<ElementSet> {
        if x.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut out = x.clone();
        for a in x.iter() {
            out.union_with(&self.orbit(a));
        }
        Ok(out)
    }

    /// First `(b, s)` with `b ∈ B` and `b·s ∉ B`.
    pub fn subact_witness(&self, b: &ElementSet) -> Option<(usize, usize)> {
        b.iter()
            .flat_map(|a| (0..self.degree).map(move |s| (a, s)))
            .find(|&(a, s)| !b.contains(self.apply(a, s)))
    }

    pub fn is_subact(&self, b: &ElementSet) -> bool {
        !b.is_empty() && self.subact_witness(b).is_none()
    }

    /// The subact `B` as an act in its own right, with the map back to `A`.
    pub fn restrict(&self, b: &ElementSet) -> Result<(Act, Vec<usize>)> {
        if b.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some((a, s)) = self.subact_witness(b) {
            return Err(Error::NotASubact(a, s));
        }
        let members = b.to_vec();
        let mut index = vec![usize::MAX; self.len()];
        for (k, &m) in members.iter().enumerate() {
            index[m] = k;
        }
        let action = members
            .iter()
            .flat_map(|&a| (0..self.degree).map(move |s| (a, s)))
            .map(|(a, s)| index[self.apply(a, s)])
            .collect();
        let act = Act {
            labels: members.iter().map(|&a| self.labels[a].clone()).collect(),
            degree: self.degree,
            action,
            zero: self.zero.filter(|&z| b.contains(z)).map(|z| index[z]),
        };
        Ok((act, members))
    }

    /// `A/B`: survivors in order, then the zero.
    ///
    /// The zero reuses the label of the act zero when that lies in `B`;
    /// otherwise it is a fresh `0`, primed until unused.
    pub fn rees_quotient(&self, b: &ElementSet) -> Result<ActQuotient> {
        if b.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some((a, s)) = self.subact_witness(b) {
            return Err(Error::NotASubact(a, s));
        }
        let survivors: Vec<usize> = (0..self.len()).filter(|&a| !b.contains(a)).collect();
        let zero = survivors.len();
        let mut map = vec![zero; self.len()];
        for (k, &a) in survivors.iter().enumerate() {
            map[a] = k;
        }
        let mut labels: Vec<String> = survivors.iter().map(|&a| self.labels[a].clone()).collect();
        labels.push(match self.zero {
            Some(z) if b.contains(z) => self.labels[z].clone(),
            _ => {
                let taken: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
                fresh_label("0", &taken)
            }
        });
        let mut action = Vec::with_capacity((zero + 1) * self.degree);
        for &a in &survivors {
            for s in 0..self.degree {
                action.push(map[self.apply(a, s)]);
            }
        }
        action.extend(std::iter::repeat_n(zero, self.degree));
        Ok(ActQuotient {
            act: Act {
                labels,
                degree: self.degree,
                action,
                zero: Some(zero),
            },
            map,
            zero,
        })
    }

    /// The `R_S`-classes and their order by containment of `aS¹`.
    pub fn rs_classes(&self) -> (Partition, Poset) {
        let orbits: Vec<ElementSet> = (0..self.len()).map(|a| self.orbit(a)).collect();
        let part = Partition::by_key(&orbits);
        let reps: Vec<usize> = part.classes.iter().map(|c| c.first().expect("non-empty")).collect();
        let poset = Poset::new(
            reps.iter()
                .map(|&a| reps.iter().map(|&b| orbits[a].is_subset(&orbits[b])).collect())
                .collect(),
        )
        .expect("containment of principal subacts is a partial order");
        (part, poset)
    }

    /// Every subact, in lexicographic order. Subacts are exactly the unions of
    /// down-closed families of `R_S`-classes.
    pub fn all_subacts(&self) -> Result<Vec<ElementSet>> {
        if self.len() > MAX_SUBACT_CARRIER {
            return Err(Error::TooLarge(self.len(), MAX_SUBACT_CARRIER));
        }
        let (part, poset) = self.rs_classes();
        let k = part.len();
        let below: Vec<u32> = (0..k)
            .map(|c| (0..k).filter(|&d| poset.leq(d, c)).fold(0u32, |m, d| m | (1 << d)))
            .collect();
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << k) {
            if (0..k).all(|c| mask & (1 << c) == 0 || below[c] & !mask == 0) {
                let mut set = ElementSet::empty(self.len());
                for c in (0..k).filter(|&c| mask & (1 << c) != 0) {
                    set.union_with(&part.classes[c]);
                }
                out.push(set);
            }
        }
        out.sort();
        Ok(out)
    }

    /// No proper subact: every point generates the whole act.
    pub fn is_simple(&self) -> bool {
        let all = self.all();
        (0..self.len()).all(|a| self.orbit(a) == all)
    }

    /// `{0}` is the only proper subact.
    pub fn is_0_simple(&self) -> Result<bool> {
        let z = self.zero.ok_or(Error::NoZero)?;
        let all = self.all();
        Ok(self.len() > 1 && (0..self.len()).filter(|&a| a != z).all(|a| self.orbit(a) == all))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain, left_zero, null_semigroup, FiniteGroup};

    #[test]
    fn regular_and_one_point_acts_are_valid() {
        let lz = left_zero(2).unwrap();
        let r = Act::regular(&lz);
        assert!(Act::from_table(&lz, r.labels().to_vec(), r.rows(), None).is_ok());
        let p = Act::one_point(&lz);
        assert!(Act::from_table(&lz, p.labels().to_vec(), p.rows(), None).is_ok());
    }

    #[test]
    fn non_action_rejected() {
        // point·x = p1, point·y = p2 over LZ2: p1·y must equal p1·(x y)... fails
        let lz = left_zero(2).unwrap();
        let err = Act::from_table(&lz, vec!["p1".into(), "p2".into()], vec![vec![0, 1], vec![0, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotAnAction(..)));
    }

    #[test]
    fn generated_subacts() {
        let lz = left_zero(2).unwrap();
        let a = Act::regular(&lz);
        assert_eq!(a.generated_subact(&ElementSet::from_elements(2, [0])).unwrap().to_vec(), vec![0]);
        assert_eq!(a.generated_subact(&a.all()).unwrap(), a.all());
        let c2 = FiniteGroup::cyclic(2).unwrap().semigroup().clone();
        let g = Act::regular(&c2);
        assert_eq!(g.generated_subact(&ElementSet::from_elements(2, [1])).unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn quotients() {
        let n = null_semigroup(1);
        let q = Act::regular(&n).rees_quotient(&ElementSet::from_elements(2, [0])).unwrap();
        assert_eq!(q.act.len(), 2);
        let c = chain(2).unwrap();
        let q = Act::regular(&c).rees_quotient(&ElementSet::from_elements(2, [0])).unwrap();
        assert_eq!(q.act.labels(), &["1", "0\u{2032}"]);
        assert_eq!(q.act.apply(0, 1), 0);
        assert_eq!(q.act.apply(0, 0), 1);
        let whole = Act::regular(&c).rees_quotient(&ElementSet::full(2)).unwrap();
        assert_eq!(whole.act.len(), 1);
        assert_eq!(
            Act::regular(&c).rees_quotient(&ElementSet::from_elements(2, [1])).unwrap_err(),
            Error::NotASubact(1, 0)
        );
    }

    #[test]
    fn class_posets_and_subacts() {
        let n = Act::regular(&null_semigroup(1));
        let (part, poset) = n.rs_classes();
        assert_eq!(part.len(), 2);
        assert!(poset.lt(part.class_of[0], part.class_of[1]));
        assert_eq!(
            n.all_subacts().unwrap(),
            vec![ElementSet::from_elements(2, [0]), ElementSet::from_elements(2, [0, 1])]
        );
        let lz = Act::regular(&left_zero(2).unwrap());
        let (_, p) = lz.rs_classes();
        assert_eq!(p.width(), 2);
        assert_eq!(lz.all_subacts().unwrap().len(), 3);
        let one = Act::one_point(&chain(2).unwrap());
        assert_eq!(one.all_subacts().unwrap(), vec![one.all()]);
        assert_eq!(one.rs_classes().0.len(), 1);
    }

    #[test]
    fn simplicity() {
        assert!(Act::one_point(&chain(2).unwrap()).is_simple());
        assert!(!Act::regular(&left_zero(2).unwrap()).is_simple());
        let c3 = FiniteGroup::cyclic(3).unwrap().semigroup().clone();
        assert!(Act::regular(&c3).is_simple());
        assert_eq!(Act::regular(&c3).is_0_simple(), Err(Error::NoZero));
        let n = Act::regular(&null_semigroup(1)).with_zero(0).unwrap();
        assert!(n.is_0_simple().unwrap());
    }

    #[test]
    fn too_large_guard() {
        let c = chain(21).unwrap();
        assert_eq!(Act::regular(&c).all_subacts(), Err(Error::TooLarge(21, 20)));
    }
}
