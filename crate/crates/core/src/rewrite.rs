//! String rewriting for finitely presented semigroups.
//!
//! Words are compared in shortlex order (length first, then letters in the
//! declared alphabet order). Every rule must strictly decrease, which makes
//! reduction terminate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn new(letters: Vec<u16>) -> Word {
        Word(letters)
    }

    pub fn letter(x: u16) -> Word {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, x: u16) -> Word {
        let mut v = self.0.clone();
        v.push(x);
        Word(v)
    }

    pub fn contains_letter(&self, x: u16) -> bool {
        self.0.contains(&x)
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.is_empty() || self.0.windows(factor.len()).any(|w| w == factor.0.as_slice())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// `x^n` for a single letter.
    pub fn power(x: u16, n: usize) -> Word {
        Word(vec![x; n])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritingSystem {
    alphabet: Vec<String>,
    rules: Vec<Rule>,
    max_lhs: usize,
}

/// Two one-step descendants of an overlap word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub overlap: Word,
    pub left: Word,
    pub right: Word,
    pub rules: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub pairs_checked: usize,
    /// The first critical pair whose sides have distinct normal forms, with those forms.
    pub witness: Option<(CriticalPair, Word, Word)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Completed(RewritingSystem),
    GaveUp(RewritingSystem),
}

impl Completion {
    pub fn system(&self) -> &RewritingSystem {
        match self {
            Completion::Completed(rs) | Completion::GaveUp(rs) => rs,
        }
    }

    pub fn is_completed(&self) -> bool {
        matches!(self, Completion::Completed(_))
    }
}

pub const DEFAULT_MAX_RULES: usize = 200;
pub const DEFAULT_MAX_LEN: usize = 32;

impl RewritingSystem {
    pub fn new(alphabet: Vec<String>, rules: Vec<Rule>) -> Result<RewritingSystem> {
        check_alphabet(&alphabet)?;
        let mut rs = RewritingSystem {
            alphabet,
            rules: Vec::new(),
            max_lhs: 0,
        };
        for r in rules {
            rs.check_word(&r.lhs)?;
            rs.check_word(&r.rhs)?;
            if r.lhs <= r.rhs {
                return Err(Error::UnorderedRule {
                    lhs: rs.format_word(&r.lhs),
                    rhs: rs.format_word(&r.rhs),
                });
            }
            rs.push_rule(r);
        }
        Ok(rs)
    }

    /// Orients each relation so the shortlex-larger side is rewritten.
    pub fn from_relations(alphabet: Vec<String>, relations: Vec<(Word, Word)>) -> Result<RewritingSystem> {
        let rs = RewritingSystem::new(alphabet, Vec::new())?;
        let mut rules = Vec::new();
        for (u, v) in relations {
            rs.check_word(&u)?;
            rs.check_word(&v)?;
            match u.cmp(&v) {
                Ordering::Greater => rules.push(Rule { lhs: u, rhs: v }),
                Ordering::Less => rules.push(Rule { lhs: v, rhs: u }),
                Ordering::Equal => return Err(Error::UnorientableRule(rs.format_word(&u))),
            }
        }
        RewritingSystem::new(rs.alphabet, rules)
    }

    fn push_rule(&mut self, r: Rule) {
        self.max_lhs = self.max_lhs.max(r.lhs.len());
        self.rules.push(r);
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.is_empty() {
            return Err(Error::ShapeMismatch("words must be non-empty".into()));
        }
        if let Some(&x) = w.0.iter().find(|&&x| x as usize >= self.alphabet.len()) {
            return Err(Error::UnknownLetter(format!("#{}", x)));
        }
        Ok(())
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn letter_index(&self, name: &str) -> Option<u16> {
        self.alphabet.iter().position(|l| l == name).map(|i| i as u16)
    }

    /// Accepts `a b b`, `abb` (single-character letters) and `a b^2` / `ab^2`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::ShapeMismatch("empty word".into()));
        }
        let mut out = Vec::new();
        let tokens: Vec<String> = if text.contains(char::is_whitespace) {
            text.split_whitespace().map(str::to_string).collect()
        } else if self.letter_index(text.split('^').next().unwrap_or("")).is_some() && text.matches('^').count() <= 1 {
            vec![text.to_string()]
        } else {
            let mut toks: Vec<String> = Vec::new();
            let mut chars = text.chars().peekable();
            while let Some(c) = chars.next() {
                let mut tok = c.to_string();
                if chars.peek() == Some(&'^') {
                    tok.push(chars.next().expect("peeked"));
                    while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                        tok.push(d);
                        chars.next();
                    }
                }
                toks.push(tok);
            }
            toks
        };
        for tok in tokens {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n.to_string(),
                    e.parse::<usize>()
                        .map_err(|_| Error::UnknownLetter(tok.clone()))?,
                ),
                None => (tok.clone(), 1),
            };
            let x = self.letter_index(&name).ok_or(Error::UnknownLetter(name))?;
            out.extend(std::iter::repeat_n(x, exp));
        }
        if out.is_empty() {
            return Err(Error::ShapeMismatch("empty word".into()));
        }
        Ok(Word(out))
    }

    pub fn format_word(&self, w: &Word) -> String {
        let single = self.alphabet.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = w.0.iter().map(|&x| self.alphabet[x as usize].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    fn first_match_at(&self, w: &[u16], p: usize) -> Option<usize> {
        self.rules
            .iter()
            .position(|r| w.len() - p >= r.lhs.len() && w[p..p + r.lhs.len()] == r.lhs.0[..])
    }

    /// Leftmost position first, and among rules matching there, the first declared.
    pub fn reduce(&self, w: &Word) -> Word {
        let mut cur = w.0.clone();
        let mut p = 0;
        while p < cur.len() {
            match self.first_match_at(&cur, p) {
                Some(k) => {
                    let r = &self.rules[k];
                    cur.splice(p..p + r.lhs.len(), r.rhs.0.iter().copied());
                    p = (p + 1).saturating_sub(self.max_lhs);
                }
                None => p += 1,
            }
        }
        Word(cur)
    }

    pub fn reduce_str(&self, text: &str) -> Result<String> {
        Ok(self.format_word(&self.reduce(&self.parse_word(text)?)))
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains_factor(&r.lhs))
    }

    /// All one-step rewrites of `w` (every position, every rule).
    pub fn one_step(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        for r in &self.rules {
            if r.lhs.len() > w.len() {
                continue;
            }
            for p in 0..=w.len() - r.lhs.len() {
                if w.0[p..p + r.lhs.len()] == r.lhs.0[..] {
                    let mut v = w.0[..p].to_vec();
                    v.extend_from_slice(&r.rhs.0);
                    v.extend_from_slice(&w.0[p + r.lhs.len()..]);
                    out.push(Word(v));
                }
            }
        }
        out
    }

    /// Overlaps (a proper suffix of one left side equal to a prefix of another)
    /// and containments (one left side inside another), for every ordered pair of rules.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let (li, lj) = (&ri.lhs.0, &rj.lhs.0);
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] == lj[..k] {
                        let overlap = Word(li.iter().chain(&lj[k..]).copied().collect());
                        let left = Word(ri.rhs.0.iter().chain(&lj[k..]).copied().collect());
                        let right = Word(li[..li.len() - k].iter().chain(&rj.rhs.0).copied().collect());
                        out.push(CriticalPair {
                            overlap,
                            left,
                            right,
                            rules: (i, j),
                        });
                    }
                }
                if i != j && lj.len() <= li.len() {
                    for p in 0..=li.len() - lj.len() {
                        if li[p..p + lj.len()] == lj[..] {
                            let right = Word(
                                li[..p]
                                    .iter()
                                    .chain(&rj.rhs.0)
                                    .chain(&li[p + lj.len()..])
                                    .copied()
                                    .collect(),
                            );
                            out.push(CriticalPair {
                                overlap: ri.lhs.clone(),
                                left: ri.rhs.clone(),
                                right,
                                rules: (i, j),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn local_confluence(&self) -> ConfluenceReport {
        let pairs = self.critical_pairs();
        let n = pairs.len();
        for cp in pairs {
            let (a, b) = (self.reduce(&cp.left), self.reduce(&cp.right));
            if a != b {
                return ConfluenceReport {
                    confluent: false,
                    pairs_checked: n,
                    witness: Some((cp, a, b)),
                };
            }
        }
        ConfluenceReport {
            confluent: true,
            pairs_checked: n,
            witness: None,
        }
    }

    pub fn is_locally_confluent(&self) -> bool {
        self.local_confluence().confluent
    }

    /// Removes rules whose left side is reducible by the others (re-adding the
    /// resulting consequence when it is non-trivial) and normalises right sides.
    fn interreduce(&mut self) {
        let mut guard = 0;
        'outer: loop {
            guard += 1;
            if guard > 10_000 {
                break;
            }
            for idx in 0..self.rules.len() {
                let others = RewritingSystem {
                    alphabet: self.alphabet.clone(),
                    rules: self
                        .rules
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != idx)
                        .map(|(_, r)| r.clone())
                        .collect(),
                    max_lhs: self.max_lhs,
                };
                let r = &self.rules[idx];
                if !others.is_irreducible(&r.lhs) {
                    let (l, rr) = (others.reduce(&r.lhs), others.reduce(&r.rhs));
                    self.rules = others.rules;
                    match l.cmp(&rr) {
                        Ordering::Greater => self.rules.push(Rule { lhs: l, rhs: rr }),
                        Ordering::Less => self.rules.push(Rule { lhs: rr, rhs: l }),
                        Ordering::Equal => {}
                    }
                    continue 'outer;
                }
            }
            break;
        }
        for idx in 0..self.rules.len() {
            let rhs = self.reduce(&self.rules[idx].rhs);
            self.rules[idx].rhs = rhs;
        }
        self.max_lhs = self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
    }
}

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut seen = std::collections::HashSet::new();
    for l in alphabet {
        if l.is_empty() || l.contains(char::is_whitespace) || l.contains('^') {
            return Err(Error::UnknownLetter(l.clone()));
        }
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Bounded completion: orients every non-joinable critical pair and repeats
/// until the system is locally confluent, or a bound trips.
pub fn knuth_bendix(rs: &RewritingSystem, max_rules: usize, max_len: usize) -> Result<Completion> {
    let mut cur = rs.clone();
    loop {
        let mut added = false;
        for cp in cur.critical_pairs() {
            let (a, b) = (cur.reduce(&cp.left), cur.reduce(&cp.right));
            if a == b {
                continue;
            }
            let rule = if a > b { Rule { lhs: a, rhs: b } } else { Rule { lhs: b, rhs: a } };
            if rule.lhs.len() > max_len {
                return Ok(Completion::GaveUp(cur));
            }
            cur.push_rule(rule);
            added = true;
            if cur.rules.len() > max_rules {
                return Ok(Completion::GaveUp(cur));
            }
        }
        cur.interreduce();
        if !added && cur.is_locally_confluent() {
            return Ok(Completion::Completed(cur));
        }
        if !added {
            // interreduction exposed new pairs; go round again
            continue;
        }
    }
}

/// Outcome of a bounded search for `u ∈ vS¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IdealMembership {
    /// `u = v·s` for this non-empty multiplier `s` (the shortlex least one).
    Yes(Word),
    Equal,
    NoUpTo(usize),
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

/// A finitely presented semigroup together with the confluence verdict of its rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSemigroup {
    rs: RewritingSystem,
    confluent: bool,
}

impl FpSemigroup {
    pub fn new(rs: RewritingSystem) -> FpSemigroup {
        let confluent = rs.is_locally_confluent();
        FpSemigroup { rs, confluent }
    }

    /// `⟨a, b | ab² = b, aba = a²b⟩` with `a < b`.
    pub fn abb_aba() -> FpSemigroup {
        let rs = RewritingSystem::new(
            vec!["a".into(), "b".into()],
            vec![
                Rule {
                    lhs: Word(vec![0, 1, 1]),
                    rhs: Word(vec![1]),
                },
                Rule {
                    lhs: Word(vec![0, 1, 0]),
                    rhs: Word(vec![0, 0, 1]),
                },
            ],
        )
        .expect("rules decrease");
        FpSemigroup::new(rs)
    }

    /// The free semigroup on `k` letters `a, b, c, …` (then `x1, x2, …` past `z`).
    pub fn free(k: usize) -> Result<FpSemigroup> {
        if k == 0 {
            return Err(Error::EmptyGenerators);
        }
        let alphabet = (0..k)
            .map(|i| {
                if k <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{}", i + 1)
                }
            })
            .collect();
        Ok(FpSemigroup::new(RewritingSystem::new(alphabet, Vec::new())?))
    }

    pub fn rs(&self) -> &RewritingSystem {
        &self.rs
    }

    pub fn is_confluent(&self) -> bool {
        self.confluent
    }

    pub fn is_free(&self) -> bool {
        self.rs.rules.is_empty()
    }

    pub fn alphabet_len(&self) -> usize {
        self.rs.alphabet.len()
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Word {
        self.rs.reduce(&u.concat(v))
    }

    fn require_confluent(&self) -> Result<()> {
        if self.confluent {
            Ok(())
        } else {
            Err(Error::NotConfluent)
        }
    }

    /// Irreducible words of length `1..=max_len`, grouped by length, in shortlex order.
    pub fn enumerate_normal_forms(&self, max_len: usize) -> Result<Vec<Vec<Word>>> {
        self.require_confluent()?;
        let k = self.alphabet_len() as u16;
        let mut out: Vec<Vec<Word>> = Vec::with_capacity(max_len);
        if max_len == 0 {
            return Ok(out);
        }
        let first: Vec<Word> = (0..k)
            .map(Word::letter)
            .filter(|w| self.rs.is_irreducible(w))
            .collect();
        out.push(first);
        for _ in 1..max_len {
            let prev = out.last().expect("non-empty");
            let mut next = Vec::new();
            // irreducible words are prefix closed; only a suffix match can be new
            for w in prev {
                for x in 0..k {
                    let ext = w.push(x);
                    let fresh = self.rs.rules.iter().all(|r| !ext.0.ends_with(&r.lhs.0));
                    if fresh {
                        next.push(ext);
                    }
                }
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Searches `reduce(v·s) = reduce(u)` over non-empty `s` with `|s| ≤ bound`,
    /// breadth first over normal forms.
    pub fn right_ideal_membership(&self, u: &Word, v: &Word, bound: usize) -> Result<IdealMembership> {
        self.require_confluent()?;
        let target = self.rs.reduce(u);
        let start = self.rs.reduce(v);
        if target == start {
            return Ok(IdealMembership::Equal);
        }
        if self.is_free() {
            return Ok(if start.is_prefix_of(&target) && target.len() - start.len() <= bound {
                IdealMembership::Yes(Word(target.0[start.len()..].to_vec()))
            } else {
                IdealMembership::NoUpTo(bound)
            });
        }
        let k = self.alphabet_len() as u16;
        let mut seen: HashMap<Word, ()> = HashMap::new();
        seen.insert(start.clone(), ());
        let mut frontier: Vec<(Word, Word)> = vec![(start, Word::default())];
        for _ in 0..bound {
            let mut next = Vec::new();
            for (w, path) in &frontier {
                for x in 0..k {
                    let nw = self.rs.reduce(&w.push(x));
                    let np = path.push(x);
                    if nw == target {
                        return Ok(IdealMembership::Yes(np));
                    }
                    if seen.insert(nw.clone(), ()).is_none() {
                        next.push((nw, np));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(IdealMembership::NoUpTo(bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex() -> FpSemigroup {
        FpSemigroup::abb_aba()
    }

    #[test]
    fn shortlex_order() {
        let w = |v: &[u16]| Word(v.to_vec());
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 0, 1]) < w(&[0, 1, 0]));
        assert!(w(&[1]) < w(&[0, 1, 1]));
    }

    #[test]
    fn reductions() {
        let rs = ex().rs().clone();
        assert_eq!(rs.reduce_str("abb").unwrap(), "b");
        assert_eq!(rs.reduce_str("aba").unwrap(), "aab");
        assert_eq!(rs.reduce_str("abab").unwrap(), "ab");
        assert_eq!(rs.reduce_str("aabbb").unwrap(), "b");
        assert_eq!(rs.reduce_str("a b^2").unwrap(), "b");
        assert!(matches!(rs.reduce_str("abc"), Err(Error::UnknownLetter(_))));
    }

    #[test]
    fn example_rules_and_confluence() {
        let e = ex();
        assert!(e.is_confluent());
        let rules: Vec<(String, String)> = e
            .rs()
            .rules()
            .iter()
            .map(|r| (e.rs().format_word(&r.lhs), e.rs().format_word(&r.rhs)))
            .collect();
        assert_eq!(rules, vec![("abb".into(), "b".into()), ("aba".into(), "aab".into())]);
        let report = e.rs().local_confluence();
        assert!(report.pairs_checked > 0);
    }

    #[test]
    fn confluence_cases() {
        let ab = vec!["a".to_string(), "b".to_string()];
        let aa = RewritingSystem::new(ab.clone(), vec![Rule { lhs: Word(vec![0, 0]), rhs: Word(vec![0]) }]).unwrap();
        assert!(aa.is_locally_confluent());
        assert!(aa.critical_pairs().iter().any(|cp| cp.overlap == Word(vec![0, 0, 0])));
        let bad = RewritingSystem::new(
            ab.clone(),
            vec![
                Rule { lhs: Word(vec![0, 1]), rhs: Word(vec![0]) },
                Rule { lhs: Word(vec![0, 1]), rhs: Word(vec![1]) },
            ],
        )
        .unwrap();
        let report = bad.local_confluence();
        assert!(!report.confluent);
        let (_, l, r) = report.witness.unwrap();
        assert_eq!((l, r), (Word(vec![0]), Word(vec![1])));
        let empty = RewritingSystem::new(ab, Vec::new()).unwrap();
        assert!(empty.critical_pairs().is_empty());
    }

    #[test]
    fn unordered_rule_rejected() {
        let ab = vec!["a".to_string(), "b".to_string()];
        let err = RewritingSystem::new(ab.clone(), vec![Rule { lhs: Word(vec![0]), rhs: Word(vec![0, 1]) }]).unwrap_err();
        assert!(matches!(err, Error::UnorderedRule { .. }));
        let err = RewritingSystem::from_relations(ab, vec![(Word(vec![0, 1]), Word(vec![0, 1]))]).unwrap_err();
        assert!(matches!(err, Error::UnorientableRule(_)));
    }

    #[test]
    fn completion() {
        let ab = vec!["a".to_string(), "b".to_string()];
        let raw = RewritingSystem::from_relations(
            ab.clone(),
            vec![
                (Word(vec![0, 1, 1]), Word(vec![1])),
                (Word(vec![0, 1, 0]), Word(vec![0, 0, 1])),
            ],
        )
        .unwrap();
        let done = knuth_bendix(&raw, DEFAULT_MAX_RULES, DEFAULT_MAX_LEN).unwrap();
        assert!(done.is_completed());
        assert_eq!(done.system().rules(), raw.rules());

        let idem = RewritingSystem::from_relations(ab.clone(), vec![(Word(vec![0, 0]), Word(vec![0]))]).unwrap();
        let done = knuth_bendix(&idem, DEFAULT_MAX_RULES, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(done.system().rules().len(), 1);

        let comm = RewritingSystem::from_relations(ab, vec![(Word(vec![0, 1]), Word(vec![1, 0]))]).unwrap();
        let done = knuth_bendix(&comm, DEFAULT_MAX_RULES, DEFAULT_MAX_LEN).unwrap();
        assert!(done.is_completed());
        assert_eq!(
            done.system().rules(),
            &[Rule { lhs: Word(vec![1, 0]), rhs: Word(vec![0, 1]) }]
        );
    }

    #[test]
    fn completion_adds_rules() {
        // aba = b with a < b: needs extra rules to become confluent
        let ab = vec!["a".to_string(), "b".to_string()];
        let rs = RewritingSystem::from_relations(
            ab,
            vec![(Word(vec![0, 0, 0]), Word(vec![0])), (Word(vec![1, 1]), Word(vec![0, 0]))],
        )
        .unwrap();
        let done = knuth_bendix(&rs, DEFAULT_MAX_RULES, DEFAULT_MAX_LEN).unwrap();
        assert!(done.is_completed());
        assert!(done.system().is_locally_confluent());
    }

    #[test]
    fn normal_forms() {
        let e = ex();
        let nf = e.enumerate_normal_forms(2).unwrap();
        assert_eq!(nf[0].len(), 2);
        let words: Vec<String> = nf[1].iter().map(|w| e.rs().format_word(w)).collect();
        assert_eq!(words, vec!["aa", "ab", "ba", "bb"]);
        let nf = e.enumerate_normal_forms(12).unwrap();
        for (k, layer) in nf.iter().enumerate() {
            assert_eq!(layer.len(), 2 * (k + 1));
        }
    }

    #[test]
    fn membership() {
        let e = ex();
        let w = |t: &str| e.rs().parse_word(t).unwrap();
        assert_eq!(e.right_ideal_membership(&w("b"), &w("abb"), 3).unwrap(), IdealMembership::Equal);
        assert_eq!(
            e.right_ideal_membership(&w("b"), &w("ab"), 3).unwrap(),
            IdealMembership::Yes(w("b"))
        );
        let f = FpSemigroup::free(2).unwrap();
        let fw = |t: &str| f.rs().parse_word(t).unwrap();
        assert_eq!(
            f.right_ideal_membership(&fw("aba"), &fw("ab"), 5).unwrap(),
            IdealMembership::Yes(fw("a"))
        );
        assert_eq!(
            f.right_ideal_membership(&fw("ab"), &fw("ba"), 5).unwrap(),
            IdealMembership::NoUpTo(5)
        );
    }

    #[test]
    fn not_confluent_is_reported() {
        let ab = vec!["a".to_string(), "b".to_string()];
        let bad = RewritingSystem::new(
            ab,
            vec![
                Rule { lhs: Word(vec![0, 1]), rhs: Word(vec![0]) },
                Rule { lhs: Word(vec![0, 1]), rhs: Word(vec![1]) },
            ],
        )
        .unwrap();
        let fp = FpSemigroup::new(bad);
        assert_eq!(fp.enumerate_normal_forms(3), Err(Error::NotConfluent));
    }
}
