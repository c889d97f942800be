#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgchain_core::acts::Act;
use sgchain_core::constructions::{
    chain, left_zero, null_semigroup, rees_matrix_zero, right_zero, u_construction, x_extension, FiniteGroup,
    ReesMatrixSpec, SandwichEntry,
};
use sgchain_core::{ElementSet, FiniteSemigroup};

pub fn c2_rees(p: [[Option<usize>; 2]; 2]) -> FiniteSemigroup {
    let entries = p
        .iter()
        .map(|r| r.iter().map(|e| e.map_or(SandwichEntry::Zero, SandwichEntry::Group)).collect())
        .collect();
    rees_matrix_zero(&ReesMatrixSpec::new(FiniteGroup::cyclic(2).unwrap(), 2, 2, entries).unwrap()).unwrap()
}

pub fn rees9() -> FiniteSemigroup {
    c2_rees([[Some(0), None], [None, Some(0)]])
}

pub fn rees9_full() -> FiniteSemigroup {
    c2_rees([[Some(0), Some(0)], [Some(0), Some(0)]])
}

pub fn x_union() -> FiniteSemigroup {
    x_extension(&rees9_full(), &rees9()).unwrap()
}

/// Small named instances built only from library constructors.
pub fn zoo() -> Vec<(&'static str, FiniteSemigroup)> {
    let c2 = FiniteGroup::cyclic(2).unwrap().semigroup().clone();
    let c3 = FiniteGroup::cyclic(3).unwrap().semigroup().clone();
    let trivial = FiniteGroup::trivial().semigroup().clone();
    let u_trivial = u_construction(&trivial, &Act::one_point(&trivial)).unwrap().semigroup;
    let u_c2 = u_construction(&c2, &Act::regular(&c2)).unwrap().semigroup;
    vec![
        ("lz2", left_zero(2).unwrap()),
        ("rz2", right_zero(2).unwrap()),
        ("n2", null_semigroup(1)),
        ("n3", null_semigroup(2)),
        ("chain2", chain(2).unwrap()),
        ("chain3", chain(3).unwrap()),
        ("c2", c2.clone()),
        ("c3", c3),
        ("c2_0", c2.adjoin_zero()),
        ("rees9", rees9()),
        ("rees9_full", rees9_full()),
        ("u_trivial", u_trivial),
        ("u_c2", u_c2),
        ("x_union", x_union()),
    ]
}

pub fn random_maps(rng: &mut ChaCha8Rng, k: usize, count: usize) -> Vec<Vec<usize>> {
    (0..count).map(|_| (0..k).map(|_| rng.gen_range(0..k)).collect()).collect()
}

/// A transformation semigroup from seeded random maps, retried until small enough.
pub fn random_transformation_semigroup(seed: u64, max_size: usize) -> FiniteSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = rng.gen_range(2..=4);
        let count = rng.gen_range(1..=3);
        let maps = random_maps(&mut rng, k, count);
        if let Some(s) = FiniteSemigroup::from_transformations_capped(k, &maps, max_size).unwrap() {
            return s;
        }
    }
}

pub fn arb_semigroup(max_size: usize) -> impl Strategy<Value = FiniteSemigroup> {
    any::<u64>().prop_map(move |seed| random_transformation_semigroup(seed, max_size))
}

/// Maps on points recovered from the `[i j k]` labels of a transformation semigroup.
pub fn maps_from_labels(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    s.labels()
        .iter()
        .map(|l| {
            l.trim_matches(|c| c == '[' || c == ']')
                .split_whitespace()
                .map(|x| x.parse::<usize>().unwrap() - 1)
                .collect()
        })
        .collect()
}

/// The natural action of a transformation semigroup on its points.
pub fn point_act(s: &FiniteSemigroup) -> Act {
    let maps = maps_from_labels(s);
    let k = maps[0].len();
    let rows = (0..k).map(|x| maps.iter().map(|m| m[x]).collect()).collect();
    Act::from_table(s, (1..=k).map(|x| format!("p{}", x)).collect(), rows, None).unwrap()
}

pub fn naive_associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

/// Every associative table on three elements.
pub fn all_three_element() -> Vec<FiniteSemigroup> {
    let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    for code in 0..3usize.pow(9) {
        let t: Vec<usize> = (0..9).map(|k| (code / 3usize.pow(k)) % 3).collect();
        if naive_associative(3, &t) {
            let rows = t.chunks(3).map(|r| r.to_vec()).collect();
            out.push(FiniteSemigroup::from_table(labels.clone(), rows, None, None).unwrap());
        }
    }
    out
}

/// `aS¹` by direct enumeration.
pub fn naive_right(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut v = vec![false; s.size()];
    v[a] = true;
    for b in s.elements() {
        v[s.mul(a, b)] = true;
    }
    v
}

pub fn naive_left(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut v = vec![false; s.size()];
    v[a] = true;
    for b in s.elements() {
        v[s.mul(b, a)] = true;
    }
    v
}

pub fn naive_two_sided(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut v = naive_right(s, a);
    for b in s.elements() {
        v[s.mul(b, a)] = true;
        for c in s.elements() {
            v[s.mul(s.mul(b, a), c)] = true;
        }
    }
    v
}

/// Checks that `f: A → B` is a bijective homomorphism.
pub fn is_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, f: &[usize]) -> bool {
    if a.size() != b.size() || f.len() != a.size() {
        return false;
    }
    let mut hit = vec![false; b.size()];
    for &y in f {
        if y >= b.size() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    a.elements().all(|x| a.elements().all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])))
}

pub fn random_subset(s: &FiniteSemigroup, rng: &mut ChaCha8Rng, p: f64) -> ElementSet {
    let mut x = s.set_of(s.elements().filter(|_| rng.gen_bool(p)));
    if x.is_empty() {
        x.insert(rng.gen_range(0..s.size()));
    }
    x
}
