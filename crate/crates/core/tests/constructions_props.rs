mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgchain_core::acts::Act;
use sgchain_core::constructions::{
    principal_factor, rees_matrix_zero, rees_quotient, u_construction, FactorTag, FiniteGroup, ReesMatrixSpec,
    SandwichEntry,
};
use sgchain_core::green::compute_green;
use sgchain_core::ideals::{classify, generated_ideal, generated_right_ideal, is_ideal};
use sgchain_core::FiniteSemigroup;

fn random_spec(seed: u64) -> ReesMatrixSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let group = FiniteGroup::cyclic(rng.gen_range(1..=3)).unwrap();
    let rows = rng.gen_range(1..=3);
    let cols = rng.gen_range(1..=3);
    loop {
        let p: Vec<Vec<SandwichEntry<usize>>> = (0..cols)
            .map(|_| {
                (0..rows)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            SandwichEntry::Zero
                        } else {
                            SandwichEntry::Group(rng.gen_range(0..group.order()))
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(spec) = ReesMatrixSpec::new(group.clone(), rows, cols, p) {
            return spec;
        }
    }
}

/// A seeded act of a seeded transformation semigroup.
pub fn random_act(seed: u64) -> (FiniteSemigroup, Act) {
    let s = random_transformation_semigroup(seed, 24);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let act = match rng.gen_range(0..4) {
        0 => point_act(&s),
        1 => Act::regular(&s),
        2 => Act::one_point(&s),
        _ => {
            let x = random_subset(&s, &mut rng, 0.2);
            let b = generated_right_ideal(&s, &x).unwrap();
            Act::regular(&s).restrict(&b).unwrap().0
        }
    };
    (s, act)
}

pub fn u_poset_matches(s: &FiniteSemigroup, act: &Act) -> Result<(), String> {
    let uc = u_construction(s, act).map_err(|e| e.to_string())?;
    let u = &uc.semigroup;
    let g = compute_green(u);
    let (part, poset) = act.rs_classes();
    let xc = |a: usize| g.r.class_of[uc.x_map[a]];
    let zc = g.r.class_of[uc.zero];
    if g.r.classes[zc].len() != 1 {
        return Err("0 shares its R-class".into());
    }
    for a in 0..act.len() {
        if !g.r_poset.lt(zc, xc(a)) {
            return Err(format!("0 is not strictly below x_{a}"));
        }
        if !g.r.classes[xc(a)].is_subset(&uc.x_ideal()) {
            return Err(format!("R-class of x_{a} leaves the ideal"));
        }
        for b in 0..act.len() {
            if part.related(a, b) != g.r.related(uc.x_map[a], uc.x_map[b]) {
                return Err(format!("classes of {a},{b} differ"));
            }
            let (ca, cb) = (part.class_of[a], part.class_of[b]);
            if poset.leq(ca, cb) != g.r_poset.leq(xc(a), xc(b)) {
                return Err(format!("order between {a},{b} differs"));
            }
        }
    }
    Ok(())
}

fn third_isomorphism(s: &FiniteSemigroup, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_subset(s, &mut rng, 0.15);
    let i = generated_ideal(s, &x).unwrap();
    let j = generated_ideal(s, &i.union(&random_subset(s, &mut rng, 0.15))).unwrap();
    let q1 = rees_quotient(s, &i).unwrap();
    let j_img = q1.semigroup.set_of(j.iter().map(|a| q1.map[a]));
    if !is_ideal(&q1.semigroup, &j_img) {
        return Err("J/I is not an ideal of S/I".into());
    }
    let q2 = rees_quotient(&q1.semigroup, &j_img).unwrap();
    let q3 = rees_quotient(s, &j).unwrap();
    let mut phi = vec![usize::MAX; q3.semigroup.size()];
    for a in s.elements() {
        let target = q2.map[q1.map[a]];
        let slot = &mut phi[q3.map[a]];
        if *slot != usize::MAX && *slot != target {
            return Err("induced map is not well defined".into());
        }
        *slot = target;
    }
    if !is_isomorphism(&q3.semigroup, &q2.semigroup, &phi) {
        return Err("induced map is not an isomorphism".into());
    }
    if q3.semigroup.label(q3.zero) != q2.semigroup.label(q2.zero) && s.zero().is_some_and(|z| i.contains(z)) {
        return Err("zero labels differ".into());
    }
    Ok(())
}

fn factor_tags(s: &FiniteSemigroup) -> Result<(), String> {
    for a in s.elements() {
        let f = principal_factor(s, a);
        let t = &f.semigroup;
        let null = t.zero().is_some_and(|z| t.elements().all(|x| t.elements().all(|y| t.mul(x, y) == z)));
        match f.tag {
            FactorTag::Kernel => {
                if !classify(t).is_simple {
                    return Err(format!("kernel factor of {a} not simple"));
                }
            }
            FactorTag::Null => {
                if !null {
                    return Err(format!("null factor of {a} has a non-zero product"));
                }
            }
            FactorTag::ZeroSimple => {
                if null {
                    return Err(format!("0-simple factor of {a} is null"));
                }
                let z = t.zero().unwrap();
                for x in t.elements().filter(|&x| x != z) {
                    if generated_ideal(t, &t.set_of([x])).unwrap() != t.all() {
                        return Err(format!("factor of {a} has a proper non-zero ideal"));
                    }
                }
            }
        }
    }
    Ok(())
}

#[test]
fn u_poset_on_hundred_seeded_pairs() {
    for seed in 0..100 {
        let (s, act) = random_act(seed);
        u_poset_matches(&s, &act).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
}

#[test]
fn factor_tags_on_zoo() {
    for (name, s) in zoo() {
        factor_tags(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rees_matrix_is_completely_zero_simple(seed in any::<u64>()) {
        let spec = random_spec(seed);
        let m = rees_matrix_zero(&spec).unwrap();
        prop_assert!(m.associativity_witness().is_none());
        prop_assert_eq!(classify(&m).is_completely_0_simple, Some(true));
    }

    #[test]
    fn third_isomorphism_pattern(s in arb_semigroup(40), seed in any::<u64>()) {
        prop_assert_eq!(third_isomorphism(&s, seed), Ok(()));
    }

    #[test]
    fn principal_factor_tags(s in arb_semigroup(40)) {
        prop_assert_eq!(factor_tags(&s), Ok(()));
    }

    #[test]
    fn u_poset_claim(seed in any::<u64>()) {
        let (s, act) = random_act(seed);
        prop_assert_eq!(u_poset_matches(&s, &act), Ok(()));
    }
}
