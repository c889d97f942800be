mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgchain_core::acts::Act;
use sgchain_core::constructions::FiniteGroup;
use sgchain_core::green::compute_green;
use sgchain_core::ideals::is_right_ideal;
use sgchain_core::{ElementSet, FiniteSemigroup};

fn right_ideals_brute(s: &FiniteSemigroup) -> Vec<ElementSet> {
    let n = s.size();
    let mut out: Vec<ElementSet> = (1u32..1 << n)
        .map(|m| s.set_of((0..n).filter(|&i| m & (1 << i) != 0)))
        .filter(|x| is_right_ideal(s, x))
        .collect();
    out.sort();
    out
}

fn subacts_brute(a: &Act) -> Vec<ElementSet> {
    let n = a.len();
    let mut out: Vec<ElementSet> = (1u32..1 << n)
        .map(|m| ElementSet::from_elements(n, (0..n).filter(|&i| m & (1 << i) != 0)))
        .filter(|x| a.is_subact(x))
        .collect();
    out.sort();
    out
}

fn lattice_correspondence(a: &Act, b: &ElementSet) -> Result<(), String> {
    let q = a.rees_quotient(b).map_err(|e| e.to_string())?;
    let subs_a = a.all_subacts().map_err(|e| e.to_string())?;
    let subs_q = q.act.all_subacts().map_err(|e| e.to_string())?;
    let above_b: Vec<&ElementSet> = subs_a.iter().filter(|c| b.is_subset(c)).collect();
    let with_zero: Vec<&ElementSet> = subs_q.iter().filter(|d| d.contains(q.zero)).collect();
    // D ↦ preimage is injective into subacts containing B
    let mut pre: Vec<ElementSet> = Vec::new();
    for d in &with_zero {
        let p = ElementSet::from_elements(a.len(), (0..a.len()).filter(|&x| d.contains(q.map[x])));
        if !above_b.contains(&&p) {
            return Err(format!("preimage of {:?} is not a subact above B", d.to_vec()));
        }
        if pre.contains(&p) {
            return Err("preimage map is not injective".into());
        }
        pre.push(p);
    }
    // C ↦ (C ∪ B)/B is onto the subacts containing 0
    let mut images: Vec<ElementSet> = subs_a
        .iter()
        .map(|c| ElementSet::from_elements(q.act.len(), c.union(b).iter().map(|x| q.map[x])))
        .collect();
    images.sort();
    images.dedup();
    for d in &with_zero {
        if !images.contains(d) {
            return Err(format!("{:?} is not an image", d.to_vec()));
        }
    }
    if images.iter().any(|d| !q.act.is_subact(d) || !d.contains(q.zero)) {
        return Err("an image is not a subact containing 0".into());
    }
    Ok(())
}

#[test]
fn subacts_of_regular_act_are_right_ideals() {
    for (name, s) in zoo().into_iter().filter(|(_, s)| s.size() <= 12) {
        let reg = Act::regular(&s);
        assert_eq!(reg.all_subacts().unwrap(), right_ideals_brute(&s), "{name}");
    }
}

#[test]
fn rs_poset_of_regular_act_is_green_r_poset() {
    for (name, s) in zoo() {
        let (part, poset) = Act::regular(&s).rs_classes();
        let g = compute_green(&s);
        assert_eq!(part, g.r, "{name}");
        assert_eq!(poset, g.r_poset, "{name}");
    }
}

#[test]
fn unions_of_simple_subacts() {
    // two copies of the regular act of C3 are both simple
    let c3 = FiniteGroup::cyclic(3).unwrap().semigroup().clone();
    let rows: Vec<Vec<usize>> = (0..6)
        .map(|x| c3.elements().map(|g| (x / 3) * 3 + c3.mul(x % 3, g)).collect())
        .collect();
    let labels = (0..6).map(|x| format!("p{x}")).collect();
    let act = Act::from_table(&c3, labels, rows, None).unwrap();
    let (part, poset) = act.rs_classes();
    assert_eq!(part.len(), 2);
    let all: Vec<usize> = (0..part.len()).collect();
    let maximal = poset.maximal_elements(&all).unwrap();
    let minimal = poset.minimal_elements(&all).unwrap();
    for c in all {
        assert!(maximal.contains(&c) || minimal.contains(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subacts_match_brute_force(seed in any::<u64>()) {
        let s = random_transformation_semigroup(seed, 12);
        let reg = Act::regular(&s);
        prop_assert_eq!(reg.all_subacts().unwrap(), subacts_brute(&reg));
        prop_assert_eq!(reg.all_subacts().unwrap(), right_ideals_brute(&s));
    }

    #[test]
    fn rees_quotient_lattice_correspondence(seed in any::<u64>()) {
        let s = random_transformation_semigroup(seed, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for act in [Act::regular(&s), point_act(&s)] {
            let x = ElementSet::from_elements(act.len(), [seed as usize % act.len()]);
            let b = act.generated_subact(&x).unwrap();
            prop_assert_eq!(lattice_correspondence(&act, &b), Ok(()));
            let y = random_subset(&s, &mut rng, 0.3);
            if act.len() == s.size() {
                let b = act.generated_subact(&y).unwrap();
                prop_assert_eq!(lattice_correspondence(&act, &b), Ok(()));
            }
        }
    }
}
