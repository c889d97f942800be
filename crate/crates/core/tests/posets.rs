use proptest::prelude::*;
use sgchain_core::green::Poset;

/// Random order: `i ≤ j` allowed only for `i ≤ j` numerically, then closed.
fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.25), n * n).prop_map(move |bits| {
            Poset::from_relation(n, |i, j| i == j || (i < j && bits[i * n + j])).unwrap()
        })
    })
}

fn brute_width(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&m| {
            let xs: Vec<usize> = (0..n).filter(|&i| m & (1 << i) != 0).collect();
            xs.iter().all(|&a| xs.iter().all(|&b| a == b || !p.comparable(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn maximum_antichain_is_maximum(p in arb_poset(12)) {
        let a = p.maximum_antichain();
        prop_assert!(p.is_antichain(&a));
        prop_assert_eq!(a.len(), brute_width(&p));
        prop_assert_eq!(p.width(), a.len());
    }

    #[test]
    fn longest_chain_is_a_chain_of_height(p in arb_poset(12)) {
        let c = p.longest_chain();
        prop_assert_eq!(c.len(), p.height());
        for w in c.windows(2) {
            prop_assert!(p.lt(w[0], w[1]));
        }
    }
}

#[test]
fn chains_and_antichains() {
    assert_eq!(Poset::chain(7).width(), 1);
    assert_eq!(Poset::antichain(7).width(), 7);
    assert_eq!(Poset::chain(7).height(), 7);
}
