mod common;

use hookpoly::{cycle_type_of, hook_character, hook_dimension, BigInt, CycleType, HookLabel};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn random_perm(n: usize, seed: u64) -> Vec<usize> {
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}

#[test]
fn matches_exterior_power_oracle() {
    for n in 1..=7 {
        for p in common::permutations(n) {
            let ct = cycle_type_of(&p).unwrap();
            for k in 1..=n {
                let want = common::hook_char(k, n, &common::cycle_lengths(&p));
                assert_eq!(hook_character(HookLabel::for_k(k, n), &ct).unwrap(), want, "k={k} σ={p:?}");
            }
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=6 {
        let perms = common::permutations(n);
        let factorial = perms.len() as i64;
        let chars: Vec<Vec<i64>> = (1..=n)
            .map(|k| {
                perms
                    .iter()
                    .map(|p| hook_character(HookLabel::for_k(k, n), &cycle_type_of(p).unwrap()).unwrap())
                    .collect()
            })
            .collect();
        for a in 0..n {
            for b in 0..n {
                let inner: i64 = chars[a].iter().zip(&chars[b]).map(|(x, y)| x * y).sum();
                assert_eq!(inner, if a == b { factorial } else { 0 }, "n={n} k={} k'={}", a + 1, b + 1);
            }
        }
    }
}

#[test]
fn identity_gives_dimension() {
    for n in 1..=10usize {
        for k in 1..=n {
            let label = HookLabel::for_k(k, n);
            let chi = hook_character(label, &CycleType::identity(n)).unwrap();
            assert_eq!(BigInt::from(chi), hook_dimension(label).unwrap());
            assert_eq!(chi as u64, common::binomial(n as u64 - 1, k as u64 - 1));
        }
    }
}

#[test]
fn invalid_labels_vanish_and_sizes_are_checked() {
    let ct = CycleType::new(vec![2, 1]).unwrap();
    assert_eq!(hook_character(HookLabel::new(0, 3), &ct).unwrap(), 0);
    assert_eq!(hook_character(HookLabel::new(4, -1), &ct).unwrap(), 0);
    assert!(hook_character(HookLabel::for_k(1, 4), &ct).is_err());
    assert_eq!(hook_character(HookLabel::EMPTY, &CycleType::identity(0)).unwrap(), 1);
    assert!(CycleType::new(vec![3, 0]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Deleting a fixed point: `χ_λ(σ) = Σ χ_λ'(σ₁)` over one-box removals `λ'`.
    #[test]
    fn fixed_point_relation(n in 2usize..=12, seed in any::<u64>(), k_seed in any::<usize>()) {
        let sigma1 = cycle_type_of(&random_perm(n - 1, seed)).unwrap();
        let ct = sigma1.with_part(1);
        let k = 1 + k_seed % n;
        let label = HookLabel::for_k(k, n);
        let literal = hook_character(HookLabel::new(k as i64 - 1, (n - k) as i64), &sigma1).unwrap()
            + hook_character(HookLabel::new(k as i64, n as i64 - k as i64 - 1), &sigma1).unwrap();
        let via_removals: i64 = label.remove_box().into_iter().map(|l| hook_character(l, &sigma1).unwrap()).sum();
        let chi = hook_character(label, &ct).unwrap();
        prop_assert_eq!(chi, literal);
        prop_assert_eq!(chi, via_removals);
    }

    /// Deleting a transposition: `χ_(k,1^{n−k})(σ) = χ_(k−2,1^{n−k})(σ₂) − χ_(k,1^{n−k−2})(σ₂)`.
    #[test]
    fn transposition_relation(n in 2usize..=12, seed in any::<u64>(), k_seed in any::<usize>()) {
        let base = cycle_type_of(&random_perm(n - 2, seed)).unwrap();
        let ct = base.with_part(2);
        let k = 1 + k_seed % n;
        let (k, n) = (k as i64, n as i64);
        let chi = hook_character(HookLabel::new(k, n - k), &ct).unwrap();
        let rhs = hook_character(HookLabel::new(k - 2, n - k), &base).unwrap()
            - hook_character(HookLabel::new(k, n - k - 2), &base).unwrap();
        prop_assert_eq!(chi, rhs);
    }
}

#[test]
fn single_box_removal_at_order_one() {
    // Both labels of size 0 encode the empty partition; only one survives deduplication.
    assert_eq!(HookLabel::for_k(1, 1).remove_box().len(), 1);
    let sum: i64 = HookLabel::for_k(1, 1)
        .remove_box()
        .into_iter()
        .map(|l| hook_character(l, &CycleType::identity(0)).unwrap())
        .sum();
    assert_eq!(sum, hook_character(HookLabel::for_k(1, 1), &CycleType::identity(1)).unwrap());
}
