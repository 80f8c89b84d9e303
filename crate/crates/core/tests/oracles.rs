//! Independent oracles and randomized invariants.

use eisprofile::kostant::{d_chi, mu_w, weight_multiplicities, weyl_dimension, MWeight};
use eisprofile::profile::{full_report, j_of_lambda, CuspidalState, Nature};
use eisprofile::weights::{rat, rho, Weight};
use eisprofile::weyl::{enumerate_group, kostant_13, WeylElement};
use num::BigInt;
use proptest::prelude::*;

/// Dimension of the `GL4` module with partition `(a+b+c, b+c, c, 0)` by the
/// hook-content formula.
fn hook_content_dim(n: [i64; 3]) -> i64 {
    let shape = [n[0] + n[1] + n[2], n[1] + n[2], n[2], 0];
    let (mut num, mut den) = (1i128, 1i128);
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count() as i64;
            num *= (4 + j - i as i64) as i128;
            den *= (arm + leg + 1) as i128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as i64
}

#[test]
fn dimensions_agree_with_hook_content() {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let lambda = Weight::from_fundamental_ints([a, b, c]);
                let want = hook_content_dim([a, b, c]);
                assert_eq!(weyl_dimension(&lambda).unwrap(), BigInt::from(want), "{lambda}");
            }
        }
    }
}

/// Frozen values from the hook-content oracle.
#[test]
fn frozen_dimensions() {
    let cases = [([1, 0, 0], 4), ([0, 1, 0], 6), ([1, 0, 1], 15), ([0, 2, 0], 20), ([2, 0, 0], 10), ([1, 1, 1], 64), ([2, 2, 2], 729)];
    for (n, dim) in cases {
        assert_eq!(hook_content_dim(n), dim);
        assert_eq!(weyl_dimension(&Weight::from_fundamental_ints(n)).unwrap(), BigInt::from(dim));
    }
}

/// Number of semistandard tableaux of `shape` with entries `1..=4` and the
/// given content, by exhaustive filling.
fn kostka(shape: &[usize; 4], content: [i64; 4]) -> i64 {
    let cells: Vec<(usize, usize)> = (0..4).flat_map(|i| (0..shape[i]).map(move |j| (i, j))).collect();
    let mut grid = vec![vec![0u8; shape[0]]; 4];
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u8>>, left: &mut [i64; 4]) -> i64 {
        let Some(&(i, j)) = cells.get(k) else { return 1 };
        let mut count = 0;
        for v in 1..=4u8 {
            let row_ok = j == 0 || grid[i][j - 1] <= v;
            let col_ok = i == 0 || grid[i - 1][j] < v;
            if row_ok && col_ok && left[v as usize - 1] > 0 {
                grid[i][j] = v;
                left[v as usize - 1] -= 1;
                count += fill(k + 1, cells, grid, left);
                left[v as usize - 1] += 1;
            }
        }
        count
    }
    let mut left = content;
    fill(0, &cells, &mut grid, &mut left)
}

#[test]
fn multiplicities_agree_with_kostka_numbers() {
    use num::ToPrimitive;
    for n in [[0, 2, 0], [1, 0, 1], [2, 0, 2], [1, 1, 1], [0, 1, 2], [3, 0, 0]] {
        let shape = [(n[0] + n[1] + n[2]) as usize, (n[1] + n[2]) as usize, n[2] as usize, 0];
        let size = shape.iter().sum::<usize>() as i64;
        let ch = weight_multiplicities(&Weight::from_fundamental_ints(n)).unwrap();
        for (mu, m) in ch.iter() {
            let c = mu.coords();
            let eps = [c[0].clone(), &c[1] - &c[0], &c[2] - &c[1], -c[2].clone()];
            let content = eps.map(|e| (e * rat(4) + rat(size)).to_integer().to_i64().unwrap() / 4);
            assert_eq!(m, kostka(&shape, content), "{n:?} at {mu}");
        }
        assert_eq!(ch.total_mass(), hook_content_dim(n));
    }
}

/// Frozen from the Kostka count above.
#[test]
fn frozen_zero_weight_multiplicities() {
    let zero = |n| weight_multiplicities(&Weight::from_fundamental_ints(n)).unwrap().multiplicity(&Weight::zero());
    assert_eq!(zero([0, 2, 0]), 2);
    assert_eq!(zero([1, 0, 1]), 3);
    assert_eq!(zero([2, 0, 2]), 6);
    assert_eq!(kostka(&[4, 2, 2, 0], [2, 2, 2, 2]), 6);
}

#[test]
fn table_values_at_rho() {
    // λ = ρ: c = (3/2, 2, 3/2)
    let lambda = rho();
    let names: Vec<(String, MWeight, num::BigRational)> = kostant_13()
        .iter()
        .map(|w| (w.name(), mu_w(w, &lambda).unwrap(), d_chi(w, &lambda).unwrap().0))
        .collect();
    let want = [
        ("id", (1, 1), -4),
        ("w2", (3, 3), -2),
        ("w2w1", (1, 5), 0),
        ("w2w3", (5, 1), 0),
        ("w2w1w3", (3, 3), 2),
        ("w2w1w3w2", (1, 1), 4),
    ];
    for ((name, mu, s), (wn, (m1, m3), ws)) in names.iter().zip(want) {
        assert_eq!(name, wn);
        assert_eq!(*mu, MWeight::from_ints(m1, m3), "{name}");
        assert_eq!(*s, rat(ws), "{name}");
    }
}

fn dominant() -> impl Strategy<Value = Weight> {
    (0i64..12, 0i64..12, 0i64..12).prop_map(|(a, b, c)| Weight::from_fundamental_ints([a, b, c]))
}

fn group_element() -> impl Strategy<Value = WeylElement> {
    (0usize..24).prop_map(|i| enumerate_group()[i].clone())
}

proptest! {
    #[test]
    fn dot_action_is_an_action(u in group_element(), v in group_element(), lambda in dominant()) {
        prop_assert_eq!(u.compose(&v).dot_act(&lambda), u.dot_act(&v.dot_act(&lambda)));
    }

    #[test]
    fn kostant_images_are_levi_dominant(lambda in dominant()) {
        for w in kostant_13() {
            prop_assert!(mu_w(&w, &lambda).unwrap().is_dominant_integral());
        }
    }

    #[test]
    fn duality_swaps_the_tables(lambda in dominant()) {
        let reps = kostant_13();
        let dual = lambda.dual();
        // w2w1 and w2w3 trade places under c1 <-> c3; the rest are fixed
        let partner = [0, 1, 3, 2, 4, 5];
        for (i, w) in reps.iter().enumerate() {
            let v = &reps[partner[i]];
            prop_assert_eq!(mu_w(w, &lambda).unwrap().swap(), mu_w(v, &dual).unwrap());
            prop_assert_eq!(d_chi(w, &lambda).unwrap().0, d_chi(v, &dual).unwrap().0);
        }
    }

    #[test]
    fn report_invariants(lambda in dominant()) {
        let r = full_report(&lambda).unwrap();
        prop_assert_eq!(r.j_lambda, j_of_lambda(&lambda).unwrap());
        for d in &r.eisenstein {
            let len = d.kostant_word.len() as u8;
            match d.nature {
                Nature::HolomorphicValue => prop_assert_eq!(d.degree, len),
                Nature::ResidueClass => prop_assert_eq!(d.degree, 4 - len),
            }
            prop_assert_eq!((d.dim_sigma, d.dim_tau), (
                eisprofile::kostant::levi_dim(&MWeight::new(d.levi_hw.m1.clone(), rat(0))).unwrap(),
                eisprofile::kostant::levi_dim(&MWeight::new(rat(0), d.levi_hw.m3.clone())).unwrap(),
            ));
        }
        for e in &r.unitary_dual {
            prop_assert_eq!(e.degrees, [e.j, 5 - e.j]);
        }
        if !lambda.is_self_dual() {
            prop_assert!((0..=5).all(|q| r.cuspidal.status(q) == CuspidalState::Zero));
        }
    }

    #[test]
    fn json_round_trip(lambda in dominant()) {
        let r = full_report(&lambda).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: eisprofile::profile::CohomologyReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, r);
    }
}
