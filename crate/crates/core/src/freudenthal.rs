//! Weight multiplicities of irreducible `sl4`-modules by Freudenthal's
//! recursion, and the Weyl dimension formula.
//!
//! The recursion runs on integer fundamental coordinates: every weight of
//! `E_λ` is integral, so nothing here needs rationals. Inner products are
//! scaled by 4 to stay integral.

use std::collections::{BTreeSet, HashMap};

use num::BigInt;

use crate::character::Character;
use crate::weights::{Weight, CARTAN, INV_CARTAN_X4};
use crate::Error;

type Fund = [i64; 3];

/// Positive roots as simple-root coefficient vectors.
const POSITIVE_ROOTS: [[i64; 3]; 6] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]];

/// Fundamental coordinates of `Σ k_i α_i`.
fn root_fund(k: &[i64; 3]) -> Fund {
    let mut out = [0; 3];
    for (row, o) in out.iter_mut().enumerate() {
        *o = (0..3).map(|j| CARTAN[row][j] * k[j]).sum();
    }
    out
}

/// `4·(x, y)` for fundamental coordinates.
fn form4(x: &Fund, y: &Fund) -> i64 {
    let mut acc = 0;
    for i in 0..3 {
        for j in 0..3 {
            acc += x[i] * INV_CARTAN_X4[i][j] * y[j];
        }
    }
    acc
}

fn add(x: &Fund, y: &Fund) -> Fund {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2]]
}

fn scale(k: i64, x: &Fund) -> Fund {
    [k * x[0], k * x[1], k * x[2]]
}

fn simple_reflect(x: &Fund, i: usize) -> Fund {
    let a = root_fund(&{
        let mut k = [0; 3];
        k[i] = 1;
        k
    });
    add(x, &scale(-x[i], &a))
}

/// The dominant weight in the Weyl orbit of `x`.
fn dominant_rep(mut x: Fund) -> Fund {
    while let Some(i) = (0..3).find(|&i| x[i] < 0) {
        x = simple_reflect(&x, i);
    }
    x
}

fn orbit(x: &Fund) -> BTreeSet<Fund> {
    let mut seen = BTreeSet::from([*x]);
    let mut stack = vec![*x];
    while let Some(y) = stack.pop() {
        for i in 0..3 {
            let z = simple_reflect(&y, i);
            if seen.insert(z) {
                stack.push(z);
            }
        }
    }
    seen
}

/// Multiplicities of the dominant weights of `E_λ`, keyed by fundamental
/// coordinates.
pub(crate) fn dominant_multiplicities(lambda: Fund) -> HashMap<Fund, i64> {
    let roots: Vec<Fund> = POSITIVE_ROOTS.iter().map(root_fund).collect();
    let alphas: Vec<Fund> = (0..3)
        .map(|i| {
            let mut k = [0; 3];
            k[i] = 1;
            root_fund(&k)
        })
        .collect();

    // λ − (aα1 + bα2 + cα3) dominant forces its simple-root coordinates to be
    // nonnegative, so each of a, b, c is bounded by λ's coordinate.
    let coords4: Vec<i64> = (0..3).map(|i| (0..3).map(|j| lambda[j] * INV_CARTAN_X4[j][i]).sum()).collect();
    let bound: Vec<i64> = coords4.iter().map(|c| c / 4).collect();

    let mut candidates: Vec<(i64, Fund)> = Vec::new();
    for a in 0..=bound[0] {
        for b in 0..=bound[1] {
            for c in 0..=bound[2] {
                let down = add(&add(&scale(a, &alphas[0]), &scale(b, &alphas[1])), &scale(c, &alphas[2]));
                let mu = add(&lambda, &scale(-1, &down));
                if mu.iter().all(|&x| x >= 0) {
                    candidates.push((a + b + c, mu));
                }
            }
        }
    }
    candidates.sort();

    let rho: Fund = [1, 1, 1];
    let lr = add(&lambda, &rho);
    let top = form4(&lr, &lr);

    let mut mult: HashMap<Fund, i64> = HashMap::new();
    for (height, mu) in candidates {
        if height == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = 0i64;
        for beta in &roots {
            let mut j = 1;
            loop {
                let nu = add(&mu, &scale(j, beta));
                let m = mult.get(&dominant_rep(nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += m * form4(&nu, beta);
                j += 1;
            }
        }
        let mr = add(&mu, &rho);
        let denom = top - form4(&mr, &mr);
        debug_assert!(denom > 0);
        debug_assert_eq!((2 * sum) % denom, 0);
        let m = 2 * sum / denom;
        if m != 0 {
            mult.insert(mu, m);
        }
    }
    mult
}

/// Full formal character of the irreducible module `E_λ`.
pub fn weight_multiplicities(lambda: &Weight) -> Result<Character, Error> {
    lambda.require_dominant_integral()?;
    let fund = lambda.fundamental_ints().ok_or_else(|| Error::Overflow(lambda.to_string()))?;
    let dominant = dominant_multiplicities(fund);
    let mut ch = Character::new();
    for (mu, m) in dominant {
        for x in orbit(&mu) {
            ch.add_term(Weight::from_fundamental_ints(x), m);
        }
    }
    Ok(ch)
}

/// `Π_{β>0} <λ+ρ, β∨> / <ρ, β∨>`.
pub fn weyl_dimension(lambda: &Weight) -> Result<BigInt, Error> {
    lambda.require_dominant_integral()?;
    let n = lambda.fundamental_coords();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for k in POSITIVE_ROOTS {
        let height: i64 = k.iter().sum();
        let pairing: crate::weights::Rational = (0..3).map(|i| crate::weights::rat(k[i]) * (&n[i] + crate::weights::rat(1))).sum();
        num *= pairing.to_integer();
        den *= BigInt::from(height);
    }
    Ok(num / den)
}
