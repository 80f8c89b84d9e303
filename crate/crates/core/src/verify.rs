//! Grid verification: table reproduction, the Kostant-Euler oracle,
//! Freudenthal against the dimension formula, and report invariants.

use std::collections::BTreeSet;

use num::{BigInt, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::kostant::{d_chi, kostant_euler_check, mu_w, weight_multiplicities, weyl_dimension, MWeight};
use crate::profile::{full_report, CohomologyReport, CuspidalState, Family, Nature};
use crate::tables::{reference_d_chi_forms, reference_mu_forms};
use crate::weights::Weight;

/// Largest grid bound for the Euler oracle.
pub const EULER_MAX: u32 = 4;
/// Largest grid bound for the Freudenthal mass check.
pub const FREUDENTHAL_MAX: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: String,
    pub weights_scanned: usize,
    pub failures: usize,
    #[serde(skip)]
    pub first_failure: Option<(Weight, String)>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Dominant integral weights with every `n_i ≤ max`, sorted by fundamental
/// coordinates.
pub fn dominant_grid(max: u32) -> Vec<Weight> {
    let m = max as i64;
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m {
            for c in 0..=m {
                out.push(Weight::from_fundamental_ints([a, b, c]));
            }
        }
    }
    out
}

fn run_check<F>(name: &str, grid: &[Weight], check: F) -> CheckSummary
where
    F: Fn(&Weight) -> Result<(), String> + Sync + Send,
{
    let results: Vec<Result<(), String>> = grid.par_iter().map(check).collect();
    let failures: Vec<(Weight, String)> = grid
        .iter()
        .zip(results)
        .filter_map(|(w, r)| r.err().map(|e| (w.clone(), e)))
        .collect();
    CheckSummary {
        check: name.to_string(),
        weights_scanned: grid.len(),
        failures: failures.len(),
        first_failure: failures.into_iter().next(),
    }
}

/// `μ_w` against the reference closed forms, for every `w ∈ W^P`.
pub fn check_mu_table(lambda: &Weight) -> Result<(), String> {
    for (w, m1, m3) in reference_mu_forms() {
        let got = mu_w(&w, lambda).map_err(|e| e.to_string())?;
        let want = MWeight::new(m1.eval(lambda), m3.eval(lambda));
        if got != want {
            return Err(format!("mu_w({w}) = {got}, expected {want}"));
        }
        if !got.is_dominant_integral() {
            return Err(format!("mu_w({w}) = {got} is not M-dominant"));
        }
    }
    let by = |n: &str| reference_mu_forms().into_iter().find(|(w, _, _)| w.name() == n).unwrap().0;
    for (a, b) in [("id", "w2w1w3w2"), ("w2", "w2w1w3")] {
        let ma = mu_w(&by(a), lambda).map_err(|e| e.to_string())?;
        let mb = mu_w(&by(b), lambda).map_err(|e| e.to_string())?;
        if ma.swap() != mb {
            return Err(format!("mu_w({b}) is not the swap of mu_w({a})"));
        }
    }
    Ok(())
}

/// `dχ` against the reference forms, its sign pattern, and the three pair
/// symmetries.
pub fn check_d_chi_table(lambda: &Weight) -> Result<(), String> {
    let forms = reference_d_chi_forms();
    let mut values = Vec::new();
    for (w, s) in &forms {
        let got = d_chi(w, lambda).map_err(|e| e.to_string())?.0;
        if got != s.eval(lambda) {
            return Err(format!("d_chi({w}) = {got}, expected {}", s.eval(lambda)));
        }
        values.push(got);
    }
    let zero = num::BigRational::zero();
    // id, w2 strictly negative and their partners strictly positive; the
    // middle pair changes sign with c1 - c3
    let signs_ok = values[0] < zero && values[1] < zero && values[4] > zero && values[5] > zero;
    if !signs_ok {
        return Err("d_chi sign pattern violated".into());
    }
    for (a, b) in [(0, 5), (1, 4), (2, 3)] {
        if values[a] != -values[b].clone() {
            return Err(format!("d_chi({}) != -d_chi({})", forms[a].0, forms[b].0));
        }
    }
    Ok(())
}

pub fn check_euler(lambda: &Weight) -> Result<(), String> {
    match kostant_euler_check(lambda) {
        Ok(true) => Ok(()),
        Ok(false) => Err("Kostant alternating sum differs from ch(E)·Π(1 - e^-β)".into()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn check_freudenthal(lambda: &Weight) -> Result<(), String> {
    let ch = weight_multiplicities(lambda).map_err(|e| e.to_string())?;
    let dim = weyl_dimension(lambda).map_err(|e| e.to_string())?;
    if BigInt::from(ch.total_mass()) != dim {
        return Err(format!("total mass {} != Weyl dimension {dim}", ch.total_mass()));
    }
    if ch.iter().any(|(_, m)| m <= 0) {
        return Err("nonpositive multiplicity".into());
    }
    Ok(())
}

/// Structural conformance of the full report at `λ`.
pub fn check_profile(lambda: &Weight) -> Result<(), String> {
    let r = full_report(lambda).map_err(|e| e.to_string())?;
    profile_conformance(&r)
}

pub fn profile_conformance(r: &CohomologyReport) -> Result<(), String> {
    let lambda = &r.lambda;
    let degrees = |nature: Nature| -> BTreeSet<u8> { r.eisenstein.iter().filter(|d| d.nature == nature).map(|d| d.degree).collect() };
    let hol = degrees(Nature::HolomorphicValue);
    let res = degrees(Nature::ResidueClass);
    let set = |xs: &[u8]| xs.iter().copied().collect::<BTreeSet<u8>>();

    if r.eisenstein.iter().any(|d| d.degree >= 5) {
        return Err("descriptor in degree >= 5".into());
    }
    for d in &r.eisenstein {
        let len = d.kostant_word.len() as u8;
        let ok = match d.nature {
            Nature::HolomorphicValue => d.degree == len,
            Nature::ResidueClass => d.degree == 4 - len && d.family == Family::SigmaEqualsTau,
        };
        if !ok {
            return Err(format!("degree bookkeeping broken for {}", d.kostant_word));
        }
    }

    match lambda.is_k_omega2() {
        Some(0) => {
            if res != set(&[0, 1]) || hol != set(&[2, 3, 4]) {
                return Err(format!("lambda = 0: residual {res:?}, holomorphic {hol:?}"));
            }
            for q in [3u8, 4] {
                let fams: BTreeSet<u8> = r.eisenstein.iter().filter(|d| d.degree == q).map(|d| d.family as u8).collect();
                if fams != set(&[Family::SigmaEqualsTau as u8, Family::SigmaNotEqualTau as u8]) {
                    return Err(format!("lambda = 0: degree {q} families not split"));
                }
            }
        }
        Some(_) => {
            if res != set(&[1]) {
                return Err(format!("lambda = k*w2: residual degrees {res:?}"));
            }
            let h4: Vec<_> = r.eisenstein.iter().filter(|d| d.degree == 4).collect();
            if h4.len() != 1 || h4[0].levi_hw != MWeight::from_ints(0, 0) || (h4[0].dim_sigma, h4[0].dim_tau) != (1, 1) {
                return Err("lambda = k*w2: degree 4 is not a single trivial-type family".into());
            }
        }
        None if lambda.is_self_dual() => {
            if !res.is_empty() || hol != set(&[2, 3, 4]) {
                return Err(format!("self-dual: residual {res:?}, holomorphic {hol:?}"));
            }
        }
        None => {
            if !res.is_empty() || hol != set(&[3, 4]) {
                return Err(format!("not self-dual: residual {res:?}, holomorphic {hol:?}"));
            }
        }
    }

    let deg2: Vec<_> = r.eisenstein.iter().filter(|d| d.degree == 2).collect();
    if deg2.is_empty() == lambda.is_self_dual() || deg2.iter().any(|d| !d.s.0.is_zero()) {
        return Err("degree 2 classes must exist exactly when c1 = c3, at s = 0".into());
    }
    if r.unitary_dual.is_empty() == lambda.is_self_dual() {
        return Err("unitary dual must be nonempty exactly when c1 = c3".into());
    }
    if !r.unitary_dual.is_empty() && !r.unitary_dual.iter().any(|e| e.j == 2) {
        return Err("tempered A_2 missing".into());
    }
    cuspidal_conformance(r)
}

pub fn cuspidal_conformance(r: &CohomologyReport) -> Result<(), String> {
    let c = &r.cuspidal;
    if c.status(0) != CuspidalState::Zero {
        return Err("cuspidal class in degree 0".into());
    }
    for q in 0..=5u8 {
        if c.status(q) != CuspidalState::Zero && c.status(q) != c.status(5 - q) {
            return Err(format!("cuspidal degree {q} has no partner in degree {}", 5 - q));
        }
    }
    if !r.lambda.is_self_dual() && (0..=5).any(|q| c.status(q) != CuspidalState::Zero) {
        return Err("nonzero cuspidal status for a non-self-dual weight".into());
    }
    Ok(())
}

/// All grid checks with bound `max`, in a fixed order.
pub fn run_all(max: u32) -> Vec<CheckSummary> {
    let full = dominant_grid(max);
    let euler = dominant_grid(max.min(EULER_MAX));
    let freud = dominant_grid(max.min(FREUDENTHAL_MAX));
    vec![
        run_check("mu_table", &full, check_mu_table),
        run_check("d_chi_table", &full, check_d_chi_table),
        run_check("kostant_euler", &euler, check_euler),
        run_check("freudenthal_dimension", &freud, check_freudenthal),
        run_check("profile_invariants", &full, check_profile),
    ]
}
