//! Classification layer: the cohomological unitary dual, the pole criterion
//! for the maximal parabolic, and the per-degree Eisenstein and cuspidal
//! cohomology of `GL2'` with coefficients in `E_λ`.
//!
//! Everything here is symbolic. A [`ContributionDescriptor`] records the
//! condition a cuspidal datum `(σ, τ)` on the Levi has to satisfy and the
//! degree its classes land in; it never counts cusp forms.

use std::fmt;

use num::Signed;
use serde::{Deserialize, Serialize};

use crate::kostant::{d_chi, levi_factor_dims, mu_w, AWeightCoefficient, MWeight};
use crate::weights::{parse_rational, rat, rational_to_pq, Rational, Weight};
use crate::weyl::{kostant_13, WeylElement};
use crate::Error;

/// Real dimension of the symmetric space; cohomology vanishes from here on.
pub const SYMMETRIC_SPACE_DIM: u8 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnitaryKind {
    /// `A_0(λ)`, the trivial representation `J(F_id, 2)`.
    TrivialRep,
    /// `J(F_w, t)`, a Langlands quotient.
    LanglandsQuotient {
        #[serde(with = "word_serde")]
        levi: WeylElement,
        t: u32,
    },
    /// `Ind(F_w ⊗ 1)`, tempered.
    TemperedInduced {
        #[serde(with = "word_serde")]
        levi: WeylElement,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitaryDualEntry {
    pub j: u8,
    #[serde(flatten)]
    pub kind: UnitaryKind,
    /// `{j, 5 − j}`
    pub degrees: [u8; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SigmaEqualsTau,
    SigmaNotEqualTau,
    AllPairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nature {
    HolomorphicValue,
    ResidueClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DescriptorWire", try_from = "DescriptorWire")]
pub struct ContributionDescriptor {
    pub degree: u8,
    pub kostant_word: WeylElement,
    pub s: AWeightCoefficient,
    /// `μ_w`, the archimedean type `F_{μ_w}` required of `π̃_∞`.
    pub levi_hw: MWeight,
    pub family: Family,
    pub dim_sigma: u64,
    pub dim_tau: u64,
    pub nature: Nature,
}

#[derive(Serialize, Deserialize)]
struct DescriptorWire {
    degree: u8,
    word: Vec<u8>,
    s: AWeightCoefficient,
    mu_w: MWeight,
    family: Family,
    dims: [u64; 2],
    nature: Nature,
}

impl From<ContributionDescriptor> for DescriptorWire {
    fn from(d: ContributionDescriptor) -> Self {
        DescriptorWire {
            degree: d.degree,
            word: d.kostant_word.word().to_vec(),
            s: d.s,
            mu_w: d.levi_hw,
            family: d.family,
            dims: [d.dim_sigma, d.dim_tau],
            nature: d.nature,
        }
    }
}

impl TryFrom<DescriptorWire> for ContributionDescriptor {
    type Error = Error;
    fn try_from(d: DescriptorWire) -> Result<Self, Error> {
        Ok(ContributionDescriptor {
            degree: d.degree,
            kostant_word: WeylElement::from_word(&d.word)?,
            s: d.s,
            levi_hw: d.mu_w,
            family: d.family,
            dim_sigma: d.dims[0],
            dim_tau: d.dims[1],
            nature: d.nature,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspidalState {
    Zero,
    NonZero,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalEntry {
    pub degree: u8,
    pub status: CuspidalState,
    pub witness: String,
}

/// One entry per degree `0..=5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CuspidalStatus(pub Vec<CuspidalEntry>);

impl CuspidalStatus {
    pub fn status(&self, q: u8) -> CuspidalState {
        self.0
            .iter()
            .find(|e| e.degree == q)
            .map_or(CuspidalState::Zero, |e| e.status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportWire", try_from = "ReportWire")]
pub struct CohomologyReport {
    pub lambda: Weight,
    pub fundamental: [i64; 3],
    pub j_lambda: u8,
    pub self_dual: bool,
    pub k_omega2: Option<u64>,
    pub unitary_dual: Vec<UnitaryDualEntry>,
    pub eisenstein: Vec<ContributionDescriptor>,
    pub cuspidal: CuspidalStatus,
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    lambda_alpha: [String; 3],
    lambda_fund: [i64; 3],
    j_lambda: u8,
    self_dual: bool,
    k_omega2: Option<u64>,
    unitary_dual: Vec<UnitaryDualEntry>,
    eisenstein: Vec<ContributionDescriptor>,
    cuspidal: CuspidalStatus,
    notes: Vec<String>,
}

impl From<CohomologyReport> for ReportWire {
    fn from(r: CohomologyReport) -> Self {
        let [c1, c2, c3] = r.lambda.coords();
        ReportWire {
            lambda_alpha: [rational_to_pq(c1), rational_to_pq(c2), rational_to_pq(c3)],
            lambda_fund: r.fundamental,
            j_lambda: r.j_lambda,
            self_dual: r.self_dual,
            k_omega2: r.k_omega2,
            unitary_dual: r.unitary_dual,
            eisenstein: r.eisenstein,
            cuspidal: r.cuspidal,
            notes: r.notes,
        }
    }
}

impl TryFrom<ReportWire> for CohomologyReport {
    type Error = Error;
    fn try_from(r: ReportWire) -> Result<Self, Error> {
        let [a, b, c] = &r.lambda_alpha;
        let lambda = Weight::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
        if lambda.fundamental_ints() != Some(r.lambda_fund) {
            return Err(Error::Parse("lambda_alpha and lambda_fund disagree".into()));
        }
        Ok(CohomologyReport {
            lambda,
            fundamental: r.lambda_fund,
            j_lambda: r.j_lambda,
            self_dual: r.self_dual,
            k_omega2: r.k_omega2,
            unitary_dual: r.unitary_dual,
            eisenstein: r.eisenstein,
            cuspidal: r.cuspidal,
            notes: r.notes,
        })
    }
}

mod word_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::weyl::WeylElement;

    pub fn serialize<S: Serializer>(w: &WeylElement, s: S) -> Result<S::Ok, S::Error> {
        w.word().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<WeylElement, D::Error> {
        let word = Vec::<u8>::deserialize(d)?;
        WeylElement::from_word(&word).map_err(serde::de::Error::custom)
    }
}

fn kostant_by_name(name: &str) -> WeylElement {
    kostant_13().into_iter().find(|w| w.name() == name).expect("Kostant representative")
}

/// `j(λ)`: 0 for `λ = 0`, 1 for `kω2` with `k ≥ 1`, 2 for other self-dual
/// weights, 3 otherwise.
pub fn j_of_lambda(lambda: &Weight) -> Result<u8, Error> {
    lambda.require_dominant_integral()?;
    Ok(match lambda.is_k_omega2() {
        Some(0) => 0,
        Some(_) => 1,
        None if lambda.is_self_dual() => 2,
        None => 3,
    })
}

/// The `A_j(λ)` with `j(λ) ≤ j ≤ 2`.
pub fn unitary_dual(lambda: &Weight) -> Result<Vec<UnitaryDualEntry>, Error> {
    let j0 = j_of_lambda(lambda)?;
    Ok((j0..=2)
        .map(|j| {
            let kind = match j {
                0 => UnitaryKind::TrivialRep,
                1 => UnitaryKind::LanglandsQuotient { levi: kostant_by_name("w2"), t: 1 },
                _ => UnitaryKind::TemperedInduced { levi: kostant_by_name("w2w3") },
            };
            UnitaryDualEntry { j, kind, degrees: [j, SYMMETRIC_SPACE_DIM - j] }
        })
        .collect())
}

/// Pole of `E(f, Λ)` at `Λ = s·α2`, `s > 0`, for `π̃ = σ ⊗ τ`: only when
/// `σ = τ`, at `s = 1` for infinite-dimensional `σ` and at `s = 2` for a
/// character.
pub fn has_pole(s: &Rational, sigma_is_character: bool, sigma_equals_tau: bool) -> Result<bool, Error> {
    if !s.is_positive() {
        return Err(Error::NonPositiveS(s.to_string()));
    }
    let at = if sigma_is_character { rat(2) } else { rat(1) };
    Ok(sigma_equals_tau && *s == at)
}

/// The Kostant representatives that can contribute: those with `dχ` in the
/// closed positive chamber, `w2w3, w2w1w3, w2w1w3w2`.
pub fn w_plus() -> Vec<WeylElement> {
    ["w2w3", "w2w1w3", "w2w1w3w2"].iter().map(|n| kostant_by_name(n)).collect()
}

pub fn eisenstein_profile(lambda: &Weight) -> Result<Vec<ContributionDescriptor>, Error> {
    lambda.require_dominant_integral()?;
    let mut out = Vec::new();
    for w in w_plus() {
        let s = d_chi(&w, lambda)?;
        let mu = mu_w(&w, lambda)?;
        let (dim_sigma, dim_tau) = levi_factor_dims(&mu)?;
        let len = w.len() as u8;
        let descriptor = |degree: u8, family: Family, nature: Nature| ContributionDescriptor {
            degree,
            kostant_word: w.clone(),
            s: s.clone(),
            levi_hw: mu.clone(),
            family,
            dim_sigma,
            dim_tau,
            nature,
        };

        if len == 2 {
            // evaluation point s = c3 − c1; the induced representation is
            // unitary, which forces E to be self-dual, i.e. s = 0
            if lambda.is_self_dual() {
                out.push(descriptor(len, Family::AllPairs, Nature::HolomorphicValue));
            }
            continue;
        }

        // σ = τ needs σ_∞ ≅ τ_∞, i.e. equal Levi factors
        let pole = s.0.is_positive() && mu.m1 == mu.m3 && has_pole(&s.0, dim_sigma == 1, true)?;
        if pole {
            out.push(descriptor(len, Family::SigmaNotEqualTau, Nature::HolomorphicValue));
            out.push(descriptor(len, Family::SigmaEqualsTau, Nature::HolomorphicValue));
            out.push(descriptor(4 - len, Family::SigmaEqualsTau, Nature::ResidueClass));
        } else {
            out.push(descriptor(len, Family::AllPairs, Nature::HolomorphicValue));
        }
    }
    out.sort_by_key(|d| (d.degree, d.nature == Nature::HolomorphicValue, d.family as u8));
    Ok(out)
}

pub fn cuspidal_profile(lambda: &Weight) -> Result<CuspidalStatus, Error> {
    lambda.require_dominant_integral()?;
    use CuspidalState::*;
    let entry = |degree: u8, status: CuspidalState, witness: &str| CuspidalEntry { degree, status, witness: witness.to_string() };
    let mut entries = vec![entry(0, Zero, "no cuspidal class in degree 0")];
    let top = entry(5, Zero, "vanishes for q >= dim X = 5");

    if !lambda.is_self_dual() {
        for q in 1..5 {
            entries.push(entry(q, Zero, "E is not self-dual: no unitary representation has cohomology with respect to E"));
        }
    } else if lambda.is_k_omega2().is_some() {
        let cap = "CAP representation with archimedean component A_1(lambda), lifted from D* x D* by Jacquet-Langlands";
        let open = "not settled: the tempered A_2(lambda) case is excluded for lambda = k*omega_2";
        entries.push(entry(1, NonZero, cap));
        entries.push(entry(2, Unknown, open));
        entries.push(entry(3, Unknown, open));
        entries.push(entry(4, NonZero, cap));
    } else {
        let tempered = "cuspidal representation with archimedean component A_2(lambda), by the trace formula";
        let no_a1 = "A_1(lambda) requires j(lambda) <= 1";
        entries.push(entry(1, Zero, no_a1));
        entries.push(entry(2, NonZero, tempered));
        entries.push(entry(3, NonZero, tempered));
        entries.push(entry(4, Zero, no_a1));
    }
    entries.push(top);
    Ok(CuspidalStatus(entries))
}

pub fn full_report(lambda: &Weight) -> Result<CohomologyReport, Error> {
    lambda.require_dominant_integral()?;
    let fundamental = lambda.fundamental_ints().ok_or_else(|| Error::Overflow(lambda.to_string()))?;
    let k = lambda.is_k_omega2();
    let eisenstein = eisenstein_profile(lambda)?;

    let mut notes = vec!["H^q = 0 for q >= dim_R X = 5".to_string()];
    if k == Some(0) {
        notes.push("degree 0 residual classes: H^0_Eis = ⊕_σ σ_f ∘ det′ over σ with σ_∞ = triv".to_string());
    }
    if k.is_none() {
        let s3 = eisenstein
            .iter()
            .find(|d| d.kostant_word.len() == 3)
            .map(|d| d.s.to_string())
            .unwrap_or_default();
        notes.push(format!(
            "degree 3 evaluation point s = c1-c2+c3+1 = {s3}, from dχ = -w(λ+ρ)|_a; the form c1-c2+c3 differs from it by 1"
        ));
    }

    let report = CohomologyReport {
        lambda: lambda.clone(),
        fundamental,
        j_lambda: j_of_lambda(lambda)?,
        self_dual: lambda.is_self_dual(),
        k_omega2: k,
        unitary_dual: unitary_dual(lambda)?,
        eisenstein,
        cuspidal: cuspidal_profile(lambda)?,
        notes,
    };
    check_report(&report)?;
    Ok(report)
}

/// Cross-invariants between the pieces of a report.
pub fn check_report(r: &CohomologyReport) -> Result<(), Error> {
    let fail = |msg: String| Err(Error::Invariant(format!("{}: {msg}", r.lambda)));
    for d in &r.eisenstein {
        let len = d.kostant_word.len() as u8;
        if d.degree >= SYMMETRIC_SPACE_DIM {
            return fail(format!("descriptor in degree {}", d.degree));
        }
        match d.nature {
            Nature::HolomorphicValue if d.degree != len => return fail(format!("holomorphic class for {} in degree {}", d.kostant_word, d.degree)),
            Nature::ResidueClass => {
                if d.degree != 4 - len {
                    return fail(format!("residue for {} in degree {}", d.kostant_word, d.degree));
                }
                if d.family != Family::SigmaEqualsTau || !has_pole(&d.s.0, d.dim_sigma == 1, true)? {
                    return fail(format!("residue for {} without a pole", d.kostant_word));
                }
            }
            _ => {}
        }
        if (d.dim_sigma, d.dim_tau) != levi_factor_dims(&d.levi_hw)? {
            return fail("Levi dimensions disagree with μ_w".into());
        }
    }
    let mut residual: Vec<u8> = r.eisenstein.iter().filter(|d| d.nature == Nature::ResidueClass).map(|d| d.degree).collect();
    residual.sort();
    let expected: Vec<u8> = match r.k_omega2 {
        Some(0) => vec![0, 1],
        Some(_) => vec![1],
        None => vec![],
    };
    if residual != expected {
        return fail(format!("residual degrees {residual:?}, expected {expected:?}"));
    }
    let cusp = &r.cuspidal;
    if cusp.status(0) != CuspidalState::Zero {
        return fail("cuspidal class in degree 0".into());
    }
    for q in 1..=2 {
        if cusp.status(q) != cusp.status(5 - q) {
            return fail(format!("cuspidal degrees {q} and {} differ", 5 - q));
        }
    }
    Ok(())
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SigmaEqualsTau => "σ = τ",
            Family::SigmaNotEqualTau => "σ ≠ τ",
            Family::AllPairs => "all (σ, τ)",
        })
    }
}

impl fmt::Display for Nature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Nature::HolomorphicValue => "holomorphic value",
            Nature::ResidueClass => "residue",
        })
    }
}

impl fmt::Display for CuspidalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CuspidalState::Zero => "zero",
            CuspidalState::NonZero => "nonzero",
            CuspidalState::Unknown => "unknown",
        })
    }
}

impl fmt::Display for UnitaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitaryKind::TrivialRep => f.write_str("trivial representation = J(F_id, 2)"),
            UnitaryKind::LanglandsQuotient { levi, t } => write!(f, "Langlands quotient J(F_{levi}, {t})"),
            UnitaryKind::TemperedInduced { levi } => write!(f, "tempered, Ind(F_{levi} ⊗ triv)"),
        }
    }
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c1, c2, c3] = self.lambda.coords();
        let [n1, n2, n3] = self.fundamental;
        writeln!(f, "lambda = {c1}·a1 + {c2}·a2 + {c3}·a3 = {n1}·w1 + {n2}·w2 + {n3}·w3")?;
        writeln!(f, "j(lambda) = {}", self.j_lambda)?;
        writeln!(f, "self-dual: {}", if self.self_dual { "yes" } else { "no" })?;
        match self.k_omega2 {
            Some(k) => writeln!(f, "lambda = {k}·w2")?,
            None => writeln!(f, "lambda is not a multiple of w2")?,
        }

        writeln!(f)?;
        writeln!(f, "cohomological unitary dual:")?;
        if self.unitary_dual.is_empty() {
            writeln!(f, "  (none)")?;
        }
        for e in &self.unitary_dual {
            writeln!(f, "  A_{}: {}, degrees {} and {}", e.j, e.kind, e.degrees[0], e.degrees[1])?;
        }

        writeln!(f)?;
        writeln!(f, "Eisenstein cohomology:")?;
        for q in 0..SYMMETRIC_SPACE_DIM {
            let here: Vec<_> = self.eisenstein.iter().filter(|d| d.degree == q).collect();
            if here.is_empty() {
                writeln!(f, "  H^{q}: 0")?;
                continue;
            }
            writeln!(f, "  H^{q}:")?;
            for d in here {
                writeln!(
                    f,
                    "    {} from {}, s = {}, mu_w = {}, dims ({}, {}), {}",
                    d.nature, d.kostant_word, d.s, d.levi_hw, d.dim_sigma, d.dim_tau, d.family
                )?;
            }
        }

        writeln!(f)?;
        writeln!(f, "cuspidal cohomology:")?;
        for e in &self.cuspidal.0 {
            writeln!(f, "  H^{}: {} ({})", e.degree, e.status, e.witness)?;
        }

        if !self.notes.is_empty() {
            writeln!(f)?;
            writeln!(f, "notes:")?;
            for n in &self.notes {
                writeln!(f, "  - {n}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;
    use crate::weights::as_i64;

    fn int_of(q: &Rational) -> i64 {
        as_i64(q).unwrap()
    }

    fn fund(n: [i64; 3]) -> Weight {
        Weight::from_fundamental_ints(n)
    }

    fn degrees(ds: &[ContributionDescriptor], nature: Nature) -> BTreeSet<u8> {
        ds.iter().filter(|d| d.nature == nature).map(|d| d.degree).collect()
    }

    #[test]
    fn j_values() {
        assert_eq!(j_of_lambda(&Weight::zero()).unwrap(), 0);
        assert_eq!(j_of_lambda(&fund([0, 3, 0])).unwrap(), 1);
        assert_eq!(j_of_lambda(&fund([1, 0, 1])).unwrap(), 2);
        assert_eq!(j_of_lambda(&fund([1, 0, 0])).unwrap(), 3);
        assert!(j_of_lambda(&Weight::from_ints(1, 0, 0)).is_err());
    }

    #[test]
    fn unitary_dual_examples() {
        let all = unitary_dual(&Weight::zero()).unwrap();
        let degs: Vec<_> = all.iter().map(|e| e.degrees).collect();
        assert_eq!(degs, [[0, 5], [1, 4], [2, 3]]);
        assert_eq!(all[0].kind, UnitaryKind::TrivialRep);
        assert!(matches!(&all[1].kind, UnitaryKind::LanglandsQuotient { levi, t: 1 } if levi.name() == "w2"));
        assert!(matches!(&all[2].kind, UnitaryKind::TemperedInduced { levi } if levi.name() == "w2w3"));

        assert!(unitary_dual(&fund([1, 0, 0])).unwrap().is_empty());
        let adj = unitary_dual(&fund([1, 0, 1])).unwrap();
        assert_eq!(adj.len(), 1);
        assert_eq!(adj[0].j, 2);
    }

    #[test]
    fn pole_truth_table() {
        assert!(has_pole(&rat(1), false, true).unwrap());
        assert!(has_pole(&rat(2), true, true).unwrap());
        assert!(!has_pole(&rat(1), true, true).unwrap());
        assert!(!has_pole(&rat(2), false, false).unwrap());
        assert!(!has_pole(&rat(3), false, true).unwrap());
        assert!(matches!(has_pole(&rat(0), false, true), Err(Error::NonPositiveS(_))));
        assert!(has_pole(&rat(-1), true, true).is_err());
    }

    #[test]
    fn profile_at_zero() {
        let ds = eisenstein_profile(&Weight::zero()).unwrap();
        assert_eq!(degrees(&ds, Nature::ResidueClass), BTreeSet::from([0, 1]));
        assert_eq!(degrees(&ds, Nature::HolomorphicValue), BTreeSet::from([2, 3, 4]));
        for q in [3, 4] {
            let fams: BTreeSet<_> = ds.iter().filter(|d| d.degree == q).map(|d| d.family as u8).collect();
            assert_eq!(fams, BTreeSet::from([Family::SigmaEqualsTau as u8, Family::SigmaNotEqualTau as u8]));
        }
        let h0 = ds.iter().find(|d| d.degree == 0).unwrap();
        assert_eq!(h0.s.0, rat(2));
        assert_eq!((h0.dim_sigma, h0.dim_tau), (1, 1));
        assert_eq!(h0.kostant_word.name(), "w2w1w3w2");
        let h1 = ds.iter().find(|d| d.degree == 1).unwrap();
        assert_eq!(h1.s.0, rat(1));
        assert_eq!(h1.kostant_word.name(), "w2w1w3");
    }

    #[test]
    fn profile_at_omega1() {
        let ds = eisenstein_profile(&fund([1, 0, 0])).unwrap();
        assert_eq!(degrees(&ds, Nature::HolomorphicValue), BTreeSet::from([3, 4]));
        assert!(degrees(&ds, Nature::ResidueClass).is_empty());
        assert!(ds.iter().all(|d| d.family == Family::AllPairs));
    }

    #[test]
    fn profile_at_adjoint() {
        let ds = eisenstein_profile(&fund([1, 0, 1])).unwrap();
        let s: Vec<_> = ds.iter().map(|d| (d.degree, int_of(&d.s.0))).collect();
        assert_eq!(s, [(2, 0), (3, 2), (4, 3)]);
        assert!(ds.iter().all(|d| d.nature == Nature::HolomorphicValue));
    }

    #[test]
    fn profile_at_k_omega2() {
        for k in 1..5 {
            let ds = eisenstein_profile(&fund([0, k, 0])).unwrap();
            assert_eq!(degrees(&ds, Nature::ResidueClass), BTreeSet::from([1]));
            let h4: Vec<_> = ds.iter().filter(|d| d.degree == 4).collect();
            assert_eq!(h4.len(), 1);
            assert_eq!(h4[0].levi_hw, MWeight::from_ints(0, 0));
            assert_eq!((h4[0].dim_sigma, h4[0].dim_tau), (1, 1));
            assert_eq!(h4[0].s.0, rat(k + 2));
        }
    }

    #[test]
    fn cuspidal_examples() {
        use CuspidalState::*;
        let st = |n| {
            let c = cuspidal_profile(&fund(n)).unwrap();
            (0..=5).map(|q| c.status(q)).collect::<Vec<_>>()
        };
        assert_eq!(st([0, 2, 0]), [Zero, NonZero, Unknown, Unknown, NonZero, Zero]);
        assert_eq!(st([1, 0, 1]), [Zero, Zero, NonZero, NonZero, Zero, Zero]);
        assert_eq!(st([1, 0, 0]), [Zero; 6]);
    }

    #[test]
    fn report_examples() {
        let residual = |n| {
            let r = full_report(&fund(n)).unwrap();
            degrees(&r.eisenstein, Nature::ResidueClass)
        };
        assert_eq!(residual([0, 0, 0]), BTreeSet::from([0, 1]));
        assert_eq!(residual([0, 1, 0]), BTreeSet::from([1]));
        assert!(residual([1, 0, 0]).is_empty());
        let r = full_report(&fund([1, 0, 0])).unwrap();
        assert!(r.cuspidal.0.iter().all(|e| e.status == CuspidalState::Zero));
        assert!(r.notes.iter().any(|n| n.contains("c1-c2+c3+1")));
        assert!(full_report(&Weight::from_ints(1, 0, 0)).is_err());
    }

    #[test]
    fn report_checker_catches_corruption() {
        let mut r = full_report(&Weight::zero()).unwrap();
        r.eisenstein.retain(|d| d.degree != 0);
        assert!(matches!(check_report(&r), Err(Error::Invariant(_))));

        let mut r = full_report(&fund([1, 0, 1])).unwrap();
        r.eisenstein[0].degree = 3;
        assert!(check_report(&r).is_err());
    }

    #[test]
    fn json_round_trip() {
        for n in [[0, 0, 0], [1, 0, 1], [1, 0, 0], [0, 3, 0]] {
            let r = full_report(&fund(n)).unwrap();
            let text = serde_json::to_string(&r).unwrap();
            let back: CohomologyReport = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }
}
