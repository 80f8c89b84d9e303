//! Restriction to the Levi `M = SL1' × SL1'` and to the split torus `a`,
//! the Kostant data `μ_w` and `dχ`, and the Euler-characteristic form of
//! Kostant's theorem for the maximal parabolic with Levi roots `{α1, α3}`.

use std::fmt;

use num::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::Character;
use crate::weights::{parse_rational, rat, rational_to_pq, rho, Rational, Weight};
use crate::weyl::{is_kostant_13, kostant_13, WeylElement};
use crate::Error;

pub use crate::freudenthal::{weight_multiplicities, weyl_dimension};

/// Highest weight of an `M`-module, as coefficients on the Levi fundamental
/// weights `ω1|_M` and `ω3|_M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MWeight {
    pub m1: Rational,
    pub m3: Rational,
}

impl MWeight {
    pub fn new(m1: Rational, m3: Rational) -> Self {
        MWeight { m1, m3 }
    }

    pub fn from_ints(m1: i64, m3: i64) -> Self {
        MWeight::new(rat(m1), rat(m3))
    }

    pub fn swap(&self) -> MWeight {
        MWeight::new(self.m3.clone(), self.m1.clone())
    }

    pub fn is_dominant_integral(&self) -> bool {
        [&self.m1, &self.m3].iter().all(|m| m.is_integer() && !m.is_negative())
    }
}

impl fmt::Display for MWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ω1 + {}ω3", self.m1, self.m3)
    }
}

impl Serialize for MWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [rational_to_pq(&self.m1), rational_to_pq(&self.m3)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for MWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let p = |x: &str| parse_rational(x).map_err(serde::de::Error::custom);
        Ok(MWeight::new(p(&a)?, p(&b)?))
    }
}

/// The coefficient `s` of a weight `s·α2` on `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AWeightCoefficient(pub Rational);

impl AWeightCoefficient {
    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for AWeightCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for AWeightCoefficient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational_to_pq(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AWeightCoefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(AWeightCoefficient).map_err(serde::de::Error::custom)
    }
}

/// `(<v, α1∨>, <v, α3∨>)`.
pub fn restrict_to_levi(v: &Weight) -> MWeight {
    MWeight::new(v.pair_coroot(1).unwrap(), v.pair_coroot(3).unwrap())
}

/// The `α2`-coordinate; `α1` and `α3` vanish on `a`.
pub fn restrict_to_a(v: &Weight) -> AWeightCoefficient {
    AWeightCoefficient(v.c2().clone())
}

fn require_kostant(w: &WeylElement) -> Result<(), Error> {
    if is_kostant_13(w) {
        Ok(())
    } else {
        Err(Error::NotKostant(w.name()))
    }
}

/// `μ_w = (w(λ+ρ) − ρ)|_b`.
pub fn mu_w(w: &WeylElement, lambda: &Weight) -> Result<MWeight, Error> {
    require_kostant(w)?;
    lambda.require_dominant_integral()?;
    Ok(restrict_to_levi(&w.dot_act(lambda)))
}

/// `s` with `dχ = s·α2 = −w(λ+ρ)|_a`.
pub fn d_chi(w: &WeylElement, lambda: &Weight) -> Result<AWeightCoefficient, Error> {
    require_kostant(w)?;
    lambda.require_dominant_integral()?;
    let shifted = w.act(&(lambda + &rho()));
    Ok(AWeightCoefficient(-restrict_to_a(&shifted).0))
}

/// `(m1 + 1)(m3 + 1)`.
pub fn levi_dim(m: &MWeight) -> Result<u64, Error> {
    let (a, b) = levi_factor_dims(m)?;
    Ok(a * b)
}

/// Dimensions of the two `SL1'` factors, `(m1 + 1, m3 + 1)`.
pub fn levi_factor_dims(m: &MWeight) -> Result<(u64, u64), Error> {
    if !m.is_dominant_integral() {
        return Err(Error::InvalidLeviWeight(m.to_string()));
    }
    let d = |x: &Rational| (x + rat(1)).to_integer().to_u64().ok_or_else(|| Error::InvalidLeviWeight(m.to_string()));
    Ok((d(&m.m1)?, d(&m.m3)?))
}

/// Full-torus character of the irreducible Levi module with highest weight
/// `hw`: the product of an `α1`-string and an `α3`-string.
pub fn levi_module_character(hw: &Weight) -> Result<Character, Error> {
    let m = restrict_to_levi(hw);
    if !m.is_dominant_integral() {
        return Err(Error::InvalidLeviWeight(m.to_string()));
    }
    let m1 = m.m1.to_integer().to_i64().unwrap();
    let m3 = m.m3.to_integer().to_i64().unwrap();
    let a1 = Weight::simple_root(1).unwrap();
    let a3 = Weight::simple_root(3).unwrap();
    let mut ch = Character::new();
    for i in 0..=m1 {
        for j in 0..=m3 {
            ch.add_term(&(hw - &(i * &a1)) - &(j * &a3), 1);
        }
    }
    Ok(ch)
}

/// Roots of the nilradical: those with `α2`-coefficient 1.
pub fn nilradical_roots() -> Vec<Weight> {
    crate::weights::positive_roots()
        .into_iter()
        .filter(|r| *r.c2() == rat(1))
        .collect()
}

/// `Π_{β ∈ Δ(n)} (1 − e^{−β})`, the alternating character of `Λ•n*`.
pub fn koszul_factor() -> Character {
    nilradical_roots().into_iter().fold(Character::monomial(Weight::zero()), |acc, beta| {
        let factor: Character = [(Weight::zero(), 1), (-beta, -1)].into_iter().collect();
        &acc * &factor
    })
}

/// `Σ_{w ∈ W^P} (−1)^{ℓ(w)} ch F_{w·λ}`.
pub fn kostant_alternating_sum(lambda: &Weight) -> Result<Character, Error> {
    lambda.require_dominant_integral()?;
    let mut total = Character::new();
    for w in kostant_13() {
        let sign = if w.len() % 2 == 0 { 1 } else { -1 };
        total = &total + &levi_module_character(&w.dot_act(lambda))?.scaled(sign);
    }
    Ok(total)
}

/// Euler-characteristic consequence of Kostant's theorem:
/// `ch E_λ · Π(1 − e^{−β}) = Σ_{w ∈ W^P} (−1)^{ℓ(w)} ch F_{w·λ}`.
pub fn kostant_euler_check(lambda: &Weight) -> Result<bool, Error> {
    let lhs = &weight_multiplicities(lambda)? * &koszul_factor();
    let rhs = kostant_alternating_sum(lambda)?;
    Ok(lhs == rhs)
}
