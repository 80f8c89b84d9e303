//! The A₃ weight lattice in simple-root coordinates.
//!
//! A [`Weight`] stores its coefficients `(c1, c2, c3)` on the simple roots
//! `α1, α2, α3`. Coefficients are exact rationals; fundamental weights have
//! quarter-integer coordinates, e.g. `ω1 = (3/4, 1/2, 1/4)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::Error;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// A3 Cartan matrix, `CARTAN[i][j] = <α_j, α_i∨>`.
pub const CARTAN: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];

/// Four times the inverse Cartan matrix. Row `i` is `4·ω_i` in simple-root
/// coordinates; as a bilinear form it is `4·(ω_i, ω_j)`.
pub const INV_CARTAN_X4: [[i64; 3]; 3] = [[3, 2, 1], [2, 4, 2], [1, 2, 3]];

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Render as `p/q`, denominator always present and positive.
pub fn rational_to_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Integer value of `q`, if it is one and fits in an `i64`.
pub fn as_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    c: [Rational; 3],
}

impl Weight {
    pub fn new(c1: Rational, c2: Rational, c3: Rational) -> Self {
        Weight { c: [c1, c2, c3] }
    }

    pub fn from_ints(c1: i64, c2: i64, c3: i64) -> Self {
        Weight::new(rat(c1), rat(c2), rat(c3))
    }

    pub fn zero() -> Self {
        Weight::from_ints(0, 0, 0)
    }

    /// The simple root `α_i`, `i ∈ {1,2,3}`.
    pub fn simple_root(i: usize) -> Result<Self, Error> {
        check_index(i)?;
        let mut c = [0, 0, 0];
        c[i - 1] = 1;
        Ok(Weight::from_ints(c[0], c[1], c[2]))
    }

    /// The fundamental weight `ω_i`, `i ∈ {1,2,3}`.
    pub fn fundamental(i: usize) -> Result<Self, Error> {
        check_index(i)?;
        let row = INV_CARTAN_X4[i - 1];
        Ok(Weight::new(ratio(row[0], 4), ratio(row[1], 4), ratio(row[2], 4)))
    }

    /// Rebuild a weight from its coroot pairings `(n1, n2, n3)`.
    pub fn from_fundamental(n: [Rational; 3]) -> Self {
        let mut c: [Rational; 3] = Default::default();
        for (i, ci) in c.iter_mut().enumerate() {
            *ci = (0..3).map(|j| ratio(INV_CARTAN_X4[j][i], 4) * &n[j]).sum();
        }
        Weight { c }
    }

    pub fn from_fundamental_ints(n: [i64; 3]) -> Self {
        Weight::from_fundamental([rat(n[0]), rat(n[1]), rat(n[2])])
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.c
    }

    pub fn c1(&self) -> &Rational {
        &self.c[0]
    }

    pub fn c2(&self) -> &Rational {
        &self.c[1]
    }

    pub fn c3(&self) -> &Rational {
        &self.c[2]
    }

    /// `<self, α_i∨>` via the Cartan matrix.
    pub fn pair_coroot(&self, i: usize) -> Result<Rational, Error> {
        check_index(i)?;
        Ok(self.pairing(i - 1))
    }

    fn pairing(&self, row: usize) -> Rational {
        CARTAN[row]
            .iter()
            .zip(&self.c)
            .map(|(&a, c)| rat(a) * c)
            .sum()
    }

    /// Coordinates in the fundamental-weight basis, i.e. all three coroot
    /// pairings.
    pub fn fundamental_coords(&self) -> [Rational; 3] {
        [self.pairing(0), self.pairing(1), self.pairing(2)]
    }

    /// Fundamental coordinates as machine integers, when all are integral.
    pub fn fundamental_ints(&self) -> Option<[i64; 3]> {
        let [a, b, c] = self.fundamental_coords();
        Some([as_i64(&a)?, as_i64(&b)?, as_i64(&c)?])
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.fundamental_coords()
            .iter()
            .all(|n| n.is_integer() && !n.is_negative())
    }

    /// Fails with the first coroot pairing that is negative or non-integral.
    pub fn require_dominant_integral(&self) -> Result<(), Error> {
        for (i, n) in self.fundamental_coords().iter().enumerate() {
            if !n.is_integer() || n.is_negative() {
                return Err(Error::NotDominant {
                    weight: self.to_string(),
                    index: i + 1,
                    pairing: n.to_string(),
                });
            }
        }
        Ok(())
    }

    /// `E ≅ E∨`, which for A3 means `c1 = c3`.
    pub fn is_self_dual(&self) -> bool {
        self.c[0] == self.c[2]
    }

    /// `Some(k)` when the weight is `k·ω2` with `k ≥ 0`.
    pub fn is_k_omega2(&self) -> Option<u64> {
        let [n1, n2, n3] = self.fundamental_coords();
        if n1.is_zero() && n3.is_zero() && n2.is_integer() && !n2.is_negative() {
            n2.to_integer().to_u64()
        } else {
            None
        }
    }

    /// The symmetric bilinear form normalised by `(α, α) = 2`.
    pub fn dot(&self, other: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (row, a) in CARTAN.iter().zip(&self.c) {
            for (&entry, b) in row.iter().zip(&other.c) {
                acc += rat(entry) * a * b;
            }
        }
        acc
    }

    /// Swap of `c1` and `c3`; the highest weight of the dual module.
    pub fn dual(&self) -> Weight {
        Weight::new(self.c[2].clone(), self.c[1].clone(), self.c[0].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

/// `ρ = ω1 + ω2 + ω3 = (3/2, 2, 3/2)`.
pub fn rho() -> Weight {
    Weight::new(ratio(3, 2), rat(2), ratio(3, 2))
}

/// The six positive roots of A3 in simple-root coordinates.
pub fn positive_roots() -> Vec<Weight> {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]]
        .iter()
        .map(|c| Weight::from_ints(c[0], c[1], c[2]))
        .collect()
}

fn check_index(i: usize) -> Result<(), Error> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidIndex(i))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c[0] + &rhs.c[0], &self.c[1] + &rhs.c[1], &self.c[2] + &rhs.c[2])
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c[0] - &rhs.c[0], &self.c[1] - &rhs.c[1], &self.c[2] - &rhs.c[2])
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-&self.c[0], -&self.c[1], -&self.c[2])
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for &Rational {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight::new(self * &rhs.c[0], self * &rhs.c[1], self * &rhs.c[2])
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        &rat(self) * rhs
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::zero()
    }
}
