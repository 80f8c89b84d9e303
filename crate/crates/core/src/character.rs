//! Formal (virtual) characters: finitely supported integer functions on the
//! weight lattice.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::weights::Weight;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    /// `e^μ`.
    pub fn monomial(mu: Weight) -> Self {
        let mut ch = Character::new();
        ch.add_term(mu, 1);
        ch
    }

    /// Adds `mult · e^μ`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, mu: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(mu) {
            btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities; the dimension for an honest module.
    pub fn total_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn scaled(&self, k: i64) -> Character {
        let mut out = Character::new();
        for (w, m) in self.iter() {
            out.add_term(w.clone(), k * m);
        }
        out
    }
}

impl FromIterator<(Weight, i64)> for Character {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut ch = Character::new();
        for (w, m) in iter {
            ch.add_term(w, m);
        }
        ch
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in rhs.iter() {
            out.add_term(w.clone(), m);
        }
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        self + &(-rhs)
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scaled(-1)
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        let mut out = Character::new();
        for (a, m) in self.iter() {
            for (b, n) in rhs.iter() {
                out.add_term(a + b, m * n);
            }
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}·e^{w}")?;
        }
        Ok(())
    }
}
