//! The Weyl group `W(A3) ≅ S4`.
//!
//! Elements are stored as permutations of the four ε-slots, `w(e_j) = e_{p[j]}`,
//! together with one reduced word in the simple reflections. A word
//! `[i1, ..., ik]` denotes the product `s_{i1} ⋯ s_{ik}`, so the rightmost
//! letter acts first.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num::{Signed, Zero};

use crate::weights::{rho, Weight};
use crate::Error;

const IDENTITY: [u8; 4] = [0, 1, 2, 3];

#[derive(Clone, Debug)]
pub struct WeylElement {
    perm: [u8; 4],
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { perm: IDENTITY, word: Vec::new() }
    }

    /// Build from a permutation, deriving the reduced word by stripping left
    /// descents, smallest generator first.
    pub fn from_perm(perm: [u8; 4]) -> Result<Self, Error> {
        let mut seen = [false; 4];
        for &p in &perm {
            if p > 3 || seen[p as usize] {
                return Err(Error::Parse(format!("not a permutation of 0..4: {perm:?}")));
            }
            seen[p as usize] = true;
        }
        let mut word = Vec::new();
        let mut rest = perm;
        while let Some(i) = (1..=3).find(|&i| has_left_descent(&rest, i)) {
            word.push(i);
            rest = compose(&transposition(i), &rest);
        }
        Ok(WeylElement { perm, word })
    }

    /// The product `s_{i1} ⋯ s_{ik}`; the stored word is re-derived, so a
    /// non-reduced input is accepted and normalised.
    pub fn from_word(word: &[u8]) -> Result<Self, Error> {
        let mut perm = IDENTITY;
        for &i in word {
            if !(1..=3).contains(&i) {
                return Err(Error::InvalidIndex(i as usize));
            }
            perm = compose(&perm, &transposition(i));
        }
        WeylElement::from_perm(perm)
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm == IDENTITY
    }

    /// Number of inversions of the permutation.
    pub fn inversions(&self) -> usize {
        let p = &self.perm;
        (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement::from_perm(compose(&self.perm, &other.perm)).expect("product of permutations")
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = [0u8; 4];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = j as u8;
        }
        WeylElement::from_perm(inv).expect("inverse permutation")
    }

    /// Linear action, applying the word's reflections right to left.
    pub fn act(&self, v: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(v.clone(), |acc, &i| reflect(&acc, i as usize))
    }

    /// Shifted action `w(v + ρ) − ρ`.
    pub fn dot_act(&self, v: &Weight) -> Weight {
        let r = rho();
        &self.act(&(v + &r)) - &r
    }

    /// Linear action computed through the ε-coordinates and the stored
    /// permutation, independent of the reduced word.
    pub fn act_via_perm(&self, v: &Weight) -> Weight {
        let [c1, c2, c3] = v.coords();
        let eps = [c1.clone(), c2 - c1, c3 - c2, -c3];
        let mut moved: [_; 4] = Default::default();
        for (j, x) in eps.into_iter().enumerate() {
            moved[self.perm[j] as usize] = x;
        }
        let a = moved[0].clone();
        let b = &a + &moved[1];
        let c = &b + &moved[2];
        Weight::new(a, b, c)
    }

    /// Formatted as `w2w1w3`, or `id`.
    pub fn name(&self) -> String {
        if self.word.is_empty() {
            "id".to_string()
        } else {
            self.word.iter().map(|i| format!("w{i}")).collect()
        }
    }
}

pub fn simple_reflection(i: usize) -> Result<WeylElement, Error> {
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidIndex(i));
    }
    Ok(WeylElement { perm: transposition(i as u8), word: vec![i as u8] })
}

/// `s_i(v) = v − <v, α_i∨> α_i`.
fn reflect(v: &Weight, i: usize) -> Weight {
    let n = v.pair_coroot(i).expect("generator index");
    let a = Weight::simple_root(i).expect("generator index");
    v - &(&n * &a)
}

fn transposition(i: u8) -> [u8; 4] {
    let mut p = IDENTITY;
    p.swap(i as usize - 1, i as usize);
    p
}

/// `(u ∘ v)(j) = u(v(j))`.
fn compose(u: &[u8; 4], v: &[u8; 4]) -> [u8; 4] {
    let mut out = [0u8; 4];
    for j in 0..4 {
        out[j] = u[v[j] as usize];
    }
    out
}

/// `ℓ(s_i w) < ℓ(w)`, i.e. `w⁻¹(α_i) < 0`, i.e. `w⁻¹(i) > w⁻¹(i+1)`.
fn has_left_descent(perm: &[u8; 4], i: u8) -> bool {
    let pos = |x: u8| perm.iter().position(|&p| p == x).unwrap();
    pos(i - 1) > pos(i)
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), &self.word).cmp(&(other.len(), &other.word))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A set of simple-root indices spanning a standard Levi subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSubset(BTreeSet<usize>);

impl ParabolicSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| !(1..=3).contains(&i)) {
            return Err(Error::InvalidIndex(bad));
        }
        Ok(ParabolicSubset(set))
    }

    /// `{1, 3}`: the Levi `SL1' × SL1'` of the maximal parabolic.
    pub fn levi_13() -> Self {
        ParabolicSubset::new([1, 3]).unwrap()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// The subgroup `W_M` generated by the reflections in the subset.
    pub fn levi_weyl_group(&self) -> Vec<WeylElement> {
        let gens: Vec<_> = self.indices().map(|i| simple_reflection(i).unwrap()).collect();
        closure(&gens)
    }
}

fn closure(gens: &[WeylElement]) -> Vec<WeylElement> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([WeylElement::identity()]);
    seen.insert(IDENTITY);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = w.compose(g);
            if seen.insert(next.perm) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out.sort();
    out
}

/// All 24 elements, sorted by `(length, word)`.
pub fn enumerate_group() -> Vec<WeylElement> {
    let gens: Vec<_> = (1..=3).map(|i| simple_reflection(i).unwrap()).collect();
    closure(&gens)
}

/// Is `v` a positive root? The caller guarantees `v` is a root.
fn is_positive(v: &Weight) -> bool {
    !v.is_zero() && v.coords().iter().all(|c| !c.is_negative())
}

/// `W^P = { w : w⁻¹(α_i) > 0 for all i ∈ p }`, sorted by `(length, word)`.
pub fn kostant_representatives(p: &ParabolicSubset) -> Vec<WeylElement> {
    enumerate_group()
        .into_iter()
        .filter(|w| {
            let inv = w.inverse();
            p.indices().all(|i| is_positive(&inv.act(&Weight::simple_root(i).unwrap())))
        })
        .collect()
}

/// `W^P` for the Levi `{1, 3}`: `id, w2, w2w1, w2w3, w2w1w3, w2w1w3w2`.
pub fn kostant_13() -> Vec<WeylElement> {
    kostant_representatives(&ParabolicSubset::levi_13())
}

pub fn is_kostant_13(w: &WeylElement) -> bool {
    let inv = w.inverse();
    [1, 3]
        .iter()
        .all(|&i| is_positive(&inv.act(&Weight::simple_root(i).unwrap())))
}

/// The longest element, of length 6.
pub fn longest_element() -> WeylElement {
    WeylElement::from_perm([3, 2, 1, 0]).unwrap()
}

/// Strictly positive pairings with every simple coroot in `p`.
pub fn is_regular_dominant_for(v: &Weight, p: &ParabolicSubset) -> bool {
    p.indices().all(|i| {
        let n = v.pair_coroot(i).unwrap();
        n.is_positive() && !n.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{positive_roots, rat};

    fn word(w: &[u8]) -> WeylElement {
        WeylElement::from_word(w).unwrap()
    }

    #[test]
    fn simple_reflections() {
        let s2 = simple_reflection(2).unwrap();
        assert_eq!(s2.word(), &[2]);
        assert_eq!(s2.len(), 1);
        let om2 = Weight::fundamental(2).unwrap();
        assert_eq!(simple_reflection(1).unwrap().act(&om2), om2);
        let s1 = simple_reflection(1).unwrap();
        assert!(s1.compose(&s1).is_identity());
        assert!(matches!(simple_reflection(0), Err(Error::InvalidIndex(0))));
        assert!(matches!(simple_reflection(4), Err(Error::InvalidIndex(4))));
    }

    #[test]
    fn act_examples() {
        let s2 = simple_reflection(2).unwrap();
        assert_eq!(s2.act(&rho()), Weight::new(crate::weights::ratio(3, 2), rat(1), crate::weights::ratio(3, 2)));
        let lam = Weight::from_ints(1, 2, 1);
        assert_eq!(WeylElement::identity().act(&lam), lam);
        let a2 = Weight::simple_root(2).unwrap();
        assert_eq!(s2.act(&a2), -&a2);
    }

    #[test]
    fn dot_act_examples() {
        let lam = Weight::from_ints(2, 3, 2);
        assert_eq!(WeylElement::identity().dot_act(&lam), lam);
        let a2 = Weight::simple_root(2).unwrap();
        assert_eq!(simple_reflection(2).unwrap().dot_act(&Weight::zero()), -&a2);
    }

    #[test]
    fn dot_action_is_a_group_action() {
        let group = enumerate_group();
        let lams = [Weight::zero(), Weight::from_fundamental_ints([1, 2, 0]), Weight::from_fundamental_ints([3, 0, 1])];
        for lam in &lams {
            for u in &group {
                for v in &group {
                    assert_eq!(u.dot_act(&v.dot_act(lam)), u.compose(v).dot_act(lam));
                }
            }
        }
    }

    #[test]
    fn group_enumeration() {
        let group = enumerate_group();
        assert_eq!(group.len(), 24);
        let mut hist = [0usize; 7];
        for w in &group {
            hist[w.len()] += 1;
        }
        // coefficients of (1+x)(1+x+x²)(1+x+x²+x³)
        assert_eq!(hist, [1, 3, 5, 6, 5, 3, 1]);
        let longest: Vec<_> = group.iter().filter(|w| w.len() == 6).collect();
        assert_eq!(longest.len(), 1);
        assert_eq!(*longest[0], longest_element());
    }

    #[test]
    fn words_are_consistent_with_permutations() {
        for w in enumerate_group() {
            assert_eq!(w.len(), w.inversions());
            assert_eq!(word(w.word()), w);
            assert_eq!(word(w.word()).word(), w.word());
        }
        assert!(WeylElement::identity().word().is_empty());
    }

    #[test]
    fn word_and_permutation_actions_agree() {
        let v = Weight::new(crate::weights::ratio(1, 3), rat(-2), crate::weights::ratio(7, 5));
        for w in enumerate_group() {
            assert_eq!(w.act(&v), w.act_via_perm(&v), "{w}");
        }
    }

    #[test]
    fn kostant_set_for_levi_13() {
        let reps = kostant_13();
        let names: Vec<_> = reps.iter().map(|w| w.name()).collect();
        assert_eq!(names, ["id", "w2", "w2w1", "w2w3", "w2w1w3", "w2w1w3w2"]);
        let lens: Vec<_> = reps.iter().map(|w| w.len()).collect();
        assert_eq!(lens, [0, 1, 2, 2, 3, 4]);
        assert!(reps.iter().all(is_kostant_13));
        assert!(!is_kostant_13(&simple_reflection(1).unwrap()));
    }

    #[test]
    fn kostant_set_extremes() {
        let none = ParabolicSubset::new([]).unwrap();
        assert_eq!(kostant_representatives(&none).len(), 24);
        let all = ParabolicSubset::new([1, 2, 3]).unwrap();
        assert_eq!(kostant_representatives(&all), vec![WeylElement::identity()]);
        assert!(ParabolicSubset::new([0, 1]).is_err());
    }

    #[test]
    fn coset_count_for_every_subset() {
        for mask in 0..8usize {
            let p = ParabolicSubset::new((1..=3).filter(|i| mask & (1 << (i - 1)) != 0)).unwrap();
            assert_eq!(kostant_representatives(&p).len() * p.levi_weyl_group().len(), 24);
        }
        assert_eq!(ParabolicSubset::levi_13().levi_weyl_group().len(), 4);
    }

    #[test]
    fn kostant_images_are_levi_regular() {
        let p = ParabolicSubset::levi_13();
        for n1 in 0..4 {
            for n2 in 0..4 {
                for n3 in 0..4 {
                    let lam = Weight::from_fundamental_ints([n1, n2, n3]);
                    for w in kostant_13() {
                        assert!(is_regular_dominant_for(&w.act(&(&lam + &rho())), &p));
                    }
                }
            }
        }
    }

    #[test]
    fn action_preserves_pairings() {
        let v = Weight::from_ints(3, -1, 2);
        for w in enumerate_group() {
            for a in positive_roots() {
                let wa = w.act(&a);
                // simply laced: α∨ ↔ α, so <x, β∨> = (x, β)
                assert_eq!(w.act(&v).dot(&wa), v.dot(&a));
            }
        }
    }
}
