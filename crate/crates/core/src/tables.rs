//! Symbolic recovery of the `μ_w` and `dχ` tables.
//!
//! Both maps are affine in the simple-root coordinates `(c1, c2, c3)` of `λ`.
//! We evaluate the engine at `0, ω1, ω2, ω3`, solve for the affine form, and
//! check it against further evaluation points.

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};

use crate::kostant::{d_chi, mu_w};
use crate::weights::{parse_rational, rat, Rational, Weight, CARTAN};
use crate::weyl::{kostant_13, WeylElement};
use crate::Error;

/// `a0 + a1·c1 + a2·c2 + a3·c3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coeffs: [Rational; 3],
    pub constant: Rational,
}

impl AffineForm {
    pub fn new(coeffs: [i64; 3], constant: i64) -> Self {
        AffineForm { coeffs: coeffs.map(rat), constant: rat(constant) }
    }

    pub fn eval(&self, lambda: &Weight) -> Rational {
        self.coeffs.iter().zip(lambda.coords()).map(|(a, c)| a * c).sum::<Rational>() + &self.constant
    }

    pub fn neg(&self) -> AffineForm {
        AffineForm { coeffs: self.coeffs.clone().map(|a| -a), constant: -&self.constant }
    }

    /// Solve for the form from its values at `base` and `base + ω_i`.
    ///
    /// `f(base + ω_i) − f(base) = Σ_j (ω_i)_j a_j`, and the `ω_i` rows form
    /// the inverse Cartan matrix, so `a = C · Δ`.
    pub fn recover<F>(f: F, base: &Weight) -> Result<AffineForm, Error>
    where
        F: Fn(&Weight) -> Result<Rational, Error>,
    {
        let f0 = f(base)?;
        let mut delta: [Rational; 3] = Default::default();
        for (i, d) in delta.iter_mut().enumerate() {
            *d = f(&(base + &Weight::fundamental(i + 1)?))? - &f0;
        }
        let mut coeffs: [Rational; 3] = Default::default();
        for (j, a) in coeffs.iter_mut().enumerate() {
            *a = (0..3).map(|i| rat(CARTAN[j][i]) * &delta[i]).sum();
        }
        let partial = AffineForm { coeffs, constant: Rational::zero() };
        let constant = f0 - partial.eval(base);
        Ok(AffineForm { constant, ..partial })
    }

    /// Recover from `0, ω1, ω2, ω3` and confirm at the remaining corners of
    /// the unit cube in fundamental coordinates.
    pub fn recover_checked<F>(f: F) -> Result<AffineForm, Error>
    where
        F: Fn(&Weight) -> Result<Rational, Error>,
    {
        let form = AffineForm::recover(&f, &Weight::zero())?;
        for mask in 0..8i64 {
            let n = [mask & 1, (mask >> 1) & 1, (mask >> 2) & 1];
            let lam = Weight::from_fundamental_ints(n);
            let want = f(&lam)?;
            if form.eval(&lam) != want {
                return Err(Error::NotAffine(format!("{form} disagrees at {lam}: expected {want}")));
            }
        }
        Ok(form)
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }

    /// Terms in canonical display order: positive variables (larger
    /// coefficient first, then by index), negative variables by index,
    /// constant last.
    fn canonical_order(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..3).filter(|&i| self.coeffs[i].is_positive()).collect();
        pos.sort_by(|&x, &y| self.coeffs[y].cmp(&self.coeffs[x]).then(x.cmp(&y)));
        pos.extend((0..3).filter(|&i| self.coeffs[i].is_negative()));
        pos
    }

    fn write_terms(&self, f: &mut impl fmt::Write, order: &[usize]) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        for &i in order {
            let a = &self.coeffs[i];
            let m = a.abs();
            let t = if m == rat(1) { format!("c{}", i + 1) } else { format!("{m}c{}", i + 1) };
            terms.push((a.is_negative(), t));
        }
        if !self.constant.is_zero() {
            terms.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        for (k, (neg, t)) in terms.iter().enumerate() {
            match (k, neg) {
                (_, true) => write!(f, "-{t}")?,
                (0, false) => write!(f, "{t}")?,
                (_, false) => write!(f, "+{t}")?,
            }
        }
        Ok(())
    }

    /// Renders in the variable order of `spelling` when it parses to this
    /// same form, and in canonical order otherwise.
    pub fn render_as(&self, spelling: &str) -> String {
        let same = spelling.parse::<AffineForm>().is_ok_and(|g| g == *self);
        let mut order: Vec<usize> = Vec::new();
        if same {
            let b = spelling.as_bytes();
            for (k, _) in spelling.match_indices('c') {
                let i = usize::from(b[k + 1] - b'1');
                if !order.contains(&i) {
                    order.push(i);
                }
            }
        } else {
            order = self.canonical_order();
        }
        let mut out = String::new();
        self.write_terms(&mut out, &order).expect("write to String");
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, &self.canonical_order())
    }
}

impl FromStr for AffineForm {
    type Err = Error;

    /// Parses sums like `2c1-c2+1` or `c3+c2-c1+1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not an affine form in c1,c2,c3: {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut coeffs: [Rational; 3] = Default::default();
        let mut constant = Rational::zero();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1.min(body.len())..].find(['+', '-']).map_or(body.len(), |p| p + 1);
            let term = &body[..end];
            rest = &body[end..];
            match term.find('c') {
                Some(p) => {
                    let idx: usize = term[p + 1..].parse().map_err(|_| bad())?;
                    if !(1..=3).contains(&idx) {
                        return Err(bad());
                    }
                    let k = if p == 0 { rat(1) } else { parse_rational(&term[..p])? };
                    coeffs[idx - 1] += rat(sign) * k;
                }
                None => constant += rat(sign) * parse_rational(term)?,
            }
        }
        Ok(AffineForm { coeffs, constant })
    }
}

/// One recovered row of the `μ_w` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuRow {
    pub w: WeylElement,
    pub m1: AffineForm,
    pub m3: AffineForm,
}

impl MuRow {
    /// `(m1)w1 + (m3)w3`, with terms spelled as in the reference row when the
    /// forms agree.
    pub fn render(&self) -> String {
        let (a, b) = REFERENCE_MU_ROWS
            .iter()
            .find(|(n, _, _)| *n == self.w.name())
            .map_or(("", ""), |&(_, a, b)| (a, b));
        format!("({})w1 + ({})w3", self.m1.render_as(a), self.m3.render_as(b))
    }
}

/// One recovered row of the `dχ` table, with the partner `w*` for which
/// `dχ(w*) = −dχ(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DChiRow {
    pub w: WeylElement,
    pub s: AffineForm,
    pub partner: WeylElement,
}

impl DChiRow {
    /// Rows listed before their partner are written as the negative of the
    /// partner's expression.
    pub fn render(&self) -> String {
        let spelling = REFERENCE_DCHI_ROWS
            .iter()
            .find(|(n, _)| *n == self.w.name())
            .map_or("", |&(_, r)| r.trim_start_matches('-').trim_start_matches('(').trim_end_matches(')'));
        if self.partner > self.w {
            format!("-({})a2", self.s.neg().render_as(spelling))
        } else {
            format!("({})a2", self.s.render_as(spelling))
        }
    }
}

pub fn mu_table() -> Result<Vec<MuRow>, Error> {
    kostant_13()
        .into_iter()
        .map(|w| {
            let m1 = AffineForm::recover_checked(|l| Ok(mu_w(&w, l)?.m1))?;
            let m3 = AffineForm::recover_checked(|l| Ok(mu_w(&w, l)?.m3))?;
            Ok(MuRow { w, m1, m3 })
        })
        .collect()
}

pub fn d_chi_table() -> Result<Vec<DChiRow>, Error> {
    let forms: Vec<(WeylElement, AffineForm)> = kostant_13()
        .into_iter()
        .map(|w| {
            let s = AffineForm::recover_checked(|l| Ok(d_chi(&w, l)?.0))?;
            Ok((w, s))
        })
        .collect::<Result<_, Error>>()?;
    forms
        .iter()
        .map(|(w, s)| {
            let partner = forms
                .iter()
                .find(|(_, t)| *t == s.neg())
                .map(|(p, _)| p.clone())
                .ok_or_else(|| Error::NotAffine(format!("no sign partner for the {w} row")))?;
            Ok(DChiRow { w: w.clone(), s: s.clone(), partner })
        })
        .collect()
}

/// Reference spelling of the `μ_w` table: `(w, ω1-coefficient,
/// ω3-coefficient)`.
pub const REFERENCE_MU_ROWS: [(&str, &str, &str); 6] = [
    ("id", "2c1-c2", "2c3-c2"),
    ("w2", "c1+c2-c3+1", "c3+c2-c1+1"),
    ("w2w1", "2c2-c1-c3", "c1+c3+2"),
    ("w2w3", "c1+c3+2", "2c2-c1-c3"),
    ("w2w1w3", "c3+c2-c1+1", "c1+c2-c3+1"),
    ("w2w1w3w2", "2c3-c2", "2c1-c2"),
];

/// Reference spelling of the `dχ` table, coefficient of `α2`.
pub const REFERENCE_DCHI_ROWS: [(&str, &str); 6] = [
    ("id", "-(c2+2)"),
    ("w2", "-(c1-c2+c3+1)"),
    ("w2w1", "-(c3-c1)"),
    ("w2w3", "(c3-c1)"),
    ("w2w1w3", "(c1-c2+c3+1)"),
    ("w2w1w3w2", "(c2+2)"),
];

/// Parses `(x)`, `-(x)` or a bare form.
pub fn parse_signed_form(s: &str) -> Result<AffineForm, Error> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix("-(").and_then(|r| r.strip_suffix(')')) {
        Ok(inner.parse::<AffineForm>()?.neg())
    } else if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        inner.parse()
    } else {
        s.parse()
    }
}

/// The reference `μ_w` forms, in `W^P` order.
pub fn reference_mu_forms() -> Vec<(WeylElement, AffineForm, AffineForm)> {
    let reps = kostant_13();
    REFERENCE_MU_ROWS
        .iter()
        .map(|(name, a, b)| {
            let w = reps.iter().find(|w| w.name() == *name).expect("row name").clone();
            (w, a.parse().expect("reference form"), b.parse().expect("reference form"))
        })
        .collect()
}

/// The reference `dχ` forms, in `W^P` order.
pub fn reference_d_chi_forms() -> Vec<(WeylElement, AffineForm)> {
    let reps = kostant_13();
    REFERENCE_DCHI_ROWS
        .iter()
        .map(|(name, s)| {
            let w = reps.iter().find(|w| w.name() == *name).expect("row name").clone();
            (w, parse_signed_form(s).expect("reference form"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::ratio;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["2c1-c2", "c1+c2-c3+1", "2c2-c1-c3", "c1+c3+2", "c2+2", "c3-c1", "-c2-2", "0"] {
            let f: AffineForm = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        let f: AffineForm = "c3+c2-c1+1".parse().unwrap();
        assert_eq!(f, AffineForm::new([-1, 1, 1], 1));
        assert!("c4+1".parse::<AffineForm>().is_err());
        assert!("".parse::<AffineForm>().is_err());
    }

    #[test]
    fn recovery_of_a_known_form() {
        let target = AffineForm { coeffs: [ratio(1, 2), rat(-3), rat(2)], constant: ratio(7, 4) };
        let got = AffineForm::recover_checked(|l| Ok(target.eval(l))).unwrap();
        assert_eq!(got, target);
    }

    #[test]
    fn recovery_rejects_non_affine_maps() {
        let err = AffineForm::recover_checked(|l| Ok(l.c1() * l.c3())).unwrap_err();
        assert!(matches!(err, Error::NotAffine(_)));
    }

    #[test]
    fn recovery_is_independent_of_base_point() {
        for row in mu_table().unwrap() {
            let w = row.w.clone();
            let f = |l: &Weight| Ok(mu_w(&w, l)?.m1);
            let from_rho = AffineForm::recover(f, &crate::weights::rho()).unwrap();
            let from_far = AffineForm::recover(f, &Weight::from_fundamental_ints([3, 5, 2])).unwrap();
            assert_eq!(from_rho, row.m1);
            assert_eq!(from_far, row.m1);
        }
    }

    #[test]
    fn recovered_tables_match_reference_forms() {
        for (row, (w, m1, m3)) in mu_table().unwrap().iter().zip(reference_mu_forms()) {
            assert_eq!(row.w, w);
            assert_eq!(row.m1, m1, "{w}");
            assert_eq!(row.m3, m3, "{w}");
        }
        for (row, (w, s)) in d_chi_table().unwrap().iter().zip(reference_d_chi_forms()) {
            assert_eq!(row.w, w);
            assert_eq!(row.s, s, "{w}");
        }
    }

    #[test]
    fn signed_forms() {
        assert_eq!(parse_signed_form("-(c2+2)").unwrap(), AffineForm::new([0, -1, 0], -2));
        assert_eq!(parse_signed_form("(c3-c1)").unwrap(), AffineForm::new([-1, 0, 1], 0));
    }

    #[test]
    fn table_row_renderings() {
        let mu = mu_table().unwrap();
        assert_eq!(mu[0].render(), "(2c1-c2)w1 + (2c3-c2)w3");
        let dchi = d_chi_table().unwrap();
        assert_eq!(dchi[5].render(), "(c2+2)a2");
        assert_eq!(dchi[0].render(), "-(c2+2)a2");
        assert_eq!(dchi[2].render(), "-(c3-c1)a2");
        assert_eq!(dchi[3].render(), "(c3-c1)a2");
    }

    #[test]
    fn rendered_rows_match_reference_spelling() {
        for (row, (name, a, b)) in mu_table().unwrap().iter().zip(REFERENCE_MU_ROWS) {
            assert_eq!(row.render(), format!("({a})w1 + ({b})w3"), "{name}");
        }
        for (row, (name, r)) in d_chi_table().unwrap().iter().zip(REFERENCE_DCHI_ROWS) {
            assert_eq!(row.render(), format!("{r}a2"), "{name}");
        }
    }

    #[test]
    fn render_as_falls_back_to_canonical_order() {
        let f = AffineForm::new([-1, 1, 1], 1);
        assert_eq!(f.render_as("c3+c2-c1+1"), "c3+c2-c1+1");
        assert_eq!(f.render_as("c3+c2-c1"), "c2+c3-c1+1");
        assert_eq!(f.render_as(""), "c2+c3-c1+1");
    }
}
