//! The three-parameter deformation of Cohn matrices tied to cluster-algebra
//! F-polynomials.
//!
//! `Â` and `B̂` are products of `y`-deformed modular generators over
//! `ℤ[y₁^{±1}, y₂^{±1}, y₃^{±1}]`; substituting them into the `{A, B}`
//! Christoffel word of `t` conjecturally puts the F-polynomial `F_t` in the
//! top-right entry. The paper-listed `F_t` for six labels are embedded as
//! golden vectors; F-polynomials are never computed by seed mutation here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::farey::{christoffel_word, recode_ab, AbLetter, FareyRational};
use crate::laurent::LaurentPoly;

/// A Laurent polynomial in three commuting variables `y₁, y₂, y₃` with
/// arbitrary-precision integer coefficients, in canonical form (no stored
/// zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    coeffs: BTreeMap<[i64; 3], BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, [0, 0, 0])
    }

    pub fn monomial(c: impl Into<BigInt>, exps: [i64; 3]) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exps, c);
        }
        Self { coeffs }
    }

    /// `y_i` for `i ∈ {1, 2, 3}`.
    pub fn var(i: usize) -> Self {
        let mut exps = [0i64; 3];
        exps[i - 1] = 1;
        Self::monomial(1, exps)
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ([i64; 3], C)>) -> Self {
        let mut coeffs: BTreeMap<[i64; 3], BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c.into();
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = ([i64; 3], &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Sum of all coefficients: the value at `y₁ = y₂ = y₃ = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn all_coeffs_positive(&self) -> bool {
        use num_traits::Signed;
        !self.is_zero() && self.coeffs.values().all(|c| c.is_positive())
    }

    /// Substitution `y₁ = y₂ = y₃ = q`: each monomial `y^e` becomes
    /// `q^{e₁+e₂+e₃}`.
    pub fn specialize_q(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (e[0] + e[1] + e[2], c.clone())),
        )
    }

    /// `Some(±q^e)` when the polynomial is a single monomial (a unit of the
    /// Laurent ring), else `None`.
    pub fn as_monomial(&self) -> Option<([i64; 3], BigInt)> {
        if self.coeffs.len() == 1 {
            let (e, c) = self.coeffs.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        TriPoly { coeffs }
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        TriPoly { coeffs }
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut coeffs: BTreeMap<[i64; 3], BigInt> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    coeffs.remove(&e);
                }
            }
        }
        TriPoly { coeffs }
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        if self.is_zero() {
            return write!(f, "0");
        }
        // grlex-ish: higher total degree first, then reverse BTreeMap order
        let mut terms: Vec<(&[i64; 3], &BigInt)> = self.coeffs.iter().collect();
        terms.sort_by_key(|(e, _)| (-(e[0] + e[1] + e[2]), std::cmp::Reverse(**e)));
        for (i, (e, c)) in terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -*c)
            } else {
                ("+", (*c).clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let is_const = e.iter().all(|k| *k == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            for (var, k) in ["y1", "y2", "y3"].iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// JSON form: sorted list of `{"exps": [e1, e2, e3], "coeff": "decimal"}`.
impl Serialize for TriPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            exps: [i64; 3],
            coeff: String,
        }
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .map(|(e, c)| Term {
                exps: *e,
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

/// A 2×2 matrix over [`TriPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix2 {
    pub e11: TriPoly,
    pub e12: TriPoly,
    pub e21: TriPoly,
    pub e22: TriPoly,
}

impl TriMatrix2 {
    pub fn new(e11: TriPoly, e12: TriPoly, e21: TriPoly, e22: TriPoly) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::new(TriPoly::one(), TriPoly::zero(), TriPoly::zero(), TriPoly::one())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.e11 * &rhs.e11) + &(&self.e12 * &rhs.e21),
            &(&self.e11 * &rhs.e12) + &(&self.e12 * &rhs.e22),
            &(&self.e21 * &rhs.e11) + &(&self.e22 * &rhs.e21),
            &(&self.e21 * &rhs.e12) + &(&self.e22 * &rhs.e22),
        )
    }

    pub fn det(&self) -> TriPoly {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }
}

/// `Â = [[y₃, 1], [0, 1]]·[[y₂, 0], [y₂, 1]] = [[y₂ + y₂y₃, 1], [y₂, 1]]`.
/// At `y₁ = y₂ = y₃ = q` this is `q·A(2)_q`.
pub fn hat_a() -> TriMatrix2 {
    let f1 = TriMatrix2::new(TriPoly::var(3), TriPoly::one(), TriPoly::zero(), TriPoly::one());
    let f2 = TriMatrix2::new(TriPoly::var(2), TriPoly::zero(), TriPoly::var(2), TriPoly::one());
    f1.mul(&f2)
}

/// `B̂`, the four-factor product
/// `[[y₃, 1], [0, 1]]·[[y₁, 1], [0, 1]]·[[y₂, 0], [y₂, 1]]·[[y₃, 0], [y₂, 1]]`.
/// Multiplied out:
/// `[[y₁y₂y₃² + y₂y₃² + 2y₂y₃ + y₂, y₃ + 1], [y₂y₃ + y₂, 1]]`.
/// At `y₁ = y₂ = y₃ = q` this is `q²·B(2)_q`.
pub fn hat_b() -> TriMatrix2 {
    let f1 = TriMatrix2::new(TriPoly::var(3), TriPoly::one(), TriPoly::zero(), TriPoly::one());
    let f2 = TriMatrix2::new(TriPoly::var(1), TriPoly::one(), TriPoly::zero(), TriPoly::one());
    let f3 = TriMatrix2::new(TriPoly::var(2), TriPoly::zero(), TriPoly::var(2), TriPoly::one());
    let f4 = TriMatrix2::new(TriPoly::var(3), TriPoly::zero(), TriPoly::var(2), TriPoly::one());
    f1.mul(&f2).mul(&f3).mul(&f4)
}

/// Substitutes `A → Â`, `B → B̂` in the recoded Christoffel word of `t` and
/// multiplies left-to-right. Labels outside `(0, 1]` are rejected.
pub fn hat_cohn(t: FareyRational) -> Result<TriMatrix2, Error> {
    if t == FareyRational::zero() {
        return Err(Error::UnsupportedLabel(t.num(), t.den()));
    }
    let word = recode_ab(&christoffel_word(t)).expect("valid word");
    let a = hat_a();
    let b = hat_b();
    let mut m = TriMatrix2::identity();
    for letter in word {
        m = m.mul(match letter {
            AbLetter::A => &a,
            AbLetter::B => &b,
        });
    }
    Ok(m)
}

/// True iff the top-right entry of `Ĉ_t` equals `expected_f` exactly.
pub fn conjecture_check(t: FareyRational, expected_f: &TriPoly) -> bool {
    match hat_cohn(t) {
        Ok(m) => m.e12 == *expected_f,
        Err(_) => false,
    }
}

/// The six F-polynomials listed in the source material, as golden vectors:
/// `t ∈ {1/1, 1/2, 1/3, 1/4, 2/3, 3/4}`.
pub fn known_f_polynomials() -> Vec<(FareyRational, TriPoly)> {
    let fr = |p, r| FareyRational::new(p, r).unwrap();
    // exponent triples are [e1, e2, e3] for y1^e1 y2^e2 y3^e3
    let f11 = TriPoly::from_terms([([0, 0, 1], 1), ([0, 0, 0], 1)]);
    let f12 = TriPoly::from_terms([
        ([0, 1, 2], 1),
        ([0, 1, 1], 2),
        ([0, 1, 0], 1),
        ([0, 0, 0], 1),
    ]);
    let f13 = TriPoly::from_terms([
        ([0, 2, 3], 1),
        ([0, 2, 2], 3),
        ([0, 2, 1], 3),
        ([0, 2, 0], 1),
        ([0, 1, 1], 2),
        ([0, 1, 0], 2),
        ([0, 0, 0], 1),
    ]);
    let f14 = TriPoly::from_terms([
        ([0, 3, 4], 1),
        ([0, 3, 3], 4),
        ([0, 3, 2], 6),
        ([0, 3, 1], 4),
        ([0, 2, 2], 3),
        ([0, 3, 0], 1),
        ([0, 2, 1], 6),
        ([0, 2, 0], 3),
        ([0, 1, 1], 2),
        ([0, 1, 0], 3),
        ([0, 0, 0], 1),
    ]);
    let f23 = TriPoly::from_terms([
        ([1, 2, 4], 1),
        ([1, 2, 3], 2),
        ([0, 2, 4], 1),
        ([1, 2, 2], 1),
        ([0, 2, 3], 4),
        ([0, 2, 2], 6),
        ([0, 2, 1], 4),
        ([0, 1, 2], 2),
        ([0, 2, 0], 1),
        ([0, 1, 1], 4),
        ([0, 1, 0], 2),
        ([0, 0, 0], 1),
    ]);
    let f34 = TriPoly::from_terms([
        ([2, 3, 6], 1),
        ([2, 3, 5], 2),
        ([1, 3, 6], 2),
        ([2, 3, 4], 1),
        ([1, 3, 5], 8),
        ([0, 3, 6], 1),
        ([1, 3, 4], 12),
        ([0, 3, 5], 6),
        ([1, 3, 3], 8),
        ([1, 2, 4], 2),
        ([0, 3, 4], 15),
        ([1, 3, 2], 2),
        ([1, 2, 3], 4),
        ([0, 3, 3], 20),
        ([0, 2, 4], 3),
        ([1, 2, 2], 2),
        ([0, 3, 2], 15),
        ([0, 2, 3], 12),
        ([0, 3, 1], 6),
        ([0, 2, 2], 18),
        ([0, 3, 0], 1),
        ([0, 2, 1], 12),
        ([0, 1, 2], 3),
        ([0, 2, 0], 3),
        ([0, 1, 1], 6),
        ([0, 1, 0], 3),
        ([0, 0, 0], 1),
    ]);
    vec![
        (fr(1, 1), f11),
        (fr(1, 2), f12),
        (fr(1, 3), f13),
        (fr(1, 4), f14),
        (fr(2, 3), f23),
        (fr(3, 4), f34),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohn::{cohn_a, cohn_b, QMatrix2};
    use crate::markov::classical_markov_number;

    fn fr(p: u64, r: u64) -> FareyRational {
        FareyRational::new(p, r).unwrap()
    }

    #[test]
    fn hat_a_closed_form() {
        let expect = TriMatrix2::new(
            TriPoly::from_terms([([0, 1, 0], 1), ([0, 1, 1], 1)]),
            TriPoly::one(),
            TriPoly::var(2),
            TriPoly::one(),
        );
        assert_eq!(hat_a(), expect);
        // y = 1 gives the classical A(2) = [[2, 1], [1, 1]]
        let a = hat_a();
        assert_eq!(
            [&a.e11, &a.e12, &a.e21, &a.e22].map(|p| p.eval_at_ones()),
            [2, 1, 1, 1].map(BigInt::from)
        );
    }

    #[test]
    fn hat_b_four_factor_product() {
        // the product disagrees with a transcription of the closed form that
        // circulates with y₁y₂² + 2y₁y₂ in place of y₂y₃² + 2y₂y₃; the
        // product is the one consistent with Ĉ_{1/2} and the F-polynomials
        let expect = TriMatrix2::new(
            TriPoly::from_terms([([1, 1, 2], 1), ([0, 1, 2], 1), ([0, 1, 1], 2), ([0, 1, 0], 1)]),
            TriPoly::from_terms([([0, 0, 1], 1), ([0, 0, 0], 1)]),
            TriPoly::from_terms([([0, 1, 1], 1), ([0, 1, 0], 1)]),
            TriPoly::one(),
        );
        assert_eq!(hat_b(), expect);
        // y = 1 gives the classical B(2) = [[5, 2], [2, 1]]
        let b = hat_b();
        assert_eq!(
            [&b.e11, &b.e12, &b.e21, &b.e22].map(|p| p.eval_at_ones()),
            [5, 2, 2, 1].map(BigInt::from)
        );
    }

    fn q_specialization_matches(hat: &TriMatrix2, qm: &QMatrix2, power: i64) {
        let shift = LaurentPoly::q_power(power);
        assert_eq!(hat.e11.specialize_q(), &shift * &qm.e11);
        assert_eq!(hat.e12.specialize_q(), &shift * &qm.e12);
        assert_eq!(hat.e21.specialize_q(), &shift * &qm.e21);
        assert_eq!(hat.e22.specialize_q(), &shift * &qm.e22);
    }

    #[test]
    fn q_specializations() {
        q_specialization_matches(&hat_a(), &cohn_a(2), 1);
        q_specialization_matches(&hat_b(), &cohn_b(2), 2);
    }

    #[test]
    fn determinants_are_unit_monomials() {
        assert_eq!(hat_a().det().as_monomial(), Some(([0, 1, 1], BigInt::from(1))));
        assert_eq!(
            hat_b().det().as_monomial(),
            Some(([1, 1, 2], BigInt::from(1)))
        );
    }

    #[test]
    fn hat_cohn_small_labels() {
        // Ĉ_{1/2} = Â·B̂, with the displayed top-right entry
        let c12 = hat_cohn(fr(1, 2)).unwrap();
        let f12 = TriPoly::from_terms([
            ([0, 1, 2], 1),
            ([0, 1, 1], 2),
            ([0, 1, 0], 1),
            ([0, 0, 0], 1),
        ]);
        assert_eq!(c12.e12, f12);
        assert_eq!(hat_cohn(fr(1, 1)).unwrap().e12, known_f_polynomials()[0].1);
        assert!(hat_cohn(fr(0, 1)).is_err());
    }

    #[test]
    fn conjecture_on_golden_vectors() {
        for (t, f) in known_f_polynomials() {
            assert!(conjecture_check(t, &f), "t = {t}");
            assert_eq!(
                f.eval_at_ones(),
                classical_markov_number(t),
                "F_t(1,1,1) at t = {t}"
            );
            assert!(f.all_coeffs_positive(), "t = {t}");
        }
        // a perturbed vector must fail
        let (t, f) = &known_f_polynomials()[1];
        let bad = f + &TriPoly::one();
        assert!(!conjecture_check(*t, &bad));
    }

    #[test]
    fn q_specialization_of_words() {
        // Ĉ_t at y = q equals q^{#A + 2#B} times the A(2)_q/B(2)_q word product
        for (p, r) in [(1u64, 2u64), (2, 3), (3, 5)] {
            let t = fr(p, r);
            let word = recode_ab(&christoffel_word(t)).unwrap();
            let a_count = word.iter().filter(|l| **l == AbLetter::A).count() as i64;
            let b_count = word.iter().filter(|l| **l == AbLetter::B).count() as i64;
            let hat = hat_cohn(t).unwrap();
            let qm = crate::cohn::cohn_matrix(t, 2);
            q_specialization_matches(&hat, &qm, a_count + 2 * b_count);
        }
    }

    #[test]
    fn display_readable() {
        let f12 = &known_f_polynomials()[1].1;
        assert_eq!(f12.to_string(), "y2y3^2 + 2y2y3 + y2 + 1");
    }
}
