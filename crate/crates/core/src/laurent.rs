//! Exact Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients, plus the structural predicates (monic, palindromic,
//! unimodal, positive) satisfied by q-Markov numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A Laurent polynomial `Σ c_k q^k` in canonical form: no zero coefficient
/// is ever stored, so the zero polynomial has an empty support.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The monomial `c · q^k` (canonicalized: `c = 0` gives the zero polynomial).
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^k`.
    pub fn q_power(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in terms {
            let c = c.into();
            let entry = coeffs.entry(k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&k);
            }
        }
        Self { coeffs }
    }

    /// The q-integer `[n]_q = (qⁿ − 1)/(q − 1)`, a Laurent polynomial for
    /// every integer `n`: for `n > 0` it is `qⁿ⁻¹ + … + q + 1`, `[0]_q = 0`,
    /// and for `n < 0` it is `−(q⁻¹ + … + qⁿ)`.
    pub fn q_int(n: i64) -> Self {
        match n.cmp(&0) {
            std::cmp::Ordering::Greater => Self::from_terms((0..n).map(|k| (k, 1))),
            std::cmp::Ordering::Equal => Self::zero(),
            std::cmp::Ordering::Less => Self::from_terms((n..0).map(|k| (k, -1))),
        }
    }

    /// `q⁻¹[3]_q = q + 1 + q⁻¹`, the coefficient of the q-Markov equation.
    pub fn mutation_coefficient() -> Self {
        Self::from_terms([(1, 1), (0, 1), (-1, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn degree(&self) -> Result<i64, Error> {
        self.coeffs.keys().next_back().copied().ok_or(Error::EmptySupport)
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Result<i64, Error> {
        self.coeffs.keys().next().copied().ok_or(Error::EmptySupport)
    }

    /// Coefficient at `q^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Substitution `q → q⁻¹` (mirrors the support).
    pub fn invert_q(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True iff `q → q⁻¹` fixes the polynomial (coefficient at `k` equals
    /// coefficient at `−k` for all `k`). The zero polynomial is palindromic.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(k, c)| self.coeffs.get(&-k) == Some(c))
    }

    /// True iff the coefficient sequence over the full contiguous exponent
    /// range — interior zeros included — weakly increases then weakly
    /// decreases. Reading zeros matters: `q + q⁻¹` has sequence `1, 0, 1`
    /// and is correctly rejected.
    pub fn is_unimodal(&self) -> bool {
        let (Ok(lo), Ok(hi)) = (self.min_degree(), self.degree()) else {
            return true; // zero polynomial: empty sequence
        };
        let seq: Vec<BigInt> = (lo..=hi).map(|k| self.coeff(k)).collect();
        let mut i = 0;
        while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
            i += 1;
        }
        while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
            i += 1;
        }
        i + 1 == seq.len()
    }

    /// Leading coefficient 1, all coefficients non-negative, palindromic.
    pub fn is_monic_palindromic_positive(&self) -> bool {
        let Ok(d) = self.degree() else {
            return false;
        };
        self.coeff(d).is_one()
            && self.coeffs.values().all(|c| !c.is_negative())
            && self.is_palindromic()
    }

    /// Exact division: returns `u` with `u·d = self`, or [`Error::NonDivisible`]
    /// when no Laurent quotient with integer coefficients exists.
    pub fn exact_div(&self, d: &Self) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::NonDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_hi = d.degree().expect("divisor is nonzero");
        let d_lead = d.coeff(d_hi);
        // Any exact quotient has support within [p_lo − d_lo, p_hi − d_hi];
        // descending past the lower end proves non-divisibility (and bounds
        // the loop, which would otherwise unwind 1/(1−q) forever).
        let k_min = self.min_degree().expect("nonzero") - d.min_degree().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while !rem.is_zero() {
            let r_hi = rem.degree().expect("loop guard");
            let k = r_hi - d_hi;
            if k < k_min {
                return Err(Error::NonDivisible);
            }
            let (c, leftover) = num_integer::div_rem(rem.coeff(r_hi), d_lead.clone());
            if !leftover.is_zero() {
                return Err(Error::NonDivisible);
            }
            rem = &rem - &(&d.shift(k) * &Self::monomial(c.clone(), 0));
            quot.insert(k, c);
        }
        Ok(Self { coeffs: quot })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        // Convolution into a dense window of the product support.
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let lo = self.min_degree().unwrap() + rhs.min_degree().unwrap();
        let hi = self.degree().unwrap() + rhs.degree().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                dense[(ka + kb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            coeffs: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $t<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: `{"min_exp": k, "coeffs": ["c_k", "c_{k+1}", ...]}` with the
/// coefficients as decimal strings from the minimal exponent upward, interior
/// zeros included. Strings keep big integers bit-exact across JSON parsers.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            min_exp: i64,
            coeffs: Vec<String>,
        }
        let repr = match (self.min_degree(), self.degree()) {
            (Ok(lo), Ok(hi)) => Repr {
                min_exp: lo,
                coeffs: (lo..=hi).map(|k| self.coeff(k).to_string()).collect(),
            },
            _ => Repr {
                min_exp: 0,
                coeffs: Vec::new(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            min_exp: i64,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.coeffs.len());
        for (i, s) in repr.coeffs.iter().enumerate() {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))?;
            terms.push((repr.min_exp + i as i64, c));
        }
        Ok(Self::from_terms(terms))
    }
}
