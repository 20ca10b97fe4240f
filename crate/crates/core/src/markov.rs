//! Classical and q-deformed Markov triples: the Vieta mutation, descent to
//! any rational label, equation verification, and label recovery.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::farey::{stern_brocot_path, FareyRational, PathStep};
use crate::laurent::LaurentPoly;

/// A triple of Laurent polynomials intended to satisfy the q-Markov equation
/// `a² + b² + c² = q⁻¹[3]_q·abc + (q−1)(q⁻¹−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMarkovTriple {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
}

impl QMarkovTriple {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> Self {
        Self { a, b, c }
    }

    /// The all-ones triple, the root of the tree.
    pub fn initial() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one())
    }
}

/// `(q − 1)(q⁻¹ − 1) = 2 − q − q⁻¹`, the constant term of the q-Markov equation.
fn equation_constant() -> LaurentPoly {
    LaurentPoly::from_terms([(0, 2), (1, -1), (-1, -1)])
}

/// The Vieta exchange `(a, b, c) ↦ (a, b, q⁻¹[3]_q·ab − c)`. Applying it
/// twice returns the input.
pub fn mutate(t: &QMarkovTriple) -> QMarkovTriple {
    let c_new = &(&(&LaurentPoly::mutation_coefficient() * &t.a) * &t.b) - &t.c;
    QMarkovTriple::new(t.a.clone(), t.b.clone(), c_new)
}

/// `a² + b² + c² − q⁻¹[3]_q·abc − (q−1)(q⁻¹−1)`; zero exactly on q-Markov triples.
pub fn equation_residual(t: &QMarkovTriple) -> LaurentPoly {
    let squares = &(&(&t.a * &t.a) + &(&t.b * &t.b)) + &(&t.c * &t.c);
    let product = &(&(&LaurentPoly::mutation_coefficient() * &t.a) * &t.b) * &t.c;
    &(&squares - &product) - &equation_constant()
}

/// True iff the q-Markov equation holds exactly.
pub fn verify_equation(t: &QMarkovTriple) -> bool {
    equation_residual(t).is_zero()
}

/// Region values carried along a tree descent: the two fractions bounding
/// the current vertex and the region below it.
struct Descent {
    lo: LaurentPoly,
    hi: LaurentPoly,
    below: LaurentPoly,
}

impl Descent {
    /// Around the root vertex: left region 0/1 ↦ 1, right region 1/1 ↦ 2_q,
    /// below region 1/0 ↦ 1.
    fn root() -> Self {
        Self {
            lo: LaurentPoly::one(),
            hi: LaurentPoly::from_terms([(1, 1), (-1, 1)]),
            below: LaurentPoly::one(),
        }
    }

    /// The mediant region above the current vertex.
    fn upper(&self) -> LaurentPoly {
        let prod = &(&LaurentPoly::mutation_coefficient() * &self.lo) * &self.hi;
        &prod - &self.below
    }

    fn step(&mut self, step: PathStep) {
        let med = self.upper();
        match step {
            PathStep::Left => {
                self.below = std::mem::replace(&mut self.hi, med);
            }
            PathStep::Right => {
                self.below = std::mem::replace(&mut self.lo, med);
            }
        }
    }
}

/// The unique q-Markov number `m_q^t`, computed by descending the
/// Stern-Brocot path and applying the fishbone rule at each vertex.
pub fn q_markov_number(t: FareyRational) -> LaurentPoly {
    if t == FareyRational::zero() {
        return LaurentPoly::one();
    }
    if t == FareyRational::one() {
        return LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    }
    let mut state = Descent::root();
    for step in stern_brocot_path(t) {
        state.step(step);
    }
    state.upper()
}

/// The q-Markov triple around the tree vertex of `t` (for `0 < t < 1`):
/// the left region, right region, and mediant region `t` itself.
pub fn tree_triple(t: FareyRational) -> Result<QMarkovTriple, Error> {
    if t == FareyRational::zero() || t == FareyRational::one() {
        return Err(Error::MalformedInput(format!("{t} labels no tree vertex")));
    }
    let mut state = Descent::root();
    for step in stern_brocot_path(t) {
        state.step(step);
    }
    let med = state.upper();
    Ok(QMarkovTriple::new(state.lo, state.hi, med))
}

/// The classical Markov number `m^t`, by the integer mutation `c′ = 3ab − c`
/// along the same path.
pub fn classical_markov_number(t: FareyRational) -> BigInt {
    if t == FareyRational::zero() {
        return BigInt::one();
    }
    let (mut lo, mut hi, mut below) = (BigInt::one(), BigInt::from(2), BigInt::one());
    if t == FareyRational::one() {
        return hi;
    }
    for step in stern_brocot_path(t) {
        let med = 3 * &lo * &hi - &below;
        match step {
            PathStep::Left => below = std::mem::replace(&mut hi, med),
            PathStep::Right => below = std::mem::replace(&mut lo, med),
        }
    }
    3 * lo * hi - below
}

/// Recovers the rational label of a q-Markov number from its degree `d` and
/// the coefficient `α` at `q^{d−1}`: `t = (d − α)/(α + 1)`. Inputs that are
/// not monic palindromic — or whose recovered label falls outside `[0,1]` —
/// are rejected.
pub fn recover_label(m: &LaurentPoly) -> Result<FareyRational, Error> {
    if !m.is_monic_palindromic_positive() {
        return Err(Error::MalformedInput(
            "label recovery needs a monic palindromic positive polynomial".into(),
        ));
    }
    let d = m.degree().expect("monic implies nonzero");
    let alpha = m.coeff(d - 1);
    let (d, alpha) = (BigInt::from(d), alpha);
    let num = &d - &alpha;
    let den = &alpha + BigInt::one();
    let to_u64 = |v: &BigInt, what: &str| -> Result<u64, Error> {
        u64::try_from(v.clone())
            .map_err(|_| Error::MalformedInput(format!("recovered {what} out of range")))
    };
    FareyRational::new(to_u64(&num, "numerator")?, to_u64(&den, "denominator")?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, r: u64) -> FareyRational {
        FareyRational::new(p, r).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn m2() -> LaurentPoly {
        poly(&[(1, 1), (-1, 1)])
    }

    fn m5() -> LaurentPoly {
        poly(&[(2, 1), (1, 1), (0, 1), (-1, 1), (-2, 1)])
    }

    #[test]
    fn mutate_from_initial() {
        let t = mutate(&QMarkovTriple::initial());
        assert_eq!(t.c, m2());
        assert!(verify_equation(&t));
    }

    #[test]
    fn mutate_is_involution_and_finds_partner() {
        // across (1, 2_q) the partner of 5_q is 1
        let t = QMarkovTriple::new(LaurentPoly::one(), m2(), m5());
        assert!(verify_equation(&t));
        let m = mutate(&t);
        assert_eq!(m.c, LaurentPoly::one());
        assert_eq!(mutate(&m), t);
    }

    #[test]
    fn verify_equation_examples() {
        assert!(verify_equation(&QMarkovTriple::initial()));
        let good = QMarkovTriple::new(LaurentPoly::one(), m2(), m5());
        assert!(verify_equation(&good));
        let bad = QMarkovTriple::new(
            LaurentPoly::one(),
            m2(),
            &m5() + &LaurentPoly::one(),
        );
        assert!(!verify_equation(&bad));
    }

    #[test]
    fn q_markov_listed_values() {
        assert_eq!(q_markov_number(fr(0, 1)), LaurentPoly::one());
        assert_eq!(q_markov_number(fr(1, 1)), m2());
        assert_eq!(q_markov_number(fr(1, 2)), m5());
        let m29 = poly(&[
            (4, 1),
            (3, 2),
            (2, 4),
            (1, 5),
            (0, 5),
            (-1, 5),
            (-2, 4),
            (-3, 2),
            (-4, 1),
        ]);
        assert_eq!(q_markov_number(fr(2, 3)), m29);
        let m194 = poly(&[
            (6, 1),
            (5, 4),
            (4, 9),
            (3, 16),
            (2, 23),
            (1, 29),
            (0, 30),
            (-1, 29),
            (-2, 23),
            (-3, 16),
            (-4, 9),
            (-5, 4),
            (-6, 1),
        ]);
        assert_eq!(q_markov_number(fr(2, 5)), m194);
    }

    #[test]
    fn classical_specialization() {
        for (p, r, m) in [
            (0u64, 1u64, 1i64),
            (1, 1, 2),
            (1, 2, 5),
            (1, 3, 13),
            (2, 3, 29),
            (1, 4, 34),
            (3, 4, 169),
            (1, 5, 89),
            (2, 5, 194),
            (3, 5, 433),
            (4, 5, 985),
            (2, 7, 1325),
            (5, 8, 37666),
        ] {
            let t = fr(p, r);
            assert_eq!(classical_markov_number(t), BigInt::from(m), "t = {t}");
            assert_eq!(
                q_markov_number(t).eval_at_one(),
                BigInt::from(m),
                "t = {t}"
            );
        }
    }

    #[test]
    fn tree_triples_satisfy_equation_and_degree_law() {
        for (p, r) in [(1u64, 2u64), (1, 3), (2, 3), (3, 5), (2, 5), (3, 8)] {
            let triple = tree_triple(fr(p, r)).unwrap();
            assert!(verify_equation(&triple), "t = {p}/{r}");
            let mut degs = [
                triple.a.degree().unwrap(),
                triple.b.degree().unwrap(),
                triple.c.degree().unwrap(),
            ];
            degs.sort();
            assert_eq!(
                2 * degs[2],
                degs[0] + degs[1] + degs[2] + 1,
                "degree law at {p}/{r}"
            );
        }
    }

    #[test]
    fn recover_label_examples() {
        assert_eq!(recover_label(&m5()).unwrap(), fr(1, 2));
        assert_eq!(recover_label(&LaurentPoly::one()).unwrap(), fr(0, 1));
        assert_eq!(
            recover_label(&q_markov_number(fr(2, 3))).unwrap(),
            fr(2, 3)
        );
        // not palindromic
        assert!(recover_label(&poly(&[(1, 1), (0, 1)])).is_err());
        // not monic
        assert!(recover_label(&poly(&[(1, 2), (-1, 2)])).is_err());
        // monic palindromic but off the Markov image: t would be (1−3)/4 < 0
        assert!(recover_label(&poly(&[(1, 1), (0, 3), (-1, 1)])).is_err());
    }
}
