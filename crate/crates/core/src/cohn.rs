//! q-deformed Cohn matrices and the trace route to q-Markov numbers.
//!
//! The one-parameter family `A(n)_q` deforms the classical Cohn matrices
//! `A(n)` with determinant pinned to 1; `B(n)_q = A(n)_q·A(n+1)_q`. Word
//! products along Christoffel words have trace `q⁻¹[3]_q·m_q^t` for every
//! `n`, so the trace recovers the q-Markov number independently of the
//! choice of initial matrices. Upper-right entries do depend on `n`; the
//! `n = 1` choice defines the companion deformation `m̃_q^t`.

use crate::error::Error;
use crate::farey::{christoffel_word, recode_ab, AbLetter, FareyRational};
use crate::laurent::LaurentPoly;

/// A 2×2 matrix over Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix2 {
    pub e11: LaurentPoly,
    pub e12: LaurentPoly,
    pub e21: LaurentPoly,
    pub e22: LaurentPoly,
}

impl QMatrix2 {
    pub fn new(e11: LaurentPoly, e12: LaurentPoly, e21: LaurentPoly, e22: LaurentPoly) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.e11 * &rhs.e11) + &(&self.e12 * &rhs.e21),
            &(&self.e11 * &rhs.e12) + &(&self.e12 * &rhs.e22),
            &(&self.e21 * &rhs.e11) + &(&self.e22 * &rhs.e21),
            &(&self.e21 * &rhs.e12) + &(&self.e22 * &rhs.e22),
        )
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.e11 + &self.e22
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    /// The adjugate `[[e22, −e12], [−e21, e11]]`; equals the inverse exactly
    /// when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        Self::new(
            self.e22.clone(),
            -&self.e12,
            -&self.e21,
            self.e11.clone(),
        )
    }

    /// The inverse of a determinant-1 matrix (the adjugate). No fraction
    /// field is introduced: matrices with any other determinant are rejected.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.det() != LaurentPoly::one() {
            return Err(Error::MalformedInput("inverse requires determinant 1".into()));
        }
        Ok(self.adjugate())
    }

    pub fn is_zero(&self) -> bool {
        self.e11.is_zero() && self.e12.is_zero() && self.e21.is_zero() && self.e22.is_zero()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            &self.e11 - &rhs.e11,
            &self.e12 - &rhs.e12,
            &self.e21 - &rhs.e21,
            &self.e22 - &rhs.e22,
        )
    }
}

/// The q-deformed generators of the modular group:
/// `T_q = [[q, 1], [0, 1]]`, `S_q = [[0, −1], [q, 0]]`, `L_q = [[q, 0], [q, 1]]`.
///
/// These are projective representatives (defined up to a power of `q`):
/// `T_q·S_q·T_q = q·L_q` and `S_q² = −q·I`. The braid relation
/// `T·M·T = M·T·M` holds exactly for `M = adj(L_q) = [[1, 0], [−q, q]]`.
pub fn generators_q() -> (QMatrix2, QMatrix2, QMatrix2) {
    let t = QMatrix2::new(
        LaurentPoly::q_power(1),
        LaurentPoly::one(),
        LaurentPoly::zero(),
        LaurentPoly::one(),
    );
    let s = QMatrix2::new(
        LaurentPoly::zero(),
        LaurentPoly::constant(-1),
        LaurentPoly::q_power(1),
        LaurentPoly::zero(),
    );
    let l = QMatrix2::new(
        LaurentPoly::q_power(1),
        LaurentPoly::zero(),
        LaurentPoly::q_power(1),
        LaurentPoly::one(),
    );
    (t, s, l)
}

/// The initial q-Cohn matrix
/// `A(n)_q = [[q^{2−n}[n]_q, q^{1−n}], [[n]_q[3−n]_q − q^{n−1}, q⁻¹[3−n]_q]]`,
/// with determinant 1 and trace `q⁻¹[3]_q` for every integer `n`.
pub fn cohn_a(n: i64) -> QMatrix2 {
    let qi = LaurentPoly::q_int;
    QMatrix2::new(
        &qi(n) * &LaurentPoly::q_power(2 - n),
        LaurentPoly::q_power(1 - n),
        &(&qi(n) * &qi(3 - n)) - &LaurentPoly::q_power(n - 1),
        &qi(3 - n) * &LaurentPoly::q_power(-1),
    )
}

/// The companion q-Cohn matrix `B(n)_q = A(n)_q·A(n+1)_q`.
pub fn cohn_b(n: i64) -> QMatrix2 {
    cohn_a(n).mul(&cohn_a(n + 1))
}

/// Substitutes `A → A(n)_q`, `B → B(n)_q` in the recoded Christoffel word of
/// `t` and multiplies left-to-right. Equals the `X → A(n)_q, Y → A(n+1)_q`
/// substitution in the raw word; both `w_{0/1} = X ↦ A(n)_q` and
/// `w_{1/1} = XY ↦ B(n)_q` come out of the same rule.
pub fn cohn_matrix(t: FareyRational, n: i64) -> QMatrix2 {
    let word = christoffel_word(t);
    let recoded = recode_ab(&word).expect("christoffel words recode cleanly");
    let a = cohn_a(n);
    let b = cohn_b(n);
    let mut m = QMatrix2::identity();
    for letter in recoded {
        m = m.mul(match letter {
            AbLetter::A => &a,
            AbLetter::B => &b,
        });
    }
    m
}

/// The q-Markov number via `Tr(C_t(n)_q) = q⁻¹[3]_q·m_q^t`; independent of
/// `n`. Non-divisibility of the trace would falsify the trace theorem, so it
/// is surfaced rather than swallowed.
pub fn q_markov_via_trace(t: FareyRational, n: i64) -> Result<LaurentPoly, Error> {
    cohn_matrix(t, n)
        .trace()
        .exact_div(&LaurentPoly::mutation_coefficient())
}

/// Checks the two entry relations tying a Cohn matrix to its trace:
/// `Tr(C)/(q⁻¹[3]_q) = (q⁻¹ − q⁻²)c₁₁ + q⁻¹c₁₂ = q²c₁₂ + q(1 − q)c₂₂`.
pub fn entry_relations_check(c: &QMatrix2) -> bool {
    let Ok(normalized) = c.trace().exact_div(&LaurentPoly::mutation_coefficient()) else {
        return false;
    };
    let alpha = LaurentPoly::from_terms([(-1, 1), (-2, -1)]);
    let rhs1 = &(&alpha * &c.e11) + &(&LaurentPoly::q_power(-1) * &c.e12);
    let beta = LaurentPoly::from_terms([(1, 1), (2, -1)]);
    let rhs2 = &(&LaurentPoly::q_power(2) * &c.e12) + &(&beta * &c.e22);
    normalized == rhs1 && normalized == rhs2
}

/// The shift identity `A(n)_q·B(n)_q⁻¹ = A(n−2)_q` that glues the extended
/// Cohn tree together.
pub fn extended_tree_identity(n: i64) -> bool {
    let Ok(b_inv) = cohn_b(n).inverse() else {
        return false;
    };
    cohn_a(n).mul(&b_inv) == cohn_a(n - 2)
}

/// The alternative deformation `m̃_q^t`: the top-right entry of the Cohn
/// matrix built from the `n = 1` initial pair.
pub fn tilde_q_markov(t: FareyRational) -> LaurentPoly {
    cohn_matrix(t, 1).e12
}
