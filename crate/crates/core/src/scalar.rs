//! Split quaternion scalars.
//!
//! Coefficients are stored in the basis `(1, i, j, k)`. The quadratic form
//! `I_q = q0² + q1² - q2² - q3²` equals the scalar `q q̄`; its sign gives the
//! causal character and `‖q‖ = √|I_q|`.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SplitQuaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CausalCharacter {
    Timelike,
    Spacelike,
    Null,
}

impl CausalCharacter {
    pub fn as_str(self) -> &'static str {
        match self {
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Null => "null",
        }
    }
}

/// Solution set of `a x = x̄ b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConsimSolutionFamily {
    /// `x = λ g` for real `λ ≠ 0`, with `g = ā + b`.
    Slice { generator: SplitQuaternion },
    /// All `x` with `c · (x0, x1, x2, x3) = 0`, where `c = (a0, -a1, a2, a3)`.
    Hyperplane { constraint: [f64; 4] },
    /// Norms differ; no solution with `‖x‖ ≠ 0`.
    Empty,
}

impl ConsimSolutionFamily {
    /// A representative solution with nonzero norm when one is available.
    ///
    /// For a hyperplane this is the candidate among the coordinate axes and
    /// pairwise combinations `c_s e_t - c_t e_s` with the largest normalized
    /// `|I_x|`.
    pub fn witness(&self) -> Option<SplitQuaternion> {
        match *self {
            ConsimSolutionFamily::Slice { generator } => Some(generator),
            ConsimSolutionFamily::Hyperplane { constraint } => hyperplane_witness(constraint),
            ConsimSolutionFamily::Empty => None,
        }
    }
}

fn hyperplane_witness(c: [f64; 4]) -> Option<SplitQuaternion> {
    let mut best: Option<(f64, SplitQuaternion)> = None;
    let mut consider = |x: [f64; 4]| {
        let q = SplitQuaternion::from(x);
        let size: f64 = x.iter().map(|v| v * v).sum();
        if size == 0.0 {
            return;
        }
        let score = q.quadratic_form().abs() / size;
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, q));
        }
    };
    for t in 0..4 {
        if c[t] == 0.0 {
            let mut x = [0.0; 4];
            x[t] = 1.0;
            consider(x);
        }
    }
    for s in 0..4 {
        for t in (s + 1)..4 {
            let mut x = [0.0; 4];
            x[t] = c[s];
            x[s] = -c[t];
            consider(x);
        }
    }
    best.filter(|(score, _)| *score > 0.0).map(|(_, q)| q)
}

impl SplitQuaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q0, q1, q2, q3 }
    }

    pub const fn from_real(r: f64) -> Self {
        Self::new(r, 0.0, 0.0, 0.0)
    }

    /// `re + im i`.
    pub const fn from_complex(re: f64, im: f64) -> Self {
        Self::new(re, im, 0.0, 0.0)
    }

    pub const fn coeffs(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    pub fn is_finite(self) -> bool {
        self.coeffs().iter().all(|c| c.is_finite())
    }

    pub fn is_real(self) -> bool {
        self.q1 == 0.0 && self.q2 == 0.0 && self.q3 == 0.0
    }

    /// True when the j and k parts vanish.
    pub fn is_complex(self) -> bool {
        self.q2 == 0.0 && self.q3 == 0.0
    }

    pub fn max_abs(self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean length of the coefficient vector (not the split norm).
    pub fn euclidean(self) -> f64 {
        libm::sqrt(self.coeffs().iter().map(|c| c * c).sum())
    }

    pub fn scale(self, c: f64) -> Self {
        Self::new(c * self.q0, c * self.q1, c * self.q2, c * self.q3)
    }

    pub fn conj(self) -> Self {
        Self::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    /// `j q j`, which negates the i and k parts.
    pub fn j_conj(self) -> Self {
        Self::new(self.q0, -self.q1, self.q2, -self.q3)
    }

    pub fn quadratic_form(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 - self.q2 * self.q2 - self.q3 * self.q3
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.quadratic_form().abs())
    }

    pub fn classify(self) -> CausalCharacter {
        let iq = self.quadratic_form();
        if iq > 0.0 {
            CausalCharacter::Timelike
        } else if iq < 0.0 {
            CausalCharacter::Spacelike
        } else {
            CausalCharacter::Null
        }
    }

    /// Classification with a dead zone `|I_q| <= null_tol` treated as null.
    pub fn classify_with_tol(self, null_tol: f64) -> CausalCharacter {
        if self.quadratic_form().abs() <= null_tol {
            CausalCharacter::Null
        } else {
            self.classify()
        }
    }

    /// Zero-divisor threshold `1e-12 (1 + max|q_s|)²`.
    pub fn invertibility_threshold(self) -> f64 {
        let s = 1.0 + self.max_abs();
        1e-12 * s * s
    }

    pub fn is_invertible(self) -> bool {
        self.quadratic_form().abs() > self.invertibility_threshold()
    }

    pub fn inverse(self) -> Result<Self> {
        let iq = self.quadratic_form();
        if iq.abs() <= self.invertibility_threshold() {
            return Err(Error::NullDivisor { quadratic_form: iq });
        }
        Ok(self.conj().scale(1.0 / iq))
    }

    /// Matrix of `x ↦ q x` acting on coefficient columns.
    pub fn left_rep(self) -> [[f64; 4]; 4] {
        let [q0, q1, q2, q3] = self.coeffs();
        [
            [q0, -q1, q2, q3],
            [q1, q0, q3, -q2],
            [q2, q3, q0, -q1],
            [q3, -q2, q1, q0],
        ]
    }

    /// Matrix of `x ↦ x q` acting on coefficient columns.
    ///
    /// Note the order: `right_rep(q p) = right_rep(p) right_rep(q)`.
    pub fn right_rep(self) -> [[f64; 4]; 4] {
        let [q0, q1, q2, q3] = self.coeffs();
        [
            [q0, -q1, q2, q3],
            [q1, q0, -q3, q2],
            [q2, -q3, q0, q1],
            [q3, q2, -q1, q0],
        ]
    }
}

impl From<[f64; 4]> for SplitQuaternion {
    fn from(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl From<f64> for SplitQuaternion {
    fn from(r: f64) -> Self {
        Self::from_real(r)
    }
}

impl Add for SplitQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.q0 + o.q0,
            self.q1 + o.q1,
            self.q2 + o.q2,
            self.q3 + o.q3,
        )
    }
}

impl AddAssign for SplitQuaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for SplitQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.q0 - o.q0,
            self.q1 - o.q1,
            self.q2 - o.q2,
            self.q3 - o.q3,
        )
    }
}

impl SubAssign for SplitQuaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for SplitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

impl Mul for SplitQuaternion {
    type Output = Self;
    fn mul(self, p: Self) -> Self {
        let [a0, a1, a2, a3] = self.coeffs();
        let [b0, b1, b2, b3] = p.coeffs();
        Self::new(
            a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )
    }
}

impl Mul<f64> for SplitQuaternion {
    type Output = Self;
    fn mul(self, c: f64) -> Self {
        self.scale(c)
    }
}

impl Div<f64> for SplitQuaternion {
    type Output = Self;
    fn div(self, c: f64) -> Self {
        self.scale(1.0 / c)
    }
}

impl fmt::Display for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q0)?;
        for (c, unit) in [(self.q1, "i"), (self.q2, "j"), (self.q3, "k")] {
            if c.is_sign_negative() && c != 0.0 {
                write!(f, " - {} {unit}", -c)?;
            } else {
                write!(f, " + {} {unit}", c.abs())?;
            }
        }
        Ok(())
    }
}

/// Relative tolerance used to decide `‖a‖ = ‖b‖` and `a + b̄ = 0`.
const CONSIM_REL_TOL: f64 = 1e-9;

/// Solutions of `a x = x̄ b` for `a`, `b` of the same (non-null) character.
pub fn solve_consimilarity(a: SplitQuaternion, b: SplitQuaternion) -> Result<ConsimSolutionFamily> {
    let (ca, cb) = (a.classify(), b.classify());
    if ca == CausalCharacter::Null || ca != cb {
        return Err(Error::MixedCharacter);
    }
    let (na, nb) = (a.norm(), b.norm());
    if (na - nb).abs() > CONSIM_REL_TOL * (1.0 + na.max(nb)) {
        return Ok(ConsimSolutionFamily::Empty);
    }
    let sum = a + b.conj();
    let scale = 1.0 + a.max_abs().max(b.max_abs());
    if sum.max_abs() > CONSIM_REL_TOL * scale {
        Ok(ConsimSolutionFamily::Slice {
            generator: a.conj() + b,
        })
    } else {
        Ok(ConsimSolutionFamily::Hyperplane {
            constraint: [a.q0, -a.q1, a.q2, a.q3],
        })
    }
}

/// Returns `p = ‖a‖ + ā`, which satisfies `a = p̄ ‖a‖ p⁻¹`.
///
/// The identity only holds when `a` is timelike; the result is always
/// re-checked and [`Error::FormulaInapplicable`] is returned otherwise.
pub fn canonical_witness(a: SplitQuaternion) -> Result<SplitQuaternion> {
    if a.is_real() {
        return Err(Error::RealInput);
    }
    if !a.is_invertible() {
        return Err(Error::ZeroNorm);
    }
    let na = a.norm();
    let p = a.conj() + SplitQuaternion::from_real(na);
    let p_inv = p.inverse()?;
    let rebuilt = p.conj().scale(na) * p_inv;
    let residual = (rebuilt - a).euclidean();
    if residual > 1e-10 * (1.0 + a.max_abs()) {
        return Err(Error::FormulaInapplicable { residual });
    }
    Ok(p)
}

/// Both roots `±(λ0 + λ1 a)` of `x² = a`, with
/// `λ0 = ‖a‖^{3/2} / ‖‖a‖ + a‖` and `λ1 = ‖a‖^{1/2} / ‖‖a‖ + a‖`.
///
/// Roots are verified before being returned: when `x² ≠ a` within
/// `1e-9 (1 + ‖a‖)` the call fails with [`Error::FormulaInapplicable`].
/// This happens for every spacelike `a` and for timelike `a` with
/// `a0 < -‖a‖`, where no root exists.
pub fn sqrt(a: SplitQuaternion) -> Result<[SplitQuaternion; 2]> {
    if a.is_real() {
        return Err(Error::RealInput);
    }
    if !a.is_invertible() {
        return Err(Error::ZeroNorm);
    }
    let na = a.norm();
    let shifted = a + SplitQuaternion::from_real(na);
    if !shifted.is_invertible() {
        return Err(Error::DegenerateDenominator);
    }
    let denom = shifted.norm();
    let root_na = libm::sqrt(na);
    let lambda0 = na * root_na / denom;
    let lambda1 = root_na / denom;
    let x = SplitQuaternion::from_real(lambda0) + a.scale(lambda1);
    let residual = (x * x - a).euclidean();
    if !(residual <= 1e-9 * (1.0 + na)) {
        return Err(Error::FormulaInapplicable { residual });
    }
    Ok([x, -x])
}
