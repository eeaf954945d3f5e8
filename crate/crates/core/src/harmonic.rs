//! Harmonic-structure maps between the elliptic K3 `X` and its Jacobian `Y`.
//!
//! `φ_HΩ` is the cohomological Fourier-Mukai transform on `HΩ₀`, `¬σ` the
//! contraction `HT² → HΩ₀`, `φ_HT` the conjugate of `φ_HΩ` by `¬σ`, and
//! `φ_T` its twist by `Td^{±1/2}`. All maps go from the `X` side to the `Y`
//! side; both sides share the coordinate representation.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::cohomology::{write_linear_combination, CohClass};
use crate::scalar::{rat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarmonicError {
    #[error("class `{0}` is not in the image of the contraction with sigma")]
    NotInImage(String),
}

/// Element of `HT²` in the basis `{σ⁻¹, σ⁻¹[C], σ⁻¹[F], σ̄}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HtClass {
    /// `H⁰(Λ²T)`: coefficient of `σ⁻¹`
    pub p: Scalar,
    /// `H¹(T)`: coefficient of `σ⁻¹[C]`
    pub q_c: Scalar,
    /// `H¹(T)`: coefficient of `σ⁻¹[F]`
    pub q_f: Scalar,
    /// `H²(O)`: coefficient of `σ̄`
    pub r: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HtBasis {
    SigmaInv,
    SigmaInvC,
    SigmaInvF,
    SigmaBar,
}

impl HtBasis {
    pub const ALL: [HtBasis; 4] = [
        HtBasis::SigmaInv,
        HtBasis::SigmaInvC,
        HtBasis::SigmaInvF,
        HtBasis::SigmaBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HtBasis::SigmaInv => "sigma^-1",
            HtBasis::SigmaInvC => "sigma^-1*C",
            HtBasis::SigmaInvF => "sigma^-1*F",
            HtBasis::SigmaBar => "sigmabar",
        }
    }

    pub fn class(self) -> HtClass {
        let mut x = HtClass::zero();
        *x.component_mut(self) = Scalar::one();
        x
    }
}

impl HtClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(p: Scalar, q_c: Scalar, q_f: Scalar, r: Scalar) -> Self {
        Self { p, q_c, q_f, r }
    }

    pub fn component(&self, b: HtBasis) -> &Scalar {
        match b {
            HtBasis::SigmaInv => &self.p,
            HtBasis::SigmaInvC => &self.q_c,
            HtBasis::SigmaInvF => &self.q_f,
            HtBasis::SigmaBar => &self.r,
        }
    }

    pub fn component_mut(&mut self, b: HtBasis) -> &mut Scalar {
        match b {
            HtBasis::SigmaInv => &mut self.p,
            HtBasis::SigmaInvC => &mut self.q_c,
            HtBasis::SigmaInvF => &mut self.q_f,
            HtBasis::SigmaBar => &mut self.r,
        }
    }

    pub fn is_zero(&self) -> bool {
        HtBasis::ALL.iter().all(|&b| self.component(b).is_zero())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(&self.p * s, &self.q_c * s, &self.q_f * s, &self.r * s)
    }

    pub fn eval_t(&self, t0: &num_rational::BigRational) -> Result<Self, crate::scalar::ScalarError> {
        Ok(Self::new(
            self.p.eval_t(t0)?,
            self.q_c.eval_t(t0)?,
            self.q_f.eval_t(t0)?,
            self.r.eval_t(t0)?,
        ))
    }
}

impl<'a> Add<&'a HtClass> for &'a HtClass {
    type Output = HtClass;
    fn add(self, o: &HtClass) -> HtClass {
        HtClass::new(&self.p + &o.p, &self.q_c + &o.q_c, &self.q_f + &o.q_f, &self.r + &o.r)
    }
}

impl Add for HtClass {
    type Output = HtClass;
    fn add(self, o: HtClass) -> HtClass {
        &self + &o
    }
}

impl<'a> Sub<&'a HtClass> for &'a HtClass {
    type Output = HtClass;
    fn sub(self, o: &HtClass) -> HtClass {
        HtClass::new(&self.p - &o.p, &self.q_c - &o.q_c, &self.q_f - &o.q_f, &self.r - &o.r)
    }
}

impl Sub for HtClass {
    type Output = HtClass;
    fn sub(self, o: HtClass) -> HtClass {
        &self - &o
    }
}

impl Neg for HtClass {
    type Output = HtClass;
    fn neg(self) -> HtClass {
        HtClass::new(-self.p, -self.q_c, -self.q_f, -self.r)
    }
}

impl fmt::Display for HtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(String, &str)> = HtBasis::ALL
            .iter()
            .filter(|b| !self.component(**b).is_zero())
            .map(|b| (self.component(*b).to_string(), b.name()))
            .collect();
        write_linear_combination(f, &parts)
    }
}

impl fmt::Debug for HtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HtClass({self})")
    }
}

/// `¬σ : HT² → HΩ₀`: `σ⁻¹ ↦ 4·1`, `σ̄ ↦ σσ̄ = 4η`, `σ⁻¹[C] ↦ [C]`,
/// `σ⁻¹[F] ↦ [F]`.
pub fn contract_sigma(x: &HtClass) -> CohClass {
    let four = Scalar::int(4);
    CohClass {
        one: &x.p * &four,
        c: x.q_c.clone(),
        f: x.q_f.clone(),
        sigma: Scalar::zero(),
        sigmabar: Scalar::zero(),
        eta: &x.r * &four,
    }
}

/// Inverse of [`contract_sigma`] on `span{1, C, F, η}`.
pub fn contract_sigma_inv(x: &CohClass) -> Result<HtClass, HarmonicError> {
    if !x.sigma.is_zero() || !x.sigmabar.is_zero() {
        return Err(HarmonicError::NotInImage(x.to_string()));
    }
    let quarter = rat(1, 4);
    Ok(HtClass::new(
        x.one.scale_rational(&quarter),
        x.c.clone(),
        x.f.clone(),
        x.eta.scale_rational(&quarter),
    ))
}

/// Cohomological Fourier-Mukai transform `HΩ₀(X) → HΩ₀(Y)`:
///
/// ```text
/// 1 ↦ −C − F    η ↦ F    C ↦ 1 + η    F ↦ −η    σ ↦ σ    σ̄ ↦ σ̄
/// ```
pub fn phi_homega(x: &CohClass) -> CohClass {
    CohClass {
        one: x.c.clone(),
        c: -&x.one,
        f: &x.eta - &x.one,
        sigma: x.sigma.clone(),
        sigmabar: x.sigmabar.clone(),
        eta: &x.c - &x.f,
    }
}

/// `φ_HT = (¬σ_Y)⁻¹ ∘ φ_HΩ ∘ ¬σ_X`.
pub fn phi_ht(x: &HtClass) -> Result<HtClass, HarmonicError> {
    contract_sigma_inv(&phi_homega(&contract_sigma(x)))
}

/// Wedge with `1 ± η` on `HT²`. The only nonzero contraction is
/// `η¬σ⁻¹ = σ̄`; `η` kills `H¹(T)` and `H²(O)` for degree reasons.
pub fn todd_contract(x: &HtClass, sign: i32) -> HtClass {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let shift = HtClass::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), x.p.clone());
    if sign > 0 {
        x + &shift
    } else {
        x - &shift
    }
}

/// `φ_T = (1 + η) ∘ φ_HT ∘ (1 − η)`.
pub fn phi_t(x: &HtClass) -> Result<HtClass, HarmonicError> {
    Ok(todd_contract(&phi_ht(&todd_contract(x, -1))?, 1))
}

/// Closed-form table of `φ_HT` on basis vectors, used as the reference the
/// composition is checked against.
pub fn phi_ht_table(b: HtBasis) -> HtClass {
    let q = |n, d| Scalar::frac(n, d);
    let z = Scalar::zero;
    match b {
        // (1/4)σ⁻¹ ↦ −σ⁻¹C − σ⁻¹F
        HtBasis::SigmaInv => HtClass::new(z(), q(-4, 1), q(-4, 1), z()),
        // (1/4)σ̄ ↦ σ⁻¹F
        HtBasis::SigmaBar => HtClass::new(z(), z(), q(4, 1), z()),
        // σ⁻¹C ↦ (1/4)σ⁻¹ + (1/4)σ̄
        HtBasis::SigmaInvC => HtClass::new(q(1, 4), z(), z(), q(1, 4)),
        // σ⁻¹F ↦ −(1/4)σ̄
        HtBasis::SigmaInvF => HtClass::new(z(), z(), z(), q(-1, 4)),
    }
}

/// Closed-form table of `φ_T` on basis vectors.
pub fn phi_t_table(b: HtBasis) -> HtClass {
    let q = |n, d| Scalar::frac(n, d);
    let z = Scalar::zero;
    match b {
        // (1/4)σ⁻¹ ↦ −σ⁻¹C − 2σ⁻¹F
        HtBasis::SigmaInv => HtClass::new(z(), q(-4, 1), q(-8, 1), z()),
        HtBasis::SigmaBar => HtClass::new(z(), z(), q(4, 1), z()),
        // σ⁻¹C ↦ (1/4)σ⁻¹ + (2/4)σ̄
        HtBasis::SigmaInvC => HtClass::new(q(1, 4), z(), z(), q(2, 4)),
        HtBasis::SigmaInvF => HtClass::new(z(), z(), z(), q(-1, 4)),
    }
}

/// Closed-form table of `¬σ` on basis vectors.
pub fn contraction_table(b: HtBasis) -> CohClass {
    match b {
        HtBasis::SigmaInv => CohClass::one().scale(&Scalar::int(4)),
        HtBasis::SigmaBar => CohClass::sigma().wedge(&CohClass::sigmabar()),
        HtBasis::SigmaInvC => CohClass::curve(),
        HtBasis::SigmaInvF => CohClass::fibre(),
    }
}
