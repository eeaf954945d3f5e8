//! The complexified exterior algebra `∧•T*` of the flat model, and the
//! Clifford action of `T ⊕ T*` on it.
//!
//! A basis form is a bitmask over `dx₁, dy₁, dx₂, dy₂` (bit 0 is `dx₁`),
//! always written in increasing index order. Interior products are
//! antiderivations with `ι_{∂_k} dx_k = 1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use thiserror::Error;

use crate::gcs::{TwoForm, COORDS};
use crate::linalg::{kernel, CMatrix, Subspace};
use crate::scalar::{rat, GaussRational, Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinorError {
    #[error("expected a form of pure degree {expected}")]
    WrongDegree { expected: u32 },
    #[error("ζ = 0 is a pole of the B-field and symplectic form")]
    PoleAtZero,
    #[error("the zero form has no annihilator")]
    ZeroSpinor,
}

pub const DIM: usize = 16;

fn wedge_sign(a: usize, b: usize) -> bool {
    // number of pairs (i in a, j in b) with j < i
    let mut count = 0;
    for i in 0..4 {
        if a >> i & 1 == 1 {
            count += (b & ((1 << i) - 1)).count_ones();
        }
    }
    count % 2 == 1
}

/// An element of `∧•T* ⊗ C` with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct Spinor<R: Ring> {
    coeffs: [R; DIM],
}

impl<R: Ring> Spinor<R> {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| R::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(mask: usize) -> Self {
        let mut s = Self::zero();
        s.coeffs[mask] = R::one();
        s
    }

    pub fn from_coeffs(coeffs: [R; DIM]) -> Self {
        Self { coeffs }
    }

    pub fn from_two_form(w: &TwoForm) -> Self {
        let mut s = Self::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                s.coeffs[(1 << i) | (1 << j)] = R::from(w.component(i, j).clone());
            }
        }
        s
    }

    /// The volume form `dx₁∧dy₁∧dx₂∧dy₂`.
    pub fn volume() -> Self {
        Self::basis(DIM - 1)
    }

    pub fn coeff(&self, mask: usize) -> &R {
        &self.coeffs[mask]
    }

    pub fn coeffs(&self) -> &[R; DIM] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Degree-`k` component.
    pub fn part(&self, k: u32) -> Self {
        Self {
            coeffs: std::array::from_fn(|m| if m.count_ones() == k { self.coeffs[m].clone() } else { R::zero() }),
        }
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        (0..DIM).all(|m| m.count_ones() == k || self.coeffs[m].is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { coeffs: std::array::from_fn(|m| self.coeffs[m].clone() * c.clone()) }
    }

    pub fn conj(&self) -> Self {
        Self { coeffs: std::array::from_fn(|m| self.coeffs[m].conj()) }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..DIM {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..DIM {
                if a & b != 0 || other.coeffs[b].is_zero() {
                    continue;
                }
                let term = self.coeffs[a].clone() * other.coeffs[b].clone();
                let slot = &mut out.coeffs[a | b];
                *slot = if wedge_sign(a, b) { slot.clone() - term } else { slot.clone() + term };
            }
        }
        out
    }

    /// `ι_{∂_k}`.
    pub fn interior(&self, k: usize) -> Self {
        assert!(k < 4);
        let mut out = Self::zero();
        for m in 0..DIM {
            if m >> k & 1 == 1 && !self.coeffs[m].is_zero() {
                let c = self.coeffs[m].clone();
                let odd = (m & ((1 << k) - 1)).count_ones() % 2 == 1;
                out.coeffs[m ^ (1 << k)] = if odd { -c } else { c };
            }
        }
        out
    }

    /// `(X + ξ)·ρ = ι_X ρ + ξ ∧ ρ` for `v = (X, ξ)` in real coordinates.
    pub fn clifford(&self, v: &[R]) -> Self {
        assert_eq!(v.len(), 8);
        let mut out = Self::zero();
        for k in 0..4 {
            if !v[k].is_zero() {
                out = &out + &self.interior(k).scale(&v[k]);
            }
            if !v[4 + k].is_zero() {
                out = &out + &Self::basis(1 << k).wedge(self).scale(&v[4 + k]);
            }
        }
        out
    }
}

impl Spinor<GaussRational> {
    /// Divides by the first nonzero coefficient in mask order.
    pub fn normalized(&self) -> Option<Self> {
        let lead = self.coeffs.iter().find(|c| !c.is_zero())?;
        let inv = lead.inv()?;
        Some(self.scale(&inv))
    }

    /// Equality of the spanned lines.
    pub fn same_line(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn eval(s: &Spinor<Scalar>, t: &BigRational, zeta: &GaussRational) -> Result<Self, crate::scalar::ScalarError> {
        let mut coeffs: [GaussRational; DIM] = std::array::from_fn(|_| GaussRational::zero());
        for (m, c) in s.coeffs.iter().enumerate() {
            coeffs[m] = c.eval(t, zeta)?;
        }
        Ok(Self { coeffs })
    }
}

impl<R: Ring> Add for &Spinor<R> {
    type Output = Spinor<R>;
    fn add(self, rhs: &Spinor<R>) -> Spinor<R> {
        Spinor { coeffs: std::array::from_fn(|m| self.coeffs[m].clone() + rhs.coeffs[m].clone()) }
    }
}

impl<R: Ring> Sub for &Spinor<R> {
    type Output = Spinor<R>;
    fn sub(self, rhs: &Spinor<R>) -> Spinor<R> {
        Spinor { coeffs: std::array::from_fn(|m| self.coeffs[m].clone() - rhs.coeffs[m].clone()) }
    }
}

impl<R: Ring> Neg for &Spinor<R> {
    type Output = Spinor<R>;
    fn neg(self) -> Spinor<R> {
        Spinor { coeffs: std::array::from_fn(|m| -self.coeffs[m].clone()) }
    }
}

/// Name of a basis form, e.g. `dx1^dy2`.
pub fn mask_name(mask: usize) -> String {
    if mask == 0 {
        return "1".to_owned();
    }
    (0..4)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| format!("d{}", COORDS[k]))
        .collect::<Vec<_>>()
        .join("^")
}

impl<R: Ring + fmt::Display> fmt::Display for Spinor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<usize> = (0..DIM).collect();
        order.sort_by_key(|m| (m.count_ones(), *m));
        let terms: Vec<String> = order
            .into_iter()
            .filter(|&m| !self.coeffs[m].is_zero())
            .map(|m| if m == 0 { format!("({})", self.coeffs[m]) } else { format!("({})*{}", self.coeffs[m], mask_name(m)) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Spinor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor[{self}]")
    }
}

/// `exp(B) = 1 + B + ½ B∧B` for a two-form `B`.
pub fn exp_two_form<R: Ring>(b: &Spinor<R>) -> Result<Spinor<R>, SpinorError> {
    if !b.is_homogeneous(2) {
        return Err(SpinorError::WrongDegree { expected: 2 });
    }
    let half = R::from_rational(rat(1, 2));
    Ok(&(&Spinor::one() + b) + &b.wedge(b).scale(&half))
}

/// Real B-field and symplectic form with `B + iω = tσ/(2ζ) − ζtσ̄/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFieldData {
    pub b: TwoForm,
    pub omega: TwoForm,
}

impl BFieldData {
    /// `B + iω`.
    pub fn complexified(&self) -> TwoForm {
        &self.b + &self.omega.scale(&GaussRational::i())
    }
}

pub fn bfield_symplectic_data(zeta: &GaussRational, t: &BigRational) -> Result<BFieldData, SpinorError> {
    let inv = (zeta * &GaussRational::from(2)).inv().ok_or(SpinorError::PoleAtZero)?;
    let sigma = TwoForm::sigma().scale_rational(t);
    let half_zeta = zeta * &GaussRational::from_fracs((1, 2), (0, 1));
    let c = &sigma.scale(&inv) - &sigma.conj().scale(&half_zeta);
    Ok(BFieldData { b: c.re(), omega: c.im() })
}

/// The same pair from the angles of `ζ` on the sphere:
/// `ω = csc θ (cos φ ω_J + sin φ ω_K)`, `B = cot θ (sin φ ω_J − cos φ ω_K)`,
/// where with `n = |ζ|²`: `csc θ cos φ = −(1+n) Im ζ/(2n)`,
/// `csc θ sin φ = (1+n) Re ζ/(2n)`, `cot θ sin φ = (1−n) Re ζ/(2n)`,
/// `cot θ cos φ = −(1−n) Im ζ/(2n)`. Forms are those of `tσ`.
pub fn bfield_from_angles(zeta: &GaussRational, t: &BigRational) -> Result<BFieldData, SpinorError> {
    if zeta.is_zero() {
        return Err(SpinorError::PoleAtZero);
    }
    let n = zeta.norm_sqr();
    let one = BigRational::from_integer(1.into());
    let two_n = &n + &n;
    let csc_cos = -((&one + &n) * &zeta.im) / &two_n;
    let csc_sin = ((&one + &n) * &zeta.re) / &two_n;
    let cot_sin = ((&one - &n) * &zeta.re) / &two_n;
    let cot_cos = -((&one - &n) * &zeta.im) / &two_n;
    let (wj, wk) = crate::gcs::scaled_forms(t);
    Ok(BFieldData {
        omega: &wj.scale_rational(&csc_cos) + &wk.scale_rational(&csc_sin),
        b: &wj.scale_rational(&cot_sin) - &wk.scale_rational(&cot_cos),
    })
}

/// `tσ + 2ζ(1 − ¼ t²σ∧σ̄) − ζ² tσ̄`. `t` must be real.
pub fn family_spinor<R: Ring>(zeta: &R, t: &R) -> Spinor<R> {
    let sigma = Spinor::<R>::from_two_form(&TwoForm::sigma()).scale(t);
    let sigmabar = sigma.conj();
    let quarter = R::from_rational(rat(1, 4));
    let middle = &Spinor::one() - &sigma.wedge(&sigmabar).scale(&quarter);
    let two_zeta = zeta.clone() * R::from(GaussRational::from(2));
    &(&sigma + &middle.scale(&two_zeta)) - &sigmabar.scale(&(zeta.clone() * zeta.clone()))
}

/// The family in the chart `w = 1/ζ`, multiplied by `w²`:
/// `w² tσ + 2w(1 − ¼ t²σ∧σ̄) − tσ̄`.
pub fn family_spinor_at_infinity<R: Ring>(w: &R, t: &R) -> Spinor<R> {
    let sigma = Spinor::<R>::from_two_form(&TwoForm::sigma()).scale(t);
    let sigmabar = sigma.conj();
    let quarter = R::from_rational(rat(1, 4));
    let middle = &Spinor::one() - &sigma.wedge(&sigmabar).scale(&quarter);
    let two_w = w.clone() * R::from(GaussRational::from(2));
    &(&sigma.scale(&(w.clone() * w.clone())) + &middle.scale(&two_w)) - &sigmabar
}

/// `1 + (σ/2ζ − ζσ̄/2) − ¼ σ∧σ̄` with `σ = tσ_Y`.
pub fn exp_identity_rhs(zeta: &GaussRational, t: &BigRational) -> Result<Spinor<GaussRational>, SpinorError> {
    let inv = (zeta * &GaussRational::from(2)).inv().ok_or(SpinorError::PoleAtZero)?;
    let sigma = Spinor::<GaussRational>::from_two_form(&TwoForm::sigma().scale_rational(t));
    let sigmabar = sigma.conj();
    let half_zeta = zeta * &GaussRational::from_fracs((1, 2), (0, 1));
    let quarter = GaussRational::from_fracs((1, 4), (0, 1));
    let linear = &sigma.scale(&inv) - &sigmabar.scale(&half_zeta);
    Ok(&(&Spinor::one() + &linear) - &sigma.wedge(&sigmabar).scale(&quarter))
}

/// `e^B ∧ e^{iω}` for the B-field data at `(ζ, t)`.
pub fn exp_identity_lhs(zeta: &GaussRational, t: &BigRational) -> Result<Spinor<GaussRational>, SpinorError> {
    let data = bfield_symplectic_data(zeta, t)?;
    let eb = exp_two_form(&Spinor::from_two_form(&data.b))?;
    let eiw = exp_two_form(&Spinor::from_two_form(&data.omega.scale(&GaussRational::i())))?;
    Ok(eb.wedge(&eiw))
}

/// The `16 × 8` matrix of `v ↦ v·ρ`.
pub fn clifford_matrix(rho: &Spinor<GaussRational>) -> CMatrix {
    let mut m = CMatrix::zeros(DIM, 8);
    for k in 0..8 {
        let mut v = vec![GaussRational::zero(); 8];
        v[k] = 1.into();
        let image = rho.clifford(&v);
        for (mask, c) in image.coeffs().iter().enumerate() {
            m[(mask, k)] = c.clone();
        }
    }
    m
}

pub fn clifford_annihilator(rho: &Spinor<GaussRational>) -> Result<Subspace, SpinorError> {
    if rho.is_zero() {
        return Err(SpinorError::ZeroSpinor);
    }
    Ok(kernel(&clifford_matrix(rho)))
}

pub fn is_pure(rho: &Spinor<GaussRational>) -> Result<bool, SpinorError> {
    Ok(clifford_annihilator(rho)?.dim() == 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcs::{j_complex, j_symplectic, j_zeta, j_zeta_infinity, natural_pairing};

    type S = Spinor<GaussRational>;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussRational {
        GaussRational::from_fracs(re, im)
    }

    fn sigma() -> S {
        S::from_two_form(&TwoForm::sigma())
    }

    #[test]
    fn wedge_of_one_forms() {
        let dx1 = S::basis(1);
        let dy1 = S::basis(2);
        assert_eq!(dx1.wedge(&dy1), S::basis(3));
        assert_eq!(dy1.wedge(&dx1), -&S::basis(3));
        assert!(dx1.wedge(&dx1).is_zero());
    }

    #[test]
    fn sigma_products() {
        let s = sigma();
        assert!(s.wedge(&s).is_zero());
        assert_eq!(s.wedge(&s.conj()), S::volume().scale(&4.into()));
    }

    #[test]
    fn interior_is_dual_to_wedge() {
        // ι_k (dx_k ∧ ρ) + dx_k ∧ ι_k ρ = ρ
        let rho = &(&sigma() + &S::basis(0b1011)) + &S::one();
        for k in 0..4 {
            let e = S::basis(1 << k);
            let lhs = &e.wedge(&rho).interior(k) + &e.wedge(&rho.interior(k));
            assert_eq!(lhs, rho);
        }
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_two_form(&S::zero()).unwrap(), S::one());
        let b = S::from_two_form(&TwoForm::from_terms(&[(0, 1, g((1, 3), (0, 1))), (2, 3, 5.into()), (0, 3, GaussRational::i())]));
        assert_eq!(exp_two_form(&b).unwrap().wedge(&exp_two_form(&-&b).unwrap()), S::one());
        assert_eq!(exp_two_form(&S::one()), Err(SpinorError::WrongDegree { expected: 2 }));
    }

    #[test]
    fn exp_identity_samples() {
        for (z, t) in [(g((1, 2), (0, 1)), rat(1, 1)), (g((1, 3), (1, 2)), rat(3, 2)), (GaussRational::i(), rat(5, 1))] {
            let lhs = exp_identity_lhs(&z, &t).unwrap();
            assert_eq!(lhs, exp_identity_rhs(&z, &t).unwrap());
            let two_zeta = &z * &GaussRational::from(2);
            assert_eq!(lhs.scale(&two_zeta), family_spinor(&z, &GaussRational::real(t.clone())));
        }
    }

    #[test]
    fn bfield_data_special_cases() {
        let unit = bfield_symplectic_data(&GaussRational::i(), &rat(3, 1)).unwrap();
        assert!(unit.b.is_zero());
        assert_eq!(bfield_symplectic_data(&GaussRational::zero(), &rat(2, 1)), Err(SpinorError::PoleAtZero));
        // ζ = 1/2, t = 1: B = ((1 − |ζ|²)/(2|ζ|²)) Re(ζ̄σ) = (3/2) Re(σ/2)
        let d = bfield_symplectic_data(&g((1, 2), (0, 1)), &rat(1, 1)).unwrap();
        assert_eq!(d.b, TwoForm::sigma().scale(&g((3, 4), (0, 1))).re());
        assert!(d.b.is_real() && d.omega.is_real());
    }

    #[test]
    fn bfield_data_matches_angles() {
        for (z, t) in [(g((1, 2), (0, 1)), rat(2, 1)), (g((-1, 3), (5, 4)), rat(3, 2)), (g((3, 5), (4, 5)), rat(10, 1))] {
            assert_eq!(bfield_from_angles(&z, &t).unwrap(), bfield_symplectic_data(&z, &t).unwrap());
        }
    }

    #[test]
    fn family_spinor_endpoints() {
        let t = GaussRational::from(2);
        let s = S::from_two_form(&TwoForm::sigma().scale(&t));
        assert_eq!(family_spinor(&GaussRational::zero(), &t), s);
        assert_eq!(family_spinor_at_infinity(&GaussRational::zero(), &t), -&s.conj());
    }

    #[test]
    fn annihilators_match_structures() {
        assert_eq!(clifford_annihilator(&sigma()).unwrap(), j_complex().eigenspace_i());
        let wj = TwoForm::omega_j();
        let e = exp_two_form(&S::from_two_form(&wj.scale(&GaussRational::i()))).unwrap();
        assert_eq!(clifford_annihilator(&e).unwrap(), j_symplectic(&wj).unwrap().eigenspace_i());
        for (z, t) in [(g((1, 2), (0, 1)), rat(2, 1)), (g((3, 5), (4, 5)), rat(3, 2)), (g((-1, 3), (2, 1)), rat(10, 1))] {
            let rho = family_spinor(&z, &GaussRational::real(t.clone()));
            assert_eq!(clifford_annihilator(&rho).unwrap(), j_zeta(&z, &t).eigenspace_i());
        }
        let inf = family_spinor_at_infinity(&GaussRational::zero(), &GaussRational::from(3));
        assert_eq!(clifford_annihilator(&inf).unwrap(), j_zeta_infinity().eigenspace_i());
    }

    #[test]
    fn purity() {
        assert!(is_pure(&sigma()).unwrap());
        assert!(!is_pure(&(&S::one() + &S::volume())).unwrap());
        assert_eq!(is_pure(&S::zero()), Err(SpinorError::ZeroSpinor));
        let rho = family_spinor(&g((1, 5), (-2, 3)), &GaussRational::from(5));
        assert!(is_pure(&rho).unwrap());
        assert!(clifford_annihilator(&rho).unwrap().is_isotropic(&natural_pairing()));
    }

    #[test]
    fn annihilator_ignores_scale() {
        let rho = family_spinor(&g((2, 3), (1, 7)), &GaussRational::from(2));
        let scaled = rho.scale(&g((-3, 2), (5, 1)));
        assert_eq!(clifford_annihilator(&rho).unwrap(), clifford_annihilator(&scaled).unwrap());
        assert!(rho.same_line(&scaled));
    }

    #[test]
    fn symbolic_family_is_quadratic_in_zeta() {
        let rho = family_spinor(&Scalar::zeta(), &Scalar::t());
        let s = Spinor::<Scalar>::from_two_form(&TwoForm::sigma());
        for m in 0..DIM {
            let c = rho.coeff(m);
            let expected_const = s.coeff(m).clone() * Scalar::t();
            assert_eq!(c.zeta_coefficient(0), expected_const);
            assert_eq!(c.zeta_coefficient(2), -(s.coeff(m).conj() * Scalar::t()));
        }
        // linear coefficient: 2 − ½ t² σ∧σ̄ = 2 − 2t² vol
        assert_eq!(rho.coeff(0).zeta_coefficient(1), Scalar::int(2));
        assert_eq!(rho.coeff(DIM - 1).zeta_coefficient(1), Scalar::int(-2) * Scalar::t().pow(2).unwrap());
    }

    #[test]
    fn symbolic_exp_identity() {
        // 2ζ e^{σ/2ζ − ζσ̄/2} = family spinor, identically in (t, ζ, ζ̄)
        let z = Scalar::zeta();
        let t = Scalar::t();
        let sigma = Spinor::<Scalar>::from_two_form(&TwoForm::sigma()).scale(&t);
        let inv = Scalar::frac(1, 2) * z.pow(-1).unwrap();
        let c = &sigma.scale(&inv) - &sigma.conj().scale(&(Scalar::frac(1, 2) * z.clone()));
        let lhs = exp_two_form(&c).unwrap().scale(&(Scalar::int(2) * z.clone()));
        assert_eq!(lhs, family_spinor(&z, &t));
    }
}
