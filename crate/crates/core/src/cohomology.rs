//! Even cohomology of an elliptic K3 with a section, truncated to
//! `span{1, [C], [F], σ, σ̄, η}`.
//!
//! The intersection form on the `H²` part has `C² = −2`, `C·F = 1`,
//! `F² = 0`, `σ·σ̄ = 4` and all other pairings among `{C, F, σ, σ̄}` zero.
//! The Jacobian side uses the same representation; the Fourier-Mukai maps
//! in [`crate::harmonic`] relabel `σ_X ↦ σ_Y`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Scalar, ScalarError};

/// Coordinates in the basis `{1, C, F, σ, σ̄, η}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CohClass {
    pub one: Scalar,
    pub c: Scalar,
    pub f: Scalar,
    pub sigma: Scalar,
    pub sigmabar: Scalar,
    pub eta: Scalar,
}

/// One of the six basis classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CohBasis {
    One,
    C,
    F,
    Sigma,
    SigmaBar,
    Eta,
}

impl CohBasis {
    pub const ALL: [CohBasis; 6] = [
        CohBasis::One,
        CohBasis::C,
        CohBasis::F,
        CohBasis::Sigma,
        CohBasis::SigmaBar,
        CohBasis::Eta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CohBasis::One => "one",
            CohBasis::C => "C",
            CohBasis::F => "F",
            CohBasis::Sigma => "sigma",
            CohBasis::SigmaBar => "sigmabar",
            CohBasis::Eta => "eta",
        }
    }

    pub fn class(self) -> CohClass {
        CohClass::basis(self)
    }
}

/// Intersection form on `span{C, F, σ, σ̄}` in that order.
const H2_FORM: [[i64; 4]; 4] = [
    [-2, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 4],
    [0, 0, 4, 0],
];

impl CohClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: CohBasis) -> Self {
        let mut x = Self::zero();
        *x.component_mut(b) = Scalar::one();
        x
    }

    pub fn one() -> Self {
        Self::basis(CohBasis::One)
    }
    pub fn curve() -> Self {
        Self::basis(CohBasis::C)
    }
    pub fn fibre() -> Self {
        Self::basis(CohBasis::F)
    }
    pub fn sigma() -> Self {
        Self::basis(CohBasis::Sigma)
    }
    pub fn sigmabar() -> Self {
        Self::basis(CohBasis::SigmaBar)
    }
    pub fn eta() -> Self {
        Self::basis(CohBasis::Eta)
    }

    pub fn component(&self, b: CohBasis) -> &Scalar {
        match b {
            CohBasis::One => &self.one,
            CohBasis::C => &self.c,
            CohBasis::F => &self.f,
            CohBasis::Sigma => &self.sigma,
            CohBasis::SigmaBar => &self.sigmabar,
            CohBasis::Eta => &self.eta,
        }
    }

    pub fn component_mut(&mut self, b: CohBasis) -> &mut Scalar {
        match b {
            CohBasis::One => &mut self.one,
            CohBasis::C => &mut self.c,
            CohBasis::F => &mut self.f,
            CohBasis::Sigma => &mut self.sigma,
            CohBasis::SigmaBar => &mut self.sigmabar,
            CohBasis::Eta => &mut self.eta,
        }
    }

    pub fn is_zero(&self) -> bool {
        CohBasis::ALL.iter().all(|&b| self.component(b).is_zero())
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self {
            one: f(&self.one),
            c: f(&self.c),
            f: f(&self.f),
            sigma: f(&self.sigma),
            sigmabar: f(&self.sigmabar),
            eta: f(&self.eta),
        }
    }

    fn zip(&self, o: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        Self {
            one: f(&self.one, &o.one),
            c: f(&self.c, &o.c),
            f: f(&self.f, &o.f),
            sigma: f(&self.sigma, &o.sigma),
            sigmabar: f(&self.sigmabar, &o.sigmabar),
            eta: f(&self.eta, &o.eta),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x * s)
    }

    pub fn div_unit(&self, s: &Scalar) -> Result<Self, ScalarError> {
        Ok(Self {
            one: self.one.div_unit(s)?,
            c: self.c.div_unit(s)?,
            f: self.f.div_unit(s)?,
            sigma: self.sigma.div_unit(s)?,
            sigmabar: self.sigmabar.div_unit(s)?,
            eta: self.eta.div_unit(s)?,
        })
    }

    /// Conjugates coefficients and exchanges the `σ` and `σ̄` slots.
    pub fn conj(&self) -> Self {
        Self {
            one: self.one.conj(),
            c: self.c.conj(),
            f: self.f.conj(),
            sigma: self.sigmabar.conj(),
            sigmabar: self.sigma.conj(),
            eta: self.eta.conj(),
        }
    }

    /// `(x + conj x)/2`
    pub fn re(&self) -> Self {
        self.zip(&self.conj(), |a, b| (a + b).scale_rational(&crate::scalar::rat(1, 2)))
    }

    /// `(x − conj x)/(2i)`
    pub fn im(&self) -> Self {
        let k = crate::scalar::GaussRational::from_fracs((0, 1), (-1, 2));
        self.zip(&self.conj(), |a, b| (a - b).scale(&k))
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The `H²` components in the order `C, F, σ, σ̄`.
    fn h2(&self) -> [&Scalar; 4] {
        [&self.c, &self.f, &self.sigma, &self.sigmabar]
    }

    pub fn h2_part(&self) -> Self {
        Self {
            one: Scalar::zero(),
            eta: Scalar::zero(),
            ..self.clone()
        }
    }

    pub fn is_h2(&self) -> bool {
        self.one.is_zero() && self.eta.is_zero()
    }

    /// Intersection form on `H²` parts.
    pub fn intersect(&self, o: &Self) -> Scalar {
        let (a, b) = (self.h2(), o.h2());
        let mut acc = Scalar::zero();
        for (i, row) in H2_FORM.iter().enumerate() {
            for (j, &q) in row.iter().enumerate() {
                if q != 0 && !a[i].is_zero() && !b[j].is_zero() {
                    acc += &(a[i] * b[j]).scale(&q.into());
                }
            }
        }
        acc
    }

    /// Cup product. `H⁰` acts as scalars, `H²×H²` lands in `η` through the
    /// intersection form, everything of total degree above four vanishes.
    pub fn wedge(&self, o: &Self) -> Self {
        let a = &self.one;
        let b = &o.one;
        Self {
            one: a * b,
            c: &(a * &o.c) + &(b * &self.c),
            f: &(a * &o.f) + &(b * &self.f),
            sigma: &(a * &o.sigma) + &(b * &self.sigma),
            sigmabar: &(a * &o.sigmabar) + &(b * &self.sigmabar),
            eta: &(&(a * &o.eta) + &(b * &self.eta)) + &self.intersect(o),
        }
    }

    /// `⟨(a, v, b), (a′, v′, b′)⟩ = v·v′ − a·b′ − a′·b`
    pub fn mukai_pairing(&self, o: &Self) -> Scalar {
        &(&self.intersect(o) - &(&self.one * &o.eta)) - &(&o.one * &self.eta)
    }

    /// Zeroes the `F` coefficient: canonical representative modulo `[F]`.
    pub fn mod_fibre(&self) -> Self {
        Self { f: Scalar::zero(), ..self.clone() }
    }

    /// Evaluates `t` at a rational sample, leaving `ζ`, `ζ̄` symbolic.
    pub fn eval_t(&self, t0: &num_rational::BigRational) -> Result<Self, ScalarError> {
        Ok(Self {
            one: self.one.eval_t(t0)?,
            c: self.c.eval_t(t0)?,
            f: self.f.eval_t(t0)?,
            sigma: self.sigma.eval_t(t0)?,
            sigmabar: self.sigmabar.eval_t(t0)?,
            eta: self.eta.eval_t(t0)?,
        })
    }

    /// Coefficient class of `ζ^k` (terms free of `ζ̄`).
    pub fn zeta_coefficient(&self, k: i32) -> Self {
        self.map(|x| x.zeta_coefficient(k))
    }
}

impl Add for CohClass {
    type Output = CohClass;
    fn add(self, o: CohClass) -> CohClass {
        self.zip(&o, |a, b| a + b)
    }
}

impl<'a> Add<&'a CohClass> for &'a CohClass {
    type Output = CohClass;
    fn add(self, o: &CohClass) -> CohClass {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for CohClass {
    type Output = CohClass;
    fn sub(self, o: CohClass) -> CohClass {
        self.zip(&o, |a, b| a - b)
    }
}

impl<'a> Sub<&'a CohClass> for &'a CohClass {
    type Output = CohClass;
    fn sub(self, o: &CohClass) -> CohClass {
        self.zip(o, |a, b| a - b)
    }
}

impl Neg for CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.map(|a| -a)
    }
}

impl Mul<CohClass> for Scalar {
    type Output = CohClass;
    fn mul(self, x: CohClass) -> CohClass {
        x.scale(&self)
    }
}

impl<'a> Mul<&'a CohClass> for &'a Scalar {
    type Output = CohClass;
    fn mul(self, x: &CohClass) -> CohClass {
        x.scale(self)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(String, &str)> = CohBasis::ALL
            .iter()
            .filter(|b| !self.component(**b).is_zero())
            .map(|b| (self.component(*b).to_string(), b.name()))
            .collect();
        write_linear_combination(f, &parts)
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohClass({self})")
    }
}

/// Writes `(c1)*b1 + (c2)*b2 ...`, eliding unit coefficients. Shared with
/// `HtClass` so both print in the expression grammar.
pub(crate) fn write_linear_combination(
    f: &mut fmt::Formatter<'_>,
    parts: &[(String, &str)],
) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "0");
    }
    for (k, (coef, name)) in parts.iter().enumerate() {
        match (k, coef.as_str()) {
            (0, "1") => write!(f, "{name}")?,
            (0, "-1") => write!(f, "-{name}")?,
            (_, "1") => write!(f, " + {name}")?,
            (_, "-1") => write!(f, " - {name}")?,
            (0, _) => write!(f, "({coef})*{name}")?,
            _ => write!(f, " + ({coef})*{name}")?,
        }
    }
    Ok(())
}

/// `Td^{±1/2}` on a K3: `1 ± η`.
pub fn todd_half(sign: i32) -> CohClass {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    CohClass::one() + CohClass::eta().scale(&Scalar::int(sign as i64))
}

/// The Kähler class `(1/t)[C] + ((t²+1)/t)[F]`.
pub fn alpha_class(t: &Scalar) -> CohClass {
    let inv_t = Scalar::one().div_unit(t).expect("t must be a unit");
    let f_coeff = (t * t + Scalar::one()).div_unit(t).expect("t must be a unit");
    CohClass::curve().scale(&inv_t) + CohClass::fibre().scale(&f_coeff)
}

/// Period of the twistor family: `σ + 2ζ·α(t) − ζ²σ̄`.
pub fn twistor_period(t: &Scalar, zeta: &Scalar) -> CohClass {
    let two_zeta = Scalar::int(2) * zeta.clone();
    CohClass::sigma() + alpha_class(t).scale(&two_zeta) - CohClass::sigmabar().scale(&(zeta * zeta))
}

/// Period of the large-complex-structure family: `σ + 2ζ[F]`.
pub fn fibre_period(zeta: &Scalar) -> CohClass {
    CohClass::sigma() + CohClass::fibre().scale(&(Scalar::int(2) * zeta.clone()))
}

/// Class of the rescaled pure spinor of the second family:
/// `σ + 2ζ((1/t)·1 − t·η) − ζ²σ̄`, using `σσ̄ = 4η`.
pub fn gualtieri_spinor_class(t: &Scalar, zeta: &Scalar) -> CohClass {
    let inv_t = Scalar::one().div_unit(t).expect("t must be a unit");
    let linear = CohClass::one().scale(&inv_t) - CohClass::eta().scale(t);
    CohClass::sigma() + linear.scale(&(Scalar::int(2) * zeta.clone()))
        - CohClass::sigmabar().scale(&(zeta * zeta))
}

/// Complexified Kähler class of the second family:
/// `B + iω = tσ/(2ζ) − ζtσ̄/2`.
pub fn gualtieri_kahler_class(t: &Scalar, zeta: &Scalar) -> Result<CohClass, ScalarError> {
    let two_zeta = Scalar::int(2) * zeta.clone();
    let sigma_part = CohClass::sigma().scale(t).div_unit(&two_zeta)?;
    let sigmabar_part = CohClass::sigmabar().scale(&(zeta * t)).scale(&Scalar::frac(1, 2));
    Ok(sigma_part - sigmabar_part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Scalar {
        Scalar::t()
    }

    #[test]
    fn basic_wedges() {
        let eta = CohClass::eta();
        assert_eq!(CohClass::curve().wedge(&CohClass::curve()), eta.scale(&Scalar::int(-2)));
        assert_eq!(CohClass::sigma().wedge(&CohClass::sigmabar()), eta.scale(&Scalar::int(4)));
        let x = CohClass::curve() + CohClass::sigma().scale(&Scalar::t());
        assert_eq!(CohClass::one().wedge(&x), x);
    }

    #[test]
    fn alpha_arithmetic() {
        let alpha = alpha_class(&t());
        let tinv = Scalar::one().div_unit(&t()).unwrap();
        assert_eq!(alpha.wedge(&alpha), CohClass::eta().scale(&Scalar::int(2)));
        assert_eq!(alpha.mukai_pairing(&CohClass::curve()), &t() - &tinv);
        assert_eq!(alpha.mukai_pairing(&CohClass::fibre()), tinv);
        let at_one = alpha_class(&Scalar::one());
        assert!(at_one.mukai_pairing(&CohClass::curve()).is_zero());
        assert!(alpha.is_real());
    }

    #[test]
    fn mukai_pairing_examples() {
        assert_eq!(CohClass::curve().mukai_pairing(&CohClass::curve()), Scalar::int(-2));
        assert_eq!(CohClass::one().mukai_pairing(&CohClass::eta()), Scalar::int(-1));
        assert_eq!(CohClass::sigma().mukai_pairing(&CohClass::sigmabar()), Scalar::int(4));
    }

    #[test]
    fn hyperbolic_plane_gram() {
        let (c, f) = (CohClass::curve(), CohClass::fibre());
        assert_eq!(c.intersect(&c), Scalar::int(-2));
        assert_eq!(c.intersect(&f), Scalar::int(1));
        assert_eq!(f.intersect(&f), Scalar::zero());
    }

    #[test]
    fn todd_halves_are_inverse() {
        assert_eq!(todd_half(1), CohClass::one() + CohClass::eta());
        assert_eq!(todd_half(-1), CohClass::one() - CohClass::eta());
        assert_eq!(todd_half(1).wedge(&todd_half(-1)), CohClass::one());
    }

    #[test]
    fn periods_square_to_zero() {
        let p = twistor_period(&t(), &Scalar::zeta());
        assert!(p.wedge(&p).is_zero());
        let q = fibre_period(&Scalar::zeta());
        assert!(q.wedge(&q).is_zero());
        assert_eq!(twistor_period(&t(), &Scalar::zero()), CohClass::sigma());
    }

    #[test]
    fn gualtieri_class_coefficients() {
        let g = gualtieri_spinor_class(&t(), &Scalar::zeta());
        let lin = g.zeta_coefficient(1);
        assert_eq!(lin.one, Scalar::int(2).div_unit(&t()).unwrap());
        assert_eq!(lin.eta, Scalar::int(-2) * t());
        assert_eq!(gualtieri_spinor_class(&t(), &Scalar::zero()), CohClass::sigma());
    }

    #[test]
    fn conj_swaps_sigma_slots() {
        let x = CohClass::sigma().scale(&Scalar::zeta());
        assert_eq!(x.conj(), CohClass::sigmabar().scale(&Scalar::zetabar()));
        assert_eq!(x.re() + x.im().scale(&Scalar::i()), x);
    }

    #[test]
    fn display_uses_grammar() {
        let alpha = alpha_class(&t());
        assert_eq!(alpha.to_string(), "(t^-1)*C + (t^-1 + t)*F");
        assert_eq!(CohClass::zero().to_string(), "0");
    }
}
