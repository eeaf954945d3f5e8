//! Gross's mirror map on K3 triples `(X, [B + iω], [σ])` relative to a
//! hyperbolic frame `([F], [C])`.

use std::fmt;

use thiserror::Error;

use crate::cohomology::{alpha_class, gualtieri_kahler_class, twistor_period, CohBasis, CohClass};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    #[error("[F].[Re sigma] vanishes")]
    DegeneratePeriod,
    #[error("normalizer {0} is not a monomial unit")]
    NonUnitNormalizer(String),
    #[error("the normalization system has rank {rank} < 3")]
    UnderdeterminedNormalization { rank: usize },
    #[error("the normalization constraints are inconsistent: residual {0}")]
    InconsistentNormalization(String),
    #[error("not a hyperbolic frame: {0}")]
    InvalidFrame(&'static str),
    #[error("triple has no {0}")]
    MissingClass(&'static str),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `(period [σ], complexified Kähler class [B + iω])`; either may be absent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MirrorTriple {
    pub period: Option<CohClass>,
    pub complexified_kahler: Option<CohClass>,
}

impl MirrorTriple {
    pub fn new(period: Option<CohClass>, complexified_kahler: Option<CohClass>) -> Self {
        Self { period, complexified_kahler }
    }

    /// `[σ]·[σ] = 0` when a period is present.
    pub fn period_is_isotropic(&self) -> bool {
        self.period.as_ref().is_none_or(|p| p.intersect(p).is_zero())
    }
}

/// Classes `[F]`, `[C]` spanning a hyperbolic plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicFrame {
    f: CohClass,
    c: CohClass,
}

impl HyperbolicFrame {
    pub fn new(f: CohClass, c: CohClass) -> Result<Self, MirrorError> {
        if !f.intersect(&f).is_zero() {
            return Err(MirrorError::InvalidFrame("f.f != 0"));
        }
        if c.intersect(&c) != Scalar::int(-2) {
            return Err(MirrorError::InvalidFrame("c.c != -2"));
        }
        if f.intersect(&c) != Scalar::one() {
            return Err(MirrorError::InvalidFrame("f.c != 1"));
        }
        Ok(Self { f, c })
    }

    /// Skips validation, for exercising the map on non-hyperbolic data.
    pub fn new_unchecked(f: CohClass, c: CohClass) -> Self {
        Self { f, c }
    }

    /// `([F], [C])` of the elliptic fibration.
    pub fn standard() -> Self {
        Self::new(CohClass::fibre(), CohClass::curve()).expect("fibre and section form a hyperbolic frame")
    }

    /// `([C], [F])`: the roles of fibre and section exchanged.
    pub fn swapped() -> Self {
        Self::new_unchecked(CohClass::curve(), CohClass::fibre())
    }

    pub fn f(&self) -> &CohClass {
        &self.f
    }

    pub fn c(&self) -> &CohClass {
        &self.c
    }

    /// Canonical representative of `x` modulo `f`: the first `H²`
    /// coordinate (in the order `F, C, σ, σ̄`) on which `f` has a unit
    /// coefficient is set to zero. For the standard frame this zeroes the
    /// `F` coefficient.
    pub fn reduce(&self, x: &CohClass) -> Result<CohClass, MirrorError> {
        for b in [CohBasis::F, CohBasis::C, CohBasis::Sigma, CohBasis::SigmaBar] {
            let fc = self.f.component(b);
            if fc.is_unit() {
                let lambda = x.component(b).div_unit(fc)?;
                let mut out = x.clone() - self.f.scale(&lambda);
                *out.component_mut(b) = Scalar::zero();
                return Ok(out);
            }
        }
        Err(MirrorError::InvalidFrame("f has no unit coordinate"))
    }

    /// `x ≡ y mod f`.
    pub fn congruent(&self, x: &CohClass, y: &CohClass) -> Result<bool, MirrorError> {
        Ok(self.reduce(&(x.clone() - y.clone()))?.is_zero())
    }
}

fn unit_inverse(s: &Scalar) -> Result<Scalar, MirrorError> {
    if s.is_zero() {
        return Err(MirrorError::DegeneratePeriod);
    }
    Scalar::one().div_unit(s).map_err(|_| MirrorError::NonUnitNormalizer(s.to_string()))
}

/// `[F].[Re σ]`.
pub fn period_normalizer(period: &CohClass, frame: &HyperbolicFrame) -> Scalar {
    frame.f().intersect(&period.re())
}

/// With `k = ([F].[Re σ])⁻¹`:
/// `[B̌ + iω̌] ≡ k[σ] − [C]` and `[σ̌] ≡ k([C] + [B + iω])` modulo `[F]`.
/// Output classes are reduced representatives.
pub fn gross_mirror(tr: &MirrorTriple, frame: &HyperbolicFrame) -> Result<MirrorTriple, MirrorError> {
    let period = tr.period.as_ref().ok_or(MirrorError::MissingClass("period"))?;
    let k = unit_inverse(&period_normalizer(period, frame))?;
    let kahler = frame.reduce(&(period.scale(&k) - frame.c().clone()))?;
    let new_period = match &tr.complexified_kahler {
        Some(bw) => Some(frame.reduce(&(frame.c().clone() + bw.clone()).scale(&k))?),
        None => None,
    };
    Ok(MirrorTriple { period: new_period, complexified_kahler: Some(kahler) })
}

/// The real classes `B̌, ω̌, Re σ̌, Im σ̌` of a mirror triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorClasses {
    pub b: CohClass,
    pub omega: CohClass,
    pub re_sigma: CohClass,
    pub im_sigma: CohClass,
}

impl MirrorClasses {
    pub fn from_triple(tr: &MirrorTriple) -> Result<Self, MirrorError> {
        let period = tr.period.as_ref().ok_or(MirrorError::MissingClass("period"))?;
        let bw = tr.complexified_kahler.as_ref().ok_or(MirrorError::MissingClass("complexified Kähler class"))?;
        Ok(Self { b: bw.re(), omega: bw.im(), re_sigma: period.re(), im_sigma: period.im() })
    }
}

/// Residuals of `[Reσ̌]² = [Imσ̌]² = [ω̌]²` and
/// `[ω̌]·[Reσ̌] = [ω̌]·[Imσ̌] = [Reσ̌]·[Imσ̌] = 0`, in that order.
pub fn normalization_residuals(x: &MirrorClasses) -> [(&'static str, Scalar); 6] {
    let (r, i, w) = (&x.re_sigma, &x.im_sigma, &x.omega);
    [
        ("Re^2 - Im^2", r.intersect(r) - i.intersect(i)),
        ("Im^2 - omega^2", i.intersect(i) - w.intersect(w)),
        ("Re^2 - omega^2", r.intersect(r) - w.intersect(w)),
        ("omega.Re", w.intersect(r)),
        ("omega.Im", w.intersect(i)),
        ("Re.Im", r.intersect(i)),
    ]
}

pub fn satisfies_normalization(x: &MirrorClasses) -> bool {
    normalization_residuals(x).iter().all(|(_, r)| r.is_zero())
}

/// Multipliers `λ` with `x ↦ x + λ[F]` for `ω̌`, `Re σ̌`, `Im σ̌`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifts {
    pub omega: Scalar,
    pub re_sigma: Scalar,
    pub im_sigma: Scalar,
}

impl Shifts {
    pub fn is_zero(&self) -> bool {
        self.omega.is_zero() && self.re_sigma.is_zero() && self.im_sigma.is_zero()
    }

    pub fn apply(&self, x: &MirrorClasses, frame: &HyperbolicFrame) -> MirrorClasses {
        let f = frame.f();
        MirrorClasses {
            b: x.b.clone(),
            omega: x.omega.clone() + f.scale(&self.omega),
            re_sigma: x.re_sigma.clone() + f.scale(&self.re_sigma),
            im_sigma: x.im_sigma.clone() + f.scale(&self.im_sigma),
        }
    }
}

impl fmt::Display for Shifts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "omega: {}, Re sigma: {}, Im sigma: {}", self.omega, self.re_sigma, self.im_sigma)
    }
}

/// Solves the quadratic normalizations for the `[F]`-shifts of `ω̌`,
/// `Re σ̌`, `Im σ̌`. Because `[F]² = 0` the system is linear in the shifts.
/// `B̌` is only defined modulo `[F]` and is reduced to its canonical
/// representative.
pub fn normalize_mod_f(x: &MirrorClasses, frame: &HyperbolicFrame) -> Result<(MirrorClasses, Shifts), MirrorError> {
    let f = frame.f();
    let (w, r, i) = (&x.omega, &x.re_sigma, &x.im_sigma);
    let (fw, fr, fi) = (f.intersect(w), f.intersect(r), f.intersect(i));
    let two = Scalar::int(2);
    let z = Scalar::zero;
    // unknowns (λ_ω, λ_R, λ_I | rhs)
    let mut rows: Vec<[Scalar; 4]> = vec![
        [z(), &two * &fr, -(&two * &fi), i.intersect(i) - r.intersect(r)],
        [-(&two * &fw), z(), &two * &fi, w.intersect(w) - i.intersect(i)],
        [fr.clone(), fw.clone(), z(), -w.intersect(r)],
        [fi.clone(), z(), fw.clone(), -w.intersect(i)],
        [z(), fi.clone(), fr.clone(), -r.intersect(i)],
    ];
    let mut rank = 0;
    for col in 0..3 {
        let pivot = (rank..rows.len()).find(|&k| rows[k][col].is_unit());
        let Some(p) = pivot else {
            if let Some(k) = (rank..rows.len()).find(|&k| !rows[k][col].is_zero()) {
                return Err(MirrorError::NonUnitNormalizer(rows[k][col].to_string()));
            }
            continue;
        };
        rows.swap(rank, p);
        let lead = rows[rank][col].clone();
        for entry in rows[rank].iter_mut() {
            *entry = entry.div_unit(&lead)?;
        }
        for k in 0..rows.len() {
            if k != rank && !rows[k][col].is_zero() {
                let factor = rows[k][col].clone();
                let pivot_row = rows[rank].clone();
                for (entry, pv) in rows[k].iter_mut().zip(&pivot_row) {
                    *entry = &*entry - &(&factor * pv);
                }
            }
        }
        rank += 1;
    }
    if rank < 3 {
        return Err(MirrorError::UnderdeterminedNormalization { rank });
    }
    if let Some(row) = rows[rank..].iter().find(|row| !row[3].is_zero()) {
        return Err(MirrorError::InconsistentNormalization(row[3].to_string()));
    }
    let shifts = Shifts { omega: rows[0][3].clone(), re_sigma: rows[1][3].clone(), im_sigma: rows[2][3].clone() };
    let mut out = shifts.apply(x, frame);
    out.b = frame.reduce(&out.b)?;
    Ok((out, shifts))
}

/// `[σ_ζ] = σ/(2ζ) + α(t) − ζσ̄/2`.
pub fn normalized_twistor_period(t: &Scalar, zeta: &Scalar) -> Result<CohClass, MirrorError> {
    Ok(twistor_period(t, zeta).div_unit(&(Scalar::int(2) * zeta.clone()))?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorPeriodOutcome {
    /// `[F]·[Re σ_ζ]`
    pub normalizer: Scalar,
    /// Mirror `[B̌ + iω̌]`, reduced.
    pub mirror_kahler: CohClass,
    /// `[B̌ + iω̌] − (tσ/(2ζ) − ζtσ̄/2)`, reduced modulo `[F]`.
    pub residual: CohClass,
}

impl MirrorPeriodOutcome {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn verify_mirror_period_in_frame(t: &Scalar, zeta: &Scalar, frame: &HyperbolicFrame) -> Result<MirrorPeriodOutcome, MirrorError> {
    let period = normalized_twistor_period(t, zeta)?;
    let normalizer = period_normalizer(&period, frame);
    let mirrored = gross_mirror(&MirrorTriple::new(Some(period), None), frame)?;
    let mirror_kahler = mirrored.complexified_kahler.expect("gross_mirror always returns a Kähler class");
    let expected = gualtieri_kahler_class(t, zeta)?;
    let residual = frame.reduce(&(mirror_kahler.clone() - expected))?;
    Ok(MirrorPeriodOutcome { normalizer, mirror_kahler, residual })
}

pub fn verify_mirror_period(t: &Scalar, zeta: &Scalar) -> Result<MirrorPeriodOutcome, MirrorError> {
    verify_mirror_period_in_frame(t, zeta, &HyperbolicFrame::standard())
}

/// A full triple with `σ = α(t) + iω_K` and `B + iω = iω_J`, whose mirror
/// is `Re σ̌ = tC`, `Im σ̌ = tω_J`, `ω̌ = tω_K`, `B̌ ≡ 0`.
pub fn sample_full_triple(t: &Scalar) -> MirrorTriple {
    let omega_j = (CohClass::sigma() + CohClass::sigmabar()).scale(&Scalar::frac(1, 2));
    let i = Scalar::i();
    let omega_k = (CohClass::sigma() - CohClass::sigmabar()).scale(&(Scalar::frac(-1, 2) * i.clone()));
    MirrorTriple::new(Some(alpha_class(t) + omega_k.scale(&i)), Some(omega_j.scale(&i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Scalar {
        Scalar::t()
    }

    fn omega_j() -> CohClass {
        (CohClass::sigma() + CohClass::sigmabar()).scale(&Scalar::frac(1, 2))
    }

    fn omega_k() -> CohClass {
        (CohClass::sigma() - CohClass::sigmabar()).scale(&(Scalar::frac(-1, 2) * Scalar::i()))
    }

    fn normalized_example() -> MirrorClasses {
        MirrorClasses {
            b: CohClass::zero(),
            omega: omega_j(),
            re_sigma: CohClass::curve() + CohClass::fibre().scale(&Scalar::int(2)),
            im_sigma: omega_k(),
        }
    }

    #[test]
    fn frames() {
        assert!(HyperbolicFrame::new(CohClass::curve(), CohClass::fibre()).is_err());
        let f = HyperbolicFrame::standard();
        let x = CohClass::curve() + CohClass::fibre().scale(&t()) + CohClass::sigma();
        assert_eq!(f.reduce(&x).unwrap(), CohClass::curve() + CohClass::sigma());
    }

    #[test]
    fn mirror_period_symbolic() {
        let out = verify_mirror_period(&t(), &Scalar::zeta()).unwrap();
        assert!(out.holds(), "{}", out.residual);
        assert_eq!(out.normalizer, t().pow(-1).unwrap());
    }

    #[test]
    fn mirror_period_sampled() {
        let zeta = Scalar::constant(crate::scalar::GaussRational::from_fracs((1, 2), (1, 3)));
        let out = verify_mirror_period(&Scalar::int(2), &zeta).unwrap();
        assert!(out.holds());
        assert_eq!(out.normalizer, Scalar::frac(1, 2));
    }

    #[test]
    fn mirror_period_fails_in_swapped_frame() {
        let out = verify_mirror_period_in_frame(&t(), &Scalar::zeta(), &HyperbolicFrame::swapped());
        assert!(matches!(out, Err(MirrorError::NonUnitNormalizer(_))));
    }

    #[test]
    fn degenerate_period() {
        let tr = MirrorTriple::new(Some(CohClass::sigma()), None);
        assert_eq!(gross_mirror(&tr, &HyperbolicFrame::standard()), Err(MirrorError::DegeneratePeriod));
    }

    #[test]
    fn congruences_hold_literally() {
        let frame = HyperbolicFrame::standard();
        let tr = sample_full_triple(&t());
        assert!(tr.period_is_isotropic());
        let out = gross_mirror(&tr, &frame).unwrap();
        let k = t();
        let p = tr.period.clone().unwrap();
        let lhs = out.complexified_kahler.clone().unwrap() - (p.scale(&k) - CohClass::curve());
        assert!(lhs.mod_fibre().is_zero());
        let classes = MirrorClasses::from_triple(&out).unwrap();
        assert_eq!(classes.re_sigma, CohClass::curve().scale(&t()));
        assert_eq!(classes.im_sigma, omega_j().scale(&t()));
        assert_eq!(classes.omega, omega_k().scale(&t()));
        assert!(classes.b.is_zero());
        let (norm, shifts) = normalize_mod_f(&classes, &frame).unwrap();
        assert_eq!(norm.re_sigma, (CohClass::curve() + CohClass::fibre().scale(&Scalar::int(2))).scale(&t()));
        assert_eq!(shifts.re_sigma, Scalar::int(2) * t());
        assert!(satisfies_normalization(&norm));
    }

    #[test]
    fn normalization_fixed_point_and_round_trip() {
        let frame = HyperbolicFrame::standard();
        let x = normalized_example();
        assert!(satisfies_normalization(&x));
        let (same, shifts) = normalize_mod_f(&x, &frame).unwrap();
        assert!(shifts.is_zero());
        assert_eq!(same, x);
        let kick = Shifts { omega: Scalar::frac(3, 2), re_sigma: t(), im_sigma: Scalar::int(-5) * Scalar::zeta() };
        let perturbed = kick.apply(&x, &frame);
        assert!(!satisfies_normalization(&perturbed));
        let (back, found) = normalize_mod_f(&perturbed, &frame).unwrap();
        assert_eq!(back, x);
        assert_eq!(found.re_sigma, -t());
    }

    #[test]
    fn underdetermined_when_nothing_pairs_with_f() {
        let frame = HyperbolicFrame::standard();
        let x = MirrorClasses { b: CohClass::zero(), omega: omega_j(), re_sigma: omega_k(), im_sigma: omega_j() };
        assert!(matches!(normalize_mod_f(&x, &frame), Err(MirrorError::UnderdeterminedNormalization { .. })));
    }
}
