//! The twistor family on `X` and the B-field family on `Y` at the level of
//! cohomology: Kähler class arithmetic, first-order deformation directions
//! and their large-`t` limits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cohomology::{alpha_class, gualtieri_spinor_class, twistor_period, CohClass};
use crate::harmonic::{contract_sigma_inv, phi_homega, phi_ht, phi_t, HarmonicError, HtClass};
use crate::scalar::{Scalar, ScalarError};

/// `u_t = −(2/t)σ⁻¹[C] − (2(t²+1)/t)σ⁻¹[F]`, the direction of the twistor
/// family at `ζ = 0`.
pub fn direction_x(t: &Scalar) -> HtClass {
    let alpha = alpha_class(t);
    let minus_two = Scalar::int(-2);
    HtClass::new(Scalar::zero(), &minus_two * &alpha.c, &minus_two * &alpha.f, Scalar::zero())
}

/// `v_t = ½(−(1/t)σ⁻¹ + tσ̄)`.
pub fn direction_y(t: &Scalar) -> HtClass {
    let inv_t = Scalar::one().div_unit(t).expect("t must be a unit");
    HtClass::new(Scalar::frac(-1, 2) * inv_t, Scalar::zero(), Scalar::zero(), Scalar::frac(1, 2) * t.clone())
}

/// `φ_T(u_t) − v_t`.
pub fn bfield_correction(t: &Scalar) -> Result<HtClass, HarmonicError> {
    Ok(phi_t(&direction_x(t))? - direction_y(t))
}

/// `−(1/2t)σ̄`.
pub fn expected_correction(t: &Scalar) -> HtClass {
    let inv_t = Scalar::one().div_unit(t).expect("t must be a unit");
    HtClass::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::frac(-1, 2) * inv_t)
}

/// `φ_HT(u_t) − v_t`.
pub fn ht_correction(t: &Scalar) -> Result<HtClass, HarmonicError> {
    Ok(phi_ht(&direction_x(t))? - direction_y(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Periods `σ + 2ζα(t) − ζ²σ̄` of the twistor family on `X`.
    Twistor,
    /// Rescaled pure spinors of the family `𝒥_ζ` on `Y`.
    Gualtieri,
}

/// Minus the `¬σ`-preimage of the `ζ`-linear part of a family of classes.
pub fn direction_from_classes(family_linear: &CohClass) -> Result<HtClass, HarmonicError> {
    Ok(-contract_sigma_inv(family_linear)?)
}

pub fn direction_from_spinor_family(family: Family, t: &Scalar) -> Result<HtClass, HarmonicError> {
    let class = match family {
        Family::Twistor => twistor_period(t, &Scalar::zeta()),
        Family::Gualtieri => gualtieri_spinor_class(t, &Scalar::zeta()),
    };
    direction_from_classes(&class.zeta_coefficient(1))
}

/// Keeps the components of highest `t`-degree: the direction after
/// rescaling by the dominant power of `t`. Returns `None` for zero input.
pub fn renormalized_limit(x: &HtClass) -> Option<HtClass> {
    let comps = [&x.p, &x.q_c, &x.q_f, &x.r];
    let top = comps.iter().filter_map(|c| c.t_degree()).max()?;
    let lead = |c: &Scalar| c.t_coefficient(top);
    Some(HtClass::new(lead(&x.p), lead(&x.q_c), lead(&x.q_f), lead(&x.r)))
}

/// `u_∞ = −2σ⁻¹[F]`.
pub fn u_infinity() -> HtClass {
    renormalized_limit(&direction_x(&Scalar::t())).expect("u_t is nonzero")
}

/// `v_∞ = ½σ̄`.
pub fn v_infinity() -> HtClass {
    renormalized_limit(&direction_y(&Scalar::t())).expect("v_t is nonzero")
}

/// `r`-coefficient of the B-field correction at `t = 10^k`, `k = 1..=n`.
pub fn correction_decay(n: u32) -> Result<Vec<(BigRational, Scalar)>, HarmonicError> {
    (1..=n)
        .map(|k| {
            let t = BigRational::from_integer(BigInt::from(10).pow(k));
            let r = bfield_correction(&Scalar::rational(t.clone()))?.r;
            Ok((t, r))
        })
        .collect()
}

/// `true` when the magnitudes strictly decrease and all values are constants.
pub fn is_strictly_decaying(values: &[(BigRational, Scalar)]) -> bool {
    let mags: Option<Vec<BigRational>> = values.iter().map(|(_, r)| r.as_constant().map(|c| c.norm_sqr())).collect();
    mags.is_some_and(|m| m.windows(2).all(|w| w[1] < w[0]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub pass: bool,
    /// Residual expression, `0` on success.
    pub witness: String,
}

impl Verdict {
    pub fn identity(name: &'static str, lhs: &Scalar, rhs: &Scalar) -> Self {
        let residual = lhs - rhs;
        Self { name, pass: residual.is_zero(), witness: residual.to_string() }
    }

    pub fn class_identity<T: std::fmt::Display>(name: &'static str, residual: &T, is_zero: bool) -> Self {
        Self { name, pass: is_zero, witness: residual.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// `symbolic` or the sampled value of `t`.
    pub t_tag: String,
    pub direction_x: HtClass,
    pub direction_y: HtClass,
    pub correction: HtClass,
    pub verdicts: Vec<Verdict>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// `α·C = (t²−1)/t`, `α·F = 1/t`, `α² = 2`.
pub fn kahler_checks(t: &Scalar) -> Vec<Verdict> {
    let alpha = alpha_class(t);
    let inv_t = Scalar::one().div_unit(t).expect("t must be a unit");
    let t_minus = (t * t - Scalar::one()).div_unit(t).expect("t must be a unit");
    vec![
        Verdict::identity("alpha.C", &alpha.intersect(&CohClass::curve()), &t_minus),
        Verdict::identity("alpha.F", &alpha.intersect(&CohClass::fibre()), &inv_t),
        Verdict::identity("alpha^2", &alpha.intersect(&alpha), &Scalar::int(2)),
    ]
}

/// `α·C = 0` at `t = 1`.
pub fn semi_kahler_check() -> Verdict {
    let alpha = alpha_class(&Scalar::one());
    Verdict::identity("alpha.C at t=1", &alpha.intersect(&CohClass::curve()), &Scalar::zero())
}

fn ht_verdict(name: &'static str, residual: HtClass) -> Verdict {
    let zero = residual.is_zero();
    Verdict::class_identity(name, &residual, zero)
}

/// Every lattice-level identity of the two families at one value of `t`.
pub fn family_report(t: &Scalar, t_tag: &str) -> Result<FamilyReport, HarmonicError> {
    let u = direction_x(t);
    let v = direction_y(t);
    let correction = bfield_correction(t)?;
    let mut verdicts = kahler_checks(t);
    verdicts.push(ht_verdict("phiT(u_t) - v_t = -(1/2t)sigmabar", &correction - &expected_correction(t)));
    verdicts.push(ht_verdict("phiHT(u_t) = v_t", ht_correction(t)?));
    verdicts.push(ht_verdict("u_t from twistor periods", direction_from_spinor_family(Family::Twistor, t)? - u.clone()));
    verdicts.push(ht_verdict("v_t from pure spinors", direction_from_spinor_family(Family::Gualtieri, t)? - v.clone()));
    let period = twistor_period(t, &Scalar::zeta());
    let sq = period.wedge(&period);
    verdicts.push(Verdict::class_identity("period^2 = 0", &sq, sq.is_zero()));
    let mapped = phi_homega(&period) - gualtieri_spinor_class(t, &Scalar::zeta());
    verdicts.push(Verdict::class_identity("phiOmega(period) = spinor class", &mapped, mapped.is_zero()));
    Ok(FamilyReport { t_tag: t_tag.to_owned(), direction_x: u, direction_y: v, correction, verdicts })
}

/// The `t = 1` and `t → ∞` identities.
pub fn limit_checks() -> Result<Vec<Verdict>, HarmonicError> {
    let u1 = direction_x(&Scalar::one());
    let expected_u1 = HtClass::new(Scalar::zero(), Scalar::int(-2), Scalar::int(-4), Scalar::zero());
    let phi_u1 = phi_t(&u1)?;
    let expected_phi_u1 = HtClass::new(Scalar::frac(-1, 2), Scalar::zero(), Scalar::zero(), Scalar::zero());
    let u_inf = u_infinity();
    let expected_u_inf = HtClass::new(Scalar::zero(), Scalar::zero(), Scalar::int(-2), Scalar::zero());
    let v_inf = v_infinity();
    let expected_v_inf = HtClass::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::frac(1, 2));
    let decay = correction_decay(6)?;
    let decaying = is_strictly_decaying(&decay);
    Ok(vec![
        ht_verdict("u_1 = -2 sigma^-1 C - 4 sigma^-1 F", u1 - expected_u1),
        ht_verdict("phiT(u_1) = -1/2 sigma^-1", phi_u1 - expected_phi_u1),
        ht_verdict("u_inf = -2 sigma^-1 F", u_inf.clone() - expected_u_inf),
        ht_verdict("v_inf = 1/2 sigmabar", v_inf.clone() - expected_v_inf),
        ht_verdict("phiT(u_inf) = v_inf", phi_t(&u_inf)? - v_inf),
        Verdict {
            name: "correction decays along t = 10^k",
            pass: decaying,
            witness: decay.iter().map(|(_, r)| r.to_string()).collect::<Vec<_>>().join(", "),
        },
    ])
}

/// Evaluates a symbolic report parameter, rejecting `t ≤ 0`.
pub fn sample_t(t: &BigRational) -> Result<Scalar, ScalarError> {
    if !t.is_positive() {
        return Err(ScalarError::PoleAtSample("t must be positive"));
    }
    Ok(Scalar::rational(t.clone()))
}
