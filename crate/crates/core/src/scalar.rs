//! Exact coefficient arithmetic.
//!
//! [`GaussRational`] is the field `Q(i)`. [`Scalar`] is the Laurent polynomial
//! ring `Q(i)[t^±1, ζ^±1, ζ̄^±1]`, where `t` is real and `ζ`, `ζ̄` are
//! independent formal variables exchanged by [`Scalar::conj`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("divisor `{0}` is not a unit of the Laurent ring")]
    NonUnitDivisor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at sample: variable `{0}` evaluated at 0 with a negative exponent")]
    PoleAtSample(&'static str),
}

/// Shorthand for a rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals

/// An element `re + im·i` of `Q(i)`. Both parts are kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re, 1), rat(im, 1))
    }

    /// `re_n/re_d + (im_n/im_d)·i`
    pub fn from_fracs(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-self.im.clone()).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}*i", fmt_rational(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                let mag = self.im.abs();
                if mag.is_one() {
                    write!(f, "({} {} i)", fmt_rational(&self.re), sign)
                } else {
                    write!(f, "({} {} {}*i)", fmt_rational(&self.re), sign, fmt_rational(&mag))
                }
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<BigRational> for GaussRational {
    fn from(q: BigRational) -> Self {
        Self::real(q)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(GaussRational, Add, add);
forward_owned_binop!(GaussRational, Sub, sub);
forward_owned_binop!(GaussRational, Mul, mul);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Ring abstraction

/// Commutative coefficient ring with a conjugation involution.
///
/// Implemented by [`GaussRational`] (sampled values) and [`Scalar`]
/// (symbolic values), so that exterior-algebra code runs over either.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<GaussRational>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;

    fn from_rational(q: BigRational) -> Self {
        Self::from(GaussRational::real(q))
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials

/// Exponent triple `(t, ζ, ζ̄)` of a Laurent monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub t: i32,
    pub zeta: i32,
    pub zetabar: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t: 0, zeta: 0, zetabar: 0 };

    pub fn new(t: i32, zeta: i32, zetabar: i32) -> Self {
        Self { t, zeta, zetabar }
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial::new(self.t + o.t, self.zeta + o.zeta, self.zetabar + o.zetabar)
    }

    fn inv(self) -> Monomial {
        Monomial::new(-self.t, -self.zeta, -self.zetabar)
    }

    fn conj(self) -> Monomial {
        Monomial::new(self.t, self.zetabar, self.zeta)
    }
}

/// Laurent polynomial in `t`, `ζ`, `ζ̄` over `Q(i)`, stored canonically:
/// no zero coefficients are ever kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn rational(q: BigRational) -> Self {
        Self::constant(GaussRational::real(q))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussRational::from(n))
    }

    /// `n/d` as a constant.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(rat(n, d))
    }

    pub fn i() -> Self {
        Self::constant(GaussRational::i())
    }

    pub fn t() -> Self {
        Self::monomial(GaussRational::one(), Monomial::new(1, 0, 0))
    }

    pub fn zeta() -> Self {
        Self::monomial(GaussRational::one(), Monomial::new(0, 1, 0))
    }

    pub fn zetabar() -> Self {
        Self::monomial(GaussRational::one(), Monomial::new(0, 0, 1))
    }

    pub fn monomial(c: GaussRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value if `self` is a constant (including zero).
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// `Some((c, m))` when `self = c·m` is a unit of the Laurent ring.
    pub fn as_unit(&self) -> Option<(&GaussRational, Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, *m))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    fn insert_add(&mut self, m: Monomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(GaussRational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Formal conjugation: conjugates coefficients and swaps `ζ ↔ ζ̄`.
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&GaussRational::real(q.clone()))
    }

    /// Exact quotient by a monomial unit.
    pub fn div_unit(&self, divisor: &Scalar) -> Result<Scalar, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (c, m) = divisor
            .as_unit()
            .ok_or_else(|| ScalarError::NonUnitDivisor(divisor.to_string()))?;
        let cinv = c.inv().expect("unit coefficient is nonzero");
        let minv = m.inv();
        Ok(Self {
            terms: self.terms.iter().map(|(mm, v)| (mm.mul(minv), v * &cinv)).collect(),
        })
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i32) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { Scalar::one().div_unit(self)? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Real part `(s + conj s)/2` in the formal sense.
    pub fn re(&self) -> Scalar {
        (self + &self.conj()).scale_rational(&rat(1, 2))
    }

    /// Imaginary part `(s − conj s)/(2i)` in the formal sense.
    pub fn im(&self) -> Scalar {
        (self - &self.conj()).scale(&GaussRational::from_fracs((0, 1), (-1, 2)))
    }

    /// Substitutes `t = t0`, `ζ = z0`, `ζ̄ = conj(z0)`.
    pub fn eval(&self, t0: &BigRational, z0: &GaussRational) -> Result<GaussRational, ScalarError> {
        let tz = GaussRational::real(t0.clone());
        let zb = z0.conj();
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            let pt = tz.pow(m.t).ok_or(ScalarError::PoleAtSample("t"))?;
            let pz = z0.pow(m.zeta).ok_or(ScalarError::PoleAtSample("zeta"))?;
            let pzb = zb.pow(m.zetabar).ok_or(ScalarError::PoleAtSample("zetabar"))?;
            acc = &acc + &(&(&(c * &pt) * &pz) * &pzb);
        }
        Ok(acc)
    }

    /// Substitutes `t = t0` only.
    pub fn eval_t(&self, t0: &BigRational) -> Result<Scalar, ScalarError> {
        let tz = GaussRational::real(t0.clone());
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let pt = tz.pow(m.t).ok_or(ScalarError::PoleAtSample("t"))?;
            out.insert_add(Monomial::new(0, m.zeta, m.zetabar), c * &pt);
        }
        Ok(out)
    }

    /// Substitutes `ζ = z0`, `ζ̄ = conj(z0)`, leaving `t` symbolic.
    pub fn eval_zeta(&self, z0: &GaussRational) -> Result<Scalar, ScalarError> {
        let zb = z0.conj();
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let pz = z0.pow(m.zeta).ok_or(ScalarError::PoleAtSample("zeta"))?;
            let pzb = zb.pow(m.zetabar).ok_or(ScalarError::PoleAtSample("zetabar"))?;
            out.insert_add(Monomial::new(m.t, 0, 0), &(c * &pz) * &pzb);
        }
        Ok(out)
    }

    /// Coefficient of `ζ^k` among the terms free of `ζ̄`.
    pub fn zeta_coefficient(&self, k: i32) -> Scalar {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.zeta == k && m.zetabar == 0)
                .map(|(m, c)| (Monomial::new(m.t, 0, 0), c.clone()))
                .collect(),
        }
    }

    /// Highest power of `t` present, `None` for zero.
    pub fn t_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.t).max()
    }

    /// The part of `self` with `t`-exponent `d`, with `t^d` removed.
    pub fn t_coefficient(&self, d: i32) -> Scalar {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t == d)
                .map(|(m, c)| (Monomial::new(0, m.zeta, m.zetabar), c.clone()))
                .collect(),
        }
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn conj(&self) -> Self {
        Scalar::conj(self)
    }
}

impl From<GaussRational> for Scalar {
    fn from(c: GaussRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

forward_owned_binop!(Scalar, Add, add);
forward_owned_binop!(Scalar, Sub, sub);
forward_owned_binop!(Scalar, Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.insert_add(*m, c.clone());
        }
    }
}

/// Division by a monomial unit. Panics on a non-unit divisor; use
/// [`Scalar::div_unit`] for the fallible form.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_unit(rhs).expect("division by a non-unit scalar")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

fn fmt_var(out: &mut String, name: &str, e: i32) {
    match e {
        0 => {}
        1 => {
            out.push('*');
            out.push_str(name);
        }
        _ => {
            out.push('*');
            out.push_str(name);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Canonical printing: monomials in ascending `(t, ζ, ζ̄)` exponent order,
/// coefficients as in [`GaussRational`]'s `Display`. The output is accepted
/// by the expression parser.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = (c.is_real() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative());
            let (negative, mag) = if negative {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut vars = String::new();
            fmt_var(&mut vars, "t", m.t);
            fmt_var(&mut vars, "zeta", m.zeta);
            fmt_var(&mut vars, "zetabar", m.zetabar);
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == GaussRational::one() {
                out.push_str(&vars[1..]);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(&vars);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Scalar {
        Scalar::t()
    }

    #[test]
    fn unit_cancellation() {
        let tinv = Scalar::one().div_unit(&t()).unwrap();
        assert_eq!(&t() * &tinv, Scalar::one());
    }

    #[test]
    fn zeta_plus_zetabar_is_self_conjugate() {
        let s = Scalar::zeta() + Scalar::zetabar();
        assert_eq!(s.conj(), s);
    }

    #[test]
    fn laurent_form_times_t() {
        // (t² + 1)/t written as t + t⁻¹
        let s = t() + t().pow(-1).unwrap();
        assert_eq!(&s * &t(), t().pow(2).unwrap() + Scalar::one());
    }

    #[test]
    fn div_unit_examples() {
        let two_zeta = Scalar::int(2) * Scalar::zeta();
        let q = t().div_unit(&two_zeta).unwrap();
        let expected = Scalar::monomial(GaussRational::from_fracs((1, 2), (0, 1)), Monomial::new(1, -1, 0));
        assert_eq!(q, expected);
        assert_eq!(Scalar::one().div_unit(&Scalar::one()).unwrap(), Scalar::one());
        let num = t().pow(2).unwrap() + Scalar::one();
        assert_eq!(num.div_unit(&t()).unwrap(), t() + t().pow(-1).unwrap());
    }

    #[test]
    fn div_unit_rejects_non_units() {
        let two_terms = t() + Scalar::one();
        assert!(matches!(Scalar::one().div_unit(&two_terms), Err(ScalarError::NonUnitDivisor(_))));
        assert_eq!(Scalar::one().div_unit(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        let a = (t().pow(2).unwrap() - Scalar::one()).div_unit(&t()).unwrap();
        assert_eq!(a.eval(&rat(2, 1), &GaussRational::zero()).unwrap(), GaussRational::real(rat(3, 2)));
        let zz = Scalar::zeta() * Scalar::zetabar();
        assert_eq!(zz.eval(&rat(1, 1), &GaussRational::i()).unwrap(), GaussRational::one());
    }

    #[test]
    fn eval_pole() {
        let a = t().pow(-1).unwrap();
        assert_eq!(a.eval(&rat(0, 1), &GaussRational::one()), Err(ScalarError::PoleAtSample("t")));
        let b = Scalar::zetabar().pow(-2).unwrap();
        assert_eq!(b.eval(&rat(1, 1), &GaussRational::zero()), Err(ScalarError::PoleAtSample("zetabar")));
    }

    #[test]
    fn inverse_two_t_decays() {
        let s = Scalar::one().div_unit(&(Scalar::int(2) * t())).unwrap();
        let mut last = None::<BigRational>;
        for k in 1..=6 {
            let v = s.eval(&rat(10i64.pow(k), 1), &GaussRational::one()).unwrap().re.abs();
            if let Some(prev) = last {
                assert!(v < prev);
            }
            last = Some(v);
        }
        assert!(last.unwrap() < rat(1, 1_000_000));
    }

    #[test]
    fn re_im_of_zeta() {
        let z = Scalar::zeta();
        let half = Scalar::frac(1, 2);
        assert_eq!(z.re(), &half * &(Scalar::zeta() + Scalar::zetabar()));
        // ζ = Re ζ + i Im ζ
        assert_eq!(z.re() + Scalar::i() * z.im(), z);
    }

    #[test]
    fn display_is_canonical() {
        let s = Scalar::frac(-1, 2) * t().pow(-1).unwrap() + Scalar::i() * Scalar::zeta();
        assert_eq!(s.to_string(), "-1/2*t^-1 + i*zeta");
        let c = Scalar::constant(GaussRational::from_fracs((1, 2), (-3, 4)));
        assert_eq!(c.to_string(), "(1/2 - 3/4*i)");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn zeta_and_t_coefficients() {
        let s = Scalar::int(3) + Scalar::int(2) * Scalar::zeta() * t() - Scalar::zeta() * Scalar::zetabar();
        assert_eq!(s.zeta_coefficient(1), Scalar::int(2) * t());
        assert_eq!(s.zeta_coefficient(0), Scalar::int(3));
        assert_eq!(s.t_degree(), Some(1));
        assert_eq!(s.t_coefficient(1), Scalar::int(2) * Scalar::zeta());
    }
}
