//! Generalized complex structures on the flat model `R⁴ = C²`.
//!
//! Real coordinates are `(x₁, y₁, x₂, y₂)` with `I ∂x = ∂y`. Vectors of
//! `T ⊕ T*` are 8-tuples: tangent components on `∂x₁, ∂y₁, ∂x₂, ∂y₂`
//! followed by cotangent components on `dx₁, dy₁, dx₂, dy₂`.
//!
//! For pointwise graph computations we also use complex coordinates, ordered
//! `(T^{0,1}, Ω^{1,0} | Ω^{0,1}, T^{1,0})`:
//! `b_k = dz̄_k(X)`, `c_k` the `dz_k` coefficient of `ξ`, `d_k` the `dz̄_k`
//! coefficient and `a_k = dz_k(X)`.

use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{graph_extract, kernel, CMatrix, LinalgError, Subspace};
use crate::scalar::GaussRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcsError {
    #[error("two-form is degenerate")]
    DegenerateForm,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Real coordinate labels, in index order.
pub const COORDS: [&str; 4] = ["x1", "y1", "x2", "y2"];

/// A constant complex two-form `Σ W_ij dx_i ∧ dx_j / 2`, stored as the
/// antisymmetric matrix `W_ij = W(e_i, e_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoForm(CMatrix);

impl TwoForm {
    pub fn zero() -> Self {
        Self(CMatrix::zeros(4, 4))
    }

    /// `Σ c · dx_i ∧ dx_j` over the given `(i, j, c)`.
    pub fn from_terms(terms: &[(usize, usize, GaussRational)]) -> Self {
        let mut w = CMatrix::zeros(4, 4);
        for (i, j, c) in terms {
            assert!(i != j && *i < 4 && *j < 4, "bad two-form index");
            w[(*i, *j)] = &w[(*i, *j)] + c;
            w[(*j, *i)] = &w[(*j, *i)] - c;
        }
        Self(w)
    }

    /// Accepts only antisymmetric 4×4 matrices.
    pub fn from_matrix(w: CMatrix) -> Option<Self> {
        (w.rows() == 4 && w.cols() == 4 && w.transpose() == -&w).then_some(Self(w))
    }

    /// `ω_I = dx₁∧dy₁ + dx₂∧dy₂`.
    pub fn omega_i() -> Self {
        Self::from_terms(&[(0, 1, 1.into()), (2, 3, 1.into())])
    }

    /// `σ = dz₁ ∧ dz₂`.
    pub fn sigma() -> Self {
        let i = GaussRational::i();
        Self::from_terms(&[(0, 2, 1.into()), (0, 3, i.clone()), (1, 2, i), (1, 3, (-1).into())])
    }

    pub fn sigmabar() -> Self {
        Self::sigma().conj()
    }

    /// `ω_J = Re σ`.
    pub fn omega_j() -> Self {
        Self::sigma().re()
    }

    /// `ω_K = Im σ`.
    pub fn omega_k() -> Self {
        Self::sigma().im()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    /// Coefficient of `dx_i ∧ dx_j`.
    pub fn component(&self, i: usize, j: usize) -> &GaussRational {
        &self.0[(i, j)]
    }

    /// Matrix of `X ↦ W(X, ·)` from `T` to `T*`.
    pub fn map_matrix(&self) -> CMatrix {
        self.0.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.0.rank() == 4
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self(self.0.scale(c))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&GaussRational::real(q.clone()))
    }

    pub fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    pub fn re(&self) -> Self {
        Self((&self.0 + &self.0.conj()).scale(&GaussRational::from_fracs((1, 2), (0, 1))))
    }

    pub fn im(&self) -> Self {
        Self((&self.0 - &self.0.conj()).scale(&GaussRational::from_fracs((0, 1), (-1, 2))))
    }

    pub fn is_real(&self) -> bool {
        self.0.conj() == self.0
    }
}

impl Add for &TwoForm {
    type Output = TwoForm;
    fn add(self, rhs: &TwoForm) -> TwoForm {
        TwoForm(&self.0 + &rhs.0)
    }
}

impl Sub for &TwoForm {
    type Output = TwoForm;
    fn sub(self, rhs: &TwoForm) -> TwoForm {
        TwoForm(&self.0 - &rhs.0)
    }
}

impl Neg for &TwoForm {
    type Output = TwoForm;
    fn neg(self) -> TwoForm {
        TwoForm(-&self.0)
    }
}

/// Matrix of the complex structure `I` on `T`.
pub fn complex_structure() -> CMatrix {
    CMatrix::from_ints(4, 4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0])
}

/// Gram matrix of `⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X))`.
pub fn natural_pairing() -> CMatrix {
    let half = CMatrix::identity(4).scale(&GaussRational::from_fracs((1, 2), (0, 1)));
    let z = CMatrix::zeros(4, 4);
    CMatrix::from_blocks(&z, &half, &half, &z)
}

/// An endomorphism `[[A, P], [Q, D]]` of `(T ⊕ T*) ⊗ C` with
/// `A: T→T`, `P: T*→T`, `Q: T→T*`, `D: T*→T*`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcStructure(CMatrix);

impl GcStructure {
    pub fn from_blocks(a: &CMatrix, p: &CMatrix, q: &CMatrix, d: &CMatrix) -> Self {
        Self(CMatrix::from_blocks(a, p, q, d))
    }

    pub fn from_matrix(m: CMatrix) -> Self {
        assert!(m.rows() == 8 && m.cols() == 8, "expected an 8x8 matrix");
        Self(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn a(&self) -> CMatrix {
        self.0.block(0, 0, 4, 4)
    }

    pub fn p(&self) -> CMatrix {
        self.0.block(0, 4, 4, 4)
    }

    pub fn q(&self) -> CMatrix {
        self.0.block(4, 0, 4, 4)
    }

    pub fn d(&self) -> CMatrix {
        self.0.block(4, 4, 4, 4)
    }

    /// `𝒥² + Id`, zero for an almost generalized complex structure.
    pub fn square_residual(&self) -> CMatrix {
        &(&self.0 * &self.0) + &CMatrix::identity(8)
    }

    pub fn squares_to_minus_identity(&self) -> bool {
        self.square_residual().is_zero()
    }

    /// `𝒥ᵀ G 𝒥 − G` for the natural pairing `G`.
    pub fn orthogonality_residual(&self) -> CMatrix {
        let g = natural_pairing();
        &(&(&self.0.transpose() * &g) * &self.0) - &g
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonality_residual().is_zero()
    }

    /// `L`, the `+i`-eigenspace.
    pub fn eigenspace_i(&self) -> Subspace {
        crate::linalg::eigenspace_i(&self.0)
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        Self(self.0.scale(&GaussRational::real(q.clone())))
    }
}

impl Add for &GcStructure {
    type Output = GcStructure;
    fn add(self, rhs: &GcStructure) -> GcStructure {
        GcStructure(&self.0 + &rhs.0)
    }
}

impl Neg for &GcStructure {
    type Output = GcStructure;
    fn neg(self) -> GcStructure {
        GcStructure(-&self.0)
    }
}

/// `𝒥_I = [[−I, 0], [0, I*]]`.
pub fn j_complex() -> GcStructure {
    let i = complex_structure();
    let z = CMatrix::zeros(4, 4);
    GcStructure::from_blocks(&-&i, &z, &z, &i.transpose())
}

/// `𝒥_ω = [[0, −ω⁻¹], [ω, 0]]`.
pub fn j_symplectic(omega: &TwoForm) -> Result<GcStructure, GcsError> {
    let m = omega.map_matrix();
    let inv = m.inverse().map_err(|_| GcsError::DegenerateForm)?;
    let z = CMatrix::zeros(4, 4);
    Ok(GcStructure::from_blocks(&z, &-&inv, &m, &z))
}

/// `e^B = [[1, 0], [B, 1]]` acting on `T ⊕ T*`.
pub fn exp_b(b: &TwoForm) -> CMatrix {
    let mut e = CMatrix::identity(8);
    e.set_block(4, 0, &b.map_matrix());
    e
}

/// `e^{−B} 𝒥 e^{B}`.
pub fn b_transform(j: &GcStructure, b: &TwoForm) -> GcStructure {
    GcStructure(&(&exp_b(&-b) * j.matrix()) * &exp_b(b))
}

/// Coefficients of `𝒥_I`, `𝒥_{ω_J}`, `𝒥_{ω_K}` in `𝒥_ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaCoefficients {
    pub complex: BigRational,
    pub j: BigRational,
    pub k: BigRational,
}

pub fn zeta_coefficients(zeta: &GaussRational) -> ZetaCoefficients {
    let n2 = zeta.norm_sqr();
    let denom = BigRational::one() + &n2;
    let two = BigRational::from_integer(2.into());
    ZetaCoefficients {
        complex: (BigRational::one() - &n2) / &denom,
        j: -(&two * &zeta.im) / &denom,
        k: (&two * &zeta.re) / &denom,
    }
}

/// `ω_J, ω_K` for the rescaled holomorphic form `tσ`.
pub fn scaled_forms(t: &BigRational) -> (TwoForm, TwoForm) {
    (TwoForm::omega_j().scale_rational(t), TwoForm::omega_k().scale_rational(t))
}

/// The family `𝒥_ζ` built from `tσ`.
pub fn j_zeta(zeta: &GaussRational, t: &BigRational) -> GcStructure {
    assert!(!t.is_zero(), "t must be nonzero");
    let c = zeta_coefficients(zeta);
    let (wj, wk) = scaled_forms(t);
    let jj = j_symplectic(&wj).expect("ω_J is nondegenerate");
    let jk = j_symplectic(&wk).expect("ω_K is nondegenerate");
    &(&j_complex().scale_rational(&c.complex) + &jj.scale_rational(&c.j)) + &jk.scale_rational(&c.k)
}

/// `𝒥_∞ = 𝒥_{−I}`.
pub fn j_zeta_infinity() -> GcStructure {
    -&j_complex()
}

/// `cos θ`, `sin θ` for `θ = 2 arctan s`.
pub fn theta_trig(s: &BigRational) -> (BigRational, BigRational) {
    let denom = BigRational::one() + s * s;
    ((BigRational::one() - s * s) / &denom, (BigRational::from_integer(2.into()) * s) / &denom)
}

/// `𝒥_θ = cos θ 𝒥_I + sin θ 𝒥_{ω_J}` at `θ = 2 arctan s`.
pub fn j_theta(s: &BigRational, t: &BigRational) -> GcStructure {
    let (c, sn) = theta_trig(s);
    let (wj, _) = scaled_forms(t);
    &j_complex().scale_rational(&c) + &j_symplectic(&wj).expect("ω_J is nondegenerate").scale_rational(&sn)
}

/// `e^{−B} 𝒥_{(csc θ) ω_J} e^{B}` with `B = −(cot θ) ω_K`. Requires `sin θ ≠ 0`.
pub fn j_theta_factorized(s: &BigRational, t: &BigRational) -> Result<GcStructure, GcsError> {
    let (c, sn) = theta_trig(s);
    if sn.is_zero() {
        return Err(GcsError::DegenerateForm);
    }
    let (wj, wk) = scaled_forms(t);
    let csc = BigRational::one() / &sn;
    let cot = &c / &sn;
    Ok(b_transform(&j_symplectic(&wj.scale_rational(&csc))?, &wk.scale_rational(&-cot)))
}

/// Real coordinates of `T` to `(b₁, b₂, a₁, a₂)`.
pub fn tangent_frame() -> CMatrix {
    let i = GaussRational::i();
    let mut p = CMatrix::zeros(4, 4);
    for k in 0..2 {
        p[(k, 2 * k)] = 1.into();
        p[(k, 2 * k + 1)] = -&i;
        p[(2 + k, 2 * k)] = 1.into();
        p[(2 + k, 2 * k + 1)] = i.clone();
    }
    p
}

/// Real coordinates of `T*` to `(c₁, c₂, d₁, d₂)`.
pub fn cotangent_frame() -> CMatrix {
    let half = GaussRational::from_fracs((1, 2), (0, 1));
    let ihalf = GaussRational::from_fracs((0, 1), (1, 2));
    let mut p = CMatrix::zeros(4, 4);
    for k in 0..2 {
        p[(k, 2 * k)] = half.clone();
        p[(k, 2 * k + 1)] = -&ihalf;
        p[(2 + k, 2 * k)] = half.clone();
        p[(2 + k, 2 * k + 1)] = ihalf.clone();
    }
    p
}

/// Real coordinates of `T ⊕ T*` to `(b, c | d, a)`.
pub fn complex_frame() -> CMatrix {
    let pt = tangent_frame();
    let pc = cotangent_frame();
    let mut p = CMatrix::zeros(8, 8);
    p.set_block(0, 0, &pt.block(0, 0, 2, 4));
    p.set_block(2, 4, &pc.block(0, 0, 2, 4));
    p.set_block(4, 4, &pc.block(2, 0, 2, 4));
    p.set_block(6, 0, &pt.block(2, 0, 2, 4));
    p
}

/// The map `T → T*` of a two-form in the complex frames, rows `(c, d)`,
/// columns `(b, a)`.
pub fn complex_form_map(w: &TwoForm) -> CMatrix {
    let pt_inv = tangent_frame().inverse().expect("frame is invertible");
    &(&cotangent_frame() * &w.map_matrix()) * &pt_inv
}

/// `S: T^{1,0} → Ω^{1,0}`, `Z ↦ σ(Z, ·)`.
pub fn sigma_block() -> CMatrix {
    complex_form_map(&TwoForm::sigma()).block(0, 2, 2, 2)
}

/// `T^{0,1} → Ω^{0,1}`, `Z ↦ σ̄(Z, ·)`.
pub fn sigmabar_block() -> CMatrix {
    complex_form_map(&TwoForm::sigmabar()).block(2, 0, 2, 2)
}

/// `T^{0,1} → Ω^{1,0}`, `Z ↦ ω_I(Z, ·)`.
pub fn omega_i_block() -> CMatrix {
    complex_form_map(&TwoForm::omega_i()).block(0, 0, 2, 2)
}

/// Pointwise action of `p σ_Y⁻¹ + r σ̄_Y` as a graph
/// `T^{0,1} ⊕ Ω^{1,0} → Ω^{0,1} ⊕ T^{1,0}`.
///
/// The bivector `σ⁻¹` is normalized by `σ⁻¹ ⌟ σ = 4`, so it acts on
/// `Ω^{1,0}` as `4 S⁻¹`.
pub fn ht_pointwise_graph(p: &GaussRational, r: &GaussRational) -> CMatrix {
    let s_inv = sigma_block().inverse().expect("σ is nondegenerate on T^{1,0}");
    let z = CMatrix::zeros(2, 2);
    CMatrix::from_blocks(&sigmabar_block().scale(r), &z, &z, &s_inv.scale(&(p * &GaussRational::from(4))))
}

/// Graph of `eigenspace_i(𝒥_ζ)` over `T^{0,1} ⊕ Ω^{1,0}`.
pub fn deformation_graph_y(zeta: &GaussRational, t: &BigRational) -> Result<CMatrix, GcsError> {
    let l = j_zeta(zeta, t).eigenspace_i().map(&complex_frame());
    Ok(graph_extract(&l, 4)?)
}

/// `ζ · ½(−(1/t) σ_Y⁻¹ + t σ̄_Y)` as a pointwise graph.
pub fn expected_deformation_graph_y(zeta: &GaussRational, t: &BigRational) -> CMatrix {
    let tg = GaussRational::real(t.clone());
    let p = -&(zeta * &(&tg * &GaussRational::from(2)).inv().expect("t is nonzero"));
    let r = &(zeta * &tg) * &GaussRational::from_fracs((1, 2), (0, 1));
    ht_pointwise_graph(&p, &r)
}

/// The four component equations of `(𝒥_ζ − i) v = 0`, one per summand of
/// `T^{0,1} ⊕ Ω^{1,0} ⊕ Ω^{0,1} ⊕ T^{1,0}`, for `v` running over the graph
/// of the closed-form deformation. `true` means the component vanishes.
pub fn deformation_eigen_equations(zeta: &GaussRational, t: &BigRational) -> [bool; 4] {
    let a = expected_deformation_graph_y(zeta, t);
    let p = complex_frame();
    let p_inv = p.inverse().expect("frame is invertible");
    let shifted = j_zeta(zeta, t).matrix() - &CMatrix::identity(8).scale(&GaussRational::i());
    let op = &(&p * &shifted) * &p_inv;
    let mut ok = [true; 4];
    for j in 0..4 {
        let mut v = vec![GaussRational::zero(); 8];
        v[j] = 1.into();
        for i in 0..4 {
            v[4 + i] = a[(i, j)].clone();
        }
        let res = op.mul_vec(&v);
        for (block, flag) in ok.iter_mut().enumerate() {
            if !res[2 * block..2 * block + 2].iter().all(GaussRational::is_zero) {
                *flag = false;
            }
        }
    }
    ok
}

/// `σ_ζ = σ + 2ζ ω_I − ζ² σ̄` on the flat model.
pub fn twistor_form(zeta: &GaussRational) -> TwoForm {
    let two_zeta = zeta * &GaussRational::from(2);
    let zeta_sq = zeta * zeta;
    &(&TwoForm::sigma() + &TwoForm::omega_i().scale(&two_zeta)) - &TwoForm::sigmabar().scale(&zeta_sq)
}

/// `T^{0,1}` of the twistor complex structure `I_ζ`, the kernel of `σ_ζ`.
pub fn twistor_kernel(zeta: &GaussRational) -> Subspace {
    kernel(&twistor_form(zeta).map_matrix())
}

/// The kernel of `σ_ζ` as a graph `T^{0,1} → T^{1,0}`. The flat twistor
/// family does not depend on the Kähler scale.
pub fn twistor_pointwise_graph(zeta: &GaussRational) -> Result<CMatrix, GcsError> {
    Ok(graph_extract(&twistor_kernel(zeta).map(&tangent_frame()), 2)?)
}

/// `−2ζ S⁻¹ ∘ ω_I` on `T^{0,1}`.
pub fn expected_twistor_graph(zeta: &GaussRational) -> CMatrix {
    let s_inv = sigma_block().inverse().expect("σ is nondegenerate on T^{1,0}");
    (&s_inv * &omega_i_block()).scale(&(zeta * &GaussRational::from(-2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussRational {
        GaussRational::from_fracs(re, im)
    }

    #[test]
    fn flat_model_invariants() {
        let i = complex_structure();
        assert_eq!(&i * &i, -&CMatrix::identity(4));
        assert!(TwoForm::omega_j().is_nondegenerate());
        assert!(TwoForm::omega_k().is_nondegenerate());
        assert!(TwoForm::omega_j().is_real() && TwoForm::omega_k().is_real());
        assert_eq!(TwoForm::omega_j(), TwoForm::from_terms(&[(0, 2, 1.into()), (1, 3, (-1).into())]));
    }

    #[test]
    fn complex_and_symplectic_structures() {
        let ji = j_complex();
        assert!(ji.squares_to_minus_identity());
        assert!(ji.is_orthogonal());
        let jw = j_symplectic(&TwoForm::omega_j()).unwrap();
        assert!(jw.squares_to_minus_identity());
        assert!(jw.is_orthogonal());
        let degenerate = TwoForm::from_terms(&[(0, 1, 1.into())]);
        assert_eq!(j_symplectic(&degenerate), Err(GcsError::DegenerateForm));
    }

    #[test]
    fn orthogonality_on_all_basis_pairs() {
        let jw = j_symplectic(&TwoForm::omega_j()).unwrap();
        let g = natural_pairing();
        let m = jw.matrix();
        for a in 0..8 {
            for b in 0..8 {
                let lhs = (0..8)
                    .flat_map(|i| (0..8).map(move |j| (i, j)))
                    .fold(GaussRational::zero(), |acc, (i, j)| &acc + &(&(&m[(i, a)] * &g[(i, j)]) * &m[(j, b)]));
                assert_eq!(lhs, g[(a, b)], "pair ({a}, {b})");
            }
        }
    }

    #[test]
    fn l_of_complex_structure() {
        // T^{0,1} ⊕ Ω^{1,0} in complex coordinates: d = a = 0
        let l = j_complex().eigenspace_i();
        let lc = l.map(&complex_frame());
        assert_eq!(graph_extract(&lc, 4).unwrap(), CMatrix::zeros(4, 4));
        assert_eq!((-&j_complex()).eigenspace_i(), l.conj());
    }

    #[test]
    fn b_transform_basics() {
        let j = j_symplectic(&TwoForm::omega_k()).unwrap();
        assert_eq!(b_transform(&j, &TwoForm::zero()), j);
        let b = TwoForm::from_terms(&[(0, 1, rat(1, 3).into()), (1, 3, (-2).into())]);
        let jb = b_transform(&j, &b);
        assert!(jb.squares_to_minus_identity());
        assert!(jb.is_orthogonal());
    }

    #[test]
    fn j_zeta_special_values() {
        let t = rat(2, 1);
        assert_eq!(j_zeta(&GaussRational::zero(), &t), j_complex());
        let c = zeta_coefficients(&GaussRational::i());
        assert!(c.complex.is_zero());
        let j = j_zeta(&g((1, 2), (0, 1)), &t);
        assert!(j.squares_to_minus_identity());
        assert!(j.is_orthogonal());
        assert_eq!(j_zeta_infinity(), -&j_complex());
        assert!(j_zeta_infinity().squares_to_minus_identity());
        assert_eq!(j_zeta_infinity().eigenspace_i(), j_complex().eigenspace_i().conj());
    }

    #[test]
    fn eigenspace_dimension() {
        let l = j_zeta(&g((1, 3), (0, 1)), &rat(2, 1)).eigenspace_i();
        assert_eq!(l.dim(), 4);
        assert_eq!(l.intersection_dim(&l.conj()), 0);
    }

    #[test]
    fn theta_factorization() {
        for (s, t) in [(rat(1, 3), rat(2, 1)), (rat(2, 1), rat(3, 2)), (rat(-5, 7), rat(10, 1))] {
            let jt = j_theta(&s, &t);
            assert_eq!(jt, j_zeta(&GaussRational::new(BigRational::zero(), -s.clone()), &t));
            assert_eq!(j_theta_factorized(&s, &t).unwrap(), jt);
        }
        assert!(j_theta_factorized(&rat(0, 1), &rat(2, 1)).is_err());
    }

    #[test]
    fn sigma_kernel_is_two_dimensional() {
        assert_eq!(twistor_kernel(&g((1, 2), (0, 1))).dim(), 2);
    }

    #[test]
    fn deformation_graph_matches_closed_form() {
        let t = rat(2, 1);
        let zeta = g((1, 2), (0, 1));
        let a = deformation_graph_y(&zeta, &t).unwrap();
        assert_eq!(a, expected_deformation_graph_y(&zeta, &t));
        // σ̄-block scaled by ζt/2 = 1/2, σ⁻¹-block by −ζ/(2t) = −1/8
        assert_eq!(a.block(0, 0, 2, 2), sigmabar_block().scale(&g((1, 2), (0, 1))));
        let s_inv = sigma_block().inverse().unwrap();
        assert_eq!(a.block(2, 2, 2, 2), s_inv.scale(&g((-1, 8), (0, 1))).scale(&4.into()));
        assert_eq!(deformation_eigen_equations(&zeta, &t), [true; 4]);
        assert!(deformation_graph_y(&GaussRational::zero(), &t).unwrap().is_zero());
    }

    #[test]
    fn twistor_graph_is_exact() {
        let zeta = g((1, 3), (0, 1));
        assert_eq!(twistor_pointwise_graph(&zeta).unwrap(), expected_twistor_graph(&zeta));
        assert!(twistor_pointwise_graph(&GaussRational::zero()).unwrap().is_zero());
        assert_eq!(expected_twistor_graph(&zeta), (&sigma_block().inverse().unwrap() * &omega_i_block()).scale(&g((-2, 3), (0, 1))));
    }
}
