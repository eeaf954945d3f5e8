//! Seeded randomized property suites. The same suites back the CLI
//! `--seed` option and the test harness.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::gcs::{b_transform, j_complex, j_symplectic, j_zeta, GcStructure, TwoForm};
use crate::linalg::{graph_extract, graph_of, CMatrix, Subspace};
use crate::scalar::{rat, GaussRational, Monomial, Scalar};
use crate::spinor::Spinor;

pub const SUITES: [&str; 5] = ["scalar-ring", "conj-involution", "wedge-associativity", "subspace-canonical", "b-transform-group"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Random generators for the algebraic types, all with small coefficients.
pub struct Gen(ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn rational(&mut self) -> BigRational {
        rat(self.0.gen_range(-9..=9), self.0.gen_range(1..=6))
    }

    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let q = self.rational();
            if q != rat(0, 1) {
                return q;
            }
        }
    }

    pub fn gauss(&mut self) -> GaussRational {
        let im = if self.0.gen_bool(0.5) { self.rational() } else { rat(0, 1) };
        GaussRational::new(self.rational(), im)
    }

    pub fn nonzero_gauss(&mut self) -> GaussRational {
        loop {
            let g = self.gauss();
            if !g.is_zero() {
                return g;
            }
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let terms = self.0.gen_range(0..=3);
        let mut s = Scalar::zero();
        for _ in 0..terms {
            let m = Monomial::new(self.0.gen_range(-2..=2), self.0.gen_range(-1..=2), self.0.gen_range(-1..=2));
            s = s + Scalar::monomial(self.gauss(), m);
        }
        s
    }

    pub fn spinor(&mut self) -> Spinor<GaussRational> {
        Spinor::from_coeffs(std::array::from_fn(|_| if self.0.gen_bool(0.5) { self.gauss() } else { GaussRational::zero() }))
    }

    pub fn real_two_form(&mut self) -> TwoForm {
        let mut terms = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0.gen_bool(0.6) {
                    terms.push((i, j, GaussRational::real(self.rational())));
                }
            }
        }
        TwoForm::from_terms(&terms)
    }

    pub fn vector(&mut self, n: usize) -> Vec<GaussRational> {
        (0..n).map(|_| if self.0.gen_bool(0.7) { self.gauss() } else { GaussRational::zero() }).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, |_, _| self.gauss())
    }

    /// One of `𝒥_I`, `𝒥_{ω_J}` or `𝒥_ζ` at a random sample.
    pub fn structure(&mut self) -> GcStructure {
        match self.0.gen_range(0..3) {
            0 => j_complex(),
            1 => j_symplectic(&TwoForm::omega_j()).expect("ω_J is nondegenerate"),
            _ => {
                let t = loop {
                    let q = self.nonzero_rational();
                    if q > rat(0, 1) {
                        break q;
                    }
                };
                j_zeta(&self.gauss(), &t)
            }
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }
}

fn scalar_ring_case(g: &mut Gen) -> Result<(), String> {
    let (a, b, c) = (g.scalar(), g.scalar(), g.scalar());
    let show = || format!("a = {a}, b = {b}, c = {c}");
    let checks = [
        ("additive associativity", (&a + &b) + c.clone() == a.clone() + (&b + &c)),
        ("multiplicative associativity", (&a * &b) * c.clone() == a.clone() * (&b * &c)),
        ("additive commutativity", &a + &b == &b + &a),
        ("multiplicative commutativity", &a * &b == &b * &a),
        ("distributivity", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
        ("identities", &a + &Scalar::zero() == a && &a * &Scalar::one() == a),
        ("inverses", (&a + &(-&a)).is_zero()),
    ];
    if let Some((law, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(format!("{law}: {}", show()));
    }
    let t0 = g.nonzero_rational();
    let z0 = g.nonzero_gauss();
    let ev = |s: &Scalar| s.eval(&t0, &z0).expect("nonzero sample has no poles");
    if ev(&(&a * &b)) != &ev(&a) * &ev(&b) || ev(&(&a + &b)) != &ev(&a) + &ev(&b) {
        return Err(format!("evaluation is not a homomorphism at t = {t0}, zeta = {z0}: {}", show()));
    }
    Ok(())
}

fn conj_case(g: &mut Gen) -> Result<(), String> {
    let (a, b) = (g.scalar(), g.scalar());
    if a.conj().conj() != a {
        return Err(format!("conj(conj a) != a for a = {a}"));
    }
    if (&a * &b).conj() != &a.conj() * &b.conj() || (&a + &b).conj() != &a.conj() + &b.conj() {
        return Err(format!("conj is not a ring map: a = {a}, b = {b}"));
    }
    let z = g.gauss();
    if z.conj().conj() != z {
        return Err(format!("conj(conj z) != z for z = {z}"));
    }
    Ok(())
}

fn wedge_case(g: &mut Gen) -> Result<(), String> {
    let (a, b, c) = (g.spinor(), g.spinor(), g.spinor());
    if a.wedge(&b).wedge(&c) != a.wedge(&b.wedge(&c)) {
        return Err(format!("(a^b)^c != a^(b^c) for a = {a}, b = {b}, c = {c}"));
    }
    if Spinor::one().wedge(&a) != a {
        return Err(format!("1^a != a for a = {a}"));
    }
    // graded commutativity on homogeneous parts
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            let (x, y) = (a.part(p), b.part(q));
            let xy = x.wedge(&y);
            let yx = y.wedge(&x);
            let expected = if (p * q) % 2 == 1 { -&yx } else { yx };
            if xy != expected {
                return Err(format!("graded commutativity fails in degrees ({p}, {q})"));
            }
        }
    }
    Ok(())
}

fn subspace_case(g: &mut Gen) -> Result<(), String> {
    let n = 6;
    let k = 1 + g.below(4);
    let vs: Vec<Vec<GaussRational>> = (0..k).map(|_| g.vector(n)).collect();
    let s = Subspace::from_spanning(n, vs.clone());
    // recombine with a unit upper-triangular matrix
    let mut mixed = vs.clone();
    for (i, row) in mixed.iter_mut().enumerate() {
        for later in &vs[i + 1..] {
            let c = g.gauss();
            *row = row.iter().zip(later).map(|(x, y)| x + &(&c * y)).collect();
        }
    }
    mixed.reverse();
    if Subspace::from_spanning(n, mixed) != s {
        return Err(format!("canonical form depends on the spanning set: {vs:?}"));
    }
    if !vs.iter().all(|v| s.contains(v)) {
        return Err("subspace misses a spanning vector".to_owned());
    }
    let a = g.matrix(3, 2);
    match graph_extract(&graph_of(&a), 2) {
        Ok(back) if back == a => Ok(()),
        _ => Err(format!("graph round trip fails for {a:?}")),
    }
}

fn b_transform_case(g: &mut Gen) -> Result<(), String> {
    let j = g.structure();
    let (b1, b2) = (g.real_two_form(), g.real_two_form());
    let lhs = b_transform(&j, &(&b1 + &b2));
    let rhs = b_transform(&b_transform(&j, &b2), &b1);
    if lhs != rhs {
        return Err(format!("group law fails for B1 = {b1:?}, B2 = {b2:?}"));
    }
    if !lhs.squares_to_minus_identity() || !lhs.is_orthogonal() {
        return Err("B-transform does not preserve the structure".to_owned());
    }
    Ok(())
}

/// Runs one named suite. Unknown names return `None`.
pub fn run_suite(name: &str, seed: u64, cases: usize) -> Option<PropertyOutcome> {
    let (idx, &name) = SUITES.iter().enumerate().find(|(_, n)| **n == name)?;
    let case: fn(&mut Gen) -> Result<(), String> = match idx {
        0 => scalar_ring_case,
        1 => conj_case,
        2 => wedge_case,
        3 => subspace_case,
        _ => b_transform_case,
    };
    let mut g = Gen::new(seed.wrapping_add(idx as u64));
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..cases {
        if let Err(msg) = case(&mut g) {
            failures += 1;
            first_failure.get_or_insert(msg);
        }
    }
    Some(PropertyOutcome { name, seed, cases, failures, first_failure })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_a_small_run() {
        for name in SUITES {
            let out = run_suite(name, 7, 25).unwrap();
            assert!(out.passed(), "{name}: {:?}", out.first_failure);
        }
        assert!(run_suite("nope", 0, 1).is_none());
    }

    #[test]
    fn runs_are_reproducible() {
        assert_eq!(run_suite("scalar-ring", 42, 10), run_suite("scalar-ring", 42, 10));
    }
}
