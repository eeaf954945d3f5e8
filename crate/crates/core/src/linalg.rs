//! Dense exact linear algebra over `Q(i)`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::GaussRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("subspace of dimension {dim} is not a graph over the first {base_dim} coordinates")]
    NotAGraph { dim: usize, base_dim: usize },
    #[error("matrix is singular")]
    Singular,
}

#[derive(Clone, PartialEq, Eq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRational>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| entries[i * cols + j].into())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<GaussRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(GaussRational::conj).collect() }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[GaussRational]) -> Vec<GaussRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(GaussRational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Submatrix `[r0, r0+nr) × [c0, c0+nc)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &CMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn from_blocks(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> Self {
        let n = a.rows;
        let mut m = Self::zeros(2 * n, 2 * n);
        m.set_block(0, 0, a);
        m.set_block(0, n, b);
        m.set_block(n, 0, c);
        m.set_block(n, n, d);
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (CMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = &factor * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<CMatrix, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Ok(r.block(0, n, n, n))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = GaussRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRational {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRational {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q(i)^n`, stored as the nonzero rows of the reduced
/// row echelon form of any spanning set. Equal subspaces have identical
/// representations, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<GaussRational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(ambient, CMatrix::identity(ambient).data.chunks(ambient).map(<[_]>::to_vec))
    }

    pub fn from_spanning(ambient: usize, vectors: impl IntoIterator<Item = Vec<GaussRational>>) -> Self {
        let rows: Vec<Vec<GaussRational>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        assert!(rows.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let (r, pivots) = CMatrix::from_rows(rows).rref();
        Self {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussRational>] {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero"))
            .collect()
    }

    pub fn contains(&self, v: &[GaussRational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        CMatrix::from_rows(rows).rank() == self.dim()
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::from_spanning(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Dimension of `self ∩ other`.
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.join(other).dim()
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Subspace {
        Self::from_spanning(self.ambient, self.basis.iter().map(|v| v.iter().map(GaussRational::conj).collect()))
    }

    /// Image under a linear map.
    pub fn map(&self, m: &CMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Self::from_spanning(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    /// `true` when `vᵀ G w = 0` for all basis vectors `v`, `w`.
    pub fn is_isotropic(&self, gram: &CMatrix) -> bool {
        self.basis.iter().all(|v| {
            let gv = gram.mul_vec(v);
            self.basis
                .iter()
                .all(|w| w.iter().zip(&gv).fold(GaussRational::zero(), |acc, (a, b)| &acc + &(a * b)).is_zero())
        })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient)?;
        for v in &self.basis {
            let row: Vec<String> = v.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact null space.
pub fn kernel(m: &CMatrix) -> Subspace {
    let (r, pivots) = m.rref();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors = free.iter().map(|&fc| {
        let mut v = vec![GaussRational::zero(); n];
        v[fc] = GaussRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[(row, fc)];
        }
        v
    });
    Subspace::from_spanning(n, vectors)
}

/// `+i`-eigenspace, `ker(m − i·Id)`.
pub fn eigenspace_i(m: &CMatrix) -> Subspace {
    assert!(m.is_square(), "eigenspace of a non-square matrix");
    kernel(&(m - &CMatrix::identity(m.rows()).scale(&GaussRational::i())))
}

/// Writes `L = {(v, A v)}` over the first `base_dim` coordinates and
/// returns `A` (shape `(n − base_dim) × base_dim`).
pub fn graph_extract(l: &Subspace, base_dim: usize) -> Result<CMatrix, LinalgError> {
    let not_graph = LinalgError::NotAGraph { dim: l.dim(), base_dim };
    if l.dim() != base_dim || l.pivots() != (0..base_dim).collect::<Vec<_>>() {
        return Err(not_graph);
    }
    let fibre = l.ambient() - base_dim;
    Ok(CMatrix::from_fn(fibre, base_dim, |i, j| l.basis()[j][base_dim + i].clone()))
}

/// The graph `{(v, A v)}` of `A`.
pub fn graph_of(a: &CMatrix) -> Subspace {
    let (fibre, base) = (a.rows(), a.cols());
    Subspace::from_spanning(
        base + fibre,
        (0..base).map(|j| {
            let mut v = vec![GaussRational::zero(); base + fibre];
            v[j] = GaussRational::one();
            for i in 0..fibre {
                v[base + i] = a[(i, j)].clone();
            }
            v
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(kernel(&CMatrix::identity(4)).dim(), 0);
        assert_eq!(kernel(&CMatrix::zeros(4, 4)), Subspace::full(4));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = CMatrix::from_ints(3, 5, &[1, 2, 0, -1, 3, 0, 0, 1, 4, 1, 2, 4, 1, 2, 7]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 5 - m.rank());
        for v in k.basis() {
            assert!(m.mul_vec(v).iter().all(GaussRational::is_zero));
        }
    }

    #[test]
    fn eigenspace_of_rotation() {
        // rotation by 90°: eigenvalue i on (1, -i)
        let j = CMatrix::from_ints(2, 2, &[0, -1, 1, 0]);
        let l = eigenspace_i(&j);
        assert_eq!(l.dim(), 1);
        let v = &l.basis()[0];
        let jv = j.mul_vec(v);
        assert!(jv.iter().zip(v).all(|(a, b)| *a == &GaussRational::i() * b));
        assert_eq!(eigenspace_i(&-&j), l.conj());
    }

    #[test]
    fn graph_round_trip() {
        let a = CMatrix::from_rows(vec![
            vec![GaussRational::from_ints(1, 2), GaussRational::zero()],
            vec![GaussRational::from_fracs((1, 3), (0, 1)), GaussRational::from_ints(0, -1)],
            vec![GaussRational::zero(), GaussRational::from_ints(5, 0)],
        ]);
        assert_eq!(graph_extract(&graph_of(&a), 2).unwrap(), a);
    }

    #[test]
    fn graph_of_base_is_zero() {
        let base = Subspace::from_spanning(4, [vec![1.into(), 0.into(), 0.into(), 0.into()], vec![0.into(), 1.into(), 0.into(), 0.into()]]);
        assert!(graph_extract(&base, 2).unwrap().is_zero());
    }

    #[test]
    fn vertical_subspace_is_not_a_graph() {
        let vertical = Subspace::from_spanning(4, [vec![1.into(), 0.into(), 0.into(), 0.into()], vec![0.into(), 0.into(), 1.into(), 0.into()]]);
        assert_eq!(graph_extract(&vertical, 2), Err(LinalgError::NotAGraph { dim: 2, base_dim: 2 }));
    }

    #[test]
    fn canonical_form_ignores_spanning_choice() {
        let v1: Vec<GaussRational> = vec![1.into(), 2.into(), 0.into()];
        let v2: Vec<GaussRational> = vec![0.into(), GaussRational::i(), 1.into()];
        let mixed: Vec<GaussRational> = v1.iter().zip(&v2).map(|(a, b)| &(a * &GaussRational::from_ints(3, 1)) - b).collect();
        let s1 = Subspace::from_spanning(3, [v1.clone(), v2.clone()]);
        let s2 = Subspace::from_spanning(3, [mixed, v1, v2]);
        assert_eq!(s1, s2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = CMatrix::from_ints(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, CMatrix::identity(3));
        assert_eq!(CMatrix::zeros(2, 2).inverse(), Err(LinalgError::Singular));
    }
}
