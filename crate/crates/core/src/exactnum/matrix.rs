//! Dense matrices over the Gaussian rationals and canonical subspaces.
//!
//! Rank and determinant run fraction-free (Bareiss) over the Gaussian
//! integers after clearing denominators, which bounds intermediate entry
//! growth.  Row reduction for canonical bases uses ordinary Gauss-Jordan
//! with leading ones, since canonicalisation requires division anyway.
//! Signatures of real symmetric matrices come from exact congruence
//! diagonalisation, so Sylvester inertia is certified without eigenvalues.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::scalar::{Gauss, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<Gauss>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, a: vec![Gauss::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Gauss::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gauss>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gauss) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Gauss {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gauss) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Gauss> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Gauss> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Gauss) -> Gauss) -> Mat {
        Mat { rows: self.rows, cols: self.cols, a: self.a.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Gauss::is_zero)
    }

    pub fn is_real(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.at(i, j).is_real() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut s = Gauss::zero();
            for k in 0..self.cols {
                let p = self.at(i, k) * other.at(k, j);
                s += &p;
            }
            s
        })
    }

    pub fn mul_vec(&self, v: &[Gauss]) -> Vec<Gauss> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Gauss::zero();
                for k in 0..self.cols {
                    let p = self.at(i, k) * &v[k];
                    s += &p;
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn neg(&self) -> Mat {
        self.map(|z| -z)
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut a = self.a.clone();
        a.extend(other.a.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, a }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Rank by fraction-free elimination over the Gaussian integers.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<GInt>> = (0..self.rows).map(|i| clear_row(self, i)).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = GInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in (r + 1)..rows {
                for j in (c + 1)..cols {
                    let t = &m[r][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[r][j]));
                    m[i][j] = t.div_exact(&prev);
                }
                m[i][c] = GInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let (x, y) = (m.at(r, j).clone(), m.at(p, j).clone());
                    m.set(r, j, y);
                    m.set(p, j, x);
                }
            }
            let inv = m.at(r, c).inv();
            for j in 0..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.at(i, j) - &(&f * m.at(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Right kernel `{x : A x = 0}` as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![Gauss::zero(); self.cols];
            v[f] = Gauss::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f);
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, &basis)
    }

    /// Particular solution of `A x = b` together with the kernel of `A`.
    pub fn solve_affine(&self, b: &[Gauss]) -> (Option<Vec<Gauss>>, Subspace) {
        assert_eq!(self.rows, b.len());
        let rhs = Mat::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        let particular = if pivots.contains(&self.cols) {
            None
        } else {
            let mut x = vec![Gauss::zero(); self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = r.at(i, self.cols).clone();
            }
            Some(x)
        };
        (particular, self.kernel())
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (r, pivots) = self.hstack(&Mat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Determinant by rational elimination (exact; used on small matrices).
    pub fn det(&self) -> Gauss {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Gauss::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Gauss::zero();
            };
            if p != c {
                for j in 0..n {
                    let (x, y) = (m.at(c, j).clone(), m.at(p, j).clone());
                    m.set(c, j, y);
                    m.set(p, j, x);
                }
                det = -det;
            }
            det = &det * m.at(c, c);
            let inv = m.at(c, c).inv();
            for i in (c + 1)..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) * &inv;
                for j in c..n {
                    let v = m.at(i, j) - &(&f * m.at(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Determinants of the k-by-k top-left blocks, k = 1..n.
    pub fn leading_principal_minors(&self) -> Vec<Gauss> {
        assert_eq!(self.rows, self.cols);
        (1..=self.rows)
            .map(|k| Mat::from_fn(k, k, |i, j| self.at(i, j).clone()).det())
            .collect()
    }

    /// Sylvester inertia `(positive, negative, zero)` of a real symmetric
    /// matrix, by exact congruence diagonalisation.
    pub fn signature_symmetric(&self) -> Result<(usize, usize, usize)> {
        assert_eq!(self.rows, self.cols);
        if let Some((i, j)) = self.is_real() {
            return Err(Error::NotReal { i, j });
        }
        if let Some((i, j)) = self.is_symmetric() {
            return Err(Error::NotSymmetric { i, j });
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).re.clone()).collect())
            .collect();
        let swap_sym = |m: &mut Vec<Vec<Rat>>, x: usize, y: usize| {
            m.swap(x, y);
            for row in m.iter_mut() {
                row.swap(x, y);
            }
        };
        for k in 0..n {
            if m[k][k].is_zero() {
                if let Some(j) = ((k + 1)..n).find(|&j| !m[j][j].is_zero()) {
                    swap_sym(&mut m, k, j);
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !m[i][j].is_zero())
                {
                    // All remaining diagonal entries vanish; a symmetric
                    // row+column update creates the pivot 2*m[i][j].
                    for t in 0..n {
                        let v = m[j][t].clone();
                        m[i][t] += v;
                    }
                    for row in m.iter_mut() {
                        let v = row[j].clone();
                        row[i] += v;
                    }
                    if i != k {
                        swap_sym(&mut m, k, i);
                    }
                } else {
                    break;
                }
            }
            let pivot = m[k][k].clone();
            for i in (k + 1)..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &pivot;
                for t in 0..n {
                    let v = &m[k][t] * &f;
                    m[i][t] -= v;
                }
                for row in m.iter_mut() {
                    let v = &row[k] * &f;
                    row[i] -= v;
                }
            }
        }
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        for k in 0..n {
            if m[k][k].is_zero() {
                zero += 1;
            } else if m[k][k].is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        Ok((pos, neg, zero))
    }
}

/// A Gaussian integer, used only inside fraction-free elimination.
#[derive(Clone, PartialEq, Eq)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn zero() -> Self {
        GInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        GInt { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GInt) -> GInt {
        GInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Exact division; panics if the quotient is not a Gaussian integer,
    /// which cannot happen inside Bareiss elimination.
    fn div_exact(&self, d: &GInt) -> GInt {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re_num = &self.re * &d.re + &self.im * &d.im;
        let im_num = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = num_integer::Integer::div_rem(&re_num, &n);
        let (qi, ri) = num_integer::Integer::div_rem(&im_num, &n);
        debug_assert!(rr.is_zero() && ri.is_zero(), "inexact division in Bareiss step");
        GInt { re: qr, im: qi }
    }
}

/// Scales a row to Gaussian integers by the least common denominator.
fn clear_row(m: &Mat, i: usize) -> Vec<GInt> {
    let mut lcm = BigInt::one();
    for j in 0..m.ncols() {
        let z = m.at(i, j);
        lcm = num_integer::Integer::lcm(&lcm, z.re.denom());
        lcm = num_integer::Integer::lcm(&lcm, z.im.denom());
    }
    (0..m.ncols())
        .map(|j| {
            let z = m.at(i, j);
            GInt {
                re: z.re.numer() * (&lcm / z.re.denom()),
                im: z.im.numer() * (&lcm / z.im.denom()),
            }
        })
        .collect()
}

/// A linear subspace of `Q(i)^n`, stored as the reduced row echelon basis,
/// so equality of subspaces is equality of representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Gauss>]) -> Subspace {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        if vectors.is_empty() {
            return Subspace { ambient, basis: Mat::zero(0, ambient), pivots: Vec::new() };
        }
        let (r, pivots) = Mat::from_rows(vectors.to_vec()).rref();
        let dim = pivots.len();
        let basis = Mat::from_fn(dim, ambient, |i, j| r.at(i, j).clone());
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace::from_spanning(ambient, &[])
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows: Vec<Vec<Gauss>> = (0..ambient)
            .map(|i| {
                let mut v = vec![Gauss::zero(); ambient];
                v[i] = Gauss::one();
                v
            })
            .collect();
        Subspace::from_spanning(ambient, &rows)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Gauss>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let ps: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ambient).filter(|c| !ps.contains(c)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo the subspace: pivot
    /// coordinates are eliminated.
    pub fn reduce(&self, v: &[Gauss]) -> Vec<Gauss> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for j in 0..self.ambient {
                let t = &f * self.basis.at(i, j);
                w[j] = &w[j] - &t;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Gauss]) -> bool {
        self.reduce(v).iter().all(Gauss::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_spanning(self.ambient, &rows))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = self.basis.transpose().hstack(&other.basis.transpose());
        let ker = stacked.kernel();
        let mut rows = Vec::new();
        for k in 0..ker.dim() {
            let coeffs = ker.basis.row(k);
            let mut v = vec![Gauss::zero(); self.ambient];
            for i in 0..da {
                for j in 0..self.ambient {
                    let t = &coeffs[i] * self.basis.at(i, j);
                    v[j] = &v[j] + &t;
                }
            }
            rows.push(v);
        }
        Ok(Subspace::from_spanning(self.ambient, &rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::{gauss, gauss_i, rat_int};

    fn gv(vals: &[i64]) -> Vec<Gauss> {
        vals.iter().map(|&v| gauss(v, 0)).collect()
    }

    #[test]
    fn rank_and_rref() {
        let m = Mat::from_rows(vec![gv(&[1, 2, 3]), gv(&[2, 4, 6]), gv(&[0, 1, 1])]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), m.transpose().rank());
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.at(0, 2), &gauss(1, 0));
        assert_eq!(r.at(1, 2), &gauss(1, 0));
    }

    #[test]
    fn complex_rank() {
        // (1, i) and (i, -1) are parallel over Q(i).
        let m = Mat::from_rows(vec![
            vec![gauss(1, 0), gauss_i()],
            vec![gauss_i(), gauss(-1, 0)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let m = Mat::from_rows(vec![gv(&[1, 1, 0]), gv(&[0, 0, 1])]);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&[gauss(1, 0), gauss(-1, 0), gauss(0, 0)]));
        let (x, k) = m.solve_affine(&gv(&[3, 5]));
        let x = x.unwrap();
        assert_eq!(m.mul_vec(&x), gv(&[3, 5]));
        assert_eq!(k.dim(), 1);
        let (none, _) = Mat::from_rows(vec![gv(&[1, 1]), gv(&[1, 1])]).solve_affine(&gv(&[0, 1]));
        assert!(none.is_none());
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat::from_rows(vec![gv(&[2, 1]), gv(&[1, 1])]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(m.det(), gauss(1, 0));
        assert!(Mat::from_rows(vec![gv(&[1, 2]), gv(&[2, 4])]).inverse().is_none());
    }

    #[test]
    fn signature_diag_and_hyperbolic() {
        let d = Mat::from_rows(vec![gv(&[2, 0, 0]), gv(&[0, -3, 0]), gv(&[0, 0, 0])]);
        assert_eq!(d.signature_symmetric().unwrap(), (1, 1, 1));
        // Zero diagonal with off-diagonal entry: the hyperbolic plane.
        let h = Mat::from_rows(vec![gv(&[0, 1]), gv(&[1, 0])]);
        assert_eq!(h.signature_symmetric().unwrap(), (1, 1, 0));
    }

    #[test]
    fn signature_rejects_bad_input() {
        let ns = Mat::from_rows(vec![gv(&[0, 1]), gv(&[2, 0])]);
        assert!(matches!(ns.signature_symmetric(), Err(Error::NotSymmetric { .. })));
        let ni = Mat::from_rows(vec![
            vec![gauss(0, 1), gauss(0, 0)],
            vec![gauss(0, 0), gauss(1, 0)],
        ]);
        assert!(matches!(ni.signature_symmetric(), Err(Error::NotReal { .. })));
    }

    #[test]
    fn subspace_algebra() {
        let a = Subspace::from_spanning(3, &[gv(&[1, 0, 0]), gv(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, &[gv(&[0, 1, 0]), gv(&[0, 0, 1])]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 3);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&gv(&[0, 1, 0])));
        let other = Subspace::zero(4);
        assert!(matches!(a.sum(&other), Err(Error::AmbientMismatch { left: 3, right: 4 })));
    }

    #[test]
    fn subspace_reduce_is_canonical() {
        let a = Subspace::from_spanning(3, &[gv(&[1, 2, 0])]);
        let r = a.reduce(&gv(&[2, 4, 1]));
        assert_eq!(r, gv(&[0, 0, 1]));
        assert!(a.contains(&gv(&[-3, -6, 0])));
        let _ = rat_int(0);
    }
}
