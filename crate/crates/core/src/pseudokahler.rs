//! Pseudo-Kahler solver and the geometry it certifies.
//!
//! A real (1,1)-form on a coframe presentation is written
//!
//! ```text
//! F = sum_k i x_{k kb} w^{k kb}
//!   + sum_{k<l} (x_{k lb} w^{k lb} - conj(x_{k lb}) w^{l kb})
//! ```
//!
//! with real diagonal coefficients, so `F` has `n + n(n-1)` real coordinates.
//! Closedness is a real-linear condition (`dF = 0` reduces to the (2,1) part
//! for real (1,1)-forms), and `F^n != 0` is a degree-n polynomial condition on
//! the closed space; [`pk_solve`] computes the kernel exactly and either finds
//! a nondegenerate witness by a complete grid search or certifies that the
//! polynomial vanishes identically, so a `None` witness is a proof of
//! nonexistence of invariant pseudo-Kahler structures.
//!
//! Two bilinear forms appear downstream and they differ by a global sign.  The
//! adapted real matrix handed to signature computations is `g(x,y) = F(x,Jy)`,
//! which is the one whose entries and leading minors the classification
//! results are stated in.  The complexified frame engine behind
//! [`levi_civita`] and [`curvature`] uses `g(U,V) = F(JU,V)`, the convention
//! under which the recorded connection and curvature components hold.  The
//! sign does not affect the connection, flatness, Ricci-flatness, or
//! neutrality of the signature.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde_json::json;

use crate::cpxstruct::{CoframePresentation, RealJ};
use crate::error::{Error, Result};
use crate::exactnum::{gauss_i, rat_int, Gauss, Mat, Rat, Subspace};
use crate::forms::KForm;

/// Coefficient matrix of a real (1,1)-form.  Diagonal entries are the real
/// numbers x_{k kb}; the strict lower triangle mirrors the upper one through
/// `x[l][k] = -conj(x[k][l])`, which is exactly the condition for the
/// associated 2-form to be real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermitian11Form {
    n: usize,
    x: Mat,
}

/// Number of real coordinates of a (1,1)-form on n complex generators.
pub fn coord_count(n: usize) -> usize {
    n + n * (n - 1)
}

impl Hermitian11Form {
    pub fn new(x: Mat) -> Result<Self> {
        let n = x.nrows();
        assert_eq!(n, x.ncols());
        for k in 0..n {
            if !x.at(k, k).is_real() {
                return Err(Error::NotReal { i: k, j: k });
            }
            for l in (k + 1)..n {
                if x.at(l, k) != &-x.at(k, l).conj() {
                    return Err(Error::NotSymmetric { i: l, j: k });
                }
            }
        }
        Ok(Hermitian11Form { n, x })
    }

    pub fn zero(n: usize) -> Self {
        Hermitian11Form { n, x: Mat::zero(n, n) }
    }

    /// Coordinate order: the n diagonal entries, then (Re, Im) of each strict
    /// upper entry in row-major order.
    pub fn from_real_coords(n: usize, coords: &[Rat]) -> Self {
        assert_eq!(coords.len(), coord_count(n));
        let mut x = Mat::zero(n, n);
        for k in 0..n {
            x.set(k, k, Gauss::from_rat(coords[k].clone()));
        }
        let mut pos = n;
        for k in 0..n {
            for l in (k + 1)..n {
                let v = Gauss::from_parts(coords[pos].clone(), coords[pos + 1].clone());
                pos += 2;
                x.set(l, k, -v.conj());
                x.set(k, l, v);
            }
        }
        Hermitian11Form { n, x }
    }

    pub fn real_coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(coord_count(self.n));
        for k in 0..self.n {
            out.push(self.x.at(k, k).re.clone());
        }
        for k in 0..self.n {
            for l in (k + 1)..self.n {
                out.push(self.x.at(k, l).re.clone());
                out.push(self.x.at(k, l).im.clone());
            }
        }
        out
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    /// x_{k lb} for 0-based k <= l; entries below the diagonal follow by the
    /// reality convention.
    pub fn entry(&self, k: usize, l: usize) -> &Gauss {
        self.x.at(k, l)
    }

    /// The 2-form in complex coframe indexing (index k is w^k, n+k its
    /// conjugate).
    pub fn form(&self) -> KForm {
        let n = self.n;
        let mut f = KForm::zero(2 * n, 2);
        for k in 0..n {
            let c = &gauss_i() * self.x.at(k, k);
            if !c.is_zero() {
                f.add_term(vec![(k + 1) as u8, (n + k + 1) as u8], c);
            }
        }
        for k in 0..n {
            for l in 0..n {
                if k == l || self.x.at(k, l).is_zero() {
                    continue;
                }
                // x[k][l] w^{k lb}; the lower triangle already carries the
                // negated conjugates
                f.add_term(vec![(k + 1) as u8, (n + l + 1) as u8], self.x.at(k, l).clone());
            }
        }
        f
    }

    /// `H[k][l] = F(Z_k, conj Z_l)` in the dual (1,0) frame.
    pub fn pairing_matrix(&self) -> Mat {
        Mat::from_fn(self.n, self.n, |k, l| {
            if k == l {
                &gauss_i() * self.x.at(k, k)
            } else {
                self.x.at(k, l).clone()
            }
        })
    }
}

/// A closed nondegenerate real (1,1)-form together with its adapted-basis
/// metric and signature.
#[derive(Clone, Debug)]
pub struct PKSolution {
    pub form: Hermitian11Form,
    /// The witness point in the real coordinates of the form.
    pub coords: Vec<Rat>,
    /// `g(x,y) = F(x,Jy)` on the canonical real basis; symmetric.
    pub metric: Mat,
    /// Inertia (positive, negative, zero); the zero count is 0 here.
    pub signature: (usize, usize, usize),
    /// Human-readable description of the structure the form lives on.
    pub params_used: String,
}

fn basis_form(n: usize, j: usize) -> Hermitian11Form {
    let mut coords = vec![Rat::zero(); coord_count(n)];
    coords[j] = Rat::one();
    Hermitian11Form::from_real_coords(n, &coords)
}

/// The (2,1) parts of the differentials of the coordinate basis forms.
fn del_basis(p: &CoframePresentation) -> Vec<KForm> {
    let n = p.generators();
    (0..coord_count(n))
        .map(|j| {
            let df = p.d(&basis_form(n, j).form());
            df.bigraded_parts(n)
                .remove(&(2, 1))
                .unwrap_or_else(|| KForm::zero(2 * n, 3))
        })
        .collect()
}

/// Exact kernel of `del F = 0` over the real coordinates of the form.
pub fn closed_space(p: &CoframePresentation) -> Subspace {
    let n = p.generators();
    let m = coord_count(n);
    let dels = del_basis(p);
    let monomials: BTreeSet<Vec<u8>> = dels
        .iter()
        .flat_map(|f| f.terms().map(|(idx, _)| idx.clone()))
        .collect();
    if monomials.is_empty() {
        return Mat::zero(1, m).kernel();
    }
    let mut rows = Vec::with_capacity(2 * monomials.len());
    for idx in &monomials {
        let coeffs: Vec<Gauss> = dels.iter().map(|f| f.coeff(idx)).collect();
        rows.push(coeffs.iter().map(|c| Gauss::from_rat(c.re.clone())).collect());
        rows.push(coeffs.iter().map(|c| Gauss::from_rat(c.im.clone())).collect());
    }
    Mat::from_rows(rows).kernel()
}

fn real_vector(v: &[Gauss]) -> Vec<Rat> {
    v.iter()
        .map(|c| {
            debug_assert!(c.is_real(), "kernel of a real system must be real");
            c.re.clone()
        })
        .collect()
}

/// Expanded coefficient of `F^n` on the closed space: the polynomial's terms
/// as (sorted multiset of basis indices, coefficient).
fn volume_polynomial(kernel_forms: &[KForm], n: usize) -> Vec<(Vec<usize>, Gauss)> {
    let full: Vec<u8> = (1..=(2 * n) as u8).collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        forms: &[KForm],
        n: usize,
        full: &[u8],
        start: usize,
        acc: &KForm,
        stack: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Gauss)>,
    ) {
        if stack.len() == n {
            let c = acc.coeff(full);
            if !c.is_zero() {
                // multinomial factor n! / prod(multiplicities!)
                let mut mult = 1u64;
                let mut fact = 1u64;
                let mut run = 1u64;
                for w in 1..stack.len() {
                    fact *= (w + 1) as u64;
                    run = if stack[w] == stack[w - 1] { run + 1 } else { 1 };
                    mult *= run;
                }
                let scale = Gauss::from_rat(rat_int((fact / mult) as i64));
                out.push((stack.clone(), &c * &scale));
            }
            return;
        }
        for i in start..forms.len() {
            let next = if stack.is_empty() { forms[i].clone() } else { acc.wedge(&forms[i]) };
            if !stack.is_empty() && next.is_zero() {
                continue;
            }
            stack.push(i);
            rec(forms, n, full, i, &next, stack, out);
            stack.pop();
        }
    }
    rec(
        kernel_forms,
        n,
        &full,
        0,
        &KForm::zero(2 * n, 2),
        &mut stack,
        &mut out,
    );
    out
}

fn eval_poly(poly: &[(Vec<usize>, Gauss)], point: &[Rat]) -> Gauss {
    let mut total = Gauss::zero();
    for (idxs, c) in poly {
        let mut term = c.clone();
        for &i in idxs {
            term = &term * &Gauss::from_rat(point[i].clone());
        }
        total = &total + &term;
    }
    total
}

/// Upper bound on how many nondegenerate grid points are inspected while
/// hunting for a neutral-signature one before settling for the first hit.
const NEUTRAL_SCAN_CAP: usize = 600;

/// Solves `dF = 0` over real (1,1)-forms and searches for a nondegenerate
/// point.  `None` in the second slot certifies that `F^n` vanishes identically
/// on the closed space, hence no invariant pseudo-Kahler structure exists.
///
/// The grid sweep is complete: a nonzero polynomial of degree at most n per
/// variable cannot vanish on a full grid with more than n values per variable,
/// and restricting to the support of any surviving monomial keeps the
/// polynomial nonzero.  Among nondegenerate points the search prefers one of
/// neutral signature (the case of interest downstream), falling back to the
/// first hit after a bounded scan.
pub fn pk_solve(p: &CoframePresentation) -> (Subspace, Option<PKSolution>) {
    let n = p.generators();
    let space = closed_space(p);
    let basis: Vec<Vec<Rat>> = space.basis_rows().iter().map(|v| real_vector(v)).collect();
    let forms: Vec<KForm> = basis
        .iter()
        .map(|coords| Hermitian11Form::from_real_coords(n, coords).form())
        .collect();
    // cross-check: the del-only kernel really is d-closed
    for f in &forms {
        debug_assert!(p.d(f).is_zero(), "kernel form is not d-closed");
    }
    let poly = volume_polynomial(&forms, n);
    if poly.is_empty() {
        return (space, None);
    }
    let solution_of = |t: &[Rat]| -> PKSolution {
        let mut coords = vec![Rat::zero(); coord_count(n)];
        for (i, b) in basis.iter().enumerate() {
            for (c, v) in coords.iter_mut().zip(b.iter()) {
                *c += &t[i] * v;
            }
        }
        let form = Hermitian11Form::from_real_coords(n, &coords);
        solution_at(p, &form).expect("grid witness has F^n != 0")
    };
    let supports: BTreeSet<Vec<usize>> = poly
        .iter()
        .map(|(idxs, _)| {
            let mut s = idxs.clone();
            s.dedup();
            s
        })
        .collect();
    let values: Vec<i64> = vec![1, -1, 2, -2, 3, -3, 4, 0];
    let mut fallback: Option<PKSolution> = None;
    let mut inspected = 0usize;
    for support in &supports {
        let mut odo = vec![0usize; support.len()];
        loop {
            let mut point = vec![Rat::zero(); basis.len()];
            for (slot, &var) in support.iter().enumerate() {
                point[var] = rat_int(values[odo[slot]]);
            }
            if !eval_poly(&poly, &point).is_zero() {
                let sol = solution_of(&point);
                if sol.signature.0 == sol.signature.1 {
                    return (space, Some(sol));
                }
                if fallback.is_none() {
                    fallback = Some(sol);
                }
                inspected += 1;
                if inspected >= NEUTRAL_SCAN_CAP {
                    return (space, fallback);
                }
            }
            let mut carry = 0;
            while carry < odo.len() {
                odo[carry] += 1;
                if odo[carry] < values.len() {
                    break;
                }
                odo[carry] = 0;
                carry += 1;
            }
            if carry == odo.len() {
                break;
            }
        }
    }
    debug_assert!(fallback.is_some(), "nonzero volume polynomial must hit the grid");
    (space, fallback)
}

/// Validates a candidate form (closed, nondegenerate) and packages it with its
/// metric and signature.
pub fn solution_at(p: &CoframePresentation, form: &Hermitian11Form) -> Result<PKSolution> {
    let f = form.form();
    let df = p.d(&f);
    if !df.is_zero() {
        return Err(Error::NotIntegrable {
            residual: format!("dF != 0 for the candidate form ({} terms)", df.terms().count()),
        });
    }
    let (metric, signature) = metric_and_signature(p, form)?;
    Ok(PKSolution {
        form: form.clone(),
        coords: form.real_coords(),
        metric,
        signature,
        params_used: p.equations(false).join("; "),
    })
}

/// The metric `g(x,y) = F(x,Jy)` on the canonical real basis, plus its
/// inertia.  This is the matrix whose entries the eight-dimensional
/// classification lists; it is minus the bilinear form used by the
/// complex-frame engine.
pub fn metric_and_signature(
    p: &CoframePresentation,
    form: &Hermitian11Form,
) -> Result<(Mat, (usize, usize, usize))> {
    let n = p.generators();
    assert_eq!(form.generators(), n);
    let dim = 2 * n;
    let mut rows = Vec::with_capacity(dim);
    for k in 0..n {
        let mut row = vec![Gauss::zero(); dim];
        row[2 * k] = Gauss::one();
        row[2 * k + 1] = gauss_i();
        rows.push(row);
    }
    for k in 0..n {
        let mut row = vec![Gauss::zero(); dim];
        row[2 * k] = Gauss::one();
        row[2 * k + 1] = -gauss_i();
        rows.push(row);
    }
    let f_real = form.form().substitute(&rows, dim);
    let mut f_mat = Mat::zero(dim, dim);
    for (idx, c) in f_real.terms() {
        debug_assert!(c.is_real(), "realified (1,1)-form has real coefficients");
        let (a, b) = (idx[0] as usize - 1, idx[1] as usize - 1);
        f_mat.set(a, b, c.clone());
        f_mat.set(b, a, -c);
    }
    let j = RealJ::canonical(dim);
    let g = f_mat.mul(j.mat());
    if g.det().is_zero() {
        return Err(Error::Degenerate {
            what: "metric of the candidate (1,1)-form".to_string(),
        });
    }
    let signature = g.signature_symmetric()?;
    Ok((g, signature))
}

/// Levi-Civita data in the complexified frame `(Z_1..Z_n, conj Z_1..conj Z_n)`.
#[derive(Clone, Debug)]
pub struct ConnectionTable {
    n: usize,
    gram: Mat,
    brackets: Vec<Vec<Vec<Gauss>>>,
    gamma: Vec<Vec<Vec<Gauss>>>,
}

impl ConnectionTable {
    pub fn frame_dim(&self) -> usize {
        2 * self.n
    }

    /// Coefficients of `nabla_{W_a} W_b` over the frame, 0-based indices.
    pub fn nabla(&self, a: usize, b: usize) -> &[Gauss] {
        &self.gamma[a][b]
    }

    /// Coefficients of `[W_a, W_b]` over the frame.
    pub fn bracket(&self, a: usize, b: usize) -> &[Gauss] {
        &self.brackets[a][b]
    }

    /// Frame Gram matrix of `g(U,V) = F(JU,V)`.
    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    fn inner(&self, v: &[Gauss], c: usize) -> Gauss {
        let mut s = Gauss::zero();
        for (m, x) in v.iter().enumerate() {
            if !x.is_zero() {
                s = &s + &(x * self.gram.at(m, c));
            }
        }
        s
    }
}

/// Frame Gram matrix `[[0, M], [M^T, 0]]` with `M[k][l] = i F(Z_k, conj Z_l)`.
fn complex_gram(form: &Hermitian11Form) -> Mat {
    let n = form.generators();
    let h = form.pairing_matrix();
    let m = h.map(|c| &gauss_i() * c);
    Mat::from_fn(2 * n, 2 * n, |a, b| match (a < n, b < n) {
        (true, false) => m.at(a, b - n).clone(),
        (false, true) => m.at(b, a - n).clone(),
        _ => Gauss::zero(),
    })
}

/// Solves the Koszul formula exactly on the complexified frame and verifies
/// that the result is torsion-free, metric, and complex-linear.
pub fn levi_civita(p: &CoframePresentation, form: &Hermitian11Form) -> Result<ConnectionTable> {
    let n = p.generators();
    assert_eq!(form.generators(), n);
    let dim = 2 * n;
    let mut brackets = vec![vec![vec![Gauss::zero(); dim]; dim]; dim];
    for a in 0..dim {
        for b in (a + 1)..dim {
            for m in 1..=dim {
                let c = p.d_generator(m).coeff(&[(a + 1) as u8, (b + 1) as u8]);
                if !c.is_zero() {
                    brackets[a][b][m - 1] = -&c;
                    brackets[b][a][m - 1] = c;
                }
            }
        }
    }
    let gram = complex_gram(form);
    let gram_inv = gram.inverse().ok_or_else(|| Error::Degenerate {
        what: "frame Gram matrix".to_string(),
    })?;
    let half = Gauss::from_rat(Rat::new(1.into(), 2.into()));
    let table = {
        let inner = |v: &[Gauss], c: usize| {
            let mut s = Gauss::zero();
            for (m, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    s = &s + &(x * gram.at(m, c));
                }
            }
            s
        };
        let mut gamma = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let rhs: Vec<Gauss> = (0..dim)
                    .map(|c| {
                        let t1 = inner(&brackets[a][b], c);
                        let t2 = inner(&brackets[b][c], a);
                        let t3 = inner(&brackets[c][a], b);
                        &(&(&t1 - &t2) + &t3) * &half
                    })
                    .collect();
                gamma[a][b] = gram_inv.mul_vec(&rhs);
            }
        }
        ConnectionTable { n, gram, brackets, gamma }
    };
    let fail = |detail: String| {
        Err(Error::OracleDisagreement {
            what: "Levi-Civita verification".to_string(),
            detail,
        })
    };
    for a in 0..dim {
        for b in 0..dim {
            for m in 0..dim {
                let t = &(&table.gamma[a][b][m] - &table.gamma[b][a][m]) - &table.brackets[a][b][m];
                if !t.is_zero() {
                    return fail(format!("torsion at ({a},{b})"));
                }
                if (b < n) != (m < n) && !table.gamma[a][b][m].is_zero() {
                    return fail(format!("nabla does not preserve types at ({a},{b})"));
                }
            }
            for c in 0..dim {
                let t = &table.inner(&table.gamma[a][b], c) + &table.inner(&table.gamma[a][c], b);
                if !t.is_zero() {
                    return fail(format!("nabla g != 0 at ({a},{b},{c})"));
                }
            }
        }
    }
    Ok(table)
}

/// Full curvature data: frame components, Ricci, and the two flatness flags.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    n: usize,
    riem: Vec<Vec<Vec<Vec<Gauss>>>>,
    gram: Mat,
    pub ricci: Mat,
    pub flat: bool,
    pub ricci_flat: bool,
}

impl CurvatureReport {
    /// `R(W_a, W_b, W_c, W_d) = g(R(W_a,W_b)W_c, W_d)`, 0-based frame indices.
    pub fn value(&self, a: usize, b: usize, c: usize, d: usize) -> Gauss {
        let mut s = Gauss::zero();
        for (m, x) in self.riem[a][b][c].iter().enumerate() {
            if !x.is_zero() {
                s = &s + &(x * self.gram.at(m, d));
            }
        }
        s
    }

    /// A frame tuple with nonvanishing curvature, trying the distinguished
    /// component `R(Z_1, conj Z_1, Z_2, conj Z_2)` first.
    pub fn nonflat_certificate(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.n;
        let dim = 2 * n;
        if n >= 2 && !self.value(0, n, 1, n + 1).is_zero() {
            return Some((0, n, 1, n + 1));
        }
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for d in 0..dim {
                        if !self.value(a, b, c, d).is_zero() {
                            return Some((a, b, c, d));
                        }
                    }
                }
            }
        }
        None
    }
}

/// Curvature of a Levi-Civita table via
/// `R(U,V)W = nabla_U nabla_V W - nabla_V nabla_U W - nabla_{[U,V]} W`.
pub fn curvature(conn: &ConnectionTable) -> CurvatureReport {
    let dim = conn.frame_dim();
    let mut riem = vec![vec![vec![vec![Gauss::zero(); dim]; dim]; dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let mut out = vec![Gauss::zero(); dim];
                for m in 0..dim {
                    let g1 = &conn.gamma[b][c][m];
                    if !g1.is_zero() {
                        for (p, v) in conn.gamma[a][m].iter().enumerate() {
                            if !v.is_zero() {
                                out[p] = &out[p] + &(g1 * v);
                            }
                        }
                    }
                    let g2 = &conn.gamma[a][c][m];
                    if !g2.is_zero() {
                        for (p, v) in conn.gamma[b][m].iter().enumerate() {
                            if !v.is_zero() {
                                out[p] = &out[p] - &(g2 * v);
                            }
                        }
                    }
                    let br = &conn.brackets[a][b][m];
                    if !br.is_zero() {
                        for (p, v) in conn.gamma[m][c].iter().enumerate() {
                            if !v.is_zero() {
                                out[p] = &out[p] - &(br * v);
                            }
                        }
                    }
                }
                riem[a][b][c] = out;
            }
        }
    }
    let flat = riem
        .iter()
        .flatten()
        .flatten()
        .flatten()
        .all(Gauss::is_zero);
    let ricci = Mat::from_fn(dim, dim, |b, c| {
        let mut s = Gauss::zero();
        for a in 0..dim {
            s = &s + &riem[a][b][c][a];
        }
        s
    });
    let ricci_flat = ricci.is_zero();
    CurvatureReport {
        n: conn.n,
        riem,
        gram: conn.gram.clone(),
        ricci,
        flat,
        ricci_flat,
    }
}

/// Whether the (n,0)-form `w^{1...n}` is parallel for the given connection.
pub fn parallel_volume_check(conn: &ConnectionTable) -> bool {
    let n = conn.n;
    let dim = 2 * n;
    for a in 0..dim {
        let mut total = KForm::zero(dim, n);
        for j in 0..n {
            for b in 0..dim {
                let coeff = -&conn.gamma[a][b][j];
                if coeff.is_zero() {
                    continue;
                }
                // w^1 ^ .. ^ w^{b+1} (slot j) ^ .. ^ w^n, resorted
                let mut idx: Vec<u8> = (1..=n as u8).collect();
                idx[j] = (b + 1) as u8;
                if idx.iter().filter(|&&x| x == (b + 1) as u8).count() > 1 {
                    continue;
                }
                let mut sign = Gauss::one();
                let mut sorted = idx.clone();
                for i in 0..sorted.len() {
                    for w in (i + 1)..sorted.len() {
                        if sorted[i] > sorted[w] {
                            sorted.swap(i, w);
                            sign = -sign;
                        }
                    }
                }
                total.add_term(sorted, &coeff * &sign);
            }
        }
        if !total.is_zero() {
            return false;
        }
    }
    true
}

/// A (2,0)-form on four complex generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Holo2Form {
    pub alpha: Gauss,
    pub beta: Gauss,
    pub gamma: Gauss,
    pub tau: Gauss,
    pub theta: Gauss,
    pub xi: Gauss,
}

/// Generator pairs in coordinate order: alpha..xi.
pub const HOLO2_PAIRS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

impl Holo2Form {
    pub fn from_coords(c: &[Gauss]) -> Self {
        assert_eq!(c.len(), 6);
        Holo2Form {
            alpha: c[0].clone(),
            beta: c[1].clone(),
            gamma: c[2].clone(),
            tau: c[3].clone(),
            theta: c[4].clone(),
            xi: c[5].clone(),
        }
    }

    pub fn coords(&self) -> [Gauss; 6] {
        [
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.tau.clone(),
            self.theta.clone(),
            self.xi.clone(),
        ]
    }

    pub fn to_form(&self) -> KForm {
        let mut f = KForm::zero(8, 2);
        for ((a, b), c) in HOLO2_PAIRS.iter().zip(self.coords()) {
            if !c.is_zero() {
                f.add_term(vec![*a, *b], c);
            }
        }
        f
    }

    /// The scalar q with `Omega^2 = 2 q w^{1234}`.
    pub fn square_scalar(&self) -> Gauss {
        &(&(&self.alpha * &self.xi) - &(&self.beta * &self.theta)) + &(&self.gamma * &self.tau)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.square_scalar().is_zero()
    }
}

fn holo2_polar(v: &[Gauss], w: &[Gauss]) -> Gauss {
    let half = Gauss::from_rat(Rat::new(1.into(), 2.into()));
    let s = &(&(&(&v[0] * &w[5]) + &(&w[0] * &v[5])) - &(&(&v[1] * &w[4]) + &(&w[1] * &v[4])))
        + &(&(&v[2] * &w[3]) + &(&w[2] * &v[3]));
    &s * &half
}

/// Solves `d Omega = 0` over (2,0)-forms and decides whether a nondegenerate
/// closed one exists.  The witness, when present, satisfies `Omega^2 != 0`.
pub fn complex_symplectic_solve(p: &CoframePresentation) -> (Subspace, Option<Holo2Form>) {
    assert_eq!(p.generators(), 4, "complex symplectic analysis is for n = 4");
    let basis_d: Vec<KForm> = HOLO2_PAIRS
        .iter()
        .map(|(a, b)| p.d(&KForm::monomial(8, &[*a, *b], Gauss::one())))
        .collect();
    let monomials: BTreeSet<Vec<u8>> = basis_d
        .iter()
        .flat_map(|f| f.terms().map(|(idx, _)| idx.clone()))
        .collect();
    let space = if monomials.is_empty() {
        Mat::zero(1, 6).kernel()
    } else {
        let rows: Vec<Vec<Gauss>> = monomials
            .iter()
            .map(|idx| basis_d.iter().map(|f| f.coeff(idx)).collect())
            .collect();
        Mat::from_rows(rows).kernel()
    };
    let basis = space.basis_rows();
    let mut witness = None;
    'outer: for i in 0..basis.len() {
        for j in i..basis.len() {
            if !holo2_polar(&basis[i], &basis[j]).is_zero() {
                let v: Vec<Gauss> = if i == j {
                    basis[i].clone()
                } else {
                    basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect()
                };
                witness = Some(Holo2Form::from_coords(&v));
                break 'outer;
            }
        }
    }
    if let Some(w) = &witness {
        debug_assert!(w.is_nondegenerate());
        debug_assert!(p.d(&w.to_form()).is_zero());
    }
    (space, witness)
}

/// Coordinates that vanish identically on a subspace; on the closed space of
/// (2,0)-forms this is the degeneracy certificate (tau, theta, xi forced to
/// zero means every closed form has square zero).
pub fn forced_zero_coords(space: &Subspace) -> Vec<usize> {
    let basis = space.basis_rows();
    (0..space.ambient())
        .filter(|&j| basis.iter().all(|v| v[j].is_zero()))
        .collect()
}

/// Full analysis of one presentation as a JSON document.
pub fn json_report(algebra: &str, j_params: &str, p: &CoframePresentation) -> serde_json::Value {
    let (space, witness) = pk_solve(p);
    let complex_symplectic = if p.generators() == 4 {
        let (_, cs) = complex_symplectic_solve(p);
        cs.is_some()
    } else {
        false
    };
    let mut report = json!({
        "algebra": algebra,
        "J_params": j_params,
        "pk_exists": witness.is_some(),
        "kernel_dim": space.dim(),
        "witness": serde_json::Value::Null,
        "signature": serde_json::Value::Null,
        "ricci_flat": serde_json::Value::Null,
        "flat": serde_json::Value::Null,
        "complex_symplectic": complex_symplectic,
    });
    if let Some(sol) = witness {
        let coords: Vec<String> = sol.coords.iter().map(|c| c.to_string()).collect();
        report["witness"] = json!(coords);
        report["signature"] = json!([sol.signature.0, sol.signature.1]);
        if let Ok(conn) = levi_civita(p, &sol.form) {
            let curv = curvature(&conn);
            report["ricci_flat"] = json!(curv.ricci_flat);
            report["flat"] = json!(curv.flat);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_snn, build_wnn, SnNParams, WnNParams};
    use crate::exactnum::{gauss, rat};

    fn wnn(e: i64, d: i64, nu: i64, a: i64, b: Gauss) -> CoframePresentation {
        build_wnn(&WnNParams::new(e, d, nu, rat_int(a), b).unwrap())
    }

    /// Coordinates of the kernel family for the weakly non-nilpotent
    /// pseudo-Kahler case, in the order diag(4) then off-diagonal (Re, Im).
    fn wnn_kernel_coords(u: i64, v: i64, r: i64, s: i64, a: i64, d: i64) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); 16];
        c[0] = rat_int(u);
        c[1] = rat_int(-s);
        c[2] = rat_int(-d * r);
        c[4] = rat_int(v);
        c[6] = rat_int(a * d * s);
        c[7] = rat_int(a * d * r);
        c[8] = rat_int(r);
        c[9] = rat_int(s);
        c
    }

    #[test]
    fn hermitian_coords_round_trip() {
        let mut coords = vec![Rat::zero(); 16];
        for (i, c) in coords.iter_mut().enumerate() {
            *c = rat_int(i as i64 + 1);
        }
        let f = Hermitian11Form::from_real_coords(4, &coords);
        assert_eq!(f.real_coords(), coords);
        let g = Hermitian11Form::new(f.x.clone()).unwrap();
        assert_eq!(f, g);
        // the associated 2-form is real
        assert_eq!(f.form().conj_bar(4), f.form());

        let mut bad = f.x.clone();
        bad.set(0, 0, gauss_i());
        assert!(matches!(Hermitian11Form::new(bad), Err(Error::NotReal { i: 0, j: 0 })));
        let mut bad = f.x.clone();
        bad.set(1, 0, Gauss::one());
        assert!(matches!(Hermitian11Form::new(bad), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn wnn_kernel_matches_the_classification() {
        for (a, b) in [(1, Gauss::zero()), (0, Gauss::one()), (1, gauss(0, 1))] {
            for d in [1i64, -1] {
                let p = wnn(0, d, 1, a, b.clone());
                let (space, wit) = pk_solve(&p);
                assert_eq!(space.dim(), 4, "a={a} d={d}");
                for (u, v, r, s) in [(1, 0, 1, 1), (0, 1, 2, -1), (3, -2, -1, 5)] {
                    let coords = wnn_kernel_coords(u, v, r, s, a, d);
                    let vec: Vec<Gauss> =
                        coords.iter().map(|c| Gauss::from_rat(c.clone())).collect();
                    assert!(space.contains(&vec), "({u},{v},{r},{s}) a={a} d={d}");
                }
                let sol = wit.expect("nondegenerate witness exists");
                assert_eq!(sol.signature.2, 0);
            }
        }
    }

    #[test]
    fn no_witness_off_the_pk_branch() {
        // epsilon = 1 kills closedness of every nondegenerate form
        let (_, wit) = pk_solve(&wnn(1, 1, 1, 1, Gauss::zero()));
        assert!(wit.is_none());
        // nu = 0 as well
        let (_, wit) = pk_solve(&wnn(0, 1, 0, 0, Gauss::zero()));
        assert!(wit.is_none());
        let (_, wit) = pk_solve(&wnn(1, -1, 0, 1, Gauss::from_rat(rat(7, 2))));
        assert!(wit.is_none());
    }

    #[test]
    fn snn_family_i_never_pk() {
        for p in [
            SnNParams::family_i(1, 0, 0, rat_int(1), rat_int(0)).unwrap(),
            SnNParams::family_i(1, 1, 1, rat_int(1), rat_int(2)).unwrap(),
            SnNParams::family_i(-1, 1, 0, rat_int(0), rat_int(3)).unwrap(),
            SnNParams::family_i(-1, 0, 1, rat(1, 2), rat_int(-1)).unwrap(),
        ] {
            let (_, wit) = pk_solve(&build_snn(&p));
            assert!(wit.is_none(), "{}", p.label());
        }
    }

    #[test]
    fn snn_family_ii_pk_exactly_at_the_special_tuple() {
        let good = SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(0)).unwrap();
        let p = build_snn(&good);
        let (space, wit) = pk_solve(&p);
        assert_eq!(space.dim(), 4);
        // family: x_{1 1b}=r, x_{4 4b}=s, x_{2 3b}=-s, x_{1 2b}=u, x_{1 3b}=v
        let mut coords = vec![Rat::zero(); 16];
        coords[0] = rat_int(2);
        coords[3] = rat_int(3);
        coords[10] = rat_int(-3);
        coords[4] = rat_int(5);
        coords[6] = rat_int(7);
        let vec: Vec<Gauss> = coords.iter().map(|c| Gauss::from_rat(c.clone())).collect();
        assert!(space.contains(&vec));
        assert!(wit.is_some());
        // F^4 = -24 r s^3 vol at r = s = 1
        let mut c = vec![Rat::zero(); 16];
        c[0] = rat_int(1);
        c[3] = rat_int(1);
        c[10] = rat_int(-1);
        let f = Hermitian11Form::from_real_coords(4, &c).form();
        let f4 = f.wedge(&f).wedge(&f.wedge(&f));
        assert_eq!(f4.coeff(&[1, 2, 3, 4, 5, 6, 7, 8]), gauss(-24, 0));

        for bad in [
            SnNParams::family_ii(1, 0, 1, rat_int(0), rat_int(0)).unwrap(),
            SnNParams::family_ii(1, 0, 0, rat_int(1), rat_int(0)).unwrap(),
            SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(2)).unwrap(),
            SnNParams::family_ii(0, 1, 0, rat_int(0), rat_int(0)).unwrap(),
            SnNParams::family_ii(1, 1, 0, rat_int(-2), rat_int(1)).unwrap(),
        ] {
            let (_, wit) = pk_solve(&build_snn(&bad));
            assert!(wit.is_none(), "{}", bad.label());
        }
    }

    #[test]
    fn metric_matches_the_printed_matrix() {
        for (d, a, b) in [(1i64, 0i64, Gauss::one()), (-1, 1, gauss(0, 2)), (1, 1, Gauss::zero())]
        {
            let p = wnn(0, d, 1, a, b);
            let (u, v, r, s) = (5i64, 7, 2, 3);
            let form = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(u, v, r, s, a, d));
            let (g, _) = metric_and_signature(&p, &form).unwrap();
            let e = |x: i64| rat_int(2 * x);
            let rows: Vec<Vec<Rat>> = vec![
                vec![e(u), e(0), e(0), e(-v), e(a * d * r), e(-a * d * s), e(s), e(-r)],
                vec![e(0), e(u), e(v), e(0), e(a * d * s), e(a * d * r), e(r), e(s)],
                vec![e(0), e(v), e(-s), e(0), e(0), e(0), e(0), e(0)],
                vec![e(-v), e(0), e(0), e(-s), e(0), e(0), e(0), e(0)],
                vec![e(a * d * r), e(a * d * s), e(0), e(0), e(-d * r), e(0), e(0), e(0)],
                vec![e(-a * d * s), e(a * d * r), e(0), e(0), e(0), e(-d * r), e(0), e(0)],
                vec![e(s), e(r), e(0), e(0), e(0), e(0), e(0), e(0)],
                vec![e(-r), e(s), e(0), e(0), e(0), e(0), e(0), e(0)],
            ];
            let expected =
                Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(Gauss::from_rat).collect()).collect());
            assert_eq!(g, expected, "d={d} a={a}");
        }
    }

    #[test]
    fn signatures_of_the_golden_points() {
        let p = wnn(0, 1, 1, 0, Gauss::zero());
        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(0, 0, 1, -1, 0, 1));
        let (_, sig) = metric_and_signature(&p, &f).unwrap();
        assert_eq!(sig, (4, 4, 0));
        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(0, 0, 1, 1, 0, 1));
        let (_, sig) = metric_and_signature(&p, &f).unwrap();
        assert_eq!(sig, (2, 6, 0));

        let p = wnn(0, 1, 1, 1, Gauss::zero());
        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(1, 0, 1, -1, 1, 1));
        let (g, sig) = metric_and_signature(&p, &f).unwrap();
        assert_eq!(sig, (4, 4, 0));
        // leading minors confirm the four sign changes
        let minors: Vec<Gauss> = g.leading_principal_minors();
        let expected: Vec<i64> = vec![2, 4, 8, 16, -96, 576, -768, 1024];
        for (m, x) in minors.iter().zip(expected) {
            assert_eq!(m, &gauss(x, 0));
        }

        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(0, 0, 0, 1, 0, 1));
        assert!(matches!(
            metric_and_signature(&p, &f),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn connection_reproduces_the_recorded_derivatives() {
        let p = wnn(0, 1, 1, 0, Gauss::zero());
        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(0, 1, 1, 1, 0, 1));
        let conn = levi_civita(&p, &f).unwrap();
        let zi = |k: usize| k - 1;
        let zb = |k: usize| 4 + k - 1;
        // nabla_{conj Z_1} Z_2 = -i delta Z_3
        let v = conn.nabla(zb(1), zi(2));
        let mut expect = vec![Gauss::zero(); 8];
        expect[2] = gauss(0, -1);
        assert_eq!(v, &expect[..]);
        // nabla_{Z_1} Z_2 = nabla_{Z_4} Z_2 = nabla_{conj Z_4} Z_2 = 0
        for a in [zi(1), zi(4), zb(4)] {
            assert!(conn.nabla(a, zi(2)).iter().all(Gauss::is_zero));
        }
        // nabla_{Z_1} Z_3 = -(ir/s) Z_2 + (irv/(s(r-is))) Z_4 at r=s=v=1
        let v = conn.nabla(zi(1), zi(3));
        let mut expect = vec![Gauss::zero(); 8];
        expect[1] = gauss(0, -1);
        expect[3] = Gauss::from_parts(rat(-1, 2), rat(1, 2));
        assert_eq!(v, &expect[..]);
    }

    #[test]
    fn curvature_anchor_and_ricci_flatness() {
        let p = wnn(0, 1, 1, 0, Gauss::zero());
        let f = Hermitian11Form::from_real_coords(4, &wnn_kernel_coords(0, 0, 2, 1, 0, 1));
        let conn = levi_civita(&p, &f).unwrap();
        let curv = curvature(&conn);
        assert_eq!(curv.value(0, 4, 1, 5), gauss(-2, 0));
        assert!(!curv.flat);
        assert!(curv.ricci_flat);
        assert_eq!(curv.nonflat_certificate(), Some((0, 4, 1, 5)));
        assert!(parallel_volume_check(&conn));
        // curvature symmetries on a few frame tuples
        for (a, b, c, d) in [(0, 4, 1, 5), (1, 2, 3, 4), (0, 1, 4, 5)] {
            assert_eq!(curv.value(a, b, c, d), -curv.value(b, a, c, d));
            assert_eq!(curv.value(a, b, c, d), -curv.value(a, b, d, c));
        }
    }

    #[test]
    fn snn_witness_is_parallel_too() {
        let p = build_snn(&SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(0)).unwrap());
        let (_, wit) = pk_solve(&p);
        let sol = wit.unwrap();
        let conn = levi_civita(&p, &sol.form).unwrap();
        assert!(parallel_volume_check(&conn));
        let curv = curvature(&conn);
        assert!(curv.ricci_flat);
    }

    #[test]
    fn flat_torus() {
        let p = CoframePresentation::torus(4);
        let (space, wit) = pk_solve(&p);
        assert_eq!(space.dim(), 16);
        let sol = wit.unwrap();
        assert_eq!(sol.signature.2, 0);
        let mut coords = vec![Rat::zero(); 16];
        for c in coords.iter_mut().take(4) {
            *c = Rat::one();
        }
        let std = Hermitian11Form::from_real_coords(4, &coords);
        let (_, sig) = metric_and_signature(&p, &std).unwrap();
        assert_eq!(sig, (8, 0, 0));
        let conn = levi_civita(&p, &std).unwrap();
        let curv = curvature(&conn);
        assert!(curv.flat && curv.ricci_flat);
        assert!(parallel_volume_check(&conn));
        assert!(curv.nonflat_certificate().is_none());
    }

    #[test]
    fn complex_symplectic_torus_vs_nilpotent() {
        let torus = CoframePresentation::torus(4);
        let (space, wit) = complex_symplectic_solve(&torus);
        assert_eq!(space.dim(), 6);
        let w = wit.unwrap();
        assert!(w.is_nondegenerate());
        // Omega^2 = 2 q w^{1234}
        let omega = w.to_form();
        let sq = omega.wedge(&omega);
        assert_eq!(sq.coeff(&[1, 2, 3, 4]), &gauss(2, 0) * &w.square_scalar());

        for (e, d, nu, a, b) in [
            (0i64, 1i64, 0i64, 0i64, Gauss::zero()),
            (1, -1, 0, 1, Gauss::from_rat(rat(7, 2))),
            (0, 1, 1, 1, gauss(1, 2)),
            (1, 1, 1, 3, gauss(-1, 1)),
        ] {
            let p = wnn(e, d, nu, a, b);
            let (space, wit) = complex_symplectic_solve(&p);
            assert!(wit.is_none());
            let forced = forced_zero_coords(&space);
            for c in [3, 4, 5] {
                assert!(forced.contains(&c), "tau/theta/xi forced at ({e},{d},{nu})");
            }
        }
        for p in [
            build_snn(&SnNParams::family_i(1, 1, 0, rat_int(1), rat_int(1)).unwrap()),
            build_snn(&SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(0)).unwrap()),
            build_snn(&SnNParams::family_ii(0, 1, 0, rat_int(2), rat_int(1)).unwrap()),
        ] {
            let (_, wit) = complex_symplectic_solve(&p);
            assert!(wit.is_none());
        }
    }

    #[test]
    fn json_report_shape() {
        let p = wnn(0, 1, 1, 0, Gauss::one());
        let rep = json_report("f5^1", "wnn(0,1,1,0,1)", &p);
        assert_eq!(rep["pk_exists"], json!(true));
        assert_eq!(rep["kernel_dim"], json!(4));
        assert_eq!(rep["complex_symplectic"], json!(false));
        assert_eq!(rep["ricci_flat"], json!(true));
        assert_eq!(rep["flat"], json!(false));
        let sig = rep["signature"].as_array().unwrap();
        assert_eq!(sig.len(), 2);
        let rep = json_report("f1", "wnn(0,1,0,0,0)", &wnn(0, 1, 0, 0, Gauss::zero()));
        assert_eq!(rep["pk_exists"], json!(false));
        assert!(rep["witness"].is_null());
    }
}
