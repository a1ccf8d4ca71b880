//! Complex structures on real algebras and complex coframe presentations.
//!
//! A `RealJ` is an endomorphism with `J^2 = -Id` acting on basis vectors.
//! Integrability is checked two independent ways: through the Nijenhuis
//! tensor on basis pairs, and through the vanishing of the (0,2) component
//! of the differentials of the (1,0)-coframe.
//!
//! A `CoframePresentation` records a complex algebra by the differentials of
//! a (1,0)-coframe `w^1..w^n`, stored as forms on `2n` indices where index
//! `n + k` means `conj(w^k)`.  Realification and complexification convert
//! between the two pictures; the realification accepts coframe rows with
//! entries in Q(i, sqrt 2) so that basis changes involving sqrt 2 can be
//! carried out exactly.

use crate::error::{Error, Result};
use crate::exactnum::{gauss_i, Gauss, Mat, QuadGauss, Subspace};
use crate::forms::{FormStyle, KForm};
use crate::liealg::{vector_string, Flag, LieAlgebra};

/// An almost complex structure in matrix form, acting on coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealJ {
    mat: Mat,
}

impl RealJ {
    pub fn new(mat: Mat) -> Result<Self> {
        assert_eq!(mat.nrows(), mat.ncols(), "J must be square");
        if let Some((i, j)) = mat.is_real() {
            return Err(Error::NotReal { i, j });
        }
        let n = mat.nrows();
        let sq = mat.mul(&mat);
        for col in 0..n {
            for row in 0..n {
                let want = if row == col { -Gauss::one() } else { Gauss::zero() };
                if *sq.at(row, col) != want {
                    return Err(Error::NotAlmostComplex { column: col + 1 });
                }
            }
        }
        Ok(RealJ { mat })
    }

    /// `J e_{2k-1} = e_{2k}`, `J e_{2k} = -e_{2k-1}`.
    pub fn canonical(n: usize) -> Self {
        assert!(n % 2 == 0);
        let mut m = Mat::zero(n, n);
        for k in 0..n / 2 {
            m.set(2 * k + 1, 2 * k, Gauss::one());
            m.set(2 * k, 2 * k + 1, -Gauss::one());
        }
        RealJ { mat: m }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn apply(&self, v: &[Gauss]) -> Vec<Gauss> {
        self.mat.mul_vec(v)
    }

    /// Pullback on 1-form coefficient rows: `(J^* a)(x) = a(Jx)`.
    pub fn pullback_row(&self, row: &[Gauss]) -> Vec<Gauss> {
        let n = self.dim();
        assert_eq!(row.len(), n);
        (0..n)
            .map(|q| {
                let mut s = Gauss::zero();
                for (p, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        let t = c * self.mat.at(p, q);
                        s += &t;
                    }
                }
                s
            })
            .collect()
    }
}

/// Nijenhuis tensor `N(e_a, e_b)` for 0-based basis indices.
pub fn nijenhuis(g: &LieAlgebra, j: &RealJ, a: usize, b: usize) -> Vec<Gauss> {
    let n = g.dim();
    let mut ea = vec![Gauss::zero(); n];
    ea[a] = Gauss::one();
    let mut eb = vec![Gauss::zero(); n];
    eb[b] = Gauss::one();
    let ja = j.apply(&ea);
    let jb = j.apply(&eb);
    let t1 = g.bracket(&ja, &jb);
    let t2 = j.apply(&g.bracket(&ja, &eb));
    let t3 = j.apply(&g.bracket(&ea, &jb));
    let t4 = g.bracket(&ea, &eb);
    (0..n).map(|k| &(&t1[k] - &t2[k]) - &(&t3[k] + &t4[k])).collect()
}

/// First basis pair with nonzero Nijenhuis tensor, if any.
pub fn nijenhuis_obstruction(g: &LieAlgebra, j: &RealJ) -> Option<(usize, usize, Vec<Gauss>)> {
    let n = g.dim();
    for a in 0..n {
        for b in (a + 1)..n {
            let v = nijenhuis(g, j, a, b);
            if v.iter().any(|c| !c.is_zero()) {
                return Some((a, b, v));
            }
        }
    }
    None
}

/// A complex algebra given by the differentials of a (1,0)-coframe.
///
/// `d[k]` is `d w^{k+1}`, a 2-form on `2n` indices with no (0,2) component;
/// differentials of the conjugate generators follow by conjugation.
#[derive(Clone, PartialEq, Eq)]
pub struct CoframePresentation {
    n: usize,
    d: Vec<KForm>,
    dbar: Vec<KForm>,
}

impl std::fmt::Debug for CoframePresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.equations(false).join("; "))
    }
}

impl CoframePresentation {
    pub fn new(d: Vec<KForm>) -> Result<Self> {
        let n = d.len();
        assert!(n > 0);
        for (k, f) in d.iter().enumerate() {
            assert_eq!(f.ambient(), 2 * n, "d w^{} has wrong ambient", k + 1);
            assert_eq!(f.degree(), 2);
            if let Some(bad) = f.bigraded_parts(n).get(&(0, 2)) {
                if !bad.is_zero() {
                    return Err(Error::NotIntegrable {
                        residual: format!(
                            "(0,2) part of d w^{} is {}",
                            k + 1,
                            bad.render(FormStyle::bigraded_plain(n))
                        ),
                    });
                }
            }
        }
        let dbar = d.iter().map(|f| f.conj_bar(n)).collect();
        let p = CoframePresentation { n, d, dbar };
        for k in 1..=p.n {
            let dd = p.d(&p.d[k - 1]);
            if !dd.is_zero() {
                return Err(Error::JacobiViolation {
                    generator: k,
                    residual: dd.render(FormStyle::bigraded_plain(p.n)),
                });
            }
        }
        Ok(p)
    }

    pub fn torus(n: usize) -> Self {
        let d = vec![KForm::zero(2 * n, 2); n];
        let dbar = d.clone();
        CoframePresentation { n, d, dbar }
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    /// `d w^k` for `k <= n`, `d conj(w^{k-n})` above.
    pub fn d_generator(&self, idx: usize) -> &KForm {
        assert!(idx >= 1 && idx <= 2 * self.n);
        if idx <= self.n {
            &self.d[idx - 1]
        } else {
            &self.dbar[idx - 1 - self.n]
        }
    }

    pub fn structure_form(&self, k: usize) -> &KForm {
        &self.d[k - 1]
    }

    /// Extends the structure equations to arbitrary forms as an
    /// antiderivation.
    pub fn d(&self, f: &KForm) -> KForm {
        assert_eq!(f.ambient(), 2 * self.n);
        let mut out = KForm::zero(2 * self.n, f.degree() + 1);
        for (idx, c) in f.terms() {
            for pos in 0..idx.len() {
                let di = self.d_generator(idx[pos] as usize);
                if di.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let coeff = if pos % 2 == 0 { c.clone() } else { -c };
                let rest_m = KForm::monomial(2 * self.n, &rest, coeff);
                out = out.add(&di.wedge(&rest_m));
            }
        }
        out
    }

    pub fn equations(&self, tex: bool) -> Vec<String> {
        let style = if tex {
            FormStyle::bigraded_tex(self.n)
        } else {
            FormStyle::bigraded_plain(self.n)
        };
        (1..=self.n)
            .map(|k| {
                let lhs = if tex { format!("d\\omega^{{{k}}}") } else { format!("dw{k}") };
                format!("{lhs} = {}", self.d[k - 1].render(style))
            })
            .collect()
    }

    /// Realifies through the canonical identification
    /// `w^k = e^{2k-1} + i e^{2k}`.
    pub fn realify(&self) -> Result<(LieAlgebra, RealJ)> {
        let n = self.n;
        let mut rows = vec![vec![QuadGauss::zero(); 2 * n]; n];
        for (k, row) in rows.iter_mut().enumerate() {
            row[2 * k] = QuadGauss::one();
            row[2 * k + 1] = QuadGauss::from_gauss(gauss_i());
        }
        self.realify_with_rows(&rows)
    }

    /// Realifies through explicit coframe rows `w^k = sum_p rows[k][p] e^p`,
    /// with entries in Q(i, sqrt 2).  Fails if the rows are dependent or if
    /// the resulting real structure constants are not rational.
    pub fn realify_with_rows(&self, rows: &[Vec<QuadGauss>]) -> Result<(LieAlgebra, RealJ)> {
        let n = self.n;
        let m = 2 * n;
        assert_eq!(rows.len(), n, "one row per coframe generator");
        for r in rows {
            assert_eq!(r.len(), m, "rows live in the real dual space");
        }
        let mut full: Vec<Vec<QuadGauss>> = rows.to_vec();
        for r in rows {
            full.push(r.iter().map(QuadGauss::conj).collect());
        }
        let inv = qg_inverse(&full).ok_or(Error::Degenerate {
            what: "coframe rows are linearly dependent".to_string(),
        })?;

        // d eta^q expanded over the real coframe, eta = (w, conj w).
        let mut d_eta: Vec<Vec<Vec<QuadGauss>>> = Vec::with_capacity(m);
        for q in 1..=m {
            let mut table = vec![vec![QuadGauss::zero(); m]; m];
            for (idx, c) in self.d_generator(q).terms() {
                let (a, b) = (idx[0] as usize - 1, idx[1] as usize - 1);
                let cc = QuadGauss::from_gauss(c.clone());
                for p in 0..m {
                    for r in (p + 1)..m {
                        let t1 = &full[a][p] * &full[b][r];
                        let t2 = &full[a][r] * &full[b][p];
                        let w = &cc * &(&t1 - &t2);
                        table[p][r] = &table[p][r] + &w;
                    }
                }
            }
            d_eta.push(table);
        }

        let mut diffs = Vec::with_capacity(m);
        for p in 0..m {
            let mut f = KForm::zero(m, 2);
            for a in 0..m {
                for b in (a + 1)..m {
                    let mut s = QuadGauss::zero();
                    for q in 0..m {
                        if !inv[p][q].is_zero() && !d_eta[q][a][b].is_zero() {
                            let t = &inv[p][q] * &d_eta[q][a][b];
                            s = &s + &t;
                        }
                    }
                    if s.is_zero() {
                        continue;
                    }
                    if !s.is_gauss() {
                        return Err(Error::IrrationalRotation {
                            what: format!("coefficient of e{}{} in d e^{}", a + 1, b + 1, p + 1),
                        });
                    }
                    f.add_term(vec![(a + 1) as u8, (b + 1) as u8], s.g);
                }
            }
            diffs.push(f);
        }
        let algebra = LieAlgebra::from_differentials(diffs)?;

        // J = C^{-1} D C with D = diag(i, .., i, -i, .., -i).
        let mut jmat = Mat::zero(m, m);
        for p in 0..m {
            for t in 0..m {
                let mut s = QuadGauss::zero();
                for q in 0..m {
                    let d_qq = if q < n { gauss_i() } else { -gauss_i() };
                    if inv[p][q].is_zero() || full[q][t].is_zero() {
                        continue;
                    }
                    let w = &(&inv[p][q] * &QuadGauss::from_gauss(d_qq)) * &full[q][t];
                    s = &s + &w;
                }
                if !s.is_gauss() {
                    return Err(Error::IrrationalRotation {
                        what: format!("complex structure entry ({}, {})", p + 1, t + 1),
                    });
                }
                jmat.set(p, t, s.g);
            }
        }
        let j = RealJ::new(jmat)?;
        Ok((algebra, j))
    }
}

/// Inverse of a square matrix over Q(i, sqrt 2) by Gauss-Jordan elimination.
fn qg_inverse(m: &[Vec<QuadGauss>]) -> Option<Vec<Vec<QuadGauss>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<QuadGauss>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { QuadGauss::one() } else { QuadGauss::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = a[col][col].inv();
        for j in 0..n {
            a[col][j] = &a[col][j] * &f;
            inv[col][j] = &inv[col][j] * &f;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &f;
                a[r][j] = &a[r][j] - &t;
                let t = &inv[col][j] * &f;
                inv[r][j] = &inv[r][j] - &t;
            }
        }
    }
    Some(inv)
}

/// Expresses an integrable `(g, J)` as a coframe presentation.  The
/// (1,0)-coframe is chosen greedily from `e^p - i J^* e^p`; a nonzero (0,2)
/// component reports non-integrability.
pub fn complexify(g: &LieAlgebra, j: &RealJ) -> Result<CoframePresentation> {
    let dim = g.dim();
    assert_eq!(j.dim(), dim);
    assert!(dim % 2 == 0, "complexify needs an even-dimensional algebra");
    let n = dim / 2;
    let mut sel: Vec<Vec<Gauss>> = Vec::with_capacity(n);
    let mut acc = Mat::zero(0, dim);
    for p in 0..dim {
        if sel.len() == n {
            break;
        }
        let mut row = vec![Gauss::zero(); dim];
        row[p] = Gauss::one();
        let jrow = j.pullback_row(&row);
        for (q, c) in jrow.into_iter().enumerate() {
            let t = &gauss_i() * &c;
            row[q] = &row[q] - &t;
        }
        let cand = acc.vstack(&Mat::from_rows(vec![row.clone()]));
        if cand.rank() > acc.nrows() {
            acc = cand;
            sel.push(row);
        }
    }
    assert_eq!(sel.len(), n, "(1,0)-forms span half the complex dual");

    let mut full = Mat::from_rows(sel.clone());
    for row in &sel {
        full = full.vstack(&Mat::from_rows(vec![row
            .iter()
            .map(Gauss::conj)
            .collect()]));
    }
    let cinv = full.inverse().expect("coframe with conjugates is a basis");
    let cinv_rows: Vec<Vec<Gauss>> = (0..dim).map(|p| cinv.row(p)).collect();

    let mut d = Vec::with_capacity(n);
    for row in &sel {
        // d w^k = sum_q row[q] d e^q, then e -> eta.
        let mut de = KForm::zero(dim, 2);
        for (q, c) in row.iter().enumerate() {
            if !c.is_zero() {
                de = de.add(&g.differential(q + 1).scale(c));
            }
        }
        let in_eta = de.substitute(&cinv_rows, dim);
        if let Some(bad) = in_eta.bigraded_parts(n).get(&(0, 2)) {
            if !bad.is_zero() {
                return Err(Error::NotIntegrable {
                    residual: format!(
                        "(0,2) part {}",
                        bad.render(FormStyle::bigraded_plain(n))
                    ),
                });
            }
        }
        d.push(in_eta);
    }
    CoframePresentation::new(d)
}

/// How a complex structure sits relative to the ascending-type series it
/// generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JType {
    Nilpotent,
    WeaklyNonNilpotent,
    StronglyNonNilpotent,
}

impl JType {
    pub fn label(self) -> &'static str {
        match self {
            JType::Nilpotent => "nilpotent",
            JType::WeaklyNonNilpotent => "weakly non-nilpotent",
            JType::StronglyNonNilpotent => "strongly non-nilpotent",
        }
    }
}

/// The J-compatible ascending series `a_k(J) = {x : [x, g] and [Jx, g] lie
/// in a_{k-1}(J)}`, recorded until it stabilises, with its classification.
pub fn j_compatible_series(g: &LieAlgebra, j: &RealJ) -> (Flag, JType) {
    let n = g.dim();
    assert_eq!(j.dim(), n);
    let mut terms: Vec<Subspace> = Vec::new();
    let mut cur = Subspace::zero(n);
    loop {
        let red = LieAlgebra::reduction_matrix(&cur);
        let mut stacked = Mat::zero(0, n);
        for q in 0..n {
            let a = red.mul(&g.ad_into(q));
            stacked = stacked.vstack(&a).vstack(&a.mul(j.mat()));
        }
        let next = stacked.kernel();
        if next.dim() == cur.dim() {
            break;
        }
        cur = next;
        terms.push(cur.clone());
        if cur.dim() == n {
            break;
        }
    }
    let jtype = if cur.dim() == n {
        JType::Nilpotent
    } else if terms.is_empty() {
        JType::StronglyNonNilpotent
    } else {
        JType::WeaklyNonNilpotent
    };
    (Flag::new(n, terms), jtype)
}

/// Quotient by a J-invariant ideal, with the complex structure the quotient
/// inherits.
#[derive(Clone, Debug)]
pub struct InducedQuotient {
    pub algebra: LieAlgebra,
    pub j: RealJ,
    pub projection: Mat,
    pub free_columns: Vec<usize>,
}

pub fn induced_quotient(g: &LieAlgebra, j: &RealJ, sub: &Subspace) -> Result<InducedQuotient> {
    for v in sub.basis_rows() {
        if !sub.contains(&j.apply(&v)) {
            return Err(Error::NotInvariant {
                operator: "J".to_string(),
                witness: vector_string(&v),
            });
        }
    }
    let qm = g.quotient(sub)?;
    let qdim = qm.algebra.dim();
    let mut section = Mat::zero(g.dim(), qdim);
    for (u, &f) in qm.free_columns.iter().enumerate() {
        section.set(f, u, Gauss::one());
    }
    let induced = qm.projection.mul(j.mat()).mul(&section);
    let j_q = RealJ::new(induced)?;
    Ok(InducedQuotient {
        algebra: qm.algebra,
        j: j_q,
        projection: qm.projection,
        free_columns: qm.free_columns,
    })
}

/// Verifies that `lambda` intertwines two coframe presentations: pulling the
/// primed coframe `w'^k = sum_j lambda[k][j] w^j` through the first set of
/// structure equations must reproduce the second.  Returns the residual
/// 2-form per generator; all zero means the map is an equivalence on the
/// coframe level.
pub fn check_intertwiner(
    p: &CoframePresentation,
    q: &CoframePresentation,
    lambda: &Mat,
) -> Result<Vec<KForm>> {
    let n = p.generators();
    if q.generators() != n {
        return Err(Error::AmbientMismatch { left: n, right: q.generators() });
    }
    assert_eq!(lambda.nrows(), n);
    assert_eq!(lambda.ncols(), n);
    if lambda.inverse().is_none() {
        return Err(Error::SingularLambda);
    }
    let m = 2 * n;
    let mut rows = vec![vec![Gauss::zero(); m]; m];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = lambda.at(i, j).clone();
            rows[n + i][n + j] = lambda.at(i, j).conj();
        }
    }
    let mut residuals = Vec::with_capacity(n);
    for k in 0..n {
        let mut coeffs = vec![Gauss::zero(); m];
        for j in 0..n {
            coeffs[j] = lambda.at(k, j).clone();
        }
        let lhs = p.d(&KForm::one_form(m, &coeffs));
        let rhs = q.structure_form(k + 1).substitute(&rows, m);
        residuals.push(lhs.sub(&rhs));
    }
    Ok(residuals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::gauss;

    fn heisenberg_presentation() -> CoframePresentation {
        // d w^2 = w^{1 1bar}; realifies to (0,0,0,-2.12).
        let d = vec![
            KForm::zero(4, 2),
            KForm::monomial(4, &[1, 3], Gauss::one()),
        ];
        CoframePresentation::new(d).unwrap()
    }

    #[test]
    fn canonical_j_squares_to_minus_one() {
        let j = RealJ::canonical(6);
        assert_eq!(j.apply(&{
            let mut v = vec![Gauss::zero(); 6];
            v[0] = Gauss::one();
            v
        })[1], Gauss::one());
        assert!(matches!(
            RealJ::new(Mat::identity(4)),
            Err(Error::NotAlmostComplex { column: 1 })
        ));
    }

    #[test]
    fn torus_realifies_to_abelian() {
        let t = CoframePresentation::torus(2);
        let (g, j) = t.realify().unwrap();
        assert_eq!(g, LieAlgebra::abelian(4));
        assert_eq!(j, RealJ::canonical(4));
    }

    #[test]
    fn realify_heisenberg_model() {
        let p = heisenberg_presentation();
        let (g, j) = p.realify().unwrap();
        assert_eq!(g.render(), "(0,0,0,-2.12)");
        assert_eq!(j, RealJ::canonical(4));
    }

    #[test]
    fn complexify_round_trips() {
        let p = heisenberg_presentation();
        let (g, j) = p.realify().unwrap();
        let again = complexify(&g, &j).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn non_integrable_j_is_rejected_consistently() {
        let g = LieAlgebra::parse("(0,0,0,13)").unwrap();
        let j = RealJ::canonical(4);
        assert!(nijenhuis_obstruction(&g, &j).is_some());
        assert!(matches!(complexify(&g, &j), Err(Error::NotIntegrable { .. })));
    }

    #[test]
    fn integrable_j_has_zero_nijenhuis() {
        let p = heisenberg_presentation();
        let (g, j) = p.realify().unwrap();
        assert!(nijenhuis_obstruction(&g, &j).is_none());
    }

    #[test]
    fn presentation_constructor_enforces_bidegree_and_d_squared() {
        // d w^2 = w^{1bar 2bar} has a (0,2) part.
        let bad = vec![
            KForm::zero(4, 2),
            KForm::monomial(4, &[3, 4], Gauss::one()),
        ];
        assert!(matches!(
            CoframePresentation::new(bad),
            Err(Error::NotIntegrable { .. })
        ));
        // d w^2 = w^{1 2} fails d^2 = 0: d(w^{12}) = -w^1 ^ dw^2 = -w^{112}...
        // use d w^1 = w^{2 2bar}, d w^2 = w^{1 2}: d^2 w^1 has a surviving term.
        let bad = vec![
            KForm::monomial(4, &[2, 4], Gauss::one()),
            KForm::monomial(4, &[1, 2], Gauss::one()),
        ];
        assert!(matches!(
            CoframePresentation::new(bad),
            Err(Error::JacobiViolation { .. })
        ));
    }

    #[test]
    fn j_series_classifies_simple_cases() {
        let (g, j) = heisenberg_presentation().realify().unwrap();
        let (flag, t) = j_compatible_series(&g, &j);
        assert_eq!(t, JType::Nilpotent);
        assert_eq!(flag.dims(), vec![2, 4]);

        let solvable = LieAlgebra::parse("(0,12)").unwrap();
        let (_, t) = j_compatible_series(&solvable, &RealJ::canonical(2));
        assert_eq!(t, JType::StronglyNonNilpotent);
    }

    #[test]
    fn induced_quotient_of_heisenberg_center() {
        let (g, j) = heisenberg_presentation().realify().unwrap();
        let center = g.center();
        assert_eq!(center.dim(), 2);
        let iq = induced_quotient(&g, &j, &center).unwrap();
        assert_eq!(iq.algebra, LieAlgebra::abelian(2));
        assert_eq!(iq.j, RealJ::canonical(2));

        // A non-J-invariant line is rejected.
        let mut v = vec![Gauss::zero(); 4];
        v[2] = Gauss::one();
        let line = Subspace::from_spanning(4, &[v]);
        assert!(matches!(
            induced_quotient(&g, &j, &line),
            Err(Error::NotInvariant { .. })
        ));
    }

    #[test]
    fn intertwiner_residuals() {
        let p = heisenberg_presentation();
        let id = Mat::identity(2);
        let res = check_intertwiner(&p, &p, &id).unwrap();
        assert!(res.iter().all(KForm::is_zero));

        // w'^1 = (1+i) w^1 needs w'^2 = |1+i|^2 w^2 = 2 w^2.
        let mut ok = Mat::zero(2, 2);
        ok.set(0, 0, gauss(1, 1));
        ok.set(1, 1, gauss(2, 0));
        let res = check_intertwiner(&p, &p, &ok).unwrap();
        assert!(res.iter().all(KForm::is_zero));

        let mut bad = Mat::zero(2, 2);
        bad.set(0, 0, gauss(1, 1));
        bad.set(1, 1, gauss(1, 0));
        let res = check_intertwiner(&p, &p, &bad).unwrap();
        assert!(!res[1].is_zero());

        assert!(matches!(
            check_intertwiner(&p, &p, &Mat::zero(2, 2)),
            Err(Error::SingularLambda)
        ));
    }
}
