//! Lie algebras by structure constants, the text DSL for them, central
//! series, quotients and direct sums.
//!
//! The DSL mirrors the usual shorthand for nilpotent algebras: an algebra is
//! a parenthesised list of differentials, one per dual generator, so
//! `(0,0,12,13)` means `de^3 = e^1 ^ e^2`, `de^4 = e^1 ^ e^3`.  A summand may
//! carry a rational coefficient separated by a dot, as in `1/2.12` or
//! `2.14`.  Dimensions run up to nine, so generator indices stay single
//! digits.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{Gauss, Mat, Rat, Subspace};
use crate::forms::{ce_differential, FormStyle, KForm};

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// d[k] is the differential of `e^{k+1}`, a real 2-form.
    d: Vec<KForm>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl LieAlgebra {
    /// Builds an algebra from differentials, verifying reality, dimension
    /// bounds and the Jacobi identity (`d^2 = 0` on every generator).
    pub fn from_differentials(d: Vec<KForm>) -> Result<Self> {
        let dim = d.len();
        if dim == 0 || dim > 9 {
            return Err(Error::InadmissibleParams {
                reason: format!("dimension {dim} outside 1..=9"),
            });
        }
        for (k, f) in d.iter().enumerate() {
            if f.ambient() != dim || f.degree() != 2 {
                return Err(Error::InadmissibleParams {
                    reason: format!("differential {} is not a 2-form on {dim} generators", k + 1),
                });
            }
            for (_, c) in f.terms() {
                if !c.is_real() {
                    return Err(Error::InadmissibleParams {
                        reason: format!("differential {} has a non-real coefficient", k + 1),
                    });
                }
            }
        }
        let g = LieAlgebra { dim, d };
        g.check_jacobi()?;
        Ok(g)
    }

    fn check_jacobi(&self) -> Result<()> {
        for k in 1..=self.dim {
            let dd = ce_differential(self, &self.d[k - 1]);
            if !dd.is_zero() {
                return Err(Error::JacobiViolation {
                    generator: k,
                    residual: dd.render(FormStyle::real_plain()),
                });
            }
        }
        Ok(())
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, d: (0..dim).map(|_| KForm::zero(dim, 2)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The differential of the 1-based dual generator `e^k`.
    pub fn differential(&self, k: usize) -> &KForm {
        &self.d[k - 1]
    }

    /// Structure constant `c^k_{ij}` of `de^k = sum c^k_{ij} e^i ^ e^j`,
    /// all indices 1-based with `i < j`.
    pub fn c(&self, k: usize, i: usize, j: usize) -> Rat {
        self.d[k - 1].coeff(&[i as u8, j as u8]).re
    }

    /// `[e_i, e_j]` in basis coordinates, 0-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Gauss> {
        let mut v = vec![Gauss::zero(); self.dim];
        if i == j {
            return v;
        }
        let (a, b, sign) = if i < j { (i, j, -1i64) } else { (j, i, 1i64) };
        for k in 0..self.dim {
            let c = self.d[k].coeff(&[(a + 1) as u8, (b + 1) as u8]);
            if !c.is_zero() {
                v[k] = if sign < 0 { -c } else { c };
            }
        }
        v
    }

    /// Bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Gauss], y: &[Gauss]) -> Vec<Gauss> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut v = vec![Gauss::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let b = self.bracket_basis(i, j);
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !b[k].is_zero() {
                        let t = &f * &b[k];
                        v[k] = &v[k] + &t;
                    }
                }
            }
        }
        v
    }

    /// Matrix whose column `i` is `[e_i, e_j]`, for fixed `j`.
    pub(crate) fn ad_into(&self, j: usize) -> Mat {
        let n = self.dim;
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            let b = self.bracket_basis(i, j);
            for k in 0..n {
                if !b[k].is_zero() {
                    m.set(k, i, b[k].clone());
                }
            }
        }
        m
    }

    /// Matrix of `v -> canonical representative of v mod s`.
    pub(crate) fn reduction_matrix(s: &Subspace) -> Mat {
        let n = s.ambient();
        Mat::from_fn(n, n, |i, j| {
            let mut e = vec![Gauss::zero(); n];
            e[j] = Gauss::one();
            s.reduce(&e)[i].clone()
        })
    }

    /// One step of the ascending series relative to `prev`:
    /// `{x : [x, g] inside prev}`.
    fn ascending_step(&self, prev: &Subspace) -> Subspace {
        let n = self.dim;
        let red = Self::reduction_matrix(prev);
        let mut stacked = Mat::zero(0, n);
        for j in 0..n {
            stacked = stacked.vstack(&red.mul(&self.ad_into(j)));
        }
        stacked.kernel()
    }

    /// Ascending central series `g_1 = Z(g)`, `g_k = {x : [x,g] in g_{k-1}}`,
    /// recorded until it stabilises or reaches the whole algebra.
    pub fn ascending_series(&self) -> Flag {
        let mut terms = Vec::new();
        let mut cur = Subspace::zero(self.dim);
        loop {
            let next = self.ascending_step(&cur);
            if next.dim() == cur.dim() {
                break;
            }
            cur = next;
            terms.push(cur.clone());
            if cur.dim() == self.dim {
                break;
            }
        }
        Flag { ambient: self.dim, terms }
    }

    /// Descending series `g^0 = g`, `g^k = [g^{k-1}, g]`, recorded down to
    /// the last nonzero term.
    pub fn descending_series(&self) -> Flag {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let prev = terms.last().unwrap();
            let mut rows = Vec::new();
            for v in prev.basis_rows() {
                for j in 0..self.dim {
                    let mut y = vec![Gauss::zero(); self.dim];
                    y[j] = Gauss::one();
                    rows.push(self.bracket(&v, &y));
                }
            }
            let next = Subspace::from_spanning(self.dim, &rows);
            if next.dim() == 0 || next.dim() == prev.dim() {
                break;
            }
            terms.push(next);
        }
        Flag { ambient: self.dim, terms }
    }

    pub fn center(&self) -> Subspace {
        self.ascending_step(&Subspace::zero(self.dim))
    }

    pub fn derived(&self) -> Subspace {
        let flag = self.descending_series();
        if flag.terms.len() > 1 {
            flag.terms[1].clone()
        } else {
            Subspace::zero(self.dim)
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        // The descending flag stops at the last nonzero term; nilpotency
        // means one more bracket kills it.
        let flag = self.descending_series();
        let last = flag.terms.last().unwrap();
        let mut rows = Vec::new();
        for v in last.basis_rows() {
            for j in 0..self.dim {
                let mut y = vec![Gauss::zero(); self.dim];
                y[j] = Gauss::one();
                rows.push(self.bracket(&v, &y));
            }
        }
        Subspace::from_spanning(self.dim, &rows).dim() == 0
    }

    /// Nilpotency step: the number of nonzero terms of the descending series.
    pub fn step(&self) -> usize {
        self.descending_series().terms.len()
    }

    /// Quotient by an ideal, with the projection onto the complement of the
    /// ideal's pivot coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        if ideal.ambient() != self.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: ideal.ambient() });
        }
        if ideal.dim() == self.dim {
            return Err(Error::QuotientIsZero);
        }
        for v in ideal.basis_rows() {
            for j in 0..self.dim {
                let mut y = vec![Gauss::zero(); self.dim];
                y[j] = Gauss::one();
                let b = self.bracket(&v, &y);
                if !ideal.contains(&b) {
                    return Err(Error::NotAnIdeal {
                        witness: vector_string(&v),
                        against: j + 1,
                    });
                }
            }
        }
        let free = ideal.free_columns();
        let q = free.len();
        let red = Self::reduction_matrix(ideal);
        let projection = Mat::from_fn(q, self.dim, |u, j| red.at(free[u], j).clone());
        let mut d = vec![KForm::zero(q, 2); q];
        for u in 0..q {
            for v in (u + 1)..q {
                let b = projection.mul_vec(&self.bracket_basis(free[u], free[v]));
                for k in 0..q {
                    if !b[k].is_zero() {
                        d[k].add_term(vec![(u + 1) as u8, (v + 1) as u8], -&b[k]);
                    }
                }
            }
        }
        let algebra = LieAlgebra::from_differentials(d)?;
        Ok(QuotientMap { algebra, projection, free_columns: free })
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let n = self.dim + other.dim;
        let mut d = Vec::with_capacity(n);
        for k in 0..self.dim {
            let mut f = KForm::zero(n, 2);
            for (idx, c) in self.d[k].terms() {
                f.add_term(idx.clone(), c.clone());
            }
            d.push(f);
        }
        let shift = self.dim as u8;
        for k in 0..other.dim {
            let mut f = KForm::zero(n, 2);
            for (idx, c) in other.d[k].terms() {
                f.add_term(idx.iter().map(|&i| i + shift).collect(), c.clone());
            }
            d.push(f);
        }
        LieAlgebra::from_differentials(d)
    }

    /// Parses the structure-constant DSL; see the module docs.
    pub fn parse(input: &str) -> Result<LieAlgebra> {
        Parser::new(input).algebra()
    }

    /// Renders back to the DSL; `parse(render(g)) == g`.
    pub fn render(&self) -> String {
        let mut parts = Vec::with_capacity(self.dim);
        for f in &self.d {
            parts.push(render_term(f));
        }
        format!("({})", parts.join(","))
    }
}

pub(crate) fn vector_string(v: &[Gauss]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c == &Gauss::one() {
            parts.push(format!("e{}", i + 1));
        } else {
            parts.push(format!("({}) e{}", c, i + 1));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn render_term(f: &KForm) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (idx, c)) in f.terms().enumerate() {
        let r = &c.re;
        let neg = r.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let a = r.abs();
        if !a.is_one() {
            out.push_str(&a.to_string());
            out.push('.');
        }
        for &i in idx {
            out.push_str(&i.to_string());
        }
    }
    out
}

/// A nested chain of subspaces of a fixed ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    ambient: usize,
    terms: Vec<Subspace>,
}

impl Flag {
    pub fn new(ambient: usize, terms: Vec<Subspace>) -> Self {
        Flag { ambient, terms }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Result of a quotient: the smaller algebra together with the linear
/// projection in the chosen complement coordinates.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub algebra: LieAlgebra,
    pub projection: Mat,
    pub free_columns: Vec<usize>,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn err(&self, expected: &str) -> Error {
        let found = self
            .bytes
            .get(self.pos)
            .map(|&b| (b as char).to_string())
            .unwrap_or_else(|| "end of input".to_string());
        Error::Parse { position: self.pos, expected: expected.to_string(), found }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn algebra(&mut self) -> Result<LieAlgebra> {
        if !self.eat(b'(') {
            return Err(self.err("'('"));
        }
        let mut raw_terms = Vec::new();
        loop {
            raw_terms.push(self.term()?);
            if self.eat(b',') {
                continue;
            }
            if self.eat(b')') {
                break;
            }
            return Err(self.err("',' or ')'"));
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("end of input"));
        }
        let dim = raw_terms.len();
        if dim > 9 {
            return Err(Error::Parse {
                position: 0,
                expected: "at most nine generators".to_string(),
                found: format!("{dim}"),
            });
        }
        let mut d = Vec::with_capacity(dim);
        for (k, summands) in raw_terms.iter().enumerate() {
            let mut f = KForm::zero(dim, 2);
            for (coeff, i, j, at) in summands {
                if *i as usize > dim || *j as usize > dim {
                    return Err(Error::Parse {
                        position: *at,
                        expected: format!("generator index at most {dim}"),
                        found: format!("{i}{j}"),
                    });
                }
                let _ = k;
                f.add_term(vec![*i, *j], Gauss::from_rat(coeff.clone()));
            }
            d.push(f);
        }
        LieAlgebra::from_differentials(d)
    }

    /// A term is `0` or a signed sum of summands.
    #[allow(clippy::type_complexity)]
    fn term(&mut self) -> Result<Vec<(Rat, u8, u8, usize)>> {
        self.skip_ws();
        // Lone zero.
        if self.bytes.get(self.pos) == Some(&b'0')
            && !self
                .bytes
                .get(self.pos + 1)
                .is_some_and(|b| b.is_ascii_digit() || *b == b'.' || *b == b'/')
        {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut sign: i64 = 1;
        if self.eat(b'-') {
            sign = -1;
        } else {
            let _ = self.eat(b'+');
        }
        loop {
            let (c, i, j, at) = self.summand()?;
            out.push((c * Rat::from_integer(sign.into()), i, j, at));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// `[coeff "."] digit digit` with an optional `p/q` coefficient.
    fn summand(&mut self) -> Result<(Rat, u8, u8, usize)> {
        self.skip_ws();
        let start = self.pos;
        // Scan ahead: a '.' before the next separator means a coefficient.
        let mut scan = self.pos;
        let mut has_dot = false;
        while let Some(&b) = self.bytes.get(scan) {
            if b == b'.' {
                has_dot = true;
                break;
            }
            if b.is_ascii_digit() || b == b'/' {
                scan += 1;
            } else {
                break;
            }
        }
        let coeff = if has_dot {
            let num = self.integer("coefficient numerator")?;
            let den = if self.eat(b'/') { self.integer("coefficient denominator")? } else { 1 };
            if den == 0 {
                self.pos = start;
                return Err(self.err("nonzero denominator"));
            }
            if !self.eat(b'.') {
                return Err(self.err("'.'"));
            }
            Rat::new(num.into(), den.into())
        } else {
            Rat::one()
        };
        let at = self.pos;
        let i = self.digit()?;
        let j = self.digit()?;
        if i == 0 || j == 0 || i >= j {
            self.pos = at;
            return Err(self.err("increasing pair of generator indices"));
        }
        Ok((coeff, i, j, at))
    }

    fn digit(&mut self) -> Result<u8> {
        match self.bytes.get(self.pos) {
            Some(&b) if b.is_ascii_digit() => {
                self.pos += 1;
                Ok(b - b'0')
            }
            _ => Err(self.err("digit")),
        }
    }

    fn integer(&mut self, what: &str) -> Result<i64> {
        self.skip_ws();
        let mut end = self.pos;
        while self.bytes.get(end).is_some_and(|b| b.is_ascii_digit()) {
            end += 1;
        }
        if end == self.pos {
            return Err(self.err(what));
        }
        let v: i64 = self.src[self.pos..end].parse().map_err(|_| self.err(what))?;
        self.pos = end;
        Ok(v)
    }
}

/// The named algebras the toolkit ships with: the eleven eight-dimensional
/// algebras admitting the relevant non-nilpotent complex structures, the one
/// carrying the strongly non-nilpotent pseudo-Kaehler structure, and the two
/// six-dimensional quotient models.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Builtin {
    F1,
    F2,
    F3,
    F4_0,
    F4_1,
    F5_0,
    F5_1,
    F6,
    F7_0,
    F7_1,
    F8,
    G10_0,
    H19Minus,
    H26Plus,
}

impl Builtin {
    pub const ALL: [Builtin; 14] = [
        Builtin::F1,
        Builtin::F2,
        Builtin::F3,
        Builtin::F4_0,
        Builtin::F4_1,
        Builtin::F5_0,
        Builtin::F5_1,
        Builtin::F6,
        Builtin::F7_0,
        Builtin::F7_1,
        Builtin::F8,
        Builtin::G10_0,
        Builtin::H19Minus,
        Builtin::H26Plus,
    ];

    /// The eleven eight-dimensional f-algebras, in order.
    pub const EIGHT_DIM: [Builtin; 11] = [
        Builtin::F1,
        Builtin::F2,
        Builtin::F3,
        Builtin::F4_0,
        Builtin::F4_1,
        Builtin::F5_0,
        Builtin::F5_1,
        Builtin::F6,
        Builtin::F7_0,
        Builtin::F7_1,
        Builtin::F8,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Builtin::F1 => "f1",
            Builtin::F2 => "f2",
            Builtin::F3 => "f3",
            Builtin::F4_0 => "f4^0",
            Builtin::F4_1 => "f4^1",
            Builtin::F5_0 => "f5^0",
            Builtin::F5_1 => "f5^1",
            Builtin::F6 => "f6",
            Builtin::F7_0 => "f7^0",
            Builtin::F7_1 => "f7^1",
            Builtin::F8 => "f8",
            Builtin::G10_0 => "g10^0",
            Builtin::H19Minus => "h19^-",
            Builtin::H26Plus => "h26^+",
        }
    }

    pub fn dsl(self) -> &'static str {
        match self {
            Builtin::F1 => "(0,0,0,12,23,14-35,0,0)",
            Builtin::F2 => "(0,0,12,13,23,14+25,0,0)",
            Builtin::F3 => "(0,0,0,12,13,23,15+26,0)",
            Builtin::F4_0 => "(0,0,0,13,14,23,26,16+24)",
            Builtin::F4_1 => "(0,0,12,13,14,23,26,16+24)",
            Builtin::F5_0 => "(0,0,0,13,23,34,35,14+25)",
            Builtin::F5_1 => "(0,0,0,13,23,34,1/2.12+35,14+25)",
            Builtin::F6 => "(0,0,12,13,23,14+25,16+35,26-34)",
            Builtin::F7_0 => "(0,0,0,13,23,14+25,2.14+34,15+24+35)",
            Builtin::F7_1 => "(0,0,0,13,23,14+25,12+2.14+34,15+24+35)",
            Builtin::F8 => "(0,0,12,13,23,14+25,2.14-26+34,15+16+24+35)",
            Builtin::G10_0 => "(0,0,0,13,23,14+25,15+24,16+27)",
            Builtin::H19Minus => "(0,0,0,12,23,14-35)",
            Builtin::H26Plus => "(0,0,12,13,23,14+25)",
        }
    }

    pub fn algebra(self) -> LieAlgebra {
        LieAlgebra::parse(self.dsl()).expect("builtin table is Jacobi-consistent")
    }

    pub fn from_label(s: &str) -> Option<Builtin> {
        let norm: String = s.trim().chars().filter(|c| *c != '^' && *c != '_').collect();
        let norm = norm.to_ascii_lowercase();
        Builtin::ALL
            .iter()
            .copied()
            .find(|b| {
                let l: String = b.label().chars().filter(|c| *c != '^' && *c != '_').collect();
                l == norm
            })
    }
}

/// Resolves a builtin label or a DSL literal.
pub fn resolve(reference: &str) -> Result<(LieAlgebra, Option<Builtin>)> {
    if let Some(b) = Builtin::from_label(reference) {
        return Ok((b.algebra(), Some(b)));
    }
    LieAlgebra::parse(reference).map(|g| (g, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{gauss, rat};

    #[test]
    fn parse_render_round_trip_builtins() {
        for b in Builtin::ALL {
            let g = b.algebra();
            let again = LieAlgebra::parse(&g.render()).unwrap();
            assert_eq!(g, again, "{}", b.label());
        }
    }

    #[test]
    fn parse_coefficients() {
        let g = LieAlgebra::parse("(0,0,0,2.13)").unwrap();
        assert_eq!(g.c(4, 1, 3), rat(2, 1));
        let g = LieAlgebra::parse("(0,0,0,1/2.12+13)").unwrap();
        assert_eq!(g.c(4, 1, 2), rat(1, 2));
        assert_eq!(g.c(4, 1, 3), rat(1, 1));
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = LieAlgebra::parse("(0,0,0,2x13)").unwrap_err();
        match e {
            Error::Parse { position, .. } => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!(LieAlgebra::parse("(0,0,0,21)").is_err());
        assert!(LieAlgebra::parse("(0,0,15)").is_err());
    }

    #[test]
    fn jacobi_violation_reports_residual() {
        let e = LieAlgebra::parse("(0,0,12,13+24)").unwrap_err();
        match e {
            Error::JacobiViolation { generator, residual } => {
                assert_eq!(generator, 4);
                assert_eq!(residual, "e123");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bracket_sign_convention() {
        // de^3 = e^1 ^ e^2 forces [e1, e2] = -e3.
        let g = LieAlgebra::parse("(0,0,12)").unwrap();
        assert_eq!(g.bracket_basis(0, 1)[2], gauss(-1, 0));
        assert_eq!(g.bracket_basis(1, 0)[2], gauss(1, 0));
    }

    #[test]
    fn series_of_f1_and_f6() {
        let f1 = Builtin::F1.algebra();
        assert_eq!(f1.ascending_series().dims(), vec![3, 5, 8]);
        assert_eq!(f1.descending_series().dims(), vec![8, 3, 1]);
        assert_eq!(f1.step(), 3);
        assert!(f1.is_nilpotent());
        let f6 = Builtin::F6.algebra();
        assert_eq!(f6.ascending_series().dims(), vec![2, 3, 5, 6, 8]);
        let f8 = Builtin::F8.algebra();
        assert_eq!(f8.descending_series().dims(), vec![8, 6, 5, 3, 2]);
        let f3 = Builtin::F3.algebra();
        assert_eq!(f3.descending_series().dims(), vec![8, 4, 1]);
    }

    #[test]
    fn quotient_by_center() {
        let f1 = Builtin::F1.algebra();
        let q = f1.quotient(&f1.center()).unwrap();
        assert_eq!(q.algebra.dim(), 5);
        // A non-ideal line is rejected.
        let bad = Subspace::from_spanning(8, &[{
            let mut v = vec![Gauss::zero(); 8];
            v[0] = Gauss::one();
            v
        }]);
        assert!(matches!(f1.quotient(&bad), Err(Error::NotAnIdeal { .. })));
        assert!(matches!(
            f1.quotient(&Subspace::full(8)),
            Err(Error::QuotientIsZero)
        ));
    }

    #[test]
    fn direct_sum_matches_builtins() {
        let r2 = LieAlgebra::abelian(2);
        let s = Builtin::H19Minus.algebra().direct_sum(&r2).unwrap();
        assert_eq!(s, Builtin::F1.algebra());
        let s = Builtin::H26Plus.algebra().direct_sum(&r2).unwrap();
        assert_eq!(s, Builtin::F2.algebra());
    }

    #[test]
    fn label_resolution() {
        assert_eq!(Builtin::from_label("f4^1"), Some(Builtin::F4_1));
        assert_eq!(Builtin::from_label("f4_1"), Some(Builtin::F4_1));
        assert_eq!(Builtin::from_label("g10^0"), Some(Builtin::G10_0));
        assert_eq!(Builtin::from_label("h19^-"), Some(Builtin::H19Minus));
        assert_eq!(Builtin::from_label("nope"), None);
    }

    #[test]
    fn solvable_not_nilpotent_is_detected() {
        // de^2 = e^12 gives [e1, e2] = -e2: solvable, not nilpotent.
        let g = LieAlgebra::parse("(0,12)").unwrap();
        assert!(!g.is_nilpotent());
        assert_eq!(g.descending_series().dims(), vec![2, 1]);
        assert!(g.ascending_series().is_empty());
    }
}
