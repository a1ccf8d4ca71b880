//! Sparse exterior forms.
//!
//! A `KForm` is a finite sum of monomials `c * e^{i1} ^ ... ^ e^{ik}` with
//! strictly increasing 1-based indices and Gaussian rational coefficients.
//! The same type carries real forms (ambient = dim of the algebra) and
//! bigraded forms over a complex coframe, where ambient = 2n and indices
//! n+1..2n stand for the conjugate generators; `w^{k bar}` is stored as
//! index `n + k` and rendered as `w1~3` style text or TeX.

use std::collections::BTreeMap;
use std::fmt;

use crate::cpxstruct::CoframePresentation;
use crate::exactnum::Gauss;
use crate::liealg::LieAlgebra;

#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    ambient: usize,
    degree: usize,
    terms: BTreeMap<Vec<u8>, Gauss>,
}

impl KForm {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        KForm { ambient, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(ambient: usize, idx: &[u8], coeff: Gauss) -> Self {
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        assert!(idx.iter().all(|&i| i >= 1 && (i as usize) <= ambient), "index out of range");
        let mut f = KForm::zero(ambient, idx.len());
        if !coeff.is_zero() {
            f.terms.insert(idx.to_vec(), coeff);
        }
        f
    }

    pub fn one_form(ambient: usize, coeffs: &[Gauss]) -> Self {
        assert_eq!(coeffs.len(), ambient);
        let mut f = KForm::zero(ambient, 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert(vec![(i + 1) as u8], c.clone());
            }
        }
        f
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[u8]) -> Gauss {
        self.terms.get(idx).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Gauss)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, idx: Vec<u8>, coeff: Gauss) {
        debug_assert_eq!(idx.len(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v += &coeff;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, coeff);
            }
        }
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.ambient, other.ambient);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm {
        KForm {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Gauss) -> KForm {
        if c.is_zero() {
            return KForm::zero(self.ambient, self.degree);
        }
        KForm {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn wedge(&self, other: &KForm) -> KForm {
        assert_eq!(self.ambient, other.ambient);
        let mut out = KForm::zero(self.ambient, self.degree + other.degree);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                if let Some((idx, sign)) = merge_sorted(ia, ib) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    pub fn conj_coeffs(&self) -> KForm {
        KForm {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
        }
    }

    /// Complex conjugation of a bigraded form over an n-generator coframe:
    /// swaps each index `k <-> n + k`, conjugates coefficients, and restores
    /// increasing index order with the resulting sign.
    pub fn conj_bar(&self, n: usize) -> KForm {
        assert_eq!(self.ambient, 2 * n);
        let mut out = KForm::zero(self.ambient, self.degree);
        for (idx, c) in &self.terms {
            let swapped: Vec<u8> = idx
                .iter()
                .map(|&i| if (i as usize) <= n { i + n as u8 } else { i - n as u8 })
                .collect();
            let (sorted, sign) = sort_with_sign(&swapped);
            let mut v = c.conj();
            if sign < 0 {
                v = -v;
            }
            out.add_term(sorted, v);
        }
        out
    }

    /// Rewrites the form after the substitution `e^i = sum_j rows[i][j] f^j`.
    pub fn substitute(&self, rows: &[Vec<Gauss>], new_ambient: usize) -> KForm {
        assert_eq!(rows.len(), self.ambient);
        let images: Vec<KForm> =
            rows.iter().map(|r| KForm::one_form(new_ambient, r)).collect();
        let mut out = KForm::zero(new_ambient, self.degree);
        for (idx, c) in &self.terms {
            let mut prod = KForm::monomial(new_ambient, &[], Gauss::one());
            for &i in idx {
                prod = prod.wedge(&images[(i - 1) as usize]);
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Splits a form over a 2n-index complex coframe by bidegree (p, q),
    /// p = number of indices at most n.
    pub fn bigraded_parts(&self, n: usize) -> BTreeMap<(usize, usize), KForm> {
        assert_eq!(self.ambient, 2 * n);
        let mut parts: BTreeMap<(usize, usize), KForm> = BTreeMap::new();
        for (idx, c) in &self.terms {
            let p = idx.iter().filter(|&&i| (i as usize) <= n).count();
            let q = self.degree - p;
            parts
                .entry((p, q))
                .or_insert_with(|| KForm::zero(self.ambient, self.degree))
                .add_term(idx.clone(), c.clone());
        }
        parts
    }

    pub fn render(&self, style: FormStyle) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            let mono = style.monomial(idx);
            let (sign, body) = style.coefficient(c, &mono);
            if k == 0 {
                if sign < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if sign < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(FormStyle::real_plain()))
    }
}

/// Rendering options for forms: generator letter, barred-index handling for
/// complex coframes, plain text or TeX.
#[derive(Clone, Copy)]
pub struct FormStyle {
    pub letter: char,
    /// Number of holomorphic generators; 0 means a purely real basis.
    pub bar_from: usize,
    pub tex: bool,
}

impl FormStyle {
    pub fn real_plain() -> Self {
        FormStyle { letter: 'e', bar_from: 0, tex: false }
    }

    pub fn real_tex() -> Self {
        FormStyle { letter: 'e', bar_from: 0, tex: true }
    }

    pub fn bigraded_plain(n: usize) -> Self {
        FormStyle { letter: 'w', bar_from: n, tex: false }
    }

    pub fn bigraded_tex(n: usize) -> Self {
        FormStyle { letter: '\u{3c9}', bar_from: n, tex: true }
    }

    fn monomial(&self, idx: &[u8]) -> String {
        let one = |i: u8| -> String {
            if self.bar_from > 0 && (i as usize) > self.bar_from {
                let base = i as usize - self.bar_from;
                if self.tex {
                    format!("\\bar{{{base}}}")
                } else {
                    format!("~{base}")
                }
            } else {
                format!("{i}")
            }
        };
        let body: String = idx.iter().map(|&i| one(i)).collect();
        if self.tex {
            let letter = if self.letter == '\u{3c9}' { "\\omega".to_string() } else { self.letter.to_string() };
            format!("{letter}^{{{body}}}")
        } else {
            format!("{}{}", self.letter, body)
        }
    }

    /// Returns (sign, rendered "coeff*monomial") with the sign pulled out
    /// when the coefficient is real.
    fn coefficient(&self, c: &Gauss, mono: &str) -> (i8, String) {
        use num_traits::{One, Signed, Zero};
        if c.is_real() {
            let sign = if c.re.is_negative() { -1 } else { 1 };
            let abs = c.re.abs();
            if abs.is_one() {
                (sign, mono.to_string())
            } else {
                (sign, format!("{abs} {mono}"))
            }
        } else if c.re.is_zero() && c.im.is_one() {
            (1, format!("i {mono}"))
        } else if c.re.is_zero() && (-&c.im).is_one() {
            (-1, format!("i {mono}"))
        } else {
            (1, format!("({c}) {mono}"))
        }
    }
}

/// Merges two increasing index tuples; `None` on a repeated index, otherwise
/// the merged tuple and the sign of the shuffle.
fn merge_sorted(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i8)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut sign = 1i8;
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining a-elements.
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

fn sort_with_sign(idx: &[u8]) -> (Vec<u8>, i8) {
    let mut v = idx.to_vec();
    let mut sign = 1i8;
    // Insertion sort; tuples have at most nine entries.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// All strictly increasing k-tuples from 1..=n, in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    fn rec(n: u8, k: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=(n + 1 - remaining as u8) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(n as u8, k, 1, &mut cur, &mut out);
    }
    out
}

/// Chevalley-Eilenberg differential of a form, extended from the structure
/// equations as an antiderivation.
pub fn ce_differential(g: &LieAlgebra, form: &KForm) -> KForm {
    assert_eq!(form.ambient(), g.dim());
    let mut out = KForm::zero(form.ambient(), form.degree() + 1);
    for (idx, c) in form.terms() {
        for (pos, &i) in idx.iter().enumerate() {
            let di = g.differential(i as usize);
            if di.is_zero() {
                continue;
            }
            let mut rest: Vec<u8> = idx.clone();
            rest.remove(pos);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            for (didx, dc) in di.terms() {
                if let Some((merged, msign)) = merge_sorted(didx, &rest) {
                    let mut v = c * dc;
                    if sign * msign < 0 {
                        v = -v;
                    }
                    out.add_term(merged, v);
                }
            }
        }
    }
    out
}

/// The (p+1, q) and (p, q+1) parts of the differential of a (p, q)-form
/// over an integrable coframe presentation.
pub fn del_delbar(p: &CoframePresentation, form: &KForm) -> (KForm, KForm) {
    let n = p.generators();
    assert_eq!(form.ambient(), 2 * n);
    let d = p.d(form);
    let mut parts = d.bigraded_parts(n);
    let (mut pp, mut qq) = (0usize, 0usize);
    if let Some((idx, _)) = form.terms().next() {
        pp = idx.iter().filter(|&&i| (i as usize) <= n).count();
        qq = form.degree() - pp;
    }
    let del = parts
        .remove(&(pp + 1, qq))
        .unwrap_or_else(|| KForm::zero(2 * n, form.degree() + 1));
    let delbar = parts
        .remove(&(pp, qq + 1))
        .unwrap_or_else(|| KForm::zero(2 * n, form.degree() + 1));
    assert!(
        parts.values().all(KForm::is_zero),
        "differential left the two expected bidegrees"
    );
    (del, delbar)
}
