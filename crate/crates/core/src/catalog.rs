//! Executable constructors for the catalogued families.
//!
//! The weakly non-nilpotent normal form lives on a (1,0)-coframe w^1..w^4:
//!
//! ```text
//! dw1 = 0
//! dw2 = w^13 + w^{1 3b}
//! dw3 = i eps w^{1 1b} + i del w^{1 2b} - i del w^{2 1b}
//! dw4 = a w^12 + B w^{1 1b} + nu (w^23 + 2 del eps w^{1 3b} + w^{2 3b})
//! ```
//!
//! with eps in {0,1}, del = +-1, and (nu, a, B) confined to four admissible
//! branches; every admissible tuple is a pairwise non-equivalent structure.
//! `build_generic` produces the one-parameter-freer extension the normal form
//! is reduced from, `reduce_to_normal_form` performs that reduction over exact
//! scalars, and `realify_table1` applies the explicit real bases that land on
//! the named eight-dimensional algebras.  The strongly non-nilpotent families
//! I and II and the six-dimensional quotient target used by the
//! classification pipeline are built here as well.
//!
//! All reductions need polar splits z = r u with |u| = 1; these exist over
//! Q(i) only when the modulus is rational, so inputs requiring an irrational
//! rotation are rejected with [`Error::IrrationalRotation`] rather than
//! approximated.

use num_traits::{One, Signed, Zero};

use crate::cpxstruct::{CoframePresentation, RealJ};
use crate::error::{Error, Result};
use crate::exactnum::{
    gauss, gauss_i, parse_gauss, parse_rat, rat, rat_int, rat_sqrt, Gauss, Mat, QuadGauss, Rat,
};
use crate::forms::{FormStyle, KForm};
use crate::liealg::{Builtin, LieAlgebra};

/// Parameters of the weakly non-nilpotent normal form; validated against the
/// four admissible branches at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WnNParams {
    pub epsilon: u8,
    pub delta: i8,
    pub nu: u8,
    pub a: Rat,
    pub b: Gauss,
}

fn check_discrete(name: &str, v: i64, allowed: &[i64]) -> Result<()> {
    if allowed.contains(&v) {
        Ok(())
    } else {
        Err(Error::InadmissibleParams {
            reason: format!("{name} must be one of {allowed:?}, got {v}"),
        })
    }
}

impl WnNParams {
    pub fn new(epsilon: i64, delta: i64, nu: i64, a: Rat, b: Gauss) -> Result<Self> {
        check_discrete("epsilon", epsilon, &[0, 1])?;
        check_discrete("delta", delta, &[-1, 1])?;
        check_discrete("nu", nu, &[0, 1])?;
        let p = WnNParams {
            epsilon: epsilon as u8,
            delta: delta as i8,
            nu: nu as u8,
            a,
            b,
        };
        p.branch()?;
        Ok(p)
    }

    /// Which admissible branch the (nu, a, B) part sits in, or why none fits.
    pub fn branch(&self) -> Result<&'static str> {
        let bad = |reason: String| Err(Error::InadmissibleParams { reason });
        let one = Rat::one();
        if self.a.is_negative() {
            return bad(format!("a must be nonnegative, got {}", self.a));
        }
        if self.nu == 0 && self.a.is_zero() {
            if self.b.is_zero() {
                return Ok("nu=a=B=0");
            }
            if self.b == Gauss::one() {
                return Ok("nu=a=0, B=1");
            }
            return bad(format!("nu=0, a=0 requires B=0 or B=1, got B={}", self.b));
        }
        if self.a == &one - &rat_int(self.nu as i64) {
            // nu=0 with a=1, or nu=1 with a=0
            if !self.b.is_real() || self.b.re.is_negative() {
                return bad(format!(
                    "branch a=1-nu requires B real and nonnegative, got B={}",
                    self.b
                ));
            }
            if self.epsilon == 0 && !self.b.is_zero() && self.b != Gauss::one() {
                return bad(format!(
                    "branch a=1-nu with epsilon=0 requires B in {{0,1}}, got B={}",
                    self.b
                ));
            }
            return Ok("a=1-nu, B real >= 0");
        }
        if self.nu == 1 {
            // a > 0 and a != 1-nu = 0 here
            if self.epsilon == 0 {
                if !self.a.is_one() {
                    return bad(format!("nu=1, a>0 with epsilon=0 requires a=1, got a={}", self.a));
                }
                if self.b.im.is_negative() {
                    return bad(format!(
                        "nu=1, a=1 with epsilon=0 requires Im B >= 0, got B={}",
                        self.b
                    ));
                }
            }
            return Ok("nu=1, a>0, B complex");
        }
        bad(format!("nu=0 requires a in {{0,1}}, got a={}", self.a))
    }

    /// Canonical tuple label, accepted back by [`WnNParams::parse`].
    pub fn label(&self) -> String {
        format!(
            "wnn({},{},{},{},{})",
            self.epsilon, self.delta, self.nu, self.a, self.b
        )
    }

    /// Parses "wnn(epsilon,delta,nu,a,B)" with rational a and Gaussian B.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = tuple_body(s, "wnn", 5)?;
        let e = parse_small_int(s, parts[0])?;
        let d = parse_small_int(s, parts[1])?;
        let n = parse_small_int(s, parts[2])?;
        let a = parse_rat(parts[3])?;
        let b = parse_gauss(parts[4])?;
        WnNParams::new(e, d, n, a, b)
    }
}

fn tuple_body<'a>(s: &'a str, head: &str, arity: usize) -> Result<Vec<&'a str>> {
    let err = || Error::Parse {
        position: 0,
        expected: format!("{head}(..) tuple with {arity} components"),
        found: s.trim().to_string(),
    };
    let body = s
        .trim()
        .strip_prefix(head)
        .and_then(|r| r.trim_start().strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(err)?;
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != arity {
        return Err(err());
    }
    Ok(parts)
}

fn parse_small_int(whole: &str, part: &str) -> Result<i64> {
    part.trim().parse().map_err(|_| Error::Parse {
        position: 0,
        expected: "small integer".to_string(),
        found: whole.trim().to_string(),
    })
}

/// Parameters of the generic extension: the fourth differential before
/// normalization, with free complex coefficients A_eta and B_eta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericExtParams {
    pub epsilon: u8,
    pub delta: i8,
    pub nu: u8,
    pub a_eta: Gauss,
    pub b_eta: Gauss,
}

impl GenericExtParams {
    pub fn new(epsilon: i64, delta: i64, nu: i64, a_eta: Gauss, b_eta: Gauss) -> Result<Self> {
        check_discrete("epsilon", epsilon, &[0, 1])?;
        check_discrete("delta", delta, &[-1, 1])?;
        check_discrete("nu", nu, &[0, 1])?;
        Ok(GenericExtParams {
            epsilon: epsilon as u8,
            delta: delta as i8,
            nu: nu as u8,
            a_eta,
            b_eta,
        })
    }
}

// Index layout on the 2n = 8 generators: k is w^k, 4 + k is conj(w^k).
const B1: u8 = 5;
const B2: u8 = 6;
const B3: u8 = 7;

fn mono8(idx: &[u8], c: Gauss) -> KForm {
    KForm::monomial(8, idx, c)
}

/// The differentials dw^1..dw^3 shared by the whole family.
fn first_three(epsilon: u8, delta: i8) -> Vec<KForm> {
    let mut d3 = KForm::zero(8, 2);
    if epsilon == 1 {
        d3.add_term(vec![1, B1], gauss(0, 1));
    }
    d3.add_term(vec![1, B2], gauss(0, delta as i64));
    d3.add_term(vec![2, B1], gauss(0, -(delta as i64)));
    vec![
        KForm::zero(8, 2),
        mono8(&[1, 3], Gauss::one()).add(&mono8(&[1, B3], Gauss::one())),
        d3,
    ]
}

fn fourth(a: &Gauss, b: &Gauss, nu: u8, epsilon: u8, delta: i8) -> KForm {
    let mut d4 = KForm::zero(8, 2);
    if !a.is_zero() {
        d4.add_term(vec![1, 2], a.clone());
    }
    if !b.is_zero() {
        d4.add_term(vec![1, B1], b.clone());
    }
    if nu == 1 {
        d4.add_term(vec![2, 3], Gauss::one());
        if epsilon == 1 {
            d4.add_term(vec![1, B3], gauss(2 * delta as i64, 0));
        }
        d4.add_term(vec![2, B3], Gauss::one());
    }
    d4
}

/// The normal-form presentation for an admissible tuple.
pub fn build_wnn(p: &WnNParams) -> CoframePresentation {
    let mut d = first_three(p.epsilon, p.delta);
    d.push(fourth(
        &Gauss::from_rat(p.a.clone()),
        &p.b,
        p.nu,
        p.epsilon,
        p.delta,
    ));
    CoframePresentation::new(d).expect("admissible parameters satisfy d^2 = 0")
}

/// The generic extension; integrable for every parameter choice.
pub fn build_generic(p: &GenericExtParams) -> CoframePresentation {
    let mut d = first_three(p.epsilon, p.delta);
    d.push(fourth(&p.a_eta, &p.b_eta, p.nu, p.epsilon, p.delta));
    CoframePresentation::new(d).expect("generic extension satisfies d^2 = 0")
}

/// Raw probe: the fixed first three equations with an arbitrary fourth
/// differential.  Coefficient choices outside the generic extension fail the
/// d^2 = 0 check inside the presentation constructor.
pub fn build_with_fourth(epsilon: i64, delta: i64, d4: KForm) -> Result<CoframePresentation> {
    check_discrete("epsilon", epsilon, &[0, 1])?;
    check_discrete("delta", delta, &[-1, 1])?;
    let mut d = first_three(epsilon as u8, delta as i8);
    d.push(d4);
    CoframePresentation::new(d)
}

fn irr(what: &str) -> Error {
    Error::IrrationalRotation {
        what: what.to_string(),
    }
}

fn diag4(l1: Gauss, l2: Gauss, l3: Gauss, l4: Gauss) -> Mat {
    let mut m = Mat::zero(4, 4);
    for (k, l) in [l1, l2, l3, l4].into_iter().enumerate() {
        m.set(k, k, l);
    }
    m
}

/// Reduces a generic extension to its admissible normal form.  Returns the
/// normal parameters together with the diagonal coframe change Lambda, whose
/// rows express the normal coframe in the generic one; it validates under
/// [`crate::cpxstruct::check_intertwiner`].
pub fn reduce_to_normal_form(p: &GenericExtParams) -> Result<(WnNParams, Mat)> {
    let e = p.epsilon as i64;
    let d = p.delta as i64;
    let one = Gauss::one;
    let from_rat = Gauss::from_rat;
    if p.nu == 0 {
        if p.a_eta.is_zero() {
            if p.b_eta.is_zero() {
                let q = WnNParams::new(e, d, 0, Rat::zero(), Gauss::zero())?;
                return Ok((q, Mat::identity(4)));
            }
            // w^4 = eta^4 / B_eta
            let q = WnNParams::new(e, d, 0, Rat::zero(), Gauss::one())?;
            return Ok((q, diag4(one(), one(), one(), p.b_eta.inv())));
        }
        let (a, ua) = p.a_eta.polar().ok_or_else(|| irr("modulus of A_eta"))?;
        if p.b_eta.is_zero() {
            // beta := alpha, so the half-angle unit collapses to 1
            let l4 = &from_rat(a.recip()) * &ua.conj();
            let q = WnNParams::new(e, d, 0, Rat::one(), Gauss::zero())?;
            return Ok((q, diag4(one(), one(), one(), l4)));
        }
        let (b, ub) = p.b_eta.polar().ok_or_else(|| irr("modulus of B_eta"))?;
        let half = (&ua * &ub.conj())
            .sqrt()
            .ok_or_else(|| irr("half-angle unit sqrt(e^{i(alpha-beta)})"))?;
        if p.epsilon == 1 {
            let l4 = &from_rat(a.recip()) * &ub.conj();
            let q = WnNParams::new(1, d, 0, Rat::one(), from_rat(&b / &a))?;
            return Ok((q, diag4(half.clone(), half, one(), l4)));
        }
        // extra real scaling by a/b pushes B to 1
        let s = from_rat(&a / &b);
        let l2 = &s * &half;
        let l4 = &from_rat(b.recip()) * &ub.conj();
        let q = WnNParams::new(0, d, 0, Rat::one(), Gauss::one())?;
        return Ok((q, diag4(half, l2, s, l4)));
    }
    // nu = 1
    if p.a_eta.is_zero() {
        if p.b_eta.is_zero() {
            let q = WnNParams::new(e, d, 1, Rat::zero(), Gauss::zero())?;
            return Ok((q, Mat::identity(4)));
        }
        let (b, ub) = p.b_eta.polar().ok_or_else(|| irr("modulus of B_eta"))?;
        let u = ub.conj();
        if p.epsilon == 1 {
            let q = WnNParams::new(1, d, 1, Rat::zero(), from_rat(b))?;
            return Ok((q, diag4(u.clone(), u.clone(), one(), u)));
        }
        let s = rat_sqrt(&b).ok_or_else(|| irr("square root of |B_eta|"))?;
        let si = from_rat(s.recip());
        let q = WnNParams::new(0, d, 1, Rat::zero(), Gauss::one())?;
        return Ok((
            q,
            diag4(u.clone(), &si * &u, si, &from_rat(b.recip()) * &u),
        ));
    }
    let (a, ua) = p.a_eta.polar().ok_or_else(|| irr("modulus of A_eta"))?;
    if p.epsilon == 1 {
        let q = WnNParams::new(1, d, 1, a, &p.b_eta * &ua)?;
        return Ok((q, diag4(ua.clone(), ua.clone(), one(), ua)));
    }
    // epsilon = 0: normalize a to 1 and flip the sign so that Im B >= 0
    let c = &p.b_eta * &ua;
    let sigma = if c.im.is_negative() { -Rat::one() } else { Rat::one() };
    let a2 = &a * &a;
    let scale = &sigma / &a2;
    let q = WnNParams::new(0, d, 1, Rat::one(), &from_rat(scale.clone()) * &c)?;
    let l1 = &from_rat(sigma.clone()) * &ua;
    let l2 = &from_rat(a.recip()) * &ua;
    let l3 = from_rat(&sigma / &a);
    let l4 = &from_rat(scale) * &ua;
    Ok((q, diag4(l1, l2, l3, l4)))
}

fn qrow(entries: &[(usize, Gauss)]) -> Vec<QuadGauss> {
    let mut r = vec![QuadGauss::zero(); 8];
    for (p, c) in entries {
        r[p - 1] = QuadGauss::from_gauss(c.clone());
    }
    r
}

fn qrow_sqrt2(entries: &[(usize, Gauss)]) -> Vec<QuadGauss> {
    let mut r = vec![QuadGauss::zero(); 8];
    for (p, c) in entries {
        r[p - 1] = QuadGauss::sqrt2_times(c.clone());
    }
    r
}

/// The explicit real coframe rows for the parameter row containing `p`,
/// together with the real algebra they are known to produce.
fn table1_rows(p: &WnNParams) -> (Vec<Vec<QuadGauss>>, Builtin) {
    let d = p.delta as i64;
    let i = gauss_i();
    let re = |x: i64| gauss(x, 0);
    if p.nu == 0 {
        if p.a.is_zero() && p.b.is_zero() {
            if p.epsilon == 0 {
                return (
                    vec![
                        qrow(&[(1, re(1)), (3, -i.clone())]),
                        qrow(&[(4, re(1)), (5, i)]),
                        qrow(&[(2, Gauss::from_rat(rat(1, 2))), (6, gauss(0, 2 * d))]),
                        qrow(&[(7, re(1)), (8, gauss(0, -1))]),
                    ],
                    Builtin::F1,
                );
            }
            let h = Gauss::from_rat(rat(1, 2));
            return (
                vec![
                    qrow_sqrt2(&[(1, h.clone()), (2, &h * &i)]),
                    qrow_sqrt2(&[(4, re(1)), (5, i.clone())]),
                    qrow(&[(3, re(1)), (6, gauss(0, 2 * d))]),
                    qrow(&[(7, re(1)), (8, -i)]),
                ],
                Builtin::F2,
            );
        }
        if p.a.is_zero() {
            // B = 1
            if p.epsilon == 0 {
                return (
                    vec![
                        qrow(&[(1, re(1)), (2, i)]),
                        qrow(&[(5, re(4)), (6, gauss(0, 4))]),
                        qrow(&[(3, re(2)), (7, gauss(0, 8 * d))]),
                        qrow(&[(8, re(2)), (4, gauss(0, -2))]),
                    ],
                    Builtin::F3,
                );
            }
            return (
                vec![
                    qrow(&[(1, re(1)), (2, i)]),
                    qrow(&[(4, re(4)), (5, gauss(0, 4))]),
                    qrow(&[(3, re(2)), (6, gauss(0, 8 * d))]),
                    qrow(&[(7, re(2)), (3, gauss(0, -2)), (8, gauss(0, 2))]),
                ],
                Builtin::F2,
            );
        }
        // a = 1: the f4 row, branching on epsilon inside the coefficients
        let b = p.b.re.clone();
        let e = p.epsilon as i64;
        let two_b = &b * &rat_int(2);
        return (
            vec![
                qrow(&[(1, re(1)), (2, i)]),
                qrow(&[
                    (4, re(4)),
                    (6, gauss(0, 4)),
                    (2, Gauss::from_parts(Rat::zero(), &two_b * &rat_int(1 - e))),
                ]),
                qrow(&[(3, re(2)), (5, gauss(0, 8 * d)), (7, gauss(0, 8 * d))]),
                qrow(&[
                    (5, re(4)),
                    (7, re(-4)),
                    (8, gauss(0, 4)),
                    (3, Gauss::from_parts(Rat::zero(), -(&two_b * &rat_int(e)))),
                ]),
            ],
            if p.epsilon == 0 { Builtin::F4_0 } else { Builtin::F4_1 },
        );
    }
    // nu = 1
    if p.a.is_zero() {
        if p.epsilon == 0 {
            let target = if p.b.is_zero() { Builtin::F5_0 } else { Builtin::F5_1 };
            return (
                vec![
                    qrow(&[(1, re(1)), (2, i)]),
                    qrow(&[(4, re(2)), (5, gauss(0, 2))]),
                    qrow(&[(3, re(1)), (8, gauss(0, 4 * d))]),
                    qrow(&[(6, re(-4)), (7, gauss(0, -4))]),
                ],
                target,
            );
        }
        let b = p.b.re.clone();
        return (
            vec![
                qrow(&[(1, re(1)), (2, i)]),
                qrow(&[(4, re(4)), (5, gauss(0, 4))]),
                qrow(&[(3, re(2)), (6, gauss(0, 8 * d))]),
                qrow(&[
                    (8, re(16)),
                    (7, gauss(0, -16)),
                    (4, re(4 * d)),
                    (5, gauss(0, 4 * d)),
                    (3, Gauss::from_parts(Rat::zero(), -(&b * &rat_int(2)))),
                ]),
            ],
            Builtin::F6,
        );
    }
    if p.epsilon == 0 {
        if p.b.im.is_zero() {
            let b = p.b.re.clone();
            let from = Gauss::from_rat;
            return (
                vec![
                    qrow(&[(1, re(-1)), (2, -i.clone())]),
                    qrow(&[(4, re(-1)), (1, from(&b * &rat_int(2))), (5, -i)]),
                    qrow(&[(3, Gauss::from_rat(rat(1, 2))), (6, gauss(0, 2 * d))]),
                    qrow(&[
                        (7, re(1)),
                        (6, re(-1)),
                        (4, from(&b * &rat_int(2))),
                        (1, from(-(&b * &b) * &rat_int(4))),
                        (8, gauss(0, 1)),
                    ]),
                ],
                Builtin::F7_0,
            );
        }
        let b1 = p.b.re.clone();
        let b2 = p.b.im.clone();
        let from = Gauss::from_rat;
        let b2sq = &b2 * &b2;
        let b2cu = &b2sq * &b2;
        return (
            vec![
                qrow(&[
                    (1, from(-(&b2 * &rat_int(2)))),
                    (2, Gauss::from_parts(Rat::zero(), -(&b2 * &rat_int(2)))),
                ]),
                qrow(&[
                    (4, from(-(&b2sq * &rat_int(4)))),
                    (1, from(&(&b1 * &b2) * &rat_int(4))),
                    (5, Gauss::from_parts(Rat::zero(), -(&b2sq * &rat_int(4)))),
                ]),
                qrow(&[
                    (3, from(b2.clone())),
                    (6, Gauss::from_parts(Rat::zero(), &b2cu * &rat_int(16 * d))),
                ]),
                qrow(&[
                    (7, from(&b2cu * &rat_int(8))),
                    (6, from(-(&b2cu * &rat_int(8)))),
                    (4, from(&(&b1 * &b2sq) * &rat_int(8))),
                    (1, from(-(&(&(&b1 * &b1) * &b2) * &rat_int(8)))),
                    (8, Gauss::from_parts(Rat::zero(), &b2cu * &rat_int(8))),
                ]),
            ],
            Builtin::F7_1,
        );
    }
    // epsilon = 1, a > 0, B complex: the f8 row
    let a = p.a.clone();
    let from = Gauss::from_rat;
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a4 = &a2 * &a2;
    let a5 = &a4 * &a;
    let q1 = -(&a / &rat_int(4));
    let q2 = -(&a3 / &rat_int(16));
    let q3 = &a2 / &rat_int(8);
    let q4 = &a5 / &rat_int(64);
    let i_ = gauss_i();
    (
        vec![
            qrow(&[(1, from(q1.clone())), (2, &from(q1) * &i_)]),
            qrow(&[(4, from(q2.clone())), (5, &from(q2.clone()) * &i_)]),
            qrow(&[
                (3, from(q3.clone())),
                (6, Gauss::from_parts(Rat::zero(), &(&a4 / &rat_int(32)) * &rat_int(d))),
            ]),
            qrow(&[
                (7, from(q4.clone())),
                (6, from(-q4.clone())),
                (8, &from(q4) * &i_),
                (3, &(&-i_ * &p.b) * &from(q3)),
                (4, from(&q2 * &rat_int(d))),
                (5, &from(&q2 * &rat_int(d)) * &gauss_i()),
            ]),
        ],
        Builtin::F8,
    )
}

/// Realifies an admissible tuple through its explicit real basis and checks
/// that the outcome equals the named algebra's structure constants verbatim.
pub fn realify_table1(p: &WnNParams) -> Result<(LieAlgebra, RealJ, Builtin)> {
    let pres = build_wnn(p);
    let (rows, target) = table1_rows(p);
    let (g, j) = pres.realify_with_rows(&rows)?;
    let want = target.algebra();
    if g != want {
        for k in 1..=8 {
            if g.differential(k) != want.differential(k) {
                return Err(Error::RowMismatch {
                    target: target.label().to_string(),
                    generator: k,
                    got: g.differential(k).render(FormStyle::real_plain()),
                    expected: want.differential(k).render(FormStyle::real_plain()),
                });
            }
        }
    }
    Ok((g, j, target))
}

/// Parameters of the two strongly non-nilpotent comparison families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SnNParams {
    FamilyI {
        delta: i8,
        epsilon: u8,
        nu: u8,
        a: Rat,
        b: Rat,
    },
    FamilyII {
        epsilon: u8,
        mu: u8,
        nu: u8,
        a: Rat,
        b: Rat,
    },
}

impl SnNParams {
    pub fn family_i(delta: i64, epsilon: i64, nu: i64, a: Rat, b: Rat) -> Result<Self> {
        check_discrete("delta", delta, &[-1, 1])?;
        check_discrete("epsilon", epsilon, &[0, 1])?;
        check_discrete("nu", nu, &[0, 1])?;
        if a.is_negative() {
            return Err(Error::InadmissibleParams {
                reason: format!("family I requires a >= 0, got a={a}"),
            });
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::InadmissibleParams {
                reason: "family I requires (a,b) != (0,0)".to_string(),
            });
        }
        Ok(SnNParams::FamilyI {
            delta: delta as i8,
            epsilon: epsilon as u8,
            nu: nu as u8,
            a,
            b,
        })
    }

    pub fn family_ii(epsilon: i64, mu: i64, nu: i64, a: Rat, b: Rat) -> Result<Self> {
        check_discrete("epsilon", epsilon, &[0, 1])?;
        check_discrete("mu", mu, &[0, 1])?;
        check_discrete("nu", nu, &[0, 1])?;
        if epsilon == 0 && mu == 0 {
            return Err(Error::InadmissibleParams {
                reason: "family II requires (epsilon,mu) != (0,0)".to_string(),
            });
        }
        if mu == 1 && nu == 1 {
            return Err(Error::InadmissibleParams {
                reason: "family II requires mu nu = 0".to_string(),
            });
        }
        Ok(SnNParams::FamilyII {
            epsilon: epsilon as u8,
            mu: mu as u8,
            nu: nu as u8,
            a,
            b,
        })
    }

    pub fn label(&self) -> String {
        match self {
            SnNParams::FamilyI { delta, epsilon, nu, a, b } => {
                format!("snn1({delta},{epsilon},{nu},{a},{b})")
            }
            SnNParams::FamilyII { epsilon, mu, nu, a, b } => {
                format!("snn2({epsilon},{mu},{nu},{a},{b})")
            }
        }
    }

    /// Parses "snn1(delta,epsilon,nu,a,b)" or "snn2(epsilon,mu,nu,a,b)".
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("snn1") {
            let parts = tuple_body(s, "snn1", 5)?;
            return SnNParams::family_i(
                parse_small_int(s, parts[0])?,
                parse_small_int(s, parts[1])?,
                parse_small_int(s, parts[2])?,
                parse_rat(parts[3])?,
                parse_rat(parts[4])?,
            );
        }
        if t.starts_with("snn2") {
            let parts = tuple_body(s, "snn2", 5)?;
            return SnNParams::family_ii(
                parse_small_int(s, parts[0])?,
                parse_small_int(s, parts[1])?,
                parse_small_int(s, parts[2])?,
                parse_rat(parts[3])?,
                parse_rat(parts[4])?,
            );
        }
        Err(Error::Parse {
            position: 0,
            expected: "snn1(..) or snn2(..) tuple".to_string(),
            found: t.to_string(),
        })
    }
}

/// The strongly non-nilpotent presentation for either family.
pub fn build_snn(p: &SnNParams) -> CoframePresentation {
    let d = match p {
        SnNParams::FamilyI { delta, epsilon, nu, a, b } => {
            let dl = *delta as i64;
            let mut d2 = KForm::zero(8, 2);
            if *epsilon == 1 {
                d2.add_term(vec![1, B1], Gauss::one());
            }
            let mut d3 = mono8(&[1, 4], Gauss::one()).add(&mono8(&[1, 4 + 4], Gauss::one()));
            if !a.is_zero() {
                d3.add_term(vec![2, B1], Gauss::from_rat(a.clone()));
            }
            if *epsilon == 1 && !b.is_zero() {
                d3.add_term(vec![1, B2], Gauss::from_parts(Rat::zero(), b * &rat_int(dl)));
            }
            let mut d4 = KForm::zero(8, 2);
            if *nu == 1 {
                d4.add_term(vec![1, B1], gauss(0, 1));
            }
            if !b.is_zero() {
                d4.add_term(vec![2, B2], Gauss::from_rat(b.clone()));
            }
            d4.add_term(vec![1, B3], gauss(0, dl));
            d4.add_term(vec![3, B1], gauss(0, -dl));
            vec![KForm::zero(8, 2), d2, d3, d4]
        }
        SnNParams::FamilyII { epsilon, mu, nu, a, b } => {
            let d2 = mono8(&[1, 4], Gauss::one()).add(&mono8(&[1, 4 + 4], Gauss::one()));
            let mut d3 = KForm::zero(8, 2);
            if !a.is_zero() {
                d3.add_term(vec![1, B1], Gauss::from_rat(a.clone()));
            }
            if *epsilon == 1 {
                d3.add_term(vec![1, 2], Gauss::one());
                d3.add_term(vec![1, B2], Gauss::one());
                d3.add_term(vec![2, B1], -Gauss::one());
            }
            if *mu == 1 {
                d3.add_term(vec![2, 4], gauss(0, 1));
                d3.add_term(vec![2, 4 + 4], gauss(0, 1));
            }
            let mut d4 = KForm::zero(8, 2);
            if *nu == 1 {
                d4.add_term(vec![1, B1], gauss(0, 1));
            }
            if *mu == 1 {
                d4.add_term(vec![2, B2], -Gauss::one());
            }
            if !b.is_zero() {
                let ib = Gauss::from_parts(Rat::zero(), b.clone());
                d4.add_term(vec![1, B2], ib.clone());
                d4.add_term(vec![2, B1], -ib);
            }
            d4.add_term(vec![1, B3], gauss(0, 1));
            d4.add_term(vec![3, B1], gauss(0, -1));
            vec![KForm::zero(8, 2), d2, d3, d4]
        }
    };
    CoframePresentation::new(d).expect("SnN family satisfies d^2 = 0")
}

/// The six-dimensional quotient target with brackets
/// `[Z1, Z3] = [Z1, conj Z3] = -Z2`, `[Z1, conj Z1] = -i eps (Z3 + conj Z3)`,
/// `[Z1, conj Z2] = -i del (Z3 - conj Z3)`, realified canonically.
pub fn build_snn6(epsilon: i64, delta: i64) -> Result<(LieAlgebra, RealJ)> {
    check_discrete("epsilon", epsilon, &[0, 1])?;
    check_discrete("delta", delta, &[-1, 1])?;
    let mut d3 = KForm::zero(6, 2);
    if epsilon == 1 {
        d3.add_term(vec![1, 4], gauss(0, 1));
    }
    d3.add_term(vec![1, 5], gauss(0, delta));
    d3.add_term(vec![2, 4], gauss(0, -delta));
    let d = vec![
        KForm::zero(6, 2),
        KForm::monomial(6, &[1, 3], Gauss::one()).add(&KForm::monomial(6, &[1, 6], Gauss::one())),
        d3,
    ];
    let pres = CoframePresentation::new(d).expect("six-dimensional family satisfies d^2 = 0");
    pres.realify()
}

/// Exhaustive discrete axes and exact samples on the continuous axes, always
/// including the boundary values B = 0 and Im B = 0 where admissible.
pub fn admissible_samples() -> Vec<WnNParams> {
    let mut out = Vec::new();
    let mut push = |e: i64, d: i64, n: i64, a: Rat, b: Gauss| {
        out.push(WnNParams::new(e, d, n, a, b).expect("sample tuple is admissible"));
    };
    let real_axis = [rat_int(0), rat_int(1), rat_int(2), rat(1, 2), rat_int(3), rat(7, 2)];
    let upper_half = [
        gauss(0, 0),
        gauss(1, 0),
        gauss(-2, 0),
        gauss(0, 1),
        gauss(1, 1),
        Gauss::from_parts(rat(-3, 2), rat_int(2)),
        gauss(0, 2),
    ];
    let full_plane = [
        gauss(0, 0),
        gauss(0, 1),
        gauss(-1, 2),
        Gauss::from_parts(rat(3, 2), Rat::zero()),
        gauss(0, -1),
    ];
    let a_axis = [rat_int(1), rat_int(2), rat(1, 2), rat_int(3), rat_int(5)];
    for d in [1i64, -1] {
        for e in [0i64, 1] {
            push(e, d, 0, rat_int(0), gauss(0, 0));
            push(e, d, 0, rat_int(0), gauss(1, 0));
            for n in [0i64, 1] {
                let a = rat_int(1 - n);
                if e == 0 {
                    for b in [gauss(0, 0), gauss(1, 0)] {
                        push(e, d, n, a.clone(), b);
                    }
                } else {
                    for b in &real_axis {
                        push(e, d, n, a.clone(), Gauss::from_rat(b.clone()));
                    }
                }
            }
            if e == 0 {
                for b in &upper_half {
                    push(0, d, 1, rat_int(1), b.clone());
                }
            } else {
                for a in &a_axis {
                    for b in &full_plane {
                        push(1, d, 1, a.clone(), b.clone());
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpxstruct::{check_intertwiner, j_compatible_series, JType};

    #[test]
    fn admissibility_branches() {
        assert!(WnNParams::new(0, 1, 0, rat_int(0), gauss(0, 0)).is_ok());
        assert!(WnNParams::new(1, -1, 0, rat_int(0), gauss(1, 0)).is_ok());
        assert!(WnNParams::new(1, 1, 0, rat_int(1), Gauss::from_rat(rat(7, 2))).is_ok());
        assert!(WnNParams::new(0, 1, 1, rat_int(1), gauss(2, 3)).is_ok());

        let err = |r: Result<WnNParams>| match r {
            Err(Error::InadmissibleParams { reason }) => reason,
            other => panic!("expected inadmissible, got {other:?}"),
        };
        assert!(err(WnNParams::new(0, 1, 1, rat_int(2), gauss(0, 0))).contains("requires a=1"));
        assert!(err(WnNParams::new(0, 1, 0, rat_int(0), gauss(2, 0))).contains("B=0 or B=1"));
        assert!(err(WnNParams::new(0, 1, 0, rat_int(1), gauss(3, 0))).contains("{0,1}"));
        assert!(err(WnNParams::new(0, 1, 1, rat_int(1), gauss(0, -1))).contains("Im B >= 0"));
        assert!(err(WnNParams::new(1, 1, 0, rat_int(1), gauss(0, 2))).contains("real"));
        assert!(err(WnNParams::new(0, 2, 0, rat_int(0), gauss(0, 0))).contains("delta"));
        assert!(err(WnNParams::new(0, 1, 0, rat_int(2), gauss(0, 0))).contains("a in {0,1}"));
    }

    #[test]
    fn tuple_labels_round_trip() {
        for s in ["wnn(0,1,0,0,0)", "wnn(1,-1,1,2,3+i)", "wnn(0,1,1,1,1/2+2i)"] {
            let p = WnNParams::parse(s).unwrap();
            assert_eq!(p.label(), s);
        }
        assert!(WnNParams::parse("wnn(0,1)").is_err());
        assert!(WnNParams::parse("(0,0,0,12)").is_err());
        let q = SnNParams::parse("snn2(1,0,0,0,0)").unwrap();
        assert_eq!(q.label(), "snn2(1,0,0,0,0)");
        assert!(SnNParams::parse("snn2(0,0,0,0,0)").is_err());
    }

    #[test]
    fn wnn_structure_equations() {
        let p = WnNParams::new(1, 1, 1, rat_int(2), gauss(3, 1)).unwrap();
        let pres = build_wnn(&p);
        let d4 = pres.structure_form(4);
        assert_eq!(d4.coeff(&[1, 2]), gauss(2, 0));
        assert_eq!(d4.coeff(&[1, 5]), gauss(3, 1));
        assert_eq!(d4.coeff(&[2, 3]), gauss(1, 0));
        assert_eq!(d4.coeff(&[1, 7]), gauss(2, 0));
        assert_eq!(d4.coeff(&[2, 7]), gauss(1, 0));

        let trivial = WnNParams::new(0, 1, 0, rat_int(0), gauss(0, 0)).unwrap();
        assert!(build_wnn(&trivial).structure_form(4).is_zero());
    }

    #[test]
    fn generic_matches_wnn_on_normal_tuples() {
        let g = GenericExtParams::new(0, 1, 0, gauss(0, 0), gauss(0, 0)).unwrap();
        let w = WnNParams::new(0, 1, 0, rat_int(0), gauss(0, 0)).unwrap();
        assert_eq!(build_generic(&g), build_wnn(&w));
        // an arbitrary (A_eta, B_eta) still satisfies d^2 = 0
        let g = GenericExtParams::new(1, 1, 0, gauss(0, 3), gauss(2, 0)).unwrap();
        let _ = build_generic(&g);
    }

    #[test]
    fn raw_fourth_with_forbidden_coefficient_fails_jacobi() {
        // a w^{2 2bar} contribution is outside the integrable family
        let bad = KForm::monomial(8, &[2, 6], Gauss::one());
        assert!(matches!(
            build_with_fourth(0, 1, bad),
            Err(Error::JacobiViolation { .. })
        ));
        let ok = KForm::zero(8, 2);
        assert!(build_with_fourth(0, 1, ok).is_ok());
    }

    fn assert_reduction(p: &GenericExtParams, expect: &WnNParams) {
        let (q, lambda) = reduce_to_normal_form(p).unwrap();
        assert_eq!(&q, expect, "normal form for {p:?}");
        let res = check_intertwiner(&build_generic(p), &build_wnn(&q), &lambda).unwrap();
        for (k, r) in res.iter().enumerate() {
            assert!(r.is_zero(), "residual in slot {} for {p:?}", k + 1);
        }
    }

    #[test]
    fn reduction_golden_cases() {
        // B_eta-only rescaling
        for e in [0, 1] {
            let p = GenericExtParams::new(e, 1, 0, gauss(0, 0), gauss(3, 0)).unwrap();
            let q = WnNParams::new(e, 1, 0, rat_int(0), gauss(1, 0)).unwrap();
            assert_reduction(&p, &q);
        }
        // nu=1 with real positive A_eta is already normal
        let p = GenericExtParams::new(1, -1, 1, gauss(2, 0), gauss(0, 0)).unwrap();
        let q = WnNParams::new(1, -1, 1, rat_int(2), gauss(0, 0)).unwrap();
        let (got, lambda) = reduce_to_normal_form(&p).unwrap();
        assert_eq!(got, q);
        assert_eq!(lambda, Mat::identity(4));
        assert_reduction(&p, &q);
        // trivial tuple
        let p = GenericExtParams::new(0, 1, 0, gauss(0, 0), gauss(0, 0)).unwrap();
        let q = WnNParams::new(0, 1, 0, rat_int(0), gauss(0, 0)).unwrap();
        assert_reduction(&p, &q);
    }

    #[test]
    fn reduction_with_pythagorean_rotations() {
        // |3+4i| = 5, so the rotation unit is (3+4i)/5
        let u = Gauss::from_parts(rat(3, 5), rat(4, 5));
        for e in [0, 1] {
            for nu in [0, 1] {
                let p = GenericExtParams::new(e, 1, nu, gauss(3, 4), gauss(0, 0)).unwrap();
                let (q, lambda) = reduce_to_normal_form(&p).unwrap();
                if nu == 0 {
                    assert_eq!(q.a, Rat::one());
                    assert!(q.b.is_zero());
                } else if e == 1 {
                    assert_eq!(q.a, rat_int(5));
                    assert!(q.b.is_zero());
                } else {
                    assert_eq!(q.a, Rat::one());
                }
                let res = check_intertwiner(&build_generic(&p), &build_wnn(&q), &lambda).unwrap();
                assert!(res.iter().all(KForm::is_zero), "e={e} nu={nu}");
            }
        }
        // half-angle case: B_eta/|B_eta| is the square of (3-4i)/5
        let usq = &u.conj() * &u.conj();
        let p = GenericExtParams::new(1, 1, 0, gauss(1, 0), &usq * &gauss(2, 0)).unwrap();
        let q = WnNParams::new(1, 1, 0, rat_int(1), gauss(2, 0)).unwrap();
        assert_reduction(&p, &q);
        // nu=1, epsilon=0, A_eta != 0: sign flip enforces Im B >= 0
        let p = GenericExtParams::new(0, 1, 1, gauss(1, 0), gauss(1, -2)).unwrap();
        let (got, lambda) = reduce_to_normal_form(&p).unwrap();
        assert_eq!(got.b, gauss(-1, 2));
        let res = check_intertwiner(&build_generic(&p), &build_wnn(&got), &lambda).unwrap();
        assert!(res.iter().all(KForm::is_zero));
        // nu=1, epsilon=0, A_eta=0, |B_eta| a perfect square
        let p = GenericExtParams::new(0, 1, 1, gauss(0, 0), &usq * &gauss(4, 0)).unwrap();
        let q = WnNParams::new(0, 1, 1, rat_int(0), gauss(1, 0)).unwrap();
        assert_reduction(&p, &q);
    }

    #[test]
    fn reduction_irrational_rotations_are_rejected() {
        // |1+i| = sqrt 2
        let p = GenericExtParams::new(1, 1, 1, gauss(1, 1), gauss(0, 0)).unwrap();
        assert!(matches!(
            reduce_to_normal_form(&p),
            Err(Error::IrrationalRotation { .. })
        ));
        // nu=1, epsilon=0 needs sqrt |B_eta|
        let p = GenericExtParams::new(0, 1, 1, gauss(0, 0), gauss(2, 0)).unwrap();
        assert!(matches!(
            reduce_to_normal_form(&p),
            Err(Error::IrrationalRotation { .. })
        ));
    }

    #[test]
    fn reduction_is_idempotent_on_samples() {
        for p in admissible_samples() {
            if !p.b.is_zero() && p.b.polar().is_none() {
                continue; // |B| irrational: the generic reduction cannot rebuild it
            }
            let g = GenericExtParams::new(
                p.epsilon as i64,
                p.delta as i64,
                p.nu as i64,
                Gauss::from_rat(p.a.clone()),
                p.b.clone(),
            )
            .unwrap();
            match reduce_to_normal_form(&g) {
                Ok((q, lambda)) => {
                    assert_eq!(q, p, "reduction moved a normal tuple");
                    assert_eq!(lambda, Mat::identity(4), "non-identity change for {}", p.label());
                }
                Err(Error::IrrationalRotation { .. }) => {}
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
    }

    #[test]
    fn realification_spot_rows() {
        let f1 = WnNParams::new(0, -1, 0, rat_int(0), gauss(0, 0)).unwrap();
        assert_eq!(realify_table1(&f1).unwrap().2, Builtin::F1);
        let f2 = WnNParams::new(1, 1, 0, rat_int(0), gauss(0, 0)).unwrap();
        assert_eq!(realify_table1(&f2).unwrap().2, Builtin::F2);
        let f2b = WnNParams::new(1, -1, 0, rat_int(0), gauss(1, 0)).unwrap();
        assert_eq!(realify_table1(&f2b).unwrap().2, Builtin::F2);
        let f7 = WnNParams::new(0, 1, 1, rat_int(1), gauss(1, 2)).unwrap();
        let (g, j, name) = realify_table1(&f7).unwrap();
        assert_eq!(name, Builtin::F7_1);
        assert_eq!(g, Builtin::F7_1.algebra());
        // the recovered J matches the complex data: columns pair as J e = e'
        assert_eq!(j.dim(), 8);
        let f8 = WnNParams::new(1, 1, 1, rat_int(2), gauss(3, 1)).unwrap();
        assert_eq!(realify_table1(&f8).unwrap().2, Builtin::F8);
    }

    #[test]
    fn snn_families_build_and_classify() {
        let p = SnNParams::family_i(1, 1, 1, rat_int(1), rat_int(2)).unwrap();
        let pres = build_snn(&p);
        let (g, j) = pres.realify().unwrap();
        let (_, ty) = j_compatible_series(&g, &j);
        assert_eq!(ty, JType::StronglyNonNilpotent);

        let p = SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(0)).unwrap();
        let pres = build_snn(&p);
        let d4 = pres.structure_form(4);
        assert_eq!(d4.coeff(&[1, 7]), gauss(0, 1));
        assert_eq!(d4.coeff(&[3, 5]), gauss(0, -1));
        let (g, j) = pres.realify().unwrap();
        let (_, ty) = j_compatible_series(&g, &j);
        assert_eq!(ty, JType::StronglyNonNilpotent);
        assert!(g.is_nilpotent());
    }

    #[test]
    fn snn6_is_the_quotient_of_the_wnn_family() {
        use crate::cpxstruct::induced_quotient;
        for e in [0i64, 1] {
            for d in [1i64, -1] {
                let p = WnNParams::new(e, d, 1, rat_int(1 - e), Gauss::from_rat(rat(1, 2)))
                    .or_else(|_| WnNParams::new(e, d, 1, rat_int(1 - e), gauss(1, 0)))
                    .unwrap();
                let (g, j) = build_wnn(&p).realify().unwrap();
                let (flag, ty) = j_compatible_series(&g, &j);
                assert_eq!(ty, JType::WeaklyNonNilpotent);
                let a1 = &flag.terms()[0];
                assert_eq!(a1.dim(), 2);
                let iq = induced_quotient(&g, &j, a1).unwrap();
                let (g6, j6) = build_snn6(e, d).unwrap();
                assert_eq!(iq.algebra, g6, "e={e} d={d}");
                assert_eq!(iq.j, j6, "e={e} d={d}");
            }
        }
    }

    #[test]
    fn sample_sweep_is_admissible_and_lands_on_named_algebras() {
        let samples = admissible_samples();
        assert!(samples.len() > 100);
        for p in &samples {
            let (_, _, name) = realify_table1(p).unwrap();
            let expected_nu_0 = [Builtin::F1, Builtin::F2, Builtin::F3, Builtin::F4_0, Builtin::F4_1];
            if p.nu == 0 {
                assert!(expected_nu_0.contains(&name), "{}", p.label());
            }
        }
    }
}
