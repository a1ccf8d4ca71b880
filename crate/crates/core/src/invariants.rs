//! Isomorphism-separating invariants of a nilpotent Lie algebra: Betti numbers of
//! the Chevalley-Eilenberg complex, the span of decomposable exact 2-forms (n_d),
//! the number of functionally independent generalized Casimir operators (n_I), and
//! a fingerprint bundling these with the central series dimension types.
//!
//! n_d counts linearly independent decomposable exact 2-forms the way the
//! catalog tabulates them: inside the subspace spanned by the decomposable
//! structure differentials de^k. (The span of the full decomposable locus of
//! d(Λ¹) can be strictly larger: on f4^0 the form d(e5+e7+e8) factors as
//! (e1+e2)∧(e4+e6) yet lies outside the span of the decomposable de^k. The
//! tabulated statistic is the one that separates the catalog, so it is the one
//! computed here.) Certification is two-sided: a bounded-height search produces
//! rational witnesses spanning the subspace, and a full projective enumeration
//! over F_p at three primes recomputes the span of all decomposable points mod
//! p. The value is only reported when both sides agree; any mismatch surfaces
//! as [`Error::OracleDisagreement`] instead of a guess.
//!
//! The Casimir count uses the coadjoint coefficient matrix C with entry (k,i)
//! equal to the linear form x([e_k, e_i]). Its rank over the rational function
//! field is evaluated as the maximum rank over several random rational points,
//! which attains the generic rank with overwhelming probability; n_I = dim - rank.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, Gauss, Mat, Rat, Subspace};
use crate::forms::{ce_differential, increasing_tuples, KForm};
use crate::liealg::LieAlgebra;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Matrix of d restricted to k-forms, rows indexed by the monomial basis of
/// degree k, columns by degree k+1. Only meaningful for 1 <= k < dim.
fn differential_matrix(g: &LieAlgebra, k: usize) -> Mat {
    let n = g.dim();
    let domain = increasing_tuples(n, k);
    let codomain = increasing_tuples(n, k + 1);
    let col_of: BTreeMap<&[u8], usize> = codomain
        .iter()
        .enumerate()
        .map(|(c, idx)| (idx.as_slice(), c))
        .collect();
    let rows = domain
        .iter()
        .map(|idx| {
            let image = ce_differential(g, &KForm::monomial(n, idx, Gauss::one()));
            let mut row = vec![Gauss::zero(); codomain.len()];
            for (t, c) in image.terms() {
                row[col_of[t.as_slice()]] = c.clone();
            }
            row
        })
        .collect();
    Mat::from_rows(rows)
}

/// k-th Betti number of the Chevalley-Eilenberg complex,
/// dim ker(d|Λ^k) - rank(d|Λ^{k-1}).
pub fn betti(g: &LieAlgebra, k: usize) -> usize {
    let n = g.dim();
    if k > n {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let rank_below = if k == 1 {
        0
    } else {
        differential_matrix(g, k - 1).rank()
    };
    let rank_here = if k == n {
        0
    } else {
        differential_matrix(g, k).rank()
    };
    binomial(n, k) - rank_here - rank_below
}

/// All Betti numbers b_0..b_dim, sharing one rank computation per degree.
pub fn betti_all(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut ranks = vec![0usize; n + 1];
    for k in 1..n {
        ranks[k] = differential_matrix(g, k).rank();
    }
    (0..=n)
        .map(|k| {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            binomial(n, k) - ranks[k] - below
        })
        .collect()
}

pub const ND_DEFAULT_HEIGHT: i64 = 4;
pub const ND_PRIMES: [u64; 3] = [7, 11, 13];

/// Certified value of n_d together with the rational witnesses that span the
/// decomposable generators and the per-prime span dimensions that confirmed it.
pub struct NdReport {
    pub value: usize,
    pub witnesses: Vec<KForm>,
    pub fp_spans: [(u64, usize); 3],
}

fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64().unwrap();
    let den = r.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return None;
    }
    Some(num * fp_inv(den, p) % p)
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

/// Row space over F_p kept in echelon form; insert reports whether the
/// dimension grew.
struct FpSpan {
    p: u64,
    rows: Vec<Vec<u64>>,
}

impl FpSpan {
    fn new(p: u64) -> Self {
        FpSpan { p, rows: Vec::new() }
    }

    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for row in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            if v[pivot] != 0 {
                let f = v[pivot];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + (p - f % p) * ri) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pivot) => {
                let inv = fp_inv(v[pivot], p);
                for vi in v.iter_mut() {
                    *vi = *vi * inv % p;
                }
                self.rows.push(v);
                true
            }
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Independent decomposable structure differentials, kept in the order they
/// appear so that witnesses read off the structure equations directly. Their
/// span is the subspace the n_d oracles certify.
fn decomposable_generators(g: &LieAlgebra) -> Vec<KForm> {
    let n = g.dim();
    let two = increasing_tuples(n, 2);
    let col_of: BTreeMap<&[u8], usize> = two
        .iter()
        .enumerate()
        .map(|(c, idx)| (idx.as_slice(), c))
        .collect();
    let mut basis = Vec::new();
    let mut vectors: Vec<Vec<Gauss>> = Vec::new();
    for k in 1..=n {
        let de = g.differential(k);
        if de.is_zero() || !de.wedge(&de).is_zero() {
            continue;
        }
        let mut row = vec![Gauss::zero(); two.len()];
        for (t, c) in de.terms() {
            row[col_of[t.as_slice()]] = c.clone();
        }
        let mut candidate = vectors.clone();
        candidate.push(row.clone());
        if Mat::from_rows(candidate).rank() > vectors.len() {
            vectors.push(row);
            basis.push(de.clone());
        }
    }
    basis
}

/// Coefficient values searched at a given height bound, ordered so simple
/// witnesses are found first: integers before proper fractions, small before
/// large, positive before negative.
fn height_values(height: i64) -> Vec<Rat> {
    let mut keyed: Vec<((i64, i64, i64, i64), Rat)> = vec![((0, 0, 0, 0), Rat::zero())];
    for den in 1..=height {
        for num in 1..=height {
            if num.gcd(&den) != 1 {
                continue;
            }
            let key = (num.max(den), den, num, 0);
            keyed.push((key, rat(num, den)));
            keyed.push(((key.0, den, num, 1), rat(-num, den)));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, v)| v).collect()
}

/// Sparse quadratic form for the wedge square: entry (i, j, column, coeff)
/// grouped by Λ⁴ column, so a candidate can bail out at the first nonzero
/// coordinate of α∧α.
fn wedge_square_table(basis: &[KForm], n: usize) -> Vec<Vec<(usize, usize, Rat)>> {
    let four = increasing_tuples(n, 4);
    let col_of: BTreeMap<&[u8], usize> = four
        .iter()
        .enumerate()
        .map(|(c, idx)| (idx.as_slice(), c))
        .collect();
    let m = basis.len();
    let mut by_col: BTreeMap<usize, Vec<(usize, usize, Rat)>> = BTreeMap::new();
    for i in 0..m {
        for j in i..m {
            let prod = basis[i].wedge(&basis[j]);
            for (t, c) in prod.terms() {
                // α∧α picks up w_i∧w_j twice when i ≠ j
                let factor = if i == j { c.re.clone() } else { c.re.clone() + c.re.clone() };
                by_col
                    .entry(col_of[t.as_slice()])
                    .or_default()
                    .push((i, j, factor));
            }
        }
    }
    by_col.into_values().collect()
}

/// Span over F_p of every decomposable point of the exact subspace, by full
/// projective enumeration in the coordinates of `basis`.
fn fp_decomposable_span(table: &[Vec<(usize, usize, Rat)>], m: usize, p: u64) -> Result<usize> {
    let mut table_p: Vec<Vec<(usize, usize, u64)>> = Vec::with_capacity(table.len());
    for col in table {
        let mut entries = Vec::with_capacity(col.len());
        for (i, j, c) in col {
            let cp = rat_mod_p(c, p).ok_or_else(|| Error::Degenerate {
                what: format!("n_d oracle prime {p} divides a denominator in d(Λ¹)"),
            })?;
            if cp != 0 {
                entries.push((*i, *j, cp));
            }
        }
        if !entries.is_empty() {
            table_p.push(entries);
        }
    }
    let mut span = FpSpan::new(p);
    let mut t = vec![0u64; m];
    for lead in 0..m {
        for slot in t.iter_mut() {
            *slot = 0;
        }
        t[lead] = 1;
        // odometer over the coordinates after the leading 1
        loop {
            let decomposable = table_p.iter().all(|col| {
                col.iter()
                    .fold(0u64, |acc, &(i, j, c)| (acc + c * (t[i] * t[j] % p)) % p)
                    == 0
            });
            if decomposable && span.insert(t.clone()) && span.dim() == m {
                return Ok(m);
            }
            let mut pos = m;
            let mut wrapped = true;
            while pos > lead + 1 {
                pos -= 1;
                t[pos] += 1;
                if t[pos] < p {
                    wrapped = false;
                    break;
                }
                t[pos] = 0;
            }
            if wrapped {
                break;
            }
        }
    }
    Ok(span.dim())
}

/// n_d with the default height bound 4 for the rational witness search.
pub fn nd_invariant(g: &LieAlgebra) -> Result<NdReport> {
    nd_invariant_with_height(g, ND_DEFAULT_HEIGHT)
}

/// n_d = dim span{α ∈ W : α∧α = 0} where W is the span of the decomposable
/// structure differentials. The height bound limits numerator and denominator
/// magnitudes of the coefficients searched for rational witnesses.
pub fn nd_invariant_with_height(g: &LieAlgebra, height: i64) -> Result<NdReport> {
    assert!(height >= 1, "height bound must be positive");
    let n = g.dim();
    let basis = decomposable_generators(g);
    let m = basis.len();
    let table = wedge_square_table(&basis, n);

    let mut fp_spans = [(0u64, 0usize); 3];
    for (slot, &p) in fp_spans.iter_mut().zip(ND_PRIMES.iter()) {
        *slot = (p, fp_decomposable_span(&table, m, p)?);
    }
    let target = fp_spans[0].1;
    if fp_spans.iter().any(|&(_, d)| d != target) {
        return Err(Error::OracleDisagreement {
            what: "n_d finite-field spans".into(),
            detail: format!(
                "per-prime spans {:?} are not constant",
                fp_spans.iter().map(|&(p, d)| (p, d)).collect::<Vec<_>>()
            ),
        });
    }

    let mut witnesses: Vec<KForm> = Vec::new();
    let mut accepted: Vec<Vec<Gauss>> = Vec::new();
    if target > 0 {
        let values = height_values(height);
        let nonzero = &values[1..];
        'search: for support_size in 1..=m {
            for support in increasing_tuples(m, support_size) {
                let support: Vec<usize> = support.iter().map(|&i| i as usize - 1).collect();
                let tails = support_size - 1;
                let mut odo = vec![0usize; tails];
                loop {
                    let mut t = vec![Gauss::zero(); m];
                    t[support[0]] = Gauss::one();
                    for (slot, &v) in odo.iter().enumerate() {
                        t[support[slot + 1]] = Gauss::from_rat(nonzero[v].clone());
                    }
                    let mut alpha = KForm::zero(n, 2);
                    for (i, w) in basis.iter().enumerate() {
                        if !t[i].is_zero() {
                            alpha = alpha.add(&w.scale(&t[i]));
                        }
                    }
                    if alpha.wedge(&alpha).is_zero()
                        && !Subspace::from_spanning(m, &accepted).contains(&t)
                    {
                        accepted.push(t);
                        witnesses.push(alpha);
                        if accepted.len() == target {
                            break 'search;
                        }
                    }
                    let mut pos = tails;
                    let mut wrapped = true;
                    while pos > 0 {
                        pos -= 1;
                        odo[pos] += 1;
                        if odo[pos] < nonzero.len() {
                            wrapped = false;
                            break;
                        }
                        odo[pos] = 0;
                    }
                    if wrapped {
                        break;
                    }
                }
            }
        }
    }

    if accepted.len() != target {
        return Err(Error::OracleDisagreement {
            what: "n_d".into(),
            detail: format!(
                "rational witnesses span {} at height {height} but F_p spans give {target}",
                accepted.len()
            ),
        });
    }
    Ok(NdReport {
        value: target,
        witnesses,
        fp_spans,
    })
}

pub const CASIMIR_DEFAULT_SEED: u64 = 0x6e6c61;
pub const CASIMIR_SAMPLES: usize = 5;

const SMALL_PRIMES: [i64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Coadjoint coefficient matrix: entry (k,i) is the linear form x([e_k, e_i])
/// in the coordinates x_1..x_dim, instantiable at any rational point.
pub struct CoadjointMatrix {
    dim: usize,
    lin: Vec<Vec<Vec<Rat>>>,
}

impl CoadjointMatrix {
    pub fn new(g: &LieAlgebra) -> Self {
        let dim = g.dim();
        let lin = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|i| {
                        g.bracket_basis(k, i)
                            .into_iter()
                            .map(|c| {
                                debug_assert!(c.is_real());
                                c.re
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        CoadjointMatrix { dim, lin }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, point: &[Rat]) -> Mat {
        assert_eq!(point.len(), self.dim);
        Mat::from_fn(self.dim, self.dim, |k, i| {
            let mut acc = Rat::zero();
            for (c, x) in self.lin[k][i].iter().zip(point) {
                acc += c * x;
            }
            Gauss::from_rat(acc)
        })
    }

    /// Entry (k,i) as a linear expression in x_1..x_dim, e.g. "-x3" or "x6+2x7".
    pub fn entry_string(&self, k: usize, i: usize) -> String {
        let mut out = String::new();
        for (j, c) in self.lin[k][i].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&format!("x{}", j + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// n_I with the default fixed seed for the generic-point draws.
pub fn casimir_count(g: &LieAlgebra) -> (usize, CoadjointMatrix) {
    casimir_count_seeded(g, CASIMIR_DEFAULT_SEED)
}

/// n_I = dim - rank C, the rank taken as the maximum over seeded random points
/// with prime components (≤ 97), which avoids accidental degeneracies.
pub fn casimir_count_seeded(g: &LieAlgebra, seed: u64) -> (usize, CoadjointMatrix) {
    let c = CoadjointMatrix::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..CASIMIR_SAMPLES {
        let point: Vec<Rat> = (0..c.dim())
            .map(|_| rat_int(SMALL_PRIMES[rng.gen_range(0..SMALL_PRIMES.len())]))
            .collect();
        best = best.max(c.at(&point).rank());
    }
    (g.dim() - best, c)
}

/// The invariant bundle of one algebra. Serializes to the stable JSON object
/// {ascending, descending, betti, n_d, n_I} used by golden tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub ascending: Vec<usize>,
    pub descending: Vec<usize>,
    /// b_1..b_4
    pub betti: Vec<usize>,
    pub n_d: usize,
    #[serde(rename = "n_I")]
    pub n_i: usize,
}

pub fn fingerprint(g: &LieAlgebra) -> Result<Fingerprint> {
    fingerprint_seeded(g, CASIMIR_DEFAULT_SEED, ND_DEFAULT_HEIGHT)
}

pub fn fingerprint_seeded(g: &LieAlgebra, seed: u64, height: i64) -> Result<Fingerprint> {
    let all = betti_all(g);
    Ok(Fingerprint {
        ascending: g.ascending_series().dims(),
        descending: g.descending_series().dims(),
        betti: all[1..=4.min(g.dim())].to_vec(),
        n_d: nd_invariant_with_height(g, height)?.value,
        n_i: casimir_count_seeded(g, seed).0,
    })
}

/// Outcome of comparing two fingerprints field by field, in the fixed order
/// ascending, descending, betti, n_d, n_I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinguish {
    Separated {
        field: &'static str,
        detail: String,
    },
    Indistinguishable,
}

impl fmt::Display for Distinguish {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distinguish::Separated { field, detail } => write!(f, "{field} ({detail})"),
            Distinguish::Indistinguishable => write!(f, "indistinguishable by fingerprint"),
        }
    }
}

fn tuple_string(t: &[usize]) -> String {
    let inner: Vec<String> = t.iter().map(|d| d.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn distinguish_fingerprints(a: &Fingerprint, b: &Fingerprint) -> Distinguish {
    if a.ascending != b.ascending {
        return Distinguish::Separated {
            field: "ascending",
            detail: format!(
                "{} vs {}",
                tuple_string(&a.ascending),
                tuple_string(&b.ascending)
            ),
        };
    }
    if a.descending != b.descending {
        return Distinguish::Separated {
            field: "descending",
            detail: format!(
                "{} vs {}",
                tuple_string(&a.descending),
                tuple_string(&b.descending)
            ),
        };
    }
    for k in 0..a.betti.len().max(b.betti.len()) {
        let (x, y) = (a.betti.get(k), b.betti.get(k));
        if x != y {
            return Distinguish::Separated {
                field: "betti",
                detail: format!(
                    "b{}: {} vs {}",
                    k + 1,
                    x.map_or("-".into(), |v| v.to_string()),
                    y.map_or("-".into(), |v| v.to_string())
                ),
            };
        }
    }
    if a.n_d != b.n_d {
        return Distinguish::Separated {
            field: "n_d",
            detail: format!("{} vs {}", a.n_d, b.n_d),
        };
    }
    if a.n_i != b.n_i {
        return Distinguish::Separated {
            field: "n_I",
            detail: format!("{} vs {}", a.n_i, b.n_i),
        };
    }
    Distinguish::Indistinguishable
}

pub fn distinguish(a: &LieAlgebra, b: &LieAlgebra) -> Result<Distinguish> {
    Ok(distinguish_fingerprints(&fingerprint(a)?, &fingerprint(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Builtin;

    #[test]
    fn betti_abelian() {
        let g = LieAlgebra::abelian(8);
        assert_eq!(betti(&g, 3), 56);
        assert_eq!(betti(&g, 0), 1);
        assert_eq!(betti(&g, 8), 1);
    }

    #[test]
    fn betti_table_rows() {
        let f3 = Builtin::F3.algebra();
        assert_eq!(betti_all(&f3)[1..=4], [4, 10, 18, 22]);
        let f6 = Builtin::F6.algebra();
        assert_eq!(betti_all(&f6)[1..=4], [2, 3, 6, 8]);
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for b in Builtin::ALL {
            let g = b.algebra();
            let all = betti_all(&g);
            let chi: i64 = all
                .iter()
                .enumerate()
                .map(|(k, &bk)| if k % 2 == 0 { bk as i64 } else { -(bk as i64) })
                .sum();
            assert_eq!(chi, 0, "{}", b.label());
            assert_eq!(all[1], g.dim() - g.derived().dim(), "{}", b.label());
        }
    }

    #[test]
    fn nd_f1_with_witnesses() {
        let report = nd_invariant(&Builtin::F1.algebra()).unwrap();
        assert_eq!(report.value, 2);
        let e12 = KForm::monomial(8, &[1, 2], Gauss::one());
        let e23 = KForm::monomial(8, &[2, 3], Gauss::one());
        assert_eq!(report.witnesses, vec![e12, e23]);
        assert_eq!(report.fp_spans.map(|(_, d)| d), [2, 2, 2]);
    }

    #[test]
    fn nd_table_rows() {
        let expect = [
            (Builtin::F1, 2),
            (Builtin::F2, 3),
            (Builtin::F3, 3),
            (Builtin::F4_0, 4),
            (Builtin::F4_1, 5),
            (Builtin::F5_0, 4),
            (Builtin::F5_1, 3),
            (Builtin::F6, 3),
            (Builtin::F7_0, 3),
            (Builtin::F7_1, 2),
            (Builtin::F8, 3),
        ];
        for (b, nd) in expect {
            assert_eq!(nd_invariant(&b.algebra()).unwrap().value, nd, "{}", b.label());
        }
        assert_eq!(nd_invariant(&LieAlgebra::abelian(8)).unwrap().value, 0);
    }

    #[test]
    fn nd_witnesses_verify() {
        for b in Builtin::EIGHT_DIM {
            let g = b.algebra();
            let report = nd_invariant(&g).unwrap();
            let image: Vec<Vec<Gauss>> = {
                let two = increasing_tuples(8, 2);
                (1..=8)
                    .filter(|&k| !g.differential(k).is_zero())
                    .map(|k| {
                        two.iter()
                            .map(|idx| g.differential(k).coeff(idx))
                            .collect()
                    })
                    .collect()
            };
            let span = Subspace::from_spanning(28, &image);
            for w in &report.witnesses {
                assert!(w.wedge(w).is_zero());
                let two = increasing_tuples(8, 2);
                let v: Vec<Gauss> = two.iter().map(|idx| w.coeff(idx)).collect();
                assert!(span.contains(&v), "{} witness outside d(Λ¹)", b.label());
            }
        }
    }

    #[test]
    fn casimir_printed_entries() {
        let c6 = CoadjointMatrix::new(&Builtin::F6.algebra());
        assert_eq!(c6.entry_string(0, 1), "-x3");
        assert_eq!(c6.entry_string(3, 0), "x6");
        assert_eq!(c6.entry_string(2, 3), "x8");
        assert_eq!(c6.entry_string(6, 0), "0");
        let c8 = CoadjointMatrix::new(&Builtin::F8.algebra());
        assert_eq!(c8.entry_string(0, 3), "-x6-2x7");
        assert_eq!(c8.entry_string(5, 1), "-x7");
    }

    #[test]
    fn casimir_ranks_at_fixed_point() {
        let point: Vec<Rat> = [1, 2, 3, 5, 7, 11, 13, 17]
            .iter()
            .map(|&x| rat_int(x))
            .collect();
        let c6 = CoadjointMatrix::new(&Builtin::F6.algebra());
        assert_eq!(c6.at(&point).rank(), 4);
        let c8 = CoadjointMatrix::new(&Builtin::F8.algebra());
        assert_eq!(c8.at(&point).rank(), 6);
    }

    #[test]
    fn casimir_counts() {
        assert_eq!(casimir_count(&Builtin::F6.algebra()).0, 4);
        assert_eq!(casimir_count(&Builtin::F8.algebra()).0, 2);
        assert_eq!(casimir_count(&LieAlgebra::abelian(8)).0, 8);
    }

    #[test]
    fn fingerprint_f1_json() {
        let fp = fingerprint(&Builtin::F1.algebra()).unwrap();
        let json = serde_json::to_value(&fp).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "ascending": [3, 5, 8],
                "descending": [8, 3, 1],
                "betti": [5, 12, 19, 22],
                "n_d": 2,
                "n_I": 4,
            })
        );
    }

    #[test]
    fn distinguish_examples() {
        let sep = |a: Builtin, b: Builtin| {
            distinguish(&a.algebra(), &b.algebra()).unwrap().to_string()
        };
        assert_eq!(sep(Builtin::F4_0, Builtin::F5_0), "betti (b3: 13 vs 14)");
        assert_eq!(sep(Builtin::F5_0, Builtin::F5_1), "n_d (4 vs 3)");
        assert_eq!(sep(Builtin::F6, Builtin::F8), "n_I (4 vs 2)");
        let f1 = Builtin::F1.algebra();
        assert_eq!(
            distinguish(&f1, &f1).unwrap().to_string(),
            "indistinguishable by fingerprint"
        );
    }
}
