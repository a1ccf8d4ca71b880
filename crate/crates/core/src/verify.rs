//! The reproduction suite: every headline claim of the classification,
//! packaged as self-contained checks that either pass or explain themselves.
//!
//! Each `check_*` function recomputes one result from scratch and compares it
//! against frozen expected data, so a green run certifies the whole chain
//! (construction, invariants, realification, solvers, geometry) in exact
//! arithmetic.  The functions never panic on mathematical disagreement; they
//! return a failing [`Check`] with the first counterexample, which both the
//! test harness and the command-line front end print verbatim.
//!
//! [`property_suites`] holds the randomized laws (seeded, reproducible): the
//! differential squares to zero, Leibniz, central series monotonicity,
//! signature invariance under congruence, curvature symmetries with the first
//! Bianchi identity, and parse/render round trips.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{
    admissible_samples, build_snn, build_snn6, build_wnn, realify_table1, SnNParams, WnNParams,
};
use crate::cpxstruct::{induced_quotient, j_compatible_series, CoframePresentation, JType};
use crate::exactnum::{gauss, rat_int, Gauss, Mat, Rat};
use crate::forms::{ce_differential, increasing_tuples, KForm};
use crate::invariants::{casimir_count_seeded, fingerprint, CoadjointMatrix};
use crate::liealg::{Builtin, LieAlgebra};
use crate::pseudokahler::{
    complex_symplectic_solve, curvature, forced_zero_coords, levi_civita, metric_and_signature,
    pk_solve, Hermitian11Form,
};
use crate::Result;

/// Outcome of one reproduction step.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: false, detail: detail.into() }
    }

    /// The one-line report format shared by tests and the CLI.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag}  {:<24} {}", self.name, self.detail)
    }
}

fn guard(name: &'static str, r: Result<Check>) -> Check {
    r.unwrap_or_else(|e| Check::fail(name, format!("error: {e}")))
}

/// One row of the frozen invariant table for the eight-dimensional algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub label: String,
    pub ascending: Vec<usize>,
    pub descending: Vec<usize>,
    /// b_1..b_4
    pub betti: Vec<usize>,
    pub n_d: usize,
}

fn row(
    label: &str,
    ascending: &[usize],
    descending: &[usize],
    betti: &[usize],
    n_d: usize,
) -> Table2Row {
    Table2Row {
        label: label.to_string(),
        ascending: ascending.to_vec(),
        descending: descending.to_vec(),
        betti: betti.to_vec(),
        n_d,
    }
}

/// The frozen expected table: (ascending type, descending type, b_1..b_4, n_d)
/// for each of the eleven algebras, in catalog order.
pub fn table2_golden() -> Vec<Table2Row> {
    vec![
        row("f1", &[3, 5, 8], &[8, 3, 1], &[5, 12, 19, 22], 2),
        row("f2", &[3, 5, 6, 8], &[8, 4, 3, 1], &[4, 9, 16, 20], 3),
        row("f3", &[3, 5, 8], &[8, 4, 1], &[4, 10, 18, 22], 3),
        row("f4^0", &[3, 5, 8], &[8, 5, 3], &[3, 7, 13, 16], 4),
        row("f4^1", &[3, 5, 6, 8], &[8, 6, 5, 3], &[2, 6, 13, 16], 5),
        row("f5^0", &[3, 5, 8], &[8, 5, 3], &[3, 7, 14, 18], 4),
        row("f5^1", &[3, 5, 8], &[8, 5, 3], &[3, 7, 14, 18], 3),
        row("f6", &[2, 3, 5, 6, 8], &[8, 6, 5, 3, 2], &[2, 3, 6, 8], 3),
        row("f7^0", &[3, 5, 8], &[8, 5, 3], &[3, 7, 13, 16], 3),
        row("f7^1", &[3, 5, 8], &[8, 5, 3], &[3, 7, 13, 16], 2),
        row("f8", &[2, 3, 5, 6, 8], &[8, 6, 5, 3, 2], &[2, 3, 6, 8], 3),
    ]
}

/// Recomputes the invariant table from the structure constants.  The n_d
/// column runs the finite-field enumeration oracle internally and errors on
/// disagreement.
pub fn table2_rows() -> Result<Vec<Table2Row>> {
    Builtin::EIGHT_DIM
        .iter()
        .map(|b| {
            let f = fingerprint(&b.algebra())?;
            Ok(Table2Row {
                label: b.label().to_string(),
                ascending: f.ascending,
                descending: f.descending,
                betti: f.betti,
                n_d: f.n_d,
            })
        })
        .collect()
}

/// Cell-level differences between a computed and an expected table, one line
/// per differing cell.
pub fn table2_diff(computed: &[Table2Row], golden: &[Table2Row]) -> Vec<String> {
    let mut out = Vec::new();
    if computed.len() != golden.len() {
        out.push(format!("row count {} vs {}", computed.len(), golden.len()));
        return out;
    }
    for (c, g) in computed.iter().zip(golden) {
        if c.label != g.label {
            out.push(format!("label {} vs {}", c.label, g.label));
            continue;
        }
        if c.ascending != g.ascending {
            out.push(format!(
                "{}: ascending computed {:?}, expected {:?}",
                g.label, c.ascending, g.ascending
            ));
        }
        if c.descending != g.descending {
            out.push(format!(
                "{}: descending computed {:?}, expected {:?}",
                g.label, c.descending, g.descending
            ));
        }
        for k in 0..4 {
            if c.betti.get(k) != g.betti.get(k) {
                out.push(format!(
                    "{}: b{} computed {:?}, expected {:?}",
                    g.label,
                    k + 1,
                    c.betti.get(k),
                    g.betti.get(k)
                ));
            }
        }
        if c.n_d != g.n_d {
            out.push(format!("{}: n_d computed {}, expected {}", g.label, c.n_d, g.n_d));
        }
    }
    out
}

/// Check 1: the full invariant table matches the frozen copy, with n_d
/// cross-checked by enumeration mod 7, 11 and 13.
pub fn check_table2() -> Check {
    const NAME: &'static str = "invariant-table";
    guard(NAME, (|| {
        let computed = table2_rows()?;
        let diff = table2_diff(&computed, &table2_golden());
        Ok(if diff.is_empty() {
            Check::pass(NAME, "11/11 rows match exactly; n_d confirmed mod 7, 11, 13")
        } else {
            Check::fail(NAME, diff.join("; "))
        })
    })())
}

const PROBE_PRIMES: [i64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

/// Check 2: the coadjoint coefficient matrix has rank 4 on f6 and rank 6 on
/// f8 at five generic rational points, so the Casimir counts 4 and 2 separate
/// the two algebras that share every tabled invariant.
pub fn check_casimir_separation() -> Check {
    const NAME: &'static str = "casimir-separation";
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6c61);
    for (b, want_rank) in [(Builtin::F6, 4usize), (Builtin::F8, 6usize)] {
        let g = b.algebra();
        let c = CoadjointMatrix::new(&g);
        for trial in 0..5 {
            let point: Vec<Rat> = (0..c.dim())
                .map(|_| rat_int(PROBE_PRIMES[rng.gen_range(0..PROBE_PRIMES.len())]))
                .collect();
            let rank = c.at(&point).rank();
            if rank != want_rank {
                return Check::fail(
                    NAME,
                    format!("{} point {trial}: rank {rank}, expected {want_rank}", b.label()),
                );
            }
        }
        let (n_i, _) = casimir_count_seeded(&g, 0x6e6c61);
        let want_ni = g.dim() - want_rank;
        if n_i != want_ni {
            return Check::fail(NAME, format!("{} n_I {n_i}, expected {want_ni}", b.label()));
        }
    }
    Check::pass(NAME, "rank 4 on f6 and rank 6 on f8 at 5 points each: n_I 4 vs 2")
}

/// Check 3: every admissible parameter tuple realifies, through the tabled
/// rational coframe rows, to structure constants byte-equal to its named
/// target algebra.
pub fn check_realification() -> Check {
    const NAME: &'static str = "realification";
    guard(NAME, (|| {
        let samples = admissible_samples();
        let mut targets = BTreeSet::new();
        let mut b_zero = 0usize;
        let mut b_real = 0usize;
        let mut b_cplx = 0usize;
        for p in &samples {
            let (alg, _, target) = realify_table1(p)?;
            if alg != target.algebra() {
                return Ok(Check::fail(
                    NAME,
                    format!("{}: realification differs from {}", p.label(), target.label()),
                ));
            }
            targets.insert(target);
            if p.b.is_zero() {
                b_zero += 1;
            } else if p.b.is_real() {
                b_real += 1;
            } else {
                b_cplx += 1;
            }
        }
        if samples.len() < 100 || b_zero < 5 || b_real < 5 || b_cplx < 5 {
            return Ok(Check::fail(
                NAME,
                format!(
                    "coverage too thin: {} tuples (B=0: {b_zero}, B real: {b_real}, B complex: {b_cplx})",
                    samples.len()
                ),
            ));
        }
        let names: Vec<&str> = targets.iter().map(|t| t.label()).collect();
        Ok(Check::pass(
            NAME,
            format!("{} tuples land verbatim on {{{}}}", samples.len(), names.join(", ")),
        ))
    })())
}

/// Check 4: every admissible tuple integrates, classifies as weakly
/// non-nilpotent with a 2-dimensional stable term, and its quotient by that
/// term is exactly the six-dimensional model with the same (epsilon, delta).
pub fn check_classification() -> Check {
    const NAME: &'static str = "classification";
    guard(NAME, (|| {
        let samples = admissible_samples();
        for p in &samples {
            let pres = build_wnn(p);
            let (g, j) = pres.realify()?;
            let (flag, jtype) = j_compatible_series(&g, &j);
            if jtype != JType::WeaklyNonNilpotent {
                return Ok(Check::fail(
                    NAME,
                    format!("{}: classified {}", p.label(), jtype.label()),
                ));
            }
            let a1 = &flag.terms()[0];
            if a1.dim() != 2 {
                return Ok(Check::fail(
                    NAME,
                    format!("{}: stable term has dim {}", p.label(), a1.dim()),
                ));
            }
            let q = induced_quotient(&g, &j, a1)?;
            let (g6, j6) = build_snn6(p.epsilon as i64, p.delta as i64)?;
            if q.algebra != g6 || q.j.mat() != j6.mat() {
                return Ok(Check::fail(
                    NAME,
                    format!("{}: quotient is not the expected 6-dim model", p.label()),
                ));
            }
        }
        Ok(Check::pass(
            NAME,
            format!(
                "{} tuples: integrable, weakly non-nilpotent, quotient matches the 6-dim model",
                samples.len()
            ),
        ))
    })())
}

/// The known 4-parameter solution family (epsilon=0, nu=1 branches), in the
/// real coordinates of a (1,1)-form: diagonal (u, -s, -delta r, 0) and
/// off-diagonal pairs x_{1 2b} = v, x_{1 4b} = a delta (s + ir),
/// x_{2 3b} = r + is.  Nondegenerate exactly when rs != 0.
pub fn pk_family_coords(a: &Rat, delta: i8, u: i64, v: i64, r: i64, s: i64) -> Vec<Rat> {
    let d = rat_int(delta as i64);
    let mut c = vec![Rat::zero(); 16];
    c[0] = rat_int(u);
    c[1] = rat_int(-s);
    c[2] = -(&d * &rat_int(r));
    c[4] = rat_int(v);
    c[6] = a * &(&d * &rat_int(s));
    c[7] = a * &(&d * &rat_int(r));
    c[8] = rat_int(r);
    c[9] = rat_int(s);
    c
}

const FAMILY_POINTS: [(i64, i64, i64, i64); 3] = [(1, 0, 1, 1), (0, 1, 2, -1), (3, -2, -1, 5)];

fn snn_i_samples() -> Vec<SnNParams> {
    vec![
        SnNParams::family_i(1, 0, 0, rat_int(1), rat_int(0)).unwrap(),
        SnNParams::family_i(1, 1, 1, rat_int(1), rat_int(2)).unwrap(),
        SnNParams::family_i(-1, 1, 0, rat_int(0), rat_int(3)).unwrap(),
        SnNParams::family_i(-1, 0, 1, Rat::new(1.into(), 2.into()), rat_int(-1)).unwrap(),
        SnNParams::family_i(1, 1, 0, rat_int(2), rat_int(-2)).unwrap(),
        SnNParams::family_i(-1, 1, 1, rat_int(3), rat_int(1)).unwrap(),
    ]
}

fn snn_ii_pk_tuple() -> SnNParams {
    SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(0)).unwrap()
}

fn snn_ii_other_samples() -> Vec<SnNParams> {
    vec![
        SnNParams::family_ii(1, 0, 1, rat_int(0), rat_int(0)).unwrap(),
        SnNParams::family_ii(1, 0, 0, rat_int(1), rat_int(0)).unwrap(),
        SnNParams::family_ii(1, 0, 0, rat_int(0), rat_int(2)).unwrap(),
        SnNParams::family_ii(0, 1, 0, rat_int(0), rat_int(0)).unwrap(),
        SnNParams::family_ii(1, 1, 0, rat_int(-2), rat_int(1)).unwrap(),
        SnNParams::family_ii(0, 1, 0, rat_int(2), rat_int(-1)).unwrap(),
    ]
}

/// Check 5: the pseudo-Kahler solver reproduces the full classification of
/// solutions: a 4-dimensional kernel containing the known family exactly on
/// the (epsilon=0, nu=1) branches, a vanishing-volume certificate everywhere
/// else, nonexistence on the first strongly non-nilpotent family, and
/// existence on the second one only at its special tuple.
pub fn check_pk_solver() -> Check {
    const NAME: &'static str = "pk-solver";
    let samples = admissible_samples();
    let mut on_branch = 0usize;
    for p in &samples {
        let pres = build_wnn(p);
        let (space, wit) = pk_solve(&pres);
        let expect_pk = p.epsilon == 0 && p.nu == 1;
        if expect_pk {
            on_branch += 1;
            if space.dim() != 4 {
                return Check::fail(
                    NAME,
                    format!("{}: kernel dim {}, expected 4", p.label(), space.dim()),
                );
            }
            for (u, v, r, s) in FAMILY_POINTS {
                let coords = pk_family_coords(&p.a, p.delta, u, v, r, s);
                let vec: Vec<Gauss> = coords.iter().map(|c| Gauss::from_rat(c.clone())).collect();
                if !space.contains(&vec) {
                    return Check::fail(
                        NAME,
                        format!("{}: family point ({u},{v},{r},{s}) not in kernel", p.label()),
                    );
                }
            }
            match wit {
                Some(sol) if sol.signature.2 == 0 => {}
                Some(_) => {
                    return Check::fail(NAME, format!("{}: degenerate witness", p.label()));
                }
                None => return Check::fail(NAME, format!("{}: no witness found", p.label())),
            }
        } else if wit.is_some() {
            return Check::fail(NAME, format!("{}: unexpected witness", p.label()));
        }
    }
    if on_branch < 5 {
        return Check::fail(NAME, format!("only {on_branch} solvable tuples sampled"));
    }
    for p in snn_i_samples() {
        if pk_solve(&build_snn(&p)).1.is_some() {
            return Check::fail(NAME, format!("{}: unexpected witness", p.label()));
        }
    }
    let good = snn_ii_pk_tuple();
    let (space, wit) = pk_solve(&build_snn(&good));
    if space.dim() != 4 || wit.is_none() {
        return Check::fail(
            NAME,
            format!("{}: kernel dim {}, witness {}", good.label(), space.dim(), wit.is_some()),
        );
    }
    for p in snn_ii_other_samples() {
        if pk_solve(&build_snn(&p)).1.is_some() {
            return Check::fail(NAME, format!("{}: unexpected witness", p.label()));
        }
    }
    Check::pass(
        NAME,
        format!(
            "{on_branch} solvable tuples: kernel dim 4 with the known family inside; every other branch certified empty"
        ),
    )
}

fn geometry_params() -> Vec<WnNParams> {
    let mk = |d: i64, a: i64, b: Gauss| WnNParams::new(0, d, 1, rat_int(a), b).unwrap();
    vec![
        mk(1, 0, Gauss::zero()),
        mk(1, 0, Gauss::one()),
        mk(-1, 0, Gauss::zero()),
        mk(-1, 0, Gauss::one()),
        mk(1, 1, Gauss::zero()),
        mk(1, 1, gauss(0, 1)),
        mk(-1, 1, gauss(1, 1)),
        mk(-1, 1, gauss(3, 2)),
    ]
}

/// Check 6: the geometry of the solutions.  On sampled witnesses the distinct
/// curvature component equals -delta r, the metric is Ricci-flat but not
/// flat, the coframe volume form is parallel, and the connection passes its
/// internal torsion-free / metric / complex-linear verification.  The frozen
/// sample points realize neutral signature (4,4) and the counter-sample
/// realizes (2,6).
pub fn check_geometry() -> Check {
    const NAME: &'static str = "geometry";
    guard(NAME, (|| {
        let mut witnesses = 0usize;
        for p in geometry_params() {
            let pres = build_wnn(&p);
            for (u, v, r, s) in [(0i64, 0i64, 1i64, 1i64), (1, -1, 2, -3)] {
                let form =
                    Hermitian11Form::from_real_coords(4, &pk_family_coords(&p.a, p.delta, u, v, r, s));
                let conn = levi_civita(&pres, &form)?;
                let curv = curvature(&conn);
                let want = gauss(-(p.delta as i64) * r, 0);
                if curv.value(0, 4, 1, 5) != want {
                    return Ok(Check::fail(
                        NAME,
                        format!("{}: curvature anchor {:?}, expected {want:?}", p.label(),
                            curv.value(0, 4, 1, 5)),
                    ));
                }
                if !curv.ricci_flat || curv.flat {
                    return Ok(Check::fail(
                        NAME,
                        format!("{}: ricci_flat {}, flat {}", p.label(), curv.ricci_flat, curv.flat),
                    ));
                }
                if !crate::pseudokahler::parallel_volume_check(&conn) {
                    return Ok(Check::fail(NAME, format!("{}: volume form not parallel", p.label())));
                }
                witnesses += 1;
            }
        }
        let sig_at = |d: i64, a: i64, b: Gauss, u: i64, v: i64, r: i64, s: i64| -> Result<(usize, usize, usize)> {
            let p = WnNParams::new(0, d, 1, rat_int(a), b)?;
            let form = Hermitian11Form::from_real_coords(4, &pk_family_coords(&p.a, p.delta, u, v, r, s));
            Ok(metric_and_signature(&build_wnn(&p), &form)?.1)
        };
        let cases = [
            (1, 0, Gauss::zero(), 0, 0, 1, -1, (4, 4, 0)),
            (1, 0, Gauss::zero(), 0, 0, 1, 1, (2, 6, 0)),
            (1, 1, Gauss::zero(), 1, 0, 1, -1, (4, 4, 0)),
            (-1, 1, gauss(0, 2), 1, 0, -2, -1, (4, 4, 0)),
        ];
        for (d, a, b, u, v, r, s, want) in cases {
            let got = sig_at(d, a, b.clone(), u, v, r, s)?;
            if got != want {
                return Ok(Check::fail(
                    NAME,
                    format!("signature at (d={d},a={a},u={u},v={v},r={r},s={s}): {got:?}, expected {want:?}"),
                ));
            }
        }
        Ok(Check::pass(
            NAME,
            format!(
                "{witnesses} witnesses: anchor component -delta r, Ricci-flat, non-flat, parallel volume; signatures (4,4) and (2,6) as frozen"
            ),
        ))
    })())
}

/// Check 7: no non-nilpotent structure admits a closed nondegenerate
/// (2,0)-form; the complex torus does.
pub fn check_complex_symplectic() -> Check {
    const NAME: &'static str = "complex-symplectic";
    let samples = admissible_samples();
    for p in &samples {
        let (space, wit) = complex_symplectic_solve(&build_wnn(p));
        if wit.is_some() {
            return Check::fail(NAME, format!("{}: unexpected closed nondegenerate form", p.label()));
        }
        let forced = forced_zero_coords(&space);
        for c in [3usize, 4, 5] {
            if !forced.contains(&c) {
                return Check::fail(
                    NAME,
                    format!("{}: coordinate {c} not forced to zero", p.label()),
                );
            }
        }
    }
    let mut snn = snn_i_samples();
    snn.push(snn_ii_pk_tuple());
    snn.extend(snn_ii_other_samples());
    let snn_count = snn.len();
    for p in snn {
        if complex_symplectic_solve(&build_snn(&p)).1.is_some() {
            return Check::fail(NAME, format!("{}: unexpected closed nondegenerate form", p.label()));
        }
    }
    let (space, wit) = complex_symplectic_solve(&CoframePresentation::torus(4));
    let ok = match &wit {
        Some(w) => space.dim() == 6 && w.is_nondegenerate(),
        None => false,
    };
    if !ok {
        return Check::fail(NAME, "torus witness missing or degenerate".to_string());
    }
    Check::pass(
        NAME,
        format!(
            "none on {} weakly and {snn_count} strongly non-nilpotent structures (squares forced to zero); torus witness found",
            samples.len()
        ),
    )
}

/// Check 8: the algebras carrying a pseudo-Kahler metric with non-nilpotent
/// complex structure are exactly f5^0, f5^1, f7^0, f7^1 and g10^0, each with
/// first Betti number 3 and nilpotency step 3 or 4.
pub fn check_pk_admitting_set() -> Check {
    const NAME: &'static str = "pk-admitting-set";
    guard(NAME, (|| {
        let mut admitting = BTreeSet::new();
        for p in admissible_samples() {
            let has_pk = pk_solve(&build_wnn(&p)).1.is_some();
            let (_, _, target) = realify_table1(&p)?;
            if has_pk {
                admitting.insert(target);
            }
        }
        let (snn_alg, _) = build_snn(&snn_ii_pk_tuple()).realify()?;
        let snn_fp = fingerprint(&snn_alg)?;
        let g10_fp = fingerprint(&Builtin::G10_0.algebra())?;
        if snn_fp != g10_fp {
            return Ok(Check::fail(
                NAME,
                "strongly non-nilpotent witness algebra does not fingerprint as g10^0".to_string(),
            ));
        }
        admitting.insert(Builtin::G10_0);
        let expected: BTreeSet<Builtin> = [
            Builtin::F5_0,
            Builtin::F5_1,
            Builtin::F7_0,
            Builtin::F7_1,
            Builtin::G10_0,
        ]
        .into_iter()
        .collect();
        if admitting != expected {
            let got: Vec<&str> = admitting.iter().map(|b| b.label()).collect();
            return Ok(Check::fail(NAME, format!("admitting set {{{}}}", got.join(", "))));
        }
        for b in &expected {
            let g = b.algebra();
            let f = fingerprint(&g)?;
            let step = g.step();
            if f.betti[0] != 3 || !(step == 3 || step == 4) {
                return Ok(Check::fail(
                    NAME,
                    format!("{}: b1 {} step {step}", b.label(), f.betti[0]),
                ));
            }
        }
        Ok(Check::pass(
            NAME,
            "exactly {f5^0, f5^1, f7^0, f7^1, g10^0}, all with b1 = 3 and step 3 or 4",
        ))
    })())
}

/// The eight deterministic reproduction checks, in presentation order.
pub fn all_checks() -> Vec<Check> {
    vec![
        check_table2(),
        check_casimir_separation(),
        check_realification(),
        check_classification(),
        check_pk_solver(),
        check_geometry(),
        check_complex_symplectic(),
        check_pk_admitting_set(),
    ]
}

// ---------------------------------------------------------------------------
// Randomized property suites.

fn random_coeff(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-4i64..=4);
    let den = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    Rat::new(num.into(), den.into())
}

/// A random invertible rational matrix built from elementary row operations,
/// so no retry loop is needed.
fn random_transform(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut p = Mat::identity(n);
    for _ in 0..rng.gen_range(4..=9) {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if i == j {
                    j = (j + 1) % n;
                }
                let lam = Gauss::from_rat(random_coeff(rng));
                for col in 0..n {
                    let v = &p.at(j, col).clone() + &(&lam * p.at(i, col));
                    p.set(j, col, v);
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                for col in 0..n {
                    let a = p.at(i, col).clone();
                    let b = p.at(j, col).clone();
                    p.set(i, col, b);
                    p.set(j, col, a);
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                let lam = Gauss::from_rat(rat_int(*[-2i64, -1, 2].choose(rng).unwrap()));
                for col in 0..n {
                    let v = &lam * p.at(i, col);
                    p.set(i, col, v);
                }
            }
        }
    }
    p
}

/// The algebra in the coframe transformed by `p` (an arbitrary invertible
/// change of basis): structure constants conjugate, Jacobi survives.
fn transform_algebra(g: &LieAlgebra, p: &Mat) -> Result<LieAlgebra> {
    let n = g.dim();
    let pinv = p.inverse().expect("transform is invertible by construction");
    let rows: Vec<Vec<Gauss>> = (0..n).map(|j| pinv.row(j)).collect();
    let diffs: Vec<KForm> = (1..=n)
        .map(|k| {
            let mut acc = KForm::zero(n, 2);
            for l in 1..=n {
                let c = p.at(k - 1, l - 1);
                if !c.is_zero() {
                    acc = acc.add(&g.differential(l).scale(c));
                }
            }
            acc.substitute(&rows, n)
        })
        .collect();
    LieAlgebra::from_differentials(diffs)
}

fn random_base_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    match rng.gen_range(0..10) {
        0 => LieAlgebra::abelian(rng.gen_range(2..=8)),
        1 => {
            let small = [Builtin::H19Minus, Builtin::H26Plus].choose(rng).unwrap().algebra();
            small.direct_sum(&LieAlgebra::abelian(rng.gen_range(1..=3))).unwrap()
        }
        _ => Builtin::ALL.choose(rng).unwrap().algebra(),
    }
}

fn random_transformed_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = random_base_algebra(rng);
    let p = random_transform(rng, base.dim());
    transform_algebra(&base, &p).expect("change of basis preserves Jacobi")
}

fn random_form(rng: &mut ChaCha8Rng, ambient: usize, degree: usize) -> KForm {
    let tuples = increasing_tuples(ambient, degree);
    let mut f = KForm::zero(ambient, degree);
    for _ in 0..rng.gen_range(1..=3) {
        let idx = tuples.choose(rng).unwrap().clone();
        f.add_term(idx, Gauss::from_rat(random_coeff(rng)));
    }
    f
}

fn suite(name: &'static str, cases: usize, mut body: impl FnMut(usize) -> std::result::Result<(), String>) -> Check {
    for i in 0..cases {
        if let Err(detail) = body(i) {
            return Check::fail(name, format!("case {i}: {detail}"));
        }
    }
    Check::pass(name, format!("{cases} randomized cases"))
}

fn suite_d_squared(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suite("d-squared-zero", cases, move |_| {
        let g = random_transformed_algebra(&mut rng);
        for k in 1..=g.dim() {
            if !ce_differential(&g, g.differential(k)).is_zero() {
                return Err(format!("d(de^{k}) != 0 on {}", g.render()));
            }
        }
        Ok(())
    })
}

fn suite_leibniz(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suite("leibniz", cases, move |_| {
        let g = random_transformed_algebra(&mut rng);
        let n = g.dim();
        let p = rng.gen_range(1..=2.min(n));
        let q = rng.gen_range(1..=2.min(n));
        let alpha = random_form(&mut rng, n, p);
        let beta = random_form(&mut rng, n, q);
        let lhs = ce_differential(&g, &alpha.wedge(&beta));
        let mut rhs = ce_differential(&g, &alpha).wedge(&beta);
        let signed = alpha.wedge(&ce_differential(&g, &beta));
        rhs = if p % 2 == 0 { rhs.add(&signed) } else { rhs.sub(&signed) };
        if lhs != rhs {
            return Err(format!("Leibniz fails for degrees ({p},{q})"));
        }
        Ok(())
    })
}

fn suite_series(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suite("series-monotonic", cases, move |_| {
        let g = random_transformed_algebra(&mut rng);
        let asc = g.ascending_series();
        let desc = g.descending_series();
        let a = asc.dims();
        let d = desc.dims();
        if !a.windows(2).all(|w| w[0] < w[1]) && a.len() > 1 {
            return Err(format!("ascending dims {a:?} not strictly increasing"));
        }
        if *a.last().unwrap() != g.dim() {
            return Err(format!("ascending series stops at {:?}", a.last()));
        }
        if !d.windows(2).all(|w| w[0] > w[1]) && d.len() > 1 {
            return Err(format!("descending dims {d:?} not strictly decreasing"));
        }
        if a.len() != d.len() || a.len() != g.step() {
            return Err(format!("series lengths {} vs {} vs step {}", a.len(), d.len(), g.step()));
        }
        for w in asc.terms().windows(2) {
            for v in w[0].basis_rows() {
                if !w[1].contains(&v) {
                    return Err("ascending terms not nested".to_string());
                }
            }
        }
        if asc.terms()[0] != g.center() {
            return Err("first ascending term is not the center".to_string());
        }
        Ok(())
    })
}

fn suite_signature(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    suite("signature-congruence", cases, move |_| {
        let n = rng.gen_range(3..=6);
        let a = Mat::from_fn(n, n, |_, _| Gauss::from_rat(random_coeff(&mut rng)));
        let s = a.add(&a.transpose());
        let p = random_transform(&mut rng, n);
        let congruent = p.transpose().mul(&s).mul(&p);
        let left = s.signature_symmetric().map_err(|e| e.to_string())?;
        let right = congruent.signature_symmetric().map_err(|e| e.to_string())?;
        if left != right {
            return Err(format!("inertia {left:?} vs {right:?} after congruence"));
        }
        Ok(())
    })
}

fn suite_curvature(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_metric = 40usize;
    let metrics = cases.div_ceil(per_metric);
    let name = "curvature-symmetry";
    for m in 0..metrics {
        let delta = *[1i64, -1].choose(&mut rng).unwrap();
        let a = *[0i64, 1].choose(&mut rng).unwrap();
        let b = if a == 0 {
            Gauss::from_rat(rat_int(*[0i64, 1].choose(&mut rng).unwrap()))
        } else {
            Gauss::from_parts(random_coeff(&mut rng), rat_int(rng.gen_range(0..=3)))
        };
        let params = match WnNParams::new(0, delta, 1, rat_int(a), b) {
            Ok(p) => p,
            Err(e) => return Check::fail(name, format!("metric {m}: bad tuple: {e}")),
        };
        let (u, v) = (rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3));
        let mut r = rng.gen_range(-3i64..=3);
        let mut s = rng.gen_range(-3i64..=3);
        if r == 0 {
            r = 1;
        }
        if s == 0 {
            s = -1;
        }
        let form = Hermitian11Form::from_real_coords(
            4,
            &pk_family_coords(&params.a, params.delta, u, v, r, s),
        );
        let conn = match levi_civita(&build_wnn(&params), &form) {
            Ok(c) => c,
            Err(e) => return Check::fail(name, format!("metric {m}: {e}")),
        };
        let curv = curvature(&conn);
        if curv.value(0, 4, 1, 5) != gauss(-delta * r, 0) {
            return Check::fail(name, format!("metric {m}: anchor component off"));
        }
        for _ in 0..per_metric {
            let idx: Vec<usize> = (0..4).map(|_| rng.gen_range(0..8)).collect();
            let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
            let v = curv.value(a, b, c, d);
            if v != -curv.value(b, a, c, d) || v != -curv.value(a, b, d, c) {
                return Check::fail(name, format!("metric {m}: antisymmetry fails at {idx:?}"));
            }
            let bianchi = &(&v + &curv.value(b, c, a, d)) + &curv.value(c, a, b, d);
            if !bianchi.is_zero() {
                return Check::fail(name, format!("metric {m}: first Bianchi fails at {idx:?}"));
            }
        }
    }
    Check::pass(name, format!("{} randomized cases over {metrics} metrics", metrics * per_metric))
}

fn suite_round_trip(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = admissible_samples();
    suite("round-trip", cases, move |_| {
        let g = random_transformed_algebra(&mut rng);
        let back = LieAlgebra::parse(&g.render()).map_err(|e| e.to_string())?;
        if back != g {
            return Err(format!("algebra round trip differs for {}", g.render()));
        }
        let p = samples.choose(&mut rng).unwrap();
        let again = WnNParams::parse(&p.label()).map_err(|e| e.to_string())?;
        if &again != p {
            return Err(format!("tuple round trip differs for {}", p.label()));
        }
        Ok(())
    })
}

/// The six randomized law suites, `cases` runs each, fully reproducible from
/// `seed`.
pub fn property_suites(cases: usize, seed: u64) -> Vec<Check> {
    vec![
        suite_d_squared(cases, seed ^ 0x01),
        suite_leibniz(cases, seed ^ 0x02),
        suite_series(cases, seed ^ 0x03),
        suite_signature(cases, seed ^ 0x04),
        suite_curvature(cases, seed ^ 0x05),
        suite_round_trip(cases, seed ^ 0x06),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_diff_reports_single_injected_cell() {
        let golden = table2_golden();
        assert!(table2_diff(&golden, &golden).is_empty());
        let mut wrong = golden.clone();
        wrong[0].n_d += 1;
        let diff = table2_diff(&wrong, &golden);
        assert_eq!(diff.len(), 1);
        assert!(diff[0].contains("f1") && diff[0].contains("n_d"));
        let mut wrong = golden.clone();
        wrong[7].betti[2] = 7;
        let diff = table2_diff(&wrong, &golden);
        assert_eq!(diff.len(), 1);
        assert!(diff[0].contains("f6") && diff[0].contains("b3"));
    }

    #[test]
    fn transformed_algebras_stay_lawful() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let base = random_base_algebra(&mut rng);
            let p = random_transform(&mut rng, base.dim());
            let t = transform_algebra(&base, &p).unwrap();
            assert_eq!(t.dim(), base.dim());
            assert_eq!(t.step(), base.step());
        }
    }

    #[test]
    fn quick_property_suites() {
        for c in property_suites(25, 0xA11CE) {
            assert!(c.passed, "{}", c.line());
        }
    }

    #[test]
    fn full_reproduction_checks() {
        for c in all_checks() {
            assert!(c.passed, "{}", c.line());
        }
    }
}
