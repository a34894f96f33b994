//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Corpora are drawn with `trace_poly_corpus(ctx, s, count, seed, true)`:
//! - main corpus, m in {5, 7, 9, 11}: s in 0..=3, 15 polynomials each,
//!   seed 1000 m + s (60 per m);
//! - sigma4 corpus, m in {9, 11, 13}: s in 0..=2, 50 each, seed 2000 m + s;
//! - m = 13 amplitude corpus: s in 0..=2, 50 each, seed 3000 + s;
//! - auxiliary-curve corpus, m in {7, 9, 11}: s in {2, 3}, 10 each,
//!   seed 4000 m + s;
//! - genus-2 curves: `random_curve` on stream j of seed 5000 + m;
//! - m = 15 monomials: a7 from `SplitMix64::new(15)`.

use std::process::ExitCode;
use std::time::Instant;

use serde_json::Value;
use walsh_forge::autocorr::{sigma_decomposition, x_alpha_all_from_table, XAlphaTable};
use walsh_forge::auxcurve;
use walsh_forge::boolfn::{truth_table, TracePoly};
use walsh_forge::bounds::{
    check_divisibility, check_linf_lower, check_linf_upper, check_n0_deviation, check_n_deviation,
    check_sigma4_deviation, BoundCheck,
};
use walsh_forge::classify7::{classify_all, AlphaClassification};
use walsh_forge::genus2::{classify, count_points, e_poly, p_poly};
use walsh_forge::rng::{random_curve, trace_poly_corpus, SplitMix64};
use walsh_forge::spectrum::{fwht, WalshSpectrum};
use walsh_forge::{cli, Fe, FieldCtx};

const MAIN_DEGREES: [u32; 4] = [5, 7, 9, 11];

struct Analysed {
    m: u32,
    q: u64,
    g: TracePoly,
    spectrum: WalshSpectrum,
    xt: XAlphaTable,
    classes: Vec<AlphaClassification>,
}

fn ctx(m: u32) -> FieldCtx {
    FieldCtx::with_default_modulus(m).unwrap()
}

fn main_corpus() -> Vec<Analysed> {
    let mut out = Vec::new();
    for m in MAIN_DEGREES {
        let k = ctx(m);
        for s in 0..=3 {
            for g in trace_poly_corpus(&k, s, 15, 1000 * m as u64 + s as u64, true) {
                let table = truth_table(&k, &g);
                out.push(Analysed {
                    m,
                    q: k.q(),
                    spectrum: fwht(&table),
                    xt: x_alpha_all_from_table(&table),
                    classes: classify_all(&k, &g).unwrap(),
                    g,
                });
            }
        }
    }
    out
}

struct Suite {
    failures: usize,
}

impl Suite {
    fn report(&mut self, n: u32, pass: bool, detail: String, start: Instant) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {n}: {verdict} ({detail}; {:.1}s)",
            start.elapsed().as_secs_f64()
        );
        if !pass {
            self.failures += 1;
        }
    }
}

fn first_failure(checks: &[(String, BoundCheck)]) -> String {
    match checks.iter().find(|(_, c)| !c.pass) {
        Some((who, c)) => format!(
            "first failure {who}: {} {} {} {}",
            c.name, c.lhs, c.relation, c.rhs
        ),
        None => "none failed".into(),
    }
}

fn main() -> ExitCode {
    let mut suite = Suite { failures: 0 };

    let start = Instant::now();
    let corpus = main_corpus();
    println!(
        "main corpus: {} polynomials over m in {MAIN_DEGREES:?} ({:.1}s)",
        corpus.len(),
        start.elapsed().as_secs_f64()
    );

    // 1. q^2 + sum X_alpha = (1/q) sum f^4.
    let start = Instant::now();
    let bad = corpus
        .iter()
        .filter(|a| a.spectrum.sum_fourth_powers() != a.q as u128 * a.xt.sigma4())
        .count();
    suite.report(
        1,
        bad == 0,
        format!("{} G, {bad} identity violations", corpus.len()),
        start,
    );

    // 2. Trichotomy.
    let start = Instant::now();
    let pairs: usize = corpus.iter().map(|a| a.q as usize - 1).sum();
    let outside: usize = corpus
        .iter()
        .map(|a| {
            a.xt.entries()
                .filter(|&(_, x)| x != 0 && x != 2 * a.q && x != 8 * a.q)
                .count()
        })
        .sum();
    suite.report(
        2,
        outside == 0,
        format!("{pairs} (G, alpha) pairs, {outside} outside {{0, 2q, 8q}}"),
        start,
    );

    // 3. Predictor against brute force.
    let start = Instant::now();
    let mismatches: usize = corpus
        .iter()
        .map(|a| {
            a.classes
                .iter()
                .filter(|c| c.predicted.value(a.q) != a.xt.get(c.alpha))
                .count()
        })
        .sum();
    suite.report(
        3,
        mismatches == 0,
        format!("{pairs} (G, alpha) pairs, {mismatches} mismatches"),
        start,
    );

    // 4. sigma4 deviation, m in {9, 11, 13}, s in {0, 1, 2}.
    let start = Instant::now();
    let mut checks4 = Vec::new();
    let mut amplitude_extra: Vec<(u32, usize, u64, u32)> = Vec::new();
    for m in [9u32, 11, 13] {
        let k = ctx(m);
        for s in 0..=2usize {
            for (j, g) in trace_poly_corpus(&k, s, 50, 2000 * m as u64 + s as u64, true)
                .iter()
                .enumerate()
            {
                let w = fwht(&truth_table(&k, g));
                checks4.push((
                    format!("m={m} s={s} #{j}"),
                    check_sigma4_deviation(&k, s, w.l4_fourth()),
                ));
                amplitude_extra.push((m, s, w.linf(), g.binary_degree()));
            }
        }
    }
    let ok4 = checks4.iter().all(|(_, c)| c.pass);
    suite.report(
        4,
        ok4,
        format!("{} G, {}", checks4.len(), first_failure(&checks4)),
        start,
    );

    // 13 amplitude corpus, used by criteria 5 and 6.
    let k13 = ctx(13);
    for s in 0..=2usize {
        for g in trace_poly_corpus(&k13, s, 50, 3000 + s as u64, true) {
            amplitude_extra.push((
                13,
                s,
                fwht(&truth_table(&k13, &g)).linf(),
                g.binary_degree(),
            ));
        }
    }

    // 5. linf^2 <= 36q and 2^ceil(m/d) | linf.
    let start = Instant::now();
    let mut checks5 = Vec::new();
    let mut amplitude: Vec<(u32, usize, u64, u32)> = corpus
        .iter()
        .map(|a| (a.m, a.g.s(), a.spectrum.linf(), a.g.binary_degree()))
        .collect();
    amplitude.extend(amplitude_extra.iter().copied());
    for &(m, s, linf, d) in &amplitude {
        let k = ctx(m);
        let who = format!("m={m} s={s} linf={linf}");
        checks5.push((who.clone(), check_linf_upper(&k, linf)));
        checks5.push((who, check_divisibility(&k, d, linf)));
    }
    let ok5 = checks5.iter().all(|(_, c)| c.pass);
    suite.report(
        5,
        ok5,
        format!("{} G, {}", amplitude.len(), first_failure(&checks5)),
        start,
    );

    // 6. linf^2 >= 2q (hard inside m <= 11 + 2s), and at m = 15, s = 0,
    // linf >= 2^8 + 2^5 with full-alpha predictor verification.
    let start = Instant::now();
    let mut hard6 = Vec::new();
    let mut warnings = 0;
    for &(m, s, linf, _) in &amplitude {
        for c in check_linf_lower(&ctx(m), s, linf) {
            if c.hard {
                hard6.push((format!("m={m} s={s} linf={linf}"), c));
            } else if !c.pass {
                warnings += 1;
            }
        }
    }
    let k15 = ctx(15);
    let mut rng = SplitMix64::new(15);
    let mut min15 = u64::MAX;
    let mut mismatches15 = 0;
    for i in 0..4 {
        let g = TracePoly::monomial(rng.nonzero_element(&k15)).unwrap();
        let table = truth_table(&k15, &g);
        let linf = fwht(&table).linf();
        min15 = min15.min(linf);
        for c in check_linf_lower(&k15, 0, linf) {
            if c.hard {
                hard6.push((format!("m=15 a7={}", g.a7()), c));
            }
        }
        if i == 0 {
            let xt = x_alpha_all_from_table(&table);
            mismatches15 = classify_all(&k15, &g)
                .unwrap()
                .iter()
                .filter(|c| c.predicted.value(k15.q()) != xt.get(c.alpha))
                .count();
        }
    }
    let ok6 = hard6.iter().all(|(_, c)| c.pass) && mismatches15 == 0;
    suite.report(
        6,
        ok6,
        format!(
            "{} hard checks, {warnings} informational failures, m=15 min linf {min15} vs 288, {mismatches15} m=15 predictor mismatches; {}",
            hard6.len(),
            first_failure(&hard6)
        ),
        start,
    );

    // 7. Genus-2 oracle.
    let start = Instant::now();
    let mut bad_count = 0;
    let mut bad_parity = 0;
    let mut bad_factor = 0;
    for m in [5u32, 7, 9] {
        let k = ctx(m);
        for j in 0..1000u64 {
            let mut rng = SplitMix64::stream(5000 + m as u64, j);
            let curve = random_curve(&k, &mut rng);
            let data = classify(&k, &curve).unwrap();
            bad_count += !data.predicts(count_points(&k, &curve)) as usize;
            bad_parity += (data.w % 2 != m % 2) as usize;
        }
        let mut rng = SplitMix64::new(6000 + m as u64);
        for _ in 0..10_000 {
            let (a, b, x) = (rng.nonzero_element(&k), rng.element(&k), rng.element(&k));
            let p = p_poly(&k, a, b, x);
            let factored = k.mul(k.mul(x, p), Fe::ONE + k.mul(k.pow(x, 5), p));
            bad_factor += (e_poly(&k, a, b, x).unwrap() != factored) as usize;
        }
    }
    suite.report(
        7,
        bad_count + bad_parity + bad_factor == 0,
        format!("3000 curves: {bad_count} counts outside prediction, {bad_parity} parity failures; 30000 evaluations: {bad_factor} factorization failures"),
        start,
    );

    // 8. N0 and N bounds; centred sigma4 decomposition.
    let start = Instant::now();
    let mut checks8 = Vec::new();
    let mut bad_decomp = 0;
    for (j, a) in corpus.iter().enumerate() {
        let d = sigma_decomposition(&a.xt).unwrap();
        let who = format!("m={} s={} #{j}", a.m, a.g.s());
        let [weak, _strict] = check_n0_deviation(a.q, d.n0);
        checks8.push((who.clone(), weak));
        checks8.push((who, check_n_deviation(a.q, a.g.s(), d.n).expect("q >= 32")));
        bad_decomp += (d.sigma4_centred(a.q) != a.spectrum.l4_fourth() as i128) as usize;
    }
    let ok8 = checks8.iter().all(|(_, c)| c.pass) && bad_decomp == 0;
    suite.report(
        8,
        ok8,
        format!(
            "{} G, {bad_decomp} decomposition failures, {}",
            corpus.len(),
            first_failure(&checks8)
        ),
        start,
    );

    // 9. Auxiliary curve.
    let start = Instant::now();
    let mut checks9 = Vec::new();
    let mut bad_identity = 0;
    let mut bad_lemma = 0;
    let mut configs = 0;
    for m in [7u32, 9, 11] {
        let k = ctx(m);
        for s in [2usize, 3] {
            for (j, g) in trace_poly_corpus(&k, s, 10, 4000 * m as u64 + s as u64, true)
                .iter()
                .enumerate()
            {
                configs += 1;
                let aux = auxcurve::analyze(&k, g).unwrap();
                bad_identity += (aux.count_total as i64 != aux.s7 + k.q() as i64 + 1) as usize;
                let n = classify_all(&k, g)
                    .unwrap()
                    .iter()
                    .filter(|c| c.predicted.value(k.q()) == 8 * k.q())
                    .count() as u64;
                bad_lemma += (aux.n_from_lemma != n) as usize;
                for c in aux.checks {
                    checks9.push((format!("m={m} s={s} #{j}"), c));
                }
            }
        }
    }
    let ok9 = checks9.iter().all(|(_, c)| c.pass) && bad_identity == 0 && bad_lemma == 0;
    suite.report(
        9,
        ok9,
        format!(
            "{configs} G, {bad_identity} count-identity failures, {bad_lemma} lemma mismatches, {}",
            first_failure(&checks9)
        ),
        start,
    );

    // 10. Determinism of verify across thread counts.
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let mut hashes = Vec::new();
    let mut results = Vec::new();
    let mut codes = Vec::new();
    for threads in ["1", "2", "4"] {
        let path = dir.path().join(format!("verify-{threads}.json"));
        let code = cli::run([
            "walsh-forge",
            "verify",
            "--m",
            "9",
            "--s",
            "2",
            "--seed",
            "10",
            "--count",
            "5",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        codes.push(code);
        let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        hashes.push(report["determinism_hash"].as_str().unwrap().to_string());
        results.push(report["result"].clone());
    }
    let ok10 = codes.iter().all(|&c| c == 0)
        && hashes.windows(2).all(|w| w[0] == w[1])
        && results.windows(2).all(|w| w[0] == w[1]);
    suite.report(
        10,
        ok10,
        format!(
            "threads 1/2/4, exit codes {codes:?}, hash {}",
            &hashes[0][..16]
        ),
        start,
    );

    if suite.failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", suite.failures);
        ExitCode::FAILURE
    }
}
