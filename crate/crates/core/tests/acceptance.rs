//! End-to-end acceptance run: one PASS/FAIL line per criterion, with the
//! required time limits. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{
    bareiss_distance_resultant, ctx, fp_mul, fp_polys_of_degree, fp_rem, product_of_linears, q,
    random_poly, Fp,
};
use sendov_core::batch::random_valuation_vector;
use sendov_core::sample::{instance_rng, random_factored};
use sendov_core::sendov::{absolute_form_violations, valuation_form_violations, Magnitude};
use sendov_core::{
    analyze, check_optimal_ramified, check_optimal_unramified, counterexample_family,
    distance_resultant, divides_power, i_of_f, root_valuations, sendov_radius, verify_theorem1,
    ExtScalar, FactoredPoly, Regime, ResiduePoly, UPoly, Valuation,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let pairs = [(2u64, 2usize), (2, 4), (3, 3), (3, 6), (5, 5), (3, 9)];
    for (p, n) in pairs {
        let c = ctx(p, 1);
        let f = counterexample_family(n, c).unwrap();
        let expected = -&c.valuation_of_int(n as i64).scale(&q(1, n as i64 - 1));
        let ioff = i_of_f(&f).unwrap().0;
        let crit = check_optimal_ramified(f.expanded()).unwrap().optimal;
        if ioff != expected || !crit {
            return outcome(
                false,
                format!(
                    "(p={p}, n={n}): I(f) valuation {ioff}, expected {expected}, criterion {crit}"
                ),
            );
        }
    }
    outcome(
        true,
        format!("{} (p, n) pairs attain -v_p(n)/(n-1)", pairs.len()),
    )
}

fn criterion_2() -> Outcome {
    for p in [3u64, 5] {
        let c = ctx(p, 2);
        let mut coeffs = vec![ExtScalar::zero(c); p as usize + 1];
        coeffs[0] = -ExtScalar::pi(c).scale(&q(1, p as i64));
        coeffs[p as usize] = ExtScalar::one(c);
        let h = UPoly::new(c, coeffs).unwrap();
        let f = FactoredPoly::new(vec![(UPoly::x(c), p as u32), (h, 1)]).unwrap();
        let report = analyze(&f).unwrap();
        let two_p = 2 * p as i64;
        let want_i = Valuation::from_ratio(-1, two_p);
        let want_r = Valuation::from_ratio(-1, two_p - 1);
        let ok = report.i_of_f_val.as_ref() == Some(&want_i)
            && report.radius_val == want_r
            && want_i > want_r
            && !report.optimal;
        if !ok {
            return outcome(false, format!("p={p}: {report:?}"));
        }
    }
    outcome(
        true,
        "I(f) valuation -1/(2p) > radius -1/(2p-1) for p = 3, 5",
    )
}

fn criterion_3() -> Outcome {
    for p in [3i64, 5, 7] {
        let c = ctx(p as u64, 1);
        let a = UPoly::from_rationals(c, vec![q(p + 1, 2), q(1, 1)]);
        let b = UPoly::from_rationals(c, vec![q(1 - p, 2), q(1, 1)]);
        let f = FactoredPoly::new(vec![(a, 1), (b, 1)]).unwrap();
        let crit = check_optimal_unramified(f.expanded());
        let ioff = i_of_f(&f).unwrap().0;
        if crit != Ok(false) || ioff != Valuation::from_int(1) {
            return outcome(
                false,
                format!("p={p}: criterion {crit:?}, I(f) valuation {ioff}"),
            );
        }
    }
    outcome(true, "criterion false and I(f) = p^-1 for p = 3, 5, 7")
}

struct CorpusEntry {
    regime: Regime,
    theorem1: std::result::Result<(), String>,
    agreement: std::result::Result<bool, String>,
}

const CORPUS_SEED: u64 = 20240901;
const CORPUS_SIZE: usize = 1000;

fn corpus_entry(index: usize) -> CorpusEntry {
    let p = [2u64, 3, 5][index % 3];
    let c = ctx(p, 1);
    let mut rng = instance_rng(CORPUS_SEED, index as u64);
    let n = rng.gen_range(2..=12);
    let f = random_factored(&mut rng, c, n);
    let radius = sendov_radius(n, c).unwrap();
    let regime = Regime::of_degree(c, n);
    let ioff = match i_of_f(&f) {
        Ok((v, _)) => v,
        Err(e) => {
            let msg = format!("#{index} oracle error {e}");
            return CorpusEntry {
                regime,
                theorem1: Err(msg.clone()),
                agreement: Err(msg),
            };
        }
    };
    let theorem1 = if ioff < radius {
        Err(format!(
            "#{index} p={p}: I(f) valuation {ioff} < radius {radius}"
        ))
    } else if verify_theorem1(f.expanded()) != Ok(true) {
        Err(format!(
            "#{index} p={p}: no critical point within the radius"
        ))
    } else {
        Ok(())
    };
    let oracle = ioff == radius;
    let criterion = match regime {
        Regime::Ramified => check_optimal_ramified(f.expanded()).map(|v| v.optimal),
        Regime::Unramified => check_optimal_unramified(f.expanded()),
    };
    let agreement = match criterion {
        Ok(v) if v == oracle => Ok(oracle),
        Ok(v) => Err(format!(
            "#{index} p={p} f={}: criterion {v}, oracle {oracle}",
            f.expanded()
        )),
        Err(e) => Err(format!("#{index} criterion error {e}")),
    };
    CorpusEntry {
        regime,
        theorem1,
        agreement,
    }
}

fn criteria_4_and_5() -> (Outcome, Outcome, Duration) {
    let start = Instant::now();
    let corpus: Vec<CorpusEntry> = (0..CORPUS_SIZE).into_par_iter().map(corpus_entry).collect();
    let elapsed = start.elapsed();

    let t1_failures: Vec<&String> = corpus
        .iter()
        .filter_map(|e| e.theorem1.as_ref().err())
        .collect();
    let c4 = if t1_failures.is_empty() {
        outcome(
            true,
            format!("{CORPUS_SIZE} instances, p in {{2,3,5}}, degrees 2-12, 0 failures"),
        )
    } else {
        outcome(
            false,
            format!("{} failures, first: {}", t1_failures.len(), t1_failures[0]),
        )
    };

    let mut tally = [[0usize; 2]; 2];
    let mut disagreements = Vec::new();
    for e in &corpus {
        match &e.agreement {
            Ok(optimal) => tally[(e.regime == Regime::Unramified) as usize][*optimal as usize] += 1,
            Err(msg) => disagreements.push(msg),
        }
    }
    let split = format!(
        "ramified {} optimal / {} not, unramified {} optimal / {} not",
        tally[0][1], tally[0][0], tally[1][1], tally[1][0]
    );
    let both_verdicts_seen = tally.iter().all(|r| r[0] > 0 && r[1] > 0);
    let c5 = if !disagreements.is_empty() {
        outcome(
            false,
            format!(
                "{} disagreements, first: {}",
                disagreements.len(),
                disagreements[0]
            ),
        )
    } else if !both_verdicts_seen {
        outcome(false, format!("corpus misses a verdict class: {split}"))
    } else {
        outcome(true, format!("0 disagreements; {split}"))
    };
    (c4, c5, elapsed)
}

fn criterion_6() -> Outcome {
    const PER_PAIR: u64 = 10_000;
    let mut pairs = Vec::new();
    for (p, b) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2)] {
        for n in (2..=12usize).filter(|n| (*n as u64).is_multiple_of(p)) {
            pairs.push((p, b, n));
        }
    }
    let mismatches: usize = pairs
        .par_iter()
        .enumerate()
        .map(|(k, &(p, b, n))| {
            let c = ctx(p, b);
            let mut rng = instance_rng(6, k as u64);
            (0..PER_PAIR)
                .filter(|_| {
                    let vals = random_valuation_vector(&mut rng, c, n);
                    let mags: Vec<Magnitude> = vals.iter().map(Magnitude::of_valuation).collect();
                    valuation_form_violations(c, &vals) != absolute_form_violations(c, &mags)
                })
                .count()
        })
        .sum();
    outcome(
        mismatches == 0,
        format!(
            "{} (p, b, n) triples x {PER_PAIR} vectors, {mismatches} mismatches",
            pairs.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let contexts = [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 3)];
    let mut products = 0;
    for i in 0..500 {
        let (p, b) = contexts[i % contexts.len()];
        let c = ctx(p, b);
        let (k, l) = (rng.gen_range(1..=8), rng.gen_range(1..=4));
        let (f, vals) = product_of_linears(&mut rng, c, k);
        let got = root_valuations(&f).unwrap();
        if got != vals {
            return outcome(false, format!("#{i} f={f}: got {got:?}, built {vals:?}"));
        }
        let (g, gvals) = product_of_linears(&mut rng, c, l);
        let mut union = vals;
        union.extend(gvals);
        union.sort();
        if root_valuations(&(&f * &g)).unwrap() != union {
            return outcome(false, format!("#{i}: additivity fails for ({f})({g})"));
        }
        products += 1;
    }
    outcome(
        true,
        format!("{products} products match their built multisets; products are additive"),
    )
}

fn criterion_8() -> Outcome {
    let mut checked = 0usize;
    for p in [2u64, 3, 5] {
        // Over F_5 scaling by units is irrelevant to divisibility, so the
        // sweep there is over monic polynomials.
        let monic = p == 5;
        let fs: Vec<Fp> = (0..=5)
            .flat_map(|d| fp_polys_of_degree(p, d, monic))
            .collect();
        let gs: Vec<Fp> = (0..=4)
            .flat_map(|d| fp_polys_of_degree(p, d, monic))
            .collect();
        let powers: Vec<Vec<Fp>> = gs
            .iter()
            .map(|g| {
                let mut out = vec![vec![1u64]];
                for k in 0..5 {
                    let next = fp_mul(&out[k], g, p);
                    out.push(next);
                }
                out
            })
            .collect();
        let mismatch = fs.par_iter().find_map_any(|f| {
            let fbar = ResiduePoly::new(p, f.iter().map(|&x| x as i64).collect());
            for (g, pw) in gs.iter().zip(&powers) {
                let gbar = ResiduePoly::new(p, g.iter().map(|&x| x as i64).collect());
                for n in 0..=5u32 {
                    let naive = fp_rem(&pw[n as usize], f, p).is_empty();
                    if divides_power(&fbar, &gbar, n) != Ok(naive) {
                        return Some(format!("p={p} f={f:?} g={g:?} n={n}: naive {naive}"));
                    }
                }
            }
            None
        });
        if let Some(m) = mismatch {
            return outcome(false, m);
        }
        checked += fs.len() * gs.len() * 6;
    }
    outcome(
        true,
        format!("{checked} (f, g, n) triples agree with long division"),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let contexts = [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2), (5, 3)];
    for i in 0..200 {
        let (p, b) = contexts[i % contexts.len()];
        let c = ctx(p, b);
        let h = random_poly(&mut rng, c, 1..4).monic().unwrap();
        let g = random_poly(&mut rng, c, 1..5);
        let fast = distance_resultant(&h, &g).unwrap();
        let slow = bareiss_distance_resultant(&h, &g);
        if fast != slow {
            return outcome(false, format!("#{i} h={h} g={g}: {fast} vs {slow}"));
        }
    }
    outcome(
        true,
        "200 instances match the Sylvester determinant over E[y]",
    )
}

fn main() {
    let mut failed = 0;
    let mut report =
        |id: usize, name: &str, o: Outcome, elapsed: Duration, limit: Option<Duration>| {
            let late = limit.is_some_and(|l| elapsed >= l);
            let ok = o.passed && !late;
            failed += !ok as usize;
            let limit_text = limit
                .map(|l| format!(" / limit {}s", l.as_secs()))
                .unwrap_or_default();
            let late_text = if late { " TIME LIMIT EXCEEDED;" } else { "" };
            println!(
                "criterion {id} {:<36} {} ({:.2}s{limit_text};{late_text} {})",
                format!("[{name}]"),
                if ok { "PASS" } else { "FAIL" },
                elapsed.as_secs_f64(),
                o.detail
            );
        };

    type Criterion = (usize, &'static str, fn() -> Outcome, Option<u64>);
    let early: [Criterion; 3] = [
        (1, "family attains the radius", criterion_1, Some(5)),
        (2, "sqrt(p) family below the radius", criterion_2, Some(5)),
        (3, "split quadratic non-optimal", criterion_3, Some(1)),
    ];
    for (id, name, run, limit) in early {
        let start = Instant::now();
        let o = run();
        report(id, name, o, start.elapsed(), limit.map(Duration::from_secs));
    }

    let (c4, c5, elapsed) = criteria_4_and_5();
    report(
        4,
        "Sendov bound on random corpus",
        c4,
        elapsed,
        Some(Duration::from_secs(60)),
    );
    report(5, "criterion agrees with oracle", c5, elapsed, None);

    let late: [Criterion; 4] = [
        (6, "valuation vs absolute-value forms", criterion_6, None),
        (7, "Newton polygon root valuations", criterion_7, None),
        (8, "residue divisibility sweep", criterion_8, None),
        (9, "distance resultant vs Sylvester", criterion_9, None),
    ];
    for (id, name, run, limit) in late {
        let start = Instant::now();
        let o = run();
        report(id, name, o, start.elapsed(), limit.map(Duration::from_secs));
    }

    if failed > 0 {
        println!("acceptance: {failed} criteria FAILED");
        std::process::exit(1);
    }
    println!("acceptance: all 9 criteria PASS");
}
