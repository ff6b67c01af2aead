//! Acceptance criteria, run in sequence so that wall-clock limits are not
//! distorted by other tests. Prints one line per criterion and exits non-zero
//! if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kin_gap::groups::{
    check_decomposition, check_split, classify, generate, orthochronous_split,
    scaled_lorentz_block, Flag, TransformClass,
};
use kin_gap::harness::{
    flipped_lambda, run_suite, SuiteConfig, SuiteReport, LAMBDA_PAIRS_PER_BOOST,
};
use kin_gap::verdict::Tally;
use kin_gap::{AffineMap, Result};

const SEED: u64 = 20240601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(name: &str, samples: usize) -> Result<SuiteReport> {
    run_suite(&SuiteConfig::new(name).samples(samples).seed(SEED))
}

fn summary(reports: &[&SuiteReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed);
    let detail = reports
        .iter()
        .map(|r| {
            let first = r
                .failures
                .first()
                .map(|f| format!(", first failure {} on {}", f.operation, f.inputs))
                .unwrap_or_default();
            format!(
                "{} checks={} failures={}{first}",
                r.suite,
                r.checks_run,
                r.failures.len()
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn c1() -> Result<Outcome> {
    let r = suite("prop-2.1", 200)?;
    let (mut ok, mut detail) = summary(&[&r]);
    // per boost: every λ-pair is checked twice (constructed, preserved) plus one S-pair
    let expected = 200 * (2 * LAMBDA_PAIRS_PER_BOOST as u64 + 1);
    ok &= r.checks_run == expected && r.witnesses.len() == 200;
    detail.push_str(&format!(", S-witnesses={}", r.witnesses.len()));
    Ok(Outcome { ok, detail })
}

fn c2() -> Result<Outcome> {
    let az = suite("az-inclusion", 200)?;
    let thm = suite("thm-6.2", 200)?;
    let (ok, detail) = summary(&[&az, &thm]);
    Ok(Outcome { ok, detail })
}

fn c3() -> Result<Outcome> {
    let mut tally = Tally::new();
    for i in 0..200 {
        let a = generate(TransformClass::ScalTriv, SEED.wrapping_add(i))?;
        check_decomposition(&mut tally, &a)?;
    }
    Ok(Outcome {
        ok: tally.passed() && tally.checks_run == 800,
        detail: format!(
            "checks={} failures={}",
            tally.checks_run,
            tally.failures.len()
        ),
    })
}

fn c4() -> Result<Outcome> {
    let r = suite("cor-6.5", 200)?;
    let (ok, detail) = summary(&[&r]);
    Ok(Outcome { ok, detail })
}

fn c5() -> Result<Outcome> {
    let r = suite("prop-6.6", 200)?;
    let (ok, detail) = summary(&[&r]);
    Ok(Outcome {
        ok: ok && !r.witnesses.is_empty(),
        detail,
    })
}

fn c6() -> Result<Outcome> {
    let n1 = suite("eq-new1", 200)?;
    let n2 = suite("eq-new2", 200)?;
    let b2 = suite("borisov2-steps", 200)?;
    let (mut ok, mut detail) = summary(&[&n1, &n2, &b2]);

    // the c = 2 block: factor √2, surd entries, exact recomposition
    let block = scaled_lorentz_block(1, 1);
    let mut tally = Tally::new();
    check_split(&mut tally, &block)?;
    let (s, p_up) = orthochronous_split(&block)?;
    let surd = s.linear.get(0, 0).radicand().is_some()
        && p_up
            .linear
            .rows()
            .iter()
            .flatten()
            .any(|x| !x.is_rational());
    let back: AffineMap = s.compose(&p_up)?;
    ok &= tally.passed() && surd && back == block && !b2.witnesses.is_empty();
    detail.push_str(&format!("; c=2 split s={}", s.linear.get(0, 0)));
    Ok(Outcome { ok, detail })
}

fn c7() -> Result<Outcome> {
    let r = suite("conjecture-chain", 500)?;
    let (ok, detail) = summary(&[&r]);
    let b = generate(TransformClass::Boost, SEED)?;
    let flags = classify(&b)?;
    let witness = flags.has(Flag::InScalPoi)
        && !flags.has(Flag::RespectsSExact)
        && !flags.has(Flag::InScalTriv);
    Ok(Outcome {
        ok: ok && witness && r.witnesses.len() == 2,
        detail,
    })
}

fn c8() -> Result<Outcome> {
    let grid = run_suite(&SuiteConfig::new("fol-phicol").seed(SEED).grid(true))?;
    let random = suite("fol-phicol", 10_000)?;
    let (ok, detail) = summary(&[&grid, &random]);
    Ok(Outcome {
        ok: ok && grid.checks_run == 531_441 && random.checks_run == 10_000,
        detail,
    })
}

fn c9() -> Result<Outcome> {
    let r = suite("bw-def", 10_000)?;
    let (ok, detail) = summary(&[&r]);
    Ok(Outcome { ok, detail })
}

fn c10() -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in [
        "prop-2.1",
        "az-inclusion",
        "borisov2-steps",
        "conjecture-chain",
    ] {
        let cfg = SuiteConfig::new(name).samples(10).seed(SEED);
        let a = run_suite(&cfg)?.without_timing().to_json();
        let b = run_suite(&cfg)?.without_timing().to_json();
        ok &= a == b;
    }
    notes.push(format!("determinism {}", if ok { "ok" } else { "broken" }));
    for name in ["prop-2.1", "az-inclusion"] {
        let cfg = SuiteConfig::new(name)
            .samples(10)
            .seed(SEED)
            .lambda(flipped_lambda());
        let r = run_suite(&cfg)?;
        // a respect counterexample, not only the non-vacuity check
        let counterexample = r.failures.iter().find(|f| f.operation.contains("respects"));
        ok &= !r.passed && counterexample.is_some();
        notes.push(format!(
            "flipped lambda {name}: {}",
            counterexample
                .map(|f| format!("counterexample {} on {}", f.operation, f.inputs))
                .unwrap_or_else(|| "not caught".into())
        ));
    }
    Ok(Outcome {
        ok,
        detail: notes.join("; "),
    })
}

type Criterion = (u32, &'static str, u64, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "prop-2.1 boosts respect lambda, violate S", 10, c1),
        (2, "az-inclusion and thm-6.2 respect checks", 20, c2),
        (3, "thm-6.2 decomposition recomposes", 5, c3),
        (4, "cor-6.5 closure", 5, c4),
        (5, "prop-6.6 Triv in Poi, strictly", 5, c5),
        (6, "eq-new1, eq-new2, borisov2-steps", 30, c6),
        (7, "conjecture-chain with C = S", 10, c7),
        (8, "fol-phicol grid and random", 120, c8),
        (9, "bw-def", 10, c9),
        (10, "determinism and mutation sensitivity", 60, c10),
    ];
    let mut failed = 0;
    for (n, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (ok, detail) = match outcome {
            Ok(o) => (o.ok && in_time, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {}: {title} ({:.2}s, limit {limit}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
