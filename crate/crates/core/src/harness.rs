//! Named verification suites and their reports.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fol::{self, Formula, Term, Valuation};
use crate::groups::{
    check_decomposition, classify, generate_with, sandwich_extract, saturate,
    verify_group_identity, Flag, GroupIdentity, TransformClass,
};
use crate::linalg::{AffineMap, Point4};
use crate::relations::{check_respects, Geometry, Relation, RespectVerdict, TupleSampler};
use crate::sampling::{random_point, small_rational, stream};
use crate::scalar::Scalar;
use crate::verdict::{Failure, Tally, Witness};

/// Lightlike pairs checked against each boost.
pub const LAMBDA_PAIRS_PER_BOOST: usize = 1000;
/// Tuples per relation handed to `check_respects`.
pub const RESPECT_TUPLES: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: String,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    /// Exhaustive grid instead of random tuples (fol-phicol).
    pub grid: bool,
    /// Longest word in the saturation step of borisov2-steps.
    pub word_length: usize,
    /// The lightlike relation used by every suite. Replaced only to check
    /// that a falsified relation is detected.
    pub lambda: Relation,
}

impl SuiteConfig {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteConfig {
            suite: suite.into(),
            samples: 200,
            seed: 0,
            format: Format::Json,
            grid: false,
            word_length: 4,
            lambda: Relation::lambda(),
        }
    }

    pub fn samples(mut self, n: usize) -> Self {
        self.samples = n;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn grid(mut self, on: bool) -> Self {
        self.grid = on;
        self
    }

    pub fn lambda(mut self, r: Relation) -> Self {
        self.lambda = r;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if self.word_length == 0 {
            return Err(Error::InvalidConfig(
                "word length must be at least 1".into(),
            ));
        }
        if self.lambda.arity() != 2 {
            return Err(Error::InvalidConfig("lambda must be binary".into()));
        }
        if self.suite != "all" && !SUITES.iter().any(|s| s.name == self.suite) {
            return Err(Error::UnknownSuite(self.suite.clone()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claim: String,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub witnesses: Vec<Witness>,
    pub duration_ms: u64,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} checks={} failures={} witnesses={} seed={} samples={} {}ms\n  {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.checks_run,
            self.failures.len(),
            self.witnesses.len(),
            self.seed,
            self.samples,
            self.duration_ms,
            self.claim,
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  failure {}: inputs {} expected {} actual {}\n",
                f.operation, f.inputs, f.expected, f.actual
            ));
        }
        out
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport {
            duration_ms: 0,
            ..self.clone()
        }
    }
}

pub struct Suite {
    pub name: &'static str,
    pub claim: &'static str,
    run: fn(&SuiteConfig) -> Result<Tally>,
}

pub const SUITES: [Suite; 12] = [
    Suite {
        name: "prop-2.1",
        claim: "a Lorentz boost with nonzero speed preserves lightlike relatedness but not simultaneity",
        run: prop_2_1,
    },
    Suite {
        name: "az-inclusion",
        claim: "every scaled Poincare map is an automorphism of relativistic spacetime",
        run: az_inclusion,
    },
    Suite {
        name: "thm-6.2",
        claim: "every scaled trivial map is D after a translation after a trivial linear map, and preserves late classical spacetime",
        run: thm_6_2,
    },
    Suite {
        name: "cor-6.5",
        claim: "scaled trivial maps and scaled Poincare maps form groups under composition",
        run: cor_6_5,
    },
    Suite {
        name: "prop-6.6",
        claim: "trivial maps are Poincare maps, strictly",
        run: prop_6_6,
    },
    Suite {
        name: "eq-new1",
        claim: "scaled trivial maps that are orthochronous Poincare maps are exactly the orthochronous trivial maps",
        run: eq_new1,
    },
    Suite {
        name: "eq-new2",
        claim: "scaled Poincare maps are exactly scaled orthochronous Poincare maps",
        run: eq_new2,
    },
    Suite {
        name: "borisov2-steps",
        claim: "a scaled Poincare map outside the scaled trivial maps decomposes as a scaling after an orthochronous Poincare map outside the trivial ones",
        run: borisov2_steps,
    },
    Suite {
        name: "fol-phicol",
        claim: "the field formula for collinearity defines collinearity on coordinate tuples",
        run: fol_phicol,
    },
    Suite {
        name: "bw-def",
        claim: "a in [0,1] iff a = b^2 and 1 - a = c^2 for some b, c; hence betweenness is field-definable",
        run: bw_def,
    },
    Suite {
        name: "galst-7.1",
        claim: "Galilean spacetime extended by lightlike relatedness has the automorphisms of late classical spacetime",
        run: galst_7_1,
    },
    Suite {
        name: "conjecture-chain",
        claim: "relativistic spacetime extended by simultaneity has the automorphisms of late classical spacetime; boosts separate it from relativistic spacetime",
        run: conjecture_chain,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs the named suite, or every suite in registration order for `"all"`.
pub fn run(config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    config.validate()?;
    if config.suite == "all" {
        SUITES.iter().map(|s| run_one(s, config)).collect()
    } else {
        run_suite(config).map(|r| vec![r])
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let suite = SUITES
        .iter()
        .find(|s| s.name == config.suite)
        .ok_or_else(|| Error::UnknownSuite(config.suite.clone()))?;
    run_one(suite, config)
}

fn run_one(suite: &Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let tally = (suite.run)(config)?;
    Ok(SuiteReport {
        suite: suite.name.to_string(),
        claim: suite.claim.to_string(),
        samples: config.samples,
        seed: config.seed,
        passed: tally.passed(),
        checks_run: tally.checks_run,
        failures: tally.failures,
        witnesses: tally.witnesses,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

/// λ with the sign of the `x` term flipped: `(t−t')² = −(x−x')² + (y−y')² + (z−z')²`.
pub fn flipped_lambda() -> Relation {
    fn eval(t: &[Point4]) -> Result<bool> {
        let d = t[0].sub(&t[1])?;
        let [dt, dx, dy, dz] = d.coords();
        let rhs = dy.square().add(&dz.square())?.sub(&dx.square())?;
        Ok(dt.square() == rhs)
    }
    Relation::new("lambda", 2, eval)
}

fn one_line(map: &AffineMap) -> String {
    map.to_string().replace('\n', "; ")
}

fn points(tuple: &[Point4]) -> String {
    tuple
        .iter()
        .map(Point4::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn record_respects(tally: &mut Tally, f: &AffineMap, geometry: &Geometry, verdict: RespectVerdict) {
    match verdict {
        RespectVerdict::Pass { checks } => tally.checks_run += checks as u64,
        RespectVerdict::Counterexample {
            relation,
            tuple,
            image,
            holds_before,
        } => {
            tally.checks_run += 1;
            tally.failures.push(Failure {
                operation: format!("respects[{}].{relation}", geometry.name),
                inputs: format!("map {}; tuple {}", one_line(f), tuple.join(" ")),
                expected: format!("holds={holds_before} on image {}", image.join(" ")),
                actual: format!("holds={}", !holds_before),
            });
        }
    }
}

fn respects_geometry(
    tally: &mut Tally,
    f: &AffineMap,
    geometry: &Geometry,
    sampler: &mut TupleSampler,
) -> Result<()> {
    let verdict = check_respects(f, geometry, sampler, RESPECT_TUPLES)?;
    record_respects(tally, f, geometry, verdict);
    Ok(())
}

/// Constructed lightlike pairs must satisfy the λ in use; a falsified λ is
/// caught here even when every map happens to respect it.
fn lambda_nonvacuous(
    tally: &mut Tally,
    lambda: &Relation,
    sampler: &mut TupleSampler,
) -> Result<()> {
    let pair = sampler.lightlike_pair()?;
    let ok = lambda.holds(&pair)?;
    tally.expect(ok, "lambda.constructed_pair_holds", || points(&pair));
    Ok(())
}

/// A simultaneous pair separated along the direction that the boost mixes
/// with time: `q − p` is the spatial part of the boost's first row.
fn s_breaking_pair(boost: &AffineMap, rng: &mut crate::sampling::SampleRng) -> Result<Vec<Point4>> {
    let p = random_point(rng);
    let row = &boost.linear.rows()[0];
    let offset = Point4::new(
        Scalar::zero(),
        row[1].clone(),
        row[2].clone(),
        row[3].clone(),
    );
    Ok(vec![p.clone(), p.add(&offset)?])
}

fn prop_2_1(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let simul = Relation::simul();
    for i in 0..cfg.samples as u64 {
        let rng = &mut stream(cfg.seed, "prop-2.1", i);
        let b = generate_with(TransformClass::Boost, rng)?;
        let mut sampler = TupleSampler::new(stream(cfg.seed, "prop-2.1/pairs", i));
        for _ in 0..LAMBDA_PAIRS_PER_BOOST {
            let pair = sampler.lightlike_pair()?;
            let before = cfg.lambda.holds(&pair)?;
            tally.expect(before, "lambda.constructed_pair_holds", || points(&pair));
            let image = b.apply_all(&pair)?;
            let after = cfg.lambda.holds(&image)?;
            tally.check(
                after == before,
                "boost.respects_lambda",
                || format!("map {}; pair {}", one_line(&b), points(&pair)),
                before,
                after,
            );
        }
        let pair = s_breaking_pair(&b, rng)?;
        let image = b.apply_all(&pair)?;
        let before = simul.holds(&pair)?;
        let after = simul.holds(&image)?;
        let broken = before && !after;
        tally.expect(broken, "boost.violates_simul", || {
            format!("map {}; pair {}", one_line(&b), points(&pair))
        });
        if broken {
            tally.witness(
                "boost.violates_simul",
                format!("map {}; pair {}", one_line(&b), points(&pair)),
                format!("image {} is not simultaneous", points(&image)),
            );
        }
    }
    Ok(tally)
}

fn az_inclusion(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let geometry = Geometry::rel_st().with_replaced(cfg.lambda);
    for i in 0..cfg.samples as u64 {
        let rng = &mut stream(cfg.seed, "az-inclusion", i);
        let f = generate_with(TransformClass::ScalPoi, rng)?;
        let mut sampler = TupleSampler::new(stream(cfg.seed, "az-inclusion/tuples", i));
        lambda_nonvacuous(&mut tally, &cfg.lambda, &mut sampler)?;
        respects_geometry(&mut tally, &f, &geometry, &mut sampler)?;
    }
    Ok(tally)
}

fn thm_6_2(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let geometries = [
        Geometry::lclass_st().with_replaced(cfg.lambda),
        Geometry::eucl().extended("eucl+rest", Relation::rest()),
        Geometry::gal_st().extended("galst+lambda", cfg.lambda),
    ];
    for i in 0..cfg.samples as u64 {
        let rng = &mut stream(cfg.seed, "thm-6.2", i);
        let a = generate_with(TransformClass::ScalTriv, rng)?;
        check_decomposition(&mut tally, &a)?;
        let mut sampler = TupleSampler::new(stream(cfg.seed, "thm-6.2/tuples", i));
        lambda_nonvacuous(&mut tally, &cfg.lambda, &mut sampler)?;
        for g in &geometries {
            respects_geometry(&mut tally, &a, g, &mut sampler)?;
        }
    }
    Ok(tally)
}

fn cor_6_5(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = verify_group_identity(GroupIdentity::ClosureScalTriv, cfg.samples, cfg.seed)?;
    tally.merge(verify_group_identity(
        GroupIdentity::ClosureScalPoi,
        cfg.samples,
        cfg.seed,
    )?);
    Ok(tally)
}

fn prop_6_6(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = verify_group_identity(GroupIdentity::TrivSubsetPoi, cfg.samples, cfg.seed)?;
    for i in 0..cfg.samples as u64 {
        let b = generate_with(
            TransformClass::Boost,
            &mut stream(cfg.seed, "prop-6.6/boost", i),
        )?;
        let r = classify(&b)?;
        tally.expect(
            r.has(Flag::Poincare) && !r.has(Flag::Trivial),
            "boost.poincare_not_trivial",
            || one_line(&b),
        );
    }
    Ok(tally)
}

fn eq_new1(cfg: &SuiteConfig) -> Result<Tally> {
    verify_group_identity(GroupIdentity::New1, cfg.samples, cfg.seed)
}

fn eq_new2(cfg: &SuiteConfig) -> Result<Tally> {
    verify_group_identity(GroupIdentity::New2, cfg.samples, cfg.seed)
}

fn borisov2_steps(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let mut found = 0;
    let mut first_witness = None;
    let mut attempt = 0u64;
    // draw until `samples` maps outside Scal∘Triv have been seen
    while found < cfg.samples {
        if attempt >= 20 * cfg.samples as u64 {
            tally.check(
                false,
                "borisov2.enough_samples",
                String::new,
                cfg.samples,
                found,
            );
            break;
        }
        let g = generate_with(
            TransformClass::ScalPoi,
            &mut stream(cfg.seed, "borisov2-steps", attempt),
        )?;
        attempt += 1;
        if classify(&g)?.has(Flag::InScalTriv) {
            continue;
        }
        found += 1;
        match sandwich_extract(&g) {
            Ok(p) => {
                let r = classify(&p)?;
                tally.expect(
                    r.has(Flag::InPoiUp) && !r.has(Flag::InTrivUp),
                    "sandwich_extract.in_poi_up_not_triv_up",
                    || one_line(&g),
                );
                first_witness.get_or_insert(p);
            }
            Err(e) => {
                tally.check(false, "sandwich_extract", || one_line(&g), "p_up", e);
            }
        }
    }

    if let Some(w) = first_witness {
        let rng = &mut stream(cfg.seed, "borisov2-steps/saturation", 0);
        let mut gens = (0..3)
            .map(|_| generate_with(TransformClass::ScalTriv, rng))
            .collect::<Result<Vec<_>>>()?;
        gens.push(w);
        let words = saturate(&gens, cfg.word_length)?;
        let mut outside = 0usize;
        for m in &words {
            let r = classify(m)?;
            tally.expect(r.has(Flag::InScalPoi), "saturation.inside_scal_poi", || {
                one_line(m)
            });
            if r.has(Flag::InPoiUp) && !r.has(Flag::InTrivUp) {
                outside += 1;
            }
        }
        tally.expect(
            outside > 0,
            "saturation.meets_poi_up_outside_triv_up",
            || format!("{} words", words.len()),
        );
        tally.witness(
            "saturation",
            format!(
                "{} generators, words up to length {}",
                gens.len(),
                cfg.word_length
            ),
            format!(
                "{} distinct maps, {outside} in Poi_up outside Triv_up",
                words.len()
            ),
        );
    }
    Ok(tally)
}

fn fol_phicol(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let phi = fol::builtin("phi_col")?;
    let col = Relation::col();
    let values = [Scalar::int(-1), Scalar::zero(), Scalar::one()];
    let verdict = if cfg.grid {
        fol::oracle_agree(&phi, &col, fol::grid(&values, 3))?
    } else {
        let mut sampler = TupleSampler::new(stream(cfg.seed, "fol-phicol", 0));
        let tuples = (0..cfg.samples)
            .map(|_| sampler.sample(&col))
            .collect::<Result<Vec<_>>>()?;
        fol::oracle_agree(&phi, &col, tuples)?
    };
    record_oracle(&mut tally, "phi_col", verdict);
    Ok(tally)
}

fn record_oracle(tally: &mut Tally, name: &str, verdict: fol::OracleVerdict) {
    tally.checks_run += verdict.checks;
    if let Some(d) = verdict.disagreement {
        tally.failures.push(Failure {
            operation: format!("oracle_agree.{name}"),
            inputs: d.tuple.join(" "),
            expected: d.relation.to_string(),
            actual: d.formula.to_string(),
        });
    }
}

/// `∃b∃c (a = b² ∧ 1 − a = c²)` with `a = v1`, `b = v2`, `c = v3`.
fn unit_interval_formula() -> Formula {
    let v = Term::Var;
    Formula::And(vec![
        Formula::exists(2, Formula::equals(v(1), Term::product(v(2), v(2)))),
        Formula::exists(
            3,
            Formula::equals(Term::One, Term::sum(v(1), Term::product(v(3), v(3)))),
        ),
    ])
}

fn bw_def(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let bw = Relation::bw();
    let phi = fol::builtin("phi_bw")?;
    let square_trick = unit_interval_formula();
    let mut sampler = TupleSampler::new(stream(cfg.seed, "bw-def", 0));
    let mut tuples = Vec::with_capacity(2 * cfg.samples);
    for i in 0..cfg.samples {
        tuples.push(sampler.sample(&bw)?);
        let rng = sampler.rng();
        let p = random_point(rng);
        let r = random_point(rng);
        let forced = match i % 4 {
            0 => vec![p.clone(), p, r],
            1 => vec![p, r.clone(), r],
            2 => vec![p.clone(), p.clone(), p],
            _ => vec![p.clone(), r, p],
        };
        tuples.push(forced);
    }
    record_oracle(&mut tally, "phi_bw", fol::oracle_agree(&phi, &bw, tuples)?);

    for _ in 0..cfg.samples {
        let rng = sampler.rng();
        let a = match rng.gen_range(0..4) {
            0 => Scalar::zero(),
            1 => Scalar::one(),
            _ => small_rational(rng),
        };
        let inside = !a.is_negative() && !Scalar::one().sub(&a)?.is_negative();
        let val: Valuation = [(1, a.clone())].into_iter().collect();
        let by_formula = fol::evaluate(&square_trick, &val)?;
        tally.check(
            by_formula == inside,
            "square_trick",
            || format!("a={a}"),
            inside,
            by_formula,
        );
    }
    Ok(tally)
}

fn galst_7_1(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let gal_lambda = Geometry::gal_st().extended("galst+lambda", cfg.lambda);
    let lclass = Geometry::lclass_st().with_replaced(cfg.lambda);
    let simul = Relation::simul();
    let cong_s = Relation::cong_s();
    for i in 0..cfg.samples as u64 {
        let rng = &mut stream(cfg.seed, "galst-7.1", i);
        let mut sampler = TupleSampler::new(stream(cfg.seed, "galst-7.1/tuples", i));
        lambda_nonvacuous(&mut tally, &cfg.lambda, &mut sampler)?;

        // Aut(LClassST) ⊆ Aut(GalST + λ)
        let class = if i % 2 == 0 {
            TransformClass::Trivial
        } else {
            TransformClass::ScalTriv
        };
        let f = generate_with(class, rng)?;
        respects_geometry(&mut tally, &f, &gal_lambda, &mut sampler)?;

        // S is recovered from ≡S: S(p, q) ⇔ ≡S(p, q, p, q)
        let pair = sampler.sample(&simul)?;
        let quad = [
            pair[0].clone(),
            pair[1].clone(),
            pair[0].clone(),
            pair[1].clone(),
        ];
        let (s, cs) = (simul.holds(&pair)?, cong_s.holds(&quad)?);
        tally.check(s == cs, "simul_from_congS", || points(&pair), s, cs);

        // Aut(GalST + λ) ⊆ Aut(LClassST), on candidates from Scal∘Poi
        let g = generate_with(TransformClass::ScalPoi, rng)?;
        let verdict = check_respects(&g, &gal_lambda, &mut sampler, RESPECT_TUPLES)?;
        if verdict.is_pass() {
            tally.checks_run += 1;
            respects_geometry(&mut tally, &g, &lclass, &mut sampler)?;
        }
    }

    // a boost respects λ but not ≡S
    let rng = &mut stream(cfg.seed, "galst-7.1/boost", 0);
    let b = generate_with(TransformClass::Boost, rng)?;
    let pair = s_breaking_pair(&b, rng)?;
    let quad = [
        pair[0].clone(),
        pair[1].clone(),
        pair[0].clone(),
        pair[1].clone(),
    ];
    let image = b.apply_all(&quad)?;
    let broken = cong_s.holds(&quad)? && !cong_s.holds(&image)?;
    tally.expect(broken, "boost.violates_congS", || one_line(&b));
    if broken {
        tally.witness(
            "boost.violates_congS",
            format!("map {}; tuple {}", one_line(&b), points(&quad)),
            "boost is outside Aut(GalST + lambda)",
        );
    }
    Ok(tally)
}

fn conjecture_chain(cfg: &SuiteConfig) -> Result<Tally> {
    let mut tally = Tally::new();
    let simul_geometry = Geometry::new("simul", vec![Relation::simul()]);
    let mut s_exact = 0u64;
    for i in 0..cfg.samples as u64 {
        let rng = &mut stream(cfg.seed, "conjecture-chain", i);
        let class = if i % 2 == 0 {
            TransformClass::ScalPoi
        } else {
            TransformClass::ScalTriv
        };
        let f = generate_with(class, rng)?;
        let r = classify(&f)?;
        if r.has(Flag::RespectsSExact) && r.has(Flag::InScalPoi) {
            s_exact += 1;
            tally.expect(
                r.has(Flag::InScalTriv),
                "chain.s_exact_scal_poi_in_scal_triv",
                || one_line(&f),
            );
            let mut sampler = TupleSampler::new(stream(cfg.seed, "conjecture-chain/tuples", i));
            respects_geometry(&mut tally, &f, &simul_geometry, &mut sampler)?;
        }
        if r.has(Flag::InScalTriv) {
            tally.expect(
                r.has(Flag::RespectsSExact),
                "chain.scal_triv_respects_s",
                || one_line(&f),
            );
        }
    }
    tally.expect(s_exact > 0, "chain.nonvacuous", || {
        format!("{} samples", cfg.samples)
    });

    // the boost is in Aut(RelST) but not in Aut(⟨RelST, S⟩) ⊇ Aut(LClassST)
    let rng = &mut stream(cfg.seed, "conjecture-chain/boost", 0);
    let b = generate_with(TransformClass::Boost, rng)?;
    let r = classify(&b)?;
    let mut sampler = TupleSampler::new(stream(cfg.seed, "conjecture-chain/boost-tuples", 0));
    respects_geometry(
        &mut tally,
        &b,
        &Geometry::rel_st().with_replaced(cfg.lambda),
        &mut sampler,
    )?;
    let pair = s_breaking_pair(&b, rng)?;
    let image = b.apply_all(&pair)?;
    let breaks_s = Relation::simul().holds(&pair)? && !Relation::simul().holds(&image)?;
    let strict = r.has(Flag::InScalPoi) && !r.has(Flag::RespectsSExact) && breaks_s;
    tally.expect(strict, "chain.boost_separates_relst", || one_line(&b));
    tally.expect(
        !r.has(Flag::InScalTriv),
        "chain.boost_outside_scal_triv",
        || one_line(&b),
    );
    if strict {
        tally.witness(
            "chain.boost_separates_relst",
            format!("map {}; pair {}", one_line(&b), points(&pair)),
            "in Scal∘Poi = Aut(RelST) but moves a simultaneous pair off simultaneity",
        );
    }
    if !r.has(Flag::InScalTriv) {
        tally.witness(
            "chain.boost_outside_scal_triv",
            one_line(&b),
            "in Aut(RelST) but not in Scal∘Triv = Aut(LClassST)",
        );
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite(&SuiteConfig::new("nope")),
            Err(Error::UnknownSuite("nope".into()))
        );
        assert!(matches!(
            run(&SuiteConfig::new("all").samples(0)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn names_are_unique() {
        let mut names = suite_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn flipped_lambda_differs() {
        let pair = [Point4::origin(), Point4::ints(1, 1, 0, 0)];
        assert!(Relation::lambda().holds(&pair).unwrap());
        assert!(!flipped_lambda().holds(&pair).unwrap());
    }

    #[test]
    fn small_runs_pass() {
        for s in SUITES.iter().filter(|s| s.name != "prop-2.1") {
            let r = run_suite(&SuiteConfig::new(s.name).samples(4).seed(9)).unwrap();
            assert!(r.passed, "{}", r.to_text());
            assert!(r.checks_run > 0);
        }
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = SuiteConfig::new("eq-new2").samples(5).seed(3);
        let a = run_suite(&cfg).unwrap().without_timing();
        let b = run_suite(&cfg).unwrap().without_timing();
        assert_eq!(a.to_json(), b.to_json());
    }
}
