//! Exact evaluators for the spacetime relations, the closed-under and
//! respects checks, and geometries as named bundles of relations.
//!
//! Sampling-based checks ([`check_respects`]) are necessary conditions only:
//! a pass on finitely many tuples is evidence, never a proof that a map is
//! an automorphism. Exact membership lives in [`crate::groups`].

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{sq_euclidean_length, AffineMap, Point4};
use crate::sampling::{
    nonzero_rational, orthogonal_on, pythagorean_quadruple, random_point, small_rational, SampleRng,
};
use crate::scalar::{Scalar, Sign};

/// Exact predicate on a tuple whose length already matches the arity.
pub type Evaluator = fn(&[Point4]) -> Result<bool>;

/// A named relation on spacetime points.
#[derive(Clone, Copy)]
pub struct Relation {
    name: &'static str,
    arity: usize,
    eval: Evaluator,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({}/{})", self.name, self.arity)
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.arity == other.arity
            && std::ptr::fn_addr_eq(self.eval, other.eval)
    }
}

/// CLI identifiers of the built-in relations.
pub const RELATION_NAMES: [&str; 8] = [
    "lambda", "simul", "col", "bw", "cong", "rest", "congS", "congT",
];

impl Relation {
    pub const fn new(name: &'static str, arity: usize, eval: Evaluator) -> Self {
        Relation { name, arity, eval }
    }

    /// Lightlike relatedness: `(t−t')² = (x−x')² + (y−y')² + (z−z')²`.
    pub const fn lambda() -> Self {
        Relation::new("lambda", 2, eval_lambda)
    }

    /// Absolute simultaneity: equal time components.
    pub const fn simul() -> Self {
        Relation::new("simul", 2, eval_simul)
    }

    /// Collinearity: `q = p + a(r − p)` for some real `a`, or `r = p`.
    pub const fn col() -> Self {
        Relation::new("col", 3, eval_col)
    }

    /// Betweenness: `q = p + a(r − p)` for some `a ∈ [0, 1]`.
    pub const fn bw() -> Self {
        Relation::new("bw", 3, eval_bw)
    }

    /// Euclidean congruence of the pairs `(p, q)` and `(r, s)`.
    pub const fn cong() -> Self {
        Relation::new("cong", 4, eval_cong)
    }

    /// Equal spatial components.
    pub const fn rest() -> Self {
        Relation::new("rest", 2, eval_rest)
    }

    /// Spatial congruence: both pairs simultaneous and Euclidean-congruent.
    pub const fn cong_s() -> Self {
        Relation::new("congS", 4, eval_cong_s)
    }

    /// Temporal congruence: `p_t − q_t = r_t − s_t`.
    pub const fn cong_t() -> Self {
        Relation::new("congT", 4, eval_cong_t)
    }

    pub fn by_name(name: &str) -> Result<Relation> {
        Ok(match name {
            "lambda" => Relation::lambda(),
            "simul" => Relation::simul(),
            "col" => Relation::col(),
            "bw" => Relation::bw(),
            "cong" => Relation::cong(),
            "rest" => Relation::rest(),
            "congS" => Relation::cong_s(),
            "congT" => Relation::cong_t(),
            _ => return Err(Error::UnknownRelation(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn check_arity(&self, tuple: &[Point4]) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::ArityMismatch {
                relation: self.name.to_string(),
                expected: self.arity,
                actual: tuple.len(),
            });
        }
        Ok(())
    }

    pub fn holds(&self, tuple: &[Point4]) -> Result<bool> {
        self.check_arity(tuple)?;
        (self.eval)(tuple)
    }
}

fn eval_lambda(t: &[Point4]) -> Result<bool> {
    let d = t[0].sub(&t[1])?;
    let spatial = d
        .spatial()
        .iter()
        .try_fold(Scalar::zero(), |acc, c| acc.add(&c.square()))?;
    Ok(d.t().square() == spatial)
}

fn eval_simul(t: &[Point4]) -> Result<bool> {
    Ok(t[0].t() == t[1].t())
}

/// The unique `a` with `q − p = a(r − p)`, if any; `r ≠ p` is required.
fn line_parameter(p: &Point4, q: &Point4, r: &Point4) -> Result<Option<Scalar>> {
    let dir = r.sub(p)?;
    let off = q.sub(p)?;
    let k = dir
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("r ≠ p");
    let a = off.coords()[k].div(&dir.coords()[k])?;
    for (o, d) in off.coords().iter().zip(dir.coords()) {
        if *o != a.mul(d)? {
            return Ok(None);
        }
    }
    Ok(Some(a))
}

fn eval_col(t: &[Point4]) -> Result<bool> {
    let (p, q, r) = (&t[0], &t[1], &t[2]);
    if r == p {
        return Ok(true);
    }
    Ok(line_parameter(p, q, r)?.is_some())
}

fn eval_bw(t: &[Point4]) -> Result<bool> {
    let (p, q, r) = (&t[0], &t[1], &t[2]);
    if r == p {
        return Ok(q == p);
    }
    Ok(match line_parameter(p, q, r)? {
        None => false,
        Some(a) => a.sign() != Sign::Negative && Scalar::one().sub(&a)?.sign() != Sign::Negative,
    })
}

fn eval_cong(t: &[Point4]) -> Result<bool> {
    Ok(sq_euclidean_length(&t[0].sub(&t[1])?)? == sq_euclidean_length(&t[2].sub(&t[3])?)?)
}

fn eval_rest(t: &[Point4]) -> Result<bool> {
    Ok(t[0].spatial() == t[1].spatial())
}

fn eval_cong_s(t: &[Point4]) -> Result<bool> {
    Ok(eval_simul(&t[0..2])? && eval_simul(&t[2..4])? && eval_cong(t)?)
}

fn eval_cong_t(t: &[Point4]) -> Result<bool> {
    Ok(t[0].t().sub(t[1].t())? == t[2].t().sub(t[3].t())?)
}

pub fn holds(r: &Relation, tuple: &[Point4]) -> Result<bool> {
    r.holds(tuple)
}

/// `R(tuple) ⇒ R(f(tuple))`.
pub fn closed_under(f: &AffineMap, r: &Relation, tuple: &[Point4]) -> Result<bool> {
    r.check_arity(tuple)?;
    if !r.holds(tuple)? {
        return Ok(true);
    }
    r.holds(&f.apply_all(tuple)?)
}

/// `R(tuple) ⇔ R(f(tuple))`.
pub fn respects(f: &AffineMap, r: &Relation, tuple: &[Point4]) -> Result<bool> {
    r.check_arity(tuple)?;
    Ok(r.holds(tuple)? == r.holds(&f.apply_all(tuple)?)?)
}

/// A named list of relations over `R⁴`.
#[derive(Debug, Clone, PartialEq)]
pub struct Geometry {
    pub name: String,
    pub relations: Vec<Relation>,
}

/// CLI identifiers of the built-in geometries.
pub const GEOMETRY_NAMES: [&str; 6] = ["relst", "lclassst", "rel", "eucl", "galst", "galst-lambda"];

impl Geometry {
    pub fn new(name: impl Into<String>, relations: Vec<Relation>) -> Self {
        Geometry {
            name: name.into(),
            relations,
        }
    }

    /// Relativistic spacetime `⟨R⁴, λ⟩`.
    pub fn rel_st() -> Self {
        Geometry::new("relst", vec![Relation::lambda()])
    }

    /// Late classical spacetime `⟨R⁴, S, λ⟩`.
    pub fn lclass_st() -> Self {
        Geometry::new("lclassst", vec![Relation::simul(), Relation::lambda()])
    }

    pub fn rel() -> Self {
        Geometry::new("rel", vec![Relation::lambda(), Relation::bw()])
    }

    pub fn eucl() -> Self {
        Geometry::new("eucl", vec![Relation::cong(), Relation::bw()])
    }

    /// Galilean spacetime `⟨R⁴, ≡S, ≡T, Col⟩`.
    pub fn gal_st() -> Self {
        Geometry::new(
            "galst",
            vec![Relation::cong_s(), Relation::cong_t(), Relation::col()],
        )
    }

    pub fn gal_st_lambda() -> Self {
        Geometry::gal_st().extended("galst-lambda", Relation::lambda())
    }

    pub fn by_name(name: &str) -> Result<Geometry> {
        Ok(match name {
            "relst" => Geometry::rel_st(),
            "lclassst" => Geometry::lclass_st(),
            "rel" => Geometry::rel(),
            "eucl" => Geometry::eucl(),
            "galst" => Geometry::gal_st(),
            "galst-lambda" => Geometry::gal_st_lambda(),
            _ => return Err(Error::UnknownGeometry(name.to_string())),
        })
    }

    /// The expansion `⟨self, r⟩`.
    pub fn extended(&self, name: impl Into<String>, r: Relation) -> Geometry {
        let mut relations = self.relations.clone();
        relations.push(r);
        Geometry::new(name, relations)
    }

    /// Swaps in `r` for every relation carrying the same name.
    pub fn with_replaced(&self, r: Relation) -> Geometry {
        let relations = self
            .relations
            .iter()
            .map(|old| if old.name == r.name { r } else { *old })
            .collect();
        Geometry::new(self.name.clone(), relations)
    }
}

/// Produces tuples for sampling checks. Half of the draws are built to
/// satisfy the requested relation so that the `⇒` half of a respects check
/// is actually exercised; the other half are uniform small rationals.
pub struct TupleSampler {
    rng: SampleRng,
}

impl TupleSampler {
    pub fn new(rng: SampleRng) -> Self {
        TupleSampler { rng }
    }

    pub fn rng(&mut self) -> &mut SampleRng {
        &mut self.rng
    }

    pub fn random(&mut self, arity: usize) -> Vec<Point4> {
        (0..arity).map(|_| random_point(&mut self.rng)).collect()
    }

    pub fn sample(&mut self, r: &Relation) -> Result<Vec<Point4>> {
        if self.rng.gen_bool(0.5) {
            self.positive(r)
        } else {
            Ok(self.random(r.arity))
        }
    }

    /// A tuple constructed to satisfy the built-in relation named like `r`.
    /// Unknown names fall back to random tuples.
    pub fn positive(&mut self, r: &Relation) -> Result<Vec<Point4>> {
        match r.name {
            "lambda" => self.lightlike_pair(),
            "simul" => self.simultaneous_pair(),
            "col" => self.collinear_triple(false),
            "bw" => self.collinear_triple(true),
            "cong" => self.congruent_pairs(),
            "rest" => self.rest_pair(),
            "congS" => self.spatially_congruent_pairs(),
            "congT" => self.temporally_congruent_pairs(),
            _ => Ok(self.random(r.arity)),
        }
    }

    /// `p` and `p + k(d; a, b, c)` with `a² + b² + c² = d²`, the spatial part
    /// signed and permuted at random.
    pub fn lightlike_pair(&mut self) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        if self.rng.gen_ratio(1, 20) {
            return Ok(vec![p.clone(), p]);
        }
        let (d, spatial) = pythagorean_quadruple(&mut self.rng);
        let k = nonzero_rational(&mut self.rng);
        let mut spatial = spatial.map(|c| if self.rng.gen_bool(0.5) { c } else { -c });
        spatial.shuffle(&mut self.rng);
        let offset = Point4::new(
            d.into(),
            spatial[0].into(),
            spatial[1].into(),
            spatial[2].into(),
        )
        .scale(&k)?;
        let q = p.add(&offset)?;
        Ok(if self.rng.gen_bool(0.5) {
            vec![p, q]
        } else {
            vec![q, p]
        })
    }

    pub fn simultaneous_pair(&mut self) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        let mut q = random_point(&mut self.rng).coords().clone();
        q[0] = p.t().clone();
        Ok(vec![p, Point4::from_coords(q)])
    }

    fn collinear_triple(&mut self, between: bool) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        if self.rng.gen_ratio(1, 8) {
            let q = if between {
                p.clone()
            } else {
                random_point(&mut self.rng)
            };
            return Ok(vec![p.clone(), q, p]);
        }
        let r = random_point(&mut self.rng);
        let a = if between {
            match self.rng.gen_range(0..4) {
                0 => Scalar::zero(),
                1 => Scalar::one(),
                _ => {
                    let d = self.rng.gen_range(1..=8);
                    Scalar::ratio(self.rng.gen_range(0..=d), d)
                }
            }
        } else {
            small_rational(&mut self.rng)
        };
        let q = p.add(&r.sub(&p)?.scale(&a)?)?;
        Ok(vec![p, q, r])
    }

    /// `(p, q)` and its image under a random Euclidean isometry of `R⁴`.
    pub fn congruent_pairs(&mut self) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        let q = random_point(&mut self.rng);
        let iso = AffineMap::new(
            orthogonal_on(&mut self.rng, &[0, 1, 2, 3]),
            random_point(&mut self.rng),
        );
        Ok(vec![iso.apply(&p)?, iso.apply(&q)?, p, q])
    }

    pub fn rest_pair(&mut self) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        let mut q = p.coords().clone();
        q[0] = small_rational(&mut self.rng);
        Ok(vec![p, Point4::from_coords(q)])
    }

    /// A simultaneous pair and a spatially rotated, translated copy.
    pub fn spatially_congruent_pairs(&mut self) -> Result<Vec<Point4>> {
        let pair = self.simultaneous_pair()?;
        let iso = AffineMap::new(
            orthogonal_on(&mut self.rng, &[1, 2, 3]),
            random_point(&mut self.rng),
        );
        let image = iso.apply_all(&pair)?;
        Ok(vec![
            pair[0].clone(),
            pair[1].clone(),
            image[0].clone(),
            image[1].clone(),
        ])
    }

    pub fn temporally_congruent_pairs(&mut self) -> Result<Vec<Point4>> {
        let p = random_point(&mut self.rng);
        let q = random_point(&mut self.rng);
        let r = random_point(&mut self.rng);
        let mut s = random_point(&mut self.rng).coords().clone();
        s[0] = r.t().sub(&p.t().sub(q.t())?)?;
        Ok(vec![p, q, r, Point4::from_coords(s)])
    }
}

/// Outcome of [`check_respects`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RespectVerdict {
    Pass {
        checks: usize,
    },
    Counterexample {
        relation: String,
        tuple: Vec<String>,
        image: Vec<String>,
        holds_before: bool,
    },
}

impl RespectVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, RespectVerdict::Pass { .. })
    }
}

/// Checks `respects(f, R, ·)` on `n` sampled tuples for every relation of
/// `geometry`, stopping at the first counterexample.
pub fn check_respects(
    f: &AffineMap,
    geometry: &Geometry,
    sampler: &mut TupleSampler,
    n: usize,
) -> Result<RespectVerdict> {
    let mut checks = 0;
    for r in &geometry.relations {
        for _ in 0..n {
            let tuple = sampler.sample(r)?;
            checks += 1;
            let before = r.holds(&tuple)?;
            let image = f.apply_all(&tuple)?;
            if before != r.holds(&image)? {
                return Ok(RespectVerdict::Counterexample {
                    relation: r.name.to_string(),
                    tuple: tuple.iter().map(Point4::to_string).collect(),
                    image: image.iter().map(Point4::to_string).collect(),
                    holds_before: before,
                });
            }
        }
    }
    Ok(RespectVerdict::Pass { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat4;
    use crate::sampling::stream;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    // boost along x with v = 3/5, γ = 5/4
    fn boost() -> AffineMap {
        let m = [[5, -3, 0, 0], [-3, 5, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]];
        AffineMap::linear(Mat4::from_fn(|i, j| q(m[i][j], 4)))
    }

    fn sampler(tag: &str) -> TupleSampler {
        TupleSampler::new(stream(0, tag, 0))
    }

    #[test]
    fn holds_examples() {
        let o = Point4::origin();
        assert!(Relation::lambda()
            .holds(&[o.clone(), Point4::ints(1, 1, 0, 0)])
            .unwrap());
        assert!(Relation::simul()
            .holds(&[o.clone(), Point4::ints(0, 1, 0, 0)])
            .unwrap());
        let moved = Point4::new(q(-3, 4), q(5, 4), 0.into(), 0.into());
        assert!(!Relation::simul().holds(&[o.clone(), moved]).unwrap());
        assert!(!Relation::col()
            .holds(&[
                o.clone(),
                Point4::ints(1, 0, 0, 0),
                Point4::ints(0, 1, 0, 0)
            ])
            .unwrap());
        assert!(Relation::bw()
            .holds(&[
                o.clone(),
                Point4::ints(1, 1, 1, 1),
                Point4::ints(2, 2, 2, 2)
            ])
            .unwrap());
        assert!(!Relation::bw()
            .holds(&[o, Point4::ints(3, 3, 3, 3), Point4::ints(2, 2, 2, 2)])
            .unwrap());
    }

    #[test]
    fn degenerate_collinearity_and_betweenness() {
        let p = Point4::ints(1, 2, 3, 4);
        let q = Point4::ints(0, 5, 0, 5);
        assert!(Relation::col()
            .holds(&[p.clone(), q.clone(), p.clone()])
            .unwrap());
        assert!(!Relation::bw().holds(&[p.clone(), q, p.clone()]).unwrap());
        assert!(Relation::bw().holds(&[p.clone(), p.clone(), p]).unwrap());
    }

    #[test]
    fn arity_is_enforced() {
        let err = Relation::col().holds(&[Point4::origin()]).unwrap_err();
        assert_eq!(
            err,
            Error::ArityMismatch {
                relation: "col".into(),
                expected: 3,
                actual: 1
            }
        );
        assert!(respects(&AffineMap::identity(), &Relation::lambda(), &[]).is_err());
        assert!(closed_under(&AffineMap::identity(), &Relation::cong(), &[]).is_err());
    }

    #[test]
    fn closed_under_examples() {
        let pair = [Point4::origin(), Point4::ints(1, 1, 0, 0)];
        assert!(closed_under(&AffineMap::identity(), &Relation::lambda(), &pair).unwrap());
        assert!(closed_under(&boost(), &Relation::lambda(), &pair).unwrap());
        assert_eq!(
            boost().apply(&pair[1]).unwrap(),
            Point4::new(q(1, 2), q(1, 2), 0.into(), 0.into())
        );
        let s_pair = [Point4::origin(), Point4::ints(0, 1, 0, 0)];
        assert!(!closed_under(&boost(), &Relation::simul(), &s_pair).unwrap());
    }

    #[test]
    fn respects_examples() {
        let triple = [
            Point4::origin(),
            Point4::ints(1, 2, 0, 0),
            Point4::ints(5, 1, 1, 1),
        ];
        assert!(respects(&AffineMap::identity(), &Relation::col(), &triple).unwrap());
        let quad = [
            Point4::origin(),
            Point4::ints(1, 0, 0, 0),
            Point4::origin(),
            Point4::ints(0, 1, 0, 0),
        ];
        assert!(respects(&AffineMap::scaling(2.into()), &Relation::cong(), &quad).unwrap());
        let s_pair = [Point4::origin(), Point4::ints(0, 1, 0, 0)];
        assert!(!respects(&boost(), &Relation::simul(), &s_pair).unwrap());
    }

    #[test]
    fn check_respects_examples() {
        let id = AffineMap::identity();
        let v = check_respects(&id, &Geometry::lclass_st(), &mut sampler("id"), 100).unwrap();
        assert_eq!(v, RespectVerdict::Pass { checks: 200 });
        let v = check_respects(&boost(), &Geometry::rel_st(), &mut sampler("b"), 1000).unwrap();
        assert!(v.is_pass());
        let v = check_respects(&boost(), &Geometry::lclass_st(), &mut sampler("b"), 1000).unwrap();
        match v {
            RespectVerdict::Counterexample { relation, .. } => assert_eq!(relation, "simul"),
            other => panic!("expected a counterexample, got {other:?}"),
        }
    }

    #[test]
    fn built_in_geometries() {
        let names = |g: Geometry| g.relations.iter().map(|r| r.name()).collect::<Vec<_>>();
        assert_eq!(names(Geometry::rel_st()), ["lambda"]);
        assert_eq!(names(Geometry::lclass_st()), ["simul", "lambda"]);
        assert_eq!(names(Geometry::rel()), ["lambda", "bw"]);
        assert_eq!(names(Geometry::eucl()), ["cong", "bw"]);
        assert_eq!(names(Geometry::gal_st()), ["congS", "congT", "col"]);
        assert_eq!(
            names(Geometry::gal_st_lambda()),
            ["congS", "congT", "col", "lambda"]
        );
        for name in GEOMETRY_NAMES {
            assert_eq!(Geometry::by_name(name).unwrap().name, name);
        }
        for name in RELATION_NAMES {
            assert_eq!(Relation::by_name(name).unwrap().name(), name);
        }
        let arities: Vec<usize> = RELATION_NAMES
            .iter()
            .map(|n| Relation::by_name(n).unwrap().arity())
            .collect();
        assert_eq!(arities, [2, 2, 3, 3, 4, 2, 4, 4]);
        assert!(Geometry::by_name("minkowski").is_err());
    }

    #[test]
    fn constructed_positives_hold() {
        let mut s = sampler("positives");
        for name in RELATION_NAMES {
            let r = Relation::by_name(name).unwrap();
            for _ in 0..200 {
                let t = s.positive(&r).unwrap();
                assert!(r.holds(&t).unwrap(), "{name} positive failed: {t:?}");
            }
        }
    }

    fn arb_point() -> impl Strategy<Value = Point4> {
        proptest::array::uniform4((-4i64..5, 1i64..3).prop_map(|(n, d)| q(n, d)))
            .prop_map(Point4::from_coords)
    }

    proptest! {
        #[test]
        fn respects_splits_into_closure_both_ways(
            seed in any::<u64>(),
            m in proptest::array::uniform16(-3i64..4),
            shift in arb_point(),
        ) {
            let f = AffineMap::new(Mat4::from_fn(|i, j| m[4 * i + j].into()), shift);
            prop_assume!(f.is_bijective()?);
            let inv = f.inverse()?;
            let mut s = TupleSampler::new(stream(seed, "split", 0));
            for name in RELATION_NAMES {
                let r = Relation::by_name(name)?;
                let t = s.sample(&r)?;
                let image = f.apply_all(&t)?;
                prop_assert_eq!(
                    respects(&f, &r, &t)?,
                    closed_under(&f, &r, &t)? && closed_under(&inv, &r, &image)?
                );
            }
        }

        #[test]
        fn col_quirk_and_bw_implies_col(p in arb_point(), qq in arb_point(), r in arb_point()) {
            prop_assert!(Relation::col().holds(&[p.clone(), qq.clone(), p.clone()])?);
            let t = [p, qq, r];
            if Relation::bw().holds(&t)? {
                prop_assert!(Relation::col().holds(&t)?);
            }
            prop_assert_eq!(Relation::col().holds(&t)?, Relation::col().holds(&t)?);
        }

        #[test]
        fn spatial_congruence_decomposes(seed in any::<u64>()) {
            let mut s = TupleSampler::new(stream(seed, "congS", 0));
            let t = if seed % 2 == 0 {
                s.spatially_congruent_pairs()?
            } else {
                s.random(4)
            };
            let expected = Relation::simul().holds(&t[0..2])?
                && Relation::simul().holds(&t[2..4])?
                && Relation::cong().holds(&t)?;
            prop_assert_eq!(Relation::cong_s().holds(&t)?, expected);
        }
    }
}
