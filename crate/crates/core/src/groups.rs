//! Exact membership tests for the spacetime transformation classes, the
//! constructive decompositions, and seeded generators for each class.
//!
//! All criteria act on the linear part `M` of `p ↦ M·p + t`, with
//! `η = diag(1, −1, −1, −1)` and `e = (1, 0, 0, 0)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{AffineMap, Mat4};
use crate::sampling::{
    nonzero_rational, orthogonal_on, random_point, spatial_unit_vector, stream, SampleRng,
};
use crate::scalar::Scalar;
use crate::verdict::Tally;

/// Membership flags reported by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Linear,
    Translation,
    Lorentz,
    Poincare,
    EuclideanIsometry,
    Trivial,
    Scaling,
    Orthochronous,
    InPoiUp,
    InTrivUp,
    InScalPoi,
    InScalTriv,
    RespectsSExact,
}

impl Flag {
    pub const ALL: [Flag; 13] = [
        Flag::Linear,
        Flag::Translation,
        Flag::Lorentz,
        Flag::Poincare,
        Flag::EuclideanIsometry,
        Flag::Trivial,
        Flag::Scaling,
        Flag::Orthochronous,
        Flag::InPoiUp,
        Flag::InTrivUp,
        Flag::InScalPoi,
        Flag::InScalTriv,
        Flag::RespectsSExact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Linear => "linear",
            Flag::Translation => "translation",
            Flag::Lorentz => "lorentz",
            Flag::Poincare => "poincare",
            Flag::EuclideanIsometry => "euclidean_isometry",
            Flag::Trivial => "trivial",
            Flag::Scaling => "scaling",
            Flag::Orthochronous => "orthochronous",
            Flag::InPoiUp => "in_poi_up",
            Flag::InTrivUp => "in_triv_up",
            Flag::InScalPoi => "in_scal_poi",
            Flag::InScalTriv => "in_scal_triv",
            Flag::RespectsSExact => "respects_S_exact",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub flags: BTreeSet<Flag>,
    /// Positive `a` with `M = a·Λ`, `Λ` Lorentz. `None` when the map is not
    /// in Scal∘Poi or when `a` leaves the representable field.
    pub scal_poi_factor: Option<Scalar>,
    /// `|s|` with `M·e = s·e`, `MᵀM = s²I`.
    pub scal_triv_factor: Option<Scalar>,
}

impl ClassificationReport {
    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    /// Implications every report must satisfy. Returns the violated ones.
    pub fn lattice_violations(&self) -> Vec<&'static str> {
        let rules: [(&'static str, bool); 7] = [
            (
                "trivial => euclidean_isometry",
                !self.has(Flag::Trivial) || self.has(Flag::EuclideanIsometry),
            ),
            (
                "in_triv_up => trivial & orthochronous",
                !self.has(Flag::InTrivUp)
                    || (self.has(Flag::Trivial) && self.has(Flag::Orthochronous)),
            ),
            (
                "in_poi_up => poincare",
                !self.has(Flag::InPoiUp) || self.has(Flag::Poincare),
            ),
            (
                "poincare => in_scal_poi",
                !self.has(Flag::Poincare) || self.has(Flag::InScalPoi),
            ),
            (
                "trivial => in_scal_triv",
                !self.has(Flag::Trivial) || self.has(Flag::InScalTriv),
            ),
            (
                "lorentz => poincare & linear",
                !self.has(Flag::Lorentz) || (self.has(Flag::Poincare) && self.has(Flag::Linear)),
            ),
            (
                "scaling => in_scal_triv",
                !self.has(Flag::Scaling) || self.has(Flag::InScalTriv),
            ),
        ];
        rules
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .collect()
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for flag in Flag::ALL {
            let mark = if self.has(flag) { "yes" } else { "no" };
            writeln!(f, "{:<20}{mark}", flag.name())?;
        }
        let show = |x: &Option<Scalar>| x.as_ref().map_or("-".to_string(), Scalar::to_string);
        writeln!(
            f,
            "{:<20}{}",
            "scal_poi_factor",
            show(&self.scal_poi_factor)
        )?;
        write!(
            f,
            "{:<20}{}",
            "scal_triv_factor",
            show(&self.scal_triv_factor)
        )
    }
}

/// `MᵀηM`.
fn minkowski_gram(m: &Mat4) -> Result<Mat4> {
    m.transpose().mul(&Mat4::minkowski())?.mul(m)
}

/// `MᵀM`.
fn euclidean_gram(m: &Mat4) -> Result<Mat4> {
    m.transpose().mul(m)
}

/// `Some(s)` when `M·e = s·e`.
fn time_axis_eigenvalue(m: &Mat4) -> Option<&Scalar> {
    (1..4).all(|i| m.get(i, 0).is_zero()).then(|| m.get(0, 0))
}

pub fn classify(a: &AffineMap) -> Result<ClassificationReport> {
    if !a.is_bijective()? {
        return Err(Error::SingularMap);
    }
    let m = &a.linear;
    let mut flags = BTreeSet::new();
    let mut set = |flag, on: bool| {
        if on {
            flags.insert(flag);
        }
    };
    let linear = a.is_linear();
    set(Flag::Linear, linear);
    set(Flag::Translation, m.is_identity());

    let gm = minkowski_gram(m)?;
    let eta = Mat4::minkowski();
    let poincare = gm == eta;
    set(Flag::Poincare, poincare);
    set(Flag::Lorentz, poincare && linear);

    // MᵀηM = cη with c > 0; c is then the (0,0) entry
    let c_poi = gm.get(0, 0).clone();
    let in_scal_poi = c_poi.is_positive() && gm == eta.scale(&c_poi)?;
    set(Flag::InScalPoi, in_scal_poi);
    let scal_poi_factor = if in_scal_poi {
        Scalar::sqrt_scalar(&c_poi).ok()
    } else {
        None
    };

    let ge = euclidean_gram(m)?;
    let isometry = ge.is_identity();
    set(Flag::EuclideanIsometry, isometry);
    let eigen = time_axis_eigenvalue(m);
    let trivial = isometry && eigen.is_some_and(|s| s.is_one() || s.neg().is_one());
    set(Flag::Trivial, trivial);

    // MᵀM = cI forces |M·e|² = c, so M·e = s·e already gives s² = c
    let in_scal_triv = eigen.is_some() && ge.as_scalar_multiple().is_some();
    set(Flag::InScalTriv, in_scal_triv);
    let scal_triv_factor = if in_scal_triv {
        eigen.map(Scalar::abs)
    } else {
        None
    };

    // (M·e)_t is the (0,0) entry
    let ortho = m.get(0, 0).is_positive();
    set(Flag::Orthochronous, ortho);
    set(Flag::InPoiUp, poincare && ortho);
    set(Flag::InTrivUp, trivial && ortho);
    set(Flag::Scaling, linear && m.as_scalar_multiple().is_some());
    set(
        Flag::RespectsSExact,
        !m.get(0, 0).is_zero() && (1..4).all(|j| m.get(0, j).is_zero()),
    );

    Ok(ClassificationReport {
        flags,
        scal_poi_factor,
        scal_triv_factor,
    })
}

/// `A = D ∘ τ′ ∘ T` with `D` the scaling by `|s|` (`M·e = s·e`), `T = M/|s|`
/// trivial and `τ′` the translation by `t/|s|`.
pub fn decompose_scal_triv(a: &AffineMap) -> Result<(AffineMap, AffineMap, AffineMap)> {
    let report = classify(a)?;
    let d = match report.scal_triv_factor {
        Some(d) if report.has(Flag::InScalTriv) => d,
        _ => return Err(Error::NotInScalTriv),
    };
    let inv = d.inv()?;
    let dil = AffineMap::scaling(d);
    let tau = AffineMap::translation(a.translation.scale(&inv)?);
    let t = AffineMap::linear(a.linear.scale(&inv)?);
    Ok((dil, tau, t))
}

/// `A = s ∘ p↑` with `s` a scaling and `p↑` an orthochronous Poincaré map.
/// The scaling factor is `±√c`; the sign is negative exactly when `M/√c`
/// reverses time.
pub fn orthochronous_split(a: &AffineMap) -> Result<(AffineMap, AffineMap)> {
    let report = classify(a)?;
    if !report.has(Flag::InScalPoi) {
        return Err(Error::NotInScalPoi);
    }
    let c = minkowski_gram(&a.linear)?.get(0, 0).clone();
    let mut factor = match report.scal_poi_factor {
        Some(f) => f,
        None => return Err(Error::NotRepresentable(c.to_string())),
    };
    if a.linear.get(0, 0).is_negative() {
        factor = factor.neg();
    }
    let inv = factor.inv()?;
    let p_up = AffineMap::new(a.linear.scale(&inv)?, a.translation.scale(&inv)?);
    Ok((AffineMap::scaling(factor), p_up))
}

/// The orthochronous Poincaré part of `g ∈ Scal∘Poi \ Scal∘Triv`; it lies in
/// Poi↑ but not in Triv↑.
pub fn sandwich_extract(g: &AffineMap) -> Result<AffineMap> {
    let report = classify(g)?;
    if !report.has(Flag::InScalPoi) {
        return Err(Error::NotInScalPoi);
    }
    if report.has(Flag::InScalTriv) {
        return Err(Error::AlreadyInScalTriv);
    }
    let (_, p_up) = orthochronous_split(g)?;
    Ok(p_up)
}

/// Closes `generators` and their inverses under composition, keeping every
/// distinct product of at most `max_len` factors. The identity is included.
pub fn saturate(generators: &[AffineMap], max_len: usize) -> Result<Vec<AffineMap>> {
    let mut letters = generators.to_vec();
    for g in generators {
        letters.push(g.inverse()?);
    }
    let mut seen: HashSet<AffineMap> = HashSet::new();
    let mut all = vec![AffineMap::identity()];
    seen.insert(AffineMap::identity());
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in &letters {
                let p = w.compose(l)?;
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(all)
}

/// Classes accepted by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformClass {
    Rotation,
    Boost,
    Trivial,
    TrivUp,
    Scaling,
    Translation,
    Poincare,
    PoiUp,
    ScalPoi,
    ScalTriv,
}

impl TransformClass {
    pub const ALL: [TransformClass; 10] = [
        TransformClass::Rotation,
        TransformClass::Boost,
        TransformClass::Trivial,
        TransformClass::TrivUp,
        TransformClass::Scaling,
        TransformClass::Translation,
        TransformClass::Poincare,
        TransformClass::PoiUp,
        TransformClass::ScalPoi,
        TransformClass::ScalTriv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformClass::Rotation => "rotation",
            TransformClass::Boost => "boost",
            TransformClass::Trivial => "trivial",
            TransformClass::TrivUp => "triv_up",
            TransformClass::Scaling => "scaling",
            TransformClass::Translation => "translation",
            TransformClass::Poincare => "poincare",
            TransformClass::PoiUp => "poi_up",
            TransformClass::ScalPoi => "scal_poi",
            TransformClass::ScalTriv => "scal_triv",
        }
    }

    /// Whether `report` places a map in this class.
    pub fn admits(self, report: &ClassificationReport) -> bool {
        match self {
            TransformClass::Rotation => report.has(Flag::InTrivUp) && report.has(Flag::Linear),
            TransformClass::Boost => report.has(Flag::Lorentz) && report.has(Flag::Orthochronous),
            TransformClass::Trivial => report.has(Flag::Trivial),
            TransformClass::TrivUp => report.has(Flag::InTrivUp),
            TransformClass::Scaling => report.has(Flag::Scaling),
            TransformClass::Translation => report.has(Flag::Translation),
            TransformClass::Poincare => report.has(Flag::Poincare),
            TransformClass::PoiUp => report.has(Flag::InPoiUp),
            TransformClass::ScalPoi => report.has(Flag::InScalPoi),
            TransformClass::ScalTriv => report.has(Flag::InScalTriv),
        }
    }
}

impl fmt::Display for TransformClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TransformClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Boost with speed `v = (m²−n²)/(m²+n²)` along the spatial unit vector
/// `axis`: `γ = (m²+n²)/(2mn)`, `γv = (m²−n²)/(2mn)`.
pub fn pythagorean_boost(m: i64, n: i64, axis: &[Scalar; 3]) -> Result<AffineMap> {
    assert!(m > 0 && n > 0, "boost parameters must be positive");
    let gamma = Scalar::ratio(m * m + n * n, 2 * m * n);
    let gamma_v = Scalar::ratio(m * m - n * n, 2 * m * n);
    let gamma_1 = gamma.sub(&Scalar::one())?;
    let lin = Mat4::try_from_fn(|i, j| match (i, j) {
        (0, 0) => Ok(gamma.clone()),
        (0, k) | (k, 0) => Ok(gamma_v.mul(&axis[k - 1])?.neg()),
        (i, j) => {
            let delta = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            delta.add(&gamma_1.mul(&axis[i - 1].mul(&axis[j - 1])?)?)
        }
    })?;
    Ok(AffineMap::linear(lin))
}

fn time_reflection() -> Mat4 {
    Mat4::diag([Scalar::int(-1), Scalar::one(), Scalar::one(), Scalar::one()])
}

fn spatial_rotation(rng: &mut SampleRng) -> Result<Mat4> {
    let m = orthogonal_on(rng, &[1, 2, 3]);
    Ok(if m.det()?.is_negative() {
        Mat4::diag([Scalar::one(), Scalar::int(-1), Scalar::one(), Scalar::one()]).mul(&m)?
    } else {
        m
    })
}

fn random_boost(rng: &mut SampleRng) -> Result<AffineMap> {
    let (m, n) = loop {
        let m = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=5);
        if m != n {
            break (m, n);
        }
    };
    pythagorean_boost(m, n, &spatial_unit_vector(rng))
}

fn random_trivial(rng: &mut SampleRng, allow_time_reflection: bool) -> Result<AffineMap> {
    let mut lin = orthogonal_on(rng, &[1, 2, 3]);
    if allow_time_reflection && rng.gen_bool(0.5) {
        lin = time_reflection().mul(&lin)?;
    }
    Ok(AffineMap::new(lin, random_point(rng)))
}

fn random_poincare(rng: &mut SampleRng, allow_time_reflection: bool) -> Result<AffineMap> {
    let mut lin = orthogonal_on(rng, &[1, 2, 3]);
    if !rng.gen_ratio(1, 5) {
        lin = random_boost(rng)?.linear.mul(&lin)?;
    }
    if allow_time_reflection && rng.gen_bool(0.5) {
        lin = time_reflection().mul(&lin)?;
    }
    Ok(AffineMap::new(lin, random_point(rng)))
}

/// Draws a member of `class` from `rng` and confirms it with [`classify`].
pub fn generate_with(class: TransformClass, rng: &mut SampleRng) -> Result<AffineMap> {
    let map = match class {
        TransformClass::Rotation => AffineMap::linear(spatial_rotation(rng)?),
        TransformClass::Boost => random_boost(rng)?,
        TransformClass::Trivial => random_trivial(rng, true)?,
        TransformClass::TrivUp => random_trivial(rng, false)?,
        TransformClass::Scaling => AffineMap::scaling(nonzero_rational(rng)),
        TransformClass::Translation => AffineMap::translation(random_point(rng)),
        TransformClass::Poincare => random_poincare(rng, true)?,
        TransformClass::PoiUp => random_poincare(rng, false)?,
        TransformClass::ScalPoi => {
            AffineMap::scaling(nonzero_rational(rng)).compose(&random_poincare(rng, true)?)?
        }
        TransformClass::ScalTriv => {
            AffineMap::scaling(nonzero_rational(rng)).compose(&random_trivial(rng, true)?)?
        }
    };
    assert!(
        class.admits(&classify(&map)?),
        "generator for {class} produced a non-member:\n{map}"
    );
    Ok(map)
}

/// Deterministic member of `class` for `seed`.
pub fn generate(class: TransformClass, seed: u64) -> Result<AffineMap> {
    generate_with(class, &mut stream(seed, class.name(), 0))
}

/// Linear map with `MᵀηM = cη` for `c = m² + n²`, built from a `t–x` block
/// `[[(c+1)/2, (c−1)/2], [(c−1)/2, (c+1)/2]]` and a `y–z` block
/// `[[m, n], [−n, m]]`. With `(m, n) = (1, 1)` this is the `c = 2` example
/// whose normalizing factor is `√2`.
pub fn scaled_lorentz_block(m: i64, n: i64) -> AffineMap {
    let c = m * m + n * n;
    let a = Scalar::ratio(c + 1, 2);
    let b = Scalar::ratio(c - 1, 2);
    let z = Scalar::zero;
    AffineMap::linear(Mat4::from_rows([
        [a.clone(), b.clone(), z(), z()],
        [b, a, z(), z()],
        [z(), z(), Scalar::int(m), Scalar::int(n)],
        [z(), z(), Scalar::int(-n), Scalar::int(m)],
    ]))
}

/// Identities checked by [`verify_group_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupIdentity {
    New1,
    New2,
    ClosureScalTriv,
    ClosureScalPoi,
    TrivSubsetPoi,
}

impl GroupIdentity {
    pub const ALL: [GroupIdentity; 5] = [
        GroupIdentity::New1,
        GroupIdentity::New2,
        GroupIdentity::ClosureScalTriv,
        GroupIdentity::ClosureScalPoi,
        GroupIdentity::TrivSubsetPoi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupIdentity::New1 => "new1",
            GroupIdentity::New2 => "new2",
            GroupIdentity::ClosureScalTriv => "closure_scal_triv",
            GroupIdentity::ClosureScalPoi => "closure_scal_poi",
            GroupIdentity::TrivSubsetPoi => "triv_subset_poi",
        }
    }
}

impl FromStr for GroupIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupIdentity::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown group identity {s:?}")))
    }
}

fn show(maps: &[&AffineMap]) -> String {
    maps.iter()
        .map(|m| m.to_string().replace('\n', "; "))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Checks `A = s ∘ p↑` with `s` a scaling and `p↑ ∈ Poi↑`.
pub fn check_split(tally: &mut Tally, a: &AffineMap) -> Result<()> {
    let (s, p_up) = match orthochronous_split(a) {
        Ok(split) => split,
        Err(e) => {
            tally.check(false, "orthochronous_split", || show(&[a]), "split", e);
            return Ok(());
        }
    };
    let inputs = || show(&[a]);
    tally.expect(
        classify(&s)?.has(Flag::Scaling),
        "orthochronous_split.s_is_scaling",
        inputs,
    );
    tally.expect(
        classify(&p_up)?.has(Flag::InPoiUp),
        "orthochronous_split.p_up_in_poi_up",
        inputs,
    );
    let back = s.compose(&p_up)?;
    tally.check(
        back == *a,
        "orthochronous_split.recompose",
        inputs,
        a.to_string(),
        back.to_string(),
    );
    Ok(())
}

/// Checks `A = D ∘ τ′ ∘ T` with each factor in its class.
pub fn check_decomposition(tally: &mut Tally, a: &AffineMap) -> Result<()> {
    let (d, tau, t) = match decompose_scal_triv(a) {
        Ok(parts) => parts,
        Err(e) => {
            tally.check(
                false,
                "decompose_scal_triv",
                || show(&[a]),
                "decomposition",
                e,
            );
            return Ok(());
        }
    };
    let inputs = || show(&[a]);
    tally.expect(
        classify(&d)?.has(Flag::Scaling),
        "decompose_scal_triv.d_is_scaling",
        inputs,
    );
    tally.expect(
        tau.is_translation(),
        "decompose_scal_triv.tau_is_translation",
        inputs,
    );
    let tr = classify(&t)?;
    tally.expect(
        tr.has(Flag::Trivial) && tr.has(Flag::Linear),
        "decompose_scal_triv.t_is_trivial",
        inputs,
    );
    let back = d.compose(&tau.compose(&t)?)?;
    tally.check(
        back == *a,
        "decompose_scal_triv.recompose",
        inputs,
        a.to_string(),
        back.to_string(),
    );
    Ok(())
}

fn check_closure(
    tally: &mut Tally,
    class: TransformClass,
    f: &AffineMap,
    g: &AffineMap,
) -> Result<()> {
    let name = class.name();
    let fg = f.compose(g)?;
    tally.expect(
        class.admits(&classify(&fg)?),
        &format!("closure_{name}.compose"),
        || show(&[f, g]),
    );
    let fi = f.inverse()?;
    tally.expect(
        class.admits(&classify(&fi)?),
        &format!("closure_{name}.inverse"),
        || show(&[f]),
    );
    Ok(())
}

/// Exact check of one membership identity on `samples` generated maps.
pub fn verify_group_identity(identity: GroupIdentity, samples: usize, seed: u64) -> Result<Tally> {
    if samples == 0 {
        return Err(Error::InvalidConfig("samples must be at least 1".into()));
    }
    let mut tally = Tally::new();
    let tag = format!("identity/{}", identity.name());
    for i in 0..samples as u64 {
        let rng = &mut stream(seed, &tag, i);
        match identity {
            GroupIdentity::New1 => {
                // (Scal∘Triv) ∩ Poi↑ ⊆ Triv↑, over sources where both sides occur
                let source = [
                    TransformClass::ScalTriv,
                    TransformClass::Trivial,
                    TransformClass::PoiUp,
                    TransformClass::TrivUp,
                ][rng.gen_range(0..4)];
                let f = generate_with(source, rng)?;
                let r = classify(&f)?;
                if r.has(Flag::InScalTriv) && r.has(Flag::InPoiUp) {
                    tally.expect(
                        r.has(Flag::InTrivUp),
                        "new1.intersection_in_triv_up",
                        || show(&[&f]),
                    );
                }
                // Triv↑ ⊆ (Scal∘Triv) ∩ Poi↑
                let g = generate_with(TransformClass::TrivUp, rng)?;
                let r = classify(&g)?;
                tally.expect(
                    r.has(Flag::InScalTriv) && r.has(Flag::InPoiUp),
                    "new1.triv_up_in_intersection",
                    || show(&[&g]),
                );
            }
            GroupIdentity::New2 => {
                let f = generate_with(TransformClass::ScalPoi, rng)?;
                check_split(&mut tally, &f)?;
                // Scal∘Poi↑ ⊆ Scal∘Poi
                let g = AffineMap::scaling(nonzero_rational(rng))
                    .compose(&generate_with(TransformClass::PoiUp, rng)?)?;
                tally.expect(
                    classify(&g)?.has(Flag::InScalPoi),
                    "new2.scal_poi_up_in_scal_poi",
                    || show(&[&g]),
                );
                // a factor c that is not a square forces surd entries in p↑
                let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
                let h = scaled_lorentz_block(m, n)
                    .compose(&generate_with(TransformClass::Poincare, rng)?)?;
                check_split(&mut tally, &h)?;
            }
            GroupIdentity::ClosureScalTriv | GroupIdentity::ClosureScalPoi => {
                let class = if identity == GroupIdentity::ClosureScalTriv {
                    TransformClass::ScalTriv
                } else {
                    TransformClass::ScalPoi
                };
                let f = generate_with(class, rng)?;
                let g = generate_with(class, rng)?;
                check_closure(&mut tally, class, &f, &g)?;
            }
            GroupIdentity::TrivSubsetPoi => {
                let f = generate_with(TransformClass::Trivial, rng)?;
                tally.expect(
                    classify(&f)?.has(Flag::Poincare),
                    "triv_subset_poi.trivial_is_poincare",
                    || show(&[&f]),
                );
            }
        }
    }
    match identity {
        GroupIdentity::New1 => {
            // the identity map always witnesses a non-empty intersection
            let id = AffineMap::identity();
            let r = classify(&id)?;
            tally.expect(r.has(Flag::InTrivUp), "new1.identity", || show(&[&id]));
        }
        GroupIdentity::New2 => {
            check_split(&mut tally, &scaled_lorentz_block(1, 1))?;
        }
        GroupIdentity::TrivSubsetPoi => {
            let b = generate(TransformClass::Boost, seed)?;
            let r = classify(&b)?;
            let strict = r.has(Flag::Poincare) && !r.has(Flag::Trivial);
            tally.expect(strict, "triv_subset_poi.boost_outside_triv", || show(&[&b]));
            if strict {
                tally.witness(
                    "triv_subset_poi",
                    show(&[&b]),
                    "boost is Poincaré but not trivial",
                );
            }
        }
        _ => {}
    }
    Ok(tally)
}
