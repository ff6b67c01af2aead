//! Seeded random sources for exact rational values and rational-entried
//! rotations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Mat4, Point4};
use crate::scalar::Scalar;

pub type SampleRng = ChaCha8Rng;

/// One step of splitmix64.
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent stream for `(seed, tag, index)`.
pub fn stream(seed: u64, tag: &str, index: u64) -> SampleRng {
    let mut h = mix(seed);
    for b in tag.bytes() {
        h = mix(h ^ u64::from(b));
    }
    SampleRng::seed_from_u64(mix(h ^ mix(index)))
}

/// A small rational `n/d`, `|n| ≤ 9`, `1 ≤ d ≤ 4`; one draw in four is an
/// integer from `{−1, 0, 1}` so that coincidences actually occur.
pub fn small_rational(rng: &mut SampleRng) -> Scalar {
    if rng.gen_ratio(1, 4) {
        return Scalar::int(rng.gen_range(-1..=1));
    }
    Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut SampleRng) -> Scalar {
    let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Scalar::ratio(n, rng.gen_range(1..=4))
}

pub fn random_point(rng: &mut SampleRng) -> Point4 {
    Point4::new(
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
    )
}

/// `(cos, sin)` of a rational angle: `((m²−n²)/(m²+n²), 2mn/(m²+n²))`.
pub fn pythagorean_pair(rng: &mut SampleRng) -> (Scalar, Scalar) {
    let m: i64 = rng.gen_range(1..=6);
    let n: i64 = rng.gen_range(0..=6);
    let h = m * m + n * n;
    let sin_sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    (
        Scalar::ratio(m * m - n * n, h),
        Scalar::ratio(sin_sign * 2 * m * n, h),
    )
}

/// Integer `(d; a, b, c)` with `a² + b² + c² = d²`, `d > 0`.
pub fn pythagorean_quadruple(rng: &mut SampleRng) -> (i64, [i64; 3]) {
    loop {
        let [m, n, p, q]: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
        let d = m * m + n * n + p * p + q * q;
        if d == 0 {
            continue;
        }
        let a = m * m + n * n - p * p - q * q;
        let b = 2 * (m * q + n * p);
        let c = 2 * (n * q - m * p);
        return (d, [a, b, c]);
    }
}

/// A rational unit vector in space, by inverse stereographic projection.
pub fn spatial_unit_vector(rng: &mut SampleRng) -> [Scalar; 3] {
    if rng.gen_ratio(1, 3) {
        let mut v = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        v[rng.gen_range(0..3)] = Scalar::int(if rng.gen_bool(0.5) { 1 } else { -1 });
        return v;
    }
    let (d, [a, b, c]) = pythagorean_quadruple(rng);
    [
        Scalar::ratio(a, d),
        Scalar::ratio(b, d),
        Scalar::ratio(c, d),
    ]
}

/// Rotation by `(cos, sin)` in the coordinate plane `(i, j)`.
pub fn plane_rotation(i: usize, j: usize, cos: &Scalar, sin: &Scalar) -> Mat4 {
    Mat4::from_fn(|r, c| {
        if (r, c) == (i, i) || (r, c) == (j, j) {
            cos.clone()
        } else if (r, c) == (i, j) {
            sin.neg()
        } else if (r, c) == (j, i) {
            sin.clone()
        } else if r == c {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// A random signed permutation of the listed coordinates, identity elsewhere.
pub fn signed_permutation(rng: &mut SampleRng, axes: &[usize]) -> Mat4 {
    let mut target = axes.to_vec();
    target.shuffle(rng);
    let signs: Vec<i64> = axes
        .iter()
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    Mat4::from_fn(|r, c| match axes.iter().position(|&a| a == c) {
        Some(k) if target[k] == r => Scalar::int(signs[k]),
        Some(_) => Scalar::zero(),
        None if r == c => Scalar::one(),
        None => Scalar::zero(),
    })
}

/// Random orthogonal matrix acting on the listed coordinates only: a signed
/// permutation followed by one to three rational plane rotations.
pub fn orthogonal_on(rng: &mut SampleRng, axes: &[usize]) -> Mat4 {
    let mut m = signed_permutation(rng, axes);
    for _ in 0..rng.gen_range(1..=3) {
        let i = *axes.choose(rng).expect("at least two axes");
        let j = loop {
            let j = *axes.choose(rng).expect("at least two axes");
            if j != i {
                break j;
            }
        };
        let (cos, sin) = pythagorean_pair(rng);
        m = plane_rotation(i, j, &cos, &sin)
            .mul(&m)
            .expect("rational entries");
    }
    m
}
