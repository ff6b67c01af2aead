//! Spacetime points, dense 4×4 matrices and affine maps over [`Scalar`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A spacetime event `(t, x, y, z)`; the time component comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point4 {
    coords: [Scalar; 4],
}

impl Point4 {
    pub fn new(t: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Self {
        Point4 {
            coords: [t, x, y, z],
        }
    }

    pub fn from_coords(coords: [Scalar; 4]) -> Self {
        Point4 { coords }
    }

    pub fn ints(t: i64, x: i64, y: i64, z: i64) -> Self {
        Point4::new(t.into(), x.into(), y.into(), z.into())
    }

    /// The origin `o = (0,0,0,0)`.
    pub fn origin() -> Self {
        Point4::ints(0, 0, 0, 0)
    }

    /// The unit time vector `e = (1,0,0,0)`.
    pub fn time_unit() -> Self {
        Point4::ints(1, 0, 0, 0)
    }

    pub fn coords(&self) -> &[Scalar; 4] {
        &self.coords
    }

    pub fn t(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn x(&self) -> &Scalar {
        &self.coords[1]
    }

    pub fn y(&self) -> &Scalar {
        &self.coords[2]
    }

    pub fn z(&self) -> &Scalar {
        &self.coords[3]
    }

    pub fn spatial(&self) -> &[Scalar] {
        &self.coords[1..]
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn zip_with(
        &self,
        other: &Point4,
        f: impl Fn(&Scalar, &Scalar) -> Result<Scalar>,
    ) -> Result<Point4> {
        let [a, b, c, d] = &self.coords;
        let [p, q, r, s] = &other.coords;
        Ok(Point4::new(f(a, p)?, f(b, q)?, f(c, r)?, f(d, s)?))
    }

    pub fn add(&self, other: &Point4) -> Result<Point4> {
        self.zip_with(other, Scalar::add)
    }

    pub fn sub(&self, other: &Point4) -> Result<Point4> {
        self.zip_with(other, Scalar::sub)
    }

    pub fn scale(&self, k: &Scalar) -> Result<Point4> {
        let [a, b, c, d] = &self.coords;
        Ok(Point4::new(k.mul(a)?, k.mul(b)?, k.mul(c)?, k.mul(d)?))
    }

    pub fn neg(&self) -> Point4 {
        let [a, b, c, d] = &self.coords;
        Point4::new(a.neg(), b.neg(), c.neg(), d.neg())
    }
}

impl fmt::Display for Point4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [t, x, y, z] = &self.coords;
        write!(f, "({t}, {x}, {y}, {z})")
    }
}

/// `t² + x² + y² + z²`.
pub fn sq_euclidean_length(p: &Point4) -> Result<Scalar> {
    p.coords
        .iter()
        .try_fold(Scalar::zero(), |acc, c| acc.add(&c.square()))
}

/// `t² − x² − y² − z²`; negative for spacelike vectors.
pub fn sq_minkowski_length(p: &Point4) -> Result<Scalar> {
    p.spatial()
        .iter()
        .try_fold(p.t().square(), |acc, c| acc.sub(&c.square()))
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y)?)?;
        }
    }
    Ok(acc)
}

/// Dense 4×4 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat4 {
    rows: [[Scalar; 4]; 4],
}

impl Mat4 {
    pub fn from_rows(rows: [[Scalar; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Scalar) -> Self {
        Mat4 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn try_from_fn(f: impl Fn(usize, usize) -> Result<Scalar>) -> Result<Self> {
        let mut rows: [[Scalar; 4]; 4] = Default::default();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = f(i, j)?;
            }
        }
        Ok(Mat4 { rows })
    }

    pub fn ints(rows: [[i64; 4]; 4]) -> Self {
        Mat4::from_fn(|i, j| Scalar::int(rows[i][j]))
    }

    pub fn zero() -> Self {
        Mat4::from_fn(|_, _| Scalar::zero())
    }

    pub fn identity() -> Self {
        Mat4::scalar(&Scalar::one())
    }

    /// `a·I`.
    pub fn scalar(a: &Scalar) -> Self {
        Mat4::from_fn(|i, j| if i == j { a.clone() } else { Scalar::zero() })
    }

    pub fn diag(d: [Scalar; 4]) -> Self {
        Mat4::from_fn(|i, j| if i == j { d[i].clone() } else { Scalar::zero() })
    }

    /// The Minkowski metric `η = diag(1, −1, −1, −1)`.
    pub fn minkowski() -> Self {
        Mat4::diag([1.into(), (-1).into(), (-1).into(), (-1).into()])
    }

    pub fn rows(&self) -> &[[Scalar; 4]; 4] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> [Scalar; 4] {
        std::array::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn transpose(&self) -> Mat4 {
        Mat4::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn mul(&self, other: &Mat4) -> Result<Mat4> {
        Mat4::try_from_fn(|i, j| dot(&self.rows[i], &other.column(j)))
    }

    pub fn mul_vec(&self, p: &Point4) -> Result<Point4> {
        let [a, b, c, d] = &self.rows;
        let v = p.coords();
        Ok(Point4::new(dot(a, v)?, dot(b, v)?, dot(c, v)?, dot(d, v)?))
    }

    pub fn scale(&self, k: &Scalar) -> Result<Mat4> {
        Mat4::try_from_fn(|i, j| k.mul(&self.rows[i][j]))
    }

    pub fn neg(&self) -> Mat4 {
        Mat4::from_fn(|i, j| self.rows[i][j].neg())
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat4::identity()
    }

    /// `Some(a)` when the matrix equals `a·I`.
    pub fn as_scalar_multiple(&self) -> Option<&Scalar> {
        let a = &self.rows[0][0];
        (*self == Mat4::scalar(a)).then_some(a)
    }

    fn minor3(&self, skip_row: usize, skip_col: usize) -> Result<Scalar> {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
        let m = |r: usize, c: usize| &self.rows[rows[r]][cols[c]];
        // cofactor expansion along the first remaining row
        let mut det = Scalar::zero();
        for c in 0..3 {
            let (c1, c2) = match c {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let sub = m(1, c1).mul(m(2, c2))?.sub(&m(1, c2).mul(m(2, c1))?)?;
            let term = m(0, c).mul(&sub)?;
            det = if c == 1 {
                det.sub(&term)?
            } else {
                det.add(&term)?
            };
        }
        Ok(det)
    }

    fn cofactor(&self, i: usize, j: usize) -> Result<Scalar> {
        let m = self.minor3(i, j)?;
        Ok(if (i + j).is_multiple_of(2) {
            m
        } else {
            m.neg()
        })
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Scalar> {
        (0..4).try_fold(Scalar::zero(), |acc, j| {
            acc.add(&self.rows[0][j].mul(&self.cofactor(0, j)?)?)
        })
    }

    /// Adjugate divided by the determinant.
    pub fn inverse(&self) -> Result<Mat4> {
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        let inv_det = det.inv()?;
        Mat4::try_from_fn(|i, j| self.cofactor(j, i)?.mul(&inv_det))
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The map `p ↦ linear·p + translation`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: Mat4,
    pub translation: Point4,
}

impl AffineMap {
    pub fn new(linear: Mat4, translation: Point4) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    pub fn identity() -> Self {
        AffineMap::linear(Mat4::identity())
    }

    pub fn linear(m: Mat4) -> Self {
        AffineMap::new(m, Point4::origin())
    }

    pub fn translation(v: Point4) -> Self {
        AffineMap::new(Mat4::identity(), v)
    }

    /// `p ↦ a·p`.
    pub fn scaling(a: Scalar) -> Self {
        AffineMap::linear(Mat4::scalar(&a))
    }

    pub fn is_linear(&self) -> bool {
        self.translation.is_origin()
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn is_bijective(&self) -> Result<bool> {
        Ok(!self.linear.det()?.is_zero())
    }

    pub fn apply(&self, p: &Point4) -> Result<Point4> {
        self.linear.mul_vec(p)?.add(&self.translation)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        Ok(AffineMap {
            linear: self.linear.mul(&other.linear)?,
            translation: self.apply(&other.translation)?,
        })
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = self.linear.inverse()?;
        let translation = inv.mul_vec(&self.translation)?.neg();
        Ok(AffineMap {
            linear: inv,
            translation,
        })
    }

    pub fn apply_all(&self, points: &[Point4]) -> Result<Vec<Point4>> {
        points.iter().map(|p| self.apply(p)).collect()
    }
}

impl fmt::Display for AffineMap {
    /// Renders the five-line matrix file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.linear)?;
        let cells: Vec<String> = self
            .translation
            .coords()
            .iter()
            .map(Scalar::to_string)
            .collect();
        write!(f, "{}", cells.join(" "))
    }
}

impl FromStr for AffineMap {
    type Err = Error;

    /// Parses the matrix file format: four rows of the linear part followed
    /// by the translation vector, four scalars per line. Lines starting with
    /// `#` and blank lines are skipped.
    fn from_str(text: &str) -> Result<AffineMap> {
        let mut lines: Vec<[Scalar; 4]> = Vec::with_capacity(5);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let cells: Vec<&str> = line.split_whitespace().collect();
            if cells.len() != 4 {
                return Err(Error::MatrixFormat {
                    line: lineno,
                    message: format!("expected 4 scalars, found {}", cells.len()),
                });
            }
            if lines.len() == 5 {
                return Err(Error::MatrixFormat {
                    line: lineno,
                    message: "more than five data lines".into(),
                });
            }
            let mut row: [Scalar; 4] = Default::default();
            for (slot, cell) in row.iter_mut().zip(cells) {
                *slot = cell.parse().map_err(|e: Error| Error::MatrixFormat {
                    line: lineno,
                    message: e.to_string(),
                })?;
            }
            lines.push(row);
        }
        if lines.len() != 5 {
            return Err(Error::MatrixFormat {
                line: text.lines().count(),
                message: format!("expected 5 data lines, found {}", lines.len()),
            });
        }
        let [r0, r1, r2, r3, t]: [[Scalar; 4]; 5] = lines.try_into().expect("length checked above");
        Ok(AffineMap::new(
            Mat4::from_rows([r0, r1, r2, r3]),
            Point4::from_coords(t),
        ))
    }
}

/// Splits a bijective `A` into `(τ, L)` with `τ` a pure translation, `L`
/// linear and `A = τ ∘ L`. The translation vector is `A(o)`.
pub fn decompose_affine(a: &AffineMap) -> Result<(AffineMap, AffineMap)> {
    if !a.is_bijective()? {
        return Err(Error::SingularMap);
    }
    let tau = AffineMap::translation(a.apply(&Point4::origin())?);
    let lin = AffineMap::linear(a.linear.clone());
    Ok((tau, lin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    pub(crate) fn boost_3_5() -> AffineMap {
        let g = q(5, 4);
        let gv = q(-3, 4);
        let z = Scalar::zero;
        let o = Scalar::one;
        AffineMap::linear(Mat4::from_rows([
            [g.clone(), gv.clone(), z(), z()],
            [gv, g, z(), z()],
            [z(), z(), o(), z()],
            [z(), z(), z(), o()],
        ]))
    }

    #[test]
    fn apply_examples() {
        let p = Point4::ints(1, 2, 3, 4);
        assert_eq!(AffineMap::identity().apply(&p).unwrap(), p);
        let tr = AffineMap::translation(Point4::ints(1, 0, 0, 0));
        assert_eq!(
            tr.apply(&Point4::origin()).unwrap(),
            Point4::ints(1, 0, 0, 0)
        );
        let img = boost_3_5().apply(&Point4::ints(0, 1, 0, 0)).unwrap();
        assert_eq!(img, Point4::new(q(-3, 4), q(5, 4), 0.into(), 0.into()));
    }

    #[test]
    fn compose_examples() {
        let b = boost_3_5();
        assert_eq!(b.compose(&AffineMap::identity()).unwrap(), b);
        let s6 = AffineMap::scaling(2.into())
            .compose(&AffineMap::scaling(3.into()))
            .unwrap();
        assert_eq!(s6, AffineMap::scaling(6.into()));
        // the inverse boost is the boost with the opposite speed
        let mut back = boost_3_5();
        back.linear = Mat4::from_fn(|i, j| {
            let e = boost_3_5().linear.get(i, j).clone();
            if (i == 0) != (j == 0) {
                e.neg()
            } else {
                e
            }
        });
        assert_eq!(b.compose(&back).unwrap(), AffineMap::identity());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            AffineMap::identity().inverse().unwrap(),
            AffineMap::identity()
        );
        assert_eq!(
            AffineMap::scaling(2.into()).inverse().unwrap(),
            AffineMap::scaling(q(1, 2))
        );
        let singular = AffineMap::new(Mat4::zero(), Point4::ints(1, 2, 3, 4));
        assert_eq!(singular.inverse(), Err(Error::SingularMap));
    }

    #[test]
    fn squared_lengths() {
        assert_eq!(sq_euclidean_length(&Point4::origin()).unwrap(), 0.into());
        assert_eq!(
            sq_euclidean_length(&Point4::ints(1, 1, 1, 1)).unwrap(),
            4.into()
        );
        assert_eq!(
            sq_euclidean_length(&Point4::ints(1, -2, 0, 2)).unwrap(),
            9.into()
        );
        assert_eq!(
            sq_minkowski_length(&Point4::ints(1, 1, 0, 0)).unwrap(),
            0.into()
        );
        assert_eq!(
            sq_minkowski_length(&Point4::ints(1, 0, 0, 0)).unwrap(),
            1.into()
        );
        assert_eq!(
            sq_minkowski_length(&Point4::ints(0, 1, 0, 0)).unwrap(),
            (-1).into()
        );
    }

    #[test]
    fn decompose_examples() {
        let (tau, lin) = decompose_affine(&AffineMap::identity()).unwrap();
        assert_eq!(tau, AffineMap::identity());
        assert_eq!(lin, AffineMap::identity());

        let a = AffineMap::new(Mat4::scalar(&2.into()), Point4::ints(1, 0, 0, 0));
        let (tau, lin) = decompose_affine(&a).unwrap();
        assert_eq!(tau, AffineMap::translation(Point4::ints(1, 0, 0, 0)));
        assert_eq!(lin, AffineMap::scaling(2.into()));

        let shift = AffineMap::translation(Point4::ints(0, 0, 0, 1));
        let a = shift.compose(&boost_3_5()).unwrap();
        let (tau, lin) = decompose_affine(&a).unwrap();
        assert_eq!(tau, shift);
        assert_eq!(lin, boost_3_5());
        assert_eq!(tau.compose(&lin).unwrap(), a);

        let singular = AffineMap::linear(Mat4::zero());
        assert_eq!(decompose_affine(&singular), Err(Error::SingularMap));
    }

    #[test]
    fn determinant_of_known_matrices() {
        assert_eq!(Mat4::identity().det().unwrap(), 1.into());
        assert_eq!(Mat4::scalar(&2.into()).det().unwrap(), 16.into());
        assert_eq!(boost_3_5().linear.det().unwrap(), 1.into());
        let m = Mat4::ints([[2, 0, 0, 1], [1, 3, 0, 0], [0, 1, 4, 0], [0, 0, 1, 5]]);
        // expansion along the first row by hand: 2·60 − 1·1 = 119
        assert_eq!(m.det().unwrap(), 119.into());
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Mat4::identity());
    }

    #[test]
    fn matrix_file_round_trip() {
        let text = "# boost\n5/4 -3/4 0 0\n-3/4 5/4 0 0\n\n0 0 1 0\n0 0 0 1\n0 0 0 0+1*sqrt(2)\n";
        let a: AffineMap = text.parse().unwrap();
        assert_eq!(a.linear, boost_3_5().linear);
        let back: AffineMap = a.to_string().parse().unwrap();
        assert_eq!(back, a);
        assert!(matches!(
            "1 2 3\n".parse::<AffineMap>(),
            Err(Error::MatrixFormat { line: 1, .. })
        ));
        assert!(matches!(
            "1 0 0 0\n0 1 0 0\n".parse::<AffineMap>(),
            Err(Error::MatrixFormat { .. })
        ));
        assert!(matches!(
            "1 0 0 x\n".parse::<AffineMap>(),
            Err(Error::MatrixFormat { line: 1, .. })
        ));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..7, 1i64..4).prop_map(|(n, d)| q(n, d))
    }

    fn arb_point() -> impl Strategy<Value = Point4> {
        proptest::array::uniform4(arb_scalar()).prop_map(Point4::from_coords)
    }

    fn arb_map() -> impl Strategy<Value = AffineMap> {
        (proptest::array::uniform16(arb_scalar()), arb_point())
            .prop_map(|(m, t)| AffineMap::new(Mat4::from_fn(|i, j| m[4 * i + j].clone()), t))
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in arb_map(), b in arb_map(), c in arb_map()) {
            prop_assert_eq!(a.compose(&b)?.compose(&c)?, a.compose(&b.compose(&c)?)?);
        }

        #[test]
        fn compose_matches_sequential_application(a in arb_map(), b in arb_map(), p in arb_point()) {
            prop_assert_eq!(a.compose(&b)?.apply(&p)?, a.apply(&b.apply(&p)?)?);
        }

        #[test]
        fn decomposition_recomposes(a in arb_map()) {
            prop_assume!(a.is_bijective()?);
            let (tau, lin) = decompose_affine(&a)?;
            prop_assert!(tau.is_translation());
            prop_assert!(lin.is_linear());
            prop_assert_eq!(tau.compose(&lin)?, a.clone());
            prop_assert_eq!(a.compose(&a.inverse()?)?, AffineMap::identity());
        }

        #[test]
        fn boost_preserves_minkowski_length(p in arb_point()) {
            let image = boost_3_5().apply(&p)?;
            prop_assert_eq!(sq_minkowski_length(&image)?, sq_minkowski_length(&p)?);
        }
    }
}
