//! Affine isometries of the plane with coordinates in Q(√3).

use std::fmt;

use super::qnum::QuadNum;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vec2 {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl Vec2 {
    pub fn new(x: QuadNum, y: QuadNum) -> Self {
        Vec2 { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Vec2::new(QuadNum::int(x), QuadNum::int(y))
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, s: &QuadNum) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &Vec2) -> QuadNum {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm2(&self) -> QuadNum {
        self.dot(self)
    }

    /// `det [self o]`, the signed area of the parallelogram.
    pub fn cross(&self, o: &Vec2) -> QuadNum {
        &self.x * &o.y - &self.y * &o.x
    }

    /// Rescaled so the first nonzero coordinate is 1.
    pub fn canonical_direction(&self) -> Result<Vec2> {
        let lead = if !self.x.is_zero() { &self.x } else { &self.y };
        let inv = lead.inv()?;
        Ok(self.scale(&inv))
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl std::str::FromStr for Vec2 {
    type Err = Error;

    /// Parses `x,y`.
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| Error::InvalidArgument(format!("expected `x,y`, got `{s}`")))?;
        Ok(Vec2::new(x.parse()?, y.parse()?))
    }
}

/// A 2×2 matrix `[[m11, m12], [m21, m22]]` acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub m11: QuadNum,
    pub m12: QuadNum,
    pub m21: QuadNum,
    pub m22: QuadNum,
}

/// `(cos, sin)` of `k·30°`.
fn cos_sin_30(k: i64) -> (QuadNum, QuadNum) {
    let cos = |k: i64| match k.rem_euclid(12) {
        0 => QuadNum::int(1),
        1 | 11 => QuadNum::from_ratios(0, 1, 1, 2),
        2 | 10 => QuadNum::rational(1, 2),
        3 | 9 => QuadNum::zero(),
        4 | 8 => QuadNum::rational(-1, 2),
        5 | 7 => QuadNum::from_ratios(0, 1, -1, 2),
        _ => QuadNum::int(-1),
    };
    (cos(k), cos(k - 3))
}

impl Mat2 {
    pub fn new(m11: QuadNum, m12: QuadNum, m21: QuadNum, m22: QuadNum) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn ints(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Mat2::new(m11.into(), m12.into(), m21.into(), m22.into())
    }

    pub fn identity() -> Self {
        Mat2::ints(1, 0, 0, 1)
    }

    /// Counterclockwise rotation by `k·30°`.
    pub fn rotation(k: i64) -> Self {
        let (c, s) = cos_sin_30(k);
        Mat2::new(c.clone(), -&s, s, c)
    }

    /// Reflection in the line through the origin at angle `k·15°`.
    pub fn reflection(k: i64) -> Self {
        let (c, s) = cos_sin_30(k);
        Mat2::new(c.clone(), s.clone(), s, -c)
    }

    /// Reflection fixing the line spanned by `dir`.
    pub fn reflection_along(dir: &Vec2) -> Result<Self> {
        let n2 = dir.norm2();
        let two_over = QuadNum::int(2).checked_div(&n2)?;
        let xx = &(&dir.x * &dir.x) * &two_over;
        let xy = &(&dir.x * &dir.y) * &two_over;
        let yy = &(&dir.y * &dir.y) * &two_over;
        Ok(Mat2::new(xx - QuadNum::one(), xy.clone(), xy, yy - QuadNum::one()))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.m11 * &o.m11 + &self.m12 * &o.m21,
            &self.m11 * &o.m12 + &self.m12 * &o.m22,
            &self.m21 * &o.m11 + &self.m22 * &o.m21,
            &self.m21 * &o.m12 + &self.m22 * &o.m22,
        )
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2::new(&self.m11 * &v.x + &self.m12 * &v.y, &self.m21 * &v.x + &self.m22 * &v.y)
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2::new(&self.m11 + &o.m11, &self.m12 + &o.m12, &self.m21 + &o.m21, &self.m22 + &o.m22)
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2::new(&self.m11 - &o.m11, &self.m12 - &o.m12, &self.m21 - &o.m21, &self.m22 - &o.m22)
    }

    pub fn det(&self) -> QuadNum {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.m11.clone(), self.m21.clone(), self.m12.clone(), self.m22.clone())
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det().inv()?;
        Ok(Mat2::new(&self.m22 * &d, -&self.m12 * &d, -&self.m21 * &d, &self.m11 * &d))
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        (0..k).fold(Mat2::identity(), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    /// `MᵀM = I`.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self).is_identity()
    }

    /// +1 or -1 for orthogonal matrices.
    pub fn det_sign(&self) -> i32 {
        self.det().signum()
    }

    /// Least `k <= 6` with `Mᵏ = I`.
    pub fn order(&self) -> Result<u32> {
        let mut p = self.clone();
        for k in 1..=6 {
            if p.is_identity() {
                return Ok(k);
            }
            p = p.mul(self);
        }
        Err(Error::NonCrystallographic)
    }

    pub fn columns(&self) -> (Vec2, Vec2) {
        (
            Vec2::new(self.m11.clone(), self.m21.clone()),
            Vec2::new(self.m12.clone(), self.m22.clone()),
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// The map `x ↦ linear·x + trans`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Isometry {
    linear: Mat2,
    trans: Vec2,
}

impl Isometry {
    pub fn new(linear: Mat2, trans: Vec2) -> Result<Self> {
        if !linear.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        Ok(Isometry { linear, trans })
    }

    pub fn identity() -> Self {
        Isometry { linear: Mat2::identity(), trans: Vec2::zero() }
    }

    pub fn translation(v: Vec2) -> Self {
        Isometry { linear: Mat2::identity(), trans: v }
    }

    /// Rotation by `k·30°` counterclockwise about `center`.
    pub fn rotation_about(k: i64, center: &Vec2) -> Self {
        let m = Mat2::rotation(k);
        let t = center.sub(&m.apply(center));
        Isometry { linear: m, trans: t }
    }

    /// Reflection in the line through `point` at angle `k·15°`.
    pub fn reflection_through(k: i64, point: &Vec2) -> Self {
        let m = Mat2::reflection(k);
        let t = point.sub(&m.apply(point));
        Isometry { linear: m, trans: t }
    }

    pub fn linear(&self) -> &Mat2 {
        &self.linear
    }

    pub fn trans(&self) -> &Vec2 {
        &self.trans
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        self.linear.apply(v).add(&self.trans)
    }

    /// `self ∘ g`, i.e. `x ↦ self(g(x))`.
    pub fn compose(&self, g: &Isometry) -> Isometry {
        Isometry {
            linear: self.linear.mul(&g.linear),
            trans: self.linear.apply(&g.trans).add(&self.trans),
        }
    }

    pub fn inverse(&self) -> Isometry {
        let lt = self.linear.transpose();
        let t = lt.apply(&self.trans).neg();
        Isometry { linear: lt, trans: t }
    }

    pub fn pow(&self, k: i64) -> Isometry {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Isometry::identity(), |acc, _| acc.compose(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.trans.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn det_sign(&self) -> i32 {
        self.linear.det_sign()
    }

    pub fn classify(&self) -> Result<IsoClass> {
        classify_isometry(self)
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}·x + ({})", self.linear, self.trans)
    }
}

/// Geometric type of a plane isometry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IsoClass {
    Identity,
    Translation(Vec2),
    /// `ccw` records the sense; half-turns always report `true`.
    Rotation { center: Vec2, order: u32, ccw: bool },
    Reflection { point: Vec2, direction: Vec2 },
    Glide { point: Vec2, direction: Vec2, glide: Vec2 },
}

impl IsoClass {
    pub fn name(&self) -> &'static str {
        match self {
            IsoClass::Identity => "identity",
            IsoClass::Translation(_) => "translation",
            IsoClass::Rotation { .. } => "rotation",
            IsoClass::Reflection { .. } => "reflection",
            IsoClass::Glide { .. } => "glide",
        }
    }

    /// Rebuilds the isometry this class describes.
    pub fn reconstruct(&self) -> Result<Isometry> {
        Ok(match self {
            IsoClass::Identity => Isometry::identity(),
            IsoClass::Translation(v) => Isometry::translation(v.clone()),
            IsoClass::Rotation { center, order, ccw } => {
                if !matches!(order, 2 | 3 | 4 | 6) {
                    return Err(Error::NonCrystallographic);
                }
                let k = 12 / *order as i64;
                Isometry::rotation_about(if *ccw { k } else { -k }, center)
            }
            IsoClass::Reflection { point, direction } => {
                let m = Mat2::reflection_along(direction)?;
                let t = point.sub(&m.apply(point));
                Isometry::new(m, t)?
            }
            IsoClass::Glide { point, direction, glide } => {
                let m = Mat2::reflection_along(direction)?;
                let t = point.sub(&m.apply(point)).add(glide);
                Isometry::new(m, t)?
            }
        })
    }
}

/// Identifies the geometric type of `f` with exact axis and center data.
pub fn classify_isometry(f: &Isometry) -> Result<IsoClass> {
    let m = &f.linear;
    let t = &f.trans;
    if m.is_identity() {
        return Ok(if t.is_zero() { IsoClass::Identity } else { IsoClass::Translation(t.clone()) });
    }
    if m.det_sign() > 0 {
        let order = m.order()?;
        let center = Mat2::identity().sub(m).inverse()?.apply(t);
        let ccw = m.m21.signum() >= 0;
        return Ok(IsoClass::Rotation { center, order, ccw });
    }
    // det -1: M² = I, so f∘f is the translation by Mt + t
    let half = QuadNum::rational(1, 2);
    let glide = m.apply(t).add(t).scale(&half);
    let (c1, c2) = m.add(&Mat2::identity()).columns();
    let direction = if c1.is_zero() { c2 } else { c1 }.canonical_direction()?;
    let point = t.sub(&glide).scale(&half);
    Ok(if glide.is_zero() {
        IsoClass::Reflection { point, direction }
    } else {
        IsoClass::Glide { point, direction, glide }
    })
}

/// The unique fixed point of a rotation.
pub fn fixed_point(f: &Isometry) -> Result<Vec2> {
    match classify_isometry(f)? {
        IsoClass::Rotation { center, .. } => Ok(center),
        _ => Err(Error::NoFixedPoint),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn glide_x() -> Isometry {
        Isometry::new(Mat2::ints(1, 0, 0, -1), Vec2::ints(1, 0)).unwrap()
    }

    #[test]
    fn rejects_non_orthogonal() {
        assert_eq!(Isometry::new(Mat2::ints(2, 0, 0, 1), Vec2::zero()), Err(Error::NotOrthogonal));
    }

    #[test]
    fn rotation_table_is_orthogonal() {
        for k in 0..12 {
            let r = Mat2::rotation(k);
            assert!(r.is_orthogonal());
            assert_eq!(r.det(), QuadNum::one());
            let s = Mat2::reflection(k);
            assert!(s.is_orthogonal());
            assert_eq!(s.det(), QuadNum::int(-1));
            assert!(s.mul(&s).is_identity());
        }
        assert_eq!(Mat2::rotation(1).pow(12), Mat2::identity());
    }

    #[test]
    fn classifies_translation() {
        let f = Isometry::translation(Vec2::ints(1, 0));
        assert_eq!(classify_isometry(&f).unwrap(), IsoClass::Translation(Vec2::ints(1, 0)));
        assert_eq!(classify_isometry(&Isometry::identity()).unwrap(), IsoClass::Identity);
    }

    #[test]
    fn classifies_glide_along_x() {
        let f = glide_x();
        let c = classify_isometry(&f).unwrap();
        assert_eq!(
            c,
            IsoClass::Glide { point: Vec2::zero(), direction: Vec2::ints(1, 0), glide: Vec2::ints(1, 0) }
        );
        // oracle: the square is translation by (2,0)
        assert_eq!(classify_isometry(&f.compose(&f)).unwrap(), IsoClass::Translation(Vec2::ints(2, 0)));
        assert_eq!(c.reconstruct().unwrap(), f);
    }

    #[test]
    fn reflection_axis_is_canonical() {
        let r = Isometry::reflection_through(3, &Vec2::ints(1, 0)); // line through (1,0) at 45°
        match classify_isometry(&r).unwrap() {
            IsoClass::Reflection { point, direction } => {
                assert_eq!(direction, Vec2::ints(1, 1));
                assert_eq!(r.apply(&point), point);
            }
            other => panic!("expected reflection, got {other:?}"),
        }
    }

    #[test]
    fn no_fixed_point_for_translations() {
        assert_eq!(fixed_point(&Isometry::translation(Vec2::ints(0, 1))), Err(Error::NoFixedPoint));
        assert_eq!(fixed_point(&glide_x()), Err(Error::NoFixedPoint));
    }

    #[test]
    fn rotation_by_forty_five_degrees_is_not_crystallographic() {
        // cos 45° is outside Q(√3), but a product of reflections 15° apart gives a 30° rotation (order 12)
        let f = Isometry::reflection_through(1, &Vec2::zero()).compose(&Isometry::reflection_through(0, &Vec2::zero()));
        assert_eq!(classify_isometry(&f), Err(Error::NonCrystallographic));
    }

    #[test]
    fn rotation_fixed_point_round_trip() {
        let c = Vec2::new(QuadNum::rational(1, 3), QuadNum::from_ratios(0, 1, 1, 5));
        for k in [2, 3, 4, 6, -2, -3, -4, -6] {
            let f = Isometry::rotation_about(k, &c);
            assert_eq!(fixed_point(&f).unwrap(), c);
            let cls = classify_isometry(&f).unwrap();
            assert_eq!(cls.reconstruct().unwrap(), f);
        }
    }
}
