//! Exact plane lattices: Gauss–Lagrange reduction, rotational symmetry and
//! the norm-form indices of sublattices of the square and hexagonal lattices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::{Mat2, QuadNum, Vec2};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice2 {
    basis: [Vec2; 2],
}

impl Lattice2 {
    pub fn new(v1: Vec2, v2: Vec2) -> Result<Self> {
        if v1.cross(&v2).is_zero() {
            return Err(Error::InvalidLattice("basis vectors are linearly dependent".into()));
        }
        Ok(Lattice2 { basis: [v1, v2] })
    }

    pub fn square() -> Self {
        Lattice2 { basis: [Vec2::ints(1, 0), Vec2::ints(0, 1)] }
    }

    /// Basis `(1,0), (1/2, √3/2)`.
    pub fn hexagonal() -> Self {
        let half = QuadNum::rational(1, 2);
        Lattice2 { basis: [Vec2::ints(1, 0), Vec2::new(half, QuadNum::from_ratios(0, 1, 1, 2))] }
    }

    pub fn basis(&self) -> &[Vec2; 2] {
        &self.basis
    }

    /// Signed covolume `det [v1 v2]`.
    pub fn det(&self) -> QuadNum {
        self.basis[0].cross(&self.basis[1])
    }

    /// Coordinates of `u` in the basis, if they are integers.
    pub fn coordinates(&self, u: &Vec2) -> Option<(BigInt, BigInt)> {
        let d = self.det();
        let a = u.cross(&self.basis[1]).checked_div(&d).ok()?;
        let b = self.basis[0].cross(u).checked_div(&d).ok()?;
        Some((as_integer(&a)?, as_integer(&b)?))
    }

    pub fn contains(&self, u: &Vec2) -> bool {
        self.coordinates(u).is_some()
    }

    /// `i·v1 + j·v2`.
    pub fn point(&self, i: i64, j: i64) -> Vec2 {
        self.basis[0].scale(&QuadNum::int(i)).add(&self.basis[1].scale(&QuadNum::int(j)))
    }

    /// True when both lattices are the same set.
    pub fn same_lattice(&self, o: &Lattice2) -> bool {
        o.basis.iter().all(|v| self.contains(v)) && self.basis.iter().all(|v| o.contains(v))
    }
}

impl fmt::Display for Lattice2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}), ({})]", self.basis[0], self.basis[1])
    }
}

fn as_integer(q: &QuadNum) -> Option<BigInt> {
    let r = q.to_rational()?;
    r.is_integer().then(|| r.to_integer())
}

/// Lagrange reduction: `|v1|² <= |v2|²` and `2|v1·v2| <= |v1|²`.
pub fn gauss_reduce(l: &Lattice2) -> Result<Lattice2> {
    let [mut v1, mut v2] = l.basis.clone();
    if v1.cross(&v2).is_zero() {
        return Err(Error::InvalidLattice("degenerate basis".into()));
    }
    loop {
        if v1.norm2() > v2.norm2() {
            std::mem::swap(&mut v1, &mut v2);
        }
        let mu = v1.dot(&v2).checked_div(&v1.norm2())?.round();
        if mu.is_zero() {
            return Ok(Lattice2 { basis: [v1, v2] });
        }
        let m = QuadNum::from_rational(num_rational::BigRational::from_integer(mu));
        v2 = v2.sub(&v1.scale(&m));
    }
}

/// Order of the largest rotation group preserving the lattice: 2, 4 or 6.
pub fn symmetry_order(l: &Lattice2) -> Result<u32> {
    let r = gauss_reduce(l)?;
    let [v1, v2] = r.basis();
    let (n1, n2, d) = (v1.norm2(), v2.norm2(), v1.dot(v2));
    if n1 != n2 {
        return Ok(2);
    }
    if d.is_zero() {
        Ok(4)
    } else if &d.abs() * &QuadNum::int(2) == n1 {
        Ok(6)
    } else {
        Ok(2)
    }
}

/// Two equal-length lattice generators related by a rotation of order 3, 4 or 6.
///
/// Searches all bases drawn from the short vectors `±v1, ±v2, ±(v1±v2)` of a
/// reduced basis.
pub fn is_rotationally_rhombic(l: &Lattice2) -> Result<bool> {
    let r = gauss_reduce(l)?;
    let [v1, v2] = r.basis().clone();
    let cands = [v1.clone(), v2.clone(), v1.add(&v2), v1.sub(&v2)];
    let det = r.det().abs();
    let two = QuadNum::int(2);
    for (i, u) in cands.iter().enumerate() {
        for w in &cands[i + 1..] {
            if u.cross(w).abs() != det || u.norm2() != w.norm2() {
                continue;
            }
            let d = u.dot(w);
            // angle π/2, π/3 or 2π/3
            if d.is_zero() || &d.abs() * &two == u.norm2() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The rotation by `360°/order` about the origin, if it maps the lattice to itself.
pub fn rotation_preserving(l: &Lattice2, order: u32) -> Option<Mat2> {
    let k = match order {
        1 => 0,
        2 => 6,
        3 => 4,
        4 => 3,
        6 => 2,
        _ => return None,
    };
    let r = Mat2::rotation(k);
    l.basis.iter().all(|v| l.contains(&r.apply(v))).then_some(r)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Ring {
    /// `Z[i]`, `τ² = −1`.
    Gaussian,
    /// `Z[√−3]`, `τ² = −3`.
    RootMinus3,
}

impl Ring {
    fn k(self) -> i64 {
        match self {
            Ring::Gaussian => 1,
            Ring::RootMinus3 => 3,
        }
    }
}

/// `n1 + n2·τ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadInt {
    pub n1: BigInt,
    pub n2: BigInt,
    pub ring: Ring,
}

impl QuadInt {
    pub fn new(n1: i64, n2: i64, ring: Ring) -> Self {
        QuadInt { n1: n1.into(), n2: n2.into(), ring }
    }

    pub fn is_zero(&self) -> bool {
        self.n1.is_zero() && self.n2.is_zero()
    }

    /// Matrix of multiplication by `self` on the basis `(1, τ)`.
    pub fn multiplication_matrix(&self) -> [[BigInt; 2]; 2] {
        let k = BigInt::from(self.ring.k());
        [[self.n1.clone(), -(&k * &self.n2)], [self.n2.clone(), self.n1.clone()]]
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau = match self.ring {
            Ring::Gaussian => "i",
            Ring::RootMinus3 => "sqrt(-3)",
        };
        write!(f, "{}{}{}*{}", self.n1, if self.n2.is_negative() { "-" } else { "+" }, self.n2.abs(), tau)
    }
}

/// Index of `z·O` in `O`: `n1² + n2²` over `Z[i]`, `n1² + 3n2²` over `Z[√−3]`.
///
/// The hexagonal case uses the form on `Z[√−3]`; over the full Eisenstein
/// ring `Z[(1+√−3)/2]` the norm would be `n1² + n1·n2 + n2²` instead.
pub fn sublattice_index(z: &QuadInt) -> Result<BigInt> {
    if z.is_zero() {
        return Err(Error::InvalidArgument("z must be nonzero".into()));
    }
    let norm = &z.n1 * &z.n1 + BigInt::from(z.ring.k()) * &z.n2 * &z.n2;
    let m = z.multiplication_matrix();
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det != norm {
        return Err(Error::Invariant(format!("norm {norm} differs from determinant {det}")));
    }
    Ok(norm)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RigidCusp {
    S236,
    S244,
    S333,
}

impl RigidCusp {
    pub fn parse(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        match key.replace('²', "2").as_str() {
            "s2(2,3,6)" | "236" | "p6" => Ok(RigidCusp::S236),
            "s2(2,4,4)" | "244" | "442" | "p4" => Ok(RigidCusp::S244),
            "s2(3,3,3)" | "333" | "p3" => Ok(RigidCusp::S333),
            _ => Err(Error::UnknownModel(s.to_string())),
        }
    }
}

/// Index of the lattice `z·Λ` in the rigid orbifold group: `6N(z)`, `4N(z)` or `3N(z)`.
pub fn rigid_abelian_index(cusp: RigidCusp, z: &QuadInt) -> Result<BigInt> {
    let (mult, ring) = match cusp {
        RigidCusp::S236 => (6, Ring::RootMinus3),
        RigidCusp::S244 => (4, Ring::Gaussian),
        RigidCusp::S333 => (3, Ring::RootMinus3),
    };
    if z.ring != ring {
        return Err(Error::InvalidArgument(format!("{cusp:?} needs a {ring:?} integer")));
    }
    Ok(BigInt::from(mult) * sublattice_index(z)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(a: (i64, i64), b: (i64, i64)) -> Lattice2 {
        Lattice2::new(Vec2::ints(a.0, a.1), Vec2::ints(b.0, b.1)).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let r = gauss_reduce(&lat((1, 0), (5, 1))).unwrap();
        assert_eq!(r.basis(), &[Vec2::ints(1, 0), Vec2::ints(0, 1)]);
        assert_eq!(gauss_reduce(&Lattice2::square()).unwrap(), Lattice2::square());
        assert_eq!(gauss_reduce(&Lattice2::hexagonal()).unwrap(), Lattice2::hexagonal());
        assert!(Lattice2::new(Vec2::ints(1, 2), Vec2::ints(2, 4)).is_err());
    }

    #[test]
    fn symmetry_and_rhombic() {
        let rect = lat((2, 0), (0, 1));
        assert_eq!(symmetry_order(&Lattice2::square()).unwrap(), 4);
        assert_eq!(symmetry_order(&Lattice2::hexagonal()).unwrap(), 6);
        assert_eq!(symmetry_order(&rect).unwrap(), 2);
        assert!(is_rotationally_rhombic(&Lattice2::square()).unwrap());
        assert!(is_rotationally_rhombic(&Lattice2::hexagonal()).unwrap());
        assert!(!is_rotationally_rhombic(&rect).unwrap());
        // a skewed basis of the square lattice
        assert!(is_rotationally_rhombic(&lat((3, 1), (5, 2))).unwrap());
        // a skewed rectangular lattice
        assert!(!is_rotationally_rhombic(&lat((1, 0), (1, 3))).unwrap());
    }

    #[test]
    fn norm_forms() {
        assert_eq!(sublattice_index(&QuadInt::new(1, 1, Ring::Gaussian)).unwrap(), 2.into());
        assert_eq!(sublattice_index(&QuadInt::new(1, 1, Ring::RootMinus3)).unwrap(), 4.into());
        assert_eq!(sublattice_index(&QuadInt::new(1, 0, Ring::Gaussian)).unwrap(), 1.into());
        assert!(sublattice_index(&QuadInt::new(0, 0, Ring::Gaussian)).is_err());
    }

    #[test]
    fn rigid_indices() {
        let one3 = QuadInt::new(1, 0, Ring::RootMinus3);
        assert_eq!(rigid_abelian_index(RigidCusp::S236, &one3).unwrap(), 6.into());
        assert_eq!(rigid_abelian_index(RigidCusp::S244, &QuadInt::new(1, 0, Ring::Gaussian)).unwrap(), 4.into());
        assert_eq!(rigid_abelian_index(RigidCusp::S333, &QuadInt::new(1, 1, Ring::RootMinus3)).unwrap(), 12.into());
        assert!(rigid_abelian_index(RigidCusp::S244, &one3).is_err());
    }

    #[test]
    fn rotations_preserving() {
        assert!(rotation_preserving(&Lattice2::square(), 4).is_some());
        assert!(rotation_preserving(&Lattice2::square(), 3).is_none());
        assert!(rotation_preserving(&Lattice2::hexagonal(), 6).is_some());
        assert!(rotation_preserving(&lat((2, 0), (0, 1)), 4).is_none());
    }
}
