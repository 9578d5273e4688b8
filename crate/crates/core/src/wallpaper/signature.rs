use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Underlying {
    Sphere,
    Disk,
    Torus,
    KleinBottle,
    ProjectivePlane,
    Annulus,
    Moebius,
}

impl Underlying {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            Underlying::Sphere => 2,
            Underlying::Disk | Underlying::ProjectivePlane => 1,
            Underlying::Torus | Underlying::KleinBottle | Underlying::Annulus | Underlying::Moebius => 0,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Names {
    /// Thurston-style name as used for cusp types, e.g. `S2(2,3,6)`, `T_R`.
    pub thurston: String,
    pub conway: String,
    pub crystallographic: String,
}

/// A closed Euclidean 2-orbifold.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct OrbifoldSignature {
    pub orientable: bool,
    pub has_boundary_reflector: bool,
    pub underlying: Underlying,
    pub cone_orders: Vec<u32>,
    pub corner_orders: Vec<u32>,
    pub names: Names,
}

impl OrbifoldSignature {
    pub fn thurston(&self) -> &str {
        &self.names.thurston
    }

    pub fn conway(&self) -> &str {
        &self.names.conway
    }

    pub fn crystallographic(&self) -> &str {
        &self.names.crystallographic
    }

    /// Every cone and corner order.
    pub fn singular_orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.cone_orders.iter().chain(&self.corner_orders).copied()
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.names.thurston, self.names.conway, self.names.crystallographic)
    }
}

struct Row {
    cryst: &'static str,
    conway: &'static str,
    thurston: &'static str,
    underlying: Underlying,
    cones: &'static [u32],
    corners: &'static [u32],
    boundary: bool,
}

const TABLE: [Row; 17] = {
    use Underlying::*;
    [
        Row { cryst: "p1", conway: "o", thurston: "T2", underlying: Torus, cones: &[], corners: &[], boundary: false },
        Row { cryst: "p2", conway: "2222", thurston: "S2(2,2,2,2)", underlying: Sphere, cones: &[2, 2, 2, 2], corners: &[], boundary: false },
        Row { cryst: "pm", conway: "**", thurston: "T_R", underlying: Annulus, cones: &[], corners: &[], boundary: true },
        Row { cryst: "pg", conway: "xx", thurston: "K2", underlying: KleinBottle, cones: &[], corners: &[], boundary: false },
        Row { cryst: "cm", conway: "*x", thurston: "K_R", underlying: Moebius, cones: &[], corners: &[], boundary: true },
        Row { cryst: "pmm", conway: "*2222", thurston: "D2(;2,2,2,2)", underlying: Disk, cones: &[], corners: &[2, 2, 2, 2], boundary: true },
        Row { cryst: "pmg", conway: "22*", thurston: "D2(2,2;R)", underlying: Disk, cones: &[2, 2], corners: &[], boundary: true },
        Row { cryst: "pgg", conway: "22x", thurston: "RP2(2,2)", underlying: ProjectivePlane, cones: &[2, 2], corners: &[], boundary: false },
        Row { cryst: "cmm", conway: "2*22", thurston: "D2(2;2,2)", underlying: Disk, cones: &[2], corners: &[2, 2], boundary: true },
        Row { cryst: "p4", conway: "442", thurston: "S2(2,4,4)", underlying: Sphere, cones: &[2, 4, 4], corners: &[], boundary: false },
        Row { cryst: "p4m", conway: "*442", thurston: "D2(;2,4,4)", underlying: Disk, cones: &[], corners: &[2, 4, 4], boundary: true },
        Row { cryst: "p4g", conway: "4*2", thurston: "D2(4;2)", underlying: Disk, cones: &[4], corners: &[2], boundary: true },
        Row { cryst: "p3", conway: "333", thurston: "S2(3,3,3)", underlying: Sphere, cones: &[3, 3, 3], corners: &[], boundary: false },
        Row { cryst: "p3m1", conway: "*333", thurston: "D2(;3,3,3)", underlying: Disk, cones: &[], corners: &[3, 3, 3], boundary: true },
        Row { cryst: "p31m", conway: "3*3", thurston: "D2(3;3)", underlying: Disk, cones: &[3], corners: &[3], boundary: true },
        Row { cryst: "p6", conway: "632", thurston: "S2(2,3,6)", underlying: Sphere, cones: &[2, 3, 6], corners: &[], boundary: false },
        Row { cryst: "p6m", conway: "*632", thurston: "D2(;2,3,6)", underlying: Disk, cones: &[], corners: &[2, 3, 6], boundary: true },
    ]
};

/// Crystallographic names of the 17 types, in table order.
pub const CRYSTALLOGRAPHIC_NAMES: [&str; 17] = [
    "p1", "p2", "pm", "pg", "cm", "pmm", "pmg", "pgg", "cmm", "p4", "p4m", "p4g", "p3", "p3m1", "p31m", "p6", "p6m",
];

fn build(r: &Row) -> OrbifoldSignature {
    OrbifoldSignature {
        orientable: matches!(r.underlying, Underlying::Sphere | Underlying::Torus),
        has_boundary_reflector: r.boundary,
        underlying: r.underlying,
        cone_orders: r.cones.to_vec(),
        corner_orders: r.corners.to_vec(),
        names: Names {
            thurston: r.thurston.into(),
            conway: r.conway.into(),
            crystallographic: r.cryst.into(),
        },
    }
}

/// All 17 Euclidean 2-orbifold signatures.
pub fn all_signatures() -> Vec<OrbifoldSignature> {
    TABLE.iter().map(build).collect()
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '²' => '2',
            '×' => 'x',
            '∘' | '°' => 'o',
            c => c,
        })
        .collect::<String>()
        .to_lowercase()
}

/// Looks a signature up by crystallographic, Conway or Thurston name.
pub fn signature(name: &str) -> Result<OrbifoldSignature> {
    let key = normalize(name);
    // alternate spellings of D2(2,2;R)
    let key = match key.as_str() {
        "d2(2,2;)" | "d2(2;2;)" | "d2(2,2;r)" => "22*".to_string(),
        "t2" | "torus" => "o".to_string(),
        _ => key,
    };
    TABLE
        .iter()
        .find(|r| [r.cryst, r.conway, r.thurston].iter().any(|n| normalize(n) == key))
        .map(build)
        .ok_or_else(|| Error::UnknownModel(name.to_string()))
}

/// `χ(|F|) − Σ(1 − 1/aᵢ) − ½·Σ(1 − 1/bⱼ)`.
pub fn euler_characteristic(s: &OrbifoldSignature) -> BigRational {
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let term = |n: u32| &one - BigRational::new(1.into(), n.into());
    let mut chi = BigRational::from_integer(s.underlying.euler_characteristic().into());
    for &a in &s.cone_orders {
        chi -= term(a);
    }
    for &b in &s.corner_orders {
        chi -= &half * term(b);
    }
    chi
}
