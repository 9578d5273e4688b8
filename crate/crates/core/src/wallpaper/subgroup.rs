use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::models::{close_linear, ModelGroup};
use super::signature::{signature, OrbifoldSignature};
use crate::cosetenum::{default_max_cosets, schreier_generators, todd_coxeter, CosetTable};
use crate::error::{Error, Result};
use crate::exactgeom::{Isometry, Mat2, Vec2};
use crate::fpgroup::{SignHom, Word};
use crate::lattice::Lattice2;

type Q = BigRational;
type IMat = [[i64; 2]; 2];
type QVec = [Q; 2];

/// A finite-index subgroup of a model group, given by a complete coset table.
#[derive(Debug)]
pub struct SubgroupHandle {
    model: ModelGroup,
    words: Vec<Word>,
    table: CosetTable,
    analysis: OnceLock<Result<Analysis>>,
}

impl Clone for SubgroupHandle {
    fn clone(&self) -> Self {
        SubgroupHandle {
            model: self.model.clone(),
            words: self.words.clone(),
            table: self.table.clone(),
            analysis: OnceLock::new(),
        }
    }
}

impl SubgroupHandle {
    pub fn new(model: &ModelGroup, words: &[Word]) -> Result<Self> {
        let table = todd_coxeter(model.presentation(), words, default_max_cosets())?;
        Ok(SubgroupHandle { model: model.clone(), words: words.to_vec(), table, analysis: OnceLock::new() })
    }

    pub fn whole(model: &ModelGroup) -> Result<Self> {
        let gens: Vec<Word> = (0..model.presentation().num_generators()).map(Word::gen).collect();
        SubgroupHandle::new(model, &gens)
    }

    /// The kernel of a homomorphism to Z/2.
    pub fn kernel(model: &ModelGroup, h: &SignHom) -> Result<Self> {
        if !h.respects(model.presentation()) {
            return Err(Error::InvalidArgument(format!(
                "{} does not define a homomorphism on {}",
                h.render(model.presentation()),
                model.name()
            )));
        }
        if h.is_trivial() {
            return SubgroupHandle::whole(model);
        }
        SubgroupHandle::new(model, &h.kernel_generators())
    }

    pub fn model(&self) -> &ModelGroup {
        &self.model
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// `[G : H]`.
    pub fn index(&self) -> usize {
        self.table.index()
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.table.contains(w)
    }

    fn analysis(&self) -> Result<&Analysis> {
        self.analysis.get_or_init(|| Analysis::compute(self)).as_ref().map_err(Clone::clone)
    }

    /// `Λ_H`, the translations of the model lattice lying in `H`.
    pub fn translation_lattice(&self) -> Result<Lattice2> {
        Ok(self.analysis()?.lattice.clone())
    }

    /// `[Λ_G : Λ_H]`.
    pub fn lattice_index(&self) -> Result<usize> {
        let a = self.analysis()?;
        Ok((a.hnf.0 * a.hnf.2) as usize)
    }

    /// The point group `P(H)`.
    pub fn point_group(&self) -> Result<Vec<Mat2>> {
        Ok(self.analysis()?.point_group.clone())
    }

    pub fn classify(&self) -> Result<OrbifoldSignature> {
        signature(self.analysis()?.classify()?)
    }

    /// Orders of the torsion elements of `H`.
    pub fn torsion_orders(&self) -> Result<BTreeSet<u32>> {
        let a = self.analysis()?;
        let mut out = BTreeSet::new();
        for c in &a.classes {
            if det(&c.m) == 1 && c.m != IDENTITY {
                out.insert(order(&c.m)?);
            } else if det(&c.m) == -1 && a.has_reflection(c) {
                out.insert(2);
            }
        }
        Ok(out)
    }

    /// `[G:H]·|P(H)| = [Λ_G:Λ_H]·|P(G)|`.
    pub fn index_identity(&self) -> Result<(usize, usize)> {
        let lhs = self.index() * self.point_group()?.len();
        let rhs = self.lattice_index()? * self.model.point_group().len();
        Ok((lhs, rhs))
    }
}

const IDENTITY: IMat = [[1, 0], [0, 1]];

fn det(m: &IMat) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn order(m: &IMat) -> Result<u32> {
    let mut p = *m;
    for k in 1..=6 {
        if p == IDENTITY {
            return Ok(k);
        }
        p = mat_mul(&p, m);
    }
    Err(Error::NonCrystallographic)
}

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn apply(m: &IMat, v: &QVec) -> QVec {
    [
        qi(m[0][0]) * &v[0] + qi(m[0][1]) * &v[1],
        qi(m[1][0]) * &v[0] + qi(m[1][1]) * &v[1],
    ]
}

fn add(u: &QVec, v: &QVec) -> QVec {
    [&u[0] + &v[0], &u[1] + &v[1]]
}

fn sub(u: &QVec, v: &QVec) -> QVec {
    [&u[0] - &v[0], &u[1] - &v[1]]
}

fn mat_sub(a: &IMat, b: &IMat) -> IMat {
    [[a[0][0] - b[0][0], a[0][1] - b[0][1]], [a[1][0] - b[1][0], a[1][1] - b[1][1]]]
}

fn mat_add(a: &IMat, b: &IMat) -> IMat {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

/// Rational gcd: the positive generator of `Zx + Zy`.
fn qgcd(x: &Q, y: &Q) -> Q {
    let num = (x.numer() * y.denom()).gcd(&(y.numer() * x.denom()));
    Q::new(num, x.denom() * y.denom())
}

/// An element class `(m, v + Λ_H)` of `H/Λ_H`, in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Class {
    m: IMat,
    v: QVec,
}

#[derive(Debug)]
struct Analysis {
    /// `Λ_H = Z(a, b) + Z(0, d)` in coordinates of the model lattice.
    hnf: (i64, i64, i64),
    lattice: Lattice2,
    classes: Vec<Class>,
    point_group: Vec<Mat2>,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Hermite basis `(a, b), (0, d)` of the lattice spanned by `pts`.
fn hermite(pts: &[(i64, i64)]) -> Option<(i64, i64, i64)> {
    let mut row: Option<(i64, i64)> = None;
    let mut d = 0i64;
    for &(x, y) in pts {
        match row {
            None if x == 0 => d = d.gcd(&y),
            None => row = Some(if x < 0 { (-x, -y) } else { (x, y) }),
            Some((a, b)) => {
                if x == 0 {
                    d = d.gcd(&y);
                    continue;
                }
                let (g, s, t) = ext_gcd(a, x);
                let nb = s * b + t * y;
                d = d.gcd(&((x / g) * b - (a / g) * y));
                row = Some((g, nb));
            }
        }
    }
    let (a, b) = row?;
    (d != 0).then(|| (a, b.rem_euclid(d), d))
}

impl Analysis {
    fn compute(h: &SubgroupHandle) -> Result<Analysis> {
        let model = &h.model;
        let [t1, t2] = model.translation_words().clone();
        let table = &h.table;
        let k = table.index() as i64;

        let mut pts = Vec::new();
        let mut c = 0usize;
        for i in 0..=k {
            let mut e = c;
            for j in 0..=k {
                if e == 0 && (i, j) != (0, 0) {
                    pts.push((i, j));
                }
                e = table.trace(&t2, e)?;
            }
            c = table.trace(&t1, c)?;
        }
        let hnf = hermite(&pts).ok_or_else(|| Error::Invariant("translation subgroup is not of full rank".into()))?;
        let (a, b, d) = hnf;
        let base = model.lattice();
        let lattice = Lattice2::new(base.point(a, b), base.point(0, d))?;

        let frame = Frame::new(&base)?;
        let gens: Vec<Isometry> = schreier_generators(table)?.iter().map(|w| model.evaluate(w)).collect();
        let point_group = close_linear(gens.iter().map(|f| f.linear().clone()).collect());
        let gen_classes = gens.iter().map(|f| frame.class(f)).collect::<Result<Vec<_>>>()?;

        let mut an = Analysis { hnf, lattice, classes: Vec::new(), point_group };
        an.close(gen_classes)?;
        if an.classes.len() != an.point_group.len() {
            return Err(Error::Invariant(format!(
                "{} classes in H/Λ_H but |P(H)| = {}",
                an.classes.len(),
                an.point_group.len()
            )));
        }
        Ok(an)
    }

    fn l1(&self) -> QVec {
        [qi(self.hnf.0), qi(self.hnf.1)]
    }

    fn l2(&self) -> QVec {
        [Q::zero(), qi(self.hnf.2)]
    }

    fn lambda(&self, i: i64, j: i64) -> QVec {
        let (a, b, d) = self.hnf;
        [qi(i * a), qi(i * b + j * d)]
    }

    /// Canonical representative of `v + Λ_H`.
    fn reduce(&self, v: &QVec) -> QVec {
        let (a, b, d) = self.hnf;
        let alpha = (&v[0] / qi(a)).floor().to_integer();
        let x = &v[0] - Q::from_integer(&alpha * a);
        let y = &v[1] - Q::from_integer(&alpha * b);
        let beta = (&y / qi(d)).floor().to_integer();
        [x, y - Q::from_integer(beta * d)]
    }

    fn in_lattice(&self, v: &QVec) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    fn close(&mut self, gens: Vec<Class>) -> Result<()> {
        let mut by_m: HashMap<IMat, QVec> = HashMap::new();
        let id = Class { m: IDENTITY, v: [Q::zero(), Q::zero()] };
        by_m.insert(IDENTITY, id.v.clone());
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(c) = queue.pop_front() {
            for g in &gens {
                let m = mat_mul(&c.m, &g.m);
                let v = self.reduce(&add(&apply(&c.m, &g.v), &c.v));
                match by_m.get(&m) {
                    Some(old) if *old != v => {
                        return Err(Error::Invariant("two translation classes share a linear part".into()))
                    }
                    Some(_) => {}
                    None => {
                        by_m.insert(m, v.clone());
                        let nc = Class { m, v };
                        order.push(nc.clone());
                        queue.push_back(nc);
                    }
                }
            }
        }
        self.classes = order;
        Ok(())
    }

    /// Whether the coset `(m, v + Λ_H)` of an orientation-reversing class holds a reflection.
    fn has_reflection(&self, c: &Class) -> bool {
        let p = mat_add(&c.m, &IDENTITY);
        let w = apply(&p, &c.v);
        let g1 = apply(&p, &self.l1());
        let g2 = apply(&p, &self.l2());
        let axis = if p[0][0] != 0 || p[1][0] != 0 { 0 } else { 1 };
        let e = [qi(p[0][axis]), qi(p[1][axis])];
        let i = if e[0].is_zero() { 1 } else { 0 };
        let scalar = |u: &QVec| &u[i] / &e[i];
        let g = qgcd(&scalar(&g1), &scalar(&g2));
        if g.is_zero() {
            return w[0].is_zero() && w[1].is_zero();
        }
        (scalar(&w) / g).is_integer()
    }

    fn reflecting(&self) -> Vec<&Class> {
        self.classes.iter().filter(|c| det(&c.m) == -1 && self.has_reflection(c)).collect()
    }

    fn on_mirror(&self, p: &QVec) -> bool {
        self.reflecting()
            .iter()
            .any(|c| self.in_lattice(&sub(&apply(&mat_sub(&IDENTITY, &c.m), p), &c.v)))
    }

    /// Fixed points of the rotations in class `c`, one per `λ` in a box covering `Λ_H/(I−r)Λ_H`.
    fn centers(&self, c: &Class) -> Vec<QVec> {
        let s = mat_sub(&IDENTITY, &c.m);
        let n = det(&s);
        let inv = [[qi(s[1][1]) / qi(n), qi(-s[0][1]) / qi(n)], [qi(-s[1][0]) / qi(n), qi(s[0][0]) / qi(n)]];
        let mut out = Vec::new();
        for i in 0..n.abs() {
            for j in 0..n.abs() {
                let u = add(&c.v, &self.lambda(i, j));
                out.push([&inv[0][0] * &u[0] + &inv[0][1] * &u[1], &inv[1][0] * &u[0] + &inv[1][1] * &u[1]]);
            }
        }
        out
    }

    fn all_centers_on_mirrors(&self, ord: u32) -> Result<bool> {
        for c in &self.classes {
            if det(&c.m) == 1 && c.m != IDENTITY && order(&c.m)? == ord {
                if !self.centers(c).iter().all(|p| self.on_mirror(p)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Some glide axis of the orientation-reversing class is not a mirror.
    fn glide_axis_off_mirror(&self) -> bool {
        let four = qi(4);
        self.classes.iter().filter(|c| det(&c.m) == -1).any(|c| {
            let s = mat_sub(&IDENTITY, &c.m);
            [(0, 0), (0, 1), (1, 0), (1, 1)].iter().any(|&(i, j)| {
                let v = add(&c.v, &self.lambda(i, j));
                let p = apply(&s, &v).map(|x| x / &four);
                !self.on_mirror(&p)
            })
        })
    }

    fn classify(&self) -> Result<&'static str> {
        let mut n = 1;
        for c in self.classes.iter().filter(|c| det(&c.m) == 1) {
            n = n.max(order(&c.m)?);
        }
        let orientable = self.classes.iter().all(|c| det(&c.m) == 1);
        if orientable {
            return Ok(match n {
                1 => "p1",
                2 => "p2",
                3 => "p3",
                4 => "p4",
                _ => "p6",
            });
        }
        let mirrors = self.reflecting();
        if mirrors.is_empty() {
            return match n {
                1 => Ok("pg"),
                2 => Ok("pgg"),
                _ => Err(Error::Invariant(format!("{n}-fold rotations with glides but no mirrors"))),
            };
        }
        Ok(match n {
            1 => {
                if self.glide_axis_off_mirror() {
                    "cm"
                } else {
                    "pm"
                }
            }
            2 => {
                let directions: BTreeSet<IMat> = mirrors.iter().map(|c| c.m).collect();
                if directions.len() == 1 {
                    "pmg"
                } else if self.all_centers_on_mirrors(2)? {
                    "pmm"
                } else {
                    "cmm"
                }
            }
            3 => {
                if self.all_centers_on_mirrors(3)? {
                    "p3m1"
                } else {
                    "p31m"
                }
            }
            4 => {
                if self.all_centers_on_mirrors(4)? {
                    "p4m"
                } else {
                    "p4g"
                }
            }
            _ => "p6m",
        })
    }
}

/// Change of coordinates to the basis of the model lattice.
struct Frame {
    b: Mat2,
    b_inv: Mat2,
}

impl Frame {
    fn new(l: &Lattice2) -> Result<Frame> {
        let [u, v] = l.basis();
        let b = Mat2::new(u.x.clone(), v.x.clone(), u.y.clone(), v.y.clone());
        let b_inv = b.inverse()?;
        Ok(Frame { b, b_inv })
    }

    fn class(&self, f: &Isometry) -> Result<Class> {
        let m = self.b_inv.mul(f.linear()).mul(&self.b);
        let int = |x: &crate::exactgeom::QuadNum| -> Result<i64> {
            let r = x.to_rational().filter(|r| r.is_integer());
            let r = r.ok_or_else(|| Error::Invariant("linear part is not integral on the lattice".into()))?;
            i64::try_from(r.to_integer()).map_err(|_| Error::Invariant("matrix entry overflow".into()))
        };
        let m = [[int(&m.m11)?, int(&m.m12)?], [int(&m.m21)?, int(&m.m22)?]];
        let t: Vec2 = self.b_inv.apply(f.trans());
        let rat = |x: &crate::exactgeom::QuadNum| -> Result<Q> {
            x.to_rational().ok_or_else(|| Error::Invariant("translation part is irrational in lattice coordinates".into()))
        };
        Ok(Class { m, v: [rat(&t.x)?, rat(&t.y)?] })
    }
}
