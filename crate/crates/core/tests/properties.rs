use std::collections::BTreeSet;

use proptest::prelude::*;

use orbiforge::exactgeom::{Isometry, Mat2, QuadNum, Vec2};
use orbiforge::fpgroup::Word;
use orbiforge::Error;
use orbiforge::presfile::{parse_presentation, render_presentation};
use orbiforge::wallpaper::{all_models, OrbifoldSignature, SubgroupHandle, CRYSTALLOGRAPHIC_NAMES};

fn quad() -> impl Strategy<Value = QuadNum> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| QuadNum::from_ratios(a, b, c, d))
}

fn point() -> impl Strategy<Value = Vec2> {
    (quad(), quad()).prop_map(|(x, y)| Vec2::new(x, y))
}

/// Multiples of 30° whose rotation has order at most 6.
fn crystallographic_k() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![0i64, 2, 3, 4, 6, 8, 9, 10])
}

fn isometry() -> impl Strategy<Value = Isometry> {
    prop_oneof![
        point().prop_map(Isometry::translation),
        (crystallographic_k(), point()).prop_map(|(k, c)| Isometry::rotation_about(k, &c)),
        (0i64..12, point()).prop_map(|(k, p)| Isometry::reflection_through(k, &p)),
        (0i64..12, point(), point()).prop_map(|(k, p, t)| Isometry::reflection_through(k, &p).compose(&Isometry::translation(t))),
    ]
}

fn expected_torsion(s: &OrbifoldSignature) -> BTreeSet<u32> {
    let mut out: BTreeSet<u32> = s.singular_orders().flat_map(|n| (2..=n).filter(move |d| n % d == 0)).collect();
    if s.has_boundary_reflector {
        out.insert(2);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(f in isometry(), g in isometry(), h in isometry()) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
    }

    #[test]
    fn composition_acts_on_points(f in isometry(), g in isometry(), p in point()) {
        prop_assert_eq!(f.compose(&g).apply(&p), f.apply(&g.apply(&p)));
        prop_assert!(f.compose(&f.inverse()).is_identity());
    }

    #[test]
    fn classification_reconstructs(f in isometry()) {
        let c = f.classify().unwrap();
        prop_assert_eq!(c.reconstruct().unwrap(), f);
    }

    #[test]
    fn rotation_orders(k in 0i64..12) {
        let r = Mat2::rotation(k);
        let n = 12 / num_integer::gcd(k, 12);
        prop_assert!(r.pow(n as u32).is_identity());
        if n <= 6 {
            prop_assert_eq!(r.order().unwrap() as i64, n);
        } else {
            prop_assert_eq!(r.order(), Err(Error::NonCrystallographic));
            prop_assert_eq!(Isometry::rotation_about(k, &Vec2::zero()).classify(), Err(Error::NonCrystallographic));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(m in 0usize..17, u in prop::collection::vec(1i32..=3, 0..8), w in prop::collection::vec(1i32..=3, 0..8), flip in any::<u16>()) {
        let g = all_models().swap_remove(m);
        let n = g.presentation().num_generators() as i32;
        let signed = |v: Vec<i32>| Word::from_letters(v.into_iter().enumerate().map(|(i, l)| {
            let l = (l - 1) % n + 1;
            if flip >> (i % 16) & 1 == 1 { -l } else { l }
        }));
        let (u, w) = (signed(u), signed(w));
        prop_assert_eq!(g.evaluate(&u.mul(&w)), g.evaluate(&u).compose(&g.evaluate(&w)));
        prop_assert!(g.evaluate(&u.mul(&u.inverse())).is_identity());
    }

    #[test]
    fn random_subgroups_classify(m in 0usize..17, i in 1i64..=3, j in 1i64..=3, extra in prop::collection::vec(-3i32..=3, 0..5)) {
        let g = all_models().swap_remove(m);
        let n = g.presentation().num_generators() as i32;
        let [t1, t2] = g.translation_words().clone();
        let w = Word::from_letters(extra.into_iter().filter(|&l| l != 0).map(|l| l.signum() * ((l.abs() - 1) % n + 1)));
        let h = SubgroupHandle::new(&g, &[t1.pow(i), t2.pow(j), w]).unwrap();
        let s = h.classify().unwrap();
        let (lhs, rhs) = h.index_identity().unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(h.torsion_orders().unwrap(), expected_torsion(&s));
        let pg = h.point_group().unwrap();
        prop_assert_eq!(s.orientable, pg.iter().all(|x| x.det_sign() == 1));
        prop_assert!(CRYSTALLOGRAPHIC_NAMES.contains(&s.crystallographic()));
    }

    #[test]
    fn presentations_round_trip(ngens in 1usize..4, rels in prop::collection::vec(prop::collection::vec(-3i32..=3, 1..8), 0..4)) {
        let gens: Vec<String> = (0..ngens).map(|i| format!("g{i}")).collect();
        let mut text = format!("group rt\ngens {}\n", gens.join(" "));
        for r in &rels {
            let w = Word::from_letters(r.iter().filter(|&&l| l != 0).map(|&l| l.signum() * ((l.abs() - 1) % ngens as i32 + 1)));
            text += &format!("rel {}\n", if w.is_empty() { "1".to_string() } else { w.render(&gens) });
        }
        let p = parse_presentation(&text).unwrap();
        let again = parse_presentation(&render_presentation(&p)).unwrap();
        prop_assert_eq!(p, again);
    }
}
