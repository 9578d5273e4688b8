use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::presfile::parse_presentation;

fn pres(text: &str) -> Presentation {
    parse_presentation(text).unwrap()
}

fn gamma() -> Presentation {
    pres("group G\ngens a b c d\nrel a^2\nrel b^2\nrel c^2\nrel d^2\nrel (a b)^6\nrel (b c)^3\nrel (c a)^2\nrel (a d)^2\nrel (b d)^2\nrel (c d)^3\n")
}

#[test]
fn abelianization_examples() {
    assert_eq!(abelianization(&gamma()), AbelianGroup::new(0, &[2, 2]));
    let fig8 = pres("gens x y\nrel x y^-1 x^-1 y x y^-1 x^-1 y x y^-1\n");
    assert_eq!(abelianization(&fig8), AbelianGroup::new(1, &[]));
    assert_eq!(abelianization(&pres("gens a\nrel a^6")), AbelianGroup::new(0, &[6]));
    assert_eq!(abelianization(&pres("gens a b\nrel a b a^-1 b^-1")).to_string(), "Z^2");
    assert!(abelianization(&pres("gens a\nrel a")).is_trivial());
}

#[test]
fn sign_hom_counts() {
    let p6 = pres("gens a b\nrel a^6\nrel b^3\nrel (a b)^2");
    let homs = sign_homs(&p6);
    assert_eq!(homs.len(), 1);
    assert_eq!(homs[0].signs(), &[-1, 1]);
    assert_eq!(sign_homs(&gamma()).len(), 3);
    assert!(sign_homs(&pres("gens a\nrel a^3")).is_empty());
}

#[test]
fn two_rank_matches_sign_hom_count() {
    for p in [gamma(), pres("gens a b\nrel a^6\nrel b^3\nrel (a b)^2"), pres("gens x y\nrel x^2 y^2")] {
        let r = abelianization(&p).two_rank();
        assert_eq!(sign_homs(&p).len(), (1usize << r) - 1, "{}", p.name());
    }
}

#[test]
fn kernel_generators_lie_in_kernel() {
    let g = gamma();
    for h in sign_homs(&g) {
        for w in h.kernel_generators() {
            assert_eq!(h.eval(&w), 1);
        }
    }
}

#[test]
fn sign_hom_parse() {
    let g = gamma();
    let h = SignHom::parse("b=-1, c=-1,d=-1", &g).unwrap();
    assert!(h.respects(&g));
    assert_eq!(h.render(&g), "a=+1,b=-1,c=-1,d=-1");
    assert!(SignHom::parse("e=-1", &g).is_err());
    assert!(!SignHom::parse("b=-1", &g).unwrap().respects(&g));
}

#[test]
fn quotient_appends() {
    let p = pres("group Z2\ngens a b\nrel a b a^-1 b^-1");
    let q = quotient(&p, &[p.word("a^2").unwrap()]).unwrap();
    assert_eq!(q.relators().len(), 2);
    assert_eq!(abelianization(&q), AbelianGroup::new(1, &[2]));
    assert!(quotient(&p, &[Word::gen(5)]).is_err());
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r))
}

fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut total = BigInt::from(0);
    for j in 0..n {
        let mut minor = IntMatrix::zeros(n - 1, n - 1);
        for i in 1..n {
            let mut cc = 0;
            for k in 0..n {
                if k != j {
                    minor.set(i - 1, cc, m.get(i, k).clone());
                    cc += 1;
                }
            }
        }
        let term = m.get(0, j) * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #[test]
    fn smith_form_is_valid(rows in small_matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(det(&s.u) == BigInt::from(1) || det(&s.u) == BigInt::from(-1));
        prop_assert!(det(&s.v) == BigInt::from(1) || det(&s.v) == BigInt::from(-1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j) == &BigInt::from(0));
                }
            }
        }
        let diag = s.d.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[0] >= BigInt::from(0));
            if w[0] == BigInt::from(0) {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            }
        }
    }

    #[test]
    fn free_reduction_is_idempotent(letters in proptest::collection::vec(prop_oneof![-3i32..0, 1i32..4], 0..30)) {
        let w = Word::from_letters(letters);
        prop_assert_eq!(Word::from_letters(w.letters().to_vec()), w.clone());
        for pair in w.letters().windows(2) {
            prop_assert!(pair[0] != -pair[1]);
        }
        prop_assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn abelianization_ignores_relator_order(
        rels in proptest::collection::vec(proptest::collection::vec(prop_oneof![-3i32..0, 1i32..4], 1..8), 1..5),
        seed in any::<u64>(),
    ) {
        let gens: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let words: Vec<Word> = rels.into_iter().map(Word::from_letters).collect();
        let mut shuffled = words.clone();
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        let a = abelianization(&Presentation::new("a", gens.clone(), words).unwrap());
        let b = abelianization(&Presentation::new("b", gens, shuffled).unwrap());
        prop_assert_eq!(a, b);
    }
}
