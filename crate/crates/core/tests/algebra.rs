mod common;

use common::{from_module, Letter, Oracle};
use proptest::prelude::*;
use verma_core::liealg::generators_up_to;
use verma_core::{
    bracket, AlgebraKind, Generator, HighestWeight, LieCombo, ModuleVector, Monomial, Scalar, Space, Verma,
};

fn space() -> Space {
    Space::new(&["x", "y"]).unwrap()
}

/// `(a + b x + c y + d x y) / (e + x^2)`; the denominator never vanishes at
/// rational points with `e > 0`.
fn scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, -5i64..=5, -5i64..=5, -3i64..=3, 1i64..=4).prop_map(|(a, b, c, d, e)| {
        let sp = space();
        let x = Scalar::param(&sp, "x").unwrap();
        let y = Scalar::param(&sp, "y").unwrap();
        let num =
            Scalar::from_int(a) + Scalar::from_int(b) * &x + Scalar::from_int(c) * &y + Scalar::from_int(d) * &x * &y;
        num / (Scalar::from_int(e) + &x * &x)
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

fn partition(max_sum: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 0..=3).prop_map(move |mut v| {
        while v.iter().sum::<u32>() > max_sum {
            v.pop();
        }
        v
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (partition(3), partition(3)).prop_map(|(w, l)| Monomial::new(w, l))
}

fn kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![Just(AlgebraKind::W22), Just(AlgebraKind::HV)]
}

fn generator(kind: AlgebraKind, bound: i64) -> impl Strategy<Value = Generator> {
    (any::<bool>(), -bound..=bound).prop_map(move |(l, n)| if l { Generator::L(n) } else { Generator::second(kind, n) })
}

fn weight(kind: AlgebraKind, a: Scalar, b: Scalar, c: Scalar) -> HighestWeight {
    match kind {
        AlgebraKind::W22 => HighestWeight::w22(a, b, c).unwrap(),
        AlgebraKind::HV => HighestWeight::hv(a.clone(), Scalar::zero(), b.clone() + Scalar::one(), c, a + b).unwrap(),
    }
}

fn combo_bracket(x: &LieCombo, y: &LieCombo, kind: AlgebraKind) -> LieCombo {
    let mut out = LieCombo::new();
    for (a, s) in x.iter() {
        for (b, t) in y.iter() {
            out = out.add(&bracket(*a, *b, kind).unwrap().scaled(&(s * t)));
        }
    }
    out
}

fn single(g: Generator) -> LieCombo {
    let mut c = LieCombo::new();
    c.add_term(g, Scalar::one());
    c
}

fn letter(g: Generator) -> Letter {
    match g {
        Generator::L(n) => Letter::L(n),
        Generator::W(n) | Generator::I(n) => Letter::X(n),
        Generator::Central(_) => unreachable!(),
    }
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
            prop_assert_eq!(a.inverse().unwrap().inverse().unwrap(), a.clone());
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(a in scalar(), b in scalar(), x in rational(), y in rational()) {
        let at = |s: &Scalar| s.substitute(&[("x", x.clone()), ("y", y.clone())]).unwrap();
        prop_assert_eq!(at(&(&a + &b)), at(&a) + at(&b));
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert!(at(&a).is_constant());
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&space(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn antisymmetry_and_grading(k in kind(), n in -12i64..=12, m in -12i64..=12, la in any::<bool>(), lb in any::<bool>()) {
        let a = if la { Generator::L(n) } else { Generator::second(k, n) };
        let b = if lb { Generator::L(m) } else { Generator::second(k, m) };
        let ab = bracket(a, b, k).unwrap();
        let ba = bracket(b, a, k).unwrap();
        prop_assert!(ab.add(&ba).is_zero());
        for (g, _) in ab.iter() {
            prop_assert_eq!(g.grade(), if g.is_central() { 0 } else { a.grade() + b.grade() });
        }
    }

    #[test]
    fn jacobi(k in kind(), a in generator(AlgebraKind::W22, 6), b in generator(AlgebraKind::W22, 6), c in generator(AlgebraKind::W22, 6)) {
        let fix = |g: Generator| match g {
            Generator::W(n) => Generator::second(k, n),
            g => g,
        };
        let (a, b, c) = (single(fix(a)), single(fix(b)), single(fix(c)));
        let t1 = combo_bracket(&a, &combo_bracket(&b, &c, k), k);
        let t2 = combo_bracket(&b, &combo_bracket(&c, &a, k), k);
        let t3 = combo_bracket(&c, &combo_bracket(&a, &b, k), k);
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn action_matches_reference(k in kind(), m in monomial(), seed in 0usize..4, n in -4i64..=4, l in any::<bool>(),
                                a in rational(), b in rational(), c in rational()) {
        let hw = weight(k, a, b, c);
        let v = Verma::new(hw.clone());
        let g = if l { Generator::L(n) } else { Generator::second(k, n) };
        let x = v.monomial(m.clone()).scale(&Scalar::from_int(seed as i64 + 1));
        let ours = v.act(g, &x).unwrap();
        let mut o = Oracle::new(&hw);
        let theirs = o.apply(&[letter(g)], &from_module(&x));
        prop_assert_eq!(from_module(&ours), theirs);
    }

    #[test]
    fn action_respects_bracket(k in kind(), m in monomial(), a in generator(AlgebraKind::W22, 3), b in generator(AlgebraKind::W22, 3),
                               p in rational(), q in rational(), r in rational()) {
        let fix = |g: Generator| match g {
            Generator::W(n) => Generator::second(k, n),
            g => g,
        };
        let (a, b) = (fix(a), fix(b));
        let hw = weight(k, p, q, r);
        let v = Verma::new(hw.clone());
        let x = v.monomial(m);
        let lhs = v.act(a, &v.act(b, &x).unwrap()).unwrap().sub(&v.act(b, &v.act(a, &x).unwrap()).unwrap());
        let mut rhs = ModuleVector::zero(k, lhs.level());
        for (g, c) in bracket(a, b, k).unwrap().iter() {
            let y = match g {
                Generator::Central(z) => x.scale(&hw.central_value(*z)),
                g => v.act(*g, &x).unwrap(),
            };
            if y.level() == rhs.level() {
                rhs.add_scaled(&y, c);
            }
        }
        prop_assert_eq!(lhs.terms(), rhs.terms());
    }
}

#[test]
fn symbolic_action_matches_reference() {
    let sp = Space::new(&["c", "h", "hW"]).unwrap();
    let p = |n: &str| Scalar::param(&sp, n).unwrap();
    let hw = HighestWeight::w22(p("c"), p("h"), p("hW")).unwrap();
    let v = Verma::new(hw.clone());
    let mut o = Oracle::new(&hw);
    for level in 0..=3u32 {
        for m in verma_core::verma::weight_space_basis(level) {
            let x = v.monomial(m);
            for g in generators_up_to(AlgebraKind::W22, 3) {
                if g.is_central() {
                    continue;
                }
                assert_eq!(from_module(&v.act(g, &x).unwrap()), o.apply(&[letter(g)], &from_module(&x)), "{g} on {x}");
            }
        }
    }
}

#[test]
fn hv_action_examples() {
    let sp = Space::new(&["h", "hI", "cLI"]).unwrap();
    let p = |n: &str| Scalar::param(&sp, n).unwrap();
    let hw = HighestWeight::hv(Scalar::from_int(1), Scalar::zero(), p("cLI"), p("h"), p("hI")).unwrap();
    let v = Verma::new(hw);
    let l1 = v.act(Generator::L(-1), &v.vacuum()).unwrap();
    let i1 = v.act(Generator::I(-1), &v.vacuum()).unwrap();
    assert_eq!(v.act(Generator::I(1), &l1).unwrap(), v.vacuum().scale(&p("hI")));
    assert_eq!(v.act(Generator::L(1), &i1).unwrap(), v.vacuum().scale(&(p("hI") - Scalar::from_int(2) * p("cLI"))));
    assert_eq!(v.act(Generator::L(1), &l1).unwrap(), v.vacuum().scale(&(Scalar::from_int(2) * p("h"))));
    assert!(v.act(Generator::I(1), &i1).unwrap().is_zero());
}

#[test]
fn w22_action_examples() {
    let sp = Space::new(&["c", "h", "hW"]).unwrap();
    let p = |n: &str| Scalar::param(&sp, n).unwrap();
    let v = Verma::new(HighestWeight::w22(p("c"), p("h"), p("hW")).unwrap());
    let x = v.act(Generator::L(-2), &v.vacuum()).unwrap();
    let expect = Scalar::from_int(4) * p("hW") + Scalar::from_ratio(1, 2) * p("c");
    assert_eq!(v.act(Generator::W(2), &x).unwrap(), v.vacuum().scale(&expect));
    let y = v.act(Generator::W(-1), &v.vacuum()).unwrap();
    assert!(v.act(Generator::W(1), &y).unwrap().is_zero());
    assert_eq!(v.act(Generator::L(1), &y).unwrap(), v.vacuum().scale(&(Scalar::from_int(2) * p("hW"))));
}
