use axial_core::algebra::{build_algebra, is_flexible, subalgebra_closure, Algebra};
use axial_core::axes::{automorphism_violation, check_axis, miyamoto};
use axial_core::catalog::{make_flex1, make_flex2};
use axial_core::classify::{classify_2gen, Case};
use axial_core::cli::AlgebraFile;
use axial_core::scalars::{parse_scalar, print_scalar};
use axial_core::spectral::{eigen_decompose, Side};
use axial_core::{Domain, Element, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=40).prop_map(|(n, d)| Domain::Rational.ratio(n, d).unwrap())
}

fn residue() -> impl Strategy<Value = Scalar> {
    (
        prop::sample::select(vec![3u64, 5, 7, 11, 13, 101]),
        any::<u64>(),
    )
        .prop_map(|(p, v)| Domain::prime_field(p).unwrap().residue(v).unwrap())
}

/// `(c₀ + c₁t + c₂t²) / (d₀ + d₁t + t²)`; the denominator is monic, so
/// never zero.
fn ratfunc() -> impl Strategy<Value = Scalar> {
    (
        prop::array::uniform3(-6i64..=6),
        prop::array::uniform2(-6i64..=6),
    )
        .prop_map(|(c, d)| {
            let dom = Domain::RationalFunction;
            let t = dom.indeterminate().unwrap();
            let poly = |k: &[i64]| {
                k.iter()
                    .rev()
                    .fold(dom.zero(), |acc, &x| &(&acc * &t) + &dom.int(x))
            };
            let den = &poly(&d) + &(&t * &t);
            &poly(&c) / &den
        })
}

/// Three scalars from one randomly chosen domain.
fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop_oneof![
        (rational(), rational(), rational()),
        (ratfunc(), ratfunc(), ratfunc()),
        (
            prop::sample::select(vec![3u64, 5, 7, 101]),
            any::<[u64; 3]>()
        )
            .prop_map(|(p, v)| {
                let d = Domain::prime_field(p).unwrap();
                (
                    d.residue(v[0]).unwrap(),
                    d.residue(v[1]).unwrap(),
                    d.residue(v[2]).unwrap(),
                )
            }),
    ]
}

fn any_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![rational(), residue(), ratfunc()]
}

/// A random algebra over GF(p) of dimension 2 or 3.
fn small_algebra() -> impl Strategy<Value = Algebra> {
    (prop::sample::select(vec![3u64, 5, 7]), 2usize..=3)
        .prop_flat_map(|(p, n)| (Just(p), Just(n), prop::collection::vec(0u64..p, n * n * n)))
        .prop_map(|(p, n, c)| {
            let d = Domain::prime_field(p).unwrap();
            let table = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            Element::new(
                                (0..n)
                                    .map(|k| d.residue(c[(i * n + j) * n + k]).unwrap())
                                    .collect(),
                            )
                            .unwrap()
                        })
                        .collect()
                })
                .collect();
            let names = (0..n).map(|i| format!("e{i}")).collect();
            build_algebra(d, n, names, table).unwrap()
        })
}

fn element_of(a: &Algebra, seed: &[u64]) -> Element {
    let d = a.domain();
    Element::new((0..a.dim()).map(|i| d.residue(seed[i]).unwrap()).collect()).unwrap()
}

/// λ ∉ {0, 1, 1/2} over ℚ.
fn generic_lambda() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("excluded value", |l| {
        let d = Domain::Rational;
        *l != d.zero() && *l != d.one() && *l != d.ratio(1, 2).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
            prop_assert_eq!(&(&y * &x) / &x, y.clone());
        }
    }

    #[test]
    fn print_parse_round_trip(x in any_scalar()) {
        let text = print_scalar(&x);
        prop_assert_eq!(parse_scalar(&text, x.domain()).unwrap(), x);
    }

    #[test]
    fn specialization_is_a_homomorphism(x in ratfunc(), y in ratfunc(), v in rational()) {
        let q = Domain::Rational;
        if let (Ok(xv), Ok(yv)) = (x.specialize(&v), y.specialize(&v)) {
            prop_assert_eq!((&x + &y).specialize(&v).unwrap(), &xv + &yv);
            prop_assert_eq!((&x * &y).specialize(&v).unwrap(), &xv * &yv);
            prop_assert_eq!(xv.domain(), q);
        }
    }

    #[test]
    fn operators_agree_with_products(a in small_algebra(), s in prop::array::uniform3(any::<u64>()), t in prop::array::uniform3(any::<u64>())) {
        let x = element_of(&a, &s);
        let y = element_of(&a, &t);
        let xy = a.mul(&x, &y);
        prop_assert_eq!(a.left_op(&x).apply(&y), xy.clone());
        prop_assert_eq!(a.right_op(&y).apply(&x), xy);
        prop_assert_eq!(a.mul(&x.add(&y), &y), a.mul(&x, &y).add(&a.square(&y)));
    }

    #[test]
    fn closure_is_a_subalgebra(a in small_algebra(), s in prop::array::uniform3(any::<u64>())) {
        let x = element_of(&a, &s);
        prop_assume!(!x.is_zero());
        let sub = subalgebra_closure(&a, std::slice::from_ref(&x)).unwrap();
        prop_assert!(sub.contains(&x));
        prop_assert!(a.products_within(&sub, &sub, &sub));
    }

    #[test]
    fn eigenspaces_are_eigenspaces(a in small_algebra(), s in prop::array::uniform3(any::<u64>())) {
        let x = element_of(&a, &s);
        for side in [Side::Left, Side::Right] {
            let d = eigen_decompose(&a, &x, side).unwrap();
            let m = side.operator(&a, &x);
            let total: usize = d.parts.iter().map(|p| p.space.dim()).sum();
            prop_assert!(total <= a.dim());
            prop_assert_eq!(d.complete, total == a.dim());
            for p in &d.parts {
                for v in p.space.basis() {
                    prop_assert_eq!(m.apply(v), v.scale(&p.value));
                }
            }
        }
    }

    #[test]
    fn algebra_files_round_trip(a in small_algebra()) {
        let f = AlgebraFile::from_algebra(&a);
        let back = AlgebraFile::parse(&f.to_json()).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_algebra().unwrap(), a);
    }

    #[test]
    fn flex_families_hold_for_every_lambda(l in generic_lambda()) {
        let d = Domain::Rational;
        let delta = &d.one() - &l;
        for e in [make_flex1(d, &l).unwrap(), make_flex2(d, &l).unwrap()] {
            prop_assert!(is_flexible(&e.algebra));
            for (g, (tl, tr)) in e.generators.iter().zip(&e.axis_types) {
                let r = check_axis(&e.algebra, g, tl.as_ref().unwrap(), tr.as_ref().unwrap()).unwrap();
                prop_assert!(r.is_jordan_axis());
                let tau = miyamoto(&e.algebra, g).unwrap();
                prop_assert!(tau.compose(&tau).is_identity());
                prop_assert_eq!(automorphism_violation(&e.algebra, &tau), None);
            }
            let [a, b] = &e.generators;
            let case = classify_2gen(&e.algebra, a, b).unwrap().case;
            prop_assert_eq!(&case, &e.expected);
            let expected_pair = (l.clone(), delta.clone());
            match case {
                Case::Flex1 { lambda, delta } | Case::Flex2 { lambda, delta } => prop_assert_eq!((lambda, delta), expected_pair),
                other => prop_assert!(false, "unexpected {}", other),
            }
        }
    }
}
