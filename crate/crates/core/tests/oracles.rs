//! Worked values for individual operations, checked against hand-derived
//! results and against each other.

use homalg::algebra::numbered_basis;
use homalg::catalog::{self, CatalogSpec};
use homalg::checkers::{self, classify, reevaluate, Class};
use homalg::constructions::{
    commutator_algebra, derived_algebra, forget_twist, is_algebra_morphism, plus_algebra, yau_twist,
};
use homalg::element::linear_combination;
use homalg::forms::{self, polarize_quadratic, PermutationTag};
use homalg::format::{parse_algebra, serialize_algebra};
use homalg::{AlgebraError, Element, HomAlgebra, Law, LinearMap, Scalar, StructureTensor};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

fn term(a: &HomAlgebra, i: usize, c: Scalar) -> Element {
    a.e(i).scale(&c)
}

fn twisted(name: &str) -> HomAlgebra {
    catalog::build_algebra(&CatalogSpec::named(name)).unwrap()
}

fn twisted_with(name: &str, params: &[Scalar]) -> HomAlgebra {
    catalog::build_algebra(&CatalogSpec::new(name, params.to_vec())).unwrap()
}

fn algebra_from(dim: usize, products: &[(usize, usize, usize, i64)]) -> HomAlgebra {
    let mut mu = StructureTensor::new(dim);
    for &(i, j, k, c) in products {
        mu.insert(i, j, k, s(c)).unwrap();
    }
    HomAlgebra::untwisted("test", numbered_basis("e", 0, dim), mu)
}

// ---- core algebra ----

#[test]
fn octonion_products_and_alpha() {
    let o = catalog::octonions();
    assert_eq!(o.multiply(&o.e(1), &o.e(2)).unwrap(), o.e(4));
    assert_eq!(o.multiply(&o.e(3), &o.e(5)).unwrap(), o.e(2));
    for i in 0..8 {
        assert_eq!(o.multiply(&o.e(0), &o.e(i)).unwrap(), o.e(i));
        assert_eq!(o.multiply(&o.e(i), &o.e(0)).unwrap(), o.e(i));
        assert!(o.multiply(&o.zero(), &o.e(i)).unwrap().is_zero());
    }
    let oa = catalog::octonions_twisted();
    assert_eq!(oa.apply_alpha(&oa.e(1)).unwrap(), oa.e(5));
    let twice = oa.apply_alpha(&oa.apply_alpha(&oa.e(1)).unwrap()).unwrap();
    assert_eq!(twice, oa.e(2));
    assert_eq!(o.apply_alpha(&o.e(3)).unwrap(), o.e(3));
    assert!(oa.check_multiplicativity().holds);
}

#[test]
fn scaled_unit_is_not_multiplicative() {
    let o = catalog::octonions();
    let mut diag = vec![s(1); 8];
    diag[0] = s(2);
    let text = serialize_algebra(&o);
    assert!(parse_algebra(&text).is_ok());
    let err = HomAlgebra::new("o2", o.basis().to_vec(), o.mu().clone(), LinearMap::diagonal(&diag));
    assert!(matches!(err, Err(AlgebraError::NotMultiplicative { i: 0, j: 0 })));
    let flagged = HomAlgebra::with_options("o2", o.basis().to_vec(), o.mu().clone(), LinearMap::diagonal(&diag), true)
        .unwrap();
    let r = flagged.check_multiplicativity();
    assert!(!r.holds);
    assert_eq!(r.witness.unwrap().indices, vec![0, 0]);
}

#[test]
fn linear_combinations() {
    let o = catalog::octonions();
    let zero = linear_combination(&[(s(1), o.e(1)), (s(-1), o.e(1))]).unwrap();
    assert!(zero.is_zero());
    let e12 = o.multiply(&o.e(1), &o.e(2)).unwrap();
    let e21 = o.multiply(&o.e(2), &o.e(1)).unwrap();
    assert!(linear_combination(&[(q(1, 2), e12), (q(1, 2), e21)]).unwrap().is_zero());
    assert_eq!(linear_combination(&[(s(2), o.e(4))]).unwrap(), term(&o, 4, s(2)));
}

#[test]
fn sagle4_round_trip_stays_maltsev() {
    let a = parse_algebra(&serialize_algebra(&catalog::sagle4())).unwrap();
    assert!(checkers::is_hom_maltsev(&a).holds);
}

// ---- forms ----

#[test]
fn associator_values() {
    let o = catalog::octonions();
    let oa = catalog::octonions_twisted();
    let v = forms::hom_associator(&o, &o.e(5), &o.e(6), &o.e(7)).unwrap();
    assert_eq!(v, term(&o, 3, s(-2)));
    assert!(forms::hom_associator(&o, &o.zero(), &o.e(1), &o.e(2)).unwrap().is_zero());
    let alpha2 = oa.alpha().pow(2);
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let plain = forms::hom_associator(&o, &o.e(i), &o.e(j), &o.e(k)).unwrap();
                let tw = forms::hom_associator(&oa, &oa.e(i), &oa.e(j), &oa.e(k)).unwrap();
                assert_eq!(tw, alpha2.apply(&plain).unwrap());
            }
        }
    }
}

#[test]
fn jacobian_values() {
    let sagle = catalog::sagle4();
    let j = forms::hom_jacobian(&sagle, &sagle.e(0), &sagle.e(1), &sagle.e(2)).unwrap();
    assert_eq!(j, term(&sagle, 3, s(-6)));
    for x in 0..4 {
        for y in 0..4 {
            assert!(forms::hom_jacobian(&sagle, &sagle.e(x), &sagle.e(x), &sagle.e(y))
                .unwrap()
                .is_zero());
        }
    }
    let minus = commutator_algebra(&catalog::octonions_twisted());
    let j = forms::hom_jacobian(&minus, &minus.e(5), &minus.e(6), &minus.e(7)).unwrap();
    assert_eq!(j, term(&minus, 4, s(-12)));
}

#[test]
fn commutator_and_jordan_product() {
    let o = catalog::octonions();
    assert_eq!(forms::commutator(&o, &o.e(1), &o.e(2)).unwrap(), term(&o, 4, s(2)));
    assert!(forms::jordan_product(&o, &o.e(1), &o.e(2)).unwrap().is_zero());
    for i in 0..8 {
        let x = o.e(i);
        assert!(forms::commutator(&o, &x, &x).unwrap().is_zero());
        assert!(forms::commutator(&o, &o.e(0), &x).unwrap().is_zero());
        assert_eq!(forms::jordan_product(&o, &o.e(0), &x).unwrap(), x);
        assert_eq!(forms::jordan_product(&o, &x, &x).unwrap(), o.multiply(&x, &x).unwrap());
    }
}

#[test]
fn cyclic_associator_values() {
    let o = catalog::octonions();
    let v = forms::cyclic_associator(&o, &o.e(5), &o.e(6), &o.e(7)).unwrap();
    assert_eq!(v, term(&o, 3, s(-6)));

    let m5 = catalog::myung5();
    let minus = commutator_algebra(&m5);
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                let (x, y, z) = (m5.e(i), m5.e(j), m5.e(k));
                let twice = forms::cyclic_associator(&m5, &x, &y, &z).unwrap().scale(&s(2));
                assert_eq!(twice, forms::hom_jacobian(&minus, &x, &y, &z).unwrap());
            }
        }
    }

    let one = algebra_from(1, &[(0, 0, 0, 1)]);
    assert!(forms::cyclic_associator(&one, &one.e(0), &one.e(0), &one.e(0)).unwrap().is_zero());
}

#[test]
fn bruck_kleinfeld_functions_on_twisted_octonions() {
    let oa = catalog::octonions_twisted();
    let e = |i| oa.e(i);
    let f = forms::bruck_kleinfeld_f(&oa, &e(1), &e(2), &e(3), &e(4)).unwrap();
    let sum = forms::bracket_associator_sum(&oa, &e(1), &e(2), &e(3), &e(4)).unwrap();
    assert_eq!(f, sum);
    for (i, j, k) in [(1, 2, 3), (5, 6, 7), (0, 3, 6)] {
        assert!(forms::bruck_kleinfeld_f(&oa, &e(i), &e(i), &e(j), &e(k)).unwrap().is_zero());
    }
    let args: Vec<Element> = [2, 3, 5, 7].iter().map(|&i| e(i)).collect();
    let permuted = PermutationTag::Xi.apply(&args);
    let big = forms::big_f_function(&oa, &args[0], &args[1], &args[2], &args[3]).unwrap();
    let big_xi = forms::big_f_function(&oa, &permuted[0], &permuted[1], &permuted[2], &permuted[3]).unwrap();
    assert_eq!(big_xi, -&big);
    assert_eq!(big, forms::bruck_kleinfeld_f(&oa, &args[0], &args[1], &args[2], &args[3]).unwrap().scale(&s(3)));

    let g = |u, v, w, x, y| forms::g_function(&oa, &e(u), &e(v), &e(w), &e(x), &e(y)).unwrap();
    assert!(g(1, 2, 1, 3, 4).is_zero());
    assert!(g(1, 2, 3, 4, 4).is_zero());
}

#[test]
fn forms_vanish_on_associative_algebras() {
    // 2×2 matrix units E11, E12, E21, E22
    let idx = |r: usize, c: usize| 2 * r + c;
    let mut products = Vec::new();
    for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for d in 0..2 {
            products.push((idx(r, c), idx(c, d), idx(r, d), 1));
        }
    }
    let m = algebra_from(4, &products);
    assert!(checkers::is_hom_associative(&m).holds);
    let e = |i| m.e(i);
    for t in [[0, 1, 2, 3], [1, 2, 1, 3], [3, 2, 1, 0]] {
        assert!(forms::bruck_kleinfeld_f(&m, &e(t[0]), &e(t[1]), &e(t[2]), &e(t[3])).unwrap().is_zero());
        assert!(forms::big_f_function(&m, &e(t[0]), &e(t[1]), &e(t[2]), &e(t[3])).unwrap().is_zero());
        assert!(forms::g_function(&m, &e(t[0]), &e(t[1]), &e(t[2]), &e(t[3]), &e(0)).unwrap().is_zero());
        assert!(forms::cyclic_associator(&m, &e(t[0]), &e(t[1]), &e(t[2])).unwrap().is_zero());
    }
}

#[test]
fn polarization_examples() {
    let m5 = catalog::myung5();
    let flex = |a: &HomAlgebra, v: &[Element]| forms::hom_associator(a, &v[0], &v[1], &v[0]).unwrap();
    for i in 0..5 {
        for j in i..5 {
            for y in 0..5 {
                let b = polarize_quadratic(&m5, flex, 0, (i, j), &[y]).unwrap();
                assert!(b.is_zero());
            }
        }
    }
    // a linear map polarizes to zero
    let linear = |a: &HomAlgebra, v: &[Element]| a.multiply(&v[0], &v[1]).unwrap();
    let o = catalog::octonions();
    for (i, j) in [(1, 2), (3, 3), (0, 7)] {
        assert!(polarize_quadratic(&o, linear, 0, (i, j), &[4]).unwrap().is_zero());
    }
    assert!(polarize_quadratic(&o, linear, 3, (1, 2), &[4]).is_err());
    assert!(polarize_quadratic(&o, linear, 0, (1, 8), &[4]).is_err());
}

// ---- checkers ----

#[test]
fn associativity_and_alternativity() {
    let o = catalog::octonions();
    let r = checkers::is_hom_associative(&o);
    assert!(!r.holds);
    let w = r.witness.unwrap();
    assert_eq!(w.indices, vec![1, 2, 3]);
    assert_eq!(w.defect, term(&o, 6, s(-2)));
    assert_eq!(Law::Associator.evaluate(&o, &[5, 6, 7]).unwrap(), term(&o, 3, s(-2)));
    assert!(checkers::is_hom_associative(&algebra_from(1, &[(0, 0, 0, 1)])).holds);
    assert!(!checkers::is_hom_associative(&catalog::octonions_twisted()).holds);

    assert!(checkers::is_hom_alternative(&o).holds);
    assert!(checkers::is_hom_alternative(&catalog::octonions_twisted()).holds);
    let m5 = twisted("myung5_alpha");
    assert!(!checkers::is_hom_alternative(&m5).holds);
    let v = forms::hom_associator(&m5, &m5.e(0), &m5.e(1), &m5.e(1)).unwrap();
    assert_eq!(v, term(&m5, 1, q(1, 16)));
}

#[test]
fn flexibility() {
    assert!(checkers::is_hom_flexible(&catalog::myung5()).holds);
    for a in [catalog::octonions(), catalog::octonions_twisted()] {
        assert!(checkers::is_hom_flexible(&a).holds);
    }
    let bad = algebra_from(2, &[(0, 0, 1, 1), (1, 0, 0, 1)]);
    let r = checkers::is_hom_flexible(&bad);
    assert!(!r.holds);
    assert_eq!(reevaluate(&bad, r.witness.as_ref().unwrap()).unwrap(), r.witness.unwrap().defect);
}

#[test]
fn lie_and_maltsev() {
    let sagle = catalog::sagle4();
    let a2 = twisted_with("sagle4_alpha2", &[s(0), s(0), s(0), s(1)]);
    assert!(checkers::is_hom_lie(&a2).holds);
    assert_eq!(a2.multiply(&a2.e(0), &a2.e(1)).unwrap(), term(&a2, 3, s(-1)));
    let r = checkers::is_hom_lie(&sagle);
    assert!(!r.holds);
    assert!(checkers::is_hom_lie(&algebra_from(3, &[])).holds);

    assert!(checkers::is_hom_maltsev(&sagle).holds);
    let a1 = twisted("sagle4_alpha1");
    assert!(checkers::is_hom_maltsev(&a1).holds);
    assert!(!checkers::is_hom_lie(&a1).holds);
    let j = forms::hom_jacobian(&a1, &a1.e(0), &a1.e(1), &a1.e(2)).unwrap();
    assert_eq!(j, term(&a1, 3, s(-216)));

    let oa_minus = commutator_algebra(&catalog::octonions_twisted());
    assert!(checkers::is_hom_maltsev(&oa_minus).holds);
    assert!(!checkers::is_hom_lie(&oa_minus).holds);

    let bracket = |a: &HomAlgebra| forget_twist(&commutator_algebra(a));
    assert!(!checkers::is_maltsev(&bracket(&a1)).unwrap().holds);
    assert!(!checkers::is_maltsev(&bracket(&catalog::octonions_twisted())).unwrap().holds);
    assert!(checkers::is_maltsev(&bracket(&twisted("sagle5_beta"))).unwrap().holds);
    assert!(matches!(checkers::is_maltsev(&a1), Err(AlgebraError::AlphaNotIdentity)));
}

#[test]
fn maltsev_admissibility() {
    assert!(checkers::is_hom_maltsev_admissible(&catalog::octonions_twisted()).holds);
    assert!(checkers::is_hom_maltsev_admissible(&algebra_from(2, &[(0, 0, 1, 1)])).holds);
    // The printed six-dimensional table is not Maltsev-admissible; the
    // defect below is the frozen witness.
    let m6 = twisted("myung6_alpha");
    let r = checkers::is_hom_maltsev_admissible(&m6);
    assert!(!r.holds);
    let w = r.witness.unwrap();
    assert_eq!(w.law, "commutator:hom-maltsev-linear");
    assert_eq!(w.indices, vec![0, 4, 1, 4]);
    assert_eq!(reevaluate(&m6, &w).unwrap(), w.defect);
}

#[test]
fn jordan_checks() {
    let o = catalog::octonions();
    let r = checkers::is_hom_jordan(&o);
    assert!(!r.holds);
    assert_eq!(r.witness.unwrap().law, "commutativity");
    assert!(checkers::is_hom_jordan_admissible(&o).holds);
    assert!(checkers::is_hom_jordan_admissible(&catalog::octonions_twisted()).holds);
    // commutative and associative, so Jordan with A⁺ a rescaled copy
    let poly = algebra_from(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)]);
    assert!(checkers::is_hom_jordan(&poly).holds);
    assert!(checkers::is_hom_jordan_admissible(&poly).holds);
}

#[test]
fn moufang_and_alternative_consequences() {
    for a in [catalog::octonions(), catalog::octonions_twisted()] {
        assert!(checkers::check_hom_moufang(&a).holds);
        let bundles = checkers::alternative_consequences(&a);
        assert_eq!(bundles.len(), 5);
        assert!(bundles.iter().all(|r| r.holds));
    }
    assert!(!checkers::check_hom_moufang(&twisted("myung5_alpha")).holds);
    assert!(!checkers::check_alternative_consequences(&twisted("myung6_alpha")).holds);
    let m6 = twisted("myung6_alpha");
    // as(h, h, f) = −γ⁴ f with γ = 2
    let v = forms::hom_associator(&m6, &m6.e(1), &m6.e(1), &m6.e(2)).unwrap();
    assert_eq!(v, term(&m6, 2, s(-16)));
}

#[test]
fn classifications() {
    let oa = classify(&catalog::octonions_twisted()).unwrap();
    let expect = [
        (Class::HomAlternative, true),
        (Class::HomAssociative, false),
        (Class::HomFlexible, true),
        (Class::HomMaltsevAdmissible, true),
        (Class::HomLieAdmissible, false),
        (Class::HomJordanAdmissible, true),
    ];
    for (class, verdict) in expect {
        assert_eq!(oa.holds(class), Some(verdict), "{class}");
    }

    let zero = classify(&algebra_from(3, &[])).unwrap();
    assert!(zero.all_hold());

    let m8 = classify(&twisted("myung8_alpha")).unwrap();
    for (class, verdict) in [
        (Class::HomFlexible, true),
        (Class::HomMaltsevAdmissible, true),
        (Class::HomAlternative, false),
        (Class::HomLieAdmissible, false),
    ] {
        assert_eq!(m8.holds(class), Some(verdict), "{class}");
    }
}

#[test]
fn myung_regressions() {
    // J of (A_α)⁻ at (e1, e2, e3) is −ξ² e3
    for (lambda, xi) in [(2, 1), (2, 3), (-3, 5)] {
        let m5 = twisted_with("myung5_alpha", &[s(lambda), s(xi)]);
        let minus = commutator_algebra(&m5);
        let j = forms::hom_jacobian(&minus, &m5.e(0), &m5.e(1), &m5.e(2)).unwrap();
        assert_eq!(j, term(&m5, 2, s(-xi * xi)));
    }

    let m8 = twisted("myung8_alpha");
    let idx = |i: i32| match i {
        0 => m8.basis_index("e0").unwrap(),
        _ => catalog::myung8_index(i),
    };
    let v = forms::hom_associator(&m8, &m8.e(idx(0)), &m8.e(idx(0)), &m8.e(0)).unwrap();
    assert_eq!(v, term(&m8, 0, s(-2)));
    let minus = commutator_algebra(&m8);
    let j = forms::hom_jacobian(&minus, &m8.e(idx(0)), &m8.e(idx(1)), &m8.e(idx(2))).unwrap();
    assert_eq!(j, term(&m8, idx(-3), s(432)));

    // Maltsev defect of (A, [−,−]_α) at (e0, e1, e2): −8λξ²(λ−1)(λξ+λ+ξ) e₋₃
    let b = forget_twist(&commutator_algebra(&m8));
    let jac = |x: &Element, y: &Element, z: &Element| forms::hom_jacobian(&b, x, y, z).unwrap();
    let mul = |x: &Element, y: &Element| b.multiply(x, y).unwrap();
    let (e0, e1, e2) = (b.e(idx(0)), b.e(idx(1)), b.e(idx(2)));
    let defect = &jac(&e0, &e1, &mul(&e0, &e2)) - &mul(&jac(&e0, &e1, &e2), &e0);
    let (l, x) = (2, 3);
    assert_eq!(defect, term(&b, idx(-3), s(-8 * l * x * x * (l - 1) * (l * x + l + x))));
    assert_eq!(defect, term(&b, idx(-3), s(-1584)));

    // Maltsev defect of the six-dimensional bracket at (e, h, f): 4(γ⁻⁴ − 1) e
    let m6 = twisted("myung6_alpha");
    let b = forget_twist(&commutator_algebra(&m6));
    let jac = |x: &Element, y: &Element, z: &Element| forms::hom_jacobian(&b, x, y, z).unwrap();
    let mul = |x: &Element, y: &Element| b.multiply(x, y).unwrap();
    let (e, h, f) = (b.e(0), b.e(1), b.e(2));
    let defect = &jac(&e, &h, &mul(&e, &f)) - &mul(&jac(&e, &h, &f), &e);
    assert_eq!(defect, term(&b, 0, q(-15, 4)));
}

#[test]
fn witnesses_reevaluate() {
    let cases = [
        (catalog::octonions(), Class::HomAssociative),
        (catalog::sagle4(), Class::HomLie),
        (twisted("myung5_alpha"), Class::HomAlternative),
        (twisted("myung5_alpha"), Class::HomMaltsevAdmissible),
        (twisted("myung8_alpha"), Class::HomLieAdmissible),
        (catalog::octonions(), Class::HomJordan),
    ];
    for (a, class) in cases {
        let r = class.run(&a).unwrap();
        let w = r.witness.expect("fails");
        assert!(!w.defect.is_zero());
        assert_eq!(reevaluate(&a, &w).unwrap(), w.defect, "{class}");
    }
}

// ---- constructions ----

#[test]
fn commutator_and_plus_algebras() {
    let o = catalog::octonions();
    let minus = commutator_algebra(&o);
    assert_eq!(minus.multiply(&o.e(1), &o.e(2)).unwrap(), term(&o, 4, s(2)));
    let plus = plus_algebra(&o);
    assert_eq!(plus.multiply(&o.e(1), &o.e(1)).unwrap(), term(&o, 0, s(-1)));
    assert_eq!(forms::jordan_product(&o, &o.e(1), &o.e(1)).unwrap(), term(&o, 0, s(-1)));

    let comm = catalog::m83();
    assert_eq!(commutator_algebra(&comm).mu().nnz(), 0);
    assert_eq!(plus_algebra(&comm).mu(), comm.mu());

    // (O_α)⁻ is O⁻ twisted by α
    let oa = catalog::octonions_twisted();
    let via_twist = yau_twist(&minus, oa.alpha()).unwrap();
    let direct = commutator_algebra(&oa);
    assert_eq!(via_twist.mu(), direct.mu());
    assert_eq!(via_twist.alpha(), direct.alpha());
}

#[test]
fn twists() {
    let o = catalog::octonions();
    let oa = yau_twist(&o, &catalog::octonion_automorphism()).unwrap();
    assert_eq!(oa.multiply(&o.e(0), &o.e(1)).unwrap(), o.e(5));
    assert_eq!(oa.multiply(&o.e(1), &o.e(1)).unwrap(), term(&o, 0, s(-1)));
    let same = yau_twist(&o, &LinearMap::identity(8)).unwrap();
    assert_eq!(same.mu(), o.mu());
    assert!(same.alpha().is_identity());
    assert!(matches!(yau_twist(&oa, oa.alpha()), Err(AlgebraError::AlreadyTwisted)));

    let mut diag = vec![s(1); 8];
    diag[0] = s(2);
    match yau_twist(&o, &LinearMap::diagonal(&diag)) {
        Err(AlgebraError::NotAMorphism(report)) => assert!(report.witness.is_some()),
        other => panic!("expected NotAMorphism, got {other:?}"),
    }
}

#[test]
fn derived_algebras() {
    let oa = catalog::octonions_twisted();
    assert_eq!(derived_algebra(&oa, 0).unwrap(), oa);
    let d1 = derived_algebra(&oa, 1).unwrap();
    assert_eq!(d1.multiply(&oa.e(0), &oa.e(1)).unwrap(), oa.e(2));
    assert_eq!(d1.alpha(), &oa.alpha().pow(2));
    assert!(matches!(derived_algebra(&oa, 9), Err(AlgebraError::DerivedTooDeep(9))));

    let minus = commutator_algebra(&oa);
    assert!(checkers::is_hom_maltsev(&derived_algebra(&minus, 1).unwrap()).holds);

    // J_{Aⁿ} = α^{2(2ⁿ−1)} ∘ J_A
    let sagle = twisted("sagle4_alpha1");
    for n in 1..=3u32 {
        let dn = derived_algebra(&sagle, n).unwrap();
        let power = sagle.alpha().pow(2 * ((1u64 << n) - 1));
        for t in [[0, 1, 2], [1, 2, 3], [0, 2, 3]] {
            let e = |i: usize| sagle.e(i);
            let base = forms::hom_jacobian(&sagle, &e(t[0]), &e(t[1]), &e(t[2])).unwrap();
            let derived = forms::hom_jacobian(&dn, &e(t[0]), &e(t[1]), &e(t[2])).unwrap();
            assert_eq!(derived, power.apply(&base).unwrap());
        }
    }
}

#[test]
fn morphism_checks() {
    let o = catalog::octonions();
    assert!(is_algebra_morphism(&o, &o, &catalog::octonion_automorphism()).unwrap().holds);
    for a in [catalog::sagle4(), catalog::myung5()] {
        assert!(is_algebra_morphism(&a, &a, &LinearMap::identity(a.dim())).unwrap().holds);
    }
    let mut p = vec![s(0); 15];
    p[0] = s(1);
    p[8] = s(1);
    p[14] = s(1);
    let m = catalog::sagle5_morphism(&p.clone().try_into().unwrap()).unwrap();
    let a5 = catalog::sagle5();
    assert!(is_algebra_morphism(&a5, &a5, &m).unwrap().holds);
    assert!(is_algebra_morphism(&a5, &o, &m).is_err());
}

#[test]
fn morphism_constraints() {
    let mut good = vec![s(0); 15];
    good[0] = s(1);
    good[8] = s(1);
    good[14] = s(1);
    assert!(catalog::catalog_morphism_constraints("sagle5_morphism", &good).unwrap());
    // a₁ = a₅ = b₄ = 1: a₅(a₄b₁ − a₁b₄) = −1
    let mut bad = vec![s(0); 15];
    bad[0] = s(1);
    bad[4] = s(1);
    bad[8] = s(1);
    assert!(!catalog::catalog_morphism_constraints("sagle5_morphism", &bad).unwrap());
    assert!(!catalog::catalog_morphism_constraints("myung5_alpha", &[s(0), s(1)]).unwrap());
    assert!(matches!(catalog::myung5_alpha(&s(0), &s(1)), Err(AlgebraError::ConstraintViolation(_))));
    assert!(catalog::catalog_morphism_constraints("octonions", &[]).is_err());
}

// ---- catalog ----

#[test]
fn catalog_products() {
    let sagle = catalog::sagle4();
    assert_eq!(sagle.multiply(&sagle.e(1), &sagle.e(2)).unwrap(), term(&sagle, 3, s(2)));
    let m8 = catalog::myung8(&s(1), &s(1), &s(2));
    let e0 = m8.e(m8.basis_index("e0").unwrap());
    assert_eq!(m8.multiply(&e0, &e0).unwrap(), term(&m8, 0, s(2)));
}

#[test]
fn m83_products() {
    let m = catalog::m83();
    let (e1, e2) = (m.e(0), m.e(1));
    assert_eq!(m.multiply(&e1, &e1).unwrap(), e1);
    assert!(m.multiply(&e1, &e2).unwrap().is_zero());
    let x = m.e(catalog::m83_slot(0, 1, 0).unwrap());
    assert_eq!(m.multiply(&x, &x).unwrap(), &e1 + &e2);

    let alpha = catalog::m83_alpha();
    assert_eq!(alpha.apply(&e1).unwrap(), e1);
    let slot = |k| m.e(catalog::m83_slot(0, 1, k).unwrap());
    assert_eq!(alpha.apply(&slot(1)).unwrap(), slot(5));
    assert!(is_algebra_morphism(&m, &m, &alpha).unwrap().holds);

    let o = catalog::octonions();
    assert_eq!(catalog::octonion_conjugate(&o.e(0)).unwrap(), o.e(0));
    assert_eq!(catalog::octonion_conjugate(&o.e(3)).unwrap(), term(&o, 3, s(-1)));
}
