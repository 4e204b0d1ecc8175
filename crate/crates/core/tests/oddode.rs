use proptest::prelude::*;
use superprolong::oddode::*;
use superprolong::{Parity, SuperDim};

fn j(p: usize, r: usize) -> JetAlgebra {
    JetAlgebra::new(p, r).unwrap()
}

fn q(n: i64) -> superprolong::Rational {
    superprolong::Rational::from_integer(n.into())
}

fn sd(e: usize, o: usize) -> SuperDim {
    SuperDim::new(e, o)
}

#[test]
fn contact_fields_from_the_tables() {
    let a = j(1, 1);
    let cases = [("ξ′", "-∂x"), ("x", "x·∂ξ + ∂ξ′"), ("0", "0"), ("1", "∂ξ")];
    for (f, s) in cases {
        let got = contact_vf(&a, &a.parse(f).unwrap()).unwrap();
        let want = if s == "0" { JetField::zero(&a, got.parity) } else { a.parse_field(s).unwrap() };
        assert_eq!(got.coeffs, want.coeffs, "S_{f}");
    }
    assert_eq!(contact_vf(&a, &a.parse("x").unwrap()).unwrap().parity, Parity::Odd);
}

#[test]
fn prolonged_fields_from_the_tables() {
    let a = j(1, 2);
    let got = prolong_field(&a, &a.parse("x·ξ - x^2·ξ′").unwrap(), 2).unwrap();
    let want = a.parse_field("x^2·∂x + x·ξ·∂ξ + (ξ - x·ξ′)·∂ξ′ - 3·x·ξ″·∂ξ″").unwrap();
    assert_eq!(got.coeffs, want.coeffs);
    assert_eq!(got.parity, Parity::Even);

    let a = j(1, 3);
    let got = prolong_field(&a, &a.parse("ξ·ξ′").unwrap(), 3).unwrap();
    let want = a.parse_field("-ξ·∂x + ξ′·ξ″·∂ξ″ + 2·ξ′·ξ‴·∂ξ‴").unwrap();
    assert_eq!(got.coeffs, want.coeffs);

    for r in 1..=3 {
        let got = prolong_field(&a, &a.one(), r).unwrap();
        assert_eq!(got.coeffs, a.parse_field("∂ξ").unwrap().coeffs);
    }
}

#[test]
fn lagrange_brackets_from_the_tables() {
    let a = j(1, 1);
    let br = |f: &str, g: &str| a.format(&lagrange_bracket(&a, &a.parse(f).unwrap(), &a.parse(g).unwrap()).unwrap());
    assert_eq!(br("1", "ξ"), "1");
    assert_eq!(br("ξ′", "x"), "-1");
    assert_eq!(br("ξ·ξ′", "3 + x·ξ·ξ′"), "3·ξ′");
}

#[test]
fn inhomogeneous_generating_function_is_rejected() {
    let a = j(1, 1);
    assert!(contact_vf(&a, &a.parse("1 + ξ").unwrap()).is_err());
    let r2 = j(1, 2);
    assert!(prolong_field(&r2, &r2.parse("ξ″").unwrap(), 2).is_err());
}

#[test]
fn multi_index_coordinates_are_symmetric() {
    let a = j(2, 2);
    assert_eq!(a.odd_index(&[0, 1]), a.odd_index(&[1, 0]));
    assert_eq!(a.parse("ξ_12").unwrap(), a.parse("ξ_21").unwrap());
    assert_eq!(a.odd_count(), 1 + 2 + 3);
}

fn spans(result: &SymmetryResult, parity: Parity) -> Vec<String> {
    let mut out: Vec<String> = result
        .generators
        .iter()
        .filter(|g| g.parity == parity)
        .map(|g| result.alg.format(&g.f))
        .collect();
    out.sort();
    out
}

fn sorted<const N: usize>(v: [&str; N]) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    out.sort();
    out
}

#[test]
fn trivial_second_order() {
    let spec = OdeSpec::new(2, "0", 3).unwrap();
    let r = determine_symmetries(&spec).unwrap();
    assert_eq!(r.superdim(), sd(4, 4));
    assert_eq!(spans(&r, Parity::Even), sorted(["x·ξ - x^2·ξ′", "x·ξ′", "ξ", "ξ′"]));
    assert_eq!(spans(&r, Parity::Odd), sorted(["x·ξ·ξ′", "ξ·ξ′", "x", "1"]));
    let grades: Vec<_> = r.generators.iter().map(|g| g.grade).collect();
    assert_eq!(grades, [1, 0, 0, -1, 2, 1, -1, -2].map(Some));
    assert_eq!(r.bound().unwrap(), sd(4, 4));
    assert!(r.algebra.validate().is_ok());
}

#[test]
fn trivial_third_order() {
    let r = determine_symmetries(&OdeSpec::new(3, "0", 4).unwrap()).unwrap();
    assert_eq!(r.superdim(), sd(4, 4));
    assert_eq!(r.bound().unwrap(), sd(4, 4));
}

fn table_entry(r: &SymmetryResult, table: &[Vec<JetFn>], f: &str, g: &str) -> String {
    let a = r.index_of(f).unwrap_or_else(|| panic!("{f} not a generator of {:?}", r.names()));
    let b = r.index_of(g).unwrap_or_else(|| panic!("{g} not a generator"));
    r.alg.format(&table[a][b])
}

fn check_table(r: &SymmetryResult, order: &[&str], rows: &[[&str; 5]], width: usize) {
    let table = r.bracket_table().unwrap();
    for (i, f) in order.iter().enumerate() {
        for (k, g) in order.iter().enumerate() {
            let want = match rows[i][k] {
                "·" => "0",
                s => s,
            };
            assert_eq!(table_entry(r, &table, f, g), want, "[{f}, {g}]");
        }
        assert!(rows[i][width..].iter().all(|s| s.is_empty()));
    }
}

#[test]
fn third_order_linear_with_exponential() {
    let spec = OdeSpec::with_basis(3, "ξ″", FunctionBasis::polynomial(2).with_exponentials([q(1)]), false).unwrap();
    let r = determine_symmetries(&spec).unwrap();
    assert_eq!(r.superdim(), sd(2, 3));
    assert_eq!(spans(&r, Parity::Even).len(), 2);
    let order = ["ξ′", "ξ", "1", "x", "exp(x)"];
    for f in order {
        assert!(r.index_of(f).is_some(), "{f} missing from {:?}", r.names());
    }
    let rows = [
        ["·", "·", "·", "-1", "-exp(x)"],
        ["·", "·", "-1", "-x", "-exp(x)"],
        ["·", "1", "·", "·", "·"],
        ["1", "x", "·", "·", "·"],
        ["exp(x)", "exp(x)", "·", "·", "·"],
    ];
    check_table(&r, &order, &rows, 5);
}

#[test]
fn automatic_exponentials_find_the_same_algebra() {
    let spec = OdeSpec::new(3, "ξ″", 2).unwrap();
    assert!(spec.basis.exponentials.contains(&q(1)));
    assert!(spec.basis_note.is_none());
    let r = determine_symmetries(&spec).unwrap();
    assert_eq!(r.superdim(), sd(2, 3));
}

#[test]
fn third_order_cubic_term() {
    let spec = OdeSpec::new(3, "ξ·ξ′·ξ″", 2).unwrap();
    let r = determine_symmetries(&spec).unwrap();
    assert_eq!(r.superdim(), sd(2, 2));
    let order = ["ξ′", "x·ξ′", "ξ·ξ′", "3 + x·ξ·ξ′"];
    let rows = [
        ["·", "-ξ′", "·", "-ξ·ξ′", ""],
        ["ξ′", "·", "ξ·ξ′", "·", ""],
        ["·", "-ξ·ξ′", "·", "3·ξ′", ""],
        ["ξ·ξ′", "·", "3·ξ′", "6·x·ξ′", ""],
    ];
    check_table(&r, &order, &rows, 4);
    assert!(r.superdim().le_strong(r.bound().unwrap()));
    assert_ne!(r.superdim(), r.bound().unwrap());
}

#[test]
fn cubic_term_lowers_the_dimension_for_other_coefficients() {
    for rhs in ["ξ·ξ′·ξ″", "ξ′ + x·ξ·ξ′·ξ″", "2·ξ·ξ′·ξ″ - ξ″"] {
        let r = determine_symmetries(&OdeSpec::new(3, rhs, 3).unwrap()).unwrap();
        assert!(r.superdim().total() < 8, "{rhs}: {}", r.superdim());
    }
}

#[test]
fn constant_coefficient_second_order_grid() {
    // ξ″ = a ξ + b ξ′ with rational characteristic roots
    for (l1, l2) in [(0, 0), (0, 1), (1, -1), (1, 1), (2, -1), (-1, -3), (1, 2)] {
        let (a, b) = (-(l1 * l2), l1 + l2);
        let rhs = format!("{a}·ξ + {b}·ξ′");
        let spec = OdeSpec::new(2, &rhs, 2).unwrap();
        let r = determine_symmetries(&spec).unwrap();
        assert_eq!(r.superdim(), sd(4, 4), "{rhs}");
    }
}

#[test]
fn irrational_roots_are_flagged() {
    let spec = OdeSpec::new(2, "2·ξ", 2).unwrap();
    assert!(spec.basis_note.is_some());
}

#[test]
fn characteristic_roots_with_multiplicity() {
    // λ³ - λ² = λ²(λ - 1)
    let (mut roots, complete) = rational_roots(vec![q(0), q(0), q(-1), q(1)]);
    roots.sort();
    assert!(complete);
    assert_eq!(roots, [q(0), q(0), q(1)]);
    let (roots, complete) = rational_roots(vec![q(-2), q(0), q(1)]);
    assert!(roots.is_empty() && !complete);
}

#[test]
fn input_errors() {
    assert!(OdeSpec::new(2, "ξ·ξ′", 2).is_err());
    assert!(OdeSpec::new(2, "ξ″", 2).is_err());
    assert!(OdeSpec::new(1, "ξ", 2).is_err());
    assert!(OdeSpec::new(2, "sin(x)·ξ", 2).is_err());
}

#[test]
fn ode_json() {
    let spec = OdeSpec::from_json_str(r#"{"order": 3, "rhs": "xi2", "basis": {"poly_degree": 2, "exponentials": [1, "1"]}}"#).unwrap();
    assert_eq!(spec.equation(), "ξ‴ = ξ″");
    assert!(spec.basis.exponentials.contains(&q(1)));
    let spec = OdeSpec::from_json_str(r#"{"order": 2, "rhs": "0"}"#).unwrap();
    assert_eq!(spec.basis.poly_degree, DEFAULT_POLY_DEGREE);
    assert!(OdeSpec::from_json_str(r#"{"order": 2}"#).is_err());
}

#[test]
fn basis_closure_check() {
    let a = j(1, 2);
    assert!(FunctionBasis::polynomial(3).with_exponentials([q(-2)]).check_closed(&a).is_ok());
}

fn homogeneous(a: &JetAlgebra, coeffs: &[i8], parity: Parity) -> JetFn {
    // combinations of x^k μ with μ in {1, ξ, ξ′, ξξ′}, k ≤ 2
    let mus = ["1", "ξ", "ξ′", "ξ·ξ′"];
    let mut f = a.zero();
    for (i, c) in coeffs.iter().enumerate() {
        let mu = mus[i % 4];
        let mono = a.parse(&format!("x^{}·{mu}", i / 4)).unwrap();
        if mono.parity() == Some(parity) {
            f = f.add(&mono.scale(&superprolong::Rational::from_integer((*c).into())));
        }
    }
    f
}

fn parity_strategy() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_of_contact_fields(
        cf in prop::collection::vec(-3i8..=3, 12),
        cg in prop::collection::vec(-3i8..=3, 12),
        pf in parity_strategy(),
        pg in parity_strategy(),
    ) {
        let a = j(1, 1);
        let (f, g) = (homogeneous(&a, &cf, pf), homogeneous(&a, &cg, pg));
        let sf = contact_vf(&a, &f).unwrap();
        let sg = contact_vf(&a, &g).unwrap();
        let lhs = sf.bracket(&a, &sg);
        let rhs = contact_vf(&a, &lagrange_bracket(&a, &f, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs.coeffs, rhs.coeffs);
    }

    #[test]
    fn contact_form_is_preserved(c in prop::collection::vec(-3i8..=3, 12), p in parity_strategy()) {
        let a = j(1, 1);
        let f = homogeneous(&a, &c, p);
        let s = contact_vf(&a, &f).unwrap();
        prop_assert_eq!(contact_form(&a, &s), f);
        for y in cartan_generators(&a) {
            prop_assert!(contact_form(&a, &s.bracket(&a, &y)).is_zero());
        }
    }

    #[test]
    fn prolongation_restricts(c in prop::collection::vec(-3i8..=3, 12), p in parity_strategy()) {
        let a = j(1, 3);
        let f = homogeneous(&a, &c, p);
        for r in 2..=3 {
            let hi = prolong_field(&a, &f, r).unwrap();
            let lo = prolong_field(&a, &f, r - 1).unwrap();
            for k in 0..a.odd_count() {
                if a.multi_index(k).len() < r {
                    prop_assert_eq!(&hi.coeffs[1 + k], &lo.coeffs[1 + k]);
                }
            }
            prop_assert_eq!(&hi.coeffs[0], &lo.coeffs[0]);
        }
    }
}

#[test]
fn two_independent_variables() {
    let a = j(2, 1);
    let cases = ["x1·ξ_2", "ξ·ξ_1", "x2^2", "ξ_1·ξ_2·x1", "ξ"];
    for f in cases {
        for g in cases {
            let (f, g) = (a.parse(f).unwrap(), a.parse(g).unwrap());
            let lhs = contact_vf(&a, &f).unwrap().bracket(&a, &contact_vf(&a, &g).unwrap());
            let rhs = contact_vf(&a, &lagrange_bracket(&a, &f, &g).unwrap()).unwrap();
            assert_eq!(lhs.coeffs, rhs.coeffs);
        }
        let s = contact_vf(&a, &a.parse(f).unwrap()).unwrap();
        assert_eq!(contact_form(&a, &s), a.parse(f).unwrap());
        for y in cartan_generators(&a) {
            assert!(contact_form(&a, &s.bracket(&a, &y)).is_zero());
        }
    }
}
