use proptest::prelude::*;
use superprolong::liesuper::catalog;
use superprolong::superfield::*;
use superprolong::*;

type Q = Rational;
type V = SuperVectorField<Q>;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn combination<F: Field>(fields: &[SuperVectorField<F>], v: &field::SparseVec<F>, parity: Parity) -> SuperVectorField<F> {
    let mut out = SuperVectorField {
        coeffs: fields[0].coeffs.iter().map(|c| SuperPolynomial::zero(c.even_count())).collect(),
        parity,
    };
    for (k, x) in v {
        out = out.add(&fields[*k].scale(x));
    }
    out
}

fn assert_homomorphism<F: Field>(m: &LieSuperalgebra<F>) {
    let (_, fields) = left_invariant_fields(m).unwrap();
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            let lhs = bracket_fields(&fields[a], &fields[b]);
            let rhs = combination(&fields, &m.bracket_basis(a, b), m.parity(a) + m.parity(b));
            assert_eq!(lhs, rhs, "[{}, {}]", m.name(a), m.name(b));
        }
    }
}

fn catalog_symbols() -> Vec<(&'static str, LieSuperalgebra<Q>)> {
    vec![
        ("shc", catalog::shc_symbol().unwrap()),
        ("ode2", catalog::odd_ode_symbol(2).unwrap()),
        ("ode3", catalog::odd_ode_symbol(3).unwrap()),
        ("ode4", catalog::odd_ode_symbol(4).unwrap()),
        ("heis21", catalog::heisenberg_contact(2, 1).unwrap()),
        ("heis02", catalog::heisenberg_contact(0, 2).unwrap()),
        ("abelian12", catalog::abelian_symbol(1, 2).unwrap()),
        ("sl21-", catalog::sl21_ode::<Q>().unwrap().negative_part().unwrap()),
    ]
}

#[test]
fn bernoulli_coefficients() {
    let b = bernoulli_series(7);
    let expect = [(1, 1), (1, 2), (1, 12), (0, 1), (-1, 720), (0, 1), (1, 30240)];
    for (x, (n, d)) in b.iter().zip(expect) {
        assert_eq!(*x, num_rational::BigRational::new(n.into(), d.into()));
    }
}

#[test]
fn left_invariant_fields_realize_the_brackets() {
    for (name, m) in catalog_symbols() {
        eprintln!("{name}");
        assert_homomorphism(&m);
    }
    assert_homomorphism(&catalog::supertranslation::<Gaussian>(1, &catalog::default_admissible_form(1)).unwrap());
}

#[test]
fn example_35_is_not_regular() {
    let coords = Coordinates::new(&["x", "u", "p", "q", "z"], &["θ", "ν"]).unwrap();
    let spec = DistributionSpec::<Q>::parse(
        coords.clone(),
        &["∂x + p*∂u + q*∂p + q^2*∂z", "∂q", "∂θ + q*∂ν + θ*∂p + 2*ν*∂z"],
    )
    .unwrap();
    assert_eq!(spec.rank(), SuperDim::new(2, 1));
    let flag = derived_flag(&spec, 4).unwrap();
    let level2 = &flag.levels[1];
    // generators D_x, ∂q, ∂p + 2q∂z | D_θ, ∂ν, θ∂u; only (3|2) survive at θ = 0
    assert_eq!(level2.rank(), SuperDim::new(3, 2));
    assert_eq!(level2.generator_count(), SuperDim::new(3, 3));
    assert_eq!(level2.remainders.len(), 1);
    assert_eq!(level2.remainders[0].normalized(), V::parse(&coords, "θ∂u").unwrap());
    let pts = sample_points(&spec.base_point, 5, 0);
    let rep = check_strong_regularity(&flag, &pts);
    assert!(!rep.regular);
    assert_eq!(
        rep.witness,
        Some(Witness::NotDirectFactor {
            level: 2,
            field: "θ·∂u".into()
        })
    );
    assert!(extract_symbol(&flag, &pts).is_err());
}

#[test]
fn shc_model_is_strongly_regular_with_catalog_constants() {
    let m: LieSuperalgebra<Q> = catalog::shc_symbol().unwrap();
    let (spec, frame) = standard_model(&m).unwrap();
    let flag = derived_flag(&spec, 6).unwrap();
    assert_eq!(flag.ranks(), vec![SuperDim::new(2, 4), SuperDim::new(3, 6), SuperDim::new(5, 6)]);
    assert!(flag.bracket_generating);
    let pts = sample_points(&spec.base_point, 5, 7);
    let rep = check_strong_regularity(&flag, &pts);
    assert!(rep.regular, "{rep:?}");
    let sym = extract_symbol_in_frame(&flag, &frame, &pts).unwrap();
    assert_eq!(sym.to_json(), m.to_json());
    let canonical = extract_symbol(&flag, &pts).unwrap();
    assert!(canonical.validate().is_ok());
    assert_eq!(canonical.space().superdims_by_degree(), m.space().superdims_by_degree());
}

#[test]
fn contact_frame_of_second_order_odd_ode() {
    let coords = Coordinates::new(&["x"], &["ξ", "ξ'"]).unwrap();
    let spec = DistributionSpec::<Q>::parse(coords, &["∂x + ξ'*∂ξ", "∂ξ'"]).unwrap();
    let flag = derived_flag(&spec, 4).unwrap();
    assert_eq!(flag.ranks(), vec![SuperDim::new(1, 1), SuperDim::new(1, 2)]);
    let pts = sample_points(&spec.base_point, 5, 1);
    let sym = extract_symbol(&flag, &pts).unwrap();
    let expect: LieSuperalgebra<Q> = catalog::odd_ode_symbol(2).unwrap();
    // X1 = X, X2 = θ1, X3 = θ2 up to names
    assert_eq!(sym.bracket_basis(0, 1), expect.bracket_basis(0, 1));
    assert_eq!(sym.superdim(), expect.superdim());
    let rep = sym.check_fundamental_nondegenerate();
    assert!(rep.fundamental && rep.nondegenerate);
}

#[test]
fn constant_frames_are_regular() {
    let coords = Coordinates::new(&["x"], &["θ"]).unwrap();
    let spec = DistributionSpec::<Q>::parse(coords, &["∂x", "∂θ"]).unwrap();
    let flag = derived_flag(&spec, 3).unwrap();
    assert_eq!(flag.depth(), 1);
    let pts = sample_points(&spec.base_point, 5, 0);
    assert!(check_strong_regularity(&flag, &pts).regular);
    let sym = extract_symbol(&flag, &pts).unwrap();
    assert_eq!(sym.superdim(), SuperDim::new(1, 1));
    assert!(sym.recorded_brackets().next().is_none());
}

#[test]
fn rank_drop_away_from_the_base_point() {
    // (x - 2)·∂y is a frame near x = 1 and degenerates at x = 2
    let coords = Coordinates::new(&["x", "y"], &[]).unwrap();
    let mut spec = DistributionSpec::<Q>::parse(coords, &["∂x", "(x - 2)*∂y"]).unwrap();
    spec.base_point = vec![q(1), q(0)];
    let flag = derived_flag(&spec, 3).unwrap();
    let mut pts = sample_points(&spec.base_point, 0, 0);
    pts.push(vec![q(2), q(5)]);
    let rep = check_strong_regularity(&flag, &pts);
    assert!(matches!(rep.witness, Some(Witness::RankDrop { level: 1, .. })), "{rep:?}");
}

#[test]
fn non_constant_structure_function() {
    // X3 = [X1,X2] = ∂z + (x + y²/2)∂w, X4 = [X1,X3] = ∂w, [X2,X3] = y·X4
    let coords = Coordinates::new(&["x", "y", "z", "w"], &[]).unwrap();
    let spec = DistributionSpec::<Q>::parse(coords, &["∂x", "∂y + x*∂z + (x^2/2 + x*y^2/2)*∂w"]).unwrap();
    let flag = derived_flag(&spec, 5).unwrap();
    assert_eq!(flag.ranks(), vec![SuperDim::new(2, 0), SuperDim::new(3, 0), SuperDim::new(4, 0)]);
    let mut pts = sample_points(&spec.base_point, 0, 0);
    pts.push(vec![q(0), q(3), q(0), q(0)]);
    let rep = check_strong_regularity(&flag, &pts);
    match rep.witness {
        Some(Witness::NonConstant { left, right, along, values }) => {
            assert_eq!((left.as_str(), right.as_str(), along.as_str()), ("X2", "X3", "X4"));
            assert_eq!(values, vec!["0".to_string(), "3".to_string()]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn degree_cap_is_reported() {
    let coords = Coordinates::new(&["x", "y"], &[]).unwrap();
    let spec = DistributionSpec::<Q>::parse(coords, &["∂x", "(1 + x^3)*∂y", "(1 + x)*∂y"]).unwrap();
    let err = derived_flag_capped(&spec, 3, 2).unwrap_err();
    assert!(matches!(err, Error::DegreeCap { cap: 2, level: 1 }), "{err:?}");
}

#[test]
fn flag_levels_are_nested() {
    let m: LieSuperalgebra<Q> = catalog::odd_ode_symbol(4).unwrap();
    let (spec, _) = standard_model(&m).unwrap();
    let flag = derived_flag(&spec, 6).unwrap();
    for w in flag.levels.windows(2) {
        assert_eq!(&w[1].frame[..w[0].frame.len()], &w[0].frame[..]);
    }
}

#[test]
fn round_trip_over_catalog_symbols() {
    for (name, m) in catalog_symbols() {
        let (spec, frame) = standard_model(&m).unwrap();
        let flag = derived_flag(&spec, 8).unwrap();
        let pts = sample_points(&spec.base_point, 5, 3);
        let rep = check_strong_regularity(&flag, &pts);
        let fundamental = m.check_fundamental_nondegenerate().fundamental;
        if !fundamental {
            // the flag only sees the part generated by degree -1
            continue;
        }
        assert!(rep.regular, "{name}: {rep:?}");
        let sym = extract_symbol_in_frame(&flag, &frame, &pts).unwrap();
        assert_eq!(sym.to_json(), m.to_json(), "{name}");
        let canonical = extract_symbol(&flag, &pts).unwrap();
        assert!(canonical.validate().is_ok(), "{name}");
        assert!(canonical.check_fundamental_nondegenerate().fundamental, "{name}");
        assert_eq!(canonical.superdim(), m.superdim(), "{name}");
    }
}

fn poly_strategy() -> impl Strategy<Value = Vec<(u32, u32, u8, i64)>> {
    prop::collection::vec((0u32..3, 0u32..2, 0u8..4, -3i64..=3), 0..4)
}

fn build(coords: &Coordinates, parity: Parity, data: Vec<Vec<(u32, u32, u8, i64)>>) -> V {
    let m = coords.m();
    let coeffs = data
        .into_iter()
        .enumerate()
        .map(|(j, terms)| {
            let dir = coords.direction_parity(j);
            SuperPolynomial::from_terms(
                m,
                terms.into_iter().filter_map(|(a, b, t, c)| {
                    let mono = Monomial { x: vec![a, b], theta: t as u64 };
                    (mono.parity() + dir == parity).then_some((mono, q(c)))
                }),
            )
        })
        .collect();
    V::new(coords, coeffs, parity).unwrap()
}

fn field_strategy() -> impl Strategy<Value = (bool, Vec<Vec<(u32, u32, u8, i64)>>)> {
    (any::<bool>(), prop::collection::vec(poly_strategy(), 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn super_jacobi_for_fields(a in field_strategy(), b in field_strategy(), c in field_strategy()) {
        let coords = Coordinates::new(&["x", "y"], &["θ", "η"]).unwrap();
        let par = |odd: bool| if odd { Parity::Odd } else { Parity::Even };
        let x = build(&coords, par(a.0), a.1);
        let y = build(&coords, par(b.0), b.1);
        let z = build(&coords, par(c.0), c.1);
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        let lhs = bracket_fields(&x, &bracket_fields(&y, &z));
        let mut rhs = bracket_fields(&bracket_fields(&x, &y), &z);
        let s = Q::from_i64(x.parity.sign_with(y.parity));
        rhs = rhs.add(&bracket_fields(&y, &bracket_fields(&x, &z)).scale(&s));
        prop_assert_eq!(lhs.coeffs, rhs.coeffs);
    }

    #[test]
    fn even_self_bracket_vanishes(a in poly_strategy(), b in poly_strategy(), c in poly_strategy(), d in poly_strategy()) {
        let coords = Coordinates::new(&["x", "y"], &["θ", "η"]).unwrap();
        let x = build(&coords, Parity::Even, vec![a, b, c, d]);
        prop_assert!(bracket_fields(&x, &x).is_zero());
    }

    #[test]
    fn super_antisymmetry(a in field_strategy(), b in field_strategy()) {
        let coords = Coordinates::new(&["x", "y"], &["θ", "η"]).unwrap();
        let par = |odd: bool| if odd { Parity::Odd } else { Parity::Even };
        let x = build(&coords, par(a.0), a.1);
        let y = build(&coords, par(b.0), b.1);
        let s = Q::from_i64(-x.parity.sign_with(y.parity));
        prop_assert_eq!(bracket_fields(&x, &y).coeffs, bracket_fields(&y, &x).scale(&s).coeffs);
    }
}
