use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use weighted_polar::exactmath::{
    frac, int, primitive, LaurentPoly, QVector, Rational, RationalFunction, YPoly,
};
use weighted_polar::polarize::{polarize_cones, PolarizedCone, PolarizingVector};
use weighted_polar::polytope::builtin;
use weighted_polar::weights::{check_with_cones, cone_sum, WeightParam};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn ypoly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(rational(), 0..3).prop_map(YPoly::new)
}

fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), ypoly()), 0..4)
        .prop_map(move |terms| LaurentPoly::from_terms(nvars, terms))
}

fn y_value() -> impl Strategy<Value = Rational> {
    rational().prop_filter("y != -1", |y| y != &int(-1))
}

proptest! {
    #[test]
    fn laurent_eval_is_ring_homomorphism(
        a in laurent(2),
        b in laurent(2),
        z in prop::collection::vec(nonzero_rational(), 2),
        y in rational(),
    ) {
        let ea = a.eval(&z, &y).unwrap();
        let eb = b.eval(&z, &y).unwrap();
        prop_assert_eq!((&a + &b).eval(&z, &y).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&z, &y).unwrap(), &ea * &eb);
    }

    #[test]
    fn primitive_ignores_positive_scaling(
        v in prop::collection::vec(-9i64..=9, 1..5),
        c in (1i64..=7, 1i64..=5),
    ) {
        prop_assume!(v.iter().any(|x| *x != 0));
        let q: QVector = v.iter().map(|x| int(*x)).collect();
        let scaled: QVector = q.iter().map(|x| x * frac(c.0, c.1)).collect();
        let p = primitive(&q).unwrap();
        prop_assert_eq!(primitive(&scaled).unwrap(), p.clone());
        let g = p.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
        prop_assert!(g.is_one());
        // v is a positive multiple of its primitive vector
        let k = v.iter().zip(&p).find(|(_, b)| !b.is_zero()).map(|(a, b)| BigInt::from(*a) / b).unwrap();
        prop_assert!(k.is_positive());
        for (a, b) in v.iter().zip(&p) {
            prop_assert_eq!(BigInt::from(*a), &k * b);
        }
    }

    #[test]
    fn cone_coordinates_round_trip(
        gens in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
        apex in prop::collection::vec(rational(), 3),
        m in prop::collection::vec(rational(), 3),
    ) {
        let g: Vec<QVector> = gens.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect();
        let rows: Vec<QVector> = g.clone();
        prop_assume!(!weighted_polar::exactmath::determinant(&rows).is_zero());
        let cone = PolarizedCone::new(0, apex, g, vec![false, true, false]);
        let x = cone.point_at(&m);
        prop_assert_eq!(cone.coordinates(&x), m.clone());
        let inside = m.iter().all(|c| !c.is_negative());
        prop_assert_eq!(cone.membership(&x).is_some(), inside);
    }

    #[test]
    fn rational_function_eval_matches_quotient(
        a in laurent(2),
        b in laurent(2),
        c in laurent(2),
        z in prop::collection::vec(nonzero_rational(), 2),
        y in rational(),
    ) {
        let eb = b.eval(&z, &y).unwrap();
        let ec = c.eval(&z, &y).unwrap();
        prop_assume!(!eb.is_zero() && !ec.is_zero());
        let ea = a.eval(&z, &y).unwrap();
        let f = RationalFunction::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(f.eval(&z, &y).unwrap(), Some(&ea / &eb));
        let g = RationalFunction::new(a.clone(), b.clone()).unwrap();
        prop_assert!(f.equals(&g));
        let sum = f.add(&g);
        prop_assert_eq!(sum.eval(&z, &y).unwrap(), Some(int(2) * &ea / &eb));
    }

    #[test]
    fn decomposition_at_numeric_y(
        name in prop::sample::select(vec!["simplex:2,3", "trapezoid", "cube:2,2", "prism", "interval:4"]),
        xi in prop::collection::vec(-9i64..=9, 3),
        y in y_value(),
        x in prop::collection::vec(rational(), 3),
    ) {
        let p = builtin(name).unwrap();
        let n = p.dim();
        let xi: QVector = xi[..n].iter().map(|v| int(*v)).collect();
        let Ok(xi) = PolarizingVector::new(&p, xi) else { return Ok(()) };
        let cones = polarize_cones(&p, &xi).unwrap();
        let w = WeightParam::new(y).unwrap();
        let chk = check_with_cones(&p, &cones, &x[..n], &w);
        prop_assert!(chk.equal, "{}", chk);
    }
}

fn random_polarizing(p: &weighted_polar::polytope::Polytope, rng: &mut impl rand::Rng) -> PolarizingVector {
    loop {
        let xi: QVector = (0..p.dim()).map(|_| frac(rng.gen_range(-30..=30), rng.gen_range(1..=4))).collect();
        if let Ok(v) = PolarizingVector::new(p, xi) {
            return v;
        }
    }
}

#[test]
fn cone_sum_independent_of_polarization() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for name in ["simplex:2,2", "trapezoid", "cube:3,1", "prism"] {
        let p = builtin(name).unwrap();
        let probes: Vec<QVector> = (0..15)
            .map(|_| {
                use rand::Rng;
                (0..p.dim()).map(|_| frac(rng.gen_range(-6..=18), rng.gen_range(1..=4))).collect()
            })
            .chain(p.faces().iter().map(|f| f.barycenter.clone()))
            .collect();
        let reference = random_polarizing(&p, &mut rng);
        let reference = polarize_cones(&p, &reference).unwrap();
        let model = weighted_polar::weights::SymbolicY;
        for _ in 0..50 {
            let xi = random_polarizing(&p, &mut rng);
            let cones = polarize_cones(&p, &xi).unwrap();
            for x in &probes {
                assert_eq!(
                    cone_sum(&cones, x, &model),
                    cone_sum(&reference, x, &model),
                    "{name} at {x:?}"
                );
            }
        }
    }
}
