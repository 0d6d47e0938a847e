use proptest::prelude::*;

use poisson_cohomology::poly::{rat, ratio};
use poisson_cohomology::vector::{curl, div, grad};
use poisson_cohomology::{Cochain, Echelon, Matrix, Monomial, Poly, PoissonStructure, Rational, VecPoly, WeightSystem};

fn coeff() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

/// Small polynomials of total degree at most 4.
fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((coeff(), 0u32..=2, 0u32..=2, 0u32..=2), 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, a, b, e) in terms {
            p.add_term(c, Monomial::new(a, b, e));
        }
        p
    })
}

fn small_vec() -> impl Strategy<Value = VecPoly> {
    (small_poly(), small_poly(), small_poly()).prop_map(|(a, b, c)| VecPoly::new(a, b, c))
}

fn catalog_structure() -> impl Strategy<Value = PoissonStructure> {
    prop::sample::select(vec![
        ("x^2+y^2+z^2", [1, 1, 1]),
        ("x^3+y^3+z^3", [1, 1, 1]),
        ("x^2+y^3+z^5", [15, 10, 6]),
        ("x^3+y^4+z^2", [4, 3, 6]),
        ("x*y*z", [1, 1, 1]),
    ])
    .prop_map(|(phi, w)| {
        let w = WeightSystem::try_from(w).unwrap();
        PoissonStructure::new(phi.parse().unwrap(), w).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_round_trips(p in small_poly()) {
        let back: Poly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ring_laws(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn product_rule(f in small_poly(), g in small_poly(), j in 0usize..3) {
        let lhs = (&f * &g).derivative(j);
        let rhs = &(&f.derivative(j) * &g) + &(&f * &g.derivative(j));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn de_rham_squares_vanish(f in small_poly(), v in small_vec()) {
        prop_assert!(curl(&grad(&f)).is_zero());
        prop_assert!(div(&curl(&v)).is_zero());
    }

    #[test]
    fn bracket_is_poisson(p in catalog_structure(), f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(p.bracket(&f, &g), -p.bracket(&g, &f));
        prop_assert!(p.jacobiator(&f, &g, &h).is_zero());
        prop_assert!(p.bracket(p.phi(), &f).is_zero());
    }

    #[test]
    fn coboundary_squares_vanish(p in catalog_structure(), f in small_poly(), v in small_vec()) {
        prop_assert!(p.delta1(&p.delta0(&f)).is_zero());
        prop_assert!(p.delta2(&p.delta1(&v)).is_zero());
    }

    #[test]
    fn boundary_squares_vanish(p in catalog_structure(), v in small_vec(), f in small_poly()) {
        for (k, c) in [(3, Cochain::Scalar(f.clone())), (2, Cochain::Vector(v.clone()))] {
            let once = p.boundary(k, &c).unwrap();
            let twice = p.boundary(k - 1, &once).unwrap();
            prop_assert!(twice.is_zero());
        }
    }

    #[test]
    fn first_boundary_is_the_bracket(p in catalog_structure(), f in small_poly(), g in small_poly()) {
        // f dg as a 1-form.
        let form = Cochain::Vector(grad(&g).times(&f));
        let b = p.boundary(1, &form).unwrap();
        prop_assert_eq!(b, Cochain::Scalar(p.bracket(&f, &g)));
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let rows: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect();
        let m = Matrix::from_rows(&rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
        for v in &kernel {
            prop_assert!(m.apply(v).is_empty());
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn echelon_reduce_is_idempotent(vs in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..5),
                                    probe in prop::collection::vec(-3i64..=3, 4)) {
        let to_sparse = |v: &Vec<i64>| v.iter().enumerate().filter(|(_, a)| **a != 0).map(|(i, a)| (i, rat(*a))).collect();
        let sparse: Vec<_> = vs.iter().map(to_sparse).collect();
        let e = Echelon::from_vectors(4, &sparse);
        for v in &sparse {
            prop_assert!(e.contains(v));
        }
        let r = e.reduce(to_sparse(&probe));
        prop_assert_eq!(e.reduce(r.clone()), r);
    }
}
