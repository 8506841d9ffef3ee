//! Property tests for the quantum exponential algebra and the tropical
//! dynamics.

use proptest::prelude::*;
use teich_core::fatgraph::build_standard_spine;
use teich_core::laurent::{LaurentExpr, Rational};
use teich_core::qalg::{QBracket, QCoeff, QElement};
use teich_core::qgeo::TwistGen;
use teich_core::thurston::{classify, tropical_twist, Domain, TropicalPoint};
use teich_core::wp::{poisson_bracket, wp_matrix};

fn mono(u: [i32; 3], q4: i64) -> QElement {
    QElement::monomial(QBracket::torus(), u.to_vec(), QCoeff::q_pow(q4))
}

proptest! {
    #[test]
    fn q_mul_associative(
        a in proptest::array::uniform3(-4i32..=4),
        b in proptest::array::uniform3(-4i32..=4),
        c in proptest::array::uniform3(-4i32..=4),
        pa in -6i64..=6, pb in -6i64..=6, pc in -6i64..=6,
    ) {
        // doubled storage: keep entries even so products stay quarter-integral
        let a = mono(a.map(|x| 2 * x), pa);
        let b = mono(b.map(|x| 2 * x), pb);
        let c = mono(c.map(|x| 2 * x), pc);
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn adjoint_antihomomorphism(
        a in proptest::array::uniform3(-3i32..=3),
        b in proptest::array::uniform3(-3i32..=3),
        pa in -4i64..=4, pb in -4i64..=4,
    ) {
        let a = mono(a.map(|x| 2 * x), pa);
        let b = mono(b.map(|x| 2 * x), pb);
        let lhs = a.mul(&b).unwrap().adjoint();
        let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn classical_limit_homomorphism(
        a in proptest::array::uniform3(-3i32..=3),
        b in proptest::array::uniform3(-3i32..=3),
    ) {
        let a = mono(a.map(|x| 2 * x), 0);
        let b = mono(b.map(|x| 2 * x), 0);
        let q = a.mul(&b).unwrap().classical_limit().unwrap();
        let c = a.classical_limit().unwrap().mul(&b.classical_limit().unwrap());
        prop_assert_eq!(q, c);
    }

    #[test]
    fn jacobi_identity_random_monomials(
        a in proptest::collection::vec(-3i32..=3, 9),
        b in proptest::collection::vec(-3i32..=3, 9),
        c in proptest::collection::vec(-3i32..=3, 9),
    ) {
        let g = build_standard_spine(2, 1).unwrap();
        let bm = wp_matrix(&g);
        let one = Rational::from_integer(1);
        let f = LaurentExpr::monomial(a, one);
        let h = LaurentExpr::monomial(b, one);
        let k = LaurentExpr::monomial(c, one);
        let j = poisson_bracket(&poisson_bracket(&f, &h, &bm), &k, &bm)
            .add(&poisson_bracket(&poisson_bracket(&h, &k, &bm), &f, &bm))
            .add(&poisson_bracket(&poisson_bracket(&k, &f, &bm), &h, &bm));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn tropical_dynamics_never_reenters_third_domain(
        x in -1000i64..1000, y in -1000i64..1000,
        word in proptest::collection::vec(any::<bool>(), 50),
    ) {
        let mut p = TropicalPoint::from_ints(x, y);
        let mut entered = false;
        for use_x in word {
            let gen = if use_x { TwistGen::X } else { TwistGen::Y };
            p = tropical_twist(&p, gen);
            let d = classify(&p);
            let inside = matches!(d, Domain::I | Domain::II);
            if entered {
                prop_assert!(inside, "re-entered domain III at {p:?}");
            }
            entered = entered || inside;
        }
    }
}
