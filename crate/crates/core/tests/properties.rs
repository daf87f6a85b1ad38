use hopfkit::analysis::{characters, s_matrix};
use hopfkit::constructions::{
    a_c2, a_c2_expected_q, a_c2_r_family, bicharacter_r_matrix, cyclic_bicharacter, group_algebra, FiniteGroup,
};
use hopfkit::io::{load_algebra, save_algebra};
use hopfkit::qt_structure::verify_qt;
use hopfkit::{rat, Cyclo, Matrix, Qt, Rational, RationalQt, Scalar, Subspace};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn cyclo(n: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n as usize).prop_map(move |cs| {
        let mut x = Cyclo::from_int(0);
        for (k, (a, b)) in cs.into_iter().enumerate() {
            x = x + Cyclo::from_ratio(a, b) * Cyclo::root_of_unity(n, k as i64);
        }
        x
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3).prop_map(Rational::from_int), cols), rows)
        .prop_map(move |r| Matrix::from_rows(r, cols))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trips(a in rational()) {
        prop_assert_eq!(Rational::parse_scalar(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn cyclotomic_field_laws(
        (a, b, c) in prop::sample::select(vec![3u32, 4, 5, 12, 15]).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))
    ) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if let Some(inv) = Scalar::inv(&a) {
            prop_assert_eq!(a.clone() * inv, Cyclo::from_int(1));
        }
        prop_assert_eq!(a.to_text().parse::<Cyclo>().unwrap(), a);
    }

    #[test]
    fn cyclotomic_inverse_and_text(a in cyclo(5), b in cyclo(5)) {
        let p = a.clone() * b.clone();
        if let (Some(ai), Some(bi)) = (Scalar::inv(&a), Scalar::inv(&b)) {
            prop_assert_eq!(Scalar::inv(&p).unwrap(), ai * bi);
        }
        prop_assert_eq!(Cyclo::parse_scalar(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), 6);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == Rational::from_int(0)));
        }
    }

    #[test]
    fn inverse_when_full_rank(m in matrix(4, 4)) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(4)),
            None => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(3, 6), b in matrix(3, 6)) {
        let sa = Subspace::span(6, (0..3).map(|i| a.row(i).to_vec()));
        let sb = Subspace::span(6, (0..3).map(|i| b.row(i).to_vec()));
        prop_assert_eq!(sa.sum(&sb).dim() + sa.intersect(&sb).dim(), sa.dim() + sb.dim());
        prop_assert!(sa.sum(&sb).contains_all(&sa));
        prop_assert!(sa.contains_all(&sa.intersect(&sb)));
    }

    #[test]
    fn a_c2_family_is_quasitriangular(a in rational(), b in rational(), c in rational(), d in rational()) {
        let h = a_c2::<Rational>();
        let r = a_c2_r_family(&h, a, b.clone(), c.clone(), d);
        prop_assert!(verify_qt(&h, &r).unwrap().passed());
        let qt = RationalQt::new(h.clone(), r).unwrap();
        prop_assert_eq!(qt.q(), &a_c2_expected_q(&h, b.clone(), c.clone()));
        prop_assert_eq!(qt.is_triangular(), b == c);
        prop_assert_eq!(qt.phi_image().dim(), if b == c { 1 } else { 4 });
    }

    #[test]
    fn algebra_files_round_trip(a in rational(), b in rational(), c in rational(), d in rational()) {
        let h = a_c2::<Rational>();
        let r = a_c2_r_family(&h, a, b, c, d);
        let text = save_algebra(&h, Some(&r), None);
        let back = load_algebra::<Rational>(&text).unwrap();
        prop_assert!(back.hopf.same_structure(&h));
        prop_assert_eq!(back.r.as_ref(), Some(&r));
        prop_assert_eq!(save_algebra(&back.hopf, back.r.as_ref(), None), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// `rho(a, b) = z^(kab)` on `Z_n`: factorizable exactly when the
    /// symmetrized form is nondegenerate, and the S-matrix agrees.
    #[test]
    fn cyclic_bicharacters(n in 2usize..=7, k in 0usize..7) {
        let g = FiniteGroup::cyclic(n);
        let k = k % n;
        let r = bicharacter_r_matrix(&g, &cyclic_bicharacter(n, k)).unwrap();
        let qt = Qt::new(group_algebra(&g), r).unwrap();
        let gcd = |mut a: usize, mut b: usize| {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        prop_assert_eq!(qt.is_factorizable(), gcd(2 * k, n) == 1);
        prop_assert_eq!(qt.is_triangular(), (2 * k) % n == 0);
        let chars = characters(qt.hopf()).unwrap();
        prop_assert!(s_matrix(&qt, &chars).matches_factorizable);
    }
}
