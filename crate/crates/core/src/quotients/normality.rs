//! Sufficient conditions for a quotient of a quasitriangular Hopf algebra to
//! be normal, compared against the direct test.

use num_integer::Integer;
use serde::Serialize;

use super::canonical::CanonicalQuotient;
use super::{coinvariants, is_normal_surjection};
use crate::error::Result;
use crate::exact_math::matrix::{dot, scale_vec};
use crate::exact_math::{Scalar, Subspace};
use crate::hopf_core::{AxiomReport, HopfMorphism};
use crate::qt_structure::QtPair;

#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    /// The direct test `H^{co pi} = ^{co pi}H`.
    pub normal: bool,
    /// Each condition with its value.
    pub criteria: Vec<(String, bool)>,
    /// The implications between the conditions and `normal`.
    pub implications: AxiomReport,
}

impl NormalityReport {
    pub fn criterion(&self, name: &str) -> Option<bool> {
        self.criteria.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

fn implies(rep: &mut AxiomReport, name: &str, hyp: bool, concl: bool) {
    rep.push(name, (hyp && !concl).then(|| "hypothesis holds, conclusion fails".to_string()));
}

/// Evaluates the conditions on a surjection `pi: H -> B`.
pub fn normality_criteria<F: Scalar>(qt: &QtPair<F>, pi: &HopfMorphism<F>) -> Result<NormalityReport> {
    let h = qt.hopf();
    let n = h.dim();
    let normal = is_normal_surjection(h, pi)?.normal;
    let (left, right) = coinvariants(h, pi)?;
    let b_star = {
        let t = pi.matrix.transpose();
        Subspace::span(n, (0..t.cols()).map(|j| t.col(j)))
    };
    let f_r = qt.f_r();
    let f_r21 = qt.f_r21();
    let one = h.one();
    let is_eps = |m: &crate::Matrix<F>| b_star.basis().iter().all(|p| m.mul_vec(p) == scale_vec(&dot(p, &one), &one));
    let img = |m: &crate::Matrix<F>| b_star.map(n, |p| m.mul_vec(p));

    let r_in_coinv = left.contains_all(&Subspace::span(n, qt.r().right_legs()));
    let h_plus_in = left.contains_all(qt.h_plus());
    let coprime = pi.target_dim().gcd(&qt.rank()) == 1;
    let centraliz = h.centralizer(&left).contains_all(&img(&f_r21));
    let r_cent = is_eps(&f_r) || h.center().contains_all(&left);
    let both = left.intersect(&right);
    let r_q = pi.apply_tensor(qt.r());
    let bar_one = pi.apply(&one);
    let r_q_trivial = r_q == crate::Tensor::simple(&bar_one, &bar_one);
    let f_r_in = both.contains_all(&img(&f_r));
    let f_r21_in = both.contains_all(&img(&f_r21));

    let criteria = vec![
        ("R in H (x) H^{co B}".to_string(), r_in_coinv),
        ("H_+ inside H^{co B}".to_string(), h_plus_in),
        ("gcd(dim B, rank R) = 1".to_string(), coprime),
        ("f_R21(B*) centralizes H^{co B}".to_string(), centraliz),
        ("f_R trivial on B* or H^{co B} central".to_string(), r_cent),
        ("R_q = 1 (x) 1".to_string(), r_q_trivial),
        ("f_R(B*) inside H^{co q} cap ^{co q}H".to_string(), f_r_in),
        ("f_R21(B*) inside H^{co q} cap ^{co q}H".to_string(), f_r21_in),
    ];
    let mut rep = AxiomReport { checks: Vec::new() };
    implies(&mut rep, "R in H (x) H^{co B} implies normal", r_in_coinv, normal);
    implies(&mut rep, "H_+ inside H^{co B} implies normal", h_plus_in, normal);
    implies(&mut rep, "coprime dimension and rank implies normal", coprime, normal);
    rep.push(
        "f_R21(B*) centralizes H^{co B} iff normal",
        (centraliz != normal).then(|| format!("criterion {centraliz}, normal {normal}")),
    );
    implies(&mut rep, "f_R trivial on B* or central coinvariants implies normal", r_cent, normal);
    rep.push(
        "R_q trivial iff f_R(B*) in both coinvariants iff f_R21(B*) in both",
        (r_q_trivial != f_r_in || f_r_in != f_r21_in).then(|| format!("{r_q_trivial}, {f_r_in}, {f_r21_in}")),
    );
    Ok(NormalityReport { normal, criteria, implications: rep })
}

/// Conditions under which `K = H^{co pi}` of the canonical quotient for
/// `C = H*` is a normal Hopf subalgebra and `pi` is normal.
pub fn canonical_normality_report<F: Scalar>(qt: &QtPair<F>, cq: &CanonicalQuotient<F>) -> Result<NormalityReport> {
    let h = qt.hopf();
    let k = &cq.k_c;
    let m = cq.quotient().dim();
    let normal = cq.presentation.is_normal();
    let k_normal = h.predicates(k).normal;
    let a = k.contains_all(qt.h_plus());
    let b = h.tensor_mul(qt.r21(), qt.r()) == h.tensor_mul(qt.r(), qt.r21());
    let r_bar_trivial = cq.r_bar.r() == &cq.r_bar.hopf().tensor_one();
    let c = r_bar_trivial && h.is_commutative_subspace(k);
    let d = r_bar_trivial && k.dim().gcd(&m) == 1;
    let criteria = vec![
        ("H_+ inside K".to_string(), a),
        ("R21 R = R R21".to_string(), b),
        ("R_bar = 1 (x) 1 and K commutative".to_string(), c),
        ("R_bar = 1 (x) 1 and gcd(dim K, dim H_bar) = 1".to_string(), d),
    ];
    let mut rep = AxiomReport { checks: Vec::new() };
    for (name, v) in &criteria {
        implies(&mut rep, &format!("{name} implies K normal Hopf subalgebra"), *v, k_normal);
        implies(&mut rep, &format!("{name} implies pi normal"), *v, normal);
    }
    Ok(NormalityReport { normal, criteria, implications: rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        a_c2, a_c2_r_family, bicharacter_r_matrix, bicharacters, drinfeld_double, group_algebra, FiniteGroup,
    };
    use crate::quotients::{canonical_quotient, quotient_by};
    use crate::{Cyclo, Matrix, Rational};

    #[test]
    fn double_of_z3_onto_dual_leg() {
        let a = group_algebra::<Rational>(&FiniteGroup::cyclic(3));
        let qt = drinfeld_double(&a).unwrap();
        // kill the group leg: e^i (x) e_j -> eps(e_j) e^i
        let mut m = Matrix::zeros(3, 9);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, i * 3 + j, a.counit_vec()[j].clone());
            }
        }
        let pi = HopfMorphism::new(m);
        let rep = normality_criteria(&qt, &pi).unwrap();
        assert!(rep.normal);
        assert!(rep.implications.passed(), "{}", rep.implications);
        assert_eq!(rep.criterion("f_R21(B*) centralizes H^{co B}"), Some(true));
    }

    #[test]
    fn ks3_sign_quotient_with_bicharacter() {
        let g = FiniteGroup::s3();
        let h = group_algebra::<Cyclo>(&g);
        let rho = bicharacters(&g, &[0, 1, 2]).unwrap().into_iter().find(|r| !r.is_trivial()).unwrap();
        let r = bicharacter_r_matrix(&g, &rho).unwrap();
        let qt = QtPair::new(h, r).unwrap();
        let a3 = Subspace::span(6, [0, 1, 2].map(|i| qt.hopf().basis_vec(i)));
        let qp = quotient_by(qt.hopf(), &a3).unwrap();
        let rep = normality_criteria(&qt, &qp.projection).unwrap();
        assert!(rep.normal);
        assert_eq!(rep.criterion("gcd(dim B, rank R) = 1"), Some(true));
        assert!(rep.implications.passed(), "{}", rep.implications);
    }

    #[test]
    fn ac2_canonical_quotient_is_not_normal() {
        let h = a_c2::<Rational>();
        let r = a_c2_r_family(
            &h,
            Rational::from_int(1),
            Rational::from_int(2),
            Rational::from_int(0),
            Rational::from_int(-1),
        );
        let qt = QtPair::new(h, r).unwrap();
        let cq = canonical_quotient(&qt, &Subspace::full(8)).unwrap();
        let rep = normality_criteria(&qt, cq.projection()).unwrap();
        assert!(!rep.normal);
        assert!(rep.implications.passed(), "{}", rep.implications);
        let rep = canonical_normality_report(&qt, &cq).unwrap();
        assert!(rep.implications.passed(), "{}", rep.implications);
        assert_eq!(rep.criterion("R21 R = R R21"), Some(false));
    }

    #[test]
    fn triangular_case_commutes() {
        let h = a_c2::<Rational>();
        let r = a_c2_r_family(
            &h,
            Rational::from_int(1),
            Rational::from_int(1),
            Rational::from_int(1),
            Rational::from_int(0),
        );
        let qt = QtPair::new(h, r).unwrap();
        assert!(qt.is_triangular());
        let cq = canonical_quotient(&qt, &Subspace::full(8)).unwrap();
        assert_eq!(cq.quotient().dim(), 8);
        let rep = canonical_normality_report(&qt, &cq).unwrap();
        assert_eq!(rep.criterion("R21 R = R R21"), Some(true));
        assert!(rep.normal);
        assert!(rep.implications.passed(), "{}", rep.implications);
    }
}
