//! Hopf quotients: coinvariants, normality, the correspondence between Hopf
//! ideals and normal left coideal subalgebras, and the quotients cut out by
//! an R-matrix.

mod canonical;
mod normality;

pub use canonical::{
    canonical_quotient, central_gl_report, factor_through, index_report, maximality_check, quotient_sequence_report,
    CanonicalQuotient, IndexReport,
};
pub use normality::{canonical_normality_report, normality_criteria, NormalityReport};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::matrix::{sub_vec, unit_vec};
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::{verify_hopf_axioms, FiniteDimHopf, HopfMorphism, SubspaceHandle};

/// Right and left coinvariants `H^{co pi}` and `^{co pi}H` of a surjection.
pub fn coinvariants<F: Scalar>(h: &FiniteDimHopf<F>, pi: &HopfMorphism<F>) -> Result<(Subspace<F>, Subspace<F>)> {
    let n = h.dim();
    if pi.source_dim() != n {
        return Err(Error::Dimension("projection does not start at H".into()));
    }
    if !pi.is_surjective() {
        return Err(Error::Invalid("projection is not surjective".into()));
    }
    let m = pi.target_dim();
    let one_b = pi.apply(&h.one());
    let id = Matrix::identity(n);
    let mut left = Matrix::zeros(n * m, n);
    let mut right = Matrix::zeros(m * n, n);
    for k in 0..n {
        let e = h.basis_vec(k);
        let d = h.comul(&e);
        // (id (x) pi) Delta(h) - h (x) 1
        let l = sub_vec(&d.apply(&id, &pi.matrix).flatten(), &Tensor::simple(&e, &one_b).flatten());
        // (pi (x) id) Delta(h) - 1 (x) h
        let r = sub_vec(&d.apply(&pi.matrix, &id).flatten(), &Tensor::simple(&one_b, &e).flatten());
        for (i, v) in l.into_iter().enumerate() {
            left.set(i, k, v);
        }
        for (i, v) in r.into_iter().enumerate() {
            right.set(i, k, v);
        }
    }
    Ok((Subspace::span(n, left.kernel()), Subspace::span(n, right.kernel())))
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityEvidence {
    pub normal: bool,
    pub left_dim: usize,
    pub right_dim: usize,
    /// Only evaluated when normal.
    pub coinvariants_hopf_subalgebra: Option<bool>,
    /// `ker pi = H K^+` with `K` the coinvariants; only evaluated when normal.
    pub kernel_is_hk_plus: Option<bool>,
}

/// `H^{co pi} = ^{co pi}H`, with the consequences checked when it holds.
pub fn is_normal_surjection<F: Scalar>(h: &FiniteDimHopf<F>, pi: &HopfMorphism<F>) -> Result<NormalityEvidence> {
    let (left, right) = coinvariants(h, pi)?;
    let normal = left == right;
    let (hopf, kernel) = if normal {
        let hopf = h.predicates(&left).hopf_subalgebra;
        let kernel = ideal_from_coideal(h, &left).map(|i| i == pi.kernel()).unwrap_or(false);
        (Some(hopf), Some(kernel))
    } else {
        (None, None)
    };
    Ok(NormalityEvidence {
        normal,
        left_dim: left.dim(),
        right_dim: right.dim(),
        coinvariants_hopf_subalgebra: hopf,
        kernel_is_hk_plus: kernel,
    })
}

/// `L^+ = L cap ker(eps)`
pub fn augmentation<F: Scalar>(h: &FiniteDimHopf<F>, l: &Subspace<F>) -> Subspace<F> {
    let one = h.one();
    let vecs = l.basis().iter().map(|v| {
        let e = h.counit(v);
        sub_vec(v, &one.iter().map(|o| o.mul_ref(&e)).collect::<Vec<_>>())
    });
    Subspace::span(h.dim(), vecs)
}

/// `H L^+`, computed by one round of left products. A second round of left
/// and right products must not enlarge it.
pub fn ideal_from_coideal<F: Scalar>(h: &FiniteDimHopf<F>, l: &Subspace<F>) -> Result<Subspace<F>> {
    let n = h.dim();
    let plus = augmentation(h, l);
    let mut vecs = Vec::new();
    for k in 0..n {
        let e = h.basis_vec(k);
        for v in plus.basis() {
            vecs.push(h.mul(&e, v));
        }
    }
    let ideal = Subspace::span(n, vecs);
    let mut again = ideal.basis().to_vec();
    for k in 0..n {
        let e = h.basis_vec(k);
        for v in ideal.basis() {
            again.push(h.mul(&e, v));
            again.push(h.mul(v, &e));
        }
    }
    if Subspace::span(n, again).dim() != ideal.dim() {
        return Err(Error::Axiom("H L^+ is not a two-sided ideal".into()));
    }
    Ok(ideal)
}

/// Which predicate of a Hopf ideal fails first, if any.
pub fn hopf_ideal_failure<F: Scalar>(h: &FiniteDimHopf<F>, i: &Subspace<F>) -> Option<&'static str> {
    let n = h.dim();
    for v in i.basis() {
        for k in 0..n {
            let e = h.basis_vec(k);
            if !i.contains(&h.mul(&e, v)) || !i.contains(&h.mul(v, &e)) {
                return Some("two-sided ideal");
            }
        }
    }
    if i.basis().iter().any(|v| !h.counit(v).is_zero()) {
        return Some("contained in ker(eps)");
    }
    // Delta(I) in I (x) H + H (x) I: the image in H/I (x) H/I vanishes
    let pi = complement_projection(i, &i.complement_indices());
    if i.basis().iter().any(|v| !h.comul(v).apply(&pi, &pi).is_zero()) {
        return Some("coideal");
    }
    if i.basis().iter().any(|v| !i.contains(&h.s(v))) {
        return Some("stable under the antipode");
    }
    None
}

/// Coordinates along `e_j, j in free` in the splitting `H = I + span(e_free)`.
fn complement_projection<F: Scalar>(ideal: &Subspace<F>, free: &[usize]) -> Matrix<F> {
    let n = ideal.ambient();
    let mut cols = ideal.basis().to_vec();
    cols.extend(free.iter().map(|&j| unit_vec(n, j)));
    let inv = Matrix::from_cols(&cols, n).inverse().expect("complement spans");
    let d = ideal.dim();
    Matrix::from_rows((d..n).map(|r| inv.row(r).to_vec()).collect(), n)
}

/// Which predicate of a normal left coideal subalgebra fails first, if any.
pub fn coideal_subalgebra_failure<F: Scalar>(h: &FiniteDimHopf<F>, l: &Subspace<F>) -> Option<&'static str> {
    if !h.is_subalgebra(l) {
        Some("subalgebra")
    } else if !h.is_left_coideal(l) {
        Some("left coideal")
    } else if !h.is_ad_stable(l) {
        Some("stable under the left adjoint action")
    } else {
        None
    }
}

#[derive(Clone, Debug)]
pub enum TakeuchiInput<F> {
    HopfIdeal(Subspace<F>),
    CoidealSubalgebra(Subspace<F>),
}

/// `I -> H^{co H/I}` and `L -> H L^+`.
pub fn takeuchi<F: Scalar>(h: &FiniteDimHopf<F>, input: &TakeuchiInput<F>) -> Result<TakeuchiInput<F>> {
    match input {
        TakeuchiInput::HopfIdeal(i) => {
            if let Some(p) = hopf_ideal_failure(h, i) {
                return Err(Error::Invalid(format!("not a Hopf ideal: fails {p}")));
            }
            let qp = quotient_by_ideal(h, i)?;
            Ok(TakeuchiInput::CoidealSubalgebra(qp.left_coinvariants.space))
        }
        TakeuchiInput::CoidealSubalgebra(l) => {
            if let Some(p) = coideal_subalgebra_failure(h, l) {
                return Err(Error::Invalid(format!("not a normal left coideal subalgebra: fails {p}")));
            }
            let i = ideal_from_coideal(h, l)?;
            if let Some(p) = hopf_ideal_failure(h, &i) {
                return Err(Error::Axiom(format!("H L^+ is not a Hopf ideal: fails {p}")));
            }
            Ok(TakeuchiInput::HopfIdeal(i))
        }
    }
}

/// A quotient `H -> H/I` on the basis complementing the echelon form of `I`.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<F> {
    pub source: FiniteDimHopf<F>,
    pub ideal: Subspace<F>,
    pub projection: HopfMorphism<F>,
    pub quotient: FiniteDimHopf<F>,
    pub pushed_r: Option<Tensor<F>>,
    pub left_coinvariants: SubspaceHandle<F>,
    pub right_coinvariants: SubspaceHandle<F>,
    /// Source basis indices that form the quotient basis.
    pub complement: Vec<usize>,
}

/// Quotient by a Hopf ideal.
pub fn quotient_by_ideal<F: Scalar>(h: &FiniteDimHopf<F>, ideal: &Subspace<F>) -> Result<QuotientPresentation<F>> {
    if let Some(p) = hopf_ideal_failure(h, ideal) {
        return Err(Error::Invalid(format!("not a Hopf ideal: fails {p}")));
    }
    let free = ideal.complement_indices();
    let m = free.len();
    let pi = complement_projection(ideal, &free);
    let proj = |x: &[F]| pi.mul_vec(x);
    let labels = free.iter().map(|&j| format!("[{}]", h.labels()[j])).collect();
    let unit = proj(&h.one());
    let counit = free.iter().map(|&j| h.counit_vec()[j].clone()).collect();
    let mut s = Matrix::zeros(m, m);
    for (a, &j) in free.iter().enumerate() {
        for (i, v) in proj(&h.s(&h.basis_vec(j))).into_iter().enumerate() {
            s.set(i, a, v);
        }
    }
    let quotient = FiniteDimHopf::from_fns(
        labels,
        |a, b| proj(&h.mul(&h.basis_vec(free[a]), &h.basis_vec(free[b]))),
        unit,
        |a| h.comul(&h.basis_vec(free[a])).apply(&pi, &pi),
        counit,
        s,
    )?;
    let rep = verify_hopf_axioms(&quotient);
    if let Some(f) = rep.first_failure() {
        return Err(Error::Axiom(format!("quotient structure fails {f}")));
    }
    let projection = HopfMorphism::new(pi);
    let rep = projection.verify(h, &quotient);
    if let Some(f) = rep.first_failure() {
        return Err(Error::Axiom(format!("projection fails {f}")));
    }
    let (left, right) = coinvariants(h, &projection)?;
    Ok(QuotientPresentation {
        source: h.clone(),
        ideal: ideal.clone(),
        projection,
        quotient,
        pushed_r: None,
        left_coinvariants: h.handle(left),
        right_coinvariants: h.handle(right),
        complement: free,
    })
}

/// Quotient `H / H L^+` by a normal left coideal subalgebra `L`; `L` must be
/// contained in the coinvariants.
pub fn quotient_by<F: Scalar>(h: &FiniteDimHopf<F>, l: &Subspace<F>) -> Result<QuotientPresentation<F>> {
    if let Some(p) = coideal_subalgebra_failure(h, l) {
        return Err(Error::Invalid(format!("not a normal left coideal subalgebra: fails {p}")));
    }
    let ideal = ideal_from_coideal(h, l)?;
    let qp = quotient_by_ideal(h, &ideal)?;
    if !qp.left_coinvariants.space.contains_all(l) {
        return Err(Error::Axiom("L is not inside the coinvariants of H / H L^+".into()));
    }
    Ok(qp)
}

impl<F: Scalar> QuotientPresentation<F> {
    /// The quotient carries `(pi (x) pi)(R)`.
    pub fn with_r(mut self, r: &Tensor<F>) -> Self {
        self.pushed_r = Some(r.apply(&self.projection.matrix, &self.projection.matrix));
        self
    }

    /// `B* = pi^T(B*)` inside `H*`.
    pub fn dual_inclusion(&self) -> Subspace<F> {
        let t = self.projection.matrix.transpose();
        Subspace::span(self.source.dim(), (0..t.cols()).map(|j| t.col(j)))
    }

    pub fn is_normal(&self) -> bool {
        self.left_coinvariants.space == self.right_coinvariants.space
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a_c2, group_algebra, FiniteGroup};
    use crate::Rational;

    fn span_labels<F: Scalar>(h: &FiniteDimHopf<F>, names: &[&str]) -> Subspace<F> {
        let idx = |s: &str| h.labels().iter().position(|l| l == s).unwrap();
        Subspace::span(h.dim(), names.iter().map(|s| h.basis_vec(idx(s))))
    }

    #[test]
    fn counit_quotient_has_everything_coinvariant() {
        let h = group_algebra::<Rational>(&FiniteGroup::s3());
        let eps = HopfMorphism::new(Matrix::from_rows(vec![h.counit_vec().to_vec()], 6));
        let (l, r) = coinvariants(&h, &eps).unwrap();
        assert_eq!(l.dim(), 6);
        assert_eq!(r.dim(), 6);
    }

    #[test]
    fn sign_quotient_of_s3() {
        let g = FiniteGroup::s3();
        let h = group_algebra::<Rational>(&g);
        let a3 = Subspace::span(6, [0, 1, 2].map(|i| h.basis_vec(i)));
        let TakeuchiInput::HopfIdeal(i) = takeuchi(&h, &TakeuchiInput::CoidealSubalgebra(a3.clone())).unwrap() else {
            panic!()
        };
        assert_eq!(i.dim(), 4);
        let TakeuchiInput::CoidealSubalgebra(back) = takeuchi(&h, &TakeuchiInput::HopfIdeal(i)).unwrap() else {
            panic!()
        };
        assert_eq!(back, a3);
        let qp = quotient_by(&h, &a3).unwrap();
        assert_eq!(qp.quotient.dim(), 2);
        assert!(qp.is_normal());
        let ev = is_normal_surjection(&h, &qp.projection).unwrap();
        assert!(ev.normal && ev.coinvariants_hopf_subalgebra == Some(true) && ev.kernel_is_hk_plus == Some(true));
    }

    #[test]
    fn ac2_coideal_subalgebra() {
        let h = a_c2::<Rational>();
        let l = span_labels(&h, &["1", "xg", "yg", "xy"]);
        let TakeuchiInput::HopfIdeal(i) = takeuchi(&h, &TakeuchiInput::CoidealSubalgebra(l.clone())).unwrap() else {
            panic!()
        };
        assert_eq!(i.dim(), 6);
        let qp = quotient_by(&h, &l).unwrap();
        assert_eq!(qp.quotient.dim(), 2);
        assert_eq!(qp.left_coinvariants.space, l);
        assert!(!qp.is_normal());
        let TakeuchiInput::CoidealSubalgebra(back) = takeuchi(&h, &TakeuchiInput::HopfIdeal(i)).unwrap() else {
            panic!()
        };
        assert_eq!(back, l);
    }

    #[test]
    fn rejects_bad_inputs() {
        let h = a_c2::<Rational>();
        let not_sub = span_labels(&h, &["1", "g", "x"]);
        let err = takeuchi(&h, &TakeuchiInput::CoidealSubalgebra(not_sub)).unwrap_err().to_string();
        assert!(err.contains("subalgebra"), "{err}");
        let not_ideal = span_labels(&h, &["x"]);
        let err = takeuchi(&h, &TakeuchiInput::HopfIdeal(not_ideal)).unwrap_err().to_string();
        assert!(err.contains("two-sided ideal"), "{err}");
    }
}
