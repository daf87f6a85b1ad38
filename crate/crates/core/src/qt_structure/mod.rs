//! R-matrices and the objects they determine.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::matrix::{axpy, zero_vec};
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::axioms::{comul_left, comul_right, t3_add, t3_eq, Tensor3};
use crate::hopf_core::{AxiomReport, FiniteDimHopf, HopfMorphism};

/// Largest `dim H` for which `R^-1` is also found by a linear solve in `H (x) H`.
const SOLVE_LIMIT: usize = 9;

/// `R_13 R_23`
fn r13_r23<F: Scalar>(h: &FiniteDimHopf<F>, r: &Tensor<F>) -> Tensor3<F> {
    let mut out = HashMap::new();
    let terms = r.nonzeros();
    for (a, b, c1) in &terms {
        for (d, f, c2) in &terms {
            let c = c1.mul_ref(c2);
            for (k, p) in h.mul_basis(*b, *f) {
                t3_add(&mut out, (*a, *d, *k), c.mul_ref(p));
            }
        }
    }
    out
}

/// `R_13 R_12`
fn r13_r12<F: Scalar>(h: &FiniteDimHopf<F>, r: &Tensor<F>) -> Tensor3<F> {
    let mut out = HashMap::new();
    let terms = r.nonzeros();
    for (a, b, c1) in &terms {
        for (d, f, c2) in &terms {
            let c = c1.mul_ref(c2);
            for (k, p) in h.mul_basis(*a, *d) {
                t3_add(&mut out, (*k, *f, *b), c.mul_ref(p));
            }
        }
    }
    out
}

fn id_tensor<F: Scalar>(n: usize) -> Matrix<F> {
    Matrix::identity(n)
}

/// Inverse of `r` in `H (x) H` by solving `r x = 1 (x) 1`.
fn solve_inverse<F: Scalar>(h: &FiniteDimHopf<F>, r: &Tensor<F>) -> Option<Tensor<F>> {
    let n = h.dim();
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e: Tensor<F> = Tensor::zeros(n, n);
            *e.entry_mut(i, j) = F::one();
            cols.push(h.tensor_mul(r, &e).flatten());
        }
    }
    let m = Matrix::from_cols(&cols, n * n);
    m.solve(&h.tensor_one().flatten()).map(|x| Tensor::from_flat(n, n, x))
}

/// Checks the quasitriangular axioms, invertibility of `R` and `(S (x) id)(R) = R^-1`.
///
/// A non-invertible `R` is reported as `Error::NotInvertible`; axiom
/// failures are reported in the returned report.
pub fn verify_qt<F: Scalar>(h: &FiniteDimHopf<F>, r: &Tensor<F>) -> Result<AxiomReport> {
    let n = h.dim();
    if r.left_dim() != n || r.right_dim() != n {
        return Err(Error::Dimension(format!("R must be {n}x{n}")));
    }
    let one = h.tensor_one();
    let s_r = r.apply(h.antipode(), &id_tensor(n));
    let s_r_inverts = h.tensor_mul(r, &s_r) == one && h.tensor_mul(&s_r, r) == one;
    if !s_r_inverts && n <= SOLVE_LIMIT && solve_inverse(h, r).is_none() {
        return Err(Error::NotInvertible("R has no inverse in H (x) H".into()));
    }
    let mut rep = AxiomReport { checks: Vec::new() };
    let qt1 = (!t3_eq(&comul_left(h, r), &r13_r23(h, r))).then(|| "(Delta (x) id)(R)".to_string());
    rep.push("(Delta (x) id)(R) = R13 R23", qt1);
    let qt2 = (r.contract_left(h.counit_vec()) != h.one()).then(|| "(eps (x) id)(R)".to_string());
    rep.push("(eps (x) id)(R) = 1", qt2);
    let qt3 = (!t3_eq(&comul_right(h, r), &r13_r12(h, r))).then(|| "(id (x) Delta)(R)".to_string());
    rep.push("(id (x) Delta)(R) = R13 R12", qt3);
    let qt4 = (r.contract_right(h.counit_vec()) != h.one()).then(|| "(id (x) eps)(R)".to_string());
    rep.push("(id (x) eps)(R) = 1", qt4);
    let qt5 = (0..n)
        .find(|&i| {
            let d = h.comul(&h.basis_vec(i));
            h.tensor_mul(&d.flip(), r) != h.tensor_mul(r, &d)
        })
        .map(|i| format!("e{i}"));
    rep.push("Delta^cop(h) R = R Delta(h)", qt5);
    rep.push("(S (x) id)(R) = R^-1", (!s_r_inverts).then(|| "(S (x) id)(R) R != 1 (x) 1".to_string()));
    Ok(rep)
}

/// Quasitriangular Hopf algebra with its derived data, all computed and
/// checked at construction.
#[derive(Clone, Debug)]
pub struct QtPair<F> {
    h: FiniteDimHopf<F>,
    r: Tensor<F>,
    r_inv: Tensor<F>,
    r21: Tensor<F>,
    q: Tensor<F>,
    u: Vec<F>,
    h_plus: Subspace<F>,
    h_minus: Subspace<F>,
    h_r: Subspace<F>,
    phi_image: Subspace<F>,
    flags: QtFlags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QtFlags {
    pub rank: usize,
    pub triangular: bool,
    pub factorizable: bool,
    pub minimal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DrinfeldReport {
    pub element: String,
    pub invertible: bool,
    pub group_like: bool,
    pub central: bool,
    /// `S^2(h) = u h u^-1` for every `h`.
    pub s2_is_ad_u: bool,
}

impl<F: Scalar> QtPair<F> {
    pub fn new(h: FiniteDimHopf<F>, r: Tensor<F>) -> Result<Self> {
        let rep = verify_qt(&h, &r)?;
        if !rep.passed() {
            return Err(Error::Axiom(rep.first_failure().unwrap_or_default()));
        }
        let n = h.dim();
        let r_inv = r.apply(h.antipode(), &Matrix::identity(n));
        if n <= SOLVE_LIMIT {
            // the two routes to R^-1 must agree
            let solved = solve_inverse(&h, &r).ok_or_else(|| Error::NotInvertible("R".into()))?;
            if solved != r_inv {
                return Err(Error::Axiom("inverse of R disagrees with (S (x) id)(R)".into()));
            }
        }
        let r21 = r.flip();
        let q = h.tensor_mul(&r21, &r);
        let mut u = zero_vec(n);
        for (a, b, c) in r.nonzeros() {
            axpy(&mut u, &c, &h.mul(&h.s(&h.basis_vec(b)), &h.basis_vec(a)));
        }
        let h_plus = Subspace::span(n, r.right_legs());
        let h_minus = Subspace::span(n, r.left_legs());
        let mut gens = h_plus.basis().to_vec();
        gens.extend(h_minus.basis().iter().cloned());
        let h_r = h.algebra_closure(&gens);
        let phi_image = Subspace::span(n, q.right_legs());
        let flags = QtFlags {
            rank: h_plus.dim(),
            triangular: q == h.tensor_one(),
            factorizable: phi_image.dim() == n,
            minimal: h_r.dim() == n,
        };
        Ok(QtPair { h, r, r_inv, r21, q, u, h_plus, h_minus, h_r, phi_image, flags })
    }

    pub fn hopf(&self) -> &FiniteDimHopf<F> {
        &self.h
    }

    pub fn r(&self) -> &Tensor<F> {
        &self.r
    }

    pub fn r_inv(&self) -> &Tensor<F> {
        &self.r_inv
    }

    pub fn r21(&self) -> &Tensor<F> {
        &self.r21
    }

    /// `Q = R_21 R`
    pub fn q(&self) -> &Tensor<F> {
        &self.q
    }

    pub fn flags(&self) -> QtFlags {
        self.flags
    }

    pub fn rank(&self) -> usize {
        self.flags.rank
    }

    pub fn is_triangular(&self) -> bool {
        self.flags.triangular
    }

    pub fn is_factorizable(&self) -> bool {
        self.flags.factorizable
    }

    pub fn is_minimal(&self) -> bool {
        self.flags.minimal
    }

    pub fn h_plus(&self) -> &Subspace<F> {
        &self.h_plus
    }

    pub fn h_minus(&self) -> &Subspace<F> {
        &self.h_minus
    }

    pub fn h_r(&self) -> &Subspace<F> {
        &self.h_r
    }

    /// Image of `Phi_R`.
    pub fn phi_image(&self) -> &Subspace<F> {
        &self.phi_image
    }

    /// `f_R(p) = <p, R1> R2`; column `j` is the image of the dual basis vector `e^j`.
    pub fn f_r(&self) -> Matrix<F> {
        self.r.0.transpose()
    }

    /// `f_R21(p) = <p, R2> R1`
    pub fn f_r21(&self) -> Matrix<F> {
        self.r.0.clone()
    }

    /// `Phi_R(p) = <p, Q1> Q2`
    pub fn phi(&self) -> Matrix<F> {
        self.q.0.transpose()
    }

    /// `rPhi(p) = <p, Q2> Q1`
    pub fn rphi(&self) -> Matrix<F> {
        self.q.0.clone()
    }

    pub fn drinfeld_element(&self) -> &[F] {
        &self.u
    }

    pub fn drinfeld_report(&self) -> DrinfeldReport {
        let h = &self.h;
        let n = h.dim();
        let u = &self.u;
        let lu = h.left_mult_matrix(u);
        let u_inv = lu.inverse().map(|m| m.mul_vec(&h.one()));
        let group_like = h.comul(u) == Tensor::simple(u, u);
        let central = (0..n).all(|i| {
            let e = h.basis_vec(i);
            h.mul(u, &e) == h.mul(&e, u)
        });
        let s2_is_ad_u = match &u_inv {
            Some(ui) => (0..n).all(|i| {
                let e = h.basis_vec(i);
                h.s(&h.s(&e)) == h.mul(&h.mul(u, &e), ui)
            }),
            None => false,
        };
        DrinfeldReport {
            element: crate::hopf_core::format_element(h.labels(), u),
            invertible: u_inv.is_some(),
            group_like,
            central,
            s2_is_ad_u,
        }
    }

    /// Checks that `f_R: H*^cop -> H` and `f_R21: H* -> H^op` are Hopf maps
    /// and that `rPhi = S Phi_R S` (with `S` acting on `H*` as the transpose).
    pub fn transmutation_report(&self) -> Result<AxiomReport> {
        let h = &self.h;
        let dual = h.dual();
        let mut rep = AxiomReport { checks: Vec::new() };
        let f_r = HopfMorphism::new(self.f_r()).verify(&dual.cop()?, h);
        rep.push("f_R is a Hopf map H*cop -> H", f_r.first_failure());
        let f_r21 = HopfMorphism::new(self.f_r21()).verify(&dual, &h.op()?);
        rep.push("f_R21 is a Hopf map H* -> Hop", f_r21.first_failure());
        let s = h.antipode();
        let s_dual = s.transpose();
        let lr = s.mul(&self.phi()).mul(&s_dual) == self.rphi();
        rep.push("rPhi = S Phi_R S", (!lr).then(|| "matrix identity".to_string()));
        let conv = self.phi() == phi_by_convolution(self);
        rep.push("Phi_R(p) = f_R21(p1) f_R(p2)", (!conv).then(|| "matrix identity".to_string()));
        Ok(rep)
    }

    /// `H_-H_+ = H_+H_- = H_R`, both rank images Hopf subalgebras of equal
    /// dimension, and `Phi_R(H*)` inside `H_R`.
    pub fn minimal_subalgebras_report(&self) -> AxiomReport {
        let h = &self.h;
        let n = h.dim();
        let mut rep = AxiomReport { checks: Vec::new() };
        let prod = |a: &Subspace<F>, b: &Subspace<F>| {
            let mut v = Vec::new();
            for x in a.basis() {
                for y in b.basis() {
                    v.push(h.mul(x, y));
                }
            }
            Subspace::span(n, v)
        };
        let hp = h.predicates(&self.h_plus);
        let hm = h.predicates(&self.h_minus);
        rep.push("H+ is a Hopf subalgebra", (!hp.hopf_subalgebra).then(|| "H+".to_string()));
        rep.push("H- is a Hopf subalgebra", (!hm.hopf_subalgebra).then(|| "H-".to_string()));
        rep.push(
            "dim H+ = dim H-",
            (self.h_plus.dim() != self.h_minus.dim())
                .then(|| format!("{} vs {}", self.h_plus.dim(), self.h_minus.dim())),
        );
        let pm = prod(&self.h_plus, &self.h_minus);
        let mp = prod(&self.h_minus, &self.h_plus);
        rep.push("H+H- = H-H+ = H_R", (pm != self.h_r || mp != self.h_r).then(|| "products".to_string()));
        rep.push("Phi_R(H*) in H_R", (!self.h_r.contains_all(&self.phi_image)).then(|| "image".to_string()));
        rep.push(
            "factorizable implies minimal",
            (self.flags.factorizable && !self.flags.minimal).then(|| "flags".to_string()),
        );
        rep
    }

    /// Identities `(S (x) S)(R) = R` and `(id (x) S^-1)(R) = R^-1`.
    pub fn antipode_report(&self) -> AxiomReport {
        let h = &self.h;
        let s = h.antipode();
        let mut rep = AxiomReport { checks: Vec::new() };
        rep.push("(S (x) S)(R) = R", (self.r.apply(s, s) != self.r).then(|| "R".to_string()));
        let ok = match h.antipode_inv() {
            Some(si) => self.r.apply(&Matrix::identity(h.dim()), si) == self.r_inv,
            None => false,
        };
        rep.push("(id (x) S^-1)(R) = R^-1", (!ok).then(|| "R".to_string()));
        rep
    }

    /// `R_q = (q (x) q)(R)` on the target of a surjective Hopf map, together
    /// with the check `f_{R_q} = q f_R q*`.
    pub fn push_r(&self, q: &HopfMorphism<F>, target: FiniteDimHopf<F>) -> Result<QtPair<F>> {
        if !q.is_surjective() {
            return Err(Error::Invalid("map is not surjective".into()));
        }
        let rep = q.verify(&self.h, &target);
        if !rep.passed() {
            return Err(Error::Axiom(rep.first_failure().unwrap_or_default()));
        }
        let rq = q.apply_tensor(&self.r);
        let pushed = QtPair::new(target, rq)?;
        let expected = q.matrix.mul(&self.f_r()).mul(&q.matrix.transpose());
        if pushed.f_r() != expected {
            return Err(Error::Axiom("f_Rq differs from q f_R q*".into()));
        }
        Ok(pushed)
    }
}

/// `p -> f_R21(p_1) f_R(p_2)`, the convolution form of `Phi_R`.
fn phi_by_convolution<F: Scalar>(qt: &QtPair<F>) -> Matrix<F> {
    let h = &qt.h;
    let n = h.dim();
    let fm = qt.f_r21();
    let fp = qt.f_r();
    let mut out: Matrix<F> = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let terms = h.mul_basis(a, b);
            if terms.is_empty() {
                continue;
            }
            let v = h.mul(&fm.col(a), &fp.col(b));
            for (j, c) in terms {
                for (i, x) in v.iter().enumerate() {
                    out.entry_mut(i, *j).add_mul(c, x);
                }
            }
        }
    }
    out
}
