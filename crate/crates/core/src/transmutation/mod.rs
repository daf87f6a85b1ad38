//! Braided versions of `H` and `H*` attached to an R-matrix, and the checks
//! that `Phi_R` intertwines them.

use std::collections::HashMap;

use crate::exact_math::matrix::{axpy, dot, zero_vec};
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::axioms::{t3_add, t3_eq, Tensor3};
use crate::hopf_core::{AxiomReport, FiniteDimHopf, HopfMorphism};
use crate::qt_structure::QtPair;

/// `(f_R, f_R21, Phi_R, rPhi)` as matrices acting on dual-basis coordinates.
pub fn transmutation_maps<F: Scalar>(qt: &QtPair<F>) -> (HopfMorphism<F>, HopfMorphism<F>, Matrix<F>, Matrix<F>) {
    (HopfMorphism::new(qt.f_r()), HopfMorphism::new(qt.f_r21()), qt.phi(), qt.rphi())
}

/// The braided coproduct on `H`, the braided product on `H*` and the
/// coadjoint coaction, tabulated on basis vectors.
#[derive(Clone, Debug)]
pub struct BraidedStructures<'a, F> {
    qt: &'a QtPair<F>,
    /// `a_1 S(R2) (x) ad_R1(a_2)` for each basis vector `a`.
    braided_comult: Vec<Tensor<F>>,
    /// `mult_forms[k]` is the form `(p, q) -> (p x q)(e_k)`.
    mult_forms: Vec<Tensor<F>>,
    /// `coad[x][y] = S(y_1) e_x y_2` with `y = e_y`.
    coad: Vec<Vec<Vec<F>>>,
    /// `ad[a][b] = ad_{e_a}(e_b)`
    ad: Vec<Vec<Vec<F>>>,
}

fn mul3<F: Scalar>(h: &FiniteDimHopf<F>, a: &[F], b: &[F], c: &[F]) -> Vec<F> {
    h.mul(&h.mul(a, b), c)
}

impl<'a, F: Scalar> BraidedStructures<'a, F> {
    pub fn new(qt: &'a QtPair<F>) -> Self {
        let h = qt.hopf();
        let n = h.dim();
        let e = |i: usize| h.basis_vec(i);
        let s_basis: Vec<Vec<F>> = (0..n).map(|i| h.s(&e(i))).collect();
        let ad: Vec<Vec<Vec<F>>> = (0..n).map(|a| (0..n).map(|b| h.ad(&e(a), &e(b))).collect()).collect();
        let r_terms = qt.r().nonzeros();

        let mut braided_comult = Vec::with_capacity(n);
        for k in 0..n {
            let mut t: Tensor<F> = Tensor::zeros(n, n);
            for (x, y, c) in h.comul_basis(k) {
                for (a, b, r) in &r_terms {
                    let left = h.mul(&e(*x), &s_basis[*b]);
                    t.add_simple(&c.mul_ref(r), &left, &ad[*a][*y]);
                }
            }
            braided_comult.push(t);
        }

        // (p x q)(y) = p(S(R1_1) y_1 R1_2) q(S(R2) y_2)
        let mut mult_forms = Vec::with_capacity(n);
        for k in 0..n {
            let mut t: Tensor<F> = Tensor::zeros(n, n);
            for (x, y, c) in h.comul_basis(k) {
                for (a, b, r) in &r_terms {
                    let right = h.mul(&s_basis[*b], &e(*y));
                    let cr = c.mul_ref(r);
                    for (u, v, d) in h.comul_basis(*a) {
                        let left = mul3(h, &s_basis[*u], &e(*x), &e(*v));
                        t.add_simple(&cr.mul_ref(d), &left, &right);
                    }
                }
            }
            mult_forms.push(t);
        }

        let mut coad = vec![vec![Vec::new(); n]; n];
        for (x, row) in coad.iter_mut().enumerate() {
            for (y, slot) in row.iter_mut().enumerate() {
                let mut w = zero_vec::<F>(n);
                for (u, v, c) in h.comul_basis(y) {
                    axpy(&mut w, c, &mul3(h, &s_basis[*u], &e(x), &e(*v)));
                }
                *slot = w;
            }
        }
        BraidedStructures { qt, braided_comult, mult_forms, coad, ad }
    }

    pub fn qt(&self) -> &QtPair<F> {
        self.qt
    }

    fn dim(&self) -> usize {
        self.qt.hopf().dim()
    }

    /// `a_1 S(R2) (x) ad_R1(a_2)`
    pub fn braided_comultiply(&self, a: &[F]) -> Tensor<F> {
        let n = self.dim();
        let mut out: Tensor<F> = Tensor::zeros(n, n);
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&self.braided_comult[k].scaled(c));
            }
        }
        out
    }

    /// `(S(p_1) p_3 (x) S(q_1))(R) p_2 q_2` on dual-basis coordinates.
    pub fn braided_multiply(&self, p: &[F], q: &[F]) -> Vec<F> {
        self.mult_forms
            .iter()
            .map(|t| {
                let mut acc = F::zero();
                for (i, j, c) in t.nonzeros() {
                    if !p[i].is_zero() && !q[j].is_zero() {
                        acc += &c.mul_ref(&p[i]).mul_ref(&q[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `rho(p) = p_2 (x) S(p_1) p_3` in `H* (x) H*`.
    pub fn coadjoint_coaction(&self, p: &[F]) -> Tensor<F> {
        let n = self.dim();
        let mut t: Tensor<F> = Tensor::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                *t.entry_mut(x, y) = dot(p, &self.coad[x][y]);
            }
        }
        t
    }

    /// The action `(h . p)(x) = p(S(h_1) x h_2)` of the basis vector `e_h`
    /// on `H*`, dual to the coadjoint coaction.
    pub fn action_matrix(&self, hb: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_rows((0..n).map(|x| self.coad[x][hb].clone()).collect(), n)
    }

    /// Whether `rho(C)` lies in `C (x) H*`.
    pub fn coaction_preserves(&self, c: &Subspace<F>) -> bool {
        let n = self.dim();
        c.basis().iter().all(|p| {
            let t = self.coadjoint_coaction(p);
            (0..n).all(|y| c.contains(&(0..n).map(|x| t.get(x, y).clone()).collect::<Vec<_>>()))
        })
    }

    /// `H`-linearity, multiplicativity and comultiplicativity of `Phi_R`.
    pub fn verify_braided_morphism(&self) -> AxiomReport {
        let h = self.qt.hopf();
        let n = h.dim();
        let phi = self.qt.phi();
        let mut rep = AxiomReport { checks: Vec::new() };

        let lin = (0..n).find(|&b| {
            let ad_b = Matrix::from_cols(&self.ad[b], n);
            phi.mul(&self.action_matrix(b)) != ad_b.mul(&phi)
        });
        rep.push("Phi_R(h . p) = ad_h Phi_R(p)", lin.map(|b| format!("h = {}", h.labels()[b])));

        let cols: Vec<Vec<F>> = (0..n).map(|i| phi.col(i)).collect();
        let mult = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
            let mut p = zero_vec::<F>(n);
            p[i] = F::one();
            let mut q = zero_vec::<F>(n);
            q[j] = F::one();
            phi.mul_vec(&self.braided_multiply(&p, &q)) != h.mul(&cols[i], &cols[j])
        });
        rep.push("Phi_R(p x q) = Phi_R(p) Phi_R(q)", mult.map(|(i, j)| format!("p = e^{i}, q = e^{j}")));

        let mut dual_comul: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); n];
        for (x, y, t, c) in h.mult_entries() {
            dual_comul[t].push((x, y, c));
        }
        let comult = (0..n).find(|&t| {
            let lhs = self.braided_comultiply(&cols[t]);
            let mut rhs: Tensor<F> = Tensor::zeros(n, n);
            for (x, y, c) in &dual_comul[t] {
                rhs.add_simple(c, &cols[*x], &cols[*y]);
            }
            lhs != rhs
        });
        rep.push("braided Delta(Phi_R(p)) = (Phi_R (x) Phi_R)(Delta p)", comult.map(|t| format!("p = e^{t}")));
        rep
    }

    /// `Delta(a) = a_1 R2 (x) ad_R1(a_2)` with the braided legs, and
    /// `r1 R1 (x) S(R2) r2 = 1 (x) 1`.
    pub fn verify_coproduct_relations(&self) -> AxiomReport {
        let h = self.qt.hopf();
        let n = h.dim();
        let e = |i: usize| h.basis_vec(i);
        let r_terms = self.qt.r().nonzeros();
        let mut rep = AxiomReport { checks: Vec::new() };
        let bad = (0..n).find(|&k| {
            let mut t: Tensor<F> = Tensor::zeros(n, n);
            for (u, v, c) in self.braided_comult[k].nonzeros() {
                for (a, b, r) in &r_terms {
                    t.add_simple(&c.mul_ref(r), &h.mul(&e(u), &e(*b)), &self.ad[*a][v]);
                }
            }
            t != h.comul(&e(k))
        });
        rep.push("Delta(a) = a_1 R2 (x) ad_R1(a_2) with braided legs", bad.map(|k| format!("a = {}", h.labels()[k])));
        let mut t: Tensor<F> = Tensor::zeros(n, n);
        for (a, b, r) in &r_terms {
            for (c, d, s) in &r_terms {
                t.add_simple(&r.mul_ref(s), &h.mul(&e(*a), &e(*c)), &h.mul(&h.s(&e(*d)), &e(*b)));
            }
        }
        let ok = t == h.tensor_one();
        rep.push("r1 R1 (x) S(R2) r2 = 1 (x) 1", (!ok).then(|| "tensor identity".to_string()));
        rep
    }

    /// Unit, counit, associativity and coassociativity of the braided
    /// structures, and the counit property of the coaction.
    pub fn verify_structures(&self) -> AxiomReport {
        let h = self.qt.hopf();
        let n = h.dim();
        let eps = h.counit_vec();
        let one = h.one();
        let mut rep = AxiomReport { checks: Vec::new() };

        rep.push(
            "braided Delta(1) = 1 (x) 1",
            (self.braided_comultiply(&one) != Tensor::simple(&one, &one)).then(|| "unit".to_string()),
        );
        let counit = (0..n).find(|&k| {
            let t = &self.braided_comult[k];
            let e = h.basis_vec(k);
            t.contract_left(eps) != e || t.contract_right(eps) != e
        });
        rep.push("counit law for braided Delta", counit.map(|k| format!("a = {}", h.labels()[k])));

        let coassoc = (0..n).find(|&k| {
            let t = &self.braided_comult[k];
            let mut l: Tensor3<F> = HashMap::new();
            let mut r: Tensor3<F> = HashMap::new();
            for (a, b, c) in t.nonzeros() {
                for (x, y, d) in self.braided_comult[a].nonzeros() {
                    t3_add(&mut l, (x, y, b), c.mul_ref(&d));
                }
                for (x, y, d) in self.braided_comult[b].nonzeros() {
                    t3_add(&mut r, (a, x, y), c.mul_ref(&d));
                }
            }
            !t3_eq(&l, &r)
        });
        rep.push("braided Delta is coassociative", coassoc.map(|k| format!("a = {}", h.labels()[k])));

        let basis = |i: usize| {
            let mut v = zero_vec::<F>(n);
            v[i] = F::one();
            v
        };
        let prods: Vec<Vec<Vec<F>>> =
            (0..n).map(|i| (0..n).map(|j| self.braided_multiply(&basis(i), &basis(j))).collect()).collect();
        let unit = (0..n).find(|&i| {
            self.braided_multiply(eps, &basis(i)) != basis(i) || self.braided_multiply(&basis(i), eps) != basis(i)
        });
        rep.push("eps is a unit for the braided product", unit.map(|i| format!("p = e^{i}")));

        let combine = |coeffs: &[F], row: &dyn Fn(usize) -> Vec<F>| {
            let mut out = zero_vec::<F>(n);
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut out, c, &row(k));
                }
            }
            out
        };
        let assoc = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).find(|&(i, j, k)| {
            let l = combine(&prods[i][j], &|m| prods[m][k].clone());
            let r = combine(&prods[j][k], &|m| prods[i][m].clone());
            l != r
        });
        rep.push("braided product is associative", assoc.map(|(i, j, k)| format!("e^{i}, e^{j}, e^{k}")));

        let coaction = (0..n).find(|&i| self.coadjoint_coaction(&basis(i)).contract_right(&one) != basis(i));
        rep.push("(id (x) eps) rho = id", coaction.map(|i| format!("p = e^{i}")));
        rep
    }
}
