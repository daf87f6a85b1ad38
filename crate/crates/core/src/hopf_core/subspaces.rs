use serde::Serialize;

use super::FiniteDimHopf;
use crate::exact_math::matrix::{axpy, zero_vec};
use crate::exact_math::{Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubspacePredicates {
    pub subalgebra: bool,
    pub left_coideal: bool,
    pub right_coideal: bool,
    pub subcoalgebra: bool,
    pub s_stable: bool,
    pub hopf_subalgebra: bool,
    pub ad_stable: bool,
    pub normal: bool,
    pub commutative: bool,
}

/// A subspace together with its structural predicates.
#[derive(Clone, Debug)]
pub struct SubspaceHandle<F> {
    pub space: Subspace<F>,
    pub predicates: SubspacePredicates,
}

impl<F: Scalar> FiniteDimHopf<F> {
    pub fn handle(&self, space: Subspace<F>) -> SubspaceHandle<F> {
        let predicates = self.predicates(&space);
        SubspaceHandle { space, predicates }
    }

    /// `S(h_1) a h_2`
    pub fn right_ad(&self, h: &[F], a: &[F]) -> Vec<F> {
        let mut out = zero_vec(self.dim());
        for (i, j, c) in self.comul(h).nonzeros() {
            let v = self.mul(&self.mul(&self.s(&self.basis_vec(i)), a), &self.basis_vec(j));
            axpy(&mut out, &c, &v);
        }
        out
    }

    pub fn is_subalgebra(&self, v: &Subspace<F>) -> bool {
        v.contains(&self.one()) && v.basis().iter().all(|a| v.basis().iter().all(|b| v.contains(&self.mul(a, b))))
    }

    /// `Delta(V) in H (x) V`
    pub fn is_left_coideal(&self, v: &Subspace<F>) -> bool {
        v.basis().iter().all(|a| self.comul(a).right_legs().iter().all(|r| v.contains(r)))
    }

    /// `Delta(V) in V (x) H`
    pub fn is_right_coideal(&self, v: &Subspace<F>) -> bool {
        v.basis().iter().all(|a| self.comul(a).left_legs().iter().all(|c| v.contains(c)))
    }

    pub fn is_ad_stable(&self, v: &Subspace<F>) -> bool {
        (0..self.dim()).all(|k| v.basis().iter().all(|a| v.contains(&self.ad(&self.basis_vec(k), a))))
    }

    pub fn is_right_ad_stable(&self, v: &Subspace<F>) -> bool {
        (0..self.dim()).all(|k| v.basis().iter().all(|a| v.contains(&self.right_ad(&self.basis_vec(k), a))))
    }

    pub fn is_s_stable(&self, v: &Subspace<F>) -> bool {
        v.basis().iter().all(|a| v.contains(&self.s(a)))
    }

    pub fn is_commutative_subspace(&self, v: &Subspace<F>) -> bool {
        let b = v.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.mul(&b[i], &b[j]) == self.mul(&b[j], &b[i])))
    }

    pub fn predicates(&self, v: &Subspace<F>) -> SubspacePredicates {
        let subalgebra = self.is_subalgebra(v);
        let left_coideal = self.is_left_coideal(v);
        let right_coideal = self.is_right_coideal(v);
        let subcoalgebra = left_coideal && right_coideal;
        let s_stable = self.is_s_stable(v);
        let hopf_subalgebra = subalgebra && subcoalgebra && s_stable;
        let ad_stable = self.is_ad_stable(v);
        let normal = hopf_subalgebra && ad_stable && self.is_right_ad_stable(v);
        let commutative = self.is_commutative_subspace(v);
        SubspacePredicates {
            subalgebra,
            left_coideal,
            right_coideal,
            subcoalgebra,
            s_stable,
            hopf_subalgebra,
            ad_stable,
            normal,
            commutative,
        }
    }

    /// Subalgebra generated by `gens`.
    pub fn algebra_closure(&self, gens: &[Vec<F>]) -> Subspace<F> {
        let n = self.dim();
        let mut cur = Subspace::span(n, gens.iter().cloned().chain([self.one()]));
        loop {
            let mut vecs = cur.basis().to_vec();
            for a in cur.basis() {
                for b in cur.basis() {
                    vecs.push(self.mul(a, b));
                }
            }
            let next = Subspace::span(n, vecs);
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Hopf subalgebra generated by `gens`.
    pub fn hopf_closure(&self, gens: &[Vec<F>]) -> Subspace<F> {
        let n = self.dim();
        let mut cur = self.algebra_closure(gens);
        loop {
            let mut vecs = cur.basis().to_vec();
            for a in cur.basis() {
                vecs.push(self.s(a));
                let t = self.comul(a);
                vecs.extend(t.left_legs());
                vecs.extend(t.right_legs());
            }
            let next = self.algebra_closure(&Subspace::span(n, vecs).basis().to_vec());
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// `{x : x v = v x for all v in V}`
    pub fn centralizer(&self, v: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let d = v.dim();
        if d == 0 {
            return Subspace::full(n);
        }
        let mut m = Matrix::zeros(n * d, n);
        for (t, a) in v.basis().iter().enumerate() {
            let l = self.left_mult_matrix(a);
            let r = self.right_mult_matrix(a);
            for i in 0..n {
                for j in 0..n {
                    m.set(t * n + i, j, r.get(i, j).clone() - l.get(i, j).clone());
                }
            }
        }
        Subspace::span(n, m.kernel())
    }

    pub fn center(&self) -> Subspace<F> {
        self.centralizer(&Subspace::full(self.dim()))
    }
}
