use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::FiniteDimHopf;
use crate::exact_math::matrix::{sub_vec, zero_vec};
use crate::exact_math::{Scalar, Tensor};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// Basis indices of the first counterexample, when one exists.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed).map(|c| match &c.witness {
            Some(w) => format!("{} ({w})", c.name),
            None => c.name.clone(),
        })
    }

    pub(crate) fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed: witness.is_none(), witness });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "{mark} {} [{w}]", c.name)?,
                None => writeln!(f, "{mark} {}", c.name)?,
            }
        }
        Ok(())
    }
}

pub(crate) type Tensor3<F> = HashMap<(usize, usize, usize), F>;

pub(crate) fn t3_add<F: Scalar>(t: &mut Tensor3<F>, key: (usize, usize, usize), c: F) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key).or_insert_with(F::zero);
    *e += &c;
    if e.is_zero() {
        t.remove(&key);
    }
}

pub(crate) fn t3_eq<F: Scalar>(a: &Tensor3<F>, b: &Tensor3<F>) -> bool {
    a.len() == b.len() && a.iter().all(|(k, v)| b.get(k) == Some(v))
}

fn find<I: IntoIterator<Item = String>>(it: I) -> Option<String> {
    it.into_iter().next()
}

/// Checks every Hopf algebra axiom on basis elements.
pub fn verify_hopf_axioms<F: Scalar>(h: &FiniteDimHopf<F>) -> AxiomReport {
    let n = h.dim();
    let mut rep = AxiomReport { checks: Vec::new() };
    let e = |i: usize| h.basis_vec(i);
    let one = h.one();

    let assoc = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| {
            let ij = h.mul(&e(i), &e(j));
            let jk = h.mul(&e(j), &e(k));
            h.mul(&ij, &e(k)) != h.mul(&e(i), &jk)
        })
        .map(|(i, j, k)| format!("e{i} e{j} e{k}"));
    rep.push("associativity", assoc);

    let unit = find(
        (0..n).filter_map(|i| (h.mul(&one, &e(i)) != e(i) || h.mul(&e(i), &one) != e(i)).then(|| format!("e{i}"))),
    );
    rep.push("unit", unit);

    let coassoc = find((0..n).filter_map(|i| {
        let t = h.comul(&e(i));
        let mut l: Tensor3<F> = HashMap::new();
        let mut r: Tensor3<F> = HashMap::new();
        for (a, b, c) in t.nonzeros() {
            for (x, y, d) in h.comul_basis(a) {
                t3_add(&mut l, (*x, *y, b), c.mul_ref(d));
            }
            for (x, y, d) in h.comul_basis(b) {
                t3_add(&mut r, (a, *x, *y), c.mul_ref(d));
            }
        }
        (!t3_eq(&l, &r)).then(|| format!("e{i}"))
    }));
    rep.push("coassociativity", coassoc);

    let counit = find((0..n).filter_map(|i| {
        let t = h.comul(&e(i));
        let l = t.contract_left(h.counit_vec());
        let r = t.contract_right(h.counit_vec());
        (l != e(i) || r != e(i)).then(|| format!("e{i}"))
    }));
    rep.push("counit", counit);

    let comult_alg = find((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter_map(|(i, j)| {
        let lhs = h.comul(&h.mul(&e(i), &e(j)));
        let rhs = h.tensor_mul(&h.comul(&e(i)), &h.comul(&e(j)));
        (lhs != rhs).then(|| format!("e{i} e{j}"))
    }));
    let comult_unit = (h.comul(&one) != h.tensor_one()).then(|| "Delta(1)".to_string());
    rep.push("comultiplication is an algebra map", comult_alg.or(comult_unit));

    let counit_alg = find((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter_map(|(i, j)| {
        let lhs = h.counit(&h.mul(&e(i), &e(j)));
        let rhs = h.counit_vec()[i].mul_ref(&h.counit_vec()[j]);
        (lhs != rhs).then(|| format!("e{i} e{j}"))
    }));
    let counit_unit = (h.counit(&one) != F::one()).then(|| "eps(1)".to_string());
    rep.push("counit is an algebra map", counit_alg.or(counit_unit));

    let antipode = find((0..n).filter_map(|i| {
        let t = h.comul(&e(i));
        let mut l = zero_vec::<F>(n);
        let mut r = zero_vec::<F>(n);
        for (a, b, c) in t.nonzeros() {
            let sl = h.mul(&h.s(&e(a)), &e(b));
            let sr = h.mul(&e(a), &h.s(&e(b)));
            crate::exact_math::matrix::axpy(&mut l, &c, &sl);
            crate::exact_math::matrix::axpy(&mut r, &c, &sr);
        }
        let target: Vec<F> = one.iter().map(|u| u.mul_ref(&h.counit_vec()[i])).collect();
        (sub_vec(&l, &target).iter().any(|x| !x.is_zero()) || r != target).then(|| format!("e{i}"))
    }));
    rep.push("antipode", antipode);

    let inv = h.antipode_inv().is_none().then(|| "S is singular".to_string());
    rep.push("antipode is bijective", inv);
    rep
}

/// `(Delta (x) id)(t)` as a three-tensor.
pub(crate) fn comul_left<F: Scalar>(h: &FiniteDimHopf<F>, t: &Tensor<F>) -> Tensor3<F> {
    let mut out = HashMap::new();
    for (a, b, c) in t.nonzeros() {
        for (x, y, d) in h.comul_basis(a) {
            t3_add(&mut out, (*x, *y, b), c.mul_ref(d));
        }
    }
    out
}

/// `(id (x) Delta)(t)` as a three-tensor.
pub(crate) fn comul_right<F: Scalar>(h: &FiniteDimHopf<F>, t: &Tensor<F>) -> Tensor3<F> {
    let mut out = HashMap::new();
    for (a, b, c) in t.nonzeros() {
        for (x, y, d) in h.comul_basis(b) {
            t3_add(&mut out, (a, *x, *y), c.mul_ref(d));
        }
    }
    out
}
