use super::group::FiniteGroup;
use crate::exact_math::matrix::{unit_vec, zero_vec};
use crate::exact_math::{Matrix, Scalar, Tensor};
use crate::hopf_core::FiniteDimHopf;

/// `kG` on the basis of group elements.
pub fn group_algebra<F: Scalar>(g: &FiniteGroup) -> FiniteDimHopf<F> {
    let n = g.order();
    let mut s = Matrix::zeros(n, n);
    for x in 0..n {
        s.set(g.inv(x), x, F::one());
    }
    FiniteDimHopf::from_fns(
        g.labels.clone(),
        |i, j| unit_vec(n, g.mul(i, j)),
        unit_vec(n, g.identity()),
        |i| {
            let e = unit_vec(n, i);
            Tensor::simple(&e, &e)
        },
        vec![F::one(); n],
        s,
    )
    .expect("group algebra shapes")
}

/// `k^G` on the basis of point masses `d_g`.
pub fn dual_group_algebra<F: Scalar>(g: &FiniteGroup) -> FiniteDimHopf<F> {
    let n = g.order();
    let mut s = Matrix::zeros(n, n);
    for x in 0..n {
        s.set(g.inv(x), x, F::one());
    }
    let labels = g.labels.iter().map(|l| format!("d[{l}]")).collect();
    FiniteDimHopf::from_fns(
        labels,
        |i, j| if i == j { unit_vec(n, i) } else { zero_vec(n) },
        vec![F::one(); n],
        |x| {
            let mut t: Tensor<F> = Tensor::zeros(n, n);
            for s in 0..n {
                *t.entry_mut(s, g.mul(g.inv(s), x)) = F::one();
            }
            t
        },
        unit_vec(n, g.identity()),
        s,
    )
    .expect("function algebra shapes")
}

/// Primitive idempotents `e_a = |sub|^-1 sum_g a(g^-1) g` of `k sub` inside
/// `kG`, one per character of the abelian subgroup `sub`, in the order of
/// [`FiniteGroup::abelian_dual`].
pub fn idempotents<F: Scalar>(g: &FiniteGroup, sub: &[usize]) -> crate::Result<Vec<Vec<F>>> {
    if !g.is_abelian_subset(sub) {
        return Err(crate::Error::Invalid("idempotents need an abelian subgroup".into()));
    }
    let (e, chars) = g.abelian_dual(sub);
    let inv_order = F::from_ratio(1, sub.len() as i64);
    let mut out = Vec::with_capacity(chars.len());
    for chi in &chars {
        let mut v = zero_vec::<F>(g.order());
        for (k, &x) in sub.iter().enumerate() {
            let val = F::root_of_unity(e as u32, -(chi[k] as i64))
                .ok_or_else(|| crate::Error::Unsupported(format!("scalars lack the {e}-th roots of unity")))?;
            v[x] = val * inv_order.clone();
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_core::verify_hopf_axioms;
    use crate::Cyclo;
    use num_traits::Zero;

    #[test]
    fn group_and_function_algebras_verify() {
        for g in [FiniteGroup::cyclic(1), FiniteGroup::cyclic(4), FiniteGroup::s3()] {
            let kg = group_algebra::<Cyclo>(&g);
            assert!(verify_hopf_axioms(&kg).passed());
            assert!(kg.is_cocommutative());
            let fg = dual_group_algebra::<Cyclo>(&g);
            assert!(verify_hopf_axioms(&fg).passed());
            assert!(fg.is_commutative());
        }
    }

    #[test]
    fn idempotents_are_orthogonal_and_complete() {
        let g = FiniteGroup::cyclic(6);
        let kg = group_algebra::<Cyclo>(&g);
        let all: Vec<usize> = (0..6).collect();
        let es = idempotents::<Cyclo>(&g, &all).unwrap();
        let mut sum = zero_vec::<Cyclo>(6);
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let p = kg.mul(a, b);
                if i == j {
                    assert_eq!(&p, a);
                } else {
                    assert!(p.iter().all(|x| x.is_zero()));
                }
            }
            crate::exact_math::matrix::axpy(&mut sum, &Cyclo::from_int(1), a);
        }
        assert_eq!(sum, kg.one());
    }
}
