use crate::error::{Error, Result};
use crate::exact_math::matrix::zero_vec;
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};
use crate::hopf_core::FiniteDimHopf;
use crate::qt_structure::QtPair;

/// Drinfeld double with `R = sum (e^i (x) 1) (x) (eps (x) e_i)`.
///
/// Basis vector `i n + j` is `e^i (x) e_j`. The dual leg carries the opposite
/// product of `A*` and its usual coproduct, `Delta(f (x) a) = (f_1 (x) a_1)
/// (x) (f_2 (x) a_2)`, and `a f = f(S(a_1) ? a_3) a_2`. Via `S*` the dual leg
/// is isomorphic to `A*cop`.
pub fn drinfeld_double<F: Scalar>(a: &FiniteDimHopf<F>) -> Result<QtPair<F>> {
    let (d, r) = double_hopf(a)?;
    QtPair::new(d, r)
}

/// The two legs `A*` and `A` of the double as subspaces.
pub fn double_legs<F: Scalar>(a: &FiniteDimHopf<F>) -> (Subspace<F>, Subspace<F>) {
    let n = a.dim();
    let one = a.one();
    let eps = a.counit_vec();
    let dual_leg = (0..n).map(|i| {
        let mut v = zero_vec::<F>(n * n);
        for (j, c) in one.iter().enumerate() {
            v[i * n + j] = c.clone();
        }
        v
    });
    let a_leg = (0..n).map(|j| {
        let mut v = zero_vec::<F>(n * n);
        for (i, c) in eps.iter().enumerate() {
            v[i * n + j] = c.clone();
        }
        v
    });
    (Subspace::span(n * n, dual_leg), Subspace::span(n * n, a_leg))
}

pub(crate) fn double_hopf<F: Scalar>(a: &FiniteDimHopf<F>) -> Result<(FiniteDimHopf<F>, Tensor<F>)> {
    let n = a.dim();
    let s = a.antipode().clone();
    let s_inv = a.antipode_inv().cloned().ok_or_else(|| Error::NotInvertible("antipode".into()))?;
    let idx = |i: usize, j: usize| i * n + j;
    let e = |i: usize| a.basis_vec(i);

    // second iterated coproduct of every basis vector
    let delta2: Vec<Vec<(usize, usize, usize, F)>> = (0..n)
        .map(|j| {
            let mut out = Vec::new();
            for (x, yz, c) in a.comul(&e(j)).nonzeros() {
                for (y, z, c2) in a.comul_basis(yz) {
                    out.push((x, *y, *z, c.mul_ref(c2)));
                }
            }
            out
        })
        .collect();

    // product of functionals: (p q)(x) = p(x_1) q(x_2)
    let dual_mul = |p: &[F], q: &[F]| -> Vec<F> {
        let mut out = zero_vec::<F>(n);
        for t in 0..n {
            let mut acc = F::zero();
            for (x, y, c) in a.comul_basis(t) {
                if p[*x].is_zero() || q[*y].is_zero() {
                    continue;
                }
                acc += &c.mul_ref(&p[*x]).mul_ref(&q[*y]);
            }
            out[t] = acc;
        }
        out
    };

    // cross[j][k]: a = e_j, f = e^k, written as sum of (functional, A element)
    let mut cross_terms: Vec<Vec<Vec<(Vec<F>, usize, F)>>> = vec![vec![Vec::new(); n]; n];
    for j in 0..n {
        for (x, y, z, c) in &delta2[j] {
            // g(t) = f(S(a_1) t a_3)
            let (l, m) = (s.col(*x), e(*z));
            let prods: Vec<Vec<F>> = (0..n).map(|t| a.mul(&a.mul(&l, &e(t)), &m)).collect();
            for k in 0..n {
                let g: Vec<F> = prods.iter().map(|v| v[k].clone()).collect();
                if g.iter().all(|v| v.is_zero()) {
                    continue;
                }
                cross_terms[j][k].push((g, *y, c.clone()));
            }
        }
    }

    let mult = |p: usize, q: usize| -> Vec<F> {
        let (i, j) = (p / n, p % n);
        let (k, l) = (q / n, q % n);
        let mut out = zero_vec::<F>(n * n);
        let ei = e(i);
        for (g, y, c) in &cross_terms[j][k] {
            // opposite product on the dual leg
            let f = dual_mul(g, &ei);
            let b = a.mul(&e(*y), &e(l));
            for (fi, fc) in f.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let fcc = fc.mul_ref(c);
                for (bi, bc) in b.iter().enumerate() {
                    out[idx(fi, bi)].add_mul(&fcc, bc);
                }
            }
        }
        out
    };

    let mut unit = zero_vec::<F>(n * n);
    let one = a.one();
    for (i, c) in a.counit_vec().iter().enumerate() {
        for (j, d) in one.iter().enumerate() {
            if !c.is_zero() && !d.is_zero() {
                unit[idx(i, j)] = c.mul_ref(d);
            }
        }
    }

    // Delta(e^i) is dual to the product of A
    let mut dual_comul: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); n];
    for (x, y, t, c) in a.mult_entries() {
        dual_comul[t].push((x, y, c));
    }
    let comult = |p: usize| -> Tensor<F> {
        let (i, j) = (p / n, p % n);
        let mut t: Tensor<F> = Tensor::zeros(n * n, n * n);
        for (f1, f2, c) in &dual_comul[i] {
            for (a1, a2, d) in a.comul_basis(j) {
                t.entry_mut(idx(*f1, *a1), idx(*f2, *a2)).add_mul(c, d);
            }
        }
        t
    };

    let one_a = a.one();
    let counit: Vec<F> = (0..n * n)
        .map(|p| {
            let (i, j) = (p / n, p % n);
            one_a[i].mul_ref(&a.counit_vec()[j])
        })
        .collect();

    // S(f (x) a) = (eps (x) S(a)) (S*^-1(f) (x) 1); S* on A* is the transpose,
    // and the opposite algebra has antipode S*^-1
    let s_dual_inv = s_inv.transpose();
    let mut cols = Vec::with_capacity(n * n);
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}^*{}", a.labels()[i], a.labels()[j]))
        .collect();
    let embed_a = |v: &[F]| {
        let mut out = zero_vec::<F>(n * n);
        for (i, c) in a.counit_vec().iter().enumerate() {
            for (j, d) in v.iter().enumerate() {
                out[idx(i, j)].add_mul(c, d);
            }
        }
        out
    };
    let embed_dual = |v: &[F]| {
        let mut out = zero_vec::<F>(n * n);
        for (i, c) in v.iter().enumerate() {
            for (j, d) in one_a.iter().enumerate() {
                out[idx(i, j)].add_mul(c, d);
            }
        }
        out
    };
    let mul_dense = |x: &[F], y: &[F]| {
        let mut out = zero_vec::<F>(n * n);
        for (p, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (q, cy) in y.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let c = cx.mul_ref(cy);
                for (k, v) in mult(p, q).iter().enumerate() {
                    out[k].add_mul(&c, v);
                }
            }
        }
        out
    };
    for p in 0..n * n {
        let (i, j) = (p / n, p % n);
        let left = embed_a(&s.col(j));
        let right = embed_dual(&s_dual_inv.col(i));
        cols.push(mul_dense(&left, &right));
    }
    let antipode = Matrix::from_cols(&cols, n * n);

    let d = FiniteDimHopf::from_fns(labels, mult, unit, comult, counit, antipode)?;

    let mut r: Tensor<F> = Tensor::zeros(n * n, n * n);
    for i in 0..n {
        let left = embed_dual(&e(i));
        let right = embed_a(&e(i));
        r.add_simple(&F::one(), &left, &right);
    }
    Ok((d, r))
}
