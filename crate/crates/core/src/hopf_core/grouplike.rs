use num_integer::Integer;

use super::FiniteDimHopf;
use crate::error::{Error, Result};
use crate::exact_math::matrix::{is_zero_vec, zero_vec};
use crate::exact_math::split::split_commutative;
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};

/// The group of group-like elements of a Hopf algebra.
#[derive(Clone, Debug)]
pub struct GroupLikes<F> {
    /// The identity comes first, the rest in canonical order.
    pub elements: Vec<Vec<F>>,
    /// `table[a][b]` is the index of `g_a g_b`.
    pub table: Vec<Vec<usize>>,
    /// False when some group-likes need scalars outside the searched fields.
    pub complete: bool,
}

impl<F: Scalar> GroupLikes<F> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn span(&self, dim: usize) -> Subspace<F> {
        Subspace::span(dim, self.elements.clone())
    }

    pub fn index_of(&self, g: &[F]) -> Option<usize> {
        self.elements.iter().position(|x| x.as_slice() == g)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut cur = a;
        while cur != 0 {
            cur = self.table[cur][a];
            k += 1;
        }
        k
    }
}

/// Two-sided ideal generated by a set of vectors.
pub(crate) fn ideal_closure<F: Scalar>(h: &FiniteDimHopf<F>, gens: Vec<Vec<F>>) -> Subspace<F> {
    let n = h.dim();
    let mut cur = Subspace::span(n, gens);
    loop {
        let mut vecs = cur.basis().to_vec();
        for v in cur.basis() {
            for k in 0..n {
                vecs.push(h.mul(&h.basis_vec(k), v));
                vecs.push(h.mul(v, &h.basis_vec(k)));
            }
        }
        let next = Subspace::span(n, vecs);
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// Jacobson radical via the trace form (characteristic zero).
pub(crate) fn radical<F: Scalar>(h: &FiniteDimHopf<F>) -> Subspace<F> {
    let n = h.dim();
    let traces: Vec<F> = (0..n).map(|k| h.left_mult_matrix(&h.basis_vec(k)).trace()).collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut t = F::zero();
            for (k, c) in h.mul_basis(i, j) {
                t.add_mul(c, &traces[*k]);
            }
            gram.set(i, j, t);
        }
    }
    Subspace::span(n, gram.kernel())
}

/// Least common multiple of the conductors of all structure constants.
pub(crate) fn structure_conductor<F: Scalar>(h: &FiniteDimHopf<F>) -> u32 {
    let mut n = 1u32;
    for (_, _, _, c) in h.mult_entries().iter().chain(h.comult_entries().iter()) {
        n = n.lcm(&c.conductor());
    }
    for c in h.antipode().data().iter().chain(h.counit_vec()).chain(h.one().iter()) {
        n = n.lcm(&c.conductor());
    }
    n
}

/// Algebra maps `H -> k`, each given by its values on the basis.
pub fn algebra_characters<F: Scalar>(h: &FiniteDimHopf<F>) -> Result<(Vec<Vec<F>>, bool)> {
    let n = h.dim();
    let mut gens = radical(h).basis().to_vec();
    for i in 0..n {
        for j in i + 1..n {
            let a = h.mul(&h.basis_vec(i), &h.basis_vec(j));
            let b = h.mul(&h.basis_vec(j), &h.basis_vec(i));
            let d: Vec<F> = a.into_iter().zip(b).map(|(x, y)| x - y).collect();
            if !is_zero_vec(&d) {
                gens.push(d);
            }
        }
    }
    let ideal = ideal_closure(h, gens);
    let free: Vec<usize> = {
        let piv = ideal.pivots();
        (0..n).filter(|i| !piv.contains(i)).collect()
    };
    let q = free.len();
    if q == 0 {
        return Ok((Vec::new(), true));
    }
    let project = |v: &[F]| -> Vec<F> {
        let r = ideal.residual(v);
        free.iter().map(|&i| r[i].clone()).collect()
    };
    let lift = |x: &[F]| -> Vec<F> {
        let mut v = zero_vec(n);
        for (k, &i) in free.iter().enumerate() {
            v[i] = x[k].clone();
        }
        v
    };
    let mul_b = |x: &[F], y: &[F]| project(&h.mul(&lift(x), &lift(y)));
    let one_b = project(&h.one());
    let base = structure_conductor(h);
    let conductors = [base, base.lcm(&(q as u32))];
    let split = split_commutative(q, &one_b, &mul_b, &conductors)?;
    let chars = split
        .characters
        .iter()
        .map(|chi| {
            (0..n)
                .map(|k| {
                    let p = project(&h.basis_vec(k));
                    let mut s = F::zero();
                    for (a, b) in p.iter().zip(chi) {
                        s.add_mul(a, b);
                    }
                    s
                })
                .collect()
        })
        .collect();
    Ok((chars, split.complete))
}

/// Group-like elements, found as algebra maps of the dual.
pub fn group_likes<F: Scalar>(h: &FiniteDimHopf<F>) -> Result<GroupLikes<F>> {
    let dual = h.dual();
    let (chars, complete) = algebra_characters(&dual)?;
    let one = h.one();
    let mut elements: Vec<Vec<F>> = Vec::new();
    for g in chars {
        // a character of the dual evaluated on the dual basis is an element of h
        if h.comul(&g) != Tensor::simple(&g, &g) || h.counit(&g) != F::one() {
            return Err(Error::Axiom("recovered group-like fails Delta(g) = g (x) g".into()));
        }
        elements.push(g);
    }
    elements.sort_by(|a, b| {
        let ka = a != &one;
        let kb = b != &one;
        ka.cmp(&kb).then_with(|| {
            a.iter().zip(b).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let m = elements.len();
    let mut table = vec![vec![0usize; m]; m];
    for a in 0..m {
        for b in 0..m {
            let p = h.mul(&elements[a], &elements[b]);
            table[a][b] = elements
                .iter()
                .position(|x| *x == p)
                .ok_or_else(|| Error::Axiom("group-likes not closed under product".into()))?;
        }
    }
    Ok(GroupLikes { elements, table, complete })
}
