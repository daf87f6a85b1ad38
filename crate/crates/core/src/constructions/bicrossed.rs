use super::group::FiniteGroup;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_math::matrix::{unit_vec, zero_vec};
use crate::exact_math::{Cyclo, Matrix, Scalar, Tensor};
use crate::hopf_core::{verify_hopf_axioms, FiniteDimHopf};

/// A matched pair of groups, optionally with a cocycle on the product side.
///
/// `right[s][x]` is `s <| x` in `gamma` and `left[s][x]` is `s |> x` in `f`.
/// `sigma[s][x][y]` is the value at `s` of `sigma(x, y)` in `k^gamma`; `None`
/// means the trivial cocycle.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub gamma: FiniteGroup,
    pub f: FiniteGroup,
    pub right: Vec<Vec<usize>>,
    pub left: Vec<Vec<usize>>,
    pub sigma: Option<Vec<Vec<Vec<Cyclo>>>>,
}

impl MatchedPair {
    /// Checks the action and compatibility constraints, naming the first violated one.
    pub fn validate(&self) -> Result<()> {
        let (g, f) = (&self.gamma, &self.f);
        let fail = |what: &str, s: usize, t: usize, x: usize| {
            Err(Error::Invalid(format!(
                "matched pair violates {what} at ({}, {}, {})",
                g.labels[s], g.labels[t], f.labels[x]
            )))
        };
        if self.right.len() != g.order() || self.left.len() != g.order() {
            return Err(Error::Dimension("action tables must have one row per element of gamma".into()));
        }
        if self.right.iter().chain(&self.left).any(|r| r.len() != f.order()) {
            return Err(Error::Dimension("action tables must have one column per element of F".into()));
        }
        if self.right.iter().flatten().any(|&v| v >= g.order()) || self.left.iter().flatten().any(|&v| v >= f.order()) {
            return Err(Error::Invalid("action table entry out of range".into()));
        }
        for s in 0..g.order() {
            if self.right[s][f.identity()] != s {
                return fail("s <| 1 = s", s, s, f.identity());
            }
            if self.left[s][f.identity()] != f.identity() {
                return fail("s |> 1 = 1", s, s, f.identity());
            }
        }
        for x in 0..f.order() {
            if self.right[g.identity()][x] != g.identity() {
                return fail("1 <| x = 1", g.identity(), g.identity(), x);
            }
            if self.left[g.identity()][x] != x {
                return fail("1 |> x = x", g.identity(), g.identity(), x);
            }
        }
        for s in 0..g.order() {
            for x in 0..f.order() {
                for y in 0..f.order() {
                    let xy = f.mul(x, y);
                    let sx = self.right[s][x];
                    if self.right[s][xy] != self.right[sx][y] {
                        return fail("s <| xy = (s <| x) <| y", s, s, x);
                    }
                    if self.left[s][xy] != f.mul(self.left[s][x], self.left[sx][y]) {
                        return fail("s |> xy = (s |> x)((s <| x) |> y)", s, s, x);
                    }
                }
                for t in 0..g.order() {
                    let st = g.mul(s, t);
                    let tx = self.left[t][x];
                    if self.left[st][x] != self.left[s][tx] {
                        return fail("st |> x = s |> (t |> x)", s, t, x);
                    }
                    if self.right[st][x] != g.mul(self.right[s][tx], self.right[t][x]) {
                        return fail("st <| x = (s <| (t |> x))(t <| x)", s, t, x);
                    }
                }
            }
        }
        if let Some(sigma) = &self.sigma {
            self.validate_cocycle(sigma)?;
        }
        Ok(())
    }

    fn validate_cocycle(&self, sigma: &[Vec<Vec<Cyclo>>]) -> Result<()> {
        let (g, f) = (&self.gamma, &self.f);
        let m = f.order();
        if sigma.len() != g.order() || sigma.iter().any(|t| t.len() != m || t.iter().any(|r| r.len() != m)) {
            return Err(Error::Dimension("cocycle table must be |gamma| x |F| x |F|".into()));
        }
        let one = Cyclo::from_int(1);
        let e = f.identity();
        for s in 0..g.order() {
            for x in 0..m {
                if sigma[s][e][x] != one || sigma[s][x][e] != one {
                    return Err(Error::Invalid(format!(
                        "cocycle is not normalized at ({}, {})",
                        g.labels[s], f.labels[x]
                    )));
                }
                for y in 0..m {
                    if sigma[s][x][y].is_zero() {
                        return Err(Error::Invalid("cocycle takes the value 0".into()));
                    }
                    for z in 0..m {
                        // sigma_s(x, y) sigma_s(xy, z) = sigma_{s<|x}(y, z) sigma_s(x, yz)
                        let l = sigma[s][x][y].clone() * sigma[s][f.mul(x, y)][z].clone();
                        let r = sigma[self.right[s][x]][y][z].clone() * sigma[s][x][f.mul(y, z)].clone();
                        if l != r {
                            return Err(Error::Invalid(format!(
                                "cocycle condition fails at ({}, {}, {}, {})",
                                g.labels[s], f.labels[x], f.labels[y], f.labels[z]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The matched pair of an exact factorization `sigma = gamma f`, read off
    /// from `s x = (s |> x)(s <| x)`.
    pub fn from_factorization(sigma: &FiniteGroup, gamma: &[usize], f: &[usize]) -> Result<Self> {
        if gamma.len() * f.len() != sigma.order() {
            return Err(Error::Invalid("orders do not multiply to the group order".into()));
        }
        let mut seen = vec![false; sigma.order()];
        for &x in f {
            for &s in gamma {
                let p = sigma.mul(x, s);
                if seen[p] {
                    return Err(Error::Invalid("subgroups do not factorize the group".into()));
                }
                seen[p] = true;
            }
        }
        let mut right = vec![vec![0; f.len()]; gamma.len()];
        let mut left = vec![vec![0; f.len()]; gamma.len()];
        for (si, &s) in gamma.iter().enumerate() {
            for (xi, &x) in f.iter().enumerate() {
                let p = sigma.mul(s, x);
                let (yi, ti) = f
                    .iter()
                    .enumerate()
                    .flat_map(|(yi, &y)| gamma.iter().enumerate().map(move |(ti, &t)| (yi, ti, y, t)))
                    .find(|&(_, _, y, t)| sigma.mul(y, t) == p)
                    .map(|(yi, ti, _, _)| (yi, ti))
                    .unwrap();
                left[si][xi] = yi;
                right[si][xi] = ti;
            }
        }
        let mp =
            MatchedPair { gamma: sigma.subgroup_group(gamma)?, f: sigma.subgroup_group(f)?, right, left, sigma: None };
        mp.validate()?;
        Ok(mp)
    }

    /// `f` acting on `gamma` by an automorphism table `aut[x][s]`, with `|>` trivial.
    pub fn from_right_action(gamma: FiniteGroup, f: FiniteGroup, aut: &[Vec<usize>]) -> Result<Self> {
        let right = (0..gamma.order()).map(|s| (0..f.order()).map(|x| aut[x][s]).collect()).collect();
        let left = (0..gamma.order()).map(|_| (0..f.order()).collect()).collect();
        let mp = MatchedPair { gamma, f, right, left, sigma: None };
        mp.validate()?;
        Ok(mp)
    }

    /// Attaches a cocycle, rejecting it when the constraints fail.
    pub fn with_cocycle(mut self, sigma: Vec<Vec<Vec<Cyclo>>>) -> Result<Self> {
        self.sigma = Some(sigma);
        self.validate()?;
        Ok(self)
    }

    pub fn left_action_is_trivial(&self) -> bool {
        self.left.iter().all(|row| row.iter().enumerate().all(|(x, &v)| v == x))
    }
}

/// `k^gamma # kF` on the basis `e_s # x` (index `s |F| + x`) with
/// `(e_s # x)(e_t # y) = [s <| x = t] sigma_s(x, y) e_s # xy` and
/// `Delta(e_g # x) = sum_{st = g} e_s # (t |> x) (x) e_t # x`.
///
/// The antipode sends `e_s # x` to a multiple of `e_{(s<|x)^-1} # (s|>x)^-1`;
/// the multiples are solved for. A cocycle that does not make `Delta`
/// multiplicative is rejected with the failing axiom.
pub fn bicrossed_product<F: Scalar>(mp: &MatchedPair) -> Result<FiniteDimHopf<F>> {
    mp.validate()?;
    let (g, f) = (&mp.gamma, &mp.f);
    let m = f.order();
    let n = g.order() * m;
    let idx = |s: usize, x: usize| s * m + x;
    let sigma: Option<Vec<Vec<Vec<F>>>> = match &mp.sigma {
        None => None,
        Some(t) => Some(
            t.iter()
                .map(|a| {
                    a.iter()
                        .map(|b| b.iter().map(F::from_cyclo).collect::<Option<Vec<F>>>())
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Unsupported("cocycle values lie outside the scalar field".into()))?,
        ),
    };
    let labels: Vec<String> = (0..g.order())
        .flat_map(|s| (0..m).map(move |x| (s, x)))
        .map(|(s, x)| format!("e[{}]#{}", g.labels[s], f.labels[x]))
        .collect();
    let mut unit = zero_vec::<F>(n);
    for s in 0..g.order() {
        unit[idx(s, f.identity())] = F::one();
    }
    let counit: Vec<F> = (0..n).map(|p| if p / m == g.identity() { F::one() } else { F::zero() }).collect();
    let mult = |p: usize, q: usize| {
        let (s, x) = (p / m, p % m);
        let (t, y) = (q / m, q % m);
        if mp.right[s][x] != t {
            return zero_vec(n);
        }
        let mut v = unit_vec(n, idx(s, f.mul(x, y)));
        if let Some(sg) = &sigma {
            v[idx(s, f.mul(x, y))] = sg[s][x][y].clone();
        }
        v
    };
    let comult = |p: usize| {
        let (gg, x) = (p / m, p % m);
        let mut t: Tensor<F> = Tensor::zeros(n, n);
        for s in 0..g.order() {
            let tt = g.mul(g.inv(s), gg);
            *t.entry_mut(idx(s, mp.left[tt][x]), idx(tt, x)) = F::one();
        }
        t
    };
    let target = |p: usize| {
        let (s, x) = (p / m, p % m);
        idx(g.inv(mp.right[s][x]), f.inv(mp.left[s][x]))
    };
    // m(S (x) id) Delta = eps 1, linear in the unknown multiples
    let mut a: Matrix<F> = Matrix::zeros(n * n, n);
    let mut rhs = zero_vec::<F>(n * n);
    for k in 0..n {
        for (p, q, c) in comult(k).nonzeros() {
            for (j, v) in mult(target(p), q).into_iter().enumerate() {
                if !v.is_zero() {
                    a.entry_mut(k * n + j, p).add_mul(&c, &v);
                }
            }
        }
        for (j, u) in unit.iter().enumerate() {
            rhs[k * n + j] = counit[k].mul_ref(u);
        }
    }
    let coeffs = a
        .solve(&rhs)
        .ok_or_else(|| Error::Invalid("no antipode: the cocycle is incompatible with the coproduct".into()))?;
    let mut s_mat = Matrix::zeros(n, n);
    for (p, c) in coeffs.into_iter().enumerate() {
        s_mat.set(target(p), p, c);
    }
    let h = FiniteDimHopf::from_fns(labels, mult, unit, comult, counit, s_mat)?;
    if mp.sigma.is_some() {
        let rep = verify_hopf_axioms(&h);
        if let Some(fail) = rep.first_failure() {
            return Err(Error::Invalid(format!("cocycle is incompatible with the coproduct: {fail}")));
        }
    }
    Ok(h)
}
