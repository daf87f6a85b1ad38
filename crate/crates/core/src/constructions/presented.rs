use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_math::matrix::{axpy, zero_vec};
use crate::exact_math::{Matrix, Scalar, Tensor};
use crate::hopf_core::FiniteDimHopf;

/// A rewriting system on words in single-character generators.
///
/// Each rule replaces a two-letter word by a scalar multiple of another
/// word; a `None` right side means the word is zero.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: BTreeMap<(char, char), Option<(i64, String)>>,
}

type Lin = BTreeMap<String, i64>;

impl RewriteSystem {
    pub fn new(rules: &[(&str, Option<(i64, &str)>)]) -> Self {
        let rules = rules
            .iter()
            .map(|(lhs, rhs)| {
                let mut c = lhs.chars();
                let key = (c.next().unwrap(), c.next().unwrap());
                (key, rhs.map(|(k, w)| (k, w.to_string())))
            })
            .collect();
        RewriteSystem { rules }
    }

    fn step(&self, word: &str, leftmost: bool) -> Option<Option<(i64, String)>> {
        let chars: Vec<char> = word.chars().collect();
        let positions: Vec<usize> = if leftmost {
            (0..chars.len().saturating_sub(1)).collect()
        } else {
            (0..chars.len().saturating_sub(1)).rev().collect()
        };
        for i in positions {
            if let Some(rhs) = self.rules.get(&(chars[i], chars[i + 1])) {
                return Some(rhs.as_ref().map(|(k, w)| {
                    let mut out: String = chars[..i].iter().collect();
                    out.push_str(w);
                    out.extend(&chars[i + 2..]);
                    (*k, out)
                }));
            }
        }
        None
    }

    /// Normal form of a word as an integer combination of irreducible words.
    pub fn reduce(&self, word: &str, leftmost: bool) -> Lin {
        let mut done: Lin = BTreeMap::new();
        let mut todo: Vec<(i64, String)> = vec![(1, word.to_string())];
        let mut steps = 0usize;
        while let Some((c, w)) = todo.pop() {
            steps += 1;
            assert!(steps < 100_000, "rewriting does not terminate");
            match self.step(&w, leftmost) {
                None => {
                    let e = done.entry(w).or_insert(0);
                    *e += c;
                }
                Some(None) => {}
                Some(Some((k, w2))) => todo.push((c * k, w2)),
            }
        }
        done.retain(|_, c| *c != 0);
        done
    }

    /// Whether leftmost and rightmost strategies agree on every word of
    /// length at most `len` over `alphabet`.
    pub fn is_confluent_up_to(&self, alphabet: &[char], len: usize) -> bool {
        let mut words = vec![String::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &words {
                for &a in alphabet {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push(w2);
                }
            }
            for w in &next {
                if self.reduce(w, true) != self.reduce(w, false) {
                    return false;
                }
            }
            words = next;
        }
        true
    }
}

/// The Hopf algebra generated by a group-like `g` of order 2 and
/// anticommuting `(1, g)`-skew primitives `names` with square zero:
/// `g^2 = 1`, `g x = -x g`, `x^2 = 0`, `x y = -y x`, `Delta(x) = x (x) g + 1 (x) x`.
///
/// The basis is the set of words `x_{i1} ... x_{ik} g^e` with increasing
/// indices, ordered by length, then words ending in `g` first, then
/// lexicographically.
pub fn skew_primitive_algebra<F: Scalar>(names: &[char]) -> Result<FiniteDimHopf<F>> {
    if names.contains(&'g') || names.is_empty() {
        return Err(Error::Invalid("generator names must be nonempty and avoid g".into()));
    }
    let mut rules: Vec<(String, Option<(i64, String)>)> = vec![("gg".into(), Some((1, String::new())))];
    for (i, &x) in names.iter().enumerate() {
        rules.push((format!("g{x}"), Some((-1, format!("{x}g")))));
        rules.push((format!("{x}{x}"), None));
        for &y in &names[..i] {
            rules.push((format!("{x}{y}"), Some((-1, format!("{y}{x}")))));
        }
    }
    let rule_refs: Vec<(&str, Option<(i64, &str)>)> =
        rules.iter().map(|(l, r)| (l.as_str(), r.as_ref().map(|(k, w)| (*k, w.as_str())))).collect();
    let rw = RewriteSystem::new(&rule_refs);
    let mut alphabet = names.to_vec();
    alphabet.push('g');
    if !rw.is_confluent_up_to(&alphabet, names.len() + 2) {
        return Err(Error::Invalid("presentation is not confluent".into()));
    }

    // basis words
    let m = names.len();
    let mut basis: Vec<String> = Vec::new();
    let mut subsets: Vec<Vec<usize>> =
        (0..1usize << m).map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for s in &subsets {
        let w: String = s.iter().map(|&i| names[i]).collect();
        basis.push(w.clone());
        basis.push(format!("{w}g"));
    }
    basis.sort_by_key(|w| (w.len(), !w.ends_with('g'), w.clone()));
    let n = basis.len();
    let index = |w: &str| basis.iter().position(|b| b == w);
    let to_vec = |lin: &Lin| -> Result<Vec<F>> {
        let mut v = zero_vec::<F>(n);
        for (w, c) in lin {
            let i = index(w).ok_or_else(|| Error::Invalid(format!("word {w} is not in the basis")))?;
            v[i] += &F::from_int(*c);
        }
        Ok(v)
    };
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j] = to_vec(&rw.reduce(&format!("{}{}", basis[i], basis[j]), true))?;
        }
    }
    let labels: Vec<String> = basis.iter().map(|w| if w.is_empty() { "1".into() } else { w.clone() }).collect();
    let one = to_vec(&rw.reduce("", true))?;
    let g = to_vec(&rw.reduce("g", true))?;
    let mul = |a: &[F], b: &[F]| {
        let mut out = zero_vec::<F>(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                axpy(&mut out, &x.mul_ref(y), &mult[i][j]);
            }
        }
        out
    };
    let tmul = |s: &Tensor<F>, t: &Tensor<F>| {
        let mut out: Tensor<F> = Tensor::zeros(n, n);
        for (a, b, c) in s.nonzeros() {
            for (d, e, c2) in t.nonzeros() {
                let l = &mult[a][d];
                let r = &mult[b][e];
                out.add_simple(&c.mul_ref(&c2), l, r);
            }
        }
        out
    };

    // generator data
    let gen_vec = |x: char| to_vec(&rw.reduce(&x.to_string(), true));
    let mut gen_delta: BTreeMap<char, Tensor<F>> = BTreeMap::new();
    let mut gen_s: BTreeMap<char, Vec<F>> = BTreeMap::new();
    let mut gen_eps: BTreeMap<char, F> = BTreeMap::new();
    gen_delta.insert('g', Tensor::simple(&g, &g));
    gen_s.insert('g', g.clone());
    gen_eps.insert('g', F::one());
    for &x in names {
        let xv = gen_vec(x)?;
        let mut d = Tensor::simple(&xv, &g);
        d.add_simple(&F::one(), &one, &xv);
        gen_delta.insert(x, d);
        // S(x) g + x = 0 from the antipode axiom, so S(x) = -x g^-1 = -x g
        gen_s.insert(x, mul(&xv, &g).into_iter().map(|c| -c).collect());
        gen_eps.insert(x, F::zero());
    }
    let mut comult = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut s_cols = Vec::with_capacity(n);
    for w in &basis {
        let mut d = Tensor::simple(&one, &one);
        let mut e = F::one();
        let mut s = one.clone();
        for ch in w.chars() {
            d = tmul(&d, &gen_delta[&ch]);
            e = e.mul_ref(&gen_eps[&ch]);
            s = mul(&gen_s[&ch], &s);
        }
        comult.push(d);
        counit.push(e);
        s_cols.push(s);
    }
    FiniteDimHopf::from_fns(
        labels,
        |i, j| mult[i][j].clone(),
        one.clone(),
        |i| comult[i].clone(),
        counit,
        Matrix::from_cols(&s_cols, n),
    )
}

/// Sweedler's four-dimensional Hopf algebra on `{1, g, x, xg}`.
pub fn sweedler<F: Scalar>() -> FiniteDimHopf<F> {
    skew_primitive_algebra(&['x']).expect("Sweedler algebra")
}

/// The eight-dimensional `A_C2` on `{1, g, x, y, xg, yg, xy, xyg}`.
pub fn a_c2<F: Scalar>() -> FiniteDimHopf<F> {
    skew_primitive_algebra(&['x', 'y']).expect("A_C2")
}

/// `R(a, b, c, d) = R0 (1 (x) 1 + X + X^2 / 2)` on [`a_c2`], where
/// `R0 = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2` and
/// `X = a x (x) gx + b x (x) gy + c y (x) gx + d y (x) gy`.
///
/// With this labeling `Q = 1 (x) 1 + (b - c)(y (x) x - x (x) y)(1 (x) g) - (b - c)^2 xy (x) xy`.
pub fn a_c2_r_family<F: Scalar>(h: &FiniteDimHopf<F>, a: F, b: F, c: F, d: F) -> Tensor<F> {
    let e = |i: usize| h.basis_vec(i);
    let (one, g, x, y) = (e(0), e(1), e(2), e(3));
    let half = F::from_ratio(1, 2);
    let mut r0: Tensor<F> = Tensor::zeros(h.dim(), h.dim());
    r0.add_simple(&half, &one, &one);
    r0.add_simple(&half, &one, &g);
    r0.add_simple(&half, &g, &one);
    r0.add_simple(&-half.clone(), &g, &g);
    let gx = h.mul(&g, &x);
    let gy = h.mul(&g, &y);
    let mut big_x: Tensor<F> = Tensor::zeros(h.dim(), h.dim());
    big_x.add_simple(&a, &x, &gx);
    big_x.add_simple(&b, &x, &gy);
    big_x.add_simple(&c, &y, &gx);
    big_x.add_simple(&d, &y, &gy);
    let mut exp = h.tensor_one();
    exp.add_assign(&big_x);
    exp.add_assign(&h.tensor_mul(&big_x, &big_x).scaled(&half));
    h.tensor_mul(&r0, &exp)
}

/// The monodromy `Q` of the family as given in closed form.
pub fn a_c2_expected_q<F: Scalar>(h: &FiniteDimHopf<F>, b: F, c: F) -> Tensor<F> {
    let e = |i: usize| h.basis_vec(i);
    let (one, g, x, y, xy) = (e(0), e(1), e(2), e(3), e(6));
    let t = b - c;
    let mut out = h.tensor_one();
    let one_g = Tensor::simple(&one, &g);
    out.add_assign(&h.tensor_mul(&Tensor::simple(&y, &x), &one_g).scaled(&t));
    out.add_assign(&h.tensor_mul(&Tensor::simple(&x, &y), &one_g).scaled(&-t.clone()));
    out.add_simple(&-(t.mul_ref(&t)), &xy, &xy);
    out
}
