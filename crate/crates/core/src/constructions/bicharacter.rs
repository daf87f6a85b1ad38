use serde::Serialize;

use super::group::FiniteGroup;
use super::group_algebra::{group_algebra, idempotents};
use crate::error::{Error, Result};
use crate::exact_math::{Scalar, Tensor};
use crate::qt_structure::verify_qt;

/// Largest group order accepted by [`enumerate_qt_group`].
pub const ENUMERATION_CAP: usize = 64;

/// A bicharacter on the character group of an abelian subgroup `sub`.
///
/// Characters of `sub` are indexed as in [`FiniteGroup::abelian_dual`];
/// `values[a][b]` is the exponent `k` with `rho(a, b) = z_e^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bicharacter {
    pub subgroup: Vec<usize>,
    pub exponent: usize,
    pub characters: Vec<Vec<usize>>,
    pub values: Vec<Vec<usize>>,
}

impl Bicharacter {
    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(|&v| v == 0)
    }

    pub fn value<F: Scalar>(&self, a: usize, b: usize) -> F {
        F::root_of_unity(self.exponent as u32, self.values[a][b] as i64).expect("roots of unity")
    }

    fn char_index(&self, chi: &[usize]) -> usize {
        self.characters.iter().position(|c| c == chi).expect("character")
    }

    /// Exponent table of the `(a, b) -> rho(a, b) rho(b, a)` form.
    pub fn symmetrized(&self) -> Vec<Vec<usize>> {
        let m = self.values.len();
        (0..m).map(|a| (0..m).map(|b| (self.values[a][b] + self.values[b][a]) % self.exponent).collect()).collect()
    }

    /// Whether the bicharacter is multiplicative in both slots.
    pub fn is_bimultiplicative(&self) -> bool {
        let e = self.exponent;
        let m = self.characters.len();
        let add = |a: usize, b: usize| {
            let s: Vec<usize> = self.characters[a].iter().zip(&self.characters[b]).map(|(x, y)| (x + y) % e).collect();
            self.char_index(&s)
        };
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    self.values[add(a, b)][c] == (self.values[a][c] + self.values[b][c]) % e
                        && self.values[a][add(b, c)] == (self.values[a][b] + self.values[a][c]) % e
                })
            })
        })
    }

    /// First `(g, a, b)` with `rho(g.a, g.b) != rho(a, b)` for the conjugation
    /// action of `g` on characters.
    pub fn invariance_witness(&self, g: &FiniteGroup) -> Option<(usize, usize, usize)> {
        let sub = &self.subgroup;
        let pos = |x: usize| sub.iter().position(|&y| y == x).unwrap();
        for x in 0..g.order() {
            let act: Vec<usize> = self
                .characters
                .iter()
                .map(|chi| {
                    let moved: Vec<usize> = sub.iter().map(|&s| chi[pos(g.conj(g.inv(x), s))]).collect();
                    self.char_index(&moved)
                })
                .collect();
            let m = self.characters.len();
            for a in 0..m {
                for b in 0..m {
                    if self.values[act[a]][act[b]] != self.values[a][b] {
                        return Some((x, a, b));
                    }
                }
            }
        }
        None
    }
}

/// Every bicharacter on the dual of the abelian subgroup `sub`.
pub fn bicharacters(g: &FiniteGroup, sub: &[usize]) -> Result<Vec<Bicharacter>> {
    if !g.is_abelian_subset(sub) {
        return Err(Error::Invalid("subgroup is not abelian".into()));
    }
    let (e, chars) = g.abelian_dual(sub);
    let m = chars.len();
    // the character group as a table
    let table: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let s: Vec<usize> = chars[a].iter().zip(&chars[b]).map(|(x, y)| (x + y) % e).collect();
                    chars.iter().position(|c| *c == s).unwrap()
                })
                .collect()
        })
        .collect();
    let dual = FiniteGroup::from_table("dual", (0..m).map(|i| format!("chi{i}")).collect(), table)?;
    let gamma = g.subgroup_group(sub)?;
    // rho(a, b) = b(phi(a)) for a homomorphism phi from the dual into the subgroup
    let mut out: Vec<Bicharacter> = dual
        .homomorphisms(&gamma)
        .into_iter()
        .map(|phi| Bicharacter {
            subgroup: sub.to_vec(),
            exponent: e,
            characters: chars.clone(),
            values: (0..m).map(|a| (0..m).map(|b| chars[b][phi[a]]).collect()).collect(),
        })
        .collect();
    out.sort_by(|x, y| x.values.cmp(&y.values));
    Ok(out)
}

/// `R = sum rho(a, b) e_a (x) e_b` in `kG`.
pub fn bicharacter_r_matrix<F: Scalar>(g: &FiniteGroup, rho: &Bicharacter) -> Result<Tensor<F>> {
    if !g.is_normal(&rho.subgroup) {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    if let Some((x, a, b)) = rho.invariance_witness(g) {
        return Err(Error::Invalid(format!(
            "bicharacter is not invariant: conjugation by {} moves the pair ({a}, {b})",
            g.labels[x]
        )));
    }
    Ok(bicharacter_r_matrix_unchecked(g, rho)?)
}

/// The same tensor without the normality and invariance checks.
pub fn bicharacter_r_matrix_unchecked<F: Scalar>(g: &FiniteGroup, rho: &Bicharacter) -> Result<Tensor<F>> {
    let n = g.order();
    let es = idempotents::<F>(g, &rho.subgroup)?;
    let mut r: Tensor<F> = Tensor::zeros(n, n);
    for (a, ea) in es.iter().enumerate() {
        for (b, eb) in es.iter().enumerate() {
            r.add_simple(&rho.value::<F>(a, b), ea, eb);
        }
    }
    Ok(r)
}

/// `rho(a, b) = z_n^{k a b}` on the full character group of `Z_n`, with
/// characters identified with `0..n` through their value on the generator.
pub fn cyclic_bicharacter(n: usize, k: usize) -> Bicharacter {
    let g = FiniteGroup::cyclic(n);
    let sub: Vec<usize> = (0..n).collect();
    let (e, chars) = g.abelian_dual(&sub);
    let gen = |c: &Vec<usize>| c[1] * n / e;
    let values = chars.iter().map(|a| chars.iter().map(|b| (k * gen(a) * gen(b)) % n * e / n).collect()).collect();
    Bicharacter { subgroup: sub, exponent: e, characters: chars, values }
}

/// One quasitriangular structure on `kG`.
#[derive(Clone, Debug)]
pub struct QtCensusRow<F> {
    pub subgroup: Vec<usize>,
    pub rho: Bicharacter,
    pub r: Tensor<F>,
    /// Number of `(subgroup, rho)` pairs producing this `R`.
    pub multiplicity: usize,
    pub qt_verified: bool,
}

/// All `R = sum rho(a, b) e_a (x) e_b` over normal abelian subgroups and
/// invariant bicharacters, with equal tensors merged.
pub fn enumerate_qt_group<F: Scalar>(g: &FiniteGroup) -> Result<Vec<QtCensusRow<F>>> {
    if g.order() > ENUMERATION_CAP {
        return Err(Error::Limit(format!("group order {} exceeds the cap {ENUMERATION_CAP}", g.order())));
    }
    let kg = group_algebra::<F>(g);
    let mut rows: Vec<QtCensusRow<F>> = Vec::new();
    for sub in g.subgroups() {
        if !g.is_normal(&sub) || !g.is_abelian_subset(&sub) {
            continue;
        }
        for rho in bicharacters(g, &sub)? {
            if rho.invariance_witness(g).is_some() {
                continue;
            }
            let r = bicharacter_r_matrix_unchecked::<F>(g, &rho)?;
            if let Some(row) = rows.iter_mut().find(|row| row.r == r) {
                row.multiplicity += 1;
                continue;
            }
            let qt_verified = verify_qt(&kg, &r).map(|rep| rep.passed()).unwrap_or(false);
            rows.push(QtCensusRow { subgroup: sub.clone(), rho, r, multiplicity: 1, qt_verified });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cyclo;

    #[test]
    fn census_counts() {
        assert_eq!(enumerate_qt_group::<Cyclo>(&FiniteGroup::cyclic(3)).unwrap().len(), 3);
        let s3 = enumerate_qt_group::<Cyclo>(&FiniteGroup::s3()).unwrap();
        assert_eq!(s3.len(), 3);
        assert!(s3.iter().all(|r| r.qt_verified));
        let g21 = enumerate_qt_group::<Cyclo>(&FiniteGroup::z7_z3()).unwrap();
        assert_eq!(g21.len(), 1);
        assert!(g21[0].rho.is_trivial());
    }

    #[test]
    fn bicharacters_are_bimultiplicative() {
        let g = FiniteGroup::cyclic(6);
        let all: Vec<usize> = (0..6).collect();
        let bs = bicharacters(&g, &all).unwrap();
        assert_eq!(bs.len(), 6);
        assert!(bs.iter().all(|b| b.is_bimultiplicative()));
    }
}
