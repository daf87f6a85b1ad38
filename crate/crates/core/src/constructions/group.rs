use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("group table must be square with entries below the order".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Invalid("group table has no identity".into()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {g} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!("table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|k| if k == 0 { "1".into() } else { format!("a^{k}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(&format!("Z{n}"), labels, table).expect("cyclic group")
    }

    /// `Z_n x| Z_m` with `b a b^-1 = a^r`; element `a^i b^j` has index `j n + i`.
    pub fn semidirect(n: usize, m: usize, r: usize) -> Result<Self> {
        let mut rp = vec![1usize; m + 1];
        for j in 1..=m {
            rp[j] = rp[j - 1] * r % n;
        }
        if rp[m] % n != 1 % n {
            return Err(Error::Invalid(format!("{r}^{m} is not 1 mod {n}")));
        }
        let idx = |i: usize, j: usize| j * n + i;
        let mut labels = Vec::new();
        for j in 0..m {
            for i in 0..n {
                labels.push(match (i, j) {
                    (0, 0) => "1".to_string(),
                    (i, 0) => format!("a^{i}"),
                    (0, j) => format!("b^{j}"),
                    (i, j) => format!("a^{i}b^{j}"),
                });
            }
        }
        let mut table = vec![vec![0; n * m]; n * m];
        for j in 0..m {
            for i in 0..n {
                for l in 0..m {
                    for k in 0..n {
                        // a^i b^j a^k b^l = a^(i + r^j k) b^(j + l)
                        table[idx(i, j)][idx(k, l)] = idx((i + rp[j] * k) % n, (j + l) % m);
                    }
                }
            }
        }
        Self::from_table(&format!("Z{n}xZ{m}"), labels, table)
    }

    pub fn s3() -> Self {
        let mut g = Self::semidirect(3, 2, 2).unwrap();
        g.name = "S3".into();
        g
    }

    pub fn z7_z3() -> Self {
        let mut g = Self::semidirect(7, 3, 2).unwrap();
        g.name = "Z7xZ3".into();
        g
    }

    /// `Z{n}`, `S3` or `Z7xZ3`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "S3" => Some(Self::s3()),
            "Z7xZ3" => Some(Self::z7_z3()),
            _ => {
                let n: usize = name.strip_prefix('Z')?.parse().ok()?;
                (n >= 1).then(|| Self::cyclic(n))
            }
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        // g x g^-1
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut cur = g;
        while cur != self.identity {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        (0..self.order()).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a sorted list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        seen.insert(self.identity);
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let cls: BTreeSet<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            for &y in &cls {
                seen[y] = true;
            }
            out.push(cls.into_iter().collect());
        }
        out
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let set: HashSet<usize> = sub.iter().copied().collect();
        (0..self.order()).all(|g| sub.iter().all(|&x| set.contains(&self.conj(g, x))))
    }

    pub fn is_abelian_subset(&self, sub: &[usize]) -> bool {
        sub.iter().all(|&a| sub.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every subgroup, ordered by size and then lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = vec![self.identity];
        found.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in 0..n {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let k = self.generated(&gens);
                if found.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut v: Vec<Vec<usize>> = found.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Linear characters of an abelian subgroup with values in the `e`-th
    /// roots of unity, `e` the exponent of the subgroup. Entry `[c][k]` is the
    /// exponent of the value of character `c` on `sub[k]`.
    pub fn abelian_dual(&self, sub: &[usize]) -> (usize, Vec<Vec<usize>>) {
        use num_integer::Integer;
        let e = sub.iter().fold(1, |acc, &g| acc.lcm(&self.element_order(g)));
        let mut gens = Vec::new();
        let mut cur = vec![self.identity];
        for &g in sub {
            if cur.binary_search(&g).is_err() {
                gens.push(g);
                cur = self.generated(&gens);
            }
        }
        let pos = |x: usize| sub.iter().position(|&y| y == x).unwrap();
        let choices: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let step = e / self.element_order(g);
                (0..self.element_order(g)).map(|k| k * step).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; gens.len()];
        loop {
            let vals: Vec<usize> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            let mut chi: Vec<Option<usize>> = vec![None; sub.len()];
            chi[pos(self.identity)] = Some(0);
            let mut queue = VecDeque::from([self.identity]);
            let mut ok = true;
            while let Some(x) = queue.pop_front() {
                let vx = chi[pos(x)].unwrap();
                for (g, v) in gens.iter().zip(&vals) {
                    let y = self.mul(x, *g);
                    let vy = (vx + v) % e;
                    match chi[pos(y)] {
                        None => {
                            chi[pos(y)] = Some(vy);
                            queue.push_back(y);
                        }
                        Some(w) if w != vy => ok = false,
                        _ => {}
                    }
                }
            }
            if ok {
                out.push(chi.into_iter().map(|x| x.unwrap()).collect());
            }
            // advance the mixed-radix counter
            let mut k = 0;
            loop {
                if k == idx.len() {
                    out.sort();
                    return (e, out);
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

impl FiniteGroup {
    /// The subgroup `sub` as a group in its own right; element `k` is `sub[k]`.
    pub fn subgroup_group(&self, sub: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| sub.iter().position(|&y| y == x);
        let mut table = Vec::with_capacity(sub.len());
        for &a in sub {
            let mut row = Vec::with_capacity(sub.len());
            for &b in sub {
                row.push(pos(self.mul(a, b)).ok_or_else(|| Error::Invalid("subset is not closed".into()))?);
            }
            table.push(row);
        }
        let labels = sub.iter().map(|&x| self.labels[x].clone()).collect();
        FiniteGroup::from_table(&format!("{}<sub>", self.name), labels, table)
    }

    /// The first isomorphism onto `target` in lexicographic order, if any.
    pub fn isomorphism(&self, target: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != target.order() {
            return None;
        }
        self.homomorphisms(target).into_iter().find(|phi| {
            let mut hit = vec![false; target.order()];
            phi.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
        })
    }

    /// Every homomorphism into `target`, as image lists, in lexicographic order.
    pub fn homomorphisms(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let mut gens = Vec::new();
        let mut cur = vec![self.identity];
        for g in 0..self.order() {
            if cur.binary_search(&g).is_err() {
                gens.push(g);
                cur = self.generated(&gens);
            }
        }
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        loop {
            let mut phi: Vec<Option<usize>> = vec![None; self.order()];
            phi[self.identity] = Some(target.identity());
            let mut queue = VecDeque::from([self.identity]);
            let mut ok = true;
            while let Some(x) = queue.pop_front() {
                let px = phi[x].unwrap();
                for (g, img) in gens.iter().zip(&images) {
                    let y = self.mul(x, *g);
                    let py = target.mul(px, *img);
                    match phi[y] {
                        None => {
                            phi[y] = Some(py);
                            queue.push_back(y);
                        }
                        Some(w) if w != py => ok = false,
                        _ => {}
                    }
                }
            }
            if ok {
                out.push(phi.into_iter().map(|x| x.unwrap()).collect());
            }
            let mut k = 0;
            loop {
                if k == images.len() {
                    out.sort();
                    return out;
                }
                images[k] += 1;
                if images[k] < target.order() {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let s3 = FiniteGroup::s3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes().len(), 3);
        assert_eq!(s3.subgroups().len(), 6);
        let g = FiniteGroup::z7_z3();
        assert_eq!(g.order(), 21);
        assert_eq!(g.conjugacy_classes().len(), 5);
        assert!(FiniteGroup::semidirect(7, 3, 3).is_err());
    }

    #[test]
    fn dual_of_abelian_subgroups() {
        let z6 = FiniteGroup::cyclic(6);
        let all: Vec<usize> = (0..6).collect();
        let (e, chars) = z6.abelian_dual(&all);
        assert_eq!(e, 6);
        assert_eq!(chars.len(), 6);
        let s3 = FiniteGroup::s3();
        let a3 = s3.generated(&[1]);
        assert_eq!(s3.abelian_dual(&a3).1.len(), 3);
    }

    #[test]
    fn homomorphism_counts() {
        let z3 = FiniteGroup::cyclic(3);
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z3.homomorphisms(&z3).len(), 3);
        assert_eq!(z6.homomorphisms(&z3).len(), 3);
        assert_eq!(FiniteGroup::s3().homomorphisms(&z3).len(), 1);
        let a3 = FiniteGroup::s3().subgroup_group(&[0, 1, 2]).unwrap();
        assert_eq!(a3.order(), 3);
    }
}
