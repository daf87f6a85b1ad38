use super::FiniteDimHopf;
use crate::error::{Error, Result};
use crate::exact_math::Scalar;

impl<F: Scalar> FiniteDimHopf<F> {
    /// The dual Hopf algebra on the dual basis `e^0, ..., e^{n-1}`.
    pub fn dual(&self) -> FiniteDimHopf<F> {
        let n = self.dim();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (k, terms) in self.comult.iter().enumerate() {
            for (i, j, c) in terms {
                mult[*i][*j].push((k, c.clone()));
            }
        }
        for row in mult.iter_mut() {
            for v in row.iter_mut() {
                v.sort_by_key(|(k, _)| *k);
            }
        }
        let mut comult = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i][j] {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        let labels = self.labels.iter().map(|l| format!("{l}^*")).collect();
        FiniteDimHopf::from_sparse(
            labels,
            mult,
            self.counit.clone(),
            comult,
            self.unit.clone(),
            self.antipode.transpose(),
        )
        .expect("dual has consistent shape")
    }

    /// Opposite multiplication, antipode `S^{-1}`.
    pub fn op(&self) -> Result<FiniteDimHopf<F>> {
        let n = self.dim();
        let s_inv = self.antipode_inv.clone().ok_or_else(|| Error::NotInvertible("antipode".into()))?;
        let mult = (0..n).map(|i| (0..n).map(|j| self.mult[j][i].clone()).collect()).collect();
        FiniteDimHopf::from_sparse(
            self.labels.clone(),
            mult,
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            s_inv,
        )
    }

    /// Opposite comultiplication, antipode `S^{-1}`.
    pub fn cop(&self) -> Result<FiniteDimHopf<F>> {
        let s_inv = self.antipode_inv.clone().ok_or_else(|| Error::NotInvertible("antipode".into()))?;
        let comult = self
            .comult
            .iter()
            .map(|t| {
                let mut v: Vec<_> = t.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect();
                v.sort_by_key(|(j, k, _)| (*j, *k));
                v
            })
            .collect();
        FiniteDimHopf::from_sparse(
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            comult,
            self.counit.clone(),
            s_inv,
        )
    }
}
