use super::axioms::AxiomReport;
use super::FiniteDimHopf;
use crate::exact_math::{Matrix, Scalar, Subspace, Tensor};

/// A linear map between Hopf algebras; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfMorphism<F> {
    pub matrix: Matrix<F>,
}

impl<F: Scalar> HopfMorphism<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        HopfMorphism { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul_vec(v)
    }

    pub fn apply_tensor(&self, t: &Tensor<F>) -> Tensor<F> {
        t.apply(&self.matrix, &self.matrix)
    }

    pub fn kernel(&self) -> Subspace<F> {
        Subspace::span(self.source_dim(), self.matrix.kernel())
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target_dim()
    }

    /// `other` after `self`.
    pub fn then(&self, other: &HopfMorphism<F>) -> HopfMorphism<F> {
        HopfMorphism::new(other.matrix.mul(&self.matrix))
    }

    /// Checks that the map respects every structure map.
    pub fn verify(&self, src: &FiniteDimHopf<F>, tgt: &FiniteDimHopf<F>) -> AxiomReport {
        let mut rep = AxiomReport { checks: Vec::new() };
        let n = src.dim();
        let shape_ok = self.source_dim() == n && self.target_dim() == tgt.dim();
        rep.push("shape", (!shape_ok).then(|| "dimension mismatch".to_string()));
        if !shape_ok {
            return rep;
        }
        let img: Vec<Vec<F>> = (0..n).map(|j| self.matrix.col(j)).collect();
        let mult = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.apply(&src.mul(&src.basis_vec(i), &src.basis_vec(j))) != tgt.mul(&img[i], &img[j]))
            .map(|(i, j)| format!("e{i} e{j}"));
        let unit = (self.apply(&src.one()) != tgt.one()).then(|| "unit".to_string());
        rep.push("algebra map", mult.or(unit));
        let comult = (0..n)
            .find(|&i| self.apply_tensor(&src.comul(&src.basis_vec(i))) != tgt.comul(&img[i]))
            .map(|i| format!("e{i}"));
        let counit = (0..n).find(|&i| tgt.counit(&img[i]) != src.counit_vec()[i]).map(|i| format!("eps e{i}"));
        rep.push("coalgebra map", comult.or(counit));
        let anti = (0..n).find(|&i| self.apply(&src.s(&src.basis_vec(i))) != tgt.s(&img[i])).map(|i| format!("e{i}"));
        rep.push("commutes with antipode", anti);
        rep
    }
}
