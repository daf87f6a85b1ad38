//! Characters, the S-matrix, transparent characters and the classification
//! checklist for odd square-free dimension.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::matrix::{dot, scale_vec};
use crate::exact_math::split::split_commutative;
use crate::exact_math::{Matrix, Scalar, Subspace};
use crate::hopf_core::{format_element, group_likes, structure_conductor, FiniteDimHopf};
use crate::qt_structure::QtPair;
use crate::quotients::canonical_quotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacterSource {
    /// Split from the center: primitive central idempotents and traces.
    CenterSplitting,
    UserSupplied,
}

/// Irreducible characters as vectors on the dual basis, `eps` first.
#[derive(Clone, Debug)]
pub struct CharacterSet<F> {
    pub characters: Vec<Vec<F>>,
    pub degrees: Vec<usize>,
    pub source: CharacterSource,
}

impl<F: Scalar> CharacterSet<F> {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}

fn integer_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

fn degree_of<F: Scalar>(h: &FiniteDimHopf<F>, chi: &[F]) -> Result<usize> {
    let d = dot(chi, &h.one());
    (1..=h.dim())
        .find(|&k| d == F::from_int(k as i64))
        .ok_or_else(|| Error::Invalid("character degree is not a positive integer".into()))
}

/// Irreducible characters of a split semisimple `H`: for each primitive
/// central idempotent `e` with `dim He = d^2`, `chi(x) = tr(L_{xe}) / d`.
pub fn characters<F: Scalar>(h: &FiniteDimHopf<F>) -> Result<CharacterSet<F>> {
    if !h.is_semisimple() {
        return Err(Error::Unsupported("characters unavailable: H is not semisimple".into()));
    }
    let n = h.dim();
    let center = h.center();
    let zb = center.basis().to_vec();
    let k = zb.len();
    let lift = |x: &[F]| {
        let mut v = vec![F::zero(); n];
        for (c, b) in x.iter().zip(&zb) {
            for (vi, bi) in v.iter_mut().zip(b) {
                vi.add_mul(c, bi);
            }
        }
        v
    };
    let coords = |v: &[F]| center.coords(v).expect("center is a subalgebra");
    let mul = |x: &[F], y: &[F]| coords(&h.mul(&lift(x), &lift(y)));
    let one = coords(&h.one());
    let base = structure_conductor(h);
    let split = split_commutative(k, &one, &mul, &[base, base.lcm(&(n as u32))])?;
    if !split.complete {
        return Err(Error::Unsupported(
            "characters unavailable: center does not split over the searched fields".into(),
        ));
    }
    let mut out = Vec::new();
    for e in &split.idempotents {
        let e = lift(e);
        let block = h.left_mult_matrix(&e).rank();
        let d = integer_sqrt(block).ok_or_else(|| {
            Error::Unsupported(format!("characters unavailable: block of dimension {block} is not split"))
        })?;
        let dinv = F::from_int(d as i64).inv().unwrap();
        let chi: Vec<F> =
            (0..n).map(|i| h.left_mult_matrix(&h.mul(&h.basis_vec(i), &e)).trace().mul_ref(&dinv)).collect();
        out.push(chi);
    }
    order_and_validate(h, out, CharacterSource::CenterSplitting)
}

/// Checks a user-supplied list and returns it in canonical order.
pub fn user_characters<F: Scalar>(h: &FiniteDimHopf<F>, chars: Vec<Vec<F>>) -> Result<CharacterSet<F>> {
    if !h.is_semisimple() {
        return Err(Error::Unsupported("characters unavailable: H is not semisimple".into()));
    }
    if chars.iter().any(|c| c.len() != h.dim()) {
        return Err(Error::Dimension("character length differs from dim H".into()));
    }
    order_and_validate(h, chars, CharacterSource::UserSupplied)
}

fn order_and_validate<F: Scalar>(
    h: &FiniteDimHopf<F>,
    mut chars: Vec<Vec<F>>,
    source: CharacterSource,
) -> Result<CharacterSet<F>> {
    let eps = h.counit_vec().to_vec();
    let mut degrees = Vec::new();
    for c in &chars {
        degrees.push(degree_of(h, c)?);
    }
    let mut idx: Vec<usize> = (0..chars.len()).collect();
    idx.sort_by(|&a, &b| {
        (chars[a] != eps).cmp(&(chars[b] != eps)).then(degrees[a].cmp(&degrees[b])).then_with(|| {
            chars[a]
                .iter()
                .zip(&chars[b])
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    chars = idx.iter().map(|&i| chars[i].clone()).collect();
    degrees = idx.iter().map(|&i| degrees[i]).collect();
    if chars.first() != Some(&eps) {
        return Err(Error::Invalid("the counit is not among the characters".into()));
    }
    let n = h.dim();
    for c in &chars {
        for a in 0..n {
            for b in 0..n {
                let ab = dot(c, &h.mul(&h.basis_vec(a), &h.basis_vec(b)));
                let ba = dot(c, &h.mul(&h.basis_vec(b), &h.basis_vec(a)));
                if ab != ba {
                    return Err(Error::Invalid("a character is not a trace function".into()));
                }
            }
        }
    }
    // chi_i(L_1) chi_j(S(L_2)) = delta_ij for the integral with eps(L) = 1
    let data = crate::hopf_core::integrals(h)?;
    let lam = scale_vec(&h.counit(&data.left).inv().expect("semisimple"), &data.left);
    let t = h.comul(&lam);
    for (i, ci) in chars.iter().enumerate() {
        let left = t.0.transpose().mul_vec(ci);
        for (j, cj) in chars.iter().enumerate() {
            let v = dot(&left, &h.antipode().transpose().mul_vec(cj));
            let want = if i == j { F::one() } else { F::zero() };
            if v != want {
                return Err(Error::Invalid(format!("characters {i} and {j} fail orthogonality")));
            }
        }
    }
    let dsum: usize = degrees.iter().map(|d| d * d).sum();
    if dsum != n {
        return Err(Error::Invalid(format!("sum of squared degrees is {dsum}, not {n}")));
    }
    Ok(CharacterSet { characters: chars, degrees, source })
}

#[derive(Clone, Debug)]
pub struct SMatrix<F> {
    pub entries: Vec<Vec<F>>,
    pub symmetric: bool,
    pub rank: usize,
    pub nondegenerate: bool,
    /// Nondegeneracy agrees with the factorizable flag of the pair.
    pub matches_factorizable: bool,
}

/// `s_ij = <chi_i, Phi_R(chi_j)>`
pub fn s_matrix<F: Scalar>(qt: &QtPair<F>, chars: &CharacterSet<F>) -> SMatrix<F> {
    let phi = qt.phi();
    let images: Vec<Vec<F>> = chars.characters.iter().map(|c| phi.mul_vec(c)).collect();
    let entries: Vec<Vec<F>> =
        chars.characters.iter().map(|ci| images.iter().map(|pj| dot(ci, pj)).collect()).collect();
    let m = entries.len();
    let symmetric = (0..m).all(|i| (0..m).all(|j| entries[i][j] == entries[j][i]));
    let rank = Matrix::from_rows(entries.clone(), m).rank();
    let nondegenerate = rank == m;
    SMatrix { entries, symmetric, rank, nondegenerate, matches_factorizable: nondegenerate == qt.is_factorizable() }
}

#[derive(Clone, Debug)]
pub struct Transparency<F> {
    /// Indices into the character set.
    pub transparent: Vec<usize>,
    /// Span of the transparent characters equals the pullback of the
    /// character algebra of the canonical quotient.
    pub equals_quotient_characters: bool,
    /// The image of the Drinfeld element in the quotient is the Drinfeld
    /// element of the quotient.
    pub drinfeld_compatible: bool,
    pub drinfeld_image: Vec<F>,
}

/// Characters with `Phi_R(chi) = chi(1) 1`, compared with `pi*(R(H_bar))`.
pub fn transparent_characters<F: Scalar>(qt: &QtPair<F>, chars: &CharacterSet<F>) -> Result<Transparency<F>> {
    let h = qt.hopf();
    let n = h.dim();
    let phi = qt.phi();
    let one = h.one();
    let transparent: Vec<usize> = (0..chars.len())
        .filter(|&i| {
            let c = &chars.characters[i];
            phi.mul_vec(c) == scale_vec(&dot(c, &one), &one)
        })
        .collect();
    let lhs = Subspace::span(n, transparent.iter().map(|&i| chars.characters[i].clone()));
    let cq = canonical_quotient(qt, &Subspace::full(n))?;
    let bar = cq.quotient();
    let m = bar.dim();
    // trace functions on the quotient
    let mut eqs = Matrix::zeros(m * m, m);
    for a in 0..m {
        for b in 0..m {
            let d: Vec<F> = bar
                .mul(&bar.basis_vec(a), &bar.basis_vec(b))
                .into_iter()
                .zip(bar.mul(&bar.basis_vec(b), &bar.basis_vec(a)))
                .map(|(x, y)| x - y)
                .collect();
            for (k, v) in d.into_iter().enumerate() {
                eqs.set(a * m + b, k, v);
            }
        }
    }
    let pt = cq.projection().matrix.transpose();
    let rhs = Subspace::span(n, eqs.kernel().iter().map(|p| pt.mul_vec(p)));
    let drinfeld_image = cq.projection().apply(qt.drinfeld_element());
    Ok(Transparency {
        transparent,
        equals_quotient_characters: lhs == rhs,
        drinfeld_compatible: drinfeld_image.as_slice() == cq.r_bar.drinfeld_element(),
        drinfeld_image,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ItemStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    pub name: String,
    pub status: ItemStatus,
    pub evidence: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    /// Both hypotheses hold.
    pub applicable: bool,
    pub branch: String,
    pub hypotheses: Vec<ReportItem>,
    pub items: Vec<ReportItem>,
}

impl ClassificationReport {
    pub fn item(&self, name: &str) -> Option<&ReportItem> {
        self.hypotheses.iter().chain(&self.items).find(|i| i.name == name)
    }

    /// No applicable conclusion failed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != ItemStatus::Fail)
    }
}

fn is_square_free(n: usize) -> bool {
    (2..=n).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
}

struct Items(Vec<ReportItem>);

impl Items {
    fn add(&mut self, name: &str, ok: bool, evidence: impl Into<String>) {
        let status = if ok { ItemStatus::Pass } else { ItemStatus::Fail };
        self.0.push(ReportItem { name: name.into(), status, evidence: evidence.into() });
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.0.push(ReportItem { name: name.into(), status: ItemStatus::NotApplicable, evidence: why.into() });
    }
}

/// Evaluates the hypotheses and conclusions of the odd square-free
/// classification on a given pair. Conclusions are checked, not derived.
pub fn classification_report<F: Scalar>(qt: &QtPair<F>) -> Result<ClassificationReport> {
    let h = qt.hopf();
    let n = h.dim();
    let mut hyp = Items(Vec::new());
    let odd_sf = n % 2 == 1 && is_square_free(n);
    hyp.add("dim H odd and square-free", odd_sf, format!("dim H = {n}"));
    let tr = h.trace_s2();
    hyp.add("Tr S^2 != 0", !tr.is_zero(), format!("Tr S^2 = {}", tr.to_text()));
    let applicable = odd_sf && !tr.is_zero();
    let mut it = Items(Vec::new());
    let branch = if qt.r() == &h.tensor_one() {
        "triangular, R = 1 (x) 1"
    } else if qt.is_triangular() {
        "triangular"
    } else if qt.is_factorizable() {
        "factorizable"
    } else {
        "general"
    };
    if !odd_sf {
        for name in [
            "R in kG(H) (x) kG(H)",
            "Phi_R(H*) = H_R",
            "Phi_R(H*) is a commutative normal Hopf subalgebra",
            "dim H = dim Phi_R(H*) dim H_bar",
            "H_R = k^Gamma with Gamma cyclic",
            "bicharacter is multiplicative",
            "bicharacter is invariant under G(H)",
            "bicharacter is nondegenerate",
            "<,><,>^op is nondegenerate",
        ] {
            it.skip(name, "dimension is not odd and square-free");
        }
        return Ok(ClassificationReport { dim: n, applicable, branch: branch.into(), hypotheses: hyp.0, items: it.0 });
    }
    let gl = group_likes(h)?;
    let g_span = gl.span(n);
    let r_in = g_span.contains_all(qt.h_plus()) && g_span.contains_all(qt.h_minus());
    it.add("R in kG(H) (x) kG(H)", r_in, format!("|G(H)| = {}", gl.order()));
    let phi_img = qt.phi_image();
    it.add("Phi_R(H*) = H_R", phi_img == qt.h_r(), format!("dims {} and {}", phi_img.dim(), qt.h_r().dim()));
    if r_in {
        let p = h.predicates(phi_img);
        it.add(
            "Phi_R(H*) is a commutative normal Hopf subalgebra",
            p.normal && p.commutative,
            format!("normal {}, commutative {}", p.normal, p.commutative),
        );
        let cq = canonical_quotient(qt, &Subspace::full(n))?;
        let m = cq.quotient().dim();
        it.add("dim H = dim Phi_R(H*) dim H_bar", n == phi_img.dim() * m, format!("{n} = {} * {m}", phi_img.dim()));
    } else {
        it.skip("Phi_R(H*) is a commutative normal Hopf subalgebra", "R is not supported on group-likes");
        it.skip("dim H = dim Phi_R(H*) dim H_bar", "R is not supported on group-likes");
    }

    let hr = qt.h_r();
    let hr_comm = h.is_commutative_subspace(hr);
    if !hr_comm {
        it.add("H_R = k^Gamma with Gamma cyclic", false, "H_R is not commutative");
        for name in [
            "bicharacter is multiplicative",
            "bicharacter is invariant under G(H)",
            "bicharacter is nondegenerate",
            "<,><,>^op is nondegenerate",
        ] {
            it.skip(name, "H_R is not commutative");
        }
        return Ok(ClassificationReport { dim: n, applicable, branch: branch.into(), hypotheses: hyp.0, items: it.0 });
    }
    let labels = (0..hr.dim()).map(|i| format!("b{i}")).collect();
    let sub = h.restrict(hr, labels)?;
    // characters of H_R, i.e. group-likes of its dual, with their group law
    let gamma = group_likes(&sub.dual())?;
    let order = gamma.order();
    let cyclic = (0..order).any(|a| gamma.element_order(a) == order);
    it.add(
        "H_R = k^Gamma with Gamma cyclic",
        gamma.complete && order == hr.dim() && cyclic,
        format!("|Gamma| = {order}, dim H_R = {}, cyclic {cyclic}", hr.dim()),
    );
    // R in H_R (x) H_R, in echelon coordinates
    let piv = hr.pivots();
    let rx: Vec<Vec<F>> = piv.iter().map(|&a| piv.iter().map(|&b| qt.r().get(a, b).clone()).collect()).collect();
    let rho = |a: usize, b: usize| -> F {
        let (ca, cb) = (&gamma.elements[a], &gamma.elements[b]);
        let mut s = F::zero();
        for (i, row) in rx.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                s.add_mul(&ca[i].mul_ref(&cb[j]), v);
            }
        }
        s
    };
    let table: Vec<Vec<F>> = (0..order).map(|a| (0..order).map(|b| rho(a, b)).collect()).collect();
    let mult = (0..order).all(|a| {
        (0..order).all(|b| {
            (0..order).all(|c| {
                table[gamma.table[a][b]][c] == table[a][c].mul_ref(&table[b][c])
                    && table[a][gamma.table[b][c]] == table[a][b].mul_ref(&table[a][c])
            })
        })
    });
    it.add("bicharacter is multiplicative", mult, format!("{order} x {order} table"));
    let invariant = gl.elements.iter().all(|g| {
        let gi = h.s(g);
        let conj = Matrix::from_cols(&(0..n).map(|k| h.mul(&h.mul(g, &h.basis_vec(k)), &gi)).collect::<Vec<_>>(), n);
        qt.r().apply(&conj, &conj) == *qt.r()
    });
    it.add("bicharacter is invariant under G(H)", invariant, format!("|G(H)| = {}", gl.order()));
    let rank = Matrix::from_rows(table.clone(), order).rank();
    it.add("bicharacter is nondegenerate", rank == order, format!("rank {rank} of {order}"));
    let sym: Vec<Vec<F>> =
        (0..order).map(|a| (0..order).map(|b| table[a][b].mul_ref(&table[b][a])).collect()).collect();
    let srank = Matrix::from_rows(sym, order).rank();
    it.add("<,><,>^op is nondegenerate", srank == order, format!("rank {srank} of {order}"));
    Ok(ClassificationReport { dim: n, applicable, branch: branch.into(), hypotheses: hyp.0, items: it.0 })
}

/// Short human-readable form of a character.
pub fn describe_character<F: Scalar>(h: &FiniteDimHopf<F>, chi: &[F]) -> String {
    format_element(&h.dual().labels().to_vec(), chi)
}

#[cfg(test)]
mod tests;
