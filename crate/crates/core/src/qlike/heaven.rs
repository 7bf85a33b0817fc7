//! The spaces and maps of the correspondence between quaternionic-like
//! structures and pairs `(U₊, ψ₊)`, `(U₋, ψ₋)`.
//!
//! `U₊ = H⁰(𝒰₊)` is written in the basis of tuples `(g_l)` pairing with the
//! annihilator generators `q_l`, so `ψ₊(u) = (q_l·u)_l` and
//! `E₊ = H⁰(O(1)) ⊗ H⁰(𝒰₊(−1))` maps to `U₊` by multiplication. The minus side
//! is the transpose of the same construction on the dual structure.

use serde::Serialize;

use super::{Bundles, QLikeStructure};
use crate::bundles::{sample_points, SubbundleFamily};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::kernel::{graded_solve, Layout};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `U₊`, `E₊` and the maps `ψ₊ : U → U₊`, `ρ₊ : E₊ → U₊`.
#[derive(Clone, Debug)]
pub struct HeavenData {
    pub degrees: Vec<i64>,
    pub u_dim: usize,
    pub h_dim: usize,
    pub e_dim: usize,
    pub psi_plus: Matrix,
    pub rho_plus: Matrix,
}

/// `U₋`, `E₋` and the maps `ψ₋ : U₋ → U`, `ρ₋* : U₋ → E₋`.
#[derive(Clone, Debug)]
pub struct MinusData {
    pub u_dim: usize,
    pub h_dim: usize,
    pub e_dim: usize,
    pub psi_minus: Matrix,
    pub rho_minus_star: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapSummary {
    pub rank: usize,
    pub kernel: usize,
    pub cokernel: usize,
}

fn summarize(m: &Matrix) -> MapSummary {
    let rank = m.rank();
    MapSummary { rank, kernel: m.cols() - rank, cokernel: m.rows() - rank }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeavenSummary {
    pub u_plus: usize,
    pub h_plus: usize,
    pub e_plus: usize,
    pub psi_plus: MapSummary,
    pub rho_plus: MapSummary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinusSummary {
    pub u_minus: usize,
    pub h_minus: usize,
    pub e_minus: usize,
    pub psi_minus: MapSummary,
    pub rho_minus_star: MapSummary,
}

impl HeavenData {
    pub fn summary(&self) -> HeavenSummary {
        HeavenSummary {
            u_plus: self.u_dim,
            h_plus: self.h_dim,
            e_plus: self.e_dim,
            psi_plus: summarize(&self.psi_plus),
            rho_plus: summarize(&self.rho_plus),
        }
    }
}

impl MinusData {
    pub fn summary(&self) -> MinusSummary {
        MinusSummary {
            u_minus: self.u_dim,
            h_minus: self.h_dim,
            e_minus: self.e_dim,
            psi_minus: summarize(&self.psi_minus),
            rho_minus_star: summarize(&self.rho_minus_star),
        }
    }
}

/// Plus-side data for the quotient of `O^n` whose annihilator has the given
/// generators (columns `q_l`).
fn plus_side(ann: &SubbundleFamily) -> Result<HeavenData> {
    let n = ann.ambient();
    let f = ann.degrees().to_vec();
    if f.iter().any(|&x| x < 0) {
        return Err(Error::internal("annihilator generator of negative degree"));
    }
    let u = Layout::new(f.clone());
    let h = Layout::new(f.iter().map(|x| x - 1).collect());
    let q = ann.basis();

    let mut psi = Matrix::zeros(u.len(), n);
    for i in 0..n {
        let tuple: Vec<BinaryForm> = (0..ann.rank()).map(|l| q.get(i, l).clone()).collect();
        for (a, c) in u.flatten(&tuple).into_iter().enumerate() {
            psi[(a, i)] = c;
        }
    }

    let mut rho = Matrix::zeros(u.len(), 2 * h.len());
    for idx in 0..h.len() {
        let mut e = vec![Scalar::zero(); h.len()];
        e[idx] = Scalar::one();
        let tuple = h.unflatten(&e);
        for (s, z) in [BinaryForm::z0(), BinaryForm::z1()].iter().enumerate() {
            let image: Vec<BinaryForm> = tuple
                .iter()
                .zip(&f)
                .map(|(g, &fl)| if g.is_zero() { BinaryForm::zero(fl as usize) } else { g.mul(z) })
                .collect();
            for (a, c) in u.flatten(&image).into_iter().enumerate() {
                rho[(a, s * h.len() + idx)] = c;
            }
        }
    }
    Ok(HeavenData { degrees: f, u_dim: u.len(), h_dim: h.len(), e_dim: 2 * h.len(), psi_plus: psi, rho_plus: rho })
}

/// Heaven data, with the genericity condition `(U₊)^z + im ψ₊ = U₊` checked at
/// sample points: equivalently evaluation at `z` composed with `ψ₊` is onto
/// the fiber of `𝒰₊`.
pub fn heaven_data(_s: &QLikeStructure, b: &Bundles) -> Result<HeavenData> {
    let ann = b.plus.annihilator();
    for (z0, z1) in sample_points() {
        if ann.fiber(&z0, &z1).rank() != ann.rank() {
            return Err(Error::internal("heaven genericity fails at a sample point"));
        }
    }
    plus_side(ann)
}

/// Minus-side data from the dual structure, with `(U₋)^z ∩ ker ψ₋ = 0` checked
/// at sample points through the dual genericity condition.
pub fn minus_data(_s: &QLikeStructure, b: &Bundles) -> Result<MinusData> {
    for (z0, z1) in sample_points() {
        if b.minus.fiber(&z0, &z1).rank() != b.minus.rank() {
            return Err(Error::internal("minus-side genericity fails at a sample point"));
        }
    }
    let dual = plus_side(&b.minus)?;
    Ok(MinusData {
        u_dim: dual.u_dim,
        h_dim: dual.h_dim,
        e_dim: dual.e_dim,
        psi_minus: dual.psi_plus.transpose(),
        rho_minus_star: dual.rho_plus.transpose(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrespondenceReport {
    pub e_dims_equal: bool,
    pub intertwiner_solvable: bool,
    pub intertwiner_solution_dim: usize,
    pub intertwiner_invertible: bool,
    pub ker_psi_minus: usize,
    pub ker_rho_plus: usize,
    pub ker_rho_minus_star: usize,
    pub ker_psi_plus: usize,
    pub coker_rho_minus_star: usize,
    pub coker_psi_plus: usize,
    pub coker_psi_minus: usize,
    pub coker_rho_plus: usize,
    pub ker_psi_minus_matches: bool,
    pub ker_rho_minus_star_matches: bool,
    pub cokernels_rho_minus_star_psi_plus_match: bool,
    pub cokernels_psi_minus_rho_plus_match: bool,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.e_dims_equal
            && self.intertwiner_solvable
            && self.intertwiner_invertible
            && self.ker_psi_minus == self.ker_rho_plus
            && self.ker_psi_minus_matches
            && self.ker_rho_minus_star_matches
            && self.cokernels_rho_minus_star_psi_plus_match
            && self.cokernels_psi_minus_rho_plus_match
    }
}

/// `J` pairs the two copies of `H⁰(O(1))`: `q(w)·v(z)` vanishes on the
/// diagonal, so it is `(w0·z1 − w1·z0)` times a kernel `K(w, z)`.
fn pairing() -> Matrix {
    Matrix::from_ints(&[&[0, 1], &[-1, 0]])
}

fn iota(phi: &Matrix) -> Matrix {
    pairing().kron(phi)
}

/// Solves for `φ` with `ψ₊∘ψ₋ = ρ₊∘(J⊗φ)∘ρ₋*`; returns the solution-space
/// dimension and an invertible solution if one is found.
fn solve_intertwiner(h: &HeavenData, m: &MinusData) -> (bool, usize, Option<Matrix>) {
    let (hp, hm) = (h.h_dim, m.h_dim);
    let target = h.psi_plus.mul(&m.psi_minus);
    let (rows, cols) = (target.rows(), target.cols());
    let j = pairing();
    let mut system = Matrix::zeros(rows * cols, hp * hm);
    for i in 0..hp {
        for jj in 0..hm {
            let mut contribution = Matrix::zeros(rows, cols);
            for s in 0..2 {
                for t in 0..2 {
                    let c = &j[(s, t)];
                    if c.is_zero() {
                        continue;
                    }
                    let left = h.rho_plus.select_cols(&[s * hp + i]);
                    let right = m.rho_minus_star.select_rows(&[t * hm + jj]);
                    contribution = contribution.add(&left.mul(&right).scale(c));
                }
            }
            for a in 0..rows {
                for b in 0..cols {
                    system[(a * cols + b, i * hm + jj)] = contribution[(a, b)].clone();
                }
            }
        }
    }
    let rhs: Vec<Scalar> = (0..rows).flat_map(|a| (0..cols).map(move |b| (a, b))).map(|(a, b)| target[(a, b)].clone()).collect();
    let sol = system.solve(&rhs);
    let Some(particular) = sol.particular() else {
        return (false, 0, None);
    };
    let kernel = system.kernel();
    let to_matrix = |v: &[Scalar]| {
        Matrix::from_rows((0..hp).map(|i| v[i * hm..(i + 1) * hm].to_vec()).collect::<Vec<_>>())
    };
    if hp != hm {
        return (true, kernel.len(), None);
    }
    if hp == 0 {
        return (true, kernel.len(), Some(Matrix::zeros(0, 0)));
    }
    for t in 0..=(hp as i64 + 2) {
        let mut v = particular.to_vec();
        let mut w = Scalar::one();
        for k in &kernel {
            for (x, y) in v.iter_mut().zip(k) {
                *x += &(&w * y);
            }
            w = &w * &Scalar::from_int(t + 1);
        }
        if t == 0 {
            v = particular.to_vec();
        }
        let phi = to_matrix(&v);
        if !phi.det().is_zero() {
            return (true, kernel.len(), Some(phi));
        }
    }
    (true, kernel.len(), None)
}

fn kernel_matrix(m: &Matrix) -> Matrix {
    Matrix::from_cols(&m.kernel(), m.cols())
}

/// The identity `ψ₊∘ψ₋ = ρ₊∘ι∘ρ₋*` and the kernel and cokernel correspondences
/// that follow from it.
pub fn verify_correspondence(h: &HeavenData, m: &MinusData) -> Result<CorrespondenceReport> {
    let (solvable, solution_dim, phi) = solve_intertwiner(h, m);
    let s_pp = summarize(&h.psi_plus);
    let s_rp = summarize(&h.rho_plus);
    let s_pm = summarize(&m.psi_minus);
    let s_rm = summarize(&m.rho_minus_star);

    // ψ₋ maps ker ρ₋* isomorphically onto ker ψ₊.
    let k_rm = kernel_matrix(&m.rho_minus_star);
    let image = m.psi_minus.mul(&k_rm);
    let ker_rho_minus_star_matches = image.rank() == k_rm.cols()
        && h.psi_plus.mul(&image).is_zero()
        && k_rm.cols() == s_pp.kernel;

    // ρ₋* maps ker ψ₋ isomorphically onto ι⁻¹(ker ρ₊).
    let ker_psi_minus_matches = match &phi {
        Some(phi) => {
            let k_pm = kernel_matrix(&m.psi_minus);
            let image = m.rho_minus_star.mul(&k_pm);
            image.rank() == k_pm.cols()
                && h.rho_plus.mul(&iota(phi)).mul(&image).is_zero()
                && k_pm.cols() == s_rp.kernel
        }
        None => false,
    };

    Ok(CorrespondenceReport {
        e_dims_equal: h.e_dim == m.e_dim,
        intertwiner_solvable: solvable,
        intertwiner_solution_dim: solution_dim,
        intertwiner_invertible: phi.is_some(),
        ker_psi_minus: s_pm.kernel,
        ker_rho_plus: s_rp.kernel,
        ker_rho_minus_star: s_rm.kernel,
        ker_psi_plus: s_pp.kernel,
        coker_rho_minus_star: s_rm.cokernel,
        coker_psi_plus: s_pp.cokernel,
        coker_psi_minus: s_pm.cokernel,
        coker_rho_plus: s_rp.cokernel,
        ker_psi_minus_matches,
        ker_rho_minus_star_matches,
        cokernels_rho_minus_star_psi_plus_match: s_rm.cokernel == s_pp.cokernel,
        cokernels_psi_minus_rho_plus_match: s_pm.cokernel == s_rp.cokernel,
    })
}

/// Antilinear maps induced by the conjugation, written as `x ↦ M·x̄`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealData {
    pub u_plus_squares_to_one: bool,
    pub h_plus_squares_to_minus_one: bool,
    pub e_plus_squares_to_one: bool,
    pub psi_plus_commutes: bool,
    pub rho_plus_commutes: bool,
}

impl RealData {
    pub fn passed(&self) -> bool {
        self.u_plus_squares_to_one
            && self.h_plus_squares_to_minus_one
            && self.e_plus_squares_to_one
            && self.psi_plus_commutes
            && self.rho_plus_commutes
    }
}

/// Conjugation on twisted sections of `𝒰₊`. With `σ*(q_l)·C⁻¹ = Σ_j a_lj·q_j`,
/// a tuple `g` pairing with the `q_l` goes to
/// `g'_l = (−1)^{f_l} σ*(Σ_j a_lj·g_j)`.
struct TupleConjugation {
    degrees: Vec<i64>,
    a: Vec<Vec<BinaryForm>>,
}

impl TupleConjugation {
    fn new(ann: &SubbundleFamily, c: &Matrix) -> Result<Self> {
        let cinv_t = c.inverse().ok_or_else(|| Error::invalid("conjugation is not invertible"))?.transpose();
        let f = ann.degrees().to_vec();
        let mut a = Vec::new();
        for l in 0..ann.rank() {
            let moved: Vec<BinaryForm> = {
                let sig: Vec<BinaryForm> = ann.basis().column(l).iter().map(BinaryForm::antipodal_transform).collect();
                (0..cinv_t.rows())
                    .map(|i| {
                        let mut acc = BinaryForm::zero(f[l] as usize);
                        for (jx, form) in sig.iter().enumerate() {
                            acc = acc.add(&form.scale(&cinv_t[(i, jx)]));
                        }
                        acc
                    })
                    .collect()
            };
            let unknown: Vec<i64> = f.iter().map(|fj| f[l] - fj).collect();
            let coeffs = graded_solve(ann.basis(), &unknown, &moved)?
                .ok_or_else(|| Error::invalid("the annihilator is not preserved by the conjugation"))?;
            a.push(coeffs);
        }
        Ok(TupleConjugation { degrees: f, a })
    }

    fn apply(&self, g: &[BinaryForm], m: i64) -> Vec<BinaryForm> {
        self.degrees
            .iter()
            .enumerate()
            .map(|(l, &fl)| {
                let d = m + fl;
                if d < 0 {
                    return BinaryForm::zero(0);
                }
                let mut acc = BinaryForm::zero(d as usize);
                for (j, gj) in g.iter().enumerate() {
                    let alj = &self.a[l][j];
                    if gj.is_zero() || alj.is_zero() {
                        continue;
                    }
                    acc = acc.add(&alj.mul(gj));
                }
                let out = acc.antipodal_transform();
                if fl % 2 == 0 {
                    out
                } else {
                    out.neg()
                }
            })
            .collect()
    }

    fn matrix(&self, m: i64) -> Matrix {
        let layout = Layout::new(self.degrees.iter().map(|f| m + f).collect());
        let cols: Vec<Vec<Scalar>> = (0..layout.len())
            .map(|k| {
                let mut e = vec![Scalar::zero(); layout.len()];
                e[k] = Scalar::one();
                layout.flatten(&self.apply(&layout.unflatten(&e), m))
            })
            .collect();
        Matrix::from_cols(&cols, layout.len())
    }
}

pub(crate) fn real_data(s: &QLikeStructure, b: &Bundles, h: &HeavenData) -> Result<RealData> {
    let c = s.conjugation_matrix();
    let conj = TupleConjugation::new(b.plus.annihilator(), &c)?;
    let cu = conj.matrix(0);
    let ch = conj.matrix(-1);
    // σ* on H⁰(O(1)): z0 ↦ −z1, z1 ↦ z0.
    let sigma = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let ce = sigma.kron(&ch);
    let id = |n: usize| Matrix::identity(n);
    Ok(RealData {
        u_plus_squares_to_one: cu.mul(&cu.conj()) == id(h.u_dim),
        h_plus_squares_to_minus_one: ch.mul(&ch.conj()) == id(h.h_dim).scale(&Scalar::from_int(-1)),
        e_plus_squares_to_one: ce.mul(&ce.conj()) == id(h.e_dim),
        psi_plus_commutes: h.psi_plus.mul(&c) == cu.mul(&h.psi_plus.conj()),
        rho_plus_commutes: h.rho_plus.mul(&ce) == cu.mul(&h.rho_plus.conj()),
    })
}
