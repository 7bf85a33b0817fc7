//! Linear quaternionic-like structures: a holomorphic sphere `z ↦ U^z` of
//! `k`-dimensional subspaces of `U^ℂ`, compatible with a conjugation of `U`
//! covering the antipodal map.

mod fixtures;
mod heaven;
mod random;
mod validate;

pub use fixtures::{build_quaternionic, complex_c4, conic_r3, quaternion_units};
pub use heaven::{heaven_data, minus_data, verify_correspondence, HeavenData, MinusData, RealData, CorrespondenceReport};
pub use random::random_structure;
pub use validate::{validate, Check, ValidationReport};

use serde::{Deserialize, Serialize};

use crate::bundles::{
    annihilator, is_split_extension, saturate, splitting_type, verify_canonical_sequences, CanonicalReport,
    QuotientBundle, SplittingType, SubbundleFamily,
};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::linalg::Matrix;
use crate::polymat::{columns_from_strings, columns_to_strings, PolyMatrix};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QLikeStructure {
    pub mode: Mode,
    pub dim: usize,
    pub k: usize,
    /// `dim × k'` matrix whose columns span `U^z` at generic `z`.
    pub spanning: PolyMatrix,
    /// Antilinear map `x ↦ C·x̄` on `U^ℂ`; `None` means `C = I`.
    pub conjugation: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QLikeJson {
    pub mode: Mode,
    pub dim: usize,
    pub k: usize,
    pub spanning: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<Vec<Vec<Scalar>>>,
}

impl QLikeStructure {
    pub fn new(mode: Mode, spanning: PolyMatrix, k: usize, conjugation: Option<Matrix>) -> Self {
        QLikeStructure { mode, dim: spanning.rows(), k, spanning, conjugation }
    }

    pub fn conjugation_matrix(&self) -> Matrix {
        self.conjugation.clone().unwrap_or_else(|| Matrix::identity(self.dim))
    }

    pub fn to_json(&self) -> QLikeJson {
        QLikeJson {
            mode: self.mode,
            dim: self.dim,
            k: self.k,
            spanning: columns_to_strings(&self.spanning),
            conjugation: self.conjugation.as_ref().map(Matrix::to_rows),
        }
    }

    pub fn from_json(j: &QLikeJson) -> Result<Self> {
        let spanning = columns_from_strings(j.dim, &j.spanning)?;
        let conjugation = match &j.conjugation {
            None => None,
            Some(rows) => {
                if rows.len() != j.dim || rows.iter().any(|r| r.len() != j.dim) {
                    return Err(Error::invalid("conjugation must be a dim × dim matrix"));
                }
                Some(Matrix::from_rows(rows.clone()))
            }
        };
        Ok(QLikeStructure { mode: j.mode, dim: j.dim, k: j.k, spanning, conjugation })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let j: QLikeJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "structure".into(),
            position: e.column(),
            message: e.to_string(),
        })?;
        QLikeStructure::from_json(&j)
    }
}

/// The tautological subbundle `𝒰₋` and its quotient `𝒰₊`.
#[derive(Clone, Debug)]
pub struct Bundles {
    pub minus: SubbundleFamily,
    pub plus: QuotientBundle,
}

pub fn bundles(s: &QLikeStructure) -> Result<Bundles> {
    let minus = saturate(&s.spanning)?;
    if minus.rank() != s.k {
        return Err(Error::invalid(format!("spanning matrix has generic rank {}, expected {}", minus.rank(), s.k)));
    }
    let plus = QuotientBundle::new(minus.clone())?;
    Ok(Bundles { minus, plus })
}

/// Structure on `U*` given by the annihilators of the `U^z`. Columns are
/// coordinates in the dual basis; the conjugation becomes `C̄ᵀ`.
pub fn dualize(s: &QLikeStructure) -> Result<QLikeStructure> {
    let b = bundles(s)?;
    let ann = b.plus.annihilator().basis().clone();
    Ok(QLikeStructure {
        mode: s.mode,
        dim: s.dim,
        k: s.dim - s.k,
        spanning: ann,
        conjugation: s.conjugation.as_ref().map(|c| c.conj().transpose()),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub mode: Mode,
    pub dim: usize,
    pub k: usize,
    pub validation: ValidationReport,
    pub splitting_minus: SplittingType,
    pub splitting_plus: SplittingType,
    pub label: String,
    pub flags: Vec<String>,
    pub split_extension: bool,
    pub heaven: heaven::HeavenSummary,
    pub minus: heaven::MinusSummary,
    pub correspondence: CorrespondenceReport,
    pub canonical: CanonicalReport,
    pub serre_duality_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real: Option<RealData>,
}

impl AnalysisReport {
    /// True when every computed verdict holds.
    pub fn passed(&self) -> bool {
        self.validation.is_valid()
            && !self.split_extension
            && self.correspondence.passed()
            && self.canonical.passed()
            && self.serre_duality_ok
            && self.real.as_ref().is_none_or(RealData::passed)
    }
}

/// Label and flags from the two splitting types and the map ranks.
pub fn classify(minus: &SplittingType, plus: &SplittingType, h: &HeavenData, m: &MinusData) -> (String, Vec<String>) {
    let rho = minus.all_equal(-1);
    let rho_star = plus.all_equal(1);
    let co_cr = rho && h.rho_plus.rank() == h.rho_plus.rows();
    let cr = rho_star
        && m.psi_minus.rank() == m.psi_minus.cols()
        && m.rho_minus_star.rank() == m.rho_minus_star.cols();
    let label = match (rho, rho_star) {
        (true, true) => "quaternionic",
        (true, false) => "rho-quaternionic",
        (false, true) => "rho-star-quaternionic",
        (false, false) => "general",
    };
    let mut flags = Vec::new();
    if cr {
        flags.push("CR".to_string());
    }
    if co_cr {
        flags.push("co-CR".to_string());
    }
    (label.to_string(), flags)
}

pub fn analyze(s: &QLikeStructure) -> Result<AnalysisReport> {
    let validation = validate(s)?;
    if !validation.rank_ok() {
        return Err(Error::invalid(validation.first_failure().unwrap_or_else(|| "rank check failed".into())));
    }
    let b = bundles(s)?;
    let splitting_minus = splitting_type(&b.minus)?;
    let splitting_plus = splitting_type(&b.plus)?;
    if splitting_minus.degree() + splitting_plus.degree() != 0 || splitting_minus.rank() + splitting_plus.rank() != s.dim {
        return Err(Error::internal("splitting types of the two bundles are not complementary"));
    }
    let h = heaven_data(s, &b)?;
    let m = minus_data(s, &b)?;
    let (label, flags) = classify(&splitting_minus, &splitting_plus, &h, &m);
    let correspondence = verify_correspondence(&h, &m)?;
    let canonical = verify_canonical_sequences(&b.plus)?;
    // H⁰(𝒰₊(−1)) against H⁰(𝒰₋*(−1)); 𝒰₋* is the quotient of the dual by the annihilator.
    let dual_quotient = QuotientBundle::new(b.plus.annihilator().clone())?;
    let serre_duality_ok = dual_quotient.splitting().h0(-1) == h.h_dim && h.h_dim == m.h_dim;
    let real = match s.mode {
        Mode::Real => Some(heaven::real_data(s, &b, &h)?),
        Mode::Complex => None,
    };
    Ok(AnalysisReport {
        mode: s.mode,
        dim: s.dim,
        k: s.k,
        validation,
        split_extension: is_split_extension(&b.minus)?,
        splitting_minus,
        splitting_plus,
        label,
        flags,
        heaven: h.summary(),
        minus: m.summary(),
        correspondence,
        canonical,
        serre_duality_ok,
        real,
    })
}

/// Whether `ψ(U^z) ⊆ V^{T(z)}` for every `z`, where `T` acts on homogeneous
/// coordinates. In real mode `T` must commute with the antipodal map, i.e.
/// `T·J = J·T̄` with `J = [[0,−1],[1,0]]`.
pub fn check_morphism(s: &QLikeStructure, t: &QLikeStructure, psi: &Matrix, mobius: &Matrix) -> Result<bool> {
    if mobius.rows() != 2 || mobius.cols() != 2 || mobius.det().is_zero() {
        return Err(Error::invalid("T must be an invertible 2 × 2 matrix"));
    }
    if psi.rows() != t.dim || psi.cols() != s.dim {
        return Err(Error::invalid("psi has the wrong shape"));
    }
    if s.mode == Mode::Real && t.mode == Mode::Real {
        let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        if mobius.mul(&j) != j.mul(&mobius.conj()) {
            return Err(Error::invalid("T does not commute with the antipodal map"));
        }
        let lhs = psi.mul(&s.conjugation_matrix());
        let rhs = t.conjugation_matrix().mul(&psi.conj());
        if lhs != rhs {
            return Ok(false);
        }
    }
    let source = saturate(&s.spanning)?;
    let target = annihilator(&saturate(&t.spanning)?)?;
    let moved = target.basis().substitute(mobius);
    let image = source.basis().left_mul_const(psi)?;
    Ok(moved.transpose().mul(&image)?.is_zero())
}

/// The structure on `U₊ = H⁰(𝒰₊)` whose fiber at `z` is the space of sections
/// vanishing at `z`; `ψ₊` is a morphism onto it.
pub fn heaven_structure(s: &QLikeStructure) -> Result<QLikeStructure> {
    let b = bundles(s)?;
    let f = b.plus.degrees();
    if f.iter().any(|&x| x < 0) {
        return Err(Error::internal("quotient bundle is not nonnegative"));
    }
    let mut offsets = Vec::new();
    let mut dim = 0usize;
    for &fl in f {
        offsets.push(dim);
        dim += fl as usize + 1;
    }
    // (z1·w0 − z0·w1)·w^b in slot l, for every basis monomial w^b of degree f_l − 1.
    let mut cols = Vec::new();
    for (l, &fl) in f.iter().enumerate() {
        for bb in 0..fl as usize {
            let mut col = vec![BinaryForm::zero(1); dim];
            col[offsets[l] + bb] = BinaryForm::z1();
            col[offsets[l] + bb + 1] = BinaryForm::z0().neg();
            cols.push(col);
        }
    }
    let k = cols.len();
    Ok(QLikeStructure::new(Mode::Complex, PolyMatrix::from_columns(dim, cols), k, None))
}

#[cfg(test)]
mod tests;
