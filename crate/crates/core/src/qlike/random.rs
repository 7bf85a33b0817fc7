use rand::Rng;

use super::{validate, Mode, QLikeStructure};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::polymat::PolyMatrix;
use crate::scalar::Scalar;

const ATTEMPTS: usize = 500;
/// Bound on the total column degree, which bounds the Plücker degree and
/// keeps the exact injectivity certificate affordable.
const MAX_TOTAL_DEGREE: usize = 6;

fn random_form<R: Rng>(rng: &mut R, degree: usize) -> BinaryForm {
    loop {
        let coeffs: Vec<Scalar> = (0..=degree)
            .map(|_| if rng.gen_bool(0.5) { Scalar::from_int(rng.gen_range(-2..=2)) } else { Scalar::zero() })
            .collect();
        let f = BinaryForm::from_coeffs(coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A complex-mode structure with `dim ≤ max_dim` and column degrees
/// `≤ max_degree`, rejection-sampled until every validation check passes
/// exactly (sampled injectivity is rejected).
pub fn random_structure<R: Rng>(rng: &mut R, max_dim: usize, max_degree: usize) -> Result<QLikeStructure> {
    if max_dim < 3 || max_degree == 0 {
        return Err(Error::invalid("random structures need dim ≥ 3 and degree ≥ 1"));
    }
    for _ in 0..ATTEMPTS {
        let n = rng.gen_range(3..=max_dim);
        let k = rng.gen_range(1..=(n - 1).min(3));
        let degrees: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=max_degree)).collect();
        if degrees.iter().sum::<usize>() > MAX_TOTAL_DEGREE {
            continue;
        }
        let cols = degrees
            .iter()
            .map(|&d| (0..n).map(|_| if rng.gen_bool(0.7) { random_form(rng, d) } else { BinaryForm::zero(d) }).collect())
            .collect();
        let s = QLikeStructure::new(Mode::Complex, PolyMatrix::from_columns(n, cols), k, None);
        let report = validate(&s)?;
        if report.is_valid() && report.warnings.is_empty() {
            return Ok(s);
        }
    }
    Err(Error::internal("no valid random structure found"))
}
