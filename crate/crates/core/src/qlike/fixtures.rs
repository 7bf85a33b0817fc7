use super::{Mode, QLikeStructure};
use crate::form::BinaryForm;
use crate::linalg::Matrix;
use crate::polymat::PolyMatrix;
use crate::scalar::Scalar;

/// Left and right multiplication by `i` and `j` on `ℍ = ℝ⁴` in the basis
/// `1, i, j, k`.
pub fn quaternion_units() -> [Matrix; 4] {
    let li = Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let lj = Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    let ri = Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let rj = Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    [li, lj, ri, rj]
}

/// The twistor sphere of `ℍ^k`: `U^z = {z0·a + z1·(L_j a) : a ∈ ker(L_i + i)}`,
/// the `−i` eigenspaces of left multiplication by unit imaginary quaternions.
pub fn build_quaternionic(k: usize) -> QLikeStructure {
    let [li, lj, ri, rj] = quaternion_units();
    let shift = |m: &Matrix| m.add(&Matrix::identity(4).scale(&Scalar::i()));
    let w00 = shift(&li).vstack(&shift(&ri)).kernel().remove(0);
    let w01 = rj.mul_vec(&w00);
    let w10 = lj.mul_vec(&w00);
    let w11 = lj.mul_vec(&rj.mul_vec(&w00));
    let column = |a: &[Scalar], b: &[Scalar]| -> Vec<BinaryForm> {
        a.iter().zip(b).map(|(x, y)| BinaryForm::from_coeffs(vec![x.clone(), y.clone()])).collect()
    };
    let block = PolyMatrix::from_columns(4, vec![column(&w00, &w10), column(&w01, &w11)]);
    let mut cols = Vec::new();
    for c in 0..k {
        for col in block.columns() {
            let mut full = vec![BinaryForm::zero(1); 4 * k];
            for (r, f) in col.into_iter().enumerate() {
                full[4 * c + r] = f;
            }
            cols.push(full);
        }
    }
    QLikeStructure::new(Mode::Real, PolyMatrix::from_columns(4 * k, cols), 2 * k, None)
}

/// Conic `z ↦ [z0², z0·z1, z1²]` in `ℂ³` with conjugation `antidiag(1, −1, 1)`.
pub fn conic_r3() -> QLikeStructure {
    let col = vec!["z0^2", "z0*z1", "z1^2"].into_iter().map(|s| s.parse().unwrap()).collect();
    let c = Matrix::from_ints(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]);
    QLikeStructure::new(Mode::Real, PolyMatrix::from_columns(3, vec![col]), 1, Some(c))
}

/// The conic placed in the first three coordinates of `ℂ⁴`, without reality.
pub fn complex_c4() -> QLikeStructure {
    let col = vec!["z0^2", "z0*z1", "z1^2", "0*z0^2"].into_iter().map(|s| s.parse().unwrap()).collect();
    QLikeStructure::new(Mode::Complex, PolyMatrix::from_columns(4, vec![col]), 1, None)
}
