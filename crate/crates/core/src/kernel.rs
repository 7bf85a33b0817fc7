//! Graded kernels of polynomial matrices and graded linear solves.
//!
//! A vector of forms `c = (c_j)` has *shift* `s` against weights `w` when each
//! `c_j` is homogeneous of degree `s + w_j` (entries with negative degree are
//! absent). Over the projective line the kernel of a polynomial matrix is a
//! free graded module, so it is determined by its minimal generators, which
//! are found degree by degree: at each shift, new generators complement the
//! span of monomial multiples of the generators already found.

use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::linalg::{EchelonBasis, Matrix};
use crate::polymat::PolyMatrix;
use crate::scalar::{make_primitive, Scalar};

/// Upper bound on any degree the engine will build, from `QLIKE_MAX_DEGREE`.
pub fn max_degree() -> i64 {
    std::env::var("QLIKE_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v: &i64| v > 0)
        .unwrap_or(64)
}

/// Flat coefficient layout of a vector of forms with prescribed degrees.
#[derive(Clone, Debug)]
pub struct Layout {
    degrees: Vec<i64>,
    offsets: Vec<usize>,
    len: usize,
}

impl Layout {
    pub fn new(degrees: Vec<i64>) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut len = 0;
        for &d in &degrees {
            offsets.push(len);
            if d >= 0 {
                len += d as usize + 1;
            }
        }
        Layout { degrees, offsets, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn flatten(&self, v: &[BinaryForm]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.degrees.len());
        let mut out = vec![Scalar::zero(); self.len];
        for (j, f) in v.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            assert_eq!(f.degree() as i64, self.degrees[j], "entry {j} has the wrong degree");
            for (a, c) in f.coeffs().iter().enumerate() {
                out[self.offsets[j] + a] = c.clone();
            }
        }
        out
    }

    /// Inverse of `flatten`; absent entries become degree-0 zero forms.
    pub fn unflatten(&self, x: &[Scalar]) -> Vec<BinaryForm> {
        assert_eq!(x.len(), self.len);
        self.degrees
            .iter()
            .zip(&self.offsets)
            .map(|(&d, &o)| {
                if d < 0 {
                    BinaryForm::zero(0)
                } else {
                    BinaryForm::from_coeffs(x[o..o + d as usize + 1].to_vec())
                }
            })
            .collect()
    }
}

/// Matrix of the linear map `x ↦ m·x` from forms of degrees `unknown` to
/// forms of degrees `row_degrees`.
pub fn coefficient_matrix(
    m: &PolyMatrix,
    unknown: &Layout,
    row_degrees: &[i64],
) -> Result<(Matrix, Layout)> {
    assert_eq!(unknown.degrees.len(), m.cols());
    assert_eq!(row_degrees.len(), m.rows());
    let rows = Layout::new(row_degrees.to_vec());
    let mut out = Matrix::zeros(rows.len(), unknown.len());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.get(i, j);
            let dj = unknown.degrees[j];
            if e.is_zero() || dj < 0 {
                continue;
            }
            if e.degree() as i64 + dj != row_degrees[i] {
                return Err(Error::invalid(format!(
                    "inhomogeneous system: entry ({i}, {j}) of degree {} against unknown of degree {dj} in a row of degree {}",
                    e.degree(),
                    row_degrees[i]
                )));
            }
            for a in 0..=dj as usize {
                for (b, c) in e.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        out[(rows.offsets[i] + a + b, unknown.offsets[j] + a)] += c;
                    }
                }
            }
        }
    }
    Ok((out, rows))
}

/// Row degrees `r_i` such that entry `(i, j)` has degree `r_i − w_j` whenever
/// it is nonzero. Rows that vanish identically get `None`.
fn row_degrees(m: &PolyMatrix, weights: &[i64]) -> Result<Vec<Option<i64>>> {
    (0..m.rows())
        .map(|i| {
            let mut r = None;
            for j in 0..m.cols() {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let d = e.degree() as i64 + weights[j];
                match r {
                    None => r = Some(d),
                    Some(x) if x != d => {
                        return Err(Error::invalid(format!(
                            "row {i} is not homogeneous for the given column weights"
                        )))
                    }
                    _ => {}
                }
            }
            Ok(r)
        })
        .collect()
}

/// Minimal generators of a graded kernel.
#[derive(Clone, Debug)]
pub struct GradedKernel {
    pub weights: Vec<i64>,
    /// Generator vectors, one entry per column of the input matrix.
    pub generators: Vec<Vec<BinaryForm>>,
    /// Shift of each generator, nondecreasing.
    pub shifts: Vec<i64>,
    /// `(s, dim ker at shift s)` for every shift visited.
    pub raw_dims: Vec<(i64, usize)>,
}

impl GradedKernel {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Generators as the columns of a polynomial matrix.
    pub fn to_matrix(&self, rows: usize) -> PolyMatrix {
        let cols = self
            .generators
            .iter()
            .zip(&self.shifts)
            .map(|(g, &s)| {
                g.iter()
                    .zip(&self.weights)
                    .map(|(f, &w)| {
                        let d = s + w;
                        if f.is_zero() && d >= 0 {
                            BinaryForm::zero(d as usize)
                        } else {
                            f.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_columns(rows, cols)
    }
}

struct KernelSystem<'a> {
    m: &'a PolyMatrix,
    weights: &'a [i64],
    rows: Vec<Option<i64>>,
}

impl KernelSystem<'_> {
    fn at_shift(&self, s: i64) -> Result<(Matrix, Layout)> {
        let unknown = Layout::new(self.weights.iter().map(|w| s + w).collect());
        // Rows that vanish identically impose nothing.
        let live: Vec<usize> = (0..self.m.rows()).filter(|&i| self.rows[i].is_some()).collect();
        let sub = self.m.select_rows(&live);
        let degs: Vec<i64> = live.iter().map(|&i| self.rows[i].unwrap() + s).collect();
        let (mat, _) = coefficient_matrix(&sub, &unknown, &degs)?;
        Ok((mat, unknown))
    }
}

/// Dimension of `{c of shift s : m·c = 0}`.
pub fn kernel_dimension(m: &PolyMatrix, weights: &[i64], s: i64) -> Result<usize> {
    let sys = KernelSystem { m, weights, rows: row_degrees(m, weights)? };
    let (mat, unknown) = sys.at_shift(s)?;
    Ok(unknown.len() - mat.rank())
}

/// Basis of `{c of shift s : m·c = 0}` as vectors of forms.
pub fn kernel_at_shift(m: &PolyMatrix, weights: &[i64], s: i64) -> Result<Vec<Vec<BinaryForm>>> {
    let sys = KernelSystem { m, weights, rows: row_degrees(m, weights)? };
    let (mat, unknown) = sys.at_shift(s)?;
    Ok(mat.kernel().iter().map(|x| unknown.unflatten(x)).collect())
}

/// Minimal generators of `{c : m·c = 0}` with column weights `weights`.
pub fn graded_kernel(m: &PolyMatrix, weights: &[i64]) -> Result<GradedKernel> {
    assert_eq!(weights.len(), m.cols(), "one weight per column");
    let rows = row_degrees(m, weights)?;
    let mut out = GradedKernel {
        weights: weights.to_vec(),
        generators: Vec::new(),
        shifts: Vec::new(),
        raw_dims: Vec::new(),
    };
    if m.cols() == 0 {
        return Ok(out);
    }
    let generic_rank = m.generic_rank();
    let target = m.cols() - generic_rank;
    let w_max = *weights.iter().max().unwrap();
    let w_min = *weights.iter().min().unwrap();
    let spread = w_max - w_min;
    let start = -w_max;
    let bound = start + spread + generic_rank as i64 * (m.max_degree() as i64 + spread) + 1;
    let cap = max_degree();
    let sys = KernelSystem { m, weights, rows };

    let mut s = start;
    while out.generators.len() < target {
        if s > bound || s - start > cap {
            return Err(Error::DegreeCap {
                cap: bound.min(start + cap),
                context: format!(
                    "computing a graded kernel ({} of {target} generators found)",
                    out.generators.len()
                ),
            });
        }
        let (mat, unknown) = sys.at_shift(s)?;
        let kernel = mat.kernel();
        out.raw_dims.push((s, kernel.len()));
        let mut span = EchelonBasis::new(unknown.len());
        for (g, &sg) in out.generators.iter().zip(&out.shifts) {
            let e = (s - sg) as usize;
            for a in 0..=e {
                let shifted: Vec<BinaryForm> = g
                    .iter()
                    .zip(unknown.degrees())
                    .map(|(f, &d)| if d < 0 || f.is_zero() { BinaryForm::zero(0) } else { f.shift(e, a) })
                    .collect();
                span.insert(unknown.flatten(&shifted));
            }
        }
        for mut x in kernel {
            make_primitive(&mut x);
            if span.insert(x.clone()) {
                out.generators.push(unknown.unflatten(&x));
                out.shifts.push(s);
            }
        }
        s += 1;
    }
    if out.generators.len() > target {
        return Err(Error::internal(format!(
            "graded kernel produced {} generators for a module of rank {target}",
            out.generators.len()
        )));
    }
    Ok(out)
}

/// Spec-level syzygy engine for a column-homogeneous matrix: returns the
/// minimal kernel generators as columns (entry `j` of a generator of degree
/// `s` has degree `s − d_j`) and their degrees `s`.
pub fn graded_kernel_basis(m: &PolyMatrix) -> Result<(PolyMatrix, Vec<i64>)> {
    let weights: Vec<i64> = (0..m.cols())
        .map(|j| {
            m.column_degree(j)
                .map(|d| -(d as i64))
                .ok_or_else(|| Error::invalid(format!("column {j} is not homogeneous")))
        })
        .collect::<Result<_>>()?;
    let k = graded_kernel(m, &weights)?;
    Ok((k.to_matrix(m.cols()), k.shifts.clone()))
}

/// Solves `m·x = rhs` for `x_j` of degree `unknown_degrees[j]` (negative means
/// `x_j = 0`). Returns `None` when no solution exists.
pub fn graded_solve(
    m: &PolyMatrix,
    unknown_degrees: &[i64],
    rhs: &[BinaryForm],
) -> Result<Option<Vec<BinaryForm>>> {
    assert_eq!(rhs.len(), m.rows());
    let unknown = Layout::new(unknown_degrees.to_vec());
    let row_degs: Vec<i64> = rhs.iter().map(|f| f.degree() as i64).collect();
    let (mat, rows) = coefficient_matrix(m, &unknown, &row_degs)?;
    let b = rows.flatten(rhs);
    Ok(mat.solve(&b).particular().map(|x| unknown.unflatten(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> BinaryForm {
        s.parse().unwrap()
    }

    fn row(entries: &[&str]) -> PolyMatrix {
        PolyMatrix::from_rows(entries.len(), vec![entries.iter().map(|s| f(s)).collect()])
    }

    fn vanishes(m: &PolyMatrix, c: &[BinaryForm]) -> bool {
        let col = PolyMatrix::from_columns(c.len(), vec![c.to_vec()]);
        m.mul(&col).unwrap().is_zero()
    }

    #[test]
    fn obvious_syzygy() {
        let m = row(&["z0", "z1"]);
        let (k, degs) = graded_kernel_basis(&m).unwrap();
        assert_eq!(degs, vec![2]);
        assert_eq!(k.column(0), vec![f("-z1"), f("z0")]);
    }

    #[test]
    fn common_factor_is_stripped() {
        // Entries of degree 2; the generator (−z1, z0) has degree 1 in each slot.
        let m = row(&["z0^2", "z0*z1"]);
        let (k, degs) = graded_kernel_basis(&m).unwrap();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![f("-z1"), f("z0")]);
        assert_eq!(degs, vec![3]);
        assert!(vanishes(&m, &k.column(0)));
    }

    #[test]
    fn identity_has_empty_kernel() {
        let m = PolyMatrix::identity(2);
        let (k, _) = graded_kernel_basis(&m).unwrap();
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn uniform_weights_give_entry_degrees() {
        // Annihilator-style use: unknowns all of degree s.
        let m = row(&["z0^2", "z0*z1", "z1^2"]);
        let k = graded_kernel(&m, &[0, 0, 0]).unwrap();
        assert_eq!(k.shifts, vec![1, 1]);
        for g in &k.generators {
            assert!(vanishes(&m, g));
        }
    }

    #[test]
    fn graded_solve_finds_coordinates() {
        let b = PolyMatrix::from_columns(2, vec![vec![f("z0"), f("z1")]]);
        let x = graded_solve(&b, &[1], &[f("z0^2"), f("z0*z1")]).unwrap().unwrap();
        assert_eq!(x, vec![f("z0")]);
        assert!(graded_solve(&b, &[1], &[f("z0^2"), f("z1^2")]).unwrap().is_none());
    }
}
