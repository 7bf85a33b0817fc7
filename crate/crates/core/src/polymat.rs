//! Matrices of binary forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// An `rows × cols` matrix of binary forms.
///
/// Each entry carries its own degree. Most matrices in this crate are
/// column-homogeneous (all entries in a column share a degree); that is
/// exposed through [`PolyMatrix::column_degree`] rather than enforced, since
/// transposes and coordinate matrices are graded by row or by both indices.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BinaryForm>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BinaryForm>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<BinaryForm>>) -> Self {
        let cols = columns.len();
        let mut entries = vec![BinaryForm::zero(0); rows * cols];
        for (j, c) in columns.into_iter().enumerate() {
            assert_eq!(c.len(), rows, "column {j} has the wrong length");
            for (i, e) in c.into_iter().enumerate() {
                entries[i * cols + j] = e;
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BinaryForm>>) -> Self {
        let r = rows.len();
        assert!(rows.iter().all(|row| row.len() == cols));
        PolyMatrix { rows: r, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_constant(m: &Matrix) -> Self {
        let entries = (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
            .map(|(i, j)| BinaryForm::constant(m[(i, j)].clone()))
            .collect();
        PolyMatrix { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_constant(&Matrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BinaryForm {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: BinaryForm) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn column(&self, j: usize) -> Vec<BinaryForm> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BinaryForm>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BinaryForm> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Degree shared by the nonzero entries of column `j`, falling back to the
    /// declared degree of the zero entries when the column vanishes.
    pub fn column_degree(&self, j: usize) -> Option<usize> {
        uniform_degree((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn row_degree(&self, i: usize) -> Option<usize> {
        uniform_degree((0..self.cols).map(|j| self.get(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BinaryForm::is_zero)
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(BinaryForm::degree).max().unwrap_or(0)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn map(&self, f: impl Fn(&BinaryForm) -> BinaryForm) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn antipodal(&self) -> PolyMatrix {
        self.map(BinaryForm::antipodal_transform)
    }

    pub fn d0(&self) -> PolyMatrix {
        self.map(BinaryForm::d0)
    }

    pub fn d1(&self) -> PolyMatrix {
        self.map(BinaryForm::d1)
    }

    pub fn substitute(&self, t: &Matrix) -> PolyMatrix {
        self.map(|f| f.substitute(t))
    }

    pub fn hstack(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, rhs.rows);
        let mut cols = self.columns();
        cols.extend(rhs.columns());
        PolyMatrix::from_columns(self.rows, cols)
    }

    pub fn select_columns(&self, idx: &[usize]) -> PolyMatrix {
        PolyMatrix::from_columns(self.rows, idx.iter().map(|&j| self.column(j)).collect())
    }

    pub fn select_rows(&self, idx: &[usize]) -> PolyMatrix {
        PolyMatrix::from_rows(self.cols, idx.iter().map(|&i| self.row(i)).collect())
    }

    /// Product of polynomial matrices; fails when a sum is not homogeneous.
    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in polynomial product");
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: Option<BinaryForm> = None;
                for k in 0..self.cols {
                    let p = self.get(i, k).mul(rhs.get(k, j));
                    acc = Some(match acc {
                        None => p,
                        Some(a) => a.try_add(&p).ok_or_else(|| {
                            Error::invalid(format!("inhomogeneous product at entry ({i}, {j})"))
                        })?,
                    });
                }
                entries.push(acc.unwrap_or_else(|| BinaryForm::zero(0)));
            }
        }
        Ok(PolyMatrix { rows: self.rows, cols: rhs.cols, entries })
    }

    /// `C · self` for a constant matrix `C`.
    pub fn left_mul_const(&self, c: &Matrix) -> Result<PolyMatrix> {
        PolyMatrix::from_constant(c).mul(self)
    }

    pub fn eval(&self, z0: &Scalar, z1: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    m[(i, j)] = e.eval(z0, z1);
                }
            }
        }
        m
    }

    /// Rank over the function field, decided exactly: a nonzero `r × r` minor
    /// has degree at most `r · max_degree`, so it cannot vanish at that many + 1
    /// distinct points of the chart `z0 = 1`.
    pub fn generic_rank(&self) -> usize {
        let bound = self.rows.min(self.cols);
        if bound == 0 || self.is_zero() {
            return 0;
        }
        let points = bound * self.max_degree() + 1;
        let mut best = 0;
        for t in 0..points {
            let r = self.eval(&Scalar::one(), &Scalar::from_int(t as i64)).rank();
            best = best.max(r);
            if best == bound {
                break;
            }
        }
        best
    }

    /// Determinant of a square matrix whose entries have degrees
    /// `row_shift[i] + col_shift[j]`-compatible grading; computed by evaluating
    /// in the chart `z0 = 1` and interpolating.
    pub fn det(&self) -> Result<BinaryForm> {
        assert_eq!(self.rows, self.cols, "determinant of non-square polynomial matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(BinaryForm::constant(Scalar::one()));
        }
        // Degree of the determinant: along the identity permutation, if it is
        // homogeneous at all, every term has the same degree. Use column degrees.
        let mut degree = 0;
        for j in 0..n {
            degree += self
                .column_degree(j)
                .or_else(|| self.row_degree(j))
                .ok_or_else(|| Error::invalid("determinant of an inhomogeneous matrix"))?;
        }
        // A matrix graded by rows has the same total degree.
        let values: Vec<Scalar> = (0..=degree)
            .map(|t| self.eval(&Scalar::one(), &Scalar::from_int(t as i64)).det())
            .collect();
        Ok(BinaryForm::from_coeffs(interpolate(&values)))
    }
}

fn uniform_degree<'a>(mut it: impl Iterator<Item = &'a BinaryForm>) -> Option<usize> {
    let mut zero_degree = None;
    let mut found = None;
    for f in it.by_ref() {
        if f.is_zero() {
            zero_degree.get_or_insert(f.degree());
            continue;
        }
        match found {
            None => found = Some(f.degree()),
            Some(d) if d != f.degree() => return None,
            _ => {}
        }
    }
    found.or(zero_degree)
}

/// Coefficients (low → high) of the polynomial taking `values[t]` at `t = 0..n`.
pub fn interpolate(values: &[Scalar]) -> Vec<Scalar> {
    // Newton divided differences on the nodes 0, 1, ..., n.
    let n = values.len();
    let mut dd = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = &num / &Scalar::from_int(k as i64);
        }
    }
    // Expand Σ dd[k] · Π_{m<k} (t − m).
    let mut coeffs = vec![Scalar::zero(); n];
    let mut basis = vec![Scalar::one()];
    for (k, c) in dd.iter().enumerate() {
        for (a, b) in basis.iter().enumerate() {
            if !b.is_zero() {
                coeffs[a] += &(c * b);
            }
        }
        // basis *= (t − k)
        let mut next = vec![Scalar::zero(); basis.len() + 1];
        for (a, b) in basis.iter().enumerate() {
            next[a + 1] += b;
            let d = b * &Scalar::from_int(k as i64);
            next[a] -= &d;
        }
        basis = next;
    }
    coeffs
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Column-major list of entry strings, as used by the JSON formats.
pub fn columns_to_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.columns().iter().map(|c| c.iter().map(ToString::to_string).collect()).collect()
}

/// Parses a column-major list of form strings. Bare `0` entries take the
/// degree of the other entries in their column.
pub fn columns_from_strings(rows: usize, columns: &[Vec<String>]) -> Result<PolyMatrix> {
    let mut parsed = Vec::with_capacity(columns.len());
    for (j, col) in columns.iter().enumerate() {
        if col.len() != rows {
            return Err(Error::invalid(format!(
                "column {j} has {} entries, expected {rows}",
                col.len()
            )));
        }
        let forms: Vec<BinaryForm> =
            col.iter().map(|s| s.parse()).collect::<Result<Vec<BinaryForm>>>()?;
        let degree = uniform_degree(forms.iter().filter(|f| !f.is_zero()))
            .or_else(|| forms.iter().map(BinaryForm::degree).max())
            .unwrap_or(0);
        if forms.iter().any(|f| !f.is_zero() && f.degree() != degree) {
            return Err(Error::invalid(format!("column {j} is not homogeneous")));
        }
        parsed.push(
            forms
                .into_iter()
                .map(|f| if f.is_zero() { BinaryForm::zero(degree) } else { f })
                .collect(),
        );
    }
    Ok(PolyMatrix::from_columns(rows, parsed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> BinaryForm {
        s.parse().unwrap()
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = [Scalar::from_int(3), Scalar::from_int(-1), Scalar::from_frac(1, 2)];
        let values: Vec<Scalar> = (0..3)
            .map(|t| {
                let t = Scalar::from_int(t);
                &(&p[0] + &(&p[1] * &t)) + &(&p[2] * &(&t * &t))
            })
            .collect();
        assert_eq!(interpolate(&values), p.to_vec());
    }

    #[test]
    fn determinant_of_polynomial_matrix() {
        let m = PolyMatrix::from_columns(2, vec![vec![f("z0"), f("z1")], vec![f("-z1"), f("z0")]]);
        assert_eq!(m.det().unwrap(), f("z0^2 + z1^2"));
    }

    #[test]
    fn generic_rank_sees_through_special_points() {
        let m = PolyMatrix::from_columns(
            2,
            vec![vec![f("z0^2"), f("z0*z1")], vec![f("z0*z1"), f("z1^2")]],
        );
        assert_eq!(m.generic_rank(), 1);
        let q = PolyMatrix::from_columns(2, vec![vec![f("z1"), f("0*z0")], vec![f("0*z0"), f("z1")]]);
        assert_eq!(q.generic_rank(), 2);
    }

    #[test]
    fn string_columns_roundtrip() {
        let cols = vec![vec!["z0".to_string(), "0".to_string()], vec!["0".into(), "z1".into()]];
        let m = columns_from_strings(2, &cols).unwrap();
        assert_eq!(m.get(1, 0), &BinaryForm::zero(1));
        let back = columns_to_strings(&m);
        assert_eq!(columns_from_strings(2, &back).unwrap(), m);
    }
}
