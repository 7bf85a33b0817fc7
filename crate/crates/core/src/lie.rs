//! Lie algebras given by structure constants, their representations, and
//! sl(2)-triples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A Lie algebra with basis `x_0, …, x_{n−1}`; `table[i][j]` holds the
/// coordinates of `[x_i, x_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
}

/// Sparse structure constants: `(i, j, [(k, c)])` means `[x_i, x_j] = Σ c·x_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieAlgebraJson {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
}

impl LieAlgebra {
    pub fn from_table(table: Vec<Vec<Vec<Scalar>>>) -> Self {
        LieAlgebra { dim: table.len(), table }
    }

    /// Builds from sparse brackets `[x_i, x_j]` with `i < j`; the rest follows
    /// by antisymmetry unless given explicitly.
    pub fn from_json(j: &LieAlgebraJson) -> Result<Self> {
        let n = j.dim;
        let mut table = vec![vec![vec![Scalar::zero(); n]; n]; n];
        let mut given = vec![vec![false; n]; n];
        for (a, b, terms) in &j.brackets {
            if *a >= n || *b >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(Error::invalid("bracket index out of range"));
            }
            let mut v = vec![Scalar::zero(); n];
            for (k, c) in terms {
                v[*k] += c;
            }
            if !given[*b][*a] {
                table[*b][*a] = v.iter().map(|c| -c).collect();
            }
            table[*a][*b] = v;
            given[*a][*b] = true;
        }
        Ok(LieAlgebra { dim: n, table })
    }

    pub fn to_json(&self) -> LieAlgebraJson {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let terms: Vec<(usize, Scalar)> = self.table[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        LieAlgebraJson { dim: self.dim, brackets }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, x_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket(x, &unit(self.dim, j))).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// The adjoint representation.
    pub fn adjoint(&self) -> Representation {
        Representation::new((0..self.dim).map(|i| self.ad(&unit(self.dim, i))).collect())
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| self.table[i][j].iter().zip(&self.table[j][i]).all(|(a, b)| (a + b).is_zero()))
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (unit(n, i), unit(n, j), unit(n, k));
                    let a = self.bracket(&xi, &self.bracket(&xj, &xk));
                    let b = self.bracket(&xj, &self.bracket(&xk, &xi));
                    let c = self.bracket(&xk, &self.bracket(&xi, &xj));
                    if a.iter().zip(&b).zip(&c).any(|((a, b), c)| !(&(a + b) + c).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `B(x_i, x_j) = tr(ad x_i · ad x_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(&unit(self.dim, i))).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let p = ads[i].mul(&ads[j]);
                let mut t = Scalar::zero();
                for a in 0..self.dim {
                    t += &p[(a, a)];
                }
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Whether `ad y` is nilpotent.
    pub fn is_ad_nilpotent(&self, y: &[Scalar]) -> bool {
        is_nilpotent(&self.ad(y))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_nilpotent(m: &Matrix) -> bool {
    let mut p = m.clone();
    for _ in 1..m.rows().max(1) {
        p = p.mul(m);
    }
    p.is_zero()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LieReport {
    pub antisymmetric: bool,
    pub jacobi: bool,
    pub killing_form: Matrix,
    pub killing_rank: usize,
    pub semisimple: bool,
}

pub fn validate_lie(g: &LieAlgebra) -> LieReport {
    let antisymmetric = g.is_antisymmetric();
    let jacobi = g.satisfies_jacobi();
    let killing_form = g.killing_form();
    let killing_rank = killing_form.rank();
    LieReport {
        antisymmetric,
        jacobi,
        semisimple: antisymmetric && jacobi && killing_rank == g.dim,
        killing_rank,
        killing_form,
    }
}

/// Matrices `ρ(x_i)`, one per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(matrices: Vec<Matrix>) -> Self {
        let dim = matrices.first().map_or(0, Matrix::rows);
        Representation { dim, matrices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// `ρ([x_i, x_j]) = [ρ(x_i), ρ(x_j)]` for all basis pairs.
    pub fn is_representation_of(&self, g: &LieAlgebra) -> bool {
        if self.matrices.len() != g.dim() || self.matrices.iter().any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return false;
        }
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.act(g.basis_bracket(i, j));
                let rhs = self.matrices[i].mul(&self.matrices[j]).sub(&self.matrices[j].mul(&self.matrices[i]));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The induced representation on `Λ²`.
    pub fn exterior_square(&self) -> Representation {
        Representation::new(self.matrices.iter().map(exterior_square).collect())
    }

    /// `g·ρ(x)·g⁻¹`.
    pub fn conjugate(&self, g: &Matrix) -> Result<Representation> {
        let gi = g.inverse().ok_or_else(|| Error::invalid("change of basis is not invertible"))?;
        Ok(Representation::new(self.matrices.iter().map(|m| g.mul(m).mul(&gi)).collect()))
    }
}

/// Index of `e_a ∧ e_b`, `a < b`, in the lexicographic basis of `Λ²ℂⁿ`.
pub fn wedge_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// `Λ²X` on `Λ²ℂⁿ`: `X(u ∧ v) = Xu ∧ v + u ∧ Xv`.
pub fn exterior_square(x: &Matrix) -> Matrix {
    let n = x.rows();
    let dim = n * (n - 1) / 2;
    let mut out = Matrix::zeros(dim, dim);
    let mut add = |col: usize, c: usize, d: usize, s: &Scalar| {
        if c == d || s.is_zero() {
            return;
        }
        let (row, s) = if c < d { (wedge_index(n, c, d), s.clone()) } else { (wedge_index(n, d, c), -s) };
        out[(row, col)] += &s;
    };
    for a in 0..n {
        for b in a + 1..n {
            let col = wedge_index(n, a, b);
            for c in 0..n {
                add(col, c, b, &x[(c, a)]);
                add(col, a, c, &x[(c, b)]);
            }
        }
    }
    out
}

/// Images of the standard triple, `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sl2Embedding {
    pub e: Vec<Scalar>,
    pub h: Vec<Scalar>,
    pub f: Vec<Scalar>,
}

impl Sl2Embedding {
    pub fn check(&self, g: &LieAlgebra) -> Result<()> {
        let n = g.dim();
        if self.e.len() != n || self.h.len() != n || self.f.len() != n {
            return Err(Error::invalid("triple has the wrong length"));
        }
        let scale = |v: &[Scalar], c: i64| v.iter().map(|x| x * &Scalar::from_int(c)).collect::<Vec<_>>();
        if g.bracket(&self.h, &self.e) != scale(&self.e, 2) {
            return Err(Error::invalid("[H, E] != 2E"));
        }
        if g.bracket(&self.h, &self.f) != scale(&self.f, -2) {
            return Err(Error::invalid("[H, F] != -2F"));
        }
        if g.bracket(&self.e, &self.f) != self.h {
            return Err(Error::invalid("[E, F] != H"));
        }
        if Matrix::from_cols(&[self.e.clone(), self.h.clone(), self.f.clone()], n).rank() != 3 {
            return Err(Error::invalid("triple does not span a 3-dimensional subalgebra"));
        }
        Ok(())
    }

    /// `τ(a·E + b·H + c·F)`.
    pub fn image(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Vec<Scalar> {
        (0..self.e.len()).map(|i| &(&(a * &self.e[i]) + &(b * &self.h[i])) + &(c * &self.f[i])).collect()
    }
}

/// A triple through the nilpotent `y`, with `y` in the F-slot.
///
/// Solves `[y, [y, z]] = −2y` and sets `h = [y, z]`, so `[h, y] = 2y` with `h`
/// in the image of `ad y`; then solves `[y, x] = h`, `[h, x] = −2x`. The
/// standard triple `(y, h, x)` is returned as `E = x`, `H = −h`, `F = y`.
pub fn jacobson_morozov(g: &LieAlgebra, y: &[Scalar]) -> Result<Sl2Embedding> {
    let n = g.dim();
    if y.len() != n {
        return Err(Error::invalid("nilpotent has the wrong length"));
    }
    if y.iter().all(Scalar::is_zero) {
        return Err(Error::invalid("nilpotent element is zero"));
    }
    if !g.is_ad_nilpotent(y) {
        return Err(Error::invalid("element is not nilpotent"));
    }
    let ad_y = g.ad(y);
    let minus_two = Scalar::from_int(-2);
    let target: Vec<Scalar> = y.iter().map(|c| c * &minus_two).collect();
    let z = ad_y
        .mul(&ad_y)
        .solve(&target)
        .particular()
        .map(<[Scalar]>::to_vec)
        .ok_or_else(|| Error::internal("no neutral element for the nilpotent"))?;
    let h = ad_y.mul_vec(&z);
    // [y, x] = h and ([h, ·] + 2)·x = 0.
    let ad_h = g.ad(&h);
    let shifted = ad_h.add(&Matrix::identity(n).scale(&Scalar::from_int(2)));
    let system = ad_y.vstack(&shifted);
    let rhs: Vec<Scalar> = h.iter().cloned().chain(std::iter::repeat_n(Scalar::zero(), n)).collect();
    let x = system
        .solve(&rhs)
        .particular()
        .map(<[Scalar]>::to_vec)
        .ok_or_else(|| Error::internal("no opposite nilpotent found"))?;
    let triple = Sl2Embedding { e: x, h: h.iter().map(|c| -c).collect(), f: y.to_vec() };
    triple.check(g).map_err(|e| Error::internal(format!("constructed triple fails: {e}")))?;
    Ok(triple)
}

/// Multiplicities `a_j` of the irreducible `U_j` in a representation of
/// sl(2) given by the image `h` of `H`: `a_j = m_j − m_{j+2}` with `m_j` the
/// dimension of the `j` eigenspace.
pub fn decompose_by_weights(h: &Matrix) -> Result<Vec<usize>> {
    let n = h.rows();
    let bound = n as i64;
    let mut mult = std::collections::BTreeMap::new();
    let mut total = 0;
    for j in -bound..=bound {
        let shifted = h.sub(&Matrix::identity(n).scale(&Scalar::from_int(j)));
        let m = n - shifted.rank();
        if m > 0 {
            mult.insert(j, m);
            total += m;
        }
    }
    if total != n {
        return Err(Error::internal("H does not act diagonalizably with integer eigenvalues"));
    }
    let m = |j: i64| mult.get(&j).copied().unwrap_or(0) as i64;
    let mut a = Vec::new();
    for j in 0..=bound {
        let v = m(j) - m(j + 2);
        if v < 0 {
            return Err(Error::internal("weights do not come from a representation of sl(2)"));
        }
        a.push(v as usize);
    }
    while a.len() > 1 && a.last() == Some(&0) {
        a.pop();
    }
    let dim: usize = a.iter().enumerate().map(|(j, &aj)| (j + 1) * aj).sum();
    if dim != n {
        return Err(Error::internal("multiplicities do not add up to the dimension"));
    }
    Ok(a)
}

pub fn sl2_decompose(rep: &Representation, emb: &Sl2Embedding) -> Result<Vec<usize>> {
    decompose_by_weights(&rep.act(&emb.h))
}

/// A Lie algebra of matrices together with its defining representation.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub name: String,
    pub algebra: LieAlgebra,
    pub defining: Representation,
}

impl MatrixAlgebra {
    /// Coordinates of a matrix in the basis.
    pub fn coordinates(&self, m: &Matrix) -> Result<Vec<Scalar>> {
        coordinates_in(self.defining.matrices(), m)
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.to_rows().into_iter().flatten().collect()
}

fn coordinates_in(basis: &[Matrix], m: &Matrix) -> Result<Vec<Scalar>> {
    let size = m.rows() * m.cols();
    let stacked = Matrix::from_cols(&basis.iter().map(flatten).collect::<Vec<_>>(), size);
    stacked
        .solve(&flatten(m))
        .particular()
        .map(<[Scalar]>::to_vec)
        .ok_or_else(|| Error::invalid("matrix is not in the algebra"))
}

/// Structure constants of the span of `basis`, which must be closed under
/// commutators and linearly independent.
pub fn from_matrix_basis(name: &str, basis: Vec<Matrix>) -> Result<MatrixAlgebra> {
    let n = basis.len();
    let size = basis.first().map_or(0, |m| m.rows() * m.cols());
    let stacked = Matrix::from_cols(&basis.iter().map(flatten).collect::<Vec<_>>(), size);
    if stacked.rank() != n {
        return Err(Error::invalid("matrix basis is linearly dependent"));
    }
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            rhs.push(flatten(&basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]))));
        }
    }
    let coords = stacked
        .solve_matrix(&Matrix::from_cols(&rhs, size))
        .ok_or_else(|| Error::invalid("matrix span is not closed under brackets"))?;
    let table = (0..n).map(|i| (0..n).map(|j| coords.col(i * n + j)).collect()).collect();
    Ok(MatrixAlgebra { name: name.into(), algebra: LieAlgebra::from_table(table), defining: Representation::new(basis) })
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Scalar::one();
    m
}

/// sl(n): `e_ij` for `i ≠ j` in lexicographic order, then `h_i = e_ii − e_{i+1,i+1}`.
pub fn sl(n: usize) -> Result<MatrixAlgebra> {
    if n < 2 {
        return Err(Error::invalid("sl(n) needs n >= 2"));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(elementary(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        basis.push(elementary(n, i, i).sub(&elementary(n, i + 1, i + 1)));
    }
    from_matrix_basis(&format!("sl({n})"), basis)
}

/// Irreducible `(k+1)`-dimensional action of sl(2) on `v_0, …, v_k`:
/// `H v_i = (k − 2i) v_i`, `F v_i = v_{i+1}`, `E v_i = i(k − i + 1) v_{i−1}`.
pub fn irreducible_sl2(k: usize) -> [Matrix; 3] {
    let n = k + 1;
    let mut e = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Scalar::from_int(k as i64 - 2 * i as i64);
        if i + 1 < n {
            f[(i + 1, i)] = Scalar::one();
        }
        if i > 0 {
            e[(i - 1, i)] = Scalar::from_int((i * (k - i + 1)) as i64);
        }
    }
    [e, h, f]
}

/// Symmetric form on the 3-dimensional irreducible sl(2)-module preserved by
/// `irreducible_sl2(2)`.
pub fn invariant_form_3() -> Matrix {
    let gens = irreducible_sl2(2);
    // Unknown symmetric B with entries b00, b01, b02, b11, b12, b22.
    let idx = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let var = |i: usize, j: usize| idx.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let mut rows = Vec::new();
    for x in &gens {
        // (XᵀB + BX)_{ij} = Σ_a X_ai B_aj + B_ia X_aj
        for i in 0..3 {
            for j in 0..3 {
                let mut row = vec![Scalar::zero(); 6];
                for a in 0..3 {
                    row[var(a, j)] += &x[(a, i)];
                    row[var(i, a)] += &x[(a, j)];
                }
                rows.push(row);
            }
        }
    }
    let k = Matrix::from_rows(rows).kernel();
    let b = &k[0];
    Matrix::from_rows((0..3).map(|i| (0..3).map(|j| b[var(i, j)].clone()).collect()).collect())
}

/// `J = J3 ⊕ I_{n−3}`, where `J3` is the invariant form of `irreducible_sl2(2)`.
pub fn so_form(n: usize) -> Matrix {
    let j3 = invariant_form_3();
    let mut j = Matrix::identity(n);
    for a in 0..3 {
        for b in 0..3 {
            j[(a, b)] = j3[(a, b)].clone();
        }
    }
    j
}

/// so(n) preserving `so_form(n)`: basis `J⁻¹(e_ij − e_ji)`, `i < j`.
pub fn so(n: usize) -> Result<MatrixAlgebra> {
    if n < 3 {
        return Err(Error::invalid("so(n) needs n >= 3"));
    }
    let ji = so_form(n).inverse().expect("form is nondegenerate");
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(ji.mul(&elementary(n, i, j).sub(&elementary(n, j, i))));
        }
    }
    from_matrix_basis(&format!("so({n})"), basis)
}

/// `Ω = [[0, I], [−I, 0]]` on `e_1..e_m, f_1..f_m`.
pub fn symplectic_form(m: usize) -> Matrix {
    let mut o = Matrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        o[(i, m + i)] = Scalar::one();
        o[(m + i, i)] = Scalar::from_int(-1);
    }
    o
}

/// sp(2m): basis `Ω⁻¹·S` for `S` running over `e_ii` and `e_ij + e_ji`, `i < j`.
pub fn sp(two_m: usize) -> Result<MatrixAlgebra> {
    if two_m < 2 || two_m % 2 == 1 {
        return Err(Error::invalid("sp(2m) needs an even size"));
    }
    let n = two_m;
    let oi = symplectic_form(n / 2).inverse().expect("form is nondegenerate");
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = if i == j { elementary(n, i, i) } else { elementary(n, i, j).add(&elementary(n, j, i)) };
            basis.push(oi.mul(&s));
        }
    }
    from_matrix_basis(&format!("sp({n})"), basis)
}

/// The 3-dimensional Heisenberg algebra `[x_0, x_1] = x_2`.
pub fn heisenberg() -> LieAlgebra {
    let mut table = vec![vec![vec![Scalar::zero(); 3]; 3]; 3];
    table[0][1][2] = Scalar::one();
    table[1][0][2] = Scalar::from_int(-1);
    LieAlgebra::from_table(table)
}

/// Resolves `sl(n)`, `so(n)`, `sp(n)` names.
pub fn by_name(name: &str) -> Result<MatrixAlgebra> {
    let name = name.trim();
    let parse = |prefix: &str| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        rest.parse().ok()
    };
    if let Some(n) = parse("sl") {
        sl(n)
    } else if let Some(n) = parse("so") {
        so(n)
    } else if let Some(n) = parse("sp") {
        sp(n)
    } else {
        Err(Error::invalid(format!("unknown algebra {name:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(m: &MatrixAlgebra, rows: &[&[i64]]) -> Vec<Scalar> {
        m.coordinates(&Matrix::from_ints(rows)).unwrap()
    }

    #[test]
    fn classical_algebras_are_semisimple() {
        for name in ["sl(2)", "sl(3)", "so(5)", "sp(4)"] {
            let m = by_name(name).unwrap();
            let r = validate_lie(&m.algebra);
            assert!(r.jacobi && r.semisimple, "{name}");
            assert!(m.defining.is_representation_of(&m.algebra));
            assert!(m.algebra.adjoint().is_representation_of(&m.algebra));
        }
        assert_eq!(so(5).unwrap().algebra.dim(), 10);
        assert_eq!(sp(6).unwrap().algebra.dim(), 21);
    }

    #[test]
    fn heisenberg_and_perturbation() {
        let r = validate_lie(&heisenberg());
        assert!(r.jacobi && !r.semisimple);
        assert!(r.killing_form.is_zero());

        let g = sl(2).unwrap().algebra;
        let mut j = g.to_json();
        // Perturb the coefficient of x_0 in [x_0, x_1] by one.
        let entry = j.brackets.iter_mut().find(|(a, b, _)| (*a, *b) == (0, 1)).unwrap();
        entry.2.push((0, Scalar::one()));
        let bad = LieAlgebra::from_json(&j).unwrap();
        assert!(!validate_lie(&bad).jacobi);
    }

    #[test]
    fn jacobson_morozov_examples() {
        let s2 = sl(2).unwrap();
        let y = mat(&s2, &[&[0, 0], &[1, 0]]);
        let t = jacobson_morozov(&s2.algebra, &y).unwrap();
        assert_eq!(s2.defining.act(&t.h), Matrix::from_ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(s2.defining.act(&t.e), Matrix::from_ints(&[&[0, 1], &[0, 0]]));

        let s3 = sl(3).unwrap();
        let principal = mat(&s3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let t = jacobson_morozov(&s3.algebra, &principal).unwrap();
        assert_eq!(s3.defining.act(&t.h), Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        let minimal = mat(&s3, &[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
        let t = jacobson_morozov(&s3.algebra, &minimal).unwrap();
        assert_eq!(s3.defining.act(&t.h), Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]));

        let not_nilpotent = mat(&s3, &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        assert!(matches!(jacobson_morozov(&s3.algebra, &not_nilpotent), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn decompositions() {
        let s2 = sl(2).unwrap();
        let t = jacobson_morozov(&s2.algebra, &mat(&s2, &[&[0, 0], &[1, 0]])).unwrap();
        assert_eq!(sl2_decompose(&s2.algebra.adjoint(), &t).unwrap(), vec![0, 0, 1]);

        let s3 = sl(3).unwrap();
        let ad = s3.algebra.adjoint();
        let t = jacobson_morozov(&s3.algebra, &mat(&s3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(sl2_decompose(&ad, &t).unwrap(), vec![0, 0, 1, 0, 1]);
        let t = jacobson_morozov(&s3.algebra, &mat(&s3, &[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]])).unwrap();
        assert_eq!(sl2_decompose(&ad, &t).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn invariant_form_is_preserved() {
        let b = invariant_form_3();
        for x in irreducible_sl2(2) {
            assert!(x.transpose().mul(&b).add(&b.mul(&x)).is_zero());
        }
        assert!(!b.det().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let g = sl(3).unwrap().algebra;
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: LieAlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(LieAlgebra::from_json(&back).unwrap(), g);
    }
}
