//! Twistor spheres in homogeneous spaces: from a good quadruple
//! `(𝔤, σ, τ, U)` to the Veronese curve `t ⊂ PE`, the orbit tangent family
//! along it, and the normal bundle of `t` in the orbit `Z`.

use serde::{Deserialize, Serialize};

use crate::bundles::{saturate, subquotient_splitting, SplittingType, SubbundleFamily};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::kernel::graded_kernel;
use crate::lie::{self, sl2_decompose, LieAlgebra, LieAlgebraJson, Representation, Sl2Embedding};
use crate::linalg::Matrix;
use crate::modp;
use crate::polymat::PolyMatrix;
use crate::qlike::Check;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct GoodQuadruple {
    pub name: String,
    pub algebra: LieAlgebra,
    pub sigma: Representation,
    pub tau: Sl2Embedding,
    /// `N × dim U`, columns spanning `U ⊆ E`.
    pub u_basis: Matrix,
    /// Constructor names, kept so the JSON form can refer to them.
    pub algebra_name: Option<String>,
    pub representation_name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Named(String),
    Inline(LieAlgebraJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationSpec {
    /// `defining`, `adjoint` or `exterior-square`.
    Named(String),
    Matrices(Vec<Vec<Vec<Scalar>>>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadrupleJson {
    #[serde(default)]
    pub name: String,
    pub algebra: AlgebraSpec,
    pub representation: RepresentationSpec,
    pub tau: Sl2Embedding,
    /// Basis vectors of `U`.
    pub u_basis: Vec<Vec<Scalar>>,
}

impl GoodQuadruple {
    pub fn dim_e(&self) -> usize {
        self.sigma.dim()
    }

    pub fn is_adjoint(&self) -> bool {
        self.sigma == self.algebra.adjoint()
    }

    pub fn to_json(&self) -> QuadrupleJson {
        let algebra = match &self.algebra_name {
            Some(n) => AlgebraSpec::Named(n.clone()),
            None => AlgebraSpec::Inline(self.algebra.to_json()),
        };
        let representation = match &self.representation_name {
            Some(n) => RepresentationSpec::Named(n.clone()),
            None => RepresentationSpec::Matrices(self.sigma.matrices().iter().map(Matrix::to_rows).collect()),
        };
        QuadrupleJson {
            name: self.name.clone(),
            algebra,
            representation,
            tau: self.tau.clone(),
            u_basis: self.u_basis.columns(),
        }
    }

    pub fn from_json(j: &QuadrupleJson) -> Result<Self> {
        let (algebra, defining, algebra_name) = match &j.algebra {
            AlgebraSpec::Named(n) => {
                let m = lie::by_name(n)?;
                (m.algebra, Some(m.defining), Some(m.name))
            }
            AlgebraSpec::Inline(a) => (LieAlgebra::from_json(a)?, None, None),
        };
        let (sigma, representation_name) = match &j.representation {
            RepresentationSpec::Named(n) if n == "adjoint" => (algebra.adjoint(), Some(n.clone())),
            RepresentationSpec::Named(n) if n == "defining" => (
                defining.ok_or_else(|| Error::invalid("an inline algebra has no defining representation"))?,
                Some(n.clone()),
            ),
            RepresentationSpec::Named(n) if n == "exterior-square" => (
                defining
                    .ok_or_else(|| Error::invalid("an inline algebra has no defining representation"))?
                    .exterior_square(),
                Some(n.clone()),
            ),
            RepresentationSpec::Named(n) => return Err(Error::invalid(format!("unknown representation {n:?}"))),
            RepresentationSpec::Matrices(ms) => {
                let n = ms.first().map_or(0, Vec::len);
                if ms.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
                    return Err(Error::invalid("representation matrices must be square of one size"));
                }
                (Representation::new(ms.iter().map(|m| Matrix::from_rows(m.clone())).collect()), None)
            }
        };
        let n = sigma.dim();
        if j.u_basis.is_empty() || j.u_basis.iter().any(|v| v.len() != n) {
            return Err(Error::invalid("U basis vectors must be nonempty and of length dim E"));
        }
        Ok(GoodQuadruple {
            name: j.name.clone(),
            algebra,
            sigma,
            tau: j.tau.clone(),
            u_basis: Matrix::from_cols(&j.u_basis, n),
            algebra_name,
            representation_name,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let j: QuadrupleJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "quadruple".into(),
            position: e.column(),
            message: e.to_string(),
        })?;
        GoodQuadruple::from_json(&j)
    }

    /// Action of `σ(τ(X))` on `U` in the given basis, for `X = E, H, F`.
    fn restricted(&self) -> Result<Option<[Matrix; 3]>> {
        let mut out = Vec::new();
        for x in [&self.tau.e, &self.tau.h, &self.tau.f] {
            let image = self.sigma.act(x).mul(&self.u_basis);
            match self.u_basis.solve_matrix(&image) {
                Some(m) => out.push(m),
                None => return Ok(None),
            }
        }
        Ok(Some(out.try_into().expect("three matrices")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadrupleReport {
    pub checks: Vec<Check>,
    /// Multiplicities `a_j` of `U_j` in `U`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub decomposition_on_u: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_degree: Option<usize>,
}

impl QuadrupleReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.detail.clone())
    }
}

pub fn validate_good_quadruple(q: &GoodQuadruple) -> Result<QuadrupleReport> {
    let mut r = QuadrupleReport { checks: Vec::new(), decomposition_on_u: Vec::new(), curve_degree: None };
    let push = |r: &mut QuadrupleReport, name: &str, err: Option<String>| {
        let passed = err.is_none();
        r.checks.push(Check { name: name.into(), passed, detail: err.unwrap_or_default() });
        passed
    };
    if !push(&mut r, "tau", q.tau.check(&q.algebra).err().map(|e| e.to_string())) {
        return Ok(r);
    }
    let rep_ok = q.sigma.is_representation_of(&q.algebra);
    if !push(&mut r, "representation", (!rep_ok).then(|| "sigma does not preserve brackets".into())) {
        return Ok(r);
    }
    let u_ok = q.u_basis.rows() == q.dim_e() && q.u_basis.rank() == q.u_basis.cols();
    if !push(&mut r, "u_basis", (!u_ok).then(|| "U basis is not linearly independent".into())) {
        return Ok(r);
    }
    let Some(restricted) = q.restricted()? else {
        push(&mut r, "invariance", Some("U not invariant".into()));
        return Ok(r);
    };
    push(&mut r, "invariance", None);
    if restricted.iter().all(Matrix::is_zero) {
        push(&mut r, "irreducible", Some("representation on U trivial".into()));
        return Ok(r);
    }
    let a = lie::decompose_by_weights(&restricted[1])?;
    let irreducible = a.iter().sum::<usize>() == 1 && a.len() >= 2 && a.last() == Some(&1);
    r.decomposition_on_u = a.clone();
    if push(&mut r, "irreducible", (!irreducible).then(|| format!("U is not irreducible: multiplicities {a:?}"))) {
        r.curve_degree = Some(a.len() - 1);
    }
    Ok(r)
}

fn require_valid(q: &GoodQuadruple) -> Result<usize> {
    let r = validate_good_quadruple(q)?;
    match (r.is_valid(), r.curve_degree) {
        (true, Some(d)) => Ok(d),
        _ => Err(Error::invalid(r.first_failure().unwrap_or_else(|| "invalid quadruple".into()))),
    }
}

/// The cone over `t`: `v(z)` spans the kernel of `σ(τ(A(z)))|_U` with
/// `A(z) = −z0²·E + z0·z1·H + z1²·F`.
#[derive(Clone, Debug, PartialEq)]
pub struct VeroneseCurve {
    pub degree: usize,
    /// Coordinates in the basis of `U`.
    pub in_u: Vec<BinaryForm>,
    /// Coordinates in `E`.
    pub v: Vec<BinaryForm>,
}

pub fn veronese_curve(q: &GoodQuadruple) -> Result<VeroneseCurve> {
    let d = require_valid(q)?;
    let [e, h, f] = q.restricted()?.ok_or_else(|| Error::internal("U lost invariance"))?;
    let n = e.rows();
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| BinaryForm::from_coeffs(vec![-&e[(i, j)], h[(i, j)].clone(), f[(i, j)].clone()]))
        .collect();
    let a = PolyMatrix::new(n, n, entries);
    let k = graded_kernel(&a, &vec![0; n])?;
    if k.rank() != 1 {
        return Err(Error::invalid("the curve matrix does not have a one-dimensional kernel"));
    }
    if k.shifts[0] != d as i64 {
        return Err(Error::internal(format!("curve has degree {} but U is U_{d}", k.shifts[0])));
    }
    let in_u = k.to_matrix(n).column(0);
    let v = PolyMatrix::from_columns(n, vec![in_u.clone()]).left_mul_const(&q.u_basis)?.column(0);
    // Euler relation d·v = z0·∂₀v + z1·∂₁v.
    let euler_ok = v.iter().all(|x| {
        let lhs = x.scale(&Scalar::from_int(d as i64));
        let rhs = BinaryForm::z0().mul(&x.d0()).add(&BinaryForm::z1().mul(&x.d1()));
        lhs == rhs
    });
    if !euler_ok {
        return Err(Error::internal("curve violates the Euler relation"));
    }
    Ok(VeroneseCurve { degree: d, in_u, v })
}

/// `W ⊇ L′ ⊇ L` along `t`: `W` is spanned by `σ(𝔤)·v` and `v`, `L′` by the
/// derivatives of `v`.
#[derive(Clone, Debug)]
pub struct OrbitFamilies {
    pub curve: VeroneseCurve,
    pub w: SubbundleFamily,
    pub l_prime: SubbundleFamily,
}

fn column(v: &[BinaryForm], d: usize) -> Vec<BinaryForm> {
    v.iter().map(|x| if x.is_zero() { BinaryForm::zero(d) } else { x.clone() }).collect()
}

pub fn orbit_tangent_family(q: &GoodQuadruple) -> Result<OrbitFamilies> {
    let curve = veronese_curve(q)?;
    let d = curve.degree;
    let n = q.dim_e();
    let v = PolyMatrix::from_columns(n, vec![column(&curve.v, d)]);
    let mut cols = Vec::new();
    for m in q.sigma.matrices() {
        cols.push(column(&v.left_mul_const(m)?.column(0), d));
    }
    cols.push(column(&curve.v, d));
    let raw = PolyMatrix::from_columns(n, cols);
    let w = saturate(&raw.select_columns(&generic_columns(&raw)))?;
    if !is_locally_free_image(&raw, &w, d)? {
        return Err(Error::invalid("orbit tangent family not locally free along t"));
    }
    let dv = PolyMatrix::from_columns(n, vec![column(&v.d0().column(0), d - 1), column(&v.d1().column(0), d - 1)]);
    let l_prime = saturate(&dv)?;
    if l_prime.rank() < 2 {
        return Err(Error::invalid("curve not immersed"));
    }
    if !w.contains(&column(&curve.v, d))? {
        return Err(Error::internal("the curve is not inside its orbit tangent family"));
    }
    Ok(OrbitFamilies { curve, w, l_prime })
}

/// Columns that stay independent at a point of generic rank; their
/// saturation equals that of all columns.
fn generic_columns(raw: &PolyMatrix) -> Vec<usize> {
    let r = raw.generic_rank();
    for t in 0..=(r * raw.max_degree()) as i64 {
        let rref = raw.eval(&Scalar::one(), &Scalar::from_int(t)).rref();
        if rref.pivots.len() == r {
            return rref.pivots;
        }
    }
    (0..raw.cols()).collect()
}

/// Whether the image sheaf of `raw` (all columns of degree `d`) equals its
/// saturation `w`, i.e. the raw columns have constant rank.
///
/// Once `w(m)` is globally generated, an image module filling `H⁰(w(m))`
/// forces the image sheaf to be all of `w`; conversely the image module
/// fills it by degree `d + r·d`, past every syzygy degree. A rank mod `p`
/// bounds the exact rank from below, so a full rank mod `p` is a proof.
fn is_locally_free_image(raw: &PolyMatrix, w: &SubbundleFamily, d: usize) -> Result<bool> {
    let e_max = w.degrees().iter().copied().max().unwrap_or(0).max(0) as usize;
    let top = d + w.rank() * d.max(1);
    let i = modp::sqrt_minus_one();
    for m in d.max(e_max)..=top {
        let target = w.splitting().h0(m as i64);
        let e = m - d;
        let mut exact = Vec::new();
        for col in raw.columns() {
            for a in 0..=e {
                exact.push(
                    col.iter()
                        .flat_map(|x| if x.is_zero() { vec![Scalar::zero(); m + 1] } else { x.shift(e, a).coeffs().to_vec() })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let width = raw.rows() * (m + 1);
        let reduced: Option<Vec<Vec<u64>>> =
            exact.iter().map(|row| row.iter().map(|c| modp::reduce(c, i)).collect()).collect();
        if reduced.is_some_and(|rows| modp::rank(rows, width) == target) {
            return Ok(true);
        }
        if m == top {
            return Ok(Matrix::from_rows(exact).rank() == target);
        }
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalBundleReport {
    pub name: String,
    pub curve_degree: usize,
    pub orbit_tangent_rank: usize,
    pub dim_z: usize,
    pub normal: SplittingType,
    pub nonnegative: bool,
    pub c1_ok: bool,
    /// Normal bundle predicted from the sl(2)-decomposition of `𝔤` for
    /// adjoint quadruples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjoint_prediction: Option<SplittingType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<SplittingType>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

impl NormalBundleReport {
    pub fn with_expected(mut self, expected: Option<SplittingType>) -> Self {
        self.matches = expected.as_ref().map(|e| *e == self.normal);
        self.expected = expected;
        self
    }

    pub fn passed(&self) -> bool {
        self.nonnegative
            && self.c1_ok
            && self.matches != Some(false)
            && self.adjoint_prediction.as_ref().is_none_or(|p| *p == self.normal)
    }
}

/// `(−2 + Σ j·a_j)` copies of `O(1)`, with `a_j` the multiplicities of `U_j` in `𝔤`.
pub fn adjoint_prediction(q: &GoodQuadruple) -> Result<SplittingType> {
    let a = sl2_decompose(&q.algebra.adjoint(), &q.tau)?;
    let count = a.iter().enumerate().map(|(j, &aj)| (j * aj) as i64).sum::<i64>() - 2;
    if count < 0 {
        return Err(Error::internal("adjoint decomposition gives a negative count"));
    }
    Ok(SplittingType::new(vec![1; count as usize]))
}

pub fn normal_bundle(q: &GoodQuadruple) -> Result<NormalBundleReport> {
    let fam = orbit_tangent_family(q)?;
    normal_bundle_from(q, &fam)
}

pub fn normal_bundle_from(q: &GoodQuadruple, fam: &OrbitFamilies) -> Result<NormalBundleReport> {
    let d = fam.curve.degree as i64;
    let normal = subquotient_splitting(&fam.l_prime, &fam.w, d)?;
    let r = fam.w.rank();
    if normal.rank() + 2 != r {
        return Err(Error::internal("normal bundle has the wrong rank"));
    }
    let nonnegative = normal.is_nonnegative();
    if !nonnegative {
        return Err(Error::internal(format!("normal bundle {normal} has a negative summand")));
    }
    let c1_ok = normal.degree() == fam.w.splitting().degree() - fam.l_prime.splitting().degree() + d * (r as i64 - 2);
    let adjoint_prediction = if q.is_adjoint() { Some(adjoint_prediction(q)?) } else { None };
    Ok(NormalBundleReport {
        name: q.name.clone(),
        curve_degree: fam.curve.degree,
        orbit_tangent_rank: r,
        dim_z: r - 1,
        normal,
        nonnegative,
        c1_ok,
        adjoint_prediction,
        expected: None,
        matches: None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionReport {
    pub dim_z: usize,
    /// For adjoint quadruples, `dim 𝔤 − dim ker ad Y` with `Y = τ(F)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_dim: Option<usize>,
}

pub fn dimension_report(q: &GoodQuadruple, report: &NormalBundleReport) -> Result<DimensionReport> {
    let orbit_dim = if q.is_adjoint() {
        let centralizer = q.algebra.ad(&q.tau.f).kernel().len();
        let dim = q.algebra.dim() - centralizer;
        if dim != report.dim_z + 1 {
            return Err(Error::internal(format!("orbit dimension {dim} but dim Z = {}", report.dim_z)));
        }
        Some(dim)
    } else {
        None
    };
    Ok(DimensionReport { dim_z: report.dim_z, orbit_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{irreducible_sl2, jacobson_morozov, sl};

    fn sl2_on(k: usize) -> GoodQuadruple {
        let m = sl(k + 1).unwrap();
        let [e, h, f] = irreducible_sl2(k);
        let tau = Sl2Embedding {
            e: m.coordinates(&e).unwrap(),
            h: m.coordinates(&h).unwrap(),
            f: m.coordinates(&f).unwrap(),
        };
        GoodQuadruple {
            name: format!("veronese-{k}"),
            algebra: m.algebra,
            sigma: m.defining,
            tau,
            u_basis: Matrix::identity(k + 1),
            algebra_name: Some(m.name),
            representation_name: Some("defining".into()),
        }
    }

    #[test]
    fn defining_sl2_curve_is_the_identity_line() {
        let c = veronese_curve(&sl2_on(1)).unwrap();
        assert_eq!(c.degree, 1);
        let span = Matrix::from_cols(&[c.v[0].coeffs().to_vec(), c.v[1].coeffs().to_vec()], 2);
        assert_eq!(span.rank(), 2);
        let r = normal_bundle(&sl2_on(1)).unwrap();
        assert!(r.normal.is_empty());
        assert_eq!(r.dim_z, 1);
    }

    #[test]
    fn veronese_twisted_cubic() {
        let q = sl2_on(3);
        let r = normal_bundle(&q).unwrap();
        assert_eq!(r.curve_degree, 3);
        assert_eq!(r.normal, SplittingType::new(vec![5, 5]));
        assert_eq!(dimension_report(&q, &r).unwrap().dim_z, 3);
        let fam = orbit_tangent_family(&sl2_on(2)).unwrap();
        assert_eq!(fam.w.splitting(), SplittingType::new(vec![0, 0, 0]));
    }

    #[test]
    fn weight_line_is_not_invariant() {
        let mut q = sl2_on(2);
        q.u_basis = Matrix::from_cols(&[lie::unit(3, 0)], 3);
        let r = validate_good_quadruple(&q).unwrap();
        assert_eq!(r.first_failure().as_deref(), Some("U not invariant"));
    }

    #[test]
    fn trivial_action_on_u() {
        // sl(2) acting on the last coordinate of sl(3) through the top-left block.
        let m = sl(3).unwrap();
        let pad = |x: &Matrix| {
            let mut out = Matrix::zeros(3, 3);
            for i in 0..2 {
                for j in 0..2 {
                    out[(i, j)] = x[(i, j)].clone();
                }
            }
            out
        };
        let [e, h, f] = irreducible_sl2(1);
        let tau = Sl2Embedding {
            e: m.coordinates(&pad(&e)).unwrap(),
            h: m.coordinates(&pad(&h)).unwrap(),
            f: m.coordinates(&pad(&f)).unwrap(),
        };
        let q = GoodQuadruple {
            name: String::new(),
            algebra: m.algebra,
            sigma: m.defining,
            tau,
            u_basis: Matrix::from_cols(&[lie::unit(3, 2)], 3),
            algebra_name: None,
            representation_name: None,
        };
        let r = validate_good_quadruple(&q).unwrap();
        assert_eq!(r.first_failure().as_deref(), Some("representation on U trivial"));
    }

    #[test]
    fn adjoint_sl2_is_the_curve_itself() {
        let m = sl(2).unwrap();
        let y = m.coordinates(&Matrix::from_ints(&[&[0, 0], &[1, 0]])).unwrap();
        let tau = jacobson_morozov(&m.algebra, &y).unwrap();
        let u = Matrix::from_cols(&[tau.e.clone(), tau.h.clone(), tau.f.clone()], 3);
        let q = GoodQuadruple {
            name: String::new(),
            sigma: m.algebra.adjoint(),
            algebra: m.algebra,
            tau,
            u_basis: u,
            algebra_name: Some(m.name),
            representation_name: Some("adjoint".into()),
        };
        let fam = orbit_tangent_family(&q).unwrap();
        assert!(fam.w.same_family(&fam.l_prime).unwrap());
        let r = normal_bundle_from(&q, &fam).unwrap();
        assert!(r.normal.is_empty() && r.passed());
        assert_eq!(dimension_report(&q, &r).unwrap().orbit_dim, Some(2));
    }

    #[test]
    fn json_round_trip() {
        let q = sl2_on(2);
        let text = serde_json::to_string(&q.to_json()).unwrap();
        let back = GoodQuadruple::parse(&text).unwrap();
        assert_eq!(back.sigma, q.sigma);
        assert_eq!(back.tau, q.tau);
        assert_eq!(back.u_basis, q.u_basis);
    }
}
