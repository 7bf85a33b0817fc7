//! Worked examples with their expected answers: homogeneous twistor spheres
//! and linear quaternionic-like structures.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bundles::SplittingType;
use crate::error::{Error, Result};
use crate::lie::{self, irreducible_sl2, is_nilpotent, jacobson_morozov, MatrixAlgebra, Sl2Embedding};
use crate::linalg::Matrix;
use crate::orbit::{dimension_report, normal_bundle, DimensionReport, GoodQuadruple, NormalBundleReport, QuadrupleJson};
use crate::qlike::{self, analyze, AnalysisReport, Check, QLikeJson, QLikeStructure};
use crate::scalar::Scalar;

fn triple_from_matrices(m: &MatrixAlgebra, [e, h, f]: &[Matrix; 3]) -> Result<Sl2Embedding> {
    Ok(Sl2Embedding { e: m.coordinates(e)?, h: m.coordinates(h)?, f: m.coordinates(f)? })
}

fn embed_block(n: usize, offset: usize, x: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            out[(offset + i, offset + j)] = x[(i, j)].clone();
        }
    }
    out
}

fn quadruple(m: MatrixAlgebra, sigma_name: &str, tau: Sl2Embedding, u: Matrix, name: String) -> GoodQuadruple {
    let (sigma, representation_name) = match sigma_name {
        "adjoint" => (m.algebra.adjoint(), Some("adjoint".to_string())),
        _ => (m.defining, Some("defining".to_string())),
    };
    GoodQuadruple {
        name,
        algebra: m.algebra,
        sigma,
        tau,
        u_basis: u,
        algebra_name: Some(m.name),
        representation_name,
    }
}

/// sl(k+1) on `U_k` with the principal sl(2).
pub fn veronese(k: usize) -> Result<GoodQuadruple> {
    if k == 0 {
        return Err(Error::invalid("veronese needs k >= 1"));
    }
    let m = lie::sl(k + 1)?;
    let tau = triple_from_matrices(&m, &irreducible_sl2(k))?;
    Ok(quadruple(m, "defining", tau, Matrix::identity(k + 1), format!("veronese:{k}")))
}

/// so(n) on `ℂⁿ`, sl(2) ≅ so(3) acting on the first three coordinates.
pub fn so_quadruple(n: usize) -> Result<GoodQuadruple> {
    if n < 5 {
        return Err(Error::invalid("so quadruple needs n >= 5"));
    }
    let m = lie::so(n)?;
    let [e, h, f] = irreducible_sl2(2);
    let tau = triple_from_matrices(&m, &[embed_block(n, 0, &e), embed_block(n, 0, &h), embed_block(n, 0, &f)])?;
    let u = Matrix::from_cols(&(0..3).map(|i| lie::unit(n, i)).collect::<Vec<_>>(), n);
    Ok(quadruple(m, "defining", tau, u, format!("so:{n}")))
}

/// sp(2m) on `Λ²V` with basis `e_1..e_m, f_1..f_m`; sl(2) acts on
/// `p₁ = ⟨e_1, e_2⟩` and dually on `p₂ = ⟨f_1, f_2⟩`, and `U` is the
/// traceless part of `p₁ ⊗ p₂`.
pub fn sp_quadruple(two_m: usize) -> Result<GoodQuadruple> {
    if two_m < 4 || two_m % 2 == 1 {
        return Err(Error::invalid("sp quadruple needs an even size >= 4"));
    }
    let m = two_m / 2;
    let alg = lie::sp(two_m)?;
    let block = |x: &Matrix| embed_block(two_m, 0, x).add(&embed_block(two_m, m, &x.transpose().scale(&Scalar::from_int(-1))));
    let [e, h, f] = irreducible_sl2(1);
    let tau = triple_from_matrices(&alg, &[block(&e), block(&h), block(&f)])?;
    let sigma = alg.defining.exterior_square();
    let dim = two_m * (two_m - 1) / 2;
    let w = |a, b| lie::unit(dim, lie::wedge_index(two_m, a, b));
    let diff: Vec<Scalar> = w(0, m).iter().zip(&w(1, m + 1)).map(|(x, y)| x - y).collect();
    let u = Matrix::from_cols(&[w(0, m + 1), w(1, m), diff], dim);
    Ok(GoodQuadruple {
        name: format!("sp:{two_m}"),
        sigma,
        tau,
        u_basis: u,
        algebra_name: Some(alg.name),
        representation_name: Some("exterior-square".into()),
        algebra: alg.algebra,
    })
}

/// A nilpotent of a classical algebra, as a matrix in the defining representation.
///
/// For `sl(n)`: `principal`, `minimal`, or a partition such as `3+1` (Jordan
/// blocks). For `so(n)`: `block`, the so(3)-block nilpotent. For `sp(2m)`:
/// `minimal`. Any algebra accepts `basis:i` for a nilpotent basis element.
pub fn nilpotent(m: &MatrixAlgebra, spec: &str) -> Result<Matrix> {
    let n = m.defining.dim();
    let x = if let Some(i) = spec.strip_prefix("basis:") {
        let i: usize = i.parse().map_err(|_| Error::invalid(format!("bad basis index {i:?}")))?;
        m.defining.matrices().get(i).cloned().ok_or_else(|| Error::invalid("basis index out of range"))?
    } else if m.name.starts_with("sl") {
        let blocks: Vec<usize> = match spec {
            "principal" => vec![n],
            "minimal" => {
                let mut x = Matrix::zeros(n, n);
                x[(n - 1, 0)] = Scalar::one();
                return Ok(x);
            }
            p => p
                .split('+')
                .map(|b| b.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad partition {p:?}"))))
                .collect::<Result<_>>()?,
        };
        if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
            return Err(Error::invalid(format!("partition {spec:?} does not sum to {n}")));
        }
        let mut x = Matrix::zeros(n, n);
        let mut start = 0;
        for b in blocks {
            for i in start..start + b - 1 {
                x[(i + 1, i)] = Scalar::one();
            }
            start += b;
        }
        x
    } else if m.name.starts_with("so") && spec == "block" {
        embed_block(n, 0, &irreducible_sl2(2)[2])
    } else if m.name.starts_with("sp") && spec == "minimal" {
        m.defining.matrices()[0].clone()
    } else {
        return Err(Error::invalid(format!("unknown nilpotent {spec:?} for {}", m.name)));
    };
    if x.is_zero() || !is_nilpotent(&x) {
        return Err(Error::invalid(format!("{spec:?} is not a nonzero nilpotent")));
    }
    Ok(x)
}

/// `(𝔤, ad, τ, im τ)` with `τ` through the nilpotent `y` in the F-slot.
pub fn adjoint_from(m: MatrixAlgebra, y: &[Scalar], name: String) -> Result<GoodQuadruple> {
    let tau = jacobson_morozov(&m.algebra, y)?;
    let u = Matrix::from_cols(&[tau.e.clone(), tau.h.clone(), tau.f.clone()], m.algebra.dim());
    Ok(quadruple(m, "adjoint", tau, u, name))
}

pub fn adjoint(algebra: &str, spec: &str) -> Result<GoodQuadruple> {
    let m = lie::by_name(algebra)?;
    let y = m.coordinates(&nilpotent(&m, spec)?)?;
    let name = format!("adjoint:{}:{spec}", m.name.replace(['(', ')'], ""));
    adjoint_from(m, &y, name)
}

/// How an expected value is known: `formula` for a closed form, `computed`
/// for one derived here by independent means, `trivial` for degenerate cases.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectedValue {
    pub quantity: String,
    pub value: Value,
    pub basis: String,
}

fn ev(quantity: &str, value: Value, basis: &str) -> ExpectedValue {
    ExpectedValue { quantity: quantity.into(), value, basis: basis.into() }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadruple: Option<QuadrupleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<QLikeJson>,
    pub expected: Vec<ExpectedValue>,
}

fn splitting(v: Vec<i64>) -> Value {
    json!(SplittingType::new(v))
}

/// Expectations for a twistor catalog name such as `veronese:3`.
fn twistor_expectations(name: &str, q: &GoodQuadruple) -> Result<Vec<ExpectedValue>> {
    let parts: Vec<&str> = name.split(':').collect();
    let mut out = Vec::new();
    match parts.as_slice() {
        ["veronese", k] => {
            let k: i64 = k.parse().map_err(|_| Error::invalid("bad k"))?;
            let basis = if k == 1 { "trivial" } else { "formula" };
            out.push(ev("normal", splitting(vec![k + 2; (k - 1) as usize]), basis));
            out.push(ev("curve_degree", json!(k), "computed"));
            out.push(ev("dim_z", json!(k), basis));
        }
        ["so", n] => {
            let n: i64 = n.parse().map_err(|_| Error::invalid("bad n"))?;
            if n == 5 {
                out.push(ev("normal", splitting(vec![2, 2]), "computed"));
            }
            out.push(ev("normal_rank", json!(n - 3), "computed"));
            out.push(ev("normal_degree", json!(2 * n - 6), "computed"));
            out.push(ev("curve_degree", json!(2), "computed"));
            out.push(ev("dim_z", json!(n - 2), "formula"));
        }
        ["sp", n] => {
            let n: i64 = n.parse().map_err(|_| Error::invalid("bad size"))?;
            let mut v = vec![2, 2];
            v.extend(std::iter::repeat_n(1, 2 * (n - 4) as usize));
            out.push(ev("normal", splitting(v), "formula"));
            out.push(ev("curve_degree", json!(2), "computed"));
            if n == 4 {
                out.push(ev("dim_z", json!(3), "formula"));
            }
        }
        ["adjoint", alg, spec] => {
            let prediction = crate::orbit::adjoint_prediction(q)?;
            let basis = if prediction.is_empty() { "trivial" } else { "formula" };
            out.push(ev("normal", json!(prediction), basis));
            out.push(ev("curve_degree", json!(2), "computed"));
            match (*alg, *spec) {
                ("sl3", "principal") => out.push(ev("orbit_dim", json!(6), "computed")),
                ("sl3", "minimal") => out.push(ev("orbit_dim", json!(4), "computed")),
                ("sl2", _) => out.push(ev("dim_z", json!(1), "trivial")),
                _ => {}
            }
        }
        _ => return Err(Error::invalid(format!("unknown catalog entry {name:?}"))),
    }
    Ok(out)
}

/// Resolves `veronese:k`, `so:n`, `sp:2m`, `adjoint:<algebra>:<nilpotent>`.
pub fn build_quadruple(name: &str) -> Result<GoodQuadruple> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::invalid(format!("bad parameter {s:?} in {name:?}")));
    match parts.as_slice() {
        ["veronese", k] => veronese(num(k)?),
        ["so", n] => so_quadruple(num(n)?),
        ["sp", n] => sp_quadruple(num(n)?),
        ["adjoint", alg, spec] => adjoint(alg, spec),
        _ => Err(Error::invalid(format!("unknown catalog entry {name:?}"))),
    }
}

/// Resolves `quaternionic:k`, `conic-r3`, `conic-r3-dual`, `complex-c4`.
pub fn build_structure(name: &str) -> Result<QLikeStructure> {
    match name.split(':').collect::<Vec<_>>().as_slice() {
        ["quaternionic", k] => {
            let k: usize = k.parse().map_err(|_| Error::invalid(format!("bad k in {name:?}")))?;
            if k == 0 {
                return Err(Error::invalid("quaternionic needs k >= 1"));
            }
            Ok(qlike::build_quaternionic(k))
        }
        ["conic-r3"] => Ok(qlike::conic_r3()),
        ["conic-r3-dual"] => qlike::dualize(&qlike::conic_r3()),
        ["complex-c4"] => Ok(qlike::complex_c4()),
        _ => Err(Error::invalid(format!("unknown structure {name:?}"))),
    }
}

fn structure_expectations(name: &str) -> Vec<ExpectedValue> {
    let flags = |v: &[&str]| json!(v);
    match name {
        "quaternionic:1" => vec![
            ev("splitting_minus", splitting(vec![-1, -1]), "computed"),
            ev("label", json!("quaternionic"), "formula"),
            ev("u_plus", json!(4), "computed"),
            ev("e_plus", json!(4), "computed"),
            ev("psi_plus_rank", json!(4), "computed"),
        ],
        "quaternionic:2" => vec![
            ev("splitting_minus", splitting(vec![-1; 4]), "computed"),
            ev("label", json!("quaternionic"), "formula"),
        ],
        "conic-r3" => vec![
            ev("splitting_minus", splitting(vec![-2]), "computed"),
            ev("splitting_plus", splitting(vec![1, 1]), "computed"),
            ev("label", json!("rho-star-quaternionic"), "formula"),
            ev("flags", flags(&["CR"]), "formula"),
        ],
        "conic-r3-dual" => vec![
            ev("splitting_minus", splitting(vec![-1, -1]), "computed"),
            ev("splitting_plus", splitting(vec![2]), "computed"),
            ev("label", json!("rho-quaternionic"), "formula"),
            ev("flags", flags(&["co-CR"]), "formula"),
        ],
        "complex-c4" => vec![
            ev("splitting_minus", splitting(vec![-2]), "computed"),
            ev("splitting_plus", splitting(vec![1, 1, 0]), "computed"),
        ],
        _ => Vec::new(),
    }
}

pub const QUADRUPLE_ENTRIES: &[&str] = &[
    "veronese:1",
    "veronese:2",
    "veronese:3",
    "veronese:4",
    "veronese:5",
    "so:5",
    "so:6",
    "sp:4",
    "sp:6",
    "adjoint:sl2:principal",
    "adjoint:sl3:principal",
    "adjoint:sl3:minimal",
    "adjoint:sl4:2+2",
    "adjoint:sp4:minimal",
];

pub const STRUCTURE_ENTRIES: &[&str] = &["quaternionic:1", "quaternionic:2", "conic-r3", "conic-r3-dual", "complex-c4"];

pub fn quadruple_entry(name: &str) -> Result<CatalogEntry> {
    let q = build_quadruple(name)?;
    Ok(CatalogEntry {
        name: name.into(),
        expected: twistor_expectations(name, &q)?,
        quadruple: Some(q.to_json()),
        structure: None,
    })
}

pub fn structure_entry(name: &str) -> Result<CatalogEntry> {
    let s = build_structure(name)?;
    Ok(CatalogEntry { name: name.into(), expected: structure_expectations(name), quadruple: None, structure: Some(s.to_json()) })
}

/// Every catalog entry, quadruples first, in a fixed order.
pub fn entries() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for n in QUADRUPLE_ENTRIES {
        out.push(quadruple_entry(n)?);
    }
    for n in STRUCTURE_ENTRIES {
        out.push(structure_entry(n)?);
    }
    Ok(out)
}

/// Normal bundle and dimension reports for a quadruple, with expected values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistorOutcome {
    pub report: NormalBundleReport,
    pub dimensions: DimensionReport,
}

pub fn run_twistor(q: &GoodQuadruple, expected_normal: Option<SplittingType>) -> Result<TwistorOutcome> {
    let report = normal_bundle(q)?.with_expected(expected_normal);
    let dimensions = dimension_report(q, &report)?;
    Ok(TwistorOutcome { report, dimensions })
}

fn twistor_quantities(o: &TwistorOutcome) -> Value {
    let r = &o.report;
    json!({
        "normal": r.normal,
        "normal_rank": r.normal.rank(),
        "normal_degree": r.normal.degree(),
        "curve_degree": r.curve_degree,
        "dim_z": r.dim_z,
        "orbit_dim": o.dimensions.orbit_dim,
    })
}

fn structure_quantities(r: &AnalysisReport) -> Value {
    json!({
        "splitting_minus": r.splitting_minus,
        "splitting_plus": r.splitting_plus,
        "label": r.label,
        "flags": r.flags,
        "u_plus": r.heaven.u_plus,
        "e_plus": r.heaven.e_plus,
        "psi_plus_rank": r.heaven.psi_plus.rank,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub checks: Vec<Check>,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn compare(expected: &[ExpectedValue], computed: &Value, checks: &mut Vec<Check>) {
    for e in expected {
        let got = &computed[e.quantity.as_str()];
        let passed = *got == e.value;
        let detail = if passed { String::new() } else { format!("expected {}, computed {}", e.value, got) };
        checks.push(Check { name: e.quantity.clone(), passed, detail });
    }
}

/// Runs the pipeline on an entry and compares against its expectations.
pub fn evaluate(entry: &CatalogEntry) -> Result<EntryResult> {
    let mut checks = Vec::new();
    if let Some(qj) = &entry.quadruple {
        let q = GoodQuadruple::from_json(qj)?;
        let expected_normal = entry
            .expected
            .iter()
            .find(|e| e.quantity == "normal")
            .map(|e| serde_json::from_value(e.value.clone()))
            .transpose()
            .map_err(|e| Error::invalid(format!("bad expected splitting: {e}")))?;
        let o = run_twistor(&q, expected_normal)?;
        checks.push(Check {
            name: "report".into(),
            passed: o.report.passed(),
            detail: if o.report.passed() { String::new() } else { format!("{:?}", o.report) },
        });
        compare(&entry.expected, &twistor_quantities(&o), &mut checks);
    }
    if let Some(sj) = &entry.structure {
        let r = analyze(&QLikeStructure::from_json(sj)?)?;
        checks.push(Check {
            name: "analysis".into(),
            passed: r.passed(),
            detail: r.validation.first_failure().unwrap_or_default(),
        });
        compare(&entry.expected, &structure_quantities(&r), &mut checks);
    }
    Ok(EntryResult { name: entry.name.clone(), checks })
}

/// `exp(X)` for a nilpotent matrix.
fn exp_nilpotent(x: &Matrix) -> Matrix {
    let n = x.rows();
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(x).scale(&Scalar::from_frac(1, k as i64));
        out = out.add(&term);
    }
    out
}

/// A product of two unipotent elements `exp(c·X)` of the group, with `X`
/// running over nilpotent basis matrices.
fn random_group_element<R: Rng>(rng: &mut R, m: &MatrixAlgebra) -> Matrix {
    let nilpotents: Vec<&Matrix> = m.defining.matrices().iter().filter(|x| is_nilpotent(x)).collect();
    let n = m.defining.dim();
    let mut g = Matrix::identity(n);
    for _ in 0..2 {
        let x = nilpotents.choose(rng).expect("classical algebras have nilpotent basis elements");
        let c = [-1, 1].choose(rng).copied().unwrap();
        g = g.mul(&exp_nilpotent(&x.scale(&Scalar::from_int(c))));
    }
    g
}

fn conjugate_coords(m: &MatrixAlgebra, g: &Matrix, gi: &Matrix, x: &[Scalar]) -> Result<Vec<Scalar>> {
    m.coordinates(&g.mul(&m.defining.act(x)).mul(gi))
}

/// A random good quadruple over sl(3), sl(4) or so(5), obtained by moving a
/// standard one by a random group element. Returns the quadruple and its
/// expected normal bundle.
pub fn random_quadruple<R: Rng>(rng: &mut R) -> Result<(GoodQuadruple, SplittingType)> {
    let pick = |rng: &mut R, v: &[&str]| v.choose(rng).map(|s| s.to_string());
    let (alg, adjoint_spec, base) = match rng.gen_range(0..6) {
        0 => ("sl3", pick(rng, &["principal", "minimal"]), None),
        1 => ("sl4", pick(rng, &["principal", "3+1", "2+2", "minimal"]), None),
        2 => ("so5", None, None),
        3 => ("sl3", None, Some(veronese(2)?)),
        4 => ("sl4", None, Some(veronese(3)?)),
        _ => ("so5", None, Some(so_quadruple(5)?)),
    };
    let m = lie::by_name(alg)?;
    let adjoint_spec = match (alg, &adjoint_spec, &base) {
        ("so5", None, None) => {
            let mut specs = vec!["block".to_string()];
            specs.extend(
                (0..m.algebra.dim()).filter(|&i| is_nilpotent(&m.defining.matrices()[i])).map(|i| format!("basis:{i}")),
            );
            specs.choose(rng).cloned()
        }
        _ => adjoint_spec,
    };
    let g = random_group_element(rng, &m);
    let gi = g.inverse().expect("unipotent elements are invertible");
    if let Some(spec) = adjoint_spec {
        let y = m.coordinates(&nilpotent(&m, &spec)?)?;
        let moved = conjugate_coords(&m, &g, &gi, &y)?;
        let q = adjoint_from(m, &moved, format!("random:adjoint:{alg}:{spec}"))?;
        let expected = crate::orbit::adjoint_prediction(&q)?;
        return Ok((q, expected));
    }
    let mut q = base.expect("either adjoint or a base quadruple");
    let expected = match q.name.as_str() {
        "so:5" => SplittingType::new(vec![2, 2]),
        _ => {
            let k = q.dim_e() as i64 - 1;
            SplittingType::new(vec![k + 2; (k - 1) as usize])
        }
    };
    q.tau = Sl2Embedding {
        e: conjugate_coords(&m, &g, &gi, &q.tau.e)?,
        h: conjugate_coords(&m, &g, &gi, &q.tau.h)?,
        f: conjugate_coords(&m, &g, &gi, &q.tau.f)?,
    };
    q.u_basis = g.mul(&q.u_basis);
    q.name = format!("random:{}", q.name);
    Ok((q, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::validate_good_quadruple;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exterior_square_is_a_representation() {
        let m = lie::sp(4).unwrap();
        assert!(m.defining.exterior_square().is_representation_of(&m.algebra));
        assert_eq!(lie::wedge_index(4, 2, 3), 5);
    }

    #[test]
    fn builders_validate() {
        for name in ["veronese:2", "so:5", "sp:4", "adjoint:sl3:minimal", "adjoint:so5:block", "adjoint:sp4:minimal"] {
            let q = build_quadruple(name).unwrap();
            let r = validate_good_quadruple(&q).unwrap();
            assert!(r.is_valid(), "{name}: {r:?}");
        }
        assert!(build_quadruple("adjoint:sl3:2+2").is_err());
        assert!(build_quadruple("torus:3").is_err());
    }

    #[test]
    fn small_entries_match() {
        for name in ["veronese:2", "veronese:3", "sp:4", "so:5", "adjoint:sl3:principal"] {
            let r = evaluate(&quadruple_entry(name).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        for name in STRUCTURE_ENTRIES {
            let r = evaluate(&structure_entry(name).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let mut e = quadruple_entry("veronese:2").unwrap();
        e.expected[0].value = splitting(vec![3]);
        assert!(!evaluate(&e).unwrap().passed());
    }

    #[test]
    fn random_quadruples_are_good() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let (q, expected) = random_quadruple(&mut rng).unwrap();
            let o = run_twistor(&q, Some(expected)).unwrap();
            assert!(o.report.passed(), "{:?}", o.report);
        }
    }
}
