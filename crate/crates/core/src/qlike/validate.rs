use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{bundles, Mode, QLikeStructure};
use crate::bundles::{is_split_extension, SubbundleFamily};
use crate::error::{Error, Result};
use crate::form::{have_common_zero, BinaryForm};
use crate::linalg::Matrix;
use crate::modp;
use crate::polymat::PolyMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn rank_ok(&self) -> bool {
        self.checks.first().is_some_and(|c| c.name == "rank" && c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail))
    }
}

pub fn validate(s: &QLikeStructure) -> Result<ValidationReport> {
    let mut r = ValidationReport::default();
    if s.spanning.rows() != s.dim {
        return Err(Error::invalid(format!("spanning matrix has {} rows, expected {}", s.spanning.rows(), s.dim)));
    }
    if s.k == 0 || s.k >= s.dim {
        r.push("rank", false, "not an embedding of positive codimension family");
        return Ok(r);
    }
    let rank = s.spanning.generic_rank();
    if rank != s.k {
        r.push("rank", false, format!("generic rank {rank}, expected {}", s.k));
        return Ok(r);
    }
    r.push("rank", true, "");

    let b = bundles(s)?;
    r.push("saturation", true, format!("generator degrees {:?}", b.minus.degrees()));

    if s.mode == Mode::Real {
        let (ok, detail) = reality(s, &b.plus.annihilator().basis().transpose())?;
        r.push("reality", ok, detail);
    }

    let (ok, detail) = immersion(&b.minus, b.plus.annihilator())?;
    r.push("immersion", ok, detail);

    let family = if s.k <= s.dim - s.k { &b.minus } else { b.plus.annihilator() };
    match injectivity(family)? {
        Injectivity::Proved => r.push("injectivity", true, ""),
        Injectivity::Sampled => {
            r.push("injectivity", true, "sampled");
            r.warnings.push("injectivity: sampled".into());
        }
        Injectivity::Fails(why) => r.push("injectivity", false, why),
    }

    let split = is_split_extension(&b.minus)?;
    r.push("nonsplitting", !split, if split { "the tautological sequence splits" } else { "" });
    Ok(r)
}

/// `C·C̄ = I`, and `C·σ*(P)` lies in the family.
fn reality(s: &QLikeStructure, ann_rows: &PolyMatrix) -> Result<(bool, String)> {
    let c = s.conjugation_matrix();
    if c.rows() != s.dim || c.cols() != s.dim {
        return Err(Error::invalid("conjugation must be a dim × dim matrix"));
    }
    if c.mul(&c.conj()) != Matrix::identity(s.dim) {
        return Ok((false, "the conjugation does not square to the identity".into()));
    }
    let moved = s.spanning.antipodal().left_mul_const(&c)?;
    if !ann_rows.mul(&moved)?.is_zero() {
        return Ok((false, "the family is not preserved by the conjugation".into()));
    }
    Ok((true, String::new()))
}

/// The differential vanishes at `z` exactly when both partial derivatives of
/// every basis column lie in `U^z`, i.e. are killed by the annihilator.
fn immersion(f: &SubbundleFamily, ann: &SubbundleFamily) -> Result<(bool, String)> {
    let q = ann.basis().transpose();
    let d = f.basis().d0().hstack(&f.basis().d1());
    let pairings = q.mul(&d)?;
    let forms: Vec<BinaryForm> = (0..pairings.rows())
        .flat_map(|i| (0..pairings.cols()).map(move |j| (i, j)))
        .map(|(i, j)| pairings.get(i, j).clone())
        .collect();
    if forms.iter().all(BinaryForm::is_zero) {
        return Ok((false, "constant map, not an embedding".into()));
    }
    if have_common_zero(&forms) {
        return Ok((false, "the differential vanishes at some point".into()));
    }
    Ok((true, String::new()))
}

enum Injectivity {
    Proved,
    Sampled,
    Fails(String),
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Plücker coordinates of a saturated family.
pub(crate) fn plucker(f: &SubbundleFamily) -> Result<Vec<BinaryForm>> {
    let b = f.basis();
    subsets(b.rows(), b.cols()).iter().map(|rows| b.select_rows(rows).det()).collect()
}

const MAX_MONOMIALS: usize = 625;
const SAMPLE_PAIRS: usize = 25;

/// Decides whether `z ↦ [p(z)]` is an embedding. With
/// `h_A(s,t) = p(s)ᵀ·A·p(t)` for antisymmetric `A`, the forms
/// `g_A = h_A / (s0·t1 − s1·t0)` have no common zero on `P¹ × P¹` exactly
/// when the curve is injective and immersed; that holds iff their ideal
/// contains every monomial of some bidegree `(N, N)`, certified modulo a
/// prime. Past the size cap, distinct points are sampled instead.
fn injectivity(f: &SubbundleFamily) -> Result<Injectivity> {
    let p = plucker(f)?;
    let d = p.iter().find(|x| !x.is_zero()).map_or(0, BinaryForm::degree);
    if d == 0 {
        return Ok(Injectivity::Fails("constant map, not an embedding".into()));
    }
    let i = modp::sqrt_minus_one();
    let reduced: Option<Vec<Vec<u64>>> = p
        .iter()
        .map(|form| {
            if form.is_zero() {
                Some(vec![0; d + 1])
            } else {
                form.coeffs().iter().map(|c| modp::reduce(c, i)).collect()
            }
        })
        .collect();
    if let Some(pc) = reduced {
        if ideal_is_full(&pc, d)? {
            return Ok(Injectivity::Proved);
        }
    }
    sampled(&p)
}

fn antisymmetric_forms(np: usize) -> Vec<Vec<Vec<i64>>> {
    let pairs: Vec<(usize, usize)> = (0..np).flat_map(|a| (a + 1..np).map(move |b| (a, b))).collect();
    if pairs.len() <= 6 {
        return pairs
            .iter()
            .map(|&(a, b)| {
                let mut m = vec![vec![0; np]; np];
                m[a][b] = 1;
                m[b][a] = -1;
                m
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x51ab);
    (0..6)
        .map(|_| {
            let mut m = vec![vec![0; np]; np];
            for &(a, b) in &pairs {
                let v = rng.gen_range(-5..=5);
                m[a][b] = v;
                m[b][a] = -v;
            }
            m
        })
        .collect()
}

fn ideal_is_full(pc: &[Vec<u64>], d: usize) -> Result<bool> {
    let p = modp::P;
    let mulp = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let reduce_i = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut gs = Vec::new();
    for a in antisymmetric_forms(pc.len()) {
        // H[x][y] = Σ P[i][x]·A[i][j]·P[j][y]
        let mut h = vec![vec![0u64; d + 1]; d + 1];
        for (ii, row) in a.iter().enumerate() {
            for (jj, &aij) in row.iter().enumerate() {
                if aij == 0 {
                    continue;
                }
                let c = reduce_i(aij);
                for x in 0..=d {
                    let px = mulp(pc[ii][x], c);
                    if px == 0 {
                        continue;
                    }
                    for y in 0..=d {
                        h[x][y] = (h[x][y] + mulp(px, pc[jj][y])) % p;
                    }
                }
            }
        }
        // H = (s0·t1 − s1·t0)·G, i.e. H[x][y] = G[x][y−1] − G[x−1][y].
        let mut g = vec![vec![0u64; d]; d];
        for x in 0..d {
            for y in 1..=d {
                let prev = if x > 0 && y < d { g[x - 1][y] } else { 0 };
                g[x][y - 1] = (h[x][y] + prev) % p;
            }
        }
        for x in 0..=d {
            for y in 0..=d {
                let a = if x < d && y >= 1 { g[x][y - 1] } else { 0 };
                let b = if x >= 1 && y < d { g[x - 1][y] } else { 0 };
                if (a + p - b) % p != h[x][y] {
                    return Err(Error::internal("antisymmetric Plücker form is not divisible by the diagonal"));
                }
            }
        }
        gs.push(g);
    }
    let gdeg = d - 1;
    let mut n = gdeg;
    while (n + 1) * (n + 1) <= MAX_MONOMIALS && n <= 3 * d + 2 {
        let side = n + 1;
        let shift = n - gdeg;
        let mut rows = Vec::new();
        for g in &gs {
            for al in 0..=shift {
                for be in 0..=shift {
                    let mut row = vec![0u64; side * side];
                    for (x, gx) in g.iter().enumerate() {
                        for (y, &v) in gx.iter().enumerate() {
                            row[(x + al) * side + (y + be)] = v;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        if rows.len() >= side * side && modp::rank(rows, side * side) == side * side {
            return Ok(true);
        }
        n += 1;
    }
    Ok(false)
}

fn sampled(p: &[BinaryForm]) -> Result<Injectivity> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e);
    let point = |rng: &mut ChaCha8Rng| {
        let re = rng.gen_range(-40..=40);
        let im = rng.gen_range(-40..=40);
        let den = rng.gen_range(1..=7);
        Scalar::from_parts((re, den), (im, den))
    };
    let eval = |t: &Scalar| p.iter().map(|f| f.eval(&Scalar::one(), t)).collect::<Vec<_>>();
    for _ in 0..SAMPLE_PAIRS {
        let s = point(&mut rng);
        let mut t = point(&mut rng);
        while t == s {
            t = point(&mut rng);
        }
        let m = Matrix::from_cols(&[eval(&s), eval(&t)], p.len());
        if m.rank() < 2 {
            return Ok(Injectivity::Fails("two distinct points have the same fiber".into()));
        }
    }
    Ok(Injectivity::Sampled)
}
