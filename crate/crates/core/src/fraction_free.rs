//! Fraction-free elimination over the Gaussian integers.
//!
//! Rows are cleared of denominators first; Bareiss updates keep every entry
//! a minor of the input, so sizes grow linearly and no gcds are taken.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Division known to be exact.
    fn div_exact(&self, o: &GaussInt) -> GaussInt {
        if o.im.is_zero() {
            if o.re.is_one() {
                return self.clone();
            }
            return GaussInt { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        let norm = &o.re * &o.re + &o.im * &o.im;
        let num = self.mul(&GaussInt { re: o.re.clone(), im: -&o.im });
        debug_assert!((&num.re % &norm).is_zero() && (&num.im % &norm).is_zero());
        GaussInt { re: num.re / &norm, im: num.im / &norm }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

fn integer_rows(rows: &[&[Scalar]]) -> Vec<Vec<GaussInt>> {
    rows.iter()
        .map(|row| {
            let den = row
                .iter()
                .flat_map(|x| [x.re(), x.im()])
                .filter(|q| !q.is_zero())
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|x| GaussInt {
                    re: x.re().numer() * (&den / x.re().denom()),
                    im: x.im().numer() * (&den / x.im().denom()),
                })
                .collect()
        })
        .collect()
}

/// Bareiss elimination; with `full` also clears above each pivot, after
/// which every pivot entry equals the last pivot.
fn eliminate(m: &mut [Vec<GaussInt>], cols: usize, full: bool) -> (Vec<usize>, GaussInt) {
    let mut prev = GaussInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        let pv = pivot_row[c].clone();
        let targets: Vec<usize> = if full { (0..m.len()).filter(|&i| i != r).collect() } else { (r + 1..m.len()).collect() };
        for i in targets {
            let f = m[i][c].clone();
            let row = &mut m[i];
            for j in 0..cols {
                let keep = row[j].mul(&pv);
                let value = if f.is_zero() || pivot_row[j].is_zero() { keep } else { keep.sub(&f.mul(&pivot_row[j])) };
                row[j] = value.div_exact(&prev);
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    (pivots, prev)
}

pub(crate) fn rank(rows: &[&[Scalar]], cols: usize) -> usize {
    let mut m = integer_rows(rows);
    eliminate(&mut m, cols, false).0.len()
}

/// Kernel basis with Gaussian-integer entries: one vector per free column.
pub(crate) fn kernel(rows: &[&[Scalar]], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m = integer_rows(rows);
    let (pivots, d) = eliminate(&mut m, cols, true);
    let d = d.to_scalar();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = d.clone();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][f].to_scalar();
            }
            crate::scalar::make_primitive(&mut v);
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let a = GaussInt { re: BigInt::from(3), im: BigInt::from(4) };
        let b = GaussInt { re: BigInt::from(1), im: BigInt::from(2) };
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }

    #[test]
    fn kernel_of_a_rank_deficient_matrix() {
        let rows = [
            vec![Scalar::from_int(1), Scalar::from_frac(1, 2), Scalar::i()],
            vec![Scalar::from_int(2), Scalar::from_int(1), Scalar::from_parts((0, 1), (2, 1))],
        ];
        let refs: Vec<&[Scalar]> = rows.iter().map(Vec::as_slice).collect();
        assert_eq!(rank(&refs, 3), 1);
        let k = kernel(&refs, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &rows {
                let s = row.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
                assert!(s.is_zero());
            }
        }
    }
}
