//! Reduction of Gaussian rationals modulo a prime `p ≡ 1 (mod 4)`.
//!
//! `ℤ[i] → F_p` with `i ↦ √−1` is a ring map, so a nonzero minor modulo `p`
//! proves the exact minor is nonzero. Used to certify full rank of large
//! matrices cheaply; a rank deficit mod `p` proves nothing.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::scalar::Scalar;

pub const P: u64 = 1_000_000_009;

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % P as u128) as u64;
        }
        b = (b as u128 * b as u128 % P as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn mul(a: u64, b: u64) -> u64 {
    (a as u128 * b as u128 % P as u128) as u64
}

/// A square root of −1 modulo `P`.
pub fn sqrt_minus_one() -> u64 {
    (2..)
        .map(|c| pow(c, (P - 1) / 4))
        .find(|&r| mul(r, r) == P - 1)
        .expect("P is 1 mod 4")
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = m.to_i64().expect("residue fits");
    m.rem_euclid(P as i64) as u64
}

/// Image of `s` in `F_p`, or `None` if a denominator vanishes there.
pub fn reduce(s: &Scalar, i: u64) -> Option<u64> {
    let part = |q: &num_rational::BigRational| {
        let d = reduce_int(q.denom());
        (d != 0).then(|| mul(reduce_int(q.numer()), inv(d)))
    };
    let re = part(s.re())?;
    let im = part(s.im())?;
    Some((re + mul(im, i)) % P)
}

/// Rank of a dense matrix over `F_p`.
pub fn rank(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let iv = inv(rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = mul(*x, iv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = (*x + P - mul(f, y)) % P;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_minus_one() {
        let i = sqrt_minus_one();
        assert_eq!(mul(i, i), P - 1);
        assert_eq!(reduce(&Scalar::i(), i), Some(i));
        assert_eq!(reduce(&Scalar::from_frac(1, 2), i).map(|h| mul(h, 2)), Some(1));
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]], 2), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![3, 4]], 2), 2);
        assert_eq!(rank(vec![], 3), 0);
    }
}
