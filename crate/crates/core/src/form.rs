//! Homogeneous binary forms in `(z0, z1)` over ℚ(i).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A homogeneous form of fixed degree `d`.
///
/// `coeffs[a]` is the coefficient of `z0^(d-a) · z1^a`. The degree is part of
/// the value even for the zero form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, coeffs: vec![Scalar::zero(); degree + 1] }
    }

    pub fn constant(c: Scalar) -> Self {
        BinaryForm { degree: 0, coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { degree: coeffs.len() - 1, coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// `c · z0^(degree-a) z1^a`.
    pub fn monomial(degree: usize, a: usize, c: Scalar) -> Self {
        let mut f = BinaryForm::zero(degree);
        f.coeffs[a] = c;
        f
    }

    pub fn z0() -> Self {
        BinaryForm::from_ints(&[1, 0])
    }

    pub fn z1() -> Self {
        BinaryForm::from_ints(&[0, 1])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &Scalar {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn conj(&self) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(Scalar::conj).collect() }
    }

    /// Sum of two forms. A zero form of another degree is absorbed; two nonzero
    /// forms of different degrees have no homogeneous sum.
    pub fn try_add(&self, rhs: &BinaryForm) -> Option<BinaryForm> {
        if self.degree != rhs.degree {
            return if rhs.is_zero() {
                Some(self.clone())
            } else if self.is_zero() {
                Some(rhs.clone())
            } else {
                None
            };
        }
        Some(BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn add(&self, rhs: &BinaryForm) -> BinaryForm {
        self.try_add(rhs).expect("adding forms of different degrees")
    }

    pub fn sub(&self, rhs: &BinaryForm) -> BinaryForm {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = BinaryForm::zero(self.degree + rhs.degree);
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out.coeffs[a + b] += &(x * y);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        let mut acc = BinaryForm::constant(Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, z0: &Scalar, z1: &Scalar) -> Scalar {
        // Horner in z1/z0 would need a division; accumulate powers instead.
        let d = self.degree;
        let mut p0 = vec![Scalar::one(); d + 1];
        let mut p1 = vec![Scalar::one(); d + 1];
        for k in 1..=d {
            p0[k] = &p0[k - 1] * z0;
            p1[k] = &p1[k - 1] * z1;
        }
        let mut acc = Scalar::zero();
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&(c * &p0[d - a]) * &p1[a]);
            }
        }
        acc
    }

    /// `σ*p(z0, z1) = p̄(−z1, z0)`: conjugate the coefficients and substitute
    /// the antipodal lift. Applying it twice multiplies by `(−1)^d`.
    pub fn antipodal_transform(&self) -> BinaryForm {
        let d = self.degree;
        let mut out = BinaryForm::zero(d);
        // z0^(d-a) z1^a ↦ (−z1)^(d-a) z0^a = (−1)^(d-a) z0^a z1^(d-a)
        for (a, c) in self.coeffs.iter().enumerate() {
            let c = c.conj();
            out.coeffs[d - a] = if (d - a) % 2 == 1 { -c } else { c };
        }
        out
    }

    /// Partial derivative in `z0` (degree drops by one; degree 0 gives degree 0 zero).
    pub fn d0(&self) -> BinaryForm {
        if self.degree == 0 {
            return BinaryForm::zero(0);
        }
        let d = self.degree;
        let coeffs = (0..d)
            .map(|a| &self.coeffs[a] * &Scalar::from_int((d - a) as i64))
            .collect();
        BinaryForm { degree: d - 1, coeffs }
    }

    pub fn d1(&self) -> BinaryForm {
        if self.degree == 0 {
            return BinaryForm::zero(0);
        }
        let d = self.degree;
        let coeffs = (0..d)
            .map(|a| &self.coeffs[a + 1] * &Scalar::from_int((a + 1) as i64))
            .collect();
        BinaryForm { degree: d - 1, coeffs }
    }

    /// Multiplies by the monomial `z0^(e-a) z1^a`.
    pub fn shift(&self, e: usize, a: usize) -> BinaryForm {
        let mut out = BinaryForm::zero(self.degree + e);
        for (b, c) in self.coeffs.iter().enumerate() {
            out.coeffs[a + b] = c.clone();
        }
        out
    }

    /// `p(t00·z0 + t01·z1, t10·z0 + t11·z1)` for a 2×2 matrix `t`.
    pub fn substitute(&self, t: &Matrix) -> BinaryForm {
        let l0 = BinaryForm::from_coeffs(vec![t[(0, 0)].clone(), t[(0, 1)].clone()]);
        let l1 = BinaryForm::from_coeffs(vec![t[(1, 0)].clone(), t[(1, 1)].clone()]);
        let d = self.degree;
        let mut out = BinaryForm::zero(d);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = l0.pow(d - a).mul(&l1.pow(a)).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Coefficients of `p(1, t)` in increasing powers of `t`.
    pub fn dehomogenize(&self) -> Vec<Scalar> {
        self.coeffs.clone()
    }

    /// Parses with an optional expected degree, which fixes the degree of a
    /// bare `0` and is checked otherwise.
    pub fn parse_with_degree(s: &str, expected: Option<usize>) -> Result<BinaryForm> {
        let f = Parser::new(s).parse()?;
        match (f, expected) {
            (None, Some(d)) => Ok(BinaryForm::zero(d)),
            (None, None) => Ok(BinaryForm::zero(0)),
            (Some(f), Some(d)) if f.degree != d => {
                if f.is_zero() {
                    Ok(BinaryForm::zero(d))
                } else {
                    Err(Error::Parse {
                        input: s.to_string(),
                        position: 0,
                        message: format!("expected a form of degree {d}, found degree {}", f.degree),
                    })
                }
            }
            (Some(f), _) => Ok(f),
        }
    }
}

impl FromStr for BinaryForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BinaryForm::parse_with_degree(s, None)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, chars: src.chars().collect(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { input: self.src.to_string(), position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// Returns `None` for an expression without any monomial degree information
    /// that evaluates to zero (e.g. a bare `0`).
    fn parse(mut self) -> Result<Option<BinaryForm>> {
        let mut acc: Option<BinaryForm> = None;
        let mut first = true;
        let mut saw_zero_constant = false;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
            };
            first = false;
            let (coef, deg0, deg1, explicit) = self.term()?;
            let coef = if sign < 0 { -coef } else { coef };
            if !explicit && coef.is_zero() {
                saw_zero_constant = true;
                continue;
            }
            let degree = deg0 + deg1;
            let term = BinaryForm::monomial(degree, deg1, coef);
            acc = Some(match acc {
                None => term,
                Some(prev) => {
                    if prev.degree != degree {
                        return Err(self.err(format!(
                            "inhomogeneous polynomial: degrees {} and {degree}",
                            prev.degree
                        )));
                    }
                    prev.add(&term)
                }
            });
        }
        let _ = saw_zero_constant;
        Ok(acc)
    }

    /// One product of factors. Returns (coefficient, z0 exponent, z1 exponent,
    /// whether any variable appeared).
    fn term(&mut self) -> Result<(Scalar, usize, usize, bool)> {
        let mut coef = Scalar::one();
        let mut e0 = 0;
        let mut e1 = 0;
        let mut explicit = false;
        loop {
            match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let start = self.pos;
                    let mut depth = 1;
                    while self.pos < self.chars.len() {
                        match self.chars[self.pos] {
                            '(' => depth += 1,
                            ')' => {
                                depth -= 1;
                                if depth == 0 {
                                    break;
                                }
                            }
                            _ => {}
                        }
                        self.pos += 1;
                    }
                    if self.pos >= self.chars.len() {
                        return Err(self.err("unbalanced parenthesis"));
                    }
                    let inner: String = self.chars[start..self.pos].iter().collect();
                    self.pos += 1;
                    let c: Scalar = inner.parse().map_err(|_| {
                        self.err(format!("invalid coefficient {inner:?}"))
                    })?;
                    coef = &coef * &c;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits();
                    let mut text = num;
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den = self.digits();
                        if den.is_empty() {
                            return Err(self.err("missing denominator"));
                        }
                        text = format!("{text}/{den}");
                    }
                    let c: Scalar =
                        text.parse().map_err(|_| self.err(format!("invalid number {text:?}")))?;
                    coef = &coef * &c;
                }
                Some('i') => {
                    self.pos += 1;
                    coef = &coef * &Scalar::i();
                }
                Some('z') => {
                    self.pos += 1;
                    let var = match self.chars.get(self.pos) {
                        Some('0') => 0,
                        Some('1') => 1,
                        _ => return Err(self.err("expected z0 or z1")),
                    };
                    self.pos += 1;
                    let mut exp = 1usize;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        let d = self.digits();
                        exp = d.parse().map_err(|_| self.err("expected exponent"))?;
                    }
                    if var == 0 {
                        e0 += exp;
                    } else {
                        e1 += exp;
                    }
                    explicit = true;
                }
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
                None => return Err(self.err("unexpected end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
                continue;
            }
            break;
        }
        Ok((coef, e0, e1, explicit))
    }
}

fn monomial_text(d: usize, a: usize) -> String {
    let mut parts = Vec::new();
    match d - a {
        0 => {}
        1 => parts.push("z0".to_string()),
        e => parts.push(format!("z0^{e}")),
    }
    match a {
        0 => {}
        1 => parts.push("z1".to_string()),
        e => parts.push(format!("z1^{e}")),
    }
    parts.join("*")
}

/// Renders in the same syntax the parser accepts. The zero form of degree `d`
/// prints as `0*z0^d` so that its degree survives a round trip.
impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        if self.is_zero() {
            return match d {
                0 => write!(f, "0"),
                1 => write!(f, "0*z0"),
                _ => write!(f, "0*z0^{d}"),
            };
        }
        let mut first = true;
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_real() && c.re() < &num_rational::BigRational::from_integer(0.into());
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let mono = monomial_text(d, a);
            let coef_text = if mag.is_real() && mag.re().is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coef_text}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coef_text}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- univariate helpers over ℚ(i), coefficients low → high ----

fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
}

fn poly_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv();
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] * &lead_inv;
        for (j, c) in b.iter().enumerate() {
            let d = &f * c;
            r[k - db + j] -= &d;
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd of univariate polynomials; empty vector means the zero polynomial.
pub fn univariate_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        let inv = lead.inv();
        for c in &mut x {
            *c = &*c * &inv;
        }
    }
    x
}

/// True iff the forms share a zero on the projective line. Zero forms vanish
/// everywhere, so a list of only zero forms has common zeros.
pub fn have_common_zero(forms: &[BinaryForm]) -> bool {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return true;
    }
    // [0:1] is a zero of p exactly when the z1^d coefficient vanishes.
    if nonzero.iter().all(|f| f.coeffs[f.degree].is_zero()) {
        return true;
    }
    let mut g: Vec<Scalar> = Vec::new();
    for f in nonzero {
        g = univariate_gcd(&g, &f.dehomogenize());
        if g.len() <= 1 {
            return false;
        }
    }
    g.len() > 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> BinaryForm {
        s.parse().unwrap()
    }

    #[test]
    fn antipodal_examples() {
        assert_eq!(f("z0").antipodal_transform(), f("-z1"));
        assert_eq!(f("z0^2 + z1^2").antipodal_transform(), f("z0^2 + z1^2"));
        let p = f("z0*z1");
        assert_eq!(p.antipodal_transform(), f("-z0*z1"));
        assert_eq!(p.antipodal_transform().antipodal_transform(), p);
        let q = f("(0+1*i)*z0^3 + 2*z1^3");
        assert_eq!(q.antipodal_transform().antipodal_transform(), q.neg());
    }

    #[test]
    fn parses_spec_text_form() {
        let p = f("(1/2)*z0^2 - z0*z1 + (0+1*i)*z1^2");
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(0), &Scalar::from_frac(1, 2));
        assert_eq!(p.coeff(1), &Scalar::from_int(-1));
        assert_eq!(p.coeff(2), &Scalar::i());
        assert_eq!(f(&p.to_string()), p);
    }

    #[test]
    fn zero_forms_keep_degree() {
        let z = BinaryForm::zero(3);
        assert_eq!(z.to_string(), "0*z0^3");
        assert_eq!(f(&z.to_string()), z);
        assert_eq!(BinaryForm::parse_with_degree("0", Some(2)).unwrap(), BinaryForm::zero(2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["z2", "z0 + z0^2", "z0 +", "(1/0)*z0", "z0 ^", "3 $ z1", ""] {
            assert!(bad.parse::<BinaryForm>().is_err(), "{bad}");
        }
    }

    #[test]
    fn euler_relation() {
        let p = f("3*z0^3 - z0^2*z1 + (2+i)*z1^3");
        let lhs = p.scale(&Scalar::from_int(3));
        let rhs = BinaryForm::z0().mul(&p.d0()).add(&BinaryForm::z1().mul(&p.d1()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_and_eval_agree() {
        let p = f("z0^2 - 3*z0*z1 + (1/2)*z1^2");
        let t = Matrix::from_ints(&[&[1, 2], &[-1, 3]]);
        let q = p.substitute(&t);
        let (a, b) = (Scalar::from_int(2), Scalar::from_int(-5));
        let w0 = &(&a * &Scalar::from_int(1)) + &(&b * &Scalar::from_int(2));
        let w1 = &(&a * &Scalar::from_int(-1)) + &(&b * &Scalar::from_int(3));
        assert_eq!(q.eval(&a, &b), p.eval(&w0, &w1));
    }

    #[test]
    fn common_zero_detection() {
        assert!(have_common_zero(&[f("z0^2"), f("z0*z1")]));
        assert!(!have_common_zero(&[f("z0"), f("z1")]));
        assert!(have_common_zero(&[f("z0*z1 - z1^2"), f("z0^2 - z1^2")]));
        assert!(have_common_zero(&[f("z1^2"), f("z0*z1")]));
        assert!(!have_common_zero(&[f("z0^2 + z1^2"), f("z0*z1")]));
    }
}
