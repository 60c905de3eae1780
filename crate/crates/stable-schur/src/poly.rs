//! Dense univariate polynomials with exact coefficients: rational ones for
//! dimension formulas and Hilbert polynomials, integer ones for numerators
//! of rational generating series, plus the binomial helpers that connect an
//! integer-valued polynomial to its generating series.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Polynomial with rational coefficients, constant term first, trailing
/// zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly { coeffs: vec![c] }.trimmed()
    }

    /// The polynomial `t + c`.
    pub fn linear(c: i64) -> Self {
        QPoly {
            coeffs: vec![q_int(c), BigRational::one()],
        }
    }

    pub fn from_rational_coeffs(coeffs: Vec<BigRational>) -> Self {
        QPoly { coeffs }.trimmed()
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        QPoly {
            coeffs: coeffs.iter().map(|&c| q_int(c)).collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        QPoly { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        QPoly { coeffs }.trimmed()
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly { coeffs }.trimmed()
    }

    pub fn scale(&self, factor: &BigRational) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
        .trimmed()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&q_int(n))
    }

    /// Substitute `a * t` for `t`.
    pub fn compose_scale(&self, a: i64) -> QPoly {
        let mut power = BigRational::one();
        let factor = q_int(a);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &power;
                power *= &factor;
                out
            })
            .collect();
        QPoly { coeffs }.trimmed()
    }

    /// Coefficients `c_j` of the expansion `p(n) = sum_j c_j * C(n, j)`:
    /// forward differences of `p` at 0. The polynomial takes integer values
    /// on all integers exactly when every `c_j` is an integer.
    pub fn newton_coefficients(&self) -> Vec<BigRational> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let mut row: Vec<BigRational> = (0..=d as i64).map(|n| self.eval_int(n)).collect();
        let mut out = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            out.push(row[0].clone());
            for k in 0..row.len() - 1 {
                row[k] = &row[k + 1] - &row[k];
            }
            row.pop();
        }
        out
    }

    /// Newton coefficients as integers, or `None` if the polynomial is not
    /// integer-valued on the integers.
    pub fn integer_newton_coefficients(&self) -> Option<Vec<BigInt>> {
        self.newton_coefficients()
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Render with the given variable name, highest degree first.
    pub fn format_with_var(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let positive = c.is_positive();
            if s.is_empty() {
                if !positive {
                    s.push('-');
                }
            } else {
                s.push_str(if positive { " + " } else { " - " });
            }
            let abs = c.abs();
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                let _ = write!(s, "{abs}");
            }
            if k > 0 {
                if show_coeff {
                    s.push('*');
                }
                let _ = write!(s, "{var}");
                if k > 1 {
                    let _ = write!(s, "^{k}");
                }
            }
        }
        s
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("t"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial with integer coefficients, constant term first, trailing
/// zeros trimmed. Used for numerators of rational series.
#[derive(Clone, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        ZPoly { coeffs }.trimmed()
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        ZPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        ZPoly { coeffs }.trimmed()
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Multiply by `(1 - t)^k`.
    pub fn mul_one_minus_t_pow(&self, k: u32) -> ZPoly {
        let mut out = self.clone();
        for _ in 0..k {
            // (1 - t) * p: coefficient i is p_i - p_{i-1}.
            let mut coeffs = vec![BigInt::zero(); out.coeffs.len() + 1];
            for (i, c) in out.coeffs.iter().enumerate() {
                coeffs[i] += c;
                coeffs[i + 1] -= c;
            }
            out = ZPoly { coeffs }.trimmed();
        }
        out
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`, or `None` when 1 is not a root.
    pub fn div_one_minus_t(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        // (1 - t) q = p with q_i = p_0 + ... + p_i.
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            coeffs.push(acc.clone());
        }
        Some(ZPoly { coeffs }.trimmed())
    }
}

impl ZPoly {
    pub fn format_with_var(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let positive = c.sign() == num_bigint::Sign::Plus;
            if s.is_empty() {
                if !positive {
                    s.push('-');
                }
            } else {
                s.push_str(if positive { " + " } else { " - " });
            }
            let abs = c.magnitude();
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                let _ = write!(s, "{abs}");
            }
            if k > 0 {
                if show_coeff {
                    s.push('*');
                }
                let _ = write!(s, "{var}");
                if k > 1 {
                    let _ = write!(s, "^{k}");
                }
            }
        }
        s
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("t"))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * BigInt::from(n - k + i) / BigInt::from(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_evaluation() {
        let p = QPoly::from_int_coeffs(&[1, 2]); // 1 + 2t
        let q = QPoly::from_int_coeffs(&[0, 0, 3]); // 3t^2
        let r = p.mul(&q).add(&p); // 3t^2(1 + 2t) + 1 + 2t
        assert_eq!(r.eval_int(2).to_integer(), BigInt::from(12 + 24 * 2 + 5));
        assert_eq!(r.degree(), Some(3));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn newton_coefficients_of_triangular_numbers() {
        // p(n) = n(n+1)/2 = C(n,1) + C(n,2)
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = QPoly::from_rational_coeffs(vec![
            BigRational::zero(),
            half.clone(),
            half,
        ]);
        let newton = p.integer_newton_coefficients().unwrap();
        assert_eq!(newton, vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn non_integer_valued_polynomials_are_detected() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let p = QPoly::from_rational_coeffs(vec![BigRational::zero(), third]);
        assert!(p.integer_newton_coefficients().is_none());
    }

    #[test]
    fn compose_scale_doubles_the_argument() {
        let p = QPoly::from_int_coeffs(&[1, 1, 1]); // 1 + t + t^2
        let doubled = p.compose_scale(2); // 1 + 2t + 4t^2
        assert_eq!(doubled.eval_int(3), p.eval_int(6));
    }

    #[test]
    fn series_numerator_division() {
        let p = ZPoly::from_int_coeffs(&[1, -3, 3, -1]); // (1 - t)^3
        let q = p.div_one_minus_t().unwrap();
        assert_eq!(q, ZPoly::from_int_coeffs(&[1, -2, 1]));
        assert!(ZPoly::from_int_coeffs(&[1, 1]).div_one_minus_t().is_none());
        assert_eq!(
            ZPoly::from_int_coeffs(&[1]).mul_one_minus_t_pow(2),
            ZPoly::from_int_coeffs(&[1, -2, 1])
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn display_is_readable() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = QPoly::from_rational_coeffs(vec![
            BigRational::from_integer(BigInt::from(-1)),
            half.clone(),
            half,
        ]);
        assert_eq!(p.to_string(), "1/2*t^2 + 1/2*t - 1");
    }
}
