//! Integer Laurent polynomials in one variable `t`.

use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `Σ coeffs[i] · t^(low + i)`, kept trimmed: no zero coefficient at either end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(0, vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// Polynomial with lowest exponent `low`.
    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() { 0 } else { self.low + lead as i64 };
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        usize::try_from(k - self.low)
            .ok()
            .and_then(|i| self.coeffs.get(i).copied())
            .unwrap_or(0)
    }

    /// Coefficients from the lowest to the highest degree.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Value at an integer point; negative exponents need `t = ±1`.
    pub fn eval_unit(&self, t: i64) -> i64 {
        assert!(t == 1 || t == -1, "evaluation of a Laurent polynomial needs a unit");
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if t == -1 && (self.low + i as i64) % 2 != 0 { -c } else { c })
            .sum()
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.low == -self.high_degree() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Representative of the class of `self` under multiplication by `±t^k`:
    /// exponents centred on zero (rounded down when the span is odd), then
    /// the sign chosen so that `Δ(1) = 1`, or the top coefficient positive
    /// when `Δ(1) = 0`.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let span = self.coeffs.len() as i64 - 1;
        let centred = LaurentPoly { low: -(span / 2) - span % 2, coeffs: self.coeffs.clone() };
        let at_one = centred.eval_unit(1);
        let flip = if at_one != 0 { at_one < 0 } else { *centred.coeffs.last().unwrap() < 0 };
        if flip {
            -centred
        } else {
            centred
        }
    }

    /// Equality up to multiplication by a unit `±t^k`.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        let coeffs = (low..=high).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect();
        LaurentPoly::new(low, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let k = self.low + i as i64;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    match k {
                        1 => f.write_str("t")?,
                        _ => write!(f, "t^{k}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(low, c.to_vec())
    }

    #[test]
    fn trimming() {
        let q = p(-2, &[0, 0, 1, 0]);
        assert_eq!((q.low_degree(), q.high_degree()), (0, 0));
        assert!(p(3, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(0, &[1, -1]); // 1 - t
        let b = p(0, &[1, 1]); // 1 + t
        assert_eq!(&a * &b, p(0, &[1, 0, -1]));
        assert_eq!(&a + &b, LaurentPoly::constant(2));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&LaurentPoly::monomial(1, -1) * &LaurentPoly::monomial(1, 1), LaurentPoly::constant(1));
    }

    #[test]
    fn normalization() {
        let trefoil = p(0, &[1, -1, 1]);
        let n = trefoil.normalized();
        assert_eq!(n, p(-1, &[1, -1, 1]));
        assert!(n.is_symmetric());
        assert_eq!(n.eval_unit(1), 1);
        assert!(p(5, &[-1, 1, -1]).equivalent(&trefoil));
        let fig8 = p(0, &[1, -3, 1]);
        assert_eq!(fig8.normalized(), p(-1, &[-1, 3, -1]));
        assert_eq!(LaurentPoly::constant(-1).normalized(), LaurentPoly::constant(1));
        assert!(!trefoil.equivalent(&fig8));
    }

    #[test]
    fn evaluation() {
        let q = p(-1, &[-1, 3, -1]);
        assert_eq!(q.eval_unit(1), 1);
        assert_eq!(q.eval_unit(-1), 5);
    }

    #[test]
    fn display() {
        assert_eq!(p(-1, &[-1, 3, -1]).to_string(), "-t + 3 - t^-1");
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(0, &[-2, 0, 0, 5]).to_string(), "5t^3 - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
