use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::laurent::LaurentPoly;

/// Power series in `t²` over [`LaurentPoly`], truncated after `t^order`.
///
/// Coefficient `m` of the vector holds `[t^{2m}]`. The order is a
/// t-exponent and always even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Result<Self> {
        if order % 2 == 1 {
            return Err(Error::Precondition(format!("series order {order} must be even")));
        }
        Ok(TruncatedSeries {
            order,
            coeffs: vec![LaurentPoly::zero(); order / 2 + 1],
        })
    }

    /// The constant series `p`.
    pub fn constant(p: LaurentPoly, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        s.coeffs[0] = p;
        Ok(s)
    }

    pub(crate) fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        TruncatedSeries {
            order: 2 * (coeffs.len() - 1),
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `[t^e]`; zero for odd `e` or beyond the order.
    pub fn coeff_t(&self, e: usize) -> LaurentPoly {
        if e % 2 == 1 {
            return LaurentPoly::zero();
        }
        self.coeffs.get(e / 2).cloned().unwrap_or_default()
    }

    /// `[t^{2m}]`.
    pub fn coeff_t2(&self, m: usize) -> &LaurentPoly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Multiplies every coefficient by the Laurent polynomial `p`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies by `t^{2s}`, dropping what falls beyond the order.
    pub fn shift_t2(&self, s: usize) -> Self {
        let len = self.coeffs.len();
        let mut coeffs = vec![LaurentPoly::zero(); s.min(len)];
        coeffs.extend(self.coeffs.iter().take(len.saturating_sub(s)).cloned());
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(LaurentPoly::one(), self.order).expect("even order");
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_order(&self, other: &TruncatedSeries) {
        assert_eq!(self.order, other.order, "series orders differ");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let len = self.coeffs.len();
        let mut coeffs = vec![LaurentPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..len - i].iter().enumerate() {
                coeffs[i + j].add_product(a, b);
            }
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_product() {
        // (1 + t²)² = 1 + 2t² + t⁴, cut at t²
        let mut s = TruncatedSeries::constant(LaurentPoly::one(), 2).unwrap();
        s = &s + &s.shift_t2(1);
        let sq = &s * &s;
        assert_eq!(sq.coeff_t(0), LaurentPoly::one());
        assert_eq!(sq.coeff_t(2), LaurentPoly::monomial(2, 0));
        assert!(sq.coeff_t(4).is_zero());
        assert_eq!(s.pow(3).coeff_t(2), LaurentPoly::monomial(3, 0));
    }

    #[test]
    fn odd_order_rejected() {
        assert!(TruncatedSeries::zero(5).is_err());
    }
}
