use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Laurent polynomial in `x` with integer coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds `Σ c · x^e` from `(c, e)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, i32)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient of `x⁰`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    /// `self += a · b`, without building the product separately.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for (&ea, ca) in &a.terms {
            for (&eb, cb) in &b.terms {
                self.add_term(ea + eb, ca * cb);
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            let sep = if i > 0 { " " } else { "" };
            let gap = if i > 0 { " " } else { "" };
            match e {
                0 => write!(f, "{sep}{sign}{gap}{mag}")?,
                _ => {
                    let coef = if mag == BigInt::from(1) {
                        String::new()
                    } else {
                        format!("{mag}*")
                    };
                    let pow = if e == 1 { "x".to_string() } else { format!("x^{e}") };
                    write!(f, "{sep}{sign}{gap}{coef}{pow}")?
                }
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in `x` and `y`, used for exact kernel identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiLaurent {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl BiLaurent {
    /// Builds `Σ c · x^a y^b` from `(c, a, b)` triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, i32, i32)>>(terms: I) -> Self {
        let mut p = BiLaurent::default();
        for (c, a, b) in terms {
            let slot = p.terms.entry((a, b)).or_default();
            *slot += c;
        }
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Substitutes monomials for the variables: `x ↦ x^{xa} y^{xb}` and
    /// `y ↦ x^{ya} y^{yb}`, then multiplies by `x^{ma} y^{mb}`.
    pub fn substitute(&self, x_to: (i32, i32), y_to: (i32, i32), times: (i32, i32)) -> Self {
        let mut out = BTreeMap::<(i32, i32), BigInt>::new();
        for (&(a, b), c) in &self.terms {
            let key = (a * x_to.0 + b * y_to.0 + times.0, a * x_to.1 + b * y_to.1 + times.1);
            *out.entry(key).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        BiLaurent { terms: out }
    }
}
