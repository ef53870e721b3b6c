//! Asymptotics `ρ₃(n) ~ K 8ⁿ n⁻⁷ (1 + c₁/n + c₂/n² + c₃/n³)`.
//!
//! Every quantity is an exact rational; decimals appear only when rendering.
//! The exponent and the corrections are obtained two ways: by solving the
//! linear equations that the ansatz produces order by order, and by
//! expanding the recurrence in `1/n` directly.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// The leading constant as quoted in the literature.
pub const QUOTED_K: &str = "6686.408973";

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a plain decimal such as `-12.5` exactly.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a decimal: {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, fracpart) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && fracpart.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int}{fracpart}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = BigInt::from(10).pow(fracpart.len() as u32);
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10).pow(e)
}

/// Rounds half away from zero to `places` digits after the point.
pub fn to_fixed(r: &BigRational, places: u32) -> String {
    let scaled = r.abs() * BigRational::from_integer(pow10(places));
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let q = if BigInt::from(2) * rem >= *scaled.denom() {
        q + 1
    } else {
        q
    };
    let mut digits = q.to_string();
    if places > 0 {
        if digits.len() <= places as usize {
            digits = format!("{}{digits}", "0".repeat(places as usize + 1 - digits.len()));
        }
        digits.insert(digits.len() - places as usize, '.');
    }
    let negative = r.is_negative() && digits.chars().any(|c| c.is_ascii_digit() && c != '0');
    if negative {
        format!("-{digits}")
    } else {
        digits
    }
}

/// Decimal exponent `e` with `10^e <= |r| < 10^{e+1}`; `r` must be nonzero.
fn decimal_exponent(r: &BigRational) -> i64 {
    let a = r.abs();
    let int = a.to_integer();
    if !int.is_zero() {
        return int.to_string().len() as i64 - 1;
    }
    let mut e = 0;
    let mut x = a;
    while x < BigRational::one() {
        x *= rat(10);
        e -= 1;
    }
    e
}

/// Rounds to `digits` significant figures, rendered in fixed notation.
pub fn to_significant(r: &BigRational, digits: u32) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let e = decimal_exponent(r);
    let places = (digits as i64 - 1 - e).max(0) as u32;
    if places > 0 {
        return to_fixed(r, places);
    }
    // round to a multiple of 10^{e - digits + 1}
    let unit = BigRational::from_integer(pow10((e - digits as i64 + 1) as u32));
    let q = BigRational::from_integer(to_fixed(&(r / &unit), 0).parse().expect("integer string"));
    (q * unit).to_integer().to_string()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Constants of the expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticParams {
    pub lambda: BigRational,
    pub theta: BigRational,
    pub c: [BigRational; 3],
    pub k: BigRational,
}

impl AsymptoticParams {
    /// The same expansion without correction terms.
    pub fn without_corrections(&self) -> Self {
        AsymptoticParams {
            c: [BigRational::zero(), BigRational::zero(), BigRational::zero()],
            ..self.clone()
        }
    }

    pub fn with_k(&self, k: BigRational) -> Self {
        AsymptoticParams { k, ..self.clone() }
    }

    pub fn report(&self) -> ParamsReport {
        ParamsReport {
            lambda: self.lambda.to_string(),
            theta: self.theta.to_string(),
            c1: self.c[0].to_string(),
            c2: self.c[1].to_string(),
            c3: self.c[2].to_string(),
            c1_decimal: to_fixed(&self.c[0], 6),
            c2_decimal: to_fixed(&self.c[1], 6),
            c3_decimal: to_fixed(&self.c[2], 6),
            k: to_significant(&self.k, 10),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamsReport {
    pub lambda: String,
    pub theta: String,
    pub c1: String,
    pub c2: String,
    pub c3: String,
    pub c1_decimal: String,
    pub c2_decimal: String,
    pub c3_decimal: String,
    pub k: String,
}

/// `P(X) = 1 + (15/8)X + (3/4)X² − (1/8)X³`.
pub fn characteristic_polynomial(x: &BigRational) -> BigRational {
    rat(1) + frac(15, 8) * x + frac(3, 4) * x * x - frac(1, 8) * x * x * x
}

/// Rational roots of the characteristic polynomial: after scaling by `−8`
/// it is monic with constant term `−8`, so they are integer divisors of 8.
pub fn characteristic_roots() -> Vec<BigRational> {
    let mut roots: Vec<BigRational> = [1i64, 2, 4, 8]
        .iter()
        .flat_map(|&d| [rat(d), rat(-d)])
        .filter(|x| characteristic_polynomial(x).is_zero())
        .collect();
    roots.sort();
    roots
}

/// Root of an affine function `f`, found from `f(0)` and `f(1)`.
fn solve_affine(f: impl Fn(&BigRational) -> BigRational) -> BigRational {
    let f0 = f(&BigRational::zero());
    let slope = f(&BigRational::one()) - &f0;
    assert!(!slope.is_zero(), "equation does not involve the unknown");
    -f0 / slope
}

/// Solves the order-by-order equations of the ansatz: the dominant root
/// `λ`, then `θ` from
/// `8·(15/8)(θ+27/5) + 8²·(3/4)(21/2+2θ) − 8³·(1/8)(18+3θ) = 0`,
/// then `2268 + 81c₁ = 0`, `1683c₁ + 162c₂ − 26712 = 0` and
/// `−32547c₁ + 729c₂ + 129654 + 243c₃ = 0`.
pub fn characteristic_analysis() -> AsymptoticParams {
    let lambda = characteristic_roots()
        .into_iter()
        .max_by(|a, b| a.abs().cmp(&b.abs()))
        .expect("the characteristic polynomial has rational roots");
    let l = lambda.clone();
    let theta = solve_affine(|t| {
        &l * frac(15, 8) * (t + frac(27, 5)) + &l * &l * frac(3, 4) * (frac(21, 2) + rat(2) * t)
            - &l * &l * &l * frac(1, 8) * (rat(18) + rat(3) * t)
    });
    let c1 = solve_affine(|c| rat(2268) + rat(81) * c);
    let c2 = solve_affine(|c| rat(1683) * &c1 + rat(162) * c - rat(26712));
    let c3 = solve_affine(|c| rat(-32547) * &c1 + rat(729) * &c2 + rat(129654) + rat(243) * c);
    AsymptoticParams {
        lambda,
        theta,
        c: [c1, c2, c3],
        k: parse_decimal(QUOTED_K).expect("valid literal"),
    }
}

/// Truncated power series in `e = 1/n` with rational coefficients.
#[derive(Clone, Debug)]
struct ESeries(Vec<BigRational>);

impl ESeries {
    fn poly(coeffs: &[i64], len: usize) -> Self {
        let mut v: Vec<BigRational> = coeffs.iter().map(|&c| rat(c)).collect();
        v.resize(len, BigRational::zero());
        v.truncate(len);
        ESeries(v)
    }

    fn mul(&self, o: &ESeries) -> ESeries {
        let len = self.0.len();
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in o.0[..len - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ESeries(out)
    }

    fn add(&self, o: &ESeries) -> ESeries {
        ESeries(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, c: &BigRational) -> ESeries {
        ESeries(self.0.iter().map(|a| a * c).collect())
    }

    /// `(1 + k e)^θ` by the binomial series.
    fn binomial(k: i64, theta: &BigRational, len: usize) -> ESeries {
        let mut out = Vec::with_capacity(len);
        let mut c = BigRational::one();
        for j in 0..len {
            out.push(c.clone());
            c = c * (theta - rat(j as i64)) / rat(j as i64 + 1) * rat(k);
        }
        ESeries(out)
    }

    /// `1 + Σ c_j u^j` with `u = 1/(n + k) = e/(1 + k e)`.
    fn correction(k: i64, c: &[BigRational], len: usize) -> ESeries {
        let mut u = vec![BigRational::zero(); len];
        for (j, slot) in u.iter_mut().enumerate().skip(1) {
            *slot = rat(-k).pow((j - 1) as u32);
        }
        let u = ESeries(u);
        let mut total = ESeries::poly(&[1], len);
        let mut upow = ESeries::poly(&[1], len);
        for cj in c {
            upow = upow.mul(&u);
            total = total.add(&upow.scale(cj));
        }
        total
    }
}

/// Coefficients of `α₁ … α₄` in decreasing powers of `n`.
const ALPHA_COEFFS: [[i64; 4]; 4] = [
    [8, 48, 88, 48],
    [15, 171, 594, 624],
    [6, 99, 531, 924],
    [1, 24, 191, 504],
];

/// Substitutes `ρ(n) = 8ⁿ n^θ (1 + c₁/n + …)` into the recurrence, divides
/// by `8ⁿ n^{θ+3}` and returns the series in `1/n`.
fn recurrence_residual(theta: &BigRational, c: &[BigRational], len: usize) -> ESeries {
    // α_i(n) / n³ as polynomials in e
    let [a1, a2, a3, a4] = ALPHA_COEFFS.map(|c| ESeries::poly(&c, len));
    let term = |a: &ESeries, shift: i64, weight: i64| {
        a.mul(&ESeries::binomial(shift, theta, len))
            .mul(&ESeries::correction(shift, c, len))
            .scale(&rat(weight))
    };
    term(&a1, 0, 1)
        .add(&term(&a2, 1, 8))
        .add(&term(&a3, 2, 64))
        .add(&term(&a4, 3, -512))
}

/// The exponent and the first `count` corrections, read off the recurrence
/// alone: the `1/n` coefficient of the residual is affine in `θ` and the
/// `1/n^{j+1}` coefficient is affine in `c_j`.
pub fn expansion_from_recurrence(count: usize) -> (BigRational, Vec<BigRational>) {
    let len = count + 2;
    let theta = solve_affine(|t| recurrence_residual(t, &[], len).0[1].clone());
    let mut c: Vec<BigRational> = Vec::new();
    for j in 1..=count {
        let cj = solve_affine(|x| {
            let mut trial = c.clone();
            trial.push(x.clone());
            recurrence_residual(&theta, &trial, len).0[j + 1].clone()
        });
        c.push(cj);
    }
    (theta, c)
}

/// `K λⁿ n^θ (1 + c₁/n + c₂/n² + c₃/n³)`, exactly. `θ` must be an integer.
pub fn asymptotic_estimate(n: usize, p: &AsymptoticParams) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Precondition("the estimate needs n >= 1".into()));
    }
    Ok(&p.k * growth(n, p)? * correction(n, p))
}

fn growth(n: usize, p: &AsymptoticParams) -> Result<BigRational> {
    if !p.theta.is_integer() {
        return Err(Error::Precondition(format!("exponent {} is not an integer", p.theta)));
    }
    let theta = p
        .theta
        .to_integer()
        .to_i32()
        .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
    let nn = rat(n as i64);
    let npow = if theta >= 0 {
        nn.pow(theta)
    } else {
        nn.pow(-theta).recip()
    };
    Ok(p.lambda.clone().pow(n as i32) * npow)
}

fn correction(n: usize, p: &AsymptoticParams) -> BigRational {
    let inv = frac(1, n as i64);
    let mut total = BigRational::one();
    let mut ipow = BigRational::one();
    for c in &p.c {
        ipow *= &inv;
        total += c * &ipow;
    }
    total
}

/// `estimate / exact − 1`.
pub fn relative_error(n: usize, p: &AsymptoticParams, exact: &BigUint) -> Result<BigRational> {
    let exact = BigRational::from_integer(BigInt::from(exact.clone()));
    Ok(asymptotic_estimate(n, p)? / exact - BigRational::one())
}

/// The constant that makes the estimate exact at `n`:
/// `ρ₃(n) λ⁻ⁿ n^{-θ} / (1 + c₁/n + c₂/n² + c₃/n³)`.
pub fn fit_k(n: usize, p: &AsymptoticParams, exact: &BigUint) -> Result<BigRational> {
    if n < 50 {
        return Err(Error::Precondition(format!("fitting K needs n >= 50, got {n}")));
    }
    let exact = BigRational::from_integer(BigInt::from(exact.clone()));
    Ok(exact / (growth(n, p)? * correction(n, p)))
}
