//! The kernel `K(x, y; t) = xy − t²(x²y + xy² + y + x + x² + y² + 2xy)` and
//! its root `Y₀`, the unique power series in `t²` with
//! `Y₀ = t²(x̄ + 1)(x + Y₀)(1 + Y₀)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::laurent::{BiLaurent, LaurentPoly};
use super::series::TruncatedSeries;

fn poly(terms: &[(i64, i32)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

/// `x̄ + 1`.
fn xbar_plus_one() -> LaurentPoly {
    poly(&[(1, -1), (1, 0)])
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::Precondition(format!(
            "series order {order} must be even and at least 2"
        )));
    }
    Ok(())
}

/// `Y₀` up to `t^order`, one coefficient at a time: the `t^{2m}` coefficient
/// of the fixed-point relation only involves coefficients below `m`.
pub fn y0_series(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let len = order / 2 + 1;
    let factor = xbar_plus_one();
    let one_plus_x = poly(&[(1, 0), (1, 1)]);
    let mut y = vec![LaurentPoly::zero(); len];
    for m in 1..len {
        let mut inner = if m == 1 {
            LaurentPoly::monomial(1, 1)
        } else {
            LaurentPoly::zero()
        };
        inner.add_product(&one_plus_x, &y[m - 1]);
        for a in 1..m - 1 {
            inner.add_product(&y[a], &y[m - 1 - a]);
        }
        y[m] = &factor * &inner;
    }
    Ok(TruncatedSeries::from_coeffs(y))
}

/// `Y₀` by plain iteration of `Y ← t²(x̄ + 1)(x + Y)(1 + Y)` from `0`; the
/// `t^{2m}` coefficient is final after `m` rounds. Slow; used as a check.
pub fn y0_series_naive(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let x = TruncatedSeries::constant(LaurentPoly::monomial(1, 1), order)?;
    let one = TruncatedSeries::constant(LaurentPoly::one(), order)?;
    let mut y = TruncatedSeries::zero(order)?;
    for _ in 0..order / 2 {
        y = (&(&x + &y) * &(&one + &y)).scale(&xbar_plus_one()).shift_t2(1);
    }
    Ok(y)
}

/// Kernel monomials `(coefficient, t-exponent, x-exponent, y-exponent)`.
const KERNEL: [(i64, usize, i32, u32); 8] = [
    (1, 0, 1, 1),
    (-1, 2, 2, 1),
    (-1, 2, 1, 2),
    (-1, 2, 0, 1),
    (-1, 2, 1, 0),
    (-1, 2, 2, 0),
    (-1, 2, 0, 2),
    (-2, 2, 1, 1),
];

/// `D² · K(x, N/D; t)` for series `N` and `D`; the kernel has degree two in `y`.
pub fn kernel_homogenized(num: &TruncatedSeries, den: &TruncatedSeries) -> TruncatedSeries {
    let order = num.order();
    let num_pows = [num.pow(0), num.clone(), num.pow(2)];
    let den_pows = [den.pow(0), den.clone(), den.pow(2)];
    let mut total = TruncatedSeries::zero(order).expect("even order");
    for (c, tp, xe, ye) in KERNEL {
        let term = (&num_pows[ye as usize] * &den_pows[2 - ye as usize])
            .scale(&LaurentPoly::monomial(c, xe))
            .shift_t2(tp / 2);
        total = &total + &term;
    }
    total
}

/// `K(x, Y₀; t)`, which vanishes up to the order of `Y₀`.
pub fn kernel_at_y0(y0: &TruncatedSeries) -> TruncatedSeries {
    let one = TruncatedSeries::constant(LaurentPoly::one(), y0.order()).expect("even order");
    kernel_homogenized(y0, &one)
}

/// The second root `Y₁ = x / Y₀` is not a power series, so it is checked
/// through `Y₀² K(x, x/Y₀) = x K(x, Y₀)`, which makes `Y₁` a root too.
pub fn second_root_residual(y0: &TruncatedSeries) -> TruncatedSeries {
    let x = TruncatedSeries::constant(LaurentPoly::monomial(1, 1), y0.order()).expect("even order");
    let lhs = kernel_homogenized(&x, y0);
    let rhs = kernel_at_y0(y0).scale(&LaurentPoly::monomial(1, 1));
    &lhs - &rhs
}

/// The kernel as bivariate Laurent polynomials, coefficient of `t⁰` and `t²`.
pub fn kernel_bivariate() -> [BiLaurent; 2] {
    let pick = |tp: usize| {
        BiLaurent::from_terms(
            KERNEL
                .iter()
                .filter(|m| m.1 == tp)
                .map(|&(c, _, a, b)| (c, a, b as i32)),
        )
    };
    [pick(0), pick(2)]
}

/// `x²ȳ K(x̄y, y; t) = K(x, y; t) = x³ K(x̄y, x̄; t)`, coefficient by coefficient.
pub fn kernel_symmetry_holds() -> bool {
    kernel_bivariate().iter().all(|k| {
        let first = k.substitute((-1, 1), (0, 1), (2, -1));
        let second = k.substitute((-1, 1), (-1, 0), (3, 0));
        first == *k && second == *k
    })
}

/// Every coefficient of `Y₀` has nonnegative integer coefficients.
pub fn is_positive(y0: &TruncatedSeries) -> bool {
    y0.coeffs().iter().all(LaurentPoly::has_nonnegative_coefficients)
}

/// `[x^m t^{2n+2}] Y₀^k` read off a series of sufficient order.
pub fn series_coefficient(pow: &TruncatedSeries, m: i32, n: usize) -> BigInt {
    pow.coeff_t(2 * n + 2).coeff(m)
}
