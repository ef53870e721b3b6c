//! Exact routes to `ρ₃(n)`, the number of 3-noncrossing braids over `[n]`
//! without isolated points.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::kernel::y0_series;
use super::laurent::LaurentPoly;
use super::series::TruncatedSeries;

/// Compound steps from `(1, 0)`: E, N, W, S, SE, NW and two distinct stays.
pub const STEPS: [(i64, i64); 8] = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1), (0, 0), (0, 0)];

/// `(a_n, b_n)` for `n = 0..=n_max`: quadrant walks of `n` steps from `(1, 0)`
/// ending at `(1, 0)` and at `(0, 1)`.
pub fn count_walks_table(n_max: usize) -> Vec<(BigUint, BigUint)> {
    let side = n_max + 2;
    let mut grid = vec![vec![BigUint::zero(); side]; side];
    grid[1][0] = BigUint::one();
    let mut out = vec![(grid[1][0].clone(), grid[0][1].clone())];
    for _ in 0..n_max {
        let mut next = vec![vec![BigUint::zero(); side]; side];
        for (i, row) in grid.iter().enumerate() {
            for (j, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (dx, dy) in STEPS {
                    let (a, b) = (i as i64 + dx, j as i64 + dy);
                    if a >= 0 && b >= 0 && (a as usize) < side && (b as usize) < side {
                        next[a as usize][b as usize] += c;
                    }
                }
            }
        }
        grid = next;
        out.push((grid[1][0].clone(), grid[0][1].clone()));
    }
    out
}

pub fn count_walks_dp(n: usize) -> (BigUint, BigUint) {
    count_walks_table(n).pop().expect("table is nonempty")
}

/// `a_n − b_n` for `n = 0..=n_max`, which the reflection principle
/// identifies with `ρ₃(n)`.
pub fn walk_differences(n_max: usize) -> Vec<BigUint> {
    count_walks_table(n_max)
        .into_iter()
        .map(|(a, b)| {
            let d = BigInt::from(a) - BigInt::from(b);
            d.to_biguint().expect("a_n >= b_n")
        })
        .collect()
}

/// The prefactors of `Y₀`, `Y₀²` and `Y₀³` in the constant-term formula.
fn ct_prefactors() -> [LaurentPoly; 3] {
    [
        LaurentPoly::from_terms([(1, 0), (-1, 1), (-1, 4), (1, 3)]),
        LaurentPoly::from_terms([(1, -5), (-1, -4), (-1, -1), (1, -2)]),
        LaurentPoly::from_terms([(-1, -4), (1, -3), (1, 0), (-1, -1)]),
    ]
}

/// `ρ₃(0..=n_max)` as `[t^{2n+2}] CT_x` of a fixed combination of `Y₀`,
/// `Y₀²` and `Y₀³`.
pub fn rho3_kernel_ct_table(n_max: usize) -> Vec<BigUint> {
    let order = 2 * n_max + 2;
    let y = y0_series(order).expect("valid order");
    let y2 = &y * &y;
    let y3 = &y2 * &y;
    let [p1, p2, p3] = ct_prefactors();
    let combo: TruncatedSeries = &(&y.scale(&p1) + &y2.scale(&p2)) + &y3.scale(&p3);
    (0..=n_max)
        .map(|n| {
            combo
                .coeff_t(2 * n + 2)
                .constant_term()
                .to_biguint()
                .expect("counts are nonnegative")
        })
        .collect()
}

pub fn rho3_kernel_ct(n: usize) -> BigUint {
    rho3_kernel_ct_table(n).pop().expect("table is nonempty")
}

fn binom(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `[x^m t^{2n+2}] Y₀^k = (k/(n+1)) Σ_s C(n+1, s) C(n+1, k+s) C(n+1, s+m)`.
///
/// The division must be exact; a remainder is reported as an error.
pub fn coeff_y0_pow(k: u32, m: i64, n: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let big_n = n as u64 + 1;
    let lo = 0.max(-m).max(-(k as i64));
    let sum: BigUint = (lo..=big_n as i64)
        .map(|s| binom(big_n, s) * binom(big_n, k as i64 + s) * binom(big_n, s + m))
        .sum();
    let (q, r) = (sum * k).div_rem(&BigUint::from(big_n));
    if !r.is_zero() {
        return Err(Error::InexactDivision { n });
    }
    Ok(BigInt::from(q))
}

/// `(k, m, sign)` of the twelve terms of the closed form.
const CLOSED_FORM_TERMS: [(u32, i64, i8); 12] = [
    (1, 0, 1),
    (1, -1, -1),
    (1, -4, -1),
    (1, -3, 1),
    (3, 4, -1),
    (3, 3, 1),
    (3, 0, 1),
    (3, 1, -1),
    (2, 5, 1),
    (2, 4, -1),
    (2, 1, -1),
    (2, 2, 1),
];

/// `ρ₃(n)` as a signed sum of twelve binomial triple sums.
pub fn rho3_closed_form(n: usize) -> BigUint {
    let total: BigInt = CLOSED_FORM_TERMS
        .iter()
        .map(|&(k, m, sign)| {
            let c = coeff_y0_pow(k, m, n).expect("the coefficient formula divides exactly");
            if sign < 0 {
                -c
            } else {
                c
            }
        })
        .sum();
    total.to_biguint().expect("closed form is nonnegative")
}

/// Coefficients of `α₁ρ(n) + α₂ρ(n+1) + α₃ρ(n+2) − α₄ρ(n+3) = 0`.
pub fn alphas(n: u64) -> [BigUint; 4] {
    let b = BigUint::from;
    [
        b(8u64) * b(n + 2) * b(n + 3) * b(n + 1),
        b(3u64) * b(n + 2) * (b(5u64) * b(n) * b(n) + b(47 * n) + b(104u64)),
        b(3u64) * b(n + 4) * b(2 * n + 11) * b(n + 7),
        b(n + 9) * b(n + 8) * b(n + 7),
    ]
}

/// Extends `init = [ρ(start), ρ(start+1), ρ(start+2)]` up to `ρ(n_max)`.
/// Returns the values for `start..=n_max`.
pub fn run_recurrence(start: usize, init: [BigUint; 3], n_max: usize) -> Result<Vec<BigUint>> {
    let mut values: Vec<BigUint> = init.to_vec();
    let mut n = start;
    while n + 3 <= n_max {
        let i = n - start;
        let [a1, a2, a3, a4] = alphas(n as u64);
        let num = a1 * &values[i] + a2 * &values[i + 1] + a3 * &values[i + 2];
        let (q, r) = num.div_rem(&a4);
        if !r.is_zero() {
            return Err(Error::InexactDivision { n: n + 3 });
        }
        values.push(q);
        n += 1;
    }
    values.truncate(n_max + 1 - start.min(n_max + 1));
    Ok(values)
}

/// `ρ₃(0..=n_max)` from the recurrence, seeded with `ρ₃(1), ρ₃(2), ρ₃(3)`.
/// The seeds are checked against the closed form, and `ρ₃(0) = 1` is
/// taken from it as well.
pub fn rho3_recurrence(n_max: usize, seeds: &[BigUint; 3]) -> Result<Vec<BigUint>> {
    for (i, seed) in seeds.iter().enumerate() {
        let expected = rho3_closed_form(i + 1);
        if *seed != expected {
            return Err(Error::SeedMismatch {
                n: i + 1,
                seed: seed.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    let mut out = vec![rho3_closed_form(0)];
    if n_max >= 1 {
        out.extend(run_recurrence(1, seeds.clone(), n_max.max(3))?);
    }
    out.truncate(n_max + 1);
    Ok(out)
}

pub fn rho3_recurrence_from_closed_form(n_max: usize) -> Result<Vec<BigUint>> {
    let seeds = [rho3_closed_form(1), rho3_closed_form(2), rho3_closed_form(3)];
    rho3_recurrence(n_max, &seeds)
}

/// Small-valued helper for display and tests.
pub fn as_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}
