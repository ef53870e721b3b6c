//! Named verification suites.
//!
//! Each suite runs a family of exhaustive or exact checks and returns a
//! report. Diagram checks scan sizes in increasing order and stop at the
//! first failure, so the reported counterexample is a smallest one.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::diagrams::{BraidDiagram, CrossingStatistic, PartitionDiagram};
use crate::duality::{
    theta_direct, theta_restricted, theta_restricted_inverse, theta_tableau_trace, DualityRoute, DualityWitness,
};
use crate::enumerate::{
    bell_numbers, brute_count, count_table, gen_braids, gen_braids_no_isolated, gen_partitions_k, gen_set_partitions,
    Class, Route,
};
use crate::error::{Error, Result};
use crate::tableaux::{count_tableaux, diagram_to_tableau, tableau_to_diagram, Diagram, StepSet};
use crate::walks::{self, asymptotics, kernel};

pub const SUITES: [&str; 8] = [
    "duality",
    "restriction",
    "tableaux",
    "counts",
    "rho3",
    "walks",
    "series",
    "asymptotics",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n_max: usize,
    pub ks: Vec<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_max: 7,
            ks: vec![3, 4],
        }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn pass(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed: true,
            detail: detail.into(),
            counterexample: None,
        });
    }

    fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>, witness: Option<String>) {
        self.0.push(Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
            counterexample: witness,
        });
    }

    fn record(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        if ok {
            self.pass(name, detail)
        } else {
            self.fail(name, detail, None)
        }
    }

    /// Records the first failing item or a pass with `detail`.
    fn first_failure(&mut self, name: impl Into<String>, failure: Option<String>, detail: impl Into<String>) {
        match failure {
            None => self.pass(name, detail),
            Some(w) => self.fail(name, format!("first failure: {w}"), Some(w)),
        }
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let mut checks = Checks(Vec::new());
    match name {
        "duality" => duality(params, &mut checks),
        "restriction" => restriction(params, &mut checks),
        "tableaux" => tableaux(params, &mut checks),
        "counts" => counts(params, &mut checks)?,
        "rho3" => rho3(params, &mut checks)?,
        "walks" => walks_suite(params, &mut checks),
        "series" => series(params, &mut checks)?,
        "asymptotics" => asymptotics_suite(&mut checks)?,
        _ => {
            return Err(Error::Parse(format!(
                "unknown suite {name:?}; known: {}",
                SUITES.join(", ")
            )))
        }
    }
    let passed = checks.0.iter().all(|c| c.passed);
    Ok(SuiteReport {
        suite: name.to_string(),
        passed,
        checks: checks.0,
    })
}

fn duality(p: &SuiteParams, out: &mut Checks) {
    for &k in &p.ks {
        let mut sizes = Vec::new();
        let mut failure = None;
        'outer: for n in 1..=p.n_max {
            let target: HashSet<BraidDiagram> = gen_braids(n - 1, k).collect();
            let mut image = HashSet::new();
            let mut source = 0usize;
            for pi in gen_partitions_k(n, k) {
                source += 1;
                let b = theta_direct(&pi).expect("n >= 1");
                if !target.contains(&b) || !image.insert(b) {
                    failure = Some(pi.to_string());
                    break 'outer;
                }
            }
            if source != target.len() {
                failure = Some(format!("n={n}: |P| = {source} but |B| = {}", target.len()));
                break;
            }
            sizes.push(format!("{n}:{source}"));
        }
        out.first_failure(
            format!("k={k}: theta is a bijection onto braids over [n-1]"),
            failure,
            format!("|P_k(n)| = |B_k(n-1)| for n:count = {}", sizes.join(" ")),
        );
    }
    let witness_failure = (1..=p.n_max).flat_map(gen_set_partitions).find_map(|pi| {
        let w = DualityWitness::new(pi.clone(), DualityRoute::Direct).expect("n >= 1");
        (!w.arc_property_holds() || !w.endpoint_shift_holds()).then(|| pi.to_string())
    });
    out.first_failure(
        "arc property and origin/endpoint shift",
        witness_failure,
        format!("all partitions, n <= {}", p.n_max),
    );
    let route_max = p.n_max.min(7);
    let route_failure = (1..=route_max).flat_map(gen_set_partitions).find_map(|pi| {
        let ok = theta_tableau_trace(&pi)
            .map(|t| t.shape_relations_hold() && Ok(&t.image) == theta_direct(&pi).as_ref())
            .unwrap_or(false);
        (!ok).then(|| pi.to_string())
    });
    out.first_failure(
        "tableau route equals direct route",
        route_failure,
        format!("all partitions, n <= {route_max}"),
    );
}

fn restriction(p: &SuiteParams, out: &mut Checks) {
    for &k in &p.ks {
        let mut sizes = Vec::new();
        let mut failure = None;
        'outer: for n in 1..=p.n_max {
            let target: HashSet<BraidDiagram> = gen_braids_no_isolated(n - 1, k).collect();
            let mut image = HashSet::new();
            for pi in gen_partitions_k(n, k).filter(PartitionDiagram::is_two_regular) {
                let ok = theta_restricted(&pi, k)
                    .ok()
                    .filter(|b| target.contains(b))
                    .map(|b| theta_restricted_inverse(&b, k).as_ref() == Ok(&pi) && image.insert(b));
                if ok != Some(true) {
                    failure = Some(pi.to_string());
                    break 'outer;
                }
            }
            if image.len() != target.len() {
                let missing = target.difference(&image).min().expect("nonempty difference");
                failure = Some(format!("{missing} has no preimage"));
                break;
            }
            sizes.push(format!("{n}:{}", image.len()));
        }
        out.first_failure(
            format!("k={k}: 2-regular partitions map onto braids without isolated points"),
            failure,
            format!("|P_k,2(n)| = |B_k†(n-1)| for n:count = {}", sizes.join(" ")),
        );
    }
}

fn tableaux(p: &SuiteParams, out: &mut Checks) {
    let part_max = p.n_max.min(8);
    let braid_max = p.n_max.min(7);
    let partitions = (0..=part_max).flat_map(gen_set_partitions).map(Diagram::Partition);
    let braids = (0..=braid_max)
        .flat_map(|n| gen_braids(n, usize::MAX))
        .map(Diagram::Braid);
    let mut round_trip = None;
    let mut row_bound = None;
    for d in partitions.chain(braids) {
        let t = diagram_to_tableau(&d);
        if round_trip.is_none() && (!t.is_valid() || tableau_to_diagram(&t).as_ref() != Ok(&d)) {
            round_trip = Some(d.to_string());
        }
        let crossing = match &d {
            Diagram::Partition(x) => x.max_crossing(),
            Diagram::Braid(x) => x.max_crossing(),
        };
        if row_bound.is_none() && p.ks.iter().any(|&k| (crossing < k) != (t.max_row_count() < k)) {
            row_bound = Some(d.to_string());
        }
        if round_trip.is_some() && row_bound.is_some() {
            break;
        }
    }
    let scope = format!("partitions n <= {part_max}, braids n <= {braid_max}");
    out.first_failure(
        "diagram -> tableau -> diagram is the identity",
        round_trip,
        scope.clone(),
    );
    out.first_failure(
        format!("k-noncrossing iff fewer than k rows, k in {:?}", p.ks),
        row_bound,
        scope,
    );
    let bell = bell_numbers(part_max + 1);
    let bad = (0..=part_max).find(|&n| {
        count_tableaux(n, StepSet::Partition, None, false) != bell[n]
            || count_tableaux(n, StepSet::Braid, None, false) != bell[n + 1]
    });
    out.record(
        "tableau counts are Bell numbers",
        bad.is_none(),
        match bad {
            None => format!("n <= {part_max}"),
            Some(n) => format!("mismatch at n = {n}"),
        },
    );
}

fn counts(p: &SuiteParams, out: &mut Checks) -> Result<()> {
    let bell = bell_numbers(p.n_max);
    for &k in &p.ks {
        let parts = count_table(Class::Partitions, k, p.n_max, Route::Brute)?;
        let braids = count_table(Class::Braids, k, p.n_max, Route::Brute)?;
        let two = count_table(Class::TwoRegular, k, p.n_max, Route::Brute)?;
        let noiso = count_table(Class::BraidsNoIsolated, k, p.n_max, Route::Brute)?;
        out.record(
            format!("k={k}: |P_k(n)| = |B_k(n-1)|"),
            braids.agrees_shifted(&parts, 1),
            format!("n <= {}", p.n_max),
        );
        out.record(
            format!("k={k}: |P_k,2(n)| = |B_k†(n-1)|"),
            noiso.agrees_shifted(&two, 1),
            format!("n <= {}", p.n_max),
        );
        let small = (0..=p.n_max.min(2 * k - 1)).all(|n| parts.get(n) == Some(&bell[n]));
        out.record(
            format!("k={k}: |P_k(n)| = Bell(n) for n < 2k"),
            small,
            format!("n <= {}", p.n_max.min(2 * k - 1)),
        );
    }
    Ok(())
}

fn rho3(p: &SuiteParams, out: &mut Checks) -> Result<()> {
    let brute_max = p.n_max.min(10);
    let brute: Vec<BigUint> = (0..=brute_max)
        .map(|n| brute_count(Class::BraidsNoIsolated, 3, n))
        .collect();
    let kernel = walks::rho3_kernel_ct_table(p.n_max);
    let closed: Vec<BigUint> = (0..=p.n_max).map(walks::rho3_closed_form).collect();
    let recurrence = walks::rho3_recurrence_from_closed_form(p.n_max)?;
    let walk = walks::walk_differences(p.n_max);
    let first_bad = (0..=p.n_max).find(|&n| {
        kernel[n] != closed[n]
            || recurrence[n] != closed[n]
            || walk[n] != closed[n]
            || brute.get(n).is_some_and(|b| *b != closed[n])
    });
    out.record(
        "brute = kernel CT = closed form = recurrence = walk DP",
        first_bad.is_none(),
        match first_bad {
            None => format!("n <= {} (brute force n <= {brute_max})", p.n_max),
            Some(n) => format!("routes disagree at n = {n}"),
        },
    );
    Ok(())
}

fn walks_suite(p: &SuiteParams, out: &mut Checks) {
    let diffs = walks::walk_differences(p.n_max);
    let bad = (0..=p.n_max).find(|&n| diffs[n] != walks::rho3_closed_form(n));
    out.record("a_n - b_n = rho3(n)", bad.is_none(), format!("n <= {}", p.n_max));
}

fn series(p: &SuiteParams, out: &mut Checks) -> Result<()> {
    let order = (2 * p.n_max + 2).max(4);
    let y = kernel::y0_series(order)?;
    out.record(
        "K(x, Y0; t) = 0",
        kernel::kernel_at_y0(&y).is_zero(),
        format!("to t^{order}"),
    );
    out.record(
        "Y0^2 K(x, x/Y0) = x K(x, Y0)",
        kernel::second_root_residual(&y).is_zero(),
        format!("to t^{order}"),
    );
    out.record("kernel symmetry", kernel::kernel_symmetry_holds(), "exact");
    out.record(
        "Y0 has nonnegative coefficients",
        kernel::is_positive(&y),
        format!("to t^{order}"),
    );
    let pows = [y.clone(), y.pow(2), y.pow(3)];
    let n_lim = p.n_max.min(10).min(order / 2 - 1);
    let mut bad = None;
    'outer: for (i, pw) in pows.iter().enumerate() {
        for m in -5..=5 {
            for n in 0..=n_lim {
                let formula = walks::coeff_y0_pow(i as u32 + 1, m, n)?;
                if formula != kernel::series_coefficient(pw, m as i32, n) {
                    bad = Some(format!("k={}, m={m}, n={n}", i + 1));
                    break 'outer;
                }
            }
        }
    }
    out.first_failure(
        "coefficient formula for Y0^k",
        bad,
        format!("k <= 3, |m| <= 5, n <= {n_lim}"),
    );
    Ok(())
}

fn asymptotics_suite(out: &mut Checks) -> Result<()> {
    let p = asymptotics::characteristic_analysis();
    let (theta, c) = asymptotics::expansion_from_recurrence(3);
    out.record(
        "theta = -7",
        p.theta == num_rational::BigRational::from_integer((-7).into()),
        p.theta.to_string(),
    );
    out.record(
        "quoted equations agree with the recurrence expansion",
        theta == p.theta && c[..] == p.c[..],
        format!("c = {}, {}, {}", p.c[0], p.c[1], p.c[2]),
    );
    let exact = walks::rho3_recurrence_from_closed_form(200)?;
    let e50 = asymptotics::relative_error(50, &p, &exact[50])?;
    let e200 = asymptotics::relative_error(200, &p, &exact[200])?;
    out.record(
        "relative error shrinks from n = 50 to n = 200",
        num_traits::Signed::abs(&e200) < num_traits::Signed::abs(&e50),
        format!(
            "{} -> {}",
            asymptotics::to_significant(&e50, 3),
            asymptotics::to_significant(&e200, 3)
        ),
    );
    let fitted = asymptotics::fit_k(200, &p, &exact[200])?;
    let (a, b) = (
        asymptotics::to_significant(&fitted, 4),
        asymptotics::to_significant(&p.k, 4),
    );
    out.record(
        "fitted K at n = 200 matches the quoted K to 4 figures",
        a == b,
        format!("fitted {a}, quoted {b}"),
    );
    Ok(())
}
