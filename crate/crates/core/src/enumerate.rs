//! Exhaustive generators and count tables.
//!
//! Set partitions are produced as restricted growth strings in lexicographic
//! order. Braids are produced from their flat-partition skeletons: a braid
//! is its partition-like arcs plus loops, so every braid arises from exactly
//! one set partition by putting loops on some of its isolated vertices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::diagrams::{Arc, ArcDiagram, BraidDiagram, CrossingStatistic, PartitionDiagram};
use crate::error::{Error, Result};
use crate::walks;

/// Brute force refuses tables needing more than this many skeletons.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// Lexicographic restricted growth strings of length `n` whose first
/// `prefix.len()` letters are fixed.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    rgs: Vec<usize>,
    // running[i] = max(rgs[0..=i])
    running: Vec<usize>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(&[], n)
    }

    /// `prefix` must itself be a restricted growth string.
    pub fn with_prefix(prefix: &[usize], n: usize) -> Self {
        assert!(prefix.len() <= n, "prefix longer than the string");
        let mut rgs = prefix.to_vec();
        rgs.resize(n, 0);
        let mut running = Vec::with_capacity(n);
        let mut m = 0;
        for (i, &b) in rgs.iter().enumerate() {
            assert!(
                b <= if i == 0 { 0 } else { m + 1 },
                "prefix is not a restricted growth string"
            );
            m = m.max(b);
            running.push(m);
        }
        RestrictedGrowth {
            rgs,
            running,
            fixed: prefix.len().max(1),
            started: false,
            done: false,
        }
    }

    /// Advances to the next string; `None` once exhausted.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.rgs);
        }
        let n = self.rgs.len();
        let Some(i) = (self.fixed..n).rev().find(|&i| self.rgs[i] <= self.running[i - 1]) else {
            self.done = true;
            return None;
        };
        self.rgs[i] += 1;
        self.running[i] = self.running[i - 1].max(self.rgs[i]);
        for j in i + 1..n {
            self.rgs[j] = 0;
            self.running[j] = self.running[i];
        }
        Some(&self.rgs)
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// All restricted growth strings of length `depth`, used as work shards.
fn prefixes(depth: usize) -> Vec<Vec<usize>> {
    RestrictedGrowth::new(depth).collect()
}

fn shard_depth(n: usize) -> usize {
    n.min(6)
}

pub fn gen_set_partitions(n: usize) -> impl Iterator<Item = PartitionDiagram> {
    RestrictedGrowth::new(n).map(|rgs| PartitionDiagram::from_restricted_growth(&rgs))
}

pub fn gen_partitions_k(n: usize, k: usize) -> impl Iterator<Item = PartitionDiagram> {
    gen_set_partitions(n).filter(move |p| p.is_k_noncrossing(k))
}

pub fn gen_2regular_k(n: usize, k: usize) -> impl Iterator<Item = PartitionDiagram> {
    gen_partitions_k(n, k).filter(PartitionDiagram::is_two_regular)
}

/// Skeletons of k-noncrossing braids: set partitions whose arcs, read with
/// the braid convention, are k-noncrossing.
fn braid_skeletons(n: usize, k: usize) -> impl Iterator<Item = PartitionDiagram> {
    gen_set_partitions(n).filter(move |p| p.braid_crossing_number() < k)
}

pub fn gen_braids(n: usize, k: usize) -> impl Iterator<Item = BraidDiagram> {
    braid_skeletons(n, k).flat_map(|skeleton| {
        let degree = skeleton.degrees();
        let isolated: Vec<usize> = (1..=skeleton.n()).filter(|&v| degree[v] == 0).collect();
        (0u64..1 << isolated.len()).map(move |mask| {
            let mut arcs = skeleton.arcs().to_vec();
            arcs.extend(
                isolated
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &v)| Arc::new(v, v)),
            );
            arcs.sort_unstable();
            BraidDiagram::from_diagram_unchecked(ArcDiagram::from_sorted_unchecked(skeleton.n(), arcs))
        })
    })
}

pub fn gen_braids_no_isolated(n: usize, k: usize) -> impl Iterator<Item = BraidDiagram> {
    braid_skeletons(n, k).map(|p| BraidDiagram::from_flat_partition(&p))
}

/// Bell numbers `B(0..=n_max)` from the Bell triangle.
pub fn bell_numbers(n_max: usize) -> Vec<BigUint> {
    let mut bells = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 0..n_max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty row").clone());
        for x in &row {
            let v = next.last().expect("nonempty row") + x;
            next.push(v);
        }
        bells.push(next[0].clone());
        row = next;
    }
    bells
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Partitions,
    TwoRegular,
    Braids,
    BraidsNoIsolated,
}

impl Class {
    pub const ALL: [Class; 4] = [
        Class::Partitions,
        Class::TwoRegular,
        Class::Braids,
        Class::BraidsNoIsolated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Partitions => "partitions",
            Class::TwoRegular => "2regular",
            Class::Braids => "braids",
            Class::BraidsNoIsolated => "braids-noiso",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Class::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Brute,
    ClosedForm,
    Recurrence,
    KernelCt,
    WalkDp,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Brute,
        Route::ClosedForm,
        Route::Recurrence,
        Route::KernelCt,
        Route::WalkDp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Brute => "brute",
            Route::ClosedForm => "closed_form",
            Route::Recurrence => "recurrence",
            Route::KernelCt => "kernel_ct",
            Route::WalkDp => "walk_dp",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Route::ClosedForm),
            "kernel" => Ok(Route::KernelCt),
            "walk" => Ok(Route::WalkDp),
            _ => Route::ALL
                .into_iter()
                .find(|r| r.name() == s)
                .ok_or_else(|| Error::Parse(format!("unknown route {s:?}"))),
        }
    }
}

/// Counts `n -> |class(n)|`, tagged with the route that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub class: Class,
    pub k: usize,
    pub route: Route,
    pub entries: BTreeMap<usize, BigUint>,
}

impl CountTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.entries.get(&n)
    }

    pub fn values(&self) -> Vec<BigUint> {
        self.entries.values().cloned().collect()
    }

    /// `self(n) = other(n + shift)` wherever both are defined, with at least
    /// one common entry.
    pub fn agrees_shifted(&self, other: &CountTable, shift: usize) -> bool {
        let mut common = 0;
        for (n, v) in &self.entries {
            if let Some(w) = other.get(n + shift) {
                if v != w {
                    return false;
                }
                common += 1;
            }
        }
        common > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("count tables serialize")
    }

    /// Parses the JSON written by [`to_json`](Self::to_json).
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("missing field {name}")));
        let class = field("class")?
            .as_str()
            .ok_or_else(|| Error::Parse("class".into()))?
            .parse()?;
        let route = field("route")?
            .as_str()
            .ok_or_else(|| Error::Parse("route".into()))?
            .parse()?;
        let k = field("k")?.as_u64().ok_or_else(|| Error::Parse("k".into()))? as usize;
        let counts = field("counts")?
            .as_object()
            .ok_or_else(|| Error::Parse("counts".into()))?;
        let mut entries = BTreeMap::new();
        for (n, value) in counts {
            let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad index {n:?}")))?;
            let value = value
                .as_str()
                .and_then(|s| s.parse::<BigUint>().ok())
                .ok_or_else(|| Error::Parse(format!("bad count at n = {n}")))?;
            entries.insert(n, value);
        }
        Ok(CountTable {
            class,
            k,
            route,
            entries,
        })
    }
}

struct DecimalCounts<'a>(&'a BTreeMap<usize, BigUint>);

impl Serialize for DecimalCounts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (n, v) in self.0 {
            map.serialize_entry(&n.to_string(), &v.to_str_radix(10))?;
        }
        map.end()
    }
}

impl Serialize for CountTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CountTable", 4)?;
        st.serialize_field("class", self.class.name())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("route", self.route.name())?;
        st.serialize_field("counts", &DecimalCounts(&self.entries))?;
        st.end()
    }
}

/// Brute-force count of one class at one size, sharded over prefixes.
pub fn brute_count(class: Class, k: usize, n: usize) -> BigUint {
    let depth = shard_depth(n);
    prefixes(depth)
        .par_iter()
        .map(|prefix| {
            let mut it = RestrictedGrowth::with_prefix(prefix, n);
            let mut total = BigUint::zero();
            while let Some(rgs) = it.advance() {
                let p = PartitionDiagram::from_restricted_growth(rgs);
                total += weight(class, k, &p);
            }
            total
        })
        .reduce(BigUint::zero, |a, b| a + b)
}

fn weight(class: Class, k: usize, p: &PartitionDiagram) -> BigUint {
    let hit = |b: bool| if b { BigUint::one() } else { BigUint::zero() };
    match class {
        Class::Partitions => hit(p.is_k_noncrossing(k)),
        Class::TwoRegular => hit(p.is_two_regular() && p.is_k_noncrossing(k)),
        Class::BraidsNoIsolated => hit(p.braid_crossing_number() < k),
        Class::Braids => {
            if p.braid_crossing_number() < k {
                let isolated = p.degrees().iter().skip(1).filter(|&&d| d == 0).count();
                BigUint::one() << isolated
            } else {
                BigUint::zero()
            }
        }
    }
}

/// Dense table `n = 0..=n_max`.
///
/// Brute force is refused when `Bell(n_max)` exceeds [`BRUTE_FORCE_LIMIT`].
/// The other routes evaluate `ρ₃` and exist only for 3-noncrossing braids
/// without isolated points and for 2-regular 3-noncrossing partitions, which
/// are counted by `ρ₃(n - 1)`.
pub fn count_table(class: Class, k: usize, n_max: usize, route: Route) -> Result<CountTable> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    let entries: BTreeMap<usize, BigUint> = match route {
        Route::Brute => {
            let bell = &bell_numbers(n_max)[n_max];
            if *bell > BigUint::from(BRUTE_FORCE_LIMIT) {
                return Err(Error::RangeGuard(format!(
                    "brute force over [{n_max}] needs Bell({n_max}) = {bell} skeletons, limit {BRUTE_FORCE_LIMIT}"
                )));
            }
            (0..=n_max).map(|n| (n, brute_count(class, k, n))).collect()
        }
        _ => {
            let unsupported = || Error::UnsupportedRoute {
                route: route.name().into(),
                class: class.name().into(),
                k,
            };
            if k != 3 {
                return Err(unsupported());
            }
            match class {
                Class::BraidsNoIsolated => rho3_values(n_max, route)?.into_iter().enumerate().collect(),
                Class::TwoRegular => {
                    let mut rho = rho3_values(n_max.saturating_sub(1), route)?;
                    // the empty partition over [0]
                    rho.insert(0, BigUint::one());
                    rho.truncate(n_max + 1);
                    rho.into_iter().enumerate().collect()
                }
                _ => return Err(unsupported()),
            }
        }
    };
    Ok(CountTable {
        class,
        k,
        route,
        entries,
    })
}

fn rho3_values(n_max: usize, route: Route) -> Result<Vec<BigUint>> {
    Ok(match route {
        Route::ClosedForm => (0..=n_max).map(walks::rho3_closed_form).collect(),
        Route::Recurrence => walks::rho3_recurrence_from_closed_form(n_max)?,
        Route::KernelCt => walks::rho3_kernel_ct_table(n_max),
        Route::WalkDp => walks::walk_differences(n_max),
        Route::Brute => unreachable!("handled by the caller"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn bell_triangle() {
        let expected = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        assert_eq!(bell_numbers(10), expected.map(big).to_vec());
    }

    #[test]
    fn set_partition_counts_are_bell() {
        let bell = bell_numbers(8);
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(&big(gen_set_partitions(n).count() as u64), b, "n = {n}");
        }
        assert_eq!(gen_set_partitions(0).next().unwrap().n(), 0);
    }

    #[test]
    fn strings_are_lexicographic_and_distinct() {
        let all: Vec<Vec<usize>> = RestrictedGrowth::new(6).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let diagrams: HashSet<_> = gen_set_partitions(6).collect();
        assert_eq!(diagrams.len(), all.len());
    }

    #[test]
    fn shards_cover_everything_once() {
        let n = 7;
        let direct: Vec<Vec<usize>> = RestrictedGrowth::new(n).collect();
        let sharded: Vec<Vec<usize>> = prefixes(3)
            .iter()
            .flat_map(|p| RestrictedGrowth::with_prefix(p, n))
            .collect();
        assert_eq!(direct, sharded);
    }

    #[test]
    fn class_examples() {
        assert_eq!(gen_partitions_k(5, 3).count(), 52);
        assert_eq!(gen_2regular_k(2, 3).count(), 1);
        assert_eq!(
            gen_braids_no_isolated(1, 3).collect::<Vec<_>>(),
            vec![BraidDiagram::new(1, [(1, 1)]).unwrap()]
        );
        assert_eq!(gen_braids(1, 3).count(), 2);
    }

    #[test]
    fn streams_validate_and_match_brute_counts() {
        for n in 0..=6 {
            for k in [3, 4] {
                let braids: Vec<_> = gen_braids(n, k).collect();
                assert!(braids
                    .iter()
                    .all(|b| BraidDiagram::try_from((**b).clone()).is_ok() && b.is_k_noncrossing(k)));
                assert_eq!(braids.iter().collect::<HashSet<_>>().len(), braids.len());
                assert_eq!(big(braids.len() as u64), brute_count(Class::Braids, k, n));
                let noiso = gen_braids_no_isolated(n, k).count();
                assert_eq!(big(noiso as u64), brute_count(Class::BraidsNoIsolated, k, n));
                assert_eq!(noiso, braids.iter().filter(|b| !b.has_isolated_points()).count());
            }
        }
    }

    #[test]
    fn range_guard_refuses() {
        assert!(matches!(
            count_table(Class::Partitions, 3, 13, Route::Brute),
            Err(Error::RangeGuard(_))
        ));
        assert!(matches!(
            count_table(Class::Braids, 3, 4, Route::ClosedForm),
            Err(Error::UnsupportedRoute { .. })
        ));
        assert!(count_table(Class::BraidsNoIsolated, 4, 4, Route::Recurrence).is_err());
    }

    #[test]
    fn table_examples() {
        let t = count_table(Class::BraidsNoIsolated, 3, 1, Route::Brute).unwrap();
        assert_eq!(t.get(1), Some(&big(1)));
        let t = count_table(Class::Partitions, 3, 5, Route::Brute).unwrap();
        assert_eq!(t.get(5), Some(&big(52)));
    }

    #[test]
    fn json_round_trip() {
        let t = count_table(Class::TwoRegular, 3, 6, Route::Brute).unwrap();
        let json = t.to_json();
        assert!(json.contains("\"class\": \"2regular\""));
        assert!(json.contains("\"6\": \""));
        assert_eq!(CountTable::from_json(&json).unwrap(), t);
    }

    const GOLDEN: [(&str, Class, usize, usize); 8] = [
        ("partitions_k3.json", Class::Partitions, 3, 10),
        ("partitions_k4.json", Class::Partitions, 4, 10),
        ("2regular_k3.json", Class::TwoRegular, 3, 10),
        ("2regular_k4.json", Class::TwoRegular, 4, 10),
        ("braids_k3.json", Class::Braids, 3, 9),
        ("braids_k4.json", Class::Braids, 4, 9),
        ("braids_noiso_k3.json", Class::BraidsNoIsolated, 3, 10),
        ("braids_noiso_k4.json", Class::BraidsNoIsolated, 4, 10),
    ];

    /// Brute-force tables against the committed files. Set `UPDATE_GOLDEN=1`
    /// to rewrite them.
    #[test]
    fn golden_tables() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata");
        for (file, class, k, n_max) in GOLDEN {
            let table = count_table(class, k, n_max, Route::Brute).unwrap();
            let path = dir.join(file);
            if std::env::var_os("UPDATE_GOLDEN").is_some() {
                std::fs::create_dir_all(&dir).unwrap();
                std::fs::write(&path, table.to_json() + "\n").unwrap();
            }
            let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(CountTable::from_json(&text).unwrap(), table, "{file}");
        }
    }

    #[test]
    fn three_crossings_first_appear_at_six() {
        let bell = bell_numbers(6);
        let crossing = gen_set_partitions(6).filter(|p| p.max_crossing() >= 3).count();
        assert_eq!(crossing, 1);
        assert_eq!(brute_count(Class::Partitions, 3, 6), &bell[6] - big(crossing as u64));
    }
}
