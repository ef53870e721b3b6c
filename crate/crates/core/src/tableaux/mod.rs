//! Vacillating tableaux over the partition and braid step sets.
//!
//! A tableau of length `2n` is a shape sequence `λ⁰ = ∅, λ¹, …, λ²ⁿ = ∅` in
//! which vertex `i` contributes the pair `(λ²ⁱ⁻² → λ²ⁱ⁻¹, λ²ⁱ⁻¹ → λ²ⁱ)`.
//! [`tableau_to_diagram`] and [`diagram_to_tableau`] are mutually inverse and
//! carry the largest crossing set of a diagram to the largest row count of
//! its tableau.

mod bijection;
mod filling;
mod shape;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub use bijection::{diagram_to_tableau, tableau_to_diagram, Diagram};
pub use filling::InsertionFilling;
pub use shape::{HalfStep, Shape, StepPair, StepSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VacillatingTableau {
    shapes: Vec<Shape>,
    step_set: StepSet,
    k_bound: Option<usize>,
}

/// Why a shape sequence fails to be a tableau; `index` points into the shape list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TableauViolation {
    EvenShapeCount { len: usize },
    NonemptyStart,
    NonemptyEnd,
    NotAdjacent { index: usize },
    IllegalPair { vertex: usize, pair: String },
    TooManyRows { index: usize, rows: usize, k: usize },
}

impl VacillatingTableau {
    /// Wraps a shape sequence without validating it; see [`violations`](Self::violations).
    pub fn new(shapes: Vec<Shape>, step_set: StepSet) -> Self {
        VacillatingTableau {
            shapes,
            step_set,
            k_bound: None,
        }
    }

    pub fn with_k_bound(mut self, k: usize) -> Self {
        self.k_bound = Some(k);
        self
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    pub fn step_set(&self) -> StepSet {
        self.step_set
    }

    pub fn k_bound(&self) -> Option<usize> {
        self.k_bound
    }

    /// Number of vertices, `(len - 1) / 2`.
    pub fn n(&self) -> usize {
        self.shapes.len().saturating_sub(1) / 2
    }

    pub fn max_row_count(&self) -> usize {
        self.shapes.iter().map(Shape::row_count).max().unwrap_or(0)
    }

    pub fn violations(&self) -> Vec<TableauViolation> {
        let mut out = Vec::new();
        let len = self.shapes.len();
        if len.is_multiple_of(2) {
            out.push(TableauViolation::EvenShapeCount { len });
            return out;
        }
        if !self.shapes[0].is_empty() {
            out.push(TableauViolation::NonemptyStart);
        }
        if !self.shapes[len - 1].is_empty() {
            out.push(TableauViolation::NonemptyEnd);
        }
        for i in 1..=self.n() {
            let (a, b, c) = (&self.shapes[2 * i - 2], &self.shapes[2 * i - 1], &self.shapes[2 * i]);
            match (a.step_to(b), b.step_to(c)) {
                (Some(odd), Some(even)) => {
                    let pair = StepPair::new(odd, even);
                    if !self.step_set.admits(pair) {
                        out.push(TableauViolation::IllegalPair {
                            vertex: i,
                            pair: pair.to_string(),
                        });
                    }
                }
                (None, _) => out.push(TableauViolation::NotAdjacent { index: 2 * i - 1 }),
                (_, None) => out.push(TableauViolation::NotAdjacent { index: 2 * i }),
            }
        }
        if let Some(k) = self.k_bound {
            for (index, s) in self.shapes.iter().enumerate() {
                if s.row_count() >= k {
                    out.push(TableauViolation::TooManyRows {
                        index,
                        rows: s.row_count(),
                        k,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// The per-vertex step pairs, read off consecutive shapes.
    pub fn step_pairs(&self) -> Result<Vec<StepPair>> {
        let violations = self.violations();
        if let Some(v) = violations.first() {
            return Err(Error::MalformedTableau(format!("{v:?}")));
        }
        Ok((1..=self.n())
            .map(|i| {
                let odd = self.shapes[2 * i - 2].step_to(&self.shapes[2 * i - 1]);
                let even = self.shapes[2 * i - 1].step_to(&self.shapes[2 * i]);
                StepPair::new(odd.unwrap(), even.unwrap())
            })
            .collect())
    }

    /// Rebuilds the shape sequence from step pairs, starting at `∅`.
    pub fn from_step_pairs(pairs: &[StepPair], step_set: StepSet) -> Result<Self> {
        let mut shapes = Vec::with_capacity(2 * pairs.len() + 1);
        let mut current = Shape::empty();
        shapes.push(current.clone());
        for (idx, &pair) in pairs.iter().enumerate() {
            let vertex = idx + 1;
            if !step_set.admits(pair) {
                return Err(Error::IllegalStep {
                    vertex,
                    reason: format!("{pair} is not in {step_set:?}"),
                });
            }
            for half in [pair.odd, pair.even] {
                current = current.apply(half).ok_or_else(|| Error::IllegalStep {
                    vertex,
                    reason: format!("{half} cannot be applied to shape [{current}]"),
                })?;
                shapes.push(current.clone());
            }
        }
        if !current.is_empty() {
            return Err(Error::MalformedTableau(format!(
                "ends at shape [{current}] instead of ∅"
            )));
        }
        Ok(VacillatingTableau::new(shapes, step_set))
    }

    /// Text form: shapes as comma-separated row lengths joined by `|`.
    pub fn to_text(&self) -> String {
        self.shapes.iter().map(Shape::to_string).collect::<Vec<_>>().join("|")
    }

    pub fn parse(text: &str, step_set: StepSet) -> Result<Self> {
        let shapes = text
            .split('|')
            .map(|field| {
                if field.is_empty() {
                    return Ok(Shape::empty());
                }
                let rows = field
                    .split(',')
                    .map(|r| {
                        r.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad row length {r:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Shape::new(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VacillatingTableau::new(shapes, step_set))
    }
}

/// Number of tableaux of length `2n` over `step_set` whose shapes keep fewer
/// than `k` rows (no bound when `k` is `None`). With `forbid_empty_pair` the
/// pair `(∅,∅)` is excluded, which for braids removes isolated points.
///
/// Counts by dynamic programming over shapes, one vertex at a time.
pub fn count_tableaux(n: usize, step_set: StepSet, k: Option<usize>, forbid_empty_pair: bool) -> BigUint {
    let fits = |s: &Shape| k.is_none_or(|k| s.row_count() < k);
    let mut layer: HashMap<Shape, BigUint> = HashMap::from([(Shape::empty(), BigUint::one())]);
    for remaining in (0..n).rev() {
        let mut next: HashMap<Shape, BigUint> = HashMap::new();
        for (shape, count) in &layer {
            for pair in candidate_pairs(shape, step_set) {
                if forbid_empty_pair && pair.odd.is_stay() && pair.even.is_stay() {
                    continue;
                }
                let Some(mid) = shape.apply(pair.odd).filter(|s| fits(s)) else {
                    continue;
                };
                let Some(end) = mid.apply(pair.even).filter(|s| fits(s)) else {
                    continue;
                };
                // the walk must still be able to return to ∅
                if end.size() > remaining {
                    continue;
                }
                *next.entry(end).or_insert_with(BigUint::zero) += count;
            }
        }
        layer = next;
    }
    layer.remove(&Shape::empty()).unwrap_or_default()
}

fn candidate_pairs(shape: &Shape, step_set: StepSet) -> Vec<StepPair> {
    use HalfStep::*;
    let rows = shape.row_count();
    let adds: Vec<usize> = (1..=rows + 1).filter(|&h| shape.can_add(h)).collect();
    let removes: Vec<usize> = (1..=rows).filter(|&h| shape.can_remove(h)).collect();
    let mut out = vec![StepPair::new(Stay, Stay)];
    out.extend(adds.iter().map(|&h| StepPair::new(Stay, Add(h))));
    out.extend(removes.iter().map(|&h| StepPair::new(Remove(h), Stay)));
    match step_set {
        StepSet::Partition => {
            for &r in &removes {
                let mid = shape.with_removed(r).unwrap();
                out.extend(
                    (1..=mid.row_count() + 1)
                        .filter(|&h| mid.can_add(h))
                        .map(|h| StepPair::new(Remove(r), Add(h))),
                );
            }
        }
        StepSet::Braid => {
            for &a in &adds {
                let mid = shape.with_added(a).unwrap();
                out.extend(
                    (1..=mid.row_count())
                        .filter(|&h| mid.can_remove(h))
                        .map(|h| StepPair::new(Add(a), Remove(h))),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use HalfStep::*;

    fn shapes(spec: &[&[usize]]) -> Vec<Shape> {
        spec.iter().map(|r| Shape::new(r.to_vec()).unwrap()).collect()
    }

    #[test]
    fn validate_examples() {
        let t = VacillatingTableau::new(shapes(&[&[], &[], &[]]), StepSet::Partition);
        assert!(t.is_valid());
        let t = VacillatingTableau::new(shapes(&[&[], &[1], &[]]), StepSet::Braid);
        assert!(t.is_valid());
        let t = VacillatingTableau::new(shapes(&[&[], &[1], &[]]), StepSet::Partition);
        assert_eq!(
            t.violations(),
            vec![TableauViolation::IllegalPair {
                vertex: 1,
                pair: "(+1,-1)".into()
            }]
        );
    }

    #[test]
    fn validate_reports_structure() {
        let t = VacillatingTableau::new(shapes(&[&[], &[1]]), StepSet::Braid);
        assert_eq!(t.violations(), vec![TableauViolation::EvenShapeCount { len: 2 }]);
        let t = VacillatingTableau::new(shapes(&[&[], &[1], &[1]]), StepSet::Braid);
        assert!(t.violations().contains(&TableauViolation::NonemptyEnd));
        let t = VacillatingTableau::new(shapes(&[&[], &[2], &[]]), StepSet::Braid);
        assert!(t.violations().contains(&TableauViolation::NotAdjacent { index: 1 }));
        let t = VacillatingTableau::new(
            shapes(&[&[], &[], &[1], &[1], &[1, 1], &[1], &[1], &[], &[]]),
            StepSet::Partition,
        )
        .with_k_bound(2);
        assert_eq!(
            t.violations(),
            vec![TableauViolation::TooManyRows {
                index: 4,
                rows: 2,
                k: 2
            }]
        );
    }

    #[test]
    fn step_pair_examples() {
        let t = VacillatingTableau::new(shapes(&[&[], &[], &[]]), StepSet::Partition);
        assert_eq!(t.step_pairs().unwrap(), vec![StepPair::new(Stay, Stay)]);
        let t = VacillatingTableau::new(shapes(&[&[], &[], &[1], &[], &[]]), StepSet::Partition);
        assert_eq!(
            t.step_pairs().unwrap(),
            vec![StepPair::new(Stay, Add(1)), StepPair::new(Remove(1), Stay)]
        );
        let t = VacillatingTableau::new(shapes(&[&[], &[1], &[]]), StepSet::Braid);
        assert_eq!(t.step_pairs().unwrap(), vec![StepPair::new(Add(1), Remove(1))]);
    }

    #[test]
    fn from_step_pairs_examples() {
        let t = VacillatingTableau::from_step_pairs(&[StepPair::new(Stay, Stay)], StepSet::Partition).unwrap();
        assert_eq!(t.shapes(), &shapes(&[&[], &[], &[]])[..]);
        let pairs = [StepPair::new(Stay, Add(1)), StepPair::new(Remove(1), Stay)];
        let t = VacillatingTableau::from_step_pairs(&pairs, StepSet::Partition).unwrap();
        assert_eq!(t.shapes(), &shapes(&[&[], &[], &[1], &[], &[]])[..]);
        assert_eq!(t.step_pairs().unwrap(), pairs);
        assert!(VacillatingTableau::from_step_pairs(&[StepPair::new(Remove(1), Stay)], StepSet::Partition).is_err());
        assert!(VacillatingTableau::from_step_pairs(&[StepPair::new(Add(1), Remove(1))], StepSet::Partition).is_err());
    }

    #[test]
    fn text_format() {
        let t = VacillatingTableau::new(shapes(&[&[], &[1], &[]]), StepSet::Braid);
        assert_eq!(t.to_text(), "|1|");
        let t = VacillatingTableau::new(shapes(&[&[], &[], &[]]), StepSet::Partition);
        assert_eq!(t.to_text(), "||");
        let text = "||1|2|2,1|1,1|1|1||";
        assert_eq!(
            VacillatingTableau::parse(text, StepSet::Partition).unwrap().to_text(),
            text
        );
        assert!(VacillatingTableau::parse("|1,2|", StepSet::Braid).is_err());
        assert!(VacillatingTableau::parse("|x|", StepSet::Braid).is_err());
    }

    #[test]
    fn tableau_counts_are_bell_numbers() {
        let bell = [1u32, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(count_tableaux(n, StepSet::Partition, None, false), BigUint::from(b));
        }
        // braids over [n] are counted by Bell(n + 1)
        for n in 0..7 {
            assert_eq!(
                count_tableaux(n, StepSet::Braid, None, false),
                BigUint::from(bell[n + 1])
            );
        }
    }
}
