use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Young-diagram outline: weakly decreasing positive row lengths, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidShape(format!("{rows:?} has an empty row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn row_count(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn row(&self, h: usize) -> usize {
        if h == 0 {
            usize::MAX
        } else {
            self.0.get(h - 1).copied().unwrap_or(0)
        }
    }

    /// Row `h` (1-based) can take one more square.
    pub fn can_add(&self, h: usize) -> bool {
        h >= 1 && h <= self.0.len() + 1 && self.row(h - 1) > self.row(h)
    }

    /// Row `h` ends in a removable corner.
    pub fn can_remove(&self, h: usize) -> bool {
        h >= 1 && h <= self.0.len() && self.row(h) > self.row(h + 1)
    }

    pub fn with_added(&self, h: usize) -> Option<Shape> {
        self.can_add(h).then(|| {
            let mut rows = self.0.clone();
            if h > rows.len() {
                rows.push(1);
            } else {
                rows[h - 1] += 1;
            }
            Shape(rows)
        })
    }

    pub fn with_removed(&self, h: usize) -> Option<Shape> {
        self.can_remove(h).then(|| {
            let mut rows = self.0.clone();
            rows[h - 1] -= 1;
            if rows[h - 1] == 0 {
                rows.pop();
            }
            Shape(rows)
        })
    }

    pub fn apply(&self, step: HalfStep) -> Option<Shape> {
        match step {
            HalfStep::Stay => Some(self.clone()),
            HalfStep::Add(h) => self.with_added(h),
            HalfStep::Remove(h) => self.with_removed(h),
        }
    }

    /// The half-step leading from `self` to `next`, if they differ by at most one square.
    pub fn step_to(&self, next: &Shape) -> Option<HalfStep> {
        let len = self.0.len().max(next.0.len());
        let mut diff = None;
        for h in 1..=len {
            let (a, b) = (self.row(h), next.row(h));
            if a == b {
                continue;
            }
            if diff.is_some() {
                return None;
            }
            diff = match b.checked_sub(a) {
                Some(1) => Some(HalfStep::Add(h)),
                None if a - b == 1 => Some(HalfStep::Remove(h)),
                _ => return None,
            };
        }
        Some(diff.unwrap_or(HalfStep::Stay))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

/// One half of a step pair: do nothing, or add/remove the last square of row `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfStep {
    Stay,
    Add(usize),
    Remove(usize),
}

impl HalfStep {
    pub fn is_stay(&self) -> bool {
        matches!(self, HalfStep::Stay)
    }
}

impl fmt::Display for HalfStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfStep::Stay => f.write_str("0"),
            HalfStep::Add(h) => write!(f, "+{h}"),
            HalfStep::Remove(h) => write!(f, "-{h}"),
        }
    }
}

/// The (odd, even) half-steps contributed by one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepPair {
    pub odd: HalfStep,
    pub even: HalfStep,
}

impl StepPair {
    pub const fn new(odd: HalfStep, even: HalfStep) -> Self {
        StepPair { odd, even }
    }

    pub fn transposed(self) -> Self {
        StepPair {
            odd: self.even,
            even: self.odd,
        }
    }
}

impl fmt::Display for StepPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.odd, self.even)
    }
}

/// Which pair-steps generate the tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepSet {
    /// `(∅,∅)`, `(−□,∅)`, `(∅,+□)` and `(−□,+□)`: set partitions.
    Partition,
    /// `(∅,∅)`, `(−□,∅)`, `(∅,+□)` and `(+□,−□)`: braids.
    Braid,
}

impl StepSet {
    pub fn admits(self, pair: StepPair) -> bool {
        use HalfStep::*;
        match (pair.odd, pair.even) {
            (Stay, Stay) | (Remove(_), Stay) | (Stay, Add(_)) => true,
            (Remove(_), Add(_)) => self == StepSet::Partition,
            (Add(_), Remove(_)) => self == StepSet::Braid,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![2, 1]).is_ok());
        assert!(Shape::new(vec![1, 2]).is_err());
        assert!(Shape::new(vec![1, 0]).is_err());
    }

    #[test]
    fn corners() {
        let s = Shape::new(vec![2, 2, 1]).unwrap();
        assert!(s.can_add(1) && !s.can_add(2) && s.can_add(3) && s.can_add(4) && !s.can_add(5));
        assert!(!s.can_remove(1) && s.can_remove(2) && s.can_remove(3) && !s.can_remove(4));
        assert_eq!(s.with_removed(3).unwrap().rows(), &[2, 2]);
        assert_eq!(Shape::empty().with_added(1).unwrap().rows(), &[1]);
        assert!(Shape::empty().with_removed(1).is_none());
    }

    #[test]
    fn step_detection() {
        let a = Shape::new(vec![2, 1]).unwrap();
        let b = Shape::new(vec![2, 2]).unwrap();
        assert_eq!(a.step_to(&b), Some(HalfStep::Add(2)));
        assert_eq!(b.step_to(&a), Some(HalfStep::Remove(2)));
        assert_eq!(a.step_to(&a), Some(HalfStep::Stay));
        assert_eq!(Shape::empty().step_to(&b), None);
    }

    #[test]
    fn admissible_pairs() {
        use HalfStep::*;
        let crossing = StepPair::new(Add(1), Remove(1));
        let hinge = StepPair::new(Remove(1), Add(1));
        assert!(StepSet::Braid.admits(crossing) && !StepSet::Partition.admits(crossing));
        assert!(StepSet::Partition.admits(hinge) && !StepSet::Braid.admits(hinge));
        assert!(!StepSet::Partition.admits(StepPair::new(Add(1), Stay)));
    }
}
