use std::fmt;

use crate::diagrams::{Arc, ArcDiagram, BraidDiagram, PartitionDiagram};
use crate::error::{Error, Result};

use super::{HalfStep, InsertionFilling, Shape, StepSet, VacillatingTableau};

/// A diagram of either class, as produced from a tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    Partition(PartitionDiagram),
    Braid(BraidDiagram),
}

impl Diagram {
    pub fn arc_diagram(&self) -> &ArcDiagram {
        match self {
            Diagram::Partition(p) => p,
            Diagram::Braid(b) => b,
        }
    }

    pub fn step_set(&self) -> StepSet {
        match self {
            Diagram::Partition(_) => StepSet::Partition,
            Diagram::Braid(_) => StepSet::Braid,
        }
    }

    pub fn into_partition(self) -> Option<PartitionDiagram> {
        match self {
            Diagram::Partition(p) => Some(p),
            Diagram::Braid(_) => None,
        }
    }

    pub fn into_braid(self) -> Option<BraidDiagram> {
        match self {
            Diagram::Braid(b) => Some(b),
            Diagram::Partition(_) => None,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.arc_diagram().fmt(f)
    }
}

impl From<PartitionDiagram> for Diagram {
    fn from(p: PartitionDiagram) -> Self {
        Diagram::Partition(p)
    }
}

impl From<BraidDiagram> for Diagram {
    fn from(b: BraidDiagram) -> Self {
        Diagram::Braid(b)
    }
}

/// Reads a tableau left to right.
///
/// An added square receives the current vertex `i` (always the largest entry
/// so far). A removed square is reverse-bumped out of the filling; the entry
/// `e` leaving the first row closes the arc `(e, i)`. Partition tableaux
/// remove before adding at a vertex, braid tableaux add before removing, so
/// only braids can produce loops `(i, i)` and crossing pairs at `i`.
pub fn tableau_to_diagram(t: &VacillatingTableau) -> Result<Diagram> {
    let pairs = t.step_pairs()?;
    let mut filling = InsertionFilling::new();
    let mut arcs = Vec::new();
    for (idx, pair) in pairs.iter().enumerate() {
        let i = idx + 1;
        for half in [pair.odd, pair.even] {
            match half {
                HalfStep::Stay => {}
                HalfStep::Add(h) => filling.place(h, i)?,
                HalfStep::Remove(h) => {
                    let e = filling.reverse_bump(h)?;
                    arcs.push(Arc::new(e, i));
                }
            }
        }
    }
    if !filling.rows().is_empty() {
        return Err(Error::MalformedTableau("arcs left open at the last vertex".into()));
    }
    let d = ArcDiagram::new(t.n(), arcs)?;
    Ok(match t.step_set() {
        StepSet::Partition => Diagram::Partition(PartitionDiagram::try_from(d)?),
        StepSet::Braid => Diagram::Braid(BraidDiagram::try_from(d)?),
    })
}

enum Slot {
    Add,
    Remove,
}

/// Builds the tableau of a diagram right to left, starting from `λ²ⁿ = ∅`.
///
/// Undoing a removal at vertex `i` row-inserts the left partner `e` of the
/// arc closing at `i`; undoing an addition deletes `i`, which is then the
/// largest entry and so sits in a corner.
pub fn diagram_to_tableau(d: &Diagram) -> VacillatingTableau {
    let step_set = d.step_set();
    let arcs = d.arc_diagram();
    let n = arcs.n();
    let roles = arcs.roles();
    let mut filling = InsertionFilling::new();
    let mut shapes: Vec<Shape> = Vec::with_capacity(2 * n + 1);
    shapes.push(Shape::empty());
    for i in (1..=n).rev() {
        let role = roles[i];
        let opens = role.origin_of.is_some() || role.looped;
        let closes_from = if role.looped { Some(i) } else { role.endpoint_of };
        // which half-step slot holds the addition and which the removal
        let (odd, even) = match (step_set, opens, closes_from.is_some()) {
            (_, false, false) => (None, None),
            (_, true, false) => (None, Some(Slot::Add)),
            (_, false, true) => (Some(Slot::Remove), None),
            (StepSet::Partition, true, true) => (Some(Slot::Remove), Some(Slot::Add)),
            (StepSet::Braid, true, true) => (Some(Slot::Add), Some(Slot::Remove)),
        };
        for slot in [even, odd] {
            match slot {
                Some(Slot::Add) => {
                    filling.remove_corner_entry(i).expect("largest entry sits in a corner");
                }
                Some(Slot::Remove) => {
                    filling.row_insert(closes_from.expect("closing vertex"));
                }
                None => {}
            }
            shapes.push(filling.shape());
        }
    }
    shapes.reverse();
    VacillatingTableau::new(shapes, step_set)
}
