//! Arc diagrams over `[n]` and the two classes used throughout the crate.
//!
//! An [`ArcDiagram`] is a graph on the vertices `1..=n` drawn on a line, with
//! arcs `(i, j)`, `i <= j`, in the upper half plane. A loop `(j, j)` counts
//! twice towards the degree of `j`, and no vertex has degree above two.
//!
//! * [`PartitionDiagram`]: no loops, every vertex is the left endpoint of at
//!   most one arc and the right endpoint of at most one arc. The arcs join
//!   consecutive elements of the blocks of a set partition.
//! * [`BraidDiagram`]: the same endpoint discipline, but loops are allowed on
//!   vertices that carry no other arc. Two arcs `(i, j)` and `(j, h)` sharing
//!   the middle vertex are drawn crossing, so they count as a crossing pair.
//!
//! Arcs are kept sorted, which makes equality and hashing structural.

mod crossing;
mod text;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use crossing::{max_crossing_subset_oracle, CrossingStatistic};

/// An arc `(left, right)` with `1 <= left <= right`; `left == right` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub const fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }

    pub const fn is_loop(&self) -> bool {
        self.left == self.right
    }
}

impl From<(usize, usize)> for Arc {
    fn from((left, right): (usize, usize)) -> Self {
        Arc { left, right }
    }
}

/// A labelled graph over `[n]` with maximum degree two, arcs in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Builds a diagram, sorting the arcs and checking the degree bound.
    pub fn new<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        let mut arcs: Vec<Arc> = arcs.into_iter().map(Into::into).collect();
        arcs.sort_unstable();
        let mut degree = vec![0usize; n + 1];
        for (idx, arc) in arcs.iter().enumerate() {
            if arc.left == 0 || arc.left > arc.right || arc.right > n {
                return Err(Error::InvalidDiagram(format!(
                    "arc ({},{}) is not an arc over [{}]",
                    arc.left, arc.right, n
                )));
            }
            if idx > 0 && arcs[idx - 1] == *arc {
                return Err(Error::InvalidDiagram(format!(
                    "arc ({},{}) occurs twice",
                    arc.left, arc.right
                )));
            }
            degree[arc.left] += 1;
            degree[arc.right] += 1;
        }
        if let Some(v) = (1..=n).find(|&v| degree[v] > 2) {
            return Err(Error::InvalidDiagram(format!("vertex {v} has degree {}", degree[v])));
        }
        Ok(ArcDiagram { n, arcs })
    }

    /// The diagram over `[n]` without arcs.
    pub fn empty(n: usize) -> Self {
        ArcDiagram { n, arcs: Vec::new() }
    }

    /// Caller guarantees sorted, in-range arcs respecting the degree bound.
    pub(crate) fn from_sorted_unchecked(n: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        ArcDiagram { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn contains(&self, left: usize, right: usize) -> bool {
        self.arcs.binary_search(&Arc::new(left, right)).is_ok()
    }

    /// Degrees indexed by vertex; index 0 is unused.
    pub fn degrees(&self) -> Vec<usize> {
        let mut degree = vec![0usize; self.n + 1];
        for arc in &self.arcs {
            degree[arc.left] += 1;
            degree[arc.right] += 1;
        }
        degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.arcs
            .iter()
            .map(|a| usize::from(a.left == v) + usize::from(a.right == v))
            .sum()
    }

    /// Per-vertex role table: index `v` describes vertex `v`.
    pub fn roles(&self) -> Vec<VertexRole> {
        let mut roles = vec![VertexRole::default(); self.n + 1];
        for arc in &self.arcs {
            if arc.is_loop() {
                roles[arc.left].looped = true;
            } else {
                roles[arc.left].origin_of = Some(arc.right);
                roles[arc.right].endpoint_of = Some(arc.left);
            }
        }
        roles
    }

    fn check_endpoint_discipline(&self) -> std::result::Result<(), String> {
        let mut lefts = vec![false; self.n + 1];
        let mut rights = vec![false; self.n + 1];
        for arc in self.arcs.iter().filter(|a| !a.is_loop()) {
            if std::mem::replace(&mut lefts[arc.left], true) {
                return Err(format!("vertex {} is the left endpoint of two arcs", arc.left));
            }
            if std::mem::replace(&mut rights[arc.right], true) {
                return Err(format!("vertex {} is the right endpoint of two arcs", arc.right));
            }
        }
        Ok(())
    }
}

/// How a vertex participates in the arcs of a partition or braid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VertexRole {
    /// Right partner if the vertex opens a non-loop arc.
    pub origin_of: Option<usize>,
    /// Left partner if the vertex closes a non-loop arc.
    pub endpoint_of: Option<usize>,
    pub looped: bool,
}

impl VertexRole {
    pub fn is_isolated(&self) -> bool {
        self.origin_of.is_none() && self.endpoint_of.is_none() && !self.looped
    }
}

/// Arc form of a set partition of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram(ArcDiagram);

impl PartitionDiagram {
    pub fn new<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        Self::try_from(ArcDiagram::new(n, arcs)?)
    }

    /// Builds the arc form of the set partition encoded by a restricted growth
    /// string: vertex `v` lies in block `rgs[v - 1]`.
    pub fn from_restricted_growth(rgs: &[usize]) -> Self {
        let n = rgs.len();
        let mut last = vec![0usize; n + 1];
        let mut arcs = Vec::with_capacity(n);
        for (idx, &block) in rgs.iter().enumerate() {
            let v = idx + 1;
            if last[block] != 0 {
                arcs.push(Arc::new(last[block], v));
            }
            last[block] = v;
        }
        arcs.sort_unstable();
        PartitionDiagram(ArcDiagram::from_sorted_unchecked(n, arcs))
    }

    pub fn from_blocks(blocks: &SetPartitionBlocks) -> Self {
        let mut arcs: Vec<Arc> = blocks
            .blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        PartitionDiagram(ArcDiagram::from_sorted_unchecked(blocks.n(), arcs))
    }

    /// Connected components of the arc graph, as canonical blocks.
    pub fn to_blocks(&self) -> SetPartitionBlocks {
        let roles = self.roles();
        let blocks = (1..=self.n())
            .filter(|&v| roles[v].endpoint_of.is_none())
            .map(|start| {
                let mut block = vec![start];
                let mut v = start;
                while let Some(next) = roles[v].origin_of {
                    block.push(next);
                    v = next;
                }
                block
            })
            .collect();
        SetPartitionBlocks { n: self.n(), blocks }
    }

    /// True iff no arc joins two neighbouring vertices.
    pub fn is_two_regular(&self) -> bool {
        self.arcs().iter().all(|a| a.right != a.left + 1)
    }

    /// Largest crossing set when shared endpoints `i_k = j_1` count as crossings,
    /// i.e. the statistic of the same arcs read as a braid.
    pub fn braid_crossing_number(&self) -> usize {
        crossing::max_mutually_crossing(self.n(), self.arcs(), true)
    }

    /// The same arcs read under the braid convention; always a valid braid.
    pub fn as_braid(&self) -> BraidDiagram {
        BraidDiagram(self.0.clone())
    }

    pub fn into_inner(self) -> ArcDiagram {
        self.0
    }
}

impl TryFrom<ArcDiagram> for PartitionDiagram {
    type Error = Error;

    fn try_from(d: ArcDiagram) -> Result<Self> {
        if let Some(arc) = d.arcs.iter().find(|a| a.is_loop()) {
            return Err(Error::NotPartition(format!("loop ({},{})", arc.left, arc.right)));
        }
        d.check_endpoint_discipline().map_err(Error::NotPartition)?;
        Ok(PartitionDiagram(d))
    }
}

impl Deref for PartitionDiagram {
    type Target = ArcDiagram;

    fn deref(&self) -> &ArcDiagram {
        &self.0
    }
}

/// A braid: partition-like arcs plus loops on otherwise bare vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidDiagram(ArcDiagram);

impl BraidDiagram {
    pub fn new<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        Self::try_from(ArcDiagram::new(n, arcs)?)
    }

    pub(crate) fn from_diagram_unchecked(d: ArcDiagram) -> Self {
        BraidDiagram(d)
    }

    pub fn has_isolated_points(&self) -> bool {
        self.degrees().iter().skip(1).any(|&d| d == 0)
    }

    pub fn has_loops(&self) -> bool {
        self.arcs().iter().any(Arc::is_loop)
    }

    /// The braid read as a partition: loops are dropped, so looped vertices
    /// become isolated, and crossing pairs at a vertex become noncrossing.
    pub fn to_flat_partition(&self) -> PartitionDiagram {
        let arcs = self.arcs().iter().copied().filter(|a| !a.is_loop()).collect();
        PartitionDiagram(ArcDiagram::from_sorted_unchecked(self.n(), arcs))
    }

    /// Inverse of [`to_flat_partition`](Self::to_flat_partition) on braids
    /// without isolated points: every isolated vertex receives a loop.
    pub fn from_flat_partition(p: &PartitionDiagram) -> Self {
        let degree = p.degrees();
        let mut arcs: Vec<Arc> = p.arcs().to_vec();
        arcs.extend((1..=p.n()).filter(|&v| degree[v] == 0).map(|v| Arc::new(v, v)));
        arcs.sort_unstable();
        BraidDiagram(ArcDiagram::from_sorted_unchecked(p.n(), arcs))
    }

    pub fn into_inner(self) -> ArcDiagram {
        self.0
    }
}

impl TryFrom<ArcDiagram> for BraidDiagram {
    type Error = Error;

    fn try_from(d: ArcDiagram) -> Result<Self> {
        let degree = d.degrees();
        if let Some(arc) = d.arcs.iter().find(|a| a.is_loop() && degree[a.left] != 2) {
            return Err(Error::NotBraid(format!(
                "vertex {} carries a loop and another arc",
                arc.left
            )));
        }
        d.check_endpoint_discipline().map_err(Error::NotBraid)?;
        Ok(BraidDiagram(d))
    }
}

impl Deref for BraidDiagram {
    type Target = ArcDiagram;

    fn deref(&self) -> &ArcDiagram {
        &self.0
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for BraidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Block view of a set partition of `[n]`: blocks sorted internally and by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartitionBlocks {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionBlocks {
    /// Validates that the blocks are nonempty, disjoint, and cover `[n]` where
    /// `n` is the total number of elements.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = BTreeSet::new();
        let mut canonical = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidBlocks("empty block".into()));
            }
            block.sort_unstable();
            for &e in &block {
                if e == 0 || e > n {
                    return Err(Error::InvalidBlocks(format!("element {e} outside [{n}]")));
                }
                if !seen.insert(e) {
                    return Err(Error::InvalidBlocks(format!("element {e} in two blocks")));
                }
            }
            canonical.push(block);
        }
        canonical.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartitionBlocks { n, blocks: canonical })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}
