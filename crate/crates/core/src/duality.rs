//! The duality between partitions over `[n]` and braids over `[n-1]`.
//!
//! The map contracts every arc by one on the right: `(i, j)` becomes
//! `(i, j - 1)`. Arcs `(i, i + 1)` turn into loops, and a vertex that closes
//! one arc and opens another acquires the braid crossing at that vertex. The
//! map preserves k-noncrossing in both directions.
//!
//! [`theta_direct`] is the production path. [`theta_tableau`] computes the
//! same map through tableaux: it shifts the step pairs of the partition
//! tableau by half a vertex ([`phi1`]), transposes the single steps
//! ([`phi2`]) and reads the result as a braid tableau.

use serde::Serialize;

use crate::diagrams::{Arc, ArcDiagram, BraidDiagram, CrossingStatistic, PartitionDiagram};
use crate::error::{Error, Result};
use crate::tableaux::{
    diagram_to_tableau, tableau_to_diagram, Diagram, HalfStep, Shape, StepPair, StepSet, VacillatingTableau,
};

pub fn theta_direct(p: &PartitionDiagram) -> Result<BraidDiagram> {
    if p.n() == 0 {
        return Err(Error::Precondition("the duality needs n >= 1".into()));
    }
    let arcs = p.arcs().iter().map(|a| Arc::new(a.left, a.right - 1)).collect();
    let image = ArcDiagram::from_sorted_unchecked(p.n() - 1, arcs);
    debug_assert!(BraidDiagram::try_from(image.clone()).is_ok());
    Ok(BraidDiagram::from_diagram_unchecked(image))
}

pub fn theta_inverse_direct(b: &BraidDiagram) -> PartitionDiagram {
    let arcs: Vec<Arc> = b.arcs().iter().map(|a| Arc::new(a.left, a.right + 1)).collect();
    PartitionDiagram::new(b.n() + 1, arcs).expect("stretched braid arcs form a partition")
}

/// Shifts the odd half-steps one vertex to the left: pair `i` of the output
/// is `(y_i, x_{i+1})`. Requires `x_1 = y_n = ∅`.
pub fn phi1(pairs: &[StepPair]) -> Result<Vec<StepPair>> {
    let (Some(first), Some(last)) = (pairs.first(), pairs.last()) else {
        return Err(Error::Precondition("phi1 needs at least one step pair".into()));
    };
    if !first.odd.is_stay() || !last.even.is_stay() {
        return Err(Error::Precondition(format!(
            "phi1 needs x_1 = y_n = ∅, got x_1 = {} and y_n = {}",
            first.odd, last.even
        )));
    }
    Ok(pairs.windows(2).map(|w| StepPair::new(w[0].even, w[1].odd)).collect())
}

/// Transposes every pair except `(+□, −□)`.
pub fn phi2(pairs: &[StepPair]) -> Result<Vec<StepPair>> {
    pairs.iter().map(|&p| phi2_pair(p)).collect()
}

pub fn phi2_pair(pair: StepPair) -> Result<StepPair> {
    use HalfStep::*;
    match (pair.odd, pair.even) {
        (Add(_), Remove(_)) => Ok(pair),
        (Stay, Stay) | (Add(_), Stay) | (Stay, Remove(_)) => Ok(pair.transposed()),
        _ => Err(Error::Precondition(format!("{pair} is outside the domain of phi2"))),
    }
}

/// Intermediate data of the tableau route.
#[derive(Clone, Debug)]
pub struct TableauTrace {
    pub partition_tableau: VacillatingTableau,
    pub braid_tableau: VacillatingTableau,
    pub image: BraidDiagram,
}

impl TableauTrace {
    /// The shape relations between the two tableaux: `μ²ʲ = λ²ʲ⁺¹` for every
    /// `j`, and whenever `μ²ʲ⁺¹ ≠ λ²ʲ⁺²` then `μ²ʲ⁺¹` is `λ²ʲ⁺¹` or `λ²ʲ⁺³`.
    pub fn shape_relations_hold(&self) -> bool {
        let lambda = self.partition_tableau.shapes();
        let mu = self.braid_tableau.shapes();
        if mu.len() + 2 != lambda.len() {
            return false;
        }
        let even_ok = (0..mu.len()).step_by(2).all(|j| mu[j] == lambda[j + 1]);
        let odd_ok = (1..mu.len()).step_by(2).all(|j| {
            // j = 2m + 1 pairs with λ^{2m+2}, λ^{2m+1}, λ^{2m+3}
            mu[j] == lambda[j + 1] || mu[j] == lambda[j] || mu[j] == lambda[j + 2]
        });
        even_ok && odd_ok
    }
}

pub fn theta_tableau(p: &PartitionDiagram) -> Result<BraidDiagram> {
    theta_tableau_trace(p).map(|t| t.image)
}

pub fn theta_tableau_trace(p: &PartitionDiagram) -> Result<TableauTrace> {
    if p.n() == 0 {
        return Err(Error::Precondition("the duality needs n >= 1".into()));
    }
    let partition_tableau = diagram_to_tableau(&Diagram::Partition(p.clone()));
    let pairs = phi2(&phi1(&partition_tableau.step_pairs()?)?)?;
    let braid_tableau = VacillatingTableau::from_step_pairs(&pairs, StepSet::Braid)?;
    let image = tableau_to_diagram(&braid_tableau)?
        .into_braid()
        .expect("braid tableau yields a braid");
    Ok(TableauTrace {
        partition_tableau,
        braid_tableau,
        image,
    })
}

/// Restriction to 2-regular partitions, landing in braids without isolated
/// points.
///
/// A 2-regular partition has no arc `(i, i + 1)`, so its contraction has no
/// loops; its isolated vertices are then turned into loops, which is the
/// identification of loop-free braids with braids without isolated points.
/// For example the two singletons over `[2]` contract to the bare vertex over
/// `[1]`, which becomes the loop `(1,1)`.
pub fn theta_restricted(p: &PartitionDiagram, k: usize) -> Result<BraidDiagram> {
    if !p.is_two_regular() {
        return Err(Error::Precondition(format!("{p} is not 2-regular")));
    }
    if !p.is_k_noncrossing(k) {
        return Err(Error::Precondition(format!("{p} is not {k}-noncrossing")));
    }
    let contracted = theta_direct(p)?;
    debug_assert!(!contracted.has_loops());
    let image = BraidDiagram::from_flat_partition(&contracted.to_flat_partition());
    debug_assert!(!image.has_isolated_points() && image.is_k_noncrossing(k));
    Ok(image)
}

pub fn theta_restricted_inverse(b: &BraidDiagram, k: usize) -> Result<PartitionDiagram> {
    if b.has_isolated_points() {
        return Err(Error::Precondition(format!("{b} has isolated points")));
    }
    if !b.is_k_noncrossing(k) {
        return Err(Error::Precondition(format!("{b} is not {k}-noncrossing")));
    }
    Ok(theta_inverse_direct(&b.to_flat_partition().as_braid()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityRoute {
    Direct,
    Tableau,
}

/// A partition together with its image under one route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityWitness {
    pub source: PartitionDiagram,
    pub image: BraidDiagram,
    pub route: DualityRoute,
}

impl DualityWitness {
    pub fn new(source: PartitionDiagram, route: DualityRoute) -> Result<Self> {
        let image = match route {
            DualityRoute::Direct => theta_direct(&source)?,
            DualityRoute::Tableau => theta_tableau(&source)?,
        };
        Ok(DualityWitness { source, image, route })
    }

    /// `(i, j)` is an arc of the source iff `(i, j - 1)` is an arc of the image.
    pub fn arc_property_holds(&self) -> bool {
        self.image.n() + 1 == self.source.n()
            && self.image.arcs().len() == self.source.arcs().len()
            && self
                .source
                .arcs()
                .iter()
                .all(|a| self.image.contains(a.left, a.right - 1))
    }

    /// Origins stay put and endpoints move one vertex left.
    pub fn endpoint_shift_holds(&self) -> bool {
        let src = self.source.roles();
        let img = self.image.roles();
        (1..=self.image.n()).all(|j| {
            let img_origin = img[j].origin_of.is_some() || img[j].looped;
            let img_endpoint = img[j].endpoint_of.is_some() || img[j].looped;
            img_origin == src[j].origin_of.is_some() && img_endpoint == src[j + 1].endpoint_of.is_some()
        }) && src[1].endpoint_of.is_none()
            && src[self.source.n()].origin_of.is_none()
    }
}

/// Shapes of the tableau route never use more rows than the source tableau.
pub fn max_rows(shapes: &[Shape]) -> usize {
    shapes.iter().map(Shape::row_count).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use HalfStep::*;

    fn part(n: usize, arcs: &[(usize, usize)]) -> PartitionDiagram {
        PartitionDiagram::new(n, arcs.iter().copied()).unwrap()
    }

    fn braid(n: usize, arcs: &[(usize, usize)]) -> BraidDiagram {
        BraidDiagram::new(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn theta_direct_examples() {
        assert_eq!(theta_direct(&part(2, &[(1, 2)])).unwrap(), braid(1, &[(1, 1)]));
        assert_eq!(theta_direct(&part(5, &[])).unwrap(), braid(4, &[]));
        let image = theta_direct(&part(4, &[(1, 3), (2, 4)])).unwrap();
        assert_eq!(image, braid(3, &[(1, 2), (2, 3)]));
        assert_eq!(image.max_crossing(), 2);
        assert!(theta_direct(&part(0, &[])).is_err());
    }

    #[test]
    fn theta_inverse_examples() {
        assert_eq!(theta_inverse_direct(&braid(1, &[(1, 1)])), part(2, &[(1, 2)]));
        assert_eq!(theta_inverse_direct(&braid(3, &[])), part(4, &[]));
        assert_eq!(
            theta_inverse_direct(&braid(3, &[(1, 2), (2, 3)])),
            part(4, &[(1, 3), (2, 4)])
        );
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1(&[StepPair::new(Stay, Stay)]).unwrap(), vec![]);
        let pairs = [StepPair::new(Stay, Add(1)), StepPair::new(Remove(1), Stay)];
        assert_eq!(phi1(&pairs).unwrap(), vec![StepPair::new(Add(1), Remove(1))]);
        let pairs = [
            StepPair::new(Stay, Add(1)),
            StepPair::new(Remove(1), Add(1)),
            StepPair::new(Remove(1), Stay),
        ];
        assert_eq!(
            phi1(&pairs).unwrap(),
            vec![StepPair::new(Add(1), Remove(1)), StepPair::new(Add(1), Remove(1))]
        );
        assert!(phi1(&[StepPair::new(Remove(1), Stay)]).is_err());
        assert!(phi1(&[]).is_err());
    }

    #[test]
    fn phi2_examples() {
        assert_eq!(
            phi2_pair(StepPair::new(Add(1), Remove(1))).unwrap(),
            StepPair::new(Add(1), Remove(1))
        );
        assert_eq!(
            phi2_pair(StepPair::new(Stay, Remove(2))).unwrap(),
            StepPair::new(Remove(2), Stay)
        );
        assert_eq!(phi2_pair(StepPair::new(Stay, Stay)).unwrap(), StepPair::new(Stay, Stay));
        assert!(phi2_pair(StepPair::new(Remove(1), Add(1))).is_err());
    }

    #[test]
    fn theta_tableau_examples() {
        assert_eq!(theta_tableau(&part(2, &[(1, 2)])).unwrap(), braid(1, &[(1, 1)]));
        assert_eq!(theta_tableau(&part(1, &[])).unwrap(), braid(0, &[]));
        let p = part(6, &[(1, 4), (2, 5), (3, 6)]);
        let trace = theta_tableau_trace(&p).unwrap();
        assert_eq!(trace.image, theta_direct(&p).unwrap());
        assert!(trace.shape_relations_hold());
        assert_eq!(max_rows(trace.braid_tableau.shapes()), 3);
    }

    #[test]
    fn theta_restricted_examples() {
        assert_eq!(theta_restricted(&part(3, &[(1, 3)]), 3).unwrap(), braid(2, &[(1, 2)]));
        assert_eq!(theta_restricted(&part(2, &[]), 3).unwrap(), braid(1, &[(1, 1)]));
        let image = theta_restricted(&part(4, &[(1, 3), (2, 4)]), 3).unwrap();
        assert_eq!(image, braid(3, &[(1, 2), (2, 3)]));
        assert!(!image.has_isolated_points());
        assert!(theta_restricted(&part(2, &[(1, 2)]), 3).is_err());
        assert!(theta_restricted(&part(6, &[(1, 4), (2, 5), (3, 6)]), 3).is_err());
    }

    #[test]
    fn theta_restricted_round_trip() {
        let b = braid(2, &[(1, 2)]);
        assert_eq!(theta_restricted_inverse(&b, 3).unwrap(), part(3, &[(1, 3)]));
        assert_eq!(theta_restricted_inverse(&braid(1, &[(1, 1)]), 3).unwrap(), part(2, &[]));
        assert!(theta_restricted_inverse(&braid(2, &[(1, 1)]), 3).is_err());
    }

    #[test]
    fn witness_properties() {
        let w = DualityWitness::new(part(5, &[(1, 2), (2, 4), (3, 5)]), DualityRoute::Tableau).unwrap();
        assert!(w.arc_property_holds());
        assert!(w.endpoint_shift_holds());
    }
}
