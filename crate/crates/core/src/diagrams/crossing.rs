use super::{Arc, BraidDiagram, PartitionDiagram};

/// Size of the largest set of mutually crossing arcs.
///
/// For partitions the arcs `(i_1,j_1),…,(i_m,j_m)` must satisfy
/// `i_1 < … < i_m < j_1 < … < j_m`. For braids `i_m = j_1` is also allowed,
/// since arcs meeting at a vertex are drawn crossing there.
pub trait CrossingStatistic {
    fn max_crossing(&self) -> usize;

    /// No `k` arcs cross mutually.
    fn is_k_noncrossing(&self, k: usize) -> bool {
        self.max_crossing() < k
    }
}

impl CrossingStatistic for PartitionDiagram {
    fn max_crossing(&self) -> usize {
        max_mutually_crossing(self.n(), self.arcs(), false)
    }
}

impl CrossingStatistic for BraidDiagram {
    fn max_crossing(&self) -> usize {
        max_mutually_crossing(self.n(), self.arcs(), true)
    }
}

/// A mutually crossing family is exactly a family whose arcs all span one
/// common gap and whose left and right endpoints increase together. So for
/// each gap we take the spanning arcs (already sorted by left endpoint) and
/// the longest strictly increasing run of right endpoints.
///
/// With `touching`, the gap is the vertex `v` itself (`i <= v <= j`), which
/// admits the shared-endpoint case; otherwise it lies between `v` and `v+1`.
pub(crate) fn max_mutually_crossing(n: usize, arcs: &[Arc], touching: bool) -> usize {
    if arcs.is_empty() {
        return 0;
    }
    let mut best = 1;
    let mut rights = Vec::with_capacity(arcs.len());
    for v in 1..=n {
        rights.clear();
        rights.extend(
            arcs.iter()
                .take_while(|a| a.left <= v)
                .filter(|a| !a.is_loop() && (a.right > v || (touching && a.right == v)))
                .map(|a| a.right),
        );
        if rights.len() > best {
            best = best.max(longest_increasing(&rights));
        }
    }
    best
}

fn longest_increasing(seq: &[usize]) -> usize {
    // tails[l] = smallest tail of an increasing run of length l + 1
    let mut tails: Vec<usize> = Vec::with_capacity(seq.len());
    for &x in seq {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(pos) if pos == tails.len() => tails.push(x),
            Err(pos) => tails[pos] = x,
        }
    }
    tails.len()
}

/// Brute-force crossing number over all arc subsets; exponential, for tests
/// and verification suites only.
pub fn max_crossing_subset_oracle(arcs: &[Arc], touching: bool) -> usize {
    let crosses = |a: &Arc, b: &Arc| {
        let (a, b) = if a.left < b.left { (a, b) } else { (b, a) };
        if a.is_loop() || b.is_loop() {
            return false;
        }
        (a.left < b.left && b.left < a.right && a.right < b.right)
            || (touching && a.left < b.left && b.left == a.right && a.right < b.right)
    };
    let m = arcs.len();
    assert!(m < 24, "subset oracle is exponential");
    let mut best = usize::from(m > 0);
    for mask in 1u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let chosen: Vec<&Arc> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| &arcs[i]).collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, a)| chosen[i + 1..].iter().all(|b| crosses(a, b)));
        if ok {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, arcs: &[(usize, usize)]) -> PartitionDiagram {
        PartitionDiagram::new(n, arcs.iter().copied()).unwrap()
    }

    fn braid(n: usize, arcs: &[(usize, usize)]) -> BraidDiagram {
        BraidDiagram::new(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(part(6, &[(1, 4), (2, 5), (3, 6)]).max_crossing(), 3);
        assert_eq!(part(4, &[]).max_crossing(), 0);
        assert_eq!(part(5, &[(1, 3), (3, 5), (2, 4)]).max_crossing(), 2);
    }

    #[test]
    fn braid_examples() {
        assert_eq!(braid(3, &[(1, 2), (2, 3)]).max_crossing(), 2);
        assert_eq!(braid(1, &[(1, 1)]).max_crossing(), 1);
        assert_eq!(braid(5, &[(1, 3), (2, 4), (3, 5)]).max_crossing(), 3);
        // same arcs as a partition only reach 2
        assert_eq!(part(5, &[(1, 3), (2, 4), (3, 5)]).max_crossing(), 2);
    }

    #[test]
    fn k_noncrossing_examples() {
        assert!(!part(6, &[(1, 4), (2, 5), (3, 6)]).is_k_noncrossing(3));
        assert!(part(3, &[]).is_k_noncrossing(3));
        assert!(part(4, &[(1, 3), (2, 4)]).is_k_noncrossing(3));
    }

    #[test]
    fn chain_without_common_gap_is_not_a_crossing_set() {
        // (1,3)~(2,5) and (2,5)~(4,6) cross, but (1,3) and (4,6) do not
        let p = part(6, &[(1, 3), (2, 5), (4, 6)]);
        assert_eq!(p.max_crossing(), 2);
        assert_eq!(max_crossing_subset_oracle(p.arcs(), false), 2);
    }

    #[test]
    fn lis() {
        assert_eq!(longest_increasing(&[]), 0);
        assert_eq!(longest_increasing(&[3, 1, 2, 5, 4]), 3);
        assert_eq!(longest_increasing(&[2, 2, 2]), 1);
    }
}
