//! Vertex partitions: part weights, the δ-balance test, cut cost and a
//! greedy balancer.

use crate::error::{Error, Result};
use crate::hypergraph::{to_one_based, Hypergraph};
use crate::scalar::Scalar;

/// Disjoint vertex groups over a parent hypergraph with a balance factor.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionEnsemble<'a, T> {
    parent: &'a Hypergraph<T>,
    parts: Vec<Vec<usize>>,
    delta: T,
}

/// Outcome of [`PartitionEnsemble::is_balanced`].
#[derive(Debug, Clone, PartialEq)]
pub struct BalanceReport<T> {
    pub part_weights: Vec<T>,
    /// Average part weight `f̄`.
    pub mean: T,
    /// `(1 + δ) f̄`; every part must stay strictly below it.
    pub bound: T,
    pub within_bound: Vec<bool>,
    pub balanced: bool,
}

/// Checks `f_k < (1 + δ) f̄` for every part, averaging over the part count.
pub fn balance_report<T: Scalar>(part_weights: &[T], delta: T) -> Result<BalanceReport<T>> {
    if part_weights.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let total = part_weights.iter().fold(T::zero(), |acc, &w| acc + w);
    let mean = total / T::from_count(part_weights.len());
    let bound = (T::one() + delta) * mean;
    let within_bound: Vec<bool> = part_weights.iter().map(|&w| w < bound).collect();
    Ok(BalanceReport {
        part_weights: part_weights.to_vec(),
        mean,
        bound,
        balanced: within_bound.iter().all(|&ok| ok),
        within_bound,
    })
}

impl<'a, T: Scalar> PartitionEnsemble<'a, T> {
    /// Parts hold 0-based vertex indices. They must be pairwise disjoint but
    /// need not cover every vertex.
    pub fn new(parent: &'a Hypergraph<T>, parts: Vec<Vec<usize>>, delta: T) -> Result<Self> {
        if !(delta > T::zero() && delta < T::one()) {
            return Err(Error::InvalidDelta);
        }
        let mut seen = vec![false; parent.n_vertices()];
        for part in &parts {
            for &v in part {
                if v >= parent.n_vertices() {
                    return Err(Error::VertexOutOfRange {
                        edge: 0,
                        vertex: to_one_based(v),
                        n_vertices: parent.n_vertices(),
                    });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::OverlappingParts {
                        vertex: to_one_based(v),
                    });
                }
            }
        }
        Ok(Self {
            parent,
            parts,
            delta,
        })
    }

    pub fn parent(&self) -> &'a Hypergraph<T> {
        self.parent
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn n_parts(&self) -> usize {
        self.parts.len()
    }

    /// Part index of every vertex, `None` where unassigned.
    pub fn assignment(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.parent.n_vertices()];
        for (k, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = Some(k);
            }
        }
        owner
    }

    pub fn covers_all_vertices(&self) -> bool {
        self.assignment().iter().all(Option::is_some)
    }

    /// `f_ω^k`: total vertex weight of part `k`.
    pub fn part_weight(&self, k: usize) -> Result<T> {
        let part = self.parts.get(k).ok_or(Error::PartIndex {
            index: k,
            parts: self.parts.len(),
        })?;
        let weights = self.parent.vertex_weights();
        Ok(part.iter().fold(T::zero(), |acc, &v| acc + weights[v]))
    }

    pub fn part_weights(&self) -> Vec<T> {
        (0..self.parts.len())
            .map(|k| self.part_weight(k).expect("index in range"))
            .collect()
    }

    pub fn is_balanced(&self) -> Result<BalanceReport<T>> {
        balance_report(&self.part_weights(), self.delta)
    }

    /// Sum of `|e| - 1` over hyperedges whose members fall in two or more
    /// parts. Fails if an edge touches an unassigned vertex.
    pub fn cut_cost(&self) -> Result<usize> {
        let owner = self.assignment();
        let mut cost = 0;
        for e in self.parent.edges() {
            let mut first = None;
            let mut cut = false;
            for &v in e.members() {
                let k = owner[v].ok_or(Error::UnassignedVertex {
                    vertex: to_one_based(v),
                })?;
                match first {
                    None => first = Some(k),
                    Some(f) if f != k => cut = true,
                    Some(_) => {}
                }
            }
            if cut {
                cost += e.len() - 1;
            }
        }
        Ok(cost)
    }
}

/// Result of [`greedy_balance`]: always a covering partition, flagged with
/// whether it meets the balance bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyPartition<'a, T> {
    pub ensemble: PartitionEnsemble<'a, T>,
    pub balanced: bool,
}

/// Assigns vertices in order of decreasing weight (ties: lower index first)
/// to the currently lightest part (ties: lower part index).
pub fn greedy_balance<T: Scalar>(
    h: &Hypergraph<T>,
    n_parts: usize,
    delta: T,
) -> Result<GreedyPartition<'_, T>> {
    if n_parts < 1 || n_parts > h.n_vertices() {
        return Err(Error::InvalidPartCount {
            n_parts,
            n_vertices: h.n_vertices(),
        });
    }
    let weights = h.vertex_weights();
    let mut order: Vec<usize> = (0..h.n_vertices()).collect();
    order.sort_by(|&a, &b| {
        weights[b]
            .partial_cmp(&weights[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });

    let mut parts = vec![Vec::new(); n_parts];
    let mut loads = vec![T::zero(); n_parts];
    for v in order {
        let mut lightest = 0;
        for k in 1..n_parts {
            if loads[k] < loads[lightest] {
                lightest = k;
            }
        }
        parts[lightest].push(v);
        loads[lightest] = loads[lightest] + weights[v];
    }
    for part in &mut parts {
        part.sort_unstable();
    }

    let ensemble = PartitionEnsemble::new(h, parts, delta)?;
    let balanced = ensemble.is_balanced()?.balanced;
    Ok(GreedyPartition { ensemble, balanced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn four_vertex() -> Hypergraph<f64> {
        Hypergraph::from_one_based(
            4,
            None,
            [
                (vec![1, 2, 3], 1.0),
                (vec![2, 3, 4], 2.0),
                (vec![1, 4], 3.0),
            ],
        )
        .unwrap()
    }

    fn parts(spec: &[&[usize]]) -> Vec<Vec<usize>> {
        spec.iter()
            .map(|p| p.iter().map(|&v| v - 1).collect())
            .collect()
    }

    #[test]
    fn part_weights() {
        let g = Hypergraph::<f64>::new(4, None, vec![]).unwrap();
        let p = PartitionEnsemble::new(&g, parts(&[&[1, 2, 3], &[]]), 0.1).unwrap();
        assert_eq!(p.part_weight(0), Ok(3.0));
        assert_eq!(p.part_weight(1), Ok(0.0));
        assert_eq!(
            p.part_weight(2),
            Err(Error::PartIndex { index: 2, parts: 2 })
        );

        let g = Hypergraph::<f64>::new(4, Some(vec![1.0, 2.0, 3.0, 4.0]), vec![]).unwrap();
        let p = PartitionEnsemble::new(&g, parts(&[&[2, 4]]), 0.1).unwrap();
        assert_eq!(p.part_weight(0), Ok(6.0));
    }

    #[test]
    fn balance_exact_arithmetic() {
        let w: Vec<Ratio<i64>> = [3, 3, 2].iter().map(|&x| Ratio::from_integer(x)).collect();
        let r = balance_report(&w, Ratio::new(1, 5)).unwrap();
        assert_eq!(r.mean, Ratio::new(8, 3));
        assert_eq!(r.bound, Ratio::new(16, 5));
        assert!(r.balanced);
        let r = balance_report(&w, Ratio::new(1, 10)).unwrap();
        assert_eq!(r.bound, Ratio::new(44, 15));
        assert_eq!(r.within_bound, vec![false, false, true]);
        assert!(!r.balanced);
    }

    #[test]
    fn single_part_is_balanced() {
        let r = balance_report(&[5.0], 0.01).unwrap();
        assert!(r.balanced);
        assert_eq!(balance_report::<f64>(&[], 0.5), Err(Error::EmptyEnsemble));
    }

    #[test]
    fn ensemble_validation() {
        let g = four_vertex();
        assert_eq!(
            PartitionEnsemble::new(&g, parts(&[&[1, 2], &[2]]), 0.1),
            Err(Error::OverlappingParts { vertex: 2 })
        );
        assert_eq!(
            PartitionEnsemble::new(&g, parts(&[&[1]]), 1.0),
            Err(Error::InvalidDelta)
        );
        assert_eq!(
            PartitionEnsemble::new(&g, parts(&[&[1]]), 0.0),
            Err(Error::InvalidDelta)
        );
        assert!(PartitionEnsemble::new(&g, vec![vec![4]], 0.5).is_err());
    }

    #[test]
    fn cut_costs() {
        let g = four_vertex();
        let p = PartitionEnsemble::new(&g, parts(&[&[1, 2], &[3, 4]]), 0.1).unwrap();
        assert_eq!(p.cut_cost(), Ok(5));
        let p = PartitionEnsemble::new(&g, parts(&[&[1, 2, 3, 4]]), 0.1).unwrap();
        assert_eq!(p.cut_cost(), Ok(0));
        let p = PartitionEnsemble::new(&g, parts(&[&[1], &[2], &[3], &[4]]), 0.1).unwrap();
        assert_eq!(p.cut_cost(), Ok(5));
        let p = PartitionEnsemble::new(&g, parts(&[&[1, 4], &[2, 3]]), 0.1).unwrap();
        assert_eq!(p.cut_cost(), Ok(4));
        let p = PartitionEnsemble::new(&g, parts(&[&[1, 4]]), 0.1).unwrap();
        assert_eq!(p.cut_cost(), Err(Error::UnassignedVertex { vertex: 2 }));
    }

    #[test]
    fn greedy() {
        let g = Hypergraph::<f64>::new(4, None, vec![]).unwrap();
        let r = greedy_balance(&g, 2, 0.05).unwrap();
        assert_eq!(r.ensemble.parts(), &[vec![0, 2], vec![1, 3]]);
        assert!(r.balanced);

        let g = Hypergraph::<f64>::new(4, Some(vec![4.0, 1.0, 1.0, 1.0]), vec![]).unwrap();
        let r = greedy_balance(&g, 2, 0.1).unwrap();
        assert_eq!(r.ensemble.parts(), &parts(&[&[1], &[2, 3, 4]])[..]);
        assert_eq!(r.ensemble.part_weights(), vec![4.0, 3.0]);
        assert!(!r.balanced);

        let r = greedy_balance(&g, 4, 0.1).unwrap();
        assert!(r.ensemble.parts().iter().all(|p| p.len() == 1));
        assert!(r.ensemble.covers_all_vertices());

        assert!(matches!(
            greedy_balance(&g, 0, 0.1),
            Err(Error::InvalidPartCount { .. })
        ));
        assert!(matches!(
            greedy_balance(&g, 5, 0.1),
            Err(Error::InvalidPartCount { .. })
        ));
    }
}
