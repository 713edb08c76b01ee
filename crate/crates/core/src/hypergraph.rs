//! Weighted hypergraphs and their matrix algebra.
//!
//! Vertices are 0-based inside the library. External formats use 1-based
//! labels; [`to_one_based`] and [`from_one_based`] convert between the two.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// 0-based vertex index to its external 1-based label.
pub fn to_one_based(index: usize) -> usize {
    index + 1
}

/// 1-based external label to a 0-based index. `None` for label 0.
pub fn from_one_based(label: usize) -> Option<usize> {
    label.checked_sub(1)
}

/// A weighted vertex subset. Members are kept sorted and unique.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperedge<T> {
    members: Vec<usize>,
    weight: T,
}

impl<T: Scalar> Hyperedge<T> {
    /// Members are 0-based; duplicates collapse.
    pub fn new(members: impl IntoIterator<Item = usize>, weight: T) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members, weight }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn weight(&self) -> T {
        self.weight
    }

    /// Cardinality `|e|`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.members.binary_search(&vertex).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph<T> {
    vertex_weights: Vec<T>,
    edges: Vec<Hyperedge<T>>,
}

impl<T: Scalar> Hypergraph<T> {
    /// Validates members, edge weights and vertex weights. `None` means unit
    /// vertex weights.
    pub fn new(
        n_vertices: usize,
        vertex_weights: Option<Vec<T>>,
        edges: Vec<Hyperedge<T>>,
    ) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::NoVertices);
        }
        let vertex_weights = vertex_weights.unwrap_or_else(|| vec![T::one(); n_vertices]);
        if vertex_weights.len() != n_vertices {
            return Err(Error::LengthMismatch {
                what: "vertex weights",
                expected: n_vertices,
                got: vertex_weights.len(),
            });
        }
        if let Some(v) = vertex_weights.iter().position(|&w| !(w > T::zero())) {
            return Err(Error::NonPositiveWeight {
                what: format!("weight of vertex {}", to_one_based(v)),
            });
        }
        for (j, e) in edges.iter().enumerate() {
            if !(e.weight > T::zero()) {
                return Err(Error::NonPositiveWeight {
                    what: format!("weight of hyperedge {}", to_one_based(j)),
                });
            }
            if let Some(&v) = e.members.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::VertexOutOfRange {
                    edge: to_one_based(j),
                    vertex: to_one_based(v),
                    n_vertices,
                });
            }
        }
        Ok(Self {
            vertex_weights,
            edges,
        })
    }

    /// Same as [`Hypergraph::new`] but with 1-based member labels.
    pub fn from_one_based(
        n_vertices: usize,
        vertex_weights: Option<Vec<T>>,
        edges: impl IntoIterator<Item = (Vec<usize>, T)>,
    ) -> Result<Self> {
        let mut converted = Vec::new();
        for (j, (members, weight)) in edges.into_iter().enumerate() {
            let members = members
                .iter()
                .map(|&label| {
                    from_one_based(label).ok_or(Error::VertexOutOfRange {
                        edge: to_one_based(j),
                        vertex: label,
                        n_vertices,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            converted.push(Hyperedge::new(members, weight));
        }
        Self::new(n_vertices, vertex_weights, converted)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_weights(&self) -> &[T] {
        &self.vertex_weights
    }

    pub fn edges(&self) -> &[Hyperedge<T>] {
        &self.edges
    }

    pub fn edge_weights(&self) -> Vec<T> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    pub fn total_vertex_weight(&self) -> T {
        self.vertex_weights
            .iter()
            .fold(T::zero(), |acc, &w| acc + w)
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(Hyperedge::is_empty)
    }

    /// Converts every weight, e.g. from an exact type to a float.
    pub fn map_weights<U: Scalar>(&self, f: impl Fn(T) -> U) -> Hypergraph<U> {
        Hypergraph {
            vertex_weights: self.vertex_weights.iter().map(|&w| f(w)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Hyperedge {
                    members: e.members.clone(),
                    weight: f(e.weight),
                })
                .collect(),
        }
    }

    /// Sub-hypergraph on `vertices` (relabelled `0..vertices.len()` in the
    /// given order) keeping only hyperedges whose members all lie inside.
    /// Empty hyperedges are kept only when `keep_empty` is set.
    pub fn induced(&self, vertices: &[usize], keep_empty: bool) -> Result<Self> {
        let mut relabel = vec![None; self.n_vertices()];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= self.n_vertices() {
                return Err(Error::VertexOutOfRange {
                    edge: 0,
                    vertex: to_one_based(old),
                    n_vertices: self.n_vertices(),
                });
            }
            relabel[old] = Some(new);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| {
                (keep_empty || !e.is_empty()) && e.members.iter().all(|&v| relabel[v].is_some())
            })
            .map(|e| Hyperedge::new(e.members.iter().filter_map(|&v| relabel[v]), e.weight))
            .collect();
        let weights = vertices.iter().map(|&v| self.vertex_weights[v]).collect();
        Self::new(vertices.len(), Some(weights), edges)
    }

    /// Weighted vertex degrees `d(v) = Σ_e ω(e) h(v, e)`.
    pub fn vertex_degrees(&self) -> Vec<T> {
        let mut d = vec![T::zero(); self.n_vertices()];
        for e in &self.edges {
            for &v in &e.members {
                d[v] = d[v] + e.weight;
            }
        }
        d
    }

    /// Hyperedge degrees `d(e) = |e|`.
    pub fn edge_degrees(&self) -> Vec<T> {
        self.edges.iter().map(|e| T::from_count(e.len())).collect()
    }

    /// Per-hyperedge sum of member vertex weights.
    pub fn edge_weight_sums(&self) -> Vec<T> {
        self.edges
            .iter()
            .map(|e| {
                e.members
                    .iter()
                    .fold(T::zero(), |acc, &v| acc + self.vertex_weights[v])
            })
            .collect()
    }

    /// `n × m` 0/1 incidence matrix, columns in hyperedge order.
    pub fn incidence_matrix(&self) -> DenseMatrix<T> {
        let mut h = DenseMatrix::zeros(self.n_vertices(), self.n_edges());
        for (j, e) in self.edges.iter().enumerate() {
            for &v in &e.members {
                h[(v, j)] = T::one();
            }
        }
        h
    }

    pub fn vertex_degree_matrix(&self) -> DenseMatrix<T> {
        DenseMatrix::from_diagonal(&self.vertex_degrees())
    }

    pub fn edge_degree_matrix(&self) -> DenseMatrix<T> {
        DenseMatrix::from_diagonal(&self.edge_degrees())
    }

    /// Diagonal `W` of hyperedge weights.
    pub fn edge_weight_matrix(&self) -> DenseMatrix<T> {
        DenseMatrix::from_diagonal(&self.edge_weights())
    }

    /// Diagonal `f_ω` of per-edge vertex-weight sums.
    pub fn edge_weight_sum_matrix(&self) -> DenseMatrix<T> {
        DenseMatrix::from_diagonal(&self.edge_weight_sums())
    }

    /// `H · diag(edge_diag) · Hᵀ`.
    fn incidence_sandwich(&self, edge_diag: &DenseMatrix<T>) -> DenseMatrix<T> {
        let h = self.incidence_matrix();
        h.matmul(edge_diag).matmul(&h.transpose())
    }

    /// `A = H W Hᵀ − D_v`. Zero diagonal, symmetric.
    pub fn adjacency_matrix(&self) -> DenseMatrix<T> {
        self.incidence_sandwich(&self.edge_weight_matrix())
            .sub(&self.vertex_degree_matrix())
    }

    /// `L = 2 D_v − H W Hᵀ`, equal to `D_v − A`.
    pub fn momentum_laplacian(&self) -> DenseMatrix<T> {
        let two = T::one() + T::one();
        self.vertex_degree_matrix()
            .scale(two)
            .sub(&self.incidence_sandwich(&self.edge_weight_matrix()))
    }

    /// `L = 2 D_v − H f_ω Hᵀ`.
    pub fn position_laplacian(&self) -> DenseMatrix<T> {
        let two = T::one() + T::one();
        self.vertex_degree_matrix()
            .scale(two)
            .sub(&self.incidence_sandwich(&self.edge_weight_sum_matrix()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn four_vertex() -> Hypergraph<i64> {
        Hypergraph::from_one_based(
            4,
            None,
            [(vec![1, 2, 3], 1), (vec![2, 3, 4], 2), (vec![1, 4], 3)],
        )
        .unwrap()
    }

    #[test]
    fn incidence_of_worked_example() {
        let h = four_vertex().incidence_matrix();
        let expected =
            DenseMatrix::from_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(h, expected);
    }

    #[test]
    fn edgeless_and_empty_edge() {
        let g = Hypergraph::<i64>::new(3, None, vec![]).unwrap();
        let h = g.incidence_matrix();
        assert_eq!((h.rows(), h.cols()), (3, 0));
        assert_eq!(g.vertex_degree_matrix(), DenseMatrix::zeros(3, 3));
        assert_eq!(g.adjacency_matrix(), DenseMatrix::zeros(3, 3));
        assert_eq!(g.momentum_laplacian(), DenseMatrix::zeros(3, 3));
        assert_eq!(g.position_laplacian(), DenseMatrix::zeros(3, 3));

        let g = Hypergraph::new(2, None, vec![Hyperedge::new([], 1i64)]).unwrap();
        assert_eq!(
            g.incidence_matrix(),
            DenseMatrix::from_rows(&[vec![0], vec![0]])
        );
        assert_eq!(g.edge_degree_matrix(), DenseMatrix::from_rows(&[vec![0]]));
        assert_eq!(
            g.edge_weight_sum_matrix(),
            DenseMatrix::from_rows(&[vec![0]])
        );
        assert!(g.has_empty_edge());
    }

    #[test]
    fn degrees() {
        let g = four_vertex();
        assert_eq!(g.vertex_degree_matrix().diagonal(), vec![4, 3, 3, 5]);
        assert_eq!(g.edge_degree_matrix().diagonal(), vec![3, 3, 2]);
        let g = Hypergraph::from_one_based(2, None, [(vec![1, 2], 5i64)]).unwrap();
        assert_eq!(
            g.vertex_degree_matrix(),
            DenseMatrix::from_rows(&[vec![5, 0], vec![0, 5]])
        );
        let g = Hypergraph::from_one_based(5, None, [(vec![1, 2, 3, 4, 5], 1i64)]).unwrap();
        assert_eq!(g.edge_degrees(), vec![5]);
    }

    #[test]
    fn weight_sums() {
        assert_eq!(four_vertex().edge_weight_sums(), vec![3, 3, 2]);
        let g =
            Hypergraph::from_one_based(4, Some(vec![1, 2, 3, 4]), [(vec![1, 4], 1i64)]).unwrap();
        assert_eq!(g.edge_weight_sums(), vec![5]);
    }

    #[test]
    fn graph_case() {
        let g = Hypergraph::from_one_based(2, None, [(vec![1, 2], 1i64)]).unwrap();
        assert_eq!(
            g.adjacency_matrix(),
            DenseMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
        );
        assert_eq!(
            g.momentum_laplacian(),
            DenseMatrix::from_rows(&[vec![1, -1], vec![-1, 1]])
        );
    }

    #[test]
    fn adjacency_and_laplacian_of_worked_example() {
        let g = four_vertex();
        assert_eq!(
            g.adjacency_matrix(),
            DenseMatrix::from_rows(&[
                vec![0, 1, 1, 3],
                vec![1, 0, 3, 2],
                vec![1, 3, 0, 2],
                vec![3, 2, 2, 0]
            ])
        );
        assert_eq!(
            g.momentum_laplacian(),
            DenseMatrix::from_rows(&[
                vec![4, -1, -1, -3],
                vec![-1, 3, -3, -2],
                vec![-1, -3, 3, -2],
                vec![-3, -2, -2, 5]
            ])
        );
        assert_eq!(
            g.momentum_laplacian(),
            g.vertex_degree_matrix().sub(&g.adjacency_matrix())
        );
    }

    #[test]
    fn position_form_matches_momentum_form_when_weights_equal_cardinality() {
        let g = Hypergraph::from_one_based(
            4,
            None,
            [(vec![1, 2, 3], 3i64), (vec![2, 3, 4], 3), (vec![1, 4], 2)],
        )
        .unwrap();
        assert_eq!(g.position_laplacian(), g.momentum_laplacian());
    }

    #[test]
    fn rational_weights() {
        let half = Ratio::new(1i64, 2);
        let g =
            Hypergraph::from_one_based(3, None, [(vec![1, 2], half), (vec![2, 3], half)]).unwrap();
        assert_eq!(g.vertex_degrees(), vec![half, Ratio::from_integer(1), half]);
        assert!(g.momentum_laplacian().is_symmetric());
    }

    #[test]
    fn validation() {
        assert_eq!(
            Hypergraph::from_one_based(4, None, [(vec![5], 1.0)]),
            Err(Error::VertexOutOfRange {
                edge: 1,
                vertex: 5,
                n_vertices: 4
            })
        );
        assert!(matches!(
            Hypergraph::from_one_based(4, None, [(vec![0], 1.0)]),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            Hypergraph::from_one_based(2, None, [(vec![1], 0.0)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            Hypergraph::<f64>::new(2, Some(vec![1.0, -1.0]), vec![]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert_eq!(
            Hypergraph::<f64>::new(0, None, vec![]),
            Err(Error::NoVertices)
        );
        assert!(matches!(
            Hypergraph::<f64>::new(2, Some(vec![1.0]), vec![]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn duplicate_members_collapse() {
        let e = Hyperedge::new([2, 0, 2, 1], 1.0);
        assert_eq!(e.members(), &[0, 1, 2]);
    }

    #[test]
    fn induced_keeps_contained_edges() {
        let g = four_vertex();
        let sub = g.induced(&[0, 3], false).unwrap();
        assert_eq!(sub.n_edges(), 1);
        assert_eq!(sub.edges()[0].members(), &[0, 1]);
        assert_eq!(sub.edges()[0].weight(), 3);
        assert_eq!(g.induced(&[1, 2], false).unwrap().n_edges(), 0);
    }

    #[test]
    fn one_based_round_trip() {
        for i in 0..100 {
            assert_eq!(from_one_based(to_one_based(i)), Some(i));
        }
        for label in 1..100 {
            assert_eq!(from_one_based(label).map(to_one_based), Some(label));
        }
        assert_eq!(from_one_based(0), None);
    }
}
