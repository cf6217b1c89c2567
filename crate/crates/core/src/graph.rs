//! The linear octagonal-quadrilateral network `L_n` and its Laplacian blocks.
//!
//! Vertices come in mirrored pairs: `V₁ = {1, …, 4n+1}` is a path, `V₂` is the
//! primed copy of that path, and a rung `(i, i')` is present exactly when
//! `i mod 4 ∈ {0, 1}` (1-based). That rung pattern makes octagonal and
//! quadrilateral faces alternate and reproduces the block Laplacians
//! `L_{V₁V₁}` (tridiagonal, diagonal `2,2,2,3,3,2,2,3,…`) and
//! `L_{V₁V₂} = diag(−1,0,0,−1,−1,0,0,−1,…,−1)`.
//!
//! Index convention: `V₁` occupies `0..=4n`, `V₂` occupies `4n+1..=8n+1`, and
//! the pairing involution is `i ↔ i + (4n+1)`. This makes the 2×2 block
//! structure of the Laplacian literal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The network `L_n`, immutable after construction.
#[derive(Clone, Debug)]
pub struct ChainGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Builds `L_n`.
pub fn build_chain(n: usize) -> Result<ChainGraph> {
    if n < 1 {
        return Err(Error::InvalidN(n as i64));
    }
    let half = 4 * n + 1;
    let mut edges = Vec::with_capacity(10 * n + 1);
    // The two mirrored paths.
    for i in 0..half - 1 {
        edges.push((i, i + 1));
        edges.push((half + i, half + i + 1));
    }
    // Rungs at 1-based positions i with i mod 4 ∈ {0, 1}.
    for i in 1..=half {
        if i % 4 == 0 || i % 4 == 1 {
            edges.push((i - 1, i - 1 + half));
        }
    }
    edges.sort();
    Ok(ChainGraph { n, edges })
}

impl ChainGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `4n+1`, the order of one path (and of each Laplacian block).
    pub fn half_order(&self) -> usize {
        4 * self.n + 1
    }

    /// `8n+2`.
    pub fn vertex_count(&self) -> usize {
        8 * self.n + 2
    }

    /// `10n+1`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based pairs in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The pairing involution `i ↔ i'`; an automorphism without fixed vertices.
    pub fn paired(&self, v: usize) -> usize {
        let half = self.half_order();
        if v < half {
            v + half
        } else {
            v - half
        }
    }

    /// True when mapping every edge through the pairing reproduces the edge set.
    pub fn pairing_is_automorphism(&self) -> bool {
        let mut mapped: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.paired(u), self.paired(v));
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort();
        mapped == self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, w)| u == v || w == v)
            .count()
    }

    /// 1-based label with a prime suffix on the mirrored path: `1..4n+1`, `1'..(4n+1)'`.
    pub fn vertex_label(&self, v: usize) -> String {
        let half = self.half_order();
        if v < half {
            format!("{}", v + 1)
        } else {
            format!("{}'", v - half + 1)
        }
    }

    /// The Laplacian `L = D − A`, order `8n+2`.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::laplacian_from_edges(self.vertex_count(), &self.edges)
    }

    /// The blocks `(L_{V₁V₁}, L_{V₁V₂})`, each of order `4n+1`.
    ///
    /// Reassembling `[[L11, L12], [L12, L11]]` in the `V₁, V₂` ordering
    /// reproduces the full Laplacian.
    pub fn block_partition(&self) -> (IntMatrix, IntMatrix) {
        let half = self.half_order();
        let lap = self.laplacian();
        let mut l11 = IntMatrix::zeros(half);
        let mut l12 = IntMatrix::zeros(half);
        for i in 0..half {
            for j in 0..half {
                l11.set(i, j, lap.get(i, j).clone());
                l12.set(i, j, lap.get(i, j + half).clone());
            }
        }
        (l11, l12)
    }

    /// Edge list as text, one `u v` pair per line using primed labels.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.vertex_label(u));
            out.push(' ');
            out.push_str(&self.vertex_label(v));
            out.push('\n');
        }
        out
    }

    /// Adjacency description for JSON export.
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            vertices: (0..self.vertex_count())
                .map(|v| self.vertex_label(v))
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [self.vertex_label(u), self.vertex_label(v)])
                .collect(),
        }
    }
}

/// Serializable adjacency form of the graph.
#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn rejects_n_zero() {
        assert!(matches!(build_chain(0), Err(Error::InvalidN(0))));
    }

    #[test]
    fn counts_for_small_n() {
        let g = build_chain(1).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 11);
        for n in 1..=10 {
            let g = build_chain(n).unwrap();
            assert_eq!(g.vertex_count(), 8 * n + 2);
            assert_eq!(g.edge_count(), 10 * n + 1);
        }
    }

    #[test]
    fn degree_sequence_of_first_path_n1() {
        let g = build_chain(1).unwrap();
        let degrees: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 2, 3, 2]);
    }

    #[test]
    fn all_degrees_are_two_or_three() {
        for n in 1..=6 {
            let g = build_chain(n).unwrap();
            assert!((0..g.vertex_count()).all(|v| matches!(g.degree(v), 2 | 3)));
        }
    }

    #[test]
    fn rungs_for_n2() {
        let g = build_chain(2).unwrap();
        let half = g.half_order();
        let rungs: Vec<usize> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| v == u + half)
            .map(|&(u, _)| u + 1)
            .collect();
        assert_eq!(rungs, vec![1, 4, 5, 8, 9]);
        // 2n+1 rungs and 8n path edges in total.
        assert_eq!(rungs.len(), 2 * g.n() + 1);
        assert_eq!(g.edge_count() - rungs.len(), 8 * g.n());
    }

    #[test]
    fn first_face_is_an_octagon() {
        let g = build_chain(2).unwrap();
        let half = g.half_order();
        // Cycle 1-2-3-4-4'-3'-2'-1' back to 1, in 0-based indices.
        let cycle = [0, 1, 2, 3, 3 + half, 2 + half, 1 + half, half];
        assert_eq!(cycle.len(), 8);
        let has = |u: usize, v: usize| {
            let e = (u.min(v), u.max(v));
            g.edges().binary_search(&e).is_ok()
        };
        for k in 0..cycle.len() {
            assert!(has(cycle[k], cycle[(k + 1) % cycle.len()]));
        }
        // And the face between rungs 4 and 5 is a quadrilateral.
        let quad = [3, 4, 4 + half, 3 + half];
        for k in 0..quad.len() {
            assert!(has(quad[k], quad[(k + 1) % quad.len()]));
        }
    }

    #[test]
    fn pairing_is_a_fixed_point_free_automorphism() {
        for n in 1..=8 {
            let g = build_chain(n).unwrap();
            assert!(g.pairing_is_automorphism());
            for v in 0..g.vertex_count() {
                assert_ne!(g.paired(v), v);
                assert_eq!(g.paired(g.paired(v)), v);
            }
        }
    }

    #[test]
    fn laplacian_structure() {
        for n in 1..=5 {
            let g = build_chain(n).unwrap();
            let lap = g.laplacian();
            assert_eq!(lap.order(), 8 * n + 2);
            assert!(lap.is_symmetric());
            assert_eq!(lap.trace(), BigInt::from(2 * (10 * n as i64 + 1)));
            for i in 0..lap.order() {
                assert!(lap.row_sum(i).is_zero());
                for j in 0..lap.order() {
                    if i != j {
                        let v = lap.get(i, j);
                        assert!(v.is_zero() || *v == BigInt::from(-1));
                    }
                }
            }
        }
    }

    #[test]
    fn laplacian_of_l1_has_rank_nine() {
        let g = build_chain(1).unwrap();
        assert_eq!(g.laplacian().rank(), 9);
    }

    #[test]
    fn blocks_for_n1_match_worked_example() {
        let g = build_chain(1).unwrap();
        let (l11, l12) = g.block_partition();
        assert_eq!(
            l11,
            IntMatrix::from_rows(&[
                vec![2, -1, 0, 0, 0],
                vec![-1, 2, -1, 0, 0],
                vec![0, -1, 2, -1, 0],
                vec![0, 0, -1, 3, -1],
                vec![0, 0, 0, -1, 2],
            ])
        );
        assert_eq!(
            l12,
            IntMatrix::from_rows(&[
                vec![-1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, -1, 0],
                vec![0, 0, 0, 0, -1],
            ])
        );
    }

    #[test]
    fn blocks_reassemble_into_laplacian() {
        for n in 1..=4 {
            let g = build_chain(n).unwrap();
            let half = g.half_order();
            let (l11, l12) = g.block_partition();
            let lap = g.laplacian();
            for i in 0..half {
                for j in 0..half {
                    assert_eq!(lap.get(i, j), l11.get(i, j));
                    assert_eq!(lap.get(i, j + half), l12.get(i, j));
                    assert_eq!(lap.get(i + half, j), l12.get(i, j));
                    assert_eq!(lap.get(i + half, j + half), l11.get(i, j));
                }
            }
        }
    }

    #[test]
    fn difference_block_diagonal_pattern() {
        // L_{V₁V₁} − L_{V₁V₂} must carry the diagonal 3,2,2,4,4,2,2,4,…,4,3.
        for n in 1..=10 {
            let g = build_chain(n).unwrap();
            let (l11, l12) = g.block_partition();
            let ls = l11.sub(&l12).unwrap();
            let half = g.half_order();
            for i in 0..half {
                let pos = i + 1;
                let expected = if pos == 1 || pos == half {
                    3
                } else if pos % 4 == 0 || pos % 4 == 1 {
                    4
                } else {
                    2
                };
                assert_eq!(*ls.get(i, i), BigInt::from(expected), "n={n} diag {pos}");
            }
        }
    }

    #[test]
    fn exports_are_deterministic_and_labelled() {
        let g = build_chain(1).unwrap();
        let text = g.edge_list_text();
        assert!(text.starts_with("1 2\n"));
        assert!(text.contains("1 1'"));
        assert_eq!(text.lines().count(), 11);
        let json = g.to_json();
        assert_eq!(json.vertices.len(), 10);
        assert_eq!(json.edges.len(), 11);
        assert_eq!(json.vertices[5], "1'");
    }
}
