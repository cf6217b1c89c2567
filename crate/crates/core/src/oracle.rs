//! Independent ground truth: exact effective resistances from grounded
//! rational solves, spectral Kirchhoff sums, Matrix-Tree determinants, and
//! breadth-first Wiener distances.
//!
//! Everything here works on a plain Laplacian matrix, so the oracles apply to
//! the chains as well as to the toy graphs (paths, cycles, triangles) used to
//! sanity-check them. Nothing in this module consults the closed forms it is
//! meant to audit.

use num_traits::{One, Signed, Zero};

use crate::arith::{BigInt, Rational};
use crate::decompose::{self, CharPoly, SpectrumSource};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Exact pairwise effective resistances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResistanceMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    /// Sum over unordered pairs: the Kirchhoff index.
    pub fn pair_sum(&self) -> Rational {
        let mut total = Rational::zero();
        for i in 0..self.order {
            for j in i + 1..self.order {
                total += self.get(i, j);
            }
        }
        total
    }

    pub fn is_symmetric_with_zero_diagonal(&self) -> bool {
        (0..self.order).all(|i| {
            self.get(i, i).is_zero()
                && (0..i).all(|j| self.get(i, j) == self.get(j, i))
                && (0..i).all(|j| self.get(i, j).is_positive())
        })
    }

    /// `r(i,k) ≤ r(i,j) + r(j,k)` for every triple.
    pub fn satisfies_triangle_inequality(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|k| {
                (0..self.order)
                    .all(|j| *self.get(i, k) <= self.get(i, j) + self.get(j, k))
            })
        })
    }
}

/// Effective resistances with the default grounding (last vertex).
pub fn resistance_matrix(lap: &IntMatrix) -> Result<ResistanceMatrix> {
    resistance_matrix_grounded(lap, lap.order() - 1)
}

/// Effective resistances by grounding `ground`: delete its row and column,
/// invert the reduced system exactly, and read resistances off the inverse
/// (`r(u,v) = G_uu + G_vv − 2G_uv`, with `G_{·,ground}` treated as zero).
///
/// The result is independent of the grounding choice; the verification suite
/// checks that.
pub fn resistance_matrix_grounded(lap: &IntMatrix, ground: usize) -> Result<ResistanceMatrix> {
    let n = lap.order();
    assert!(ground < n, "ground vertex out of range");
    let reduced = lap.delete_row_col(ground);
    let inverse = invert_rational(&reduced)?;
    let m = n - 1;
    let pos = |v: usize| if v > ground { v - 1 } else { v };
    let green = |u: usize, v: usize| -> Rational {
        if u == ground || v == ground {
            Rational::zero()
        } else {
            inverse[pos(u) * m + pos(v)].clone()
        }
    };
    let mut entries = vec![Rational::zero(); n * n];
    for u in 0..n {
        for v in u + 1..n {
            let r = green(u, u) + green(v, v) - green(u, v) * Rational::from_integer(2.into());
            entries[u * n + v] = r.clone();
            entries[v * n + u] = r;
        }
    }
    Ok(ResistanceMatrix { order: n, entries })
}

/// Exact inverse of an integer matrix over `Q` by Gauss–Jordan elimination.
#[allow(clippy::needless_range_loop)] // pivot/eliminee rows are indexed in tandem
fn invert_rational(m: &IntMatrix) -> Result<Vec<Rational>> {
    let n = m.order();
    // Augmented [M | I] rows.
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Rational::from_integer(m.get(i, j).clone())
                    } else if j - n == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::SingularSystem("inverting the grounded Laplacian".into()))?;
        rows.swap(col, pivot_row);
        let pivot = rows[col][col].clone();
        for entry in rows[col].iter_mut() {
            *entry /= &pivot;
        }
        for r in 0..n {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for j in 0..2 * n {
                let sub = &factor * &rows[col][j];
                rows[r][j] -= sub;
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for row in &rows {
        out.extend(row[n..].iter().cloned());
    }
    Ok(out)
}

/// `Kf(G) = Σ_{u<v} r(u,v)`, exact.
pub fn kirchhoff_by_resistance(lap: &IntMatrix) -> Result<Rational> {
    Ok(resistance_matrix(lap)?.pair_sum())
}

/// `Kf(G) = n · Σ 1/µ_k` over the nonzero Laplacian eigenvalues, numeric.
///
/// The zero eigenvalue is identified with absolute threshold 1e−9 after the
/// exact rank confirms there is exactly one.
pub fn kirchhoff_by_spectrum(lap: &IntMatrix) -> Result<f64> {
    let n = lap.order();
    assert_eq!(lap.rank(), n - 1, "graph must be connected");
    let spectrum = decompose::numeric_spectrum(lap, SpectrumSource::Laplacian)?;
    let zeros = spectrum.zero_count(1e-9);
    assert_eq!(zeros, 1, "expected exactly one zero eigenvalue");
    let reciprocal_sum: f64 = spectrum
        .eigenvalues
        .iter()
        .filter(|x| x.abs() >= 1e-9)
        .map(|x| 1.0 / x)
        .sum();
    Ok(n as f64 * reciprocal_sum)
}

/// Matrix-Tree Theorem: `τ(G) = det L(i)` for any deleted vertex `i`.
pub fn spanning_trees_mtt(lap: &IntMatrix, vertex: usize) -> BigInt {
    lap.delete_row_col(vertex).determinant()
}

/// Spanning trees read off the exact characteristic polynomial: the product
/// of nonzero eigenvalues is `|x¹ coefficient|`, divided by the order.
pub fn spanning_trees_spectral(lap: &IntMatrix) -> Result<BigInt> {
    let poly = CharPoly::of(lap);
    let linear = poly.coefficient_of_power(1).abs();
    let order = BigInt::from(lap.order() as u64);
    let (quotient, remainder) = num_integer::Integer::div_rem(&linear, &order);
    if !remainder.is_zero() {
        return Err(Error::NonInteger(format!(
            "eigenvalue product {linear} is not divisible by the order {order}"
        )));
    }
    Ok(quotient)
}

/// All-pairs shortest-path distances by breadth-first search from every
/// vertex. Panics on a disconnected graph.
pub fn distance_matrix(lap: &IntMatrix) -> Vec<Vec<u64>> {
    let n = lap.order();
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && !lap.get(i, j).is_zero())
                .collect()
        })
        .collect();
    let mut all = Vec::with_capacity(n);
    for source in 0..n {
        let mut dist = vec![u64::MAX; n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if dist[w] == u64::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        assert!(
            dist.iter().all(|&d| d != u64::MAX),
            "graph must be connected"
        );
        all.push(dist);
    }
    all
}

/// Wiener index: sum of shortest-path distances over unordered pairs.
#[allow(clippy::needless_range_loop)]
pub fn wiener(lap: &IntMatrix) -> BigInt {
    let dist = distance_matrix(lap);
    let n = lap.order();
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            total += dist[i][j];
        }
    }
    BigInt::from(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::graph::build_chain;

    fn path_laplacian(m: usize) -> IntMatrix {
        let edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
        IntMatrix::laplacian_from_edges(m, &edges)
    }

    #[test]
    fn single_edge_has_unit_resistance() {
        let lap = IntMatrix::laplacian_from_edges(2, &[(0, 1)]);
        let r = resistance_matrix(&lap).unwrap();
        assert_eq!(*r.get(0, 1), rat(1));
        assert_eq!(kirchhoff_by_resistance(&lap).unwrap(), rat(1));
    }

    #[test]
    fn four_cycle_adjacent_resistance() {
        // One edge in series with a three-edge detour: 1·3/(1+3) = 3/4.
        let lap = IntMatrix::laplacian_from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let r = resistance_matrix(&lap).unwrap();
        assert_eq!(*r.get(0, 1), ratio(3, 4));
        assert_eq!(*r.get(0, 2), rat(1));
    }

    #[test]
    fn triangle_kirchhoff_index() {
        let lap = IntMatrix::laplacian_from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(kirchhoff_by_resistance(&lap).unwrap(), rat(2));
    }

    #[test]
    fn path_kirchhoff_matches_cubic_formula() {
        assert_eq!(kirchhoff_by_resistance(&path_laplacian(5)).unwrap(), rat(20));
    }

    #[test]
    fn chain_resistance_sum_matches_worked_example() {
        let g = build_chain(1).unwrap();
        let kf = kirchhoff_by_resistance(&g.laplacian()).unwrap();
        assert_eq!(kf, ratio(2155, 31));
    }

    #[test]
    fn resistance_invariants_hold() {
        let g = build_chain(1).unwrap();
        let r = resistance_matrix(&g.laplacian()).unwrap();
        assert!(r.is_symmetric_with_zero_diagonal());
        assert!(r.satisfies_triangle_inequality());
    }

    #[test]
    fn grounding_choice_is_irrelevant() {
        let g = build_chain(2).unwrap();
        let lap = g.laplacian();
        let a = resistance_matrix_grounded(&lap, 0).unwrap();
        let b = resistance_matrix_grounded(&lap, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spectral_kirchhoff_close_to_exact() {
        let g = build_chain(1).unwrap();
        let by_spectrum = kirchhoff_by_spectrum(&g.laplacian()).unwrap();
        let exact = 2155.0 / 31.0;
        assert!((by_spectrum - exact).abs() / exact < 1e-8);
        let p5 = kirchhoff_by_spectrum(&path_laplacian(5)).unwrap();
        assert!((p5 - 20.0).abs() < 1e-8);
    }

    #[test]
    fn matrix_tree_count_for_l1_any_vertex() {
        let g = build_chain(1).unwrap();
        let lap = g.laplacian();
        for v in 0..lap.order() {
            assert_eq!(spanning_trees_mtt(&lap, v), BigInt::from(31));
        }
    }

    #[test]
    fn matrix_tree_count_for_l2() {
        let g = build_chain(2).unwrap();
        assert_eq!(spanning_trees_mtt(&g.laplacian(), 0), BigInt::from(929));
    }

    #[test]
    fn matrix_tree_count_ignores_deleted_vertex() {
        for n in 2..=6 {
            let lap = build_chain(n).unwrap().laplacian();
            let order = lap.order();
            let reference = spanning_trees_mtt(&lap, 0);
            for v in [1, order / 3, order / 2, 2 * order / 3, order - 1] {
                assert_eq!(spanning_trees_mtt(&lap, v), reference, "n={n}, v={v}");
            }
        }
    }

    #[test]
    fn trees_have_one_spanning_tree() {
        let lap = path_laplacian(7);
        assert_eq!(spanning_trees_mtt(&lap, 3), BigInt::one());
        assert_eq!(spanning_trees_spectral(&lap).unwrap(), BigInt::one());
    }

    #[test]
    fn spectral_tree_count_matches_reference_values() {
        let g1 = build_chain(1).unwrap();
        assert_eq!(spanning_trees_spectral(&g1.laplacian()).unwrap(), BigInt::from(31));
        let g3 = build_chain(3).unwrap();
        assert_eq!(
            spanning_trees_spectral(&g3.laplacian()).unwrap(),
            BigInt::from(27839)
        );
    }

    #[test]
    fn wiener_basics() {
        let single = IntMatrix::laplacian_from_edges(2, &[(0, 1)]);
        assert_eq!(wiener(&single), BigInt::one());
        assert_eq!(wiener(&path_laplacian(5)), BigInt::from(20));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn wiener_dominates_kirchhoff_on_chains() {
        // r(i,j) ≤ d(i,j) pointwise, so Kf ≤ W.
        let g = build_chain(1).unwrap();
        let lap = g.laplacian();
        let w = Rational::from_integer(wiener(&lap));
        let kf = kirchhoff_by_resistance(&lap).unwrap();
        assert!(kf <= w);
        let dist = distance_matrix(&lap);
        let res = resistance_matrix(&lap).unwrap();
        for i in 0..lap.order() {
            for j in 0..lap.order() {
                assert!(*res.get(i, j) <= Rational::from_integer(dist[i][j].into()));
            }
        }
    }
}
