//! Acceptance suite: every headline claim of the toolkit, one test per
//! criterion, each printing a PASS/FAIL line (visible with `--nocapture`).
//!
//! The reference tables are frozen here as constants; all other expected
//! values come from independent routes computed in the test itself.

use std::time::Instant;

use chainspectra::arith::{rat, ratio, recurrence_roots, BigInt, QuadNumber, Rational};
use chainspectra::decompose::{
    self, ls_matrix, numeric_spectrum, path_eigenvalues, split, transform_check,
    verify_factorization, CharPoly, SpectrumSource,
};
use chainspectra::formulas::{
    b4n, complexity, det_ls, kirchhoff, round_half_away,
};
use chainspectra::graph::build_chain;
use chainspectra::matrix::IntMatrix;
use chainspectra::minors::{c_by_recurrence, c_closed, e_by_recurrence, e_closed, principal_minor, MinorKind};
use chainspectra::oracle::{
    distance_matrix, kirchhoff_by_resistance, kirchhoff_by_spectrum, resistance_matrix,
    resistance_matrix_grounded, spanning_trees_mtt, spanning_trees_spectral,
};
use num_traits::{Signed, Zero};

/// Reference spanning-tree counts for L_1..L_12.
const TABLE_2: [&str; 12] = [
    "31",
    "929",
    "27839",
    "834241",
    "24999391",
    "749147489",
    "22449425279",
    "672733610881",
    "20159558901151",
    "604114033423649",
    "18103261443808319",
    "542493729280825921",
];

/// Reference Kirchhoff indices for L_1..L_15 (two decimals).
const TABLE_1: [&str; 15] = [
    "69.52", "336.42", "929.82", "1977.70", "3608.06", "5948.91", "9128.25", "13274.07",
    "18514.38", "24977.17", "32790.45", "42082.21", "52980.46", "65613.20", "80108.42",
];

fn criterion(name: &str, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("ACCEPTANCE {name}: PASS ({detail})"),
        Err(msg) => {
            println!("ACCEPTANCE {name}: FAIL ({msg})");
            panic!("criterion {name} failed: {msg}");
        }
    }
}

/// `"69.52"` → exact rational 6952/100.
fn parse_decimal(s: &str) -> Rational {
    match s.split_once('.') {
        None => rat(s.parse::<i64>().unwrap()),
        Some((int, frac)) => {
            let scale = 10i64.pow(frac.len() as u32);
            let combined: i64 = format!("{int}{frac}").parse().unwrap();
            ratio(combined, scale)
        }
    }
}

#[test]
fn criterion_1_table_2_three_routes() {
    criterion("1 (Table 2 via three routes)", || {
        let start = Instant::now();
        for (idx, expected) in TABLE_2.iter().enumerate() {
            let n = idx + 1;
            let reference: BigInt = expected.parse().unwrap();
            let closed = complexity(n).map_err(|e| e.to_string())?;
            if closed != reference {
                return Err(format!("closed form disagrees with Table 2 at n={n}: {closed}"));
            }
            let lap = build_chain(n).unwrap().laplacian();
            let spectral = spanning_trees_spectral(&lap).map_err(|e| e.to_string())?;
            if spectral != reference {
                return Err(format!(
                    "char-poly route disagrees with Table 2 at n={n}: {spectral}"
                ));
            }
            let mtt = spanning_trees_mtt(&lap, 0);
            if mtt != reference {
                return Err(format!("Matrix-Tree route disagrees at n={n}: {mtt}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 30.0 {
            return Err(format!("runtime budget exceeded: {elapsed:.2?}"));
        }
        Ok(format!("12 rows, three exact routes each, {elapsed:.2?}"))
    });
}

#[test]
fn criterion_2_worked_example() {
    criterion("2 (worked example for L_1)", || {
        let kf = kirchhoff(1).map_err(|e| e.to_string())?;
        if kf != ratio(2155, 31) {
            return Err(format!("Kf(L_1) = {kf}, want 2155/31"));
        }
        let lap = build_chain(1).unwrap().laplacian();
        for vertex in 0..lap.order() {
            let tau = spanning_trees_mtt(&lap, vertex);
            if tau != BigInt::from(31) {
                return Err(format!("det L({vertex}) = {tau}, want 31"));
            }
        }
        Ok("Kf(L_1) = 2155/31 and det L(i) = 31 for all ten vertices".into())
    })
}

#[test]
fn criterion_3_table_1_reproduction() {
    criterion("3 (Table 1 within ±0.01)", || {
        let start = Instant::now();
        let tolerance = ratio(1, 100);
        for (idx, reference) in TABLE_1.iter().enumerate() {
            let n = idx + 1;
            let kf = kirchhoff(n).map_err(|e| e.to_string())?;
            let table_value = parse_decimal(reference);
            let deviation = (kf.clone() - &table_value).abs();
            if deviation > tolerance {
                return Err(format!(
                    "reference-table discrepancy at n={n}: computed {} vs tabled {reference}",
                    round_half_away(&kf, 2)
                ));
            }
            // The display rounding itself must reproduce the printed digits.
            if round_half_away(&kf, 2) != *reference {
                return Err(format!(
                    "rounding mismatch at n={n}: {} vs {reference}",
                    round_half_away(&kf, 2)
                ));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 5.0 {
            return Err(format!("runtime budget exceeded: {elapsed:.2?}"));
        }
        Ok(format!("15 rows match, {elapsed:.2?}"))
    })
}

#[test]
fn criterion_4_oracle_equivalence() {
    criterion("4 (resistance and spectral oracles, n=1..4)", || {
        let start = Instant::now();
        for n in 1..=4 {
            let kf = kirchhoff(n).map_err(|e| e.to_string())?;
            let lap = build_chain(n).unwrap().laplacian();
            let by_resistance = kirchhoff_by_resistance(&lap).map_err(|e| e.to_string())?;
            if by_resistance != kf {
                return Err(format!(
                    "exact resistance sum {by_resistance} != closed form {kf} at n={n}"
                ));
            }
            let by_spectrum = kirchhoff_by_spectrum(&lap).map_err(|e| e.to_string())?;
            let kf_float = chainspectra::arith::rational_to_f64(&kf);
            let rel = (by_spectrum - kf_float).abs() / kf_float;
            if rel > 1e-8 {
                return Err(format!("spectral sum off by {rel:e} at n={n}"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 60.0 {
            return Err(format!("runtime budget exceeded: {elapsed:.2?}"));
        }
        Ok(format!("exact + 1e-8 spectral agreement, {elapsed:.2?}"))
    })
}

#[test]
fn criterion_5_factorization_and_transform() {
    criterion("5 (P_L = P_LA · P_LS and block diagonalization)", || {
        for n in 1..=6 {
            let g = build_chain(n).unwrap();
            let report = verify_factorization(&g).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("factorization check failed at n={n}"));
            }
        }
        for n in 1..=4 {
            let g = build_chain(n).unwrap();
            let report = transform_check(&g);
            if !report.passed() {
                return Err(format!("transform check failed at n={n}: {}", report.detail));
            }
        }
        Ok("coefficient-exact factorization (n=1..6), exact block transform (n=1..4)".into())
    })
}

#[test]
fn criterion_6_sequence_identities() {
    criterion("6 (minor recurrences, closed forms, coefficients)", || {
        // Recurrence = closed form = corner determinant, every index, n <= 8.
        for n in 1..=8usize {
            let ls = ls_matrix(n).unwrap();
            let c = c_by_recurrence(n).map_err(|e| e.to_string())?;
            let e = e_by_recurrence(n).map_err(|e| e.to_string())?;
            for k in 1..=4 * n {
                let i = ((k - 1) / 4) as u32;
                let r = ((k - 1) % 4 + 1) as u8;
                let c_formula = c_closed(i, r).map_err(|err| err.to_string())?;
                let e_formula = e_closed(i, r).map_err(|err| err.to_string())?;
                let c_det = principal_minor(&ls, k, MinorKind::Leading);
                let e_det = principal_minor(&ls, k, MinorKind::Trailing);
                if c_formula != *c.value(k) || c_det != *c.value(k) {
                    return Err(format!("c_{k} routes disagree at n={n}"));
                }
                if e_formula != *e.value(k) || e_det != *e.value(k) {
                    return Err(format!("e_{k} routes disagree at n={n}"));
                }
            }
        }
        // Second-layer recurrences out to n = 50.
        let c50 = c_by_recurrence(50).map_err(|e| e.to_string())?;
        let e50 = e_by_recurrence(50).map_err(|e| e.to_string())?;
        if !c50.second_layer_holds() || !e50.second_layer_holds() {
            return Err("second-layer recurrence fails".into());
        }
        // b_{4n} equals the x¹ coefficient of P_{L_S} for n = 1..6.
        for n in 1..=6usize {
            let b = b4n(n).map_err(|e| e.to_string())?;
            let poly = CharPoly::of(&ls_matrix(n).unwrap());
            if poly.coefficient_of_power(1).abs() != b {
                return Err(format!("b_4n != x¹ coefficient at n={n}"));
            }
        }
        // b4n's internal c+e+ΣD cross-check runs for every call; push to 50.
        for n in 1..=50usize {
            b4n(n).map_err(|e| format!("b_4n decomposition fails at n={n}: {e}"))?;
        }
        // det L_S: cofactor identity is checked inside det_ls; the exact
        // determinant is compared here for n <= 6.
        for n in 1..=6usize {
            let det = det_ls(n).map_err(|e| e.to_string())?;
            if det != ls_matrix(n).unwrap().determinant() {
                return Err(format!("det L_S mismatch at n={n}"));
            }
        }
        Ok("all sequence identities hold (dets to n=8, closed forms to n=50)".into())
    })
}

#[test]
fn criterion_7_path_spectrum() {
    criterion("7 (path eigenvalue formula)", || {
        for m in [2usize, 5, 9, 41] {
            let edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
            let lap = IntMatrix::laplacian_from_edges(m, &edges);
            let numeric = numeric_spectrum(&lap, SpectrumSource::Path).map_err(|e| e.to_string())?;
            let formula = path_eigenvalues(m);
            let worst = numeric
                .eigenvalues
                .iter()
                .zip(formula.eigenvalues.iter())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0f64, f64::max);
            if worst > 1e-10 {
                return Err(format!("m={m}: deviation {worst:e} exceeds 1e-10"));
            }
        }
        Ok("m in {2, 5, 9, 41} all within 1e-10".into())
    })
}

#[test]
#[allow(clippy::needless_range_loop)]
fn criterion_8_property_suite() {
    criterion("8 (unit pair, r<=d, parity, grounding)", || {
        let (a, b) = recurrence_roots();
        if &a * &b != QuadNumber::one() || &a + &b != QuadNumber::from_int(30) {
            return Err("A·B != 1 or A+B != 30".into());
        }
        for n in 1..=3usize {
            let lap = build_chain(n).unwrap().laplacian();
            let res = resistance_matrix(&lap).map_err(|e| e.to_string())?;
            let dist = distance_matrix(&lap);
            for i in 0..lap.order() {
                for j in 0..lap.order() {
                    if *res.get(i, j) > Rational::from_integer(dist[i][j].into()) {
                        return Err(format!("r({i},{j}) > d({i},{j}) at n={n}"));
                    }
                }
            }
        }
        for n in 1..=50usize {
            let det = det_ls(n).map_err(|e| e.to_string())?;
            if !(&det % BigInt::from(2)).is_zero() {
                return Err(format!("det L_S odd at n={n}"));
            }
        }
        for n in 1..=2usize {
            let lap = build_chain(n).unwrap().laplacian();
            let r0 = resistance_matrix_grounded(&lap, 0).map_err(|e| e.to_string())?;
            let r_mid =
                resistance_matrix_grounded(&lap, lap.order() / 2).map_err(|e| e.to_string())?;
            if r0 != r_mid {
                return Err(format!("grounding changes resistances at n={n}"));
            }
        }
        Ok("unit identities, r<=d (n<=3), det parity (n<=50), ground invariance".into())
    })
}

/// Negative control: the factorization identity must detect a graph whose
/// pairing is not an automorphism.
#[test]
fn tampered_graph_fails_factorization() {
    let g = build_chain(1).unwrap();
    let (l11, l12) = g.block_partition();
    let (la, ls) = split(&l11, &l12).unwrap();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let pos = edges.iter().position(|&e| e == (3, 8)).unwrap();
    edges[pos] = (3, 9); // move one rung: pairing broken
    let tampered = IntMatrix::laplacian_from_edges(g.vertex_count(), &edges);
    assert!(decompose::factorization_check(&tampered, &la, &ls).is_err());
}
