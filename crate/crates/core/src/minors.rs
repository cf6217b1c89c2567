//! The corner-minor sequences of `L_S`.
//!
//! `c_k` is the determinant of the leading `k×k` corner of `L_S`, `e_k` of the
//! trailing corner, for `k = 1..4n`. Both satisfy four-branch three-term
//! recurrences (the tridiagonal continuant, with the branch multiplier given
//! by the diagonal pattern), a second-layer recurrence `x_k = 30x_{k−4} −
//! x_{k−8}`, and Binet-style closed forms over `Q(√14)` with the root pair
//! `A = 15 + 4√14`, `B = 15 − 4√14`.
//!
//! The two sequences are genuinely asymmetric: `c` steps through multipliers
//! `(4,2,2,4)` per residue class, `e` through `(4,4,2,2)`. The corner
//! determinants confirm this; it is not a transcription artifact.

use num_traits::Signed;

use crate::arith::{ratio, recurrence_roots, BigInt, QuadNumber};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Which corner of the matrix a minor sequence walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorKind {
    Leading,
    Trailing,
}

/// One of the integer sequences `c` (leading) or `e` (trailing), 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSequence {
    kind: MinorKind,
    values: Vec<BigInt>,
}

impl MinorSequence {
    pub fn kind(&self) -> MinorKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-based index `k`.
    pub fn value(&self, k: usize) -> &BigInt {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// True when `x_k = 30·x_{k−4} − x_{k−8}` wherever all three indices exist.
    pub fn second_layer_holds(&self) -> bool {
        (9..=self.len()).all(|k| {
            *self.value(k) == BigInt::from(30) * self.value(k - 4) - self.value(k - 8)
        })
    }

    /// All values positive and strictly increasing within each residue class
    /// mod 4.
    pub fn residue_classes_increase(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
            && (5..=self.len()).all(|k| self.value(k) > self.value(k - 4))
    }
}

const C_INITIAL: [i64; 4] = [3, 5, 7, 23];
const C_MULTIPLIERS: [i64; 4] = [4, 2, 2, 4];
const E_INITIAL: [i64; 4] = [3, 11, 19, 27];
const E_MULTIPLIERS: [i64; 4] = [4, 4, 2, 2];

/// Binet numerator constants `p + q√14` of the closed forms, per branch.
const C_CLOSED: [(i64, i64); 4] = [(10, 3), (18, 5), (26, 7), (86, 23)];
const E_CLOSED: [(i64, i64); 4] = [(11, 3), (41, 11), (71, 19), (101, 27)];

fn by_recurrence(
    n: usize,
    kind: MinorKind,
    initial: &[i64; 4],
    multipliers: &[i64; 4],
) -> Result<MinorSequence> {
    if n < 1 {
        return Err(Error::InvalidN(n as i64));
    }
    let len = 4 * n;
    let mut values: Vec<BigInt> = initial.iter().take(len).map(|&v| BigInt::from(v)).collect();
    for k in 5..=len {
        let r = (k - 1) % 4; // residue class of branch k
        let next = BigInt::from(multipliers[r]) * &values[k - 2] - &values[k - 3];
        values.push(next);
    }
    let seq = MinorSequence { kind, values };
    assert!(
        seq.second_layer_holds(),
        "{kind:?} minors violate the 30/−1 second-layer recurrence"
    );
    Ok(seq)
}

/// The leading-minor sequence `c_1..c_4n` by the four-branch recurrence.
pub fn c_by_recurrence(n: usize) -> Result<MinorSequence> {
    by_recurrence(n, MinorKind::Leading, &C_INITIAL, &C_MULTIPLIERS)
}

/// The trailing-minor sequence `e_1..e_4n` by the four-branch recurrence.
pub fn e_by_recurrence(n: usize) -> Result<MinorSequence> {
    by_recurrence(n, MinorKind::Trailing, &E_INITIAL, &E_MULTIPLIERS)
}

fn closed_form(constants: &[(i64, i64); 4], i: u32, r: u8) -> Result<BigInt> {
    assert!((1..=4).contains(&r), "branch must be 1..=4");
    let (p, q) = constants[(r - 1) as usize];
    let (root_a, root_b) = recurrence_roots();
    let head = QuadNumber::from_pair(p, q);
    let lhs = &head * &root_a.pow(i);
    let rhs = &head.conjugate() * &root_b.pow(i);
    // Division by 2√14 realized exactly as multiplication by √14/28.
    let inv_two_sqrt14 = QuadNumber::new(ratio(0, 1), ratio(1, 28));
    let value = &(&lhs - &rhs) * &inv_two_sqrt14;
    value.to_bigint()
}

/// Closed form for `c_{4i+r}`; exact, with a hard failure if the √14 part
/// fails to cancel.
pub fn c_closed(i: u32, r: u8) -> Result<BigInt> {
    closed_form(&C_CLOSED, i, r)
}

/// Closed form for `e_{4i+r}`.
pub fn e_closed(i: u32, r: u8) -> Result<BigInt> {
    closed_form(&E_CLOSED, i, r)
}

/// Exact determinant of the `k×k` corner submatrix, by fraction-free
/// elimination.
pub fn principal_minor(m: &IntMatrix, k: usize, side: MinorKind) -> BigInt {
    assert!(k >= 1 && k <= m.order(), "corner size out of range");
    match side {
        MinorKind::Leading => m.leading_principal(k).determinant(),
        MinorKind::Trailing => m.trailing_principal(k).determinant(),
    }
}
