use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::frac::presentation::GroupPresentation;
use crate::frac::word::Word;

/// Free rank plus torsion coefficients `d₁ | d₂ | …`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Smith normal form `D = U·A·V` of an integer matrix. Only the diagonal
/// and the column transform `V` are kept.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub col_transform: Vec<Vec<BigInt>>,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Whether a row vector lies in the integer row span of the original
    /// matrix: `v·V` must be divisible by `dᵢ` in the pivot columns and
    /// vanish elsewhere.
    pub fn row_span_contains(&self, v: &[BigInt]) -> bool {
        let n = self.cols;
        for j in 0..n {
            let mut x = BigInt::zero();
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() {
                    x += vi * &self.col_transform[i][j];
                }
            }
            let d = self.diagonal.get(j).cloned().unwrap_or_else(BigInt::zero);
            let ok = if d.is_zero() {
                x.is_zero()
            } else {
                (&x % &d).is_zero()
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Exact Smith normal form by row and column reduction over big integers.
pub fn smith_normal_form(matrix: &[Vec<BigInt>], cols: usize) -> SmithForm {
    let rows = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero entry of the remaining block
        let Some((pi, pj)) = smallest_entry(&a, t, cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let delta = &q * &a[i][t];
                    a[i][j] -= delta;
                }
                for row in v.iter_mut() {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold a non-multiple row into the pivot row
            let pivot = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for j in t..cols {
                a[t][j] = -a[t][j].clone();
            }
        }
        diagonal.push(a[t][t].clone());
    }
    SmithForm {
        diagonal,
        col_transform: v,
        cols,
    }
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().take(cols).skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Exponent-sum matrix: one row per relator, one column per surviving
/// generator.
pub fn relation_matrix(p: &GroupPresentation) -> Vec<Vec<BigInt>> {
    p.relators()
        .iter()
        .map(|r| exponent_vector(p, r))
        .collect()
}

pub fn exponent_vector(p: &GroupPresentation, w: &Word) -> Vec<BigInt> {
    p.generators()
        .iter()
        .map(|&g| BigInt::from(w.exponent_sum(g)))
        .collect()
}

/// The abelianization of the presented group.
pub fn abelianize(p: &GroupPresentation) -> AbelianInvariants {
    let cols = p.generators().len();
    let snf = smith_normal_form(&relation_matrix(p), cols);
    let rank = cols - snf.rank();
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| **d > BigInt::one())
        .map(|d| u64::try_from(d).expect("torsion coefficient fits in u64"))
        .collect();
    AbelianInvariants { rank, torsion }
}
