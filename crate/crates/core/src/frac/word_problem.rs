use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::frac::coset::{coset_enumerate, DEFAULT_COSET_ROWS};
use crate::frac::presentation::{tietze_simplify, GroupPresentation, DEFAULT_TIETZE_STEPS};
use crate::frac::smith::{exponent_vector, relation_matrix, smith_normal_form};
use crate::frac::word::Word;

/// Answer of a budgeted decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

/// Limits for the word problem and related searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub tietze_steps: usize,
    pub coset_rows: usize,
    /// Maximum number of relator insertions in the fallback search.
    pub search_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            tietze_steps: DEFAULT_TIETZE_STEPS,
            coset_rows: DEFAULT_COSET_ROWS,
            search_depth: 12,
        }
    }
}

// Words visited by the fallback search before giving up.
const SEARCH_NODES: usize = 50_000;

/// Decides `u = v` in the group presented by `p`. Words may use any symbol
/// of `p`, eliminated ones included.
///
/// Definite answers come from: free reduction after simplification when
/// the simplified presentation is free; the regular representation when
/// coset enumeration closes; a non-zero image in the abelianization; or a
/// relator-insertion derivation of `u·v⁻¹ = 1`. Anything else is Unknown.
pub fn word_equal(p: &GroupPresentation, u: &Word, v: &Word, budget: &Budget) -> Verdict {
    if u == v {
        return Verdict::True;
    }
    let simplified = tietze_simplify(p, budget.tietze_steps).presentation;
    let w = simplified.translate(&u.mul(&v.inverse()));
    if w.is_empty() {
        return Verdict::True;
    }
    if simplified.is_free() {
        return Verdict::False;
    }
    if let Some(table) = coset_enumerate(&simplified, budget.coset_rows) {
        return Verdict::from_bool(table.trace(&w) == Some(0));
    }
    let snf = smith_normal_form(&relation_matrix(&simplified), simplified.generators().len());
    if !snf.row_span_contains(&exponent_vector(&simplified, &w)) {
        return Verdict::False;
    }
    if derives_identity(&simplified, &w, budget.search_depth) {
        return Verdict::True;
    }
    Verdict::Unknown
}

/// Breadth-first search for a derivation of `w = 1` by inserting cyclic
/// conjugates of relators (and their inverses) and freely reducing.
fn derives_identity(p: &GroupPresentation, w: &Word, depth: usize) -> bool {
    let mut pieces: Vec<Word> = Vec::new();
    for r in p.relators() {
        for base in [r.clone(), r.inverse()] {
            for k in 0..base.len() {
                let piece = base.rotated(k);
                if !pieces.contains(&piece) {
                    pieces.push(piece);
                }
            }
        }
    }
    let longest = pieces.iter().map(|p| p.len()).max().unwrap_or(0);
    let cap = w.len() + 2 * longest;
    let mut seen: HashSet<Word> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([(w.clone(), 0)]);
    while let Some((cur, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for at in 0..=cur.len() {
            for piece in &pieces {
                let next = cur.insert(at, piece);
                if next.is_empty() {
                    return true;
                }
                if next.len() > cap || !seen.insert(next.clone()) {
                    continue;
                }
                if seen.len() > SEARCH_NODES {
                    return false;
                }
                queue.push_back((next, d + 1));
            }
        }
    }
    false
}
