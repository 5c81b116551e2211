//! Walks, the fundamental groupoid as a group presentation, and the
//! decision procedures used on it.

pub mod coset;
pub mod presentation;
pub mod smith;
pub mod walk;
pub mod word;
pub mod word_problem;

pub use coset::{coset_enumerate, CosetTable, DEFAULT_COSET_ROWS};
pub use presentation::{
    pi1_presentation, pi1_presentation_presented, pi1_unsimplified, pi1_unsimplified_presented,
    tietze_simplify, GroupPresentation, Provenance, Simplified, SpanningTree,
    DEFAULT_TIETZE_STEPS,
};
pub use smith::{abelianize, smith_normal_form, AbelianInvariants, SmithForm};
pub use walk::{eval_universal, free_compose, Dir, Step, Walk};
pub use word::{reduced_words, Letter, Word};
pub use word_problem::{word_equal, Budget, Verdict};
