//! Finite groupoids, gradings, smash products and the associated grading
//! of a Galois covering.

mod associated;
mod groupoid;
mod smash;

pub use associated::{associated_grading, roundtrip_iso, AssociatedGrading, ObjectSection, RoundTrip};
pub use groupoid::{
    isomorphism_theorem_holds, kernel_functor, quotient_groupoid, CompleteGroupoid,
    FiniteGroupoid, NormalSubgroupoid,
};
pub use smash::{
    grading_morphism, grading_morphism_in_order, is_effective, slice_groupoid,
    slice_pullback_check, smash_map, smash_product, smash_quotient_iso, Grading, Smash,
};
