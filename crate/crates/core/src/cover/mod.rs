//! Coverings of finite categories: star checks, automorphism groups,
//! orbit categories of free actions, pointed lifting and pullbacks.

mod action;
mod covering;
mod pullback;

pub use action::{orbit_category, GroupAction};
pub use covering::{
    aut_group, check_covering, is_galois, lambda_of, lift_pointed, lift_pointed_with,
    CoveringFunctor, GroupHom,
};
pub use pullback::{fibre_product, pullback_covering, FibreProduct};
