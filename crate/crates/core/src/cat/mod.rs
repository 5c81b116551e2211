//! Finite small categories, functors between them, ideal relations and
//! quotient categories.

mod category;
mod congruence;
mod functor;
mod quiver;

pub use category::{Arrow, FiniteCategory, Mor, Star};
pub use congruence::{congruence_close, quotient_category, Congruence};
pub use functor::CatFunctor;
pub use quiver::{Path, PresentedCategory, Quiver};
