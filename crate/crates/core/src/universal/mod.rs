//! Finite balls in the universal covering of a category with free
//! fundamental group, and the Cayley-graph double for K_E.

mod ball;
mod cayley;

pub use ball::{ball_as_covering, covers_all, universal_ball, CoverBall};
pub use cayley::{cayley_double, CayleyDouble};
