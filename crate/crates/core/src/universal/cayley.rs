use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use crate::error::{Error, Result};
use crate::frac::presentation::GroupPresentation;
use crate::frac::word::{reduced_words, Letter, Word};
use crate::universal::ball::{universal_ball, CoverBall};

/// The double of the radius-`r` Cayley ball of the free group on
/// `E ∖ {α}`, together with the ball of K_E it is isomorphic to.
#[derive(Clone, Debug)]
pub struct CayleyDouble {
    pub base: Arc<FiniteCategory>,
    pub category: Arc<FiniteCategory>,
    /// Free generators `t_e`, one per arrow after the first.
    pub group: GroupPresentation,
    /// `(column, g)` per object; column 0 is `x`, column 1 is `x0`.
    pub vertices: Vec<(usize, Word)>,
    pub ball: CoverBall,
    /// Isomorphism from the double onto the ball.
    pub iso: CatFunctor,
}

/// Vertices `(x, g)` and `(x0, g)` for reduced `g` with `|g| ≤ radius`;
/// the first arrow runs horizontally `(x, g) → (x0, g)` and every other
/// arrow `e` diagonally `(x, g) → (x0, g·t_e)`.
pub fn cayley_double<S: AsRef<str>>(e: &[S], radius: usize) -> Result<CayleyDouble> {
    if e.is_empty() {
        return Err(Error::EmptyE);
    }
    let names: Vec<String> = e.iter().map(|s| s.as_ref().to_string()).collect();
    let objects = ["x", "x0"];
    let base = {
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "x", "x0")).collect();
        Arc::new(FiniteCategory::from_names(&objects, &arrows, &[])?)
    };
    let t_names: Vec<String> = names[1..].iter().map(|n| format!("t_{n}")).collect();
    let group = GroupPresentation::new(&t_names, Vec::new())?;
    let words = reduced_words(group.generators(), radius);
    let mut vertices = Vec::new();
    let mut vertex_names = Vec::new();
    let mut index = HashMap::new();
    for (column, obj) in objects.iter().enumerate() {
        for g in &words {
            index.insert((column, g.clone()), vertices.len());
            vertex_names.push(format!("({obj},{})", group.display_word(g)));
            vertices.push((column, g.clone()));
        }
    }
    let mut arrows = Vec::new();
    let mut labels = Vec::new();
    for (k, name) in names.iter().enumerate() {
        for g in &words {
            let h = if k == 0 { g.clone() } else { g.mul(&Word::generator(k - 1)) };
            if let Some(&tgt) = index.get(&(1, h)) {
                let src = index[&(0, g.clone())];
                labels.push(k);
                arrows.push(Arrow {
                    name: format!("{name}@{}", vertex_names[src]),
                    src,
                    tgt,
                });
            }
        }
    }
    let category = Arc::new(FiniteCategory::from_parts(vertex_names, arrows, HashMap::new())?);

    let ball = universal_ball(&base, "x0", radius)?;
    // t_e ↦ ℓ_e⁻¹, which is a single free generator of the ball
    let images: Vec<Letter> = (1..names.len())
        .map(|k| {
            let l = ball.loop_word(k);
            match l.letters() {
                [letter] => Ok(letter.inverse()),
                _ => Err(Error::NotEquivariant(format!("loop of {} is not a generator", names[k]))),
            }
        })
        .collect::<Result<_>>()?;
    let to_ball = |g: &Word| -> Word {
        Word::new(g.letters().iter().map(|l| {
            let image = images[l.gen];
            if l.inv {
                image.inverse()
            } else {
                image
            }
        }))
    };
    let object_map = vertices
        .iter()
        .map(|(column, g)| {
            ball.object_of(*column, &to_ball(g))
                .ok_or_else(|| Error::NotEquivariant("vertex missing from the ball".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ball_cat = ball.category();
    let morphism_map = category
        .arrows()
        .iter()
        .zip(&labels)
        .map(|(a, &k)| {
            ball_cat
                .outgoing(object_map[a.src])
                .iter()
                .copied()
                .find(|&m| ball.projection().apply(Mor::Arrow(m)) == Mor::Arrow(k))
                .map(Mor::Arrow)
                .ok_or_else(|| Error::NotEquivariant("edge missing from the ball".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = CatFunctor::new(category.clone(), ball_cat.clone(), object_map, morphism_map)?;
    if !iso.is_isomorphism() {
        return Err(Error::NotEquivariant("double is not isomorphic to the ball".into()));
    }
    Ok(CayleyDouble {
        base,
        category,
        group,
        vertices,
        ball,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_arrows() {
        for r in 0..4 {
            let d = cayley_double(&["alpha", "beta"], r).unwrap();
            assert_eq!(d.category.object_count(), 4 * r + 2);
            assert_eq!(d.category.arrow_count(), 4 * r + 1);
        }
        let d = cayley_double(&["alpha", "beta"], 2).unwrap();
        assert!(d.category.object("(x0,t_beta^-1*t_beta^-1)").is_some());
        let horizontal = d.category.arrow("alpha@(x,t_beta)").unwrap();
        assert_eq!(d.category.object_name(d.category.arrows()[horizontal].tgt), "(x0,t_beta)");
    }

    #[test]
    fn one_arrow_is_k1() {
        for r in [0, 3] {
            let d = cayley_double(&["alpha"], r).unwrap();
            assert_eq!(d.category.object_count(), 2);
            assert_eq!(d.category.arrow_count(), 1);
        }
    }

    #[test]
    fn three_arrows() {
        let d = cayley_double(&["alpha", "beta", "gamma"], 1).unwrap();
        assert_eq!(d.category.object_count(), 10);
        assert_eq!(cayley_double::<&str>(&[], 1).unwrap_err(), Error::EmptyE);
    }
}
