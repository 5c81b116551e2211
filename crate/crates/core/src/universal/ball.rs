use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use crate::cover::{check_covering, is_galois, CoveringFunctor};
use crate::error::{Error, Result};
use crate::frac::presentation::{pi1_presentation, GroupPresentation, SpanningTree};
use crate::frac::walk::Step;
use crate::frac::word::{reduced_words, Letter, Word};

/// A finite truncation of the universal cover: objects `(b, w)` stand for
/// `γ = w·τ_b⁻¹ ∈ Q𝓑(b, b0)`, with `τ_b` the tree path from `b0` and `w` a
/// reduced word in the free fundamental group, `|w| ≤ radius`.
#[derive(Clone, Debug)]
pub struct CoverBall {
    category: Arc<FiniteCategory>,
    projection: CatFunctor,
    boundary: Vec<bool>,
    coords: Vec<(usize, Word)>,
    /// Loop word `ℓ_f = τ_tgt⁻¹·f·τ_src` of every base arrow.
    loops: Vec<Word>,
    presentation: GroupPresentation,
    tree: SpanningTree,
    base_object: usize,
    radius: usize,
}

impl CoverBall {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn projection(&self) -> &CatFunctor {
        &self.projection
    }

    pub fn base(&self) -> &Arc<FiniteCategory> {
        self.projection.target()
    }

    pub fn boundary(&self) -> &[bool] {
        &self.boundary
    }

    pub fn coords(&self) -> &[(usize, Word)] {
        &self.coords
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn base_object(&self) -> usize {
        self.base_object
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn loop_word(&self, f: usize) -> &Word {
        &self.loops[f]
    }

    pub fn object_of(&self, b: usize, w: &Word) -> Option<usize> {
        self.coords.iter().position(|(c, v)| *c == b && v == w)
    }

    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.coords.len()).filter(|&c| !self.boundary[c])
    }

    /// The star of every interior object maps bijectively onto the star of
    /// its image, tags preserved.
    pub fn interior_stars_bijective(&self) -> bool {
        let (ball, base) = (&self.category, self.base());
        self.interior().all(|c| {
            let b = self.projection.on_object(c);
            let image = |list: &[usize]| -> Vec<usize> {
                let mut v: Vec<usize> = list
                    .iter()
                    .filter_map(|&m| self.projection.apply(Mor::Arrow(m)).arrow())
                    .collect();
                v.sort_unstable();
                v
            };
            let sorted = |list: &[usize]| {
                let mut v = list.to_vec();
                v.sort_unstable();
                v
            };
            image(ball.outgoing(c)) == sorted(base.outgoing(b))
                && image(ball.incoming(c)) == sorted(base.incoming(b))
        })
    }

    /// Deck translation by a word `g`: `(b, w) ↦ (b, g·w)`. Returns the
    /// object map from this ball into `other` on interior objects, or `None`
    /// if some translate is missing there.
    pub fn translate_into(&self, g: &Word, other: &CoverBall) -> Option<Vec<(usize, usize)>> {
        self.interior()
            .map(|c| {
                let (b, w) = &self.coords[c];
                other.object_of(*b, &g.mul(w)).map(|d| (c, d))
            })
            .collect()
    }
}

/// The radius-`r` ball of the universal cover of `B` around `(b0, 1)`.
pub fn universal_ball(base: &Arc<FiniteCategory>, b0: &str, radius: usize) -> Result<CoverBall> {
    let presentation = pi1_presentation(base, b0)?;
    if !presentation.is_free() {
        return Err(Error::BudgetOrNonFree(presentation.relators().len()));
    }
    let b0_index = base.object(b0).ok_or_else(|| Error::NoSuchObject(b0.to_string()))?;
    let tree = SpanningTree::build(base.object_count(), base.arrows(), b0_index)?;
    let loops: Vec<Word> = (0..base.arrow_count())
        .map(|f| presentation.translate(&Word::generator(f)))
        .collect();
    let words = reduced_words(presentation.generators(), radius);
    let mut coords = Vec::new();
    let mut names = Vec::new();
    let mut index: HashMap<(usize, Word), usize> = HashMap::new();
    for b in 0..base.object_count() {
        for w in &words {
            index.insert((b, w.clone()), coords.len());
            names.push(format!("({},{})", base.object_name(b), presentation.display_word(w)));
            coords.push((b, w.clone()));
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_data: Vec<(usize, usize)> = Vec::new();
    let mut arrow_index: HashMap<(usize, usize), usize> = HashMap::new();
    for (f, a) in base.arrows().iter().enumerate() {
        for w in &words {
            let w2 = w.mul(&loops[f].inverse());
            if let Some(&tgt) = index.get(&(a.tgt, w2)) {
                let src = index[&(a.src, w.clone())];
                arrow_index.insert((f, src), arrows.len());
                arrow_data.push((f, src));
                arrows.push(Arrow {
                    name: format!("{}@{}", a.name, names[src]),
                    src,
                    tgt,
                });
            }
        }
    }
    let mut table = HashMap::new();
    for (k1, &(f, src)) in arrow_data.iter().enumerate() {
        let mid = arrows[k1].tgt;
        for &g in base.outgoing(base.arrows()[f].tgt) {
            let Some(&k2) = arrow_index.get(&(g, mid)) else {
                continue;
            };
            let composite = match base.compose(Mor::Arrow(g), Mor::Arrow(f)).expect("composable") {
                Mor::Id(_) => Mor::Id(src),
                Mor::Arrow(gf) => Mor::Arrow(arrow_index[&(gf, src)]),
            };
            table.insert((k2, k1), composite);
        }
    }
    let boundary = coords
        .iter()
        .map(|(b, w)| {
            let out_ok = base
                .outgoing(*b)
                .iter()
                .all(|&f| w.mul(&loops[f].inverse()).len() <= radius);
            let in_ok = base.incoming(*b).iter().all(|&f| w.mul(&loops[f]).len() <= radius);
            !(out_ok && in_ok)
        })
        .collect();
    let category = Arc::new(FiniteCategory::from_parts_trusted(names, arrows, table)?);
    let projection = CatFunctor::new(
        category.clone(),
        base.clone(),
        coords.iter().map(|(b, _)| *b).collect(),
        arrow_data.iter().map(|&(f, _)| Mor::Arrow(f)).collect(),
    )?;
    Ok(CoverBall {
        category,
        projection,
        boundary,
        coords,
        loops,
        presentation,
        tree,
        base_object: b0_index,
        radius,
    })
}

/// Steps of the loop walk `τ_tgt⁻¹·f·τ_src` for a signed generator, in
/// application order, starting and ending at the base object.
fn loop_steps(ball: &CoverBall, letter: Letter) -> Vec<Step> {
    let base = ball.base();
    let arrows = base.arrows();
    let a = &arrows[letter.gen];
    let tree_steps = |x: usize| -> Vec<Step> {
        ball.tree
            .path_from_root(arrows, x)
            .into_iter()
            .map(|(m, fwd)| if fwd { Step::fwd(m) } else { Step::inv(m) })
            .collect()
    };
    let mut steps = tree_steps(a.src);
    steps.push(Step::fwd(letter.gen));
    steps.extend(tree_steps(a.tgt).into_iter().rev().map(|s| s.flipped()));
    if letter.inv {
        steps.reverse();
        for s in &mut steps {
            *s = s.flipped();
        }
    }
    steps
}

/// The map of coverings from the ball into a finite pointed Galois
/// covering `F` of the same base, sending `(b0, 1)` to `c0`: `(b, w)` goes
/// to the end of the lift of `τ_b·w⁻¹` at `c0`. Verified to be a functor
/// commuting with the projections.
pub fn covers_all(ball: &CoverBall, f: &CoveringFunctor, c0: usize) -> Result<CatFunctor> {
    if **f.base() != **ball.base() {
        return Err(Error::EndpointMismatch("coverings have different bases".into()));
    }
    if f.functor().on_object(c0) != ball.base_object {
        return Err(Error::FibreMismatch);
    }
    if !is_galois(f) {
        return Err(Error::NotGalois);
    }
    let arrows = ball.base().arrows();
    let mut objects = Vec::with_capacity(ball.coords.len());
    for (b, w) in &ball.coords {
        // w⁻¹ read right to left, then the tree path to b
        let mut steps = Vec::new();
        for &l in w.inverse().letters().iter().rev() {
            steps.extend(loop_steps(ball, l));
        }
        steps.extend(
            ball.tree
                .path_from_root(arrows, *b)
                .into_iter()
                .map(|(m, fwd)| if fwd { Step::fwd(m) } else { Step::inv(m) }),
        );
        let end = f.lift_walk(c0, &steps).ok_or(Error::NotGalois)?;
        objects.push(end);
    }
    let morphisms = (0..ball.category.arrow_count())
        .map(|k| {
            let src = ball.category.arrows()[k].src;
            let base_arrow = ball.projection.apply(Mor::Arrow(k)).arrow().expect("non-identity");
            f.lift_out(objects[src], base_arrow)
                .map(Mor::Arrow)
                .ok_or(Error::NotGalois)
        })
        .collect::<Result<Vec<_>>>()?;
    let h = CatFunctor::new(ball.category.clone(), f.total().clone(), objects, morphisms)?;
    if f.functor().after(&h)? != ball.projection {
        return Err(Error::NotEquivariant("map does not commute with projections".into()));
    }
    Ok(h)
}

/// The ball's projection is a covering only when there is no boundary.
pub fn ball_as_covering(ball: &CoverBall) -> Result<CoveringFunctor> {
    check_covering(&ball.projection)
}
