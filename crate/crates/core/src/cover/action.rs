use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use crate::cover::covering::{check_covering, CoveringFunctor};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A finite group acting on a finite category by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    category: Arc<FiniteCategory>,
    group: FiniteGroup,
    functors: Vec<CatFunctor>,
}

impl GroupAction {
    /// Checks that every element acts by an automorphism, the identity acts
    /// trivially and the assignment is a homomorphism.
    pub fn new(
        category: Arc<FiniteCategory>,
        group: FiniteGroup,
        functors: Vec<CatFunctor>,
    ) -> Result<Self> {
        if functors.len() != group.order() {
            return Err(Error::InvalidAction("one automorphism per element required".into()));
        }
        for (g, f) in functors.iter().enumerate() {
            if **f.source() != *category || **f.target() != *category || !f.is_isomorphism() {
                return Err(Error::InvalidAction(format!(
                    "{} does not act by an automorphism",
                    group.name(g)
                )));
            }
        }
        if functors[group.identity()] != CatFunctor::identity(category.clone()) {
            return Err(Error::InvalidAction("the identity element acts non-trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if functors[a].after(&functors[b])? != functors[group.mul(a, b)] {
                    return Err(Error::InvalidAction(format!(
                        "action of {}·{} is not the composite",
                        group.name(a),
                        group.name(b)
                    )));
                }
            }
        }
        Ok(Self {
            category,
            group,
            functors,
        })
    }

    /// The trivial group acting trivially.
    pub fn trivial(category: Arc<FiniteCategory>) -> Self {
        let group = FiniteGroup::cyclic(1).with_names(&["1"]);
        let functors = vec![CatFunctor::identity(category.clone())];
        Self {
            category,
            group,
            functors,
        }
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn functor(&self, g: usize) -> &CatFunctor {
        &self.functors[g]
    }

    pub fn functors(&self) -> &[CatFunctor] {
        &self.functors
    }

    pub fn act_object(&self, g: usize, x: usize) -> usize {
        self.functors[g].on_object(x)
    }

    pub fn act_mor(&self, g: usize, m: Mor) -> Mor {
        self.functors[g].apply(m)
    }

    /// Only the identity fixes an object.
    pub fn is_free(&self) -> bool {
        let e = self.group.identity();
        (0..self.group.order())
            .filter(|&g| g != e)
            .all(|g| (0..self.category.object_count()).all(|x| self.act_object(g, x) != x))
    }

    /// The unique element moving `x` to `y`, for a free action.
    pub fn translator(&self, x: usize, y: usize) -> Option<usize> {
        (0..self.group.order()).find(|&g| self.act_object(g, x) == y)
    }

    /// Object orbits, each sorted, ordered by least member.
    pub fn object_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.category.object_count();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order()).map(|g| self.act_object(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// The orbit category of a free action and its projection, which is
/// verified to be a covering. Objects are named after the least object of
/// their orbit; a morphism orbit is named after its member whose source is
/// that least object.
pub fn orbit_category(action: &GroupAction) -> Result<(Arc<FiniteCategory>, CoveringFunctor)> {
    if !action.is_free() {
        return Err(Error::ActionNotFree(
            "a non-identity element fixes an object".into(),
        ));
    }
    let cat = action.category();
    let orbits = action.object_orbits();
    let mut orbit_of = vec![0; cat.object_count()];
    for (k, orbit) in orbits.iter().enumerate() {
        for &x in orbit {
            orbit_of[x] = k;
        }
    }
    let objects: Vec<String> = orbits
        .iter()
        .map(|o| cat.object_name(o[0]).to_string())
        .collect();
    // representative arrows: source is the least object of its orbit
    let mut arrows = Vec::new();
    let mut arrow_of = vec![usize::MAX; cat.arrow_count()];
    for (m, a) in cat.arrows().iter().enumerate() {
        if a.src != orbits[orbit_of[a.src]][0] {
            continue;
        }
        let k = arrows.len();
        arrows.push(Arrow {
            name: a.name.clone(),
            src: orbit_of[a.src],
            tgt: orbit_of[a.tgt],
        });
        for g in 0..action.group().order() {
            if let Mor::Arrow(gm) = action.act_mor(g, Mor::Arrow(m)) {
                arrow_of[gm] = k;
            }
        }
    }
    if arrow_of.contains(&usize::MAX) {
        return Err(Error::InvalidAction("an arrow is mapped to an identity".into()));
    }
    let reps: Vec<usize> = {
        let mut reps = vec![0; arrows.len()];
        for (m, &k) in arrow_of.iter().enumerate() {
            if cat.arrows()[m].src == orbits[orbit_of[cat.arrows()[m].src]][0] {
                reps[k] = m;
            }
        }
        reps
    };
    let class = |m: Mor| -> Mor {
        match m {
            Mor::Id(x) => Mor::Id(orbit_of[x]),
            Mor::Arrow(a) => Mor::Arrow(arrow_of[a]),
        }
    };
    let mut table = HashMap::new();
    for (kf, &f) in reps.iter().enumerate() {
        let ft = cat.arrows()[f].tgt;
        for (kg, &g) in reps.iter().enumerate() {
            if arrows[kg].src != arrows[kf].tgt {
                continue;
            }
            // translate g so that it starts where f ends
            let h = action
                .translator(cat.arrows()[g].src, ft)
                .expect("objects in one orbit");
            let g2 = action.act_mor(h, Mor::Arrow(g));
            let gf = cat.compose(g2, Mor::Arrow(f)).expect("translate is composable");
            table.insert((kg, kf), class(gf));
        }
    }
    let quotient = Arc::new(FiniteCategory::from_parts_trusted(objects, arrows, table)?);
    let projection = CatFunctor::new(
        cat.clone(),
        quotient.clone(),
        orbit_of.clone(),
        (0..cat.arrow_count()).map(|m| Mor::Arrow(arrow_of[m])).collect(),
    )?;
    let covering = check_covering(&projection)?;
    Ok((quotient, covering))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::covering::{aut_group, is_galois};
    use crate::fixtures;

    #[test]
    fn i2_swap_gives_z2() {
        let action = fixtures::i2_swap();
        let (q, p) = orbit_category(&action).unwrap();
        assert_eq!(q.object_count(), 1);
        assert_eq!(q.arrow_count(), 1);
        let f = Mor::Arrow(0);
        assert_eq!(q.compose(f, f), Some(Mor::Id(0)));
        assert!(is_galois(&p));
        assert_eq!(aut_group(&p).unwrap().group().order(), 2);
    }

    #[test]
    fn trivial_group_gives_isomorphic_quotient() {
        let k2 = Arc::new(fixtures::k2());
        let (q, p) = orbit_category(&GroupAction::trivial(k2.clone())).unwrap();
        assert_eq!(*q, *k2);
        assert!(p.functor().is_isomorphism());
    }

    #[test]
    fn swapping_copies_gives_folding() {
        let action = fixtures::k2_pair_swap();
        let (q, p) = orbit_category(&action).unwrap();
        assert_eq!(q.object_count(), 2);
        assert_eq!(q.arrow_count(), 2);
        assert!(p.fibres().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn invalid_actions() {
        let k2 = Arc::new(fixtures::k2());
        let z2 = FiniteGroup::cyclic(2);
        let id = CatFunctor::identity(k2.clone());
        // the identity acting for the non-identity element is a valid but
        // non-free action
        let action = GroupAction::new(k2.clone(), z2.clone(), vec![id.clone(), id.clone()]).unwrap();
        assert!(matches!(orbit_category(&action).unwrap_err(), Error::ActionNotFree(_)));
        assert!(matches!(
            GroupAction::new(k2, z2, vec![id]).unwrap_err(),
            Error::InvalidAction(_)
        ));
    }
}
