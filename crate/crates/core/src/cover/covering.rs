use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::cat::{CatFunctor, FiniteCategory, Mor};
use crate::cover::action::GroupAction;
use crate::error::{Error, Result};
use crate::frac::walk::{Dir, Step};
use crate::group::FiniteGroup;

/// A functor verified to be a covering: surjective on objects and
/// bijective on every star, tags preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringFunctor {
    functor: CatFunctor,
    fibres: Vec<Vec<usize>>,
    out_lift: HashMap<(usize, usize), usize>,
    in_lift: HashMap<(usize, usize), usize>,
}

/// Verifies the covering conditions. Both tags of every star are checked,
/// even when one would suffice.
pub fn check_covering(functor: &CatFunctor) -> Result<CoveringFunctor> {
    let (total, base) = (functor.source(), functor.target());
    let mut fibres = vec![Vec::new(); base.object_count()];
    for c in 0..total.object_count() {
        fibres[functor.on_object(c)].push(c);
    }
    if let Some(b) = fibres.iter().position(|f| f.is_empty()) {
        return Err(Error::NotSurjectiveOnObjects(base.object_name(b).to_string()));
    }
    let mut out_lift = HashMap::new();
    let mut in_lift = HashMap::new();
    for c in 0..total.object_count() {
        let b = functor.on_object(c);
        let tags = [
            (total.outgoing(c), base.outgoing(b), &mut out_lift, "source"),
            (total.incoming(c), base.incoming(b), &mut in_lift, "target"),
        ];
        for (upstairs, downstairs, lift, tag) in tags {
            for &m in upstairs {
                let image = match functor.apply(Mor::Arrow(m)) {
                    Mor::Arrow(a) => a,
                    Mor::Id(_) => {
                        return Err(Error::StarNotInjective {
                            object: total.object_name(c).to_string(),
                            first: total.arrow_name(m).to_string(),
                            second: format!("an identity ({tag} star)"),
                        })
                    }
                };
                if let Some(prev) = lift.insert((c, image), m) {
                    return Err(Error::StarNotInjective {
                        object: total.object_name(c).to_string(),
                        first: total.arrow_name(prev).to_string(),
                        second: total.arrow_name(m).to_string(),
                    });
                }
            }
            if let Some(&missing) = downstairs.iter().find(|&&a| !lift.contains_key(&(c, a))) {
                return Err(Error::StarNotSurjective {
                    object: total.object_name(c).to_string(),
                    missing: format!("{} ({tag} star)", base.arrow_name(missing)),
                });
            }
        }
    }
    Ok(CoveringFunctor {
        functor: functor.clone(),
        fibres,
        out_lift,
        in_lift,
    })
}

impl CoveringFunctor {
    pub fn functor(&self) -> &CatFunctor {
        &self.functor
    }

    pub fn total(&self) -> &Arc<FiniteCategory> {
        self.functor.source()
    }

    pub fn base(&self) -> &Arc<FiniteCategory> {
        self.functor.target()
    }

    pub fn fibres(&self) -> &[Vec<usize>] {
        &self.fibres
    }

    pub fn fibre(&self, b: usize) -> &[usize] {
        &self.fibres[b]
    }

    /// The arrow over `base_arrow` leaving `c`.
    pub fn lift_out(&self, c: usize, base_arrow: usize) -> Option<usize> {
        self.out_lift.get(&(c, base_arrow)).copied()
    }

    /// The arrow over `base_arrow` arriving at `c`.
    pub fn lift_in(&self, c: usize, base_arrow: usize) -> Option<usize> {
        self.in_lift.get(&(c, base_arrow)).copied()
    }

    /// Lifts a base morphism with source over `c`; identities lift to
    /// identities.
    pub fn lift_mor(&self, c: usize, m: Mor) -> Option<Mor> {
        match m {
            Mor::Id(_) => Some(Mor::Id(c)),
            Mor::Arrow(a) => self.lift_out(c, a).map(Mor::Arrow),
        }
    }

    /// Follows a walk in the base starting at `c`, returning the end object.
    pub fn lift_walk(&self, c: usize, steps: &[Step]) -> Option<usize> {
        let total = self.total();
        let mut at = c;
        for s in steps {
            at = match s.dir {
                Dir::Fwd => total.arrows()[self.lift_out(at, s.mor)?].tgt,
                Dir::Inv => total.arrows()[self.lift_in(at, s.mor)?].src,
            };
        }
        Some(at)
    }
}

/// Tries to extend `c0 ↦ image` to a functor `H: C → D` over the base,
/// by transport along stars. `None` if the transport is contradictory.
fn transport(
    source: &CatFunctor,
    target: &CoveringFunctor,
    c0: usize,
    image: usize,
    mut rng: Option<&mut dyn RngCore>,
) -> Option<CatFunctor> {
    let cat = source.source();
    let mut objects: Vec<Option<usize>> = vec![None; cat.object_count()];
    let mut arrows: Vec<Option<usize>> = vec![None; cat.arrow_count()];
    objects[c0] = Some(image);
    let mut queue = VecDeque::from([c0]);
    while let Some(x) = queue.pop_front() {
        let hx = objects[x]?;
        let mut incident: Vec<(usize, bool)> = cat
            .outgoing(x)
            .iter()
            .map(|&m| (m, true))
            .chain(cat.incoming(x).iter().map(|&m| (m, false)))
            .collect();
        if let Some(r) = rng.as_deref_mut() {
            incident.shuffle(r);
        }
        for (m, outgoing) in incident {
            let base = source.apply(Mor::Arrow(m)).arrow()?;
            let (lifted, other, hother) = if outgoing {
                let l = target.lift_out(hx, base)?;
                (l, cat.arrows()[m].tgt, target.total().arrows()[l].tgt)
            } else {
                let l = target.lift_in(hx, base)?;
                (l, cat.arrows()[m].src, target.total().arrows()[l].src)
            };
            match arrows[m] {
                Some(prev) if prev != lifted => return None,
                _ => arrows[m] = Some(lifted),
            }
            match objects[other] {
                Some(prev) if prev != hother => return None,
                Some(_) => {}
                None => {
                    objects[other] = Some(hother);
                    queue.push_back(other);
                }
            }
        }
    }
    let objects: Option<Vec<usize>> = objects.into_iter().collect();
    let arrows: Option<Vec<Mor>> = arrows.into_iter().map(|a| a.map(Mor::Arrow)).collect();
    CatFunctor::new(cat.clone(), target.total().clone(), objects?, arrows?).ok()
}

/// The unique functor `H` with `G∘H = F` and `H(c) = d`, if one exists.
pub fn lift_pointed(
    f: &CoveringFunctor,
    g: &CoveringFunctor,
    c: usize,
    d: usize,
) -> Result<Option<CatFunctor>> {
    lift_pointed_with(f, g, c, d, None)
}

/// [`lift_pointed`] with the star traversal order shuffled by `rng`.
pub fn lift_pointed_with(
    f: &CoveringFunctor,
    g: &CoveringFunctor,
    c: usize,
    d: usize,
    rng: Option<&mut dyn RngCore>,
) -> Result<Option<CatFunctor>> {
    if f.functor.on_object(c) != g.functor.on_object(d) {
        return Err(Error::FibreMismatch);
    }
    if !f.total().is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(transport(&f.functor, g, c, d, rng))
}

/// Automorphisms of a covering over a connected total category, found by
/// extending the base object to each point of its fibre. Elements are
/// named after the image of the first object.
pub fn aut_group(f: &CoveringFunctor) -> Result<GroupAction> {
    let total = f.total();
    if !total.is_connected() {
        return Err(Error::NotConnected);
    }
    let c0 = 0;
    let autos: Vec<CatFunctor> = f
        .fibre(f.functor.on_object(c0))
        .iter()
        .filter_map(|&c| transport(&f.functor, f, c0, c, None))
        .filter(|h| h.is_isomorphism())
        .collect();
    let image = |h: &CatFunctor| h.on_object(c0);
    let index: HashMap<usize, usize> = autos.iter().enumerate().map(|(i, h)| (image(h), i)).collect();
    let table = autos
        .iter()
        .map(|a| autos.iter().map(|b| index[&a.on_object(b.on_object(c0))]).collect())
        .collect();
    let names = autos
        .iter()
        .map(|h| total.object_name(image(h)).to_string())
        .collect();
    let group = FiniteGroup::new(names, table)?;
    GroupAction::new(total.clone(), group, autos)
}

/// Connected total category and automorphism group as large as a fibre.
pub fn is_galois(f: &CoveringFunctor) -> bool {
    match aut_group(f) {
        Ok(action) => action.group().order() == f.fibre(f.functor.on_object(0)).len(),
        Err(_) => false,
    }
}

/// A group homomorphism between automorphism groups, with its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub images: Vec<usize>,
    pub kernel: Vec<usize>,
    pub surjective: bool,
}

/// The homomorphism `λ_H: Γ → Γ′` with `H∘γ = λ(γ)∘H`, for a map `H` of
/// Galois coverings with automorphism actions `gamma` and `gamma_prime`.
pub fn lambda_of(
    h: &CatFunctor,
    gamma: &GroupAction,
    gamma_prime: &GroupAction,
) -> Result<GroupHom> {
    let c0 = 0;
    let mut images = Vec::with_capacity(gamma.group().order());
    for g in 0..gamma.group().order() {
        let h_gamma = h.after(gamma.functor(g))?;
        let want = h_gamma.on_object(c0);
        let candidate = (0..gamma_prime.group().order())
            .find(|&k| gamma_prime.functor(k).on_object(h.on_object(c0)) == want)
            .ok_or_else(|| {
                Error::NotEquivariant(format!("no automorphism matches {}", gamma.group().name(g)))
            })?;
        if gamma_prime.functor(candidate).after(h)? != h_gamma {
            return Err(Error::NotEquivariant(format!(
                "{} does not descend along the map",
                gamma.group().name(g)
            )));
        }
        images.push(candidate);
    }
    let e = gamma_prime.group().identity();
    let kernel: Vec<usize> = (0..images.len()).filter(|&g| images[g] == e).collect();
    let fixing: Vec<usize> = (0..images.len())
        .filter(|&g| h.after(gamma.functor(g)).is_ok_and(|hg| hg == *h))
        .collect();
    if kernel != fixing {
        return Err(Error::NotEquivariant("kernel differs from the stabilizer of H".into()));
    }
    let mut hit = vec![false; gamma_prime.group().order()];
    for &i in &images {
        hit[i] = true;
    }
    Ok(GroupHom {
        surjective: hit.iter().all(|&b| b),
        images,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_is_galois() {
        let k2 = Arc::new(fixtures::k2());
        let id = check_covering(&CatFunctor::identity(k2)).unwrap();
        assert!(id.fibres().iter().all(|f| f.len() == 1));
        assert_eq!(aut_group(&id).unwrap().group().order(), 1);
        assert!(is_galois(&id));
    }

    #[test]
    fn folding_cover() {
        let fold = fixtures::k2_fold();
        let cov = check_covering(&fold).unwrap();
        assert!(cov.fibres().iter().all(|f| f.len() == 2));
        assert_eq!(aut_group(&cov).unwrap_err(), Error::NotConnected);
        assert!(!is_galois(&cov));
    }

    #[test]
    fn star_failures() {
        // K2 -> Z2GRP sends alpha to an identity
        let x = fixtures::k2_z2_one_object_grading();
        assert!(matches!(
            check_covering(x.functor()).unwrap_err(),
            Error::StarNotInjective { .. }
        ));
        // collapsing alpha and beta: not injective on the star
        let collapse = fixtures::k2_collapse();
        assert!(matches!(
            check_covering(&collapse).unwrap_err(),
            Error::StarNotInjective { .. }
        ));
    }

    #[test]
    fn non_galois_triple_cover() {
        let cov = check_covering(&fixtures::k3_triple_cover()).unwrap();
        assert!(cov.total().is_connected());
        assert!(aut_group(&cov).unwrap().group().order() < 3);
        assert!(!is_galois(&cov));
    }

    #[test]
    fn pointed_lifts() {
        let smash = fixtures::k2_z2_smash();
        let cover = smash.covering().clone();
        let k2 = cover.base().clone();
        let id = check_covering(&CatFunctor::identity(k2.clone())).unwrap();
        // F over the identity covering: H = F
        let h = lift_pointed(&cover, &id, 0, cover.functor().on_object(0))
            .unwrap()
            .unwrap();
        assert_eq!(&h.morphism_map(), &cover.functor().morphism_map());
        // identity covering cannot factor through the 2-fold cover
        let x = k2.object("x").unwrap();
        let over_x = cover.fibre(x)[0];
        assert_eq!(lift_pointed(&id, &cover, x, over_x).unwrap(), None);
        // pointing mismatch
        let x0 = k2.object("x0").unwrap();
        assert_eq!(
            lift_pointed(&id, &cover, x0, over_x).unwrap_err(),
            Error::FibreMismatch
        );
    }

    #[test]
    fn lambda_collapses_onto_trivial_group() {
        let smash = fixtures::k2_z2_smash();
        let cover = smash.covering();
        let id = check_covering(&CatFunctor::identity(cover.base().clone())).unwrap();
        let gamma = aut_group(cover).unwrap();
        let trivial = aut_group(&id).unwrap();
        let lambda = lambda_of(cover.functor(), &gamma, &trivial).unwrap();
        assert_eq!(lambda.kernel.len(), 2);
        assert!(lambda.surjective);
        let own = CatFunctor::identity(cover.total().clone());
        let lambda = lambda_of(&own, &gamma, &gamma).unwrap();
        assert_eq!(lambda.images, vec![0, 1]);
        assert_eq!(lambda.kernel, vec![gamma.group().identity()]);
    }
}
