use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use crate::cover::{check_covering, fibre_product, orbit_category, CoveringFunctor, GroupAction};
use crate::error::{Error, Result};
use crate::grading::groupoid::FiniteGroupoid;

/// A functor from a category into a finite groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    functor: CatFunctor,
    groupoid: FiniteGroupoid,
}

impl Grading {
    pub fn new(functor: CatFunctor, groupoid: FiniteGroupoid) -> Result<Self> {
        if **functor.target() != **groupoid.category() {
            return Err(Error::EndpointMismatch("grading target is not the groupoid".into()));
        }
        Ok(Self { functor, groupoid })
    }

    pub fn functor(&self) -> &CatFunctor {
        &self.functor
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn base(&self) -> &Arc<FiniteCategory> {
        self.functor.source()
    }

    pub fn degree(&self, m: Mor) -> Mor {
        self.functor.apply(m)
    }
}

/// A smash product with its projection and the vertex-group action.
#[derive(Clone, Debug)]
pub struct Smash {
    category: Arc<FiniteCategory>,
    covering: CoveringFunctor,
    action: GroupAction,
    point: usize,
    /// `(b, γ)` per object, `γ: X(b) → x0`.
    objects: Vec<(usize, Mor)>,
    /// `(f, γ)` per arrow: `f` leaving `(src f, γ)`.
    arrows: Vec<(usize, Mor)>,
}

impl Smash {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn covering(&self) -> &CoveringFunctor {
        &self.covering
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn objects(&self) -> &[(usize, Mor)] {
        &self.objects
    }

    pub fn arrows(&self) -> &[(usize, Mor)] {
        &self.arrows
    }

    pub fn object_of(&self, b: usize, gamma: Mor) -> Option<usize> {
        self.objects.iter().position(|&o| o == (b, gamma))
    }
}

/// `𝓑 #ₓ₀ X`: objects `(b, γ)` with `γ: X(b) → x0`, and an arrow
/// `f: (b, γ) → (c, δ)` for each `f: b → c` with `δ·X(f) = γ`. Objects are
/// named `(b,γ)`, arrows `f@(b,γ)`.
pub fn smash_product(x: &Grading, x0: usize) -> Result<Smash> {
    let base = x.base();
    let g = x.groupoid();
    let gcat = g.category();
    if x0 >= gcat.object_count() {
        return Err(Error::NoSuchObject(format!("#{x0}")));
    }
    let mut objects = Vec::new();
    let mut names = Vec::new();
    let mut index = HashMap::new();
    for b in 0..base.object_count() {
        for gamma in gcat.hom(x.functor.on_object(b), x0) {
            index.insert((b, gamma), objects.len());
            objects.push((b, gamma));
            names.push(format!("({},{})", base.object_name(b), g.element_name(gamma)));
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_data = Vec::new();
    let mut arrow_index = HashMap::new();
    for (f, a) in base.arrows().iter().enumerate() {
        for gamma in gcat.hom(x.functor.on_object(a.src), x0) {
            let delta = g
                .compose(gamma, g.inverse(x.degree(Mor::Arrow(f))))
                .expect("degree ends at X(src)");
            let src = index[&(a.src, gamma)];
            arrow_index.insert((f, gamma), arrows.len());
            arrow_data.push((f, gamma));
            arrows.push(Arrow {
                name: format!("{}@{}", a.name, names[src]),
                src,
                tgt: index[&(a.tgt, delta)],
            });
        }
    }
    let mut table = HashMap::new();
    for (k1, &(f, gamma)) in arrow_data.iter().enumerate() {
        let mid = arrows[k1].tgt;
        let delta = objects[mid].1;
        for &h in base.outgoing(base.arrows()[f].tgt) {
            let k2 = arrow_index[&(h, delta)];
            let composite = match base.compose(Mor::Arrow(h), Mor::Arrow(f)).expect("composable") {
                Mor::Id(_) => Mor::Id(arrows[k1].src),
                Mor::Arrow(hf) => Mor::Arrow(arrow_index[&(hf, gamma)]),
            };
            table.insert((k2, k1), composite);
        }
    }
    let category = Arc::new(FiniteCategory::from_parts_trusted(names, arrows, table)?);
    let projection = CatFunctor::new(
        category.clone(),
        base.clone(),
        objects.iter().map(|&(b, _)| b).collect(),
        arrow_data.iter().map(|&(f, _)| Mor::Arrow(f)).collect(),
    )?;
    let covering = check_covering(&projection)?;
    // vertex group acting on the second coordinate
    let (group, elements) = g.vertex_table(x0);
    let functors = elements
        .iter()
        .map(|&alpha| {
            let act = |gamma: Mor| g.compose(alpha, gamma).expect("ends at x0");
            let objs = objects.iter().map(|&(b, gamma)| index[&(b, act(gamma))]).collect();
            let mors = arrow_data
                .iter()
                .map(|&(f, gamma)| Mor::Arrow(arrow_index[&(f, act(gamma))]))
                .collect();
            CatFunctor::new(category.clone(), category.clone(), objs, mors)
        })
        .collect::<Result<Vec<_>>>()?;
    let action = GroupAction::new(category.clone(), group, functors)?;
    Ok(Smash {
        category,
        covering,
        action,
        point: x0,
        objects,
        arrows: arrow_data,
    })
}

/// The canonical isomorphism from the orbit category of the vertex-group
/// action on a smash product to the base category.
pub fn smash_quotient_iso(smash: &Smash) -> Result<CatFunctor> {
    let (quotient, projection) = orbit_category(&smash.action)?;
    let base = smash.covering.base();
    let p = smash.covering.functor();
    let mut objects = vec![0; quotient.object_count()];
    for c in 0..smash.category.object_count() {
        objects[projection.functor().on_object(c)] = p.on_object(c);
    }
    let mut arrows = vec![Mor::Id(0); quotient.arrow_count()];
    for m in 0..smash.category.arrow_count() {
        let k = projection.functor().apply(Mor::Arrow(m)).arrow().expect("covering");
        arrows[k] = p.apply(Mor::Arrow(m));
    }
    let iso = CatFunctor::new(quotient, base.clone(), objects, arrows)?;
    if !iso.is_isomorphism() {
        return Err(Error::NotEquivariant("orbit category is not the base".into()));
    }
    Ok(iso)
}

fn check_effective_preconditions(x: &Grading) -> Result<()> {
    if !x.functor.is_bijective_on_objects() {
        return Err(Error::NotBijectiveOnObjects);
    }
    if !x.groupoid.category().is_connected() {
        return Err(Error::TargetNotConnected);
    }
    Ok(())
}

/// Effectiveness, decided by connectivity of the smash product.
pub fn is_effective(x: &Grading) -> Result<bool> {
    check_effective_preconditions(x)?;
    Ok(smash_product(x, 0)?.category.is_connected())
}

/// The unique functor `Z` with `Z∘X = Y`, if any; generated from the
/// degrees of the arrows in declared order.
pub fn grading_morphism(x: &Grading, y: &Grading) -> Option<CatFunctor> {
    let order: Vec<usize> = (0..x.base().arrow_count()).collect();
    grading_morphism_in_order(x, y, &order)
}

/// [`grading_morphism`] seeding the generators in the given arrow order.
pub fn grading_morphism_in_order(x: &Grading, y: &Grading, order: &[usize]) -> Option<CatFunctor> {
    if **x.base() != **y.base() || !x.functor.is_bijective_on_objects() {
        return None;
    }
    let (g, h) = (x.groupoid(), y.groupoid());
    let (gcat, hcat) = (g.category(), h.category());
    let mut objects = vec![usize::MAX; gcat.object_count()];
    for b in 0..x.base().object_count() {
        objects[x.functor.on_object(b)] = y.functor.on_object(b);
    }
    if objects.contains(&usize::MAX) {
        return None;
    }
    let mut image: HashMap<Mor, Mor> = HashMap::new();
    let mut changed = false;
    for x_obj in 0..gcat.object_count() {
        if !assign(Mor::Id(x_obj), Mor::Id(objects[x_obj]), &mut image, &mut changed) {
            return None;
        }
    }
    for &f in order {
        let m = Mor::Arrow(f);
        if !assign(x.degree(m), y.degree(m), &mut image, &mut changed) {
            return None;
        }
    }
    // close under inverses and composition
    loop {
        changed = false;
        let known: Vec<(Mor, Mor)> = image.iter().map(|(&k, &v)| (k, v)).collect();
        for &(a, za) in &known {
            if !assign(g.inverse(a), h.inverse(za), &mut image, &mut changed) {
                return None;
            }
            for &(b, zb) in &known {
                if let Some(ab) = g.compose(a, b) {
                    let zab = h.compose(za, zb)?;
                    if !assign(ab, zab, &mut image, &mut changed) {
                        return None;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let morphisms: Option<Vec<Mor>> = (0..gcat.arrow_count())
        .map(|a| image.get(&Mor::Arrow(a)).copied())
        .collect();
    let z = CatFunctor::new(gcat.clone(), hcat.clone(), objects, morphisms?).ok()?;
    (z.after(&x.functor).ok()? == y.functor).then_some(z)
}

/// Records `m ↦ v`, returning false on a conflicting earlier value.
fn assign(m: Mor, v: Mor, image: &mut HashMap<Mor, Mor>, changed: &mut bool) -> bool {
    match image.get(&m) {
        Some(&prev) => prev == v,
        None => {
            image.insert(m, v);
            *changed = true;
            true
        }
    }
}

/// The map of smash products induced by `Z` with `Z∘X = Y`:
/// `(b, γ) ↦ (b, Z(γ))` and `f ↦ f`.
pub fn smash_map(sx: &Smash, sy: &Smash, z: &CatFunctor) -> Result<CatFunctor> {
    if z.on_object(sx.point) != sy.point {
        return Err(Error::FibreMismatch);
    }
    let objects = sx
        .objects
        .iter()
        .map(|&(b, gamma)| {
            sy.object_of(b, z.apply(gamma))
                .ok_or_else(|| Error::NotEquivariant("degree maps outside the smash".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let arrows = sx
        .arrows
        .iter()
        .map(|&(f, gamma)| {
            sy.arrows
                .iter()
                .position(|&a| a == (f, z.apply(gamma)))
                .map(Mor::Arrow)
                .ok_or_else(|| Error::NotEquivariant("arrow maps outside the smash".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    CatFunctor::new(sx.category.clone(), sy.category.clone(), objects, arrows)
}

/// The slice groupoid `ₓ₀𝓖` (objects: morphisms with target `x0`) with
/// its covering of `𝓖`, `α ↦ src α`.
pub fn slice_groupoid(groupoid: &FiniteGroupoid, x0: usize) -> Result<CoveringFunctor> {
    let g = groupoid.category();
    let objects: Vec<Mor> = (0..g.object_count()).flat_map(|y| g.hom(y, x0)).collect();
    let index: HashMap<Mor, usize> = objects.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let names: Vec<String> = objects.iter().map(|&m| groupoid.element_name(m)).collect();
    let mut arrows = Vec::new();
    let mut data = Vec::new();
    for (mu, a) in g.arrows().iter().enumerate() {
        for alpha2 in g.hom(a.tgt, x0) {
            let alpha = g.compose(alpha2, Mor::Arrow(mu)).expect("composable");
            data.push((mu, alpha));
            arrows.push(Arrow {
                name: format!("{}@{}", a.name, names[index[&alpha]]),
                src: index[&alpha],
                tgt: index[&alpha2],
            });
        }
    }
    let arrow_index: HashMap<(usize, Mor), usize> =
        data.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut table = HashMap::new();
    for (k1, &(mu, alpha)) in data.iter().enumerate() {
        let alpha2 = objects[arrows[k1].tgt];
        for &nu in g.outgoing(g.arrows()[mu].tgt) {
            let k2 = arrow_index[&(nu, alpha2)];
            let composite = match g.compose(Mor::Arrow(nu), Mor::Arrow(mu)).expect("composable") {
                Mor::Id(_) => Mor::Id(arrows[k1].src),
                Mor::Arrow(c) => Mor::Arrow(arrow_index[&(c, alpha)]),
            };
            table.insert((k2, k1), composite);
        }
    }
    let slice = Arc::new(FiniteCategory::from_parts_trusted(names, arrows, table)?);
    let functor = CatFunctor::new(
        slice,
        g.clone(),
        objects.iter().map(|&m| g.src(m)).collect(),
        data.iter().map(|&(mu, _)| Mor::Arrow(mu)).collect(),
    )?;
    check_covering(&functor)
}

/// Builds `𝓑 ×_𝓖 ₓ₀𝓖` and checks that `(b, α) ↦ (b, α)` is an
/// isomorphism onto `𝓑 #ₓ₀ X` over `𝓑`.
pub fn slice_pullback_check(x: &Grading, x0: usize) -> Result<bool> {
    let slice = slice_groupoid(x.groupoid(), x0)?;
    let pulled = fibre_product(x.functor(), &slice)?;
    let smash = smash_product(x, x0)?;
    let g = x.groupoid().category();
    let slice_objects: Vec<Mor> = (0..g.object_count()).flat_map(|y| g.hom(y, x0)).collect();
    let mut objects = Vec::with_capacity(pulled.objects.len());
    for &(b, e) in &pulled.objects {
        match smash.object_of(b, slice_objects[e]) {
            Some(k) => objects.push(k),
            None => return Ok(false),
        }
    }
    let mut arrows = Vec::with_capacity(pulled.arrows.len());
    for (k, &(f, _)) in pulled.arrows.iter().enumerate() {
        let src = pulled.category.arrows()[k].src;
        let gamma = smash.objects[objects[src]].1;
        match smash.arrows.iter().position(|&a| a == (f, gamma)) {
            Some(i) => arrows.push(Mor::Arrow(i)),
            None => return Ok(false),
        }
    }
    let Ok(iso) = CatFunctor::new(pulled.category.clone(), smash.category.clone(), objects, arrows)
    else {
        return Ok(false);
    };
    let over_base = smash.covering.functor().after(&iso)? == *pulled.projection.functor();
    Ok(iso.is_isomorphism() && over_base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{aut_group, is_galois};
    use crate::fixtures;

    #[test]
    fn k2_z2_smash() {
        let s = fixtures::k2_z2_smash();
        let c = s.category();
        assert_eq!(c.object_count(), 4);
        assert_eq!(c.arrow_count(), 4);
        assert!(c.is_connected());
        assert!(is_galois(s.covering()));
        assert_eq!(aut_group(s.covering()).unwrap().group().order(), 2);
        assert!(s.action().is_free());
        assert!(smash_quotient_iso(&s).unwrap().is_isomorphism());
        let names: Vec<&str> = c.objects().iter().map(|s| s.as_str()).collect();
        assert_eq!(names, vec!["(x,1)", "(x,s)", "(x0,1)", "(x0,s)"]);
    }

    #[test]
    fn non_effective_smash_splits() {
        let x = fixtures::k2_z2_flat_grading();
        let s = smash_product(&x, 0).unwrap();
        assert_eq!(s.category().connected_components().len(), 2);
        assert!(!is_effective(&fixtures::k2_z2_flat_complete()).unwrap());
        assert!(is_effective(&fixtures::k2_z2_complete()).unwrap());
    }

    #[test]
    fn trivial_grading() {
        let x = fixtures::trivial_grading(Arc::new(fixtures::k2()));
        let s = smash_product(&x, 0).unwrap();
        assert!(s.covering().functor().is_isomorphism());
        assert!(slice_pullback_check(&x, 0).unwrap());
    }

    #[test]
    fn effectiveness_preconditions() {
        assert_eq!(
            is_effective(&fixtures::k2_z2_one_object_grading()).unwrap_err(),
            Error::NotBijectiveOnObjects
        );
    }

    #[test]
    fn slice_checks() {
        assert!(slice_pullback_check(&fixtures::k2_z2_one_object_grading(), 0).unwrap());
        let z2 = fixtures::z2grp();
        let id = Grading::new(CatFunctor::identity(z2.category().clone()), z2.clone()).unwrap();
        assert!(slice_pullback_check(&id, 0).unwrap());
        let slice = slice_groupoid(&z2, 0).unwrap();
        assert_eq!(slice.total().object_count(), 2);
        assert_eq!(slice.total().arrow_count(), 2);
    }

    #[test]
    fn grading_morphisms() {
        let x = fixtures::k2_z2_complete();
        let z = grading_morphism(&x, &x).unwrap();
        assert_eq!(z, CatFunctor::identity(x.groupoid().category().clone()));

        let (c4x, c4y) = fixtures::cycle4_gradings();
        let z = grading_morphism(&c4x, &c4y).unwrap();
        assert_eq!(z.after(c4x.functor()).unwrap(), *c4y.functor());
        let reversed: Vec<usize> = (0..c4x.base().arrow_count()).rev().collect();
        assert_eq!(grading_morphism_in_order(&c4x, &c4y, &reversed), Some(z.clone()));
        assert_eq!(grading_morphism(&c4y, &c4x), None);

        let trivial = fixtures::k2_trivial_complete();
        assert_eq!(grading_morphism(&trivial, &x), None);
        assert!(grading_morphism(&x, &trivial).is_some());
    }

    #[test]
    fn induced_smash_map_covers() {
        let (c4x, c4y) = fixtures::cycle4_gradings();
        let z = grading_morphism(&c4x, &c4y).unwrap();
        let sx = smash_product(&c4x, 0).unwrap();
        let sy = smash_product(&c4y, 0).unwrap();
        let h = smash_map(&sx, &sy, &z).unwrap();
        assert_eq!(sy.covering().functor().after(&h).unwrap(), *sx.covering().functor());
        assert!(check_covering(&h).is_ok());
    }
}
