use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use crate::cover::covering::{check_covering, CoveringFunctor};
use crate::error::{Error, Result};

/// The fibre product `B ×_D E` of a functor `F: B → D` and a covering
/// `G: E → D`, with its projection to `B`.
#[derive(Clone, Debug)]
pub struct FibreProduct {
    pub category: Arc<FiniteCategory>,
    pub projection: CoveringFunctor,
    /// `(b, e)` for every object.
    pub objects: Vec<(usize, usize)>,
    /// `(f, h)` for every arrow; `h` may be an identity when `F(f)` is.
    pub arrows: Vec<(usize, Mor)>,
}

/// Objects are pairs `(b, e)` with `F(b) = G(e)`; arrows are pairs
/// `(f, h)` with `F(f) = G(h)`, where `h` is the unique lift of `F(f)` at
/// `e`. Named `(b,e)` and `f@(b,e)`.
pub fn fibre_product(f: &CatFunctor, g: &CoveringFunctor) -> Result<FibreProduct> {
    let b_cat = f.source();
    let e_cat = g.total();
    if **f.target() != **g.base() {
        return Err(Error::EndpointMismatch("functors have different targets".into()));
    }
    let mut objects = Vec::new();
    let mut index = HashMap::new();
    let mut names = Vec::new();
    for b in 0..b_cat.object_count() {
        for &e in g.fibre(f.on_object(b)) {
            index.insert((b, e), objects.len());
            objects.push((b, e));
            names.push(format!("({},{})", b_cat.object_name(b), e_cat.object_name(e)));
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_index = HashMap::new();
    let mut arrow_list = Vec::new();
    for (m, a) in b_cat.arrows().iter().enumerate() {
        for &e in g.fibre(f.on_object(a.src)) {
            let h = g
                .lift_mor(e, f.apply(Mor::Arrow(m)))
                .ok_or_else(|| Error::StarNotSurjective {
                    object: e_cat.object_name(e).to_string(),
                    missing: b_cat.arrow_name(m).to_string(),
                })?;
            let e2 = e_cat.tgt(h);
            arrow_index.insert((m, e), arrows.len());
            arrow_list.push((m, h));
            arrows.push(Arrow {
                name: format!("{}@{}", a.name, names[index[&(a.src, e)]]),
                src: index[&(a.src, e)],
                tgt: index[&(a.tgt, e2)],
            });
        }
    }
    let mut table = HashMap::new();
    for (k1, &(m1, h1)) in arrow_list.iter().enumerate() {
        let e_mid = e_cat.tgt(h1);
        let e_start = e_cat.src(h1);
        for &m2 in b_cat.outgoing(b_cat.arrows()[m1].tgt) {
            let k2 = arrow_index[&(m2, e_mid)];
            let composite = match b_cat.compose(Mor::Arrow(m2), Mor::Arrow(m1)).expect("composable") {
                Mor::Id(_) => Mor::Id(arrows[k1].src),
                Mor::Arrow(m) => Mor::Arrow(arrow_index[&(m, e_start)]),
            };
            table.insert((k2, k1), composite);
        }
    }
    let category = Arc::new(FiniteCategory::from_parts_trusted(names, arrows, table)?);
    let functor = CatFunctor::new(
        category.clone(),
        b_cat.clone(),
        objects.iter().map(|&(b, _)| b).collect(),
        arrow_list.iter().map(|&(m, _)| Mor::Arrow(m)).collect(),
    )?;
    let projection = check_covering(&functor)?;
    Ok(FibreProduct {
        category,
        projection,
        objects,
        arrows: arrow_list,
    })
}

/// Pulls a covering of `D` back along a functor `θ: B → D` that is the
/// identity on objects.
pub fn pullback_covering(theta: &CatFunctor, g: &CoveringFunctor) -> Result<FibreProduct> {
    let (b, d) = (theta.source(), theta.target());
    if b.objects() != d.objects() || theta.object_map().iter().enumerate().any(|(x, &y)| x != y) {
        return Err(Error::ObjectSetMismatch);
    }
    fibre_product(theta, g)
}
