use std::sync::Arc;

use crate::cat::{CatFunctor, Mor};
use crate::cover::{CoveringFunctor, GroupAction};
use crate::error::{Error, Result};
use crate::grading::groupoid::CompleteGroupoid;
use crate::grading::smash::{is_effective, smash_product, Grading, Smash};

/// A representative per object of the orbit category, and the derived
/// deviation `d` with `x = d(x)·[x]₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectSection {
    representatives: Vec<usize>,
    deviation: Vec<usize>,
}

impl ObjectSection {
    /// `representatives[ω]` must lie over `ω`. Checks `d(γx) = γ·d(x)` and
    /// `d(ω₀) = 1`.
    pub fn new(
        projection: &CoveringFunctor,
        action: &GroupAction,
        representatives: Vec<usize>,
    ) -> Result<Self> {
        let total = projection.total();
        let group = action.group();
        if representatives.len() != projection.base().object_count() {
            return Err(Error::SectionNotEquivariant("one representative per orbit".into()));
        }
        for (w, &r) in representatives.iter().enumerate() {
            if r >= total.object_count() || projection.functor().on_object(r) != w {
                return Err(Error::SectionNotEquivariant(format!(
                    "representative of {} lies in another orbit",
                    projection.base().object_name(w)
                )));
            }
        }
        let mut deviation = Vec::with_capacity(total.object_count());
        for x in 0..total.object_count() {
            let rep = representatives[projection.functor().on_object(x)];
            let d = action.translator(rep, x).ok_or_else(|| {
                Error::SectionNotEquivariant(format!(
                    "{} is not a translate of its representative",
                    total.object_name(x)
                ))
            })?;
            deviation.push(d);
        }
        for g in 0..group.order() {
            for x in 0..total.object_count() {
                if deviation[action.act_object(g, x)] != group.mul(g, deviation[x]) {
                    return Err(Error::SectionNotEquivariant(format!(
                        "deviation is not equivariant at {}",
                        total.object_name(x)
                    )));
                }
            }
        }
        if representatives.iter().any(|&r| deviation[r] != group.identity()) {
            return Err(Error::SectionNotEquivariant("representative off the identity".into()));
        }
        Ok(Self {
            representatives,
            deviation,
        })
    }

    /// The least object of every orbit.
    pub fn least(projection: &CoveringFunctor, action: &GroupAction) -> Result<Self> {
        let reps = projection.fibres().iter().map(|f| f[0]).collect();
        Self::new(projection, action, reps)
    }

    /// Representatives given by object names.
    pub fn from_names<S: AsRef<str>>(
        projection: &CoveringFunctor,
        action: &GroupAction,
        names: &[S],
    ) -> Result<Self> {
        let total = projection.total();
        let mut reps = vec![usize::MAX; projection.base().object_count()];
        for n in names {
            let x = total
                .object(n.as_ref())
                .ok_or_else(|| Error::UnknownObject(n.as_ref().to_string()))?;
            reps[projection.functor().on_object(x)] = x;
        }
        if reps.contains(&usize::MAX) {
            return Err(Error::SectionNotEquivariant("an orbit has no representative".into()));
        }
        Self::new(projection, action, reps)
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn deviation(&self, x: usize) -> usize {
        self.deviation[x]
    }
}

/// The grading of an orbit category associated with a section, and the
/// complete groupoid it takes values in.
#[derive(Clone, Debug)]
pub struct AssociatedGrading {
    pub grading: Grading,
    pub model: CompleteGroupoid,
}

/// `X([f]) = d(y′)⁻¹·d(x′)` for any representative `f: x′ → y′`; the
/// target has a copy of the group between any two orbits.
pub fn associated_grading(
    projection: &CoveringFunctor,
    action: &GroupAction,
    section: &ObjectSection,
) -> Result<AssociatedGrading> {
    let total = projection.total();
    let base = projection.base();
    let group = action.group();
    let model = CompleteGroupoid::new(base.objects(), group);
    let mut degrees: Vec<Option<Mor>> = vec![None; base.arrow_count()];
    for (m, a) in total.arrows().iter().enumerate() {
        let k = projection.functor().apply(Mor::Arrow(m)).arrow().expect("covering");
        let g = group.mul(group.inv(section.deviation(a.tgt)), section.deviation(a.src));
        let (x, y) = (base.arrows()[k].src, base.arrows()[k].tgt);
        let degree = model.mor(y, g, x);
        match degrees[k] {
            Some(prev) if prev != degree => {
                return Err(Error::NotEquivariant(format!(
                    "degree of {} depends on the representative",
                    base.arrow_name(k)
                )))
            }
            _ => degrees[k] = Some(degree),
        }
    }
    let morphisms = degrees
        .into_iter()
        .map(|d| d.ok_or_else(|| Error::Format("orbit arrow without representative".into())))
        .collect::<Result<Vec<_>>>()?;
    let functor = CatFunctor::new(
        base.clone(),
        model.groupoid().category().clone(),
        (0..base.object_count()).collect(),
        morphisms,
    )?;
    let grading = Grading::new(functor, model.groupoid().clone())?;
    Ok(AssociatedGrading { grading, model })
}

/// The explicit isomorphism between the smash of the associated grading
/// at `q` and the total category.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub associated: AssociatedGrading,
    pub smash: Smash,
    pub iso: CatFunctor,
    pub effective: bool,
}

/// `([x], γ) ↦ γ·[x]₀`, and `[f]` at `([x], γ)` ↦ the representative of
/// `[f]` leaving `γ·[x]₀`. Verified to be an isomorphism commuting with
/// both projections.
pub fn roundtrip_iso(
    projection: &CoveringFunctor,
    action: &GroupAction,
    section: &ObjectSection,
    q: usize,
) -> Result<RoundTrip> {
    let associated = associated_grading(projection, action, section)?;
    let smash = smash_product(&associated.grading, q)?;
    let total = projection.total();
    let objects: Vec<usize> = smash
        .objects()
        .iter()
        .map(|&(w, gamma)| {
            let g = associated.model.element(gamma);
            action.act_object(g, section.representatives()[w])
        })
        .collect();
    let arrows = smash
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(f, _))| {
            let src = objects[smash.category().arrows()[k].src];
            projection
                .lift_out(src, f)
                .map(Mor::Arrow)
                .ok_or_else(|| Error::StarNotSurjective {
                    object: total.object_name(src).to_string(),
                    missing: projection.base().arrow_name(f).to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = CatFunctor::new(smash.category().clone(), Arc::clone(total), objects, arrows)?;
    if !iso.is_isomorphism() {
        return Err(Error::NotEquivariant("round trip is not bijective".into()));
    }
    if projection.functor().after(&iso)? != *smash.covering().functor() {
        return Err(Error::NotEquivariant("round trip does not commute with projections".into()));
    }
    let effective = is_effective(&associated.grading)?;
    Ok(RoundTrip {
        associated,
        smash,
        iso,
        effective,
    })
}
