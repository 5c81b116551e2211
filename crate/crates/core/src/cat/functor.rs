use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::cat::category::{FiniteCategory, Mor};
use crate::error::{Error, Result};

/// A functor between finite categories, stored as an object map and an
/// image for every non-identity morphism (which may be an identity).
#[derive(Clone, Debug)]
pub struct CatFunctor {
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    object_map: Vec<usize>,
    morphism_map: Vec<Mor>,
}

impl PartialEq for CatFunctor {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.source, &other.source) || self.source == other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || self.target == other.target)
            && self.object_map == other.object_map
            && self.morphism_map == other.morphism_map
    }
}

impl Eq for CatFunctor {}

impl CatFunctor {
    /// Checks endpoint, identity and composition preservation.
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<Mor>,
    ) -> Result<Self> {
        let functor = Self {
            source,
            target,
            object_map,
            morphism_map,
        };
        functor.check()?;
        Ok(functor)
    }

    /// Builds a functor from name maps; morphism images may be `ID:<obj>`.
    /// Identity morphisms of the source need not be listed.
    pub fn from_names(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        object_map: &BTreeMap<String, String>,
        morphism_map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut objects = Vec::with_capacity(source.object_count());
        for name in source.objects() {
            let image = object_map
                .get(name)
                .ok_or_else(|| Error::Format(format!("object {name:?} has no image")))?;
            objects.push(
                target
                    .object(image)
                    .ok_or_else(|| Error::UnknownObject(image.clone()))?,
            );
        }
        for key in object_map.keys() {
            if source.object(key).is_none() {
                return Err(Error::UnknownObject(key.clone()));
            }
        }
        let mut morphisms = Vec::with_capacity(source.arrow_count());
        for arrow in source.arrows() {
            let image = morphism_map
                .get(&arrow.name)
                .ok_or_else(|| Error::Format(format!("morphism {:?} has no image", arrow.name)))?;
            morphisms.push(target.parse_mor(image)?);
        }
        for key in morphism_map.keys() {
            if source.arrow(key).is_none() {
                return Err(Error::UnknownMorphism(key.clone()));
            }
        }
        Self::new(source, target, objects, morphisms)
    }

    pub fn identity(cat: Arc<FiniteCategory>) -> Self {
        let object_map = (0..cat.object_count()).collect();
        let morphism_map = (0..cat.arrow_count()).map(Mor::Arrow).collect();
        Self {
            source: cat.clone(),
            target: cat,
            object_map,
            morphism_map,
        }
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&*self.source, &*self.target);
        if self.object_map.len() != s.object_count() || self.morphism_map.len() != s.arrow_count()
        {
            return Err(Error::Format("functor maps do not cover the source".into()));
        }
        if self.object_map.iter().any(|&y| y >= t.object_count()) {
            return Err(Error::Format("object image out of range".into()));
        }
        for (m, arrow) in s.arrows().iter().enumerate() {
            let image = self.morphism_map[m];
            let in_range = match image {
                Mor::Id(y) => y < t.object_count(),
                Mor::Arrow(a) => a < t.arrow_count(),
            };
            if !in_range
                || t.src(image) != self.object_map[arrow.src]
                || t.tgt(image) != self.object_map[arrow.tgt]
            {
                return Err(Error::EndpointMismatch(format!(
                    "image of {} does not join the images of its endpoints",
                    arrow.name
                )));
            }
        }
        for (g, f, gf) in s.composable_pairs() {
            let lhs = t.compose(self.morphism_map[g], self.morphism_map[f]);
            if lhs != Some(self.apply(gf)) {
                return Err(Error::NotFunctorial {
                    g: s.arrow_name(g).to_string(),
                    f: s.arrow_name(f).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteCategory> {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[Mor] {
        &self.morphism_map
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn apply(&self, m: Mor) -> Mor {
        match m {
            Mor::Id(x) => Mor::Id(self.object_map[x]),
            Mor::Arrow(a) => self.morphism_map[a],
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &CatFunctor) -> Result<CatFunctor> {
        if !(Arc::ptr_eq(&inner.target, &self.source) || *inner.target == *self.source) {
            return Err(Error::EndpointMismatch("functors are not composable".into()));
        }
        Ok(Self {
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner.object_map.iter().map(|&x| self.object_map[x]).collect(),
            morphism_map: inner.morphism_map.iter().map(|&m| self.apply(m)).collect(),
        })
    }

    pub fn is_bijective_on_objects(&self) -> bool {
        self.object_map.len() == self.target.object_count()
            && self.object_map.iter().collect::<HashSet<_>>().len() == self.object_map.len()
    }

    pub fn is_injective_on_objects(&self) -> bool {
        self.object_map.iter().collect::<HashSet<_>>().len() == self.object_map.len()
    }

    /// Bijective on objects and on non-identity morphisms.
    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective_on_objects()
            && self.morphism_map.len() == self.target.arrow_count()
            && self.morphism_map.iter().all(|m| !m.is_identity())
            && self.morphism_map.iter().collect::<HashSet<_>>().len() == self.morphism_map.len()
    }

    /// Inverse functor of an isomorphism.
    pub fn inverse(&self) -> Option<CatFunctor> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut objects = vec![0; self.target.object_count()];
        for (x, &y) in self.object_map.iter().enumerate() {
            objects[y] = x;
        }
        let mut morphisms = vec![Mor::Id(0); self.target.arrow_count()];
        for (m, image) in self.morphism_map.iter().enumerate() {
            morphisms[image.arrow()?] = Mor::Arrow(m);
        }
        Some(Self {
            source: self.target.clone(),
            target: self.source.clone(),
            object_map: objects,
            morphism_map: morphisms,
        })
    }

    /// Name maps suitable for serialization.
    pub fn name_maps(&self) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
        let objects = self
            .source
            .objects()
            .iter()
            .zip(&self.object_map)
            .map(|(x, &y)| (x.clone(), self.target.object_name(y).to_string()))
            .collect();
        let morphisms = self
            .source
            .arrows()
            .iter()
            .zip(&self.morphism_map)
            .map(|(a, &m)| (a.name.clone(), self.target.mor_name(m)))
            .collect();
        (objects, morphisms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn maps(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn identity_on_k2() {
        let k2 = Arc::new(fixtures::k2());
        let id = CatFunctor::from_names(
            k2.clone(),
            k2.clone(),
            &maps(&[("x", "x"), ("x0", "x0")]),
            &maps(&[("alpha", "alpha"), ("beta", "beta")]),
        )
        .unwrap();
        assert_eq!(id, CatFunctor::identity(k2));
        assert!(id.is_isomorphism());
    }

    #[test]
    fn k2_into_z2_is_vacuously_functorial() {
        let k2 = Arc::new(fixtures::k2());
        let z2 = fixtures::z2grp().category().clone();
        let f = CatFunctor::from_names(
            k2,
            z2,
            &maps(&[("x", "o"), ("x0", "o")]),
            &maps(&[("alpha", "ID:o"), ("beta", "s")]),
        );
        assert!(f.is_ok());
    }

    #[test]
    fn idem_into_z2_is_not_functorial() {
        let idem = Arc::new(fixtures::idem());
        let z2 = fixtures::z2grp().category().clone();
        let err = CatFunctor::from_names(idem, z2, &maps(&[("o", "o")]), &maps(&[("e", "s")]))
            .unwrap_err();
        assert_eq!(
            err,
            Error::NotFunctorial {
                g: "e".into(),
                f: "e".into()
            }
        );
    }

    #[test]
    fn bad_endpoint_image() {
        let k2 = Arc::new(fixtures::k2());
        let err = CatFunctor::from_names(
            k2.clone(),
            k2,
            &maps(&[("x", "x"), ("x0", "x0")]),
            &maps(&[("alpha", "ID:x"), ("beta", "beta")]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch(_)));
    }
}
