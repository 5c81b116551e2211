use std::collections::HashMap;

use crate::cat::category::{index_names, Arrow, FiniteCategory};
use crate::error::{Error, Result};

/// A directed graph: objects and named arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    object_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    pub fn from_names<S: AsRef<str>>(objects: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|o| o.as_ref().to_string()).collect();
        let object_index = index_names(&objects)?;
        let mut out = Vec::with_capacity(arrows.len());
        for (name, src, tgt) in arrows {
            let find = |o: &str| {
                object_index
                    .get(o)
                    .copied()
                    .ok_or_else(|| Error::UnknownObject(o.to_string()))
            };
            out.push(Arrow {
                name: name.as_ref().to_string(),
                src: find(src.as_ref())?,
                tgt: find(tgt.as_ref())?,
            });
        }
        Self::new(objects, out)
    }

    pub fn new(objects: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let object_index = index_names(&objects)?;
        let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
        let arrow_index = index_names(&names)?;
        if arrows
            .iter()
            .any(|a| a.src >= objects.len() || a.tgt >= objects.len())
        {
            return Err(Error::EndpointMismatch("arrow refers to a missing object".into()));
        }
        Ok(Self {
            objects,
            arrows,
            object_index,
            arrow_index,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    /// The underlying graph of a category.
    pub fn of_category(cat: &FiniteCategory) -> Self {
        Self::new(cat.objects().to_vec(), cat.arrows().to_vec())
            .expect("a validated category has a valid underlying quiver")
    }

    /// The free category on this quiver, provided no two arrows are
    /// composable (so no paths of length two exist).
    pub fn to_category_without_paths(&self) -> Result<FiniteCategory> {
        FiniteCategory::from_parts(self.objects.clone(), self.arrows.clone(), HashMap::new())
    }
}

/// A path, in application order (first element applied first).
pub type Path = Vec<usize>;

/// A category presented by a quiver and relations between parallel paths.
/// The category may be infinite; only presentation-level operations apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedCategory {
    quiver: Quiver,
    relations: Vec<(Path, Path)>,
}

impl PresentedCategory {
    pub fn from_names<S: AsRef<str>>(
        objects: &[S],
        arrows: &[(S, S, S)],
        relations: &[(Vec<S>, Vec<S>)],
    ) -> Result<Self> {
        let quiver = Quiver::from_names(objects, arrows)?;
        let mut rels = Vec::with_capacity(relations.len());
        for (lhs, rhs) in relations {
            let to_path = |p: &Vec<S>| -> Result<Path> {
                p.iter()
                    .map(|n| {
                        quiver
                            .arrow(n.as_ref())
                            .ok_or_else(|| Error::UnknownMorphism(n.as_ref().to_string()))
                    })
                    .collect()
            };
            rels.push((to_path(lhs)?, to_path(rhs)?));
        }
        Self::new(quiver, rels)
    }

    pub fn new(quiver: Quiver, relations: Vec<(Path, Path)>) -> Result<Self> {
        for (lhs, rhs) in &relations {
            let l = path_endpoints(&quiver, lhs)?;
            let r = path_endpoints(&quiver, rhs)?;
            let ok = match (l, r) {
                (Some(l), Some(r)) => l == r,
                (Some((s, t)), None) | (None, Some((s, t))) => s == t,
                (None, None) => true,
            };
            if !ok {
                return Err(Error::PairEndpointMismatch(
                    path_name(&quiver, lhs),
                    path_name(&quiver, rhs),
                ));
            }
        }
        Ok(Self { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }
}

fn path_endpoints(q: &Quiver, path: &Path) -> Result<Option<(usize, usize)>> {
    let Some(&first) = path.first() else {
        return Ok(None);
    };
    let mut at = q.arrows()[first].tgt;
    for &a in &path[1..] {
        if q.arrows()[a].src != at {
            return Err(Error::EndpointMismatch(format!(
                "path {} is not composable",
                path_name(q, path)
            )));
        }
        at = q.arrows()[a].tgt;
    }
    Ok(Some((q.arrows()[first].src, at)))
}

fn path_name(q: &Quiver, path: &Path) -> String {
    let names: Vec<&str> = path.iter().map(|&a| q.arrows()[a].name.as_str()).collect();
    format!("[{}]", names.join(","))
}
