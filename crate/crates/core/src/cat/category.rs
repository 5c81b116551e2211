use std::collections::HashMap;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// A morphism of a finite category: either the implicit identity at an
/// object or a stored non-identity arrow. Both carry indices into the
/// owning category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mor {
    Id(usize),
    Arrow(usize),
}

impl Mor {
    pub fn is_identity(self) -> bool {
        matches!(self, Mor::Id(_))
    }

    pub fn arrow(self) -> Option<usize> {
        match self {
            Mor::Arrow(m) => Some(m),
            Mor::Id(_) => None,
        }
    }
}

/// A stored non-identity morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A validated finite small category. Identities are never stored; a
/// composite that is an identity is recorded as `Mor::Id`.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    table: HashMap<(usize, usize), Mor>,
    object_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.arrows == other.arrows && self.table == other.table
    }
}

impl Eq for FiniteCategory {}

/// The source and target stars at one object. A loop appears in both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub object: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

impl Star {
    pub fn len(&self) -> usize {
        self.source.len() + self.target.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl FiniteCategory {
    /// Builds and validates a category from names. `compositions` lists
    /// `(g, f, gf)` with `gf == "ID"` for identity composites; every
    /// composable pair of non-identity morphisms must appear.
    pub fn from_names<S: AsRef<str>>(
        objects: &[S],
        morphisms: &[(S, S, S)],
        compositions: &[(S, S, S)],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|o| o.as_ref().to_string()).collect();
        let object_index = index_names(&objects)?;
        let mut arrows = Vec::with_capacity(morphisms.len());
        for (name, src, tgt) in morphisms {
            let src = *object_index
                .get(src.as_ref())
                .ok_or_else(|| Error::UnknownObject(src.as_ref().to_string()))?;
            let tgt = *object_index
                .get(tgt.as_ref())
                .ok_or_else(|| Error::UnknownObject(tgt.as_ref().to_string()))?;
            arrows.push(Arrow {
                name: name.as_ref().to_string(),
                src,
                tgt,
            });
        }
        let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
        let arrow_index = index_names(&names)?;
        let mut table = HashMap::new();
        for (g, f, gf) in compositions {
            let lookup = |n: &str| {
                arrow_index
                    .get(n)
                    .copied()
                    .ok_or_else(|| Error::UnknownMorphism(n.to_string()))
            };
            let gi = lookup(g.as_ref())?;
            let fi = lookup(f.as_ref())?;
            let result = if gf.as_ref() == "ID" {
                Mor::Id(arrows[fi].src)
            } else {
                Mor::Arrow(lookup(gf.as_ref())?)
            };
            if table.insert((gi, fi), result).is_some() {
                return Err(Error::DuplicateName(format!("composite ({}, {})", g.as_ref(), f.as_ref())));
            }
        }
        Self::from_parts(objects, arrows, table)
    }

    /// Validates raw parts: endpoints, totality of the table on composable
    /// pairs, and associativity over all composable triples.
    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        table: HashMap<(usize, usize), Mor>,
    ) -> Result<Self> {
        let cat = Self::assemble(objects, arrows, table)?;
        cat.check_table()?;
        cat.check_associativity()?;
        Ok(cat)
    }

    /// Same as [`FiniteCategory::from_parts`] but skips the cubic
    /// associativity scan. Only for constructions that are associative by
    /// construction (smash products, orbit categories, balls).
    pub(crate) fn from_parts_trusted(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        table: HashMap<(usize, usize), Mor>,
    ) -> Result<Self> {
        let cat = Self::assemble(objects, arrows, table)?;
        cat.check_table()?;
        if cfg!(debug_assertions) {
            cat.check_associativity()?;
        }
        Ok(cat)
    }

    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        table: HashMap<(usize, usize), Mor>,
    ) -> Result<Self> {
        let object_index = index_names(&objects)?;
        let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
        let arrow_index = index_names(&names)?;
        let mut outgoing = vec![Vec::new(); objects.len()];
        let mut incoming = vec![Vec::new(); objects.len()];
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= objects.len() || a.tgt >= objects.len() {
                return Err(Error::EndpointMismatch(format!(
                    "arrow {} refers to a missing object",
                    a.name
                )));
            }
            outgoing[a.src].push(i);
            incoming[a.tgt].push(i);
        }
        Ok(Self {
            objects,
            arrows,
            table,
            object_index,
            arrow_index,
            outgoing,
            incoming,
        })
    }

    fn check_table(&self) -> Result<()> {
        for (&(g, f), &gf) in &self.table {
            if g >= self.arrows.len() || f >= self.arrows.len() {
                return Err(Error::Format("composition table refers to a missing arrow".into()));
            }
            let (ga, fa) = (&self.arrows[g], &self.arrows[f]);
            if fa.tgt != ga.src {
                return Err(Error::EndpointMismatch(format!(
                    "composite ({}, {}) declared for a non-composable pair",
                    ga.name, fa.name
                )));
            }
            let ok = match gf {
                Mor::Id(x) => x == fa.src && x == ga.tgt,
                Mor::Arrow(h) => {
                    h < self.arrows.len()
                        && self.arrows[h].src == fa.src
                        && self.arrows[h].tgt == ga.tgt
                }
            };
            if !ok {
                return Err(Error::EndpointMismatch(format!(
                    "composite of ({}, {}) has the wrong endpoints",
                    ga.name, fa.name
                )));
            }
        }
        for (f, fa) in self.arrows.iter().enumerate() {
            for &g in &self.outgoing[fa.tgt] {
                if !self.table.contains_key(&(g, f)) {
                    return Err(Error::MissingComposite {
                        g: self.arrows[g].name.clone(),
                        f: fa.name.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        for (f, fa) in self.arrows.iter().enumerate() {
            for &g in &self.outgoing[fa.tgt] {
                let gf = self.table[&(g, f)];
                for &h in &self.outgoing[self.arrows[g].tgt] {
                    let left = self.compose(Mor::Arrow(h), gf);
                    let hg = self.table[&(h, g)];
                    let right = self.compose(hg, Mor::Arrow(f));
                    if left.is_none() || left != right {
                        return Err(Error::NotAssociative {
                            h: self.arrows[h].name.clone(),
                            g: self.arrows[g].name.clone(),
                            f: fa.name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn arrow_name(&self, m: usize) -> &str {
        &self.arrows[m].name
    }

    /// Display name: arrow name, or `ID:<object>` for identities.
    pub fn mor_name(&self, m: Mor) -> String {
        match m {
            Mor::Arrow(a) => self.arrows[a].name.clone(),
            Mor::Id(x) => format!("ID:{}", self.objects[x]),
        }
    }

    /// Parses a morphism token: an arrow name or `ID:<object>`.
    pub fn parse_mor(&self, token: &str) -> Result<Mor> {
        if let Some(obj) = token.strip_prefix("ID:") {
            return self
                .object(obj)
                .map(Mor::Id)
                .ok_or_else(|| Error::UnknownObject(obj.to_string()));
        }
        self.arrow(token)
            .map(Mor::Arrow)
            .ok_or_else(|| Error::UnknownMorphism(token.to_string()))
    }

    pub fn src(&self, m: Mor) -> usize {
        match m {
            Mor::Id(x) => x,
            Mor::Arrow(a) => self.arrows[a].src,
        }
    }

    pub fn tgt(&self, m: Mor) -> usize {
        match m {
            Mor::Id(x) => x,
            Mor::Arrow(a) => self.arrows[a].tgt,
        }
    }

    /// `g ∘ f`, or `None` when `tgt(f) != src(g)`.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.tgt(f) != self.src(g) {
            return None;
        }
        match (g, f) {
            (Mor::Id(_), f) => Some(f),
            (g, Mor::Id(_)) => Some(g),
            (Mor::Arrow(g), Mor::Arrow(f)) => self.table.get(&(g, f)).copied(),
        }
    }

    /// All composable non-identity pairs `(g, f)` with their composite, in
    /// declared order of `f` then `g`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize, Mor)> {
        let mut out = Vec::new();
        for (f, fa) in self.arrows.iter().enumerate() {
            for &g in &self.outgoing[fa.tgt] {
                out.push((g, f, self.table[&(g, f)]));
            }
        }
        out
    }

    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    pub fn star(&self, x: usize) -> Star {
        Star {
            object: x,
            source: self.outgoing[x].clone(),
            target: self.incoming[x].clone(),
        }
    }

    /// Every morphism including identities: arrows first, then identities.
    pub fn all_mors(&self) -> Vec<Mor> {
        (0..self.arrows.len())
            .map(Mor::Arrow)
            .chain((0..self.objects.len()).map(Mor::Id))
            .collect()
    }

    /// Dense index of a morphism in [`FiniteCategory::all_mors`] order.
    pub fn mor_slot(&self, m: Mor) -> usize {
        match m {
            Mor::Arrow(a) => a,
            Mor::Id(x) => self.arrows.len() + x,
        }
    }

    /// All morphisms (identities included) from `x` to `y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<Mor> {
        let mut out = Vec::new();
        if x == y {
            out.push(Mor::Id(x));
        }
        out.extend(
            self.outgoing[x]
                .iter()
                .filter(|&&a| self.arrows[a].tgt == y)
                .map(|&a| Mor::Arrow(a)),
        );
        out
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by their least object.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut uf = UnionFind::<usize>::new(n);
        for a in &self.arrows {
            uf.union(a.src, a.tgt);
        }
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = uf.find(x);
            let k = *slot.entry(r).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[k].push(x);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }
}

impl fmt::Display for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "category with {} objects and {} non-identity morphisms",
            self.objects.len(),
            self.arrows.len()
        )
    }
}

pub(crate) fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(index)
}
