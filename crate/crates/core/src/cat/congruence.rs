use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::cat::category::{Arrow, FiniteCategory, Mor};
use crate::cat::functor::CatFunctor;
use crate::error::{Error, Result};

/// An ideal relation on a finite category, as a partition of all morphisms
/// (identities included). Classes are ordered by their least member in
/// [`FiniteCategory::all_mors`] order; members keep that order too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<Mor>>,
}

impl Congruence {
    pub fn classes(&self) -> &[Vec<Mor>] {
        &self.classes
    }

    pub fn class_of(&self, cat: &FiniteCategory, m: Mor) -> usize {
        self.class_of[cat.mor_slot(m)]
    }

    pub fn related(&self, cat: &FiniteCategory, a: Mor, b: Mor) -> bool {
        self.class_of(cat, a) == self.class_of(cat, b)
    }

    /// Builds a congruence from explicit classes, checking that they
    /// partition the morphisms, respect endpoints and are closed under
    /// composition on both sides.
    pub fn from_classes(cat: &FiniteCategory, classes: Vec<Vec<Mor>>) -> Result<Self> {
        let total = cat.arrow_count() + cat.object_count();
        let mut label = vec![usize::MAX; total];
        for (k, class) in classes.iter().enumerate() {
            for &m in class {
                let slot = cat.mor_slot(m);
                if label[slot] != usize::MAX {
                    return Err(Error::Format(format!("{} lies in two classes", cat.mor_name(m))));
                }
                label[slot] = k;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::Format("classes do not cover every morphism".into()));
        }
        let congruence = normalize(cat, label);
        if !congruence.is_congruence(cat) {
            return Err(Error::Format("partition is not an ideal relation".into()));
        }
        Ok(congruence)
    }

    /// Checks endpoint agreement and two-sided stability.
    pub fn is_congruence(&self, cat: &FiniteCategory) -> bool {
        let all = cat.all_mors();
        for class in &self.classes {
            let first = class[0];
            if class
                .iter()
                .any(|&m| cat.src(m) != cat.src(first) || cat.tgt(m) != cat.tgt(first))
            {
                return false;
            }
        }
        for &a in &all {
            for &b in &self.classes[self.class_of(cat, a)] {
                for &c in &all {
                    if let (Some(ca), Some(cb)) = (cat.compose(c, a), cat.compose(c, b)) {
                        if !self.related(cat, ca, cb) {
                            return false;
                        }
                    }
                    if let (Some(ac), Some(bc)) = (cat.compose(a, c), cat.compose(b, c)) {
                        if !self.related(cat, ac, bc) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every class is a singleton.
    pub fn discrete(cat: &FiniteCategory) -> Self {
        let total = cat.arrow_count() + cat.object_count();
        normalize(cat, (0..total).collect())
    }
}

fn normalize(cat: &FiniteCategory, label: Vec<usize>) -> Congruence {
    let all = cat.all_mors();
    let mut renumber: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<Mor>> = Vec::new();
    let mut class_of = vec![0; label.len()];
    for (slot, &l) in label.iter().enumerate() {
        let k = *renumber.entry(l).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(all[slot]);
        class_of[slot] = k;
    }
    Congruence { class_of, classes }
}

/// The smallest ideal relation containing `pairs`, computed as a union-find
/// fixpoint: each pass merges `c∘a` with `c∘r` and `a∘c` with `r∘c` for
/// every morphism `a` with class representative `r`, until nothing merges.
pub fn congruence_close(cat: &FiniteCategory, pairs: &[(Mor, Mor)]) -> Result<Congruence> {
    let total = cat.arrow_count() + cat.object_count();
    let mut uf = UnionFind::<usize>::new(total);
    for &(a, b) in pairs {
        if cat.src(a) != cat.src(b) || cat.tgt(a) != cat.tgt(b) {
            return Err(Error::PairEndpointMismatch(cat.mor_name(a), cat.mor_name(b)));
        }
        uf.union(cat.mor_slot(a), cat.mor_slot(b));
    }
    let all = cat.all_mors();
    // composable neighbours, precomputed once: (c, c∘a) and (c, a∘c)
    let mut left: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    let mut right: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    for &a in &all {
        let sa = cat.mor_slot(a);
        for &c in &all {
            if let Some(ca) = cat.compose(c, a) {
                left[sa].push((cat.mor_slot(c), cat.mor_slot(ca)));
            }
            if let Some(ac) = cat.compose(a, c) {
                right[sa].push((cat.mor_slot(c), cat.mor_slot(ac)));
            }
        }
    }
    let slot_of_composite = |table: &Vec<Vec<(usize, usize)>>, a: usize, c: usize| {
        table[a]
            .iter()
            .find(|&&(cc, _)| cc == c)
            .map(|&(_, r)| r)
    };
    loop {
        let mut merged = false;
        for a in 0..total {
            let r = uf.find(a);
            if r == a {
                continue;
            }
            for &(c, ca) in &left[a] {
                if let Some(cr) = slot_of_composite(&left, r, c) {
                    merged |= uf.union(ca, cr);
                }
            }
            for &(c, ac) in &right[a] {
                if let Some(rc) = slot_of_composite(&right, r, c) {
                    merged |= uf.union(ac, rc);
                }
            }
        }
        if !merged {
            break;
        }
    }
    let label: Vec<usize> = (0..total).map(|s| uf.find(s)).collect();
    Ok(normalize(cat, label))
}

/// The quotient category and its projection. Each class not containing an
/// identity becomes an arrow named after its first member.
pub fn quotient_category(
    cat: &Arc<FiniteCategory>,
    congruence: &Congruence,
) -> Result<(Arc<FiniteCategory>, CatFunctor)> {
    // class index -> quotient morphism
    let mut image: Vec<Mor> = Vec::with_capacity(congruence.classes.len());
    let mut arrows = Vec::new();
    for class in &congruence.classes {
        if let Some(id) = class.iter().find(|m| m.is_identity()) {
            image.push(*id);
        } else {
            let first = class[0];
            image.push(Mor::Arrow(arrows.len()));
            arrows.push(Arrow {
                name: cat.mor_name(first),
                src: cat.src(first),
                tgt: cat.tgt(first),
            });
        }
    }
    let mut table = HashMap::new();
    for (g, f, gf) in cat.composable_pairs() {
        let (qg, qf) = (
            image[congruence.class_of(cat, Mor::Arrow(g))],
            image[congruence.class_of(cat, Mor::Arrow(f))],
        );
        let qgf = image[congruence.class_of(cat, gf)];
        if let (Mor::Arrow(a), Mor::Arrow(b)) = (qg, qf) {
            if let Some(prev) = table.insert((a, b), qgf) {
                if prev != qgf {
                    return Err(Error::Format("relation is not a congruence".into()));
                }
            }
        }
    }
    let quotient = Arc::new(FiniteCategory::from_parts(
        cat.objects().to_vec(),
        arrows,
        table,
    )?);
    let morphism_map = (0..cat.arrow_count())
        .map(|a| image[congruence.class_of(cat, Mor::Arrow(a))])
        .collect();
    let projection = CatFunctor::new(
        cat.clone(),
        quotient.clone(),
        (0..cat.object_count()).collect(),
        morphism_map,
    )?;
    Ok((quotient, projection))
}
