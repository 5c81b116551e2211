use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{congruence_close, quotient_category, Arrow, CatFunctor, FiniteCategory, Mor};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A finite category in which every morphism is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    category: Arc<FiniteCategory>,
    inverses: Vec<Mor>,
}

impl FiniteGroupoid {
    /// Checks that `inverses[m]` is a two-sided inverse of arrow `m`.
    pub fn new(category: Arc<FiniteCategory>, inverses: Vec<Mor>) -> Result<Self> {
        if inverses.len() != category.arrow_count() {
            return Err(Error::NotAGroupoid("one inverse per morphism required".into()));
        }
        for (m, &inv) in inverses.iter().enumerate() {
            let f = Mor::Arrow(m);
            let left = category.compose(inv, f);
            let right = category.compose(f, inv);
            if left != Some(Mor::Id(category.src(f))) || right != Some(Mor::Id(category.tgt(f))) {
                return Err(Error::NotAGroupoid(format!(
                    "{} is not inverse to {}",
                    category.mor_name(inv),
                    category.arrow_name(m)
                )));
            }
        }
        Ok(Self {
            category,
            inverses,
        })
    }

    /// Finds inverses by search.
    pub fn from_category(category: Arc<FiniteCategory>) -> Result<Self> {
        let mut inverses = Vec::with_capacity(category.arrow_count());
        for (m, a) in category.arrows().iter().enumerate() {
            let inv = category
                .hom(a.tgt, a.src)
                .into_iter()
                .find(|&g| {
                    category.compose(g, Mor::Arrow(m)) == Some(Mor::Id(a.src))
                        && category.compose(Mor::Arrow(m), g) == Some(Mor::Id(a.tgt))
                })
                .ok_or_else(|| Error::NotAGroupoid(format!("{} has no inverse", a.name)))?;
            inverses.push(inv);
        }
        Self::new(category, inverses)
    }

    /// Parses an `inverses` name map; every arrow must be listed.
    pub fn from_names(
        category: Arc<FiniteCategory>,
        inverses: &std::collections::BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut inv = Vec::with_capacity(category.arrow_count());
        for a in category.arrows() {
            let name = inverses
                .get(&a.name)
                .ok_or_else(|| Error::NotAGroupoid(format!("{} has no listed inverse", a.name)))?;
            inv.push(category.parse_mor(name)?);
        }
        Self::new(category, inv)
    }

    /// The one-object groupoid of a group; arrows are named after the
    /// non-identity elements.
    pub fn of_group(group: &FiniteGroup, object: &str) -> Self {
        CompleteGroupoid::new(&[object], group).groupoid
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn inverse(&self, m: Mor) -> Mor {
        match m {
            Mor::Id(x) => Mor::Id(x),
            Mor::Arrow(a) => self.inverses[a],
        }
    }

    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.category.compose(g, f)
    }

    /// `𝓖(x, x)` with identity first.
    pub fn vertex_group(&self, x: usize) -> Vec<Mor> {
        self.category.hom(x, x)
    }

    /// Display name of a vertex-group element: arrows keep their names and
    /// the identity is `1`, or `ID:x` when an arrow at `x` is already
    /// called `1`.
    pub fn element_name(&self, m: Mor) -> String {
        match m {
            Mor::Id(x) => match self.category.arrow("1") {
                Some(a) if self.category.arrows()[a].src == x => self.category.mor_name(m),
                _ => "1".to_string(),
            },
            Mor::Arrow(a) => self.category.arrow_name(a).to_string(),
        }
    }

    /// The vertex group at `x` as a table group, elements named by
    /// [`FiniteGroupoid::element_name`].
    pub fn vertex_table(&self, x: usize) -> (FiniteGroup, Vec<Mor>) {
        let elements = self.vertex_group(x);
        let index: HashMap<Mor, usize> = elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let table = elements
            .iter()
            .map(|&a| {
                elements
                    .iter()
                    .map(|&b| index[&self.compose(a, b).expect("loops compose")])
                    .collect()
            })
            .collect();
        let names = elements.iter().map(|&m| self.element_name(m)).collect();
        let group = FiniteGroup::new(names, table).expect("vertex group is a group");
        (group, elements)
    }
}

/// The groupoid with a copy of a group between any two objects. The
/// morphism `(y, g, x)` runs from `x` to `y`, and `(z, h, y)∘(y, g, x) =
/// (z, hg, x)`. With one object, arrows carry the element names;
/// otherwise they are named `g:x->y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteGroupoid {
    groupoid: FiniteGroupoid,
    group: FiniteGroup,
    index: HashMap<(usize, usize, usize), usize>,
    decode: Vec<(usize, usize, usize)>,
}

impl CompleteGroupoid {
    pub fn new<S: AsRef<str>>(objects: &[S], group: &FiniteGroup) -> Self {
        let names: Vec<String> = objects.iter().map(|o| o.as_ref().to_string()).collect();
        let n = names.len();
        let e = group.identity();
        let mut arrows = Vec::new();
        let mut index = HashMap::new();
        let mut decode = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for g in 0..group.order() {
                    if x == y && g == e {
                        continue;
                    }
                    let name = if n == 1 {
                        group.name(g).to_string()
                    } else {
                        format!("{}:{}->{}", group.name(g), names[x], names[y])
                    };
                    index.insert((y, g, x), arrows.len());
                    decode.push((y, g, x));
                    arrows.push(Arrow { name, src: x, tgt: y });
                }
            }
        }
        let mor = |y: usize, g: usize, x: usize| -> Mor {
            if x == y && g == e {
                Mor::Id(x)
            } else {
                Mor::Arrow(index[&(y, g, x)])
            }
        };
        let mut table = HashMap::new();
        for (f, &(y, g, x)) in decode.iter().enumerate() {
            for (h, &(z, k, y2)) in decode.iter().enumerate() {
                if y2 == y {
                    table.insert((h, f), mor(z, group.mul(k, g), x));
                }
            }
        }
        let inverses = decode.iter().map(|&(y, g, x)| mor(x, group.inv(g), y)).collect();
        let category = Arc::new(
            FiniteCategory::from_parts_trusted(names, arrows, table)
                .expect("complete groupoid is a category"),
        );
        let groupoid = FiniteGroupoid::new(category, inverses).expect("complete groupoid");
        Self {
            groupoid,
            group: group.clone(),
            index,
            decode,
        }
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The morphism `x → y` carrying `g`.
    pub fn mor(&self, y: usize, g: usize, x: usize) -> Mor {
        if x == y && g == self.group.identity() {
            Mor::Id(x)
        } else {
            Mor::Arrow(self.index[&(y, g, x)])
        }
    }

    /// The group element carried by a morphism.
    pub fn element(&self, m: Mor) -> usize {
        match m {
            Mor::Id(_) => self.group.identity(),
            Mor::Arrow(a) => self.decode[a].1,
        }
    }
}

/// A totally disconnected normal subgroupoid, stored as a vertex subgroup
/// per object (identities included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroupoid {
    members: Vec<Vec<Mor>>,
}

impl NormalSubgroupoid {
    /// Validates endpoints, closure and normality; identities are added.
    pub fn new(groupoid: &FiniteGroupoid, morphisms: &[Mor]) -> Result<Self> {
        let cat = groupoid.category();
        let mut members: Vec<Vec<Mor>> = (0..cat.object_count()).map(|x| vec![Mor::Id(x)]).collect();
        for &m in morphisms {
            if cat.src(m) != cat.tgt(m) {
                return Err(Error::InvalidSubgroupoid(format!(
                    "{} is not an endomorphism",
                    cat.mor_name(m)
                )));
            }
            if !members[cat.src(m)].contains(&m) {
                members[cat.src(m)].push(m);
            }
        }
        for list in &mut members {
            list.sort();
        }
        let n = Self { members };
        for x in 0..cat.object_count() {
            for &a in &n.members[x] {
                if !n.contains(cat, groupoid.inverse(a)) {
                    return Err(Error::InvalidSubgroupoid("not closed under inverses".into()));
                }
                for &b in &n.members[x] {
                    if !n.contains(cat, groupoid.compose(a, b).expect("loops")) {
                        return Err(Error::InvalidSubgroupoid("not closed under composition".into()));
                    }
                }
            }
        }
        for gamma in cat.all_mors() {
            let (x, y) = (cat.src(gamma), cat.tgt(gamma));
            for &nu in &n.members[y] {
                let conj = groupoid
                    .compose(groupoid.inverse(gamma), groupoid.compose(nu, gamma).expect("composable"))
                    .expect("composable");
                if !n.members[x].contains(&conj) {
                    return Err(Error::InvalidSubgroupoid(format!(
                        "conjugate of {} by {} leaves the subgroupoid",
                        cat.mor_name(nu),
                        cat.mor_name(gamma)
                    )));
                }
            }
        }
        Ok(n)
    }

    pub fn at(&self, x: usize) -> &[Mor] {
        &self.members[x]
    }

    pub fn contains(&self, cat: &FiniteCategory, m: Mor) -> bool {
        cat.src(m) == cat.tgt(m) && self.members[cat.src(m)].contains(&m)
    }

    /// Only identities.
    pub fn is_trivial(&self) -> bool {
        self.members.iter().all(|l| l.len() == 1)
    }
}

/// `Ker F`: the morphisms sent to identities by a functor between
/// groupoids that is injective on objects.
pub fn kernel_functor(f: &CatFunctor, source: &FiniteGroupoid) -> Result<NormalSubgroupoid> {
    if !f.is_injective_on_objects() {
        return Err(Error::NotInjectiveOnObjects);
    }
    let kernel: Vec<Mor> = (0..source.category().arrow_count())
        .map(Mor::Arrow)
        .filter(|&m| f.apply(m).is_identity())
        .collect();
    NormalSubgroupoid::new(source, &kernel)
}

/// `𝓖/𝓝`: `f ∼ β f α` for `α, β` in `𝓝`, with its projection.
pub fn quotient_groupoid(
    groupoid: &FiniteGroupoid,
    normal: &NormalSubgroupoid,
) -> Result<(FiniteGroupoid, CatFunctor)> {
    let cat = groupoid.category();
    let mut pairs = Vec::new();
    for m in cat.all_mors() {
        let (x, y) = (cat.src(m), cat.tgt(m));
        for &alpha in normal.at(x) {
            for &beta in normal.at(y) {
                let other = groupoid
                    .compose(beta, groupoid.compose(m, alpha).expect("composable"))
                    .expect("composable");
                if other != m {
                    pairs.push((m, other));
                }
            }
        }
    }
    let congruence = congruence_close(cat, &pairs)?;
    let (quotient, projection) = quotient_category(cat, &congruence)?;
    Ok((FiniteGroupoid::from_category(quotient)?, projection))
}

/// Checks `𝓖/Ker F ≅ Im F` on an instance: the functor induced on the
/// quotient is injective on morphisms.
pub fn isomorphism_theorem_holds(f: &CatFunctor, source: &FiniteGroupoid) -> Result<bool> {
    let kernel = kernel_functor(f, source)?;
    let (quotient, projection) = quotient_groupoid(source, &kernel)?;
    let q = quotient.category();
    let mut seen: HashMap<Mor, Mor> = HashMap::new();
    for m in source.category().all_mors() {
        let class = projection.apply(m);
        let image = f.apply(m);
        if let Some(&prev) = seen.get(&class) {
            if prev != image {
                return Ok(false);
            }
        }
        seen.insert(class, image);
    }
    let mut images: Vec<Mor> = seen.values().copied().collect();
    images.sort();
    images.dedup();
    Ok(images.len() == q.arrow_count() + q.object_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn z4_mod_2() {
        let (z4, z2, reduce) = fixtures::z4_mod2();
        let ker = kernel_functor(&reduce, &z4).unwrap();
        let two = z4.category().parse_mor("2").unwrap();
        assert_eq!(ker.at(0), &[Mor::Id(0), two][..]);
        let (q, _) = quotient_groupoid(&z4, &ker).unwrap();
        assert_eq!(q.category().arrow_count(), 1);
        assert_eq!(q.vertex_group(0).len(), z2.vertex_group(0).len());
        assert!(isomorphism_theorem_holds(&reduce, &z4).unwrap());
    }

    #[test]
    fn identity_and_total_kernels() {
        let (z4, _, _) = fixtures::z4_mod2();
        let id = CatFunctor::identity(z4.category().clone());
        let ker = kernel_functor(&id, &z4).unwrap();
        assert!(ker.is_trivial());
        let (q, _) = quotient_groupoid(&z4, &ker).unwrap();
        assert_eq!(q.category().arrow_count(), 3);

        let trivial = FiniteGroupoid::of_group(&FiniteGroup::cyclic(1), "o");
        let collapse = CatFunctor::new(
            z4.category().clone(),
            trivial.category().clone(),
            vec![0],
            vec![Mor::Id(0); 3],
        )
        .unwrap();
        let ker = kernel_functor(&collapse, &z4).unwrap();
        assert_eq!(ker.at(0).len(), 4);
        let (q, _) = quotient_groupoid(&z4, &ker).unwrap();
        assert_eq!(q.category().arrow_count(), 0);
    }

    #[test]
    fn complete_groupoid_quotient_by_vertex_groups() {
        let g = CompleteGroupoid::new(&["a", "b"], &FiniteGroup::cyclic(2));
        let gr = g.groupoid();
        let all: Vec<Mor> = (0..2).flat_map(|x| gr.vertex_group(x)).collect();
        let n = NormalSubgroupoid::new(gr, &all).unwrap();
        let (q, _) = quotient_groupoid(gr, &n).unwrap();
        // connected trivial groupoid on two objects
        assert_eq!(q.category().object_count(), 2);
        assert_eq!(q.category().arrow_count(), 2);
    }

    #[test]
    fn rejects_non_normal_and_non_groupoids() {
        let s3 = FiniteGroupoid::of_group(&FiniteGroup::symmetric3(), "o");
        let s = s3.category().parse_mor("s").unwrap();
        assert!(matches!(
            NormalSubgroupoid::new(&s3, &[s]).unwrap_err(),
            Error::InvalidSubgroupoid(_)
        ));
        let idem = Arc::new(fixtures::idem());
        assert!(matches!(
            FiniteGroupoid::from_category(idem).unwrap_err(),
            Error::NotAGroupoid(_)
        ));
    }

    #[test]
    fn identity_renamed_when_an_element_is_called_1() {
        let z3 = FiniteGroupoid::of_group(&FiniteGroup::cyclic(3), "o");
        let (group, _) = z3.vertex_table(0);
        assert_eq!(group.names(), ["ID:o", "1", "2"]);
        let (group, _) = fixtures::z2grp().vertex_table(0);
        assert_eq!(group.names(), ["1", "s"]);
    }
}
