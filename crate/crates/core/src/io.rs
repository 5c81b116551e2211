//! JSON file formats: categories, functors and gradings, group actions,
//! fundamental-group dumps and covering reports. Every map is a
//! `BTreeMap`, so output is byte-stable.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{CatFunctor, FiniteCategory, Mor, PresentedCategory};
use crate::cover::{aut_group, check_covering, is_galois, CoveringFunctor, GroupAction};
use crate::error::{Error, Result};
use crate::frac::{
    abelianize, coset_enumerate, word_equal, AbelianInvariants, Budget, GroupPresentation, Verdict,
    Word,
};
use crate::grading::{FiniteGroupoid, Grading};
use crate::group::FiniteGroup;
use crate::universal::CoverBall;

pub const CATEGORY_FORMAT: &str = "catcov-category/1";
pub const FUNCTOR_FORMAT: &str = "catcov-functor/1";
pub const ACTION_FORMAT: &str = "catcov-action/1";
pub const PI1_FORMAT: &str = "catcov-pi1/1";
pub const COVERING_FORMAT: &str = "catcov-covering/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionRecord {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Explicit,
    Presented,
}

/// The category file. `compositions` is used in explicit mode and
/// `relations` in presented mode; the remaining sections are optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    pub format: String,
    pub mode: Mode,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compositions: Vec<CompositionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverses: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<MapRecord>,
}

/// A parsed category file.
#[derive(Clone, Debug)]
pub enum LoadedCategory {
    Explicit(FiniteCategory),
    Presented(PresentedCategory),
}

impl LoadedCategory {
    /// The finite category, if there is one. A presented category
    /// qualifies only when it has no relations and no composable arrows.
    pub fn to_finite(&self) -> Result<FiniteCategory> {
        match self {
            Self::Explicit(c) => Ok(c.clone()),
            Self::Presented(p) if p.relations().is_empty() => p
                .quiver()
                .to_category_without_paths()
                .map_err(|_| Error::Format("presented category is not finite".into())),
            Self::Presented(_) => Err(Error::Format("presented category is not finite".into())),
        }
    }

    pub fn object_names(&self) -> &[String] {
        match self {
            Self::Explicit(c) => c.objects(),
            Self::Presented(p) => p.quiver().objects(),
        }
    }
}

fn format_error(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::Format(format!("expected format {expected:?}, found {found:?}")))
    }
}

fn read(path: &FsPath) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn sibling(of: &FsPath, name: &str) -> PathBuf {
    of.parent().map_or_else(|| PathBuf::from(name), |dir| dir.join(name))
}

pub fn parse_category_file(text: &str) -> Result<CategoryFile> {
    let file: CategoryFile = serde_json::from_str(text).map_err(format_error)?;
    check_format(&file.format, CATEGORY_FORMAT)?;
    Ok(file)
}

impl CategoryFile {
    pub fn build(&self) -> Result<LoadedCategory> {
        let arrows: Vec<(&str, &str, &str)> = self
            .morphisms
            .iter()
            .map(|m| (m.name.as_str(), m.src.as_str(), m.tgt.as_str()))
            .collect();
        match self.mode {
            Mode::Explicit => {
                if self.relations.is_some() {
                    return Err(Error::Format("relations are only allowed in presented mode".into()));
                }
                let comps: Vec<(&str, &str, &str)> = self
                    .compositions
                    .iter()
                    .map(|c| (c.g.as_str(), c.f.as_str(), c.gf.as_str()))
                    .collect();
                let objects: Vec<&str> = self.objects.iter().map(String::as_str).collect();
                FiniteCategory::from_names(&objects, &arrows, &comps).map(LoadedCategory::Explicit)
            }
            Mode::Presented => {
                if !self.compositions.is_empty() {
                    return Err(Error::Format("compositions are only allowed in explicit mode".into()));
                }
                let relations: Vec<(Vec<&str>, Vec<&str>)> = self
                    .relations
                    .iter()
                    .flatten()
                    .map(|r| {
                        (
                            r.lhs.iter().map(String::as_str).collect(),
                            r.rhs.iter().map(String::as_str).collect(),
                        )
                    })
                    .collect();
                let objects: Vec<&str> = self.objects.iter().map(String::as_str).collect();
                PresentedCategory::from_names(&objects, &arrows, &relations).map(LoadedCategory::Presented)
            }
        }
    }
}

pub fn parse_category(text: &str) -> Result<LoadedCategory> {
    parse_category_file(text)?.build()
}

pub fn load_category(path: &FsPath) -> Result<LoadedCategory> {
    parse_category(&read(path)?)
}

/// Loads a category file that must describe a finite category.
pub fn load_finite(path: &FsPath) -> Result<FiniteCategory> {
    load_category(path)?.to_finite()
}

/// Loads a groupoid: a finite category file with an `inverses` map (or,
/// failing that, inverses found by search).
pub fn load_groupoid(path: &FsPath) -> Result<FiniteGroupoid> {
    let file = parse_category_file(&read(path)?)?;
    let cat = Arc::new(file.build()?.to_finite()?);
    match &file.inverses {
        Some(inv) => FiniteGroupoid::from_names(cat, inv),
        None => FiniteGroupoid::from_category(cat),
    }
}

/// The explicit file of a finite category; compositions in table order.
pub fn category_file(cat: &FiniteCategory) -> CategoryFile {
    let morphisms = cat
        .arrows()
        .iter()
        .map(|a| MorphismRecord {
            name: a.name.clone(),
            src: cat.object_name(a.src).to_string(),
            tgt: cat.object_name(a.tgt).to_string(),
        })
        .collect();
    let compositions = cat
        .composable_pairs()
        .into_iter()
        .map(|(g, f, gf)| CompositionRecord {
            g: cat.arrow_name(g).to_string(),
            f: cat.arrow_name(f).to_string(),
            gf: match gf {
                Mor::Id(_) => "ID".to_string(),
                Mor::Arrow(a) => cat.arrow_name(a).to_string(),
            },
        })
        .collect();
    CategoryFile {
        format: CATEGORY_FORMAT.to_string(),
        mode: Mode::Explicit,
        objects: cat.objects().to_vec(),
        morphisms,
        compositions,
        relations: None,
        inverses: None,
        boundary: None,
        projection: None,
    }
}

pub fn groupoid_file(g: &FiniteGroupoid) -> CategoryFile {
    let cat = g.category();
    let mut file = category_file(cat);
    file.inverses = Some(
        (0..cat.arrow_count())
            .map(|a| (cat.arrow_name(a).to_string(), cat.mor_name(g.inverse(Mor::Arrow(a)))))
            .collect(),
    );
    file
}

pub fn map_record(f: &CatFunctor) -> MapRecord {
    let (object_map, morphism_map) = f.name_maps();
    MapRecord {
        object_map,
        morphism_map,
    }
}

/// A ball as a category file with `boundary` and `projection` sections.
pub fn ball_file(ball: &CoverBall) -> CategoryFile {
    let cat = ball.category();
    let mut file = category_file(cat);
    file.boundary = Some(
        (0..cat.object_count())
            .filter(|&c| ball.boundary()[c])
            .map(|c| cat.object_name(c).to_string())
            .collect(),
    );
    file.projection = Some(map_record(ball.projection()));
    file
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorFile {
    pub format: String,
    pub source_file: String,
    pub target_file: String,
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

fn parse_functor_file(path: &FsPath) -> Result<FunctorFile> {
    let file: FunctorFile = serde_json::from_str(&read(path)?).map_err(format_error)?;
    check_format(&file.format, FUNCTOR_FORMAT)?;
    Ok(file)
}

/// Loads a functor file; source and target paths are relative to it.
pub fn load_functor(path: &FsPath) -> Result<CatFunctor> {
    let file = parse_functor_file(path)?;
    let source = Arc::new(load_finite(&sibling(path, &file.source_file))?);
    let target = Arc::new(load_finite(&sibling(path, &file.target_file))?);
    CatFunctor::from_names(source, target, &file.object_map, &file.morphism_map)
}

/// Loads a grading: a functor file whose target is a groupoid file.
pub fn load_grading(path: &FsPath) -> Result<Grading> {
    let file = parse_functor_file(path)?;
    let source = Arc::new(load_finite(&sibling(path, &file.source_file))?);
    let groupoid = load_groupoid(&sibling(path, &file.target_file))?;
    let functor = CatFunctor::from_names(
        source,
        groupoid.category().clone(),
        &file.object_map,
        &file.morphism_map,
    )?;
    Grading::new(functor, groupoid)
}

/// Group action file. The first element is the identity; table entries
/// and functors involving it may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub format: String,
    pub category_file: String,
    pub elements: Vec<String>,
    pub table: BTreeMap<String, String>,
    pub functors: BTreeMap<String, MapRecord>,
}

pub fn load_action(path: &FsPath) -> Result<GroupAction> {
    let file: ActionFile = serde_json::from_str(&read(path)?).map_err(format_error)?;
    check_format(&file.format, ACTION_FORMAT)?;
    let category = Arc::new(load_finite(&sibling(path, &file.category_file))?);
    action_from_file(&file, category)
}

pub fn action_from_file(file: &ActionFile, category: Arc<FiniteCategory>) -> Result<GroupAction> {
    let n = file.elements.len();
    if n == 0 {
        return Err(Error::InvalidGroup("no elements".into()));
    }
    let index: HashMap<&str, usize> =
        file.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let mut table = vec![vec![usize::MAX; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..n {
        table[0][j] = j;
    }
    for (key, value) in &file.table {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| Error::InvalidGroup(format!("table key {key:?} is not \"a,b\"")))?;
        let lookup = |s: &str| {
            index
                .get(s.trim())
                .copied()
                .ok_or_else(|| Error::InvalidGroup(format!("unknown element {s:?}")))
        };
        table[lookup(a)?][lookup(b)?] = lookup(value)?;
    }
    if table.iter().flatten().any(|&v| v == usize::MAX) {
        return Err(Error::InvalidGroup("multiplication table is incomplete".into()));
    }
    let group = FiniteGroup::new(file.elements.clone(), table)?;
    for key in file.functors.keys() {
        if !index.contains_key(key.as_str()) {
            return Err(Error::InvalidAction(format!("functor for unknown element {key:?}")));
        }
    }
    let functors = file
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| match file.functors.get(e) {
            Some(m) => CatFunctor::from_names(category.clone(), category.clone(), &m.object_map, &m.morphism_map),
            None if i == 0 => Ok(CatFunctor::identity(category.clone())),
            None => Err(Error::InvalidAction(format!("no functor for {e}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    GroupAction::new(category, group, functors)
}

pub fn action_file(action: &GroupAction, category_file: &str) -> ActionFile {
    let group = action.group();
    let GroupTable { elements, table } = group_table(group);
    let functors = (0..group.order())
        .map(|g| (group.name(g).to_string(), map_record(action.functor(g))))
        .collect();
    ActionFile {
        format: ACTION_FORMAT.to_string(),
        category_file: category_file.to_string(),
        elements,
        table,
        functors,
    }
}

/// Fundamental-group dump. Relators are syllable lists `[name, power]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Dump {
    pub format: String,
    pub base: String,
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(String, i64)>>,
    pub tree: Vec<String>,
    pub abelian: AbelianInvariants,
    /// Group order when coset enumeration closes within budget.
    pub order: Option<usize>,
    /// Whether every generator is trivial.
    pub trivial: Verdict,
    pub tietze_exhausted: bool,
}

pub fn syllables(p: &GroupPresentation, w: &Word) -> Vec<(String, i64)> {
    let mut out: Vec<(usize, i64)> = Vec::new();
    for l in w.letters() {
        match out.last_mut() {
            Some((g, e)) if *g == l.gen => *e += l.exponent(),
            _ => out.push((l.gen, l.exponent())),
        }
    }
    out.into_iter().map(|(g, e)| (p.symbols()[g].clone(), e)).collect()
}

/// Dump of a (simplified) presentation, with abelian invariants, the
/// order if enumeration closes, and the triviality verdict.
pub fn pi1_dump(p: &GroupPresentation, exhausted: bool, budget: &Budget) -> Pi1Dump {
    // a free group with generators is infinite; skip the enumeration
    let order = if p.is_free() && !p.generators().is_empty() {
        None
    } else {
        coset_enumerate(p, budget.coset_rows).map(|t| t.order())
    };
    let trivial = match order {
        Some(n) => Verdict::from_bool(n == 1),
        None => p.generators().iter().fold(Verdict::True, |acc, &g| {
            match (acc, word_equal(p, &Word::generator(g), &Word::identity(), budget)) {
                (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
                (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
                _ => Verdict::True,
            }
        }),
    };
    let (base, tree) = match p.provenance() {
        Some(prov) => (
            prov.base.clone(),
            prov.tree.iter().map(|&t| prov.morphisms[t].clone()).collect(),
        ),
        None => (String::new(), Vec::new()),
    };
    Pi1Dump {
        format: PI1_FORMAT.to_string(),
        base,
        generators: p.generator_names().iter().map(|s| s.to_string()).collect(),
        relators: p.relators().iter().map(|r| syllables(p, r)).collect(),
        tree,
        abelian: abelianize(p),
        order,
        trivial,
        tietze_exhausted: exhausted,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub elements: Vec<String>,
    pub table: BTreeMap<String, String>,
}

pub fn group_table(group: &FiniteGroup) -> GroupTable {
    let mut table = BTreeMap::new();
    for a in 0..group.order() {
        for b in 0..group.order() {
            table.insert(
                format!("{},{}", group.name(a), group.name(b)),
                group.name(group.mul(a, b)).to_string(),
            );
        }
    }
    GroupTable {
        elements: group.names().to_vec(),
        table,
    }
}

/// What is known about a functor as a covering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub format: String,
    pub covering: bool,
    /// `"ok"` or the first failing star check.
    pub star_check: String,
    pub fibres: BTreeMap<String, Vec<String>>,
    pub connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphisms: Option<GroupTable>,
    pub galois: bool,
}

pub fn covering_report(f: &CatFunctor) -> CoveringReport {
    match check_covering(f) {
        Ok(cov) => covering_report_of(&cov),
        Err(e) => CoveringReport {
            format: COVERING_FORMAT.to_string(),
            covering: false,
            star_check: e.to_string(),
            fibres: BTreeMap::new(),
            connected: f.source().is_connected(),
            automorphisms: None,
            galois: false,
        },
    }
}

pub fn covering_report_of(cov: &CoveringFunctor) -> CoveringReport {
    let (total, base) = (cov.total(), cov.base());
    let fibres = (0..base.object_count())
        .map(|b| {
            let names = cov.fibre(b).iter().map(|&c| total.object_name(c).to_string()).collect();
            (base.object_name(b).to_string(), names)
        })
        .collect();
    let automorphisms = aut_group(cov).ok().map(|a| group_table(a.group()));
    CoveringReport {
        format: COVERING_FORMAT.to_string(),
        covering: true,
        star_check: "ok".to_string(),
        fibres,
        connected: total.is_connected(),
        automorphisms,
        galois: is_galois(cov),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn category_roundtrip() {
        for cat in [fixtures::k2(), fixtures::idem(), fixtures::commutative_square(), fixtures::i2()] {
            let text = to_json(&category_file(&cat));
            let back = parse_category(&text).unwrap().to_finite().unwrap();
            assert_eq!(back, cat);
        }
    }

    #[test]
    fn presented_loop() {
        let text = r#"{"format":"catcov-category/1","mode":"presented","objects":["o"],
            "morphisms":[{"name":"a","src":"o","tgt":"o"}],"relations":[]}"#;
        let LoadedCategory::Presented(p) = parse_category(text).unwrap() else {
            panic!("expected a presented category");
        };
        assert_eq!(p, fixtures::loop_quiver());
    }

    #[test]
    fn format_tag_is_checked() {
        let text = r#"{"format":"other","mode":"explicit","objects":[],"morphisms":[]}"#;
        assert!(matches!(parse_category(text).unwrap_err(), Error::Format(_)));
    }

    #[test]
    fn action_roundtrip() {
        let action = fixtures::i2_swap();
        let file = action_file(&action, "i2.json");
        let back = action_from_file(&file, action.category().clone()).unwrap();
        assert_eq!(back.functors(), action.functors());
        assert_eq!(back.group(), action.group());
    }

    #[test]
    fn groupoid_inverses_roundtrip() {
        let z2 = fixtures::z2grp();
        let file = groupoid_file(&z2);
        assert_eq!(file.inverses.as_ref().unwrap()["s"], "s");
        let cat = Arc::new(file.build().unwrap().to_finite().unwrap());
        let back = FiniteGroupoid::from_names(cat, file.inverses.as_ref().unwrap()).unwrap();
        assert_eq!(back.inverse(Mor::Arrow(0)), Mor::Arrow(0));
    }
}
