use std::collections::{HashSet, VecDeque};

use crate::cat::{Arrow, FiniteCategory, Mor, PresentedCategory};
use crate::error::{Error, Result};
use crate::frac::word::{Letter, Word};

/// Default number of Tietze steps.
pub const DEFAULT_TIETZE_STEPS: usize = 10_000;

/// Where a fundamental-group presentation came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub base: String,
    /// Spanning-tree edges, as symbol indices (each symbol is a morphism).
    pub tree: Vec<usize>,
    /// Morphism name for every symbol.
    pub morphisms: Vec<String>,
}

/// A finite group presentation. Symbols are never renumbered: eliminated
/// generators stay in the symbol table and are recorded in `substitutions`
/// as words over the surviving generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    symbols: Vec<String>,
    generators: Vec<usize>,
    relators: Vec<Word>,
    substitutions: Vec<(usize, Word)>,
    provenance: Option<Provenance>,
}

impl GroupPresentation {
    pub fn new<S: AsRef<str>>(generators: &[S], relators: Vec<Word>) -> Result<Self> {
        let symbols: Vec<String> = generators.iter().map(|g| g.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for s in &symbols {
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateName(s.clone()));
            }
        }
        if relators
            .iter()
            .any(|r| r.letters().iter().any(|l| l.gen >= symbols.len()))
        {
            return Err(Error::Format("relator uses an unknown generator".into()));
        }
        Ok(Self {
            generators: (0..symbols.len()).collect(),
            symbols,
            relators,
            substitutions: Vec::new(),
            provenance: None,
        })
    }

    /// Parses relators written as `(name, exponent)` lists.
    pub fn from_names<S: AsRef<str>>(generators: &[S], relators: &[Vec<(S, i64)>]) -> Result<Self> {
        let names: Vec<&str> = generators.iter().map(|g| g.as_ref()).collect();
        let mut words = Vec::with_capacity(relators.len());
        for r in relators {
            let mut powers = Vec::with_capacity(r.len());
            for (name, e) in r {
                let g = names
                    .iter()
                    .position(|n| *n == name.as_ref())
                    .ok_or_else(|| Error::Format(format!("unknown generator {:?}", name.as_ref())))?;
                powers.push((g, *e));
            }
            words.push(Word::from_powers(&powers));
        }
        Self::new(generators, words)
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    /// Surviving generators (symbol indices).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|&g| self.symbols[g].as_str()).collect()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn substitutions(&self) -> &[(usize, Word)] {
        &self.substitutions
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// No relators: the group is free on the surviving generators.
    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    /// Rewrites a word over the original symbols into the surviving
    /// generators, through the recorded eliminations.
    pub fn translate(&self, word: &Word) -> Word {
        let mut w = word.clone();
        for (g, image) in &self.substitutions {
            if w.contains(*g) {
                w = w.substitute(*g, image);
            }
        }
        w
    }

    pub fn display_word(&self, word: &Word) -> String {
        word.display_with(&self.symbols)
    }
}

/// Result of a bounded simplification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// `true` when the step budget ran out before a fixpoint.
    pub exhausted: bool,
    pub steps: usize,
}

/// Tietze simplification: cyclically reduce relators, drop empty and
/// duplicate ones, and eliminate a generator occurring exactly once in
/// some relator. Shortest relators are tried first. One step is one
/// elimination or one reduction pass that changed something.
pub fn tietze_simplify(p: &GroupPresentation, max_steps: usize) -> Simplified {
    let mut p = p.clone();
    let mut steps = 0;
    loop {
        let reduced = reduce_relators(&p.relators);
        if reduced != p.relators {
            if steps >= max_steps {
                return Simplified {
                    presentation: p,
                    exhausted: true,
                    steps,
                };
            }
            steps += 1;
            p.relators = reduced;
        }
        let Some((r, k)) = find_elimination(&p.relators) else {
            return Simplified {
                presentation: p,
                exhausted: false,
                steps,
            };
        };
        if steps >= max_steps {
            return Simplified {
                presentation: p,
                exhausted: true,
                steps,
            };
        }
        steps += 1;
        eliminate(&mut p, r, k);
    }
}

fn reduce_relators(relators: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(relators.len());
    for r in relators {
        let c = r.cyclically_reduced();
        if c.is_empty() || !seen.insert(c.clone()) {
            continue;
        }
        out.push(c);
    }
    out
}

fn find_elimination(relators: &[Word]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| relators[i].len());
    for i in order {
        let r = &relators[i];
        for (k, l) in r.letters().iter().enumerate() {
            if r.occurrences(l.gen) == 1 {
                return Some((i, k));
            }
        }
    }
    None
}

fn eliminate(p: &mut GroupPresentation, r: usize, k: usize) {
    let relator = p.relators.remove(r).rotated(k);
    let first = relator.letters()[0];
    let rest = Word::new(relator.letters()[1..].iter().copied());
    // g·w = 1 gives g = w⁻¹; g⁻¹·w = 1 gives g = w
    let image = if first.inv { rest } else { rest.inverse() };
    let g = first.gen;
    for rel in &mut p.relators {
        if rel.contains(g) {
            *rel = rel.substitute(g, &image);
        }
    }
    for (_, sub) in &mut p.substitutions {
        if sub.contains(g) {
            *sub = sub.substitute(g, &image);
        }
    }
    p.substitutions.push((g, image));
    p.generators.retain(|&x| x != g);
}

/// Breadth-first spanning tree of the underlying undirected graph, rooted at
/// `base`; neighbours are visited in declared arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub base: usize,
    /// Tree arrows in discovery order.
    pub edges: Vec<usize>,
    /// For every object but the root: the tree arrow reaching it and the
    /// object it was reached from.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl SpanningTree {
    pub fn build(objects: usize, arrows: &[Arrow], base: usize) -> Result<Self> {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); objects];
        for (i, a) in arrows.iter().enumerate() {
            incident[a.src].push(i);
            if a.tgt != a.src {
                incident[a.tgt].push(i);
            }
        }
        let mut visited = vec![false; objects];
        let mut parent = vec![None; objects];
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([base]);
        visited[base] = true;
        while let Some(u) = queue.pop_front() {
            for &a in &incident[u] {
                let arrow = &arrows[a];
                let other = if arrow.src == u { arrow.tgt } else { arrow.src };
                if !visited[other] {
                    visited[other] = true;
                    parent[other] = Some((a, u));
                    edges.push(a);
                    queue.push_back(other);
                }
            }
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::NotConnected);
        }
        Ok(Self {
            base,
            edges,
            parent,
        })
    }

    /// Path from the root to `x` as `(arrow, forward)` pairs in application
    /// order; `forward` is false when the arrow is traversed backwards.
    pub fn path_from_root(&self, arrows: &[Arrow], x: usize) -> Vec<(usize, bool)> {
        let mut rev = Vec::new();
        let mut at = x;
        while let Some((a, from)) = self.parent[at] {
            rev.push((a, arrows[a].src == from));
            at = from;
        }
        rev.reverse();
        rev
    }
}

fn build_presentation(
    objects: &[String],
    arrows: &[Arrow],
    base: &str,
    mut relators: Vec<Word>,
) -> Result<GroupPresentation> {
    let b = objects
        .iter()
        .position(|o| o == base)
        .ok_or_else(|| Error::NoSuchObject(base.to_string()))?;
    let tree = SpanningTree::build(objects.len(), arrows, b)?;
    relators.extend(tree.edges.iter().map(|&t| Word::generator(t)));
    let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
    let mut p = GroupPresentation::new(&names, relators)?;
    p.provenance = Some(Provenance {
        base: base.to_string(),
        tree: tree.edges,
        morphisms: names,
    });
    Ok(p)
}

/// The vertex group of the fundamental groupoid at `base`, before any
/// simplification: one generator per non-identity morphism, one relator
/// `g·f·(gf)⁻¹` (or `g·f` for identity composites) per composable pair,
/// and one relator per spanning-tree edge.
pub fn pi1_unsimplified(cat: &FiniteCategory, base: &str) -> Result<GroupPresentation> {
    let relators = cat
        .composable_pairs()
        .into_iter()
        .map(|(g, f, gf)| {
            let mut w = Word::new([Letter::pos(g), Letter::pos(f)]);
            if let Mor::Arrow(h) = gf {
                w = w.mul(&Word::new([Letter::neg(h)]));
            }
            w
        })
        .collect();
    build_presentation(cat.objects(), cat.arrows(), base, relators)
}

/// As [`pi1_unsimplified`] for a category given by a quiver with
/// relations; each relation `lhs = rhs` contributes `lhs·rhs⁻¹`.
pub fn pi1_unsimplified_presented(
    cat: &PresentedCategory,
    base: &str,
) -> Result<GroupPresentation> {
    let path_word = |path: &[usize]| Word::new(path.iter().rev().map(|&a| Letter::pos(a)));
    let relators = cat
        .relations()
        .iter()
        .map(|(lhs, rhs)| path_word(lhs).mul(&path_word(rhs).inverse()))
        .collect();
    let q = cat.quiver();
    build_presentation(q.objects(), q.arrows(), base, relators)
}

/// Simplified vertex-group presentation with the default step budget.
pub fn pi1_presentation(cat: &FiniteCategory, base: &str) -> Result<GroupPresentation> {
    Ok(tietze_simplify(&pi1_unsimplified(cat, base)?, DEFAULT_TIETZE_STEPS).presentation)
}

pub fn pi1_presentation_presented(
    cat: &PresentedCategory,
    base: &str,
) -> Result<GroupPresentation> {
    Ok(tietze_simplify(&pi1_unsimplified_presented(cat, base)?, DEFAULT_TIETZE_STEPS).presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn loop_is_free_of_rank_one() {
        let p = pi1_presentation_presented(&fixtures::loop_quiver(), "o").unwrap();
        assert_eq!(p.generator_names(), vec!["a"]);
        assert!(p.is_free());
    }

    #[test]
    fn idem_is_trivial() {
        let raw = pi1_unsimplified(&fixtures::idem(), "o").unwrap();
        assert_eq!(raw.relators().len(), 1);
        let p = tietze_simplify(&raw, 100).presentation;
        assert!(p.generators().is_empty());
        assert!(p.relators().is_empty());
    }

    #[test]
    fn k2_tree_kills_alpha() {
        let p = pi1_presentation(&fixtures::k2(), "x0").unwrap();
        assert_eq!(p.generator_names(), vec!["beta"]);
        assert!(p.is_free());
        assert_eq!(p.provenance().unwrap().tree, vec![0]);
        assert!(p.translate(&Word::generator(0)).is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(
            pi1_presentation(&fixtures::k2(), "nowhere").unwrap_err(),
            Error::NoSuchObject("nowhere".into())
        );
        assert_eq!(
            pi1_presentation(&fixtures::k2_disjoint_pair(), "x").unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn tietze_examples() {
        let single = GroupPresentation::from_names(&["e"], &[vec![("e", 1)]]).unwrap();
        let s = tietze_simplify(&single, 10);
        assert!(s.presentation.generators().is_empty() && !s.exhausted);

        let ab = GroupPresentation::from_names(&["a", "b"], &[vec![("a", 1), ("b", 1)]]).unwrap();
        let s = tietze_simplify(&ab, 10).presentation;
        assert_eq!(s.generators().len(), 1);
        assert!(s.relators().is_empty());

        let free = GroupPresentation::from_names::<&str>(&["a"], &[]).unwrap();
        assert_eq!(tietze_simplify(&free, 10).presentation, free);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let p = pi1_unsimplified(&fixtures::commutative_square(), "a").unwrap();
        let s = tietze_simplify(&p, 1);
        assert!(s.exhausted);
        let full = tietze_simplify(&p, 1000);
        assert!(!full.exhausted);
        assert!(full.presentation.generators().is_empty());
    }
}
