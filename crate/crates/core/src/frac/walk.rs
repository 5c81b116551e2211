use std::collections::HashMap;
use std::fmt;

use crate::cat::{CatFunctor, FiniteCategory, Mor};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Fwd,
    Inv,
}

/// One letter of a walk: a non-identity morphism traversed forwards, or its
/// formal inverse traversed from target to source.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub mor: usize,
    pub dir: Dir,
}

impl Step {
    pub fn fwd(mor: usize) -> Self {
        Self { mor, dir: Dir::Fwd }
    }

    pub fn inv(mor: usize) -> Self {
        Self { mor, dir: Dir::Inv }
    }

    pub fn flipped(self) -> Self {
        let dir = match self.dir {
            Dir::Fwd => Dir::Inv,
            Dir::Inv => Dir::Fwd,
        };
        Self { mor: self.mor, dir }
    }

    pub fn start(self, cat: &FiniteCategory) -> usize {
        let a = &cat.arrows()[self.mor];
        match self.dir {
            Dir::Fwd => a.src,
            Dir::Inv => a.tgt,
        }
    }

    pub fn end(self, cat: &FiniteCategory) -> usize {
        let a = &cat.arrows()[self.mor];
        match self.dir {
            Dir::Fwd => a.tgt,
            Dir::Inv => a.src,
        }
    }
}

/// A walk in the underlying undirected graph, letters in application order
/// (the first step is applied first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    src: usize,
    tgt: usize,
    steps: Vec<Step>,
}

impl Walk {
    pub fn empty(x: usize) -> Self {
        Self {
            src: x,
            tgt: x,
            steps: Vec::new(),
        }
    }

    pub fn new(cat: &FiniteCategory, src: usize, steps: Vec<Step>) -> Result<Self> {
        let mut at = src;
        for s in &steps {
            if s.mor >= cat.arrow_count() || s.start(cat) != at {
                return Err(Error::EndpointMismatch("walk steps are not contiguous".into()));
            }
            at = s.end(cat);
        }
        Ok(Self { src, tgt: at, steps })
    }

    pub fn single(cat: &FiniteCategory, step: Step) -> Self {
        Self {
            src: step.start(cat),
            tgt: step.end(cat),
            steps: vec![step],
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            src: self.tgt,
            tgt: self.src,
            steps: self.steps.iter().rev().map(|s| s.flipped()).collect(),
        }
    }

    /// `next ∘ self` without normalizing.
    pub fn then(&self, next: &Walk) -> Result<Self> {
        if self.tgt != next.src {
            return Err(Error::EndpointMismatch("walks do not meet".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        Ok(Self {
            src: self.src,
            tgt: next.tgt,
            steps,
        })
    }

    /// Positions `i` where the pair `(steps[i], steps[i+1])` reduces.
    pub fn redexes(&self, cat: &FiniteCategory) -> Vec<usize> {
        (0..self.steps.len().saturating_sub(1))
            .filter(|&i| reduce_pair(cat, self.steps[i], self.steps[i + 1]).is_some())
            .collect()
    }

    /// Applies the reduction at position `i`; `false` if nothing reduces there.
    pub fn reduce_at(&mut self, cat: &FiniteCategory, i: usize) -> bool {
        if i + 1 >= self.steps.len() {
            return false;
        }
        match reduce_pair(cat, self.steps[i], self.steps[i + 1]) {
            Some(Some(step)) => {
                self.steps.splice(i..i + 2, [step]);
                true
            }
            Some(None) => {
                self.steps.drain(i..i + 2);
                true
            }
            None => false,
        }
    }

    pub fn is_normal(&self, cat: &FiniteCategory) -> bool {
        self.redexes(cat).is_empty()
    }

    /// Leftmost-innermost normalization with a stack.
    pub fn normalized(&self, cat: &FiniteCategory) -> Self {
        let mut stack: Vec<Step> = Vec::with_capacity(self.steps.len());
        for &step in &self.steps {
            let mut pending = Some(step);
            while let Some(next) = pending.take() {
                match stack.last().and_then(|&top| reduce_pair(cat, top, next)) {
                    Some(Some(merged)) => {
                        stack.pop();
                        pending = Some(merged);
                    }
                    Some(None) => {
                        stack.pop();
                    }
                    None => stack.push(next),
                }
            }
        }
        Self {
            src: self.src,
            tgt: self.tgt,
            steps: stack,
        }
    }

    pub fn display(&self, cat: &FiniteCategory) -> String {
        if self.steps.is_empty() {
            return format!("id_{}", cat.object_name(self.src));
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s.dir {
                Dir::Fwd => cat.arrow_name(s.mor).to_string(),
                Dir::Inv => format!("{}'", cat.arrow_name(s.mor)),
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "walk {}->{} of length {}", self.src, self.tgt, self.steps.len())
    }
}

/// `Some(Some(s))`: the pair rewrites to one step; `Some(None)`: the pair
/// cancels; `None`: irreducible.
fn reduce_pair(cat: &FiniteCategory, first: Step, second: Step) -> Option<Option<Step>> {
    match (first.dir, second.dir) {
        (Dir::Fwd, Dir::Fwd) => match cat.compose(Mor::Arrow(second.mor), Mor::Arrow(first.mor))? {
            Mor::Arrow(h) => Some(Some(Step::fwd(h))),
            Mor::Id(_) => Some(None),
        },
        _ if first.mor == second.mor && first.dir != second.dir => Some(None),
        _ => None,
    }
}

/// Composition `w2 ∘ w1` of walks followed by normalization: forward pairs
/// are composed in the category and cancelling pairs removed.
pub fn free_compose(cat: &FiniteCategory, w2: &Walk, w1: &Walk) -> Result<Walk> {
    Ok(w1.then(w2)?.normalized(cat))
}

/// Evaluates the functor determined by `functor` on forward letters and by
/// `theta` on inverse letters. `theta[m]` is the image of the formal
/// inverse of `m` and must run from `F(tgt m)` to `F(src m)`.
pub fn eval_universal(
    functor: &CatFunctor,
    theta: &HashMap<usize, Mor>,
    walk: &Walk,
) -> Result<Mor> {
    let source = functor.source();
    let target = functor.target();
    for (&m, &image) in theta {
        if m >= source.arrow_count() {
            return Err(Error::UnknownMorphism(format!("#{m}")));
        }
        let a = &source.arrows()[m];
        if target.src(image) != functor.on_object(a.tgt)
            || target.tgt(image) != functor.on_object(a.src)
        {
            return Err(Error::EndpointMismatch(format!(
                "inverse image of {} has the wrong endpoints",
                a.name
            )));
        }
    }
    let mut acc = Mor::Id(functor.on_object(walk.src()));
    for step in walk.steps() {
        let image = match step.dir {
            Dir::Fwd => functor.apply(Mor::Arrow(step.mor)),
            Dir::Inv => *theta.get(&step.mor).ok_or_else(|| {
                Error::Format(format!("no inverse image for {}", source.arrow_name(step.mor)))
            })?,
        };
        acc = target
            .compose(image, acc)
            .ok_or_else(|| Error::EndpointMismatch("walk images do not compose".into()))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::sync::Arc;

    #[test]
    fn cancellation() {
        let k2 = fixtures::k2();
        let beta = k2.arrow("beta").unwrap();
        let w1 = Walk::single(&k2, Step::fwd(beta));
        let w2 = Walk::single(&k2, Step::inv(beta));
        let w = free_compose(&k2, &w2, &w1).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.src(), k2.object("x").unwrap());
    }

    #[test]
    fn idempotent_composes() {
        let idem = fixtures::idem();
        let e = Walk::single(&idem, Step::fwd(0));
        assert_eq!(free_compose(&idem, &e, &e).unwrap(), e);
    }

    #[test]
    fn empty_is_unit() {
        let k2 = fixtures::k2();
        let w = Walk::new(&k2, 0, vec![Step::fwd(0), Step::inv(1)]).unwrap();
        let before = Walk::empty(w.src());
        let after = Walk::empty(w.tgt());
        assert_eq!(free_compose(&k2, &w, &before).unwrap(), w);
        assert_eq!(free_compose(&k2, &after, &w).unwrap(), w);
    }

    #[test]
    fn mismatched_walks() {
        let k2 = fixtures::k2();
        let w = Walk::single(&k2, Step::fwd(0));
        assert!(free_compose(&k2, &w, &w).is_err());
    }

    #[test]
    fn evaluation_into_z2() {
        let k2 = Arc::new(fixtures::k2());
        let z2 = fixtures::z2grp();
        let grading = fixtures::k2_z2_one_object_grading();
        let s = z2.category().parse_mor("s").unwrap();
        let alpha = k2.arrow("alpha").unwrap();
        let beta = k2.arrow("beta").unwrap();
        let theta: HashMap<usize, Mor> = [(alpha, Mor::Id(0)), (beta, s)].into_iter().collect();
        let w = Walk::new(&k2, 0, vec![Step::fwd(alpha), Step::inv(beta)]).unwrap();
        assert_eq!(eval_universal(grading.functor(), &theta, &w).unwrap(), s);
        assert_eq!(
            eval_universal(grading.functor(), &theta, &Walk::empty(0)).unwrap(),
            Mor::Id(0)
        );
        let single = Walk::single(&k2, Step::fwd(beta));
        assert_eq!(
            eval_universal(grading.functor(), &theta, &single).unwrap(),
            grading.functor().apply(Mor::Arrow(beta))
        );
    }

    #[test]
    fn theta_endpoint_check() {
        let k2 = Arc::new(fixtures::k2());
        let id = CatFunctor::identity(k2.clone());
        let theta: HashMap<usize, Mor> = [(0, Mor::Arrow(0))].into_iter().collect();
        let err = eval_universal(&id, &theta, &Walk::empty(0)).unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch(_)));
    }
}
