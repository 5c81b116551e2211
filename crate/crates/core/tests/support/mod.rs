//! Random test inputs shared by the property tests and the acceptance run.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use catcov_core::cat::{Arrow, CatFunctor, FiniteCategory, Mor};
use catcov_core::grading::{smash_product, FiniteGroupoid, Grading, Smash};
use catcov_core::group::FiniteGroup;

/// A morphism of a concrete category: a function between small sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Fun {
    src: usize,
    tgt: usize,
    map: Vec<usize>,
}

fn then(f: &Fun, g: &Fun) -> Fun {
    Fun {
        src: f.src,
        tgt: g.tgt,
        map: f.map.iter().map(|&i| g.map[i]).collect(),
    }
}

fn is_identity(f: &Fun) -> bool {
    f.src == f.tgt && f.map.iter().enumerate().all(|(i, &j)| i == j)
}

fn push(f: Fun, funs: &mut Vec<Fun>, seen: &mut HashMap<Fun, usize>) {
    if !is_identity(&f) && !seen.contains_key(&f) {
        seen.insert(f.clone(), funs.len());
        funs.push(f);
    }
}

/// A random category whose objects are sets of size 1..=3 and whose
/// morphisms are the functions generated by a few random ones. Every such
/// category is associative by construction, so the generator is an oracle
/// independent of the library's validation. `None` when the closure has
/// more than `max_morphisms` non-identity morphisms.
pub fn concrete_category<R: Rng>(
    rng: &mut R,
    objects: usize,
    generators: usize,
    max_morphisms: usize,
) -> Option<FiniteCategory> {
    let sizes: Vec<usize> = (0..objects).map(|_| rng.gen_range(1..=3)).collect();
    let mut funs: Vec<Fun> = Vec::new();
    let mut seen: HashMap<Fun, usize> = HashMap::new();
    for _ in 0..generators {
        let src = rng.gen_range(0..objects);
        let tgt = rng.gen_range(0..objects);
        let map = (0..sizes[src]).map(|_| rng.gen_range(0..sizes[tgt])).collect();
        push(Fun { src, tgt, map }, &mut funs, &mut seen);
    }
    let mut done = 0;
    while done < funs.len() {
        if funs.len() > max_morphisms {
            return None;
        }
        let f = funs[done].clone();
        for k in 0..=done {
            let g = funs[k].clone();
            if f.tgt == g.src {
                push(then(&f, &g), &mut funs, &mut seen);
            }
            if g.tgt == f.src {
                push(then(&g, &f), &mut funs, &mut seen);
            }
        }
        done += 1;
    }
    if funs.len() > max_morphisms {
        return None;
    }
    let arrows: Vec<Arrow> = funs
        .iter()
        .enumerate()
        .map(|(i, f)| Arrow {
            name: format!("m{i}"),
            src: f.src,
            tgt: f.tgt,
        })
        .collect();
    let mut table = HashMap::new();
    for (fi, f) in funs.iter().enumerate() {
        for (gi, g) in funs.iter().enumerate() {
            if f.tgt == g.src {
                let h = then(f, g);
                let m = if is_identity(&h) {
                    Mor::Id(h.src)
                } else {
                    Mor::Arrow(seen[&h])
                };
                table.insert((gi, fi), m);
            }
        }
    }
    let names = (0..objects).map(|i| format!("c{i}")).collect();
    Some(FiniteCategory::from_parts(names, arrows, table).expect("concrete categories are categories"))
}

/// A connected concrete category within the given bounds.
pub fn connected_category<R: Rng>(rng: &mut R, max_objects: usize, max_morphisms: usize) -> FiniteCategory {
    loop {
        let n = rng.gen_range(1..=max_objects);
        let k = rng.gen_range(0..=max_morphisms);
        if let Some(c) = concrete_category(rng, n, k, max_morphisms) {
            if c.is_connected() {
                return c;
            }
        }
    }
}

pub fn small_group(order: usize) -> FiniteGroup {
    FiniteGroup::cyclic(order)
}

/// A grading of `cat` by `group` on one object, by rejection sampling of
/// degrees; falls back to the trivial grading.
pub fn random_grading<R: Rng>(rng: &mut R, cat: &Arc<FiniteCategory>, group: &FiniteGroup) -> Grading {
    let groupoid = FiniteGroupoid::of_group(group, "o");
    let target = groupoid.category().clone();
    let element = |g: usize| -> Mor {
        if g == group.identity() {
            Mor::Id(0)
        } else {
            Mor::Arrow(target.arrow(group.name(g)).expect("element arrow"))
        }
    };
    for _ in 0..64 {
        let degrees = (0..cat.arrow_count())
            .map(|_| element(rng.gen_range(0..group.order())))
            .collect();
        if let Ok(f) = CatFunctor::new(cat.clone(), target.clone(), vec![0; cat.object_count()], degrees) {
            return Grading::new(f, groupoid).expect("grading");
        }
    }
    let f = CatFunctor::new(
        cat.clone(),
        target,
        vec![0; cat.object_count()],
        vec![Mor::Id(0); cat.arrow_count()],
    )
    .expect("trivial grading");
    Grading::new(f, groupoid).expect("grading")
}

/// A connected category with at most 4 objects and 8 morphisms carrying a
/// free action of a cyclic group of the given order, built as a connected
/// smash product over a random base.
pub fn free_action_fixture<R: Rng>(rng: &mut R, order: usize) -> Smash {
    let group = small_group(order);
    loop {
        let base = Arc::new(connected_category(rng, 4 / order, 8 / order));
        let grading = random_grading(rng, &base, &group);
        let smash = smash_product(&grading, 0).expect("smash");
        if smash.category().is_connected() {
            return smash;
        }
    }
}
