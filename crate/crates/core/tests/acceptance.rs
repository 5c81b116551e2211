//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod support;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use catcov_core::cat::{CatFunctor, FiniteCategory, Mor};
use catcov_core::cover::{aut_group, check_covering, is_galois, lift_pointed, lift_pointed_with, orbit_category};
use catcov_core::fixtures;
use catcov_core::frac::{
    abelianize, coset_enumerate, eval_universal, pi1_presentation, pi1_presentation_presented,
    word_equal, Budget, Dir, Letter, Step, Verdict, Walk, Word, DEFAULT_COSET_ROWS,
};
use catcov_core::grading::{
    roundtrip_iso, smash_product, CompleteGroupoid, FiniteGroupoid, Grading, ObjectSection, Smash,
};
use catcov_core::group::FiniteGroup;
use catcov_core::universal::{cayley_double, covers_all, universal_ball};

type Outcome = Result<String, String>;

/// A functor to a one-object group with images for formal inverses.
type Separator = (CatFunctor, HashMap<usize, Mor>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Connected components by breadth-first search over arrows in both
/// directions.
fn component_count(cat: &FiniteCategory) -> usize {
    let mut adj = vec![Vec::new(); cat.object_count()];
    for a in cat.arrows() {
        adj[a.src].push(a.tgt);
        adj[a.tgt].push(a.src);
    }
    let mut seen = vec![false; cat.object_count()];
    let mut count = 0;
    for start in 0..cat.object_count() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    count
}

fn is_permutation(map: impl Iterator<Item = usize>, n: usize) -> bool {
    let image: Vec<usize> = map.collect();
    image.len() == n && image.iter().copied().collect::<HashSet<_>>().len() == n && image.iter().all(|&i| i < n)
}

/// Bijective on objects and on non-identity morphisms.
fn bijective(f: &CatFunctor) -> bool {
    let s = f.source();
    let t = f.target();
    let arrows: Option<Vec<usize>> = (0..s.arrow_count()).map(|m| f.apply(Mor::Arrow(m)).arrow()).collect();
    s.object_count() == t.object_count()
        && is_permutation((0..s.object_count()).map(|x| f.on_object(x)), t.object_count())
        && arrows.is_some_and(|a| is_permutation(a.into_iter(), t.arrow_count()))
}

/// `outer ∘ inner == expected` checked object by object and arrow by arrow.
fn commutes(outer: &CatFunctor, inner: &CatFunctor, expected: &CatFunctor) -> bool {
    let s = inner.source();
    (0..s.object_count()).all(|x| outer.on_object(inner.on_object(x)) == expected.on_object(x))
        && s.all_mors()
            .into_iter()
            .all(|m| outer.apply(inner.apply(m)) == expected.apply(m))
}

fn a1() -> Outcome {
    let mut ranks = Vec::new();
    for n in 2..=4 {
        let cat = fixtures::k_e(n);
        let p = pi1_presentation(&cat, "x0").map_err(|e| e.to_string())?;
        let inv = abelianize(&p);
        ensure(inv.rank == n - 1 && inv.torsion.is_empty(), || {
            format!("|E|={n}: rank {} torsion {:?}", inv.rank, inv.torsion)
        })?;
        ranks.push(inv.rank);
    }
    Ok(format!("ranks {ranks:?} for |E| = 2, 3, 4, no torsion"))
}

fn a2() -> Outcome {
    let p = pi1_presentation(&fixtures::idem(), "o").map_err(|e| e.to_string())?;
    let table = coset_enumerate(&p, DEFAULT_COSET_ROWS).ok_or("coset enumeration did not close")?;
    ensure(table.order() == 1, || format!("order {}", table.order()))?;
    Ok("coset enumeration closes with order 1".into())
}

fn a3() -> Outcome {
    let p = pi1_presentation_presented(&fixtures::loop_quiver(), "o").map_err(|e| e.to_string())?;
    ensure(p.is_free() && p.generators().len() == 1, || {
        format!("{} generators, {} relators", p.generators().len(), p.relators().len())
    })?;
    let a = p.symbol("a").ok_or("no generator a")?;
    let budget = Budget::default();
    let w = Word::generator(a);
    let apart = word_equal(&p, &w, &w.inverse(), &budget);
    let same = word_equal(&p, &w.mul(&w), &w.mul(&w), &budget);
    ensure(apart == Verdict::False && same == Verdict::True, || {
        format!("a = a^-1: {apart:?}, a^2 = a^2: {same:?}")
    })?;
    Ok("free of rank 1, a != a^-1".into())
}

fn a4() -> Outcome {
    let s = fixtures::k2_z2_smash();
    let cov = s.covering();
    ensure(component_count(s.category()) == 1, || "smash is disconnected".into())?;
    ensure(is_galois(cov), || "smash projection is not Galois".into())?;
    let aut = aut_group(cov).map_err(|e| e.to_string())?;
    let fibres: Vec<usize> = cov.fibres().iter().map(Vec::len).collect();
    ensure(aut.group().order() == 2 && fibres.iter().all(|&n| n == 2), || {
        format!("|aut| = {}, fibres {fibres:?}", aut.group().order())
    })?;
    let flat = smash_product(&fixtures::k2_z2_flat_grading(), 0).map_err(|e| e.to_string())?;
    let components = component_count(flat.category());
    ensure(components == 2, || format!("flat grading gives {components} components"))?;
    Ok("connected, Galois, |aut| = 2 = fibre size; flat variant has 2 components".into())
}

/// The walk as a group word: letters in composition order.
fn walk_word(w: &Walk) -> Word {
    Word::new(w.steps().iter().rev().map(|s| match s.dir {
        Dir::Fwd => Letter::pos(s.mor),
        Dir::Inv => Letter::neg(s.mor),
    }))
}

fn random_walk(rng: &mut ChaCha8Rng, cat: &FiniteCategory, start: usize, len: usize) -> Walk {
    let mut steps = Vec::new();
    let mut at = start;
    for _ in 0..len {
        let choices: Vec<Step> = cat
            .outgoing(at)
            .iter()
            .map(|&m| Step::fwd(m))
            .chain(cat.incoming(at).iter().map(|&m| Step::inv(m)))
            .collect();
        if choices.is_empty() {
            break;
        }
        let s = choices[rng.gen_range(0..choices.len())];
        at = s.end(cat);
        steps.push(s);
    }
    Walk::new(cat, start, steps).expect("walk")
}

/// Walk-level equality to the empty walk: shortest-first search over
/// rewrites in both directions (compose or split a forward pair, cancel or
/// insert an inverse pair), bounded in length and node count.
fn walk_search_trivial(cat: &FiniteCategory, w: &Walk) -> bool {
    let max_len = w.len() + 4;
    let start = w.normalized(cat).steps().to_vec();
    let mut seen: HashSet<Vec<Step>> = HashSet::from([start.clone()]);
    let mut queue = BinaryHeap::from([Reverse((start.len(), start))]);
    let all_steps: Vec<Step> = (0..cat.arrow_count())
        .flat_map(|m| [Step::fwd(m), Step::inv(m)])
        .collect();
    let mut splits: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (g, f, gf) in cat.composable_pairs() {
        if let Mor::Arrow(h) = gf {
            splits.entry(h).or_default().push((f, g));
        }
    }
    while let Some(Reverse((_, steps))) = queue.pop() {
        if steps.is_empty() {
            return true;
        }
        if seen.len() > 20_000 {
            return false;
        }
        let mut next = Vec::new();
        for i in 0..steps.len() {
            let mut w = Walk::new(cat, w.src(), steps.clone()).expect("walk");
            if w.reduce_at(cat, i) {
                next.push(w.steps().to_vec());
            }
            if steps[i].dir == Dir::Fwd {
                for &(f, g) in splits.get(&steps[i].mor).into_iter().flatten() {
                    let mut s = steps.clone();
                    s.splice(i..=i, [Step::fwd(f), Step::fwd(g)]);
                    next.push(s);
                }
            }
        }
        if steps.len() + 2 <= max_len {
            for i in 0..=steps.len() {
                let at = if i == 0 { w.src() } else { steps[i - 1].end(cat) };
                for &s in all_steps.iter().filter(|s| s.start(cat) == at) {
                    let mut t = steps.clone();
                    t.splice(i..i, [s, s.flipped()]);
                    next.push(t);
                }
            }
        }
        for s in next {
            if s.len() <= max_len && seen.insert(s.clone()) {
                queue.push(Reverse((s.len(), s)));
            }
        }
    }
    false
}

/// A functor into a cyclic group that separates walks of K2 up to length 12.
fn k2_separator() -> Separator {
    let n = 13;
    let group = FiniteGroup::cyclic(n);
    let target = FiniteGroupoid::of_group(&group, "o");
    let k2 = Arc::new(fixtures::k2());
    let element = |g: usize| {
        if g == 0 {
            Mor::Id(0)
        } else {
            Mor::Arrow(target.category().arrow(group.name(g)).unwrap())
        }
    };
    let beta = k2.arrow("beta").unwrap();
    let degrees: Vec<usize> = (0..k2.arrow_count()).map(|m| usize::from(m == beta)).collect();
    let functor = CatFunctor::new(
        k2.clone(),
        target.category().clone(),
        vec![0; 2],
        degrees.iter().map(|&d| element(d)).collect(),
    )
    .unwrap();
    let theta = degrees
        .iter()
        .enumerate()
        .map(|(m, &d)| (m, element(group.inv(d))))
        .collect();
    (functor, theta)
}

/// Walk-level verdict on `u = v`: the normal form of `u·v⁻¹` is empty, or
/// the bounded rewrite search reaches the empty walk (equal); or a functor
/// into a finite group tells them apart (different).
fn walk_verdict(cat: &FiniteCategory, separator: Option<&Separator>, u: &Walk, v: &Walk) -> Verdict {
    let loop_walk = u.then(&v.inverse()).expect("same endpoints");
    if loop_walk.normalized(cat).is_empty() || walk_search_trivial(cat, &loop_walk) {
        return Verdict::True;
    }
    if let Some((f, theta)) = separator {
        let fu = eval_universal(f, theta, u).expect("eval");
        let fv = eval_universal(f, theta, v).expect("eval");
        if fu != fv {
            return Verdict::False;
        }
    }
    Verdict::Unknown
}

fn a5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let k2 = fixtures::k2();
    let idem = fixtures::idem();
    let separator = k2_separator();
    let budget = Budget::default();
    let cases: [(&FiniteCategory, &str, Option<&Separator>); 2] =
        [(&k2, "x0", Some(&separator)), (&idem, "o", None)];
    let presentations: Vec<_> = cases
        .iter()
        .map(|(c, b, _)| catcov_core::frac::pi1_unsimplified(c, b).expect("presentation"))
        .collect();
    let mut disagreements = Vec::new();
    let mut equal = 0;
    for trial in 0..1000 {
        let k = trial % 2;
        let (cat, _, sep) = cases[k];
        let start = rng.gen_range(0..cat.object_count());
        let len = rng.gen_range(0..=6);
        let u = random_walk(&mut rng, cat, start, len);
        // v shares both endpoints with u; half the time it is u in disguise
        let v = if rng.gen_bool(0.5) {
            let len = rng.gen_range(0..=(6 - u.len()) / 2);
            let detour = random_walk(&mut rng, cat, u.tgt(), len);
            u.then(&detour).unwrap().then(&detour.inverse()).unwrap()
        } else {
            let len = rng.gen_range(0..=5);
            let v = random_walk(&mut rng, cat, start, len);
            v.then(&step_between(cat, v.tgt(), u.tgt())).unwrap()
        };
        let oracle = walk_verdict(cat, sep, &u, &v);
        let p = &presentations[k];
        let verdict = word_equal(p, &walk_word(&u), &walk_word(&v), &budget);
        if verdict == Verdict::True {
            equal += 1;
        }
        if oracle != verdict || verdict == Verdict::Unknown {
            disagreements.push(format!("{} vs {}: walk {oracle:?}, word {verdict:?}", u.display(cat), v.display(cat)));
        }
    }
    ensure(disagreements.is_empty(), || {
        format!("{} disagreements, first: {}", disagreements.len(), disagreements[0])
    })?;
    Ok(format!("1000 trials, 0 disagreements ({equal} equal pairs)"))
}

/// A walk of length at most 1 from `x` to `y`; both test categories have
/// an arrow between any two objects.
fn step_between(cat: &FiniteCategory, x: usize, y: usize) -> Walk {
    if x == y {
        return Walk::empty(x);
    }
    let m = (0..cat.arrow_count())
        .find(|&m| {
            let a = &cat.arrows()[m];
            (a.src == x && a.tgt == y) || (a.src == y && a.tgt == x)
        })
        .expect("adjacent objects");
    let step = if cat.arrows()[m].src == x { Step::fwd(m) } else { Step::inv(m) };
    Walk::new(cat, x, vec![step]).unwrap()
}

/// The 50 random free actions shared by A6 and A9.
fn action_fixtures() -> Vec<Smash> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..50).map(|i| support::free_action_fixture(&mut rng, i % 3 + 1)).collect()
}

fn a6(fixtures: &[Smash]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    let mut sizes = HashSet::new();
    for (i, s) in fixtures.iter().enumerate() {
        let cat = s.category();
        ensure(cat.object_count() <= 4 && cat.arrow_count() <= 8 && cat.is_connected(), || {
            format!("fixture {i} out of bounds")
        })?;
        sizes.insert((cat.object_count(), cat.arrow_count(), s.action().group().order()));
        let action = s.action();
        let (quotient, projection) = orbit_category(action).map_err(|e| format!("fixture {i}: {e}"))?;
        let representatives: Vec<usize> = (0..quotient.object_count())
            .map(|w| {
                let fibre = projection.fibre(w);
                fibre[rng.gen_range(0..fibre.len())]
            })
            .collect();
        let sections = [
            ObjectSection::least(&projection, action),
            ObjectSection::new(&projection, action, representatives),
        ];
        for section in sections {
            let section = section.map_err(|e| format!("fixture {i}: {e}"))?;
            let q = rng.gen_range(0..quotient.object_count());
            let rt = roundtrip_iso(&projection, action, &section, q).map_err(|e| format!("fixture {i}: {e}"))?;
            ensure(bijective(&rt.iso), || format!("fixture {i}: round trip is not bijective"))?;
            ensure(
                commutes(projection.functor(), &rt.iso, rt.smash.covering().functor()),
                || format!("fixture {i}: round trip does not commute with the projections"),
            )?;
        }
    }
    Ok(format!("50 actions ({} shapes), both sections, isomorphisms commute", sizes.len()))
}

fn a7() -> Outcome {
    let k2 = Arc::new(fixtures::k2());
    let mut counts = Vec::new();
    for r in 0..=3 {
        let ball = universal_ball(&k2, "x0", r).map_err(|e| e.to_string())?;
        let c = ball.category();
        ensure(c.object_count() == 4 * r + 2 && c.arrow_count() == 4 * r + 1, || {
            format!("r={r}: {} objects, {} morphisms", c.object_count(), c.arrow_count())
        })?;
        let double = cayley_double(&["alpha", "beta"], r).map_err(|e| e.to_string())?;
        ensure(
            **double.iso.source() == *double.category
                && **double.iso.target() == **c
                && bijective(&double.iso),
            || format!("r={r}: double is not isomorphic to the ball"),
        )?;
        // star bijectivity, checked directly on each interior object
        let p = ball.projection();
        for x in (0..c.object_count()).filter(|&x| !ball.boundary()[x]) {
            let b = p.on_object(x);
            let out: HashSet<usize> = c.outgoing(x).iter().map(|&m| p.apply(Mor::Arrow(m)).arrow().unwrap()).collect();
            let inc: HashSet<usize> = c.incoming(x).iter().map(|&m| p.apply(Mor::Arrow(m)).arrow().unwrap()).collect();
            ensure(
                out.len() == c.outgoing(x).len()
                    && inc.len() == c.incoming(x).len()
                    && out == k2.outgoing(b).iter().copied().collect()
                    && inc == k2.incoming(b).iter().copied().collect(),
                || format!("r={r}: star at {} is not bijective", c.object_name(x)),
            )?;
        }
        ensure(ball.interior_stars_bijective(), || format!("r={r}: library star check fails"))?;
        counts.push((c.object_count(), c.arrow_count()));
    }
    Ok(format!("(objects, morphisms) for r = 0..3: {counts:?}"))
}

/// Surjective homomorphisms `group → quotient` found by brute force.
fn surjections(group: &FiniteGroup, quotient: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let m = quotient.order();
    let mut found = Vec::new();
    let mut phi = vec![0; n];
    loop {
        let hom = (0..n).all(|a| (0..n).all(|b| phi[group.mul(a, b)] == quotient.mul(phi[a], phi[b])));
        if hom && phi.iter().copied().collect::<HashSet<_>>().len() == m {
            found.push(phi.clone());
        }
        let mut i = 0;
        while i < n {
            phi[i] += 1;
            if phi[i] < m {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
        if i == n {
            return found;
        }
    }
}

fn pi1_order(cat: &FiniteCategory) -> Result<usize, String> {
    let p = pi1_presentation(cat, cat.object_name(0)).map_err(|e| e.to_string())?;
    Ok(coset_enumerate(&p, DEFAULT_COSET_ROWS).ok_or("coset enumeration did not close")?.order())
}

fn a8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let groups = [
        FiniteGroup::cyclic(1),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::klein(),
        FiniteGroup::cyclic(6),
        FiniteGroup::symmetric3(),
    ];
    let mut checked = 0;
    for k in &groups {
        for order in 1..=3 {
            let gamma = FiniteGroup::cyclic(order);
            let target = FiniteGroupoid::of_group(&gamma, "o");
            let element = |g: usize| {
                if g == gamma.identity() {
                    Mor::Id(0)
                } else {
                    Mor::Arrow(target.category().arrow(gamma.name(g)).unwrap())
                }
            };
            for phi in surjections(k, &gamma) {
                if k.order() / order > 4 {
                    continue;
                }
                let objects = rng.gen_range(1..=2);
                let names: Vec<String> = (0..objects).map(|i| format!("v{i}")).collect();
                let h = CompleteGroupoid::new(&names, k);
                let hcat = h.groupoid().category().clone();
                // a random coboundary twist keeps the degree map a functor
                let twist: Vec<usize> = (0..objects).map(|_| rng.gen_range(0..order)).collect();
                let degrees = hcat
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(m, a)| {
                        let g = phi[h.element(Mor::Arrow(m))];
                        element(gamma.mul(gamma.mul(twist[a.tgt], g), gamma.inv(twist[a.src])))
                    })
                    .collect();
                let functor = CatFunctor::new(hcat, target.category().clone(), vec![0; objects], degrees)
                    .map_err(|e| e.to_string())?;
                let grading = Grading::new(functor, target.clone()).map_err(|e| e.to_string())?;
                let smash = smash_product(&grading, 0).map_err(|e| e.to_string())?;
                let g = smash.category();
                ensure(g.is_connected(), || "surjective degree map gave a disconnected smash".into())?;
                let (quotient, _) = orbit_category(smash.action()).map_err(|e| e.to_string())?;
                let upstairs = pi1_order(g)?;
                let downstairs = pi1_order(&quotient)?;
                // in a groupoid the fundamental group is the vertex group
                let vertex = g.hom(0, 0).len();
                let vertex_q = quotient.hom(0, 0).len();
                ensure(
                    downstairs == order * upstairs && upstairs == vertex && downstairs == vertex_q && vertex <= 4,
                    || {
                        format!(
                            "|K|={}, |Γ|={order}: orders {downstairs} / {upstairs}, vertex groups {vertex_q} / {vertex}",
                            k.order()
                        )
                    },
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} groupoid extensions, |G/Γ| = |Γ|·|G| in each"))
}

fn a9(fixtures: &[Smash]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lifts = 0;
    for (i, s) in fixtures.iter().enumerate() {
        let (_, projection) = orbit_category(s.action()).map_err(|e| e.to_string())?;
        let total = projection.total();
        let identity = check_covering(&CatFunctor::identity(projection.base().clone())).map_err(|e| e.to_string())?;
        let c = rng.gen_range(0..total.object_count());
        let over = projection.functor().on_object(c);
        let mut targets: Vec<(&_, usize)> = projection.fibre(over).iter().map(|&d| (&projection, d)).collect();
        targets.push((&identity, over));
        for (g, d) in targets {
            let reference = lift_pointed(&projection, g, c, d)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("fixture {i}: no lift"))?;
            for _ in 0..10 {
                let again = lift_pointed_with(&projection, g, c, d, Some(&mut rng)).map_err(|e| e.to_string())?;
                ensure(again.as_ref() == Some(&reference), || format!("fixture {i}: lift depends on order"))?;
            }
            lifts += 1;
        }
    }
    Ok(format!("{lifts} pointed lifts, each identical under 10 shuffled orders"))
}

fn a10() -> Outcome {
    let k2 = Arc::new(fixtures::k2());
    let ball = universal_ball(&k2, "x0", 3).map_err(|e| e.to_string())?;
    let x0 = k2.object("x0").unwrap();
    let mut maps = 0;
    for n in 2..=4 {
        let group = FiniteGroup::cyclic(n);
        let target = FiniteGroupoid::of_group(&group, "o");
        let one = Mor::Arrow(target.category().arrow(group.name(1)).unwrap());
        let beta = k2.arrow("beta").unwrap();
        let degrees = (0..k2.arrow_count()).map(|m| if m == beta { one } else { Mor::Id(0) }).collect();
        let f = CatFunctor::new(k2.clone(), target.category().clone(), vec![0; 2], degrees).map_err(|e| e.to_string())?;
        let smash = smash_product(&Grading::new(f, target).map_err(|e| e.to_string())?, 0).map_err(|e| e.to_string())?;
        let cover = smash.covering();
        ensure(cover.total().is_connected() && is_galois(cover), || format!("Z{n} cover is not connected Galois"))?;
        for &c0 in cover.fibre(x0) {
            let h = covers_all(&ball, cover, c0).map_err(|e| format!("Z{n}: {e}"))?;
            ensure(commutes(cover.functor(), &h, ball.projection()), || format!("Z{n}: projections do not commute"))?;
            let objects: HashSet<usize> = (0..ball.category().object_count()).map(|x| h.on_object(x)).collect();
            let arrows: HashSet<Mor> = (0..ball.category().arrow_count()).map(|m| h.apply(Mor::Arrow(m))).collect();
            ensure(
                objects.len() == cover.total().object_count() && arrows.len() == cover.total().arrow_count(),
                || format!("Z{n}: map is not onto"),
            )?;
            maps += 1;
        }
    }
    Ok(format!("{maps} pointed maps onto the Z2, Z3, Z4 covers, all commuting"))
}

fn run(id: &str, f: impl FnOnce() -> Outcome) -> bool {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(detail)) => {
            println!("{id} PASS {detail}");
            true
        }
        Ok(Err(detail)) => {
            println!("{id} FAIL {detail}");
            false
        }
        Err(_) => {
            println!("{id} FAIL panicked");
            false
        }
    }
}

fn main() -> ExitCode {
    let shared = action_fixtures();
    let results = [
        run("A1", a1),
        run("A2", a2),
        run("A3", a3),
        run("A4", a4),
        run("A5", a5),
        run("A6", || a6(&shared)),
        run("A7", a7),
        run("A8", a8),
        run("A9", || a9(&shared)),
        run("A10", a10),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
