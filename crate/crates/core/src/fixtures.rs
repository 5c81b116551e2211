//! Small categories, coverings and gradings used throughout the tests and
//! the command-line examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{CatFunctor, FiniteCategory, PresentedCategory};
use crate::cover::GroupAction;
use crate::grading::{smash_product, CompleteGroupoid, FiniteGroupoid, Grading, Smash};
use crate::group::FiniteGroup;

const GREEK: [&str; 8] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
];

fn name_map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn functor(
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    objects: &[(&str, &str)],
    morphisms: &[(&str, &str)],
) -> CatFunctor {
    CatFunctor::from_names(source, target, &name_map(objects), &name_map(morphisms))
        .expect("fixture functor")
}

/// Two parallel arrows `alpha, beta: x → x0`.
pub fn k2() -> FiniteCategory {
    k_e(2)
}

/// `n` parallel arrows `x → x0`, named `alpha, beta, gamma, …` (then
/// `e8, e9, …`).
pub fn k_e(n: usize) -> FiniteCategory {
    let names: Vec<String> = (0..n)
        .map(|k| GREEK.get(k).map_or_else(|| format!("e{k}"), |s| s.to_string()))
        .collect();
    let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "x", "x0")).collect();
    FiniteCategory::from_names(&["x", "x0"], &arrows, &[]).expect("K_E")
}

/// One object `o` and an idempotent `e`.
pub fn idem() -> FiniteCategory {
    FiniteCategory::from_names(&["o"], &[("e", "o", "o")], &[("e", "e", "e")]).expect("IDEM")
}

/// The free category on one loop `a: o → o`.
pub fn loop_quiver() -> PresentedCategory {
    PresentedCategory::from_names::<&str>(&["o"], &[("a", "o", "o")], &[]).expect("LOOP")
}

/// `g∘f = k∘h = diag` on objects `a, b, c, d`.
pub fn commutative_square() -> FiniteCategory {
    FiniteCategory::from_names(
        &["a", "b", "c", "d"],
        &[
            ("f", "a", "b"),
            ("g", "b", "d"),
            ("h", "a", "c"),
            ("k", "c", "d"),
            ("diag", "a", "d"),
        ],
        &[("g", "f", "diag"), ("k", "h", "diag")],
    )
    .expect("square")
}

/// Two disjoint copies of K2 on `x, x0` and `y, y0`.
pub fn k2_disjoint_pair() -> FiniteCategory {
    FiniteCategory::from_names(
        &["x", "x0", "y", "y0"],
        &[
            ("alpha", "x", "x0"),
            ("beta", "x", "x0"),
            ("alpha'", "y", "y0"),
            ("beta'", "y", "y0"),
        ],
        &[],
    )
    .expect("K2 ⊔ K2")
}

/// The trivial two-sheeted covering `K2 ⊔ K2 → K2`.
pub fn k2_fold() -> CatFunctor {
    functor(
        Arc::new(k2_disjoint_pair()),
        Arc::new(k2()),
        &[("x", "x"), ("x0", "x0"), ("y", "x"), ("y0", "x0")],
        &[("alpha", "alpha"), ("beta", "beta"), ("alpha'", "alpha"), ("beta'", "beta")],
    )
}

/// ℤ/2 exchanging the two copies of K2.
pub fn k2_pair_swap() -> GroupAction {
    let pair = Arc::new(k2_disjoint_pair());
    let swap = functor(
        pair.clone(),
        pair.clone(),
        &[("x", "y"), ("x0", "y0"), ("y", "x"), ("y0", "x0")],
        &[("alpha", "alpha'"), ("beta", "beta'"), ("alpha'", "alpha"), ("beta'", "beta")],
    );
    let id = CatFunctor::identity(pair.clone());
    GroupAction::new(pair, FiniteGroup::cyclic(2), vec![id, swap]).expect("swap action")
}

/// A single arrow `f: x → x0`.
pub fn line() -> FiniteCategory {
    FiniteCategory::from_names(&["x", "x0"], &[("f", "x", "x0")], &[]).expect("line")
}

/// K2 onto the line, identifying `alpha` and `beta`.
pub fn k2_collapse() -> CatFunctor {
    functor(
        Arc::new(k2()),
        Arc::new(line()),
        &[("x", "x"), ("x0", "x0")],
        &[("alpha", "f"), ("beta", "f")],
    )
}

/// The collapse `K2 → line` together with a two-sheeted covering of the
/// line that crosses sheets along `f`.
pub fn quotient_line_cover() -> (CatFunctor, crate::cover::CoveringFunctor) {
    let line = Arc::new(line());
    let total = Arc::new(
        FiniteCategory::from_names(
            &["(x,0)", "(x,1)", "(x0,0)", "(x0,1)"],
            &[("f0", "(x,0)", "(x0,1)"), ("f1", "(x,1)", "(x0,0)")],
            &[],
        )
        .expect("line cover"),
    );
    let p = functor(
        total,
        line,
        &[("(x,0)", "x"), ("(x,1)", "x"), ("(x0,0)", "x0"), ("(x0,1)", "x0")],
        &[("f0", "f"), ("f1", "f")],
    );
    let cover = crate::cover::check_covering(&p).expect("covering of the line");
    (k2_collapse(), cover)
}

/// The three-sheeted covering of K3 in which `alpha` fixes the sheets,
/// `beta` swaps sheets 0 and 1 and `gamma` swaps sheets 1 and 2. Connected
/// but not Galois.
pub fn k3_triple_cover() -> CatFunctor {
    let perms: [(&str, [usize; 3]); 3] =
        [("alpha", [0, 1, 2]), ("beta", [1, 0, 2]), ("gamma", [0, 2, 1])];
    let objects: Vec<String> = ["x", "x0"]
        .iter()
        .flat_map(|b| (0..3).map(move |i| format!("({b},{i})")))
        .collect();
    let arrows: Vec<(String, String, String)> = perms
        .iter()
        .flat_map(|(a, p)| {
            (0..3).map(move |i| (format!("{a}{i}"), format!("(x,{i})"), format!("(x0,{})", p[i])))
        })
        .collect();
    let arrow_refs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    let object_refs: Vec<&str> = objects.iter().map(String::as_str).collect();
    let total = Arc::new(FiniteCategory::from_names(&object_refs, &arrow_refs, &[]).expect("triple"));
    let object_map: Vec<(String, String)> = objects
        .iter()
        .map(|o| (o.clone(), o[1..o.find(',').unwrap()].to_string()))
        .collect();
    let morphism_map: Vec<(String, String)> = arrows
        .iter()
        .map(|(n, _, _)| (n.clone(), n[..n.len() - 1].to_string()))
        .collect();
    let om: Vec<(&str, &str)> = object_map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let mm: Vec<(&str, &str)> = morphism_map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    functor(total, Arc::new(k_e(3)), &om, &mm)
}

/// The invertible arrow `f: a → b` with inverse `f_inv`.
pub fn i2() -> FiniteCategory {
    FiniteCategory::from_names(
        &["a", "b"],
        &[("f", "a", "b"), ("f_inv", "b", "a")],
        &[("f_inv", "f", "ID"), ("f", "f_inv", "ID")],
    )
    .expect("I2")
}

/// ℤ/2 exchanging `a ↔ b` and `f ↔ f_inv`.
pub fn i2_swap() -> GroupAction {
    let cat = Arc::new(i2());
    let swap = functor(
        cat.clone(),
        cat.clone(),
        &[("a", "b"), ("b", "a")],
        &[("f", "f_inv"), ("f_inv", "f")],
    );
    let id = CatFunctor::identity(cat.clone());
    GroupAction::new(cat, FiniteGroup::cyclic(2), vec![id, swap]).expect("I2 swap")
}

/// ℤ/2 with elements `1, s`.
pub fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2).with_names(&["1", "s"])
}

/// The one-object groupoid of ℤ/2, arrow `s`.
pub fn z2grp() -> FiniteGroupoid {
    FiniteGroupoid::of_group(&z2(), "o")
}

/// The one-object groupoid of ℤ/4, arrows `1, 2, 3`.
pub fn z4grp() -> FiniteGroupoid {
    FiniteGroupoid::of_group(&FiniteGroup::cyclic(4), "o")
}

/// ℤ/4, ℤ/2 (elements `0, 1`) and the reduction mod 2 between their
/// one-object groupoids.
pub fn z4_mod2() -> (FiniteGroupoid, FiniteGroupoid, CatFunctor) {
    let z4 = z4grp();
    let z2 = FiniteGroupoid::of_group(&FiniteGroup::cyclic(2), "o");
    let reduce = functor(
        z4.category().clone(),
        z2.category().clone(),
        &[("o", "o")],
        &[("1", "1"), ("2", "ID:o"), ("3", "1")],
    );
    (z4, z2, reduce)
}

/// On the one-object category of ℤ/4: the identity grading, and the
/// grading by reduction mod 2.
pub fn cycle4_gradings() -> (Grading, Grading) {
    let (z4, z2, reduce) = z4_mod2();
    let id = Grading::new(CatFunctor::identity(z4.category().clone()), z4).expect("identity");
    let modulo = Grading::new(reduce, z2).expect("mod 2");
    (id, modulo)
}

/// K2 → ℤ/2 on one object: `alpha ↦ 1`, `beta ↦ s`.
pub fn k2_z2_one_object_grading() -> Grading {
    let g = z2grp();
    let f = functor(
        Arc::new(k2()),
        g.category().clone(),
        &[("x", "o"), ("x0", "o")],
        &[("alpha", "ID:o"), ("beta", "s")],
    );
    Grading::new(f, g).expect("K2 grading")
}

/// K2 → ℤ/2 on one object with both arrows of degree 1.
pub fn k2_z2_flat_grading() -> Grading {
    let g = z2grp();
    let f = functor(
        Arc::new(k2()),
        g.category().clone(),
        &[("x", "o"), ("x0", "o")],
        &[("alpha", "ID:o"), ("beta", "ID:o")],
    );
    Grading::new(f, g).expect("flat K2 grading")
}

/// K2 into the complete groupoid on `x, x0` with vertex group `group`,
/// sending `alpha` and `beta` to the named elements.
pub fn k2_complete(group: &FiniteGroup, alpha: &str, beta: &str) -> Grading {
    let model = CompleteGroupoid::new(&["x", "x0"], group);
    let k2 = Arc::new(k2());
    let (x, x0) = (0, 1);
    let degree = |name: &str| model.mor(x0, group.element(name).expect("element"), x);
    let f = CatFunctor::new(
        k2,
        model.groupoid().category().clone(),
        vec![x, x0],
        vec![degree(alpha), degree(beta)],
    )
    .expect("K2 complete grading");
    Grading::new(f, model.groupoid().clone()).expect("grading")
}

/// `alpha ↦ 1`, `beta ↦ s` in the complete ℤ/2 groupoid on `x, x0`.
pub fn k2_z2_complete() -> Grading {
    k2_complete(&z2(), "1", "s")
}

/// Both arrows of degree 1 in the complete ℤ/2 groupoid on `x, x0`.
pub fn k2_z2_flat_complete() -> Grading {
    k2_complete(&z2(), "1", "1")
}

/// K2 into the complete groupoid on `x, x0` with trivial vertex groups.
pub fn k2_trivial_complete() -> Grading {
    k2_complete(&FiniteGroup::cyclic(1).with_names(&["1"]), "1", "1")
}

/// `alpha ↦ 0`, `beta ↦ 1` in the complete ℤ/n groupoid on `x, x0`.
pub fn k2_zn_complete(n: usize) -> Grading {
    k2_complete(&FiniteGroup::cyclic(n), "0", "1")
}

/// The grading of `cat` by the trivial group on one object.
pub fn trivial_grading(cat: Arc<FiniteCategory>) -> Grading {
    let g = FiniteGroupoid::of_group(&FiniteGroup::cyclic(1).with_names(&["1"]), "o");
    let o = 0;
    let f = CatFunctor::new(
        cat.clone(),
        g.category().clone(),
        vec![o; cat.object_count()],
        cat.arrows().iter().map(|_| crate::cat::Mor::Id(o)).collect(),
    )
    .expect("trivial grading");
    Grading::new(f, g).expect("grading")
}

/// The connected double cover of K2: the smash of
/// [`k2_z2_one_object_grading`] at `o`.
pub fn k2_z2_smash() -> Smash {
    smash_product(&k2_z2_one_object_grading(), 0).expect("smash")
}
