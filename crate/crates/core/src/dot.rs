//! Graphviz export. Nodes and edges are emitted in lexicographic order so
//! identical inputs give identical bytes.

use std::fmt::Write;

use crate::cat::{FiniteCategory, Mor};
use crate::universal::CoverBall;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

struct Graph<'a> {
    cat: &'a FiniteCategory,
    dashed: Vec<bool>,
    labels: Vec<String>,
    /// Objects grouped into `rank=same` columns.
    columns: Vec<Vec<usize>>,
}

fn render(g: &Graph) -> String {
    let cat = g.cat;
    let mut nodes: Vec<usize> = (0..cat.object_count()).collect();
    nodes.sort_by(|&a, &b| cat.object_name(a).cmp(cat.object_name(b)));
    let mut edges: Vec<(&str, &str, &str)> = cat
        .arrows()
        .iter()
        .zip(&g.labels)
        .map(|(a, l)| (cat.object_name(a.src), cat.object_name(a.tgt), l.as_str()))
        .collect();
    edges.sort_unstable();

    let mut out = String::from("digraph {\n  rankdir=LR;\n");
    for &x in &nodes {
        let name = quote(cat.object_name(x));
        if g.dashed[x] {
            writeln!(out, "  {name} [label={name}, style=dashed];").unwrap();
        } else {
            writeln!(out, "  {name} [label={name}];").unwrap();
        }
    }
    for column in &g.columns {
        let mut names: Vec<String> = column.iter().map(|&x| quote(cat.object_name(x))).collect();
        names.sort_unstable();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
    }
    for (s, t, l) in edges {
        writeln!(out, "  {} -> {} [label={}];", quote(s), quote(t), quote(l)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One node per object and one labelled edge per non-identity morphism.
pub fn category_dot(cat: &FiniteCategory) -> String {
    category_dot_marked(cat, &[])
}

/// Like [`category_dot`], with the named objects dashed.
pub fn category_dot_marked(cat: &FiniteCategory, dashed: &[String]) -> String {
    render(&Graph {
        cat,
        dashed: cat.objects().iter().map(|o| dashed.contains(o)).collect(),
        labels: cat.arrows().iter().map(|a| a.name.clone()).collect(),
        columns: Vec::new(),
    })
}

/// A ball drawn in one column per base object, edges labelled by the
/// base morphism they cover, boundary objects dashed.
pub fn ball_dot(ball: &CoverBall) -> String {
    let cat = ball.category();
    let p = ball.projection();
    let base = ball.base();
    let labels = (0..cat.arrow_count())
        .map(|m| base.mor_name(p.apply(Mor::Arrow(m))))
        .collect();
    let columns = (0..base.object_count())
        .map(|b| (0..cat.object_count()).filter(|&c| p.on_object(c) == b).collect())
        .collect();
    render(&Graph {
        cat,
        dashed: ball.boundary().to_vec(),
        labels,
        columns,
    })
}
