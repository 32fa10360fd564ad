//! Enumerate 3-graphs on five vertices up to isomorphism and run the four
//! classification checks.

use trikit::hypergraph::{enumerate_classes, NamedGraph, ThreeGraph};

fn label(g: &ThreeGraph) -> String {
    NamedGraph::ALL
        .iter()
        .find(|c| c.graph().is_isomorphic(g))
        .map_or_else(|| g.to_string(), |c| c.name().to_string())
}

fn show(title: &str, classes: &[ThreeGraph]) {
    let names: Vec<String> = classes.iter().map(label).collect();
    println!("{title}: {} classes {names:?}", classes.len());
}

fn main() {
    let k4m = NamedGraph::K4_3minus.graph();
    let k4 = NamedGraph::K4_3.graph();
    let c5_f32 = [k4m.clone(), NamedGraph::C5.graph(), NamedGraph::F32.graph()];
    let c5_j4 = [NamedGraph::C5.graph(), NamedGraph::J4.graph()];

    show("all", &enumerate_classes(5, |_| true).unwrap());
    show(
        "K4- free, at least 3 edges",
        &enumerate_classes(5, |g| g.edge_count() >= 3 && !g.contains_subgraph(&k4m)).unwrap(),
    );
    show(
        "K4- free, complete shadow",
        &enumerate_classes(5, |g| g.has_complete_shadow() && !g.contains_subgraph(&k4m)).unwrap(),
    );
    show(
        "{K4-, C5, F32} free, complete shadow",
        &enumerate_classes(5, |g| g.has_complete_shadow() && g.is_family_free(&c5_f32)).unwrap(),
    );
    show(
        "{C5, J4} free, contains K4, complete shadow",
        &enumerate_classes(5, |g| g.has_complete_shadow() && g.contains_subgraph(&k4) && g.is_family_free(&c5_j4))
            .unwrap(),
    );
}
