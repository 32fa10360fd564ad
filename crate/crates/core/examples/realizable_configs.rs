//! Enumerate point sets whose pairwise distances are all sides of the
//! triangle and whose congruence graph has a complete shadow.

use trikit::cli::verify::sample_triangles;
use trikit::geometry::{congruence_hypergraph, CongruenceMode, ToleranceParams};
use trikit::hypergraph::NamedGraph;
use trikit::realizability::{realizable_point_sets, REALIZABLE_MAX_SIZE};

fn main() {
    let params = ToleranceParams::default();
    for (label, t) in sample_triangles() {
        let sets = realizable_point_sets(&t, REALIZABLE_MAX_SIZE).unwrap();
        println!("{label}: {} configurations", sets.len());
        for c in &sets {
            let h = congruence_hypergraph(c, &t, &params, CongruenceMode::Exact).unwrap();
            let name = NamedGraph::ALL.iter().find(|g| g.graph().is_isomorphic(&h)).map_or("", |g| g.name());
            println!("  {} points, {:>2} edges {name}", c.len(), h.edge_count());
        }
    }
}
