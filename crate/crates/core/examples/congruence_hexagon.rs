//! The congruence 3-graph of a regular hexagon for the 30-60-90 triangle is
//! the twelve-edge graph H5.

use trikit::geometry::{congruence_hypergraph, CongruenceMode, PointConfig, ToleranceParams, Triangle};
use trikit::hypergraph::NamedGraph;

fn main() {
    let t = Triangle::new([1.0, 3f64.sqrt(), 2.0]).unwrap();
    let hexagon = PointConfig::regular_polygon(6, 1.0);
    let h = congruence_hypergraph(&hexagon, &t, &ToleranceParams::default(), CongruenceMode::Exact).unwrap();
    println!("hexagon graph: {h}");
    println!("edges: {}", h.edge_count());
    println!("isomorphic to H5: {}", h.is_isomorphic(&NamedGraph::H5.graph()));
    println!("complete shadow: {}", h.has_complete_shadow());

    // Jitter every point by less than eps' and count in eps mode.
    let params = ToleranceParams::default();
    let jittered = PointConfig::new(
        hexagon
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| *p + trikit::geometry::Point::polar(params.eps_prime(&t) / 5.0, i as f64))
            .collect(),
    );
    let h = congruence_hypergraph(&jittered, &t, &params, CongruenceMode::Eps).unwrap();
    println!("jittered hexagon, eps mode: {} edges", h.edge_count());
}
