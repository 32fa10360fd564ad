//! Maximize the Lagrangian of the named graphs and certify the optimum
//! from above by interval branch and bound.

use trikit::hypergraph::NamedGraph;
use trikit::lagrangian::{certify_upper_bound, maximize, DEFAULT_CERTIFY_DEPTH, DEFAULT_MAX_ITERS, DEFAULT_RESTARTS};

fn main() {
    for g in NamedGraph::ALL {
        let h = g.graph();
        let r = maximize(&h, DEFAULT_RESTARTS, DEFAULT_MAX_ITERS);
        let bound = r.lower + 1e-6;
        let certified = certify_upper_bound(&h, bound, DEFAULT_CERTIFY_DEPTH);
        let support: Vec<usize> = r.maximizer.support().iter().map(|v| v + 1).collect();
        println!(
            "{:<10} lambda = {:.12}  support {:?}  certified <= {:.9}: {:?}",
            g.name(),
            r.lower,
            support,
            bound,
            certified
        );
    }
    // A bound below the optimum is refuted by a probe point.
    let c5 = NamedGraph::C5.graph();
    println!("C5 below 0.039: {:?}", certify_upper_bound(&c5, 0.039, DEFAULT_CERTIFY_DEPTH));
}
