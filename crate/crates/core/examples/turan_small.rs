//! Exact Turán numbers of small forbidden families by branch and bound.
//! Pass `--extended` to include n = 7.

use std::time::Instant;

use trikit::hypergraph::NamedGraph;
use trikit::turan::{s_of_n, TuranSearch};

fn main() {
    let extended = std::env::args().any(|a| a == "--extended");
    let families: [(&str, Vec<NamedGraph>); 3] = [
        ("{F5, K4-}", vec![NamedGraph::F5, NamedGraph::K4_3minus]),
        ("{K4-}", vec![NamedGraph::K4_3minus]),
        ("{C5, K4-}", vec![NamedGraph::C5, NamedGraph::K4_3minus]),
    ];
    let top = if extended { 7 } else { 6 };
    for (label, family) in families {
        let graphs: Vec<_> = family.iter().map(|g| g.graph()).collect();
        for n in 3..=top {
            let start = Instant::now();
            let r = TuranSearch::new(n, &graphs).witnesses(true).run().unwrap();
            println!(
                "ex({n}, {label}) = {:<3} s(n) = {:<3} extremal classes {}  ({:.2?})",
                r.value,
                s_of_n(n as u64),
                r.witnesses.len(),
                start.elapsed()
            );
        }
    }
}
