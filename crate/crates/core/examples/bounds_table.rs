//! Lower and upper bounds on the maximum number of near-congruent triangles
//! for every triangle type, with the provenance of the upper bound.

use trikit::bounds::{Provenance, TriangleBounds};
use trikit::cli::verify::sample_triangles;

fn main() {
    for (label, t) in sample_triangles() {
        let bounds = TriangleBounds::new(&t).unwrap();
        let provenance = match &bounds.provenance {
            Provenance::SelfContained => "self-contained".to_string(),
            Provenance::ExternalCitation(c) => format!("cited: {}", c.name),
        };
        println!("{label} (construction {}, {provenance})", bounds.construction.name());
        for n in (3..=14).filter(|n| n % bounds.construction.divisor() == 0) {
            let r = bounds.report(n).unwrap();
            println!("  n={n:<3} lower {:<4} upper {:<4} gap {}", r.lower, r.upper_floor, r.gap());
        }
    }
}
