//! Build each cluster construction, count its congruent triples exactly and
//! recount after random placement inside the clusters.

use trikit::bounds::{build_construction, count_construction, sample_and_recount, SizePolicy, DEFAULT_EPS};
use trikit::cli::verify::{closed_form_count, divisibility_points};

fn main() {
    for (kind, t, ns) in divisibility_points() {
        for n in ns {
            let c = build_construction(kind, &t, n, SizePolicy::Exact, DEFAULT_EPS).unwrap();
            let count = count_construction(&c, &t);
            let recounts: Vec<u64> = (0..5).map(|s| sample_and_recount(&c, &t, DEFAULT_EPS, s).unwrap()).collect();
            println!(
                "{:<12} n={n:<3} sizes {:?} count {count} (closed form {}) recounts {recounts:?}",
                kind.name(),
                c.sizes,
                closed_form_count(kind, n)
            );
        }
    }

    // Off the divisibility condition the greedy policy still builds something.
    let (kind, t, _) = divisibility_points().remove(1);
    let c = build_construction(kind, &t, 10, SizePolicy::Greedy, DEFAULT_EPS).unwrap();
    println!("greedy {} n=10 sizes {:?} count {}", kind.name(), c.sizes, count_construction(&c, &t));
}
