//! Exactly-forbidden verdicts of the six catalog graphs for every triangle
//! type, with a witness placement where one exists.

use trikit::cli::verify::sample_triangles;
use trikit::realizability::{build_forbidden_catalog, Verdict};

fn main() {
    for (label, t) in sample_triangles() {
        let catalog = build_forbidden_catalog(&t).expect("sample triangles classify");
        println!("{label} ({:?}):", catalog.triangle_type);
        for (g, v) in &catalog.verdicts {
            match v {
                Verdict::Forbidden => println!("  {:<10} forbidden", g.name()),
                Verdict::Realizable(w) => {
                    let pts: Vec<String> = w.positions().iter().map(|p| format!("({:.3},{:.3})", p.x, p.y)).collect();
                    println!("  {:<10} realizable at {}", g.name(), pts.join(" "));
                }
                Verdict::Ambiguous(a) => println!("  {:<10} ambiguous (residual {:e})", g.name(), a.residual),
            }
        }
    }
}
