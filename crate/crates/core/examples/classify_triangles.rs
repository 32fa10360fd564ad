//! Classify a few triangles by side lengths, including a near miss that
//! falls in the ambiguous band.

use trikit::geometry::{classify_triangle, Triangle, TriangleType, DEFAULT_TOL};

fn main() {
    let inputs: [[f64; 3]; 5] = [
        [1.0, 1.0, 1.0],
        [1.0, 3f64.sqrt(), 2.0],
        [3.0, 4.0, 5.0],
        [1.0, 1.1, 1.25],
        [1.0, 1.0, 1.000003],
    ];
    for sides in inputs {
        match classify_triangle(sides, DEFAULT_TOL) {
            Ok(kind) => println!("{sides:?} -> {kind}"),
            Err(e) => println!("{sides:?} -> error: {e}"),
        }
    }

    println!("\nrepresentatives (shortest side 1):");
    for kind in TriangleType::ALL {
        if let Some(angles) = kind.angles() {
            let t = Triangle::from_angles(angles).unwrap();
            println!("{:>18}  sides {:.6?}", kind.name(), t.sides());
        }
    }
}
