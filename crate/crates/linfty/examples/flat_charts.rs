//! Exact isometries from flat planes onto the max-metric plane, verified by
//! seeded sampling.
//!
//! ```bash
//! cargo run -p linfty --example flat_charts
//! ```

use linfty::metric::PointN;
use linfty::oracle::{sample_isometry_check, IsometryMap};
use linfty::plane::{flat_isometry_to_r2, Plane};

fn main() {
    for (a, b, c, d) in [(0, 0, 1, 0), (1, 1, 2, 0), (1, -1, 0, 0), (1, 2, 3, 7)] {
        let plane = Plane::from_ints(a, b, c, d);
        let chart = flat_isometry_to_r2(&plane).expect("plane fails the triangle test");
        let verified = sample_isometry_check(&IsometryMap::Chart(&chart), &plane, 1000, 2024)
            .expect("chart matches plane");
        println!("{plane}: chart preserves 1000 sampled distances exactly: {verified}");
    }

    // The chart and its inverse in action.
    let plane = Plane::from_ints(1, 1, 2, 0);
    let chart = flat_isometry_to_r2(&plane).expect("flat plane");
    let p = PointN::from_ints(&[1, -1, 0]);
    let image = chart.project(&p).expect("dimension 3");
    println!("\n{p} on {plane} maps to {image} in the plane");
    println!("{image} lifts back to {}", chart.lift(&image).expect("dimension 2"));

    // Hexagonal planes have no chart at all.
    let err = flat_isometry_to_r2(&Plane::from_ints(1, 1, 1, 0)).unwrap_err();
    println!("\nx + y + z = 0: {err}");
}
