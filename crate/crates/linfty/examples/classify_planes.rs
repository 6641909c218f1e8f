//! Classify planes of max-metric 3-space up to isometry.
//!
//! A plane is isometric to the max-metric plane exactly when `|a|, |b|, |c|`
//! fail to be the sides of a non-degenerate triangle; otherwise the triangle
//! similarity class separates planes completely.
//!
//! ```bash
//! cargo run -p linfty --example classify_planes
//! ```

use linfty::isometry::{canonical_class, isometric};
use linfty::plane::{nu_in_plane, Plane};

fn main() {
    let planes = [
        Plane::from_ints(1, 1, 1, 0),
        Plane::from_ints(2, 2, 3, 0),
        Plane::from_ints(2, 2, 2, 5),
        Plane::from_ints(1, 1, 2, 0),
        Plane::from_ints(1, 2, 3, 0),
        Plane::from_ints(0, 0, 1, 0),
        Plane::from_ints(3, -2, 2, 0),
    ];

    for plane in &planes {
        println!(
            "{plane}: triangle test {}, class {}, nu {}",
            plane.triangle_test(),
            canonical_class(plane),
            nu_in_plane(plane).expect("valid plane"),
        );
    }

    println!();
    for (i, p1) in planes.iter().enumerate() {
        for p2 in planes.iter().skip(i + 1) {
            if isometric(p1, p2) {
                println!("isometric: {p1}  ~  {p2}");
            }
        }
    }
}
