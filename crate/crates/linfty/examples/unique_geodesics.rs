//! Counting geodesics: diagonal pairs have one, everything else infinitely
//! many, and the unique-geodesic sphere points count the dimension.
//!
//! ```bash
//! cargo run -p linfty --example unique_geodesics
//! ```

use linfty::metric::{int, PointN};
use linfty::sector::{
    nu_ambient, tau, unique_geodesic_points, witness_two_geodesics, SphereSpec,
};

fn main() {
    let origin = PointN::from_ints(&[0, 0, 0]);
    for target in [[2, 2, -2], [1, 0, 0], [3, 1, -2]] {
        let q = PointN::from_ints(&target);
        println!("tau(O, {q}) = {}", tau(&origin, &q).expect("same dimension"));
    }

    // A constructive pair of geodesics for a non-diagonal pair.
    let q = PointN::from_ints(&[1, 0, 0]);
    let (straight, detour) = witness_two_geodesics(&origin, &q).expect("non-diagonal pair");
    println!("\ntwo geodesics from O to {q}:");
    for path in [&straight, &detour] {
        print!(" ");
        for v in path.vertices() {
            print!(" {v}");
        }
        println!();
    }

    println!();
    for dim in 2..=4 {
        println!(
            "nu in dimension {dim}: {}",
            nu_ambient(dim).expect("dimension at least 2")
        );
    }

    let sphere = SphereSpec::new(PointN::from_ints(&[1, 2, 3]), int(2)).expect("radius > 0");
    println!("\nunique-geodesic points of the radius-2 sphere at (1, 2, 3):");
    for corner in unique_geodesic_points(&sphere) {
        println!("  {corner}");
    }
}
