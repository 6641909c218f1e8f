//! The sector criterion for geodesics of the max metric.
//!
//! A polyline is a geodesic exactly when a single sector contains every
//! step, equivalently when its length equals the distance between its
//! endpoints.
//!
//! ```bash
//! cargo run -p linfty --example geodesic_criterion
//! ```

use linfty::metric::{chebyshev_distance, polyline_length, scalar_to_string, Polyline};
use linfty::sector::{sector_signature, witnessing_sector};

fn main() {
    // Two paths between the same endpoints; only the first stays inside a
    // travelling sector.
    let paths = [
        Polyline::from_ints(&[&[-2, 1], &[0, 0], &[2, 1], &[4, -1]]),
        Polyline::from_ints(&[&[-2, 1], &[0, 2], &[2, 3], &[4, -1]]),
    ];
    for path in &paths {
        let length = polyline_length(path);
        let direct = chebyshev_distance(path.first(), path.last()).expect("same dimension");
        match witnessing_sector(path) {
            Some(sector) => println!(
                "geodesic (length {} = distance {}), witnessed by {sector}",
                scalar_to_string(&length),
                scalar_to_string(&direct),
            ),
            None => println!(
                "not a geodesic: length {} exceeds distance {}",
                scalar_to_string(&length),
                scalar_to_string(&direct),
            ),
        }
    }

    // Which sectors of the first vertex contain the last one?
    let path = &paths[0];
    let signature = sector_signature(path.first(), path.last()).expect("same dimension");
    print!("\nendpoint signature:");
    for s in &signature.sectors {
        print!(" {s}");
    }
    println!();
}
