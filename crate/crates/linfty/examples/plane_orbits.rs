//! Orbits of planes under the 48 cube isometries.
//!
//! Distinct, doubled, and tripled coefficients give orbits of 24, 12, and 4
//! planes; the orbit-stabilizer product is always 48.
//!
//! ```bash
//! cargo run -p linfty --example plane_orbits
//! ```

use linfty::isometry::{act, group_elements, orbit};
use linfty::plane::Plane;

fn main() {
    let group = group_elements();
    println!("group has {} elements; a few of them:", group.len());
    for g in group.iter().take(4) {
        println!("  {g}");
    }
    let g = &group[9];
    let plane = Plane::from_ints(2, 3, 4, 0);
    println!("\n{g} carries {plane} to {}", act(g, &plane).expect("d = 0"));

    for coeffs in [(2, 3, 4), (2, 2, 3), (1, 1, 1)] {
        let plane = Plane::from_ints(coeffs.0, coeffs.1, coeffs.2, 0);
        let orb = orbit(&plane).expect("d = 0");
        println!(
            "\norbit of {plane}: {} members, stabilizer of {}",
            orb.size(),
            orb.stabilizer().len()
        );
        for g in orb.stabilizer() {
            println!("  stabilized by {g}");
        }
    }
}
