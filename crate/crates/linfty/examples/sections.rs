//! Cut the unit cube with planes through the origin and print the resulting
//! metric disc boundaries, with SVG figures.
//!
//! ```bash
//! cargo run -p linfty --example sections
//! ```

use linfty::metric::{int, scalar_to_string};
use linfty::plane::{cross_section, section_edge_lengths, Plane};
use linfty::svg::section_svg;

fn main() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 3), (1, 1, 2), (0, 0, 1)] {
        let plane = Plane::from_ints(a, b, c, 0);
        let section = cross_section(&plane, &int(1)).expect("plane through origin");
        println!("{plane}");
        println!("  shape: {:?}", section.shape());
        for (vertex, length) in section
            .vertices()
            .iter()
            .zip(section_edge_lengths(&section))
        {
            println!("  vertex {vertex}, next edge length {}", scalar_to_string(&length));
        }

        let file = std::env::temp_dir().join(format!("linfty-section-{a}{b}{c}.svg"));
        std::fs::write(&file, section_svg(&plane, &section)).expect("temp dir is writable");
        println!("  figure: {}", file.display());
        println!();
    }
}
