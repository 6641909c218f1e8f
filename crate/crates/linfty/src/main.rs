//! Thin command-line front end. All substance lives in the library; this
//! file only parses arguments, dispatches, and prints JSON.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use linfty::cli::{
    cmd_classify, cmd_geodesic_check, cmd_isometric, cmd_nu, cmd_orbit, cmd_section, cmd_tau,
    cmd_witness, parse_plane_spec, parse_point, parse_token, CliError, CliResult,
};

#[derive(Parser)]
#[command(
    name = "linfty",
    version,
    about = "Geodesics and plane isometry classes of the max metric, in exact arithmetic",
    after_help = "Scalars are integers or num/den fractions (e.g. 1/2). \
                  JSON goes to stdout, messages to stderr; exit codes: 0 ok, 2 input, 3 I/O."
)]
struct Cli {
    /// Pretty-print JSON output with this many spaces of indentation.
    #[arg(long, global = true, value_name = "N")]
    json_indent: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the plane ax+by+cz=d up to isometry.
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Cross-section of the cube [-r, r]^3 with the plane ax+by+cz=0.
    Section {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Cube half-width (the metric disc radius).
        #[arg(long, default_value = "1")]
        radius: String,
        /// Also render the polygon to this SVG file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Orbit and stabilizer of ax+by+cz=0 under the 48 cube isometries.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Decide whether two planes (eight coefficients) are isometric.
    Isometric {
        #[arg(allow_hyphen_values = true, num_args = 8, value_name = "COEFF")]
        coeffs: Vec<String>,
    },
    /// Number of geodesics between two points: `tau p... -- q...`.
    /// With --plane, counts geodesics inside that plane.
    Tau {
        /// Count inside the plane "a,b,c" or "a,b,c,d" instead of ambient space.
        #[arg(long, value_name = "SPEC")]
        plane: Option<String>,
        #[arg(allow_hyphen_values = true, required = true, value_terminator = "--")]
        p: Vec<String>,
        #[arg(allow_hyphen_values = true, required = true)]
        q: Vec<String>,
    },
    /// Unique-geodesic point count on metric spheres.
    Nu {
        /// Ambient space dimension.
        #[arg(long, value_name = "DIM")]
        ambient: Option<usize>,
        /// Inside the plane "a,b,c" or "a,b,c,d".
        #[arg(long, value_name = "SPEC")]
        plane: Option<String>,
    },
    /// Two distinct geodesics for a non-diagonal pair: `witness p... -- q...`.
    Witness {
        #[arg(allow_hyphen_values = true, required = true, value_terminator = "--")]
        p: Vec<String>,
        #[arg(allow_hyphen_values = true, required = true)]
        q: Vec<String>,
    },
    /// Run the geodesic criterion on a polyline JSON file.
    GeodesicCheck {
        path_file: PathBuf,
    },
}

fn dispatch(command: &Command) -> CliResult {
    match command {
        Command::Classify { a, b, c, d } => cmd_classify(
            parse_token(a)?,
            parse_token(b)?,
            parse_token(c)?,
            parse_token(d)?,
        ),
        Command::Section {
            a,
            b,
            c,
            radius,
            svg,
        } => cmd_section(
            parse_token(a)?,
            parse_token(b)?,
            parse_token(c)?,
            parse_token(radius)?,
            svg.as_deref(),
        ),
        Command::Orbit { a, b, c } => {
            cmd_orbit(parse_token(a)?, parse_token(b)?, parse_token(c)?)
        }
        Command::Isometric { coeffs } => {
            if coeffs.len() != 8 {
                return Err(CliError::Input(
                    "isometric takes exactly 8 coefficients".to_string(),
                ));
            }
            let mut values = coeffs
                .iter()
                .map(|t| parse_token(t))
                .collect::<Result<Vec<_>, _>>()?;
            let second: Vec<_> = values.split_off(4);
            let first: [_; 4] = values.try_into().expect("four values");
            let second: [_; 4] = second.try_into().expect("four values");
            cmd_isometric(first, second)
        }
        Command::Tau { plane, p, q } => {
            let plane = plane.as_deref().map(parse_plane_spec).transpose()?;
            cmd_tau(plane.as_ref(), &parse_point(p)?, &parse_point(q)?)
        }
        Command::Nu { ambient, plane } => {
            let plane = plane.as_deref().map(parse_plane_spec).transpose()?;
            cmd_nu(*ambient, plane.as_ref())
        }
        Command::Witness { p, q } => cmd_witness(&parse_point(p)?, &parse_point(q)?),
        Command::GeodesicCheck { path_file } => cmd_geodesic_check(path_file),
    }
}

fn print_json(value: &serde_json::Value, indent: Option<usize>) {
    let rendered = match indent {
        Some(n) if n > 0 => {
            let pad = " ".repeat(n);
            let formatter = serde_json::ser::PrettyFormatter::with_indent(pad.as_bytes());
            let mut out = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut out, formatter);
            serde::Serialize::serialize(value, &mut ser).expect("JSON value serializes");
            String::from_utf8(out).expect("serde_json emits UTF-8")
        }
        _ => value.to_string(),
    };
    println!("{rendered}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(result) => {
            let value = serde_json::to_value(&result).expect("command results serialize");
            print_json(&value, cli.json_indent);
            ExitCode::SUCCESS
        }
        Err(err) => {
            print_json(&err.to_json(), cli.json_indent);
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
