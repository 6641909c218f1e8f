//! Command implementations behind the `linfty` binary.
//!
//! Each command returns a [`CommandResult`] whose payload is plain JSON;
//! the binary prints payloads to stdout and keeps human-readable messages on
//! stderr. Input problems exit with code 2, I/O problems with code 3.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::isometry::{canonical_class, isometric, orbit};
use crate::metric::{
    chebyshev_distance, parse_scalar, polyline_length, scalar_to_string, PointN, Polyline, Scalar,
};
use crate::plane::{
    cross_section, nu_in_plane, section_edge_lengths, tau_in_plane, Plane, SectionShape,
};
use crate::sector::{
    in_sector, nu_ambient, sector_signature, tau, witness_two_geodesics, witnessing_sector, Sector,
};
use crate::svg::section_svg;

/// Successful command output: a JSON payload plus provenance notes for
/// results that rest on derived extensions rather than proven cases.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub status: &'static str,
    pub payload: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: "ok",
            payload,
            notes: Vec::new(),
        }
    }

    fn with_notes(payload: Value, notes: Vec<String>) -> Self {
        CommandResult {
            status: "ok",
            payload,
            notes,
        }
    }
}

/// Command failure, split by exit code: bad input (2) or I/O trouble (3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Io(m) => m,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "status": "error", "error": self.message() })
    }
}

impl From<crate::Error> for CliError {
    fn from(err: crate::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

pub type CliResult = std::result::Result<CommandResult, CliError>;

/// Parses an `integer` or `num/den` command-line token.
pub fn parse_token(token: &str) -> std::result::Result<Scalar, CliError> {
    parse_scalar(token).map_err(|e| CliError::Input(e.to_string()))
}

/// Parses a whole point from tokens.
pub fn parse_point(tokens: &[String]) -> std::result::Result<PointN, CliError> {
    let coords = tokens
        .iter()
        .map(|t| parse_token(t))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    PointN::new(coords).map_err(CliError::from)
}

/// Parses `"a,b,c"` or `"a,b,c,d"` into a plane (missing `d` means 0).
pub fn parse_plane_spec(spec: &str) -> std::result::Result<Plane, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(CliError::Input(format!(
            "plane spec needs 3 or 4 comma-separated values, got {:?}",
            spec
        )));
    }
    let mut values = parts
        .iter()
        .map(|t| parse_token(t))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if values.len() == 3 {
        values.push(Scalar::from_integer(0.into()));
    }
    let d = values.pop().expect("four values");
    let c = values.pop().expect("three values");
    let b = values.pop().expect("two values");
    let a = values.pop().expect("one value");
    Plane::new(a, b, c, d).map_err(CliError::from)
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn shape_name(shape: SectionShape) -> &'static str {
    match shape {
        SectionShape::Tetragon => "tetragon",
        SectionShape::Hexagon => "hexagon",
    }
}

/// `classify a b c d`: triangle test, canonical class, in-plane nu, shape.
pub fn cmd_classify(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> CliResult {
    let plane = Plane::new(a, b, c, d)?;
    let class = canonical_class(&plane);
    let nu = nu_in_plane(&plane)?;
    let shape = if plane.triangle_test() {
        SectionShape::Hexagon
    } else {
        SectionShape::Tetragon
    };
    Ok(CommandResult::ok(json!({
        "plane": to_value(&plane),
        "triangle_test": plane.triangle_test(),
        "class": to_value(&class),
        "nu": nu,
        "shape": shape_name(shape),
    })))
}

/// `section a b c --radius r [--svg path]`: the cross-section polygon, its
/// edge lengths, and optionally a rendered figure.
pub fn cmd_section(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    radius: Scalar,
    svg_path: Option<&Path>,
) -> CliResult {
    let plane = Plane::new(a, b, c, Scalar::from_integer(0.into()))?;
    let section = cross_section(&plane, &radius)?;
    let lengths: Vec<String> = section_edge_lengths(&section)
        .iter()
        .map(scalar_to_string)
        .collect();
    let mut payload = json!({
        "plane": to_value(&plane),
        "shape": shape_name(section.shape()),
        "radius": scalar_to_string(section.radius()),
        "vertices": to_value(&section.vertices()),
        "edge_lengths": lengths,
    });
    if let Some(path) = svg_path {
        let rendered = section_svg(&plane, &section);
        std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        payload["svg"] = json!(path.display().to_string());
    }
    Ok(CommandResult::ok(payload))
}

/// `orbit a b c`: orbit members and stabilizer under the cube group.
pub fn cmd_orbit(a: Scalar, b: Scalar, c: Scalar) -> CliResult {
    let plane = Plane::new(a, b, c, Scalar::from_integer(0.into()))?;
    let orb = orbit(&plane)?;
    Ok(CommandResult::ok(json!({
        "plane": to_value(&plane),
        "orbit_size": orb.size(),
        "members": to_value(&orb.members()),
        "stabilizer_size": orb.stabilizer().len(),
        "stabilizer": to_value(&orb.stabilizer()),
    })))
}

/// `isometric a b c d a' b' c' d'`: the isometry decision plus both classes.
pub fn cmd_isometric(first: [Scalar; 4], second: [Scalar; 4]) -> CliResult {
    let [a, b, c, d] = first;
    let [a2, b2, c2, d2] = second;
    let p1 = Plane::new(a, b, c, d)?;
    let p2 = Plane::new(a2, b2, c2, d2)?;
    Ok(CommandResult::ok(json!({
        "isometric": isometric(&p1, &p2),
        "plane1": to_value(&p1),
        "plane2": to_value(&p2),
        "class1": to_value(&canonical_class(&p1)),
        "class2": to_value(&canonical_class(&p2)),
    })))
}

fn derived_dimension_note(dim: usize) -> Option<String> {
    (dim >= 4).then(|| {
        format!(
            "dimension {dim} >= 4: the all-differences-equal rule is a derived \
             extension of the proven dimension 2 and 3 cases"
        )
    })
}

/// `tau p -- q` or `tau --plane a,b,c[,d] p -- q`.
pub fn cmd_tau(plane: Option<&Plane>, p: &PointN, q: &PointN) -> CliResult {
    match plane {
        None => {
            let count = tau(p, q)?;
            let notes = derived_dimension_note(p.dim()).into_iter().collect();
            Ok(CommandResult::with_notes(
                json!({
                    "tau": count.as_str(),
                    "p": to_value(p),
                    "q": to_value(q),
                }),
                notes,
            ))
        }
        Some(plane) => {
            let count = tau_in_plane(plane, p, q)?;
            let mut notes = Vec::new();
            if !plane.triangle_test() {
                notes.push(
                    "in-plane geodesic counting on tetragon planes is a derived \
                     extension via the flat chart"
                        .to_string(),
                );
            }
            Ok(CommandResult::with_notes(
                json!({
                    "tau": count.as_str(),
                    "plane": to_value(plane),
                    "p": to_value(p),
                    "q": to_value(q),
                }),
                notes,
            ))
        }
    }
}

/// `nu --ambient n` or `nu --plane a,b,c[,d]`.
pub fn cmd_nu(ambient: Option<usize>, plane: Option<&Plane>) -> CliResult {
    match (ambient, plane) {
        (Some(n), None) => {
            let nu = nu_ambient(n)?;
            let notes = derived_dimension_note(n).into_iter().collect();
            Ok(CommandResult::with_notes(
                json!({ "nu": nu, "dimension": n }),
                notes,
            ))
        }
        (None, Some(plane)) => {
            let nu = nu_in_plane(plane)?;
            Ok(CommandResult::ok(json!({
                "nu": nu,
                "plane": to_value(plane),
            })))
        }
        _ => Err(CliError::Input(
            "nu needs exactly one of --ambient or --plane".to_string(),
        )),
    }
}

/// `witness p -- q`: two distinct geodesics for a non-diagonal pair.
pub fn cmd_witness(p: &PointN, q: &PointN) -> CliResult {
    let (straight, detour) = witness_two_geodesics(p, q)?;
    Ok(CommandResult::ok(json!({
        "p": to_value(p),
        "q": to_value(q),
        "geodesics": [to_value(&straight), to_value(&detour)],
    })))
}

/// `geodesic-check file.json`: runs the sector criterion on a stored
/// polyline, reporting the witnessing sector or a concrete violation.
pub fn cmd_geodesic_check(path_file: &Path) -> CliResult {
    let text = std::fs::read_to_string(path_file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path_file.display())))?;
    let path: Polyline = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("invalid polyline JSON: {e}")))?;
    check_polyline(&path)
}

/// The body of `geodesic-check`, reusable on an already-parsed polyline.
pub fn check_polyline(path: &Polyline) -> CliResult {
    let length = polyline_length(path);
    let endpoint_distance = chebyshev_distance(path.first(), path.last())?;
    let mut payload = json!({
        "length": scalar_to_string(&length),
        "endpoint_distance": scalar_to_string(&endpoint_distance),
    });
    match witnessing_sector(path) {
        Some(sector) => {
            payload["is_geodesic"] = json!(true);
            payload["witnessing_sector"] = to_value(&sector);
        }
        None => {
            payload["is_geodesic"] = json!(false);
            payload["violation"] = first_violation(path);
        }
    }
    Ok(CommandResult::ok(payload))
}

/// For a failed check: the first endpoint sector and the first consecutive
/// pair that leaves it.
fn first_violation(path: &Polyline) -> Value {
    let signature =
        sector_signature(path.first(), path.last()).expect("polyline dimensions agree");
    let sector: Sector = signature.sectors[0];
    for (index, (a, b)) in path.segments().enumerate() {
        if !in_sector(a, b, sector).expect("axis in range") {
            return json!({
                "sector": to_value(&sector),
                "from_index": index,
                "from": to_value(a),
                "to": to_value(b),
            });
        }
    }
    // Unreachable for non-geodesics: some pair violates every endpoint sector.
    json!(null)
}
