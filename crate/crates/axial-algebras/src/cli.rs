//! Command-line front end: file ingestion, catalog access, verification
//! pipelines, and JSON/text report emission.
//!
//! Exit codes: `0` on success, `1` when a verdict named in `--expect`
//! is false or missing, `2` on usage or input errors. Reports are
//! deterministic for a fixed input; `--json` switches from the
//! human-readable rendering to machine output of the same data.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::axial::{
    axis_closure, peirce_decompose, seress_check, verify_fusion, FusionTable, DEFAULT_CLOSURE_CAP,
};
use crate::bilinear::{definiteness, radical, solve_associative_forms};
use crate::dihedral::{catalog, classify_pair, spin_factor_delta, CatalogName};
use crate::error::{Error, Result};
use crate::formats::{algebra_from_json, algebra_to_json, geometry_from_json};
use crate::geometry::{builtin_space, BuiltinSpace, PartialTripleSystem, PlaneClass};
use crate::groups::{analyze_closure, DEFAULT_GROUP_CAP};
use crate::linalg::Matrix;
use crate::matsuo::{build, canonical_form, MatsuoParameters};
use crate::scalar::{Field, Scalar};

#[derive(Parser)]
#[command(
    name = "axial",
    version,
    about = "Exact workbench for axial algebras of Jordan type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect partial triple systems.
    Geometry {
        #[command(subcommand)]
        cmd: GeometryCmd,
    },
    /// Build and verify Matsuo algebras.
    Matsuo {
        #[command(subcommand)]
        cmd: MatsuoCmd,
    },
    /// Verify and classify algebras from files.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Miyamoto involution groups.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Construct a catalog algebra.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct Common {
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Comma-separated report keys (dotted paths) that must be true;
    /// a false or missing verdict exits with status 1.
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// Validate a system and run the Steiner and Fischer checks.
    Check {
        /// Builtin name (fano, ag23, dualaffine2, symtriangles:<n>,
        /// singleline, disconnected2b, fivepoint) or a geometry JSON file.
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate and classify the planes of a system.
    Planes {
        input: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum MatsuoCmd {
    /// Build the Matsuo algebra of a space and optionally run the full
    /// verification pipeline.
    Build {
        /// Builtin name or geometry JSON file.
        #[arg(long)]
        space: String,
        /// Jordan parameter, e.g. 1/4.
        #[arg(long)]
        eta: String,
        /// Field tag: Q or Fp:<prime>.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Run fusion, form, and Miyamoto analyses and report them.
        #[arg(long)]
        report: bool,
        /// Write the algebra JSON to this path.
        #[arg(short, long)]
        out: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Verify the designated axes against a fusion table.
    Verify {
        file: String,
        /// Fusion table: jordan (needs eta) or assoc.
        #[arg(long, default_value = "jordan")]
        table: String,
        /// Override for the eta recorded in the file.
        #[arg(long)]
        eta: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Classify the subalgebra generated by two designated axes.
    ClassifyPair {
        file: String,
        /// Index of the first axis.
        #[arg(long = "a")]
        a: usize,
        /// Index of the second axis.
        #[arg(long = "b")]
        b: usize,
        #[arg(long)]
        eta: String,
        #[command(flatten)]
        common: Common,
    },
    /// Solve for associative forms; report radical and definiteness.
    Form {
        file: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Close the axis set under Miyamoto involutions and analyze the group.
    Miyamoto {
        file: String,
        /// Cap on the axis closure size.
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        cap: usize,
        #[arg(long)]
        eta: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct CatalogArgs {
    /// 1A, 2B, 3C (with --eta), 3Cstar, Cl0, Cl00, or spin (with --delta).
    name: String,
    #[arg(long)]
    eta: Option<String>,
    /// Gram off-diagonal for the standard two-dimensional spin factor.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, default_value = "Q")]
    field: String,
    /// Classify the marked pair of designated axes with these two indices.
    #[arg(long = "classify-pair", num_args = 2, value_names = ["I", "J"])]
    classify_pair: Option<Vec<usize>>,
    /// Write the algebra JSON to this path.
    #[arg(short, long)]
    out: Option<String>,
    #[command(flatten)]
    common: Common,
}

/// Entry point used by the `axial` binary and by tests. `args` excludes the
/// program name.
pub fn run<I>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator,
    I::Item: Into<String>,
{
    let argv = std::iter::once("axial".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let _ = write!(out, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (report, common) = match dispatch(cli.command) {
        Ok(pair) => pair,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return 2;
        }
    };
    emit(&report, &common, out)
}

fn emit(report: &Value, common: &Common, out: &mut dyn Write) -> i32 {
    if common.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(report).expect("serializable")
        );
    } else {
        let mut text = String::new();
        render_text(report, 0, &mut text);
        let _ = write!(out, "{text}");
    }
    if let Some(expect) = &common.expect {
        for key in expect.split(',').map(str::trim).filter(|k| !k.is_empty()) {
            if lookup_path(report, key) != Some(&Value::Bool(true)) {
                let _ = writeln!(out, "expectation failed: {key}");
                return 1;
            }
        }
    }
    0
}

fn lookup_path<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    let mut cur = v;
    for part in path.split('.') {
        cur = cur.get(part)?;
    }
    Some(cur)
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}-\n"));
                            render_text(item, indent + 1, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(val))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(cmd: Command) -> Result<(Value, Common)> {
    match cmd {
        Command::Geometry { cmd } => match cmd {
            GeometryCmd::Check { input, common } => Ok((geometry_check(&input)?, common)),
            GeometryCmd::Planes { input, common } => Ok((geometry_planes(&input)?, common)),
        },
        Command::Matsuo { cmd } => match cmd {
            MatsuoCmd::Build {
                space,
                eta,
                field,
                report,
                out,
                common,
            } => Ok((
                matsuo_build(&space, &eta, &field, report, out.as_deref())?,
                common,
            )),
        },
        Command::Algebra { cmd } => match cmd {
            AlgebraCmd::Verify {
                file,
                table,
                eta,
                common,
            } => Ok((algebra_verify(&file, &table, eta.as_deref())?, common)),
            AlgebraCmd::ClassifyPair {
                file,
                a,
                b,
                eta,
                common,
            } => Ok((algebra_classify_pair(&file, a, b, &eta)?, common)),
            AlgebraCmd::Form { file, common } => Ok((algebra_form(&file)?, common)),
        },
        Command::Group { cmd } => match cmd {
            GroupCmd::Miyamoto {
                file,
                cap,
                eta,
                common,
            } => Ok((group_miyamoto(&file, cap, eta.as_deref())?, common)),
        },
        Command::Catalog(args) => {
            let report = catalog_cmd(&args)?;
            Ok((report, args.common))
        }
    }
}

/// Resolves a geometry argument: builtin names take precedence over file
/// paths, and an argument that is both is an input error.
fn resolve_space(input: &str) -> Result<PartialTripleSystem> {
    let builtin = BuiltinSpace::parse(input);
    let is_file = Path::new(input).exists();
    match (builtin, is_file) {
        (Some(_), true) => Err(Error::BadParameters(format!(
            "{input:?} names both a builtin space and an existing file"
        ))),
        (Some(b), false) => builtin_space(&b),
        (None, true) => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::FileFormat(format!("{input}: {e}")))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Error::FileFormat(format!("{input}: {e}")))?;
            geometry_from_json(&v)
        }
        (None, false) => Err(Error::BadParameters(format!(
            "{input:?} is neither a builtin space nor an existing file"
        ))),
    }
}

fn load_algebra(path: &str) -> Result<(Algebra, Option<Scalar>)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::FileFormat(format!("{path}: {e}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::FileFormat(format!("{path}: {e}")))?;
    algebra_from_json(&v)
}

fn geometry_check(input: &str) -> Result<Value> {
    let mut report = Map::new();
    report.insert("command".into(), json!("geometry check"));
    report.insert("input".into(), json!(input));
    let space = match resolve_space(input) {
        Ok(space) => space,
        // axiom violations are verdicts, not usage errors
        Err(
            err @ (Error::BadLineSize(_) | Error::DuplicateLine(_) | Error::PairOnTwoLines(_, _)),
        ) => {
            report.insert("valid".into(), json!(false));
            report.insert("defect".into(), json!(err.to_string()));
            return Ok(Value::Object(report));
        }
        Err(e) => return Err(e),
    };
    report.insert("valid".into(), json!(true));
    report.insert("points".into(), json!(space.point_count()));
    report.insert("lines".into(), json!(space.line_count()));
    report.insert("steiner".into(), json!(space.is_steiner()));
    report.insert(
        "components".into(),
        json!(space.connected_components().len()),
    );
    let fischer = space.fischer_check();
    report.insert("fischer".into(), json!(fischer.is_fischer));
    match fischer.bad_plane {
        Some(plane) => {
            report.insert(
                "bad_plane".into(),
                json!({
                    "points": plane.points.len(),
                    "lines": plane.line_count,
                    "class": plane.classification.render(),
                }),
            );
        }
        None => {
            report.insert("bad_plane".into(), Value::Null);
        }
    }
    Ok(Value::Object(report))
}

fn geometry_planes(input: &str) -> Result<Value> {
    let space = resolve_space(input)?;
    let planes: Vec<Value> = space
        .planes()
        .into_iter()
        .map(|p| {
            json!({
                "points": p.points.len(),
                "lines": p.line_count,
                "class": p.classification.render(),
                "point_labels": p.points.iter().map(|&i| space.point_label(i)).collect::<Vec<_>>(),
                "allowed": matches!(
                    p.classification,
                    PlaneClass::DualAffineOrder2 | PlaneClass::AffineOrder3
                ),
            })
        })
        .collect();
    Ok(json!({
        "command": "geometry planes",
        "input": input,
        "plane_count": planes.len(),
        "planes": planes,
        "fischer": space.fischer_check().is_fischer,
    }))
}

fn gram_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            Value::Array(
                (0..m.cols())
                    .map(|c| Value::String(m.at(r, c).render()))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

/// Per-axis fusion/Seress verification; shared by `algebra verify` and
/// `matsuo build --report` so the two emit byte-identical verdict objects.
fn verify_report(a: &Algebra, table: &FusionTable, table_name: &str) -> Value {
    let mut axes = Vec::new();
    let mut all_ok = true;
    for k in 0..a.axis_count() {
        let axis = a.axis(k);
        let mut entry = Map::new();
        entry.insert("index".into(), json!(k));
        match peirce_decompose(a, &axis, table.eigenvalues()) {
            Ok(pd) => {
                let mut dims = Map::new();
                for (l, s) in table.eigenvalues().iter().zip(pd.dims()) {
                    dims.insert(l.render(), json!(s));
                }
                entry.insert("dims".into(), Value::Object(dims));
                entry.insert("primitive".into(), json!(pd.is_primitive()));
                let fusion = verify_fusion(a, &pd, table).expect("eigenvalues match the table");
                entry.insert("fusion_ok".into(), json!(fusion.ok));
                let violations: Vec<Value> = fusion
                    .violations
                    .iter()
                    .map(|v| {
                        json!({
                            "cell": format!("{},{}", v.lambda.render(), v.mu.render()),
                            "witness": v.witness.coords().iter().map(Scalar::render).collect::<Vec<_>>(),
                            "only_strict_zero_rule": v.only_strict_zero_rule,
                        })
                    })
                    .collect();
                entry.insert("violations".into(), Value::Array(violations));
                let seress = seress_check(a, &pd).expect("validated decomposition");
                entry.insert("seress_ok".into(), json!(seress.ok));
                all_ok &= fusion.ok;
            }
            Err(e) => {
                entry.insert("error".into(), json!(e.to_string()));
                all_ok = false;
            }
        }
        axes.push(Value::Object(entry));
    }
    json!({
        "table": table_name,
        "axes": axes,
        "all_ok": all_ok,
    })
}

fn matsuo_build(
    space_arg: &str,
    eta_arg: &str,
    field_arg: &str,
    with_report: bool,
    out_path: Option<&str>,
) -> Result<Value> {
    let space = resolve_space(space_arg)?;
    let field = Field::parse(field_arg)?;
    let eta = Scalar::parse(eta_arg, field)?;
    let params = MatsuoParameters::new(eta.clone(), field)?;
    let a = build(&space, &params)?;
    if let Some(path) = out_path {
        let v = algebra_to_json(&a, Some(&eta));
        std::fs::write(
            path,
            serde_json::to_string_pretty(&v).expect("serializable"),
        )
        .map_err(|e| Error::FileFormat(format!("{path}: {e}")))?;
    }
    let mut report = Map::new();
    report.insert("command".into(), json!("matsuo build"));
    report.insert(
        "space".into(),
        json!({
            "input": space_arg,
            "points": space.point_count(),
            "lines": space.line_count(),
            "steiner": space.is_steiner(),
            "fischer": space.fischer_check().is_fischer,
        }),
    );
    report.insert("eta".into(), json!(eta.render()));
    report.insert("field".into(), json!(field.to_string()));
    report.insert("dim".into(), json!(a.dim()));
    if !with_report {
        return Ok(Value::Object(report));
    }

    let table = FusionTable::jordan(&eta)?;
    let verify = verify_report(&a, &table, &format!("jordan({})", eta.render()));
    report.insert("jordan".into(), verify["all_ok"].clone());
    report.insert("verify".into(), verify);

    match canonical_form(&a, &space, &params)? {
        Some(form) => {
            report.insert("form".into(), json!("present"));
            report.insert("gram".into(), gram_to_json(form.gram()));
            report.insert("radical_dim".into(), json!(radical(&form)?.dim()));
            let definite = match definiteness(&form) {
                Ok(d) => d.to_string(),
                Err(Error::UnsupportedField(f)) => format!("unavailable over {f}"),
                Err(e) => return Err(e),
            };
            report.insert("definite".into(), json!(definite));
            if field == Field::Rationals {
                // the Gram matrix is I + (eta/2) D; it is positive
                // (semi)definite exactly when the collinearity adjacency D
                // has minimal eigenvalue greater than (or equal to) this
                let threshold = Scalar::from_int(-2, field)
                    .checked_div(&eta)
                    .expect("eta is nonzero");
                report.insert(
                    "adjacency_eigenvalue_threshold".into(),
                    json!(threshold.render()),
                );
            }
        }
        None => {
            report.insert("form".into(), json!("none"));
        }
    }

    let closure = axis_closure(&a, &eta, DEFAULT_CLOSURE_CAP)?;
    let mut miyamoto = Map::new();
    miyamoto.insert("complete".into(), json!(closure.complete));
    miyamoto.insert("axes".into(), json!(closure.axes.len()));
    if closure.complete {
        let analysis = analyze_closure(closure, DEFAULT_GROUP_CAP)?;
        miyamoto.insert("order".into(), json!(analysis.group_order));
        miyamoto.insert("three_transpositions".into(), json!(analysis.check.ok));
        let mut histogram = Map::new();
        for (order, count) in &analysis.check.histogram {
            histogram.insert(order.to_string(), json!(count));
        }
        miyamoto.insert("product_orders".into(), Value::Object(histogram));
        if let Some(fs) = analysis.fischer_space {
            miyamoto.insert("fischer_points".into(), json!(fs.point_count()));
            miyamoto.insert("fischer_lines".into(), json!(fs.line_count()));
        }
    }
    report.insert("miyamoto".into(), Value::Object(miyamoto));
    Ok(Value::Object(report))
}

fn algebra_verify(path: &str, table_arg: &str, eta_arg: Option<&str>) -> Result<Value> {
    let (a, file_eta) = load_algebra(path)?;
    let field = a.field();
    let (table, name) = match table_arg {
        "assoc" => (FusionTable::associative(field), "assoc".to_string()),
        "jordan" => {
            let eta = match eta_arg {
                Some(s) => Scalar::parse(s, field)?,
                None => file_eta.clone().ok_or_else(|| {
                    Error::BadParameters(
                        "the jordan table needs --eta (the file records none)".into(),
                    )
                })?,
            };
            (
                FusionTable::jordan(&eta)?,
                format!("jordan({})", eta.render()),
            )
        }
        other => {
            return Err(Error::BadParameters(format!(
                "unknown table {other:?}; use jordan or assoc"
            )))
        }
    };
    let verify = verify_report(&a, &table, &name);
    Ok(json!({
        "command": "algebra verify",
        "input": path,
        "dim": a.dim(),
        "field": field.to_string(),
        "jordan": verify["all_ok"],
        "verify": verify,
    }))
}

fn algebra_classify_pair(path: &str, i: usize, j: usize, eta_arg: &str) -> Result<Value> {
    let (a, _) = load_algebra(path)?;
    let eta = Scalar::parse(eta_arg, a.field())?;
    if i >= a.axis_count() || j >= a.axis_count() {
        return Err(Error::BadParameters(format!(
            "axis indices must be below {}",
            a.axis_count()
        )));
    }
    let class = classify_pair(&a, &a.axis(i), &a.axis(j), &eta)?;
    Ok(json!({
        "command": "algebra classify-pair",
        "input": path,
        "a": i,
        "b": j,
        "eta": eta.render(),
        "class": class.label.render(),
        "dim": class.dim,
        "phi": class.phi.render(),
        "pi": class.pi.render(),
        "coincidences": class.coincidences.iter().map(|l| l.render()).collect::<Vec<_>>(),
    }))
}

fn algebra_form(path: &str) -> Result<Value> {
    let (a, _) = load_algebra(path)?;
    let forms = solve_associative_forms(&a);
    let mut report = Map::new();
    report.insert("command".into(), json!("algebra form"));
    report.insert("input".into(), json!(path));
    report.insert("solution_dim".into(), json!(forms.len()));
    report.insert(
        "form".into(),
        json!(if forms.is_empty() { "none" } else { "present" }),
    );
    if let Some(form) = forms.first() {
        report.insert("gram".into(), gram_to_json(form.gram()));
        report.insert("radical_dim".into(), json!(radical(form)?.dim()));
        let definite = match definiteness(form) {
            Ok(d) => d.to_string(),
            Err(Error::UnsupportedField(f)) => format!("unavailable over {f}"),
            Err(e) => return Err(e),
        };
        report.insert("definite".into(), json!(definite));
    }
    Ok(Value::Object(report))
}

fn group_miyamoto(path: &str, cap: usize, eta_arg: Option<&str>) -> Result<Value> {
    let (a, file_eta) = load_algebra(path)?;
    let eta = match eta_arg {
        Some(s) => Scalar::parse(s, a.field())?,
        None => file_eta.ok_or_else(|| {
            Error::BadParameters("no eta recorded in the file; pass --eta".into())
        })?,
    };
    let closure = axis_closure(&a, &eta, cap)?;
    let mut report = Map::new();
    report.insert("command".into(), json!("group miyamoto"));
    report.insert("input".into(), json!(path));
    report.insert("eta".into(), json!(eta.render()));
    report.insert("cap".into(), json!(cap));
    report.insert("complete".into(), json!(closure.complete));
    report.insert("axes".into(), json!(closure.axes.len()));
    if closure.complete {
        let analysis = analyze_closure(closure, DEFAULT_GROUP_CAP)?;
        report.insert("order".into(), json!(analysis.group_order));
        report.insert("three_transpositions".into(), json!(analysis.check.ok));
        report.insert("bijective_tau".into(), json!(analysis.action.bijective_tau));
        report.insert("trivial_axes".into(), json!(analysis.action.trivial_axes));
        let mut histogram = Map::new();
        for (order, count) in &analysis.check.histogram {
            histogram.insert(order.to_string(), json!(count));
        }
        report.insert("product_orders".into(), Value::Object(histogram));
        if let Some(fs) = analysis.fischer_space {
            report.insert("fischer_points".into(), json!(fs.point_count()));
            report.insert("fischer_lines".into(), json!(fs.line_count()));
        }
    }
    Ok(Value::Object(report))
}

fn catalog_cmd(args: &CatalogArgs) -> Result<Value> {
    let field = Field::parse(&args.field)?;
    let parse_opt = |s: &Option<String>| -> Result<Option<Scalar>> {
        s.as_ref().map(|t| Scalar::parse(t, field)).transpose()
    };
    let eta_arg = parse_opt(&args.eta)?;
    let delta_arg = parse_opt(&args.delta)?;
    let lower = args.name.to_ascii_lowercase();
    let cat = match lower.as_str() {
        "1a" => catalog(&CatalogName::OneA, field)?,
        "2b" => catalog(&CatalogName::TwoB, field)?,
        "3c" => {
            let eta = eta_arg
                .clone()
                .ok_or_else(|| Error::BadParameters("3C needs --eta".into()))?;
            catalog(&CatalogName::ThreeC(eta), field)?
        }
        "3cstar" | "3c*" => catalog(&CatalogName::ThreeCStar, field)?,
        "cl0" => catalog(&CatalogName::Cl0, field)?,
        "cl00" => catalog(&CatalogName::Cl00, field)?,
        "spin" => {
            let delta = delta_arg
                .clone()
                .ok_or_else(|| Error::BadParameters("spin needs --delta".into()))?;
            spin_factor_delta(field, &delta)?
        }
        other => {
            return Err(Error::BadParameters(format!(
                "unknown catalog name {other:?}; use 1A, 2B, 3C, 3Cstar, Cl0, Cl00, or spin"
            )))
        }
    };
    if let Some(path) = &args.out {
        let v = algebra_to_json(&cat.algebra, cat.eta.as_ref());
        std::fs::write(
            path,
            serde_json::to_string_pretty(&v).expect("serializable"),
        )
        .map_err(|e| Error::FileFormat(format!("{path}: {e}")))?;
    }
    let mut report = Map::new();
    report.insert("command".into(), json!("catalog"));
    report.insert("name".into(), json!(args.name));
    report.insert("field".into(), json!(field.to_string()));
    report.insert("dim".into(), json!(cat.algebra.dim()));
    report.insert("axes".into(), json!(cat.algebra.axis_count()));
    match &cat.eta {
        Some(e) => report.insert("eta".into(), json!(e.render())),
        None => report.insert("eta".into(), json!("any")),
    };
    if let Some(pair) = &args.classify_pair {
        let (i, j) = (pair[0], pair[1]);
        if i >= cat.algebra.axis_count() || j >= cat.algebra.axis_count() {
            return Err(Error::BadParameters(format!(
                "axis indices must be below {}",
                cat.algebra.axis_count()
            )));
        }
        let eta = match (&cat.eta, &eta_arg) {
            (Some(e), _) => e.clone(),
            (None, Some(e)) => e.clone(),
            (None, None) => {
                return Err(Error::BadParameters(
                    "this catalog entry works at any eta; pass --eta to classify".into(),
                ))
            }
        };
        let class = classify_pair(
            &cat.algebra,
            &cat.algebra.axis(i),
            &cat.algebra.axis(j),
            &eta,
        )?;
        report.insert("class".into(), json!(class.label.render()));
        report.insert("pair_dim".into(), json!(class.dim));
        report.insert("phi".into(), json!(class.phi.render()));
        report.insert("pi".into(), json!(class.pi.render()));
        report.insert(
            "coincidences".into(),
            json!(class
                .coincidences
                .iter()
                .map(|l| l.render())
                .collect::<Vec<_>>()),
        );
    }
    Ok(Value::Object(report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(args.iter().map(|s| s.to_string()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn geometry_check_fano() {
        let (code, out) = run_capture(&["geometry", "check", "fano", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["valid"], json!(true));
        assert_eq!(v["steiner"], json!(true));
        assert_eq!(v["fischer"], json!(false));
        assert_eq!(v["bad_plane"]["points"], json!(7));
    }

    #[test]
    fn expectation_failures_exit_one() {
        let (code, _) = run_capture(&["geometry", "check", "fano", "--expect", "fischer"]);
        assert_eq!(code, 1);
        let (code, _) = run_capture(&["geometry", "check", "ag23", "--expect", "fischer,steiner"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn unknown_input_exits_two() {
        let (code, out) = run_capture(&["geometry", "check", "not-a-space"]);
        assert_eq!(code, 2);
        assert!(out.contains("error"));
    }

    #[test]
    fn catalog_classify_pair() {
        let (code, out) = run_capture(&[
            "catalog",
            "3C",
            "--eta",
            "1/32",
            "--classify-pair",
            "0",
            "1",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["class"], json!("3C(1/32)"));
        assert_eq!(v["pair_dim"], json!(3));
        assert_eq!(v["phi"], json!("1/64"));
        // pi = (1 - 1/32)(1/64) - 1/32 = -33/2048
        assert_eq!(v["pi"], json!("-33/2048"));
    }

    #[test]
    fn matsuo_report_carries_the_pipeline_verdicts() {
        let (code, out) = run_capture(&[
            "matsuo",
            "build",
            "--space",
            "dualaffine2",
            "--eta",
            "1/4",
            "--field",
            "Q",
            "--report",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], json!(6));
        assert_eq!(v["jordan"], json!(true));
        assert_eq!(v["form"], json!("present"));
        assert_eq!(v["definite"], json!("PositiveDefinite"));
        assert_eq!(v["miyamoto"]["order"], json!(24));
        assert_eq!(v["miyamoto"]["three_transpositions"], json!(true));
    }

    #[test]
    fn text_mode_renders_the_same_data() {
        let (code, out) = run_capture(&["catalog", "2B"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim: 2"));
    }
}
