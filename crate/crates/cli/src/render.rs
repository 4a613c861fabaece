//! Text, JSON and TSV renderings of analysis results. All output is
//! deterministic: identical inputs give byte-identical strings.

use std::fmt::Write;

use serde_json::{json, Value};

use partact_core::{GlobalAction, Globalization, PartialAction, PartialOrbitReport, ValidationReport};

use crate::run::Format;
use crate::spec::object;

fn label_set(labels: &[&str]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn group_set(action: &PartialAction, indices: &[usize]) -> String {
    label_set(&indices.iter().map(|&g| action.group().label(g)).collect::<Vec<_>>())
}

fn carrier_set(action: &PartialAction, indices: &[usize]) -> String {
    label_set(&indices.iter().map(|&x| action.carrier().label(x)).collect::<Vec<_>>())
}

pub fn render_validation(report: &ValidationReport, format: Format) -> String {
    match format {
        Format::Text => format!("{report}\n"),
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "witness": c.witness}))
                .collect();
            pretty(object([
                ("checks".to_string(), Value::Array(checks)),
                ("passed".to_string(), json!(report.passed())),
            ]))
        }
        Format::Tsv => {
            let mut out = String::new();
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{}\t{}\t{}", c.name, status, c.witness).unwrap();
            }
            writeln!(out, "result\t{}\t", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    }
}

/// One row of the `orbits` command: a transversal representative with its
/// full per-point analysis and the predicted size of its global orbit.
pub struct OrbitRow {
    pub report: PartialOrbitReport,
    pub predicted: usize,
}

pub fn render_orbits(action: &PartialAction, rows: &[OrbitRow], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            let reps: Vec<&str> =
                rows.iter().map(|r| action.carrier().label(r.report.base)).collect();
            writeln!(out, "transversal: {}", reps.join(" ")).unwrap();
            for row in rows {
                let r = &row.report;
                writeln!(out, "orbit of {}:", action.carrier().label(r.base)).unwrap();
                writeln!(out, "  partial orbit: {}", carrier_set(action, &r.orbit)).unwrap();
                writeln!(out, "  stabilizer: {}", group_set(action, r.stabilizer.members())).unwrap();
                writeln!(out, "  upper set: {}", group_set(action, &r.upper)).unwrap();
                writeln!(out, "  upper complement: {}", group_set(action, &r.upper_complement))
                    .unwrap();
                let cosets: Vec<String> =
                    r.cosets.iter().map(|c| group_set(action, &c.members)).collect();
                writeln!(out, "  cosets: {}", cosets.join(" | ")).unwrap();
                writeln!(out, "  predicted global orbit size: {}", row.predicted).unwrap();
            }
            out
        }
        Format::Json => {
            let orbit_values: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let r = &row.report;
                    let glabels = |list: &[usize]| -> Value {
                        Value::Array(
                            list.iter().map(|&g| json!(action.group().label(g))).collect(),
                        )
                    };
                    let xlabels = |list: &[usize]| -> Value {
                        Value::Array(
                            list.iter().map(|&x| json!(action.carrier().label(x))).collect(),
                        )
                    };
                    object([
                        ("base".to_string(), json!(action.carrier().label(r.base))),
                        ("orbit".to_string(), xlabels(&r.orbit)),
                        ("stabilizer".to_string(), glabels(r.stabilizer.members())),
                        ("upper".to_string(), glabels(&r.upper)),
                        ("upper_complement".to_string(), glabels(&r.upper_complement)),
                        (
                            "cosets".to_string(),
                            Value::Array(r.cosets.iter().map(|c| glabels(&c.members)).collect()),
                        ),
                        ("predicted_global_orbit_size".to_string(), json!(row.predicted)),
                    ])
                })
                .collect();
            let transversal: Vec<Value> = rows
                .iter()
                .map(|r| json!(action.carrier().label(r.report.base)))
                .collect();
            pretty(object([
                ("transversal".to_string(), Value::Array(transversal)),
                ("orbits".to_string(), Value::Array(orbit_values)),
            ]))
        }
        Format::Tsv => {
            let mut out = String::new();
            writeln!(
                out,
                "base\torbit\tstabilizer\tupper\tupper_complement\tcosets\tpredicted_global_orbit_size"
            )
            .unwrap();
            for row in rows {
                let r = &row.report;
                let gjoin = |list: &[usize]| {
                    list.iter().map(|&g| action.group().label(g)).collect::<Vec<_>>().join(" ")
                };
                let xjoin = |list: &[usize]| {
                    list.iter().map(|&x| action.carrier().label(x)).collect::<Vec<_>>().join(" ")
                };
                let cosets: Vec<String> = r.cosets.iter().map(|c| gjoin(&c.members)).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    action.carrier().label(r.base),
                    xjoin(&r.orbit),
                    gjoin(r.stabilizer.members()),
                    gjoin(&r.upper),
                    gjoin(&r.upper_complement),
                    cosets.join("|"),
                    row.predicted
                )
                .unwrap();
            }
            out
        }
    }
}

pub fn render_globalization(
    action: &PartialAction,
    glob: &Globalization,
    format: Format,
) -> String {
    let global = &glob.action;
    let group = global.group();
    let carrier = global.carrier();
    let orbits = global.orbits();
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "T: {} elements", carrier.size()).unwrap();
            let sizes: Vec<String> = orbits.iter().map(|o| o.len().to_string()).collect();
            writeln!(out, "orbit sizes: {}", sizes.join(", ")).unwrap();
            writeln!(out, "orbits:").unwrap();
            for orbit in &orbits {
                let labels: Vec<&str> = orbit.iter().map(|&t| carrier.label(t)).collect();
                writeln!(out, "  {}", label_set(&labels)).unwrap();
            }
            let embedding: Vec<String> = (0..action.carrier().size())
                .map(|x| {
                    format!("{} -> {}", action.carrier().label(x), carrier.label(glob.embedding[x]))
                })
                .collect();
            writeln!(out, "embedding: {}", embedding.join(", ")).unwrap();
            let header: Vec<&str> = group.labels().iter().map(String::as_str).collect();
            writeln!(out, "element | {}", header.join(" | ")).unwrap();
            for t in 0..carrier.size() {
                let row: Vec<&str> =
                    group.elements().map(|g| carrier.label(global.apply(g, t))).collect();
                writeln!(out, "{} | {}", carrier.label(t), row.join(" | ")).unwrap();
            }
            out
        }
        Format::Json => pretty(globalization_json(action, glob)),
        Format::Tsv => {
            let mut out = String::new();
            writeln!(out, "element\t{}", group.labels().join("\t")).unwrap();
            for t in 0..carrier.size() {
                let row: Vec<&str> =
                    group.elements().map(|g| carrier.label(global.apply(g, t))).collect();
                writeln!(out, "{}\t{}", carrier.label(t), row.join("\t")).unwrap();
            }
            out
        }
    }
}

/// The machine-readable globalization schema; `verify --global` can
/// re-ingest exactly this shape.
pub fn globalization_json(action: &PartialAction, glob: &Globalization) -> Value {
    let global = &glob.action;
    let carrier = global.carrier();
    let elements: Vec<Value> = carrier.labels().iter().map(|l| json!(l)).collect();
    let embedding = object((0..action.carrier().size()).map(|x| {
        (
            action.carrier().label(x).to_string(),
            json!(carrier.label(glob.embedding[x])),
        )
    }));
    let perms = object(global.group().elements().map(|g| {
        (
            global.group().label(g).to_string(),
            object((0..carrier.size()).map(|t| {
                (carrier.label(t).to_string(), json!(carrier.label(global.apply(g, t))))
            })),
        )
    }));
    let orbits: Vec<Value> = global
        .orbits()
        .iter()
        .map(|o| Value::Array(o.iter().map(|&t| json!(carrier.label(t))).collect()))
        .collect();
    object([
        ("elements".to_string(), Value::Array(elements)),
        ("embedding".to_string(), embedding),
        ("perms".to_string(), perms),
        ("orbits".to_string(), Value::Array(orbits)),
    ])
}

pub fn render_burnside(global: &GlobalAction, count: usize, format: Format) -> String {
    let group = global.group();
    let fixed: Vec<(String, usize)> = group
        .elements()
        .map(|g| (group.label(g).to_string(), global.fixed_points(g).len()))
        .collect();
    let sum: usize = fixed.iter().map(|(_, n)| n).sum();
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "fixed points per group element:").unwrap();
            for (label, n) in &fixed {
                writeln!(out, "  {label}: {n}").unwrap();
            }
            writeln!(out, "sum: {sum}").unwrap();
            writeln!(out, "group order: {}", group.order()).unwrap();
            writeln!(out, "orbit count: {count}").unwrap();
            out
        }
        Format::Json => pretty(object([
            (
                "fixed_points".to_string(),
                object(fixed.iter().map(|(l, n)| (l.clone(), json!(n)))),
            ),
            ("sum".to_string(), json!(sum)),
            ("group_order".to_string(), json!(group.order())),
            ("orbit_count".to_string(), json!(count)),
        ])),
        Format::Tsv => {
            let mut out = String::new();
            for (label, n) in &fixed {
                writeln!(out, "fixed\t{label}\t{n}").unwrap();
            }
            writeln!(out, "sum\t\t{sum}").unwrap();
            writeln!(out, "group_order\t\t{}", group.order()).unwrap();
            writeln!(out, "orbit_count\t\t{count}").unwrap();
            out
        }
    }
}

fn pretty(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("JSON rendering cannot fail");
    text.push('\n');
    text
}
