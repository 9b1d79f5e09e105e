use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use chromzero::bounds::{
    comparison_table, complete_graph_bound, cstar_delta, cstar_graph, cstar_graph_series, round2,
    sokal_bound, verify_zero_free_with_tolerance, BoundReport,
};
use chromzero::chromatic::{chromatic_polynomial, DEFAULT_VERTEX_CAP};
use chromzero::graph::{neighborhood_profile, NeighborhoodProfile};
use chromzero::polymer::{
    check_fp_condition, hardcore_partition_capped, penrose_report, verify_cn_bound, FpStatus,
};
use chromzero::series::{profile_series, series_radius, sup_x_threshold};
use chromzero::Error;

use crate::output::{num, opt, Format, Rendered};
use crate::source::Source;
use crate::{BoundsArgs, SeriesArgs, VerifyArgs};

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(_) => EXIT_ERROR,
        }
    }
}

pub struct Outcome {
    pub rendered: Rendered,
    pub default_format: Format,
    /// Names and details of failed checks; empty means exit 0.
    pub failures: Vec<String>,
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn bounds(args: &BoundsArgs) -> Result<Outcome, CliError> {
    match args.source.resolve(true)? {
        Source::Delta(delta) => {
            let sokal = sokal_bound(delta)?;
            let star = cstar_delta(delta)?;
            let complete = complete_graph_bound(delta)?;
            let json = json!({
                "mode": "delta",
                "delta": delta.to_string(),
                "sokal": sokal.value,
                "sokal_argmin_a": sokal.argmin,
                "cstar_delta": star.value,
                "cstar_delta_argmin_x": star.argmin,
                "complete_graph": complete,
            });
            let csv = vec![
                vec!["delta".into(), "sokal".into(), "cstar_delta".into(), "complete_graph".into()],
                vec![delta.to_string(), num(sokal.value), num(star.value), num(complete)],
            ];
            let text = format!(
                "Δ = {delta}\nsokal            {}\ncstar_delta      {}\ncomplete_graph   {}\n",
                num(sokal.value),
                num(star.value),
                num(complete)
            );
            Ok(Outcome {
                rendered: Rendered { json, csv, text },
                default_format: Format::Json,
                failures: Vec::new(),
            })
        }
        Source::Graph { id, graph } => {
            let mut report = if graph.vertex_count() <= DEFAULT_VERTEX_CAP {
                verify_zero_free_with_tolerance(&graph, args.tol)?
            } else {
                cstar_graph(&graph)?
            }
            .with_graph_id(id);
            report.c_star_graph_series = match cstar_graph_series(&graph, args.order) {
                Ok(v) => Some(v),
                Err(Error::Inconclusive(why)) => {
                    eprintln!("note: series form inconclusive: {why}");
                    None
                }
                Err(e) => return Err(e.into()),
            };
            let mut failures = Vec::new();
            if report.max_root_modulus.is_some() && !report.zero_free_verified {
                failures.push(format!(
                    "zero-free: root of modulus {} outside the radius {}",
                    opt(report.max_root_modulus),
                    num(report.reference_bound())
                ));
            }
            let mut json = to_value(&report);
            json["mode"] = json!("graph");
            json["series_order"] = json!(args.order.to_string());
            Ok(Outcome {
                rendered: Rendered {
                    json,
                    csv: bound_csv(&report),
                    text: bound_text(&report),
                },
                default_format: Format::Json,
                failures,
            })
        }
    }
}

fn bound_csv(r: &BoundReport) -> Vec<Vec<String>> {
    let header = [
        "graph",
        "vertices",
        "edges",
        "delta",
        "c_sokal",
        "c_star_delta",
        "c_star_graph",
        "c_star_graph_series",
        "max_root_modulus",
        "zero_free_verified",
    ];
    vec![
        header.iter().map(|s| s.to_string()).collect(),
        vec![
            r.graph_id.clone(),
            r.vertices.to_string(),
            r.edges.to_string(),
            r.delta.to_string(),
            num(r.c_sokal),
            num(r.c_star_delta),
            opt(r.c_star_graph),
            opt(r.c_star_graph_series),
            opt(r.max_root_modulus),
            r.zero_free_verified.to_string(),
        ],
    ]
}

fn bound_text(r: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {} ({} vertices, {} edges, Δ = {})", r.graph_id, r.vertices, r.edges, r.delta);
    let _ = writeln!(s, "profile t = {:?}, t̃ = {:?}", r.profile.t, r.profile.t_tilde);
    let _ = writeln!(s, "C(Δ)        {}", num(r.c_sokal));
    let _ = writeln!(s, "C*(Δ)       {}", num(r.c_star_delta));
    match r.c_star_graph {
        Some(c) => {
            let _ = writeln!(s, "C*_G        {}", num(c));
        }
        None => {
            let _ = writeln!(s, "C*_G        (Δ = 1: degree-2 radius applies)");
        }
    }
    if let Some(c) = r.c_star_graph_series {
        let _ = writeln!(s, "C*_G series {}", num(c));
    }
    if let Some(m) = r.max_root_modulus {
        let _ = writeln!(s, "max |root|  {} (zero-free verified: {})", num(m), r.zero_free_verified);
    }
    s
}

pub fn table1() -> Result<Outcome, CliError> {
    let rows = comparison_table()?;
    let mut json_rows = Vec::new();
    let mut csv = vec![["delta", "sokal", "cstar_delta", "cstar_complete", "exact"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    let mut text = format!("{:<6}{:>10}{:>14}{:>16}{:>8}\n", "Δ", "sokal", "cstar_delta", "cstar_complete", "exact");
    for row in &rows {
        let cells = [row.sokal, row.cstar_delta, row.cstar_complete].map(round2);
        let (label, exact, suffix) = match row.delta {
            Some(d) => (d.to_string(), d.to_string(), ""),
            None => ("any".to_string(), "1".to_string(), "Δ"),
        };
        json_rows.push(json!({
            "delta": label,
            "multiple_of_delta": row.delta.is_none(),
            "sokal": cells[0],
            "cstar_delta": cells[1],
            "cstar_complete": cells[2],
            "exact": exact,
        }));
        let mut line = vec![label.clone()];
        line.extend(cells.iter().map(|c| format!("{c:.2}")));
        line.push(exact.clone());
        csv.push(line);
        let cell = |c: f64| format!("{c:.2}{suffix}");
        let exact_text = if suffix.is_empty() { exact } else { "Δ".into() };
        let _ = writeln!(
            text,
            "{:<6}{:>10}{:>14}{:>16}{:>8}",
            label,
            cell(cells[0]),
            cell(cells[1]),
            cell(cells[2]),
            exact_text
        );
    }
    Ok(Outcome {
        rendered: Rendered {
            json: json!({ "rows": json_rows }),
            csv,
            text,
        },
        default_format: Format::Csv,
        failures: Vec::new(),
    })
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

const DEFAULT_IDENTITY_POINTS: [i64; 4] = [2, 3, 5, 10];

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let Source::Graph { id, graph } = args.source.resolve(false)? else {
        unreachable!("bare --delta is rejected for verify")
    };
    if args.order < 2 {
        return Err(CliError::Usage("--order must be at least 2".into()));
    }
    let mut checks = Vec::new();

    // Penrose identity and tree chain, per component with an edge.
    let mut penrose = Vec::new();
    for comp in graph.components() {
        let part = graph.induced(comp);
        if part.vertex_count() < 2 {
            continue;
        }
        let r = penrose_report(&part)?;
        let n = part.vertex_count();
        checks.push(Check {
            name: "penrose-identity",
            passed: r.identity_holds(n),
            detail: format!(
                "S = {}, (−1)^(n−1)|P| = {} on {n} vertices",
                r.s_value,
                if n % 2 == 1 { r.penrose_count as i64 } else { -(r.penrose_count as i64) }
            ),
        });
        checks.push(Check {
            name: "tree-chain",
            passed: r.chain_holds(),
            detail: format!(
                "|S| = {} ≤ |P̄| = {} ≤ |T| = {}; |P| = {}",
                r.s_value.unsigned_abs(),
                r.weak_penrose_count,
                r.tree_count,
                r.penrose_count
            ),
        });
        penrose.push(r);
    }

    // q^|V| Ξ(q) = P(q), exactly.
    let points: Vec<BigRational> = match args.q {
        Some(q) => vec![BigRational::from_float(q)
            .ok_or_else(|| CliError::Usage(format!("--q must be finite, got {q}")))?],
        None => DEFAULT_IDENTITY_POINTS
            .iter()
            .map(|&q| BigRational::from_integer(BigInt::from(q)))
            .collect(),
    };
    let p = chromatic_polynomial(&graph)?;
    let mut mismatches = Vec::new();
    for q in &points {
        let xi = hardcore_partition_capped(&graph, q, args.source.max_vertices)?;
        let lhs = xi * q.pow(graph.vertex_count() as i32);
        let rhs = p.eval_rational(q);
        if lhs != rhs {
            mismatches.push(format!("q = {q}: {lhs} ≠ {rhs}"));
        }
    }
    checks.push(Check {
        name: "partition-identity",
        passed: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!(
                "q^|V|·Ξ(q) = P(q) at q = {}",
                points.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")
            )
        } else {
            mismatches.join("; ")
        },
    });

    let has_edges = graph.edge_count() > 0;
    let mut cn_bounds = Vec::new();
    let mut zero_free = None;
    let mut fp = None;
    if has_edges {
        let q = args.q.unwrap_or(1.0);
        for n in 2..=args.order.min(graph.vertex_count()) {
            cn_bounds.push(verify_cn_bound(&graph, n, q)?);
        }
        checks.push(Check {
            name: "activity-bound",
            passed: cn_bounds.iter().all(|r| r.holds),
            detail: cn_bounds
                .iter()
                .map(|r| format!("n={}: {} ≤ {}", r.n, r.lhs_scaled, r.tbar_n))
                .collect::<Vec<_>>()
                .join(", "),
        });

        let r = verify_zero_free_with_tolerance(&graph, args.tol)?.with_graph_id(id.clone());
        checks.push(Check {
            name: "zero-free",
            passed: r.zero_free_verified,
            detail: format!(
                "max |root| = {} < {} (worst residual {:.1e})",
                opt(r.max_root_modulus),
                num(r.reference_bound()),
                r.worst_root_residual.unwrap_or(f64::NAN)
            ),
        });
        zero_free = Some(r);

        if let (Some(q), Some(a)) = (args.q, args.a) {
            let cert = check_fp_condition(&graph, q, a, args.order)?;
            checks.push(Check {
                name: "fp-condition",
                passed: cert.status == FpStatus::Satisfied,
                detail: format!("{:?}: {}", cert.status, cert.reason).to_lowercase(),
            });
            fp = Some(cert);
        }
    } else if args.a.is_some() {
        return Err(Error::EdgelessProfile.into());
    }

    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    let json = json!({
        "graph": id,
        "passed": failures.is_empty(),
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "penrose": to_value(&penrose),
        "cn_bounds": to_value(&cn_bounds),
        "zero_free": to_value(&zero_free),
        "fp_condition": to_value(&fp),
    });
    let mut csv = vec![vec!["check".to_string(), "passed".into(), "detail".into()]];
    let mut text = format!("graph {id}\n");
    for c in &checks {
        csv.push(vec![c.name.into(), c.passed.to_string(), c.detail.clone()]);
        let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    Ok(Outcome {
        rendered: Rendered { json, csv, text },
        default_format: Format::Json,
        failures,
    })
}

pub fn series(args: &SeriesArgs) -> Result<Outcome, CliError> {
    if args.order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let (id, profile) = match args.source.resolve(true)? {
        Source::Delta(0) => return Err(Error::InvalidParameter("Δ must be ≥ 1".into()).into()),
        Source::Delta(d) => (format!("delta({d})"), NeighborhoodProfile::binomial(d)),
        Source::Graph { id, graph } => (id, neighborhood_profile(&graph)?),
    };
    let coeffs = profile_series(&profile, args.order)?;
    let radius = series_radius(&profile.z_tilde())?;
    let threshold = match args.b {
        Some(b) => Some(sup_x_threshold(b, &profile.z(), &profile.z_tilde())?),
        None => None,
    };
    let json = json!({
        "source": id,
        "profile": to_value(&profile),
        "order": args.order.to_string(),
        "coefficients": to_value(&coeffs),
        "radius": to_value(&radius),
        "threshold": to_value(&threshold),
    });
    let mut csv = vec![vec!["n".to_string(), "coefficient".into()]];
    let mut text = format!(
        "{id}: Z(u) = {}, Z̃(u) = {}\n",
        generating_poly(&profile.t),
        generating_poly(&profile.t_tilde)
    );
    for (i, c) in coeffs.coeffs().iter().enumerate() {
        csv.push(vec![(i + 1).to_string(), c.to_string()]);
        let _ = writeln!(text, "t_{} = {c}", i + 1);
    }
    let _ = writeln!(text, "R = {}", num(radius.r));
    if let Some(t) = &threshold {
        let _ = writeln!(text, "x*(b = {}) = {} (Z^-1(b) = {})", t.b, num(t.x_star), num(t.preimage));
    }
    Ok(Outcome {
        rendered: Rendered { json, csv, text },
        default_format: Format::Json,
        failures: Vec::new(),
    })
}

/// `1 + Σ c_k u^k`, skipping zero terms.
fn generating_poly(counts: &[u64]) -> String {
    let mut s = String::from("1");
    for (k, &c) in counts.iter().enumerate().filter(|(_, &c)| c > 0) {
        let k = k + 1;
        let coeff = if c == 1 { String::new() } else { c.to_string() };
        let power = if k == 1 { String::new() } else { format!("^{k}") };
        let _ = write!(s, " + {coeff}u{power}");
    }
    s
}
