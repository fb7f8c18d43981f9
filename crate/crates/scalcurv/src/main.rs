use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use scalcurv::manifest::ManifoldManifest;
use scalcurv::output::{polynomial_json, rational_json, report_json, to_json_string, Printer};
use scalcurv::{report, Catalog, CliError, Loader, Result};
use scalcurv_core::genera::{combined_polynomial, describe, evaluate_genus, Genus};
use scalcurv_core::invariants::{
    self, bp_order, component_family, relative_index, s_invariant, t_term, theorem04_value, tilde_s,
    MetricRepresentative, NFactor,
};
use scalcurv_core::manifolds::{self, validate_kreck_stolz_conditions, validate_ks_product, ValidationReport};

/// Exact Pontrjagin-number arithmetic and path-component invariants of
/// positive scalar curvature metrics.
#[derive(Parser)]
#[command(name = "scalcurv", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    machine: bool,

    /// Add a decimal approximation next to each exact value.
    #[arg(long, global = true)]
    approx: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Ahat,
    L,
    Combined,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenusArg {
    Ahat,
    L,
}

impl From<GenusArg> for Genus {
    fn from(g: GenusArg) -> Self {
        match g {
            GenusArg::Ahat => Genus::AHat,
            GenusArg::L => Genus::L,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorArg {
    #[value(name = "K3", alias = "k3")]
    K3,
    #[value(name = "Bott", alias = "bott")]
    Bott,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight-k polynomial Â_k, L_k or Â_k + a_k L_k.
    Coeffs { kind: PolyKind, k: u32 },
    /// Evaluate a genus on a manifold (path or catalog:NAME).
    Genus { genus: GenusArg, manifold: String },
    /// Characteristic data of a product manifold, as a manifest.
    Product {
        a: String,
        b: String,
        /// Assert psc on the product (a psc factor scaled small against the other).
        #[arg(long)]
        override_psc: bool,
    },
    /// Check the Kreck-Stolz conditions, or the product structure with --n.
    Validate {
        manifold: String,
        #[arg(long)]
        n: Option<String>,
    },
    /// Topological term t(W) of a cobordism manifest.
    #[command(name = "t-term")]
    TTerm { cobordism: PathBuf },
    /// Kreck-Stolz s-invariant of the boundary metric of a psc cobordism.
    S { cobordism: PathBuf },
    /// Extended invariant on (boundary of W) x N.
    #[command(name = "tilde-s")]
    TildeS {
        cobordism: PathBuf,
        #[arg(long)]
        n: String,
    },
    /// Relative index of two boundary metrics on the same M x N.
    #[command(name = "rel-index")]
    RelIndex {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        n: String,
    },
    /// Values on base # p blocks for p = 0..count.
    Family {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        block: PathBuf,
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Order of bP_{4n}.
    #[command(name = "bp-order")]
    BpOrder { n: u32 },
    /// Closed-form value for the metrics g_j on a homotopy (4n-1)-sphere times K3 or Bott.
    Thm04 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_enum)]
        factor: FactorArg,
    },
    /// List catalog entries.
    #[command(name = "catalog-list")]
    CatalogList,
    /// Run the reproduction checks and print a pass/fail table.
    Report { kind: ReportKind },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let printer = Printer { machine: cli.machine, approx: cli.approx };
    match run(cli.command, printer) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text: ensure_newline(text), code: 0 }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn representative(loader: &Loader, path: &std::path::Path) -> Result<MetricRepresentative> {
    let w = loader.cobordism(path)?;
    Ok(MetricRepresentative::from_cobordism(w)?)
}

fn validation_output(report: &ValidationReport, printer: Printer) -> Output {
    let text = if printer.machine {
        to_json_string(&report_json(report))
    } else {
        let mut lines = vec![if report.passed() { "pass".to_string() } else { "fail".to_string() }];
        lines.extend(report.failures.iter().map(|c| format!("failed: {}", c.description())));
        lines.extend(report.warnings.iter().map(|w| format!("warning: {}", w.description())));
        lines.join("\n")
    };
    Output { text: ensure_newline(text), code: if report.passed() { 0 } else { 1 } }
}

fn run(command: Command, printer: Printer) -> Result<Output> {
    let loader = Loader::new(Catalog::from_env()?);
    let single = |label: &str, value: &scalcurv_core::Rational| {
        if printer.machine {
            to_json_string(&json!({ label: rational_json(value) }))
        } else {
            printer.rational(value)
        }
    };

    let out = match command {
        Command::Coeffs { kind, k } => {
            if k == 0 {
                return Err(CliError::Usage("weight must be at least 1".into()));
            }
            let (name, poly) = match kind {
                PolyKind::Ahat => ("ahat", Genus::AHat.polynomial(k)),
                PolyKind::L => ("l", Genus::L.polynomial(k)),
                PolyKind::Combined => {
                    if k < 2 {
                        return Err(CliError::Usage("combined polynomial needs k >= 2".into()));
                    }
                    ("combined", combined_polynomial(k))
                }
            };
            if printer.machine {
                Output::ok(to_json_string(&polynomial_json(name, &poly)))
            } else if printer.approx {
                let lines: Vec<String> = poly
                    .terms()
                    .map(|(p, c)| format!("{}: {}", p.monomial(), printer.rational(c)))
                    .collect();
                Output::ok(lines.join("\n"))
            } else {
                Output::ok(describe(&poly).join("\n"))
            }
        }
        Command::Genus { genus, manifold } => {
            let m = loader.manifold(&manifold)?;
            let genus = Genus::from(genus);
            if m.dimension() % 4 != 0 {
                return Err(CliError::Core(scalcurv_core::Error::DimensionMismatch {
                    expected: (m.dimension() / 4 + 1) * 4,
                    actual: m.dimension(),
                }));
            }
            let value = evaluate_genus(&genus.polynomial(m.dimension() / 4), &m)?;
            Output::ok(single("value", &value))
        }
        Command::Product { a, b, override_psc } => {
            let (a, b) = (loader.manifold(&a)?, loader.manifold(&b)?);
            let mut x = manifolds::product(&a, &b);
            if override_psc {
                if !a.admits_psc() && !b.admits_psc() {
                    eprintln!("warning: --override-psc with no psc factor");
                }
                eprintln!("note: psc asserted on {}: c^2 g_M + g_N has psc for small c > 0", x.name());
                x = x.with_admits_psc(true);
            }
            let manifest = ManifoldManifest::from_data(&x);
            if printer.machine {
                Output::ok(serde_json::to_string_pretty(&manifest).expect("manifest serialises"))
            } else {
                let mut lines = vec![
                    format!("name: {}", x.name()),
                    format!("dimension: {}", x.dimension()),
                    format!("signature: {}", x.signature()),
                ];
                lines.extend(
                    x.pontrjagin_numbers()
                        .iter()
                        .map(|(p, v)| format!("{}: {}", p.monomial(), printer.rational(v))),
                );
                lines.push(format!("spin: {}", x.is_spin()));
                lines.push(format!("pontrjagin classes vanish: {}", x.rational_pontrjagin_classes_vanish()));
                lines.push(format!("admits psc: {}", x.admits_psc()));
                Output::ok(lines.join("\n"))
            }
        }
        Command::Validate { manifold, n } => {
            let m = loader.manifold(&manifold)?;
            let report = match n {
                Some(n) => validate_ks_product(&m, &loader.manifold(&n)?),
                None => validate_kreck_stolz_conditions(&m),
            };
            validation_output(&report, printer)
        }
        Command::TTerm { cobordism } => {
            let w = loader.cobordism(&cobordism)?;
            Output::ok(single("value", &t_term(&w)?))
        }
        Command::S { cobordism } => {
            let rep = representative(&loader, &cobordism)?;
            Output::ok(single("value", &s_invariant(&rep)?))
        }
        Command::TildeS { cobordism, n } => {
            let rep = representative(&loader, &cobordism)?;
            let v = tilde_s(&rep, &loader.manifold(&n)?)?;
            if printer.machine {
                Output::ok(to_json_string(&json!({
                    "value": rational_json(&v.value),
                    "ahat_factor": rational_json(&v.ahat_factor),
                    "t_term": rational_json(&v.t_term),
                })))
            } else {
                Output::ok(format!(
                    "{}\nahat(N): {}\nt(W): {}",
                    printer.rational(&v.value),
                    v.ahat_factor,
                    v.t_term
                ))
            }
        }
        Command::RelIndex { first, second, n } => {
            let (a, b) = (representative(&loader, &first)?, representative(&loader, &second)?);
            let ri = relative_index(&a, &b, &loader.manifold(&n)?)?;
            if !ri.is_integer {
                eprintln!("warning: relative index {} is not an integer; the data is not geometrically consistent", ri.value);
            }
            if printer.machine {
                Output::ok(to_json_string(&json!({
                    "value": rational_json(&ri.value),
                    "is_integer": ri.is_integer,
                })))
            } else {
                Output::ok(printer.rational(&ri.value))
            }
        }
        Command::Family { base, block, n, count } => {
            if count == 0 {
                return Err(CliError::Usage("count must be positive".into()));
            }
            let (base, block) = (representative(&loader, &base)?, representative(&loader, &block)?);
            let fam = component_family(&base, &block, &loader.manifold(&n)?, count)?;
            let values: Vec<_> = fam.into_iter().map(|v| v.value).collect();
            if printer.machine {
                Output::ok(to_json_string(&json!({
                    "values": values.iter().map(rational_json).collect::<Vec<_>>(),
                })))
            } else {
                Output::ok(printer.list(&values))
            }
        }
        Command::BpOrder { n } => {
            if n < 2 {
                return Err(CliError::Usage("bP_{4n} order needs n >= 2".into()));
            }
            let order = bp_order(n);
            if printer.machine {
                Output::ok(to_json_string(&json!({ "n": n, "order": order.to_string() })))
            } else {
                Output::ok(order.to_string())
            }
        }
        Command::Thm04 { n, j, q, factor } => {
            if n < 2 {
                return Err(CliError::Usage("n must be at least 2".into()));
            }
            let factor = match factor {
                FactorArg::K3 => NFactor::K3,
                FactorArg::Bott => NFactor::Bott,
            };
            let value = theorem04_value(n, j, q, factor);
            let built = invariants::theorem04_constructive(n, j, q, factor)?;
            if built != value {
                return Err(CliError::Usage(format!("closed form {value} disagrees with constructive {built}")));
            }
            Output::ok(single("value", &value))
        }
        Command::CatalogList => {
            let entries = loader.catalog.entries();
            if printer.machine {
                let list: Vec<_> = entries.iter().map(ManifoldManifest::from_data).collect();
                Output::ok(serde_json::to_string_pretty(&json!({
                    "entries": list,
                    "spheres": "S<n> for any n >= 1",
                }))
                .expect("manifest serialises"))
            } else {
                let mut lines: Vec<String> = entries
                    .iter()
                    .map(|m| format!("{}\tdim {}\tsignature {}", m.name(), m.dimension(), m.signature()))
                    .collect();
                lines.push("S<n>\tdim n\tsignature 0".to_string());
                Output::ok(lines.join("\n"))
            }
        }
        Command::Report { kind: ReportKind::Paper } => {
            let results = report::run_all();
            let all = results.iter().all(|r| r.passed());
            let text = if printer.machine {
                to_json_string(&json!({
                    "passed": all,
                    "criteria": results.iter().map(|r| json!({
                        "id": r.id,
                        "title": r.title,
                        "passed": r.passed(),
                        "detail": match &r.outcome { Ok(d) | Err(d) => d },
                    })).collect::<Vec<_>>(),
                }))
            } else {
                let mut lines: Vec<String> = results.iter().map(|r| r.line()).collect();
                lines.push(format!(
                    "{}/{} criteria passed",
                    results.iter().filter(|r| r.passed()).count(),
                    results.len()
                ));
                lines.join("\n")
            };
            Output { text: ensure_newline(text), code: if all { 0 } else { 1 } }
        }
    };
    Ok(out)
}
