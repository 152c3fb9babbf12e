//! Command-line surface for improper-core.
//!
//! Exit codes: 0 success, 1 internal disagreement between the layout search
//! and the endpoint oracle, 2 usage or input error, 3 not an interval graph,
//! 4 capacity exceeded.

pub mod render;
pub mod report;

use std::io::Write;

use clap::{Parser, Subcommand};
use improper::canon::canonical_permutation;
use improper::census::{
    enumerate_minimal_forbidden, is_minimal_forbidden, verify_theorem6, with_jobs,
};
use improper::figures::{fig1, fig2, Figure};
use improper::impropriety::impropriety_oracle;
use improper::interval::{enumerate_clique_orders, realize, Realization};
use improper::structure::{blocking_candidates, Analysis};
use improper::{parse_graph6, to_graph6, Error, Graph};

use render::{Drawing, Format, Role};
use report::{census_summary, formula_json, side_json, verdict_json, Report};

#[derive(Parser, Debug)]
#[command(name = "improper", version, about = "Impropriety of interval graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is an interval graph.
    Recognize { graph6: String },
    /// Exact impropriety with a witness representation.
    Imp {
        graph6: String,
        /// Cross-check against the endpoint-order oracle (at most 6 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Basepoints and side-component classification.
    Classify {
        graph6: String,
        /// Classify around this vertex (input labeling) instead of every basepoint.
        #[arg(long)]
        basepoint: Option<usize>,
    },
    /// Minimal forbidden verdict for the p-improper class.
    Forbidden {
        graph6: String,
        #[arg(long)]
        p: usize,
    },
    /// Minimal forbidden graphs of the p-improper class up to max-n vertices.
    Census {
        #[arg(long)]
        p: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write graph6 lines and the summary to this file; stdout gets the summary.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Compare the two-unconfined count of the p-improper class with 3*2^C(p+1,2)-2.
    #[command(name = "verify-thm6")]
    VerifyThm6 {
        #[arg(long)]
        p: usize,
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
    },
    /// Draw a witness representation, or one of the built-in figures.
    Render {
        #[arg(required_unless_present = "figure", conflicts_with = "figure")]
        graph6: Option<String>,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// `fig1` or `fig2`: the transcribed drawings.
        #[arg(long)]
        figure: Option<String>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInterval => 3,
            Error::Capacity { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Input graph and its canonical relabeling; reports describe the latter.
struct Input {
    text: String,
    canonical: Graph,
    canonical_text: String,
    perm: Vec<usize>,
}

fn read_graph(text: &str) -> Result<Input, Failure> {
    let g = parse_graph6(text)?;
    let perm = canonical_permutation(&g);
    let canonical = g.relabel(&perm);
    Ok(Input {
        text: text.to_owned(),
        canonical_text: to_graph6(&canonical),
        canonical,
        perm,
    })
}

fn analysis_report(input: &Input) -> Result<(Report, Analysis), Failure> {
    let a = Analysis::new(&input.canonical)?;
    let mut report = Report::new(&input.text, &input.canonical_text, &input.canonical, true);
    report.fill_impropriety(&a);
    Ok((report, a))
}

fn recognize(text: &str) -> Result<String, Failure> {
    let input = read_graph(text)?;
    let first = enumerate_clique_orders(&input.canonical)?.next();
    let mut report = Report::new(
        &input.text,
        &input.canonical_text,
        &input.canonical,
        first.is_some(),
    );
    report.representation = first.map(|l| report::representation(&realize(&l)));
    Ok(report.to_json())
}

fn imp(text: &str, oracle: bool) -> Result<String, Failure> {
    let input = read_graph(text)?;
    let (mut report, a) = analysis_report(&input)?;
    if oracle {
        let slow = impropriety_oracle(&input.canonical)?;
        if slow != a.impropriety().imp {
            return Err(Failure {
                code: 1,
                message: format!(
                    "oracle disagreement on {}: layout search {}, endpoint oracle {slow}",
                    input.text,
                    a.impropriety().imp
                ),
            });
        }
        report.oracle_imp = Some(slow);
    }
    Ok(report.to_json())
}

fn classify(text: &str, basepoint: Option<usize>) -> Result<String, Failure> {
    let input = read_graph(text)?;
    let (mut report, a) = analysis_report(&input)?;
    report.fill_basepoints(&a);
    let sides = match basepoint {
        _ if input.canonical.n() < 2 => Vec::new(),
        Some(v) => {
            input.canonical.check_vertex(v)?;
            a.side_reports(input.perm[v], &a.impropriety().witness)?
        }
        None => a.basepoint_reports()?,
    };
    report.sides = Some(sides.iter().map(side_json).collect());
    Ok(report.to_json())
}

fn forbidden(text: &str, p: usize) -> Result<String, Failure> {
    let input = read_graph(text)?;
    let (mut report, a) = analysis_report(&input)?;
    report.fill_basepoints(&a);
    let verdict = is_minimal_forbidden(&input.canonical, p)?;
    report.sides = Some(verdict.sides.iter().map(side_json).collect());
    report.verdict = Some(verdict_json(&verdict));
    Ok(report.to_json())
}

fn census(
    p: usize,
    max_n: usize,
    jobs: Option<usize>,
    out: Option<&std::path::Path>,
) -> Result<String, Failure> {
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let record = with_jobs(jobs, || enumerate_minimal_forbidden(p, max_n))?;
    let summary = serde_json::to_string(&census_summary(&record)).expect("summary serializes");
    let mut body = String::new();
    for g6 in record.found() {
        body.push_str(&g6);
        body.push('\n');
    }
    body.push_str(&summary);
    body.push('\n');
    match out {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(summary)
        }
        None => Ok(body.trim_end().to_owned()),
    }
}

fn verify(p: usize, max_n: usize) -> Result<String, Failure> {
    let r = verify_theorem6(p, max_n)?;
    Ok(serde_json::to_string(&formula_json(&r)).expect("report serializes"))
}

fn figure_drawing(f: &Figure) -> (Vec<String>, Vec<Role>) {
    let z = f.id("z");
    let layout = f.drawn_layout();
    let names = f.names.iter().map(|s| s.to_string()).collect();
    (names, roles(&f.graph, &layout, Some(z)))
}

fn roles(g: &Graph, layout: &improper::interval::CliqueLayout, z: Option<usize>) -> Vec<Role> {
    let mut roles = vec![Role::Plain; g.n()];
    if let Some(z) = z {
        roles[z] = Role::Basepoint;
        for v in layout.nested_in(z) {
            roles[v] = Role::Contributory;
        }
        for v in blocking_candidates(g, layout, z) {
            roles[v] = Role::Blocking;
        }
    }
    roles
}

fn render_command(
    graph6: Option<&str>,
    format: Format,
    figure: Option<&str>,
) -> Result<String, Failure> {
    let (names, realization, roles): (Vec<String>, Realization, Vec<Role>) = match (graph6, figure)
    {
        (_, Some(name)) => {
            let f = match name {
                "fig1" => fig1(),
                "fig2" => fig2(),
                other => {
                    return Err(usage(format!(
                        "unknown figure {other:?} (expected fig1 or fig2)"
                    )))
                }
            };
            let (names, roles) = figure_drawing(&f);
            (names, f.realization.clone(), roles)
        }
        (Some(text), None) => {
            let g = parse_graph6(text)?;
            let a = Analysis::new(&g)?;
            let witness = &a.impropriety().witness;
            let b = a.basepoints();
            let z = (b.value > 0).then(|| b.vertices.first()).flatten();
            let names = (0..g.n()).map(|v| v.to_string()).collect();
            (names, realize(witness), roles(&g, witness, z))
        }
        (None, None) => return Err(usage("render needs a graph6 string or --figure")),
    };
    let drawing = Drawing {
        names,
        realization: &realization,
        roles,
    };
    Ok(render::render(&drawing, format).trim_end().to_owned())
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Recognize { graph6 } => recognize(&graph6),
        Command::Imp { graph6, oracle } => imp(&graph6, oracle),
        Command::Classify { graph6, basepoint } => classify(&graph6, basepoint),
        Command::Forbidden { graph6, p } => forbidden(&graph6, p),
        Command::Census {
            p,
            max_n,
            jobs,
            out,
        } => census(p, max_n, jobs, out.as_deref()),
        Command::VerifyThm6 { p, max_n } => verify(p, max_n),
        Command::Render {
            graph6,
            format,
            figure,
        } => render_command(graph6.as_deref(), format, figure.as_deref()),
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = writeln!(stdout, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
