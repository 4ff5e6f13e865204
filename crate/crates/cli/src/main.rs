use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cwcert::certify::{
    certify_diamond_2p1p3, certify_diamond_3p1p2, certify_diamond_p2p3, classify_pair, verify_certificate, Certificate,
    CertifyError, Status,
};
use cwcert::constructions::{
    gi_reduce, unbounded_family, verify_family_observations, verify_gi_profile, wall, CheckReport, PartitionedGraph,
};
use cwcert::graph::{contains_induced, from_graph6, parse_spec, read_edge_list, to_graph6, Graph};
use cwcert::kexpr::{clique_width_exact_within, print_kexpr, verify_expression, K_LIMIT, SOLVER_LIMIT};
use cwcert::recognition::{generate_free, GENERATE_LIMIT};

/// Largest vertex count accepted by `clique-width --unsafe-size`.
const UNSAFE_SOLVER_LIMIT: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "cwcert",
    version,
    about = "Clique-width tools for diamond-free graph classes"
)]
struct Cli {
    /// Graph file format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Edgelist)]
    format: Format,
    /// Output path; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    /// (diamond, 3P1+P2)-free
    I,
    /// (diamond, 2P1+P3)-free
    Ii,
    /// (diamond, P2+P3)-free
    Iii,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Wall,
    Family,
    GiReduce,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exit 0 if the graph has none of the given induced subgraphs.
    CheckFree {
        graph: PathBuf,
        #[arg(long = "spec", required = true)]
        specs: Vec<String>,
    },
    /// Exact clique-width with a verified expression.
    CliqueWidth {
        graph: PathBuf,
        #[arg(long, default_value_t = K_LIMIT)]
        kmax: usize,
        #[arg(long)]
        unsafe_size: bool,
    },
    /// Writes a self-verified boundedness certificate.
    Certify {
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// Builds a wall, the unbounded family member or the reduction of a graph.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// Height for `wall` and `family`.
        #[arg(long)]
        height: Option<usize>,
        /// Input graph for `gi-reduce`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Bounded or Unbounded for (co(sP1+P2), tP1+P2)-free graphs.
    ClassifyPair { s: usize, t: usize },
    /// Replays a certificate against a graph.
    VerifyCertificate { graph: PathBuf, certificate: PathBuf },
    /// Random graphs free of the given graphs, one graph6 line each.
    GenerateFree {
        #[arg(long)]
        n: usize,
        #[arg(long = "spec", required = true)]
        specs: Vec<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::CheckFree { graph, specs } => check_free(&read_graph(graph, cli.format)?, specs),
        Command::CliqueWidth {
            graph,
            kmax,
            unsafe_size,
        } => clique_width(cli, &read_graph(graph, cli.format)?, *kmax, *unsafe_size),
        Command::Certify { graph, class } => certify(cli, &read_graph(graph, cli.format)?, *class),
        Command::Construct { kind, height, input } => construct(cli, *kind, *height, input.as_deref()),
        Command::ClassifyPair { s, t } => {
            let status = match classify_pair(*s, *t).status {
                Status::Bounded => "Bounded",
                Status::Unbounded => "Unbounded",
            };
            emit(cli, &format!("{status}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCertificate { graph, certificate } => {
            let g = read_graph(graph, cli.format)?;
            let text = read_text(certificate)?;
            let cert = Certificate::from_json(&text).context("reading certificate")?;
            let report = verify_certificate(&g, &cert);
            for f in &report.failures {
                println!("FAIL {f}");
            }
            if report.ok() {
                println!("ok: {} steps, {} leaves", report.steps_checked, report.leaves_checked);
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::GenerateFree { n, specs, count, seed } => {
            if *n > GENERATE_LIMIT {
                bail!("n = {n} exceeds the generator limit {GENERATE_LIMIT}");
            }
            let forbidden = realize_all(specs)?;
            let graphs = generate_free(*n, &forbidden, *count, *seed)?;
            let mut out = String::new();
            for g in &graphs {
                out.push_str(&to_graph6(g)?);
                out.push('\n');
            }
            emit(cli, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path, format: Format) -> Result<Graph> {
    let text = read_text(path)?;
    let g = match format {
        Format::Edgelist => read_edge_list(&text),
        Format::Graph6 => from_graph6(text.trim()),
    };
    g.with_context(|| format!("parsing {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn realize_all(specs: &[String]) -> Result<Vec<Graph>> {
    specs
        .iter()
        .map(|s| {
            parse_spec(s)
                .and_then(|h| h.realize())
                .with_context(|| format!("bad spec {s:?}"))
        })
        .collect()
}

fn check_free(g: &Graph, specs: &[String]) -> Result<ExitCode> {
    let patterns = realize_all(specs)?;
    for (spec, h) in specs.iter().zip(&patterns) {
        if let Some(e) = contains_induced(g, h) {
            let ids: Vec<String> = e.map.iter().map(|v| v.to_string()).collect();
            println!("contains {spec}: {}", ids.join(" "));
            return Ok(ExitCode::from(1));
        }
    }
    println!("free");
    Ok(ExitCode::SUCCESS)
}

fn clique_width(cli: &Cli, g: &Graph, kmax: usize, unsafe_size: bool) -> Result<ExitCode> {
    let limit = if unsafe_size { UNSAFE_SOLVER_LIMIT } else { SOLVER_LIMIT };
    if g.n() > limit {
        bail!(
            "graph has {} vertices; the solver limit is {limit}{}",
            g.n(),
            if unsafe_size {
                ""
            } else {
                " (pass --unsafe-size to raise it)"
            }
        );
    }
    if g.is_empty() {
        println!("0");
        return Ok(ExitCode::SUCCESS);
    }
    match clique_width_exact_within(g, kmax, limit)? {
        Some((k, e)) => {
            if !verify_expression(&e, g) {
                bail!("solver returned an expression that does not build the graph");
            }
            match &cli.out {
                Some(_) => {
                    emit(cli, &format!("{}\n", print_kexpr(&e)))?;
                    println!("{k}");
                }
                None => println!("{k}\n{}", print_kexpr(&e)),
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("clique-width exceeds {kmax}");
            Ok(ExitCode::from(1))
        }
    }
}

fn certify(cli: &Cli, g: &Graph, class: Class) -> Result<ExitCode> {
    let result = match class {
        Class::I => certify_diamond_3p1p2(g),
        Class::Ii => certify_diamond_2p1p3(g),
        Class::Iii => certify_diamond_p2p3(g),
    };
    let cert = match result {
        Ok(c) => c,
        Err(CertifyError::NotInClass { forbidden, witness }) => {
            let ids: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            println!("not in class: contains {forbidden}: {}", ids.join(" "));
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    let report = verify_certificate(g, &cert);
    if !report.ok() {
        for f in &report.failures {
            eprintln!("FAIL {f}");
        }
        bail!("certificate failed self-verification");
    }
    emit(cli, &cert.to_json())?;
    if cli.out.is_some() {
        println!(
            "verified: {} steps, {} leaves",
            report.steps_checked, report.leaves_checked
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn construct(cli: &Cli, kind: Kind, height: Option<usize>, input: Option<&Path>) -> Result<ExitCode> {
    let height = || height.context("--height is required");
    let (pg, report) = match kind {
        Kind::Wall => {
            let w = wall(height()?)?;
            let (a, c) = w.bipartition().expect("walls are bipartite");
            let parts = [("A".to_string(), a), ("C".to_string(), c)].into_iter().collect();
            (PartitionedGraph::new(w, parts)?, None)
        }
        Kind::Family => {
            let pg = unbounded_family(height()?)?;
            let r = verify_family_observations(&pg);
            (pg, Some(r))
        }
        Kind::GiReduce => {
            let path = input.context("--input is required")?;
            let pg = gi_reduce(&read_graph(path, cli.format)?);
            let r = verify_gi_profile(&pg);
            (pg, Some(r))
        }
    };
    emit(cli, &pg.to_text()?)?;
    let mut lines = vec![format!("vertices {} edges {}", pg.graph.n(), pg.graph.m())];
    lines.extend(pg.parts.iter().map(|(k, v)| format!("part {k} {}", v.len())));
    if let Some(r) = &report {
        lines.extend(report_lines(r));
    }
    let text = lines.join("\n");
    if cli.out.is_some() {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    Ok(if report.is_none_or(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn report_lines(r: &CheckReport) -> Vec<String> {
    let mut out: Vec<String> = r
        .checks
        .iter()
        .map(|(name, pass)| format!("check {name} {}", if *pass { "pass" } else { "FAIL" }))
        .collect();
    out.extend(r.failures.iter().map(|f| format!("  {f}")));
    out
}
