use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pathhom::cofib::{check_cofibration, check_map_cofibration, codiagonal_factorization};
use pathhom::digraph::{generator_by_name, parse_graph, parse_map_json, pushout, EdgePolicy};
use pathhom::excision::{omega_pushout_dims, verify_excision, verify_les};
use pathhom::harness::{axiom_suite, random_digraph, InstanceSpec};
use pathhom::pathhom::{homology_with_generators, omega_boundary_matrix, HomologyTable, PathComplex, PathFamily};
use pathhom::{with_field, DiGraph, Error, Field, FieldChoice, GraphMap, VertexSubset};

#[derive(Parser)]
#[command(name = "pathhom", version, about = "Path homology of digraphs and checks of its cofibration structure")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Degrees below this are reported.
    #[arg(long, global = true, default_value_t = 5)]
    cutoff: usize,
    /// Coefficients: `q` or `p=<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Refuse to pick a random seed.
    #[arg(long, global = true)]
    ci: bool,
    /// Collapse repeated input edges instead of rejecting them.
    #[arg(long, global = true)]
    lenient: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

/// A graph file given positionally or with `--graph`; stdin when neither.
#[derive(Args)]
struct GraphInput {
    #[arg(value_name = "GRAPH")]
    path: Option<PathBuf>,
    #[arg(long = "graph", value_name = "FILE", conflicts_with = "path")]
    flag: Option<PathBuf>,
}

impl GraphInput {
    fn path(&self) -> Option<&Path> {
        self.path.as_deref().or(self.flag.as_deref())
    }
}

#[derive(Args)]
struct SquareInput {
    /// The graph containing the subgraph.
    x: PathBuf,
    /// The target of the attaching map.
    b: PathBuf,
    #[arg(long, value_name = "LABELS")]
    subset: String,
    /// JSON file `{"map": {...}}` from the subgraph to B.
    #[arg(long, value_name = "FILE")]
    map: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Chain space dimensions, ranks and Betti numbers below the cutoff.
    Homology {
        #[command(flatten)]
        graph: GraphInput,
        /// Include representative cycles.
        #[arg(long)]
        generators: bool,
    },
    /// Bases of the chain spaces, optionally with boundary matrices.
    Omega {
        #[command(flatten)]
        graph: GraphInput,
        /// A single degree instead of all degrees below the cutoff.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        matrix: bool,
    },
    /// Decides whether a subgraph inclusion is a cofibration.
    CofibCheck {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_name = "LABELS", conflicts_with_all = ["domain", "map"])]
        subset: Option<String>,
        /// Domain graph of an inclusion map given with `--map`.
        #[arg(long, value_name = "FILE", requires = "map")]
        domain: Option<PathBuf>,
        #[arg(long, value_name = "FILE", requires = "domain")]
        map: Option<PathBuf>,
        /// Replace a non-induced image by its induced closure.
        #[arg(long)]
        coerce_induced: bool,
    },
    /// Pushout of a subgraph inclusion along an attaching map.
    Pushout {
        #[command(flatten)]
        square: SquareInput,
    },
    /// Checks that a pushout square of cofibrations preserves relative homology.
    ExcisionVerify {
        #[command(flatten)]
        square: SquareInput,
    },
    /// Checks exactness of the long exact sequence of a pair.
    LesVerify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_name = "LABELS")]
        subset: String,
    },
    /// Factors the codiagonal through the cylinder on J.
    FactorCodiagonal {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Runs the axiom suite on seeded random instances.
    Axioms {
        #[arg(long, default_value_t = 500)]
        instances: usize,
        /// Vertex budget per instance.
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// Write the full report here.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Emits a named graph, or `random` with `--vertices` and `--density`.
    Generate {
        name: String,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
}

/// A command's result: the document to print and whether the check held.
struct Outcome {
    doc: Value,
    ok: bool,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc, ok: true }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Error> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn policy(c: &Common) -> EdgePolicy {
    if c.lenient {
        EdgePolicy::Lenient
    } else {
        EdgePolicy::Strict
    }
}

fn load_graph(path: Option<&Path>, c: &Common) -> Result<DiGraph, Error> {
    let name = path.map_or("stdin".to_string(), |p| p.display().to_string());
    let text = read_input(path)?;
    if text.trim().is_empty() {
        return Err(Error::Input(format!("{name}: no graph given")));
    }
    parse_graph(&text, policy(c)).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{name}: {m}")),
        other => Error::Input(format!("{name}: {other}")),
    })
}

fn parse_subset(g: &DiGraph, labels: &str) -> Result<VertexSubset, Error> {
    let names: Vec<&str> = labels.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    VertexSubset::from_labels(g, &names)
}

fn load_square(s: &SquareInput, c: &Common) -> Result<pathhom::PushoutSquare, Error> {
    let x = load_graph(Some(&s.x), c)?;
    let b = load_graph(Some(&s.b), c)?;
    let a = parse_subset(&x, &s.subset)?;
    let assignment = parse_map_json(&read_input(Some(&s.map))?)?;
    let f = GraphMap::from_label_map(x.induced(&a), b, &assignment.into_iter().collect())?;
    pushout(&x, &a, &f)
}

fn map_json(f: &GraphMap) -> Value {
    json!({ "map": f.label_map().into_iter().collect::<BTreeMap<_, _>>() })
}

fn homology_cmd<F: Field>(g: &DiGraph, c: &Common, generators: bool) -> Result<Outcome, Error> {
    let mut t: HomologyTable = homology_with_generators::<F>(g, c.cutoff)?;
    if !generators {
        t.generators = None;
    }
    Ok(Outcome::ok(serde_json::to_value(t)?))
}

fn omega_cmd<F: Field>(g: &DiGraph, c: &Common, degree: Option<usize>, matrix: bool) -> Result<Outcome, Error> {
    let degrees: Vec<usize> = degree.map_or_else(|| (0..c.cutoff).collect(), |d| vec![d]);
    let top = degrees.iter().max().copied().unwrap_or(0);
    let cx = PathComplex::<F>::build(g, PathFamily::Full, top)?;
    let mut out = Vec::new();
    for n in degrees {
        let sp = cx.space(n);
        let mut entry = json!({
            "degree": n,
            "allowed": sp.allowed().paths().len(),
            "dim": sp.dim(),
            "basis": sp.chains().iter().map(|ch| ch.display(g)).collect::<Vec<_>>(),
        });
        if matrix && n > 0 {
            let m = omega_boundary_matrix::<F>(g, n)?;
            let rows: Vec<Vec<String>> = (0..m.nrows())
                .map(|r| (0..m.ncols()).map(|k| m.get(r, k).to_string()).collect())
                .collect();
            entry["boundary"] = json!({
                "row_labels": m.row_labels(),
                "col_labels": m.col_labels(),
                "entries": rows,
            });
        }
        out.push(entry);
    }
    Ok(Outcome::ok(json!({ "degrees": out })))
}

fn excision_cmd<F: Field>(sq: &pathhom::PushoutSquare, c: &Common) -> Result<Outcome, Error> {
    match verify_excision::<F>(sq, c.cutoff) {
        Ok(r) => {
            let dims = omega_pushout_dims::<F>(sq, c.cutoff)?;
            let ok = r.verified && dims.holds;
            Ok(Outcome {
                doc: json!({ "verified": ok, "excision": r, "omega_pushout": dims }),
                ok,
            })
        }
        Err(Error::NotCofibration(why)) => Ok(Outcome {
            doc: json!({ "verified": false, "rejected": why }),
            ok: false,
        }),
        Err(e) => Err(e),
    }
}

fn les_cmd<F: Field>(g: &DiGraph, a: &VertexSubset, c: &Common) -> Result<Outcome, Error> {
    let r = verify_les::<F>(g, a, c.cutoff)?;
    Ok(Outcome {
        ok: r.exact,
        doc: serde_json::to_value(r)?,
    })
}

fn codiagonal_cmd<F: Field>(g: &DiGraph, c: &Common) -> Result<Outcome, Error> {
    let fac = codiagonal_factorization(g);
    let r = fac.verify::<F>(c.cutoff)?;
    Ok(Outcome {
        ok: r.verified,
        doc: json!({
            "cylinder": fac.cylinder.to_json_value(),
            "ends": fac.ends.labels(&fac.cylinder),
            "collapse": map_json(&fac.collapse),
            "report": r,
        }),
    })
}

fn seed(c: &Common, what: &str) -> Result<u64, Error> {
    match (c.seed, c.ci) {
        (Some(s), _) => Ok(s),
        (None, true) => Err(Error::Input(format!("{what} needs an explicit --seed in --ci mode"))),
        (None, false) => {
            let s = rand_seed();
            log::info!("using seed {s}");
            Ok(s)
        }
    }
}

fn rand_seed() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_nanos() as u64)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let c = &cli.common;
    let field = FieldChoice::parse(&c.field)?;
    match &cli.command {
        Command::Homology { graph, generators } => {
            let g = load_graph(graph.path(), c)?;
            with_field!(field, F => homology_cmd::<F>(&g, c, *generators))
        }
        Command::Omega { graph, degree, matrix } => {
            let g = load_graph(graph.path(), c)?;
            with_field!(field, F => omega_cmd::<F>(&g, c, *degree, *matrix))
        }
        Command::CofibCheck {
            graph,
            subset,
            domain,
            map,
            coerce_induced,
        } => {
            let g = load_graph(graph.path(), c)?;
            let verdict = match (subset, domain, map) {
                (Some(s), _, _) => check_cofibration(&g, &parse_subset(&g, s)?)?,
                (None, Some(d), Some(m)) => {
                    let dom = load_graph(Some(d), c)?;
                    let assignment = parse_map_json(&read_input(Some(m))?)?;
                    let f = GraphMap::from_label_map(dom, g.clone(), &assignment.into_iter().collect())?;
                    check_map_cofibration(&f, *coerce_induced)
                }
                _ => return Err(Error::Input("give either --subset or --domain with --map".into())),
            };
            Ok(Outcome {
                ok: verdict.is_cofibration(),
                doc: verdict.to_json(&g),
            })
        }
        Command::Pushout { square } => {
            let sq = load_square(square, c)?;
            Ok(Outcome::ok(json!({
                "y": sq.y.to_json_value(),
                "b_subset": sq.b_subset().labels(&sq.y),
                "b_to_y": map_json(&sq.b_to_y),
                "x_to_y": map_json(&sq.x_to_y),
            })))
        }
        Command::ExcisionVerify { square } => {
            let sq = load_square(square, c)?;
            with_field!(field, F => excision_cmd::<F>(&sq, c))
        }
        Command::LesVerify { graph, subset } => {
            let g = load_graph(graph.path(), c)?;
            let a = parse_subset(&g, subset)?;
            with_field!(field, F => les_cmd::<F>(&g, &a, c))
        }
        Command::FactorCodiagonal { graph } => {
            let g = load_graph(graph.path(), c)?;
            with_field!(field, F => codiagonal_cmd::<F>(&g, c))
        }
        Command::Axioms {
            instances,
            vertices,
            density,
            json: out,
        } => {
            let spec = InstanceSpec::new(seed(c, "axioms")?, *vertices, *density, c.cutoff)?;
            let report = with_field!(field, F => axiom_suite::<F>(&spec, *instances));
            let doc = serde_json::to_value(&report)?;
            if let Some(path) = out {
                fs::write(path, serde_json::to_string_pretty(&doc)?)?;
            }
            Ok(Outcome {
                ok: report.all_passed,
                doc,
            })
        }
        Command::Generate { name, vertices, density } => {
            let g = if name == "random" {
                random_digraph(&InstanceSpec::new(seed(c, "generate random")?, *vertices, *density, c.cutoff)?)?
            } else {
                generator_by_name(name)?
            };
            Ok(Outcome::ok(g.to_json_value()))
        }
    }
}

/// Homology tables print as columns; everything else as `path: value`
/// lines.
fn render_table(cmd: &Command, doc: &Value) -> String {
    if let (Command::Homology { .. }, Some(betti)) = (cmd, doc.get("betti").and_then(Value::as_array)) {
        let col = |k: &str, n: usize| doc[k][n].to_string();
        let mut s = format!("{:>3} {:>8} {:>8} {:>8} {:>6}\n", "n", "dim", "rank", "nullity", "betti");
        for n in 0..betti.len() {
            s.push_str(&format!(
                "{n:>3} {:>8} {:>8} {:>8} {:>6}\n",
                col("omega_dims", n),
                col("ranks", n),
                col("nullities", n),
                col("betti", n)
            ));
        }
        return s;
    }
    if let (Command::Generate { .. }, Ok(g)) = (cmd, parse_graph(&doc.to_string(), EdgePolicy::Strict)) {
        return g.to_text();
    }
    let mut lines = Vec::new();
    flatten("", doc, &mut lines);
    lines.join("\n") + "\n"
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push(format!("{prefix}: [{}]", items.join(", ")));
        }
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&key(&i.to_string()), x, out)),
        other => out.push(format!("{prefix}: {other}")),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(o) => {
            match cli.common.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&o.doc).expect("plain data")),
                Output::Table => print!("{}", render_table(&cli.command, &o.doc)),
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
