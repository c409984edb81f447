//! Command-line tools for local box representations: exact solvers,
//! verified constructions, colorings, Monte-Carlo checks, bound tables,
//! Steiner systems, and the binary codec.
//!
//! Exit codes: 0 on success, 1 on verification or runtime failure, 2 on
//! usage errors. Every randomized subcommand requires an explicit `--seed`,
//! and identical invocations with identical seeds produce byte-identical
//! outputs. Every `construct` output is re-verified before the process
//! exits 0.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use locbox_cli::{edgelist, graph6, repjson, steiner};
use locbox_core::bounds::{counting_upper, lower_bound_table, LowerBoundParams};
use locbox_core::boxrep::{decode, encode, Representation};
use locbox_core::coloring::{
    lbox2_color, shift_complement_rep, shift_graph, tf_lbox2_color, type11_color, ColoringResult,
    Type11Rep,
};
use locbox_core::compose::{affine_plane, verify_steiner, DriverOpts};
use locbox_core::girth5::gcreg_value;
use locbox_core::gnp::{gnp_rep, multicyclic_mc, sample_gnp};
use locbox_core::graph::Graph;
use locbox_core::interval::sparse_two_box;
use locbox_core::solver::{box_exact, chromatic_exact, lbox_exact, ChromaticOutcome, SolveOutcome};

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check(msg: impl Into<String>) -> Failure {
    Failure::Check(msg.into())
}

const USAGE: &str = "usage: locbox <command>

commands:
  exact lbox|box|chi <graph> [--out <path>]
  verify <graph> <rep> --d <d>
  construct gcreg <graph> --out <rep>
  construct tree2box <graph> --out <rep>
  construct degree <graph> --seed <s> [--q <prime>] [--cutoff <n>] --out <rep>
  construct edges <graph> --seed <s> [--q <prime>] [--cutoff <n>] --out <rep>
  construct shift --n <n> --out <rep> [--graph-out <path>]
  construct gnp --n <n> --np <x> --epsilon <e> --seed <s> [--max-retries <r>]
                --out <rep> [--graph-out <path>]
  color lbox2|tf <graph> <rep> [--out <csv>]
  color type11 <graph> <rep> --first-dim <d> [--out <csv>]
  mc multicyclic --n <n> --c <c> --trials <t> --seed <s> [--out <csv>]
  bounds table [--n <n>] [--d <d>] [--eps <e>] [--delta <d>] [--np <x>]
               [--m <m>] [--genus <g>] [--out <csv>]
  steiner affine --q <prime> --out <path>
  codec encode <rep> --d <d> --out <bin>
  codec decode <bin> --n <n> --d <d> --out <rep>

graph files: `.g6` is read as graph6, anything else as an edge list
(`u v` per line, `#` comments, optional `# n <count>`).";

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

impl Args {
    fn parse(raw: &[String], allowed: &[&str]) -> Result<Args, Failure> {
        let mut positional = Vec::new();
        let mut flags = BTreeMap::new();
        let mut it = raw.iter();
        while let Some(arg) = it.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if !allowed.contains(&name) {
                    return Err(usage(format!("unknown flag --{name}")));
                }
                let value = it
                    .next()
                    .ok_or_else(|| usage(format!("flag --{name} needs a value")))?;
                flags.insert(name.to_string(), value.clone());
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Args { positional, flags })
    }

    fn flag<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, Failure> {
        match self.flags.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| usage(format!("bad value `{raw}` for --{name}"))),
        }
    }

    fn required<T: std::str::FromStr>(&self, name: &str) -> Result<T, Failure> {
        self.flag(name)?
            .ok_or_else(|| usage(format!("missing required flag --{name}")))
    }

    fn out_path(&self) -> Result<PathBuf, Failure> {
        Ok(PathBuf::from(
            self.flags
                .get("out")
                .ok_or_else(|| usage("missing required flag --out"))?,
        ))
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| check(format!("cannot read {path}: {e}")))?;
    if Path::new(path).extension().is_some_and(|ext| ext == "g6") {
        graph6::from_graph6(&text).map_err(|e| check(e.to_string()))
    } else {
        edgelist::from_edgelist(&text).map_err(|e| check(e.to_string()))
    }
}

fn read_rep(path: &str) -> Result<Representation, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| check(format!("cannot read {path}: {e}")))?;
    repjson::from_json(&text).map_err(|e| check(e.to_string()))
}

fn write_file(path: &Path, contents: &[u8]) -> CmdResult {
    std::fs::write(path, contents)
        .map_err(|e| check(format!("cannot write {}: {e}", path.display())))
}

/// Writes the representation, re-verifies it against `g` at `d`, and prints
/// the summary. Exits nonzero if verification fails.
fn write_verified_rep(g: &Graph, rep: &Representation, d: usize, out: &Path) -> CmdResult {
    let report = rep.verify(g, d).map_err(|e| check(e.to_string()))?;
    if !report.ok {
        return Err(check(format!(
            "construction failed verification: {:?}",
            report.first_violation
        )));
    }
    write_file(out, repjson::to_json(rep).as_bytes())?;
    println!(
        "locality {} (claimed {}), dims {}",
        report.max_locality,
        d,
        rep.dims()
    );
    println!("representation: {}", out.display());
    Ok(())
}

fn cert_path(input: &str, kind: &str) -> PathBuf {
    PathBuf::from(format!("{input}.{kind}.json"))
}

fn cmd_exact(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["out"])?;
    let [what, graph_path] = a.positional.as_slice() else {
        return Err(usage("exact takes `lbox|box|chi <graph>`"));
    };
    let g = read_graph(graph_path)?;
    match what.as_str() {
        "lbox" | "box" => {
            let outcome = if what == "lbox" {
                lbox_exact(&g)
            } else {
                box_exact(&g)
            };
            match outcome {
                SolveOutcome::Exact(r) => {
                    let out = a
                        .flags
                        .get("out")
                        .map(PathBuf::from)
                        .unwrap_or_else(|| cert_path(graph_path, what));
                    write_file(&out, repjson::to_json(&r.certificate).as_bytes())?;
                    println!("{}", r.value);
                    println!("certificate: {}", out.display());
                    println!("lower bound: {}", r.lower_bound_witness);
                    Ok(())
                }
                SolveOutcome::Unknown {
                    lower_bound,
                    reason,
                } => Err(check(format!("unknown (>= {lower_bound}): {reason}"))),
            }
        }
        "chi" => match chromatic_exact(&g) {
            ChromaticOutcome::Exact { chi, coloring } => {
                let out = a
                    .flags
                    .get("out")
                    .map(PathBuf::from)
                    .unwrap_or_else(|| cert_path(graph_path, "chi"));
                write_file(&out, coloring_csv(&coloring).as_bytes())?;
                println!("{chi}");
                println!("coloring: {}", out.display());
                Ok(())
            }
            ChromaticOutcome::Unknown {
                lower_bound,
                reason,
            } => Err(check(format!("unknown (>= {lower_bound}): {reason}"))),
        },
        other => Err(usage(format!("unknown exact target `{other}`"))),
    }
}

fn cmd_verify(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["d"])?;
    let [graph_path, rep_path] = a.positional.as_slice() else {
        return Err(usage("verify takes `<graph> <rep> --d <d>`"));
    };
    let d: usize = a.required("d")?;
    let g = read_graph(graph_path)?;
    let rep = read_rep(rep_path)?;
    let report = rep.verify(&g, d).map_err(|e| check(e.to_string()))?;
    if report.ok {
        println!("ok: max locality {} <= {}", report.max_locality, d);
        Ok(())
    } else {
        Err(check(format!("violation: {:?}", report.first_violation)))
    }
}

fn cmd_construct(args: &[String]) -> CmdResult {
    let a = Args::parse(
        args,
        &[
            "out",
            "graph-out",
            "n",
            "np",
            "epsilon",
            "seed",
            "max-retries",
            "q",
            "cutoff",
        ],
    )?;
    let Some(what) = a.positional.first() else {
        return Err(usage(
            "construct takes a target: gcreg|gnp|degree|edges|shift|tree2box",
        ));
    };
    match what.as_str() {
        "gcreg" => {
            let [_, graph_path] = a.positional.as_slice() else {
                return Err(usage("construct gcreg takes `<graph> --out <rep>`"));
            };
            let g = read_graph(graph_path)?;
            let result = gcreg_value(&g).map_err(|e| check(e.to_string()))?;
            println!("{}", result.value);
            println!("lower bound: {}", result.lower_witness);
            write_verified_rep(&g, &result.certificate, result.value, &a.out_path()?)
        }
        "tree2box" => {
            let [_, graph_path] = a.positional.as_slice() else {
                return Err(usage("construct tree2box takes `<graph> --out <rep>`"));
            };
            let g = read_graph(graph_path)?;
            let rep = sparse_two_box(&g).map_err(|e| check(e.to_string()))?;
            write_verified_rep(&g, &rep, rep.max_locality(), &a.out_path()?)
        }
        "degree" | "edges" => {
            let [_, graph_path] = a.positional.as_slice() else {
                return Err(usage(
                    "construct degree/edges takes `<graph> --seed <s> --out <rep>`",
                ));
            };
            let seed: u64 = a.required("seed")?;
            let g = read_graph(graph_path)?;
            let opts = DriverOpts {
                exact_cutoff: a.flag("cutoff")?.unwrap_or(8),
                q_override: a.flag("q")?,
                seed,
            };
            let result = if what == "degree" {
                locbox_core::compose::lbox_by_degree(&g, &opts)
            } else {
                locbox_core::compose::lbox_by_edges(&g, &opts)
            }
            .map_err(|e| check(e.to_string()))?;
            write_verified_rep(&g, &result.rep, result.max_locality, &a.out_path()?)
        }
        "shift" => {
            let n: usize = a.required("n")?;
            let rep = shift_complement_rep(n).map_err(|e| check(e.to_string()))?;
            let target = shift_graph(n)
                .map_err(|e| check(e.to_string()))?
                .complement();
            let out = a.out_path()?;
            if let Some(graph_out) = a.flags.get("graph-out") {
                write_file(
                    Path::new(graph_out),
                    edgelist::to_edgelist(&target).as_bytes(),
                )?;
                println!("graph: {graph_out}");
            }
            write_verified_rep(&target, &rep, 2, &out)
        }
        "gnp" => {
            let n: usize = a.required("n")?;
            let np: f64 = a.required("np")?;
            let epsilon: f64 = a.required("epsilon")?;
            let seed: u64 = a.required("seed")?;
            let retries: usize = a.flag("max-retries")?.unwrap_or(5);
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            let sample = sample_gnp(n, np / n as f64, seed).map_err(|e| check(e.to_string()))?;
            let result = gnp_rep(&sample.graph, np, epsilon, seed, retries)
                .map_err(|e| check(e.to_string()))?;
            println!(
                "classes {} resamples {} locality {}",
                result.classes, result.resamples, result.max_locality
            );
            if let Some(graph_out) = a.flags.get("graph-out") {
                write_file(
                    Path::new(graph_out),
                    edgelist::to_edgelist(&sample.graph).as_bytes(),
                )?;
                println!("graph: {graph_out}");
            }
            let bound = 2 * (result.classes.saturating_sub(1)).max(1);
            write_verified_rep(
                &sample.graph,
                &result.rep,
                bound.max(result.max_locality),
                &a.out_path()?,
            )
        }
        other => Err(usage(format!("unknown construct target `{other}`"))),
    }
}

fn coloring_csv(colors: &[usize]) -> String {
    let mut out = String::from("vertex,color\n");
    for (v, c) in colors.iter().enumerate() {
        let _ = writeln!(out, "{v},{c}");
    }
    out
}

fn report_coloring(result: &ColoringResult, out: Option<&String>) -> CmdResult {
    println!(
        "colors {} bound {} proper {} subcontract {}",
        result.count,
        result.bound,
        result.proper,
        if result.exact_subroutines {
            "exact"
        } else {
            "heuristic"
        }
    );
    if let Some(path) = out {
        write_file(Path::new(path), coloring_csv(&result.colors).as_bytes())?;
        println!("coloring: {path}");
    }
    Ok(())
}

fn cmd_color(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["out", "first-dim"])?;
    let [what, graph_path, rep_path] = a.positional.as_slice() else {
        return Err(usage("color takes `lbox2|tf|type11 <graph> <rep>`"));
    };
    let g = read_graph(graph_path)?;
    let rep = read_rep(rep_path)?;
    let result = match what.as_str() {
        "lbox2" => lbox2_color(&g, &rep),
        "tf" => tf_lbox2_color(&g, &rep),
        "type11" => {
            let first_dim: usize = a.required("first-dim")?;
            type11_color(&g, &Type11Rep { rep, first_dim })
        }
        other => return Err(usage(format!("unknown color mode `{other}`"))),
    }
    .map_err(|e| check(e.to_string()))?;
    report_coloring(&result, a.flags.get("out"))
}

fn cmd_mc(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["n", "c", "trials", "seed", "out"])?;
    match a.positional.as_slice() {
        [what] if what == "multicyclic" => {}
        _ => {
            return Err(usage(
                "mc takes `multicyclic --n <n> --c <c> --trials <t> --seed <s>`",
            ))
        }
    }
    let n: usize = a.required("n")?;
    let c: f64 = a.required("c")?;
    let trials: usize = a.required("trials")?;
    let seed: u64 = a.required("seed")?;
    let r = multicyclic_mc(n, c, trials, seed).map_err(|e| check(e.to_string()))?;
    let mut csv = String::from("n,c,trials,empirical,bound,sigma\n");
    let _ = writeln!(
        csv,
        "{},{},{},{},{},{}",
        r.n, r.c, r.trials, r.empirical, r.bound, r.sigma
    );
    print!("{csv}");
    if let Some(path) = a.flags.get("out") {
        write_file(Path::new(path), csv.as_bytes())?;
    }
    Ok(())
}

fn cmd_bounds(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["n", "d", "eps", "delta", "np", "m", "genus", "out"])?;
    match a.positional.as_slice() {
        [what] if what == "table" => {}
        _ => return Err(usage("bounds takes `table [--n ...] [--d ...] ...`")),
    }
    let mut rows = Vec::new();
    if let (Some(n), Some(d)) = (a.flag::<usize>("n")?, a.flag::<usize>("d")?) {
        rows.push(counting_upper(n, d).map_err(|e| check(e.to_string()))?);
    }
    if let (Some(n), Some(delta)) = (a.flag::<usize>("n")?, a.flag::<usize>("delta")?) {
        // Comparison column: the regular-graph count the census is measured
        // against.
        if let Ok(value) = locbox_core::bounds::regular_count_log2(n, delta) {
            rows.push(locbox_core::bounds::BoundReport {
                name: String::from("regular-count-log2"),
                inputs: format!("n={n} delta={delta}"),
                value: Some(value),
                citation: String::from(
                    "labelled regular-graph count (n/(e^2 D))^(Dn/2), shown for comparison",
                ),
            });
        }
    }
    let params = LowerBoundParams {
        n: a.flag("n")?,
        epsilon: a.flag("eps")?,
        delta: a.flag("delta")?,
        np: a.flag("np")?,
        m: a.flag("m")?,
        genus: a.flag("genus")?,
    };
    rows.extend(lower_bound_table(&params).map_err(|e| check(e.to_string()))?);
    if rows.is_empty() {
        return Err(usage("no applicable bounds for the given parameters"));
    }
    let mut csv = String::from("name,inputs,value,citation\n");
    for row in &rows {
        let value = row.value.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            csv,
            "{},{},{},\"{}\"",
            row.name, row.inputs, value, row.citation
        );
    }
    print!("{csv}");
    if let Some(path) = a.flags.get("out") {
        write_file(Path::new(path), csv.as_bytes())?;
    }
    Ok(())
}

fn cmd_steiner(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["q", "out"])?;
    match a.positional.as_slice() {
        [what] if what == "affine" => {}
        _ => return Err(usage("steiner takes `affine --q <prime> --out <path>`")),
    }
    let q: u64 = a.required("q")?;
    let sys = affine_plane(q).map_err(|e| check(e.to_string()))?;
    if let Err(violation) = verify_steiner(&sys) {
        return Err(check(format!(
            "constructed system failed verification: {violation:?}"
        )));
    }
    println!(
        "points {} blocks {} replication {}",
        sys.s,
        sys.blocks.len(),
        sys.replication()
    );
    write_file(&a.out_path()?, steiner::to_text(&sys).as_bytes())
}

fn cmd_codec(args: &[String]) -> CmdResult {
    let a = Args::parse(args, &["d", "n", "out"])?;
    let [what, input] = a.positional.as_slice() else {
        return Err(usage("codec takes `encode <rep> --d <d> --out <bin>` or `decode <bin> --n <n> --d <d> --out <rep>`"));
    };
    match what.as_str() {
        "encode" => {
            let d: usize = a.required("d")?;
            let rep = read_rep(input)?;
            // Canonical form first: the codec requires pruned, normalized
            // input.
            let canon = rep.prune_dims().normalize();
            let enc = encode(&canon, d).map_err(|e| check(e.to_string()))?;
            println!(
                "payload bits {} (budget {})",
                enc.payload_bits(),
                locbox_core::boxrep::codec::payload_budget(canon.n().max(1), d)
            );
            write_file(&a.out_path()?, enc.bytes())
        }
        "decode" => {
            let n: usize = a.required("n")?;
            let d: usize = a.required("d")?;
            let bytes =
                std::fs::read(input).map_err(|e| check(format!("cannot read {input}: {e}")))?;
            let rep = decode(&bytes, n, d).map_err(|e| check(e.to_string()))?;
            println!(
                "n {} dims {} max locality {}",
                rep.n(),
                rep.dims(),
                rep.max_locality()
            );
            write_file(&a.out_path()?, repjson::to_json(&rep).as_bytes())
        }
        other => Err(usage(format!("unknown codec mode `{other}`"))),
    }
}

fn run(argv: &[String]) -> CmdResult {
    let Some((command, rest)) = argv.split_first() else {
        return Err(usage("no command given"));
    };
    match command.as_str() {
        "exact" => cmd_exact(rest),
        "verify" => cmd_verify(rest),
        "construct" => cmd_construct(rest),
        "color" => cmd_color(rest),
        "mc" => cmd_mc(rest),
        "bounds" => cmd_bounds(rest),
        "steiner" => cmd_steiner(rest),
        "codec" => cmd_codec(rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(())
        }
        other => Err(usage(format!("unknown command `{other}`"))),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n\n{USAGE}");
            ExitCode::from(2)
        }
    }
}
