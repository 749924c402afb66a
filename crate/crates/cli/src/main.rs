use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use quasikern::constructions::{
    ab_cover, kn_free_partition_with, quasi_kernel, quasi_sink, tournament_split, verify_ab_cover,
};
use quasikern::ginfty::{materialize, TerminatedDigraph};
use quasikern::io::{dot_digraph, dot_materialization, emit, parse, GraphFile};
use quasikern::structure::t3_prefix;
use quasikern::witness::{classify, verify_truncated, LazyClaim};
use quasikern::{decide_class, verify_claim, Caps, ClassClaim, ClassKind, Digraph, VerifyReport};

/// Quasi-kernels, quasi-sinks and class witnesses for digraphs in the
/// `.qdg` text format.
#[derive(Parser)]
#[command(name = "quasikern", version)]
struct Cli {
    /// Vertex cap for the exhaustive oracle and clique searches.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Vertex cap for materialized truncations.
    #[arg(long, global = true)]
    max_materialize: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of a digraph with verified witnesses and oracle verdicts.
    Analyze {
        file: PathBuf,
        /// Also write the digraph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Quasi-kernel.
    Qk { file: PathBuf },
    /// Quasi-sink.
    Qs { file: PathBuf },
    /// Exhaustive class decision, e.g. `--class out2` or `--class inout22`.
    Decide {
        file: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Split a tournament into OUT(2) or INOUT(1,1).
    Split {
        file: PathBuf,
        #[arg(long)]
        x: Option<usize>,
    },
    /// Partition for a digraph whose undirected complement has no K_n.
    Knfree {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Sets A, B with Out²(A) ∪ In²(B) = V.
    Abcover { file: PathBuf },
    /// Infinite digraphs generated by a terminated digraph.
    #[command(subcommand)]
    Ginfty(Ginfty),
    /// Emit a generated digraph in the text format.
    Gen {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Subcommand)]
enum Ginfty {
    Classify {
        file: PathBuf,
    },
    Materialize {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Write DOT here instead of listing the truncation.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify the constructed claims, or a claim file, on a truncation.
    Verify {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        claim: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    T3,
}

/// A run that completed; `false` means a claim failed or a class is absent.
type Outcome = anyhow::Result<(String, bool)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Some(n) = cli.max_vertices {
        caps = caps.with_max_vertices(n);
    }
    if let Some(n) = cli.max_materialize {
        caps = caps.with_max_materialize(n);
    }
    match run(cli.cmd, &caps) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let cap = e.downcast_ref::<quasikern::Error>().is_some_and(|e| e.is_cap_refusal());
            ExitCode::from(if cap { 3 } else { 2 })
        }
    }
}

fn load(path: &Path) -> anyhow::Result<GraphFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))
}

fn load_digraph(path: &Path) -> anyhow::Result<Digraph> {
    Ok(load(path)?.digraph().clone())
}

fn load_terminated(path: &Path) -> anyhow::Result<TerminatedDigraph> {
    match load(path)? {
        GraphFile::Terminated(td) => Ok(td),
        GraphFile::Plain(_) => bail!(
            "{}: no `terminal` lines; G^inf needs a terminated digraph",
            path.display()
        ),
    }
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn verdict(r: &VerifyReport) -> String {
    if r.ok {
        "verified".into()
    } else {
        let f: Vec<_> = r.failures.iter().map(ToString::to_string).collect();
        format!("FAILED ({})", f.join("; "))
    }
}

fn claim_lines(out: &mut String, g: &Digraph, c: &ClassClaim) -> bool {
    let r = verify_claim(g, c);
    writeln!(out, "claim: {c}\ncheck: {}", verdict(&r)).unwrap();
    r.ok
}

fn run(cmd: Cmd, caps: &Caps) -> Outcome {
    let mut out = String::new();
    let ok = match cmd {
        Cmd::Analyze { file, dot } => {
            let f = load(&file)?;
            if let Some(path) = dot {
                write_file(&path, &dot_digraph(f.digraph(), f.terminals()))?;
            }
            analyze(&mut out, f.digraph(), caps)?
        }
        Cmd::Qk { file } => {
            writeln!(out, "{}", quasi_kernel(&load_digraph(&file)?)).unwrap();
            true
        }
        Cmd::Qs { file } => {
            writeln!(out, "{}", quasi_sink(&load_digraph(&file)?)).unwrap();
            true
        }
        Cmd::Decide { file, class } => {
            let g = load_digraph(&file)?;
            let kind: ClassKind = class.parse()?;
            writeln!(out, "class: {kind}").unwrap();
            match decide_class(&g, kind, caps)? {
                Some(c) => {
                    writeln!(out, "verdict: present").unwrap();
                    claim_lines(&mut out, &g, &c)
                }
                None => {
                    writeln!(out, "verdict: absent").unwrap();
                    false
                }
            }
        }
        Cmd::Split { file, x } => {
            let g = load_digraph(&file)?;
            let c = tournament_split(&g, x)?.to_claim();
            claim_lines(&mut out, &g, &c)
        }
        Cmd::Knfree { file, n } => {
            let g = load_digraph(&file)?;
            let c = kn_free_partition_with(&g, n, caps)?;
            claim_lines(&mut out, &g, &c)
        }
        Cmd::Abcover { file } => {
            let g = load_digraph(&file)?;
            let (a, b) = ab_cover(&g);
            let r = verify_ab_cover(&g, &a, &b);
            writeln!(out, "A: {a}\nB: {b}\ncheck: {}", verdict(&r)).unwrap();
            r.ok
        }
        Cmd::Ginfty(sub) => return ginfty(sub, caps),
        Cmd::Gen {
            target: Target::T3,
            size,
        } => {
            out = emit(&GraphFile::Plain(t3_prefix(size)?));
            true
        }
    };
    Ok((out, ok))
}

fn analyze(out: &mut String, g: &Digraph, caps: &Caps) -> anyhow::Result<bool> {
    let cond = g.condensation();
    let sizes: Vec<_> = cond.classes.iter().map(|c| c.len().to_string()).collect();
    writeln!(
        out,
        "vertices: {}\nedges: {}\ntournament: {}",
        g.n(),
        g.edge_count(),
        g.is_tournament()
    )
    .unwrap();
    writeln!(
        out,
        "condensation: {} classes (sizes {}), total order: {}",
        cond.classes.len(),
        sizes.join(","),
        cond.is_total_order
    )
    .unwrap();

    let mut ok = true;
    for (name, claim) in [
        ("quasi_kernel", ClassClaim::out(2, quasi_kernel(g))),
        ("quasi_sink", ClassClaim::in_(2, quasi_sink(g))),
    ] {
        let r = verify_claim(g, &claim);
        ok &= r.ok;
        writeln!(out, "{name}: {} {}", claim.witness_a, verdict(&r)).unwrap();
    }
    let (a, b) = ab_cover(g);
    let r = verify_ab_cover(g, &a, &b);
    ok &= r.ok;
    writeln!(out, "ab_cover: A={a} B={b} {}", verdict(&r)).unwrap();

    let kinds = (1..=3)
        .map(ClassKind::out)
        .chain((1..=3).map(ClassKind::in_))
        .chain([ClassKind::inout(2, 2)]);
    for kind in kinds {
        let line = match decide_class(g, kind, caps) {
            Ok(Some(c)) => format!("present ({c})"),
            Ok(None) => "absent".into(),
            Err(e) if e.is_cap_refusal() => format!("skipped ({e})"),
            Err(e) => return Err(e.into()),
        };
        writeln!(out, "{kind}: {line}").unwrap();
    }
    Ok(ok)
}

fn ginfty(cmd: Ginfty, caps: &Caps) -> Outcome {
    let mut out = String::new();
    let ok = match cmd {
        Ginfty::Classify { file } => {
            out = classify(&load_terminated(&file)?)?.to_string();
            true
        }
        Ginfty::Materialize { file, depth, dot } => {
            let m = materialize(&load_terminated(&file)?, depth, caps)?;
            writeln!(
                out,
                "depth: {depth}\nvertices: {}\nedges: {}",
                m.len(),
                m.digraph.edge_count()
            )
            .unwrap();
            match dot {
                Some(path) => {
                    write_file(&path, &dot_materialization(&m))?;
                    writeln!(out, "dot: {}", path.display()).unwrap();
                }
                None => {
                    for (i, l) in m.labels.iter().enumerate() {
                        writeln!(out, "node {i} {l}").unwrap();
                    }
                    for (u, v) in m.digraph.edges() {
                        writeln!(out, "edge {u} {v}").unwrap();
                    }
                }
            }
            true
        }
        Ginfty::Verify {
            file,
            depth,
            margin,
            claim,
        } => {
            let td = load_terminated(&file)?;
            let claims = match claim {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let c: LazyClaim = text.parse().with_context(|| path.display().to_string())?;
                    vec![("claim", c)]
                }
                None => classify(&td)?.claims(),
            };
            writeln!(out, "depth: {depth}\nmargin: {margin}").unwrap();
            let mut ok = true;
            for (name, c) in claims {
                let r = verify_truncated(&td, &c, depth, margin, caps)?;
                ok &= r.ok;
                if r.ok {
                    writeln!(out, "{name}: {} verified", c.kind).unwrap();
                } else {
                    writeln!(out, "{name}: {} FAILED ({} failures)", c.kind, r.failures.len()).unwrap();
                    for f in &r.failures {
                        writeln!(out, "  {f}").unwrap();
                    }
                }
            }
            ok
        }
    };
    Ok((out, ok))
}
