use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use multisets::complexes::{dual_graph, permutahedron, tetra_graph};
use multisets::exact::Rat;
use multisets::interface::{
    files, random_multiset2d, run_verification, CompositionFile, MultisetFile, RandomMode,
    RectCompositionFile,
};
use multisets::linear::enumerate_linear;
use multisets::rectangular::{enumerate_rect, maximal_elements, minimal_elements, Rect};
use multisets::symmetry::overlay_lr;
use multisets::Error;

/// Composition posets and cell structures for multisets in intervals and
/// rectangles.
#[derive(Parser)]
#[command(name = "multisets", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the composition (multiplicity vector or matrix) of a multiset.
    Comp {
        /// Multiset JSON file (interval or rectangle flavor).
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the spine of the cell labeled by a composition.
    Spine {
        /// Composition JSON file (linear or rectangular).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        lengths: LengthArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List compositions of n.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build a graph attached to the multiset space of a rectangle.
    Graph {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the bundled verification suite.
    Verify {
        /// Upper end of the face-poset sweep (bounded at 4).
        #[arg(long, default_value_t = 3)]
        max_n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample a random multiset in a rectangle, deterministically per seed.
    Random {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Generic)]
        mode: Mode,
        #[command(flatten)]
        lengths: LengthArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LengthArgs {
    /// Side lengths L_I and L_J as rationals, e.g. --lengths 3/2 1.
    #[arg(long, num_args = 2, value_names = ["L_I", "L_J"], default_values = ["1", "1"])]
    lengths: Vec<String>,
}

impl LengthArgs {
    fn parse(&self) -> Result<(Rat, Rat), Error> {
        let li: Rat = self.lengths[0].parse()?;
        let lj: Rat = self.lengths[1].parse()?;
        if !li.is_positive() || !lj.is_positive() {
            return Err(Error::DegenerateInterval);
        }
        Ok((li, lj))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Linear,
    Rect,
    Minimal,
    Maximal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Dual,
    Lr,
    Tetra,
    Permutahedron,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Generic,
    Grid,
}

/// Vertex-count guard for graphs with n! vertices.
const GRAPH_MAX_N: u64 = 7;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::ResourceGuard {
            task,
            requested,
            max,
        }) => {
            eprintln!("refused: {task} is bounded at n <= {max}, got n = {requested}");
            eprintln!("(the counts grow factorially; rerun with a smaller n)");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Error> {
    match &out.output {
        Some(path) => files::write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if let Command::Enumerate { n: 0, .. }
    | Command::Graph { n: 0, .. }
    | Command::Random { n: 0, .. } = &cli.command
    {
        return Err(Error::MalformedInput("n must be at least 1".to_string()));
    }
    match cli.command {
        Command::Comp { input, out } => {
            let multiset: MultisetFile = files::parse_json(&files::read_text(&input)?)?;
            match multiset {
                MultisetFile::OneD(file) => {
                    let x = file.parse()?;
                    let comp = x.composition();
                    eprintln!("composition {comp} of n = {}", comp.n());
                    eprintln!("dimension {}", comp.dimension());
                    let value = serde_json::to_value(files::LinearCompositionFile::from(&comp))
                        .expect("serializable");
                    emit(&out, &files::render_json(&value))?;
                }
                MultisetFile::TwoD(file) => {
                    let z = file.parse()?;
                    let comp = z.composition();
                    eprintln!(
                        "composition of n = {} with shape {:?}",
                        comp.n(),
                        comp.shape()
                    );
                    eprintln!("pi_re {} (row sums)", comp.pi_re());
                    eprintln!("pi_im {} (column sums)", comp.pi_im());
                    eprintln!("dimension {}", comp.dimension());
                    let value = serde_json::to_value(RectCompositionFile::from(&comp))
                        .expect("serializable");
                    emit(&out, &files::render_json(&value))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spine {
            input,
            format,
            lengths,
            out,
        } => {
            let (li, lj) = lengths.parse()?;
            let comp: CompositionFile = files::parse_json(&files::read_text(&input)?)?;
            let text = match comp {
                CompositionFile::Linear(file) => {
                    let c = file.parse()?;
                    let spine = c.spine();
                    eprintln!(
                        "spine with {} vertices and {} edges",
                        spine.vertices().len(),
                        spine.edge_count()
                    );
                    match format {
                        Format::Json => {
                            files::render_json(&files::linear_spine_json(&c, &spine, li))
                        }
                        Format::Dot => files::linear_spine_dot(&spine),
                    }
                }
                CompositionFile::Rect(file) => {
                    let c = file.parse()?;
                    let spine = c.spine();
                    eprintln!(
                        "spine with {} vertices, {} edges, {} faces",
                        spine.vertex_count(),
                        spine.edges().len(),
                        spine.faces().len()
                    );
                    match format {
                        Format::Json => {
                            files::render_json(&files::rect_spine_json(&c, &spine, li, lj))
                        }
                        Format::Dot => files::rect_spine_dot(&spine),
                    }
                }
            };
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, kind, out } => {
            let value = match kind {
                Kind::Linear => {
                    if n > 16 {
                        return Err(Error::ResourceGuard {
                            task: "linear composition enumeration",
                            requested: n,
                            max: 16,
                        });
                    }
                    let items: Vec<Vec<u64>> = enumerate_linear(n)
                        .iter()
                        .map(|c| c.entries().to_vec())
                        .collect();
                    eprintln!("{} linear compositions of {n}", items.len());
                    json!({ "kind": "linear", "n": n, "count": items.len(), "items": items })
                }
                Kind::Rect => {
                    let all = enumerate_rect(n)?;
                    let top = 2 * n as usize;
                    let mut by_dim = vec![0usize; top + 1];
                    for m in &all {
                        by_dim[m.dimension()] += 1;
                    }
                    let items: Vec<serde_json::Value> = all
                        .iter()
                        .map(|m| {
                            serde_json::to_value(RectCompositionFile::from(m))
                                .expect("serializable")
                        })
                        .collect();
                    eprintln!("{} rectangular compositions of {n}", items.len());
                    json!({
                        "kind": "rect",
                        "n": n,
                        "count": items.len(),
                        "counts_by_dimension": by_dim,
                        "items": items,
                    })
                }
                Kind::Minimal => {
                    let items: Vec<serde_json::Value> = minimal_elements(n)
                        .iter()
                        .map(|m| {
                            serde_json::to_value(RectCompositionFile::from(m))
                                .expect("serializable")
                        })
                        .collect();
                    eprintln!("{} minimal elements for n = {n}", items.len());
                    json!({ "kind": "minimal", "n": n, "count": items.len(), "items": items })
                }
                Kind::Maximal => {
                    if n > GRAPH_MAX_N {
                        return Err(Error::ResourceGuard {
                            task: "maximal element enumeration",
                            requested: n,
                            max: GRAPH_MAX_N,
                        });
                    }
                    let items: Vec<serde_json::Value> = maximal_elements(n)
                        .iter()
                        .map(|(p, m)| {
                            json!({
                                "permutation": p.key(),
                                "matrix": RectCompositionFile::from(m).matrix,
                            })
                        })
                        .collect();
                    eprintln!("{} maximal elements for n = {n}", items.len());
                    json!({ "kind": "maximal", "n": n, "count": items.len(), "items": items })
                }
            };
            emit(&out, &files::render_json(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph {
            n,
            which,
            format,
            out,
        } => {
            if matches!(which, Which::Dual | Which::Lr | Which::Permutahedron) && n > GRAPH_MAX_N {
                return Err(Error::ResourceGuard {
                    task: "graph construction on n! vertices",
                    requested: n,
                    max: GRAPH_MAX_N,
                });
            }
            let text = match which {
                Which::Dual => {
                    let g = dual_graph(n);
                    eprintln!(
                        "dual graph: {} vertices, {} edges",
                        g.vertex_count(),
                        g.edge_count()
                    );
                    match format {
                        Format::Json => files::render_json(&g.to_json()),
                        Format::Dot => g.to_dot("dual"),
                    }
                }
                Which::Lr => {
                    let g = overlay_lr(usize::try_from(n).expect("guarded"));
                    eprintln!(
                        "overlay: {} vertices, {} edges",
                        g.vertex_count(),
                        g.edge_count()
                    );
                    match format {
                        Format::Json => files::render_json(&g.to_json()),
                        Format::Dot => g.to_dot("overlay_lr"),
                    }
                }
                Which::Tetra => {
                    if n > 100 {
                        return Err(Error::ResourceGuard {
                            task: "tetrahedral graph listing",
                            requested: n,
                            max: 100,
                        });
                    }
                    let t = tetra_graph(n);
                    eprintln!(
                        "tetrahedral graph: {} vertices, {} edges",
                        t.graph().vertex_count(),
                        t.graph().edge_count()
                    );
                    match format {
                        Format::Json => files::render_json(&files::tetra_json(&t)),
                        Format::Dot => t.graph().to_dot("tetra"),
                    }
                }
                Which::Permutahedron => {
                    // Defaults reproduce the regular picture: interval
                    // [0, n+1], basepoint (1, .., n).
                    let basepoint: Vec<Rat> = (1..=i64::try_from(n).expect("guarded"))
                        .map(Rat::integer)
                        .collect();
                    let interval = (Rat::zero(), Rat::integer(n as i64 + 1));
                    let p = permutahedron(n, interval, &basepoint)?;
                    eprintln!(
                        "permutahedron: {} vertices, {} edges",
                        p.realization.vertices().len(),
                        p.realization.edges().len()
                    );
                    match format {
                        Format::Json => {
                            files::render_json(&files::realization_json(&p.realization))
                        }
                        Format::Dot => p.skeleton.to_dot("permutahedron"),
                    }
                }
            };
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, out } => {
            let report = run_verification(max_n)?;
            let mut lines = String::new();
            for check in &report.checks {
                if check.pass {
                    lines.push_str(&format!("ok   {}\n", check.claim));
                } else {
                    lines.push_str(&format!(
                        "FAIL {}: expected {}, actual {}\n",
                        check.claim, check.expected, check.actual
                    ));
                }
            }
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            lines.push_str(&format!(
                "{} checks, {} failed\n",
                report.checks.len(),
                failed
            ));
            print!("{lines}");
            if let Some(path) = &out.output {
                let value = serde_json::to_value(&report).expect("serializable");
                files::write_text(path, &files::render_json(&value))?;
            }
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Random {
            n,
            seed,
            mode,
            lengths,
            out,
        } => {
            let (li, lj) = lengths.parse()?;
            let rect = Rect::new(Rat::zero(), li, Rat::zero(), lj)?;
            let mode = match mode {
                Mode::Generic => RandomMode::Generic,
                Mode::Grid => RandomMode::Grid,
            };
            let z = random_multiset2d(n, seed, rect, mode)?;
            eprintln!(
                "sampled {} points with composition shape {:?}",
                z.n(),
                z.composition().shape()
            );
            let value =
                serde_json::to_value(files::Multiset2DFile::from(&z)).expect("serializable");
            emit(&out, &files::render_json(&value))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
