use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use slider_rigidity::asymptotics::ThresholdReport;
use slider_rigidity::cores::core_stats;
use slider_rigidity::experiments::{compare, emit_csv, emit_svg, run_sweep, Measures, SweepConfig};
use slider_rigidity::orientation::{find_orientation, max_orientable_edges, OrientationOutcome};
use slider_rigidity::rigidity::rigid_components;
use slider_rigidity::typed_graph::{read_graph, sample_er, write_graph, ErConfig};
use slider_rigidity::{Error, Result, TypedGraph};

#[derive(Parser)]
#[command(
    name = "slider-rigidity",
    version,
    about = "Rigidity of random graphs with sliders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a typed G(n, c/n) and write it in the edge-list format
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Orient a graph or report a dense subgraph that prevents it
    Orient { file: PathBuf },
    /// 2.5-core and 2.5+1.5-core statistics
    Cores {
        file: PathBuf,
        /// Print the peeling sequence
        #[arg(long)]
        trace: bool,
    },
    /// Rigid component decomposition
    RigidComponents { file: PathBuf },
    /// Threshold values and limit fractions
    Thresholds {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Monte-Carlo sweep over c
    Sweep {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        c_min: f64,
        #[arg(long)]
        c_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "orient,cores,rigid")]
        measures: Measures,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<TypedGraph> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_graph(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn join(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { n, c, q, seed, out } => {
            let g = sample_er(&ErConfig::new(n, c, q, seed))?;
            fs::write(&out, write_graph(&g)).map_err(|source| Error::Io { path: out, source })?;
        }
        Command::Orient { file } => {
            let g = load(&file)?;
            match find_orientation(&g) {
                OrientationOutcome::Orientable(o) => {
                    println!("orientable: yes");
                    for (e, &(u, v)) in g.edges().iter().enumerate() {
                        let head = o.head(e).expect("total orientation");
                        let tail = if head == v { u } else { v };
                        println!("{tail} -> {head}");
                    }
                }
                OrientationOutcome::Dense(w) => {
                    let max = max_orientable_edges(&g);
                    println!("orientable: no");
                    println!(
                        "witness: {} vertices (n1 = {}, n2 = {}), {} edges > capacity {}",
                        w.size(),
                        w.n1,
                        w.n2,
                        w.m,
                        w.capacity()
                    );
                    println!("witness vertices: {}", join(&w.vertices));
                    println!(
                        "max orientable edges: {} of {} (gap {})",
                        max.size,
                        g.m(),
                        max.gap()
                    );
                }
            }
        }
        Command::Cores { file, trace } => {
            let g = load(&file)?;
            let s = core_stats(&g, trace);
            println!("n1_core {}", s.n1_core);
            println!("n2_core {}", s.n2_core);
            println!("m_core {}", s.m_core);
            println!("n_core_plus {}", s.n_core_plus);
            if trace {
                println!("# removed vertex, type, degree");
                for step in &s.peel_trace {
                    println!(
                        "{} {} {}",
                        step.vertex,
                        step.vertex_type.digit(),
                        step.degree
                    );
                }
            }
        }
        Command::RigidComponents { file } => {
            let g = load(&file)?;
            let d = rigid_components(&g);
            println!("# size n1 n2 m connected vertices");
            for comp in &d.components {
                println!(
                    "{} {} {} {} {} {}",
                    comp.size(),
                    comp.n1,
                    comp.n2,
                    comp.edges.len(),
                    if comp.connected { "yes" } else { "no" },
                    join(&comp.vertices)
                );
            }
            println!("isolated {}", d.isolated.len());
            println!("R_n {}", d.largest_size());
            println!("R_n^C {}", d.largest_connected_size());
        }
        Command::Thresholds { q, c, json } => {
            let report = ThresholdReport::new(q, c)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Sweep {
            q,
            c_min,
            c_max,
            steps,
            n,
            trials,
            seed,
            out,
            measures,
            svg,
        } => {
            let mut cfg = SweepConfig::new(
                q,
                SweepConfig::linspace(c_min, c_max, steps)?,
                n,
                trials,
                seed,
            );
            cfg.measures = measures;
            let records = run_sweep(&cfg)?;
            emit_csv(&records, &out)?;
            if let Some(path) = svg {
                emit_svg(&compare(&records)?, &path)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
