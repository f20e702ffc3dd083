use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qnetcap::chain::{self, ChainSpec};
use qnetcap::channel::{self, ChannelSpec, FIBER_DB_PER_KM};
use qnetcap::sweep::{self, LossRange, MultibandComparison, SweepSpec, Table};
use qnetcap::{flow, parse_network, report, single_path, Error};

#[derive(Parser)]
#[command(name = "qnetcap", version, about = "Capacities of quantum repeater chains and networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Capacity of a single channel.
    Channel(ChannelArgs),
    /// Capacity of a repeater chain.
    Chain(ChainArgs),
    /// Single-path or multi-path capacity of a network file.
    Network(NetworkArgs),
    /// Equidistant-repeater capacity versus total loss, as CSV.
    Sweep(SweepArgs),
    /// Multiband lines against repeater chains, as CSV.
    CompareMultiband(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lossy,
    Amplifier,
    Dephasing,
    Erasure,
    MultibandLossy,
}

#[derive(clap::Args)]
struct ChannelArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Transmissivity.
    #[arg(long, conflicts_with_all = ["loss_db", "length_km"])]
    eta: Option<f64>,
    /// Loss in dB, instead of --eta.
    #[arg(long, conflicts_with = "length_km")]
    loss_db: Option<f64>,
    /// Fiber length in km, instead of --eta.
    #[arg(long)]
    length_km: Option<f64>,
    #[arg(long, default_value_t = FIBER_DB_PER_KM)]
    db_per_km: f64,
    #[arg(long)]
    gain: Option<f64>,
    /// Dephasing or erasure probability.
    #[arg(long)]
    p: Option<f64>,
    /// Full qudit dephasing distribution.
    #[arg(long, value_delimiter = ',', conflicts_with = "p")]
    probs: Option<Vec<f64>>,
    #[arg(long)]
    dim: Option<u32>,
    #[arg(long)]
    bands: Option<u32>,
}

#[derive(clap::Args)]
struct ChainArgs {
    /// JSON array of channel objects.
    #[arg(long)]
    file: Option<PathBuf>,
    /// One channel object per link, e.g. '{"kind":"lossy","eta":0.5}'.
    #[arg(long = "link")]
    links: Vec<String>,
    /// Total loss of an equidistant lossy line.
    #[arg(long, conflicts_with_all = ["file", "links", "eta_total"])]
    loss_db: Option<f64>,
    /// Total transmissivity of an equidistant lossy line.
    #[arg(long, conflicts_with_all = ["file", "links"])]
    eta_total: Option<f64>,
    #[arg(long)]
    repeaters: Option<u32>,
    /// Report the repeaters (with a line) or per-link loss (alone) needed for
    /// this rate.
    #[arg(long, conflicts_with_all = ["file", "links", "repeaters"])]
    target_bits: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Single,
    Multi,
}

#[derive(clap::Args)]
struct NetworkArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "single")]
    mode: Mode,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 0.0)]
    start: f64,
    #[arg(long, default_value_t = 50.0)]
    stop: f64,
    #[arg(long, default_value_t = 1.0)]
    step: f64,
    /// Output CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SweepArgs {
    #[command(flatten)]
    range: RangeArgs,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,10,100")]
    repeaters: Vec<u32>,
}

#[derive(clap::Args)]
struct CompareArgs {
    #[command(flatten)]
    range: RangeArgs,
    #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
    bands: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    repeaters: Vec<u32>,
}

enum Failure {
    Input(String),
    NoRoute,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoRoute => Failure::NoRoute,
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Channel(args) => channel_cmd(args),
        Command::Chain(args) => chain_cmd(args),
        Command::Network(args) => network_cmd(args),
        Command::Sweep(args) => sweep_cmd(args),
        Command::CompareMultiband(args) => compare_cmd(args),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NoRoute) => {
            eprintln!("no route between alice and bob");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Input(format!("--{flag} is required for {kind} channels")))
}

fn channel_cmd(args: ChannelArgs) -> Outcome {
    let transmissivity = || -> Result<f64, Failure> {
        if let Some(db) = args.loss_db {
            Ok(channel::db_to_transmissivity(db)?)
        } else if let Some(km) = args.length_km {
            Ok(channel::fiber_transmissivity(km, args.db_per_km)?)
        } else {
            required(args.eta, "eta", "lossy")
        }
    };
    let spec = match args.kind {
        Kind::Lossy => ChannelSpec::lossy(transmissivity()?),
        Kind::Amplifier => ChannelSpec::amplifier(required(args.gain, "gain", "amplifier")?),
        Kind::Dephasing => match (&args.probs, args.p) {
            (Some(probs), _) => ChannelSpec::Dephasing { probs: probs.clone() },
            (None, Some(p)) => {
                let dim = args.dim.unwrap_or(2);
                if dim != 2 {
                    return Err(Failure::Input("--p describes qubit dephasing; use --probs for qudits".into()));
                }
                ChannelSpec::dephasing(p)
            }
            (None, None) => return Err(Failure::Input("--p or --probs is required for dephasing channels".into())),
        },
        Kind::Erasure => ChannelSpec::Erasure {
            p: required(args.p, "p", "erasure")?,
            dim: args.dim.unwrap_or(2),
        },
        Kind::MultibandLossy => {
            ChannelSpec::multiband_lossy(transmissivity()?, required(args.bands, "bands", "multiband")?)
        }
    };
    for warning in spec.warnings() {
        eprintln!("warning: {warning}");
    }
    Ok(format!("{}\n", report::capacity_line(spec.capacity()?)))
}

fn chain_cmd(args: ChainArgs) -> Outcome {
    let total = match (args.loss_db, args.eta_total) {
        (Some(db), _) => Some(channel::db_to_transmissivity(db)?),
        (None, eta) => eta,
    };
    if let Some(target) = args.target_bits {
        return match total {
            Some(eta) => {
                let n = chain::min_repeaters_for_rate(eta, target)?;
                Ok(format!("repeaters: {n}\n"))
            }
            None => {
                let db = chain::max_link_loss_for_rate(target)?;
                let km = channel::fiber_length_km(db, FIBER_DB_PER_KM)?;
                Ok(format!("max link loss: {db:.9} dB\nmax link length: {km:.9} km\n"))
            }
        };
    }
    if let Some(eta) = total {
        let n = args.repeaters.unwrap_or(0);
        let capacity = chain::equidistant_lossy_capacity(eta, n)?;
        let link_db = channel::transmissivity_to_db(chain::equidistant_link_transmissivity(eta, n)?)?;
        return Ok(format!(
            "capacity: {}\nlink loss: {link_db:.9} dB\n",
            report::capacity_line(capacity)
        ));
    }

    let mut links: Vec<ChannelSpec> = Vec::new();
    if let Some(path) = &args.file {
        let text = read_input(path)?;
        links = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    for link in &args.links {
        links.push(serde_json::from_str(link).map_err(|e| Failure::Input(format!("--link {link}: {e}")))?);
    }
    let result = chain::chain_capacity(&ChainSpec::new(links)?)?;
    Ok(report::chain_text(&result))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn network_cmd(args: NetworkArgs) -> Outcome {
    let net = parse_network(&read_input(&args.file)?)?;
    match args.mode {
        Mode::Single => {
            let result = single_path::widest_path(&net)?;
            Ok(if args.json { json(&result) } else { report::route_text(&result) })
        }
        Mode::Multi => {
            let result = flow::max_flow(&net);
            Ok(if args.json { json(&result) } else { report::flow_text(&result) })
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(table: &Table, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            table.write_csv(&mut file)?;
            file.flush()?;
            Ok(String::new())
        }
        None => Ok(table.to_csv()),
    }
}

fn sweep_cmd(args: SweepArgs) -> Outcome {
    let spec = SweepSpec {
        loss_db: LossRange::new(args.range.start, args.range.stop, args.range.step)?,
        repeater_counts: args.repeaters,
    };
    emit(&sweep::sweep(&spec)?, args.range.out.as_deref())
}

fn compare_cmd(args: CompareArgs) -> Outcome {
    let spec = MultibandComparison {
        loss_db: LossRange::new(args.range.start, args.range.stop, args.range.step)?,
        bands: args.bands,
        repeater_counts: args.repeaters,
    };
    emit(&sweep::compare_multiband(&spec)?, args.range.out.as_deref())
}
