use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "gt", version, about = "Finite group generation toolkit")]
pub struct Cli {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomised phase.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Upper bound on worker threads inside searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, prime graph, exponent, d(G), structure flags and chief series.
    Analyze {
        /// A catalog token such as `S 3`, or generator text given inline or as a file path.
        spec: String,
    },
    /// Search for a bounded generated subgroup preserving an invariant along a series.
    Witness {
        mode: WitnessMode,
        spec: String,
        #[arg(long)]
        max_gens: Option<usize>,
        /// Subgroup X: a group spec or one of trivial, center, whole, "sylow p".
        #[arg(long = "X", alias = "x")]
        x: Option<String>,
        /// Subgroup C with X ≤ C, in the same forms as --X.
        #[arg(long = "C", alias = "c")]
        c: Option<String>,
        #[arg(long)]
        series: Option<SeriesChoice>,
    },
    /// Build a crown-based power or verify its generation formulas.
    Crown {
        action: CrownAction,
        #[arg(long = "L", alias = "l")]
        l: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Quotient towers along a normal chain.
    Tower {
        #[command(subcommand)]
        action: TowerAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum TowerAction {
    /// Build the tower and search for a level-coherent witness.
    Run {
        spec: String,
        #[arg(long, default_value = "chief")]
        chain: SeriesChoice,
        #[arg(long, default_value = "prime-graph")]
        target: WitnessMode,
        #[arg(long)]
        max_gens: Option<usize>,
        #[arg(long = "X", alias = "x")]
        x: Option<String>,
        #[arg(long = "C", alias = "c")]
        c: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessMode {
    PrimeGraph,
    IndexPrimes,
    Exponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesChoice {
    Chief,
    Trivial,
    Derived,
    Sylow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CrownAction {
    Build,
    Verify,
}

impl WitnessMode {
    pub fn name(self) -> &'static str {
        match self {
            WitnessMode::PrimeGraph => "prime-graph",
            WitnessMode::IndexPrimes => "index-primes",
            WitnessMode::Exponent => "exponent",
        }
    }
}

impl SeriesChoice {
    pub fn name(self) -> &'static str {
        match self {
            SeriesChoice::Chief => "chief",
            SeriesChoice::Trivial => "trivial",
            SeriesChoice::Derived => "derived",
            SeriesChoice::Sylow => "sylow",
        }
    }
}

impl CrownAction {
    pub fn name(self) -> &'static str {
        match self {
            CrownAction::Build => "build",
            CrownAction::Verify => "verify",
        }
    }
}
