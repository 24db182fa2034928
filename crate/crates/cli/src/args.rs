use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use differential_lab::Selector;
use splitting_types::SplittingType;
use wood_engine::Pattern;

#[derive(Debug, Parser)]
#[command(name = "hbn", version, about = "Splitting strata of curves on Hirzebruch surfaces")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Prime field characteristic.
    #[arg(long, global = true, default_value_t = 10007)]
    pub p: u64,
    /// RNG seed.
    #[arg(long, global = true, env = "HBN_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub delta: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List strata (e, f) with their conditions and predicted dimensions.
    Enumerate(EnumerateArgs),
    /// Sample a pair on a stratum and certify the curve it cuts out.
    Sample(SampleArgs),
    /// Rank of the differential of the determinant map.
    Dominance(DominanceArgs),
    /// Triple bounds, conjecture polytopes and abundance.
    Section5(Section5Args),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<SplittingType>,
    /// Inclusive entry bounds `lo,hi` for e and f.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    /// Degree of the line bundle with pushforward of type e.
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Option<i64>,
    /// Exact number of global sections of that line bundle.
    #[arg(long)]
    pub sections: Option<i64>,
}

#[derive(Debug, Args)]
pub struct StratumArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<SplittingType>,
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<SplittingType>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub stratum: StratumArgs,
    #[arg(long, default_value = "FULL")]
    pub pattern: Pattern,
    /// Attempts before giving up.
    #[arg(long, default_value_t = 8)]
    pub retries: usize,
    /// Points of the curve for the cokernel rank check.
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long)]
    pub curve_out: Option<PathBuf>,
    #[arg(long)]
    pub pair_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    /// `P_1` and `P_k` on the SUT tangent space.
    Sq,
    /// Image of `T′` on `P_1, …, P_k`.
    Main,
    /// Evaluations at the special point with `T⌞`.
    Is,
    /// Differential of multiplication of binary forms.
    Product,
}

#[derive(Debug, Args)]
pub struct DominanceArgs {
    #[command(flatten)]
    pub stratum: StratumArgs,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long)]
    pub selector: Option<Selector>,
    #[arg(long, value_enum)]
    pub lemma: Option<Lemma>,
    /// Factor degrees for the product lemma.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Vec<usize>,
    /// Evaluate at a pair read from a JSON file instead of sampling.
    #[arg(long)]
    pub pair: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Section5Args {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Compare the line-bundle polytope with the realized types of the class.
    #[arg(long)]
    pub abundance: bool,
    /// List subadditive scrollar invariants up to `--bound`.
    #[arg(long)]
    pub oo: bool,
    /// List line-bundle types over the invariants `--a`.
    #[arg(long)]
    pub ol: bool,
    /// Check the triple inequality for `--d`, `--e`, `--f` at genus `--g`.
    #[arg(long)]
    pub general_bound: bool,
    /// Witness that a general k-cover of genus `--g` is not abundant.
    #[arg(long)]
    pub general_cover: bool,
    #[arg(long)]
    pub bound: Option<i64>,
    #[arg(long)]
    pub e_bound: Option<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<SplittingType>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<SplittingType>,
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<SplittingType>,
    #[arg(long)]
    pub g: Option<i64>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let parse = |v: &str| v.trim().replace('\u{2212}', "-").parse::<i64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}
