//! Command-line grammar.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use bimac::bisym::BiBasis;
use bimac::nabla::NablaKind;
use bimac::partitions::{PairLabel, PartitionError, SuperPartition};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "bimac",
    version,
    about = "Exact double Macdonald polynomials, their Kostka coefficients and superspace checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomly sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest degree checked by `verify`, or largest m for `sweep`.
    #[arg(long = "max-n", global = true)]
    pub max_n: Option<usize>,
    /// Number of x variables (fermionic degree).
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Total number of variables for `evaluate`.
    #[arg(long = "N", global = true)]
    pub n_vars: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Expand a double Macdonald polynomial or a superpolynomial.
    Expand {
        /// A pair such as `2,1|1` or a superpartition such as `1,0;2`.
        label: Label,
        #[arg(value_enum, ignore_case = true, default_value_t = Family::P)]
        family: Family,
        /// SM, SS, SP, PP, PM, MM, or SSCHUR for a super-Schur expansion.
        basis: Option<BasisChoice>,
    },
    /// Print the Kostka matrix of one degree.
    Kostka {
        /// Pair degree, or |Λ*| for the super variant.
        degree: usize,
        #[arg(value_enum, ignore_case = true, default_value_t = Variant::Double)]
        variant: Variant,
    },
    /// Apply a nabla operator to s_{∅,(n)} and report its pairings.
    Nabla {
        degree: usize,
        /// B, barB or sqrtB.
        #[arg(default_value = "B")]
        operator: NablaKind,
    },
    /// Evaluate at the principal point by the closed form and by substitution.
    Evaluate { label: Label },
    /// Run a named verification suite and emit a report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Compare P_{δ^m+λ; μ} with the stable P_{λ,μ} as m grows.
    Sweep { label: PairLabel },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "J")]
    J,
    #[value(name = "H")]
    H,
    #[value(name = "Htilde")]
    Htilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::J => "J",
            Family::H => "H",
            Family::Htilde => "Htilde",
        };
        f.write_str(name)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Double,
    Super,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    #[value(name = "appendixD")]
    AppendixD,
    Factorization,
    Scalar,
    Norm,
    Duality,
    Lr4,
    Evaluation,
    Kostka,
    Nabla,
    Kernel,
    Lemdo,
    Stability,
    Con1,
    Con2,
    Con3,
    Sym1,
    Kos1,
    Kdiffm,
    #[value(name = "genEval")]
    GenEval,
    Psi,
    Jack,
    Limits,
    Stable,
    All,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

/// A pair label or a superpartition, told apart by `|` versus `;`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Pair(PairLabel),
    Super(SuperPartition),
}

impl FromStr for Label {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains(';') {
            Ok(Label::Super(s.parse()?))
        } else if s.contains('|') {
            Ok(Label::Pair(s.parse()?))
        } else {
            Err(PartitionError::Parse(format!("{s} (expected `λ|μ` or `Λ^a;Λ^s`)")))
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Pair(p) => p.fmt(f),
            Label::Super(s) => s.fmt(f),
        }
    }
}

/// Target of an expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisChoice {
    Two(BiBasis),
    SuperSchur,
}

impl FromStr for BasisChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("sschur") {
            Ok(BasisChoice::SuperSchur)
        } else {
            s.parse().map(BasisChoice::Two)
        }
    }
}

impl fmt::Display for BasisChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisChoice::Two(b) => b.fmt(f),
            BasisChoice::SuperSchur => f.write_str("SSCHUR"),
        }
    }
}
