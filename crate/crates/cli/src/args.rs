use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hopf",
    version,
    about = "Exact computations in the free bialgebra k<S>, its representations and its Sweedler dual"
)]
pub struct Cli {
    /// Alphabet declaration, e.g. "a:L,b:L,g:G" (G = group-like, L = primitive)
    #[arg(long, global = true)]
    pub alphabet: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coproduct Δ(P)
    Coprod {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Product P·Q
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Counit ε(P)
    Counit {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Antipode S(P); needs an all-primitive alphabet
    Antipode {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Pairing ⟨f, P⟩
    Pair {
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Convolution f ∗ h dual to the coproduct
    Conv {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Tensor product of two matrix representations
    Tensor {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Direct sum of two matrix representations
    Dsum {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// ρ(P) for a matrix representation, or f(P) for a linear representation
    Eval {
        #[arg(allow_hyphen_values = true)]
        rep: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Hankel window (f(uv)) with |u| ≤ p, |v| ≤ s
    Hankel(WindowArgs),
    /// Exact rank of a Hankel window
    Rank(WindowArgs),
    /// Learn a minimal linear representation
    Learn {
        #[command(flatten)]
        series: SeriesArg,
        /// Exploration length L; the rank must be stable between L and L+1
        #[arg(long, default_value_t = 3)]
        explore: usize,
    },
    /// Split f(xy) = Σ gᵢ(x)hᵢ(y)
    Split(SeriesArg),
    /// Transposed antipode f ∘ S
    #[command(name = "dualS")]
    DualS(SeriesArg),
    /// Check coassociativity on all words up to --maxlen
    CheckCoassoc(CheckArgs),
    /// Check the antipode axiom on all words up to --maxlen
    CheckAntipode(CheckArgs),
    /// Check associativity of the dual convolution on indicator series
    CheckDualAssoc(CheckArgs),
    /// Check the convolution representation against the splitting sum
    CheckConvOracle(CheckArgs),
}

#[derive(Debug, Args)]
pub struct SeriesArg {
    /// Series: polynomial text (finite support), inline LinRep JSON, a .json
    /// file path, or @file with polynomial text
    #[arg(long, allow_hyphen_values = true)]
    pub series: String,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[command(flatten)]
    pub series: SeriesArg,
    /// Prefix and suffix length bounds as "p,s"
    #[arg(long, default_value = "2,2")]
    pub hankel: String,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 5)]
    pub maxlen: usize,
}
