use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    W,
    E,
    Cf,
    V,
}

#[derive(Debug, Parser)]
#[command(
    name = "primwords",
    version,
    about = "Primitive words in the free group F(A, B)"
)]
struct Cli {
    /// Output format; defaults to $PRIMWORDS_FORMAT, then text.
    #[arg(
        long,
        global = true,
        env = "PRIMWORDS_FORMAT",
        value_enum,
        default_value = "text"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Words, exponents, continued fraction and level of p/q.
    Word {
        #[arg(allow_hyphen_values = true)]
        rational: String,
        #[arg(long, value_enum)]
        scheme: Option<Scheme>,
    },
    /// Primitivity verdict for a word (A, B generators; a, b inverses).
    Check {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Palindromic factorization of E_{p/q}.
    Palindrome {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Farey sequence, level, distinguished neighbors and approximants.
    Farey {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Cutting word and strand census of a slope or a word.
    Cutseq {
        #[arg(
            required_unless_present = "word",
            conflicts_with = "word",
            allow_hyphen_values = true
        )]
        rational: Option<String>,
        #[arg(long)]
        word: Option<String>,
        /// lowest-a, bottom, middle, or a rotation offset
        #[arg(long, default_value = "lowest-a")]
        start: String,
        /// Write the strand diagram as SVG to this file.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
    },
    /// Whether W_{p/q} and W_{r/s} form a generating pair.
    Associates {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// All primitive classes up to a Farey level.
    Enumerate {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=20))]
        max_level: u32,
    },
    /// Compare the primitivity tests against the Whitehead oracle.
    CrossCheck {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=14))]
        max_len: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    let result = match cli.command {
        Command::Word { rational, scheme } => commands::word(&rational, scheme, fmt),
        Command::Check { word } => commands::check(&word, fmt),
        Command::Palindrome { rational } => commands::palindrome(&rational, fmt),
        Command::Farey { rational } => commands::farey(&rational, fmt),
        Command::Cutseq {
            rational,
            word,
            start,
            svg,
        } => commands::cutseq(
            rational.as_deref(),
            word.as_deref(),
            &start,
            svg.as_deref(),
            fmt,
        ),
        Command::Associates { first, second } => commands::associates(&first, &second, fmt),
        Command::Enumerate { max_level } => commands::enumerate(max_level as usize, fmt),
        Command::CrossCheck { max_len } => commands::cross_check(max_len as usize, fmt),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
