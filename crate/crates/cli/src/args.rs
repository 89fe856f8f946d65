use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lmu", version, about = "Λμ-calculus and stream combinatory logic toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a term and print its abstract syntax tree.
    Parse(TermInput),
    /// Parse a term and print it in canonical form.
    Fmt(TermInput),
    /// Normalize a term, printing each rewrite step.
    Reduce {
        #[command(flatten)]
        input: TermInput,
        #[command(flatten)]
        opts: EvalOpts,
        #[arg(long, value_enum, default_value_t = TraceFormat::Text)]
        trace: TraceFormat,
    },
    /// Decide convertibility of two terms within the budget.
    Eq {
        #[arg(long, value_enum)]
        calculus: Option<Calculus>,
        left: String,
        right: String,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Translate between Λμ and SCL.
    Translate {
        #[arg(long, conflicts_with = "to_lm", required_unless_present = "to_lm")]
        to_scl: bool,
        #[arg(long)]
        to_lm: bool,
        /// Also list the bracket-abstraction clauses used.
        #[arg(long)]
        clauses: bool,
        input: String,
    },
    /// Interpret a term in a stream combinatory algebra.
    Interp {
        #[command(flatten)]
        input: TermInput,
        #[arg(long, value_enum, default_value_t = Model::Term)]
        model: Model,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Run sampled law checks against a model.
    Check {
        #[arg(long, value_enum, default_value_t = Model::Term)]
        model: Model,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on the measure of sampled syntax.
        #[arg(long, default_value_t = 8)]
        measure: usize,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Example programs.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Subcommand, Debug)]
pub enum Demo {
    /// hd N0 ... Nn 'b, with projections as elements.
    Hd {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// nth N0 ... Nn 'b ci.
    Nth {
        #[arg(long, default_value_t = 3)]
        len: usize,
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Print a named encoding (hd, nth, Y, church(3), ...).
    Builtin { name: String },
}

#[derive(Args, Debug)]
pub struct TermInput {
    #[arg(long, value_enum)]
    pub calculus: Option<Calculus>,
    /// Term source, a .lmu/.scl file, or '-' for stdin.
    pub input: String,
}

#[derive(Args, Debug, Clone)]
pub struct EvalOpts {
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long)]
    pub max_size: Option<usize>,
    #[arg(long, value_enum, default_value_t = Profile::Fast)]
    pub budget_profile: Profile,
    #[arg(long, value_enum, default_value_t = Rules::Mu)]
    pub rules: Rules,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Calculus {
    Lm,
    Scl,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TraceFormat {
    Text,
    Structured,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Profile {
    Fast,
    Thorough,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Rules {
    Mu,
    Fst,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Model {
    Term,
    Trivial,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Extensional,
    Standard,
    All,
}

pub fn file_calculus(path: &Path) -> Option<Calculus> {
    match path.extension()?.to_str()? {
        "lmu" => Some(Calculus::Lm),
        "scl" => Some(Calculus::Scl),
        _ => None,
    }
}
