use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "cohocolim", version, about = "Homotopy colimits of diagrams over finite posets, with exact certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Highest simplicial degree to enumerate (default: longest chain).
    #[arg(long, global = true)]
    pub maxdim: Option<usize>,
    /// Allow a maximal degree above the size guard.
    #[arg(long, global = true)]
    pub force_dim: bool,
    /// Node budget for isomorphism searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report file for `resolve` and `verify`, simplicial set file for `compute`.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the words of `F_•P(c, d)` degree by degree.
    Resolve {
        #[arg(long)]
        poset: String,
        c: String,
        d: String,
    },
    /// Run a suite of exhaustive law checks on a poset.
    Verify {
        #[arg(long)]
        poset: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Compute a model of the homotopy colimit of a diagram.
    Compute {
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum)]
        model: Model,
        /// Simplicial complex for `total_space`.
        #[arg(long)]
        complex: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Comparison,
    Decomposition,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Model {
    Cyl,
    HocolimBk,
    HocolimCoherent,
    Rectify,
    TotalSpace,
}

/// Everything that determines a run, embedded in every report.
#[derive(Serialize, Debug, Clone)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<Model>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    pub maxdim: Option<usize>,
    pub force_dim: bool,
    pub budget: u64,
    pub out: Option<String>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(cli: &Cli) -> RunConfig {
        let c = &cli.common;
        let mut cfg = RunConfig {
            command: String::new(),
            inputs: Vec::new(),
            suite: None,
            model: None,
            objects: Vec::new(),
            maxdim: c.maxdim,
            force_dim: c.force_dim,
            budget: c.budget,
            out: c.out.clone(),
            format: c.format,
        };
        match &cli.command {
            Command::Resolve { poset, c, d } => {
                cfg.command = "resolve".into();
                cfg.inputs = vec![poset.clone()];
                cfg.objects = vec![c.clone(), d.clone()];
            }
            Command::Verify { poset, suite } => {
                cfg.command = "verify".into();
                cfg.inputs = vec![poset.clone()];
                cfg.suite = Some(*suite);
            }
            Command::Compute { diagram, model, complex } => {
                cfg.command = "compute".into();
                cfg.inputs = std::iter::once(diagram.clone()).chain(complex.clone()).collect();
                cfg.model = Some(*model);
            }
        }
        cfg
    }
}
