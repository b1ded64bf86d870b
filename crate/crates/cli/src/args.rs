use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fareyforge", version, about = "Generators, validators, minor searches and the Farey engine")]
pub struct Cli {
    /// Output format for graph-valued results.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized generators.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Node budget of each search. FAREYFORGE_BUDGET_NODES caps it.
    #[arg(long, global = true)]
    pub budget_nodes: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit a generated graph.
    Generate(GenArgs),
    /// Edge connectivity of a graph or of a vertex pair.
    Lambda {
        #[arg(long)]
        graph: String,
        #[arg(long, requires = "v")]
        u: Option<String>,
        #[arg(long, requires = "u")]
        v: Option<String>,
    },
    /// All bonds up to a size.
    Bonds {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        max_size: usize,
    },
    /// Classes of pairwise edge connectivity at least k, and the quotient.
    Classes {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// The S-tree induced by a spanning tree.
    Stree {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        tree: String,
    },
    /// Pruning rounds, branch order and binary embeddings of a rooted tree.
    Prune {
        /// Rooted tree document.
        #[arg(long, conflicts_with_all = ["graph", "root"])]
        tree: Option<String>,
        /// Tree graph, rooted at --root.
        #[arg(long, requires = "root")]
        graph: Option<String>,
        #[arg(long)]
        root: Option<String>,
        /// Height of the binary tree to embed; defaults to the branch order.
        #[arg(long)]
        height: Option<usize>,
    },
    /// Star or comb attached to a vertex set.
    Starcomb {
        #[arg(long)]
        graph: String,
        /// Comma-separated vertex tokens.
        #[arg(long, value_delimiter = ',')]
        u: Vec<String>,
        #[arg(long)]
        k: usize,
    },
    /// Search for a minor model.
    FindMinor {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        /// PATTERN=HOST: the branch set of PATTERN must contain HOST.
        #[arg(long)]
        pin: Vec<String>,
    },
    /// Validate a model document against its host.
    VerifyModel {
        #[arg(long)]
        host: String,
        #[arg(long)]
        model: String,
    },
    /// Build a gadget from payloads, or check a graph against a gadget.
    Gadget {
        #[arg(long)]
        kind: String,
        #[arg(long, conflicts_with = "graph")]
        payload: Vec<String>,
        /// Number of head-side edges of each arrow.
        #[arg(long, default_value_t = 1)]
        multiplicity: usize,
        #[arg(long, requires = "k")]
        graph: Option<String>,
        /// ROLE=VERTEX, e.g. u=a.
        #[arg(long)]
        role: Vec<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build a halved Farey graph as a minor, order by order.
    Engine {
        #[arg(long)]
        host: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: u32,
        /// Wall-clock limit such as 10s or 500ms.
        #[arg(long)]
        budget: Option<String>,
        /// Write the full trace document here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// DOT drawing of a generated graph or a graph document.
    Render {
        #[command(flatten)]
        gen: GenArgs,
        /// Accepted for symmetry; render always emits DOT.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// halved-farey, farey-truncation, complete, complete-bipartite, cycle,
    /// path, full-tree, tree-join, random or file.
    pub family: String,
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    /// Edge probability of random graphs.
    #[arg(long)]
    pub p: Option<f64>,
    /// Largest multiplicity of random graphs.
    #[arg(long, default_value_t = 1)]
    pub mult: usize,
    /// Graph document, for the `file` family.
    #[arg(long)]
    pub graph: Option<String>,
}
