mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::CliError;

/// Parking functions and spanning trees of directed multigraphs.
#[derive(Parser)]
#[command(name = "gpf", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMethod {
    Burning,
    Definitional,
    Phi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    MatrixTree,
    Exhaustive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Pfs,
    Trees,
    Pairs,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether PF is a parking function of GRAPH.
    Check {
        graph: String,
        /// Values `b_1 .. b_n`, inline or as a file.
        pf: String,
        #[arg(long, value_enum, default_value_t = CheckMethod::Burning)]
        method: CheckMethod,
        /// Tree-order policy used by `--method phi`.
        #[arg(long, default_value = "bf")]
        policy: String,
    },
    /// Grow the spanning tree of a parking function.
    ToTree {
        graph: String,
        pf: String,
        #[arg(long, default_value = "bf")]
        policy: String,
        /// Also print each step as a comment.
        #[arg(long)]
        trace: bool,
    },
    /// Read a spanning tree back as a parking function.
    ToPf {
        graph: String,
        tree: String,
        #[arg(long, default_value = "bf")]
        policy: String,
    },
    /// List parking functions, spanning trees, or matched pairs.
    Enumerate {
        graph: String,
        #[arg(long, value_enum, default_value_t = What::Pfs)]
        what: What,
        #[arg(long, default_value = "bf")]
        policy: String,
    },
    /// Count spanning trees rooted at 0.
    Count {
        graph: String,
        #[arg(long, value_enum, default_value_t = CountMethod::MatrixTree)]
        method: CountMethod,
    },
    /// Check both round trips over every tree and parking function.
    Verify {
        graph: String,
        #[arg(long, default_value = "bf")]
        policy: String,
    },
    /// Print the vertex order a policy assigns to a tree.
    Order {
        tree: String,
        graph: String,
        #[arg(long, default_value = "bf")]
        policy: String,
    },
    /// Sandpile views on symmetric graphs.
    Sandpile {
        #[command(subcommand)]
        command: SandpileCommand,
    },
    /// Labeled Dyck paths of classical parking functions.
    Dyck {
        #[command(subcommand)]
        command: DyckCommand,
    },
}

#[derive(Subcommand)]
pub enum SandpileCommand {
    /// Compare burning waves with breadth-first tree heights.
    Waves { graph: String, pf: String },
    /// External activity of a spanning tree.
    Activity {
        graph: String,
        tree: String,
        /// File of `rank R I J` lines; lexicographic when absent.
        #[arg(long)]
        edge_order: Option<String>,
    },
    /// Path from the root grown along smallest edges.
    Greedy {
        graph: String,
        #[arg(long)]
        edge_order: Option<String>,
    },
    /// The configuration `d - b`, and whether it is allowed.
    Config { graph: String, pf: String },
    /// Hamiltonian paths of K_{n+1}: permutations and external activity.
    Separate { n: usize },
}

#[derive(Subcommand)]
pub enum DyckCommand {
    /// Parking function to labeled Dyck path.
    Encode { pf: String },
    /// Labeled Dyck path, e.g. "E(1) E(2) N E(3) N N", to its tree.
    Decode { path: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { graph, pf, method, policy } => commands::check(&graph, &pf, method, &policy),
        Command::ToTree { graph, pf, policy, trace } => commands::to_tree(&graph, &pf, &policy, trace),
        Command::ToPf { graph, tree, policy } => commands::to_pf(&graph, &tree, &policy),
        Command::Enumerate { graph, what, policy } => commands::enumerate(&graph, what, &policy),
        Command::Count { graph, method } => commands::count(&graph, method),
        Command::Verify { graph, policy } => commands::verify(&graph, &policy),
        Command::Order { tree, graph, policy } => commands::order(&tree, &graph, &policy),
        Command::Sandpile { command } => commands::sandpile(command),
        Command::Dyck { command } => commands::dyck(command),
    };
    match result {
        Ok(report) => {
            report.print(cli.format);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Negative(msg)) => {
            commands::Report::negative(&msg).print(cli.format);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
