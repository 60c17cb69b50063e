use std::fs;
use std::path::Path;

use gpf_core::{Error, Multigraph, OrderPolicy, ParkingCandidate, RootedTree, TableOrder};

const DEFAULT_MAX_N: usize = 12;

/// Failure of one invocation, already mapped to its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input: unreadable file, parse error, bad flag value. Exit 2.
    Usage(String),
    /// A well-formed question whose answer is "no". Exit 1.
    Negative(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotParkingFunction { .. } | Error::NoExtension(_) => CliError::Negative(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn read(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn with_path(path: &str, e: Error) -> CliError {
    match CliError::from(e) {
        CliError::Usage(msg) => CliError::Usage(format!("{path}: {msg}")),
        other => other,
    }
}

pub fn load_graph(path: &str) -> CliResult<Multigraph> {
    Multigraph::parse(&read(path)?).map_err(|e| with_path(path, e))
}

pub fn load_tree(g: &Multigraph, path: &str) -> CliResult<RootedTree> {
    RootedTree::parse(g, &read(path)?).map_err(|e| with_path(path, e))
}

/// The contents of the file `arg` when one exists, otherwise `arg` itself.
pub fn inline_or_file(arg: &str) -> CliResult<String> {
    if Path::new(arg).is_file() {
        read(arg)
    } else {
        Ok(arg.to_string())
    }
}

pub fn load_candidate(g: &Multigraph, arg: &str) -> CliResult<ParkingCandidate> {
    let b: ParkingCandidate = inline_or_file(arg)?.parse()?;
    if b.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: b.len() }.into());
    }
    Ok(b)
}

/// Built-in names, or `table:FILE`.
pub fn load_policy(g: &Multigraph, spec: &str) -> CliResult<OrderPolicy> {
    match spec.strip_prefix("table:") {
        Some(path) => Ok(OrderPolicy::Table(TableOrder::parse(g, &read(path)?).map_err(|e| with_path(path, e))?)),
        None => spec.parse().map_err(|_| {
            CliError::Usage(format!(
                "unknown policy `{spec}`; expected bf, df, df-rtl, va, path:lex|bf|va|incr|sum|edgelex or table:FILE"
            ))
        }),
    }
}

/// Refuses exponential work past `GPF_MAX_N` non-root vertices.
pub fn check_cap(n: usize, what: &str) -> CliResult<()> {
    let cap = match std::env::var("GPF_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("GPF_MAX_N must be a number, got `{v}`")))?,
        Err(_) => DEFAULT_MAX_N,
    };
    if n > cap {
        return Err(CliError::Usage(format!("{what} needs n <= {cap} (GPF_MAX_N), got n = {n}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_exit_classes() {
        let negative = Error::NotParkingFunction { step: 1, stuck: vec![1] };
        assert!(matches!(CliError::from(negative), CliError::Negative(_)));
        assert!(matches!(CliError::from(Error::NotSymmetric), CliError::Usage(_)));
    }

    #[test]
    fn policy_names() {
        let g = Multigraph::complete(2);
        for name in ["bf", "df", "df-rtl", "va", "path:lex", "path:edgelex"] {
            assert_eq!(load_policy(&g, name).unwrap().name(), name);
        }
        assert!(matches!(load_policy(&g, "path:nope"), Err(CliError::Usage(_))));
        assert!(matches!(load_policy(&g, "table:/no/such/file"), Err(CliError::Usage(_))));
    }

    #[test]
    fn inline_candidates_are_length_checked() {
        let g = Multigraph::complete(2);
        assert_eq!(load_candidate(&g, "0 1").unwrap(), ParkingCandidate::new(vec![0, 1]));
        assert!(matches!(load_candidate(&g, "0"), Err(CliError::Usage(_))));
    }
}
