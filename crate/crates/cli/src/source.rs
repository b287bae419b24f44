use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use leechlab::families::FamilySpec;
use leechlab::io::{parse_edge_list, parse_graph6};
use leechlab::Graph;

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `.g6` files are graph6, anything else an edge list.
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Named family instead of a graph file (cycle:10, knn:5, kmn:3x4,
    /// wheel:6, complete:4, complete-minus-edge:5, path:5, prism, beineke:1).
    #[arg(long)]
    pub family: Option<String>,
    /// Input format of graph files.
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

/// Where a graph came from.
pub enum Source {
    Family(FamilySpec),
    File(PathBuf),
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Family(spec) => spec.to_string(),
            Source::File(path) => path.display().to_string(),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::no_input(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| Failure::no_input(format!("{}: {e}", path.display())))
}

impl SourceArgs {
    /// Resolves `--family` or the given file into a graph.
    pub fn load(&self, file: Option<&Path>) -> Result<(Source, Graph), Failure> {
        match (&self.family, file) {
            (Some(_), Some(path)) => Err(Failure::usage(format!(
                "both --family and a graph file ({}) given",
                path.display()
            ))),
            (None, None) => Err(Failure::usage("no graph given: pass a graph file or --family")),
            (Some(text), None) => {
                let spec: FamilySpec = text.parse().map_err(|e| Failure::usage(format!("{e}")))?;
                let graph = spec.build().map_err(|e| Failure::usage(e.to_string()))?;
                Ok((Source::Family(spec), graph))
            }
            (None, Some(path)) => {
                let text = read_text(path)?;
                let graph6 = match self.format {
                    Format::Graph6 => true,
                    Format::EdgeList => false,
                    Format::Auto => path.extension().is_some_and(|e| e == "g6"),
                };
                let graph = if graph6 {
                    let (line, record) = text
                        .lines()
                        .enumerate()
                        .find(|(_, l)| !l.trim().is_empty())
                        .ok_or_else(|| Failure::data(format!("{}: no graph6 record", path.display())))?;
                    parse_graph6(record)
                        .map_err(|e| Failure::data(format!("{}: line {}: {e}", path.display(), line + 1)))?
                } else {
                    parse_edge_list(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))?
                };
                Ok((Source::File(path.to_path_buf()), graph))
            }
        }
    }
}
