//! Where the graph comes from: a file, a named family, or just a degree.

use clap::{Args, ValueEnum};

use chromzero::graph::{generate_graph, parse_graph, Family, Graph, GraphFormat};

use crate::commands::CliError;

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Graph file (edge list or DIMACS, detected from the contents).
    #[arg(long, value_name = "FILE")]
    pub graph: Option<std::path::PathBuf>,
    /// Named graph family.
    #[arg(long, value_enum, value_name = "NAME")]
    pub family: Option<FamilyName>,
    /// Family size: vertices for complete/cycle/path/random-regular, leaves for
    /// star, side length for grid.
    #[arg(long)]
    pub n: Option<usize>,
    /// Maximum degree when no graph is given; degree of a random-regular graph.
    #[arg(long)]
    pub delta: Option<usize>,
    /// Seed for random-regular graphs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 18)]
    pub max_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    Cycle,
    Path,
    Star,
    Grid,
    Petersen,
    RandomRegular,
}

pub enum Source {
    Graph { id: String, graph: Graph },
    Delta(usize),
}

const RANDOM_REGULAR_DEFAULT_DEGREE: usize = 3;

impl GraphArgs {
    /// Resolves exactly one source. `allow_delta` admits a bare `--delta`.
    pub fn resolve(&self, allow_delta: bool) -> Result<Source, CliError> {
        if self.max_vertices == 0 {
            return Err(CliError::Usage("--max-vertices must be positive".into()));
        }
        let (id, graph) = match (&self.graph, self.family) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage("give either --graph or --family, not both".into()))
            }
            (Some(path), None) => {
                if self.delta.is_some() || self.n.is_some() {
                    return Err(CliError::Usage("--n and --delta do not apply to --graph".into()));
                }
                let text = std::fs::read_to_string(path).map_err(|e| {
                    let e = std::io::Error::new(e.kind(), format!("{}: {e}", path.display()));
                    CliError::Lib(chromzero::Error::Io(e))
                })?;
                let graph = parse_graph(&text, GraphFormat::sniff(&text))?;
                (path.display().to_string(), graph)
            }
            (None, Some(name)) => {
                let family = self.family(name)?;
                (family.to_string(), generate_graph(&family)?)
            }
            (None, None) => {
                return match self.delta {
                    Some(d) if allow_delta => Ok(Source::Delta(d)),
                    _ if allow_delta => Err(CliError::Usage(
                        "give a graph (--graph or --family) or a maximum degree (--delta)".into(),
                    )),
                    _ => Err(CliError::Usage("give a graph with --graph or --family".into())),
                };
            }
        };
        if graph.vertex_count() > self.max_vertices {
            return Err(CliError::Lib(chromzero::Error::Resource {
                what: "vertex count",
                limit: self.max_vertices,
            }));
        }
        Ok(Source::Graph { id, graph })
    }

    fn family(&self, name: FamilyName) -> Result<Family, CliError> {
        if self.delta.is_some() && name != FamilyName::RandomRegular {
            return Err(CliError::Usage("--delta only applies to --family random-regular".into()));
        }
        if name == FamilyName::Petersen {
            return match self.n {
                None | Some(10) => Ok(Family::Petersen),
                Some(_) => Err(CliError::Usage("the Petersen graph has 10 vertices".into())),
            };
        }
        let n = self
            .n
            .ok_or_else(|| CliError::Usage(format!("--family {} needs --n", name.possible_name())))?;
        Ok(match name {
            FamilyName::Complete => Family::Complete(n),
            FamilyName::Cycle => Family::Cycle(n),
            FamilyName::Path => Family::Path(n),
            FamilyName::Star => Family::Star(n),
            FamilyName::Grid => Family::Grid { rows: n, cols: n },
            FamilyName::RandomRegular => Family::RandomRegular {
                n,
                degree: self.delta.unwrap_or(RANDOM_REGULAR_DEFAULT_DEGREE),
                seed: self.seed,
            },
            FamilyName::Petersen => unreachable!(),
        })
    }
}

impl FamilyName {
    fn possible_name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
    }
}
