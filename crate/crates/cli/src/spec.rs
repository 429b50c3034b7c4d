//! Graph selectors and vertex tokens as typed on the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use diffusion_core::engine::StrategyProfile;
use diffusion_core::graph::{
    cycle, fig7_graph, grid, hypercube, no_ne_tree, path, read_graph6_file, Graph, GridCoord,
    GridShape,
};

pub const GRAMMAR: &str =
    "path:N | cycle:N | grid:MxN | hypercube:D | tree:K | fig7 | graph6:FILE[:LINE]";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Grid(usize, usize),
    Hypercube(u32),
    Tree(usize),
    Fig7,
    /// `line` is 1-based; the first graph in the file when absent.
    Graph6 { file: PathBuf, line: Option<usize> },
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid graph {s:?}; expected {GRAMMAR}");
        if s == "fig7" {
            return Ok(GraphSpec::Fig7);
        }
        let (family, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match family {
            "path" => GraphSpec::Path(num(arg)?),
            "cycle" => GraphSpec::Cycle(num(arg)?),
            "grid" => {
                let (m, n) = arg.split_once('x').ok_or_else(bad)?;
                GraphSpec::Grid(num(m)?, num(n)?)
            }
            "hypercube" => GraphSpec::Hypercube(num(arg)? as u32),
            "tree" => GraphSpec::Tree(num(arg)?),
            "graph6" if !arg.is_empty() => match arg.rsplit_once(':') {
                Some((file, line)) if !file.is_empty() && line.parse::<usize>().is_ok() => {
                    GraphSpec::Graph6 {
                        file: file.into(),
                        line: Some(num(line)?),
                    }
                }
                _ => GraphSpec::Graph6 {
                    file: arg.into(),
                    line: None,
                },
            },
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Grid(m, n) => write!(f, "grid:{m}x{n}"),
            GraphSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GraphSpec::Tree(k) => write!(f, "tree:{k}"),
            GraphSpec::Fig7 => f.write_str("fig7"),
            GraphSpec::Graph6 { file, line } => {
                write!(f, "graph6:{}", file.display())?;
                if let Some(l) = line {
                    write!(f, ":{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            GraphSpec::Path(n) => path(*n)?,
            GraphSpec::Cycle(n) => cycle(*n)?,
            GraphSpec::Grid(m, n) => grid(*m, *n)?,
            GraphSpec::Hypercube(d) => hypercube(*d)?,
            GraphSpec::Tree(k) => no_ne_tree(*k)?,
            GraphSpec::Fig7 => fig7_graph(),
            GraphSpec::Graph6 { file, line } => {
                let graphs = read_graph6_file(file)
                    .with_context(|| format!("reading {}", file.display()))?;
                let idx = line.unwrap_or(1);
                if idx == 0 || idx > graphs.len() {
                    bail!("{} has {} graphs, no line {idx}", file.display(), graphs.len());
                }
                graphs.into_iter().nth(idx - 1).expect("index checked")
            }
        })
    }

    /// Vertex id from a token: `x.y` or a 1-based id on grids, a bitstring
    /// of exactly `d` digits or a 0-based integer on hypercubes, a 1-based id
    /// elsewhere.
    pub fn parse_vertex(&self, g: &Graph, token: &str) -> Result<usize> {
        let token = token.trim();
        let v = match self {
            GraphSpec::Grid(m, n) if token.contains('.') => {
                let (x, y) = token.split_once('.').expect("checked");
                let c = GridCoord::new(x.parse()?, y.parse()?);
                GridShape::new(*m, *n)
                    .vertex(c)
                    .ok_or_else(|| anyhow!("{token} is outside the {m}x{n} grid"))?
            }
            GraphSpec::Hypercube(d)
                if token.len() == *d as usize && token.chars().all(|c| c == '0' || c == '1') =>
            {
                usize::from_str_radix(token, 2)?
            }
            GraphSpec::Hypercube(_) => token
                .parse::<usize>()
                .map_err(|_| anyhow!("bad hypercube vertex {token:?}"))?,
            _ => {
                let id: usize = token
                    .parse()
                    .map_err(|_| anyhow!("bad vertex {token:?}; vertex ids start at 1"))?;
                id.checked_sub(1)
                    .ok_or_else(|| anyhow!("vertex ids start at 1"))?
            }
        };
        if v >= g.order() {
            bail!("vertex {token} out of range for {} vertices", g.order());
        }
        Ok(v)
    }

    pub fn parse_profile(&self, g: &Graph, text: &str) -> Result<StrategyProfile> {
        let positions = text
            .split(',')
            .map(|t| self.parse_vertex(g, t))
            .collect::<Result<Vec<_>>>()?;
        if positions.is_empty() {
            bail!("empty profile");
        }
        Ok(StrategyProfile::new(positions))
    }

    /// The textual form of vertex `v` that `parse_vertex` maps back to `v`.
    pub fn show_vertex(&self, v: usize) -> String {
        match self {
            GraphSpec::Hypercube(d) => format!("{v:0w$b}", w = *d as usize),
            _ => (v + 1).to_string(),
        }
    }

    pub fn show_profile(&self, p: &StrategyProfile) -> String {
        p.positions()
            .iter()
            .map(|&v| self.show_vertex(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}
