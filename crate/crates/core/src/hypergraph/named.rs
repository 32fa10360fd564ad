use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ThreeGraph;

/// The small 3-graphs that show up as forbidden configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedGraph {
    K4_3,
    K4_3minus,
    F32,
    J4,
    F5,
    C5,
    C5minus,
    H1,
    H2,
    H3,
    H4,
    H5,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown graph name `{0}`")]
pub struct UnknownGraphName(pub String);

impl NamedGraph {
    pub const ALL: [NamedGraph; 12] = [
        NamedGraph::K4_3,
        NamedGraph::K4_3minus,
        NamedGraph::F32,
        NamedGraph::J4,
        NamedGraph::F5,
        NamedGraph::C5,
        NamedGraph::C5minus,
        NamedGraph::H1,
        NamedGraph::H2,
        NamedGraph::H3,
        NamedGraph::H4,
        NamedGraph::H5,
    ];

    /// The catalog of candidate forbidden graphs.
    pub const CATALOG: [NamedGraph; 6] = [
        NamedGraph::K4_3,
        NamedGraph::K4_3minus,
        NamedGraph::F32,
        NamedGraph::J4,
        NamedGraph::F5,
        NamedGraph::C5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K4_3 => "K4_3",
            NamedGraph::K4_3minus => "K4_3minus",
            NamedGraph::F32 => "F32",
            NamedGraph::J4 => "J4",
            NamedGraph::F5 => "F5",
            NamedGraph::C5 => "C5",
            NamedGraph::C5minus => "C5minus",
            NamedGraph::H1 => "H1",
            NamedGraph::H2 => "H2",
            NamedGraph::H3 => "H3",
            NamedGraph::H4 => "H4",
            NamedGraph::H5 => "H5",
        }
    }

    /// Edge list with 1-indexed vertices, exactly as tabulated.
    pub fn edges_one_indexed(self) -> &'static [[usize; 3]] {
        match self {
            NamedGraph::K4_3 => &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
            NamedGraph::K4_3minus => &[[1, 2, 3], [1, 2, 4], [1, 3, 4]],
            NamedGraph::F32 => &[[1, 2, 3], [1, 4, 5], [2, 4, 5], [3, 4, 5]],
            NamedGraph::J4 => &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [1, 4, 5]],
            NamedGraph::F5 => &[[1, 2, 3], [1, 2, 4], [3, 4, 5]],
            NamedGraph::C5 => &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 1], [5, 1, 2]],
            NamedGraph::C5minus => &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 1]],
            NamedGraph::H1 => &[[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 5]],
            NamedGraph::H2 => &[[1, 2, 3], [1, 2, 4], [1, 3, 5]],
            NamedGraph::H3 => &[[1, 2, 3], [1, 2, 4], [1, 2, 5]],
            NamedGraph::H4 => &[[1, 2, 3], [2, 3, 4], [1, 3, 4], [1, 2, 4], [5, 1, 4], [5, 2, 3]],
            NamedGraph::H5 => &[
                [1, 4, 2],
                [1, 4, 3],
                [1, 4, 5],
                [1, 4, 6],
                [2, 5, 1],
                [2, 5, 3],
                [2, 5, 4],
                [2, 5, 6],
                [3, 6, 1],
                [3, 6, 2],
                [3, 6, 4],
                [3, 6, 5],
            ],
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            NamedGraph::K4_3 | NamedGraph::K4_3minus => 4,
            NamedGraph::H5 => 6,
            _ => 5,
        }
    }

    pub fn graph(self) -> ThreeGraph {
        ThreeGraph::from_one_indexed(self.vertex_count(), self.edges_one_indexed())
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = UnknownGraphName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownGraphName(s.to_string()))
    }
}
