//! Combinatorial model of braid-foliated surfaces: signed axis vertices,
//! signed saddle singularities, aa/ab/bb tiles and a/b edges, together with
//! the rewrite moves that simplify a foliated disc to the radial disc while
//! emitting a replayable move certificate.

pub mod fixtures;
mod grow;
mod rewrite;
mod tiling;

use thiserror::Error;

pub use grow::{grow_disc, random_script, InverseMove};
pub use rewrite::{
    destabilize_along_end_tile, is_b_arc_essential, remove_inessential_b_arc, simplify_disc,
    simplify_disc_trace, singular_leaf_graph, stabilize_along_ab_tile, LeafGraph, SimplifyAction,
    SimplifyStep, SimplifyTrace,
};
pub use tiling::{
    validate_tiling, EdgeEnds, EdgeId, FEdge, FSingularity, FTile, FVertex, SingId, SurfaceKind,
    TileId, TileKind, Tiling, TilingBuilder, ValidationReport, VertexId, Violation,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FoliationError {
    #[error("edge is not a b-arc")]
    NotABArc,
    #[error("the b-arc is essential")]
    EssentialArc,
    #[error("the two sides of the b-arc belong to the same tile")]
    SelfAdjacentTiles,
    #[error("tile is not an ab tile")]
    NotAbTile,
    #[error("vertex is not in an end-tile position: {0}")]
    NotEndTile(String),
    #[error("tiling has non-aa tiles")]
    NonAaTilesPresent,
    #[error("no ab tile available while negative vertices remain")]
    StuckNoAbTile,
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("unknown id: {0}")]
    UnknownId(String),
    #[error("configuration outside the supported local picture: {0}")]
    NonLocalConfiguration(String),
    #[error("rewrite internal error: {0}")]
    Internal(String),
}
