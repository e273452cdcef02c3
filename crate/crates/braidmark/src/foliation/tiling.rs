//! Tiling data model, structural validation, and the lossless JSON format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::Sign;

macro_rules! id_type {
    ($name:ident, $prefix:literal) => {
        #[derive(
            Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", $prefix, self.0)
            }
        }
    };
}

id_type!(VertexId, "v");
id_type!(SingId, "s");
id_type!(EdgeId, "e");
id_type!(TileId, "T");

/// Pierce point of the axis through the surface, signed by whether the
/// outward normal agrees with the axis direction. `axis_rank` is the position
/// in the cyclic order of pierce points along the axis.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FVertex {
    pub id: VertexId,
    pub sign: Sign,
    pub axis_rank: usize,
}

/// Saddle tangency with a fiber, signed; `theta_rank` orders the
/// singularities around the fibration (they sit on distinct fibers).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FSingularity {
    pub id: SingId,
    pub sign: Sign,
    pub theta_rank: usize,
}

/// Endpoint data of a non-singular leaf used as a tile edge. Type `a` runs
/// from one axis vertex to the surface boundary, type `b` between two axis
/// vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeEnds {
    Axis(VertexId),
    Span(VertexId, VertexId),
}

impl EdgeEnds {
    pub fn is_a(&self) -> bool {
        matches!(self, EdgeEnds::Axis(_))
    }

    pub fn is_b(&self) -> bool {
        matches!(self, EdgeEnds::Span(_, _))
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match *self {
            EdgeEnds::Axis(v) => vec![v],
            EdgeEnds::Span(a, b) => vec![a, b],
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.vertices().contains(&v)
    }

    /// Unordered comparison; b-edges have no preferred endpoint order.
    pub fn same_as(&self, other: &EdgeEnds) -> bool {
        match (*self, *other) {
            (EdgeEnds::Axis(a), EdgeEnds::Axis(b)) => a == b,
            (EdgeEnds::Span(a, b), EdgeEnds::Span(c, d)) => {
                (a, b) == (c, d) || (a, b) == (d, c)
            }
            _ => false,
        }
    }
}

/// Interior tile edge. Every edge bounds exactly two tile slots; a tile glued
/// to itself lists the same id twice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FEdge {
    pub id: EdgeId,
    pub ends: EdgeEnds,
    pub adjacent_tiles: [TileId; 2],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TileKind {
    Aa,
    Ab,
    Bb,
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileKind::Aa => write!(f, "aa"),
            TileKind::Ab => write!(f, "ab"),
            TileKind::Bb => write!(f, "bb"),
        }
    }
}

/// Foliated 2-cell around one singularity.
///
/// Vertex and edge slots follow fixed positional templates; self-gluings
/// repeat ids in the lists.
///
/// - `aa`, vertices `[p, q]`, edges `[a@p, a@p, a@q, a@q]`
/// - `ab`, vertices `[p, q, n]`, edges `[a@p, a@q, b(p,n), b(q,n)]`
/// - `bb`, vertices `[w, x, y, z]`, edges `[b(w,x), b(y,z), b(w,z), b(y,x)]`
///
/// For the cut-and-check on `aa` tiles, edge slots 0 and 2 lie on one side of
/// the singular leaf's vertex-to-vertex arc and slots 1 and 3 on the other.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FTile {
    pub id: TileId,
    pub kind: TileKind,
    pub singularity: SingId,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Disc,
    Annulus,
    General,
}

/// A combinatorial Markov surface.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "TilingFile", into = "TilingFile")]
pub struct Tiling {
    pub surface_kind: SurfaceKind,
    pub chi: i64,
    pub boundary_count: usize,
    pub(crate) vertices: BTreeMap<VertexId, FVertex>,
    pub(crate) singularities: BTreeMap<SingId, FSingularity>,
    pub(crate) edges: BTreeMap<EdgeId, FEdge>,
    pub(crate) tiles: BTreeMap<TileId, FTile>,
}

impl Tiling {
    /// The disc foliated radially around a single positive vertex: no
    /// singularities, no tiles. Boundary is the standard 1-braid unknot.
    pub fn radial_disc() -> Tiling {
        let mut vertices = BTreeMap::new();
        vertices.insert(
            VertexId(0),
            FVertex { id: VertexId(0), sign: Sign::Plus, axis_rank: 0 },
        );
        Tiling {
            surface_kind: SurfaceKind::Disc,
            chi: 1,
            boundary_count: 1,
            vertices,
            singularities: BTreeMap::new(),
            edges: BTreeMap::new(),
            tiles: BTreeMap::new(),
        }
    }

    pub fn is_radial_disc(&self) -> bool {
        self.surface_kind == SurfaceKind::Disc
            && self.vertices.len() == 1
            && self.singularities.is_empty()
            && self.tiles.is_empty()
            && self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn singularity_count(&self) -> usize {
        self.singularities.len()
    }

    pub fn vertex(&self, id: VertexId) -> Option<&FVertex> {
        self.vertices.get(&id)
    }

    pub fn singularity(&self, id: SingId) -> Option<&FSingularity> {
        self.singularities.get(&id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&FEdge> {
        self.edges.get(&id)
    }

    pub fn tile(&self, id: TileId) -> Option<&FTile> {
        self.tiles.get(&id)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &FVertex> {
        self.vertices.values()
    }

    pub fn singularities(&self) -> impl Iterator<Item = &FSingularity> {
        self.singularities.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &FEdge> {
        self.edges.values()
    }

    pub fn tiles(&self) -> impl Iterator<Item = &FTile> {
        self.tiles.values()
    }

    pub fn positive_vertex_count(&self) -> usize {
        self.vertices.values().filter(|v| v.sign == Sign::Plus).count()
    }

    pub fn negative_vertex_count(&self) -> usize {
        self.vertices.values().filter(|v| v.sign == Sign::Minus).count()
    }

    /// `(#positive vertices) - (#negative vertices)`: the braid index of the
    /// boundary as read off the foliation.
    pub fn ledger_index(&self) -> i64 {
        self.positive_vertex_count() as i64 - self.negative_vertex_count() as i64
    }

    /// Number of singular-leaf endpoints at the vertex: its slot multiplicity
    /// over all tiles.
    pub fn valence(&self, v: VertexId) -> usize {
        self.tiles
            .values()
            .map(|t| t.vertices.iter().filter(|&&x| x == v).count())
            .sum()
    }

    pub(crate) fn fresh_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.keys().last().map_or(0, |k| k.0 + 1))
    }

    pub(crate) fn fresh_sing_id(&self) -> SingId {
        SingId(self.singularities.keys().last().map_or(0, |k| k.0 + 1))
    }

    pub(crate) fn fresh_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().last().map_or(0, |k| k.0 + 1))
    }

    pub(crate) fn fresh_tile_id(&self) -> TileId {
        TileId(self.tiles.keys().last().map_or(0, |k| k.0 + 1))
    }

    /// Renumbers axis and fiber ranks to `{0..V-1}` and `{0..S-1}`,
    /// preserving the cyclic orders.
    pub(crate) fn compact_ranks(&mut self) {
        let mut by_rank: Vec<VertexId> = self.vertices.keys().copied().collect();
        by_rank.sort_by_key(|id| self.vertices[id].axis_rank);
        for (rank, id) in by_rank.into_iter().enumerate() {
            self.vertices.get_mut(&id).unwrap().axis_rank = rank;
        }
        let mut by_theta: Vec<SingId> = self.singularities.keys().copied().collect();
        by_theta.sort_by_key(|id| self.singularities[id].theta_rank);
        for (rank, id) in by_theta.into_iter().enumerate() {
            self.singularities.get_mut(&id).unwrap().theta_rank = rank;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tiling serializes")
    }

    pub fn from_json(text: &str) -> Result<Tiling, serde_json::Error> {
        serde_json::from_str(text)
    }
}

// ---------------------------------------------------------------------------
// JSON file format

#[derive(Serialize, Deserialize)]
struct EdgeEndpointsFile {
    vertices: Vec<VertexId>,
    boundary: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    id: EdgeId,
    kind: char,
    endpoints: EdgeEndpointsFile,
    adjacent_tiles: [TileId; 2],
}

#[derive(Serialize, Deserialize)]
struct TilingFile {
    surface_kind: SurfaceKind,
    chi: i64,
    #[serde(default)]
    boundary_count: Option<usize>,
    vertices: Vec<FVertex>,
    singularities: Vec<FSingularity>,
    edges: Vec<EdgeFile>,
    tiles: Vec<FTile>,
}

impl From<Tiling> for TilingFile {
    fn from(t: Tiling) -> TilingFile {
        TilingFile {
            surface_kind: t.surface_kind,
            chi: t.chi,
            boundary_count: Some(t.boundary_count),
            vertices: t.vertices.into_values().collect(),
            singularities: t.singularities.into_values().collect(),
            edges: t
                .edges
                .into_values()
                .map(|e| EdgeFile {
                    id: e.id,
                    kind: if e.ends.is_a() { 'a' } else { 'b' },
                    endpoints: EdgeEndpointsFile {
                        vertices: e.ends.vertices(),
                        boundary: e.ends.is_a(),
                    },
                    adjacent_tiles: e.adjacent_tiles,
                })
                .collect(),
            tiles: t.tiles.into_values().collect(),
        }
    }
}

impl TryFrom<TilingFile> for Tiling {
    type Error = String;

    fn try_from(f: TilingFile) -> Result<Tiling, String> {
        let mut vertices = BTreeMap::new();
        for v in f.vertices {
            if vertices.insert(v.id, v).is_some() {
                return Err(format!("duplicate vertex id {}", v.id));
            }
        }
        let mut singularities = BTreeMap::new();
        for s in f.singularities {
            if singularities.insert(s.id, s).is_some() {
                return Err(format!("duplicate singularity id {}", s.id));
            }
        }
        let mut edges = BTreeMap::new();
        for e in f.edges {
            let ends = match (e.kind, e.endpoints.vertices.as_slice(), e.endpoints.boundary) {
                ('a', &[v], true) => EdgeEnds::Axis(v),
                ('b', &[a, b], false) => EdgeEnds::Span(a, b),
                _ => {
                    return Err(format!(
                        "edge {}: kind `{}` does not match its endpoints",
                        e.id, e.kind
                    ))
                }
            };
            let edge = FEdge { id: e.id, ends, adjacent_tiles: e.adjacent_tiles };
            if edges.insert(e.id, edge).is_some() {
                return Err(format!("duplicate edge id {}", e.id));
            }
        }
        let mut tiles = BTreeMap::new();
        for t in f.tiles {
            let id = t.id;
            if tiles.insert(id, t).is_some() {
                return Err(format!("duplicate tile id {id}"));
            }
        }
        let boundary_count = f.boundary_count.unwrap_or(match f.surface_kind {
            SurfaceKind::Disc => 1,
            SurfaceKind::Annulus => 2,
            SurfaceKind::General => 1,
        });
        Ok(Tiling {
            surface_kind: f.surface_kind,
            chi: f.chi,
            boundary_count,
            vertices,
            singularities,
            edges,
            tiles,
        })
    }
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    MissingReference,
    AxisRanks,
    ThetaRanks,
    AEdgeAtNegativeVertex,
    EdgeAdjacency,
    TileTemplate,
    VertexCensus,
    BbTouchesBoundary,
    SingularityBijection,
    EulerCharacteristic,
    LedgerIndex,
    Valence,
    SurfaceKind,
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Violation::MissingReference => "missing reference",
            Violation::AxisRanks => "axis ranks not a permutation of 0..V-1",
            Violation::ThetaRanks => "theta ranks not a permutation of 0..S-1",
            Violation::AEdgeAtNegativeVertex => "a-edge at negative vertex",
            Violation::EdgeAdjacency => "edge/tile adjacency mismatch",
            Violation::TileTemplate => "tile slots do not match its kind",
            Violation::VertexCensus => "vertex sign census wrong for tile kind",
            Violation::BbTouchesBoundary => "bb tile touches a boundary edge",
            Violation::SingularityBijection => "singularity/tile correspondence not a bijection",
            Violation::EulerCharacteristic => "V - S differs from chi",
            Violation::LedgerIndex => "ledger braid index below 1",
            Violation::Valence => "vertex with no singular-leaf endpoint",
            Violation::SurfaceKind => "surface kind inconsistent with chi/boundary count",
            Violation::Disconnected => "tile adjacency graph is disconnected",
        };
        write!(f, "{name}")
    }
}

/// Validation output; violations are data, not faults. Empty means valid.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<(Violation, String)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, v: Violation) -> bool {
        self.violations.iter().any(|(kind, _)| *kind == v)
    }

    fn push(&mut self, kind: Violation, detail: String) {
        self.violations.push((kind, detail));
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, (kind, detail)) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{kind}: {detail}")?;
        }
        Ok(())
    }
}

/// Expected edge-slot pattern for a tile, derived from its kind and vertex
/// slots. `None` when the slot counts are already wrong.
fn expected_edge_slots(tile: &FTile) -> Option<Vec<EdgeEnds>> {
    match (tile.kind, tile.vertices.as_slice()) {
        (TileKind::Aa, &[p, q]) => Some(vec![
            EdgeEnds::Axis(p),
            EdgeEnds::Axis(p),
            EdgeEnds::Axis(q),
            EdgeEnds::Axis(q),
        ]),
        (TileKind::Ab, &[p, q, n]) => Some(vec![
            EdgeEnds::Axis(p),
            EdgeEnds::Axis(q),
            EdgeEnds::Span(p, n),
            EdgeEnds::Span(q, n),
        ]),
        (TileKind::Bb, &[w, x, y, z]) => Some(vec![
            EdgeEnds::Span(w, x),
            EdgeEnds::Span(y, z),
            EdgeEnds::Span(w, z),
            EdgeEnds::Span(y, x),
        ]),
        _ => None,
    }
}

/// Checks every structural invariant and reports each violation with the ids
/// involved.
pub fn validate_tiling(t: &Tiling) -> ValidationReport {
    let mut report = ValidationReport::default();

    let mut refs_ok = true;
    for tile in t.tiles.values() {
        if t.singularities.get(&tile.singularity).is_none() {
            report.push(
                Violation::MissingReference,
                format!("tile {} references missing singularity {}", tile.id, tile.singularity),
            );
            refs_ok = false;
        }
        for v in &tile.vertices {
            if t.vertices.get(v).is_none() {
                report.push(
                    Violation::MissingReference,
                    format!("tile {} references missing vertex {v}", tile.id),
                );
                refs_ok = false;
            }
        }
        for e in &tile.edges {
            if t.edges.get(e).is_none() {
                report.push(
                    Violation::MissingReference,
                    format!("tile {} references missing edge {e}", tile.id),
                );
                refs_ok = false;
            }
        }
    }
    for edge in t.edges.values() {
        for v in edge.ends.vertices() {
            if t.vertices.get(&v).is_none() {
                report.push(
                    Violation::MissingReference,
                    format!("edge {} references missing vertex {v}", edge.id),
                );
                refs_ok = false;
            }
        }
        for tid in edge.adjacent_tiles {
            if t.tiles.get(&tid).is_none() {
                report.push(
                    Violation::MissingReference,
                    format!("edge {} references missing tile {tid}", edge.id),
                );
                refs_ok = false;
            }
        }
    }
    if !refs_ok {
        return report;
    }

    // Ranks form {0..V-1} and {0..S-1}.
    let axis: BTreeSet<usize> = t.vertices.values().map(|v| v.axis_rank).collect();
    if axis.len() != t.vertices.len() || axis.iter().next_back().map_or(false, |&m| m + 1 != axis.len()) {
        report.push(Violation::AxisRanks, format!("ranks {axis:?} on {} vertices", t.vertices.len()));
    }
    let theta: BTreeSet<usize> = t.singularities.values().map(|s| s.theta_rank).collect();
    if theta.len() != t.singularities.len()
        || theta.iter().next_back().map_or(false, |&m| m + 1 != theta.len())
    {
        report.push(
            Violation::ThetaRanks,
            format!("ranks {theta:?} on {} singularities", t.singularities.len()),
        );
    }

    // a-edges end at positive vertices.
    for edge in t.edges.values() {
        if let EdgeEnds::Axis(v) = edge.ends {
            if t.vertices[&v].sign == Sign::Minus {
                report.push(
                    Violation::AEdgeAtNegativeVertex,
                    format!("edge {} ends at negative vertex {v}", edge.id),
                );
            }
        }
    }

    // Edge/tile adjacency cross-consistency: occurrences in tile slot lists
    // must match the adjacency multiset, two slots per edge.
    for edge in t.edges.values() {
        let mut adj: BTreeMap<TileId, usize> = BTreeMap::new();
        for tid in edge.adjacent_tiles {
            *adj.entry(tid).or_insert(0) += 1;
        }
        for (tid, expected) in &adj {
            let occ = t.tiles[tid].edges.iter().filter(|&&e| e == edge.id).count();
            if occ != *expected {
                report.push(
                    Violation::EdgeAdjacency,
                    format!("edge {} appears {occ}x in tile {tid} but {expected}x in adjacency", edge.id),
                );
            }
        }
        for tile in t.tiles.values() {
            if !adj.contains_key(&tile.id) && tile.edges.contains(&edge.id) {
                report.push(
                    Violation::EdgeAdjacency,
                    format!("tile {} lists edge {} without being adjacent to it", tile.id, edge.id),
                );
            }
        }
    }

    // Per-tile census and slot templates.
    for tile in t.tiles.values() {
        let expected_vertex_slots = match tile.kind {
            TileKind::Aa => 2,
            TileKind::Ab => 3,
            TileKind::Bb => 4,
        };
        if tile.vertices.len() != expected_vertex_slots {
            report.push(
                Violation::VertexCensus,
                format!("tile {} has {} vertex slots, expected {expected_vertex_slots}", tile.id, tile.vertices.len()),
            );
            continue;
        }
        let negatives = tile
            .vertices
            .iter()
            .filter(|v| t.vertices[v].sign == Sign::Minus)
            .count();
        let expected_negatives = match tile.kind {
            TileKind::Aa => 0,
            TileKind::Ab => 1,
            TileKind::Bb => 2,
        };
        if negatives != expected_negatives {
            report.push(
                Violation::VertexCensus,
                format!(
                    "tile {} ({}) has {negatives} negative vertex slots, expected {expected_negatives}",
                    tile.id, tile.kind
                ),
            );
        }
        if tile.edges.len() != 4 {
            report.push(
                Violation::TileTemplate,
                format!("tile {} has {} edge slots, expected 4", tile.id, tile.edges.len()),
            );
            continue;
        }
        if let Some(pattern) = expected_edge_slots(tile) {
            for (i, (slot, want)) in tile.edges.iter().zip(pattern.iter()).enumerate() {
                let got = &t.edges[slot].ends;
                if !got.same_as(want) {
                    report.push(
                        Violation::TileTemplate,
                        format!("tile {} slot {i}: edge {slot} does not match template", tile.id),
                    );
                }
            }
        }
        if tile.kind == TileKind::Bb && tile.edges.iter().any(|e| t.edges[e].ends.is_a()) {
            report.push(
                Violation::BbTouchesBoundary,
                format!("bb tile {} has a boundary (a) edge", tile.id),
            );
        }
    }

    // Singularity <-> tile bijection.
    let mut sing_usage: BTreeMap<SingId, usize> = BTreeMap::new();
    for tile in t.tiles.values() {
        *sing_usage.entry(tile.singularity).or_insert(0) += 1;
    }
    for (sid, count) in &sing_usage {
        if *count > 1 {
            report.push(
                Violation::SingularityBijection,
                format!("singularity {sid} is shared by {count} tiles"),
            );
        }
    }
    for sid in t.singularities.keys() {
        if !sing_usage.contains_key(sid) {
            report.push(
                Violation::SingularityBijection,
                format!("singularity {sid} belongs to no tile"),
            );
        }
    }

    // Euler characteristic and ledger.
    let v = t.vertices.len() as i64;
    let s = t.singularities.len() as i64;
    if v - s != t.chi {
        report.push(
            Violation::EulerCharacteristic,
            format!("V - S = {} but chi = {}", v - s, t.chi),
        );
    }
    if t.ledger_index() < 1 {
        report.push(
            Violation::LedgerIndex,
            format!("ledger index {} < 1", t.ledger_index()),
        );
    }

    // Valence: with singularities present, every vertex meets a tile.
    if !t.tiles.is_empty() {
        for vertex in t.vertices.values() {
            if t.valence(vertex.id) == 0 {
                report.push(Violation::Valence, format!("vertex {} has valence 0", vertex.id));
            }
        }
    }

    // Declared surface kind.
    match t.surface_kind {
        SurfaceKind::Disc => {
            if t.chi != 1 || t.boundary_count != 1 {
                report.push(
                    Violation::SurfaceKind,
                    format!("disc must have chi=1, one boundary; got chi={}, {}", t.chi, t.boundary_count),
                );
            }
        }
        SurfaceKind::Annulus => {
            if t.chi != 0 || t.boundary_count != 2 {
                report.push(
                    Violation::SurfaceKind,
                    format!("annulus must have chi=0, two boundaries; got chi={}, {}", t.chi, t.boundary_count),
                );
            }
        }
        SurfaceKind::General => {}
    }

    // Tile adjacency graph connected (when there are tiles at all).
    if t.tiles.len() > 1 {
        let ids: Vec<TileId> = t.tiles.keys().copied().collect();
        let index: BTreeMap<TileId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut dsu = Dsu::new(ids.len());
        for edge in t.edges.values() {
            dsu.union(index[&edge.adjacent_tiles[0]], index[&edge.adjacent_tiles[1]]);
        }
        let root = dsu.find(0);
        if (1..ids.len()).any(|i| dsu.find(i) != root) {
            report.push(Violation::Disconnected, "tiles split into several components".into());
        }
    }

    report
}

/// Whether two axis ranks are neighbours in the cyclic order of `modulus`
/// pierce points.
pub(crate) fn cyclically_adjacent(a: usize, b: usize, modulus: usize) -> bool {
    if modulus < 2 {
        return false;
    }
    (a + 1) % modulus == b || (b + 1) % modulus == a
}

/// Minimal union-find used by the validation and cut checks.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

// ---------------------------------------------------------------------------
// Builder

/// Assembles tilings slot by slot; used by the growth generator, the sample
/// fixtures, and tests. `build` performs no validation so that deliberately
/// broken tilings can be constructed for the validator.
pub struct TilingBuilder {
    tiling: Tiling,
    next_vertex: u32,
    next_sing: u32,
    next_edge: u32,
    next_tile: u32,
}

impl TilingBuilder {
    pub fn disc() -> TilingBuilder {
        TilingBuilder::new(SurfaceKind::Disc, 1, 1)
    }

    pub fn new(surface_kind: SurfaceKind, chi: i64, boundary_count: usize) -> TilingBuilder {
        TilingBuilder {
            tiling: Tiling {
                surface_kind,
                chi,
                boundary_count,
                vertices: BTreeMap::new(),
                singularities: BTreeMap::new(),
                edges: BTreeMap::new(),
                tiles: BTreeMap::new(),
            },
            next_vertex: 0,
            next_sing: 0,
            next_edge: 0,
            next_tile: 0,
        }
    }

    pub fn vertex(&mut self, sign: Sign, axis_rank: usize) -> VertexId {
        let id = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.tiling.vertices.insert(id, FVertex { id, sign, axis_rank });
        id
    }

    pub fn singularity(&mut self, sign: Sign, theta_rank: usize) -> SingId {
        let id = SingId(self.next_sing);
        self.next_sing += 1;
        self.tiling.singularities.insert(id, FSingularity { id, sign, theta_rank });
        id
    }

    /// Reserves a tile id so edges can reference tiles created later.
    pub fn tile_id(&mut self) -> TileId {
        let id = TileId(self.next_tile);
        self.next_tile += 1;
        id
    }

    pub fn a_edge(&mut self, v: VertexId, adjacent: [TileId; 2]) -> EdgeId {
        self.edge(EdgeEnds::Axis(v), adjacent)
    }

    pub fn b_edge(&mut self, a: VertexId, b: VertexId, adjacent: [TileId; 2]) -> EdgeId {
        self.edge(EdgeEnds::Span(a, b), adjacent)
    }

    pub fn edge(&mut self, ends: EdgeEnds, adjacent_tiles: [TileId; 2]) -> EdgeId {
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.tiling.edges.insert(id, FEdge { id, ends, adjacent_tiles });
        id
    }

    pub fn tile(
        &mut self,
        id: TileId,
        kind: TileKind,
        singularity: SingId,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    ) {
        self.tiling.tiles.insert(id, FTile { id, kind, singularity, vertices, edges });
    }

    pub fn build(self) -> Tiling {
        self.tiling
    }
}
