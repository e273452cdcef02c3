//! Tiling rewrites: inessential b-arc removal, stabilization along an ab
//! tile, destabilization along an end tile, the singular-leaf graph, and the
//! disc simplification loop that strings them together.

use std::collections::{BTreeMap, BTreeSet};

use crate::braid::Sign;
use crate::certify::{Move, MoveCertificate};

use super::tiling::{
    cyclically_adjacent, validate_tiling, Dsu, EdgeEnds, EdgeId, FTile, SurfaceKind, TileId,
    TileKind, Tiling, VertexId,
};
use super::FoliationError;

/// A b-arc is inessential exactly when its endpoint vertices sit at
/// cyclically adjacent positions along the axis.
pub fn is_b_arc_essential(t: &Tiling, e: EdgeId) -> Result<bool, FoliationError> {
    let edge = t
        .edge(e)
        .ok_or_else(|| FoliationError::UnknownId(e.to_string()))?;
    let EdgeEnds::Span(a, b) = edge.ends else {
        return Err(FoliationError::NotABArc);
    };
    let ra = t
        .vertex(a)
        .ok_or_else(|| FoliationError::UnknownId(a.to_string()))?
        .axis_rank;
    let rb = t
        .vertex(b)
        .ok_or_else(|| FoliationError::UnknownId(b.to_string()))?
        .axis_rank;
    Ok(!cyclically_adjacent(ra, rb, t.vertex_count()))
}

/// What a rewrite deletes. Edges interior to the dead region vanish; edges
/// dangling off it are healed in matching pairs; b-edges at `convert_at`
/// that survive become a-edges at their other endpoint.
struct CollapsePlan {
    dead_tiles: BTreeSet<TileId>,
    dead_vertices: BTreeSet<VertexId>,
    convert_at: Option<VertexId>,
}

fn collapse(t: &mut Tiling, plan: &CollapsePlan) -> Result<(), FoliationError> {
    let dead_slots_of = |edge_tiles: &[TileId; 2]| {
        edge_tiles
            .iter()
            .filter(|tid| plan.dead_tiles.contains(tid))
            .count()
    };

    let mut dead_edges: BTreeSet<EdgeId> = BTreeSet::new();
    let mut conversions: Vec<(EdgeId, VertexId)> = Vec::new();
    for edge in t.edges.values() {
        if dead_slots_of(&edge.adjacent_tiles) == 2 {
            dead_edges.insert(edge.id);
            continue;
        }
        let touches_dead = edge
            .ends
            .vertices()
            .iter()
            .any(|v| plan.dead_vertices.contains(v));
        if !touches_dead {
            continue;
        }
        match (plan.convert_at, edge.ends) {
            (Some(n), EdgeEnds::Span(a, b)) if (a == n) != (b == n) => {
                let other = if a == n { b } else { a };
                if plan.dead_vertices.contains(&other) {
                    return Err(FoliationError::NonLocalConfiguration(format!(
                        "edge {} joins two removed vertices",
                        edge.id
                    )));
                }
                if t.vertices[&other].sign == Sign::Minus {
                    return Err(FoliationError::NonLocalConfiguration(format!(
                        "b-arc {} at the removed vertex ends at another negative vertex",
                        edge.id
                    )));
                }
                conversions.push((edge.id, other));
            }
            _ => {
                return Err(FoliationError::NonLocalConfiguration(format!(
                    "edge {} at a removed vertex would survive the rewrite",
                    edge.id
                )))
            }
        }
    }
    for (eid, other) in conversions {
        t.edges.get_mut(&eid).unwrap().ends = EdgeEnds::Axis(other);
    }

    // Surviving edges that lost one side to the dead region pair up by their
    // anchor and merge into single edges spanning the collapsed region.
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Anchor {
        A(VertexId),
        B(VertexId, VertexId),
    }
    let mut groups: BTreeMap<Anchor, Vec<(EdgeId, TileId)>> = BTreeMap::new();
    for edge in t.edges.values() {
        if dead_edges.contains(&edge.id) || dead_slots_of(&edge.adjacent_tiles) != 1 {
            continue;
        }
        let survivor = edge
            .adjacent_tiles
            .iter()
            .copied()
            .find(|tid| !plan.dead_tiles.contains(tid))
            .unwrap();
        let anchor = match edge.ends {
            EdgeEnds::Axis(v) => Anchor::A(v),
            EdgeEnds::Span(a, b) => Anchor::B(a.min(b), a.max(b)),
        };
        groups.entry(anchor).or_default().push((edge.id, survivor));
    }
    for (_, members) in groups {
        let [(e1, q1), (e2, q2)] = members[..] else {
            return Err(FoliationError::NonLocalConfiguration(format!(
                "{} dangling edges share an anchor, expected 2",
                members.len()
            )));
        };
        let ((kept, kept_side), (dropped, dropped_side)) =
            if e1 < e2 { ((e1, q1), (e2, q2)) } else { ((e2, q2), (e1, q1)) };
        t.edges.get_mut(&kept).unwrap().adjacent_tiles = [kept_side, dropped_side];
        t.edges.remove(&dropped);
        for slot in t.tiles.get_mut(&dropped_side).unwrap().edges.iter_mut() {
            if *slot == dropped {
                *slot = kept;
            }
        }
    }

    for eid in &dead_edges {
        t.edges.remove(eid);
    }
    for tid in &plan.dead_tiles {
        if let Some(tile) = t.tiles.remove(tid) {
            t.singularities.remove(&tile.singularity);
        }
    }
    for vid in &plan.dead_vertices {
        t.vertices.remove(vid);
    }
    t.compact_ranks();
    Ok(())
}

fn check_result(t: &Tiling) -> Result<(), FoliationError> {
    let report = validate_tiling(t);
    if report.is_valid() {
        Ok(())
    } else {
        Err(FoliationError::NonLocalConfiguration(format!(
            "rewrite left an invalid tiling: {report}"
        )))
    }
}

/// Removes an inessential b-arc together with its two endpoint vertices and
/// the two adjacent tiles' singularities. The ledger index is unchanged and
/// `V - S` is preserved.
pub fn remove_inessential_b_arc(t: &Tiling, e: EdgeId) -> Result<Tiling, FoliationError> {
    let edge = t
        .edge(e)
        .ok_or_else(|| FoliationError::UnknownId(e.to_string()))?;
    let EdgeEnds::Span(v1, v2) = edge.ends else {
        return Err(FoliationError::NotABArc);
    };
    if is_b_arc_essential(t, e)? {
        return Err(FoliationError::EssentialArc);
    }
    let [t1, t2] = edge.adjacent_tiles;
    if t1 == t2 {
        return Err(FoliationError::SelfAdjacentTiles);
    }
    if t.vertices[&v1].sign == t.vertices[&v2].sign {
        return Err(FoliationError::NonLocalConfiguration(
            "the b-arc endpoints have equal signs; removal would change the ledger".into(),
        ));
    }
    for v in [v1, v2] {
        for tile in t.tiles() {
            let mult = tile.vertices.iter().filter(|&&x| x == v).count();
            let expected = usize::from(tile.id == t1 || tile.id == t2);
            if mult != expected {
                return Err(FoliationError::NonLocalConfiguration(format!(
                    "vertex {v} meets tile {} {mult} times, expected {expected}",
                    tile.id
                )));
            }
        }
    }
    let mut out = t.clone();
    collapse(
        &mut out,
        &CollapsePlan {
            dead_tiles: BTreeSet::from([t1, t2]),
            dead_vertices: BTreeSet::from([v1, v2]),
            convert_at: None,
        },
    )?;
    check_result(&out)?;
    Ok(out)
}

/// Reorders a tile's slots after its negative vertex `n` is removed, so that
/// the surviving slots land in template position for the retyped tile. The
/// orderings keep the two sides of the singular leaf in the alternating
/// slot-parity convention used by the cut check.
fn retype_tile_without(t: &mut Tiling, tid: TileId, n: VertexId) -> Result<(), FoliationError> {
    let tile = t.tiles[&tid].clone();
    let mult = tile.vertices.iter().filter(|&&v| v == n).count();
    let v = &tile.vertices;
    let e = &tile.edges;
    let (kind, vertices, edges) = match (tile.kind, mult) {
        (TileKind::Ab, 1) if v[2] == n => (
            TileKind::Aa,
            vec![v[0], v[1]],
            vec![e[0], e[2], e[1], e[3]],
        ),
        (TileKind::Bb, 1) if v[1] == n => (
            TileKind::Ab,
            vec![v[0], v[2], v[3]],
            vec![e[0], e[3], e[2], e[1]],
        ),
        (TileKind::Bb, 1) if v[3] == n => (
            TileKind::Ab,
            vec![v[0], v[2], v[1]],
            vec![e[2], e[1], e[0], e[3]],
        ),
        (TileKind::Bb, 2) if v[1] == n && v[3] == n => (
            TileKind::Aa,
            vec![v[0], v[2]],
            vec![e[0], e[2], e[3], e[1]],
        ),
        _ => {
            return Err(FoliationError::NonLocalConfiguration(format!(
                "tile {tid} cannot lose vertex {n} from its slots"
            )))
        }
    };
    let entry = t.tiles.get_mut(&tid).unwrap();
    entry.kind = kind;
    entry.vertices = vertices;
    entry.edges = edges;
    Ok(())
}

/// Stabilization guided by an ab tile: removes the tile, its singularity and
/// its negative vertex; b-edges at that vertex become a-edges; tiles that
/// contained it retype bb→ab→aa. The ledger index rises by one and the
/// emitted move carries the singularity's sign.
pub fn stabilize_along_ab_tile(
    t: &Tiling,
    tile_id: TileId,
) -> Result<(Tiling, Move), FoliationError> {
    let tile = t
        .tile(tile_id)
        .ok_or_else(|| FoliationError::UnknownId(tile_id.to_string()))?;
    if tile.kind != TileKind::Ab {
        return Err(FoliationError::NotAbTile);
    }
    let n = *tile
        .vertices
        .get(2)
        .ok_or_else(|| FoliationError::InvalidTiling("ab tile without a third slot".into()))?;
    let n_sign = t
        .vertex(n)
        .ok_or_else(|| FoliationError::UnknownId(n.to_string()))?
        .sign;
    if n_sign != Sign::Minus {
        return Err(FoliationError::NonLocalConfiguration(
            "ab tile's third slot is not a negative vertex".into(),
        ));
    }
    let sign = t
        .singularity(tile.singularity)
        .ok_or_else(|| FoliationError::UnknownId(tile.singularity.to_string()))?
        .sign;

    let mut out = t.clone();
    let others: Vec<TileId> = out
        .tiles
        .values()
        .filter(|t2| t2.id != tile_id && t2.vertices.contains(&n))
        .map(|t2| t2.id)
        .collect();
    for tid in others {
        retype_tile_without(&mut out, tid, n)?;
    }
    collapse(
        &mut out,
        &CollapsePlan {
            dead_tiles: BTreeSet::from([tile_id]),
            dead_vertices: BTreeSet::from([n]),
            convert_at: Some(n),
        },
    )?;
    check_result(&out)?;
    Ok((out, Move::Stabilize { sign }))
}

/// Destabilization along an end tile: the vertex must have valence 1 inside
/// an aa tile glued to itself along the loop at that vertex. The ledger index
/// drops by one.
pub fn destabilize_along_end_tile(
    t: &Tiling,
    v: VertexId,
) -> Result<(Tiling, Move), FoliationError> {
    let vertex = t
        .vertex(v)
        .ok_or_else(|| FoliationError::UnknownId(v.to_string()))?;
    if vertex.sign != Sign::Plus {
        return Err(FoliationError::NotEndTile("vertex is negative".into()));
    }
    let valence = t.valence(v);
    if valence != 1 {
        return Err(FoliationError::NotEndTile(format!("valence is {valence}, not 1")));
    }
    let tile = t
        .tiles()
        .find(|tile| tile.vertices.contains(&v))
        .expect("valence 1 vertex lies on a tile");
    if tile.kind != TileKind::Aa {
        return Err(FoliationError::NotEndTile(format!("tile {} is {}", tile.id, tile.kind)));
    }
    let slots = if tile.vertices[0] == v { [0, 1] } else { [2, 3] };
    let e_loop = tile.edges[slots[0]];
    if tile.edges[slots[1]] != e_loop
        || t.edge(e_loop).unwrap().adjacent_tiles != [tile.id, tile.id]
    {
        return Err(FoliationError::NotEndTile(
            "tile is not glued to itself along the loop at the vertex".into(),
        ));
    }
    let sign = t.singularity(tile.singularity).unwrap().sign;
    let tile_id = tile.id;

    let mut out = t.clone();
    collapse(
        &mut out,
        &CollapsePlan {
            dead_tiles: BTreeSet::from([tile_id]),
            dead_vertices: BTreeSet::from([v]),
            convert_at: None,
        },
    )?;
    check_result(&out)?;
    Ok((out, Move::Destabilize { sign: Some(sign) }))
}

/// Graph of the vertex-to-vertex singular arcs of an all-aa tiling: one node
/// per vertex, one candidate edge per tile, restricted to arcs whose cut
/// leaves the tile adjacency complex connected. For a valid disc this is a
/// spanning tree.
#[derive(Clone, Debug)]
pub struct LeafGraph {
    pub nodes: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId, TileId)>,
}

impl LeafGraph {
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|&(a, b, _)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        self.nodes.iter().copied().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        if self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        let index: BTreeMap<VertexId, usize> =
            self.nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = Dsu::new(self.nodes.len());
        for &(a, b, _) in &self.edges {
            dsu.union(index[&a], index[&b]);
        }
        let root = dsu.find(0);
        (1..self.nodes.len()).all(|i| dsu.find(i) == root)
    }
}

/// Cut-and-check: split the tile along its vertex-to-vertex singular arc
/// (slot parity picks the two sides) and test whether the tile adjacency
/// complex stays connected.
fn leaf_edge_nonseparating(t: &Tiling, tile: &FTile) -> bool {
    let others: Vec<TileId> = t.tiles().map(|x| x.id).filter(|&id| id != tile.id).collect();
    let index: BTreeMap<TileId, usize> =
        others.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let half_a = others.len();
    let half_b = others.len() + 1;
    let mut dsu = Dsu::new(others.len() + 2);
    for edge in t.edges() {
        let mut own_slots: Vec<usize> = tile
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == edge.id)
            .map(|(i, _)| i)
            .collect();
        let resolve = |adj: TileId, own_slots: &mut Vec<usize>| -> usize {
            if adj == tile.id {
                let pos = own_slots.pop().expect("slot bookkeeping matches adjacency");
                if pos % 2 == 0 {
                    half_a
                } else {
                    half_b
                }
            } else {
                index[&adj]
            }
        };
        let a = resolve(edge.adjacent_tiles[0], &mut own_slots);
        let b = resolve(edge.adjacent_tiles[1], &mut own_slots);
        dsu.union(a, b);
    }
    let root = dsu.find(half_a);
    (0..others.len() + 2).all(|i| dsu.find(i) == root)
}

pub fn singular_leaf_graph(t: &Tiling) -> Result<LeafGraph, FoliationError> {
    if t.tiles().any(|tile| tile.kind != TileKind::Aa) {
        return Err(FoliationError::NonAaTilesPresent);
    }
    let nodes: Vec<VertexId> = t.vertices().map(|v| v.id).collect();
    let mut edges = Vec::new();
    for tile in t.tiles() {
        if leaf_edge_nonseparating(t, tile) {
            edges.push((tile.vertices[0], tile.vertices[1], tile.id));
        }
    }
    Ok(LeafGraph { nodes, edges })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimplifyAction {
    RemoveInessentialArc,
    StabilizeAlongAbTile,
    DestabilizeEndTile,
}

/// Census snapshot recorded after each rewrite.
#[derive(Clone, Copy, Debug)]
pub struct SimplifyStep {
    pub action: SimplifyAction,
    pub vertices: usize,
    pub singularities: usize,
    pub ledger: i64,
}

#[derive(Clone, Debug)]
pub struct SimplifyTrace {
    pub certificate: MoveCertificate,
    pub final_tiling: Tiling,
    pub steps: Vec<SimplifyStep>,
}

/// Simplifies a valid disc tiling to the radial disc: first removes the
/// removable inessential b-arcs, then stabilizes along ab tiles until no
/// negative vertices remain, then destabilizes end tiles chosen from the
/// leaves of the singular-leaf tree. Returns the stabilize/destabilize moves
/// as a certificate whose ledger ends at 1.
pub fn simplify_disc(t: &Tiling) -> Result<(MoveCertificate, Tiling), FoliationError> {
    let trace = simplify_disc_trace(t)?;
    Ok((trace.certificate, trace.final_tiling))
}

pub fn simplify_disc_trace(t: &Tiling) -> Result<SimplifyTrace, FoliationError> {
    let report = validate_tiling(t);
    if !report.is_valid() {
        return Err(FoliationError::InvalidTiling(report.to_string()));
    }
    if t.surface_kind != SurfaceKind::Disc {
        return Err(FoliationError::InvalidTiling("surface is not a disc".into()));
    }

    let initial_index = t.ledger_index();
    let mut current = t.clone();
    let mut moves: Vec<Move> = Vec::new();
    let mut steps: Vec<SimplifyStep> = Vec::new();
    let record = |current: &Tiling, steps: &mut Vec<SimplifyStep>, action: SimplifyAction| {
        steps.push(SimplifyStep {
            action,
            vertices: current.vertex_count(),
            singularities: current.singularity_count(),
            ledger: current.ledger_index(),
        });
    };

    // Phase 0: normalize away removable inessential b-arcs. Arcs whose local
    // picture is outside the supported configuration are left alone; the
    // later phases do not depend on essentialness.
    'arcs: loop {
        let candidates: Vec<EdgeId> = current
            .edges()
            .filter(|e| e.ends.is_b())
            .map(|e| e.id)
            .collect();
        for eid in candidates {
            if is_b_arc_essential(&current, eid)? {
                continue;
            }
            match remove_inessential_b_arc(&current, eid) {
                Ok(next) => {
                    current = next;
                    record(&current, &mut steps, SimplifyAction::RemoveInessentialArc);
                    continue 'arcs;
                }
                Err(FoliationError::SelfAdjacentTiles)
                | Err(FoliationError::NonLocalConfiguration(_)) => continue,
                Err(other) => return Err(other),
            }
        }
        break;
    }

    // Phase 1: eliminate negative vertices, always along the ab tile whose
    // singularity has minimal theta rank.
    while current.negative_vertex_count() > 0 {
        let pick = current
            .tiles()
            .filter(|tile| tile.kind == TileKind::Ab)
            .min_by_key(|tile| current.singularity(tile.singularity).unwrap().theta_rank)
            .map(|tile| tile.id);
        let Some(tile_id) = pick else {
            return Err(FoliationError::StuckNoAbTile);
        };
        let (next, mv) = stabilize_along_ab_tile(&current, tile_id)?;
        current = next;
        moves.push(mv);
        record(&current, &mut steps, SimplifyAction::StabilizeAlongAbTile);
    }

    // Phase 2: all tiles are aa; peel leaves of the singular-leaf tree,
    // lowest axis rank first.
    while current.vertex_count() > 1 {
        let graph = singular_leaf_graph(&current)?;
        if !graph.is_tree() {
            return Err(FoliationError::Internal(
                "singular leaf graph of the all-aa disc is not a tree".into(),
            ));
        }
        let leaf = graph
            .leaves()
            .into_iter()
            .min_by_key(|&v| current.vertex(v).unwrap().axis_rank)
            .ok_or_else(|| FoliationError::Internal("tree without leaves".into()))?;
        let (next, mv) = destabilize_along_end_tile(&current, leaf)?;
        current = next;
        moves.push(mv);
        record(&current, &mut steps, SimplifyAction::DestabilizeEndTile);
    }

    if !current.is_radial_disc() {
        return Err(FoliationError::Internal(
            "simplification did not reach the radial disc".into(),
        ));
    }
    Ok(SimplifyTrace {
        certificate: MoveCertificate {
            initial_index: initial_index as usize,
            moves,
        },
        final_tiling: current,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::fixtures;
    use crate::foliation::tiling::Violation;

    #[test]
    fn validate_examples() {
        assert!(validate_tiling(&Tiling::radial_disc()).is_valid());
        assert!(validate_tiling(&fixtures::one_tile_disc()).is_valid());

        // Flip a vertex sign so an a-edge ends at a negative vertex.
        let mut broken = fixtures::one_tile_disc();
        broken.vertices.get_mut(&VertexId(1)).unwrap().sign = Sign::Minus;
        let report = validate_tiling(&broken);
        assert!(report.contains(Violation::AEdgeAtNegativeVertex), "{report}");
    }

    #[test]
    fn essentialness_by_cyclic_rank() {
        let t = fixtures::inessential_arc_disc();
        // e = b(v1, v2) with ranks 1, 2: adjacent, inessential.
        assert_eq!(is_b_arc_essential(&t, EdgeId(4)), Ok(false));
        // f = b(v3, v2) with ranks 0, 2 of 4: essential.
        assert_eq!(is_b_arc_essential(&t, EdgeId(3)), Ok(true));
        // a-edge input.
        assert_eq!(is_b_arc_essential(&t, EdgeId(0)), Err(FoliationError::NotABArc));
    }

    #[test]
    fn essentialness_wraps_cyclically() {
        let mut b = crate::foliation::TilingBuilder::disc();
        let v0 = b.vertex(Sign::Plus, 0);
        let _v1 = b.vertex(Sign::Plus, 1);
        let _v2 = b.vertex(Sign::Plus, 2);
        let v3 = b.vertex(Sign::Minus, 3);
        let t0 = b.tile_id();
        let e = b.b_edge(v3, v0, [t0, t0]);
        let t = b.build();
        // ranks 3 and 0 on four vertices wrap around to adjacency.
        assert_eq!(is_b_arc_essential(&t, e), Ok(false));
    }

    #[test]
    fn remove_inessential_arc_merges_the_pocket() {
        let t = fixtures::inessential_arc_disc();
        let out = remove_inessential_b_arc(&t, EdgeId(4)).unwrap();
        assert!(validate_tiling(&out).is_valid(), "{}", validate_tiling(&out));
        assert_eq!(out.vertex_count(), 2);
        assert_eq!(out.singularity_count(), 1);
        assert_eq!(out.ledger_index(), t.ledger_index());
        assert_eq!(out.vertex_count() as i64 - out.singularity_count() as i64, 1);
        assert_eq!(out.tiles().count(), 1);
        assert!(out.tiles().all(|tile| tile.kind == TileKind::Aa));
    }

    #[test]
    fn remove_rejects_essential_and_self_adjacent() {
        let t = fixtures::inessential_arc_disc();
        assert_eq!(
            remove_inessential_b_arc(&t, EdgeId(3)),
            Err(FoliationError::EssentialArc)
        );
        // The two-tile disc's b-edge bounds its ab tile on both sides.
        let t2 = fixtures::two_tile_disc();
        assert_eq!(
            remove_inessential_b_arc(&t2, EdgeId(2)),
            Err(FoliationError::SelfAdjacentTiles)
        );
    }

    #[test]
    fn stabilize_two_tile_disc() {
        let t = fixtures::two_tile_disc();
        let ab_tile = t.tiles().find(|x| x.kind == TileKind::Ab).unwrap().id;
        let (out, mv) = stabilize_along_ab_tile(&t, ab_tile).unwrap();
        assert_eq!(mv, Move::Stabilize { sign: Sign::Plus });
        assert_eq!(out.vertex_count(), 2);
        assert_eq!(out.singularity_count(), 1);
        assert_eq!(out.negative_vertex_count(), 0);
        assert_eq!(out.ledger_index(), t.ledger_index() + 1);
        assert!(validate_tiling(&out).is_valid(), "{}", validate_tiling(&out));
    }

    #[test]
    fn stabilize_retypes_the_bb_tile() {
        let t = fixtures::bb_retype_disc();
        let bb_id = t.tiles().find(|x| x.kind == TileKind::Bb).unwrap().id;
        let ab_with_n = TileId(0);
        let (out, _) = stabilize_along_ab_tile(&t, ab_with_n).unwrap();
        assert!(validate_tiling(&out).is_valid(), "{}", validate_tiling(&out));
        let retyped = out.tile(bb_id).unwrap();
        assert_eq!(retyped.kind, TileKind::Ab);
        assert_eq!(out.negative_vertex_count(), 1);
        assert_eq!(out.ledger_index(), t.ledger_index() + 1);
    }

    #[test]
    fn stabilize_rejects_non_ab_tiles() {
        let t = fixtures::one_tile_disc();
        let aa_id = t.tiles().next().unwrap().id;
        assert_eq!(
            stabilize_along_ab_tile(&t, aa_id),
            Err(FoliationError::NotAbTile)
        );
    }

    #[test]
    fn destabilize_one_tile_disc() {
        let t = fixtures::one_tile_disc();
        for v in [VertexId(0), VertexId(1)] {
            let (out, mv) = destabilize_along_end_tile(&t, v).unwrap();
            assert!(out.is_radial_disc());
            assert_eq!(mv, Move::Destabilize { sign: Some(Sign::Plus) });
            assert_eq!(out.ledger_index(), 1);
        }
    }

    #[test]
    fn destabilize_rejections() {
        let radial = Tiling::radial_disc();
        assert!(matches!(
            destabilize_along_end_tile(&radial, VertexId(0)),
            Err(FoliationError::NotEndTile(_))
        ));
        // In the bb fixture, vertex p has valence 4.
        let t = fixtures::bb_retype_disc();
        assert!(matches!(
            destabilize_along_end_tile(&t, VertexId(0)),
            Err(FoliationError::NotEndTile(_))
        ));
    }

    #[test]
    fn leaf_graph_examples() {
        let one = fixtures::one_tile_disc();
        let g = singular_leaf_graph(&one).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert!(g.is_tree());

        let radial = singular_leaf_graph(&Tiling::radial_disc()).unwrap();
        assert_eq!(radial.nodes.len(), 1);
        assert!(radial.edges.is_empty());
        assert!(!radial.is_tree() || radial.nodes.len() == 1);

        assert!(matches!(
            singular_leaf_graph(&fixtures::two_tile_disc()),
            Err(FoliationError::NonAaTilesPresent)
        ));
    }

    #[test]
    fn simplify_radial_is_empty() {
        let trace = simplify_disc_trace(&Tiling::radial_disc()).unwrap();
        assert!(trace.certificate.moves.is_empty());
        assert_eq!(trace.certificate.initial_index, 1);
        assert!(trace.final_tiling.is_radial_disc());
    }

    #[test]
    fn simplify_one_tile_is_one_destabilization() {
        let trace = simplify_disc_trace(&fixtures::one_tile_disc()).unwrap();
        assert_eq!(trace.certificate.initial_index, 2);
        assert_eq!(trace.certificate.moves.len(), 1);
        assert!(matches!(trace.certificate.moves[0], Move::Destabilize { .. }));
    }

    #[test]
    fn simplify_two_tile_stabilizes_then_destabilizes() {
        let trace = simplify_disc_trace(&fixtures::two_tile_disc()).unwrap();
        assert_eq!(trace.certificate.initial_index, 1);
        let kinds: Vec<_> = trace.steps.iter().map(|s| s.action).collect();
        assert_eq!(
            kinds,
            vec![
                SimplifyAction::StabilizeAlongAbTile,
                SimplifyAction::DestabilizeEndTile,
            ]
        );
        // Ledger runs 1 -> 2 -> 1.
        assert_eq!(trace.steps[0].ledger, 2);
        assert_eq!(trace.steps[1].ledger, 1);
        assert!(trace.final_tiling.is_radial_disc());
    }

    #[test]
    fn simplify_bb_fixture_counts() {
        let t = fixtures::bb_retype_disc();
        let trace = simplify_disc_trace(&t).unwrap();
        let stab = trace
            .certificate
            .moves
            .iter()
            .filter(|m| matches!(m, Move::Stabilize { .. }))
            .count();
        let destab = trace.certificate.moves.len() - stab;
        assert_eq!(stab, 2);
        assert_eq!(destab, 3);
        assert_eq!(trace.certificate.initial_index as i64 + stab as i64 - destab as i64, 1);
        for step in &trace.steps {
            assert_eq!(step.vertices as i64 - step.singularities as i64, 1);
        }
        assert!(trace.final_tiling.is_radial_disc());
    }

    #[test]
    fn simplify_removes_the_inessential_pocket_first() {
        let trace = simplify_disc_trace(&fixtures::inessential_arc_disc()).unwrap();
        assert_eq!(trace.steps[0].action, SimplifyAction::RemoveInessentialArc);
        // After the pocket collapses nothing negative remains: only the
        // destabilization of the surviving one-tile disc follows.
        assert_eq!(trace.certificate.moves.len(), 1);
        assert!(trace.final_tiling.is_radial_disc());
    }

    #[test]
    fn simplify_rejects_invalid_input() {
        let mut broken = fixtures::one_tile_disc();
        broken.chi = 5;
        assert!(matches!(
            simplify_disc_trace(&broken),
            Err(FoliationError::InvalidTiling(_))
        ));
    }
}
