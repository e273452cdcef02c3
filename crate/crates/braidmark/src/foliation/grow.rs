//! Synthesizes valid disc tilings by running the simplification moves in
//! reverse from the radial disc: end-tile insertions (inverse
//! destabilizations) and self-glued ab-tile insertions (inverse
//! stabilizations). Generated b-arcs are always placed at essential axis
//! ranks, so simplification of a grown disc never needs arc removal.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::braid::Sign;

use super::tiling::{cyclically_adjacent, EdgeEnds, EdgeId, TileId, TileKind, Tiling, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InverseMove {
    /// Inverse of destabilization: a new valence-1 positive vertex in an aa
    /// tile glued to itself.
    AddEndTile,
    /// Inverse of stabilization along an ab tile: a new valence-1 negative
    /// vertex in a self-glued ab tile. Falls back to an end tile when the
    /// ledger or the axis order leaves no room.
    AddAbTile,
}

/// Random script with a fixed bias towards end tiles, so ab insertions keep
/// finding positive vertices to attach to.
pub fn random_script<R: Rng>(len: usize, rng: &mut R) -> Vec<InverseMove> {
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.4) {
                InverseMove::AddAbTile
            } else {
                InverseMove::AddEndTile
            }
        })
        .collect()
}

/// Grows a disc tiling from the radial seed by the given script. Output is
/// always valid and simplifies back to the radial disc.
pub fn grow_disc(script: &[InverseMove], rng_seed: u64) -> Tiling {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut t = Tiling::radial_disc();
    for mv in script {
        match mv {
            InverseMove::AddEndTile => add_end_tile(&mut t, &mut rng),
            InverseMove::AddAbTile => {
                if !try_add_ab_tile(&mut t, &mut rng) {
                    add_end_tile(&mut t, &mut rng);
                }
            }
        }
        debug_assert!(
            super::validate_tiling(&t).is_valid(),
            "grown tiling invalid: {}",
            super::validate_tiling(&t)
        );
    }
    t
}

fn insert_axis_rank(t: &mut Tiling, r: usize) {
    for v in t.vertices.values_mut() {
        if v.axis_rank >= r {
            v.axis_rank += 1;
        }
    }
}

fn insert_theta_rank(t: &mut Tiling, r: usize) {
    for s in t.singularities.values_mut() {
        if s.theta_rank >= r {
            s.theta_rank += 1;
        }
    }
}

fn a_edges_at(t: &Tiling, v: VertexId) -> Vec<EdgeId> {
    t.edges()
        .filter(|e| matches!(e.ends, EdgeEnds::Axis(x) if x == v))
        .map(|e| e.id)
        .collect()
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn new_vertex(t: &mut Tiling, sign: Sign, rank: usize) -> VertexId {
    insert_axis_rank(t, rank);
    let id = t.fresh_vertex_id();
    t.vertices.insert(id, super::tiling::FVertex { id, sign, axis_rank: rank });
    id
}

fn new_singularity<R: Rng>(t: &mut Tiling, rng: &mut R) -> super::tiling::SingId {
    let rank = rng.gen_range(0..=t.singularity_count());
    insert_theta_rank(t, rank);
    let id = t.fresh_sing_id();
    t.singularities.insert(
        id,
        super::tiling::FSingularity { id, sign: random_sign(rng), theta_rank: rank },
    );
    id
}

fn new_edge(t: &mut Tiling, ends: EdgeEnds, adjacent_tiles: [TileId; 2]) -> EdgeId {
    let id = t.fresh_edge_id();
    t.edges.insert(id, super::tiling::FEdge { id, ends, adjacent_tiles });
    id
}

/// Splits an a-edge into two parallel copies flanking a new tile: the inverse
/// of the merge the simplification moves perform when a tile dies.
fn split_a_edge(t: &mut Tiling, g: EdgeId, new_tile: TileId) -> (EdgeId, EdgeId) {
    let old = t.edges.remove(&g).unwrap();
    let [p, q] = old.adjacent_tiles;
    let f1 = new_edge(t, old.ends, [p, new_tile]);
    let f2 = new_edge(t, old.ends, [new_tile, q]);
    let pos1 = t.tiles[&p].edges.iter().position(|&e| e == g).unwrap();
    t.tiles.get_mut(&p).unwrap().edges[pos1] = f1;
    let pos2 = t.tiles[&q].edges.iter().position(|&e| e == g).unwrap();
    t.tiles.get_mut(&q).unwrap().edges[pos2] = f2;
    (f1, f2)
}

fn add_end_tile<R: Rng>(t: &mut Tiling, rng: &mut R) {
    let anchors: Vec<VertexId> = t
        .vertices()
        .filter(|v| v.sign == Sign::Plus)
        .map(|v| v.id)
        .collect();
    let w = anchors[rng.gen_range(0..anchors.len())];
    let rank = rng.gen_range(0..=t.vertex_count());
    let v = new_vertex(t, Sign::Plus, rank);
    let sing = new_singularity(t, rng);
    let tile = t.fresh_tile_id();
    let e_loop = new_edge(t, EdgeEnds::Axis(v), [tile, tile]);
    let w_edges = a_edges_at(t, w);
    let (f1, f2) = if w_edges.is_empty() {
        let e_w = new_edge(t, EdgeEnds::Axis(w), [tile, tile]);
        (e_w, e_w)
    } else {
        let g = w_edges[rng.gen_range(0..w_edges.len())];
        split_a_edge(t, g, tile)
    };
    t.tiles.insert(
        tile,
        super::tiling::FTile {
            id: tile,
            kind: TileKind::Aa,
            singularity: sing,
            vertices: vec![v, w],
            edges: vec![e_loop, e_loop, f1, f2],
        },
    );
}

fn try_add_ab_tile<R: Rng>(t: &mut Tiling, rng: &mut R) -> bool {
    if t.ledger_index() < 2 {
        return false;
    }
    let v_count = t.vertex_count();
    // Anchor candidates: positive vertices with an a-edge and at least one
    // axis slot leaving the new b-arc essential.
    let mut options: Vec<(VertexId, Vec<usize>)> = Vec::new();
    for vert in t.vertices() {
        if vert.sign != Sign::Plus {
            continue;
        }
        if a_edges_at(t, vert.id).is_empty() {
            continue;
        }
        let slots: Vec<usize> = (0..=v_count)
            .filter(|&r| {
                let shifted = vert.axis_rank + usize::from(vert.axis_rank >= r);
                !cyclically_adjacent(r, shifted, v_count + 1)
            })
            .collect();
        if !slots.is_empty() {
            options.push((vert.id, slots));
        }
    }
    if options.is_empty() {
        return false;
    }
    let (p, slots) = &options[rng.gen_range(0..options.len())];
    let p = *p;
    let rank = slots[rng.gen_range(0..slots.len())];
    let p_edges = a_edges_at(t, p);
    let g = p_edges[rng.gen_range(0..p_edges.len())];

    let n = new_vertex(t, Sign::Minus, rank);
    let sing = new_singularity(t, rng);
    let tile = t.fresh_tile_id();
    let (a1, a2) = split_a_edge(t, g, tile);
    let beta = new_edge(t, EdgeEnds::Span(p, n), [tile, tile]);
    t.tiles.insert(
        tile,
        super::tiling::FTile {
            id: tile,
            kind: TileKind::Ab,
            singularity: sing,
            vertices: vec![p, p, n],
            edges: vec![a1, a2, beta, beta],
        },
    );
    debug_assert!(super::is_b_arc_essential(t, beta).unwrap());
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{simplify_disc_trace, validate_tiling};

    #[test]
    fn empty_script_is_radial() {
        assert!(grow_disc(&[], 0).is_radial_disc());
    }

    #[test]
    fn one_end_tile_gives_the_one_tile_disc_shape() {
        let t = grow_disc(&[InverseMove::AddEndTile], 1);
        assert!(validate_tiling(&t).is_valid());
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.singularity_count(), 1);
        assert_eq!(t.ledger_index(), 2);
    }

    #[test]
    fn ab_insertions_need_room() {
        // With three positive vertices there is always an essential slot.
        let t = grow_disc(
            &[InverseMove::AddEndTile, InverseMove::AddEndTile, InverseMove::AddAbTile],
            5,
        );
        assert!(validate_tiling(&t).is_valid());
        assert_eq!(t.negative_vertex_count(), 1);
        assert_eq!(t.ledger_index(), 2);
    }

    #[test]
    fn grown_discs_validate_and_simplify() {
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let len = (seed % 30) as usize + 1;
            let script = random_script(len, &mut rng);
            let t = grow_disc(&script, seed.wrapping_mul(77));
            let report = validate_tiling(&t);
            assert!(report.is_valid(), "seed {seed}: {report}");
            assert!(t.ledger_index() >= 1);
            assert!(t.edges().filter(|e| e.ends.is_b()).all(|e| {
                crate::foliation::is_b_arc_essential(&t, e.id).unwrap()
            }));
            let trace = simplify_disc_trace(&t).expect("grown disc simplifies");
            assert!(trace.final_tiling.is_radial_disc());
            assert_eq!(
                trace.certificate.stabilization_count(),
                t.negative_vertex_count()
            );
        }
    }
}
