//! Ready-made disc tilings. They double as documentation of the slot
//! conventions and as inputs for tests and the CLI examples.

use crate::braid::Sign;

use super::tiling::{TileKind, Tiling, TilingBuilder};

/// Disc with two positive vertices and one aa tile glued to itself along
/// both of its a-edges. Boundary is the closure of a 2-braid unknot.
pub fn one_tile_disc() -> Tiling {
    let mut b = TilingBuilder::disc();
    let v0 = b.vertex(Sign::Plus, 0);
    let v1 = b.vertex(Sign::Plus, 1);
    let s = b.singularity(Sign::Plus, 0);
    let t = b.tile_id();
    let e0 = b.a_edge(v0, [t, t]);
    let e1 = b.a_edge(v1, [t, t]);
    b.tile(t, TileKind::Aa, s, vec![v0, v1], vec![e0, e0, e1, e1]);
    b.build()
}

/// Disc with one self-glued ab tile hanging off an aa tile: vertices
/// `(2+, 1-)`, ledger index 1. Stabilizing along the ab tile yields
/// [`one_tile_disc`].
pub fn two_tile_disc() -> Tiling {
    let mut b = TilingBuilder::disc();
    let v1 = b.vertex(Sign::Plus, 0);
    let v2 = b.vertex(Sign::Plus, 1);
    let v3 = b.vertex(Sign::Minus, 2);
    let s_ab = b.singularity(Sign::Plus, 0);
    let s_aa = b.singularity(Sign::Plus, 1);
    let t_ab = b.tile_id();
    let t_aa = b.tile_id();
    let a1 = b.a_edge(v1, [t_ab, t_aa]);
    let a2 = b.a_edge(v1, [t_ab, t_aa]);
    let bb = b.b_edge(v1, v3, [t_ab, t_ab]);
    let c = b.a_edge(v2, [t_aa, t_aa]);
    b.tile(t_ab, TileKind::Ab, s_ab, vec![v1, v1, v3], vec![a1, a2, bb, bb]);
    b.tile(t_aa, TileKind::Aa, s_aa, vec![v1, v2], vec![a1, a2, c, c]);
    b.build()
}

/// Disc carrying an inessential b-arc between two tiles: a one-tile disc
/// with a finger pushed across the axis, creating a `(+,-)` vertex pair and
/// two extra saddles. Removing the arc recovers [`one_tile_disc`].
pub fn inessential_arc_disc() -> Tiling {
    let mut b = TilingBuilder::disc();
    let v1 = b.vertex(Sign::Plus, 1);
    let v2 = b.vertex(Sign::Minus, 2);
    let v3 = b.vertex(Sign::Plus, 0);
    let v4 = b.vertex(Sign::Plus, 3);
    let s1 = b.singularity(Sign::Plus, 0);
    let s2 = b.singularity(Sign::Minus, 1);
    let s3 = b.singularity(Sign::Plus, 2);
    let t1 = b.tile_id();
    let t2 = b.tile_id();
    let t3 = b.tile_id();
    let g1 = b.a_edge(v3, [t1, t3]);
    let g2 = b.a_edge(v3, [t2, t3]);
    let k = b.a_edge(v1, [t1, t2]);
    let f = b.b_edge(v3, v2, [t1, t2]);
    let e = b.b_edge(v1, v2, [t1, t2]);
    let h = b.a_edge(v4, [t3, t3]);
    b.tile(t1, TileKind::Ab, s1, vec![v3, v1, v2], vec![g1, k, f, e]);
    b.tile(t2, TileKind::Ab, s2, vec![v3, v1, v2], vec![g2, k, f, e]);
    b.tile(t3, TileKind::Aa, s3, vec![v3, v4], vec![g1, g2, h, h]);
    b.build()
}

/// Disc whose bb tile shares its negative vertices with two ab tiles: six
/// vertices `(4+, 2-)`, five tiles. Stabilizing along the first ab tile
/// retypes the bb tile to ab.
pub fn bb_retype_disc() -> Tiling {
    let mut b = TilingBuilder::disc();
    let p = b.vertex(Sign::Plus, 0);
    let u = b.vertex(Sign::Plus, 1);
    let n = b.vertex(Sign::Minus, 2);
    let m = b.vertex(Sign::Minus, 3);
    let w = b.vertex(Sign::Plus, 4);
    let q = b.vertex(Sign::Plus, 5);
    let s1 = b.singularity(Sign::Plus, 0);
    let s2 = b.singularity(Sign::Minus, 1);
    let s3 = b.singularity(Sign::Plus, 2);
    let s4 = b.singularity(Sign::Plus, 3);
    let s5 = b.singularity(Sign::Minus, 4);
    let t1 = b.tile_id();
    let t2 = b.tile_id();
    let t3 = b.tile_id();
    let t4 = b.tile_id();
    let t5 = b.tile_id();
    let a1 = b.a_edge(p, [t1, t4]);
    let a2 = b.a_edge(q, [t1, t5]);
    let a3 = b.a_edge(p, [t3, t4]);
    let a4 = b.a_edge(q, [t3, t5]);
    let beta_p = b.b_edge(p, n, [t1, t2]);
    let beta_q = b.b_edge(q, n, [t1, t2]);
    let gamma_p = b.b_edge(p, m, [t2, t3]);
    let gamma_q = b.b_edge(q, m, [t2, t3]);
    let e_u = b.a_edge(u, [t4, t4]);
    let e_w = b.a_edge(w, [t5, t5]);
    b.tile(t1, TileKind::Ab, s1, vec![p, q, n], vec![a1, a2, beta_p, beta_q]);
    b.tile(t2, TileKind::Bb, s2, vec![p, n, q, m], vec![beta_p, gamma_q, gamma_p, beta_q]);
    b.tile(t3, TileKind::Ab, s3, vec![p, q, m], vec![a3, a4, gamma_p, gamma_q]);
    b.tile(t4, TileKind::Aa, s4, vec![u, p], vec![e_u, e_u, a1, a3]);
    b.tile(t5, TileKind::Aa, s5, vec![w, q], vec![e_w, e_w, a2, a4]);
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::validate_tiling;

    #[test]
    fn all_fixtures_validate() {
        for (name, tiling) in [
            ("radial", Tiling::radial_disc()),
            ("one_tile", one_tile_disc()),
            ("two_tile", two_tile_disc()),
            ("inessential_arc", inessential_arc_disc()),
            ("bb_retype", bb_retype_disc()),
        ] {
            let report = validate_tiling(&tiling);
            assert!(report.is_valid(), "{name}: {report}");
        }
    }

    #[test]
    fn fixture_ledgers() {
        assert_eq!(Tiling::radial_disc().ledger_index(), 1);
        assert_eq!(one_tile_disc().ledger_index(), 2);
        assert_eq!(two_tile_disc().ledger_index(), 1);
        assert_eq!(inessential_arc_disc().ledger_index(), 2);
        assert_eq!(bb_retype_disc().ledger_index(), 2);
    }
}
