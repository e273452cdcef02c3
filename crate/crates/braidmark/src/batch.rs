//! Batch experiment helpers. The inner loops are embarrassingly parallel, so
//! with the `parallel` feature (on by default) they run on rayon; without it
//! they degrade to plain iteration. Every entry point also has an `_seq`
//! twin that is always sequential, used by the benchmark suite to compare
//! the two code paths. Results are deterministic for a given seed either
//! way: each case derives its own generator from the seed and its index.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::braid::{BraidWord, Generator, Sign};
use crate::burau::alexander_of_closure;
use crate::foliation::{grow_disc, random_script, simplify_disc_trace};
use crate::laurent::LaurentPoly;

pub fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

pub fn map_indexed_seq<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Uniform random braid word within the given bounds.
pub fn random_word<R: Rng>(
    rng: &mut R,
    strands: std::ops::RangeInclusive<usize>,
    len: std::ops::RangeInclusive<usize>,
) -> BraidWord {
    let n = rng.gen_range(strands);
    let length = rng.gen_range(len);
    let letters = if n == 1 {
        Vec::new()
    } else {
        (0..length)
            .map(|_| Generator {
                index: rng.gen_range(1..n),
                sign: if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
            })
            .collect()
    };
    BraidWord::new(n, letters).unwrap()
}

/// Random word whose closure is a knot, by rejection.
pub fn random_knot_word<R: Rng>(
    rng: &mut R,
    strands: std::ops::RangeInclusive<usize>,
    len: std::ops::RangeInclusive<usize>,
) -> BraidWord {
    loop {
        let w = random_word(rng, strands.clone(), len.clone());
        if w.closure_component_count() == 1 {
            return w;
        }
    }
}

/// One grow/simplify experiment.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub case: usize,
    pub script_len: usize,
    pub initial_index: i64,
    pub stabilizations: usize,
    pub destabilizations: usize,
    pub certificate_len: usize,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str =
        "case,script_len,initial_index,stabilizations,destabilizations,certificate_len";

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.case,
            self.script_len,
            self.initial_index,
            self.stabilizations,
            self.destabilizations,
            self.certificate_len
        )
    }
}

fn sweep_case(case: usize, max_moves: usize, seed: u64) -> SweepRow {
    let mut rng = case_rng(seed, case);
    let script_len = 1 + case % max_moves.max(1);
    let script = random_script(script_len, &mut rng);
    let tiling = grow_disc(&script, rng.gen());
    let trace = simplify_disc_trace(&tiling).expect("grown discs always simplify");
    SweepRow {
        case,
        script_len,
        initial_index: tiling.ledger_index(),
        stabilizations: trace.certificate.stabilization_count(),
        destabilizations: trace.certificate.destabilization_count(),
        certificate_len: trace.certificate.moves.len(),
    }
}

/// Grows `cases` random discs (script lengths cycling through
/// `1..=max_moves`) and simplifies each, reporting the move counts.
pub fn simplify_sweep(max_moves: usize, cases: usize, seed: u64) -> Vec<SweepRow> {
    map_indexed(cases, |i| sweep_case(i, max_moves, seed))
}

pub fn simplify_sweep_seq(max_moves: usize, cases: usize, seed: u64) -> Vec<SweepRow> {
    map_indexed_seq(cases, |i| sweep_case(i, max_moves, seed))
}

fn alexander_case(case: usize, max_strands: usize, max_len: usize, seed: u64) -> LaurentPoly {
    let mut rng = case_rng(seed, case);
    let word = random_word(&mut rng, 1..=max_strands, 0..=max_len);
    alexander_of_closure(&word).polynomial().normalized_units()
}

/// Exact Alexander data for a batch of pseudorandom words.
pub fn alexander_sweep(cases: usize, max_strands: usize, max_len: usize, seed: u64) -> Vec<LaurentPoly> {
    map_indexed(cases, |i| alexander_case(i, max_strands, max_len, seed))
}

pub fn alexander_sweep_seq(
    cases: usize,
    max_strands: usize,
    max_len: usize,
    seed: u64,
) -> Vec<LaurentPoly> {
    map_indexed_seq(cases, |i| alexander_case(i, max_strands, max_len, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_are_deterministic_and_order_stable() {
        let a = simplify_sweep(10, 24, 42);
        let b = simplify_sweep_seq(10, 24, 42);
        assert_eq!(a.len(), 24);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.csv_line(), y.csv_line());
        }
    }

    #[test]
    fn sweep_rows_satisfy_the_ledger_identity() {
        for row in simplify_sweep(15, 30, 7) {
            assert_eq!(
                row.initial_index + row.stabilizations as i64 - row.destabilizations as i64,
                1
            );
            assert_eq!(row.certificate_len, row.stabilizations + row.destabilizations);
        }
    }

    #[test]
    fn alexander_sweeps_agree_between_code_paths() {
        assert_eq!(alexander_sweep(16, 4, 10, 3), alexander_sweep_seq(16, 4, 10, 3));
    }
}
