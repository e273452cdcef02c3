//! Left-greedy normal form for braid words and the word problem it decides.
//!
//! A word is rewritten as `Δ^k · A_1 ⋯ A_m` where `Δ` is the half twist and
//! each `A_i` is a permutation braid (positive, each pair of strands crossing
//! at most once), with the sequence left-weighted. Two words are equal in
//! `B_n` exactly when they produce the same form. Factors are re-expanded
//! into generator letters smallest-index-first, so the output is a single
//! canonical word.

use crate::braid::{BraidError, BraidWord, Generator, Permutation, Sign};

/// The half twist `Δ` as a permutation: position `i` maps to `n-1-i`.
fn half_twist(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).unwrap()
}

/// Conjugation by `Δ`; an involution since `Δ²` is central.
fn tau(p: &Permutation) -> Permutation {
    let n = p.n();
    let images = (0..n).map(|x| n - 1 - p.image(n - 1 - x)).collect();
    Permutation::from_images(images).unwrap()
}

/// `i` is in the starting set of a permutation braid iff `σ_{i+1}` divides it
/// on the left. Crossing positions are 0-based here.
fn starting_set(p: &Permutation) -> u64 {
    let mut set = 0u64;
    for i in 0..p.n().saturating_sub(1) {
        if p.image(i) > p.image(i + 1) {
            set |= 1 << i;
        }
    }
    set
}

fn finishing_set(p: &Permutation) -> u64 {
    starting_set(&p.inverse())
}

/// `A ↦ A·σ_{i+1}`: the transposition applied after the braid.
fn append_crossing(p: &Permutation, i: usize) -> Permutation {
    let images = p
        .images()
        .iter()
        .map(|&v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// `B ↦ σ_{i+1}^{-1}·B`, valid when `i` is in the starting set.
fn strip_crossing(p: &Permutation, i: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.swap(i, i + 1);
    Permutation::from_images(images).unwrap()
}

/// Slides crossings left until the pair is left-weighted: the starting set
/// of `b` must be contained in the finishing set of `a`.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let pending = starting_set(b) & !finishing_set(a);
        if pending == 0 {
            return changed;
        }
        let i = pending.trailing_zeros() as usize;
        *a = append_crossing(a, i);
        *b = strip_crossing(b, i);
        changed = true;
    }
}

/// Expands a permutation braid into positive letters, smallest index first.
fn expand_factor(p: &Permutation) -> Vec<Generator> {
    let mut q = p.images().to_vec();
    let mut out = Vec::new();
    loop {
        let Some(i) = (0..q.len() - 1).find(|&i| q[i] > q[i + 1]) else {
            return out;
        };
        out.push(Generator::positive(i + 1));
        q.swap(i, i + 1);
    }
}

fn to_delta_form(w: &BraidWord) -> (i64, Vec<Permutation>) {
    let n = w.strands();
    let omega = half_twist(n);
    let mut power = 0i64;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());
    for g in w.letters() {
        let i = g.index - 1;
        match g.sign {
            Sign::Plus => factors.push(Permutation::adjacent_transposition(n, i)),
            Sign::Minus => {
                // σ^{-1} = Δ^{-1}·(Δσ^{-1}); pushing Δ^{-1} to the front
                // conjugates everything collected so far.
                power -= 1;
                for f in factors.iter_mut() {
                    *f = tau(f);
                }
                factors.push(append_crossing(&omega, i));
            }
        }
    }
    (power, factors)
}

fn left_weight_all(power: &mut i64, factors: &mut Vec<Permutation>, n: usize) {
    let delta = half_twist(n);
    loop {
        factors.retain(|f| !f.is_identity());
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(i + 1);
            changed |= make_left_weighted(&mut left[i], &mut right[0]);
        }
        if !changed {
            break;
        }
    }
    while factors.first() == Some(&delta) {
        factors.remove(0);
        *power += 1;
    }
}

/// Canonical representative of the braid word's element of `B_n`.
pub fn normal_form(w: &BraidWord) -> BraidWord {
    let n = w.strands();
    if n == 1 {
        return BraidWord::identity(1);
    }
    let (mut power, mut factors) = to_delta_form(w);
    left_weight_all(&mut power, &mut factors, n);

    let delta_letters = expand_factor(&half_twist(n));
    let mut letters = Vec::new();
    if power >= 0 {
        for _ in 0..power {
            letters.extend_from_slice(&delta_letters);
        }
    } else {
        let delta_inverse: Vec<Generator> =
            delta_letters.iter().rev().map(|g| g.inverse()).collect();
        for _ in 0..(-power) {
            letters.extend_from_slice(&delta_inverse);
        }
    }
    for f in &factors {
        letters.extend(expand_factor(f));
    }
    BraidWord::new(n, letters).expect("normal form letters stay in range")
}

/// Decides equality in `B_n` via normal forms.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch(a.strands(), b.strands()));
    }
    Ok(normal_form(a) == normal_form(b))
}
