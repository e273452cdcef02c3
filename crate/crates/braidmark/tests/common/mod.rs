//! Test-side oracles, independent of the implementation paths they check.
//!
//! - A breadth-first rewrite search deciding the word problem in `B_3` on
//!   short words, with an explicit length cap. Its soundness rests on the
//!   twelve local rewrite patterns being checked against the reduced Burau
//!   representation (faithful on three strands) and the permutation image.
//! - A Seifert-matrix Alexander computation, `det(V - tV^T)`, for the frozen
//!   known-value checks.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use braidmark::laurent::{LaurentMatrix, LaurentPoly};
use braidmark::{BraidWord, Generator, Sign};

/// Letters of `B_3` packed into 2 bits: bit 0 picks the generator, bit 1 the
/// sign (set = inverse).
pub type Letter = u8;

pub const B3_LETTERS: [Letter; 4] = [0b00, 0b10, 0b01, 0b11];

pub fn letter_inverse(l: Letter) -> Letter {
    l ^ 0b10
}

pub fn letter_to_generator(l: Letter) -> Generator {
    Generator {
        index: (l & 1) as usize + 1,
        sign: if l & 0b10 == 0 { Sign::Plus } else { Sign::Minus },
    }
}

pub fn to_braid_word(word: &[Letter]) -> BraidWord {
    BraidWord::new(3, word.iter().map(|&l| letter_to_generator(l)).collect()).unwrap()
}

/// Packs a word of length <= 12 into a u32: 4 bits of length, 2 bits per
/// letter.
pub fn encode(word: &[Letter]) -> u32 {
    let mut bits = word.len() as u32;
    for (i, &l) in word.iter().enumerate() {
        bits |= (l as u32) << (4 + 2 * i);
    }
    bits
}

pub fn decode(code: u32) -> Vec<Letter> {
    let len = (code & 0b1111) as usize;
    (0..len).map(|i| ((code >> (4 + 2 * i)) & 0b11) as Letter).collect()
}

/// The twelve local identities used as rewrite moves: the braid relation in
/// every sign pattern that stays within three letters, in both generator
/// roles. Each pair `(lhs, rhs)` is a valid identity in `B_3`.
pub fn rewrite_patterns() -> Vec<([Letter; 3], [Letter; 3])> {
    let mk = |idx: u8, negative: bool| -> Letter { idx | ((negative as u8) << 1) };
    // Sign triples (lhs, rhs) with lhs on letters (i, j, i), rhs on (j, i, j).
    let sign_patterns: [([bool; 3], [bool; 3]); 6] = [
        ([false, false, false], [false, false, false]),
        ([true, true, true], [true, true, true]),
        ([false, false, true], [true, false, false]),
        ([true, false, false], [false, false, true]),
        ([false, true, true], [true, true, false]),
        ([true, true, false], [false, true, true]),
    ];
    let mut out = Vec::new();
    for (i, j) in [(0u8, 1u8), (1u8, 0u8)] {
        for (ls, rs) in sign_patterns {
            out.push((
                [mk(i, ls[0]), mk(j, ls[1]), mk(i, ls[2])],
                [mk(j, rs[0]), mk(i, rs[1]), mk(j, rs[2])],
            ));
        }
    }
    out
}

/// One-step rewrite neighbourhood: free deletions, free insertions up to the
/// cap, and the local braid-relation substitutions.
pub fn neighbors(word: &[Letter], cap: usize, patterns: &[([Letter; 3], [Letter; 3])]) -> Vec<u32> {
    let mut out = Vec::new();
    let n = word.len();
    for i in 0..n.saturating_sub(1) {
        if word[i + 1] == letter_inverse(word[i]) {
            let mut next = Vec::with_capacity(n - 2);
            next.extend_from_slice(&word[..i]);
            next.extend_from_slice(&word[i + 2..]);
            out.push(encode(&next));
        }
    }
    if n + 2 <= cap {
        for pos in 0..=n {
            for &g in &B3_LETTERS {
                let mut next = Vec::with_capacity(n + 2);
                next.extend_from_slice(&word[..pos]);
                next.push(g);
                next.push(letter_inverse(g));
                next.extend_from_slice(&word[pos..]);
                out.push(encode(&next));
            }
        }
    }
    for i in 0..n.saturating_sub(2) {
        let window = [word[i], word[i + 1], word[i + 2]];
        for (lhs, rhs) in patterns {
            if window == *lhs {
                let mut next = word.to_vec();
                next[i..i + 3].copy_from_slice(rhs);
                out.push(encode(&next));
            }
        }
    }
    out
}

pub struct BfsOutcome {
    pub visited: usize,
}

/// Multi-target search: connects every member of `members` to the first one
/// through rewrites among words of length <= cap. `class_of` maps every
/// length <= 6 word to its normal-form class; visiting a short word from a
/// different class is a soundness failure and reported immediately.
pub fn bfs_connects_class(
    members: &BTreeSet<u32>,
    class_id: usize,
    class_of: &HashMap<u32, usize>,
    cap: usize,
    budget: usize,
) -> Result<BfsOutcome, String> {
    let patterns = rewrite_patterns();
    let start = *members.iter().next().unwrap();
    let mut remaining: HashSet<u32> = members.iter().copied().collect();
    remaining.remove(&start);
    let mut visited: HashSet<u32> = HashSet::new();
    visited.insert(start);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(code) = queue.pop_front() {
        if remaining.is_empty() {
            break;
        }
        let word = decode(code);
        for next in neighbors(&word, cap, &patterns) {
            if !visited.insert(next) {
                continue;
            }
            if let Some(&other) = class_of.get(&next) {
                if other != class_id {
                    return Err(format!(
                        "rewrite reached class {other} from class {class_id}: {:?} -> {:?}",
                        decode(start),
                        decode(next)
                    ));
                }
            }
            remaining.remove(&next);
            queue.push_back(next);
            if visited.len() > budget {
                return Err(format!(
                    "search budget exhausted connecting class {class_id} ({} members unreached)",
                    remaining.len()
                ));
            }
        }
    }
    if remaining.is_empty() {
        Ok(BfsOutcome { visited: visited.len() })
    } else {
        Err(format!(
            "class {class_id}: {} members not reachable within cap {cap}",
            remaining.len()
        ))
    }
}

/// Every `B_3` word of length <= max_len, encoded.
pub fn all_b3_words(max_len: usize) -> Vec<u32> {
    let mut out = vec![encode(&[])];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_layer = Vec::with_capacity(layer.len() * 4);
        for word in &layer {
            for &l in &B3_LETTERS {
                let mut next = word.clone();
                next.push(l);
                out.push(encode(&next));
                next_layer.push(next);
            }
        }
        layer = next_layer;
    }
    out
}

/// Groups the given words by Garside normal form. Returns the class map and
/// the classes themselves.
pub fn normal_form_classes(codes: &[u32]) -> (HashMap<u32, usize>, Vec<BTreeSet<u32>>) {
    let mut by_form: BTreeMap<String, usize> = BTreeMap::new();
    let mut classes: Vec<BTreeSet<u32>> = Vec::new();
    let mut class_of = HashMap::with_capacity(codes.len());
    for &code in codes {
        let nf = braidmark::normal_form(&to_braid_word(&decode(code))).to_string();
        let id = *by_form.entry(nf).or_insert_with(|| {
            classes.push(BTreeSet::new());
            classes.len() - 1
        });
        classes[id].insert(code);
        class_of.insert(code, id);
    }
    (class_of, classes)
}

/// Alexander polynomial from a Seifert matrix: `det(V - t V^T)`, unit
/// normalized. The empty matrix yields 1.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> LaurentPoly {
    let n = v.len();
    let mut m = LaurentMatrix::zero(n, n);
    for r in 0..n {
        assert_eq!(v[r].len(), n);
        for c in 0..n {
            let value = &LaurentPoly::constant(v[r][c])
                - &(&LaurentPoly::t() * &LaurentPoly::constant(v[c][r]));
            *m.at_mut(r, c) = value;
        }
    }
    m.determinant().normalized_units()
}
