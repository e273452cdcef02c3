//! Braid words in the Artin presentation of `B_n`, together with the moves
//! that generate Markov equivalence of their closures: conjugation (braid
//! isotopy at fixed index), stabilization and destabilization, plus the
//! braid connected sum.
//!
//! Convention: `σ_i` is the positive half twist of strands `i` and `i+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Sign attached to generators, foliation vertices, singularities and half
/// twists. Serialized as the integer `1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.as_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        Sign::from_i64(v).ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}

/// A single Artin generator `σ_i` or its inverse. `index` is 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub fn positive(index: usize) -> Generator {
        Generator { index, sign: Sign::Plus }
    }

    pub fn negative(index: usize) -> Generator {
        Generator { index, sign: Sign::Minus }
    }

    pub fn inverse(self) -> Generator {
        Generator { index: self.index, sign: self.sign.flip() }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "s{}", self.index),
            Sign::Minus => write!(f, "s{}^-1", self.index),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("not destabilizable: {0}")]
    NotDestabilizable(String),
    #[error("generator index {index} out of range 1..={max} for {strands} strands")]
    IndexOutOfRange { index: usize, max: usize, strands: usize },
    #[error("a braid word needs at least one strand")]
    NoStrands,
    #[error("the closure is not a knot ({components} components)")]
    NotAKnot { components: usize },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// A word in the Artin generators of `B_n`. The empty word is the identity.
///
/// Invariant: every letter has `1 <= index <= strands - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<BraidWord, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for g in &letters {
            if g.index == 0 || g.index > strands.saturating_sub(1) {
                return Err(BraidError::IndexOutOfRange {
                    index: g.index,
                    max: strands - 1,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1, "a braid word needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`. Both words must live in the same `B_n`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Group inverse: letters reversed, signs flipped.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|g| g.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Deletes adjacent pairs `σ_i^ε σ_i^{-ε}` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match stack.last() {
                Some(&top) if top.index == g.index && top.sign == g.sign.flip() => {
                    stack.pop();
                }
                _ => stack.push(g),
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// Image under `B_n -> S_n`, `σ_i ↦ (i, i+1)`, letters applied left to
    /// right. Maps the starting position of a strand to its final position.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for g in &self.letters {
            let (a, b) = (g.index - 1, g.index);
            for v in images.iter_mut() {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        Permutation { images }
    }

    /// Number of components of the closed braid: cycles of the permutation.
    pub fn closure_component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Sum of letter signs (the abelianization).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.sign.as_i64()).sum()
    }

    /// `g · self · g^{-1}`, freely reduced. Realizes braid isotopy of the
    /// closure at fixed braid index.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != g.strands {
            return Err(BraidError::StrandMismatch(self.strands, g.strands));
        }
        let w = g.compose(self)?.compose(&g.inverse())?;
        Ok(w.free_reduce())
    }

    /// Markov stabilization: append `σ_n^{±1}` on `n+1` strands.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Generator { index: self.strands, sign });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Markov destabilization: the generator `σ_{n-1}` must occur exactly
    /// once, as the final letter. Cyclic rotation (a conjugation) brings a
    /// unique occurrence into final position first; see
    /// [`BraidWord::cyclic_rotate`].
    pub fn destabilize(&self) -> Result<BraidWord, BraidError> {
        if self.strands < 2 {
            return Err(BraidError::NotDestabilizable("only one strand".into()));
        }
        let top = self.strands - 1;
        let occurrences = self.letters.iter().filter(|g| g.index == top).count();
        if occurrences != 1 {
            return Err(BraidError::NotDestabilizable(format!(
                "σ{top} occurs {occurrences} times"
            )));
        }
        match self.letters.last() {
            Some(g) if g.index == top => {
                let letters = self.letters[..self.letters.len() - 1].to_vec();
                Ok(BraidWord { strands: self.strands - 1, letters })
            }
            _ => Err(BraidError::NotDestabilizable(format!(
                "the single σ{top} is not the final letter"
            ))),
        }
    }

    /// Moves the first letter to the end; a conjugation of the closure.
    pub fn cyclic_rotate(&self) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters[1..].to_vec();
        letters.push(self.letters[0]);
        BraidWord { strands: self.strands, letters }
    }

    /// Braid connected sum: `self` unchanged, `other` shifted up by
    /// `self.strands - 1`, on `self.strands + other.strands - 1` strands.
    /// The closure is the connected sum of the closures.
    pub fn connect_sum(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|g| Generator {
            index: g.index + shift,
            sign: g.sign,
        }));
        BraidWord {
            strands: self.strands + other.strands - 1,
            letters,
        }
    }
}

/// A bijection on `{1..n}` (stored 0-based). Tracks the strand endpoints of
/// a closed braid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 0-based images; must be a bijection on `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { images })
    }

    /// The adjacent transposition swapping 0-based positions `i` and `i+1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition "apply `self` first, then `other`".
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", cur + 1)?;
                first = false;
                cur = self.images[cur];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    /// Text grammar: `B<n>:` followed by whitespace-separated letters, e.g.
    /// `B3: s1 s2^-1 s1 s1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<BraidWord, BraidError> {
        let parse_err = |offset: usize, message: &str| BraidError::Parse {
            offset,
            message: message.to_string(),
        };
        let trimmed_start = s.len() - s.trim_start().len();
        let rest = s.trim_start();
        if !rest.starts_with('B') {
            return Err(parse_err(trimmed_start, "expected strand header like `B3:`"));
        }
        let colon = rest
            .find(':')
            .ok_or_else(|| parse_err(trimmed_start, "missing `:` after strand count"))?;
        let strands: usize = rest[1..colon]
            .parse()
            .map_err(|_| parse_err(trimmed_start + 1, "strand count must be a positive integer"))?;
        if strands == 0 {
            return Err(parse_err(trimmed_start + 1, "strand count must be at least 1"));
        }
        let body = &rest[colon + 1..];
        let body_offset = trimmed_start + colon + 1;
        let mut letters = Vec::new();
        let mut idx = 0;
        for token in body.split_whitespace() {
            let offset = body_offset + body[idx..].find(token).map(|p| p + idx).unwrap_or(idx);
            idx = offset - body_offset + token.len();
            let rest_tok = token
                .strip_prefix('s')
                .ok_or_else(|| parse_err(offset, "letter must look like `s2` or `s2^-1`"))?;
            let (num, sign) = match rest_tok.strip_suffix("^-1") {
                Some(num) => (num, Sign::Minus),
                None => (rest_tok, Sign::Plus),
            };
            let index: usize = num
                .parse()
                .map_err(|_| parse_err(offset, "letter index must be a positive integer"))?;
            if index == 0 || index > strands.saturating_sub(1) {
                return Err(parse_err(
                    offset,
                    &format!("letter index {index} out of range 1..={} for B{strands}", strands - 1),
                ));
            }
            letters.push(Generator { index, sign });
        }
        BraidWord::new(strands, letters)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn compose_concatenates() {
        assert_eq!(w("B3: s1").compose(&w("B3: s2")).unwrap(), w("B3: s1 s2"));
        assert_eq!(w("B2:").compose(&w("B2: s1")).unwrap(), w("B2: s1"));
        assert_eq!(
            w("B2: s1").compose(&w("B3: s1")),
            Err(BraidError::StrandMismatch(2, 3))
        );
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w("B3: s1 s2").inverse(), w("B3: s2^-1 s1^-1"));
        assert_eq!(w("B2:").inverse(), w("B2:"));
        assert_eq!(w("B2: s1^-1").inverse(), w("B2: s1"));
        let a = w("B3: s1 s2 s1^-1");
        assert!(a.compose(&a.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn free_reduce_cancels() {
        assert_eq!(w("B3: s1 s1^-1 s2").free_reduce(), w("B3: s2"));
        assert_eq!(w("B2: s1 s1").free_reduce(), w("B2: s1 s1"));
        assert_eq!(w("B3: s2 s1 s1^-1 s2^-1").free_reduce(), w("B3:"));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("B2: s1").permutation(), Permutation::from_images(vec![1, 0]).unwrap());
        // s1 s2 sends 1 -> 2 -> 3 -> 1 as a 3-cycle on start positions.
        assert_eq!(
            w("B3: s1 s2").permutation(),
            Permutation::from_images(vec![2, 0, 1]).unwrap()
        );
        assert!(w("B3:").permutation().is_identity());
    }

    #[test]
    fn permutation_is_antihomomorphic_to_then() {
        // permutation(a·b) = apply a, then b.
        let a = w("B4: s1 s3 s2^-1");
        let b = w("B4: s2 s2 s1^-1");
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
    }

    #[test]
    fn component_counts() {
        assert_eq!(w("B3:").closure_component_count(), 3);
        assert_eq!(w("B2: s1").closure_component_count(), 1);
        assert_eq!(w("B2: s1 s1").closure_component_count(), 2);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("B3: s1 s2^-1").exponent_sum(), 0);
        assert_eq!(w("B2: s1 s1 s1").exponent_sum(), 3);
        assert_eq!(w("B2:").exponent_sum(), 0);
    }

    #[test]
    fn conjugation() {
        assert_eq!(w("B2: s1").conjugate(&w("B2: s1")).unwrap(), w("B2: s1"));
        assert_eq!(w("B3: s1").conjugate(&w("B3: s2")).unwrap(), w("B3: s2 s1 s2^-1"));
        assert_eq!(
            w("B3: s1").conjugate(&w("B2: s1")),
            Err(BraidError::StrandMismatch(3, 2))
        );
    }

    #[test]
    fn stabilize_appends_top_generator() {
        assert_eq!(w("B2: s1").stabilize(Sign::Plus), w("B3: s1 s2"));
        assert_eq!(w("B1:").stabilize(Sign::Minus), w("B2: s1^-1"));
        assert_eq!(w("B3: s1 s2").stabilize(Sign::Plus), w("B4: s1 s2 s3"));
    }

    #[test]
    fn destabilize_examples() {
        assert_eq!(w("B3: s1 s2").destabilize().unwrap(), w("B2: s1"));
        assert_eq!(w("B2: s1^-1").destabilize().unwrap(), w("B1:"));
        assert!(matches!(
            w("B3: s2 s1 s2").destabilize(),
            Err(BraidError::NotDestabilizable(_))
        ));
        assert!(matches!(
            w("B3: s2 s1").destabilize(),
            Err(BraidError::NotDestabilizable(_))
        ));
    }

    #[test]
    fn destabilize_undoes_stabilize() {
        for sign in [Sign::Plus, Sign::Minus] {
            let a = w("B3: s2 s1^-1 s2");
            assert_eq!(a.stabilize(sign).destabilize().unwrap(), a);
        }
    }

    #[test]
    fn connect_sum_examples() {
        assert_eq!(
            w("B2: s1 s1 s1").connect_sum(&w("B2: s1 s1 s1")),
            w("B3: s1 s1 s1 s2 s2 s2")
        );
        assert_eq!(w("B2: s1").connect_sum(&w("B1:")), w("B2: s1"));
        assert_eq!(w("B1:").connect_sum(&w("B3: s1 s2")), w("B3: s1 s2"));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["B3: s1 s2^-1 s1 s1", "B1:", "B5: s4^-1", "B2: s1"] {
            let word = w(text);
            assert_eq!(word.to_string(), text);
            assert_eq!(w(&word.to_string()), word);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!("B0:".parse::<BraidWord>(), Err(BraidError::Parse { .. })));
        assert!(matches!("B2: s2".parse::<BraidWord>(), Err(BraidError::Parse { .. })));
        assert!(matches!("B2: x1".parse::<BraidWord>(), Err(BraidError::Parse { .. })));
        assert!(matches!("2: s1".parse::<BraidWord>(), Err(BraidError::Parse { .. })));
        assert!(matches!("B2: s1^-2".parse::<BraidWord>(), Err(BraidError::Parse { .. })));
    }

    #[test]
    fn cyclic_rotate_moves_first_letter_last() {
        assert_eq!(w("B3: s1 s2 s2").cyclic_rotate(), w("B3: s2 s2 s1"));
        assert_eq!(w("B3:").cyclic_rotate(), w("B3:"));
    }
}
