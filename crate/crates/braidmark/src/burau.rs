//! The reduced Burau representation, the Alexander polynomial of a braid
//! closure, and the self-linking ledger. These are the exact oracles that
//! certify Markov moves preserve the closure's link type.

use thiserror::Error;

use crate::braid::{BraidWord, Sign};
use crate::laurent::{LaurentMatrix, LaurentPoly};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("the reduced Burau representation needs at least 2 strands")]
    TooFewStrands,
    #[error("the closure is not a knot ({components} components)")]
    NotAKnot { components: usize },
}

/// Reduced Burau matrix of a single generator on `n` strands: the identity
/// except in row `index`, which mixes the neighbouring basis vectors.
fn generator_matrix(n: usize, index: usize, sign: Sign) -> LaurentMatrix {
    let m = n - 1;
    let r = index - 1;
    let mut out = LaurentMatrix::identity(m);
    match sign {
        Sign::Plus => {
            if r >= 1 {
                *out.at_mut(r, r - 1) = LaurentPoly::t();
            }
            *out.at_mut(r, r) = LaurentPoly::monomial(1, -1);
            if r + 1 < m {
                *out.at_mut(r, r + 1) = LaurentPoly::one();
            }
        }
        Sign::Minus => {
            if r >= 1 {
                *out.at_mut(r, r - 1) = LaurentPoly::one();
            }
            *out.at_mut(r, r) = LaurentPoly::monomial(-1, -1);
            if r + 1 < m {
                *out.at_mut(r, r + 1) = LaurentPoly::monomial(-1, 1);
            }
        }
    }
    out
}

/// Product of the reduced Burau matrices of the letters, left to right, so
/// that `burau_reduced(a·b) = burau_reduced(a) · burau_reduced(b)`.
pub fn burau_reduced(w: &BraidWord) -> Result<LaurentMatrix, InvariantError> {
    let n = w.strands();
    if n < 2 {
        return Err(InvariantError::TooFewStrands);
    }
    let mut out = LaurentMatrix::identity(n - 1);
    for g in w.letters() {
        out = out.mul(&generator_matrix(n, g.index, g.sign));
    }
    Ok(out)
}

/// Alexander data of a closure. Knot closures carry the polynomial scaled by
/// `(1-t)/(1-t^n)` and normalized up to units; multi-component closures keep
/// the unscaled determinant, flagged, since the scaling division is the
/// knot-only branch.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClosureAlexander {
    Knot(LaurentPoly),
    MultiComponent { det: LaurentPoly },
}

impl ClosureAlexander {
    pub fn polynomial(&self) -> &LaurentPoly {
        match self {
            ClosureAlexander::Knot(p) => p,
            ClosureAlexander::MultiComponent { det } => det,
        }
    }

    pub fn is_knot(&self) -> bool {
        matches!(self, ClosureAlexander::Knot(_))
    }
}

/// `det(I - burau_reduced(w))`, the raw closure determinant. The one-strand
/// word contributes the empty determinant 1.
fn closure_determinant(w: &BraidWord) -> LaurentPoly {
    if w.strands() == 1 {
        return LaurentPoly::one();
    }
    let b = burau_reduced(w).expect("strands >= 2");
    LaurentMatrix::identity(w.strands() - 1).sub(&b).determinant()
}

/// Alexander polynomial of the closed braid, invariant under conjugation and
/// both stabilizations.
pub fn alexander_of_closure(w: &BraidWord) -> ClosureAlexander {
    let det = closure_determinant(w);
    if w.closure_component_count() != 1 {
        return ClosureAlexander::MultiComponent { det };
    }
    let n = w.strands() as u32;
    let scaled = &det * &LaurentPoly::one_minus_t_power(1);
    let poly = scaled
        .div_exact(&LaurentPoly::one_minus_t_power(n))
        .expect("(1 - t^n) divides (1 - t)·det exactly for knot closures");
    ClosureAlexander::Knot(poly.normalized_units())
}

/// Compares the Alexander invariant of two closures exactly, across possibly
/// different strand counts. Equality of `det·(1-t)/(1-t^n)` up to units is
/// checked by cross-multiplication, which keeps everything polynomial.
pub fn alexander_agrees(a: &BraidWord, b: &BraidWord) -> bool {
    let det_a = closure_determinant(a);
    let det_b = closure_determinant(b);
    let lhs = &det_a * &LaurentPoly::one_minus_t_power(b.strands() as u32);
    let rhs = &det_b * &LaurentPoly::one_minus_t_power(a.strands() as u32);
    lhs.normalized_units() == rhs.normalized_units()
}

/// Self-linking number of a knot closure: exponent sum minus strand count.
pub fn self_linking(w: &BraidWord) -> Result<i64, InvariantError> {
    let components = w.closure_component_count();
    if components != 1 {
        return Err(InvariantError::NotAKnot { components });
    }
    Ok(w.exponent_sum() - w.strands() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Generator;
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn burau_base_cases() {
        assert!(burau_reduced(&w("B2:")).unwrap().is_identity());
        let m = burau_reduced(&w("B2: s1")).unwrap();
        assert_eq!(*m.at(0, 0), poly(&[(1, -1)]));
        assert!(burau_reduced(&w("B2: s1 s1^-1")).unwrap().is_identity());
        assert_eq!(burau_reduced(&w("B1:")), Err(InvariantError::TooFewStrands));
    }

    #[test]
    fn burau_is_multiplicative() {
        let a = w("B4: s1 s3^-1 s2");
        let b = w("B4: s2^-1 s1 s1");
        let ab = a.compose(&b).unwrap();
        assert_eq!(
            burau_reduced(&ab).unwrap(),
            burau_reduced(&a).unwrap().mul(&burau_reduced(&b).unwrap())
        );
    }

    #[test]
    fn burau_respects_the_braid_relations() {
        assert_eq!(
            burau_reduced(&w("B3: s1 s2 s1")).unwrap(),
            burau_reduced(&w("B3: s2 s1 s2")).unwrap()
        );
        assert_eq!(
            burau_reduced(&w("B4: s1 s3")).unwrap(),
            burau_reduced(&w("B4: s3 s1")).unwrap()
        );
    }

    #[test]
    fn alexander_known_knots() {
        assert_eq!(
            alexander_of_closure(&w("B2: s1")),
            ClosureAlexander::Knot(poly(&[(0, 1)]))
        );
        assert_eq!(
            alexander_of_closure(&w("B2: s1 s1 s1")),
            ClosureAlexander::Knot(poly(&[(0, 1), (1, -1), (2, 1)]))
        );
        assert_eq!(
            alexander_of_closure(&w("B3: s1 s2^-1 s1 s2^-1")),
            ClosureAlexander::Knot(poly(&[(0, 1), (1, -3), (2, 1)]))
        );
    }

    #[test]
    fn alexander_multi_component_is_flagged() {
        let hopf = alexander_of_closure(&w("B2: s1 s1"));
        assert!(!hopf.is_knot());
        // det(I - [t^2]) = 1 - t^2
        assert_eq!(*hopf.polynomial(), poly(&[(0, 1), (2, -1)]));
        // Split 2-component unlink has vanishing determinant.
        assert!(alexander_of_closure(&w("B2:")).polynomial().is_zero());
    }

    #[test]
    fn one_strand_unknot() {
        assert_eq!(alexander_of_closure(&w("B1:")), ClosureAlexander::Knot(poly(&[(0, 1)])));
    }

    #[test]
    fn self_linking_examples() {
        assert_eq!(self_linking(&w("B2: s1")), Ok(-1));
        assert_eq!(self_linking(&w("B2: s1 s1 s1")), Ok(1));
        assert_eq!(self_linking(&w("B3: s1 s2")), Ok(-1));
        assert_eq!(
            self_linking(&w("B2: s1 s1")),
            Err(InvariantError::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn unknot_chains_have_trivial_alexander() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let mut word = BraidWord::identity(1);
            for _ in 0..rng.gen_range(0..8) {
                if rng.gen_bool(0.6) || word.strands() == 1 {
                    let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                    word = word.stabilize(sign);
                } else {
                    let n = word.strands();
                    let letters = (0..rng.gen_range(0..4))
                        .map(|_| Generator {
                            index: rng.gen_range(1..n),
                            sign: if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
                        })
                        .collect();
                    let g = BraidWord::new(n, letters).unwrap();
                    word = word.conjugate(&g).unwrap();
                }
            }
            assert_eq!(
                alexander_of_closure(&word),
                ClosureAlexander::Knot(LaurentPoly::one()),
                "failed on {word}"
            );
        }
    }

    fn arb_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..strands, prop::bool::ANY), 0..=max_len).prop_map(move |raw| {
            let letters = raw
                .into_iter()
                .map(|(index, pos)| Generator {
                    index,
                    sign: if pos { Sign::Plus } else { Sign::Minus },
                })
                .collect();
            BraidWord::new(strands, letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn burau_of_inverse_is_inverse(word in arb_word(5, 10)) {
            let product = burau_reduced(&word.inverse()).unwrap().mul(&burau_reduced(&word).unwrap());
            prop_assert!(product.is_identity());
        }

        #[test]
        fn alexander_agrees_under_stabilization(word in arb_word(4, 10)) {
            prop_assert!(alexander_agrees(&word, &word.stabilize(Sign::Plus)));
            prop_assert!(alexander_agrees(&word, &word.stabilize(Sign::Minus)));
        }
    }
}
