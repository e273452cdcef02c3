//! braidmark: a calculus for closed braids.
//!
//! The crate models braid words and the Markov moves on their closures,
//! decides the word problem by Garside normal forms, computes exact link
//! invariants through the reduced Burau representation, rewrites combinatorial
//! braid-foliated disc tilings down to the radial disc, and emits replayable
//! move certificates that a verifier can check against the invariants.

pub mod batch;
pub mod braid;
pub mod burau;
pub mod certify;
pub mod foliation;
pub mod garside;
pub mod laurent;
pub mod unlink;

pub use braid::{BraidError, BraidWord, Generator, Permutation, Sign};
pub use burau::{alexander_agrees, alexander_of_closure, burau_reduced, self_linking, ClosureAlexander};
pub use certify::{apply_certificate, certificate_from_disc, verify_equivalence, Move, MoveCertificate};
pub use garside::{normal_form, words_equal};
pub use laurent::{LaurentMatrix, LaurentPoly};
