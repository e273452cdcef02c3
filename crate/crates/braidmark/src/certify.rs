//! Markov-equivalence certificates: an explicit move language over braid
//! words, an applier that replays certificates, and a verifier that decides
//! the certified chain while cross-checking the exact invariants.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidWord, Sign};
use crate::burau::alexander_agrees;
use crate::foliation::{simplify_disc, FoliationError, Tiling};
use crate::garside::words_equal;

/// One certified move. Conjugation carries an explicit witness word; cyclic
/// rotation is its own move kind so that destabilization's final-letter
/// precondition is reachable without bulky witnesses.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    Stabilize {
        sign: Sign,
    },
    Destabilize {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sign: Option<Sign>,
    },
    Conjugate {
        witness: BraidWord,
    },
    CyclicRotate,
}

/// An ordered sequence of moves witnessing Markov equivalence, together with
/// the declared starting braid index.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub initial_index: usize,
    pub moves: Vec<Move>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("certificate declares initial index {declared} but the word has {actual} strands")]
    LedgerMismatch { declared: usize, actual: usize },
    #[error("certificate ledger drops below 1 after move {index}")]
    LedgerUnderflow { index: usize },
    #[error("move {index} inapplicable: {reason}")]
    MoveInapplicable { index: usize, reason: String },
}

impl MoveCertificate {
    pub fn empty(initial_index: usize) -> MoveCertificate {
        MoveCertificate { initial_index, moves: Vec::new() }
    }

    pub fn stabilization_count(&self) -> usize {
        self.moves.iter().filter(|m| matches!(m, Move::Stabilize { .. })).count()
    }

    pub fn destabilization_count(&self) -> usize {
        self.moves.iter().filter(|m| matches!(m, Move::Destabilize { .. })).count()
    }

    /// Braid-index ledger along the replay: starts at `initial_index`, +1 per
    /// stabilization, -1 per destabilization. Must never drop below 1.
    pub fn ledger_trace(&self) -> Result<Vec<i64>, CertifyError> {
        let mut trace = vec![self.initial_index as i64];
        for (index, mv) in self.moves.iter().enumerate() {
            let delta = match mv {
                Move::Stabilize { .. } => 1,
                Move::Destabilize { .. } => -1,
                Move::Conjugate { .. } | Move::CyclicRotate => 0,
            };
            let next = trace.last().unwrap() + delta;
            if next < 1 {
                return Err(CertifyError::LedgerUnderflow { index });
            }
            trace.push(next);
        }
        Ok(trace)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<MoveCertificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Folds the certificate over the starting word, failing atomically at the
/// first inapplicable move.
pub fn apply_certificate(
    start: &BraidWord,
    cert: &MoveCertificate,
) -> Result<BraidWord, CertifyError> {
    if start.strands() != cert.initial_index {
        return Err(CertifyError::LedgerMismatch {
            declared: cert.initial_index,
            actual: start.strands(),
        });
    }
    cert.ledger_trace()?;
    let mut word = start.clone();
    for (index, mv) in cert.moves.iter().enumerate() {
        word = match mv {
            Move::Stabilize { sign } => word.stabilize(*sign),
            Move::Destabilize { sign } => {
                let removed_sign = word.letters().last().map(|g| g.sign);
                let next = word.destabilize().map_err(|e| CertifyError::MoveInapplicable {
                    index,
                    reason: e.to_string(),
                })?;
                if let (Some(declared), Some(actual)) = (sign, removed_sign) {
                    if *declared != actual {
                        return Err(CertifyError::MoveInapplicable {
                            index,
                            reason: format!(
                                "declared sign {declared} does not match the removed letter"
                            ),
                        });
                    }
                }
                next
            }
            Move::Conjugate { witness } => {
                word.conjugate(witness).map_err(|e| CertifyError::MoveInapplicable {
                    index,
                    reason: e.to_string(),
                })?
            }
            Move::CyclicRotate => word.cyclic_rotate(),
        };
    }
    Ok(word)
}

/// Outcome of checking one certificate. The verdict is `accepted`; the
/// invariant cross-checks are reported alongside, and an alarm is raised in
/// the impossible case where the replay succeeds while invariants disagree.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub accepted: bool,
    pub replayed: Option<BraidWord>,
    pub replay_error: Option<String>,
    pub words_match: Option<bool>,
    pub component_counts: (usize, usize),
    pub components_match: bool,
    pub alexander_match: bool,
    pub ledger: Option<Vec<i64>>,
    pub consistency_alarm: Option<String>,
}

/// Decides whether the certificate replays `a` into a word equal to `b` in
/// `B_n`, cross-checking component counts and the Alexander invariant.
pub fn verify_equivalence(
    a: &BraidWord,
    b: &BraidWord,
    cert: &MoveCertificate,
) -> VerificationReport {
    let component_counts = (a.closure_component_count(), b.closure_component_count());
    let components_match = component_counts.0 == component_counts.1;
    let alexander_match = alexander_agrees(a, b);
    let ledger = cert.ledger_trace().ok();

    let (accepted, replayed, replay_error, words_match) = match apply_certificate(a, cert) {
        Err(e) => (false, None, Some(e.to_string()), None),
        Ok(word) => {
            if word.strands() != b.strands() {
                (false, Some(word), None, Some(false))
            } else {
                let eq = words_equal(&word, b).expect("strand counts match");
                (eq, Some(word), None, Some(eq))
            }
        }
    };

    let consistency_alarm = if accepted && (!components_match || !alexander_match) {
        Some(
            "certificate accepted but the invariant cross-checks disagree; \
             this indicates an engine inconsistency"
                .to_string(),
        )
    } else {
        None
    };

    VerificationReport {
        accepted,
        replayed,
        replay_error,
        words_match,
        component_counts,
        components_match,
        alexander_match,
        ledger,
        consistency_alarm,
    }
}

/// Certificate produced by simplifying a valid disc tiling; its ledger starts
/// at the tiling's braid index and ends at 1.
pub fn certificate_from_disc(t: &Tiling) -> Result<MoveCertificate, FoliationError> {
    let (certificate, _) = simplify_disc(t)?;
    Ok(certificate)
}
