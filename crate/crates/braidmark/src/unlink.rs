//! Two-colored crossing diagrams and the crossing-switch procedure that
//! splits the green link below the red one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
}

/// One crossing of the projected diagram: which color passes over and which
/// under. Same-color entries are self-crossings of one of the two links.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ColoredCrossing {
    pub id: u32,
    pub over: Color,
    pub under: Color,
}

impl ColoredCrossing {
    pub fn is_mixed(&self) -> bool {
        self.over != self.under
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum UnlinkError {
    #[error("duplicate crossing id {0}")]
    DuplicateId(u32),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "DiagramFile", into = "DiagramFile")]
pub struct ColoredDiagram {
    crossings: Vec<ColoredCrossing>,
}

#[derive(Serialize, Deserialize)]
struct DiagramFile {
    crossings: Vec<ColoredCrossing>,
}

impl TryFrom<DiagramFile> for ColoredDiagram {
    type Error = UnlinkError;
    fn try_from(f: DiagramFile) -> Result<Self, UnlinkError> {
        ColoredDiagram::new(f.crossings)
    }
}

impl From<ColoredDiagram> for DiagramFile {
    fn from(d: ColoredDiagram) -> DiagramFile {
        DiagramFile { crossings: d.crossings }
    }
}

impl ColoredDiagram {
    pub fn new(crossings: Vec<ColoredCrossing>) -> Result<ColoredDiagram, UnlinkError> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &crossings {
            if !seen.insert(c.id) {
                return Err(UnlinkError::DuplicateId(c.id));
            }
        }
        Ok(ColoredDiagram { crossings })
    }

    pub fn crossings(&self) -> &[ColoredCrossing] {
        &self.crossings
    }
}

/// Certificate of a split: exactly the crossings that were switched, one disc
/// push each.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SwitchCertificate {
    pub switched: Vec<u32>,
}

/// Mixed crossings where green passes over red: the obstructions to pushing
/// green below red.
pub fn green_over_red_count(d: &ColoredDiagram) -> usize {
    d.crossings
        .iter()
        .filter(|c| c.over == Color::Green && c.under == Color::Red)
        .count()
}

/// Switches every green-over-red crossing, leaving same-color crossings
/// untouched. The output has no green-over-red crossings left.
pub fn split_by_switches(d: &ColoredDiagram) -> (ColoredDiagram, SwitchCertificate) {
    let mut switched = Vec::new();
    let crossings = d
        .crossings
        .iter()
        .map(|c| {
            if c.over == Color::Green && c.under == Color::Red {
                switched.push(c.id);
                ColoredCrossing { id: c.id, over: Color::Red, under: Color::Green }
            } else {
                *c
            }
        })
        .collect();
    (
        ColoredDiagram { crossings },
        SwitchCertificate { switched },
    )
}
