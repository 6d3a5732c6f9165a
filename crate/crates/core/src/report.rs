//! Residual-based check reports and witness search.

use std::fmt;

use serde::Serialize;

use crate::algebra::{format_rational, Rational};
use crate::random;
use crate::tensor::{Point, TensorField};

/// Number of pseudo-random points tried before a nonzero residual is
/// reported as nonzero only symbolically.
pub const WITNESS_ATTEMPTS: usize = 256;

/// Evidence that a residual is not the zero field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A point where the named component evaluates to a nonzero value.
    Point {
        point: Point,
        component: String,
        value: Rational,
    },
    /// No sampled point separated the residual from zero; the component is
    /// nonzero as a polynomial.
    Symbolic { component: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point {
                point,
                component,
                value,
            } => write!(
                f,
                "component {component} = {} at {point}",
                format_rational(value)
            ),
            Witness::Symbolic { component } => {
                write!(f, "component {component} nonzero symbolically")
            }
        }
    }
}

/// Evaluates the residual at seeded random points until some component is
/// nonzero. Returns `None` exactly when the residual is the zero field.
pub fn find_witness(residual: &TensorField, seed: u64) -> Option<Witness> {
    let nonzero: Vec<(String, &crate::algebra::Poly)> = residual.nonzero_components().collect();
    let (first_label, _) = nonzero.first()?;
    let mut rng = random::rng(seed);
    for _ in 0..WITNESS_ATTEMPTS {
        let pt = random::point(residual.chart(), &mut rng);
        for (label, p) in &nonzero {
            let value = p.eval_slice(pt.values());
            if !num::Zero::is_zero(&value) {
                return Some(Witness::Point {
                    point: pt,
                    component: label.clone(),
                    value,
                });
            }
        }
    }
    Some(Witness::Symbolic {
        component: first_label.clone(),
    })
}

/// One verified identity: `residual` is left side minus right side.
#[derive(Debug, Clone)]
pub struct CheckEntry {
    pub name: String,
    pub tag: String,
    pub residual: TensorField,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErratumKind {
    UndefinedSymbol,
    SignMismatch,
    InternallyInconsistent,
}

/// A printed display that disagrees with what the engine derives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub display: String,
    pub kind: ErratumKind,
    pub printed: String,
    pub derived: String,
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErratumKind::UndefinedSymbol => "undefined symbol",
            ErratumKind::SignMismatch => "sign mismatch",
            ErratumKind::InternallyInconsistent => "internally inconsistent",
        };
        write!(
            f,
            "erratum [{}] {kind}: printed `{}`, derived `{}`",
            self.display, self.printed, self.derived
        )
    }
}

/// A list of residual checks with an overall verdict.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub title: String,
    pub entries: Vec<CheckEntry>,
    pub notes: Vec<String>,
    pub errata: Vec<Erratum>,
    seed: u64,
}

impl CheckReport {
    pub fn new(title: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            title: title.into(),
            entries: Vec::new(),
            notes: Vec::new(),
            errata: Vec::new(),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Records an identity; it passes iff `residual` is the zero field.
    pub fn record(
        &mut self,
        name: impl Into<String>,
        tag: impl Into<String>,
        residual: TensorField,
    ) {
        // per-entry seed so adding an entry never changes earlier witnesses
        let seed = self.seed.wrapping_add(self.entries.len() as u64);
        let witness = find_witness(&residual, seed);
        self.entries.push(CheckEntry {
            name: name.into(),
            tag: tag.into(),
            passed: witness.is_none(),
            residual,
            witness,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn erratum(&mut self, e: Erratum) {
        if !self.errata.contains(&e) {
            self.errata.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Appends another report's entries, notes and errata.
    pub fn absorb(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        for e in other.errata {
            self.erratum(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{Chart, Valence};

    fn chart() -> Chart {
        Chart::new("M", vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn zero_residual_passes_without_witness() {
        let mut r = CheckReport::new("t", 1);
        r.record("zero", "tag", TensorField::zero(&chart(), Valence::Endo));
        assert!(r.passed());
        assert!(r.entries[0].witness.is_none());
    }

    #[test]
    fn nonzero_residual_gets_a_point_witness() {
        let ch = chart();
        let f = TensorField::function(&ch, ch.poly("x*y - x").unwrap()).unwrap();
        let w = find_witness(&f, 7).unwrap();
        match &w {
            Witness::Point { point, value, .. } => {
                assert!(!num::Zero::is_zero(value));
                assert_eq!(f.evaluate(point).unwrap()[0], *value);
            }
            other => panic!("expected a point witness, got {other:?}"),
        }
        assert_eq!(find_witness(&f, 7), Some(w));
    }

    #[test]
    fn errata_are_deduplicated() {
        let mut r = CheckReport::new("t", 1);
        let e = Erratum {
            display: "d".into(),
            kind: ErratumKind::SignMismatch,
            printed: "a".into(),
            derived: "b".into(),
        };
        r.erratum(e.clone());
        r.erratum(e);
        assert_eq!(r.errata.len(), 1);
    }
}
