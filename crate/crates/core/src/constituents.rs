//! Constituents: the possible cases spanned by the atoms of a family of
//! conditional events, with each event classified as true, false, or void in
//! each case. The full valuation grid is enumerated; duplicate logical
//! classifications are allowed, since the linear systems built downstream
//! are indifferent to duplicated columns.

use crate::conditional::{ConditionalEvent, TruthValue3};
use crate::error::{Error, Result};
use crate::formula::{Valuation, ATOM_LIMIT};
use crate::rational::Rational;

use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentRow {
    pub valuation: Valuation,
    /// One entry per event, in family order.
    pub classifications: Vec<TruthValue3>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentTable {
    atoms: Vec<String>,
    family: Vec<ConditionalEvent>,
    rows: Vec<ConstituentRow>,
    h0: Vec<usize>,
}

/// Enumerates all valuations over the atoms of `family` in binary-counting
/// order and classifies every event in every row.
pub fn enumerate_constituents(family: &[ConditionalEvent]) -> Result<ConstituentTable> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut atom_set = std::collections::BTreeSet::new();
    for event in family {
        atom_set.extend(event.atoms());
    }
    let atoms: Vec<String> = atom_set.into_iter().collect();
    if atoms.len() > ATOM_LIMIT {
        return Err(Error::AtomLimitExceeded {
            count: atoms.len(),
            limit: ATOM_LIMIT,
        });
    }
    let mut rows = Vec::with_capacity(1 << atoms.len());
    let mut h0 = Vec::new();
    for valuation in Valuation::enumerate(&atoms) {
        let classifications: Vec<TruthValue3> = family
            .iter()
            .map(|event| event.eval3(&valuation).expect("valuation covers family"))
            .collect();
        if classifications.iter().any(|&c| c != TruthValue3::Void) {
            h0.push(rows.len());
        }
        rows.push(ConstituentRow {
            valuation,
            classifications,
        });
    }
    Ok(ConstituentTable {
        atoms,
        family: family.to_vec(),
        rows,
        h0,
    })
}

impl ConstituentTable {
    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn family(&self) -> &[ConditionalEvent] {
        &self.family
    }

    pub fn rows(&self) -> &[ConstituentRow] {
        &self.rows
    }

    /// Rows in which at least one antecedent of the family is true.
    pub fn h0_indices(&self) -> &[usize] {
        &self.h0
    }

    pub fn classification(&self, row: usize, event: usize) -> TruthValue3 {
        self.rows[row].classifications[event]
    }

    /// Whether the antecedent of family member `event` is true in `row`.
    pub fn antecedent_true(&self, row: usize, event: usize) -> bool {
        self.classification(row, event) != TruthValue3::Void
    }

    /// The constituent points whose convex hull characterises coherence:
    /// per row with at least one active antecedent, the vector with 1 for a
    /// true event, 0 for a false one, and the assessed value for a void one
    /// (the called-off bet is worth its price). Duplicates are collapsed,
    /// preserving first occurrence order.
    pub fn q_points(&self, values: &[Rational]) -> Vec<Vec<Rational>> {
        assert_eq!(
            values.len(),
            self.family.len(),
            "one assessed value per family member"
        );
        let mut points: Vec<Vec<Rational>> = Vec::new();
        for &row in &self.h0 {
            let point: Vec<Rational> = self.rows[row]
                .classifications
                .iter()
                .zip(values)
                .map(|(c, x)| match c {
                    TruthValue3::True => Rational::one(),
                    TruthValue3::False => Rational::zero(),
                    TruthValue3::Void => x.clone(),
                })
                .collect();
            if !points.contains(&point) {
                points.push(point);
            }
        }
        points
    }
}
