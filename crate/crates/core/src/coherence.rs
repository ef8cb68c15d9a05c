//! Coherence of conditional-probability assessments.
//!
//! An assessment assigns each conditional event a point value or an interval
//! (g-coherence for intervals: some point selection inside the box is
//! coherent). Checking proceeds by layered linear systems: solve the system
//! over the constituents where at least one active antecedent holds; if it
//! is unsolvable the assessment admits a Dutch book, extracted from the
//! Farkas certificate; otherwise recurse on the entries whose antecedents
//! are forced to zero mass in every solution, until none remain.

use num::{One, Signed, Zero};

use crate::conditional::{ConditionalEvent, TruthValue3};
use crate::constituents::{enumerate_constituents, ConstituentTable};
use crate::error::{Error, Result};
use crate::lp::{
    Constraint, Direction, FarkasCertificate, LinearProgram, OptimizeOutcome, Relation, Simplex,
};
use crate::rational::{fraction_string, is_probability, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct AssessmentEntry {
    pub event: ConditionalEvent,
    pub lower: Rational,
    pub upper: Rational,
}

impl AssessmentEntry {
    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }
}

/// A finite family of conditional events with assessed probability values.
/// Entries are points (`lower == upper`) or closed intervals; duplicates of
/// the same event are rejected as user error.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Assessment {
    entries: Vec<AssessmentEntry>,
}

impl Assessment {
    pub fn new(entries: Vec<(ConditionalEvent, Rational, Rational)>) -> Result<Assessment> {
        let mut out: Vec<AssessmentEntry> = Vec::with_capacity(entries.len());
        for (event, lower, upper) in entries {
            if !is_probability(&lower) || !is_probability(&upper) || lower > upper {
                return Err(Error::ValueOutOfRange {
                    value: format!("[{}, {}]", fraction_string(&lower), fraction_string(&upper)),
                    context: format!("p({event})"),
                });
            }
            if out.iter().any(|e| e.event == event) {
                return Err(Error::DuplicateEvent(event.to_string()));
            }
            out.push(AssessmentEntry {
                event,
                lower,
                upper,
            });
        }
        Ok(Assessment { entries: out })
    }

    pub fn point(pairs: Vec<(ConditionalEvent, Rational)>) -> Result<Assessment> {
        Assessment::new(
            pairs
                .into_iter()
                .map(|(event, value)| (event, value.clone(), value))
                .collect(),
        )
    }

    pub fn empty() -> Assessment {
        Assessment::default()
    }

    pub fn entries(&self) -> &[AssessmentEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn events(&self) -> Vec<ConditionalEvent> {
        self.entries.iter().map(|e| e.event.clone()).collect()
    }

    /// Query-side extension. Unlike [`Assessment::new`] this permits the new
    /// event to coincide with an assessed one: the constraints intersect,
    /// which is exactly what testing a candidate conclusion value requires.
    pub(crate) fn extended(
        &self,
        event: ConditionalEvent,
        lower: Rational,
        upper: Rational,
    ) -> Assessment {
        let mut entries = self.entries.clone();
        entries.push(AssessmentEntry {
            event,
            lower,
            upper,
        });
        Assessment { entries }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerStep {
    pub active: Vec<usize>,
    pub solvable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    AgentSureLoss,
}

/// One bet of a Dutch book: `stake` on the entry's event at `price`. A
/// positive stake buys the gamble, a negative one sells it; the bet is
/// called off in constituents where the antecedent fails.
#[derive(Debug, Clone, PartialEq)]
pub struct Bet {
    pub entry: usize,
    pub price: Rational,
    pub stake: Rational,
}

/// A betting scheme with strictly negative agent gain in every constituent
/// where at least one bet is active. Stakes are normalized so the largest
/// absolute stake is one.
#[derive(Debug, Clone, PartialEq)]
pub struct DutchBook {
    pub bets: Vec<Bet>,
    pub guarantee: Guarantee,
}

impl DutchBook {
    /// Exhaustive re-evaluation of the sure-loss property over a constituent
    /// table for the assessment's event family.
    pub fn validates_against(&self, table: &ConstituentTable) -> bool {
        let mut any_active_row = false;
        for row in 0..table.rows().len() {
            let mut active = false;
            let mut gain = Rational::zero();
            for bet in &self.bets {
                match table.classification(row, bet.entry) {
                    TruthValue3::True => {
                        active = true;
                        gain += &bet.stake * (Rational::one() - &bet.price);
                    }
                    TruthValue3::False => {
                        active = true;
                        gain -= &bet.stake * &bet.price;
                    }
                    TruthValue3::Void => {}
                }
            }
            if active {
                any_active_row = true;
                if !gain.is_negative() {
                    return false;
                }
            }
        }
        any_active_row
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceVerdict {
    pub coherent: bool,
    pub layers: Vec<LayerStep>,
    pub certificate: Option<DutchBook>,
}

// CoherenceVerdict carries rationals only inside the certificate, whose
// components are all reduced fractions, so structural equality is exact.
impl Eq for DutchBook {}
impl Eq for Bet {}

/// Which assessment entry (and which side of its interval) an LP row
/// encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintRole {
    PointValue(usize),
    LowerBound(usize),
    UpperBound(usize),
    TotalMass,
}

/// A layer's linear system plus the bookkeeping needed to interpret
/// solutions and certificates: which constituent rows each LP variable
/// aggregates and what each constraint row encodes.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerSystem {
    pub lp: LinearProgram,
    pub variable_rows: Vec<Vec<usize>>,
    pub roles: Vec<ConstraintRole>,
}

impl LayerSystem {
    /// Coefficients of the total mass of `entry`'s antecedent, per LP
    /// variable.
    fn antecedent_mass_coeffs(&self, table: &ConstituentTable, entry: usize) -> Vec<Rational> {
        self.variable_rows
            .iter()
            .map(|rows| {
                if table.antecedent_true(rows[0], entry) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }
}

/// Builds the linear system of one checking layer: one nonnegative variable
/// per constituent in which some active antecedent holds, the value
/// constraints of the active entries, and total mass one.
pub fn build_system(
    assessment: &Assessment,
    active: &[usize],
    table: &ConstituentTable,
) -> Result<LayerSystem> {
    build_layer_system(assessment, active, table, false)
}

fn build_layer_system(
    assessment: &Assessment,
    active: &[usize],
    table: &ConstituentTable,
    merge_duplicates: bool,
) -> Result<LayerSystem> {
    if active.is_empty() {
        return Err(Error::EmptyActiveSet);
    }
    debug_assert!(active.iter().all(|&i| i < assessment.len()));

    // Constituents where at least one active antecedent holds.
    let included: Vec<usize> = (0..table.rows().len())
        .filter(|&r| active.iter().any(|&i| table.antecedent_true(r, i)))
        .collect();

    // Constituents with identical classifications over the active entries
    // play identical roles in every constraint and objective of this layer,
    // so they can share one variable.
    let mut variable_rows: Vec<Vec<usize>> = Vec::new();
    if merge_duplicates {
        let mut seen: std::collections::HashMap<Vec<TruthValue3>, usize> =
            std::collections::HashMap::new();
        for &r in &included {
            let key: Vec<TruthValue3> = active
                .iter()
                .map(|&i| table.classification(r, i))
                .collect();
            match seen.entry(key) {
                std::collections::hash_map::Entry::Occupied(slot) => {
                    variable_rows[*slot.get()].push(r);
                }
                std::collections::hash_map::Entry::Vacant(slot) => {
                    slot.insert(variable_rows.len());
                    variable_rows.push(vec![r]);
                }
            }
        }
    } else {
        variable_rows = included.iter().map(|&r| vec![r]).collect();
    }

    let num_vars = variable_rows.len();
    let mut constraints = Vec::new();
    let mut roles = Vec::new();
    for &i in active {
        let entry = &assessment.entries()[i];
        let coeff_at = |x: &Rational| -> Vec<Rational> {
            variable_rows
                .iter()
                .map(|rows| match table.classification(rows[0], i) {
                    TruthValue3::True => Rational::one() - x,
                    TruthValue3::False => -x.clone(),
                    TruthValue3::Void => Rational::zero(),
                })
                .collect()
        };
        if entry.is_point() {
            constraints.push(Constraint::new(
                coeff_at(&entry.lower),
                Relation::Eq,
                Rational::zero(),
            ));
            roles.push(ConstraintRole::PointValue(i));
        } else {
            constraints.push(Constraint::new(
                coeff_at(&entry.lower),
                Relation::Ge,
                Rational::zero(),
            ));
            roles.push(ConstraintRole::LowerBound(i));
            constraints.push(Constraint::new(
                coeff_at(&entry.upper),
                Relation::Le,
                Rational::zero(),
            ));
            roles.push(ConstraintRole::UpperBound(i));
        }
    }
    constraints.push(Constraint::new(
        vec![Rational::one(); num_vars],
        Relation::Eq,
        Rational::one(),
    ));
    roles.push(ConstraintRole::TotalMass);

    Ok(LayerSystem {
        lp: LinearProgram::feasibility(num_vars, constraints),
        variable_rows,
        roles,
    })
}

/// Decides coherence of an assessment (g-coherence for interval entries) by
/// the layered procedure. On failure the verdict carries a validated Dutch
/// book.
pub fn check_coherence(assessment: &Assessment) -> Result<CoherenceVerdict> {
    if assessment.is_empty() {
        return Ok(CoherenceVerdict {
            coherent: true,
            layers: Vec::new(),
            certificate: None,
        });
    }
    let events = assessment.events();
    let table = enumerate_constituents(&events)?;
    let mut active: Vec<usize> = (0..assessment.len()).collect();
    let mut layers = Vec::new();
    loop {
        let system = build_layer_system(assessment, &active, &table, true)?;
        let mut simplex = Simplex::new(system.lp.num_vars, &system.lp.constraints);
        if let Some(cert) = simplex.phase1() {
            debug_assert!(cert.refutes(&system.lp));
            layers.push(LayerStep {
                active: active.clone(),
                solvable: false,
            });
            let book = book_from_certificate(assessment, &table, &system, &cert);
            return Ok(CoherenceVerdict {
                coherent: false,
                layers,
                certificate: Some(book),
            });
        }
        layers.push(LayerStep {
            active: active.clone(),
            solvable: true,
        });

        // Forced-zero detection: maximize each active antecedent's mass; a
        // zero maximum banishes the entry to the next layer. Antecedents
        // already positive in some known solution are skipped.
        let mut solution = simplex.solution();
        let mut forced = Vec::new();
        for &i in &active {
            let mass = system.antecedent_mass_coeffs(&table, i);
            let current = mass
                .iter()
                .zip(&solution)
                .filter(|(c, _)| !c.is_zero())
                .fold(Rational::zero(), |acc, (_, x)| acc + x);
            if current.is_positive() {
                continue;
            }
            match simplex.optimize(&mass, Direction::Maximize) {
                OptimizeOutcome::Optimal { value } => {
                    if value.is_zero() {
                        forced.push(i);
                    } else {
                        solution = simplex.solution();
                    }
                }
                other => unreachable!("antecedent mass is bounded on a feasible layer: {other:?}"),
            }
        }
        if forced.is_empty() {
            return Ok(CoherenceVerdict {
                coherent: true,
                layers,
                certificate: None,
            });
        }
        // Some active antecedent carries positive mass in any solution, so
        // the recursion strictly shrinks and terminates.
        debug_assert!(forced.len() < active.len());
        active = forced;
    }
}

/// Produces the validated Dutch book of an incoherent assessment.
pub fn dutch_book(assessment: &Assessment) -> Result<DutchBook> {
    let verdict = check_coherence(assessment)?;
    verdict.certificate.ok_or(Error::CoherentAssessment)
}

/// Farkas multipliers of the failing layer, read as stakes: an equality row
/// bets its multiplier at the assessed price; a lower-bound row buys at the
/// lower price; an upper-bound row sells at the upper price.
fn book_from_certificate(
    assessment: &Assessment,
    table: &ConstituentTable,
    system: &LayerSystem,
    cert: &FarkasCertificate,
) -> DutchBook {
    let mut bets: Vec<Bet> = Vec::new();
    let mut add = |entry: usize, price: Rational, stake: Rational| {
        if stake.is_zero() {
            return;
        }
        if let Some(existing) = bets
            .iter_mut()
            .find(|b| b.entry == entry && b.price == price)
        {
            existing.stake += stake;
        } else {
            bets.push(Bet {
                entry,
                price,
                stake,
            });
        }
    };
    for (role, mult) in system.roles.iter().zip(&cert.row_multipliers) {
        if mult.is_zero() {
            continue;
        }
        let entries = assessment.entries();
        match role {
            ConstraintRole::PointValue(i) => add(*i, entries[*i].lower.clone(), mult.clone()),
            ConstraintRole::LowerBound(i) => add(*i, entries[*i].lower.clone(), mult.clone()),
            ConstraintRole::UpperBound(i) => add(*i, entries[*i].upper.clone(), -mult.clone()),
            ConstraintRole::TotalMass => {}
        }
    }
    bets.retain(|b| !b.stake.is_zero());
    let max_abs = bets
        .iter()
        .map(|b| b.stake.abs())
        .max()
        .expect("an unsolvable layer involves at least one nonzero stake");
    for bet in &mut bets {
        bet.stake /= &max_abs;
    }
    bets.sort_by_key(|b| b.entry);
    let book = DutchBook {
        bets,
        guarantee: Guarantee::AgentSureLoss,
    };
    assert!(
        book.validates_against(table),
        "extracted betting scheme must guarantee a loss in every active constituent"
    );
    book
}
