//! Tightest coherent probability bounds for a conclusion.
//!
//! Given coherent premises, the set of values z such that adding
//! `p(conclusion) = z` stays coherent is a closed interval. Its endpoints
//! are found by a normalized fractional program: working with unnormalized
//! masses, the premise constraints are homogeneous ratio constraints, the
//! conclusion antecedent's mass is scaled to one, and the conclusion's true
//! mass is minimized and maximized. Because scenarios that force the
//! conclusion antecedent to zero mass never enter that program, both unit
//! endpoints are additionally probed with full coherence checks, and the
//! resulting endpoints and midpoint are certified the same way before being
//! returned. Bounds of [0, 1] mean the premises say nothing about the
//! conclusion.

use num::{One, Zero};

use crate::coherence::{check_coherence, Assessment, CoherenceVerdict};
use crate::conditional::{ConditionalEvent, TruthValue3};
use crate::constituents::{enumerate_constituents, ConstituentTable};
use crate::error::{Error, Result};
use crate::lp::{Constraint, Direction, LinearProgram, OptimizeOutcome, Relation, Simplex};
use crate::rational::{fraction_string, is_probability, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct PropagationResult {
    pub lower: Rational,
    pub upper: Rational,
    /// True exactly when the bounds are the whole unit interval.
    pub non_informative: bool,
    pub premise_verdict: CoherenceVerdict,
}

/// Whether extending coherent premises with `p(conclusion) = z` remains
/// coherent.
pub fn is_coherent_extension(
    premises: &Assessment,
    conclusion: &ConditionalEvent,
    z: &Rational,
) -> Result<bool> {
    if !is_probability(z) {
        return Err(Error::ValueOutOfRange {
            value: fraction_string(z),
            context: format!("extension value for p({conclusion})"),
        });
    }
    let premise_verdict = check_coherence(premises)?;
    if !premise_verdict.coherent {
        return Err(Error::IncoherentPremises(Box::new(premise_verdict)));
    }
    extension_coherent(premises, conclusion, z)
}

fn extension_coherent(
    premises: &Assessment,
    conclusion: &ConditionalEvent,
    z: &Rational,
) -> Result<bool> {
    let extended = premises.extended(conclusion.clone(), z.clone(), z.clone());
    Ok(check_coherence(&extended)?.coherent)
}

/// The tightest coherent bounds on `p(conclusion)` given the premises.
pub fn extension_interval(
    premises: &Assessment,
    conclusion: &ConditionalEvent,
) -> Result<PropagationResult> {
    let premise_verdict = check_coherence(premises)?;
    if !premise_verdict.coherent {
        return Err(Error::IncoherentPremises(Box::new(premise_verdict)));
    }

    let mut family = premises.events();
    family.push(conclusion.clone());
    let table = enumerate_constituents(&family)?;
    let candidates = ratio_program_bounds(premises, &table);

    let mut memo: std::collections::BTreeMap<Rational, bool> = std::collections::BTreeMap::new();
    let probe = |z: &Rational, memo: &mut std::collections::BTreeMap<Rational, bool>| {
        if let Some(&known) = memo.get(z) {
            return Ok(known);
        }
        let outcome = extension_coherent(premises, conclusion, z)?;
        memo.insert(z.clone(), outcome);
        Ok::<bool, Error>(outcome)
    };

    let at_zero = probe(&Rational::zero(), &mut memo)?;
    let at_one = probe(&Rational::one(), &mut memo)?;
    let (lower, upper) = match candidates {
        Some((lo, hi)) => (
            if at_zero { Rational::zero() } else { lo },
            if at_one { Rational::one() } else { hi },
        ),
        // The conclusion antecedent carries no mass in any premise-consistent
        // scenario; only the unit endpoints can certify values.
        None => match (at_zero, at_one) {
            (true, true) => (Rational::zero(), Rational::one()),
            (true, false) => (Rational::zero(), Rational::zero()),
            (false, true) => (Rational::one(), Rational::one()),
            (false, false) => return Err(Error::AntecedentUnreachable),
        },
    };

    let midpoint = (&lower + &upper) / Rational::from_integer(2.into());
    for z in [&lower, &upper, &midpoint] {
        if !probe(z, &mut memo)? {
            return Err(Error::IntervalNotCertified(format!(
                "p({conclusion}) = {} is not a coherent extension",
                fraction_string(z)
            )));
        }
    }

    let non_informative = lower.is_zero() && upper.is_one();
    Ok(PropagationResult {
        lower,
        upper,
        non_informative,
        premise_verdict,
    })
}

/// True iff the premises leave the conclusion completely unconstrained.
pub fn is_non_informative(premises: &Assessment, conclusion: &ConditionalEvent) -> Result<bool> {
    Ok(extension_interval(premises, conclusion)?.non_informative)
}

/// Min and max of the conclusion's true mass subject to the homogeneous
/// premise constraints and conclusion-antecedent mass one. `None` when even
/// that normalization is unsatisfiable.
fn ratio_program_bounds(
    premises: &Assessment,
    table: &ConstituentTable,
) -> Option<(Rational, Rational)> {
    let conclusion_idx = premises.len();
    // one variable per distinct classification pattern over the whole family
    let mut variable_rows: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::HashMap<Vec<TruthValue3>, usize> =
        std::collections::HashMap::new();
    for r in 0..table.rows().len() {
        let key: Vec<TruthValue3> = table.rows()[r].classifications.clone();
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
    let num_vars = variable_rows.len();
    let rep = |g: usize| variable_rows[g][0];

    let mut constraints = Vec::new();
    for (i, entry) in premises.entries().iter().enumerate() {
        let coeff_at = |x: &Rational| -> Vec<Rational> {
            (0..num_vars)
                .map(|g| match table.classification(rep(g), i) {
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
        } else {
            constraints.push(Constraint::new(
                coeff_at(&entry.lower),
                Relation::Ge,
                Rational::zero(),
            ));
            constraints.push(Constraint::new(
                coeff_at(&entry.upper),
                Relation::Le,
                Rational::zero(),
            ));
        }
    }
    let normalization: Vec<Rational> = (0..num_vars)
        .map(|g| {
            if table.antecedent_true(rep(g), conclusion_idx) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    constraints.push(Constraint::new(normalization, Relation::Eq, Rational::one()));

    let lp = LinearProgram::feasibility(num_vars, constraints);
    let mut simplex = Simplex::new(lp.num_vars, &lp.constraints);
    if simplex.phase1().is_some() {
        return None;
    }
    let objective: Vec<Rational> = (0..num_vars)
        .map(|g| {
            if table.classification(rep(g), conclusion_idx) == TruthValue3::True {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let lo = match simplex.optimize(&objective, Direction::Minimize) {
        OptimizeOutcome::Optimal { value } => value,
        other => unreachable!("conclusion mass is bounded in [0, 1]: {other:?}"),
    };
    let hi = match simplex.optimize(&objective, Direction::Maximize) {
        OptimizeOutcome::Optimal { value } => value,
        other => unreachable!("conclusion mass is bounded in [0, 1]: {other:?}"),
    };
    Some((lo, hi))
}
