//! Shared helpers and independent oracles for the integration suites. The
//! oracles here deliberately avoid the engine's own code paths: convex-hull
//! membership runs its own LP over hull weights, and Dutch-book gains are
//! recomputed from raw formula evaluation.

#![allow(dead_code)]

use num::{One, Signed, Zero};
use rand::Rng;

use prevision_core::coherence::{Assessment, DutchBook};
use prevision_core::conditional::ConditionalEvent;
use prevision_core::formula::{Formula, Valuation};
use prevision_core::lp::{solve_feasibility, Constraint, Feasibility, LinearProgram, Relation};
use prevision_core::rational::Rational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn cond(consequent: &str, antecedent: &str) -> ConditionalEvent {
    ConditionalEvent::new(
        prevision_core::parse::parse_formula(consequent).unwrap(),
        prevision_core::parse::parse_formula(antecedent).unwrap(),
    )
    .unwrap()
}

pub fn uncond(consequent: &str) -> ConditionalEvent {
    ConditionalEvent::unconditional(prevision_core::parse::parse_formula(consequent).unwrap())
        .unwrap()
}

/// Uniform-ish random probability with denominator up to `max_denom`,
/// endpoints included.
pub fn random_probability(rng: &mut impl Rng, max_denom: i64) -> Rational {
    let d = rng.gen_range(1..=max_denom);
    let n = rng.gen_range(0..=d);
    rat(n, d)
}

/// Random probability strictly inside (0, 1).
pub fn random_interior_probability(rng: &mut impl Rng, max_denom: i64) -> Rational {
    let d = rng.gen_range(2..=max_denom);
    let n = rng.gen_range(1..d);
    rat(n, d)
}

pub fn random_formula(rng: &mut impl Rng, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.45) {
        let pick = rng.gen_range(0..atoms.len());
        let f = Formula::atom(atoms[pick]);
        if rng.gen_bool(0.25) {
            Formula::not(f)
        } else {
            f
        }
    } else if rng.gen_bool(0.5) {
        Formula::and(
            random_formula(rng, atoms, depth - 1),
            random_formula(rng, atoms, depth - 1),
        )
    } else {
        Formula::or(
            random_formula(rng, atoms, depth - 1),
            random_formula(rng, atoms, depth - 1),
        )
    }
}

/// Random conditional event whose antecedent is satisfiable.
pub fn random_event(rng: &mut impl Rng, atoms: &[&str]) -> ConditionalEvent {
    loop {
        let antecedent = if rng.gen_bool(0.3) {
            Formula::Verum
        } else {
            random_formula(rng, atoms, 2)
        };
        let consequent = random_formula(rng, atoms, 2);
        if let Ok(event) = ConditionalEvent::new(consequent, antecedent) {
            return event;
        }
    }
}

/// Builds a coherent point assessment by construction: draw a strictly
/// positive distribution over the valuations of `atoms` and read each
/// event's value off it as an exact ratio. Every antecedent gets positive
/// mass, so the assessment is coherent with a single layer.
pub fn random_coherent_assessment(
    rng: &mut impl Rng,
    atoms: &[&str],
    entries: usize,
) -> Assessment {
    let atom_names: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
    let valuations: Vec<Valuation> = Valuation::enumerate(&atom_names).collect();
    loop {
        let weights: Vec<Rational> = valuations
            .iter()
            .map(|_| rat(rng.gen_range(1..=12), 1))
            .collect();
        let total: Rational = weights.iter().fold(Rational::zero(), |acc, w| acc + w);
        let mass = |formula: &Formula| -> Rational {
            valuations
                .iter()
                .zip(&weights)
                .filter(|(v, _)| formula.eval(v).unwrap())
                .fold(Rational::zero(), |acc, (_, w)| acc + w)
                / &total
        };
        let mut pairs: Vec<(ConditionalEvent, Rational)> = Vec::new();
        let mut guard = 0;
        while pairs.len() < entries && guard < 200 {
            guard += 1;
            let event = random_event(rng, atoms);
            if pairs.iter().any(|(e, _)| *e == event) {
                continue;
            }
            let h = mass(event.antecedent());
            if h.is_zero() {
                continue;
            }
            let t = mass(&Formula::and(
                event.antecedent().clone(),
                event.consequent().clone(),
            ));
            pairs.push((event, t / h));
        }
        if pairs.len() == entries {
            if let Ok(assessment) = Assessment::point(pairs) {
                return assessment;
            }
        }
    }
}

/// Whether the event can come out both true and false when its antecedent
/// holds. Events that are settled by logic alone (consequent tautologous or
/// impossible under the antecedent) force values of one or zero, which is
/// the degenerate regime where hull membership and the layered check may
/// differ; generic corpora exclude them.
pub fn contingent_given_antecedent(event: &ConditionalEvent) -> bool {
    let atoms: Vec<String> = event.atoms().into_iter().collect();
    let mut seen_true = false;
    let mut seen_false = false;
    for v in Valuation::enumerate(&atoms) {
        if event.antecedent().eval(&v).unwrap() {
            if event.consequent().eval(&v).unwrap() {
                seen_true = true;
            } else {
                seen_false = true;
            }
            if seen_true && seen_false {
                return true;
            }
        }
    }
    false
}

/// Independent convex-hull membership test: is `target` a convex
/// combination of `points`? Decided by a feasibility LP over the weights.
pub fn convex_hull_contains(points: &[Vec<Rational>], target: &[Rational]) -> bool {
    let k = points.len();
    if k == 0 {
        return false;
    }
    let dim = target.len();
    let mut constraints = Vec::with_capacity(dim + 1);
    for j in 0..dim {
        let coeffs: Vec<Rational> = points.iter().map(|p| p[j].clone()).collect();
        constraints.push(Constraint::new(coeffs, Relation::Eq, target[j].clone()));
    }
    constraints.push(Constraint::new(
        vec![Rational::one(); k],
        Relation::Eq,
        Rational::one(),
    ));
    matches!(
        solve_feasibility(&LinearProgram::feasibility(k, constraints)),
        Feasibility::Feasible(_)
    )
}

/// Recomputes the agent's gain for a betting scheme in every possible world,
/// straight from formula evaluation. Returns (bet-was-active, gain) pairs,
/// one per valuation of the assessment's atoms.
pub fn agent_gains(book: &DutchBook, assessment: &Assessment) -> Vec<(bool, Rational)> {
    let mut atom_set = std::collections::BTreeSet::new();
    for entry in assessment.entries() {
        atom_set.extend(entry.event.atoms());
    }
    let atoms: Vec<String> = atom_set.into_iter().collect();
    let mut out = Vec::new();
    for v in Valuation::enumerate(&atoms) {
        let mut active = false;
        let mut gain = Rational::zero();
        for bet in &book.bets {
            let event = &assessment.entries()[bet.entry].event;
            if event.antecedent().eval(&v).unwrap() {
                active = true;
                if event.consequent().eval(&v).unwrap() {
                    gain += &bet.stake * (Rational::one() - &bet.price);
                } else {
                    gain -= &bet.stake * &bet.price;
                }
            }
        }
        out.push((active, gain));
    }
    out
}

/// Asserts the Dutch-book guarantee by exhaustive evaluation: strictly
/// negative gain wherever at least one bet is active, and at least one such
/// world exists.
pub fn assert_sure_loss(book: &DutchBook, assessment: &Assessment) {
    let gains = agent_gains(book, assessment);
    let active: Vec<&(bool, Rational)> = gains.iter().filter(|(a, _)| *a).collect();
    assert!(!active.is_empty(), "no world activates any bet");
    for (_, gain) in &active {
        assert!(
            gain.is_negative(),
            "agent gain {gain} is not a sure loss in some active world"
        );
    }
    let max_stake = book
        .bets
        .iter()
        .map(|b| b.stake.abs())
        .max()
        .expect("book has bets");
    assert!(max_stake.is_one(), "stakes must be normalized to max 1");
}
