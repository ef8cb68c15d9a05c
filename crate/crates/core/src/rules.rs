//! Named argument forms with closed-form propagation bounds, connexive
//! forced-value checks, and the probabilistic truth-table predictions. Every
//! closed form can be cross-checked against the propagation engine, which
//! must reproduce it exactly.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::coherence::{check_coherence, Assessment};
use crate::conditional::ConditionalEvent;
use crate::error::{Error, Result};
use crate::formula::{Formula, Valuation};
use crate::propagation::{extension_interval, PropagationResult};
use crate::rational::{fraction_string, is_probability, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleName {
    And,
    Cut,
    Mp,
    ParadoxCe,
    ParadoxMat,
    Monotonicity,
    Contraposition,
    Transitivity,
    At1,
    At2,
    Bt1,
    Bt2,
    Afp,
    Pttt,
}

impl RuleName {
    pub const ALL: [RuleName; 14] = [
        RuleName::And,
        RuleName::Cut,
        RuleName::Mp,
        RuleName::ParadoxCe,
        RuleName::ParadoxMat,
        RuleName::Monotonicity,
        RuleName::Contraposition,
        RuleName::Transitivity,
        RuleName::At1,
        RuleName::At2,
        RuleName::Bt1,
        RuleName::Bt2,
        RuleName::Afp,
        RuleName::Pttt,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RuleName::And => "AND",
            RuleName::Cut => "CUT",
            RuleName::Mp => "MP",
            RuleName::ParadoxCe => "PARADOX_CE",
            RuleName::ParadoxMat => "PARADOX_MAT",
            RuleName::Monotonicity => "MONOTONICITY",
            RuleName::Contraposition => "CONTRAPOSITION",
            RuleName::Transitivity => "TRANSITIVITY",
            RuleName::At1 => "AT1",
            RuleName::At2 => "AT2",
            RuleName::Bt1 => "BT1",
            RuleName::Bt2 => "BT2",
            RuleName::Afp => "AFP",
            RuleName::Pttt => "PTTT",
        }
    }

    pub fn parse(name: &str) -> Result<RuleName> {
        let upper = name.to_ascii_uppercase();
        RuleName::ALL
            .iter()
            .copied()
            .find(|r| r.as_str() == upper)
            .ok_or_else(|| Error::UnknownRule(name.to_string()))
    }

    pub fn describe(&self) -> &'static str {
        match self {
            RuleName::And => {
                "p(B|A) in [xl,xu], p(C|A) in [yl,yu] |- p(B and C|A) in [max(0, xl+yl-1), min(xu, yu)]"
            }
            RuleName::Cut => "p(B|A) = x, p(C|A and B) = y |- p(C|A) in [xy, xy+1-x]",
            RuleName::Mp => "p(B) = x, p(C|B) = y |- p(C) in [xy, xy+1-x]",
            RuleName::ParadoxCe => "p(B) = x |- p(B|A) in [0, 1] (non-informative)",
            RuleName::ParadoxMat => "p(B) = x |- p(not A or B) in [x, 1]",
            RuleName::Monotonicity => "p(C|B) = x |- p(C|B and P) in [0, 1] (non-informative)",
            RuleName::Contraposition => "p(B|A) = x |- p(not A|not B) in [0, 1] (non-informative)",
            RuleName::Transitivity => "p(B|A) = x, p(C|B) = y |- p(C|A) in [0, 1] (non-informative)",
            RuleName::At1 => "forced values: p(A|not A) = 0 and p(not A|not A) = 1",
            RuleName::At2 => "forced values: p(not A|A) = 0 and p(not not A|A) = 1",
            RuleName::Bt1 => "p(B|A) = x forces p(not not B|A) = x",
            RuleName::Bt2 => "p(not B|A) = x forces p(not B|A) = x",
            RuleName::Afp => "p(B|A) >= t together with p(not B|A) >= t is incoherent for any t > 1/2",
            RuleName::Pttt => {
                "p(A and B) = x1, p(A and not B) = x2, p(not A and B) = x3, p(not A and not B) = x4 -> interpretation predictions"
            }
        }
    }
}

impl std::fmt::Display for RuleName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named rational parameters, as collected from the command line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RuleParams(BTreeMap<String, Rational>);

impl RuleParams {
    pub fn new() -> RuleParams {
        RuleParams::default()
    }

    pub fn set(&mut self, name: &str, value: Rational) {
        self.0.insert(name.to_string(), value);
    }

    pub fn with(mut self, name: &str, value: Rational) -> RuleParams {
        self.set(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.get(name)
    }
}

/// A rule instantiated on schematic atoms, with its closed-form bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleApplication {
    pub rule: RuleName,
    pub premises: Assessment,
    pub conclusion: ConditionalEvent,
    pub lower: Rational,
    pub upper: Rational,
    pub non_informative: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleVerification {
    pub engine: PropagationResult,
    pub matches: bool,
}

impl RuleApplication {
    /// Recomputes the interval with the propagation engine and compares it
    /// to the closed form, exactly.
    pub fn verify(&self) -> Result<RuleVerification> {
        let engine = extension_interval(&self.premises, &self.conclusion)?;
        let matches = engine.lower == self.lower && engine.upper == self.upper;
        Ok(RuleVerification { engine, matches })
    }
}

fn atom(name: &str) -> Formula {
    Formula::atom(name)
}

fn cond(consequent: Formula, antecedent: Formula) -> ConditionalEvent {
    ConditionalEvent::new(consequent, antecedent).expect("schematic antecedents are satisfiable")
}

fn uncond(consequent: Formula) -> ConditionalEvent {
    ConditionalEvent::unconditional(consequent).expect("verum antecedent")
}

/// Conjunction that elides verum, so that substituting verum into a schema
/// reproduces the simpler schema identically rather than up to equivalence.
fn conj(a: &Formula, b: Formula) -> Formula {
    match a {
        Formula::Verum => b,
        other => Formula::and(other.clone(), b),
    }
}

/// Premises and conclusion of the cumulative-transitivity schema over an
/// arbitrary first antecedent. Substituting verum yields the probabilistic
/// modus ponens schema exactly.
fn cut_schema(
    first_antecedent: &Formula,
    x: &Rational,
    y: &Rational,
) -> Result<(Assessment, ConditionalEvent)> {
    let premises = Assessment::point(vec![
        (cond(atom("B"), first_antecedent.clone()), x.clone()),
        (cond(atom("C"), conj(first_antecedent, atom("B"))), y.clone()),
    ])?;
    Ok((premises, cond(atom("C"), first_antecedent.clone())))
}

fn required(params: &RuleParams, rule: RuleName, name: &str) -> Result<Rational> {
    let value = params.get(name).ok_or_else(|| Error::MissingParam {
        rule: rule.as_str().to_string(),
        param: name.to_string(),
    })?;
    if !is_probability(value) {
        return Err(Error::ValueOutOfRange {
            value: fraction_string(value),
            context: format!("parameter --{name} of rule {rule}"),
        });
    }
    Ok(value.clone())
}

/// Instantiates a propagation-form rule on fresh schematic atoms and
/// evaluates its closed-form bounds.
pub fn apply_rule(rule: RuleName, params: &RuleParams) -> Result<RuleApplication> {
    let (premises, conclusion, lower, upper) = match rule {
        RuleName::And => {
            let xl = required(params, rule, "xl")?;
            let xu = required(params, rule, "xu")?;
            let yl = required(params, rule, "yl")?;
            let yu = required(params, rule, "yu")?;
            if xl > xu || yl > yu {
                return Err(Error::ValueOutOfRange {
                    value: "empty interval".to_string(),
                    context: format!("parameters of rule {rule}"),
                });
            }
            let premises = Assessment::new(vec![
                (cond(atom("B"), atom("A")), xl.clone(), xu.clone()),
                (cond(atom("C"), atom("A")), yl.clone(), yu.clone()),
            ])?;
            let conclusion = cond(Formula::and(atom("B"), atom("C")), atom("A"));
            let lower = (&xl + &yl - Rational::one()).max(Rational::zero());
            let upper = xu.min(yu);
            (premises, conclusion, lower, upper)
        }
        RuleName::Cut | RuleName::Mp => {
            let x = required(params, rule, "x")?;
            let y = required(params, rule, "y")?;
            let first_antecedent = match rule {
                RuleName::Cut => atom("A"),
                _ => Formula::Verum,
            };
            let (premises, conclusion) = cut_schema(&first_antecedent, &x, &y)?;
            let lower = &x * &y;
            let upper = &lower + Rational::one() - &x;
            (premises, conclusion, lower, upper)
        }
        RuleName::ParadoxCe => {
            let x = required(params, rule, "x")?;
            let premises = Assessment::point(vec![(uncond(atom("B")), x)])?;
            let conclusion = cond(atom("B"), atom("A"));
            (premises, conclusion, Rational::zero(), Rational::one())
        }
        RuleName::ParadoxMat => {
            let x = required(params, rule, "x")?;
            let premises = Assessment::point(vec![(uncond(atom("B")), x.clone())])?;
            let conclusion = uncond(Formula::or(Formula::not(atom("A")), atom("B")));
            (premises, conclusion, x, Rational::one())
        }
        RuleName::Monotonicity => {
            let x = required(params, rule, "x")?;
            let premises = Assessment::point(vec![(cond(atom("C"), atom("B")), x)])?;
            let conclusion = cond(atom("C"), Formula::and(atom("B"), atom("P")));
            (premises, conclusion, Rational::zero(), Rational::one())
        }
        RuleName::Contraposition => {
            let x = required(params, rule, "x")?;
            let premises = Assessment::point(vec![(cond(atom("B"), atom("A")), x)])?;
            let conclusion = cond(Formula::not(atom("A")), Formula::not(atom("B")));
            (premises, conclusion, Rational::zero(), Rational::one())
        }
        RuleName::Transitivity => {
            let x = required(params, rule, "x")?;
            let y = required(params, rule, "y")?;
            let premises = Assessment::point(vec![
                (cond(atom("B"), atom("A")), x),
                (cond(atom("C"), atom("B")), y),
            ])?;
            let conclusion = cond(atom("C"), atom("A"));
            (premises, conclusion, Rational::zero(), Rational::one())
        }
        RuleName::At1 => {
            let conclusion = cond(Formula::not(atom("A")), Formula::not(atom("A")));
            (Assessment::empty(), conclusion, Rational::one(), Rational::one())
        }
        RuleName::At2 => {
            let conclusion = cond(Formula::not(Formula::not(atom("A"))), atom("A"));
            (Assessment::empty(), conclusion, Rational::one(), Rational::one())
        }
        RuleName::Bt1 => {
            let x = required(params, rule, "x")?;
            let premises = Assessment::point(vec![(cond(atom("B"), atom("A")), x.clone())])?;
            let conclusion = cond(atom("B"), atom("A")).negate_narrow().negate_narrow();
            (premises, conclusion, x.clone(), x)
        }
        RuleName::Bt2 => {
            let x = required(params, rule, "x")?;
            let negated = cond(atom("B"), atom("A")).negate_narrow();
            let premises = Assessment::point(vec![(negated.clone(), x.clone())])?;
            (premises, negated, x.clone(), x)
        }
        RuleName::Afp | RuleName::Pttt => {
            return Err(Error::NotAPropagation(rule.as_str().to_string()));
        }
    };
    let non_informative = lower.is_zero() && upper.is_one();
    Ok(RuleApplication {
        rule,
        premises,
        conclusion,
        lower,
        upper,
        non_informative,
    })
}

/// Engine-certified report for a connexive principle.
#[derive(Debug, Clone, PartialEq)]
pub enum ConnexiveReport {
    /// The inner conditional's only coherent value and the forced value of
    /// its narrow-scope negation.
    ForcedValues {
        rule: RuleName,
        inner: (ConditionalEvent, Rational),
        negated: (ConditionalEvent, Rational),
    },
    /// Negating the consequent twice gives an event that evaluates exactly
    /// like the premise event, so their probabilities coincide.
    ConsequentIdentity {
        rule: RuleName,
        premise: ConditionalEvent,
        consequent: ConditionalEvent,
        eval_identical: bool,
        /// (premise value, engine lower, engine upper) at sampled values.
        checked: Vec<(Rational, Rational, Rational)>,
    },
    /// Both a conditional and its narrow negation cannot exceed t at once
    /// for any t above one half.
    HighProbabilityExclusion {
        rule: RuleName,
        default_threshold: Rational,
        /// (threshold, g-coherent) per certified threshold.
        checks: Vec<(Rational, bool)>,
    },
}

/// Certifies a connexive principle with the engine: forced points for the
/// self-denying and self-affirming conditionals, the consequent-identity of
/// double narrow negation, or the impossibility of two "high" complementary
/// conditionals.
pub fn check_connexive(rule: RuleName) -> Result<ConnexiveReport> {
    match rule {
        RuleName::At1 | RuleName::At2 => {
            let inner = if rule == RuleName::At1 {
                cond(atom("A"), Formula::not(atom("A")))
            } else {
                cond(Formula::not(atom("A")), atom("A"))
            };
            let negated = inner.negate_narrow();
            let empty = Assessment::empty();
            let inner_interval = extension_interval(&empty, &inner)?;
            let negated_interval = extension_interval(&empty, &negated)?;
            expect_point(&inner_interval, &Rational::zero(), &inner)?;
            expect_point(&negated_interval, &Rational::one(), &negated)?;
            Ok(ConnexiveReport::ForcedValues {
                rule,
                inner: (inner, inner_interval.lower),
                negated: (negated, negated_interval.lower),
            })
        }
        RuleName::Bt1 | RuleName::Bt2 => {
            let premise = if rule == RuleName::Bt1 {
                cond(atom("B"), atom("A"))
            } else {
                cond(atom("B"), atom("A")).negate_narrow()
            };
            let consequent = if rule == RuleName::Bt1 {
                cond(atom("B"), atom("A")).negate_narrow().negate_narrow()
            } else {
                cond(atom("B"), atom("A")).negate_narrow()
            };
            let atoms: Vec<String> = premise.atoms().into_iter().collect();
            let eval_identical = Valuation::enumerate(&atoms).all(|v| {
                premise.eval3(&v).expect("covered") == consequent.eval3(&v).expect("covered")
            });
            let mut checked = Vec::new();
            for x in [
                Rational::zero(),
                Rational::new(1.into(), 3.into()),
                Rational::one(),
            ] {
                let premises = Assessment::point(vec![(premise.clone(), x.clone())])?;
                let engine = extension_interval(&premises, &consequent)?;
                checked.push((x, engine.lower, engine.upper));
            }
            Ok(ConnexiveReport::ConsequentIdentity {
                rule,
                premise,
                consequent,
                eval_identical,
                checked,
            })
        }
        RuleName::Afp => {
            let default_threshold = Rational::new(3.into(), 5.into());
            let mut checks = Vec::new();
            for t in [
                Rational::new(1.into(), 2.into()),
                Rational::new(501.into(), 1000.into()),
                Rational::new(3.into(), 5.into()),
            ] {
                let coherent = afp_threshold_check(&t)?;
                checks.push((t, coherent));
            }
            Ok(ConnexiveReport::HighProbabilityExclusion {
                rule,
                default_threshold,
                checks,
            })
        }
        other => Err(Error::UnknownRule(format!(
            "{} is not a connexive principle",
            other.as_str()
        ))),
    }
}

/// Whether demanding at least `t` for both a conditional and its narrow
/// negation is g-coherent. False for every t above one half.
pub fn afp_threshold_check(t: &Rational) -> Result<bool> {
    if !is_probability(t) {
        return Err(Error::ValueOutOfRange {
            value: fraction_string(t),
            context: "AFP threshold t".to_string(),
        });
    }
    let assessment = Assessment::new(vec![
        (cond(atom("B"), atom("A")), t.clone(), Rational::one()),
        (
            cond(atom("B"), atom("A")).negate_narrow(),
            t.clone(),
            Rational::one(),
        ),
    ])?;
    Ok(check_coherence(&assessment)?.coherent)
}

fn expect_point(
    result: &PropagationResult,
    expected: &Rational,
    event: &ConditionalEvent,
) -> Result<()> {
    if result.lower == *expected && result.upper == *expected {
        Ok(())
    } else {
        Err(Error::IntervalNotCertified(format!(
            "expected p({event}) forced to {}, engine returned [{}, {}]",
            fraction_string(expected),
            fraction_string(&result.lower),
            fraction_string(&result.upper)
        )))
    }
}

/// Predicted responses for the probabilistic truth-table task given the
/// four cell probabilities of the (A, B) partition.
#[derive(Debug, Clone, PartialEq)]
pub struct PtttPredictions {
    /// Bounds for the conditional-probability reading; a proper interval
    /// [0, 1] in the zero-antecedent case, otherwise a point.
    pub conditional_lower: Rational,
    pub conditional_upper: Rational,
    pub conjunction: Rational,
    pub material: Rational,
}

impl PtttPredictions {
    pub fn conditional_is_point(&self) -> bool {
        self.conditional_lower == self.conditional_upper
    }
}

pub fn pttt_predictions(
    x1: &Rational,
    x2: &Rational,
    x3: &Rational,
    x4: &Rational,
) -> Result<PtttPredictions> {
    let cells = [x1, x2, x3, x4];
    if cells.iter().any(|x| !is_probability(x)) {
        return Err(Error::NotADistribution(
            "every cell probability must lie in [0, 1]".to_string(),
        ));
    }
    let total = x1 + x2 + x3 + x4;
    if !total.is_one() {
        return Err(Error::NotADistribution(format!(
            "cell probabilities sum to {}, not 1",
            fraction_string(&total)
        )));
    }
    let antecedent_mass = x1 + x2;
    let (conditional_lower, conditional_upper) = if antecedent_mass.is_zero() {
        // conditioning on a zero-probability antecedent constrains nothing
        (Rational::zero(), Rational::one())
    } else {
        let point = x1 / &antecedent_mass;
        (point.clone(), point)
    };
    Ok(PtttPredictions {
        conditional_lower,
        conditional_upper,
        conjunction: x1.clone(),
        material: x1 + x3 + x4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn params(pairs: &[(&str, (i64, i64))]) -> RuleParams {
        let mut p = RuleParams::new();
        for (name, (n, d)) in pairs {
            p.set(name, rat(*n, *d));
        }
        p
    }

    #[test]
    fn conjunction_rule_closed_form() {
        let app = apply_rule(
            RuleName::And,
            &params(&[("xl", (9, 10)), ("xu", (9, 10)), ("yl", (4, 5)), ("yu", (4, 5))]),
        )
        .unwrap();
        assert_eq!((app.lower, app.upper), (rat(7, 10), rat(4, 5)));
    }

    #[test]
    fn conjunction_rule_degenerate_certainty() {
        let app = apply_rule(
            RuleName::And,
            &params(&[("xl", (1, 1)), ("xu", (1, 1)), ("yl", (1, 1)), ("yu", (1, 1))]),
        )
        .unwrap();
        assert_eq!((app.lower, app.upper), (rat(1, 1), rat(1, 1)));
        assert!(!app.non_informative);
    }

    #[test]
    fn modus_ponens_with_certain_premises() {
        let app = apply_rule(RuleName::Mp, &params(&[("x", (1, 1)), ("y", (1, 1))])).unwrap();
        assert_eq!((app.lower, app.upper), (rat(1, 1), rat(1, 1)));
    }

    #[test]
    fn cumulative_transitivity_closed_form_and_engine_agree() {
        let app = apply_rule(RuleName::Cut, &params(&[("x", (1, 2)), ("y", (1, 2))])).unwrap();
        assert_eq!((app.lower.clone(), app.upper.clone()), (rat(1, 4), rat(3, 4)));
        let verification = app.verify().unwrap();
        assert!(verification.matches, "engine: {:?}", verification.engine);
    }

    #[test]
    fn transitivity_is_non_informative() {
        let app = apply_rule(
            RuleName::Transitivity,
            &params(&[("x", (9, 10)), ("y", (9, 10))]),
        )
        .unwrap();
        assert_eq!((app.lower, app.upper), (rat(0, 1), rat(1, 1)));
        assert!(app.non_informative);
    }

    #[test]
    fn substituting_verum_into_cut_gives_mp_exactly() {
        let x = rat(2, 7);
        let y = rat(5, 9);
        let (cut_premises, cut_conclusion) = cut_schema(&Formula::Verum, &x, &y).unwrap();
        let mp = apply_rule(RuleName::Mp, &params(&[("x", (2, 7)), ("y", (5, 9))])).unwrap();
        assert_eq!(cut_premises, mp.premises);
        assert_eq!(cut_conclusion, mp.conclusion);
    }

    #[test]
    fn monotonicity_material_encoding_is_classically_valid() {
        // whenever (not B or C) holds, so does (not (B and P) or C)
        let premise = Formula::or(Formula::not(atom("B")), atom("C"));
        let conclusion = Formula::or(
            Formula::not(Formula::and(atom("B"), atom("P"))),
            atom("C"),
        );
        let atoms: Vec<String> = ["B", "C", "P"].iter().map(|s| s.to_string()).collect();
        for v in Valuation::enumerate(&atoms) {
            if premise.eval(&v).unwrap() {
                assert!(conclusion.eval(&v).unwrap());
            }
        }
        // while the conditional-event form is non-informative
        let app = apply_rule(RuleName::Monotonicity, &params(&[("x", (19, 20))])).unwrap();
        assert!(app.non_informative);
    }

    #[test]
    fn aristotle_theses_report_forced_points() {
        match check_connexive(RuleName::At1).unwrap() {
            ConnexiveReport::ForcedValues { inner, negated, .. } => {
                assert_eq!(inner.0.to_string(), "A | not A");
                assert_eq!(inner.1, rat(0, 1));
                assert_eq!(negated.0.to_string(), "not A | not A");
                assert_eq!(negated.1, rat(1, 1));
            }
            other => panic!("unexpected report {other:?}"),
        }
        match check_connexive(RuleName::At2).unwrap() {
            ConnexiveReport::ForcedValues { inner, negated, .. } => {
                assert_eq!(inner.1, rat(0, 1));
                assert_eq!(negated.1, rat(1, 1));
            }
            other => panic!("unexpected report {other:?}"),
        }
    }

    #[test]
    fn boethius_identity_certified() {
        match check_connexive(RuleName::Bt1).unwrap() {
            ConnexiveReport::ConsequentIdentity {
                eval_identical,
                checked,
                ..
            } => {
                assert!(eval_identical);
                for (x, lower, upper) in checked {
                    assert_eq!(lower, x);
                    assert_eq!(upper, x);
                }
            }
            other => panic!("unexpected report {other:?}"),
        }
        let app = apply_rule(RuleName::Bt1, &params(&[("x", (7, 10))])).unwrap();
        assert_eq!((app.lower.clone(), app.upper.clone()), (rat(7, 10), rat(7, 10)));
        assert!(app.verify().unwrap().matches);
    }

    #[test]
    fn abelard_exclusion_thresholds() {
        match check_connexive(RuleName::Afp).unwrap() {
            ConnexiveReport::HighProbabilityExclusion { checks, .. } => {
                assert_eq!(
                    checks
                        .iter()
                        .map(|(t, ok)| (fraction_string(t), *ok))
                        .collect::<Vec<_>>(),
                    vec![
                        ("1/2".to_string(), true),
                        ("501/1000".to_string(), false),
                        ("3/5".to_string(), false),
                    ]
                );
            }
            other => panic!("unexpected report {other:?}"),
        }
    }

    #[test]
    fn pttt_predictions_formulas() {
        let p = pttt_predictions(&rat(1, 4), &rat(1, 4), &rat(1, 4), &rat(1, 4)).unwrap();
        assert!(p.conditional_is_point());
        assert_eq!(p.conditional_lower, rat(1, 2));
        assert_eq!(p.conjunction, rat(1, 4));
        assert_eq!(p.material, rat(3, 4));

        let p = pttt_predictions(&rat(0, 1), &rat(0, 1), &rat(1, 2), &rat(1, 2)).unwrap();
        assert!(!p.conditional_is_point());
        assert_eq!((p.conditional_lower, p.conditional_upper), (rat(0, 1), rat(1, 1)));
        assert_eq!(p.conjunction, rat(0, 1));
        assert_eq!(p.material, rat(1, 1));

        let p = pttt_predictions(&rat(1, 1), &rat(0, 1), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(p.conditional_lower, rat(1, 1));
        assert_eq!(p.conjunction, rat(1, 1));
        assert_eq!(p.material, rat(1, 1));
    }

    #[test]
    fn pttt_rejects_non_distributions() {
        assert!(matches!(
            pttt_predictions(&rat(1, 2), &rat(1, 2), &rat(1, 2), &rat(0, 1)),
            Err(Error::NotADistribution(_))
        ));
        assert!(matches!(
            pttt_predictions(&rat(-1, 4), &rat(1, 4), &rat(1, 2), &rat(1, 2)),
            Err(Error::NotADistribution(_))
        ));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            RuleName::parse("FOO"),
            Err(Error::UnknownRule(_))
        ));
        assert!(matches!(
            apply_rule(RuleName::Cut, &params(&[("x", (1, 2))])),
            Err(Error::MissingParam { .. })
        ));
        assert!(matches!(
            apply_rule(RuleName::Mp, &params(&[("x", (3, 2)), ("y", (1, 2))])),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            apply_rule(RuleName::Afp, &RuleParams::new()),
            Err(Error::NotAPropagation(_))
        ));
        assert!(matches!(
            check_connexive(RuleName::Cut),
            Err(Error::UnknownRule(_))
        ));
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleName::ALL {
            assert_eq!(RuleName::parse(rule.as_str()).unwrap(), rule);
        }
        assert_eq!(RuleName::parse("paradox_ce").unwrap(), RuleName::ParadoxCe);
    }
}
