//! Human-readable and JSON rendering of engine results. Fractions are
//! printed reduced, decimals to six places; the JSON schema keeps fractions
//! as strings so no precision is lost.

use serde_json::{json, Value};

use prevision_core::coherence::{Assessment, DutchBook};
use prevision_core::rational::{decimal_string, fraction_string, Rational};
use prevision_core::rules::{ConnexiveReport, PtttPredictions, RuleApplication, RuleVerification};

pub const DECIMAL_PLACES: u32 = 6;

pub fn frac(x: &Rational) -> String {
    fraction_string(x)
}

pub fn dec(x: &Rational) -> String {
    decimal_string(x, DECIMAL_PLACES)
}

pub fn interval(lower: &Rational, upper: &Rational) -> String {
    format!("[{}, {}]", frac(lower), frac(upper))
}

pub fn interval_decimal(lower: &Rational, upper: &Rational) -> String {
    format!("[{}, {}]", dec(lower), dec(upper))
}

pub fn dutch_book_text(book: &DutchBook, assessment: &Assessment) -> String {
    let mut out = String::from("dutch book (agent sure loss):\n");
    for bet in &book.bets {
        let event = &assessment.entries()[bet.entry].event;
        out.push_str(&format!(
            "  stake {} at price {} on p({})\n",
            frac(&bet.stake),
            frac(&bet.price),
            event
        ));
    }
    out
}

pub fn dutch_book_json(book: &DutchBook, assessment: &Assessment) -> Value {
    json!({
        "guarantee": "agent_sure_loss",
        "bets": book
            .bets
            .iter()
            .map(|bet| {
                let event = &assessment.entries()[bet.entry].event;
                json!({
                    "event": event.to_string(),
                    "price": frac(&bet.price),
                    "stake": frac(&bet.stake),
                })
            })
            .collect::<Vec<Value>>(),
    })
}

pub fn bounds_json(coherent: bool, lower: &Rational, upper: &Rational, non_informative: bool) -> Value {
    json!({
        "coherent": coherent,
        "lower": frac(lower),
        "upper": frac(upper),
        "lower_decimal": dec(lower),
        "upper_decimal": dec(upper),
        "non_informative": non_informative,
    })
}

pub fn premise_list(assessment: &Assessment) -> String {
    assessment
        .entries()
        .iter()
        .map(|entry| {
            if entry.is_point() {
                format!("p({}) = {}", entry.event, frac(&entry.lower))
            } else {
                format!(
                    "p({}) in [{}, {}]",
                    entry.event,
                    frac(&entry.lower),
                    frac(&entry.upper)
                )
            }
        })
        .collect::<Vec<String>>()
        .join(", ")
}

pub fn rule_text(app: &RuleApplication, verification: Option<&RuleVerification>) -> String {
    let mut out = format!("rule {}\n", app.rule);
    if app.premises.is_empty() {
        out.push_str("premises: none\n");
    } else {
        out.push_str(&format!("premises: {}\n", premise_list(&app.premises)));
    }
    out.push_str(&format!("conclusion: p({})\n", app.conclusion));
    out.push_str(&format!(
        "closed form: {}\ndecimal: {}\n",
        interval(&app.lower, &app.upper),
        interval_decimal(&app.lower, &app.upper)
    ));
    if app.non_informative {
        out.push_str("NON-INFORMATIVE\n");
    }
    if let Some(v) = verification {
        out.push_str(&format!(
            "engine: {}\nverified: {}\n",
            interval(&v.engine.lower, &v.engine.upper),
            if v.matches { "EQUAL" } else { "UNEQUAL" }
        ));
    }
    out
}

pub fn rule_json(app: &RuleApplication, verification: Option<&RuleVerification>) -> Value {
    let mut value = bounds_json(true, &app.lower, &app.upper, app.non_informative);
    value["rule"] = json!(app.rule.as_str());
    value["premises"] = json!(app
        .premises
        .entries()
        .iter()
        .map(|entry| json!({
            "event": entry.event.to_string(),
            "lower": frac(&entry.lower),
            "upper": frac(&entry.upper),
        }))
        .collect::<Vec<Value>>());
    value["conclusion"] = json!(app.conclusion.to_string());
    if let Some(v) = verification {
        value["engine_lower"] = json!(frac(&v.engine.lower));
        value["engine_upper"] = json!(frac(&v.engine.upper));
        value["verified"] = json!(if v.matches { "EQUAL" } else { "UNEQUAL" });
    }
    value
}

pub fn connexive_text(report: &ConnexiveReport, extra_threshold: Option<(&Rational, bool)>) -> String {
    match report {
        ConnexiveReport::ForcedValues {
            rule,
            inner,
            negated,
        } => {
            format!(
                "rule {rule}\nforced: p({}) = {}\nforced: p({}) = {}\n",
                inner.0,
                frac(&inner.1),
                negated.0,
                frac(&negated.1)
            )
        }
        ConnexiveReport::ConsequentIdentity {
            rule,
            premise,
            consequent,
            eval_identical,
            checked,
        } => {
            let mut out = format!(
                "rule {rule}\npremise: p({premise})\nconsequent: p({consequent})\nthree-valued evaluation identical: {}\n",
                if *eval_identical { "yes" } else { "no" }
            );
            let parts: Vec<String> = checked
                .iter()
                .map(|(x, lower, upper)| format!("x = {} -> {}", frac(x), interval(lower, upper)))
                .collect();
            out.push_str(&format!("engine: {}\n", parts.join("; ")));
            out
        }
        ConnexiveReport::HighProbabilityExclusion { rule, checks, .. } => {
            let mut out = format!(
                "rule {rule}\npremises: p(B | A) in [t, 1], p(not B | A) in [t, 1]\n"
            );
            for (t, coherent) in checks {
                out.push_str(&format!(
                    "t = {}: {}\n",
                    frac(t),
                    if *coherent { "g-coherent" } else { "incoherent" }
                ));
            }
            if let Some((t, coherent)) = extra_threshold {
                out.push_str(&format!(
                    "t = {}: {}\n",
                    frac(t),
                    if coherent { "g-coherent" } else { "incoherent" }
                ));
            }
            out
        }
    }
}

pub fn connexive_json(report: &ConnexiveReport, extra_threshold: Option<(&Rational, bool)>) -> Value {
    match report {
        ConnexiveReport::ForcedValues {
            rule,
            inner,
            negated,
        } => json!({
            "rule": rule.as_str(),
            "forced": [
                {"event": inner.0.to_string(), "value": frac(&inner.1)},
                {"event": negated.0.to_string(), "value": frac(&negated.1)},
            ],
        }),
        ConnexiveReport::ConsequentIdentity {
            rule,
            premise,
            consequent,
            eval_identical,
            checked,
        } => json!({
            "rule": rule.as_str(),
            "premise": premise.to_string(),
            "consequent": consequent.to_string(),
            "eval3_identical": eval_identical,
            "checked": checked
                .iter()
                .map(|(x, lower, upper)| json!({
                    "x": frac(x),
                    "lower": frac(lower),
                    "upper": frac(upper),
                }))
                .collect::<Vec<Value>>(),
        }),
        ConnexiveReport::HighProbabilityExclusion { rule, checks, .. } => {
            let mut rows: Vec<Value> = checks
                .iter()
                .map(|(t, coherent)| json!({"t": frac(t), "g_coherent": coherent}))
                .collect();
            if let Some((t, coherent)) = extra_threshold {
                rows.push(json!({"t": frac(t), "g_coherent": coherent}));
            }
            json!({"rule": rule.as_str(), "checks": rows})
        }
    }
}

pub fn pttt_text(predictions: &PtttPredictions) -> String {
    let mut out = String::new();
    if predictions.conditional_is_point() {
        out.push_str(&format!(
            "conditional probability: {} ({})\n",
            frac(&predictions.conditional_lower),
            dec(&predictions.conditional_lower)
        ));
    } else {
        out.push_str(&format!(
            "conditional probability: {} NON-INFORMATIVE\n",
            interval(&predictions.conditional_lower, &predictions.conditional_upper)
        ));
    }
    out.push_str(&format!(
        "conjunction: {} ({})\n",
        frac(&predictions.conjunction),
        dec(&predictions.conjunction)
    ));
    out.push_str(&format!(
        "material conditional: {} ({})\n",
        frac(&predictions.material),
        dec(&predictions.material)
    ));
    out
}

pub fn pttt_json(predictions: &PtttPredictions) -> Value {
    json!({
        "conditional_probability": {
            "lower": frac(&predictions.conditional_lower),
            "upper": frac(&predictions.conditional_upper),
            "point": predictions.conditional_is_point(),
        },
        "conjunction": frac(&predictions.conjunction),
        "material_conditional": frac(&predictions.material),
    })
}
