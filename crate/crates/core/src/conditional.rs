//! Conditional events `B|A`: three-valued objects that are true when the
//! antecedent and consequent both hold, false when the antecedent holds and
//! the consequent fails, and void (the bet is called off) when the
//! antecedent fails. Both sides are plain formulas, so nesting a conditional
//! inside a conditional is unrepresentable by construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Formula, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValue3 {
    True,
    False,
    Void,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConditionalEvent {
    consequent: Formula,
    antecedent: Formula,
}

impl ConditionalEvent {
    /// Builds `consequent | antecedent`. Conditioning on a contradiction is
    /// undefined and rejected here.
    pub fn new(consequent: Formula, antecedent: Formula) -> Result<ConditionalEvent> {
        if antecedent.is_contradiction()? {
            return Err(Error::ContradictoryAntecedent);
        }
        Ok(ConditionalEvent {
            consequent,
            antecedent,
        })
    }

    /// An unconditional event is a conditional on verum.
    pub fn unconditional(consequent: Formula) -> Result<ConditionalEvent> {
        ConditionalEvent::new(consequent, Formula::Verum)
    }

    pub fn consequent(&self) -> &Formula {
        &self.consequent
    }

    pub fn antecedent(&self) -> &Formula {
        &self.antecedent
    }

    pub fn is_unconditional(&self) -> bool {
        self.antecedent == Formula::Verum
    }

    /// Three-valued evaluation under a valuation covering both sides.
    pub fn eval3(&self, v: &Valuation) -> Result<TruthValue3> {
        if !self.antecedent.eval(v)? {
            // also surfaces missing atoms that appear only in the consequent
            self.consequent.eval(v)?;
            return Ok(TruthValue3::Void);
        }
        if self.consequent.eval(v)? {
            Ok(TruthValue3::True)
        } else {
            Ok(TruthValue3::False)
        }
    }

    /// Narrow-scope negation: negate the consequent, keep the antecedent.
    pub fn negate_narrow(&self) -> ConditionalEvent {
        ConditionalEvent {
            consequent: Formula::not(self.consequent.clone()),
            antecedent: self.antecedent.clone(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = self.consequent.atoms();
        out.extend(self.antecedent.atoms());
        out
    }
}

impl fmt::Display for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unconditional() {
            write!(f, "{}", self.consequent)
        } else {
            write!(f, "{} | {}", self.consequent, self.antecedent)
        }
    }
}
