//! Problem files: a sequence of assessed conditional-probability statements
//! and at most one query line.
//!
//! ```text
//! # premises
//! p(B) = 1
//! p(C | B) in [1/2, 2/3]
//! ? p(C | A)
//! ```
//!
//! Statements may end with an optional `;`, `#` starts a comment, and
//! values are exact (decimals are converted to fractions).

use prevision_core::coherence::Assessment;
use prevision_core::conditional::ConditionalEvent;
use prevision_core::error::Result;
use prevision_core::parse::{Parser, Token};
use prevision_core::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub event: ConditionalEvent,
    pub lower: Rational,
    pub upper: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub statements: Vec<Statement>,
    pub query: Option<ConditionalEvent>,
}

pub fn parse_problem(src: &str) -> Result<ProblemFile> {
    let mut parser = Parser::new(src)?;
    let mut statements = Vec::new();
    let mut query = None;
    while !parser.at_end() {
        if parser.accept(&Token::Question) {
            if query.is_some() {
                return Err(parser.error_here("a problem file may contain at most one query"));
            }
            parser.expect_word("p")?;
            parser.expect(&Token::LParen)?;
            let event = parser.parse_conditional_event()?;
            parser.expect(&Token::RParen)?;
            query = Some(event);
        } else {
            parser.expect_word("p")?;
            parser.expect(&Token::LParen)?;
            let event = parser.parse_conditional_event()?;
            parser.expect(&Token::RParen)?;
            if parser.accept(&Token::Equals) {
                let value = parser.parse_value()?;
                statements.push(Statement {
                    event,
                    lower: value.clone(),
                    upper: value,
                });
            } else if parser.accept_word("in") {
                parser.expect(&Token::LBracket)?;
                let lower = parser.parse_value()?;
                parser.expect(&Token::Comma)?;
                let upper = parser.parse_value()?;
                parser.expect(&Token::RBracket)?;
                statements.push(Statement {
                    event,
                    lower,
                    upper,
                });
            } else {
                return Err(parser.error_here("expected `=` or `in [lo, hi]` after p(...)"));
            }
        }
        parser.accept(&Token::Semicolon);
    }
    Ok(ProblemFile { statements, query })
}

impl ProblemFile {
    pub fn assessment(&self) -> Result<Assessment> {
        Assessment::new(
            self.statements
                .iter()
                .map(|s| (s.event.clone(), s.lower.clone(), s.upper.clone()))
                .collect(),
        )
    }
}
