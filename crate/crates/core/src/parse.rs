//! Tokenizer and recursive-descent parsers for the shared surface syntax.
//!
//! Grammar (whitespace-insensitive, `#` comments to end of line):
//!
//! ```text
//! formula  := disj
//! disj     := conj ("or" conj)*
//! conj     := unary ("and" unary)*
//! unary    := "not" unary | atom | "T" | "F" | "(" formula ")"
//! condevent:= formula ("|" formula)?
//! value    := decimal | integer "/" positive-integer | integer
//! ```
//!
//! Decimals are converted exactly (`0.25` becomes `1/4`). The problem-file
//! grammar on top of this lives in the CLI crate, which drives the same
//! [`Parser`] over the same token stream.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::conditional::ConditionalEvent;
use crate::error::{Error, ParseError, Result};
use crate::formula::{is_valid_atom_name, Formula, RESERVED_WORDS};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    /// Identifier or keyword; the parsers decide which.
    Word(String),
    /// Unsigned integer literal, kept as text.
    Integer(String),
    /// Unsigned decimal literal `a.b`, kept as text.
    Decimal(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Bar,
    Equals,
    Comma,
    Slash,
    Question,
    Semicolon,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Word(w) => format!("`{w}`"),
            Token::Integer(s) | Token::Decimal(s) => format!("`{s}`"),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::Bar => "`|`".into(),
            Token::Equals => "`=`".into(),
            Token::Comma => "`,`".into(),
            Token::Slash => "`/`".into(),
            Token::Question => "`?`".into(),
            Token::Semicolon => "`;`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannedToken {
    pub token: Token,
    pub line: usize,
    pub column: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<SpannedToken>> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let start_line = line;
        let start_column = column;
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let token = if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            Token::Word(word)
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            let mut lookahead = chars.clone();
            if lookahead.next() == Some('.')
                && lookahead.peek().is_some_and(|c| c.is_ascii_digit())
            {
                digits.push(bump(&mut chars));
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                Token::Decimal(digits)
            } else {
                Token::Integer(digits)
            }
        } else {
            let sym = match c {
                '(' => Token::LParen,
                ')' => Token::RParen,
                '[' => Token::LBracket,
                ']' => Token::RBracket,
                '|' => Token::Bar,
                '=' => Token::Equals,
                ',' => Token::Comma,
                '/' => Token::Slash,
                '?' => Token::Question,
                ';' => Token::Semicolon,
                other => {
                    return Err(ParseError::new(
                        start_line,
                        start_column,
                        format!("unexpected character `{other}`"),
                    )
                    .into())
                }
            };
            bump(&mut chars);
            sym
        };
        tokens.push(SpannedToken {
            token,
            line: start_line,
            column: start_column,
        });
    }
    Ok(tokens)
}

/// Cursor over a token stream. The CLI's problem-file parser drives this
/// directly so that formulas, conditional events, and values are parsed by
/// exactly one implementation.
pub struct Parser {
    tokens: Vec<SpannedToken>,
    pos: usize,
    end_line: usize,
    end_column: usize,
}

impl Parser {
    pub fn new(src: &str) -> Result<Parser> {
        let tokens = tokenize(src)?;
        let (end_line, end_column) = match src.lines().count() {
            0 => (1, 1),
            n => (n, src.lines().last().map_or(0, |l| l.chars().count()) + 1),
        };
        Ok(Parser {
            tokens,
            pos: 0,
            end_line,
            end_column,
        })
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.token)
    }

    fn here(&self) -> (usize, usize) {
        match self.tokens.get(self.pos) {
            Some(t) => (t.line, t.column),
            None => (self.end_line, self.end_column),
        }
    }

    pub fn error_here(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        ParseError::new(line, column, message).into()
    }

    fn next(&mut self) -> Option<SpannedToken> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn expect(&mut self, expected: &Token) -> Result<()> {
        match self.peek() {
            Some(t) if t == expected => {
                self.next();
                Ok(())
            }
            Some(t) => Err(self.error_here(format!(
                "expected {}, found {}",
                expected.describe(),
                t.describe()
            ))),
            None => Err(self.error_here(format!(
                "expected {}, found end of input",
                expected.describe()
            ))),
        }
    }

    /// Consumes the given keyword if it is next.
    pub fn accept_word(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Some(Token::Word(w)) if w == word) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn expect_word(&mut self, word: &str) -> Result<()> {
        if self.accept_word(word) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(t) => t.describe(),
                None => "end of input".into(),
            };
            Err(self.error_here(format!("expected `{word}`, found {found}")))
        }
    }

    pub fn accept(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn parse_formula(&mut self) -> Result<Formula> {
        let mut f = self.parse_conjunction()?;
        while self.accept_word("or") {
            let rhs = self.parse_conjunction()?;
            f = Formula::or(f, rhs);
        }
        Ok(f)
    }

    fn parse_conjunction(&mut self) -> Result<Formula> {
        let mut f = self.parse_unary()?;
        while self.accept_word("and") {
            let rhs = self.parse_unary()?;
            f = Formula::and(f, rhs);
        }
        Ok(f)
    }

    fn parse_unary(&mut self) -> Result<Formula> {
        if self.accept_word("not") {
            return Ok(Formula::not(self.parse_unary()?));
        }
        if self.accept(&Token::LParen) {
            let f = self.parse_formula()?;
            self.expect(&Token::RParen)?;
            return Ok(f);
        }
        match self.peek().cloned() {
            Some(Token::Word(w)) if w == "T" => {
                self.next();
                Ok(Formula::Verum)
            }
            Some(Token::Word(w)) if w == "F" => {
                self.next();
                Ok(Formula::Falsum)
            }
            Some(Token::Word(w)) => {
                if w == "and" || w == "or" {
                    return Err(self.error_here(format!("expected a formula, found `{w}`")));
                }
                if RESERVED_WORDS.contains(&w.as_str()) {
                    return Err(
                        self.error_here(format!("reserved word `{w}` cannot be used as an atom"))
                    );
                }
                if !is_valid_atom_name(&w) {
                    return Err(self.error_here(format!("invalid atom name `{w}`")));
                }
                self.next();
                Ok(Formula::Atom(w))
            }
            Some(t) => Err(self.error_here(format!("expected a formula, found {}", t.describe()))),
            None => Err(self.error_here("expected a formula, found end of input")),
        }
    }

    /// `formula ("|" formula)?`; a missing bar means conditioning on verum.
    pub fn parse_conditional_event(&mut self) -> Result<ConditionalEvent> {
        let consequent = self.parse_formula()?;
        if self.accept(&Token::Bar) {
            let antecedent = self.parse_formula()?;
            ConditionalEvent::new(consequent, antecedent)
        } else {
            ConditionalEvent::unconditional(consequent)
        }
    }

    /// Exact rational value: `3/5`, `0.25`, or a bare integer.
    pub fn parse_value(&mut self) -> Result<Rational> {
        match self.next() {
            Some(SpannedToken {
                token: Token::Integer(digits),
                ..
            }) => {
                let numer: BigInt = digits.parse().expect("digits parse as integer");
                if self.accept(&Token::Slash) {
                    match self.next() {
                        Some(SpannedToken {
                            token: Token::Integer(denom_digits),
                            line,
                            column,
                        }) => {
                            let denom: BigInt =
                                denom_digits.parse().expect("digits parse as integer");
                            if denom.is_zero() {
                                return Err(ParseError::new(
                                    line,
                                    column,
                                    "denominator must be a positive integer",
                                )
                                .into());
                            }
                            Ok(Rational::new(numer, denom))
                        }
                        _ => {
                            self.pos = self.pos.saturating_sub(1);
                            Err(self.error_here("expected denominator after `/`"))
                        }
                    }
                } else {
                    Ok(Rational::from_integer(numer))
                }
            }
            Some(SpannedToken {
                token: Token::Decimal(text),
                ..
            }) => {
                let (int_part, frac_part) = text.split_once('.').expect("decimal contains dot");
                let mut numer: BigInt = int_part.parse().expect("digits parse");
                let mut denom = BigInt::one();
                for digit in frac_part.chars() {
                    numer = numer * 10 + digit.to_digit(10).expect("digit") as i64;
                    denom *= 10;
                }
                Ok(Rational::new(numer, denom))
            }
            Some(t) => {
                self.pos -= 1;
                Err(self.error_here(format!("expected a value, found {}", t.token.describe())))
            }
            None => Err(self.error_here("expected a value, found end of input")),
        }
    }

    pub fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error_here(format!("unexpected trailing {}", t.describe()))),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let f = p.parse_formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_conditional(text: &str) -> Result<ConditionalEvent> {
    let mut p = Parser::new(text)?;
    let ce = p.parse_conditional_event()?;
    p.expect_end()?;
    Ok(ce)
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut p = Parser::new(text)?;
    let v = p.parse_value()?;
    p.expect_end()?;
    Ok(v)
}
