//! Propositional formulas over named atoms with classical two-valued
//! semantics. The conditional bar is not a connective here; conditionals are
//! pairs of formulas (see [`crate::conditional`]). The material reading of
//! "if A then B" is spelled out explicitly as `not A or B`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on distinct atoms per problem: constituent enumeration is
/// exponential in this count, so one shared limit applies everywhere.
pub const ATOM_LIMIT: usize = 16;

/// Words the surface syntax claims for itself; they are rejected as atom
/// names so that printing and re-parsing is lossless.
pub const RESERVED_WORDS: &[&str] = &["and", "or", "not", "T", "F", "in", "p"];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Verum,
    Falsum,
}

pub fn is_valid_atom_name(name: &str) -> bool {
    if RESERVED_WORDS.contains(&name) {
        return false;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Formula {
    /// Builds an atom, panicking on malformed or reserved names. Use
    /// [`Formula::try_atom`] when the name comes from untrusted input.
    pub fn atom(name: &str) -> Formula {
        Self::try_atom(name).expect("invalid atom name")
    }

    pub fn try_atom(name: &str) -> Result<Formula> {
        if is_valid_atom_name(name) {
            Ok(Formula::Atom(name.to_string()))
        } else {
            Err(Error::InvalidAtomName(name.to_string()))
        }
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Parses the shared surface syntax (`not` > `and` > `or`, with `T` and
    /// `F` as verum and falsum).
    pub fn parse(text: &str) -> Result<Formula> {
        crate::parse::parse_formula(text)
    }

    /// Classical evaluation; the valuation must cover every atom.
    pub fn eval(&self, v: &Valuation) -> Result<bool> {
        match self {
            Formula::Atom(name) => v
                .get(name)
                .ok_or_else(|| Error::MissingAtom(name.clone())),
            Formula::Not(f) => Ok(!f.eval(v)?),
            Formula::And(a, b) => Ok(a.eval(v)? && b.eval(v)?),
            Formula::Or(a, b) => Ok(a.eval(v)? || b.eval(v)?),
            Formula::Verum => Ok(true),
            Formula::Falsum => Ok(false),
        }
    }

    /// Sorted, duplicate-free atom names. Verum and Falsum contribute none.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Formula::Verum | Formula::Falsum => {}
        }
    }

    /// True iff the formula is false under every valuation of its atoms.
    /// Decided by exhaustive enumeration, which the atom limit keeps cheap.
    pub fn is_contradiction(&self) -> Result<bool> {
        let atoms: Vec<String> = self.atoms().into_iter().collect();
        if atoms.len() > ATOM_LIMIT {
            return Err(Error::AtomLimitExceeded {
                count: atoms.len(),
                limit: ATOM_LIMIT,
            });
        }
        for v in Valuation::enumerate(&atoms) {
            if self.eval(&v).expect("valuation covers all atoms") {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        match self {
            Formula::Or(a, b) => {
                if level >= 1 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 0)?;
                f.write_str(" or ")?;
                b.fmt_prec(f, 1)?;
                if level >= 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Formula::And(a, b) => {
                if level >= 2 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 1)?;
                f.write_str(" and ")?;
                b.fmt_prec(f, 2)?;
                if level >= 2 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Formula::Not(inner) => {
                f.write_str("not ")?;
                inner.fmt_prec(f, 2)
            }
            Formula::Atom(name) => f.write_str(name),
            Formula::Verum => f.write_str("T"),
            Formula::Falsum => f.write_str("F"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Total assignment of truth values to atom names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Valuation(BTreeMap<String, bool>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation(BTreeMap::new())
    }

    pub fn from_pairs(pairs: &[(&str, bool)]) -> Valuation {
        Valuation(
            pairs
                .iter()
                .map(|(name, value)| (name.to_string(), *value))
                .collect(),
        )
    }

    pub fn set(&mut self, name: &str, value: bool) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// All 2^n valuations over `atoms`, in binary-counting order with the
    /// first atom as the most significant bit (index 0 is all-false).
    pub fn enumerate(atoms: &[String]) -> impl Iterator<Item = Valuation> + '_ {
        let n = atoms.len();
        (0u64..(1u64 << n)).map(move |bits| {
            let mut v = Valuation::new();
            for (j, atom) in atoms.iter().enumerate() {
                v.set(atom, bits >> (n - 1 - j) & 1 == 1);
            }
            v
        })
    }
}
