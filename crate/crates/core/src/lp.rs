//! Exact linear feasibility and optimization over rationals.
//!
//! A dense two-phase tableau simplex with integer (fraction-free) pivoting:
//! constraint rows are scaled to integers once, every tableau entry stays an
//! integer multiple of the basis-inverse scale, and pivots update entries by
//! the two-term determinant identity whose division is exact. This keeps
//! entry growth polynomial and avoids per-operation gcd work, while all
//! reported witnesses, optima, and certificates remain exact rationals with
//! no tolerance parameters anywhere.
//!
//! The entering rule is steepest-coefficient (Dantzig) while progress is
//! being made and switches to Bland's rule after a run of degenerate
//! pivots. Bland's rule cannot cycle, so every solve terminates, and the
//! combined rule is a fixed function of the tableau, so identical inputs
//! give identical outputs.
//!
//! Variables are implicitly nonnegative.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::rational::Rational;

/// Consecutive degenerate pivots tolerated before anti-cycling kicks in.
const DEGENERATE_PIVOT_LIMIT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Constraint {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    pub coeffs: Vec<Rational>,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Option<Objective>,
}

impl LinearProgram {
    pub fn feasibility(num_vars: usize, constraints: Vec<Constraint>) -> LinearProgram {
        LinearProgram {
            num_vars,
            constraints,
            objective: None,
        }
    }

    pub fn with_objective(
        num_vars: usize,
        constraints: Vec<Constraint>,
        coeffs: Vec<Rational>,
        direction: Direction,
    ) -> LinearProgram {
        LinearProgram {
            num_vars,
            constraints,
            objective: Some(Objective { coeffs, direction }),
        }
    }
}

/// Infeasibility proof: one multiplier per constraint row plus one per
/// variable-nonnegativity bound. Each constraint is oriented as `>=` (a `<=`
/// row is negated first); inequality multipliers are nonnegative, equality
/// multipliers are free. Summing the multiplied rows yields `0 >= d` with
/// `d > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FarkasCertificate {
    pub row_multipliers: Vec<Rational>,
    pub bound_multipliers: Vec<Rational>,
}

impl FarkasCertificate {
    /// Checks the certificate against the program it claims to refute: the
    /// combined row must have all-zero coefficients and a strictly positive
    /// right-hand side.
    pub fn refutes(&self, lp: &LinearProgram) -> bool {
        if self.row_multipliers.len() != lp.constraints.len()
            || self.bound_multipliers.len() != lp.num_vars
        {
            return false;
        }
        for (mult, c) in self.row_multipliers.iter().zip(&lp.constraints) {
            if c.relation != Relation::Eq && mult.is_negative() {
                return false;
            }
        }
        if self.bound_multipliers.iter().any(|w| w.is_negative()) {
            return false;
        }
        for j in 0..lp.num_vars {
            let mut combined = self.bound_multipliers[j].clone();
            for (mult, c) in self.row_multipliers.iter().zip(&lp.constraints) {
                if mult.is_zero() || c.coeffs[j].is_zero() {
                    continue;
                }
                let oriented = if c.relation == Relation::Le {
                    -&c.coeffs[j]
                } else {
                    c.coeffs[j].clone()
                };
                combined += mult * oriented;
            }
            if !combined.is_zero() {
                return false;
            }
        }
        let mut rhs_combined = Rational::zero();
        for (mult, c) in self.row_multipliers.iter().zip(&lp.constraints) {
            if mult.is_zero() {
                continue;
            }
            let oriented = if c.relation == Relation::Le {
                -&c.rhs
            } else {
                c.rhs.clone()
            };
            rhs_combined += mult * oriented;
        }
        rhs_combined.is_positive()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Optimum {
    Optimal {
        value: Rational,
        witness: Vec<Rational>,
    },
    Infeasible(FarkasCertificate),
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OptimizeOutcome {
    Optimal { value: Rational },
    Infeasible(FarkasCertificate),
    Unbounded,
}

pub fn solve_feasibility(lp: &LinearProgram) -> Feasibility {
    let mut simplex = Simplex::new(lp.num_vars, &lp.constraints);
    match simplex.phase1() {
        Some(cert) => Feasibility::Infeasible(cert),
        None => Feasibility::Feasible(simplex.solution()),
    }
}

pub fn optimize(lp: &LinearProgram) -> Optimum {
    let objective = lp
        .objective
        .as_ref()
        .expect("optimize requires an objective");
    let mut simplex = Simplex::new(lp.num_vars, &lp.constraints);
    match simplex.optimize(&objective.coeffs, objective.direction) {
        OptimizeOutcome::Optimal { value } => Optimum::Optimal {
            value,
            witness: simplex.solution(),
        },
        OptimizeOutcome::Infeasible(cert) => Optimum::Infeasible(cert),
        OptimizeOutcome::Unbounded => Optimum::Unbounded,
    }
}

enum IterationEnd {
    Optimal,
    Unbounded,
}

/// Reusable tableau. One phase-1 run establishes feasibility; afterwards any
/// number of objectives can be optimized from the current basis, which stays
/// feasible across calls.
///
/// Internal representation: `tab` holds `scale * B^-1 * [A | b]` as
/// integers, where `scale = |det B|` of the current basis; the objective row
/// holds `scale * (reduced costs)` for integer-scaled costs. The basic
/// solution is `rhs[i] / scale`.
pub struct Simplex {
    n: usize,
    m: usize,
    ncols: usize,
    art_offset: usize,
    relations: Vec<Relation>,
    flipped: Vec<bool>,
    row_scale: Vec<BigInt>,
    tab: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    scale: BigInt,
    basis: Vec<usize>,
    obj: Vec<BigInt>,
    /// `-scale * objective_value` in integer cost units.
    neg_obj: BigInt,
    /// Integerization factor of the most recent objective.
    cost_scale: BigInt,
    degenerate_streak: usize,
    pivots: usize,
    feasible: Option<bool>,
    certificate: Option<FarkasCertificate>,
}

impl Simplex {
    pub fn new(num_vars: usize, constraints: &[Constraint]) -> Simplex {
        let n = num_vars;
        let m = constraints.len();
        let num_slacks = constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let art_offset = n + num_slacks;
        let ncols = art_offset + m;
        let mut tab = vec![vec![BigInt::zero(); ncols]; m];
        let mut rhs = Vec::with_capacity(m);
        let mut relations = Vec::with_capacity(m);
        let mut flipped = Vec::with_capacity(m);
        let mut row_scale = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack_idx = 0;
        for (i, c) in constraints.iter().enumerate() {
            assert_eq!(c.coeffs.len(), n, "constraint width mismatch");
            // clear denominators so the whole row is integral
            let mut lcm = c.rhs.denom().clone();
            for coeff in &c.coeffs {
                lcm = lcm.lcm(coeff.denom());
            }
            for (j, coeff) in c.coeffs.iter().enumerate() {
                if !coeff.is_zero() {
                    tab[i][j] = coeff.numer() * (&lcm / coeff.denom());
                }
            }
            match c.relation {
                Relation::Le => {
                    tab[i][n + slack_idx] = lcm.clone();
                    slack_idx += 1;
                }
                Relation::Ge => {
                    tab[i][n + slack_idx] = -lcm.clone();
                    slack_idx += 1;
                }
                Relation::Eq => {}
            }
            let mut b = c.rhs.numer() * (&lcm / c.rhs.denom());
            let flip = b.is_negative();
            if flip {
                for entry in tab[i].iter_mut() {
                    if !entry.is_zero() {
                        *entry = -entry.clone();
                    }
                }
                b = -b;
            }
            tab[i][art_offset + i] = BigInt::one();
            rhs.push(b);
            relations.push(c.relation);
            flipped.push(flip);
            row_scale.push(lcm);
            basis.push(art_offset + i);
        }
        Simplex {
            n,
            m,
            ncols,
            art_offset,
            relations,
            flipped,
            row_scale,
            tab,
            rhs,
            scale: BigInt::one(),
            basis,
            obj: vec![BigInt::zero(); ncols],
            neg_obj: BigInt::zero(),
            cost_scale: BigInt::one(),
            degenerate_streak: 0,
            pivots: 0,
            feasible: None,
            certificate: None,
        }
    }

    /// Total pivots performed so far, across phases and objectives.
    pub fn pivot_count(&self) -> usize {
        self.pivots
    }

    /// Runs phase 1 (idempotent). Returns the Farkas certificate when the
    /// system has no nonnegative solution.
    pub fn phase1(&mut self) -> Option<FarkasCertificate> {
        if let Some(feasible) = self.feasible {
            return if feasible {
                None
            } else {
                self.certificate.clone()
            };
        }
        // cost 1 on every artificial; initial basis is all-artificial and
        // scale is one, so reduced costs are cost minus column sum
        for j in 0..self.ncols {
            let mut colsum = BigInt::zero();
            for i in 0..self.m {
                if !self.tab[i][j].is_zero() {
                    colsum += &self.tab[i][j];
                }
            }
            let cost = if j >= self.art_offset {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            self.obj[j] = cost - colsum;
        }
        self.neg_obj = -self.rhs.iter().fold(BigInt::zero(), |acc, b| acc + b);
        self.cost_scale = BigInt::one();
        match self.iterate(|_| true) {
            IterationEnd::Optimal => {}
            IterationEnd::Unbounded => unreachable!("phase-1 objective is bounded below by zero"),
        }
        if self.neg_obj.is_negative() {
            let cert = self.extract_certificate();
            self.feasible = Some(false);
            self.certificate = Some(cert.clone());
            return Some(cert);
        }
        // Drive leftover artificials out of the basis where the row allows
        // it; rows with no nonzero structural coefficient are redundant and
        // their zero-valued artificial can never move again. The row carries
        // value zero, so when only a negative coefficient is available the
        // row can be negated first (flipping the departing artificial's
        // column) to keep the pivot element, and hence the scale, positive.
        for i in 0..self.m {
            if self.basis[i] >= self.art_offset {
                if let Some(j) = (0..self.art_offset).find(|&j| !self.tab[i][j].is_zero()) {
                    if self.tab[i][j].is_negative() {
                        debug_assert!(self.rhs[i].is_zero());
                        for entry in self.tab[i].iter_mut() {
                            if !entry.is_zero() {
                                *entry = -entry.clone();
                            }
                        }
                    }
                    self.pivot(i, j);
                }
            }
        }
        self.feasible = Some(true);
        None
    }

    /// Phase-1 duals read off the final reduced costs of the artificial
    /// columns, mapped back through row scaling and flips to multipliers on
    /// the original constraints.
    fn extract_certificate(&self) -> FarkasCertificate {
        let mut row_multipliers = Vec::with_capacity(self.m);
        for i in 0..self.m {
            let dual = Rational::new(
                &self.scale - &self.obj[self.art_offset + i],
                self.scale.clone(),
            );
            let mut on_row = dual * Rational::from_integer(self.row_scale[i].clone());
            if self.flipped[i] {
                on_row = -on_row;
            }
            let oriented = match self.relations[i] {
                Relation::Le => -on_row,
                _ => on_row,
            };
            row_multipliers.push(oriented);
        }
        let bound_multipliers = (0..self.n)
            .map(|j| Rational::new(self.obj[j].clone(), self.scale.clone()))
            .collect();
        FarkasCertificate {
            row_multipliers,
            bound_multipliers,
        }
    }

    /// Optimizes a linear objective over the feasible region. `coeffs` has
    /// one entry per original variable. May be called repeatedly with
    /// different objectives; each call starts from the last basis.
    pub fn optimize(&mut self, coeffs: &[Rational], direction: Direction) -> OptimizeOutcome {
        if let Some(cert) = self.phase1() {
            return OptimizeOutcome::Infeasible(cert);
        }
        assert_eq!(coeffs.len(), self.n, "objective width mismatch");
        let mut lcm = BigInt::one();
        for coeff in coeffs {
            lcm = lcm.lcm(coeff.denom());
        }
        let integer_cost: Vec<BigInt> = coeffs
            .iter()
            .map(|coeff| {
                let scaled = coeff.numer() * (&lcm / coeff.denom());
                match direction {
                    Direction::Minimize => scaled,
                    Direction::Maximize => -scaled,
                }
            })
            .collect();
        let cost_of = |j: usize| -> Option<&BigInt> {
            if j < self.n && !integer_cost[j].is_zero() {
                Some(&integer_cost[j])
            } else {
                None
            }
        };
        // reduced costs: scale * cost - (basic costs) . (tableau column)
        let basic_costs: Vec<Option<&BigInt>> = self.basis.iter().map(|&b| cost_of(b)).collect();
        for j in 0..self.ncols {
            let mut reduced = match cost_of(j) {
                Some(c) => c * &self.scale,
                None => BigInt::zero(),
            };
            for i in 0..self.m {
                if let Some(c) = basic_costs[i] {
                    if !self.tab[i][j].is_zero() {
                        reduced -= c * &self.tab[i][j];
                    }
                }
            }
            self.obj[j] = reduced;
        }
        self.neg_obj = BigInt::zero();
        for i in 0..self.m {
            if let Some(c) = basic_costs[i] {
                self.neg_obj -= c * &self.rhs[i];
            }
        }
        self.cost_scale = lcm;
        let art_offset = self.art_offset;
        match self.iterate(|j| j < art_offset) {
            IterationEnd::Optimal => {
                let value = Rational::new(-self.neg_obj.clone(), &self.scale * &self.cost_scale);
                OptimizeOutcome::Optimal {
                    value: match direction {
                        Direction::Minimize => value,
                        Direction::Maximize => -value,
                    },
                }
            }
            IterationEnd::Unbounded => OptimizeOutcome::Unbounded,
        }
    }

    /// Current basic solution restricted to the original variables.
    pub fn solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.n];
        for i in 0..self.m {
            if self.basis[i] < self.n {
                x[self.basis[i]] = Rational::new(self.rhs[i].clone(), self.scale.clone());
            }
        }
        x
    }

    /// Entering: steepest reduced cost, falling back to Bland's
    /// smallest-index rule during degenerate runs. Leaving: exact minimum
    /// ratio, ties broken by smallest basic variable index.
    fn iterate(&mut self, allow_entering: impl Fn(usize) -> bool) -> IterationEnd {
        loop {
            let bland = self.degenerate_streak >= DEGENERATE_PIVOT_LIMIT;
            let mut entering: Option<usize> = None;
            for j in 0..self.ncols {
                if !allow_entering(j) || !self.obj[j].is_negative() {
                    continue;
                }
                match entering {
                    None => entering = Some(j),
                    Some(_) if bland => break,
                    Some(e) => {
                        if self.obj[j] < self.obj[e] {
                            entering = Some(j);
                        }
                    }
                }
                if bland {
                    break;
                }
            }
            let Some(e) = entering else {
                return IterationEnd::Optimal;
            };
            // minimum of rhs[i] / tab[i][e] over positive entries, compared
            // by cross-multiplication
            let mut leaving: Option<usize> = None;
            for i in 0..self.m {
                if !self.tab[i][e].is_positive() {
                    continue;
                }
                let better = match leaving {
                    None => true,
                    Some(p) => {
                        let lhs = &self.rhs[i] * &self.tab[p][e];
                        let rhs = &self.rhs[p] * &self.tab[i][e];
                        lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[p])
                    }
                };
                if better {
                    leaving = Some(i);
                }
            }
            let Some(p) = leaving else {
                return IterationEnd::Unbounded;
            };
            if self.rhs[p].is_zero() {
                self.degenerate_streak += 1;
            } else {
                self.degenerate_streak = 0;
            }
            self.pivot(p, e);
        }
    }

    /// Fraction-free pivot: every entry of every other row becomes
    /// `(entry * pivot_element - column_entry * pivot_row_entry) / scale`,
    /// an exact integer division; the pivot row is left as is and the scale
    /// becomes the pivot element.
    fn pivot(&mut self, prow: usize, pcol: usize) {
        self.pivots += 1;
        let new_scale = self.tab[prow][pcol].clone();
        debug_assert!(new_scale.is_positive());
        let pivot_row: Vec<BigInt> = self.tab[prow].clone();
        let pivot_rhs = self.rhs[prow].clone();
        let old_scale = std::mem::replace(&mut self.scale, new_scale.clone());

        let update_row = |row: &mut [BigInt], row_rhs: &mut BigInt, col_entry: &BigInt| {
            if col_entry.is_zero() {
                if old_scale.is_one() && new_scale.is_one() {
                    return;
                }
                for entry in row.iter_mut() {
                    if !entry.is_zero() {
                        let scaled = &*entry * &new_scale;
                        debug_assert!((&scaled % &old_scale).is_zero());
                        *entry = scaled / &old_scale;
                    }
                }
                if !row_rhs.is_zero() {
                    let scaled = &*row_rhs * &new_scale;
                    *row_rhs = scaled / &old_scale;
                }
            } else {
                for (entry, pivot_entry) in row.iter_mut().zip(&pivot_row) {
                    if entry.is_zero() && pivot_entry.is_zero() {
                        continue;
                    }
                    let combined = &*entry * &new_scale - col_entry * pivot_entry;
                    debug_assert!((&combined % &old_scale).is_zero());
                    *entry = combined / &old_scale;
                }
                let combined = &*row_rhs * &new_scale - col_entry * &pivot_rhs;
                *row_rhs = combined / &old_scale;
            }
        };

        for i in 0..self.m {
            if i == prow {
                continue;
            }
            let col_entry = self.tab[i][pcol].clone();
            let (row, rhs) = (&mut self.tab[i], &mut self.rhs[i]);
            update_row(row, rhs, &col_entry);
            debug_assert!(self.tab[i][pcol].is_zero());
        }
        let col_entry = self.obj[pcol].clone();
        update_row(&mut self.obj, &mut self.neg_obj, &col_entry);
        self.basis[prow] = pcol;
    }
}
