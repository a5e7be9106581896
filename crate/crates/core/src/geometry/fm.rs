//! Fourier–Motzkin elimination over exact rationals, with strict
//! inequalities, equations, and witness extraction.
//!
//! A system is a conjunction of constraints `coeffs·x + constant REL 0`.
//! Equations are removed first by substitution; the remaining inequalities
//! are eliminated variable by variable (highest index first). Feasibility
//! over the rationals equals feasibility over the reals for such systems,
//! and a deterministic interior witness is reconstructed by midpoint
//! back-substitution.

use num::{BigRational, Signed, Zero};

use super::linalg::{is_zero_vec, Rat};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    /// `expr = 0`
    Eq,
    /// `expr > 0`
    Gt,
    /// `expr ≥ 0`
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
    pub rel: Rel,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, constant: Rat, rel: Rel) -> Constraint {
        Constraint {
            coeffs,
            constant,
            rel,
        }
    }

    fn eval_ground(&self) -> bool {
        match self.rel {
            Rel::Eq => self.constant.is_zero(),
            Rel::Gt => self.constant.is_positive(),
            Rel::Ge => !self.constant.is_negative(),
        }
    }
}

/// An affine expression `coeffs·x + constant` used for substitutions and
/// bounds.
#[derive(Clone, Debug)]
struct Expr {
    coeffs: Vec<Rat>,
    constant: Rat,
}

impl Expr {
    fn eval(&self, assignment: &[Option<Rat>]) -> Rat {
        let mut v = self.constant.clone();
        for (c, a) in self.coeffs.iter().zip(assignment) {
            if !c.is_zero() {
                v += c * a.as_ref().expect("bound refers to an unassigned variable");
            }
        }
        v
    }
}

enum Step {
    /// Variable was defined by an equation: `x_var = expr`.
    Substitute { var: usize, expr: Expr },
    /// Variable was eliminated by Fourier–Motzkin between the recorded
    /// bounds: each entry is `(expr, strict)` with `x_var > / ≥ expr` for
    /// lowers and `x_var < / ≤ expr` for uppers.
    Eliminate {
        var: usize,
        lowers: Vec<(Expr, bool)>,
        uppers: Vec<(Expr, bool)>,
    },
}

/// Outcome of solving: infeasible, or feasible with a witness point.
pub fn solve(nvars: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    let mut cons: Vec<Constraint> = constraints.to_vec();
    let mut steps: Vec<Step> = Vec::new();

    // Stage 1: eliminate equations by substitution.
    while let Some(pos) = cons
        .iter()
        .position(|c| c.rel == Rel::Eq && !is_zero_vec(&c.coeffs))
    {
        let eq = cons.remove(pos);
        // Deterministic pivot: the last nonzero coefficient.
        let var = (0..nvars).rev().find(|&j| !eq.coeffs[j].is_zero()).unwrap();
        let pivot = eq.coeffs[var].clone();
        // x_var = -(rest + constant) / pivot
        let expr = Expr {
            coeffs: (0..nvars)
                .map(|j| {
                    if j == var {
                        Rat::zero()
                    } else {
                        -(&eq.coeffs[j] / &pivot)
                    }
                })
                .collect(),
            constant: -(&eq.constant / &pivot),
        };
        for c in &mut cons {
            if c.coeffs[var].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut c.coeffs[var], Rat::zero());
            for j in 0..nvars {
                let t = &expr.coeffs[j] * &f;
                c.coeffs[j] = &c.coeffs[j] + &t;
            }
            c.constant = &c.constant + &(&expr.constant * &f);
        }
        steps.push(Step::Substitute { var, expr });
    }

    // Ground equations (all-zero coefficients) and early exits.
    cons.retain(|c| {
        if is_zero_vec(&c.coeffs) {
            // keep only so that infeasibility is detected below
            !c.eval_ground()
        } else {
            true
        }
    });
    if cons.iter().any(|c| is_zero_vec(&c.coeffs)) {
        return None; // a retained ground constraint is violated
    }

    // Stage 2: Fourier–Motzkin on the inequalities.
    for var in (0..nvars).rev() {
        if cons.iter().all(|c| c.coeffs[var].is_zero()) {
            continue;
        }
        let mut lowers: Vec<(Expr, bool)> = Vec::new();
        let mut uppers: Vec<(Expr, bool)> = Vec::new();
        let mut rest: Vec<Constraint> = Vec::new();
        for c in cons.drain(..) {
            let a = c.coeffs[var].clone();
            if a.is_zero() {
                rest.push(c);
                continue;
            }
            // a·x_var + rest REL 0  ⇔  x_var REL' -(rest)/a  (flip if a < 0)
            let expr = Expr {
                coeffs: (0..nvars)
                    .map(|j| {
                        if j == var {
                            Rat::zero()
                        } else {
                            -(&c.coeffs[j] / &a)
                        }
                    })
                    .collect(),
                constant: -(&c.constant / &a),
            };
            let strict = c.rel == Rel::Gt;
            if a.is_positive() {
                lowers.push((expr, strict));
            } else {
                uppers.push((expr, strict));
            }
        }
        // Derived constraints: every upper must exceed every lower.
        for (lo, ls) in &lowers {
            for (up, us) in &uppers {
                let coeffs: Vec<Rat> = (0..nvars).map(|j| &up.coeffs[j] - &lo.coeffs[j]).collect();
                let constant = &up.constant - &lo.constant;
                let rel = if *ls || *us { Rel::Gt } else { Rel::Ge };
                let c = Constraint {
                    coeffs,
                    constant,
                    rel,
                };
                if is_zero_vec(&c.coeffs) {
                    if !c.eval_ground() {
                        return None;
                    }
                } else {
                    rest.push(c);
                }
            }
        }
        cons = rest;
        steps.push(Step::Eliminate {
            var,
            lowers,
            uppers,
        });
    }

    if cons.iter().any(|c| !is_zero_vec(&c.coeffs)) {
        unreachable!("all variables eliminated");
    }
    if cons.iter().any(|c| !c.eval_ground()) {
        return None;
    }

    // Back-substitute a witness, midpoints between the tightest bounds.
    // Variables not touched by any step are free; pin them to zero so that
    // substitution expressions can refer to them.
    let mut assignment: Vec<Option<Rat>> = vec![None; nvars];
    for (v, slot) in assignment.iter_mut().enumerate() {
        let touched = steps.iter().any(|s| match s {
            Step::Substitute { var, .. } | Step::Eliminate { var, .. } => *var == v,
        });
        if !touched {
            *slot = Some(Rat::zero());
        }
    }
    for step in steps.iter().rev() {
        match step {
            Step::Eliminate {
                var,
                lowers,
                uppers,
            } => {
                let lo = lowers
                    .iter()
                    .map(|(e, s)| (e.eval(&assignment), *s))
                    .max_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
                let up = uppers
                    .iter()
                    .map(|(e, s)| (e.eval(&assignment), *s))
                    .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
                let value = match (lo, up) {
                    (None, None) => Rat::zero(),
                    (Some((l, _)), None) => l + Rat::from_integer(1.into()),
                    (None, Some((u, _))) => u - Rat::from_integer(1.into()),
                    (Some((l, _)), Some((u, _))) => {
                        if l == u {
                            l
                        } else {
                            (&l + &u) / Rat::from_integer(2.into())
                        }
                    }
                };
                assignment[*var] = Some(value);
            }
            Step::Substitute { var, expr } => {
                assignment[*var] = Some(expr.eval(&assignment));
            }
        }
    }
    Some(
        assignment
            .into_iter()
            .map(|a| a.unwrap_or_else(Rat::zero))
            .collect(),
    )
}

/// Feasibility without needing the witness.
pub fn feasible(nvars: usize, constraints: &[Constraint]) -> bool {
    solve(nvars, constraints).is_some()
}

#[allow(dead_code)]
pub type Rational = BigRational;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::linalg::rat;

    fn c(coeffs: &[i64], constant: i64, rel: Rel) -> Constraint {
        Constraint::new(coeffs.iter().map(|&v| rat(v)).collect(), rat(constant), rel)
    }

    #[test]
    fn interval_feasibility() {
        // x > 0 and x < 1  (written as -x + 1 > 0)
        let cons = vec![c(&[1], 0, Rel::Gt), c(&[-1], 1, Rel::Gt)];
        let w = solve(1, &cons).unwrap();
        assert!(w[0] > rat(0) && w[0] < rat(1));
        // x > 0 and x < 0: empty
        assert!(!feasible(1, &[c(&[1], 0, Rel::Gt), c(&[-1], 0, Rel::Gt)]));
        // x ≥ 0 and x ≤ 0: the point 0
        let w = solve(1, &[c(&[1], 0, Rel::Ge), c(&[-1], 0, Rel::Ge)]).unwrap();
        assert_eq!(w[0], rat(0));
    }

    #[test]
    fn equations_substituted() {
        // x + y = 1, x - y = 0 -> x = y = 1/2, and x > 0 holds
        let cons = vec![
            c(&[1, 1], -1, Rel::Eq),
            c(&[1, -1], 0, Rel::Eq),
            c(&[1, 0], 0, Rel::Gt),
        ];
        let w = solve(2, &cons).unwrap();
        assert_eq!(w[0], crate::geometry::linalg::ratio(1, 2));
        assert_eq!(w[1], crate::geometry::linalg::ratio(1, 2));
        // inconsistent equations
        let cons = vec![c(&[1, 1], -1, Rel::Eq), c(&[1, 1], -2, Rel::Eq)];
        assert!(!feasible(2, &cons));
    }

    #[test]
    fn strip_between_parallel_lines() {
        // x > 0, x < 1 in two variables; y free
        let cons = vec![c(&[1, 0], 0, Rel::Gt), c(&[-1, 0], 1, Rel::Gt)];
        let w = solve(2, &cons).unwrap();
        assert!(w[0] > rat(0) && w[0] < rat(1));
    }

    #[test]
    fn unbounded_direction_witness() {
        // x > 3: witness strictly beyond the bound
        let w = solve(1, &[c(&[1], -3, Rel::Gt)]).unwrap();
        assert!(w[0] > rat(3));
    }
}
