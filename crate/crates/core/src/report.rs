//! Outcome of an axiom sweep: every violated identity with the basis tuple
//! where it was first observed and the nonzero residual there.

use std::collections::BTreeSet;
use std::fmt;

use crate::linalg::Vector;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Condition label, e.g. `"N7"`, `"GF3"`, `"LIE-JACOBI"`.
    pub condition: String,
    /// Basis indices of the witnessing tuple.
    pub tuple: Vec<usize>,
    /// One character per index: the variable it was substituted for, as the
    /// identity is usually written (`a`, `b` range over A, `x`, `y`, `z` over V).
    pub slots: String,
    pub residual: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.condition)?;
        for (n, (i, s)) in self.tuple.iter().zip(self.slots.chars()).enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}{i}")?;
        }
        write!(f, "): residual {}", self.residual)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Record `residual` under `condition` unless it is zero. Only the first
    /// (lexicographically minimal, given sweep order) tuple per condition is
    /// kept.
    pub fn check(&mut self, condition: &str, slots: &str, tuple: &[usize], residual: Vector) {
        if residual.is_zero() || self.has(condition) {
            return;
        }
        self.violations.push(Violation {
            condition: condition.to_string(),
            tuple: tuple.to_vec(),
            slots: slots.to_string(),
            residual,
        });
    }

    pub fn check_scalar(&mut self, condition: &str, slots: &str, tuple: &[usize], residual: Scalar) {
        self.check(condition, slots, tuple, Vector::new(vec![residual]));
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for v in other.violations {
            if !self.has(&v.condition) {
                self.violations.push(v);
            }
        }
    }

    pub fn has(&self, condition: &str) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }

    pub fn get(&self, condition: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.condition == condition)
    }

    pub fn failed_conditions(&self) -> BTreeSet<String> {
        self.violations.iter().map(|v| v.condition.clone()).collect()
    }

    /// Rename condition labels through `f` (used when one checker is reused
    /// under another naming scheme).
    pub fn relabel(self, f: impl Fn(&str) -> String) -> ValidationReport {
        ValidationReport {
            violations: self
                .violations
                .into_iter()
                .map(|mut v| {
                    v.condition = f(&v.condition);
                    v
                })
                .collect(),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS");
        }
        write!(f, "FAIL")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_residuals_are_not_recorded() {
        let mut r = ValidationReport::new();
        r.check("N1", "ab", &[0, 1], Vector::zero(3));
        assert!(r.passed());
        r.check("N1", "ab", &[1, 0], Vector::from_ints(&[0, 1]));
        r.check("N1", "ab", &[1, 1], Vector::from_ints(&[0, 2]));
        assert_eq!(r.violations().len(), 1);
        assert_eq!(r.get("N1").unwrap().tuple, vec![1, 0]);
        assert_eq!(r.to_string(), "FAIL\n  N1 at (a1, b0): residual [0, 1]");
    }
}
