//! Simplicial operator calculus and colored simplicial sets.
//!
//! [`SimplicialOperator`] is a weakly monotone map `[m] -> [n]`, generated
//! by the face and degeneracy operators subject to the five simplicial
//! identities. [`ColoredSimplex`] carries the g/h/l(/m) labelings of vertex
//! tuples that the set attached to a crossed structure consists of; the
//! labels satisfy the cocycle conditions (a)-(d) and the degeneracy
//! normalizations, and operators act by reindexing.

mod colored;
mod cond;
mod cond_d;
mod enumerate;

pub use colored::{
    apply_operator, check_colored, strict_tuples, weak_tuples, ColoredError, ColoredSimplex,
    LabelSet, Structure,
};
pub use cond::{
    cond_a as cond_equation_a, cond_b as cond_equation_b, cond_c as cond_equation_c, CondError,
    Equation, LabelKey,
};
pub use cond_d::{cond_d as cond_equation_d, cond_d_with, CondDReading};
pub use enumerate::{
    count_colorings, enumerate_simplices, EnumMode, EnumOutcome, LabelSpace, SpaceKind,
};

use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("operator values must be weakly monotone")]
    NotMonotone,
    #[error("operator value {0} exceeds target dimension {1}")]
    OutOfRange(usize, usize),
    #[error("dimension mismatch: cannot compose [{0}] -> [{1}] chains")]
    DimMismatch(usize, usize),
    #[error("operator must have at least one value")]
    Empty,
}

/// A weakly monotone map `[m] -> [n]`, stored as its value list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialOperator {
    target_dim: usize,
    values: Vec<usize>,
}

impl SimplicialOperator {
    pub fn new(target_dim: usize, values: Vec<usize>) -> Result<Self, OperatorError> {
        if values.is_empty() {
            return Err(OperatorError::Empty);
        }
        if let Some(&v) = values.iter().find(|&&v| v > target_dim) {
            return Err(OperatorError::OutOfRange(v, target_dim));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(OperatorError::NotMonotone);
        }
        Ok(SimplicialOperator { target_dim, values })
    }

    /// The identity on `[n]`.
    pub fn identity(n: usize) -> Self {
        SimplicialOperator { target_dim: n, values: (0..=n).collect() }
    }

    /// The face operator `d^n_i : [n-1] -> [n]` skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "face d^{n}_{i} undefined");
        let values = (0..=n).filter(|&v| v != i).collect();
        SimplicialOperator { target_dim: n, values }
    }

    /// The degeneracy operator `s^n_i : [n+1] -> [n]` repeating `i`.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "degeneracy s^{n}_{i} undefined");
        let mut values: Vec<usize> = (0..=i).collect();
        values.extend(i..=n);
        SimplicialOperator { target_dim: n, values }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim
            && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Pointwise composition `f . g` (apply `g` first).
    pub fn compose(f: &SimplicialOperator, g: &SimplicialOperator) -> Result<Self, OperatorError> {
        if g.target_dim != f.source_dim() {
            return Err(OperatorError::DimMismatch(g.target_dim, f.source_dim()));
        }
        let values = g.values.iter().map(|&x| f.values[x]).collect();
        Ok(SimplicialOperator { target_dim: f.target_dim, values })
    }

    /// All operators `[m] -> [n]`, in lexicographic order of value lists.
    pub fn all(source_dim: usize, target_dim: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; source_dim + 1];
        loop {
            out.push(SimplicialOperator { target_dim, values: cur.clone() });
            // next weakly monotone word over 0..=target_dim
            let mut pos = source_dim + 1;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < target_dim {
                    cur[pos] += 1;
                    for v in pos + 1..=source_dim {
                        cur[v] = cur[pos];
                    }
                    break;
                }
            }
        }
    }
}

/// Verifies the five simplicial identity families by pointwise evaluation
/// for every valid `(i, j)` at levels up to `n_max`.
pub fn check_simplicial_identities(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("simplicial identities up to n={n_max}"));
    let d = SimplicialOperator::face;
    let s = SimplicialOperator::degeneracy;
    let eq = |a: Result<SimplicialOperator, OperatorError>,
              b: Result<SimplicialOperator, OperatorError>| {
        match (a, b) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    };
    for n in 0..=n_max {
        // family 1: d^{n+1}_j . d^n_i = d^{n+1}_i . d^n_{j-1}  for i < j
        if n >= 1 {
            for j in 0..=n + 1 {
                for i in 0..j {
                    if !eq(
                        SimplicialOperator::compose(&d(n + 1, j), &d(n, i)),
                        SimplicialOperator::compose(&d(n + 1, i), &d(n, j - 1)),
                    ) {
                        report.record("identity.dd", vec![n, i, j]);
                    }
                }
            }
        }
        // family 2: s^n_j . s^{n+1}_i = s^n_i . s^{n+1}_{j+1}  for i <= j
        // (the level superscripts are forced by composability)
        for j in 0..=n {
            for i in 0..=j {
                if !eq(
                    SimplicialOperator::compose(&s(n, j), &s(n + 1, i)),
                    SimplicialOperator::compose(&s(n, i), &s(n + 1, j + 1)),
                ) {
                    report.record("identity.ss", vec![n, i, j]);
                }
            }
        }
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = SimplicialOperator::compose(&s(n, j), &d(n + 1, i));
                if i == j || i == j + 1 {
                    // family 3: s^n_j . d^{n+1}_i = id
                    if !lhs.map(|o| o.is_identity()).unwrap_or(false) {
                        report.record("identity.sd-id", vec![n, i, j]);
                    }
                } else if i < j {
                    // family 4: s^n_j . d^{n+1}_i = d^n_i . s^{n-1}_{j-1}
                    if !eq(lhs, SimplicialOperator::compose(&d(n, i), &s(n - 1, j - 1))) {
                        report.record("identity.sd-lt", vec![n, i, j]);
                    }
                } else {
                    // family 5: s^n_j . d^{n+1}_i = d^n_{i-1} . s^{n-1}_j
                    // (i > j + 1, so n >= 1)
                    if !eq(lhs, SimplicialOperator::compose(&d(n, i - 1), &s(n - 1, j))) {
                        report.record("identity.sd-gt", vec![n, i, j]);
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_degeneracy_shapes() {
        let d20 = SimplicialOperator::face(2, 0);
        assert_eq!(d20.values(), &[1, 2]);
        let s10 = SimplicialOperator::degeneracy(1, 0);
        assert_eq!(s10.values(), &[0, 0, 1]);
        assert_eq!(s10.source_dim(), 2);
        assert_eq!(s10.target_dim(), 1);
    }

    #[test]
    fn compose_examples() {
        let d = SimplicialOperator::face;
        let s = SimplicialOperator::degeneracy;
        // s^0_0 . d^1_i = id for i = 0, 1
        for i in 0..=1 {
            let c = SimplicialOperator::compose(&s(0, 0), &d(1, i)).unwrap();
            assert!(c.is_identity());
        }
        // compose(id, f) = f
        let f = SimplicialOperator::new(3, vec![0, 2, 2]).unwrap();
        let c = SimplicialOperator::compose(&SimplicialOperator::identity(3), &f).unwrap();
        assert_eq!(c, f);
        // d^2_2 . d^1_0 = d^2_0 . d^1_1, evaluated pointwise on {0}
        let lhs = SimplicialOperator::compose(&d(2, 2), &d(1, 0)).unwrap();
        let rhs = SimplicialOperator::compose(&d(2, 0), &d(1, 1)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.values(), &[1]);
        // dimension mismatch is an error
        assert!(SimplicialOperator::compose(&d(1, 0), &d(3, 0)).is_err());
    }

    #[test]
    fn identities_hold_up_to_8() {
        let report = check_simplicial_identities(8);
        assert!(report.ok(), "{:?}", report.violations.first());
    }

    #[test]
    fn random_words_reduce_consistently() {
        // Normal-form oracle: any composite of generators equals the
        // operator given by its pointwise values.
        let d = SimplicialOperator::face;
        let s = SimplicialOperator::degeneracy;
        // the word s^2_1 . d^3_3 . d^2_0 : [1] -> [2]
        let w = SimplicialOperator::compose(
            &SimplicialOperator::compose(&s(2, 1), &d(3, 3)).unwrap(),
            &d(2, 0),
        )
        .unwrap();
        let direct: Vec<usize> = (0..=1).map(|x| w.apply(x)).collect();
        assert_eq!(w.values(), &direct[..]);
        assert_eq!(w.source_dim(), 1);
        assert_eq!(w.target_dim(), 2);
    }

    #[test]
    fn all_operators_counts() {
        // #Hom([m], [n]) = C(n + m + 1, m + 1)
        assert_eq!(SimplicialOperator::all(0, 2).len(), 3);
        assert_eq!(SimplicialOperator::all(1, 1).len(), 3);
        assert_eq!(SimplicialOperator::all(2, 1).len(), 4);
        assert_eq!(SimplicialOperator::all(1, 2).len(), 6);
        for op in SimplicialOperator::all(2, 3) {
            assert!(op.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
