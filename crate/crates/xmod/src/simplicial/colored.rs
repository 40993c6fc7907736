//! Colored simplices: sparse g/h/l(/m) labelings of vertex tuples.
//!
//! Labels are stored only on strictly increasing tuples; lookups on weakly
//! increasing tuples return the unit whenever two adjacent vertices agree,
//! which realizes the degeneracy normalizations structurally. A complete
//! labeling of `[n]` whose instances of conditions (a)-(d) all hold is a
//! simplex of the colored set attached to the structure.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::crossed::{ThreeCrossedModule, TwoCrossedModule};
use crate::group::{Elem, GroupRef};
use crate::report::CheckReport;

use super::cond::{cond_a, cond_b, cond_c, CondError, LabelKey};
use super::cond_d::cond_d;
use super::SimplicialOperator;

/// The crossed structure a colored simplex is labeled over.
#[derive(Debug, Clone)]
pub enum Structure {
    Two(Arc<TwoCrossedModule>),
    Three(Arc<ThreeCrossedModule>),
}

impl Structure {
    pub fn is_three(&self) -> bool {
        matches!(self, Structure::Three(_))
    }

    pub fn g(&self) -> &GroupRef {
        match self {
            Structure::Two(w) => &w.g,
            Structure::Three(t) => &t.g,
        }
    }

    pub fn h(&self) -> &GroupRef {
        match self {
            Structure::Two(w) => &w.h,
            Structure::Three(t) => &t.h,
        }
    }

    pub fn l(&self) -> &GroupRef {
        match self {
            Structure::Two(w) => &w.l,
            Structure::Three(t) => &t.l,
        }
    }

    pub fn m(&self) -> Option<&GroupRef> {
        match self {
            Structure::Two(_) => None,
            Structure::Three(t) => Some(&t.m),
        }
    }

    pub fn three(&self) -> Option<&ThreeCrossedModule> {
        match self {
            Structure::Two(_) => None,
            Structure::Three(t) => Some(t),
        }
    }

    /// Group order of the label family, 0-arity-indexed g=0, h=1, l=2, m=3.
    pub fn label_space(&self, family: usize) -> usize {
        match family {
            0 => self.g().order(),
            1 => self.h().order(),
            2 => self.l().order(),
            3 => self.m().map(|m| m.order()).unwrap_or(1),
            _ => unreachable!(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ColoredError {
    #[error("label key {0:?} is not strictly increasing or out of range")]
    BadKey(Vec<u8>),
    #[error("label value {0} out of range for its group")]
    BadValue(usize),
    #[error("missing label for tuple {0:?}")]
    Missing(Vec<u8>),
    #[error("m labels require a 3-crossed structure")]
    UnexpectedM,
    #[error("dimension mismatch: operator targets [{0}], simplex has dim {1}")]
    DimMismatch(usize, usize),
    #[error(transparent)]
    Cond(#[from] CondError),
}

/// Sparse labels keyed by strictly increasing vertex tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelSet {
    pub g: BTreeMap<[u8; 2], Elem>,
    pub h: BTreeMap<[u8; 3], Elem>,
    pub l: BTreeMap<[u8; 4], Elem>,
    pub m: BTreeMap<[u8; 5], Elem>,
}

fn strict(t: &[u8]) -> bool {
    t.windows(2).all(|w| w[0] < w[1])
}

impl LabelSet {
    /// Weak-tuple accessor: unit on any adjacent repeat, stored value on
    /// strict tuples, None when a strict tuple has no label.
    pub fn g_at(&self, st: &Structure, t: [u8; 2]) -> Option<Elem> {
        if t[0] == t[1] {
            Some(st.g().identity())
        } else {
            self.g.get(&t).copied()
        }
    }

    pub fn h_at(&self, st: &Structure, t: [u8; 3]) -> Option<Elem> {
        if !strict(&t) {
            Some(st.h().identity())
        } else {
            self.h.get(&t).copied()
        }
    }

    pub fn l_at(&self, st: &Structure, t: [u8; 4]) -> Option<Elem> {
        if !strict(&t) {
            Some(st.l().identity())
        } else {
            self.l.get(&t).copied()
        }
    }

    pub fn m_at(&self, st: &Structure, t: [u8; 5]) -> Option<Elem> {
        if !strict(&t) {
            Some(st.m().map(|m| m.identity()).unwrap_or(0))
        } else {
            self.m.get(&t).copied()
        }
    }

    /// Strict lookup by key, with degenerate keys never reaching here.
    pub fn get_strict(&self, st: &Structure, key: &LabelKey) -> Option<Elem> {
        match key {
            LabelKey::G(t) => self.g_at(st, *t),
            LabelKey::H(t) => self.h_at(st, *t),
            LabelKey::L(t) => self.l_at(st, *t),
            LabelKey::M(t) => self.m_at(st, *t),
        }
    }

    pub fn insert(&mut self, key: LabelKey, value: Elem) {
        match key {
            LabelKey::G(t) => {
                self.g.insert(t, value);
            }
            LabelKey::H(t) => {
                self.h.insert(t, value);
            }
            LabelKey::L(t) => {
                self.l.insert(t, value);
            }
            LabelKey::M(t) => {
                self.m.insert(t, value);
            }
        }
    }

    pub fn contains(&self, key: &LabelKey) -> bool {
        match key {
            LabelKey::G(t) => !strict(t) || self.g.contains_key(t),
            LabelKey::H(t) => !strict(t) || self.h.contains_key(t),
            LabelKey::L(t) => !strict(t) || self.l.contains_key(t),
            LabelKey::M(t) => !strict(t) || self.m.contains_key(t),
        }
    }
}

/// Every strictly increasing `K`-tuple with entries in `0..=n`.
pub fn strict_tuples<const K: usize>(n: usize) -> Vec<[u8; K]> {
    let mut out = Vec::new();
    if K > n + 1 {
        return out;
    }
    let mut cur = [0u8; K];
    for (slot, v) in cur.iter_mut().enumerate() {
        *v = slot as u8;
    }
    loop {
        out.push(cur);
        // next combination
        let mut pos = K;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            let max = (n + pos + 1 - K) as u8;
            if cur[pos] < max {
                cur[pos] += 1;
                for later in pos + 1..K {
                    cur[later] = cur[later - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every weakly increasing `K`-tuple with entries in `0..=n`.
pub fn weak_tuples<const K: usize>(n: usize) -> Vec<[u8; K]> {
    let mut out = Vec::new();
    let mut cur = [0u8; K];
    loop {
        out.push(cur);
        let mut pos = K;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if (cur[pos] as usize) < n {
                cur[pos] += 1;
                for later in pos + 1..K {
                    cur[later] = cur[pos];
                }
                break;
            }
        }
    }
}

/// A totally labeled `n`-simplex over a crossed structure.
#[derive(Debug, Clone)]
pub struct ColoredSimplex {
    pub structure: Structure,
    pub dim: usize,
    pub labels: LabelSet,
}

impl PartialEq for ColoredSimplex {
    /// Labels and dimension only; callers keep structures consistent.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.labels == other.labels
    }
}

impl ColoredSimplex {
    /// Validates completeness: every strict tuple of every arity carried by
    /// the level has exactly one in-range label, and no degenerate or
    /// out-of-range keys are present.
    pub fn new(structure: Structure, dim: usize, labels: LabelSet) -> Result<Self, ColoredError> {
        let check_keys = |keys: Vec<Vec<u8>>, stored: usize, want: usize| -> Result<(), ColoredError> {
            if stored != want {
                return Err(ColoredError::Missing(keys.into_iter().next().unwrap_or_default()));
            }
            Ok(())
        };
        for (t, &v) in &labels.g {
            if !strict(t) || t[1] as usize > dim {
                return Err(ColoredError::BadKey(t.to_vec()));
            }
            if v >= structure.g().order() {
                return Err(ColoredError::BadValue(v));
            }
        }
        for (t, &v) in &labels.h {
            if !strict(t) || t[2] as usize > dim {
                return Err(ColoredError::BadKey(t.to_vec()));
            }
            if v >= structure.h().order() {
                return Err(ColoredError::BadValue(v));
            }
        }
        for (t, &v) in &labels.l {
            if !strict(t) || t[3] as usize > dim {
                return Err(ColoredError::BadKey(t.to_vec()));
            }
            if v >= structure.l().order() {
                return Err(ColoredError::BadValue(v));
            }
        }
        if !labels.m.is_empty() && !structure.is_three() {
            return Err(ColoredError::UnexpectedM);
        }
        for (t, &v) in &labels.m {
            if !strict(t) || t[4] as usize > dim {
                return Err(ColoredError::BadKey(t.to_vec()));
            }
            if v >= structure.m().map(|m| m.order()).unwrap_or(1) {
                return Err(ColoredError::BadValue(v));
            }
        }
        // completeness by counting: strict tuples of each arity
        let missing = |arity: usize, have: usize, want: usize| have != want && arity > 0;
        let want_g = strict_tuples::<2>(dim).len();
        let want_h = strict_tuples::<3>(dim).len();
        let want_l = strict_tuples::<4>(dim).len();
        if missing(2, labels.g.len(), want_g) {
            for t in strict_tuples::<2>(dim) {
                if !labels.g.contains_key(&t) {
                    return Err(ColoredError::Missing(t.to_vec()));
                }
            }
        }
        if missing(3, labels.h.len(), want_h) {
            for t in strict_tuples::<3>(dim) {
                if !labels.h.contains_key(&t) {
                    return Err(ColoredError::Missing(t.to_vec()));
                }
            }
        }
        if missing(4, labels.l.len(), want_l) {
            for t in strict_tuples::<4>(dim) {
                if !labels.l.contains_key(&t) {
                    return Err(ColoredError::Missing(t.to_vec()));
                }
            }
        }
        if structure.is_three() {
            let want_m = strict_tuples::<5>(dim).len();
            if missing(5, labels.m.len(), want_m) {
                for t in strict_tuples::<5>(dim) {
                    if !labels.m.contains_key(&t) {
                        return Err(ColoredError::Missing(t.to_vec()));
                    }
                }
            }
        }
        let _ = check_keys;
        Ok(ColoredSimplex { structure, dim, labels })
    }

    /// The all-unit labeling of `[n]`, a simplex over every structure.
    pub fn unit(structure: Structure, dim: usize) -> Self {
        let mut labels = LabelSet::default();
        for t in strict_tuples::<2>(dim) {
            labels.g.insert(t, structure.g().identity());
        }
        for t in strict_tuples::<3>(dim) {
            labels.h.insert(t, structure.h().identity());
        }
        for t in strict_tuples::<4>(dim) {
            labels.l.insert(t, structure.l().identity());
        }
        if let Some(m) = structure.m() {
            for t in strict_tuples::<5>(dim) {
                labels.m.insert(t, m.identity());
            }
        }
        ColoredSimplex { structure, dim, labels }
    }
}

/// Checks every instance of conditions (a)-(d) over weakly increasing
/// tuples; the degeneracy normalizations hold structurally via the sparse
/// accessors. Empty report iff the labeling is a simplex of the colored
/// set.
pub fn check_colored(sx: &ColoredSimplex) -> CheckReport {
    let mut report = CheckReport::new(format!("colored {}-simplex", sx.dim));
    let st = &sx.structure;
    let labels = &sx.labels;
    let tuple_usize = |t: &[u8]| t.iter().map(|&v| v as usize).collect::<Vec<_>>();

    for t in weak_tuples::<3>(sx.dim) {
        match cond_a(st, t).check(st, labels) {
            Ok(true) => {}
            Ok(false) => report.record("cond.a", tuple_usize(&t)),
            Err(_) => report.record("cond.a.missing-label", tuple_usize(&t)),
        }
    }
    for t in weak_tuples::<4>(sx.dim) {
        match cond_b(st, labels, t).and_then(|eq| eq.check(st, labels)) {
            Ok(true) => {}
            Ok(false) => report.record("cond.b", tuple_usize(&t)),
            Err(_) => report.record("cond.b.missing-label", tuple_usize(&t)),
        }
    }
    for t in weak_tuples::<5>(sx.dim) {
        match cond_c(st, labels, t).and_then(|eq| eq.check(st, labels)) {
            Ok(true) => {}
            Ok(false) => report.record("cond.c", tuple_usize(&t)),
            Err(_) => report.record("cond.c.missing-label", tuple_usize(&t)),
        }
    }
    if st.is_three() {
        for t in weak_tuples::<6>(sx.dim) {
            match cond_d(st, labels, t).and_then(|eq| eq.check(st, labels)) {
                Ok(true) => {}
                Ok(false) => report.record("cond.d", tuple_usize(&t)),
                Err(_) => report.record("cond.d.missing-label", tuple_usize(&t)),
            }
        }
    }
    report
}

/// Reindexes a simplex along an operator `[m] -> [n]`: the new label at a
/// tuple is the old label at the image tuple, with repeats collapsing to
/// units through the weak accessors.
pub fn apply_operator(
    op: &SimplicialOperator,
    sx: &ColoredSimplex,
) -> Result<ColoredSimplex, ColoredError> {
    if op.target_dim() != sx.dim {
        return Err(ColoredError::DimMismatch(op.target_dim(), sx.dim));
    }
    let m = op.source_dim();
    let st = &sx.structure;
    let mut labels = LabelSet::default();
    let map = |t: &[u8]| -> Vec<u8> { t.iter().map(|&v| op.apply(v as usize) as u8).collect() };
    for t in strict_tuples::<2>(m) {
        let img = map(&t);
        let v = sx
            .labels
            .g_at(st, [img[0], img[1]])
            .ok_or_else(|| ColoredError::Missing(img.clone()))?;
        labels.g.insert(t, v);
    }
    for t in strict_tuples::<3>(m) {
        let img = map(&t);
        let v = sx
            .labels
            .h_at(st, [img[0], img[1], img[2]])
            .ok_or_else(|| ColoredError::Missing(img.clone()))?;
        labels.h.insert(t, v);
    }
    for t in strict_tuples::<4>(m) {
        let img = map(&t);
        let v = sx
            .labels
            .l_at(st, [img[0], img[1], img[2], img[3]])
            .ok_or_else(|| ColoredError::Missing(img.clone()))?;
        labels.l.insert(t, v);
    }
    if st.is_three() {
        for t in strict_tuples::<5>(m) {
            let img = map(&t);
            let v = sx
                .labels
                .m_at(st, [img[0], img[1], img[2], img[3], img[4]])
                .ok_or_else(|| ColoredError::Missing(img.clone()))?;
            labels.m.insert(t, v);
        }
    }
    Ok(ColoredSimplex { structure: st.clone(), dim: m, labels })
}
