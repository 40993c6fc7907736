//! Cocycle conditions as solvable factor equations.
//!
//! Every condition instance is an equation between two products of factors
//! in one of the groups G, H, L, M. A factor is either a fully evaluated
//! element or a (possibly twisted, possibly inverted, possibly
//! boundary-mapped) reference to a single label. Keeping bare labels
//! symbolic is what lets the horn filler isolate the one unknown label and
//! solve the group equation for it; everything composite (lifting values,
//! twist actors) is evaluated eagerly and so must already be present.

use thiserror::Error;

use crate::group::{Elem, GroupRef};

use super::colored::{LabelSet, Structure};

#[derive(Debug, Error)]
pub enum CondError {
    #[error("label {0:?} is required but missing")]
    MissingLabel(LabelKey),
    #[error("unknown label {0:?} does not occur in the equation")]
    UnknownNotPresent(LabelKey),
    #[error("unknown label {0:?} occurs more than once")]
    UnknownNotIsolated(LabelKey),
    #[error("cannot solve through a boundary map for {0:?}")]
    UnknownUnderBoundary(LabelKey),
    #[error("condition {0} does not apply at this level")]
    WrongLevel(&'static str),
}

/// A strictly increasing vertex tuple naming one stored label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKey {
    G([u8; 2]),
    H([u8; 3]),
    L([u8; 4]),
    M([u8; 5]),
}

/// Which stored action twists a factor.
#[derive(Debug, Clone, Copy)]
pub enum ActKind {
    GH,
    GL,
    GM,
    HL,
    HM,
    LM,
}

/// Which boundary map wraps a factor's core.
#[derive(Debug, Clone, Copy)]
pub enum HomKind {
    /// M -> L
    DmL,
    /// L -> H
    DlH,
    /// H -> G
    DhG,
}

#[derive(Debug, Clone, Copy)]
pub struct Twist {
    pub kind: ActKind,
    pub actor: Elem,
}

#[derive(Debug, Clone)]
pub enum Core {
    Known(Elem),
    Label(LabelKey),
}

/// One factor of a condition equation: `twists(hom(core)^{±1})`, with the
/// twists listed outermost first.
#[derive(Debug, Clone)]
pub struct Factor {
    pub twists: Vec<Twist>,
    pub hom: Option<HomKind>,
    pub inverted: bool,
    pub core: Core,
}

impl Factor {
    pub fn known(value: Elem) -> Self {
        Factor { twists: Vec::new(), hom: None, inverted: false, core: Core::Known(value) }
    }

    pub fn label(key: LabelKey) -> Self {
        Factor { twists: Vec::new(), hom: None, inverted: false, core: Core::Label(key) }
    }

    pub fn twisted(mut self, kind: ActKind, actor: Elem) -> Self {
        self.twists.insert(0, Twist { kind, actor });
        self
    }

    pub fn through(mut self, hom: HomKind) -> Self {
        self.hom = Some(hom);
        self
    }

    pub fn inverse(mut self) -> Self {
        self.inverted = !self.inverted;
        self
    }
}

/// Applies a stored action; panics on kinds a 2-crossed structure lacks,
/// which the condition builders never produce for that level.
fn act(st: &Structure, kind: ActKind, actor: Elem, x: Elem) -> Elem {
    match (st, kind) {
        (Structure::Two(w), ActKind::GH) => w.act_g_h.act(actor, x),
        (Structure::Two(w), ActKind::GL) => w.act_g_l.act(actor, x),
        (Structure::Two(w), ActKind::HL) => w.act_h_l.act(actor, x),
        (Structure::Three(t), ActKind::GH) => t.act_g_h.act(actor, x),
        (Structure::Three(t), ActKind::GL) => t.act_g_l.act(actor, x),
        (Structure::Three(t), ActKind::GM) => t.act_g_m.act(actor, x),
        (Structure::Three(t), ActKind::HL) => t.act_h_l.act(actor, x),
        (Structure::Three(t), ActKind::HM) => t.act_h_m.act(actor, x),
        (Structure::Three(t), ActKind::LM) => t.act_l_m.act(actor, x),
        (Structure::Two(_), k) => unreachable!("action {k:?} undefined at the 2-crossed level"),
    }
}

fn hom_apply(st: &Structure, kind: HomKind, x: Elem) -> Elem {
    match (st, kind) {
        (Structure::Two(w), HomKind::DlH) => w.d_lh.apply(x),
        (Structure::Two(w), HomKind::DhG) => w.d_hg.apply(x),
        (Structure::Three(t), HomKind::DmL) => t.d_ml.apply(x),
        (Structure::Three(t), HomKind::DlH) => t.d_lh.apply(x),
        (Structure::Three(t), HomKind::DhG) => t.d_hg.apply(x),
        (Structure::Two(_), HomKind::DmL) => {
            unreachable!("boundary M->L undefined at the 2-crossed level")
        }
    }
}

/// The group an action's result lives in, for inverting twists.
fn act_space(st: &Structure, kind: ActKind) -> GroupRef {
    match kind {
        ActKind::GH => st.h().clone(),
        ActKind::GL | ActKind::HL => st.l().clone(),
        ActKind::GM | ActKind::HM | ActKind::LM => {
            st.m().expect("M-valued action at the 2-crossed level").clone()
        }
    }
}

fn actor_group(st: &Structure, kind: ActKind) -> GroupRef {
    match kind {
        ActKind::GH | ActKind::GL | ActKind::GM => st.g().clone(),
        ActKind::HL | ActKind::HM => st.h().clone(),
        ActKind::LM => st.l().clone(),
    }
}

/// One condition instance: `lhs == rhs` as products in `group`.
#[derive(Debug, Clone)]
pub struct Equation {
    pub group: GroupRef,
    pub lhs: Vec<Factor>,
    pub rhs: Vec<Factor>,
}

impl Equation {
    fn eval_factor(
        &self,
        st: &Structure,
        labels: &LabelSet,
        f: &Factor,
    ) -> Result<Elem, CondError> {
        let mut v = match &f.core {
            Core::Known(v) => *v,
            Core::Label(key) => {
                labels.get_strict(st, key).ok_or(CondError::MissingLabel(*key))?
            }
        };
        if let Some(h) = f.hom {
            v = hom_apply(st, h, v);
        }
        if f.inverted {
            let space = match f.twists.last() {
                Some(t) => act_space(st, t.kind),
                None => self.group.clone(),
            };
            v = space.inv(v);
        }
        for t in f.twists.iter().rev() {
            v = act(st, t.kind, t.actor, v);
        }
        Ok(v)
    }

    fn eval_side(
        &self,
        st: &Structure,
        labels: &LabelSet,
        side: &[Factor],
    ) -> Result<Elem, CondError> {
        let mut acc = self.group.identity();
        for f in side {
            acc = self.group.mul(acc, self.eval_factor(st, labels, f)?);
        }
        Ok(acc)
    }

    /// Evaluates both sides; true iff they agree.
    pub fn check(&self, st: &Structure, labels: &LabelSet) -> Result<bool, CondError> {
        Ok(self.eval_side(st, labels, &self.lhs)? == self.eval_side(st, labels, &self.rhs)?)
    }

    /// Evaluates (lhs, rhs) as group elements.
    pub fn sides(&self, st: &Structure, labels: &LabelSet) -> Result<(Elem, Elem), CondError> {
        Ok((
            self.eval_side(st, labels, &self.lhs)?,
            self.eval_side(st, labels, &self.rhs)?,
        ))
    }

    /// Per-factor values of both sides, in order; for diagnostics.
    pub fn factor_values(
        &self,
        st: &Structure,
        labels: &LabelSet,
    ) -> Result<(Vec<Elem>, Vec<Elem>), CondError> {
        let eval = |side: &[Factor]| -> Result<Vec<Elem>, CondError> {
            side.iter().map(|f| self.eval_factor(st, labels, f)).collect()
        };
        Ok((eval(&self.lhs)?, eval(&self.rhs)?))
    }

    /// Every strict label key the equation mentions symbolically.
    pub fn label_keys(&self) -> Vec<LabelKey> {
        self.lhs
            .iter()
            .chain(self.rhs.iter())
            .filter_map(|f| match f.core {
                Core::Label(k) => Some(k),
                Core::Known(_) => None,
            })
            .collect()
    }

    /// Solves for the single occurrence of `unknown`, which must appear as a
    /// bare (twisted, possibly inverted) label factor, every other label
    /// being present. Group equations have unique solutions, so the result
    /// is the only value making the instance hold.
    pub fn solve(
        &self,
        st: &Structure,
        labels: &LabelSet,
        unknown: LabelKey,
    ) -> Result<Elem, CondError> {
        let occurrences = |side: &[Factor]| {
            side.iter()
                .enumerate()
                .filter(|(_, f)| matches!(f.core, Core::Label(k) if k == unknown))
                .map(|(i, _)| i)
                .collect::<Vec<_>>()
        };
        let in_lhs = occurrences(&self.lhs);
        let in_rhs = occurrences(&self.rhs);
        let (own_side, other_side, pos) = match (in_lhs.len(), in_rhs.len()) {
            (1, 0) => (&self.lhs, &self.rhs, in_lhs[0]),
            (0, 1) => (&self.rhs, &self.lhs, in_rhs[0]),
            (0, 0) => return Err(CondError::UnknownNotPresent(unknown)),
            _ => return Err(CondError::UnknownNotIsolated(unknown)),
        };
        let factor = &own_side[pos];
        if factor.hom.is_some() {
            return Err(CondError::UnknownUnderBoundary(unknown));
        }

        let g = &self.group;
        let mut prefix = g.identity();
        for f in &own_side[..pos] {
            prefix = g.mul(prefix, self.eval_factor(st, labels, f)?);
        }
        let mut suffix = g.identity();
        for f in &own_side[pos + 1..] {
            suffix = g.mul(suffix, self.eval_factor(st, labels, f)?);
        }
        let other = self.eval_side(st, labels, other_side)?;

        // prefix * F * suffix = other  =>  F = prefix^{-1} * other * suffix^{-1}
        let mut v = g.mul(g.mul(g.inv(prefix), other), g.inv(suffix));
        // peel the twists, outermost first
        for t in &factor.twists {
            let inv_actor = actor_group(st, t.kind).inv(t.actor);
            v = act(st, t.kind, inv_actor, v);
        }
        if factor.inverted {
            let space = match factor.twists.last() {
                Some(t) => act_space(st, t.kind),
                None => self.group.clone(),
            };
            v = space.inv(v);
        }
        Ok(v)
    }
}

/// Condition (a) at `i <= j <= k`: `g_ik = dh(h_ijk) g_jk g_ij`, in G.
pub fn cond_a(st: &Structure, t: [u8; 3]) -> Equation {
    let [i, j, k] = t;
    Equation {
        group: st.g().clone(),
        lhs: vec![glabel(st, [i, k])],
        rhs: vec![
            hlabel(st, [i, j, k]).through(HomKind::DhG),
            glabel(st, [j, k]),
            glabel(st, [i, j]),
        ],
    }
}

/// Condition (b) at `i <= j <= k <= p`:
/// `dl(l_ijkp) h_ikp ^{g_kp}h_ijk = h_ijp h_jkp`, in H.
pub fn cond_b(
    st: &Structure,
    labels: &LabelSet,
    t: [u8; 4],
) -> Result<Equation, CondError> {
    let [i, j, k, p] = t;
    let g_kp = need_g(st, labels, [k, p])?;
    Ok(Equation {
        group: st.h().clone(),
        lhs: vec![
            llabel(st, [i, j, k, p]).through(HomKind::DlH),
            hlabel(st, [i, k, p]),
            hlabel(st, [i, j, k]).twisted(ActKind::GH, g_kp),
        ],
        rhs: vec![hlabel(st, [i, j, p]), hlabel(st, [j, k, p])],
    })
}

/// Condition (c) at `i <= j <= k <= p <= q`, in L. At the 3-crossed level
/// the left side is prefixed with `dm(m_ijkpq)`:
/// `[dm(m)] ^{h_ijq}l_jkpq  l_ijpq  ^{h_ipq}(^{g_pq}l_ijkp)
///    = l_ijkq  ^{h_ikq}{h_kpq, ^{g_pq g_kp}h_ijk}^{-1}  l_ikpq`.
/// The transported `h_ijk` rides the edge path k -> p -> q.
pub fn cond_c(
    st: &Structure,
    labels: &LabelSet,
    t: [u8; 5],
) -> Result<Equation, CondError> {
    let [i, j, k, p, q] = t;
    let h_ijq = need_h(st, labels, [i, j, q])?;
    let h_ipq = need_h(st, labels, [i, p, q])?;
    let h_ikq = need_h(st, labels, [i, k, q])?;
    let g_pq = need_g(st, labels, [p, q])?;
    let g_kp = need_g(st, labels, [k, p])?;
    let h_kpq = need_h(st, labels, [k, p, q])?;
    let h_ijk = need_h(st, labels, [i, j, k])?;

    let peiffer_val = match st {
        Structure::Two(w) => w.peiffer.get(h_kpq, w.act_g_h.act(w.g.mul(g_pq, g_kp), h_ijk)),
        Structure::Three(x) => {
            x.pf(h_kpq, x.a_gh(x.g.mul(g_pq, g_kp), h_ijk))
        }
    };

    let mut lhs = Vec::new();
    if let Structure::Three(_) = st {
        lhs.push(mlabel(st, [i, j, k, p, q]).through(HomKind::DmL));
    }
    lhs.push(llabel(st, [j, k, p, q]).twisted(ActKind::HL, h_ijq));
    lhs.push(llabel(st, [i, j, p, q]));
    lhs.push(
        llabel(st, [i, j, k, p])
            .twisted(ActKind::GL, g_pq)
            .twisted(ActKind::HL, h_ipq),
    );

    let rhs = vec![
        llabel(st, [i, j, k, q]),
        Factor::known(peiffer_val).inverse().twisted(ActKind::HL, h_ikq),
        llabel(st, [i, k, p, q]),
    ];

    Ok(Equation { group: st.l().clone(), lhs, rhs })
}

// Helpers that turn weak tuples into symbolic labels or known units.

pub(crate) fn glabel(st: &Structure, t: [u8; 2]) -> Factor {
    if t[0] == t[1] {
        Factor::known(st.g().identity())
    } else {
        Factor::label(LabelKey::G(t))
    }
}

pub(crate) fn hlabel(st: &Structure, t: [u8; 3]) -> Factor {
    if t.windows(2).any(|w| w[0] == w[1]) {
        Factor::known(st.h().identity())
    } else {
        Factor::label(LabelKey::H(t))
    }
}

pub(crate) fn llabel(st: &Structure, t: [u8; 4]) -> Factor {
    if t.windows(2).any(|w| w[0] == w[1]) {
        Factor::known(st.l().identity())
    } else {
        Factor::label(LabelKey::L(t))
    }
}

pub(crate) fn mlabel(st: &Structure, t: [u8; 5]) -> Factor {
    if t.windows(2).any(|w| w[0] == w[1]) {
        Factor::known(st.m().expect("m labels exist only at the 3-crossed level").identity())
    } else {
        Factor::label(LabelKey::M(t))
    }
}

pub(crate) fn need_g(
    st: &Structure,
    labels: &LabelSet,
    t: [u8; 2],
) -> Result<Elem, CondError> {
    labels.g_at(st, t).ok_or(CondError::MissingLabel(LabelKey::G(t)))
}

pub(crate) fn need_h(
    st: &Structure,
    labels: &LabelSet,
    t: [u8; 3],
) -> Result<Elem, CondError> {
    labels.h_at(st, t).ok_or(CondError::MissingLabel(LabelKey::H(t)))
}

pub(crate) fn need_l(
    st: &Structure,
    labels: &LabelSet,
    t: [u8; 4],
) -> Result<Elem, CondError> {
    labels.l_at(st, t).ok_or(CondError::MissingLabel(LabelKey::L(t)))
}
