//! Enumeration oracles for colored simplices and horns.
//!
//! A [`LabelSpace`] lists the label slots of a simplex (or of an inner
//! horn, which simply lacks the tuples containing the complement of the
//! missing vertex) in a dependency order, together with the condition
//! instances that become checkable as each slot binds. A depth-first walk
//! with per-slot pruning then enumerates exactly the valid labelings:
//!
//! - rejection mode leaves every label free, the brute-force oracle;
//! - structured mode frees only the spine edges g_{i,i+1} and the
//!   higher labels, deriving every longer edge from condition (a), which
//!   shrinks the walk without changing the result set (validated against
//!   rejection mode wherever both run).
//!
//! The same machinery drives seeded random sampling: free slots draw their
//! candidate order from the RNG and the walk backtracks on dead ends, so a
//! sample is always a valid labeling.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::Elem;

use super::colored::{strict_tuples, ColoredSimplex, LabelSet, Structure};
use super::cond::{cond_a, cond_b, cond_c, Equation, LabelKey};
use super::cond_d::cond_d;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    /// Every label slot is free; the brute-force oracle.
    Rejection,
    /// Long edges are derived from condition (a) at j = k-1 (or the first
    /// available triple inside a horn); everything else is free.
    Structured,
}

/// What the space describes: a full simplex or an inner horn missing the
/// j-th face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Simplex,
    Horn { j: usize },
}

#[derive(Debug, Clone)]
enum Slot {
    Free { key: LabelKey, domain: usize },
    /// g on the edge, derived by solving condition (a) at the stored triple.
    DerivedG { edge: [u8; 2], via: [u8; 3] },
}

#[derive(Debug, Clone, Copy)]
enum Instance {
    A([u8; 3]),
    B([u8; 4]),
    C([u8; 5]),
    D([u8; 6]),
}

/// The slot schedule for one enumeration problem.
pub struct LabelSpace {
    pub structure: Structure,
    pub dim: usize,
    pub kind: SpaceKind,
    slots: Vec<Slot>,
    /// instances_at[s] holds the instances checkable once slot s binds.
    instances_at: Vec<Vec<Instance>>,
}

/// Result of an exhaustive walk.
pub struct EnumOutcome {
    pub labelings: Vec<LabelSet>,
    /// False when the budget stopped the walk early.
    pub complete: bool,
    pub visited: u64,
}

impl LabelSpace {
    /// True iff the tuple is present: inside a horn, the tuples containing
    /// every vertex except (at most) the missing-face index are exactly the
    /// ones that lie in no remaining face.
    fn present(&self, tuple: &[u8]) -> bool {
        match self.kind {
            SpaceKind::Simplex => true,
            SpaceKind::Horn { j } => {
                !(0..=self.dim).all(|v| v == j || tuple.contains(&(v as u8)))
            }
        }
    }

    pub fn new(structure: Structure, dim: usize, kind: SpaceKind, mode: EnumMode) -> Self {
        let mut space = LabelSpace {
            structure,
            dim,
            kind,
            slots: Vec::new(),
            instances_at: Vec::new(),
        };
        space.build_slots(mode);
        space.schedule_instances();
        space
    }

    fn build_slots(&mut self, mode: EnumMode) {
        let n = self.dim;
        let st = self.structure.clone();
        let mut slots: Vec<Slot> = Vec::new();

        let g_order = st.g().order();
        let all_edges: Vec<[u8; 2]> = strict_tuples::<2>(n);
        match mode {
            EnumMode::Rejection => {
                for e in all_edges.iter().filter(|e| self.present(&e[..])) {
                    slots.push(Slot::Free { key: LabelKey::G(*e), domain: g_order });
                }
                for t in strict_tuples::<3>(n) {
                    if self.present(&t) {
                        slots.push(Slot::Free { key: LabelKey::H(t), domain: st.h().order() });
                    }
                }
            }
            EnumMode::Structured => {
                use std::collections::HashSet;
                let mut scheduled_edges: HashSet<[u8; 2]> = HashSet::new();
                let mut pushed_triples: HashSet<[u8; 3]> = HashSet::new();
                // spine first
                for e in all_edges.iter().filter(|e| e[1] == e[0] + 1 && self.present(&e[..])) {
                    slots.push(Slot::Free { key: LabelKey::G(*e), domain: g_order });
                    scheduled_edges.insert(*e);
                }
                let mut pending: Vec<[u8; 2]> = all_edges
                    .iter()
                    .filter(|e| e[1] > e[0] + 1 && self.present(&e[..]))
                    .copied()
                    .collect();
                pending.sort_by_key(|e| (e[1] - e[0], e[0]));
                // Triangles in lex order; after each h binds, derive every
                // pending long edge that now has a usable condition-(a)
                // instance (triple pushed, both sub-edges scheduled).
                for t in strict_tuples::<3>(n) {
                    if self.present(&t) {
                        slots.push(Slot::Free { key: LabelKey::H(t), domain: st.h().order() });
                        pushed_triples.insert(t);
                    }
                    loop {
                        let mut progressed = false;
                        pending.retain(|e| {
                            let (a, c) = (e[0], e[1]);
                            let via = (a + 1..c).rev().map(|b| [a, b, c]).find(|cand| {
                                pushed_triples.contains(cand)
                                    && scheduled_edges.contains(&[cand[0], cand[1]])
                                    && scheduled_edges.contains(&[cand[1], cand[2]])
                            });
                            match via {
                                Some(v) => {
                                    slots.push(Slot::DerivedG { edge: *e, via: v });
                                    scheduled_edges.insert(*e);
                                    progressed = true;
                                    false
                                }
                                None => true,
                            }
                        });
                        if !progressed {
                            break;
                        }
                    }
                }
                debug_assert!(pending.is_empty(), "underivable edges: {pending:?}");
            }
        }
        for t in strict_tuples::<4>(n) {
            if self.present(&t) {
                slots.push(Slot::Free { key: LabelKey::L(t), domain: st.l().order() });
            }
        }
        if st.is_three() {
            for t in strict_tuples::<5>(n) {
                if self.present(&t) {
                    slots.push(Slot::Free { key: LabelKey::M(t), domain: st.m().unwrap().order() });
                }
            }
        }
        self.slots = slots;
    }

    fn slot_key(slot: &Slot) -> LabelKey {
        match slot {
            Slot::Free { key, .. } => *key,
            Slot::DerivedG { edge, .. } => LabelKey::G(*edge),
        }
    }

    /// Attaches every present condition instance to the slot at which its
    /// last referenced label binds. References are taken as all strict
    /// sub-tuples, a superset of what the condition reads, which is safe
    /// because it only delays the check.
    fn schedule_instances(&mut self) {
        use std::collections::HashMap;
        let mut position: HashMap<LabelKey, usize> = HashMap::new();
        for (idx, slot) in self.slots.iter().enumerate() {
            position.insert(Self::slot_key(slot), idx);
        }
        let n = self.dim;
        self.instances_at = vec![Vec::new(); self.slots.len()];

        let mut attach = |refs: Vec<LabelKey>, inst: Instance, instances_at: &mut Vec<Vec<Instance>>| {
            let mut last = None;
            for r in refs {
                match position.get(&r) {
                    Some(&p) => last = Some(last.map_or(p, |l: usize| l.max(p))),
                    None => return, // references an absent label: not in scope
                }
            }
            if let Some(p) = last {
                instances_at[p].push(inst);
            }
        };

        let sub_keys = |tuple: &[u8]| -> Vec<LabelKey> {
            let mut keys = Vec::new();
            let k = tuple.len();
            for mask in 1u32..(1 << k) {
                let ones = mask.count_ones() as usize;
                if !(2..=5).contains(&ones) {
                    continue;
                }
                let sub: Vec<u8> = (0..k).filter(|&b| mask >> b & 1 == 1).map(|b| tuple[b]).collect();
                match ones {
                    2 => keys.push(LabelKey::G([sub[0], sub[1]])),
                    3 => keys.push(LabelKey::H([sub[0], sub[1], sub[2]])),
                    4 => keys.push(LabelKey::L([sub[0], sub[1], sub[2], sub[3]])),
                    5 if self.structure.is_three() => {
                        keys.push(LabelKey::M([sub[0], sub[1], sub[2], sub[3], sub[4]]))
                    }
                    _ => {}
                }
            }
            keys.sort_unstable();
            keys.dedup();
            keys
        };

        for t in strict_tuples::<3>(n) {
            attach(sub_keys(&t), Instance::A(t), &mut self.instances_at);
        }
        for t in strict_tuples::<4>(n) {
            attach(sub_keys(&t), Instance::B(t), &mut self.instances_at);
        }
        for t in strict_tuples::<5>(n) {
            attach(sub_keys(&t), Instance::C(t), &mut self.instances_at);
        }
        if self.structure.is_three() {
            for t in strict_tuples::<6>(n) {
                attach(sub_keys(&t), Instance::D(t), &mut self.instances_at);
            }
        }
    }

    fn instance_holds(&self, labels: &LabelSet, inst: &Instance) -> bool {
        let st = &self.structure;
        let eq: Result<Equation, _> = match inst {
            Instance::A(t) => Ok(cond_a(st, *t)),
            Instance::B(t) => cond_b(st, labels, *t),
            Instance::C(t) => cond_c(st, labels, *t),
            Instance::D(t) => cond_d(st, labels, *t),
        };
        match eq {
            Ok(eq) => eq.check(st, labels).unwrap_or(false),
            Err(_) => false,
        }
    }

    fn derive_g(&self, labels: &LabelSet, edge: [u8; 2], via: [u8; 3]) -> Option<Elem> {
        let eq = cond_a(&self.structure, via);
        eq.solve(&self.structure, labels, LabelKey::G(edge)).ok()
    }

    /// Exhaustive depth-first walk; `budget` caps the number of visited
    /// leaves (complete labelings).
    pub fn enumerate(&self, budget: u64) -> EnumOutcome {
        let mut labelings = Vec::new();
        let mut visited = 0u64;
        let complete = self.dfs(0, &mut LabelSet::default(), None, &mut |ls| {
            visited += 1;
            labelings.push(ls.clone());
            visited < budget
        });
        EnumOutcome { labelings, complete, visited }
    }

    /// Walks depth-first from slot `at`; candidate orders come from `rng`
    /// when present. The callback returns false to stop the whole walk.
    fn dfs(
        &self,
        at: usize,
        labels: &mut LabelSet,
        mut rng: Option<&mut ChaCha8Rng>,
        emit: &mut dyn FnMut(&LabelSet) -> bool,
    ) -> bool {
        if at == self.slots.len() {
            return emit(labels);
        }
        match &self.slots[at] {
            Slot::Free { key, domain } => {
                let mut values: Vec<Elem> = (0..*domain).collect();
                if let Some(r) = rng.as_deref_mut() {
                    values.shuffle(r);
                }
                for v in values {
                    labels.insert(*key, v);
                    if self.instances_at[at].iter().all(|i| self.instance_holds(labels, i)) {
                        if !self.dfs(at + 1, labels, rng.as_deref_mut(), emit) {
                            return false;
                        }
                    }
                }
                self.remove(labels, key);
                true
            }
            Slot::DerivedG { edge, via } => {
                let Some(v) = self.derive_g(labels, *edge, *via) else {
                    return true;
                };
                let key = LabelKey::G(*edge);
                labels.insert(key, v);
                let ok = if self.instances_at[at].iter().all(|i| self.instance_holds(labels, i))
                {
                    self.dfs(at + 1, labels, rng, emit)
                } else {
                    true
                };
                self.remove(labels, &key);
                ok
            }
        }
    }

    fn remove(&self, labels: &mut LabelSet, key: &LabelKey) {
        match key {
            LabelKey::G(t) => {
                labels.g.remove(t);
            }
            LabelKey::H(t) => {
                labels.h.remove(t);
            }
            LabelKey::L(t) => {
                labels.l.remove(t);
            }
            LabelKey::M(t) => {
                labels.m.remove(t);
            }
        }
    }

    /// Draws one valid labeling with randomized candidate order; None only
    /// when the space is empty.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Option<LabelSet> {
        let mut out = None;
        self.dfs(0, &mut LabelSet::default(), Some(rng), &mut |ls| {
            out = Some(ls.clone());
            false
        });
        out
    }

    /// Deterministic sampling stream from a seed.
    pub fn sample_many(&self, seed: u64, count: usize) -> Vec<LabelSet> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).filter_map(|_| self.sample(&mut rng)).collect()
    }
}

/// Enumerates every colored `n`-simplex over the structure; the outcome is
/// flagged partial when `budget` leaves were emitted before exhaustion.
pub fn enumerate_simplices(
    structure: &Structure,
    n: usize,
    mode: EnumMode,
    budget: u64,
) -> EnumOutcome {
    LabelSpace::new(structure.clone(), n, SpaceKind::Simplex, mode).enumerate(budget)
}

/// Exact number of colored `n`-simplices (structured enumeration).
pub fn count_colorings(structure: &Structure, n: usize, budget: u64) -> Option<u64> {
    let out = enumerate_simplices(structure, n, EnumMode::Structured, budget);
    out.complete.then_some(out.labelings.len() as u64)
}

/// Wraps enumerated labelings as colored simplices.
pub fn outcome_simplices(structure: &Structure, n: usize, out: &EnumOutcome) -> Vec<ColoredSimplex> {
    out.labelings
        .iter()
        .map(|ls| ColoredSimplex {
            structure: structure.clone(),
            dim: n,
            labels: ls.clone(),
        })
        .collect()
}
