//! Finite groups as Cayley tables, plus homomorphisms, actions by
//! automorphisms, and total lifting tables.
//!
//! Elements are dense indices `0..order`; every map is a total index table.
//! Exhaustive verification is the core workload, so tables beat formulas:
//! every scan is a branch-free lookup walk.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use thiserror::Error;

use crate::report::CheckReport;

/// A group element, as a dense index into its group's tables.
pub type Elem = usize;

/// Associativity is checked exhaustively up to this order, sampled above.
pub const EAGER_ASSOC_BOUND: usize = 64;

/// Largest group order the constructors will build.
pub const MAX_ORDER: usize = 65_536;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("group order {0} exceeds the configured bound {MAX_ORDER}")]
    TooLarge(usize),
    #[error("Cayley table is not {0}x{0}")]
    BadShape(usize),
    #[error("table entry {value} at ({row},{col}) is out of range")]
    BadEntry { row: usize, col: usize, value: usize },
    #[error("table is not a Latin square: {0} repeats in {1} {2}")]
    NotLatin(usize, &'static str, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("symmetric group degree {0} exceeds 5")]
    DegreeTooLarge(usize),
    #[error("permutation entry out of range for degree {0}")]
    BadPermutation(usize),
    #[error("map has {got} entries, expected {want}")]
    BadMapLength { got: usize, want: usize },
    #[error("map value {0} is out of range for the target group")]
    BadMapValue(usize),
    #[error("homomorphism law fails: f({0}*{1}) != f({0})*f({1})")]
    NotHomomorphism(usize, usize),
    #[error("action law fails at actor {0}")]
    NotAction(usize),
    #[error("lifting table has wrong shape")]
    BadLiftingShape,
    #[error("structures refer to different groups ({0})")]
    GroupMismatch(&'static str),
}

/// A finite group given by an indexed Cayley table.
///
/// `table` is stored row-major: `table[a * order + b]` is the product `a*b`.
/// The constructor validates the Latin-square, identity, inverse and
/// associativity invariants; associativity is exhaustive up to
/// [`EAGER_ASSOC_BOUND`] and sampled deterministically above it.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
}

impl PartialEq for FiniteGroup {
    /// Structural equality: same order and same multiplication table.
    /// The name is a label and does not participate.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates and wraps a Cayley table.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadShape(order));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::BadEntry { row: r, col: c, value: v });
                }
                table.push(v);
            }
        }
        Self::from_flat_table(name, order, table)
    }

    fn from_flat_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        // Latin square: each row and column is a permutation of 0..order.
        for r in 0..order {
            let mut seen = vec![false; order];
            for c in 0..order {
                let v = table[r * order + c];
                if seen[v] {
                    return Err(GroupError::NotLatin(v, "row", r));
                }
                seen[v] = true;
            }
        }
        for c in 0..order {
            let mut seen = vec![false; order];
            for r in 0..order {
                let v = table[r * order + c];
                if seen[v] {
                    return Err(GroupError::NotLatin(v, "column", c));
                }
                seen[v] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x)
            })
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = vec![usize::MAX; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x * order + y] == identity && table[y * order + x] == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inverse[x] = inv;
        }

        let check_triple = |a: usize, b: usize, c: usize| -> bool {
            table[table[a * order + b] * order + c] == table[a * order + table[b * order + c]]
        };
        if order <= EAGER_ASSOC_BOUND {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check_triple(a, b, c) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            // Deterministic stride sampling; a safety valve, not a proof.
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..200_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 40) as usize % order;
                let b = (state >> 20) as usize % order;
                let c = state as usize % order;
                if !check_triple(a, b, c) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }

        Ok(FiniteGroup { name: name.into(), order, table, identity, inverse })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup {
            name: "1".into(),
            order: 1,
            table: vec![0],
            identity: 0,
            inverse: vec![0],
        }
    }

    /// The cyclic group Z_n with element `i` the residue `i`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b) % n);
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup { name: format!("Z{n}"), order: n, table, identity: 0, inverse })
    }

    /// The dihedral group of order 2n. Element `f*n + k` is the word
    /// r^k s^f, multiplied by r^{k1} s^{f1} * r^{k2} s^{f2} =
    /// r^{k1 + (-1)^{f1} k2} s^{f1+f2}.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let order = 2 * n;
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let idx = |k: usize, f: usize| f * n + k;
        let mut table = vec![0; order * order];
        for f1 in 0..2usize {
            for k1 in 0..n {
                for f2 in 0..2usize {
                    for k2 in 0..n {
                        let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2 % n) % n };
                        table[idx(k1, f1) * order + idx(k2, f2)] = idx(k, (f1 + f2) % 2);
                    }
                }
            }
        }
        Self::from_flat_table(format!("D{n}"), order, table)
    }

    /// The symmetric group on n letters, n <= 5, with permutations indexed
    /// lexicographically. Products compose left-to-right: (p*q)(x) = p(q(x)).
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if n > 5 {
            return Err(GroupError::DegreeTooLarge(n));
        }
        let perms = permutations_lex(n);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let order = perms.len();
        let mut table = vec![0; order * order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composite: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[i * order + j] = index[&composite];
            }
        }
        Self::from_flat_table(format!("S{n}"), order, table)
    }

    /// Componentwise product A x B, indexed row-major with the first factor
    /// varying slowest: `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self, GroupError> {
        let order = a.order.checked_mul(b.order).ok_or(GroupError::TooLarge(usize::MAX))?;
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let idx = |x: Elem, y: Elem| x * b.order + y;
        let mut table = vec![0; order * order];
        for a1 in 0..a.order {
            for b1 in 0..b.order {
                for a2 in 0..a.order {
                    for b2 in 0..b.order {
                        table[idx(a1, b1) * order + idx(a2, b2)] =
                            idx(a.mul(a1, a2), b.mul(b1, b2));
                    }
                }
            }
        }
        let identity = idx(a.identity, b.identity);
        let inverse =
            (0..order).map(|x| idx(a.inv(x / b.order), b.inv(x % b.order))).collect();
        Ok(FiniteGroup {
            name: format!("{}x{}", a.name, b.name),
            order,
            table,
            identity,
            inverse,
        })
    }

    /// Closure of a set of permutations of `0..degree`, each given in cycle
    /// notation. Elements are indexed in BFS discovery order starting from
    /// the identity, so the numbering is deterministic for fixed input.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generator_cycles: &[Vec<Vec<usize>>],
    ) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut gens = Vec::new();
        for cycles in generator_cycles {
            let mut perm: Vec<usize> = (0..degree).collect();
            for cycle in cycles {
                for &v in cycle {
                    if v >= degree {
                        return Err(GroupError::BadPermutation(degree));
                    }
                }
                for w in 0..cycle.len() {
                    perm[cycle[w]] = cycle[(w + 1) % cycle.len()];
                }
            }
            // A cycle list with overlapping cycles can fail to be a bijection.
            let mut seen = vec![false; degree];
            for &v in &perm {
                if seen[v] {
                    return Err(GroupError::BadPermutation(degree));
                }
                seen[v] = true;
            }
            gens.push(perm);
        }

        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut frontier = 0;
        while frontier < elems.len() {
            let cur = elems[frontier].clone();
            for g in &gens {
                let next: Vec<usize> = (0..degree).map(|x| cur[g[x]]).collect();
                if !index.contains_key(&next) {
                    if elems.len() >= MAX_ORDER {
                        return Err(GroupError::TooLarge(elems.len() + 1));
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            frontier += 1;
        }

        let order = elems.len();
        let mut table = vec![0; order * order];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let composite: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
                table[i * order + j] = index[&composite];
            }
        }
        Self::from_flat_table(name, order, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    /// a x a^{-1}
    #[inline]
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(a, x), self.inv(a))
    }

    /// a b a^{-1} b^{-1}
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.conj(a, b), self.inv(b))
    }

    /// Product of a slice of elements, left to right; empty product is e.
    pub fn prod(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The Cayley table as nested rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|r| self.table[r * self.order..(r + 1) * self.order].to_vec())
            .collect()
    }
}

/// Shared-ownership handle used by every structure built over groups.
pub type GroupRef = Arc<FiniteGroup>;

/// True when both handles denote the same group, by pointer or by table.
pub fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A total map between two finite groups, as an index array.
///
/// Construction checks totality only; [`check_hom`] verifies the
/// homomorphism laws exhaustively and [`GroupHom::verified`] is the
/// rejecting form.
#[derive(Debug, Clone)]
pub struct GroupHom {
    pub source: GroupRef,
    pub target: GroupRef,
    map: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<Elem>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::BadMapLength { got: map.len(), want: source.order() });
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
            return Err(GroupError::BadMapValue(bad));
        }
        Ok(GroupHom { source, target, map })
    }

    /// Builds and verifies in one step, rejecting non-homomorphisms.
    pub fn verified(
        source: GroupRef,
        target: GroupRef,
        map: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        let hom = Self::new(source, target, map)?;
        match check_hom(&hom).first() {
            None => Ok(hom),
            Some(v) => Err(GroupError::NotHomomorphism(v.witness[0], *v.witness.get(1).unwrap_or(&0))),
        }
    }

    pub fn from_fn(
        source: GroupRef,
        target: GroupRef,
        f: impl Fn(Elem) -> Elem,
    ) -> Result<Self, GroupError> {
        let map = source.elements().map(f).collect();
        Self::new(source, target, map)
    }

    /// The identity homomorphism.
    pub fn identity(group: GroupRef) -> Self {
        let map = group.elements().collect();
        GroupHom { source: group.clone(), target: group, map }
    }

    /// The constant map onto the target's identity.
    pub fn zero(source: GroupRef, target: GroupRef) -> Self {
        let map = vec![target.identity(); source.order()];
        GroupHom { source, target, map }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    /// g after f; requires the middle groups to agree.
    pub fn compose(g: &GroupHom, f: &GroupHom) -> Result<GroupHom, GroupError> {
        if !same_group(&f.target, &g.source) {
            return Err(GroupError::GroupMismatch("hom composition"));
        }
        let map = f.map.iter().map(|&x| g.apply(x)).collect();
        GroupHom::new(f.source.clone(), g.target.clone(), map)
    }

    pub fn is_valid(&self) -> bool {
        check_hom(self).ok()
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.source, &other.source)
            && same_group(&self.target, &other.target)
            && self.map == other.map
    }
}

/// Exhaustively checks the homomorphism laws for `f`, reporting every
/// violated identity with its witness pair.
pub fn check_hom(f: &GroupHom) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "hom {} -> {}",
        f.source.name(),
        f.target.name()
    ));
    if f.apply(f.source.identity()) != f.target.identity() {
        report.record("hom.identity", vec![f.source.identity()]);
    }
    for x in f.source.elements() {
        for y in f.source.elements() {
            if f.apply(f.source.mul(x, y)) != f.target.mul(f.apply(x), f.apply(y)) {
                report.record("hom.compat", vec![x, y]);
            }
        }
    }
    report
}

/// A left action of `actor` on `space` by automorphisms, as a total table.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub actor: GroupRef,
    pub space: GroupRef,
    table: Vec<Elem>,
}

impl GroupAction {
    pub fn new(actor: GroupRef, space: GroupRef, table: Vec<Elem>) -> Result<Self, GroupError> {
        if table.len() != actor.order() * space.order() {
            return Err(GroupError::BadMapLength {
                got: table.len(),
                want: actor.order() * space.order(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= space.order()) {
            return Err(GroupError::BadMapValue(bad));
        }
        Ok(GroupAction { actor, space, table })
    }

    pub fn verified(
        actor: GroupRef,
        space: GroupRef,
        table: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        let action = Self::new(actor, space, table)?;
        match check_action(&action).first() {
            None => Ok(action),
            Some(v) => Err(GroupError::NotAction(v.witness[0])),
        }
    }

    pub fn from_fn(
        actor: GroupRef,
        space: GroupRef,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self, GroupError> {
        let mut table = Vec::with_capacity(actor.order() * space.order());
        for a in actor.elements() {
            for x in space.elements() {
                table.push(f(a, x));
            }
        }
        Self::new(actor, space, table)
    }

    /// The trivial action: every actor fixes every point.
    pub fn trivial(actor: GroupRef, space: GroupRef) -> Self {
        let table = (0..actor.order()).flat_map(|_| space.elements()).collect();
        GroupAction { actor, space, table }
    }

    #[inline]
    pub fn act(&self, a: Elem, x: Elem) -> Elem {
        self.table[a * self.space.order() + x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn is_valid(&self) -> bool {
        check_action(self).ok()
    }
}

impl PartialEq for GroupAction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.actor, &other.actor)
            && same_group(&self.space, &other.space)
            && self.table == other.table
    }
}

/// The conjugation action of a group on itself: a . x = a x a^{-1}.
pub fn conjugation_action(group: &GroupRef) -> GroupAction {
    let table = group
        .elements()
        .flat_map(|a| group.elements().map(move |x| group.conj(a, x)))
        .collect();
    GroupAction { actor: group.clone(), space: group.clone(), table }
}

/// Exhaustively checks the action laws: each actor acts as an automorphism,
/// the identity acts trivially, and actions compose, (ab).x = a.(b.x).
pub fn check_action(action: &GroupAction) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "action {} on {}",
        action.actor.name(),
        action.space.name()
    ));
    let actor = &action.actor;
    let space = &action.space;
    for a in actor.elements() {
        let mut seen = vec![false; space.order()];
        for x in space.elements() {
            let ax = action.act(a, x);
            if seen[ax] {
                report.record("action.bijective", vec![a, x]);
            }
            seen[ax] = true;
        }
        for x in space.elements() {
            for y in space.elements() {
                if action.act(a, space.mul(x, y)) != space.mul(action.act(a, x), action.act(a, y))
                {
                    report.record("action.multiplicative", vec![a, x, y]);
                }
            }
        }
    }
    for x in space.elements() {
        if action.act(actor.identity(), x) != x {
            report.record("action.identity", vec![actor.identity(), x]);
        }
    }
    for a in actor.elements() {
        for b in actor.elements() {
            for x in space.elements() {
                if action.act(actor.mul(a, b), x) != action.act(a, action.act(b, x)) {
                    report.record("action.compose", vec![a, b, x]);
                }
            }
        }
    }
    report
}

/// A total two-argument lifting table A x B -> T.
#[derive(Debug, Clone, PartialEq)]
pub struct Lifting2 {
    pub a: GroupRef,
    pub b: GroupRef,
    pub target: GroupRef,
    table: Vec<Elem>,
}

impl Lifting2 {
    pub fn new(a: GroupRef, b: GroupRef, target: GroupRef, table: Vec<Elem>) -> Result<Self, GroupError> {
        if table.len() != a.order() * b.order() {
            return Err(GroupError::BadLiftingShape);
        }
        if table.iter().any(|&v| v >= target.order()) {
            return Err(GroupError::BadLiftingShape);
        }
        Ok(Lifting2 { a, b, target, table })
    }

    pub fn from_fn(
        a: GroupRef,
        b: GroupRef,
        target: GroupRef,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self, GroupError> {
        let mut table = Vec::with_capacity(a.order() * b.order());
        for x in a.elements() {
            for y in b.elements() {
                table.push(f(x, y));
            }
        }
        Self::new(a, b, target, table)
    }

    /// The lifting that is constantly the target's unit.
    pub fn constant_unit(a: GroupRef, b: GroupRef, target: GroupRef) -> Self {
        let table = vec![target.identity(); a.order() * b.order()];
        Lifting2 { a, b, target, table }
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.b.order() + y]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// Copy with one entry replaced; used by mutation tests and search.
    pub fn with_entry(&self, x: Elem, y: Elem, value: Elem) -> Self {
        let mut table = self.table.clone();
        table[x * self.b.order() + y] = value;
        Lifting2 { a: self.a.clone(), b: self.b.clone(), target: self.target.clone(), table }
    }
}

/// A total three-argument lifting table A x B x C -> T.
#[derive(Debug, Clone, PartialEq)]
pub struct Lifting3 {
    pub a: GroupRef,
    pub b: GroupRef,
    pub c: GroupRef,
    pub target: GroupRef,
    table: Vec<Elem>,
}

impl Lifting3 {
    pub fn new(
        a: GroupRef,
        b: GroupRef,
        c: GroupRef,
        target: GroupRef,
        table: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        if table.len() != a.order() * b.order() * c.order() {
            return Err(GroupError::BadLiftingShape);
        }
        if table.iter().any(|&v| v >= target.order()) {
            return Err(GroupError::BadLiftingShape);
        }
        Ok(Lifting3 { a, b, c, target, table })
    }

    pub fn from_fn(
        a: GroupRef,
        b: GroupRef,
        c: GroupRef,
        target: GroupRef,
        f: impl Fn(Elem, Elem, Elem) -> Elem,
    ) -> Result<Self, GroupError> {
        let mut table = Vec::with_capacity(a.order() * b.order() * c.order());
        for x in a.elements() {
            for y in b.elements() {
                for z in c.elements() {
                    table.push(f(x, y, z));
                }
            }
        }
        Self::new(a, b, c, target, table)
    }

    pub fn constant_unit(a: GroupRef, b: GroupRef, c: GroupRef, target: GroupRef) -> Self {
        let table = vec![target.identity(); a.order() * b.order() * c.order()];
        Lifting3 { a, b, c, target, table }
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem, z: Elem) -> Elem {
        self.table[(x * self.b.order() + y) * self.c.order() + z]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn with_entry(&self, x: Elem, y: Elem, z: Elem, value: Elem) -> Self {
        let mut table = self.table.clone();
        table[(x * self.b.order() + y) * self.c.order() + z] = value;
        Lifting3 {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            target: self.target.clone(),
            table,
        }
    }
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn cyclic_basics() {
        assert!(FiniteGroup::cyclic(0).is_err());
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.rows(), vec![vec![0, 1], vec![1, 0]]);
        // modular arithmetic oracle: (2 + 5) mod 6
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.mul(2, 5), (2 + 5) % 6);
        for a in z6.elements() {
            for b in z6.elements() {
                assert_eq!(z6.mul(a, b), (a + b) % 6);
            }
        }
    }

    #[test]
    fn dihedral_3_is_nonabelian() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        // brute-force commutativity scan
        let witness = d3
            .elements()
            .flat_map(|a| d3.elements().map(move |b| (a, b)))
            .find(|&(a, b)| d3.mul(a, b) != d3.mul(b, a));
        assert!(witness.is_some());
        // rotation * reflection vs reflection * rotation at the generators
        let r = 1; // r^1
        let s = 3; // s r^0
        assert_ne!(d3.mul(r, s), d3.mul(s, r));
    }

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(!FiniteGroup::symmetric(3).unwrap().is_abelian());
    }

    #[test]
    fn direct_product_orders_and_associativity() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let t = FiniteGroup::direct_product(&z1, &z1).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(FiniteGroup::direct_product(&z2, &z3).unwrap().order(), 6);

        // (A x B) x C and A x (B x C) agree on the nose under row-major
        // indexing with the first factor slowest.
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let ab_c = FiniteGroup::direct_product(
            &FiniteGroup::direct_product(&z2, &z3).unwrap(),
            &d3,
        )
        .unwrap();
        let a_bc = FiniteGroup::direct_product(
            &z2,
            &FiniteGroup::direct_product(&z3, &d3).unwrap(),
        )
        .unwrap();
        assert_eq!(ab_c.order(), a_bc.order());
        assert_eq!(ab_c.rows(), a_bc.rows());
    }

    #[test]
    fn constructed_groups_satisfy_invariants() {
        // from_table re-validates everything, so a round-trip is the check.
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(2).unwrap(),
                &FiniteGroup::dihedral(3).unwrap(),
            )
            .unwrap(),
        ] {
            let rebuilt = FiniteGroup::from_table(g.name(), &g.rows()).unwrap();
            assert_eq!(rebuilt, g);
            assert_eq!(rebuilt.identity(), g.identity());
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(matches!(
            FiniteGroup::from_table("bad", &[vec![0, 0], vec![1, 1]]),
            Err(GroupError::NotLatin(..))
        ));
        // subtraction mod 3: a Latin square with no two-sided identity
        assert!(matches!(
            FiniteGroup::from_table("bad", &[vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]),
            Err(GroupError::NoIdentity)
        ));
        // A Latin square with identity and two-sided inverses that still
        // fails associativity; the smallest such loops have order 5.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("loop5", &loop5),
            Err(GroupError::NotAssociative(..))
        ));
    }

    #[test]
    fn permutation_closure_matches_symmetric() {
        let s3 = FiniteGroup::from_permutations("S3", 3, &[
            vec![vec![0, 1]],
            vec![vec![0, 1, 2]],
        ])
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        // determinism of the BFS numbering
        let again = FiniteGroup::from_permutations("S3", 3, &[
            vec![vec![0, 1]],
            vec![vec![0, 1, 2]],
        ])
        .unwrap();
        assert_eq!(s3, again);
        // overlapping cycles that fail to be a bijection are rejected
        assert!(FiniteGroup::from_permutations("bad", 3, &[vec![vec![0, 1], vec![1, 2]]]).is_err());
    }

    #[test]
    fn conjugation_action_examples() {
        // abelian: the table is trivial
        let z6 = arc(FiniteGroup::cyclic(6).unwrap());
        let conj = conjugation_action(&z6);
        assert_eq!(conj, GroupAction::trivial(z6.clone(), z6.clone()));

        // D3: conjugating the reflections by the rotation r is a 3-cycle
        let d3 = arc(FiniteGroup::dihedral(3).unwrap());
        let conj = conjugation_action(&d3);
        let r = 1;
        let reflections = [3usize, 4, 5];
        let image: Vec<Elem> = reflections.iter().map(|&s| conj.act(r, s)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, reflections);
        assert!(reflections.iter().zip(&image).all(|(&a, &b)| a != b));
        // orbit of one reflection under repeated conjugation covers all three
        let mut orbit = vec![3usize];
        while orbit.len() < 3 {
            let next = conj.act(r, *orbit.last().unwrap());
            assert!(!orbit.contains(&next));
            orbit.push(next);
        }

        for g in [
            arc(FiniteGroup::trivial()),
            z6,
            d3,
            arc(FiniteGroup::symmetric(4).unwrap()),
        ] {
            assert!(check_action(&conjugation_action(&g)).ok());
        }
    }

    #[test]
    fn hom_checks() {
        let z4 = arc(FiniteGroup::cyclic(4).unwrap());
        let z2 = arc(FiniteGroup::cyclic(2).unwrap());
        let z3 = arc(FiniteGroup::cyclic(3).unwrap());

        let id = GroupHom::identity(z4.clone());
        assert!(check_hom(&id).ok());

        let parity = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(check_hom(&parity).ok());

        // Z3 -> Z2 sending 1 -> 1 is not a homomorphism; the report's first
        // witness must match an independent exhaustive scan.
        let bad = GroupHom::new(z3.clone(), z2.clone(), vec![0, 1, 0]).unwrap();
        let report = check_hom(&bad);
        assert!(!report.ok());
        let oracle = {
            let mut found = None;
            'outer: for x in 0..3 {
                for y in 0..3 {
                    let fx = [0usize, 1, 0];
                    if fx[(x + y) % 3] != (fx[x] + fx[y]) % 2 {
                        found = Some(vec![x, y]);
                        break 'outer;
                    }
                }
            }
            found.unwrap()
        };
        assert_eq!(report.first().unwrap().witness, oracle);
        assert!(GroupHom::verified(z3, z2, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn action_report_flags_broken_tables() {
        let z2 = arc(FiniteGroup::cyclic(2).unwrap());
        let z3 = arc(FiniteGroup::cyclic(3).unwrap());
        // swap action of Z2 on Z3 by inversion: 1 . x = -x, a valid action
        let inv = GroupAction::from_fn(z2.clone(), z3.clone(), |a, x| {
            if a == 0 { x } else { z3.inv(x) }
        })
        .unwrap();
        assert!(check_action(&inv).ok());
        // a non-multiplicative table: 1 . x = x + 1
        let shift = GroupAction::from_fn(z2.clone(), z3.clone(), |a, x| {
            if a == 0 { x } else { (x + 1) % 3 }
        })
        .unwrap();
        let report = check_action(&shift);
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.law == "action.multiplicative"));
    }
}
