//! Building a 3-crossed module out of a 2-crossed module.
//!
//! Given a 2-crossed module C -> B -> A, the product construction sets
//! G = A, H = B x A, L = C x B, M = C, with componentwise products,
//! projection/insertion boundaries, componentwise actions, and liftings
//! assembled from the Peiffer lifting of the input. The output is always
//! run through the full 33-check verifier before being returned.
//!
//! Two feeders manufacture small 2-crossed modules: `crossed_to_two_crossed`
//! pads an ordinary crossed module with a trivial top group, and
//! `search_two_crossed` enumerates Peiffer tables over given group data.

use std::sync::Arc;

use thiserror::Error;

use crate::crossed::{
    verify_three_crossed, verify_two_crossed, AxiomReport, StructureError, ThreeCrossedModule,
    TwoCrossedModule,
};
use crate::group::{
    check_action, check_hom, conjugation_action, Elem, FiniteGroup, GroupAction, GroupError,
    GroupHom, GroupRef, Lifting2,
};
use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("group construction failed: {0}")]
    Group(#[from] GroupError),
    #[error("structure construction failed: {0}")]
    Structure(#[from] StructureError),
    #[error("input fails axiom checks: {0:?}")]
    InvalidInput(Vec<String>),
    #[error("output fails axiom checks (this is a bug): {0:?}")]
    InvalidOutput(Vec<String>),
    #[error("subgroup is not closed under the ambient operations")]
    NotASubgroup,
    #[error("conjugation does not preserve the subgroup (witness {0})")]
    NotNormal(Elem),
}

/// An ordinary crossed module: a boundary H -> G with a G-action on H
/// satisfying equivariance and the Peiffer identity.
#[derive(Debug, Clone)]
pub struct CrossedModule {
    pub h: GroupRef,
    pub g: GroupRef,
    pub boundary: GroupHom,
    pub action: GroupAction,
}

impl CrossedModule {
    pub fn new(
        h: GroupRef,
        g: GroupRef,
        boundary: GroupHom,
        action: GroupAction,
    ) -> Result<Self, StructureError> {
        if !crate::group::same_group(&boundary.source, &h)
            || !crate::group::same_group(&boundary.target, &g)
        {
            return Err(StructureError::Mismatch("crossed-module boundary"));
        }
        if !crate::group::same_group(&action.actor, &g)
            || !crate::group::same_group(&action.space, &h)
        {
            return Err(StructureError::Mismatch("crossed-module action"));
        }
        Ok(CrossedModule { h, g, boundary, action })
    }

    /// The inner crossed module G -> G: identity boundary, conjugation.
    pub fn inner(g: GroupRef) -> Self {
        CrossedModule {
            boundary: GroupHom::identity(g.clone()),
            action: conjugation_action(&g),
            h: g.clone(),
            g,
        }
    }

    /// Inclusion of a subgroup with the ambient conjugation action. Fails
    /// when the listed elements are not a subgroup or not normal (the
    /// conjugation action does not close).
    pub fn from_normal_inclusion(
        g: &GroupRef,
        subgroup_elems: &[Elem],
    ) -> Result<Self, ConstructionError> {
        let mut elems = subgroup_elems.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !elems.contains(&g.identity()) {
            return Err(ConstructionError::NotASubgroup);
        }
        let pos = |x: Elem| elems.binary_search(&x).ok();
        for &x in &elems {
            if pos(g.inv(x)).is_none() {
                return Err(ConstructionError::NotASubgroup);
            }
            for &y in &elems {
                if pos(g.mul(x, y)).is_none() {
                    return Err(ConstructionError::NotASubgroup);
                }
            }
        }
        for a in g.elements() {
            for &x in &elems {
                if pos(g.conj(a, x)).is_none() {
                    return Err(ConstructionError::NotNormal(a));
                }
            }
        }
        let order = elems.len();
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| pos(g.mul(elems[i], elems[j])).unwrap()).collect())
            .collect();
        let h = Arc::new(FiniteGroup::from_table(format!("{}-sub{}", g.name(), order), &rows)?);
        let boundary = GroupHom::new(h.clone(), g.clone(), elems.clone())?;
        let action = GroupAction::from_fn(g.clone(), h.clone(), |a, x| {
            pos(g.conj(a, elems[x])).unwrap()
        })?;
        Ok(CrossedModule { h, g: g.clone(), boundary, action })
    }

    /// Equivariance and the Peiffer identity, exhaustively.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new("crossed module");
        report.merge(check_hom(&self.boundary));
        report.merge(check_action(&self.action));
        for g in self.g.elements() {
            for h in self.h.elements() {
                if self.boundary.apply(self.action.act(g, h))
                    != self.g.conj(g, self.boundary.apply(h))
                {
                    report.record("crossed.equivariance", vec![g, h]);
                }
            }
        }
        for h in self.h.elements() {
            for hp in self.h.elements() {
                if self.action.act(self.boundary.apply(h), hp) != self.h.conj(h, hp) {
                    report.record("crossed.peiffer-identity", vec![h, hp]);
                }
            }
        }
        report
    }
}

/// Pads a crossed module to the 2-crossed module 1 -> H -> G with trivial
/// Peiffer lifting. The crossed-module axioms are rechecked and failures
/// are rejected with a witness.
pub fn crossed_to_two_crossed(k: &CrossedModule) -> Result<TwoCrossedModule, ConstructionError> {
    let report = k.check();
    if !report.ok() {
        return Err(ConstructionError::InvalidInput(
            report.violations.iter().map(|v| format!("{} @ {:?}", v.law, v.witness)).collect(),
        ));
    }
    let one = Arc::new(FiniteGroup::trivial());
    Ok(TwoCrossedModule {
        l: one.clone(),
        h: k.h.clone(),
        g: k.g.clone(),
        d_lh: GroupHom::zero(one.clone(), k.h.clone()),
        d_hg: k.boundary.clone(),
        act_g_h: k.action.clone(),
        act_g_l: GroupAction::trivial(k.g.clone(), one.clone()),
        act_h_l: GroupAction::trivial(k.h.clone(), one.clone()),
        peiffer: Lifting2::constant_unit(k.h.clone(), k.h.clone(), one),
    })
}

/// The inner 2-crossed module of a group B: the complex B -> B -> 1 with
/// identity boundary, conjugation actions, and the commutator as Peiffer
/// lifting. Valid for every finite B, and nontrivial whenever B is
/// nonabelian.
pub fn inner_two_crossed(b: GroupRef) -> TwoCrossedModule {
    let one = Arc::new(FiniteGroup::trivial());
    let peiffer = Lifting2::from_fn(b.clone(), b.clone(), b.clone(), |x, y| b.commutator(x, y))
        .expect("commutator table is total");
    TwoCrossedModule {
        l: b.clone(),
        h: b.clone(),
        g: one.clone(),
        d_lh: GroupHom::identity(b.clone()),
        d_hg: GroupHom::zero(b.clone(), one.clone()),
        act_g_h: GroupAction::trivial(one.clone(), b.clone()),
        act_g_l: GroupAction::trivial(one.clone(), b.clone()),
        act_h_l: conjugation_action(&b),
        peiffer,
    }
}

/// The product construction of a 3-crossed module from a 2-crossed module.
///
/// The input is verified first; the output is verified before being
/// returned, and a failure there is a bug, not a property of the input.
pub fn three_crossed_from_two(
    w: &TwoCrossedModule,
) -> Result<ThreeCrossedModule, ConstructionError> {
    let (t, report) = three_crossed_from_two_with_report(w)?;
    if !report.ok() {
        return Err(ConstructionError::InvalidOutput(
            report.failed_ids().iter().map(|s| s.to_string()).collect(),
        ));
    }
    Ok(t)
}

/// Runs the whole pipeline: verify the input, build, verify the output,
/// and return the output's axiom report alongside the structure.
pub fn three_crossed_from_two_with_report(
    w: &TwoCrossedModule,
) -> Result<(ThreeCrossedModule, AxiomReport), ConstructionError> {
    let input_report = verify_two_crossed(w);
    if !input_report.ok() {
        return Err(ConstructionError::InvalidInput(
            input_report.failed_ids().iter().map(|s| s.to_string()).collect(),
        ));
    }
    let t = three_crossed_from_two_unchecked(w)?;
    let report = verify_three_crossed(&t);
    Ok((t, report))
}

/// The raw product construction, without input/output verification.
pub fn three_crossed_from_two_unchecked(
    w: &TwoCrossedModule,
) -> Result<ThreeCrossedModule, ConstructionError> {
    // Rename the input complex C -> B -> A.
    let (c, b, a) = (w.l.clone(), w.h.clone(), w.g.clone());
    let act_ab = &w.act_g_h; // A on B
    let act_ac = &w.act_g_l; // A on C
    let act_bc = &w.act_h_l; // B on C
    let pf_b = &w.peiffer; // {-,-}_B : B x B -> C

    let g = a.clone();
    let h = Arc::new(FiniteGroup::direct_product(&b, &a)?);
    let l = Arc::new(FiniteGroup::direct_product(&c, &b)?);
    let m = c.clone();

    // Row-major pairing: (x, y) in X x Y sits at index x * |Y| + y.
    let na = a.order();
    let nb = b.order();
    let h_of = |bb: Elem, aa: Elem| bb * na + aa;
    let l_of = |cc: Elem, bb: Elem| cc * nb + bb;
    let h_b = |x: Elem| x / na;
    let h_a = |x: Elem| x % na;
    let l_c = |x: Elem| x / nb;
    let l_b = |x: Elem| x % nb;

    let d_ml = GroupHom::from_fn(m.clone(), l.clone(), |cc| l_of(cc, b.identity()))?;
    let d_lh = GroupHom::from_fn(l.clone(), h.clone(), |x| h_of(l_b(x), a.identity()))?;
    let d_hg = GroupHom::from_fn(h.clone(), g.clone(), h_a)?;

    let act_g_h = GroupAction::from_fn(g.clone(), h.clone(), |ag, x| {
        h_of(act_ab.act(ag, h_b(x)), a.conj(ag, h_a(x)))
    })?;
    let act_g_l = GroupAction::from_fn(g.clone(), l.clone(), |ag, x| {
        l_of(act_ac.act(ag, l_c(x)), act_ab.act(ag, l_b(x)))
    })?;
    let act_g_m = GroupAction::from_fn(g.clone(), m.clone(), |ag, cm| act_ac.act(ag, cm))?;
    // The B-component of ^h l is conjugation by the B-component of h.
    let act_h_l = GroupAction::from_fn(h.clone(), l.clone(), |x, y| {
        l_of(act_bc.act(h_b(x), l_c(y)), b.conj(h_b(x), l_b(y)))
    })?;
    let act_h_m = GroupAction::from_fn(h.clone(), m.clone(), |x, cm| act_bc.act(h_b(x), cm))?;
    let act_l_m = GroupAction::from_fn(l.clone(), m.clone(), |x, cm| c.conj(l_c(x), cm))?;

    let peiffer = Lifting2::from_fn(h.clone(), h.clone(), l.clone(), |x2, x1| {
        let b2 = h_b(x2);
        let (b1, a1) = (h_b(x1), h_a(x1));
        let b_part = b.mul(b.conj(b2, b1), act_ab.act(a1, b.inv(b1)));
        l_of(pf_b.get(b2, b1), b_part)
    })?;

    let left_hom = crate::group::Lifting3::from_fn(
        h.clone(),
        h.clone(),
        h.clone(),
        m.clone(),
        |x3, x2, x1| {
            let b3 = h_b(x3);
            let (b2, a2) = (h_b(x2), h_a(x2));
            let b1 = h_b(x1);
            c.mul(
                c.mul(
                    pf_b.get(b.mul(b3, b2), b1),
                    c.inv(pf_b.get(b3, act_ab.act(a2, b1))),
                ),
                act_bc.act(b3, c.inv(pf_b.get(b2, b1))),
            )
        },
    )?;

    let right_hom = crate::group::Lifting3::from_fn(
        h.clone(),
        h.clone(),
        h.clone(),
        m.clone(),
        |x3, x2, x1| {
            let (b3, a3) = (h_b(x3), h_a(x3));
            let b2 = h_b(x2);
            let b1 = h_b(x1);
            c.mul(
                c.mul(
                    pf_b.get(b3, b.mul(b2, b1)),
                    act_bc.act(act_ab.act(a3, b2), c.inv(pf_b.get(b3, b1))),
                ),
                c.inv(pf_b.get(b3, b2)),
            )
        },
    )?;

    let hl = Lifting2::from_fn(h.clone(), l.clone(), m.clone(), |x2, y1| {
        let b2 = h_b(x2);
        let (c1, b1) = (l_c(y1), l_b(y1));
        c.mul(c.mul(c1, pf_b.get(b.inv(b1), b2)), act_bc.act(b2, c.inv(c1)))
    })?;

    let hl_prime = Lifting2::from_fn(h.clone(), l.clone(), m.clone(), |x2, y1| {
        let (b2, a2) = (h_b(x2), h_a(x2));
        let (c1, b1) = (l_c(y1), l_b(y1));
        c.mul(
            c.mul(act_bc.act(b2, c1), pf_b.get(b2, b.inv(b1))),
            act_ac.act(a2, c.inv(c1)),
        )
    })?;

    let ll = Lifting2::from_fn(l.clone(), l.clone(), m.clone(), |y2, y1| {
        let (c2, b2) = (l_c(y2), l_b(y2));
        let c1 = l_c(y1);
        c.mul(c.conj(c2, c1), act_bc.act(b2, c.inv(c1)))
    })?;

    Ok(ThreeCrossedModule::new(
        m, l, h, g, d_ml, d_lh, d_hg, act_g_h, act_g_l, act_g_m, act_h_l, act_h_m, act_l_m,
        peiffer, left_hom, right_hom, hl, hl_prime, ll,
    )?)
}

/// Search outcome for [`search_two_crossed`]: found structures plus
/// whether the whole candidate space was examined.
#[derive(Debug)]
pub struct TwoCrossedSearch {
    pub found: Vec<TwoCrossedModule>,
    pub complete: bool,
    pub examined: u64,
}

/// Enumerates Peiffer tables over the given group data and yields the
/// candidates passing the full ten-axiom verifier.
///
/// Candidate tables are pruned before verification: unit arguments force
/// unit values, axiom 4 confines each value to a boundary fiber, and axiom 5
/// pins the values on pairs of boundary images.
#[allow(clippy::too_many_arguments)]
pub fn search_two_crossed(
    l: GroupRef,
    h: GroupRef,
    g: GroupRef,
    d_lh: GroupHom,
    d_hg: GroupHom,
    act_g_h: GroupAction,
    act_g_l: GroupAction,
    act_h_l: GroupAction,
    budget: u64,
) -> Result<TwoCrossedSearch, StructureError> {
    let skeleton = TwoCrossedModule::new(
        l.clone(),
        h.clone(),
        g.clone(),
        d_lh,
        d_hg,
        act_g_h,
        act_g_l,
        act_h_l,
        Lifting2::constant_unit(h.clone(), h.clone(), l.clone()),
    )?;
    if !skeleton.check_components().ok() {
        return Ok(TwoCrossedSearch { found: Vec::new(), complete: true, examined: 0 });
    }

    let nh = h.order();
    let eh = h.identity();
    let el = l.identity();

    // Fibers of the boundary L -> H, for the axiom-4 constraint.
    let mut fibers: Vec<Vec<Elem>> = vec![Vec::new(); nh];
    for x in l.elements() {
        fibers[skeleton.d_lh.apply(x)].push(x);
    }

    let mut pinned: Vec<Option<Elem>> = vec![None; nh * nh];
    for x in h.elements() {
        pinned[eh * nh + x] = Some(el);
        pinned[x * nh + eh] = Some(el);
    }
    // Axiom 5 pins values on boundary-image pairs; conflicting pins mean
    // no structure exists over this data.
    for l2 in l.elements() {
        for l1 in l.elements() {
            let cell = skeleton.d_lh.apply(l2) * nh + skeleton.d_lh.apply(l1);
            let want = l.commutator(l2, l1);
            match pinned[cell] {
                None => pinned[cell] = Some(want),
                Some(v) if v == want => {}
                Some(_) => {
                    return Ok(TwoCrossedSearch {
                        found: Vec::new(),
                        complete: true,
                        examined: 0,
                    })
                }
            }
        }
    }

    let cells: Vec<Vec<Elem>> = (0..nh * nh)
        .map(|cell| match pinned[cell] {
            Some(v) => vec![v],
            None => {
                // axiom 4 forces the boundary of {h2, h1}
                let (h2, h1) = (cell / nh, cell % nh);
                let want = h.mul(
                    h.conj(h2, h1),
                    skeleton.act_g_h.act(skeleton.d_hg.apply(h2), h.inv(h1)),
                );
                fibers[want].clone()
            }
        })
        .collect();

    let mut found = Vec::new();
    let mut examined = 0u64;
    let mut complete = true;
    let mut table = vec![el; nh * nh];
    let mut choice = vec![0usize; nh * nh + 1];
    let mut depth = 0usize;
    'dfs: loop {
        if depth == cells.len() {
            examined += 1;
            let candidate = TwoCrossedModule {
                peiffer: Lifting2::new(h.clone(), h.clone(), l.clone(), table.clone())
                    .expect("table shape is fixed"),
                ..skeleton.clone()
            };
            if verify_two_crossed(&candidate).ok() {
                found.push(candidate);
            }
            if examined >= budget {
                complete = false;
                break 'dfs;
            }
            loop {
                if depth == 0 {
                    break 'dfs;
                }
                depth -= 1;
                choice[depth] += 1;
                if choice[depth] < cells[depth].len() {
                    break;
                }
            }
            continue;
        }
        if choice[depth] >= cells[depth].len() {
            loop {
                if depth == 0 {
                    break 'dfs;
                }
                depth -= 1;
                choice[depth] += 1;
                if choice[depth] < cells[depth].len() {
                    break;
                }
            }
            continue;
        }
        table[depth] = cells[depth][choice[depth]];
        depth += 1;
        choice[depth] = 0;
    }

    Ok(TwoCrossedSearch { found, complete, examined })
}
