//! Enumeration of 3-crossed modules over fixed group data.
//!
//! Given four groups, three boundaries, and six actions, the search walks
//! candidate lifting tables and yields every candidate that passes the full
//! 33-check verifier. The walk never enumerates blindly: unit arguments pin
//! values to the unit, the boundary rules (checks 11, 12, 15, 19, 20)
//! confine each cell to a boundary fiber, and the conjugation rules
//! (checks 14, 18, 31) pin whole families of cells outright.

use crate::group::{Elem, GroupAction, GroupHom, GroupRef, Lifting2, Lifting3};

use super::{verify_three_crossed, StructureError, ThreeCrossedModule};

/// Found structures plus whether the candidate space was exhausted.
#[derive(Debug)]
pub struct SearchOutcome {
    pub found: Vec<ThreeCrossedModule>,
    /// False when the examination budget ran out; the stream is partial.
    pub complete: bool,
    pub examined: u64,
}

/// Candidate values per table cell. An empty cell kills the whole plan.
struct CellPlan {
    options: Vec<Vec<Elem>>,
}

impl CellPlan {
    fn feasible(&self) -> bool {
        self.options.iter().all(|o| !o.is_empty())
    }

    /// Walks every assignment, calling `f` with the flat table; `f` returns
    /// false to stop. Returns false if stopped early.
    fn for_each(&self, mut f: impl FnMut(&[Elem]) -> bool) -> bool {
        if !self.feasible() {
            return true;
        }
        let n = self.options.len();
        let mut table: Vec<Elem> = self.options.iter().map(|o| o[0]).collect();
        let mut choice = vec![0usize; n];
        loop {
            if !f(&table) {
                return false;
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return true;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < self.options[pos].len() {
                    table[pos] = self.options[pos][choice[pos]];
                    break;
                }
                choice[pos] = 0;
                table[pos] = self.options[pos][0];
            }
        }
    }
}

fn pin(options: &mut Vec<Elem>, value: Elem) {
    options.retain(|&v| v == value);
}

/// Enumerates candidate lifting tables over the given data and yields those
/// passing [`verify_three_crossed`]. `budget` caps the number of full
/// candidates assembled; on exhaustion the outcome is flagged partial.
#[allow(clippy::too_many_arguments)]
pub fn search_three_crossed(
    m: GroupRef,
    l: GroupRef,
    h: GroupRef,
    g: GroupRef,
    d_ml: GroupHom,
    d_lh: GroupHom,
    d_hg: GroupHom,
    act_g_h: GroupAction,
    act_g_l: GroupAction,
    act_g_m: GroupAction,
    act_h_l: GroupAction,
    act_h_m: GroupAction,
    act_l_m: GroupAction,
    budget: u64,
) -> Result<SearchOutcome, StructureError> {
    let skeleton = ThreeCrossedModule::new(
        m.clone(),
        l.clone(),
        h.clone(),
        g.clone(),
        d_ml,
        d_lh,
        d_hg,
        act_g_h,
        act_g_l,
        act_g_m,
        act_h_l,
        act_h_m,
        act_l_m,
        Lifting2::constant_unit(h.clone(), h.clone(), l.clone()),
        Lifting3::constant_unit(h.clone(), h.clone(), h.clone(), m.clone()),
        Lifting3::constant_unit(h.clone(), h.clone(), h.clone(), m.clone()),
        Lifting2::constant_unit(h.clone(), l.clone(), m.clone()),
        Lifting2::constant_unit(h.clone(), l.clone(), m.clone()),
        Lifting2::constant_unit(l.clone(), l.clone(), m.clone()),
    )?;

    let empty = SearchOutcome { found: Vec::new(), complete: true, examined: 0 };

    if !skeleton.check_components().ok() {
        return Ok(empty);
    }
    // Lifting-independent checks must already hold for the bare data.
    {
        let report = verify_three_crossed(&skeleton);
        let independent = ["1", "2", "3", "4", "5", "10"];
        if independent.iter().any(|id| !report.check(id).unwrap().passed) {
            return Ok(empty);
        }
    }

    let (nl, nh) = (l.order(), h.order());
    let (eh, el, em) = (h.identity(), l.identity(), m.identity());
    let t = &skeleton;

    // Fibers of the boundary M -> L.
    let mut fiber_ml: Vec<Vec<Elem>> = vec![Vec::new(); nl];
    for x in m.elements() {
        fiber_ml[t.dm(x)].push(x);
    }

    let peiffer_plan = CellPlan {
        options: (0..nh * nh)
            .map(|cell| {
                let (h2, h1) = (cell / nh, cell % nh);
                if h2 == eh || h1 == eh {
                    vec![el]
                } else {
                    l.elements().collect()
                }
            })
            .collect(),
    };

    let mut found = Vec::new();
    let mut examined = 0u64;
    let mut complete = true;

    let mut peiffer_tables: Vec<Vec<Elem>> = Vec::new();
    peiffer_plan.for_each(|tbl| {
        peiffer_tables.push(tbl.to_vec());
        (peiffer_tables.len() as u64) < budget.max(1)
    });

    'peiffer: for pf_table in &peiffer_tables {
        let pf = Lifting2::new(h.clone(), h.clone(), l.clone(), pf_table.clone())
            .expect("fixed shape");

        // LL: unit pins, check-15 fibers, check-31 pins on boundary pairs.
        let mut ll_options: Vec<Vec<Elem>> = (0..nl * nl)
            .map(|cell| {
                let (l2, l1) = (cell / nl, cell % nl);
                if l2 == el || l1 == el {
                    return vec![em];
                }
                // check 15: d{l2,l1}_LL = l2 l1 l2^{-1} (^{d l2} l1)^{-1}
                let target = l.mul(
                    l.mul(l.mul(l2, l1), l.inv(l2)),
                    l.inv(t.a_hl(t.dl(l2), l1)),
                );
                fiber_ml[target].to_vec()
            })
            .collect();
        for x in m.elements() {
            for y in m.elements() {
                let cell = t.dm(x) * nl + t.dm(y);
                pin(&mut ll_options[cell], m.commutator(x, y));
            }
        }

        // HL: unit pins, check-11 fibers, check-14 pins on (h, (dm)^{-1}).
        let mut hl_options: Vec<Vec<Elem>> = (0..nh * nl)
            .map(|cell| {
                let (hh, lv) = (cell / nl, cell % nl);
                if hh == eh || lv == el {
                    return vec![em];
                }
                // check 11: d{h,l}_HL = l {d l^{-1}, h} (^h l)^{-1}
                let target = l.mul(
                    l.mul(lv, pf.get(t.h.inv(t.dl(lv)), hh)),
                    l.inv(t.a_hl(hh, lv)),
                );
                fiber_ml[target].to_vec()
            })
            .collect();
        for hh in h.elements() {
            for x in m.elements() {
                let cell = hh * nl + l.inv(t.dm(x));
                pin(&mut hl_options[cell], m.mul(m.inv(x), t.a_hm(hh, x)));
            }
        }

        // HL': unit pins, check-12 fibers, check-18 pins on (h, (dm)^{-1}).
        let mut hlp_options: Vec<Vec<Elem>> = (0..nh * nl)
            .map(|cell| {
                let (hh, lv) = (cell / nl, cell % nl);
                if hh == eh || lv == el {
                    return vec![em];
                }
                // check 12: d{h,l}'_HL = ^h l {h, d l^{-1}} (^{d h} l)^{-1}
                let target = l.mul(
                    l.mul(t.a_hl(hh, lv), pf.get(hh, t.h.inv(t.dl(lv)))),
                    l.inv(t.a_gl(t.dh(hh), lv)),
                );
                fiber_ml[target].to_vec()
            })
            .collect();
        for hh in h.elements() {
            for x in m.elements() {
                let cell = hh * nl + l.inv(t.dm(x));
                pin(
                    &mut hlp_options[cell],
                    m.mul(m.inv(t.a_hm(hh, x)), t.a_gm(t.dh(hh), x)),
                );
            }
        }

        // Homanians: unit pins, check-19/20 fibers.
        let hom_options = |right: bool| -> Vec<Vec<Elem>> {
            (0..nh * nh * nh)
                .map(|cell| {
                    let h3 = cell / (nh * nh);
                    let h2 = (cell / nh) % nh;
                    let h1 = cell % nh;
                    if h3 == eh || h2 == eh || h1 == eh {
                        return vec![em];
                    }
                    let target = if !right {
                        // check 19: d{h3,h2,h1} =
                        //   {h3 h2, h1} {h3, ^{d h2} h1}^{-1} (^{h3}{h2,h1})^{-1}
                        l.mul(
                            l.mul(
                                pf.get(t.h.mul(h3, h2), h1),
                                l.inv(pf.get(h3, t.a_gh(t.dh(h2), h1))),
                            ),
                            l.inv(t.a_hl(h3, pf.get(h2, h1))),
                        )
                    } else {
                        // check 20: d{h3,h2,h1}' =
                        //   {h3, h2 h1} (^{(^{d h3} h2)}{h3,h1})^{-1} {h3,h2}^{-1}
                        l.mul(
                            l.mul(
                                pf.get(h3, t.h.mul(h2, h1)),
                                l.inv(t.a_hl(t.a_gh(t.dh(h3), h2), pf.get(h3, h1))),
                            ),
                            l.inv(pf.get(h3, h2)),
                        )
                    };
                    fiber_ml[target].to_vec()
                })
                .collect()
        };

        // One flat plan for the five remaining tables.
        let n_ll = nl * nl;
        let n_hl = nh * nl;
        let n_hom = nh * nh * nh;
        let mut options = ll_options;
        options.extend(hl_options);
        options.extend(hlp_options);
        options.extend(hom_options(false));
        options.extend(hom_options(true));
        let plan = CellPlan { options };

        let ok = plan.for_each(|flat| {
            examined += 1;
            let mut at = 0usize;
            let take = |at: &mut usize, n: usize| {
                let slice = flat[*at..*at + n].to_vec();
                *at += n;
                slice
            };
            let ll_t = take(&mut at, n_ll);
            let hl_t = take(&mut at, n_hl);
            let hlp_t = take(&mut at, n_hl);
            let lhom_t = take(&mut at, n_hom);
            let rhom_t = take(&mut at, n_hom);
            let candidate = ThreeCrossedModule {
                peiffer: pf.clone(),
                ll: Lifting2::new(l.clone(), l.clone(), m.clone(), ll_t).expect("shape"),
                hl: Lifting2::new(h.clone(), l.clone(), m.clone(), hl_t).expect("shape"),
                hl_prime: Lifting2::new(h.clone(), l.clone(), m.clone(), hlp_t)
                    .expect("shape"),
                left_hom: Lifting3::new(h.clone(), h.clone(), h.clone(), m.clone(), lhom_t)
                    .expect("shape"),
                right_hom: Lifting3::new(h.clone(), h.clone(), h.clone(), m.clone(), rhom_t)
                    .expect("shape"),
                ..skeleton.clone()
            };
            if verify_three_crossed(&candidate).ok() {
                found.push(candidate);
            }
            examined < budget
        });
        if !ok {
            complete = false;
            break 'peiffer;
        }
    }

    Ok(SearchOutcome { found, complete, examined })
}
