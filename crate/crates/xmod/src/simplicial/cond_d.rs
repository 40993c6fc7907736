//! Condition (d): the 6-vertex cocycle equation of the 3-crossed colored
//! set.
//!
//! For `i <= j <= k <= p <= q <= x` the equation relates the six m-labels
//! on the 5-subtuples through eighteen terms built from the l/h/g labels
//! and the six liftings. The left side carries five terms `M_1..M_5`
//! twisted by the `L_A..L_F` expressions, the right side thirteen terms
//! `M'_1..M'_13` twisted by `L_G..L_N`; the term definitions are bound to
//! the slots positionally, in listed order. Only the six bare m-labels are
//! kept symbolic, so the horn filler can isolate any one of them; every
//! lifting term is evaluated eagerly.

use crate::group::Elem;

use super::colored::{LabelSet, Structure};
use super::cond::{mlabel, need_g, need_h, need_l, ActKind, CondError, Equation, Factor};

/// Experiment knobs over ambiguous spots of the printed term list; the
/// default is resolved empirically (see the crate tests) and documented in
/// `docs/axioms.md`.
#[derive(Debug, Clone, Copy)]
pub struct CondDReading {
    /// M'_5's inner transported triangle: verbatim `h_ijq` vs the pattern
    /// `h_ijp`.
    pub mp5_ijp: bool,
    /// L_N's transport word: verbatim `g_qx g_px g_kp` vs the edge path
    /// `g_qx g_pq g_kp`.
    pub ln_path: bool,
    /// M'_13's HL transport: verbatim `g_kx` vs `g_px`.
    pub mp13_px: bool,
    /// Inner twist `^{h_ijx}` on the m_{jkpqx} term (absent in print).
    pub mp2_twist: bool,
    /// Twist M'_13's HL factor by the action of h_ikx on M.
    pub mp13_hl_twist: bool,
    /// Extend M'_4's payload twist by (^{g_qx g_pq}h_pqx)^{-1}... reduced:
    /// h_pqx^{-1} applied innermost.
    pub mp4_pqx: bool,
    /// Drop M'_7's HL' factor.
    pub mp7_drop_hlp: bool,
}

impl Default for CondDReading {
    fn default() -> Self {
        CondDReading {
            mp5_ijp: false,
            ln_path: false,
            mp13_px: false,
            mp2_twist: true,
            mp13_hl_twist: true,
            mp4_pqx: true,
            mp7_drop_hlp: false,
        }
    }
}

/// Builds the condition-(d) instance at a weakly increasing 6-tuple.
/// Errors if the structure is 2-crossed or a required l/h/g label is
/// absent.
pub fn cond_d(
    st: &Structure,
    labels: &LabelSet,
    t6: [u8; 6],
) -> Result<Equation, CondError> {
    cond_d_with(st, labels, t6, &CondDReading::default())
}

pub fn cond_d_with(
    st: &Structure,
    labels: &LabelSet,
    t6: [u8; 6],
    reading: &CondDReading,
) -> Result<Equation, CondError> {
    let Some(t) = st.three() else {
        return Err(CondError::WrongLevel("condition (d)"));
    };
    let [i, j, k, p, q, x] = t6;

    let (gg, hh, ll, mm) = (&t.g, &t.h, &t.l, &t.m);

    // Edge labels.
    let g_kx = need_g(st, labels, [k, x])?;
    let g_qx = need_g(st, labels, [q, x])?;
    let g_px = need_g(st, labels, [p, x])?;
    let g_kq = need_g(st, labels, [k, q])?;
    let g_pq = need_g(st, labels, [p, q])?;
    let g_kp = need_g(st, labels, [k, p])?;

    // Triangle labels.
    let h_ijx = need_h(st, labels, [i, j, x])?;
    let h_jkx = need_h(st, labels, [j, k, x])?;
    let h_ikx = need_h(st, labels, [i, k, x])?;
    let h_ijk = need_h(st, labels, [i, j, k])?;
    let h_ikq = need_h(st, labels, [i, k, q])?;
    let h_kqx = need_h(st, labels, [k, q, x])?;
    let h_iqx = need_h(st, labels, [i, q, x])?;
    let h_kpq = need_h(st, labels, [k, p, q])?;
    let h_ijq = need_h(st, labels, [i, j, q])?;
    let h_ipx = need_h(st, labels, [i, p, x])?;
    let h_jkp = need_h(st, labels, [j, k, p])?;
    let h_ijp = need_h(st, labels, [i, j, p])?;
    let h_pqx = need_h(st, labels, [p, q, x])?;
    let h_ikp = need_h(st, labels, [i, k, p])?;
    let h_ipq = need_h(st, labels, [i, p, q])?;
    let h_kpx = need_h(st, labels, [k, p, x])?;
    let h_jpx = need_h(st, labels, [j, p, x])?;

    // Tetrahedron labels.
    let l_kpqx = need_l(st, labels, [k, p, q, x])?;
    let l_jkqx = need_l(st, labels, [j, k, q, x])?;
    let l_ijqx = need_l(st, labels, [i, j, q, x])?;
    let l_ijkx = need_l(st, labels, [i, j, k, x])?;
    let l_ikqx = need_l(st, labels, [i, k, q, x])?;
    let l_jkpq = need_l(st, labels, [j, k, p, q])?;
    let l_ipqx = need_l(st, labels, [i, p, q, x])?;
    let l_ijkp = need_l(st, labels, [i, j, k, p])?;
    let l_ijpx = need_l(st, labels, [i, j, p, x])?;
    let l_ikpx = need_l(st, labels, [i, k, p, x])?;
    let l_jkpx = need_l(st, labels, [j, k, p, x])?;

    // Left-side twist expressions.
    let la = t.a_hl(hh.mul(h_ijx, h_jkx), l_kpqx);
    let lb = t.a_hl(h_ijx, l_jkqx);
    let lc = l_ijqx;
    let ld = l_ijkx;
    let le = t.a_hl(hh.mul(h_ikx, t.a_gh(g_kx, h_ijk)), l_kpqx);
    let lf = t.a_hl(
        h_ikq,
        ll.inv(t.pf(h_kqx, t.a_gh(gg.mul(g_qx, g_kq), h_ijk))),
    );

    // Left-side lifting terms (M_1 and M_2 stay symbolic m-labels).
    let m3 = t.pll(ld, le);
    let m4 = mm.inv(t.pll(
        l_ikqx,
        t.a_hl(
            hh.mul(h_iqx, t.a_gh(g_qx, h_ikq)),
            t.pf(
                t.a_gh(g_qx, h_kpq),
                t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk),
            ),
        ),
    ));
    let m5 = {
        let hom = mm.inv(t.lhm(
            h_kqx,
            t.a_gh(g_qx, h_kpq),
            t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk),
        ));
        let tw = ll.mul(
            ll.inv(t.pf(h_kqx, t.a_gh(gg.mul(g_qx, g_kq), h_ijk))),
            t.a_hl(
                h_kqx,
                ll.inv(t.pf(
                    t.a_gh(g_qx, h_kpq),
                    t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk),
                )),
            ),
        );
        t.a_hm(h_ikx, t.a_lm(tw, hom))
    };

    let lhs = vec![
        Factor::known(t.a_lm(ll.mul(ld, le), m5)),
        Factor::known(t.a_lm(ll.prod(&[ld, le, lf]), m4)),
        Factor::known(m3),
        mlabel(st, [i, j, k, q, x]).twisted(ActKind::LM, la),
        mlabel(st, [i, j, k, p, q])
            .twisted(ActKind::GM, g_qx)
            .twisted(ActKind::HM, h_iqx)
            .twisted(ActKind::LM, ll.prod(&[la, lb, lc])),
    ];

    // Right-side twist expressions.
    let lg = t.a_hl(h_ijx, l_jkpx);
    let lh = t.a_hl(
        hh.mul(h_ijx, h_jpx),
        ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_jkp))),
    );
    let li = l_ijpx;
    let lj = t.a_hl(h_ipx, ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_ijp))));
    let lk = l_ijkx;
    let ll_tw = t.a_hl(h_ikx, ll.inv(t.pf(h_kpx, t.a_gh(gg.mul(g_px, g_kp), h_ijk))));
    let lm_tw = l_ikpx;
    let ln_word = if reading.ln_path {
        gg.prod(&[g_qx, g_pq, g_kp])
    } else {
        gg.prod(&[g_qx, g_px, g_kp])
    };
    let ln = t.a_hl(
        h_ikx,
        ll.inv(t.pf(hh.mul(h_kpx, h_pqx), t.a_gh(ln_word, h_ijk))),
    );

    // Right-side lifting terms.
    let mp1 = mm.inv(t.pll(
        l_ijqx,
        t.a_hl(
            hh.mul(h_iqx, t.a_gh(g_qx, h_ijq)),
            t.a_gl(g_qx, l_jkpq),
        ),
    ));
    let mp4 = {
        let mut payload = t.a_gl(gg.mul(g_qx, g_pq), l_ijkp);
        if reading.mp4_pqx {
            payload = t.a_hl(t.h.inv(h_pqx), payload);
        }
        mm.inv(t.pll(
            l_ipqx,
            t.a_hl(hh.mul(h_iqx, t.a_gh(g_qx, h_ipq)), payload),
        ))
    };
    let mp5 = t.pll(
        l_ijpx,
        t.a_hl(
            hh.mul(h_ipx, t.a_gh(g_px, if reading.mp5_ijp { h_ijp } else { h_ijq })),
            t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_jkp)),
        ),
    );
    let mp6 = {
        let rh = mm.inv(t.rhm(
            h_pqx,
            t.a_gh(gg.mul(g_qx, g_pq), h_ijp),
            t.a_gh(gg.mul(g_qx, g_pq), h_jkp),
        ));
        let tw = ll.mul(
            t.a_hl(
                t.a_gh(g_px, h_ijp),
                ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_jkp))),
            ),
            ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_ijp))),
        );
        t.a_hm(h_ipx, t.a_lm(tw, rh))
    };
    let mp7 = {
        // h_{ikp} ^{g_{kp}}h_{ijk}, the composite face word
        let hk = hh.mul(h_ikp, t.a_gh(g_kp, h_ijk));
        let pf_z = ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), hk)));
        let z = ll.mul(t.a_gl(g_px, l_ijkp), pf_z);
        let term1 = t.a_lm(
            t.a_hl(h_pqx, t.a_gl(gg.mul(g_qx, g_pq), l_ijkp)),
            t.lhm(
                h_pqx,
                t.a_gh(gg.mul(g_qx, g_pq), t.dl(l_ijkp)),
                t.a_gh(gg.mul(g_qx, g_pq), hk),
            ),
        );
        let term2 = if reading.mp7_drop_hlp {
            mm.identity()
        } else {
            t.phl_p(h_pqx, t.a_gl(gg.mul(g_qx, g_pq), ll.inv(l_ijkp)))
        };
        let term3 = t.pll(t.a_gl(g_px, l_ijkp), pf_z);
        mm.mul(mm.mul(t.a_lm(z, term1), t.a_lm(z, term2)), term3)
    };
    let mp9 = {
        let rh = t.rhm(
            h_pqx,
            t.a_gh(gg.mul(g_qx, g_pq), h_ikp),
            t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk),
        );
        let tw = ll.mul(
            t.a_hl(
                t.a_gh(g_px, h_ikp),
                ll.inv(t.pf(h_pqx, t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk))),
            ),
            ll.inv(t.pf(h_pqx, t.a_gh(gg.mul(g_qx, g_pq), h_ikp))),
        );
        t.a_hm(h_ipx, t.a_lm(tw, rh))
    };
    let mp10 = mm.inv(t.pll(
        l_ikpx,
        t.a_hl(
            hh.mul(h_ipx, t.a_gh(g_px, h_ikp)),
            ll.inv(t.pf(h_pqx, t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk))),
        ),
    ));
    let mp11 = {
        let lh3 = mm.inv(t.lhm(
            h_kpx,
            h_pqx,
            t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk),
        ));
        let tw = ll.mul(
            ll.inv(t.pf(h_kpx, t.a_gh(gg.mul(g_px, g_kp), h_ijk))),
            t.a_hl(
                h_kpx,
                ll.inv(t.pf(h_pqx, t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk))),
            ),
        );
        t.a_hm(h_ikx, t.a_lm(tw, lh3))
    };
    let mp13 = {
        // h_{kqx} ^{g_{qx}}h_{kpq}
        let hh_w = hh.mul(h_kqx, t.a_gh(g_qx, h_kpq));
        let deep = t.a_gh(gg.prod(&[g_qx, g_pq, g_kp]), h_ijk);
        let v = t.a_hl(t.a_gh(g_px, h_ijk), l_kpqx);
        let w = ll.prod(&[v, ll.inv(t.pf(hh_w, deep)), ll.inv(l_kpqx)]);
        let term_a = t.a_lm(w, t.lhm(t.dl(l_kpqx), hh_w, deep));
        let hl_transport = if reading.mp13_px { g_px } else { g_kx };
        let mut hl_part = t.phl(t.a_gh(hl_transport, h_ijk), ll.inv(l_kpqx));
        if reading.mp13_hl_twist {
            hl_part = t.a_hm(h_ikx, hl_part);
        }
        let inner = mm.mul(
            t.a_lm(ll.inv(l_kpqx), t.pll(l_kpqx, t.pf(hh_w, deep))),
            hl_part,
        );
        mm.mul(term_a, t.a_lm(v, inner))
    };

    let rhs = vec![
        Factor::known(mp13),
        mlabel(st, [i, k, p, q, x])
            .inverse()
            .twisted(ActKind::LM, ll.mul(lk, ln)),
        Factor::known(t.a_lm(lk, mp11)),
        Factor::known(t.a_lm(ll.mul(lk, ll_tw), mp10)),
        Factor::known(t.a_lm(ll.prod(&[lk, ll_tw, lm_tw]), mp9)),
        mlabel(st, [i, j, k, p, x]),
        Factor::known(t.a_lm(ll.mul(lg, li), mp7)),
        Factor::known(t.a_lm(ll.mul(lg, li), mp6)),
        Factor::known(t.a_lm(lg, mp5)),
        Factor::known(t.a_lm(ll.prod(&[lg, lh, li, lj]), mp4)),
        mlabel(st, [i, j, p, q, x]).twisted(ActKind::LM, ll.mul(lg, lh)),
        if reading.mp2_twist {
            mlabel(st, [j, k, p, q, x]).twisted(ActKind::HM, h_ijx)
        } else {
            mlabel(st, [j, k, p, q, x])
        },
        Factor::known(t.a_lm(ll.mul(la, lb), mp1)),
    ];

    Ok(Equation { group: mm.clone(), lhs, rhs })
}
