//! The 33 checks for a 3-crossed module.
//!
//! Ids follow the definition's list order 1..31; the two items that state
//! one law for two liftings at once (G-equivariance of the Homanians, and of
//! HL/HL') are split into `a`/`b` sub-checks so every lifting's law can fail
//! independently. Check 30 is a three-way equality verified as two pairwise
//! equations under one id. The full id-to-statement table lives in
//! `docs/axioms.md`.

use rayon::prelude::*;

use crate::group::Elem;

use super::{
    scan_axiom, Axiom24Variant, AxiomCheck, AxiomOutcome, AxiomReport, ThreeCrossedModule,
    VerifyOptions,
};

pub fn verify_three_crossed(t: &ThreeCrossedModule) -> AxiomReport {
    verify_three_crossed_with(t, &VerifyOptions::default())
}

pub fn verify_three_crossed_with(t: &ThreeCrossedModule, opts: &VerifyOptions) -> AxiomReport {
    let (nm, nl, nh, ng) = (t.m.order(), t.l.order(), t.h.order(), t.g.order());
    let nmax = nm.max(nl).max(nh);

    type Law<'a> =
        (&'static str, &'static str, Vec<usize>, Box<dyn Fn(&[Elem]) -> bool + Sync + 'a>);

    let laws: Vec<Law> = vec![
        (
            "1",
            "boundaries-are-homomorphisms",
            vec![3, nmax, nmax],
            Box::new(|w| {
                let (case, x, y) = (w[0], w[1], w[2]);
                match case {
                    0 => {
                        x >= nm
                            || y >= nm
                            || t.dm(t.m.mul(x, y)) == t.l.mul(t.dm(x), t.dm(y))
                    }
                    1 => {
                        x >= nl
                            || y >= nl
                            || t.dl(t.l.mul(x, y)) == t.h.mul(t.dl(x), t.dl(y))
                    }
                    _ => {
                        x >= nh
                            || y >= nh
                            || t.dh(t.h.mul(x, y)) == t.g.mul(t.dh(x), t.dh(y))
                    }
                }
            }),
        ),
        (
            "2",
            "boundary-square-zero",
            vec![2, nm.max(nl)],
            Box::new(|w| match w[0] {
                0 => w[1] >= nm || t.dl(t.dm(w[1])) == t.h.identity(),
                _ => w[1] >= nl || t.dh(t.dl(w[1])) == t.g.identity(),
            }),
        ),
        (
            "3",
            "g-equivariance-of-boundaries",
            vec![3, ng, nmax],
            Box::new(|w| {
                let (case, g, x) = (w[0], w[1], w[2]);
                match case {
                    0 => x >= nh || t.dh(t.a_gh(g, x)) == t.g.conj(g, t.dh(x)),
                    1 => x >= nl || t.dl(t.a_gl(g, x)) == t.a_gh(g, t.dl(x)),
                    _ => x >= nm || t.dm(t.a_gm(g, x)) == t.a_gl(g, t.dm(x)),
                }
            }),
        ),
        (
            "4",
            "h-equivariance-of-boundaries",
            vec![2, nh, nl.max(nm)],
            Box::new(|w| {
                let (case, h, x) = (w[0], w[1], w[2]);
                match case {
                    0 => x >= nl || t.dl(t.a_hl(h, x)) == t.h.conj(h, t.dl(x)),
                    _ => x >= nm || t.dm(t.a_hm(h, x)) == t.a_hl(h, t.dm(x)),
                }
            }),
        ),
        (
            "5",
            "l-equivariance-of-boundary",
            vec![nl, nm],
            Box::new(|w| t.dm(t.a_lm(w[0], w[1])) == t.l.conj(w[0], t.dm(w[1]))),
        ),
        (
            "6",
            "peiffer-g-equivariance",
            vec![ng, nh, nh],
            Box::new(|w| {
                t.a_gl(w[0], t.pf(w[1], w[2])) == t.pf(t.a_gh(w[0], w[1]), t.a_gh(w[0], w[2]))
            }),
        ),
        (
            "7a",
            "left-homanian-g-equivariance",
            vec![ng, nh, nh, nh],
            Box::new(|w| {
                let (g, h3, h2, h1) = (w[0], w[1], w[2], w[3]);
                t.a_gm(g, t.lhm(h3, h2, h1))
                    == t.lhm(t.a_gh(g, h3), t.a_gh(g, h2), t.a_gh(g, h1))
            }),
        ),
        (
            "7b",
            "right-homanian-g-equivariance",
            vec![ng, nh, nh, nh],
            Box::new(|w| {
                let (g, h3, h2, h1) = (w[0], w[1], w[2], w[3]);
                t.a_gm(g, t.rhm(h3, h2, h1))
                    == t.rhm(t.a_gh(g, h3), t.a_gh(g, h2), t.a_gh(g, h1))
            }),
        ),
        (
            "8",
            "ll-g-equivariance",
            vec![ng, nl, nl],
            Box::new(|w| {
                t.a_gm(w[0], t.pll(w[1], w[2])) == t.pll(t.a_gl(w[0], w[1]), t.a_gl(w[0], w[2]))
            }),
        ),
        (
            "9",
            "ll-h-equivariance",
            vec![nh, nl, nl],
            Box::new(|w| {
                t.a_hm(w[0], t.pll(w[1], w[2])) == t.pll(t.a_hl(w[0], w[1]), t.a_hl(w[0], w[2]))
            }),
        ),
        (
            "10",
            "dm-acts-by-conjugation",
            vec![nm, nm],
            Box::new(|w| t.a_lm(t.dm(w[0]), w[1]) == t.m.conj(w[0], w[1])),
        ),
        (
            "11",
            "hl-boundary",
            vec![nh, nl],
            Box::new(|w| {
                let (h, l) = (w[0], w[1]);
                t.l.mul(t.dm(t.phl(h, l)), t.a_hl(h, l))
                    == t.l.mul(l, t.pf(t.h.inv(t.dl(l)), h))
            }),
        ),
        (
            "12",
            "hl-prime-boundary",
            vec![nh, nl],
            Box::new(|w| {
                let (h, l) = (w[0], w[1]);
                t.l.mul(t.dm(t.phl_p(h, l)), t.a_gl(t.dh(h), l))
                    == t.l.mul(t.a_hl(h, l), t.pf(h, t.h.inv(t.dl(l))))
            }),
        ),
        (
            "13a",
            "hl-g-equivariance",
            vec![ng, nh, nl],
            Box::new(|w| {
                t.a_gm(w[0], t.phl(w[1], w[2])) == t.phl(t.a_gh(w[0], w[1]), t.a_gl(w[0], w[2]))
            }),
        ),
        (
            "13b",
            "hl-prime-g-equivariance",
            vec![ng, nh, nl],
            Box::new(|w| {
                t.a_gm(w[0], t.phl_p(w[1], w[2]))
                    == t.phl_p(t.a_gh(w[0], w[1]), t.a_gl(w[0], w[2]))
            }),
        ),
        (
            "14",
            "h-action-via-hl",
            vec![nh, nm],
            Box::new(|w| {
                let (h, m) = (w[0], w[1]);
                t.a_hm(h, m) == t.m.mul(m, t.phl(h, t.l.inv(t.dm(m))))
            }),
        ),
        (
            "15",
            "ll-boundary",
            vec![nl, nl],
            Box::new(|w| {
                let (l, lp) = (w[0], w[1]);
                t.l.mul(t.dm(t.pll(l, lp)), t.a_hl(t.dl(l), lp))
                    == t.l.mul(t.l.mul(l, lp), t.l.inv(l))
            }),
        ),
        (
            "16",
            "ll-left-rule",
            vec![nl, nl, nl],
            Box::new(|w| {
                let (l3, l2, l1) = (w[0], w[1], w[2]);
                t.pll(t.l.mul(l3, l2), l1)
                    == t.m.mul(
                        t.a_lm(l3, t.pll(l2, l1)),
                        t.pll(l3, t.a_hl(t.dl(l2), l1)),
                    )
            }),
        ),
        (
            "17",
            "ll-right-rule",
            vec![nl, nl, nl],
            Box::new(|w| {
                let (l3, l2, l1) = (w[0], w[1], w[2]);
                t.pll(l3, t.l.mul(l2, l1))
                    == t.m.mul(
                        t.pll(l3, l2),
                        t.a_lm(t.a_hl(t.dl(l3), l2), t.pll(l3, l1)),
                    )
            }),
        ),
        (
            "18",
            "dh-action-via-hl-prime",
            vec![nh, nm],
            Box::new(|w| {
                let (h, m) = (w[0], w[1]);
                t.a_gm(t.dh(h), m)
                    == t.m.mul(t.a_hm(h, m), t.phl_p(h, t.l.inv(t.dm(m))))
            }),
        ),
        (
            "19",
            "peiffer-left-rule",
            vec![nh, nh, nh],
            Box::new(|w| {
                let (h3, h2, h1) = (w[0], w[1], w[2]);
                t.pf(t.h.mul(h3, h2), h1)
                    == t.l.mul(
                        t.l.mul(t.dm(t.lhm(h3, h2, h1)), t.a_hl(h3, t.pf(h2, h1))),
                        t.pf(h3, t.a_gh(t.dh(h2), h1)),
                    )
            }),
        ),
        (
            "20",
            "peiffer-right-rule",
            vec![nh, nh, nh],
            Box::new(|w| {
                let (h3, h2, h1) = (w[0], w[1], w[2]);
                t.pf(h3, t.h.mul(h2, h1))
                    == t.l.mul(
                        t.l.mul(t.dm(t.rhm(h3, h2, h1)), t.pf(h3, h2)),
                        t.a_hl(t.a_gh(t.dh(h3), h2), t.pf(h3, h1)),
                    )
            }),
        ),
        (
            "21",
            "hl-left-rule",
            vec![nh, nh, nl],
            Box::new(|w| {
                let (h2, h1, l) = (w[0], w[1], w[2]);
                let rhs = t.m.mul(
                    t.m.mul(
                        t.a_lm(l, t.rhm(t.h.inv(t.dl(l)), h2, h1)),
                        t.phl(h2, l),
                    ),
                    t.a_hm(h2, t.phl(h1, l)),
                );
                t.phl(t.h.mul(h2, h1), l) == rhs
            }),
        ),
        (
            "22",
            "hl-right-rule",
            vec![nh, nl, nl],
            Box::new(|w| {
                let (h, l2, l1) = (w[0], w[1], w[2]);
                let l21 = t.l.mul(l2, l1);
                let f1 = t.a_lm(l21, t.lhm(t.h.inv(t.dl(l1)), t.h.inv(t.dl(l2)), h));
                let f2 = t.m.inv(t.a_lm(
                    l21,
                    t.pll(t.l.inv(l1), t.pf(t.h.inv(t.dl(l2)), h)),
                ));
                let f3 = t.phl(h, l2);
                let f4 = t.a_lm(t.a_hl(h, l2), t.phl(h, l1));
                t.phl(h, l21) == t.m.mul(t.m.mul(t.m.mul(f1, f2), f3), f4)
            }),
        ),
        (
            "23",
            "hl-prime-left-rule",
            vec![nh, nh, nl],
            Box::new(|w| {
                let (h2, h1, l) = (w[0], w[1], w[2]);
                let h21 = t.h.mul(h2, h1);
                let f1 = t.a_lm(t.a_hl(h21, l), t.lhm(h2, h1, t.h.inv(t.dl(l))));
                let f2 = t.a_hm(h2, t.phl_p(h1, l));
                let f3 = t.phl_p(h2, t.a_gl(t.dh(h1), l));
                t.phl_p(h21, l) == t.m.mul(t.m.mul(f1, f2), f3)
            }),
        ),
        (
            "24",
            "hl-prime-right-rule",
            vec![nh, nl, nl],
            Box::new(move |w| {
                let (h, l2, l1) = (w[0], w[1], w[2]);
                let l21 = t.l.mul(l2, l1);
                let f1 = t.a_lm(
                    t.a_hl(h, l21),
                    t.rhm(h, t.h.inv(t.dl(l1)), t.h.inv(t.dl(l2))),
                );
                let f2 = t.a_lm(t.a_hl(h, l2), t.phl_p(h, l1));
                let tw = t.l.mul(t.a_hl(h, l2), t.a_gl(t.dh(h), l1));
                let f3 = t.m.inv(t.a_lm(
                    tw,
                    t.pll(t.a_gl(t.dh(h), t.l.inv(l1)), t.pf(h, t.h.inv(t.dl(l2)))),
                ));
                let last = match opts.axiom24 {
                    Axiom24Variant::Verbatim => l1,
                    Axiom24Variant::Swapped => l2,
                };
                let f4 = t.phl_p(h, last);
                t.phl_p(h, l21) == t.m.mul(t.m.mul(t.m.mul(f1, f2), f3), f4)
            }),
        ),
        (
            "25",
            "left-homanian-exchange",
            vec![nh, nh, nh, nh],
            Box::new(|w| {
                let (h4, h3, h2, h1) = (w[0], w[1], w[2], w[3]);
                let h43 = t.h.mul(h4, h3);
                let lhs = t.m.mul(
                    t.lhm(h43, h2, h1),
                    t.a_lm(
                        t.a_hl(h43, t.pf(h2, h1)),
                        t.lhm(h4, h3, t.a_gh(t.dh(h2), h1)),
                    ),
                );
                let rhs = t.m.mul(
                    t.lhm(h4, t.h.mul(h3, h2), h1),
                    t.a_hm(h4, t.lhm(h3, h2, h1)),
                );
                lhs == rhs
            }),
        ),
        (
            "26",
            "right-homanian-exchange",
            vec![nh, nh, nh, nh],
            Box::new(|w| {
                let (h4, h3, h2, h1) = (w[0], w[1], w[2], w[3]);
                let lhs = t.m.mul(t.rhm(h4, t.h.mul(h3, h2), h1), t.rhm(h4, h3, h2));
                let inner = t.a_hm(t.a_gh(t.dh(h4), h3), t.rhm(h4, h2, h1));
                let rhs = t.m.mul(
                    t.rhm(h4, h3, t.h.mul(h2, h1)),
                    t.a_lm(t.pf(h4, h3), inner),
                );
                lhs == rhs
            }),
        ),
        (
            "27",
            "mixed-homanian-exchange",
            vec![nh, nh, nh, nh],
            Box::new(|w| {
                let (h4, h3, h2, h1) = (w[0], w[1], w[2], w[3]);
                let h21 = t.h.mul(h2, h1);
                let h43 = t.h.mul(h4, h3);
                let lhs = {
                    let f1 = t.lhm(h4, h3, h21);
                    let f2 = t.a_lm(
                        t.a_hl(h4, t.pf(h3, h21)),
                        t.rhm(h4, t.a_gh(t.dh(h3), h2), t.a_gh(t.dh(h3), h1)),
                    );
                    let f3 = t.a_hm(h4, t.rhm(h3, h2, h1));
                    t.m.mul(t.m.mul(f1, f2), f3)
                };
                let rhs = {
                    let conj_h2 = t.a_gh(t.dh(h43), h2);
                    let f1 = t.rhm(h43, h2, h1);
                    let f2 =
                        t.a_lm(t.pf(h43, h2), t.a_hm(conj_h2, t.lhm(h4, h3, h1)));
                    let f3 = t.lhm(h4, h3, h2);
                    let f4 = t.a_lm(
                        t.a_hl(h4, t.pf(h3, h2)),
                        t.pll(
                            t.pf(h4, t.a_gh(t.dh(h3), h2)),
                            t.a_hl(t.h.mul(conj_h2, h4), t.pf(h3, h1)),
                        ),
                    );
                    t.m.mul(t.m.mul(t.m.mul(f1, f2), f3), f4)
                };
                lhs == rhs
            }),
        ),
        (
            "28",
            "homanian-peiffer-exchange",
            vec![nh, nh, nh],
            Box::new(|w| {
                let (h3, h2, h1) = (w[0], w[1], w[2]);
                let h21 = t.h.mul(h2, h1);
                let h32 = t.h.mul(h3, h2);
                let p21 = t.pf(h2, h1);
                let p32 = t.pf(h3, h2);
                let lhs = {
                    let inner = t.m.mul(
                        t.m.inv(t.rhm(h3, t.a_gh(t.dh(h2), h1), h2)),
                        t.rhm(h3, t.h.inv(t.dl(p21)), h21),
                    );
                    let f1 = t.a_lm(t.a_hl(h3, p21), inner);
                    let f2 = t.phl_p(h3, p21);
                    let gp = t.a_gl(t.dh(h3), p21);
                    let f3 = t.pll(
                        gp,
                        t.a_hl(t.h.inv(t.dl(gp)), t.pf(h3, h21)),
                    );
                    let f4 = t.rhm(h3, h2, h1);
                    t.m.mul(t.m.mul(t.m.mul(f1, f2), f3), f4)
                };
                let rhs = {
                    let p321 = t.pf(h32, h1);
                    let f1 = t.m.inv(t.lhm(h3, h2, h1));
                    let f2 = t.a_lm(
                        p321,
                        t.m.inv(t.phl(t.a_gh(t.dh(h32), h1), p32)),
                    );
                    let f3 = t.m.inv(t.pll(
                        p32,
                        t.a_hl(t.h.inv(t.dl(p32)), p321),
                    ));
                    let inner = t.m.mul(
                        t.m.inv(t.lhm(t.h.inv(t.dl(p32)), h32, h1)),
                        t.lhm(t.a_gh(t.dh(h3), h2), h3, h1),
                    );
                    let f4 = t.a_lm(p32, inner);
                    t.m.mul(t.m.mul(t.m.mul(f1, f2), f3), f4)
                };
                lhs == rhs
            }),
        ),
        (
            "29",
            "ll-hl-compatibility",
            vec![nl, nl],
            Box::new(|w| {
                let (l, lp) = (w[0], w[1]);
                let lhs = t.m.mul(
                    t.a_lm(l, t.phl(t.dl(lp), t.l.inv(l))),
                    t.a_lm(t.l.commutator(l, lp), t.pll(lp, l)),
                );
                let rhs = t.m.mul(
                    t.a_lm(t.a_hl(t.dl(l), lp), t.phl_p(t.dl(l), t.l.inv(lp))),
                    t.m.inv(t.pll(l, lp)),
                );
                lhs == rhs
            }),
        ),
        (
            "30",
            "boundary-lifting-comparison",
            vec![2, nl, nm],
            Box::new(|w| {
                let (case, l, m) = (w[0], w[1], w[2]);
                let hlv = t.phl(t.dl(l), t.dm(m));
                match case {
                    0 => t.m.mul(t.pll(t.dm(m), l), t.pll(l, t.dm(m))) == hlv,
                    _ => hlv == t.m.inv(t.phl_p(t.dl(l), t.dm(m))),
                }
            }),
        ),
        (
            "31",
            "ll-commutator",
            vec![nm, nm],
            Box::new(|w| t.pll(t.dm(w[0]), t.dm(w[1])) == t.m.commutator(w[0], w[1])),
        ),
    ];

    let checks: Vec<AxiomCheck> = laws
        .into_par_iter()
        .map(|(id, name, domain, holds)| {
            let (violations, witness, sampled) = scan_axiom(&domain, opts.budget, holds);
            AxiomOutcome { id, name, violations, witness, sampled }.into_check()
        })
        .collect();

    AxiomReport { kind: "three_crossed".into(), checks }
}
