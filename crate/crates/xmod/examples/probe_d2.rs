use std::sync::Arc;
use xmod::crossed::ll_two_crossed_view;
use xmod::from2cm::{inner_two_crossed, three_crossed_from_two};
use xmod::group::FiniteGroup;
use xmod::horns::*;
use xmod::simplicial::*;

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let ts3 = Arc::new(three_crossed_from_two(&inner_two_crossed(s3)).unwrap());

    // 1. clear condition (c) with nontrivial g-twists: the ll-view 2cm has |G|=36... wait view g:=L of 3cm? no: view of T: g := T.h (order 6), h := T.l (36), l := T.m (6); nontrivial actions everywhere.
    let view = Arc::new(ll_two_crossed_view(&ts3));
    println!("view orders: g={} h={} l={}", view.g.order(), view.h.order(), view.l.order());
    let stv = Structure::Two(view);
    for j in [1usize, 2, 3] {
        let space = LabelSpace::new(stv.clone(), 4, SpaceKind::Horn { j }, EnumMode::Structured);
        let mut ok = 0; let mut bad = 0;
        for labels in space.sample_many(5 + j as u64, 15) {
            let horn = Horn::new(stv.clone(), 4, j, labels).unwrap();
            match fill_inner_horn(&horn) {
                Ok(sx) => { let r = verify_filler(&horn, &sx); if r.ok() { ok += 1 } else { bad += 1; if bad == 1 { println!("  {:?}", r.violations.first()); } } }
                Err(e) => { bad += 1; println!("  fill err: {e}"); }
            }
        }
        println!("ll-view 2cm n=4 j={j}: ok {ok} bad {bad}");
    }

    // 2. degenerate-(d) probe: valid 4-simplices over the S3 lift via horn fill,
    //    then check every weak 6-tuple (d)-instance individually.
    let st3 = Structure::Three(ts3.clone());
    let space = LabelSpace::new(st3.clone(), 4, SpaceKind::Horn { j: 2 }, EnumMode::Structured);
    let mut tested = 0;
    let mut failing: std::collections::BTreeMap<Vec<u8>, usize> = Default::default();
    for labels in space.sample_many(1234, 10) {
        let horn = Horn::new(st3.clone(), 4, 2, labels).unwrap();
        let sx = match fill_inner_horn(&horn) { Ok(s) => s, Err(e) => { println!("fill err {e}"); continue } };
        // validate (a),(b),(c) only
        let rep = check_colored(&sx);
        let abc_ok = rep.violations.iter().all(|v| v.law.starts_with("cond.d"));
        if !abc_ok { println!("unexpected abc violation: {:?}", rep.violations.first()); continue; }
        tested += 1;
        for t in weak_tuples::<6>(4) {
            let eq = cond_equation_d(&st3, &sx.labels, t).unwrap();
            if !eq.check(&st3, &sx.labels).unwrap() {
                *failing.entry(t.to_vec()).or_default() += 1;
            }
        }
    }
    println!("degenerate-(d) over {} valid 4-simplices; failing patterns:", tested);
    for (t, c) in failing { println!("  {:?}: {}", t, c); }
}
