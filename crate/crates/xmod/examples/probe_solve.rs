use std::sync::Arc;
use xmod::crossed::TwoCrossedModule;
use xmod::from2cm::three_crossed_from_two;
use xmod::group::{FiniteGroup, GroupAction, GroupHom, Lifting2};
use xmod::simplicial::*;

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let z3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
    let one = Arc::new(FiniteGroup::trivial());
    let a3: Vec<usize> = s3.elements().filter(|&x| {
        let x2 = s3.mul(x, x);
        s3.mul(x2, x) == s3.identity()
    }).collect();
    let w = TwoCrossedModule::new(
        z3.clone(), s3.clone(), one.clone(),
        GroupHom::new(z3.clone(), s3.clone(), a3.clone()).unwrap(),
        GroupHom::zero(s3.clone(), one.clone()),
        GroupAction::trivial(one.clone(), s3.clone()),
        GroupAction::trivial(one.clone(), z3.clone()),
        GroupAction::from_fn(s3.clone(), z3.clone(), {
            let s3 = s3.clone(); let a3 = a3.clone();
            move |b, c| a3.iter().position(|&y| y == s3.conj(b, a3[c])).unwrap()
        }).unwrap(),
        Lifting2::from_fn(s3.clone(), s3.clone(), z3.clone(), {
            let s3 = s3.clone(); let a3 = a3.clone();
            move |b2, b1| a3.iter().position(|&y| y == s3.commutator(b2, b1)).unwrap()
        }).unwrap(),
    ).unwrap();
    let t = Arc::new(three_crossed_from_two(&w).unwrap());
    let st = Structure::Three(t.clone());
    let nh = t.h.order();
    let quads = strict_tuples::<4>(5);
    let fives = strict_tuples::<5>(5);
    let triples = strict_tuples::<3>(5);

    let mut rng: u64 = 0x5551212;
    let mut rand = move |m: usize| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((rng >> 33) as usize) % m };

    let mut cases: Vec<LabelSet> = Vec::new();
    'outer: while cases.len() < 700 {
        let mut labels = LabelSet::default();
        for e in strict_tuples::<2>(5) { labels.g.insert(e, 0); }
        for tr in &triples { labels.h.insert(*tr, rand(nh)); }
        for q4 in &quads {
            let [i, j, k, p] = *q4;
            let h = |a: u8, b: u8, c: u8| labels.h_at(&st, [a, b, c]).unwrap();
            let b_part = t.h.mul(
                t.h.mul(h(i, j, p), h(j, k, p)),
                t.h.mul(t.h.inv(h(i, j, k)), t.h.inv(h(i, k, p))),
            );
            labels.l.insert(*q4, rand(t.m.order()) * nh + b_part);
        }
        for t5 in &fives {
            let mut tmp = labels.clone();
            tmp.m.insert(*t5, t.m.identity());
            let eq = cond_equation_c(&st, &tmp, *t5).unwrap();
            let (rest, rhs) = eq.sides(&st, &tmp).unwrap();
            let want_dm = t.l.mul(rhs, t.l.inv(rest));
            match (0..t.m.order()).find(|&m| t.d_ml.apply(m) == want_dm) {
                Some(m) => { labels.m.insert(*t5, m); }
                None => continue 'outer,
            }
        }
        cases.push(labels);
    }
    println!("{} cases", cases.len());

    // feature terms: LL(first, ^{W} payload^{±1}) and HL/HL'(htriple, ^{W} payload^{±1})
    // payloads: l_kpqx, l_ijkp
    let payloads: [[u8;4];2] = [[2,3,4,5],[0,1,2,3]];
    let twist_words: Vec<(String, Box<dyn Fn(&LabelSet) -> usize>)> = {
        let mut v: Vec<(String, Box<dyn Fn(&LabelSet) -> usize>)> = Vec::new();
        v.push(("e".into(), Box::new(|_| 0)));
        for tr in strict_tuples::<3>(5) {
            let stc = st.clone();
            v.push((format!("h{:?}", tr), Box::new(move |lab: &LabelSet| lab.h_at(&stc, tr).unwrap())));
        }
        // a few products
        let stc = st.clone(); let tc = t.clone();
        v.push(("h025*h012".into(), Box::new(move |lab| tc.h.mul(lab.h_at(&stc, [0,2,5]).unwrap(), lab.h_at(&stc, [0,1,2]).unwrap()))));
        let stc = st.clone(); let tc = t.clone();
        v.push(("h245*h234".into(), Box::new(move |lab| tc.h.mul(lab.h_at(&stc, [2,4,5]).unwrap(), lab.h_at(&stc, [2,3,4]).unwrap()))));
        let stc = st.clone(); let tc = t.clone();
        v.push(("h035*h345".into(), Box::new(move |lab| tc.h.mul(lab.h_at(&stc, [0,3,5]).unwrap(), lab.h_at(&stc, [3,4,5]).unwrap()))));
        let stc = st.clone(); let tc = t.clone();
        v.push(("h023*h012".into(), Box::new(move |lab| tc.h.mul(lab.h_at(&stc, [0,2,3]).unwrap(), lab.h_at(&stc, [0,1,2]).unwrap()))));
        v
    };

    struct Feature { name: String, eval: Box<dyn Fn(&LabelSet) -> i64> }
    // difference features: term(^{W}payload) - term(payload), for LL/HL/HL'
    let mut feats: Vec<Feature> = Vec::new();
    let n_twists = twist_words.len();
    for pay in payloads {
        for inv in [false, true] {
            for wi in 1..n_twists {
                let wname = twist_words[wi].0.clone();
                for fq in quads.iter() {
                    let (stc, tc, fq2, wn) = (st.clone(), t.clone(), *fq, wname.clone());
                    feats.push(Feature {
                        name: format!("dLL[{:?}; ^{{{}}} vs e; l{:?}{}]", fq2, wn, pay, if inv {"^-1"} else {""}),
                        eval: Box::new(move |lab| {
                            let wv = eval_twist(&stc, &tc, lab, wi);
                            let mut lv = lab.l_at(&stc, pay).unwrap();
                            if inv { lv = tc.l.inv(lv); }
                            let a_tw = tc.act_h_l.act(wv, lv);
                            let first = lab.l_at(&stc, fq2).unwrap();
                            (tc.ll.get(first, a_tw) as i64) - (tc.ll.get(first, lv) as i64)
                        }),
                    });
                }
                for ft in triples.iter() {
                    for prime in [false, true] {
                        let (stc, tc, ft2, wn) = (st.clone(), t.clone(), *ft, wname.clone());
                        feats.push(Feature {
                            name: format!("d{}[h{:?}; ^{{{}}} vs e; l{:?}{}]", if prime {"HL'"} else {"HL"}, ft2, wn, pay, if inv {"^-1"} else {""}),
                            eval: Box::new(move |lab| {
                                let wv = eval_twist(&stc, &tc, lab, wi);
                                let mut lv = lab.l_at(&stc, pay).unwrap();
                                if inv { lv = tc.l.inv(lv); }
                                let a_tw = tc.act_h_l.act(wv, lv);
                                let hv = lab.h_at(&stc, ft2).unwrap();
                                let g = |x: usize| if prime { tc.hl_prime.get(hv, x) } else { tc.hl.get(hv, x) } as i64;
                                g(a_tw) - g(lv)
                            }),
                        });
                    }
                }
            }
        }
    }
    println!("{} diff-features", feats.len());

    // build system: precompute feature matrix, search sparse solutions
    let defect = |lab: &LabelSet| -> i64 {
        let eq = cond_equation_d(&st, lab, [0,1,2,3,4,5]).unwrap();
        let (l, r) = eq.sides(&st, lab).unwrap();
        ((l as i64) - (r as i64)).rem_euclid(3)
    };
    let nf = feats.len();
    let nc = cases.len();
    let mut fm: Vec<Vec<u8>> = vec![vec![0; nc]; nf];
    for (fi, f) in feats.iter().enumerate() {
        for (ci, lab) in cases.iter().enumerate() {
            fm[fi][ci] = ((f.eval)(lab)).rem_euclid(3) as u8;
        }
    }
    let d: Vec<u8> = cases.iter().map(|lab| (defect(lab).rem_euclid(3)) as u8).collect();
    println!("searching singles...");
    let mut found = 0;
    for f1 in 0..nf {
        for s1 in [1u8, 2] {
            if (0..nc).all(|c| (d[c] + s1 * fm[f1][c]) % 3 == 0) {
                println!("SINGLE: {} x{}", feats[f1].name, s1);
                found += 1;
            }
        }
    }
    if found == 0 {
        println!("searching pairs...");
        'pairs: for f1 in 0..nf {
            // skip features that are identically zero
            if fm[f1].iter().all(|&v| v == 0) { continue; }
            for s1 in [1u8, 2] {
                // residual after f1
                let r1: Vec<u8> = (0..nc).map(|c| (d[c] + s1 * fm[f1][c]) % 3).collect();
                if r1.iter().all(|&v| v == 0) { continue; }
                for f2 in f1 + 1..nf {
                    for s2 in [1u8, 2] {
                        // quick check on first 12 cases
                        if (0..12.min(nc)).any(|c| (r1[c] + s2 * fm[f2][c]) % 3 != 0) { continue; }
                        if (0..nc).all(|c| (r1[c] + s2 * fm[f2][c]) % 3 == 0) {
                            println!("PAIR: {} x{}  +  {} x{}", feats[f1].name, s1, feats[f2].name, s2);
                            found += 1;
                            if found > 20 { break 'pairs; }
                        }
                    }
                }
            }
        }
    }
    println!("done, {} solutions", found);
}

fn eval_twist(st: &Structure, t: &xmod::crossed::ThreeCrossedModule, lab: &LabelSet, wi: usize) -> usize {
    let trips = strict_tuples::<3>(5);
    match wi {
        0 => t.h.identity(),
        i if i >= 1 && i <= trips.len() => lab.h_at(st, trips[i - 1]).unwrap(),
        i if i == trips.len() + 1 => t.h.mul(lab.h_at(st, [0,2,5]).unwrap(), lab.h_at(st, [0,1,2]).unwrap()),
        i if i == trips.len() + 2 => t.h.mul(lab.h_at(st, [2,4,5]).unwrap(), lab.h_at(st, [2,3,4]).unwrap()),
        i if i == trips.len() + 3 => t.h.mul(lab.h_at(st, [0,3,5]).unwrap(), lab.h_at(st, [3,4,5]).unwrap()),
        _ => t.h.mul(lab.h_at(st, [0,2,3]).unwrap(), lab.h_at(st, [0,1,2]).unwrap()),
    }
}
