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

    let build = |hvals: &dyn Fn(&[u8;3]) -> usize| -> Option<LabelSet> {
        let mut labels = LabelSet::default();
        for e in strict_tuples::<2>(5) { labels.g.insert(e, 0); }
        for tr in &triples { labels.h.insert(*tr, hvals(tr)); }
        for q4 in &quads {
            let [i, j, k, p] = *q4;
            let h = |a: u8, b: u8, c: u8| labels.h_at(&st, [a, b, c]).unwrap();
            let b_part = t.h.mul(
                t.h.mul(h(i, j, p), h(j, k, p)),
                t.h.mul(t.h.inv(h(i, j, k)), t.h.inv(h(i, k, p))),
            );
            labels.l.insert(*q4, 0 * nh + b_part);
        }
        for t5 in &fives {
            let mut tmp = labels.clone();
            tmp.m.insert(*t5, t.m.identity());
            let eq = cond_equation_c(&st, &tmp, *t5).unwrap();
            let (rest, rhs) = eq.sides(&st, &tmp).unwrap();
            let want_dm = t.l.mul(rhs, t.l.inv(rest));
            let m = (0..t.m.order()).find(|&m| t.d_ml.apply(m) == want_dm)?;
            labels.m.insert(*t5, m);
        }
        Some(labels)
    };
    let defect = |lab: &LabelSet| -> i64 {
        let eq = cond_equation_d(&st, lab, [0,1,2,3,4,5]).unwrap();
        let (l, r) = eq.sides(&st, lab).unwrap();
        ((l as i64) - (r as i64)).rem_euclid(3)
    };

    // triples of active h's (transposition value 1 and mixed), c's all zero: pure kappa-level defect
    let mut count = 0;
    for (a, t1) in triples.iter().enumerate() {
        for (b, t2) in triples.iter().enumerate().skip(a + 1) {
            for t3 in triples.iter().skip(b + 1) {
                for vals in [[1usize, 1, 1], [1, 3, 1], [3, 1, 1], [1, 1, 3]] {
                    let hv = |tr: &[u8;3]| -> usize {
                        if tr == t1 { vals[0] } else if tr == t2 { vals[1] } else if tr == t3 { vals[2] } else { 0 }
                    };
                    let Some(lab) = build(&hv) else { continue };
                    let d = defect(&lab);
                    if d != 0 {
                        println!("h{:?}={} h{:?}={} h{:?}={} -> d0={}", t1, vals[0], t2, vals[1], t3, vals[2], d);
                        count += 1;
                        if count > 40 { return; }
                    }
                }
            }
        }
    }
    println!("total nonzero triple-d0: {count}");
}
