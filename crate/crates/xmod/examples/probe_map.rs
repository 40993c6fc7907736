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
    let transposition = 1usize; // [0,2,1]

    // builds the labeling for active h-map and c-vector; returns None if some m has no preimage
    let build = |hmap: &dyn Fn(&[u8;3]) -> usize, cvec: &dyn Fn(&[u8;4]) -> usize| -> Option<LabelSet> {
        let mut labels = LabelSet::default();
        for e in strict_tuples::<2>(5) { labels.g.insert(e, 0); }
        for tr in &triples { labels.h.insert(*tr, hmap(tr)); }
        for q4 in &quads {
            let [i, j, k, p] = *q4;
            let h = |a: u8, b: u8, c: u8| labels.h_at(&st, [a, b, c]).unwrap();
            let b_part = t.h.mul(
                t.h.mul(h(i, j, p), h(j, k, p)),
                t.h.mul(t.h.inv(h(i, j, k)), t.h.inv(h(i, k, p))),
            );
            labels.l.insert(*q4, cvec(q4) * nh + b_part);
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

    let defect = |labels: &LabelSet| -> i64 {
        let eq = cond_equation_d(&st, labels, [0,1,2,3,4,5]).unwrap();
        let (l, r) = eq.sides(&st, labels).unwrap();
        ((l as i64) - (r as i64)).rem_euclid(3)
    };

    // for each pair of triples (both transpositions), coefficient of each c_X:
    // defect is linear in each c (fixed h's): coeff op determined by values at c=1,2
    println!("pair -> nonzero defect coefficients (cX: d(c=1),d(c=2))");
    for (a, t1) in triples.iter().enumerate() {
        for t2 in triples.iter().skip(a + 1) {
            let hmap = |tr: &[u8;3]| if tr == t1 || tr == t2 { transposition } else { 0 };
            // baseline: all c zero
            let Some(base) = build(&hmap, &|_| 0) else { continue };
            let d0 = defect(&base);
            let mut entries = Vec::new();
            for q4 in &quads {
                let mut coeffs = Vec::new();
                for cval in [1usize, 2] {
                    let cq = *q4;
                    let Some(lab) = build(&hmap, &move |x: &[u8;4]| if *x == cq { cval } else { 0 }) else { continue };
                    coeffs.push((defect(&lab) - d0).rem_euclid(3));
                }
                if coeffs.iter().any(|&v| v != 0) {
                    entries.push(format!("c{:?}:{:?}", q4, coeffs));
                }
            }
            if d0 != 0 || !entries.is_empty() {
                println!("h{:?} h{:?} d0={} | {}", t1, t2, d0, entries.join(" "));
            }
        }
    }
}
