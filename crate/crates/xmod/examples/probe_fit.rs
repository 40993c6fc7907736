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

    let mut rng: u64 = 0xabcdef;
    let mut rand = move |m: usize| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((rng >> 33) as usize) % m };

    let mut cases: Vec<LabelSet> = Vec::new();
    'outer: while cases.len() < 400 {
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

    let [i, j, k, p, q, x] = [0u8, 1, 2, 3, 4, 5];
    let hat = |lab: &LabelSet, a: u8, b: u8, c: u8| lab.h_at(&st, [a, b, c]).unwrap();
    let lat = |lab: &LabelSet, a: u8, b: u8, c: u8, d: u8| lab.l_at(&st, [a, b, c, d]).unwrap();

    // carriers for c_kpqx: variants of the conjugation word of l_kpqx by ^{h_ijk}
    let carrier1 = |lab: &LabelSet, variant: usize| -> usize {
        let h_ijk = hat(lab, i, j, k);
        let l_kpqx = lat(lab, k, p, q, x);
        let hh_w = t.h.mul(hat(lab, k, q, x), hat(lab, k, p, q));
        let v = t.act_h_l.act(h_ijk, l_kpqx);
        match variant {
            0 => t.l.mul(v, t.l.inv(l_kpqx)),                                         // ^{h}l * l^{-1}
            1 => t.l.mul(t.l.mul(v, t.l.inv(t.peiffer.get(hh_w, h_ijk))), t.l.inv(l_kpqx)), // with pf
            2 => t.l.mul(l_kpqx, t.l.inv(v)),                                         // l * (^{h}l)^{-1}
            _ => t.l.inv(t.l.mul(v, t.l.inv(l_kpqx))),
        }
    };
    let carrier2 = |lab: &LabelSet, variant: usize| -> usize {
        let l_ijkp = lat(lab, i, j, k, p);
        let h_pqx = hat(lab, p, q, x);
        let v7 = t.act_h_l.act(h_pqx, l_ijkp);
        match variant {
            0 => t.l.mul(l_ijkp, t.l.inv(v7)),
            1 => {
                let hk = t.h.mul(hat(lab, i, k, p), hat(lab, i, j, k));
                t.l.mul(t.l.mul(l_ijkp, t.l.inv(t.peiffer.get(h_pqx, hk))), t.l.inv(v7))
            }
            2 => t.l.mul(v7, t.l.inv(l_ijkp)),
            _ => t.l.inv(t.l.mul(l_ijkp, t.l.inv(v7))),
        }
    };

    let defect = |lab: &LabelSet| -> i64 {
        let eq = cond_equation_d(&st, lab, [0,1,2,3,4,5]).unwrap();
        let (l, r) = eq.sides(&st, lab).unwrap();
        ((l as i64) - (r as i64)).rem_euclid(3)
    };
    let defects: Vec<i64> = cases.iter().map(defect).collect();

    // HL / HL' lifting candidates
    let harg1_opts = [(i, k, x), (k, q, x), (i, j, k)];
    let harg2_opts = [(i, p, x), (p, q, x), (i, j, p)];
    for kind1 in 0..2 {
        for (a1, h1t) in harg1_opts.iter().enumerate() {
            for v1 in 0..4 {
                for s1 in [1i64, 2] {
                    for kind2 in 0..2 {
                        for (a2, h2t) in harg2_opts.iter().enumerate() {
                            for v2 in 0..4 {
                                for s2 in [1i64, 2] {
                                    let ok = cases.iter().zip(&defects).all(|(lab, &d)| {
                                        let h1 = hat(lab, h1t.0, h1t.1, h1t.2);
                                        let h2 = hat(lab, h2t.0, h2t.1, h2t.2);
                                        let c1 = carrier1(lab, v1);
                                        let c2 = carrier2(lab, v2);
                                        let t1 = if kind1 == 0 { t.hl.get(h1, c1) } else { t.hl_prime.get(h1, c1) } as i64;
                                        let t2 = if kind2 == 0 { t.hl.get(h2, c2) } else { t.hl_prime.get(h2, c2) } as i64;
                                        (d + s1 * t1 + s2 * t2).rem_euclid(3) == 0
                                    });
                                    if ok {
                                        println!("FIT kind1={kind1} h1={:?} v1={v1} s1={s1} | kind2={kind2} h2={:?} v2={v2} s2={s2}", harg1_opts[a1], harg2_opts[a2]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    println!("done");
}
