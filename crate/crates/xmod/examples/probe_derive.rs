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
    let cv = |x: usize, a3: &Vec<usize>| a3.iter().position(|&y| y == x).unwrap();
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
    let _ = cv;
    let t = Arc::new(three_crossed_from_two(&w).unwrap());
    let st = Structure::Three(t.clone());
    let nh = t.h.order();
    let quads = strict_tuples::<4>(5);
    let fives = strict_tuples::<5>(5);
    let triples = strict_tuples::<3>(5);

    let mut rng: u64 = 0xfeed;
    let mut rand = move |m: usize| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((rng >> 33) as usize) % m };

    let mut cases: Vec<LabelSet> = Vec::new();
    'outer: while cases.len() < 500 {
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

    // verify the reduced-world derivation:
    //   sum_w eps_w ^{mu_w} m_w  ==  R1 + R2 + R3 + K   (additively in Z3)
    let mut bad = 0;
    for lab in &cases {
        let h3 = |a: u8, b: u8, c: u8| lab.h_at(&st, [a, b, c]).unwrap();
        let l4 = |a: u8, b: u8, c: u8, d: u8| lab.l_at(&st, [a, b, c, d]).unwrap();
        let m5 = |a: u8, b: u8, c: u8, d: u8, e: u8| lab.m_at(&st, [a, b, c, d, e]).unwrap();
        let act = |hh: usize, m: usize| t.act_h_m.act(hh, m);      // ^h on M (b-part conj)
        let actl = |lv: usize, m: usize| {
            // reduced ^{dl}-action on M = act of the B-part of l = act_h_m(dl(l))
            t.act_h_m.act(t.d_lh.apply(lv), m)
        };
        let kap = |x: usize, y: usize| {
            // kappa = C-part of peiffer of two H elements
            let v = t.peiffer.get(x, y);
            v / nh // C-part index (L = C x B, c*nh + b)
        };
        let madd = |a: usize, b: usize| t.m.mul(a, b);
        let minv = |a: usize| t.m.inv(a);

        // m-part: -^{h015}m0 + m1 - m2 + m3 - m4 + ^{h045}m5
        let m_part = {
            let mut acc = t.m.identity();
            acc = madd(acc, minv(act(h3(0,1,5), m5(1,2,3,4,5))));
            acc = madd(acc, m5(0,2,3,4,5));
            acc = madd(acc, minv(m5(0,1,3,4,5)));
            acc = madd(acc, m5(0,1,2,4,5));
            acc = madd(acc, minv(m5(0,1,2,3,5)));
            acc = madd(acc, act(h3(0,4,5), m5(0,1,2,3,4)));
            acc
        };
        // R1 = ^{dl0125}(^{h025 h012}c2345) - ^{h025}c2345 ; c-part of l via m-embedding:
        // represent "c_X" as the M-element with that C index: c = l4(X)/nh
        let cpart = |lv: usize| lv / nh;
        let r1 = {
            let c = cpart(l4(2,3,4,5));
            let tw = t.h.mul(h3(0,2,5), h3(0,1,2));
            madd(actl(l4(0,1,2,5), act(tw, c)), minv(act(h3(0,2,5), c)))
        };
        let r2 = {
            let c = cpart(l4(1,2,3,4));
            let tw = t.h.mul(h3(0,4,5), h3(0,1,4));
            madd(actl(l4(0,1,4,5), act(tw, c)), minv(act(tw, c)))
        };
        let r3 = {
            let c = cpart(l4(0,1,2,3));
            let tw = t.h.mul(h3(0,4,5), h3(0,3,4));
            let inner = act(tw, act(t.h.inv(h3(3,4,5)), c));
            madd(actl(l4(0,3,4,5), inner), minv(act(tw, c)))
        };
        // K = -^{h045 h024}kap(h234,h012) + ^{h025}kap(h235,h012) - ^{h025}kap(h245,h012)
        //     + ^{h035}kap(h345,h013) - ^{h035}kap(h345,h023) + ^{h015 h135}kap(h345,h123)
        let k_part = {
            let mut acc = t.m.identity();
            acc = madd(acc, minv(act(t.h.mul(h3(0,4,5), h3(0,2,4)), kap(h3(2,3,4), h3(0,1,2)))));
            acc = madd(acc, act(h3(0,2,5), kap(h3(2,3,5), h3(0,1,2))));
            acc = madd(acc, minv(act(h3(0,2,5), kap(h3(2,4,5), h3(0,1,2)))));
            acc = madd(acc, act(h3(0,3,5), kap(h3(3,4,5), h3(0,1,3))));
            acc = madd(acc, minv(act(h3(0,3,5), kap(h3(3,4,5), h3(0,2,3)))));
            acc = madd(acc, act(t.h.mul(h3(0,1,5), h3(1,3,5)), kap(h3(3,4,5), h3(1,2,3))));
            acc
        };
        let rhs = madd(madd(madd(r1, r2), r3), k_part);
        if m_part != rhs { bad += 1; }
    }
    println!("derivation check: {} bad of {}", bad, cases.len());
}
