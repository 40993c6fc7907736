use std::sync::Arc;
use xmod::crossed::TwoCrossedModule;
use xmod::from2cm::three_crossed_from_two;
use xmod::group::{FiniteGroup, GroupAction, GroupHom, Lifting2};
use xmod::simplicial::*;

fn build() -> (Structure, Arc<xmod::crossed::ThreeCrossedModule>) {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let z3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
    let one = Arc::new(FiniteGroup::trivial());
    let a3: Vec<usize> = s3.elements().filter(|&x| {
        let x2 = s3.mul(x, x);
        s3.mul(x2, x) == s3.identity()
    }).collect();
    let into_s3 = {
        let a3 = a3.clone();
        move |c: usize| a3[c]
    };
    let from_s3 = {
        let a3 = a3.clone();
        move |x: usize| a3.iter().position(|&y| y == x).unwrap()
    };
    let w = TwoCrossedModule::new(
        z3.clone(), s3.clone(), one.clone(),
        GroupHom::new(z3.clone(), s3.clone(), a3.clone()).unwrap(),
        GroupHom::zero(s3.clone(), one.clone()),
        GroupAction::trivial(one.clone(), s3.clone()),
        GroupAction::trivial(one.clone(), z3.clone()),
        GroupAction::from_fn(s3.clone(), z3.clone(), {
            let s3 = s3.clone(); let into = into_s3.clone(); let from = from_s3.clone();
            move |b, c| from(s3.conj(b, into(c)))
        }).unwrap(),
        Lifting2::from_fn(s3.clone(), s3.clone(), z3.clone(), {
            let s3 = s3.clone(); let from = from_s3.clone();
            move |b2, b1| from(s3.commutator(b2, b1))
        }).unwrap(),
    ).unwrap();
    let t = Arc::new(three_crossed_from_two(&w).unwrap());
    (Structure::Three(t.clone()), t)
}

fn main() {
    let (st, t) = build();
    let triples = strict_tuples::<3>(5);
    let quads = strict_tuples::<4>(5);
    let fives = strict_tuples::<5>(5);
    let nh = t.h.order();

    let mut rng: u64 = 0x12345;
    let mut rand = move |m: usize| { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((rng >> 33) as usize) % m };

    // ablation: a set of active h triples with values, c-parts random
    let mut run_config = |active: &[( [u8;3], usize )], tries: usize| -> (usize, usize) {
        let mut pass = 0; let mut fail = 0;
        for _ in 0..tries {
            let mut labels = LabelSet::default();
            for e in strict_tuples::<2>(5) { labels.g.insert(e, 0); }
            for tr in &triples {
                let v = active.iter().find(|(a, _)| a == tr).map(|(_, v)| *v).unwrap_or(t.h.identity());
                labels.h.insert(*tr, v);
            }
            // l: B-part forced by (b): b = h_ijp h_jkp h_ijk^{-1} h_ikp^{-1} (H = S3 here since A=1)
            let mut ok = true;
            for q4 in &quads {
                let [i, j, k, p] = *q4;
                let h = |a: u8, b: u8, c: u8| labels.h_at(&st, [a, b, c]).unwrap();
                let b_part = t.h.mul(
                    t.h.mul(h(i, j, p), h(j, k, p)),
                    t.h.mul(t.h.inv(h(i, j, k)), t.h.inv(h(i, k, p))),
                );
                // l index = c * |B| + b with |B| = nh (since L = C x B, B ~ H)
                let c_part = rand(t.m.order());
                labels.l.insert(*q4, c_part * nh + b_part);
            }
            // verify (b) holds (sanity), then solve each m from (c)
            for t5 in &fives {
                let mut tmp = labels.clone();
                tmp.m.insert(*t5, t.m.identity());
                let eq = cond_equation_c(&st, &tmp, *t5).unwrap();
                let (rest, rhs) = eq.sides(&st, &tmp).unwrap();
                let want_dm = t.l.mul(rhs, t.l.inv(rest));
                match (0..t.m.order()).find(|&m| t.d_ml.apply(m) == want_dm) {
                    Some(m) => { labels.m.insert(*t5, m); }
                    None => { ok = false; break; }
                }
            }
            if !ok { continue; }
            let sx = ColoredSimplex { structure: st.clone(), dim: 5, labels: labels.clone() };
            let rep = check_colored(&sx);
            let d_fails: Vec<_> = rep.violations.iter().filter(|v| v.law == "cond.d").collect();
            let abc_fails = rep.violations.iter().any(|v| v.law != "cond.d");
            if abc_fails { continue; }
            if d_fails.is_empty() { pass += 1 } else { fail += 1 }
        }
        (pass, fail)
    };

    println!("== single active h ==");
    for tr in &triples {
        let (p, f) = run_config(&[(*tr, 1)], 6);
        let (p2, f2) = run_config(&[(*tr, 3)], 6); // a transposition-like value too
        if f + f2 > 0 { println!("h{:?}: v1 {}P/{}F v3 {}P/{}F", tr, p, f, p2, f2); }
    }
    println!("(unlisted single-h configs all pass)");
    println!("== pairs involving early failures (if any) / else all pairs with value 1 ==");
    let mut bad_pairs = 0;
    for (a, tr1) in triples.iter().enumerate() {
        for tr2 in triples.iter().skip(a + 1) {
            let (_, f) = run_config(&[(*tr1, 1), (*tr2, 1)], 4);
            let (_, f3) = run_config(&[(*tr1, 3), (*tr2, 4)], 4);
            if f + f3 > 0 {
                println!("PAIR h{:?} h{:?}: fails {}", tr1, tr2, f + f3);
                bad_pairs += 1;
                if bad_pairs > 25 { return; }
            }
        }
    }
    println!("bad pairs: {bad_pairs}");
}
