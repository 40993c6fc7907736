use std::sync::Arc;
use xmod::crossed::TwoCrossedModule;
use xmod::from2cm::three_crossed_from_two;
use xmod::group::{FiniteGroup, GroupAction, GroupHom, Lifting2};
use xmod::horns::Horn;
use xmod::simplicial::*;

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let z3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
    let one = Arc::new(FiniteGroup::trivial());
    let a3: Vec<usize> = s3.elements().filter(|&x| {
        let x2 = s3.mul(x, x);
        s3.mul(x2, x) == s3.identity()
    }).collect();
    let into_s3 = |c: usize| a3[c];
    let from_s3 = |x: usize| a3.iter().position(|&y| y == x).unwrap();
    let w = TwoCrossedModule::new(
        z3.clone(), s3.clone(), one.clone(),
        GroupHom::new(z3.clone(), s3.clone(), a3.clone()).unwrap(),
        GroupHom::zero(s3.clone(), one.clone()),
        GroupAction::trivial(one.clone(), s3.clone()),
        GroupAction::trivial(one.clone(), z3.clone()),
        GroupAction::from_fn(s3.clone(), z3.clone(), |b, c| from_s3(s3.conj(b, into_s3(c)))).unwrap(),
        Lifting2::from_fn(s3.clone(), s3.clone(), z3.clone(), |b2, b1| from_s3(s3.commutator(b2, b1))).unwrap(),
    ).unwrap();
    let t = Arc::new(three_crossed_from_two(&w).unwrap());
    let st = Structure::Three(t.clone());

    // gather failing cases with factor dumps; M = Z3 additive
    let lhs_names = ["M5", "M4", "M3", "M2m", "M1m"];
    let rhs_names = ["M'13", "M'12m", "M'11", "M'10", "M'9", "M'8m", "M'7", "M'6", "M'5", "M'4", "M'3m", "M'2m", "M'1"];
    let mut fails: Vec<(Vec<usize>, Vec<usize>, i64)> = Vec::new();
    for j in 1..5usize {
        let space = LabelSpace::new(st.clone(), 5, SpaceKind::Horn { j }, EnumMode::Structured);
        for labels in space.sample_many(31 + j as u64, 40) {
            let horn = Horn::new(st.clone(), 5, j, labels.clone()).unwrap();
            if !horn.check().ok() { continue; }
            let face: Vec<u8> = (0..=5u8).filter(|&v| v as usize != j).collect();
            let ft: [u8; 5] = face.try_into().unwrap();
            let mut tmp = labels.clone();
            tmp.m.insert(ft, t.m.identity());
            let eq_c = cond_equation_c(&st, &tmp, ft).unwrap();
            let (rest, rhs) = eq_c.sides(&st, &tmp).unwrap();
            let want_dm = t.l.mul(rhs, t.l.inv(rest));
            let Some(m_true) = (0..t.m.order()).find(|&m| t.d_ml.apply(m) == want_dm) else { continue };
            let mut full = labels.clone();
            full.m.insert(ft, m_true);
            let eq = cond_equation_d(&st, &full, [0,1,2,3,4,5]).unwrap();
            let (lv, rv) = eq.factor_values(&st, &full).unwrap();
            let (l, r) = eq.sides(&st, &full).unwrap();
            if l != r {
                let delta = ((l as i64) - (r as i64)).rem_euclid(3);
                fails.push((lv, rv, delta));
            }
        }
    }
    println!("{} failing cases", fails.len());
    for (lv, rv, d) in fails.iter().take(6) {
        print!("delta={d} LHS:");
        for (n, v) in lhs_names.iter().zip(lv) { if *v != 0 { print!(" {n}={v}"); } }
        print!("  RHS:");
        for (n, v) in rhs_names.iter().zip(rv) { if *v != 0 { print!(" {n}={v}"); } }
        println!();
    }
    // single-factor corrections: does negating factor f (or zeroing it) fix ALL cases?
    for (side, names, count) in [(0, &lhs_names[..], 5), (1, &rhs_names[..], 13)] {
        for fi in 0..count {
            let mut fix_neg = true;
            let mut fix_zero = true;
            let mut fix_double = true;
            for (lv, rv, _) in &fails {
                let v = if side == 0 { lv[fi] } else { rv[fi] } as i64;
                let l: i64 = lv.iter().map(|&x| x as i64).sum();
                let r: i64 = rv.iter().map(|&x| x as i64).sum();
                // adjust the chosen factor on its side
                let (l2n, r2n) = if side == 0 { (l - 2*v, r) } else { (l, r - 2*v) };
                let (l2z, r2z) = if side == 0 { (l - v, r) } else { (l, r - v) };
                let (l2d, r2d) = if side == 0 { (l + v, r) } else { (l, r + v) };
                if (l2n - r2n).rem_euclid(3) != 0 { fix_neg = false; }
                if (l2z - r2z).rem_euclid(3) != 0 { fix_zero = false; }
                if (l2d - r2d).rem_euclid(3) != 0 { fix_double = false; }
            }
            if fix_neg { println!("NEGATING {} fixes all", names[fi]); }
            if fix_zero { println!("ZEROING {} fixes all", names[fi]); }
            if fix_double { println!("DOUBLING {} fixes all", names[fi]); }
        }
    }
}
