use std::sync::Arc;
use xmod::crossed::{verify_two_crossed, TwoCrossedModule};
use xmod::from2cm::{inner_two_crossed, three_crossed_from_two};
use xmod::group::{conjugation_action, FiniteGroup, GroupAction, GroupHom, Lifting2};
use xmod::horns::Horn;
use xmod::simplicial::*;

fn collect_cases(st: &Structure, t: &xmod::crossed::ThreeCrossedModule, per_j: usize)
    -> Vec<(usize, LabelSet, [u8; 5], usize)>
{
    let mut cases = Vec::new();
    for j in 1..5usize {
        let space = LabelSpace::new(st.clone(), 5, SpaceKind::Horn { j }, EnumMode::Structured);
        for labels in space.sample_many(1000 + j as u64, per_j) {
            let horn = Horn::new(st.clone(), 5, j, labels.clone()).unwrap();
            assert!(horn.check().ok());
            let face: Vec<u8> = (0..=5u8).filter(|&v| v as usize != j).collect();
            let ft: [u8; 5] = face.try_into().unwrap();
            let mut tmp = labels.clone();
            tmp.m.insert(ft, t.m.identity());
            let eq = cond_equation_c(st, &tmp, ft).unwrap();
            let (rest, rhs) = eq.sides(st, &tmp).unwrap();
            let want_dm = t.l.mul(rhs, t.l.inv(rest));
            match (0..t.m.order()).find(|&m| t.d_ml.apply(m) == want_dm) {
                Some(m_true) => cases.push((j, labels, ft, m_true)),
                None => println!("  j={j}: required dm has no preimage"),
            }
        }
    }
    cases
}

fn run(st: &Structure, cases: &[(usize, LabelSet, [u8; 5], usize)], label: &str) {
    let mut per_j = [0usize; 6];
    let mut tot_j = [0usize; 6];
    for (j, labels, ft, m_true) in cases {
        let mut full = labels.clone();
        full.m.insert(*ft, *m_true);
        let eq = cond_equation_d(st, &full, [0, 1, 2, 3, 4, 5]).unwrap();
        tot_j[*j] += 1;
        if eq.check(st, &full).unwrap() {
            per_j[*j] += 1;
        }
    }
    println!("{label}: per-j pass: j1 {}/{} j2 {}/{} j3 {}/{} j4 {}/{}",
        per_j[1], tot_j[1], per_j[2], tot_j[2], per_j[3], tot_j[3], per_j[4], tot_j[4]);
}

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let ts3 = Arc::new(three_crossed_from_two(&inner_two_crossed(s3.clone())).unwrap());
    let st3 = Structure::Three(ts3.clone());
    let cases = collect_cases(&st3, &ts3, 12);
    run(&st3, &cases, "S3-inner (M nonabelian)");

    // A3 < S3 structure: C = Z3, B = S3 conj action, A = 1; peiffer = commutator pullback
    let z3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
    let one = Arc::new(FiniteGroup::trivial());
    // identify Z3 with A3 = {id=0, (012), (021)}: find the 3-cycles in S3 indexing
    let a3: Vec<usize> = s3.elements().filter(|&x| {
        // order-3 elements plus identity: x^3 == e and (x != e => x^2 != e)... just order divides 3
        let x2 = s3.mul(x, x);
        s3.mul(x2, x) == s3.identity()
    }).collect();
    assert_eq!(a3.len(), 3);
    let into_s3 = |c: usize| a3[c];
    let from_s3 = |x: usize| a3.iter().position(|&y| y == x).unwrap();
    let d_cb = GroupHom::new(z3.clone(), s3.clone(), a3.clone()).unwrap();
    let act_bc = GroupAction::from_fn(s3.clone(), z3.clone(), |b, c| from_s3(s3.conj(b, into_s3(c)))).unwrap();
    let peiffer = Lifting2::from_fn(s3.clone(), s3.clone(), z3.clone(), |b2, b1| from_s3(s3.commutator(b2, b1))).unwrap();
    let w = TwoCrossedModule::new(
        z3.clone(), s3.clone(), one.clone(),
        d_cb, GroupHom::zero(s3.clone(), one.clone()),
        GroupAction::trivial(one.clone(), s3.clone()),
        GroupAction::trivial(one.clone(), z3.clone()),
        act_bc, peiffer,
    ).unwrap();
    let wr = verify_two_crossed(&w);
    println!("A3<S3 2cm ok: {} failed {:?}", wr.ok(), wr.failed_ids());
    if wr.ok() {
        let t2 = Arc::new(three_crossed_from_two(&w).unwrap());
        let st2 = Structure::Three(t2.clone());
        let cases2 = collect_cases(&st2, &t2, 12);
        run(&st2, &cases2, "A3<S3 (M=Z3 abelian, twisted)");
        // D4-inner too: 2-group flavor, nonabelian M
        let _ = conjugation_action(&s3);
    }
    let d4 = Arc::new(FiniteGroup::dihedral(4).unwrap());
    let td4 = Arc::new(three_crossed_from_two(&inner_two_crossed(d4)).unwrap());
    let st4 = Structure::Three(td4.clone());
    let cases4 = collect_cases(&st4, &td4, 6);
    run(&st4, &cases4, "D4-inner (M nonabelian)");
}
