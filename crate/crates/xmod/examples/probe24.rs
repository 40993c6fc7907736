use std::sync::Arc;
use xmod::crossed::{ll_two_crossed_view, verify_two_crossed, verify_unit_lemma};
use xmod::from2cm::{inner_two_crossed, search_two_crossed, three_crossed_from_two};
use xmod::group::{FiniteGroup, GroupAction, GroupHom, Lifting2};

fn main() {
    // unit lemma + ll view on the S3 structure
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let w = inner_two_crossed(s3.clone());
    let t = three_crossed_from_two(&w).unwrap();
    let unit = verify_unit_lemma(&t);
    println!("unit lemma ok: {} ({} violations)", unit.ok(), unit.total_violations);
    let view = ll_two_crossed_view(&t);
    let view_report = verify_two_crossed(&view);
    println!("ll view 2cm ok: {} failed: {:?}", view_report.ok(), view_report.failed_ids());

    // mutation sensitivity: flip one ll entry
    let mut t2 = t.clone();
    let l1 = 1usize; // some nonunit L element
    let cur = t2.ll.get(l1, l1);
    let flipped = (cur + 1) % t2.m.order();
    t2.ll = t2.ll.with_entry(l1, l1, flipped);
    let rep = xmod::crossed::verify_three_crossed(&t2);
    println!("mutated ll -> ok: {} failed: {:?}", rep.ok(), rep.failed_ids());

    // search over Z2,Z2,Z2 zero boundaries trivial actions: expect 2 (oracle: brute force over 16 tables)
    let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
    let out = search_two_crossed(
        z2.clone(), z2.clone(), z2.clone(),
        GroupHom::zero(z2.clone(), z2.clone()),
        GroupHom::zero(z2.clone(), z2.clone()),
        GroupAction::trivial(z2.clone(), z2.clone()),
        GroupAction::trivial(z2.clone(), z2.clone()),
        GroupAction::trivial(z2.clone(), z2.clone()),
        1_000_000,
    ).unwrap();
    println!("search2 z2: found {} complete {} examined {}", out.found.len(), out.complete, out.examined);
    // brute-force oracle
    let mut oracle = 0;
    for bits in 0..16u32 {
        let table: Vec<usize> = (0..4).map(|i| ((bits >> i) & 1) as usize).collect();
        let cand = xmod::crossed::TwoCrossedModule::new(
            z2.clone(), z2.clone(), z2.clone(),
            GroupHom::zero(z2.clone(), z2.clone()),
            GroupHom::zero(z2.clone(), z2.clone()),
            GroupAction::trivial(z2.clone(), z2.clone()),
            GroupAction::trivial(z2.clone(), z2.clone()),
            GroupAction::trivial(z2.clone(), z2.clone()),
            Lifting2::new(z2.clone(), z2.clone(), z2.clone(), table).unwrap(),
        ).unwrap();
        if verify_two_crossed(&cand).ok() { oracle += 1; }
    }
    println!("oracle count: {oracle}");
}
