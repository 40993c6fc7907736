use std::sync::Arc;
use xmod::from2cm::{inner_two_crossed, three_crossed_from_two};
use xmod::group::FiniteGroup;
use xmod::horns::*;
use xmod::simplicial::*;

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let ts3 = Arc::new(three_crossed_from_two(&inner_two_crossed(s3)).unwrap());
    let sts3 = Structure::Three(ts3);
    let space = LabelSpace::new(sts3.clone(), 5, SpaceKind::Horn { j: 2 }, EnumMode::Structured);
    let labels = space.sample_many(42, 1).pop().unwrap();
    let horn = Horn::new(sts3.clone(), 5, 2, labels).unwrap();
    println!("horn check ok: {}", horn.check().ok());
    let sx = fill_inner_horn(&horn).unwrap();
    let rep = verify_filler(&horn, &sx);
    println!("verify ok: {} total {}", rep.ok(), rep.total_violations);
    for v in rep.violations.iter().take(12) {
        println!("  {} @ {:?}", v.law, v.witness);
    }
    // Where is the missing face's (c) instance?
    let missing: Vec<u8> = (0..=5u8).filter(|&v| v != 2).collect();
    println!("missing face tuple: {:?}", missing);
    // check (d) directly on the filled simplex
    let eq = cond_equation_d(&sts3, &sx.labels, [0,1,2,3,4,5]).unwrap();
    println!("(d) on filled: {:?}", eq.check(&sts3, &sx.labels));
}
