use std::sync::Arc;
use xmod::from2cm::inner_two_crossed;
use xmod::group::FiniteGroup;
use xmod::horns::*;
use xmod::simplicial::*;

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let w = Arc::new(inner_two_crossed(s3));
    let st = Structure::Two(w);
    // sampled 2cm horns at n=4: fill solves (c); verify cross-checks (b)@missing-face
    for j in 1..4 {
        let space = LabelSpace::new(st.clone(), 4, SpaceKind::Horn { j }, EnumMode::Structured);
        let mut ok = 0; let mut bad = 0;
        for labels in space.sample_many(9 + j as u64, 25) {
            let horn = Horn::new(st.clone(), 4, j, labels).unwrap();
            match fill_inner_horn(&horn) {
                Ok(sx) => {
                    let rep = verify_filler(&horn, &sx);
                    if rep.ok() { ok += 1 } else {
                        bad += 1;
                        if bad == 1 { for v in rep.violations.iter().take(4) { println!("  j={j} {} @ {:?}", v.law, v.witness); } }
                    }
                }
                Err(e) => { bad += 1; println!("  j={j} fill err: {e}"); }
            }
        }
        println!("2cm S3 n=4 j={j}: ok {ok} bad {bad}");
    }
    // also n=3: fill solves (b) for h; verify cross-checks (a) nothing new... and (c) instances none at n=3; still sanity
    for j in 1..3 {
        let space = LabelSpace::new(st.clone(), 3, SpaceKind::Horn { j }, EnumMode::Structured);
        let mut ok = 0; let mut bad = 0;
        for labels in space.sample_many(77, 25) {
            let horn = Horn::new(st.clone(), 3, j, labels).unwrap();
            match fill_inner_horn(&horn) {
                Ok(sx) => if verify_filler(&horn, &sx).ok() { ok += 1 } else { bad += 1 },
                Err(_) => bad += 1,
            }
        }
        println!("2cm S3 n=3 j={j}: ok {ok} bad {bad}");
    }
}
