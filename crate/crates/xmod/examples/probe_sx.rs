use std::sync::Arc;
use xmod::crossed::TwoCrossedModule;
use xmod::from2cm::{inner_two_crossed, three_crossed_from_two};
use xmod::group::FiniteGroup;
use xmod::simplicial::*;

fn main() {
    // 1. all-unit simplices pass at each level/dim (incl. cond (d) smoke test)
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let t_s3 = Arc::new(three_crossed_from_two(&inner_two_crossed(s3)).unwrap());
    let st3 = Structure::Three(t_s3.clone());
    for n in 0..=6 {
        let sx = ColoredSimplex::unit(st3.clone(), n);
        let rep = check_colored(&sx);
        println!("unit n={n} over S3-lift: ok={} (viol {})", rep.ok(), rep.total_violations);
    }

    // 2. T2 = lift of (Z2 -> 1 -> 1): structured == rejection at n<=3; count at n=5
    let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
    let one = Arc::new(FiniteGroup::trivial());
    let w2 = TwoCrossedModule::over_trivial_groups(z2.clone(), one.clone(), one.clone());
    let t2 = Arc::new(three_crossed_from_two(&w2).unwrap());
    let st2 = Structure::Three(t2.clone());
    for n in 0..=3 {
        let a = enumerate_simplices(&st2, n, EnumMode::Structured, 1 << 30);
        let b = enumerate_simplices(&st2, n, EnumMode::Rejection, 1 << 30);
        let mut la = a.labelings.clone(); la.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        let mut lb = b.labelings.clone(); lb.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        println!("T2 n={n}: structured {} rejection {} equal={}", a.labelings.len(), b.labelings.len(), la == lb);
    }
    let c5 = count_colorings(&st2, 5, 1 << 30);
    println!("T2 count n=5: {:?} (expect 32768 = 2^15)", c5);

    // 3. |G|=2, H=L=1 two-crossed: count n=2 == 4, all pass check_colored
    let g2 = TwoCrossedModule::over_trivial_groups(one.clone(), one.clone(), z2.clone());
    let stg = Structure::Two(Arc::new(g2));
    println!("g2 count n=2: {:?} (expect 4)", count_colorings(&stg, 2, 1 << 30));
    let out = enumerate_simplices(&stg, 3, EnumMode::Structured, 1 << 30);
    let all_ok = out.labelings.iter().all(|ls| {
        check_colored(&ColoredSimplex { structure: stg.clone(), dim: 3, labels: ls.clone() }).ok()
    });
    println!("g2 n=3: {} simplices, all check_colored ok: {all_ok}", out.labelings.len());

    // 4. functoriality over enumerated 3-simplices of the S3-lift (sampled few)
    let out3 = enumerate_simplices(&st3, 2, EnumMode::Structured, 50);
    println!("S3-lift n=2: enumerated {} (partial ok)", out3.labelings.len());
    let mut fails = 0;
    for ls in out3.labelings.iter().take(20) {
        let sx = ColoredSimplex { structure: st3.clone(), dim: 2, labels: ls.clone() };
        if !check_colored(&sx).ok() { fails += 1; continue; }
        for d in (0..=2).map(|i| SimplicialOperator::face(2, i)) {
            let f = apply_operator(&d, &sx).unwrap();
            if !check_colored(&f).ok() { fails += 1; }
            for s in (0..=1).map(|i| SimplicialOperator::degeneracy(1, i)) {
                let fs = apply_operator(&s, &f).unwrap();
                let composite = SimplicialOperator::compose(&d, &s).unwrap();
                let direct = apply_operator(&composite, &sx).unwrap();
                if fs != direct { fails += 1; }
                if !check_colored(&fs).ok() { fails += 1; }
            }
        }
    }
    println!("functoriality fails: {fails}");
}
