use std::sync::Arc;
use std::time::Instant;
use xmod::crossed::TwoCrossedModule;
use xmod::from2cm::{crossed_to_two_crossed, inner_two_crossed, three_crossed_from_two, CrossedModule};
use xmod::group::FiniteGroup;
use xmod::horns::*;
use xmod::simplicial::*;

fn main() {
    let one = Arc::new(FiniteGroup::trivial());
    let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
    let stage = std::env::args().nth(1).unwrap_or_default();

    if stage == "1" {
        let t0 = Instant::now();
        let g2 = Structure::Two(Arc::new(TwoCrossedModule::over_trivial_groups(one.clone(), one.clone(), z2.clone())));
        let cert = certify_quasi_category(&g2, 4, &CertifyOptions::default());
        println!("g2 cert: certified={} in {:?}", cert.certified, t0.elapsed());
        for c in &cert.cells { println!("  n={} j={} horns={} verified={}", c.n, c.j, c.horns, c.verified); }
    }
    if stage == "2" {
        let t0 = Instant::now();
        let k = CrossedModule::inner(z2.clone());
        let st22 = Structure::Two(Arc::new(crossed_to_two_crossed(&k).unwrap()));
        let cert = certify_quasi_category(&st22, 4, &CertifyOptions::default());
        println!("g2h2 cert: certified={} in {:?}", cert.certified, t0.elapsed());
        for c in &cert.cells { println!("  n={} j={} horns={} verified={}", c.n, c.j, c.horns, c.verified); }
    }
    if stage == "3" {
        let t0 = Instant::now();
        let t6 = Arc::new(three_crossed_from_two(&crossed_to_two_crossed(&CrossedModule::inner(z2.clone())).unwrap()).unwrap());
        let st6 = Structure::Three(t6);
        for n in 1..=3 {
            let out = enumerate_simplices(&st6, n, EnumMode::Structured, 1 << 24);
            println!("  enum n={}: {} simplices ({:?})", n, out.labelings.len(), t0.elapsed());
        }
        let cert = certify_quasi_category(&st6, 3, &CertifyOptions::default());
        println!("3cm cert n<=3: certified={} in {:?}", cert.certified, t0.elapsed());
        for c in &cert.cells { println!("  n={} j={} horns={} verified={}", c.n, c.j, c.horns, c.verified); }
    }
    if stage == "4" {
        let t0 = Instant::now();
        let t6 = Arc::new(three_crossed_from_two(&crossed_to_two_crossed(&CrossedModule::inner(z2.clone())).unwrap()).unwrap());
        let st6 = Structure::Three(t6);
        let cert = certify_quasi_category(&st6, 4, &CertifyOptions::default());
        println!("3cm cert n<=4: certified={} in {:?}", cert.certified, t0.elapsed());
        for c in &cert.cells { println!("  n={} j={} horns={} verified={}", c.n, c.j, c.horns, c.verified); }
    }
    if stage == "5" {
        let t0 = Instant::now();
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let ts3 = Arc::new(three_crossed_from_two(&inner_two_crossed(s3)).unwrap());
        let sts3 = Structure::Three(ts3);
        let space = LabelSpace::new(sts3.clone(), 5, SpaceKind::Horn { j: 2 }, EnumMode::Structured);
        println!("space built {:?}", t0.elapsed());
        let samples = space.sample_many(42, 3);
        println!("3 samples in {:?}", t0.elapsed());
        for labels in &samples {
            let horn = Horn::new(sts3.clone(), 5, 2, labels.clone()).unwrap();
            match fill_inner_horn(&horn) {
                Ok(sx) => println!("  fill+verify ok={} ({:?})", verify_filler(&horn, &sx).ok(), t0.elapsed()),
                Err(e) => println!("  fill error: {e}"),
            }
        }
    }
}
