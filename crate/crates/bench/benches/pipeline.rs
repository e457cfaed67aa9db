use criterion::{criterion_group, criterion_main, Criterion};
use ipsig_core::intersection_homology::ih;
use ipsig_core::ip_witt::check_ip;
use ipsig_core::perversity::{ClassicalName, Perversity};
use ipsig_core::pseudomanifold::skeletal_stratification;
use ipsig_core::symmetric_signature::signature;
use ipsig_core::zlinalg::{smith_normal_form, Coefficients};
use ipsig_core::zoo;

fn ih_suspended_torus(c: &mut Criterion) {
    let k = zoo::complex("sigma_t2").unwrap();
    let st = skeletal_stratification(&k, None).unwrap();
    let m = Perversity::classical(ClassicalName::LowerMiddle);
    c.bench_function("ih sigma_t2 lower-middle", |b| {
        b.iter(|| ih(&k, &st, &m, Coefficients::Z, false).unwrap())
    });
}

fn ip_checks(c: &mut Criterion) {
    for name in ["pinched_torus", "sigma_rp3"] {
        let k = zoo::complex(name).unwrap();
        c.bench_function(&format!("check_ip {name}"), |b| b.iter(|| check_ip(&k, None, false).unwrap()));
    }
}

fn snf_boundary(c: &mut Criterion) {
    let k = zoo::complex("rp3").unwrap();
    let d = k.boundary_matrix(2).unwrap();
    c.bench_function("snf rp3 d2", |b| b.iter(|| smith_normal_form(&d)));
}

fn signatures(c: &mut Criterion) {
    let k = zoo::complex("pinched_torus").unwrap();
    c.bench_function("signature pinched_torus", |b| b.iter(|| signature(&k, None, None).unwrap()));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    let k = zoo::complex("cp2").unwrap();
    g.bench_function("signature cp2", |b| b.iter(|| signature(&k, None, None).unwrap()));
    g.finish();
}

criterion_group!(benches, ih_suspended_torus, ip_checks, snf_boundary, signatures);
criterion_main!(benches);
