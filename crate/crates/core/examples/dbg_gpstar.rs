use coprime_core::graphs::{build, GraphFamily};
use coprime_core::labeling::verify;
use coprime_core::label_gpstar;
use coprime_core::VertexId;

fn main() {
    let k = 210u64;
    let (l, _) = label_gpstar(k).unwrap();
    let g = build(GraphFamily::GpStar(k)).unwrap();
    let rep = verify(&g, &l).unwrap();
    println!("violations: {}", rep.violations.len());
    let base_v = |p: u64| -> u64 {
        if p <= k { if p % 2 == 1 { 4*p-3 } else { 4*p } }
        else { let j = p - k; if j % 2 == 1 { 4*j } else { 4*j-3 } }
    };
    let base_u = |p: u64| -> u64 {
        if p <= k { if p % 2 == 1 { 4*p-2 } else { 4*p-1 } }
        else { let j = p - k; if j % 2 == 1 { 4*j-1 } else { 4*j-2 } }
    };
    for p in 1..=2*k {
        let lv = l.get(VertexId::Outer(p as u32)).unwrap().get();
        let lu = l.get(VertexId::Inner(p as u32)).unwrap().get();
        if lv != base_v(p) { println!("v_{p}: base {} -> {}", base_v(p), lv); }
        if lu != base_u(p) { println!("u_{p}: base {} -> {}", base_u(p), lu); }
    }
}
