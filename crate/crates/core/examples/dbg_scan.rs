use std::time::Instant;

fn main() {
    let t = Instant::now();
    let summary = coprime_core::scan::scan_prisms(3, 1_000_000, |_| {});
    println!(
        "scanned {} failures {} fallback {} in {:.1?}",
        summary.scanned,
        summary.failures.len(),
        summary.fallback_uses,
        t.elapsed()
    );
    for (t, c) in &summary.histogram {
        println!("  {t}: {c}");
    }
}
