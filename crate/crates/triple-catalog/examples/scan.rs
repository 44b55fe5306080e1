//! Quick full-catalog scan: recompute everything at a modest rank bound and
//! print identities plus any published-vs-recomputed disagreements.

fn main() {
    let instances = triple_catalog::enumerate(8);
    println!("{} instances", instances.len());
    let mut bad = 0;
    for inst in &instances {
        let ev = triple_catalog::evaluate::evaluate(&inst).unwrap_or_else(|e| {
            panic!("evaluate {} failed: {e}", inst.key);
        });
        let id_ok = ev.gamma_identity.iter().all(|&x| x);
        if !ev.c_k_is_half || !id_ok || !ev.discrepancies.is_empty() {
            bad += 1;
            println!(
                "{}: c_k_half={} identity={:?}",
                inst.key, ev.c_k_is_half, ev.gamma_identity
            );
            for d in &ev.discrepancies {
                println!("    {}: published {} vs computed {}", d.site, d.published, d.computed);
            }
        }
    }
    println!("{bad} flagged");
}
