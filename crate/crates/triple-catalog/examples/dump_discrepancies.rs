fn main() {
    let mut seen: std::collections::BTreeMap<(String, String), (String, String, usize)> = Default::default();
    for inst in triple_catalog::enumerate(12) {
        let ev = triple_catalog::evaluate::evaluate(&inst).unwrap();
        for d in ev.discrepancies {
            let e = seen.entry((inst.label.clone(), d.site.clone())).or_insert((d.published.clone(), d.computed.clone(), 0));
            e.2 += 1;
        }
    }
    for ((label, site), (p, c, count)) in seen {
        println!("{label}\t{site}\t{p}\t{c}\t×{count}");
    }
}
