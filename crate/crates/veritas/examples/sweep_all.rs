use veritas::catalog::{list_identities, sweep, CheckConfig, Status};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let filter = args.get(1).cloned();
    let n: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let cfg = CheckConfig::default();
    for d in list_identities(None) {
        if let Some(f) = &filter {
            if !d.id.contains(f.as_str()) {
                continue;
            }
        }
        match sweep(d, 7, n, &cfg) {
            Ok(reports) => {
                let mut worst = 0.0f64;
                let mut bad = Vec::new();
                for r in &reports {
                    if r.status != Status::Pass {
                        bad.push(format!(
                            "{} rel={:.2e} qerr={:.2e} {}",
                            r.status.as_str(),
                            r.rel_residual,
                            r.quad_err,
                            r.notes.join("; ")
                        ));
                    }
                    worst = worst.max(r.rel_residual);
                }
                if bad.is_empty() {
                    println!("{:28} OK   worst_rel={:.2e}", d.id, worst);
                } else {
                    println!("{:28} BAD  worst_rel={:.2e}  [{}]", d.id, worst, bad.join(" | "));
                }
            }
            Err(e) => println!("{:28} SAMPLER-ERR {e}", d.id),
        }
    }
}
