use outage_ld::montecarlo::{conditioned_spectrum, McConfig};
use outage_ld::spectrum::{normalize_ensemble, solve_constrained};

fn main() {
    for (trials, seed, r) in [
        (30_000u64, 17u64, 5.0f64),
        (100_000, 23, 5.0),
        (300_000, 29, 5.0),
        (100_000, 31, 4.8),
        (300_000, 37, 4.6),
    ] {
        let cfg = McConfig { n: 5, m: 10, rho: 100.0f64, trials, seed, streams: 8 };
        let cond = conditioned_spectrum(&cfg, r).unwrap();
        let (ens, _) = normalize_ensemble(cfg.n, cfg.m, cfg.rho).unwrap();
        let spec = solve_constrained(&ens, r).unwrap();
        let ks = cond.cdf.kolmogorov_distance(|x| spec.cdf_at(x));
        // locate the gap
        let mut worst_x = 0.0;
        let mut worst = 0.0;
        for i in 0..200 {
            let x = 0.05 + 7.0 * i as f64 / 200.0;
            let d = (cond.cdf.eval(x) - spec.cdf_at(x)).abs();
            if d > worst { worst = d; worst_x = x; }
        }
        println!(
            "trials={trials} r={r}: pooled={} accept={:.3} KS={ks:.4} (worst {worst:.4} at x={worst_x:.2}; support [{:.3},{:.3}])",
            cond.cdf.len(), cond.acceptance_rate(), spec.lower_edge(), spec.upper_edge()
        );
    }
}
