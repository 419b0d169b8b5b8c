use outage_ld::baselines::dmt_exponent;
use outage_ld::energy::{e0, e1};
use outage_ld::spectrum::{solve_constrained, ChannelEnsemble};

fn main() {
    let rho = 1e8f64;
    for beta in [1.5f64, 2.0] {
        for q in [0.25f64, 0.5, 0.75] {
            let ens = ChannelEnsemble::new(beta, rho).unwrap();
            let r = q * rho.ln();
            let spec = solve_constrained(&ens, r).unwrap();
            let e = e1(&spec) - e0(beta).unwrap();
            let tgt = dmt_exponent(beta, q).unwrap();
            let a_t = (beta - 1.0f64).powi(2) / (4.0 * (1.0 - q) * (beta - q));
            println!(
                "beta={beta} q={q}: exp/ln(rho) rel={:+.4} | a*rho rel={:+.4} b rel={:+.4} k rel={:+.4}",
                e / rho.ln() / tgt - 1.0,
                spec.lower_edge() * rho / a_t - 1.0,
                spec.upper_edge() / (4.0 * q) - 1.0,
                spec.tilt() / (2.0 * q - 1.0 - beta) - 1.0
            );
        }
    }
    // high-rate and small-rate tails
    for (beta, rho, q) in [(1.0f64, 1e6f64, 1.2f64), (1.0, 1e6, 1.5), (2.0, 1e6, 1.2), (2.0, 1e6, 1.5)] {
        let ens = ChannelEnsemble::new(beta, rho).unwrap();
        let r = q * rho.ln();
        let spec = solve_constrained(&ens, r).unwrap();
        let e = e1(&spec) - e0(beta).unwrap();
        println!("high-rate beta={beta} q={q}: rel={:+.4}", e / (r.exp() / rho) - 1.0);
    }
    for (beta, rho) in [(2.0f64, 10.0f64), (1.5, 1.0), (1.0, 10.0), (2.0, 100.0)] {
        for r in [1e-3f64, 1e-4] {
            let ens = ChannelEnsemble::new(beta, rho).unwrap();
            let spec = solve_constrained(&ens, r).unwrap();
            let e = e1(&spec) - e0(beta).unwrap();
            let tgt = -beta * (std::f64::consts::E * r / (beta * rho)).ln();
            println!("small-rate beta={beta} rho={rho} r={r:e}: rel={:+.5}", e / tgt - 1.0);
        }
    }
}
