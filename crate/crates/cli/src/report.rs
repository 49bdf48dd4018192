//! Plain-text transition report.

use std::fmt::Write as _;

use bellcorr_core::ChannelKind;

use crate::run::RunOutput;

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "none".to_owned(), |v| format!("{v:.9}"))
}

fn list(xs: &[f64]) -> String {
    if xs.is_empty() {
        return "none".to_owned();
    }
    xs.iter()
        .map(|x| format!("{x:.9}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Formats the analytic and detected transitions of a run.
pub fn format_report(out: &RunOutput) -> String {
    let cfg = &out.config;
    let r = &out.report;
    let kind: ChannelKind = cfg.channel.into();
    let mut s = String::new();
    // writes to a String cannot fail
    let _ = writeln!(s, "channel: {kind}");
    let _ = writeln!(s, "c(0): ({:.9}, {:.9}, {:.9})", cfg.c1, cfg.c2, cfg.c3);
    let _ = writeln!(s, "T_A: {:.9}  T_B: {:.9}", cfg.t_a, cfg.t_b);
    if kind == ChannelKind::GeneralizedAmplitudeDamping {
        let _ = writeln!(s, "gamma: {:.9}", cfg.gamma);
    }
    let _ = writeln!(s, "tau_D: {:.9}", r.decoherence_time);
    let _ = writeln!(s, "t1*: {}", opt(r.analytic_t1));
    let _ = writeln!(s, "t2*: {}", opt(r.analytic_t2));
    if r.conditions.all() {
        let _ = writeln!(s, "double-transition conditions: satisfied");
    } else {
        let failed: Vec<_> = r.conditions.failed_clauses(kind).collect();
        let _ = writeln!(
            s,
            "double-transition conditions: failed ({})",
            failed.join("; ")
        );
    }
    let _ = writeln!(
        s,
        "classical sudden change: {}",
        opt(r.classical_change_time)
    );
    let _ = writeln!(s, "tau_E: {}", opt(r.pointer_basis_time));
    let _ = writeln!(s, "detected quantum changes: {}", list(&r.quantum_changes));
    let _ = writeln!(
        s,
        "detected classical changes: {}",
        list(&r.classical_changes)
    );
    for (lo, hi) in &r.crowded_intervals {
        let _ = writeln!(
            s,
            "warning: several crossings in [{lo:.9}, {hi:.9}]; refine the time grid"
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Preset;
    use crate::run::simulate;

    #[test]
    fn chloroform_report() {
        let text = format_report(&simulate(&Preset::ChloroformPd.config()).unwrap());
        assert!(text.contains("channel: pd"), "{text}");
        assert!(text.contains("t1*: 0.105"), "{text}");
        assert!(text.contains("t2*: 0.1918"), "{text}");
        assert!(text.contains("conditions: satisfied"));
        assert!(text.contains("tau_E: 0.1918"));
    }

    #[test]
    fn sodium_report() {
        let text = format_report(&simulate(&Preset::SodiumGad.config()).unwrap());
        assert!(text.contains("channel: gad"), "{text}");
        assert!(text.contains("tau_E: none"), "{text}");
        assert!(text.contains("gamma: 0.500000000"));
    }

    #[test]
    fn failed_clauses_are_named() {
        let mut c = Preset::ChloroformPd.config();
        c.c3 = 0.3;
        let text = format_report(&simulate(&c).unwrap());
        assert!(text.contains("failed (|c3| = c_minus)"), "{text}");
        assert!(text.contains("t1*: none"));
    }
}
