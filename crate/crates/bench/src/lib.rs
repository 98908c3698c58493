//! Fixtures shared by the criterion benches.

use sqck::{exactnum::int, OmegaPattern};

/// Patterns used across benches: compact, one contraction, fully contracted.
pub fn patterns(n: usize) -> Vec<(&'static str, OmegaPattern)> {
    let build = |f: &dyn Fn(usize) -> i64| OmegaPattern::new((1..=n).map(|a| int(f(a))).collect()).expect("n >= 1");
    vec![
        ("compact", build(&|_| 1)),
        ("one-contraction", build(&|a| if a == 1 { 0 } else { 1 })),
        ("flat", build(&|_| 0)),
    ]
}
