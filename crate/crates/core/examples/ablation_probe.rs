//! Ablation runs: which knobs move tuned-agent strength vs 3 OSLA.

use splendor_core::agents::{AgentSpec, BmrhConfig, CommonConfig, MctsConfig, SrhConfig};
use splendor_core::engine::GameConfig;
use splendor_core::tuning::{evaluate_config, MatchSetup};
use splendor_core::ContentSet;

fn rate(spec: &AgentSpec, budget: u64, games: u64, seed: u64) -> f64 {
    let setup = MatchSetup {
        game: GameConfig {
            per_tick_budget: budget,
            ..GameConfig::default()
        },
        ..MatchSetup::default()
    };
    evaluate_config(spec, &setup, ContentSet::bundled(), games, seed)
}

fn main() {
    let games: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);

    let big_bmrh = |l: usize, n: usize| AgentSpec::Bmrh {
        cfg: BmrhConfig {
            l,
            n,
            usb: false,
            mo: true,
            ms: 0,
            ..BmrhConfig::default()
        },
        common: CommonConfig::default(),
    };

    println!("all vs 3 OSLA (budget 1000 unless noted), {games} games");
    let cases: Vec<(&str, AgentSpec, u64)> = vec![
        ("bmrh l=2 n=5000 budget=50k", big_bmrh(2, 5000), 50_000),
        ("bmrh l=3 n=5000 budget=50k", big_bmrh(3, 5000), 50_000),
        ("bmrh l=1 n=5000 budget=50k", big_bmrh(1, 5000), 50_000),
        (
            "mcts d=3 c=1.41 budget=10k",
            AgentSpec::Mcts {
                cfg: MctsConfig {
                    d: 3,
                    c: 1.41,
                    ps: 3,
                    ..MctsConfig::default()
                },
                common: CommonConfig::default(),
            },
            10_000,
        ),
        ("bmrh* (paper cfg)", AgentSpec::bmrh_star(), 1000),
        ("srh* (paper cfg)", AgentSpec::srh_star(), 1000),
        (
            "srh l=2 n=5000 budget=50k",
            AgentSpec::Srh {
                cfg: SrhConfig {
                    l: 2,
                    n: 5000,
                    usb: false,
                    ..SrhConfig::default()
                },
                common: CommonConfig::default(),
            },
            50_000,
        ),
    ];
    for (name, spec, budget) in cases {
        let start = std::time::Instant::now();
        let r = rate(&spec, budget, games, 7);
        println!("{name:28} -> {r:.3}  ({:.1?})", start.elapsed());
    }
}
