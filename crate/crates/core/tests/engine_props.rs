//! Engine-level properties: budget discipline, reproducibility, agent
//! isolation from the live state.

use splendor_core::agents::{AgentSpec, BmrhConfig, CommonConfig, MctsConfig, SrhConfig};
use splendor_core::engine::{run_game, Agent, GameConfig};
use splendor_core::state::new_game;
use splendor_core::{Budget, ContentSet, GameParams, Rng64};

fn all_specs() -> Vec<AgentSpec> {
    vec![
        AgentSpec::Rnd,
        AgentSpec::Osla,
        AgentSpec::bmrh_star(),
        AgentSpec::srh_star(),
        AgentSpec::mcts_star(),
        AgentSpec::Bmrh {
            cfg: BmrhConfig {
                l: 5,
                ms: 2,
                mo: false,
                ..BmrhConfig::default()
            },
            common: CommonConfig { om: 1, omsb: 0.02 },
        },
        AgentSpec::Srh {
            cfg: SrhConfig {
                l: 3,
                n: 0,
                mo: true,
                ..SrhConfig::default()
            },
            common: CommonConfig { om: 2, omsb: 0.05 },
        },
        AgentSpec::Mcts {
            cfg: MctsConfig {
                d: 3,
                c: 1.41,
                ps: 5,
                rt: 2,
                ..MctsConfig::default()
            },
            common: CommonConfig { om: 1, omsb: 0.01 },
        },
    ]
}

#[test]
fn agents_never_overspend_and_never_mutate_the_state() {
    let content = ContentSet::bundled();
    let params = GameParams::default();
    let mut rng = Rng64::new(31);
    for (i, spec) in all_specs().into_iter().enumerate() {
        let mut agent = spec.build(1000 + i as u64);
        // exercise odd budgets, including ones far too small
        for cap in [1u64, 2, 3, 7, 30, 200, 1000] {
            let state = new_game(&params, content, rng.next_u64()).unwrap();
            let snapshot = state.clone();
            let mut budget = Budget::new(cap);
            let _ = agent.act(&state, 0, &mut budget);
            assert!(
                budget.used() <= budget.capacity(),
                "{spec:?} overspent at cap {cap}"
            );
            assert_eq!(state, snapshot, "{spec:?} mutated the observed state");
        }
    }
}

#[test]
fn full_games_are_reproducible_for_every_agent_kind() {
    let content = ContentSet::bundled();
    let params = GameParams::default();
    let config = GameConfig {
        max_ticks: 300,
        per_tick_budget: 300,
    };
    let lineup = [
        AgentSpec::bmrh_star(),
        AgentSpec::srh_star(),
        AgentSpec::mcts_star(),
        AgentSpec::Osla,
    ];
    let play = |seed: u64| {
        let mut agents: Vec<Box<dyn Agent>> = lineup
            .iter()
            .enumerate()
            .map(|(i, s)| s.build(seed + i as u64))
            .collect();
        run_game(&params, content, &mut agents, seed, &config).unwrap()
    };
    for seed in [3u64, 4, 5] {
        assert_eq!(play(seed), play(seed));
    }
}

#[test]
fn lineup_size_is_validated() {
    let content = ContentSet::bundled();
    let params = GameParams::default();
    let mut agents: Vec<Box<dyn Agent>> = vec![AgentSpec::Rnd.build(1)];
    assert!(run_game(&params, content, &mut agents, 1, &GameConfig::default()).is_err());
}
