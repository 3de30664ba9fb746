//! Quick statistics probe: random-baseline behaviour over many games.

use splendor_core::agents::AgentSpec;
use splendor_core::engine::{run_game, GameConfig, Outcome};
use splendor_core::{ContentSet, GameParams, Rng64};

fn main() {
    let n_games: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let params = GameParams::default();
    let content = ContentSet::bundled();
    let config = GameConfig::default();

    let mut durations = Vec::new();
    let mut outcomes = Vec::new();
    let mut stalemates = 0u64;
    let mut timeouts = 0u64;
    let mut wins = vec![0f64; 4];
    let start = std::time::Instant::now();

    for g in 0..n_games {
        let master: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(4242);
        let seed = Rng64::stream_seed(master, g);
        let mut agents: Vec<_> = (0..4)
            .map(|i| AgentSpec::Rnd.build(seed ^ (i + 1) as u64))
            .collect();
        let result = run_game(&params, content, &mut agents, seed, &config).unwrap();
        durations.push(result.ticks as f64);
        outcomes.push(result.outcome == Outcome::Stalemate);
        match result.outcome {
            Outcome::Stalemate => stalemates += 1,
            Outcome::Timeout => timeouts += 1,
            Outcome::Normal => {
                for &w in &result.winners {
                    wins[w] += 1.0;
                }
            }
        }
    }

    // split durations by outcome
    let mut normal_d = Vec::new();
    let mut stale_d = Vec::new();
    for (d, st) in durations.iter().zip(&outcomes) {
        if *st { stale_d.push(*d) } else { normal_d.push(*d) }
    }
    let stats = |xs: &[f64]| {
        let n = xs.len() as f64;
        let m = xs.iter().sum::<f64>() / n.max(1.0);
        let v = xs.iter().map(|d| (d - m).powi(2)).sum::<f64>() / n.max(1.0);
        (m, v.sqrt())
    };
    let (nm, ns) = stats(&normal_d);
    let (sm, ss) = stats(&stale_d);
    println!("normal games    n={} mean={nm:.2} sd={ns:.2}", normal_d.len());
    println!("stalemate games n={} mean={sm:.2} sd={ss:.2}", stale_d.len());

    let n = durations.len() as f64;
    let mean = durations.iter().sum::<f64>() / n;
    let var = durations.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / n;
    let max = durations.iter().cloned().fold(f64::MIN, f64::max);
    let min = durations.iter().cloned().fold(f64::MAX, f64::min);
    let decided = n_games - stalemates;

    println!("games           {n_games}");
    println!("duration        mean={mean:.2} sd={:.2} min={min} max={max}", var.sqrt());
    println!(
        "stalemate rate  {:.3} ({stalemates} games)",
        stalemates as f64 / n
    );
    println!("timeouts        {timeouts}");
    for (i, w) in wins.iter().enumerate() {
        println!(
            "player {i} win    {:.3} (ignoring stalemates)",
            w / decided as f64
        );
    }
    println!("elapsed         {:.2?}", start.elapsed());
}
