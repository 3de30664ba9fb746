//! The six experiment commands.

use crate::config::Experiment;
use crate::report::{csv_writer, mean_sd, pct, rate_se, std_err};
use anyhow::{bail, Result};
use rayon::prelude::*;
use splendor_core::agents::AgentSpec;
use splendor_core::bench::bench_throughput;
use splendor_core::engine::{run_game, GameResult, Outcome};
use splendor_core::tuning::{ntbea_run, GameEvaluator, MatchSetup, NtbeaConfig};
use splendor_core::Rng64;

fn outcome_tag(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Normal => "normal",
        Outcome::Stalemate => "stalemate",
        Outcome::Timeout => "timeout",
    }
}

fn play_one(
    exp: &Experiment,
    lineup: &[AgentSpec],
    rotation: usize,
    seed: u64,
) -> GameResult {
    let players = exp.params.players;
    let mut agent_rng = Rng64::new(seed ^ 0xA9E17);
    let mut agents = Vec::with_capacity(players);
    for seat in 0..players {
        // with rotation r, seat s hosts lineup agent (s + r) % players
        let spec = &lineup[(seat + rotation) % players];
        agents.push(spec.build(agent_rng.next_u64()));
    }
    run_game(&exp.params, exp.content, &mut agents, seed, &exp.game)
        .expect("experiment setup validated")
}

/// Fixed seats, per-game CSV, per-seat win rates and duration statistics.
pub fn cmd_play(exp: &Experiment, games: u64, seed: u64, out: Option<&str>) -> Result<()> {
    let lineup = exp.lineup()?;
    let players = exp.params.players;

    let results: Vec<(u64, GameResult)> = (0..games)
        .into_par_iter()
        .map(|g| {
            let game_seed = Rng64::stream_seed(seed, g);
            (game_seed, play_one(exp, &lineup, 0, game_seed))
        })
        .collect();

    let mut writer = csv_writer(out)?;
    let mut header = vec!["game".into(), "seed".into(), "outcome".into(), "ticks".into(), "winners".into()];
    for p in 0..players {
        header.push(format!("prestige_{p}"));
    }
    for p in 0..players {
        header.push(format!("cards_{p}"));
    }
    header.push("replaced_actions".into());
    writer.write_record(&header)?;
    for (g, (game_seed, result)) in results.iter().enumerate() {
        let mut row = vec![
            g.to_string(),
            game_seed.to_string(),
            outcome_tag(result.outcome).to_string(),
            result.ticks.to_string(),
            result
                .winners
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("|"),
        ];
        row.extend(result.prestige.iter().map(ToString::to_string));
        row.extend(result.card_counts.iter().map(ToString::to_string));
        row.push(result.replaced_actions.to_string());
        writer.write_record(&row)?;
    }
    writer.flush()?;

    if games == 0 {
        eprintln!("no games played");
        return Ok(());
    }
    let stalemates = results
        .iter()
        .filter(|(_, r)| r.outcome == Outcome::Stalemate)
        .count() as u64;
    let timeouts = results
        .iter()
        .filter(|(_, r)| r.outcome == Outcome::Timeout)
        .count() as u64;
    let decided = games - stalemates;
    let durations: Vec<f64> = results.iter().map(|(_, r)| r.ticks as f64).collect();
    let (mean, sd) = mean_sd(&durations);
    let min = durations.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = durations.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    eprintln!("games      {games}");
    eprintln!("duration   mean={mean:.2} sd={sd:.2} min={min} max={max}");
    eprintln!(
        "stalemates {} [{}]",
        stalemates,
        rate_se(stalemates as f64 / games as f64, games)
    );
    eprintln!("timeouts   {timeouts}");
    for p in 0..players {
        let wins = results
            .iter()
            .filter(|(_, r)| r.winners.contains(&p))
            .count() as f64;
        let rate = if decided == 0 { 0.0 } else { wins / decided as f64 };
        eprintln!(
            "player {p} ({}) win rate {} ignoring stalemates",
            lineup[p].label(),
            rate_se(rate, decided)
        );
    }
    Ok(())
}

/// Fixed lineup with seat rotation; per-agent win rates.
pub fn cmd_match(exp: &Experiment, games: u64, seed: u64, out: Option<&str>) -> Result<()> {
    let lineup = exp.lineup()?;
    let players = exp.params.players;

    let results: Vec<(u64, usize, GameResult)> = (0..games)
        .into_par_iter()
        .map(|g| {
            let game_seed = Rng64::stream_seed(seed, g);
            let rotation = (g % players as u64) as usize;
            (game_seed, rotation, play_one(exp, &lineup, rotation, game_seed))
        })
        .collect();

    let mut writer = csv_writer(out)?;
    let mut header = vec![
        "game".to_string(),
        "seed".to_string(),
        "rotation".to_string(),
        "outcome".to_string(),
        "ticks".to_string(),
    ];
    for (i, spec) in lineup.iter().enumerate() {
        header.push(format!("credit_{i}_{}", spec.label()));
    }
    writer.write_record(&header)?;

    let mut credit = vec![0.0f64; players];
    for (g, (game_seed, rotation, result)) in results.iter().enumerate() {
        let mut row = vec![
            g.to_string(),
            game_seed.to_string(),
            rotation.to_string(),
            outcome_tag(result.outcome).to_string(),
            result.ticks.to_string(),
        ];
        for agent in 0..players {
            // the agent sits at seat (agent - rotation) mod players, because
            // seat s hosts lineup agent (s + rotation) % players
            let seat = (agent + players - rotation % players) % players;
            let c = if result.winners.contains(&seat) {
                1.0 / result.winners.len() as f64
            } else {
                0.0
            };
            credit[agent] += c;
            row.push(format!("{c}"));
        }
        writer.write_record(&row)?;
    }
    writer.flush()?;

    if games == 0 {
        eprintln!("no games played");
        return Ok(());
    }
    let stalemates = results
        .iter()
        .filter(|(_, _, r)| r.outcome == Outcome::Stalemate)
        .count() as u64;
    eprintln!("games      {games}");
    eprintln!(
        "stalemates {} [{}]",
        stalemates,
        rate_se(stalemates as f64 / games as f64, games)
    );
    for (i, spec) in lineup.iter().enumerate() {
        eprintln!(
            "agent {i} ({}) win rate {}",
            spec.label(),
            rate_se(credit[i] / games as f64, games)
        );
    }
    Ok(())
}

/// Every unordered pair of agents plays two-player games, seats alternating.
pub fn cmd_roundrobin(exp: &Experiment, games: u64, seed: u64, out: Option<&str>) -> Result<()> {
    let lineup = match &exp.file.agents {
        Some(list) => list.clone(),
        None => vec![
            AgentSpec::mcts_star(),
            AgentSpec::bmrh_star(),
            AgentSpec::srh_star(),
        ],
    };
    if lineup.len() < 2 {
        bail!("round robin needs at least two agents");
    }
    let mut params = exp.params;
    params.players = 2;
    params.validate()?;
    exp.content.validate_for(&params)?;

    let mut pairs = Vec::new();
    for i in 0..lineup.len() {
        for j in i + 1..lineup.len() {
            pairs.push((i, j));
        }
    }

    struct PairReport {
        a: String,
        b: String,
        wins_a: f64,
        wins_b: f64,
        stalemates: u64,
    }

    let reports: Vec<PairReport> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (mut wins_a, mut wins_b, mut stalemates) = (0.0, 0.0, 0u64);
            let pair_seed = seed ^ ((i as u64) << 32 | j as u64).wrapping_mul(0x9E37_79B9);
            for g in 0..games {
                let game_seed = Rng64::stream_seed(pair_seed, g);
                let mut agent_rng = Rng64::new(game_seed ^ 0xAB);
                let a_seat = (g % 2) as usize;
                let mut agents = Vec::new();
                for seat in 0..2 {
                    let spec = if seat == a_seat { &lineup[i] } else { &lineup[j] };
                    agents.push(spec.build(agent_rng.next_u64()));
                }
                let result = run_game(&params, exp.content, &mut agents, game_seed, &exp.game)
                    .expect("validated");
                if result.outcome == Outcome::Stalemate {
                    stalemates += 1;
                    continue;
                }
                let share = 1.0 / result.winners.len() as f64;
                if result.winners.contains(&a_seat) {
                    wins_a += share;
                }
                if result.winners.contains(&(1 - a_seat)) {
                    wins_b += share;
                }
            }
            PairReport {
                a: lineup[i].label().to_string(),
                b: lineup[j].label().to_string(),
                wins_a,
                wins_b,
                stalemates,
            }
        })
        .collect();

    let mut writer = csv_writer(out)?;
    writer.write_record([
        "agent_a", "agent_b", "games", "rate_a", "rate_b", "se_a", "se_b", "stalemates",
    ])?;
    for r in &reports {
        let (ra, rb) = if games == 0 {
            (0.0, 0.0)
        } else {
            (r.wins_a / games as f64, r.wins_b / games as f64)
        };
        writer.write_record([
            r.a.clone(),
            r.b.clone(),
            games.to_string(),
            format!("{ra:.6}"),
            format!("{rb:.6}"),
            format!("{:.6}", std_err(ra, games)),
            format!("{:.6}", std_err(rb, games)),
            r.stalemates.to_string(),
        ])?;
        eprintln!(
            "{} vs {}: {} / {}, stalemates {}",
            r.a,
            r.b,
            rate_se(ra, games),
            rate_se(rb, games),
            pct(if games == 0 { 0.0 } else { r.stalemates as f64 / games as f64 }),
        );
    }
    writer.flush()?;
    Ok(())
}

/// Per-budget optimizer repeats with a true-fitness measurement of every
/// recommendation (box-plot source data).
pub fn cmd_tune(exp: &Experiment, seed: u64, out: Option<&str>) -> Result<()> {
    let kind = exp.file.agent.clone().unwrap_or_else(|| "bmrh".into());
    let kind: &'static str = match kind.as_str() {
        "bmrh" => "bmrh",
        "srh" => "srh",
        "mcts" => "mcts",
        other => bail!("cannot tune agent kind {other:?}"),
    };
    let space = exp.space_for(kind)?;
    let budgets = exp
        .file
        .budgets
        .clone()
        .unwrap_or_else(|| vec![50, 100, 200, 500, 1000]);
    let repeats = exp.file.repeats.unwrap_or(10);
    let eval_games = exp.file.eval_games.unwrap_or(200);
    let setup = MatchSetup {
        params: exp.params,
        game: exp.game,
        opponents: exp.opponents(),
    };
    setup.validate().map_err(anyhow::Error::msg)?;

    let mut jobs = Vec::new();
    for &budget in &budgets {
        for repeat in 0..repeats {
            jobs.push((budget, repeat));
        }
    }

    let rows: Vec<(u64, u64, f64, String)> = jobs
        .par_iter()
        .map(|&(budget, repeat)| {
            let evaluator = GameEvaluator {
                kind,
                space: space.clone(),
                setup: setup.clone(),
                content: exp.content,
                seed: Rng64::stream_seed(seed, budget.wrapping_mul(1733) + repeat),
            };
            let mut sample_index = 0u64;
            let mut fitness = |point: &[usize]| {
                let f = evaluator.sample(point, sample_index);
                sample_index += 1;
                f
            };
            let recommended = ntbea_run(
                &space,
                &mut fitness,
                budget,
                &NtbeaConfig::default(),
                evaluator.seed ^ 0x5eed,
            );
            let true_fitness = evaluator.win_rate(&recommended, eval_games, u64::MAX);
            let config = serde_json::Value::Object(space.point_to_json(&recommended));
            (budget, repeat, true_fitness, config.to_string())
        })
        .collect();

    let mut writer = csv_writer(out)?;
    writer.write_record(["agent", "budget", "repeat", "true_fitness", "config"])?;
    for (budget, repeat, fitness, config) in &rows {
        writer.write_record([
            kind.to_string(),
            budget.to_string(),
            repeat.to_string(),
            format!("{fitness:.6}"),
            config.clone(),
        ])?;
    }
    writer.flush()?;

    for &budget in &budgets {
        let fits: Vec<f64> = rows
            .iter()
            .filter(|(b, ..)| *b == budget)
            .map(|(_, _, f, _)| *f)
            .collect();
        let (mean, sd) = mean_sd(&fits);
        let min = fits.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = fits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        eprintln!(
            "budget {budget:5}: true fitness mean={mean:.3} sd={sd:.3} min={min:.3} max={max:.3} over {} repeats",
            fits.len()
        );
    }
    Ok(())
}

/// Evaluate every configuration of the space (or a random subsample) and
/// rank them: the ordered fitness landscape.
pub fn cmd_grid(
    exp: &Experiment,
    games: u64,
    seed: u64,
    sample: Option<u64>,
    out: Option<&str>,
) -> Result<()> {
    let kind = exp.file.agent.clone().unwrap_or_else(|| "bmrh".into());
    let kind: &'static str = match kind.as_str() {
        "bmrh" => "bmrh",
        "srh" => "srh",
        "mcts" => "mcts",
        other => bail!("cannot grid-search agent kind {other:?}"),
    };
    let space = exp.space_for(kind)?;
    let setup = MatchSetup {
        params: exp.params,
        game: exp.game,
        opponents: exp.opponents(),
    };
    setup.validate().map_err(anyhow::Error::msg)?;
    let evaluator = GameEvaluator {
        kind,
        space: space.clone(),
        setup,
        content: exp.content,
        seed,
    };

    let points: Vec<Vec<usize>> = match sample {
        None => space.enumerate().collect(),
        Some(n) => {
            let mut rng = Rng64::new(seed ^ 0x5A11);
            (0..n).map(|_| space.random_point(&mut rng)).collect()
        }
    };
    let mut ranked: Vec<(usize, Vec<usize>, f64)> = points
        .into_par_iter()
        .enumerate()
        .map(|(i, point)| {
            let rate = evaluator.win_rate(&point, games, i as u64);
            (i, point, rate)
        })
        .collect();
    ranked.sort_by(|a, b| b.2.partial_cmp(&a.2).unwrap().then(a.0.cmp(&b.0)));

    let mut writer = csv_writer(out)?;
    writer.write_record(["rank", "win_rate", "games", "config"])?;
    for (rank, (_, point, rate)) in ranked.iter().enumerate() {
        let config = serde_json::Value::Object(space.point_to_json(point));
        writer.write_record([
            rank.to_string(),
            format!("{rate:.6}"),
            games.to_string(),
            config.to_string(),
        ])?;
    }
    writer.flush()?;

    if let Some((_, best, rate)) = ranked.first() {
        eprintln!(
            "best {} config {} at {}",
            kind,
            serde_json::Value::Object(space.point_to_json(best)),
            rate_se(*rate, games)
        );
    }
    Ok(())
}

/// Forward-model throughput.
pub fn cmd_bench(exp: &Experiment, seconds: f64, seed: u64, out: Option<&str>) -> Result<()> {
    let report = bench_throughput(&exp.params, exp.content, seconds, seed)?;
    eprintln!(
        "{:.0} states/s, {:.1} games/s ({} applies, {} games in {:.2?})",
        report.states_per_sec,
        report.games_per_sec,
        report.applies,
        report.games,
        report.elapsed
    );
    if out.is_some() {
        let mut writer = csv_writer(out)?;
        writer.write_record(["states_per_sec", "games_per_sec", "applies", "games", "seconds"])?;
        writer.write_record([
            format!("{:.2}", report.states_per_sec),
            format!("{:.2}", report.games_per_sec),
            report.applies.to_string(),
            report.games.to_string(),
            format!("{:.3}", report.elapsed.as_secs_f64()),
        ])?;
        writer.flush()?;
    }
    Ok(())
}
