//! Experiment harness for the game engine: baselines, matches, round
//! robins, hyper-parameter search and throughput benchmarks.

mod commands;
mod config;
mod report;

use anyhow::Result;
use clap::{Parser, Subcommand};
use config::Experiment;

#[derive(Parser)]
#[command(
    name = "splendor",
    about = "Run game experiments: random baselines, agent matches, tournaments, tuning and benchmarks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Experiment description (JSON); command-line flags override it.
    #[arg(long, global = true)]
    config: Option<String>,

    /// Games to play (per pair for roundrobin, per config for grid).
    #[arg(long, global = true, default_value_t = 1000)]
    games: u64,

    /// Master seed; identical invocations produce identical outputs.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Forward-model budget per tick.
    #[arg(long, global = true, default_value_t = 1000)]
    budget: u64,

    /// Tick limit per game.
    #[arg(long, global = true, default_value_t = 300)]
    max_ticks: u32,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// CSV output path (default: stdout).
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Play games with a fixed lineup and report per-seat statistics.
    Play {
        /// Comma-separated lineup, e.g. `rnd,rnd,rnd,rnd` or `bmrh,osla,osla,osla`.
        #[arg(long)]
        agents: Option<String>,
    },
    /// Fixed lineup with seat rotation; per-agent win rates.
    Match {
        #[arg(long)]
        agents: Option<String>,
    },
    /// Two-player round robin between all pairs of agents.
    Roundrobin {
        #[arg(long)]
        agents: Option<String>,
    },
    /// Tune an agent with the n-tuple bandit optimizer across budgets.
    Tune {
        /// Agent kind: bmrh | srh | mcts.
        #[arg(long)]
        agent: Option<String>,
        /// Optimizer budgets (fitness evaluations), comma-separated.
        #[arg(long)]
        budgets: Option<String>,
        /// Optimizer runs per budget.
        #[arg(long)]
        repeats: Option<u64>,
        /// Games for the true-fitness measurement of each recommendation.
        #[arg(long)]
        eval_games: Option<u64>,
    },
    /// Evaluate every config of a space (or a subsample) and rank them.
    Grid {
        #[arg(long)]
        agent: Option<String>,
        /// Evaluate only this many randomly sampled configs.
        #[arg(long)]
        sample: Option<u64>,
    },
    /// Measure forward-model throughput with random play.
    Bench {
        #[arg(long, default_value_t = 10.0)]
        seconds: f64,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }

    let agents_flag = match &cli.command {
        Command::Play { agents }
        | Command::Match { agents }
        | Command::Roundrobin { agents } => agents.clone(),
        _ => None,
    };
    let mut exp = Experiment::load(
        cli.config.as_deref(),
        agents_flag.as_deref(),
        cli.budget,
        cli.max_ticks,
    )?;

    match cli.command {
        Command::Play { .. } => commands::cmd_play(&exp, cli.games, cli.seed, cli.out.as_deref()),
        Command::Match { .. } => commands::cmd_match(&exp, cli.games, cli.seed, cli.out.as_deref()),
        Command::Roundrobin { .. } => {
            commands::cmd_roundrobin(&exp, cli.games, cli.seed, cli.out.as_deref())
        }
        Command::Tune {
            agent,
            budgets,
            repeats,
            eval_games,
        } => {
            if let Some(agent) = agent {
                exp.file.agent = Some(agent);
            }
            if let Some(list) = budgets {
                let parsed: Result<Vec<u64>, _> =
                    list.split(',').map(|b| b.trim().parse::<u64>()).collect();
                exp.file.budgets = Some(parsed?);
            }
            if let Some(repeats) = repeats {
                exp.file.repeats = Some(repeats);
            }
            if let Some(eval_games) = eval_games {
                exp.file.eval_games = Some(eval_games);
            }
            commands::cmd_tune(&exp, cli.seed, cli.out.as_deref())
        }
        Command::Grid { agent, sample } => {
            if let Some(agent) = agent {
                exp.file.agent = Some(agent);
            }
            commands::cmd_grid(&exp, cli.games, cli.seed, sample, cli.out.as_deref())
        }
        Command::Bench { seconds } => {
            commands::cmd_bench(&exp, seconds, cli.seed, cli.out.as_deref())
        }
    }
}
