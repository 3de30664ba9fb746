//! Experiment configuration: JSON file plus command-line overrides.

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use splendor_core::agents::AgentSpec;
use splendor_core::engine::GameConfig;
use splendor_core::tuning::SearchSpace;
use splendor_core::{ContentSet, GameParams};

/// The JSON experiment description. Every field is optional; commands pick
/// the parts they need and fall back to defaults.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentFile {
    /// Game rule parameters (defaults: the base four-player game).
    pub params: Option<GameParams>,
    /// The playing lineup for `play` and `match`.
    pub agents: Option<Vec<AgentSpec>>,
    /// Opponent bench for `tune` and `grid` (default: three OSLA).
    pub opponents: Option<Vec<AgentSpec>>,
    /// Agent kind to tune ("bmrh" | "srh" | "mcts").
    pub agent: Option<String>,
    /// Inline hyper-parameter space.
    pub space: Option<SearchSpace>,
    /// Path to a hyper-parameter space JSON file.
    pub space_path: Option<String>,
    /// Optimizer budgets for `tune`.
    pub budgets: Option<Vec<u64>>,
    /// Optimizer repeats per budget for `tune`.
    pub repeats: Option<u64>,
    /// Games for the true-fitness measurement of each recommendation.
    pub eval_games: Option<u64>,
    /// Custom content files (defaults: the bundled set).
    pub cards_path: Option<String>,
    pub nobles_path: Option<String>,
}

pub struct Experiment {
    pub params: GameParams,
    pub game: GameConfig,
    pub content: &'static ContentSet,
    pub file: ExperimentFile,
}

fn leak_content(content: ContentSet) -> &'static ContentSet {
    Box::leak(Box::new(content))
}

impl Experiment {
    pub fn load(
        config_path: Option<&str>,
        agents_flag: Option<&str>,
        budget: u64,
        max_ticks: u32,
    ) -> Result<Experiment> {
        let mut file = match config_path {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading config {path}"))?;
                serde_json::from_str::<ExperimentFile>(&text)
                    .with_context(|| format!("parsing config {path}"))?
            }
            None => ExperimentFile::default(),
        };
        if let Some(flag) = agents_flag {
            file.agents = Some(parse_agent_list(flag)?);
        }
        let params = file.params.unwrap_or_default();
        params.validate().map_err(anyhow::Error::from)?;
        let content = match (&file.cards_path, &file.nobles_path) {
            (Some(cards), Some(nobles)) => {
                leak_content(ContentSet::from_files(cards, nobles)?)
            }
            (None, None) => ContentSet::bundled(),
            _ => bail!("cards_path and nobles_path must be given together"),
        };
        content.validate_for(&params)?;
        Ok(Experiment {
            params,
            game: GameConfig {
                max_ticks,
                per_tick_budget: budget,
            },
            content,
            file,
        })
    }

    /// The lineup for play/match: configured agents or a random-agent table.
    pub fn lineup(&self) -> Result<Vec<AgentSpec>> {
        let agents = match &self.file.agents {
            Some(list) => list.clone(),
            None => vec![AgentSpec::Rnd; self.params.players],
        };
        if agents.len() != self.params.players {
            bail!(
                "{} agents configured for a {}-player game",
                agents.len(),
                self.params.players
            );
        }
        Ok(agents)
    }

    pub fn opponents(&self) -> Vec<AgentSpec> {
        self.file
            .opponents
            .clone()
            .unwrap_or_else(|| vec![AgentSpec::Osla; self.params.players - 1])
    }

    pub fn space_for(&self, kind: &str) -> Result<SearchSpace> {
        if let Some(space) = &self.file.space {
            return Ok(space.clone());
        }
        if let Some(path) = &self.file.space_path {
            let text =
                std::fs::read_to_string(path).with_context(|| format!("reading space {path}"))?;
            return SearchSpace::from_json_str(&text).map_err(anyhow::Error::msg);
        }
        SearchSpace::bundled(kind)
            .with_context(|| format!("no bundled hyper-parameter space for agent kind {kind:?}"))
    }
}

/// Parse a comma-separated list of agent kinds, e.g. `bmrh,osla,osla,osla`.
/// Kinds use their tuned default hyper-parameters.
pub fn parse_agent_list(list: &str) -> Result<Vec<AgentSpec>> {
    list.split(',')
        .map(|name| match name.trim() {
            "rnd" => Ok(AgentSpec::Rnd),
            "osla" => Ok(AgentSpec::Osla),
            "bmrh" => Ok(AgentSpec::bmrh_star()),
            "srh" => Ok(AgentSpec::srh_star()),
            "mcts" => Ok(AgentSpec::mcts_star()),
            other => bail!("unknown agent kind {other:?}"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agent_list_parses() {
        let list = parse_agent_list("bmrh, osla,rnd").unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(list[0].label(), "bmrh");
        assert!(parse_agent_list("nope").is_err());
    }

    #[test]
    fn default_experiment_loads() {
        let exp = Experiment::load(None, None, 1000, 300).unwrap();
        assert_eq!(exp.params.players, 4);
        assert_eq!(exp.lineup().unwrap().len(), 4);
        assert_eq!(exp.opponents().len(), 3);
    }
}
