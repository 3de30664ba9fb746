//! Declarative agent descriptions: flat JSON in, runnable agents out.

use crate::engine::Agent;
use serde::{Deserialize, Serialize};

use super::{BmrhAgent, BmrhConfig, CommonConfig, MctsAgent, MctsConfig, OslaAgent, RndAgent, SrhAgent, SrhConfig};

/// Everything needed to build one agent. Serializes to a flat JSON object:
/// `{"kind": "bmrh", "l": 2, "n": 200, ..., "om": 0, "omsb": 0.05}` with
/// hyper-parameters keyed by their symbol names; missing keys take the
/// tuned defaults.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AgentSpec {
    Rnd,
    Osla,
    Bmrh {
        #[serde(flatten)]
        cfg: BmrhConfig,
        #[serde(flatten)]
        common: CommonConfig,
    },
    Srh {
        #[serde(flatten)]
        cfg: SrhConfig,
        #[serde(flatten)]
        common: CommonConfig,
    },
    Mcts {
        #[serde(flatten)]
        cfg: MctsConfig,
        #[serde(flatten)]
        common: CommonConfig,
    },
}

impl AgentSpec {
    /// The tuned branching-mutation rolling-horizon configuration.
    pub fn bmrh_star() -> Self {
        AgentSpec::Bmrh {
            cfg: BmrhConfig::default(),
            common: CommonConfig::default(),
        }
    }

    /// The tuned seeding rolling-horizon configuration.
    pub fn srh_star() -> Self {
        AgentSpec::Srh {
            cfg: SrhConfig::default(),
            common: CommonConfig::default(),
        }
    }

    /// The tuned MCTS configuration.
    pub fn mcts_star() -> Self {
        AgentSpec::Mcts {
            cfg: MctsConfig::default(),
            common: CommonConfig::default(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            AgentSpec::Rnd => "rnd",
            AgentSpec::Osla => "osla",
            AgentSpec::Bmrh { .. } => "bmrh",
            AgentSpec::Srh { .. } => "srh",
            AgentSpec::Mcts { .. } => "mcts",
        }
    }

    pub fn build(&self, seed: u64) -> Box<dyn Agent> {
        match self {
            AgentSpec::Rnd => Box::new(RndAgent::new(seed)),
            AgentSpec::Osla => Box::new(OslaAgent::new(seed)),
            AgentSpec::Bmrh { cfg, common } => Box::new(BmrhAgent::new(*cfg, *common, seed)),
            AgentSpec::Srh { cfg, common } => Box::new(SrhAgent::new(*cfg, *common, seed)),
            AgentSpec::Mcts { cfg, common } => Box::new(MctsAgent::new(*cfg, *common, seed)),
        }
    }

    /// Build a spec of the given kind from a flat hyper-parameter object
    /// (tuning and CLI entry point).
    pub fn from_kind_config(
        kind: &str,
        config: &serde_json::Map<String, serde_json::Value>,
    ) -> Result<AgentSpec, String> {
        let mut map = config.clone();
        map.insert("kind".into(), serde_json::Value::String(kind.to_string()));
        serde_json::from_value(serde_json::Value::Object(map)).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_json_round_trip() {
        let spec = AgentSpec::bmrh_star();
        let json = serde_json::to_value(spec).unwrap();
        assert_eq!(json["kind"], "bmrh");
        assert_eq!(json["l"], 2);
        assert_eq!(json["ms"], 1);
        assert_eq!(json["om"], 0);
        let back: AgentSpec = serde_json::from_value(json).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn missing_keys_take_defaults() {
        let spec: AgentSpec = serde_json::from_str(r#"{"kind":"mcts","c":1.41}"#).unwrap();
        match spec {
            AgentSpec::Mcts { cfg, common } => {
                assert_eq!(cfg.c, 1.41);
                assert_eq!(cfg.d, 2);
                assert_eq!(cfg.ps, 1);
                assert_eq!(common.om, 0);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn from_kind_config_merges_kind() {
        let mut map = serde_json::Map::new();
        map.insert("l".into(), 5.into());
        map.insert("mr".into(), serde_json::json!(0.5));
        let spec = AgentSpec::from_kind_config("srh", &map).unwrap();
        match spec {
            AgentSpec::Srh { cfg, .. } => {
                assert_eq!(cfg.l, 5);
                assert_eq!(cfg.mr, 0.5);
            }
            _ => panic!("wrong kind"),
        }
    }
}
