//! Discrete search spaces: ordered dimensions of discrete values.

use crate::rng::Rng64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// One discrete hyper-parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Bool(bool),
    Int(i64),
    Float(f64),
}

impl ParamValue {
    pub fn to_json(self) -> Value {
        match self {
            ParamValue::Bool(b) => Value::Bool(b),
            ParamValue::Int(i) => Value::from(i),
            ParamValue::Float(f) => Value::from(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dimension {
    pub name: String,
    pub values: Vec<ParamValue>,
}

/// An ordered list of dimensions; a configuration is one value index per
/// dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub dims: Vec<Dimension>,
}

const BUNDLED_BMRH: &str = include_str!("../../data/spaces/bmrh.json");
const BUNDLED_SRH: &str = include_str!("../../data/spaces/srh.json");
const BUNDLED_MCTS: &str = include_str!("../../data/spaces/mcts.json");

impl SearchSpace {
    pub fn from_json_str(json: &str) -> Result<SearchSpace, String> {
        let space: SearchSpace = serde_json::from_str(json).map_err(|e| e.to_string())?;
        if space.dims.is_empty() {
            return Err("a search space needs at least one dimension".into());
        }
        for dim in &space.dims {
            if dim.values.is_empty() {
                return Err(format!("dimension {} has no values", dim.name));
            }
        }
        Ok(space)
    }

    /// The hand-picked hyper-parameter space of the given agent kind.
    pub fn bundled(kind: &str) -> Option<SearchSpace> {
        let json = match kind {
            "bmrh" => BUNDLED_BMRH,
            "srh" => BUNDLED_SRH,
            "mcts" => BUNDLED_MCTS,
            _ => return None,
        };
        Some(SearchSpace::from_json_str(json).expect("bundled spaces are well-formed"))
    }

    pub fn size(&self) -> u128 {
        self.dims.iter().map(|d| d.values.len() as u128).product()
    }

    pub fn random_point(&self, rng: &mut Rng64) -> Vec<usize> {
        self.dims.iter().map(|d| rng.index(d.values.len())).collect()
    }

    /// Flat JSON object for a point, keyed by dimension names.
    pub fn point_to_json(&self, point: &[usize]) -> Map<String, Value> {
        debug_assert_eq!(point.len(), self.dims.len());
        self.dims
            .iter()
            .zip(point)
            .map(|(d, &i)| (d.name.clone(), d.values[i].to_json()))
            .collect()
    }

    /// Every point of the space in odometer order (first dimension slowest).
    pub fn enumerate(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let sizes: Vec<usize> = self.dims.iter().map(|d| d.values.len()).collect();
        let total: u128 = self.size();
        (0..total).map(move |mut idx| {
            let mut point = vec![0usize; sizes.len()];
            for (i, &size) in sizes.iter().enumerate().rev() {
                point[i] = (idx % size as u128) as usize;
                idx /= size as u128;
            }
            point
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_spaces_parse_with_expected_sizes() {
        let bmrh = SearchSpace::bundled("bmrh").unwrap();
        assert_eq!(bmrh.size(), 207_360);
        assert_eq!(bmrh.dims[0].name, "l");

        let srh = SearchSpace::bundled("srh").unwrap();
        assert_eq!(srh.size(), 23_040);

        let mcts = SearchSpace::bundled("mcts").unwrap();
        assert_eq!(mcts.size(), 5_400);

        assert!(SearchSpace::bundled("rnd").is_none());
    }

    #[test]
    fn enumerate_covers_the_space() {
        let space = SearchSpace::from_json_str(
            r#"{"dims":[{"name":"a","values":[1,2]},{"name":"b","values":[true,false]},{"name":"c","values":[0.5]}]}"#,
        )
        .unwrap();
        let points: Vec<Vec<usize>> = space.enumerate().collect();
        assert_eq!(points.len(), 4);
        assert_eq!(points[0], vec![0, 0, 0]);
        assert_eq!(points[3], vec![1, 1, 0]);
    }

    #[test]
    fn point_json_uses_symbol_names() {
        let space = SearchSpace::bundled("mcts").unwrap();
        let point = vec![0usize; space.dims.len()];
        let json = space.point_to_json(&point);
        assert_eq!(json["d"], 2);
        assert_eq!(json["c"], 0.0);
        assert_eq!(json["e"], 1e-6);
    }

    #[test]
    fn rejects_empty_spaces() {
        assert!(SearchSpace::from_json_str(r#"{"dims":[]}"#).is_err());
        assert!(
            SearchSpace::from_json_str(r#"{"dims":[{"name":"a","values":[]}]}"#).is_err()
        );
    }
}
