//! The fan file: `{"dim": 2, "rays": [[1,0],...], "max_cones": [[0,1],...]}`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Deserialize;
use toric_orbits::Fan;

/// An integer entry. Values past the i64 range may be given as decimal strings.
#[derive(Deserialize)]
#[serde(untagged)]
enum Int {
    Num(i64),
    Str(String),
}

impl Int {
    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Int::Num(x) => Ok(BigInt::from(*x)),
            Int::Str(s) => s.trim().parse().map_err(|_| format!("{s:?} is not an integer")),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    dim: usize,
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanFile {
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanFile {
    /// Structural parse only; the geometry is checked by `validate_fan`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let rays = raw
            .rays
            .iter()
            .map(|r| r.iter().map(Int::to_bigint).collect())
            .collect::<Result<_, _>>()?;
        Ok(FanFile {
            dim: raw.dim,
            rays,
            max_cones: raw.max_cones,
        })
    }

    pub fn from_fan(fan: &Fan) -> Self {
        FanFile {
            dim: fan.dim(),
            rays: fan.ray_vectors(),
            max_cones: fan.max_cones().iter().map(|c| c.rays().to_vec()).collect(),
        }
    }

    /// One line, in the layout of the schema.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"dim\": {}, \"rays\": [", self.dim);
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let entries: Vec<String> = r.iter().map(|x| crate::report::int(x).to_string()).collect();
            write!(out, "[{}]", entries.join(",")).unwrap();
        }
        out.push_str("], \"max_cones\": [");
        for (i, c) in self.max_cones.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let entries: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(out, "[{}]", entries.join(",")).unwrap();
        }
        out.push_str("]}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_schema() {
        let f = FanFile::parse(r#"{"dim": 2, "rays": [[1,0],[0,1],[-1,-2],[0,-1]], "max_cones": [[0,1],[1,2],[2,3],[3,0]]}"#)
            .unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.rays[2], vec![BigInt::from(-1), BigInt::from(-2)]);
        assert_eq!(f.max_cones.len(), 4);
    }

    #[test]
    fn large_entries_as_strings() {
        let f = FanFile::parse(r#"{"dim": 1, "rays": [["123456789012345678901234"]], "max_cones": [[0]]}"#).unwrap();
        assert_eq!(f.rays[0][0], "123456789012345678901234".parse::<BigInt>().unwrap());
        let text = f.to_json();
        assert_eq!(FanFile::parse(&text).unwrap(), f);
        assert!(text.contains("\"123456789012345678901234\""));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(FanFile::parse(r#"{"dim": 2, "rays": [[1,0]]}"#).is_err());
        assert!(FanFile::parse(r#"{"dim": 2, "rays": [[1.5,0]], "max_cones": []}"#).is_err());
        assert!(FanFile::parse(r#"{"dim": 2, "rays": [], "max_cones": [], "extra": 1}"#).is_err());
        assert!(FanFile::parse(r#"{"dim": 1, "rays": [["x"]], "max_cones": [[0]]}"#).is_err());
    }

    #[test]
    fn layout() {
        let f = FanFile::parse(r#"{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]}"#).unwrap();
        assert_eq!(f.to_json(), "{\"dim\": 1, \"rays\": [[1],[-1]], \"max_cones\": [[0],[1]]}\n");
    }
}
