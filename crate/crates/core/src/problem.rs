//! The JSON problem file.
//!
//! ```json
//! { "dim": 2, "entries": [["i*eps", "1"], ["1", "-i*eps"]],
//!   "parity": [["0", "1"], ["1", "0"]], "samples": ["0", "1/2"] }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, GaussianRational, Rational};
use crate::family::ParamMatrix;
use crate::matrix::{ParitySpec, SquareMatrix};
use crate::parse::parse_entry;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Parametric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isolate_width: Option<String>,
}

/// A validated problem.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub mode: Mode,
    pub matrix: ParamMatrix,
    pub parity: Option<ParitySpec>,
    pub samples: Vec<Rational>,
    pub isolate_width: Option<Rational>,
}

impl Problem {
    /// The matrix itself when no entry mentions eps.
    pub fn numeric_matrix(&self) -> Option<SquareMatrix<GaussianRational>> {
        (self.mode == Mode::Numeric).then(|| self.matrix.specialize(&Rational::from_integer(0.into())))
    }
}

fn grid(name: &str, dim: usize, rows: &[Vec<String>]) -> Result<Vec<(usize, usize, String)>> {
    if rows.len() != dim {
        return Err(Error::Problem(format!(
            "{name}: expected {dim} rows, found {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Problem(format!(
                "{name}: row {i} has {} entries, expected {dim}",
                row.len()
            )));
        }
        out.extend(row.iter().enumerate().map(|(j, s)| (i, j, s.clone())));
    }
    Ok(out)
}

fn parse_cells(name: &str, cells: Vec<(usize, usize, String)>) -> Result<(Vec<Poly<GaussianRational>>, bool)> {
    let mut mentions = false;
    let mut polys = Vec::with_capacity(cells.len());
    for (i, j, src) in cells {
        let e = parse_entry(&src).map_err(|e| Error::Problem(format!("{name}[{i}][{j}] {src:?}: {e}")))?;
        mentions |= e.mentions_eps();
        polys.push(e.eval());
    }
    Ok((polys, mentions))
}

pub fn parse_rational_field(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| Error::Problem(format!("{name} {s:?}: {e}")))
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Problem(e.to_string()))
    }

    pub fn validate(&self) -> Result<Problem> {
        if self.dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let (entries, parametric) = parse_cells("entries", grid("entries", self.dim, &self.entries)?)?;
        let mode = if parametric { Mode::Parametric } else { Mode::Numeric };
        if let Some(declared) = self.mode {
            if declared != mode {
                return Err(Error::Problem(format!(
                    "mode is {declared:?} but the entries are {}",
                    if parametric { "parametric" } else { "numeric" }
                )));
            }
        }
        let parity = match &self.parity {
            None => None,
            Some(rows) => {
                let (cells, mentions) = parse_cells("parity", grid("parity", self.dim, rows)?)?;
                if mentions {
                    return Err(Error::ParametricParity);
                }
                let m = SquareMatrix::new(self.dim, cells.into_iter().map(|p| p.coeff(0)).collect())?;
                Some(ParitySpec::new(m)?)
            }
        };
        let samples = self
            .samples
            .iter()
            .flatten()
            .map(|s| parse_rational_field("sample", s))
            .collect::<Result<_>>()?;
        let isolate_width = self
            .isolate_width
            .as_deref()
            .map(|s| parse_rational_field("isolate_width", s))
            .transpose()?;
        Ok(Problem {
            mode,
            matrix: ParamMatrix::new(SquareMatrix::new(self.dim, entries)?),
            parity,
            samples,
            isolate_width,
        })
    }
}

pub fn load_problem(text: &str) -> Result<Problem> {
    ProblemFile::from_json(text)?.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parametric_file() {
        let p = load_problem(
            r#"{"dim": 2, "entries": [["i*eps", "1"], ["1", "-i*eps"]],
                "parity": [["0", "1"], ["1", "0"]], "samples": ["-1/2", "2"], "isolate_width": "1/64"}"#,
        )
        .unwrap();
        assert_eq!(p.mode, Mode::Parametric);
        assert_eq!(p.parity, Some(ParitySpec::anti_diagonal(2)));
        assert_eq!(p.samples, vec![rat(-1, 2), rat(2, 1)]);
        assert_eq!(p.isolate_width, Some(rat(1, 64)));
        assert!(p.numeric_matrix().is_none());
    }

    #[test]
    fn numeric_file() {
        let p = load_problem(r#"{"dim": 1, "mode": "numeric", "entries": [["3/2 + i"]]}"#).unwrap();
        assert_eq!(
            p.numeric_matrix().unwrap().get(0, 0),
            &GaussianRational::new(rat(3, 2), rat(1, 1))
        );
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            r#"{"dim": 2, "entries": [["1", "2"]]}"#,
            r#"{"dim": 1, "entries": [["1", "2"]]}"#,
            r#"{"dim": 1, "entries": [["2+"]]}"#,
            r#"{"dim": 1, "mode": "numeric", "entries": [["eps"]]}"#,
            r#"{"dim": 1, "entries": [["1"]], "colour": "red"}"#,
            r#"{"dim": 1, "entries": [["1"]], "samples": ["x"]}"#,
            r#"{"dim": 2, "entries": [["1", "0"], ["0", "1"]], "parity": [["1", "1"], ["0", "1"]]}"#,
            r#"{"dim": 0, "entries": []}"#,
        ];
        for text in bad {
            assert!(load_problem(text).is_err(), "{text}");
        }
        assert_eq!(
            load_problem(r#"{"dim": 1, "entries": [["1"]], "parity": [["eps"]]}"#),
            Err(Error::ParametricParity)
        );
        match load_problem(r#"{"dim": 1, "entries": [["2+"]]}"#) {
            Err(Error::Problem(msg)) => assert!(msg.contains("byte 2"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
}
