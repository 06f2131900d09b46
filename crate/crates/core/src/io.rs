//! Text and JSON formats used by the command-line tool.
//!
//! * ideal files: one polynomial per line or `;`-separated, `#` comments,
//!   optional `ring: ...` line;
//! * point configurations: `{labels, points}` with rationals as strings;
//! * subdivisions, sandwich reports, Gröbner bases and census results.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::SandwichReport;
use crate::census::CensusResult;
use crate::config::PointConfiguration;
use crate::fixtures::{MatroidBases, Tree};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, ReducedGB};
use crate::poly::{format_rational, parse_rational, Ring};
use crate::subdivision::{Cell, Subdivision};

pub fn read_ideal_file(path: impl AsRef<Path>) -> Result<Ideal> {
    Ideal::parse(&std::fs::read_to_string(path)?)
}

/// Ideal file text with an explicit ring line, readable by [`Ideal::parse`].
pub fn format_ideal_text(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let vars: Vec<String> = (0..ring.nvars()).map(|i| ring.var_name(i)).collect();
    let mut out = format!("ring: {}\n", vars.join(", "));
    for g in ideal.generators() {
        out.push_str(&g.to_string_in(ring));
        out.push('\n');
    }
    out
}

pub fn generator_strings(ideal: &Ideal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string_in(ideal.ring())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub labels: Vec<String>,
    pub points: Vec<Vec<String>>,
}

impl ConfigJson {
    pub fn from_config(c: &PointConfiguration) -> Self {
        ConfigJson {
            labels: c.labels().to_vec(),
            points: c.points().iter().map(|p| p.iter().map(format_rational).collect()).collect(),
        }
    }

    pub fn to_config(&self) -> Result<PointConfiguration> {
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(self.labels.clone(), points)
    }
}

pub fn read_config_file(path: impl AsRef<Path>) -> Result<PointConfiguration> {
    parse_config_json(&std::fs::read_to_string(path)?)
}

pub fn parse_config_json(text: &str) -> Result<PointConfiguration> {
    serde_json::from_str::<ConfigJson>(text)?.to_config()
}

fn cell_labels(c: &Cell, labels: &[String]) -> Vec<String> {
    c.members().iter().map(|&e| labels[e].clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub maximal: Vec<Vec<String>>,
    pub cells: Vec<Vec<String>>,
    pub face_edges: Vec<[usize; 2]>,
    pub uncovered: BTreeMap<String, Vec<String>>,
}

impl SubdivisionJson {
    pub fn new(t: &Subdivision, labels: &[String]) -> Result<Self> {
        if labels.len() != t.num_labels() {
            return Err(Error::Dimension {
                expected: t.num_labels(),
                got: labels.len(),
            });
        }
        Ok(SubdivisionJson {
            maximal: t.maximal_cells().map(|c| cell_labels(c, labels)).collect(),
            cells: t.cells().iter().map(|c| cell_labels(c, labels)).collect(),
            face_edges: t.face_edges().iter().map(|&(a, b)| [a, b]).collect(),
            uncovered: t
                .uncovered()
                .iter()
                .map(|(&e, c)| (labels[e].clone(), cell_labels(c, labels)))
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichJson {
    pub w: String,
    pub lower_gens: Vec<String>,
    pub initial_gens: Vec<String>,
    pub upper_gens: Vec<String>,
    pub lower_exact: bool,
    pub upper_exact: bool,
    pub theta_signature: Vec<Vec<String>>,
    pub theta_star_signature: Vec<Vec<String>>,
}

impl SandwichJson {
    /// Ideals are reported by their reduced grevlex bases.
    pub fn new(r: &SandwichReport, ring: &Ring) -> Self {
        let labels = ring.labels();
        SandwichJson {
            w: r.w.to_string(),
            lower_gens: r.lower.basis_strings(),
            initial_gens: r.initial.basis_strings(),
            upper_gens: r.upper.basis_strings(),
            lower_exact: r.lower_exact,
            upper_exact: r.upper_exact,
            theta_signature: r.theta.maximal_cells().map(|c| cell_labels(c, labels)).collect(),
            theta_star_signature: r.theta_star.maximal_cells().map(|c| cell_labels(c, labels)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub order: String,
    pub ring: Vec<String>,
    pub basis: Vec<String>,
}

impl GroebnerJson {
    pub fn new(gb: &ReducedGB, ring: &Ring) -> Self {
        GroebnerJson {
            order: gb.order().to_string(),
            ring: (0..ring.nvars()).map(|i| ring.var_name(i)).collect(),
            basis: gb.elements().iter().map(|g| g.to_string_in(ring)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClassJson {
    pub signature: Vec<Vec<String>>,
    pub representative: String,
    pub omega: bool,
    pub omega_star: bool,
    pub is_triangulation: bool,
    pub hits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub seed: u64,
    pub samples_drawn: usize,
    pub classes_found: usize,
    pub triangulation_classes: usize,
    pub omega_triangulation_classes: usize,
    pub classes: Vec<CensusClassJson>,
}

impl CensusJson {
    pub fn new(r: &CensusResult, labels: &[String]) -> Self {
        CensusJson {
            seed: r.seed,
            samples_drawn: r.samples_drawn,
            classes_found: r.classes.len(),
            triangulation_classes: r.triangulation_classes(),
            omega_triangulation_classes: r.omega_triangulations(),
            classes: r
                .classes
                .iter()
                .map(|(sig, c)| CensusClassJson {
                    signature: sig.iter().map(|cell| cell_labels(cell, labels)).collect(),
                    representative: c.representative.to_string(),
                    omega: c.omega,
                    omega_star: c.omega_star,
                    is_triangulation: c.is_triangulation,
                    hits: c.hits,
                })
                .collect(),
        }
    }
}

/// A tree with vertices numbered from 1; leaves are `1..=leaves`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub leaves: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, usize, String)>,
}

impl TreeJson {
    pub fn from_tree(t: &Tree) -> Self {
        TreeJson {
            leaves: t.leaves(),
            vertices: t.vertices(),
            edges: t.edges().iter().map(|(a, b, w)| (a + 1, b + 1, format_rational(w))).collect(),
        }
    }

    pub fn to_tree(&self) -> Result<Tree> {
        let edges = self
            .edges
            .iter()
            .map(|(a, b, w)| {
                if *a == 0 || *b == 0 {
                    return Err(Error::Precondition("tree vertices are numbered from 1".into()));
                }
                Ok((a - 1, b - 1, parse_rational(w)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Tree::new(self.leaves, self.vertices, edges)
    }
}

/// Bases as 1-based subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub k: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn to_matroid(&self) -> Result<MatroidBases> {
        MatroidBases::new(self.n, self.k, &self.bases)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::sandwich;
    use crate::fixtures::{hypersimplex_config, plucker_ideal};
    use crate::poly::{MonomialOrder, WeightVector};
    use crate::subdivision::regular_subdivision;

    #[test]
    fn config_round_trip() {
        let h = hypersimplex_config(2, 4).unwrap();
        let text = to_json(&ConfigJson::from_config(&h)).unwrap();
        let back = parse_config_json(&text).unwrap();
        assert_eq!(back.labels(), h.labels());
        assert_eq!(back.points(), h.points());
        let frac = parse_config_json(r#"{"labels":["a","b"],"points":[["1/2"],["-3"]]}"#).unwrap();
        assert_eq!(format_rational(&frac.point(0)[0]), "1/2");
        assert!(parse_config_json(r#"{"labels":["a"],"points":[["x"]]}"#).is_err());
    }

    #[test]
    fn ideal_text_round_trip() {
        let i = plucker_ideal(2, 5).unwrap();
        let text = format_ideal_text(&i);
        assert!(text.starts_with("ring: x[1,2], x[1,3]"));
        let back = Ideal::parse(&text).unwrap();
        assert_eq!(back.ring().labels(), i.ring().labels());
        assert!(back.equals(&i));
    }

    #[test]
    fn subdivision_json_shape() {
        let sq = PointConfiguration::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]);
        let t = regular_subdivision(&sq, &WeightVector::from_ints(&[0, 0, 1, 0])).unwrap();
        let j = SubdivisionJson::new(&t, sq.labels()).unwrap();
        assert_eq!(j.maximal, vec![vec!["1", "2", "3"], vec!["1", "2", "4"]]);
        let v: serde_json::Value = serde_json::from_str(&to_json(&j).unwrap()).unwrap();
        for key in ["maximal", "cells", "face_edges", "uncovered"] {
            assert!(v.get(key).is_some());
        }
    }

    #[test]
    fn sandwich_json_shape() {
        let i = Ideal::parse("x1*x2 - x3*x4").unwrap();
        let r = sandwich(&i, &WeightVector::from_ints(&[0, 0, 1, 0])).unwrap();
        let j = SandwichJson::new(&r, i.ring());
        assert_eq!(j.initial_gens, vec!["x1*x2"]);
        assert!(j.lower_exact && j.upper_exact);
        assert_eq!(j.w, "0,0,1,0");
    }

    #[test]
    fn tree_json_round_trip() {
        let text = r#"{"leaves":3,"vertices":4,"edges":[[1,4,"1"],[2,4,"2"],[3,4,"1/2"]]}"#;
        let t = serde_json::from_str::<TreeJson>(text).unwrap().to_tree().unwrap();
        assert_eq!(crate::fixtures::tree_weight(&t, 3).unwrap().to_string(), "3,3/2,5/2");
        assert_eq!(serde_json::to_value(TreeJson::from_tree(&t)).unwrap(), serde_json::from_str::<serde_json::Value>(text).unwrap());
    }

    #[test]
    fn groebner_json() {
        let i = Ideal::parse("x1*x2 - x3*x4").unwrap();
        let w = WeightVector::from_ints(&[0, 0, 1, 0]);
        let gb = i.groebner(&MonomialOrder::weighted(w, MonomialOrder::grevlex()));
        let j = GroebnerJson::new(&gb, i.ring());
        assert_eq!(j.order, "weighted(0,0,1,0; grevlex)");
        assert_eq!(j.basis.len(), 1);
    }
}
