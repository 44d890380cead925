//! Deterministic instance generators.
//!
//! A [`GeneratorSpec`] names a family and its parameters as a single line
//! `family:key=value,...` (`;` also separates parameters); the same spec always yields the same graph and
//! coloring. Known families:
//!
//! | family | parameters | coloring |
//! |---|---|---|
//! | `path`, `cycle`, `complete` | `n` | none |
//! | `star` | `leaves` | none |
//! | `power-set` | `k` | adversarial |
//! | `half-complement` | `k` | adversarial |
//! | `multipartite` | `parts=5/5/5`, `strict=true` | adversarial |
//! | `spider` | `k` | adversarial |
//! | `maxsep-gadget` | `vars`, `clauses=1+-2/2+3` | adversarial |
//! | `random-twin-free`, `random-triangle-free` | `n`, `p`, `seed` | optional |
//! | `random-bounded-degree` | `n`, `max-degree`, `p`, `seed` | optional |
//! | `random-tree` | `n`, `seed` | optional |
//!
//! Random families take an optional `coloring-seed` for a uniform random coloring.

pub mod families;
pub mod random;
pub mod reductions;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use families::*;
pub use random::*;
pub use reductions::*;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: String,
    pub params: BTreeMap<String, String>,
}

/// Output of [`GeneratorSpec::generate`]. `k` is the decision threshold for
/// families that define one.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub coloring: Option<Coloring>,
    pub k: Option<usize>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        Generated { graph, coloring: None, k: None }
    }

    fn colored((graph, coloring): (Graph, Coloring)) -> Self {
        Generated { graph, coloring: Some(coloring), k: None }
    }
}

impl GeneratorSpec {
    pub fn new(family: &str) -> Self {
        GeneratorSpec { family: family.to_string(), params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    fn parsed<T: FromStr>(&self, key: &str, default: Option<T>) -> Result<T> {
        match self.raw(key) {
            Some(v) => v.parse().map_err(|_| Error::Spec(format!("{}: invalid value {v:?} for {key}", self.family))),
            None => default.ok_or_else(|| Error::Spec(format!("{}: missing parameter {key}", self.family))),
        }
    }

    fn allow(&self, keys: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::Spec(format!("{}: unknown parameter {k}", self.family))),
            None => Ok(()),
        }
    }

    fn with_random_coloring(&self, graph: Graph) -> Result<Generated> {
        let coloring = match self.raw("coloring-seed") {
            Some(_) => Some(random_coloring(graph.order(), self.parsed("coloring-seed", None)?)),
            None => None,
        };
        Ok(Generated { graph, coloring, k: None })
    }

    pub fn generate(&self) -> Result<Generated> {
        match self.family.as_str() {
            "path" | "cycle" | "complete" => {
                self.allow(&["n"])?;
                let n = self.parsed("n", None)?;
                Ok(Generated::plain(match self.family.as_str() {
                    "path" => path(n),
                    "cycle" => cycle(n),
                    _ => complete(n),
                }))
            }
            "star" => {
                self.allow(&["leaves"])?;
                Ok(Generated::plain(star(self.parsed("leaves", None)?)))
            }
            "power-set" => {
                self.allow(&["k"])?;
                gen_power_set_graph(self.parsed("k", None)?).map(Generated::colored)
            }
            "half-complement" => {
                self.allow(&["k"])?;
                gen_half_graph_complement(self.parsed("k", None)?).map(Generated::colored)
            }
            "spider" => {
                self.allow(&["k"])?;
                gen_spider(self.parsed("k", None)?).map(Generated::colored)
            }
            "multipartite" => {
                self.allow(&["parts", "strict"])?;
                let raw = self.raw("parts").ok_or_else(|| Error::Spec("multipartite: missing parameter parts".into()))?;
                let parts = raw
                    .split('/')
                    .map(|p| p.parse::<usize>().map_err(|_| Error::InvalidParts(raw.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                gen_complete_multipartite(&parts, self.parsed("strict", Some(false))?).map(Generated::colored)
            }
            "maxsep-gadget" => {
                self.allow(&["vars", "clauses"])?;
                let sat = SatInstance::new(self.parsed("vars", None)?, parse_clauses(self.raw("clauses").unwrap_or(""))?)?;
                let h = gen_maxsep_gadget(&sat)?;
                Ok(Generated { graph: h.graph, coloring: Some(h.coloring), k: Some(h.k) })
            }
            "random-twin-free" | "random-triangle-free" => {
                self.allow(&["n", "p", "seed", "coloring-seed"])?;
                let (n, p, seed) = (self.parsed("n", None)?, self.parsed("p", Some(0.5))?, self.parsed("seed", Some(0))?);
                let g = if self.family == "random-twin-free" {
                    gen_random_twin_free(n, p, seed)?
                } else {
                    gen_random_triangle_free(n, p, seed)?
                };
                self.with_random_coloring(g)
            }
            "random-bounded-degree" => {
                self.allow(&["n", "max-degree", "p", "seed", "coloring-seed"])?;
                let g = gen_random_bounded_degree(
                    self.parsed("n", None)?,
                    self.parsed("max-degree", None)?,
                    self.parsed("p", Some(0.5))?,
                    self.parsed("seed", Some(0))?,
                )?;
                self.with_random_coloring(g)
            }
            "random-tree" => {
                self.allow(&["n", "seed", "coloring-seed"])?;
                let g = gen_random_tree(self.parsed("n", None)?, self.parsed("seed", Some(0))?)?;
                self.with_random_coloring(g)
            }
            other => Err(Error::Spec(format!("unknown family {other:?}"))),
        }
    }
}

/// Clauses separated by `/`, literals within a clause by `+`.
fn parse_clauses(text: &str) -> Result<Vec<Vec<i32>>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('/')
        .map(|c| c.split('+').map(|l| l.parse::<i32>().map_err(|_| Error::InvalidSat(format!("bad literal {l:?}")))).collect())
        .collect()
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family)?;
        let mut sep = ':';
        for (k, v) in &self.params {
            write!(f, "{sep}{k}={v}")?;
            sep = ',';
        }
        Ok(())
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        if family.is_empty() {
            return Err(Error::Spec("empty family name".into()));
        }
        let mut spec = GeneratorSpec::new(family);
        for item in rest.split([',', ';']).filter(|i| !i.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Spec(format!("parameter {item:?} is not key=value")))?;
            if spec.params.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::Spec(format!("duplicate parameter {k}")));
            }
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_graph;

    #[test]
    fn spec_round_trip() {
        let s: GeneratorSpec = "multipartite:parts=5/5,strict=true".parse().unwrap();
        assert_eq!(s.to_string(), "multipartite:parts=5/5,strict=true");
        assert_eq!("spider:k=1".parse::<GeneratorSpec>().unwrap(), GeneratorSpec::new("spider").with("k", 1));
        assert!("spider:k".parse::<GeneratorSpec>().is_err());
        assert!("spider:k=1,k=2".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn generate_families() {
        let g = "spider:k=1".parse::<GeneratorSpec>().unwrap().generate().unwrap();
        assert_eq!(g.graph, path(6));
        let h = "half-complement:k=2".parse::<GeneratorSpec>().unwrap().generate().unwrap();
        assert_eq!(h.graph.order(), 4);
        assert!(h.coloring.is_some());
        let gadget = "maxsep-gadget:vars=1,clauses=1".parse::<GeneratorSpec>().unwrap().generate().unwrap();
        assert_eq!((gadget.graph.order(), gadget.k), (48, Some(13)));
        assert!("spider:n=1".parse::<GeneratorSpec>().unwrap().generate().is_err());
        assert!("nope".parse::<GeneratorSpec>().unwrap().generate().is_err());
    }

    #[test]
    fn random_specs_are_byte_identical() {
        let s: GeneratorSpec = "random-twin-free:n=9,p=0.4,seed=5,coloring-seed=2".parse().unwrap();
        let (a, b) = (s.generate().unwrap(), s.generate().unwrap());
        assert_eq!(write_graph(&a.graph), write_graph(&b.graph));
        assert_eq!(a.coloring, b.coloring);
    }
}
