//! Graph family generators and the bundled small-graph catalogs.
//!
//! Edge orders are part of the contract: labeling files are positional,
//! so every generator documents the id it gives each edge.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::Graph;
use crate::io::parse_graph6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got {got}")]
    TooSmall {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("bundled catalog unavailable: {0}")]
    CatalogMissing(String),
    #[error("the bundled catalog covers at most {max} vertices, asked for {asked}")]
    CatalogRange { max: usize, asked: usize },
    #[error("unknown family spec `{0}` (expected e.g. cycle:10, knn:5, kmn:3x4, wheel:6, complete:4, complete-minus-edge:5, path:5, prism, beineke:1)")]
    UnknownFamily(String),
}

fn too_small(family: &'static str, requirement: &'static str, got: usize) -> FamilyError {
    FamilyError::TooSmall {
        family,
        requirement,
        got,
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generator produced a simple graph")
}

/// `C_n`: edge `i` joins `i` and `(i + 1) mod n`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(too_small("cycle", "n >= 3", n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

/// `K_n` with edges in lexicographic order.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(too_small("complete", "n >= 1", n));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(build(n, &edges))
}

/// `K_n - e` with the edge `(0, 1)` removed; remaining edges lexicographic.
pub fn complete_minus_edge(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(too_small("complete-minus-edge", "n >= 2", n));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&e| e != (0, 1))
        .collect();
    Ok(build(n, &edges))
}

/// `K_{m,n}`: side A is `0..m`, side B is `m..m+n`; edges lexicographic.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m < 1 || n < 1 {
        return Err(too_small("complete-bipartite", "m, n >= 1", m.min(n)));
    }
    let edges: Vec<_> = (0..m)
        .flat_map(|a| (0..n).map(move |b| (a, m + b)))
        .collect();
    Ok(build(m + n, &edges))
}

/// `P_n` on `n` vertices: edge `i` joins `i` and `i + 1`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(too_small("path", "n >= 2", n));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(build(n, &edges))
}

/// `W_n` on `n` vertices in total: rim `0..n-1` in cycle order, hub `n-1`.
/// Rim edges take ids `0..n-1` (edge `i` joins `i` and `i+1` around the
/// rim), spokes take ids `n-1..2n-2` (spoke `n-1+i` joins rim vertex `i`
/// to the hub).
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(too_small("wheel", "n >= 4", n));
    }
    let rim = n - 1;
    let hub = n - 1;
    let edges: Vec<_> = (0..rim)
        .map(|i| (i, (i + 1) % rim))
        .chain((0..rim).map(|i| (i, hub)))
        .collect();
    Ok(build(n, &edges))
}

/// Triangular prism: triangles `{0,1,2}` and `{3,4,5}` joined by the
/// matching `i -- i+3`; edges lexicographic.
pub fn prism() -> Graph {
    let mut edges = vec![
        (0, 1),
        (0, 2),
        (1, 2),
        (3, 4),
        (3, 5),
        (4, 5),
        (0, 3),
        (1, 4),
        (2, 5),
    ];
    edges.sort_unstable();
    build(6, &edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

const MANIFEST: &str = include_str!("../assets/manifest.json");
const BEINEKE_FILE: &str = "beineke.g6";
const SMALL_FILE: &str = "small_connected.g6";
const BEINEKE_G6: &str = include_str!("../assets/beineke.g6");
const SMALL_G6: &str = include_str!("../assets/small_connected.g6");
pub const CATALOG_MAX_ORDER: usize = 5;

#[derive(Deserialize)]
struct ManifestEntry {
    sha256: String,
    names: Vec<String>,
}

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Decodes a bundled graph6 asset after checking it against the manifest.
pub fn load_asset(manifest: &str, file: &str, text: &str) -> Result<Vec<NamedGraph>, FamilyError> {
    let missing = |why: String| FamilyError::CatalogMissing(format!("{file}: {why}"));
    let entries: HashMap<String, ManifestEntry> =
        serde_json::from_str(manifest).map_err(|e| missing(format!("manifest unreadable: {e}")))?;
    let entry = entries
        .get(file)
        .ok_or_else(|| missing("not listed in manifest".into()))?;
    let digest = sha256_hex(text);
    if digest != entry.sha256 {
        return Err(missing(format!(
            "checksum mismatch (expected {}, found {digest})",
            entry.sha256
        )));
    }
    let records: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if records.len() != entry.names.len() {
        return Err(missing(format!(
            "{} records but {} names",
            records.len(),
            entry.names.len()
        )));
    }
    records
        .iter()
        .zip(&entry.names)
        .enumerate()
        .map(|(i, (record, name))| {
            let graph = parse_graph6(record).map_err(|e| missing(format!("record {}: {e}", i + 1)))?;
            Ok(NamedGraph {
                name: name.clone(),
                graph,
            })
        })
        .collect()
}

/// Loads a catalog file from a directory holding `manifest.json` and the
/// graph6 assets.
pub fn load_catalog_dir(dir: &Path, file: &str) -> Result<Vec<NamedGraph>, FamilyError> {
    let read = |name: &str| {
        std::fs::read_to_string(dir.join(name))
            .map_err(|e| FamilyError::CatalogMissing(format!("{}: {e}", dir.join(name).display())))
    };
    let manifest = read("manifest.json")?;
    let text = read(file)?;
    load_asset(&manifest, file, &text)
}

/// The nine minimal forbidden induced subgraphs of line graphs, claw
/// first, then by order and size.
pub fn beineke_graphs() -> Result<Vec<NamedGraph>, FamilyError> {
    load_asset(MANIFEST, BEINEKE_FILE, BEINEKE_G6)
}

/// Every connected graph on `2..=max_n` vertices, one per isomorphism
/// class, ordered by vertex count.
pub fn small_connected_catalog(max_n: usize) -> Result<Vec<NamedGraph>, FamilyError> {
    if max_n > CATALOG_MAX_ORDER {
        return Err(FamilyError::CatalogRange {
            max: CATALOG_MAX_ORDER,
            asked: max_n,
        });
    }
    Ok(load_asset(MANIFEST, SMALL_FILE, SMALL_G6)?
        .into_iter()
        .filter(|g| g.graph.vertex_count() <= max_n)
        .collect())
}

/// Named family with parameters, written `name:params` (`cycle:10`,
/// `kmn:3x4`, `prism`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    CompleteMinusEdge(usize),
    Knn(usize),
    Kmn(usize, usize),
    Wheel(usize),
    Path(usize),
    Prism,
    /// 1-based index into [`beineke_graphs`].
    Beineke(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::CompleteMinusEdge(n) => complete_minus_edge(n),
            FamilySpec::Knn(n) => complete_bipartite(n, n),
            FamilySpec::Kmn(m, n) => complete_bipartite(m, n),
            FamilySpec::Wheel(n) => wheel(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::Prism => Ok(prism()),
            FamilySpec::Beineke(i) => {
                let all = beineke_graphs()?;
                if i == 0 || i > all.len() {
                    return Err(FamilyError::UnknownFamily(format!("beineke:{i}")));
                }
                Ok(all[i - 1].graph.clone())
            }
        }
    }

    /// Replaces the size parameter of single-parameter families.
    pub fn with_size(&self, n: usize) -> Option<FamilySpec> {
        Some(match self {
            FamilySpec::Cycle(_) => FamilySpec::Cycle(n),
            FamilySpec::Complete(_) => FamilySpec::Complete(n),
            FamilySpec::CompleteMinusEdge(_) => FamilySpec::CompleteMinusEdge(n),
            FamilySpec::Knn(_) => FamilySpec::Knn(n),
            FamilySpec::Wheel(_) => FamilySpec::Wheel(n),
            FamilySpec::Path(_) => FamilySpec::Path(n),
            FamilySpec::Kmn(..) | FamilySpec::Prism | FamilySpec::Beineke(_) => return None,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMinusEdge(n) => write!(f, "complete-minus-edge:{n}"),
            FamilySpec::Knn(n) => write!(f, "knn:{n}"),
            FamilySpec::Kmn(m, n) => write!(f, "kmn:{m}x{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Prism => write!(f, "prism"),
            FamilySpec::Beineke(i) => write!(f, "beineke:{i}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || FamilyError::UnknownFamily(s.to_string());
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (s, None),
        };
        let size = || -> Result<usize, FamilyError> {
            params.ok_or_else(unknown)?.parse().map_err(|_| unknown())
        };
        Ok(match name {
            "cycle" => FamilySpec::Cycle(size()?),
            "complete" => FamilySpec::Complete(size()?),
            "complete-minus-edge" => FamilySpec::CompleteMinusEdge(size()?),
            "knn" => FamilySpec::Knn(size()?),
            "wheel" => FamilySpec::Wheel(size()?),
            "path" => FamilySpec::Path(size()?),
            "beineke" => FamilySpec::Beineke(size()?),
            "kmn" => {
                let (m, n) = params.and_then(|p| p.split_once('x')).ok_or_else(unknown)?;
                FamilySpec::Kmn(m.parse().map_err(|_| unknown())?, n.parse().map_err(|_| unknown())?)
            }
            "prism" if params.is_none() => FamilySpec::Prism,
            _ => return Err(unknown()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_edge_orders() {
        assert_eq!(cycle(3).unwrap().edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(cycle(2), Err(FamilyError::TooSmall { .. })));
        let w = wheel(5).unwrap();
        assert_eq!(
            w.edges(),
            &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert!(wheel(3).is_err());
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(complete_minus_edge(4).unwrap().edge_count(), 5);
        assert!(complete_minus_edge(4).unwrap().edge_between(0, 1).is_none());
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edges()[..3], [(0, 2), (0, 3), (0, 4)]);
        assert_eq!(path(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn prism_is_cubic() {
        let p = prism();
        assert_eq!((p.vertex_count(), p.edge_count()), (6, 9));
        assert_eq!(p.degree_sequence(), vec![3; 6]);
        assert_eq!(
            complete_bipartite(3, 3).unwrap().degree_sequence(),
            p.degree_sequence()
        );
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(wheel(9).unwrap(), wheel(9).unwrap());
        assert_eq!(
            small_connected_catalog(5).unwrap(),
            small_connected_catalog(5).unwrap()
        );
    }

    #[test]
    fn bundled_catalogs_load() {
        let beineke = beineke_graphs().unwrap();
        assert_eq!(beineke.len(), 9);
        assert_eq!(beineke[0].name, "claw");
        assert_eq!(beineke[0].graph.degree_sequence(), vec![3, 1, 1, 1]);
        let small = small_connected_catalog(5).unwrap();
        assert_eq!(small.len(), 30);
        assert_eq!(small_connected_catalog(3).unwrap().len(), 3);
        assert!(matches!(
            small_connected_catalog(6),
            Err(FamilyError::CatalogRange { .. })
        ));
    }

    #[test]
    fn corrupt_or_absent_catalog() {
        let err = load_asset(MANIFEST, BEINEKE_FILE, "CF\n").unwrap_err();
        assert!(matches!(err, FamilyError::CatalogMissing(_)));
        let dir = std::env::temp_dir().join("leechlab-no-such-dir");
        assert!(matches!(
            load_catalog_dir(&dir, BEINEKE_FILE),
            Err(FamilyError::CatalogMissing(_))
        ));
        let assets = Path::new(env!("CARGO_MANIFEST_DIR")).join("assets");
        assert_eq!(load_catalog_dir(&assets, BEINEKE_FILE).unwrap().len(), 9);
    }

    #[test]
    fn family_spec_grammar() {
        for text in ["cycle:10", "knn:5", "kmn:3x4", "wheel:6", "complete:4", "prism", "path:5", "complete-minus-edge:5", "beineke:2"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("kmn:3".parse::<FamilySpec>().is_err());
        assert!("prism:2".parse::<FamilySpec>().is_err());
        assert!("torus:3".parse::<FamilySpec>().is_err());
        assert_eq!(FamilySpec::Beineke(1).build().unwrap().edge_count(), 3);
        assert!(FamilySpec::Beineke(10).build().is_err());
    }
}
