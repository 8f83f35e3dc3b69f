//! The JSON input document and its conversion into library types.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use hlc_core::spaces::{Cover, CoverTower, FilteredComplex, Member};
use hlc_core::value::{exact, parse_value};
use hlc_core::Value;
use serde::Deserialize;

/// A vertex id: a JSON string or integer.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Id {
    Text(String),
    Int(i64),
}

impl Id {
    fn key(&self) -> String {
        match self {
            Id::Text(s) => s.clone(),
            Id::Int(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct Exact(#[serde(with = "exact")] Value);

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Values {
    ByName(BTreeMap<String, Exact>),
    InOrder(Vec<Exact>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    format: u32,
    vertices: Vec<Id>,
    values: Values,
    #[serde(default)]
    simplices: Vec<Vec<Id>>,
    /// Cover index (a rational written as a string) to named vertex sets.
    #[serde(default)]
    covers: BTreeMap<String, BTreeMap<String, Vec<Id>>>,
    /// Tower name to the cover indices of its levels, bottom first.
    #[serde(default)]
    towers: BTreeMap<String, Vec<String>>,
}

/// A validated document.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub complex: FilteredComplex,
    pub towers: BTreeMap<String, CoverTower>,
}

pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

pub fn load(path: Option<&Path>) -> Result<Loaded> {
    let text = read_source(path)?;
    let label = path.map(|p| p.display().to_string()).unwrap_or_else(|| "<stdin>".into());
    parse(&text).with_context(|| format!("invalid input document {label}"))
}

pub fn parse(text: &str) -> Result<Loaded> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| anyhow!("{e}"))?;
    if doc.format != 1 {
        bail!("format: unsupported version {}, expected 1", doc.format);
    }
    let names: Vec<String> = doc.vertices.iter().map(Id::key).collect();
    let mut position = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if position.insert(n.clone(), i as u32).is_some() {
            bail!("vertices[{i}]: duplicate id {n:?}");
        }
    }
    let lookup = |field: &str, id: &Id| -> Result<u32> {
        position.get(&id.key()).copied().ok_or_else(|| anyhow!("{field}: unknown vertex {:?}", id.key()))
    };
    let values = match doc.values {
        Values::ByName(map) => {
            for k in map.keys() {
                if !position.contains_key(k) {
                    bail!("values: unknown vertex {k:?}");
                }
            }
            names
                .iter()
                .map(|n| map.get(n).map(|v| v.0.clone()).ok_or_else(|| anyhow!("values: missing value for vertex {n:?}")))
                .collect::<Result<Vec<_>>>()?
        }
        Values::InOrder(list) => {
            if list.len() != names.len() {
                bail!("values: {} values for {} vertices", list.len(), names.len());
            }
            list.into_iter().map(|v| v.0).collect()
        }
    };
    let simplices = doc
        .simplices
        .iter()
        .enumerate()
        .map(|(i, s)| s.iter().map(|id| lookup(&format!("simplices[{i}]"), id)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let complex = FilteredComplex::new(names, values, simplices).map_err(|e| anyhow!("simplices: {e}"))?;

    let mut covers = BTreeMap::new();
    for (key, members) in &doc.covers {
        let index = parse_value(key).map_err(|e| anyhow!("covers: {e}"))?;
        let mut list = Vec::new();
        for (name, ids) in members {
            let set = ids
                .iter()
                .map(|id| lookup(&format!("covers.{key}.{name}"), id))
                .collect::<Result<BTreeSet<_>>>()?;
            list.push(Member { name: name.clone(), set });
        }
        let cover = Cover::new(index.clone(), list);
        cover.validate(&complex).map_err(|e| anyhow!("covers.{key}: {e}"))?;
        covers.insert(index, cover);
    }
    let mut towers = BTreeMap::new();
    for (name, levels) in &doc.towers {
        let mut list = Vec::new();
        for key in levels {
            let index = parse_value(key).map_err(|e| anyhow!("towers.{name}: {e}"))?;
            let cover = covers.get(&index).ok_or_else(|| anyhow!("towers.{name}: no cover at index {key}"))?;
            list.push(cover.clone());
        }
        let tower = CoverTower::new(list);
        tower.check_structure(&complex).map_err(|e| anyhow!("towers.{name}: {e}"))?;
        towers.insert(name.clone(), tower);
    }
    Ok(Loaded { complex, towers })
}
