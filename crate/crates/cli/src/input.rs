use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use pqg_core::classify::TripleRecord;
use pqg_core::fusion::FusionSetRecord;
use pqg_core::{Category, CategoryDescriptor, ColourSet, FusionSet, PartitionRecord};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CategoryArgs;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn fusion_set(path: &Path) -> Result<FusionSet> {
    let r: FusionSetRecord = read_json(path)?;
    Ok(FusionSet::from_record(&r)?)
}

pub fn triple(path: &Path) -> Result<TripleRecord> {
    read_json(path)
}

pub fn category(builtin: Option<&str>, file: Option<&Path>) -> Result<Category> {
    let d = match (builtin, file) {
        (Some(tag), _) => CategoryDescriptor::from_tag(tag)?,
        (None, Some(path)) => read_json(path)?,
        (None, None) => anyhow::bail!("a category is required"),
    };
    Ok(d.build()?)
}

pub fn category_from(args: &CategoryArgs) -> Result<Category> {
    category(args.builtin.as_deref(), args.category.as_deref())
}

/// Generators for a closure run, with an optional colour set.
#[derive(Deserialize)]
pub struct GeneratorsFile {
    #[serde(default)]
    pub colours: Option<ColourSet>,
    pub generators: Vec<PartitionRecord>,
}

pub fn generators(path: &Path) -> Result<GeneratorsFile> {
    read_json(path)
}

/// Comma-separated colour names; the empty string is the empty word.
pub fn word(cs: &ColourSet, s: &str) -> Result<Vec<pqg_core::Colour>> {
    Ok(cs.parse_word(s)?)
}

/// An element given by name, or by index when no element has that name.
pub fn element(s: &FusionSet, name: &str) -> Result<usize> {
    match s.lookup(name) {
        Ok(x) => Ok(x),
        Err(e) => match name.parse::<usize>() {
            Ok(i) if i < s.len() => Ok(i),
            _ => Err(e.into()),
        },
    }
}
