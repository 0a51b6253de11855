//! Colour sets: finite alphabets with an involutive conjugation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interned colour identifier, an index into a [`ColourSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Colour(pub u16);

impl Colour {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite set of colours together with its conjugation map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColourSet {
    names: Vec<String>,
    conj: Vec<Colour>,
}

impl ColourSet {
    /// Builds a colour set; `conj[i]` is the index of the conjugate of colour `i`.
    pub fn new(names: Vec<String>, conj: Vec<usize>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidColourSet("no colours".into()));
        }
        if names.len() != conj.len() {
            return Err(Error::InvalidColourSet(format!(
                "{} names but {} conjugates",
                names.len(),
                conj.len()
            )));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::InvalidColourSet("too many colours".into()));
        }
        for (i, &c) in conj.iter().enumerate() {
            if c >= names.len() || conj[c] != i {
                return Err(Error::InvalidColourSet(format!(
                    "conjugation is not an involution at `{}`",
                    names[i]
                )));
            }
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::InvalidColourSet("duplicate colour names".into()));
        }
        Ok(Self {
            names,
            conj: conj.into_iter().map(|c| Colour(c as u16)).collect(),
        })
    }

    /// The one-colour, self-conjugate set used for uncoloured partitions.
    pub fn uncoloured() -> Self {
        Self::self_conjugate(&["x"])
    }

    pub fn self_conjugate(names: &[&str]) -> Self {
        let n = names.len();
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            (0..n).collect(),
        )
        .expect("self-conjugate colour set")
    }

    /// Colours given as `(name, conjugate name)` pairs; each pair may be listed once or twice.
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        for (a, b) in pairs {
            for s in [a, b] {
                if !names.iter().any(|n| n == s) {
                    names.push(s.to_string());
                }
            }
        }
        let mut conj = vec![usize::MAX; names.len()];
        for (a, b) in pairs {
            let ia = names.iter().position(|n| n == a).unwrap();
            let ib = names.iter().position(|n| n == b).unwrap();
            for (x, y) in [(ia, ib), (ib, ia)] {
                if conj[x] != usize::MAX && conj[x] != y {
                    return Err(Error::InvalidColourSet(format!(
                        "conflicting conjugates for `{}`",
                        names[x]
                    )));
                }
                conj[x] = y;
            }
        }
        if let Some(i) = conj.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidColourSet(format!(
                "`{}` has no conjugate",
                names[i]
            )));
        }
        Self::new(names, conj)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn conj(&self, c: Colour) -> Colour {
        self.conj[c.index()]
    }

    pub fn conj_word(&self, word: &[Colour]) -> Vec<Colour> {
        word.iter().map(|&c| self.conj(c)).collect()
    }

    pub fn name(&self, c: Colour) -> &str {
        &self.names[c.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Result<Colour> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Colour(i as u16))
            .ok_or_else(|| Error::UnknownColour(name.to_string()))
    }

    pub fn colours(&self) -> impl Iterator<Item = Colour> + '_ {
        (0..self.names.len()).map(|i| Colour(i as u16))
    }

    pub fn contains(&self, c: Colour) -> bool {
        c.index() < self.names.len()
    }

    /// Disjoint union; colours of `other` are shifted by `self.len()`.
    /// Clashing names from `other` get a `'` suffix.
    pub fn disjoint_union(&self, other: &ColourSet) -> ColourSet {
        let offset = self.len();
        let mut names = self.names.clone();
        for n in &other.names {
            let mut name = n.clone();
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        let conj = self
            .conj
            .iter()
            .map(|c| c.index())
            .chain(other.conj.iter().map(|c| c.index() + offset))
            .collect();
        ColourSet::new(names, conj).expect("disjoint union of colour sets")
    }

    /// Parses a comma-separated colour word; the empty string is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Vec<Colour>> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(|t| self.lookup(t.trim())).collect()
    }

    pub fn format_word(&self, word: &[Colour]) -> String {
        word.iter()
            .map(|&c| self.name(c))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All words of the given length in lexicographic order of colour indices.
    pub fn words(&self, len: usize) -> Vec<Vec<Colour>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for c in self.colours() {
                    let mut v = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}

impl Default for ColourSet {
    fn default() -> Self {
        Self::uncoloured()
    }
}

#[derive(Serialize, Deserialize)]
struct ColourEntry {
    name: String,
    conj: String,
}

#[derive(Serialize, Deserialize)]
struct ColourSetJson {
    colours: Vec<ColourEntry>,
}

impl Serialize for ColourSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColourSetJson {
            colours: self
                .colours()
                .map(|c| ColourEntry {
                    name: self.name(c).to_string(),
                    conj: self.name(self.conj(c)).to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColourSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ColourSetJson::deserialize(d)?;
        let names: Vec<String> = raw.colours.iter().map(|e| e.name.clone()).collect();
        let conj = raw
            .colours
            .iter()
            .map(|e| {
                let b = &e.conj;
                names
                    .iter()
                    .position(|n| n == b)
                    .ok_or_else(|| serde::de::Error::custom(format!("unknown conjugate `{b}`")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ColourSet::new(names, conj).map_err(serde::de::Error::custom)
    }
}
