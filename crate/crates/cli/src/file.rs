//! JSON presentation files.
//!
//! ```json
//! { "field": { "p": 2, "orders": [3] },
//!   "generators": [ { "name": "g", "weight": 0, "grouplike": true, "order": 3 },
//!                   { "name": "x", "weight": 1, "grouplike": false } ],
//!   "relations": [ "g^3 = 1", "g*x = xi*x*g", "x^3 = 0" ],
//!   "coproduct": { "x": "x(#)1 + g(#)x" },
//!   "counit": {} }
//! ```
//!
//! The remaining keys (`name`, `roots`, `scalars`, `precedence`, `affine`,
//! `field.degree`) are optional and round-trip every [`PresentationSpec`].

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hopfforge_core::freealg::Generator;
use hopfforge_core::hopf::PresentationSpec;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub p: u32,
    #[serde(default)]
    pub orders: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    #[serde(default)]
    pub weight: u32,
    #[serde(default)]
    pub grouplike: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    pub field: FieldSection,
    /// Root names bound to orders; `xi`, `zeta`, `theta` follow `field.orders` when empty.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roots: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub scalars: BTreeMap<String, String>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precedence: Option<Vec<String>>,
    /// `gen: [slope, intercept]`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub affine: BTreeMap<String, (u64, u64)>,
    pub relations: Vec<String>,
    #[serde(default)]
    pub coproduct: BTreeMap<String, String>,
    #[serde(default)]
    pub counit: BTreeMap<String, String>,
}

impl PresentationFile {
    pub fn from_spec(s: &PresentationSpec) -> Self {
        PresentationFile {
            name: s.name.clone(),
            field: FieldSection { p: s.p, orders: s.orders.clone(), degree: s.degree },
            roots: s.roots.iter().cloned().collect(),
            scalars: s.scalars.iter().cloned().collect(),
            generators: s
                .generators
                .iter()
                .map(|g| GeneratorEntry { name: g.name.clone(), weight: g.weight, grouplike: g.grouplike, order: g.order })
                .collect(),
            precedence: s.precedence.clone(),
            affine: s.affine.iter().cloned().collect(),
            relations: s.relations.clone(),
            coproduct: s.coproduct.iter().cloned().collect(),
            counit: s.counit.iter().cloned().collect(),
        }
    }

    pub fn to_spec(&self) -> Result<PresentationSpec> {
        let mut generators = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            generators.push(match (g.grouplike, g.order) {
                (true, Some(n)) => Generator::grouplike(&g.name, n),
                (true, None) => bail!("group-like generator `{}` needs an order", g.name),
                (false, None) => Generator::new(&g.name, g.weight),
                (false, Some(_)) => bail!("generator `{}` has an order but is not group-like", g.name),
            });
        }
        Ok(PresentationSpec {
            name: self.name.clone(),
            p: self.field.p,
            orders: self.field.orders.clone(),
            degree: self.field.degree,
            roots: self.roots.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            scalars: self.scalars.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            generators,
            precedence: self.precedence.clone(),
            affine: self.affine.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            relations: self.relations.clone(),
            coproduct: self.coproduct.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            counit: self.counit.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation files serialize")
    }
}
