//! Declarative scenario configuration: a JSON document names the coefficient
//! field, the ambient group, the subgroup K with its representation ϱ, an
//! optional main module V, the checks to run, and the expected outcomes
//! where a scenario pins them.

use serde::{Deserialize, Serialize};

pub const CONFIG_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub schema_version: u32,
    pub name: String,
    pub description: String,
    /// Catalog section: 2 for module/duality scenarios, 3 for
    /// convolution-algebra scenarios.
    pub section: u32,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub caps: Caps,
    pub field: FieldConfig,
    pub group: GroupBuilder,
    pub k: SubgroupBuilder,
    #[serde(default)]
    pub k1: Option<SubgroupBuilder>,
    pub rho: RhoBuilder,
    #[serde(default)]
    pub module_v: Option<ModuleBuilder>,
    pub checks: Vec<String>,
    #[serde(default)]
    pub expect: Expectations,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.schema_version != CONFIG_SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {} (expected {CONFIG_SCHEMA_VERSION})",
                self.schema_version
            ));
        }
        if !(self.section == 2 || self.section == 3) {
            return Err(format!("section must be 2 or 3, got {}", self.section));
        }
        self.caps.validate()?;
        for c in &self.checks {
            if !crate::checks::is_known_check(c) {
                return Err(format!("unknown check id: {c}"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    pub max_group_order: usize,
    pub meataxe_attempts: usize,
    pub sample_count: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_group_order: 20_000,
            meataxe_attempts: 64,
            sample_count: 32,
        }
    }
}

impl Caps {
    fn validate(&self) -> Result<(), String> {
        if self.max_group_order == 0 || self.meataxe_attempts == 0 || self.sample_count == 0 {
            return Err("caps must be positive".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    /// 0 means the rationals.
    pub characteristic: u64,
    #[serde(default = "one")]
    pub degree: usize,
    /// Optional explicit monic modulus (little-endian coefficients) for
    /// extension fields.
    #[serde(default)]
    pub modulus: Option<Vec<u64>>,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupBuilder {
    Cyclic { n: u32 },
    Symmetric { n: usize },
    Gl2 { q: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum SubgroupBuilder {
    Whole,
    Trivial,
    /// Upper-triangular subgroup of a gl2 group.
    Borel,
    /// Even permutations of a symmetric group.
    Alternating,
    /// Closure of explicit permutations (one-line images).
    GeneratedPerms { perms: Vec<Vec<u32>> },
    /// Closure of explicit residues of a cyclic group.
    GeneratedResidues { residues: Vec<u32> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum RhoBuilder {
    Trivial,
    /// Parity character of a permutation group.
    Sign,
    /// The unique composition factor of the Borel coset module of a gl2
    /// group that is not the trivial character.
    Cuspidal,
    /// Explicit integer generator matrices on permutation-group elements.
    ExplicitPerm {
        dim: usize,
        generators: Vec<PermGenerator>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermGenerator {
    pub perm: Vec<u32>,
    /// Row-major integer entries, reduced into the field.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleBuilder {
    /// The induction of ϱ from K to the whole group.
    Induced,
    /// The regular module of the whole group.
    Regular,
    /// Unipotent Jordan block of a cyclic group.
    JordanBlock { size: usize },
    DirectSum { parts: Vec<ModuleBuilder> },
    /// Quotient by the invariant subspace spun from explicit vectors.
    QuotientBySpin {
        of: Box<ModuleBuilder>,
        vectors: Vec<Vec<i64>>,
    },
    /// The invariant subspace spun from explicit vectors.
    SubBySpin {
        of: Box<ModuleBuilder>,
        vectors: Vec<Vec<i64>>,
    },
}

/// Scenario-pinned expected outcomes; checks verify computed results against
/// these where present.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    /// expected verdict for the induced-module semisimplicity check
    #[serde(default)]
    pub induced_w_semisimple: Option<bool>,
    /// expected outcome of the multiplicity-free hypothesis
    #[serde(default)]
    pub multiplicity_free: Option<bool>,
    /// expected outcome of single-class invertibility:
    /// "holds" | "fails" | "partial"
    #[serde(default)]
    pub single_class_invertibility: Option<String>,
    /// expected linear dimension of the intertwining algebra
    #[serde(default)]
    pub hecke_dimension: Option<usize>,
    /// expected rank of the Gram matrix of the main module
    #[serde(default)]
    pub gram_rank: Option<usize>,
    /// whether the main module V is (by construction) a subquotient of a
    /// module generated by its ϱ-isotypic component
    #[serde(default)]
    pub v_in_generated_subcategory: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_configs_parse_and_validate() {
        for (name, text) in crate::scenarios::BUNDLED {
            let cfg: ScenarioConfig = serde_json::from_str(text)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            cfg.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(cfg.name, *name);
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{
            "schema_version": 1, "name": "x", "description": "d", "section": 2,
            "field": {"characteristic": 3},
            "group": {"builder": "cyclic", "n": 3},
            "k": {"builder": "whole"},
            "rho": {"builder": "trivial"},
            "checks": [], "bogus": 1
        }"#;
        assert!(serde_json::from_str::<ScenarioConfig>(text).is_err());
    }
}
