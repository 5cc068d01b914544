//! Turning a validated configuration into live algebraic objects.

use std::fmt;

use intertwine::field::{Field, Scalar};
use intertwine::group::{GroupTable, SubgroupHandle};
use intertwine::hecke::HeckeAlgebra;
use intertwine::matrix::Matrix;
use intertwine::meataxe::composition_factors;
use intertwine::rep::Representation;
use intertwine::sample::jordan_block;

use crate::config::{
    FieldConfig, GroupBuilder, ModuleBuilder, RhoBuilder, ScenarioConfig, SubgroupBuilder,
};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Build(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Build(m) => write!(f, "build error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        3
    }
}

fn build_err(e: impl fmt::Display) -> CliError {
    CliError::Build(e.to_string())
}

/// Everything a scenario's checks operate on.
pub struct Scenario {
    pub config: ScenarioConfig,
    pub field: Field,
    pub group: GroupTable,
    pub k: SubgroupHandle,
    pub k1: Option<SubgroupHandle>,
    pub borel: Option<SubgroupHandle>,
    pub rho: Representation,
    pub module_v: Option<Representation>,
    pub induced: Representation,
    pub hecke: HeckeAlgebra,
}

pub fn build_field(cfg: &FieldConfig) -> Result<Field, CliError> {
    if cfg.characteristic == 0 {
        if cfg.degree != 1 {
            return Err(CliError::Config(
                "characteristic 0 only supports degree 1".into(),
            ));
        }
        return Ok(Field::rationals());
    }
    match (&cfg.modulus, cfg.degree) {
        (Some(m), _) => Field::with_modulus(cfg.characteristic, m.clone()).map_err(build_err),
        (None, 1) => Field::prime(cfg.characteristic).map_err(build_err),
        (None, d) => Field::extension(cfg.characteristic, d).map_err(build_err),
    }
}

fn permutation_parity(images: &[u32]) -> bool {
    let mut odd = false;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                odd = !odd;
            }
        }
    }
    odd
}

fn build_subgroup(
    b: &SubgroupBuilder,
    group: &GroupTable,
    borel: &Option<SubgroupHandle>,
    cap: usize,
) -> Result<SubgroupHandle, CliError> {
    match b {
        SubgroupBuilder::Whole => Ok(group.whole()),
        SubgroupBuilder::Trivial => Ok(group.trivial_subgroup()),
        SubgroupBuilder::Borel => borel
            .clone()
            .ok_or_else(|| CliError::Config("borel subgroup requires a gl2 group".into())),
        SubgroupBuilder::Alternating => {
            let members: Vec<u32> = group
                .elements()
                .filter(|&g| {
                    group
                        .permutation_images(g)
                        .map(|im| !permutation_parity(im))
                        .unwrap_or(false)
                })
                .map(|g| g as u32)
                .collect();
            if members.len() * 2 != group.order() {
                return Err(CliError::Config(
                    "alternating subgroup requires a symmetric group".into(),
                ));
            }
            SubgroupHandle::from_members(group, members).map_err(build_err)
        }
        SubgroupBuilder::GeneratedPerms { perms } => {
            let gens: Vec<usize> = perms
                .iter()
                .map(|p| {
                    group.permutation_index(p).ok_or_else(|| {
                        CliError::Config(format!("permutation {p:?} is not a group element"))
                    })
                })
                .collect::<Result<_, _>>()?;
            SubgroupHandle::generated_by(group, &gens, cap).map_err(build_err)
        }
        SubgroupBuilder::GeneratedResidues { residues } => {
            let gens: Vec<usize> = residues
                .iter()
                .map(|&r| {
                    group.cyclic_index(r).ok_or_else(|| {
                        CliError::Config("residue generators need a cyclic group".into())
                    })
                })
                .collect::<Result<_, _>>()?;
            SubgroupHandle::generated_by(group, &gens, cap).map_err(build_err)
        }
    }
}

fn build_rho(
    b: &RhoBuilder,
    field: &Field,
    group: &GroupTable,
    k: &SubgroupHandle,
    borel: &Option<SubgroupHandle>,
    seed: u64,
) -> Result<Representation, CliError> {
    match b {
        RhoBuilder::Trivial => Ok(Representation::trivial(k, field)),
        RhoBuilder::Sign => {
            let values: Vec<Scalar> = k
                .generators()
                .iter()
                .map(|&g| {
                    let images = group.permutation_images(g as usize).ok_or_else(|| {
                        CliError::Config("sign character requires a permutation group".into())
                    })?;
                    Ok(field.from_int(if permutation_parity(images) { -1 } else { 1 }))
                })
                .collect::<Result<_, CliError>>()?;
            Representation::character(k, field, &values).map_err(build_err)
        }
        RhoBuilder::Cuspidal => {
            let borel = borel
                .as_ref()
                .ok_or_else(|| CliError::Config("cuspidal requires a gl2 group".into()))?;
            if !k.is_whole_group() {
                return Err(CliError::Config(
                    "cuspidal is a representation of the whole gl2 group; set k to whole".into(),
                ));
            }
            let e = Representation::trivial(borel, field)
                .induce(k)
                .map_err(build_err)?;
            let factors = composition_factors(&e, seed).map_err(build_err)?;
            let trivial = Representation::trivial(k, field);
            let mut nontrivial: Vec<Representation> = factors
                .into_iter()
                .map(|(f, _)| f)
                .filter(|f| !intertwine::meataxe::isomorphic_irreducibles(f, &trivial))
                .collect();
            match (nontrivial.len(), nontrivial.pop()) {
                (1, Some(f)) => Ok(f),
                _ => Err(CliError::Build(
                    "expected exactly one nontrivial factor in the Borel coset module".into(),
                )),
            }
        }
        RhoBuilder::ExplicitPerm { dim, generators } => {
            let gens = generators
                .iter()
                .map(|g| {
                    let idx = group.permutation_index(&g.perm).ok_or_else(|| {
                        CliError::Config(format!("permutation {:?} is not a group element", g.perm))
                    })?;
                    let flat: Vec<i64> = g.matrix.iter().flatten().copied().collect();
                    if g.matrix.len() != *dim || flat.len() != dim * dim {
                        return Err(CliError::Config("generator matrix has wrong shape".into()));
                    }
                    Ok((idx, Matrix::from_ints(field, *dim, *dim, &flat)))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Representation::new(k.clone(), field.clone(), *dim, gens).map_err(build_err)
        }
    }
}

fn build_module(
    b: &ModuleBuilder,
    scenario_field: &Field,
    group: &GroupTable,
    rho: &Representation,
) -> Result<Representation, CliError> {
    match b {
        ModuleBuilder::Induced => rho.induce(&group.whole()).map_err(build_err),
        ModuleBuilder::Regular => Ok(Representation::regular(group, scenario_field)),
        ModuleBuilder::JordanBlock { size } => {
            jordan_block(group, scenario_field, *size).map_err(build_err)
        }
        ModuleBuilder::DirectSum { parts } => {
            let mut built: Vec<Representation> = parts
                .iter()
                .map(|p| build_module(p, scenario_field, group, rho))
                .collect::<Result<_, _>>()?;
            let first = built
                .drain(..1)
                .next()
                .ok_or_else(|| CliError::Config("direct_sum needs at least one part".into()))?;
            Ok(built.iter().fold(first, |acc, r| acc.direct_sum(r)))
        }
        ModuleBuilder::QuotientBySpin { of, vectors } => {
            let inner = build_module(of, scenario_field, group, rho)?;
            let rows = int_vectors(scenario_field, &inner, vectors)?;
            let space = inner.spin(&rows);
            inner
                .quotient_representation(&space)
                .map(|(r, _)| r)
                .map_err(build_err)
        }
        ModuleBuilder::SubBySpin { of, vectors } => {
            let inner = build_module(of, scenario_field, group, rho)?;
            let rows = int_vectors(scenario_field, &inner, vectors)?;
            let space = inner.spin(&rows);
            inner.sub_representation(&space).map_err(build_err)
        }
    }
}

fn int_vectors(
    field: &Field,
    rep: &Representation,
    vectors: &[Vec<i64>],
) -> Result<Vec<Vec<Scalar>>, CliError> {
    vectors
        .iter()
        .map(|v| {
            if v.len() != rep.dim() {
                return Err(CliError::Config(format!(
                    "vector length {} does not match module dimension {}",
                    v.len(),
                    rep.dim()
                )));
            }
            Ok(v.iter().map(|&n| field.from_int(n)).collect())
        })
        .collect()
}

pub fn build_scenario(config: ScenarioConfig) -> Result<Scenario, CliError> {
    config.validate().map_err(CliError::Config)?;
    let field = build_field(&config.field)?;
    let cap = config.caps.max_group_order;
    let (group, borel) = match &config.group {
        GroupBuilder::Cyclic { n } => (GroupTable::cyclic(*n), None),
        GroupBuilder::Symmetric { n } => (GroupTable::symmetric(*n), None),
        GroupBuilder::Gl2 { q } => {
            let (g, b) = GroupTable::gl2_with_borel(*q).map_err(build_err)?;
            (g, Some(b))
        }
    };
    if group.order() > cap {
        return Err(CliError::Build(format!(
            "group order {} exceeds the configured cap {cap}",
            group.order()
        )));
    }
    let k = build_subgroup(&config.k, &group, &borel, cap)?;
    let k1 = config
        .k1
        .as_ref()
        .map(|b| build_subgroup(b, &group, &borel, cap))
        .transpose()?;
    if let Some(k1) = &k1 {
        if !k1.is_contained_in(&k) || !k1.is_normal_in(&k) {
            return Err(CliError::Build(
                "k1 must be a normal subgroup of k".into(),
            ));
        }
    }
    let rho = build_rho(&config.rho, &field, &group, &k, &borel, config.seed)?;
    let module_v = config
        .module_v
        .as_ref()
        .map(|b| build_module(b, &field, &group, &rho))
        .transpose()?;
    let induced = rho.induce(&group.whole()).map_err(build_err)?;
    let hecke = HeckeAlgebra::new(&rho).map_err(build_err)?;
    Ok(Scenario {
        config,
        field,
        group,
        k,
        k1,
        borel,
        rho,
        module_v,
        induced,
        hecke,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_scenario_builds() {
        for (name, text) in crate::scenarios::BUNDLED {
            let cfg: crate::config::ScenarioConfig = serde_json::from_str(text).unwrap();
            let s = build_scenario(cfg).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.rho.dim() >= 1);
        }
    }

    #[test]
    fn cuspidal_factor_of_gl2_q2_is_one_dimensional() {
        let cfg: crate::config::ScenarioConfig =
            serde_json::from_str(crate::scenarios::find("gl2_q2_borel_series").unwrap()).unwrap();
        let s = build_scenario(cfg).unwrap();
        assert_eq!(s.rho.dim(), 1);
        assert_eq!(s.group.order(), 6);
    }
}
