//! Module names accepted by `modrep ext`: a kind letter followed by a
//! principal-block label `<u,v>` or a partition `(a,b,c)`.

use anyhow::{anyhow, bail, Context, Result};
use modrep_core::partition::label_to_partition;
use modrep_core::schur_weyl::{basic_schur_p3, exact_model_p3, tilting_summand, young_module};
use modrep_core::sym::{simple_module, specht_module};
use modrep_core::{AlgModule, BlockLabel, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum AlgebraChoice {
    /// Basic algebra of Λ(3,6), the quotient of kS_6 acting on tensor space.
    Lambda,
    /// Basic Schur algebra S(3,6).
    Schur,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleName {
    pub kind: String,
    pub weight: Partition,
}

pub fn parse_name(s: &str) -> Result<ModuleName> {
    let s = s.trim();
    let split = s.find(['<', '(']).ok_or_else(|| anyhow!("module name {s:?} needs a label <u,v> or a partition (a,b,...)"))?;
    let (kind, rest) = s.split_at(split);
    let weight = if rest.starts_with('<') {
        let label: BlockLabel = rest.parse().map_err(|e| anyhow!("{e}"))?;
        label_to_partition(label, 3)?
    } else {
        rest.parse::<Partition>()?
    };
    if weight.size() != 6 {
        bail!("{s}: weights have size 6 at p = 3");
    }
    Ok(ModuleName { kind: kind.to_string(), weight })
}

fn class_position(labels: &[Partition], w: &Partition, what: &str) -> Result<usize> {
    labels.iter().position(|x| x == w).ok_or_else(|| anyhow!("{what}({w}) is not a module of this algebra"))
}

pub fn check_kind(alg: AlgebraChoice, name: &ModuleName) -> Result<()> {
    let kinds: &[&str] = match alg {
        AlgebraChoice::Lambda => &["S", "dS", "D", "Y", "P"],
        AlgebraChoice::Schur => &["L", "D", "P", "Q", "Y", "T"],
    };
    if !kinds.contains(&name.kind.as_str()) {
        bail!("unknown module kind {:?}; use one of {}", name.kind, kinds.join(", "));
    }
    Ok(())
}

/// Builds the named module over the chosen algebra.
pub fn build(alg: AlgebraChoice, name: &ModuleName, seed: u64) -> Result<AlgModule> {
    let w = &name.weight;
    match alg {
        AlgebraChoice::Lambda => {
            let m = exact_model_p3()?;
            let group = match name.kind.as_str() {
                "S" => specht_module(w, 3)?.0,
                "dS" => specht_module(w, 3)?.0.dual_natural(),
                "D" => simple_module(w, 3)?,
                "Y" => young_module(w, 3, seed)?.module,
                "P" => {
                    let st = m.basic.alg.structure()?;
                    let c = class_position(&m.basic_labels, w, "P")?;
                    let i = st.class_of.iter().position(|&k| k == c).context("class without idempotent")?;
                    return Ok(st.pims[i].clone());
                }
                k => bail!("unknown module kind {k:?} for lambda; use S, dS, D, Y or P"),
            };
            Ok(m.basic_module(&group).with_context(|| format!("{}({w}) is not a module of Λ(3,6)", name.kind))?)
        }
        AlgebraChoice::Schur => {
            let b = basic_schur_p3()?;
            let st = b.alg.structure()?;
            match name.kind.as_str() {
                "D" | "L" => Ok(st.simples[class_position(&b.labels, w, "L")?].clone()),
                "P" => {
                    let c = class_position(&b.labels, w, "P")?;
                    let i = st.class_of.iter().position(|&k| k == c).context("class without idempotent")?;
                    Ok(st.pims[i].clone())
                }
                "Q" | "Y" => b
                    .natural_indecomposables(exact_model_p3()?)?
                    .into_iter()
                    .find(|(x, _)| x == w)
                    .map(|(_, q)| q)
                    .ok_or_else(|| anyhow!("no summand of Q has weight ({w})")),
                "T" => {
                    if w.parts() != [2, 2, 2] {
                        bail!("only T(2,2,2) is built");
                    }
                    Ok(tilting_summand(b, exact_model_p3()?, 3)?)
                }
                k => bail!("unknown module kind {k:?} for schur; use L, P, Q or T"),
            }
        }
    }
}
