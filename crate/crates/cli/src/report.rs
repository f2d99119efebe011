//! Serializable command results. Points are 1-based, permutations are in
//! cycle notation and exact numbers use the `2^(1/2)*3^(-1)` form.

use std::fmt::Write as _;
use std::sync::Arc;

use ordrep_core::exact::approx_string;
use ordrep_core::imprimitivity::{all_block_systems, is_primitive, primitive_chain, BlockConvention};
use ordrep_core::induction::{frobenius_table, induce};
use ordrep_core::structure::{character, decompose, factor, linear_equivalent, order_dual, order_equivalent};
use ordrep_core::verify::CheckResult;
use ordrep_core::{Error, PermGroup, PosAut, PosRep, Subgroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupInfo {
    pub fn new(g: &PermGroup, h: &Subgroup) -> Self {
        SubgroupInfo {
            order: h.order(),
            generators: h
                .generators(g)
                .into_iter()
                .map(|i| g.element(i).to_string())
                .collect(),
        }
    }

    fn describe(&self) -> String {
        if self.generators.is_empty() {
            format!("order {} = <>", self.order)
        } else {
            format!("order {} = <{}>", self.order, self.generators.join(", "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutInfo {
    pub perm: String,
    pub multiplier: Vec<String>,
}

impl AutInfo {
    pub fn new(a: &PosAut) -> Self {
        AutInfo {
            perm: a.permutation().to_string(),
            multiplier: a.multiplier().entries().iter().map(|x| x.to_string()).collect(),
        }
    }
}

fn one_based(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    blocks
        .iter()
        .map(|b| b.iter().map(|x| x + 1).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorReport {
    pub degree: usize,
    pub group_order: usize,
    /// `π` on each group generator, in generator order.
    pub pi: Vec<String>,
    pub m: Vec<String>,
    pub m_decimal: Vec<String>,
    pub verified: bool,
}

pub fn factor_report(rho: &PosRep) -> Result<FactorReport, Error> {
    let f = factor(rho)?;
    let g = rho.group();
    let verified = f.rebuild(Arc::clone(g))? == *rho;
    Ok(FactorReport {
        degree: rho.degree(),
        group_order: g.order(),
        pi: g.generator_indices().iter().map(|&s| f.pi[s].to_string()).collect(),
        m: f.m.entries().iter().map(|x| x.to_string()).collect(),
        m_decimal: f.m.entries().iter().map(approx_string).collect(),
        verified,
    })
}

impl FactorReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "degree {}, group order {}", self.degree, self.group_order);
        for (i, p) in self.pi.iter().enumerate() {
            let _ = writeln!(out, "pi(g{}) = {}", i + 1, p);
        }
        let _ = writeln!(out, "m = [{}]", self.m.join(", "));
        let _ = writeln!(out, "  ~ [{}]", self.m_decimal.join(", "));
        let _ = writeln!(out, "verified: rho_s = m pi_s m^-1 for all s: {}", self.verified);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandInfo {
    pub subgroup: SubgroupInfo,
    pub index: usize,
    pub multiplicity: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub degree: usize,
    pub dimensions: Vec<usize>,
    pub irreducible: bool,
    pub summands: Vec<SummandInfo>,
}

pub fn decompose_report(rho: &PosRep) -> DecomposeReport {
    let g = rho.group();
    let d = decompose(rho);
    DecomposeReport {
        degree: d.degree,
        dimensions: d.dimensions(),
        irreducible: d.summands.len() == 1 && d.summands[0].multiplicity == 1,
        summands: d
            .summands
            .iter()
            .map(|s| SummandInfo {
                subgroup: SubgroupInfo::new(g, &s.subgroup),
                index: s.index,
                multiplicity: s.multiplicity,
                blocks: one_based(&s.blocks),
            })
            .collect(),
    }
}

impl DecomposeReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "degree {}, dimensions {:?}{}",
            self.degree,
            self.dimensions,
            if self.irreducible { " (irreducible)" } else { "" }
        );
        for s in &self.summands {
            let _ = writeln!(
                out,
                "  {} x dim {}  stabilizer {}  blocks {:?}",
                s.multiplicity,
                s.index,
                s.subgroup.describe(),
                s.blocks
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivMode {
    Order,
    Linear,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub mode: EquivMode,
    pub equivalent: bool,
    pub characters: [Vec<usize>; 2],
    /// `T` with `T ρ²_s = ρ¹_s T`, for order equivalence.
    pub witness: Option<AutInfo>,
}

pub fn equiv_report(r1: &PosRep, r2: &PosRep, mode: EquivMode) -> Result<EquivReport, Error> {
    let characters = [character(r1).values, character(r2).values];
    let (equivalent, witness) = match mode {
        EquivMode::Linear => (linear_equivalent(r1, r2)?, None),
        EquivMode::Order => {
            let w = order_equivalent(r1, r2)?;
            (w.is_some(), w.as_ref().map(AutInfo::new))
        }
    };
    Ok(EquivReport {
        mode,
        equivalent,
        characters,
        witness,
    })
}

impl EquivReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let kind = match self.mode {
            EquivMode::Order => "order",
            EquivMode::Linear => "linearly",
        };
        let _ = writeln!(
            out,
            "{} {} equivalent",
            if self.equivalent { "yes:" } else { "no: not" },
            kind
        );
        let _ = writeln!(out, "character 1: {:?}", self.characters[0]);
        let _ = writeln!(out, "character 2: {:?}", self.characters[1]);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness T = ([{}], {})", w.multiplier.join(", "), w.perm);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEntryInfo {
    pub subgroup: SubgroupInfo,
    pub dimension: usize,
    pub character: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDualReport {
    pub group_order: usize,
    pub elements: Vec<String>,
    pub entries: Vec<DualEntryInfo>,
}

pub fn order_dual_report(g: &Arc<PermGroup>) -> OrderDualReport {
    OrderDualReport {
        group_order: g.order(),
        elements: g.elements().iter().map(|p| p.to_string()).collect(),
        entries: order_dual(g)
            .iter()
            .map(|e| DualEntryInfo {
                subgroup: SubgroupInfo::new(g, &e.subgroup),
                dimension: e.rep.degree(),
                character: character(&e.rep).values,
            })
            .collect(),
    }
}

impl OrderDualReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group order {}, {} irreducibles up to order equivalence",
            self.group_order,
            self.entries.len()
        );
        for e in &self.entries {
            let _ = writeln!(
                out,
                "  dim {:>3}  H {}  character {:?}",
                e.dimension,
                e.subgroup.describe(),
                e.character
            );
        }
        let _ = writeln!(out, "elements: {}", self.elements.join(" "));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InduceReport {
    pub subgroup: SubgroupInfo,
    pub index: usize,
    pub theta_degree: usize,
    pub degree: usize,
    /// `(coset representative, inner index)` for each basis vector.
    pub basis: Vec<(String, usize)>,
    /// `Ind(g)` for each group generator.
    pub generators: Vec<AutInfo>,
    pub decomposition: DecomposeReport,
}

pub fn induce_report(theta: &PosRep, h: &Subgroup, g: &Arc<PermGroup>) -> Result<InduceReport, Error> {
    let ind = induce(theta, h, g)?;
    Ok(InduceReport {
        subgroup: SubgroupInfo::new(g, h),
        index: ind.basis.cosets.len(),
        theta_degree: theta.degree(),
        degree: ind.rep.degree(),
        basis: ind
            .basis
            .pairs()
            .into_iter()
            .map(|(r, j)| (g.element(r).to_string(), j + 1))
            .collect(),
        generators: g
            .generator_indices()
            .iter()
            .map(|&s| AutInfo::new(ind.rep.get(s)))
            .collect(),
        decomposition: decompose_report(&ind.rep),
    })
}

impl InduceReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Ind from H {} (index {}) of a degree {} rep: degree {}",
            self.subgroup.describe(),
            self.index,
            self.theta_degree,
            self.degree
        );
        for (i, a) in self.generators.iter().enumerate() {
            let _ = writeln!(out, "  Ind(g{}) = ([{}], {})", i + 1, a.multiplier.join(", "), a.perm);
        }
        out.push_str(&self.decomposition.human());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCellInfo {
    pub theta: SubgroupInfo,
    pub rho: SubgroupInfo,
    pub theta_degree: usize,
    pub rho_degree: usize,
    /// `m(ρ, Ind θ)`
    pub induced: usize,
    /// `m(θ, ρ|_H)`
    pub restricted: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub subgroup: SubgroupInfo,
    pub cells: Vec<FrobeniusCellInfo>,
    pub violations: usize,
}

pub fn frobenius_report(g: &Arc<PermGroup>, h: &Subgroup) -> Result<FrobeniusReport, Error> {
    let t = frobenius_table(g, h)?;
    let hg = h.to_group(g);
    let cells = t
        .cells
        .iter()
        .map(|c| FrobeniusCellInfo {
            theta: SubgroupInfo::new(&hg, hg.class_representative(c.theta_class)),
            rho: SubgroupInfo::new(g, g.class_representative(c.rho_class)),
            theta_degree: c.theta_degree,
            rho_degree: c.rho_degree,
            induced: c.induced,
            restricted: c.restricted,
            holds: c.holds(),
        })
        .collect();
    Ok(FrobeniusReport {
        subgroup: SubgroupInfo::new(g, h),
        cells,
        violations: t.violations(),
    })
}

impl FrobeniusReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "H {}", self.subgroup.describe());
        let _ = writeln!(out, "  dim θ  dim ρ  m(ρ, Ind θ)  m(θ, ρ|H)");
        for c in &self.cells {
            let _ = writeln!(
                out,
                "  {:>5}  {:>5}  {:>11}  {:>9}{}",
                c.theta_degree,
                c.rho_degree,
                c.induced,
                c.restricted,
                if c.holds { "" } else { "  *" }
            );
        }
        let _ = writeln!(out, "{} cells differ (*)", self.violations);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemInfo {
    pub blocks: Vec<Vec<usize>>,
    pub transitive: bool,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStepInfo {
    pub subgroup: SubgroupInfo,
    pub theta_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprimitivityReport {
    pub convention: String,
    pub primitive: bool,
    pub systems: Vec<SystemInfo>,
    /// Present when the representation is irreducible.
    pub chain: Option<Vec<ChainStepInfo>>,
}

pub fn imprimitivity_report(rho: &PosRep, convention: BlockConvention) -> Result<ImprimitivityReport, Error> {
    let g = rho.group();
    let systems = all_block_systems(rho)?;
    let chain = match primitive_chain(rho, convention) {
        Ok(steps) => Some(
            steps
                .iter()
                .map(|s| ChainStepInfo {
                    subgroup: SubgroupInfo::new(g, &s.subgroup),
                    theta_degree: s.theta.degree(),
                })
                .collect(),
        ),
        Err(Error::NotIrreducible) => None,
        Err(e) => return Err(e),
    };
    Ok(ImprimitivityReport {
        convention: convention.to_string(),
        primitive: is_primitive(rho, convention)?,
        systems: systems
            .iter()
            .map(|bs| SystemInfo {
                blocks: one_based(&bs.blocks),
                transitive: bs.is_transitive(),
                trivial: bs.is_trivial(convention),
            })
            .collect(),
        chain,
    })
}

impl ImprimitivityReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} ({} convention), {} block systems",
            if self.primitive { "primitive" } else { "imprimitive" },
            self.convention,
            self.systems.len()
        );
        for s in &self.systems {
            let _ = writeln!(
                out,
                "  {:?}{}{}",
                s.blocks,
                if s.transitive { "" } else { "  intransitive" },
                if s.trivial { "  trivial" } else { "" }
            );
        }
        match &self.chain {
            None => {
                let _ = writeln!(out, "not irreducible: no primitive chain");
            }
            Some(steps) if steps.is_empty() => {
                let _ = writeln!(out, "primitive chain: empty");
            }
            Some(steps) => {
                let _ = writeln!(out, "primitive chain:");
                for s in steps {
                    let _ = writeln!(
                        out,
                        "  induced from H {}, θ of degree {}",
                        s.subgroup.describe(),
                        s.theta_degree
                    );
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn new(checks: Vec<CheckResult>) -> Self {
        VerifyReport {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {} {:<14} {:>9.3}s  {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.key,
                c.elapsed.as_secs_f64(),
                c.title,
                c.detail
            );
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

/// Pretty JSON with keys sorted at every level.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}
