//! Declarative TOML input files.
//!
//! ```toml
//! [group]
//! name = "klein4"                 # or: degree = 4, generators = ["(1 2)(3 4)", [3, 4, 1, 2]]
//!
//! [subgroup]                      # induce, frobenius
//! generators = ["(1 2)(3 4)"]
//!
//! [rep]
//! degree = 2
//! [[rep.generators]]              # one entry per group (or subgroup) generator
//! perm = "(1 2)"
//! multiplier = ["2", "1/2"]       # optional, default all 1
//! ```
//!
//! Points are 1-based everywhere in the file.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use ordrep_core::group::named::{self, Generators};
use ordrep_core::{ExactPositive, Multiplier, PermGroup, Permutation, PosAut, PosRep, Subgroup};
use serde::Deserialize;

/// An input error with the file and field it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub source: String,
    pub field: String,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_empty() {
            write!(f, "{}: {}", self.source, self.message)
        } else {
            write!(f, "{}: field `{}`: {}", self.source, self.field, self.message)
        }
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    Cycles(String),
    Images(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub degree: Option<usize>,
    #[serde(default)]
    pub generators: Vec<PermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    #[serde(default)]
    pub generators: Vec<PermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorImage {
    pub perm: PermSpec,
    pub multiplier: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<GeneratorImage>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub group: GroupSpec,
    pub subgroup: Option<SubgroupSpec>,
    pub rep: Option<RepSpec>,
}

/// A parsed file with its group built.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub source: String,
    pub spec: SpecFile,
    pub group: Arc<PermGroup>,
}

impl Loaded {
    fn error(&self, field: &str, message: impl ToString) -> SpecError {
        SpecError {
            source: self.source.clone(),
            field: field.into(),
            message: message.to_string(),
        }
    }

    /// The `[subgroup]` section, or an error if missing.
    pub fn subgroup(&self) -> Result<Subgroup, SpecError> {
        let spec = self
            .spec
            .subgroup
            .as_ref()
            .ok_or_else(|| self.error("subgroup", "missing [subgroup] section"))?;
        let gens = parse_perms(&spec.generators, self.group.degree(), "subgroup.generators")
            .map_err(|(f, m)| self.error(&f, m))?;
        self.group
            .subgroup_from_permutations(&gens)
            .map_err(|e| self.error("subgroup.generators", e))
    }

    /// `[rep]` over the whole group; generator images follow `[group]` order.
    pub fn rep(&self) -> Result<PosRep, SpecError> {
        self.rep_over(Arc::clone(&self.group))
    }

    /// `[rep]` over the subgroup generated by `[subgroup].generators`, with
    /// images following that list.
    pub fn subgroup_rep(&self) -> Result<(Subgroup, PosRep), SpecError> {
        let h = self.subgroup()?;
        let spec = self.spec.subgroup.as_ref().expect("checked");
        let gens = parse_perms(&spec.generators, self.group.degree(), "subgroup.generators")
            .map_err(|(f, m)| self.error(&f, m))?;
        let hg = PermGroup::generate(self.group.degree(), gens, self.group.order())
            .map_err(|e| self.error("subgroup.generators", e))?;
        let rep = self.rep_over(Arc::new(hg))?;
        Ok((h, rep))
    }

    fn rep_over(&self, group: Arc<PermGroup>) -> Result<PosRep, SpecError> {
        let spec = self
            .spec
            .rep
            .as_ref()
            .ok_or_else(|| self.error("rep", "missing [rep] section"))?;
        let n = spec.degree;
        if spec.generators.len() != group.generators().len() {
            return Err(self.error(
                "rep.generators",
                format!(
                    "expected {} entries (one per generator), got {}",
                    group.generators().len(),
                    spec.generators.len()
                ),
            ));
        }
        let mut images = Vec::new();
        for (i, g) in spec.generators.iter().enumerate() {
            let field = format!("rep.generators[{i}]");
            let sigma = parse_perm(&g.perm, n).map_err(|m| self.error(&format!("{field}.perm"), m))?;
            let m = match &g.multiplier {
                None => Multiplier::ones(n),
                Some(entries) => {
                    if entries.len() != n {
                        return Err(self.error(
                            &format!("{field}.multiplier"),
                            format!("expected {n} entries, got {}", entries.len()),
                        ));
                    }
                    let values = entries
                        .iter()
                        .enumerate()
                        .map(|(j, s)| {
                            s.parse::<ExactPositive>()
                                .map_err(|e| self.error(&format!("{field}.multiplier[{j}]"), e))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Multiplier::new(values)
                }
            };
            images.push(PosAut::new(m, sigma).map_err(|e| self.error(&field, e))?);
        }
        PosRep::from_generators(group, n, images).map_err(|e| self.error("rep", e))
    }
}

pub fn parse_perm(spec: &PermSpec, degree: usize) -> Result<Permutation, String> {
    match spec {
        PermSpec::Cycles(s) => Permutation::parse_cycles(degree, s).map_err(|e| e.to_string()),
        PermSpec::Images(images) => {
            if images.len() != degree {
                return Err(format!("expected {degree} images, got {}", images.len()));
            }
            let zero_based = images
                .iter()
                .map(|&x| x.checked_sub(1).ok_or("images are 1-based"))
                .collect::<Result<Vec<_>, _>>()?;
            Permutation::new(zero_based).map_err(|e| e.to_string())
        }
    }
}

fn parse_perms(specs: &[PermSpec], degree: usize, field: &str) -> Result<Vec<Permutation>, (String, String)> {
    specs
        .iter()
        .enumerate()
        .map(|(i, p)| parse_perm(p, degree).map_err(|m| (format!("{field}[{i}]"), m)))
        .collect()
}

/// Named groups: `cyclic n`, `dihedral n`, `symmetric n`, `alternating n`,
/// `klein4`, `quaternion8`, and products joined by ` x `.
pub fn named_group(name: &str) -> Result<Generators, String> {
    let factors: Vec<&str> = name.split(" x ").map(str::trim).collect();
    if factors.len() > 1 {
        let parts = factors
            .iter()
            .map(|f| named_group(f))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(named::direct_product(&parts));
    }
    let mut words = name.split_whitespace();
    let kind = words.next().unwrap_or("");
    let arg = words.next();
    if words.next().is_some() {
        return Err(format!("cannot parse group name {name:?}"));
    }
    let n = || -> Result<usize, String> {
        arg.ok_or_else(|| format!("{kind} needs a size"))?
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("bad size in {name:?}"))
    };
    match kind {
        "cyclic" => Ok(named::cyclic(n()?)),
        "dihedral" => Ok(named::dihedral(n()?)),
        "symmetric" => Ok(named::symmetric(n()?)),
        "alternating" => Ok(named::alternating(n()?)),
        "klein4" if arg.is_none() => Ok(named::klein4()),
        "quaternion8" if arg.is_none() => Ok(named::quaternion8()),
        _ => Err(format!("unknown group {name:?}")),
    }
}

pub fn build_group(spec: &GroupSpec, cap: usize, source: &str) -> Result<PermGroup, SpecError> {
    let err = |field: &str, message: String| SpecError {
        source: source.into(),
        field: field.into(),
        message,
    };
    let gens = match (&spec.name, spec.degree) {
        (Some(name), None) if spec.generators.is_empty() => {
            named_group(name).map_err(|m| err("group.name", m))?
        }
        (None, Some(degree)) => Generators {
            degree,
            generators: parse_perms(&spec.generators, degree, "group.generators")
                .map_err(|(f, m)| err(&f, m))?,
        },
        _ => {
            return Err(err(
                "group",
                "give either `name` or `degree` with `generators`".into(),
            ))
        }
    };
    gens.build(cap).map_err(|e| err("group", e.to_string()))
}

pub fn parse_str(text: &str, source: &str, cap: usize) -> Result<Loaded, SpecError> {
    let spec: SpecFile = toml::from_str(text).map_err(|e| SpecError {
        source: source.into(),
        field: String::new(),
        message: e.to_string().trim_end().to_string(),
    })?;
    let group = Arc::new(build_group(&spec.group, cap, source)?);
    Ok(Loaded {
        source: source.into(),
        spec,
        group,
    })
}

pub fn load(path: &Path, cap: usize) -> Result<Loaded, SpecError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| SpecError {
        source: source.clone(),
        field: String::new(),
        message: e.to_string(),
    })?;
    parse_str(&text, &source, cap)
}

/// A group given inline as a name, e.g. `--group "symmetric 3"`.
pub fn inline_group(name: &str, cap: usize) -> Result<PermGroup, SpecError> {
    let spec = GroupSpec {
        name: Some(name.into()),
        degree: None,
        generators: Vec::new(),
    };
    build_group(&spec, cap, "--group")
}
