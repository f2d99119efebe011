//! Ordered systems of imprimitivity: partitions of the coordinates permuted by
//! `π(G)`, their band projections, and the extraction of an inducing
//! representation from a transitive system.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::gspace::GSpace;
use crate::induction::induce;
use crate::matrix::DenseMatrix;
use crate::perm::Permutation;
use crate::posrep::{Multiplier, PosAut, PosRep};
use crate::structure::{is_irreducible, order_equivalent};

/// Intransitive representations are searched by partition closure only up to
/// this degree.
pub const MAX_PARTITION_DEGREE: usize = 12;
/// Upper bound on the number of systems produced by partition closure.
pub const MAX_PARTITIONS: usize = 100_000;

/// Which systems count as trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockConvention {
    /// Only the one-block system.
    #[default]
    Literal,
    /// The one-block system and the all-singleton system when the block
    /// action is transitive.
    Maximal,
}

impl FromStr for BlockConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(BlockConvention::Literal),
            "maximal" => Ok(BlockConvention::Maximal),
            other => Err(Error::InvalidBlockSystem(format!(
                "unknown convention {other:?}, expected literal or maximal"
            ))),
        }
    }
}

impl fmt::Display for BlockConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockConvention::Literal => "literal",
            BlockConvention::Maximal => "maximal",
        })
    }
}

/// A partition of the coordinates permuted by `π(G)`. Blocks are sorted and
/// ordered by least element; `gamma` is the induced action on block indices.
#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
    pub gamma: GSpace,
}

impl BlockSystem {
    /// Validates `blocks` against `rho` and builds the block action.
    pub fn new(rho: &PosRep, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let labels = labels_of(rho.degree(), &blocks)?;
        Self::from_labels(rho, &labels)
    }

    fn from_labels(rho: &PosRep, labels: &[usize]) -> Result<Self> {
        let blocks = blocks_of(labels);
        let g = rho.group();
        let mut action = Vec::with_capacity(g.order());
        for s in 0..g.order() {
            let sigma = rho.get(s).permutation();
            let row: Vec<usize> = blocks.iter().map(|b| labels[sigma.apply(b[0])]).collect();
            for (b, block) in blocks.iter().enumerate() {
                if block.iter().any(|&x| labels[sigma.apply(x)] != row[b]) {
                    return Err(Error::InvalidBlockSystem(format!(
                        "block {b} is not mapped onto a block by {}",
                        g.element(s)
                    )));
                }
            }
            action.push(row);
        }
        let gamma = GSpace::new(Arc::clone(g), blocks.len().max(1), action)?;
        Ok(BlockSystem { blocks, gamma })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, coordinate: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&coordinate))
    }

    pub fn is_transitive(&self) -> bool {
        self.gamma.is_transitive()
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn is_trivial(&self, convention: BlockConvention) -> bool {
        match convention {
            BlockConvention::Literal => self.blocks.len() <= 1,
            BlockConvention::Maximal => {
                self.blocks.len() <= 1 || (self.is_singletons() && self.is_transitive())
            }
        }
    }
}

impl PartialEq for BlockSystem {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for BlockSystem {}

fn labels_of(n: usize, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut labels = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidBlockSystem("empty block".into()));
        }
        for &x in block {
            if x >= n || labels[x] != usize::MAX {
                return Err(Error::InvalidBlockSystem(format!(
                    "coordinate {x} out of range or repeated"
                )));
            }
            labels[x] = b;
        }
    }
    if labels.contains(&usize::MAX) {
        return Err(Error::InvalidBlockSystem("blocks do not cover every coordinate".into()));
    }
    Ok(canonical(&labels))
}

/// Relabels blocks in order of first appearance.
fn canonical(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

fn blocks_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().max().map_or(0, |&m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (x, &l) in labels.iter().enumerate() {
        blocks[l].push(x);
    }
    blocks
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn from_labels(labels: &[usize]) -> Self {
        let mut uf = UnionFind::new(labels.len());
        let mut first = std::collections::HashMap::new();
        for (x, &l) in labels.iter().enumerate() {
            let r = *first.entry(l).or_insert(x);
            uf.union(r, x);
        }
        uf
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn labels(&mut self) -> Vec<usize> {
        let roots: Vec<usize> = (0..self.0.len()).map(|x| self.find(x)).collect();
        canonical(&roots)
    }
}

/// Finest invariant partition joining `x` and `y`.
fn minimal_partition(space: &GSpace, x: usize, y: usize) -> Vec<usize> {
    let mut uf = UnionFind::new(space.points());
    for s in 0..space.group().order() {
        uf.union(space.act(s, x), space.act(s, y));
    }
    uf.labels()
}

fn join(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::from_labels(a);
    let mut first = std::collections::HashMap::new();
    for (x, &l) in b.iter().enumerate() {
        let r = *first.entry(l).or_insert(x);
        uf.union(r, x);
    }
    uf.labels()
}

fn sort_systems(mut labels: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    labels.sort_by_key(|l| (l.iter().max().map_or(0, |&m| m + 1), l.clone()));
    labels
}

/// Every block system of `rho`, sorted by block count (then by labelling).
///
/// Transitive `π`: one system per subgroup `K` containing the stabilizer of
/// coordinate 0, with blocks the translates of `K·0`. Otherwise the closure of
/// the minimal partitions `P(x, y)` under joins.
pub fn all_block_systems(rho: &PosRep) -> Result<Vec<BlockSystem>> {
    let labels = if rho.degree() == 0 {
        Vec::new()
    } else if rho.coordinate_space().is_transitive() {
        transitive_partitions(rho)
    } else {
        join_closure_partitions(rho)?
    };
    labels
        .iter()
        .map(|l| BlockSystem::from_labels(rho, l))
        .collect()
}

fn transitive_partitions(rho: &PosRep) -> Vec<Vec<usize>> {
    let g = rho.group();
    let space = rho.coordinate_space();
    let stab = space.stabilizer(0);
    let labels: Vec<Vec<usize>> = g
        .all_subgroups()
        .iter()
        .filter(|k| stab.is_subgroup_of(k))
        .map(|k| {
            let cosets = g.coset_space(k).expect("subgroup");
            let mut labels = vec![0; rho.degree()];
            for s in 0..g.order() {
                labels[space.act(s, 0)] = cosets.coset_of[s];
            }
            canonical(&labels)
        })
        .collect();
    sort_systems(labels)
}

fn join_closure_partitions(rho: &PosRep) -> Result<Vec<Vec<usize>>> {
    let n = rho.degree();
    if n > MAX_PARTITION_DEGREE {
        return Err(Error::PartitionCap { degree: n });
    }
    let space = rho.coordinate_space();
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    let mut atom_set = HashSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let p = minimal_partition(&space, x, y);
            if atom_set.insert(p.clone()) {
                atoms.push(p);
            }
        }
    }
    let discrete: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([discrete.clone()]);
    let mut queue = VecDeque::from([discrete]);
    while let Some(p) = queue.pop_front() {
        for a in &atoms {
            let q = join(&p, a);
            if seen.insert(q.clone()) {
                if seen.len() > MAX_PARTITIONS {
                    return Err(Error::PartitionCap { degree: n });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(sort_systems(seen.into_iter().collect()))
}

/// Exhaustive search over all set partitions of the coordinates. Used as a
/// cross-check; degree at most 10.
pub fn block_systems_by_search(rho: &PosRep) -> Result<Vec<BlockSystem>> {
    let n = rho.degree();
    if n > 10 {
        return Err(Error::PartitionCap { degree: n });
    }
    let perms: BTreeSet<&Permutation> = rho.group().generator_indices().iter().map(|&s| rho.get(s).permutation()).collect();
    let mut found = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(
        i: usize,
        max: usize,
        labels: &mut Vec<usize>,
        perms: &BTreeSet<&Permutation>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if i == labels.len() {
            if perms.iter().all(|p| preserves(p, labels)) {
                found.push(labels.clone());
            }
            return;
        }
        for l in 0..=max {
            labels[i] = l;
            rec(i + 1, max.max(l + 1), labels, perms, found);
        }
    }
    if n > 0 {
        rec(1, 1, &mut labels, &perms, &mut found);
    }
    sort_systems(found)
        .iter()
        .map(|l| BlockSystem::from_labels(rho, l))
        .collect()
}

fn preserves(p: &Permutation, labels: &[usize]) -> bool {
    let mut image = vec![usize::MAX; labels.len()];
    for (x, &l) in labels.iter().enumerate() {
        let target = labels[p.apply(x)];
        if image[l] == usize::MAX {
            image[l] = target;
        } else if image[l] != target {
            return false;
        }
    }
    true
}

/// True iff every block system is trivial under `convention`.
pub fn is_primitive(rho: &PosRep, convention: BlockConvention) -> Result<bool> {
    Ok(all_block_systems(rho)?
        .iter()
        .all(|bs| bs.is_trivial(convention)))
}

/// `P(A)` for a set `A` of block indices: the coordinate projection onto the
/// union of those blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandProjection {
    pub diagonal: Vec<bool>,
}

impl BandProjection {
    pub fn to_matrix(&self) -> DenseMatrix {
        DenseMatrix::diagonal_mask(&self.diagonal)
    }

    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        x.iter()
            .zip(&self.diagonal)
            .map(|(v, &keep)| if keep { v.clone() } else { BigRational::default() })
            .collect()
    }

    pub fn compose(&self, other: &BandProjection) -> BandProjection {
        BandProjection {
            diagonal: self
                .diagonal
                .iter()
                .zip(&other.diagonal)
                .map(|(a, b)| *a && *b)
                .collect(),
        }
    }
}

pub fn band_projection(bs: &BlockSystem, a: &[usize]) -> Result<BandProjection> {
    let n: usize = bs.blocks.iter().map(Vec::len).sum();
    let mut diagonal = vec![false; n];
    for &b in a {
        let block = bs.blocks.get(b).ok_or_else(|| {
            Error::InvalidBlockSystem(format!("block index {b} out of range"))
        })?;
        for &x in block {
            diagonal[x] = true;
        }
    }
    Ok(BandProjection { diagonal })
}

/// Checks `P(sA) = ρ_s P(A) ρ_s⁻¹` for every `s` and every single block `A`
/// by exact matrix products: the conjugated projection must be the 0/1
/// diagonal of another block of the partition.
pub fn covariance_check(rho: &PosRep, blocks: &[Vec<usize>]) -> bool {
    let n = rho.degree();
    let Ok(labels) = labels_of(n, blocks) else {
        return false;
    };
    let blocks = blocks_of(&labels);
    let masks: Vec<DenseMatrix> = blocks
        .iter()
        .map(|b| {
            let mut mask = vec![false; n];
            for &x in b {
                mask[x] = true;
            }
            DenseMatrix::diagonal_mask(&mask)
        })
        .collect();
    (0..rho.group().order()).all(|s| {
        let a = rho.get(s);
        let m = a.to_matrix();
        let minv = a.inverse().to_matrix();
        blocks.iter().enumerate().all(|(b, block)| {
            let conj = m.mul(&masks[b]).mul(&minv);
            let target = labels[a.permutation().apply(block[0])];
            conj == masks[target]
        })
    })
}

/// Result of the imprimitivity construction on a transitive system.
#[derive(Debug, Clone)]
pub struct InducedFromSystem {
    /// Stabilizer of block 0 (the block containing coordinate 0).
    pub subgroup: Subgroup,
    /// `ρ|_H` on the coordinates of block 0, over `subgroup.to_group(G)`.
    pub theta: PosRep,
    pub induced: PosRep,
    /// `T` with `T·Ind(s) = ρ_s·T`.
    pub witness: PosAut,
}

pub fn induction_from_imprimitivity(rho: &PosRep, bs: &BlockSystem) -> Result<InducedFromSystem> {
    let bs = BlockSystem::new(rho, bs.blocks.clone())?;
    if bs.blocks.len() <= 1 {
        return Err(Error::TrivialSystem);
    }
    if !bs.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let g = rho.group();
    let subgroup = bs.gamma.stabilizer(0);
    let block = &bs.blocks[0];
    let position = |x: usize| block.binary_search(&x).expect("block is stable");
    let assignment = subgroup
        .members()
        .iter()
        .map(|&t| {
            let a = rho.get(t);
            let images: Vec<usize> = block.iter().map(|&x| position(a.permutation().apply(x))).collect();
            let m = Multiplier::new(block.iter().map(|&y| a.multiplier().entry(y).clone()).collect());
            PosAut::new(m, Permutation::new(images)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let theta = PosRep::from_assignment(Arc::new(subgroup.to_group(g)), block.len(), assignment)?;
    let induced = induce(&theta, &subgroup, g)?.rep;
    let witness = order_equivalent(rho, &induced)?
        .ok_or_else(|| Error::Internal("ρ is not order equivalent to the induced representation".into()))?;
    Ok(InducedFromSystem {
        subgroup,
        theta,
        induced,
        witness,
    })
}

/// One step of a primitive chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    /// As a subgroup of the original group.
    pub subgroup: Subgroup,
    /// Over `subgroup.to_group(G)`.
    pub theta: PosRep,
}

/// `ρ ≅ Ind_{H₁}^G Ind_{H₂}^{H₁} ⋯ θ_k` with `θ_k` primitive, using the
/// system with the most blocks at every step. Empty when `ρ` is already
/// primitive. The composite induction is checked against `ρ`.
pub fn primitive_chain(rho: &PosRep, convention: BlockConvention) -> Result<Vec<ChainStep>> {
    if !is_irreducible(rho) {
        return Err(Error::NotIrreducible);
    }
    let g = rho.group();
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut current = rho.clone();
    let mut current_in_g = g.whole();
    loop {
        let finest = all_block_systems(&current)?
            .into_iter()
            .filter(|bs| !bs.is_trivial(convention) && bs.is_transitive())
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.blocks.cmp(&a.blocks)));
        let Some(bs) = finest else { break };
        let step = induction_from_imprimitivity(&current, &bs)?;
        current_in_g = step.subgroup.lift_from(&current_in_g);
        current = step.theta;
        steps.push(ChainStep {
            subgroup: current_in_g.clone(),
            theta: current.clone(),
        });
    }
    if !steps.is_empty() {
        let rebuilt = recompose_chain(g, &steps)?;
        if order_equivalent(rho, &rebuilt)?.is_none() {
            return Err(Error::Internal("primitive chain does not recompose".into()));
        }
    }
    Ok(steps)
}

/// Induces the last `θ` of a chain back up to `G` one stage at a time.
pub fn recompose_chain(g: &Arc<PermGroup>, steps: &[ChainStep]) -> Result<PosRep> {
    let last = steps
        .last()
        .ok_or_else(|| Error::InvalidBlockSystem("empty chain".into()))?;
    let mut rep = last.theta.clone();
    for i in (0..steps.len()).rev() {
        let inner = &steps[i].subgroup;
        let (outer_group, relative) = match i {
            0 => (Arc::clone(g), inner.clone()),
            _ => {
                let outer = &steps[i - 1].subgroup;
                let rel = inner.relative_to(outer).ok_or(Error::ChainViolation)?;
                (Arc::new(outer.to_group(g)), rel)
            }
        };
        rep = induce(&rep, &relative, &outer_group)?.rep;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use crate::structure::{decompose, order_dual};

    fn arc(gens: Generators) -> Arc<PermGroup> {
        Arc::new(gens.group().unwrap())
    }

    fn blocks(systems: &[BlockSystem]) -> Vec<Vec<Vec<usize>>> {
        systems.iter().map(|b| b.blocks.clone()).collect()
    }

    #[test]
    fn regular_z4_systems() {
        let rho = PosRep::regular(arc(cyclic(4)));
        let systems = all_block_systems(&rho).unwrap();
        assert_eq!(systems.len(), 3);
        assert_eq!(systems[0].len(), 1);
        assert_eq!(systems[1].len(), 2);
        assert_eq!(systems[2].len(), 4);
        assert!(systems.iter().all(|bs| covariance_check(&rho, &bs.blocks)));
        assert!(!is_primitive(&rho, BlockConvention::Literal).unwrap());
        assert!(!is_primitive(&rho, BlockConvention::Maximal).unwrap());
        assert_eq!(blocks(&systems), blocks(&block_systems_by_search(&rho).unwrap()));
    }

    #[test]
    fn one_dimensional_is_primitive() {
        let rho = PosRep::trivial(arc(symmetric(3)), 1);
        assert_eq!(all_block_systems(&rho).unwrap().len(), 1);
        assert!(is_primitive(&rho, BlockConvention::Literal).unwrap());
        assert!(primitive_chain(&rho, BlockConvention::Literal).unwrap().is_empty());
    }

    #[test]
    fn maximal_subgroup_conventions() {
        let g = arc(cyclic(4));
        let dual = order_dual(&g);
        let two = dual.iter().find(|e| e.rep.degree() == 2).unwrap();
        assert_eq!(all_block_systems(&two.rep).unwrap().len(), 2);
        assert!(!is_primitive(&two.rep, BlockConvention::Literal).unwrap());
        assert!(is_primitive(&two.rep, BlockConvention::Maximal).unwrap());
        assert!(primitive_chain(&two.rep, BlockConvention::Maximal).unwrap().is_empty());
        assert_eq!(primitive_chain(&two.rep, BlockConvention::Literal).unwrap().len(), 1);
    }

    #[test]
    fn band_projections() {
        let g = arc(klein4());
        let p = |s: &str| Permutation::parse_cycles(6, s).unwrap();
        let rho =
            PosRep::from_permutations(g, 6, vec![p("(1 2)(3 4)"), p("(1 3)(2 4)")]).unwrap();
        let orbits = decompose(&rho)
            .summands
            .iter()
            .flat_map(|s| s.blocks.clone())
            .collect::<Vec<_>>();
        let bs = BlockSystem::new(&rho, {
            let mut o = orbits;
            o.sort();
            o
        })
        .unwrap();
        let five = bs.block_of(4).unwrap();
        let pr = band_projection(&bs, &[five]).unwrap();
        assert_eq!(pr.diagonal, vec![false, false, false, false, true, false]);
        assert!(band_projection(&bs, &[]).unwrap().diagonal.iter().all(|b| !b));
        let all: Vec<usize> = (0..bs.len()).collect();
        assert_eq!(band_projection(&bs, &all).unwrap().to_matrix(), DenseMatrix::identity(6));
        assert!(band_projection(&bs, &[7]).is_err());
        assert!(covariance_check(&rho, &bs.blocks));
        assert!(!bs.is_transitive());
    }

    #[test]
    fn corrupted_partition_fails_covariance() {
        let rho = PosRep::regular(arc(cyclic(4)));
        let good = all_block_systems(&rho).unwrap()[1].blocks.clone();
        assert!(covariance_check(&rho, &good));
        let bad = vec![vec![0, 1], vec![2, 3]];
        assert_ne!(good, bad);
        assert!(!covariance_check(&rho, &bad));
        assert!(BlockSystem::new(&rho, bad).is_err());
    }

    #[test]
    fn imprimitivity_z4() {
        let g = arc(cyclic(4));
        let rho = PosRep::regular(Arc::clone(&g));
        let bs = &all_block_systems(&rho).unwrap()[1];
        let out = induction_from_imprimitivity(&rho, bs).unwrap();
        assert_eq!(out.subgroup.order(), 2);
        assert_eq!(out.theta.degree(), 2);
        let reg_h = PosRep::regular(Arc::clone(out.theta.group()));
        assert!(order_equivalent(&out.theta, &reg_h).unwrap().is_some());
        let trivial = &all_block_systems(&rho).unwrap()[0];
        assert_eq!(
            induction_from_imprimitivity(&rho, trivial).unwrap_err(),
            Error::TrivialSystem
        );
    }

    #[test]
    fn imprimitivity_s3_regular() {
        let g = arc(symmetric(3));
        let rho = PosRep::regular(Arc::clone(&g));
        let systems = all_block_systems(&rho).unwrap();
        // one system per subgroup of S3
        assert_eq!(systems.len(), 6);
        for bs in systems.iter().filter(|b| b.len() == 3) {
            let out = induction_from_imprimitivity(&rho, bs).unwrap();
            assert_eq!(out.subgroup.order(), 2);
            assert_eq!(out.theta.degree(), 2);
        }
        let singletons = systems.last().unwrap();
        let out = induction_from_imprimitivity(&rho, singletons).unwrap();
        assert_eq!(out.subgroup.order(), 1);
        assert_eq!(out.theta.degree(), 1);
    }

    #[test]
    fn intransitive_block_action_is_rejected() {
        let rho = PosRep::trivial(arc(cyclic(2)), 2);
        let systems = all_block_systems(&rho).unwrap();
        assert_eq!(systems.len(), 2);
        let split = systems.iter().find(|b| b.len() == 2).unwrap();
        assert_eq!(
            induction_from_imprimitivity(&rho, split).unwrap_err(),
            Error::NotTransitive
        );
        assert!(!is_primitive(&rho, BlockConvention::Maximal).unwrap());
        assert_eq!(
            primitive_chain(&rho, BlockConvention::Literal).unwrap_err(),
            Error::NotIrreducible
        );
    }

    #[test]
    fn join_closure_matches_search() {
        let g = arc(klein4());
        let p = |s: &str| Permutation::parse_cycles(6, s).unwrap();
        for second in ["(1 3)(2 4)", "(1 2)(5 6)"] {
            let rho = PosRep::from_permutations(Arc::clone(&g), 6, vec![p("(1 2)(3 4)"), p(second)])
                .unwrap();
            let closure = all_block_systems(&rho).unwrap();
            let search = block_systems_by_search(&rho).unwrap();
            assert_eq!(blocks(&closure), blocks(&search));
        }
    }

    #[test]
    fn chain_on_regular_rep() {
        let g = arc(dihedral(4));
        let rho = PosRep::regular(Arc::clone(&g));
        let chain = primitive_chain(&rho, BlockConvention::Literal).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[0].subgroup.order(), 1);
        let chain = primitive_chain(&rho, BlockConvention::Maximal).unwrap();
        let last = chain.last().unwrap();
        assert!(is_primitive(&last.theta, BlockConvention::Maximal).unwrap());
        let rebuilt = recompose_chain(&g, &chain).unwrap();
        assert!(order_equivalent(&rho, &rebuilt).unwrap().is_some());
    }

    #[test]
    fn convention_parsing() {
        assert_eq!("literal".parse::<BlockConvention>().unwrap(), BlockConvention::Literal);
        assert_eq!("maximal".parse::<BlockConvention>().unwrap(), BlockConvention::Maximal);
        assert!("other".parse::<BlockConvention>().is_err());
        assert_eq!(BlockConvention::Maximal.to_string(), "maximal");
    }
}
