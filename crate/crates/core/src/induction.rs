//! Induced ordered modules, restriction, multiplicities and the
//! multiplicity form of Frobenius reciprocity.
//!
//! Representations of a subgroup `H ≤ G` live over `H.to_group(G)`, whose
//! element `k` is `H.members()[k]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{CosetSpace, PermGroup, Subgroup};
use crate::perm::Permutation;
use crate::posrep::{Multiplier, PosAut, PosRep};
use crate::structure::{decompose, is_irreducible, order_dual, order_equivalent};

/// Basis of `Ind_H^G F`: index `c·d + j` is inner vector `j` in the block of
/// coset `c` (`d = dim F`). Coset 0 is `H` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedBasis {
    pub cosets: CosetSpace,
    pub inner_degree: usize,
}

impl InducedBasis {
    pub fn len(&self) -> usize {
        self.cosets.len() * self.inner_degree
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, coset: usize, inner: usize) -> usize {
        coset * self.inner_degree + inner
    }

    /// `(coset representative, inner index)` for every basis vector.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.cosets
            .representatives
            .iter()
            .flat_map(|&r| (0..self.inner_degree).map(move |j| (r, j)))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct Induced {
    pub rep: PosRep,
    pub basis: InducedBasis,
    /// `j(e_k)` is basis vector `embedding[k]`.
    pub embedding: Vec<usize>,
}

fn checked_subgroup(g: &PermGroup, h: &Subgroup) -> Result<Subgroup> {
    if h.members().iter().any(|&x| x >= g.order()) {
        return Err(Error::NotASubgroup);
    }
    Subgroup::from_members(g, h.members().to_vec())
}

/// `Ind_H^G θ` in block form. For `s ∈ G` and coset `c` write
/// `s·r_c = r_{c'}·t` with `t ∈ H`; then `Ind(s)` sends block `c` to block
/// `c'` acting there by `θ_t`.
pub fn induce(theta: &PosRep, h: &Subgroup, g: &Arc<PermGroup>) -> Result<Induced> {
    let h = checked_subgroup(g, h)?;
    if *theta.group().as_ref() != h.to_group(g) {
        return Err(Error::NotOverSubgroup);
    }
    let cosets = g.coset_space(&h)?;
    let d = theta.degree();
    let k = cosets.len();
    let degree = k * d;

    let assignment = (0..g.order())
        .map(|s| {
            let mut images = vec![0; degree];
            let mut mult = vec![None; degree];
            for (c, &r) in cosets.representatives.iter().enumerate() {
                let sr = g.mul(s, r);
                let c2 = cosets.coset_of[sr];
                let r2 = cosets.representatives[c2];
                let t = g.mul(g.inv(r2), sr);
                let t = h.members().binary_search(&t).expect("t lies in H");
                let theta_t = theta.get(t);
                for j in 0..d {
                    let j2 = theta_t.permutation().apply(j);
                    images[c * d + j] = c2 * d + j2;
                    mult[c2 * d + j2] = Some(theta_t.multiplier().entry(j2).clone());
                }
            }
            let m = Multiplier::new(mult.into_iter().map(|x| x.expect("filled")).collect());
            PosAut::new(m, Permutation::new(images)?)
        })
        .collect::<Result<Vec<_>>>()?;

    let rep = PosRep::from_assignment(Arc::clone(g), degree, assignment)?;
    Ok(Induced {
        rep,
        basis: InducedBasis {
            cosets,
            inner_degree: d,
        },
        embedding: (0..d).collect(),
    })
}

/// `ρ|_H` over `H.to_group(G)`.
pub fn restrict(rho: &PosRep, h: &Subgroup) -> Result<PosRep> {
    let g = rho.group();
    let h = checked_subgroup(g, h)?;
    let assignment = h.members().iter().map(|&s| rho.get(s).clone()).collect();
    PosRep::from_assignment(Arc::new(h.to_group(g)), rho.degree(), assignment)
}

/// Number of irreducible summands of `rho` order equivalent to `irr`.
pub fn multiplicity(irr: &PosRep, rho: &PosRep) -> Result<usize> {
    if !irr.same_group(rho) {
        return Err(Error::GroupMismatch);
    }
    if !is_irreducible(irr) {
        return Err(Error::IrreducibleRequired);
    }
    let class = decompose(irr).summands[0].class;
    Ok(decompose(rho).multiplicity_of(class))
}

/// Block-diagonal order direct sum.
pub fn direct_sum(reps: &[PosRep]) -> Result<PosRep> {
    let first = reps
        .first()
        .ok_or_else(|| Error::InvalidAction("empty direct sum".into()))?;
    if reps.iter().any(|r| !r.same_group(first)) {
        return Err(Error::GroupMismatch);
    }
    let g = first.group();
    let degree: usize = reps.iter().map(PosRep::degree).sum();
    let assignment = (0..g.order())
        .map(|s| {
            let mut images = Vec::with_capacity(degree);
            let mut mult = Vec::with_capacity(degree);
            let mut offset = 0;
            for r in reps {
                let a = r.get(s);
                images.extend(a.permutation().images().iter().map(|&x| x + offset));
                mult.extend(a.multiplier().entries().iter().cloned());
                offset += r.degree();
            }
            PosAut::new(Multiplier::new(mult), Permutation::new(images)?)
        })
        .collect::<Result<Vec<_>>>()?;
    PosRep::from_assignment(Arc::clone(g), degree, assignment)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCell {
    /// Class of `H` indexing `θ = π^L` in the order dual of `H`.
    pub theta_class: usize,
    /// Class of `G` indexing `ρ = π^K` in the order dual of `G`.
    pub rho_class: usize,
    pub theta_degree: usize,
    pub rho_degree: usize,
    /// `m(ρ, Ind_H^G θ)`.
    pub induced: usize,
    /// `m(θ, ρ|_H)`.
    pub restricted: usize,
}

impl FrobeniusCell {
    pub fn holds(&self) -> bool {
        self.induced == self.restricted
    }
}

/// Rows over the order dual of `H`, columns over the order dual of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusTable {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub cells: Vec<FrobeniusCell>,
}

impl FrobeniusTable {
    pub fn cell(&self, row: usize, col: usize) -> &FrobeniusCell {
        &self.cells[row * self.cols + col]
    }

    pub fn violations(&self) -> usize {
        self.cells.iter().filter(|c| !c.holds()).count()
    }
}

pub fn frobenius_table(g: &Arc<PermGroup>, h: &Subgroup) -> Result<FrobeniusTable> {
    let h = checked_subgroup(g, h)?;
    let hg = Arc::new(h.to_group(g));
    let thetas = order_dual(&hg);
    let rhos = order_dual(g);
    let induced: Vec<PosRep> = thetas
        .iter()
        .map(|t| induce(&t.rep, &h, g).map(|i| i.rep))
        .collect::<Result<_>>()?;
    let restricted: Vec<PosRep> = rhos
        .iter()
        .map(|r| restrict(&r.rep, &h))
        .collect::<Result<_>>()?;
    let mut cells = Vec::with_capacity(thetas.len() * rhos.len());
    for (ti, theta) in thetas.iter().enumerate() {
        for (ri, rho) in rhos.iter().enumerate() {
            cells.push(FrobeniusCell {
                theta_class: theta.class,
                rho_class: rho.class,
                theta_degree: theta.rep.degree(),
                rho_degree: rho.rep.degree(),
                induced: multiplicity(&rho.rep, &induced[ti])?,
                restricted: multiplicity(&theta.rep, &restricted[ri])?,
            });
        }
    }
    Ok(FrobeniusTable {
        rows: thetas.len(),
        cols: rhos.len(),
        cells,
    })
}

/// True iff `Ind_K^G Ind_H^K θ` is order equivalent to `Ind_H^G θ`.
pub fn stages_check(
    g: &Arc<PermGroup>,
    k: &Subgroup,
    h: &Subgroup,
    theta: &PosRep,
) -> Result<bool> {
    let k = checked_subgroup(g, k)?;
    let h = checked_subgroup(g, h)?;
    let h_in_k = h.relative_to(&k).ok_or(Error::ChainViolation)?;
    let kg = Arc::new(k.to_group(g));
    let inner = induce(theta, &h_in_k, &kg)?.rep;
    let two_step = induce(&inner, &k, g)?.rep;
    let direct = induce(theta, &h, g)?.rep;
    Ok(order_equivalent(&two_step, &direct)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use crate::structure::{character, order_dual};

    fn arc(gens: Generators) -> Arc<PermGroup> {
        Arc::new(gens.group().unwrap())
    }

    fn subgroup_of_order(g: &PermGroup, order: usize) -> Subgroup {
        g.all_subgroups()
            .iter()
            .find(|s| s.order() == order)
            .unwrap()
            .clone()
    }

    #[test]
    fn induce_from_trivial_is_regular() {
        for g in [arc(symmetric(3)), arc(cyclic(5)), arc(klein4())] {
            let e = g.trivial_subgroup();
            let theta = PosRep::trivial(Arc::new(e.to_group(&g)), 1);
            let ind = induce(&theta, &e, &g).unwrap();
            assert_eq!(ind.rep.degree(), g.order());
            let reg = PosRep::regular(Arc::clone(&g));
            assert!(order_equivalent(&ind.rep, &reg).unwrap().is_some());
        }
    }

    #[test]
    fn induce_from_whole_group() {
        let g = arc(dihedral(4));
        let whole = g.whole();
        for entry in order_dual(&g) {
            let theta = PosRep::from_assignment(
                Arc::new(whole.to_group(&g)),
                entry.rep.degree(),
                entry.rep.assignment().to_vec(),
            )
            .unwrap();
            let ind = induce(&theta, &whole, &g).unwrap();
            assert!(order_equivalent(&ind.rep, &entry.rep).unwrap().is_some());
        }
    }

    #[test]
    fn z4_counterexample() {
        let g = arc(cyclic(4));
        let h = subgroup_of_order(&g, 2);
        let hg = Arc::new(h.to_group(&g));
        let theta = PosRep::regular(Arc::clone(&hg));
        let rho = PosRep::regular(Arc::clone(&g));
        let ind = induce(&theta, &h, &g).unwrap();
        assert_eq!(ind.rep.degree(), 4);
        assert!(order_equivalent(&ind.rep, &rho).unwrap().is_some());
        let res = restrict(&rho, &h).unwrap();
        assert_eq!(multiplicity(&theta, &res).unwrap(), 2);
        assert_eq!(multiplicity(&rho, &ind.rep).unwrap(), 1);
        let twice = direct_sum(&[theta.clone(), theta.clone()]).unwrap();
        assert!(order_equivalent(&res, &twice).unwrap().is_some());
    }

    #[test]
    fn embedding_intertwines() {
        let g = arc(symmetric(3));
        let h = subgroup_of_order(&g, 2);
        let hg = Arc::new(h.to_group(&g));
        for entry in order_dual(&hg) {
            let ind = induce(&entry.rep, &h, &g).unwrap();
            for (t, &s) in h.members().iter().enumerate() {
                let inner = entry.rep.get(t);
                let outer = ind.rep.get(s);
                for k in 0..entry.rep.degree() {
                    let jk = ind.embedding[k];
                    let img = inner.permutation().apply(k);
                    assert_eq!(outer.permutation().apply(jk), ind.embedding[img]);
                    assert_eq!(
                        outer.multiplier().entry(ind.embedding[img]),
                        inner.multiplier().entry(img)
                    );
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let g = arc(dihedral(3));
        let rho = PosRep::regular(Arc::clone(&g));
        let e = g.trivial_subgroup();
        let res = restrict(&rho, &e).unwrap();
        assert_eq!(res.group().order(), 1);
        assert_eq!(decompose(&res).signature(), vec![(0, 6)]);
        assert_eq!(restrict(&rho, &g.whole()).unwrap(), rho);
    }

    #[test]
    fn multiplicity_requires_irreducible() {
        let g = arc(cyclic(3));
        let t1 = PosRep::trivial(Arc::clone(&g), 1);
        let t2 = PosRep::trivial(Arc::clone(&g), 2);
        assert_eq!(multiplicity(&t1, &t2).unwrap(), 2);
        assert_eq!(multiplicity(&t2, &t1), Err(Error::IrreducibleRequired));
    }

    #[test]
    fn direct_sum_examples() {
        let g = arc(symmetric(3));
        let dual = order_dual(&g);
        let sum = direct_sum(&[dual[1].rep.clone(), dual[2].rep.clone()]).unwrap();
        assert_eq!(sum.degree(), dual[1].rep.degree() + dual[2].rep.degree());
        let d = decompose(&sum);
        assert_eq!(d.signature(), vec![(1, 1), (2, 1)]);
        let r = &dual[3].rep;
        assert_eq!(direct_sum(&[r.clone(), r.clone(), r.clone()]).unwrap().degree(), 3);
        let other = PosRep::trivial(arc(cyclic(2)), 1);
        assert_eq!(
            direct_sum(&[r.clone(), other]).unwrap_err(),
            Error::GroupMismatch
        );
        let c1 = character(&dual[1].rep).values;
        let c2 = character(&dual[2].rep).values;
        let cs = character(&sum).values;
        assert!((0..g.order()).all(|s| cs[s] == c1[s] + c2[s]));
    }

    #[test]
    fn frobenius_tables() {
        let g = arc(symmetric(3));
        let e = g.trivial_subgroup();
        let t = frobenius_table(&g, &e).unwrap();
        assert_eq!(t.rows, 1);
        for col in 0..t.cols {
            let c = t.cell(0, col);
            assert_eq!(c.restricted, c.rho_degree);
            assert!(c.induced <= 1);
        }
        assert_eq!(t.cells.iter().filter(|c| c.induced == 1).count(), 1);

        let g4 = arc(cyclic(4));
        let h = subgroup_of_order(&g4, 2);
        let t = frobenius_table(&g4, &h).unwrap();
        let cell = t
            .cells
            .iter()
            .find(|c| c.theta_degree == 2 && c.rho_degree == 4)
            .unwrap();
        assert_eq!((cell.induced, cell.restricted), (1, 2));

        let t = frobenius_table(&g, &g.whole()).unwrap();
        assert_eq!(t.violations(), 0);
        for c in &t.cells {
            assert_eq!(c.induced, usize::from(c.theta_class == c.rho_class));
        }
    }

    #[test]
    fn stages_examples() {
        let g = arc(cyclic(4));
        let k = subgroup_of_order(&g, 2);
        let e = g.trivial_subgroup();
        let theta = PosRep::trivial(Arc::new(e.to_group(&g)), 1);
        assert!(stages_check(&g, &k, &e, &theta).unwrap());

        let s3 = arc(symmetric(3));
        let k = subgroup_of_order(&s3, 3);
        let e = s3.trivial_subgroup();
        let theta = PosRep::trivial(Arc::new(e.to_group(&s3)), 1);
        assert!(stages_check(&s3, &k, &e, &theta).unwrap());

        let h2 = subgroup_of_order(&s3, 2);
        let theta = PosRep::trivial(Arc::new(h2.to_group(&s3)), 1);
        assert!(stages_check(&s3, &h2, &h2, &theta).unwrap());
        assert_eq!(
            stages_check(&s3, &k, &h2, &theta),
            Err(Error::ChainViolation)
        );
    }

    #[test]
    fn induce_rejects_foreign_theta() {
        let g = arc(symmetric(3));
        let h = subgroup_of_order(&g, 2);
        let theta = PosRep::trivial(Arc::clone(&g), 1);
        assert_eq!(induce(&theta, &h, &g).unwrap_err(), Error::NotOverSubgroup);
    }
}
