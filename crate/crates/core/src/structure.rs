//! Structure of positive representations of a finite group on ℝⁿ.
//!
//! Every such `ρ` factors as `ρ_s = m π_s m⁻¹` with a unique permutation
//! representation `π = p ∘ ρ` and a multiplier `m`, so everything order
//! theoretic reduces to the action of `π(G)` on the coordinates: orbits are the
//! irreducible invariant bands, orbit stabilizers classify them up to order
//! equivalence, and fixed-point counts give the character.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::ExactPositive;
use crate::group::{PermGroup, Subgroup};
use crate::gspace::{gspaces_isomorphic, GSpace};
use crate::perm::Permutation;
use crate::posrep::{Multiplier, PosAut, PosRep};

/// Invariant bands are enumerated only up to this many orbits.
pub const MAX_BAND_ORBITS: usize = 20;

/// `ρ_s = m π_s m⁻¹` for every element `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// `π_s` for every element index `s`.
    pub pi: Vec<Permutation>,
    /// Normalized so that the geometric mean over every `π(G)`-orbit is 1.
    pub m: Multiplier,
}

impl Factorization {
    /// `m π_s m⁻¹ = (m·π_s(m)⁻¹, π_s)`.
    pub fn conjugated(&self, s: usize) -> PosAut {
        let pi = &self.pi[s];
        let m = self.m.div(&self.m.shifted(pi));
        PosAut::new(m, pi.clone()).expect("degrees agree")
    }

    /// Rebuilds the representation from `(m, π)`.
    pub fn rebuild(&self, group: Arc<PermGroup>) -> Result<PosRep> {
        let degree = self.m.len();
        let assignment = (0..self.pi.len()).map(|s| self.conjugated(s)).collect();
        PosRep::from_assignment(group, degree, assignment)
    }
}

/// Factors `ρ` as `m π m⁻¹`.
///
/// The multiplier part of `ρ_s` depends only on `π_s`, giving a crossed
/// homomorphism `f` on the image group `π(G)`; `m` is its multiplicative
/// average `mᵢ = (∏_{σ ∈ π(G)} f(σ)ᵢ)^{1/|π(G)|}`, then rescaled on each orbit.
pub fn factor(rho: &PosRep) -> Result<Factorization> {
    let n = rho.degree();
    let pi = rho.permutation_part();

    let mut cocycle: HashMap<&Permutation, &Multiplier> = HashMap::new();
    for s in 0..pi.len() {
        let f = rho.get(s).multiplier();
        if let Some(prev) = cocycle.insert(&pi[s], f) {
            if prev != f {
                return Err(Error::Internal(format!(
                    "two elements share the permutation {} with different multipliers",
                    pi[s]
                )));
            }
        }
    }

    let mut m: Vec<ExactPositive> = (0..n)
        .map(|i| ExactPositive::geometric_mean(cocycle.values().map(|f| f.entry(i))))
        .collect();

    for orbit in rho.coordinate_space().orbits() {
        let mean = ExactPositive::geometric_mean(orbit.iter().map(|&i| &m[i]));
        for &i in &orbit {
            m[i] = m[i].div(&mean);
        }
    }

    let fact = Factorization {
        pi,
        m: Multiplier::new(m),
    };
    for s in 0..fact.pi.len() {
        if fact.conjugated(s) != *rho.get(s) {
            return Err(Error::Internal(format!(
                "m π m⁻¹ differs from ρ at {}",
                rho.group().element(s)
            )));
        }
    }
    Ok(fact)
}

/// One isotypic part: `multiplicity` copies of `π^H` for the class of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    /// Index into [`PermGroup::conjugacy_classes_of_subgroups`].
    pub class: usize,
    /// Canonical representative of the class.
    pub subgroup: Subgroup,
    /// `|G:H|`, the dimension of each copy.
    pub index: usize,
    pub multiplicity: usize,
    /// Coordinate sets (orbits) realizing each copy.
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub degree: usize,
}

impl Decomposition {
    /// Dimensions of the irreducible summands, largest first.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self
            .summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.index, s.multiplicity))
            .collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        dims
    }

    /// The order-equivalence invariant: (class, multiplicity) pairs.
    pub fn signature(&self) -> Vec<(usize, usize)> {
        let mut sig: Vec<_> = self
            .summands
            .iter()
            .map(|s| (s.class, s.multiplicity))
            .collect();
        sig.sort_unstable();
        sig
    }

    pub fn multiplicity_of(&self, class: usize) -> usize {
        self.summands
            .iter()
            .find(|s| s.class == class)
            .map_or(0, |s| s.multiplicity)
    }
}

/// Splits `ρ` into irreducibles: one per `π(G)`-orbit of coordinates, grouped
/// by the conjugacy class of the orbit stabilizer (taken at the least point).
pub fn decompose(rho: &PosRep) -> Decomposition {
    let g = rho.group();
    let space = rho.coordinate_space();
    let mut by_class: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for orbit in space.orbits() {
        let stab = space.stabilizer(orbit[0]);
        let class = g.class_of(&stab).expect("stabilizer is a subgroup");
        by_class.entry(class).or_default().push(orbit);
    }
    let mut summands: Vec<Summand> = by_class
        .into_iter()
        .map(|(class, blocks)| {
            let subgroup = g.class_representative(class).clone();
            Summand {
                class,
                index: g.order() / subgroup.order(),
                subgroup,
                multiplicity: blocks.len(),
                blocks,
            }
        })
        .collect();
    summands.sort_by(|a, b| b.index.cmp(&a.index).then(a.class.cmp(&b.class)));
    Decomposition {
        summands,
        degree: rho.degree(),
    }
}

/// Irreducible iff `π(G)` is transitive on the coordinates.
pub fn is_irreducible(rho: &PosRep) -> bool {
    rho.degree() > 0 && rho.coordinate_space().is_transitive()
}

/// Every invariant band as a sorted coordinate set: all unions of orbits,
/// from `∅` to the full set, ordered by the bitmask over orbits.
pub fn invariant_bands(rho: &PosRep) -> Result<Vec<Vec<usize>>> {
    let orbits = rho.coordinate_space().orbits();
    if orbits.len() > MAX_BAND_ORBITS {
        return Err(Error::TooManyOrbits { orbits });
    }
    let k = orbits.len();
    Ok((0u32..(1 << k))
        .map(|mask| {
            let mut band: Vec<usize> = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .flat_map(|b| orbits[b].iter().copied())
                .collect();
            band.sort_unstable();
            band
        })
        .collect())
}

/// Order equivalence. When the stabilizer-class multisets agree, returns an
/// intertwining lattice isomorphism `T = (m₁σ(m₂)⁻¹, σ)` with
/// `T ρ²_s = ρ¹_s T`, where `σ` is an equivariant coordinate bijection
/// from `π²` to `π¹`.
pub fn order_equivalent(r1: &PosRep, r2: &PosRep) -> Result<Option<PosAut>> {
    if !r1.same_group(r2) {
        return Err(Error::GroupMismatch);
    }
    if r1.degree() != r2.degree() {
        return Ok(None);
    }
    if decompose(r1).signature() != decompose(r2).signature() {
        return Ok(None);
    }
    let x1 = r1.coordinate_space();
    let x2 = r2.coordinate_space();
    let phi = gspaces_isomorphic(&x2, &x1)?
        .ok_or_else(|| Error::Internal("equal signatures but no G-space isomorphism".into()))?;
    let sigma = Permutation::new(phi)?;
    let m1 = factor(r1)?.m;
    let m2 = factor(r2)?.m;
    let m = m1.div(&m2.shifted(&sigma));
    let t = PosAut::new(m, sigma)?;
    if !is_intertwiner(&t, r1, r2) {
        return Err(Error::Internal("constructed intertwiner fails".into()));
    }
    Ok(Some(t))
}

/// `T ρ²_s = ρ¹_s T` for every `s`.
pub fn is_intertwiner(t: &PosAut, r1: &PosRep, r2: &PosRep) -> bool {
    r1.same_group(r2)
        && t.degree() == r1.degree()
        && t.degree() == r2.degree()
        && (0..r1.group().order()).all(|s| {
            t.mul_unchecked(r2.get(s)) == r1.get(s).mul_unchecked(t)
        })
}

/// Fixed-point counts of `π_s`, indexed by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<usize>,
}

pub fn character(rho: &PosRep) -> Character {
    Character {
        values: rho
            .assignment()
            .iter()
            .map(|a| a.permutation().fixed_points())
            .collect(),
    }
}

/// Equality of characters.
pub fn linear_equivalent(r1: &PosRep, r2: &PosRep) -> Result<bool> {
    if !r1.same_group(r2) {
        return Err(Error::GroupMismatch);
    }
    Ok(character(r1) == character(r2))
}

/// An irreducible `π^H` together with the class it represents.
#[derive(Debug, Clone)]
pub struct DualEntry {
    pub class: usize,
    pub subgroup: Subgroup,
    pub rep: PosRep,
}

/// `π^H` on `C(G/H)` for the canonical representative `H` of every conjugacy
/// class of subgroups, in class order.
pub fn order_dual(g: &Arc<PermGroup>) -> Vec<DualEntry> {
    (0..g.conjugacy_classes_of_subgroups().len())
        .map(|class| {
            let subgroup = g.class_representative(class).clone();
            let space = GSpace::coset_action(Arc::clone(g), &subgroup).expect("subgroup");
            DualEntry {
                class,
                subgroup,
                rep: PosRep::from_gspace(&space),
            }
        })
        .collect()
}

/// True iff every subgroup is normal.
pub fn dedekind_check(g: &PermGroup) -> bool {
    g.is_dedekind()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindReport {
    pub dedekind: bool,
    /// No two order-dual entries share a character.
    pub characters_distinct: bool,
    /// `χ(π^N) = |G:N|·1_N` for every normal class representative `N`.
    pub normal_character_formula: bool,
    /// Linearly equivalent order-dual entries are identical.
    pub linear_implies_order: bool,
}

pub fn verify_dedekind_correspondence(g: &Arc<PermGroup>) -> DedekindReport {
    let dual = order_dual(g);
    let chars: Vec<Character> = dual.iter().map(|e| character(&e.rep)).collect();
    let mut characters_distinct = true;
    let mut linear_implies_order = true;
    for i in 0..chars.len() {
        for j in i + 1..chars.len() {
            if chars[i] == chars[j] {
                characters_distinct = false;
                let same = order_equivalent(&dual[i].rep, &dual[j].rep)
                    .map(|w| w.is_some())
                    .unwrap_or(false);
                linear_implies_order &= same;
            }
        }
    }
    let normal_character_formula = dual.iter().zip(&chars).all(|(e, chi)| {
        if !e.subgroup.is_normal(g) {
            return true;
        }
        let index = g.order() / e.subgroup.order();
        (0..g.order()).all(|s| {
            let expected = if e.subgroup.contains(s) { index } else { 0 };
            chi.values[s] == expected
        })
    });
    DedekindReport {
        dedekind: dedekind_check(g),
        characters_distinct,
        normal_character_formula,
        linear_implies_order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    fn ep(s: &str) -> ExactPositive {
        s.parse().unwrap()
    }

    fn arc(gens: Generators) -> Arc<PermGroup> {
        Arc::new(gens.group().unwrap())
    }

    fn klein_rep(second: &str) -> PosRep {
        let g = arc(klein4());
        let p = |s: &str| Permutation::parse_cycles(6, s).unwrap();
        PosRep::from_permutations(g, 6, vec![p("(1 2)(3 4)"), p(second)]).unwrap()
    }

    fn swap_rep() -> PosRep {
        let z2 = arc(cyclic(2));
        let a = PosAut::new(
            Multiplier::new(vec![ep("2"), ep("1/2")]),
            Permutation::parse_cycles(2, "(1 2)").unwrap(),
        )
        .unwrap();
        PosRep::from_generators(z2, 2, vec![a]).unwrap()
    }

    #[test]
    fn factor_swap_example() {
        let rho = swap_rep();
        let f = factor(&rho).unwrap();
        assert_eq!(f.m, Multiplier::new(vec![ep("2^(1/2)"), ep("2^(-1/2)")]));
        let gen = rho.group().generator_indices()[0];
        assert_eq!(f.pi[gen], Permutation::parse_cycles(2, "(1 2)").unwrap());
        // matrix oracle: m π m⁻¹ = ρ_gen
        let m = PosAut::from_multiplier(f.m.clone()).to_matrix();
        let minv = PosAut::from_multiplier(f.m.inv()).to_matrix();
        let pi = PosAut::from_permutation(f.pi[gen].clone()).to_matrix();
        assert_eq!(m.mul(&pi).mul(&minv), rho.get(gen).to_matrix());
    }

    #[test]
    fn factor_permutation_and_trivial_reps() {
        let f = factor(&klein_rep("(1 3)(2 4)")).unwrap();
        assert!(f.m.is_ones());
        let t = PosRep::trivial(arc(cyclic(1)), 3);
        let f = factor(&t).unwrap();
        assert!(f.m.is_ones());
        assert!(f.pi[0].is_identity());
    }

    #[test]
    fn klein_decompositions() {
        let d1 = decompose(&klein_rep("(1 3)(2 4)"));
        assert_eq!(d1.dimensions(), vec![4, 1, 1]);
        assert_eq!(d1.summands.len(), 2);
        assert_eq!(d1.summands[0].index, 4);
        assert_eq!(d1.summands[1].multiplicity, 2);
        assert_eq!(d1.summands[1].blocks, vec![vec![4], vec![5]]);

        // three 2-dim summands with pairwise distinct stabilizers
        let d2 = decompose(&klein_rep("(1 2)(5 6)"));
        assert_eq!(d2.dimensions(), vec![2, 2, 2]);
        assert_eq!(d2.summands.len(), 3);
        assert!(d2.summands.iter().all(|s| s.multiplicity == 1));
    }

    #[test]
    fn trivial_rep_decomposition() {
        let g = arc(symmetric(3));
        let d = decompose(&PosRep::trivial(Arc::clone(&g), 4));
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 4);
        assert_eq!(d.summands[0].subgroup, g.whole());
    }

    #[test]
    fn irreducibility() {
        let z4 = arc(cyclic(4));
        assert!(is_irreducible(&PosRep::regular(Arc::clone(&z4))));
        assert!(!is_irreducible(&PosRep::trivial(Arc::clone(&z4), 2)));
        let h = z4.all_subgroups()[1].clone();
        let pi_h = PosRep::from_gspace(&GSpace::coset_action(Arc::clone(&z4), &h).unwrap());
        assert!(is_irreducible(&pi_h));
        let d = decompose(&pi_h);
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 1);
    }

    #[test]
    fn invariant_band_counts() {
        assert_eq!(invariant_bands(&klein_rep("(1 3)(2 4)")).unwrap().len(), 8);
        let reg = PosRep::regular(arc(cyclic(3)));
        assert_eq!(
            invariant_bands(&reg).unwrap(),
            vec![vec![], vec![0, 1, 2]]
        );
        let t = PosRep::trivial(arc(cyclic(2)), 2);
        assert_eq!(
            invariant_bands(&t).unwrap(),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
        let big = PosRep::trivial(arc(cyclic(1)), 21);
        assert!(matches!(invariant_bands(&big), Err(Error::TooManyOrbits { .. })));
    }

    #[test]
    fn bands_are_invariant() {
        let rho = klein_rep("(1 2)(5 6)");
        for band in invariant_bands(&rho).unwrap() {
            for s in 0..rho.group().order() {
                let mut image: Vec<usize> =
                    band.iter().map(|&i| rho.get(s).permutation().apply(i)).collect();
                image.sort_unstable();
                assert_eq!(image, band);
            }
        }
    }

    #[test]
    fn klein_counterexample() {
        let p1 = klein_rep("(1 3)(2 4)");
        let p2 = klein_rep("(1 2)(5 6)");
        assert_eq!(character(&p1), character(&p2));
        assert_eq!(character(&p1).values, vec![6, 2, 2, 2]);
        assert!(linear_equivalent(&p1, &p2).unwrap());
        assert_eq!(order_equivalent(&p1, &p2).unwrap(), None);
    }

    #[test]
    fn order_equivalent_to_permutation_part() {
        let rho = swap_rep();
        let f = factor(&rho).unwrap();
        let pi = PosRep::from_assignment(
            Arc::clone(rho.group()),
            2,
            f.pi.iter().cloned().map(PosAut::from_permutation).collect(),
        )
        .unwrap();
        let t = order_equivalent(&rho, &pi).unwrap().unwrap();
        assert!(is_intertwiner(&t, &rho, &pi));
        let id = order_equivalent(&rho, &rho).unwrap().unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn equivalence_input_errors() {
        let a = PosRep::trivial(arc(cyclic(2)), 2);
        let b = PosRep::trivial(arc(cyclic(3)), 2);
        assert_eq!(order_equivalent(&a, &b), Err(Error::GroupMismatch));
        assert_eq!(linear_equivalent(&a, &b), Err(Error::GroupMismatch));
        let c = PosRep::trivial(arc(cyclic(2)), 3);
        assert_eq!(order_equivalent(&a, &c).unwrap(), None);
        assert!(!linear_equivalent(&a, &c).unwrap());
    }

    #[test]
    fn character_examples() {
        let p1 = klein_rep("(1 3)(2 4)");
        let g = p1.group();
        let s = g
            .index_of(&Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap())
            .unwrap();
        assert_eq!(character(&p1).values[s], 2);
        assert_eq!(character(&p1).values[0], 6);
        let reg = PosRep::regular(arc(dihedral(4)));
        let chi = character(&reg);
        assert_eq!(chi.values[0], 8);
        assert!(chi.values[1..].iter().all(|&v| v == 0));
    }

    #[test]
    fn character_equals_matrix_trace() {
        let rho = swap_rep();
        for (s, a) in rho.assignment().iter().enumerate() {
            let tr = a.to_matrix().trace().as_rational().unwrap();
            assert_eq!(
                tr,
                num_rational::BigRational::from_integer(character(&rho).values[s].into())
            );
        }
    }

    #[test]
    fn order_dual_examples() {
        let dims = |g: Arc<PermGroup>| -> Vec<usize> {
            order_dual(&g).iter().map(|e| e.rep.degree()).collect()
        };
        assert_eq!(dims(arc(symmetric(3))), vec![6, 3, 2, 1]);
        assert_eq!(dims(arc(cyclic(1))), vec![1]);
        assert_eq!(dims(arc(cyclic(4))), vec![4, 2, 1]);
    }

    #[test]
    fn dedekind_examples() {
        let k4 = arc(klein4());
        assert!(dedekind_check(&k4));
        let r = verify_dedekind_correspondence(&k4);
        assert!(r.characters_distinct && r.normal_character_formula && r.linear_implies_order);
        assert_eq!(order_dual(&k4).len(), 5);

        assert!(!dedekind_check(&symmetric(3).group().unwrap()));

        let q8 = arc(quaternion8());
        assert!(dedekind_check(&q8));
        let r = verify_dedekind_correspondence(&q8);
        assert!(r.characters_distinct && r.normal_character_formula);
    }
}
