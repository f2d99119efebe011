//! Lattice automorphisms of ℝⁿ and positive representations.
//!
//! Every lattice automorphism of ℝⁿ is uniquely `mσ`: a permutation operator
//! `σ: eᵢ ↦ e_σ(i)` followed by a strictly positive diagonal `m`. Such pairs
//! form the semidirect product `(ℝ₊)ⁿ ⋊ Sₙ` with
//!
//! ```text
//! (m₁, σ₁)(m₂, σ₂) = (m₁·σ₁(m₂), σ₁σ₂),   σ(m)ᵢ = m_{σ⁻¹(i)}.
//! ```
//!
//! All shifts of multipliers in this crate go through [`Multiplier::shifted`],
//! which implements exactly `σ(m)ᵢ = m_{σ⁻¹(i)}`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::ExactPositive;
use crate::group::PermGroup;
use crate::gspace::GSpace;
use crate::matrix::{DenseMatrix, RadicalSum};
use crate::perm::Permutation;

/// A strictly positive diagonal operator on ℝⁿ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiplier(Vec<ExactPositive>);

impl Multiplier {
    pub fn new(entries: Vec<ExactPositive>) -> Self {
        Multiplier(entries)
    }

    pub fn ones(n: usize) -> Self {
        Multiplier(vec![ExactPositive::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[ExactPositive] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> &ExactPositive {
        &self.0[i]
    }

    pub fn is_ones(&self) -> bool {
        self.0.iter().all(ExactPositive::is_one)
    }

    /// `σ(m)` with `σ(m)ᵢ = m_{σ⁻¹(i)}`, i.e. entry `i` moves to slot `σ(i)`.
    pub fn shifted(&self, sigma: &Permutation) -> Multiplier {
        let mut out = vec![ExactPositive::one(); self.len()];
        for (i, x) in self.0.iter().enumerate() {
            out[sigma.apply(i)] = x.clone();
        }
        Multiplier(out)
    }

    pub fn mul(&self, other: &Multiplier) -> Multiplier {
        Multiplier(self.0.iter().zip(&other.0).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn div(&self, other: &Multiplier) -> Multiplier {
        Multiplier(self.0.iter().zip(&other.0).map(|(a, b)| a.div(b)).collect())
    }

    pub fn inv(&self) -> Multiplier {
        Multiplier(self.0.iter().map(ExactPositive::inv).collect())
    }
}

impl fmt::Debug for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// An element `(m, σ)` of `Aut⁺(ℝⁿ)`, acting by `eᵢ ↦ m_σ(i) e_σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PosAut {
    m: Multiplier,
    sigma: Permutation,
}

impl PosAut {
    pub fn new(m: Multiplier, sigma: Permutation) -> Result<Self> {
        if m.len() != sigma.degree() {
            return Err(Error::DegreeMismatch {
                left: m.len(),
                right: sigma.degree(),
            });
        }
        Ok(PosAut { m, sigma })
    }

    pub fn identity(n: usize) -> Self {
        PosAut {
            m: Multiplier::ones(n),
            sigma: Permutation::identity(n),
        }
    }

    pub fn from_permutation(sigma: Permutation) -> Self {
        PosAut {
            m: Multiplier::ones(sigma.degree()),
            sigma,
        }
    }

    pub fn from_multiplier(m: Multiplier) -> Self {
        let n = m.len();
        PosAut {
            m,
            sigma: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    pub fn multiplier(&self) -> &Multiplier {
        &self.m
    }

    /// The canonical projection `p(m, σ) = σ`.
    pub fn permutation(&self) -> &Permutation {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.m.is_ones()
    }

    /// Semidirect product `(m₁σ₁(m₂), σ₁σ₂)`.
    pub fn mul(&self, other: &PosAut) -> Result<PosAut> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PosAut) -> PosAut {
        PosAut {
            m: self.m.mul(&other.m.shifted(&self.sigma)),
            sigma: self.sigma.compose_unchecked(&other.sigma),
        }
    }

    /// `(σ⁻¹(m⁻¹), σ⁻¹)`
    pub fn inverse(&self) -> PosAut {
        let inv = self.sigma.inverse();
        PosAut {
            m: self.m.inv().shifted(&inv),
            sigma: inv,
        }
    }

    /// `(mσ v)_j = m_j · v_{σ⁻¹(j)}`.
    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<ScaledValue>> {
        if v.len() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: v.len(),
            });
        }
        let inv = self.sigma.inverse();
        Ok((0..self.degree())
            .map(|j| ScaledValue {
                coeff: v[inv.apply(j)].clone(),
                scale: self.m.entry(j).clone(),
            })
            .collect())
    }

    /// Generalized permutation matrix: column `i` holds `m_σ(i)` in row `σ(i)`.
    pub fn to_matrix(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zero(self.degree());
        for i in 0..self.degree() {
            let row = self.sigma.apply(i);
            out.set(row, i, RadicalSum::from(self.m.entry(row).clone()));
        }
        out
    }
}

impl fmt::Debug for PosAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.m, self.sigma)
    }
}

/// A coordinate of `T v`: a rational times an exact positive scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledValue {
    pub coeff: BigRational,
    pub scale: ExactPositive,
}

impl ScaledValue {
    /// The exact value when the scale is rational.
    pub fn exact(&self) -> Option<BigRational> {
        self.scale.to_rational().map(|s| s * &self.coeff)
    }

    pub fn is_exact(&self) -> bool {
        self.scale.is_rational()
    }

    /// Decimal approximation with an absolute error bound covering the
    /// floating point evaluation.
    pub fn approx(&self) -> (f64, f64) {
        if let Some(q) = self.exact() {
            let v = q.to_f64().unwrap_or(f64::NAN);
            return (v, v.abs() * f64::EPSILON);
        }
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        let v = c * self.scale.to_f64();
        let terms = self.scale.factors().len() as f64;
        let bound = v.abs() * (4.0 * terms + 4.0) * f64::EPSILON * (1.0 + self.scale.ln().abs());
        (v, bound)
    }

    pub fn is_negative(&self) -> bool {
        self.coeff.is_negative()
    }
}

/// A homomorphism `G -> Aut⁺(ℝⁿ)`, materialized on every group element.
#[derive(Clone)]
pub struct PosRep {
    group: Arc<PermGroup>,
    degree: usize,
    assignment: Vec<PosAut>,
}

impl PosRep {
    /// Extends an assignment on the group's generators (in generator order)
    /// to all elements along breadth-first words, then checks the result is a
    /// homomorphism.
    pub fn from_generators(
        group: Arc<PermGroup>,
        degree: usize,
        images: Vec<PosAut>,
    ) -> Result<Self> {
        let gens = group.generator_indices();
        if gens.len() != images.len() {
            return Err(Error::GeneratorCount {
                expected: gens.len(),
                got: images.len(),
            });
        }
        for a in &images {
            if a.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: a.degree(),
                });
            }
        }
        let mut assignment: Vec<Option<PosAut>> = vec![None; group.order()];
        assignment[PermGroup::IDENTITY] = Some(PosAut::identity(degree));
        let mut queue = VecDeque::from([PermGroup::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(g, x);
                if assignment[y].is_none() {
                    let ax = assignment[x].as_ref().expect("visited");
                    assignment[y] = Some(images[k].mul_unchecked(ax));
                    queue.push_back(y);
                }
            }
        }
        let assignment = assignment
            .into_iter()
            .map(|a| a.expect("generators generate the group"))
            .collect();
        PosRep::from_assignment(group, degree, assignment)
    }

    /// Wraps a full element-indexed assignment after verifying it.
    ///
    /// Checking `ρ(g·x) = ρ(g)ρ(x)` for every generator `g` and element `x`
    /// (together with `ρ(e) = 1`) proves `ρ(st) = ρ(s)ρ(t)` for all pairs, by
    /// induction on word length of `s`.
    pub fn from_assignment(
        group: Arc<PermGroup>,
        degree: usize,
        assignment: Vec<PosAut>,
    ) -> Result<Self> {
        if assignment.len() != group.order() {
            return Err(Error::Internal("assignment length differs from group order".into()));
        }
        if let Some(a) = assignment.iter().find(|a| a.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: a.degree(),
            });
        }
        let e = PermGroup::IDENTITY;
        if !assignment[e].is_identity() {
            return Err(Error::NotAHomomorphism {
                s: group.element(e).to_string(),
                t: group.element(e).to_string(),
            });
        }
        let rep = PosRep {
            group,
            degree,
            assignment,
        };
        for g in rep.group.generator_indices() {
            for x in 0..rep.group.order() {
                let gx = rep.group.mul(g, x);
                if rep.assignment[gx] != rep.assignment[g].mul_unchecked(&rep.assignment[x]) {
                    return Err(Error::NotAHomomorphism {
                        s: rep.group.element(g).to_string(),
                        t: rep.group.element(x).to_string(),
                    });
                }
            }
        }
        Ok(rep)
    }

    /// Every element acts as the identity on ℝⁿ.
    pub fn trivial(group: Arc<PermGroup>, n: usize) -> Self {
        let assignment = vec![PosAut::identity(n); group.order()];
        PosRep {
            group,
            degree: n,
            assignment,
        }
    }

    /// The permutation representation of a G-space (all multipliers 1).
    pub fn from_gspace(space: &GSpace) -> Self {
        let group = Arc::clone(space.group());
        let assignment = (0..group.order())
            .map(|s| PosAut::from_permutation(space.permutation(s)))
            .collect();
        PosRep {
            group,
            degree: space.points(),
            assignment,
        }
    }

    /// Left regular representation on `{e_s : s ∈ G}`.
    pub fn regular(group: Arc<PermGroup>) -> Self {
        let h = group.trivial_subgroup();
        let space = GSpace::coset_action(Arc::clone(&group), &h).expect("trivial subgroup");
        PosRep::from_gspace(&space)
    }

    /// Permutation representation given by generator images.
    pub fn from_permutations(
        group: Arc<PermGroup>,
        degree: usize,
        images: Vec<Permutation>,
    ) -> Result<Self> {
        let images = images.into_iter().map(PosAut::from_permutation).collect();
        PosRep::from_generators(group, degree, images)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `ρ_s` for the element with index `s`.
    pub fn get(&self, s: usize) -> &PosAut {
        &self.assignment[s]
    }

    pub fn assignment(&self) -> &[PosAut] {
        &self.assignment
    }

    pub fn generator_images(&self) -> Vec<&PosAut> {
        self.group
            .generator_indices()
            .into_iter()
            .map(|g| &self.assignment[g])
            .collect()
    }

    /// `p ∘ ρ` on every element.
    pub fn permutation_part(&self) -> Vec<Permutation> {
        self.assignment.iter().map(|a| a.permutation().clone()).collect()
    }

    /// Coordinates as a G-space under `p ∘ ρ`.
    pub fn coordinate_space(&self) -> GSpace {
        let action = self
            .assignment
            .iter()
            .map(|a| a.permutation().images().to_vec())
            .collect();
        GSpace::new(Arc::clone(&self.group), self.degree.max(1), action)
            .expect("p ∘ ρ is an action")
    }

    pub fn same_group(&self, other: &PosRep) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    /// True iff every multiplier is 1.
    pub fn is_permutation_rep(&self) -> bool {
        self.assignment.iter().all(|a| a.multiplier().is_ones())
    }
}

impl PartialEq for PosRep {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.degree == other.degree && self.assignment == other.assignment
    }
}

impl fmt::Debug for PosRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PosRep")
            .field("group_order", &self.group.order())
            .field("degree", &self.degree)
            .field("generators", &self.generator_images())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use proptest::prelude::*;

    fn ep(s: &str) -> ExactPositive {
        s.parse().unwrap()
    }

    fn mult(xs: &[&str]) -> Multiplier {
        Multiplier::new(xs.iter().map(|s| ep(s)).collect())
    }

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn swap_example() -> PosAut {
        PosAut::new(mult(&["2", "1/2"]), perm(2, "(1 2)")).unwrap()
    }

    #[test]
    fn semidirect_square_is_identity() {
        let a = swap_example();
        let sq = a.mul(&a).unwrap();
        assert!(sq.is_identity());
        assert_eq!(a.to_matrix().mul(&a.to_matrix()), sq.to_matrix());
        assert_eq!(sq.to_matrix(), DenseMatrix::identity(2));
    }

    #[test]
    fn identity_and_inverse_multiplier() {
        let a = swap_example();
        let e = PosAut::identity(2);
        assert_eq!(e.mul(&a).unwrap(), a);
        let m = PosAut::from_multiplier(mult(&["3", "5/7"]));
        let minv = PosAut::from_multiplier(mult(&["1/3", "7/5"]));
        assert!(m.mul(&minv).unwrap().is_identity());
        assert_eq!(m.inverse(), minv);
        assert_eq!(a.inverse(), a);
        assert!(e.inverse().is_identity());
    }

    #[test]
    fn degree_mismatch() {
        assert!(PosAut::identity(2).mul(&PosAut::identity(3)).is_err());
        assert!(PosAut::new(Multiplier::ones(2), Permutation::identity(3)).is_err());
    }

    #[test]
    fn apply_examples() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let id = PosAut::identity(3);
        let out: Vec<_> = id
            .apply(&[q(1), q(2), q(3)])
            .unwrap()
            .iter()
            .map(|v| v.exact().unwrap())
            .collect();
        assert_eq!(out, vec![q(1), q(2), q(3)]);

        let out = swap_example().apply(&[q(1), q(0)]).unwrap();
        assert_eq!(out[0].exact().unwrap(), q(0));
        assert_eq!(out[1].exact().unwrap(), BigRational::new(1.into(), 2.into()));

        let out = PosAut::from_permutation(perm(2, "(1 2)")).apply(&[q(5), q(7)]).unwrap();
        assert_eq!(out[0].exact().unwrap(), q(7));
        assert_eq!(out[1].exact().unwrap(), q(5));

        let irr = PosAut::from_multiplier(mult(&["2^(1/2)"]));
        let v = &irr.apply(&[q(3)]).unwrap()[0];
        assert!(!v.is_exact());
        let (x, err) = v.approx();
        assert!((x - 3.0 * 2f64.sqrt()).abs() <= err.max(1e-15));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let a = PosAut::new(mult(&["2", "3"]), perm(2, "(1 2)")).unwrap();
        let b = PosAut::new(mult(&["5", "1/7"]), perm(2, "(1 2)")).unwrap();
        assert_eq!(a.permutation(), &perm(2, "(1 2)"));
        assert!(PosAut::identity(2).permutation().is_identity());
        assert!(a.mul(&b).unwrap().permutation().is_identity());
    }

    #[test]
    fn build_rep_examples() {
        let z2 = Arc::new(cyclic(2).group().unwrap());
        let rho = PosRep::from_generators(Arc::clone(&z2), 2, vec![swap_example()]).unwrap();
        assert_eq!(rho.degree(), 2);

        let s3 = Arc::new(symmetric(3).group().unwrap());
        let triv = PosRep::from_generators(
            Arc::clone(&s3),
            4,
            vec![PosAut::identity(4), PosAut::identity(4)],
        )
        .unwrap();
        assert!(triv.assignment().iter().all(PosAut::is_identity));

        let bad = PosAut::new(mult(&["2", "1"]), perm(2, "(1 2)")).unwrap();
        // square is (diag(2·1, 1·2), e) = diag(2, 2)
        assert_eq!(bad.mul(&bad).unwrap(), PosAut::from_multiplier(mult(&["2", "2"])));
        let err = PosRep::from_generators(z2, 2, vec![bad]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn build_rep_input_errors() {
        let s3 = Arc::new(symmetric(3).group().unwrap());
        assert!(matches!(
            PosRep::from_generators(Arc::clone(&s3), 2, vec![PosAut::identity(2)]),
            Err(Error::GeneratorCount { expected: 2, got: 1 })
        ));
        assert!(matches!(
            PosRep::from_generators(s3, 2, vec![PosAut::identity(2), PosAut::identity(3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn built_reps_are_homomorphisms_on_all_pairs() {
        let d4 = Arc::new(dihedral(4).group().unwrap());
        let m = mult(&["2", "3", "1/5", "7"]);
        let conj = |p: &Permutation| {
            let mm = PosAut::from_multiplier(m.clone());
            mm.mul(&PosAut::from_permutation(p.clone()))
                .unwrap()
                .mul(&mm.inverse())
                .unwrap()
        };
        let rho = PosRep::from_generators(
            Arc::clone(&d4),
            4,
            d4.generators().iter().map(conj).collect(),
        )
        .unwrap();
        for s in 0..d4.order() {
            for t in 0..d4.order() {
                let lhs = rho.get(d4.mul(s, t));
                let rhs = rho.get(s).mul(rho.get(t)).unwrap();
                assert_eq!(*lhs, rhs);
            }
        }
        let perms = rho.permutation_part();
        for s in 0..d4.order() {
            for t in 0..d4.order() {
                assert_eq!(perms[d4.mul(s, t)], perms[s].compose(&perms[t]).unwrap());
            }
        }
    }

    fn arb_posaut(n: usize) -> impl Strategy<Value = PosAut> {
        let entries = prop::collection::vec(
            (prop::sample::select(vec![2u64, 3, 5]), -2i64..=2),
            n,
        );
        (entries, Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(entries, images)| {
                let m = entries
                    .into_iter()
                    .map(|(p, e)| ExactPositive::prime_power(p, e.into()))
                    .collect();
                PosAut::new(Multiplier::new(m), Permutation::new(images).unwrap()).unwrap()
            })
    }

    fn arb_pair() -> impl Strategy<Value = (PosAut, PosAut)> {
        (1usize..=6).prop_flat_map(|n| (arb_posaut(n), arb_posaut(n)))
    }

    proptest! {
        #[test]
        fn semidirect_law_matches_matrix_product((a, b) in arb_pair()) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.to_matrix(), a.to_matrix().mul(&b.to_matrix()));
            prop_assert_eq!(ab.permutation(), &a.permutation().compose(b.permutation()).unwrap());
        }

        #[test]
        fn inverse_is_two_sided((a, _b) in arb_pair()) {
            prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
            prop_assert_eq!(
                a.to_matrix().mul(&a.inverse().to_matrix()),
                DenseMatrix::identity(a.degree())
            );
        }
    }
}
