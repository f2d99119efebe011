//! Finite permutation groups, fully materialized.
//!
//! A [`PermGroup`] stores every element in lexicographic order of the image
//! arrays, so element indices are stable handles: index 0 is always the
//! identity. Subgroups are sorted sets of element indices into the parent.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default enumeration cap (7!).
pub const DEFAULT_CAP: usize = 5040;

/// Multiplication tables are cached only up to this many elements.
const TABLE_LIMIT: usize = 1024;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
    lattice: OnceLock<SubgroupLattice>,
}

impl PermGroup {
    /// Closes `generators` under composition. Elements come out in
    /// lexicographic order of their image arrays.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose_unchecked(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted_elements(degree, generators, elements))
    }

    /// `elements` must be a sorted, closed set of permutations.
    fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let order = elements.len();
        let table = (order <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose_unchecked(b)] as u32);
                }
            }
            t
        });
        PermGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            table,
            lattice: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `r s r⁻¹`
    pub fn conjugate(&self, r: usize, s: usize) -> usize {
        self.mul(self.mul(r, s), self.inv(r))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![Self::IDENTITY],
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        seen[Self::IDENTITY] = true;
        let mut members = vec![Self::IDENTITY];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            k += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    /// The subgroup generated by explicit permutations of this group's degree.
    pub fn subgroup_from_permutations(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated_by(&idx))
    }

    fn lattice(&self) -> &SubgroupLattice {
        self.lattice.get_or_init(|| SubgroupLattice::build(self))
    }

    /// Every subgroup exactly once, sorted by (order, member list).
    pub fn all_subgroups(&self) -> &[Subgroup] {
        &self.lattice().subgroups
    }

    /// Conjugacy classes of subgroups as lists of indices into
    /// [`Self::all_subgroups`]. The first entry of each class is its
    /// canonically least member; classes are ordered by that member.
    pub fn conjugacy_classes_of_subgroups(&self) -> &[Vec<usize>] {
        &self.lattice().classes
    }

    /// Position of `h` in [`Self::all_subgroups`].
    pub fn subgroup_id(&self, h: &Subgroup) -> Option<usize> {
        self.lattice().lookup.get(&h.members).copied()
    }

    /// Index of the conjugacy class containing `h`.
    pub fn class_of(&self, h: &Subgroup) -> Option<usize> {
        self.subgroup_id(h).map(|id| self.lattice().class_of[id])
    }

    /// Canonical representative of conjugacy class `class`.
    pub fn class_representative(&self, class: usize) -> &Subgroup {
        let lat = self.lattice();
        &lat.subgroups[lat.classes[class][0]]
    }

    /// An element `r` with `r h1 r⁻¹ = h2`, found by exhaustive search.
    pub fn conjugating_element(&self, h1: &Subgroup, h2: &Subgroup) -> Option<usize> {
        if h1.order() != h2.order() {
            return None;
        }
        (0..self.order()).find(|&r| h1.conjugate_by(self, r) == *h2)
    }

    pub fn are_conjugate(&self, h1: &Subgroup, h2: &Subgroup) -> bool {
        self.conjugating_element(h1, h2).is_some()
    }

    /// Left cosets `rH`; representatives are the least element of each coset,
    /// so the identity coset comes first.
    pub fn coset_space(&self, h: &Subgroup) -> Result<CosetSpace> {
        h.validate(self)?;
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut representatives = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for &t in &h.members {
                coset_of[self.mul(x, t)] = c;
            }
        }
        Ok(CosetSpace {
            representatives,
            coset_of,
        })
    }

    /// True iff every subgroup is normal.
    pub fn is_dedekind(&self) -> bool {
        self.conjugacy_classes_of_subgroups()
            .iter()
            .all(|c| c.len() == 1)
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            inverses: self.inverses.clone(),
            table: self.table.clone(),
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Left coset decomposition of a group by a subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    /// Least element of each coset; `representatives[0]` is the identity.
    pub representatives: Vec<usize>,
    /// Element index -> coset index.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// A subgroup given by the sorted indices of its members in the parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks closure under composition and inverses.
    pub fn from_members(g: &PermGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let h = Subgroup { members };
        h.validate(g)?;
        Ok(h)
    }

    fn validate(&self, g: &PermGroup) -> Result<()> {
        if self.members.first() != Some(&PermGroup::IDENTITY)
            || self.members.iter().any(|&x| x >= g.order())
        {
            return Err(Error::NotASubgroup);
        }
        for &a in &self.members {
            if !self.contains(g.inv(a)) {
                return Err(Error::NotASubgroup);
            }
            for &b in &self.members {
                if !self.contains(g.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// `r H r⁻¹`
    pub fn conjugate_by(&self, g: &PermGroup, r: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&s| g.conjugate(r, s)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn is_normal(&self, g: &PermGroup) -> bool {
        (0..g.order()).all(|r| self.members.iter().all(|&s| self.contains(g.conjugate(r, s))))
    }

    /// Canonical generating set: scan members in order, keeping each one not
    /// already in the span of those kept.
    pub fn generators(&self, g: &PermGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = g.trivial_subgroup();
        for &x in &self.members {
            if !span.contains(x) {
                gens.push(x);
                span = g.subgroup_generated_by(&gens);
                if span.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Materializes this subgroup as a group in its own right. Element `k` of
    /// the result is parent element `members()[k]`.
    pub fn to_group(&self, g: &PermGroup) -> PermGroup {
        let generators = self
            .generators(g)
            .into_iter()
            .map(|i| g.element(i).clone())
            .collect();
        let elements = self.members.iter().map(|&i| g.element(i).clone()).collect();
        PermGroup::from_sorted_elements(g.degree(), generators, elements)
    }

    /// Re-indexes `self` (a subgroup of the parent) as a subgroup of
    /// `outer.to_group(parent)`. `None` unless `self ≤ outer`.
    pub fn relative_to(&self, outer: &Subgroup) -> Option<Subgroup> {
        let members = self
            .members
            .iter()
            .map(|x| outer.members.binary_search(x).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Subgroup { members })
    }

    /// Inverse of [`Self::relative_to`]: lifts a subgroup of
    /// `outer.to_group(parent)` back to parent indices.
    pub fn lift_from(&self, outer: &Subgroup) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&k| outer.members[k]).collect();
        members.sort_unstable();
        Subgroup { members }
    }
}

struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    lookup: HashMap<Vec<usize>, usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Clone for SubgroupLattice {
    fn clone(&self) -> Self {
        SubgroupLattice {
            subgroups: self.subgroups.clone(),
            lookup: self.lookup.clone(),
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
        }
    }
}

impl SubgroupLattice {
    /// Layered closure: start from the cyclic subgroups and keep joining known
    /// subgroups with cyclic ones until nothing new appears.
    fn build(g: &PermGroup) -> Self {
        let mut known: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let mut cyclic_gens = Vec::new();
        for x in 0..g.order() {
            let c = g.subgroup_generated_by(&[x]);
            known.entry(c.members).or_insert_with(|| {
                cyclic_gens.push(x);
                if x == 0 { vec![] } else { vec![x] }
            });
        }

        let mut frontier: Vec<(Vec<usize>, Vec<usize>)> =
            known.iter().map(|(m, gens)| (m.clone(), gens.clone())).collect();
        frontier.sort();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (members, gens) in &frontier {
                let s = Subgroup {
                    members: members.clone(),
                };
                for &c in &cyclic_gens {
                    if s.contains(c) {
                        continue;
                    }
                    let mut joined_gens = gens.clone();
                    joined_gens.push(c);
                    let j = g.subgroup_generated_by(&joined_gens);
                    if !known.contains_key(&j.members) {
                        known.insert(j.members.clone(), joined_gens.clone());
                        next.push((j.members, joined_gens));
                    }
                }
            }
            next.sort();
            frontier = next;
        }

        let mut subgroups: Vec<Subgroup> = known
            .into_keys()
            .map(|members| Subgroup { members })
            .collect();
        subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        let lookup: HashMap<Vec<usize>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), i))
            .collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut class = Vec::new();
            for r in 0..g.order() {
                let j = lookup[&subgroups[i].conjugate_by(g, r).members];
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    class.push(j);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }

        SubgroupLattice {
            subgroups,
            lookup,
            classes,
            class_of,
        }
    }
}

/// Generator lists for the standard small groups.
pub mod named {
    use super::*;

    /// A degree together with a list of generators.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct Generators {
        pub degree: usize,
        pub generators: Vec<Permutation>,
    }

    impl Generators {
        pub fn build(self, cap: usize) -> Result<PermGroup> {
            PermGroup::generate(self.degree, self.generators, cap)
        }

        pub fn group(self) -> Result<PermGroup> {
            self.build(DEFAULT_CAP)
        }
    }

    fn cycle(n: usize) -> Permutation {
        Permutation::new((0..n).map(|i| (i + 1) % n).collect()).expect("n-cycle")
    }

    /// ℤ/n acting regularly on n points by an n-cycle.
    pub fn cyclic(n: usize) -> Generators {
        let n = n.max(1);
        let generators = if n > 1 { vec![cycle(n)] } else { vec![] };
        Generators {
            degree: n,
            generators,
        }
    }

    /// The dihedral group of order 2n acting on the vertices of an n-gon
    /// (n ≥ 3). For n = 2 this is the Klein four group on 4 points.
    pub fn dihedral(n: usize) -> Generators {
        if n <= 2 {
            return klein4();
        }
        let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
        Generators {
            degree: n,
            generators: vec![cycle(n), reflection],
        }
    }

    /// Sₙ in its natural action.
    pub fn symmetric(n: usize) -> Generators {
        let n = n.max(1);
        let mut generators = Vec::new();
        if n >= 2 {
            generators.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("transposition"));
        }
        if n >= 3 {
            generators.push(cycle(n));
        }
        Generators {
            degree: n,
            generators,
        }
    }

    /// Aₙ generated by the 3-cycles (i, i+1, i+2).
    pub fn alternating(n: usize) -> Generators {
        let n = n.max(1);
        let generators = (0..n.saturating_sub(2))
            .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]]).expect("3-cycle"))
            .collect();
        Generators {
            degree: n,
            generators,
        }
    }

    /// ℤ/2 × ℤ/2 as {(12)(34), (13)(24)} on 4 points.
    pub fn klein4() -> Generators {
        Generators {
            degree: 4,
            generators: vec![
                Permutation::new(vec![1, 0, 3, 2]).expect("(12)(34)"),
                Permutation::new(vec![2, 3, 0, 1]).expect("(13)(24)"),
            ],
        }
    }

    /// The quaternion group Q₈ in its regular action on 8 points, generated by
    /// left multiplication with i and j. Points encode ±1, ±i, ±j, ±k as
    /// `2·unit + sign`.
    pub fn quaternion8() -> Generators {
        // unit product table over {1, i, j, k}: (sign, unit)
        const TABLE: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let left_mul = |unit: usize| {
            let images = (0..8)
                .map(|p| {
                    let (u, neg) = (p / 2, p % 2 == 1);
                    let (s, v) = TABLE[unit][u];
                    2 * v + usize::from(s ^ neg)
                })
                .collect();
            Permutation::new(images).expect("quaternion action")
        };
        Generators {
            degree: 8,
            generators: vec![left_mul(1), left_mul(2)],
        }
    }

    /// Direct product acting on the disjoint union of the factors' points.
    pub fn direct_product(factors: &[Generators]) -> Generators {
        let degree = factors.iter().map(|f| f.degree).sum();
        let mut generators = Vec::new();
        let mut offset = 0;
        for f in factors {
            generators.extend(f.generators.iter().map(|g| g.embed(offset, degree)));
            offset += f.degree;
        }
        Generators { degree, generators }
    }
}
