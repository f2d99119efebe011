//! End-to-end checks of the worked examples and property suites, plus the
//! catalog of small groups they run over.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Exponent, ExactPositive};
use crate::group::named::{self, Generators};
use crate::group::{PermGroup, Subgroup};
use crate::gspace::GSpace;
use crate::imprimitivity::{
    all_block_systems, block_systems_by_search, covariance_check, induction_from_imprimitivity,
    is_primitive, primitive_chain, recompose_chain, BlockConvention,
};
use crate::induction::{frobenius_table, induce, multiplicity, restrict, stages_check};
use crate::matrix::RadicalSum;
use crate::perm::Permutation;
use crate::posrep::{Multiplier, PosAut, PosRep};
use crate::structure::{
    self, character, decompose, is_intertwiner, is_irreducible, linear_equivalent, order_dual,
    order_equivalent, verify_dedekind_correspondence, Factorization,
};

/// A named group from the test catalog.
#[derive(Debug, Clone)]
pub struct CatalogGroup {
    pub name: String,
    pub group: Arc<PermGroup>,
}

fn catalog_generators() -> Vec<(String, Generators)> {
    use named::*;
    let mut out: Vec<(String, Generators)> = Vec::new();
    for n in 1..=24 {
        out.push((format!("cyclic {n}"), cyclic(n)));
    }
    for n in 3..=12 {
        out.push((format!("dihedral {n}"), dihedral(n)));
    }
    out.push(("klein4".into(), klein4()));
    out.push(("quaternion8".into(), quaternion8()));
    out.push(("alternating 4".into(), alternating(4)));
    out.push(("symmetric 4".into(), symmetric(4)));
    let c = cyclic;
    for (name, factors) in [
        ("cyclic 2 x cyclic 4", vec![c(2), c(4)]),
        ("cyclic 2 x cyclic 2 x cyclic 2", vec![c(2), c(2), c(2)]),
        ("cyclic 2 x cyclic 6", vec![c(2), c(6)]),
        ("cyclic 3 x cyclic 3", vec![c(3), c(3)]),
        ("cyclic 2 x cyclic 8", vec![c(2), c(8)]),
        ("cyclic 4 x cyclic 4", vec![c(4), c(4)]),
        ("cyclic 2 x cyclic 2 x cyclic 4", vec![c(2), c(2), c(4)]),
        ("cyclic 3 x symmetric 3", vec![c(3), symmetric(3)]),
        ("cyclic 2 x alternating 4", vec![c(2), alternating(4)]),
        ("cyclic 2 x quaternion8", vec![c(2), quaternion8()]),
        ("cyclic 2 x dihedral 4", vec![c(2), dihedral(4)]),
        ("cyclic 2 x dihedral 6", vec![c(2), dihedral(6)]),
    ] {
        out.push((name.into(), direct_product(&factors)));
    }
    out
}

/// Catalog groups of order at most `max_order`, ordered by (order, name).
pub fn small_groups(max_order: usize) -> Vec<CatalogGroup> {
    let mut out: Vec<CatalogGroup> = catalog_generators()
        .into_iter()
        .filter_map(|(name, gens)| {
            let group = gens.build(max_order.max(1)).ok()?;
            Some(CatalogGroup {
                name,
                group: Arc::new(group),
            })
        })
        .collect();
    out.sort_by(|a, b| a.group.order().cmp(&b.group.order()).then(a.name.cmp(&b.name)));
    out
}

/// Subgroup conjugacy classes by exhaustive subset search; needs `|G| ≤ 16`.
pub fn brute_force_subgroup_classes(g: &PermGroup) -> usize {
    let n = g.order();
    assert!(n <= 16, "brute force limited to order 16");
    let elems = g.elements();
    let mul = |a: usize, b: usize| {
        g.index_of(&elems[a].compose(&elems[b]).expect("same degree"))
            .expect("closed")
    };
    let mut subgroups: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let has = |x: usize| mask >> x & 1 == 1;
        let closed = (0..n)
            .filter(|&a| has(a))
            .all(|a| (0..n).filter(|&b| has(b)).all(|b| has(mul(a, b))));
        if closed {
            subgroups.push(mask);
        }
    }
    let inverse = |a: usize| g.index_of(&elems[a].inverse()).expect("closed");
    let mut classes: BTreeSet<u32> = BTreeSet::new();
    for &h in &subgroups {
        let least = (0..n)
            .map(|r| {
                (0..n)
                    .filter(|&x| h >> x & 1 == 1)
                    .fold(0u32, |acc, x| acc | 1 << mul(mul(r, x), inverse(r)))
            })
            .min()
            .expect("nonempty group");
        classes.insert(least);
    }
    classes.len()
}

/// `Ind_H^G θ` from its definition: functions `f: G → F` with
/// `f(ut) = θ_{t⁻¹} f(u)`, acted on by `(ρ_s f)(u) = f(s⁻¹u)`, written in the
/// basis `f_{c,j}` supported on coset `c` with `f_{c,j}(r_c) = e_j`.
/// Returns `None` when the translated functions leave the space.
pub fn induced_by_functions(theta: &PosRep, h: &Subgroup, g: &PermGroup) -> Result<Option<Vec<PosAut>>> {
    let cosets = g.coset_space(h)?;
    let d = theta.degree();
    let k = cosets.len();
    let member = |x: usize| h.members().binary_search(&x).ok();
    let act = |t: usize, v: &[RadicalSum]| -> Vec<RadicalSum> {
        let a = theta.get(t);
        let mut out = vec![RadicalSum::zero(); d];
        for (i, x) in v.iter().enumerate() {
            let j = a.permutation().apply(i);
            out[j] = RadicalSum::from(a.multiplier().entry(j).clone()).mul(x);
        }
        out
    };
    let basis = |c: usize, j: usize| -> Vec<Vec<RadicalSum>> {
        let r = cosets.representatives[c];
        (0..g.order())
            .map(|u| match member(g.mul(g.inv(r), u)) {
                Some(t) => {
                    let mut e = vec![RadicalSum::zero(); d];
                    e[j] = RadicalSum::one();
                    act(member(g.inv(h.members()[t])).expect("H is closed"), &e)
                }
                None => vec![RadicalSum::zero(); d],
            })
            .collect()
    };
    let in_space = |f: &[Vec<RadicalSum>]| {
        (0..g.order()).all(|u| {
            h.members().iter().all(|&tg| {
                let ti = member(g.inv(tg)).expect("H is closed");
                f[g.mul(u, tg)] == act(ti, &f[u])
            })
        })
    };

    let mut out = Vec::with_capacity(g.order());
    for s in 0..g.order() {
        let s_inv = g.inv(s);
        let mut images = vec![0; k * d];
        let mut mult = vec![None; k * d];
        for c in 0..k {
            for j in 0..d {
                let f = basis(c, j);
                let moved: Vec<Vec<RadicalSum>> =
                    (0..g.order()).map(|u| f[g.mul(s_inv, u)].clone()).collect();
                if !in_space(&moved) {
                    return Ok(None);
                }
                // coordinates: value at each coset representative
                let mut support = Vec::new();
                for c2 in 0..k {
                    let value = &moved[cosets.representatives[c2]];
                    for (k2, x) in value.iter().enumerate() {
                        if !x.is_zero() {
                            support.push((c2 * d + k2, x.clone()));
                        }
                    }
                }
                let [(target, coeff)] = support.as_slice() else {
                    return Ok(None);
                };
                let Some(q) = coeff_to_positive(coeff) else {
                    return Ok(None);
                };
                images[c * d + j] = *target;
                mult[*target] = Some(q);
            }
        }
        let Some(m) = mult.into_iter().collect::<Option<Vec<_>>>() else {
            return Ok(None);
        };
        out.push(PosAut::new(Multiplier::new(m), Permutation::new(images)?)?);
    }
    Ok(Some(out))
}

fn coeff_to_positive(x: &RadicalSum) -> Option<ExactPositive> {
    // single positive term c·y with c rational
    let (y, c) = x.single_term()?;
    let (num, den) = (c.numer(), c.denom());
    use num_traits::{Signed, ToPrimitive};
    if !c.is_positive() {
        return None;
    }
    let c = ExactPositive::from_ratio(num.to_u64()?, den.to_u64()?).ok()?;
    Some(c.mul(y))
}

/// `ρ_s = m π_s m⁻¹` assembled through semidirect products.
pub fn conjugate_rep(pi: &PosRep, m: &Multiplier) -> Result<PosRep> {
    let dm = PosAut::from_multiplier(m.clone());
    let dm_inv = PosAut::from_multiplier(m.inv());
    let assignment = pi
        .assignment()
        .iter()
        .map(|p| dm.mul(p)?.mul(&dm_inv))
        .collect::<Result<Vec<_>>>()?;
    PosRep::from_assignment(Arc::clone(pi.group()), pi.degree(), assignment)
}

/// A random permutation representation of degree `1..=max_degree`: a direct
/// sum of coset actions with coordinates shuffled.
pub fn random_permutation_rep(g: &Arc<PermGroup>, max_degree: usize, rng: &mut impl Rng) -> PosRep {
    let target = rng.gen_range(1..=max_degree);
    let subgroups = g.all_subgroups();
    let mut perms: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut degree = 0;
    while degree < target {
        let fitting: Vec<&Subgroup> = subgroups
            .iter()
            .filter(|h| g.order() / h.order() <= target - degree)
            .collect();
        let h = fitting.choose(rng).expect("G itself always fits");
        let space = GSpace::coset_action(Arc::clone(g), h).expect("subgroup");
        for (s, p) in perms.iter_mut().enumerate() {
            p.extend((0..space.points()).map(|x| space.act(s, x) + degree));
        }
        degree += space.points();
    }
    let mut relabel: Vec<usize> = (0..degree).collect();
    relabel.shuffle(rng);
    let relabel = Permutation::new(relabel).expect("shuffle");
    let relabel_inv = relabel.inverse();
    let assignment = perms
        .into_iter()
        .map(|p| {
            let p = Permutation::new(p).expect("coset action");
            let p = relabel.compose(&p).and_then(|x| x.compose(&relabel_inv)).expect("degree");
            PosAut::from_permutation(p)
        })
        .collect();
    PosRep::from_assignment(Arc::clone(g), degree, assignment).expect("permutation rep")
}

/// Entries `2^a 3^b 5^c` with exponents in `[-2, 2]`.
pub fn random_multiplier(n: usize, rng: &mut impl Rng) -> Multiplier {
    Multiplier::new(
        (0..n)
            .map(|_| {
                [2u64, 3, 5].iter().fold(ExactPositive::one(), |acc, &p| {
                    let e = rng.gen_range(-2i64..=2);
                    acc.mul(&ExactPositive::prime_power(p, Exponent::from_integer(e)))
                })
            })
            .collect(),
    )
}

pub type FactorFn = fn(&PosRep) -> Result<Factorization>;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Run only checks whose key or number matches.
    pub filter: Option<String>,
    pub seed: u64,
    pub round_trips: usize,
    pub factor: FactorFn,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            filter: None,
            seed: 0x5eed,
            round_trips: 500,
            factor: structure::factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: u32,
    pub key: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

type Outcome = std::result::Result<String, String>;

pub const CHECKS: [(u32, &str, &str); 7] = [
    (1, "character", "character counterexample for the Klein four group"),
    (2, "frobenius", "Frobenius reciprocity multiplicity counterexamples"),
    (3, "factor", "factorization round trip"),
    (4, "order-dual", "order dual of groups of order at most 12"),
    (5, "induction", "induction suite"),
    (6, "imprimitivity", "imprimitivity suite"),
    (7, "dedekind", "Dedekind groups"),
];

pub fn matches_filter(filter: Option<&str>, id: u32, key: &str) -> bool {
    match filter {
        None => true,
        Some(f) => f
            .split(',')
            .map(str::trim)
            .any(|f| f == key || f == id.to_string()),
    }
}

pub fn run(options: &VerifyOptions) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .filter(|(id, key, _)| matches_filter(options.filter.as_deref(), *id, key))
        .map(|&(id, key, title)| {
            let start = Instant::now();
            let outcome = match id {
                1 => check_character(),
                2 => check_frobenius(),
                3 => check_factor_round_trip(options.seed, options.round_trips, options.factor),
                4 => check_order_dual(),
                5 => check_induction(),
                6 => check_imprimitivity(),
                _ => check_dedekind(),
            };
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                id,
                key: key.into(),
                title: title.into(),
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// π¹ and π² on ℝ⁶ for `{(12)(34), (13)(24)}`.
pub fn klein_pair() -> Result<(PosRep, PosRep)> {
    let g = Arc::new(named::klein4().group()?);
    let p = |s: &str| Permutation::parse_cycles(6, s);
    let a = p("(1 2)(3 4)")?;
    let p1 = PosRep::from_permutations(Arc::clone(&g), 6, vec![a.clone(), p("(1 3)(2 4)")?])?;
    let p2 = PosRep::from_permutations(g, 6, vec![a, p("(1 2)(5 6)")?])?;
    Ok((p1, p2))
}

pub fn check_character() -> Outcome {
    let (p1, p2) = klein_pair().map_err(err)?;
    let (c1, c2) = (character(&p1), character(&p2));
    ensure(c1 == c2, || format!("characters differ: {:?} vs {:?}", c1.values, c2.values))?;
    ensure(linear_equivalent(&p1, &p2).map_err(err)?, || "not linearly equivalent".into())?;
    ensure(order_equivalent(&p1, &p2).map_err(err)?.is_none(), || {
        "reported order equivalent".into()
    })?;
    let (d1, d2) = (decompose(&p1).dimensions(), decompose(&p2).dimensions());
    ensure(d1 == [4, 1, 1] && d2 == [2, 2, 2], || {
        format!("dimensions {d1:?} and {d2:?}")
    })?;
    Ok(format!(
        "character {:?}; dimensions {d1:?} vs {d2:?}; linear yes, order no",
        c1.values
    ))
}

pub fn check_frobenius() -> Outcome {
    let mut notes = Vec::new();
    for entry in small_groups(12).iter().filter(|c| c.group.order() > 1) {
        let g = &entry.group;
        let t = frobenius_table(g, &g.trivial_subgroup()).map_err(err)?;
        let row_ok = (0..t.cols).all(|c| t.cell(0, c).restricted == t.cell(0, c).rho_degree);
        let ind_ok = t.cells.iter().all(|c| c.induced <= 1)
            && t.cells.iter().filter(|c| c.induced == 1).count() == 1;
        ensure(t.rows == 1 && row_ok && ind_ok, || {
            format!("trivial subgroup table wrong for {}", entry.name)
        })?;
    }
    notes.push("H = {e}: m(θ, ρ|_H) = dim ρ on every group of order 2..12".to_string());

    let g = Arc::new(named::cyclic(4).group().map_err(err)?);
    let h = g
        .all_subgroups()
        .iter()
        .find(|s| s.order() == 2)
        .cloned()
        .ok_or("no subgroup of order 2")?;
    let theta = PosRep::regular(Arc::new(h.to_group(&g)));
    let rho = PosRep::regular(Arc::clone(&g));
    let ind = induce(&theta, &h, &g).map_err(err)?.rep;
    let left = multiplicity(&rho, &ind).map_err(err)?;
    let right = multiplicity(&theta, &restrict(&rho, &h).map_err(err)?).map_err(err)?;
    ensure((left, right) == (1, 2), || format!("Z/4 cell is ({left}, {right})"))?;
    ensure(order_equivalent(&ind, &rho).map_err(err)?.is_some(), || {
        "Ind θ is not the regular representation of Z/4".into()
    })?;
    let t = frobenius_table(&g, &h).map_err(err)?;
    let cell = t
        .cells
        .iter()
        .find(|c| c.theta_degree == 2 && c.rho_degree == 4)
        .ok_or("missing cell")?;
    ensure((cell.induced, cell.restricted) == (1, 2), || "table cell differs".into())?;
    notes.push("Z/4 over {0,2}: cell (1, 2), Ind θ_reg ≅ regular".into());
    Ok(notes.join("; "))
}

pub fn check_factor_round_trip(seed: u64, instances: usize, factor: FactorFn) -> Outcome {
    let groups = small_groups(24);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..instances {
        let entry = groups.choose(&mut rng).expect("catalog nonempty");
        let pi = random_permutation_rep(&entry.group, 12, &mut rng);
        let m = random_multiplier(pi.degree(), &mut rng);
        let rho = conjugate_rep(&pi, &m).map_err(err)?;
        let f = factor(&rho).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(f.pi == pi.permutation_part(), || format!("instance {i}: π differs"))?;
        let ratio = m.div(&f.m);
        let invariant = f.pi.iter().all(|p| ratio.shifted(p) == ratio);
        ensure(invariant, || {
            format!("instance {i} ({}): m/m' is not π-invariant", entry.name)
        })?;
        let rebuilt = f.rebuild(Arc::clone(rho.group())).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(rebuilt == rho, || format!("instance {i}: rebuilt ρ differs"))?;
    }
    Ok(format!("{instances} instances, seed {seed}"))
}

pub fn check_order_dual() -> Outcome {
    let groups = small_groups(12);
    for entry in &groups {
        let g = &entry.group;
        let dual = order_dual(g);
        let expected = brute_force_subgroup_classes(g);
        ensure(dual.len() == expected, || {
            format!("{}: {} entries, {} classes", entry.name, dual.len(), expected)
        })?;
        for (i, e) in dual.iter().enumerate() {
            ensure(is_irreducible(&e.rep), || format!("{}: entry {i} reducible", entry.name))?;
            ensure(g.order() % e.rep.degree() == 0, || {
                format!("{}: dimension {} does not divide", entry.name, e.rep.degree())
            })?;
            for f in &dual[i + 1..] {
                let eq = order_equivalent(&e.rep, &f.rep).map_err(err)?;
                ensure(eq.is_none(), || format!("{}: entries equivalent", entry.name))?;
            }
        }
    }
    Ok(format!("{} groups", groups.len()))
}

pub fn check_induction() -> Outcome {
    let groups = small_groups(12);
    let (mut triples, mut chains) = (0usize, 0usize);
    for entry in &groups {
        let g = &entry.group;
        for h in g.all_subgroups() {
            let hg = Arc::new(h.to_group(g));
            let dual = order_dual(&hg);
            for theta in &dual {
                let ind = induce(&theta.rep, h, g).map_err(err)?;
                let index = g.order() / h.order();
                ensure(ind.rep.degree() == index * theta.rep.degree(), || {
                    format!("{}: dimension formula fails", entry.name)
                })?;
                let naive = induced_by_functions(&theta.rep, h, g).map_err(err)?;
                ensure(naive.as_deref() == Some(ind.rep.assignment()), || {
                    format!("{}: function-space oracle disagrees", entry.name)
                })?;
                if is_irreducible(&ind.rep) {
                    ensure(is_irreducible(&theta.rep), || {
                        format!("{}: irreducible Ind of reducible θ", entry.name)
                    })?;
                }
                triples += 1;
            }
            for k in g.all_subgroups().iter().filter(|k| h.is_subgroup_of(k)) {
                for theta in &dual {
                    ensure(stages_check(g, k, h, &theta.rep).map_err(err)?, || {
                        format!("{}: induction in stages fails", entry.name)
                    })?;
                    chains += 1;
                }
            }
        }
    }
    Ok(format!("{triples} (G, H, θ) triples, {chains} chains"))
}

pub fn check_imprimitivity() -> Outcome {
    let groups = small_groups(12);
    let mut systems_seen = 0usize;
    for entry in &groups {
        let g = &entry.group;
        for e in order_dual(g) {
            let rho = &e.rep;
            let systems = all_block_systems(rho).map_err(err)?;
            let intermediate = g
                .all_subgroups()
                .iter()
                .filter(|k| e.subgroup.is_subgroup_of(k))
                .count();
            ensure(systems.len() == intermediate, || {
                format!("{}: {} systems, {} intermediate", entry.name, systems.len(), intermediate)
            })?;
            if rho.degree() <= 8 {
                let search = block_systems_by_search(rho).map_err(err)?;
                ensure(search == systems, || format!("{}: partition search differs", entry.name))?;
            }
            for bs in &systems {
                ensure(covariance_check(rho, &bs.blocks), || {
                    format!("{}: covariance fails", entry.name)
                })?;
                if bs.len() > 1 && bs.is_transitive() {
                    let out = induction_from_imprimitivity(rho, bs).map_err(err)?;
                    ensure(is_intertwiner(&out.witness, rho, &out.induced), || {
                        format!("{}: witness is not an intertwiner", entry.name)
                    })?;
                }
                systems_seen += 1;
            }
            let chain = primitive_chain(rho, BlockConvention::Literal).map_err(err)?;
            let last = chain.last().map_or(rho, |s| &s.theta);
            ensure(is_primitive(last, BlockConvention::Literal).map_err(err)?, || {
                format!("{}: chain ends in an imprimitive rep", entry.name)
            })?;
            if !chain.is_empty() {
                let rebuilt = recompose_chain(g, &chain).map_err(err)?;
                ensure(order_equivalent(rho, &rebuilt).map_err(err)?.is_some(), || {
                    format!("{}: chain does not recompose", entry.name)
                })?;
            }
        }
    }
    Ok(format!("{systems_seen} block systems over {} groups", groups.len()))
}

pub fn check_dedekind() -> Outcome {
    use named::*;
    let groups = [
        ("klein4", klein4()),
        ("cyclic 4", cyclic(4)),
        ("cyclic 6", cyclic(6)),
        ("quaternion8", quaternion8()),
    ];
    for (name, gens) in groups {
        let g = Arc::new(gens.group().map_err(err)?);
        let r = verify_dedekind_correspondence(&g);
        ensure(r.dedekind, || format!("{name}: not Dedekind"))?;
        ensure(r.characters_distinct, || format!("{name}: characters repeat"))?;
        ensure(r.normal_character_formula, || format!("{name}: character formula fails"))?;
    }
    Ok("klein4, cyclic 4, cyclic 6, quaternion8".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let groups = small_groups(12);
        assert!(groups.iter().all(|c| c.group.order() <= 12));
        let names: Vec<&str> = groups.iter().map(|c| c.name.as_str()).collect();
        for n in ["klein4", "quaternion8", "alternating 4", "dihedral 6", "cyclic 2 x cyclic 4"] {
            assert!(names.contains(&n), "{n}");
        }
        assert!(small_groups(24).iter().any(|c| c.name == "symmetric 4"));
    }

    #[test]
    fn brute_force_classes_match_known_counts() {
        assert_eq!(brute_force_subgroup_classes(&named::symmetric(3).group().unwrap()), 4);
        assert_eq!(brute_force_subgroup_classes(&named::klein4().group().unwrap()), 5);
        assert_eq!(brute_force_subgroup_classes(&named::dihedral(4).group().unwrap()), 8);
    }

    #[test]
    fn function_space_oracle_matches_block_form() {
        let g = named::symmetric(3).group().unwrap();
        let h = g.all_subgroups().iter().find(|s| s.order() == 2).unwrap().clone();
        let theta = PosRep::regular(Arc::new(h.to_group(&g)));
        let g = Arc::new(g);
        let ind = induce(&theta, &h, &g).unwrap();
        let naive = induced_by_functions(&theta, &h, &g).unwrap().unwrap();
        assert_eq!(naive, ind.rep.assignment());
    }

    #[test]
    fn small_round_trip() {
        assert!(check_factor_round_trip(7, 20, structure::factor).is_ok());
    }

    fn broken_factor(rho: &PosRep) -> Result<Factorization> {
        let mut f = structure::factor(rho)?;
        let mut m = f.m.entries().to_vec();
        m[0] = m[0].mul(&ExactPositive::from_integer(2)?);
        f.m = Multiplier::new(m);
        Ok(f)
    }

    #[test]
    fn broken_normalization_is_caught() {
        let out = check_factor_round_trip(7, 50, broken_factor);
        assert!(out.is_err());
        let options = VerifyOptions {
            filter: Some("factor".into()),
            round_trips: 50,
            factor: broken_factor,
            ..VerifyOptions::default()
        };
        let results = run(&options);
        assert_eq!(results.len(), 1);
        assert!(!results[0].passed);
    }

    #[test]
    fn filtering() {
        assert!(matches_filter(None, 1, "character"));
        assert!(matches_filter(Some("frobenius"), 2, "frobenius"));
        assert!(matches_filter(Some("2"), 2, "frobenius"));
        assert!(!matches_filter(Some("frobenius"), 1, "character"));
        let options = VerifyOptions {
            filter: Some("frobenius".into()),
            ..VerifyOptions::default()
        };
        let results = run(&options);
        assert_eq!(results.len(), 1);
        assert!(results[0].passed, "{}", results[0].detail);
    }

    #[test]
    fn fast_checks_pass() {
        for check in [check_character(), check_dedekind()] {
            assert!(check.is_ok(), "{check:?}");
        }
    }
}
