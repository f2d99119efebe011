//! Finite G-spaces: orbits, stabilizers, coset actions and isomorphism.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Permutation;

/// A finite set `{0, .., points-1}` with an action of a permutation group.
/// `action[s][x]` is the image of point `x` under group element `s`.
#[derive(Debug, Clone)]
pub struct GSpace {
    group: Arc<PermGroup>,
    points: usize,
    action: Vec<Vec<usize>>,
}

impl GSpace {
    /// Validates the action axioms exhaustively.
    pub fn new(group: Arc<PermGroup>, points: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        if points == 0 {
            return Err(Error::InvalidAction("a G-space must be nonempty".into()));
        }
        if action.len() != group.order() || action.iter().any(|row| row.len() != points) {
            return Err(Error::InvalidAction("action table has the wrong shape".into()));
        }
        if action[PermGroup::IDENTITY].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for s in 0..group.order() {
            for t in 0..group.order() {
                let st = group.mul(s, t);
                for x in 0..points {
                    let y = action[t][x];
                    if y >= points || action[st][x] != action[s][y] {
                        return Err(Error::InvalidAction(format!(
                            "(st)x != s(tx) for s = {}, t = {}, x = {}",
                            group.element(s),
                            group.element(t),
                            x + 1
                        )));
                    }
                }
            }
        }
        Ok(GSpace {
            group,
            points,
            action,
        })
    }

    /// The space on `{0, .., n-1}` where element `s` acts by `perms[s]`.
    pub fn from_permutations(group: Arc<PermGroup>, perms: &[Permutation]) -> Result<Self> {
        let n = perms.first().map_or(0, Permutation::degree);
        let action = perms.iter().map(|p| p.images().to_vec()).collect();
        GSpace::new(group, n, action)
    }

    /// The group acting on its own points.
    pub fn natural(group: Arc<PermGroup>) -> Self {
        let action = group.elements().iter().map(|p| p.images().to_vec()).collect();
        GSpace {
            points: group.degree().max(1),
            group,
            action,
        }
    }

    /// `G/H` with `s · rH = srH`, points numbered as in
    /// [`PermGroup::coset_space`] (the identity coset is point 0).
    pub fn coset_action(group: Arc<PermGroup>, h: &Subgroup) -> Result<Self> {
        let cosets = group.coset_space(h)?;
        let action = (0..group.order())
            .map(|s| {
                cosets
                    .representatives
                    .iter()
                    .map(|&r| cosets.coset_of[group.mul(s, r)])
                    .collect()
            })
            .collect();
        Ok(GSpace {
            points: cosets.len(),
            group,
            action,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn act(&self, s: usize, x: usize) -> usize {
        self.action[s][x]
    }

    /// The permutation of the points induced by element `s`.
    pub fn permutation(&self, s: usize) -> Permutation {
        Permutation::new(self.action[s].clone()).expect("action rows are bijections")
    }

    /// Orbits, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for start in 0..self.points {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            for s in 0..self.group.order() {
                let y = self.act(s, start);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.group.order()).map(|s| self.act(s, 0)).collect::<std::collections::HashSet<_>>().len()
            == self.points
    }

    pub fn stabilizer(&self, p: usize) -> Subgroup {
        let members = (0..self.group.order())
            .filter(|&s| self.act(s, p) == p)
            .collect();
        Subgroup::from_members(&self.group, members).expect("stabilizers are subgroups")
    }

    /// The sub-G-space on one orbit, renumbered in increasing point order.
    pub fn restrict_to_orbit(&self, orbit: &[usize]) -> GSpace {
        let mut local = vec![usize::MAX; self.points];
        for (k, &x) in orbit.iter().enumerate() {
            local[x] = k;
        }
        let action = self
            .action
            .iter()
            .map(|row| orbit.iter().map(|&x| local[row[x]]).collect())
            .collect();
        GSpace {
            group: Arc::clone(&self.group),
            points: orbit.len(),
            action,
        }
    }

    /// Checks that `phi` is an equivariant bijection `self -> other`.
    pub fn is_equivariant_bijection(&self, other: &GSpace, phi: &[usize]) -> bool {
        if phi.len() != self.points || self.points != other.points {
            return false;
        }
        let mut hit = vec![false; other.points];
        for &y in phi {
            if y >= other.points || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..self.group.order())
            .all(|s| (0..self.points).all(|x| phi[self.act(s, x)] == other.act(s, phi[x])))
    }
}

/// Isomorphism test for G-spaces over the same group. On success returns an
/// equivariant bijection `phi` with `phi(s·x) = s·phi(x)`.
///
/// Transitive constituents are matched greedily in canonical order by
/// conjugacy of the stabilizers of their least points. For a matched pair with
/// `G_x = r G_y r⁻¹`, the map `s·x ↦ s·r·y` is equivariant.
pub fn gspaces_isomorphic(x: &GSpace, y: &GSpace) -> Result<Option<Vec<usize>>> {
    if *x.group != *y.group {
        return Err(Error::GroupMismatch);
    }
    if x.points != y.points {
        return Ok(None);
    }
    let g = &x.group;
    let x_orbits = x.orbits();
    let y_orbits = y.orbits();
    if x_orbits.len() != y_orbits.len() {
        return Ok(None);
    }
    let y_stabs: Vec<Subgroup> = y_orbits.iter().map(|o| y.stabilizer(o[0])).collect();
    let mut used = vec![false; y_orbits.len()];
    let mut phi = vec![usize::MAX; x.points];

    for xo in &x_orbits {
        let x0 = xo[0];
        let gx = x.stabilizer(x0);
        let matched = y_orbits.iter().enumerate().find_map(|(k, yo)| {
            if used[k] || yo.len() != xo.len() {
                return None;
            }
            g.conjugating_element(&y_stabs[k], &gx).map(|r| (k, r))
        });
        let Some((k, r)) = matched else {
            return Ok(None);
        };
        used[k] = true;
        let y0 = y_orbits[k][0];
        let ry0 = y.act(r, y0);
        for s in 0..g.order() {
            phi[x.act(s, x0)] = y.act(s, ry0);
        }
    }
    debug_assert!(x.is_equivariant_bijection(y, &phi));
    Ok(Some(phi))
}
