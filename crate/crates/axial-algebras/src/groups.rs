//! Small permutation-group machinery: closure from generators, normal sets
//! of involutions, the 3-transposition test, extraction of the associated
//! incidence geometry, and the Miyamoto permutation action of an axial
//! algebra on its closed axis set.

use std::collections::{BTreeMap, HashSet};

use crate::algebra::Algebra;
use crate::axial::{axis_closure, AxisClosure};
use crate::error::{Error, Result};
use crate::geometry::PartialTripleSystem;
use crate::scalar::Scalar;

/// A permutation of `{0, .., n-1}` stored by images: `i` maps to
/// `images[i]`. Products compose left to right: `i^(g h) = (i^g)^h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadParameters("images are not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn compose(&self, then: &Permutation) -> Permutation {
        assert_eq!(self.degree(), then.degree());
        Permutation {
            images: self.images.iter().map(|&i| then.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Conjugate `self^other = other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    /// Order as the least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Default cap for group closures.
pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// All products of the generators, including the identity, by breadth-first
/// closure. Fails with [`Error::CapExceeded`] if the group outgrows `cap`.
pub fn group_closure(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let n = gens.first().map_or(0, Permutation::degree);
    for g in gens {
        if g.degree() != n {
            return Err(Error::BadParameters("mixed permutation degrees".into()));
        }
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut order: Vec<Permutation> = Vec::new();
    let mut frontier = vec![id.clone()];
    seen.insert(id.clone());
    order.push(id);
    while let Some(g) = frontier.pop() {
        for gen in gens {
            let h = g.compose(gen);
            if !seen.contains(&h) {
                if order.len() + 1 > cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(h.clone());
                order.push(h.clone());
                frontier.push(h);
            }
        }
    }
    order.sort();
    Ok(order)
}

/// A closed permutation group together with a distinguished normal subset
/// `D` of involutions.
#[derive(Debug, Clone)]
pub struct TranspositionSet {
    group: Vec<Permutation>,
    dset: Vec<Permutation>,
}

impl TranspositionSet {
    /// Verifies that every member of `dset` has order two, lies in the
    /// group, and that `dset` is closed under conjugation by every group
    /// element.
    pub fn new(group: Vec<Permutation>, dset: Vec<Permutation>) -> Result<Self> {
        let members: HashSet<&Permutation> = group.iter().collect();
        let dmembers: HashSet<&Permutation> = dset.iter().collect();
        if dmembers.len() != dset.len() {
            return Err(Error::BadParameters("duplicate elements in D".into()));
        }
        for d in &dset {
            if d.order() != 2 {
                return Err(Error::BadParameters(format!(
                    "element of order {} in D",
                    d.order()
                )));
            }
            if !members.contains(d) {
                return Err(Error::BadParameters(
                    "D is not a subset of the group".into(),
                ));
            }
        }
        for d in &dset {
            for g in &group {
                if !dmembers.contains(&d.conjugate_by(g)) {
                    return Err(Error::BadParameters(
                        "D is not closed under conjugation".into(),
                    ));
                }
            }
        }
        Ok(TranspositionSet { group, dset })
    }

    pub fn group(&self) -> &[Permutation] {
        &self.group
    }

    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    pub fn dset(&self) -> &[Permutation] {
        &self.dset
    }
}

/// Outcome of the pairwise product-order scan over `D`.
#[derive(Debug, Clone)]
pub struct ThreeTranspositionReport {
    /// True when every product of two members of `D` has order 1, 2, or 3.
    pub ok: bool,
    /// Histogram of product orders over unordered pairs (including the
    /// diagonal, which contributes order 1 once per element).
    pub histogram: BTreeMap<u64, usize>,
    /// A pair whose product order falls outside `{1, 2, 3}`, if any.
    pub witness: Option<(usize, usize, u64)>,
}

pub fn three_transposition_check(ts: &TranspositionSet) -> ThreeTranspositionReport {
    let d = ts.dset();
    let mut histogram = BTreeMap::new();
    let mut witness = None;
    for i in 0..d.len() {
        for j in i..d.len() {
            let order = d[i].compose(&d[j]).order();
            *histogram.entry(order).or_insert(0) += 1;
            if order > 3 && witness.is_none() {
                witness = Some((i, j, order));
            }
        }
    }
    ThreeTranspositionReport {
        ok: witness.is_none(),
        histogram,
        witness,
    }
}

/// The incidence geometry of a 3-transposition set: points are the members
/// of `D`, and each pair with product of order three contributes the line
/// `{d, e, d^e}` (the three transpositions of the Sym(3) they generate).
pub fn fischer_space_of(ts: &TranspositionSet) -> Result<PartialTripleSystem> {
    let check = three_transposition_check(ts);
    if !check.ok {
        return Err(Error::Not3Transpositions);
    }
    let d = ts.dset();
    let labels: Vec<String> = (0..d.len()).map(|i| format!("t{i}")).collect();
    let index: BTreeMap<&Permutation, usize> = d.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut lines = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            if d[i].compose(&d[j]).order() == 3 {
                let third = d[i].conjugate_by(&d[j]);
                let k = *index
                    .get(&third)
                    .expect("normality puts the conjugate back in D");
                let mut key = [i, j, k];
                key.sort_unstable();
                if seen.insert(key) {
                    lines.push(vec![
                        labels[key[0]].clone(),
                        labels[key[1]].clone(),
                        labels[key[2]].clone(),
                    ]);
                }
            }
        }
    }
    PartialTripleSystem::new(labels, lines)
}

/// The Miyamoto permutation action of an algebra on a complete axis
/// closure.
#[derive(Debug, Clone)]
pub struct MiyamotoAction {
    /// One permutation of the closure per axis, in closure order.
    pub perms: Vec<Permutation>,
    /// Axes whose Miyamoto map is the identity (zero eta-eigenspace).
    pub trivial_axes: Vec<usize>,
    /// Distinct Miyamoto matrices induce distinct permutations of the axes.
    pub faithful_on_axes: bool,
    /// No two distinct axes share a nonidentity Miyamoto map.
    pub bijective_tau: bool,
}

/// Computes the permutation induced by each axis's Miyamoto involution on
/// the closure. Every image must be an axis of the closure, otherwise the
/// closure was not complete and [`Error::ClosureNotInvariant`] is returned.
pub fn miyamoto_group(closure: &AxisClosure) -> Result<MiyamotoAction> {
    let axes = &closure.axes;
    let n = axes.len();
    let index: std::collections::HashMap<Vec<Scalar>, usize> = axes
        .iter()
        .enumerate()
        .map(|(i, x)| (x.coords().to_vec(), i))
        .collect();
    let mut perms = Vec::with_capacity(n);
    let mut trivial_axes = Vec::new();
    for (k, tau) in closure.taus.iter().enumerate() {
        let mut images = Vec::with_capacity(n);
        for x in axes {
            let image = tau.apply(x);
            match index.get(image.coords()) {
                Some(&i) => images.push(i),
                None => return Err(Error::ClosureNotInvariant(k)),
            }
        }
        let perm = Permutation::new(images).expect("automorphism images are a bijection");
        if tau.is_identity() {
            trivial_axes.push(k);
        }
        perms.push(perm);
    }
    let mut bijective_tau = true;
    let mut faithful_on_axes = true;
    for i in 0..n {
        for j in (i + 1)..n {
            let same_matrix = closure.taus[i].matrix() == closure.taus[j].matrix();
            let same_perm = perms[i] == perms[j];
            if same_matrix && !closure.taus[i].is_identity() {
                bijective_tau = false;
            }
            if same_perm && !same_matrix {
                faithful_on_axes = false;
            }
        }
    }
    Ok(MiyamotoAction {
        perms,
        trivial_axes,
        faithful_on_axes,
        bijective_tau,
    })
}

/// Full pipeline summary: axis closure, Miyamoto permutations, group
/// closure, 3-transposition verdict, and the extracted geometry.
#[derive(Debug, Clone)]
pub struct MiyamotoAnalysis {
    pub closure: AxisClosure,
    pub action: MiyamotoAction,
    pub group_order: usize,
    pub check: ThreeTranspositionReport,
    pub fischer_space: Option<PartialTripleSystem>,
}

/// Runs the whole Miyamoto analysis of an algebra at the given eta, with the
/// given caps on axis and group closure.
pub fn miyamoto_analysis(
    a: &Algebra,
    eta: &Scalar,
    axis_cap: usize,
    group_cap: usize,
) -> Result<MiyamotoAnalysis> {
    let closure = axis_closure(a, eta, axis_cap)?;
    if !closure.complete {
        return Err(Error::CapExceeded(axis_cap));
    }
    analyze_closure(closure, group_cap)
}

/// The group-theoretic part of the analysis, on an already-complete closure.
pub fn analyze_closure(closure: AxisClosure, group_cap: usize) -> Result<MiyamotoAnalysis> {
    let action = miyamoto_group(&closure)?;
    let mut dset: Vec<Permutation> = Vec::new();
    for p in &action.perms {
        if !p.is_identity() && !dset.contains(p) {
            dset.push(p.clone());
        }
    }
    let trivial = [Permutation::identity(closure.axes.len())];
    let gens: &[Permutation] = if dset.is_empty() { &trivial } else { &dset };
    let group = group_closure(gens, group_cap)?;
    let group_order = group.len();
    let ts = TranspositionSet::new(group, dset)?;
    let check = three_transposition_check(&ts);
    let fischer_space = if check.ok {
        Some(fischer_space_of(&ts)?)
    } else {
        None
    };
    Ok(MiyamotoAnalysis {
        closure,
        action,
        group_order,
        check,
        fischer_space,
    })
}
