//! Partial triple systems: validation, connectivity, subspace closure,
//! plane classification, the Fischer-space test, central automorphisms,
//! and a handful of built-in incidence structures.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};

/// A partial linear space of order two: points, and 3-element lines such
/// that two distinct points lie on at most one common line. Labels are
/// arbitrary strings; lines are stored as sorted index triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTripleSystem {
    points: Vec<String>,
    lines: Vec<[usize; 3]>,
    /// pair -> line index, for O(1) collinearity lookups
    pair_line: HashMap<(usize, usize), usize>,
}

impl PartialTripleSystem {
    /// Validates and builds the system. Rejects lines without three distinct
    /// known points, duplicate lines, and point pairs on two lines.
    pub fn new(points: Vec<String>, lines_by_label: Vec<Vec<String>>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::InvalidGeometry(format!(
                    "duplicate point label {p:?}"
                )));
            }
        }
        let mut lines = Vec::new();
        let mut seen_lines = HashSet::new();
        let mut pair_line = HashMap::new();
        for raw in lines_by_label {
            if raw.len() != 3 {
                return Err(Error::BadLineSize(raw));
            }
            let mut idx = [0usize; 3];
            for (k, label) in raw.iter().enumerate() {
                idx[k] = *index
                    .get(label)
                    .ok_or_else(|| Error::UnknownPoint(label.clone()))?;
            }
            idx.sort_unstable();
            if idx[0] == idx[1] || idx[1] == idx[2] {
                return Err(Error::BadLineSize(raw));
            }
            if !seen_lines.insert(idx) {
                return Err(Error::DuplicateLine(raw));
            }
            let line_no = lines.len();
            for (a, b) in [(idx[0], idx[1]), (idx[0], idx[2]), (idx[1], idx[2])] {
                if pair_line.insert((a, b), line_no).is_some() {
                    return Err(Error::PairOnTwoLines(points[a].clone(), points[b].clone()));
                }
            }
            lines.push(idx);
        }
        Ok(PartialTripleSystem {
            points,
            lines,
            pair_line,
        })
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    pub fn point_label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn collinear(&self, p: usize, q: usize) -> bool {
        p != q && self.line_through(p, q).is_some()
    }

    /// The line through two distinct points, if any.
    pub fn line_through(&self, p: usize, q: usize) -> Option<[usize; 3]> {
        let key = if p < q { (p, q) } else { (q, p) };
        self.pair_line.get(&key).map(|&l| self.lines[l])
    }

    /// Third point of the line through `p` and `q`.
    pub fn third_point(&self, p: usize, q: usize) -> Option<usize> {
        self.line_through(p, q)
            .map(|l| l.into_iter().find(|&x| x != p && x != q).unwrap())
    }

    /// All points not collinear with `p` (excluding `p` itself).
    pub fn perp(&self, p: usize) -> Vec<usize> {
        (0..self.point_count())
            .filter(|&q| q != p && !self.collinear(p, q))
            .collect()
    }

    pub fn lines_through(&self, p: usize) -> Vec<[usize; 3]> {
        self.lines
            .iter()
            .copied()
            .filter(|l| l.contains(&p))
            .collect()
    }

    /// Whether every pair of distinct points lies on exactly one line.
    pub fn is_steiner(&self) -> bool {
        let n = self.point_count();
        n > 0 && self.pair_line.len() == n * (n - 1) / 2
    }

    /// Connected components of the collinearity relation, as sorted point
    /// sets in order of their least element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.point_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(p) = stack.pop() {
                comp.push(p);
                for line in self.lines_through(p) {
                    for q in line {
                        if !seen[q] {
                            seen[q] = true;
                            stack.push(q);
                        }
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Least superset of `seed` such that any line meeting it in two points
    /// is contained in it, by fixed-point iteration.
    pub fn subspace_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut inside: HashSet<usize> = seed.iter().copied().collect();
        loop {
            let mut grew = false;
            for line in &self.lines {
                let hits = line.iter().filter(|p| inside.contains(p)).count();
                if hits == 2 {
                    for &p in line {
                        inside.insert(p);
                    }
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let mut out: Vec<usize> = inside.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Lines entirely inside the given point set.
    fn lines_inside(&self, set: &[usize]) -> Vec<[usize; 3]> {
        let inside: HashSet<usize> = set.iter().copied().collect();
        self.lines
            .iter()
            .copied()
            .filter(|l| l.iter().all(|p| inside.contains(p)))
            .collect()
    }

    /// Classifies the subspace generated by two distinct intersecting lines.
    pub fn plane_of(&self, l1: usize, l2: usize) -> PlaneReport {
        let mut seed: Vec<usize> = self.lines[l1].to_vec();
        seed.extend(self.lines[l2]);
        let closure = self.subspace_closure(&seed);
        let lines = self.lines_inside(&closure);
        let classification = classify_plane(&closure, &lines);
        PlaneReport {
            generating_lines: (l1, l2),
            points: closure,
            line_count: lines.len(),
            classification,
        }
    }

    /// Enumerates the planes spanned by all pairs of distinct intersecting
    /// lines, deduplicated by point set; deterministic order.
    pub fn planes(&self) -> Vec<PlaneReport> {
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut out = Vec::new();
        for i in 0..self.lines.len() {
            for j in (i + 1)..self.lines.len() {
                if self.lines[i].iter().any(|p| self.lines[j].contains(p)) {
                    let report = self.plane_of(i, j);
                    let key: BTreeSet<usize> = report.points.iter().copied().collect();
                    if seen.insert(key) {
                        out.push(report);
                    }
                }
            }
        }
        out
    }

    /// Buekenhout's criterion: the system is a Fischer space exactly when
    /// every plane is a dual affine plane of order two or an affine plane of
    /// order three. Returns the first offending plane otherwise.
    pub fn fischer_check(&self) -> FischerReport {
        for i in 0..self.lines.len() {
            for j in (i + 1)..self.lines.len() {
                if self.lines[i].iter().any(|p| self.lines[j].contains(p)) {
                    let report = self.plane_of(i, j);
                    if !matches!(
                        report.classification,
                        PlaneClass::DualAffineOrder2 | PlaneClass::AffineOrder3
                    ) {
                        return FischerReport {
                            is_fischer: false,
                            bad_plane: Some(report),
                        };
                    }
                }
            }
        }
        FischerReport {
            is_fischer: true,
            bad_plane: None,
        }
    }

    /// The central automorphism with center `x`: fixes `x` and everything
    /// not collinear with `x`, and switches the two other points of every
    /// line through `x`. Returns the permutation on point indices, or the
    /// first line whose image is not a line.
    pub fn central_automorphism(&self, x: usize) -> CentralAutomorphism {
        let n = self.point_count();
        let mut images: Vec<usize> = (0..n).collect();
        for line in self.lines_through(x) {
            let others: Vec<usize> = line.into_iter().filter(|&p| p != x).collect();
            images[others[0]] = others[1];
            images[others[1]] = others[0];
        }
        for line in &self.lines {
            let mut img = [images[line[0]], images[line[1]], images[line[2]]];
            img.sort_unstable();
            if !self.lines.contains(&img) {
                return CentralAutomorphism::Failure {
                    witness_line: *line,
                };
            }
        }
        CentralAutomorphism::Map(images)
    }
}

/// A plane (subspace generated by two intersecting lines) and its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneReport {
    pub generating_lines: (usize, usize),
    pub points: Vec<usize>,
    pub line_count: usize,
    pub classification: PlaneClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneClass {
    /// 6 points, 4 lines, every point on exactly two of them.
    DualAffineOrder2,
    /// 9 points, 12 lines, every pair of points collinear.
    AffineOrder3,
    Other {
        points: usize,
        lines: usize,
    },
}

impl PlaneClass {
    pub fn render(&self) -> String {
        match self {
            PlaneClass::DualAffineOrder2 => "DualAffineOrder2".into(),
            PlaneClass::AffineOrder3 => "AffineOrder3".into(),
            PlaneClass::Other { points, lines } => format!("Other({points} points, {lines} lines)"),
        }
    }
}

fn classify_plane(points: &[usize], lines: &[[usize; 3]]) -> PlaneClass {
    let degree = |p: usize| lines.iter().filter(|l| l.contains(&p)).count();
    if points.len() == 6 && lines.len() == 4 && points.iter().all(|&p| degree(p) == 2) {
        return PlaneClass::DualAffineOrder2;
    }
    if points.len() == 9 && lines.len() == 12 {
        // every pair collinear inside the plane
        let mut pairs = HashSet::new();
        for l in lines {
            for (a, b) in [(l[0], l[1]), (l[0], l[2]), (l[1], l[2])] {
                pairs.insert((a, b));
            }
        }
        if pairs.len() == 36 {
            return PlaneClass::AffineOrder3;
        }
    }
    PlaneClass::Other {
        points: points.len(),
        lines: lines.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FischerReport {
    pub is_fischer: bool,
    pub bad_plane: Option<PlaneReport>,
}

/// Outcome of the central-automorphism construction; failure is data, not
/// an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralAutomorphism {
    Map(Vec<usize>),
    Failure { witness_line: [usize; 3] },
}

/// Built-in incidence structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinSpace {
    /// The projective plane of order two: 7 points, 7 lines, Steiner.
    Fano,
    /// The affine plane of order three: 9 points, 12 lines, Steiner.
    AG23,
    /// The dual affine plane of order two: 6 points, 4 lines.
    DualAffine2,
    /// Transpositions of degree `n` as points; the triples inside the
    /// Sym(3) subgroups as lines.
    SymTriangles(usize),
    /// One line on three points.
    SingleLine,
    /// Two points, no lines.
    Disconnected2B,
    /// Five points on two lines sharing one point; the smallest system
    /// violating the perp-subspace condition.
    FivePointTwoLines,
}

impl BuiltinSpace {
    /// Resolves a command-line name such as `fano` or `symtriangles:5`.
    pub fn parse(name: &str) -> Option<BuiltinSpace> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "fano" => Some(BuiltinSpace::Fano),
            "ag23" => Some(BuiltinSpace::AG23),
            "dualaffine2" => Some(BuiltinSpace::DualAffine2),
            "singleline" => Some(BuiltinSpace::SingleLine),
            "disconnected2b" => Some(BuiltinSpace::Disconnected2B),
            "fivepoint" => Some(BuiltinSpace::FivePointTwoLines),
            _ => lower
                .strip_prefix("symtriangles:")
                .and_then(|n| n.parse().ok())
                .map(BuiltinSpace::SymTriangles),
        }
    }
}

pub fn builtin_space(which: &BuiltinSpace) -> Result<PartialTripleSystem> {
    let lines_of = |labels: &[&str], lines: &[[&str; 3]]| {
        PartialTripleSystem::new(
            labels.iter().map(|s| s.to_string()).collect(),
            lines
                .iter()
                .map(|l| l.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    };
    match which {
        BuiltinSpace::Fano => lines_of(
            &["1", "2", "3", "4", "5", "6", "7"],
            &[
                ["1", "2", "3"],
                ["1", "4", "5"],
                ["1", "6", "7"],
                ["2", "4", "6"],
                ["2", "5", "7"],
                ["3", "4", "7"],
                ["3", "5", "6"],
            ],
        ),
        BuiltinSpace::AG23 => {
            // points of F_3 x F_3; lines are the triples summing to zero
            let mut labels = Vec::new();
            for r in 0..3 {
                for c in 0..3 {
                    labels.push(format!("{r}{c}"));
                }
            }
            let mut lines = Vec::new();
            let mut seen = HashSet::new();
            for a in 0..9usize {
                for b in (a + 1)..9 {
                    let (ar, ac) = (a / 3, a % 3);
                    let (br, bc) = (b / 3, b % 3);
                    let cr = (6 - ar - br) % 3;
                    let cc = (6 - ac - bc) % 3;
                    let c = cr * 3 + cc;
                    let mut key = [a, b, c];
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
            PartialTripleSystem::new(labels, lines)
        }
        BuiltinSpace::DualAffine2 => lines_of(
            &["p0", "p1", "p2", "p3", "p4", "p5"],
            &[
                ["p0", "p1", "p3"],
                ["p0", "p2", "p4"],
                ["p1", "p2", "p5"],
                ["p3", "p4", "p5"],
            ],
        ),
        BuiltinSpace::SymTriangles(n) => {
            let n = *n;
            if n < 3 {
                return Err(Error::BadParameters(
                    "transposition triangles need degree at least 3".into(),
                ));
            }
            let mut labels = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    labels.push(format!("({i} {j})"));
                }
            }
            let mut lines = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for k in (j + 1)..=n {
                        lines.push(vec![
                            format!("({i} {j})"),
                            format!("({i} {k})"),
                            format!("({j} {k})"),
                        ]);
                    }
                }
            }
            PartialTripleSystem::new(labels, lines)
        }
        BuiltinSpace::SingleLine => lines_of(&["x", "y", "z"], &[["x", "y", "z"]]),
        BuiltinSpace::Disconnected2B => {
            PartialTripleSystem::new(vec!["p".into(), "q".into()], vec![])
        }
        BuiltinSpace::FivePointTwoLines => lines_of(
            &["x", "y", "z", "u", "v"],
            &[["x", "y", "z"], ["y", "u", "v"]],
        ),
    }
}
