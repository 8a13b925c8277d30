//! Lattice-path genomes of increasing gapless tableaux, the equivalence
//! classes they define, and the orders used to stack those classes into a
//! filtration.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bijection::phi;
use crate::combinatorics::{lambda_variant, Cell, Family, TwoRowPartition};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_iglt, occurrences, repeated_values, Entry, Tableau};

/// Grid point `<i,j>`: on horizontal line `i` (line 0 is the top edge of
/// row 1) and vertical line `j` (line 0 is the left edge of column 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub i: usize,
    pub j: usize,
}

impl LatticePoint {
    pub const fn new(i: usize, j: usize) -> Self {
        LatticePoint { i, j }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.i, self.j)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticePath(pub Vec<LatticePoint>);

impl LatticePath {
    pub fn points(&self) -> &[LatticePoint] {
        &self.0
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Crossing the unit segment from `<a,j>` up to `<a-1,j>` separates box
/// `(a,j)` on the left from `(a,j+1)` on the right.
fn up_crossing_ok(t: &Tableau, v: u32, a: usize, j: usize) -> bool {
    let (a, j) = (a as i64, j as i64);
    t.entry(a, j) < Entry::Finite(v) && Entry::Finite(v) <= t.entry(a, j + 1)
}

/// Crossing the unit segment from `<a,j>` right to `<a,j+1>` separates box
/// `(a,j+1)` above from `(a+1,j+1)` below.
fn right_crossing_ok(t: &Tableau, v: u32, a: usize, j: usize) -> bool {
    let (a, j) = (a as i64, j as i64);
    t.entry(a, j + 1) < Entry::Finite(v) && Entry::Finite(v) <= t.entry(a + 1, j + 1)
}

/// The up/right lattice path from the lower-left corner of the bottommost
/// `v` to the upper-right corner of the topmost `v` that keeps entries
/// `< v` on its upper-left side and entries `>= v` on its lower-right side.
///
/// At each point at most one of the two moves can satisfy its crossing
/// condition, so walking greedily yields the unique such path.
pub fn gamma_path(t: &Tableau, v: u32) -> Result<LatticePath> {
    let occ = occurrences(t, v)?;
    if occ.top == occ.bottom {
        return Err(Error::NotRepeated(v));
    }
    let start = LatticePoint::new(occ.bottom.row, occ.bottom.col - 1);
    let end = LatticePoint::new(occ.top.row - 1, occ.top.col);
    let mut at = start;
    let mut points = vec![at];
    while at != end {
        let up = at.i > end.i && up_crossing_ok(t, v, at.i, at.j);
        let right = at.j < end.j && right_crossing_ok(t, v, at.i, at.j);
        at = match (up, right) {
            (true, false) => LatticePoint::new(at.i - 1, at.j),
            (false, true) => LatticePoint::new(at.i, at.j + 1),
            _ => {
                return Err(Error::Invariant(format!(
                    "no boundary path for {v} in {t} at {at}"
                )))
            }
        };
        points.push(at);
    }
    Ok(LatticePath(points))
}

/// The path and box set of one repeated value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gene {
    pub path: LatticePath,
    pub boxes: BTreeSet<Cell>,
}

impl Gene {
    pub fn top(&self) -> Cell {
        *self.boxes.first().expect("genes have at least two boxes")
    }

    pub fn bottom(&self) -> Cell {
        *self.boxes.last().expect("genes have at least two boxes")
    }
}

impl Serialize for Gene {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            boxes: &'a BTreeSet<Cell>,
            path: &'a LatticePath,
        }
        Repr { boxes: &self.boxes, path: &self.path }.serialize(s)
    }
}

/// Genes sorted by bottom-box column. Two tableaux are equivalent exactly
/// when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
#[serde(transparent)]
pub struct GenomeKey(pub Vec<Gene>);

impl GenomeKey {
    pub fn genes(&self) -> &[Gene] {
        &self.0
    }

    pub fn bottom_columns(&self) -> Vec<usize> {
        self.0.iter().map(|g| g.bottom().col).collect()
    }

    pub fn top_columns(&self) -> Vec<usize> {
        self.0.iter().map(|g| g.top().col).collect()
    }
}

pub fn genome_key(t: &Tableau) -> Result<GenomeKey> {
    let mut genes = repeated_values(t)
        .into_iter()
        .map(|v| {
            Ok(Gene {
                path: gamma_path(t, v)?,
                boxes: t.positions(v).into_iter().collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    genes.sort_by_key(|g| g.bottom().col);
    Ok(GenomeKey(genes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    pub members: Vec<Tableau>,
    pub key: GenomeKey,
    #[serde(skip)]
    pub family: Family,
}

impl EquivClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Second family exactly when some gene contains the last box of row two.
fn family_of_key(key: &GenomeKey, lambda: TwoRowPartition) -> Family {
    let corner = Cell::new(2, lambda.lambda2());
    if key.genes().iter().any(|g| g.boxes.contains(&corner)) {
        Family::Second
    } else {
        Family::First
    }
}

/// Family of a class, cross-checked member by member against the repeated
/// value in the corner box and against the shape of each member's image
/// under the bijection.
pub fn class_family(class: &EquivClass, lambda: TwoRowPartition) -> Result<Family> {
    let family = family_of_key(&class.key, lambda);
    let corner = Cell::new(2, lambda.lambda2());
    for t in &class.members {
        let corner_repeated = t
            .get(corner)
            .is_some_and(|v| repeated_values(t).contains(&v));
        if corner_repeated != (family == Family::Second) {
            return Err(Error::Invariant(format!(
                "corner test disagrees with the genome key for {t}"
            )));
        }
        let m = t.max_entry() as usize;
        let expected = lambda_variant(lambda, m, family)?;
        let got = phi(t)?.output.shape();
        if expected.as_ref() != Some(&got) {
            return Err(Error::Invariant(format!(
                "{t} maps to shape {got} but its class is in family {family}"
            )));
        }
    }
    Ok(family)
}

/// Groups `IGLT(lambda)_m` by genome key; classes appear in the order of
/// their first member.
pub fn equivalence_classes(lambda: TwoRowPartition, m: usize) -> Result<Vec<EquivClass>> {
    lambda.check_degree(m)?;
    let mut classes: Vec<EquivClass> = Vec::new();
    let mut slot: HashMap<GenomeKey, usize> = HashMap::new();
    for t in enumerate_iglt(lambda, m) {
        let key = genome_key(&t)?;
        match slot.get(&key) {
            Some(&k) => classes[k].members.push(t),
            None => {
                slot.insert(key.clone(), classes.len());
                let family = family_of_key(&key, lambda);
                classes.push(EquivClass { members: vec![t], key, family });
            }
        }
    }
    for c in &classes {
        class_family(c, lambda)?;
    }
    Ok(classes)
}

fn aligned<'a>(a: &'a EquivClass, b: &'a EquivClass) -> Result<(&'a [Gene], &'a [Gene])> {
    let (ga, gb) = (a.key.genes(), b.key.genes());
    if ga.len() != gb.len() {
        return Err(Error::GeneCountMismatch(ga.len(), gb.len()));
    }
    Ok((ga, gb))
}

/// Componentwise comparison of bottom-box columns only.
pub fn order_leq_bottom_only(a: &EquivClass, b: &EquivClass) -> Result<bool> {
    let (ga, gb) = aligned(a, b)?;
    Ok(ga.iter().zip(gb).all(|(x, y)| x.bottom().col <= y.bottom().col))
}

/// Componentwise comparison of bottom-box columns and of top-box columns.
pub fn order_leq(a: &EquivClass, b: &EquivClass) -> Result<bool> {
    let (ga, gb) = aligned(a, b)?;
    Ok(ga
        .iter()
        .zip(gb)
        .all(|(x, y)| x.bottom().col <= y.bottom().col && x.top().col <= y.top().col))
}

/// Indices of `classes` sorted lexicographically by bottom columns then top
/// columns, ties broken by key. Extends [`order_leq`].
pub fn linear_extension(classes: &[&EquivClass]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..classes.len()).collect();
    idx.sort_by(|&a, &b| {
        let ka = &classes[a].key;
        let kb = &classes[b].key;
        (ka.bottom_columns(), ka.top_columns(), ka).cmp(&(kb.bottom_columns(), kb.top_columns(), kb))
    });
    idx
}

/// Every total order of `0..len` that respects the strict part of the
/// preorder `leq`, up to `limit` orders. The flag is true when the listing
/// was cut short.
pub fn all_linear_extensions(
    len: usize,
    leq: impl Fn(usize, usize) -> bool,
    limit: usize,
) -> (Vec<Vec<usize>>, bool) {
    // before[b] holds every a that must precede b.
    let before: Vec<Vec<usize>> = (0..len)
        .map(|b| (0..len).filter(|&a| a != b && leq(a, b) && !leq(b, a)).collect())
        .collect();
    let mut out = Vec::new();
    let mut truncated = false;
    let mut cur = Vec::with_capacity(len);
    let mut placed = vec![false; len];

    #[allow(clippy::too_many_arguments)]
    fn go(
        len: usize,
        before: &[Vec<usize>],
        limit: usize,
        cur: &mut Vec<usize>,
        placed: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        truncated: &mut bool,
    ) {
        if out.len() >= limit {
            *truncated = true;
            return;
        }
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for b in 0..len {
            if placed[b] || before[b].iter().any(|&a| !placed[a]) {
                continue;
            }
            placed[b] = true;
            cur.push(b);
            go(len, before, limit, cur, placed, out, truncated);
            cur.pop();
            placed[b] = false;
        }
    }

    go(len, &before, limit, &mut cur, &mut placed, &mut out, &mut truncated);
    (out, truncated)
}
