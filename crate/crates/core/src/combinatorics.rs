//! Compositions, partitions, diagram boxes, and the shape bookkeeping used
//! by the two-row Schur expansion.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Finite ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Weakly decreasing composition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Boxes of the Young diagram in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn as_two_row(&self) -> Result<TwoRowPartition> {
        match self.0.as_slice() {
            &[a, b] => TwoRowPartition::new(a, b),
            _ => Err(Error::InvalidPartition(format!(
                "{self} does not have exactly two rows"
            ))),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A partition with exactly two nonzero rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowPartition {
    lambda1: usize,
    lambda2: usize,
}

impl TwoRowPartition {
    pub fn new(lambda1: usize, lambda2: usize) -> Result<Self> {
        if lambda2 == 0 || lambda1 < lambda2 {
            return Err(Error::InvalidPartition(format!(
                "({lambda1},{lambda2}) needs lambda1 >= lambda2 >= 1"
            )));
        }
        Ok(TwoRowPartition { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> usize {
        self.lambda1
    }

    pub fn lambda2(&self) -> usize {
        self.lambda2
    }

    pub fn size(&self) -> usize {
        self.lambda1 + self.lambda2
    }

    pub fn to_partition(&self) -> Partition {
        Partition(vec![self.lambda1, self.lambda2])
    }

    /// Smallest maximum entry of an increasing gapless tableau of this shape.
    pub fn l_lambda(&self) -> usize {
        self.lambda1.max(self.lambda2 + 1)
    }

    /// All two-row partitions of `n`, ordered by decreasing first row.
    pub fn all_of_size(n: usize) -> Vec<TwoRowPartition> {
        (1..=n / 2)
            .rev()
            .map(|b| TwoRowPartition { lambda1: n - b, lambda2: b })
            .collect()
    }

    pub(crate) fn check_degree(&self, m: usize) -> Result<()> {
        let (lo, hi) = (self.l_lambda(), self.size());
        if m < lo || m > hi {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(())
    }
}

impl fmt::Display for TwoRowPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda1, self.lambda2)
    }
}

impl FromStr for TwoRowPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()?.as_two_row()
    }
}

impl Serialize for TwoRowPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lambda1, self.lambda2].serialize(s)
    }
}

/// Box `(row, col)` of a Young diagram, 1-based with row 1 on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

/// Partial sums `{a1, a1+a2, ..., a1+...+a_{l-1}}`.
pub fn set_of(alpha: &Composition) -> BTreeSet<usize> {
    let parts = alpha.parts();
    let mut acc = 0;
    let mut out = BTreeSet::new();
    for &p in parts.iter().take(parts.len().saturating_sub(1)) {
        acc += p;
        out.insert(acc);
    }
    out
}

/// Inverse of [`set_of`] for compositions of `n`.
pub fn comp_of(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if n == 0 {
        if let Some(&v) = set.iter().next() {
            return Err(Error::OutOfRange { what: "descent", value: v as i64, lo: 1, hi: -1 });
        }
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &i in set {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange {
                what: "descent",
                value: i as i64,
                lo: 1,
                hi: n as i64 - 1,
            });
        }
        parts.push(i - prev);
        prev = i;
    }
    parts.push(n - prev);
    Ok(Composition(parts))
}

/// All compositions of `n` in lexicographic order of their part lists.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

pub fn l_lambda(lambda: TwoRowPartition) -> usize {
    lambda.l_lambda()
}

/// Which of the two candidate Schur shapes of degree `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "u8")]
pub enum Family {
    First,
    Second,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::First, Family::Second];

    pub fn index(self) -> u8 {
        match self {
            Family::First => 1,
            Family::Second => 2,
        }
    }
}

impl From<Family> for u8 {
    fn from(f: Family) -> u8 {
        f.index()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// `(l1-k, l2-k, 1^k)` for the first family and `(l1-k, l2-k+1, 1^(k-1))`
/// for the second, with `k = n - m`; `None` when the tuple is not a
/// nonempty partition of `m`.
pub fn lambda_variant(lambda: TwoRowPartition, m: usize, x: Family) -> Result<Option<Partition>> {
    lambda.check_degree(m)?;
    let k = lambda.size() - m;
    let (l1, l2) = (lambda.lambda1 as i64, lambda.lambda2 as i64);
    let k_i = k as i64;
    let tuple: Vec<i64> = match x {
        Family::First => {
            let mut v = vec![l1 - k_i, l2 - k_i];
            v.extend(std::iter::repeat_n(1, k));
            v
        }
        Family::Second => {
            if k == 0 {
                return Ok(None);
            }
            let mut v = vec![l1 - k_i, l2 - k_i + 1];
            v.extend(std::iter::repeat_n(1, k - 1));
            v
        }
    };
    if tuple.iter().any(|&p| p < 1) || tuple.windows(2).any(|w| w[0] < w[1]) {
        return Ok(None);
    }
    Ok(Some(Partition(tuple.into_iter().map(|p| p as usize).collect())))
}

/// The same variant under the strict guards `l2 > k+1` (first family) and
/// `l2 > k` (second family), kept so reports can show where the two
/// readings disagree.
pub fn lambda_variant_strict_guard(
    lambda: TwoRowPartition,
    m: usize,
    x: Family,
) -> Result<Option<Partition>> {
    lambda.check_degree(m)?;
    let k = lambda.size() - m;
    let guard = match x {
        Family::First => lambda.lambda2 > k + 1,
        Family::Second => lambda.lambda2 > k,
    };
    if !guard {
        return Ok(None);
    }
    let mut parts = match x {
        Family::First => vec![lambda.lambda1 - k, lambda.lambda2 - k],
        Family::Second => vec![lambda.lambda1 - k, lambda.lambda2 - k + 1],
    };
    let ones = match x {
        Family::First => k,
        Family::Second => k.saturating_sub(1),
    };
    parts.extend(std::iter::repeat_n(1, ones));
    // The strict reading can still produce a non-partition (e.g. k = 0 in
    // the second family); report those as absent.
    Ok(Partition::new(parts).ok().filter(|p| p.size() == m))
}

/// Shapes indexing the Schur summands of the degree-`m` component, as
/// `(family, shape)` pairs.
pub fn par_candidates(lambda: TwoRowPartition, m: usize) -> Result<Vec<(Family, Partition)>> {
    lambda.check_degree(m)?;
    let families: &[Family] = if m == lambda.size() || lambda.lambda1 == lambda.lambda2 {
        &[Family::First]
    } else {
        &Family::ALL
    };
    let mut out = Vec::new();
    for &x in families {
        if let Some(mu) = lambda_variant(lambda, m, x)? {
            out.push((x, mu));
        }
    }
    Ok(out)
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn two(a: usize, b: usize) -> TwoRowPartition {
        TwoRowPartition::new(a, b).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn set_of_partial_sums() {
        assert_eq!(set_of(&comp(&[2, 1])), set(&[2]));
        assert_eq!(set_of(&comp(&[1, 1, 1])), set(&[1, 2]));
        assert_eq!(set_of(&comp(&[2, 2, 1])), set(&[2, 4]));
        assert!(set_of(&comp(&[4])).is_empty());
        assert!(set_of(&Composition::empty()).is_empty());
    }

    #[test]
    fn comp_of_examples() {
        assert_eq!(comp_of(&set(&[2]), 3).unwrap(), comp(&[2, 1]));
        assert_eq!(comp_of(&set(&[]), 4).unwrap(), comp(&[4]));
        assert_eq!(comp_of(&set(&[1, 2, 4, 5]), 6).unwrap(), comp(&[1, 1, 2, 1, 1]));
        assert!(comp_of(&set(&[4]), 4).is_err());
        assert!(comp_of(&set(&[0]), 4).is_err());
        assert_eq!(comp_of(&set(&[]), 0).unwrap(), Composition::empty());
    }

    #[test]
    fn set_comp_inverse_up_to_12() {
        for n in 1..=12 {
            for a in compositions(n) {
                assert_eq!(comp_of(&set_of(&a), n).unwrap(), a);
            }
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(0), vec![Composition::empty()]);
        assert_eq!(compositions(2), vec![comp(&[1, 1]), comp(&[2])]);
        assert_eq!(compositions(4).len(), 8);
        for n in 1..=10 {
            let all = compositions(n);
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn l_lambda_formula() {
        assert_eq!(l_lambda(two(2, 1)), 2);
        assert_eq!(l_lambda(two(2, 2)), 3);
        assert_eq!(l_lambda(two(4, 4)), 5);
    }

    #[test]
    fn variants() {
        assert_eq!(lambda_variant(two(3, 2), 4, Family::First).unwrap(), Some(part(&[2, 1, 1])));
        assert_eq!(lambda_variant(two(3, 2), 4, Family::Second).unwrap(), Some(part(&[2, 2])));
        assert_eq!(lambda_variant(two(2, 1), 2, Family::First).unwrap(), None);
        assert_eq!(lambda_variant(two(2, 1), 3, Family::Second).unwrap(), None);
        assert!(lambda_variant(two(2, 1), 1, Family::First).is_err());
        assert!(lambda_variant(two(2, 1), 4, Family::First).is_err());
    }

    #[test]
    fn strict_guards_differ_on_small_cases() {
        // m = n, first family: the strict guard drops the shape itself.
        assert_eq!(lambda_variant_strict_guard(two(2, 1), 3, Family::First).unwrap(), None);
        assert_eq!(lambda_variant(two(2, 1), 3, Family::First).unwrap(), Some(part(&[2, 1])));
        assert_eq!(
            lambda_variant_strict_guard(two(4, 2), 5, Family::Second).unwrap(),
            Some(part(&[3, 2]))
        );
    }

    #[test]
    fn par_examples() {
        let shapes = |l, m| -> Vec<Partition> {
            par_candidates(l, m).unwrap().into_iter().map(|(_, p)| p).collect()
        };
        assert_eq!(shapes(two(3, 2), 4), vec![part(&[2, 1, 1]), part(&[2, 2])]);
        assert_eq!(shapes(two(2, 2), 3), vec![part(&[1, 1, 1])]);
        assert_eq!(shapes(two(2, 1), 3), vec![part(&[2, 1])]);
        for n in 2..=12 {
            for l in TwoRowPartition::all_of_size(n) {
                assert_eq!(shapes(l, n), vec![l.to_partition()]);
                for m in l.l_lambda()..=n {
                    for mu in shapes(l, m) {
                        assert_eq!(mu.size(), m);
                    }
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2".parse::<Partition>().unwrap(), part(&[3, 2]));
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
        assert!("3".parse::<TwoRowPartition>().is_err());
        assert_eq!("4,4".parse::<TwoRowPartition>().unwrap(), two(4, 4));
        assert!(Partition::new(vec![2, 1]).unwrap().contains(Cell::new(2, 1)));
        assert!(!Partition::new(vec![2, 1]).unwrap().contains(Cell::new(2, 2)));
    }
}
