//! Fillings of Young diagrams, their enumeration, and descent data.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::combinatorics::{Cell, Partition, TwoRowPartition};
use crate::error::{Error, Result};

/// Value of the extended filling at an arbitrary lattice position.
///
/// Positions in the positive quadrant but outside the diagram read as
/// `PosInf`; anything with a nonpositive coordinate reads as `NegInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    NegInf,
    Finite(u32),
    PosInf,
}

impl Entry {
    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a filling from its rows; the row lengths must form a partition.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Parse("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths validated at construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        let row = self.rows.get(cell.row.checked_sub(1)?)?;
        row.get(cell.col.checked_sub(1)?).copied()
    }

    /// Extended lookup on all of Z^2.
    pub fn entry(&self, row: i64, col: i64) -> Entry {
        if row < 1 || col < 1 {
            return Entry::NegInf;
        }
        match self.get(Cell::new(row as usize, col as usize)) {
            Some(v) => Entry::Finite(v),
            None => Entry::PosInf,
        }
    }

    /// Boxes carrying `v`, top row first.
    pub fn positions(&self, v: u32) -> Vec<Cell> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == v) {
                out.push(Cell::new(r + 1, c + 1));
            }
        }
        out
    }

    pub fn rows_strictly_increasing(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn columns_strictly_increasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below))
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.iter().copied().eq(1..=self.size() as u32)
            && self.rows_strictly_increasing()
            && self.columns_strictly_increasing()
    }

    pub fn is_increasing_gapless(&self) -> bool {
        let values: BTreeSet<u32> = self.rows.iter().flatten().copied().collect();
        values.iter().copied().eq(1..=self.max_entry())
            && self.rows_strictly_increasing()
            && self.columns_strictly_increasing()
    }

    /// The filling obtained by exchanging every `i` with every `i + 1`.
    pub fn swap_values(&self, i: u32) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| match v {
                        v if v == i => i + 1,
                        v if v == i + 1 => i,
                        v => v,
                    })
                    .collect()
            })
            .collect();
        Tableau { rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in {s:?}")));
        }
        Tableau::from_rows(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccurrenceCoords {
    pub value: u32,
    pub top: Cell,
    pub bottom: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DescentData {
    pub descents: BTreeSet<u32>,
    pub attacking: BTreeSet<u32>,
}

impl DescentData {
    pub fn is_non_attacking_descent(&self, i: u32) -> bool {
        self.descents.contains(&i) && !self.attacking.contains(&i)
    }
}

pub fn occurrences(t: &Tableau, v: u32) -> Result<OccurrenceCoords> {
    let pos = t.positions(v);
    match (pos.first(), pos.last()) {
        (Some(&top), Some(&bottom)) => Ok(OccurrenceCoords { value: v, top, bottom }),
        _ => Err(Error::ValueAbsent(v)),
    }
}

/// Values occurring in more than one box, ascending.
pub fn repeated_values(t: &Tableau) -> BTreeSet<u32> {
    let mut seen = BTreeSet::new();
    let mut repeated = BTreeSet::new();
    for &v in t.rows.iter().flatten() {
        if !seen.insert(v) {
            repeated.insert(v);
        }
    }
    repeated
}

/// Descents and attacking descents.
///
/// `i` is a descent when its topmost occurrence sits in a row strictly above
/// the bottommost `i + 1`. A descent attacks when some `i` has an `i + 1`
/// directly below it, or when some `i + 1` sits in a row weakly above the
/// bottommost `i`.
pub fn descent_data(t: &Tableau) -> DescentData {
    let max = t.max_entry();
    let mut data = DescentData::default();
    for i in 1..max {
        let (Ok(a), Ok(b)) = (occurrences(t, i), occurrences(t, i + 1)) else {
            continue;
        };
        if a.top.row >= b.bottom.row {
            continue;
        }
        data.descents.insert(i);
        let stacked = t.positions(i).into_iter().any(|c| {
            t.get(Cell::new(c.row + 1, c.col)) == Some(i + 1)
        });
        let weakly_above = t.positions(i + 1).iter().any(|c| c.row <= a.bottom.row);
        if stacked || weakly_above {
            data.attacking.insert(i);
        }
    }
    data
}

/// Fills `shape` in row-reading order with values from `1..=max`, rows and
/// columns strictly increasing; ascending choices give lexicographic order
/// on the reading word.
fn fill_increasing(shape: &Partition, max: u32, distinct: bool, mut emit: impl FnMut(&[Vec<u32>])) {
    let cells: Vec<Cell> = shape.cells().collect();
    // Entries of cells weakly south-east of a cell (other than itself) are
    // all larger; bound each cell's value accordingly.
    let bound: Vec<u32> = cells
        .iter()
        .map(|c| {
            let arm = (shape.row_len(c.row) - c.col) as u32;
            let leg = (c.row + 1..=shape.len()).filter(|&r| shape.row_len(r) >= c.col).count() as u32;
            let slack = if distinct {
                cells.iter().filter(|d| d.row >= c.row && d.col >= c.col).count() as u32 - 1
            } else {
                arm.max(leg)
            };
            max.saturating_sub(slack)
        })
        .collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut used = vec![false; max as usize + 1];

    fn go(
        k: usize,
        cells: &[Cell],
        bound: &[u32],
        distinct: bool,
        rows: &mut Vec<Vec<u32>>,
        used: &mut [bool],
        emit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        let Some(&cell) = cells.get(k) else {
            emit(rows);
            return;
        };
        let (r, c) = (cell.row - 1, cell.col - 1);
        let left = if c > 0 { rows[r][c - 1] } else { 0 };
        let above = if r > 0 { rows[r - 1][c] } else { 0 };
        for v in left.max(above) + 1..=bound[k] {
            if distinct && used[v as usize] {
                continue;
            }
            used[v as usize] = true;
            rows[r].push(v);
            go(k + 1, cells, bound, distinct, rows, used, emit);
            rows[r].pop();
            used[v as usize] = false;
        }
    }

    go(0, &cells, &bound, distinct, &mut rows, &mut used, &mut emit);
}

/// Standard Young tableaux of shape `mu`, lexicographic in reading word.
pub fn enumerate_syt(mu: &Partition) -> Vec<Tableau> {
    let n = mu.size() as u32;
    let mut out = Vec::new();
    fill_increasing(mu, n, true, |rows| out.push(Tableau { rows: rows.to_vec() }));
    out
}

/// Increasing gapless tableaux of two-row shape `lambda` with maximum
/// entry exactly `m`, lexicographic in reading word.
pub fn enumerate_iglt(lambda: TwoRowPartition, m: usize) -> Vec<Tableau> {
    if m == 0 || m > lambda.size() {
        return Vec::new();
    }
    let shape = lambda.to_partition();
    let mut out = Vec::new();
    let mut hit = vec![false; m + 1];
    fill_increasing(&shape, m as u32, false, |rows| {
        hit.iter_mut().for_each(|h| *h = false);
        for &v in rows.iter().flatten() {
            hit[v as usize] = true;
        }
        if hit[1..].iter().all(|&h| h) {
            out.push(Tableau { rows: rows.to_vec() });
        }
    });
    out
}
