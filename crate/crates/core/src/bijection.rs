//! Descent-preserving bijection from increasing gapless tableaux of a two-row shape
//! to standard tableaux of the candidate shapes, and its inverse.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{par_candidates, Partition, TwoRowPartition};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_syt, repeated_values, Tableau};

/// Input, output, and the two intermediate value sets of the forward map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    /// Repeated values, deleted from the first row.
    pub removed: BTreeSet<u32>,
    /// Second-row values immediately right of a repeated value; moved into
    /// the first column.
    pub moved: BTreeSet<u32>,
    pub input: Tableau,
    pub output: Tableau,
}

fn two_row_shape(t: &Tableau) -> Result<TwoRowPartition> {
    let shape = t.shape().as_two_row()?;
    if !t.is_increasing_gapless() {
        return Err(Error::InvalidPartition(format!("{t} is not an increasing gapless tableau")));
    }
    Ok(shape)
}

/// Merges `extra` into the sorted `row`.
fn insert_sorted(row: &mut Vec<u32>, extra: impl IntoIterator<Item = u32>) {
    row.extend(extra);
    row.sort_unstable();
}

pub fn phi(t: &Tableau) -> Result<PhiTrace> {
    two_row_shape(t)?;
    let (top, bottom) = (&t.rows()[0], &t.rows()[1]);

    let removed = repeated_values(t);
    let moved: BTreeSet<u32> = bottom
        .windows(2)
        .filter(|w| removed.contains(&w[0]))
        .map(|w| w[1])
        .collect();

    let first: Vec<u32> = top.iter().copied().filter(|v| !removed.contains(v)).collect();
    let second: Vec<u32> = bottom.iter().copied().filter(|v| !moved.contains(v)).collect();

    // First column: the heads of the two remaining rows plus the moved
    // values, sorted; tails of the first two rows stay in place.
    let mut column = vec![first[0], second[0]];
    insert_sorted(&mut column, moved.iter().copied());
    let mut rows = vec![first, second];
    rows[0][0] = column[0];
    rows[1][0] = column[1];
    rows.extend(column[2..].iter().map(|&v| vec![v]));

    let output = Tableau::from_rows(rows)?;
    Ok(PhiTrace { removed, moved, input: t.clone(), output })
}

pub fn phi_inverse(s: &Tableau, lambda: TwoRowPartition, m: usize) -> Result<Tableau> {
    let shape = s.shape();
    if !s.is_standard() || !par_candidates(lambda, m)?.iter().any(|(_, mu)| *mu == shape) {
        return Err(Error::ShapeNotInPar {
            shape: shape.to_string(),
            lambda: lambda.to_string(),
            m,
        });
    }
    let rows = s.rows();
    let mut first = rows[0].clone();
    let mut second = rows[1].clone();
    let below: Vec<u32> = rows[2..].iter().flatten().copied().collect();
    insert_sorted(&mut second, below.iter().copied());

    let mut repeated: BTreeSet<u32> = second
        .windows(2)
        .filter(|w| below.contains(&w[1]))
        .map(|w| w[0])
        .collect();
    if repeated.len() < lambda.size() - m {
        repeated.insert(*second.last().expect("second row is nonempty"));
    }
    insert_sorted(&mut first, repeated);
    Tableau::from_rows(vec![first, second])
}

/// Shape of the image and its position among the standard tableaux of that
/// shape in enumeration order.
pub fn psi_image_index(t: &Tableau) -> Result<(Partition, usize)> {
    let out = phi(t)?.output;
    let shape = out.shape();
    let idx = enumerate_syt(&shape)
        .iter()
        .position(|s| *s == out)
        .ok_or_else(|| Error::Invariant(format!("image {out} of {t} is not standard")))?;
    Ok((shape, idx))
}
