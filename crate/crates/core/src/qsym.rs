//! Exact integer combinations of fundamental quasisymmetric functions.

use std::collections::{btree_map, BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinatorics::{comp_of, par_candidates, set_of, Composition, Partition, TwoRowPartition};
use crate::tableau::{descent_data, enumerate_iglt, enumerate_syt, Tableau};

/// Finite integer combination of `F_alpha`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymExpr {
    terms: BTreeMap<Composition, i64>,
}

impl QSymExpr {
    pub fn zero() -> Self {
        QSymExpr::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(alpha) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.terms.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Composition::size).collect()
    }

    /// The common degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.len() {
            1 => d.into_iter().next(),
            _ => None,
        }
    }

    pub fn component(&self, degree: usize) -> QSymExpr {
        QSymExpr {
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.size() == degree)
                .map(|(a, &c)| (a.clone(), c))
                .collect(),
        }
    }

    /// First composition (lexicographically) where the two sides differ,
    /// with the coefficients on each side.
    pub fn first_difference(&self, other: &QSymExpr) -> Option<(Composition, i64, i64)> {
        let keys: BTreeSet<&Composition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|a| {
            let (l, r) = (self.coeff(a), other.coeff(a));
            (l != r).then(|| (a.clone(), l, r))
        })
    }
}

impl AddAssign<&QSymExpr> for QSymExpr {
    fn add_assign(&mut self, rhs: &QSymExpr) {
        for (a, &c) in &rhs.terms {
            self.add_term(a.clone(), c);
        }
    }
}

impl Add for QSymExpr {
    type Output = QSymExpr;

    fn add(mut self, rhs: QSymExpr) -> QSymExpr {
        self += &rhs;
        self
    }
}

impl Neg for QSymExpr {
    type Output = QSymExpr;

    fn neg(mut self) -> QSymExpr {
        self.terms.values_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Sub for QSymExpr {
    type Output = QSymExpr;

    fn sub(self, rhs: QSymExpr) -> QSymExpr {
        self + (-rhs)
    }
}

impl std::iter::Sum for QSymExpr {
    fn sum<I: Iterator<Item = QSymExpr>>(iter: I) -> QSymExpr {
        iter.fold(QSymExpr::zero(), |acc, e| acc + e)
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            write!(f, "{sign}")?;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "F{a}")?;
        }
        Ok(())
    }
}

/// Serializes as `[{"comp":[...],"coeff":c}, ...]` sorted by composition.
impl Serialize for QSymExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            comp: &'a Composition,
            coeff: i64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (comp, &coeff) in &self.terms {
            seq.serialize_element(&Term { comp, coeff })?;
        }
        seq.end()
    }
}

pub fn fundamental(alpha: Composition) -> QSymExpr {
    let mut e = QSymExpr::zero();
    e.add_term(alpha, 1);
    e
}

/// `F_{comp(Des(T))}` of degree `degree` (the maximum entry of `t`).
pub fn descent_fundamental(t: &Tableau, degree: usize) -> QSymExpr {
    let des: BTreeSet<usize> = descent_data(t).descents.iter().map(|&d| d as usize).collect();
    fundamental(comp_of(&des, degree).expect("descents lie in [1, max-1]"))
}

/// `s_mu` as the descent sum over standard tableaux of shape `mu`.
pub fn schur_via_syt(mu: &Partition) -> QSymExpr {
    let n = mu.size();
    enumerate_syt(mu).iter().map(|s| descent_fundamental(s, n)).sum()
}

/// Degree-`m` component of the genomic Schur function.
pub fn genomic_component(lambda: TwoRowPartition, m: usize) -> QSymExpr {
    enumerate_iglt(lambda, m).iter().map(|t| descent_fundamental(t, m)).sum()
}

/// Nonzero homogeneous components, ascending in degree.
pub fn genomic_schur(lambda: TwoRowPartition) -> Vec<(usize, QSymExpr)> {
    (1..=lambda.size())
        .map(|m| (m, genomic_component(lambda, m)))
        .filter(|(_, e)| !e.is_zero())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionMismatch {
    pub m: usize,
    pub comp: Composition,
    pub genomic_coeff: i64,
    pub schur_coeff: i64,
}

/// Checks every degree component against the sum of `s_mu` over the
/// candidate shapes, returning the first mismatch.
pub fn check_schur_expansion(lambda: TwoRowPartition) -> Result<(), ExpansionMismatch> {
    (1..=lambda.size()).try_for_each(|m| check_schur_expansion_at(lambda, m))
}

/// Single-degree form of [`check_schur_expansion`]; degrees below
/// `l_lambda` compare against zero.
pub fn check_schur_expansion_at(lambda: TwoRowPartition, m: usize) -> Result<(), ExpansionMismatch> {
    let lhs = genomic_component(lambda, m);
    let rhs: QSymExpr = if m < lambda.l_lambda() || m > lambda.size() {
        QSymExpr::zero()
    } else {
        par_candidates(lambda, m)
            .expect("degree within range")
            .iter()
            .map(|(_, mu)| schur_via_syt(mu))
            .sum()
    };
    match lhs.first_difference(&rhs) {
        Some((comp, genomic_coeff, schur_coeff)) => {
            Err(ExpansionMismatch { m, comp, genomic_coeff, schur_coeff })
        }
        None => Ok(()),
    }
}

/// Polynomial in a fixed number of variables, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MonomialPoly {
    pub fn zero(n_vars: usize) -> Self {
        MonomialPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        let slot = self.terms.entry(exponents.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exponents);
        }
    }

    /// Exchanges variables `x_j` and `x_{j+1}` (1-based `j`).
    pub fn swap_variables(&self, j: usize) -> MonomialPoly {
        let mut out = MonomialPoly::zero(self.n_vars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e.swap(j - 1, j);
            out.terms.insert(e, c);
        }
        out
    }

    /// True when invariant under every adjacent variable exchange.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n_vars).all(|j| self.swap_variables(j) == *self)
    }
}

/// Specializes to `x_1..x_N` (all later variables zero).
pub fn expand_monomials(expr: &QSymExpr, n_vars: usize) -> MonomialPoly {
    let mut poly = MonomialPoly::zero(n_vars);
    for (alpha, coeff) in expr.terms() {
        let n = alpha.size();
        let strict = set_of(alpha);
        let mut exps = vec![0u32; n_vars];
        // Weakly increasing index sequences with strict steps after each
        // position in set(alpha).
        #[allow(clippy::too_many_arguments)]
        fn go(
            pos: usize,
            lo: usize,
            n: usize,
            n_vars: usize,
            strict: &BTreeSet<usize>,
            exps: &mut Vec<u32>,
            coeff: i64,
            poly: &mut MonomialPoly,
        ) {
            if pos == n {
                poly.add_term(exps.clone(), coeff);
                return;
            }
            for v in lo..n_vars {
                exps[v] += 1;
                let next = if strict.contains(&(pos + 1)) { v + 1 } else { v };
                go(pos + 1, next, n, n_vars, strict, exps, coeff, poly);
                exps[v] -= 1;
            }
        }
        go(0, 0, n, n_vars, &strict, &mut exps, coeff, &mut poly);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn f(v: &[usize]) -> QSymExpr {
        fundamental(comp(v))
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn two(a: usize, b: usize) -> TwoRowPartition {
        TwoRowPartition::new(a, b).unwrap()
    }

    #[test]
    fn fundamentals() {
        let unit = fundamental(Composition::empty());
        assert_eq!(unit.degree(), Some(0));
        assert_eq!(f(&[2, 1]).len(), 1);
        assert_eq!((f(&[2, 1]) + f(&[1, 2])).len(), 2);
        assert!((f(&[2, 1]) - f(&[2, 1])).is_zero());
        let mixed = f(&[2]) + f(&[1, 2]);
        assert_eq!(mixed.degree(), None);
        assert_eq!(mixed.component(3), f(&[1, 2]));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_via_syt(&part(&[2, 1])), f(&[2, 1]) + f(&[1, 2]));
        assert_eq!(schur_via_syt(&part(&[1, 1])), f(&[1, 1]));
        assert_eq!(schur_via_syt(&part(&[2, 2])), f(&[2, 2]) + f(&[1, 2, 1]));
    }

    #[test]
    fn genomic_examples() {
        assert_eq!(genomic_component(two(2, 1), 2), f(&[1, 1]));
        assert_eq!(genomic_component(two(2, 2), 3), f(&[1, 1, 1]));
        assert_eq!(genomic_component(two(2, 1), 3), f(&[2, 1]) + f(&[1, 2]));
        assert!(genomic_component(two(2, 1), 1).is_zero());
        let degs = |l| genomic_schur(l).iter().map(|(m, _)| *m).collect::<Vec<_>>();
        assert_eq!(degs(two(2, 1)), vec![2, 3]);
        assert_eq!(degs(two(2, 2)), vec![3, 4]);
        assert_eq!(degs(two(1, 1)), vec![2]);
    }

    #[test]
    fn expansion_examples() {
        assert!(check_schur_expansion(two(2, 1)).is_ok());
        assert!(check_schur_expansion(two(2, 2)).is_ok());
        assert_eq!(
            genomic_component(two(3, 2), 4),
            schur_via_syt(&part(&[2, 1, 1])) + schur_via_syt(&part(&[2, 2]))
        );
    }

    #[test]
    fn monomial_examples() {
        let p = expand_monomials(&f(&[1, 1]), 2);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(&[1u32, 1][..], 1)]);
        let p = expand_monomials(&f(&[2]), 2);
        assert_eq!(p.coeff(&[2, 0]), 1);
        assert_eq!(p.coeff(&[1, 1]), 1);
        assert_eq!(p.coeff(&[0, 2]), 1);
        assert_eq!(p.terms().count(), 3);
        assert!(expand_monomials(&f(&[1, 1, 1]), 2).is_zero());
        // F_(1,2) alone is quasisymmetric but not symmetric.
        assert!(!expand_monomials(&f(&[1, 2]), 3).is_symmetric());
        assert!(expand_monomials(&schur_via_syt(&part(&[2, 1])), 3).is_symmetric());
    }

    #[test]
    fn json_shape() {
        let e = f(&[1, 2]) + f(&[2, 1]);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"comp":[1,2],"coeff":1},{"comp":[2,1],"coeff":1}]"#
        );
        assert_eq!(e.to_string(), "F(1,2)+F(2,1)");
    }
}
