//! Finite 0-Hecke modules whose generators send each basis tableau to zero,
//! to itself, or to another basis tableau.

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::combinatorics::{Partition, TwoRowPartition};
use crate::error::{Error, Result};
use crate::qsym::{descent_fundamental, QSymExpr};
use crate::tableau::{descent_data, enumerate_iglt, enumerate_syt, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Zero,
    Fixed,
    Image(usize),
}

impl Serialize for Action {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Action::Zero => s.serialize_str("zero"),
            Action::Fixed => s.serialize_str("fixed"),
            Action::Image(t) => s.serialize_u64(*t as u64),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HeckeModule {
    degree: usize,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    /// `action[i - 1][b]` is the image of basis element `b` under `pi_i`.
    action: Vec<Vec<Action>>,
}

impl HeckeModule {
    fn build(
        degree: usize,
        basis: Vec<Tableau>,
        rule: impl Fn(u32, &Tableau) -> Option<Action>,
    ) -> Result<Self> {
        let index: HashMap<Tableau, usize> =
            basis.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let mut action = Vec::with_capacity(degree.saturating_sub(1));
        for i in 1..degree as u32 {
            let row = basis
                .iter()
                .enumerate()
                .map(|(b, t)| match rule(i, t) {
                    Some(a) => Ok(a),
                    None => {
                        let swapped = t.swap_values(i);
                        match index.get(&swapped) {
                            Some(&target) if target != b => Ok(Action::Image(target)),
                            _ => Err(Error::Invariant(format!(
                                "pi_{i} sends {t} to {swapped}, which is not a basis element"
                            ))),
                        }
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            action.push(row);
        }
        Ok(HeckeModule { degree, basis, index, action })
    }

    /// Number of strands; generators are `pi_1 .. pi_{degree-1}`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn generators(&self) -> impl Iterator<Item = u32> {
        1..self.degree as u32
    }

    pub fn act(&self, i: u32, b: usize) -> Action {
        self.action[i as usize - 1][b]
    }

    /// `pi_i` applied to a basis element or to zero (`None`).
    pub fn apply(&self, i: u32, v: Option<usize>) -> Option<usize> {
        let b = v?;
        match self.act(i, b) {
            Action::Zero => None,
            Action::Fixed => Some(b),
            Action::Image(t) => Some(t),
        }
    }

    /// Overwrites one entry of the action table.
    pub fn set_action(&mut self, i: u32, b: usize, a: Action) -> Result<()> {
        if i == 0 || i as usize >= self.degree {
            return Err(Error::OutOfRange {
                what: "generator",
                value: i as i64,
                lo: 1,
                hi: self.degree as i64 - 1,
            });
        }
        if let Action::Image(t) = a {
            if t >= self.dim() || t == b {
                return Err(Error::Invariant(format!("invalid image target {t} for basis element {b}")));
            }
        }
        self.action[i as usize - 1][b] = a;
        Ok(())
    }
}

/// `{"m":..,"basis":[..],"action":{"i":{"b":"zero"|"fixed"|target}}}`
impl Serialize for HeckeModule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [Action]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (b, a) in self.0.iter().enumerate() {
                    map.serialize_entry(&b.to_string(), a)?;
                }
                map.end()
            }
        }
        struct Table<'a>(&'a [Vec<Action>]);
        impl Serialize for Table<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, row) in self.0.iter().enumerate() {
                    map.serialize_entry(&(k + 1).to_string(), &Row(row))?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("m", &self.degree)?;
        map.serialize_entry("basis", &self.basis)?;
        map.serialize_entry("action", &Table(&self.action))?;
        map.end()
    }
}

/// The module on standard tableaux of shape `mu`.
pub fn x_module(mu: &Partition) -> HeckeModule {
    let basis = enumerate_syt(mu);
    HeckeModule::build(mu.size(), basis, |i, s| {
        let a = s.positions(i)[0];
        let b = s.positions(i + 1)[0];
        if a.col == b.col {
            Some(Action::Zero)
        } else if a.col < b.col {
            Some(Action::Fixed)
        } else {
            None
        }
    })
    .expect("swapping i and i+1 when i is strictly right of i+1 keeps a tableau standard")
}

/// The module on increasing gapless tableaux of shape `lambda`
/// with maximum entry `m`.
pub fn g_module(lambda: TwoRowPartition, m: usize) -> Result<HeckeModule> {
    lambda.check_degree(m)?;
    let basis = enumerate_iglt(lambda, m);
    HeckeModule::build(m, basis, |i, t| {
        let d = descent_data(t);
        if !d.descents.contains(&i) {
            Some(Action::Fixed)
        } else if d.attacking.contains(&i) {
            Some(Action::Zero)
        } else {
            None
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Relation {
    Idempotent { i: u32 },
    Braid { i: u32 },
    Commute { i: u32, j: u32 },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Idempotent { i } => write!(f, "pi_{i}^2 = pi_{i}"),
            Relation::Braid { i } => {
                let j = i + 1;
                write!(f, "pi_{i} pi_{j} pi_{i} = pi_{j} pi_{i} pi_{j}")
            }
            Relation::Commute { i, j } => write!(f, "pi_{i} pi_{j} = pi_{j} pi_{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationWitness {
    #[serde(flatten)]
    pub relation: Relation,
    pub basis_index: usize,
    pub tableau: Tableau,
}

/// Checks the defining relations of `H_m(0)` on every basis element by
/// composing action tables.
pub fn check_relations(module: &HeckeModule) -> std::result::Result<(), RelationWitness> {
    let word = |gens: &[u32], b: usize| -> Option<usize> {
        // Rightmost generator acts first.
        gens.iter().rev().try_fold(b, |v, &g| module.apply(g, Some(v)))
    };
    let fail = |relation, b: usize| RelationWitness {
        relation,
        basis_index: b,
        tableau: module.basis[b].clone(),
    };
    let gens: Vec<u32> = module.generators().collect();
    for b in 0..module.dim() {
        for &i in &gens {
            if word(&[i, i], b) != word(&[i], b) {
                return Err(fail(Relation::Idempotent { i }, b));
            }
            if i + 1 < module.degree as u32 && word(&[i, i + 1, i], b) != word(&[i + 1, i, i + 1], b) {
                return Err(fail(Relation::Braid { i }, b));
            }
            for &j in gens.iter().filter(|&&j| j >= i + 2) {
                if word(&[i, j], b) != word(&[j, i], b) {
                    return Err(fail(Relation::Commute { i, j }, b));
                }
            }
        }
    }
    Ok(())
}

/// Sum of `F_{comp(Des(b))}` over the basis.
pub fn characteristic_by_descents(module: &HeckeModule) -> QSymExpr {
    module.basis.iter().map(|b| descent_fundamental(b, module.degree)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::{genomic_component, schur_via_syt};

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn two(a: usize, b: usize) -> TwoRowPartition {
        TwoRowPartition::new(a, b).unwrap()
    }

    fn image(m: &HeckeModule, i: u32, s: &str) -> Option<String> {
        let b = m.index_of(&t(s)).unwrap();
        m.apply(i, Some(b)).map(|k| m.basis()[k].to_string())
    }

    #[test]
    fn standard_tableau_action() {
        let x = x_module(&part(&[2, 2]));
        assert_eq!(image(&x, 1, "1 3 / 2 4"), None);
        assert_eq!(image(&x, 2, "1 2 / 3 4").as_deref(), Some("1 3 / 2 4"));
        assert_eq!(image(&x, 1, "1 2 / 3 4").as_deref(), Some("1 2 / 3 4"));
        let x = x_module(&part(&[2, 1, 1]));
        assert_eq!(image(&x, 3, "1 3 / 2 / 4").as_deref(), Some("1 4 / 2 / 3"));
    }

    #[test]
    fn gapless_tableau_action() {
        let g = g_module(two(2, 1), 2).unwrap();
        assert_eq!(image(&g, 1, "1 2 / 2"), None);
        let g = g_module(two(3, 2), 5).unwrap();
        assert_eq!(image(&g, 4, "1 3 4 / 2 5").as_deref(), Some("1 3 5 / 2 4"));
        let g = g_module(two(3, 2), 4).unwrap();
        assert_eq!(image(&g, 3, "1 2 3 / 2 4").as_deref(), Some("1 2 4 / 2 3"));
        assert!(g_module(two(3, 2), 2).is_err());
    }

    #[test]
    fn relations_hold() {
        assert!(check_relations(&x_module(&part(&[2, 2]))).is_ok());
        assert!(check_relations(&g_module(two(4, 4), 6).unwrap()).is_ok());
    }

    #[test]
    fn corrupted_table_fails() {
        let mut x = x_module(&part(&[2, 2]));
        let b = x.index_of(&t("1 2 / 3 4")).unwrap();
        // pi_2 kills 12/34 and sends 13/24 there, so pi_2^2 != pi_2 on 13/24.
        x.set_action(2, b, Action::Zero).unwrap();
        let c = x.index_of(&t("1 3 / 2 4")).unwrap();
        x.set_action(2, c, Action::Image(b)).unwrap();
        let w = check_relations(&x).unwrap_err();
        assert!(matches!(w.relation, Relation::Idempotent { i: 2 }));
        assert!(x.set_action(2, c, Action::Image(c)).is_err());
        assert!(x.set_action(4, c, Action::Zero).is_err());
    }

    #[test]
    fn characteristics() {
        assert_eq!(characteristic_by_descents(&x_module(&part(&[2, 1]))), schur_via_syt(&part(&[2, 1])));
        let g = g_module(two(2, 2), 3).unwrap();
        assert_eq!(characteristic_by_descents(&g), genomic_component(two(2, 2), 3));
        assert_eq!(
            characteristic_by_descents(&g_module(two(2, 1), 3).unwrap()),
            characteristic_by_descents(&x_module(&part(&[2, 1])))
        );
    }

    #[test]
    fn json_dump() {
        let x = x_module(&part(&[1, 1]));
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"m":2,"basis":["1 / 2"],"action":{"1":{"0":"zero"}}}"#
        );
        let g = g_module(two(3, 2), 4).unwrap();
        let v: serde_json::Value = serde_json::to_value(&g).unwrap();
        assert_eq!(v["action"]["3"]["0"], 2);
        assert_eq!(v["action"]["1"]["0"], "zero");
    }
}
