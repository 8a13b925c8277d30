//! Machine check of the filtration of the gapless module by genome classes.
//!
//! For a two-row `lambda` and degree `m`, each family of classes is stacked
//! in a fixed linear order and pushed through the bijection into the
//! standard-tableau module of the family's shape. The checks are:
//!
//! * closure: each partial union spans a submodule;
//! * quotient isomorphism: on each new stage, the action on tableaux
//!   matches the action on their images modulo earlier stages;
//! * characteristic: descent sums over a family add up to the Schur
//!   function of its shape.
//!
//! Failures never raise; they are recorded with a witness.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bijection::phi;
use crate::combinatorics::{lambda_variant, lambda_variant_strict_guard, Family, Partition, TwoRowPartition};
use crate::error::Result;
use crate::genome::{
    all_linear_extensions, equivalence_classes, linear_extension, order_leq, order_leq_bottom_only,
    EquivClass,
};
use crate::hecke::{check_relations, g_module, x_module, Action, HeckeModule, RelationWitness};
use crate::qsym::{check_schur_expansion_at, descent_fundamental, schur_via_syt, ExpansionMismatch, QSymExpr};
use crate::tableau::Tableau;

/// Largest `n` for which every linear extension of the bottom-column
/// preorder is tried when requested.
pub const ALL_EXTENSIONS_MAX_N: usize = 6;

/// Cap on the number of orders tried per family.
pub const ALL_EXTENSIONS_LIMIT: usize = 50_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also try every linear extension of the bottom-column preorder.
    pub all_extensions: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Image,
    Closure,
    QuotientIso,
    C1,
    Relations,
    SchurExpansion,
}

/// First failing check, with enough context to reproduce it by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<Tableau>,
    pub detail: String,
}

impl Witness {
    fn new(check: Check, detail: impl Into<String>) -> Self {
        Witness {
            check,
            family: None,
            stage: None,
            generator: None,
            tableau: None,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Less,
    Greater,
    Tie,
}

/// A pair of distinct classes that the bottom-column preorder cannot tell
/// apart, and how the refined order places them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottomOnlyTie {
    pub classes: [usize; 2],
    pub refined: Comparison,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSearch {
    pub tried: usize,
    pub passing: usize,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub x: Family,
    pub shape: Partition,
    pub classes: Vec<EquivClass>,
    /// Positions into `classes`, earliest stage first.
    pub order: Vec<usize>,
    pub closure_ok: bool,
    pub quotient_iso_ok: bool,
    pub c1_ok: bool,
    /// The bijection maps the family onto the standard tableaux of `shape`.
    pub image_ok: bool,
    pub relations_ok: bool,
    pub bottom_only_ties: Vec<BottomOnlyTie>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_extensions: Option<ExtensionSearch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl FamilyReport {
    pub fn ok(&self) -> bool {
        self.closure_ok && self.quotient_iso_ok && self.c1_ok && self.image_ok && self.relations_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantReading {
    pub x: Family,
    pub shape: Option<Partition>,
    pub strict_guard_shape: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub lambda: TwoRowPartition,
    pub m: usize,
    pub families: Vec<FamilyReport>,
    pub schur_expansion_ok: bool,
    /// Relations of the module on increasing gapless tableaux.
    pub relations_ok: bool,
    /// Every class lies in a family with a nonempty shape.
    pub partition_ok: bool,
    pub variants: Vec<VariantReading>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// One family's data laid out for repeated filtration checks.
struct FamilyLayout<'a> {
    x: Family,
    module: HeckeModule,
    g: &'a HeckeModule,
    classes: Vec<&'a EquivClass>,
    /// For each class, the positions of its members in `g`'s basis.
    members: Vec<Vec<usize>>,
    /// Image position in `module` for each tableau of `g`, if in this family.
    image: Vec<Option<usize>>,
    /// Class (position in `classes`) of each basis element of `module`.
    class_of_image: Vec<usize>,
}

impl FamilyLayout<'_> {
    /// Runs closure and quotient checks for the stage order `order`,
    /// returning the flags and the first witness.
    fn check(&self, order: &[usize]) -> (bool, bool, Option<Witness>) {
        let mut stage_of = vec![0; self.classes.len()];
        for (stage, &c) in order.iter().enumerate() {
            stage_of[c] = stage;
        }
        let mut closure_ok = true;
        let mut quotient_ok = true;
        let mut witness: Option<Witness> = None;
        let mut record = |check, stage, i, t: &Tableau, detail: String| {
            if witness.is_none() {
                witness = Some(Witness {
                    check,
                    family: Some(self.x),
                    stage: Some(stage + 1),
                    generator: Some(i),
                    tableau: Some(t.clone()),
                    detail,
                });
            }
        };
        let basis = self.module.basis();
        for (stage, &c) in order.iter().enumerate() {
            for &tb in &self.members[c] {
                let t = &self.g.basis()[tb];
                let img = self.image[tb].expect("members of this family have images");
                for i in self.g.generators() {
                    let out = self.module.apply(i, Some(img));
                    let out_stage = out.map(|s| stage_of[self.class_of_image[s]]);

                    if out_stage.is_some_and(|s| s > stage) {
                        closure_ok = false;
                        record(
                            Check::Closure,
                            stage,
                            i,
                            t,
                            format!(
                                "pi_{i} sends {} to {}, which enters at stage {}",
                                basis[img],
                                basis[out.unwrap()],
                                out_stage.unwrap() + 1
                            ),
                        );
                    }

                    let ok = match self.g.act(i, tb) {
                        Action::Fixed => self.module.act(i, img) == Action::Fixed,
                        Action::Image(t2) => out.is_some() && out == self.image[t2],
                        Action::Zero => out_stage.is_none_or(|s| s < stage),
                    };
                    if !ok {
                        quotient_ok = false;
                        let image_desc = match out {
                            Some(s) => basis[s].to_string(),
                            None => "0".into(),
                        };
                        record(
                            Check::QuotientIso,
                            stage,
                            i,
                            t,
                            format!(
                                "pi_{i} acts on the tableau as {:?} but sends its image {} to {image_desc}",
                                self.g.act(i, tb),
                                basis[img]
                            ),
                        );
                    }
                }
            }
        }
        (closure_ok, quotient_ok, witness)
    }
}

fn compare(a: &EquivClass, b: &EquivClass) -> Comparison {
    match (order_leq(a, b), order_leq(b, a)) {
        (Ok(true), Ok(false)) => Comparison::Less,
        (Ok(false), Ok(true)) => Comparison::Greater,
        _ => Comparison::Tie,
    }
}

/// Verifies the filtration for `(lambda, m)`.
///
/// Returns `Err` only for out-of-range `m` or a broken internal invariant;
/// a mathematical failure comes back as a report with `verified = false`.
pub fn verify_theorem(lambda: TwoRowPartition, m: usize, opts: VerifyOptions) -> Result<FiltrationReport> {
    lambda.check_degree(m)?;
    let classes = equivalence_classes(lambda, m)?;
    let g = g_module(lambda, m)?;
    let mut witness: Option<Witness> = None;

    let relations_ok = match check_relations(&g) {
        Ok(()) => true,
        Err(w) => {
            witness.get_or_insert(relation_witness(&w, None));
            false
        }
    };
    let schur_expansion_ok = match check_schur_expansion_at(lambda, m) {
        Ok(()) => true,
        Err(e) => {
            witness.get_or_insert(expansion_witness(&e));
            false
        }
    };

    let class_of_tableau = {
        let mut v = vec![usize::MAX; g.dim()];
        for (k, c) in classes.iter().enumerate() {
            for t in &c.members {
                v[g.index_of(t).expect("classes partition the basis")] = k;
            }
        }
        v
    };
    let images: Vec<Tableau> = g
        .basis()
        .iter()
        .map(|t| phi(t).map(|tr| tr.output))
        .collect::<Result<_>>()?;

    let mut variants = Vec::new();
    let mut families = Vec::new();
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let allowed = crate::combinatorics::par_candidates(lambda, m)?;
    for x in Family::ALL {
        let shape = lambda_variant(lambda, m, x)?;
        variants.push(VariantReading {
            x,
            shape: shape.clone(),
            strict_guard_shape: lambda_variant_strict_guard(lambda, m, x)?,
        });
        let Some(mu) = shape.filter(|s| allowed.iter().any(|(_, p)| p == s)) else {
            continue;
        };
        let fam_idx: Vec<usize> = (0..classes.len()).filter(|&k| classes[k].family == x).collect();
        covered.extend(fam_idx.iter().copied());
        let report = verify_family(
            x,
            &mu,
            &classes,
            &fam_idx,
            &g,
            &images,
            &class_of_tableau,
            m,
            opts.all_extensions && lambda.size() <= ALL_EXTENSIONS_MAX_N,
        );
        if let Some(w) = &report.witness {
            witness.get_or_insert(w.clone());
        }
        families.push(report);
    }

    let partition_ok = covered.len() == classes.len();
    if !partition_ok {
        let orphan = (0..classes.len()).find(|k| !covered.contains(k)).unwrap();
        let mut w = Witness::new(Check::Image, "class lies in a family whose shape is empty");
        w.tableau = Some(classes[orphan].members[0].clone());
        witness.get_or_insert(w);
    }

    let verified = relations_ok && schur_expansion_ok && partition_ok && families.iter().all(FamilyReport::ok);
    Ok(FiltrationReport {
        lambda,
        m,
        families,
        schur_expansion_ok,
        relations_ok,
        partition_ok,
        variants,
        verified,
        witness,
    })
}

#[allow(clippy::too_many_arguments)]
fn verify_family(
    x: Family,
    mu: &Partition,
    all_classes: &[EquivClass],
    fam_idx: &[usize],
    g: &HeckeModule,
    images: &[Tableau],
    class_of_tableau: &[usize],
    m: usize,
    all_extensions: bool,
) -> FamilyReport {
    let module = x_module(mu);
    let classes: Vec<&EquivClass> = fam_idx.iter().map(|&k| &all_classes[k]).collect();
    let local: std::collections::HashMap<usize, usize> =
        fam_idx.iter().enumerate().map(|(l, &k)| (k, l)).collect();
    let mut witness = None;

    let relations_ok = match check_relations(&module) {
        Ok(()) => true,
        Err(w) => {
            witness.get_or_insert(relation_witness(&w, Some(x)));
            false
        }
    };

    // Images of the family must be exactly the basis of the module.
    let mut image = vec![None; g.dim()];
    let mut class_of_image = vec![usize::MAX; module.dim()];
    let mut members = vec![Vec::new(); classes.len()];
    let mut image_ok = true;
    for (tb, t) in g.basis().iter().enumerate() {
        let Some(&c) = local.get(&class_of_tableau[tb]) else {
            continue;
        };
        members[c].push(tb);
        match module.index_of(&images[tb]) {
            Some(s) if class_of_image[s] == usize::MAX => {
                image[tb] = Some(s);
                class_of_image[s] = c;
            }
            _ => {
                image_ok = false;
                let mut w = Witness::new(
                    Check::Image,
                    format!("image {} is not a fresh basis element of the shape {mu} module", images[tb]),
                );
                w.family = Some(x);
                w.tableau = Some(t.clone());
                witness.get_or_insert(w);
            }
        }
    }
    if class_of_image.contains(&usize::MAX) {
        image_ok = false;
        let mut w = Witness::new(Check::Image, format!("some standard tableau of shape {mu} has no preimage"));
        w.family = Some(x);
        witness.get_or_insert(w);
    }

    let family_char: QSymExpr = members
        .iter()
        .flatten()
        .map(|&tb| descent_fundamental(&g.basis()[tb], m))
        .sum();
    let c1_ok = family_char == schur_via_syt(mu);
    if !c1_ok {
        let mut w = Witness::new(Check::C1, format!("descent sum {family_char} differs from s{mu}"));
        w.family = Some(x);
        witness.get_or_insert(w);
    }

    let order = linear_extension(&classes);
    let (closure_ok, quotient_iso_ok, all_extensions, filtration_witness) = if image_ok {
        let layout = FamilyLayout { x, module, g, classes: classes.clone(), members, image, class_of_image };
        let (c, q, w) = layout.check(&order);
        let search = all_extensions.then(|| {
            let (orders, truncated) = all_linear_extensions(
                classes.len(),
                |a, b| order_leq_bottom_only(classes[a], classes[b]).unwrap_or(false),
                ALL_EXTENSIONS_LIMIT,
            );
            let mut passing = 0;
            let mut first_failing_order = None;
            for o in &orders {
                let (c, q, _) = layout.check(o);
                if c && q {
                    passing += 1;
                } else if first_failing_order.is_none() {
                    first_failing_order = Some(o.clone());
                }
            }
            ExtensionSearch { tried: orders.len(), passing, truncated, first_failing_order }
        });
        (c, q, search, w)
    } else {
        (false, false, None, None)
    };
    if let Some(w) = filtration_witness {
        witness.get_or_insert(w);
    }

    let mut bottom_only_ties = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            let ab = order_leq_bottom_only(classes[a], classes[b]).unwrap_or(false);
            let ba = order_leq_bottom_only(classes[b], classes[a]).unwrap_or(false);
            if ab && ba {
                bottom_only_ties.push(BottomOnlyTie {
                    classes: [a, b],
                    refined: compare(classes[a], classes[b]),
                });
            }
        }
    }

    FamilyReport {
        x,
        shape: mu.clone(),
        classes: classes.into_iter().cloned().collect(),
        order,
        closure_ok,
        quotient_iso_ok,
        c1_ok,
        image_ok,
        relations_ok,
        bottom_only_ties,
        all_extensions,
        witness,
    }
}

fn relation_witness(w: &RelationWitness, family: Option<Family>) -> Witness {
    Witness {
        check: Check::Relations,
        family,
        stage: None,
        generator: None,
        tableau: Some(w.tableau.clone()),
        detail: format!("{} fails", w.relation),
    }
}

fn expansion_witness(e: &ExpansionMismatch) -> Witness {
    Witness::new(
        Check::SchurExpansion,
        format!(
            "degree {}: coefficient of F{} is {} on the genomic side and {} on the Schur side",
            e.m, e.comp, e.genomic_coeff, e.schur_coeff
        ),
    )
}

/// Every `(lambda, m)` with `lambda` a two-row partition of `2..=n_max`
/// and `l_lambda <= m <= n`, in canonical order: by `n`, then increasing
/// first row, then `m`.
pub fn sweep_cases(n_max: usize) -> Vec<(TwoRowPartition, usize)> {
    (2..=n_max)
        .flat_map(TwoRowPartition::all_of_size)
        .flat_map(|l| (l.l_lambda()..=l.size()).map(move |m| (l, m)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionCheck {
    pub lambda: TwoRowPartition,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<ExpansionMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub cases: usize,
    pub verified_cases: usize,
    pub expansion_checks: Vec<ExpansionCheck>,
    pub reports: Vec<FiltrationReport>,
    pub all_verified: bool,
}

/// Runs [`verify_theorem`] on every case of [`sweep_cases`] and the full
/// Schur-expansion check on every shape. Cases run in parallel when the
/// `parallel` feature is on; results keep the canonical order.
pub fn sweep(n_max: usize, opts: VerifyOptions) -> Result<SweepReport> {
    let cases = sweep_cases(n_max);
    let shapes: Vec<TwoRowPartition> = (2..=n_max).flat_map(TwoRowPartition::all_of_size).collect();

    let run = |&(l, m): &(TwoRowPartition, usize)| verify_theorem(l, m, opts);
    let expand = |&l: &TwoRowPartition| {
        let r = crate::qsym::check_schur_expansion(l);
        ExpansionCheck { lambda: l, ok: r.is_ok(), mismatch: r.err() }
    };

    #[cfg(feature = "parallel")]
    let (reports, expansion_checks) = {
        use rayon::prelude::*;
        let reports = cases.par_iter().map(run).collect::<Result<Vec<_>>>()?;
        let checks: Vec<ExpansionCheck> = shapes.par_iter().map(expand).collect();
        (reports, checks)
    };
    #[cfg(not(feature = "parallel"))]
    let (reports, expansion_checks) = (
        cases.iter().map(run).collect::<Result<Vec<_>>>()?,
        shapes.iter().map(expand).collect::<Vec<_>>(),
    );

    let verified_cases = reports.iter().filter(|r| r.verified).count();
    let all_verified = verified_cases == reports.len() && expansion_checks.iter().all(|c| c.ok);
    Ok(SweepReport {
        n_max,
        cases: reports.len(),
        verified_cases,
        expansion_checks,
        reports,
        all_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two(a: usize, b: usize) -> TwoRowPartition {
        TwoRowPartition::new(a, b).unwrap()
    }

    fn members(f: &FamilyReport, stage: usize) -> Vec<String> {
        let mut v: Vec<String> = f.classes[f.order[stage]].members.iter().map(|t| t.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn verify_3_2_at_4() {
        let r = verify_theorem(two(3, 2), 4, VerifyOptions::default()).unwrap();
        assert!(r.verified, "{r:?}");
        assert_eq!(r.families.len(), 2);
        let f1 = &r.families[0];
        assert_eq!(f1.shape.parts(), &[2, 1, 1]);
        assert_eq!(members(f1, 0), vec!["1 2 3 / 2 4", "1 2 4 / 2 3"]);
        assert_eq!(members(f1, 1), vec!["1 2 3 / 3 4"]);
        let f2 = &r.families[1];
        assert_eq!(f2.shape.parts(), &[2, 2]);
        assert_eq!(f2.order.len(), 1);
    }

    #[test]
    fn verify_small_cases() {
        let r = verify_theorem(two(2, 2), 4, VerifyOptions::default()).unwrap();
        assert!(r.verified);
        assert_eq!(r.families.len(), 1);
        assert_eq!(r.families[0].classes.len(), 1);
        let r = verify_theorem(two(2, 1), 2, VerifyOptions::default()).unwrap();
        assert!(r.verified);
        assert_eq!(r.families[0].shape.parts(), &[1, 1]);
        assert!(verify_theorem(two(2, 1), 4, VerifyOptions::default()).is_err());
    }

    #[test]
    fn sweep_case_listing() {
        assert_eq!(sweep_cases(2), vec![(two(1, 1), 2)]);
        let s = sweep(4, VerifyOptions::default()).unwrap();
        assert!(s.all_verified);
        assert_eq!(s.cases, sweep_cases(4).len());
    }

    #[test]
    fn extension_search_finds_bad_orders_at_4_2() {
        let opts = VerifyOptions { all_extensions: true };
        let r = verify_theorem(two(4, 2), 5, opts).unwrap();
        assert!(r.verified);
        let f = r.families.iter().find(|f| !f.bottom_only_ties.is_empty()).unwrap();
        let search = f.all_extensions.as_ref().unwrap();
        assert!(search.tried > search.passing);
        assert!(search.passing >= 1);
    }

    #[test]
    fn report_json_has_schema_fields() {
        let r = verify_theorem(two(3, 2), 4, VerifyOptions::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["lambda"], serde_json::json!([3, 2]));
        assert_eq!(v["m"], 4);
        assert_eq!(v["verified"], true);
        assert_eq!(v["schur_expansion_ok"], true);
        let f = &v["families"][0];
        assert_eq!(f["x"], 1);
        assert_eq!(f["shape"], serde_json::json!([2, 1, 1]));
        for k in ["closure_ok", "quotient_iso_ok", "c1_ok"] {
            assert_eq!(f[k], true);
        }
        assert!(f["classes"][0]["members"].is_array());
        assert!(f["classes"][0]["key"][0]["boxes"].is_array());
        assert!(f["classes"][0]["key"][0]["path"][0].is_array());
        assert!(f["order"].is_array());
    }
}
