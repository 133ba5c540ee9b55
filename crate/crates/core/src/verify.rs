//! The table-verification harness and the abelian oracle equivalence.

use std::sync::Arc;
use std::time::Instant;

use crate::catalog::{catalog_get, Params};
use crate::chartab::CharacterTable;
use crate::closed_forms::{self, ExpectedRow, TableId};
use crate::config::Config;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::presentation::{CoveringSpec, PcPresentation};
use crate::report::{RowStatus, VerificationReport, VerifyRow, SCHEMA_VERSION};
use crate::tau::{self, TauReport};
use crate::word::NormalWord;

/// Values computed for one catalog entry.
#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub tau: TauReport,
    pub tau_irr: TauReport,
    pub classes: usize,
}

/// Run the generic pipeline on a catalog entry.
pub fn eval_entry(name: &str, p: u64, k: u32, cfg: &Config) -> Result<EntryOutcome> {
    let entry = catalog_get(name, &Params { p, k }, cfg)?;
    let cov = entry.load_covering(cfg)?;
    let table = CharacterTable::compute(&cov.gstar, cfg)?;
    let tau = tau::tau(&cov, &table, cfg)?;
    let tau_irr = tau::tau_irr(&cov, &table, cfg)?;
    if !tau::verify_witness(&cov, &table, &tau)? || !tau::verify_witness(&cov, &table, &tau_irr)? {
        return Err(Error::Invalid(format!(
            "witness re-verification failed for `{name}`"
        )));
    }
    Ok(EntryOutcome {
        tau,
        tau_irr,
        classes: table.num_classes,
    })
}

/// How a table row is verified.
enum RowPlan {
    /// run these catalog entries; all must agree with the row
    Coverings(Vec<&'static str>),
    /// the row value is a closed form; note explains which
    ClosedForm(&'static str),
    /// no covering committed at this order; always skipped with reason
    Unsupported(&'static str),
}

fn plan_for(table: TableId, row: &str) -> RowPlan {
    use RowPlan::*;
    match (table, row) {
        (TableId::P3, "Q8") => Coverings(vec!["Q8"]),
        (TableId::P3, "D8") => Coverings(vec!["D8"]),
        (TableId::P3, "Phi2(21)") => Coverings(vec!["Phi2(21)"]),
        (TableId::P3, "Phi2(1^3)") => Coverings(vec!["Phi2(1^3)"]),
        (TableId::TwoTo4, name) if name.starts_with("16#") => {
            let stat: &'static str = match name {
                "16#3" => "16#3",
                "16#4" => "16#4",
                "16#6" => "16#6",
                "16#7" => "16#7",
                "16#8" => "16#8",
                "16#9" => "16#9",
                "16#11" => "16#11",
                "16#12" => "16#12",
                "16#13" => "16#13",
                _ => return Unsupported("unknown order-16 row"),
            };
            Coverings(vec![stat])
        }
        (TableId::P4, "Phi2(211)a") => Coverings(vec!["Phi2(211)a"]),
        (TableId::P4, "Phi2(1^4)") => Coverings(vec!["Phi2(1^4)"]),
        (TableId::P4, "Phi2(31)") => Coverings(vec!["Phi2(31)"]),
        (TableId::P4, "Phi2(22)") => Coverings(vec!["Phi2(22)"]),
        (TableId::P4, "Phi2(211)b") => Coverings(vec!["Phi2(211)b"]),
        (TableId::P4, "Phi2(211)c") => Coverings(vec!["Phi2(211)c"]),
        (TableId::P4, "Phi3(211)a") => Coverings(vec!["Phi3(211)a"]),
        (TableId::P4, "Phi3(211)br") => Coverings(vec!["Phi3(211)b1", "Phi3(211)bnu"]),
        (TableId::P4, "Phi3(1^4)") => Coverings(vec!["Phi3(1^4)"]),
        (TableId::P5, "Phi5(2111)") | (TableId::P5, "Phi5(1^5)") => {
            ClosedForm("extra-special closed form 2p^{n/2}, n = 2")
        }
        (TableId::P5, "Phi9(1^5)") => Coverings(vec!["Phi9(1^5)"]),
        (TableId::P5, "Phi2(221)c") => Coverings(vec!["Phi2(221)c"]),
        (TableId::P5, "Phi6(2111)a") => Coverings(vec!["Phi6(2111)a"]),
        (TableId::P5, "Phi6(1^5)") => Coverings(vec!["Phi6(1^5)"]),
        (TableId::P5, "Phi10(1^5)") => Coverings(vec!["Phi10(1^5)"]),
        (TableId::P5, "Phi4(221)f0") => Coverings(vec!["Phi4(221)f0"]),
        (TableId::P5, "Phi4(221)dhalf") => Coverings(vec!["Phi4(221)dhalf"]),
        (TableId::P5, _) => {
            Unsupported("no covering presentation committed for this family at desk scale")
        }
        _ => Unsupported("row not recognized for this table"),
    }
}

/// Groups of order above this are not even built at the default budget;
/// their rows are reported as skipped.
fn build_cap(cfg: &Config) -> usize {
    if cfg.class_budget > Config::default().class_budget {
        1_000_000
    } else {
        100_000
    }
}

fn closed_form_values(table: TableId, row: &str, p: u64) -> Option<(u64, Option<u64>)> {
    match (table, row) {
        (TableId::P5, "Phi5(2111)") | (TableId::P5, "Phi5(1^5)") => {
            Some((closed_forms::tau_extraspecial(p, 2).ok()?, None))
        }
        (TableId::P3, "Phi2(1^3)") => {
            let h = closed_forms::heisenberg_values(p, 1, 1).ok()?;
            Some((h.tau, h.tau_irr))
        }
        _ => None,
    }
}

fn covering_order_of(name: &str, p: u64, cfg: &Config) -> Option<u128> {
    let entry = catalog_get(name, &Params { p, k: 1 }, cfg).ok()?;
    Some(match &entry.covering {
        Some(spec) => spec.gstar.order(),
        None => entry.group.order(),
    })
}

fn verify_row(table: TableId, row: &ExpectedRow, p: u64, cfg: &Config) -> VerifyRow {
    let started = Instant::now();
    let expected_tau = row.tau.eval(p);
    let expected_irr = row.tau_irr.map(|e| e.eval(p));
    let mut out = VerifyRow {
        group: row.name.to_string(),
        expected_tau,
        expected_tau_irr: expected_irr,
        computed_tau: None,
        computed_tau_irr: None,
        exact: false,
        status: RowStatus::SkippedWithReason,
        note: row.note.map(|s| s.to_string()),
        millis: 0,
    };
    let add_note = |out: &mut VerifyRow, s: String| {
        out.note = Some(match out.note.take() {
            Some(prev) => format!("{prev}; {s}"),
            None => s,
        });
    };

    match plan_for(table, row.name) {
        RowPlan::Unsupported(reason) => {
            add_note(&mut out, reason.to_string());
        }
        RowPlan::ClosedForm(which) => {
            if let Some((t, ti)) = closed_form_values(table, row.name, p) {
                out.computed_tau = Some(t);
                out.computed_tau_irr = ti;
                out.exact = true;
                out.status = if t == expected_tau && ti == expected_irr {
                    RowStatus::Match
                } else {
                    RowStatus::Mismatch
                };
                add_note(&mut out, format!("via {which}"));
            } else {
                add_note(&mut out, "closed form not applicable".to_string());
            }
        }
        RowPlan::Coverings(entries) => {
            let cap = build_cap(cfg);
            let mut all_exact = true;
            let mut statuses: Vec<RowStatus> = Vec::new();
            for name in entries {
                match covering_order_of(name, p, cfg) {
                    Some(ord) if ord > cap as u128 => {
                        statuses.push(RowStatus::SkippedWithReason);
                        add_note(
                            &mut out,
                            format!("{name}: covering order {ord} above the build cap {cap}"),
                        );
                        continue;
                    }
                    None => {
                        statuses.push(RowStatus::SkippedWithReason);
                        add_note(&mut out, format!("{name}: catalog instantiation failed"));
                        continue;
                    }
                    _ => {}
                }
                match eval_entry(name, p, 1, cfg) {
                    Ok(o) => {
                        out.computed_tau = o.tau.value;
                        out.computed_tau_irr = o.tau_irr.value;
                        let exact = o.tau.exact && (o.tau_irr.exact || o.tau_irr.value.is_some());
                        all_exact &= exact;
                        let values_match = o.tau.value == Some(expected_tau)
                            && o.tau_irr.value == expected_irr;
                        statuses.push(if values_match && exact {
                            RowStatus::Match
                        } else if values_match {
                            RowStatus::BoundOnly
                        } else {
                            add_note(
                                &mut out,
                                format!(
                                    "{name}: computed (tau {:?}, tau_irr {:?}) vs expected ({}, {:?}); witness {:?}",
                                    o.tau.value,
                                    o.tau_irr.value,
                                    expected_tau,
                                    expected_irr,
                                    o.tau.witness.as_ref().map(|w| &w.constituents),
                                ),
                            );
                            RowStatus::Mismatch
                        });
                    }
                    Err(Error::Budget { detail }) => {
                        statuses.push(RowStatus::SkippedWithReason);
                        add_note(&mut out, format!("{name}: {detail}"));
                    }
                    Err(e) => {
                        statuses.push(RowStatus::Mismatch);
                        add_note(&mut out, format!("{name}: error {e}"));
                    }
                }
            }
            out.exact = all_exact;
            out.status = if statuses.iter().any(|s| *s == RowStatus::Mismatch) {
                RowStatus::Mismatch
            } else if statuses.iter().any(|s| *s == RowStatus::SkippedWithReason) {
                RowStatus::SkippedWithReason
            } else if statuses.iter().any(|s| *s == RowStatus::BoundOnly) {
                RowStatus::BoundOnly
            } else if statuses.iter().all(|s| *s == RowStatus::Match) && !statuses.is_empty() {
                RowStatus::Match
            } else {
                RowStatus::SkippedWithReason
            };
        }
    }
    out.millis = started.elapsed().as_millis();
    out
}

/// Verify one of the embedded result tables at a prime. Every expected row
/// appears in the output; rows that cannot be computed at the configured
/// budgets are marked skipped-with-reason, never dropped.
pub fn verify_table(table: TableId, p: u64, cfg: &Config) -> Result<VerificationReport> {
    let rows = closed_forms::table_expected(table, p)?;
    let mut out_rows = Vec::with_capacity(rows.len());
    for row in &rows {
        out_rows.push(verify_row(table, row, p, cfg));
    }
    let matched = out_rows
        .iter()
        .filter(|r| matches!(r.status, RowStatus::Match | RowStatus::BoundOnly))
        .count();
    let mismatched = out_rows
        .iter()
        .filter(|r| r.status == RowStatus::Mismatch)
        .count();
    let skipped = out_rows
        .iter()
        .filter(|r| r.status == RowStatus::SkippedWithReason)
        .count();
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        table: format!("{table:?}"),
        p,
        rows: out_rows,
        matched,
        mismatched,
        skipped,
    })
}

// --------------------------------------------------------------- abelian

/// All partitions (nonincreasing exponent lists) with p^(sum) <= max_order.
pub fn abelian_exponent_lists(p: u64, max_order: u128) -> Vec<Vec<u32>> {
    let mut max_total = 0u32;
    while (p as u128).pow(max_total + 1) <= max_order {
        max_total += 1;
    }
    let mut out = Vec::new();
    fn rec(total: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        let hi = max_part.min(total);
        for part in (1..=hi).rev() {
            cur.push(part);
            rec(total - part, part, cur, out);
            cur.pop();
        }
    }
    for total in 1..=max_total {
        rec(total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Central extension of the abelian group prod Z/p^{k_i} realizing one
/// commutator matrix c (entries are exponents of the central z, whose
/// order is the lcm of the pairwise gcds); the covering kernel is z.
fn form_covering(
    p: u64,
    exps: &[u32],
    zorder: u64,
    c: &[Vec<u64>],
    cfg: &Config,
) -> Result<CoveringSpec> {
    let n = exps.len();
    let mut gens: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    gens.push("z".into());
    let mut orders: Vec<u32> = exps.iter().map(|&k| p.pow(k) as u32).collect();
    orders.push(zorder as u32);
    let mut conjs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = c[j][i] % zorder;
            if e != 0 {
                let mut w = vec![0u32; n + 1];
                w[j] = 1;
                w[n] = e as u32;
                conjs.push((i, j, NormalWord(w)));
            }
        }
    }
    let pres = PcPresentation::new("formext", gens, orders, Vec::new(), conjs, cfg)?;
    CoveringSpec::new(pres, n, "ab")
}

/// Generic (tau, tau_irr) of an abelian p-group. The trivial cocycle class
/// is searched on the group's own characters; every nontrivial class is
/// reached through the central extension realizing its commutator matrix,
/// so the minima over all coverings are exact.
pub fn generic_abelian_values(
    p: u64,
    exps: &[u32],
    cfg: &Config,
) -> Result<(u64, Option<u64>, usize)> {
    if exps.is_empty() {
        return Ok((1, Some(1), 0));
    }
    let n = exps.len();
    let mut best_tau: Option<u64> = None;
    let mut best_irr: Option<u64> = None;

    // trivial class: ordinary characters of G itself
    let g = Arc::new(abelian_group(p, exps, cfg)?);
    let triv = Covering::trivial(g);
    let t = CharacterTable::compute(&triv.gstar, cfg)?;
    {
        let tr = tau::tau(&triv, &t, cfg)?;
        let ti = tau::tau_irr(&triv, &t, cfg)?;
        if let Some(v) = tr.value {
            best_tau = Some(best_tau.map_or(v, |b: u64| b.min(v)));
        }
        if let Some(v) = ti.value {
            best_irr = Some(best_irr.map_or(v, |b: u64| b.min(v)));
        }
    }
    let mut count = 1usize;

    // nontrivial classes via form coverings; for elementary abelian groups
    // alternating forms over F_p are classified by rank under change of
    // basis, and congruent forms give isomorphic coverings, so standard
    // symplectic representatives suffice
    let mut matrices: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut zorder = 1u64;
    if exps.iter().all(|&k| k == 1) {
        zorder = p;
        for r in 1..=(n / 2) {
            let mut c = vec![vec![0u64; n]; n];
            for b in 0..r {
                c[2 * b + 1][2 * b] = 1;
                c[2 * b][2 * b + 1] = p - 1;
            }
            matrices.push(c);
        }
    } else {
        let mut strides = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let gcd = p.pow(exps[i].min(exps[j]));
                zorder = zorder.max(gcd);
                strides.push((i, j, gcd));
            }
        }
        if !strides.is_empty() {
            let total: u64 = strides.iter().map(|&(_, _, g)| g).product();
            for idx in 1..total {
                let mut rem = idx;
                let mut c = vec![vec![0u64; n]; n];
                for &(i, j, g) in &strides {
                    let v = (rem % g) * (zorder / g);
                    rem /= g;
                    c[j][i] = v;
                    c[i][j] = (zorder - v) % zorder;
                }
                matrices.push(c);
            }
        }
    }
    for c in matrices {
        let spec = form_covering(p, exps, zorder, &c, cfg)?;
        let cov = Covering::load(&spec, cfg)?;
        let table = CharacterTable::compute(&cov.gstar, cfg)?;
        let tr = tau::tau(&cov, &table, cfg)?;
        let ti = tau::tau_irr(&cov, &table, cfg)?;
        if let Some(v) = tr.value {
            best_tau = Some(best_tau.map_or(v, |b: u64| b.min(v)));
        }
        if let Some(v) = ti.value {
            best_irr = Some(best_irr.map_or(v, |b: u64| b.min(v)));
        }
        count += 1;
    }
    Ok((best_tau.expect("trivial class yields a value"), best_irr, count))
}

#[derive(Debug, Clone)]
pub struct AbelianCheck {
    pub p: u64,
    pub exps: Vec<u32>,
    pub order: u128,
    pub expected_tau: u64,
    pub generic_tau: u64,
    pub expected_tau_irr: Option<u64>,
    pub generic_tau_irr: Option<u64>,
    pub coverings: usize,
    pub pass: bool,
}

/// The abelian oracle equivalence: for every abelian p-group up to the
/// order bound, the generic pipeline agrees with the closed forms.
pub fn verify_abelian_oracle(max_order: u128, cfg: &Config) -> Result<Vec<AbelianCheck>> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while (p as u128) <= max_order {
        let mut is_p = true;
        for d in 2..p {
            if p % d == 0 {
                is_p = false;
                break;
            }
        }
        if is_p {
            for exps in abelian_exponent_lists(p, max_order) {
                let invariant_factors: Vec<u64> = exps.iter().map(|&k| p.pow(k)).collect();
                let expected_tau = closed_forms::tau_abelian(&invariant_factors);
                let expected_irr = closed_forms::tau_irr_abelian(&invariant_factors);
                let (gt, gi, count) = generic_abelian_values(p, &exps, cfg)?;
                let order: u128 = exps.iter().map(|&k| (p as u128).pow(k)).product();
                let pass = gt == expected_tau && gi == expected_irr;
                out.push(AbelianCheck {
                    p,
                    exps,
                    order,
                    expected_tau,
                    generic_tau: gt,
                    expected_tau_irr: expected_irr,
                    generic_tau_irr: gi,
                    coverings: count,
                    pass,
                });
            }
        }
        p += 1;
    }
    Ok(out)
}

/// Build a group from abelian invariants (used by info/chartab commands).
pub fn abelian_group(p: u64, exps: &[u32], cfg: &Config) -> Result<Group> {
    let n = exps.len().max(1);
    let gens: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let orders: Vec<u32> = if exps.is_empty() {
        vec![1; 0]
    } else {
        exps.iter().map(|&k| p.pow(k) as u32).collect()
    };
    let pres = PcPresentation::new("abelian", gens[..orders.len()].to_vec(), orders, Vec::new(), Vec::new(), cfg)?;
    Group::build(pres, cfg)
}

/// Structural summary used by `projembed info`.
pub fn group_info(g: &Arc<Group>, cfg: &Config) -> Result<crate::report::GroupInfo> {
    let mut degrees = Vec::new();
    let classes = g.conjugacy_classes().num_classes();
    if let Ok(t) = CharacterTable::compute(g, cfg) {
        degrees = t.degrees();
        degrees.dedup();
    }
    Ok(crate::report::GroupInfo {
        schema_version: SCHEMA_VERSION,
        name: g.name().to_string(),
        order: g.order(),
        abelian: g.center().order() == g.order(),
        nilpotent: g.is_nilpotent(),
        exponent: g.exponent(),
        center_order: g.center().order(),
        derived_order: g.derived_subgroup().order(),
        num_classes: classes,
        character_degrees: degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn partitions_of_small_orders() {
        let parts = abelian_exponent_lists(2, 16);
        // orders 2,4,8,16: partitions of 1..4: 1+2+3+5 = 11
        assert_eq!(parts.len(), 11);
        let parts3 = abelian_exponent_lists(3, 81);
        assert_eq!(parts3.len(), 1 + 2 + 3 + 5);
    }

    #[test]
    fn generic_abelian_matches_closed_forms_on_small_cases() {
        // (Z/2)^2: the exceptional tau = 2 = sqrt(4)
        let (t, ti, n) = generic_abelian_values(2, &[1, 1], &cfg()).unwrap();
        assert_eq!((t, ti), (2, Some(2)));
        assert_eq!(n, 2); // two alternating matrices over Z/2
        // Z/4 x Z/2: rank 2, not elementary: tau = 3; not symmetric: no tau_irr
        let (t, ti, _) = generic_abelian_values(2, &[2, 1], &cfg()).unwrap();
        assert_eq!((t, ti), (3, None));
        // Z/9: tau = 2, no tau_irr
        let (t, ti, _) = generic_abelian_values(3, &[2], &cfg()).unwrap();
        assert_eq!((t, ti), (2, None));
        // (Z/3)^2: tau = 3, tau_irr = 3
        let (t, ti, _) = generic_abelian_values(3, &[1, 1], &cfg()).unwrap();
        assert_eq!((t, ti), (3, Some(3)));
    }

    #[test]
    fn p3_table_verifies_at_three() {
        let rep = verify_table(TableId::P3, 3, &cfg()).unwrap();
        assert!(rep.success(), "{}", rep.to_text());
        assert_eq!(rep.matched, 2);
        assert!(rep.all_accounted());
    }

    #[test]
    fn p3_table_verifies_at_two() {
        let rep = verify_table(TableId::P3, 2, &cfg()).unwrap();
        assert!(rep.success(), "{}", rep.to_text());
        assert_eq!(rep.matched, 2);
    }

    #[test]
    fn verify_is_deterministic() {
        let a = verify_table(TableId::P3, 3, &cfg()).unwrap().stable_json();
        let b = verify_table(TableId::P3, 3, &cfg()).unwrap().stable_json();
        assert_eq!(a, b);
    }
}
