//! Minimal faithful degree searches.
//!
//! tau_irr scans irreducibles by degree for a trivial projective kernel;
//! tau searches, per central character lambda, for the minimum-total-degree
//! set of irreducibles of G* over lambda whose joint projective kernel on G
//! is trivial. delta/delta_irr are the ordinary-kernel analogues, computed
//! by the same search with the scalar test replaced by equality with the
//! degree.

use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::config::Config;
use crate::covering::{scalar_signature, CentralCharacter, Covering};
use crate::error::Result;
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauKind {
    Tau,
    TauIrr,
    Delta,
    DeltaIrr,
}

#[derive(Debug, Clone, Serialize)]
pub struct Constituent {
    pub index: usize,
    pub degree: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub lambda: Vec<u64>,
    pub constituents: Vec<Constituent>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TauReport {
    pub kind: TauKind,
    pub group: String,
    pub covering: String,
    pub value: Option<u64>,
    pub witness: Option<Witness>,
    /// true when the covering ranges over the full multiplier (or the value
    /// is forced by the p-floor argument); otherwise the value is an upper
    /// bound and absence means absence-in-range.
    pub exact: bool,
    pub probes_checked: usize,
    pub nodes_expanded: u64,
}

/// Probe set. A joint projective kernel is a normal subgroup; when it is
/// nontrivial it meets the centre of a nilpotent group in a nontrivial
/// subgroup, which contains an element of prime order. Probing the
/// prime-order central elements therefore decides triviality. For
/// non-nilpotent groups all non-identity elements are probed.
pub fn probe_set(g: &Group) -> Vec<u32> {
    if g.is_nilpotent() {
        g.center()
            .elems
            .iter()
            .copied()
            .filter(|&x| {
                if x == 0 {
                    return false;
                }
                let o = g.element_order(x) as u64;
                let mut d = 2;
                while d * d <= o {
                    if o % d == 0 {
                        return false;
                    }
                    d += 1;
                }
                true
            })
            .collect()
    } else {
        (1..g.order() as u32).collect()
    }
}

/// For nonabelian p-groups, tau(G) >= p: a faithful projective
/// representation of total degree < p would consist of linear constituents
/// only, hence belong to the trivial class and be an ordinary
/// representation, which cannot be projectively faithful on a nonabelian
/// group. A computed value of exactly p is therefore exact even when the
/// covering is partial.
fn p_floor(g: &Group) -> Option<u64> {
    let order = g.order() as u64;
    if order < 2 || g.center().order() == g.order() {
        return None;
    }
    let mut p = 2;
    while order % p != 0 {
        p += 1;
    }
    let mut m = order;
    while m % p == 0 {
        m /= p;
    }
    if m == 1 {
        Some(p)
    } else {
        None
    }
}

fn promote_exact(report: &mut TauReport, g: &Group) {
    if report.exact {
        return;
    }
    if let (Some(v), Some(p)) = (report.value, p_floor(g)) {
        if v == p {
            report.exact = true;
        }
    }
}

/// Minimum degree of an irreducible of G* whose projective kernel on G is
/// trivial.
pub fn tau_irr(cov: &Covering, table: &CharacterTable, _cfg: &Config) -> Result<TauReport> {
    let probes = probe_set(&cov.group);
    let mut order: Vec<usize> = (0..table.irreducibles.len()).collect();
    order.sort_by_key(|&i| (table.irreducibles[i].degree, i));
    let mut found: Option<(usize, u64)> = None;
    for &chi in &order {
        let sig = scalar_signature(cov, table, chi, &probes);
        if sig.iter().all(|s| s.is_none()) {
            found = Some((chi, table.irreducibles[chi].degree));
            break;
        }
    }
    let witness = match found {
        Some((chi, deg)) => Some(Witness {
            lambda: cov.central_character_of(table, chi)?.exps,
            constituents: vec![Constituent { index: chi, degree: deg }],
        }),
        None => None,
    };
    let mut report = TauReport {
        kind: TauKind::TauIrr,
        group: cov.group.name().to_string(),
        covering: cov.gstar.name().to_string(),
        value: found.map(|(_, d)| d),
        witness,
        exact: cov.is_representation_group,
        probes_checked: probes.len(),
        nodes_expanded: order.len() as u64,
    };
    promote_exact(&mut report, &cov.group);
    Ok(report)
}

#[derive(Debug, Clone)]
struct Candidate {
    total: u64,
    members: Vec<usize>,
    degs: Vec<u64>,
    lambda: Vec<u64>,
}

impl Candidate {
    fn key(&self) -> (u64, usize, Vec<u64>, Vec<usize>, Vec<u64>) {
        (
            self.total,
            self.members.len(),
            self.degs.clone(),
            self.members.clone(),
            self.lambda.clone(),
        )
    }

    fn better_than(&self, other: &Option<Candidate>) -> bool {
        match other {
            None => true,
            Some(o) => self.key() < o.key(),
        }
    }
}

struct CoverSearch<'a> {
    /// kill[c] = probes (as bit rows) eliminated by candidate c relative to
    /// the anchor
    kill: &'a [Vec<bool>],
    degs: &'a [u64],
    min_deg: u64,
    max_kill: usize,
    nodes: u64,
    banned: Vec<bool>,
}

impl<'a> CoverSearch<'a> {
    /// Greedy cover (most kills first, degree as tie-break) to seed the
    /// branch-and-bound with a finite upper bound.
    fn greedy(&self, survivors: &[bool]) -> Option<(u64, Vec<usize>)> {
        let mut surv = survivors.to_vec();
        let mut picks = Vec::new();
        let mut total = 0u64;
        while surv.iter().any(|&s| s) {
            let mut best_c = None;
            let mut best_score = (0usize, u64::MAX, usize::MAX);
            for c in 0..self.kill.len() {
                if picks.contains(&c) {
                    continue;
                }
                let kills = surv
                    .iter()
                    .zip(&self.kill[c])
                    .filter(|(&s, &k)| s && k)
                    .count();
                if kills == 0 {
                    continue;
                }
                let score = (kills, self.degs[c], c);
                if best_c.is_none()
                    || score.0 > best_score.0
                    || (score.0 == best_score.0 && (score.1, score.2) < (best_score.1, best_score.2))
                {
                    best_c = Some(c);
                    best_score = score;
                }
            }
            let c = best_c?;
            for (s, &k) in surv.iter_mut().zip(&self.kill[c]) {
                if k {
                    *s = false;
                }
            }
            total += self.degs[c];
            picks.push(c);
        }
        Some((total, picks))
    }

    /// Depth-first min-weight cover of `survivors`. Branches on the first
    /// surviving probe; after exploring covers containing a killer, that
    /// killer is excluded from the rest of the subtree, so no candidate set
    /// is visited twice.
    fn run(
        &mut self,
        survivors: &[bool],
        chosen: &mut Vec<usize>,
        cur: u64,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        self.nodes += 1;
        let pivot = match survivors.iter().position(|&s| s) {
            None => {
                let better = match best {
                    None => true,
                    Some((b, m)) => cur < *b || (cur == *b && chosen.len() < m.len()),
                };
                if better {
                    *best = Some((cur, chosen.clone()));
                }
                return;
            }
            Some(p) => p,
        };
        if let Some((b, _)) = best {
            // each candidate eliminates at most max_kill survivors
            let s = survivors.iter().filter(|&&x| x).count();
            let needed = s.div_ceil(self.max_kill.max(1)) as u64;
            if cur + needed * self.min_deg >= *b {
                return;
            }
        }
        let mut killers: Vec<usize> = (0..self.kill.len())
            .filter(|&c| self.kill[c][pivot] && !self.banned[c])
            .collect();
        killers.sort_by_key(|&c| (self.degs[c], c));
        let mut newly_banned = Vec::new();
        for c in killers {
            let dominated = match best {
                Some((b, _)) => cur + self.degs[c] >= *b,
                None => false,
            };
            if !dominated {
                let next: Vec<bool> = survivors
                    .iter()
                    .zip(&self.kill[c])
                    .map(|(&s, &k)| s && !k)
                    .collect();
                chosen.push(c);
                self.run(&next, chosen, cur + self.degs[c], best);
                chosen.pop();
            }
            self.banned[c] = true;
            newly_banned.push(c);
        }
        for c in newly_banned {
            self.banned[c] = false;
        }
    }
}

enum KernelRule {
    /// probe survives iff every member is scalar there with one common value
    ProjectiveScalar,
    /// probe survives iff every member takes its degree there
    OrdinaryKernel,
}

fn min_faithful_sum(
    cov: &Covering,
    table: &CharacterTable,
    rule: KernelRule,
    _cfg: &Config,
) -> Result<(Option<Candidate>, usize, u64)> {
    let probes = probe_set(&cov.group);
    let nchi = table.irreducibles.len();
    let mut lam_of: Vec<Vec<u64>> = Vec::with_capacity(nchi);
    for chi in 0..nchi {
        lam_of.push(cov.central_character_of(table, chi)?.exps);
    }
    let mut sig_of: Vec<Vec<Option<u64>>> = Vec::with_capacity(nchi);
    for chi in 0..nchi {
        let mut s = scalar_signature(cov, table, chi, &probes);
        if let KernelRule::OrdinaryKernel = rule {
            for v in s.iter_mut() {
                *v = if *v == Some(0) { Some(0) } else { None };
            }
        }
        sig_of.push(s);
    }

    // group characters by lambda
    let mut lambdas: Vec<Vec<u64>> = lam_of.clone();
    lambdas.sort();
    lambdas.dedup();

    let mut best: Option<Candidate> = None;
    let mut nodes_total = 0u64;
    for lam in &lambdas {
        let members: Vec<usize> = (0..nchi).filter(|&c| &lam_of[c] == lam).collect();
        // collapse to signature classes keeping the least degree per class
        let mut class_rep: Vec<usize> = Vec::new();
        {
            let mut seen: std::collections::HashMap<&[Option<u64>], usize> =
                std::collections::HashMap::new();
            let mut order = members.clone();
            order.sort_by_key(|&c| (table.irreducibles[c].degree, c));
            for &c in &order {
                let key: &[Option<u64>] = &sig_of[c];
                if !seen.contains_key(key) {
                    seen.insert(key, c);
                    class_rep.push(c);
                }
            }
        }
        class_rep.sort_by_key(|&c| (table.irreducibles[c].degree, c));
        if let (Some(b), Some(&first)) = (&best, class_rep.first()) {
            if table.irreducibles[first].degree > b.total {
                continue;
            }
        }
        let degs: Vec<u64> = class_rep
            .iter()
            .map(|&c| table.irreducibles[c].degree)
            .collect();
        let min_deg = degs.iter().copied().min().unwrap_or(1);

        for (ai, &anchor) in class_rep.iter().enumerate() {
            let adeg = table.irreducibles[anchor].degree;
            if let Some(b) = &best {
                if adeg > b.total {
                    break;
                }
            }
            let survivors: Vec<bool> = (0..probes.len())
                .map(|p| sig_of[anchor][p].is_some())
                .collect();
            if survivors.iter().all(|&s| !s) {
                let cand = Candidate {
                    total: adeg,
                    members: vec![anchor],
                    degs: vec![adeg],
                    lambda: lam.clone(),
                };
                if cand.better_than(&best) {
                    best = Some(cand);
                }
                continue;
            }
            // kill sets relative to the anchor
            let kill: Vec<Vec<bool>> = class_rep
                .iter()
                .enumerate()
                .map(|(ci, &c)| {
                    (0..probes.len())
                        .map(|p| {
                            ci != ai
                                && (sig_of[c][p].is_none() || sig_of[c][p] != sig_of[anchor][p])
                        })
                        .collect()
                })
                .collect();
            let max_kill = kill
                .iter()
                .map(|row| row.iter().filter(|&&k| k).count())
                .max()
                .unwrap_or(1);
            let mut search = CoverSearch {
                kill: &kill,
                degs: &degs,
                min_deg,
                max_kill,
                nodes: 0,
                banned: vec![false; class_rep.len()],
            };
            let mut chosen = Vec::new();
            let mut found: Option<(u64, Vec<usize>)> = search.greedy(&survivors);
            search.run(&survivors, &mut chosen, 0, &mut found);
            nodes_total += search.nodes;
            if let Some((w, mut picks)) = found {
                picks.sort_unstable();
                let mut members_out = vec![anchor];
                members_out.extend(picks.iter().map(|&ci| class_rep[ci]));
                members_out.sort_unstable();
                let mut dd: Vec<u64> = members_out
                    .iter()
                    .map(|&c| table.irreducibles[c].degree)
                    .collect();
                dd.sort_unstable();
                let cand = Candidate {
                    total: adeg + w,
                    members: members_out,
                    degs: dd,
                    lambda: lam.clone(),
                };
                if cand.better_than(&best) {
                    best = Some(cand);
                }
            }
        }
    }
    Ok((best, probes.len(), nodes_total))
}

fn report_from(
    cov: &Covering,
    table: &CharacterTable,
    kind: TauKind,
    found: Option<Candidate>,
    probes: usize,
    nodes: u64,
) -> TauReport {
    let witness = found.as_ref().map(|c| Witness {
        lambda: c.lambda.clone(),
        constituents: c
            .members
            .iter()
            .map(|&i| Constituent {
                index: i,
                degree: table.irreducibles[i].degree,
            })
            .collect(),
    });
    TauReport {
        kind,
        group: cov.group.name().to_string(),
        covering: cov.gstar.name().to_string(),
        value: found.map(|c| c.total),
        witness,
        exact: cov.is_representation_group,
        probes_checked: probes,
        nodes_expanded: nodes,
    }
}

/// Minimum total degree of a faithful direct sum of irreducible projective
/// representations, over all central characters the covering reaches.
pub fn tau(cov: &Covering, table: &CharacterTable, cfg: &Config) -> Result<TauReport> {
    let (best, probes, nodes) =
        min_faithful_sum(cov, table, KernelRule::ProjectiveScalar, cfg)?;
    let mut report = report_from(cov, table, TauKind::Tau, best, probes, nodes);
    promote_exact(&mut report, &cov.group);
    Ok(report)
}

/// Ordinary embedding degree delta(G): the same search run on the group's
/// own characters with ordinary kernels. Pass the trivial covering of G.
pub fn delta(cov: &Covering, table: &CharacterTable, cfg: &Config) -> Result<TauReport> {
    let (best, probes, nodes) = min_faithful_sum(cov, table, KernelRule::OrdinaryKernel, cfg)?;
    let mut report = report_from(cov, table, TauKind::Delta, best, probes, nodes);
    report.exact = true; // ordinary representations need no covering data
    Ok(report)
}

/// Minimal degree of a faithful irreducible ordinary representation, or
/// absent.
pub fn delta_irr(cov: &Covering, table: &CharacterTable, _cfg: &Config) -> Result<TauReport> {
    let probes = probe_set(&cov.group);
    let mut order: Vec<usize> = (0..table.irreducibles.len()).collect();
    order.sort_by_key(|&i| (table.irreducibles[i].degree, i));
    let mut found = None;
    for &chi in &order {
        let sig = scalar_signature(cov, table, chi, &probes);
        if sig.iter().all(|s| *s != Some(0)) {
            found = Some((chi, table.irreducibles[chi].degree));
            break;
        }
    }
    let witness = match found {
        Some((chi, deg)) => Some(Witness {
            lambda: cov.central_character_of(table, chi)?.exps,
            constituents: vec![Constituent { index: chi, degree: deg }],
        }),
        None => None,
    };
    Ok(TauReport {
        kind: TauKind::DeltaIrr,
        group: cov.group.name().to_string(),
        covering: cov.gstar.name().to_string(),
        value: found.map(|(_, d)| d),
        witness,
        exact: true,
        probes_checked: probes.len(),
        nodes_expanded: order.len() as u64,
    })
}

/// Re-verify a reported witness from scratch: members share the witness
/// lambda, the joint projective kernel is trivial on all of G (not only on
/// the probe set), and the value is the degree sum.
pub fn verify_witness(
    cov: &Covering,
    table: &CharacterTable,
    report: &TauReport,
) -> Result<bool> {
    let (value, witness) = match (&report.value, &report.witness) {
        (Some(v), Some(w)) => (*v, w),
        _ => return Ok(report.value.is_none() && report.witness.is_none()),
    };
    let members: Vec<usize> = witness.constituents.iter().map(|c| c.index).collect();
    let total: u64 = members.iter().map(|&m| table.irreducibles[m].degree).sum();
    if total != value {
        return Ok(false);
    }
    for &m in &members {
        let lam = cov.central_character_of(table, m)?;
        if lam.exps != witness.lambda {
            return Ok(false);
        }
    }
    let all: Vec<u32> = (1..cov.group.order() as u32).collect();
    match report.kind {
        TauKind::Tau | TauKind::TauIrr => {
            let surv = crate::covering::joint_surviving_probes(cov, table, &members, &all)?;
            Ok(surv.is_empty())
        }
        TauKind::Delta | TauKind::DeltaIrr => {
            // ordinary kernels: no non-identity element fixed by all
            for &g in &all {
                let x = cov.section(g);
                let fixed = members.iter().all(|&m| {
                    let v = table.value_at(&cov.gstar, m, x);
                    v.as_integer() == Some(table.irreducibles[m].degree.into())
                });
                if fixed {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Convenience: the lambda of a report, if any, as a CentralCharacter.
pub fn witness_lambda(cov: &Covering, report: &TauReport) -> Option<CentralCharacter> {
    report.witness.as_ref().map(|w| CentralCharacter {
        exps: w.lambda.clone(),
        modulus: cov.kernel_exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_covering, parse_presentation};
    use std::sync::Arc;

    fn cfg() -> Config {
        Config::default()
    }

    fn load(text: &str, rep_group: bool) -> (Covering, CharacterTable) {
        let spec = parse_covering(text, &cfg()).unwrap();
        let mut cov = Covering::load(&spec, &cfg()).unwrap();
        cov.is_representation_group = rep_group;
        let t = CharacterTable::compute(&cov.gstar, &cfg()).unwrap();
        (cov, t)
    }

    fn trivial_cov(text: &str) -> (Covering, CharacterTable) {
        let p = parse_presentation(text, &cfg()).unwrap();
        let g = Arc::new(Group::build(p, &cfg()).unwrap());
        let t = CharacterTable::compute(&g, &cfg()).unwrap();
        let mut cov = Covering::trivial(g);
        cov.is_representation_group = true; // caller asserts M(G) = 1
        (cov, t)
    }

    #[test]
    fn heisenberg_tau_and_tau_irr_are_three() {
        let text = "pcgroup H3star\ngen x y z z1 z2\nord x=3 y=3 z=3 z1=3 z2=3\n\
                    conj y^x = y*z\nconj z^x = z*z1\nconj z^y = z*z2\nend\n\
                    kernel z1 z2\nquotient H3\n";
        let (cov, t) = load(text, true);
        let ti = tau_irr(&cov, &t, &cfg()).unwrap();
        assert_eq!(ti.value, Some(3));
        assert!(ti.exact);
        let tr = tau(&cov, &t, &cfg()).unwrap();
        assert_eq!(tr.value, Some(3));
        assert!(tr.exact);
        assert!(verify_witness(&cov, &t, &tr).unwrap());
        assert!(verify_witness(&cov, &t, &ti).unwrap());
    }

    #[test]
    fn q8_tau_three_tau_irr_absent() {
        // M(Q8) = 1: ordinary characters carry all projective data
        let (cov, t) = trivial_cov(
            "pcgroup Q8\ngen b a z\nord b=2 a=2 z=2\npow b = z\npow a = z\nconj a^b = a*z\nend\n",
        );
        let ti = tau_irr(&cov, &t, &cfg()).unwrap();
        assert_eq!(ti.value, None, "Q8 has no faithful irreducible projective rep");
        let tr = tau(&cov, &t, &cfg()).unwrap();
        assert_eq!(tr.value, Some(3));
        assert!(verify_witness(&cov, &t, &tr).unwrap());
        // delta(Q8) = 2 via the faithful 2-dimensional representation
        let d = delta(&cov, &t, &cfg()).unwrap();
        assert_eq!(d.value, Some(2));
        let di = delta_irr(&cov, &t, &cfg()).unwrap();
        assert_eq!(di.value, Some(2));
    }

    #[test]
    fn d8_over_d16_gives_two_two() {
        let text = "pcgroup D16\ngen a b z\nord a=2 b=4 z=2\npow b = z\n\
                    conj b^a = b^3*z\nconj z^a = z\nend\nkernel z\nquotient D8\n";
        let (cov, t) = load(text, true);
        assert!(cov.is_stem);
        let ti = tau_irr(&cov, &t, &cfg()).unwrap();
        assert_eq!(ti.value, Some(2));
        let tr = tau(&cov, &t, &cfg()).unwrap();
        assert_eq!(tr.value, Some(2));
        assert!(tr.exact);
    }

    #[test]
    fn trivial_group_tau_is_one() {
        let text = "pcgroup K\ngen a\nord a=2\nend\nkernel a\nquotient T\n";
        let (cov, t) = load(text, true);
        let tr = tau(&cov, &t, &cfg()).unwrap();
        assert_eq!(tr.value, Some(1));
        let ti = tau_irr(&cov, &t, &cfg()).unwrap();
        assert_eq!(ti.value, Some(1));
    }

    #[test]
    fn section_perturbation_leaves_verdicts_unchanged() {
        let text = "pcgroup H3star\ngen x y z z1 z2\nord x=3 y=3 z=3 z1=3 z2=3\n\
                    conj y^x = y*z\nconj z^x = z*z1\nconj z^y = z*z2\nend\n\
                    kernel z1 z2\nquotient H3\n";
        let (cov, t) = load(text, true);
        let base_tau = tau(&cov, &t, &cfg()).unwrap();
        let base_irr = tau_irr(&cov, &t, &cfg()).unwrap();
        for seed in [1u64, 7, 42] {
            let pert = cov.with_perturbed_section(seed);
            let tr = tau(&pert, &t, &cfg()).unwrap();
            assert_eq!(tr.value, base_tau.value, "seed {seed}");
            let ti = tau_irr(&pert, &t, &cfg()).unwrap();
            assert_eq!(ti.value, base_irr.value, "seed {seed}");
        }
    }
}
