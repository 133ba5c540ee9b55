//! Finite groups materialized from power-commutator presentations.
//!
//! Elements are normal words multiplied by collection from the left.
//! Structure (center, derived subgroup, classes, series) is computed by
//! direct scans; groups here are desk-scale by construction.

use std::sync::OnceLock;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::presentation::{check_consistency, PcPresentation};
use crate::word::NormalWord;

/// Collection engine working directly on a presentation. Termination does
/// not require consistency, so the consistency checker can share it.
pub struct Collector<'a> {
    p: &'a PcPresentation,
}

impl<'a> Collector<'a> {
    pub fn new(p: &'a PcPresentation) -> Self {
        Collector { p }
    }

    pub fn pow_rel(&self, i: usize) -> NormalWord {
        self.p.power_rels[i].clone()
    }

    pub fn mul(&self, a: &NormalWord, b: &NormalWord) -> NormalWord {
        let mut r = a.clone();
        for (j, x) in b.letters() {
            for _ in 0..x {
                r = self.mul_gen(&r, j);
            }
        }
        r
    }

    /// w * g_j in normal form.
    fn mul_gen(&self, w: &NormalWord, j: usize) -> NormalWord {
        let n = w.len();
        if w.0[j + 1..].iter().all(|&x| x == 0) {
            let mut r = w.clone();
            r.0[j] += 1;
            if r.0[j] == self.p.rel_orders[j] {
                r.0[j] = 0;
                let pw = &self.p.power_rels[j];
                if !pw.is_identity() {
                    r = self.mul(&r, pw);
                }
            }
            r
        } else {
            // w = head * tail with tail supported after j:
            // w g_j = (head g_j) (g_j^{-1} tail g_j)
            let mut head = w.clone();
            let mut tail = Vec::new();
            for t in j + 1..n {
                if head.0[t] != 0 {
                    tail.push((t, head.0[t]));
                    head.0[t] = 0;
                }
            }
            let mut r = self.mul_gen(&head, j);
            for (i, x) in tail {
                match self.p.conj(j, i) {
                    Some(c) => {
                        for _ in 0..x {
                            r = self.mul(&r, c);
                        }
                    }
                    None => {
                        // trivial conjugation: multiply by g_i^x directly
                        let mut gi = NormalWord::identity(n);
                        gi.0[i] = x;
                        r = self.mul(&r, &gi);
                    }
                }
            }
            r
        }
    }
}

/// A subgroup given by its sorted element ids plus a membership mask.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub elems: Vec<u32>,
    member: Vec<bool>,
    pub generators: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member[x as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }
}

/// Conjugacy class data: canonical representatives are the minimal element
/// ids (lexicographically minimal exponent vectors).
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub reps: Vec<u32>,
    pub sizes: Vec<u32>,
    pub class_of: Vec<u32>,
}

impl ClassPartition {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }
}

/// A fully enumerated finite group. Immutable after construction; caches
/// are populated on first use.
pub struct Group {
    pres: PcPresentation,
    order: usize,
    strides: Vec<usize>,
    mul_gen_table: Vec<u32>,
    inv_table: Vec<u32>,
    center: OnceLock<Subgroup>,
    derived: OnceLock<Subgroup>,
    classes: OnceLock<ClassPartition>,
    orders: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group({}, order {})", self.pres.name, self.order)
    }
}

impl Group {
    /// Materialize a group. The presentation must pass the consistency
    /// tests; inconsistency is reported as an error.
    pub fn build(pres: PcPresentation, cfg: &Config) -> Result<Group> {
        let order_u128 = pres.order();
        if order_u128 > cfg.max_order {
            return Err(Error::OrderBound {
                order: order_u128,
                bound: cfg.max_order,
            });
        }
        let rep = check_consistency(&pres);
        if !rep.passed() {
            let f = rep.first_failure().unwrap();
            return Err(Error::Inconsistent {
                name: pres.name.clone(),
                detail: format!("{}: {} != {}", f.description, f.lhs, f.rhs),
            });
        }
        let order = order_u128 as usize;
        let n = pres.num_gens();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * pres.rel_orders[i + 1] as usize;
        }

        let mut g = Group {
            pres,
            order,
            strides,
            mul_gen_table: Vec::new(),
            inv_table: Vec::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        g.build_tables();
        Ok(g)
    }

    fn build_tables(&mut self) {
        let n = self.pres.num_gens();
        let col = Collector::new(&self.pres);
        let mut table = vec![0u32; self.order * n];
        for x in 0..self.order {
            let w = self.unrank(x as u32);
            for j in 0..n {
                let r = col.mul_gen(&w, j);
                table[x * n + j] = self.rank(&r);
            }
        }
        self.mul_gen_table = table;
        let mut inv = vec![0u32; self.order];
        for x in 0..self.order as u32 {
            inv[x as usize] = self.solve_inverse(x);
        }
        self.inv_table = inv;
    }

    fn solve_inverse(&self, x: u32) -> u32 {
        let n = self.pres.num_gens();
        let mut acc = x; // x * candidate
        let mut cand = 0u32;
        for i in 0..n {
            let a = self.unrank(acc).0[i];
            if a != 0 {
                let k = self.pres.rel_orders[i] - a;
                for _ in 0..k {
                    acc = self.mul_by_gen(acc, i);
                    cand = self.mul_by_gen(cand, i);
                }
            }
        }
        debug_assert_eq!(acc, 0);
        cand
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_gens(&self) -> usize {
        self.pres.num_gens()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn rank(&self, w: &NormalWord) -> u32 {
        let mut r = 0usize;
        for (i, &x) in w.0.iter().enumerate() {
            r += x as usize * self.strides[i];
        }
        r as u32
    }

    pub fn unrank(&self, x: u32) -> NormalWord {
        let n = self.pres.num_gens();
        let mut v = vec![0u32; n];
        let mut r = x as usize;
        for i in 0..n {
            v[i] = (r / self.strides[i]) as u32;
            r %= self.strides[i];
        }
        NormalWord(v)
    }

    pub fn generator(&self, i: usize) -> u32 {
        self.strides[i] as u32
    }

    #[inline]
    pub fn mul_by_gen(&self, x: u32, j: usize) -> u32 {
        self.mul_gen_table[x as usize * self.pres.num_gens() + j]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let n = self.pres.num_gens();
        let w = self.unrank(y);
        let mut r = x;
        for i in 0..n {
            for _ in 0..w.0[i] {
                r = self.mul_by_gen(r, i);
            }
        }
        r
    }

    pub fn inverse(&self, x: u32) -> u32 {
        self.inv_table[x as usize]
    }

    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(
            self.mul(self.inverse(x), self.inverse(y)),
            self.mul(x, y),
        )
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let mut r = 0u32;
        let k = k.rem_euclid(self.element_order(x) as i64) as u64;
        for _ in 0..k {
            r = self.mul(r, x);
        }
        r
    }

    pub fn element_order(&self, x: u32) -> u32 {
        let orders = self.orders.get_or_init(|| {
            let mut v = vec![0u32; self.order];
            v[0] = 1;
            for e in 1..self.order as u32 {
                let mut k = 1u32;
                let mut y = e;
                while y != 0 {
                    y = self.mul(y, e);
                    k += 1;
                }
                v[e as usize] = k;
            }
            v
        });
        orders[x as usize]
    }

    pub fn exponent(&self) -> u64 {
        let cls = self.conjugacy_classes();
        let mut m = 1u64;
        for &r in &cls.reps {
            m = num_integer::lcm(m, self.element_order(r) as u64);
        }
        m
    }

    fn subgroup_from_set(&self, mut elems: Vec<u32>, generators: Vec<u32>) -> Subgroup {
        elems.sort_unstable();
        elems.dedup();
        let mut member = vec![false; self.order];
        for &e in &elems {
            member[e as usize] = true;
        }
        Subgroup {
            elems,
            member,
            generators,
        }
    }

    /// Subgroup generated by `seed`; with `normal` set, its normal closure.
    /// Finite groups make the sub-semigroup a subgroup, so closing under
    /// right multiplication by the (growing) generating set suffices.
    pub fn closure(&self, seed: &[u32], normal: bool) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0u32];
        let mut gens: Vec<u32> = seed.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let mut grew = false;
            let mut i = 0;
            while i < elems.len() {
                let x = elems[i];
                i += 1;
                for gi in 0..gens.len() {
                    let y = self.mul(x, gens[gi]);
                    if !member[y as usize] {
                        member[y as usize] = true;
                        elems.push(y);
                        grew = true;
                    }
                }
            }
            if normal {
                let mut i = 0;
                while i < elems.len() {
                    let x = elems[i];
                    i += 1;
                    for gi in 0..self.num_gens() {
                        let c = self.conjugate(x, self.generator(gi));
                        if !member[c as usize] {
                            member[c as usize] = true;
                            elems.push(c);
                            gens.push(c);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        self.subgroup_from_set(elems, seed.to_vec())
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| {
            let n = self.num_gens();
            let mut elems = Vec::new();
            for x in 0..self.order as u32 {
                let mut central = true;
                for i in 0..n {
                    let g = self.generator(i);
                    if self.mul(x, g) != self.mul(g, x) {
                        central = false;
                        break;
                    }
                }
                if central {
                    elems.push(x);
                }
            }
            self.subgroup_from_set(elems, Vec::new())
        })
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived.get_or_init(|| {
            let n = self.num_gens();
            let mut seed = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let c = self.commutator(self.generator(i), self.generator(j));
                    if c != 0 {
                        seed.push(c);
                    }
                }
            }
            self.closure(&seed, true)
        })
    }

    pub fn centralizer(&self, x: u32) -> Subgroup {
        let mut elems = Vec::new();
        for y in 0..self.order as u32 {
            if self.mul(x, y) == self.mul(y, x) {
                elems.push(y);
            }
        }
        self.subgroup_from_set(elems, vec![x])
    }

    pub fn conjugacy_classes(&self) -> &ClassPartition {
        self.classes.get_or_init(|| {
            let unset = u32::MAX;
            let mut class_of = vec![unset; self.order];
            let mut reps = Vec::new();
            let mut sizes = Vec::new();
            let n = self.num_gens();
            for x in 0..self.order as u32 {
                if class_of[x as usize] != unset {
                    continue;
                }
                let cid = reps.len() as u32;
                reps.push(x);
                let mut orbit = vec![x];
                class_of[x as usize] = cid;
                let mut frontier = 0;
                while frontier < orbit.len() {
                    let y = orbit[frontier];
                    frontier += 1;
                    for i in 0..n {
                        let g = self.generator(i);
                        let c = self.conjugate(y, g);
                        if class_of[c as usize] == unset {
                            class_of[c as usize] = cid;
                            orbit.push(c);
                        }
                    }
                }
                sizes.push(orbit.len() as u32);
            }
            ClassPartition {
                reps,
                sizes,
                class_of,
            }
        })
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        for &x in &s.elems {
            for i in 0..self.num_gens() {
                let g = self.generator(i);
                if !s.contains(self.conjugate(x, g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Lower central series gamma_2, gamma_3, ...; the group is nilpotent
    /// iff the series reaches the trivial subgroup.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series: Vec<Subgroup> = Vec::new();
        let mut cur: Vec<u32> = (0..self.order as u32).collect();
        loop {
            let mut seed = Vec::new();
            for &x in &cur {
                for i in 0..self.num_gens() {
                    let c = self.commutator(x, self.generator(i));
                    if c != 0 {
                        seed.push(c);
                    }
                }
            }
            let next = self.closure(&seed, true);
            let stalled = next.order() == cur.len();
            let trivial = next.is_trivial();
            cur = next.elems.clone();
            series.push(next);
            if trivial || stalled {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .map(|s| s.is_trivial())
            .unwrap_or(true)
    }

    /// True if the suffix subgroup generated by gens[k..] equals `s` as a
    /// set (it is then automatically the full exponent box on those
    /// coordinates).
    fn suffix_start_of(&self, s: &Subgroup) -> Option<usize> {
        let n = self.num_gens();
        for k in 0..=n {
            let size: usize = self.pres.rel_orders[k..]
                .iter()
                .map(|&e| e as usize)
                .product();
            if size == s.order() {
                // check all elements have support in k..
                let ok = s.elems.iter().all(|&x| {
                    let w = self.unrank(x);
                    w.0[..k].iter().all(|&a| a == 0)
                });
                if ok {
                    return Some(k);
                }
                return None;
            }
        }
        None
    }

    /// Quotient by a normal subgroup. For pc-suffix kernels the quotient is
    /// the truncated presentation; otherwise a pc chain is synthesized from
    /// the coset multiplication (nilpotent groups only).
    pub fn quotient(&self, nsub: &Subgroup, cfg: &Config) -> Result<(Group, Vec<u32>)> {
        if !self.is_normal(nsub) {
            return Err(Error::NotNormal);
        }
        if let Some(k) = self.suffix_start_of(nsub) {
            let q = self.suffix_quotient_presentation(k);
            let qg = Group::build(q, cfg)?;
            let map: Vec<u32> = (0..self.order as u32)
                .map(|x| {
                    let mut w = self.unrank(x);
                    for t in k..self.num_gens() {
                        w.0[t] = 0;
                    }
                    let head = NormalWord(w.0[..k].to_vec());
                    qg.rank(&head)
                })
                .collect();
            return Ok((qg, map));
        }
        self.table_quotient(nsub, cfg)
    }

    /// Presentation of G / <gens[k..]> with the suffix coordinates zeroed.
    pub fn suffix_quotient_presentation(&self, k: usize) -> PcPresentation {
        let name = format!("{}/suffix{}", self.pres.name, k);
        let gens = self.pres.gens[..k].to_vec();
        let orders = self.pres.rel_orders[..k].to_vec();
        let trunc = |w: &NormalWord| NormalWord(w.0[..k].to_vec());
        let mut pows = Vec::new();
        for i in 0..k {
            let w = trunc(&self.pres.power_rels[i]);
            if !w.is_identity() {
                pows.push((i, w));
            }
        }
        let mut conjs = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if let Some(w) = self.pres.conj(i, j) {
                    let t = trunc(w);
                    conjs.push((i, j, t));
                }
            }
        }
        PcPresentation::new(name, gens, orders, pows, conjs, &Config {
            max_order: u128::MAX,
            class_budget: 0,
        })
        .expect("suffix quotient presentation is structurally valid")
    }

    /// Quotient through the coset table: synthesize a pc chain by repeatedly
    /// taking minimal cosets central modulo the part already chosen.
    fn table_quotient(&self, nsub: &Subgroup, cfg: &Config) -> Result<(Group, Vec<u32>)> {
        let qorder = self.order / nsub.order();
        // coset representatives: minimal element id in each coset
        let mut coset_rep = vec![u32::MAX; self.order];
        let mut reps = Vec::with_capacity(qorder);
        for x in 0..self.order as u32 {
            if coset_rep[x as usize] != u32::MAX {
                continue;
            }
            reps.push(x);
            for &m in &nsub.elems {
                let y = self.mul(x, m);
                coset_rep[y as usize] = x;
            }
        }
        let rep_index: std::collections::HashMap<u32, u32> = reps
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, i as u32))
            .collect();
        let qmul = |a: u32, b: u32| -> u32 {
            let x = self.mul(reps[a as usize], reps[b as usize]);
            rep_index[&coset_rep[x as usize]]
        };

        // nilpotency requirement for the synthesis below
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent(self.pres.name.clone()));
        }

        // Build an ascending chain of subgroups of Q, each step adjoining a
        // coset central modulo the current part, then reverse into a pc chain.
        let mut in_cur = vec![false; qorder];
        in_cur[0] = true;
        let mut cur_size = 1usize;
        let mut chain: Vec<u32> = Vec::new(); // quotient element ids, ascending
        let qgens: Vec<u32> = (0..qorder as u32).collect();
        while cur_size < qorder {
            let mut pick = None;
            'outer: for z in 1..qorder as u32 {
                if in_cur[z as usize] {
                    continue;
                }
                // central modulo current part: [z, q] in cur for all q
                for &q in &qgens {
                    let zi = qinv(&qmul, qorder, z);
                    let qi = qinv(&qmul, qorder, q);
                    let comm = qmul(qmul(zi, qi), qmul(z, q));
                    if !in_cur[comm as usize] {
                        continue 'outer;
                    }
                }
                pick = Some(z);
                break;
            }
            let z = pick.ok_or_else(|| Error::NotNilpotent("quotient synthesis stalled".into()))?;
            chain.push(z);
            // close cur under z
            let mut elems: Vec<u32> = (0..qorder as u32)
                .filter(|&x| in_cur[x as usize])
                .collect();
            let mut frontier: Vec<u32> = elems.clone();
            loop {
                let mut grew = false;
                let mut next = Vec::new();
                for &x in &frontier {
                    let y = qmul(x, z);
                    if !in_cur[y as usize] {
                        in_cur[y as usize] = true;
                        elems.push(y);
                        next.push(y);
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
                frontier = next;
            }
            cur_size = elems.len();
        }
        chain.reverse();

        // Normal form over the chain: peel exponents front to back.
        let m = chain.len();
        let mut rel_orders = Vec::with_capacity(m);
        // subgroup generated by chain[i+1..]
        let mut tails: Vec<Vec<bool>> = vec![Vec::new(); m + 1];
        tails[m] = {
            let mut v = vec![false; qorder];
            v[0] = true;
            v
        };
        for i in (0..m).rev() {
            let mut v = tails[i + 1].clone();
            let mut elems: Vec<u32> = (0..qorder as u32).filter(|&x| v[x as usize]).collect();
            loop {
                let mut grew = false;
                for &x in &elems.clone() {
                    let y = qmul(x, chain[i]);
                    if !v[y as usize] {
                        v[y as usize] = true;
                        elems.push(y);
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
            tails[i] = v;
        }
        for i in 0..m {
            let sub_size = tails[i + 1].iter().filter(|&&b| b).count();
            let full_size = tails[i].iter().filter(|&&b| b).count();
            rel_orders.push((full_size / sub_size) as u32);
        }

        let rel_orders_ref = rel_orders.clone();
        let decompose = |mut x: u32| -> Vec<u32> {
            let mut out = vec![0u32; m];
            for i in 0..m {
                // find a in 0..e_i with chain[i]^{-a} x in tails[i+1]
                let zi = qinv(&qmul, qorder, chain[i]);
                let mut cand = x;
                let mut a = 0u32;
                loop {
                    if tails[i + 1][cand as usize] {
                        break;
                    }
                    cand = qmul(zi, cand);
                    a += 1;
                    assert!(a <= rel_orders_ref[i], "decomposition failed");
                }
                out[i] = a;
                x = cand;
            }
            out
        };

        let gens: Vec<String> = (0..m).map(|i| format!("q{}", i + 1)).collect();
        let mut pows = Vec::new();
        for i in 0..m {
            let mut p = 0u32;
            for _ in 0..rel_orders[i] {
                p = qmul(p, chain[i]);
            }
            let d = decompose(p);
            let w = NormalWord(d);
            if !w.is_identity() {
                pows.push((i, w));
            }
        }
        let mut conjs = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let zi = qinv(&qmul, qorder, chain[i]);
                let c = qmul(qmul(zi, chain[j]), chain[i]);
                let d = decompose(c);
                let mut plain = vec![0u32; m];
                plain[j] = 1;
                if d != plain {
                    conjs.push((i, j, NormalWord(d)));
                }
            }
        }
        let pres = PcPresentation::new(
            format!("{}/N", self.pres.name),
            gens,
            rel_orders,
            pows,
            conjs,
            cfg,
        )?;
        let qg = Group::build(pres, cfg)?;
        // map G -> Q: x maps to the coset of x, decomposed over the chain
        let mut map = vec![0u32; self.order];
        for x in 0..self.order as u32 {
            let q = rep_index[&coset_rep[x as usize]];
            let d = decompose(q);
            map[x as usize] = qg.rank(&NormalWord(d));
        }
        Ok((qg, map))
    }

    /// Direct product with trivial cross relations.
    pub fn direct_product(a: &PcPresentation, b: &PcPresentation, cfg: &Config) -> Result<Group> {
        let pres = direct_product_presentation(a, b);
        Group::build(pres, cfg)
    }
}

fn qinv(qmul: &dyn Fn(u32, u32) -> u32, qorder: usize, x: u32) -> u32 {
    // brute inverse in the coset group
    for y in 0..qorder as u32 {
        if qmul(x, y) == 0 {
            return y;
        }
    }
    unreachable!("every element has an inverse")
}

/// Concatenate two presentations, renaming on collision.
pub fn direct_product_presentation(a: &PcPresentation, b: &PcPresentation) -> PcPresentation {
    let na = a.num_gens();
    let nb = b.num_gens();
    let mut gens: Vec<String> = a.gens.clone();
    for g in &b.gens {
        let mut name = g.clone();
        while gens.contains(&name) {
            name.push('_');
        }
        gens.push(name);
    }
    let mut orders = a.rel_orders.clone();
    orders.extend_from_slice(&b.rel_orders);
    let lift_a = |w: &NormalWord| {
        let mut v = w.0.clone();
        v.extend(std::iter::repeat(0).take(nb));
        NormalWord(v)
    };
    let lift_b = |w: &NormalWord| {
        let mut v = vec![0u32; na];
        v.extend_from_slice(&w.0);
        NormalWord(v)
    };
    let mut pows = Vec::new();
    for i in 0..na {
        let w = lift_a(&a.power_rels[i]);
        if !w.is_identity() {
            pows.push((i, w));
        }
    }
    for i in 0..nb {
        let w = lift_b(&b.power_rels[i]);
        if !w.is_identity() {
            pows.push((na + i, w));
        }
    }
    let mut conjs = Vec::new();
    for i in 0..na {
        for j in i + 1..na {
            if let Some(w) = a.conj(i, j) {
                conjs.push((i, j, lift_a(w)));
            }
        }
    }
    for i in 0..nb {
        for j in i + 1..nb {
            if let Some(w) = b.conj(i, j) {
                conjs.push((na + i, na + j, lift_b(w)));
            }
        }
    }
    PcPresentation::new(
        format!("{}x{}", a.name, b.name),
        gens,
        orders,
        pows,
        conjs,
        &Config {
            max_order: u128::MAX,
            class_budget: 0,
        },
    )
    .expect("direct product of valid presentations is valid")
}

/// Central product (G x H) / <(z_G, z_H^{-1})> identifying the named central
/// elements, which must have equal orders.
pub fn central_product(
    g: &Group,
    zg: u32,
    h: &Group,
    zh: u32,
    cfg: &Config,
) -> Result<(Group, Vec<u32>)> {
    if g.element_order(zg) != h.element_order(zh) {
        return Err(Error::Invalid(
            "central product requires identified elements of equal order".into(),
        ));
    }
    let prod = Group::direct_product(g.presentation(), h.presentation(), cfg)?;
    let na = g.num_gens();
    let nb = h.num_gens();
    let zh_inv = h.inverse(zh);
    let mut w = vec![0u32; na + nb];
    w[..na].copy_from_slice(&g.unrank(zg).0);
    w[na..].copy_from_slice(&h.unrank(zh_inv).0);
    let d = prod.rank(&NormalWord(w));
    let dsub = prod.closure(&[d], false);
    if !prod.center().contains(d) {
        return Err(Error::Invalid("identified element is not central".into()));
    }
    prod.quotient(&dsub, cfg)
}

/// Central extension of (Z/p^k Z)^n by <z> realizing an alternating
/// commutator matrix: [x_j, x_i] = z^{C[j][i]}.
pub fn extension_from_form(
    p: u64,
    k: u32,
    n: usize,
    c: &[Vec<i64>],
    cfg: &Config,
) -> Result<PcPresentation> {
    let m = p.pow(k);
    if c.len() != n || c.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("form dimension mismatch".into()));
    }
    for i in 0..n {
        if c[i][i].rem_euclid(m as i64) != 0 {
            return Err(Error::Invalid("form has nonzero diagonal".into()));
        }
        for j in 0..n {
            if (c[i][j] + c[j][i]).rem_euclid(m as i64) != 0 {
                return Err(Error::Invalid("form is not alternating".into()));
            }
        }
    }
    let mut gens: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    gens.push("z".into());
    let orders: Vec<u32> = vec![m as u32; n + 1];
    let mut conjs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = c[j][i].rem_euclid(m as i64) as u32;
            if e != 0 {
                let mut w = vec![0u32; n + 1];
                w[j] = 1;
                w[n] = e;
                conjs.push((i, j, NormalWord(w)));
            }
        }
    }
    PcPresentation::new(
        format!("E({},{},{})", p, k, n),
        gens,
        orders,
        Vec::new(),
        conjs,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn cfg() -> Config {
        Config::default()
    }

    fn build(text: &str) -> Group {
        let p = parse_presentation(text, &cfg()).unwrap();
        Group::build(p, &cfg()).unwrap()
    }

    fn q8() -> Group {
        build("pcgroup Q8\ngen b a z\nord b=2 a=2 z=2\npow b = z\npow a = z\nconj a^b = a*z\nend\n")
    }

    fn h3() -> Group {
        build("pcgroup H3\ngen x y z\nord x=3 y=3 z=3\nconj y^x = y*z\nend\n")
    }

    #[test]
    fn cyclic_two_has_order_two() {
        let g = build("pcgroup C2\ngen a\nord a=2\nend\n");
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn q8_structure() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().order(), 2);
        assert_eq!(g.derived_subgroup().order(), 2);
        assert_eq!(g.center().elems, g.derived_subgroup().elems);
        let cls = g.conjugacy_classes();
        let mut sizes = cls.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        // a^2 = z has order 2
        let z = g.generator(2);
        assert_eq!(g.element_order(z), 2);
        // exhaustive centrality of z
        for x in 0..g.order() as u32 {
            assert_eq!(g.mul(x, z), g.mul(z, x));
        }
    }

    #[test]
    fn q8_identity_and_inverses() {
        let g = q8();
        for x in 0..g.order() as u32 {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(x, g.inverse(x)), 0);
        }
    }

    #[test]
    fn heisenberg_commutator_is_z() {
        let g = h3();
        assert_eq!(g.order(), 27);
        let x = g.generator(0);
        let y = g.generator(1);
        let z = g.generator(2);
        let xy = g.mul(x, y);
        let yx = g.mul(y, x);
        assert_ne!(xy, yx);
        assert_eq!(g.commutator(y, x), z);
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.derived_subgroup().order(), 3);
        assert!(g.center().contains(z));
        assert_eq!(g.conjugacy_classes().num_classes(), 11);
    }

    #[test]
    fn associativity_sampled() {
        let g = h3();
        let n = g.order() as u32;
        let mut s = 1u64;
        for _ in 0..300 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = (s >> 33) as u32 % n;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = (s >> 33) as u32 % n;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = (s >> 33) as u32 % n;
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn abelian_group_all_singleton_classes() {
        let g = build("pcgroup C6\ngen a b\nord a=2 b=3\nend\n");
        assert_eq!(g.order(), 6);
        assert_eq!(g.conjugacy_classes().num_classes(), 6);
        assert_eq!(g.center().order(), 6);
        assert!(g.derived_subgroup().is_trivial());
    }

    #[test]
    fn suffix_quotient_of_q8_is_klein() {
        let g = q8();
        let z = g.closure(&[g.generator(2)], false);
        let (q, map) = g.quotient(&z, &cfg()).unwrap();
        assert_eq!(q.order(), 4);
        // exponent 2
        for x in 0..4u32 {
            assert_eq!(q.mul(x, x), 0);
        }
        // map is a homomorphism
        for a in 0..8u32 {
            for b in 0..8u32 {
                assert_eq!(
                    map[g.mul(a, b) as usize],
                    q.mul(map[a as usize], map[b as usize])
                );
            }
        }
    }

    #[test]
    fn table_quotient_handles_non_suffix_kernel() {
        // D8 x C2 modulo the diagonal central subgroup <(r^2, c)>
        let d8 = parse_presentation(
            "pcgroup D8\ngen a b\nord a=2 b=4\nconj b^a = b^3\nend\n",
            &cfg(),
        )
        .unwrap();
        let c2 = parse_presentation("pcgroup C2\ngen c\nord c=2\nend\n", &cfg()).unwrap();
        let g = Group::direct_product(&d8, &c2, &cfg()).unwrap();
        assert_eq!(g.order(), 16);
        // element (b^2, c)
        let w = NormalWord(vec![0, 2, 1]);
        let d = g.rank(&w);
        assert!(g.center().contains(d));
        let n = g.closure(&[d], false);
        assert_eq!(n.order(), 2);
        let (q, map) = g.quotient(&n, &cfg()).unwrap();
        assert_eq!(q.order(), 8);
        for a in 0..16u32 {
            for b in 0..16u32 {
                assert_eq!(
                    map[g.mul(a, b) as usize],
                    q.mul(map[a as usize], map[b as usize])
                );
            }
        }
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = h3();
        let whole = g.closure(&[g.generator(0), g.generator(1)], false);
        assert_eq!(whole.order(), 27);
        let (q, map) = g.quotient(&whole, &cfg()).unwrap();
        assert_eq!(q.order(), 1);
        assert!(map.iter().all(|&x| x == 0));
    }

    #[test]
    fn heisenberg_order_by_multiplication_closure() {
        // independent confirmation of |G| = 27: closing the generators
        // under multiplication enumerates exactly 27 distinct elements
        let g = h3();
        let closure = g.closure(&[g.generator(0), g.generator(1), g.generator(2)], false);
        assert_eq!(closure.order(), 27);
    }

    #[test]
    fn direct_product_with_trivial_group() {
        let c3 = parse_presentation("pcgroup C3\ngen a\nord a=3\nend\n", &cfg()).unwrap();
        let triv = PcPresentation::new(
            "T",
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            &cfg(),
        )
        .unwrap();
        let g = Group::direct_product(&c3, &triv, &cfg()).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn direct_product_center() {
        let d8 = parse_presentation(
            "pcgroup D8\ngen a b\nord a=2 b=4\nconj b^a = b^3\nend\n",
            &cfg(),
        )
        .unwrap();
        let c2 = parse_presentation("pcgroup C2\ngen c\nord c=2\nend\n", &cfg()).unwrap();
        let g = Group::direct_product(&d8, &c2, &cfg()).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.center().order(), 4);
    }

    #[test]
    fn extension_from_zero_form_is_abelian() {
        let c = vec![vec![0i64; 2]; 2];
        let p = extension_from_form(3, 1, 2, &c, &cfg()).unwrap();
        let g = Group::build(p, &cfg()).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.center().order(), 27);
    }

    #[test]
    fn extension_from_symplectic_form_is_heisenberg() {
        let c = vec![vec![0, 1], vec![-1, 0]];
        let p = extension_from_form(3, 1, 2, &c, &cfg()).unwrap();
        let g = Group::build(p, &cfg()).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.derived_subgroup().order(), 3);
        // exponent 3
        for x in 0..g.order() as u32 {
            assert!(g.element_order(x) <= 3);
        }
    }

    #[test]
    fn extension_symplectic_2_4_is_extraspecial_32() {
        let c = vec![
            vec![0, 1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, -1, 0],
        ];
        let p = extension_from_form(2, 1, 4, &c, &cfg()).unwrap();
        let g = Group::build(p, &cfg()).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn rejects_non_alternating_form() {
        let c = vec![vec![0, 1], vec![1, 0]];
        assert!(extension_from_form(3, 1, 2, &c, &cfg()).is_err());
    }

    #[test]
    fn central_product_d8_c4() {
        // D8 o C4 amalgamated over the centre: order 16
        let d8 = build("pcgroup D8\ngen a b z\nord a=2 b=2 z=2\nconj b^a = b*z\nend\n");
        let c4 = build("pcgroup C4\ngen c\nord c=4\nend\n");
        let z = d8.generator(2);
        let c2 = c4.mul(c4.generator(0), c4.generator(0));
        let (g, _) = central_product(&d8, z, &c4, c2, &cfg()).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.center().order(), 4);
    }

    #[test]
    fn inconsistent_presentation_is_rejected() {
        // b^a = c alone cannot be consistent: b^{a^2} = c^a = c != b
        let p = parse_presentation(
            "pcgroup broken\ngen a b c\nord a=2 b=2 c=2\nconj b^a = c\nend\n",
            &cfg(),
        )
        .unwrap();
        let rep = crate::presentation::check_consistency(&p);
        assert!(!rep.passed());
        assert!(Group::build(p, &cfg()).is_err());
    }

    #[test]
    fn element_order_by_repeated_multiplication() {
        let g = q8();
        let a = g.generator(1);
        assert_eq!(g.element_order(a), 4);
        let z = g.generator(2);
        assert_eq!(g.element_order(z), 2);
    }

    #[test]
    fn consistency_is_relation_order_independent() {
        // permuting relation lines does not change the verdict
        let t1 = "pcgroup G\ngen x y z\nord x=3 y=3 z=3\nconj y^x = y*z\nconj z^x = z\nend\n";
        let t2 = "pcgroup G\ngen x y z\nord x=3 y=3 z=3\nconj z^x = z\nconj y^x = y*z\nend\n";
        let p1 = parse_presentation(t1, &cfg()).unwrap();
        let p2 = parse_presentation(t2, &cfg()).unwrap();
        assert_eq!(
            crate::presentation::check_consistency(&p1).passed(),
            crate::presentation::check_consistency(&p2).passed()
        );
    }
}

#[cfg(test)]
mod sync_tests {
    use super::*;
    use crate::presentation::parse_presentation;

    #[test]
    fn groups_are_shareable_across_threads() {
        let p = parse_presentation(
            "pcgroup H3\ngen x y z\nord x=3 y=3 z=3\nconj y^x = y*z\nend\n",
            &Config::default(),
        )
        .unwrap();
        let g = std::sync::Arc::new(Group::build(p, &Config::default()).unwrap());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let g = g.clone();
                std::thread::spawn(move || {
                    (g.center().order(), g.conjugacy_classes().num_classes())
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), (3, 11));
        }
    }
}
