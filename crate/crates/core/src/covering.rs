//! Central extensions 1 -> A -> G* -> G -> 1 with a normalized section, and
//! the projective data they induce: central characters of A, transgression
//! cocycles, alpha-regular central elements, and the partition of Irr(G*)
//! into fibers over the central characters.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::chartab::CharacterTable;
use crate::config::Config;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::presentation::CoveringSpec;
use crate::word::NormalWord;

/// A loaded covering. The kernel A is the suffix box of the pc chain of G*;
/// the canonical section of the quotient map zero-fills the suffix
/// coordinates, so mu(1) = 1.
pub struct Covering {
    pub gstar: Arc<Group>,
    pub group: Arc<Group>,
    pub kernel_start: usize,
    pub label: String,
    /// |A|
    pub kernel_order: usize,
    /// exponent of A (conductor for central character values)
    pub kernel_exponent: u64,
    /// invariant factors of A (nontrivial, ascending)
    pub kernel_invariants: Vec<u64>,
    /// quotient map G* -> G on element ids
    pub quotient_map: Vec<u32>,
    /// A is contained in the derived subgroup of G* (stem extension)
    pub is_stem: bool,
    /// catalog claim that A realizes the full Schur multiplier
    pub is_representation_group: bool,
    /// optional section perturbation: for each g in G an element a(g) of A
    /// multiplied into mu(g); a(1) = 1
    twist: Option<Vec<u32>>,
}

/// A homomorphism lambda: A -> C^x, recorded by the exponents t_i with
/// lambda(s_i) = zeta_M^{t_i} on the suffix generators s_i, M = exp(A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharacter {
    pub exps: Vec<u64>,
    pub modulus: u64,
}

impl CentralCharacter {
    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&t| t == 0)
    }
}

impl Covering {
    /// Build groups and verify the structural requirements: A central,
    /// the quotient consistent, |G*| = |G| |A|.
    pub fn load(spec: &CoveringSpec, cfg: &Config) -> Result<Covering> {
        let gstar = Arc::new(Group::build(spec.gstar.clone(), cfg)?);
        let n = gstar.num_gens();
        let k = spec.kernel_start;
        // A = the suffix box; centrality of the suffix generators suffices
        for i in k..n {
            let s = gstar.generator(i);
            for j in 0..n {
                let g = gstar.generator(j);
                if gstar.mul(s, g) != gstar.mul(g, s) {
                    return Err(Error::Covering(format!(
                        "kernel generator `{}` is not central",
                        gstar.presentation().gens[i]
                    )));
                }
            }
        }
        let mut qpres = gstar.suffix_quotient_presentation(k);
        qpres.name = spec.label.clone();
        let group = Arc::new(Group::build(qpres, cfg)?);

        let kernel_order: usize = gstar.presentation().rel_orders[k..]
            .iter()
            .map(|&e| e as usize)
            .product();
        debug_assert_eq!(gstar.order(), group.order() * kernel_order);

        let quotient_map: Vec<u32> = (0..gstar.order() as u32)
            .map(|x| {
                let w = gstar.unrank(x);
                let head = NormalWord(w.0[..k].to_vec());
                group.rank(&head)
            })
            .collect();

        // stem check: suffix generators inside [G*, G*]
        let derived = gstar.derived_subgroup();
        let is_stem = (k..n).all(|i| derived.contains(gstar.generator(i)));

        // exponent and invariant factors of A via the relation matrix of
        // the suffix presentation
        let m = n - k;
        let mut rel = vec![vec![0i128; m]; m];
        for i in 0..m {
            rel[i][i] = gstar.presentation().rel_orders[k + i] as i128;
            let w = &gstar.presentation().power_rels[k + i];
            for (gidx, x) in w.letters() {
                debug_assert!(gidx >= k);
                rel[i][gidx - k] -= x as i128;
            }
        }
        let snf = crate::snf::smith_normal_form(&rel);
        let mut kernel_invariants: Vec<u64> = snf
            .diag
            .iter()
            .map(|&d| d.unsigned_abs() as u64)
            .filter(|&d| d > 1)
            .collect();
        kernel_invariants.sort_unstable();
        let kernel_exponent = kernel_invariants.last().copied().unwrap_or(1);
        debug_assert_eq!(
            kernel_invariants.iter().product::<u64>().max(1),
            kernel_order as u64
        );

        Ok(Covering {
            gstar,
            group,
            kernel_start: k,
            label: spec.label.clone(),
            kernel_order,
            kernel_exponent,
            kernel_invariants,
            quotient_map,
            is_stem,
            is_representation_group: false,
            twist: None,
        })
    }

    /// The trivial covering G* = G, A = 1: projective data degenerates to
    /// ordinary character data. Used for groups with trivial multiplier.
    pub fn trivial(group: Arc<Group>) -> Covering {
        let order = group.order();
        Covering {
            gstar: group.clone(),
            group,
            kernel_start: usize::MAX,
            label: String::new(),
            kernel_order: 1,
            kernel_exponent: 1,
            kernel_invariants: Vec::new(),
            quotient_map: (0..order as u32).collect(),
            is_stem: true,
            is_representation_group: false,
            twist: None,
        }
    }

    pub fn is_trivial_covering(&self) -> bool {
        self.kernel_order == 1
    }

    fn suffix_range(&self) -> std::ops::Range<usize> {
        if self.is_trivial_covering() {
            0..0
        } else {
            self.kernel_start..self.gstar.num_gens()
        }
    }

    /// Elements of A (ids in G*), ascending.
    pub fn kernel_elements(&self) -> Vec<u32> {
        if self.is_trivial_covering() {
            return vec![0];
        }
        let k = self.kernel_start;
        let n = self.gstar.num_gens();
        let mut out = Vec::with_capacity(self.kernel_order);
        let mut w = NormalWord::identity(n);
        loop {
            out.push(self.gstar.rank(&w));
            // increment the suffix coordinates
            let mut i = n;
            loop {
                if i == k {
                    out.sort_unstable();
                    return out;
                }
                i -= 1;
                w.0[i] += 1;
                if w.0[i] < self.gstar.presentation().rel_orders[i] {
                    break;
                }
                w.0[i] = 0;
            }
        }
    }

    /// Canonical (or perturbed) section mu: G -> G*.
    pub fn section(&self, g: u32) -> u32 {
        if self.is_trivial_covering() {
            return g;
        }
        let w = self.group.unrank(g);
        let n = self.gstar.num_gens();
        let mut v = vec![0u32; n];
        v[..self.kernel_start].copy_from_slice(&w.0);
        let base = self.gstar.rank(&NormalWord(v));
        match &self.twist {
            Some(t) => self.gstar.mul(base, t[g as usize]),
            None => base,
        }
    }

    /// Same covering with mu'(g) = mu(g) a(g) for a pseudorandom a: G -> A
    /// fixing the identity. Joint-kernel verdicts within a fixed lambda are
    /// invariant under this change.
    pub fn with_perturbed_section(&self, seed: u64) -> Covering {
        let a_elems = self.kernel_elements();
        let mut s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut twist = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() as u32 {
            if g == 0 {
                twist.push(0);
                continue;
            }
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            twist.push(a_elems[(s % a_elems.len() as u64) as usize]);
        }
        Covering {
            gstar: self.gstar.clone(),
            group: self.group.clone(),
            kernel_start: self.kernel_start,
            label: self.label.clone(),
            kernel_order: self.kernel_order,
            kernel_exponent: self.kernel_exponent,
            kernel_invariants: self.kernel_invariants.clone(),
            quotient_map: self.quotient_map.clone(),
            is_stem: self.is_stem,
            is_representation_group: self.is_representation_group,
            twist: Some(twist),
        }
    }

    /// lambda evaluated at an element a of A, as the exponent of
    /// zeta_{exp(A)}.
    pub fn eval_central_char(&self, lambda: &CentralCharacter, a: u32) -> u64 {
        if self.is_trivial_covering() {
            return 0;
        }
        let w = self.gstar.unrank(a);
        let em = self.kernel_exponent;
        let mut acc = 0u64;
        for (i0, i) in self.suffix_range().enumerate() {
            acc = (acc + w.0[i] as u64 * lambda.exps[i0]) % em;
        }
        acc
    }

    /// All |A| homomorphisms A -> C^x, trivial first, in lexicographic
    /// order of the exponent tuples on the suffix generators.
    pub fn central_characters(&self) -> Vec<CentralCharacter> {
        if self.is_trivial_covering() {
            return vec![CentralCharacter {
                exps: Vec::new(),
                modulus: 1,
            }];
        }
        let em = self.kernel_exponent;
        let m = self.gstar.num_gens() - self.kernel_start;
        let pres = self.gstar.presentation();
        let mut out = Vec::new();
        let mut t = vec![0u64; m];
        loop {
            // hom condition: e_i t_i = sum_j w_i[j] t_j (mod exp A)
            let mut ok = true;
            for i in 0..m {
                let gi = self.kernel_start + i;
                let lhs = pres.rel_orders[gi] as u64 % em * t[i] % em;
                let mut rhs = 0u64;
                for (gj, x) in pres.power_rels[gi].letters() {
                    rhs = (rhs + x as u64 * t[gj - self.kernel_start]) % em;
                }
                if lhs != rhs {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(CentralCharacter {
                    exps: t.clone(),
                    modulus: em,
                });
            }
            // next tuple
            let mut i = m;
            loop {
                if i == 0 {
                    debug_assert_eq!(out.len(), self.kernel_order);
                    return out;
                }
                i -= 1;
                t[i] += 1;
                if t[i] < em {
                    break;
                }
                t[i] = 0;
            }
        }
    }

    /// Exact transgression cocycle value tra(lambda)(g, h) =
    /// lambda(mu(g) mu(h) mu(gh)^{-1}) as an exponent of zeta_{exp(A)}.
    pub fn cocycle_exp(&self, lambda: &CentralCharacter, g: u32, h: u32) -> u64 {
        if self.is_trivial_covering() {
            return 0;
        }
        let mg = self.section(g);
        let mh = self.section(h);
        let mgh = self.section(self.group.mul(g, h));
        let w = self
            .gstar
            .mul(self.gstar.mul(mg, mh), self.gstar.inverse(mgh));
        self.eval_central_char(lambda, w)
    }

    /// The same value as an exact root of unity in conductor `conductor`
    /// (a multiple of exp(A)).
    pub fn cocycle_value(
        &self,
        lambda: &CentralCharacter,
        g: u32,
        h: u32,
        conductor: u64,
    ) -> Result<Cyclotomic> {
        let e = self.cocycle_exp(lambda, g, h);
        let scale = conductor / self.kernel_exponent;
        if conductor % self.kernel_exponent != 0 {
            return Err(Error::ConductorMismatch(self.kernel_exponent, conductor));
        }
        Cyclotomic::root_of_unity(conductor, (e * scale) as i64)
    }

    /// Central elements z of Z(G) with tra(lambda)(z, g) = tra(lambda)(g, z)
    /// for every g in G, by full scan.
    pub fn alpha_regular_central(&self, lambda: &CentralCharacter) -> Vec<u32> {
        let z = self.group.center();
        let mut out = Vec::new();
        'outer: for &zel in &z.elems {
            for g in 0..self.group.order() as u32 {
                if self.cocycle_exp(lambda, zel, g) != self.cocycle_exp(lambda, g, zel) {
                    continue 'outer;
                }
            }
            out.push(zel);
        }
        out
    }

    /// True iff 1 is the only alpha-regular element of Z(G); for nilpotent
    /// G this is equivalent to every irreducible tra(lambda)-representation
    /// being faithful. Refused for non-nilpotent groups.
    pub fn exists_faithful_irrep_by_regularity(
        &self,
        lambda: &CentralCharacter,
    ) -> Result<bool> {
        if !self.group.is_nilpotent() {
            return Err(Error::NotNilpotent(self.group.name().to_string()));
        }
        Ok(self.alpha_regular_central(lambda) == vec![0u32])
    }

    /// The central character of an irreducible of G*: the exponents j_i
    /// with chi(s_i) = chi(1) zeta_m^{j_i}, converted to base zeta_{exp A}.
    pub fn central_character_of(
        &self,
        table: &CharacterTable,
        chi: usize,
    ) -> Result<CentralCharacter> {
        if self.is_trivial_covering() {
            return Ok(CentralCharacter {
                exps: Vec::new(),
                modulus: 1,
            });
        }
        let m = table.exponent;
        let em = self.kernel_exponent;
        debug_assert_eq!(m % em, 0);
        let d = BigInt::from(self.gstar_degree(table, chi));
        let mut exps = Vec::new();
        for i in self.suffix_range() {
            let s = self.gstar.generator(i);
            let v = table.value_at(&self.gstar, chi, s);
            let j = v.as_scaled_root(&d).ok_or_else(|| {
                Error::Covering("kernel generator is not scalar in an irreducible".into())
            })?;
            // chi(s_i) = zeta_m^j = zeta_em^{j / (m/em)}
            let scale = m / em;
            if j % scale != 0 {
                return Err(Error::Covering(
                    "kernel character value outside Hom(A, C^x)".into(),
                ));
            }
            exps.push(j / scale % em);
        }
        Ok(CentralCharacter { exps, modulus: em })
    }

    fn gstar_degree(&self, table: &CharacterTable, chi: usize) -> u64 {
        table.irreducibles[chi].degree
    }

    /// Indices of the irreducibles of G* lying over lambda: exact equality
    /// chi(a) = chi(1) lambda(a) checked on the suffix generators.
    pub fn irr_over(
        &self,
        table: &CharacterTable,
        lambda: &CentralCharacter,
    ) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for chi in 0..table.irreducibles.len() {
            if &self.central_character_of(table, chi)? == lambda {
                out.push(chi);
            }
        }
        Ok(out)
    }
}

/// Scalar signature of one character at a list of probes in G: for each
/// probe either NonScalar (None) or the exponent j of the exact scalar
/// zeta_m^j = chi(mu(g)) / chi(1).
pub fn scalar_signature(
    cov: &Covering,
    table: &CharacterTable,
    chi: usize,
    probes: &[u32],
) -> Vec<Option<u64>> {
    let d = BigInt::from(table.irreducibles[chi].degree);
    let dsq = BigInt::from(table.irreducibles[chi].degree.pow(2));
    probes
        .iter()
        .map(|&g| {
            let x = cov.section(g);
            let v = table.value_at(&cov.gstar, chi, x);
            if v.abs_square().as_integer() != Some(dsq.clone()) {
                None
            } else {
                v.as_scaled_root(&d)
            }
        })
        .collect()
}

/// Probes surviving a multiset of characters sharing one lambda: a probe
/// survives iff every member is scalar there and all the scalars agree.
pub fn joint_surviving_probes(
    cov: &Covering,
    table: &CharacterTable,
    members: &[usize],
    probes: &[u32],
) -> Result<Vec<u32>> {
    if members.is_empty() {
        return Ok(probes.to_vec());
    }
    let lam0 = cov.central_character_of(table, members[0])?;
    for &m in &members[1..] {
        if cov.central_character_of(table, m)? != lam0 {
            return Err(Error::Invalid(
                "joint kernel requires members sharing one central character".into(),
            ));
        }
    }
    let sigs: Vec<Vec<Option<u64>>> = members
        .iter()
        .map(|&m| scalar_signature(cov, table, m, probes))
        .collect();
    let mut out = Vec::new();
    for (pi, &g) in probes.iter().enumerate() {
        let first = sigs[0][pi];
        let survive = first.is_some() && sigs.iter().all(|s| s[pi] == first);
        if survive {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_covering;

    fn cfg() -> Config {
        Config::default()
    }

    fn h3_star() -> Covering {
        // representation group of H3(Z/3): 5 generators, order 243
        let text = "pcgroup H3star\n\
                    gen x y z z1 z2\n\
                    ord x=3 y=3 z=3 z1=3 z2=3\n\
                    conj y^x = y*z\n\
                    conj z^x = z*z1\n\
                    conj z^y = z*z2\n\
                    end\n\
                    kernel z1 z2\n\
                    quotient H3\n";
        let spec = parse_covering(text, &cfg()).unwrap();
        Covering::load(&spec, &cfg()).unwrap()
    }

    #[test]
    fn h3_star_loads_with_expected_sizes() {
        let c = h3_star();
        assert_eq!(c.gstar.order(), 243);
        assert_eq!(c.kernel_order, 9);
        assert_eq!(c.group.order(), 27);
        assert!(c.is_stem, "kernel must lie in the derived subgroup");
        assert_eq!(c.kernel_invariants, vec![3, 3]);
        // quotient satisfies the Heisenberg relations: [y, x] = z
        let g = &c.group;
        let x = g.generator(0);
        let y = g.generator(1);
        let z = g.generator(2);
        assert_eq!(g.commutator(y, x), z);
    }

    #[test]
    fn central_characters_enumerate_hom_a() {
        let c = h3_star();
        let chars = c.central_characters();
        assert_eq!(chars.len(), 9);
        assert!(chars[0].is_trivial());
    }

    #[test]
    fn cocycle_is_normalized() {
        let c = h3_star();
        let chars = c.central_characters();
        let lam = chars.last().unwrap();
        for g in 0..27u32 {
            assert_eq!(c.cocycle_exp(lam, 0, g), 0);
            assert_eq!(c.cocycle_exp(lam, g, 0), 0);
        }
        // trivial lambda gives the constant cocycle
        for g in 0..27u32 {
            for h in 0..27u32 {
                assert_eq!(c.cocycle_exp(&chars[0], g, h), 0);
            }
        }
    }

    #[test]
    fn heisenberg_transgression_on_x_z_hits_z1() {
        let c = h3_star();
        // mu(x) mu(z) mu(xz)^{-1} lies in A and picks out the z1 exponent:
        // with this chain the commutator [z, x] = z1 appears when the
        // section reorders x past z.
        let chars = c.central_characters();
        let g = &c.group;
        let x = g.generator(0);
        let z = g.generator(2);
        // find lambda with lambda(z1) = zeta_3, lambda(z2) = 1
        let lam = chars
            .iter()
            .find(|l| l.exps == vec![1, 0])
            .expect("character with exponents (1,0)");
        let fwd = c.cocycle_exp(lam, x, z);
        let bwd = c.cocycle_exp(lam, z, x);
        // the commutator relation [z, x] = z1 makes the two orders differ
        // by exactly lambda(z1)
        assert_ne!(fwd, bwd);
        assert_eq!((bwd + 3 - fwd) % 3, c.eval_central_char(lam, c.gstar.generator(3)) % 3);
    }

    #[test]
    fn alpha_regularity_matches_heisenberg_theory() {
        let c = h3_star();
        let chars = c.central_characters();
        // trivial lambda: all of Z(G) is regular
        let reg = c.alpha_regular_central(&chars[0]);
        assert_eq!(reg.len(), 3);
        // faithful lambda on either coordinate: only the identity
        for lam in &chars {
            let faithful_coord = lam.exps.iter().any(|&t| t % 3 != 0 && t != 0);
            let reg = c.alpha_regular_central(lam);
            if faithful_coord {
                assert_eq!(reg, vec![0], "lambda {:?}", lam.exps);
            }
        }
    }

    #[test]
    fn rejects_noncentral_kernel() {
        let text = "pcgroup bad\n\
                    gen x y z\n\
                    ord x=3 y=3 z=3\n\
                    conj y^x = y*z\n\
                    end\n\
                    kernel y z\n\
                    quotient C3\n";
        let spec = parse_covering(text, &cfg()).unwrap();
        assert!(Covering::load(&spec, &cfg()).is_err());
    }

    #[test]
    fn degenerate_full_kernel_gives_trivial_quotient() {
        let text = "pcgroup K\ngen a b\nord a=2 b=2\nend\nkernel a b\nquotient T\n";
        let spec = parse_covering(text, &cfg()).unwrap();
        let c = Covering::load(&spec, &cfg()).unwrap();
        assert_eq!(c.group.order(), 1);
        assert_eq!(c.kernel_order, 4);
    }

    #[test]
    fn irr_partition_is_complete() {
        let c = h3_star();
        let t = CharacterTable::compute(&c.gstar, &cfg()).unwrap();
        let mut total = 0;
        for lam in c.central_characters() {
            total += c.irr_over(&t, &lam).unwrap().len();
        }
        assert_eq!(total, t.irreducibles.len());
    }

    #[test]
    fn scalar_signature_examples() {
        let c = h3_star();
        let t = CharacterTable::compute(&c.gstar, &cfg()).unwrap();
        // identity probe is the scalar 1 for every character
        for chi in 0..t.irreducibles.len() {
            let sig = scalar_signature(&c, &t, chi, &[0]);
            assert_eq!(sig, vec![Some(0)]);
        }
        // linear characters are scalar at every probe
        let probes: Vec<u32> = (0..27).collect();
        for chi in 0..t.irreducibles.len() {
            if t.irreducibles[chi].degree == 1 {
                let sig = scalar_signature(&c, &t, chi, &probes);
                assert!(sig.iter().all(|s| s.is_some()));
            }
        }
    }

    #[test]
    fn joint_kernel_rejects_mixed_central_characters() {
        let c = h3_star();
        let t = CharacterTable::compute(&c.gstar, &cfg()).unwrap();
        let chars = c.central_characters();
        let triv = c.irr_over(&t, &chars[0]).unwrap();
        let lam = chars.iter().find(|l| !l.is_trivial()).unwrap();
        let other = c.irr_over(&t, lam).unwrap();
        let mixed = vec![triv[0], other[0]];
        let probes: Vec<u32> = (1..27).collect();
        assert!(joint_surviving_probes(&c, &t, &mixed, &probes).is_err());
    }

    #[test]
    fn central_characters_of_cyclic_p_squared_kernel() {
        // A = Z/9 presented on two suffix generators d, v with d^3 = v
        let text = "pcgroup E\ngen a b c d v\nord a=3 b=3 c=3 d=3 v=3\n\
                    pow a = d\npow d = v\nconj b^a = b*c\nconj c^a = c*d\nconj c^b = c*v\nend\n\
                    kernel d v\nquotient q\n";
        let spec = parse_covering(text, &cfg()).unwrap();
        if let Ok(c) = Covering::load(&spec, &cfg()) {
            assert_eq!(c.kernel_order, 9);
            if c.kernel_invariants == vec![9] {
                let chars = c.central_characters();
                assert_eq!(chars.len(), 9);
                // phi(9) = 6 faithful ones take a primitive 9th root on d
                let faithful = chars
                    .iter()
                    .filter(|l| l.exps[0] % 3 != 0 || (l.exps[0] != 0 && l.exps[1] % 3 != 0))
                    .count();
                assert!(faithful > 0);
            }
        }
    }

    #[test]
    fn trivial_lambda_fiber_counts_quotient_irreducibles() {
        let c = h3_star();
        let t = CharacterTable::compute(&c.gstar, &cfg()).unwrap();
        let chars = c.central_characters();
        let fiber = c.irr_over(&t, &chars[0]).unwrap();
        // characters with A in the kernel = irreducibles of G*/A = Irr(H3)
        assert_eq!(fiber.len(), c.group.conjugacy_classes().num_classes());
    }

    #[test]
    fn faithful_lambda_fiber_has_degree_three() {
        let c = h3_star();
        let t = CharacterTable::compute(&c.gstar, &cfg()).unwrap();
        let chars = c.central_characters();
        let lam = chars
            .iter()
            .find(|l| l.exps == vec![0, 1])
            .expect("character (0,1)");
        let fiber = c.irr_over(&t, lam).unwrap();
        assert!(!fiber.is_empty());
        for chi in fiber {
            assert_eq!(t.irreducibles[chi].degree, 3);
        }
    }
}
