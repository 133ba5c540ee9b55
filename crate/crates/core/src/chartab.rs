//! Exact ordinary character tables via Dixon-Schneider: common eigenvectors
//! of class matrices over a prime field F_l with l = 1 mod exponent(G),
//! lifted to cyclotomic integers by the discrete Fourier lift.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::Config;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// One exact irreducible character: degree plus a value per class.
#[derive(Debug, Clone)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

/// Class-algebra structure constants for one class: a[j][k] counts pairs
/// (x, y) in C_i x C_j with x y = rep_k, computed by scanning C_i against
/// each representative.
pub fn class_mult_coefficients(g: &Group, i: usize) -> Vec<Vec<u64>> {
    let classes = g.conjugacy_classes();
    let r = classes.num_classes();
    let mut elems_i = Vec::new();
    for x in 0..g.order() as u32 {
        if classes.class_of[x as usize] as usize == i {
            elems_i.push(x);
        }
    }
    let mut a = vec![vec![0u64; r]; r];
    for k in 0..r {
        let rep_k = classes.reps[k];
        for &x in &elems_i {
            let y = g.mul(g.inverse(x), rep_k);
            let j = classes.class_of[y as usize] as usize;
            a[j][k] += 1;
        }
    }
    a
}

/// Exact character table. Classes are those of the group's canonical class
/// partition; all values live in conductor `exponent`.
pub struct CharacterTable {
    pub exponent: u64,
    pub num_classes: usize,
    pub class_reps: Vec<u32>,
    pub class_sizes: Vec<u32>,
    /// power_map[t][k] = class of rep_k^t for t in 0..exponent
    pub power_map: Vec<Vec<u32>>,
    pub irreducibles: Vec<Character>,
    pub modulus: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Smallest prime l = 1 mod m with l > 2*sqrt(|G|).
fn choose_prime(m: u64, order: u64) -> u64 {
    let bound = 2 * isqrt(order) + 1;
    let mut l = m + 1;
    loop {
        if l > bound && is_prime(l) {
            return l;
        }
        l += m;
    }
}

fn pow_mod(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut r = 1u64;
    b %= l;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, l: u64) -> u64 {
    pow_mod(a, l - 2, l)
}

fn smallest_primitive_root(l: u64) -> u64 {
    let mut factors = Vec::new();
    let mut n = l - 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'g: for g in 2..l {
        for &q in &factors {
            if pow_mod(g, (l - 1) / q, l) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("prime fields have primitive roots")
}

/// Basis of a subspace kept in reduced row echelon form.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Reduce a set of vectors to RREF over F_l.
fn rref(mut rows: Vec<Vec<u64>>, l: u64) -> Space {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..width {
        let mut piv = None;
        for r in rank..rows.len() {
            if rows[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], l);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % l;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..width {
                    let sub = f * rows[rank][c] % l;
                    rows[r][c] = (rows[r][c] + l - sub) % l;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Space { rows, pivots }
}

/// Characteristic polynomial of a matrix over F_l (coefficients low to
/// high) via Hessenberg reduction.
fn char_poly(mat: &[Vec<u64>], l: u64) -> Vec<u64> {
    let d = mat.len();
    let mut h: Vec<Vec<u64>> = mat.to_vec();
    // similarity reduction to upper Hessenberg
    for j in 0..d.saturating_sub(2) {
        let mut piv = None;
        for i in j + 1..d {
            if h[i][j] != 0 {
                piv = Some(i);
                break;
            }
        }
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], l);
        for i in j + 2..d {
            if h[i][j] == 0 {
                continue;
            }
            let f = h[i][j] * inv % l;
            for c in 0..d {
                let sub = f * h[j + 1][c] % l;
                h[i][c] = (h[i][c] + l - sub) % l;
            }
            // inverse column operation keeps similarity
            for r in 0..d {
                let add = f * h[r][i] % l;
                h[r][j + 1] = (h[r][j + 1] + add) % l;
            }
        }
    }
    // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
    //          - sum_i h[i][k-1] (prod subdiag) p_i(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=d {
        let mut p = vec![0u64; k + 1];
        let prev = &polys[k - 1];
        let a = h[k - 1][k - 1] % l;
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] = (p[i + 1] + c) % l;
            p[i] = (p[i] + (l - a) * c) % l;
        }
        let mut subprod = 1u64;
        for i in (0..k - 1).rev() {
            subprod = subprod * h[i + 1][i] % l;
            let f = h[i][k - 1] * subprod % l;
            if f == 0 {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                p[t] = (p[t] + (l - f) * c % l) % l;
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

fn poly_roots(p: &[u64], l: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..l {
        let mut acc = 0u64;
        for &c in p.iter().rev() {
            acc = (acc * x + c) % l;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

/// Kernel basis of (m - lambda I) over F_l.
fn eigen_kernel(m: &[Vec<u64>], lambda: u64, l: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = (row[i] + l - lambda % l) % l;
    }
    let sp = rref(a, l);
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; d];
    for &p in &sp.pivots {
        is_pivot[p] = true;
    }
    for free in 0..d {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (r, &p) in sp.pivots.iter().enumerate() {
            v[p] = (l - sp.rows[r][free] % l) % l;
        }
        kernel.push(v);
    }
    kernel
}

impl CharacterTable {
    /// Compute the exact table. Deterministic: smallest admissible prime,
    /// class matrices in canonical order, rows sorted by degree then by
    /// lexicographic value vectors.
    pub fn compute(g: &Group, cfg: &Config) -> Result<CharacterTable> {
        let classes = g.conjugacy_classes();
        let r = classes.num_classes();
        let budget = (r as u128).pow(3);
        if budget > cfg.class_budget {
            return Err(Error::Budget {
                detail: format!(
                    "{} classes: {}^3 = {} exceeds class budget {}",
                    r, r, budget, cfg.class_budget
                ),
            });
        }
        let m = g.exponent();
        let order = g.order() as u64;
        let l = choose_prime(m, order);

        // class element lists and inverse-class map
        let mut elems_by_class: Vec<Vec<u32>> = vec![Vec::new(); r];
        for x in 0..g.order() as u32 {
            elems_by_class[classes.class_of[x as usize] as usize].push(x);
        }
        let inv_class: Vec<usize> = (0..r)
            .map(|k| classes.class_of[g.inverse(classes.reps[k]) as usize] as usize)
            .collect();

        // power map: rep_k^t for t in 0..m
        let mut power_map = vec![vec![0u32; r]; m as usize];
        for k in 0..r {
            let x = classes.reps[k];
            let mut cur = 0u32;
            for t in 0..m as usize {
                power_map[t][k] = classes.class_of[cur as usize];
                cur = g.mul(cur, x);
            }
        }

        let class_matrix = |i: usize| -> Vec<Vec<u64>> {
            let mut a = vec![vec![0u64; r]; r];
            for k in 0..r {
                let rep_k = classes.reps[k];
                for &x in &elems_by_class[i] {
                    let y = g.mul(g.inverse(x), rep_k);
                    let j = classes.class_of[y as usize] as usize;
                    a[j][k] = (a[j][k] + 1) % l;
                }
            }
            a
        };

        // split the full space into common eigenspaces
        let full = rref(
            (0..r)
                .map(|i| {
                    let mut v = vec![0u64; r];
                    v[i] = 1;
                    v
                })
                .collect(),
            l,
        );
        let mut spaces = vec![full];
        for i in 1..r {
            if spaces.iter().all(|s| s.dim() == 1) {
                break;
            }
            let a = class_matrix(i);
            let mut next = Vec::new();
            for s in spaces {
                if s.dim() == 1 {
                    next.push(s);
                    continue;
                }
                let d = s.dim();
                // restriction X of `a` to the space
                let mut images: Vec<Vec<u64>> = Vec::with_capacity(d);
                for b in &s.rows {
                    let mut u = vec![0u64; r];
                    for (j, uj) in u.iter_mut().enumerate() {
                        let mut acc = 0u128;
                        for k in 0..r {
                            acc += a[j][k] as u128 * b[k] as u128;
                        }
                        *uj = (acc % l as u128) as u64;
                    }
                    images.push(u);
                }
                let mut x = vec![vec![0u64; d]; d];
                for (srcidx, u) in images.iter().enumerate() {
                    for (t, &p) in s.pivots.iter().enumerate() {
                        x[t][srcidx] = u[p];
                    }
                }
                let cp = char_poly(&x, l);
                let mut eigs = poly_roots(&cp, l);
                eigs.sort_unstable();
                if eigs.len() <= 1 {
                    next.push(s);
                    continue;
                }
                for lam in eigs {
                    let ker = eigen_kernel(&x, lam, l);
                    if ker.is_empty() {
                        continue;
                    }
                    let lifted: Vec<Vec<u64>> = ker
                        .iter()
                        .map(|y| {
                            let mut v = vec![0u64; r];
                            for (t, row) in s.rows.iter().enumerate() {
                                if y[t] == 0 {
                                    continue;
                                }
                                for c in 0..r {
                                    v[c] = (v[c] + y[t] * row[c]) % l;
                                }
                            }
                            v
                        })
                        .collect();
                    next.push(rref(lifted, l));
                }
            }
            spaces = next;
        }
        if spaces.iter().any(|s| s.dim() != 1) {
            return Err(Error::Budget {
                detail: "class matrices failed to split the class algebra".into(),
            });
        }

        // each space is spanned by a central character vector; normalize at
        // the identity class
        let sizes_mod: Vec<u64> = classes.sizes.iter().map(|&s| s as u64 % l).collect();
        let order_mod = order % l;
        let mut raw: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
        for s in &spaces {
            let v = &s.rows[0];
            if v[0] == 0 {
                return Err(Error::Budget {
                    detail: "eigenvector vanishes at the identity class".into(),
                });
            }
            let norm = inv_mod(v[0], l);
            let w: Vec<u64> = v.iter().map(|&c| c * norm % l).collect();
            // 1/chi(1)^2 = (sum_k w_k w_{k*} / |C_k|) / |G|
            let mut t = 0u64;
            for k in 0..r {
                let term = w[k] * w[inv_class[k]] % l * inv_mod(sizes_mod[k], l) % l;
                t = (t + term) % l;
            }
            let d_sq = order_mod * inv_mod(t, l) % l;
            // degree < l/2, so exactly one square root lies below l/2
            let mut deg = None;
            for c in 1..l {
                if c * c % l == d_sq {
                    let cand = if c <= l / 2 { c } else { l - c };
                    deg = Some(cand);
                    break;
                }
            }
            let deg = deg.ok_or_else(|| Error::Budget {
                detail: "degree has no square root mod l".into(),
            })?;
            raw.push((deg, w));
        }

        // lift values: chi(g_k) = sum_j c_j zeta_m^j with
        // c_j = (1/m) sum_t chi(rep_k^t) z^{-jt} mod l, 0 <= c_j <= degree
        let z = pow_mod(smallest_primitive_root(l), (l - 1) / m, l);
        let m_inv = inv_mod(m % l, l);
        let mut irreducibles: Vec<Character> = Vec::with_capacity(r);
        for (deg, w) in &raw {
            let val_mod = |k: usize| -> u64 { *deg % l * w[k] % l * inv_mod(sizes_mod[k], l) % l };
            let mut values = Vec::with_capacity(r);
            for k in 0..r {
                let mut terms: Vec<(i64, BigInt)> = Vec::new();
                for j in 0..m {
                    let mut acc = 0u64;
                    for t in 0..m {
                        let cls = power_map[t as usize][k] as usize;
                        let zexp = pow_mod(z, (j * t) % m, l);
                        acc = (acc + val_mod(cls) * inv_mod(zexp, l)) % l;
                    }
                    let c = acc * m_inv % l;
                    if c != 0 {
                        if c > *deg {
                            return Err(Error::Budget {
                                detail: "character lift out of range".into(),
                            });
                        }
                        terms.push((j as i64, BigInt::from(c)));
                    }
                }
                values.push(Cyclotomic::from_powers(m, &terms)?);
            }
            irreducibles.push(Character { degree: *deg, values });
        }

        // deterministic order: degree, then lexicographic value vectors
        irreducibles.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| format!("{:?}", a.values).cmp(&format!("{:?}", b.values)))
        });

        let table = CharacterTable {
            exponent: m,
            num_classes: r,
            class_reps: classes.reps.clone(),
            class_sizes: classes.sizes.clone(),
            power_map,
            irreducibles,
            modulus: l,
        };
        table.verify_basics(order)?;
        Ok(table)
    }

    /// Cheap exact invariants: values at the identity equal the degrees and
    /// the degree squares sum to |G|.
    fn verify_basics(&self, order: u64) -> Result<()> {
        let mut sum = BigInt::zero();
        for chi in &self.irreducibles {
            let d = BigInt::from(chi.degree);
            if chi.values[0].as_integer() != Some(d.clone()) {
                return Err(Error::Budget {
                    detail: "character value at identity differs from degree".into(),
                });
            }
            sum += &d * &d;
        }
        if sum != BigInt::from(order) {
            return Err(Error::Budget {
                detail: format!("sum of squared degrees {} != |G| {}", sum, order),
            });
        }
        Ok(())
    }

    /// chi(x) for an arbitrary element: lookup through the class map.
    pub fn value_at(&self, g: &Group, chi: usize, x: u32) -> &Cyclotomic {
        let k = g.conjugacy_classes().class_of[x as usize] as usize;
        &self.irreducibles[chi].values[k]
    }

    /// Exact row orthogonality: sum_k |C_k| chi_i(g_k) conj(chi_j(g_k))
    /// equals |G| delta_ij.
    pub fn check_row_orthogonality(&self, order: u64) -> bool {
        let r = self.num_classes;
        for i in 0..r {
            for j in i..r {
                let mut acc = Cyclotomic::zero(self.exponent);
                for k in 0..r {
                    let a = &self.irreducibles[i].values[k];
                    let b = self.irreducibles[j].values[k].conjugate();
                    let t = a.mul(&b).scale(&BigInt::from(self.class_sizes[k]));
                    acc = acc.add(&t);
                }
                let expect = if i == j { BigInt::from(order) } else { BigInt::zero() };
                if acc.as_integer() != Some(expect) {
                    return false;
                }
            }
        }
        true
    }

    /// Second orthogonality at a pair of classes:
    /// sum_i chi_i(g_k) conj(chi_i(g_t)) = delta_{kt} |C_G(g_k)|.
    pub fn check_column_orthogonality(&self, order: u64) -> bool {
        let r = self.num_classes;
        for k in 0..r {
            for t in k..r {
                let mut acc = Cyclotomic::zero(self.exponent);
                for chi in &self.irreducibles {
                    let a = &chi.values[k];
                    let b = chi.values[t].conjugate();
                    acc = acc.add(&a.mul(&b));
                }
                let expect = if k == t {
                    BigInt::from(order / self.class_sizes[k] as u64)
                } else {
                    BigInt::zero()
                };
                if acc.as_integer() != Some(expect) {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction of every irreducible to a subgroup: exact values per
    /// subgroup element via the class map.
    pub fn restrict_to(&self, g: &Group, s: &Subgroup) -> Vec<Vec<Cyclotomic>> {
        (0..self.irreducibles.len())
            .map(|chi| {
                s.elems
                    .iter()
                    .map(|&x| self.value_at(g, chi, x).clone())
                    .collect()
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }
}
