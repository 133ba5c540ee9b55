//! Exact arithmetic in Z[zeta_n], the ring of integers of the n-th
//! cyclotomic field.
//!
//! Values are stored as the canonical remainder modulo the n-th cyclotomic
//! polynomial, with arbitrary-precision integer coefficients, so equality
//! is coefficient-vector equality. No floating point is involved anywhere.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn euler_phi(mut n: u64) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Exact division of integer polynomials (little-endian), panicking on a
/// nonzero remainder; only used with genuinely divisible inputs.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    if nd < dd {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            let t = &den[i] * &c;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}

struct Conductor {
    phi: usize,
    /// x^k mod Phi_n for 0 <= k < max(n, 2*phi-1), each of length phi.
    xpow: Vec<Vec<BigInt>>,
}

fn cyclotomic_poly(n: u64, cache: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        // (x^n - 1) / prod_{d | n, d < n} Phi_d
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = -BigInt::one();
        num[n as usize] = BigInt::one();
        let mut acc = num;
        for d in 1..n {
            if n % d == 0 {
                let pd = cyclotomic_poly(d, cache);
                acc = poly_div_exact(&acc, &pd);
            }
        }
        acc
    };
    cache.insert(n, poly.clone());
    poly
}

fn conductor_data(n: u64) -> Arc<Conductor> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Conductor>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(c) = guard.get(&n) {
        return c.clone();
    }
    let mut polys = HashMap::new();
    let phi_poly = cyclotomic_poly(n, &mut polys);
    let phi = phi_poly.len() - 1;
    debug_assert_eq!(phi, euler_phi(n));
    let maxk = std::cmp::max(n as usize, 2 * phi.max(1));
    let mut xpow: Vec<Vec<BigInt>> = Vec::with_capacity(maxk);
    for k in 0..maxk {
        if k < phi {
            let mut row = vec![BigInt::zero(); phi];
            row[k] = BigInt::one();
            xpow.push(row);
        } else {
            // x^k = x * x^{k-1}: shift then reduce the leading term
            let prev = &xpow[k - 1];
            let mut row = vec![BigInt::zero(); phi];
            for i in 0..phi - 1 {
                row[i + 1] = prev[i].clone();
            }
            let lead = prev[phi - 1].clone();
            if !lead.is_zero() {
                for i in 0..phi {
                    let t = &phi_poly[i] * &lead;
                    row[i] -= t;
                }
            }
            xpow.push(row);
        }
    }
    let c = Arc::new(Conductor { phi, xpow });
    guard.insert(n, c.clone());
    c
}

/// An element of Z[zeta_n] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        let c = conductor_data(n);
        Cyclotomic {
            n,
            coeffs: vec![BigInt::zero(); c.phi],
        }
    }

    pub fn from_int(n: u64, v: impl Into<BigInt>) -> Self {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[0] = v.into();
        z
    }

    /// zeta_n^j; requires n >= 1.
    pub fn root_of_unity(n: u64, j: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("conductor 0".into()));
        }
        let c = conductor_data(n);
        let jj = j.rem_euclid(n as i64) as usize;
        Ok(Cyclotomic {
            n,
            coeffs: c.xpow[jj].clone(),
        })
    }

    /// Sum of coeff * zeta_n^exp terms.
    pub fn from_powers(n: u64, terms: &[(i64, BigInt)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("conductor 0".into()));
        }
        let c = conductor_data(n);
        let mut coeffs = vec![BigInt::zero(); c.phi];
        for (e, co) in terms {
            let j = e.rem_euclid(n as i64) as usize;
            for i in 0..c.phi {
                let t = &c.xpow[j][i] * co;
                coeffs[i] += t;
            }
        }
        Ok(Cyclotomic { n, coeffs })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational integer value, if this element is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "conductor mismatch: lift operands to a common conductor first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        let c = conductor_data(self.n);
        let phi = c.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut coeffs = vec![BigInt::zero(); phi];
        for (k, v) in prod.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if k < phi {
                coeffs[k] += v;
            } else {
                for i in 0..phi {
                    let t = &c.xpow[k][i] * &v;
                    coeffs[i] += t;
                }
            }
        }
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Ring endomorphism zeta -> zeta^t for gcd(t, n) = 1.
    pub fn galois(&self, t: u64) -> Self {
        let c = conductor_data(self.n);
        let mut coeffs = vec![BigInt::zero(); c.phi];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let j = ((k as u64 * t) % self.n) as usize;
            for i in 0..c.phi {
                let v = &c.xpow[j][i] * a;
                coeffs[i] += v;
            }
        }
        Cyclotomic { n: self.n, coeffs }
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(self.n - 1)
    }

    /// a * conj(a); for a sum of d roots of unity this equals d^2 exactly
    /// when a is d times a single root of unity.
    pub fn abs_square(&self) -> Self {
        self.mul(&self.conjugate())
    }

    /// Lift into conductor m, which must be a multiple of n.
    pub fn lift(&self, m: u64) -> Result<Self> {
        if m % self.n != 0 {
            return Err(Error::ConductorMismatch(self.n, m));
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let scale = (m / self.n) as i64;
        let terms: Vec<(i64, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 * scale, c.clone()))
            .collect();
        Cyclotomic::from_powers(m, &terms)
    }

    /// If self = d * zeta_n^j, return the least such j in [0, n).
    pub fn as_scaled_root(&self, d: &BigInt) -> Option<u64> {
        for j in 0..self.n {
            let mut cand = Cyclotomic::root_of_unity(self.n, j as i64).unwrap();
            cand = cand.scale(d);
            if cand == *self {
                return Some(j);
            }
        }
        None
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z{}^{}", self.n, k)?;
            } else {
                write!(f, "{a}*z{}^{}", self.n, k)?;
            }
        }
        Ok(())
    }
}
