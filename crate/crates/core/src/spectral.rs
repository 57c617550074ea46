//! Walsh matrices and the modular Walsh spectrum.
//!
//! The spectrum of a truth vector F over radix k is `w = W_n^{-1} F (mod k)`
//! where `W_n` is the Sylvester-ordered +-1 matrix, `W_1 = [[1,1],[1,-1]]`.
//! Since `W_n^2 = 2^n I`, the modular inverse is the scalar multiple
//! `W_n^{-1} = (2^n)^{-1} W_n (mod k)`, which exists exactly when k is odd.
//! The transform itself is computed with the fast Walsh-Hadamard butterfly.

use crate::{Error, Result};

/// Largest supported variable count for materialized matrices and transforms.
pub const MAX_VARS: usize = 20;

/// A k-valued function of n binary variables, listed in index order with
/// `x_1` as the most significant index bit: `values[i] = f(x_1, ..., x_n)`
/// where `i = x_1·2^{n-1} + ... + x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthVector {
    k: usize,
    n: usize,
    values: Vec<usize>,
}

impl TruthVector {
    pub fn new(k: usize, n: usize, values: Vec<usize>) -> Result<Self> {
        if k < 3 || k % 2 == 0 {
            return Err(Error::InvalidRadix(k));
        }
        if n == 0 || n > MAX_VARS {
            return Err(Error::Size(format!("n = {n} out of range 1..={MAX_VARS}")));
        }
        if values.len() != 1 << n {
            return Err(Error::Dimension(format!(
                "expected 2^{n} = {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v >= k) {
            return Err(Error::Format(format!("value {v} out of range 0..{k}")));
        }
        Ok(Self { k, n, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Walsh spectrum: residues mod k, same index convention as [`TruthVector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    k: usize,
    n: usize,
    w: Vec<usize>,
}

impl Spectrum {
    pub fn new(k: usize, n: usize, w: Vec<usize>) -> Result<Self> {
        // same shape constraints as a truth vector
        let tv = TruthVector::new(k, n, w)?;
        Ok(Self {
            k: tv.k,
            n: tv.n,
            w: tv.values,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &[usize] {
        &self.w
    }

    /// Signed display form in `-(k-1)/2 ..= (k-1)/2`, matching how the
    /// residues are usually printed (`a^{-1}` rather than `a^{2}`).
    pub fn signed(&self) -> Vec<i64> {
        self.w.iter().map(|&v| signed_residue(v, self.k)).collect()
    }
}

pub fn signed_residue(v: usize, k: usize) -> i64 {
    if v > k / 2 {
        v as i64 - k as i64
    } else {
        v as i64
    }
}

/// Sylvester-ordered Walsh matrix of order n (2^n x 2^n, entries +-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl WalshMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

pub fn walsh_matrix(n: usize) -> Result<WalshMatrix> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::Size(format!("n = {n} out of range 1..={MAX_VARS}")));
    }
    let size = 1usize << n;
    // W[i][j] = (-1)^{popcount(i & j)} is exactly the Sylvester construction
    let entries = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if (i & j).count_ones() % 2 == 0 { 1 } else { -1 })
                .collect()
        })
        .collect();
    Ok(WalshMatrix { n, entries })
}

/// In-place Walsh-Hadamard butterfly; computes `W_n * v` over the integers.
fn fwht(v: &mut [i64]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(h * 2) {
            for j in block..block + h {
                let (x, y) = (v[j], v[j + h]);
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
        h *= 2;
    }
}

fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    // extended Euclid
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i64) as usize)
}

/// The scalar `s = (2^n)^{-1} mod k`, so that `W_n^{-1} = s * W_n (mod k)`.
pub fn walsh_inverse_scalar(n: usize, k: usize) -> Result<usize> {
    if k % 2 == 0 || k < 3 {
        return Err(Error::InvalidRadix(k));
    }
    let two_pow = mod_pow(2, n, k);
    mod_inverse(two_pow, k).ok_or(Error::InvalidRadix(k))
}

fn mod_pow(mut base: usize, mut exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `w = (2^n)^{-1} W_n F (mod k)`, entries normalized to `0..k-1`.
pub fn spectrum(f: &TruthVector) -> Result<Spectrum> {
    let s = walsh_inverse_scalar(f.n, f.k)? as i64;
    let mut v: Vec<i64> = f.values.iter().map(|&x| x as i64).collect();
    fwht(&mut v);
    let k = f.k as i64;
    let w = v.iter().map(|&x| (x * s).rem_euclid(k) as usize).collect();
    Spectrum::new(f.k, f.n, w)
}

/// `F = W_n w (mod k)`; inverse of [`spectrum`].
pub fn reconstruct(w: &Spectrum) -> TruthVector {
    let mut v: Vec<i64> = w.w.iter().map(|&x| x as i64).collect();
    fwht(&mut v);
    let k = w.k as i64;
    let values = v.iter().map(|&x| x.rem_euclid(k) as usize).collect();
    TruthVector::new(w.k, w.n, values).expect("shape preserved")
}
