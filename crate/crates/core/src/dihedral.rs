//! The dihedral group `D_k` as permutations of k value rails.
//!
//! `D_k` is generated by the rotation `a` (cyclic shift of the rails) and the
//! reflection `g` (rail i swaps with rail k-i for i != 0), subject to
//! `a^k = e`, `g^2 = e` and `g a g = a^{-1}`. Rails are 0-indexed with rail 0
//! on top; words compose left-to-right in cascade order.

use crate::{Error, Result};

/// One element of `D_k`, stored as the rail permutation it performs:
/// `image[i]` is the rail that the content of rail i moves to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    image: Vec<usize>,
}

impl GroupElement {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let k = image.len();
        let mut seen = vec![false; k];
        for &i in &image {
            if i >= k || seen[i] {
                return Err(Error::Structure(format!(
                    "image {image:?} is not a permutation of 0..{k}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            image: (0..k).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, rail: usize) -> usize {
        self.image[rail]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Self { image }
    }

    /// Routes rail contents through this permutation:
    /// `out[image[i]] = contents[i]`.
    pub fn route(&self, contents: &[usize]) -> Vec<usize> {
        let mut out = vec![0; contents.len()];
        for (i, &c) in contents.iter().enumerate() {
            out[self.image[i]] = c;
        }
        out
    }
}

/// Left-to-right composition: apply `first`, then `second`.
pub fn compose(first: &GroupElement, second: &GroupElement) -> Result<GroupElement> {
    if first.k() != second.k() {
        return Err(Error::Dimension(format!(
            "cannot compose elements over {} and {} rails",
            first.k(),
            second.k()
        )));
    }
    let image = first.image.iter().map(|&i| second.image[i]).collect();
    Ok(GroupElement { image })
}

/// `e` composed with itself `m` times; negative `m` uses the inverse.
pub fn power(e: &GroupElement, m: i64) -> GroupElement {
    let base = if m < 0 { e.inverse() } else { e.clone() };
    let mut acc = GroupElement::identity(e.k());
    for _ in 0..m.unsigned_abs() {
        acc = compose(&acc, &base).expect("same k");
    }
    acc
}

/// `D_k` with its two generators and identity.
#[derive(Debug, Clone)]
pub struct DihedralGroup {
    k: usize,
    a: GroupElement,
    g: GroupElement,
    identity: GroupElement,
}

/// Builds `D_k` for odd k >= 3. The construction works for any odd k, prime
/// or not, since it only needs gcd(2, k) = 1; composite odd radices are
/// accepted (callers may warn, see [`DihedralGroup::radix_is_composite`]).
pub fn make_group(k: usize) -> Result<DihedralGroup> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidRadix(k));
    }
    let a = GroupElement {
        image: (0..k).map(|i| (i + 1) % k).collect(),
    };
    let g = GroupElement {
        image: (0..k).map(|i| if i == 0 { 0 } else { k - i }).collect(),
    };
    Ok(DihedralGroup {
        k,
        a,
        g,
        identity: GroupElement::identity(k),
    })
}

impl DihedralGroup {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rotation(&self) -> &GroupElement {
        &self.a
    }

    pub fn reflection(&self) -> &GroupElement {
        &self.g
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    /// `a^m` for any integer exponent.
    pub fn rotation_power(&self, m: i64) -> GroupElement {
        let k = self.k as i64;
        let m = m.rem_euclid(k) as usize;
        GroupElement {
            image: (0..self.k).map(|i| (i + m) % self.k).collect(),
        }
    }

    /// The usual applicability argument covers odd prime radices; the
    /// construction itself does not need primality.
    pub fn radix_is_composite(&self) -> bool {
        (3..self.k).step_by(2).any(|d| d * d <= self.k && self.k % d == 0)
    }

    /// The canonical enumeration `[a^0, ..., a^{k-1}, g, ag, ..., a^{k-1}g]`.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(2 * self.k);
        for m in 0..self.k {
            out.push(self.rotation_power(m as i64));
        }
        for m in 0..self.k {
            let am = self.rotation_power(m as i64);
            out.push(compose(&am, &self.g).expect("same k"));
        }
        out
    }

    /// Label of the element at index `i` of the canonical enumeration.
    pub fn element_label(&self, i: usize) -> String {
        let (m, reflected) = (i % self.k, i >= self.k);
        match (m, reflected) {
            (0, false) => "e".to_string(),
            (1, false) => "a".to_string(),
            (m, false) => format!("a^{m}"),
            (0, true) => "g".to_string(),
            (1, true) => "ag".to_string(),
            (m, true) => format!("a^{m}g"),
        }
    }
}

/// `table[i][j]` is the canonical index of `element_i` composed with
/// `element_j` (left-to-right). Every row and column is a permutation of the
/// 2k indices.
pub fn cayley_table(group: &DihedralGroup) -> Vec<Vec<usize>> {
    let elems = group.elements();
    elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| {
                    let p = compose(x, y).expect("same k");
                    elems.iter().position(|e| *e == p).expect("closure")
                })
                .collect()
        })
        .collect()
}
