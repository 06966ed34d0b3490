//! Finite abelian groups presented as products of cyclic groups, and their
//! characters with values in F_p.
//!
//! Elements are exponent vectors reduced componentwise; the identity is the
//! zero vector. A character is stored by its images on the cyclic generators.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use serde::{Deserialize, Serialize};

/// Exponent vector of a group element, one entry per cyclic factor.
pub type GroupElem = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Group {
    orders: Vec<u32>,
}

impl Group {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyOrderList);
        }
        if orders.contains(&0) {
            return Err(Error::InvalidInput("cyclic factor of order 0".into()));
        }
        Ok(Group { orders })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    pub fn identity(&self) -> GroupElem {
        vec![0; self.orders.len()]
    }

    pub fn reduce(&self, e: &[i64]) -> GroupElem {
        e.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| (x.rem_euclid(n as i64)) as u32)
            .collect()
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        a.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| if x == 0 { 0 } else { n - x })
            .collect()
    }

    pub fn contains(&self, a: &GroupElem) -> bool {
        a.len() == self.orders.len() && a.iter().zip(&self.orders).all(|(&x, &n)| x < n)
    }

    /// All elements in lexicographic order of exponent vectors.
    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = vec![self.identity()];
        for (j, &n) in self.orders.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for e in 0..n {
                for base in &out {
                    let mut v = base.clone();
                    v[j] = e;
                    next.push(v);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// A character G -> F_p^x, stored by its generator images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    images: Vec<Scalar>,
}

impl Character {
    /// Checks that `images[j]` has multiplicative order dividing the j-th
    /// cyclic order, which is exactly the condition for a homomorphism.
    pub fn new(field: &Field, group: &Group, images: Vec<Scalar>) -> Result<Self> {
        if images.len() != group.rank() {
            return Err(Error::MismatchedGroup(format!(
                "character has {} images for a rank-{} group",
                images.len(),
                group.rank()
            )));
        }
        for (&v, &n) in images.iter().zip(group.orders()) {
            if v == 0 || field.pow(v, n as u64) != 1 {
                return Err(Error::BadCharacterOrder {
                    value: v,
                    order: n,
                    p: field.modulus(),
                });
            }
        }
        Ok(Character { images })
    }

    pub fn images(&self) -> &[Scalar] {
        &self.images
    }

    pub fn eval(&self, field: &Field, g: &GroupElem) -> Result<Scalar> {
        if g.len() != self.images.len() {
            return Err(Error::MismatchedGroup(format!(
                "element of rank {} against character of rank {}",
                g.len(),
                self.images.len()
            )));
        }
        let mut acc: Scalar = 1;
        for (&img, &e) in self.images.iter().zip(g) {
            acc = field.mul(acc, field.pow(img, e as u64));
        }
        Ok(acc)
    }
}
