//! Sparse linear maps between tensor words, stored column-major: column j is
//! the image of the j-th domain basis vector. All arithmetic is in F_p.
//!
//! The basis index convention is leftmost-major throughout: in a word
//! X1(x)...(x)Xk the leftmost factor is the most significant digit.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::group::GroupElem;
use crate::linalg::FpMat;
use crate::yd::{TensorWord, YdObject};

#[derive(Debug, Clone)]
pub struct LinearMorphism {
    domain: TensorWord,
    codomain: TensorWord,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinearMorphism {
    pub fn zero(domain: TensorWord, codomain: TensorWord) -> Self {
        let n = domain.dim();
        LinearMorphism {
            domain,
            codomain,
            cols: vec![vec![]; n],
        }
    }

    pub fn identity(word: TensorWord) -> Self {
        let n = word.dim();
        LinearMorphism {
            domain: word.clone(),
            codomain: word,
            cols: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Build from raw columns; entries are normalized (merged, sorted,
    /// zeros dropped).
    pub fn from_cols(
        domain: TensorWord,
        codomain: TensorWord,
        cols: Vec<Vec<(usize, Scalar)>>,
    ) -> Self {
        assert_eq!(cols.len(), domain.dim(), "column count");
        let mut m = LinearMorphism {
            domain,
            codomain,
            cols,
        };
        m.normalize();
        m
    }

    /// Build column-by-column from a function mapping a domain basis index to
    /// its image.
    pub fn from_fn(
        domain: TensorWord,
        codomain: TensorWord,
        f: impl Fn(usize) -> Vec<(usize, Scalar)>,
    ) -> Self {
        let cols = (0..domain.dim()).map(f).collect();
        Self::from_cols(domain, codomain, cols)
    }

    pub fn from_dense(domain: TensorWord, codomain: TensorWord, m: &FpMat) -> Self {
        assert_eq!(m.rows, codomain.dim());
        assert_eq!(m.cols, domain.dim());
        Self::from_fn(domain, codomain, |j| {
            (0..m.rows)
                .filter(|&i| m[(i, j)] != 0)
                .map(|i| (i, m[(i, j)]))
                .collect()
        })
    }

    fn normalize(&mut self) {
        let f = self.domain.ctx().field;
        let dim = self.codomain.dim();
        for col in &mut self.cols {
            if col.is_empty() {
                continue;
            }
            col.sort_by_key(|&(r, _)| r);
            let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                assert!(r < dim, "row index out of range");
                if let Some(last) = merged.last_mut() {
                    if last.0 == r {
                        last.1 = f.add(last.1, v % f.modulus());
                        continue;
                    }
                }
                merged.push((r, v % f.modulus()));
            }
            merged.retain(|&(_, v)| v != 0);
            *col = merged;
        }
    }

    pub fn domain(&self) -> &TensorWord {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorWord {
        &self.codomain
    }

    pub fn columns(&self) -> &[Vec<(usize, Scalar)>] {
        &self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self` after `first` (usual composition `self . first`).
    pub fn compose(&self, first: &LinearMorphism) -> Result<LinearMorphism> {
        if first.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "compose: {} -> {} then {} -> {}",
                first.domain.display(),
                first.codomain.display(),
                self.domain.display(),
                self.codomain.display()
            )));
        }
        let f = self.domain.ctx().field;
        let mut cols = Vec::with_capacity(first.cols.len());
        for col in &first.cols {
            let mut acc: Vec<(usize, Scalar)> = Vec::new();
            for &(mid, v) in col {
                for &(r, w) in &self.cols[mid] {
                    acc.push((r, f.mul(v, w)));
                }
            }
            cols.push(acc);
        }
        Ok(LinearMorphism::from_cols(
            first.domain.clone(),
            self.codomain.clone(),
            cols,
        ))
    }

    pub fn tensor(&self, other: &LinearMorphism) -> Result<LinearMorphism> {
        if self.domain.ctx() != other.domain.ctx() {
            return Err(Error::MismatchedContext("tensor of morphisms".into()));
        }
        let f = self.domain.ctx().field;
        let domain = self.domain.concat(&other.domain)?;
        let codomain = self.codomain.concat(&other.codomain)?;
        let (odc, occ) = (other.domain.dim(), other.codomain.dim());
        let mut cols = vec![Vec::new(); domain.dim()];
        for (j1, c1) in self.cols.iter().enumerate() {
            for (j2, c2) in other.cols.iter().enumerate() {
                let col = &mut cols[j1 * odc + j2];
                for &(r1, v1) in c1 {
                    for &(r2, v2) in c2 {
                        col.push((r1 * occ + r2, f.mul(v1, v2)));
                    }
                }
            }
        }
        Ok(LinearMorphism::from_cols(domain, codomain, cols))
    }

    pub fn add(&self, other: &LinearMorphism) -> Result<LinearMorphism> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch("sum of morphisms".into()));
        }
        let mut cols = self.cols.clone();
        for (c, oc) in cols.iter_mut().zip(&other.cols) {
            c.extend(oc.iter().copied());
        }
        Ok(LinearMorphism::from_cols(
            self.domain.clone(),
            self.codomain.clone(),
            cols,
        ))
    }

    pub fn sub(&self, other: &LinearMorphism) -> Result<LinearMorphism> {
        let f = self.domain.ctx().field;
        self.add(&other.scale(f.neg(1)))
    }

    pub fn scale(&self, s: Scalar) -> LinearMorphism {
        let f = self.domain.ctx().field;
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&(r, v)| (r, f.mul(v, s))).collect())
            .collect();
        LinearMorphism::from_cols(self.domain.clone(), self.codomain.clone(), cols)
    }

    /// Exact entrywise equality (shapes must match).
    pub fn equals(&self, other: &LinearMorphism) -> Result<bool> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch(format!(
                "equality of {} -> {} and {} -> {}",
                self.domain.display(),
                self.codomain.display(),
                other.domain.display(),
                other.codomain.display()
            )));
        }
        Ok(self.cols == other.cols)
    }

    /// First differing entry, as (row, col, lhs, rhs).
    pub fn first_difference(
        &self,
        other: &LinearMorphism,
    ) -> Option<(usize, usize, Scalar, Scalar)> {
        for j in 0..self.cols.len() {
            let rows: std::collections::BTreeSet<usize> = self.cols[j]
                .iter()
                .chain(other.cols[j].iter())
                .map(|&(r, _)| r)
                .collect();
            for r in rows {
                let a = self.entry(r, j);
                let b = other.entry(r, j);
                if a != b {
                    return Some((r, j, a, b));
                }
            }
        }
        None
    }

    pub fn to_dense(&self) -> FpMat {
        let mut m = FpMat::zeros(self.codomain.dim(), self.domain.dim());
        for (j, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                m[(r, j)] = v;
            }
        }
        m
    }

    /// Pure wire permutation: factor k of the domain becomes factor
    /// `perm[k]`-th... more precisely, output factor i is input factor
    /// `perm[i]`. This is the flip/permutation of underlying vector spaces,
    /// not the braiding.
    pub fn permute(domain: &TensorWord, perm: &[usize]) -> LinearMorphism {
        assert_eq!(perm.len(), domain.len());
        let factors: Vec<&YdObject> = perm.iter().map(|&i| &domain.factors()[i]).collect();
        let codomain = if factors.is_empty() {
            TensorWord::unit(domain.ctx())
        } else {
            TensorWord::of(&factors).expect("same context")
        };
        let cod = codomain.clone();
        LinearMorphism::from_fn(domain.clone(), codomain, move |j| {
            let digits = domain.digits(j);
            let out: Vec<usize> = perm.iter().map(|&i| digits[i]).collect();
            vec![(cod.index_of(&out), 1)]
        })
    }

    /// Plain flip X(x)Y -> Y(x)X (underlying vector spaces).
    pub fn flip(x: &TensorWord, y: &TensorWord) -> Result<LinearMorphism> {
        let domain = x.concat(y)?;
        let k = x.len();
        let n = domain.len();
        let perm: Vec<usize> = (k..n).chain(0..k).collect();
        Ok(LinearMorphism::permute(&domain, &perm))
    }

    /// The Yetter-Drinfeld braiding c_{X,Y}: X(x)Y -> Y(x)X,
    /// v(x)w -> (deg v . w)(x)v.
    pub fn braiding(x: &TensorWord, y: &TensorWord) -> Result<LinearMorphism> {
        if x.ctx() != y.ctx() {
            return Err(Error::MismatchedContext("braiding".into()));
        }
        let domain = x.concat(y)?;
        let codomain = y.concat(x)?;
        let (dx, dy) = (x.dim(), y.dim());
        // one action matrix per distinct degree of X
        let mut cols = vec![Vec::new(); dx * dy];
        for ix in 0..dx {
            let m = action_on_word(y, &x.degree_of(ix));
            for iy in 0..dy {
                let col = &mut cols[ix * dy + iy];
                for r in 0..dy {
                    let v = m[(r, iy)];
                    if v != 0 {
                        col.push((r * dx + ix, v));
                    }
                }
            }
        }
        Ok(LinearMorphism::from_cols(domain, codomain, cols))
    }

    /// Graded crossing with the inverted action: X(x)Y -> Y(x)X,
    /// v(x)w -> ((deg v)^{-1} . w)(x)v. This is the braiding with the acting
    /// degree negated, which the exchange identities need on one leg.
    pub fn braiding_negdeg(x: &TensorWord, y: &TensorWord) -> Result<LinearMorphism> {
        if x.ctx() != y.ctx() {
            return Err(Error::MismatchedContext("graded crossing".into()));
        }
        let domain = x.concat(y)?;
        let codomain = y.concat(x)?;
        let (dx, dy) = (x.dim(), y.dim());
        let group = x.ctx().group.clone();
        let mut cols = vec![Vec::new(); dx * dy];
        for ix in 0..dx {
            let m = action_on_word(y, &group.neg(&x.degree_of(ix)));
            for iy in 0..dy {
                let col = &mut cols[ix * dy + iy];
                for r in 0..dy {
                    let v = m[(r, iy)];
                    if v != 0 {
                        col.push((r * dx + ix, v));
                    }
                }
            }
        }
        Ok(LinearMorphism::from_cols(domain, codomain, cols))
    }

    /// Inverse braiding c^{-1}_{X,Y}: Y(x)X -> X(x)Y,
    /// w(x)v -> v(x)((deg v)^{-1} . w).
    pub fn braiding_inverse(x: &TensorWord, y: &TensorWord) -> Result<LinearMorphism> {
        if x.ctx() != y.ctx() {
            return Err(Error::MismatchedContext("braiding inverse".into()));
        }
        let domain = y.concat(x)?;
        let codomain = x.concat(y)?;
        let (dx, dy) = (x.dim(), y.dim());
        let group = x.ctx().group.clone();
        let mut cols = vec![Vec::new(); dx * dy];
        for ix in 0..dx {
            let m = action_on_word(y, &group.neg(&x.degree_of(ix)));
            for iy in 0..dy {
                let col = &mut cols[iy * dx + ix];
                for r in 0..dy {
                    let v = m[(r, iy)];
                    if v != 0 {
                        col.push((ix * dy + r, v));
                    }
                }
            }
        }
        Ok(LinearMorphism::from_cols(domain, codomain, cols))
    }

    /// Action of a group element on a whole word, as a morphism.
    pub fn word_action(word: &TensorWord, g: &GroupElem) -> LinearMorphism {
        LinearMorphism::from_dense(word.clone(), word.clone(), &action_on_word(word, g))
    }

    /// Degree-preservation plus equivariance for every group generator.
    pub fn is_yd_morphism(&self) -> bool {
        let group = &self.domain.ctx().group;
        for (j, col) in self.cols.iter().enumerate() {
            let dj = self.domain.degree_of(j);
            for &(r, _) in col {
                if self.codomain.degree_of(r) != dj {
                    return false;
                }
            }
        }
        for k in 0..group.rank() {
            let mut g = group.identity();
            g[k] = 1 % group.orders()[k];
            let a_dom = LinearMorphism::word_action(&self.domain, &g);
            let a_cod = LinearMorphism::word_action(&self.codomain, &g);
            let lhs = a_cod.compose(self).unwrap();
            let rhs = self.compose(&a_dom).unwrap();
            if !lhs.equals(&rhs).unwrap() {
                return false;
            }
        }
        true
    }

    /// Curried matrix of f: A(x)B -> C as a map A -> Hom(B, C); rows indexed
    /// by (c, b) out-major, columns by A.
    pub fn curry_left(&self) -> Result<FpMat> {
        if self.domain.is_empty() {
            return Err(Error::ShapeMismatch("curry of a nullary map".into()));
        }
        let a_dim = self.domain.factors()[0].dim();
        let b_dim: usize = self.domain.factors()[1..].iter().map(|o| o.dim()).product();
        let c_dim = self.codomain.dim();
        let mut m = FpMat::zeros(c_dim * b_dim, a_dim);
        for a in 0..a_dim {
            for b in 0..b_dim {
                for &(c, v) in &self.cols[a * b_dim + b] {
                    m[(c * b_dim + b, a)] = v;
                }
            }
        }
        Ok(m)
    }
}

fn action_on_word(word: &TensorWord, g: &GroupElem) -> FpMat {
    let f = word.ctx().field;
    let mut m = FpMat::identity(1);
    for obj in word.factors() {
        let a = obj.action_of(g);
        // kron(m, a)
        let mut out = FpMat::zeros(m.rows * a.rows, m.cols * a.cols);
        for r1 in 0..m.rows {
            for c1 in 0..m.cols {
                if m[(r1, c1)] == 0 {
                    continue;
                }
                for r2 in 0..a.rows {
                    for c2 in 0..a.cols {
                        let v = f.mul(m[(r1, c1)], a[(r2, c2)]);
                        if v != 0 {
                            out[(r1 * a.rows + r2, c1 * a.cols + c2)] = v;
                        }
                    }
                }
            }
        }
        m = out;
    }
    m
}

/// `g . f = id` for `f` with full column rank; when `f` is square this is the
/// two-sided inverse. Exact elimination over F_p.
pub fn solve_left_inverse(f: &LinearMorphism) -> Result<LinearMorphism> {
    let field = f.domain().ctx().field;
    let dense = f.to_dense();
    let g = dense.left_inverse(&field)?;
    Ok(LinearMorphism::from_dense(
        f.codomain().clone(),
        f.domain().clone(),
        &g,
    ))
}
