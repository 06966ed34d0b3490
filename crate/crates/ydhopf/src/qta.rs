//! Generators for the quantum tensor algebra family: the free braided algebra
//! on primitives x_i with degree g_i and action character chi_i, cut down to
//! a finite-dimensional braided Hopf algebra.
//!
//! Words of length n carry the braid-group action by adjacent-slot braidings.
//! Degree n of the carrier is T_n modulo the kernel of the quantum
//! symmetrizer (the sum of the positive braid lifts of all permutations);
//! that kernel is exactly the ideal that must die for the length cutoff to be
//! compatible with the comultiplication. The quotient basis is chosen
//! greedily in length-then-lex word order, so structure constants are
//! reproducible. `hopf_build` then verifies every axiom; inconsistent
//! parameter/truncation combinations surface as an exact axiom failure
//! rather than a silently wrong algebra.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::{Character, Group, GroupElem};
use crate::hopf::{antipode_solve, hopf_build, BraidedHopf};
use crate::linalg::FpMat;
use crate::morphism::LinearMorphism;
use crate::report::{Assertion, Checker};
use crate::yd::{Context, TensorWord, YdObject};
use std::collections::HashMap;

pub const DEFAULT_BASIS_CAP: usize = 512;

#[derive(Debug, Clone)]
pub struct QtaParams {
    pub field: Field,
    pub group: Group,
    /// One (degree, character) pair per generator.
    pub generators: Vec<(GroupElem, Character)>,
    /// Words of length at most `trunc` survive.
    pub trunc: usize,
}

impl QtaParams {
    pub fn ctx(&self) -> Context {
        Context::new(self.field, self.group.clone())
    }

    fn validate(&self) -> Result<()> {
        for (g, chi) in &self.generators {
            if !self.group.contains(g) {
                return Err(Error::MismatchedGroup(format!(
                    "generator degree {g:?} outside the group"
                )));
            }
            chi.eval(&self.field, g)?;
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidInput("no generators".into()));
        }
        Ok(())
    }
}

/// A finite-dimensional braided Hopf algebra generated from `QtaParams`,
/// remembering the word representatives of its basis.
#[derive(Debug, Clone)]
pub struct TruncatedQta {
    pub params: QtaParams,
    pub hopf: BraidedHopf,
    /// Basis words (generator-index strings), length-then-lex order.
    pub words: Vec<Vec<u8>>,
}

/// chi_w(g): the product of the letter characters evaluated at g.
fn word_char(params: &QtaParams, word: &[u8], g: &GroupElem) -> Result<Scalar> {
    let mut acc = 1;
    for &l in word {
        acc = params
            .field
            .mul(acc, params.generators[l as usize].1.eval(&params.field, g)?);
    }
    Ok(acc)
}

fn word_degree(params: &QtaParams, word: &[u8]) -> GroupElem {
    let mut d = params.group.identity();
    for &l in word {
        d = params.group.add(&d, &params.generators[l as usize].0);
    }
    d
}

/// All free words of the given length over the generator alphabet, in lex
/// order of generator indices.
fn free_words(kappa: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * kappa);
        for w in &out {
            for l in 0..kappa {
                let mut w2 = w.clone();
                w2.push(l as u8);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Matrix of the braiding on adjacent slots (i, i+1) of T_n in the free word
/// basis: c(x_a (x) x_b) = chi_b(g_a) x_b (x) x_a.
fn slot_braiding(params: &QtaParams, words: &[Vec<u8>], slot: usize) -> Result<FpMat> {
    let f = params.field;
    let index: HashMap<&[u8], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut m = FpMat::zeros(words.len(), words.len());
    for (j, w) in words.iter().enumerate() {
        let (a, b) = (w[slot] as usize, w[slot + 1] as usize);
        let coeff = params.generators[b].1.eval(&f, &params.generators[a].0)?;
        let mut swapped = w.clone();
        swapped.swap(slot, slot + 1);
        let i = index[swapped.as_slice()];
        m[(i, j)] = coeff;
    }
    Ok(m)
}

/// The quantum symmetrizer on T_n: the sum over all n! positive braid lifts,
/// via the coset recursion Omega_n = (Omega_{n-1} (x) id) . (id + c_{n-1}
/// + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1).
fn symmetrizer(params: &QtaParams, n: usize) -> Result<FpMat> {
    let f = params.field;
    let kappa = params.generators.len();
    let words = free_words(kappa, n);
    let dim = words.len();
    if n <= 1 {
        return Ok(FpMat::identity(dim));
    }
    let prev = symmetrizer(params, n - 1)?;
    // Omega_{n-1} (x) id on T_n = T_{n-1} (x) T_1
    let mut lifted = FpMat::zeros(dim, dim);
    for r in 0..prev.rows {
        for c in 0..prev.cols {
            let v = prev[(r, c)];
            if v != 0 {
                for l in 0..kappa {
                    lifted[(r * kappa + l, c * kappa + l)] = v;
                }
            }
        }
    }
    let mut shuffle = FpMat::identity(dim);
    let mut chain = FpMat::identity(dim);
    for k in (1..n).rev() {
        chain = slot_braiding(params, &words, k - 1)?.mul(&f, &chain);
        for r in 0..dim {
            for c in 0..dim {
                shuffle[(r, c)] = f.add(shuffle[(r, c)], chain[(r, c)]);
            }
        }
    }
    Ok(lifted.mul(&f, &shuffle))
}

/// Per-degree quotient data: selected representative words plus the matrix
/// expressing the class of every free word in the selected basis.
struct DegreeQuotient {
    words: Vec<Vec<u8>>,
    selected: Vec<usize>,
    /// columns: free words; rows: selected basis.
    classes: FpMat,
}

fn degree_quotient(params: &QtaParams, n: usize) -> Result<DegreeQuotient> {
    let f = params.field;
    let words = free_words(params.generators.len(), n);
    let omega = symmetrizer(params, n)?;
    let dim = words.len();
    // greedy pivot selection in lex order: keep w if Omega(w) is independent
    // from the Omega-images of the already-selected words
    let mut selected: Vec<usize> = Vec::new();
    let mut basis_cols: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..dim {
        let col: Vec<Scalar> = (0..dim).map(|r| omega[(r, j)]).collect();
        let mut probe = basis_cols.clone();
        probe.push(col.clone());
        let rows = dim;
        let mut mat = FpMat::zeros(rows, probe.len());
        for (cc, pc) in probe.iter().enumerate() {
            for r in 0..rows {
                mat[(r, cc)] = pc[r];
            }
        }
        if mat.rank(&f) == probe.len() {
            selected.push(j);
            basis_cols.push(col);
        }
    }
    // express every word: solve B * x = Omega(w)
    let mut b = FpMat::zeros(dim, selected.len());
    for (cc, col) in basis_cols.iter().enumerate() {
        for r in 0..dim {
            b[(r, cc)] = col[r];
        }
    }
    let mut rhs = FpMat::zeros(dim, dim);
    for j in 0..dim {
        for r in 0..dim {
            rhs[(r, j)] = omega[(r, j)];
        }
    }
    let classes = b.solve_many(&f, &rhs)?;
    Ok(DegreeQuotient {
        words,
        selected,
        classes,
    })
}

struct Basis {
    /// (length, word) in length-then-lex order.
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    /// per length: quotient data and the global offset of that block.
    quotients: Vec<DegreeQuotient>,
    offsets: Vec<usize>,
}

impl Basis {
    /// Class of an arbitrary free word in the global basis.
    fn reduce(&self, word: &[u8]) -> Vec<(usize, Scalar)> {
        let n = word.len();
        if n >= self.quotients.len() {
            return vec![]; // beyond the truncation
        }
        let q = &self.quotients[n];
        let j = q
            .words
            .iter()
            .position(|w| w.as_slice() == word)
            .expect("free word enumerated");
        let mut out = Vec::new();
        for (s, &_sel) in q.selected.iter().enumerate() {
            let v = q.classes[(s, j)];
            if v != 0 {
                out.push((self.offsets[n] + s, v));
            }
        }
        out
    }
}

fn build_basis(params: &QtaParams, cap: usize) -> Result<Basis> {
    let kappa = params.generators.len();
    let free_count: usize = (0..=params.trunc)
        .map(|m| kappa.checked_pow(m as u32).unwrap_or(usize::MAX))
        .sum();
    if free_count > cap {
        return Err(Error::BasisCapExceeded {
            got: free_count,
            cap,
        });
    }
    let mut words = Vec::new();
    let mut quotients = Vec::new();
    let mut offsets = Vec::new();
    for n in 0..=params.trunc {
        let q = degree_quotient(params, n)?;
        offsets.push(words.len());
        for &s in &q.selected {
            words.push(q.words[s].clone());
        }
        quotients.push(q);
    }
    let index = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    Ok(Basis {
        words,
        index,
        quotients,
        offsets,
    })
}

/// One (left word, right word, coefficient) term of a free comultiplication.
type SplitTerm = (Vec<u8>, Vec<u8>, Scalar);

/// Free-algebra comultiplication of a word, letter by letter:
/// comult(w x_i) = sum over terms (u (x) v) of comult(w) of
/// chi_i(deg v) (u x_i (x) v) + (u (x) v x_i).
fn free_comult(params: &QtaParams, word: &[u8]) -> Result<Vec<SplitTerm>> {
    let f = params.field;
    let mut terms: Vec<SplitTerm> = vec![(vec![], vec![], 1)];
    for &l in word {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (u, v, coef) in &terms {
            let twist = word_char(params, std::slice::from_ref(&l), &word_degree(params, v))?;
            let mut u2 = u.clone();
            u2.push(l);
            next.push((u2, v.clone(), f.mul(*coef, twist)));
            let mut v2 = v.clone();
            v2.push(l);
            next.push((u.clone(), v2, *coef));
        }
        terms = next;
    }
    Ok(terms)
}

/// Builds the truncated quantum tensor algebra and verifies the full braided
/// Hopf axiom suite on the result.
pub fn quantum_tensor_algebra(params: QtaParams) -> Result<TruncatedQta> {
    params.validate()?;
    let cap = std::env::var("YDHOPF_BASIS_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BASIS_CAP);
    quantum_tensor_algebra_with_cap(params, cap)
}

pub fn quantum_tensor_algebra_with_cap(params: QtaParams, cap: usize) -> Result<TruncatedQta> {
    params.validate()?;
    let ctx = params.ctx();
    let f = params.field;
    let basis = build_basis(&params, cap)?;
    let dim = basis.words.len();

    let degrees: Vec<GroupElem> = basis
        .words
        .iter()
        .map(|w| word_degree(&params, w))
        .collect();
    let mut action = Vec::new();
    for k in 0..ctx.group.rank() {
        let mut g = ctx.group.identity();
        g[k] = 1 % ctx.group.orders()[k];
        let mut m = FpMat::zeros(dim, dim);
        for (i, w) in basis.words.iter().enumerate() {
            m[(i, i)] = word_char(&params, w, &g)?;
        }
        action.push(m);
    }
    let carrier = YdObject::build(ctx.clone(), "T", degrees, action)?;

    let w = TensorWord::single(&carrier);
    let ww = w.concat(&w)?;
    let iw = TensorWord::unit(&ctx);

    let mut mult_cols = vec![Vec::new(); dim * dim];
    for (i, u) in basis.words.iter().enumerate() {
        for (j, v) in basis.words.iter().enumerate() {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            mult_cols[i * dim + j] = basis.reduce(&uv);
        }
    }
    let mult = LinearMorphism::from_cols(ww.clone(), w.clone(), mult_cols);

    let empty_idx = basis.index[&vec![]];
    let unit = LinearMorphism::from_fn(iw.clone(), w.clone(), |_| vec![(empty_idx, 1)]);
    let counit = LinearMorphism::from_fn(w.clone(), iw, |j| {
        if j == empty_idx {
            vec![(0, 1)]
        } else {
            vec![]
        }
    });

    let mut comult_cols = vec![Vec::new(); dim];
    for (i, word) in basis.words.iter().enumerate() {
        let mut col = Vec::new();
        for (u, v, coef) in free_comult(&params, word)? {
            for (iu, cu) in basis.reduce(&u) {
                for (iv, cv) in basis.reduce(&v) {
                    col.push((iu * dim + iv, f.mul(coef, f.mul(cu, cv))));
                }
            }
        }
        comult_cols[i] = col;
    }
    let comult = LinearMorphism::from_cols(w.clone(), ww, comult_cols);

    let (antipode, _) = antipode_solve(&carrier, &mult, &unit, &comult, &counit)?;
    let hopf = hopf_build(carrier, mult, unit, comult, counit, Some(antipode))?;
    Ok(TruncatedQta {
        params,
        hopf,
        words: basis.words,
    })
}

/// For every group element and basis word, the action must equal the product
/// of the letter characters (checked against the letterwise oracle).
pub fn word_action_check(t: &TruncatedQta) -> Result<Vec<Assertion>> {
    let f = t.params.field;
    let mut ck = Checker::new();
    let word = t.hopf.word();
    for g in t.params.group.elements() {
        let act = LinearMorphism::word_action(&word, &g);
        let oracle = LinearMorphism::from_fn(word.clone(), word.clone(), |j| {
            let mut acc = 1;
            for &l in &t.words[j] {
                acc = f.mul(acc, t.params.generators[l as usize].1.eval(&f, &g).unwrap());
            }
            vec![(j, acc)]
        });
        ck.eq(
            format!("qta.word-action.{g:?}"),
            "g . (y1...ym) = chi_1(g)...chi_m(g) y1...ym",
            &act,
            &oracle,
        );
    }
    Ok(ck.into_assertions())
}

/// Character criterion chi_i(g_j)chi_j(g_i) = 1 for all i, j; also evaluates
/// the semantic form c . comult = comult so the two can be compared.
pub fn quantum_cocommutative_check(t: &TruncatedQta) -> Result<(bool, bool)> {
    let f = t.params.field;
    let mut criterion = true;
    for (gi, chi_i) in &t.params.generators {
        for (gj, chi_j) in &t.params.generators {
            if f.mul(chi_i.eval(&f, gj)?, chi_j.eval(&f, gi)?) != 1 {
                criterion = false;
            }
        }
    }
    let w = t.hopf.word();
    let c = LinearMorphism::braiding(&w, &w)?;
    let semantic = c.compose(&t.hopf.comult)?.equals(&t.hopf.comult)?;
    Ok((criterion, semantic))
}

/// Named presets used across the verification suite.
pub fn preset(name: &str) -> Result<QtaParams> {
    let f5 = Field::new(5)?;
    match name {
        // one generator over Z_2, chi(g) = -1, cut at length 1: dim 2
        "bline" => {
            let g = Group::new(vec![2])?;
            let chi = Character::new(&f5, &g, vec![4])?;
            Ok(QtaParams {
                field: f5,
                group: g,
                generators: vec![(vec![1], chi)],
                trunc: 1,
            })
        }
        // two generators over Z_2 x Z_2, chi_i(g_i) = -1, chi_i(g_j) = 1,
        // cut at length 2; symmetric braiding, quantum cocommutative
        "two-gen" => {
            let g = Group::new(vec![2, 2])?;
            let chi1 = Character::new(&f5, &g, vec![4, 1])?;
            let chi2 = Character::new(&f5, &g, vec![1, 4])?;
            Ok(QtaParams {
                field: f5,
                group: g,
                generators: vec![(vec![1, 0], chi1), (vec![0, 1], chi2)],
                trunc: 2,
            })
        }
        // one generator over Z_4 with chi(g) = 2 (a primitive 4th root mod
        // 5), cut at length 3: dim 4, braiding not symmetric
        "z4q2" => {
            let g = Group::new(vec![4])?;
            let chi = Character::new(&f5, &g, vec![2])?;
            Ok(QtaParams {
                field: f5,
                group: g,
                generators: vec![(vec![1], chi)],
                trunc: 3,
            })
        }
        other => Err(Error::InvalidInput(format!("unknown preset `{other}`"))),
    }
}

pub fn build_preset(name: &str) -> Result<TruncatedQta> {
    quantum_tensor_algebra(preset(name)?)
}

impl TruncatedQta {
    /// Human-readable basis names: "1" for the empty word, else letters
    /// joined, e.g. "x1x2".
    pub fn word_names(&self) -> Vec<String> {
        self.words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|l| format!("x{}", l + 1)).collect()
                }
            })
            .collect()
    }
}
