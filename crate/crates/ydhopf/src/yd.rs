//! Yetter-Drinfeld modules over kG for finite abelian G: G-graded spaces with
//! a grading-compatible G-action. The coaction is stored as one degree label
//! per basis vector; the action as one matrix per cyclic generator.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{Group, GroupElem};
use crate::linalg::FpMat;
use std::fmt;
use std::sync::Arc;

/// Shared group/field pair every object lives over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub field: Field,
    pub group: Group,
}

impl Context {
    pub fn new(field: Field, group: Group) -> Self {
        Context { field, group }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ObjData {
    ctx: Context,
    name: String,
    degrees: Vec<GroupElem>,
    action: Vec<FpMat>,
}

/// A finite-dimensional object of the category: graded basis plus an action
/// matrix per group generator. Cheap to clone.
#[derive(Debug, Clone)]
pub struct YdObject(Arc<ObjData>);

impl PartialEq for YdObject {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for YdObject {}

impl fmt::Display for YdObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl YdObject {
    /// Validated constructor: the action must preserve the grading, the
    /// generator matrices must commute pairwise, and each must have order
    /// dividing its cyclic order.
    pub fn build(
        ctx: Context,
        name: impl Into<String>,
        degrees: Vec<GroupElem>,
        action: Vec<FpMat>,
    ) -> Result<Self> {
        let obj = Self::build_unchecked(ctx, name, degrees, action);
        obj.validate()?;
        Ok(obj)
    }

    /// No validation: used internally and by tests that need to inject
    /// invalid data past the constructor checks.
    pub fn build_unchecked(
        ctx: Context,
        name: impl Into<String>,
        degrees: Vec<GroupElem>,
        action: Vec<FpMat>,
    ) -> Self {
        YdObject(Arc::new(ObjData {
            ctx,
            name: name.into(),
            degrees,
            action,
        }))
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let ctx = self.ctx();
        let f = &ctx.field;
        if self.0.action.len() != ctx.group.rank() {
            return Err(Error::MismatchedGroup(format!(
                "{} action matrices for a rank-{} group",
                self.0.action.len(),
                ctx.group.rank()
            )));
        }
        for deg in &self.0.degrees {
            if !ctx.group.contains(deg) {
                return Err(Error::MismatchedGroup(format!(
                    "degree {deg:?} outside the group"
                )));
            }
        }
        for m in &self.0.action {
            if m.rows != d || m.cols != d {
                return Err(Error::ShapeMismatch(format!(
                    "action matrix is {}x{}, object dim {d}",
                    m.rows, m.cols
                )));
            }
        }
        for (j, m) in self.0.action.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    if m[(r, c)] != 0 && self.0.degrees[r] != self.0.degrees[c] {
                        return Err(Error::GradingActionClash {
                            from: c,
                            from_deg: format!("{:?}", self.0.degrees[c]),
                            to: r,
                            to_deg: format!("{:?}", self.0.degrees[r]),
                        });
                    }
                }
            }
            let order = ctx.group.orders()[j];
            if m.pow(f, order as u64) != FpMat::identity(d) {
                return Err(Error::WrongActionOrder { gen: j, order });
            }
        }
        for a in 0..self.0.action.len() {
            for b in (a + 1)..self.0.action.len() {
                let ab = self.0.action[a].mul(f, &self.0.action[b]);
                let ba = self.0.action[b].mul(f, &self.0.action[a]);
                if ab != ba {
                    return Err(Error::NonCommutingAction(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &Context {
        &self.0.ctx
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElem] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElem {
        &self.0.degrees[i]
    }

    pub fn generator_action(&self) -> &[FpMat] {
        &self.0.action
    }

    /// Matrix of the action of an arbitrary group element.
    pub fn action_of(&self, g: &GroupElem) -> FpMat {
        let f = &self.ctx().field;
        let mut m = FpMat::identity(self.dim());
        for (j, &e) in g.iter().enumerate() {
            if e != 0 {
                m = m.mul(f, &self.0.action[j].pow(f, e as u64));
            }
        }
        m
    }

    /// The monoidal unit: one basis vector of degree 0 with trivial action.
    pub fn unit(ctx: &Context) -> Self {
        let rank = ctx.group.rank();
        YdObject::build_unchecked(
            ctx.clone(),
            "I",
            vec![vec![0; rank]],
            vec![FpMat::identity(1); rank],
        )
    }

    /// The group algebra kG as an object of its own category: basis indexed
    /// by group elements in enumeration order, degree g on e_g, trivial
    /// action (the adjoint action of an abelian group).
    pub fn group_algebra(ctx: &Context) -> Self {
        let elems = ctx.group.elements();
        let n = elems.len();
        YdObject::build_unchecked(
            ctx.clone(),
            "kG",
            elems,
            vec![FpMat::identity(n); ctx.group.rank()],
        )
    }

    /// Dual object: dual basis with negated degrees and inverse-transpose
    /// action matrices.
    pub fn dual(&self) -> Result<Self> {
        let ctx = self.ctx().clone();
        let f = ctx.field;
        let degrees = self
            .0
            .degrees
            .iter()
            .map(|d| ctx.group.neg(d))
            .collect::<Vec<_>>();
        let mut action = Vec::new();
        for m in &self.0.action {
            action.push(m.inverse(&f)?.transpose());
        }
        Ok(YdObject::build_unchecked(
            ctx,
            format!("{}^*", self.0.name),
            degrees,
            action,
        ))
    }

    /// Monoidal product as a single object: degrees add, actions act
    /// diagonally (Kronecker of the factor actions), leftmost factor most
    /// significant in the index.
    pub fn tensor(&self, other: &YdObject) -> Result<Self> {
        if self.ctx() != other.ctx() {
            return Err(Error::MismatchedContext(format!(
                "{} vs {}",
                self.0.name, other.0.name
            )));
        }
        let ctx = self.ctx().clone();
        let f = ctx.field;
        let (da, db) = (self.dim(), other.dim());
        let mut degrees = Vec::with_capacity(da * db);
        for i in 0..da {
            for j in 0..db {
                degrees.push(ctx.group.add(self.degree(i), other.degree(j)));
            }
        }
        let mut action = Vec::new();
        for k in 0..ctx.group.rank() {
            let (ma, mb) = (&self.0.action[k], &other.0.action[k]);
            let mut m = FpMat::zeros(da * db, da * db);
            for r1 in 0..da {
                for c1 in 0..da {
                    if ma[(r1, c1)] == 0 {
                        continue;
                    }
                    for r2 in 0..db {
                        for c2 in 0..db {
                            let v = f.mul(ma[(r1, c1)], mb[(r2, c2)]);
                            if v != 0 {
                                m[(r1 * db + r2, c1 * db + c2)] = v;
                            }
                        }
                    }
                }
            }
            action.push(m);
        }
        Ok(YdObject::build_unchecked(
            ctx,
            format!("{}(x){}", self.0.name, other.0.name),
            degrees,
            action,
        ))
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        YdObject(Arc::new(ObjData {
            ctx: self.0.ctx.clone(),
            name: name.into(),
            degrees: self.0.degrees.clone(),
            action: self.0.action.clone(),
        }))
    }
}

/// A tensor word of objects; the empty word is the monoidal unit I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorWord {
    ctx: Context,
    factors: Vec<YdObject>,
}

impl TensorWord {
    pub fn unit(ctx: &Context) -> Self {
        TensorWord {
            ctx: ctx.clone(),
            factors: vec![],
        }
    }

    pub fn single(obj: &YdObject) -> Self {
        TensorWord {
            ctx: obj.ctx().clone(),
            factors: vec![obj.clone()],
        }
    }

    pub fn of(factors: &[&YdObject]) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidInput("empty factor list; use unit()".into()))?;
        let ctx = first.ctx().clone();
        for o in factors {
            if *o.ctx() != ctx {
                return Err(Error::MismatchedContext(format!("factor {}", o.name())));
            }
        }
        Ok(TensorWord {
            ctx,
            factors: factors.iter().map(|o| (*o).clone()).collect(),
        })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn factors(&self) -> &[YdObject] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|o| o.dim()).product()
    }

    pub fn concat(&self, other: &TensorWord) -> Result<TensorWord> {
        if self.ctx != other.ctx {
            return Err(Error::MismatchedContext("tensor word concat".into()));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(TensorWord {
            ctx: self.ctx.clone(),
            factors,
        })
    }

    /// Mixed-radix digits of a basis index, leftmost factor most significant.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (k, obj) in self.factors.iter().enumerate().rev() {
            let d = obj.dim();
            out[k] = index % d;
            index /= d;
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        let mut idx = 0;
        for (k, obj) in self.factors.iter().enumerate() {
            idx = idx * obj.dim() + digits[k];
        }
        idx
    }

    /// Degree of a basis vector of the word (sum over factors).
    pub fn degree_of(&self, index: usize) -> GroupElem {
        let mut deg = self.ctx.group.identity();
        for (k, i) in self.digits(index).iter().enumerate() {
            deg = self.ctx.group.add(&deg, self.factors[k].degree(*i));
        }
        deg
    }

    pub fn display(&self) -> String {
        if self.factors.is_empty() {
            "I".to_string()
        } else {
            self.factors
                .iter()
                .map(|o| o.name().to_string())
                .collect::<Vec<_>>()
                .join("(x)")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::Group;
    use crate::linalg::FpMat;

    pub fn ctx_z2_f5() -> Context {
        Context::new(Field::new(5).unwrap(), Group::new(vec![2]).unwrap())
    }

    /// dim-2 object with degrees (0),(1) and action diag(1,4): the carrier
    /// of the braided line.
    pub fn braided_line_obj() -> YdObject {
        let ctx = ctx_z2_f5();
        YdObject::build(
            ctx,
            "H",
            vec![vec![0], vec![1]],
            vec![FpMat::from_rows(vec![vec![1, 0], vec![0, 4]])],
        )
        .unwrap()
    }

    #[test]
    fn build_validates() {
        let ctx = ctx_z2_f5();
        assert!(braided_line_obj().validate().is_ok());
        // 2^2 = 4 != 1 mod 5: wrong order
        let bad = YdObject::build(
            ctx.clone(),
            "X",
            vec![vec![0]],
            vec![FpMat::from_rows(vec![vec![2]])],
        );
        assert!(matches!(bad, Err(Error::WrongActionOrder { .. })));
        // swap mixes degrees
        let clash = YdObject::build(
            ctx,
            "X",
            vec![vec![0], vec![1]],
            vec![FpMat::from_rows(vec![vec![0, 1], vec![1, 0]])],
        );
        assert!(matches!(clash, Err(Error::GradingActionClash { .. })));
    }

    #[test]
    fn dual_object_shapes() {
        let h = braided_line_obj();
        let d = h.dual().unwrap();
        assert_eq!(d.degree(1), &vec![1]); // -g = g in Z_2
        assert_eq!(d.degree(0), &vec![0]);
        assert_eq!(d.generator_action()[0][(1, 1)], 4); // inverse-transpose of diag(1,4)
                                                        // double dual has the same degrees and actions
        let dd = d.dual().unwrap();
        assert_eq!(dd.degrees(), h.degrees());
        assert_eq!(dd.generator_action(), h.generator_action());
    }

    #[test]
    fn tensor_degrees() {
        let h = braided_line_obj();
        let hh = h.tensor(&h).unwrap();
        let degs: Vec<GroupElem> = (0..4).map(|i| hh.degree(i).clone()).collect();
        assert_eq!(degs, vec![vec![0], vec![1], vec![1], vec![0]]);
        // action of g on x(x)x is (-1)^2 = 1
        assert_eq!(hh.generator_action()[0][(3, 3)], 1);
        let unit = YdObject::unit(h.ctx());
        let hu = h.tensor(&unit).unwrap();
        assert_eq!(hu.degrees(), h.degrees());
    }

    #[test]
    fn word_indexing() {
        let h = braided_line_obj();
        let w = TensorWord::of(&[&h, &h, &h]).unwrap();
        assert_eq!(w.dim(), 8);
        for i in 0..8 {
            let d = w.digits(i);
            assert_eq!(w.index_of(&d), i);
        }
        assert_eq!(w.degree_of(0b011), vec![0]); // two odd factors cancel in Z_2
        assert_eq!(w.degree_of(0b001), vec![1]);
    }
}
