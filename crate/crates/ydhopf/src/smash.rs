//! Algebras on tensor words, module/comodule algebras over a braided Hopf
//! algebra, smash products, and the braided tensor-product algebra. Law
//! checkers evaluate both tangle sides exactly and never hide a failure.

use crate::error::{Error, Result};
use crate::hopf::BraidedHopf;
use crate::morphism::LinearMorphism;
use crate::report::{Assertion, Checker};
use crate::yd::TensorWord;

/// An associative unital algebra carried by a tensor word.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub word: TensorWord,
    /// word(x)word -> word
    pub mult: LinearMorphism,
    /// I -> word
    pub unit: LinearMorphism,
}

impl Algebra {
    pub fn of_hopf(h: &BraidedHopf) -> Algebra {
        Algebra {
            word: h.word(),
            mult: h.mult.clone(),
            unit: h.unit.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.word.dim()
    }

    pub fn axiom_assertions(&self, label: &str) -> Vec<Assertion> {
        let id = LinearMorphism::identity(self.word.clone());
        let mut ck = Checker::new();
        ck.eq(
            format!("{label}.assoc"),
            "m(m(x)id) = m(id(x)m)",
            &self.mult.compose(&self.mult.tensor(&id).unwrap()).unwrap(),
            &self.mult.compose(&id.tensor(&self.mult).unwrap()).unwrap(),
        );
        ck.eq(
            format!("{label}.unit-left"),
            "m(eta(x)id) = id",
            &self.mult.compose(&self.unit.tensor(&id).unwrap()).unwrap(),
            &id,
        );
        ck.eq(
            format!("{label}.unit-right"),
            "m(id(x)eta) = id",
            &self.mult.compose(&id.tensor(&self.unit).unwrap()).unwrap(),
            &id,
        );
        ck.into_assertions()
    }

    pub fn verify(&self, label: &str) -> Result<()> {
        let asts = self.axiom_assertions(label);
        if let Some(bad) = asts.iter().find(|a| !a.pass) {
            return Err(Error::AxiomFailure {
                axiom: bad.name.clone(),
                witness: bad
                    .witness
                    .as_ref()
                    .map(|w| format!("entry ({}, {}): {} vs {}", w.row, w.col, w.lhs, w.rhs))
                    .unwrap_or_default(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleSide {
    Left,
    Right,
}

/// A module algebra: an algebra together with a Hopf action on it.
#[derive(Debug, Clone)]
pub struct ModuleAlgebra {
    pub alg: Algebra,
    pub over: BraidedHopf,
    /// Left: over(x)carrier -> carrier. Right: carrier(x)over -> carrier.
    pub action: LinearMorphism,
    pub side: ModuleSide,
}

/// A right comodule algebra (R, psi) with psi: R -> R(x)H^d.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    pub alg: Algebra,
    pub coaction: LinearMorphism,
}

impl ComoduleAlgebra {
    /// Coassociativity, counit law, and multiplicativity of the coaction
    /// into the braided product on R(x)H^d.
    pub fn axiom_assertions(&self, hd: &BraidedHopf, label: &str) -> Result<Vec<Assertion>> {
        let id_r = LinearMorphism::identity(self.alg.word.clone());
        let id_d = LinearMorphism::identity(hd.word());
        let mut ck = Checker::new();
        ck.eq(
            format!("{label}.coassoc"),
            "(psi(x)id)psi = (id(x)comult)psi",
            &self.coaction.tensor(&id_d)?.compose(&self.coaction)?,
            &id_r.tensor(&hd.comult)?.compose(&self.coaction)?,
        );
        ck.eq(
            format!("{label}.counit"),
            "(id(x)counit)psi = id",
            &id_r.tensor(&hd.counit)?.compose(&self.coaction)?,
            &id_r,
        );
        let rxd = braided_tensor_algebra(&self.alg, &Algebra::of_hopf(hd))?;
        ck.eq(
            format!("{label}.multiplicative"),
            "psi . m = m_braided(psi(x)psi)",
            &self.coaction.compose(&self.alg.mult)?,
            &rxd.mult.compose(&self.coaction.tensor(&self.coaction)?)?,
        );
        ck.eq(
            format!("{label}.unital"),
            "psi . eta = eta(x)eta",
            &self.coaction.compose(&self.alg.unit)?,
            &self.alg.unit.tensor(&hd.unit)?,
        );
        Ok(ck.into_assertions())
    }
}

/// Module and module-algebra laws for an action, with the braided crossing in
/// the measuring axiom.
pub fn module_algebra_assertions(ma: &ModuleAlgebra, label: &str) -> Result<Vec<Assertion>> {
    let b = &ma.over;
    let a = &ma.alg;
    let act = &ma.action;
    let id_b = LinearMorphism::identity(b.word());
    let id_a = LinearMorphism::identity(a.word.clone());
    let mut ck = Checker::new();
    match ma.side {
        ModuleSide::Left => {
            ck.eq(
                format!("{label}.module"),
                "act(m(x)id) = act(id(x)act)",
                &act.compose(&b.mult.tensor(&id_a)?)?,
                &act.compose(&id_b.tensor(act)?)?,
            );
            ck.eq(
                format!("{label}.module-unit"),
                "act(eta(x)id) = id",
                &act.compose(&b.unit.tensor(&id_a)?)?,
                &id_a,
            );
            // h.(xy) = (h1 . x')(h2' . y) with the braiding crossing h2 past x
            let c = LinearMorphism::braiding(&b.word(), &a.word)?;
            let rhs = a
                .mult
                .compose(&act.tensor(act)?)?
                .compose(&id_b.tensor(&c)?.tensor(&id_a)?)?
                .compose(&b.comult.tensor(&id_a)?.tensor(&id_a)?)?;
            ck.eq(
                format!("{label}.measuring"),
                "act(id(x)m) = m(act(x)act)(id(x)c(x)id)(comult(x)id(x)id)",
                &act.compose(&id_b.tensor(&a.mult)?)?,
                &rhs,
            );
            ck.eq(
                format!("{label}.unit-measuring"),
                "h . 1 = counit(h) 1",
                &act.compose(&id_b.tensor(&a.unit)?)?,
                &a.unit.compose(&b.counit)?,
            );
        }
        ModuleSide::Right => {
            ck.eq(
                format!("{label}.module"),
                "act(id(x)m) = act(act(x)id)",
                &act.compose(&id_a.tensor(&b.mult)?)?,
                &act.compose(&act.tensor(&id_b)?)?,
            );
            ck.eq(
                format!("{label}.module-unit"),
                "act(id(x)eta) = id",
                &act.compose(&id_a.tensor(&b.unit)?)?,
                &id_a,
            );
            // (xy).h = (x . h1')(y' . h2) with the braiding crossing y past h1
            let c = LinearMorphism::braiding(&a.word, &b.word())?;
            let rhs = a
                .mult
                .compose(&act.tensor(act)?)?
                .compose(&id_a.tensor(&c)?.tensor(&id_b)?)?
                .compose(&id_a.tensor(&id_a)?.tensor(&b.comult)?)?;
            ck.eq(
                format!("{label}.measuring"),
                "act(m(x)id) = m(act(x)act)(id(x)c(x)id)(id(x)id(x)comult)",
                &act.compose(&a.mult.tensor(&id_b)?)?,
                &rhs,
            );
            ck.eq(
                format!("{label}.unit-measuring"),
                "1 . h = counit(h) 1",
                &act.compose(&a.unit.tensor(&id_b)?)?,
                &a.unit.compose(&b.counit)?,
            );
        }
    }
    Ok(ck.into_assertions())
}

fn require_pass(asts: Vec<Assertion>, kind: &str) -> Result<()> {
    if let Some(bad) = asts.into_iter().find(|a| !a.pass) {
        return Err(Error::ModuleAxiomFailure(
            bad.name,
            bad.witness
                .map(|w| format!("entry ({}, {}): {} vs {}", w.row, w.col, w.lhs, w.rhs))
                .unwrap_or_else(|| kind.to_string()),
        ));
    }
    Ok(())
}

/// The smash product A#H for a verified left H-module algebra A:
/// m# = (m_A(x)m_H)(id_A(x)act(x)id_H)(id_A(x)id_H(x)c_{H,A}(x)id_H)
///      (id_A(x)comult(x)id_A(x)id_H), unit 1_A(x)1_H.
pub fn smash_product(a: &ModuleAlgebra, h: &BraidedHopf) -> Result<Algebra> {
    if a.side != ModuleSide::Left {
        return Err(Error::InvalidInput(
            "smash product needs a left module algebra".into(),
        ));
    }
    require_pass(
        module_algebra_assertions(a, "smash-input")?,
        "module algebra",
    )?;
    let id_a = LinearMorphism::identity(a.alg.word.clone());
    let id_h = LinearMorphism::identity(h.word());
    let c = LinearMorphism::braiding(&h.word(), &a.alg.word)?;
    let spread = id_a.tensor(&h.comult)?.tensor(&id_a)?.tensor(&id_h)?;
    let cross = id_a.tensor(&id_h)?.tensor(&c)?.tensor(&id_h)?;
    let act_mid = id_a.tensor(&a.action)?.tensor(&id_h)?.tensor(&id_h)?;
    let mult = a
        .alg
        .mult
        .tensor(&h.mult)?
        .compose(&act_mid)?
        .compose(&cross)?
        .compose(&spread)?;
    let unit = a.alg.unit.tensor(&h.unit)?;
    let out = Algebra {
        word: a.alg.word.concat(&h.word())?,
        mult,
        unit,
    };
    out.verify("smash")?;
    Ok(out)
}

/// The braided tensor-product algebra A(x)B with
/// m = (m_A(x)m_B)(id(x)c_{B,A}(x)id).
pub fn braided_tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let id_a = LinearMorphism::identity(a.word.clone());
    let id_b = LinearMorphism::identity(b.word.clone());
    let c = LinearMorphism::braiding(&b.word, &a.word)?;
    let mult = a
        .mult
        .tensor(&b.mult)?
        .compose(&id_a.tensor(&c)?.tensor(&id_b)?)?;
    Ok(Algebra {
        word: a.word.concat(&b.word)?,
        mult,
        unit: a.unit.tensor(&b.unit)?,
    })
}

/// Converts a right H^d-comodule algebra into a left H-module algebra via the
/// pairing: h braids past both coaction legs, then the H^d-leg pairs with h.
pub fn comodule_to_module_algebra(
    r: &ComoduleAlgebra,
    h: &BraidedHopf,
    hd: &BraidedHopf,
    pairing: &crate::dual::Pairing,
) -> Result<ModuleAlgebra> {
    if !crate::ydcond::symmetric_pair_check(&h.carrier, &hd.carrier)? {
        return Err(Error::NonSymmetricBraiding);
    }
    let id_r = LinearMorphism::identity(r.alg.word.clone());
    let id_h = LinearMorphism::identity(h.word());
    let id_d = LinearMorphism::identity(hd.word());
    // (h, r) -> (h, r0, r1), then h braids past both coaction legs and pairs:
    // alpha(h(x)r) = (deg h . r0) <deg h . r1, h>
    let spread = id_h.tensor(&r.coaction)?;
    let cross0 = LinearMorphism::braiding(&h.word(), &r.alg.word)?.tensor(&id_d)?;
    let cross1 = id_r.tensor(&LinearMorphism::braiding(&h.word(), &hd.word())?)?;
    let action = id_r
        .tensor(&pairing.form)?
        .compose(&cross1)?
        .compose(&cross0)?
        .compose(&spread)?;
    let ma = ModuleAlgebra {
        alg: r.alg.clone(),
        over: h.clone(),
        action,
        side: ModuleSide::Left,
    };
    require_pass(
        module_algebra_assertions(&ma, "comodule-to-module")?,
        "module algebra",
    )?;
    Ok(ma)
}

/// H^d acting on R#H without pairing against R and through the dual action
/// on H; the f-leg crosses R by the braiding, so the result is a left
/// H^d-module algebra structure on the smash product.
pub fn hd_action_on_rh(
    rh: &Algebra,
    r_word: &TensorWord,
    h: &BraidedHopf,
    hd: &BraidedHopf,
    dual_on_h: &LinearMorphism,
) -> Result<ModuleAlgebra> {
    let id_r = LinearMorphism::identity(r_word.clone());
    let id_h = LinearMorphism::identity(h.word());
    // (f, r, h) -> (deg f . r, f, h) -> (r', f -> h)
    let cross = LinearMorphism::braiding(&hd.word(), r_word)?;
    let action = id_r.tensor(dual_on_h)?.compose(&cross.tensor(&id_h)?)?;
    let ma = ModuleAlgebra {
        alg: rh.clone(),
        over: hd.clone(),
        action,
        side: ModuleSide::Left,
    };
    require_pass(
        module_algebra_assertions(&ma, "hd-on-smash")?,
        "module algebra",
    )?;
    Ok(ma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::quasi_dual_build;
    use crate::harpoon::harpoon_actions;
    use crate::qta::build_preset;

    #[test]
    fn smash_dims_and_units() {
        let t = build_preset("bline").unwrap();
        let (hd, pairing) = quasi_dual_build(&t.hopf).unwrap();
        let hp = harpoon_actions(&t.hopf, &hd, &pairing).unwrap();
        // H # H^d: H is a left H^d-module algebra under the dual action
        let h_mod = ModuleAlgebra {
            alg: Algebra::of_hopf(&t.hopf),
            over: hd.clone(),
            action: hp.dual_on_h.clone(),
            side: ModuleSide::Left,
        };
        let smash = smash_product(&h_mod, &hd).unwrap();
        assert_eq!(smash.dim(), 4);
        // (1#1)(a#h) = a#h
        let id = LinearMorphism::identity(smash.word.clone());
        let unit_left = smash
            .mult
            .compose(&smash.unit.tensor(&id).unwrap())
            .unwrap();
        assert!(unit_left.equals(&id).unwrap());
        // (1#x*)(1#x*) = 1#(x* x*) = 0 since x*^2 = 0
        let col = smash.dim() + 1;
        assert!(smash.mult.columns()[col].is_empty());
    }
}
