//! The four pairing-induced actions between H and H^d: each is assembled as
//! a wiring of comultiplication and the pairing, then certified as a module
//! algebra by evaluating both sides of every law.

use crate::dual::Pairing;
use crate::error::Result;
use crate::hopf::BraidedHopf;
use crate::morphism::LinearMorphism;
use crate::report::Assertion;
use crate::smash::{module_algebra_assertions, Algebra, ModuleAlgebra, ModuleSide};

/// The four pairing-induced actions:
/// h -> f = f1 <f2, h>, f -> h = h1 <f, h2>,
/// f <- h = <f1, h> f2,  h <- f = <f, h1> h2.
#[derive(Debug, Clone)]
pub struct Harpoons {
    /// H(x)H^d -> H^d
    pub h_on_dual: LinearMorphism,
    /// H^d(x)H -> H
    pub dual_on_h: LinearMorphism,
    /// H^d(x)H -> H^d
    pub dual_from_h: LinearMorphism,
    /// H(x)H^d -> H
    pub h_from_dual: LinearMorphism,
}

/// Builds all four actions and verifies module plus module-algebra laws for
/// each; failures surface as ModuleAxiomFailure.
pub fn harpoon_actions(h: &BraidedHopf, hd: &BraidedHopf, pairing: &Pairing) -> Result<Harpoons> {
    let hw = h.word();
    let dw = hd.word();
    let id_h = LinearMorphism::identity(hw.clone());
    let id_d = LinearMorphism::identity(dw.clone());
    let pair = &pairing.form;

    // h -> f = f1 <f2, h>
    let dom_i = hw.concat(&dw)?;
    let h_on_dual = id_d
        .tensor(pair)?
        .compose(&hd.comult.tensor(&id_h)?)?
        .compose(&LinearMorphism::permute(&dom_i, &[1, 0]))?;

    // f -> h = h1 <f, h2>
    let spread_ii = id_d.tensor(&h.comult)?;
    let dual_on_h = id_h
        .tensor(pair)?
        .compose(&LinearMorphism::permute(spread_ii.codomain(), &[1, 0, 2]))?
        .compose(&spread_ii)?;

    // f <- h = <f1, h> f2
    let spread_iii = hd.comult.tensor(&id_h)?;
    let dual_from_h = pair
        .tensor(&id_d)?
        .compose(&LinearMorphism::permute(spread_iii.codomain(), &[0, 2, 1]))?
        .compose(&spread_iii)?;

    // h <- f = <f, h1> h2
    let spread_iv = h.comult.tensor(&id_d)?;
    let h_from_dual = pair
        .tensor(&id_h)?
        .compose(&LinearMorphism::permute(spread_iv.codomain(), &[2, 0, 1]))?
        .compose(&spread_iv)?;

    let hp = Harpoons {
        h_on_dual,
        dual_on_h,
        dual_from_h,
        h_from_dual,
    };
    let asts = harpoon_assertions(h, hd, &hp)?;
    if let Some(bad) = asts.into_iter().find(|a| !a.pass) {
        return Err(crate::error::Error::ModuleAxiomFailure(
            bad.name,
            bad.witness
                .map(|w| format!("entry ({}, {}): {} vs {}", w.row, w.col, w.lhs, w.rhs))
                .unwrap_or_default(),
        ));
    }
    Ok(hp)
}

/// Module and module-algebra laws for all four actions, as one assertion
/// list.
pub fn harpoon_assertions(
    h: &BraidedHopf,
    hd: &BraidedHopf,
    hp: &Harpoons,
) -> Result<Vec<Assertion>> {
    let mut out = Vec::new();
    let cases = [
        (
            "harpoon.h-on-dual",
            ModuleAlgebra {
                alg: Algebra::of_hopf(hd),
                over: h.clone(),
                action: hp.h_on_dual.clone(),
                side: ModuleSide::Left,
            },
        ),
        (
            "harpoon.dual-on-h",
            ModuleAlgebra {
                alg: Algebra::of_hopf(h),
                over: hd.clone(),
                action: hp.dual_on_h.clone(),
                side: ModuleSide::Left,
            },
        ),
        (
            "harpoon.dual-from-h",
            ModuleAlgebra {
                alg: Algebra::of_hopf(hd),
                over: h.clone(),
                action: hp.dual_from_h.clone(),
                side: ModuleSide::Right,
            },
        ),
        (
            "harpoon.h-from-dual",
            ModuleAlgebra {
                alg: Algebra::of_hopf(h),
                over: hd.clone(),
                action: hp.h_from_dual.clone(),
                side: ModuleSide::Right,
            },
        ),
    ];
    for (label, ma) in cases {
        out.extend(module_algebra_assertions(&ma, label)?);
    }
    Ok(out)
}
