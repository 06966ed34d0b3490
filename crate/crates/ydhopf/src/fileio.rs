//! The on-disk interchange format: a single UTF-8 JSON file per algebra with
//! integer-only sparse triples, plus a pairing sidecar keyed to the digests
//! of both algebra files so mismatched pairs cannot be combined silently.
//! Writes are atomic (temp file then rename); round-trips are bit-exact.

use crate::dual::Pairing;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::Group;
use crate::hopf::BraidedHopf;
use crate::linalg::FpMat;
use crate::morphism::LinearMorphism;
use crate::yd::{Context, TensorWord, YdObject};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: FieldSection,
    pub group: GroupSection,
    pub object: ObjectSection,
    pub structure: StructureSection,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldSection {
    pub p: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSection {
    pub orders: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ObjectSection {
    pub name: String,
    pub basis: Vec<String>,
    pub degrees: Vec<Vec<u32>>,
    /// One sparse matrix [row, col, value] per group generator.
    pub action: Vec<Vec<[u64; 3]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureSection {
    /// basis_i (x) basis_j -> value . basis_k as [i, j, k, value]
    pub mult: Vec<[u64; 4]>,
    /// basis_i -> value . basis_j (x) basis_k as [i, j, k, value]
    pub comult: Vec<[u64; 4]>,
    pub unit: Vec<u64>,
    pub counit: Vec<u64>,
    /// S(basis_i) = value . basis_j as [i, j, value]
    pub antipode: Vec<[u64; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairingFile {
    pub h_sha256: String,
    pub hd_sha256: String,
    /// <delta_i, basis_j> = value as [i, j, value]
    pub entries: Vec<[u64; 3]>,
}

pub fn algebra_to_file(h: &BraidedHopf, basis: Option<Vec<String>>) -> AlgebraFile {
    let dim = h.dim();
    let names = basis.unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect::<Vec<_>>());
    let mut action = Vec::new();
    for m in h.carrier.generator_action() {
        let mut rows = Vec::new();
        for r in 0..dim {
            for c in 0..dim {
                if m[(r, c)] != 0 {
                    rows.push([r as u64, c as u64, m[(r, c)]]);
                }
            }
        }
        action.push(rows);
    }
    let mut mult = Vec::new();
    for (col, entries) in h.mult.columns().iter().enumerate() {
        let (i, j) = (col / dim, col % dim);
        for &(k, v) in entries {
            mult.push([i as u64, j as u64, k as u64, v]);
        }
    }
    let mut comult = Vec::new();
    for (i, entries) in h.comult.columns().iter().enumerate() {
        for &(jk, v) in entries {
            comult.push([i as u64, (jk / dim) as u64, (jk % dim) as u64, v]);
        }
    }
    let unit = (0..dim).map(|i| h.unit.entry(i, 0)).collect();
    let counit = (0..dim).map(|i| h.counit.entry(0, i)).collect();
    let mut antipode = Vec::new();
    for (i, entries) in h.antipode.columns().iter().enumerate() {
        for &(j, v) in entries {
            antipode.push([i as u64, j as u64, v]);
        }
    }
    AlgebraFile {
        field: FieldSection {
            p: h.ctx().field.modulus(),
        },
        group: GroupSection {
            orders: h.ctx().group.orders().to_vec(),
        },
        object: ObjectSection {
            name: h.carrier.name().to_string(),
            basis: names,
            degrees: h.carrier.degrees().to_vec(),
            action,
        },
        structure: StructureSection {
            mult,
            comult,
            unit,
            counit,
            antipode,
        },
    }
}

/// Reconstructs the structure maps without verifying any axiom; the check
/// commands verify and report. Index bounds and scalar ranges are validated
/// here (malformed data is invalid input, not a failed theorem).
pub fn file_to_hopf(file: &AlgebraFile) -> Result<BraidedHopf> {
    let field = Field::new(file.field.p)?;
    let group = Group::new(file.group.orders.clone())?;
    let ctx = Context::new(field, group);
    let dim = file.object.basis.len();
    if file.object.degrees.len() != dim {
        return Err(Error::InvalidInput(format!(
            "{} degrees for {} basis vectors",
            file.object.degrees.len(),
            dim
        )));
    }
    let p = field.modulus();
    let bound = |v: u64, what: &str| -> Result<u64> {
        if v >= p {
            Err(Error::InvalidInput(format!(
                "{what}: scalar {v} outside [0, {p})"
            )))
        } else {
            Ok(v)
        }
    };
    let idx = |v: u64, what: &str| -> Result<usize> {
        if (v as usize) < dim {
            Ok(v as usize)
        } else {
            Err(Error::InvalidInput(format!(
                "{what}: index {v} outside basis of size {dim}"
            )))
        }
    };
    if file.object.action.len() != ctx.group.rank() {
        return Err(Error::InvalidInput(format!(
            "{} action matrices for a rank-{} group",
            file.object.action.len(),
            ctx.group.rank()
        )));
    }
    let mut action = Vec::new();
    for rows in &file.object.action {
        let mut m = FpMat::zeros(dim, dim);
        for &[r, c, v] in rows {
            m[(idx(r, "action")?, idx(c, "action")?)] = bound(v, "action")?;
        }
        action.push(m);
    }
    let carrier = YdObject::build_unchecked(
        ctx.clone(),
        file.object.name.clone(),
        file.object.degrees.to_vec(),
        action,
    );
    for d in file.object.degrees.iter() {
        if !ctx.group.contains(d) {
            return Err(Error::InvalidInput(format!(
                "degree {d:?} outside the group"
            )));
        }
    }
    let w = TensorWord::single(&carrier);
    let ww = w.concat(&w)?;
    let iw = TensorWord::unit(&ctx);

    let mut mult_cols = vec![Vec::new(); dim * dim];
    for &[i, j, k, v] in &file.structure.mult {
        mult_cols[idx(i, "mult")? * dim + idx(j, "mult")?]
            .push((idx(k, "mult")?, bound(v, "mult")?));
    }
    let mult = LinearMorphism::from_cols(ww.clone(), w.clone(), mult_cols);

    let mut comult_cols = vec![Vec::new(); dim];
    for &[i, j, k, v] in &file.structure.comult {
        comult_cols[idx(i, "comult")?].push((
            idx(j, "comult")? * dim + idx(k, "comult")?,
            bound(v, "comult")?,
        ));
    }
    let comult = LinearMorphism::from_cols(w.clone(), ww, comult_cols);

    if file.structure.unit.len() != dim || file.structure.counit.len() != dim {
        return Err(Error::InvalidInput("unit/counit vector length".into()));
    }
    let unit_vec = file.structure.unit.clone();
    let unit = LinearMorphism::from_fn(iw.clone(), w.clone(), |_| {
        unit_vec
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != 0)
            .map(|(i, &v)| (i, v))
            .collect()
    });
    let counit_vec = file.structure.counit.clone();
    let counit = LinearMorphism::from_fn(w.clone(), iw, |i| {
        if counit_vec[i] != 0 {
            vec![(0, counit_vec[i])]
        } else {
            vec![]
        }
    });

    let mut s_cols = vec![Vec::new(); dim];
    for &[i, j, v] in &file.structure.antipode {
        s_cols[idx(i, "antipode")?].push((idx(j, "antipode")?, bound(v, "antipode")?));
    }
    let antipode = LinearMorphism::from_cols(w.clone(), w.clone(), s_cols);
    let antipode_inv = match antipode.to_dense().inverse(&field) {
        Ok(inv) => LinearMorphism::from_dense(w.clone(), w, &inv),
        // reported by the axiom checks, not a parse failure
        Err(_) => LinearMorphism::zero(w.clone(), w),
    };

    Ok(BraidedHopf {
        carrier,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inv,
    })
}

pub fn pairing_to_file(h_digest: &str, hd_digest: &str, pairing: &Pairing) -> PairingFile {
    let hd_dim = pairing.form.domain().factors()[0].dim();
    let h_dim = pairing.form.domain().factors()[1].dim();
    let mut entries = Vec::new();
    for i in 0..hd_dim {
        for j in 0..h_dim {
            let v = pairing.entry(i, j);
            if v != 0 {
                entries.push([i as u64, j as u64, v]);
            }
        }
    }
    PairingFile {
        h_sha256: h_digest.to_string(),
        hd_sha256: hd_digest.to_string(),
        entries,
    }
}

pub fn file_to_pairing(file: &PairingFile, h: &BraidedHopf, hd: &BraidedHopf) -> Result<Pairing> {
    let (h_dim, hd_dim) = (h.dim(), hd.dim());
    let dom = hd.word().concat(&h.word())?;
    let mut entries = vec![0u64; hd_dim * h_dim];
    for &[i, j, v] in &file.entries {
        if i as usize >= hd_dim || j as usize >= h_dim {
            return Err(Error::InvalidInput("pairing index out of range".into()));
        }
        entries[(i as usize) * h_dim + j as usize] = v;
    }
    let form = LinearMorphism::from_fn(dom, TensorWord::unit(h.ctx()), |col| {
        if entries[col] != 0 {
            vec![(0, entries[col])]
        } else {
            vec![]
        }
    });
    Ok(Pairing { form })
}

/// Digest of the canonical serialization (not the raw file bytes, so
/// formatting does not matter).
pub fn digest(file: &AlgebraFile) -> String {
    let bytes = serde_json::to_vec(file).expect("serializable");
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let bytes = serde_json::to_vec_pretty(value)?;
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, &bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_algebra(path: &Path) -> Result<AlgebraFile> {
    let bytes = std::fs::read(path)?;
    Ok(serde_json::from_slice(&bytes)?)
}

pub fn read_pairing(path: &Path) -> Result<PairingFile> {
    let bytes = std::fs::read(path)?;
    Ok(serde_json::from_slice(&bytes)?)
}

/// Environment file for expression evaluation: named algebra files plus
/// generator bindings of the form "H.mult", "H.comult", "H.counit",
/// "H.unit", "H.antipode". Objects are bound under the algebra names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnvFile {
    pub algebras: std::collections::BTreeMap<String, String>,
    pub generators: std::collections::BTreeMap<String, String>,
}

pub fn load_env(path: &Path) -> Result<crate::expr::GeneratorEnv> {
    let bytes = std::fs::read(path)?;
    let manifest: EnvFile = serde_json::from_slice(&bytes)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut env = crate::expr::GeneratorEnv::new();
    let mut hopfs = std::collections::BTreeMap::new();
    for (name, rel) in &manifest.algebras {
        let file = read_algebra(&base.join(rel))?;
        let hopf = file_to_hopf(&file)?;
        env.bind_object(name.clone(), hopf.carrier.clone());
        hopfs.insert(name.clone(), hopf);
    }
    for (gen, target) in &manifest.generators {
        let (alg, map) = target.split_once('.').ok_or_else(|| {
            Error::InvalidInput(format!("generator target `{target}` is not ALG.MAP"))
        })?;
        let hopf = hopfs
            .get(alg)
            .ok_or_else(|| Error::UnboundGenerator(alg.to_string()))?;
        let m = match map {
            "mult" => hopf.mult.clone(),
            "comult" => hopf.comult.clone(),
            "unit" => hopf.unit.clone(),
            "counit" => hopf.counit.clone(),
            "antipode" => hopf.antipode.clone(),
            "antipode_inv" => hopf.antipode_inv.clone(),
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown structure map `{other}`"
                )))
            }
        };
        env.bind(gen.clone(), m);
    }
    Ok(env)
}
