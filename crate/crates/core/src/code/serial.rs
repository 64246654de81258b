//! On-disk form of a code: `code.json` plus a row-packed generator blob.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{dual_defining_set, CodeRole, LinearCode, Provenance, COORDINATE_CONVENTION};
use crate::cyclotomic::defining_set_for;
use crate::error::{Error, Result};
use crate::gf2::{check_primitive, BitMatrix, Gf2Poly};

pub const GENERATOR_BLOB: &str = "generator.bin";

/// Contents of `code.json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub m: u32,
    #[serde(rename = "E")]
    pub e: Vec<u32>,
    pub role: CodeRole,
    pub modulus_bits: u64,
    pub length: usize,
    pub dimension: usize,
    pub convention: String,
    pub generator_blob: String,
}

impl CodeFile {
    pub fn for_code(code: &LinearCode) -> Result<Self> {
        let p = code.provenance().ok_or_else(|| {
            Error::InvalidParameters("code has no provenance to serialize".into())
        })?;
        Ok(Self {
            m: p.m,
            e: p.e.clone(),
            role: p.role,
            modulus_bits: p.modulus_bits,
            length: code.length(),
            dimension: code.dimension(),
            convention: p.convention.clone(),
            generator_blob: GENERATOR_BLOB.into(),
        })
    }
}

/// Writes `code.json` and the generator blob into `dir`; returns the json path.
pub fn save_code(code: &LinearCode, dir: &Path) -> Result<PathBuf> {
    let file = CodeFile::for_code(code)?;
    fs::create_dir_all(dir)?;
    fs::write(dir.join(&file.generator_blob), code.generator().to_bytes())?;
    let json_path = dir.join("code.json");
    fs::write(&json_path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(json_path)
}

/// Reads a code written by [`save_code`]; the blob is resolved next to the json file.
pub fn load_code(json_path: &Path) -> Result<LinearCode> {
    let file: CodeFile = serde_json::from_str(&fs::read_to_string(json_path)?)?;
    if file.convention != COORDINATE_CONVENTION {
        return Err(Error::Format(format!(
            "unsupported coordinate convention {}",
            file.convention
        )));
    }
    check_primitive(file.m, &Gf2Poly::from_bits(file.modulus_bits))?;
    let blob_path = json_path
        .parent()
        .unwrap_or(Path::new("."))
        .join(&file.generator_blob);
    let g = BitMatrix::from_bytes(file.dimension, file.length, &fs::read(blob_path)?)?;
    let code = LinearCode::from_generator(&g);
    if code.dimension() != file.dimension {
        return Err(Error::Format(format!(
            "generator has rank {}, header says {}",
            code.dimension(),
            file.dimension
        )));
    }
    let e: BTreeSet<u32> = file.e.iter().copied().collect();
    let defining_set = if e.is_empty() {
        None
    } else {
        match file.role {
            CodeRole::Cyclic => Some(defining_set_for(file.m, &e, false)?),
            CodeRole::Extended => Some(defining_set_for(file.m, &e, true)?),
            CodeRole::Dual => {
                dual_defining_set(&defining_set_for(file.m, &e, false)?, CodeRole::Cyclic)
            }
            CodeRole::ExtendedDual => {
                dual_defining_set(&defining_set_for(file.m, &e, true)?, CodeRole::Extended)
            }
            CodeRole::DualExtended | CodeRole::Derived => None,
        }
    };
    let prov = Provenance {
        m: file.m,
        e: file.e,
        role: file.role,
        modulus_bits: file.modulus_bits,
        convention: file.convention,
    };
    Ok(code.with_meta(Some(prov), defining_set))
}
