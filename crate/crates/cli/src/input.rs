use std::path::{Path, PathBuf};

use ipsig_core::complex::{parse_complex_file, ComplexFile};
use ipsig_core::perversity::{parse_perversity_file, ClassicalName, Perversity};
use ipsig_core::pseudomanifold::{skeletal_stratification, Orientation, Stratification};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::report::{Failure, InputDigest};

/// `path`, or `path.json` when only that exists.
pub fn resolve(path: &Path) -> PathBuf {
    if !path.exists() {
        let with = path.with_extension("json");
        if path.extension().is_none() && with.exists() {
            return with;
        }
    }
    path.to_path_buf()
}

pub fn read(path: &Path) -> Result<(String, InputDigest), Failure> {
    let p = resolve(path);
    let bytes = std::fs::read(&p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
    let digest = InputDigest {
        path: p.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    let text = String::from_utf8(bytes).map_err(|_| Failure::Io(format!("{}: not UTF-8", p.display())))?;
    Ok((text, digest))
}

/// Parses a complex file; a separate stratification file replaces the
/// file's own block before parsing, so its vertex ids are read the same way.
pub fn load(path: &Path, strat_path: Option<&Path>, digests: &mut Vec<InputDigest>) -> Result<ComplexFile, Failure> {
    let (text, d) = read(path)?;
    digests.push(d);
    let Some(sp) = strat_path else {
        return Ok(parse_complex_file(&text)?);
    };
    let (stext, sd) = read(sp)?;
    digests.push(sd);
    let bad = |e: serde_json::Error| Failure::Core(ipsig_core::Error::ParseError(e.to_string()));
    let mut doc: Value = serde_json::from_str(&text).map_err(bad)?;
    let sdoc: Value = serde_json::from_str(&stext).map_err(bad)?;
    let levels = match sdoc {
        Value::Object(mut m) => m.remove("stratification").ok_or_else(|| {
            Failure::Core(ipsig_core::Error::ParseError("stratification file has no `stratification` field".into()))
        })?,
        other => other,
    };
    if let Value::Object(m) = &mut doc {
        m.insert("stratification".into(), levels);
    }
    Ok(parse_complex_file(&doc.to_string())?)
}

pub fn stratification(f: &ComplexFile) -> Result<Stratification, Failure> {
    Ok(skeletal_stratification(&f.complex, f.stratification.as_deref())?)
}

pub fn orientation(f: &ComplexFile) -> Result<Option<Orientation>, Failure> {
    match &f.orientation {
        Some(signs) => Ok(Some(Orientation::from_facet_signs(&f.complex, signs)?)),
        None => Ok(None),
    }
}

pub fn perversity(spec: &str, digests: &mut Vec<InputDigest>) -> Result<Perversity, Failure> {
    if let Some(p) = spec.strip_prefix("file:") {
        let (text, d) = read(Path::new(p))?;
        digests.push(d);
        return Ok(parse_perversity_file(&text)?);
    }
    let name: ClassicalName = spec.parse().map_err(Failure::Core)?;
    Ok(Perversity::classical(name))
}
