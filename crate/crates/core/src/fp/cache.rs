//! Binary coset-table cache: `CTB1`, little-endian `u32` generator count and
//! coset count, the row-major table, then the 32-byte presentation hash.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::enumerate::CosetTable;
use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"CTB1";

pub fn encode_table(t: &CosetTable, hash: &[u8; 32]) -> Vec<u8> {
    let mut out = Vec::with_capacity(12 + 4 * t.data().len() + 32);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(t.num_gens() as u32).to_le_bytes());
    out.extend_from_slice(&(t.index() as u32).to_le_bytes());
    for &x in t.data() {
        out.extend_from_slice(&x.to_le_bytes());
    }
    out.extend_from_slice(hash);
    out
}

/// Decodes a cache file, returning the table and its stored hash.
pub fn decode_table(bytes: &[u8]) -> Result<(CosetTable, [u8; 32])> {
    if bytes.len() < 12 + 32 || &bytes[..4] != MAGIC {
        return Err(Error::Cache("bad magic or truncated header".into()));
    }
    let word = |k: usize| u32::from_le_bytes(bytes[k..k + 4].try_into().expect("4 bytes")) as usize;
    let ngens = word(4);
    let index = word(8);
    let cells = ngens.checked_mul(index).ok_or_else(|| Error::Cache("size overflow".into()))?;
    if bytes.len() != 12 + 4 * cells + 32 {
        return Err(Error::Cache("file length does not match header".into()));
    }
    let data = (0..cells).map(|i| word(12 + 4 * i) as u32).collect();
    let mut hash = [0u8; 32];
    hash.copy_from_slice(&bytes[12 + 4 * cells..]);
    Ok((CosetTable::from_parts(ngens, index, data)?, hash))
}

pub fn write_cache(path: &Path, t: &CosetTable, p: &Presentation, subgroup: &[Word]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&encode_table(t, &p.content_hash(subgroup)))?;
    f.sync_all()?;
    fs::rename(tmp, path)?;
    Ok(())
}

/// Loads a cached table if present, its hash matches and it revalidates.
/// Any mismatch yields `Ok(None)` so the caller recomputes.
pub fn read_cache(path: &Path, p: &Presentation, subgroup: &[Word]) -> Result<Option<CosetTable>> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let Ok((table, hash)) = decode_table(&bytes) else {
        return Ok(None);
    };
    if hash != p.content_hash(subgroup) || table.validate(p, subgroup).is_err() {
        return Ok(None);
    }
    Ok(Some(table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{parse_presentation, todd_coxeter, EnumOptions};

    #[test]
    fn round_trip_and_invalidation() {
        let p = parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^7\nrel: [x,y]^4").unwrap();
        let sub = vec![Word::gen(1)];
        let t = todd_coxeter(&p, &sub, EnumOptions::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("l32.ctb");
        write_cache(&path, &t, &p, &sub).unwrap();
        let back = read_cache(&path, &p, &sub).unwrap().unwrap();
        assert_eq!(back.data(), t.data());
        assert!(read_cache(&path, &p, &[]).unwrap().is_none());

        let mut bytes = fs::read(&path).unwrap();
        bytes[12] ^= 1;
        fs::write(&path, &bytes).unwrap();
        assert!(read_cache(&path, &p, &sub).unwrap().is_none());
        assert!(decode_table(b"XXXX").is_err());
    }
}
