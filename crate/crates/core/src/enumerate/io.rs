//! The APBM bitmap file: magic, version byte, root as four `i64`, bound as
//! `u64` (all little-endian), then `ceil(bound/8)` bytes with curvature `m`
//! at bit `(m−1) mod 8` of byte `(m−1)/8`.

use std::io::{Read, Write};

use super::{CurvatureBitmap, EnumerateError, MAX_BOUND};
use crate::packing::Quadruple;

pub const APBM_MAGIC: [u8; 4] = *b"APBM";
pub const APBM_VERSION: u8 = 1;

pub fn write_bitmap<W: Write>(bm: &CurvatureBitmap, mut w: W) -> Result<(), EnumerateError> {
    w.write_all(&APBM_MAGIC)?;
    w.write_all(&[APBM_VERSION])?;
    for x in bm.root().entries() {
        w.write_all(&x.to_le_bytes())?;
    }
    w.write_all(&bm.bound().to_le_bytes())?;
    let mut remaining = bm.bound().div_ceil(8) as usize;
    for word in bm.words() {
        let bytes = word.to_le_bytes();
        let take = remaining.min(8);
        w.write_all(&bytes[..take])?;
        remaining -= take;
    }
    w.flush()?;
    Ok(())
}

pub fn read_bitmap<R: Read>(mut r: R) -> Result<CurvatureBitmap, EnumerateError> {
    let mut magic = [0u8; 4];
    read_header(&mut r, &mut magic)?;
    if magic != APBM_MAGIC {
        return Err(EnumerateError::BadMagic);
    }
    let mut version = [0u8; 1];
    read_header(&mut r, &mut version)?;
    if version[0] != APBM_VERSION {
        return Err(EnumerateError::UnsupportedVersion(version[0]));
    }
    let mut entries = [0i64; 4];
    let mut buf = [0u8; 8];
    for x in entries.iter_mut() {
        read_header(&mut r, &mut buf)?;
        *x = i64::from_le_bytes(buf);
    }
    let root = Quadruple::new(entries)
        .map_err(|e| EnumerateError::Corrupt(format!("root {entries:?}: {e}")))?;
    read_header(&mut r, &mut buf)?;
    let bound = u64::from_le_bytes(buf);
    if bound == 0 || bound > MAX_BOUND {
        return Err(EnumerateError::Corrupt(format!(
            "bound {bound} out of range"
        )));
    }
    let nbytes = bound.div_ceil(8) as usize;
    let mut bytes = Vec::with_capacity(nbytes);
    r.by_ref().take(nbytes as u64).read_to_end(&mut bytes)?;
    if bytes.len() != nbytes {
        return Err(EnumerateError::Corrupt(format!(
            "expected {nbytes} payload bytes, found {}",
            bytes.len()
        )));
    }
    let mut extra = [0u8; 1];
    if r.read(&mut extra)? != 0 {
        return Err(EnumerateError::Corrupt("trailing bytes".into()));
    }
    let spare = (nbytes as u64 * 8 - bound) as u32;
    if spare > 0 && bytes[nbytes - 1] >> (8 - spare) != 0 {
        return Err(EnumerateError::Corrupt("bits set beyond the bound".into()));
    }
    let words = bytes
        .chunks(8)
        .map(|c| {
            let mut w = [0u8; 8];
            w[..c.len()].copy_from_slice(c);
            u64::from_le_bytes(w)
        })
        .collect();
    Ok(CurvatureBitmap::from_words(root, bound, words))
}

fn read_header<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<(), EnumerateError> {
    r.read_exact(buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => EnumerateError::Corrupt("truncated header".into()),
        _ => EnumerateError::Io(e),
    })
}
