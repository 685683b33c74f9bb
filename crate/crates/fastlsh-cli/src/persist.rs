//! Versioned binary persistence for LSH indexes.
//!
//! Layout (all little-endian):
//!
//! ```text
//! magic "FLSH" | version u32 | scheme u8 | k u32 | L u32 | m u32 |
//! width f64 | density f64 | seed u64 | dim u32 | num_points u32 |
//! dataset fingerprint [u8; 32] |
//! L tables: bucket_count u64, then per bucket (keys ascending):
//!   k × i64 key components | id_count u32 | id_count × u32 ids
//! ```
//!
//! Hashers are not stored; they re-derive deterministically from
//! (scheme, k, L, m, width, density, seed, dim), so a load rebuilds an
//! index identical to the saved one and a save→load→save round trip is
//! byte-identical.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use fastlsh_core::hash::{CompositeKey, Scheme};
use fastlsh_core::index::{IndexConfig, LshIndex};

use crate::io::IoError;

const MAGIC: &[u8; 4] = b"FLSH";
const VERSION: u32 = 1;

fn scheme_tag(s: Scheme) -> u8 {
    match s {
        Scheme::FastLsh => 0,
        Scheme::E2Lsh => 1,
        Scheme::AcHash => 2,
    }
}

fn scheme_from_tag(t: u8, offset: u64) -> Result<Scheme, IoError> {
    match t {
        0 => Ok(Scheme::FastLsh),
        1 => Ok(Scheme::E2Lsh),
        2 => Ok(Scheme::AcHash),
        other => Err(IoError::Format {
            offset,
            msg: format!("unknown scheme tag {other}"),
        }),
    }
}

/// Save an index together with the fingerprint of the dataset it was
/// built over.
pub fn save_index(
    index: &LshIndex,
    fingerprint: &[u8; 32],
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_u32::<LittleEndian>(VERSION)?;
    w.write_u8(scheme_tag(index.cfg.scheme))?;
    w.write_u32::<LittleEndian>(index.cfg.k as u32)?;
    w.write_u32::<LittleEndian>(index.cfg.l as u32)?;
    w.write_u32::<LittleEndian>(index.cfg.m as u32)?;
    w.write_f64::<LittleEndian>(index.cfg.width)?;
    w.write_f64::<LittleEndian>(index.cfg.achash_density)?;
    w.write_u64::<LittleEndian>(index.cfg.seed)?;
    w.write_u32::<LittleEndian>(index.dim as u32)?;
    w.write_u32::<LittleEndian>(index.num_points)?;
    w.write_all(fingerprint)?;
    for table in index.tables() {
        let mut buckets: Vec<(&CompositeKey, &Vec<u32>)> = table.iter().collect();
        buckets.sort_by(|a, b| a.0.cmp(b.0));
        w.write_u64::<LittleEndian>(buckets.len() as u64)?;
        for (key, ids) in buckets {
            for &c in key.components() {
                w.write_i64::<LittleEndian>(c)?;
            }
            w.write_u32::<LittleEndian>(ids.len() as u32)?;
            for &id in ids {
                w.write_u32::<LittleEndian>(id)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Load an index; returns it with the stored dataset fingerprint.
pub fn load_index(path: impl AsRef<Path>) -> Result<(LshIndex, [u8; 32]), IoError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(IoError::Format {
            offset: 0,
            msg: "bad magic (not an index file)".into(),
        });
    }
    let version = r.read_u32::<LittleEndian>()?;
    if version != VERSION {
        return Err(IoError::Format {
            offset: 4,
            msg: format!("unsupported version {version}"),
        });
    }
    let scheme = scheme_from_tag(r.read_u8()?, 8)?;
    let k = r.read_u32::<LittleEndian>()? as usize;
    let l = r.read_u32::<LittleEndian>()? as usize;
    let m = r.read_u32::<LittleEndian>()? as usize;
    let width = r.read_f64::<LittleEndian>()?;
    let achash_density = r.read_f64::<LittleEndian>()?;
    let seed = r.read_u64::<LittleEndian>()?;
    let dim = r.read_u32::<LittleEndian>()? as usize;
    let num_points = r.read_u32::<LittleEndian>()?;
    let mut fingerprint = [0u8; 32];
    r.read_exact(&mut fingerprint)?;
    let cfg = IndexConfig {
        scheme,
        k,
        l,
        width,
        m,
        achash_density,
        seed,
    };
    let mut tables = Vec::with_capacity(l);
    for _ in 0..l {
        let bucket_count = r.read_u64::<LittleEndian>()? as usize;
        let mut buckets = Vec::with_capacity(bucket_count);
        for _ in 0..bucket_count {
            let mut key = vec![0i64; k];
            r.read_i64_into::<LittleEndian>(&mut key)?;
            let id_count = r.read_u32::<LittleEndian>()? as usize;
            let mut ids = vec![0u32; id_count];
            r.read_u32_into::<LittleEndian>(&mut ids)?;
            buckets.push((CompositeKey::new(key.into_boxed_slice()), ids));
        }
        tables.push(buckets);
    }
    let index = LshIndex::from_buckets(cfg, dim, num_points, tables)?;
    Ok((index, fingerprint))
}
