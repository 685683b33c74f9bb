//! fvecs/ivecs readers and writers, and dataset fingerprints.
//!
//! Both formats store one record per vector: a little-endian `u32`
//! dimension count followed by that many 4-byte payloads (`f32` for fvecs,
//! `i32`/`u32` ids for ivecs). The dimension must be identical across
//! records; truncation and inconsistency are reported with the byte offset
//! where they were detected.

use std::fs::File;
use std::io::{BufReader, BufWriter, ErrorKind, Write};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use fastlsh_core::data::Dataset;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: u64, msg: String },
    #[error(transparent)]
    Core(#[from] fastlsh_core::Error),
}

fn format_err<T>(offset: u64, msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Format {
        offset,
        msg: msg.into(),
    })
}

/// Read an fvecs file into a dataset named after the file stem.
pub fn read_fvecs(path: impl AsRef<Path>) -> Result<Dataset, IoError> {
    let path = path.as_ref();
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    let mut reader = BufReader::new(File::open(path)?);
    let mut data: Vec<f32> = Vec::new();
    let mut dim: Option<usize> = None;
    let mut offset: u64 = 0;
    loop {
        let d = match reader.read_u32::<LittleEndian>() {
            Ok(d) => d as usize,
            Err(e) if e.kind() == ErrorKind::UnexpectedEof => break,
            Err(e) => return Err(e.into()),
        };
        offset += 4;
        match dim {
            None => {
                if d == 0 || d > 1 << 24 {
                    return format_err(offset - 4, format!("implausible dimension {d}"));
                }
                dim = Some(d);
            }
            Some(d0) if d0 != d => {
                return format_err(
                    offset - 4,
                    format!("inconsistent dimension: expected {d0}, found {d}"),
                );
            }
            _ => {}
        }
        let start = data.len();
        data.resize(start + d, 0.0);
        if let Err(e) = reader.read_f32_into::<LittleEndian>(&mut data[start..]) {
            if e.kind() == ErrorKind::UnexpectedEof {
                return format_err(offset, format!("truncated record of dimension {d}"));
            }
            return Err(e.into());
        }
        offset += 4 * d as u64;
    }
    let dim = match dim {
        Some(d) => d,
        None => return format_err(0, "empty file"),
    };
    Ok(Dataset::from_raw(name, dim, data)?)
}

/// Write a dataset as fvecs.
pub fn write_fvecs(dataset: &Dataset, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut w = BufWriter::new(File::create(path)?);
    for row in dataset.rows() {
        w.write_u32::<LittleEndian>(dataset.dim() as u32)?;
        for &x in row {
            w.write_f32::<LittleEndian>(x)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Read an ivecs file (e.g. ground-truth neighbor ids).
pub fn read_ivecs(path: impl AsRef<Path>) -> Result<Vec<Vec<u32>>, IoError> {
    let mut reader = BufReader::new(File::open(path.as_ref())?);
    let mut rows = Vec::new();
    let mut dim: Option<usize> = None;
    let mut offset: u64 = 0;
    loop {
        let d = match reader.read_u32::<LittleEndian>() {
            Ok(d) => d as usize,
            Err(e) if e.kind() == ErrorKind::UnexpectedEof => break,
            Err(e) => return Err(e.into()),
        };
        offset += 4;
        match dim {
            None => dim = Some(d),
            Some(d0) if d0 != d => {
                return format_err(
                    offset - 4,
                    format!("inconsistent record length: expected {d0}, found {d}"),
                );
            }
            _ => {}
        }
        let mut row = vec![0u32; d];
        if let Err(e) = reader.read_u32_into::<LittleEndian>(&mut row) {
            if e.kind() == ErrorKind::UnexpectedEof {
                return format_err(offset, format!("truncated record of length {d}"));
            }
            return Err(e.into());
        }
        offset += 4 * d as u64;
        rows.push(row);
    }
    Ok(rows)
}

/// Write id rows as ivecs.
pub fn write_ivecs(rows: &[Vec<u32>], path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut w = BufWriter::new(File::create(path)?);
    for row in rows {
        w.write_u32::<LittleEndian>(row.len() as u32)?;
        for &x in row {
            w.write_u32::<LittleEndian>(x)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// SHA-256 over the dataset's shape and raw little-endian payload.
pub fn dataset_fingerprint(dataset: &Dataset) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update((dataset.dim() as u64).to_le_bytes());
    hasher.update((dataset.len() as u64).to_le_bytes());
    for &x in dataset.raw() {
        hasher.update(x.to_le_bytes());
    }
    hasher.finalize().into()
}

pub fn fingerprint_hex(fp: &[u8; 32]) -> String {
    fp.iter().map(|b| format!("{b:02x}")).collect()
}
