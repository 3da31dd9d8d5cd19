//! Minimal writer/reader for the `.npy` array format (little-endian f64,
//! C order). Used to export heatmap grids and channel stacks in a portable
//! float layout with a shape header.

use std::io::{Read, Write};
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NpyError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("not an npy file")]
    BadMagic,
    #[error("unsupported npy header: {0}")]
    UnsupportedHeader(String),
}

const MAGIC: &[u8; 6] = b"\x93NUMPY";

/// Write a C-order f64 array with the given shape.
pub fn write_f64(path: impl AsRef<Path>, shape: &[usize], data: &[f64]) -> Result<(), NpyError> {
    assert_eq!(
        shape.iter().product::<usize>(),
        data.len(),
        "shape does not match data length"
    );
    let dims = shape
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let shape_str = if shape.len() == 1 {
        format!("({dims},)")
    } else {
        format!("({dims})")
    };
    let mut header = format!("{{'descr': '<f8', 'fortran_order': False, 'shape': {shape_str}, }}");
    // pad so that magic(6) + version(2) + len(2) + header is 64-byte aligned
    let unpadded = MAGIC.len() + 2 + 2 + header.len() + 1;
    let pad = (64 - unpadded % 64) % 64;
    header.push_str(&" ".repeat(pad));
    header.push('\n');

    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    file.write_all(MAGIC)?;
    file.write_all(&[1, 0])?;
    file.write_all(&(header.len() as u16).to_le_bytes())?;
    file.write_all(header.as_bytes())?;
    for v in data {
        file.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

/// Read back an f64 array written by [`write_f64`]. Returns (shape, data).
pub fn read_f64(path: impl AsRef<Path>) -> Result<(Vec<usize>, Vec<f64>), NpyError> {
    let mut file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut magic = [0u8; 6];
    file.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(NpyError::BadMagic);
    }
    let mut version = [0u8; 2];
    file.read_exact(&mut version)?;
    let mut len = [0u8; 2];
    file.read_exact(&mut len)?;
    let mut header = vec![0u8; u16::from_le_bytes(len) as usize];
    file.read_exact(&mut header)?;
    let header = String::from_utf8_lossy(&header).into_owned();
    if !header.contains("'<f8'") || header.contains("True") {
        return Err(NpyError::UnsupportedHeader(header));
    }
    let open = header
        .find('(')
        .ok_or_else(|| NpyError::UnsupportedHeader(header.clone()))?;
    let close = header[open..]
        .find(')')
        .ok_or_else(|| NpyError::UnsupportedHeader(header.clone()))?
        + open;
    let shape: Vec<usize> = header[open + 1..close]
        .split(',')
        .filter_map(|s| s.trim().parse().ok())
        .collect();
    let count: usize = shape.iter().product();
    let mut data = Vec::with_capacity(count);
    let mut buf = [0u8; 8];
    for _ in 0..count {
        file.read_exact(&mut buf)?;
        data.push(f64::from_le_bytes(buf));
    }
    Ok((shape, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("grid.npy");
        let data: Vec<f64> = (0..12).map(|i| i as f64 * 0.5).collect();
        write_f64(&path, &[3, 4], &data).unwrap();
        let (shape, back) = read_f64(&path).unwrap();
        assert_eq!(shape, vec![3, 4]);
        assert_eq!(back, data);
    }

    #[test]
    fn one_dimensional_shape() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vec.npy");
        write_f64(&path, &[5], &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let (shape, back) = read_f64(&path).unwrap();
        assert_eq!(shape, vec![5]);
        assert_eq!(back.len(), 5);
    }
}
