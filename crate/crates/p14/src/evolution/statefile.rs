//! Versioned binary state files.
//!
//! Layout:
//!
//! ```text
//! magic   8 bytes  b"P14STATE"
//! version u32 LE   currently 1
//! hlen    u32 LE   header length in bytes
//! header  hlen bytes of JSON: class label, grid spec, s, isospin,
//!         representation
//! data    2 * count f64 LE values: (re, im) pairs in layout order
//!         (block, component, x1..xk, x4)
//! ```
//!
//! Amplitudes round-trip bit-identically.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::grid::{AxisSpec, MomentumGrid};
use crate::evolution::wavefunction::{Representation, WaveFunction};
use crate::irreps::{HalfSpin, IrrepLabel};

const MAGIC: &[u8; 8] = b"P14STATE";
const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct StateHeader {
    label: IrrepLabel,
    spatial_axes: Vec<AxisSpec>,
    mass_axis: AxisSpec,
    s: HalfSpin,
    isospin: HalfSpin,
    representation: Representation,
}

pub fn save_state(psi: &WaveFunction, label: &IrrepLabel, path: &Path) -> Result<()> {
    let (spatial_axes, mass_axis) = psi.grid().specs();
    let header = StateHeader {
        label: *label,
        spatial_axes,
        mass_axis,
        s: psi.s(),
        isospin: psi.isospin(),
        representation: psi.representation(),
    };
    let header_bytes =
        serde_json::to_vec(&header).map_err(|e| Error::StateFile(e.to_string()))?;

    let mut out = BufWriter::new(File::create(path)?);
    out.write_all(MAGIC)?;
    out.write_all(&VERSION.to_le_bytes())?;
    out.write_all(&(header_bytes.len() as u32).to_le_bytes())?;
    out.write_all(&header_bytes)?;
    for z in psi.amplitudes().iter() {
        out.write_all(&z.re.to_le_bytes())?;
        out.write_all(&z.im.to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn load_state(path: &Path) -> Result<(WaveFunction, IrrepLabel)> {
    let mut input = BufReader::new(File::open(path)?);

    let mut magic = [0u8; 8];
    input.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::StateFile("bad magic".into()));
    }
    let mut word = [0u8; 4];
    input.read_exact(&mut word)?;
    let version = u32::from_le_bytes(word);
    if version != VERSION {
        return Err(Error::StateFile(format!("unsupported version {version}")));
    }
    input.read_exact(&mut word)?;
    let header_len = u32::from_le_bytes(word) as usize;
    let mut header_bytes = vec![0u8; header_len];
    input.read_exact(&mut header_bytes)?;
    let header: StateHeader =
        serde_json::from_slice(&header_bytes).map_err(|e| Error::StateFile(e.to_string()))?;
    header.label.validate()?;

    let grid = MomentumGrid::new(&header.spatial_axes, header.mass_axis)?;
    let mut shape = vec![2, header.s.dimension() * header.isospin.dimension()];
    shape.extend(grid.shape());
    let count: usize = shape.iter().product();

    let mut data = vec![0u8; count * 16];
    input.read_exact(&mut data)?;
    let mut trailing = [0u8; 1];
    if input.read(&mut trailing)? != 0 {
        return Err(Error::StateFile("trailing bytes after amplitudes".into()));
    }

    let mut amplitudes = ArrayD::zeros(IxDyn(&shape));
    for (k, z) in amplitudes.iter_mut().enumerate() {
        let re = f64::from_le_bytes(data[16 * k..16 * k + 8].try_into().expect("8 bytes"));
        let im = f64::from_le_bytes(data[16 * k + 8..16 * k + 16].try_into().expect("8 bytes"));
        *z = Complex64::new(re, im);
    }

    let psi = WaveFunction::from_amplitudes(
        grid,
        header.s,
        header.isospin,
        header.representation,
        amplitudes,
    )?;
    Ok((psi, header.label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::grid::make_grid;

    #[test]
    fn round_trip_is_bit_identical() {
        let grid = make_grid(
            &[AxisSpec { points: 8, extent: 8.0 }],
            AxisSpec { points: 4, extent: 4.0 },
        )
        .unwrap();
        let psi = WaveFunction::random(
            grid,
            HalfSpin::HALF,
            HalfSpin::HALF,
            Representation::Momentum,
            42,
        )
        .unwrap();
        let label = IrrepLabel::class_i(1.5, HalfSpin::HALF, HalfSpin::HALF).unwrap();

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.bin");
        save_state(&psi, &label, &path).unwrap();
        let (loaded, loaded_label) = load_state(&path).unwrap();

        assert_eq!(loaded_label, label);
        assert_eq!(loaded.representation(), psi.representation());
        assert_eq!(loaded.amplitudes().shape(), psi.amplitudes().shape());
        for (a, b) in psi.amplitudes().iter().zip(loaded.amplitudes().iter()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn bad_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bogus.bin");
        std::fs::write(&path, b"not a state file at all").unwrap();
        assert!(load_state(&path).is_err());

        // truncated payload
        let grid = make_grid(
            &[AxisSpec { points: 4, extent: 4.0 }],
            AxisSpec { points: 4, extent: 4.0 },
        )
        .unwrap();
        let psi = WaveFunction::random(
            grid,
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Position,
            1,
        )
        .unwrap();
        let label = IrrepLabel::class_ii(HalfSpin::ZERO);
        let full = dir.path().join("full.bin");
        save_state(&psi, &label, &full).unwrap();
        let bytes = std::fs::read(&full).unwrap();
        let cut = dir.path().join("cut.bin");
        std::fs::write(&cut, &bytes[..bytes.len() - 8]).unwrap();
        assert!(load_state(&cut).is_err());
    }
}
