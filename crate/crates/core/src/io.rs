//! Volume file formats.
//!
//! Text: a `dims X Y Z` header, then `Z` slices in increasing `z`, each `Y`
//! lines of `X` `0`/`1` characters in increasing `y`, slices separated by one
//! blank line.
//!
//! Binary: `BV3D`, version byte `0x01`, three little-endian `u32` dims, then
//! one byte per voxel (`0x00`/`0x01`), `x` fastest, then `y`, then `z`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::volume::{BinaryVolume, Dims};

pub const MAGIC: &[u8; 4] = b"BV3D";
pub const VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Binary,
}

/// Binary when the data starts with the magic bytes, text otherwise.
pub fn sniff(data: &[u8]) -> Format {
    if data.starts_with(MAGIC) {
        Format::Binary
    } else {
        Format::Text
    }
}

pub fn to_text(vol: &BinaryVolume) -> String {
    let d = vol.dims();
    let mut s = String::with_capacity(d.len() + d.y * d.z + 32);
    s.push_str(&format!("dims {} {} {}\n", d.x, d.y, d.z));
    let v = vol.voxels();
    for z in 0..d.z {
        if z > 0 {
            s.push('\n');
        }
        for y in 0..d.y {
            let row = (z * d.y + y) * d.x;
            s.extend(v[row..row + d.x].iter().map(|&b| if b { '1' } else { '0' }));
            s.push('\n');
        }
    }
    s
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn from_text(text: &str) -> Result<BinaryVolume> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let nums: Vec<&str> = header.split(' ').collect();
    if nums.len() != 4 || nums[0] != "dims" {
        return Err(parse_err(1, "expected `dims X Y Z`"));
    }
    let n = |s: &str| s.parse::<usize>().map_err(|_| parse_err(1, format!("bad dimension `{s}`")));
    let dims = Dims::new(n(nums[1])?, n(nums[2])?, n(nums[3])?)?;
    let mut voxels = Vec::with_capacity(dims.len());
    for z in 0..dims.z {
        if z > 0 {
            match lines.next() {
                Some((_, "")) => {}
                Some((i, _)) => return Err(parse_err(i, "expected a blank line between slices")),
                None => return Err(parse_err(0, "unexpected end of input")),
            }
        }
        for _ in 0..dims.y {
            let (i, row) = lines.next().ok_or_else(|| parse_err(0, "unexpected end of input"))?;
            if row.len() != dims.x {
                return Err(parse_err(i, format!("expected {} characters, found {}", dims.x, row.len())));
            }
            for ch in row.chars() {
                voxels.push(match ch {
                    '0' => false,
                    '1' => true,
                    c => return Err(parse_err(i, format!("unexpected character {c:?}"))),
                });
            }
        }
    }
    // Only the final newline may follow.
    match (lines.next(), lines.next()) {
        (Some((_, "")), None) | (None, None) => {}
        (Some((i, _)), _) | (None, Some((i, _))) => {
            return Err(parse_err(i, "trailing data after the last slice"))
        }
    }
    BinaryVolume::from_voxels(dims, voxels)
}

pub fn to_binary(vol: &BinaryVolume) -> Vec<u8> {
    let d = vol.dims();
    let mut out = Vec::with_capacity(HEADER_LEN + d.len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    for n in [d.x, d.y, d.z] {
        out.extend_from_slice(&(n as u32).to_le_bytes());
    }
    out.extend(vol.voxels().iter().map(|&b| b as u8));
    out
}

pub fn from_binary(data: &[u8]) -> Result<BinaryVolume> {
    if data.len() < HEADER_LEN || !data.starts_with(MAGIC) {
        return Err(Error::Binary("missing BV3D header".into()));
    }
    if data[4] != VERSION {
        return Err(Error::Binary(format!("unsupported version {}", data[4])));
    }
    let dim = |i: usize| u32::from_le_bytes(data[5 + 4 * i..9 + 4 * i].try_into().unwrap()) as usize;
    let dims = Dims::new(dim(0), dim(1), dim(2))?;
    let payload = &data[HEADER_LEN..];
    if payload.len() != dims.len() {
        return Err(Error::Binary(format!(
            "expected {} voxel bytes, found {}",
            dims.len(),
            payload.len()
        )));
    }
    let voxels = payload
        .iter()
        .enumerate()
        .map(|(i, &b)| match b {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::Binary(format!("byte {b:#04x} at voxel {i}"))),
        })
        .collect::<Result<Vec<bool>>>()?;
    BinaryVolume::from_voxels(dims, voxels)
}

/// Parses either format, chosen by [`sniff`].
pub fn decode(data: &[u8]) -> Result<(BinaryVolume, Format)> {
    match sniff(data) {
        Format::Binary => Ok((from_binary(data)?, Format::Binary)),
        Format::Text => {
            let text = std::str::from_utf8(data).map_err(|_| parse_err(0, "input is not UTF-8"))?;
            Ok((from_text(text)?, Format::Text))
        }
    }
}

pub fn encode(vol: &BinaryVolume, format: Format) -> Vec<u8> {
    match format {
        Format::Text => to_text(vol).into_bytes(),
        Format::Binary => to_binary(vol),
    }
}

pub fn read_volume(path: impl AsRef<Path>) -> Result<(BinaryVolume, Format)> {
    decode(&fs::read(path)?)
}

pub fn write_volume(path: impl AsRef<Path>, vol: &BinaryVolume, format: Format) -> Result<()> {
    fs::write(path, encode(vol, format))?;
    Ok(())
}
