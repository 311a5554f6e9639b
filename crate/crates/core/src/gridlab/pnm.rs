//! Binary PGM (P5) and PPM (P6) with maxval 255.

use std::fs;
use std::io;
use std::path::Path;

use crate::error::{Error, Result};

pub(crate) fn io_error(path: &Path, source: io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        source,
    }
}

fn encode(magic: &str, w: usize, h: usize, comment: Option<&str>, data: &[u8]) -> Vec<u8> {
    let mut out = format!("{magic}\n");
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str(&format!("# {line}\n"));
        }
    }
    out.push_str(&format!("{w} {h}\n255\n"));
    let mut bytes = out.into_bytes();
    bytes.extend_from_slice(data);
    bytes
}

pub fn write_pgm(path: &Path, w: usize, h: usize, gray: &[u8]) -> Result<()> {
    assert_eq!(gray.len(), w * h, "pixel count");
    fs::write(path, encode("P5", w, h, None, gray)).map_err(|e| io_error(path, e))
}

pub fn write_ppm(path: &Path, w: usize, h: usize, comment: &str, rgb: &[u8]) -> Result<()> {
    assert_eq!(rgb.len(), 3 * w * h, "pixel count");
    fs::write(path, encode("P6", w, h, Some(comment), rgb)).map_err(|e| io_error(path, e))
}

/// Decoded image: width, height, channel count and raw samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<u8>,
}

pub fn read(path: &Path) -> Result<Image> {
    let bytes = fs::read(path).map_err(|e| io_error(path, e))?;
    decode(&bytes).map_err(|msg| io_error(path, io::Error::new(io::ErrorKind::InvalidData, msg)))
}

pub fn decode(bytes: &[u8]) -> std::result::Result<Image, String> {
    let mut pos = 0;
    let mut fields = Vec::with_capacity(4);
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err("truncated header".into());
        }
        fields.push(String::from_utf8_lossy(&bytes[start..pos]).into_owned());
    }
    // Exactly one whitespace byte separates the header from the samples.
    pos += 1;
    let channels = match fields[0].as_str() {
        "P5" => 1,
        "P6" => 3,
        other => return Err(format!("unsupported magic {other}")),
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("bad header field {s}"));
    let (width, height, maxval) = (num(&fields[1])?, num(&fields[2])?, num(&fields[3])?);
    if maxval != 255 {
        return Err(format!("unsupported maxval {maxval}"));
    }
    let len = width * height * channels;
    let data = bytes
        .get(pos..pos + len)
        .ok_or_else(|| "truncated pixel data".to_string())?
        .to_vec();
    Ok(Image {
        width,
        height,
        channels,
        data,
    })
}
