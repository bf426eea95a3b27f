//! Binary little-endian PLY with per-vertex `uchar` RGB.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use colorspace::Rgb;

use crate::error::{RenderError, Result};
use crate::mesh::Mesh;

/// Mesh read back from a PLY file. Positions are single precision as stored.
#[derive(Debug, Clone, PartialEq)]
pub struct PlyMesh {
    pub positions: Vec<[f32; 3]>,
    pub colors: Vec<[u8; 3]>,
    pub triangles: Vec<[u32; 3]>,
}

/// Header followed by `x y z` as `float` and `red green blue` as `uchar` per
/// vertex, then one `uchar`-counted `int` index list per face.
pub fn write_ply(mesh: &Mesh, w: &mut impl Write) -> Result<()> {
    write!(
        w,
        "ply\nformat binary_little_endian 1.0\ncomment beads bead mesh\n\
         element vertex {}\nproperty float x\nproperty float y\nproperty float z\n\
         property uchar red\nproperty uchar green\nproperty uchar blue\n\
         element face {}\nproperty list uchar int vertex_indices\nend_header\n",
        mesh.positions.len(),
        mesh.triangles.len()
    )?;
    for (p, c) in mesh.positions.iter().zip(mesh.colors_u8()) {
        for x in p {
            w.write_all(&(*x as f32).to_le_bytes())?;
        }
        w.write_all(&c)?;
    }
    for t in &mesh.triangles {
        w.write_all(&[3u8])?;
        for &i in t {
            w.write_all(&(i as i32).to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn export_ply(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_ply(mesh, &mut w)?;
    w.flush()?;
    Ok(())
}

fn bad(msg: impl Into<String>) -> RenderError {
    RenderError::Ply(msg.into())
}

fn parse_count(line: &str, element: &str) -> Option<usize> {
    let rest = line.strip_prefix("element ")?.strip_prefix(element)?;
    rest.trim().parse().ok()
}

/// Read a file in exactly the layout [`write_ply`] produces.
pub fn read_ply(r: &mut impl Read) -> Result<PlyMesh> {
    let mut r = BufReader::new(r);
    let mut line = String::new();
    let mut vertices = None;
    let mut faces = None;
    let mut first = true;
    loop {
        line.clear();
        if r.read_line(&mut line)? == 0 {
            return Err(bad("missing end_header"));
        }
        let l = line.trim_end();
        if first {
            if l != "ply" {
                return Err(bad("not a PLY file"));
            }
            first = false;
            continue;
        }
        if l.starts_with("format") && l != "format binary_little_endian 1.0" {
            return Err(bad(format!("unsupported {l}")));
        }
        if let Some(n) = parse_count(l, "vertex") {
            vertices = Some(n);
        }
        if let Some(n) = parse_count(l, "face") {
            faces = Some(n);
        }
        if l == "end_header" {
            break;
        }
    }
    let (nv, nf) = (
        vertices.ok_or_else(|| bad("no vertex element"))?,
        faces.ok_or_else(|| bad("no face element"))?,
    );
    let mut positions = Vec::with_capacity(nv);
    let mut colors = Vec::with_capacity(nv);
    let mut buf4 = [0u8; 4];
    for _ in 0..nv {
        let mut p = [0f32; 3];
        for x in &mut p {
            r.read_exact(&mut buf4)?;
            *x = f32::from_le_bytes(buf4);
        }
        let mut c = [0u8; 3];
        r.read_exact(&mut c)?;
        positions.push(p);
        colors.push(c);
    }
    let mut triangles = Vec::with_capacity(nf);
    for _ in 0..nf {
        let mut count = [0u8; 1];
        r.read_exact(&mut count)?;
        if count[0] != 3 {
            return Err(bad(format!("face with {} vertices", count[0])));
        }
        let mut t = [0u32; 3];
        for i in &mut t {
            r.read_exact(&mut buf4)?;
            let v = i32::from_le_bytes(buf4);
            if v < 0 || v as usize >= nv {
                return Err(bad(format!("vertex index {v} out of range")));
            }
            *i = v as u32;
        }
        triangles.push(t);
    }
    Ok(PlyMesh {
        positions,
        colors,
        triangles,
    })
}

pub fn import_ply(path: impl AsRef<Path>) -> Result<PlyMesh> {
    read_ply(&mut File::open(path)?)
}

impl PlyMesh {
    pub fn rgb(&self) -> Vec<Rgb> {
        self.colors.iter().map(|&c| Rgb::from_u8(c)).collect()
    }
}
