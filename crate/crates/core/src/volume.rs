//! Dense binary volumes, lattice points, adjacency and direction names.
//!
//! Axes: `x` grows east, `y` grows north, `z` grows up. Every point outside
//! the stored box reads as background, so a volume behaves like a finite
//! object embedded in an otherwise empty lattice.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A lattice point, or an offset between two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { x: 0, y: 0, z: 0 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Point3 { x, y, z }
    }

    /// Squared Euclidean length.
    pub fn norm2(self) -> i64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

impl From<(i64, i64, i64)> for Point3 {
    fn from((x, y, z): (i64, i64, i64)) -> Self {
        Point3::new(x, y, z)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `(px-qx)^2 + (py-qy)^2 + (pz-qz)^2`, kept in integers.
pub fn squared_distance(p: Point3, q: Point3) -> i64 {
    (p - q).norm2()
}

/// One of the three lattice adjacencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjacency {
    Six,
    Eighteen,
    TwentySix,
}

impl Adjacency {
    /// Largest squared distance at which two distinct points are adjacent.
    pub fn max_norm2(self) -> i64 {
        match self {
            Adjacency::Six => 1,
            Adjacency::Eighteen => 2,
            Adjacency::TwentySix => 3,
        }
    }

    pub fn k(self) -> u32 {
        match self {
            Adjacency::Six => 6,
            Adjacency::Eighteen => 18,
            Adjacency::TwentySix => 26,
        }
    }

    /// Offsets of the k-neighbourhood, in a fixed (z, y, x ascending) order.
    pub fn offsets(self) -> &'static [Point3] {
        match self {
            Adjacency::Six => &N6,
            Adjacency::Eighteen => &N18,
            Adjacency::TwentySix => &N26,
        }
    }

    pub fn adjacent(self, p: Point3, q: Point3) -> bool {
        let d = squared_distance(p, q);
        d > 0 && d <= self.max_norm2()
    }
}

impl TryFrom<u32> for Adjacency {
    type Error = Error;
    fn try_from(k: u32) -> Result<Self> {
        match k {
            6 => Ok(Adjacency::Six),
            18 => Ok(Adjacency::Eighteen),
            26 => Ok(Adjacency::TwentySix),
            other => Err(Error::InvalidAdjacency(other)),
        }
    }
}

impl FromStr for Adjacency {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k: u32 = s.trim().parse().map_err(|_| Error::InvalidAdjacency(0))?;
        Adjacency::try_from(k)
    }
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k())
    }
}

const fn offsets_within<const N: usize>(max: i64) -> [Point3; N] {
    let mut out = [Point3::ORIGIN; N];
    let mut i = 0;
    let mut z = -1;
    while z <= 1 {
        let mut y = -1;
        while y <= 1 {
            let mut x = -1;
            while x <= 1 {
                let n = x * x + y * y + z * z;
                if n > 0 && n <= max {
                    out[i] = Point3::new(x, y, z);
                    i += 1;
                }
                x += 1;
            }
            y += 1;
        }
        z += 1;
    }
    out
}

static N6: [Point3; 6] = offsets_within::<6>(1);
static N18: [Point3; 18] = offsets_within::<18>(2);
static N26: [Point3; 26] = offsets_within::<26>(3);

/// Points k-adjacent to `p`. Adjacency is geometric: nothing is clipped.
pub fn neighbors(p: Point3, k: Adjacency) -> Vec<Point3> {
    k.offsets().iter().map(|&o| p + o).collect()
}

/// Named directions of the 18-neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    E,
    W,
    N,
    S,
    U,
    D,
    NU,
    ND,
    NE,
    NW,
    SU,
    SD,
    SE,
    SW,
    WU,
    WD,
    EU,
    ED,
}

impl Direction {
    pub const AXES: [Direction; 6] = [
        Direction::E,
        Direction::W,
        Direction::N,
        Direction::S,
        Direction::U,
        Direction::D,
    ];

    pub const ALL: [Direction; 18] = [
        Direction::E,
        Direction::W,
        Direction::N,
        Direction::S,
        Direction::U,
        Direction::D,
        Direction::NU,
        Direction::ND,
        Direction::NE,
        Direction::NW,
        Direction::SU,
        Direction::SD,
        Direction::SE,
        Direction::SW,
        Direction::WU,
        Direction::WD,
        Direction::EU,
        Direction::ED,
    ];

    pub fn offset(self) -> Point3 {
        use Direction::*;
        let (x, y, z) = match self {
            E => (1, 0, 0),
            W => (-1, 0, 0),
            N => (0, 1, 0),
            S => (0, -1, 0),
            U => (0, 0, 1),
            D => (0, 0, -1),
            NU => (0, 1, 1),
            ND => (0, 1, -1),
            NE => (1, 1, 0),
            NW => (-1, 1, 0),
            SU => (0, -1, 1),
            SD => (0, -1, -1),
            SE => (1, -1, 0),
            SW => (-1, -1, 0),
            WU => (-1, 0, 1),
            WD => (-1, 0, -1),
            EU => (1, 0, 1),
            ED => (1, 0, -1),
        };
        Point3::new(x, y, z)
    }

    pub fn opposite(self) -> Direction {
        let o = -self.offset();
        *Direction::ALL
            .iter()
            .find(|d| d.offset() == o)
            .expect("direction set is closed under negation")
    }

    pub fn of(self, p: Point3) -> Point3 {
        p + self.offset()
    }

    pub fn name(self) -> &'static str {
        use Direction::*;
        match self {
            E => "e",
            W => "w",
            N => "n",
            S => "s",
            U => "u",
            D => "d",
            NU => "nu",
            ND => "nd",
            NE => "ne",
            NW => "nw",
            SU => "su",
            SD => "sd",
            SE => "se",
            SW => "sw",
            WU => "wu",
            WD => "wd",
            EU => "eu",
            ED => "ed",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dimensions of a volume, all positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Dims {
    pub fn new(x: usize, y: usize, z: usize) -> Result<Self> {
        if x == 0 || y == 0 || z == 0 {
            return Err(Error::InvalidDims(x, y, z));
        }
        Ok(Dims { x, y, z })
    }

    pub fn len(self) -> usize {
        self.x * self.y * self.z
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn contains(self, p: Point3) -> bool {
        p.x >= 0
            && p.y >= 0
            && p.z >= 0
            && (p.x as usize) < self.x
            && (p.y as usize) < self.y
            && (p.z as usize) < self.z
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.x, self.y, self.z)
    }
}

/// A dense binary image. One byte per voxel, x varying fastest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVolume {
    dims: Dims,
    voxels: Vec<bool>,
}

impl BinaryVolume {
    /// All-background volume.
    pub fn new(dims: Dims) -> Self {
        BinaryVolume { dims, voxels: vec![false; dims.len()] }
    }

    pub fn from_voxels(dims: Dims, voxels: Vec<bool>) -> Result<Self> {
        if voxels.len() != dims.len() {
            return Err(Error::VoxelCount { expected: dims.len(), found: voxels.len() });
        }
        Ok(BinaryVolume { dims, voxels })
    }

    /// Smallest volume holding `points` with `pad` background voxels on every side;
    /// returns the volume and the translation applied to the input points.
    pub fn from_points(points: &[Point3], pad: usize) -> (Self, Point3) {
        if points.is_empty() {
            let side = 2 * pad + 1;
            let dims = Dims { x: side, y: side, z: side };
            return (BinaryVolume::new(dims), Point3::ORIGIN);
        }
        let pad = pad as i64;
        let min = points.iter().fold(points[0], |m, p| {
            Point3::new(m.x.min(p.x), m.y.min(p.y), m.z.min(p.z))
        });
        let max = points.iter().fold(points[0], |m, p| {
            Point3::new(m.x.max(p.x), m.y.max(p.y), m.z.max(p.z))
        });
        let shift = Point3::new(pad - min.x, pad - min.y, pad - min.z);
        let dims = Dims {
            x: (max.x - min.x + 1 + 2 * pad) as usize,
            y: (max.y - min.y + 1 + 2 * pad) as usize,
            z: (max.z - min.z + 1 + 2 * pad) as usize,
        };
        let mut vol = BinaryVolume::new(dims);
        for &p in points {
            let i = vol.index_unchecked(p + shift);
            vol.voxels[i] = true;
        }
        (vol, shift)
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn voxels(&self) -> &[bool] {
        &self.voxels
    }

    pub fn contains(&self, p: Point3) -> bool {
        self.dims.contains(p)
    }

    fn index_unchecked(&self, p: Point3) -> usize {
        (p.x as usize) + self.dims.x * ((p.y as usize) + self.dims.y * (p.z as usize))
    }

    pub fn index(&self, p: Point3) -> Option<usize> {
        self.contains(p).then(|| self.index_unchecked(p))
    }

    pub fn point(&self, index: usize) -> Point3 {
        let x = index % self.dims.x;
        let y = (index / self.dims.x) % self.dims.y;
        let z = index / (self.dims.x * self.dims.y);
        Point3::new(x as i64, y as i64, z as i64)
    }

    /// Object test; anything outside the box is background.
    #[inline]
    pub fn get(&self, p: Point3) -> bool {
        self.contains(p) && self.voxels[self.index_unchecked(p)]
    }

    pub fn set(&mut self, p: Point3, object: bool) -> Result<()> {
        let i = self.index(p).ok_or(Error::OutOfBounds(p))?;
        self.voxels[i] = object;
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.voxels.iter().filter(|&&v| v).count()
    }

    /// Object points in index order (x fastest).
    pub fn object_points(&self) -> impl Iterator<Item = Point3> + '_ {
        self.voxels
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(i, _)| self.point(i))
    }

    pub(crate) fn require_object(&self, p: Point3) -> Result<()> {
        if !self.contains(p) {
            return Err(Error::OutOfBounds(p));
        }
        if !self.get(p) {
            return Err(Error::NotObject(p));
        }
        Ok(())
    }

    /// The 27 voxels of the 3x3x3 block centred on `p` as a bit mask;
    /// bit `cell_index(o)` holds the value at `p + o`.
    pub fn neighborhood_bits(&self, p: Point3) -> u32 {
        let mut bits = 0u32;
        let inside = p.x >= 1
            && p.y >= 1
            && p.z >= 1
            && (p.x as usize) + 1 < self.dims.x
            && (p.y as usize) + 1 < self.dims.y
            && (p.z as usize) + 1 < self.dims.z;
        if inside {
            let sx = 1;
            let sy = self.dims.x;
            let sz = self.dims.x * self.dims.y;
            let c = self.index_unchecked(p);
            let mut bit = 0;
            for dz in [-1isize, 0, 1] {
                for dy in [-1isize, 0, 1] {
                    let row = (c as isize + dz * sz as isize + dy * sy as isize) as usize;
                    for dx in [-1isize, 0, 1] {
                        if self.voxels[(row as isize + dx * sx as isize) as usize] {
                            bits |= 1 << bit;
                        }
                        bit += 1;
                    }
                }
            }
        } else {
            for bit in 0..27 {
                if self.get(p + cell_offset(bit)) {
                    bits |= 1 << bit;
                }
            }
        }
        bits
    }
}

impl fmt::Debug for BinaryVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryVolume")
            .field("dims", &self.dims)
            .field("objects", &self.object_count())
            .finish()
    }
}

/// Bit position of an offset in `{-1,0,1}^3` inside a neighbourhood mask.
pub const fn cell_index(o: Point3) -> usize {
    ((o.x + 1) + 3 * (o.y + 1) + 9 * (o.z + 1)) as usize
}

pub const fn cell_offset(i: usize) -> Point3 {
    let i = i as i64;
    Point3::new(i % 3 - 1, (i / 3) % 3 - 1, i / 9 - 1)
}

/// Bit of the centre voxel in a neighbourhood mask.
pub const CENTER_BIT: u32 = 1 << 13;

/// Number of object points among the k-neighbours of `p`.
pub fn count_object_neighbors(vol: &BinaryVolume, p: Point3, k: Adjacency) -> Result<usize> {
    if !vol.contains(p) {
        return Err(Error::OutOfBounds(p));
    }
    Ok(k.offsets().iter().filter(|&&o| vol.get(p + o)).count())
}
