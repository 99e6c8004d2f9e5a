//! Named synthetic volumes: the seven-point counterexample chain, two rings
//! joined by that chain, lines, boxes, single voxels and seeded random blobs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::volume::{BinaryVolume, Dims, Point3};

/// A volume plus named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub volume: BinaryVolume,
    pub labels: Vec<(char, Point3)>,
}

impl Fixture {
    fn unlabeled(name: impl Into<String>, volume: BinaryVolume) -> Self {
        Fixture { name: name.into(), volume, labels: Vec::new() }
    }

    /// Position of a labelled point. Panics on an unknown label.
    pub fn point(&self, label: char) -> Point3 {
        self.labels
            .iter()
            .find(|(c, _)| *c == label)
            .map(|&(_, p)| p)
            .unwrap_or_else(|| panic!("fixture {} has no point {label:?}", self.name))
    }

    pub fn label_of(&self, p: Point3) -> Option<char> {
        self.labels.iter().find(|&&(_, q)| q == p).map(|&(c, _)| c)
    }
}

/// The chain a–g. `a-b` runs diagonally in the middle plane, `c-d-e` is a
/// vertical column and `e-f-g` runs west along the bottom plane.
pub const FIG7_CHAIN: [(char, Point3); 7] = [
    ('a', Point3::new(2, 2, 0)),
    ('b', Point3::new(1, 1, 0)),
    ('c', Point3::new(0, 0, 1)),
    ('d', Point3::new(0, 0, 0)),
    ('e', Point3::new(0, 0, -1)),
    ('f', Point3::new(-1, -1, -1)),
    ('g', Point3::new(-2, -2, -1)),
];

pub fn fig7() -> Fixture {
    let pts: Vec<Point3> = FIG7_CHAIN.iter().map(|&(_, p)| p).collect();
    let (volume, shift) = BinaryVolume::from_points(&pts, 2);
    let labels = FIG7_CHAIN.iter().map(|&(c, p)| (c, p + shift)).collect();
    Fixture { name: "fig7".into(), volume, labels }
}

/// Outline of a `w` x `h` rectangle, `t` voxels thick, in a plane spanned
/// by `u` and `v` through `origin` (the lower-left corner).
fn ring(origin: Point3, u: Point3, v: Point3, w: i64, h: i64, t: i64) -> Vec<Point3> {
    let mut out = Vec::new();
    for i in 0..w {
        for j in 0..h {
            let edge = i < t || j < t || i >= w - t || j >= h - t;
            if edge {
                out.push(Point3::new(
                    origin.x + i * u.x + j * v.x,
                    origin.y + i * u.y + j * v.y,
                    origin.z + i * u.z + j * v.z,
                ));
            }
        }
    }
    out
}

/// Two upright "0" rings joined by the a–g chain: `a` is the bottom-left
/// corner of the east ring, `g` the bottom-right corner of the west ring.
pub fn fig12() -> Fixture {
    let a = FIG7_CHAIN[0].1;
    let g = FIG7_CHAIN[6].1;
    let (ex, up) = (Point3::new(1, 0, 0), Point3::new(0, 0, 1));
    let mut pts: Vec<Point3> = FIG7_CHAIN.iter().map(|&(_, p)| p).collect();
    pts.extend(ring(a, ex, up, 5, 7, 2));
    pts.extend(ring(g - Point3::new(4, 0, 0), ex, up, 5, 7, 2));
    pts.sort();
    pts.dedup();
    let (volume, shift) = BinaryVolume::from_points(&pts, 2);
    let labels = FIG7_CHAIN.iter().map(|&(c, p)| (c, p + shift)).collect();
    Fixture { name: "fig12".into(), volume, labels }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            _ => Err(Error::FixtureParams(format!("axis must be x, y or z, got `{s}`"))),
        }
    }
}

/// `n` voxels along `axis`, padded by one background voxel.
pub fn line(n: usize, axis: Axis) -> Result<Fixture> {
    if n == 0 {
        return Err(Error::FixtureParams("line length must be positive".into()));
    }
    let pts: Vec<Point3> = (0..n as i64)
        .map(|i| match axis {
            Axis::X => Point3::new(i, 0, 0),
            Axis::Y => Point3::new(0, i, 0),
            Axis::Z => Point3::new(0, 0, i),
        })
        .collect();
    let (volume, _) = BinaryVolume::from_points(&pts, 1);
    Ok(Fixture::unlabeled(format!("line({n},{axis:?})").to_lowercase(), volume))
}

/// Solid `a` x `b` x `c` box, padded by one background voxel.
pub fn solid_box(a: usize, b: usize, c: usize) -> Result<Fixture> {
    let dims = Dims::new(a + 2, b + 2, c + 2)
        .map_err(|_| Error::FixtureParams("box sides must be positive".into()))?;
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::FixtureParams("box sides must be positive".into()));
    }
    let mut volume = BinaryVolume::new(dims);
    for z in 1..=c as i64 {
        for y in 1..=b as i64 {
            for x in 1..=a as i64 {
                volume.set(Point3::new(x, y, z), true)?;
            }
        }
    }
    Ok(Fixture::unlabeled(format!("box({a},{b},{c})"), volume))
}

/// One voxel in a 3x3x3 volume.
pub fn single() -> Fixture {
    let (volume, _) = BinaryVolume::from_points(&[Point3::ORIGIN], 1);
    Fixture::unlabeled("single", volume)
}

/// Each voxel is object with probability `density`, from a seeded ChaCha8 stream.
pub fn random(seed: u64, dims: Dims, density: f64) -> Result<Fixture> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::FixtureParams(format!("density {density} outside [0, 1]")));
    }
    Ok(Fixture::unlabeled(
        format!("random({seed},{dims},{density})"),
        random_volume(seed, dims, density),
    ))
}

pub(crate) fn random_volume(seed: u64, dims: Dims, density: f64) -> BinaryVolume {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let voxels = (0..dims.len()).map(|_| rng.gen_bool(density)).collect();
    BinaryVolume::from_voxels(dims, voxels).expect("sized to dims")
}

/// A parsed fixture name such as `fig7`, `line(5,x)`, `box(3,4,5)` or
/// `random(42,8x8x8,0.4)`.
#[derive(Debug, Clone, PartialEq)]
pub enum FixtureSpec {
    Fig7,
    Fig12,
    Single,
    Line(usize, Axis),
    Box(usize, usize, usize),
    Random { seed: u64, dims: Dims, density: f64 },
}

impl FixtureSpec {
    pub fn build(&self) -> Result<Fixture> {
        match *self {
            FixtureSpec::Fig7 => Ok(fig7()),
            FixtureSpec::Fig12 => Ok(fig12()),
            FixtureSpec::Single => Ok(single()),
            FixtureSpec::Line(n, axis) => line(n, axis),
            FixtureSpec::Box(a, b, c) => solid_box(a, b, c),
            FixtureSpec::Random { seed, dims, density } => random(seed, dims, density),
        }
    }
}

fn num<T: FromStr>(s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::FixtureParams(format!("bad number `{s}`")))
}

pub(crate) fn parse_dims(s: &str) -> Result<Dims> {
    let v: Vec<&str> = s.split('x').collect();
    if v.len() != 3 {
        return Err(Error::FixtureParams(format!("dims must look like 8x8x8, got `{s}`")));
    }
    Dims::new(num(v[0])?, num(v[1])?, num(v[2])?)
        .map_err(|e| Error::FixtureParams(e.to_string()))
}

impl FromStr for FixtureSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.split_once('(') {
            Some((h, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::FixtureParams(format!("unclosed `(` in `{s}`")))?;
                (h, inner.split(',').map(str::trim).collect::<Vec<_>>())
            }
            None => (s, Vec::new()),
        };
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::FixtureParams(format!("`{head}` takes {n} arguments")))
            }
        };
        match head {
            "fig7" => arity(0).map(|_| FixtureSpec::Fig7),
            "fig12" => arity(0).map(|_| FixtureSpec::Fig12),
            "single" => arity(0).map(|_| FixtureSpec::Single),
            "line" => {
                arity(2)?;
                Ok(FixtureSpec::Line(num(args[0])?, args[1].parse()?))
            }
            "box" => {
                arity(3)?;
                Ok(FixtureSpec::Box(num(args[0])?, num(args[1])?, num(args[2])?))
            }
            "random" => {
                arity(3)?;
                Ok(FixtureSpec::Random {
                    seed: num(args[0])?,
                    dims: parse_dims(args[1])?,
                    density: num(args[2])?,
                })
            }
            _ => Err(Error::UnknownFixture(s.to_string())),
        }
    }
}

impl fmt::Display for FixtureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureSpec::Fig7 => f.write_str("fig7"),
            FixtureSpec::Fig12 => f.write_str("fig12"),
            FixtureSpec::Single => f.write_str("single"),
            FixtureSpec::Line(n, a) => write!(f, "line({n},{})", format!("{a:?}").to_lowercase()),
            FixtureSpec::Box(a, b, c) => write!(f, "box({a},{b},{c})"),
            FixtureSpec::Random { seed, dims, density } => {
                write!(f, "random({seed},{}x{}x{},{density})", dims.x, dims.y, dims.z)
            }
        }
    }
}

/// Builds a fixture from its textual name.
pub fn fixture(name: &str) -> Result<Fixture> {
    name.parse::<FixtureSpec>()?.build()
}
