//! Simple-point test by topological numbers.
//!
//! `p` is simple when the object points of `N26(p)` form exactly one
//! 26-component and the background points of `N18(p)` that are 6-adjacent
//! to `p` fall into exactly one 6-component of the background of `N18(p)`.

use std::sync::OnceLock;

use crate::error::Result;
use crate::volume::{cell_index, cell_offset, BinaryVolume, Point3, CENTER_BIT};

struct Masks {
    adj26: [u32; 27],
    adj6: [u32; 27],
    n18: u32,
    n6: u32,
}

fn masks() -> &'static Masks {
    static M: OnceLock<Masks> = OnceLock::new();
    M.get_or_init(|| {
        let mut adj26 = [0u32; 27];
        let mut adj6 = [0u32; 27];
        let mut n18 = 0;
        let mut n6 = 0;
        for i in 0..27 {
            let a = cell_offset(i);
            for j in 0..27 {
                let d = (a - cell_offset(j)).norm2();
                if d >= 1 && d <= 3 {
                    adj26[i] |= 1 << j;
                }
                if d == 1 {
                    adj6[i] |= 1 << j;
                }
            }
            let n = a.norm2();
            if n >= 1 && n <= 2 {
                n18 |= 1 << i;
            }
            if n == 1 {
                n6 |= 1 << i;
            }
        }
        Masks { adj26, adj6, n18, n6 }
    })
}

/// Grows `seed` to its connected component inside `within`.
fn flood(seed: u32, within: u32, adj: &[u32; 27]) -> u32 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i];
        }
        next &= within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

fn count_components(mut set: u32, adj: &[u32; 27]) -> usize {
    let mut n = 0;
    while set != 0 {
        let seed = 1 << set.trailing_zeros();
        set &= !flood(seed, set, adj);
        n += 1;
    }
    n
}

/// Number of 26-components of object points in `N26(p)`.
pub fn object_topological_number(bits: u32) -> usize {
    count_components(bits & !CENTER_BIT & 0x7ff_ffff, &masks().adj26)
}

/// Number of 6-components of background in `N18(p)` that touch a 6-neighbour of `p`.
pub fn background_topological_number(bits: u32) -> usize {
    let m = masks();
    let bg = !bits & m.n18;
    let mut seeds = bg & m.n6;
    let mut n = 0;
    while seeds != 0 {
        let comp = flood(1 << seeds.trailing_zeros(), bg, &m.adj6);
        seeds &= !comp;
        n += 1;
    }
    n
}

/// Simple-point test on a 3x3x3 neighbourhood mask (see `BinaryVolume::neighborhood_bits`).
pub fn is_simple_bits(bits: u32) -> bool {
    object_topological_number(bits) == 1 && background_topological_number(bits) == 1
}

/// Whether the object point `p` is simple in `vol`.
pub fn is_simple(vol: &BinaryVolume, p: Point3) -> Result<bool> {
    vol.require_object(p)?;
    Ok(is_simple_bits(vol.neighborhood_bits(p)))
}

#[allow(dead_code)]
pub(crate) fn bit(o: Point3) -> u32 {
    1 << cell_index(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_voxel_is_not_simple() {
        assert!(!is_simple_bits(CENTER_BIT));
    }

    #[test]
    fn end_of_line_is_simple() {
        assert!(is_simple_bits(CENTER_BIT | bit(Point3::new(1, 0, 0))));
    }

    #[test]
    fn interior_of_cube_is_not_simple() {
        assert!(!is_simple_bits(0x7ff_ffff));
    }

    #[test]
    fn middle_of_line_is_not_simple() {
        let b = CENTER_BIT | bit(Point3::new(1, 0, 0)) | bit(Point3::new(-1, 0, 0));
        assert!(!is_simple_bits(b));
    }

    #[test]
    fn rejects_background_point() {
        let (vol, _) = BinaryVolume::from_points(&[Point3::ORIGIN], 1);
        assert!(is_simple(&vol, Point3::new(0, 0, 0)).is_err());
    }
}
