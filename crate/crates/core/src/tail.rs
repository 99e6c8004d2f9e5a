//! Line-end and near-line-end points. Tail points are never deleted.

use crate::error::Result;
use crate::volume::{cell_index, BinaryVolume, Direction, Point3, CENTER_BIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailClassification {
    /// Exactly one object point in `N26(p)`.
    LineEnd,
    /// Exactly two object points in `N26(p)`, forming one of [`NEAR_LINE_END_PAIRS`].
    NearLineEnd,
    NonTail,
}

impl TailClassification {
    pub fn is_tail(self) -> bool {
        self != TailClassification::NonTail
    }
}

/// The six 6-neighbour pairs that make a two-neighbour point a near-line-end.
pub const NEAR_LINE_END_PAIRS: [(Direction, Direction); 6] = [
    (Direction::S, Direction::E),
    (Direction::S, Direction::U),
    (Direction::N, Direction::W),
    (Direction::U, Direction::W),
    (Direction::N, Direction::D),
    (Direction::E, Direction::D),
];

fn pair_mask(a: Direction, b: Direction) -> u32 {
    (1 << cell_index(a.offset())) | (1 << cell_index(b.offset()))
}

/// Classification from a neighbourhood mask.
pub fn classify_bits(bits: u32) -> TailClassification {
    let nbrs = bits & !CENTER_BIT & 0x7ff_ffff;
    match nbrs.count_ones() {
        1 => TailClassification::LineEnd,
        2 if NEAR_LINE_END_PAIRS.iter().any(|&(a, b)| pair_mask(a, b) == nbrs) => {
            TailClassification::NearLineEnd
        }
        _ => TailClassification::NonTail,
    }
}

pub fn classify(vol: &BinaryVolume, p: Point3) -> Result<TailClassification> {
    vol.require_object(p)?;
    Ok(classify_bits(vol.neighborhood_bits(p)))
}

pub fn is_tail(vol: &BinaryVolume, p: Point3) -> Result<bool> {
    classify(vol, p).map(TailClassification::is_tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::Adjacency;

    fn with(dirs: &[Direction]) -> (BinaryVolume, Point3) {
        let mut pts = vec![Point3::ORIGIN];
        pts.extend(dirs.iter().map(|d| d.offset()));
        let (vol, shift) = BinaryVolume::from_points(&pts, 2);
        (vol, shift)
    }

    #[test]
    fn examples() {
        let (v, p) = with(&[Direction::E]);
        assert_eq!(classify(&v, p).unwrap(), TailClassification::LineEnd);
        assert!(is_tail(&v, p).unwrap());

        let (v, p) = with(&[Direction::S, Direction::E]);
        assert_eq!(classify(&v, p).unwrap(), TailClassification::NearLineEnd);

        let (v, p) = with(&[Direction::N, Direction::E]);
        assert_eq!(classify(&v, p).unwrap(), TailClassification::NonTail);

        let (v, p) = with(&[]);
        assert!(!is_tail(&v, p).unwrap());

        let (v, p) = with(&[Direction::E, Direction::N, Direction::U]);
        assert!(!is_tail(&v, p).unwrap());
    }

    #[test]
    fn all_listed_pairs_and_no_others() {
        for a in Direction::AXES {
            for b in Direction::AXES {
                if a == b {
                    continue;
                }
                let (v, p) = with(&[a, b]);
                let listed = NEAR_LINE_END_PAIRS
                    .iter()
                    .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
                assert_eq!(classify(&v, p).unwrap() == TailClassification::NearLineEnd, listed);
            }
        }
    }

    #[test]
    fn pairs_are_non_opposite_six_directions() {
        for (a, b) in NEAR_LINE_END_PAIRS {
            assert_ne!(a.opposite(), b);
            assert_eq!(a.offset().norm2(), 1);
            assert_eq!(b.offset().norm2(), 1);
        }
    }

    #[test]
    fn diagonal_pair_is_not_near_line_end() {
        let (v, p) = with(&[Direction::S, Direction::NE]);
        assert_eq!(classify(&v, p).unwrap(), TailClassification::NonTail);
        assert_eq!(
            crate::volume::count_object_neighbors(&v, p, Adjacency::TwentySix).unwrap(),
            2
        );
    }

    #[test]
    fn rejects_background() {
        let (v, _) = with(&[]);
        assert!(classify(&v, Point3::ORIGIN).is_err());
    }
}
