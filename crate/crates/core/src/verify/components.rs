//! Connected-component labelling of object voxels.

use std::collections::VecDeque;

use crate::volume::{Adjacency, BinaryVolume};

/// Component labels of the object voxels of a volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub adjacency: Adjacency,
    pub count: usize,
    /// One entry per voxel, `None` for background.
    pub labels: Vec<Option<usize>>,
}

impl ComponentLabeling {
    /// Voxel counts per component, largest first.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for l in self.labels.iter().flatten() {
            sizes[*l] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Breadth-first labelling; labels are assigned in voxel index order.
pub fn label_components(vol: &BinaryVolume, k: Adjacency) -> ComponentLabeling {
    let mut labels = vec![None; vol.voxels().len()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for (start, &obj) in vol.voxels().iter().enumerate() {
        if !obj || labels[start].is_some() {
            continue;
        }
        labels[start] = Some(count);
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let p = vol.point(i);
            for &o in k.offsets() {
                if let Some(j) = vol.index(p + o) {
                    if vol.voxels()[j] && labels[j].is_none() {
                        labels[j] = Some(count);
                        queue.push_back(j);
                    }
                }
            }
        }
        count += 1;
    }
    ComponentLabeling { adjacency: k, count, labels }
}

/// Number of `k`-components of the object.
pub fn component_count(vol: &BinaryVolume, k: Adjacency) -> usize {
    label_components(vol, k).count
}

/// Number of 6-components of the background, counting everything outside the
/// box as one extra background region joined to the border.
pub fn background_component_count(vol: &BinaryVolume) -> usize {
    let d = vol.dims();
    let inverted: Vec<bool> = vol.voxels().iter().map(|v| !v).collect();
    let padded = pad_one(&BinaryVolume::from_voxels(d, inverted).expect("same dims"), true);
    component_count(&padded, Adjacency::Six)
}

/// Copy of `vol` framed by a one-voxel border of value `fill`.
pub(crate) fn pad_one(vol: &BinaryVolume, fill: bool) -> BinaryVolume {
    let d = vol.dims();
    let nd = crate::volume::Dims::new(d.x + 2, d.y + 2, d.z + 2).expect("positive dims");
    let mut out = BinaryVolume::from_voxels(nd, vec![fill; nd.len()]).expect("sized");
    for (i, &v) in vol.voxels().iter().enumerate() {
        let p = vol.point(i);
        out.set(p + crate::volume::Point3::new(1, 1, 1), v).expect("inside");
    }
    out
}
