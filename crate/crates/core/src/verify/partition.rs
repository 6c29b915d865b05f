use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{enumerate, Family, FamilySlice};
use crate::green::dstar_key;
use crate::ptransform::PartialInjection;
use crate::unionfind::DisjointSets;

/// Default bound for [`dstar_partition`].
pub const DEFAULT_PARTITION_BOUND: u32 = 10;

/// A family on one chain split into D*-classes.
#[derive(Debug, Clone, Serialize)]
pub struct ClassPartition {
    pub family: Family,
    pub n: u32,
    pub elements: Vec<PartialInjection>,
    /// Element indices, each class sorted, classes ordered by first element.
    pub classes: Vec<Vec<usize>>,
    /// Smallest element index of each class.
    pub representatives: Vec<usize>,
    /// `per_height[p]` is the number of classes of height `p`.
    pub per_height: Vec<u64>,
}

impl ClassPartition {
    fn from_labels(
        family: Family,
        n: u32,
        elements: Vec<PartialInjection>,
        labels: &[usize],
    ) -> Self {
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, &label) in labels.iter().enumerate() {
            let k = *slot.entry(label).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[k].push(i);
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut per_height = vec![0u64; n as usize + 1];
        for &r in &representatives {
            per_height[elements[r].height() as usize] += 1;
        }
        Self {
            family,
            n,
            elements,
            classes,
            representatives,
            per_height,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Classes as sorted index lists, sorted; equal for equal partitions.
    pub fn canonical(&self) -> Vec<Vec<usize>> {
        let mut c = self.classes.clone();
        c.sort();
        c
    }

    pub fn is_height_homogeneous(&self) -> bool {
        self.classes.iter().all(|c| {
            let h = self.elements[c[0]].height();
            c.iter().all(|&i| self.elements[i].height() == h)
        })
    }
}

/// D*-classes as the join of L* and R*: union-find over all elements,
/// uniting elements with equal domains and elements with equal images.
pub fn dstar_partition(family: Family, n: u32, bound: u32) -> Result<ClassPartition> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partition",
            n,
            bound,
        });
    }
    let elements: Vec<_> = enumerate(FamilySlice::new(family, n)).collect();
    dstar_partition_of(family, n, elements)
}

/// [`dstar_partition`] on an explicit element list, in the given order.
pub fn dstar_partition_of(
    family: Family,
    n: u32,
    elements: Vec<PartialInjection>,
) -> Result<ClassPartition> {
    let mut sets = DisjointSets::new(elements.len());
    let mut by_domain: HashMap<u64, usize> = HashMap::new();
    let mut by_image: HashMap<u64, usize> = HashMap::new();
    for (i, m) in elements.iter().enumerate() {
        if m.n() != n {
            return Err(Error::ChainMismatch {
                left: n,
                right: m.n(),
            });
        }
        let d = *by_domain.entry(m.domain_mask()).or_insert(i);
        sets.union(d, i);
        let r = *by_image.entry(m.image_mask()).or_insert(i);
        sets.union(r, i);
    }
    let labels: Vec<usize> = (0..elements.len()).map(|i| sets.find(i)).collect();
    Ok(ClassPartition::from_labels(family, n, elements, &labels))
}

/// D*-classes read off the gap-vector key, without any union-find.
pub fn gap_partition(family: Family, n: u32) -> ClassPartition {
    let elements: Vec<_> = enumerate(FamilySlice::new(family, n)).collect();
    let mut ids = BTreeMap::new();
    let labels: Vec<usize> = elements
        .iter()
        .map(|m| {
            let next = ids.len();
            *ids.entry(dstar_key(family, m)).or_insert(next)
        })
        .collect();
    ClassPartition::from_labels(family, n, elements, &labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        assert_eq!(
            dstar_partition(Family::Ddp, 4, 10).unwrap().class_count(),
            9
        );
        assert_eq!(
            dstar_partition(Family::Oddp, 5, 10).unwrap().class_count(),
            17
        );
        assert_eq!(
            dstar_partition(Family::Ddp, 3, 10).unwrap().class_count(),
            5
        );
        for f in Family::ALL {
            let p = dstar_partition(f, 0, 10).unwrap();
            assert_eq!(p.classes, vec![vec![0]]);
        }
        assert!(matches!(
            dstar_partition(Family::Ddp, 11, 10),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn ddp_seven_height_three() {
        let p = dstar_partition(Family::Ddp, 7, 10).unwrap();
        assert_eq!(p.per_height[3], 14);
        assert!(p.is_height_homogeneous());
    }

    #[test]
    fn partition_ignores_element_order() {
        let mut elements: Vec<_> = enumerate(FamilySlice::new(Family::Ddp, 6)).collect();
        let forward = dstar_partition_of(Family::Ddp, 6, elements.clone()).unwrap();
        elements.reverse();
        let backward = dstar_partition_of(Family::Ddp, 6, elements).unwrap();
        assert_eq!(forward.class_count(), backward.class_count());
        assert_eq!(forward.per_height, backward.per_height);
    }

    #[test]
    fn key_partition_matches_union_find_for_every_family() {
        for f in Family::ALL {
            for n in 0..=7 {
                assert_eq!(
                    gap_partition(f, n).canonical(),
                    dstar_partition(f, n, 10).unwrap().canonical(),
                    "{f} n={n}"
                );
            }
        }
    }
}
