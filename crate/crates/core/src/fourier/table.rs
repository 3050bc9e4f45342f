//! Conjugacy classes, centralizers resolved to catalog groups, and exact
//! orthogonality checks of character tables.

use std::sync::Arc;

use serde::Serialize;

use super::cyclotomic::{Cyclotomic, RootSum};
use super::group::{catalog_group, identify_subgroup, Group, GroupError, SubgroupIso};

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Smallest element index in the class.
    pub rep: usize,
    pub members: Vec<usize>,
    /// Centralizer of the representative, as element indices.
    pub centralizer: Vec<usize>,
    pub centralizer_iso: SubgroupIso,
}

impl ConjugacyClass {
    pub fn centralizer_order(&self) -> usize {
        self.centralizer.len()
    }

    /// Value at centralizer element `z` of irreducible `r` of the centralizer.
    pub fn centralizer_character(&self, r: usize, z: usize) -> &RootSum {
        self.centralizer_iso.target.character(r, self.centralizer_iso.map[&z])
    }

    pub fn centralizer_irreps(&self) -> usize {
        self.centralizer_iso.target.irrep_count()
    }
}

/// A catalog group with its classes and centralizer data.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub group: Arc<Group>,
    pub classes: Vec<ConjugacyClass>,
    /// Element index ↦ class index.
    pub class_of: Vec<usize>,
}

impl GroupTable {
    pub fn new(name: &str) -> Result<Self, GroupError> {
        let group = catalog_group(name)?;
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| group.conjugate(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            let centralizer: Vec<usize> = (0..n).filter(|&g| group.mul(g, x) == group.mul(x, g)).collect();
            let centralizer_iso = identify_subgroup(&group, &centralizer)?;
            classes.push(ConjugacyClass {
                rep: x,
                members,
                centralizer,
                centralizer_iso,
            });
        }
        Ok(Self {
            group,
            classes,
            class_of,
        })
    }

    pub fn class_equation_holds(&self) -> bool {
        let n = self.group.order();
        self.classes.iter().map(|c| c.members.len()).sum::<usize>() == n
            && self.classes.iter().all(|c| c.members.len() * c.centralizer_order() == n)
    }

    pub fn summary(&self) -> Vec<ClassSummary> {
        self.classes
            .iter()
            .map(|c| ClassSummary {
                representative: self.group.element(c.rep).to_string(),
                size: c.members.len(),
                centralizer_order: c.centralizer_order(),
                centralizer: c.centralizer_iso.target.name().to_string(),
                centralizer_irreps: c.centralizer_irreps(),
            })
            .collect()
    }

    pub fn orthogonality(&self) -> OrthogonalityReport {
        let g = &self.group;
        let n = g.order() as i64;
        let k = g.irrep_count();
        let class_functions = (0..k).all(|r| {
            self.classes
                .iter()
                .all(|c| c.members.iter().all(|&m| g.character(r, m).reduce() == g.character(r, c.rep).reduce()))
        });
        let rows = (0..k).all(|r| {
            (0..k).all(|s| {
                let mut acc = RootSum::zero();
                for e in 0..g.order() {
                    acc.add_product(g.character(r, e), &g.character(s, e).conj());
                }
                acc.reduce() == Cyclotomic::rational(if r == s { n } else { 0 }.into())
            })
        });
        let columns = self.classes.iter().enumerate().all(|(i, a)| {
            self.classes.iter().enumerate().all(|(j, b)| {
                let mut acc = RootSum::zero();
                for r in 0..k {
                    acc.add_product(g.character(r, a.rep), &g.character(r, b.rep).conj());
                }
                let want = if i == j { a.centralizer_order() as i64 } else { 0 };
                acc.reduce() == Cyclotomic::rational(want.into())
            })
        });
        OrthogonalityReport {
            group: g.name().to_string(),
            classes: self.classes.len(),
            irreps: k,
            square_table: k == self.classes.len(),
            class_functions,
            rows,
            columns,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub representative: String,
    pub size: usize,
    pub centralizer_order: usize,
    pub centralizer: String,
    pub centralizer_irreps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub group: String,
    pub classes: usize,
    pub irreps: usize,
    pub square_table: bool,
    pub class_functions: bool,
    pub rows: bool,
    pub columns: bool,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.square_table && self.class_functions && self.rows && self.columns
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::group::CATALOG;

    #[test]
    fn s3_classes() {
        let t = GroupTable::new("S3").unwrap();
        let orders: Vec<usize> = t.classes.iter().map(|c| c.centralizer_order()).collect();
        assert_eq!(orders, vec![6, 2, 3]);
        assert!(t.class_equation_holds());
    }

    #[test]
    fn klein_classes_are_singletons() {
        let t = GroupTable::new("(Z/2)^2").unwrap();
        assert_eq!(t.classes.len(), 4);
        assert!(t.classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn s5_centralizers() {
        let t = GroupTable::new("S5").unwrap();
        assert_eq!(t.classes.len(), 7);
        let four_cycle = t
            .classes
            .iter()
            .find(|c| t.group.element(c.rep).cycle_type() == vec![4, 1])
            .unwrap();
        assert_eq!(four_cycle.centralizer_iso.target.name(), "C4");
        let irreps: usize = t.classes.iter().map(|c| c.centralizer_irreps()).sum();
        assert_eq!(irreps, 39);
    }

    #[test]
    fn catalog_tables_are_orthogonal() {
        for name in CATALOG {
            let t = GroupTable::new(name).unwrap();
            assert!(t.class_equation_holds(), "{name}");
            let o = t.orthogonality();
            assert!(o.holds(), "{o:?}");
        }
    }
}
