//! Periodic d-dimensional cubic lattices with even extents.
//!
//! Sites are linearized row-major: the last coordinate varies fastest.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    extents: Vec<usize>,
    strides: Vec<usize>,
    num_sites: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SiteIndex {
    pub coords: Vec<usize>,
    pub flat: usize,
}

impl Lattice {
    pub fn new(extents: &[usize]) -> Result<Self> {
        if extents.is_empty() {
            return Err(Error::InvalidLattice("dimension must be at least 1".into()));
        }
        if let Some(bad) = extents.iter().find(|&&l| l == 0 || l % 2 != 0) {
            return Err(Error::InvalidLattice(format!("extent {bad} is not a positive even integer")));
        }
        let mut strides = vec![1usize; extents.len()];
        for i in (0..extents.len() - 1).rev() {
            strides[i] = strides[i + 1]
                .checked_mul(extents[i + 1])
                .ok_or_else(|| Error::InvalidLattice("site count overflows".into()))?;
        }
        let num_sites =
            strides[0].checked_mul(extents[0]).ok_or_else(|| Error::InvalidLattice("site count overflows".into()))?;
        Ok(Lattice { extents: extents.to_vec(), strides, num_sites })
    }

    /// A ring of `length` sites.
    pub fn chain(length: usize) -> Result<Self> {
        Lattice::new(&[length])
    }

    pub fn dim(&self) -> usize {
        self.extents.len()
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    pub fn site(&self, flat: usize) -> SiteIndex {
        assert!(flat < self.num_sites, "site {flat} out of range");
        let coords = self.strides.iter().zip(&self.extents).map(|(stride, extent)| (flat / stride) % extent).collect();
        SiteIndex { coords, flat }
    }

    pub fn site_at(&self, coords: &[usize]) -> Result<SiteIndex> {
        if coords.len() != self.dim() || coords.iter().zip(&self.extents).any(|(m, l)| m >= l) {
            return Err(Error::InvalidLattice(format!("coordinates {coords:?} outside {:?}", self.extents)));
        }
        let flat = coords.iter().zip(&self.strides).map(|(m, s)| m * s).sum();
        Ok(SiteIndex { coords: coords.to_vec(), flat })
    }

    pub fn sites(&self) -> Vec<SiteIndex> {
        (0..self.num_sites).map(|flat| self.site(flat)).collect()
    }

    /// Neighbor of `site` one step along axis `axis`, with periodic wrap.
    pub fn forward_neighbor(&self, site: &SiteIndex, axis: usize) -> SiteIndex {
        let mut coords = site.coords.clone();
        coords[axis] = (coords[axis] + 1) % self.extents[axis];
        let flat = coords.iter().zip(&self.strides).map(|(m, s)| m * s).sum();
        SiteIndex { coords, flat }
    }

    /// One bond `(l, l + e_i)` per site and axis; `N * d` bonds, site-major,
    /// axis-minor. For an extent of 2 the same pair appears twice.
    pub fn directed_bonds(&self) -> Vec<(SiteIndex, SiteIndex)> {
        let mut bonds = Vec::with_capacity(self.num_sites * self.dim());
        for site in self.sites() {
            for axis in 0..self.dim() {
                let next = self.forward_neighbor(&site, axis);
                bonds.push((site.clone(), next));
            }
        }
        bonds
    }

    /// Flat-index form of [`Lattice::directed_bonds`].
    pub fn bond_pairs(&self) -> Vec<(usize, usize)> {
        self.directed_bonds().into_iter().map(|(a, b)| (a.flat, b.flat)).collect()
    }
}

/// Sublattice label `(sum_j m_j) mod 2`.
pub fn parity(site: &SiteIndex) -> usize {
    site.coords.iter().sum::<usize>() % 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_odd_or_empty_extents() {
        assert!(Lattice::new(&[]).is_err());
        assert!(Lattice::new(&[3]).is_err());
        assert!(Lattice::new(&[2, 0]).is_err());
        assert!(Lattice::new(&[2, 4, 6]).is_ok());
    }

    #[test]
    fn site_enumeration() {
        let chain = Lattice::chain(2).unwrap();
        let coords: Vec<_> = chain.sites().into_iter().map(|s| s.coords).collect();
        assert_eq!(coords, vec![vec![0], vec![1]]);

        let square = Lattice::new(&[2, 2]).unwrap();
        let coords: Vec<_> = square.sites().into_iter().map(|s| s.coords).collect();
        assert_eq!(coords, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);

        assert_eq!(Lattice::new(&[2, 2, 2]).unwrap().sites().len(), 8);

        let lat = Lattice::new(&[2, 4, 6]).unwrap();
        for site in lat.sites() {
            assert_eq!(lat.site_at(&site.coords).unwrap(), site);
        }
    }

    #[test]
    fn ring_bonds() {
        assert_eq!(Lattice::chain(4).unwrap().bond_pairs(), vec![(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(Lattice::chain(2).unwrap().bond_pairs(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn rectangle_bonds() {
        let lat = Lattice::new(&[2, 4]).unwrap();
        let bonds = lat.directed_bonds();
        assert_eq!(bonds.len(), 16);
        // site (0,3) = flat 3: axis 0 -> (1,3) = 7, axis 1 wraps to (0,0) = 0
        assert_eq!((bonds[6].0.flat, bonds[6].1.flat), (3, 7));
        assert_eq!((bonds[7].0.flat, bonds[7].1.flat), (3, 0));
        for (a, b) in &bonds {
            assert_ne!(parity(a), parity(b));
        }
    }

    #[test]
    fn parity_examples() {
        let cube = Lattice::new(&[2, 2, 2]).unwrap();
        assert_eq!(parity(&cube.site_at(&[0, 0, 0]).unwrap()), 0);
        let square = Lattice::new(&[2, 2]).unwrap();
        assert_eq!(parity(&square.site_at(&[1, 0]).unwrap()), 1);
    }
}
