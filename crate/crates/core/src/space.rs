//! Labeled tensor-product space layouts.
//!
//! A [`SpaceLayout`] is an ordered list of subsystems, each a dimension plus a
//! [`Role`] label. Basis indices are mixed-radix numbers with the FIRST listed
//! subsystem as the most significant digit: for two qubits the basis order is
//! |00>, |01>, |10>, |11>. Partial traces and the two-qubit measures rely on
//! this convention, so it is fixed here and tested.

use crate::error::{Error, Result};
use std::fmt;

/// Subsystem label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Atom1,
    Atom2,
    Pseudomode,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Atom1 => write!(f, "atom1"),
            Role::Atom2 => write!(f, "atom2"),
            Role::Pseudomode => write!(f, "pseudomode"),
        }
    }
}

/// Ordered list of subsystem dimensions with unique role labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceLayout {
    dims: Vec<usize>,
    roles: Vec<Role>,
}

impl SpaceLayout {
    /// Builds a layout from `(role, dimension)` pairs in subsystem order.
    pub fn new(parts: &[(Role, usize)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("layout must be nonempty".into()));
        }
        let mut roles = Vec::with_capacity(parts.len());
        let mut dims = Vec::with_capacity(parts.len());
        for &(role, dim) in parts {
            if dim < 2 {
                return Err(Error::InvalidParameter(format!(
                    "subsystem {role} has dimension {dim}, need at least 2"
                )));
            }
            if roles.contains(&role) {
                return Err(Error::DuplicateRole(role));
            }
            roles.push(role);
            dims.push(dim);
        }
        Ok(Self { dims, roles })
    }

    /// Single-qubit layout.
    pub fn qubit(role: Role) -> Self {
        Self {
            dims: vec![2],
            roles: vec![role],
        }
    }

    pub fn subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Product of all subsystem dimensions.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Slot of `role` in the subsystem order.
    pub fn position(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn contains(&self, role: Role) -> bool {
        self.position(role).is_some()
    }

    /// Layout of `self` followed by `other`; fails on shared roles.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        for &r in &other.roles {
            if self.contains(r) {
                return Err(Error::DuplicateRole(r));
            }
        }
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut roles = self.roles.clone();
        roles.extend_from_slice(&other.roles);
        Ok(Self { dims, roles })
    }

    /// Sub-layout of the kept roles, in their original relative order.
    pub fn restricted_to(&self, keep: &[Role]) -> Result<Self> {
        for &r in keep {
            if !self.contains(r) {
                return Err(Error::UnknownRole(r));
            }
        }
        let parts: Vec<(Role, usize)> = self
            .roles
            .iter()
            .zip(&self.dims)
            .filter(|(r, _)| keep.contains(r))
            .map(|(&r, &d)| (r, d))
            .collect();
        Self::new(&parts)
    }

    /// Writes the mixed-radix digits of `index` into `out`, most significant first.
    pub fn decompose(&self, mut index: usize, out: &mut [usize]) {
        debug_assert_eq!(out.len(), self.dims.len());
        for (slot, &d) in self.dims.iter().enumerate().rev() {
            out[slot] = index % d;
            index /= d;
        }
    }

    /// Basis index of the product state with the given per-subsystem digits.
    pub fn compose(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.dims.len());
        digits
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&g, &d)| acc * d + g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_basis_order_is_first_most_significant() {
        let l = SpaceLayout::new(&[(Role::Atom1, 2), (Role::Atom2, 2)]).unwrap();
        // |00>, |01>, |10>, |11>
        assert_eq!(l.compose(&[0, 0]), 0);
        assert_eq!(l.compose(&[0, 1]), 1);
        assert_eq!(l.compose(&[1, 0]), 2);
        assert_eq!(l.compose(&[1, 1]), 3);
        let mut d = [9, 9];
        l.decompose(2, &mut d);
        assert_eq!(d, [1, 0]);
    }

    #[test]
    fn mixed_radix_with_mode() {
        let l = SpaceLayout::new(&[(Role::Atom1, 2), (Role::Pseudomode, 3)]).unwrap();
        assert_eq!(l.total_dim(), 6);
        // |e,2> = 1*3 + 2
        assert_eq!(l.compose(&[1, 2]), 5);
        let mut d = [0, 0];
        l.decompose(4, &mut d);
        assert_eq!(d, [1, 1]);
    }

    #[test]
    fn rejects_duplicates_and_small_dims() {
        assert!(matches!(
            SpaceLayout::new(&[(Role::Atom1, 2), (Role::Atom1, 2)]),
            Err(Error::DuplicateRole(Role::Atom1))
        ));
        assert!(SpaceLayout::new(&[(Role::Atom1, 1)]).is_err());
        assert!(SpaceLayout::new(&[]).is_err());
    }

    #[test]
    fn restriction_keeps_original_order() {
        let l = SpaceLayout::new(&[
            (Role::Atom1, 2),
            (Role::Atom2, 2),
            (Role::Pseudomode, 4),
        ])
        .unwrap();
        let r = l.restricted_to(&[Role::Pseudomode, Role::Atom1]).unwrap();
        assert_eq!(r.roles(), &[Role::Atom1, Role::Pseudomode]);
        assert_eq!(r.dims(), &[2, 4]);
        assert!(matches!(
            l.restricted_to(&[Role::Atom1])
                .unwrap()
                .restricted_to(&[Role::Atom2]),
            Err(Error::UnknownRole(Role::Atom2))
        ));
    }
}
