//! Pauli operators and the many-spin product basis.
//!
//! Basis convention: in a register of `num_spins` spins the integer basis
//! index `s` has bit `k` set iff spin `k` is in `|+1>` (the `+1` eigenstate of
//! `sigma_z`). Single-site 2x2 operators use the local order `(|+1>, |-1>)`,
//! so local index `1 - bit`.

use num_complex::Complex64 as C64;

use super::{ComplexMatrix, MAX_DENSE_DIM};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A `sigma_z` eigenvalue label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    /// `|+1>`
    Up,
    /// `|-1>`
    Down,
}

impl Spin {
    /// The `sigma_z` eigenvalue, `+1` or `-1`.
    pub fn sign(self) -> i32 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Spin::Up => Spin::Down,
            Spin::Down => Spin::Up,
        }
    }

    /// Index in the local 2x2 order `(|+1>, |-1>)`.
    pub fn local_index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }
}

/// 2x2 Pauli matrix in the local order `(|+1>, |-1>)`.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
    let rows = match axis {
        Axis::X => [[o, l], [l, o]],
        Axis::Y => [[o, -i], [i, o]],
        Axis::Z => [[l, o], [o, -l]],
    };
    ComplexMatrix::from_rows(&rows).expect("2x2 literal")
}

/// Index into the `2^num_spins` product basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinBasisIndex {
    num_spins: usize,
    index: usize,
}

impl SpinBasisIndex {
    pub fn new(num_spins: usize, index: usize) -> Result<Self> {
        let dim = dense_dim(num_spins)?;
        if index >= dim {
            return Err(Error::OutOfDomain(format!("basis index {index} >= {dim}")));
        }
        Ok(Self { num_spins, index })
    }

    /// The basis index of a product state; `spins[k]` is spin `k`.
    pub fn from_spins(spins: &[Spin]) -> Result<Self> {
        dense_dim(spins.len())?;
        let index =
            spins.iter().enumerate().filter(|(_, s)| **s == Spin::Up).fold(0usize, |acc, (k, _)| acc | (1 << k));
        Ok(Self { num_spins: spins.len(), index })
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn num_spins(self) -> usize {
        self.num_spins
    }

    pub fn spin(self, site: usize) -> Spin {
        if self.index >> site & 1 == 1 {
            Spin::Up
        } else {
            Spin::Down
        }
    }
}

/// Hilbert-space dimension of `num_spins` spins, refusing anything beyond the
/// dense cap.
pub fn dense_dim(num_spins: usize) -> Result<usize> {
    if num_spins >= usize::BITS as usize || (1usize << num_spins) > MAX_DENSE_DIM {
        let dim = 1usize.checked_shl(num_spins as u32).unwrap_or(usize::MAX);
        return Err(Error::DenseCapExceeded { dim, cap: MAX_DENSE_DIM });
    }
    Ok(1 << num_spins)
}

fn check_site(site: usize, num_spins: usize) -> Result<()> {
    if site >= num_spins {
        Err(Error::SiteOutOfRange { site, num_spins })
    } else {
        Ok(())
    }
}

#[inline]
fn local(s: usize, site: usize) -> usize {
    1 - (s >> site & 1)
}

/// `I ⊗ … ⊗ op ⊗ … ⊗ I` with `op` acting on `site`.
pub fn embed_single_site(op: &ComplexMatrix, site: usize, num_spins: usize) -> Result<ComplexMatrix> {
    if op.rows() != 2 || op.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: op.rows().max(op.cols()) });
    }
    check_site(site, num_spins)?;
    let dim = dense_dim(num_spins)?;
    let mask = 1usize << site;
    let mut out = ComplexMatrix::zeros(dim, dim);
    for col in 0..dim {
        for row in [col & !mask, col | mask] {
            let v = op[(local(row, site), local(col, site))];
            if v != C64::new(0.0, 0.0) {
                out[(row, col)] += v;
            }
        }
    }
    Ok(out)
}

/// Adds `xy * (σx σx + σy σy) + zz * σz σz` on the pair `(i, j)` to `h`.
///
/// Written directly from the bit action: the XY part is a flip-flop with
/// amplitude `2 xy` between antiparallel configurations, the ZZ part is
/// diagonal.
pub fn add_exchange(h: &mut ComplexMatrix, i: usize, j: usize, xy: f64, zz: f64, num_spins: usize) -> Result<()> {
    check_site(i, num_spins)?;
    check_site(j, num_spins)?;
    if i == j {
        return Err(Error::SiteCollision(i));
    }
    let dim = dense_dim(num_spins)?;
    if h.rows() != dim || h.cols() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: h.rows() });
    }
    let pair = (1usize << i) | (1usize << j);
    for s in 0..dim {
        let parallel = (s >> i & 1) == (s >> j & 1);
        h[(s, s)] += C64::new(if parallel { zz } else { -zz }, 0.0);
        if !parallel && xy != 0.0 {
            h[(s ^ pair, s)] += C64::new(2.0 * xy, 0.0);
        }
    }
    Ok(())
}

/// `Σ_k σz^(k)`, diagonal.
pub fn total_sigma_z(num_spins: usize) -> Result<ComplexMatrix> {
    let dim = dense_dim(num_spins)?;
    let diag: Vec<C64> =
        (0..dim).map(|s| C64::new((2 * s.count_ones() as i64 - num_spins as i64) as f64, 0.0)).collect();
    Ok(ComplexMatrix::diagonal(&diag))
}

/// Squared collective spin `(Σ_{k∈sites} σ_k / 2)^2` in spin-1/2 units, with
/// eigenvalues `j (j + 1)`.
pub fn collective_spin_squared(sites: &[usize], num_spins: usize) -> Result<ComplexMatrix> {
    let dim = dense_dim(num_spins)?;
    for &k in sites {
        check_site(k, num_spins)?;
    }
    // σ_a·σ_b = 2 SWAP_ab - 1, so J^2 = 3n/4 + (1/4) Σ_{a≠b} σ_a·σ_b
    let mut out = ComplexMatrix::identity(dim).scale(C64::new(0.75 * sites.len() as f64, 0.0));
    for (p, &a) in sites.iter().enumerate() {
        for &b in &sites[p + 1..] {
            if a == b {
                return Err(Error::SiteCollision(a));
            }
            add_exchange(&mut out, a, b, 0.5, 0.5, num_spins)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn pauli_literals() {
        let z = pauli(Axis::Z);
        assert_eq!(z, ComplexMatrix::diagonal(&[re(1.0), re(-1.0)]));
        let x = pauli(Axis::X);
        assert_eq!((x[(0, 1)], x[(1, 0)], x[(0, 0)]), (re(1.0), re(1.0), re(0.0)));
        let y = pauli(Axis::Y);
        assert_eq!((y[(0, 1)], y[(1, 0)]), (C64::new(0.0, -1.0), C64::new(0.0, 1.0)));
    }

    #[test]
    fn embed_identity_on_one_spin() {
        // register index 0 is spin down, the reverse of the local order
        let z = embed_single_site(&pauli(Axis::Z), 0, 1).unwrap();
        assert_eq!(z, ComplexMatrix::diagonal(&[re(-1.0), re(1.0)]));
    }

    #[test]
    fn embed_reads_site_from_bit() {
        let z1 = embed_single_site(&pauli(Axis::Z), 1, 2).unwrap();
        // index 0b01: spin 0 up, spin 1 down
        assert_eq!(z1[(0b01, 0b01)], re(-1.0));
        assert_eq!(z1[(0b10, 0b10)], re(1.0));
    }

    #[test]
    fn embed_sigma_x_flips_bit() {
        let x0 = embed_single_site(&pauli(Axis::X), 0, 2).unwrap();
        assert_eq!(x0[(0b01, 0b00)], re(1.0));
        assert_eq!(x0[(0b00, 0b01)], re(1.0));
        assert_eq!(x0[(0b10, 0b00)], re(0.0));
    }

    #[test]
    fn embed_errors() {
        assert!(matches!(
            embed_single_site(&pauli(Axis::X), 3, 3),
            Err(Error::SiteOutOfRange { site: 3, num_spins: 3 })
        ));
        assert!(matches!(embed_single_site(&pauli(Axis::X), 0, 13), Err(Error::DenseCapExceeded { .. })));
        assert!(embed_single_site(&ComplexMatrix::identity(4), 0, 2).is_err());
    }

    #[test]
    fn exchange_matches_embedded_products() {
        let n = 3;
        let mut h = ComplexMatrix::zeros(8, 8);
        add_exchange(&mut h, 0, 2, 0.7, -0.3, n).unwrap();
        let e = |a, k| embed_single_site(&pauli(a), k, n).unwrap();
        let xy = &(&e(Axis::X, 0) * &e(Axis::X, 2)) + &(&e(Axis::Y, 0) * &e(Axis::Y, 2));
        let zz = &e(Axis::Z, 0) * &e(Axis::Z, 2);
        let expected = &xy.scale(re(0.7)) + &zz.scale(re(-0.3));
        assert!((&h - &expected).max_abs() < 1e-15);
    }

    #[test]
    fn collective_spin_of_all_down_is_maximal() {
        let n = 4;
        let j2 = collective_spin_squared(&[0, 1, 2, 3], n).unwrap();
        // all-down is the J = 2 Dicke state: J(J+1) = 6, and it is an eigenvector
        let v = j2.apply(&crate::qcore::StateVector::basis(16, 0).into_amplitudes()).unwrap();
        assert!((v[0] - re(6.0)).norm() < 1e-14);
        assert!(v[1..].iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn basis_index_round_trip() {
        let spins = [Spin::Up, Spin::Down, Spin::Up];
        let idx = SpinBasisIndex::from_spins(&spins).unwrap();
        assert_eq!(idx.index(), 0b101);
        assert_eq!((0..3).map(|k| idx.spin(k)).collect::<Vec<_>>(), spins);
    }
}
