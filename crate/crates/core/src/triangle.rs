//! The Dyck triangle: path-prefix counts d(i, j) on the (position, unbalance)
//! lattice, grown column by column from the dynamics equation
//! d(i, j) = d(i-1, j-1) + d(i-1, j+1).

use num_bigint::BigUint;

use crate::Error;

/// Largest i_max accepted by default. Row lengths grow linearly and entries
/// are big integers, so this keeps a worst-case table in the hundreds of MB.
pub const DEFAULT_TABLE_CAP: usize = 2000;

/// A lattice node: position `i` along the word, unbalance `j`.
///
/// Nodes with `j <= i` and `i + j` even are the ones paths can visit; any
/// other pair is still a legal coordinate, with dynamics 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeCoord {
    pub i: usize,
    pub j: usize,
}

impl NodeCoord {
    pub fn new(i: usize, j: usize) -> Self {
        NodeCoord { i, j }
    }

    /// Whether any path can visit this node.
    pub fn is_reachable(self) -> bool {
        self.j <= self.i && (self.i + self.j).is_multiple_of(2)
    }
}

/// Dense table of labels d(i, j) for 0 <= i <= i_max.
///
/// Row i stores the ⌊i/2⌋+1 labels of column i, slot k holding d(i, i - 2k);
/// unreachable nodes are an index-mapping fact rather than stored zeros.
/// The table is immutable once built and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    rows: Vec<Vec<BigUint>>,
}

impl TriangleTable {
    /// Build the table eagerly up to column `i_max`.
    pub fn build(i_max: usize) -> Result<Self, Error> {
        Self::build_with_cap(i_max, DEFAULT_TABLE_CAP)
    }

    /// [`TriangleTable::build`] with an explicit cap instead of the default.
    pub fn build_with_cap(i_max: usize, cap: usize) -> Result<Self, Error> {
        if i_max > cap {
            return Err(Error::CapExceeded {
                requested: i_max,
                cap,
            });
        }
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(i_max + 1);
        rows.push(vec![BigUint::from(1u32)]);
        for i in 1..=i_max {
            let prev = &rows[i - 1];
            let mut row = Vec::with_capacity(i / 2 + 1);
            for k in 0..=i / 2 {
                // in column slots, d(i, i-2k) = prev[k] + prev[k-1] with
                // missing neighbors contributing nothing
                let mut label = BigUint::from(0u32);
                if k < prev.len() {
                    label += &prev[k];
                }
                if k > 0 {
                    label += &prev[k - 1];
                }
                row.push(label);
            }
            rows.push(row);
        }
        Ok(TriangleTable { rows })
    }

    /// Largest abscissa stored.
    pub fn i_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// d(i, j): the number of path prefixes from the origin to the node.
    /// Unreachable nodes give 0; columns beyond the table are an error.
    pub fn dynamics(&self, node: NodeCoord) -> Result<BigUint, Error> {
        if node.i > self.i_max() {
            return Err(Error::OutOfTable {
                i: node.i,
                max: self.i_max(),
            });
        }
        if !node.is_reachable() {
            return Ok(BigUint::from(0u32));
        }
        Ok(self.rows[node.i][(node.i - node.j) / 2].clone())
    }

    /// d̄(i, j) in the n-triangle: the label after inverting the paths so
    /// they originate at (2n, 0), which lands on the mirror column 2n - i.
    pub fn reverse_dynamics(&self, n: usize, node: NodeCoord) -> Result<BigUint, Error> {
        if 2 * n > self.i_max() {
            return Err(Error::OutOfTable {
                i: 2 * n,
                max: self.i_max(),
            });
        }
        if node.i > 2 * n {
            return Err(Error::OutOfTable {
                i: node.i,
                max: 2 * n,
            });
        }
        self.dynamics(NodeCoord::new(2 * n - node.i, node.j))
    }

    /// d(x)·d̄(x): how many Dyck paths of semilength n pass through the node.
    pub fn paths_through(&self, n: usize, node: NodeCoord) -> Result<BigUint, Error> {
        Ok(self.dynamics(node)? * self.reverse_dynamics(n, node)?)
    }

    /// Column i = n of the table: [t_{n,0}, ..., t_{n,⌊n/2⌋}] where
    /// t_{n,k} = d(n, n - 2k).
    pub fn column(&self, n: usize) -> Result<&[BigUint], Error> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::OutOfTable {
                i: n,
                max: self.i_max(),
            })
    }

    /// All reachable nodes with their labels, columns ascending and j
    /// descending inside a column.
    pub fn nodes(&self) -> impl Iterator<Item = (NodeCoord, &BigUint)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, label)| (NodeCoord::new(i, i - 2 * k), label))
        })
    }
}
