//! Closed forms: exact Catalan numbers, binomials, ballot numbers, the
//! column/diagonal coordinate change, and the sum-of-squares decomposition.

use num_bigint::BigUint;

use crate::triangle::NodeCoord;
use crate::Error;

/// Cap for [`catalan`] and [`decompose`]; the closed forms are cheap, so this
/// sits far above anything the table or the oracle can reach.
pub const DEFAULT_CATALAN_CAP: usize = 100_000;

/// Cap per axis for [`convolution_matrix`], which materializes its entries.
pub const DEFAULT_MATRIX_CAP: usize = 2000;

/// Exact binomial coefficient by the multiplicative method: a product of
/// (n-k+i)/i steps in which every intermediate division is exact. Returns 0
/// for k < 0 or k > n; the k = -1 convention is what makes the column-term
/// formula come out right at k = 0.
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::from(0u32);
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// The n-th Catalan number, computed as binom(2n, n) / (n + 1).
pub fn catalan(n: usize) -> Result<BigUint, Error> {
    catalan_with_cap(n, DEFAULT_CATALAN_CAP)
}

/// [`catalan`] with an explicit cap instead of the default.
pub fn catalan_with_cap(n: usize, cap: usize) -> Result<BigUint, Error> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    Ok(binomial(2 * n, n as isize) / (n + 1))
}

/// The same number through the factorial quotient (2n)! / (n! (n+1)!).
/// Verification route; [`catalan`] is the production path.
pub fn catalan_from_factorials(n: usize) -> BigUint {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

/// The same number as the difference binom(2n, n) - binom(2n, n-1).
pub fn catalan_from_binomial_difference(n: usize) -> BigUint {
    binomial(2 * n, n as isize) - binomial(2 * n, n as isize - 1)
}

/// Ballot number c(n, j) = binom(2n-j, n-j) - binom(2n-j, n-j-1), the entry
/// of the Catalan convolution matrix; zero when j > n. Row j = 0 is the
/// Catalan sequence and c(n, n) = 1.
pub fn ballot(n: usize, j: usize) -> BigUint {
    if j > n {
        return BigUint::from(0u32);
    }
    let m = 2 * n - j;
    binomial(m, (n - j) as isize) - binomial(m, (n - j) as isize - 1)
}

/// (i, j) -> (n, k) with n = (i+j)/2 and k = (i-j)/2: the diagonal index and
/// the column-term index through the node.
pub fn ij_to_nk(node: NodeCoord) -> Result<(usize, usize), Error> {
    if !node.is_reachable() {
        return Err(Error::InvalidNode {
            i: node.i,
            j: node.j,
        });
    }
    Ok(((node.i + node.j) / 2, (node.i - node.j) / 2))
}

/// (n, k) -> (i, j) = (n + k, n - k); exact inverse of [`ij_to_nk`].
pub fn nk_to_ij(n: usize, k: usize) -> Result<NodeCoord, Error> {
    if k > n {
        return Err(Error::InvalidIndex { n, k });
    }
    Ok(NodeCoord::new(n + k, n - k))
}

/// Column term t_{n,k} = binom(n, k) - binom(n, k-1), defined for
/// 0 <= k <= ⌊n/2⌋.
pub fn column_term(n: usize, k: usize) -> Result<BigUint, Error> {
    if k > n / 2 {
        return Err(Error::OutOfColumn { n, k, max: n / 2 });
    }
    Ok(binomial(n, k as isize) - binomial(n, k as isize - 1))
}

/// The terms whose squares sum to C_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    /// t_{n,0} .. t_{n,⌊n/2⌋}.
    pub terms: Vec<BigUint>,
    pub catalan: BigUint,
}

impl Decomposition {
    /// Squares of the terms, in order.
    pub fn squares(&self) -> Vec<BigUint> {
        self.terms.iter().map(|t| t * t).collect()
    }

    /// Sum of the squared terms; always equals `catalan`.
    pub fn sum_of_squares(&self) -> BigUint {
        self.squares().into_iter().sum()
    }
}

/// Decompose C_n into its ⌊n/2⌋+1 column-term squares.
pub fn decompose(n: usize) -> Result<Decomposition, Error> {
    decompose_with_cap(n, DEFAULT_CATALAN_CAP)
}

/// [`decompose`] with an explicit cap instead of the default.
pub fn decompose_with_cap(n: usize, cap: usize) -> Result<Decomposition, Error> {
    let catalan = catalan_with_cap(n, cap)?;
    let terms = (0..=n / 2)
        .map(|k| column_term(n, k).expect("k ranges over the column"))
        .collect();
    Ok(Decomposition { n, terms, catalan })
}

/// Dense grid of ballot numbers c(n, j) for 0 <= n <= n_max, 0 <= j <= j_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionMatrix {
    n_max: usize,
    j_max: usize,
    entries: Vec<BigUint>,
}

/// Fill the convolution matrix from the ballot formula.
pub fn convolution_matrix(n_max: usize, j_max: usize) -> Result<ConvolutionMatrix, Error> {
    convolution_matrix_with_cap(n_max, j_max, DEFAULT_MATRIX_CAP)
}

/// [`convolution_matrix`] with an explicit cap instead of the default.
pub fn convolution_matrix_with_cap(
    n_max: usize,
    j_max: usize,
    cap: usize,
) -> Result<ConvolutionMatrix, Error> {
    for requested in [n_max, j_max] {
        if requested > cap {
            return Err(Error::CapExceeded { requested, cap });
        }
    }
    let mut entries = Vec::with_capacity((n_max + 1) * (j_max + 1));
    for n in 0..=n_max {
        for j in 0..=j_max {
            entries.push(ballot(n, j));
        }
    }
    Ok(ConvolutionMatrix {
        n_max,
        j_max,
        entries,
    })
}

impl ConvolutionMatrix {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    /// c(n, j), or None outside the grid.
    pub fn get(&self, n: usize, j: usize) -> Option<&BigUint> {
        (n <= self.n_max && j <= self.j_max).then(|| &self.entries[n * (self.j_max + 1) + j])
    }
}
