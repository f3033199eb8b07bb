//! Square matrices over a prime field, sized for hand-built actions.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    p: u64,
    n: usize,
    /// row-major
    data: Vec<u64>,
}

impl Matrix {
    pub fn new(p: u64, rows: &[&[u64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            p,
            n,
            data: rows.iter().flat_map(|r| r.iter().map(|&x| x % p)).collect(),
        }
    }

    pub fn from_flat(p: u64, n: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), n * n);
        Matrix {
            p,
            n,
            data: data.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { p, n, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p);
        let n = self.n + other.n;
        let mut data = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                data[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                data[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        Matrix { p: self.p, n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum::<u64>() % self.p;
            }
        }
        Matrix { p: self.p, n, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut acc = Matrix::identity(self.p, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Column-vector action `v -> M v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum::<u64>() % self.p)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.p, self.n)
    }

    pub fn rank(&self) -> usize {
        rank_mod(self.data.clone(), self.n, self.n, self.p)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Multiplicative order, or `None` when singular.
    pub fn order(&self) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut m = self.clone();
        let mut k = 1;
        while !m.is_identity() {
            m = m.mul(self);
            k += 1;
        }
        Some(k)
    }

    /// Dimension of the fixed space `{v : M v = v}`.
    pub fn fixed_space_dim(&self) -> usize {
        let mut d = self.data.clone();
        for i in 0..self.n {
            d[i * self.n + i] = (d[i * self.n + i] + self.p - 1) % self.p;
        }
        self.n - rank_mod(d, self.n, self.n, self.p)
    }
}

/// Basis of all `X` with `X a = b X`.
pub fn intertwiners(a: &Matrix, b: &Matrix) -> Vec<Matrix> {
    let n = a.n;
    let p = a.p;
    // unknown x_{ij} sits at column i*n + j
    let vars = n * n;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u64; vars];
            for k in 0..n {
                row[i * n + k] = (row[i * n + k] + a.get(k, j)) % p;
                row[k * n + j] = (row[k * n + j] + p - b.get(i, k)) % p;
            }
            rows.push(row);
        }
    }
    nullspace(rows, vars, p)
        .into_iter()
        .map(|v| Matrix::from_flat(p, n, v))
        .collect()
}

fn rank_mod(mut d: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| d[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            d.swap(piv * cols + j, r * cols + j);
        }
        let inv = crate::arith::mod_inverse(d[r * cols + c], p).expect("field");
        for j in 0..cols {
            d[r * cols + j] = d[r * cols + j] * inv % p;
        }
        for i in 0..rows {
            if i != r && d[i * cols + c] != 0 {
                let f = d[i * cols + c];
                for j in 0..cols {
                    d[i * cols + j] = (d[i * cols + j] + p * p - f * d[r * cols + j]) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced-row-echelon nullspace basis; free variables in ascending order.
fn nullspace(rows: Vec<Vec<u64>>, vars: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = rows;
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = crate::arith::mod_inverse(m[r][c], p).expect("field");
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..nrows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..vars {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..vars).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; vars];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][f]) % p;
            }
            v
        })
        .collect()
}
