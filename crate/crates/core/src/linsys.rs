//! The integer triangular system behind the coefficient values: the matrix
//! `M_n`, its closed-form inverse, and the exact solution of `M_n v = -e`.
//!
//! Everything here is exact big-integer arithmetic; there is no floating
//! point in this module.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binomial::binomial;

/// Upper unitriangular-signed integer matrix with nested leading blocks.
///
/// Indexing is 1-based in the public accessors to match the construction
/// rules; storage is 0-based row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedTriangularMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl NestedTriangularMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1);
        NestedTriangularMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`, both 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    /// Leading k x k block.
    pub fn leading_block(&self, k: usize) -> NestedTriangularMatrix {
        assert!(k >= 1 && k <= self.n);
        let mut out = NestedTriangularMatrix::zeros(k);
        for i in 1..=k {
            for j in 1..=k {
                out.set(i, j, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn mat_mul(&self, other: &NestedTriangularMatrix) -> NestedTriangularMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = NestedTriangularMatrix::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = BigInt::zero();
                for k in 1..=n {
                    let a = self.entry(i, k);
                    if !a.is_zero() {
                        acc += a * other.entry(k, j);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        for i in 1..=self.n {
            for j in 1..=self.n {
                let want_one = i == j;
                let e = self.entry(i, j);
                if want_one && !e.is_one() {
                    return false;
                }
                if !want_one && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Product of the diagonal; `+-1` for these matrices.
    pub fn det(&self) -> BigInt {
        let mut d = BigInt::one();
        for i in 1..=self.n {
            d *= self.entry(i, i);
        }
        d
    }

    /// `M x` for a 1-based dense vector.
    pub fn mat_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n);
        (1..=self.n)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 1..=self.n {
                    let e = self.entry(i, j);
                    if !e.is_zero() {
                        acc += e * &x[j - 1];
                    }
                }
                acc
            })
            .collect()
    }

    /// Integer CSV dump with a one-line header `Mn n=<n>`.
    pub fn dump_csv(&self) -> String {
        let mut out = format!("Mn n={}\n", self.n);
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Build `M_n` from the column rules: the diagonal is `(-1)^{i+1}`, an odd
/// column `2m+1` carries `(-1)^j C(m, j)` at row `2m+1-j`, and an even column
/// `2m` carries `(-1)^{j+1} C(m-1, j)` at row `2m-j`.
pub fn build_mn(n: usize) -> NestedTriangularMatrix {
    let mut mat = NestedTriangularMatrix::zeros(n);
    for c in 1..=n {
        if c % 2 == 1 {
            let m = ((c - 1) / 2) as i64;
            for j in 0..=m {
                let row = c as i64 - j;
                if row >= 1 {
                    let v = binomial(m, j);
                    let v = if j % 2 == 0 { v } else { -v };
                    mat.set(row as usize, c, v);
                }
            }
        } else {
            let m = (c / 2) as i64;
            for j in 0..m {
                let row = c as i64 - j;
                if row >= 1 {
                    let v = binomial(m - 1, j);
                    let v = if j % 2 == 0 { -v } else { v };
                    mat.set(row as usize, c, v);
                }
            }
        }
    }
    mat
}

/// The closed-form inverse: diagonal `(-1)^{j+1}`, row `2i` carries
/// `-C(j+i-1, j)` at column `2i+j`, row `2i+1` carries `+C(j+i-1, j)` at
/// column `2i+1+j`.
pub fn inverse_formula(n: usize) -> NestedTriangularMatrix {
    let mut mat = NestedTriangularMatrix::zeros(n);
    for r in 1..=n {
        if r % 2 == 0 {
            let i = (r / 2) as i64;
            for j in 0..=(n - r) as i64 {
                mat.set(r, r + j as usize, -binomial(j + i - 1, j));
            }
        } else {
            let i = ((r - 1) / 2) as i64;
            for j in 0..=(n - r) as i64 {
                mat.set(r, r + j as usize, binomial(j + i - 1, j));
            }
        }
    }
    mat
}

/// Solve `M_n v = -e` by back-substitution in exact integers; the diagonal is
/// `+-1` so every step is an exact division.
pub fn solve_system(n: usize) -> Vec<BigInt> {
    let m = build_mn(n);
    let mut v = vec![BigInt::zero(); n];
    for i in (1..=n).rev() {
        let mut acc = -BigInt::one(); // -e_i
        for j in (i + 1)..=n {
            acc -= m.entry(i, j) * &v[j - 1];
        }
        // diagonal is (+-1)^{-1} = itself
        v[i - 1] = acc * m.entry(i, i);
    }
    v
}

/// The hockey-stick collapse used by the solution values:
/// `sum_{j=0}^{n-2i} C(j+i-1, j) = C(n-i, n-2i)` in exact integers.
pub fn hockey_stick_check(i: i64, n: i64) -> bool {
    let mut sum = BigInt::zero();
    for j in 0..=(n - 2 * i) {
        sum += binomial(j + i - 1, j);
    }
    sum == binomial(n - i, n - 2 * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::conjectured_v;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn m4_matches_reference_system() {
        let m = build_mn(4);
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, 0],
            vec![0, -1, -1, 0],
            vec![0, 0, 1, 1],
            vec![0, 0, 0, -1],
        ];
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(m.entry(i, j), &BigInt::from(rows[i - 1][j - 1]), "({i},{j})");
            }
        }
    }

    #[test]
    fn m10_spot_entries() {
        let m = build_mn(10);
        assert_eq!(m.entry(5, 7), &BigInt::from(3));
        assert_eq!(m.entry(6, 10), &BigInt::from(-1));
        let inv = inverse_formula(10);
        assert_eq!(inv.entry(6, 10), &BigInt::from(-15));
        assert_eq!(inv.entry(4, 10), &BigInt::from(-7));
    }

    #[test]
    fn nesting_of_leading_blocks() {
        let m10 = build_mn(10);
        assert_eq!(m10.leading_block(4), build_mn(4));
        for k in 1..=9 {
            assert_eq!(m10.leading_block(k), build_mn(k));
            assert_eq!(inverse_formula(10).leading_block(k), inverse_formula(k));
        }
    }

    #[test]
    fn inverse_n1() {
        let inv = inverse_formula(1);
        assert!(inv.is_identity());
    }

    #[test]
    fn exact_inverse_up_to_64() {
        for n in 1..=64 {
            let m = build_mn(n);
            let inv = inverse_formula(n);
            assert!(m.mat_mul(&inv).is_identity(), "M * Minv failed at n={n}");
            assert!(inv.mat_mul(&m).is_identity(), "Minv * M failed at n={n}");
        }
    }

    #[test]
    fn determinant_is_unimodular() {
        use num_traits::Signed;
        for n in 1..=32 {
            let d = build_mn(n).det();
            assert_eq!(d.abs(), BigInt::one());
        }
    }

    #[test]
    fn solve_small_systems() {
        assert_eq!(solve_system(1), ints(&[-1]));
        assert_eq!(solve_system(2), ints(&[-1, 1]));
        assert_eq!(solve_system(4), ints(&[-1, 3, -2, 1]));
        assert_eq!(solve_system(10).last().unwrap(), &BigInt::one());
    }

    #[test]
    fn solution_routes_agree() {
        for n in 1..=40usize {
            let by_substitution = solve_system(n);
            // v = -(Minv) e
            let inv = inverse_formula(n);
            let e = vec![BigInt::one(); n];
            let by_inverse: Vec<BigInt> = inv.mat_vec(&e).into_iter().map(|x| -x).collect();
            assert_eq!(by_substitution, by_inverse, "n={n}");
            assert_eq!(by_substitution, conjectured_v(n as u32), "n={n}");
            // and it actually solves the system
            let m = build_mn(n);
            let rhs = m.mat_vec(&by_substitution);
            assert!(rhs.iter().all(|x| *x == BigInt::from(-1)));
        }
    }

    #[test]
    fn hockey_stick_small_and_random() {
        // i=1, n=4: 1 + 1 + 1 = C(3,2)
        assert!(hockey_stick_check(1, 4));
        // i=0 boundary relies on the C(a,0)=1 convention
        assert!(hockey_stick_check(0, 7));
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = (state >> 33) % 200 + 1;
            let i = (state >> 11) % (n / 2 + 1);
            assert!(hockey_stick_check(i as i64, n as i64), "i={i} n={n}");
        }
    }

    #[test]
    fn csv_dump_header() {
        let m = build_mn(2);
        let dump = m.dump_csv();
        assert!(dump.starts_with("Mn n=2\n"));
        assert_eq!(dump.lines().count(), 3);
        assert_eq!(dump.lines().nth(2).unwrap(), "0,-1");
    }
}
