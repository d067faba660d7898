//! Recurrence-based generalized q-Stirling tables, Bell polynomials and
//! numbers, classical specializations, and independent brute-force
//! combinatorial oracles.
//!
//! The two-parameter family `S[n,k](s; c, d)` is defined as the rook sum of
//! `n - k` rooks on [`Board::staircase_cd`]; it satisfies
//!
//! ```text
//! S[n,k] = q^(T(n) + (n-k)(s-1)) S[n-1,k-1] + [T(n) + (n-k-1)(s-1)]_q S[n-1,k]
//! ```
//!
//! where `T(n) = c (n-1) + d` is the total default pre-weight of the
//! leftmost column for `n >= 2`. The first column of the staircase is empty,
//! so `T(1) = 0` and the bottom weight `d` does not appear at `n = 1`; a
//! variant that applies `c (n-1) + d` at `n = 1` as well produces a table
//! that differs from the rook sums by a global factor `q^d`.

use crate::laurent::{bracket, LaurentPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

/// Parameter triple for one memoized table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CdParams {
    pub s: i64,
    pub c: i64,
    pub d: i64,
}

impl CdParams {
    /// The single-parameter family: `c = 1`, `d = 0`.
    pub fn standard(s: i64) -> CdParams {
        CdParams { s, c: 1, d: 0 }
    }

    /// Type II parameters mapped onto the c,d family.
    pub fn type2(alpha: i64, beta: i64, rho: i64) -> CdParams {
        CdParams {
            s: 1 - beta,
            c: beta - alpha,
            d: -rho,
        }
    }

    /// Total default pre-weight of column `n` of the matching staircase.
    pub fn column_total(&self, n: u32) -> i64 {
        if n >= 2 {
            self.c * (i64::from(n) - 1) + self.d
        } else {
            0
        }
    }
}

/// Lazily filled triangle of `S[n,k]` values for one parameter set.
#[derive(Debug)]
pub struct StirlingTable {
    params: CdParams,
    rows: Vec<Vec<LaurentPolynomial>>,
}

impl StirlingTable {
    pub fn new(params: CdParams) -> StirlingTable {
        StirlingTable {
            rows: vec![vec![LaurentPolynomial::one()]],
            params,
        }
    }

    pub fn params(&self) -> CdParams {
        self.params
    }

    fn ensure_rows(&mut self, n: u32) {
        while self.rows.len() <= n as usize {
            let n = self.rows.len() as u32;
            let prev = &self.rows[n as usize - 1];
            let at = |k: i64| -> LaurentPolynomial {
                if k < 0 || k >= prev.len() as i64 {
                    LaurentPolynomial::zero()
                } else {
                    prev[k as usize].clone()
                }
            };
            let total = self.params.column_total(n);
            let s = self.params.s;
            let mut row = Vec::with_capacity(n as usize + 1);
            row.push(LaurentPolynomial::zero());
            for k in 1..=i64::from(n) {
                let carry = at(k - 1).shift(total + (i64::from(n) - k) * (s - 1));
                let stay = &bracket(total + (i64::from(n) - k - 1) * (s - 1), 1) * &at(k);
                row.push(carry + stay);
            }
            self.rows.push(row);
        }
    }

    /// `S[n,k]`; zero for `k < 0` or `k > n`.
    pub fn value(&mut self, n: u32, k: i64) -> LaurentPolynomial {
        if k < 0 || k > i64::from(n) {
            return LaurentPolynomial::zero();
        }
        self.ensure_rows(n);
        self.rows[n as usize][k as usize].clone()
    }

    /// Replays the recurrence over every memoized entry and checks that it
    /// still holds against the previous row. Returns the first offending
    /// `(n, k)` if any.
    pub fn audit(&self) -> Option<(u32, usize)> {
        for n in 1..self.rows.len() {
            let total = self.params.column_total(n as u32);
            let s = self.params.s;
            let prev = &self.rows[n - 1];
            let at = |k: i64| -> LaurentPolynomial {
                if k < 0 || k >= prev.len() as i64 {
                    LaurentPolynomial::zero()
                } else {
                    prev[k as usize].clone()
                }
            };
            for (k, stored) in self.rows[n].iter().enumerate() {
                let expected = if k == 0 {
                    LaurentPolynomial::zero()
                } else {
                    let carry = at(k as i64 - 1).shift(total + (n as i64 - k as i64) * (s - 1));
                    let stay =
                        &bracket(total + (n as i64 - k as i64 - 1) * (s - 1), 1) * &at(k as i64);
                    carry + stay
                };
                if *stored != expected {
                    return Some((n as u32, k));
                }
            }
        }
        None
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<CdParams, StirlingTable>> = RefCell::new(HashMap::new());
}

/// Runs `f` against the thread-local memoized table for `params`.
pub fn with_table<R>(params: CdParams, f: impl FnOnce(&mut StirlingTable) -> R) -> R {
    TABLES.with(|tables| {
        let mut tables = tables.borrow_mut();
        let table = tables
            .entry(params)
            .or_insert_with(|| StirlingTable::new(params));
        f(table)
    })
}

/// The generalized q-Stirling number `S[n,k]` with parameter `s`.
pub fn stirling(n: u32, k: i64, s: i64) -> LaurentPolynomial {
    with_table(CdParams::standard(s), |t| t.value(n, k))
}

/// The two-weight family on the staircase with cell weight `c` and bottom
/// weight `d`; reduces to [`stirling`] at `(c, d) = (1, 0)`.
pub fn stirling_cd(n: u32, k: i64, s: i64, c: i64, d: i64) -> LaurentPolynomial {
    with_table(CdParams { s, c, d }, |t| t.value(n, k))
}

/// The Type II generalized q-Stirling number with parameters
/// `(alpha, beta, rho)`, realized as `stirling_cd` at
/// `(s, c, d) = (1 - beta, beta - alpha, -rho)`.
pub fn stirling_type2(n: u32, k: i64, alpha: i64, beta: i64, rho: i64) -> LaurentPolynomial {
    with_table(CdParams::type2(alpha, beta, rho), |t| t.value(n, k))
}

/// `h^(n-k) S[n,k]`, the h-scaled value; zero when `k > n`.
pub fn stirling_scaled(n: u32, k: i64, s: i64, h: i64) -> LaurentPolynomial {
    if k < 0 || k > i64::from(n) {
        return LaurentPolynomial::zero();
    }
    let power = BigInt::from(h).pow(u32::try_from(i64::from(n) - k).unwrap());
    stirling(n, k, s).scale(&power)
}

/// Generating polynomial in `x` whose coefficient of `x^k` is a Stirling
/// value; the Bell number is the value at `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellPolynomial {
    coeffs: Vec<LaurentPolynomial>,
}

impl BellPolynomial {
    /// Coefficient of `x^k` (zero outside the stored range).
    pub fn coefficient(&self, k: usize) -> LaurentPolynomial {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(LaurentPolynomial::zero)
    }

    pub fn coefficients(&self) -> &[LaurentPolynomial] {
        &self.coeffs
    }

    /// Exact value after substituting the integer `x0` for `x`.
    pub fn eval_x(&self, x0: i64) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero();
        let mut power = BigInt::one();
        for coeff in &self.coeffs {
            acc += &coeff.scale(&power);
            power *= BigInt::from(x0);
        }
        acc
    }
}

/// The Bell polynomial `B[n; x] = sum_k S[n,k] x^k` for parameter `s`.
pub fn bell_poly(n: u32, s: i64) -> BellPolynomial {
    BellPolynomial {
        coeffs: (0..=i64::from(n)).map(|k| stirling(n, k, s)).collect(),
    }
}

/// The Bell number `B[n] = B[n; 1]`.
pub fn bell_number(n: u32, s: i64) -> LaurentPolynomial {
    bell_poly(n, s).eval_x(1)
}

/// Type II Bell polynomial with coefficients from [`stirling_type2`].
pub fn bell_type2(n: u32, alpha: i64, beta: i64, rho: i64) -> BellPolynomial {
    BellPolynomial {
        coeffs: (0..=i64::from(n))
            .map(|k| stirling_type2(n, k, alpha, beta, rho))
            .collect(),
    }
}

const ORACLE_CAP: u32 = 10;

/// Number of set partitions of an n-set into exactly k blocks, by
/// exhaustive enumeration of restricted growth strings.
pub fn oracle_partitions(n: u32, k: u32) -> u64 {
    assert!(
        k <= n && n <= ORACLE_CAP,
        "oracle supports 0 <= k <= n <= {ORACLE_CAP}"
    );
    if n == 0 {
        return u64::from(k == 0);
    }
    fn walk(remaining: u32, blocks: u32, target: u32) -> u64 {
        if remaining == 0 {
            return u64::from(blocks == target);
        }
        let mut count = 0;
        // next element joins one of the existing blocks or opens a new one
        count += u64::from(blocks) * walk(remaining - 1, blocks, target);
        if blocks < target {
            count += walk(remaining - 1, blocks + 1, target);
        }
        count
    }
    walk(n - 1, 1, k)
}

/// Number of permutations of an n-set with exactly k cycles, by exhaustive
/// enumeration of all permutations.
pub fn oracle_cycles(n: u32, k: u32) -> u64 {
    assert!(
        k <= n && n <= ORACLE_CAP,
        "oracle supports 0 <= k <= n <= {ORACLE_CAP}"
    );
    let n = n as usize;
    if n == 0 {
        return u64::from(k == 0);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    let mut c = vec![0usize; n];
    let cycles = |perm: &[usize]| -> u32 {
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if !seen[start] {
                cycles += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                }
            }
        }
        cycles
    };
    if cycles(&perm) == k {
        count += 1;
    }
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if cycles(&perm) == k {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Total number of set partitions of an n-set, by enumeration.
pub fn oracle_bell(n: u32) -> u64 {
    assert!(n <= ORACLE_CAP, "oracle supports n <= {ORACLE_CAP}");
    if n == 0 {
        return 1;
    }
    fn walk(remaining: u32, blocks: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        blocks * walk(remaining - 1, blocks) + walk(remaining - 1, blocks + 1)
    }
    walk(n - 1, 1)
}

/// Integer table of `S[n,k]` values at `q = 1` built from the printed
/// two-term recurrence, i.e. with the leftmost-column total read as
/// `c (n-1) + d` for every `n >= 1`.
///
/// With `extend_k0` the `k = 0` column is continued by the recurrence
/// itself instead of being pinned to zero, which yields the boundary
/// products the classical defining relations expect.
fn cd_values_at_one(n_max: u32, s: i64, c: i64, d: i64, extend_k0: bool) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=i64::from(n_max) {
        let total = c * (n - 1) + d;
        let prev = &rows[n as usize - 1];
        let at = |k: i64| -> BigInt {
            if k < 0 || k >= prev.len() as i64 {
                BigInt::zero()
            } else {
                prev[k as usize].clone()
            }
        };
        let mut row = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let coefficient = total + (n - k - 1) * (s - 1);
            let value = if k == 0 && !extend_k0 {
                BigInt::zero()
            } else {
                at(k - 1) + coefficient * at(k)
            };
            row.push(value);
        }
        rows.push(row);
    }
    rows
}

/// `(z | gamma)_k = z (z - gamma) ... (z - (k-1) gamma)` as an exact
/// polynomial in `z`, with `z` shifted by `-shift`.
fn falling_factorial_poly(shift: i64, gamma: i64, k: u32) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for i in 0..i64::from(k) {
        let factor = LaurentPolynomial::from_terms([
            (1i64, BigInt::one()),
            (0, BigInt::from(-shift - i * gamma)),
        ]);
        acc = &acc * &factor;
    }
    acc
}

/// Outcome of testing the classical defining relation
/// `(x | alpha)_n = sum_k S[n,k] (x - rho | beta)_k` at `q = 1` against the
/// Type II table, for both signs of the `rho` argument and both `k = 0`
/// boundary treatments.
#[derive(Clone, Debug)]
pub struct HsuShiueReport {
    pub n: u32,
    pub alpha: i64,
    pub beta: i64,
    pub rho: i64,
    /// Relation holds with coefficients `stirling_type2(.., rho)` and the
    /// rook boundary (`S[n,0] = 0` for `n >= 1`).
    pub rook_boundary_plus: bool,
    /// Same boundary, coefficients `stirling_type2(.., -rho)`.
    pub rook_boundary_minus: bool,
    /// Recurrence-extended `k = 0` column, coefficients with `rho`.
    pub extended_plus: bool,
    /// Recurrence-extended `k = 0` column, coefficients with `-rho`.
    pub extended_minus: bool,
    /// Short description of the satisfying convention.
    pub satisfying: String,
    /// Left side `(x | alpha)_n` as a polynomial in the evaluation variable.
    pub lhs: LaurentPolynomial,
    /// Right side under the negated-rho extended convention.
    pub rhs_extended_minus: LaurentPolynomial,
    pub diff: LaurentPolynomial,
}

/// Evaluates both sides of the defining relation as exact polynomials.
pub fn check_hsu_shiue(n: u32, alpha: i64, beta: i64, rho: i64) -> HsuShiueReport {
    let lhs = falling_factorial_poly(0, alpha, n);
    let rhs_for = |rho_arg: i64, extend: bool| -> LaurentPolynomial {
        // candidate coefficients: Type II table with the given rho argument
        let table = cd_values_at_one(n, 1 - beta, beta - alpha, rho_arg, extend);
        let mut acc = LaurentPolynomial::zero();
        for (k, value) in table[n as usize].iter().enumerate() {
            acc += &falling_factorial_poly(rho, beta, k as u32).scale(value);
        }
        acc
    };
    // stirling_type2(.., rho) has d = -rho, so the "plus" convention passes
    // -rho through to the recurrence table.
    let rook_boundary_plus = rhs_for(-rho, false) == lhs;
    let rook_boundary_minus = rhs_for(rho, false) == lhs;
    let extended_plus = rhs_for(-rho, true) == lhs;
    let rhs_extended_minus = rhs_for(rho, true);
    let extended_minus = rhs_extended_minus == lhs;
    let satisfying = if rho == 0 && rook_boundary_plus && extended_minus {
        "both signs (rho = 0); boundary treatments agree".to_string()
    } else if extended_minus {
        "negated rho argument with the recurrence-extended k = 0 column".to_string()
    } else {
        "none".to_string()
    };
    let diff = &lhs - &rhs_extended_minus;
    HsuShiueReport {
        n,
        alpha,
        beta,
        rho,
        rook_boundary_plus,
        rook_boundary_minus,
        extended_plus,
        extended_minus,
        satisfying,
        lhs,
        rhs_extended_minus,
        diff,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q_factorial;
    use crate::rook::{Board, Rule};
    use num_rational::BigRational;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    fn at_one(p: &LaurentPolynomial) -> BigInt {
        p.coeff_sum()
    }

    #[test]
    fn boundary_values() {
        for s in [-1, 0, 1, 2] {
            assert_eq!(stirling(0, 0, s), LaurentPolynomial::one());
            assert_eq!(stirling(1, 1, s), LaurentPolynomial::one());
            for n in 1..=6 {
                assert!(stirling(n, 0, s).is_zero(), "S[{n},0]");
                assert!(stirling(n, i64::from(n) + 1, s).is_zero());
            }
        }
        assert_eq!(stirling_cd(0, 0, 2, 1, 1), LaurentPolynomial::one());
        assert_eq!(stirling_type2(0, 0, 1, 2, 1), LaurentPolynomial::one());
    }

    #[test]
    fn classical_specializations_at_one() {
        // s = 0: set partition counts; s = 1: cycle counts
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    at_one(&stirling(n, i64::from(k), 0)),
                    BigInt::from(oracle_partitions(n, k)),
                    "partitions ({n},{k})"
                );
                assert_eq!(
                    at_one(&stirling(n, i64::from(k), 1)),
                    BigInt::from(oracle_cycles(n, k)),
                    "cycles ({n},{k})"
                );
            }
        }
        assert_eq!(at_one(&stirling(4, 2, 0)), BigInt::from(7));
        assert_eq!(at_one(&stirling(4, 2, 1)), BigInt::from(11));
    }

    #[test]
    fn bell_values() {
        let expected = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(at_one(&bell_number(n as u32, 0)), BigInt::from(*want));
            assert_eq!(oracle_bell(n as u32), *want);
        }
        for n in 0..=6u32 {
            let factorial: u64 = (1..=u64::from(n)).product::<u64>().max(1);
            assert_eq!(at_one(&bell_number(n, 1)), BigInt::from(factorial), "n={n}");
        }
        assert_eq!(bell_poly(0, 3).eval_x(5), LaurentPolynomial::one());
        assert_eq!(bell_number(2, 0), poly("1 + q"));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_partitions(4, 2), 7);
        assert_eq!(oracle_cycles(4, 2), 11);
        assert_eq!(oracle_bell(5), 52);
        assert_eq!(oracle_partitions(0, 0), 1);
        assert_eq!(oracle_cycles(0, 0), 1);
    }

    #[test]
    fn scaled_family() {
        assert_eq!(stirling_scaled(5, 2, 2, 1), stirling(5, 2, 2));
        assert!(stirling_scaled(3, 1, 0, 0).is_zero());
        assert_eq!(stirling_scaled(3, 3, 0, 0), stirling(3, 3, 0));
        assert_eq!(
            stirling_scaled(3, 1, 0, 2),
            stirling(3, 1, 0).scale(&BigInt::from(4))
        );
    }

    #[test]
    fn standard_parameters_collapse() {
        for n in 0..=7u32 {
            for k in 0..=i64::from(n) {
                for s in [-1, 0, 1, 2, 3] {
                    assert_eq!(stirling_cd(n, k, s, 1, 0), stirling(n, k, s));
                }
            }
        }
    }

    #[test]
    fn matches_rook_sums() {
        for s in [-1i64, 0, 1, 2] {
            for n in 0..=5u32 {
                let board = Board::staircase(n);
                for k in 0..=i64::from(n) {
                    let rooks = (i64::from(n) - k) as usize;
                    assert_eq!(
                        stirling(n, k, s),
                        board.rook_sum(rooks, Rule::SameRow, s),
                        "standard n={n} k={k} s={s}"
                    );
                }
            }
        }
        for s in [-1i64, 0, 1, 2, 3] {
            for c in -1..=2i64 {
                for d in -1..=2i64 {
                    for n in 0..=6u32 {
                        let board = Board::staircase_cd(n, c, d);
                        for k in 0..=i64::from(n) {
                            let rooks = (i64::from(n) - k) as usize;
                            assert_eq!(
                                stirling_cd(n, k, s, c, d),
                                board.rook_sum(rooks, Rule::SameRow, s),
                                "cd n={n} k={k} s={s} c={c} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn s_zero_recurrence_collapses() {
        // At s = 0 the recurrence reads S[n,k] = q^(k-1) S[n-1,k-1] + [k] S[n-1,k].
        for n in 1..=6u32 {
            for k in 1..=i64::from(n) {
                let expected = stirling(n - 1, k - 1, 0).shift(k - 1)
                    + &bracket(k, 1) * &stirling(n - 1, k, 0);
                assert_eq!(stirling(n, k, 0), expected, "({n},{k})");
            }
        }
    }

    #[test]
    fn base_variant_recurrence_scales_by_qd() {
        // Applying the two-term recurrence with leftmost-column total
        // c(n-1)+d already at n = 1 produces exactly q^d times the rook
        // faithful table for every n >= 1.
        for (s, c, d) in [(0i64, 1i64, 1i64), (2, 2, -1), (1, -1, 2)] {
            let mut variant: Vec<Vec<LaurentPolynomial>> = vec![vec![LaurentPolynomial::one()]];
            for n in 1..=5i64 {
                let total = c * (n - 1) + d;
                let prev = variant[n as usize - 1].clone();
                let at = |k: i64| -> LaurentPolynomial {
                    if k < 0 || k >= prev.len() as i64 {
                        LaurentPolynomial::zero()
                    } else {
                        prev[k as usize].clone()
                    }
                };
                let mut row = vec![LaurentPolynomial::zero()];
                for k in 1..=n {
                    let carry = at(k - 1).shift(total + (n - k) * (s - 1));
                    let stay = &bracket(total + (n - k - 1) * (s - 1), 1) * &at(k);
                    row.push(carry + stay);
                }
                variant.push(row);
            }
            let qd = LaurentPolynomial::monomial(1, d);
            for n in 1..=5u32 {
                for k in 0..=i64::from(n) {
                    let ours = stirling_cd(n, k, s, c, d);
                    assert_eq!(
                        variant[n as usize][k as usize],
                        &qd * &ours,
                        "s={s} c={c} d={d} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn type2_satisfies_negated_rho_recursion() {
        // For n >= 2 the Type II table satisfies
        //   S[n,k] = q^((k-1)b - (n-1)a - r) S[n-1,k-1] + [k b - (n-1)a - r] S[n-1,k]
        // and the same recursion with +r fails for some r != 0 entry.
        for (a, b, r) in [(0i64, 1i64, 1i64), (1, 2, -1), (2, 1, 2), (-1, 2, 0)] {
            for n in 2..=6u32 {
                for k in 0..=i64::from(n) {
                    let expected = stirling_type2(n - 1, k - 1, a, b, r)
                        .shift((k - 1) * b - (i64::from(n) - 1) * a - r)
                        + &bracket(k * b - (i64::from(n) - 1) * a - r, 1)
                            * &stirling_type2(n - 1, k, a, b, r);
                    assert_eq!(
                        stirling_type2(n, k, a, b, r),
                        expected,
                        "({a},{b},{r}) ({n},{k})"
                    );
                }
            }
        }
        // positive-rho variant is off for rho != 0
        let (a, b, r) = (0i64, 1i64, 1i64);
        let n = 3u32;
        let k = 2i64;
        let plus = stirling_type2(n - 1, k - 1, a, b, r)
            .shift((k - 1) * b - (i64::from(n) - 1) * a + r)
            + &bracket(k * b - (i64::from(n) - 1) * a + r, 1) * &stirling_type2(n - 1, k, a, b, r);
        assert_ne!(stirling_type2(n, k, a, b, r), plus);
    }

    #[test]
    fn type2_classical_case() {
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    at_one(&stirling_type2(n, i64::from(k), 0, 1, 0)),
                    BigInt::from(oracle_partitions(n, k)),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn bell_row_sums_match_partition_oracle() {
        for n in 0..=8u32 {
            assert_eq!(
                at_one(&bell_number(n, 0)),
                BigInt::from(oracle_bell(n)),
                "n={n}"
            );
        }
    }

    #[test]
    fn table_audit_passes() {
        let mut table = StirlingTable::new(CdParams { s: 2, c: 2, d: -1 });
        table.value(7, 3);
        assert_eq!(table.audit(), None);
        let mut standard = StirlingTable::new(CdParams::standard(0));
        standard.value(8, 4);
        assert_eq!(standard.audit(), None);
    }

    #[test]
    fn bell_symbolic_small_rows() {
        assert_eq!(bell_number(0, 0), LaurentPolynomial::one());
        assert_eq!(bell_number(1, 0), LaurentPolynomial::one());
        assert_eq!(bell_number(2, 0), poly("1 + q"));
    }

    #[test]
    fn eval_of_table_entry() {
        // s = 0 table entries have nonnegative exponents, so evaluation at
        // an integer point can be cross-checked with plain BigInt powers.
        let two = BigRational::from(BigInt::from(2));
        let entry = stirling(4, 2, 0);
        let direct: BigInt = entry
            .terms()
            .map(|(e, c)| c * BigInt::from(2).pow(u32::try_from(e).unwrap()))
            .sum();
        assert_eq!(entry.eval_at(&two).unwrap(), BigRational::from(direct));
    }

    #[test]
    fn hsu_shiue_classical_holds_everywhere() {
        for n in 0..=6u32 {
            let report = check_hsu_shiue(n, 0, 1, 0);
            assert!(report.rook_boundary_plus && report.rook_boundary_minus);
            assert!(report.extended_plus && report.extended_minus);
        }
    }

    #[test]
    fn hsu_shiue_nonzero_rho_needs_extension_and_sign() {
        let report = check_hsu_shiue(3, 2, 1, 1);
        assert!(report.extended_minus);
        assert!(!report.extended_plus);
        assert!(!report.rook_boundary_plus);
        assert!(!report.rook_boundary_minus);
        assert!(report.diff.is_zero());
        // x^n expansion sanity at (0,1,0): classical second kind
        let classical = check_hsu_shiue(4, 0, 1, 0);
        assert!(classical.diff.is_zero());
        assert_eq!(classical.lhs, LaurentPolynomial::monomial(1, 4));
    }

    #[test]
    fn hsu_shiue_trivial_case() {
        let report = check_hsu_shiue(0, -1, 2, 2);
        assert!(report.extended_minus && report.extended_plus);
        assert_eq!(report.lhs, LaurentPolynomial::one());
    }

    #[test]
    fn unit_alpha_full_rows_reduce_to_factorials() {
        // row sums at s = 1, q = 1 are n!
        for n in 0..=7u32 {
            let total = at_one(&bell_number(n, 1));
            let factorial: u64 = (1..=u64::from(n)).product::<u64>().max(1);
            assert_eq!(total, BigInt::from(factorial));
        }
        assert_eq!(q_factorial(3, 0), LaurentPolynomial::constant(6));
    }
}
