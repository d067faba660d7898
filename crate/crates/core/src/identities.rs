//! Exact verification of the convolution identities as Laurent polynomial
//! equalities, over finite parameter sweeps, with full witnesses on
//! mismatch.
//!
//! Every check computes its two sides through independent routes (rook
//! enumeration, recurrence tables, q-binomial products) and compares them
//! for exact equality. A few registered names carry the suffix `_alt`:
//! these are deliberately near-miss variants, off by a single factor or
//! exponent, kept as negative controls so the suite demonstrably
//! distinguishes the validated forms from close-but-wrong ones.

use crate::laurent::{bracket, q_binomial_row, LaurentPolynomial};
use crate::rook::{Board, Rule};
use crate::stirling::{
    bell_number, bell_poly, bell_type2, check_hsu_shiue, stirling, stirling_cd, stirling_type2,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::cell::RefCell;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

/// Outcome of checking one identity instance.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub holds: bool,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
    pub diff: LaurentPolynomial,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(
        identity: &str,
        params: Vec<(&str, i64)>,
        lhs: LaurentPolynomial,
        rhs: LaurentPolynomial,
        note: Option<String>,
    ) -> IdentityReport {
        let diff = &lhs - &rhs;
        IdentityReport {
            identity: identity.to_string(),
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            holds: diff.is_zero(),
            lhs,
            rhs,
            diff,
            note,
        }
    }

    /// Parameters rendered as `k=v` pairs separated by spaces.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = 6 + usize::from(self.note.is_some());
        let mut map = serializer.serialize_map(Some(entries))?;
        map.serialize_entry("identity", &self.identity)?;
        struct Params<'a>(&'a [(String, i64)]);
        impl Serialize for Params<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
        map.serialize_entry("params", &Params(&self.params))?;
        map.serialize_entry("holds", &self.holds)?;
        map.serialize_entry("lhs", &self.lhs)?;
        map.serialize_entry("rhs", &self.rhs)?;
        map.serialize_entry("diff", &self.diff)?;
        if let Some(note) = &self.note {
            map.serialize_entry("note", note)?;
        }
        map.end()
    }
}

/// Finite parameter ranges for a sweep. All bounds are inclusive.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub n_max: u32,
    pub m_max: u32,
    /// Cap on n + m (and on the largest table row a check may touch).
    pub nm_max: u32,
    pub s: (i64, i64),
    pub alpha: (i64, i64),
    pub c: (i64, i64),
    pub d: (i64, i64),
    pub rho: (i64, i64),
    pub beta: (i64, i64),
    pub x0: (i64, i64),
    pub list_len_max: u32,
    pub list_entry_max: u32,
}

impl Default for SweepSpec {
    /// The desk-scale preset.
    fn default() -> SweepSpec {
        SweepSpec {
            n_max: 6,
            m_max: 6,
            nm_max: 6,
            s: (-1, 3),
            alpha: (-1, 2),
            c: (-1, 2),
            d: (-1, 2),
            rho: (-1, 2),
            beta: (-1, 2),
            x0: (0, 2),
            list_len_max: 3,
            list_entry_max: 3,
        }
    }
}

fn range(bounds: (i64, i64)) -> impl Iterator<Item = i64> {
    bounds.0..=bounds.1
}

fn qpow(e: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(1, e)
}

fn bracket_product(args: impl Iterator<Item = i64>) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for t in args {
        acc = &acc * &bracket(t, 1);
    }
    acc
}

fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// (columns, alpha, rooks, rule, s)
type AlphaRookKey = (u32, i64, i64, Rule, i64);

thread_local! {
    static ALPHA_ROOK_SUMS: RefCell<HashMap<AlphaRookKey, LaurentPolynomial>> =
        RefCell::new(HashMap::new());
    static QBINOM_ROWS: RefCell<HashMap<(u32, i64), Vec<LaurentPolynomial>>> =
        RefCell::new(HashMap::new());
}

// Sweeps ask for the same binomial rows over and over; cache whole rows.
fn q_binomial(n: u32, k: i64, e: i64) -> LaurentPolynomial {
    if k < 0 || k > i64::from(n) {
        return LaurentPolynomial::zero();
    }
    QBINOM_ROWS.with(|cache| {
        let mut cache = cache.borrow_mut();
        let row = cache.entry((n, e)).or_insert_with(|| q_binomial_row(n, e));
        row[k as usize].clone()
    })
}

/// Cached rook sum over the alpha staircase with `n` columns; zero when the
/// rook count is infeasible.
fn alpha_rook_sum(n: u32, alpha: i64, rooks: i64, rule: Rule, s: i64) -> LaurentPolynomial {
    if rooks < 0 || rooks > i64::from(n) {
        return LaurentPolynomial::zero();
    }
    ALPHA_ROOK_SUMS.with(|cache| {
        let key = (n, alpha, rooks, rule, s);
        if let Some(hit) = cache.borrow().get(&key) {
            return hit.clone();
        }
        let value = Board::staircase_alpha(n, alpha).rook_sum(rooks as usize, rule, s);
        cache.borrow_mut().insert(key, value.clone());
        value
    })
}

// ---------------------------------------------------------------------------
// alpha staircase expansions
// ---------------------------------------------------------------------------

fn alpha_cols_terms(n: u32, k: i64, alpha: i64, s: i64) -> Vec<LaurentPolynomial> {
    (0..=i64::from(n))
        .map(|r| {
            let mut term = qpow(alpha * r);
            term = &term * &q_binomial(n, r, s);
            term = &term * &stirling(r as u32, k, s);
            &term * &bracket_product((0..i64::from(n) - r).map(|i| alpha + s * i))
        })
        .collect()
}

fn alpha_rows_terms(
    n: u32,
    k: i64,
    alpha: i64,
    s: i64,
    prefactor_exp: i64,
) -> Vec<LaurentPolynomial> {
    (0..=i64::from(n))
        .map(|r| {
            let mut term = qpow(prefactor_exp);
            term = &term * &stirling(n, r, s);
            term = &term * &q_binomial(r as u32, k, s - 1);
            &term * &bracket_product((0..r - k).map(|i| alpha + i * (s - 1)))
        })
        .collect()
}

/// Column-grouped expansion of the alpha staircase rook sum.
pub fn check_alpha_staircase_cols(
    n: u32,
    k: u32,
    alpha: i64,
    s: i64,
    rule: Rule,
) -> IdentityReport {
    let lhs = alpha_rook_sum(n, alpha, i64::from(n) - i64::from(k), rule, s);
    let mut rhs = LaurentPolynomial::zero();
    for term in alpha_cols_terms(n, i64::from(k), alpha, s) {
        rhs += &term;
    }
    IdentityReport::new(
        "alpha_staircase_cols",
        vec![
            ("n", i64::from(n)),
            ("k", i64::from(k)),
            ("alpha", alpha),
            ("s", s),
            ("rule", rule_code(rule)),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Row-grouped expansion of the alpha staircase rook sum. The validated
/// prefactor is `q^(alpha k)`.
pub fn check_alpha_staircase_rows(
    n: u32,
    k: u32,
    alpha: i64,
    s: i64,
    rule: Rule,
) -> IdentityReport {
    alpha_rows_impl(n, k, alpha, s, rule, false)
}

/// Negative control: same expansion with prefactor `q^alpha`.
pub fn check_alpha_staircase_rows_alt(
    n: u32,
    k: u32,
    alpha: i64,
    s: i64,
    rule: Rule,
) -> IdentityReport {
    alpha_rows_impl(n, k, alpha, s, rule, true)
}

fn alpha_rows_impl(n: u32, k: u32, alpha: i64, s: i64, rule: Rule, alt: bool) -> IdentityReport {
    let prefactor_exp = if alt { alpha } else { alpha * i64::from(k) };
    let lhs = alpha_rook_sum(n, alpha, i64::from(n) - i64::from(k), rule, s);
    let mut rhs = LaurentPolynomial::zero();
    for term in alpha_rows_terms(n, i64::from(k), alpha, s, prefactor_exp) {
        rhs += &term;
    }
    IdentityReport::new(
        if alt {
            "alpha_staircase_rows_alt"
        } else {
            "alpha_staircase_rows"
        },
        vec![
            ("n", i64::from(n)),
            ("k", i64::from(k)),
            ("alpha", alpha),
            ("s", s),
            ("rule", rule_code(rule)),
        ],
        lhs,
        rhs,
        alt.then(|| "near-miss variant with prefactor q^alpha instead of q^(alpha k)".to_string()),
    )
}

fn rule_code(rule: Rule) -> i64 {
    match rule {
        Rule::SameRow => 0,
        Rule::BottomShift => 1,
    }
}

// ---------------------------------------------------------------------------
// two-part convolutions for the standard family
// ---------------------------------------------------------------------------

/// Generalized Spivey convolution for Stirling values (column form).
pub fn check_spivey_general(n: u32, m: u32, k: u32, s: i64) -> IdentityReport {
    let lhs = stirling(n + m, i64::from(k), s);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = j * (1 - s) + s * i64::from(m);
            let mut term = stirling(m, j, s);
            term = &term * &qpow(r * a);
            term = &term * &q_binomial(n, r, s);
            term = &term * &stirling(r as u32, i64::from(k) - j, s);
            term = &term * &bracket_product((0..i64::from(n) - r).map(|i| a + s * i));
            rhs += &term;
        }
    }
    IdentityReport::new(
        "spivey_general",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("s", s),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Bell polynomial form of the Spivey convolution, evaluated at `x = x0`.
pub fn check_bell_general(n: u32, m: u32, s: i64, x0: i64) -> IdentityReport {
    let lhs = bell_poly(n + m, s).eval_x(x0);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = j * (1 - s) + s * i64::from(m);
            let mut term = stirling(m, j, s);
            term = &term * &qpow(r * a);
            term = &term * &q_binomial(n, r, s);
            term = &term * &bell_poly(r as u32, s).eval_x(x0);
            term = term.scale(&int_pow(x0, j as u32));
            term = &term * &bracket_product((0..i64::from(n) - r).map(|i| a + s * i));
            rhs += &term;
        }
    }
    IdentityReport::new(
        "bell_general",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("s", s),
            ("x0", x0),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Row form of the Spivey convolution.
pub fn check_spivey_rows(n: u32, m: u32, k: u32, s: i64) -> IdentityReport {
    let lhs = stirling(n + m, i64::from(k), s);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = j * (1 - s) + s * i64::from(m);
            let kj = i64::from(k) - j;
            let mut term = stirling(m, j, s);
            term = &term * &qpow(a * kj);
            term = &term * &q_binomial(r as u32, kj, s - 1);
            term = &term * &stirling(n, r, s);
            term = &term * &bracket_product((0..r - kj).map(|i| a + i * (s - 1)));
            rhs += &term;
        }
    }
    IdentityReport::new(
        "spivey_rows",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("s", s),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Split around a rook-free separator column. `form` 1 uses the column
/// expansion, `form` 2 the row expansion; both expand `S[n+1, m+j+1]`.
pub fn check_separator_split(n: u32, m: u32, j: u32, s: i64, form: u8) -> IdentityReport {
    assert!(m + j <= n, "requires m + j <= n");
    assert!(form == 1 || form == 2);
    let lhs = stirling(n + 1, i64::from(m) + i64::from(j) + 1, s);
    let mut rhs = LaurentPolynomial::zero();
    for k in i64::from(m)..=i64::from(n) {
        let alpha = (k - i64::from(m)) * (s - 1) + k + 1;
        let separator = alpha - 1;
        for r in 0..=i64::from(n) - k {
            let mut term = stirling(k as u32, i64::from(m), s);
            if form == 1 {
                term = &term * &qpow(r * alpha + separator);
                term = &term * &q_binomial((i64::from(n) - k) as u32, r, s);
                term = &term * &stirling(r as u32, i64::from(j), s);
                term = &term * &bracket_product((0..i64::from(n) - k - r).map(|i| alpha + s * i));
            } else {
                term = &term * &qpow(alpha * i64::from(j) + separator);
                term = &term * &q_binomial(r as u32, i64::from(j), s - 1);
                term = &term * &stirling((i64::from(n) - k) as u32, r, s);
                term = &term * &bracket_product((0..r - i64::from(j)).map(|t| alpha + t * (s - 1)));
            }
            rhs += &term;
        }
    }
    IdentityReport::new(
        "separator_split",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("j", i64::from(j)),
            ("s", s),
            ("form", i64::from(form)),
        ],
        lhs,
        rhs,
        None,
    )
}

// ---------------------------------------------------------------------------
// multi-part splits
// ---------------------------------------------------------------------------

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn walk(total: i64, parts: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            walk(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    walk(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Splits the staircase into `len(m_list)` groups of columns.
pub fn check_multisplit_1(m_list: &[u32], k: u32, s: i64) -> IdentityReport {
    let total_m: u32 = m_list.iter().sum();
    let lhs = stirling(total_m, i64::from(k), s);
    let mut rhs = LaurentPolynomial::zero();
    for split in compositions(i64::from(k), m_list.len()) {
        if split.iter().zip(m_list).any(|(&j, &m)| j > i64::from(m)) {
            continue;
        }
        let mut term = LaurentPolynomial::one();
        let mut alpha = 0i64;
        for (i, &m) in m_list.iter().enumerate() {
            let j = split[i];
            term = &term * &alpha_rook_sum(m, alpha, i64::from(m) - j, Rule::SameRow, s);
            alpha += j * (1 - s) + s * i64::from(m);
        }
        rhs += &term;
    }
    let mut params: Vec<(String, i64)> = m_list
        .iter()
        .enumerate()
        .map(|(i, &m)| (format!("m{}", i + 1), i64::from(m)))
        .collect();
    params.push(("k".to_string(), i64::from(k)));
    params.push(("s".to_string(), s));
    let diff = &lhs - &rhs;
    IdentityReport {
        identity: "multisplit_1".to_string(),
        holds: diff.is_zero(),
        params,
        lhs,
        rhs,
        diff,
        note: None,
    }
}

/// Splits the staircase into groups separated by rook-free columns. The
/// separator columns contribute the exponent
/// `sum_i (A_i + i - 1)` with `A_i = sum_{t<=i} (k_t + (k_t - m_t)(s - 1))`.
pub fn check_multisplit_2(k_list: &[u32], m_list: &[u32], s: i64) -> IdentityReport {
    multisplit_2_impl(k_list, m_list, s, false)
}

/// Negative control: drops the `i - 1` offsets from the separator exponent,
/// which is short by `q^((len-1)(len-2)/2)` for three or more groups.
pub fn check_multisplit_2_alt(k_list: &[u32], m_list: &[u32], s: i64) -> IdentityReport {
    multisplit_2_impl(k_list, m_list, s, true)
}

fn multisplit_2_impl(k_list: &[u32], m_list: &[u32], s: i64, alt: bool) -> IdentityReport {
    assert_eq!(
        k_list.len(),
        m_list.len(),
        "group lists must have equal length"
    );
    let groups = k_list.len();
    let n: i64 = k_list.iter().map(|&k| i64::from(k)).sum();
    let total_m: i64 = m_list.iter().map(|&m| i64::from(m)).sum();
    let lhs = stirling(
        (n + groups as i64 - 1).max(0) as u32,
        total_m + groups as i64 - 1,
        s,
    );
    let mut rhs = LaurentPolynomial::zero();
    for split in compositions(n, groups) {
        if split.iter().zip(m_list).any(|(&k, &m)| k < i64::from(m)) {
            continue;
        }
        let mut term = LaurentPolynomial::one();
        let mut alpha = 0i64; // sum of k_t + 1 + (k_t - m_t)(s - 1) over earlier groups
        let mut running = 0i64; // A_i without the +1 per group
        let mut separator_exp = 0i64;
        for (i, (&k, &m)) in split.iter().zip(m_list).enumerate() {
            term = &term * &alpha_rook_sum(k as u32, alpha, k - i64::from(m), Rule::SameRow, s);
            running += k + (k - i64::from(m)) * (s - 1);
            alpha += k + 1 + (k - i64::from(m)) * (s - 1);
            if i + 1 < groups {
                // separator between group i+1 and group i+2
                separator_exp += running;
                if !alt {
                    separator_exp += i as i64;
                }
            }
        }
        rhs += &(&term * &qpow(separator_exp));
    }
    let mut params: Vec<(String, i64)> = k_list
        .iter()
        .enumerate()
        .map(|(i, &k)| (format!("k{}", i + 1), i64::from(k)))
        .collect();
    params.extend(
        m_list
            .iter()
            .enumerate()
            .map(|(i, &m)| (format!("m{}", i + 1), i64::from(m))),
    );
    params.push(("s".to_string(), s));
    let diff = &lhs - &rhs;
    IdentityReport {
        identity: if alt {
            "multisplit_2_alt"
        } else {
            "multisplit_2"
        }
        .to_string(),
        holds: diff.is_zero(),
        params,
        lhs,
        rhs,
        diff,
        note: alt.then(|| "near-miss variant without the per-separator index offsets".to_string()),
    }
}

// ---------------------------------------------------------------------------
// convolutions for the c,d family and its Type II relabeling
// ---------------------------------------------------------------------------

/// Whether the two-weight convolutions apply: the first group must be a
/// real board region when a bottom weight is present, since an empty first
/// column cannot carry `d`.
pub fn cd_split_applies(n: u32, m: u32, d: i64) -> bool {
    m >= 1 || d == 0 || n == 0
}

/// Column-form convolution for the two-weight family.
pub fn check_spivey_general_cd(n: u32, m: u32, k: u32, s: i64, c: i64, d: i64) -> IdentityReport {
    let lhs = stirling_cd(n + m, i64::from(k), s, c, d);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = d + i64::from(m) * c + (i64::from(m) - j) * (s - 1);
            let mut term = stirling_cd(m, j, s, c, d);
            term = &term * &qpow(r * a);
            term = &term * &q_binomial(n, r, c + s - 1);
            term = &term * &stirling_cd(r as u32, i64::from(k) - j, s, c, 0);
            term = &term * &bracket_product((0..i64::from(n) - r).map(|i| a + (c + s - 1) * i));
            rhs += &term;
        }
    }
    IdentityReport::new(
        "spivey_general_cd",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("s", s),
            ("c", c),
            ("d", d),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Column-form convolution for the Type II family. The left side index is
/// `n + m`, matching the convolution structure.
pub fn check_spivey_general_type2(
    n: u32,
    m: u32,
    k: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
) -> IdentityReport {
    let lhs = stirling_type2(n + m, i64::from(k), alpha, beta, rho);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = beta * j - alpha * i64::from(m) - rho;
            let mut term = stirling_type2(m, j, alpha, beta, rho);
            term = &term * &qpow(r * a);
            term = &term * &q_binomial(n, r, -alpha);
            term = &term * &stirling_type2(r as u32, i64::from(k) - j, alpha, beta, 0);
            term = &term
                * &bracket_product(
                    (0..i64::from(n) - r).map(|i| beta * j - rho - alpha * (i64::from(m) + i)),
                );
            rhs += &term;
        }
    }
    IdentityReport::new(
        "spivey_general_type2",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("alpha", alpha),
            ("beta", beta),
            ("rho", rho),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Bell form of the Type II convolution, evaluated at `x = x0`. The group
/// size factor `x^j` is included.
pub fn check_bell_general_type2(
    n: u32,
    m: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
    x0: i64,
) -> IdentityReport {
    bell_type2_impl(n, m, alpha, beta, rho, x0, false)
}

/// Negative control: same convolution without the `x^j` factor.
pub fn check_bell_general_type2_alt(
    n: u32,
    m: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
    x0: i64,
) -> IdentityReport {
    bell_type2_impl(n, m, alpha, beta, rho, x0, true)
}

fn bell_type2_impl(
    n: u32,
    m: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
    x0: i64,
    alt: bool,
) -> IdentityReport {
    let lhs = bell_type2(n + m, alpha, beta, rho).eval_x(x0);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let mut term = stirling_type2(m, j, alpha, beta, rho);
            term = &term * &qpow(r * (beta * j - alpha * i64::from(m) - rho));
            term = &term * &q_binomial(n, r, -alpha);
            term = &term * &bell_type2(r as u32, alpha, beta, 0).eval_x(x0);
            if !alt {
                term = term.scale(&int_pow(x0, j as u32));
            }
            term = &term
                * &bracket_product(
                    (0..i64::from(n) - r).map(|i| beta * j - rho - alpha * (i64::from(m) + i)),
                );
            rhs += &term;
        }
    }
    IdentityReport::new(
        if alt {
            "bell_general_type2_alt"
        } else {
            "bell_general_type2"
        },
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("alpha", alpha),
            ("beta", beta),
            ("rho", rho),
            ("x0", x0),
        ],
        lhs,
        rhs,
        alt.then(|| "near-miss variant without the x^j factor".to_string()),
    )
}

/// Row-form convolution for the two-weight family.
pub fn check_spivey_rows_cd(n: u32, m: u32, k: u32, s: i64, c: i64, d: i64) -> IdentityReport {
    let lhs = stirling_cd(n + m, i64::from(k), s, c, d);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = d + i64::from(m) * c + (i64::from(m) - j) * (s - 1);
            let kj = i64::from(k) - j;
            let mut term = stirling_cd(m, j, s, c, d);
            term = &term * &qpow(a * kj);
            term = &term * &q_binomial(r as u32, kj, s - 1);
            term = &term * &stirling_cd(n, r, s, c, 0);
            term = &term * &bracket_product((0..r - kj).map(|i| a + i * (s - 1)));
            rhs += &term;
        }
    }
    IdentityReport::new(
        "spivey_rows_cd",
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("s", s),
            ("c", c),
            ("d", d),
        ],
        lhs,
        rhs,
        None,
    )
}

/// Row-form convolution for the Type II family, by direct substitution into
/// the two-weight form.
pub fn check_spivey_rows_type2(
    n: u32,
    m: u32,
    k: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
) -> IdentityReport {
    spivey_rows_type2_impl(n, m, k, alpha, beta, rho, false)
}

/// Negative control: bracket arguments globally negated in the product,
/// i.e. `[rho + alpha m - beta (j + i)]` in place of
/// `[beta j - alpha m - rho - beta i]`.
pub fn check_spivey_rows_type2_alt(
    n: u32,
    m: u32,
    k: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
) -> IdentityReport {
    spivey_rows_type2_impl(n, m, k, alpha, beta, rho, true)
}

fn spivey_rows_type2_impl(
    n: u32,
    m: u32,
    k: u32,
    alpha: i64,
    beta: i64,
    rho: i64,
    alt: bool,
) -> IdentityReport {
    let lhs = stirling_type2(n + m, i64::from(k), alpha, beta, rho);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let a = beta * j - alpha * i64::from(m) - rho;
            let kj = i64::from(k) - j;
            let mut term = stirling_type2(m, j, alpha, beta, rho);
            term = &term * &qpow(a * kj);
            term = &term * &q_binomial(r as u32, kj, -beta);
            term = &term * &stirling_type2(n, r, alpha, beta, 0);
            let product = if alt {
                bracket_product((0..r - kj).map(|i| rho + alpha * i64::from(m) - beta * (j + i)))
            } else {
                bracket_product((0..r - kj).map(|i| a - beta * i))
            };
            term = &term * &product;
            rhs += &term;
        }
    }
    IdentityReport::new(
        if alt {
            "spivey_rows_type2_alt"
        } else {
            "spivey_rows_type2"
        },
        vec![
            ("n", i64::from(n)),
            ("m", i64::from(m)),
            ("k", i64::from(k)),
            ("alpha", alpha),
            ("beta", beta),
            ("rho", rho),
        ],
        lhs,
        rhs,
        alt.then(|| "near-miss variant with negated bracket arguments in the product".to_string()),
    )
}

// ---------------------------------------------------------------------------
// classical reductions
// ---------------------------------------------------------------------------

/// q-Bell convolution at `s = 0` with ordinary binomial coefficients.
pub fn check_katriel(n: u32, m: u32) -> IdentityReport {
    let lhs = bell_number(n + m, 0);
    let mut rhs = LaurentPolynomial::zero();
    for r in 0..=i64::from(n) {
        for j in 0..=i64::from(m) {
            let mut term = stirling(m, j, 0);
            term = &term * &qpow(r * j);
            term = &term * &q_binomial(n, r, 0);
            term = &term * &bell_number(r as u32, 0);
            term = &term * &bracket(j, 1).pow((i64::from(n) - r) as u32);
            rhs += &term;
        }
    }
    IdentityReport::new(
        "katriel",
        vec![("n", i64::from(n)), ("m", i64::from(m))],
        lhs,
        rhs,
        None,
    )
}

fn factorial(n: u32) -> BigInt {
    (1..=i64::from(n)).map(BigInt::from).product()
}

fn binom_int(n: u32, r: u32) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..i64::from(r) {
        acc = acc * BigInt::from(i64::from(n) - i) / BigInt::from(i + 1);
    }
    acc
}

fn rising(a: i64, b: u32) -> BigInt {
    (0..i64::from(b)).map(|i| BigInt::from(a + i)).product()
}

fn cycles_at_one(n: u32, j: i64) -> BigInt {
    stirling(n, j, 1).coeff_sum()
}

/// Dual factorial convolution with rising factorials. The validated form
/// carries `binom(n, r)`; the variant with `binom(m, j)` is reported in the
/// note (and separately as `mezo_dual_alt`).
pub fn check_mezo_dual(n: u32, m: u32) -> IdentityReport {
    let lhs = LaurentPolynomial::constant(factorial(n + m));
    let mut corrected = BigInt::zero();
    let mut variant = BigInt::zero();
    for r in 0..=n {
        for j in 0..=m {
            let common =
                cycles_at_one(m, i64::from(j)) * rising(i64::from(m), n - r) * factorial(r);
            corrected += &common * binom_int(n, r);
            variant += &common * binom_int(m, j);
        }
    }
    let variant_holds = variant == factorial(n + m);
    let note = if variant_holds {
        "binom(m, j) variant coincides here".to_string()
    } else {
        format!("binom(m, j) variant fails here with value {variant}")
    };
    IdentityReport::new(
        "mezo_dual",
        vec![("n", i64::from(n)), ("m", i64::from(m))],
        lhs,
        LaurentPolynomial::constant(corrected),
        Some(note),
    )
}

/// Negative control: the dual convolution with `binom(m, j)`.
pub fn check_mezo_dual_alt(n: u32, m: u32) -> IdentityReport {
    let lhs = LaurentPolynomial::constant(factorial(n + m));
    let mut rhs = BigInt::zero();
    for r in 0..=n {
        for j in 0..=m {
            rhs += cycles_at_one(m, i64::from(j))
                * rising(i64::from(m), n - r)
                * binom_int(m, j)
                * factorial(r);
        }
    }
    IdentityReport::new(
        "mezo_dual_alt",
        vec![("n", i64::from(n)), ("m", i64::from(m))],
        lhs,
        LaurentPolynomial::constant(rhs),
        Some("near-miss variant with binom(m, j) in place of binom(n, r)".to_string()),
    )
}

/// Triple-sum factorial convolution over cycle counts.
pub fn check_mezo_factorial(n: u32, m: u32) -> IdentityReport {
    let lhs = LaurentPolynomial::constant(factorial(n + m));
    let mut rhs = BigInt::zero();
    for r in 0..=n {
        for j in 0..=m {
            let cm = cycles_at_one(m, i64::from(j));
            if cm.is_zero() {
                continue;
            }
            let cn = cycles_at_one(n, i64::from(r));
            for k in 0..=r {
                rhs += &cm * &cn * binom_int(r, k) * int_pow(i64::from(m), k);
            }
        }
    }
    IdentityReport::new(
        "mezo_factorial",
        vec![("n", i64::from(n)), ("m", i64::from(m))],
        lhs,
        LaurentPolynomial::constant(rhs),
        None,
    )
}

/// Adapter for the classical defining-relation diagnostic.
pub fn check_hsu_shiue_report(n: u32, alpha: i64, beta: i64, rho: i64) -> IdentityReport {
    let r = check_hsu_shiue(n, alpha, beta, rho);
    let note = format!(
        "satisfying convention: {}; rook boundary satisfies: {}",
        r.satisfying,
        if r.rook_boundary_plus || r.rook_boundary_minus {
            "yes"
        } else {
            "no"
        }
    );
    IdentityReport {
        identity: "hsu_shiue".to_string(),
        params: vec![
            ("n".to_string(), i64::from(n)),
            ("alpha".to_string(), alpha),
            ("beta".to_string(), beta),
            ("rho".to_string(), rho),
        ],
        holds: r.extended_minus,
        lhs: r.lhs,
        rhs: r.rhs_extended_minus,
        diff: r.diff,
        note: Some(note),
    }
}

// ---------------------------------------------------------------------------
// sweep driver
// ---------------------------------------------------------------------------

/// Names of all validated identities, in the order `run_sweep("all")` style
/// drivers should use.
pub const IDENTITY_NAMES: &[&str] = &[
    "alpha_staircase_cols",
    "alpha_staircase_rows",
    "spivey_general",
    "bell_general",
    "spivey_rows",
    "separator_split",
    "multisplit_1",
    "multisplit_2",
    "spivey_general_cd",
    "spivey_general_type2",
    "bell_general_type2",
    "spivey_rows_cd",
    "spivey_rows_type2",
    "katriel",
    "mezo_dual",
    "mezo_factorial",
    "hsu_shiue",
];

/// Deliberately failing near-miss variants (negative controls).
pub const NEGATIVE_CONTROL_NAMES: &[&str] = &[
    "alpha_staircase_rows_alt",
    "bell_general_type2_alt",
    "multisplit_2_alt",
    "spivey_rows_type2_alt",
    "mezo_dual_alt",
];

fn effective_threads(work_items: usize) -> usize {
    let configured = std::env::var("ROOKCALC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1);
    let threads = configured.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    threads.min(work_items.max(1))
}

/// Evaluates `eval` over `tuples`, possibly on several threads, preserving
/// input order. The worker count honors `ROOKCALC_THREADS`.
fn parallel_map<T, F>(tuples: Vec<T>, eval: F) -> Vec<IdentityReport>
where
    T: Send + Sync,
    F: Fn(&T) -> IdentityReport + Sync,
{
    let threads = effective_threads(tuples.len());
    if threads <= 1 || tuples.len() <= 1 {
        return tuples.iter().map(&eval).collect();
    }
    let chunk = tuples.len().div_ceil(threads);
    let mut results: Vec<Vec<IdentityReport>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = tuples
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&eval).collect::<Vec<_>>()))
            .collect();
        results = handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect();
    });
    results.into_iter().flatten().collect()
}

fn nm_pairs(spec: &SweepSpec) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 0..=spec.n_max.min(spec.nm_max) {
        for m in 0..=spec.m_max.min(spec.nm_max - n) {
            out.push((n, m));
        }
    }
    out
}

fn lists(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in lists(len - 1, lo, hi) {
        for v in lo..=hi {
            let mut list = vec![v];
            list.extend(&rest);
            out.push(list);
        }
    }
    out
}

/// Runs the named identity over the Cartesian sweep described by `spec`,
/// skipping tuples that fall outside an identity's precondition. Reports
/// come back in a deterministic order.
pub fn run_sweep(name: &str, spec: &SweepSpec) -> Result<Vec<IdentityReport>, IdentityError> {
    let n_cap = spec.n_max.min(spec.nm_max);
    let reports = match name {
        "alpha_staircase_cols" | "alpha_staircase_rows" | "alpha_staircase_rows_alt" => {
            let mut tuples = Vec::new();
            for n in 0..=n_cap {
                for k in 0..=n {
                    for alpha in range(spec.alpha) {
                        for s in range(spec.s) {
                            for rule in [Rule::SameRow, Rule::BottomShift] {
                                tuples.push((n, k, alpha, s, rule));
                            }
                        }
                    }
                }
            }
            let f = match name {
                "alpha_staircase_cols" => check_alpha_staircase_cols,
                "alpha_staircase_rows" => check_alpha_staircase_rows,
                _ => check_alpha_staircase_rows_alt,
            };
            parallel_map(tuples, |&(n, k, alpha, s, rule)| f(n, k, alpha, s, rule))
        }
        "spivey_general" | "spivey_rows" => {
            let mut tuples = Vec::new();
            for (n, m) in nm_pairs(spec) {
                for k in 0..=n + m {
                    for s in range(spec.s) {
                        tuples.push((n, m, k, s));
                    }
                }
            }
            let f = if name == "spivey_general" {
                check_spivey_general
            } else {
                check_spivey_rows
            };
            parallel_map(tuples, |&(n, m, k, s)| f(n, m, k, s))
        }
        "bell_general" => {
            let mut tuples = Vec::new();
            for (n, m) in nm_pairs(spec) {
                for s in range(spec.s) {
                    for x0 in range(spec.x0) {
                        tuples.push((n, m, s, x0));
                    }
                }
            }
            parallel_map(tuples, |&(n, m, s, x0)| check_bell_general(n, m, s, x0))
        }
        "separator_split" => {
            let mut tuples = Vec::new();
            for n in 0..spec.nm_max.max(1) {
                for m in 0..=n {
                    for j in 0..=n - m {
                        for s in range(spec.s) {
                            for form in [1u8, 2] {
                                tuples.push((n, m, j, s, form));
                            }
                        }
                    }
                }
            }
            parallel_map(tuples, |&(n, m, j, s, form)| {
                check_separator_split(n, m, j, s, form)
            })
        }
        "multisplit_1" => {
            let mut tuples = Vec::new();
            for len in 1..=spec.list_len_max as usize {
                for m_list in lists(len, 1, spec.list_entry_max) {
                    let total: u32 = m_list.iter().sum();
                    if total > spec.nm_max {
                        continue;
                    }
                    for k in 0..=total {
                        for s in range(spec.s) {
                            tuples.push((m_list.clone(), k, s));
                        }
                    }
                }
            }
            parallel_map(tuples, |(m_list, k, s)| check_multisplit_1(m_list, *k, *s))
        }
        "multisplit_2" | "multisplit_2_alt" => {
            // The identity splits a staircase of sum(k_list) + len - 1
            // columns, so the desk cap applies to sum(k_list).
            let mut tuples = Vec::new();
            for len in 1..=spec.list_len_max as usize {
                for k_list in lists(len, 1, spec.list_entry_max) {
                    if k_list.iter().sum::<u32>() > spec.nm_max {
                        continue;
                    }
                    for m_list in lists(len, 0, spec.list_entry_max) {
                        for s in range(spec.s) {
                            tuples.push((k_list.clone(), m_list.clone(), s));
                        }
                    }
                }
            }
            let alt = name.ends_with("_alt");
            parallel_map(tuples, |(k_list, m_list, s)| {
                multisplit_2_impl(k_list, m_list, *s, alt)
            })
        }
        "spivey_general_cd" | "spivey_rows_cd" => {
            let mut tuples = Vec::new();
            for (n, m) in nm_pairs(spec) {
                for k in 0..=n + m {
                    for s in range(spec.s) {
                        for c in range(spec.c) {
                            for d in range(spec.d) {
                                if cd_split_applies(n, m, d) {
                                    tuples.push((n, m, k, s, c, d));
                                }
                            }
                        }
                    }
                }
            }
            let f = if name == "spivey_general_cd" {
                check_spivey_general_cd
            } else {
                check_spivey_rows_cd
            };
            parallel_map(tuples, |&(n, m, k, s, c, d)| f(n, m, k, s, c, d))
        }
        "spivey_general_type2" | "spivey_rows_type2" | "spivey_rows_type2_alt" => {
            let mut tuples = Vec::new();
            for (n, m) in nm_pairs(spec) {
                for k in 0..=n + m {
                    for alpha in range(spec.alpha) {
                        for beta in range(spec.beta) {
                            for rho in range(spec.rho) {
                                if cd_split_applies(n, m, -rho) {
                                    tuples.push((n, m, k, alpha, beta, rho));
                                }
                            }
                        }
                    }
                }
            }
            let f = match name {
                "spivey_general_type2" => check_spivey_general_type2,
                "spivey_rows_type2" => check_spivey_rows_type2,
                _ => check_spivey_rows_type2_alt,
            };
            parallel_map(tuples, |&(n, m, k, alpha, beta, rho)| {
                f(n, m, k, alpha, beta, rho)
            })
        }
        "bell_general_type2" | "bell_general_type2_alt" => {
            let mut tuples = Vec::new();
            for (n, m) in nm_pairs(spec) {
                for alpha in range(spec.alpha) {
                    for beta in range(spec.beta) {
                        for rho in range(spec.rho) {
                            if !cd_split_applies(n, m, -rho) {
                                continue;
                            }
                            for x0 in range(spec.x0) {
                                tuples.push((n, m, alpha, beta, rho, x0));
                            }
                        }
                    }
                }
            }
            let alt = name.ends_with("_alt");
            parallel_map(tuples, |&(n, m, alpha, beta, rho, x0)| {
                bell_type2_impl(n, m, alpha, beta, rho, x0, alt)
            })
        }
        "katriel" => parallel_map(nm_pairs(spec), |&(n, m)| check_katriel(n, m)),
        "mezo_dual" | "mezo_dual_alt" | "mezo_factorial" => {
            let f = match name {
                "mezo_dual" => check_mezo_dual,
                "mezo_dual_alt" => check_mezo_dual_alt,
                _ => check_mezo_factorial,
            };
            parallel_map(nm_pairs(spec), |&(n, m)| f(n, m))
        }
        "hsu_shiue" => {
            let mut tuples = Vec::new();
            for n in 0..=n_cap {
                for alpha in range(spec.alpha) {
                    for beta in range(spec.beta) {
                        for rho in range(spec.rho) {
                            tuples.push((n, alpha, beta, rho));
                        }
                    }
                }
            }
            parallel_map(tuples, |&(n, alpha, beta, rho)| {
                check_hsu_shiue_report(n, alpha, beta, rho)
            })
        }
        _ => return Err(IdentityError::UnknownIdentity(name.to_string())),
    };
    Ok(reports)
}
