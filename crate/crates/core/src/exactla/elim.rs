//! Fraction-free elimination and the rank dispatcher.

use std::cell::RefCell;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::modular::{modular_rank, random_prime};
use super::{Scalar, SparseMatrix, SparseVec, Subspace};

type IntRow = Vec<(usize, BigInt)>;

const NO_PIVOT: usize = usize::MAX;

/// Clear denominators and divide by the content; the leading entry is made positive.
fn int_row(v: &SparseVec) -> IntRow {
    let mut l = BigInt::one();
    for (_, q) in v.entries() {
        if !q.denom().is_one() {
            l = l.lcm(q.denom());
        }
    }
    let mut row: IntRow = v
        .entries()
        .iter()
        .map(|(i, q)| (*i, q.numer() * (&l / q.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, x) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let negate = first.1.is_negative();
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    if negate {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
}

/// Eliminate column `col` of `x` using `y`, whose entry at `col` is nonzero.
fn eliminate(x: &IntRow, y: &IntRow, col: usize) -> IntRow {
    let a = &x[x
        .binary_search_by_key(&col, |e| e.0)
        .expect("entry present")]
    .1;
    let b = &y[y
        .binary_search_by_key(&col, |e| e.0)
        .expect("pivot present")]
    .1;
    let g = a.gcd(b);
    let (fx, fy) = (b / &g, a / &g);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map_or(NO_PIVOT, |e| e.0);
        let cj = y.get(j).map_or(NO_PIVOT, |e| e.0);
        if ci < cj {
            out.push((ci, &fx * &x[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&fy * &y[j].1)));
            j += 1;
        } else {
            let v = &fx * &x[i].1 - &fy * &y[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Incremental semi-echelon basis: every stored row has a distinct leading column.
struct IntEchelon {
    rows: Vec<IntRow>,
    pivot_row: Vec<usize>,
}

impl IntEchelon {
    fn new(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(&(c, _)) = row.first() {
            let k = self.pivot_row[c];
            if k == NO_PIVOT {
                break;
            }
            row = eliminate(&row, &self.rows[k], c);
        }
        row
    }

    fn insert(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(c, _)) => {
                self.pivot_row[c] = self.rows.len();
                self.rows.push(row);
                true
            }
        }
    }

    fn into_rref(self, ncols: usize) -> Rref {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![NO_PIVOT; ncols];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = k;
        }
        // Back substitution from the last pivot upwards.
        for k in (0..rows.len()).rev() {
            let targets: Vec<usize> = rows[k]
                .iter()
                .skip(1)
                .filter(|(c, _)| is_pivot[*c] != NO_PIVOT)
                .map(|(c, _)| *c)
                .collect();
            for c in targets {
                let reduced = eliminate(&rows[k], &rows[is_pivot[c]], c);
                rows[k] = reduced;
            }
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                let lead = r[0].1.clone();
                let entries = r
                    .into_iter()
                    .map(|(c, x)| (c, BigRational::new(x, lead.clone())))
                    .collect();
                SparseVec::from_sorted_unchecked(ncols, entries)
            })
            .collect();
        Rref {
            ncols,
            rows,
            pivots,
        }
    }
}

/// Reduced row echelon form: pivots strictly increase, pivot entries are 1,
/// and every other row vanishes at each pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

/// RREF of the span of `vectors` in `Q^ncols`.
pub fn row_echelon<'a>(ncols: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Rref {
    let mut ech = IntEchelon::new(ncols);
    for v in vectors {
        assert_eq!(v.dim(), ncols, "vector length mismatch");
        if !v.is_zero() {
            ech.insert(int_row(v));
        }
    }
    ech.into_rref(ncols)
}

/// Rank by fraction-free elimination.
pub fn exact_rank(m: &SparseMatrix) -> usize {
    let mut ech = IntEchelon::new(m.cols());
    let mut r = 0;
    for v in m.row_vectors() {
        if !v.is_zero() && ech.insert(int_row(v)) {
            r += 1;
        }
    }
    r
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    #[default]
    Modular,
}

impl std::str::FromStr for Backend {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(Backend::Exact),
            "modular" => Ok(Backend::Modular),
            other => Err(format!("unknown backend {other:?}")),
        }
    }
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Modular => "modular",
        })
    }
}

/// Per-thread rank settings. `audit_rate` is the probability that a modular
/// rank is recomputed exactly and compared.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankConfig {
    pub backend: Backend,
    pub audit_rate: f64,
    pub seed: u64,
}

impl Default for RankConfig {
    fn default() -> Self {
        Self {
            backend: Backend::Modular,
            audit_rate: 0.0,
            seed: 0x5eed,
        }
    }
}

struct RankState {
    config: RankConfig,
    rng: ChaCha8Rng,
}

impl RankState {
    fn new(config: RankConfig) -> Self {
        Self {
            config,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
        }
    }
}

thread_local! {
    static STATE: RefCell<RankState> = RefCell::new(RankState::new(RankConfig::default()));
}

/// Replace this thread's rank settings and reseed its prime generator.
pub fn set_rank_config(config: RankConfig) {
    STATE.with(|s| *s.borrow_mut() = RankState::new(config));
}

/// Run `f` under `config`, restoring the previous settings afterwards.
pub fn with_rank_config<T>(config: RankConfig, f: impl FnOnce() -> T) -> T {
    let saved = STATE.with(|s| std::mem::replace(&mut *s.borrow_mut(), RankState::new(config)));
    let out = f();
    STATE.with(|s| *s.borrow_mut() = saved);
    out
}

static CALLS: AtomicU64 = AtomicU64::new(0);
static MODULAR_AGREED: AtomicU64 = AtomicU64::new(0);
static ESCALATED: AtomicU64 = AtomicU64::new(0);
static AUDITED: AtomicU64 = AtomicU64::new(0);
static MISMATCHES: AtomicU64 = AtomicU64::new(0);

/// Process-wide counters of [`rank`] calls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RankStats {
    pub calls: u64,
    pub modular_agreed: u64,
    pub escalated: u64,
    pub audited: u64,
    pub mismatches: u64,
}

pub fn rank_stats() -> RankStats {
    RankStats {
        calls: CALLS.load(Ordering::Relaxed),
        modular_agreed: MODULAR_AGREED.load(Ordering::Relaxed),
        escalated: ESCALATED.load(Ordering::Relaxed),
        audited: AUDITED.load(Ordering::Relaxed),
        mismatches: MISMATCHES.load(Ordering::Relaxed),
    }
}

pub fn reset_rank_stats() {
    for c in [&CALLS, &MODULAR_AGREED, &ESCALATED, &AUDITED, &MISMATCHES] {
        c.store(0, Ordering::Relaxed);
    }
}

/// Rank over `Q` using this thread's backend.
///
/// The modular backend draws two distinct primes near `2^62`; agreeing ranks
/// are returned, otherwise the exact path decides.
pub fn rank(m: &SparseMatrix) -> usize {
    CALLS.fetch_add(1, Ordering::Relaxed);
    if m.is_zero() {
        return 0;
    }
    let (config, primes, audit) = STATE.with(|s| {
        let mut s = s.borrow_mut();
        let config = s.config;
        if config.backend == Backend::Exact {
            return (config, None, false);
        }
        let p = random_prime(&mut s.rng);
        let mut q = random_prime(&mut s.rng);
        while q == p {
            q = random_prime(&mut s.rng);
        }
        let audit = config.audit_rate > 0.0 && s.rng.gen_bool(config.audit_rate.min(1.0));
        (config, Some((p, q)), audit)
    });
    let Some((p, q)) = primes else {
        return exact_rank(m);
    };
    debug_assert_eq!(config.backend, Backend::Modular);
    match (modular_rank(m, p), modular_rank(m, q)) {
        (Some(a), Some(b)) if a == b => {
            MODULAR_AGREED.fetch_add(1, Ordering::Relaxed);
            if audit {
                AUDITED.fetch_add(1, Ordering::Relaxed);
                let exact = exact_rank(m);
                if exact != a {
                    MISMATCHES.fetch_add(1, Ordering::Relaxed);
                    return exact;
                }
            }
            a
        }
        _ => {
            ESCALATED.fetch_add(1, Ordering::Relaxed);
            exact_rank(m)
        }
    }
}

/// `{v : M v = 0}` inside `Q^cols`.
pub fn kernel_basis(m: &SparseMatrix) -> Subspace {
    let rref = row_echelon(m.cols(), m.row_vectors());
    let mut is_pivot = vec![false; m.cols()];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.cols()];
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        for (c, v) in row.entries() {
            if !is_pivot[*c] {
                columns[*c].push((p, -v));
            }
        }
    }
    let vectors: Vec<SparseVec> = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut e = std::mem::take(&mut columns[f]);
            e.push((f, Scalar::one()));
            SparseVec::from_entries(m.cols(), e)
        })
        .collect();
    Subspace::from_vectors(m.cols(), &vectors)
}

/// Column space of `M` inside `Q^rows`.
pub fn image_basis(m: &SparseMatrix) -> Subspace {
    Subspace::from_vectors(m.rows(), &m.columns())
}
