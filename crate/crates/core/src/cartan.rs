//! Static structure of a simple Lie algebra: Cartan matrix, root system,
//! normalized invariant form, Weyl-group operations.
//!
//! Conventions, fixed here once and used by the whole crate:
//!
//! * Node numbering follows Bourbaki for every series. In particular the
//!   56-dimensional module of E7 is `ϖ7`, the adjoint of E8 is `ϖ8`, and
//!   the 26-dimensional module of F4 is `ϖ4`. Node indices in the public
//!   API are 1-based to match that convention.
//! * A weight is stored as its vector of Dynkin labels in the
//!   fundamental-weight basis: `labels[i] = ⟨λ, α_{i+1}^∨⟩`. Labels may be
//!   negative; a weight is dominant iff all labels are ≥ 0.
//! * The Cartan matrix is oriented so that row `i` holds the Dynkin labels
//!   of the simple root `α_{i+1}`, i.e. `a[i][j] = ⟨α_{i+1}, α_{j+1}^∨⟩`.
//!   The simple reflection `s_i` therefore subtracts `labels[i]` times row
//!   `i` from a label vector.
//! * The invariant bilinear form is normalized so that the highest root θ
//!   satisfies `(θ, θ) = 2`. Long simple roots then have symmetrizer
//!   `d_i = (α_i, α_i)/2 = 1`; short ones have `1/2` (B, C, F4) or `1/3`
//!   (G2).
//!
//! Root systems are generated from the Cartan matrix by reflection
//! closure, not read from tables, so the structural invariants
//! (`(θ,θ) = 2`, `h∨ = 1 + (θ,ρ)`, `dim 𝔤 = rank + 2·|Δ₊|`) are genuine
//! checks rather than restatements of the input.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Exact rational scalar used for all form values.
pub type Rat = BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The nine series of the Killing–Cartan classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A simple Lie algebra, identified by series and rank.
///
/// Construction enforces the rank constraints of the classification, so a
/// `LieType` value always denotes an actual simple algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    /// Allowed ranks: A r≥1, B r≥2, C r≥2, D r≥3, E r∈{6,7,8}, F r=4, G r=2.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let (ok, allowed) = match series {
            Series::A => (rank >= 1, "r >= 1"),
            Series::B => (rank >= 2, "r >= 2"),
            Series::C => (rank >= 2, "r >= 2"),
            Series::D => (rank >= 3, "r >= 3"),
            Series::E => ((6..=8).contains(&rank), "r in {6, 7, 8}"),
            Series::F => (rank == 4, "r = 4"),
            Series::G => (rank == 2, "r = 2"),
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidRank {
                series: series.letter(),
                rank,
                allowed,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses `"A1"`, `"E8"`, `"D10"`, ...
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseType(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().ok_or_else(bad)? {
            'A' | 'a' => Series::A,
            'B' | 'b' => Series::B,
            'C' | 'c' => Series::C,
            'D' | 'd' => Series::D,
            'E' | 'e' => Series::E,
            'F' | 'f' => Series::F,
            'G' | 'g' => Series::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        LieType::new(series, rank)
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

/// A weight in the fundamental-weight basis (vector of Dynkin labels).
///
/// The derived `Ord` is plain lexicographic on labels and is used for
/// deterministic container ordering only; order comparisons that must
/// refine the dominance order go through [`CartanData::graded_lex_cmp`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_node` (1-based Bourbaki node index).
    pub fn fundamental(rank: usize, node: usize) -> Self {
        assert!(
            (1..=rank).contains(&node),
            "fundamental weight index {node} out of range 1..={rank}"
        );
        let mut labels = vec![0; rank];
        labels[node - 1] = 1;
        Weight(labels)
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&l| l >= 0)
    }

    pub(crate) fn into_labels(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"[0,0,1]"` (whitespace tolerated, brackets required).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseWeight(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Err(bad());
        }
        let labels = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(labels))
    }
}

/// A root, stored both in simple-root coordinates and as Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    coords: Vec<i64>,
    labels: Vec<i64>,
}

impl Root {
    /// Coefficients over the simple roots.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Dynkin labels (the root seen as a weight).
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Height: sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// Immutable structural data of one simple Lie algebra.
///
/// Built once per type (see [`cartan_data`]); construction is pure and
/// deterministic, and the value is safe to share across threads.
#[derive(Debug, Clone)]
pub struct CartanData {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<Rat>,
    form: Vec<Vec<Rat>>,
    fund_heights: Vec<Rat>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    comarks: Vec<i64>,
    dual_coxeter: i64,
    algebra_dim: u64,
}

/// Dynkin diagram as an edge list plus symmetrizers `d_i = (α_i, α_i)/2`,
/// 0-based nodes, Bourbaki numbering.
fn diagram(series: Series, rank: usize) -> (Vec<(usize, usize)>, Vec<Rat>) {
    let chain: Vec<(usize, usize)> = (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match series {
        Series::A => (chain, vec![rat(1); rank]),
        Series::B => {
            let mut d = vec![rat(1); rank];
            d[rank - 1] = rat_frac(1, 2);
            (chain, d)
        }
        Series::C => {
            let mut d = vec![rat_frac(1, 2); rank];
            d[rank - 1] = rat(1);
            (chain, d)
        }
        Series::D => {
            // fork: nodes r-1 and r both attach to r-2
            let mut edges: Vec<(usize, usize)> = (0..rank - 3).map(|i| (i, i + 1)).collect();
            edges.push((rank - 3, rank - 2));
            edges.push((rank - 3, rank - 1));
            (edges, vec![rat(1); rank])
        }
        Series::E => {
            // chain 1-3-4-5-...-r with node 2 attached to node 4
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..rank - 1 {
                edges.push((i, i + 1));
            }
            (edges, vec![rat(1); rank])
        }
        Series::F => {
            let d = vec![rat(1), rat(1), rat_frac(1, 2), rat_frac(1, 2)];
            (chain, d)
        }
        Series::G => (vec![(0, 1)], vec![rat_frac(1, 3), rat(1)]),
    }
}

/// Exact inverse by Gauss–Jordan elimination. Panics on a singular input
/// (Cartan matrices of simple algebras never are).
fn invert(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

impl CartanData {
    /// Builds the full structural data for `lie_type`.
    pub fn build(lie_type: LieType) -> Self {
        let r = lie_type.rank();
        let (edges, symmetrizers) = diagram(lie_type.series(), r);

        // Cartan matrix: a[i][j] = (α_i, α_j) / d_j with (α_i, α_j) = -max(d_i, d_j)
        // for adjacent nodes.
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            cartan[i][i] = 2;
        }
        for &(i, j) in &edges {
            let m = symmetrizers[i].clone().max(symmetrizers[j].clone());
            for (x, y) in [(i, j), (j, i)] {
                let e = -(m.clone() / &symmetrizers[y]);
                assert!(e.is_integer(), "non-integer Cartan entry");
                cartan[x][y] = int_to_i64(e.to_integer());
            }
        }

        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&e| rat(e)).collect())
            .collect();
        let inv_cartan = invert(&cartan_rat);

        // (ϖ_i, ϖ_j) = (A⁻¹)_{ij} d_j; symmetric by d A being symmetric.
        let form: Vec<Vec<Rat>> = (0..r)
            .map(|i| (0..r).map(|j| &inv_cartan[i][j] * &symmetrizers[j]).collect())
            .collect();
        for i in 0..r {
            for j in 0..r {
                assert_eq!(form[i][j], form[j][i], "form not symmetric");
            }
        }

        let fund_heights: Vec<Rat> = (0..r)
            .map(|i| inv_cartan[i].iter().fold(Rat::zero(), |acc, x| acc + x))
            .collect();

        // Roots by reflection closure from the simple roots.
        let labels_of = |coords: &[i64]| -> Vec<i64> {
            (0..r)
                .map(|j| (0..r).map(|k| coords[k] * cartan[k][j]).sum())
                .collect()
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push(e);
        }
        while let Some(coords) = queue.pop() {
            let labels = labels_of(&coords);
            for i in 0..r {
                let mut refl = coords.clone();
                refl[i] -= labels[i];
                if seen.insert(refl.clone()) {
                    queue.push(refl);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen
            .iter()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .map(|c| Root {
                coords: c.clone(),
                labels: labels_of(c),
            })
            .collect();
        positive_roots.sort_by(|a, b| (a.height(), &a.coords).cmp(&(b.height(), &b.coords)));
        assert_eq!(seen.len(), 2 * positive_roots.len(), "root count parity");

        let max_height = positive_roots.last().expect("no roots").height();
        let top: Vec<&Root> = positive_roots
            .iter()
            .filter(|rt| rt.height() == max_height)
            .collect();
        assert_eq!(top.len(), 1, "highest root not unique");
        let highest_root = top[0].clone();
        assert!(
            highest_root.labels.iter().all(|&l| l >= 0),
            "highest root not dominant"
        );

        // comark_k = t_k d_k where θ = Σ t_k α_k; always integers.
        let comarks: Vec<i64> = (0..r)
            .map(|k| {
                let c = rat(highest_root.coords[k]) * &symmetrizers[k];
                assert!(c.is_integer(), "non-integer comark");
                int_to_i64(c.to_integer())
            })
            .collect();
        let dual_coxeter = 1 + comarks.iter().sum::<i64>();
        let algebra_dim = r as u64 + 2 * positive_roots.len() as u64;

        let data = CartanData {
            lie_type,
            cartan,
            symmetrizers,
            form,
            fund_heights,
            positive_roots,
            highest_root,
            comarks,
            dual_coxeter,
            algebra_dim,
        };

        // (θ,θ) = 2 pins the normalization; h∨ = 1 + (θ,ρ) cross-checks the
        // form against the comark route.
        let theta = Weight::new(data.highest_root.labels.clone());
        assert_eq!(data.form_dot(theta.labels(), theta.labels()), rat(2));
        let rho = data.weyl_vector();
        assert_eq!(
            rat(data.dual_coxeter),
            rat(1) + data.form_dot(theta.labels(), rho.labels())
        );
        data
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// Cartan matrix; row `i` = Dynkin labels of the simple root `α_{i+1}`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizers `d_i = (α_i, α_i)/2`.
    pub fn symmetrizers(&self) -> &[Rat] {
        &self.symmetrizers
    }

    /// Gram matrix of the fundamental weights, `F_{ij} = (ϖ_i, ϖ_j)`.
    pub fn form_matrix(&self) -> &[Vec<Rat>] {
        &self.form
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> Weight {
        Weight::new(self.highest_root.labels.clone())
    }

    pub fn highest_root_coords(&self) -> &[i64] {
        &self.highest_root.coords
    }

    /// ρ = Σ ϖ_i (all labels 1).
    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// Comarks: `level(λ) = Σ comark_i · λ_i = (λ, θ)`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn algebra_dim(&self) -> u64 {
        self.algebra_dim
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    /// Invariant form on weights, `λᵀ F μ`, exact.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Rat> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        Ok(self.form_dot(a.labels(), b.labels()))
    }

    pub(crate) fn form_dot(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += &self.form[i][j] * rat(ai * bj);
            }
        }
        acc
    }

    /// `(λ, α)` for a root `α`, via `(λ, α_k) = λ_k d_k`.
    pub(crate) fn root_pairing(&self, labels: &[i64], root: &Root) -> Rat {
        let mut acc = Rat::zero();
        for (k, &c) in root.coords.iter().enumerate() {
            if c != 0 && labels[k] != 0 {
                acc += &self.symmetrizers[k] * rat(c * labels[k]);
            }
        }
        acc
    }

    /// `(λ, θ)`, an integer for integral weights.
    pub fn level(&self, w: &Weight) -> Result<i64> {
        self.check_rank(w)?;
        Ok(self
            .comarks
            .iter()
            .zip(w.labels())
            .map(|(&c, &l)| c * l)
            .sum())
    }

    /// Height of a weight as a rational combination of simple roots.
    pub(crate) fn height(&self, labels: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (i, &l) in labels.iter().enumerate() {
            if l != 0 {
                acc += &self.fund_heights[i] * rat(l);
            }
        }
        acc
    }

    /// Total order refining the dominance order: height first, then labels.
    pub(crate) fn graded_lex_cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b))
    }

    /// Simple reflection `s_i` acting on Dynkin labels, in place.
    pub(crate) fn reflect(&self, labels: &mut [i64], i: usize) {
        let c = labels[i];
        if c != 0 {
            for (j, l) in labels.iter_mut().enumerate() {
                *l -= c * self.cartan[i][j];
            }
        }
    }

    /// Reflects `labels` into the dominant chamber.
    pub(crate) fn dominantize(&self, labels: &mut [i64]) {
        let mut guard = 0u64;
        loop {
            match labels.iter().position(|&l| l < 0) {
                Some(i) => self.reflect(labels, i),
                None => return,
            }
            guard += 1;
            assert!(guard < 100_000_000, "dominantize failed to terminate");
        }
    }

    /// Dominant representative with the sign of the reflecting Weyl word;
    /// `None` when the weight sits on a chamber wall (some label hits 0).
    pub(crate) fn dominantize_signed(&self, labels: &mut [i64]) -> Option<i8> {
        let mut sign = 1i8;
        let mut guard = 0u64;
        loop {
            if labels.iter().any(|&l| l == 0) {
                return None;
            }
            match labels.iter().position(|&l| l < 0) {
                Some(i) => {
                    self.reflect(labels, i);
                    sign = -sign;
                }
                None => return Some(sign),
            }
            guard += 1;
            assert!(guard < 100_000_000, "dominantize_signed failed to terminate");
        }
    }

    /// Dominant representative of the Weyl orbit of `w`.
    pub fn dominant_rep(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        let mut labels = w.labels().to_vec();
        self.dominantize(&mut labels);
        Ok(Weight::new(labels))
    }

    /// Full Weyl orbit of `w`, as a deterministically ordered set.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_rank(w)?;
        let mut orbit: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = vec![w.labels().to_vec()];
        orbit.insert(w.clone());
        while let Some(labels) = queue.pop() {
            for i in 0..self.rank() {
                if labels[i] != 0 {
                    let mut refl = labels.clone();
                    self.reflect(&mut refl, i);
                    let cand = Weight::new(refl.clone());
                    if orbit.insert(cand) {
                        queue.push(refl);
                    }
                }
            }
        }
        Ok(orbit)
    }

    /// Dual (contragredient) highest weight `λ* = -w₀(λ)`.
    pub fn dual_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NonDominant(w.clone()));
        }
        let mut labels: Vec<i64> = w.labels().iter().map(|&l| -l).collect();
        self.dominantize(&mut labels);
        Ok(Weight::new(labels))
    }

    /// Fault-injection hook for the verification harness: scales one entry
    /// of the form matrix (and its mirror) by `factor`.
    pub(crate) fn scale_form_entry(&mut self, i: usize, j: usize, factor: Rat) {
        self.form[i][j] *= &factor;
        if i != j {
            self.form[j][i] *= &factor;
        }
    }
}

fn int_to_i64(n: BigInt) -> i64 {
    use num::ToPrimitive;
    n.to_i64().expect("value exceeds i64")
}

static CARTAN_CACHE: OnceLock<Mutex<HashMap<LieType, Arc<CartanData>>>> = OnceLock::new();

/// Shared, memoized [`CartanData`] for `lie_type`. Construction is pure,
/// so concurrent first use is benign.
pub fn cartan_data(lie_type: LieType) -> Arc<CartanData> {
    let cache = CARTAN_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("cartan cache poisoned");
    map.entry(lie_type)
        .or_insert_with(|| Arc::new(CartanData::build(lie_type)))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn all_test_types() -> Vec<LieType> {
        ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D3", "D4", "D5", "E6", "E7",
         "E8", "F4", "G2"]
            .iter()
            .map(|s| ty(s))
            .collect()
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "B3", "C2", "D10", "E6", "E7", "E8", "F4", "G2"] {
            let t: LieType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!(ty("e8"), ty("E8"));
        for s in ["", "H5", "A0", "B1", "D2", "E5", "E9", "F3", "G3", "8E", "A", "A-1", "A 1"] {
            assert!(s.parse::<LieType>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn weight_parse_and_display() {
        let w: Weight = "[0, -1, 2]".parse().unwrap();
        assert_eq!(w.labels(), &[0, -1, 2]);
        assert_eq!(w.to_string(), "[0,-1,2]");
        for s in ["", "[]", "0,1", "[0,1", "[a]", "[1 2]"] {
            assert!(s.parse::<Weight>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn a1_smallest_case() {
        let cd = CartanData::build(ty("A1"));
        assert_eq!(cd.highest_root().labels(), &[2]); // θ = α₁
        assert_eq!(cd.inner(&cd.highest_root(), &cd.highest_root()).unwrap(), rat(2));
        assert_eq!(cd.dual_coxeter_number(), 2);
        assert_eq!(cd.algebra_dim(), 3);
        let w = Weight::fundamental(1, 1);
        assert_eq!(cd.inner(&w, &w).unwrap(), rat_frac(1, 2));
    }

    #[test]
    fn e8_structure() {
        let cd = cartan_data(ty("E8"));
        assert_eq!(cd.algebra_dim(), 248);
        assert_eq!(cd.dual_coxeter_number(), 30);
        assert_eq!(cd.positive_roots().len(), 120);
        // θ = ϖ₈ for E8
        assert_eq!(cd.highest_root(), Weight::fundamental(8, 8));
        assert_eq!(cd.inner(&cd.highest_root(), &cd.highest_root()).unwrap(), rat(2));
    }

    #[test]
    fn f4_structure() {
        let cd = cartan_data(ty("F4"));
        assert_eq!(cd.algebra_dim(), 52);
        assert_eq!(cd.dual_coxeter_number(), 9);
        assert_eq!(cd.positive_roots().len(), 24);
        assert_eq!(cd.highest_root(), Weight::fundamental(4, 1));
    }

    #[test]
    fn structural_invariants_all_types() {
        for t in all_test_types() {
            let cd = CartanData::build(t);
            let theta = cd.highest_root();
            assert!(theta.is_dominant(), "{t}: θ not dominant");
            assert_eq!(cd.inner(&theta, &theta).unwrap(), rat(2), "{t}: (θ,θ) ≠ 2");
            let rho = cd.weyl_vector();
            assert_eq!(
                rat(cd.dual_coxeter_number()),
                rat(1) + cd.inner(&theta, &rho).unwrap(),
                "{t}: h∨ ≠ 1 + (θ,ρ)"
            );
            assert_eq!(
                cd.algebra_dim(),
                t.rank() as u64 + 2 * cd.positive_roots().len() as u64,
                "{t}: dim mismatch"
            );
            assert_eq!(cd.level(&theta).unwrap(), 2, "{t}: level(θ) ≠ (θ,θ)");
            // form symmetric
            let f = cd.form_matrix();
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    assert_eq!(f[i][j], f[j][i]);
                }
            }
        }
    }

    #[test]
    fn reflection_closure_of_roots() {
        for t in [ty("A3"), ty("B3"), ty("C3"), ty("D4"), ty("F4"), ty("G2")] {
            let cd = CartanData::build(t);
            let mut all: HashSet<Vec<i64>> = HashSet::new();
            for r in cd.positive_roots() {
                all.insert(r.coords().to_vec());
                all.insert(r.coords().iter().map(|&c| -c).collect());
            }
            for r in cd.positive_roots() {
                for i in 0..t.rank() {
                    let mut coords = r.coords().to_vec();
                    coords[i] -= r.labels()[i];
                    assert!(all.contains(&coords), "{t}: reflection left the root set");
                }
            }
        }
    }

    #[test]
    fn inner_bilinear_and_zero() {
        let cd = cartan_data(ty("F4"));
        let zero = Weight::zero(4);
        let w = Weight::new(vec![1, 2, 0, 3]);
        assert_eq!(cd.inner(&zero, &w).unwrap(), rat(0));
        assert_eq!(cd.inner(&w, &zero).unwrap(), rat(0));
        let bad = Weight::zero(3);
        assert!(matches!(cd.inner(&bad, &w), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn weyl_orbits() {
        let a1 = cartan_data(ty("A1"));
        let orbit = a1.weyl_orbit(&Weight::fundamental(1, 1)).unwrap();
        assert_eq!(
            orbit.into_iter().collect::<Vec<_>>(),
            vec![Weight::new(vec![-1]), Weight::new(vec![1])]
        );

        let a2 = cartan_data(ty("A2"));
        let orbit = a2.weyl_orbit(&Weight::fundamental(2, 1)).unwrap();
        assert_eq!(orbit.len(), 3);
        let dominant: Vec<_> = orbit.iter().filter(|w| w.is_dominant()).collect();
        assert_eq!(dominant.len(), 1, "orbit must contain exactly one dominant weight");

        let zero = Weight::zero(2);
        assert_eq!(a2.weyl_orbit(&zero).unwrap().len(), 1);
    }

    #[test]
    fn dual_weights() {
        let a2 = cartan_data(ty("A2"));
        assert_eq!(
            a2.dual_weight(&Weight::fundamental(2, 1)).unwrap(),
            Weight::fundamental(2, 2)
        );
        assert_eq!(a2.dual_weight(&Weight::zero(2)).unwrap(), Weight::zero(2));
        assert!(matches!(
            a2.dual_weight(&Weight::new(vec![-1, 0])),
            Err(Error::NonDominant(_))
        ));

        // -w₀ is the identity on E8: every dominant weight is self-dual.
        let e8 = cartan_data(ty("E8"));
        for node in 1..=8 {
            let w = Weight::fundamental(8, node);
            assert_eq!(e8.dual_weight(&w).unwrap(), w);
        }

        // duality is an involution
        for t in [ty("A3"), ty("D5"), ty("E6")] {
            let cd = cartan_data(t);
            for node in 1..=t.rank() {
                let w = Weight::fundamental(t.rank(), node);
                let d = cd.dual_weight(&w).unwrap();
                assert_eq!(cd.dual_weight(&d).unwrap(), w, "{t}: dual not involutive");
            }
        }
    }

    #[test]
    fn graded_lex_refines_dominance() {
        let cd = cartan_data(ty("B3"));
        // λ > μ in dominance order ⟹ graded-lex greater
        let theta = cd.highest_root();
        let zero = Weight::zero(3);
        assert_eq!(
            cd.graded_lex_cmp(theta.labels(), zero.labels()),
            Ordering::Greater
        );
        let w1 = Weight::fundamental(3, 1);
        assert_eq!(cd.graded_lex_cmp(theta.labels(), w1.labels()), Ordering::Greater);
    }
}
