//! Level-`ℓ` structures: the alcove of admissible weights, classical
//! tensor decomposition, fusion coefficients, and genus-`g`
//! conformal-block dimensions.
//!
//! Fusion coefficients are computed by the Kac–Walton prescription: the
//! classical tensor multiplicities are folded into the level-`ℓ` alcove by
//! the affine Weyl group at shifted level `ℓ + h∨`, accumulating signs;
//! weights on alcove walls contribute nothing. The three-point number
//! `N(λ, μ, ν)` is symmetric in all arguments and `N(λ, μ, 0) = δ_{μ,λ*}`.
//!
//! Block dimensions follow the factorization recursion: a genus-`g`
//! surface loses a handle against a sum over dual pairs `(μ, μ*)`, and a
//! genus-0 surface with more than three points is split by fusing labels.
//! The default evaluation order reduces genus first and then fuses
//! left-associatively; [`BlockStrategy::FuseFirst`] evaluates along a
//! different decomposition and must give identical results (the test
//! suites compare the two).
//!
//! Per-level fusion tables are cached as a full three-index tensor while
//! `|P_ℓ|³` stays below a configurable bound (default 10⁶ entries, see
//! [`set_fusion_table_bound`]); larger alcoves fall back to on-demand
//! coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigUint, One, Signed, Zero};

use crate::cartan::{cartan_data, CartanData, LieType, Weight};
use crate::error::Error;
use crate::rep::{HighestWeight, RepSum};
use crate::Result;

/// The set `P_ℓ` of dominant weights with `(λ, θ) ≤ ℓ`, enumerated in
/// graded-lex order (level first, then labels).
#[derive(Debug, Clone)]
pub struct Alcove {
    lie_type: LieType,
    level: u64,
    weights: Vec<Weight>,
    position: HashMap<Weight, usize>,
    dual: Vec<usize>,
}

impl Alcove {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.position.contains_key(w)
    }

    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.position.get(w).copied()
    }

    /// Index of `λ*` given the index of `λ`.
    pub fn dual_position(&self, i: usize) -> usize {
        self.dual[i]
    }
}

/// Enumerates the alcove `P_ℓ`.
pub fn alcove(lie_type: LieType, level: u64) -> Alcove {
    let cd = cartan_data(lie_type);
    let comarks = cd.comarks();
    let r = lie_type.rank();
    let mut weights: Vec<Weight> = Vec::new();
    let mut current = vec![0i64; r];
    enumerate_alcove(comarks, level as i64, 0, &mut current, &mut weights);
    weights.sort_by_key(|w| (cd.level(w).expect("rank match"), w.clone()));
    let position: HashMap<Weight, usize> = weights
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let dual: Vec<usize> = weights
        .iter()
        .map(|w| {
            let d = cd.dual_weight(w).expect("dominant");
            *position.get(&d).expect("alcove closed under duality")
        })
        .collect();
    Alcove {
        lie_type,
        level,
        weights,
        position,
        dual,
    }
}

fn enumerate_alcove(
    comarks: &[i64],
    budget: i64,
    pos: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Weight>,
) {
    if pos == comarks.len() {
        out.push(Weight::new(current.clone()));
        return;
    }
    let max = budget / comarks[pos];
    for v in 0..=max {
        current[pos] = v;
        enumerate_alcove(comarks, budget - v * comarks[pos], pos + 1, current, out);
    }
    current[pos] = 0;
}

/// Classical tensor product decomposition `L(λ) ⊗ L(μ) = Σ m_ν L(ν)` by
/// the Racah–Speiser reflection rule over the weight system of the
/// smaller factor.
pub fn tensor_decompose(a: &HighestWeight, b: &HighestWeight) -> Result<RepSum> {
    if a.lie_type() != b.lie_type() {
        return Err(Error::TypeMismatch(a.lie_type(), b.lie_type()));
    }
    let cd = cartan_data(a.lie_type());
    let (big, small) = if a.dim() >= b.dim() { (a, b) } else { (b, a) };
    let ws = small.weight_system();
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (nu, m) in ws.entries() {
        // ρ-shifted reflection of λ + ν
        let mut shifted: Vec<i64> = big
            .weight()
            .labels()
            .iter()
            .zip(nu.labels())
            .map(|(&x, &y)| x + y + 1)
            .collect();
        if let Some(sign) = cd.dominantize_signed(&mut shifted) {
            let target = Weight::new(shifted.iter().map(|&x| x - 1).collect());
            let term = BigInt::from(m.clone()) * BigInt::from(sign);
            *acc.entry(target).or_default() += term;
        }
    }
    signed_to_rep_sum(a.lie_type(), acc, "tensor decomposition")
}

fn signed_to_rep_sum(
    lie_type: LieType,
    acc: BTreeMap<Weight, BigInt>,
    what: &str,
) -> Result<RepSum> {
    let mut out = RepSum::empty(lie_type);
    for (w, v) in acc {
        if v.is_zero() {
            continue;
        }
        if v.is_negative() {
            return Err(Error::Internal(format!(
                "negative multiplicity {v} at {w} in {what}"
            )));
        }
        out.add(w, v.to_biguint().expect("nonnegative"));
    }
    Ok(out)
}

/// Folds a ρ-shifted weight into the interior of the shifted alcove at
/// level `k = ℓ + h∨`. Returns `None` when the orbit sits on a wall.
fn fold_affine(
    cd: &CartanData,
    k: i64,
    theta_labels: &[i64],
    mut shifted: Vec<i64>,
) -> Option<(Vec<i64>, i8)> {
    let mut sign = 1i8;
    let mut guard = 0u64;
    loop {
        if shifted.iter().any(|&l| l == 0) {
            return None;
        }
        if let Some(i) = shifted.iter().position(|&l| l < 0) {
            cd.reflect(&mut shifted, i);
            sign = -sign;
        } else {
            let level: i64 = cd
                .comarks()
                .iter()
                .zip(&shifted)
                .map(|(&c, &l)| c * l)
                .sum();
            if level == k {
                return None;
            }
            if level < k {
                return Some((shifted, sign));
            }
            for (j, x) in shifted.iter_mut().enumerate() {
                *x += (k - level) * theta_labels[j];
            }
            sign = -sign;
        }
        guard += 1;
        assert!(guard < 1_000_000, "affine folding failed to terminate");
    }
}

/// Level-truncated (fused) product of two alcove weights.
pub fn fusion_product(level: u64, a: &HighestWeight, b: &HighestWeight) -> Result<RepSum> {
    if a.lie_type() != b.lie_type() {
        return Err(Error::TypeMismatch(a.lie_type(), b.lie_type()));
    }
    let cd = cartan_data(a.lie_type());
    for w in [a.weight(), b.weight()] {
        check_in_alcove(&cd, level, w)?;
    }
    fused_product_raw(&cd, level, a, b)
}

fn check_in_alcove(cd: &CartanData, level: u64, w: &Weight) -> Result<()> {
    cd.check_rank(w)?;
    if !w.is_dominant() {
        return Err(Error::NonDominant(w.clone()));
    }
    if cd.level(w)? > level as i64 {
        return Err(Error::OutsideAlcove {
            weight: w.clone(),
            level,
        });
    }
    Ok(())
}

fn fused_product_raw(
    cd: &CartanData,
    level: u64,
    a: &HighestWeight,
    b: &HighestWeight,
) -> Result<RepSum> {
    let tensor = tensor_decompose(a, b)?;
    let k = level as i64 + cd.dual_coxeter_number();
    let theta = cd.highest_root();
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (xi, m) in tensor.entries() {
        let shifted: Vec<i64> = xi.labels().iter().map(|&l| l + 1).collect();
        if let Some((folded, sign)) = fold_affine(cd, k, theta.labels(), shifted) {
            let target = Weight::new(folded.iter().map(|&x| x - 1).collect());
            let term = BigInt::from(m.clone()) * BigInt::from(sign);
            *acc.entry(target).or_default() += term;
        }
    }
    signed_to_rep_sum(a.lie_type(), acc, "fused product")
}

/// Fully symmetric three-point fusion coefficient
/// `N(λ, μ, ν) = dim B₀(λ, μ, ν)` at the given level.
pub fn fusion_coeff(
    level: u64,
    a: &HighestWeight,
    b: &HighestWeight,
    c: &HighestWeight,
) -> Result<BigUint> {
    if a.lie_type() != b.lie_type() || a.lie_type() != c.lie_type() {
        return Err(Error::TypeMismatch(a.lie_type(), b.lie_type()));
    }
    let mut ctx = FusionCtx::new(a.lie_type(), level);
    let ia = ctx.position_of(a.weight(), level)?;
    let ib = ctx.position_of(b.weight(), level)?;
    let ic = ctx.position_of(c.weight(), level)?;
    Ok(ctx.three_point(ia, ib, ic))
}

/// A labeled curve: genus plus the list of marked-point labels.
#[derive(Debug, Clone)]
pub struct CurveData {
    lie_type: LieType,
    genus: u64,
    labels: Vec<Weight>,
}

impl CurveData {
    pub fn new(lie_type: LieType, genus: u64, labels: Vec<Weight>) -> Self {
        CurveData {
            lie_type,
            genus,
            labels,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }
}

/// Evaluation order for the factorization recursion. All strategies give
/// equal results; having more than one makes that a testable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockStrategy {
    /// Trade each handle for a dual pair first, then fuse labels
    /// left-associatively.
    GenusFirst,
    /// Fuse all labels through the fusion ring first, then close the
    /// handles.
    FuseFirst,
}

/// Dimension of the space of level-`ℓ` conformal blocks for the labeled
/// curve, by the factorization recursion.
pub fn blocks_dim(level: u64, curve: &CurveData) -> Result<BigUint> {
    blocks_dim_with_strategy(level, curve, BlockStrategy::GenusFirst)
}

/// [`blocks_dim`] with an explicit evaluation order.
pub fn blocks_dim_with_strategy(
    level: u64,
    curve: &CurveData,
    strategy: BlockStrategy,
) -> Result<BigUint> {
    let mut ctx = FusionCtx::new(curve.lie_type(), level);
    let mut labels = Vec::with_capacity(curve.labels().len());
    for w in curve.labels() {
        labels.push(ctx.position_of(w, level)?);
    }
    match strategy {
        BlockStrategy::GenusFirst => {
            let mut memo = HashMap::new();
            Ok(genus_first(&mut ctx, &mut memo, curve.genus(), labels))
        }
        BlockStrategy::FuseFirst => Ok(fuse_first(&mut ctx, curve.genus(), &labels)),
    }
}

fn genus_first(
    ctx: &mut FusionCtx,
    memo: &mut HashMap<(u64, Vec<usize>), BigUint>,
    genus: u64,
    mut labels: Vec<usize>,
) -> BigUint {
    labels.sort_unstable();
    if let Some(v) = memo.get(&(genus, labels.clone())) {
        return v.clone();
    }
    let key = (genus, labels.clone());
    let n = ctx.alcove.len();
    let value = if genus > 0 {
        let mut acc = BigUint::zero();
        for mu in 0..n {
            let mut next = labels.clone();
            next.push(mu);
            next.push(ctx.alcove.dual_position(mu));
            acc += genus_first(ctx, memo, genus - 1, next);
        }
        acc
    } else {
        match labels[..] {
            [] => BigUint::one(),
            [a] => bool_to_uint(a == ctx.zero_index),
            [a, b] => bool_to_uint(b == ctx.alcove.dual_position(a)),
            [a, b, c] => ctx.three_point(a, b, c),
            [a, b, ref rest @ ..] => {
                let rest = rest.to_vec();
                let mut acc = BigUint::zero();
                for mu in 0..n {
                    let coeff = ctx.three_point(a, b, mu);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut next = rest.clone();
                    next.push(ctx.alcove.dual_position(mu));
                    acc += coeff * genus_first(ctx, memo, 0, next);
                }
                acc
            }
        }
    };
    memo.insert(key, value.clone());
    value
}

fn fuse_first(ctx: &mut FusionCtx, genus: u64, labels: &[usize]) -> BigUint {
    let n = ctx.alcove.len();
    // coefficient vector of the running fusion-ring product
    let mut v = vec![BigUint::zero(); n];
    v[ctx.zero_index] = BigUint::one();
    for &l in labels {
        v = ctx.ring_multiply(&v, l);
    }
    for _ in 0..genus {
        let mut acc = vec![BigUint::zero(); n];
        for mu in 0..n {
            let t = ctx.ring_multiply(&v, mu);
            let t = ctx.ring_multiply(&t, ctx.alcove.dual_position(mu));
            for (a, b) in acc.iter_mut().zip(t) {
                *a += b;
            }
        }
        v = acc;
    }
    v[ctx.zero_index].clone()
}

fn bool_to_uint(b: bool) -> BigUint {
    if b {
        BigUint::one()
    } else {
        BigUint::zero()
    }
}

/// Upper bound on cached fusion-table size, in entries (`|P_ℓ|³`).
static TABLE_BOUND: AtomicU64 = AtomicU64::new(1_000_000);

/// Bounds the per-level fusion-table cache; alcoves whose cube exceeds
/// the bound fall back to on-demand coefficient computation.
pub fn set_fusion_table_bound(entries: u64) {
    TABLE_BOUND.store(entries, AtomicOrdering::Relaxed);
}

#[derive(Debug)]
struct FusionTable {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl FusionTable {
    fn build(cd: &CartanData, level: u64, alcove: &Alcove) -> Self {
        let n = alcove.len();
        let mut coeffs = vec![BigUint::zero(); n * n * n];
        for i in 0..n {
            for j in i..n {
                let a = HighestWeight::new(cd.lie_type(), alcove.weights()[i].clone())
                    .expect("alcove weight dominant");
                let b = HighestWeight::new(cd.lie_type(), alcove.weights()[j].clone())
                    .expect("alcove weight dominant");
                let product =
                    fused_product_raw(cd, level, &a, &b).expect("fusion of alcove weights");
                for (nu, m) in product.entries() {
                    let p = alcove.position(nu).expect("fused weight in alcove");
                    let k = alcove.dual_position(p);
                    coeffs[(i * n + j) * n + k] = m.clone();
                    coeffs[(j * n + i) * n + k] = m.clone();
                }
            }
        }
        FusionTable { n, coeffs }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &BigUint {
        &self.coeffs[(i * self.n + j) * self.n + k]
    }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<(LieType, u64), Arc<FusionTable>>>> = OnceLock::new();

struct FusionCtx {
    cd: Arc<CartanData>,
    level: u64,
    alcove: Alcove,
    zero_index: usize,
    table: Option<Arc<FusionTable>>,
    // on-demand fallback: fused-product rows keyed by an ordered pair
    pair_memo: HashMap<(usize, usize), Vec<BigUint>>,
}

impl FusionCtx {
    fn new(lie_type: LieType, level: u64) -> Self {
        let cd = cartan_data(lie_type);
        let alc = alcove(lie_type, level);
        let zero_index = alc
            .position(&Weight::zero(lie_type.rank()))
            .expect("alcove contains zero");
        let n = alc.len() as u64;
        let table = if n * n * n <= TABLE_BOUND.load(AtomicOrdering::Relaxed) {
            let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
            let mut map = cache.lock().expect("fusion table cache poisoned");
            Some(
                map.entry((lie_type, level))
                    .or_insert_with(|| Arc::new(FusionTable::build(&cd, level, &alc)))
                    .clone(),
            )
        } else {
            None
        };
        FusionCtx {
            cd,
            level,
            alcove: alc,
            zero_index,
            table,
            pair_memo: HashMap::new(),
        }
    }

    fn position_of(&self, w: &Weight, level: u64) -> Result<usize> {
        check_in_alcove(&self.cd, level, w)?;
        self.alcove
            .position(w)
            .ok_or_else(|| Error::OutsideAlcove {
                weight: w.clone(),
                level,
            })
    }

    /// Symmetric three-point number by alcove indices.
    fn three_point(&mut self, i: usize, j: usize, k: usize) -> BigUint {
        if let Some(t) = &self.table {
            return t.get(i, j, k).clone();
        }
        let key = (i.min(j), i.max(j));
        if !self.pair_memo.contains_key(&key) {
            let a = HighestWeight::new(self.cd.lie_type(), self.alcove.weights()[key.0].clone())
                .expect("dominant");
            let b = HighestWeight::new(self.cd.lie_type(), self.alcove.weights()[key.1].clone())
                .expect("dominant");
            let product = fused_product_raw(&self.cd, self.level, &a, &b)
                .expect("fusion of alcove weights");
            let mut row = vec![BigUint::zero(); self.alcove.len()];
            for (nu, m) in product.entries() {
                row[self.alcove.position(nu).expect("in alcove")] = m.clone();
            }
            self.pair_memo.insert(key, row);
        }
        self.pair_memo[&key][self.alcove.dual_position(k)].clone()
    }

    /// One multiplication step in the fusion ring: `(v · w_l)[c] = Σ_a
    /// v[a] N_{a,l}^c`.
    fn ring_multiply(&mut self, v: &[BigUint], l: usize) -> Vec<BigUint> {
        let n = self.alcove.len();
        let mut out = vec![BigUint::zero(); n];
        for a in 0..n {
            if v[a].is_zero() {
                continue;
            }
            for c in 0..n {
                let coeff = self.three_point(a, l, self.alcove.dual_position(c));
                if !coeff.is_zero() {
                    out[c] += &v[a] * coeff;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Weight;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn hw(t: &str, labels: &[i64]) -> HighestWeight {
        HighestWeight::new(ty(t), Weight::new(labels.to_vec())).unwrap()
    }

    #[test]
    fn alcove_level_zero_is_trivial() {
        for t in ["A1", "B3", "E8", "G2"] {
            let a = alcove(ty(t), 0);
            assert_eq!(a.weights(), &[Weight::zero(ty(t).rank())]);
        }
    }

    #[test]
    fn e8_level_one_alcove_is_trivial() {
        let a = alcove(ty("E8"), 1);
        assert_eq!(a.weights(), &[Weight::zero(8)]);
    }

    #[test]
    fn a1_alcove_by_level() {
        let a = alcove(ty("A1"), 2);
        assert_eq!(
            a.weights(),
            &[
                Weight::zero(1),
                Weight::new(vec![1]),
                Weight::new(vec![2])
            ]
        );
    }

    #[test]
    fn alcove_closed_under_duality() {
        for (t, l) in [("A2", 3u64), ("B2", 2), ("G2", 2), ("D4", 2)] {
            let a = alcove(ty(t), l);
            for i in 0..a.len() {
                let d = a.dual_position(i);
                assert_eq!(a.dual_position(d), i, "{t} level {l}: duality not involutive");
            }
        }
    }

    #[test]
    fn tensor_with_trivial_factor() {
        let w = hw("G2", &[1, 1]);
        let out = tensor_decompose(&w, &HighestWeight::zero(ty("G2"))).unwrap();
        assert_eq!(out.summand_count(), 1);
        assert_eq!(out.multiplicity(w.weight()), BigUint::one());
    }

    #[test]
    fn a1_clebsch_gordan() {
        let v = hw("A1", &[1]);
        let out = tensor_decompose(&v, &v).unwrap();
        assert_eq!(out.multiplicity(&Weight::zero(1)), BigUint::one());
        assert_eq!(out.multiplicity(&Weight::new(vec![2])), BigUint::one());
        assert_eq!(out.summand_count(), 2);
    }

    #[test]
    fn a2_fund_times_antifund() {
        let out = tensor_decompose(&hw("A2", &[1, 0]), &hw("A2", &[0, 1])).unwrap();
        assert_eq!(out.multiplicity(&Weight::zero(2)), BigUint::one());
        assert_eq!(out.multiplicity(&Weight::new(vec![1, 1])), BigUint::one());
        assert_eq!(out.summand_count(), 2);
    }

    #[test]
    fn tensor_preserves_dimension() {
        for (t, a, b) in [
            ("A2", vec![1i64, 1], vec![1, 0]),
            ("B2", vec![1, 0], vec![0, 1]),
            ("G2", vec![1, 0], vec![1, 0]),
            ("C3", vec![0, 1, 0], vec![1, 0, 0]),
        ] {
            let x = hw(t, &a);
            let y = hw(t, &b);
            let out = tensor_decompose(&x, &y).unwrap();
            assert_eq!(out.dimension(), x.dim() * y.dim(), "{t} {a:?}⊗{b:?}");
        }
    }

    #[test]
    fn e8_level_one_three_point() {
        let z = HighestWeight::zero(ty("E8"));
        assert_eq!(fusion_coeff(1, &z, &z, &z).unwrap(), BigUint::one());
    }

    #[test]
    fn a1_level_one_coefficients() {
        let v = hw("A1", &[1]);
        let z = HighestWeight::zero(ty("A1"));
        assert_eq!(fusion_coeff(1, &v, &v, &z).unwrap(), BigUint::one());
        assert_eq!(fusion_coeff(1, &v, &v, &v).unwrap(), BigUint::zero());
    }

    #[test]
    fn two_point_normalization() {
        // N(λ, λ*, 0) = 1
        for (t, l, labels) in [
            ("A2", 2u64, vec![1i64, 0]),
            ("B2", 2, vec![0, 1]),
            ("G2", 2, vec![1, 0]),
        ] {
            let w = hw(t, &labels);
            let d = HighestWeight::new(ty(t), cartan_data(ty(t)).dual_weight(w.weight()).unwrap())
                .unwrap();
            let z = HighestWeight::zero(ty(t));
            assert_eq!(fusion_coeff(l, &w, &d, &z).unwrap(), BigUint::one(), "{t}");
        }
    }

    #[test]
    fn fusion_coeff_fully_symmetric() {
        let t = ty("A2");
        let a = alcove(t, 2);
        for i in 0..a.len() {
            for j in 0..a.len() {
                for k in 0..a.len() {
                    let ws: Vec<HighestWeight> = [i, j, k]
                        .iter()
                        .map(|&p| HighestWeight::new(t, a.weights()[p].clone()).unwrap())
                        .collect();
                    let base = fusion_coeff(2, &ws[0], &ws[1], &ws[2]).unwrap();
                    for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                        assert_eq!(
                            base,
                            fusion_coeff(2, &ws[perm[0]], &ws[perm[1]], &ws[perm[2]]).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn high_level_fusion_matches_tensor() {
        // for ℓ ≥ (λ+μ, θ) the folding is inert
        let t = ty("A2");
        let a = hw("A2", &[1, 1]);
        let b = hw("A2", &[1, 0]);
        let tensor = tensor_decompose(&a, &b).unwrap();
        let cd = cartan_data(t);
        for (nu, m) in tensor.entries() {
            let c = HighestWeight::new(t, cd.dual_weight(nu).unwrap()).unwrap();
            assert_eq!(&fusion_coeff(10, &a, &b, &c).unwrap(), m);
        }
    }

    #[test]
    fn fusion_rejects_labels_outside_alcove() {
        let w = hw("A1", &[3]);
        let z = HighestWeight::zero(ty("A1"));
        assert!(matches!(
            fusion_coeff(2, &w, &z, &z),
            Err(Error::OutsideAlcove { .. })
        ));
    }

    #[test]
    fn blocks_base_cases() {
        let t = ty("A2");
        // genus 0, labels (λ, λ*) → 1
        let w = Weight::new(vec![1, 0]);
        let dual = cartan_data(t).dual_weight(&w).unwrap();
        let c = CurveData::new(t, 0, vec![w.clone(), dual]);
        assert_eq!(blocks_dim(2, &c).unwrap(), BigUint::one());
        let c = CurveData::new(t, 0, vec![w.clone(), w.clone()]);
        assert_eq!(blocks_dim(2, &c).unwrap(), BigUint::zero());
        // genus 0, single nonzero label → 0; single zero label → 1
        let c = CurveData::new(t, 0, vec![w]);
        assert_eq!(blocks_dim(2, &c).unwrap(), BigUint::zero());
        let c = CurveData::new(t, 0, vec![Weight::zero(2)]);
        assert_eq!(blocks_dim(2, &c).unwrap(), BigUint::one());
        // no labels at all
        let c = CurveData::new(t, 0, vec![]);
        assert_eq!(blocks_dim(2, &c).unwrap(), BigUint::one());
    }

    #[test]
    fn e8_level_one_blocks_are_one_dimensional() {
        let t = ty("E8");
        for genus in 0..=3u64 {
            for points in 0..=2usize {
                let c = CurveData::new(t, genus, vec![Weight::zero(8); points]);
                assert_eq!(
                    blocks_dim(1, &c).unwrap(),
                    BigUint::one(),
                    "genus {genus}, {points} points"
                );
            }
        }
    }

    #[test]
    fn a1_level_one_torus_counts_the_alcove() {
        let c = CurveData::new(ty("A1"), 1, vec![]);
        assert_eq!(blocks_dim(1, &c).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn strategies_agree() {
        let t = ty("A2");
        let a = alcove(t, 2);
        for genus in 0..=2u64 {
            for i in 0..a.len() {
                for j in 0..a.len() {
                    let c = CurveData::new(
                        t,
                        genus,
                        vec![a.weights()[i].clone(), a.weights()[j].clone()],
                    );
                    assert_eq!(
                        blocks_dim_with_strategy(2, &c, BlockStrategy::GenusFirst).unwrap(),
                        blocks_dim_with_strategy(2, &c, BlockStrategy::FuseFirst).unwrap(),
                        "genus {genus}, labels {i},{j}"
                    );
                }
            }
        }
    }

    #[test]
    fn appending_zero_label_is_invariant() {
        let t = ty("A1");
        let a = alcove(t, 2);
        for genus in 0..=2u64 {
            for i in 0..a.len() {
                let labels = vec![a.weights()[i].clone()];
                let mut extended = labels.clone();
                extended.push(Weight::zero(1));
                let c1 = CurveData::new(t, genus, labels);
                let c2 = CurveData::new(t, genus, extended);
                assert_eq!(blocks_dim(2, &c1).unwrap(), blocks_dim(2, &c2).unwrap());
            }
        }
    }
}
