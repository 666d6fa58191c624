//! Restriction of modules along subalgebra embeddings, given as integer
//! projections between weight lattices.
//!
//! An [`Embedding`] carries the ambient and sub algebra types and a
//! `rank_sub × rank_ambient` integer matrix sending ambient Dynkin labels
//! to sub Dynkin labels. Branching projects the full weight system of the
//! ambient module and peels it greedily from the top: the graded-lex
//! maximal residual weight must be dominant with positive multiplicity,
//! one sub-module weight system is subtracted per step, and the residual
//! must end at exactly zero. A projection that is not an actual embedding
//! fails loudly (negative or non-dominant residual, or a non-constant
//! index ratio) instead of returning garbage.
//!
//! Built-in embeddings cover the chain `D4 ⊂ F4 ⊂ E6 ⊂ E7 ⊂ E8`:
//!
//! * `E7 ⊂ E8`, `E6 ⊂ E7` — regular subdiagram embeddings (delete the last
//!   Bourbaki node); the projection just restricts labels.
//! * `F4 ⊂ E6` — the fixed subalgebra of the order-2 diagram automorphism;
//!   sub labels are sums of ambient labels over folded node orbits.
//! * `D4 ⊂ F4` — the long-root subsystem `so(8)`; rows are the pairings of
//!   the F4 fundamental weights with the chosen simple coroots of the
//!   subsystem.
//!
//! Every constructed embedding is validated: the projected weight
//! multiset of a test module must be invariant under the sub Weyl group,
//! peeling must terminate at zero, and the Dynkin-index ratio
//! `index(branch(λ)) / index(λ)` must be the same positive integer for
//! two independent test modules. That ratio is the embedding index.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigUint, Integer, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{cartan_data, LieType, Weight};
use crate::error::Error;
use crate::rep::{HighestWeight, RepSum};
use crate::Result;

/// An embedding of one simple algebra in another, reduced to its action
/// on weight lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    ambient: LieType,
    sub: LieType,
    projection: Vec<Vec<i64>>,
    index: Option<BigUint>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingSpec {
    ambient: LieType,
    sub: LieType,
    projection: Vec<Vec<i64>>,
}

impl Embedding {
    /// Builds and fully validates an embedding; the stored embedding
    /// index is computed as part of validation.
    pub fn new(ambient: LieType, sub: LieType, projection: Vec<Vec<i64>>) -> Result<Self> {
        let mut emb = Embedding {
            ambient,
            sub,
            projection,
            index: None,
        };
        let idx = emb.validate()?;
        emb.index = Some(idx);
        Ok(emb)
    }

    /// Skips validation. For fault-injection fixtures only; operations on
    /// the result surface errors instead of panicking.
    pub(crate) fn new_unchecked(ambient: LieType, sub: LieType, projection: Vec<Vec<i64>>) -> Self {
        Embedding {
            ambient,
            sub,
            projection,
            index: None,
        }
    }

    /// The identity embedding of `lie_type` in itself.
    pub fn identity(lie_type: LieType) -> Result<Self> {
        let r = lie_type.rank();
        let projection = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        Embedding::new(lie_type, lie_type, projection)
    }

    /// Parses and validates a JSON embedding file:
    /// `{"ambient":"E8","sub":"F4","projection":[[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: EmbeddingSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidEmbedding(format!("cannot parse embedding spec: {e}")))?;
        Embedding::new(spec.ambient, spec.sub, spec.projection)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EmbeddingSpec {
            ambient: self.ambient,
            sub: self.sub,
            projection: self.projection.clone(),
        })
        .expect("embedding serialization cannot fail")
    }

    pub fn ambient(&self) -> LieType {
        self.ambient
    }

    pub fn sub(&self) -> LieType {
        self.sub
    }

    pub fn projection(&self) -> &[Vec<i64>] {
        &self.projection
    }

    /// Restricts an ambient weight to the subalgebra (matrix–vector
    /// product over the integers).
    pub fn project(&self, w: &Weight) -> Result<Weight> {
        if w.rank() != self.ambient.rank() {
            return Err(Error::RankMismatch {
                expected: self.ambient.rank(),
                got: w.rank(),
            });
        }
        Ok(Weight::new(
            self.projection
                .iter()
                .map(|row| row.iter().zip(w.labels()).map(|(&p, &l)| p * l).sum())
                .collect(),
        ))
    }

    /// Decomposes the restriction of the ambient module `L(λ)` into
    /// irreducible sub-modules.
    pub fn branch(&self, hw: &HighestWeight) -> Result<RepSum> {
        if hw.lie_type() != self.ambient {
            return Err(Error::TypeMismatch(hw.lie_type(), self.ambient));
        }
        self.check_shape()?;
        let residual = self.projected_multiset(hw)?;
        self.peel(residual)
    }

    /// The Dynkin index of the embedding: the constant ratio
    /// `index(branch(λ)) / index(λ)`, a positive integer.
    pub fn embedding_index(&self) -> Result<BigUint> {
        match &self.index {
            Some(e) => Ok(e.clone()),
            None => self.validate(),
        }
    }

    /// Composition `outer ∘ inner` for `outer: 𝔨 ⊂ 𝔥`, `inner: 𝔥 ⊂ 𝔤`,
    /// giving `𝔨 ⊂ 𝔤`. The composite matrix is validated from scratch.
    pub fn compose(outer: &Embedding, inner: &Embedding) -> Result<Embedding> {
        if outer.ambient != inner.sub {
            return Err(Error::TypeMismatch(outer.ambient, inner.sub));
        }
        let rows = outer.sub.rank();
        let mid = outer.ambient.rank();
        let cols = inner.ambient.rank();
        let product: Vec<Vec<i64>> = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| (0..mid).map(|k| outer.projection[i][k] * inner.projection[k][j]).sum())
                    .collect()
            })
            .collect();
        Embedding::new(inner.ambient, outer.sub, product)
    }

    fn check_shape(&self) -> Result<()> {
        if self.projection.len() != self.sub.rank()
            || self.projection.iter().any(|row| row.len() != self.ambient.rank())
        {
            return Err(Error::InvalidEmbedding(format!(
                "projection must be {}×{} for {} ⊂ {}",
                self.sub.rank(),
                self.ambient.rank(),
                self.sub,
                self.ambient
            )));
        }
        Ok(())
    }

    /// Projected weight multiset of `L(λ)`, as signed counts keyed by sub
    /// labels.
    fn projected_multiset(&self, hw: &HighestWeight) -> Result<HashMap<Vec<i64>, BigInt>> {
        let ws = hw.weight_system();
        let mut out: HashMap<Vec<i64>, BigInt> = HashMap::new();
        for (w, m) in ws.entries() {
            let p = self.project(w)?;
            *out.entry(p.into_labels()).or_default() += BigInt::from(m.clone());
        }
        Ok(out)
    }

    /// Greedy top-down extraction of irreducible sub-modules from a
    /// projected multiset.
    fn peel(&self, mut residual: HashMap<Vec<i64>, BigInt>) -> Result<RepSum> {
        let sub_cd = cartan_data(self.sub);
        let mut out = RepSum::empty(self.sub);
        residual.retain(|_, v| !v.is_zero());
        let mut guard = 0u32;
        while !residual.is_empty() {
            let top = residual
                .keys()
                .max_by(|a, b| sub_cd.graded_lex_cmp(a, b))
                .expect("nonempty")
                .clone();
            let mult = residual[&top].clone();
            if top.iter().any(|&l| l < 0) || !mult.is_positive() {
                return Err(Error::InvalidEmbedding(format!(
                    "projected weights of {} ⊂ {} do not peel into sub-modules \
                     (residual {}·{} at the top)",
                    self.sub,
                    self.ambient,
                    mult,
                    Weight::new(top)
                )));
            }
            let top_hw = HighestWeight::new(self.sub, Weight::new(top))?;
            for (w, m) in top_hw.weight_system().entries() {
                let e = residual.entry(w.labels().to_vec()).or_default();
                *e -= BigInt::from(m.clone()) * &mult;
            }
            residual.retain(|_, v| !v.is_zero());
            out.add(
                top_hw.weight().clone(),
                mult.to_biguint().expect("positive"),
            );
            guard += 1;
            if guard > 100_000 {
                return Err(Error::InvalidEmbedding(format!(
                    "peeling of {} ⊂ {} did not terminate",
                    self.sub, self.ambient
                )));
            }
        }
        Ok(out)
    }

    /// Full validation; returns the embedding index.
    fn validate(&self) -> Result<BigUint> {
        self.check_shape()?;
        let sub_cd = cartan_data(self.sub);

        // two smallest ambient fundamental modules as test weights
        let mut fundamentals: Vec<(BigUint, usize)> = (1..=self.ambient.rank())
            .map(|n| (HighestWeight::fundamental(self.ambient, n).dim(), n))
            .collect();
        fundamentals.sort();
        let first = HighestWeight::fundamental(self.ambient, fundamentals[0].1);
        let second = match fundamentals.get(1) {
            Some(&(_, n)) => HighestWeight::fundamental(self.ambient, n),
            // rank-1 ambient: fall back to the adjoint
            None => HighestWeight::new(self.ambient, Weight::new(vec![2]))?,
        };

        // the projected multiset must be invariant under the sub Weyl group
        let projected = self.projected_multiset(&first)?;
        for i in 0..self.sub.rank() {
            for (labels, m) in &projected {
                let mut reflected = labels.clone();
                sub_cd.reflect(&mut reflected, i);
                if projected.get(&reflected) != Some(m) {
                    return Err(Error::InvalidEmbedding(format!(
                        "projected weights of {first} are not invariant under the {} Weyl group",
                        self.sub
                    )));
                }
            }
        }

        let ratio = |test: &HighestWeight| -> Result<(BigUint, BigUint)> {
            let branched = self.peel(self.projected_multiset(test)?)?;
            if branched.dimension() != test.dim() {
                return Err(Error::InvalidEmbedding(format!(
                    "branching of {test} does not preserve dimension"
                )));
            }
            Ok((branched.dynkin_index()?, test.dynkin_index()?))
        };
        let (restricted, original) = ratio(&first)?;
        let (quot, rem) = restricted.div_rem(&original);
        if !rem.is_zero() || quot.is_zero() {
            return Err(Error::InvalidEmbedding(format!(
                "index ratio {restricted}/{original} on {first} is not a positive integer"
            )));
        }
        let (restricted2, original2) = ratio(&second)?;
        if restricted2 != &quot * &original2 {
            return Err(Error::InvalidEmbedding(format!(
                "index ratio is not constant: {restricted}/{original} on {first} \
                 vs {restricted2}/{original2} on {second}"
            )));
        }
        Ok(quot)
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊂ {}", self.sub, self.ambient)
    }
}

fn lie(s: &str) -> LieType {
    s.parse().expect("valid builtin type")
}

/// Regular subdiagram embedding obtained by deleting the last Bourbaki
/// node of E7 or E8; labels restrict by truncation.
fn subdiagram_drop_last(ambient: LieType, sub: LieType) -> Result<Embedding> {
    let projection: Vec<Vec<i64>> = (0..sub.rank())
        .map(|i| {
            (0..ambient.rank())
                .map(|j| i64::from(i == j))
                .collect()
        })
        .collect();
    Embedding::new(ambient, sub, projection)
}

/// F4 as the fixed subalgebra of the E6 diagram flip (1↔6, 3↔5): sub
/// labels are orbit sums, ordered so the folded diagram is Bourbaki F4.
fn folded_f4_in_e6() -> Result<Embedding> {
    let projection = vec![
        vec![0, 1, 0, 0, 0, 0], // F4 node 1 ← E6 node 2
        vec![0, 0, 0, 1, 0, 0], // F4 node 2 ← E6 node 4
        vec![0, 0, 1, 0, 1, 0], // F4 node 3 ← E6 orbit {3, 5}
        vec![1, 0, 0, 0, 0, 1], // F4 node 4 ← E6 orbit {1, 6}
    ];
    Embedding::new(lie("E6"), lie("F4"), projection)
}

/// so(8) on the long roots of F4; rows pair the F4 fundamental weights
/// with the simple coroots e1-e2, e2-e3, e3-e4, e3+e4 of the subsystem.
fn long_root_d4_in_f4() -> Result<Embedding> {
    let projection = vec![
        vec![0, 1, 1, 1],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 1, 1, 0],
    ];
    Embedding::new(lie("F4"), lie("D4"), projection)
}

static TOWER: OnceLock<Vec<Embedding>> = OnceLock::new();

/// The validated built-in chain, ambient first:
/// `[E7 ⊂ E8, E6 ⊂ E7, F4 ⊂ E6, D4 ⊂ F4]`.
pub fn builtin_tower() -> &'static [Embedding] {
    TOWER.get_or_init(|| {
        vec![
            subdiagram_drop_last(lie("E8"), lie("E7")).expect("E7 in E8"),
            subdiagram_drop_last(lie("E7"), lie("E6")).expect("E6 in E7"),
            folded_f4_in_e6().expect("F4 in E6"),
            long_root_d4_in_f4().expect("D4 in F4"),
        ]
    })
}

static COMPOSITE_CACHE: OnceLock<Mutex<HashMap<(LieType, LieType), Embedding>>> = OnceLock::new();

/// Any embedding along the built-in chain, composing links as needed
/// (e.g. `builtin_embedding("F4", "E8")` or `("D4", "E8")`).
pub fn builtin_embedding(sub: LieType, ambient: LieType) -> Result<Embedding> {
    let chain = [lie("E8"), lie("E7"), lie("E6"), lie("F4"), lie("D4")];
    let a = chain.iter().position(|&t| t == ambient);
    let s = chain.iter().position(|&t| t == sub);
    let (a, s) = match (a, s) {
        (Some(a), Some(s)) if a < s => (a, s),
        _ => {
            return Err(Error::InvalidEmbedding(format!(
                "no built-in embedding {sub} ⊂ {ambient}; the built-in chain is \
                 D4 ⊂ F4 ⊂ E6 ⊂ E7 ⊂ E8"
            )))
        }
    };
    let cache = COMPOSITE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("composite cache poisoned").get(&(sub, ambient)) {
        return Ok(e.clone());
    }
    let tower = builtin_tower();
    let mut acc = tower[a].clone();
    for link in &tower[a + 1..s] {
        acc = Embedding::compose(link, &acc)?;
    }
    cache
        .lock()
        .expect("composite cache poisoned")
        .insert((sub, ambient), acc.clone());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn hw(t: &str, labels: &[i64]) -> HighestWeight {
        HighestWeight::new(lie(t), Weight::new(labels.to_vec())).unwrap()
    }

    fn entries(sum: &RepSum) -> Vec<(Vec<i64>, u64)> {
        sum.entries()
            .map(|(w, m)| (w.labels().to_vec(), u64::try_from(m.clone()).unwrap()))
            .collect()
    }

    #[test]
    fn project_is_linear() {
        let emb = builtin_embedding(lie("F4"), lie("E6")).unwrap();
        let zero = Weight::zero(6);
        assert_eq!(emb.project(&zero).unwrap(), Weight::zero(4));
        let a = Weight::new(vec![1, 0, 2, 0, 0, -1]);
        let b = Weight::new(vec![0, 3, 0, 0, 1, 1]);
        let sum = Weight::new(vec![1, 3, 2, 0, 1, 0]);
        let pa = emb.project(&a).unwrap();
        let pb = emb.project(&b).unwrap();
        let ps = emb.project(&sum).unwrap();
        for i in 0..4 {
            assert_eq!(ps.labels()[i], pa.labels()[i] + pb.labels()[i]);
        }
        assert!(matches!(
            emb.project(&Weight::zero(4)),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn identity_embedding() {
        let emb = Embedding::identity(lie("G2")).unwrap();
        assert_eq!(emb.embedding_index().unwrap(), BigUint::one());
        let w = hw("G2", &[1, 0]);
        let out = emb.branch(&w).unwrap();
        assert_eq!(entries(&out), vec![(vec![1, 0], 1)]);
    }

    #[test]
    fn branch_of_trivial_module() {
        for emb in builtin_tower() {
            let out = emb.branch(&HighestWeight::zero(emb.ambient())).unwrap();
            assert_eq!(out.summand_count(), 1);
            assert_eq!(
                out.multiplicity(&Weight::zero(emb.sub().rank())),
                BigUint::one()
            );
        }
    }

    #[test]
    fn d4_in_f4_twenty_six() {
        let emb = builtin_embedding(lie("D4"), lie("F4")).unwrap();
        let out = emb.branch(&hw("F4", &[0, 0, 0, 1])).unwrap();
        assert_eq!(
            entries(&out),
            vec![
                (vec![0, 0, 0, 0], 2),
                (vec![0, 0, 0, 1], 1),
                (vec![0, 0, 1, 0], 1),
                (vec![1, 0, 0, 0], 1),
            ]
        );
        assert_eq!(out.dynkin_index().unwrap(), BigUint::from(6u32));
        assert_eq!(out.dimension(), BigUint::from(26u32));
    }

    #[test]
    fn f4_in_e6_fundamental_and_adjoint() {
        let emb = builtin_embedding(lie("F4"), lie("E6")).unwrap();
        let out = emb.branch(&hw("E6", &[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            entries(&out),
            vec![(vec![0, 0, 0, 0], 1), (vec![0, 0, 0, 1], 1)]
        );
        let adjoint = emb.branch(&hw("E6", &[0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(
            entries(&adjoint),
            vec![(vec![0, 0, 0, 1], 1), (vec![1, 0, 0, 0], 1)]
        );
    }

    #[test]
    fn e6_in_e7_fifty_six() {
        let emb = builtin_embedding(lie("E6"), lie("E7")).unwrap();
        let out = emb.branch(&hw("E7", &[0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(out.dimension(), BigUint::from(56u32));
        assert_eq!(
            entries(&out),
            vec![
                (vec![0, 0, 0, 0, 0, 0], 2),
                (vec![0, 0, 0, 0, 0, 1], 1),
                (vec![1, 0, 0, 0, 0, 0], 1),
            ]
        );
    }

    #[test]
    fn e7_in_e8_adjoint() {
        let emb = builtin_embedding(lie("E7"), lie("E8")).unwrap();
        let out = emb.branch(&hw("E8", &[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(out.dimension(), BigUint::from(248u32));
        assert_eq!(
            entries(&out),
            vec![
                (vec![0, 0, 0, 0, 0, 0, 0], 3),
                (vec![0, 0, 0, 0, 0, 0, 1], 2),
                (vec![1, 0, 0, 0, 0, 0, 0], 1),
            ]
        );
    }

    #[test]
    fn e8_adjoint_restricted_to_f4() {
        let emb = builtin_embedding(lie("F4"), lie("E8")).unwrap();
        let out = emb.branch(&hw("E8", &[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            entries(&out),
            vec![
                (vec![0, 0, 0, 0], 14),
                (vec![0, 0, 0, 1], 7),
                (vec![1, 0, 0, 0], 1),
            ]
        );
        assert_eq!(out.dimension(), BigUint::from(248u32));
        assert_eq!(out.dynkin_index().unwrap(), BigUint::from(60u32));
    }

    #[test]
    fn e8_adjoint_restricted_to_d4_keeps_index_sixty() {
        let emb = builtin_embedding(lie("D4"), lie("E8")).unwrap();
        let out = emb.branch(&hw("E8", &[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(out.dimension(), BigUint::from(248u32));
        assert_eq!(out.dynkin_index().unwrap(), BigUint::from(60u32));
    }

    #[test]
    fn tower_links_have_index_one() {
        for emb in builtin_tower() {
            assert_eq!(emb.embedding_index().unwrap(), BigUint::one(), "{emb}");
        }
    }

    #[test]
    fn composition_matches_sequential_branching() {
        let f4_e6 = builtin_embedding(lie("F4"), lie("E6")).unwrap();
        let e6_e7 = builtin_embedding(lie("E6"), lie("E7")).unwrap();
        let composed = Embedding::compose(&f4_e6, &e6_e7).unwrap();
        let w = hw("E7", &[0, 0, 0, 0, 0, 0, 1]);
        let direct = composed.branch(&w).unwrap();
        // branch to E6 first, then push every summand through F4 ⊂ E6
        let mid = e6_e7.branch(&w).unwrap();
        let mut sequential = RepSum::empty(lie("F4"));
        for (weight, mult) in mid.entries() {
            let part = f4_e6
                .branch(&HighestWeight::new(lie("E6"), weight.clone()).unwrap())
                .unwrap();
            for (w2, m2) in part.entries() {
                sequential.add(w2.clone(), m2 * mult);
            }
        }
        assert_eq!(direct, sequential);
    }

    #[test]
    fn invalid_projection_is_rejected() {
        // the zero matrix peels formally but has index ratio 0
        let zero = vec![vec![0i64; 4]; 4];
        let err = Embedding::new(lie("F4"), lie("D4"), zero).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));

        // a wrong-shape matrix is rejected before any computation
        let err = Embedding::new(lie("F4"), lie("D4"), vec![vec![1, 0, 0]; 4]).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));

        // a scrambled fold is not Weyl-invariant
        let mut bad = builtin_embedding(lie("F4"), lie("E6")).unwrap().projection().to_vec();
        bad[2][2] = 2;
        let err = Embedding::new(lie("E6"), lie("F4"), bad).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));
    }

    #[test]
    fn unchecked_zero_projection_fails_at_use() {
        let emb = Embedding::new_unchecked(lie("F4"), lie("D4"), vec![vec![0; 4]; 4]);
        assert!(emb.embedding_index().is_err());
    }

    #[test]
    fn json_round_trip() {
        let emb = builtin_embedding(lie("D4"), lie("F4")).unwrap();
        let text = emb.to_json();
        let back = Embedding::from_json(&text).unwrap();
        assert_eq!(back.projection(), emb.projection());
        assert_eq!(back.embedding_index().unwrap(), BigUint::one());

        assert!(Embedding::from_json("{not json").is_err());
        let bad = r#"{"ambient":"F4","sub":"D4","projection":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;
        assert!(Embedding::from_json(bad).is_err());
    }
}
