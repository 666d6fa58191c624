//! Built-in claim inventory: the published values the crate is expected
//! to reproduce, evaluated into a PASS/FAIL report.
//!
//! The inventory is data — one entry per claim with its reference, the
//! expected value, and the invocation — so the report can be audited line
//! by line. Failures (including errors raised by a deliberately broken
//! fixture, see [`Faults`]) become FAIL entries rather than panics.

use std::time::Instant;

use num::BigUint;
use serde::Serialize;

use crate::branching::{builtin_embedding, Embedding};
use crate::cartan::{rat, CartanData, LieType, Weight};
use crate::fusion::{alcove, blocks_dim, CurveData};
use crate::rep::{minimal_index, HighestWeight};
use crate::Result;

/// Fault injection for exercising the failure paths of the report.
#[derive(Debug, Clone, Copy, Default)]
pub struct Faults {
    /// Corrupt the F4 invariant form (breaks the `(θ,θ) = 2` claim).
    pub scale_f4_form: bool,
    /// Replace the D4 ⊂ F4 projection by the zero matrix (breaks the
    /// D4-restriction claim through embedding validation).
    pub zero_d4_projection: bool,
}

impl Faults {
    pub fn none() -> Self {
        Faults::default()
    }
}

/// Outcome of a single claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub reference: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    /// Wall-clock cost; excluded from serialized output so that JSON
    /// reports are byte-identical across runs.
    #[serde(skip_serializing)]
    pub millis: u128,
}

/// Full report; the process exit code of the `verify-paper` command is
/// derived from [`Report::all_pass`].
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub claims: Vec<ClaimResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn len(&self) -> usize {
        self.claims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }
}

/// The nine rows of the minimal-index table, instantiated at concrete
/// ranks: (type, minimal index, minimizing fundamental node).
const INDEX_TABLE: &[(&str, u64, usize)] = &[
    ("A1", 1, 1),
    ("A2", 1, 1),
    ("A3", 1, 1),
    ("A4", 1, 1),
    ("B3", 2, 1),
    ("B4", 2, 1),
    ("C2", 1, 1),
    ("C3", 1, 1),
    ("D4", 2, 1),
    ("D5", 2, 1),
    ("E6", 6, 6),
    ("E7", 12, 7),
    ("E8", 60, 8),
    ("F4", 6, 4),
    ("G2", 2, 1),
];

struct Ctx {
    faults: Faults,
    f4_in_e8: Result<Embedding>,
    d4_in_e8: Result<Embedding>,
}

impl Ctx {
    fn new(faults: Faults) -> Self {
        let e8: LieType = "E8".parse().expect("valid type");
        let f4: LieType = "F4".parse().expect("valid type");
        let d4: LieType = "D4".parse().expect("valid type");
        let f4_in_e8 = builtin_embedding(f4, e8);
        let d4_in_e8 = if faults.zero_d4_projection {
            let zero = Embedding::new_unchecked(f4, d4, vec![vec![0; 4]; 4]);
            f4_in_e8
                .clone()
                .and_then(|f| Embedding::compose(&zero, &f))
        } else {
            builtin_embedding(d4, e8)
        };
        Ctx {
            faults,
            f4_in_e8,
            d4_in_e8,
        }
    }

    /// Cartan data as seen by the claims, with any injected corruption.
    fn cartan(&self, lie_type: LieType) -> CartanData {
        let mut cd = CartanData::build(lie_type);
        if self.faults.scale_f4_form && lie_type.to_string() == "F4" {
            cd.scale_form_entry(0, 0, rat(2));
        }
        cd
    }
}

fn push(report: &mut Report, id: &str, reference: &str, expected: String, f: impl FnOnce() -> Result<String>) {
    let start = Instant::now();
    let computed = match f() {
        Ok(v) => v,
        Err(e) => format!("error: {e}"),
    };
    let millis = start.elapsed().as_millis();
    report.claims.push(ClaimResult {
        id: id.to_string(),
        reference: reference.to_string(),
        expected: expected.clone(),
        pass: computed == expected,
        computed,
        millis,
    });
}

/// Runs the whole claim inventory.
pub fn run(faults: Faults) -> Report {
    let mut report = Report { claims: Vec::new() };
    let ctx = Ctx::new(faults);

    for &(name, index, node) in INDEX_TABLE {
        let t: LieType = name.parse().expect("valid type");
        let expected = format!("({}, {})", index, Weight::fundamental(t.rank(), node));
        push(
            &mut report,
            &format!("index-table/{}", name.to_lowercase()),
            "minimal-index table",
            expected,
            || {
                let (d, w) = minimal_index(t)?;
                Ok(format!("({d}, {w})"))
            },
        );
    }

    for &(name, _, _) in INDEX_TABLE {
        let t: LieType = name.parse().expect("valid type");
        push(
            &mut report,
            &format!("theta-norm/{}", name.to_lowercase()),
            "form normalization (θ,θ) = 2",
            "2".to_string(),
            || {
                let cd = ctx.cartan(t);
                let theta = cd.highest_root();
                Ok(cd.inner(&theta, &theta)?.to_string())
            },
        );
    }

    let e8: LieType = "E8".parse().expect("valid type");
    push(
        &mut report,
        "alcove/e8-level1",
        "level-1 admissible weights of E8",
        "[[0,0,0,0,0,0,0,0]]".to_string(),
        || {
            let a = alcove(e8, 1);
            let inner: Vec<String> = a.weights().iter().map(|w| w.to_string()).collect();
            Ok(format!("[{}]", inner.join(",")))
        },
    );

    for genus in 0..=3u64 {
        push(
            &mut report,
            &format!("blocks/e8-level1-genus{genus}"),
            "level-1 E8 block dimensions, 0-2 marked points",
            "1,1,1".to_string(),
            || {
                let dims: Vec<String> = (0..=2usize)
                    .map(|points| {
                        let curve = CurveData::new(e8, genus, vec![Weight::zero(8); points]);
                        blocks_dim(1, &curve).map(|d| d.to_string())
                    })
                    .collect::<Result<_>>()?;
                Ok(dims.join(","))
            },
        );
    }

    push(
        &mut report,
        "index/e8-adjoint",
        "Dynkin index of the E8 adjoint module",
        "60".to_string(),
        || {
            HighestWeight::fundamental(e8, 8)
                .dynkin_index()
                .map(|d| d.to_string())
        },
    );

    let adjoint_e8 = HighestWeight::fundamental(e8, 8);
    push(
        &mut report,
        "branch/e8-to-f4",
        "restriction of the E8 adjoint to F4",
        "14·[0,0,0,0] + [1,0,0,0] + 7·[0,0,0,1]".to_string(),
        || {
            let emb = ctx.f4_in_e8.clone()?;
            Ok(emb.branch(&adjoint_e8)?.to_string())
        },
    );
    push(
        &mut report,
        "branch/e8-to-f4-index",
        "index of the F4 restriction",
        "60".to_string(),
        || {
            let emb = ctx.f4_in_e8.clone()?;
            Ok(emb.branch(&adjoint_e8)?.dynkin_index()?.to_string())
        },
    );
    push(
        &mut report,
        "branch/e8-to-f4-dim",
        "dimension of the F4 restriction",
        "248".to_string(),
        || {
            let emb = ctx.f4_in_e8.clone()?;
            Ok(emb.branch(&adjoint_e8)?.dimension().to_string())
        },
    );
    push(
        &mut report,
        "branch/e8-to-d4-index",
        "index of the restriction to the long-root so(8)",
        "60".to_string(),
        || {
            let emb = ctx.d4_in_e8.clone()?;
            Ok(emb.branch(&adjoint_e8)?.dynkin_index()?.to_string())
        },
    );

    push(
        &mut report,
        "dim-identity/f4",
        "14·1 + 52 + 7·26 = 248",
        "14·1 + 1·52 + 7·26 = 248".to_string(),
        || {
            let f4: LieType = "F4".parse().expect("valid type");
            let one = HighestWeight::zero(f4).dim();
            let d52 = HighestWeight::fundamental(f4, 1).dim();
            let d26 = HighestWeight::fundamental(f4, 4).dim();
            let total = BigUint::from(14u32) * &one + &d52 + BigUint::from(7u32) * &d26;
            Ok(format!("14·{one} + 1·{d52} + 7·{d26} = {total}"))
        },
    );

    report
}
