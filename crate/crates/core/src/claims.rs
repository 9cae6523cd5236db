//! A machine-readable catalog of checkable statements about the block
//! construction family, executed against the other modules into a
//! verification report.
//!
//! Claims reference the numbered statements they come from (definitions,
//! lemmas, propositions, theorems, and the three residue-case analyses).
//! Discrepancies are first-class outputs: a claim whose recipe cannot be
//! realized at the stated palette evaluates to `INFEASIBLE` rather than
//! being silently repaired, and the shipped manifest of known discrepancy
//! ids lets callers separate expected red from regressions.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::construct::{
    assemble_theorem_graph, assemble_with_palette, block_edge_count, block_palette, build_g_star,
    build_h, build_h_star, closed_form_case_edges, ConstructError,
};
use crate::graph::{write_ecg, ColorSet, EdgeColoredGraph};
use crate::rainbow::contains_rainbow_path;
use crate::saturation::{blocked_pendant_colors, blocked_table, saturation_defects, Blocked};
use crate::search::{
    bound_new, bound_old, min_saturated_size, verify_lower_bound, SearchBudget, SearchError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimsError {
    #[error("ell_max = {0} outside supported range 5..=12")]
    EllMaxOutOfRange(u32),
}

/// Which graph of the block family a claim talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Block,
    BlockStar,
}

impl Family {
    fn build(self, ell: u32) -> Result<EdgeColoredGraph, ConstructError> {
        match self {
            Family::Block => build_h(ell),
            Family::BlockStar => build_h_star(ell),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ClaimKind {
    BlockEdges {
        ell: u32,
    },
    BlockPalette {
        ell: u32,
    },
    BlockProper {
        ell: u32,
    },
    BlockRainbowFree {
        ell: u32,
    },
    BlockedSet {
        family: Family,
        ell: u32,
        vertex: u32,
        expected: ColorSet,
    },
    BlockedEmptyExcept {
        family: Family,
        ell: u32,
        except: Vec<u32>,
    },
    BlockSaturated {
        ell: u32,
    },
    UnionSaturated {
        k: u32,
        ell: u32,
    },
    UnionEdges {
        k: u32,
        ell: u32,
    },
    BoundValue {
        n: usize,
        ell: u32,
        expected: usize,
    },
    BoundImproves {
        n: usize,
        ell: u32,
    },
    LowerBound {
        n: usize,
        ell: u32,
        t: u32,
    },
    MinSat {
        n: usize,
        ell: u32,
        t: u32,
        expected: usize,
    },
    AssemblyFeasible {
        n: usize,
        ell: u32,
        t: u32,
    },
    AssemblyEdges {
        n: usize,
        ell: u32,
    },
    AssemblySaturated {
        n: usize,
        ell: u32,
    },
    ExploratoryBlockSaturated {
        ell: u32,
    },
    ExploratoryMinSat {
        n: usize,
        ell: u32,
        t: u32,
    },
}

/// A checkable statement with parameters and a typed expectation.
/// `expected = None` marks an exploratory claim: the computed value is
/// recorded as a finding rather than compared.
#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub source: String,
    pub params: BTreeMap<String, String>,
    pub expected: Option<Value>,
    pub note: Option<String>,
    kind: ClaimKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Infeasible,
    Skipped,
}

/// Outcome of one executed claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub source: String,
    pub params: BTreeMap<String, String>,
    pub expected: Option<Value>,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub infeasible: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

fn colors_json(set: ColorSet) -> Value {
    Value::Array(set.iter().map(|c| json!(c)).collect())
}

fn blocked_json(b: Blocked) -> Value {
    match b {
        Blocked::Colors(set) => colors_json(set),
        Blocked::All => json!("ALL"),
    }
}

fn table_json(table: &[Blocked]) -> Value {
    Value::Object(
        table
            .iter()
            .enumerate()
            .map(|(v, b)| (v.to_string(), blocked_json(*b)))
            .collect(),
    )
}

fn params<const N: usize>(entries: [(&str, String); N]) -> BTreeMap<String, String> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// The ids and reasons of claims whose honest verdict is FAIL or
/// INFEASIBLE, as shipped. `verify-paper` exits zero only if every other
/// claim passes.
pub fn known_discrepancies() -> Vec<(&'static str, &'static str)> {
    include_str!("../data/known_discrepancies.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| {
            let (id, reason) = l.split_once(char::is_whitespace)?;
            Some((id, reason.trim()))
        })
        .collect()
}

/// Simple glob matching with `*` as the only wildcard.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn rec(p: &[char], t: &[char]) -> bool {
        match p.split_first() {
            None => t.is_empty(),
            Some(('*', rest)) => (0..=t.len()).any(|i| rec(rest, &t[i..])),
            Some((&c, rest)) => t
                .split_first()
                .is_some_and(|(&d, tr)| c == d && rec(rest, tr)),
        }
    }
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    rec(&p, &t)
}

/// The full deterministic catalog for block orders `5..=ell_max`.
pub fn claim_catalog(ell_max: u32) -> Result<Vec<Claim>, ClaimsError> {
    if !(5..=12).contains(&ell_max) {
        return Err(ClaimsError::EllMaxOutOfRange(ell_max));
    }
    let mut claims = Vec::new();
    let mut push = |id: String,
                    source: &str,
                    params: BTreeMap<String, String>,
                    expected: Option<Value>,
                    note: Option<String>,
                    kind: ClaimKind| {
        claims.push(Claim {
            id,
            source: source.to_string(),
            params,
            expected,
            note,
            kind,
        });
    };

    for ell in 5..=ell_max {
        let t = block_palette(ell);
        push(
            format!("D2.1-edges-{ell}"),
            "Def. 2.1",
            params([("ell", ell.to_string())]),
            Some(json!(block_edge_count(ell))),
            None,
            ClaimKind::BlockEdges { ell },
        );
        push(
            format!("D2.1-palette-{ell}"),
            "Def. 2.1",
            params([("ell", ell.to_string())]),
            Some(colors_json(ColorSet::full(t))),
            None,
            ClaimKind::BlockPalette { ell },
        );
        push(
            format!("L2.2-proper-{ell}"),
            "Lemma 2.2",
            params([("ell", ell.to_string())]),
            Some(json!(true)),
            None,
            ClaimKind::BlockProper { ell },
        );
        push(
            format!("L2.2-rainbow-free-{ell}"),
            "Lemma 2.2",
            params([("ell", ell.to_string())]),
            Some(json!(true)),
            None,
            ClaimKind::BlockRainbowFree { ell },
        );
        push(
            format!("T2.7-edges-{ell}"),
            "Thm. 2.7",
            params([("ell", ell.to_string()), ("k", "2".to_string())]),
            Some(json!(bound_new(2 * ell as usize, ell))),
            None,
            ClaimKind::UnionEdges { k: 2, ell },
        );
        push(
            format!("T1.2-lt-old-{ell}"),
            "Thm. 1.2 vs Thm. 1.1(iii)",
            params([("ell", ell.to_string()), ("n", (10 * ell).to_string())]),
            Some(json!(true)),
            None,
            ClaimKind::BoundImproves {
                n: 10 * ell as usize,
                ell,
            },
        );
    }

    // Blocked-color sets for ell = 5.
    let b5 = |vertex: u32, cs: &[u32]| ClaimKind::BlockedSet {
        family: Family::BlockStar,
        ell: 5,
        vertex,
        expected: ColorSet::from_colors(cs.iter().copied()),
    };
    let h5 = |vertex: u32, cs: &[u32]| ClaimKind::BlockedSet {
        family: Family::Block,
        ell: 5,
        vertex,
        expected: ColorSet::from_colors(cs.iter().copied()),
    };
    push(
        "P2.5-blocked-v1".into(),
        "Prop. 2.5",
        params([
            ("graph", "H*(5)".into()),
            ("vertex", "1".into()),
            ("order", "4".into()),
        ]),
        Some(json!([2, 5])),
        None,
        b5(1, &[2, 5]),
    );
    push(
        "P2.5-blocked-v2".into(),
        "Prop. 2.5",
        params([
            ("graph", "H*(5)".into()),
            ("vertex", "2".into()),
            ("order", "4".into()),
        ]),
        Some(json!([1, 4])),
        None,
        b5(2, &[1, 4]),
    );
    push(
        "P2.5-blocked-rest-empty".into(),
        "Prop. 2.5",
        params([("graph", "H*(5)".into()), ("order", "4".into())]),
        Some(json!(true)),
        None,
        ClaimKind::BlockedEmptyExcept {
            family: Family::BlockStar,
            ell: 5,
            except: vec![1, 2],
        },
    );
    push(
        "P2.5-blocked-H-v1".into(),
        "Prop. 2.5",
        params([
            ("graph", "H(5)".into()),
            ("vertex", "1".into()),
            ("order", "4".into()),
        ]),
        Some(json!([2])),
        None,
        h5(1, &[2]),
    );
    push(
        "P2.5-blocked-H-v2".into(),
        "Prop. 2.5",
        params([
            ("graph", "H(5)".into()),
            ("vertex", "2".into()),
            ("order", "4".into()),
        ]),
        Some(json!([1])),
        None,
        h5(2, &[1]),
    );
    push(
        "P2.5-blocked-H-rest-empty".into(),
        "Prop. 2.5",
        params([("graph", "H(5)".into()), ("order", "4".into())]),
        Some(json!(true)),
        None,
        ClaimKind::BlockedEmptyExcept {
            family: Family::Block,
            ell: 5,
            except: vec![1, 2],
        },
    );
    push(
        "P2.5-sat".into(),
        "Prop. 2.5",
        params([("n", "10".into()), ("ell", "5".into()), ("t", "5".into())]),
        Some(json!(true)),
        None,
        ClaimKind::UnionSaturated { k: 2, ell: 5 },
    );

    if ell_max >= 6 {
        let b6 = |vertex: u32, cs: &[u32]| ClaimKind::BlockedSet {
            family: Family::BlockStar,
            ell: 6,
            vertex,
            expected: ColorSet::from_colors(cs.iter().copied()),
        };
        let h6 = |vertex: u32, cs: &[u32]| ClaimKind::BlockedSet {
            family: Family::Block,
            ell: 6,
            vertex,
            expected: ColorSet::from_colors(cs.iter().copied()),
        };
        push(
            "P2.6-blocked-v2".into(),
            "Prop. 2.6",
            params([
                ("graph", "H*(6)".into()),
                ("vertex", "2".into()),
                ("order", "5".into()),
            ]),
            Some(json!([1, 7])),
            None,
            b6(2, &[1, 7]),
        );
        push(
            "P2.6-blocked-v3".into(),
            "Prop. 2.6",
            params([
                ("graph", "H*(6)".into()),
                ("vertex", "3".into()),
                ("order", "5".into()),
            ]),
            Some(json!([1, 6])),
            None,
            b6(3, &[1, 6]),
        );
        push(
            "P2.6-blocked-rest-empty".into(),
            "Prop. 2.6",
            params([("graph", "H*(6)".into()), ("order", "5".into())]),
            Some(json!(true)),
            None,
            ClaimKind::BlockedEmptyExcept {
                family: Family::BlockStar,
                ell: 6,
                except: vec![2, 3],
            },
        );
        push(
            "P2.6-blocked-H-v2".into(),
            "Prop. 2.6",
            params([
                ("graph", "H(6)".into()),
                ("vertex", "2".into()),
                ("order", "5".into()),
            ]),
            Some(json!([1])),
            None,
            h6(2, &[1]),
        );
        push(
            "P2.6-blocked-H-v3".into(),
            "Prop. 2.6",
            params([
                ("graph", "H(6)".into()),
                ("vertex", "3".into()),
                ("order", "5".into()),
            ]),
            Some(json!([1])),
            None,
            h6(3, &[1]),
        );
        push(
            "P2.6-blocked-H-rest-empty".into(),
            "Prop. 2.6",
            params([("graph", "H(6)".into()), ("order", "5".into())]),
            Some(json!(true)),
            None,
            ClaimKind::BlockedEmptyExcept {
                family: Family::Block,
                ell: 6,
                except: vec![2, 3],
            },
        );
        push(
            "P2.6-sat".into(),
            "Prop. 2.6",
            params([("n", "12".into()), ("ell", "6".into()), ("t", "7".into())]),
            Some(json!(true)),
            None,
            ClaimKind::UnionSaturated { k: 2, ell: 6 },
        );
    }

    // Lemma 2.3 tables and the saturation corollary for ell >= 7. The even
    // cases carry the odd-case pattern as an extrapolated expectation.
    for ell in 7..=ell_max {
        let t = block_palette(ell);
        let note = (ell % 2 == 0).then(|| {
            "even case extrapolated from the odd-case pattern; values computed".to_string()
        });
        push(
            format!("L2.3-blocked-{ell}-v{}", ell - 4),
            "Lemma 2.3",
            params([
                ("graph", format!("H*({ell})")),
                ("vertex", (ell - 4).to_string()),
                ("order", (ell - 1).to_string()),
            ]),
            Some(json!([t])),
            note.clone(),
            ClaimKind::BlockedSet {
                family: Family::BlockStar,
                ell,
                vertex: ell - 4,
                expected: ColorSet::from_colors([t]),
            },
        );
        push(
            format!("L2.3-blocked-{ell}-v{}", ell - 3),
            "Lemma 2.3",
            params([
                ("graph", format!("H*({ell})")),
                ("vertex", (ell - 3).to_string()),
                ("order", (ell - 1).to_string()),
            ]),
            Some(json!([t - 1])),
            note.clone(),
            ClaimKind::BlockedSet {
                family: Family::BlockStar,
                ell,
                vertex: ell - 3,
                expected: ColorSet::from_colors([t - 1]),
            },
        );
        push(
            format!("L2.3-blocked-{ell}-empty"),
            "Lemma 2.3",
            params([
                ("graph", format!("H*({ell})")),
                ("order", (ell - 1).to_string()),
            ]),
            Some(json!(true)),
            note.clone(),
            ClaimKind::BlockedEmptyExcept {
                family: Family::BlockStar,
                ell,
                except: vec![ell - 4, ell - 3],
            },
        );
        push(
            format!("C2.4-blocked-H-{ell}"),
            "Cor. 2.4",
            params([
                ("graph", format!("H({ell})")),
                ("order", (ell - 1).to_string()),
            ]),
            Some(json!(true)),
            None,
            ClaimKind::BlockedEmptyExcept {
                family: Family::Block,
                ell,
                except: vec![],
            },
        );
        push(
            format!("C2.4-sat-{ell}"),
            "Cor. 2.4",
            params([("ell", ell.to_string()), ("t", t.to_string())]),
            Some(json!(true)),
            None,
            ClaimKind::BlockSaturated { ell },
        );
    }

    // Bound and search claims.
    push(
        "T1.2-bound-10-5".into(),
        "Thm. 1.2",
        params([("n", "10".into()), ("ell", "5".into())]),
        Some(json!(14)),
        None,
        ClaimKind::BoundValue {
            n: 10,
            ell: 5,
            expected: 14,
        },
    );
    for n in [5usize, 6] {
        push(
            format!("T1.1i-lower-{n}-5"),
            "Thm. 1.1(i)",
            params([("n", n.to_string()), ("ell", "5".into()), ("t", "5".into())]),
            Some(json!(true)),
            None,
            ClaimKind::LowerBound { n, ell: 5, t: 5 },
        );
    }
    push(
        "T1.1ii-P4-n5".into(),
        "Thm. 1.1(ii)",
        params([("n", "5".into()), ("ell", "4".into()), ("t", "8".into())]),
        Some(json!(4)),
        None,
        ClaimKind::MinSat {
            n: 5,
            ell: 4,
            t: 8,
            expected: 4,
        },
    );

    // Residue-case assemblies for ell in {5, 6, 7}: one representative n
    // per residue class (n = 2*ell + r), edge counts against the closed
    // forms, and saturation of every feasible assembly.
    for ell in [5u32, 6, 7] {
        if ell > ell_max {
            break;
        }
        let case = match ell {
            5 => "§3 Case 1",
            6 => "§3 Case 2",
            _ => "§3 Case 3",
        };
        let prefix = match ell {
            5 => "C1".to_string(),
            6 => "C2".to_string(),
            _ => format!("C3-{ell}"),
        };
        for r in 0..ell {
            let n = 2 * ell as usize + r as usize;
            let feasible_at_base = assemble_with_palette(n, ell, block_palette(ell)).is_ok();
            if !feasible_at_base {
                // Encode the palette shortfall as an explicit claim.
                let id = match (ell, r) {
                    (5, 1) => "C1-n≡1-triangles".to_string(),
                    (5, 4) => "C1-n≡4-K4".to_string(),
                    _ => format!("{prefix}-feasible-r{r}"),
                };
                push(
                    id,
                    case,
                    params([
                        ("n", n.to_string()),
                        ("ell", ell.to_string()),
                        ("t", block_palette(ell).to_string()),
                    ]),
                    Some(json!("feasible")),
                    None,
                    ClaimKind::AssemblyFeasible {
                        n,
                        ell,
                        t: block_palette(ell),
                    },
                );
            }
            if assemble_theorem_graph(n, ell).is_err() {
                // No palette relaxation on record: skip edge and
                // saturation claims for this residue.
                continue;
            }
            let note = (!feasible_at_base)
                .then(|| "assembly built at a raised palette; see palette_note".to_string());
            push(
                format!("{prefix}-edges-r{r}"),
                case,
                params([("n", n.to_string()), ("ell", ell.to_string())]),
                Some(json!(closed_form_case_edges(n, ell).expect("defined"))),
                note.clone(),
                ClaimKind::AssemblyEdges { n, ell },
            );
            push(
                format!("{prefix}-sat-r{r}"),
                case,
                params([("n", n.to_string()), ("ell", ell.to_string())]),
                Some(json!(true)),
                note,
                ClaimKind::AssemblySaturated { n, ell },
            );
        }
    }

    // Exploratory: a single block at orders 5 and 6 has no documented
    // saturation verdict; the computed answer is reported as a finding.
    for ell in [5u32, 6] {
        if ell > ell_max {
            break;
        }
        push(
            format!("X-sat-H{ell}"),
            "exploratory",
            params([
                ("ell", ell.to_string()),
                ("t", block_palette(ell).to_string()),
            ]),
            None,
            Some("computed finding; no documented expectation".to_string()),
            ClaimKind::ExploratoryBlockSaturated { ell },
        );
    }
    // Exploratory: exact minima for order-5 paths at five and six vertices
    // are new data; recorded, not compared.
    for n in [5usize, 6] {
        push(
            format!("X-minsat-P5-n{n}"),
            "exploratory",
            params([("n", n.to_string()), ("ell", "5".into()), ("t", "5".into())]),
            None,
            Some("computed finding; no documented expectation".to_string()),
            ClaimKind::ExploratoryMinSat { n, ell: 5, t: 5 },
        );
    }

    Ok(claims)
}

struct Evaluation {
    computed: Value,
    verdict: Verdict,
    witness: Option<Value>,
}

fn pass_if(ok: bool, computed: Value, witness: Option<Value>) -> Evaluation {
    Evaluation {
        computed,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        witness,
    }
}

fn eval_saturated(g: &EdgeColoredGraph, ell: u32) -> Evaluation {
    match crate::saturation::is_saturated(g, ell as usize, g.t()) {
        Ok(true) => pass_if(true, json!(true), None),
        Ok(false) => {
            let witness = if crate::saturation::is_rainbow_free(g, ell as usize) {
                let defects = saturation_defects(g, ell as usize, g.t()).expect("rainbow-free");
                json!({
                    "defects": defects.iter().take(16).collect::<Vec<_>>(),
                    "defect_count": defects.len(),
                })
            } else {
                json!({ "rainbow_free": false })
            };
            pass_if(false, json!(false), Some(witness))
        }
        Err(e) => Evaluation {
            computed: json!(e.to_string()),
            verdict: Verdict::Fail,
            witness: None,
        },
    }
}

impl ClaimKind {
    fn evaluate(&self, budget: &SearchBudget) -> Evaluation {
        match self {
            ClaimKind::BlockEdges { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                pass_if(
                    g.edge_count() == block_edge_count(*ell),
                    json!(g.edge_count()),
                    None,
                )
            }
            ClaimKind::BlockPalette { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                let used = g.colors_used();
                pass_if(
                    used == ColorSet::full(block_palette(*ell)),
                    colors_json(used),
                    None,
                )
            }
            ClaimKind::BlockProper { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                pass_if(g.is_proper_coloring(), json!(g.is_proper_coloring()), None)
            }
            ClaimKind::BlockRainbowFree { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                let free = !contains_rainbow_path(&g, *ell as usize);
                pass_if(free, json!(free), None)
            }
            ClaimKind::BlockedSet {
                family,
                ell,
                vertex,
                expected,
            } => {
                let g = family.build(*ell).expect("catalog ell valid");
                let got = blocked_pendant_colors(&g, *vertex, *ell as usize - 1)
                    .expect("catalog vertex valid");
                let ok = matches!(got, Blocked::Colors(s) if s == *expected);
                pass_if(ok, blocked_json(got), None)
            }
            ClaimKind::BlockedEmptyExcept { family, ell, except } => {
                let g = family.build(*ell).expect("catalog ell valid");
                let table = blocked_table(&g, *ell as usize - 1).expect("order valid");
                let all_empty = table
                    .iter()
                    .enumerate()
                    .filter(|(v, _)| !except.contains(&(*v as u32)))
                    .all(|(_, b)| b.is_empty());
                let witness = (!all_empty).then(|| table_json(&table));
                pass_if(all_empty, json!(all_empty), witness)
            }
            ClaimKind::BlockSaturated { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                eval_saturated(&g, *ell)
            }
            ClaimKind::UnionSaturated { k, ell } => {
                let g = build_g_star(*k, *ell).expect("catalog args valid");
                eval_saturated(&g, *ell)
            }
            ClaimKind::UnionEdges { k, ell } => {
                let g = build_g_star(*k, *ell).expect("catalog args valid");
                let expected = bound_new(g.n(), *ell);
                pass_if(g.edge_count() == expected, json!(g.edge_count()), None)
            }
            ClaimKind::BoundValue { n, ell, expected } => {
                let got = bound_new(*n, *ell);
                pass_if(got == *expected, json!(got), None)
            }
            ClaimKind::BoundImproves { n, ell } => {
                let new = bound_new(*n, *ell);
                let old = bound_old(*n, *ell);
                pass_if(
                    new < old,
                    json!({ "new": new, "old": old }),
                    None,
                )
            }
            ClaimKind::LowerBound { n, ell, t } => {
                match verify_lower_bound(*n, *ell as usize, *t, budget) {
                    Ok(ok) => pass_if(ok, json!(ok), None),
                    Err(SearchError::BudgetExhausted | SearchError::BudgetGuard { .. }) => {
                        Evaluation {
                            computed: json!("budget exhausted"),
                            verdict: Verdict::Skipped,
                            witness: None,
                        }
                    }
                    Err(e) => Evaluation {
                        computed: json!(e.to_string()),
                        verdict: Verdict::Fail,
                        witness: None,
                    },
                }
            }
            ClaimKind::MinSat { n, ell, t, expected } => {
                match min_saturated_size(*n, *ell as usize, *t, budget) {
                    Ok(outcome) if outcome.exhausted => {
                        let witness = outcome.witness.as_ref().map(|g| json!(write_ecg(g)));
                        pass_if(
                            outcome.minimum == Some(*expected),
                            json!(outcome.minimum),
                            witness,
                        )
                    }
                    Ok(_) => Evaluation {
                        computed: json!("budget exhausted mid-search"),
                        verdict: Verdict::Skipped,
                        witness: None,
                    },
                    Err(SearchError::BudgetGuard { .. }) => Evaluation {
                        computed: json!("outside budget guards"),
                        verdict: Verdict::Skipped,
                        witness: None,
                    },
                    Err(e) => Evaluation {
                        computed: json!(e.to_string()),
                        verdict: Verdict::Fail,
                        witness: None,
                    },
                }
            }
            ClaimKind::AssemblyFeasible { n, ell, t } => {
                match assemble_with_palette(*n, *ell, *t) {
                    Ok(_) => pass_if(true, json!("feasible"), None),
                    Err(ConstructError::InfeasibleRecipe {
                        required_palette,
                        palette,
                        detail,
                        ..
                    }) => Evaluation {
                        computed: json!(format!(
                            "infeasible: needs {required_palette} colors, palette has {palette} ({detail})"
                        )),
                        verdict: Verdict::Infeasible,
                        witness: None,
                    },
                    Err(e) => Evaluation {
                        computed: json!(e.to_string()),
                        verdict: Verdict::Fail,
                        witness: None,
                    },
                }
            }
            ClaimKind::AssemblyEdges { n, ell } => {
                let assembly = assemble_theorem_graph(*n, *ell).expect("feasible in catalog");
                let closed = closed_form_case_edges(*n, *ell).expect("defined");
                let ok = assembly.expected_edges == closed
                    && assembly.graph.edge_count() == closed;
                pass_if(ok, json!(assembly.graph.edge_count()), None)
            }
            ClaimKind::AssemblySaturated { n, ell } => {
                let assembly = assemble_theorem_graph(*n, *ell).expect("feasible in catalog");
                eval_saturated(&assembly.graph, *ell)
            }
            ClaimKind::ExploratoryBlockSaturated { ell } => {
                let g = build_h(*ell).expect("catalog ell valid");
                let mut eval = eval_saturated(&g, *ell);
                // Findings are recorded, not judged.
                eval.verdict = Verdict::Pass;
                eval
            }
            ClaimKind::ExploratoryMinSat { n, ell, t } => {
                match min_saturated_size(*n, *ell as usize, *t, budget) {
                    Ok(outcome) if outcome.exhausted => Evaluation {
                        computed: json!(outcome.minimum),
                        verdict: Verdict::Pass,
                        witness: outcome.witness.as_ref().map(|g| json!(write_ecg(g))),
                    },
                    Ok(_) | Err(SearchError::BudgetExhausted | SearchError::BudgetGuard { .. }) => {
                        Evaluation {
                            computed: json!("budget exhausted"),
                            verdict: Verdict::Skipped,
                            witness: None,
                        }
                    }
                    Err(e) => Evaluation {
                        computed: json!(e.to_string()),
                        verdict: Verdict::Fail,
                        witness: None,
                    },
                }
            }
        }
    }
}

/// Executes claims (possibly filtered) and assembles the report, ordered
/// by claim id regardless of execution schedule. A FAIL never aborts the
/// run.
pub fn verify_claims(claims: &[Claim], budget: &SearchBudget) -> Report {
    let mut results: Vec<ClaimResult> = claims
        .par_iter()
        .map(|claim| {
            let start = Instant::now();
            let eval = claim.kind.evaluate(budget);
            ClaimResult {
                id: claim.id.clone(),
                source: claim.source.clone(),
                params: claim.params.clone(),
                expected: claim.expected.clone(),
                computed: eval.computed,
                verdict: eval.verdict,
                witness: eval.witness,
                note: claim.note.clone(),
                ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary::default();
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Infeasible => summary.infeasible += 1,
            Verdict::Skipped => summary.skipped += 1,
        }
    }
    Report {
        schema_version: 1,
        claims: results,
        summary,
    }
}
