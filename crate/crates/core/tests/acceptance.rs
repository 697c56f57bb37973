//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//! Criterion 9 (CLI byte determinism) lives in the cli crate's acceptance
//! test, next to the binary it drives.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use artau_core::qsl2::{BlockFamily, StringObject};
use artau_core::quiverrep::{self, Representation};
use artau_core::serial::{Interval, SerialCheck, SerialFamily, Side};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn criterion(num: u32, desc: &str, f: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    match f() {
        Ok(()) => println!("ACCEPTANCE {num}: PASS ({:.2?}) - {desc}", start.elapsed()),
        Err(msg) => {
            println!("ACCEPTANCE {num}: FAIL - {desc}: {msg}");
            panic!("criterion {num} failed: {msg}");
        }
    }
}

fn iso(a: &Representation, b: &Representation) -> Result<bool, String> {
    Ok(quiverrep::is_isomorphic(a, b).map_err(|e| e.to_string())?.is_iso())
}

#[test]
fn criterion_1_closed_forms_match_oracle() {
    criterion(
        1,
        "closed forms (second cosyzygy, Nakayama, transpose, DTr, star) match \
         the oracle for n in 1..=4 on every interval with sufficient margin",
        || {
            let start = Instant::now();
            let checks = [
                SerialCheck::Cosyzygy2,
                SerialCheck::Nakayama,
                SerialCheck::Star,
                SerialCheck::Transpose,
                SerialCheck::Dtr,
            ];
            for n in 1..=4usize {
                let n_i = n as i64;
                let fam = SerialFamily::new(n, -3 * n_i - 2, n_i + 2)
                    .map_err(|e| e.to_string())?;
                let report = fam.verify(&checks, 1);
                for check in &checks {
                    let count = report
                        .entries
                        .iter()
                        .filter(|e| e.check == check.name())
                        .count();
                    ensure!(count > 0, "n={n}: no testable intervals for {}", check.name());
                }
                for e in &report.entries {
                    ensure!(
                        e.pass,
                        "n={n}: {} on {} failed ({} vs {}; {})",
                        e.check,
                        e.object,
                        e.expected,
                        e.actual,
                        e.note
                    );
                }
            }
            let elapsed = start.elapsed();
            ensure!(
                elapsed.as_secs_f64() < 60.0,
                "expected runtime under 60 s, took {elapsed:.2?}"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_2_almost_split_sequences_and_ar_figure() {
    criterion(
        2,
        "serial almost split sequences realize non-split with the translate \
         as right end, and the n=4 AR quiver has the figure structure",
        || {
            for n in 1..=4usize {
                let n_i = n as i64;
                let fam = SerialFamily::new(n, -3 * n_i - 2, n_i + 2)
                    .map_err(|e| e.to_string())?;
                let report = fam.verify(&[SerialCheck::AlmostSplit], 1);
                ensure!(!report.entries.is_empty(), "n={n}: no sequences tested");
                for e in &report.entries {
                    ensure!(e.pass, "n={n}: sequence at {} failed: {} {}", e.object, e.actual, e.note);
                }
            }

            // Oracle cross-check of the endpoint on a sample of translates.
            let fam = SerialFamily::new(4, -14, 8).map_err(|e| e.to_string())?;
            for (i, j) in [(0, 2), (1, 1), (0, 3), (-1, 2)] {
                let left = Interval { side: Side::V, i, j };
                let seq = fam.almost_split(&left).map_err(|e| e.to_string())?;
                let translated = quiverrep::dtr(&fam.realize(&left).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let right = fam.realize(&seq.right).map_err(|e| e.to_string())?;
                ensure!(
                    iso(&translated, &right)?,
                    "right end of the sequence at V {i} {j} is not DTr(left)"
                );
            }

            // Figure structure for n = 4 on the window [-8, 4].
            let fam = SerialFamily::new(4, -8, 4).map_err(|e| e.to_string())?;
            let (q, layout) = fam.ar_quiver();
            let ids: std::collections::BTreeSet<&String> = q.nodes.iter().map(|n| &n.id).collect();
            ensure!(ids.len() == q.nodes.len(), "duplicate nodes (injectives printed twice?)");
            let rows: std::collections::BTreeSet<i64> =
                layout.coords.values().map(|(_, r, _)| *r).collect();
            ensure!(rows.len() == 5, "expected 5 rows, got {}", rows.len());
            for a in &q.arrows {
                let parse = |s: &str| -> (i64, i64) {
                    let inner = s.trim_start_matches("V(").trim_end_matches(')');
                    let (i, j) = inner.split_once(',').unwrap();
                    (i.parse().unwrap(), j.parse().unwrap())
                };
                let (si, sj) = parse(&a.src);
                let (di, dj) = parse(&a.dst);
                ensure!(
                    (di == si - 1 && dj == sj) || (di == si && dj == sj - 1),
                    "arrow {} -> {} is not of the two mesh families",
                    a.src,
                    a.dst
                );
            }
            for (s, d) in &q.translation {
                let num = |x: &str| -> Vec<i64> {
                    x.trim_start_matches("V(")
                        .trim_end_matches(')')
                        .split(',')
                        .map(|t| t.parse().unwrap())
                        .collect()
                };
                let (s, d) = (num(s), num(d));
                ensure!(
                    (s[0] - 1, s[1] - 1) == (d[0], d[1]),
                    "translation is not a one-step shift"
                );
            }
            ensure!(q.mesh_lint().is_empty(), "mesh violations on interior nodes");
            let stable = q.stable();
            ensure!(
                stable.nodes.iter().all(|n| !n.injective),
                "stable quiver retains injectives"
            );
            let stable_rows: std::collections::BTreeSet<i64> = layout
                .coords
                .iter()
                .filter(|(id, _)| stable.node(id).is_some())
                .map(|(_, (_, r, _))| *r)
                .collect();
            ensure!(stable_rows.len() == 4, "stable quiver should be a 4-row grid");
            for n in stable.nodes.iter().filter(|n| !n.boundary) {
                ensure!(
                    stable.translation.contains_key(&n.id),
                    "interior stable node {} lacks a translate",
                    n.id
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_3_serial_family_is_not_symmetric() {
    criterion(
        3,
        "Nakayama fixes no serial interval (non-symmetry) and sends \
         projective-injectives to projective-injectives",
        || {
            for n in 1..=4usize {
                let n_i = n as i64;
                let fam = SerialFamily::new(n, -3 * n_i - 2, n_i + 2)
                    .map_err(|e| e.to_string())?;
                let report = fam.check_symmetric(1);
                ensure!(!report.entries.is_empty(), "n={n}: nothing tested");
                for e in &report.entries {
                    ensure!(
                        !e.pass,
                        "n={n}: Nakayama unexpectedly fixes {} ({})",
                        e.object,
                        e.note
                    );
                }
            }
            // nu of a projective-injective is again projective-injective.
            let fam = SerialFamily::new(4, -14, 8).map_err(|e| e.to_string())?;
            let inj = fam
                .realize(&Interval { side: Side::V, i: -4, j: 0 })
                .map_err(|e| e.to_string())?;
            let nu = quiverrep::nakayama(&inj).map_err(|e| e.to_string())?;
            let as_inj = quiverrep::injective(fam.presentation(), 4).map_err(|e| e.to_string())?;
            let as_proj = quiverrep::projective(fam.presentation(), 0).map_err(|e| e.to_string())?;
            ensure!(iso(&nu, &as_inj)?, "nu(I_0) is not the injective at 4");
            ensure!(iso(&nu, &as_proj)?, "nu(I_0) is not the projective at 0");
            Ok(())
        },
    );
}

#[test]
fn criterion_4_block_injectives() {
    criterion(
        4,
        "block injectives have the stated dimension vectors with simple top \
         and socle and neighbor-simple rad/soc, for n <= 6 in window [0, 8]",
        || {
            let fam = BlockFamily::new(8, 1).map_err(|e| e.to_string())?;
            for n in 0..=6i64 {
                let inj = fam.injective(n).map_err(|e| e.to_string())?;
                let expected: BTreeMap<i64, usize> = if n == 0 {
                    [(0, 2), (1, 1)].into_iter().collect()
                } else {
                    [(n - 1, 1), (n, 2), (n + 1, 1)].into_iter().collect()
                };
                let actual: BTreeMap<i64, usize> = inj
                    .dim_vector()
                    .iter()
                    .filter(|(_, &d)| d > 0)
                    .map(|(&v, &d)| (v, d))
                    .collect();
                ensure!(actual == expected, "I_{n} has dimension vector {actual:?}");
                ensure!(
                    inj.total_dim() == if n == 0 { 3 } else { 4 },
                    "I_{n} has total dimension {}",
                    inj.total_dim()
                );

                let simple = Representation::simple(Arc::clone(fam.presentation()), n)
                    .map_err(|e| e.to_string())?;
                let (t, _) = quiverrep::top(&inj);
                let (s, _) = quiverrep::socle(&inj);
                ensure!(iso(&t, &simple)?, "top of I_{n} is not S({n})");
                ensure!(iso(&s, &simple)?, "socle of I_{n} is not S({n})");

                let (rad, _) = quiverrep::radical(&inj);
                let (_, soc_incl) = quiverrep::socle(&rad);
                let (rad_mod_soc, _) = soc_incl.cokernel();
                let expected_rs = if n == 0 {
                    Representation::simple(Arc::clone(fam.presentation()), 1)
                        .map_err(|e| e.to_string())?
                } else {
                    let a = Representation::simple(Arc::clone(fam.presentation()), n - 1)
                        .map_err(|e| e.to_string())?;
                    let b = Representation::simple(Arc::clone(fam.presentation()), n + 1)
                        .map_err(|e| e.to_string())?;
                    a.direct_sum(&b).map_err(|e| e.to_string())?
                };
                ensure!(iso(&rad_mod_soc, &expected_rs)?, "rad/soc of I_{n} is wrong");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_block_sequences() {
    criterion(
        5,
        "block almost split sequences realize exactly and non-split with \
         second-cosyzygy right ends, |i| <= 2, n <= 4, window [0, 10]",
        || {
            let start = Instant::now();
            let fam = BlockFamily::new(10, 1).map_err(|e| e.to_string())?;
            let report = fam.verify_sequences(2, 4, 1);
            ensure!(
                report.entries.iter().filter(|e| e.check == "almost_split_realized").count() == 25,
                "expected 25 sequences"
            );
            for e in &report.entries {
                ensure!(
                    e.pass,
                    "{} on {} failed ({}; {})",
                    e.check,
                    e.object,
                    e.actual,
                    e.note
                );
            }
            let elapsed = start.elapsed();
            ensure!(
                elapsed.as_secs_f64() < 120.0,
                "expected runtime under 120 s, took {elapsed:.2?}"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_6_block_symmetry() {
    criterion(
        6,
        "the symmetrizing-form Gram matrix is symmetric and nondegenerate on \
         the interior of [0, 8], and Nakayama fixes every O^k S n in range",
        || {
            let fam = BlockFamily::new(8, 2).map_err(|e| e.to_string())?;
            let report = fam.check_symmetric(2, 4, 1);
            for e in &report.entries {
                ensure!(e.pass, "{} on {} failed ({})", e.check, e.object, e.note);
            }
            let nu_checks = report.entries.iter().filter(|e| e.check == "nu_identity").count();
            ensure!(nu_checks == 25, "expected 25 Nakayama checks, ran {nu_checks}");
            Ok(())
        },
    );
}

#[test]
fn criterion_7_functor_calculus() {
    criterion(
        7,
        "syzygy and cosyzygy invert each other on non-projective \
         indecomposables, and star is exact on 12 constructed sequences",
        || {
            // Serial family round trips.
            let fam = SerialFamily::new(3, -10, 10).map_err(|e| e.to_string())?;
            for i in -2..=2i64 {
                for j in i..i + 3 {
                    let v = Interval { side: Side::V, i, j };
                    let rep = fam.realize(&v).map_err(|e| e.to_string())?;
                    let around = quiverrep::cosyzygy(&quiverrep::syzygy(&rep).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure!(iso(&around, &rep)?, "cosyzygy(syzygy) moved V {i} {j}");
                    let back = quiverrep::syzygy(&quiverrep::cosyzygy(&rep).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure!(iso(&back, &rep)?, "syzygy(cosyzygy) moved V {i} {j}");
                }
            }
            // Block round trips, both compositions.
            let block = BlockFamily::new(9, 1).map_err(|e| e.to_string())?;
            for n in 0..=3i64 {
                for k in -1..=1i64 {
                    let rep = block.realize(&StringObject { k, n }).map_err(|e| e.to_string())?;
                    let around = quiverrep::cosyzygy(&quiverrep::syzygy(&rep).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure!(iso(&around, &rep)?, "cosyzygy(syzygy) moved O^{k} S {n}");
                    let back = quiverrep::syzygy(&quiverrep::cosyzygy(&rep).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure!(iso(&back, &rep)?, "syzygy(cosyzygy) moved O^{k} S {n}");
                }
            }

            // Star exactness on 12 short exact sequences.
            let mut checked = 0;
            for (s, i, j) in
                [(1, 0, 2), (2, 0, 2), (0, -1, 1), (1, -1, 2), (2, 1, 3), (3, 1, 3), (1, -2, 1), (2, 0, 3)]
            {
                let a = fam.realize(&Interval { side: Side::V, i: s, j }).map_err(|e| e.to_string())?;
                let b = fam.realize(&Interval { side: Side::V, i, j }).map_err(|e| e.to_string())?;
                let c = fam
                    .realize(&Interval { side: Side::V, i, j: s - 1 })
                    .map_err(|e| e.to_string())?;
                let found = quiverrep::realize_ses(&a, &b, &c)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("no sequence for sub V {s} {j} of V {i} {j}"))?;
                let starred_surj = quiverrep::star_morphism(&found.seq.surj).map_err(|e| e.to_string())?;
                let starred_inj = quiverrep::star_morphism(&found.seq.inj).map_err(|e| e.to_string())?;
                ensure!(starred_surj.is_injective(), "star(surj) has a kernel");
                ensure!(starred_inj.is_surjective(), "star(inj) has a cokernel");
                ensure!(
                    quiverrep::exact_at(&starred_surj, &starred_inj),
                    "starred sequence is not exact at the middle"
                );
                checked += 1;
            }
            for (n, k) in [(1i64, 1i64), (2, 1), (1, 0), (2, 0)] {
                let seq = block.almost_split(&StringObject { k, n });
                let a = block.realize(&seq.left).map_err(|e| e.to_string())?;
                let c = block.realize(&seq.right).map_err(|e| e.to_string())?;
                let mut mids = Vec::new();
                for m in &seq.middle {
                    mids.push(block.realize(m).map_err(|e| e.to_string())?);
                }
                if let Some(inj_n) = seq.middle_injective {
                    mids.push(block.injective(inj_n).map_err(|e| e.to_string())?);
                }
                let refs: Vec<&Representation> = mids.iter().collect();
                let b = Representation::direct_sum_many(&refs).map_err(|e| e.to_string())?;
                let found = quiverrep::realize_ses(&a, &b, &c)
                    .map_err(|e| e.to_string())?
                    .ok_or("block sequence did not realize")?;
                let starred_surj = quiverrep::star_morphism(&found.seq.surj).map_err(|e| e.to_string())?;
                let starred_inj = quiverrep::star_morphism(&found.seq.inj).map_err(|e| e.to_string())?;
                ensure!(
                    starred_surj.is_injective()
                        && starred_inj.is_surjective()
                        && quiverrep::exact_at(&starred_surj, &starred_inj),
                    "starred block sequence is not exact"
                );
                checked += 1;
            }
            ensure!(checked >= 10, "only {checked} sequences checked");
            Ok(())
        },
    );
}

#[test]
fn criterion_8_decomposition_oracle() {
    criterion(
        8,
        "Fitting decomposition recovers the exact multiset for 50 seeded \
         random direct sums of up to 4 known indecomposables",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x41525441);

            // Pools of known indecomposables for both families.
            let serial = SerialFamily::new(3, -6, 6).map_err(|e| e.to_string())?;
            let mut serial_pool = Vec::new();
            for i in -3..=2i64 {
                for j in i..=(i + 3).min(5) {
                    serial_pool.push(
                        serial
                            .realize(&Interval { side: Side::V, i, j })
                            .map_err(|e| e.to_string())?,
                    );
                }
            }
            let block = BlockFamily::new(8, 1).map_err(|e| e.to_string())?;
            let mut block_pool = Vec::new();
            for n in 0..=3i64 {
                for k in -1..=1i64 {
                    block_pool.push(block.realize(&StringObject { k, n }).map_err(|e| e.to_string())?);
                }
            }
            for n in 0..=2i64 {
                block_pool.push(block.injective(n).map_err(|e| e.to_string())?);
            }

            for case in 0..50 {
                let pool = if case % 2 == 0 { &serial_pool } else { &block_pool };
                let count = rng.random_range(1..=4usize);
                let picks: Vec<&Representation> =
                    (0..count).map(|_| &pool[rng.random_range(0..pool.len())]).collect();
                let total = Representation::direct_sum_many(&picks).map_err(|e| e.to_string())?;
                let summands = quiverrep::fitting_decompose(&total).map_err(|e| e.to_string())?;
                ensure!(
                    summands.len() == count,
                    "case {case}: expected {count} summands, got {}",
                    summands.len()
                );
                // Match the multiset by isomorphism.
                let mut used = vec![false; summands.len()];
                for pick in &picks {
                    let mut matched = false;
                    for (idx, s) in summands.iter().enumerate() {
                        if !used[idx] && iso(&s.rep, pick)? {
                            used[idx] = true;
                            matched = true;
                            break;
                        }
                    }
                    ensure!(matched, "case {case}: a summand went unmatched");
                }
            }
            Ok(())
        },
    );
}
