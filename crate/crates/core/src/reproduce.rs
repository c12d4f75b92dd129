//! End-to-end reproduction of the published examples and identities, one
//! function per claim. Used by `zgray demo paper` and the acceptance tests.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BinaryCode;
use crate::constructions::{build_bi, code_di, code_hi, z24_examples, TypeProfile};
use crate::error::Result;
use crate::gray::{image, phi_cap, GrayMap, OrderedHadamard, PerfectPartition};
use crate::ring::{Metric, Modulus, RingWord};
use crate::verify::{
    all_linear_codes, canonicalize, has_di_parameters, is_hadamard, isometry_census,
    one_prime_perfect_criterion, one_prime_perfect_definition, phi_cap_extended_perfect,
    verify_duality,
};
use crate::weights::{
    carlet_transform, class_transform_closed_form, hamming_we, macwilliams_binary,
    symmetrized_we_of_words, ClassCase,
};
use crate::zcode::{LinearZCode, ZMatrix, DEFAULT_BUDGET};

pub const DEFAULT_SEED: u64 = 20_130_601;

/// Outcome of one reproduced claim.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub claim: String,
    pub computed: Vec<String>,
    pub pass: bool,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

struct Tally {
    lines: Vec<String>,
    pass: bool,
}

impl Tally {
    fn new() -> Self {
        Tally {
            lines: Vec::new(),
            pass: true,
        }
    }

    fn check(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.lines.push(if ok {
            line
        } else {
            format!("{line}  <-- mismatch")
        });
        self.pass &= ok;
    }
}

fn run(id: u32, claim: &str, body: impl FnOnce(&mut Tally) -> Result<()>) -> Outcome {
    let start = Instant::now();
    let mut t = Tally::new();
    if let Err(e) = body(&mut t) {
        t.check(false, format!("error: {e}"));
    }
    Outcome {
        id,
        claim: claim.to_string(),
        computed: t.lines,
        pass: t.pass,
        elapsed: start.elapsed(),
    }
}

fn profile(k: u32, counts: &[u32]) -> TypeProfile {
    TypeProfile::new(k, counts.to_vec()).expect("fixed profile is valid")
}

/// Rows of a matrix as digit strings without separators.
pub fn digit_rows(m: &ZMatrix) -> Vec<String> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

/// The three `B_I` matrices printed for `k = 3`.
pub fn printed_bi() -> Vec<(TypeProfile, Vec<&'static str>)> {
    vec![
        (
            profile(3, &[2, 1, 0]),
            vec![
                "1111111111111111",
                "0000000044444444",
                "0000444400004444",
                "0246024602460246",
            ],
        ),
        (
            profile(3, &[0, 1, 1]),
            vec![
                "11111111111111111111111111111111",
                "00000000222222224444444466666666",
                "01234567012345670123456701234567",
            ],
        ),
        (
            profile(3, &[1, 1, 1]),
            vec![
                "1111111111111111111111111111111111111111111111111111111111111111",
                "0000000000000000000000000000000044444444444444444444444444444444",
                "0000000022222222444444446666666600000000222222224444444466666666",
                "0123456701234567012345670123456701234567012345670123456701234567",
            ],
        ),
    ]
}

pub fn bi_matrices() -> Outcome {
    run(
        1,
        "B_I matrices for k=3 match the printed ones character for character",
        |t| {
            for (p, expected) in printed_bi() {
                let got = digit_rows(&build_bi(&p));
                t.check(
                    got == expected,
                    format!("I={p}: {}x{} {}", got.len(), p.n(), got.join(" / ")),
                );
            }
            Ok(())
        },
    )
}

/// The classes listed with the first example and the eight words of
/// `Φ(2 0 7)`.
pub fn example_one_data() -> (Vec<(usize, [&'static str; 2])>, [&'static str; 8]) {
    (
        vec![
            (0, ["0000", "1111"]),
            (2, ["1100", "0011"]),
            (7, ["0001", "1110"]),
        ],
        [
            "110000000001",
            "110000001110",
            "110011110001",
            "110011111110",
            "001100000001",
            "001100001110",
            "001111110001",
            "001111111110",
        ],
    )
}

pub fn example_one() -> Outcome {
    run(
        2,
        "Φ(2 0 7) = H_2 × H_0 × H_7 is the listed set of 8 words",
        |t| {
            let (classes, words) = example_one_data();
            let p = PerfectPartition::standard(3)?;
            for (j, listed) in classes {
                let ok = p.class(j)? == BinaryCode::parse_words(&listed)?;
                t.check(ok, format!("H_{j} = {{{}}}", listed.join(",")));
            }
            let x = RingWord::from_ints(Modulus::power_of_two(3)?, &[2, 0, 7])?;
            let got = phi_cap(&x, &p, DEFAULT_BUDGET)?;
            let expected = BinaryCode::parse_words(&words)?;
            t.check(
                got == expected,
                format!(
                    "|Φ(2 0 7)| = {}, set equality {}",
                    got.cardinality(),
                    got == expected
                ),
            );
            Ok(())
        },
    )
}

pub fn duality() -> Outcome {
    run(3, "W_φ(D_I) = MacWilliams transform of W_Φ(H_I)", |t| {
        let profiles = [
            profile(2, &[1, 0]),
            profile(3, &[1, 0, 0]),
            profile(3, &[2, 0, 0]),
            profile(3, &[0, 1, 0]),
            profile(3, &[1, 1, 0]),
        ];
        for p in profiles {
            let r = verify_duality(&p)?;
            t.check(
                r.verdict,
                format!(
                    "k={} I={p} n={} [{}]: {}",
                    p.k(),
                    p.n(),
                    r.detail("sw_route").unwrap_or("-"),
                    r.detail("lhs").unwrap_or("-")
                ),
            );
        }
        Ok(())
    })
}

pub fn closed_forms() -> Outcome {
    run(
        4,
        "transformed enumerators of the partition classes follow the three closed forms",
        |t| {
            for k in [3, 4] {
                let p = PerfectPartition::standard(k)?;
                let m = p.m();
                let mut agree = 0;
                for j in 0..2 * m {
                    let class = p.class(j)?;
                    let got = macwilliams_binary(
                        &hamming_we(&class),
                        &BigUint::from(class.cardinality()),
                    )?;
                    let want = class_transform_closed_form(m, ClassCase::of_index(j))?;
                    if got == want {
                        agree += 1;
                    } else {
                        t.check(false, format!("k={k} class {j}: {got} vs {want}"));
                    }
                }
                let zero_form = class_transform_closed_form(m, ClassCase::ContainsZero)?;
                t.check(
                    agree == 2 * m,
                    format!(
                        "k={k}: {agree}/{} classes agree; class 0 gives {zero_form}",
                        2 * m
                    ),
                );
                t.check(
                    zero_form.coeff(m / 2) == &((2 * m - 2) as i64).into(),
                    format!("middle coefficient 2m-2 = {}", zero_form.coeff(m / 2)),
                );
            }
            Ok(())
        },
    )
}

/// A random linear code of `Z_8^n` from 1 to `n + 1` random generators.
fn random_code(rng: &mut ChaCha8Rng, md: Modulus, n: usize) -> Result<LinearZCode> {
    let gens = rng.gen_range(1..=n + 1);
    let rows = (0..gens)
        .map(|_| (0..n).map(|_| rng.gen_range(0..md.two_m())).collect())
        .collect();
    LinearZCode::from_generators(ZMatrix::new(md, n, rows)?)
}

pub fn carlet(seed: u64, samples: usize) -> Outcome {
    run(
        5,
        "Carlet transform of SW_{C⊥} equals the enumerator of φ(C) over Z_8",
        |t| {
            let md = Modulus::power_of_two(3)?;
            let a = OrderedHadamard::sylvester(3)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut agree = 0;
            for s in 0..samples {
                let n = 1 + s % 3;
                let code = random_code(&mut rng, md, n)?;
                let dual = code.dual_by_scan()?;
                let words = dual.enumerate_raw()?;
                let sw = symmetrized_we_of_words(n, words.iter().map(|w| w.as_slice()));
                let got = carlet_transform(&sw, 3, &BigUint::from(words.len()))?;
                let direct = hamming_we(&image(&code, GrayMap::Phi(&a))?);
                if got == direct {
                    agree += 1;
                } else {
                    t.check(false, format!("sample {s}: {got} vs {direct}"));
                }
            }
            t.check(
                agree == samples,
                format!("{agree}/{samples} random codes agree (seed {seed})"),
            );
            Ok(())
        },
    )
}

pub fn perfect_codes() -> Outcome {
    run(
        6,
        "H_I is 1'-perfect (kn <= 16) and Φ(H_I) is extended 1-perfect (k=3, n=2,4)",
        |t| {
            let mut checked = 0;
            for k in 2..=16u32 {
                let max_r = (16 / k).ilog2();
                for p in TypeProfile::all(k, max_r)? {
                    let r = one_prime_perfect_definition(&code_hi(&p)?)?;
                    if !r.verdict {
                        t.check(false, format!("k={k} I={p}: {}", r.witnesses.join(" ")));
                    }
                    checked += 1;
                }
            }
            t.check(true, format!("{checked} profiles pass the definition test"));
            let part = PerfectPartition::standard(3)?;
            for p in TypeProfile::all(3, 2)?.into_iter().filter(|p| p.n() >= 2) {
                let r = phi_cap_extended_perfect(&code_hi(&p)?, &part)?;
                t.check(
                    r.verdict,
                    format!(
                        "Φ(H_I) k=3 I={p}: ({}, {}, {}) via {}",
                        r.length,
                        r.cardinality,
                        r.distance.map_or("-".into(), |d| d.to_string()),
                        r.method
                    ),
                );
            }
            Ok(())
        },
    )
}

pub fn z24() -> Outcome {
    run(
        7,
        "Z_24 examples: 1'-perfect check matrices and their Paley-12 images",
        |t| {
            let (bp, bpp) = z24_examples();
            let a = OrderedHadamard::paley12();
            for (name, b, image_size, params) in [
                ("B′", &bp, 192, (96, 192, 48)),
                ("B″", &bpp, 144, (72, 144, 30)),
            ] {
                let r = one_prime_perfect_criterion(b, DEFAULT_BUDGET)?;
                t.check(
                    r.detail("syndrome_image") == Some(&image_size.to_string()),
                    format!(
                        "{name}: syndrome image {} (claimed {image_size})",
                        r.detail("syndrome_image").unwrap_or("-")
                    ),
                );
                let light = match r.witnesses.first() {
                    Some(w) => format!(", kernel word {w} of wt⋄ {}", r.distance.unwrap_or(0)),
                    None => String::new(),
                };
                t.check(
                    r.verdict,
                    format!("{name}: 1'-perfect {}{light}", r.verdict),
                );
                let img = image(&LinearZCode::from_generators(b.clone())?, GrayMap::Phi(&a))?;
                let h = is_hadamard(&img);
                let got = (
                    img.len(),
                    img.cardinality(),
                    h.distance.unwrap_or(0) as usize,
                );
                t.check(
                    got == params,
                    format!("φ(span {name}) = {got:?} (claimed {params:?})"),
                );
                t.check(
                    h.verdict == (params.2 * 2 >= params.0),
                    format!("φ(span {name}) Hadamard {}", h.verdict),
                );
            }
            Ok(())
        },
    )
}

pub fn hadamard_images() -> Outcome {
    run(
        8,
        "φ(D_I) is an (n2^{k-1}, n2^k, n2^{k-2}) Hadamard code with distances in {L/2, L}",
        |t| {
            for (k, ns) in [(2u32, &[2usize, 4][..]), (3, &[2, 4, 8, 16][..])] {
                let a = OrderedHadamard::sylvester(k)?;
                for p in TypeProfile::all(k, 4)?
                    .into_iter()
                    .filter(|p| ns.contains(&p.n()))
                {
                    let r = is_hadamard(&image(&code_di(&p)?, GrayMap::Phi(&a))?);
                    let two = r.detail("two_distance") == Some("true");
                    t.check(
                        r.verdict && two,
                        format!(
                            "k={k} I={p}: ({}, {}, {}) distances {{{}}}",
                            r.length,
                            r.cardinality,
                            r.distance.unwrap_or(0),
                            r.detail("distance_set").unwrap_or("")
                        ),
                    );
                }
            }
            Ok(())
        },
    )
}

/// A random monomial transform: unit scalings and a permutation.
pub fn random_monomial(
    rng: &mut ChaCha8Rng,
    md: Modulus,
    n: usize,
) -> Result<(RingWord, Vec<usize>)> {
    let units = md.units();
    let z: Vec<u32> = (0..n)
        .map(|_| *units.choose(rng).expect("units exist"))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Ok((RingWord::new(md, z)?, perm))
}

pub fn classification(seed: u64, rounds: usize) -> Outcome {
    run(
        9,
        "scrambled D_I canonicalize back; every (2,8,2)* code of Z_4^2 is D_(1,0)",
        |t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for k in [2u32, 3] {
                for p in TypeProfile::all(k, 3)? {
                    let di = code_di(&p)?;
                    let mut ok = 0;
                    for _ in 0..rounds {
                        let (z, perm) = random_monomial(&mut rng, p.modulus(), p.n())?;
                        let scrambled = di.apply_monomial(&z, &perm)?;
                        let c = canonicalize(&scrambled)?;
                        let back = code_di(&c.profile)?.apply_monomial(&c.z, &c.perm)?;
                        if c.profile == p && back.same_code(&scrambled) {
                            ok += 1;
                        }
                    }
                    t.check(
                        ok == rounds,
                        format!("k={k} I={p}: {ok}/{rounds} round trips"),
                    );
                }
            }
            let md = Modulus::power_of_two(2)?;
            let codes = all_linear_codes(md, 2, DEFAULT_BUDGET)?;
            let target = profile(2, &[1, 0]);
            let mut hits = 0;
            let mut exceptions = 0;
            for code in &codes {
                if has_di_parameters(code)? {
                    hits += 1;
                    if canonicalize(code).map(|c| c.profile).ok() != Some(target.clone()) {
                        exceptions += 1;
                    }
                }
            }
            t.check(
            hits > 0 && exceptions == 0,
            format!("{} linear codes of Z_4^2, {hits} with parameters (2,8,2)*, {exceptions} exceptions", codes.len()),
        );
            Ok(())
        },
    )
}

pub fn isometries() -> Outcome {
    run(
        10,
        "linear isometries of Z_4^2 and Z_8^2 are exactly the monomial maps",
        |t| {
            for two_m in [4u32, 8] {
                let md = Modulus::new(two_m)?;
                for metric in [Metric::Star, Metric::Diamond] {
                    let c = isometry_census(2, md, metric, DEFAULT_BUDGET)?;
                    let expected = c.monomial_count();
                    t.check(
                    c.isometries.len() as u64 == expected && c.all_monomial(),
                    format!(
                        "Z_{two_m}^2 {metric}: {} isometries, {} monomial, expected 2·{}^2 = {expected}",
                        c.isometries.len(),
                        c.isometries.len() - c.non_monomial().count(),
                        md.units().len()
                    ),
                );
                }
            }
            Ok(())
        },
    )
}

/// All ten claims in order.
pub fn all(seed: u64) -> Vec<Outcome> {
    vec![
        bi_matrices(),
        example_one(),
        duality(),
        closed_forms(),
        carlet(seed, 120),
        perfect_codes(),
        z24(),
        hadamard_images(),
        classification(seed, 50),
        isometries(),
    ]
}
