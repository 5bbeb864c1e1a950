//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the report lines are always
//! visible under `cargo test`.

use std::time::{Duration, Instant};

use knotgrowth::bounds::{
    alexander_from_seifert, epsilon_target, growth_rate_bound, BridgeIndices, IntPoly, SeifertMatrix2,
};
use knotgrowth::genus::fibered_genus;
use knotgrowth::small::{enumerate_witnesses, is_small, non_consecutive_subsets, SmallnessProblem};
use knotgrowth::surgery::{c7_description, export, l7_description, C7Variant};
use knotgrowth::{intersection, knot_class, twist_linearity_check, ContinuedFraction, CurveClass, FamilyParams, ProjectiveRational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn grid() -> impl Iterator<Item = (i64, i64, i64)> {
    (3..=10).flat_map(|r| (2..=8).flat_map(move |s| (0..=25).map(move |n| (r, s, n))))
}

fn params(r: i64, s: i64, n: i64) -> FamilyParams {
    FamilyParams::new(r, s, n).unwrap()
}

fn cc(m: i128, n: i128) -> CurveClass {
    CurveClass::new(BigInt::from(m), BigInt::from(n)).unwrap()
}

fn closed_form_grid() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (r, s, n) in grid() {
        let (num, den) = ((s * n + 1) as i128, (r * s * n + r + n) as i128);
        let g = num.gcd(&den);
        let expected = ProjectiveRational::new(BigInt::from(num / g), BigInt::from(den / g)).unwrap();
        let got = ContinuedFraction::from_ints([r, -s, n]).evaluate();
        ensure(got == expected, || format!("[{r},-{s},{n}] = {got}, want {expected}"))?;
        count += 1;
    }
    ensure(count == 8 * 7 * 26, || format!("grid has {count} cases"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{count} cases in {:?}", start.elapsed()))
}

fn twist_word_grid() -> Outcome {
    let start = Instant::now();
    for (r, s, n) in grid() {
        let p = params(r, s, n);
        let via_word = p.twist_word().apply(&CurveClass::a());
        let via_formula = knot_class(&p);
        ensure(via_word == via_formula, || format!("({r},{s},{n}): word {via_word}, closed form {via_formula}"))?;
        // and the calibrated sign: the closed form itself is already canonical
        let m = (s * n + 1) as i128;
        let nn = (r * s * n + r + n) as i128;
        ensure(via_word == cc(m, nn), || format!("({r},{s},{n}): {via_word} != ({m}, {nn})"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} cases in {:?}", grid().count(), start.elapsed()))
}

fn linearity_grid() -> Outcome {
    let start = Instant::now();
    for (r, s, n) in grid() {
        let p = params(r, s, n);
        ensure(twist_linearity_check(&p), || format!("({r},{s},{n}) linearity check false"))?;
        let (r, s, n) = (r as i128, s as i128, n as i128);
        let kn = (s * n + 1, r * s * n + r + n);
        let rhs = (n * s + 1, n * (r * s + 1) + r);
        ensure(kn == rhs, || format!("({r},{s},{n}): {kn:?} != {rhs:?}"))?;
        let h = p.knot_homology();
        ensure(h.m == BigInt::from(kn.0) && h.n == BigInt::from(kn.1), || format!("({r},{s},{n}): homology {h:?}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} cases in {:?}", grid().count(), start.elapsed()))
}

fn intersections_grid() -> Outcome {
    for (r, s, n) in grid() {
        let (ri, si) = (r as i128, s as i128);
        let ktw = cc(si, ri * si + 1);
        let k0 = cc(1, ri);
        let kn = knot_class(&params(r, s, n));
        let one = BigInt::one();
        ensure(intersection(&ktw, &k0) == one, || format!("({r},{s}): i(Ktw, K0) != 1"))?;
        ensure(intersection(&ktw, &kn) == one, || format!("({r},{s},{n}): i(Ktw, Kn) != 1"))?;
        ensure(intersection(&k0, &kn) == BigInt::from(n), || format!("({r},{s},{n}): i(K0, Kn) != n"))?;
    }
    Ok(format!("{} cases", grid().count()))
}

fn genus_grid() -> Outcome {
    for r in 3..=10i128 {
        for s in 2..=8i128 {
            let closed = (s * s * (r * r - r + 1) - s) / 2;
            let got = fibered_genus(&cc(s, r * s + 1)).map_err(|e| e.to_string())?;
            ensure(got == BigInt::from(closed), || format!("({r},{s}): genus {got}, want {closed}"))?;
        }
    }
    let spot = fibered_genus(&cc(2, 7)).map_err(|e| e.to_string())?;
    ensure(spot == BigInt::from(13), || format!("(3,2) spot value {spot}"))?;
    Ok("56 cases, (3,2) -> 13".into())
}

fn smallness_pattern() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for r in 3..=8 {
        for s in 2..=6 {
            for n in 2..=20 {
                let p = SmallnessProblem::from_ints([r, -s, n]).map_err(|e| e.to_string())?;
                let small = is_small(&p);
                let expected = !(n == r - 1 || n == r);
                ensure(small == expected, || format!("[{r},-{s},{n}]: small = {small}"))?;
                count += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{count} cases in {:?}", start.elapsed()))
}

/// Brute force over all 4^k pairs of index bitmasks.
fn naive_witnesses(b: &[i64]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let k = b.len();
    let sums: Vec<i64> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).map(|i| b[i]).sum())
        .collect();
    let to_list = |mask: u32| -> Vec<usize> { (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect() };
    let mut out = Vec::new();
    for i in 0u32..1 << k {
        for j in 0u32..1 << k {
            if i & j & 1 == 1 {
                continue;
            }
            if i & (i >> 1) != 0 || j & (j >> 1) != 0 {
                continue;
            }
            let value = if i & 1 == 1 { sums[j as usize] - sums[i as usize] } else { sums[j as usize] - (sums[i as usize] + 1) };
            if value == 0 {
                out.push((to_list(i), to_list(j)));
            }
        }
    }
    out.sort();
    out
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b4e7);
    let mut total_witnesses = 0;
    for case in 0..200 {
        let k = rng.gen_range(1..=12);
        let b: Vec<i64> = (0..k)
            .map(|i| {
                let lo = if i == 0 { 3 } else { 2 };
                let mag = rng.gen_range(lo..=7);
                if rng.gen_bool(0.5) { mag } else { -mag }
            })
            .collect();
        let p = SmallnessProblem::from_ints(b.iter().copied()).map_err(|e| e.to_string())?;
        let got: Vec<(Vec<usize>, Vec<usize>)> =
            enumerate_witnesses(&p).into_iter().map(|w| (w.i, w.j)).collect();
        let want = naive_witnesses(&b);
        ensure(got == want, || format!("case {case} {b:?}: {} vs {} witnesses", got.len(), want.len()))?;
        total_witnesses += got.len();
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("200 lists, {total_witnesses} witnesses, {:?}", start.elapsed()))
}

fn subset_counting() -> Outcome {
    let mut fib = vec![0u64, 1];
    while fib.len() < 24 {
        let next = fib[fib.len() - 1] + fib[fib.len() - 2];
        fib.push(next);
    }
    for k in 0..=20 {
        let count = non_consecutive_subsets(k).len() as u64;
        ensure(count == fib[k + 2], || format!("k = {k}: {count} subsets, F(k+2) = {}", fib[k + 2]))?;
    }
    Ok("k = 0..=20".into())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn growth_rate() -> Outcome {
    let g = growth_rate_bound(&BridgeIndices::new(2, 1).map_err(|e| e.to_string())?);
    ensure(g.value == rat(0, 1), || format!("(2,1) -> {}", g.value))?;
    let g = growth_rate_bound(&BridgeIndices::new(4, 2).map_err(|e| e.to_string())?);
    ensure(g.value == rat(1, 2), || format!("(4,2) -> {}", g.value))?;

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10_000 {
        let b1 = rng.gen_range(1..=1_000_000u64);
        let b0 = rng.gen_range(b1 + 1..=2_000_001u64);
        let g = growth_rate_bound(&BridgeIndices::new(b0, b1).map_err(|e| e.to_string())?);
        ensure(g.value < BigRational::one(), || format!("({b0},{b1}) -> {}", g.value))?;
    }

    for eps in [rat(1, 2), rat(1, 10), rat(1, 100)] {
        let target = epsilon_target(&eps).map_err(|e| e.to_string())?;
        let floor = BigRational::one() - &eps;
        let t: u64 = target.try_into().map_err(|_| "target overflow".to_string())?;
        for b1 in t..t + 200 {
            for b0 in [b1 + 1, 2 * b1, 5 * b1 + 3] {
                let g = growth_rate_bound(&BridgeIndices::new(b0, b1).map_err(|e| e.to_string())?);
                ensure(g.from_b1 > floor, || format!("eps {eps}: 1 - 1/{b1} <= 1 - eps"))?;
                if b0 >= 2 * b1 {
                    ensure(g.value > floor, || format!("eps {eps}: bound({b0},{b1}) <= 1 - eps"))?;
                }
            }
        }
        // minimality of the threshold
        if t > 1 {
            let below = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(t - 1));
            ensure(below <= floor, || format!("eps {eps}: {} is not minimal", t))?;
        }
    }
    Ok("spot values, 10^4 random pairs, eps in {1/2, 1/10, 1/100}".into())
}

fn round_trip() -> Outcome {
    let mut count = 0;
    for m in -200i64..=200 {
        for n in -200i64..=200 {
            if (m, n) == (0, 0) || m.gcd(&n) != 1 {
                continue;
            }
            let q = ProjectiveRational::new(m, n).unwrap();
            let back = ContinuedFraction::expand(&q).evaluate();
            ensure(back == q, || format!("{q}: expand/evaluate gave {back}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} reduced pairs"))
}

fn alexander_obstruction() -> Outcome {
    let trefoil = alexander_from_seifert(&SeifertMatrix2::trefoil());
    ensure(trefoil.eq_up_to_units(&IntPoly::from_ints([1, -1, 1])), || format!("trefoil gave {trefoil}"))?;
    ensure(trefoil.leading_coefficient().is_some_and(|c| c.magnitude().is_one()), || "trefoil leading coefficient not ±1".into())?;
    for j in -1000i64..=1000 {
        for k in -5i64..=5 {
            for sign in [1i8, -1] {
                let v = SeifertMatrix2::zero_slope_shape(&BigInt::from(j), sign, &BigInt::from(k));
                let poly = alexander_from_seifert(&v);
                let top = poly.coefficients().get(2).cloned().unwrap_or_default();
                let expected = -(j * (j + sign as i64));
                ensure(top == BigInt::from(expected), || format!("j={j} k={k} sign={sign}: t^2 coefficient {top}"))?;
                ensure(expected % 2 == 0, || format!("j={j}: {expected} is odd"))?;
                ensure(expected.abs() != 1, || format!("j={j}: leading coefficient is a unit"))?;
            }
        }
    }
    Ok("trefoil t^2 - t + 1; |j| <= 1000, k in [-5, 5]".into())
}

fn golden_exports() -> Outcome {
    let p = params(3, 2, 5);
    let l7 = export(&l7_description(&p).map_err(|e| e.to_string())?);
    let c7 = export(&c7_description(&p, C7Variant::Stated));
    let c7_fig = export(&c7_description(&p, C7Variant::Figure));
    for (name, got, want) in [
        ("l7_3_2_5.txt", &l7, &include_bytes!("golden/l7_3_2_5.txt")[..]),
        ("c7_3_2_5.txt", &c7, &include_bytes!("golden/c7_3_2_5.txt")[..]),
        ("c7_3_2_5_figure.txt", &c7_fig, &include_bytes!("golden/c7_3_2_5_figure.txt")[..]),
    ] {
        ensure(got.as_bytes() == want, || format!("{name} differs:\n{got}"))?;
    }
    ensure(export(&c7_description(&p, C7Variant::Stated)) == c7, || "export not deterministic".into())?;
    Ok("L7, C7, C7 figure variant".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("closed-form grid", closed_form_grid),
        ("twist-word equivalence", twist_word_grid),
        ("linearity", linearity_grid),
        ("intersections", intersections_grid),
        ("genus", genus_grid),
        ("smallness pattern", smallness_pattern),
        ("oracle equivalence", oracle_equivalence),
        ("subset counting", subset_counting),
        ("growth rate", growth_rate),
        ("round trip", round_trip),
        ("alexander obstruction", alexander_obstruction),
        ("golden exports", golden_exports),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
