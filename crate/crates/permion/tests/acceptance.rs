//! End-to-end acceptance suite. Each test covers one numbered criterion and
//! prints a `criterion N: PASS`/`FAIL` line (visible with `--nocapture`).

use std::process::Command;

use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use permion::first_quant::{
    antisymmetrize, classify_symmetry, elementary_tensor, permute_particles, symmetrize,
    NBodyTensor, Symmetry,
};
use permion::linalg::{rat, ratio, Matrix, Rational};
use permion::perm::{enumerate_group, parse_cycles, CycleType, Permutation};
use permion::repr::{
    antisymmetrizer_image, natural_rep, one_dim_rep, regular_rep, s3_example_ordering,
    schur_weyl_commutation_check, standard_rep, symmetrizer_image, verify_homomorphism,
    Representation,
};
use permion::second_quant::{
    fermion_ladder, fermion_ladder_unsigned, fock_basis, sector_dimension, verify_car,
    verify_car_ops, verify_ccr, FermionOp, LadderKind, Statistics,
};
use permion::young::{
    ga_multiply, partitions, standard_tableaux, tableau_count_hook, young_operator,
    GroupAlgebraElement, YoungTableau,
};

fn report(criterion: usize, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed");
}

fn perm(text: &str, n: usize) -> Permutation {
    parse_cycles(text, n).unwrap()
}

#[test]
fn criterion_01_golden_matrices() {
    let nat = natural_rep(3).unwrap();
    let d12 = nat.matrix(&perm("(12)", 3)).unwrap();
    let d23 = nat.matrix(&perm("(23)", 3)).unwrap();
    let golden_12 = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let golden_23 = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);

    let reg = regular_rep(3, &s3_example_ordering()).unwrap();
    let d12_reg = reg.matrix(&perm("(12)", 3)).unwrap();
    let golden_reg = Matrix::from_ints(&[
        &[0, 1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 1, 0, 0, 0],
    ]);

    report(
        1,
        *d12 == golden_12 && *d23 == golden_23 && *d12_reg == golden_reg,
    );
}

#[test]
fn criterion_02_group_identities() {
    let t12 = perm("(12)", 3);
    let t13 = perm("(13)", 3);
    let t23 = perm("(23)", 3);
    let lhs = t23.compose(&t12).unwrap().compose(&t23).unwrap();
    let rhs = t12.compose(&t23).unwrap().compose(&t12).unwrap();
    let signs = t12.compose(&t13).unwrap().sign() == 1 && t13.sign() == -1;
    let ty = perm("(134)(25)", 5).cycle_type() == CycleType::new(vec![3, 2]);
    report(2, lhs == t13 && rhs == t13 && signs && ty);
}

#[test]
fn criterion_03_dimension_identities() {
    let mut ok = true;
    for n in 1..=6usize {
        let factorial: u64 = (1..=n as u64).product();
        let sum: u64 = partitions(n)
            .unwrap()
            .iter()
            .map(|f| {
                let count = standard_tableaux(f).unwrap().len() as u64;
                count * count
            })
            .sum();
        ok &= sum == factorial;
    }
    // S_3 split is 1 + 1 + 4 = 6
    let s3: Vec<u64> = partitions(3)
        .unwrap()
        .iter()
        .map(|f| {
            let c = standard_tableaux(f).unwrap().len() as u64;
            c * c
        })
        .collect();
    ok &= s3 == vec![1, 4, 1];
    // hook-length oracle agrees with brute enumeration up to n = 8
    for n in 1..=8usize {
        for frame in partitions(n).unwrap() {
            ok &= standard_tableaux(&frame).unwrap().len() as u64
                == tableau_count_hook(&frame).unwrap();
        }
    }
    report(3, ok);
}

fn projector_laws(rep: &Representation, order: i64) -> bool {
    let s = symmetrizer_image(rep).unwrap();
    let a = antisymmetrizer_image(rep).unwrap();
    let h = rat(order);
    s.mul(&s).unwrap() == s.scale(&h) && a.mul(&a).unwrap() == a.scale(&h)
}

#[test]
fn criterion_04_projector_laws() {
    let mut ok = true;
    for n in [3usize, 4] {
        let h: i64 = (1..=n as i64).product();
        ok &= projector_laws(&natural_rep(n).unwrap(), h);
        let ordering = enumerate_group(n).unwrap();
        ok &= projector_laws(&regular_rep(n, &ordering).unwrap(), h);
    }

    // tableau (1,2)/(3): E = (e - (13)) (e + (12)) term by term
    let tableau = YoungTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
    let e = young_operator(&tableau).unwrap();
    let expected = GroupAlgebraElement::from_terms(
        3,
        [
            (perm("e", 3), rat(1)),
            (perm("(12)", 3), rat(1)),
            (perm("(13)", 3), rat(-1)),
            (perm("(123)", 3), rat(-1)),
        ],
    );
    ok &= e == expected;
    let square = ga_multiply(&e, &e).unwrap();
    ok &= square == e.scale(&rat(3));
    report(4, ok);
}

#[test]
fn criterion_05_homomorphism_suite() {
    let mut ok = true;
    for n in [3usize, 4] {
        let ordering = enumerate_group(n).unwrap();
        let reps = [
            one_dim_rep(n, false).unwrap(),
            one_dim_rep(n, true).unwrap(),
            natural_rep(n).unwrap(),
            regular_rep(n, &ordering).unwrap(),
            standard_rep(n).unwrap(),
        ];
        for rep in &reps {
            let reportd = verify_homomorphism(rep).unwrap();
            ok &= reportd.ok && reportd.pairs_checked == rep.order() * rep.order();
        }
        let std_rep = &reps[4];
        for gen in ["(12)", "(13)"] {
            let m = std_rep.matrix(&perm(gen, n)).unwrap();
            ok &= m.mul(m).unwrap() == Matrix::identity(n - 1);
        }
    }
    report(5, ok);
}

#[test]
fn criterion_06_car_suite() {
    let mut ok = true;
    for d in 1..=8usize {
        let car = verify_car(d).unwrap();
        ok &= car.max_violation == 0 && car.pairs_checked == d * d;
    }
    // nilpotency and vacuum annihilation, spot-checked at d = 5
    let d = 5usize;
    let vacuum = fock_basis(d, Statistics::Fermion, 1).unwrap().vacuum();
    for j in 1..=d {
        let create = fermion_ladder(j, d, LadderKind::Create).unwrap();
        ok &= create.mul(&create).unwrap().is_zero();
        let lower = fermion_ladder(j, d, LadderKind::Annihilate).unwrap();
        ok &= (0..(1usize << d)).all(|row| lower.get(row, vacuum) == 0);
    }
    // negative control: omitting the sign string must be detected at d = 2
    let unsigned: Vec<FermionOp> = (1..=2)
        .map(|j| fermion_ladder_unsigned(j, 2, LadderKind::Annihilate).unwrap())
        .collect();
    ok &= verify_car_ops(&unsigned).unwrap().max_violation > 0;
    report(6, ok);
}

#[test]
fn criterion_07_ccr_suite() {
    let mut ok = true;
    for (d, m) in [(1usize, 5u32), (2, 3)] {
        let ccr = verify_ccr(d, m).unwrap();
        ok &= ccr.max_violation_on_safe_subspace < 1e-12;
        ok &= (ccr.truncation_artifact + m as f64).abs() < 1e-12;
    }
    report(7, ok);
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn criterion_08_sector_counting() {
    let mut ok = true;
    for d in 1..=12usize {
        let total: u64 = (0..=d)
            .map(|n| sector_dimension(d, n, Statistics::Fermion).unwrap())
            .sum();
        ok &= total == 1u64 << d;
        for n in 0..=d {
            ok &= sector_dimension(d, n, Statistics::Fermion).unwrap()
                == binomial(d as u64, n as u64);
        }
    }
    // boson sector dims against brute enumeration of occupation strings
    for d in 1..=4usize {
        for n in 0..=6usize {
            let basis = fock_basis(d, Statistics::Boson, (n as u32).max(1)).unwrap();
            let brute = basis
                .states
                .iter()
                .filter(|s| s.iter().sum::<u32>() as usize == n)
                .count() as u64;
            let formula = sector_dimension(d, n, Statistics::Boson).unwrap();
            ok &= brute == formula
                && formula == binomial((n + d - 1) as u64, (d - 1) as u64);
        }
    }
    report(8, ok);
}

fn random_tensor(rng: &mut ChaCha8Rng, dim: usize, particles: usize) -> NBodyTensor {
    let len = dim.pow(particles as u32);
    let amps: Vec<Rational> = (0..len)
        .map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=7)))
        .collect();
    NBodyTensor::new(dim, particles, amps).unwrap()
}

#[test]
fn criterion_09_first_quantization_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut ok = true;

    // exact decomposition A = A_sym + A_asym for two-particle tensors
    for _ in 0..10 {
        let a = random_tensor(&mut rng, 3, 2);
        let sym = symmetrize(&a).unwrap();
        let asym = antisymmetrize(&a).unwrap();
        let sum: Vec<Rational> = sym
            .amplitudes()
            .iter()
            .zip(asym.amplitudes())
            .map(|(s, t)| s + t)
            .collect();
        ok &= sum == a.amplitudes();
        ok &= classify_symmetry(&sym).unwrap() == Symmetry::Bosonic || sym.is_zero();
        ok &= classify_symmetry(&asym).unwrap() == Symmetry::Fermionic || asym.is_zero();
    }

    // idempotency and mutual annihilation up to four particles
    for particles in 2..=4usize {
        let a = random_tensor(&mut rng, 2, particles);
        let sym = symmetrize(&a).unwrap();
        let asym = antisymmetrize(&a).unwrap();
        ok &= symmetrize(&sym).unwrap() == sym;
        ok &= antisymmetrize(&asym).unwrap() == asym;
        ok &= antisymmetrize(&sym).unwrap().is_zero();
        ok &= symmetrize(&asym).unwrap().is_zero();
    }

    // occupation strings map to genuinely fermionic first-quantized tensors
    for d in 1..=4usize {
        for occ_bits in 1u32..(1 << d) {
            let occ: Vec<u32> = (0..d).map(|j| (occ_bits >> j) & 1).collect();
            let particles = occ.iter().sum::<u32>() as usize;
            if particles > 3 {
                continue;
            }
            let psi = permion::second_quant::slater_to_first_quantized(&occ).unwrap();
            let norm: f64 = psi.amplitudes().iter().map(|a| a * a).sum();
            ok &= (norm - 1.0).abs() < 1e-12;
            if particles > 1 {
                ok &= classify_symmetry(&psi).unwrap() == Symmetry::Fermionic;
            }
            for sigma in enumerate_group(particles).unwrap() {
                let moved = permute_particles(&psi, &sigma).unwrap();
                let sign = sigma.sign() as f64;
                ok &= moved
                    .amplitudes()
                    .iter()
                    .zip(psi.amplitudes())
                    .all(|(m, p)| *m == sign * p);
            }
        }
    }
    report(9, ok);
}

#[test]
fn criterion_10_schur_weyl() {
    let two = schur_weyl_commutation_check(2, 2, 100, 1e-10, 42).unwrap();
    let three = schur_weyl_commutation_check(3, 3, 20, 1e-10, 42).unwrap();
    report(
        10,
        two.ok && three.ok && two.max_norm < 1e-10 && three.max_norm < 1e-10,
    );
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let output = Command::new(env!("CARGO_BIN_EXE_permion"))
        .args(args)
        .output()
        .expect("binary runs");
    (output.status.code().unwrap_or(-1), output.stdout)
}

#[test]
fn criterion_11_cli_determinism() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["group", "--n", "3", "--emit", "elements"],
        vec!["group", "--n", "3", "--emit", "table"],
        vec!["group", "--n", "4", "--emit", "classes"],
        vec!["rep", "--n", "3", "--kind", "natural", "--element", "(12)"],
        vec!["rep", "--n", "3", "--kind", "regular"],
        vec!["rep", "--n", "4", "--kind", "standard", "--character"],
        vec!["tableaux", "--frame", "2,1"],
        vec!["young", "--tableau", "1,2;3"],
        vec!["fock", "--modes", "3", "--statistics", "fermion", "--emit", "basis"],
        vec!["fock", "--modes", "4", "--statistics", "boson", "--truncation", "2", "--emit", "sectors"],
        vec!["verify", "--check", "car", "--modes", "5"],
        vec!["verify", "--check", "ccr", "--modes", "1", "--truncation", "5"],
        vec!["verify", "--check", "homomorphism", "--n", "4", "--kind", "standard"],
        vec!["verify", "--check", "schur-weyl", "--copies", "2", "--local-dim", "2", "--trials", "5", "--seed", "7"],
        vec!["verify", "--check", "regular-decomposition", "--n", "5"],
        vec!["verify", "--check", "young-idempotent", "--n", "4"],
    ];
    let mut ok = true;
    for args in &commands {
        let (code_a, out_a) = run_cli(args);
        let (code_b, out_b) = run_cli(args);
        ok &= code_a == 0 && code_b == 0 && out_a == out_b && !out_a.is_empty();
    }
    // exit-code contract: 1 for a failed verification, 2 for usage errors
    let (fail_code, _) = run_cli(&["verify", "--check", "car", "--modes", "2", "--drop-sign-string"]);
    ok &= fail_code == 1;
    let (usage_code, _) = run_cli(&["group", "--n", "not-a-number"]);
    ok &= usage_code == 2;
    let (unknown_code, _) = run_cli(&["frobnicate"]);
    ok &= unknown_code == 2;
    report(11, ok);
}

// keep the sector states orthogonal check close to the suite it supports
#[test]
fn slater_sector_states_are_orthogonal() {
    let mut states = Vec::new();
    for occ_bits in 0u32..16 {
        let occ: Vec<u32> = (0..4).map(|j| (occ_bits >> j) & 1).collect();
        if occ.iter().sum::<u32>() == 2 {
            states.push(permion::second_quant::slater_to_first_quantized(&occ).unwrap());
        }
    }
    assert_eq!(states.len(), 6);
    let one = Rational::one();
    let _ = one; // rational machinery is exercised elsewhere; dots are f64
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let dot: f64 = a
                .amplitudes()
                .iter()
                .zip(b.amplitudes())
                .map(|(x, y)| x * y)
                .sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!((dot - expected).abs() < 1e-12);
        }
    }
}

#[test]
fn fermion_operator_order_flips_sign() {
    let basis = fock_basis(3, Statistics::Fermion, 1).unwrap();
    // canonical string: leftmost (smallest mode) applied last
    let canonical = permion::second_quant::fermion_state_ordered(&basis, &[3, 1]).unwrap();
    let reversed = permion::second_quant::fermion_state_ordered(&basis, &[1, 3]).unwrap();
    assert_eq!(canonical.index, reversed.index);
    assert_eq!(canonical.amplitude, 1.0);
    assert_eq!(reversed.amplitude, -1.0);

    // elementary tensors feed the first-quantized side of the same states
    let e12 = elementary_tensor::<Rational>(3, &[1, 2]).unwrap();
    assert_eq!(*e12.amplitude(&[1, 2]), rat(1));
}
