//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//! Run with `cargo test --test acceptance` (add `-- --nocapture` for the
//! per-criterion summary lines).

use num::{BigInt, BigRational};
use partition_algebra::bratteli::{dims, sum_of_squared_dims, vertices, AugShape};
use partition_algebra::relations::{bell_number, half_relation_suite, relation_suite};
use partition_algebra::seatplan::{enumerate_all, sample, SeatPlan};
use partition_algebra::seminormal::{
    e_matrix, f_matrix, faithfulness_rank, hook_ratio, s_matrix, trace_of, verify_rep_relations,
    Matrix, RepContext,
};
use partition_algebra::words::{eval_word, standard_word, Letter, Word};
use partition_algebra::{RatFunc, Result};
use rand::{Rng, SeedableRng};

fn pass(criterion: &str) {
    println!("criterion {criterion}: pass");
}

#[test]
fn criterion_01_worked_product() {
    let w1 = SeatPlan::parse(5, "{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}").unwrap();
    let w2 = SeatPlan::parse(5, "{{1,1',3',4'},{2},{3,5},{4},{2',5'}}").unwrap();
    let product = w1.compose(&w2).unwrap();
    assert_eq!(
        product.diagram,
        SeatPlan::parse(5, "{{1,1',3',4'},{2,5},{3,4},{2',5'}}").unwrap()
    );
    assert_eq!(product.removed, 2);
    pass("1 (worked product, Q^2)");
}

#[test]
fn criterion_02_basis_counts() {
    for (n, expected) in [(1, 2u64), (2, 15), (3, 203), (4, 4140)] {
        let all = enumerate_all(n).unwrap();
        assert_eq!(all.len() as u64, expected, "|Σ_{n}|");
        assert_eq!(bell_number(2 * n), expected);
        let fixed = all.iter().filter(|w| w.has_fixed_last_strand()).count() as u64;
        assert_eq!(fixed, bell_number(2 * n - 1), "fixed-last-strand at n={n}");
    }
    assert_eq!(
        (1..=4).map(|n| bell_number(2 * n - 1)).collect::<Vec<_>>(),
        vec![1, 5, 52, 877]
    );
    pass("2 (basis counts 2,15,203,4140 and 1,5,52,877)");
}

#[test]
fn criterion_03_diagram_relation_suites() {
    for n in 2..=4 {
        let report = relation_suite(n).unwrap();
        assert!(report.all_passed(), "relation suite n={n}:\n{report}");
    }
    for n in 3..=4 {
        let report = half_relation_suite(n).unwrap();
        assert!(report.all_passed(), "half suite n={n}:\n{report}");
    }
    pass("3 (all diagram relations, n=2..4, starred n=3,4)");
}

#[test]
fn criterion_04_standard_word_round_trip() {
    for w in enumerate_all(3).unwrap() {
        let word = standard_word(&w);
        assert_eq!(eval_word(&word, 3).unwrap(), (w, 0));
    }
    let mut generators = Vec::new();
    for i in 1..4 {
        generators.push(SeatPlan::generator_s(4, i).unwrap());
        generators.push(SeatPlan::generator_f(4, i).unwrap());
    }
    for i in 1..=4 {
        generators.push(SeatPlan::generator_e(4, i).unwrap());
    }
    for w in generators.into_iter().chain(sample(4, 500, 20240131)) {
        let word = standard_word(&w);
        assert_eq!(eval_word(&word, 4).unwrap(), (w, 0));
    }
    pass("4 (round trip: 203 at n=3, generators + 500 sampled at n=4)");
}

#[test]
fn criterion_05_bratteli_identity() {
    let expected = [(2, 2u64), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877), (8, 4140)];
    for (level2, bell) in expected {
        assert_eq!(sum_of_squared_dims(level2), bell, "level2 = {level2}");
        assert_eq!(bell_number(level2), bell);
    }
    pass("5 (Σ dim² = B_{2L} for L = 1 .. 4)");
}

#[test]
fn criterion_06_hook_ratio_golden_values() {
    let tilde = |parts: &[usize]| {
        AugShape::parse(&format!(
            "~[{}]",
            parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        ))
        .unwrap()
    };
    let hat = |parts: &[usize]| {
        AugShape::parse(&format!(
            "^[{}]",
            parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        ))
        .unwrap()
    };
    let cut_cases: [(&[usize], &[usize], &str); 6] = [
        (&[], &[], "Q"),
        (&[1], &[], "Q/(Q-1)"),
        (&[1], &[1], "Q*(Q-2)/(Q-1)"),
        (&[2], &[1], "2*(Q-2)/(Q-3)"),
        (&[2], &[2], "(Q-1)*(Q-4)/(Q-3)"),
        (&[2, 1], &[2], "3*(Q-1)/(2*(Q-2))"),
    ];
    for (big, small, expected) in cut_cases {
        let computed = hook_ratio(&tilde(big), &hat(small)).unwrap();
        let wanted = partition_algebra::ratfunc::parse(expected).unwrap();
        assert_eq!(computed, wanted);
        assert_eq!(computed.render(), wanted.render(), "string-normalized");
    }
    let join_cases: [(&[usize], &[usize], &str); 3] = [
        (&[], &[], "1/Q"),
        (&[], &[1], "(Q-1)/Q"),
        (&[1], &[2], "(Q-3)/(2*(Q-2))"),
    ];
    for (small, big, expected) in join_cases {
        let computed = hook_ratio(&tilde(big), &hat(small)).unwrap().inv().unwrap();
        let wanted = partition_algebra::ratfunc::parse(expected).unwrap();
        assert_eq!(computed, wanted);
        assert_eq!(computed.render(), wanted.render(), "string-normalized");
    }
    // 2*(Q-2)/(3*(Q-1)) appears as the join ratio into the (2,1) core
    let computed = hook_ratio(&tilde(&[2, 1]), &hat(&[2])).unwrap().inv().unwrap();
    assert_eq!(
        computed.render(),
        partition_algebra::ratfunc::parse("2*(Q-2)/(3*(Q-1))")
            .unwrap()
            .render()
    );
    pass("6 (all printed hook ratios, string-normalized)");
}

#[test]
fn criterion_07_hook_sums() {
    use partition_algebra::bratteli::{neighbors, Direction};
    let mut cores: Vec<AugShape> = Vec::new();
    for size in 0..=4 {
        cores.extend(
            vertices(2 * size)
                .into_iter()
                .filter(|s| s.core.size() == size),
        );
    }
    assert_eq!(cores.len(), 12); // partitions of 0..4
    for lam in &cores {
        let mut row_sum = RatFunc::zero();
        for down in neighbors(lam, Direction::Down) {
            row_sum = row_sum + hook_ratio(lam, &down).unwrap();
        }
        assert_eq!(row_sum, RatFunc::q(), "row sum at {lam}");
        let mu = AugShape::hat(lam.core.clone());
        let mut col_sum = RatFunc::zero();
        for up in neighbors(&mu, Direction::Up) {
            col_sum = col_sum + hook_ratio(&up, &mu).unwrap().inv().unwrap();
        }
        assert_eq!(col_sum, RatFunc::one(), "column sum at {mu}");
    }
    pass("7 (hook row sums = Q, column sums = 1, |core| ≤ 4)");
}

#[test]
fn criterion_08_representation_relation_suite() {
    for c in [RatFunc::one(), RatFunc::from_int(2)] {
        for level2 in [4, 5, 6] {
            let report = verify_rep_relations(level2, &c).unwrap();
            assert!(
                report.all_passed(),
                "level2 = {level2}, c = {c}:\n{report}"
            );
        }
    }
    pass("8 (matrix relation suites at levels 2, 5/2, 3 for c = 1, 2)");
}

#[test]
fn criterion_09_generator_image_identities() {
    let c = RatFunc::one();
    let q = RatFunc::q();
    for shape in vertices(6) {
        let dim = partition_algebra::bratteli::tableaux(&shape, 6).unwrap().len();
        for i in 1..=3 {
            let e = e_matrix(i, &shape, 6).unwrap().entries;
            assert_eq!(e.mul(&e), e.scale(&q), "E{i}² = Q·E{i} on {shape}");
        }
        for i in 1..=2 {
            let f = f_matrix(i, &shape, 6).unwrap().entries;
            assert_eq!(f.mul(&f), f, "F{i}² = F{i} on {shape}");
            let s = s_matrix(i, &shape, 6, &c).unwrap().entries;
            assert_eq!(s.mul(&s), Matrix::identity(dim), "S{i}² = 1 on {shape}");
        }
        let mut ctx = RepContext::new(&shape, 6, &c).unwrap();
        for i in 1..=2 {
            let conjugated = ctx
                .word_matrix(&Word(vec![Letter::S(i), Letter::E(i), Letter::S(i)]))
                .unwrap();
            let direct = e_matrix(i + 1, &shape, 6).unwrap().entries;
            assert_eq!(conjugated, direct, "S{i} E{i} S{i} = E{} on {shape}", i + 1);
        }
    }
    pass("9 (E² = QE, F² = F, M² = I, conjugation, level 3)");
}

#[test]
fn criterion_10_faithfulness_rank() {
    let q0 = BigRational::from(BigInt::from(101));
    for c in [RatFunc::one(), RatFunc::from_int(2)] {
        assert_eq!(faithfulness_rank(6, &q0, &c).unwrap(), 203, "c = {c}");
    }
    assert_eq!(faithfulness_rank(5, &q0, &RatFunc::one()).unwrap(), 52);
    pass("10 (rank 203 at level 3, rank 52 at level 5/2, q0 = 101)");
}

#[test]
fn criterion_11_trace_sanity() -> Result<()> {
    let c = RatFunc::one();
    // trace of the identity equals the dimension table
    for level2 in [2, 3, 4, 5, 6, 7, 8] {
        let traces = trace_of(&Word::empty(), level2, &c)?;
        let table = dims(level2);
        for (shape, trace) in traces {
            assert_eq!(trace, RatFunc::from_int(table[&shape] as i64));
        }
    }
    // cyclicity on seeded random word pairs at level 3
    let letters = partition_algebra::seminormal::letters_at_level(6);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7ace);
    let random_word = |rng: &mut rand_chacha::ChaCha8Rng| -> Word {
        let len = rng.random_range(1..=3);
        (0..len)
            .map(|_| letters[rng.random_range(0..letters.len())])
            .collect()
    };
    let pairs: Vec<(Word, Word)> = (0..100)
        .map(|_| (random_word(&mut rng), random_word(&mut rng)))
        .collect();
    for shape in vertices(6) {
        let mut ctx = RepContext::new(&shape, 6, &c)?;
        for (u, v) in &pairs {
            let uv = ctx.word_matrix(&u.concat(v))?;
            let vu = ctx.word_matrix(&v.concat(u))?;
            assert_eq!(uv.trace(), vu.trace(), "tr({u} {v}) on {shape}");
        }
    }
    pass("11 (trace of 1 = dims; cyclicity on 100 seeded pairs)");
    Ok(())
}
