//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (run with `--nocapture` to see them).
//!
//! Shape universes are the canonical classes reachable from outer partitions
//! bounded by the criterion's cell budget; every such class has at most that
//! many cells.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use qshift_core::canonical_fill::{canonical_filling, layer_has_disconnection};
use qshift_core::classify::{canonical_classes, is_strange_oracle, sweep};
use qshift_core::qpoly::{expand_q, verify_decomposition, QPolynomial};
use qshift_core::shapes::{strict_partitions_up_to, SkewShape, StrictPartition};
use qshift_core::tableaux::{
    decompose, enumerate_amenable, enumerate_amenable_reference, lr_coeff, Tableau,
};
use qshift_core::words::{
    is_amenable, is_amenable_via_restriction, m_count, Letter, Word,
};

fn classes(max_outer: usize) -> Vec<SkewShape> {
    canonical_classes(max_outer).0
}

/// Criterion 1: the classification sweep at size 12 finds no disagreement
/// between the theorem classifier and the unique-filling oracle.
#[test]
fn criterion_1_main_theorem_sweep() {
    let report = sweep(12, 0);
    assert!(
        report.mismatches.is_empty(),
        "sweep mismatches: {:?}",
        report.mismatches
    );
    assert_eq!(report.strange_by_theorem, report.strange_by_oracle);
    println!(
        "criterion 1 (main-theorem sweep, max-size 12): PASS \
         [{} classes from {} pairs, {} strange, {:?}]",
        report.shapes_tested, report.raw_pairs, report.strange_by_oracle, report.elapsed
    );
}

/// Criterion 2: the skew Q-function equals the multiplicity-weighted sum of
/// straight Q-functions, coefficient-exact in `ncells` variables, for every
/// shape class with at most 9 cells.
#[test]
fn criterion_2_decomposition_identity() {
    let shapes = classes(9);
    let failures: Vec<String> = shapes
        .par_iter()
        .filter_map(|shape| {
            let holds = verify_decomposition(shape).expect("decompose succeeds");
            (!holds).then(|| shape.to_string())
        })
        .collect();
    assert!(failures.is_empty(), "identity failed on: {failures:?}");
    assert!(verify_decomposition(&SkewShape::empty()).unwrap());
    println!(
        "criterion 2 (decomposition identity, <= 9 cells): PASS [{} shapes]",
        shapes.len() + 1
    );
}

/// Criterion 3: the layer-peeling filling has an amenable row word on every
/// shape class with at most 14 cells.
#[test]
fn criterion_3_canonical_filling_amenable() {
    let shapes = classes(14);
    let failures: Vec<String> = shapes
        .par_iter()
        .filter_map(|shape| {
            let tableau = canonical_filling(shape);
            let ok = tableau.is_valid_gsyt() && is_amenable(&tableau.row_word());
            (!ok).then(|| shape.to_string())
        })
        .collect();
    assert!(failures.is_empty(), "non-amenable fillings on: {failures:?}");
    println!(
        "criterion 3 (canonical filling amenable, <= 14 cells): PASS [{} shapes]",
        shapes.len()
    );
}

/// Criterion 4: the amenability definition agrees with the restriction
/// criterion, exhaustively for short small-valued words and on a hundred
/// thousand random longer ones.
#[test]
fn criterion_4_restriction_equivalence() {
    // All 6 letters over values <= 3, words of length <= 8.
    let alphabet: Vec<Letter> = (1..=3)
        .flat_map(|v| [Letter::marked(v), Letter::unmarked(v)])
        .collect();
    let mut checked = 0u64;
    let mut stack: Vec<Letter> = Vec::new();
    fn go(
        alphabet: &[Letter],
        stack: &mut Vec<Letter>,
        max_len: usize,
        checked: &mut u64,
    ) {
        let word = Word::new(stack.clone());
        assert_eq!(
            is_amenable(&word),
            is_amenable_via_restriction(&word),
            "disagreement on {word}"
        );
        *checked += 1;
        if stack.len() == max_len {
            return;
        }
        for &l in alphabet {
            stack.push(l);
            go(alphabet, stack, max_len, checked);
            stack.pop();
        }
    }
    go(&alphabet, &mut stack, 8, &mut checked);

    let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
    for _ in 0..100_000 {
        let len = rng.gen_range(0..=20);
        let word: Word = (0..len)
            .map(|_| {
                let v = rng.gen_range(1..=5);
                if rng.gen() {
                    Letter::marked(v)
                } else {
                    Letter::unmarked(v)
                }
            })
            .collect();
        assert_eq!(
            is_amenable(&word),
            is_amenable_via_restriction(&word),
            "disagreement on {word}"
        );
    }
    println!(
        "criterion 4 (restriction equivalence): PASS [{checked} exhaustive + 100000 random words]"
    );
}

/// Criterion 5: amenable tableaux have strictly decreasing positive content
/// and satisfy the strict drop of `m_k(n)` below `m_(k-1)(n)`, over every
/// shape class with at most 10 cells. The amenable set is recovered by the
/// content-agnostic reference enumeration so the check does not lean on the
/// content-pruned enumerator it validates.
#[test]
fn criterion_5_strict_content() {
    let shapes = classes(10);
    let total: u64 = shapes
        .par_iter()
        .map(|shape| {
            let mut amenable_via_filter: Vec<Tableau> = Vec::new();
            for tableau in enumerate_amenable_reference(shape) {
                let word = tableau.row_word();
                assert!(is_amenable(&word));
                let content = tableau.content();
                assert!(
                    content.is_strict(),
                    "non-strict amenable content {content:?} on {shape}"
                );
                let n = word.len();
                let maxv = word.max_value();
                for k in 2..=maxv {
                    let mk1 = m_count(&word, k - 1, n).unwrap();
                    let mk = m_count(&word, k, n).unwrap();
                    if mk1 > 0 {
                        assert!(mk < mk1, "m_{k}({n}) >= m_{}({n}) on {shape}", k - 1);
                    }
                }
                amenable_via_filter.push(tableau);
            }
            let pruned: Vec<Tableau> = enumerate_amenable(shape).collect();
            assert_eq!(
                amenable_via_filter, pruned,
                "pruned amenable stream differs on {shape}"
            );
            amenable_via_filter.len() as u64
        })
        .sum();
    println!(
        "criterion 5 (strict content + strict drop, <= 10 cells): PASS \
         [{} amenable tableaux over {} shapes]",
        total,
        shapes.len()
    );
}

/// Criterion 6: a disconnected layer forces a second amenable filling, over
/// every shape class with at most 12 cells.
#[test]
fn criterion_6_disconnection_implies_not_strange() {
    let shapes = classes(12);
    let disconnected: Vec<&SkewShape> = shapes
        .iter()
        .filter(|s| layer_has_disconnection(s))
        .collect();
    assert!(!disconnected.is_empty());
    let failures: Vec<String> = disconnected
        .par_iter()
        .filter_map(|shape| {
            let count = enumerate_amenable(shape).take(2).count();
            (count < 2).then(|| shape.to_string())
        })
        .collect();
    assert!(failures.is_empty(), "unique filling despite disconnection: {failures:?}");
    println!(
        "criterion 6 (disconnected layer => not strange, <= 12 cells): PASS \
         [{} disconnected shapes of {}]",
        disconnected.len(),
        shapes.len()
    );
}

/// Independent naive enumerator: every letter value up to the cell count is
/// tried at every cell, constraints are checked against the definition, and
/// each complete filling is revalidated through the public GSYT checker.
mod naive {
    use super::*;
    use qshift_core::shapes::Cell;

    fn placement_ok(
        entries: &BTreeMap<Cell, Letter>,
        cell: Cell,
        letter: Letter,
    ) -> bool {
        if let Some(left) = cell.left() {
            if let Some(&l) = entries.get(&left) {
                if letter < l {
                    return false;
                }
            }
        }
        if let Some(&b) = entries.get(&cell.down()) {
            if letter > b {
                return false;
            }
        }
        if letter.is_marked() {
            !entries
                .iter()
                .any(|(c, &l)| c.row == cell.row && l == letter)
        } else {
            !entries
                .iter()
                .any(|(c, &l)| c.col == cell.col && l == letter)
        }
    }

    fn rec(
        shape: &SkewShape,
        order: &[Cell],
        depth: usize,
        max_value: u32,
        amenable_only: bool,
        entries: &mut BTreeMap<Cell, Letter>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if depth == order.len() {
            let tableau = Tableau::new(
                shape.clone(),
                entries.iter().map(|(&c, &l)| (c, l)).collect(),
            )
            .expect("entries cover the shape");
            assert!(tableau.is_valid_gsyt());
            if amenable_only && !is_amenable(&tableau.row_word()) {
                return;
            }
            let counts = tableau.content().counts().to_vec();
            *out.entry(counts).or_insert(0) += 1;
            return;
        }
        let cell = order[depth];
        for v in 1..=max_value {
            for letter in [Letter::marked(v), Letter::unmarked(v)] {
                if placement_ok(entries, cell, letter) {
                    entries.insert(cell, letter);
                    rec(shape, order, depth + 1, max_value, amenable_only, entries, out);
                    entries.remove(&cell);
                }
            }
        }
    }

    /// Contents of all amenable fillings, full alphabet up to the cell
    /// count, no content pruning.
    pub fn amenable_contents(shape: &SkewShape) -> BTreeMap<Vec<u32>, u64> {
        let mut out = BTreeMap::new();
        let order = shape.cells_reading_order();
        rec(
            shape,
            &order,
            0,
            shape.ncells() as u32,
            true,
            &mut BTreeMap::new(),
            &mut out,
        );
        out
    }

    /// Contents of all GSYT with values bounded by `max_value`.
    pub fn gsyt_contents(shape: &SkewShape, max_value: u32) -> BTreeMap<Vec<u32>, u64> {
        let mut out = BTreeMap::new();
        let order = shape.cells_reading_order();
        rec(
            shape,
            &order,
            0,
            max_value,
            false,
            &mut BTreeMap::new(),
            &mut out,
        );
        out
    }
}

fn decompose_as_map(shape: &SkewShape) -> BTreeMap<Vec<u32>, u64> {
    decompose(shape)
        .unwrap()
        .into_iter()
        .map(|(nu, mult)| (nu.parts().to_vec(), mult))
        .collect()
}

/// Criterion 7: frozen point values, the identity coefficient over straight
/// shapes, and agreement of the pruned enumeration with the naive
/// no-pruning, full-alphabet enumerator.
#[test]
fn criterion_7_point_values_and_naive_cross_check() {
    // Frozen point values.
    let one_box = SkewShape::from_parts(&[1], &[]).unwrap();
    let expected = QPolynomial::from_terms(2, vec![(vec![1, 0], 2), (vec![0, 1], 2)]).unwrap();
    assert!(expand_q(&one_box, 2).equals(&expected));

    let two_row = SkewShape::from_parts(&[2], &[]).unwrap();
    let expected = QPolynomial::from_terms(1, vec![(vec![2], 2)]).unwrap();
    assert!(expand_q(&two_row, 1).equals(&expected));

    assert_eq!(
        is_strange_oracle(&SkewShape::from_parts(&[2, 1], &[1]).unwrap()),
        (true, 1)
    );
    assert_eq!(
        is_strange_oracle(&SkewShape::from_parts(&[3, 1], &[1]).unwrap()),
        (false, 2)
    );

    // f over a straight shape is the indicator of its own partition.
    let mut straight_count = 0u64;
    for lambda in strict_partitions_up_to(10) {
        if lambda.is_empty() {
            continue;
        }
        assert_eq!(
            lr_coeff(&lambda, &StrictPartition::empty(), &lambda).unwrap(),
            1,
            "f for {lambda} is not 1"
        );
        let shape = SkewShape::new(lambda.clone(), StrictPartition::empty()).unwrap();
        assert_eq!(
            decompose_as_map(&shape),
            BTreeMap::from([(lambda.parts().to_vec(), 1)])
        );
        straight_count += 1;
    }

    // Naive cross-check of the amenable enumeration: every class reachable
    // from |outer| <= 7 plus every straight shape with up to 9 cells.
    let mut targets = classes(7);
    for lambda in strict_partitions_up_to(9) {
        if !lambda.is_empty() {
            targets.push(SkewShape::new(lambda, StrictPartition::empty()).unwrap());
        }
    }
    let checked: u64 = targets
        .par_iter()
        .map(|shape| {
            assert_eq!(
                decompose_as_map(shape),
                naive::amenable_contents(shape),
                "naive enumerator disagrees on {shape}"
            );
            1
        })
        .sum();

    // Naive cross-check of the GSYT expansion behind expand_q.
    for (outer, inner, nvars) in [
        (&[3, 1][..], &[1][..], 3u32),
        (&[2, 1], &[], 3),
        (&[3, 2, 1][..], &[1], 4),
        (&[4][..], &[], 4),
    ] {
        let shape = SkewShape::from_parts(outer, inner).unwrap();
        let naive_terms = naive::gsyt_contents(&shape, nvars);
        let poly = expand_q(&shape, nvars as usize);
        let poly_terms: BTreeMap<Vec<u32>, u64> = poly
            .terms()
            .map(|(exp, coef)| {
                let mut counts: Vec<u32> = exp.iter().map(|&e| e as u32).collect();
                while counts.last() == Some(&0) {
                    counts.pop();
                }
                (counts, coef.try_into().unwrap())
            })
            .collect();
        assert_eq!(poly_terms, naive_terms, "expand_q disagrees on {shape}");
    }

    println!(
        "criterion 7 (point values + naive cross-check): PASS \
         [{straight_count} straight coefficients, {checked} shapes cross-checked]"
    );
}

/// Criterion 8: expansions are symmetric polynomials for every shape class
/// with at most 8 cells in up to 4 variables.
#[test]
fn criterion_8_symmetry() {
    let shapes = classes(8);
    let failures: Vec<String> = shapes
        .par_iter()
        .filter_map(|shape| {
            let bad = (1..=4usize).any(|v| !expand_q(shape, v).is_symmetric());
            bad.then(|| shape.to_string())
        })
        .collect();
    assert!(failures.is_empty(), "asymmetric expansions on: {failures:?}");
    println!(
        "criterion 8 (symmetry, <= 8 cells, <= 4 vars): PASS [{} shapes]",
        shapes.len()
    );
}
