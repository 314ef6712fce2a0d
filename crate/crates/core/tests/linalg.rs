use proptest::prelude::*;
use verma_core::linalg::{make_row, solve, Echelon, Inserted, Solution, SparseRow};
use verma_core::{Scalar, Space};

fn t() -> Scalar {
    Scalar::param(&Space::new(&["t"]).unwrap(), "t").unwrap()
}

/// Entry `a + b t` with most entries zero.
fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        2 => (-3i64..=3).prop_map(Scalar::from_int),
        1 => (-2i64..=2, -2i64..=2).prop_map(|(a, b)| Scalar::from_int(a) + Scalar::from_int(b) * &t()),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(entry(), cols), rows)
}

fn sparse(row: &[Scalar]) -> SparseRow {
    make_row(row.iter().cloned().enumerate())
}

fn apply(a: &[Vec<Scalar>], x: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|row| row.iter().zip(x).fold(Scalar::zero(), |acc, (r, v)| &acc + &(r * v))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_satisfy_the_system(a in matrix(6, 5), x in prop::collection::vec(-4i64..=4, 5)) {
        let x: Vec<Scalar> = x.into_iter().map(Scalar::from_int).collect();
        let b = apply(&a, &x);
        let rows: Vec<SparseRow> = a.iter().map(|r| sparse(r)).collect();
        match solve(&rows, &b, 5) {
            Solution::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
            Solution::Unique(y) => prop_assert_eq!(y, x),
            Solution::Many(y, _) => prop_assert_eq!(apply(&a, &y), b),
        }
    }

    #[test]
    fn perturbed_right_side_is_detected(a in matrix(5, 3)) {
        let rows: Vec<SparseRow> = a.iter().map(|r| sparse(r)).collect();
        let mut e = Echelon::new(3);
        for r in &rows {
            e.insert(r.clone());
        }
        // A dependent row with a nonzero right side makes the system inconsistent.
        if e.rank() < rows.len() {
            let mut b = vec![Scalar::zero(); rows.len()];
            let mut probe = Echelon::new(3);
            let dependent = rows.iter().position(|r| probe.insert(r.clone()) == Inserted::Dependent);
            if let Some(i) = dependent {
                b[i] = Scalar::one();
                prop_assert_eq!(solve(&rows, &b, 3), Solution::Inconsistent);
            }
        }
    }

    #[test]
    fn nullspace_is_a_kernel_basis(a in matrix(4, 6)) {
        let mut e = Echelon::new(6);
        for r in &a {
            e.insert(sparse(r));
        }
        let ns = e.nullspace();
        prop_assert_eq!(ns.len(), 6 - e.rank());
        for v in &ns {
            prop_assert!(apply(&a, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn normal_form_is_independent_of_insertion_order(a in matrix(4, 6), probe in prop::collection::vec(entry(), 6)) {
        let allowed = vec![true, true, true, false, false, false];
        let mut fwd = Echelon::with_allowed(allowed.clone());
        let mut rev = Echelon::with_allowed(allowed);
        for r in &a {
            fwd.insert(sparse(r));
        }
        for r in a.iter().rev() {
            rev.insert(sparse(r));
        }
        let same_pivots = (0..6).all(|c| fwd.is_pivot(c) == rev.is_pivot(c));
        if same_pivots && fwd.leftovers().is_empty() && rev.leftovers().is_empty() {
            let p = sparse(&probe);
            prop_assert_eq!(fwd.reduce(&p), rev.reduce(&p));
        }
    }
}
