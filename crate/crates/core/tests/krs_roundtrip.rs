use bitableau::grading::Bidegree;
use bitableau::krs::{diag, extract_witness, krs, krs_array, krs_insert};
use bitableau::polyring::{count_monomials, monomials_of_degree};
use bitableau::tableaux::{enumerate_standard, DEFAULT_ENUM_CAP};
use bitableau::Shape;

const M: usize = 3;
const N: usize = 3;
const MAX_DEGREE: usize = 6;

#[test]
fn insertion_then_deletion_is_identity() {
    for d in 0..=MAX_DEGREE {
        for w in monomials_of_degree(M, N, d) {
            let sigma = krs_insert(&w);
            assert!(sigma.is_standard(), "{sigma} from {w}");
            assert_eq!(krs(&sigma).unwrap(), w, "via {sigma}");
        }
    }
}

#[test]
fn deletion_then_insertion_is_identity() {
    for b in Bidegree::all_up_to(M, N, MAX_DEGREE) {
        let standard = enumerate_standard(M, N, &b, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(standard.len() as u64, count_monomials(&b), "{b}");
        for sigma in standard {
            let w = krs(&sigma).unwrap();
            assert_eq!(w.bidegree(M, N), b, "content of {sigma}");
            assert_eq!(krs_insert(&w), sigma);
        }
    }
}

fn small_shapes() -> Vec<Shape> {
    let mut out = Vec::new();
    for d in 1..=MAX_DEGREE {
        out.extend(Shape::partitions(d, M.min(N)).into_iter().filter(|s| s.len() <= 2));
    }
    out
}

#[test]
fn witnesses_divide_and_marks_are_counted() {
    let shapes = small_shapes();
    for b in Bidegree::all_up_to(M, N, MAX_DEGREE) {
        for sigma in enumerate_standard(M, N, &b, DEFAULT_ENUM_CAP).unwrap() {
            for shape in &shapes {
                if !sigma.contains_superstandard(shape) {
                    assert!(extract_witness(&sigma, shape).is_err());
                    continue;
                }
                let w = extract_witness(&sigma, shape).unwrap();
                assert!(w.is_row_superstandard_of(shape), "{w} for {sigma} and {shape}");
                assert!(diag(&w).divides(&krs(&sigma).unwrap()), "{w} for {sigma}");
                let array = krs_array(&sigma, shape).unwrap();
                for (k, &s) in shape.parts().iter().enumerate() {
                    assert_eq!(array.marked(k + 1).len(), s, "mark {} for {sigma}", k + 1);
                }
                assert_eq!(array.rhos().iter().filter(|&&r| r > shape.len()).count(), 0);
            }
        }
    }
}

#[test]
fn superstandard_images_are_diagonals() {
    for shape in small_shapes() {
        for sigma in bitableau::tableaux::row_superstandard(N, &shape) {
            if sigma.is_standard() {
                assert!(sigma.contains_superstandard(&shape));
                assert_eq!(krs(&sigma).unwrap(), diag(&sigma), "{sigma}");
                assert_eq!(krs_array(&sigma, &shape).unwrap().monomial(), diag(&sigma));
            }
        }
    }
}
