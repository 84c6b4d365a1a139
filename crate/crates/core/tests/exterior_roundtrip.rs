use polargrass::exterior::{
    alternating_from_coordinates, binomial, decompose, plucker_relations, satisfies_grassmannian,
};
use polargrass::field::{Field, FiniteField, SigmaKind};
use polargrass::polar::{gaussian_binomial, SubspaceEnumerator};

fn round_trip(f: FiniteField, max_n: usize) -> usize {
    let mut seen = 0;
    for n in 1..=max_n {
        for k in 1..=n {
            for w in SubspaceEnumerator::new(f, n, k).unwrap() {
                let back = decompose(&w.wedge().unwrap()).unwrap().expect("wedges decompose");
                assert_eq!(back, w);
                seen += 1;
            }
        }
    }
    seen
}

#[test]
fn decompose_inverts_wedge() {
    for p in [2, 3] {
        let expected: u128 = (1..=5).flat_map(|n| (1..=n).map(move |k| gaussian_binomial(n, k, p).unwrap())).sum();
        assert_eq!(round_trip(FiniteField::prime(p).unwrap(), 5) as u128, expected);
    }
    round_trip(FiniteField::quadratic(2, SigmaKind::Frobenius).unwrap(), 4);
}

#[test]
fn klein_quadric_over_gf2_and_gf3() {
    for p in [2, 3] {
        let f = FiniteField::prime(p).unwrap();
        let elems = f.elements().unwrap();
        let q = elems.len();
        let mut decomposable = 0;
        for code in 1..q.pow(6) {
            let coords: Vec<_> = (0..6).map(|i| elems[(code / q.pow(i)) % q]).collect();
            let x = alternating_from_coordinates(f, 4, 2, &coords).unwrap();
            let g = satisfies_grassmannian(&x).unwrap();
            assert_eq!(g, decompose(&x).unwrap().is_some());
            decomposable += g as usize;
        }
        // nonzero points of the Klein quadric: (q-1)·#lines of PG(3,q)
        let lines = (q * q + 1) * (q * q + q + 1);
        assert_eq!(decomposable, (q - 1) * lines);
    }
}

#[test]
fn relation_counts() {
    let f = FiniteField::prime(3).unwrap();
    assert_eq!(plucker_relations(f, 4, 2).unwrap().len(), 1);
    // G(2,5): five independent three-term relations
    assert_eq!(plucker_relations(f, 5, 2).unwrap().len(), 5);
    assert!(plucker_relations(f, 3, 1).is_err());
    assert_eq!(binomial(5, 2), 10);
}
