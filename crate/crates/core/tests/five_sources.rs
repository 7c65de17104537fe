use std::time::Instant;

use pid_core::engine::{decompose, verify_consistency, MeasureSource};
use pid_core::random::random_binary_distribution;
use pid_core::BaseConcept;

#[test]
fn five_source_redundancy_decomposition_is_consistent() {
    let start = Instant::now();
    let dist = random_binary_distribution(5, 2024).unwrap();
    let result = decompose(&dist, BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
    assert_eq!(result.atoms().values().len(), 7579);
    assert!(verify_consistency(result.atoms(), &dist).unwrap().passed);
    assert!(start.elapsed().as_secs() < 60, "took {:?}", start.elapsed());
}
