//! Seeded random instance generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::instance::{InstanceFile, MatroidSpec};
use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Two uniform matroids with random rank caps.
    UniformPair,
    /// Bipartite matching: edges as elements, one partition matroid per side.
    PartitionMatching,
    /// Random multigraph against a random edge coloring.
    GraphicPartition,
    /// Two random binary matrices over the same column set.
    Gf2Pair,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::UniformPair,
        Family::PartitionMatching,
        Family::GraphicPartition,
        Family::Gf2Pair,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::UniformPair => "uniform_pair",
            Family::PartitionMatching => "partition_matching",
            Family::GraphicPartition => "graphic_partition",
            Family::Gf2Pair => "gf2_pair",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.id() == s).ok_or_else(|| {
            let known: Vec<_> = Family::ALL.iter().map(|f| f.id()).collect();
            CliError::Input(format!("unknown family {s:?}; known families: {}", known.join(", ")))
        })
    }
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize, blocks: usize, max_capacity: usize) -> MatroidSpec {
    let mut members = vec![Vec::new(); blocks];
    for x in 0..n {
        members[rng.gen_range(0..blocks)].push(x);
    }
    let capacities = (0..blocks).map(|_| rng.gen_range(1..=max_capacity)).collect();
    MatroidSpec::Partition {
        blocks: members,
        capacities,
    }
}

fn side_partition(endpoints: &[usize], side: usize) -> MatroidSpec {
    let mut blocks = vec![Vec::new(); side];
    for (e, &v) in endpoints.iter().enumerate() {
        blocks[v].push(e);
    }
    MatroidSpec::Partition {
        blocks,
        capacities: vec![1; side],
    }
}

fn random_columns(rng: &mut ChaCha8Rng, n: usize, row_count: usize) -> MatroidSpec {
    let columns = (0..n)
        .map(|_| (0..row_count).map(|_| rng.gen_range(0..2u8)).collect())
        .collect();
    MatroidSpec::LinearGf2 { row_count, columns }
}

/// Deterministic in `(family, n, seed)`.
pub fn generate_instance(family: Family, n: usize, seed: u64) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (matroid1, matroid2) = match family {
        Family::UniformPair => (
            MatroidSpec::Uniform {
                n,
                k: rng.gen_range(0..=n),
            },
            MatroidSpec::Uniform {
                n,
                k: rng.gen_range(0..=n),
            },
        ),
        Family::PartitionMatching => {
            let side = (n / 3).max(1);
            let left: Vec<usize> = (0..n).map(|_| rng.gen_range(0..side)).collect();
            let right: Vec<usize> = (0..n).map(|_| rng.gen_range(0..side)).collect();
            (side_partition(&left, side), side_partition(&right, side))
        }
        Family::GraphicPartition => {
            let vertex_count = n / 2 + 2;
            let edges = (0..n)
                .map(|_| (rng.gen_range(0..vertex_count), rng.gen_range(0..vertex_count)))
                .collect();
            let colors = (n / 3).max(1);
            (
                MatroidSpec::Graphic { vertex_count, edges },
                random_partition(&mut rng, n, colors, 2),
            )
        }
        Family::Gf2Pair => {
            let max_rows = (n / 2 + 1).max(1);
            let rows1 = rng.gen_range(1..=max_rows);
            let rows2 = rng.gen_range(1..=max_rows);
            let m1 = random_columns(&mut rng, n, rows1);
            (m1, random_columns(&mut rng, n, rows2))
        }
    };
    InstanceFile {
        n,
        matroid1,
        matroid2,
        name: Some(format!("{family}-n{n}-s{seed}")),
        seed: Some(seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::instance::parse_instance;
    use proptest::prelude::*;

    #[test]
    fn deterministic() {
        let a = generate_instance(Family::PartitionMatching, 6, 1);
        let b = generate_instance(Family::PartitionMatching, 6, 1);
        assert_eq!(a.to_canonical_json(), b.to_canonical_json());
        assert_ne!(a, generate_instance(Family::PartitionMatching, 6, 2));
    }

    #[test]
    fn gf2_pair_shape() {
        let inst = generate_instance(Family::Gf2Pair, 10, 7);
        let (m1, m2) = inst.build().unwrap();
        assert!(matches!(m1, crate::AnyMatroid::LinearGf2(_)));
        assert!(matches!(m2, crate::AnyMatroid::LinearGf2(_)));
        assert_eq!(crate::Matroid::ground_size(&m2), 10);
    }

    #[test]
    fn unknown_family_lists_known_ones() {
        let err = "matching".parse::<Family>().unwrap_err().to_string();
        for f in Family::ALL {
            assert!(err.contains(f.id()));
        }
    }

    proptest! {
        #[test]
        fn generated_instances_round_trip(family in 0usize..4, n in 0usize..40, seed in any::<u64>()) {
            let inst = generate_instance(Family::ALL[family], n, seed);
            let parsed = parse_instance(&inst.to_canonical_json()).unwrap();
            prop_assert_eq!(parsed, inst);
        }
    }
}
