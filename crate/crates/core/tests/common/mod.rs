#![allow(dead_code)]

use std::path::PathBuf;

use mi_core::cli::{generate_instance, parse_instance, Family, InstanceFile};
use mi_core::matroid::AnyMatroid;
use mi_core::solver::{fan_in_neighbors, fan_out_neighbors, OrderedGround};
use mi_core::verify::brute_force_circuit;
use mi_core::{Element, ElementSet, Matroid};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus() -> Vec<(PathBuf, InstanceFile)> {
    let mut paths: Vec<_> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let inst = parse_instance(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (p, inst)
        })
        .collect()
}

/// A random matroid from one side of a generated instance.
pub fn random_matroid(rng: &mut ChaCha8Rng, max_n: usize) -> AnyMatroid {
    let family = Family::ALL[rng.gen_range(0..4)];
    let n = rng.gen_range(2..=max_n);
    let (m1, m2) = generate_instance(family, n, rng.gen()).build().unwrap();
    if rng.gen_bool(0.5) {
        m1
    } else {
        m2
    }
}

/// Greedy independent set over a random order, stopped at a random size.
pub fn random_independent(rng: &mut ChaCha8Rng, m: &AnyMatroid) -> ElementSet {
    let n = m.ground_size();
    let mut order: Vec<Element> = (0..n).collect();
    order.shuffle(rng);
    let target = rng.gen_range(0..=n);
    let mut s = ElementSet::new(n);
    for x in order {
        if s.len() == target {
            break;
        }
        if m.is_independent(&s.with(x)) {
            s.insert(x);
        }
    }
    s
}

pub fn random_subset(rng: &mut ChaCha8Rng, of: &ElementSet) -> ElementSet {
    let mut out = ElementSet::new(of.universe());
    out.extend(of.iter().filter(|_| rng.gen_bool(0.5)));
    out
}

/// Outcome of one randomized fan-in check; `None` when the draw had no
/// dependent extension to test.
pub fn check_fan_in(seed: u64) -> Option<Result<(), String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_matroid(&mut rng, 14);
    let s = random_independent(&mut rng, &m);
    let candidates: Vec<Element> = (0..m.ground_size())
        .filter(|&x| !s.contains(x) && !m.is_independent(&s.with(x)))
        .collect();
    let &v = candidates.choose(&mut rng)?;
    let reached = random_subset(&mut rng, &s);
    let mut order = OrderedGround::with_reached(&s, &reached);
    let got = match fan_in_neighbors(&m, &mut order, v) {
        Ok(u) => u,
        Err(e) => return Some(Err(format!("seed {seed}: {e}"))),
    };
    let circuit = brute_force_circuit(&m, &s, v).map_err(|e| format!("seed {seed}: {e}"));
    let circuit = match circuit {
        Ok(c) => c,
        Err(e) => return Some(Err(e)),
    };
    let expected = circuit.without(v).difference(&reached);
    if got != expected {
        return Some(Err(format!(
            "seed {seed}: S = {s:?}, A = {reached:?}, v = {v}: fan_in gave {got:?}, circuit minus A is {expected:?}"
        )));
    }
    let prefix: ElementSet = order.reached().iter().copied().collect();
    let mut sorted = order.sequence().to_vec();
    sorted.sort_unstable();
    if prefix != reached.union(&expected) || sorted != s.to_vec() {
        return Some(Err(format!("seed {seed}: ordering invariant broken: {:?}", order)));
    }
    Some(Ok(()))
}

/// Outcome of one randomized fan-out check against the exhaustive pair scan.
pub fn check_fan_out(seed: u64) -> Option<Result<(), String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_matroid(&mut rng, 14);
    let n = m.ground_size();
    let s = random_independent(&mut rng, &m);
    let mut layer = random_subset(&mut rng, &s);
    if layer.is_empty() {
        layer.insert(s.min()?);
    }
    let outside = ElementSet::full(n).difference(&s);
    let sources: ElementSet = outside.iter().filter(|&x| m.is_independent(&s.with(x))).collect();
    let reached_out = sources.union(&random_subset(&mut rng, &outside));
    let layer_vec = layer.to_vec();

    let got = match fan_out_neighbors(&m, &s, &layer_vec, &reached_out) {
        Ok(g) => g,
        Err(e) => return Some(Err(format!("seed {seed}: {e}"))),
    };
    let expected: Vec<Element> = outside
        .iter()
        .filter(|&u| !reached_out.contains(u))
        .filter(|&u| layer.iter().any(|v| m.is_independent(&s.without(v).with(u))))
        .collect();
    let got_ids: Vec<Element> = got.iter().map(|&(t, _)| t).collect();
    if got_ids != expected {
        return Some(Err(format!(
            "seed {seed}: S = {s:?}, layer = {layer:?}, B = {reached_out:?}: fan_out gave {got:?}, pair scan gives {expected:?}"
        )));
    }
    for &(t, parent) in &got {
        let circuit = match brute_force_circuit(&m, &s, t) {
            Ok(c) => c,
            Err(e) => return Some(Err(format!("seed {seed}: {e}"))),
        };
        if !layer.contains(parent) || !circuit.contains(parent) || !m.is_independent(&s.without(parent).with(t)) {
            return Some(Err(format!("seed {seed}: bad parent {parent} for {t}")));
        }
    }
    Some(Ok(()))
}
