use std::collections::{HashSet, VecDeque};

use super::{Limits, RootSystem, RootSystemError, Weight};

/// Integer matrix acting on weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    rank: usize,
    entries: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        Self { rank, entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.entry(i, j) * mu.0[j]).sum())
                .collect(),
        )
    }

    pub fn compose(&self, other: &Self) -> Self {
        let r = self.rank;
        let mut entries = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.entry(i, k);
                if a != 0 {
                    for j in 0..r {
                        entries[i * r + j] += a * other.entry(k, j);
                    }
                }
            }
        }
        Self { rank: r, entries }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }
}

/// The Weyl group as an explicit list of matrices on weight coordinates.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    generators: Vec<WeylElement>,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    /// Enumerates the group generated by the simple reflections.
    pub fn build(rs: &RootSystem, limits: &Limits) -> Result<Self, RootSystemError> {
        let r = rs.rank();
        let generators: Vec<WeylElement> = (0..r)
            .map(|i| {
                let mut m = WeylElement::identity(r);
                let alpha = &rs.simple_roots()[i];
                for j in 0..r {
                    m.entries[j * r + i] -= alpha.0[j];
                }
                m
            })
            .collect();
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut elements = Vec::new();
        let mut queue = VecDeque::from([WeylElement::identity(r)]);
        seen.insert(WeylElement::identity(r));
        while let Some(w) = queue.pop_front() {
            for s in &generators {
                let next = s.compose(&w);
                if seen.insert(next.clone()) {
                    if seen.len() > limits.max_weyl_order {
                        return Err(RootSystemError::WeylCapExceeded {
                            cap: limits.max_weyl_order,
                        });
                    }
                    queue.push_back(next);
                }
            }
            elements.push(w);
        }
        Ok(Self {
            rank: r,
            generators,
            elements,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let set: std::collections::BTreeSet<Weight> = self.elements.iter().map(|w| w.apply(mu)).collect();
        set.into_iter().collect()
    }

    /// The unique dominant weight in the orbit of `mu`.
    pub fn dominant_conjugate(&self, mu: &Weight) -> Weight {
        self.elements
            .iter()
            .map(|w| w.apply(mu))
            .find(Weight::is_dominant)
            .expect("every Weyl orbit meets the dominant chamber")
    }
}
