use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use super::{coprime_residues, element_order, Certificate, GroupElement, OrderResult, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("at least one generator is required")]
    NoGenerators,
}

/// A finite group stored as an explicit element list. Enumeration order is
/// breadth-first from the identity over the generators, which makes every
/// search below deterministic.
#[derive(Debug, Clone)]
pub struct FiniteGroup<G> {
    elements: Vec<G>,
    index: HashMap<G, usize>,
    generators: Vec<G>,
}

impl<G: GroupElement> FiniteGroup<G> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[G] {
        &self.elements
    }

    pub fn generators(&self) -> &[G] {
        &self.generators
    }

    pub fn identity(&self) -> &G {
        &self.elements[0]
    }

    pub fn contains(&self, g: &G) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &G) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Order of `g`, bounded by `|G|`.
    pub fn element_order(&self, g: &G) -> u64 {
        match element_order(g, self.order() as u64) {
            OrderResult::Finite(m) => m,
            OrderResult::ExceedsBound(_) => unreachable!("element order divides the group order"),
        }
    }
}

/// Subgroup generated by `generators`, failing once more than `cap`
/// elements have been produced.
pub fn generate_closure<G: GroupElement>(
    generators: &[G],
    cap: usize,
) -> Result<FiniteGroup<G>, GroupError> {
    let first = generators.first().ok_or(GroupError::NoGenerators)?;
    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for gen in generators {
            let p = elements[i].mul(gen);
            if index.contains_key(&p) {
                continue;
            }
            if elements.len() == cap {
                return Err(GroupError::CapExceeded { cap });
            }
            index.insert(p.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(p);
        }
    }
    Ok(FiniteGroup {
        elements,
        index,
        generators: generators.to_vec(),
    })
}

/// First candidate (in iteration order) conjugating `subject` as `relation`
/// demands.
pub fn search_witness<'a, G, I>(candidates: I, subject: &G, relation: Relation) -> Option<Certificate<G>>
where
    G: GroupElement + 'a,
    I: IntoIterator<Item = &'a G>,
{
    let target = relation.target(subject);
    candidates
        .into_iter()
        .find(|h| subject.conjugate_by(h) == target)
        .map(|h| {
            Certificate::new(subject.clone(), h.clone(), relation)
                .expect("search result re-verifies")
        })
}

/// Exhaustive search for `h ∈ G` with `h·g·h⁻¹ = g⁻¹`.
pub fn is_real_bruteforce<G: GroupElement>(group: &FiniteGroup<G>, g: &G) -> Option<Certificate<G>> {
    search_witness(group.elements(), g, Relation::Inverse)
}

/// For every `k ∈ [1, m)` coprime to `m = Ord(g)`, the first `h` with
/// `h·g·h⁻¹ = g^k`. `None` as soon as one exponent has no witness.
pub fn is_rational_bruteforce<G: GroupElement>(
    group: &FiniteGroup<G>,
    g: &G,
) -> Option<BTreeMap<u64, Certificate<G>>> {
    let m = group.element_order(g);
    coprime_residues(m)
        .into_iter()
        .map(|k| search_witness(group.elements(), g, Relation::Power(k as i64)).map(|c| (k, c)))
        .collect()
}

/// Conjugacy classes, each listed in enumeration order, classes ordered by
/// their first element.
pub fn conjugacy_classes<G: GroupElement>(group: &FiniteGroup<G>) -> Vec<Vec<G>> {
    let mut class_of = vec![usize::MAX; group.order()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..group.order() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for h in group.elements() {
            let j = group.index_of(&group.elements()[i].conjugate_by(h)).expect("closed under conjugation");
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    to_elements(group, classes)
}

/// Rational classes: `y ~ g` when `y` is conjugate to some `g^k` with `k`
/// coprime to `Ord(g)`. Always a coarsening of the conjugacy classes.
pub fn rational_classes<G: GroupElement>(group: &FiniteGroup<G>) -> Vec<Vec<G>> {
    let classes = conjugacy_classes(group);
    let mut class_index = HashMap::new();
    for (c, members) in classes.iter().enumerate() {
        for g in members {
            class_index.insert(g.clone(), c);
        }
    }
    // Union-find over conjugacy classes.
    let mut parent: Vec<usize> = (0..classes.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (c, members) in classes.iter().enumerate() {
        let g = &members[0];
        for k in coprime_residues(group.element_order(g)) {
            let d = class_index[&g.pow(k as i64)];
            let (a, b) = (find(&mut parent, c), find(&mut parent, d));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut merged: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (c, members) in classes.iter().enumerate() {
        let root = find(&mut parent, c);
        merged
            .entry(root)
            .or_default()
            .extend(members.iter().map(|g| group.index_of(g).expect("member")));
    }
    let mut out: Vec<Vec<usize>> = merged.into_values().collect();
    for members in &mut out {
        members.sort_unstable();
    }
    out.sort_by_key(|m| m[0]);
    to_elements(group, out)
}

fn to_elements<G: GroupElement>(group: &FiniteGroup<G>, classes: Vec<Vec<usize>>) -> Vec<Vec<G>> {
    classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| group.elements()[i].clone()).collect())
        .collect()
}
