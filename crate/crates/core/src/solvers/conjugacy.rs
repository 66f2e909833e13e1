//! Equivalence of permutation sets under simultaneous relabeling of points.

use std::collections::{BTreeMap, HashSet};

use crate::perm::Permutation;
use crate::permset::PermSet;

/// Per-point statistic preserved by conjugation: for each member moving the
/// point, its cycle type and the length of the orbit through the point.
type PointSignature = Vec<(Vec<usize>, usize)>;
type BucketKey = (usize, usize, Vec<Vec<usize>>, Vec<PointSignature>);

struct Profile {
    images: Vec<Vec<u8>>,
    supports: Vec<Vec<u8>>,
    signatures: Vec<PointSignature>,
}

impl Profile {
    fn new(s: &PermSet) -> Self {
        let n = s.degree();
        let mut signatures = vec![Vec::new(); n];
        let mut supports = Vec::with_capacity(s.len());
        for p in s.iter() {
            let ty = p.cycle_type();
            let raw = p.raw();
            let mut supp = Vec::new();
            for x in 0..n {
                if raw[x] as usize != x {
                    let mut len = 1;
                    let mut y = raw[x] as usize;
                    while y != x {
                        y = raw[y] as usize;
                        len += 1;
                    }
                    signatures[x].push((ty.clone(), len));
                    supp.push(x as u8);
                }
            }
            supports.push(supp);
        }
        for sig in &mut signatures {
            sig.sort();
        }
        Profile {
            images: s.iter().map(|p| p.raw().to_vec()).collect(),
            supports,
            signatures,
        }
    }

    fn invariant(&self) -> (Vec<Vec<usize>>, Vec<PointSignature>) {
        let mut types: Vec<Vec<usize>> = self.signatures.iter().flatten().map(|(t, _)| t.clone()).collect();
        types.sort();
        let mut sigs = self.signatures.clone();
        sigs.sort();
        (types, sigs)
    }
}

struct Search<'a> {
    n: usize,
    a: &'a Profile,
    b_members: HashSet<Vec<u8>>,
    candidates: Vec<Vec<u8>>,
    order: Vec<u8>,
    /// Members whose whole support is assigned once `order[..=d]` is.
    completes: Vec<Vec<usize>>,
    map: Vec<Option<u8>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn member_maps(&self, e: usize) -> bool {
        let mut img: Vec<u8> = (0..self.n as u8).collect();
        let src = &self.a.images[e];
        for &x in &self.a.supports[e] {
            let gx = self.map[x as usize].expect("assigned");
            let gy = self.map[src[x as usize] as usize].expect("assigned");
            img[gx as usize] = gy;
        }
        self.b_members.contains(&img)
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth] as usize;
        for i in 0..self.candidates[x].len() {
            let y = self.candidates[x][i];
            if self.used[y as usize] {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y as usize] = true;
            let ok = self.completes[depth].iter().all(|&e| self.member_maps(e));
            if ok && self.run(depth + 1) {
                return true;
            }
            self.used[y as usize] = false;
            self.map[x] = None;
        }
        false
    }
}

/// Some `g` with `{g∘x∘g⁻¹ : x ∈ a} = b`, found by backtracking over point
/// images; points are only sent to points with the same signature.
pub fn conjugacy_map(a: &PermSet, b: &PermSet) -> Option<Permutation> {
    if a.degree() != b.degree() || a.len() != b.len() {
        return None;
    }
    let n = a.degree();
    let pa = Profile::new(a);
    let pb = Profile::new(b);
    if pa.invariant() != pb.invariant() {
        return None;
    }
    let moved: Vec<usize> = (0..n).filter(|&x| !pa.signatures[x].is_empty()).collect();
    let candidates: Vec<Vec<u8>> = (0..n)
        .map(|x| {
            (0..n as u8)
                .filter(|&y| pb.signatures[y as usize] == pa.signatures[x])
                .collect()
        })
        .collect();

    let mut order: Vec<u8> = Vec::with_capacity(moved.len());
    let mut placed = vec![false; n];
    while order.len() < moved.len() {
        let score = |x: usize| {
            let linked = pa
                .supports
                .iter()
                .filter(|s| s.contains(&(x as u8)) && s.iter().any(|&y| placed[y as usize]))
                .count();
            (
                linked,
                usize::MAX - candidates[x].len(),
                pa.signatures[x].len(),
                usize::MAX - x,
            )
        };
        let next = moved
            .iter()
            .copied()
            .filter(|&x| !placed[x])
            .max_by_key(|&x| score(x))
            .expect("unplaced point");
        placed[next] = true;
        order.push(next as u8);
    }
    let mut pos = vec![usize::MAX; n];
    for (d, &x) in order.iter().enumerate() {
        pos[x as usize] = d;
    }
    let mut completes = vec![Vec::new(); order.len()];
    for (e, supp) in pa.supports.iter().enumerate() {
        if let Some(last) = supp.iter().map(|&x| pos[x as usize]).max() {
            completes[last].push(e);
        }
    }

    let mut search = Search {
        n,
        a: &pa,
        b_members: pb.images.iter().cloned().collect(),
        candidates,
        order,
        completes,
        map: vec![None; n],
        used: vec![false; n],
    };
    if !search.run(0) {
        return None;
    }
    let mut free = (0..n as u8).filter(|&y| !search.used[y as usize]);
    let img: Vec<u8> = search
        .map
        .iter()
        .map(|m| m.unwrap_or_else(|| free.next().expect("as many free points as unmapped ones")))
        .collect();
    let g = Permutation::from_raw(img);
    debug_assert!(a.iter().all(|x| b.contains(&x.conjugate_unchecked(&g))));
    Some(g)
}

/// One class of [`classify_up_to_similarity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityClass {
    /// Index of the member whose sorted cycle-notation list is least.
    pub representative: usize,
    /// Input indices, ascending.
    pub members: Vec<usize>,
}

fn text_key(s: &PermSet) -> Vec<String> {
    let mut v = s.to_strings();
    v.sort();
    v
}

/// Partitions `sets` under simultaneous conjugation and, when
/// `allow_inversion` is set, under replacing a set by its inverses.
/// Classes are listed by first occurrence.
pub fn classify_up_to_similarity(sets: &[PermSet], allow_inversion: bool) -> Vec<SimilarityClass> {
    let mut buckets: BTreeMap<BucketKey, Vec<usize>> = BTreeMap::new();
    let mut anchors: Vec<usize> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let (types, sigs) = Profile::new(s).invariant();
        let bucket = buckets.entry((s.degree(), s.len(), types, sigs)).or_default();
        let inverse = allow_inversion.then(|| s.inverse_set());
        let found = bucket.iter().copied().find(|&c| {
            let anchor = &sets[anchors[c]];
            conjugacy_map(anchor, s).is_some()
                || inverse.as_ref().is_some_and(|inv| conjugacy_map(anchor, inv).is_some())
        });
        match found {
            Some(c) => classes[c].push(i),
            None => {
                bucket.push(classes.len());
                anchors.push(i);
                classes.push(vec![i]);
            }
        }
    }
    classes
        .into_iter()
        .map(|members| {
            let representative = *members
                .iter()
                .min_by_key(|&&i| text_key(&sets[i]))
                .expect("nonempty class");
            SimilarityClass {
                representative,
                members,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{apex_three_cycles, transposition_star};
    use crate::perm::parse_cycles;

    #[test]
    fn maps_conjugates() {
        let t2 = apex_three_cycles(9).unwrap();
        let g = parse_cycles("(1,5,9,2)(3,7)", 9).unwrap();
        let c = t2.conjugate_set(&g).unwrap();
        let h = conjugacy_map(&t2, &c).unwrap();
        assert!(t2.iter().all(|x| c.contains(&x.conjugate(&h).unwrap())));
        assert!(conjugacy_map(&transposition_star(5).unwrap(), &apex_three_cycles(5).unwrap()).is_none());
    }

    #[test]
    fn inversion_matters_for_even_degree() {
        let t2 = apex_three_cycles(12).unwrap();
        assert!(conjugacy_map(&t2, &t2.inverse_set()).is_none());
        let sets = vec![t2.clone(), t2.inverse_set()];
        assert_eq!(classify_up_to_similarity(&sets, false).len(), 2);
        assert_eq!(classify_up_to_similarity(&sets, true).len(), 1);
    }

    #[test]
    fn classes() {
        let t1 = transposition_star(6).unwrap();
        let g = parse_cycles("(1,2,3,4,5,6)", 6).unwrap();
        let sets = vec![t1.conjugate_set(&g).unwrap(), t1.clone()];
        let cls = classify_up_to_similarity(&sets, false);
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].members, vec![0, 1]);
        assert_eq!(classify_up_to_similarity(&sets[..1], true).len(), 1);
        assert!(classify_up_to_similarity(&[], false).is_empty());
    }
}
