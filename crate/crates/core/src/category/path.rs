//! Category rings presented as path categories of a graded quiver
//! modulo relations. The basis of each hom group is the set of normal-form
//! paths: shorter paths are preferred, ties broken by label.

use std::collections::HashMap;

use super::{BasisMorphism, CategoryRing, ObjectId, RingError};
use crate::poset::FinitePoset;

#[derive(Clone, Debug)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub degree: u8,
    pub label: String,
}

#[derive(Clone, Debug, Default)]
pub struct Quiver {
    pub objects: Vec<ObjectId>,
    pub arrows: Vec<Arrow>,
}

/// A homogeneous linear combination of paths; each path lists arrows in
/// order of application.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Quiver {
    pub fn object(&self, name: &str) -> usize {
        self.objects.iter().position(|o| o.name == name).unwrap_or_else(|| panic!("no object {name}"))
    }

    pub fn add_arrow(&mut self, source: &str, target: &str, degree: u8, label: impl Into<String>) -> usize {
        let (source, target) = (self.object(source), self.object(target));
        self.arrows.push(Arrow { source, target, degree, label: label.into() });
        self.arrows.len() - 1
    }

    pub fn arrow(&self, label: &str) -> usize {
        self.arrows.iter().position(|a| a.label == label).unwrap_or_else(|| panic!("no arrow {label}"))
    }

    /// Path from arrow labels in order of application.
    pub fn path(&self, labels: &[&str]) -> Vec<usize> {
        labels.iter().map(|l| self.arrow(l)).collect()
    }

    /// Same quiver with every arrow reversed.
    pub fn opposite(&self, relabel: impl Fn(&Arrow) -> String) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { source: a.target, target: a.source, degree: a.degree, label: relabel(a) })
            .collect();
        Quiver { objects: self.objects.clone(), arrows }
    }

    fn path_label(&self, path: &[usize], start: usize) -> String {
        if path.is_empty() {
            return format!("id[{}]", self.objects[start].name);
        }
        path.iter().rev().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
    }
}

impl Relation {
    pub fn new(terms: Vec<(i64, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    /// Reverses every path, for the opposite presentation.
    pub fn opposite(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (*c, p.iter().rev().copied().collect())).collect() }
    }
}

struct PathSpace {
    paths: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// per column: `Ok(basis position)` or `Err(row)` holding the reduction
    status: Vec<Result<usize, usize>>,
    rows: Vec<Vec<i64>>,
    basis_cols: Vec<usize>,
}

impl PathSpace {
    /// Coordinates of a path in the basis of this hom group.
    fn reduce(&self, col: usize) -> Vec<(usize, i64)> {
        match self.status[col] {
            Ok(pos) => vec![(pos, 1)],
            Err(r) => {
                let row = &self.rows[r];
                self.basis_cols
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| row[c] != 0)
                    .map(|(pos, &c)| (pos, -row[c]))
                    .collect()
            }
        }
    }
}

fn degree_of(q: &Quiver, path: &[usize]) -> u8 {
    path.iter().map(|&a| q.arrows[a].degree).sum::<u8>() % 2
}

/// Builds the category ring of `quiver / relations`. Relations must be
/// homogeneous in path length, so the quotient is computed one length at a
/// time until a whole layer vanishes.
pub fn build(
    name: &str,
    poset: Option<FinitePoset>,
    quiver: &Quiver,
    relations: &[Relation],
) -> Result<CategoryRing, RingError> {
    let n = quiver.objects.len();
    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, a) in quiver.arrows.iter().enumerate() {
        out_arrows[a.source].push(k);
    }
    let ends = |p: &[usize]| (quiver.arrows[p[0]].source, quiver.arrows[p[p.len() - 1]].target);
    for rel in relations {
        let Some((_, first)) = rel.terms.first() else { continue };
        let key = (ends(first), first.len(), degree_of(quiver, first));
        if rel.terms.iter().any(|(_, p)| p.is_empty() || (ends(p), p.len(), degree_of(quiver, p)) != key) {
            return Err(RingError::Presentation("relation is not homogeneous".into()));
        }
    }
    // layers[len][y][z] = paths of that length
    let mut layers: Vec<Vec<Vec<Vec<Vec<usize>>>>> = Vec::new();
    let mut spaces: HashMap<(usize, usize, usize), PathSpace> = HashMap::new();
    let mut frontier: Vec<(usize, Vec<usize>)> = (0..n).map(|y| (y, Vec::new())).collect();
    let max_len = 4 * (quiver.arrows.len() + 1);
    loop {
        let len = layers.len();
        if len > max_len {
            return Err(RingError::Presentation("path quotient is not nilpotent".into()));
        }
        let mut layer = vec![vec![Vec::new(); n]; n];
        for (y, p) in &frontier {
            let z = if p.is_empty() { *y } else { quiver.arrows[p[p.len() - 1]].target };
            layer[*y][z].push(p.clone());
        }
        let mut survivors = false;
        for y in 0..n {
            for z in 0..n {
                let mut paths = layer[y][z].clone();
                // least preferred first
                paths.sort_by_key(|a| std::cmp::Reverse(quiver.path_label(a, y)));
                let index: HashMap<Vec<usize>, usize> =
                    paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
                let mut rows = Vec::new();
                for rel in relations {
                    let (w, w2) = ends(&rel.terms[0].1);
                    let rl = rel.terms[0].1.len();
                    if rl > len {
                        continue;
                    }
                    for pre_len in 0..=len - rl {
                        let post_len = len - rl - pre_len;
                        for pre in &layers_or(&layers, &layer, pre_len)[y][w] {
                            for post in &layers_or(&layers, &layer, post_len)[w2][z] {
                                let mut v = vec![0i64; paths.len()];
                                for (c, mid) in &rel.terms {
                                    let mut full = pre.clone();
                                    full.extend(mid);
                                    full.extend(post);
                                    v[index[&full]] += c;
                                }
                                if v.iter().any(|&x| x != 0) {
                                    rows.push(v);
                                }
                            }
                        }
                    }
                }
                let (status, basis_cols) = reduce_rows(&mut rows, paths.len()).map_err(|col| {
                    RingError::Presentation(format!(
                        "hom({}, {}) is not freely spanned by paths at {}",
                        quiver.objects[y].name,
                        quiver.objects[z].name,
                        quiver.path_label(&paths[col], y)
                    ))
                })?;
                if !basis_cols.is_empty() {
                    survivors = true;
                }
                spaces.insert((y, z, len), PathSpace { paths, index, status, rows, basis_cols });
            }
        }
        layers.push(layer);
        if !survivors {
            break;
        }
        let mut next = Vec::new();
        for (y, p) in frontier {
            let at = if p.is_empty() { y } else { quiver.arrows[p[p.len() - 1]].target };
            for &a in &out_arrows[at] {
                let mut q = p.clone();
                q.push(a);
                next.push((y, q));
            }
        }
        frontier = next;
    }
    let top = layers.len();
    let mut basis = Vec::new();
    let mut basis_path: Vec<Vec<usize>> = Vec::new();
    let mut position: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let mut identities = vec![0; n];
    for y in 0..n {
        for z in 0..n {
            for len in 0..top {
                let sp = spaces.get_mut(&(y, z, len)).expect("layer computed");
                sp.basis_cols.reverse();
                for (pos, &c) in sp.basis_cols.iter().enumerate() {
                    sp.status[c] = Ok(pos);
                    let path = sp.paths[c].clone();
                    if path.is_empty() {
                        identities[y] = basis.len();
                    }
                    position.insert((y, z, len, pos), basis.len());
                    basis.push(BasisMorphism {
                        source: y,
                        target: z,
                        degree: degree_of(quiver, &path),
                        label: quiver.path_label(&path, y),
                    });
                    basis_path.push(path);
                }
            }
        }
    }
    let mut products = HashMap::new();
    for (g, bg) in basis.iter().enumerate() {
        for (f, bf) in basis.iter().enumerate() {
            if bg.target != bf.source {
                continue;
            }
            let (y, z) = (bg.source, bf.target);
            let mut p = basis_path[g].clone();
            p.extend(&basis_path[f]);
            let len = p.len();
            if len >= top {
                continue;
            }
            let sp = &spaces[&(y, z, len)];
            let coords = sp.reduce(sp.index[&p]);
            if !coords.is_empty() {
                products.insert((f, g), coords.into_iter().map(|(pos, c)| (position[&(y, z, len, pos)], c)).collect());
            }
        }
    }
    let generators: Vec<usize> = (0..basis.len()).filter(|&b| basis_path[b].len() == 1).collect();
    let mut ring = CategoryRing::new(name, poset, quiver.objects.clone(), basis, identities, products, generators)?;
    ring.attach_lc_triples()?;
    Ok(ring)
}

type Layer = Vec<Vec<Vec<Vec<usize>>>>;

fn layers_or<'a>(done: &'a [Layer], current: &'a Layer, len: usize) -> &'a Layer {
    if len < done.len() {
        &done[len]
    } else {
        current
    }
}

/// Reduced row echelon form over Z with unit pivots. Returns per column
/// `Err(row)` for pivot columns and the list of free columns, or the column
/// where a non-unit pivot appeared.
type Reduction = (Vec<Result<usize, usize>>, Vec<usize>);

fn reduce_rows(rows: &mut Vec<Vec<i64>>, ncols: usize) -> Result<Reduction, usize> {
    let mut status = vec![Ok(0); ncols];
    let mut free = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let best = (r..rows.len()).filter(|&i| rows[i][col] != 0).min_by_key(|&i| rows[i][col].abs());
            let Some(b) = best else { break };
            rows.swap(r, b);
            let piv = rows[r][col];
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][col] != 0 {
                    let q = rows[i][col].div_euclid(piv);
                    for j in 0..ncols {
                        rows[i][j] -= q * rows[r][j];
                    }
                    if rows[i][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if r < rows.len() && rows[r][col] != 0 {
            if rows[r][col].abs() != 1 {
                return Err(col);
            }
            if rows[r][col] < 0 {
                rows[r].iter_mut().for_each(|x| *x = -*x);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let q = rows[i][col];
                    for j in 0..ncols {
                        rows[i][j] -= q * rows[r][j];
                    }
                }
            }
            status[col] = Err(r);
            r += 1;
        } else {
            free.push(col);
        }
    }
    rows.truncate(r);
    Ok((status, free))
}
