use super::{gcd, Element, Group, Repr};

/// Exhaustive automorphism enumeration is refused above this group order.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 128;

/// A group automorphism materialized as a permutation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    table: Vec<u32>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism { table: (0..order as u32).collect() }
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        Element(self.table[a.index()])
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Checks the table is a bijection fixing 0 and preserving addition on all pairs.
    pub fn is_valid_for(&self, g: &Group) -> bool {
        let n = g.order();
        if self.table.len() != n || self.table[0] != 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &t in &self.table {
            if t as usize >= n || std::mem::replace(&mut seen[t as usize], true) {
                return false;
            }
        }
        g.elements().all(|a| g.elements().all(|b| self.apply(g.add(a, b)) == g.add(self.apply(a), self.apply(b))))
    }
}

enum State {
    /// Remaining units `u` for `x -> u x` in `Z_n`.
    Cyclic { next: u64 },
    /// Odometer over the images of the standard basis `1, x, ..., x^{k-1}`.
    Field { images: Vec<u32>, started: bool, done: bool },
}

/// Iterator over all automorphisms of a group, each yielded exactly once.
pub struct Automorphisms<'g> {
    group: &'g Group,
    state: State,
}

impl<'g> Automorphisms<'g> {
    pub(super) fn new(group: &'g Group) -> Self {
        let state = match &group.repr {
            Repr::Cyclic => State::Cyclic { next: if group.order == 1 { 0 } else { 1 } },
            Repr::Field(f) => State::Field { images: vec![1; f.k as usize], started: false, done: false },
        };
        Automorphisms { group, state }
    }
}

impl Iterator for Automorphisms<'_> {
    type Item = Automorphism;

    fn next(&mut self) -> Option<Automorphism> {
        let g = self.group;
        let n = g.order;
        match &mut self.state {
            State::Cyclic { next } => {
                while (*next as usize) < n.max(1) {
                    let u = *next;
                    *next += 1;
                    if gcd(u, n as u64) == 1 {
                        let table = (0..n as u64).map(|x| (u * x % n as u64) as u32).collect();
                        return Some(Automorphism { table });
                    }
                }
                None
            }
            State::Field { images, started, done } => {
                let Repr::Field(f) = &g.repr else { unreachable!() };
                loop {
                    if *done {
                        return None;
                    }
                    if *started && !advance(images, n as u32) {
                        *done = true;
                        return None;
                    }
                    *started = true;
                    if independent(images, f.p, f.k) {
                        return Some(linear_map(g, images));
                    }
                }
            }
        }
    }
}

/// Advances the odometer over `1..n` per digit; false once exhausted.
fn advance(images: &mut [u32], n: u32) -> bool {
    for slot in images.iter_mut() {
        if *slot + 1 < n {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

/// Rank test over `Z_p` for the coefficient vectors of `images`.
fn independent(images: &[u32], p: u32, k: u32) -> bool {
    let k = k as usize;
    let mut rows: Vec<Vec<u32>> = images
        .iter()
        .map(|&e| {
            let mut v = Vec::with_capacity(k);
            let mut e = e;
            for _ in 0..k {
                v.push(e % p);
                e /= p;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..k {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut().take(k) {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row).take(k) {
                    *x = (*x + p * p - factor * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank == rows.len()
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue modulo a prime")
}

/// The additive map sending basis vector `x^i` to `images[i]`.
fn linear_map(g: &Group, images: &[u32]) -> Automorphism {
    let n = g.order();
    let mut table = vec![0u32; n];
    for a in g.elements() {
        let mut acc = Element::ZERO;
        for (digit, &img) in g.digits(a).iter().zip(images) {
            acc = g.add(acc, g.times(*digit as u64, Element(img)));
        }
        table[a.index()] = acc.0;
    }
    Automorphism { table }
}
