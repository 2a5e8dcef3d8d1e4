//! Dynkin diagrams of types A, D, E and their diagram automorphisms.
//!
//! Labelings: `A_n` is the chain 1-2-...-n. `D_m` is the chain 1-...-(m-2)
//! with both m-1 and m attached to m-2. `E_6` is the chain 1-2-3-4-5 with 6
//! attached to 3.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => rank == 6,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(CartanType { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("A rank >= 1")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("D rank >= 3")
    }

    pub fn e6() -> Self {
        CartanType { family: Family::E, rank: 6 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut e = Vec::new();
        match self.family {
            Family::A => {
                for i in 1..n {
                    e.push((i, i + 1));
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    e.push((i, i + 1));
                }
                e.push((n - 2, n));
            }
            Family::E => {
                for i in 1..5 {
                    e.push((i, i + 1));
                }
                e.push((3, 6));
            }
        }
        e.sort_unstable();
        e
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let n = self.rank;
        match self.family {
            Family::A => b == a + 1,
            Family::D => (b == a + 1 && b < n) || (a == n - 2 && b == n),
            Family::E => (b == a + 1 && b <= 5) || (a == 3 && b == 6),
        }
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (1..=self.rank).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// Entry `(α_i, α_j)` of the Cartan matrix.
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    /// `|Φ⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => 36,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::D => 2 * n - 2,
            Family::E => 12,
        }
    }

    /// The involution `*` with `w₀(α_i) = -α_{i*}`.
    pub fn star(&self, i: usize) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1 - i,
            Family::D => {
                if n % 2 == 1 && i >= n - 1 {
                    2 * n - 1 - i
                } else {
                    i
                }
            }
            Family::E => match i {
                1 => 5,
                2 => 4,
                4 => 2,
                5 => 1,
                x => x,
            },
        }
    }

    pub fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::LetterOutOfRange { letter: i, rank: self.rank });
        }
        Ok(())
    }
}

/// Which automorphism, and hence which folded type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoldKind {
    Identity,
    /// `A_{2n+1}`, `i ↦ 2n+2-i`, folding to `B_{n+1}`.
    B,
    /// `D_{n+1}`, swapping `n` and `n+1`, folding to `C_n`.
    C,
    /// `E_6`, `1↔5`, `2↔4`, folding to `F_4`.
    F,
    /// `D_4`, `1→3→4→1`, folding to `G_2`.
    G,
    /// The square of [`FoldKind::G`].
    GSquared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    ty: CartanType,
    kind: FoldKind,
    perm: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    orbit_index: Vec<usize>,
}

impl Automorphism {
    pub fn new(ty: CartanType, kind: FoldKind) -> Result<Self> {
        let n = ty.rank();
        let mut perm: Vec<usize> = (0..=n).collect();
        match (kind, ty.family()) {
            (FoldKind::Identity, _) => {}
            (FoldKind::B, Family::A) if n % 2 == 1 && n >= 3 => {
                for (i, p) in perm.iter_mut().enumerate().skip(1) {
                    *p = n + 1 - i;
                }
            }
            (FoldKind::C, Family::D) => {
                perm[n - 1] = n;
                perm[n] = n - 1;
            }
            (FoldKind::F, Family::E) => {
                perm[1] = 5;
                perm[5] = 1;
                perm[2] = 4;
                perm[4] = 2;
            }
            (FoldKind::G, Family::D) if n == 4 => {
                perm[1] = 3;
                perm[3] = 4;
                perm[4] = 1;
            }
            (FoldKind::GSquared, Family::D) if n == 4 => {
                perm[1] = 4;
                perm[4] = 3;
                perm[3] = 1;
            }
            _ => return Err(Error::NoAutomorphism(format!("{kind:?} on {}", ty.name()))),
        }
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut orbit_index = alloc::vec![0; n + 1];
        for i in 1..=n {
            if orbit_index[i] != 0 {
                continue;
            }
            let mut orb = Vec::new();
            let mut j = i;
            loop {
                orb.push(j);
                j = perm[j];
                if j == i {
                    break;
                }
            }
            orb.sort_unstable();
            orbits.push(orb);
            let k = orbits.len();
            for &j in &orbits[k - 1] {
                orbit_index[j] = k;
            }
        }
        Ok(Automorphism { ty, kind, perm, orbits, orbit_index })
    }

    pub fn identity(ty: CartanType) -> Self {
        Self::new(ty, FoldKind::Identity).expect("identity exists")
    }

    /// The order-two fold of `A_{odd}`, `D`, `E_6`.
    pub fn standard(ty: CartanType) -> Result<Self> {
        let kind = match ty.family() {
            Family::A => FoldKind::B,
            Family::D => FoldKind::C,
            Family::E => FoldKind::F,
        };
        Self::new(ty, kind)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn kind(&self) -> FoldKind {
        self.kind
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn apply_word(&self, w: &[usize]) -> Vec<usize> {
        w.iter().map(|&i| self.perm[i]).collect()
    }

    pub fn power(&self, i: usize, k: usize) -> usize {
        let mut j = i;
        for _ in 0..k % self.order() {
            j = self.perm[j];
        }
        j
    }

    pub fn order(&self) -> usize {
        match self.kind {
            FoldKind::Identity => 1,
            FoldKind::B | FoldKind::C | FoldKind::F => 2,
            FoldKind::G | FoldKind::GSquared => 3,
        }
    }

    /// Least denominator of the squared lengths of folded simple roots.
    pub fn d(&self) -> i64 {
        self.order() as i64
    }

    /// Orbits sorted by their minimum, each sorted.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// 1-based position of the orbit of `i` in [`Automorphism::orbits`].
    pub fn folded_index(&self, i: usize) -> usize {
        self.orbit_index[i]
    }

    pub fn folded_rank(&self) -> usize {
        self.orbits.len()
    }

    /// Orbit representative (its minimum) of a folded index.
    pub fn orbit_label(&self, hat: usize) -> usize {
        self.orbits[hat - 1][0]
    }

    /// `d·|α_î|²`, i.e. the orbit size.
    pub fn squared_length(&self, hat: usize) -> i64 {
        self.orbits[hat - 1].len() as i64
    }

    /// Horizontal length of an arrow between residues `i` and `j`, in units of `1/d`.
    pub fn arrow_length(&self, i: usize, j: usize) -> i64 {
        let a = self.squared_length(self.folded_index(i));
        let b = self.squared_length(self.folded_index(j));
        a.min(b)
    }

    pub fn folded_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.orbits[a - 1].iter().any(|&i| self.orbits[b - 1].iter().any(|&j| self.ty.adjacent(i, j)))
    }

    pub fn folded_name(&self) -> String {
        let m = self.folded_rank();
        match self.kind {
            FoldKind::Identity => self.ty.name(),
            FoldKind::B => format!("B{m}"),
            FoldKind::C => format!("C{m}"),
            FoldKind::F => String::from("F4"),
            FoldKind::G | FoldKind::GSquared => String::from("G2"),
        }
    }

    /// Dual Coxeter number of the folded type (of the type itself for the identity).
    pub fn dual_coxeter(&self) -> i64 {
        let m = self.folded_rank() as i64;
        match self.kind {
            FoldKind::Identity => self.ty.coxeter_number() as i64,
            FoldKind::B => 2 * m - 1,
            FoldKind::C => m + 1,
            FoldKind::F => 9,
            FoldKind::G | FoldKind::GSquared => 4,
        }
    }
}
