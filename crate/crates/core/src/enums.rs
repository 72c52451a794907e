//! Enumerations of trees and finite sequences, driven by a pairing.
//!
//! Every max-dominating pairing f induces an enumeration φ_f of the full
//! binary trees: φ_f(0) is the single leaf `o`, and φ_f(f(x,y)+1) is the
//! tree τ(φ_f(x), φ_f(y)). Max-domination (max(x,y) ≤ f(x,y)) is exactly
//! what makes the recursion well-founded. [`tree_unrank`]/[`tree_rank`]
//! compute φ_f and its inverse; [`all_trees_unrank`] composes φ_f with
//! defoliation (deleting all leaves), which enumerates *all* binary trees.
//!
//! The choice of pairing shows in the order: with the square-shell pairing
//! the tree heights come out sorted (every height-h tree precedes every
//! height-(h+1) tree), while the Cantor pairing interleaves heights.
//!
//! Finite sequences of naturals get two enumerations:
//!
//! * ξ_f ([`seq_unrank_xi`]): ξ_f(0) = (), and ξ_f(f(x,y)+1) appends y to
//!   ξ_f(x) when x ≠ 0, or is the one-element sequence (y) when x = 0.
//! * ζ_{f,g} ([`seq_unrank_zeta`]): picks a d-tupling family g and maps
//!   f(x,y)+1 to the (y+1)-tuple that x decodes to under g_{y+1}.
//!
//! Both have exact ranking inverses. Sequences are plain `Vec<Nat>` values
//! ([`NatSeq`]); trees print and parse as s-expressions
//! (`tree := "o" | "(" tree " " tree ")"`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::Error;
use crate::natmath::Nat;
use crate::pairings::PairingKind;
use crate::tuplings::{self, TuplingFunction};

/// A finite sequence of naturals; sequences of different lengths are
/// distinct values, and the empty sequence is a value of its own.
pub type NatSeq = Vec<Nat>;

/// A tree in which every vertex has exactly zero or two children.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FullBinaryTree {
    /// The single leaf, written `o`.
    Leaf,
    /// An inner vertex τ(left, right). Subtrees are reference-counted so
    /// enumerations can share repeated subtrees.
    Node(Arc<FullBinaryTree>, Arc<FullBinaryTree>),
}

impl FullBinaryTree {
    pub fn leaf() -> Arc<Self> {
        Arc::new(FullBinaryTree::Leaf)
    }

    pub fn node(left: Arc<Self>, right: Arc<Self>) -> Arc<Self> {
        Arc::new(FullBinaryTree::Node(left, right))
    }
}

/// A binary tree in which any vertex may lack either child (the shape left
/// behind when a full binary tree is defoliated).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BinaryTree {
    pub left: Option<Box<BinaryTree>>,
    pub right: Option<Box<BinaryTree>>,
}

/// Height of a tree: 0 for the leaf, 1 + max of the children's heights
/// otherwise.
pub fn tree_height(t: &FullBinaryTree) -> Nat {
    match t {
        FullBinaryTree::Leaf => Nat::zero(),
        FullBinaryTree::Node(a, b) => tree_height(a).max(tree_height(b)) + 1u32,
    }
}

/// Delete every leaf of a full binary tree. The leaf itself defoliates to
/// nothing; any larger tree keeps its root. Restricted to non-trivial
/// trees this is a bijection onto all binary trees.
pub fn defoliate(t: &FullBinaryTree) -> Option<BinaryTree> {
    match t {
        FullBinaryTree::Leaf => None,
        FullBinaryTree::Node(a, b) => Some(BinaryTree {
            left: defoliate(a).map(Box::new),
            right: defoliate(b).map(Box::new),
        }),
    }
}

/// The tree enumeration φ_f for one pairing, with an internal memo table so
/// that unranking many indices shares work. Memoization is invisible in
/// results; a fresh instance per call answers identically.
pub struct TreeEnumeration {
    pairing: PairingKind,
    memo: Mutex<HashMap<Nat, Arc<FullBinaryTree>>>,
}

impl fmt::Debug for TreeEnumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TreeEnumeration")
            .field("pairing", &self.pairing)
            .finish_non_exhaustive()
    }
}

impl TreeEnumeration {
    /// Requires a max-dominating pairing; the positive-pair function is
    /// rejected because it is not defined on all of ℕ² (and so cannot drive
    /// the recursion).
    pub fn new(pairing: PairingKind) -> Result<Self, Error> {
        if !pairing.is_max_dominating() {
            return Err(Error::PositiveDomain);
        }
        Ok(TreeEnumeration {
            pairing,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn pairing(&self) -> PairingKind {
        self.pairing
    }

    /// φ_f(n), the n-th full binary tree.
    pub fn unrank(&self, n: &Nat) -> Result<Arc<FullBinaryTree>, Error> {
        if n.is_zero() {
            return Ok(FullBinaryTree::leaf());
        }
        if let Some(t) = self.memo.lock().expect("memo poisoned").get(n) {
            return Ok(t.clone());
        }
        let code = n - 1u32;
        let (x, y) = self.pairing.decode(&code)?;
        // Termination: both recursive indices stay strictly below n.
        if x > code || y > code {
            return Err(Error::NotMaxDominating {
                coordinate: x.max(y),
                code,
            });
        }
        let t = FullBinaryTree::node(self.unrank(&x)?, self.unrank(&y)?);
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(n.clone(), t.clone());
        Ok(t)
    }

    /// The index of a tree: the inverse of [`Self::unrank`], computed in
    /// one pass over the tree.
    pub fn rank(&self, t: &FullBinaryTree) -> Nat {
        match t {
            FullBinaryTree::Leaf => Nat::zero(),
            FullBinaryTree::Node(a, b) => {
                self.pairing
                    .encode(&self.rank(a), &self.rank(b))
                    .expect("max-dominating pairings are total")
                    + 1u32
            }
        }
    }
}

/// φ_f(n) for a one-off call; see [`TreeEnumeration`] for bulk use.
pub fn tree_unrank(n: &Nat, pairing: PairingKind) -> Result<FullBinaryTree, Error> {
    let tree = TreeEnumeration::new(pairing)?.unrank(n)?;
    Ok(tree.as_ref().clone())
}

/// The index of a tree under φ_f.
pub fn tree_rank(t: &FullBinaryTree, pairing: PairingKind) -> Result<Nat, Error> {
    Ok(TreeEnumeration::new(pairing)?.rank(t))
}

/// The n-th binary tree: φ_f(n+1) with all leaves deleted.
pub fn all_trees_unrank(n: &Nat, pairing: PairingKind) -> Result<BinaryTree, Error> {
    let tree = TreeEnumeration::new(pairing)?.unrank(&(n + 1u32))?;
    Ok(defoliate(&tree).expect("indices ≥ 1 never produce the bare leaf"))
}

/// ξ_f(n), the n-th finite sequence: ξ_f(0) = (), and
/// ξ_f(f(x,y)+1) = (y) if x = 0, else ξ_f(x) with y appended.
pub fn seq_unrank_xi(n: &Nat, pairing: PairingKind) -> Result<NatSeq, Error> {
    if !pairing.is_max_dominating() {
        return Err(Error::PositiveDomain);
    }
    let mut reversed = Vec::new();
    let mut index = n.clone();
    while !index.is_zero() {
        let code = index - 1u32;
        let (x, y) = pairing.decode(&code)?;
        if x > code || y > code {
            return Err(Error::NotMaxDominating {
                coordinate: x.max(y),
                code,
            });
        }
        reversed.push(y);
        if x.is_zero() {
            break;
        }
        index = x;
    }
    reversed.reverse();
    Ok(reversed)
}

/// The index of a sequence under ξ_f: rank(()) = 0, rank((y)) = f(0,y)+1,
/// and each further element folds in as rank(v·y) = f(rank(v), y) + 1.
pub fn seq_rank_xi(u: &[Nat], pairing: PairingKind) -> Result<Nat, Error> {
    if !pairing.is_max_dominating() {
        return Err(Error::PositiveDomain);
    }
    let mut rank = Nat::zero();
    for y in u {
        rank = pairing.encode(&rank, y)? + 1u32;
    }
    Ok(rank)
}

/// The tupling family supplying g_d to the ζ enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuplingFamily {
    /// The Rosenberg–Strong family {r_d} (the default choice).
    RosenbergStrong,
    /// Left-folds of the Cantor pairing.
    FoldCantor,
}

impl TuplingFamily {
    pub fn name(self) -> &'static str {
        match self {
            TuplingFamily::RosenbergStrong => "rs",
            TuplingFamily::FoldCantor => "fold-cantor",
        }
    }

    /// The family member of a given dimension.
    pub fn tupling(self, d: usize) -> Result<TuplingFunction, Error> {
        match self {
            TuplingFamily::RosenbergStrong => tuplings::rosenberg_strong(d),
            TuplingFamily::FoldCantor => tuplings::fold_tupling(PairingKind::Cantor, d),
        }
    }
}

/// ζ_{f,g}(n): ζ(0) = (), and ζ(f(x,y)+1) is the (y+1)-tuple g_{y+1}⁻¹(x).
pub fn seq_unrank_zeta(
    n: &Nat,
    pairing: PairingKind,
    family: TuplingFamily,
) -> Result<NatSeq, Error> {
    if n.is_zero() {
        return Ok(Vec::new());
    }
    let (x, y) = pairing.decode(&(n - 1u32))?;
    let len = usize::try_from(&y).map_err(|_| Error::Overflow("sequence length"))?;
    let len = len.checked_add(1).ok_or(Error::Overflow("sequence length"))?;
    family.tupling(len)?.decode(&x)
}

/// The index of a sequence under ζ_{f,g}: rank(()) = 0, and a sequence u of
/// length ℓ ≥ 1 ranks as f(g_ℓ(u), ℓ−1) + 1.
pub fn seq_rank_zeta(
    u: &[Nat],
    pairing: PairingKind,
    family: TuplingFamily,
) -> Result<Nat, Error> {
    if u.is_empty() {
        return Ok(Nat::zero());
    }
    let code = family.tupling(u.len())?.encode(u)?;
    Ok(pairing.encode(&code, &Nat::from(u.len() as u64 - 1))? + 1u32)
}

impl fmt::Display for FullBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FullBinaryTree::Leaf => f.write_str("o"),
            FullBinaryTree::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

impl FromStr for FullBinaryTree {
    type Err = Error;

    /// Parses `tree := "o" | "(" tree " " tree ")"`, tolerating extra
    /// whitespace between tokens.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let tree = parse_tree(bytes, &mut pos)?;
        skip_spaces(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::TreeSyntax(pos));
        }
        Ok(tree)
    }
}

fn skip_spaces(bytes: &[u8], pos: &mut usize) {
    while bytes.get(*pos).is_some_and(|b| b.is_ascii_whitespace()) {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<FullBinaryTree, Error> {
    skip_spaces(bytes, pos);
    match bytes.get(*pos) {
        Some(b'o') => {
            *pos += 1;
            Ok(FullBinaryTree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_tree(bytes, pos)?;
            let right = parse_tree(bytes, pos)?;
            skip_spaces(bytes, pos);
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::TreeSyntax(*pos));
            }
            *pos += 1;
            Ok(FullBinaryTree::Node(Arc::new(left), Arc::new(right)))
        }
        _ => Err(Error::TreeSyntax(*pos)),
    }
}
