#!/usr/bin/env python3
"""
Levi subgroups, parabolics and galleries for the diagonal torus of GL(n)

Conventions:
- indices are 1-based; a block is a sorted tuple of indices
- a Levi M ⊃ A is a partition of {1..n} into blocks
- a parabolic P ∈ P(M) is a linear order on those blocks; the root e_i - e_j
  lies in N exactly when block(i) comes before block(j), i.e. N sits in the
  (i, j) entries of a matrix
- a Borel is the all-singletons case, written by its permutation
- Λ_M ≅ Z^blocks through block sums of cocharacters
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import LeviMismatch, NotAdjacent, ProportionalityViolation, RootNotInNNbar, SchemaError

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
Root = Tuple[int, int]


@dataclass(frozen=True)
class LeviDatum:
    """Partition of {1..n} into blocks, stored sorted by smallest element"""

    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        seen = [i for b in blocks for i in b]
        if any(len(b) == 0 for b in blocks) or sorted(seen) != list(range(1, self.n + 1)):
            raise SchemaError(f"Blocks {self.blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def torus(cls, n: int) -> "LeviDatum":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def whole(cls, n: int) -> "LeviDatum":
        return cls(n, (tuple(range(1, n + 1)),))

    @property
    def rank(self) -> int:
        """Number of blocks r, so Λ_M ≅ Z^r"""
        return len(self.blocks)

    def block_of(self, i: int) -> Block:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def index_of(self, block: Block) -> int:
        return self.blocks.index(tuple(block))

    def refines(self, other: "LeviDatum") -> bool:
        """Every block of self lies inside a block of other (M ⊂ L)"""
        return self.n == other.n and all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def is_torus(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


@dataclass(frozen=True)
class ParabolicDatum:
    """Parabolic P ∈ P(M): the blocks of M listed in P's order"""

    blocks: Tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        # validates the partition
        LeviDatum(self.n, self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def levi(self) -> LeviDatum:
        return LeviDatum(self.n, self.blocks)

    def position(self, i: int) -> int:
        """Position of the block containing index i in P's order"""
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise KeyError(i)

    def in_N(self, i: int, j: int) -> bool:
        return self.position(i) < self.position(j)

    def is_borel(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    @property
    def perm(self) -> Tuple[int, ...]:
        """Permutation of a Borel"""
        if not self.is_borel():
            raise ValueError(f"{self} is not a Borel subgroup")
        return tuple(b[0] for b in self.blocks)

    def to_json(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(i) for i in b) + "]" for b in self.blocks) + "]"


BorelDatum = ParabolicDatum


def borel(perm: Sequence[int]) -> ParabolicDatum:
    """Borel whose order on {1..n} is perm"""
    return ParabolicDatum(tuple((i,) for i in perm))


@dataclass(frozen=True)
class CoweightM:
    """Element of Λ_M ≅ Z^blocks, components aligned with levi.blocks"""

    levi: LeviDatum
    components: Tuple[int, ...]

    @classmethod
    def zero(cls, levi: LeviDatum) -> "CoweightM":
        return cls(levi, (0,) * levi.rank)

    @classmethod
    def from_map(cls, levi: LeviDatum, values: Dict[Block, int]) -> "CoweightM":
        return cls(levi, tuple(values.get(b, 0) for b in levi.blocks))

    def as_map(self) -> Dict[Block, int]:
        return dict(zip(self.levi.blocks, self.components))

    def _check(self, other: "CoweightM") -> None:
        if self.levi != other.levi:
            raise LeviMismatch(f"Coweights over {self.levi.blocks} and {other.levi.blocks}")

    def __add__(self, other: "CoweightM") -> "CoweightM":
        self._check(other)
        return CoweightM(self.levi, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "CoweightM") -> "CoweightM":
        self._check(other)
        return CoweightM(self.levi, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "CoweightM":
        return CoweightM(self.levi, tuple(-a for a in self.components))

    def __rmul__(self, k: int) -> "CoweightM":
        return CoweightM(self.levi, tuple(k * a for a in self.components))

    def total(self) -> int:
        """Image in Λ_G = Z"""
        return sum(self.components)

    def multiple_of(self, base: "CoweightM") -> Optional[int]:
        """The integer k with self = k·base, or None"""
        self._check(base)
        k = None
        for a, b in zip(self.components, base.components):
            if b == 0:
                if a != 0:
                    return None
                continue
            if a % b:
                return None
            if k is None:
                k = a // b
            elif k != a // b:
                return None
        return 0 if k is None else k

    def to_json(self) -> List[int]:
        return list(self.components)


# === ADJACENCY AND β ===

def _check_same_levi(P: ParabolicDatum, P2: ParabolicDatum) -> None:
    if P.levi != P2.levi:
        raise LeviMismatch(f"{P} and {P2} have different Levi components")


def adjacent(P: ParabolicDatum, P2: ParabolicDatum) -> Optional[Tuple[Block, Block]]:
    """
    Swapped block pair (b, b') when P2 is P with two consecutive blocks transposed

    Returns:
        (b, b') with b before b' in P, or None when not adjacent
    """
    _check_same_levi(P, P2)
    diff = [k for k in range(len(P.blocks)) if P.blocks[k] != P2.blocks[k]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    k = diff[0]
    if P.blocks[k] == P2.blocks[k + 1] and P.blocks[k + 1] == P2.blocks[k]:
        return P.blocks[k], P.blocks[k + 1]
    return None


def swapped_pair(P: ParabolicDatum, P2: ParabolicDatum) -> Tuple[Block, Block]:
    pair = adjacent(P, P2)
    if pair is None:
        raise NotAdjacent(f"{P} and {P2} are not adjacent")
    return pair


def beta(P: ParabolicDatum, P2: ParabolicDatum) -> CoweightM:
    """β_{P,P'} = e_b - e_b' in Λ_M"""
    b, b2 = swapped_pair(P, P2)
    return CoweightM.from_map(P.levi, {b: 1, b2: -1})


def coroot_image(alpha: Root, levi: LeviDatum) -> CoweightM:
    """Image of α^∨ = e_i - e_j in Λ_M"""
    i, j = alpha
    values: Dict[Block, int] = {}
    values[levi.block_of(i)] = values.get(levi.block_of(i), 0) + 1
    values[levi.block_of(j)] = values.get(levi.block_of(j), 0) - 1
    return CoweightM.from_map(levi, values)


def roots_between(P: ParabolicDatum, P2: ParabolicDatum) -> Tuple[Root, ...]:
    """Roots of A in n ∩ n̄' as (i, j) pairs, i ∈ b and j ∈ b'"""
    b, b2 = swapped_pair(P, P2)
    return tuple((i, j) for i in b for j in b2)


def m_alpha(alpha: Root, P: ParabolicDatum, P2: ParabolicDatum) -> int:
    """The positive integer m with image(α^∨) = m·β_{P,P'}; always 1 for GL(n)"""
    if tuple(alpha) not in roots_between(P, P2):
        raise RootNotInNNbar(f"Root {alpha} is not in N ∩ N̄' for {P}, {P2}")
    m = coroot_image(tuple(alpha), P.levi).multiple_of(beta(P, P2))
    if m != 1:
        logger.error(f"Coroot image of {alpha} is {m}·β for {P}, {P2}")
        raise ProportionalityViolation(f"GL(n) coroot image of {alpha} is not β: m = {m}")
    return m


# === ENUMERATION ===

def all_parabolics(levi: LeviDatum) -> List[ParabolicDatum]:
    """All r! elements of P(M), lexicographic in the block order of levi"""
    return [ParabolicDatum(order) for order in itertools.permutations(levi.blocks)]


def adjacent_pairs(levi: LeviDatum) -> List[Tuple[ParabolicDatum, ParabolicDatum]]:
    """All r!·(r-1) ordered adjacent pairs"""
    pairs = []
    for P in all_parabolics(levi):
        for k in range(len(P.blocks) - 1):
            order = list(P.blocks)
            order[k], order[k + 1] = order[k + 1], order[k]
            pairs.append((P, ParabolicDatum(tuple(order))))
    return pairs


def opposite(P: ParabolicDatum) -> ParabolicDatum:
    return ParabolicDatum(tuple(reversed(P.blocks)))


# === NESTED PARABOLICS ===

def coarsen(P: ParabolicDatum, sizes: Sequence[int]) -> ParabolicDatum:
    """
    Parabolic Q ⊃ P whose blocks merge consecutive blocks of P

    Args:
        P: parabolic with r blocks
        sizes: how many consecutive P-blocks form each Q-block (sums to r)
    """
    if sum(sizes) != len(P.blocks) or any(s < 1 for s in sizes):
        raise SchemaError(f"Group sizes {list(sizes)} do not cover {len(P.blocks)} blocks")
    merged, k = [], 0
    for s in sizes:
        merged.append(tuple(sorted(i for b in P.blocks[k:k + s] for i in b)))
        k += s
    return ParabolicDatum(tuple(merged))


def rank_one_parabolic(P: ParabolicDatum, P2: ParabolicDatum) -> ParabolicDatum:
    """The Q ⊃ P, P' whose Levi has semisimple rank one more than M"""
    b, b2 = swapped_pair(P, P2)
    k = P.blocks.index(b)
    sizes = [1] * len(P.blocks)
    sizes[k:k + 2] = [2]
    return coarsen(P, sizes)


def restrict(P: ParabolicDatum, l_block: Block) -> ParabolicDatum:
    """
    P_L = P ∩ L inside one block of L, relabelled to local indices 1..|l_block|
    """
    local = {i: k + 1 for k, i in enumerate(sorted(l_block))}
    inner = [b for b in P.blocks if set(b) <= set(l_block)]
    if sorted(i for b in inner for i in b) != sorted(l_block):
        raise LeviMismatch(f"{P} does not refine the block {l_block}")
    return ParabolicDatum(tuple(tuple(local[i] for i in b) for b in inner))


def globalize(block: Block, l_block: Block) -> Block:
    """Map a block of local indices back into the indices of l_block"""
    ordered = sorted(l_block)
    return tuple(sorted(ordered[i - 1] for i in block))


def project_coweight(value: CoweightM, target: LeviDatum) -> CoweightM:
    """Λ_M -> Λ_L for M ⊂ L, summing components over each L-block"""
    if not value.levi.refines(target):
        raise LeviMismatch(f"{value.levi.blocks} does not refine {target.blocks}")
    sums: Dict[Block, int] = {}
    for b, c in value.as_map().items():
        lb = target.block_of(b[0])
        sums[lb] = sums.get(lb, 0) + c
    return CoweightM.from_map(target, sums)


def borel_lift(P: ParabolicDatum, inner_order: Optional[Sequence[int]] = None) -> ParabolicDatum:
    """
    Borel refining P's block order, ordering each block by inner_order

    Args:
        P: parabolic
        inner_order: a permutation of 1..n; its restriction to each block
            is the Borel B_M of M (defaults to increasing order)
    """
    rank = {i: k for k, i in enumerate(inner_order or range(1, P.n + 1))}
    return borel([i for b in P.blocks for i in sorted(b, key=lambda x: rank[x])])


# === GALLERIES ===

def inversions(B: ParabolicDatum, B2: ParabolicDatum) -> List[Root]:
    """Roots positive for B and negative for B2"""
    pos2 = {i: k for k, i in enumerate(B2.perm)}
    perm = B.perm
    return [(perm[a], perm[b]) for a in range(len(perm)) for b in range(a + 1, len(perm))
            if pos2[perm[a]] > pos2[perm[b]]]


def minimal_gallery(B: ParabolicDatum, B2: ParabolicDatum,
                    rng: Optional[random.Random] = None) -> List[ParabolicDatum]:
    """
    Minimal gallery B = B_0, ..., B_l = B2 of pairwise adjacent Borels

    Without rng the first out-of-order adjacent pair is swapped each step
    (bubble sort); with rng a random out-of-order pair is chosen, which still
    yields a reduced word.
    """
    if B.n != B2.n:
        raise LeviMismatch(f"Borels of GL({B.n}) and GL({B2.n})")
    target = {i: k for k, i in enumerate(B2.perm)}
    current = list(B.perm)
    gallery = [B]
    while True:
        out_of_order = [k for k in range(len(current) - 1)
                        if target[current[k]] > target[current[k + 1]]]
        if not out_of_order:
            return gallery
        k = out_of_order[0] if rng is None else rng.choice(out_of_order)
        current[k], current[k + 1] = current[k + 1], current[k]
        gallery.append(borel(current))


def gallery_roots(gallery: Sequence[ParabolicDatum]) -> List[Root]:
    """Crossing root α_i, positive for B_{i-1} and negative for B_i, per step"""
    roots = []
    for prev, nxt in zip(gallery, gallery[1:]):
        b, b2 = swapped_pair(prev, nxt)
        roots.append((b[0], b2[0]))
    return roots


def parse_parabolic(data: Iterable[Iterable[int]]) -> ParabolicDatum:
    try:
        return ParabolicDatum(tuple(tuple(int(i) for i in b) for b in data))
    except (TypeError, ValueError) as e:
        raise SchemaError(f"Malformed parabolic {data!r}: {e}") from e
