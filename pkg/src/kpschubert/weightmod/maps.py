"""
Weight-graded tensor maps between products of symmetric and exterior powers.

A map is described by a list of *rows* and a set of *columns*.  Row r owns a
symmetric (or exterior) power of a space of dimension ``row_dim`` whose degree
is the number of columns it feeds; column c owns an exterior (or symmetric)
power of a space of dimension ``col_dim``.  The map diagonalizes every row
factor into its columns and multiplies each column's pieces in row order.
Basis vector u_i (or f_i) carries torus weight x_i; index i of a row factor
goes to index i of a column factor, or to zero when i exceeds ``col_dim``.

Symmetric-power basis: monomials (sorted tuples with repetition).  The
diagonalization of u^alpha is the sum over all orderings of its factors, so a
distinct arrangement gets the coefficient alpha!.  Exterior-power basis:
strictly increasing tuples; products are sorted with the sign of the sorting
permutation.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..polyring import SparsePoly
from ._rank import rank

__all__ = [
    "Factor", "WeightBasis", "Block", "WeightGradedMap",
    "build_tensor_map", "label_weight", "sort_sign",
]

SYM, EXT = "sym", "ext"

Label = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]


def sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """(sign, sorted) for a sequence of distinct entries; sign 0 on repeats."""
    if len(set(seq)) != len(seq):
        return 0, ()
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


def label_weight(label: Label) -> Weight:
    counts: dict[int, int] = defaultdict(int)
    for factor in label:
        for i in factor:
            counts[i] += 1
    n = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


@dataclass(frozen=True)
class Factor:
    kind: str
    degree: int
    dim: int

    def labels(self) -> list[tuple[int, ...]]:
        idx = range(1, self.dim + 1)
        if self.kind == SYM:
            return list(itertools.combinations_with_replacement(idx, self.degree))
        return list(itertools.combinations(idx, self.degree))


@dataclass(frozen=True)
class WeightBasis:
    """Monomial basis of a tensor product of symmetric/exterior powers."""

    factors: tuple[Factor, ...]

    def labels(self) -> list[Label]:
        return [tuple(p) for p in itertools.product(*(f.labels() for f in self.factors))]

    def by_weight(self) -> dict[Weight, list[Label]]:
        out: dict[Weight, list[Label]] = defaultdict(list)
        for label in self.labels():
            out[label_weight(label)].append(label)
        return dict(out)

    @property
    def dim(self) -> int:
        return math.prod(len(f.labels()) for f in self.factors)


@dataclass
class Block:
    weight: Weight
    rows: list[Label]
    cols: list[Label]
    matrix: np.ndarray

    def rank(self) -> int:
        return rank(self.matrix)


@dataclass
class WeightGradedMap:
    """A torus-equivariant map stored as one integer block per weight.

    Block rows are the codomain labels reached in that weight.
    """

    domain: WeightBasis
    codomain_kind: str
    columns: tuple[int, ...]
    blocks: dict[Weight, Block] = field(default_factory=dict)

    def ranks(self, jobs: int | None = None) -> dict[Weight, int]:
        weights = sorted(self.blocks)
        if jobs and jobs > 1:
            with ThreadPoolExecutor(jobs) as pool:
                values = list(pool.map(lambda wt: self.blocks[wt].rank(), weights))
        else:
            values = [self.blocks[wt].rank() for wt in weights]
        return dict(zip(weights, values))

    def character(self, jobs: int | None = None) -> SparsePoly:
        """Sum of rank(block) * x^weight: the character of the image."""
        return SparsePoly({wt: r for wt, r in self.ranks(jobs).items() if r})

    def rank_dump(self) -> list[dict]:
        return [{"weight": list(wt), "rank": r} for wt, r in self.ranks().items()]

    def image_dim(self) -> int:
        return sum(self.ranks().values())


def _row_pieces(kind: str, label: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Diagonalize one row factor into degree-one pieces: [(arrangement, coeff)]."""
    if kind == SYM:
        mult = math.prod(math.factorial(label.count(i)) for i in set(label))
        return [(arr, mult) for arr in sorted(set(itertools.permutations(label)))]
    out = []
    for arr in itertools.permutations(label):
        sign, _ = sort_sign(arr)
        out.append((arr, sign))
    return out


def build_tensor_map(
    rows: Sequence[tuple[int, Sequence[int]]],
    col_dims: dict[int, int],
    source: str = SYM,
) -> WeightGradedMap:
    """Build the map  (x)_r P^{|cols_r|}(V_r)  ->  (x)_c Q^{#rows into c}(W_c).

    ``source`` is SYM for symmetric -> exterior and EXT for exterior ->
    symmetric.  ``rows`` lists (row_dim, columns fed by the row) in row order.
    """
    target = EXT if source == SYM else SYM
    columns = tuple(sorted(col_dims))
    col_pos = {c: t for t, c in enumerate(columns)}
    for _, cols in rows:
        for c in cols:
            if c not in col_pos:
                raise ValueError(f"row feeds unknown column {c}")
    domain = WeightBasis(tuple(Factor(source, len(cols), dim) for dim, cols in rows))

    blocks: dict[Weight, Block] = {}
    for weight, dom_labels in sorted(domain.by_weight().items()):
        images = []
        for label in dom_labels:
            image: dict[Label, int] = defaultdict(int)
            per_row = [_row_pieces(source, part) for part in label]
            for choice in itertools.product(*per_row):
                coeff = 1
                contents: list[list[int]] = [[] for _ in columns]
                dead = False
                for (arr, c), (_, cols) in zip(choice, rows):
                    coeff *= c
                    for idx, col in zip(arr, cols):
                        if idx > col_dims[col]:
                            dead = True
                            break
                        contents[col_pos[col]].append(idx)
                    if dead:
                        break
                if dead or not coeff:
                    continue
                out_label = []
                for content in contents:
                    if target == EXT:
                        sign, ordered = sort_sign(content)
                        if not sign:
                            break
                        coeff *= sign
                        out_label.append(ordered)
                    else:
                        out_label.append(tuple(sorted(content)))
                else:
                    out = tuple(out_label)
                    if label_weight(out) != weight:
                        raise AssertionError(f"non-equivariant term {label} -> {out}")
                    image[out] += coeff
            images.append({k: v for k, v in image.items() if v})
        row_labels = sorted({k for im in images for k in im})
        row_index = {k: i for i, k in enumerate(row_labels)}
        mat = np.zeros((len(row_labels), len(dom_labels)), dtype=object)
        for j, im in enumerate(images):
            for k, v in im.items():
                mat[row_index[k], j] = v
        blocks[weight] = Block(weight, row_labels, list(dom_labels), mat)
    return WeightGradedMap(domain, target, columns, blocks)
