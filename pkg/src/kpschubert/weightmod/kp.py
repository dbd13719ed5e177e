"""
KP modules and their relatives as images of weight-graded maps.

For a shape with crosses (k, l), the KP map sends (x)_k S^{i_k}(E_k) to
(x)_l Lambda^{~i_l}(E_l) with dim E_k = k.  The primed variant sends
(x)_k Lambda^{i_k}(F_{k-1}) to (x)_l S^{~i_l}(F_{l-1}), where F_i is spanned by
f_1..f_{n-i} and each F_k -> F_l is the projection killing f_{n-l+1}, ....
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from ..permkit import Permutation, Shape, from_code, m_ij, shape_of
from ..polyring import SparsePoly, schur as schur_poly
from ._rank import rank
from .maps import EXT, SYM, Label, WeightGradedMap, build_tensor_map, label_weight, sort_sign

__all__ = [
    "build_phi", "build_psi", "build_schur_map",
    "kp_character", "kp_prime_character", "schur_character", "kp_reduces_to_schur_check",
    "generator_vector", "borel_action", "annihilator_check",
    "cyclic_span", "cyclic_span_check", "Vector",
]

Vector = dict  # Label -> int


def build_phi(shape: Shape, n: int | None = None) -> WeightGradedMap:
    if n is None:
        n = shape.max_column
    if shape.max_column > n:
        raise ValueError(f"shape uses E_{shape.max_column} but the flag stops at E_{n}")
    rows = [(k, cols) for k, cols in shape.rows.items()]
    col_dims = {l: l for l in shape.columns}
    return build_tensor_map(rows, col_dims, SYM)


def build_psi(shape: Shape, n: int) -> WeightGradedMap:
    if shape.max_column > n:
        raise ValueError(f"shape needs columns up to {shape.max_column} but rank F = {n}")
    rows = [(n - k + 1, cols) for k, cols in shape.rows.items()]
    col_dims = {l: n - l + 1 for l in shape.columns}
    return build_tensor_map(rows, col_dims, EXT)


def kp_character(w: Permutation, jobs: int | None = None) -> SparsePoly:
    """Character of the KP module of w, from the ranks of the KP map per weight."""
    return build_phi(shape_of(w)).character(jobs)


def kp_prime_character(w: Permutation, n: int, jobs: int | None = None) -> SparsePoly:
    if w.size > n:
        raise ValueError(f"{w} is not in S_{n}")
    return build_psi(shape_of(w), n).character(jobs)


def _partition(lam: Iterable[int]) -> tuple[int, ...]:
    lam = tuple(int(a) for a in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a < 0 for a in lam):
        raise ValueError(f"not a partition: {lam}")
    return tuple(a for a in lam if a)


def build_schur_map(lam: Iterable[int], m: int) -> WeightGradedMap:
    """S^{lam_1}(E) (x) ... -> Lambda^{mu_1}(E) (x) ... with mu the conjugate, dim E = m."""
    lam = _partition(lam)
    if len(lam) > m:
        raise ValueError(f"partition {lam} has more than {m} parts")
    rows = [(m, tuple(range(1, part + 1))) for part in lam]
    col_dims = {q: m for q in range(1, (lam[0] if lam else 0) + 1)}
    return build_tensor_map(rows, col_dims, SYM)


def schur_character(lam: Iterable[int], m: int) -> SparsePoly:
    return build_schur_map(lam, m).character()


def kp_reduces_to_schur_check(lam: Iterable[int], m: int) -> bool:
    lam = _partition(lam)
    k = len(lam)
    if k > m:
        raise ValueError(f"partition {lam} has more than {m} parts")
    w = from_code((0,) * (m - k) + tuple(reversed(lam)))
    return kp_character(w) == schur_character(lam, m) == schur_poly(lam, m)


# -- the Borel action --------------------------------------------------------

def generator_vector(w: Permutation) -> Vector:
    """u_w: in column l, the wedge of u_k over the rows k crossing column l."""
    shape = shape_of(w)
    return {tuple(shape.columns.values()): 1}


def _act_on_label(i: int, j: int, label: Label, kind: str) -> dict[Label, int]:
    out: dict[Label, int] = defaultdict(int)
    for f, factor in enumerate(label):
        for t, a in enumerate(factor):
            if a != j:
                continue
            new = list(factor)
            new[t] = i
            if kind == EXT:
                sign, ordered = sort_sign(new)
                if not sign:
                    continue
            else:
                sign, ordered = 1, tuple(sorted(new))
            out[label[:f] + (ordered,) + label[f + 1:]] += sign
    return out


def borel_action(i: int, j: int, vector: Vector, kind: str = EXT) -> Vector:
    """e_ij (u_j -> u_i) acting as a derivation on a tensor of exterior or symmetric powers."""
    if not i < j:
        raise ValueError(f"e_ij needs i < j, got {(i, j)}")
    out: dict[Label, int] = defaultdict(int)
    for label, c in vector.items():
        for new, d in _act_on_label(i, j, label, kind).items():
            out[new] += c * d
    return {k: v for k, v in out.items() if v}


def annihilator_check(w: Permutation) -> bool:
    """e_ij^{m_ij + 1} kills u_w while e_ij^{m_ij} does not, for all i < j in the support."""
    u = generator_vector(w)
    n = len(w.word)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = m_ij(w, i, j)
            v = u
            for _ in range(m):
                v = borel_action(i, j, v)
            if not v:
                return False
            if borel_action(i, j, v):
                return False
    return True


def _weight_of(vector: Vector):
    weights = {label_weight(k) for k in vector}
    if len(weights) != 1:
        raise AssertionError("vector is not a weight vector")
    return weights.pop()


def _matrix(vectors: list[Vector], labels: list[Label]) -> list[list[int]]:
    return [[v.get(lab, 0) for lab in labels] for v in vectors]


def cyclic_span(w: Permutation) -> dict:
    """The smallest e_ij-stable subspace containing u_w, as weight -> independent vectors."""
    shape = shape_of(w)
    top = max(shape.max_row, 1)
    spans: dict[tuple, list[Vector]] = defaultdict(list)
    start = generator_vector(w)
    spans[_weight_of(start)].append(start)
    queue = [start]
    while queue:
        v = queue.pop()
        for j in range(2, top + 1):
            for i in range(1, j):
                x = borel_action(i, j, v)
                if not x:
                    continue
                wt = _weight_of(x)
                basis = spans[wt]
                labels = sorted({k for b in basis + [x] for k in b})
                if rank(_matrix(basis + [x], labels)) > len(basis):
                    basis.append(x)
                    queue.append(x)
    return dict(spans)


def cyclic_span_check(w: Permutation, max_size: int = 4) -> bool:
    """Span of u_w under the Borel action equals the image of the KP map, weight by weight."""
    if w.size > max_size:
        raise ValueError(
            f"{w} lies outside S_{max_size}; pass max_size explicitly to allow a larger computation")
    phi = build_phi(shape_of(w))
    spans = cyclic_span(w)
    for wt in set(phi.blocks) | set(spans):
        vectors = spans.get(wt, [])
        block = phi.blocks.get(wt)
        if block is None:
            if vectors:
                return False
            continue
        image = [dict(zip(block.rows, col)) for col in block.matrix.T.tolist()]
        r_image = block.rank()
        if len(vectors) != r_image:
            return False
        labels = sorted({k for v in image + vectors for k in v})
        if rank(_matrix(image + vectors, labels)) != r_image:
            return False
    return True
