"""
Permutations of the positive integers with finite support, in one-line
notation, together with the combinatorics Schubert calculus needs: codes,
inversion sets, shapes, vexillarity, Monk terms and transitions.

Positions and values are 1-based throughout.  ``w(i)`` is ``w.word[i-1]`` for
``i <= len(w.word)`` and ``i`` beyond that.

>>> w = Permutation([4, 2, 1, 6, 3, 5, 7, 8])
>>> w.word
(4, 2, 1, 6, 3, 5)
>>> code(w)
(3, 1, 0, 2)
>>> from_code((0, 1, 3, 4)).word
(1, 3, 6, 8, 2, 4, 5, 7)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator

__all__ = [
    "Permutation", "Shape", "Transition", "NoTransitionError",
    "identity", "simple", "transposition", "w0", "all_perms",
    "code", "from_code", "inversion_set", "shape_of",
    "is_vexillary", "is_vexillary_chain", "is_vexillary_pattern",
    "monk_terms", "transitions", "maximal_transition", "transition_conditions_hold",
    "lex_leq", "code_order_geq",
    "length", "inverse", "multiply", "conj_w0", "l_j", "m_ij",
    "reduced_word",
]

Code = tuple[int, ...]


class NoTransitionError(ValueError):
    pass


@total_ordering
class Permutation:
    """A finitary bijection of {1, 2, ...}, stored with trailing fixed points trimmed."""

    __slots__ = ("_word",)

    def __init__(self, word: Iterable[int] = ()):
        word = [int(a) for a in word]
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        n = len(word)
        while n and word[n - 1] == n:
            n -= 1
        self._word = tuple(word[:n])

    @property
    def word(self) -> tuple[int, ...]:
        return self._word

    @property
    def size(self) -> int:
        """Smallest n with w in S_n (at least 1)."""
        return max(len(self._word), 1)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self._word):
            raise ValueError(f"{self} is not in S_{n}")
        return self._word + tuple(range(len(self._word) + 1, n + 1))

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError("positions are 1-based")
        return self._word[i - 1] if i <= len(self._word) else i

    def __mul__(self, other: Permutation) -> Permutation:
        # composition: (self * other)(i) = self(other(i))
        n = max(len(self._word), len(other._word))
        return Permutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self._word)
        for i, a in enumerate(self._word, start=1):
            inv[a - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        return sum(code(self))

    def is_identity(self) -> bool:
        return not self._word

    def swap(self, p: int, q: int) -> Permutation:
        """Right multiplication by the transposition t_{p,q}: exchange positions p and q."""
        n = max(len(self._word), p, q)
        word = list(self.padded(n))
        word[p - 1], word[q - 1] = word[q - 1], word[p - 1]
        return Permutation(word)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._word == other._word

    def __lt__(self, other: Permutation) -> bool:
        return self != other and lex_leq(self, other)

    def __hash__(self):
        return hash(self._word)

    def __repr__(self):
        return f"Permutation({list(self._word)})"

    def __str__(self):
        if not self._word:
            return "1"
        if len(self._word) < 10:
            return "".join(map(str, self._word))
        return ",".join(map(str, self._word))

    def to_json(self) -> list[int]:
        return list(self._word)

    @classmethod
    def from_json(cls, data) -> Permutation:
        return cls(data)


def identity() -> Permutation:
    return Permutation()


def transposition(p: int, q: int) -> Permutation:
    return Permutation().swap(p, q)


def simple(i: int) -> Permutation:
    return transposition(i, i + 1)


def w0(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_perms(n: int) -> Iterator[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


# -- codes and inversion sets ------------------------------------------------

def inversion_set(w: Permutation, k: int) -> tuple[int, ...]:
    """I_k(w) = {l > k : w(k) > w(l)}, sorted."""
    n = len(w.word)
    return tuple(l for l in range(k + 1, n + 1) if w(k) > w(l))


def code(w: Permutation) -> Code:
    n = len(w.word)
    c = [sum(1 for l in range(k + 1, n + 1) if w(k) > w(l)) for k in range(1, n + 1)]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def from_code(c: Iterable[int]) -> Permutation:
    c = [int(a) for a in c]
    if any(a < 0 for a in c):
        raise ValueError(f"code entries must be nonnegative: {c}")
    n = max((k + a for k, a in enumerate(c, start=1)), default=0)
    available = list(range(1, n + 1))
    word = []
    for k in range(n):
        a = c[k] if k < len(c) else 0
        word.append(available.pop(a))
    return Permutation(word)


def length(w: Permutation) -> int:
    return w.length()


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def multiply(u: Permutation, v: Permutation) -> Permutation:
    return u * v


def conj_w0(w: Permutation, n: int) -> Permutation:
    """w0 w w0 inside S_n."""
    if len(w.word) > n:
        raise ValueError(f"{w} is not in S_{n}")
    return Permutation(n + 1 - w(n + 1 - i) for i in range(1, n + 1))


def l_j(w: Permutation, j: int) -> int:
    """#{i < j : w(i) > w(j)}."""
    return sum(1 for i in range(1, j) if w(i) > w(j))


def m_ij(w: Permutation, i: int, j: int) -> int:
    """#{k > j : w(i) < w(k) < w(j)}."""
    n = max(len(w.word), j)
    return sum(1 for k in range(j + 1, n + 1) if w(i) < w(k) < w(j))


def reduced_word(w: Permutation) -> list[int]:
    """Indices a_1..a_k with w = s_{a_1} ... s_{a_k} and k = l(w)."""
    word: list[int] = []
    while not w.is_identity():
        i = next(i for i in range(1, len(w.word)) if w(i) > w(i + 1))
        word.append(i)
        w = w.swap(i, i + 1)
    word.reverse()
    return word


# -- shapes ------------------------------------------------------------------

@dataclass(frozen=True)
class Shape:
    """A finite strictly upper triangular 0/1 matrix, stored as its set of crosses (k, l)."""

    crosses: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        crosses = frozenset((int(k), int(l)) for k, l in self.crosses)
        for k, l in crosses:
            if not 1 <= k < l:
                raise ValueError(f"shape crosses need 1 <= k < l, got {(k, l)}")
        object.__setattr__(self, "crosses", crosses)

    def row(self, k: int) -> tuple[int, ...]:
        return tuple(sorted(l for kk, l in self.crosses if kk == k))

    def column(self, l: int) -> tuple[int, ...]:
        return tuple(sorted(k for k, ll in self.crosses if ll == l))

    @property
    def rows(self) -> dict[int, tuple[int, ...]]:
        """Nonempty rows k -> increasing column indices."""
        return {k: self.row(k) for k in sorted({k for k, _ in self.crosses})}

    @property
    def columns(self) -> dict[int, tuple[int, ...]]:
        """Nonempty columns l -> increasing row indices."""
        return {l: self.column(l) for l in sorted({l for _, l in self.crosses})}

    def row_sum(self, k: int) -> int:
        return len(self.row(k))

    def col_sum(self, l: int) -> int:
        return len(self.column(l))

    @property
    def max_row(self) -> int:
        return max((k for k, _ in self.crosses), default=0)

    @property
    def max_column(self) -> int:
        return max((l for _, l in self.crosses), default=0)

    def to_json(self) -> list[list[int]]:
        return [[k, l] for k, l in sorted(self.crosses)]

    @classmethod
    def from_json(cls, data) -> Shape:
        return cls(frozenset(tuple(p) for p in data))


def shape_of(w: Permutation) -> Shape:
    n = len(w.word)
    return Shape(frozenset((k, l) for k in range(1, n + 1) for l in inversion_set(w, k)))


# -- vexillary ---------------------------------------------------------------

def is_vexillary_chain(w: Permutation) -> bool:
    sets = [set(inversion_set(w, k)) for k in range(1, len(w.word) + 1)]
    sets = sorted((s for s in sets if s), key=len)
    return all(a <= b for a, b in zip(sets, sets[1:]))


def is_vexillary_pattern(w: Permutation) -> bool:
    word = w.word
    for i, j, k, l in itertools.combinations(range(len(word)), 4):
        if word[j] < word[i] < word[l] < word[k]:
            return False
    return True


def is_vexillary(w: Permutation) -> bool:
    chain = is_vexillary_chain(w)
    if chain != is_vexillary_pattern(w):
        raise AssertionError(f"chain and 2143 tests disagree on {w}")
    return chain


# -- orders ------------------------------------------------------------------

def lex_leq(u: Permutation, v: Permutation) -> bool:
    n = max(len(u.word), len(v.word))
    return u.padded(n) <= v.padded(n)


def code_order_geq(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """lam >= mu iff |lam| = |mu| and w^-1 <=_lex v^-1 where c(w)=lam, c(v)=mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return False
    return lex_leq(from_code(lam).inverse(), from_code(mu).inverse())


# -- Monk's rule -------------------------------------------------------------

def _covers(w: Permutation, p: int, q: int) -> bool:
    """l(w t_{p,q}) = l(w) + 1 for p < q."""
    a, b = w(p), w(q)
    return a < b and not any(a < w(r) < b for r in range(p + 1, q))


def monk_terms(w: Permutation, k: int) -> list[Permutation]:
    """The w t_{p,q} with p <= k < q and length l(w)+1, sorted."""
    if k < 1:
        raise ValueError("k must be positive")
    top = max(len(w.word), k) + 1
    terms = [w.swap(p, q)
             for p in range(1, k + 1) for q in range(k + 1, top + 1)
             if _covers(w, p, q)]
    return sorted(terms)


# -- transitions -------------------------------------------------------------

@dataclass(frozen=True)
class Transition:
    """S_w = S_v * x_j + sum_p S_{v_p}, with v = w t_{j,s} and v_p = v t_{k_p,j}."""

    w: Permutation
    j: int
    s: int
    v: Permutation
    branches: tuple[Permutation, ...]
    pivots: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "w": self.w.to_json(), "j": self.j, "s": self.s, "v": self.v.to_json(),
            "branches": [b.to_json() for b in self.branches],
            "pivots": list(self.pivots),
        }


def _transition_at(w: Permutation, j: int, s: int) -> Transition | None:
    """Build the transition for (j, s) if the identity holds there, else None.

    The identity holds exactly when w covers v = w t_{j,s} and s is the only
    position right of j at which v can be raised by one inversion; the
    branches are then the covers of v obtained at positions left of j.
    """
    if not (j < s and w(j) > w(s)):
        return None
    v = w.swap(j, s)
    if not _covers(v, j, s):
        return None
    top = max(len(w.word), s) + 1
    if any(_covers(v, j, r) for r in range(j + 1, top + 1) if r != s):
        return None
    pivots = tuple(k for k in range(1, j) if _covers(v, k, j))
    return Transition(w, j, s, v, tuple(v.swap(k, j) for k in pivots), pivots)


def transitions(w: Permutation) -> list[Transition]:
    n = len(w.word)
    found = []
    for j in range(1, n + 1):
        for s in range(j + 1, n + 1):
            t = _transition_at(w, j, s)
            if t is not None:
                found.append(t)
    return found


def maximal_transition(w: Permutation) -> Transition:
    if w.is_identity():
        raise NoTransitionError("no transition exists for the identity permutation")
    n = len(w.word)
    j, s = max((j, s) for j in range(1, n + 1) for s in range(j + 1, n + 1) if w(j) > w(s))
    t = _transition_at(w, j, s)
    assert t is not None, f"maximal pair {(j, s)} of {w} fails the transition conditions"
    return t


def transition_conditions_hold(t: Transition, literal: bool = False) -> bool:
    """Check conditions 1)-5) for a transition, position by position.

    In condition 3) the entry at position s is read after exchanging
    positions j and s, i.e. as w(j).  With ``literal=True`` it is read as
    w(s), which makes the condition hold vacuously for r > s.
    """
    w, j, s = t.w, t.j, t.s
    n = max(len(w.word), s) + 1
    ws = w(s)
    if not (j < s and ws < w(j)):
        return False
    if any(ws <= w(i) <= w(j) for i in range(j + 1, s)):
        return False

    def after_swap(i):
        if i == s and not literal:
            return w(j)
        return w(i)

    for r in range(j + 1, n + 1):
        if r == s or not ws < w(r):
            continue
        if not any(ws <= after_swap(i) <= w(r) for i in range(j + 1, r)):
            return False

    pivots = [k for k in range(1, j)
              if w(k) < ws and not any(w(k) <= w(i) <= ws for i in range(k + 1, j))]
    if tuple(pivots) != t.pivots:
        return False
    v = w * transposition(j, s)
    if v != t.v:
        return False
    expected = tuple(w * transposition(j, s) * transposition(k, j) for k in pivots)
    return expected == t.branches
