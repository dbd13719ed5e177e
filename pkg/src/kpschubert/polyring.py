"""
Sparse polynomials in x_1, x_2, ... with integer coefficients, divided
differences, Schubert / Schur / flagged Schur polynomials and expansion in the
Schubert basis.
"""

from __future__ import annotations

import itertools
import json
import os
import threading
from itertools import zip_longest
from math import prod
from typing import Iterable, Mapping

from .permkit import (
    Permutation, all_perms, code, from_code, lex_leq, reduced_word, w0,
)

__all__ = [
    "SparsePoly", "Expansion", "x", "monomial",
    "divided_difference", "apply_dd", "schubert", "schubert_by_definition",
    "schubert_table", "load_schubert_cache", "dump_schubert_cache",
    "elementary", "complete", "schur", "flagged_schur", "determinant",
    "expand_schubert", "expand_schubert_dd", "structure_constants",
    "substitute", "shift_variables",
    "cauchy_type_check", "dual_basis_check", "schubert_pairing",
    "classical_cauchy_check", "box_basis_check",
]

Exp = tuple[int, ...]

CACHE_ENV = "KPSCHUBERT_SCHUBERT_CACHE"


def _trim(exp: Iterable[int]) -> Exp:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(p + q for p, q in zip_longest(a, b, fillvalue=0))


class SparsePoly:
    """Exponent vector -> integer coefficient.  Immutable; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Exp, int] = {}
        for exp, c in (terms or {}).items():
            exp = _trim(exp)
            if any(a < 0 for a in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = int(c)
            if c:
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = c
                else:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, int]) -> SparsePoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> SparsePoly:
        return cls._raw({(): int(c)} if c else {})

    # -- container protocol --
    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(_trim(exp), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic --
    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SparsePoly()
            return SparsePoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[Exp, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure --
    @property
    def nvars(self) -> int:
        """Largest variable index present."""
        return max((len(e) for e in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> SparsePoly:
        return SparsePoly._raw({e: c for e, c in self._terms.items() if sum(e) == d})

    def swap(self, i: int) -> SparsePoly:
        """Exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e) + [0] * max(0, i + 1 - len(e))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[_trim(e)] = c
        return SparsePoly._raw(out)

    def evaluate(self, values: Iterable[int]) -> int:
        values = list(values)
        total = 0
        for e, c in self._terms.items():
            if len(e) > len(values):
                raise ValueError("not enough values to evaluate")
            total += c * prod(v ** a for v, a in zip(values, e))
        return total

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        n = self.nvars
        return sorted(self._terms.items(), key=lambda t: t[0] + (0,) * (n - len(t[0])), reverse=True)

    # -- formats --
    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        return self._render(lambda i, a: f"x{i}" + (f"^{a}" if a > 1 else ""), "*")

    def latex(self) -> str:
        return self._render(lambda i, a: f"x_{{{i}}}" + (f"^{{{a}}}" if a > 1 else ""), " ")

    def _render(self, var, sep) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = sep.join(var(i, a) for i, a in enumerate(e, start=1) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{sep}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> SparsePoly:
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[Exp, int] = {}
        for t in data["terms"]:
            exp = tuple(int(a) for a in t["exp"])
            if any(a < 0 for a in exp):
                raise ValueError(f"negative exponent in {exp}")
            exp = _trim(exp)
            terms[exp] = terms.get(exp, 0) + int(t["coeff"])
        return cls(terms)


def x(i: int) -> SparsePoly:
    """The variable x_i."""
    return SparsePoly._raw({(0,) * (i - 1) + (1,): 1})


def monomial(exp: Iterable[int], coeff: int = 1) -> SparsePoly:
    return SparsePoly({tuple(exp): coeff})


def substitute(p: SparsePoly, assignment: Mapping[int, SparsePoly]) -> SparsePoly:
    """Replace x_i by assignment[i] for every variable occurring in p."""
    powers: dict[tuple[int, int], SparsePoly] = {}
    out = SparsePoly()
    for e, c in p.items():
        term = SparsePoly.const(c)
        for i, a in enumerate(e, start=1):
            if not a:
                continue
            if i not in assignment:
                raise KeyError(f"no assignment for x{i}")
            if (i, a) not in powers:
                powers[i, a] = assignment[i] ** a
            term = term * powers[i, a]
        out = out + term
    return out


def shift_variables(p: SparsePoly, offset: int) -> SparsePoly:
    """x_i -> x_{i+offset}."""
    return SparsePoly._raw({(0,) * offset + e if e else e: c for e, c in p.items()})


# -- divided differences -----------------------------------------------------

def divided_difference(i: int, p: SparsePoly) -> SparsePoly:
    """(p - s_i p) / (x_i - x_{i+1}), computed monomial by monomial."""
    if i < 1:
        raise ValueError("i must be positive")
    out: dict[Exp, int] = {}
    for e, c in p.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        lo, sign = (b, 1) if a > b else (a, -1)
        d = abs(a - b)
        for t in range(d):
            f = list(e)
            f[i - 1] = lo + t
            f[i] = lo + d - 1 - t
            f = _trim(f)
            out[f] = out.get(f, 0) + sign * c
    return SparsePoly._raw({e: c for e, c in out.items() if c})


def apply_dd(w: Permutation, p: SparsePoly, word: list[int] | None = None) -> SparsePoly:
    """d_w(p) along a reduced word of w (any reduced word gives the same result)."""
    if word is None:
        word = reduced_word(w)
    for i in reversed(word):
        p = divided_difference(i, p)
    return p


def _staircase(n: int) -> SparsePoly:
    return monomial(range(n - 1, -1, -1))


def schubert_by_definition(w: Permutation, n: int | None = None) -> SparsePoly:
    """d_{w^-1 w0}(x_1^{n-1} ... x_{n-1}) inside S_n."""
    if n is None:
        n = w.size
    return apply_dd(w.inverse() * w0(n), _staircase(n))


_cache: dict[Permutation, SparsePoly] = {}
_cache_lock = threading.Lock()
_cache_loaded = False


def _is_dominant(c) -> bool:
    return all(a >= b for a, b in zip(c, c[1:]))


def schubert(w: Permutation) -> SparsePoly:
    """The Schubert polynomial of w (memoized).

    Walks up from w through ascents until it reaches a dominant permutation,
    whose Schubert polynomial is the monomial x^{c(u)}, then applies the
    divided differences back down.  Every step stays inside S_n for the
    minimal n containing w.
    """
    _maybe_load_cache()
    hit = _cache.get(w)
    if hit is not None:
        return hit
    chain = []
    u = w
    while True:
        hit = _cache.get(u)
        if hit is not None:
            p = hit
            break
        c = code(u)
        if _is_dominant(c):
            p = monomial(c)
            break
        i = next(i for i in range(1, len(c)) if c[i - 1] < c[i])
        chain.append((u, i))
        u = u.swap(i, i + 1)
    with _cache_lock:
        _cache.setdefault(u, p)
    for u, i in reversed(chain):
        p = divided_difference(i, p)
        with _cache_lock:
            _cache.setdefault(u, p)
    return p


def schubert_table(n: int) -> dict[Permutation, SparsePoly]:
    return {w: schubert(w) for w in all_perms(n)}


def dump_schubert_cache(path: str, n: int) -> None:
    table = schubert_table(n)
    data = [{"perm": w.to_json(), "poly": p.to_json()} for w, p in table.items()]
    with open(path, "w") as fh:
        json.dump(data, fh)


def load_schubert_cache(path: str) -> int:
    with open(path) as fh:
        data = json.load(fh)
    with _cache_lock:
        for entry in data:
            _cache.setdefault(Permutation(entry["perm"]), SparsePoly.from_json(entry["poly"]))
    return len(data)


def _maybe_load_cache() -> None:
    global _cache_loaded
    if _cache_loaded:
        return
    _cache_loaded = True
    path = os.environ.get(CACHE_ENV)
    if path and os.path.exists(path):
        load_schubert_cache(path)


# -- symmetric functions -----------------------------------------------------

def elementary(k: int, m: int) -> SparsePoly:
    if k < 0 or k > m:
        return SparsePoly()
    terms = {}
    for subset in itertools.combinations(range(m), k):
        e = [0] * m
        for i in subset:
            e[i] = 1
        terms[_trim(e)] = 1
    return SparsePoly._raw(terms)


def complete(k: int, m: int) -> SparsePoly:
    """h_k(x_1..x_m); zero for k < 0."""
    if k < 0:
        return SparsePoly()
    if k == 0:
        return SparsePoly.const(1)
    if m <= 0:
        return SparsePoly()
    terms = {}
    for multiset in itertools.combinations_with_replacement(range(m), k):
        e = [0] * m
        for i in multiset:
            e[i] += 1
        terms[_trim(e)] = 1
    return SparsePoly._raw(terms)


def _perm_sign(perm) -> int:
    sign = 1
    for a, b in itertools.combinations(perm, 2):
        if a > b:
            sign = -sign
    return sign


def determinant(matrix: list[list[SparsePoly]]) -> SparsePoly:
    """Leibniz expansion; fine for the small Jacobi-Trudi matrices used here."""
    k = len(matrix)
    total = SparsePoly()
    for perm in itertools.permutations(range(k)):
        entries = [matrix[p][perm[p]] for p in range(k)]
        if any(not e for e in entries):
            continue
        term = SparsePoly.const(_perm_sign(perm))
        for e in entries:
            term = term * e
        total = total + term
    return total


def _check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(a) for a in lam)
    if any(a < 0 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


def schur(lam: Iterable[int], m: int) -> SparsePoly:
    """s_lam(x_1..x_m) = det(h_{lam_p - p + q})."""
    lam = _check_partition(lam)
    k = len(lam)
    return determinant([[complete(lam[p] - p + q, m) for q in range(k)] for p in range(k)])


def flagged_schur(lam: Iterable[int], flags: Iterable[int]) -> SparsePoly:
    """det(h_{lam_p - p + q}(x_1..x_{b_p}))."""
    lam = _check_partition(lam)
    flags = tuple(int(b) for b in flags)
    if len(flags) != len(lam):
        raise ValueError("need one flag per part")
    if any(b <= 0 for b in flags) or any(a > b for a, b in zip(flags, flags[1:])):
        raise ValueError(f"flags must be positive and weakly increasing: {flags}")
    k = len(lam)
    return determinant([[complete(lam[p] - p + q, flags[p]) for q in range(k)] for p in range(k)])


# -- Schubert basis ----------------------------------------------------------

class Expansion(dict):
    """Permutation -> integer coefficient of a Schubert expansion."""

    def to_poly(self) -> SparsePoly:
        total = SparsePoly()
        for w, c in self.items():
            total = total + schubert(w) * c
        return total

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.values())

    def negative_terms(self) -> list[tuple[Permutation, int]]:
        return [(w, c) for w, c in sorted(self.items()) if c < 0]

    def to_json(self) -> list[dict]:
        return [{"perm": w.to_json(), "coeff": str(c)} for w, c in sorted(self.items())]

    @classmethod
    def from_json(cls, data) -> Expansion:
        return cls({Permutation(t["perm"]): int(t["coeff"]) for t in data})


def _inv_key(w: Permutation, n: int) -> tuple[int, ...]:
    return w.inverse().padded(n)


def expand_schubert(p: SparsePoly) -> Expansion:
    """Peel off S_v for the monomial x^{c(v)} of p with lex-smallest v^-1.

    S_v = x^{c(v)} + (terms x^{c(u)} with u^-1 >_lex v^-1), so that monomial
    can only come from S_v itself.
    """
    result = Expansion()
    remaining = p
    while remaining:
        perms = [from_code(e) for e, _ in remaining.items()]
        n = max(u.size for u in perms)
        v = min(perms, key=lambda u: _inv_key(u, n))
        c = remaining.coefficient(code(v))
        result[v] = c
        remaining = remaining - schubert(v) * c
    return result


def expand_schubert_dd(p: SparsePoly, candidates: Iterable[Permutation] | None = None) -> Expansion:
    """a_w = constant term of d_w(p).

    d_i sends S_u to S_{u s_i} when u(i) > u(i+1) and kills it otherwise, so
    walking a reduced word of w lands on S_id exactly for u = w.
    """
    if candidates is None:
        n = max((k + a for e, _ in p.items() for k, a in enumerate(e, start=1)), default=1)
        degrees = {sum(e) for e, _ in p.items()}
        candidates = (w for w in all_perms(n) if w.length() in degrees)
    result = Expansion()
    for w in candidates:
        c = apply_dd(w, p).coefficient(())
        if c:
            result[w] = c
    return result


def structure_constants(u: Permutation, v: Permutation) -> Expansion:
    exp = expand_schubert(schubert(u) * schubert(v))
    if not exp.is_nonnegative():
        raise AssertionError(f"negative structure constant in S_{u} * S_{v}: {exp.negative_terms()}")
    return exp


# -- identities --------------------------------------------------------------

def cauchy_type_check(n: int) -> bool:
    """prod_{i+j<=n} (x_i + y_j) == sum_{w in S_n} S_w(x) S_{w w0}(y), with y_j = x_{n+j}."""
    y = lambda j: x(n + j)
    lhs = SparsePoly.const(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            lhs = lhs * (x(i) + y(j))
    top = w0(n)
    rhs = SparsePoly()
    for w in all_perms(n):
        rhs = rhs + schubert(w) * shift_variables(schubert(w * top), n)
    return lhs == rhs


def schubert_pairing(p: SparsePoly, q: SparsePoly, n: int) -> int:
    """<p, q> with <S_u, S_{u' w0}> = delta_{u u'} on the span of S_w, w in S_n."""
    a, b = expand_schubert(p), expand_schubert(q)
    for w in itertools.chain(a, b):
        if w.size > n:
            raise ValueError(f"{w} lies outside S_{n}")
    top = w0(n)
    return sum(c * b.get(u * top, 0) for u, c in a.items())


def _box(n: int):
    return itertools.product(*[range(n - i + 1) for i in range(1, n + 1)])


def dual_basis_check(n: int) -> bool:
    """<x^{rho - alpha}, prod_i e_{beta_i}(x_1..x_{n-i})> = delta_{alpha, beta} on the box."""
    rho = [n - i for i in range(1, n + 1)]
    box = list(_box(n))
    for alpha in box:
        xa = monomial([r - a for r, a in zip(rho, alpha)])
        for beta in box:
            eb = SparsePoly.const(1)
            for i in range(1, n):
                eb = eb * elementary(beta[i - 1], n - i)
            if schubert_pairing(xa, eb, n) != (1 if alpha == beta else 0):
                return False
    return True


def partitions(d: int, max_part: int | None = None):
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def conjugate(lam) -> tuple[int, ...]:
    lam = tuple(lam)
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0] if lam else 0))


def _bidegree(p: SparsePoly, m: int, dx: int, dy: int) -> SparsePoly:
    return SparsePoly._raw({e: c for e, c in p.items() if sum(e[:m]) == dx and sum(e[m:]) == dy})


def _truncate_y(p: SparsePoly, m: int, d: int) -> SparsePoly:
    return SparsePoly._raw({e: c for e, c in p.items() if sum(e[m:]) <= d})


def classical_cauchy_check(d: int, m: int) -> bool:
    """Both classical Cauchy identities in bidegrees (k, k), k <= d, with y_j = x_{m+j}."""
    lhs_h = SparsePoly.const(1)
    lhs_e = SparsePoly.const(1)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            xy = x(i) * x(m + j)
            geometric = sum((xy ** t for t in range(d + 1)), SparsePoly())
            lhs_h = _truncate_y(lhs_h * geometric, m, d)
            lhs_e = lhs_e * (xy + 1)
    for k in range(d + 1):
        rhs_h = SparsePoly()
        rhs_e = SparsePoly()
        for lam in partitions(k):
            sx = schur(lam, m)
            rhs_h = rhs_h + sx * shift_variables(schur(lam, m), m)
            rhs_e = rhs_e + sx * shift_variables(schur(conjugate(lam), m), m)
        if _bidegree(lhs_h, m, k, k) != rhs_h or _bidegree(lhs_e, m, k, k) != rhs_e:
            return False
    return True


def box_basis_check(n: int) -> bool:
    """Every S_w, w in S_n, lives on box monomials and the change of basis is unitriangular."""
    perms = sorted(all_perms(n), key=lambda w: _inv_key(w, n))
    index = {code(w): r for r, w in enumerate(perms)}
    if len(index) != len(list(_box(n))):
        return False
    for r, w in enumerate(perms):
        p = schubert(w)
        for e, c in p.items():
            col = index.get(e)
            if col is None:
                return False
            if col < r:
                return False
        if p.coefficient(code(w)) != 1:
            return False
    return True
