"""
Verification suites: each suite is a deterministic list of cases, every case a
picklable (function, args) pair returning True on success.  Cases may run in a
process pool; results are reported in case order regardless of completion
order.
"""

from __future__ import annotations

import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import permkit as pk
from . import polyring as pr
from . import positivity as pos
from . import weightmod as wm

__all__ = ["SUITES", "VerificationSuiteResult", "suite_cases", "run_suite", "run_all", "DEFAULT_SEED"]

DEFAULT_SEED = 20150401

Case = tuple[str, Callable, tuple]


@dataclass
class VerificationSuiteResult:
    suite: str
    run: int
    passed: int
    counterexample: str | None
    seconds: float

    @property
    def ok(self) -> bool:
        return self.passed == self.run

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.suite:<20} {status}  {self.passed}/{self.run} cases  {self.seconds:.2f}s"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        return line

    def to_json(self) -> dict:
        return {
            "suite": self.suite, "run": self.run, "passed": self.passed,
            "counterexample": self.counterexample, "seconds": round(self.seconds, 4),
        }


P = pk.Permutation


# -- case functions (module level so they pickle) -------------------------------

def _random_poly(rng: random.Random, nvars: int, max_deg: int, terms: int = 6) -> pr.SparsePoly:
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_deg)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = rng.randint(-5, 5)
    return pr.SparsePoly(out)


def _case_dd(seed: int, idx: int, nvars: int) -> bool:
    rng = random.Random(seed * 1000 + idx)
    p = _random_poly(rng, nvars, 6)
    dd = pr.divided_difference
    for i in range(1, nvars):
        q = dd(i, p)
        if q * (pr.x(i) - pr.x(i + 1)) != p - p.swap(i):
            return False
        if dd(i, q):
            return False
        if i + 1 < nvars and dd(i, dd(i + 1, q)) != dd(i + 1, dd(i, dd(i + 1, p))):
            return False
        for j in range(i + 2, nvars):
            if dd(i, dd(j, p)) != dd(j, q):
                return False
    return True


def _case_schubert_props(word: tuple) -> bool:
    w = P(word)
    n = w.size
    s = pr.schubert(w)
    c = pk.code(w)
    if s != pr.schubert_by_definition(w, n) or s != pr.schubert_by_definition(w, n + 1):
        return False
    for k in range(1, n + 1):
        if (s.swap(k) == s) != (w(k) < w(k + 1)):
            return False
    descents = [k for k in range(1, n) if w(k) > w(k + 1)]
    if len(descents) == 1:
        k = descents[0]
        lam = tuple(reversed(c[:k]))
        if s != pr.schur(lam, k):
            return False
    if all(a >= b for a, b in zip(c, c[1:])) and s != pr.monomial(c):
        return False
    if s.coefficient(c) != 1:
        return False
    winv = w.inverse()
    for e, _ in s.items():
        if not pk.lex_leq(winv, pk.from_code(e).inverse()):
            return False
    return True


def _case_monk(word: tuple, k: int) -> bool:
    w = P(word)
    terms = pk.monk_terms(w, k)
    brute = [w.swap(p, q) for p in range(1, k + 1) for q in range(k + 1, max(w.size, k) + 3)
             if w.swap(p, q).length() == w.length() + 1]
    if sorted(brute) != terms:
        return False
    lhs = pr.schubert(w) * sum((pr.x(i) for i in range(1, k + 1)), pr.SparsePoly())
    return lhs == sum((pr.schubert(u) for u in terms), pr.SparsePoly())


def _case_transition(word: tuple, j: int, s: int) -> bool:
    w = P(word)
    t = next(t for t in pk.transitions(w) if (t.j, t.s) == (j, s))
    if not pk.transition_conditions_hold(t):
        return False
    if t.v.length() != w.length() - 1 or any(b.length() != w.length() for b in t.branches):
        return False
    rhs = pr.schubert(t.v) * pr.x(t.j) + sum((pr.schubert(b) for b in t.branches), pr.SparsePoly())
    return pr.schubert(w) == rhs


def _case_worked_transition() -> bool:
    w = P([5, 2, 1, 8, 6, 3, 4, 7, 9])
    expected = {
        (5, 7): ("521843679", ["541823679", "524813679"]),
        (4, 8): ("521763489", ["721563489", "571263489", "527163489"]),
        (2, 3): ("512863479", []),
    }
    fmt = lambda u: "".join(map(str, u.padded(9)))
    got = {(t.j, t.s): (fmt(t.v), [fmt(b) for b in t.branches]) for t in pk.transitions(w)}
    m = pk.maximal_transition(w)
    return got == expected and (m.j, m.s) == (5, 7) and all(
        _case_transition(w.word, j, s) for j, s in expected)


def _case_box(n: int) -> bool:
    return pr.box_basis_check(n)


def _case_cauchy(n: int) -> bool:
    return pr.cauchy_type_check(n)


def _case_dual(n: int) -> bool:
    return pr.dual_basis_check(n)


def _case_kp(word: tuple) -> bool:
    w = P(word)
    ch = wm.kp_character(w)
    return ch == pr.schubert(w) and ch.degree() == max(w.length(), 0)


def _case_kp_prime(word: tuple, n: int) -> bool:
    w = P(word)
    return wm.kp_prime_character(w, n) == pr.schubert(pk.conj_w0(w, n))


def _case_schur_module(lam: tuple, m: int) -> bool:
    if wm.schur_character(lam, m) != pr.schur(lam, m):
        return False
    return not lam or wm.kp_reduces_to_schur_check(lam, m)


def _vex_params(w: pk.Permutation):
    n = len(w.word)
    parts, flags = [], []
    for k in range(1, n + 1):
        inv = pk.inversion_set(w, k)
        if inv:
            parts.append(len(inv))
            flags.append(min(inv) - 1)
    return tuple(sorted(parts, reverse=True)), tuple(sorted(flags))


def _case_vexillary_poly(word: tuple) -> bool:
    w = P(word)
    lam, flags = _vex_params(w)
    fs = pr.flagged_schur(lam, flags) if lam else pr.SparsePoly.const(1)
    return pr.schubert(w) == fs


def _case_vexillary_char(word: tuple) -> bool:
    w = P(word)
    lam, flags = _vex_params(w)
    fs = pr.flagged_schur(lam, flags) if lam else pr.SparsePoly.const(1)
    return wm.kp_character(w) == fs


def _case_annihilator(word: tuple) -> bool:
    return wm.annihilator_check(P(word))


def _case_cyclic(word: tuple) -> bool:
    return wm.cyclic_span_check(P(word), max_size=max(len(word), 1))


def _case_t_module(word: tuple) -> bool:
    return pos.t_module_expansion(P(word)).ok


def _case_pos_monomial(sigma: tuple, word: tuple) -> bool:
    w = P(word)
    rep = pos.schur_of_monomials(sigma, w)
    p = rep.expansion.to_poly()
    return rep.nonnegative and p.is_homogeneous() and (not p or p.degree() == sum(sigma) * w.length())


def _case_pos_linear(lam: tuple, word: tuple) -> bool:
    rep = pos.schur_of_linear_forms(lam, P(word))
    p = rep.expansion.to_poly()
    return rep.nonnegative and p.is_homogeneous() and (not p or p.degree() == sum(lam))


# -- suites ----------------------------------------------------------------------

def _perms(n: int):
    return [w.word for w in pk.all_perms(n)]


def _partitions_up_to(d: int):
    return [lam for k in range(1, d + 1) for lam in pr.partitions(k)]


def _dd_cases(n, seed):
    return [(f"corpus[{i}] in {n} vars", _case_dd, (seed, i, n)) for i in range(40)]


def _props_cases(n, seed):
    return [(f"w={P(w)}", _case_schubert_props, (w,)) for w in _perms(n)]


def _monk_cases(n, seed):
    return [(f"w={P(w)} k={k}", _case_monk, (w, k)) for w in _perms(n) for k in range(1, n)]


def _transition_cases(n, seed):
    cases = [("worked example 521863479", _case_worked_transition, ())]
    for word in _perms(n):
        for t in pk.transitions(P(word)):
            cases.append((f"w={P(word)} (j,s)=({t.j},{t.s})", _case_transition, (word, t.j, t.s)))
    return cases


def _kp_cases(n, seed):
    cases = [(f"w={P(w)}", _case_kp, (w,)) for w in _perms(n)]
    pool = _perms(n + 1)
    for w in random.Random(seed).sample(pool, min(20, len(pool))):
        cases.append((f"sample w={P(w)}", _case_kp, (w,)))
    return cases


def _schur_cases(n, seed):
    return [(f"lam={lam} m={m}", _case_schur_module, (lam, m))
            for lam in [()] + _partitions_up_to(n + 1) for m in range(1, n + 1) if len(lam) <= m]


def _vex_cases(n, seed):
    cases = [(f"poly w={P(w)}", _case_vexillary_poly, (w,)) for w in _perms(n) if pk.is_vexillary(P(w))]
    cases += [(f"char w={P(w)}", _case_vexillary_char, (w,))
              for w in _perms(n - 1) if pk.is_vexillary(P(w))]
    return cases


def _pos_mono_cases(n, seed):
    return [(f"sigma={s} w={P(w)}", _case_pos_monomial, (s, w))
            for s in _partitions_up_to(3) for w in _perms(n)]


def _pos_lin_cases(n, seed):
    cases = [(f"lam={s} w={P(w)}", _case_pos_linear, (s, w))
             for s in _partitions_up_to(3) for w in _perms(n - 1)]
    cases += [(f"lam={s} w={P(w)}", _case_pos_linear, (s, w))
              for s in _partitions_up_to(2) for w in _perms(n)]
    return cases


# name -> (case builder, default n, desk-scale bound)
SUITES: dict[str, tuple[Callable, int, int]] = {
    "dd-relations": (_dd_cases, 5, 7),
    "schubert-props": (_props_cases, 5, 6),
    "monk": (_monk_cases, 5, 6),
    "transition": (_transition_cases, 5, 6),
    "box-basis": (lambda n, s: [(f"n={k}", _case_box, (k,)) for k in range(1, n + 1)], 4, 5),
    "cauchy": (lambda n, s: [(f"n={k}", _case_cauchy, (k,)) for k in range(1, n + 1)], 5, 6),
    "dual-basis": (lambda n, s: [(f"n={k}", _case_dual, (k,)) for k in range(1, n + 1)], 4, 5),
    "kp-char": (_kp_cases, 4, 5),
    "kp-prime": (lambda n, s: [(f"w={P(w)}", _case_kp_prime, (w, n)) for w in _perms(n)], 4, 5),
    "schur-module": (_schur_cases, 4, 5),
    "vexillary": (_vex_cases, 5, 6),
    "annihilator": (lambda n, s: [(f"w={P(w)}", _case_annihilator, (w,)) for w in _perms(n)], 4, 6),
    "cyclic": (lambda n, s: [(f"w={P(w)}", _case_cyclic, (w,)) for w in _perms(n)], 4, 5),
    "t-module": (lambda n, s: [(f"w={P(w)}", _case_t_module, (w,)) for w in _perms(n)], 4, 6),
    "positivity-monomial": (_pos_mono_cases, 4, 4),
    "positivity-linear": (_pos_lin_cases, 4, 5),
}


def suite_cases(name: str, n: int | None = None, seed: int = DEFAULT_SEED) -> list[Case]:
    builder, default, bound = SUITES[name]
    if n is None:
        n = default
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        warnings.warn(f"suite {name} with n={n} exceeds the desk-scale bound {bound}; expect a long run",
                      RuntimeWarning, stacklevel=2)
    return builder(n, seed)


def _run_case(case: Case) -> tuple[bool, str | None]:
    label, fn, args = case
    try:
        ok = bool(fn(*args))
    except Exception as exc:  # a crash is a failed case, reported with its label
        return False, f"{label}: {type(exc).__name__}: {exc}"
    return ok, None if ok else label


def run_suite(name: str, n: int | None = None, seed: int = DEFAULT_SEED,
              jobs: int = 1) -> VerificationSuiteResult:
    start = time.perf_counter()
    cases = suite_cases(name, n, seed)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        outcomes = [_run_case(c) for c in cases]
    passed = sum(ok for ok, _ in outcomes)
    first = next((msg for ok, msg in outcomes if not ok), None)
    return VerificationSuiteResult(name, len(cases), passed, first, time.perf_counter() - start)


def run_all(n: int | None = None, seed: int = DEFAULT_SEED, jobs: int = 1) -> list[VerificationSuiteResult]:
    return [run_suite(name, n, seed, jobs) for name in SUITES]
