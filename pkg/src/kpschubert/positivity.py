"""
Schubert-positivity drivers: Schur functions evaluated at the monomials of a
Schubert polynomial (or at their linear forms), and the product of elementary
symmetric functions attached to a permutation, expanded in the Schubert basis.

Reports record negative coefficients instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .permkit import Permutation, l_j, lex_leq
from .polyring import (
    Expansion, SparsePoly, elementary, expand_schubert, schubert, schur, substitute, x,
)

__all__ = [
    "PositivityReport", "schubert_monomials", "linear_form",
    "schur_of_monomials", "schur_of_linear_forms", "t_module_product", "t_module_expansion",
]


@dataclass
class PositivityReport:
    mode: str
    sigma: tuple[int, ...]
    w: Permutation
    expansion: Expansion
    failures: list[tuple[Permutation, int]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def nonnegative(self) -> bool:
        return not self.failures

    @property
    def ok(self) -> bool:
        return not self.failures and not self.notes

    def to_json(self) -> dict:
        data = {
            "mode": self.mode,
            "sigma": list(self.sigma),
            "w": self.w.to_json(),
            "expansion": self.expansion.to_json(),
            "nonnegative": self.nonnegative,
        }
        if self.failures:
            data["failures"] = [{"perm": u.to_json(), "coeff": str(c)} for u, c in self.failures]
        if self.notes:
            data["notes"] = list(self.notes)
        return data


def schubert_monomials(w: Permutation) -> list[SparsePoly]:
    """The monomials of S_w, each repeated as often as its coefficient."""
    out = []
    for e, c in schubert(w).sorted_terms():
        if c < 0:
            raise AssertionError(f"negative coefficient in S_{w}")
        out.extend([SparsePoly({e: 1})] * c)
    return out


def linear_form(mono: SparsePoly) -> SparsePoly:
    """x^alpha -> alpha_1 x_1 + alpha_2 x_2 + ..."""
    (e, _), = mono.items()
    return sum((x(i) * a for i, a in enumerate(e, start=1) if a), SparsePoly())


def _report(mode: str, sigma, w: Permutation, values: list[SparsePoly]) -> PositivityReport:
    sigma = tuple(int(a) for a in sigma)
    s = schur(sigma, len(values))
    p = substitute(s, {i: v for i, v in enumerate(values, start=1)})
    exp = expand_schubert(p)
    return PositivityReport(mode, sigma, w, exp, exp.negative_terms())


def schur_of_monomials(sigma, w: Permutation) -> PositivityReport:
    return _report("monomial", sigma, w, schubert_monomials(w))


def schur_of_linear_forms(lam, w: Permutation) -> PositivityReport:
    return _report("linear", lam, w, [linear_form(m) for m in schubert_monomials(w)])


def t_module_product(w: Permutation) -> SparsePoly:
    """prod_{2 <= i <= n} e_{l_i(w)}(x_1..x_{i-1})."""
    p = SparsePoly.const(1)
    for i in range(2, w.size + 1):
        p = p * elementary(l_j(w, i), i - 1)
    return p


def t_module_expansion(w: Permutation) -> PositivityReport:
    """Expansion of the T_w character; also checks m_ww = 1 and u^-1 >=_lex w^-1 on the support."""
    exp = expand_schubert(t_module_product(w))
    report = PositivityReport("t-module", (), w, exp, exp.negative_terms())
    if exp.get(w) != 1:
        report.notes.append(f"coefficient of S_{w} is {exp.get(w, 0)}, expected 1")
    winv = w.inverse()
    for u in exp:
        if not lex_leq(winv, u.inverse()):
            report.notes.append(f"S_{u} appears but {u}^-1 <_lex {w}^-1")
    return report
