"""Which (h, q) give irreducible L_{c_m}-modules at an admissible level m.

The finite series W^{c_m} is available in two parametrizations,
(i, r) with 0 <= i <= r <= N and (j, k) half-odd with j + k <= N + 1.  For
m not a nonnegative integer the rational curves D^{c_m},
q^2 + 4h/(m+2) = r(r+2)/(m+2)^2 with r in S^m minus Z, contribute as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affine_sl2 import NotAdmissible, RationalLevel, enumerate_S, is_admissible
from .exact_linalg import format_rational

__all__ = [
    "LevelExcluded", "DNotDefined", "NotAdmissible", "central_charge", "WEntry",
    "enumerate_W", "enumerate_W_jk", "membership_D", "membership_D_all", "ClassificationVerdict",
    "classify", "casimir_scalar",
]


class LevelExcluded(ValueError):
    pass


class DNotDefined(ValueError):
    pass


def central_charge(m) -> Fraction:
    """c_m = 3m/(m+2)."""
    m = Fraction(m)
    if m == -2:
        raise LevelExcluded("m = -2 has no central charge")
    return 3 * m / (m + 2)


@dataclass(frozen=True)
class WEntry:
    r: int
    i: int
    j: Fraction
    k: Fraction
    h: Fraction
    q: Fraction

    def as_dict(self) -> dict:
        return {"r": self.r, "i": self.i, "j": format_rational(self.j),
                "k": format_rational(self.k), "h": format_rational(self.h),
                "q": format_rational(self.q)}


def _hq_ir(i: int, r: int, m: Fraction) -> tuple[Fraction, Fraction]:
    return (Fraction(r * (r + 2) - (r - 2 * i) ** 2) / (4 * (m + 2)),
            Fraction(-(r - 2 * i)) / (m + 2))


def _hq_jk(j: Fraction, k: Fraction, m: Fraction) -> tuple[Fraction, Fraction]:
    return (j * k - Fraction(1, 4)) / (m + 2), (j - k) / (m + 2)


def _level(m) -> RationalLevel:
    lv = RationalLevel(m)
    if lv.N < 0:
        raise NotAdmissible(f"level {format_rational(lv.m)} is not admissible")
    return lv


@lru_cache(maxsize=None)
def _w_entries(m: Fraction) -> tuple[WEntry, ...]:
    N = _level(m).N
    out = []
    for r in range(N + 1):
        for i in range(r + 1):
            j, k = i + Fraction(1, 2), r + Fraction(1, 2) - i
            h, q = _hq_ir(i, r, m)
            if (h, q) != _hq_jk(j, k, m):
                raise ArithmeticError(f"parametrizations disagree at (i, r) = ({i}, {r})")
            out.append(WEntry(r, i, j, k, h, q))
    return tuple(out)


def enumerate_W(m) -> list[WEntry]:
    """W^{c_m}, one entry per (i, r), ordered by r then i."""
    return list(_w_entries(Fraction(m)))


def enumerate_W_jk(m) -> set[tuple[Fraction, Fraction]]:
    """W^{c_m} built independently from half-odd j, k > 0 with j + k <= N + 1."""
    m = Fraction(m)
    N = _level(m).N
    halves = [Fraction(2 * a + 1, 2) for a in range(N + 1)]
    return {_hq_jk(j, k, m) for j in halves for k in halves if j + k <= N + 1}


@lru_cache(maxsize=None)
def _w_lookup(m: Fraction) -> dict:
    out: dict = {}
    for e in _w_entries(m):
        out.setdefault((e.h, e.q), e)
    return out


def _nonneg_int(m: Fraction) -> bool:
    return m.denominator == 1 and m >= 0


def membership_D(h, q, m) -> Fraction | None:
    """The witness r in S^m minus Z for (h, q) in D^{c_m}, or None.

    r and -2-r cut out the same curve; when both lie in S^m the one with
    r >= -1 is returned.  ``membership_D_all`` lists every match.
    """
    rs = membership_D_all(h, q, m)
    if not rs:
        return None
    return next((r for r in rs if r >= -1), rs[0])


def membership_D_all(h, q, m) -> list[Fraction]:
    """Every r in S^m minus Z with q^2 + 4h/(m+2) = r(r+2)/(m+2)^2, ascending."""
    h, q, m = Fraction(h), Fraction(q), Fraction(m)
    _level(m)
    if _nonneg_int(m):
        raise DNotDefined(f"D is not defined at the nonnegative integer level {m}")
    lhs = (q * q + 4 * h / (m + 2)) * (m + 2) ** 2
    return [r for r in enumerate_S(m) if r.denominator != 1 and r * (r + 2) == lhs]


@dataclass(frozen=True)
class ClassificationVerdict:
    tag: str  # InW, InD, NotModule or NotAdmissible
    h: Fraction
    q: Fraction
    m: Fraction
    witness: object = None  # WEntry for InW, r for InD
    curve_roots: tuple = ()  # every matching r for InD

    def witness_dict(self):
        if self.tag == "InW":
            e = self.witness
            return {"r": e.r, "i": e.i, "j": format_rational(e.j), "k": format_rational(e.k)}
        if self.tag == "InD":
            return {"r": format_rational(self.witness)}
        return None

    def as_dict(self) -> dict:
        out = {"verdict": self.tag}
        if self.tag in ("InW", "InD"):
            out["c"] = format_rational(central_charge(self.m))
        w = self.witness_dict()
        if w is not None:
            out["witness"] = w
        if self.tag == "InD":
            out["curve_roots"] = [format_rational(r) for r in self.curve_roots]
        return out


def classify(h, q, m) -> ClassificationVerdict:
    """Is L_{h,q,c_m} a module for the simple algebra L_{c_m}?"""
    h, q, m = Fraction(h), Fraction(q), Fraction(m)
    if not is_admissible(m):
        return ClassificationVerdict("NotAdmissible", h, q, m)
    hit = _w_lookup(m).get((h, q))
    if hit is not None:
        return ClassificationVerdict("InW", h, q, m, hit)
    if not _nonneg_int(m):
        rs = membership_D_all(h, q, m)
        if rs:
            return ClassificationVerdict("InD", h, q, m, membership_D(h, q, m), tuple(rs))
    return ClassificationVerdict("NotModule", h, q, m)


def casimir_scalar(h, q, m) -> Fraction:
    """2(m+2)h + (m+2)^2 q^2 / 2, the value Omega takes on the top level."""
    h, q, m = Fraction(h), Fraction(q), Fraction(m)
    return 2 * (m + 2) * h + (m + 2) ** 2 * q * q / 2
