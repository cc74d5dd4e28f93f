"""Cyclotomic numbers of order 4 and 6 as structure constants of ``cyc(M, Zp)``.

``constants[i-1, j-1, k-1]`` is ``c_ij^k``: the number of ways a fixed
element of ``C_k`` is a sum ``x + y`` with ``x in C_i`` and ``y in C_j``.
Labels follow :func:`~schurrings.constructions.cyc_orbit_system`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .constructions import CycOrbitSystem, cyc_orbit_system, is_prime


class IdentityFailure(RuntimeError):
    """A cyclotomic identity that must hold did not."""

    def __init__(self, report: "CyclotomicReport"):
        self.report = report
        super().__init__(report.line())


@dataclass
class CyclotomicReport:
    p: int
    l: int
    m: int
    constants: np.ndarray
    r: int | None = None
    s: int | None = None
    t: int | None = None
    u: int | None = None
    alternative: str | None = None
    verdicts: dict[str, bool] = field(default_factory=dict)

    def c(self, i: int, j: int, k: int = 1) -> int:
        """``c_ij^k`` with 1-based indices taken cyclically."""
        l = self.l
        return int(self.constants[(i - 1) % l, (j - 1) % l, (k - 1) % l])

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def line(self) -> str:
        parts = [f"p={self.p}", f"l={self.l}", f"m={self.m}", f"branch={'even' if self.m % 2 == 0 else 'odd'}"]
        for name in ("r", "s", "t", "u"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={v}")
        if self.alternative:
            parts.append(f"alternative={self.alternative}")
        parts += [f"{k}={'ok' if v else 'FAIL'}" for k, v in self.verdicts.items()]
        return " ".join(parts)


def constants_direct(O: CycOrbitSystem) -> np.ndarray:
    """``c_ij^k`` by counting residues."""
    p, l = O.p, O.l
    where = np.full(p, -1, dtype=np.int64)
    for i, c in enumerate(O.orbits):
        where[list(c)] = i
    out = np.zeros((l, l, l), dtype=np.int64)
    for k, Ck in enumerate(O.orbits):
        z = Ck[0]
        for i, Ci in enumerate(O.orbits):
            for x in Ci:
                j = where[(z - x) % p]
                if j >= 0:
                    out[i, j, k] += 1
    return out


def cyc_constants(p: int, l: int) -> CyclotomicReport:
    O = cyc_orbit_system(p, l)
    return CyclotomicReport(p, l, O.m, constants_direct(O))


def shift_symmetry_holds(report: CyclotomicReport) -> bool:
    """``c_{i+1, j+1}^{k+1} = c_ij^k`` for all indices, mod ``l``."""
    c = report.constants
    return bool(np.array_equal(np.roll(c, (1, 1, 1), axis=(0, 1, 2)), c))


def _square_root(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def verify_l4(p: int) -> CyclotomicReport:
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"verify_l4 needs a prime p = 1 mod 4, got {p}")
    rep = cyc_constants(p, 4)
    c = rep.c
    rep.verdicts["shift"] = shift_symmetry_holds(rep)
    if rep.m % 2 == 0:
        rep.s = c(1, 2) - c(1, 4)
        rep.r = _square_root(p - 4 * rep.s**2)
        rep.verdicts["p=r^2+4s^2"] = rep.r is not None
    else:
        rep.verdicts["m=c32+c34+2c41"] = rep.m == c(3, 2) + c(3, 4) + 2 * c(4, 1)
    if not rep.ok:
        raise IdentityFailure(rep)
    return rep


def verify_l6(p: int) -> CyclotomicReport:
    if not is_prime(p) or p % 6 != 1:
        raise ValueError(f"verify_l6 needs a prime p = 1 mod 6, got {p}")
    rep = cyc_constants(p, 6)
    c = rep.c
    rep.verdicts["shift"] = shift_symmetry_holds(rep)
    if rep.m % 2 == 0:
        s = c(1, 2) + 2 * c(2, 4) + c(1, 5) - c(1, 3) - 2 * c(2, 5) - c(1, 6)
        t = c(1, 2) + 2 * c(2, 4) - 3 * c(1, 5) + 3 * c(1, 3) - c(1, 6) - 2 * c(2, 5)
        u = c(1, 2) - c(1, 6) - c(2, 4) + c(2, 5)
        rep.r = _square_root(4 * p - 27 * s * s)
        rep.verdicts["4p=r^2+27s^2"] = rep.r is not None
        first, second = 3 * s == t == 2 * u, 3 * s == -t - 2 * u
        labels = ("3s=t=2u", "3s=-t-2u")
    else:
        rep.verdicts["m=c43+c45+c51+c52+2c56"] = rep.m == c(4, 3) + c(4, 5) + c(5, 1) + c(5, 2) + 2 * c(5, 6)
        s = c(4, 2) + 2 * c(5, 1) + c(4, 5) - c(4, 3) - 2 * c(5, 2) - c(4, 6)
        t = c(4, 5) + 2 * c(5, 1) - 3 * c(4, 2) + 3 * c(4, 6) - c(4, 3) - 2 * c(5, 2)
        u = c(5, 1) - c(5, 2) - c(4, 3) + c(4, 5)
        # not asserted in this branch, recorded for reference
        rep.r = _square_root(4 * p - 27 * s * s)
        first, second = 3 * s == -t == 2 * u, 3 * s == t - 2 * u
        labels = ("3s=-t=2u", "3s=t-2u")
    rep.s, rep.t, rep.u = s, t, u
    rep.alternative = "+".join(lab for lab, hit in zip(labels, (first, second)) if hit) or None
    rep.verdicts["sign_relation"] = first or second
    if not rep.ok:
        raise IdentityFailure(rep)
    return rep


def sweep(l: int, pmax: int) -> list[CyclotomicReport]:
    """Reports for every prime ``p < pmax`` with ``p = 1 mod l``; failed reports are kept, not raised."""
    verify = {4: verify_l4, 6: verify_l6}[l]
    out = []
    for p in range(l + 1, pmax):
        if is_prime(p) and p % l == 1:
            try:
                out.append(verify(p))
            except IdentityFailure as exc:
                out.append(exc.report)
    return out
