"""Finitely generated abelian groups in invariant-factor form."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .smith import smith_normal_form


def _primary_parts(t: int) -> dict[int, int]:
    """Prime-power decomposition {p: p^k} of t >= 2."""
    parts = {}
    p = 2
    while p * p <= t:
        while t % p == 0:
            parts[p] = parts.get(p, 1) * p
            t //= p
        p += 1
    if t > 1:
        parts[t] = parts.get(t, 1) * t
    return parts


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors t1 | t2 | ... of the direct sum of cyclic groups Z/o.

    Orders 0 and 1 are ignored (0 means free and is tracked elsewhere).
    """
    by_prime: dict[int, list[int]] = {}
    for o in orders:
        o = abs(o)
        if o <= 1:
            continue
        for p, q in _primary_parts(o).items():
            by_prime.setdefault(p, []).append(q)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort()
        # largest prime powers go to the last (largest) factors
        for i, q in enumerate(powers):
            factors[length - len(powers) + i] *= q
    return tuple(factors)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/t1 + ... with each t_i >= 2 dividing t_(i+1)."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not an invariant-factor chain")

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Direct sum of Z/o for each o; o = 0 contributes a copy of Z."""
        orders = list(orders)
        free = sum(1 for o in orders if o == 0)
        return cls(free, invariant_factors(orders))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup(self.free_rank + other.free_rank,
                            invariant_factors(self.torsion + other.torsion))

    @staticmethod
    def direct_sum(groups: Iterable["AbelianGroup"]) -> "AbelianGroup":
        total = AbelianGroup()
        for g in groups:
            total = total + g
        return total

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion)

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, data: dict) -> "AbelianGroup":
        return cls(int(data["free_rank"]), tuple(int(t) for t in data["torsion"]))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    _TERM = re.compile(r"^Z(?:\^(\d+)|/(\d+)(?:Z)?)?$")

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Inverse of ``str``; also accepts '+' separators and 'Z/nZ' terms."""
        text = text.strip()
        if text == "0":
            return cls()
        free, orders = 0, []
        for term in re.split(r"\s*(?:⊕|\+)\s*", text):
            term = term.replace(" ", "").replace("ℤ", "Z").strip("()")
            m = cls._TERM.match(term)
            if not m:
                raise ValueError(f"cannot parse group term {term!r}")
            if m.group(1):
                free += int(m.group(1))
            elif m.group(2):
                orders.append(int(m.group(2)))
            else:
                free += 1
        return cls(free, invariant_factors(orders))


def cokernel(m) -> AbelianGroup:
    """Z^rows / image(m), read off the Smith factors."""
    dec = smith_normal_form(m)
    rows = dec.s.rows
    factors = list(dec.factors) + [0] * (rows - len(dec.factors))
    free = sum(1 for f in factors if f == 0)
    return AbelianGroup(free, tuple(f for f in factors if f > 1))
