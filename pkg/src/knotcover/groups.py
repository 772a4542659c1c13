"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z_d1 + ... + Z_dk with 1 < d1 | d2 | ... | dk.

    Two groups are isomorphic exactly when these fields are equal, so
    dataclass equality is group isomorphism.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion factors must be >= 2, got {self.torsion}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        if not self.is_finite:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def canonicalize(summands: Iterable[int]) -> AbelianGroup:
    """Normalize a direct sum of cyclic groups Z_d (any sign, 0 meaning Z)."""
    orders = [abs(int(d)) for d in summands]
    free = orders.count(0)
    fin = [d for d in orders if d > 1]
    # pairwise gcd/lcm exchange leaves fin[i] | fin[j] for i < j
    for i in range(len(fin)):
        for j in range(i + 1, len(fin)):
            g = gcd(fin[i], fin[j])
            fin[i], fin[j] = g, fin[i] * fin[j] // g
    return AbelianGroup(free_rank=free, torsion=tuple(d for d in fin if d > 1))


TRIVIAL = AbelianGroup()
