"""Finitely generated abelian groups in primary-decomposition form.

A group is stored as Z^free_rank plus a sorted tuple of prime-power cyclic
orders.  The primary form (never the invariant-factor form) is what makes the
splitting length a plain summand count: Z/6 is stored as torsion (2, 3) and
has splitting length 2, matching the brute-force series search on its Cayley
table, whereas the invariant-factor form would count 1.

>>> from_cyclic_factors(0, [6])
FgAbelianGroup(free_rank=0, torsion=(2, 3))
>>> sl_abelian(from_cyclic_factors(1, [4, 9]))
3
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from sympy import factorint

from .errors import CompositionNotZero, DimensionMismatch, TorsionNotSupported
from .intlinalg import IntMatrix, rank, smith_normal_form


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank plus cyclic prime-power summands, sorted ascending."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if tuple(sorted(self.torsion)) != self.torsion:
            raise ValueError("torsion coefficients must be sorted ascending")
        for q in self.torsion:
            if not _is_prime_power(q):
                raise ValueError(
                    f"torsion coefficient {q} is not a prime power >= 2; "
                    "build through from_cyclic_factors for automatic splitting"
                )

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> int | None:
        """Order when finite, None otherwise."""
        if self.free_rank:
            return None
        n = 1
        for q in self.torsion:
            n *= q
        return n


TRIVIAL_GROUP = FgAbelianGroup(0, ())


def _primary_split(q: int) -> list[int]:
    # 12 -> [4, 3]; prime powers pass through
    return [p**e for p, e in factorint(q).items()]


def from_cyclic_factors(free_rank: int, factors: Iterable[int] = ()) -> FgAbelianGroup:
    """Normalize arbitrary cyclic orders into the primary form.

    Factors equal to 1 contribute nothing.

    >>> from_cyclic_factors(0, [12])
    FgAbelianGroup(free_rank=0, torsion=(3, 4))
    """
    torsion: list[int] = []
    for q in factors:
        if q < 1:
            raise ValueError(f"cyclic factor must be >= 1, got {q}")
        if q > 1:
            torsion.extend(_primary_split(q))
    return FgAbelianGroup(free_rank, tuple(sorted(torsion)))


def from_boundary_maps(d_k: IntMatrix, d_k_plus_1: IntMatrix) -> FgAbelianGroup:
    """Homology at the middle chain group: ker(d_k) / im(d_k_plus_1).

    The middle group has rank cols(d_k) = rows(d_k_plus_1); zero maps are
    expressed as matrices with zero rows or columns.
    """
    if d_k.cols != d_k_plus_1.rows:
        raise DimensionMismatch(
            f"cols(d_k) = {d_k.cols} but rows(d_k_plus_1) = {d_k_plus_1.rows}"
        )
    if not (d_k @ d_k_plus_1).is_zero():
        raise CompositionNotZero("d_k composed with d_k_plus_1 is not zero")
    image = smith_normal_form(d_k_plus_1)
    cycle_rank = d_k.cols - rank(d_k)
    free = cycle_rank - len(image.diagonal)
    assert free >= 0, "image escaped the kernel despite zero composition"
    return from_cyclic_factors(free, (d for d in image.diagonal if d > 1))


def sl_abelian(g: FgAbelianGroup) -> int:
    """Splitting length: the number of nonzero summands in the primary form."""
    return g.free_rank + len(g.torsion)


def direct_sum(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(
        a.free_rank + b.free_rank, tuple(sorted(a.torsion + b.torsion))
    )


def tensor_free(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """Tensor product of torsion-free groups: ranks multiply."""
    if a.torsion or b.torsion:
        raise TorsionNotSupported("tensor product implemented for torsion-free groups only")
    return FgAbelianGroup(a.free_rank * b.free_rank, ())


def render_abelian(g: FgAbelianGroup) -> str:
    """Canonical text form: "Z^r ⊕ Z/q1 ⊕ … ⊕ Z/qm"; the trivial group is "0".

    >>> render_abelian(from_cyclic_factors(2, [2, 4]))
    'Z^2 ⊕ Z/2 ⊕ Z/4'
    """
    if g.is_trivial:
        return "0"
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{q}" for q in g.torsion)
    return " ⊕ ".join(parts)


def parse_abelian(text: str) -> FgAbelianGroup:
    """Parse the render_abelian grammar; "+" is accepted in place of "⊕" and
    non-prime-power cyclic orders are split into primary components.

    >>> parse_abelian("Z^2 ⊕ Z/6")
    FgAbelianGroup(free_rank=2, torsion=(2, 3))
    """
    text = text.strip()
    if text in ("0", "1"):
        return TRIVIAL_GROUP
    free = 0
    factors: list[int] = []
    for raw in text.replace("+", "⊕").split("⊕"):
        part = raw.strip()
        if part == "Z":
            free += 1
        elif part.startswith("Z^"):
            r = int(part[2:])
            if r < 0:
                raise ValueError(f"negative free rank in {part!r}")
            free += r
        elif part.startswith("Z/"):
            q = int(part[2:])
            if q < 2:
                raise ValueError(f"cyclic order must be >= 2 in {part!r}")
            factors.append(q)
        else:
            raise ValueError(f"cannot parse abelian group term {part!r}")
    return from_cyclic_factors(free, factors)
