"""Space descriptions and their integral homology.

Spaces are expression trees over four constructors: spheres (minimal cell
structure: one 0-cell, one n-cell), wedges, products, and explicit chain
complexes with a declared fundamental group.  Homology of explicit complexes
is exact (Smith normal form); wedges add reduced homology degreewise;
products convolve Poincare coefficients, which is the torsion-free Kunneth
rule, and refuse torsion rather than silently dropping Tor terms.

Universal-cover homology is rule-based over a closed list of constructions:

* no circle anywhere (and trivial declared group for explicit complexes):
  the space is its own cover;
* a product with circle factors: drop every circle factor and recurse
  (dropping a contractible factor of the cover); a bare circle counts as the
  one-factor product, so its cover is a point;
* a wedge of spheres mixing a circle with at least one higher sphere: the
  cover exists but its homology is not finitely generated in each degree
  where a higher sphere sits, and the profile says exactly that;
* an explicit complex with a user-supplied cover complex.

Anything else raises UnsupportedConstruction; no rule, no answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .abelian import (
    TRIVIAL_GROUP,
    FgAbelianGroup,
    direct_sum,
    from_boundary_maps,
    render_abelian,
)
from .errors import (
    CompositionNotZero,
    DimensionMismatch,
    TorsionNotSupported,
    UnsupportedConstruction,
)
from .intlinalg import IntMatrix
from .pi1 import (
    ElementaryAmenable,
    FgAbelian,
    Finite,
    Free,
    Pi1Descriptor,
    Trivial,
    fg_abelian,
    free,
    pi1_from_json,
    pi1_to_json,
)
from .catalog import direct_product


@dataclass(frozen=True)
class ChainComplex:
    """Finite chain complex of free abelian groups, given by cell counts per
    dimension and boundary matrices d_1 .. d_dim (d_k: k-chains to
    (k-1)-chains, rows indexed by (k-1)-cells)."""

    dim: int
    boundary: tuple[IntMatrix, ...]
    cells: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(int(c) for c in self.cells))
        object.__setattr__(
            self,
            "boundary",
            tuple(
                b if isinstance(b, IntMatrix) else IntMatrix.from_rows(b)
                for b in self.boundary
            ),
        )
        if self.dim < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dim}")
        if len(self.cells) != self.dim + 1:
            raise ValueError(
                f"need {self.dim + 1} cell counts for dimension {self.dim}, "
                f"got {len(self.cells)}"
            )
        if any(c < 0 for c in self.cells):
            raise ValueError("cell counts must be >= 0")
        if len(self.boundary) != self.dim:
            raise ValueError(
                f"need {self.dim} boundary maps for dimension {self.dim}, "
                f"got {len(self.boundary)}"
            )
        for k, b in enumerate(self.boundary, start=1):
            if (b.rows, b.cols) != (self.cells[k - 1], self.cells[k]):
                raise DimensionMismatch(
                    f"boundary map {k} has shape {b.rows}x{b.cols}, expected "
                    f"{self.cells[k - 1]}x{self.cells[k]}"
                )
        for k in range(1, self.dim):
            if not (self.boundary[k - 1] @ self.boundary[k]).is_zero():
                raise CompositionNotZero(
                    f"boundary maps {k} and {k + 1} do not compose to zero"
                )

    def boundary_map(self, k: int) -> IntMatrix:
        """d_k with the convention that maps outside 1..dim are zero maps of
        the right shape."""
        if 1 <= k <= self.dim:
            return self.boundary[k - 1]
        if k == 0:
            return IntMatrix.zeros(0, self.cells[0])
        if k == self.dim + 1:
            return IntMatrix.zeros(self.cells[self.dim], 0)
        return IntMatrix.zeros(0, 0)


def euler_characteristic(complex_: ChainComplex) -> int:
    total = 0
    for k, c in enumerate(complex_.cells):
        total += c if k % 2 == 0 else -c
    return total


@dataclass(frozen=True)
class Sphere:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"sphere dimension must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Wedge:
    parts: tuple["SpaceExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("wedge needs at least one part")


@dataclass(frozen=True)
class Product:
    factors: tuple["SpaceExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("product needs at least one factor")


@dataclass(frozen=True)
class Explicit:
    complex: ChainComplex
    pi1: Pi1Descriptor
    cover: ChainComplex | None = None


SpaceExpr = Union[Sphere, Wedge, Product, Explicit]


def wedge(*parts: SpaceExpr) -> SpaceExpr:
    """Wedge constructor that flattens nested wedges and collapses the
    one-part case."""
    flat: list[SpaceExpr] = []
    for p in parts:
        if isinstance(p, Wedge):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if len(flat) == 1:
        return flat[0]
    return Wedge(tuple(flat))


def product(*factors: SpaceExpr) -> SpaceExpr:
    """Product constructor that flattens nested products and collapses the
    one-factor case."""
    flat: list[SpaceExpr] = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def dim_of(space: SpaceExpr) -> int:
    if isinstance(space, Sphere):
        return space.n
    if isinstance(space, Wedge):
        return max(dim_of(p) for p in space.parts)
    if isinstance(space, Product):
        return sum(dim_of(f) for f in space.factors)
    if isinstance(space, Explicit):
        return space.complex.dim
    raise TypeError(f"not a SpaceExpr: {space!r}")


class HomologyProfile:
    """Homology groups by degree with a finitely-generated verdict per
    degree: True (group present), False (exists but not finitely generated,
    group withheld), or None (unknown).  Degrees above dim read as trivial.
    Equality is by content, so profiles of different declared dimensions
    compare equal when the extra degrees are trivial."""

    def __init__(
        self,
        dim: int,
        groups: dict[int, FgAbelianGroup | None],
        finitely_generated: dict[int, "bool | None"] | None = None,
    ):
        if dim < 0:
            raise ValueError("dimension must be >= 0")
        self.dim = dim
        self.groups: dict[int, FgAbelianGroup | None] = {}
        self.finitely_generated: dict[int, bool | None] = {}
        for k in range(dim + 1):
            group = groups.get(k, TRIVIAL_GROUP)
            fg = True if finitely_generated is None else finitely_generated.get(k, True)
            if fg is not True and group is not None:
                raise ValueError(
                    f"degree {k}: a group value requires finitely_generated=True"
                )
            if fg is True and group is None:
                raise ValueError(f"degree {k}: finitely generated but no group given")
            self.groups[k] = group
            self.finitely_generated[k] = fg

    def group(self, k: int) -> FgAbelianGroup | None:
        if 0 <= k <= self.dim:
            return self.groups[k]
        return TRIVIAL_GROUP

    def fg(self, k: int) -> "bool | None":
        if 0 <= k <= self.dim:
            return self.finitely_generated[k]
        return True

    def free_rank(self, k: int) -> int:
        group = self.group(k)
        if group is None:
            raise TorsionNotSupported(
                f"degree {k} is not finitely generated; no rank available"
            )
        return group.free_rank

    @property
    def all_finitely_generated(self) -> bool:
        return all(self.finitely_generated[k] is True for k in range(self.dim + 1))

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        top = max(self.dim, other.dim)
        return all(
            self.group(k) == other.group(k) and self.fg(k) == other.fg(k)
            for k in range(top + 1)
        )

    def __repr__(self):
        parts = []
        for k in range(self.dim + 1):
            if self.finitely_generated[k] is True:
                if not self.groups[k].is_trivial:
                    parts.append(f"H{k}={render_abelian(self.groups[k])}")
            else:
                verdict = "not f.g." if self.finitely_generated[k] is False else "unknown"
                parts.append(f"H{k}={verdict}")
        return f"HomologyProfile({', '.join(parts) or 'trivial'})"


def render_profile(profile: HomologyProfile) -> str:
    lines = []
    for k in range(profile.dim + 1):
        fg = profile.finitely_generated[k]
        if fg is True:
            text = render_abelian(profile.groups[k])
        elif fg is False:
            text = "not finitely generated"
        else:
            text = "unknown"
        lines.append(f"H{k} = {text}")
    return "\n".join(lines)


def profile_to_json(profile: HomologyProfile) -> dict:
    groups = {}
    fg = {}
    for k in range(profile.dim + 1):
        g = profile.groups[k]
        groups[str(k)] = (
            None if g is None else {"free_rank": g.free_rank, "torsion": list(g.torsion)}
        )
        fg[str(k)] = profile.finitely_generated[k]
    return {"dim": profile.dim, "groups": groups, "finitely_generated": fg}


def homology_of_complex(complex_: ChainComplex) -> HomologyProfile:
    groups = {
        k: from_boundary_maps(complex_.boundary_map(k), complex_.boundary_map(k + 1))
        for k in range(complex_.dim + 1)
    }
    return HomologyProfile(complex_.dim, groups)


def _sphere_profile(n: int) -> HomologyProfile:
    one = FgAbelianGroup(free_rank=1)
    return HomologyProfile(n, {0: one, n: one})


def _point_profile() -> HomologyProfile:
    return HomologyProfile(0, {0: FgAbelianGroup(free_rank=1)})


def homology(space: SpaceExpr) -> HomologyProfile:
    """Ordinary integral homology.

    >>> render_profile(homology(Sphere(2)))
    'H0 = Z\\nH1 = 0\\nH2 = Z'
    """
    if isinstance(space, Sphere):
        return _sphere_profile(space.n)
    if isinstance(space, Explicit):
        return homology_of_complex(space.complex)
    if isinstance(space, Wedge):
        dim = dim_of(space)
        groups: dict[int, FgAbelianGroup] = {0: FgAbelianGroup(free_rank=1)}
        for k in range(1, dim + 1):
            total = TRIVIAL_GROUP
            for part in space.parts:
                total = direct_sum(total, homology(part).group(k))
            groups[k] = total
        return HomologyProfile(dim, groups)
    if isinstance(space, Product):
        coeffs = [1]
        for factor in space.factors:
            profile = homology(factor)
            factor_coeffs = []
            for k in range(profile.dim + 1):
                group = profile.group(k)
                if group.torsion:
                    raise TorsionNotSupported(
                        f"product factor has torsion in degree {k}; the "
                        "torsion-free Kunneth rule does not apply"
                    )
                factor_coeffs.append(group.free_rank)
            coeffs = _convolve(coeffs, factor_coeffs)
        groups = {
            k: FgAbelianGroup(free_rank=r) for k, r in enumerate(coeffs) if r
        }
        return HomologyProfile(len(coeffs) - 1, groups)
    raise TypeError(f"not a SpaceExpr: {space!r}")


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poincare_polynomial(space: SpaceExpr) -> list[int]:
    """Coefficient list: coefficient of x^k is the free rank of H_k; torsion
    anywhere is an error."""
    profile = homology(space)
    for k in range(profile.dim + 1):
        group = profile.group(k)
        if group.torsion:
            raise TorsionNotSupported(
                f"homology has torsion in degree {k}; no Poincare polynomial"
            )
    return [profile.group(k).free_rank for k in range(profile.dim + 1)]


def _contains_circle(space: SpaceExpr) -> bool:
    if isinstance(space, Sphere):
        return space.n == 1
    if isinstance(space, Wedge):
        return any(_contains_circle(p) for p in space.parts)
    if isinstance(space, Product):
        return any(_contains_circle(f) for f in space.factors)
    if isinstance(space, Explicit):
        return not isinstance(space.pi1, Trivial)
    raise TypeError(f"not a SpaceExpr: {space!r}")


def _flat_parts(space: Wedge) -> list[SpaceExpr]:
    out: list[SpaceExpr] = []
    for p in space.parts:
        if isinstance(p, Wedge):
            out.extend(_flat_parts(p))
        else:
            out.append(p)
    return out


def _flat_factors(space: Product) -> list[SpaceExpr]:
    out: list[SpaceExpr] = []
    for f in space.factors:
        if isinstance(f, Product):
            out.extend(_flat_factors(f))
        else:
            out.append(f)
    return out


def sphere_wedge_counts(space: SpaceExpr) -> "dict[int, int] | None":
    """If the space is a sphere or a wedge of spheres (after flattening),
    the number of spheres per degree; otherwise None."""
    if isinstance(space, Sphere):
        return {space.n: 1}
    if isinstance(space, Wedge):
        counts: dict[int, int] = {}
        for part in _flat_parts(space):
            if not isinstance(part, Sphere):
                return None
            counts[part.n] = counts.get(part.n, 0) + 1
        return counts
    return None


def sphere_product_dims(space: SpaceExpr) -> "list[int] | None":
    """If the space is a sphere or a product of spheres (after flattening),
    the list of factor dimensions in order; otherwise None."""
    if isinstance(space, Sphere):
        return [space.n]
    if isinstance(space, Product):
        dims: list[int] = []
        for factor in _flat_factors(space):
            if not isinstance(factor, Sphere):
                return None
            dims.append(factor.n)
        return dims
    return None


def universal_cover_homology(space: SpaceExpr) -> HomologyProfile:
    """Homology of the universal cover, for the closed list of supported
    shapes described in the module docstring."""
    if not _contains_circle(space):
        return homology(space)
    if isinstance(space, Explicit):
        if space.cover is not None:
            return homology_of_complex(space.cover)
        raise UnsupportedConstruction(
            "explicit complex with nontrivial fundamental group needs a "
            "user-supplied cover complex"
        )
    if isinstance(space, Sphere):
        # the circle: covered by the line, which is contractible
        return _point_profile()
    if isinstance(space, Product):
        remaining = [f for f in _flat_factors(space) if f != Sphere(1)]
        if not remaining:
            return _point_profile()
        if any(_contains_circle(f) for f in remaining):
            raise UnsupportedConstruction(
                "product has a circle inside a composite factor; only "
                "top-level circle factors can be dropped"
            )
        return universal_cover_homology(product(*remaining))
    if isinstance(space, Wedge):
        parts = _flat_parts(space)
        if not all(isinstance(p, Sphere) for p in parts):
            raise UnsupportedConstruction(
                "wedge with a circle is only supported when every part is a sphere"
            )
        higher = sorted({p.n for p in parts if p.n >= 2})
        if not higher:
            raise UnsupportedConstruction(
                "wedge of circles only: no cover rule in the supported list"
            )
        dim = max(higher)
        groups: dict[int, FgAbelianGroup | None] = {0: FgAbelianGroup(free_rank=1)}
        flags: dict[int, bool | None] = {}
        for n in higher:
            groups[n] = None
            flags[n] = False
        return HomologyProfile(dim, groups, flags)
    raise TypeError(f"not a SpaceExpr: {space!r}")


def pi1_of(space: SpaceExpr) -> Pi1Descriptor:
    """Fundamental group over the supported constructions; combinations that
    leave the five descriptor shapes raise UnsupportedConstruction."""
    if isinstance(space, Sphere):
        return free(1) if space.n == 1 else Trivial()
    if isinstance(space, Explicit):
        return space.pi1
    if isinstance(space, Wedge):
        # free product of the parts; only free/trivial parts stay in the
        # descriptor family
        rank = 0
        for p in space.parts:
            d = pi1_of(p)
            if isinstance(d, Trivial):
                continue
            if isinstance(d, Free):
                rank += d.rank
            elif isinstance(d, FgAbelian) and d.group == FgAbelianGroup(free_rank=1):
                rank += 1
            else:
                raise UnsupportedConstruction(
                    "wedge part has a fundamental group that makes the free "
                    "product leave the supported descriptor shapes"
                )
        return free(rank)
    if isinstance(space, Product):
        finite_groups = []
        abelian = TRIVIAL_GROUP
        free_ranks: list[int] = []
        for f in space.factors:
            d = pi1_of(f)
            if isinstance(d, Trivial):
                continue
            if isinstance(d, Free):
                if d.rank == 1:
                    abelian = direct_sum(abelian, FgAbelianGroup(free_rank=1))
                else:
                    free_ranks.append(d.rank)
            elif isinstance(d, FgAbelian):
                abelian = direct_sum(abelian, d.group)
            elif isinstance(d, Finite):
                finite_groups.append(d.group)
            else:
                raise UnsupportedConstruction(
                    "product factor has a fundamental group outside the "
                    "supported descriptor shapes"
                )
        kinds = sum(
            (1 if finite_groups else 0, 1 if not abelian.is_trivial else 0,
             1 if free_ranks else 0)
        )
        if kinds > 1 or len(free_ranks) > 1:
            raise UnsupportedConstruction(
                "product mixes fundamental-group shapes with no descriptor "
                "for their direct product"
            )
        if free_ranks:
            return Free(free_ranks[0])
        if finite_groups:
            if len(finite_groups) == 1:
                return Finite(finite_groups[0])
            return Finite(direct_product(*finite_groups))
        return fg_abelian(abelian)
    raise TypeError(f"not a SpaceExpr: {space!r}")


def complex_to_json(complex_: ChainComplex) -> dict:
    return {
        "cells": list(complex_.cells),
        "boundary": [b.to_rows() for b in complex_.boundary],
    }


def complex_from_json(obj) -> ChainComplex:
    if not isinstance(obj, dict) or "cells" not in obj:
        raise ValueError('chain complex JSON needs a "cells" list')
    unknown = set(obj) - {"cells", "boundary"}
    if unknown:
        raise ValueError(f"unknown chain complex fields: {sorted(unknown)}")
    cells = [int(c) for c in obj["cells"]]
    if not cells:
        raise ValueError("cells list must be nonempty")
    raw = obj.get("boundary", [])
    if len(raw) != len(cells) - 1:
        raise ValueError(
            f"need {len(cells) - 1} boundary matrices for {len(cells)} cell "
            f"counts, got {len(raw)}"
        )
    boundary = [
        IntMatrix.from_rows(rows, cols=cells[k + 1]) for k, rows in enumerate(raw)
    ]
    return ChainComplex(dim=len(cells) - 1, boundary=tuple(boundary), cells=tuple(cells))


def space_to_json(space: SpaceExpr) -> dict:
    if isinstance(space, Sphere):
        return {"sphere": space.n}
    if isinstance(space, Wedge):
        return {"wedge": [space_to_json(p) for p in space.parts]}
    if isinstance(space, Product):
        return {"product": [space_to_json(f) for f in space.factors]}
    if isinstance(space, Explicit):
        body = {
            "complex": complex_to_json(space.complex),
            "pi1": pi1_to_json(space.pi1),
        }
        if space.cover is not None:
            body["cover"] = complex_to_json(space.cover)
        return {"explicit": body}
    raise TypeError(f"not a SpaceExpr: {space!r}")


def space_from_json(obj) -> SpaceExpr:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(
            "space must be an object with exactly one of the keys "
            "sphere/wedge/product/explicit"
        )
    (tag, value), = obj.items()
    if tag == "sphere":
        return Sphere(int(value))
    if tag == "wedge":
        if not isinstance(value, list) or not value:
            raise ValueError("wedge needs a nonempty list of parts")
        return wedge(*(space_from_json(p) for p in value))
    if tag == "product":
        if not isinstance(value, list) or not value:
            raise ValueError("product needs a nonempty list of factors")
        return product(*(space_from_json(f) for f in value))
    if tag == "explicit":
        if not isinstance(value, dict) or "complex" not in value or "pi1" not in value:
            raise ValueError('explicit space needs "complex" and "pi1" fields')
        unknown = set(value) - {"complex", "pi1", "cover"}
        if unknown:
            raise ValueError(f"unknown explicit fields: {sorted(unknown)}")
        cover = (
            complex_from_json(value["cover"]) if "cover" in value else None
        )
        return Explicit(
            complex=complex_from_json(value["complex"]),
            pi1=pi1_from_json(value["pi1"]),
            cover=cover,
        )
    raise ValueError(f"unknown space tag {tag!r}")


def _cc(cells: tuple[int, ...], *boundary) -> ChainComplex:
    return ChainComplex(dim=len(cells) - 1, boundary=tuple(boundary), cells=cells)


EXAMPLE_COMPLEXES: dict[str, ChainComplex] = {
    "point": _cc((1,)),
    "interval": _cc((2, 1), IntMatrix.from_rows([[-1], [1]])),
    "circle": _cc((1, 1), IntMatrix.from_rows([[0]])),
    "sphere2": _cc((1, 0, 1), IntMatrix.zeros(1, 0), IntMatrix.zeros(0, 1)),
    "sphere3": _cc(
        (1, 0, 0, 1),
        IntMatrix.zeros(1, 0),
        IntMatrix.zeros(0, 0),
        IntMatrix.zeros(0, 1),
    ),
    "torus": _cc(
        (1, 2, 1), IntMatrix.zeros(1, 2), IntMatrix.from_rows([[0], [0]])
    ),
    "projective-plane": _cc(
        (1, 1, 1), IntMatrix.from_rows([[0]]), IntMatrix.from_rows([[2]])
    ),
    "klein-bottle": _cc(
        (1, 2, 1), IntMatrix.zeros(1, 2), IntMatrix.from_rows([[2], [0]])
    ),
    "genus2-surface": _cc(
        (1, 4, 1), IntMatrix.zeros(1, 4), IntMatrix.from_rows([[0]] * 4)
    ),
}
