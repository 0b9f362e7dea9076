"""Finite groups as Cayley tables: subgroups, complements, retracts, and the
three splitting-series lengths with explicit witnesses.

The three lengths come from three different searches:

* ``n1`` — longest chain from the whole group down to the trivial subgroup in
  which every term is normal in the whole group and has some complement there
  (the complement itself need not be normal);
* ``n2`` — longest strictly decreasing chain in which every term is a retract
  of the whole group (no normality required between consecutive terms);
* ``n3`` — recursive: one plus the maximum of ``n3`` over proper retracts,
  where each recursion step works inside the subgroup with the operation
  restricted to it.

They are provably equal for finite groups; computing them independently and
comparing is the point (see ``verify_prop32``).  Witness chains are chosen by
a fixed deterministic ordering (larger subgroups first, then smaller member
mask); lengths are the contract, witnesses are evidence.

Subgroups are bitmasks over element indices, so all the searches are integer
arithmetic on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import OrderExceedsCap

DEFAULT_SEARCH_CAP = 32


class FiniteGroup:
    """Group on elements 0..n-1 given by its multiplication table.

    Element 0 is the identity.  The constructor checks the full group axioms
    (Latin square, identity, associativity), so a ``FiniteGroup`` that exists
    is a group; downstream searches never re-validate.
    """

    __slots__ = ("order", "table", "name", "_inv", "_subgroup_masks")

    def __init__(self, table: Iterable[Iterable[int]], name: str | None = None):
        tbl = tuple(tuple(int(x) for x in row) for row in table)
        n = len(tbl)
        if n == 0:
            raise ValueError("empty Cayley table")
        for i, row in enumerate(tbl):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"entry {x} out of range in row {i}")
        for a in range(n):
            if tbl[0][a] != a or tbl[a][0] != a:
                raise ValueError("element 0 does not act as a two-sided identity")
        for a in range(n):
            if len(set(tbl[a])) != n:
                raise ValueError(f"row {a} is not a permutation")
        for b in range(n):
            if len({tbl[a][b] for a in range(n)}) != n:
                raise ValueError(f"column {b} is not a permutation")
        for a in range(n):
            ta = tbl[a]
            for b in range(n):
                ab_row = tbl[ta[b]]
                tb = tbl[b]
                for c in range(n):
                    if ab_row[c] != ta[tb[c]]:
                        raise ValueError(f"associativity fails at ({a},{b},{c})")
        self.order = n
        self.table = tbl
        self.name = name
        self._inv = tuple(tbl[a].index(0) for a in range(n))
        self._subgroup_masks: tuple[int, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        label = self.name or f"order-{self.order} group"
        return f"FiniteGroup({label})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, order=True)
class Subgroup:
    """Subgroup of some fixed ambient group, stored as a member bitmask."""

    mask: int

    def __post_init__(self):
        if self.mask < 1 or not self.mask & 1:
            raise ValueError("a subgroup must contain the identity (bit 0)")

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def contains(self, a: int) -> bool:
        return bool((self.mask >> a) & 1)

    @classmethod
    def from_members(cls, members: Iterable[int]) -> Subgroup:
        mask = 0
        for a in members:
            mask |= 1 << a
        return cls(mask)


@dataclass(frozen=True)
class SeriesResult:
    """A maximal series: its length, the chain of subgroups from the whole
    group down to the trivial one, and one witness complement per term
    (complements taken in the ambient group)."""

    length: int
    witness: tuple[Subgroup, ...]
    complements: tuple[Subgroup, ...]

    def __post_init__(self):
        assert self.length == len(self.witness) - 1
        assert len(self.complements) == len(self.witness)


def _check_cap(g: FiniteGroup, cap: int):
    if g.order > cap:
        raise OrderExceedsCap(g.order, cap)


def _closure_mask(g: FiniteGroup, seed: int) -> int:
    """Smallest subgroup mask containing the seed elements."""
    table = g.table
    mask = seed | 1
    elems = _bits(mask)
    pos = 0
    while pos < len(elems):
        a = elems[pos]
        pos += 1
        for b in elems[:pos]:
            for prod in (table[a][b], table[b][a]):
                if not (mask >> prod) & 1:
                    mask |= 1 << prod
                    elems.append(prod)
    return mask


def _subgroup_masks_within(g: FiniteGroup, ambient: int) -> list[int]:
    """All subgroup masks contained in the subgroup `ambient`, by growing
    generated subgroups one generator at a time."""
    found = {1}
    frontier = [1]
    candidates = _bits(ambient)
    while frontier:
        fresh = []
        for mask in frontier:
            for x in candidates:
                if not (mask >> x) & 1:
                    grown = _closure_mask(g, mask | (1 << x))
                    if grown not in found:
                        found.add(grown)
                        fresh.append(grown)
        frontier = fresh
    return sorted(found, key=lambda m: (m.bit_count(), m))


def _is_normal_within(g: FiniteGroup, ambient: int, h: int) -> bool:
    table = g.table
    inv = g._inv
    members = _bits(h)
    for a in _bits(ambient):
        ai = inv[a]
        ta = table[a]
        for x in members:
            if not (h >> table[ta[x]][ai]) & 1:
                return False
    return True


def all_subgroups(g: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> list[Subgroup]:
    """Complete subgroup list, sorted by (order, member mask)."""
    _check_cap(g, cap)
    if g._subgroup_masks is None:
        full = (1 << g.order) - 1
        g._subgroup_masks = tuple(_subgroup_masks_within(g, full))
    return [Subgroup(m) for m in g._subgroup_masks]


def subgroup_from_members(g: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validated construction: the member set must already be a subgroup."""
    sub = Subgroup.from_members(members)
    if _closure_mask(g, sub.mask) != sub.mask:
        raise ValueError("member set is not closed under the group operation")
    return sub


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    return _is_normal_within(g, (1 << g.order) - 1, h.mask)


def is_complement(g: FiniteGroup, h: Subgroup, k: Subgroup) -> bool:
    """K complements H when they meet only in the identity and HK is all of G
    (equivalently |H| * |K| = |G| once the intersection is trivial)."""
    return (h.mask & k.mask) == 1 and h.order * k.order == g.order


def is_retract(g: FiniteGroup, h: Subgroup, cap: int = DEFAULT_SEARCH_CAP) -> bool:
    """A retract is a subgroup with a normal complement."""
    for k in all_subgroups(g, cap):
        if is_complement(g, h, k) and is_normal(g, k):
            return True
    return False


def restrict_to_subgroup(
    g: FiniteGroup, sub: Subgroup, name: str | None = None
) -> FiniteGroup:
    """The subgroup as a standalone group; element order follows member order,
    so the identity stays at index 0."""
    members = sub.members()
    index = {glob: loc for loc, glob in enumerate(members)}
    table = [[index[g.table[a][b]] for b in members] for a in members]
    return FiniteGroup(table, name=name)


def _find_complement(
    g: FiniteGroup,
    h: int,
    subs: list[int],
    normal_masks: frozenset[int] | None = None,
) -> int | None:
    # first hit in (order, mask) order keeps witnesses deterministic
    n = g.order
    h_order = h.bit_count()
    for k in subs:
        if (h & k) == 1 and h_order * k.bit_count() == n:
            if normal_masks is None or k in normal_masks:
                return k
    return None


def _longest_chain(full: int, cands: dict[int, int]) -> tuple[list[int], list[int]]:
    """Longest strictly decreasing chain (by inclusion) from `full` to the
    trivial mask through keys of `cands`; returns the chain and the matching
    complement witnesses.  Both endpoints are always candidates."""
    ordered = sorted(cands, key=lambda m: (-m.bit_count(), m))
    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def down(mask: int) -> tuple[int, tuple[int, ...]]:
        if mask == 1:
            return 0, (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best_len = -1
        best_chain: tuple[int, ...] = ()
        for c in ordered:
            if c != mask and c & mask == c:
                length, chain = down(c)
                if length + 1 > best_len:
                    best_len = length + 1
                    best_chain = (mask,) + chain
        memo[mask] = (best_len, best_chain)
        return memo[mask]

    _, chain = down(full)
    return list(chain), [cands[m] for m in chain]


def n1(g: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> SeriesResult:
    """Longest series of subgroups normal in G, each with some complement in G.

    >>> zmod6 = FiniteGroup([[ (a + b) % 6 for b in range(6)] for a in range(6)])
    >>> n1(zmod6).length
    2
    """
    _check_cap(g, cap)
    subs = [s.mask for s in all_subgroups(g, cap)]
    full = (1 << g.order) - 1
    cands: dict[int, int] = {}
    for h in subs:
        if _is_normal_within(g, full, h):
            k = _find_complement(g, h, subs)
            if k is not None:
                cands[h] = k
    chain, comps = _longest_chain(full, cands)
    return SeriesResult(
        length=len(chain) - 1,
        witness=tuple(Subgroup(m) for m in chain),
        complements=tuple(Subgroup(m) for m in comps),
    )


def n2(g: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> SeriesResult:
    """Longest strictly decreasing chain of retracts of G; the stored
    complement witnesses are the normal complements."""
    _check_cap(g, cap)
    subs = [s.mask for s in all_subgroups(g, cap)]
    full = (1 << g.order) - 1
    normal_masks = frozenset(h for h in subs if _is_normal_within(g, full, h))
    cands: dict[int, int] = {}
    for h in subs:
        k = _find_complement(g, h, subs, normal_masks)
        if k is not None:
            cands[h] = k
    chain, comps = _longest_chain(full, cands)
    return SeriesResult(
        length=len(chain) - 1,
        witness=tuple(Subgroup(m) for m in chain),
        complements=tuple(Subgroup(m) for m in comps),
    )


def _retract_masks_within(g: FiniteGroup, ambient: int) -> list[int]:
    subs = _subgroup_masks_within(g, ambient)
    normals = [k for k in subs if _is_normal_within(g, ambient, k)]
    size = ambient.bit_count()
    out = []
    for h in subs:
        h_order = h.bit_count()
        if any((h & k) == 1 and h_order * k.bit_count() == size for k in normals):
            out.append(h)
    return out


def _n3_chain(g: FiniteGroup, cap: int) -> tuple[int, tuple[int, ...]]:
    _check_cap(g, cap)
    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def rec(mask: int) -> tuple[int, tuple[int, ...]]:
        if mask == 1:
            return 0, (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best_len = -1
        best_chain: tuple[int, ...] = ()
        rets = sorted(_retract_masks_within(g, mask), key=lambda m: (-m.bit_count(), m))
        for r in rets:
            if r == mask:
                continue
            length, chain = rec(r)
            if length > best_len:
                best_len = length
                best_chain = chain
        result = (1 + best_len, (mask,) + best_chain)
        memo[mask] = result
        return result

    return rec((1 << g.order) - 1)


def n3(g: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Recursive length: 0 for the trivial group, else one plus the maximum
    over proper retracts, with retracts recomputed inside each subgroup."""
    return _n3_chain(g, cap)[0]


@dataclass(frozen=True)
class Prop32Report:
    """The three lengths computed independently, with witnesses."""

    order: int
    name: str | None
    n1: SeriesResult
    n2: SeriesResult
    n3: int
    n3_chain: tuple[Subgroup, ...]

    @property
    def equal(self) -> bool:
        return self.n1.length == self.n2.length == self.n3

    @property
    def value(self) -> int:
        return self.n1.length


def verify_prop32(g: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> Prop32Report:
    """Compute n1, n2, n3 by their separate searches and report whether they
    agree.  Disagreement means a bug (or a counterexample); callers must
    surface it loudly rather than picking one value."""
    r1 = n1(g, cap)
    r2 = n2(g, cap)
    v3, chain = _n3_chain(g, cap)
    return Prop32Report(
        order=g.order,
        name=g.name,
        n1=r1,
        n2=r2,
        n3=v3,
        n3_chain=tuple(Subgroup(m) for m in chain),
    )


def describe_subgroup(g: FiniteGroup, sub: Subgroup) -> str:
    """Short structural label: "1" for trivial, the group's name (or "Zn" /
    "Gn") for the whole group, "Zk" for cyclic proper subgroups, "Hk" for
    the rest.  Used in witness renderings like "Z6>Z3>1"."""
    if sub.order == 1:
        return "1"
    is_cyclic = any(
        _closure_mask(g, 1 | (1 << x)) == sub.mask for x in sub.members()
    )
    if sub.order == g.order:
        if g.name:
            return g.name
        return f"Z{g.order}" if is_cyclic else f"G{g.order}"
    return f"Z{sub.order}" if is_cyclic else f"H{sub.order}"


def render_series(g: FiniteGroup, series: SeriesResult) -> str:
    return ">".join(describe_subgroup(g, s) for s in series.witness)


def parse_cayley_table(text: str, name: str | None = None) -> FiniteGroup:
    """Cayley-table text format: the order n on the first line, then n lines
    of n space-separated element indices; index 0 is the identity."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty Cayley table input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in Cayley table: {exc}") from None
    n = values[0]
    if n < 1:
        raise ValueError(f"declared order must be >= 1, got {n}")
    if len(values) != 1 + n * n:
        raise ValueError(
            f"expected {n * n} table entries for order {n}, got {len(values) - 1}"
        )
    rows = [values[1 + i * n : 1 + (i + 1) * n] for i in range(n)]
    return FiniteGroup(rows, name=name)


def format_cayley_table(g: FiniteGroup) -> str:
    lines = [str(g.order)]
    lines.extend(" ".join(str(x) for x in row) for row in g.table)
    return "\n".join(lines) + "\n"
