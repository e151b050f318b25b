"""Disconnector enumeration, sign-split checks and the unmixedness oracle.

A set ``S`` is a disconnector when deleting any single ``s`` from ``S``
strictly decreases ``b + c`` of the complement graph (``c`` components,
``b`` bipartite ones).  A disconnector is sign-split when the non-bipartite
components of ``G - S`` admit a two-valued sign assignment in which, for
every ``s`` whose reconnection set consists of non-bipartite components
only, those components do not all carry the same sign.  The sign-split
disconnectors index the minimal primes of the parity binomial edge ideal;
the one whose height differs exposes a non-unmixed ideal.

Everything here is exhaustive by design: this module is the independent
oracle the rest of the package is checked against, so it favours direct
definitions over cleverness.  Subsets are scanned in ascending (size,
lexicographic) order, which makes every reported witness minimal and the
output order reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping

from .graphs import (
    Graph,
    RemovalProfile,
    component_counts,
    connected_components,
    removal_profile,
)

DEFAULT_MAX_N = 20


class SizeCapError(ValueError):
    """Raised when a graph exceeds the exhaustive-scan vertex cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"graph has {n} vertices; the exhaustive scan is capped at {cap}. "
            f"Raise the cap explicitly if the wait is acceptable."
        )
        self.n = n
        self.cap = cap


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


SignAssignment = Mapping[int, Sign]


@dataclass(frozen=True)
class DisconnectorRecord:
    """One sign-split disconnector with its removal profile and height."""

    s: frozenset[int]
    profile: RemovalProfile
    witness: tuple[tuple[int, Sign], ...]  # one valid sign per non-bipartite component
    height: int


@dataclass(frozen=True)
class OracleVerdict:
    unmixed: bool
    witness: frozenset[int] | None  # minimum-size violating disconnector

    def __bool__(self) -> bool:
        return self.unmixed


@dataclass(frozen=True)
class SpectrumReport:
    records: tuple[DisconnectorRecord, ...]
    heights: tuple[int, ...]
    krull_dimension: int
    unmixed: bool
    witness: frozenset[int] | None


# ---------------------------------------------------------------------------
# Elementary predicates


def is_cut_set(g: Graph, s: Iterable[int]) -> bool:
    """Every member must reconnect at least two components when put back."""
    ss = frozenset(s)
    c_full, _ = component_counts(g, ss)
    for v in ss:
        c_without, _ = component_counts(g, ss - {v})
        if not c_full > c_without:
            return False
    return True


def is_disconnector(g: Graph, s: Iterable[int]) -> bool:
    """Every member must strictly decrease ``b + c`` when put back.

    The empty set is always a disconnector.
    """
    ss = frozenset(s)
    c_full, b_full = component_counts(g, ss)
    total = c_full + b_full
    for v in ss:
        c_w, b_w = component_counts(g, ss - {v})
        if not total > c_w + b_w:
            return False
    return True


# ---------------------------------------------------------------------------
# Sign-split assignments


def _constraints(profile: RemovalProfile) -> list[frozenset[int]] | None:
    """Reconnection families that must not become monochromatic.

    Returns ``None`` when some member of ``S`` has an empty reconnection
    set, which no assignment can satisfy (and which no true disconnector
    produces).
    """
    out: list[frozenset[int]] = []
    for v in sorted(profile.removed):
        comps = profile.reconnect[v]
        if not comps:
            return None
        if all(not profile.bipartite[i] for i in comps):
            out.append(frozenset(comps))
    return out


def sign_split_assignment(
    g: Graph,
    s: Iterable[int],
    profile: RemovalProfile | None = None,
    method: str = "auto",
) -> dict[int, Sign] | None:
    """A sign per non-bipartite component making no constrained family
    monochromatic, or ``None`` when no such assignment exists.

    ``method='auto'`` applies two shortcuts before searching: when every
    member of ``S`` touches a bipartite component there is nothing to
    satisfy, and when one non-bipartite component meets every member's
    reconnection set it takes one sign and everything else the other.
    ``method='exhaustive'`` always searches all assignments; both methods
    agree on existence.
    """
    ss = frozenset(s)
    if profile is None:
        profile = removal_profile(g, ss)
    if not is_disconnector(g, ss):
        raise ValueError(f"{sorted(ss)} is not a disconnector")
    nonbip = [i for i, flag in enumerate(profile.bipartite) if not flag]
    constraints = _constraints(profile)
    if constraints is None:
        return None
    if not constraints:
        return {i: Sign.PLUS for i in nonbip}
    if any(len(e) <= 1 for e in constraints):
        return None
    if method == "auto":
        common = frozenset(nonbip)
        for e in constraints:
            common &= e
        hit_all = [
            i
            for i in sorted(common)
            if all(i in profile.reconnect[v] for v in profile.removed)
        ]
        if hit_all:
            fixed = hit_all[0]
            return {
                i: (Sign.PLUS if i == fixed else Sign.MINUS) for i in nonbip
            }
    # exhaustive search over the constrained components, earliest valid wins
    constrained = sorted({i for e in constraints for i in e})
    k = len(constrained)
    for bits in range(1 << k):
        signs = {
            comp: (Sign.MINUS if bits >> j & 1 else Sign.PLUS)
            for j, comp in enumerate(constrained)
        }
        if all(len({signs[i] for i in e}) > 1 for e in constraints):
            out = {i: Sign.PLUS for i in nonbip}
            out.update(signs)
            return out
    return None


# ---------------------------------------------------------------------------
# Fast component counting on bitmasks (for the exhaustive scans)


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _counts_for_mask(masks: list[int], full: int, removed: int) -> tuple[int, int]:
    rem = full & ~removed
    c = b = 0
    while rem:
        frontier = rem & -rem
        comp = frontier
        colors = [frontier, 0]
        parity = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & rem & ~comp
            comp |= frontier
            parity ^= 1
            colors[parity] |= frontier
        bip = True
        for side in colors:
            m = side
            while m:
                low = m & -m
                if masks[low.bit_length() - 1] & side:
                    bip = False
                    break
                m ^= low
            if not bip:
                break
        c += 1
        if bip:
            b += 1
        rem &= ~comp
    return c, b


class _Scanner:
    """Memoized (c, b) counts over vertex subsets of one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.masks = _adj_masks(g)
        self.full = (1 << g.n) - 1
        self.memo: dict[int, tuple[int, int]] = {}

    def counts(self, removed_mask: int) -> tuple[int, int]:
        got = self.memo.get(removed_mask)
        if got is None:
            got = _counts_for_mask(self.masks, self.full, removed_mask)
            self.memo[removed_mask] = got
        return got

    def is_disconnector_mask(self, removed_mask: int, members: tuple[int, ...]) -> bool:
        c, b = self.counts(removed_mask)
        total = c + b
        for v in members:
            cw, bw = self.counts(removed_mask & ~(1 << v))
            if not total > cw + bw:
                return False
        return True


def _subsets_ascending(n: int):
    """All subsets of 0..n-1 as (members, mask), ascending by size then
    lexicographic member tuple."""
    yield (), 0
    for size in range(1, n + 1):
        for members in combinations(range(n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            yield members, mask


# ---------------------------------------------------------------------------
# Enumeration, oracle, heights


def enumerate_sign_split_disconnectors(
    g: Graph, max_n: int = DEFAULT_MAX_N
) -> tuple[DisconnectorRecord, ...]:
    """All sign-split disconnectors of ``g`` with profiles, witnesses and
    heights, in (size, lexicographic) order.  The empty set is always the
    first record."""
    if g.n > max_n:
        raise SizeCapError(g.n, max_n)
    scan = _Scanner(g)
    out: list[DisconnectorRecord] = []
    for members, mask in _subsets_ascending(g.n):
        if not scan.is_disconnector_mask(mask, members):
            continue
        ss = frozenset(members)
        profile = removal_profile(g, ss)
        witness = sign_split_assignment(g, ss, profile=profile)
        if witness is None:
            continue
        height = len(ss) + g.n - profile.b
        out.append(
            DisconnectorRecord(
                ss,
                profile,
                tuple(sorted(witness.items())),
                height,
            )
        )
    return tuple(out)


def unmixedness_oracle(g: Graph, max_n: int = DEFAULT_MAX_N) -> OracleVerdict:
    """Exhaustively decide unmixedness: every sign-split disconnector ``S``
    must satisfy ``b(G - S) == |S| + b(G)``.

    Disconnected graphs are handled per component (their disconnectors are
    exactly the unions of per-component ones); the verdict is the
    conjunction and the witness comes from the first failing component.
    """
    if g.n > max_n:
        raise SizeCapError(g.n, max_n)
    comps = connected_components(g)
    if len(comps) > 1:
        for comp in comps:
            sub = g.induced(comp)
            sub_verdict = unmixedness_oracle(sub, max_n=max_n)
            if not sub_verdict.unmixed:
                assert sub_verdict.witness is not None
                lifted = frozenset(
                    g.index_of(sub.labels[v]) for v in sub_verdict.witness
                )
                return OracleVerdict(False, lifted)
        return OracleVerdict(True, None)

    scan = _Scanner(g)
    _, b_base = scan.counts(0)
    for members, mask in _subsets_ascending(g.n):
        if not scan.is_disconnector_mask(mask, members):
            continue
        _, b_here = scan.counts(mask)
        if b_here == len(members) + b_base:
            continue
        ss = frozenset(members)
        if sign_split_assignment(g, ss) is not None:
            return OracleVerdict(False, ss)
    return OracleVerdict(True, None)


def spectrum_report(g: Graph, max_n: int = DEFAULT_MAX_N) -> SpectrumReport:
    """Full spectrum summary: records, height multiset, Krull dimension and
    the unmixedness verdict with a minimal witness."""
    records = enumerate_sign_split_disconnectors(g, max_n=max_n)
    heights = tuple(sorted(r.height for r in records))
    _, b_base = component_counts(g, frozenset())
    witness = None
    for r in records:
        if r.profile.b != len(r.s) + b_base:
            witness = r.s
            break
    return SpectrumReport(
        records=records,
        heights=heights,
        krull_dimension=2 * g.n - min(heights),
        unmixed=witness is None,
        witness=witness,
    )


def minimal_prime_heights(g: Graph, max_n: int = DEFAULT_MAX_N) -> tuple[int, ...]:
    """One height per sign-split disconnector (multiple sign choices over a
    single disconnector share a height)."""
    return spectrum_report(g, max_n=max_n).heights


def krull_dimension(g: Graph, max_n: int = DEFAULT_MAX_N) -> int:
    return spectrum_report(g, max_n=max_n).krull_dimension
