"""Superpartitions, dotted compositions and the orders on them.

A superpartition is stored as ``(fermionic; symmetric)`` where the fermionic
parts are strictly decreasing (a trailing 0 is allowed) and the symmetric parts
form an ordinary partition.  A dotted composition is a tuple of
``(value, dotted)`` pairs; dotted values may be 0, undotted values are >= 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional


class Bidegree(NamedTuple):
    n: int  # total degree
    m: int  # fermionic degree


# ----------------------------------------------------------------------------
# partitions


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Ordinary partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """Classical dominance ``lam >= mu`` for partitions of the same size."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def _distinct_parts(total: int, count: int, below: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing ``count``-tuples of nonnegative ints < ``below`` summing to ``total``."""
    if count == 0:
        if total == 0:
            yield ()
        return
    # the remaining count-1 parts are at least 0,1,...,count-2
    for first in range(min(total, below - 1), count - 2, -1):
        for rest in _distinct_parts(total - first, count - 1, first):
            yield (first,) + rest


# ----------------------------------------------------------------------------
# superpartitions


@dataclass(frozen=True)
class SuperPartition:
    fermionic: tuple[int, ...] = ()
    symmetric: tuple[int, ...] = ()

    def __post_init__(self):
        ferm = tuple(int(a) for a in self.fermionic)
        sym = tuple(int(a) for a in self.symmetric)
        while sym and sym[-1] == 0:
            sym = sym[:-1]
        if any(a < 0 for a in ferm) or any(a < 0 for a in sym):
            raise ValueError(f"negative part in superpartition {ferm};{sym}")
        if any(ferm[i] <= ferm[i + 1] for i in range(len(ferm) - 1)):
            raise ValueError(f"fermionic parts must be strictly decreasing: {ferm}")
        if any(sym[i] < sym[i + 1] for i in range(len(sym) - 1)) or 0 in sym:
            raise ValueError(f"symmetric parts must form a partition: {sym}")
        object.__setattr__(self, "fermionic", ferm)
        object.__setattr__(self, "symmetric", sym)

    @classmethod
    def parse(cls, text: str) -> "SuperPartition":
        """Parse ``"3,1,0;2,1"``; both halves may be empty."""
        if ";" not in text:
            raise ValueError(f"superpartition literal needs ';': {text!r}")
        left, right = text.split(";", 1)

        def ints(s):
            s = s.strip()
            return tuple(int(x) for x in s.split(",")) if s else ()

        return cls(ints(left), ints(right))

    @property
    def n(self) -> int:
        return sum(self.fermionic) + sum(self.symmetric)

    @property
    def m(self) -> int:
        return len(self.fermionic)

    @property
    def bidegree(self) -> Bidegree:
        return Bidegree(self.n, self.m)

    def __len__(self) -> int:
        return len(self.fermionic) + len(self.symmetric)

    def star(self) -> tuple[int, ...]:
        """Partition with circles deleted."""
        return tuple(sorted((a for a in self.fermionic + self.symmetric if a), reverse=True))

    def circled(self) -> tuple[int, ...]:
        """Partition with every circle filled in as a box."""
        return tuple(sorted([a + 1 for a in self.fermionic] + list(self.symmetric), reverse=True))

    @classmethod
    def from_diagrams(cls, star: tuple[int, ...], circled: tuple[int, ...]) -> "SuperPartition":
        ferm, sym = [], []
        for i in range(len(circled)):
            s = star[i] if i < len(star) else 0
            diff = circled[i] - s
            if diff == 1:
                ferm.append(s)
            elif diff == 0:
                sym.append(s)
            else:
                raise ValueError(f"not a superpartition diagram: {star}, {circled}")
        return cls(tuple(ferm), tuple(sym))

    def conjugate(self) -> "SuperPartition":
        return SuperPartition.from_diagrams(
            conjugate_partition(self.star()), conjugate_partition(self.circled())
        )

    def as_composition(self) -> "DottedComposition":
        """``(dotted fermionic parts, symmetric parts)`` read as a dotted composition."""
        return DottedComposition(
            tuple((a, True) for a in self.fermionic) + tuple((a, False) for a in self.symmetric)
        )

    def order_key(self):
        """Lexicographic key on (circled, star); extends dominance."""
        return (self.circled(), self.star())

    def sort_key(self):
        return (self.n + self.m, self.n, tuple(-a for a in self.circled()), tuple(-a for a in self.star()))

    def __str__(self) -> str:
        return ",".join(map(str, self.fermionic)) + ";" + ",".join(map(str, self.symmetric))

    def __repr__(self) -> str:
        return f"SuperPartition({self})"


def conjugate(sp: SuperPartition) -> SuperPartition:
    return sp.conjugate()


@lru_cache(maxsize=None)
def superpartitions(n: int, m: int) -> tuple[SuperPartition, ...]:
    """All superpartitions of bidegree (n|m), largest in dominance first."""
    out = []
    for k in range(n + 1):
        for ferm in _distinct_parts(k, m, k + 1 if m else 1):
            for sym in partitions(n - k):
                out.append(SuperPartition(ferm, sym))
    out.sort(key=SuperPartition.order_key, reverse=True)
    return tuple(out)


def dominance_leq(omega: SuperPartition, lam: SuperPartition) -> bool:
    """``omega <= lam`` in the dominance order on superpartitions."""
    if omega.bidegree != lam.bidegree:
        return False
    return dominates(lam.star(), omega.star()) and dominates(lam.circled(), omega.circled())


# ----------------------------------------------------------------------------
# dotted compositions


@dataclass(frozen=True)
class DottedComposition:
    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        parts = tuple((int(v), bool(d)) for v, d in self.parts)
        for v, d in parts:
            if v < 0 or (v == 0 and not d):
                raise ValueError(f"invalid part {v}{'.' if d else ''}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "DottedComposition":
        """Parse ``"3.,2"`` (a trailing dot marks a dotted part)."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            dotted = tok.endswith(".")
            parts.append((int(tok[:-1] if dotted else tok), dotted))
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def m(self) -> int:
        return sum(1 for _, d in self.parts if d)

    @property
    def bidegree(self) -> Bidegree:
        return Bidegree(self.n, self.m)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return DottedComposition(self.parts[i])
        return self.parts[i]

    def eta(self) -> tuple[int, ...]:
        return tuple(int(d) for _, d in self.parts)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    def reverse(self) -> "DottedComposition":
        return DottedComposition(self.parts[::-1])

    def concat(self, other: "DottedComposition") -> "DottedComposition":
        return DottedComposition(self.parts + other.parts)

    __add__ = concat

    def sort_key(self):
        return (self.n + self.m, self.n, -len(self.parts), tuple((-v, not d) for v, d in self.parts))

    def __str__(self) -> str:
        return ",".join(f"{v}." if d else str(v) for v, d in self.parts)

    def __repr__(self) -> str:
        return f"DottedComposition({self})"


EMPTY = DottedComposition(())


def dc(text: str) -> DottedComposition:
    return DottedComposition.parse(text)


def sp(text: str) -> SuperPartition:
    return SuperPartition.parse(text)


@lru_cache(maxsize=None)
def dotted_compositions(n: int, m: int) -> tuple[DottedComposition, ...]:
    """All dotted compositions of total degree n with m dotted parts."""

    def gen(n, m):
        if n == 0 and m == 0:
            yield ()
            return
        for v in range(n, 0, -1):
            for rest in gen(n - v, m):
                yield ((v, False),) + rest
        if m:
            for v in range(n, -1, -1):
                for rest in gen(n - v, m - 1):
                    yield ((v, True),) + rest

    return tuple(sorted((DottedComposition(p) for p in gen(n, m)), key=DottedComposition.sort_key))


def compositions_up_to(total: int) -> Iterator[DottedComposition]:
    """Dotted compositions with ``n + m <= total``, graded."""
    for s in range(total + 1):
        for m in range(s + 1):
            yield from dotted_compositions(s - m, m)


def superpartitions_up_to(total: int) -> Iterator[SuperPartition]:
    for s in range(total + 1):
        for m in range(s + 1):
            yield from superpartitions(s - m, m)


# ----------------------------------------------------------------------------
# refinement orders


def _block_mergings(alpha: DottedComposition, allowed) -> set[DottedComposition]:
    parts = alpha.parts
    ell = len(parts)
    if ell == 0:
        return {alpha}
    out = set()
    for cuts in itertools.product((False, True), repeat=ell - 1):
        blocks, cur = [], [parts[0]]
        for cut, part in zip(cuts, parts[1:]):
            if cut:
                blocks.append(cur)
                cur = [part]
            else:
                cur.append(part)
        blocks.append(cur)
        if all(len(b) == 1 or allowed(b) for b in blocks):
            out.add(
                DottedComposition(
                    tuple((sum(v for v, _ in b), any(d for _, d in b)) for b in blocks)
                )
            )
    return out


def strong_coarsenings(alpha: DottedComposition) -> set[DottedComposition]:
    """All gamma with alpha strongly refining gamma (alpha itself included)."""
    return _block_mergings(alpha, lambda b: not any(d for _, d in b))


def weak_coarsenings(alpha: DottedComposition) -> set[DottedComposition]:
    """All gamma with alpha weakly refining gamma (alpha itself included)."""
    return _block_mergings(alpha, lambda b: sum(d for _, d in b) <= 1)


def strong_leq(beta: DottedComposition, alpha: DottedComposition) -> bool:
    return alpha in strong_coarsenings(beta)


def weak_leq(beta: DottedComposition, alpha: DottedComposition) -> bool:
    return alpha in weak_coarsenings(beta)


def _compositions_of(v: int) -> Iterator[tuple[tuple[int, bool], ...]]:
    if v == 0:
        yield ()
        return
    for first in range(1, v + 1):
        for rest in _compositions_of(v - first):
            yield ((first, False),) + rest


def _one_dot_blocks(v: int) -> Iterator[tuple[tuple[int, bool], ...]]:
    for before in range(v + 1):
        for dot in range(v - before + 1):
            after = v - before - dot
            for left in _compositions_of(before):
                for right in _compositions_of(after):
                    yield left + ((dot, True),) + right


def strong_refinements(alpha: DottedComposition) -> list[DottedComposition]:
    """All beta with beta strongly refining alpha."""
    choices = [
        [((v, True),)] if d else list(_compositions_of(v)) for v, d in alpha.parts
    ]
    return [DottedComposition(sum(c, ())) for c in itertools.product(*choices)]


def weak_refinements(alpha: DottedComposition) -> list[DottedComposition]:
    """All beta with beta weakly refining alpha."""
    choices = [
        list(_one_dot_blocks(v)) if d else list(_compositions_of(v)) for v, d in alpha.parts
    ]
    return [DottedComposition(sum(c, ())) for c in itertools.product(*choices)]


def cover_relations(elements, leq_cover) -> set[tuple]:
    """Hasse edges ``(lower, upper)`` of a finite poset given its cover test."""
    return {(a, b) for a in elements for b in elements if a != b and leq_cover(a, b)}


def weak_cover(beta: DottedComposition, alpha: DottedComposition) -> bool:
    """alpha is obtained from beta by one weak merge."""
    p = beta.parts
    for i in range(len(p) - 1):
        if p[i][1] and p[i + 1][1]:
            continue
        merged = p[:i] + ((p[i][0] + p[i + 1][0], p[i][1] or p[i + 1][1]),) + p[i + 2:]
        if merged == alpha.parts:
            return True
    return False


def strong_cover(beta: DottedComposition, alpha: DottedComposition) -> bool:
    p = beta.parts
    for i in range(len(p) - 1):
        if p[i][1] or p[i + 1][1]:
            continue
        merged = p[:i] + ((p[i][0] + p[i + 1][0], False),) + p[i + 2:]
        if merged == alpha.parts:
            return True
    return False


# ----------------------------------------------------------------------------
# overlapping shuffles


class ShufflePath(NamedTuple):
    steps: str  # over {"D", "H", "V"}; H consumes a part of alpha, V a part of beta
    rows: int  # len(beta)
    cols: int  # len(alpha)

    def dotted_cells(self, alpha: DottedComposition, beta: DottedComposition):
        return {(p, q) for p in range(len(beta)) for q in range(len(alpha))
                if beta[p][1] and alpha[q][1]}


def overlapping_shuffles(alpha: DottedComposition, beta: DottedComposition):
    """List of ``(path, gamma, sign)`` over all (alpha, beta) overlapping shuffles.

    The sign counts dotted cells below the path, i.e. dotted pairs whose
    beta part is placed before the alpha part.
    """
    a, b = alpha.parts, beta.parts
    out = []

    def walk(q, p, steps, gamma, sign, dots_seen_in_beta):
        # dots_seen_in_beta: number of dotted beta parts already placed
        if q == len(a) and p == len(b):
            out.append((ShufflePath("".join(steps), len(b), len(a)), DottedComposition(tuple(gamma)), sign))
            return
        if q < len(a) and p < len(b) and not (a[q][1] and b[p][1]):
            sgn = -sign if (a[q][1] and dots_seen_in_beta % 2) else sign
            walk(q + 1, p + 1, steps + ["D"], gamma + [(a[q][0] + b[p][0], a[q][1] or b[p][1])],
                 sgn, dots_seen_in_beta + b[p][1])
        if q < len(a):
            sgn = -sign if (a[q][1] and dots_seen_in_beta % 2) else sign
            walk(q + 1, p, steps + ["H"], gamma + [a[q]], sgn, dots_seen_in_beta)
        if p < len(b):
            walk(q, p + 1, steps + ["V"], gamma + [b[p]], sign, dots_seen_in_beta + b[p][1])

    walk(0, 0, [], [], 1, 0)
    return out


def canonicalize_dotted(alpha: DottedComposition) -> Optional[tuple[SuperPartition, int]]:
    """Sort ``alpha`` into a superpartition; sign of reordering the dotted entries.

    Returns None when a dotted value repeats.
    """
    dotted = [v for v, d in alpha.parts if d]
    if len(set(dotted)) != len(dotted):
        return None
    inversions = sum(1 for i in range(len(dotted)) for j in range(i + 1, len(dotted))
                     if dotted[i] < dotted[j])
    undotted = sorted((v for v, d in alpha.parts if not d), reverse=True)
    return SuperPartition(tuple(sorted(dotted, reverse=True)), tuple(undotted)), (-1) ** inversions


def rearrangements(gamma: DottedComposition) -> list[DottedComposition]:
    """Distinct rearrangements of the parts of ``gamma``."""
    return sorted((DottedComposition(p) for p in multiset_permutations(gamma.parts)),
                  key=DottedComposition.sort_key)


def multiset_permutations(items) -> Iterator[tuple]:
    """Distinct orderings of a multiset of hashable items."""
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = list(counts)
    total = len(items)

    def rec(prefix):
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])
