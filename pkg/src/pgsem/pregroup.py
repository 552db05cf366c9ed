"""The free pregroup over a finite poset of basic types.

Types are sequences of basic types with an iterated-adjoint order: the
integer ``z`` encodes ``p`` (z=0), ``p^l`` (z=-1), ``p^r`` (z=+1),
``p^ll`` (z=-2) and so on.  A sequence of words is grammatical when the
juxtaposition of their types reduces, by contractions only, to the
sentence type; the witness of such a reduction is a planar (non-crossing)
set of links called a reduction diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import (
    AdjointOrderOverflow,
    InvalidDiagram,
    MalformedToken,
    UnknownBasicType,
)

#: Largest iterated-adjoint order we accept; no natural-language pregroup
#: grammar in the literature goes anywhere near this.
Z_BOUND = 8


@dataclass(frozen=True)
class SimpleType:
    """A basic type together with its iterated-adjoint order."""

    base: str
    z: int = 0

    def __post_init__(self):
        if abs(self.z) > Z_BOUND:
            raise AdjointOrderOverflow(
                "adjoint order %d exceeds bound %d" % (self.z, Z_BOUND))

    def __str__(self):
        if self.z == 0:
            return self.base
        letter = "l" if self.z < 0 else "r"
        return "%s^%s" % (self.base, letter * abs(self.z))


@dataclass(frozen=True)
class PregroupType:
    """A compound type: an ordered sequence of simple types (empty = unit)."""

    simples: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "simples", tuple(self.simples))

    def left_adjoint(self) -> "PregroupType":
        """Reverse the sequence and decrement every adjoint order."""
        return PregroupType(tuple(
            SimpleType(t.base, t.z - 1) for t in reversed(self.simples)))

    def right_adjoint(self) -> "PregroupType":
        """Reverse the sequence and increment every adjoint order."""
        return PregroupType(tuple(
            SimpleType(t.base, t.z + 1) for t in reversed(self.simples)))

    def __add__(self, other):
        return PregroupType(self.simples + other.simples)

    def __len__(self):
        return len(self.simples)

    def __iter__(self):
        return iter(self.simples)

    def __str__(self):
        return " ".join(str(t) for t in self.simples) if self.simples else "1"


class TypeRegistry:
    """The finite set of basic type names in play."""

    def __init__(self, names: Sequence[str] = ()):
        self._names = []
        for name in names:
            self.register(name)

    def register(self, name: str):
        if not name or any(c.isspace() for c in name) or "^" in name:
            raise MalformedToken("bad basic type name: %r" % (name,))
        if name in self._names:
            raise MalformedToken("duplicate basic type name: %r" % (name,))
        self._names.append(name)

    @property
    def names(self):
        return tuple(self._names)

    def __contains__(self, name):
        return name in self._names


class TypePoset:
    """Partial order on basic types, stored as its reflexive-transitive closure."""

    def __init__(self, registry: TypeRegistry, pairs: Sequence = ()):
        self.registry = registry
        closure = {(n, n) for n in registry.names}
        for p, q in pairs:
            if p not in registry or q not in registry:
                raise UnknownBasicType("order pair over unknown type: %r <= %r" % (p, q))
            closure.add((p, q))
        changed = True
        while changed:
            changed = False
            for p, q in list(closure):
                for q2, r in list(closure):
                    if q == q2 and (p, r) not in closure:
                        closure.add((p, r))
                        changed = True
        self._leq = frozenset(closure)

    def leq(self, p: str, q: str) -> bool:
        return (p, q) in self._leq

    @property
    def pairs(self):
        return self._leq


def trivial_poset(registry: TypeRegistry) -> TypePoset:
    return TypePoset(registry, ())


def parse_type(text: str, registry: TypeRegistry) -> PregroupType:
    """Parse the concrete syntax, e.g. ``"n^r s n^l"``; ``"1"`` is the unit."""
    simples = []
    for token in text.split():
        if token == "1":
            continue
        base, caret, suffix = token.partition("^")
        if caret and (not suffix or len(set(suffix)) != 1 or suffix[0] not in "lr"):
            raise MalformedToken("bad adjoint suffix in token %r" % (token,))
        if not base:
            raise MalformedToken("empty base in token %r" % (token,))
        if base not in registry:
            raise UnknownBasicType("unknown basic type %r" % (base,))
        z = 0
        if caret:
            z = -len(suffix) if suffix[0] == "l" else len(suffix)
        simples.append(SimpleType(base, z))
    return PregroupType(tuple(simples))


def contracts(a: SimpleType, b: SimpleType, poset: TypePoset) -> bool:
    """Whether the adjacent pair ``a b`` contracts to the unit.

    Requires ``b.z == a.z + 1``; the base-order direction flips with the
    parity of ``a.z`` (adjoints are order reversing).
    """
    if b.z != a.z + 1:
        return False
    if a.z % 2 == 0:
        return poset.leq(a.base, b.base)
    return poset.leq(b.base, a.base)


def matches_target(t: SimpleType, x: SimpleType, poset: TypePoset) -> bool:
    """Whether a surviving position of type ``t`` may stand for target ``x``."""
    if t.z != x.z:
        return False
    if t.z % 2 == 0:
        return poset.leq(t.base, x.base)
    return poset.leq(x.base, t.base)


@dataclass(frozen=True)
class ReductionDiagram:
    """Non-crossing contraction links plus surviving positions over n slots."""

    n: int
    links: frozenset = field(default_factory=frozenset)
    survivors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "links", frozenset(tuple(l) for l in self.links))
        object.__setattr__(self, "survivors", tuple(self.survivors))


def diagram_errors(diagram: ReductionDiagram,
                   types: Sequence[SimpleType],
                   poset: TypePoset) -> list:
    """Standalone validator; returns one message per violated invariant."""
    errors = []
    if diagram.n != len(types):
        errors.append("diagram is over %d positions, got %d types"
                      % (diagram.n, len(types)))
        return errors
    seen = {}
    for a, b in diagram.links:
        if not (0 <= a < b < diagram.n):
            errors.append("link (%d, %d) out of range" % (a, b))
            continue
        for p in (a, b):
            seen[p] = seen.get(p, 0) + 1
        if not contracts(types[a], types[b], poset):
            errors.append("link (%d, %d) joins non-contracting types %s %s"
                          % (a, b, types[a], types[b]))
    for p in diagram.survivors:
        seen[p] = seen.get(p, 0) + 1
    for p in range(diagram.n):
        if seen.get(p, 0) != 1:
            errors.append("position %d used %d times" % (p, seen.get(p, 0)))
    if list(diagram.survivors) != sorted(set(diagram.survivors)):
        errors.append("survivors not strictly increasing")
    links = sorted(diagram.links)
    for i, (a, b) in enumerate(links):
        for c, d in links[i + 1:]:
            if a < c < b < d:
                errors.append("links (%d, %d) and (%d, %d) cross" % (a, b, c, d))
        for p in diagram.survivors:
            if a < p < b:
                errors.append("survivor %d lies under link (%d, %d)" % (p, a, b))
    return errors


def greedy_reduce(types: Sequence[SimpleType], poset: TypePoset):
    """Left-to-right stack scan, contracting at the earliest opportunity.

    Returns the residual type and the diagram whose survivors are the
    residual positions.  Fast but not complete: see :func:`reduce_to` for
    the search that underwrites grammaticality.
    """
    stack = []
    links = set()
    for pos, t in enumerate(types):
        if stack and contracts(stack[-1][1], t, poset):
            links.add((stack.pop()[0], pos))
        else:
            stack.append((pos, t))
    residual = PregroupType(tuple(t for _, t in stack))
    diagram = ReductionDiagram(len(types), frozenset(links),
                               tuple(p for p, _ in stack))
    return residual, diagram


def _nullable_table(types, poset):
    """DP over intervals: table[(i, j)] = smallest k such that a link
    (i, k) with nullable interior and nullable remainder covers [i..j];
    absent when the segment does not reduce to the unit."""
    n = len(types)
    table = {}
    for span in range(2, n + 1, 2):
        for i in range(n - span + 1):
            j = i + span - 1
            for k in range(i + 1, j + 1, 2):
                if not contracts(types[i], types[k], poset):
                    continue
                if k - i > 1 and (i + 1, k - 1) not in table:
                    continue
                if k < j and (k + 1, j) not in table:
                    continue
                table[(i, j)] = k
                break
    return table


def _nullable_links(i, j, table, out):
    if i > j:
        return
    k = table[(i, j)]
    out.append((i, k))
    _nullable_links(i + 1, k - 1, table, out)
    _nullable_links(k + 1, j, table, out)


def reduce_to(types: Sequence[SimpleType],
              target: PregroupType,
              poset: TypePoset) -> Optional[ReductionDiagram]:
    """Search for a contraction-only reduction of ``types`` to ``target``.

    Survivors must match the target elementwise (order-weakening allowed);
    all other positions must be covered by valid non-crossing links.
    Deterministic: at every choice point the smallest link partner wins.
    Returns None when no reduction exists.
    """
    n = len(types)
    goal = tuple(target)
    m = len(goal)
    null = _nullable_table(types, poset)

    @lru_cache(maxsize=None)
    def ok(i, q):
        if i == n:
            return q == m
        for k in range(i + 1, n):
            if contracts(types[i], types[k], poset) \
                    and (k - i == 1 or (i + 1, k - 1) in null) \
                    and ok(k + 1, q):
                return True
        return q < m and matches_target(types[i], goal[q], poset) and ok(i + 1, q + 1)

    if not ok(0, 0):
        return None
    links, survivors = [], []
    i = q = 0
    while i < n:
        for k in range(i + 1, n):
            if contracts(types[i], types[k], poset) \
                    and (k - i == 1 or (i + 1, k - 1) in null) \
                    and ok(k + 1, q):
                links.append((i, k))
                _nullable_links(i + 1, k - 1, null, links)
                i = k + 1
                break
        else:
            survivors.append(i)
            i += 1
            q += 1
    return ReductionDiagram(n, frozenset(links), tuple(survivors))


def enumerate_reductions(types: Sequence[SimpleType],
                         target: PregroupType,
                         poset: TypePoset,
                         limit: Optional[int] = None) -> Iterator[ReductionDiagram]:
    """Yield every reduction diagram to ``target``, leftmost-first."""
    n = len(types)
    goal = tuple(target)
    m = len(goal)

    def null_covers(i, j):
        # all ways to cover [i..j] entirely by links
        if i > j:
            yield ()
            return
        for k in range(i + 1, j + 1, 2):
            if not contracts(types[i], types[k], poset):
                continue
            for inner in null_covers(i + 1, k - 1):
                for rest in null_covers(k + 1, j):
                    yield ((i, k),) + inner + rest

    def walk(i, q):
        if i == n:
            if q == m:
                yield ((), ())
            return
        for k in range(i + 1, n):
            if not contracts(types[i], types[k], poset):
                continue
            for inner in null_covers(i + 1, k - 1):
                for links, survivors in walk(k + 1, q):
                    yield (((i, k),) + inner + links, survivors)
        if q < m and matches_target(types[i], goal[q], poset):
            for links, survivors in walk(i + 1, q + 1):
                yield (links, (i,) + survivors)

    count = 0
    for links, survivors in walk(0, 0):
        yield ReductionDiagram(n, frozenset(links), survivors)
        count += 1
        if limit is not None and count >= limit:
            return


def _link_depths(links):
    depths = {}
    for a, b in sorted(links, key=lambda l: l[1] - l[0]):
        inner = [depths[l] for l in depths if a < l[0] < l[1] < b]
        depths[(a, b)] = 1 + max(inner, default=0)
    return depths


def render_ascii(diagram: ReductionDiagram, types: Sequence[SimpleType],
                 poset: Optional[TypePoset] = None) -> str:
    """Draw the type line with nested cups below; survivors as bars."""
    if poset is not None:
        errors = diagram_errors(diagram, types, poset)
        if errors:
            raise InvalidDiagram("; ".join(errors))
    if diagram.n != len(types):
        raise InvalidDiagram("diagram/type length mismatch")
    if not types:
        return ""
    tokens = [str(t) for t in types]
    centers, offset = [], 0
    for tok in tokens:
        centers.append(offset + len(tok) // 2)
        offset += len(tok) + 1
    width = offset - 1
    depths = _link_depths(diagram.links)
    nlines = max(list(depths.values()) + ([1] if diagram.survivors else [0]),
                 default=0)
    lines = [" ".join(tokens)]
    for d in range(1, nlines + 1):
        row = [" "] * width
        for (a, b), depth in depths.items():
            if depth > d:
                row[centers[a]] = row[centers[b]] = "|"
            elif depth == d:
                row[centers[a]] = "\\"
                row[centers[b]] = "/"
                for c in range(centers[a] + 1, centers[b]):
                    row[c] = "_"
        for p in diagram.survivors:
            row[centers[p]] = "|"
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def render_dot(diagram: ReductionDiagram, types: Sequence[SimpleType],
               poset: Optional[TypePoset] = None) -> str:
    """Emit GraphViz DOT: one node per position, one edge per link,
    survivors wired to a sink node labelled with the residual type."""
    if poset is not None:
        errors = diagram_errors(diagram, types, poset)
        if errors:
            raise InvalidDiagram("; ".join(errors))
    if diagram.n != len(types):
        raise InvalidDiagram("diagram/type length mismatch")
    lines = ["graph reduction {"]
    if types:
        lines.append("  rankdir=LR;")
        lines.append("  node [shape=plaintext];")
        for pos, t in enumerate(types):
            lines.append('  p%d [label="%s"];' % (pos, t))
        if diagram.survivors:
            residual = PregroupType(tuple(types[p] for p in diagram.survivors))
            lines.append('  sink [label="%s" shape=circle];' % residual)
        for a, b in sorted(diagram.links):
            lines.append("  p%d -- p%d;" % (a, b))
        for p in diagram.survivors:
            lines.append("  p%d -- sink;" % p)
    lines.append("}")
    return "\n".join(lines) + "\n"
