"""From meanings of words to the meaning of a sentence.

A sentence is analyzed against the lexicon: pick a typing for each word,
find a reduction diagram to the target type, then evaluate the induced
contraction network over the word tensors.  The surviving wires carry the
sentence meaning, a vector in the target space, so any two sentences with
the same target can be compared by inner product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence

from . import tensor as tz
from .errors import ModeUnsupported, NoReduction, UnknownWord, ZeroVector
from .lexicon import Lexicon, LexiconEntry
from .pregroup import (
    PregroupType,
    ReductionDiagram,
    enumerate_reductions,
    reduce_to,
)
from .tensor import REAL, Tensor


@dataclass(frozen=True)
class Analysis:
    """A parsed sentence: chosen typings and the reduction that licenses it."""

    tokens: tuple
    chosen: tuple  # one LexiconEntry per token
    flat_types: tuple
    offsets: tuple  # global position of each token's first simple type
    diagram: ReductionDiagram
    target: PregroupType


@dataclass(frozen=True)
class MeaningResult:
    vector: Tensor
    analysis: Analysis


def _typing_choices(tokens: Sequence[str], lexicon: Lexicon):
    per_token: List[List[LexiconEntry]] = []
    for token in tokens:
        entries = lexicon.lookup(token)
        if not entries:
            raise UnknownWord(token)
        per_token.append(entries)
    return per_token


def _flatten(chosen) -> tuple:
    flat, offsets, offset = [], [], 0
    for entry in chosen:
        offsets.append(offset)
        flat.extend(entry.typing)
        offset += len(entry.typing)
    return tuple(flat), tuple(offsets)


def analyze(tokens: Sequence[str], lexicon: Lexicon,
            target: PregroupType) -> Analysis:
    """First typing combination (in lexicon order, depth-first) whose flat
    type sequence reduces to the target."""
    tokens = tuple(tokens)
    if not tokens:
        raise NoReduction("empty sentence")
    for chosen in product(*_typing_choices(tokens, lexicon)):
        flat, offsets = _flatten(chosen)
        diagram = reduce_to(flat, target, lexicon.poset)
        if diagram is not None:
            return Analysis(tokens, tuple(chosen), flat, offsets, diagram, target)
    raise NoReduction("no typing of %r reduces to %s" % (" ".join(tokens), target))


def analyze_all(tokens: Sequence[str], lexicon: Lexicon,
                target: PregroupType,
                limit: Optional[int] = None) -> Iterator[Analysis]:
    """Every analysis: all typing combinations crossed with all diagrams."""
    tokens = tuple(tokens)
    count = 0
    for chosen in product(*_typing_choices(tokens, lexicon)):
        flat, offsets = _flatten(chosen)
        remaining = None if limit is None else limit - count
        for diagram in enumerate_reductions(flat, target, lexicon.poset,
                                            remaining):
            yield Analysis(tokens, tuple(chosen), flat, offsets, diagram, target)
            count += 1
            if limit is not None and count >= limit:
                return


def compute_meaning(analysis: Analysis, lexicon: Lexicon) -> MeaningResult:
    """Evaluate the contraction network by a left-to-right fold.

    A boundary tensor tracks the open (not yet contracted) global
    positions; each word is tensored in and every link with both endpoints
    present is contracted immediately.  Equal to full materialization.
    """
    links = sorted(analysis.diagram.links)
    boundary = tz.scalar(lexicon.semiring.one, lexicon.semiring)
    open_pos: List[int] = []
    pending = list(links)
    for entry, offset in zip(analysis.chosen, analysis.offsets):
        boundary = tz.tensor_product(boundary, entry.tensor)
        open_pos.extend(range(offset, offset + len(entry.typing)))
        ready = [(a, b) for a, b in pending
                 if a in open_pos and b in open_pos]
        if ready:
            pairs = [(open_pos.index(a), open_pos.index(b)) for a, b in ready]
            boundary = tz.contract(boundary, pairs)
            for a, b in ready:
                open_pos.remove(a)
                open_pos.remove(b)
                pending.remove((a, b))
    assert tuple(open_pos) == analysis.diagram.survivors
    return MeaningResult(boundary, analysis)


def meaning_of(tokens: Sequence[str], lexicon: Lexicon,
               target: PregroupType) -> MeaningResult:
    return compute_meaning(analyze(tokens, lexicon, target), lexicon)


def similarity(s1: Sequence[str], s2: Sequence[str], lexicon: Lexicon,
               target: PregroupType, mode: str = "raw"):
    """Inner product of the two sentence meanings; ``cosine`` divides by
    both norms (real semiring only)."""
    if mode not in ("raw", "cosine"):
        raise ModeUnsupported("unknown mode %r" % (mode,))
    u = meaning_of(s1, lexicon, target).vector
    v = meaning_of(s2, lexicon, target).vector
    raw = tz.inner_product(u, v)
    if mode == "raw":
        return raw
    if lexicon.semiring is not REAL:
        raise ModeUnsupported("cosine needs the real semiring")
    nu, nv = tz.norm(u), tz.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ZeroVector("cosine with a zero meaning vector")
    return raw / (nu * nv)
