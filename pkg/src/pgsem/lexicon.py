"""Meaning spaces and the word store.

A lexicon maps each basic type to a dimension and each word to one or
more (pregroup type, tensor) pairs.  The file format is JSON; tensors may
be given densely, sparsely, or via the builders for the logical words
"does" and "not".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

import numpy as np

from . import tensor as tz
from .errors import (
    DuplicateBasicType,
    IndexOutOfRange,
    InvalidScalarForSemiring,
    RankError,
    SchemaError,
    ShapeMismatch,
)
from .pregroup import PregroupType, TypePoset, TypeRegistry, parse_type
from .tensor import REAL, SEMIRINGS, Semiring, Tensor

NOT_MATRIX = ((0, 1), (1, 0))


@dataclass(frozen=True)
class SpaceAssignment:
    """Dimension of the space attached to each basic type.

    Adjoint spaces coincide with the plain one, so the dimension of a
    simple type ignores its adjoint order.
    """

    dims: Mapping[str, int]

    def dim_of(self, simple) -> int:
        return self.dims[simple.base]

    def shape_of(self, typing: PregroupType) -> tuple:
        return tuple(self.dim_of(t) for t in typing)


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    typing: PregroupType
    tensor: Tensor


@dataclass(frozen=True)
class Lexicon:
    registry: TypeRegistry
    poset: TypePoset
    spaces: SpaceAssignment
    entries: Dict[str, List[LexiconEntry]] = field(default_factory=dict)
    semiring: Semiring = REAL

    def lookup(self, word: str) -> Optional[List[LexiconEntry]]:
        return self.entries.get(word)

    def updated(self, word: str, new_entries: List[LexiconEntry]) -> "Lexicon":
        entries = dict(self.entries)
        entries[word] = list(new_entries)
        return Lexicon(self.registry, self.poset, self.spaces, entries,
                       self.semiring)


# -- builders ---------------------------------------------------------------

def build_relation_verb(dim_subj: int, dim_sent: int, dim_obj: int,
                        truth: Mapping, semiring: Semiring = REAL) -> Tensor:
    """Rank-3 verb tensor with T[i, :, j] the sentence-space value of the
    (subject i, object j) pair; unspecified pairs are zero."""
    data = np.full((dim_subj, dim_sent, dim_obj), semiring.zero,
                   dtype=semiring.dtype)
    for (i, j), vec in truth.items():
        if not (0 <= i < dim_subj and 0 <= j < dim_obj):
            raise IndexOutOfRange("pair (%d, %d) out of range" % (i, j))
        vec = np.asarray(vec, dtype=semiring.dtype)
        if vec.shape != (dim_sent,):
            raise ShapeMismatch("value for (%d, %d) has shape %r, want (%d,)"
                                % (i, j, vec.shape, dim_sent))
        data[i, :, j] = vec
    return Tensor(data, semiring)


def build_does(dim_v: int, dim_j: int, semiring: Semiring = REAL) -> Tensor:
    """The auxiliary: pure eta wiring, entry (i, j, k, l) is one iff
    i = l and j = k."""
    data = np.full((dim_v, dim_j, dim_j, dim_v), semiring.zero,
                   dtype=semiring.dtype)
    for i in range(dim_v):
        for j in range(dim_j):
            data[i, j, j, i] = semiring.one
    return Tensor(data, semiring)


def build_not(dim_v: int, neg_map: Tensor) -> Tensor:
    """The negation particle: like "does" but routing the sentence wire
    through ``neg_map``; entry (i, a, b, l) = neg_map[a, b] iff i = l."""
    if neg_map.rank != 2 or neg_map.shape[0] != neg_map.shape[1]:
        raise RankError("neg_map must be a square rank-2 tensor")
    d = neg_map.shape[0]
    semiring = neg_map.semiring
    data = np.full((dim_v, d, d, dim_v), semiring.zero, dtype=semiring.dtype)
    for i in range(dim_v):
        data[i, :, :, i] = neg_map.data
    return Tensor(data, semiring)


def default_neg_map(dim: int, semiring: Semiring = REAL) -> Tensor:
    """Basis swap; only canonical in two dimensions."""
    if dim != 2:
        raise SchemaError(
            "no default negation for dimension %d; give neg_map" % dim)
    return Tensor(np.asarray(NOT_MATRIX, dtype=semiring.dtype), semiring)


# -- file format ------------------------------------------------------------

def _check_scalar(value, semiring: Semiring):
    if isinstance(value, bool):
        value = int(value)
    if semiring is tz.BOOLEAN:
        if value not in (0, 1):
            raise InvalidScalarForSemiring(
                "%r is not a Boolean scalar" % (value,))
    elif semiring is tz.NATURAL:
        if not isinstance(value, int) or value < 0:
            raise InvalidScalarForSemiring(
                "%r is not a natural number" % (value,))
    elif not isinstance(value, (int, float)):
        raise InvalidScalarForSemiring("%r is not a real scalar" % (value,))
    return value


def _entry_tensor(spec: Mapping, word: str, typing: PregroupType,
                  spaces: SpaceAssignment, semiring: Semiring) -> Tensor:
    shape = spaces.shape_of(typing)
    if "builtin" in spec:
        if "tensor" in spec:
            raise SchemaError("entry %r mixes builtin and tensor" % (word,))
        name = spec["builtin"]
        if name == "does":
            if len(shape) != 4 or shape[0] != shape[3] or shape[1] != shape[2]:
                raise ShapeMismatch(
                    "builtin does needs shape (v, j, j, v), got %r" % (shape,))
            return build_does(shape[0], shape[1], semiring)
        if name == "not":
            if len(shape) != 4 or shape[0] != shape[3] or shape[1] != shape[2]:
                raise ShapeMismatch(
                    "builtin not needs shape (v, j, j, v), got %r" % (shape,))
            if "neg_map" in spec:
                rows = spec["neg_map"]
                neg = Tensor(np.asarray(
                    [[_check_scalar(x, semiring) for x in row] for row in rows],
                    dtype=semiring.dtype), semiring)
                if neg.shape != (shape[1], shape[1]):
                    raise ShapeMismatch("neg_map shape %r, want (%d, %d)"
                                        % (neg.shape, shape[1], shape[1]))
            else:
                neg = default_neg_map(shape[1], semiring)
            return build_not(shape[0], neg)
        raise SchemaError("unknown builtin %r in entry %r" % (name, word))
    ten = spec.get("tensor")
    if not isinstance(ten, dict):
        raise SchemaError("entry %r needs a tensor or builtin" % (word,))
    declared = tuple(ten.get("shape", ()))
    if declared != shape:
        raise ShapeMismatch("entry %r declares shape %r, typing needs %r"
                            % (word, declared, shape))
    given = [k for k in ("dense", "sparse") if k in ten]
    if len(given) != 1:
        raise SchemaError("entry %r needs exactly one of dense/sparse" % (word,))
    size = int(np.prod(shape)) if shape else 1
    if "dense" in ten:
        values = [_check_scalar(v, semiring) for v in ten["dense"]]
        if len(values) != size:
            raise ShapeMismatch("entry %r has %d values, shape %r needs %d"
                                % (word, len(values), shape, size))
        data = np.asarray(values, dtype=semiring.dtype).reshape(shape)
        return Tensor(data, semiring)
    data = np.full(shape, semiring.zero, dtype=semiring.dtype)
    for item in ten["sparse"]:
        idx = tuple(item["idx"])
        if len(idx) != len(shape) or any(
                not 0 <= i < d for i, d in zip(idx, shape)):
            raise IndexOutOfRange("entry %r: index %r out of shape %r"
                                  % (word, idx, shape))
        data[idx] = _check_scalar(item["val"], semiring)
    return Tensor(data, semiring)


def load_lexicon(text: str) -> Lexicon:
    """Parse and fully validate a lexicon from its JSON source."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON: %s" % exc) from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    for key in ("semiring", "basic_types", "entries"):
        if key not in doc:
            raise SchemaError("missing key %r" % key)
    semiring = SEMIRINGS.get(doc["semiring"])
    if semiring is None:
        raise SchemaError("unknown semiring %r" % (doc["semiring"],))

    registry = TypeRegistry()
    dims = {}
    for item in doc["basic_types"]:
        name, dim = item.get("name"), item.get("dim")
        if not isinstance(name, str) or not isinstance(dim, int) or dim < 1:
            raise SchemaError("bad basic type declaration %r" % (item,))
        if name in registry:
            raise DuplicateBasicType(name)
        registry.register(name)
        dims[name] = dim
    poset = TypePoset(registry, [tuple(p) for p in doc.get("order", [])])
    spaces = SpaceAssignment(dims)

    entries: Dict[str, List[LexiconEntry]] = {}
    for spec in doc["entries"]:
        if not isinstance(spec, dict) or "word" not in spec or "type" not in spec:
            raise SchemaError("bad entry %r" % (spec,))
        word = spec["word"]
        typing = parse_type(spec["type"], registry)
        ten = _entry_tensor(spec, word, typing, spaces, semiring)
        entries.setdefault(word, []).append(LexiconEntry(word, typing, ten))
    return Lexicon(registry, poset, spaces, entries, semiring)


def serialize(lexicon: Lexicon) -> str:
    """Dense JSON dump; reloads to an identical lexicon."""
    def plain(x):
        return int(x) if lexicon.semiring is not tz.REAL else float(x)

    doc = {
        "semiring": lexicon.semiring.name,
        "basic_types": [{"name": n, "dim": lexicon.spaces.dims[n]}
                        for n in lexicon.registry.names],
        "order": sorted([p, q] for p, q in lexicon.poset.pairs if p != q),
        "entries": [
            {
                "word": entry.word,
                "type": str(entry.typing),
                "tensor": {
                    "shape": list(entry.tensor.shape),
                    "dense": [plain(v) for v in entry.tensor.data.ravel()],
                },
            }
            for word in lexicon.entries
            for entry in lexicon.entries[word]
        ],
    }
    return json.dumps(doc, indent=2)


def validate(lexicon: Lexicon) -> List[str]:
    """One diagnostic per violated invariant; empty when all is well."""
    diagnostics = []
    for name in lexicon.spaces.dims:
        if name not in lexicon.registry:
            diagnostics.append("space for unknown basic type %r" % name)
    for name in lexicon.registry.names:
        if name not in lexicon.spaces.dims:
            diagnostics.append("basic type %r has no dimension" % name)
        elif lexicon.spaces.dims[name] < 1:
            diagnostics.append("basic type %r has dimension %d"
                               % (name, lexicon.spaces.dims[name]))
    for word, word_entries in lexicon.entries.items():
        for entry in word_entries:
            if entry.tensor.semiring != lexicon.semiring:
                diagnostics.append("%r: tensor over %r, lexicon over %r"
                                   % (word, entry.tensor.semiring,
                                      lexicon.semiring))
            unknown = [t.base for t in entry.typing
                       if t.base not in lexicon.registry]
            if unknown:
                diagnostics.append("%r: typing uses unknown basic types %r"
                                   % (word, unknown))
                continue
            want = lexicon.spaces.shape_of(entry.typing)
            if entry.tensor.shape != want:
                diagnostics.append("%r: tensor shape %r, typing needs %r"
                                   % (word, entry.tensor.shape, want))
    return diagnostics
