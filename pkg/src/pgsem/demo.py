"""Reproduce the worked truth-theoretic examples on the bundled lexicons.

Every check compares a computed meaning vector or similarity score
against the value derived by hand; all values are dyadic rationals, so
exact equality is required throughout.
"""

from __future__ import annotations

from importlib import resources

from .engine import meaning_of, similarity
from .lexicon import Lexicon, load_lexicon
from .pregroup import parse_type

JOHN_LIKES = "John likes Mary"
JOHN_LOVES = "John loves Mary"
JOHN_HATES = "John hates Mary"
JOHN_NOT_LIKE = "John does not like Mary"
JOHN_NOT_LOVE = "John does not love Mary"


def bundled_lexicon(name: str) -> Lexicon:
    """Load one of the packaged lexicons: paper, paper_1d, paper_bool."""
    text = resources.files("pgsem.data").joinpath(name + ".json").read_text()
    return load_lexicon(text)


def _mean(lexicon, sentence):
    target = parse_type("s", lexicon.registry)
    return meaning_of(sentence.split(), lexicon, target).vector.tolist()


def _raw(lexicon, s1, s2):
    target = parse_type("s", lexicon.registry)
    return similarity(s1.split(), s2.split(), lexicon, target, mode="raw")


def run_demo():
    """Run every bundled check; returns a list of result records."""
    one_d = bundled_lexicon("paper_1d")
    main = bundled_lexicon("paper")
    boolean = bundled_lexicon("paper_bool")

    checks = [
        ("example 1", "1-dim truth value of %r" % JOHN_LIKES,
         [1.0], lambda: _mean(one_d, JOHN_LIKES)),
        ("example 1b", "2-dim truth value of %r" % JOHN_LOVES,
         [0.0, 1.0], lambda: _mean(main, JOHN_LOVES)),
        ("example 2", "negation flips the crisp verb",
         [1.0, 0.0], lambda: _mean(main, JOHN_NOT_LOVE)),
        ("example 3", "graded likes = 3/4 loves + 1/4 hates",
         [0.25, 0.75], lambda: _mean(main, JOHN_LIKES)),
        ("example 4", "negated graded likes",
         [0.75, 0.25], lambda: _mean(main, JOHN_NOT_LIKE)),
        ("example 5a", "loves vs likes",
         0.75, lambda: _raw(main, JOHN_LOVES, JOHN_LIKES)),
        ("example 5b", "hates vs likes",
         0.25, lambda: _raw(main, JOHN_HATES, JOHN_LIKES)),
        ("example 5c", "loves vs hates",
         0.0, lambda: _raw(main, JOHN_LOVES, JOHN_HATES)),
        ("example 6", "does not love vs does not like",
         0.75, lambda: _raw(main, JOHN_NOT_LOVE, JOHN_NOT_LIKE)),
        ("example 7a", "does not like vs loves",
         0.25, lambda: _raw(main, JOHN_NOT_LIKE, JOHN_LOVES)),
        ("example 7b", "does not like vs hates",
         0.75, lambda: _raw(main, JOHN_NOT_LIKE, JOHN_HATES)),
        ("example 7c", "does not like vs likes",
         0.375, lambda: _raw(main, JOHN_NOT_LIKE, JOHN_LIKES)),
        ("boolean", "relational truth value of %r" % JOHN_LIKES,
         [True], lambda: _mean(boolean, JOHN_LIKES)),
    ]

    results = []
    for name, description, expected, compute in checks:
        computed = compute()
        results.append({
            "name": name,
            "description": description,
            "expected": expected,
            "computed": computed,
            "passed": computed == expected,
        })
    return results
