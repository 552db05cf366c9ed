import random

import numpy as np
import pytest

from oracles import materialize_meaning, random_sentence_instance

from pgsem import tensor as tz
from pgsem.engine import (
    analyze,
    analyze_all,
    compute_meaning,
    meaning_of,
    similarity,
)
from pgsem.errors import ModeUnsupported, NoReduction, UnknownWord, ZeroVector
from pgsem.lexicon import LexiconEntry, build_not
from pgsem.pregroup import diagram_errors, parse_type
from pgsem.tensor import REAL, eta

POSITIVE_SENTENCE = "John likes Mary".split()
NEGATIVE_SENTENCE = "John does not like Mary".split()


def target_s(lexicon):
    return parse_type("s", lexicon.registry)


class TestAnalyze:
    def test_positive(self, paper_lexicon):
        analysis = analyze(POSITIVE_SENTENCE, paper_lexicon,
                           target_s(paper_lexicon))
        assert " ".join(str(t) for t in analysis.flat_types) == "n n^r s n^l n"
        assert analysis.diagram.links == {(0, 1), (3, 4)}
        assert analysis.diagram.survivors == (2,)

    def test_negative(self, paper_lexicon):
        analysis = analyze(NEGATIVE_SENTENCE, paper_lexicon,
                           target_s(paper_lexicon))
        assert analysis.diagram.n == 13
        assert analysis.diagram.links == \
            {(0, 1), (3, 6), (4, 5), (7, 10), (8, 9), (11, 12)}
        assert analysis.offsets == (0, 1, 5, 9, 12)
        assert diagram_errors(analysis.diagram, analysis.flat_types,
                              paper_lexicon.poset) == []

    def test_no_reduction(self, paper_lexicon):
        with pytest.raises(NoReduction):
            analyze(["John", "John"], paper_lexicon, target_s(paper_lexicon))

    def test_unknown_word(self, paper_lexicon):
        with pytest.raises(UnknownWord):
            analyze(["John", "frobnicates"], paper_lexicon,
                    target_s(paper_lexicon))

    def test_analyze_all_contains_first(self, paper_lexicon):
        first = analyze(POSITIVE_SENTENCE, paper_lexicon,
                        target_s(paper_lexicon))
        everything = list(analyze_all(POSITIVE_SENTENCE, paper_lexicon,
                                      target_s(paper_lexicon), limit=10))
        assert everything[0].diagram == first.diagram


class TestComputeMeaning:
    def test_graded_positive(self, paper_lexicon):
        result = meaning_of(POSITIVE_SENTENCE, paper_lexicon,
                            target_s(paper_lexicon))
        assert result.vector.tolist() == [0.25, 0.75]

    def test_graded_negative(self, paper_lexicon):
        result = meaning_of(NEGATIVE_SENTENCE, paper_lexicon,
                            target_s(paper_lexicon))
        assert result.vector.tolist() == [0.75, 0.25]

    def test_crisp_negation_flips(self, paper_lexicon):
        positive = meaning_of("John loves Mary".split(), paper_lexicon,
                              target_s(paper_lexicon)).vector
        negative = meaning_of("John does not love Mary".split(),
                              paper_lexicon, target_s(paper_lexicon)).vector
        assert positive.tolist() == [0.0, 1.0]
        assert negative.tolist() == [1.0, 0.0]

    def test_boolean_semantics(self, bool_lexicon):
        result = meaning_of(POSITIVE_SENTENCE, bool_lexicon,
                            target_s(bool_lexicon))
        assert result.vector.tolist() == [True]

    def test_fold_equals_materialization_random(self):
        rng = random.Random(11)
        for trial in range(60):
            semiring = (tz.REAL, tz.BOOLEAN, tz.NATURAL)[trial % 3]
            lexicon, analysis = random_sentence_instance(rng, semiring)
            folded = compute_meaning(analysis, lexicon).vector
            assert folded == materialize_meaning(analysis, lexicon)


class TestDoesTransparency:
    def _with_identity_not(self, lexicon):
        dim_v = lexicon.spaces.dims["sigma"]
        dim_j = lexicon.spaces.dims["j"]
        typing = parse_type("sigma^r j j^l sigma", lexicon.registry)
        entry = LexiconEntry("not", typing,
                             build_not(dim_v, eta(dim_j, REAL)))
        return lexicon.updated("not", [entry])

    def test_identity_not_is_transparent(self, paper_lexicon):
        transparent = self._with_identity_not(paper_lexicon)
        for verb, infinitive in [("loves", "love"), ("likes", "like"),
                                 ("hates", "hate")]:
            plain = meaning_of(["John", verb, "Mary"], transparent,
                               target_s(transparent)).vector
            framed = meaning_of(["John", "does", "not", infinitive, "Mary"],
                                transparent, target_s(transparent)).vector
            assert plain == framed


class TestSimilarity:
    CASES = [
        ("John loves Mary", "John likes Mary", 0.75),
        ("John hates Mary", "John likes Mary", 0.25),
        ("John loves Mary", "John hates Mary", 0.0),
        ("John does not love Mary", "John does not like Mary", 0.75),
        ("John does not like Mary", "John loves Mary", 0.25),
        ("John does not like Mary", "John hates Mary", 0.75),
        ("John does not like Mary", "John likes Mary", 0.375),
    ]

    @pytest.mark.parametrize("s1,s2,expected", CASES)
    def test_raw_paper_values(self, paper_lexicon, s1, s2, expected):
        got = similarity(s1.split(), s2.split(), paper_lexicon,
                         target_s(paper_lexicon), mode="raw")
        assert got == expected

    def test_cosine(self, paper_lexicon):
        got = similarity("John loves Mary".split(), "John likes Mary".split(),
                         paper_lexicon, target_s(paper_lexicon), mode="cosine")
        assert got == pytest.approx(3 / 10 ** 0.5)

    @pytest.mark.parametrize("mode", ["raw", "cosine"])
    def test_symmetry(self, paper_lexicon, mode):
        t = target_s(paper_lexicon)
        a = "John does not like Mary".split()
        b = "John loves Mary".split()
        assert similarity(a, b, paper_lexicon, t, mode) == \
            similarity(b, a, paper_lexicon, t, mode)

    def test_self_similarity(self, paper_lexicon):
        t = target_s(paper_lexicon)
        s = POSITIVE_SENTENCE
        vec = meaning_of(s, paper_lexicon, t).vector
        assert similarity(s, s, paper_lexicon, t, "raw") == \
            pytest.approx(tz.norm(vec) ** 2)
        assert similarity(s, s, paper_lexicon, t, "cosine") == \
            pytest.approx(1.0)

    def test_boolean_raw_only(self, bool_lexicon):
        t = target_s(bool_lexicon)
        assert similarity(POSITIVE_SENTENCE, POSITIVE_SENTENCE,
                          bool_lexicon, t, "raw") is True
        with pytest.raises(ModeUnsupported):
            similarity(POSITIVE_SENTENCE, POSITIVE_SENTENCE,
                       bool_lexicon, t, "cosine")

    def test_unknown_mode(self, paper_lexicon):
        with pytest.raises(ModeUnsupported):
            similarity(POSITIVE_SENTENCE, POSITIVE_SENTENCE, paper_lexicon,
                       target_s(paper_lexicon), "euclidean")

    def test_zero_meaning_cosine(self, paper_lexicon):
        zero_verb = LexiconEntry(
            "ignores", parse_type("n^r s n^l", paper_lexicon.registry),
            tz.zeros([4, 2, 4], REAL))
        lex = paper_lexicon.updated("ignores", [zero_verb])
        with pytest.raises(ZeroVector):
            similarity("John ignores Mary".split(), POSITIVE_SENTENCE,
                       lex, target_s(lex), "cosine")


class TestLinearity:
    def test_verb_slot_is_linear(self, paper_lexicon):
        rng = random.Random(13)
        t = target_s(paper_lexicon)
        typing = parse_type("n^r s n^l", paper_lexicon.registry)
        for _ in range(10):
            psi1 = tz.Tensor(np.array(
                [[[rng.uniform(-1, 1) for _ in range(4)] for _ in range(2)]
                 for _ in range(4)]), REAL)
            psi2 = tz.Tensor(np.array(
                [[[rng.uniform(-1, 1) for _ in range(4)] for _ in range(2)]
                 for _ in range(4)]), REAL)
            a, b = rng.uniform(-2, 2), rng.uniform(-2, 2)
            combo = tz.add(tz.scale(a, psi1), tz.scale(b, psi2))

            def mean_with(tensor):
                lex = paper_lexicon.updated(
                    "verbs", [LexiconEntry("verbs", typing, tensor)])
                return meaning_of(["John", "verbs", "Mary"], lex, t).vector

            lhs = mean_with(combo)
            rhs = tz.add(tz.scale(a, mean_with(psi1)),
                         tz.scale(b, mean_with(psi2)))
            assert np.allclose(lhs.data, rhs.data, atol=1e-9)
