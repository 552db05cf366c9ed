import json

import pytest

from pgsem.cli import EXIT_INPUT, EXIT_LINGUISTIC, EXIT_OK, main
from pgsem.demo import bundled_lexicon
from pgsem.lexicon import serialize


@pytest.fixture(scope="module")
def lexicon_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("lex") / "paper.json"
    path.write_text(serialize(bundled_lexicon("paper")), encoding="utf-8")
    return str(path)


class TestCheck:
    def test_grammatical(self, lexicon_path, capsys):
        code = main(["check", "--lexicon", lexicon_path, "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "GRAMMATICAL" in out.splitlines()[-1]
        assert "n n^r s n^l n" in out

    def test_ungrammatical(self, lexicon_path, capsys):
        code = main(["check", "--lexicon", lexicon_path, "John Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_LINGUISTIC
        assert out.splitlines()[-1] == "UNGRAMMATICAL"

    def test_unknown_word(self, lexicon_path):
        code = main(["check", "--lexicon", lexicon_path, "John frobnicates"])
        assert code == EXIT_INPUT

    def test_missing_lexicon_file(self, tmp_path):
        code = main(["check", "--lexicon", str(tmp_path / "nope.json"),
                     "John likes Mary"])
        assert code == EXIT_INPUT

    def test_corrupt_lexicon(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ nope", encoding="utf-8")
        code = main(["check", "--lexicon", str(bad), "John likes Mary"])
        assert code == EXIT_INPUT

    def test_bad_target(self, lexicon_path):
        code = main(["check", "--lexicon", lexicon_path,
                     "--target", "q", "John likes Mary"])
        assert code == EXIT_INPUT


class TestDiagram:
    def test_ascii(self, lexicon_path, capsys):
        code = main(["diagram", "--lexicon", lexicon_path, "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.splitlines()[0] == "n n^r s n^l n"
        assert "\\" in out and "/" in out

    def test_dot(self, lexicon_path, capsys):
        code = main(["diagram", "--lexicon", lexicon_path,
                     "--format", "dot", "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.startswith("graph reduction {")

    def test_all(self, lexicon_path, capsys):
        code = main(["diagram", "--lexicon", lexicon_path, "--all",
                     "John does not like Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.strip()

    def test_ungrammatical(self, lexicon_path):
        assert main(["diagram", "--lexicon", lexicon_path,
                     "John Mary"]) == EXIT_LINGUISTIC


class TestMean:
    def test_text(self, lexicon_path, capsys):
        code = main(["mean", "--lexicon", lexicon_path, "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        lines = dict(line.split("\t") for line in out.splitlines())
        assert float(lines["s[0]"]) == 0.25
        assert float(lines["s[1]"]) == 0.75

    def test_json_matches_text(self, lexicon_path, capsys):
        code = main(["mean", "--lexicon", lexicon_path,
                     "--format", "json", "John does not like Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["target"] == "s"
        assert payload["shape"] == [2]
        assert payload["vector"] == [0.75, 0.25]


class TestSim:
    def test_raw(self, lexicon_path, capsys):
        code = main(["sim", "--lexicon", lexicon_path, "--mode", "raw",
                     "John loves Mary", "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert float(out) == 0.75

    def test_cosine_default(self, lexicon_path, capsys):
        code = main(["sim", "--lexicon", lexicon_path,
                     "John loves Mary", "John likes Mary"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert float(out) == pytest.approx(3 / 10 ** 0.5)

    def test_ungrammatical_operand(self, lexicon_path):
        assert main(["sim", "--lexicon", lexicon_path,
                     "John Mary", "John likes Mary"]) == EXIT_LINGUISTIC


class TestDemo:
    def test_text(self, capsys):
        code = main(["demo"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 13
        assert all(line.startswith("PASS") for line in lines)

    def test_json(self, capsys):
        code = main(["demo", "--format", "json"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["passed"] is True
        assert len(payload["checks"]) == 13
        for check in payload["checks"]:
            assert check["passed"] is True
            assert check["expected"] == check["computed"]
