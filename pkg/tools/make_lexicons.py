"""Regenerate the bundled lexicon files under src/pgsem/data/.

Population: 4 men, 4 women.  John is m3 (index 2), Mary is f4 (index 3).
loves is crisp with loves(m3, f4) true; hates is crisp and everywhere
false; likes = 3/4 loves + 1/4 hates.  The infinitives love/hate/like
carry the same data under the glued typing used after "does not".
"""

import json
import os

DIM_N = 4
JOHN, MARY = 2, 3

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, os.pardir, "src", "pgsem", "data")


def verb_sparse(true_pairs, dim_s=2, graded=None):
    """Crisp relation in a dim_s sentence space: |1> on true pairs, |0>
    elsewhere.  With graded=(w_true, w_false) the |1>/|0> weights mix."""
    out = []
    for i in range(DIM_N):
        for j in range(DIM_N):
            if dim_s == 1:
                if (i, j) in true_pairs:
                    out.append({"idx": [i, 0, j], "val": 1})
                continue
            if graded is None:
                k = 1 if (i, j) in true_pairs else 0
                out.append({"idx": [i, k, j], "val": 1})
            else:
                w_true, w_false = graded if (i, j) in true_pairs else (0, 1)
                if w_false:
                    out.append({"idx": [i, 0, j], "val": w_false})
                if w_true:
                    out.append({"idx": [i, 1, j], "val": w_true})
    return out


def entry(word, type_, sparse=None, dense=None, shape=None, builtin=None):
    e = {"word": word, "type": type_}
    if builtin:
        e["builtin"] = builtin
    else:
        tensor = {"shape": shape}
        if sparse is not None:
            tensor["sparse"] = sparse
        else:
            tensor["dense"] = dense
        e["tensor"] = tensor
    return e


def noun(word, index):
    dense = [0] * DIM_N
    dense[index] = 1
    return entry(word, "n", dense=dense, shape=[DIM_N])


def main():
    loves = {(JOHN, MARY)}
    hates = set()

    paper = {
        "semiring": "real",
        "basic_types": [
            {"name": "n", "dim": DIM_N},
            {"name": "s", "dim": 2},
            {"name": "j", "dim": 2},
            {"name": "sigma", "dim": DIM_N},
        ],
        "entries": [
            noun("John", JOHN),
            noun("Mary", MARY),
        ] + [noun("m%d" % (i + 1), i) for i in range(DIM_N)]
          + [noun("f%d" % (j + 1), j) for j in range(DIM_N)]
          + [
            entry("loves", "n^r s n^l", sparse=verb_sparse(loves),
                  shape=[DIM_N, 2, DIM_N]),
            entry("hates", "n^r s n^l", sparse=verb_sparse(hates),
                  shape=[DIM_N, 2, DIM_N]),
            entry("likes", "n^r s n^l",
                  sparse=verb_sparse(loves, graded=(0.75, 0.25)),
                  shape=[DIM_N, 2, DIM_N]),
            entry("love", "sigma^r j n^l", sparse=verb_sparse(loves),
                  shape=[DIM_N, 2, DIM_N]),
            entry("hate", "sigma^r j n^l", sparse=verb_sparse(hates),
                  shape=[DIM_N, 2, DIM_N]),
            entry("like", "sigma^r j n^l",
                  sparse=verb_sparse(loves, graded=(0.75, 0.25)),
                  shape=[DIM_N, 2, DIM_N]),
            entry("does", "n^r s j^l sigma", builtin="does"),
            entry("not", "sigma^r j j^l sigma", builtin="not"),
        ],
    }

    paper_1d = {
        "semiring": "real",
        "basic_types": [
            {"name": "n", "dim": DIM_N},
            {"name": "s", "dim": 1},
        ],
        "entries": [
            noun("John", JOHN),
            noun("Mary", MARY),
            entry("likes", "n^r s n^l", sparse=verb_sparse(loves, dim_s=1),
                  shape=[DIM_N, 1, DIM_N]),
        ],
    }

    paper_bool = dict(paper_1d, semiring="boolean")

    for name, doc in [("paper", paper), ("paper_1d", paper_1d),
                      ("paper_bool", paper_bool)]:
        path = os.path.join(DATA, name + ".json")
        with open(path, "w") as handle:
            json.dump(doc, handle, indent=2)
            handle.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
