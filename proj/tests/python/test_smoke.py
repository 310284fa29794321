import pytest

import ctsolve


def test_example_dags():
    spec = {"monomial": {"gaps": ["", "b", ""], "pivots": "ac"}}
    g1 = {
        "alphabet": "abc",
        "vertices": [{"id": 1, "label": "a"}, {"id": 2, "label": "b"}, {"id": 3, "label": "b"}, {"id": 4, "label": "c"}],
        "edges": [[1, 2], [1, 3], [2, 4], [3, 4]],
    }
    g3 = {
        "alphabet": "abc",
        "vertices": [{"id": 1, "label": "a"}, {"id": 2, "label": "c"}, {"id": 3, "label": "b"}],
        "edges": [[1, 2], [2, 3]],
    }
    r = ctsolve.solve(g1, spec)
    assert r["decision"] == "yes"
    assert r["solver"] == "monomial"
    assert r["word"] == "abbc"
    assert ctsolve.solve(g3, spec)["decision"] == "no"


def test_strings_and_regex():
    assert ctsolve.solve(["ab", "ba"], regex="(ab)*")["decision"] == "yes"
    assert ctsolve.solve("strings: ab,bb", regex="(ab)*")["decision"] == "no"
    assert ctsolve.solve(["aab", "b"], regex="(aa+b)*")["solver"] == "aab"


def test_classify_and_monoid():
    ab = ctsolve.classify("(ab)*")
    assert ab["aperiodic"] and not ab["DA"]
    assert ab["cts"] == "NP-complete"
    assert ctsolve.classify("(a+b)*ab(a+b)*")["cts"] == "NL"
    assert ctsolve.monoid("(ab)*")["size"] == 6


def test_reductions():
    assert ctsolve.filter_ab_from_power(2, 4) == "bbaaab"
    assert ctsolve.filter_aabb_from_ab(4) == "abab"
    strings, target = ctsolve.gen_unary3partition([4, 4, 4], 12)
    assert strings == ["aaaabbbb"] * 3
    assert ctsolve.solve(strings, regex=target)["decision"] == "yes"
    assert ctsolve.three_partition_exists([4, 4, 4], 12)
    assert ctsolve.in_shuffle("abab", ["ab", "ab"])


def test_errors():
    with pytest.raises(ctsolve.ParseError):
        ctsolve.solve(["ab"], regex="(ab")
    with pytest.raises(ctsolve.CapExceeded):
        ctsolve.solve(["ab", "ba", "ab", "ba"], regex="(ab)*", caps={"dp_states": 3})
    with pytest.raises(ctsolve.PreconditionError):
        ctsolve.solve(["ab"], regex="(ab)*", solver="aab")
    with pytest.raises(ValueError):
        ctsolve.solve(["ab"])
