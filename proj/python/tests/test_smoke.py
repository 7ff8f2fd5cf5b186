import cmath
import math

import pytest

import qspectra


def test_constant_spectrum():
    f = qspectra.Function.from_codes(3, 2, "int", [1] * 9)
    w = qspectra.forward(f)
    assert w[0] == 9
    assert all(v == 0 for v in w[1:])
    assert qspectra.spectrum_listing(f) == "z=(0,0) W=9\n"


def test_forward_matches_direct_sum():
    q, n = 4, 2
    codes = [3, -1, 0, 2, 1, 1, -2, 0, 4, 0, 0, 1, -1, 2, 3, 0]
    w = qspectra.forward(qspectra.Function.from_codes(q, n, "int", codes))
    for z in range(q**n):
        z1, z2 = divmod(z, q)
        direct = sum(
            codes[x] * cmath.exp(-2j * math.pi * ((x // q) * z1 + (x % q) * z2) / q) for x in range(q**n)
        )
        assert abs(w[z] - direct) < 1e-9


def test_truth_table_roundtrip():
    text = "q 3 n 1 kind omega3\n0\n2\n1\n"
    f = qspectra.parse_truth_table(text)
    assert f.kind == "omega3"
    assert qspectra.format_truth_table(f) == text
    assert qspectra.inverse_roundtrip(f) == f
    with pytest.raises(qspectra.ParseError, match="line 3"):
        qspectra.parse_truth_table("q 3 n 1 kind omega3\n0\n5\n1\n")


def test_fm_analysis():
    f = qspectra.generate("fm", m=2, n=3)
    assert (f.q, f.n, len(f)) == (4, 3, 64)
    assert qspectra.relevant_variables(f) == [0, 1]
    assert qspectra.degrees(f) == {"deg0": 2, "deg1": 2, "deg2": 2}
    report = qspectra.analyze(f)
    assert report["schema_version"] == qspectra.schema_version
    assert report["t"] == 2
    assert report["bounds"]["tightness"] == pytest.approx(2 / math.pi**2, rel=1e-11)


def test_graph_helpers():
    assert qspectra.eigenvalue("hamming", [1, 2], 3) == -2
    assert qspectra.eigenvalue("cycle_power", [2], 4) == pytest.approx(-2)
    f = qspectra.Function.from_codes(3, 1, "pm1", [1, 1, -1])
    assert qspectra.mixed_edges(f) == 2


def test_verify_and_errors():
    summary = qspectra.verify(3, 2, "pm1", laws=["theorem1", "parseval"])
    assert summary["functions"] == 512
    assert summary["total_violations"] == 0
    a = qspectra.verify(4, 2, "omega3", exhaustive=False, samples=200, seed=4, threads=1)
    b = qspectra.verify(4, 2, "omega3", exhaustive=False, samples=200, seed=4, threads=3)
    assert a == b
    with pytest.raises(qspectra.InfeasibleCorpusError):
        qspectra.verify(3, 2, "int")
    with pytest.raises(qspectra.KindError):
        qspectra.analyze(qspectra.Function.from_complex(2, 1, [1, 1j]))
    with pytest.raises(qspectra.DomainError):
        qspectra.Function.from_codes(1, 2, "int", [0])
