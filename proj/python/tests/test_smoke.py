import json
import math
import os
import subprocess

import pytest

import invgeo


def symmetric_order(n):
    return sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_inverse_order(n):
    m = invgeo.InverseMonoid.symmetric(n)
    assert m.order == symmetric_order(n)
    assert len(m.idempotents) == 2**n


def test_generate_and_compose():
    swap = invgeo.PartialBijection([1, 0, 2])
    cut = invgeo.PartialBijection([0, None, 2])
    assert (swap * swap) == invgeo.PartialBijection([0, 1, 2])
    assert swap.inverse() == swap
    assert cut.is_idempotent()
    m = invgeo.InverseMonoid.generate(3, [swap, cut])
    for s in range(m.order):
        t = m.inverse(s)
        assert m.product(m.product(s, t), s) == s
        assert m.dom(s) == m.product(t, s)
        assert m.ran(s) == m.product(s, t)


def test_bad_input_raises():
    with pytest.raises(invgeo.ValidationError):
        invgeo.PartialBijection([0, 0])
    m = invgeo.InverseMonoid.symmetric(2)
    with pytest.raises(invgeo.Error):
        m.product(0, m.order)
    with pytest.raises(invgeo.Error):
        invgeo.example("no-such-example")


def test_cayley_metric_components_are_l_classes():
    e = invgeo.example("sym3")
    m = e["monoid"]
    d = invgeo.cayley_metric(m, e["quasi_generators"])
    n = m.order
    assert all(d[i][i] == 0 for i in range(n))
    assert all(d[i][j] == d[j][i] for i in range(n) for j in range(n))
    finite = {frozenset(j for j in range(n) if d[i][j] is not None) for i in range(n)}
    assert finite == {frozenset(c) for c in m.l_classes()}
    assert invgeo.check_edge_pairing(m) == {}


def test_action_pipeline():
    e = invgeo.example("sym3")
    a = e["action"]
    assert a.validate() == {}
    x1 = a.identity_fiber[0]
    t = a.coboundedness(x1)
    assert t is not None
    ms = a.milnor_schwarz(x1, t, seed=7)
    assert ms["generators_covered"] and ms["cover_quasi_generates"]
    assert ms["bounds_ok"]
    assert invgeo.is_quasi_generating(a.monoid, ms["cover"])
    for p in invgeo.validate_cms_metric(a.monoid, a.rips_metric(x1, 2)):
        assert p["pass"], p


def test_qi_identity_map_is_isometry():
    m = invgeo.InverseMonoid.symmetric(2)
    d = invgeo.cayley_metric(m, [i for i in range(m.order)])
    q = invgeo.qi_constants(list(range(m.order)), d, d)
    assert q["multiplicative"] == (1, 1)
    assert q["additive"] == (0, 1)


def test_table_json_round_trip(tmp_path):
    m = invgeo.example("chain3xZ3")["monoid"]
    path = tmp_path / "t.json"
    path.write_text(m.table_json())
    back = invgeo.InverseMonoid.load(str(path))
    assert back.table_json() == m.table_json()
    assert json.loads(m.table_json())["identity"] == m.identity


@pytest.mark.skipif("INVGEO_CLI" not in os.environ, reason="CLI path not set")
def test_cli_verify(tmp_path):
    cli = os.environ["INVGEO_CLI"]
    subprocess.run([cli, "examples", "emit", "sym2", "-o", str(tmp_path)], check=True)
    action = next(tmp_path.glob("*.action.json"))
    out = subprocess.run([cli, "verify", "-i", str(action)], capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
