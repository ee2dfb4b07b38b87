import json
import os
import shutil
import subprocess

import pytest

import tambara


def test_burnside_arithmetic():
    t2 = tambara.basis(4, 4, 2)
    t4 = tambara.basis(4, 4, 4)
    assert (t2 * t4).coeffs == {4: 2}
    assert (t2 * t2).coeffs == {2: 2}
    x = tambara.element(4, 4, {4: 1, 2: -1, 1: -2})
    assert tambara.card(x) == 0
    assert tambara.restrict(x, 2).coeffs == {2: 2, 1: -4}
    assert tambara.transfer(tambara.element(4, 2, {2: 1}), 4).coeffs == {4: 1}


def test_norm_routes_agree():
    x = tambara.element(9, 3, {3: 1, 1: -3})
    chain = tambara.norm(x, 9)
    direct = tambara.norm(x, 9, route="direct")
    assert chain == direct
    assert chain.coeffs == {9: 3, 3: -8, 1: -3}


def test_big_coefficients_survive_the_boundary():
    x = tambara.element(26, 2, {2: 2, 1: -4})
    n = tambara.norm(x, 26)
    assert tambara.card(n) == 0
    assert n.coeff(13) == -(4**13 - 4) // 13


def test_gw_and_dress():
    g = tambara.GwClass(3, 2, 5, 1)
    assert (g * g).dim == 25
    assert tambara.gw_norm(g, 2) == tambara.gw_norm_oracle(g, 2)
    x = tambara.element(2, 2, {2: 1, 1: -2})
    d = tambara.dress(x, 3)
    assert (d.dim, d.det) == (0, 1)
    assert tambara.dress_kernel(3, 2, 2) == [[4, -2]]


def test_tau_and_pi():
    assert tambara.tau_rational(-5) == 0
    assert tambara.tau_rational(10) == 2
    assert tambara.tau_rational(7, 2) == 4
    assert tambara.pi_from_tau(4) == 2


def test_saturate_equals_trace_ideal():
    gens = tambara.generator_catalog("finite-fields", N=12)
    ideal = tambara.saturate(12, gens)
    kernel = tambara.trace_ideal(3, "finite", N=12)
    assert ideal == kernel
    assert ideal.member(12, gens[0])
    assert sorted(ideal.levels()) == [1, 2, 3, 4, 6, 12]


def test_verify_reports():
    rep = tambara.verify("finite-fields", q=5, N=6)
    assert rep["pass"] is True
    assert set(rep["levels"]) == {"1", "2", "3", "6"}
    rep = tambara.verify_rational_quadratic(4, 9)
    assert rep["pass"] is True


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        tambara.element(4, 3, {})
    with pytest.raises(ValueError):
        tambara.basis(4, 4, 3)
    with pytest.raises(ValueError):
        tambara.tau_rational(1, 0)


@pytest.mark.skipif(
    not (os.environ.get("TAMBARA_CLI") and shutil.which(os.environ.get("TAMBARA_CLI", ""))),
    reason="tambara-cli binary not available",
)
def test_cli_round_trip():
    cli = os.environ["TAMBARA_CLI"]
    x = tambara.element(9, 3, {3: 1, 1: -3})
    payload = json.dumps({"N": 9, "M": 3, "coeffs": {"1": -3, "3": 1}})
    out = subprocess.run(
        [cli, "eval", "--op", "norm", "--from", "3", "--to", "9"],
        input=payload,
        capture_output=True,
        text=True,
        check=True,
    )
    parsed = json.loads(out.stdout)
    expected = tambara.norm(x, 9)
    assert parsed["coeffs"] == {str(k): v for k, v in expected.coeffs.items()}

    out = subprocess.run(
        [cli, "verify", "--theorem", "finite-fields", "--q", "3", "--N", "6"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(out.stdout)["pass"] is True
