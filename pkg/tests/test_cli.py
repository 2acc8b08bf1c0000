"""Descriptor grammar, command dispatch, formats, exit codes."""

import io
import json
from fractions import Fraction

import pytest

from sysbound.cli import (CINode, CPNode, ProductNode, SphereNode, TwistNode,
                          parse_alpha, parse_json_value, parse_space,
                          run_command)
from sysbound.engine import PiScaled
from sysbound.errors import ParseError


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# -- grammar ------------------------------------------------------------------


def test_parse_product():
    node = parse_space("CP(3) * S1")
    assert isinstance(node, ProductNode)
    assert isinstance(node.left, CPNode) and node.left.n == 3
    assert isinstance(node.right, SphereNode) and node.right.k == 1


def test_parse_ci():
    node = parse_space("CI(degrees=[[3]]; ambient=[4])")
    assert isinstance(node, CINode)
    space = node.build()
    assert space.complex_dim == 3
    assert space.fano_index == 2


def test_parse_is_whitespace_insensitive():
    a = parse_space("CP(2)*S1*S(4)")
    b = parse_space("  CP( 2 )  *  S1 * S( 4 ) ")
    assert a == b


def test_parse_left_associative():
    node = parse_space("CP(1) * CP(2) * CP(3)")
    assert isinstance(node, ProductNode)
    assert isinstance(node.left, ProductNode)
    assert node.right == CPNode(3)


def test_parse_twist_suffix():
    node = parse_space("CP(2).twist(-1)")
    assert isinstance(node, TwistNode) and node.k == -1
    space = node.build()
    assert space.spin_c == space.primitive_x


def test_parse_print_parse_identity():
    for text in ("CP(3) * S1", "CI(degrees=[[2],[3]]; ambient=[6])",
                 "PB(degrees=[0,1]; genus=0)", "BlP(4)", "Q(5) * S(4)",
                 "CP(2).twist(3) * S1"):
        node = parse_space(text)
        assert parse_space(node.unparse()) == node


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_space("CP(3) & S1")
    assert exc.value.position == 6
    with pytest.raises(ParseError):
        parse_space("CP(-1)")
    with pytest.raises(ParseError):
        parse_space("CP(3) *")
    with pytest.raises(ParseError):
        parse_space("Frob(2)")


def test_parse_alpha_expressions():
    from sysbound.catalog import blowup_point, projective_space
    bl = blowup_point(3)
    cls, pi_exp = parse_alpha(bl, "2*H - E")
    assert cls == 2 * bl.ring.gen("H") - bl.ring.gen("E")
    assert pi_exp == 0
    cp2 = projective_space(2)
    cls, pi_exp = parse_alpha(cp2, "pi*H")
    assert cls == cp2.ring.gen("H") and pi_exp == 1
    cls, pi_exp = parse_alpha(cp2, "1/2*pi^2*H")
    assert cls == Fraction(1, 2) * cp2.ring.gen("H") and pi_exp == 2
    with pytest.raises(ParseError):
        parse_alpha(cp2, "2*Z")


# -- commands -----------------------------------------------------------------


def test_bound_command_table():
    code, out, _ = _run(["bound", "--space", "CP(3)", "--theorem", "prop5.1"])
    assert code == 0
    assert "48 * pi" in out


def test_length_command():
    code, out, _ = _run(["length", "--space", "Q(4)"])
    assert code == 0
    assert out.splitlines()[-1].split()[-1] == "4"


def test_phi_sup_command_unbounded():
    code, out, _ = _run(["phi-sup", "--space", "BlP(3)"])
    assert code == 0
    assert "UNBOUNDED" in out
    assert "H" in out and "E" in out


def test_bound_json_round_trip():
    code, out, _ = _run(["bound", "--space", "CP(3) * S1", "--theorem",
                         "thm1.3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    value = parse_json_value(payload["bound"])
    assert value == PiScaled.of(48, 1)


def test_volume_and_width_selectors():
    code, out, _ = _run(["bound", "--space", "CP(2)", "--theorem", "thm1.8",
                         "--alpha", "pi*H"])
    assert code == 0 and "1/2 * pi^2" in out
    code, out, _ = _run(["bound", "--space", "CP(2)", "--theorem", "thm1.4"])
    assert code == 0 and "4/3 * pi" in out
    code, out, _ = _run(["bound", "--space", "Q(3)", "--theorem", "rbar",
                         "--alpha", "pi*H"])
    assert code == 0 and "36" in out


def test_csv_and_approx():
    code, out, _ = _run(["bound", "--space", "CP(3)", "--theorem", "thm1.1",
                         "--format", "csv", "--approx", "3"])
    assert code == 0
    line = [l for l in out.splitlines() if l.startswith("bound")][0]
    assert line.split(",")[1] == "48 * pi"
    assert line.split(",")[2].startswith("~150.796")


def test_todd_command():
    code, out, _ = _run(["todd", "--space", "CI(degrees=[[2],[2]]; ambient=[6])"])
    assert code == 0
    assert out.splitlines()[-1].split()[-1] == "1"


def test_phi_command():
    code, out, _ = _run(["phi", "--space", "BlP(3)", "--alpha", "2*H - E"])
    assert code == 0
    assert out.splitlines()[-1].split()[-1] == "56"


def test_contractions_command():
    code, out, _ = _run(["contractions", "--space",
                         "CI(degrees=[[2,2]]; ambient=[3,3])"])
    assert code == 0
    assert "fano" in out and "True" in out


def test_bundle_profile_command():
    code, out, _ = _run(["bundle-profile", "--n", "3"])
    assert code == 0
    assert "8/3" in out


def test_pushforward_command():
    code, out, _ = _run(["pushforward", "--k", "1", "--r", "2", "--j", "1"])
    assert code == 0
    assert "-x1 - x2" in out


def test_lattice_command_gram():
    code, out, _ = _run(["lattice", "--gram", "[[2,1],[1,2]]"])
    assert code == 0
    assert "lambda_1_sq" in out
    assert "transference_product_sq" in out


def test_lattice_command_vertices():
    code, out, _ = _run(["lattice", "--vertices",
                         "[[1,0],[0,1],[1,1],[-1,0],[0,-1],[-1,-1]]"])
    assert code == 0
    assert "polytope" in out


def test_catalog_command():
    code, out, _ = _run(["catalog"])
    assert code == 0
    assert "CP(n)" in out and "metadata only" in out


def test_exit_codes():
    # domain error: hypothesis fails -> 1
    code, _, err = _run(["bound", "--space", "CP(3)", "--theorem", "thm1.2"])
    assert code == 1
    assert "projective space" in err
    # parse error -> 2
    code, _, err = _run(["length", "--space", "CP(-1)"])
    assert code == 2
    assert "offset" in err
    # missing --space -> 2
    code, _, err = _run(["length"])
    assert code == 2


def test_error_messages_name_the_hypothesis():
    code, _, err = _run(["bound", "--space", "CP(2) * S(2)", "--theorem",
                         "thm1.3"])
    assert code == 1
    assert "vanishing index pairing" in err or "b2" in err


def test_batch_mode(monkeypatch):
    import io as _io
    import sys as _sys
    monkeypatch.setattr(_sys, "stdin", _io.StringIO("CP(2)\nQ(3)\n"))
    code, out, _ = _run(["length", "--batch"])
    assert code == 0
    values = [l.split()[-1] for l in out.splitlines() if l.startswith("length")]
    assert values == ["3", "3"]
