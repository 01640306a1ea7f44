import json

import numpy as np
import pytest

from cech2.cohomology import enumerate_cocycles
from cech2.complexes import standard_space
from cech2.fixtures import (
    action_from_json,
    action_to_json,
    builtin_group,
    builtin_group_names,
    cocycle_from_json,
    cocycle_to_json,
    coefficient_from_spec,
    complex_from_json,
    complex_to_json,
    crossed_module_from_json,
    crossed_module_to_json,
    group_from_json,
    group_ses_from_json,
    group_to_json,
    hom_from_json,
    hom_to_json,
    space_from_spec,
    two_group_ses_from_json,
    z2z4_crossed_module,
)
from cech2.groups import inversion_action, validate_hom


class TestBuiltins:
    def test_groups(self):
        for name in builtin_group_names():
            g = builtin_group(name)
            assert g.order >= 1

    def test_cyclic_alias(self):
        assert builtin_group("C3").same_table(builtin_group("Z3"))

    def test_unknown_group(self):
        with pytest.raises(KeyError):
            builtin_group("Q8")


class TestJsonRoundTrips:
    def test_group(self, s3):
        assert group_from_json(group_to_json(s3)).same_table(s3)

    def test_hom(self, z2, z4):
        f = validate_hom(z2, z4, [0, 2])
        registry = {"Z2": z2, "Z4": z4}
        back = hom_from_json(hom_to_json(f), registry)
        assert np.array_equal(back.map, f.map)

    def test_action(self, z2, z3):
        act = inversion_action(z2, z3)
        registry = {"Z2": z2, "Z3": z3}
        back = action_from_json(action_to_json(act), registry)
        assert np.array_equal(back.perms, act.perms)

    def test_crossed_module(self, z2z4):
        back = crossed_module_from_json(crossed_module_to_json(z2z4))
        assert back.G.same_table(z2z4.G)
        assert np.array_equal(back.t.map, z2z4.t.map)

    def test_complex(self, sphere2):
        back = complex_from_json(complex_to_json(sphere2))
        assert back.simplices == sphere2.simplices

    def test_cocycle(self, sphere2, z2z4):
        c = enumerate_cocycles(sphere2, z2z4)[5]
        assert cocycle_from_json(cocycle_to_json(c)) == c

    def test_group_ses(self, z2, z4):
        obj = {
            "H": group_to_json(z2),
            "G": group_to_json(z4),
            "K": group_to_json(z2),
            "t": [0, 2],
            "p": [0, 1, 0, 1],
        }
        ses = group_ses_from_json(obj)
        assert ses.section.tolist() == [0, 1]

    def test_two_group_ses_hat(self):
        ses = two_group_ses_from_json({"type": "hat", "coeff": "z2z4"})
        assert ses.left.cod.G.order == 8

    def test_two_group_ses_discrete(self, z2, z4):
        ses = two_group_ses_from_json(
            {
                "type": "discrete",
                "H": group_to_json(z2),
                "G": group_to_json(z4),
                "K": group_to_json(z2),
                "t": [0, 2],
                "p": [0, 1, 0, 1],
            }
        )
        assert ses.left.cod.is_discrete()


class TestSpecGrammar:
    @pytest.mark.parametrize(
        "spec,g_order,h_order",
        [
            ("discrete:S3", 6, 1),
            ("shift:Z3", 1, 3),
            ("aut:Z3", 2, 3),
            ("hat:z2z4", 8, 2),
            ("hat:shift:Z2", 2, 2),
            ("z2z4", 4, 2),
        ],
    )
    def test_coefficients(self, spec, g_order, h_order):
        xm = coefficient_from_spec(spec)
        assert (xm.G.order, xm.H.order) == (g_order, h_order)

    def test_coefficient_file(self, tmp_path):
        path = tmp_path / "xm.json"
        path.write_text(json.dumps(crossed_module_to_json(z2z4_crossed_module())))
        xm = coefficient_from_spec(str(path))
        assert xm.G.order == 4

    def test_space_names_and_files(self, tmp_path):
        assert space_from_spec("torus7").vertex_count == 7
        path = tmp_path / "cx.json"
        path.write_text(json.dumps(complex_to_json(standard_space("circle3"))))
        assert space_from_spec(str(path)).simplices == standard_space("circle3").simplices

    def test_unknown_specs(self):
        with pytest.raises(KeyError):
            coefficient_from_spec("loop:Z2")
        with pytest.raises(KeyError):
            space_from_spec("klein_bottle")
