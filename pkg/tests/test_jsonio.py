import pytest

from homkit.errors import InputError
from homkit.abgroups import FgAbGroup, is_isomorphic
from homkit.intlinalg import IntMatrix
from homkit.jsonio import (
    complex_from_json,
    complex_to_json,
    graded_group_from_json,
    graded_group_to_json,
    group_from_json,
    group_to_json,
    matrix_from_json,
    matrix_to_json,
    rmodule_from_json,
)
from homkit.percomplex import homology, moore_complex
from homkit.randgen import random_complex, random_group
import random


class TestMatrix:
    def test_roundtrip(self):
        m = IntMatrix.from_rows([[1, -2], [10**30, 0]])
        assert matrix_from_json(matrix_to_json(m)) == m

    def test_big_integers_survive(self):
        doc = {"rows": 1, "cols": 1, "data": [[str(10**40)]]}
        assert matrix_from_json(doc).data[0][0] == 10**40

    def test_rejects_bad_shapes(self):
        with pytest.raises(InputError):
            matrix_from_json({"rows": 2, "cols": 1, "data": [["1"]]})
        with pytest.raises(InputError):
            matrix_from_json({"rows": 1, "cols": 1, "data": [["x"]]})
        with pytest.raises(InputError):
            matrix_from_json({"rows": 1, "cols": 1})
        with pytest.raises(InputError):
            matrix_from_json([1, 2])


class TestGroups:
    def test_canonical_roundtrip(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_group(rng)
            assert is_isomorphic(group_from_json(group_to_json(g)), g)

    def test_presentation_input(self):
        g = group_from_json({"presentation": {"rows": 1, "cols": 1, "data": [["6"]]}})
        assert g.canonical == (0, (6,))

    def test_invalid_invariants(self):
        with pytest.raises(InputError):
            group_from_json({"rank": 0, "torsion": ["3", "2"]})

    def test_graded_roundtrip(self):
        rng = random.Random(5)
        from homkit.randgen import random_graded_group
        g = random_graded_group(rng)
        assert graded_group_from_json(graded_group_to_json(g)).is_isomorphic_to(g)


class TestComplexes:
    def test_roundtrip_preserves_homology(self):
        rng = random.Random(7)
        for _ in range(10):
            x = random_complex(rng, 2)
            y = complex_from_json(complex_to_json(x))
            assert x == y

    def test_invalid_complex_rejected(self):
        doc = {"even_rank": 1, "odd_rank": 1,
               "d": {"rows": 1, "cols": 1, "data": [["1"]]},
               "e": {"rows": 1, "cols": 1, "data": [["1"]]}}
        with pytest.raises(InputError, match="not a complex"):
            complex_from_json(doc)


class TestRModules:
    def test_quotient_module(self):
        doc = {"ring": {"kind": "quotient", "poly": ["-1", "0", "1"]},
               "generators": 1,
               "relations": {"rows": 1, "cols": 0, "data": [[]]},
               "t_action": {"rows": 1, "cols": 1, "data": [["-1"]]}}
        m = rmodule_from_json(doc)
        assert m.ngens == 1

    def test_laurent_module(self):
        doc = {"ring": {"kind": "laurent"},
               "generators": 1,
               "relations": {"rows": 1, "cols": 0, "data": [[]]},
               "t_action": {"rows": 1, "cols": 1, "data": [["-1"]]}}
        assert rmodule_from_json(doc).ngens == 1

    def test_bad_ring_kind(self):
        doc = {"ring": {"kind": "field"}, "generators": 0,
               "relations": {"rows": 0, "cols": 0, "data": []},
               "t_action": {"rows": 0, "cols": 0, "data": []}}
        with pytest.raises(InputError, match="kind"):
            rmodule_from_json(doc)

    def test_generator_count_mismatch(self):
        doc = {"ring": {"kind": "laurent"}, "generators": 2,
               "relations": {"rows": 1, "cols": 0, "data": [[]]},
               "t_action": {"rows": 1, "cols": 1, "data": [["1"]]}}
        with pytest.raises(InputError, match="one row per generator"):
            rmodule_from_json(doc)
