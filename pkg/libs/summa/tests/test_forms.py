import json
from fractions import Fraction

import numpy as np
import pytest

from summa.base import INF, PartitionSpec, PSpec, ScalarField
from summa.exceptions import DimensionError, ResourceError, StructuralError
from summa.forms import (
    MultilinearForm,
    block_coefficient,
    block_value_tensor,
    diagonal_form,
    evaluate,
    form_from_dict,
    form_to_dict,
    gaussian_form,
    load_form,
    save_form,
)

from .oracles import brute_block_tensor


class TestPSpec:
    def test_inv_sum(self):
        pspec = PSpec.parse("4, inf, 8/3")
        assert pspec.m == 3
        assert pspec.inv_sum == Fraction(1, 4) + Fraction(3, 8)

    def test_conjugates(self):
        pspec = PSpec.parse([1, 2, INF, 4])
        assert pspec.conjugates() == (INF, Fraction(2), Fraction(1), Fraction(4, 3))

    def test_float_exponents_snap_to_fractions(self):
        assert PSpec.parse([1.5, 1.25]).entries == (Fraction(3, 2), Fraction(5, 4))

    def test_rejects_exponent_below_one(self):
        with pytest.raises(DimensionError):
            PSpec.parse("0.5,2")

    def test_str(self):
        assert str(PSpec.parse(["inf", "4/3"])) == "inf,4/3"


class TestPartitionSpec:
    def test_contiguous(self):
        part = PartitionSpec.parse("2,1")
        assert part.assignment == (1, 1, 2)
        assert part.m == 3
        assert part.k == 2
        assert part.multiplicities == (2, 1)
        assert part.index_sets == ((0, 1), (2,))

    def test_arbitrary_assignment(self):
        part = PartitionSpec(assignment=(1, 2, 1))
        assert part.multiplicities == (2, 1)
        assert part.index_sets == ((0, 2), (1,))
        assert not part.is_contiguous()

    @pytest.mark.parametrize("assignment", [(1, 3), (0, 1), (2, 2)])
    def test_labels_must_be_one_to_k(self, assignment):
        with pytest.raises(ValueError):
            PartitionSpec(assignment=assignment)

    def test_zero_multiplicity(self):
        with pytest.raises(DimensionError):
            PartitionSpec.parse([2, 0])


class TestMultilinearForm:
    def test_size_mismatch(self):
        with pytest.raises(DimensionError):
            MultilinearForm.from_coeffs(np.zeros(5), "inf,inf", dims=(2, 2))

    def test_pspec_arity_mismatch(self):
        with pytest.raises(DimensionError):
            MultilinearForm.from_coeffs(np.zeros((2, 2)), "inf")

    def test_real_form_rejects_imaginary_parts(self):
        with pytest.raises(DimensionError):
            MultilinearForm.from_coeffs([[1j, 0], [0, 1]], "2,2", field="real")

    def test_field_is_inferred(self):
        assert MultilinearForm.from_coeffs([[1j, 0], [0, 1]], "2,2").field == (
            ScalarField.COMPLEX
        )
        assert MultilinearForm.from_coeffs([[1 + 0j, 0]], "2,2").is_real

    def test_immutable(self, hadamard):
        with pytest.raises(ValueError):
            hadamard.coeffs[0, 0] = 5.0

    def test_tensor_budget(self, mocker):
        mocker.patch("summa.forms.multilinear.TENSOR_BUDGET", 10)
        with pytest.raises(ResourceError):
            MultilinearForm.from_coeffs(np.zeros((4, 4)), "inf,inf")

    def test_is_diagonal(self):
        form = diagonal_form([1.0, -2.0, 3.0], "inf,inf,inf")
        assert form.is_diagonal()
        assert np.array_equal(form.diagonal(), [1.0, -2.0, 3.0])
        assert not MultilinearForm.from_coeffs(
            [[1.0, 1.0], [0.0, 1.0]], "inf,inf"
        ).is_diagonal()


class TestEvaluate:
    def test_single_coefficient(self):
        coeffs = np.zeros((3, 3, 3))
        coeffs[0, 0, 0] = 2.5
        form = MultilinearForm.from_coeffs(coeffs, "inf,inf,inf")
        e1 = np.eye(3)[0]
        assert evaluate(form, [e1, e1, e1]) == 2.5

    def test_hadamard(self, hadamard):
        assert evaluate(hadamard, [np.array([1, 1]), np.array([1, -1])]) == 2

    def test_zero_argument(self, rng):
        form = gaussian_form((3, 4, 2), "inf,inf,inf", rng)
        args = [rng.standard_normal(3), np.zeros(4), rng.standard_normal(2)]
        assert evaluate(form, args) == 0

    def test_dimension_mismatch(self, hadamard):
        with pytest.raises(DimensionError):
            evaluate(hadamard, [np.ones(2), np.ones(3)])
        with pytest.raises(DimensionError):
            evaluate(hadamard, [np.ones(2)])

    def test_linear_in_each_slot(self, rng):
        form = gaussian_form((3, 3, 3), "inf,inf,inf", rng, field="complex")
        args = [rng.standard_normal(3) for _ in range(3)]
        x, y = rng.standard_normal(3), rng.standard_normal(3) + 1j
        a, b = 0.7 - 0.2j, -1.3
        for slot in range(3):
            mixed = list(args)
            mixed[slot] = a * x + b * y
            with_x, with_y = list(args), list(args)
            with_x[slot], with_y[slot] = x, y
            expected = a * evaluate(form, with_x) + b * evaluate(form, with_y)
            scale = np.abs(form.coeffs).sum() * 10
            assert abs(evaluate(form, mixed) - expected) <= 1e-12 * scale


class TestBlockCoefficients:
    def test_identity_partition(self, rng):
        form = gaussian_form((2, 3, 4), "inf,inf,inf", rng)
        part = PartitionSpec.identity(3)
        assert block_coefficient(form, part, (1, 2, 3)) == form.coeffs[1, 2, 3]
        assert np.array_equal(block_value_tensor(form, part), form.coeffs)

    def test_diagonal_read(self, hadamard):
        part = PartitionSpec.single_block(2)
        assert block_coefficient(hadamard, part, (1,)) == -1
        assert np.array_equal(block_value_tensor(hadamard, part), [1.0, -1.0])

    def test_two_blocks(self, rng):
        form = gaussian_form((3, 3, 3), "inf,inf,inf", rng)
        part = PartitionSpec.parse("2,1")
        for i, j in [(0, 2), (2, 1), (1, 1)]:
            assert block_coefficient(form, part, (i, j)) == form.coeffs[i, i, j]

    def test_index_out_of_range(self, hadamard):
        with pytest.raises(DimensionError):
            block_coefficient(hadamard, PartitionSpec.identity(2), (0, 2))

    def test_mixed_extents_in_a_block(self, rng):
        form = gaussian_form((2, 3), "inf,inf", rng)
        with pytest.raises(StructuralError):
            block_value_tensor(form, PartitionSpec.single_block(2))
        # the identity partition is fine
        assert block_value_tensor(form, PartitionSpec.identity(2)).shape == (2, 3)

    @pytest.mark.parametrize(
        "dims, assignment",
        [
            ((3, 3, 3, 3), (1, 1, 2, 2)),
            ((3, 2, 3), (1, 2, 1)),
            ((2, 2, 2), (1, 1, 1)),
            ((4, 2), (1, 2)),
        ],
    )
    def test_matches_evaluate(self, rng, dims, assignment):
        form = gaussian_form(dims, ["inf"] * len(dims), rng, field="complex")
        part = PartitionSpec(assignment=assignment)
        values = block_value_tensor(form, part)
        assert np.array_equal(values, brute_block_tensor(form, part))


class TestFormIO:
    def test_document_layout(self, hadamard):
        data = form_to_dict(hadamard)
        assert data == {
            "field": "real",
            "m": 2,
            "dims": [2, 2],
            "pspec": ["inf", "inf"],
            "coeffs": [1.0, 1.0, 1.0, -1.0],
        }

    def test_complex_fixture(self, tmp_path, rng):
        form = gaussian_form((2, 3), ["4/3", 4], rng, field="complex")
        path = tmp_path / "form.json"
        save_form(form, path)
        loaded = load_form(path)
        assert loaded.field == ScalarField.COMPLEX
        assert loaded.pspec == form.pspec
        assert np.array_equal(loaded.coeffs, form.coeffs)
        assert json.loads(path.read_text())["pspec"] == ["4/3", 4]

    def test_float_exponents_on_load(self):
        form = form_from_dict(
            {"dims": [1, 1], "pspec": [1.5, "inf"], "coeffs": [2.0]}
        )
        assert form.pspec.entries == (Fraction(3, 2), INF)

    def test_m_disagrees_with_dims(self):
        with pytest.raises(DimensionError):
            form_from_dict({"m": 3, "dims": [1, 1], "pspec": [2, 2], "coeffs": [1]})

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(DimensionError):
            load_form(path)

    def test_missing_file_names_path(self, tmp_path):
        path = tmp_path / "missing.json"
        with pytest.raises(OSError, match="missing.json"):
            load_form(path)
