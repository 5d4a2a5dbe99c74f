from fractions import Fraction

import pytest

from qgroups.corep import (CorepMatrix, HeckeOp, check_lorentz_X,
                           clebsch_gordan_check, conjugate_corep,
                           contragredient, direct_sum, flip, fundamental,
                           hecke_sigma, kernel_is_invariant, mor_space,
                           multiplicity_table, spin_corep, subcorep,
                           sym_subspace, symmetrizer, tensor_power,
                           tensor_prod, trivial)
from qgroups.exceptions import CorepError, DimensionError, PresentationError
from qgroups.hopf import builtin, make_sigma_N
from qgroups.linalg import equal, identity, matrix
from qgroups.scalar import FIELD, generator

q = generator()
SPINS = ["0", "1/2", "1", "3/2"]


class TestCorepMatrix:
    def test_fundamental(self, slq2):
        w = fundamental(slq2)
        assert w.dim == 2
        assert w.verify().passed

    def test_not_a_corepresentation(self, slq2):
        a, b, _, d = (slq2.gen(i, j) for i in range(2) for j in range(2))
        with pytest.raises(CorepError) as exc:
            CorepMatrix([[a, b], [0, d]], slq2)
        assert "comultiplication" in str(exc.value)

    def test_counit_failure(self, slq2):
        report = CorepMatrix([[2]], slq2, check=False).verify()
        assert report["comultiplication"].passed is False
        assert report["counit"].passed is False

    def test_must_be_square(self, slq2):
        with pytest.raises(DimensionError):
            CorepMatrix([[slq2.gen(0, 0), slq2.gen(0, 1)]], slq2)

    def test_format(self, slq2):
        assert fundamental(slq2).format() == [["a", "b"], ["c", "d"]]


class TestConstructions:
    def test_tensor_power(self, slq2):
        v = tensor_power(slq2, 2)
        assert v.dim == 4
        assert v.verify().passed
        assert tensor_power(slq2, 0) == trivial(slq2)

    def test_negative_power(self, slq2):
        with pytest.raises(ValueError):
            tensor_power(slq2, -1)

    def test_direct_sum(self, slq2):
        v = direct_sum(trivial(slq2), fundamental(slq2))
        assert v.dim == 3
        assert v.verify().passed

    def test_contragredient(self, slq2):
        v = contragredient(fundamental(slq2))
        assert v.format() == [["d", "-q*c"], ["-q^-1*b", "a"]]

    def test_conjugate_corep(self, slq2):
        T = matrix([[1, 1], [0, 1]])
        assert conjugate_corep(fundamental(slq2), T).verify().passed

    def test_different_presentations(self, slq2, suq2):
        with pytest.raises(PresentationError):
            tensor_prod(fundamental(slq2), fundamental(suq2))

    def test_subcorep_of_symmetric_tensors(self, slq2):
        u = subcorep(tensor_power(slq2, 2), sym_subspace(2, slq2))
        assert u.dim == 3
        assert u.verify().passed

    def test_invariant_kernels(self, slq2):
        ww = tensor_power(slq2, 2)
        assert kernel_is_invariant(slq2.relations[1].E, ww)
        assert not kernel_is_invariant(matrix([[1, 0, 0, 0]]), ww)


class TestMorSpace:
    def test_schur(self, slq2):
        w = fundamental(slq2)
        basis = mor_space(w, w)
        assert len(basis) == 1
        assert equal(basis[0], identity(2))

    def test_invariant_vector(self, slq2):
        basis = mor_space(trivial(slq2), tensor_power(slq2, 2))
        assert len(basis) == 1
        assert basis[0].shape == (4, 1)

    def test_invariant_functional(self, slq2):
        assert len(mor_space(tensor_power(slq2, 2), trivial(slq2))) == 1

    def test_no_intertwiner(self, slq2):
        assert mor_space(trivial(slq2), fundamental(slq2)) == []


class TestHecke:
    def test_sigma_of_two_factors(self, slq2):
        assert equal(hecke_sigma(2, 1, slq2).matrix, make_sigma_N(2, q))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_relations_on_four_factors(self, slq2, k):
        op = hecke_sigma(4, k, slq2)
        assert op.matrix.shape == (16, 16)

    def test_position(self, slq2):
        with pytest.raises(ValueError):
            HeckeOp(2, 2, identity(4), q)

    @pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
    def test_symmetrizer_absorbs_sigma(self, slq2, n, k):
        S = symmetrizer(n, slq2)
        assert equal(hecke_sigma(n, k, slq2) * S, S)

    def test_needs_two_by_two(self):
        with pytest.raises(PresentationError):
            sym_subspace(2, builtin("slqN", N=3))


class TestSpin:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
    def test_symmetric_subspace_dimension(self, slq2, n):
        assert sym_subspace(n, slq2).shape == (2 ** n, n + 1)

    def test_spin_zero_and_one_half(self, slq2):
        assert spin_corep(0, slq2).dim == 1
        assert spin_corep("1/2", slq2).dim == 2

    @pytest.mark.parametrize("l", ["1", "3/2"])
    def test_higher_spins(self, slq2, l):
        v = spin_corep(l, slq2)
        assert v.dim == int(2 * Fraction(l)) + 1
        assert v.verify().passed

    @pytest.mark.parametrize("l", [-1, "1/3"])
    def test_not_a_half_integer(self, slq2, l):
        with pytest.raises(ValueError):
            spin_corep(l, slq2)

    def test_multiplicities(self, slq2):
        table = multiplicity_table("1/2", "1/2", slq2)
        assert table == {Fraction(0): 1, Fraction(1, 2): 0, Fraction(1): 1}

    def test_clebsch_gordan(self, slq2):
        report = clebsch_gordan_check(1, "1/2", slq2)
        assert report.passed, repr(report)
        assert list(report) == ["c=0", "c=1/2", "c=1", "c=3/2"]

    @pytest.mark.parametrize("a", SPINS)
    @pytest.mark.parametrize("b", SPINS)
    def test_schur(self, slq2, a, b):
        basis = mor_space(spin_corep(a, slq2), spin_corep(b, slq2))
        assert len(basis) == (1 if a == b else 0)

    @pytest.mark.parametrize("a", SPINS)
    @pytest.mark.parametrize("b", SPINS)
    def test_clebsch_gordan_table(self, slq2, a, b):
        report = clebsch_gordan_check(a, b, slq2)
        assert report.passed, repr(report)

    def test_clebsch_gordan_cap(self, slq2):
        with pytest.raises(ValueError):
            clebsch_gordan_check(2, 0, slq2)


class TestLorentz:
    def test_flip_at_the_classical_point(self):
        report = check_lorentz_X(flip(FIELD), P=builtin("suq2", q=1))
        assert report.passed, repr(report)
        assert report["reality"].detail == "c = 1"

    def test_zero_is_not_invertible(self, suq2):
        report = check_lorentz_X(matrix([[0] * 4] * 4), P=suq2)
        assert not report["invertibility"].passed

    def test_identity_does_not_commute(self, suq2):
        report = check_lorentz_X(identity(4), P=suq2)
        assert not report["commutation"].passed
        assert report["commutation"].detail == "entry (11,11) differs"
        assert report["commutation"].witness == "(-q^-1+q)*b*c"

    def test_shape(self, suq2):
        with pytest.raises(DimensionError):
            check_lorentz_X(identity(2), P=suq2)
