import pytest

from qgroups.exceptions import DimensionError, EmptyFileError, ParseError
from qgroups.hopf import builtin, star
from qgroups.io import parse_presentation, read_presentation, serialize_presentation
from qgroups.linalg import equal
from qgroups.ncalg import format_element
from qgroups.scalar import Involution


class TestPresentationFileOpening:
    def test_open_suq2_file(self, suq2):
        P = read_presentation("tests/test_files/suq2.qg")

        assert P == suq2
        assert P.name == "suq2"
        assert format_element(star(P.gen(0, 1), P)) == "-q*c"

    def test_open_empty_file(self):
        with pytest.raises(EmptyFileError):
            read_presentation("tests/test_files/empty.qg")

    def test_entries_split_over_lines(self, presentation_file, slq2):
        P = read_presentation(presentation_file.name)

        assert P.name == "split"
        assert [r.name for r in P.relations] == ["E", "E'"]
        assert equal(P.relations[0].E, slq2.relations[0].E)
        assert equal(P.relations[1].E, slq2.relations[1].E)

    def test_missing_matrix_directive(self):
        with pytest.raises(ParseError) as exc:
            read_presentation("tests/test_files/no_matrix.qg")
        assert exc.value.line == 2

    def test_wrong_number_of_entries(self):
        with pytest.raises(DimensionError):
            read_presentation("tests/test_files/bad_dimension.qg")

    def test_bad_scalar_position(self):
        with pytest.raises(ParseError) as exc:
            read_presentation("tests/test_files/bad_scalar.qg")
        assert exc.value.line == 3
        assert exc.value.col >= 5

    def test_star_entries(self):
        with pytest.raises(DimensionError):
            read_presentation("tests/test_files/bad_star.qg")


class TestParsePresentation:
    def test_defaults(self):
        P = parse_presentation("matrix 2\nrelation E s=0 t=2\n0 1 -q 0\n")

        assert P.alphabet == ("a", "b", "c", "d")
        assert not P.has_star
        assert P.involution is Involution.IDENTITY

    def test_unknown_directive(self):
        with pytest.raises(ParseError) as exc:
            parse_presentation("matrix 2\nrelations E s=0 t=2\n")
        assert (exc.value.line, exc.value.col) == (2, 1)

    def test_duplicate_matrix(self):
        with pytest.raises(ParseError):
            parse_presentation("matrix 2\nmatrix 2\n")

    def test_missing_keyword(self):
        with pytest.raises(ParseError):
            parse_presentation("matrix 2\nrelation E s=0 u=2\n0 1 -q 0\n")

    def test_unknown_involution(self):
        with pytest.raises(ParseError):
            parse_presentation("matrix 1\nstar Q 1 involution=transpose\n")

    def test_comments_are_ignored(self):
        P = parse_presentation("# one\nmatrix 2  # size\nname x # trailing\n")
        assert P.name == "x"
        assert P.relations == []

    def test_parameter(self):
        P = parse_presentation("matrix 2\nparameter q = 1/2\n")
        assert P.q * 2 == 1


class TestSerializePresentation:
    @pytest.mark.parametrize("name", ["slq2", "suq2", "slq2R", "sl_t1_2"])
    def test_text_parses_back(self, name):
        P = builtin(name)
        assert parse_presentation(serialize_presentation(P)) == P

    def test_header(self, slq2):
        lines = serialize_presentation(slq2).splitlines()
        assert lines[:3] == ["matrix 2", "name slq2", "generators a b c d"]
        assert "order weights=1,0,0,1 precedence=0,2,3,1" in lines
