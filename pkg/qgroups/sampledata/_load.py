import os

from qgroups.io import read_presentation


def load_sample_data(filename):
    """
    Parameters
    ----------
    filename : string
         file name of the bundled presentation

    Load a presentation from a file with .qg extension

    See `qgroups.io.read_presentation` for more information

    Example
    -------
        P = load_sample_data('slq2.qg')
    """
    extension = os.path.splitext(filename)[1]
    handler = {".qg": read_presentation}
    if extension not in handler:
        raise ValueError("Sample data not supported! Choose a .qg file")

    here = os.path.dirname(__file__)
    complete_path = os.path.join(here, filename)
    return handler[extension](complete_path)


def load_slq2():
    """
    Load SL_q(2) with symbolic q: generators a, b, c, d and the two
    relations E (into w ⊗ w) and E' (out of w ⊗ w).

    Example
    -------
    >>> from qgroups.sampledata import load_slq2
    >>> load_slq2()
    Presentation(name='slq2', N=2, relations=['E', "E'"], star=False)
    """
    return load_sample_data("slq2.qg")


def load_sl_t1_2():
    """
    Load the non-standard deformation of SL(2) at t = 1. The relations
    have integer coefficients and q is fixed to 1.

    Example
    -------
    >>> from qgroups.sampledata import load_sl_t1_2
    >>> load_sl_t1_2()
    Presentation(name='sl_t1_2', N=2, relations=['E', "E'"], star=False)
    """
    return load_sample_data("sl_t1_2.qg")


def load_suq2():
    """
    Load SU_q(2), SL_q(2) with the star given by Q = [[0, -q], [1, 0]].

    Example
    -------
    >>> from qgroups.sampledata import load_suq2
    >>> load_suq2()
    Presentation(name='suq2', N=2, relations=['E', "E'"], star=True)
    """
    return load_sample_data("suq2.qg")


def load_slq2_without_eprime():
    """
    Load SL_q(2) with the relation E' left out. The inverse derived from E
    is only a right inverse of w, so this presentation fails the antipode
    axiom; useful to see a failing check.

    Example
    -------
    >>> from qgroups.sampledata import load_slq2_without_eprime
    >>> from qgroups.hopf import check_hopf_axioms
    >>> check_hopf_axioms(load_slq2_without_eprime())["antipode"].passed
    False
    """
    return load_sample_data("slq2_without_eprime.qg")
