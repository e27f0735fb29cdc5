"""polybern - exact poly-Bernoulli numbers with negative indices

Seven formulas for B_{n,k} = B_n^(-k), brute-force oracles counting
Callan permutations and lonesum matrices, and the suites checking them
against each other.
"""

import os
from importlib import metadata


def test(*args):  # pragma: no cover
    r"""Run all the module tests.

    Equivalent to running ``py.test polybern`` in the base

    Args:
      *args: add arguments to pytest

    To test an installed version of polybern use

    .. code-block:: bash

       $ python -c "import polybern; polybern.test()"

    """
    import pytest  # pylint: disable=import-outside-toplevel

    path = os.path.join(os.path.split(__file__)[0])
    pytest.main(args=[path, "--doctest-modules", "-r s", "--no-cov"] + list(args))


try:
    __version__ = metadata.version("polybern")
except metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0"
