import doctest

import pytest

import cyclestat.algebra
import cyclestat.enumeration
import cyclestat.formulas
import cyclestat.hopping
import cyclestat.permutations

MODULES = [
    cyclestat.permutations,
    cyclestat.hopping,
    cyclestat.algebra,
    cyclestat.enumeration,
    cyclestat.formulas,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    results = doctest.testmod(module, verbose=False)
    assert results.failed == 0
    assert results.attempted > 0
