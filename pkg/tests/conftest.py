"""Shared independent brute-force helpers.

These deliberately avoid the package's own partition/transform code so that
derived expected values come from a second route.
"""

import pytest


def brute_set_partitions(elements):
    """All set partitions of a list, as lists of lists (independent of the
    package's generator)."""
    if not elements:
        return [[]]
    first, rest = elements[0], elements[1:]
    out = []
    for smaller in brute_set_partitions(rest):
        for i in range(len(smaller)):
            out.append(smaller[:i] + [[first] + smaller[i]] + smaller[i + 1 :])
        out.append([[first]] + smaller)
    return out


def type_of_partition(blocks, n):
    tau = [0] * n
    for b in blocks:
        tau[len(b) - 1] += 1
    return tuple(tau)


@pytest.fixture(scope="session")
def partitions_of_3():
    return brute_set_partitions([0, 1, 2])
