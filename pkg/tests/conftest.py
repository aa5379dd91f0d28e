import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qmatrix_gsb.freealg import Generator, NCPoly
from qmatrix_gsb.qlaurent import LaurentPoly
from qmatrix_gsb.quantum_matrix import build_relations

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in sorted(_ACCEPTANCE, key=lambda t: (t[0], t[1])):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}")


@pytest.fixture(scope="session")
def S2():
    return build_relations(2)


@pytest.fixture(scope="session")
def S3():
    return build_relations(3)


@pytest.fixture(scope="session")
def S4():
    return build_relations(4)


def Z(i, j):
    return NCPoly.gen(i, j)


# -- hypothesis strategies -------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)

laurent = st.dictionaries(st.integers(-3, 3), rationals, max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(bool)


def generators_st(n):
    return st.builds(Generator, st.integers(1, n), st.integers(1, n))


def words_st(n, max_len):
    return st.lists(generators_st(n), max_size=max_len).map(tuple)


def ncpolys(n, max_len=3, max_terms=4):
    return st.dictionaries(words_st(n, max_len), nonzero_laurent, max_size=max_terms).map(NCPoly)


# -- plain random generators (for the large sampled properties) -------------


def random_laurent(rng: random.Random) -> LaurentPoly:
    return LaurentPoly(
        {rng.randint(-2, 2): Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))}
    )


def random_word(rng: random.Random, n: int, length: int):
    return tuple(Generator(rng.randint(1, n), rng.randint(1, n)) for _ in range(length))


def random_poly(rng: random.Random, n: int, max_deg: int = 5, max_terms: int = 3) -> NCPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_word(rng, n, rng.randint(0, max_deg))] = random_laurent(rng)
    return NCPoly(terms)
