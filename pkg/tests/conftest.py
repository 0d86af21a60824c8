import pytest

from ucycle.core import Params, parse_word
from ucycle.sets import AscendingRotations, Full, NoPrimes, SetSpec, WordSet, materialize

# Listed verbatim in the source material.
S1_WORDS = """123 124 125 134 135 145 231 234 235 241 245 251 312 341 342
345 351 352 412 413 423 451 452 453 512 513 514 523 524 534""".split()
S2_WORDS = """12 15 18 21 22 24 25 26 27 28 33 36 39 42 44 45 46 48 49 51 52 54 55 56 57 58
62 63 64 65 66 68 69 72 75 77 78 81 82 84 85 86 87 88 93 94 96 99""".split()
SWW_WORDS = """1112 1121 1122 1211 1212 1221 1222 1322 2111
2112 2121 2122 2132 2211 2212 2213 2221 3221""".split()

S1_CYCLE = "123124134234512513514523524534"
S2_STREAM = "33621224251526394454648182728496556685758699"
T42_CYCLE = "1111211221212222"


def w(text):
    return parse_word(text)


def words(texts):
    return {parse_word(t) for t in texts}


@pytest.fixture(scope="session")
def s1():
    return materialize(SetSpec.of(3, 5, AscendingRotations()))


@pytest.fixture(scope="session")
def s2():
    return materialize(SetSpec.of(2, 9, NoPrimes()))


@pytest.fixture(scope="session")
def t42():
    return materialize(SetSpec.of(4, 2, Full()))


@pytest.fixture(scope="session")
def t33():
    return materialize(SetSpec.of(3, 3, Full()))


@pytest.fixture(scope="session")
def sww():
    return WordSet.from_words(Params(4, 3), [parse_word(t) for t in SWW_WORDS])


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
