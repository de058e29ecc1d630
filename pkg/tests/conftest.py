from fractions import Fraction

import pytest

from leibniz3 import GF, QQ, CentralFamilySpec, abelian, central_family, direct_sum, filippov4
from leibniz3.algebra3 import Algebra3
from leibniz3.generators import A2_SEED

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def make_a2(field=QQ):
    return central_family(CentralFamilySpec(1, 1, A2_SEED, field))


def build_corpus():
    """Generated algebras: abelian, central families, direct sums, filippov4."""
    corpus = []
    for field in FIELDS:
        for n in range(4):
            corpus.append(("abelian", abelian(n, field)))
        for p in range(1, 5):
            for q in range(1, 4):
                for seed in range(3):
                    spec = CentralFamilySpec(p, q, seed, field)
                    corpus.append((f"central{spec}", central_family(spec)))
        small = [central_family(CentralFamilySpec(p, q, s, field))
                 for p, q, s in [(1, 1, A2_SEED), (2, 1, 7), (2, 2, 11), (1, 2, 5)]]
        for i, x in enumerate(small):
            corpus.append((f"sum-abelian{i}-{field}", direct_sum(x, abelian(1, field))))
            for j, y in enumerate(small[i:]):
                corpus.append((f"sum{i}{j}-{field}", direct_sum(x, y)))
        if field.char != 2:
            f4 = filippov4(field)
            corpus.append((f"filippov4-{field}", f4))
            corpus.append((f"filippov4+a2-{field}", direct_sum(f4, make_a2(field))))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture
def a2():
    return make_a2()


@pytest.fixture
def f4():
    return filippov4(QQ)


@pytest.fixture
def bad2():
    # only [e0, e0, e0] = e0 over Q: the identity fails with defect -2 e0
    return Algebra3(QQ, 2, {(0, 0, 0): (Fraction(1), Fraction(0))})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)")
