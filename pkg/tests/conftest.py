import pytest

from janetbar import VariableOrdering
from randsets import S


@pytest.fixture
def ident():
    return VariableOrdering.identity


# Small sets used throughout the tests.
FIVE_TERMS = S("x1 x1^2 x2*x3 x1*x2^2*x3 x2^3*x3", 3)
ESCALIER = S("1 x1 x2 x3", 3)
TWO_LINEAR = S("x1 x2", 2)
FOUR_TERMS = S("x1^3 x2^3 x1^4*x2*x3 x3^2", 3)
SQUARE_PAIR = S("x1^2 x1*x2", 2)
GAPPED = S("x1*x2^3 x1^3*x2", 2)
RUNNING = S("x1 x1^2 x2 x1*x3", 3)
UNITARY = S("x1^3 x1*x2 x2^2", 2)
TEN_TERMS = S("x2*x3 x1^2 x3^2 x2^2 x1*x2 x1*x2*x4 x1^2*x4 x4*x3 x2^2*x4 x1^2*x3", 4)
