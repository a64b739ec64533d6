import pytest

from ncsym import IntegerPartition, NCSymExpr, SetPartition


@pytest.fixture
def sp():
    return SetPartition.parse


def sp_(text: str) -> SetPartition:
    return SetPartition.parse(text)


def ip_(*parts) -> IntegerPartition:
    return IntegerPartition(parts)


def elt(basis: str, text: str) -> NCSymExpr:
    return NCSymExpr.element(basis, SetPartition.parse(text))
