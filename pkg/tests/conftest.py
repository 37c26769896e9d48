import pytest

from equipath.graphs import from_graph6
from equipath.search import _levelwise_forms


@pytest.fixture(scope="session")
def forms_by_order():
    """Canonical graph6 forms of every isomorphism class, orders 1..8."""
    return {n: _levelwise_forms(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def classes_by_order(forms_by_order):
    """Decoded class representatives, orders 1..8."""
    return {n: [from_graph6(f) for f in forms]
            for n, forms in forms_by_order.items()}
