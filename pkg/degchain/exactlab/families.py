"""
Parametrized degree-sequence families with known projected behaviour.
"""

from ..errors import ParameterOutOfRangeError
from ..graphcore.types import DegreeSequence


def quadratic_family(n: int) -> DegreeSequence:
    """
    `n` rows of sum 2 and columns ``(n-1, n-1, 1, 1)``.

    The space has ``n(2n-1)`` states. For ``n >= 3`` they fall into two
    isomorphism classes: the disconnected ``K_{n-1,2} + K_{1,2}`` (`n`
    states) and a connected class (``2n(n-1)`` states), and the projected
    switch chain has spectral gap ``2/n``. At ``n = 2`` all four columns
    have sum 1, so the 6 states form a single class of disconnected
    ``2 K_{1,2}`` graphs.

    Raises:
        ParameterOutOfRangeError: If ``n < 2``.
    """
    if n < 2:
        raise ParameterOutOfRangeError(f"family needs n >= 2, got {n}")
    return DegreeSequence.bipartite((2,) * n, (n - 1, n - 1, 1, 1))


def binomial_family(l: int) -> DegreeSequence:  # noqa: E741
    """
    Two rows of sum `l` and ``2l`` columns of sum 1.

    The space has ``binom(2l, l)`` states, all isomorphic. One Curveball
    trade from any state reaches every state with equal probability, while
    swapping the two rows' neighbourhoods takes `l` switches.

    Raises:
        ParameterOutOfRangeError: If ``l < 1``.
    """
    if l < 1:
        raise ParameterOutOfRangeError(f"family needs l >= 1, got {l}")
    return DegreeSequence.bipartite((l, l), (1,) * (2 * l))


FAMILIES = {
    "quadratic": quadratic_family,
    "binomial": binomial_family,
}
