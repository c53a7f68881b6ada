"""Exact algebraic degrees of Cayley graphs over finite groups.

The compiled core does all the work; this package re-exports its surface.

>>> import caydeg
>>> G = caydeg.group("Z20")
>>> caydeg.degree(G, caydeg.parse_set(G, "1,9,11,19"))["degree"]
2
"""

from caydeg._core import (
    CaydegError,
    Group,
    char_poly,
    construct_p_integral_circulant,
    degree,
    distinct_eigenvalue_bound,
    generates,
    group,
    is_two_integral,
    odd_valency_lift,
    order_bound,
    parse_set,
    set_words,
    verify,
    verify_Bk,
)

__all__ = [
    "CaydegError",
    "Group",
    "char_poly",
    "construct_p_integral_circulant",
    "degree",
    "distinct_eigenvalue_bound",
    "generates",
    "group",
    "is_two_integral",
    "odd_valency_lift",
    "order_bound",
    "parse_set",
    "set_words",
    "verify",
    "verify_Bk",
]

__version__ = "1.0.0"
