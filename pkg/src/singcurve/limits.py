"""Enumeration limits.

Every brute-force routine estimates its work up front and raises
:class:`~singcurve.errors.BoundExceeded` rather than truncating.
"""

from singcurve.errors import BoundExceeded

#: largest field order accepted for element arithmetic
ARITHMETIC_BOUND = 2**24
#: largest field order whose elements may be listed
ELEMENT_ENUM_BOUND = 2**20
#: largest q**d for irreducible-polynomial enumeration
IRREDUCIBLE_BOUND = 2**24
#: default work bound for the point-counting oracles
WORK_BOUND = 2**24


def check(what: str, estimate: int, bound: int) -> None:
    if estimate > bound:
        raise BoundExceeded(what, estimate, bound)
