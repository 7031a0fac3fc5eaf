"""Feedback vertex sets, cycle packings and exact solvers for O_k-free graphs."""

from ._okpack import *  # noqa: F401,F403
from ._okpack import (  # noqa: F401
    BudgetExceeded,
    CapExceeded,
    Graph,
    ParseError,
    SearchLimitError,
    TooLarge,
)
