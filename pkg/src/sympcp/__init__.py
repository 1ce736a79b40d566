"""Symmetric PCP, Floyd's reduction, and the 3x3 matrix encoding of PCP instances."""

from .words import (
    BINARY, QUATERNARY, Alphabet, PcpInstance, PcpSolution, Word,
    binary_code, check_solution, concat, is_symmetric, prefix_comparable,
    recode_4_to_2, symmetric_closure,
)
from .search import SearchLimits, SearchOutcome, enumerate_solutions, solve

__version__ = "0.1.0"
