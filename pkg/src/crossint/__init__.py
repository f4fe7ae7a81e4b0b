"""Exact extremal computations for cross-t-intersecting uniform set families.

Subpackages by concern:

* exactmath: exact binomials, binary entropy, log-scale values
* setfam:    explicit families, left compression, boundary conditions
* hirschorn: the conjectured optimum (prefix-threshold pairs)
* oracle:    the true optimum by brute force (two independent modes)
* counterex: the two counterexample constructions
* bounds:    the quantity M sandwich and the two analytic upper bounds
* cli:       `crossint` command-line front end
"""

__version__ = "0.1.0"
