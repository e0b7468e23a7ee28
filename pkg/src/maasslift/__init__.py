"""maasslift: exact arithmetic for the Saito-Kurokawa correspondence.

Level-1 modular forms, index-1 Jacobi forms, genus-2 Maass lifts with Hecke
action, critical L-values through modular symbols, and Bernoulli scans mod p,
all in exact arithmetic; hot mod-p kernels run under numba with a pure-numpy
fallback (MAASSLIFT_FORCE_NUMPY=1).
"""

__version__ = "0.1.0"
