"""Exact special values: Bernoulli numbers, Dirichlet L, modular symbols,
and algebraic critical L-values of level-1 newforms."""

from .bernoulli import (
    bernoulli_mod_p,
    bernoulli_mod_p_naive,
    bernoulli_quadratic,
    dirichlet_l_neg,
    gen_bernoulli,
    irregular_scan,
    rational_bernoulli,
    remove_euler,
)
from .characters import DirichletChar
from .lvalues import AlgebraicLValue, eigen_symbol_data, l_alg, l_alg_products
from .modsym import SymbolSpace, symbol_space

__all__ = [
    "AlgebraicLValue",
    "DirichletChar",
    "SymbolSpace",
    "bernoulli_mod_p",
    "bernoulli_mod_p_naive",
    "bernoulli_quadratic",
    "dirichlet_l_neg",
    "eigen_symbol_data",
    "gen_bernoulli",
    "irregular_scan",
    "l_alg",
    "l_alg_products",
    "rational_bernoulli",
    "remove_euler",
    "symbol_space",
]
