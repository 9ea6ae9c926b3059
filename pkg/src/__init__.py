"""
tsimplicial - Source Code Package

This package contains modules for:
- Simplex-category combinatorics and the computable base category of finite sets
- Monads, T-categories, their nerves and the structure ladder
- Hom enrichment, 2-cells and the comonad K
- Copowers and powers by Δ[1]
- The command-line front end, report figures and utilities (config, errors)
"""
