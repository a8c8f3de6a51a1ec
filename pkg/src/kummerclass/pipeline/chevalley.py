"""Ambiguous class number formula."""


def chevalley_fixed_points(h_k: int, prod_e: int, deg: int, unit_index: int) -> int:
    """``#Cl_K^G = h_k * prod(e_v) / ([K:k] * (E_k : E_k ∩ N(K^x)))``.

    Raises ``ArithmeticError`` if the quotient is not an integer.
    """
    for name, v in (("h_k", h_k), ("prod_e", prod_e), ("deg", deg), ("unit_index", unit_index)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    num, den = h_k * prod_e, deg * unit_index
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not integral")
    return num // den
