"""Exact, certified computations in the ordered group G over Z[t, 1/t, 1/(1-t)]."""
