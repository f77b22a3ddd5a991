"""Shared hypothesis strategies."""
from hypothesis import strategies as st


@st.composite
def partitions(draw, max_size=8, min_size=0):
    n = draw(st.integers(min_size, max_size))
    parts, left = [], n
    while left:
        part = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(part)
        left -= part
    return tuple(parts)
