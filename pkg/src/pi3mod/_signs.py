"""Sign switches for the cross-effect formulas, used only by negative-control runs.

Each entry multiplies one term of the corresponding formula.  Production code
never changes them; ``flipped`` negates one for the duration of a block.
"""

from __future__ import annotations

from contextlib import contextmanager

SIGN = {
    "nabla": 1,
    "q_k": 1,
    "l_k": 1,
    "mu": 1,
    "psi": 1,
    "psi_bar_1": 1,
}

MUTATIONS = tuple(SIGN)


@contextmanager
def flipped(name: str):
    if name not in SIGN:
        raise KeyError(f"unknown mutation {name!r}; choose from {', '.join(MUTATIONS)}")
    SIGN[name] = -SIGN[name]
    try:
        yield
    finally:
        SIGN[name] = -SIGN[name]


def any_flipped() -> bool:
    return any(v != 1 for v in SIGN.values())
