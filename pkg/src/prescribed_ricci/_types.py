from typing import NamedTuple


class PhiParams(NamedTuple):
    """Positive-definite equivariant map [[x, z], [z, y]] (tensored with I_7)."""
    x: float
    y: float
    z: float


class PhiSqrtParams(NamedTuple):
    """Symmetric square root [[a, c], [c, b]] of a PhiParams matrix."""
    a: float
    b: float
    c: float


class RicTriple(NamedTuple):
    r1: float
    r2: float
    r3: float


class TensorTriple(NamedTuple):
    t1: float
    t2: float
    t3: float
