"""Reed-Solomon errors-and-erasures codec over GF(2^m).

Encoding is nonsystematic: codeword symbol i is the message polynomial
evaluated at alpha^i.  Three erasure-capable decoding pipelines plus a
plain errors-only decoder all reduce to one partial extended Euclidean
solve and recover the message whenever 2t + l < d.  The workbench
subpackage adds channel simulation, a brute-force reference decoder,
operation counting, and a CLI.
"""

from .codec import (CodeParams, DecodeResult, FailureCause, ReceivedWord,
                    decode_errors_only, decode_gao, decode_suggested,
                    decode_truong, encode, erasure_locator)
from .galois import DEFAULT_PRIMITIVE_POLYS, Field
from .key_equation import KeyEquationProblem, KeyEquationSolution
from .key_equation import solve as solve_key_equation
from .polynomial import MINUS_INF, Poly, xn_minus_one
from .spectral import (cyclotomic_quotient, evaluate_all, interpolate_all,
                       interpolate_subset)

__version__ = "0.1.0"

__all__ = [
    "CodeParams",
    "DEFAULT_PRIMITIVE_POLYS",
    "DecodeResult",
    "FailureCause",
    "Field",
    "KeyEquationProblem",
    "KeyEquationSolution",
    "MINUS_INF",
    "Poly",
    "ReceivedWord",
    "cyclotomic_quotient",
    "decode_errors_only",
    "decode_gao",
    "decode_suggested",
    "decode_truong",
    "encode",
    "erasure_locator",
    "evaluate_all",
    "interpolate_all",
    "interpolate_subset",
    "solve_key_equation",
    "xn_minus_one",
]
