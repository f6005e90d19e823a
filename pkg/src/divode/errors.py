"""Error taxonomy shared by the library and the command line.

Every error carries a short machine-readable ``code`` and the process exit
status the CLI uses for it. Solver errors may also carry the partial
``report`` that was built before the failure.
"""

from __future__ import annotations


class DivodeError(Exception):
    code = "error"
    exit_status = 1

    def __init__(self, message: str, *, report=None):
        super().__init__(message)
        self.report = report


class ParseError(DivodeError, ValueError):
    code = "parse-error"
    exit_status = 2

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


class NotDefinedAtZero(DivodeError, ValueError):
    code = "not-defined-at-zero"
    exit_status = 2


class InvalidArgument(DivodeError, ValueError):
    code = "invalid-argument"
    exit_status = 2


class BasisMismatch(DivodeError, ValueError):
    code = "basis-mismatch"
    exit_status = 5


class EulerSumUndefined(DivodeError, ArithmeticError):
    code = "euler-sum-undefined"
    exit_status = 3


class PadeDegenerate(DivodeError, ArithmeticError):
    code = "pade-degenerate"
    exit_status = 3


class OracleDegenerate(DivodeError, ArithmeticError):
    code = "oracle-degenerate"
    exit_status = 3


class InverseExpansionUndefined(DivodeError, ArithmeticError):
    code = "inverse-expansion-undefined"
    exit_status = 4


class ReductionFailed(DivodeError, ArithmeticError):
    code = "reduction-failed"
    exit_status = 5


class SummationInconsistent(DivodeError, ArithmeticError):
    code = "summation-inconsistent"
    exit_status = 5
