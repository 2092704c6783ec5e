"""Checked exact integer division."""


class InexactDivisionError(ArithmeticError):
    """A division that should be exact left a remainder.

    Raised where integrality is a theorem (CLF summands, recurrence
    leading coefficients, fraction-free elimination steps), so hitting
    this signals an implementation bug, never bad input.
    """


def exact_div(num: int, den: int, context: str = "") -> int:
    q, r = divmod(num, den)
    if r:
        where = f" in {context}" if context else ""
        raise InexactDivisionError(f"{num} is not divisible by {den}{where}")
    return q
