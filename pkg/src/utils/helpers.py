from fractions import Fraction
from typing import Any, Dict, Iterable, List


def decimal_str(value: int) -> str:
    """
    Exact decimal rendering of a big integer
    """
    return str(int(value))


def decimal_list(values: Iterable[int]) -> List[str]:
    return [decimal_str(v) for v in values]


def fraction_payload(value: Fraction) -> Dict[str, Any]:
    """
    Exact rational as numerator/denominator strings plus a float rendering
    """
    value = Fraction(value)
    return {
        "num": decimal_str(value.numerator),
        "den": decimal_str(value.denominator),
        "float": float(value),
    }


def stringify_exact(value: Any) -> Any:
    """
    Replace ints (not bools) and Fractions by exact strings, recursively
    """
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return decimal_str(value)
    if isinstance(value, Fraction):
        return fraction_payload(value)
    if isinstance(value, dict):
        return {str(k): stringify_exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [stringify_exact(v) for v in value]
    return value


def format_error_message(error: Exception) -> Dict[str, Any]:
    """
    Format error message for the CLI error envelope
    """
    return {
        "error": str(error),
        "type": error.__class__.__name__
    }
