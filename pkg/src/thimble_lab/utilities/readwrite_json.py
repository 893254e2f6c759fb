# -------------------------------------------
# Functions for formatting json output.
# -------------------------------------------
import json


def dumps_json(packable: dict) -> str:
    """:return: Deterministic json text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(packable, indent=2, sort_keys=True) + '\n'


# --- Number formatting ---

def format_real(value: float) -> str:
    """:return: Decimal string with 17 significant digits (round-trips a double)."""
    return f"{float(value):.17g}"


def format_complex(value: complex) -> dict:
    value = complex(value)
    return {'re': format_real(value.real), 'im': format_real(value.imag)}
