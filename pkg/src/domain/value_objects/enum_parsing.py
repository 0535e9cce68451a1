"""Lookup of enum members from config text."""
from enum import Enum
from typing import Type, TypeVar, Union

from domain.exceptions import ConfigError

E = TypeVar("E", bound=Enum)


def parse_enum(enum_type: Type[E], value: Union[str, E], field: str) -> E:
    """
    Convert config text (or a member) into an enum member.

    Args:
        enum_type: Target enum class
        value: Member or its string value
        field: Config field name for the error message

    Returns:
        Enum member

    Raises:
        ConfigError: If the value names no member
    """
    if isinstance(value, enum_type):
        return value
    try:
        return enum_type(value)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_type)
        raise ConfigError(f"{field}: unknown value {value!r} (expected one of: {allowed})") from None
