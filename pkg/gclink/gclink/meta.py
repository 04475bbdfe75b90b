#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Module to store Enum class """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
from enum import Enum, EnumMeta


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------
class MembershipTestEnumMeta(EnumMeta):
    def __contains__(cls, item):
        if isinstance(item, cls):
            return True
        try:
            cls(item)
        except ValueError:
            return False
        return True


class BaseEnum(Enum, metaclass=MembershipTestEnumMeta):
    """With this you can do membership tests,
    e.g. >>> "left" in Handedness"""

    @classmethod
    def parse(cls, value):
        """
        Look up a member by value, case-insensitively for strings

        Args:
            value: Member value or the member itself

        Raises:
            ValueError: When no member matches

        Returns:
            member (BaseEnum): Matching member
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            value = value.strip().lower()
        if value not in cls:
            choices = ', '.join(str(member.value) for member in cls)
            raise ValueError(f'Invalid {cls.__name__}: {value!r} (expected one of {choices})')
        return cls(value)
