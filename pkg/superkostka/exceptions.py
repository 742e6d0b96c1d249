#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:exceptions.py
@time:2026/10/12
"""


class SuperKostkaError(ValueError):
    """base class of every domain error raised by superkostka."""


class InvalidAlgebra(SuperKostkaError):
    pass


class DimensionMismatch(SuperKostkaError):
    pass


class GroupTooLarge(SuperKostkaError):
    pass


class NotDominant(SuperKostkaError):
    pass


class NotCovariant(SuperKostkaError):
    pass


class NotApplicable(SuperKostkaError):
    pass


class NotDominantContent(SuperKostkaError):
    pass


class ParseError(SuperKostkaError):
    """
    malformed command line input.

    :param message: what went wrong
    :param position: 0-based offset of the offending character in the parsed text
    """

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super(ParseError, self).__init__(f'{message} (at position {position})')
