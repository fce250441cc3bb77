# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information


class Error(Exception):
    def __str__(self):
        return "typed regex error: %s" % ", ".join(str(a) for a in self.args)


class MalformedLiteral(Error):
    """The regex literal does not follow the literal grammar."""

    def __init__(self, position, message, *args):
        super().__init__(position, message, *args)
        self.position = position
        self.message = message

    def __str__(self):
        return "malformed regex literal at position %d: %s" % (
            self.position,
            self.message,
        )


class ShapeMismatch(Error):
    def __init__(self, expected, actual, *args):
        super().__init__(expected, actual, *args)
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return "shape mismatch: expected %s, got %s" % (self.expected, self.actual)


class ShapeViolation(Error):
    """A stack does not adhere to the shape contract of a routine or state."""

    def __str__(self):
        return "stack shape violation: %s" % "; ".join(str(a) for a in self.args)


class MissingChar(Error):
    def __init__(self, instruction, *args):
        super().__init__(instruction, *args)
        self.instruction = instruction

    def __str__(self):
        return "%s needs a consumed character" % self.instruction


class NotConsuming(Error):
    def __str__(self):
        return "regex may match empty string"
