"""Exceptions related with dataset files, checkpoints and exports.
"""
from bathywave.core.exceptions import BathywaveError


class BadMagic(BathywaveError):
    """Raised when a file does not start with the expected magic bytes."""

    def __init__(self, path, expected, found):
        super().__init__(path, expected, found)
        self.path = path
        self.expected = expected
        self.found = found

    def __str__(self):
        return f"{self.path}: expected magic {self.expected!r}, found {self.found!r}"


class VersionUnsupported(BathywaveError):
    """Raised when a file declares a format version this release cannot read."""

    def __init__(self, path, version):
        super().__init__(path, version)
        self.path = path
        self.version = version

    def __str__(self):
        return f"{self.path}: unsupported format version {self.version}"


class HeaderCorrupted(BathywaveError):
    """Raised when a header checksum does not match its content."""

    def __init__(self, path):
        super().__init__(path)
        self.path = path

    def __str__(self):
        return f"{self.path}: header checksum mismatch"


class TruncatedFile(BathywaveError):
    """Raised when a file ends before its declared content."""

    def __init__(self, path, expected, found):
        super().__init__(path, expected, found)
        self.path = path
        self.expected = expected
        self.found = found

    def __str__(self):
        return f"{self.path}: expected {self.expected} bytes, file holds {self.found}"


class CountMismatch(BathywaveError):
    """Raised when a file holds more data than its header declares."""

    def __init__(self, path, expected, found):
        super().__init__(path, expected, found)
        self.path = path
        self.expected = expected
        self.found = found

    def __str__(self):
        return f"{self.path}: header declares {self.expected} bytes of records, file holds {self.found}"


class EmptyPayload(BathywaveError):
    """Raised when an export receives nothing to write."""

    def __init__(self, what):
        super().__init__(what)
        self.what = what

    def __str__(self):
        return f"nothing to export for {self.what}"
