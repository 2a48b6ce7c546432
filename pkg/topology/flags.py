"""Three-valued flags for properties the artifact cannot always decide."""

from enum import Enum


class TriState(Enum):
    """Yes / No / Unknown answer to a topological or geometric question."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def from_bool(cls, value):
        return cls.YES if value else cls.NO

    @classmethod
    def parse(cls, text):
        """Parse 'yes'/'no'/'unknown' (case-insensitive)."""
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"expected one of yes/no/unknown, got {text!r}") from None

    def __str__(self):
        return self.value
