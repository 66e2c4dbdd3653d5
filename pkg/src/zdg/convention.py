"""Self-loop conventions for elements with x*x = 0 (mod n)."""
from __future__ import annotations

import enum
import os

ENV_VAR = "ZDG_CONVENTION"


class Convention(enum.Enum):
    NO_LOOPS = "noloops"
    LOOP_COUNTS_2 = "loop2"
    LOOP_COUNTS_1 = "loop1"

    @property
    def has_loops(self) -> bool:
        return self is not Convention.NO_LOOPS

    @property
    def loop_weight(self) -> int:
        """Degree contributed by one loop."""
        return {"noloops": 0, "loop2": 2, "loop1": 1}[self.value]

    @classmethod
    def parse(cls, value: "str | Convention | None") -> "Convention":
        if isinstance(value, Convention):
            return value
        if value is None:
            return cls.default()
        key = value.strip().lower().replace("_", "").replace("-", "")
        aliases = {
            "noloops": cls.NO_LOOPS,
            "loop2": cls.LOOP_COUNTS_2,
            "loopcounts2": cls.LOOP_COUNTS_2,
            "loop1": cls.LOOP_COUNTS_1,
            "loopcounts1": cls.LOOP_COUNTS_1,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown convention {value!r}; use noloops, loop2 or loop1") from None

    @classmethod
    def default(cls) -> "Convention":
        env = os.environ.get(ENV_VAR)
        return cls.parse(env) if env else cls.NO_LOOPS

    def __str__(self):
        return self.value
