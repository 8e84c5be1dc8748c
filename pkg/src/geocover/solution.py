from dataclasses import dataclass, field
from typing import Any

OK = "ok"
INFEASIBLE = "infeasible"


@dataclass
class Solution:
    """Objective value plus the witness that attains it.

    ``value`` is ``None`` exactly when ``status`` is ``"infeasible"``.
    """

    status: str
    value: Any = None
    witness: Any = field(default_factory=list)

    @property
    def feasible(self):
        return self.status == OK

    @classmethod
    def infeasible(cls):
        return cls(INFEASIBLE, None, [])
