"""Round-by-round fault location driven by a code's alarms.

Round i of a monitoring run reports the alarm set B_i(fault) & C: the code
vertices within distance i of the faulty vertex.  A memoryless monitor must
pin the fault down from a single round's alarms; a monitor with memory can
use the whole history so far.  Running every scenario to round r ties the
two modes back to the static families: every fault is detected and located
memorylessly by round r exactly when C is a weak r-code, and with memory
exactly when C is a light r-code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, distances


class DetectionMode(enum.Enum):
    MEMORYLESS = "memoryless"
    WITH_MEMORY = "with_memory"


@dataclass(frozen=True)
class AlarmHistory:
    """Alarm sets a single fault produces, one per round starting at 0."""

    fault: int
    alarms: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"fault": self.fault, "alarms": [list(a) for a in self.alarms]}


@dataclass(frozen=True)
class DetectionOutcome:
    """How one fault scenario plays out under a given monitor mode.

    detected_round is the first round with a nonempty alarm (None if the
    fault never rings any code vertex); located_round the first round after
    which no other fault hypothesis remains consistent (None if ambiguity
    survives the whole run).
    """

    fault: int
    mode: DetectionMode
    history: AlarmHistory
    detected_round: int | None
    located_round: int | None

    @property
    def detected(self) -> bool:
        return self.detected_round is not None

    @property
    def located(self) -> bool:
        return self.located_round is not None

    def to_dict(self) -> dict:
        return {
            "fault": self.fault,
            "mode": self.mode.value,
            "history": self.history.to_dict(),
            "detected_round": self.detected_round,
            "located_round": self.located_round,
        }


class Scenario:
    """Precomputed alarm tables for one graph, code and round horizon."""

    def __init__(self, g: Graph, code: Iterable[int], max_round: int):
        if max_round < 0:
            raise ValueError(f"max_round must be nonnegative, got {max_round}")
        self.graph = g
        self.code = tuple(sorted(set(code)))
        self.max_round = max_round
        dm = distances(g)
        mask = 0
        for v in self.code:
            if not 0 <= v < g.n:
                raise ValueError(f"code vertex {v} is outside 0..{g.n - 1}")
            mask |= 1 << v
        self._rows = [
            tuple(dm.ball_mask(i)[x] & mask for i in range(max_round + 1))
            for x in range(g.n)
        ]

    def _vertices(self, alarm_mask: int) -> tuple[int, ...]:
        return tuple(v for v in self.code if alarm_mask >> v & 1)

    def alarm_set(self, fault: int, round_index: int) -> tuple[int, ...]:
        """Code vertices ringing in the given round for the given fault."""
        return self._vertices(self._rows[fault][round_index])

    def history(self, fault: int) -> AlarmHistory:
        return AlarmHistory(fault, tuple(self._vertices(m) for m in self._rows[fault]))

    def outcome(
        self,
        fault: int,
        mode: DetectionMode = DetectionMode.MEMORYLESS,
        include_no_fault: bool = False,
    ) -> DetectionOutcome:
        """Play the scenario out.  Competing hypotheses are the other
        vertices; with include_no_fault the all-quiet run competes too, so
        a fault can then only be located through nonempty alarms."""
        mine = self._rows[fault]
        detected = next((i for i, m in enumerate(mine) if m), None)
        rivals = [row for x, row in enumerate(self._rows) if x != fault]
        if include_no_fault:
            rivals.append(tuple([0] * (self.max_round + 1)))
        located = None
        if mode is DetectionMode.MEMORYLESS:
            for i in range(self.max_round + 1):
                if all(row[i] != mine[i] for row in rivals):
                    located = i
                    break
        else:
            alive = rivals
            for i in range(self.max_round + 1):
                alive = [row for row in alive if row[i] == mine[i]]
                if not alive:
                    located = i
                    break
        return DetectionOutcome(fault, mode, self.history(fault), detected, located)

    def outcomes(
        self,
        mode: DetectionMode = DetectionMode.MEMORYLESS,
        include_no_fault: bool = False,
    ) -> tuple[DetectionOutcome, ...]:
        return tuple(
            self.outcome(x, mode, include_no_fault) for x in range(self.graph.n)
        )


@dataclass(frozen=True)
class UniversalReport:
    """Whether every possible fault gets detected and located in time."""

    mode: DetectionMode
    max_round: int
    universal: bool
    undetected: tuple[int, ...]
    unlocated: tuple[int, ...]
    outcomes: tuple[DetectionOutcome, ...]

    def __bool__(self) -> bool:
        return self.universal

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "max_round": self.max_round,
            "universal": self.universal,
            "undetected": list(self.undetected),
            "unlocated": list(self.unlocated),
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


def alarm_set(g: Graph, code: Iterable[int], fault: int, round_index: int) -> tuple[int, ...]:
    """Convenience wrapper around Scenario for a single alarm query."""
    return Scenario(g, code, round_index).alarm_set(fault, round_index)


def run_detection(
    g: Graph,
    code: Iterable[int],
    fault: int,
    max_round: int,
    mode: DetectionMode = DetectionMode.MEMORYLESS,
    include_no_fault: bool = False,
) -> DetectionOutcome:
    """Outcome of a single fault scenario run to the given round."""
    return Scenario(g, code, max_round).outcome(fault, mode, include_no_fault)


def detection_universal(
    g: Graph,
    code: Iterable[int],
    max_round: int,
    mode: DetectionMode = DetectionMode.MEMORYLESS,
    include_no_fault: bool = False,
) -> UniversalReport:
    """Run every fault scenario and aggregate.

    With the default competitors (faults only), universal success by round r
    is equivalent to code validity for the matching static family: weak
    r-codes for the memoryless monitor, light r-codes with memory.
    """
    scenario = Scenario(g, code, max_round)
    outs = scenario.outcomes(mode, include_no_fault)
    undetected = tuple(o.fault for o in outs if not o.detected)
    unlocated = tuple(o.fault for o in outs if not o.located)
    return UniversalReport(
        mode,
        max_round,
        not undetected and not unlocated,
        undetected,
        unlocated,
        outs,
    )
