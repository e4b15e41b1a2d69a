"""Sierpinski-style observation of semi-decidable events.

A cell is a producer step -> {0, 1}.  The value 1 at some step is the event
(failure) becoming visible at finite time; the value 0 everywhere is the
unobservable limit case.  Observation is always bounded by fuel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

Cell = Callable[[int], int]


@dataclass(frozen=True)
class ObservedOne:
    """The event fired; step is the first index where a 1 appeared."""

    step: int


@dataclass(frozen=True)
class NotYetAfter:
    """No 1 within the budget; says nothing about the limit."""

    fuel: int


Observation = Union[ObservedOne, NotYetAfter]


def sierp_observe(cell: Cell, fuel: int) -> Observation:
    """Scan steps 0..fuel-1; monotone in fuel by construction."""
    for t in range(fuel):
        if cell(t) != 0:
            return ObservedOne(t)
    return NotYetAfter(fuel)


def cell_never() -> Cell:
    return lambda t: 0


def cell_firing_at(step: int) -> Cell:
    return lambda t: 1 if t >= step else 0
