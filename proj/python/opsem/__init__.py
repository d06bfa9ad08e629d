"""Operator semantics of signals and version-space language learning."""

from ._core import (
    InterpretationSpace,
    MetaState,
    OpsemError,
    __version__,
    apply_sequence,
    compose,
    enumerate_histories,
    event_log,
    run_cli,
    run_population,
    run_session,
)

__all__ = [
    "InterpretationSpace",
    "MetaState",
    "OpsemError",
    "__version__",
    "apply_sequence",
    "compose",
    "enumerate_histories",
    "event_log",
    "run_cli",
    "run_population",
    "run_session",
]
