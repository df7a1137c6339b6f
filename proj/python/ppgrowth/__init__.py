"""Growth of potentially positive words in free groups."""

import json

from ._core import (
    Automaton,
    Error,
    apply_moves,
    canonical,
    count_language,
    decode_f,
    decode_signal,
    encode_f,
    encode_signal,
    enumerate_cyclic,
    goldstein_check,
    positivize_rank_word,
    reduce,
)
from . import _core

__all__ = [
    "Automaton",
    "Error",
    "apply_moves",
    "canonical",
    "count_language",
    "decide",
    "decode_f",
    "decode_signal",
    "dominant_root",
    "encode_f",
    "encode_signal",
    "enumerate_cyclic",
    "goldstein_check",
    "growth_table",
    "positivize_rank_word",
    "properties",
    "reduce",
    "sample",
]


def decide(word, max_steps=None):
    """Decide potential positivity of a rank-2 word. Returns the decision as a dict."""
    return json.loads(_core.decide_json(word, max_steps))


def properties(machine):
    return json.loads(machine.properties_json())


def dominant_root(machine, digits=12):
    return json.loads(machine.dominant_root_json(digits))


def growth_table(ranks=range(2, 8), digits=4):
    return json.loads(_core.growth_table_json(list(ranks), digits))


def sample(length, count, seed, max_draws=1_000_000):
    return json.loads(_core.sample_json(length, count, seed, max_draws))
