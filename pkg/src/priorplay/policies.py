"""Opponent policy types: histories, the policy interface, type sets.

A policy is a pure function of the play history: it exposes a small state
machine (initial_state / step / probs) so that callers replaying the same
history always get identical action distributions. Stochastic policies
never consume randomness themselves; action sampling is done by the play
from its own stream, which keeps every policy's action probabilities
exactly computable for the posterior.

`side` selects the seat a policy is playing from: 0 for the row player,
1 for the column player.
"""

from __future__ import annotations

import hashlib

ROW, COL = 0, 1

JointAction = tuple[int, int]  # (row action, col action)


class InvalidHistoryError(ValueError):
    """History is not a sequence of complete, well-formed joint actions."""


class GenerationError(RuntimeError):
    """A type generator could not produce the requested pool."""


class History:
    """Immutable record of the joint actions played so far."""

    __slots__ = ("steps",)

    def __init__(self, steps=()):
        self.steps = tuple(steps)

    def append(self, joint: JointAction) -> "History":
        return History(self.steps + (tuple(joint),))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __eq__(self, other):
        return isinstance(other, History) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"History({list(self.steps)!r})"

    def validate(self) -> None:
        for joint in self.steps:
            if (
                not isinstance(joint, tuple)
                or len(joint) != 2
                or joint[0] not in (0, 1)
                or joint[1] not in (0, 1)
            ):
                raise InvalidHistoryError(f"malformed joint action: {joint!r}")


class Policy:
    """Base class for opponent policy types."""

    kind: str = "?"
    deterministic: bool = False

    def initial_state(self):
        raise NotImplementedError

    def step(self, state, joint: JointAction, side: int):
        """State after one more completed round."""
        raise NotImplementedError

    def probs(self, state, side: int) -> tuple[float, float]:
        """Distribution over the next own action, (P(0), P(1))."""
        raise NotImplementedError

    def genome(self) -> tuple[float, ...]:
        """Flat numeric encoding; equal genomes mean equal types."""
        raise NotImplementedError

    def action_probs(self, history: History, side: int) -> tuple[float, float]:
        state = self.initial_state()
        for joint in history:
            state = self.step(state, joint, side)
        return self.probs(state, side)

    def genome_line(self) -> str:
        return " ".join([self.kind] + [repr(float(v)) for v in self.genome()])


def act(theta: Policy, history: History, perspective: str = "col") -> tuple[float, float]:
    """Action distribution of type `theta` at `history`.

    Raises InvalidHistoryError on malformed histories.
    """
    if not isinstance(history, History):
        history = History(history)
    history.validate()
    side = {"row": ROW, "col": COL}[perspective]
    p0, p1 = theta.action_probs(history, side)
    return p0, p1


class TypeSet:
    """A pool of hypothesised types plus the opponent's actual one."""

    def __init__(self, members, true_index: int):
        members = tuple(members)
        if not 0 <= true_index < len(members):
            raise ValueError("true_index out of range")
        lines = [m.genome_line() for m in members]
        if len(set(lines)) != len(lines):
            raise ValueError("type set members must have distinct genomes")
        self.members = members
        self.true_index = int(true_index)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def true_type(self) -> Policy:
        return self.members[self.true_index]

    def content_hash(self) -> str:
        text = "\n".join(m.genome_line() for m in self.members)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def save_pool(path, policies) -> str:
    """Write a pool file (one `kind v1 v2 ...` record per line); returns its hash."""
    lines = [p.genome_line() for p in policies]
    text = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()[:12]


def load_pool(path, game=None) -> list[Policy]:
    """Read a pool file. LFT records need `game` to rebuild punish mixtures."""
    from . import evo, lft

    out = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            kind, *rest = line.split()
            values = [float(v) for v in rest]
            if kind == "CDT":
                out.append(evo.TreePolicy.from_genome(values))
            elif kind == "CNN":
                out.append(evo.NetPolicy.from_genome(values))
            elif kind == "LFT":
                if game is None:
                    raise ValueError("LFT pools require the game to be loaded")
                out.append(lft.LftPolicy.from_genome(values, game))
            else:
                raise ValueError(f"unknown type kind: {kind}")
    return out


def sample_type_set(kind: str, game, n: int, seed: int, evo_config=None) -> TypeSet:
    """n distinct types of `kind` for the column player of `game`.

    One member, chosen from the same stream, is designated the true type.
    Deterministic in `seed`. Raises GenerationError when the generator
    cannot produce n distinct genomes.
    """
    from . import evo, lft
    from .seeding import substream

    if n < 2:
        raise ValueError("type sets need at least 2 members")
    rng = substream(seed, "typeset")
    if kind == "LFT":
        members = lft.generate_lft_pool(game, n, rng)
    elif kind in ("CDT", "CNN"):
        cfg = evo_config or evo.sampling_config(int(rng.integers(2**31)))
        if kind == "CDT":
            _, pool = evo.coevolve_trees(game, cfg)
        else:
            _, pool = evo.coevolve_nets(game, cfg)
        members = _distinct(pool, n)
        attempts = 0
        while len(members) < n and attempts < 1000:
            extra = evo.random_tree_policy(rng) if kind == "CDT" else evo.random_net_policy(rng)
            members = _distinct(members + [extra], n)
            attempts += 1
        if len(members) < n:
            raise GenerationError(f"could not assemble {n} distinct {kind} types")
    else:
        raise ValueError(f"unknown type kind: {kind}")
    true_index = int(rng.integers(n))
    return TypeSet(members, true_index)


def _distinct(policies, limit: int) -> list[Policy]:
    seen = set()
    out = []
    for p in policies:
        line = p.genome_line()
        if line not in seen:
            seen.add(line)
            out.append(p)
        if len(out) == limit:
            break
    return out
