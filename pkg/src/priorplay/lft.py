"""Leader, Follower, and Trigger agents built around target solutions.

A target solution is a short cycle of joint actions whose per-player
average payoff is at least that player's security value. All three roles
play their part of the cycle while the other player plays theirs; they
differ in how they answer a deviation:

- Leader: punishes with its minimax strategy for a fixed number of
  rounds, then restarts the cycle.
- Follower: silently resets to a uniformly random position in the cycle.
  The reset is latent, so the follower's action law is the exact mixture
  over the posterior of its position given both players' realized actions.
- Trigger: plays its maximin strategy forever after the first deviation.
"""

from __future__ import annotations

from itertools import product

from .games import Game, maximin_strategy, minimax_strategy_against
from .policies import GenerationError, Policy

LEADER, FOLLOWER, TRIGGER = 0, 1, 2
ROLE_NAMES = {LEADER: "leader", FOLLOWER: "follower", TRIGGER: "trigger"}

MAX_TARGET_LEN = 3
LEADER_PUNISH_ROUNDS = 3


def target_is_valid(game: Game, sequence) -> bool:
    """Cycle admissible: each player's average payoff >= security value."""
    length = len(sequence)
    if not 1 <= length <= MAX_TARGET_LEN:
        return False
    for player in (1, 2):
        _, security = maximin_strategy(game, player)
        avg = sum(game.payoff(player, r, c) for r, c in sequence) / length
        if avg < security - 1e-9:
            return False
    return True


def valid_targets(game: Game) -> list[tuple[tuple[int, int], ...]]:
    joints = [(r, c) for r in (0, 1) for c in (0, 1)]
    out = []
    for length in range(1, MAX_TARGET_LEN + 1):
        for seq in product(joints, repeat=length):
            if target_is_valid(game, seq):
                out.append(seq)
    return out


class LftPolicy(Policy):
    kind = "LFT"

    def __init__(self, role: int, target, game: Game):
        if role not in ROLE_NAMES:
            raise ValueError(f"unknown role: {role}")
        self.role = role
        self.target = tuple(tuple(j) for j in target)
        self.length = len(self.target)
        # punishment and safety mixtures per seat, fixed by the game
        self._maximin = (maximin_strategy(game, 1)[0], maximin_strategy(game, 2)[0])
        self._punish = (minimax_strategy_against(game, 2), minimax_strategy_against(game, 1))
        if role == LEADER:
            mix = self._punish
        elif role == TRIGGER:
            mix = self._maximin
        else:
            mix = None
        if role == FOLLOWER:
            self.deterministic = self.length == 1
        else:
            self.deterministic = mix[0] in (0.0, 1.0) and mix[1] in (0.0, 1.0)

    def genome(self):
        flat = [float(self.role), float(self.length)]
        for r, c in self.target:
            flat += [float(r), float(c)]
        return tuple(flat)

    @classmethod
    def from_genome(cls, values, game: Game) -> "LftPolicy":
        role = int(values[0])
        length = int(values[1])
        target = [(int(values[2 + 2 * i]), int(values[3 + 2 * i])) for i in range(length)]
        return cls(role, target, game)

    # -- state machines ----------------------------------------------------
    # Leader state: (position, punish rounds left)
    # Trigger state: (position, triggered flag)
    # Follower state: tuple of position masses

    def initial_state(self):
        if self.role == FOLLOWER:
            return (1.0,) + (0.0,) * (self.length - 1)
        return (0, 0)

    def step(self, state, joint, side: int):
        mine, theirs = joint[side], joint[1 - side]
        if self.role == LEADER:
            pos, left = state
            if left > 0:
                left -= 1
                return (0, 0) if left == 0 else (pos, left)
            if theirs == self.target[pos][1 - side]:
                return ((pos + 1) % self.length, 0)
            return (pos, LEADER_PUNISH_ROUNDS)
        if self.role == TRIGGER:
            pos, fired = state
            if fired:
                return state
            if theirs == self.target[pos][1 - side]:
                return ((pos + 1) % self.length, 0)
            return (pos, 1)
        # follower: propagate the mass over latent positions
        masses = [0.0] * self.length
        for pos, w in enumerate(state):
            if w == 0.0 or self.target[pos][side] != mine:
                continue
            if theirs == self.target[pos][1 - side]:
                masses[(pos + 1) % self.length] += w
            else:
                share = w / self.length
                for q in range(self.length):
                    masses[q] += share
        total = sum(masses)
        if total == 0.0:
            # off-support history (possible inside hypothetical planning
            # branches); any valid distribution works since its weight is 0
            return self.initial_state()
        return tuple(m / total for m in masses)

    def probs(self, state, side: int) -> tuple[float, float]:
        if self.role == LEADER:
            pos, left = state
            if left > 0:
                p0 = self._punish[side]
                return (p0, 1.0 - p0)
            return self._point(pos, side)
        if self.role == TRIGGER:
            pos, fired = state
            if fired:
                p0 = self._maximin[side]
                return (p0, 1.0 - p0)
            return self._point(pos, side)
        p1 = sum(w for pos, w in enumerate(state) if self.target[pos][side] == 1)
        return (1.0 - p1, p1)

    def _point(self, pos: int, side: int) -> tuple[float, float]:
        return (0.0, 1.0) if self.target[pos][side] == 1 else (1.0, 0.0)


def lft_act(policy: LftPolicy, history, perspective: str = "col"):
    from .policies import act

    return act(policy, history, perspective)


def generate_lft_pool(game: Game, n: int, rng) -> list[LftPolicy]:
    """n distinct genomes sampled uniformly over valid (role, target) pairs."""
    if n < 1:
        raise ValueError("pool size must be positive")
    pairs = [(role, seq) for role in (LEADER, FOLLOWER, TRIGGER) for seq in valid_targets(game)]
    if len(pairs) < n:
        raise GenerationError(
            f"game {game.id} admits only {len(pairs)} (role, target) pairs, need {n}"
        )
    picks = rng.choice(len(pairs), size=n, replace=False)
    return [LftPolicy(pairs[i][0], pairs[i][1], game) for i in picks]
