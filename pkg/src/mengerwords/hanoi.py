"""The disk game: shortest-solution formulas, allowability, and the
bijection between game states and graph vertices.

Disks are numbered 1 (largest) to n+1 (smallest); pegs are 0, 1, 2.
Assembly stages along the unique shortest solution are dyadic fractions,
and a vertex of the level-n graph is the moment when disk d(t) is in the
player's hand.  Disk faces are white (A) and black (B); the held disk's
face is undetermined until it is set down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import DyadicStage, Letter, Word, LETTERS
from .graph import BOX, Vertex, base_vertex, neighbor


class _NotAllowable:
    def __repr__(self) -> str:
        return "NOT_ALLOWABLE"

    def __bool__(self) -> bool:
        return False


NOT_ALLOWABLE = _NotAllowable()

WHITE = "A"
BLACK = "B"


def peg_positions(t: DyadicStage) -> tuple[int, ...]:
    """Peg of each disk at assembly stage t: P_1 = -t_1 and
    P_i = P_{i-1} + (-1)^i (t_i - t_{i-1}), everything mod 3."""
    bits = t.bits_str()
    pegs = []
    prev_t = 0
    prev_p = 0
    for i, ch in enumerate(bits, start=1):
        t_i = int(ch)
        if i == 1:
            p = (-t_i) % 3
        else:
            sign = 1 if i % 2 == 0 else -1
            p = (prev_p + sign * (t_i - prev_t)) % 3
        pegs.append(p)
        prev_t, prev_p = t_i, p
    return tuple(pegs)


def stage_of_positions(pegs: tuple[int, ...] | list[int]):
    """Invert peg_positions; NOT_ALLOWABLE when the constellation lies
    outside the shortest solution (some solved t_i is 2)."""
    t_bits = []
    prev_t = 0
    prev_p = 0
    for i, p in enumerate(pegs, start=1):
        if p not in (0, 1, 2):
            raise ValueError(f"bad peg {p}")
        if i == 1:
            t_i = (-p) % 3
        else:
            sign = 1 if i % 2 == 0 else -1
            t_i = (prev_t + sign * (p - prev_p)) % 3
        if t_i not in (0, 1):
            return NOT_ALLOWABLE
        t_bits.append(t_i)
        prev_t, prev_p = t_i, p
    return DyadicStage(int("".join(map(str, t_bits)), 2), len(t_bits))


def transition_disk(t: DyadicStage) -> tuple[int, int, int]:
    """The move entering assembly stage t != 0: disk d(t) moves
    from peg P_d(t) - (-1)^d to peg P_d(t), mod 3."""
    if t.is_zero():
        raise ValueError("stage 0 is entered by the reset move")
    d = t.bit_length()
    p_to = peg_positions(t)[d - 1]
    sign = 1 if d % 2 == 0 else -1
    p_from = (p_to - sign) % 3
    return d, p_from, p_to


def disk_direction(i: int) -> int:
    """Natural running direction of disk i (cyclic): the largest disk
    moves left and directions alternate from there."""
    return -1 if i % 2 == 1 else 1


def leading_disk(assembly: DyadicStage) -> int:
    """The disk whose move advances the solution from this assembly."""
    return assembly.shifted(1).bit_length()


def movable_disks(pegs: tuple[int, ...]) -> list[tuple[int, int]]:
    """Disks that may legally move in their natural direction, with their
    target peg.  Independent of the stage formulas (used as an oracle)."""
    n1 = len(pegs)
    tops = {}
    for i in range(1, n1 + 1):  # smaller disks stack on top
        tops[pegs[i - 1]] = i
    out = []
    for i in range(1, n1 + 1):
        if tops[pegs[i - 1]] != i:
            continue
        target = (pegs[i - 1] + disk_direction(i)) % 3
        blocker = tops.get(target)
        if blocker is None or blocker < i:
            out.append((i, target))
    return out


def classical_solution(n_disks: int) -> list[tuple[int, int, int]]:
    """The 2^n - 1 transitions of the shortest classical solution."""
    moves = []
    for num in range(1, 1 << n_disks):
        moves.append(transition_disk(DyadicStage(num, n_disks)))
    return moves


@dataclass(frozen=True)
class HanoiState:
    """Game state at a vertex moment: one disk in hand, the rest placed.

    faces holds the upward color of each disk with BOX at the held disk;
    at stage 0 the whole stack is off the board on the held largest disk.
    """

    stage: DyadicStage
    faces: tuple[str, ...]

    @property
    def n_disks(self) -> int:
        return self.stage.bits

    @property
    def hand(self) -> int:
        return self.stage.bit_length()

    @property
    def all_off(self) -> bool:
        return self.stage.is_zero()

    @property
    def pegs(self) -> tuple[int, ...]:
        return peg_positions(self.stage)

    def to_json(self) -> dict:
        return {
            "stage": self.stage.bits_str(),
            "pegs": list(self.pegs),
            "faces": "".join(self.faces),
            "hand": self.hand,
            "all_off": self.all_off,
        }

    @classmethod
    def from_json(cls, data: dict) -> "HanoiState":
        return cls(DyadicStage.from_bits(data["stage"]), tuple(data["faces"]))


def base_state(n_disks: int) -> HanoiState:
    return vertex_to_state(base_vertex(n_disks - 1))


def vertex_to_state(v: Vertex) -> HanoiState:
    return HanoiState(v.stage, v.colors)


def state_to_vertex(s: HanoiState) -> Vertex:
    return Vertex(s.stage, s.faces)


def apply_move(s: HanoiState, a: Letter) -> HanoiState:
    """Place the held disk and pick up the next one, as directed by a."""
    return vertex_to_state(neighbor(state_to_vertex(s), a))


def legal_moves(s: HanoiState) -> list[tuple[Letter, HanoiState]]:
    """The four continuations from a vertex moment."""
    return [(a, apply_move(s, a)) for a in LETTERS]


def simulate(n_disks: int, w: Word) -> HanoiState:
    """Play a word from the base state of an n_disks game."""
    s = base_state(n_disks)
    for a in w.full_letters:
        s = apply_move(s, a)
    return s
