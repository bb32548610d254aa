"""Preference profiles, scoring functions and committee scores.

Candidates are dense integers ``0..m-1``; votes list candidates most-preferred
first.  File formats use 1-based candidate numbers and are converted on
ingestion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    CandidateNotInSubset,
    EmptyProfile,
    EmptySubset,
    IndexOutOfRange,
    InvalidScoring,
    MalformedInput,
    NotAPermutation,
    ScoreOverflow,
)

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Profile:
    """An ordered collection of strict rankings over ``m`` candidates.

    ``origin`` maps each candidate index back to the index it had in the
    profile this one was restricted from (``None`` for an unrestricted
    profile).
    """

    m: int
    votes: tuple[tuple[int, ...], ...]
    names: Optional[tuple[str, ...]] = None
    origin: Optional[tuple[int, ...]] = None
    _pos: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        votes = tuple(tuple(int(c) for c in v) for v in self.votes)
        object.__setattr__(self, "votes", votes)
        if self.m < 1 or not votes:
            raise EmptyProfile("a profile needs at least one candidate and one voter")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.m:
                raise MalformedInput(f"{len(names)} candidate names for {self.m} candidates")
            object.__setattr__(self, "names", names)
        pos = []
        for i, vote in enumerate(votes):
            if len(vote) != self.m or sorted(vote) != list(range(self.m)):
                raise NotAPermutation(f"vote {i + 1} is not a permutation of the {self.m} candidates")
            row = [0] * self.m
            for rank, c in enumerate(vote):
                row[c] = rank
            pos.append(tuple(row))
        object.__setattr__(self, "_pos", tuple(pos))

    @property
    def n(self) -> int:
        return len(self.votes)

    def rank(self, i: int, a: int) -> int:
        """0-based rank of candidate ``a`` in vote ``i`` (internal helper)."""
        return self._pos[i][a]

    def prefers(self, i: int, a: int, b: int) -> bool:
        return self._pos[i][a] < self._pos[i][b]

    def top(self, i: int) -> int:
        return self.votes[i][0]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a + 1)

    def _check(self, i: int, a: Optional[int] = None) -> None:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"voter {i} out of range [0, {self.n})")
        if a is not None and not 0 <= a < self.m:
            raise IndexOutOfRange(f"candidate {a} out of range [0, {self.m})")


def pos(p: Profile, i: int, a: int) -> int:
    """1-based position of candidate ``a`` in the ranking of voter ``i``."""
    p._check(i, a)
    return p.rank(i, a) + 1


def top_second_bottom(p: Profile, i: int, w: Iterable[int]) -> tuple[int, Optional[int], int]:
    """Most-, second-most- and least-preferred members of ``w`` for voter ``i``.

    The second entry is ``None`` when ``w`` is a singleton.
    """
    w = set(w)
    if not w:
        raise EmptySubset("candidate subset is empty")
    p._check(i)
    for a in w:
        p._check(i, a)
    ordered = sorted(w, key=p._pos[i].__getitem__)
    second = ordered[1] if len(ordered) > 1 else None
    return ordered[0], second, ordered[-1]


def restrict(p: Profile, w: Iterable[int]) -> Profile:
    """The profile ``p`` with the candidate set cut down to ``w``.

    Surviving candidates are renumbered densely in increasing order of their
    old index; the result's ``origin`` records the old indices (composed
    through ``p.origin``, so nested restrictions map back to the root
    profile).
    """
    keep = sorted(set(w))
    if not keep:
        raise EmptySubset("cannot restrict to an empty candidate set")
    for a in keep:
        p._check(0, a)
    new_index = {a: j for j, a in enumerate(keep)}
    votes = tuple(tuple(new_index[c] for c in vote if c in new_index) for vote in p.votes)
    names = tuple(p.names[a] for a in keep) if p.names else None
    origin = tuple(p.origin[a] for a in keep) if p.origin else tuple(keep)
    return Profile(len(keep), votes, names, origin)


def b_set(p: Profile, i: int, s: Iterable[int], a: int) -> frozenset[int]:
    """Candidates of ``s`` to which leaf ``a`` may attach, as far as voter ``i`` is concerned.

    Everything in ``s`` that voter ``i`` ranks above ``a``; but if ``a`` is the
    voter's favourite within ``s``, only the runner-up within ``s``.
    """
    s = set(s)
    if a not in s:
        raise CandidateNotInSubset(f"candidate {a} is not in the subset")
    if len(s) < 2:
        raise EmptySubset("b_set needs a subset of at least two candidates")
    p._check(i, a)
    row = p._pos[i]
    first, second, _ = top_second_bottom(p, i, s)
    if first == a:
        return frozenset((second,))
    return frozenset(c for c in s if row[c] < row[a])


@dataclass(frozen=True)
class ScoringFunction:
    """Integer utility of a voter for a candidate, looked up by rank.

    Either a positional ``vector`` (shared by all voters) or a per-voter
    ``table`` whose row ``i`` gives voter ``i``'s utility by rank position.
    """

    vector: Optional[tuple[int, ...]] = None
    table: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        if (self.vector is None) == (self.table is None):
            raise InvalidScoring("give exactly one of a positional vector or a table")
        if self.vector is not None:
            s = tuple(int(x) for x in self.vector)
            object.__setattr__(self, "vector", s)
            if not s or s[0] != 0:
                raise InvalidScoring("positional vectors are normalized to s_1 = 0")
            if any(x > y for x, y in zip(s[1:], s)):
                raise InvalidScoring("positional vector must be non-increasing")
            _check_magnitude(s)
        else:
            rows = tuple(tuple(int(x) for x in row) for row in self.table)
            object.__setattr__(self, "table", rows)
            for row in rows:
                if any(x > y for x, y in zip(row[1:], row)):
                    raise InvalidScoring("table rows must be non-increasing in rank")
                _check_magnitude(row)

    @classmethod
    def borda(cls, m: int) -> ScoringFunction:
        return cls(vector=tuple(-j for j in range(m)))

    @classmethod
    def approval(cls, m: int, r: int) -> ScoringFunction:
        """r-approval, shifted so approved candidates score 0 and the rest -1."""
        if r < 1:
            raise InvalidScoring("approval threshold r must be positive")
        return cls(vector=tuple(0 if j < r else -1 for j in range(m)))

    @property
    def is_positional(self) -> bool:
        return self.vector is not None

    def check_profile(self, p: Profile) -> None:
        if self.vector is not None:
            if len(self.vector) != p.m:
                raise InvalidScoring(f"scoring vector has {len(self.vector)} entries, profile has {p.m} candidates")
        else:
            if len(self.table) != p.n or any(len(row) != p.m for row in self.table):
                raise InvalidScoring(f"scoring table must be {p.n} x {p.m}")
        bound = max((abs(x) for x in self.values()), default=0)
        if p.n * bound > INT64_MAX:
            raise ScoreOverflow("total score would not fit in a 64-bit integer")

    def values(self) -> Iterable[int]:
        if self.vector is not None:
            return self.vector
        return (x for row in self.table for x in row)

    def at_rank(self, i: int, rank: int) -> int:
        if self.vector is not None:
            return self.vector[rank]
        return self.table[i][rank]

    def __call__(self, p: Profile, i: int, a: int) -> int:
        return self.at_rank(i, p.rank(i, a))


def _check_magnitude(values: Sequence[int]) -> None:
    if any(abs(x) > 2**31 for x in values):
        raise ScoreOverflow("scores must fit in 32 bits")


def _best_rank(p: Profile, i: int, w: Sequence[int]) -> int:
    row = p._pos[i]
    return min(row[a] for a in w)


def utilitarian_score(p: Profile, mu: ScoringFunction, w: Iterable[int]) -> int:
    """Sum over voters of the utility of their favourite committee member."""
    w = tuple(set(w))
    if not w:
        raise EmptySubset("committee is empty")
    for a in w:
        p._check(0, a)
    return sum(mu.at_rank(i, _best_rank(p, i, w)) for i in range(p.n))


def egalitarian_score(p: Profile, mu: ScoringFunction, w: Iterable[int]) -> int:
    """Utility of the worst-off voter under the committee ``w``."""
    w = tuple(set(w))
    if not w:
        raise EmptySubset("committee is empty")
    for a in w:
        p._check(0, a)
    return min(mu.at_rank(i, _best_rank(p, i, w)) for i in range(p.n))


# --- ingestion ------------------------------------------------------------

_INT = re.compile(r"^[+-]?\d+$")


def _int(token: str, lineno: int) -> int:
    if not _INT.match(token):
        raise MalformedInput(f"line {lineno}: expected an integer, got {token!r}")
    return int(token)


def _ranking(tokens: Sequence[str], m: int, lineno: int) -> tuple[int, ...]:
    vote = tuple(_int(t, lineno) - 1 for t in tokens)
    if any(not 0 <= c < m for c in vote):
        raise NotAPermutation(f"line {lineno}: candidate numbers must lie in 1..{m}")
    if len(vote) != m or len(set(vote)) != m:
        raise NotAPermutation(f"line {lineno}: ranking must list each of the {m} candidates once")
    return vote


def _parse_plain(text: str) -> Profile:
    lines = [
        (k, line.strip())
        for k, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise EmptyProfile("no header line")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise MalformedInput(f"line {lineno}: header must be 'm n'")
    m, n = (_int(t, lineno) for t in fields)
    if m < 1 or n < 1:
        raise EmptyProfile("profile must have m >= 1 candidates and n >= 1 voters")
    body = lines[1:]
    if len(body) != n:
        raise MalformedInput(f"header announces {n} votes but {len(body)} ranking lines follow")
    votes = tuple(_ranking(line.split(), m, k) for k, line in body)
    return Profile(m, votes)


_SOC_NAME = re.compile(r"^#\s*ALTERNATIVE NAME\s+(\d+)\s*:\s*(.*)$", re.IGNORECASE)
_SOC_COUNT = re.compile(r"^#\s*NUMBER ALTERNATIVES\s*:\s*(\d+)\s*$", re.IGNORECASE)


def _parse_soc(text: str) -> Profile:
    """Strict-complete-order files.

    Accepts both the header style with a candidate-count line followed by
    ``i,name`` lines, and the newer style carrying names in ``#`` metadata.
    Ranking lines are ``count: c1,c2,...`` (or ``count,c1,c2,...``).
    """
    m = None
    meta_names: dict[int, str] = {}
    names: list[str] = []
    votes: list[tuple[int, ...]] = []
    rows = [(k, line.strip()) for k, line in enumerate(text.splitlines(), 1) if line.strip()]
    idx = 0
    for k, line in rows:
        if line.startswith("#"):
            if mt := _SOC_NAME.match(line):
                meta_names[int(mt.group(1))] = mt.group(2).strip()
            elif mt := _SOC_COUNT.match(line):
                m = int(mt.group(1))
            idx += 1
            continue
        break
    rows = [r for r in rows[idx:] if not r[1].startswith("#")]
    i = 0
    if rows and _INT.match(rows[0][1]):
        m = int(rows[0][1])
        i = 1
        while i < len(rows) and len(names) < m and ":" not in rows[i][1]:
            k, line = rows[i]
            head, _, rest = line.partition(",")
            names.append(rest.strip() if rest and _INT.match(head.strip()) else line)
            i += 1
    if m is None:
        raise MalformedInput("soc file does not declare the number of candidates")
    for k, line in rows[i:]:
        if ":" in line:
            count_s, _, rank_s = line.partition(":")
            tokens = [t.strip() for t in rank_s.split(",")]
        else:
            parts = [t.strip() for t in line.split(",")]
            if len(parts) == 3 and len(parts) != m + 1:
                continue  # "voters,sum,unique" summary line of the older layout
            count_s, tokens = parts[0], parts[1:]
        count = _int(count_s.strip(), k)
        if count < 0:
            raise MalformedInput(f"line {k}: negative multiplicity")
        vote = _ranking(tokens, m, k)
        votes.extend([vote] * count)
    if not votes or m < 1:
        raise EmptyProfile("soc file contains no votes")
    if not names and meta_names:
        names = [meta_names.get(j + 1, str(j + 1)) for j in range(m)]
    return Profile(m, tuple(votes), tuple(names) if len(names) == m else None)


def parse_profile(text: str, format: str = "plain") -> Profile:
    if format == "plain":
        return _parse_plain(text)
    if format == "soc":
        return _parse_soc(text)
    raise MalformedInput(f"unknown profile format {format!r}")


def format_profile(p: Profile) -> str:
    lines = [f"{p.m} {p.n}"]
    lines += [" ".join(str(c + 1) for c in vote) for vote in p.votes]
    return "\n".join(lines) + "\n"


def profile_from_letters(*votes: str) -> Profile:
    """Build a profile from votes written as letter strings, e.g. ``"abcde"``.

    Candidate ``a`` becomes index 0, ``b`` index 1, and so on.
    """
    m = len(votes[0])
    letters = [chr(ord("a") + j) for j in range(m)]
    return Profile(m, tuple(tuple(ord(ch) - ord("a") for ch in v) for v in votes), tuple(letters))
