"""Episodic store: episodes of sentence instances plus similarity links.

Instances are grouped into temporally bounded episodes. A new episode
opens when the gap since the last stored instance reaches ``tau`` times
the span of the current episode (see should_start_episode). Episodes
chain through ``ep_next``; instances chain through ``next`` within their
episode only.

All timestamps are integer milliseconds from an injectable clock so the
time arithmetic is testable without wall-clock flakiness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from textmem.errors import EmptyPrimaryError, TimeOrderError
from textmem.tagging import NodeSketch


class ManualClock:
    """Clock advanced explicitly by the caller; time never moves on its own."""

    def __init__(self, now_ms: int = 0):
        self._now = int(now_ms)

    def now(self) -> int:
        return self._now

    def set_time(self, now_ms: int) -> None:
        self._now = int(now_ms)

    def advance(self, delta_ms: int) -> None:
        self._now += int(delta_ms)


class SystemClock:
    """Wall clock in integer milliseconds."""

    def now(self) -> int:
        return time.time_ns() // 1_000_000


@dataclass(frozen=True)
class EncodingConfig:
    """Episode-boundary tuning.

    tau scales how large the arrival gap must be, relative to the span of
    the episode so far, before a new episode opens. min_span_ms is a floor
    on that span: with the raw formula a single-instance episode has span
    zero and any later arrival would immediately open a new episode. Set
    min_span_ms=0 for the unfloored formula.
    """

    tau: float = 0.1
    min_span_ms: int = 1000

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if self.min_span_ms < 0:
            raise ValueError(f"min_span_ms must be >= 0, got {self.min_span_ms}")


@dataclass
class Instance:
    """One encoded sentence: keyword tiers plus temporal bookkeeping.

    ``touched_at`` is the lazy-decay reference point: creation, last
    reinforcement or last maintenance, whichever came most recently.
    """

    instance_id: int
    sketch: NodeSketch
    timestamp: int
    episode_id: int
    next: int | None = None
    utility: float = 1.0
    touched_at: int = 0


@dataclass
class Episode:
    """Temporally bounded run of instances."""

    ep_id: int
    ep_timestamp: int
    instances: list[Instance] = field(default_factory=list)
    ep_next: int | None = None
    utility: float = 1.0  # stored for completeness; nothing updates it yet

    def span_ms(self) -> int:
        if not self.instances:
            return 0
        return self.instances[-1].timestamp - self.ep_timestamp


@dataclass
class Link:
    """Weighted similarity edge between two instances (newer -> older)."""

    from_instance: int
    to_instance: int
    weight: float = 1.0
    created_at: int = 0
    touched_at: int = 0


@dataclass(frozen=True)
class InteractionGraph:
    """Read-only graph view: instances as vertices, chain + similarity edges."""

    vertices: tuple[int, ...]
    chain_edges: tuple[tuple[int, int], ...]
    link_edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.chain_edges) + len(self.link_edges)


def should_start_episode(phi_f: int, phi_l: int, phi_c: int, cfg: EncodingConfig) -> bool:
    """Episode-boundary predicate.

    True when the current gap (phi_c - phi_l) has reached tau times the
    episode span (phi_l - phi_f, floored at cfg.min_span_ms). phi_f is the
    episode creation time, phi_l the last stored instance time, phi_c the
    arriving instance time.
    """
    if not phi_f <= phi_l <= phi_c:
        raise TimeOrderError(
            f"timestamps out of order: phi_f={phi_f}, phi_l={phi_l}, phi_c={phi_c}"
        )
    span = max(phi_l - phi_f, cfg.min_span_ms)
    return (phi_c - phi_l) >= cfg.tau * span


class EpisodicMemory:
    """Ordered episodes plus cross-episode similarity links.

    Single-writer: encoding and maintenance must not run concurrently;
    readers see a consistent snapshot between writes.
    """

    def __init__(self, encoding: EncodingConfig | None = None, clock=None):
        self.encoding = encoding if encoding is not None else EncodingConfig()
        self.clock = clock if clock is not None else SystemClock()
        self.episodes: list[Episode] = []
        self.links: list[Link] = []
        self.id_counter: int = 1

    # -- identity ---------------------------------------------------------

    def _next_id(self) -> int:
        value = self.id_counter
        self.id_counter += 1
        return value

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpisodicMemory):
            return NotImplemented
        return (
            self.encoding == other.encoding
            and self.episodes == other.episodes
            and self.links == other.links
            and self.id_counter == other.id_counter
        )

    # -- views ------------------------------------------------------------

    def instances(self) -> list[Instance]:
        """All instances in chronological (insertion) order."""
        return [inst for ep in self.episodes for inst in ep.instances]

    def instance_count(self) -> int:
        return sum(len(ep.instances) for ep in self.episodes)

    def get_instance(self, instance_id: int) -> Instance:
        for ep in self.episodes:
            for inst in ep.instances:
                if inst.instance_id == instance_id:
                    return inst
        raise KeyError(f"no instance with id {instance_id}")

    def links_of(self, instance_id: int) -> list[Link]:
        return [
            link
            for link in self.links
            if instance_id in (link.from_instance, link.to_instance)
        ]

    def last_timestamp(self) -> int:
        """Largest timestamp stored anywhere (0 for an empty memory)."""
        latest = 0
        for ep in self.episodes:
            latest = max(latest, ep.ep_timestamp)
            if ep.instances:
                latest = max(latest, ep.instances[-1].timestamp)
        return latest

    def interaction_graph(self) -> InteractionGraph:
        """Vertices are instance ids; chain edges follow chronological order."""
        ordered = self.instances()
        vertices = tuple(inst.instance_id for inst in ordered)
        chain = tuple(
            (a.instance_id, b.instance_id) for a, b in zip(ordered, ordered[1:])
        )
        link_edges = tuple((lk.from_instance, lk.to_instance) for lk in self.links)
        return InteractionGraph(vertices, chain, link_edges)

    # -- mutation ---------------------------------------------------------

    def encode_instance(self, sketch: NodeSketch, now: int | None = None) -> int:
        """Append one sentence record, opening a new episode when due.

        Raises EmptyPrimaryError for sketches without a primary keyword
        and TimeOrderError when ``now`` precedes the latest stored
        timestamp. Existing records are never mutated beyond the previous
        instance's ``next`` pointer.
        """
        if not sketch.primary:
            raise EmptyPrimaryError("sketch has no primary keyword")
        if now is None:
            now = self.clock.now()

        previous: Instance | None = None
        if not self.episodes:
            episode = self._open_episode(now)
        else:
            episode = self.episodes[-1]
            last = episode.instances[-1]
            if now < last.timestamp:
                raise TimeOrderError(
                    f"instance time {now} precedes latest stored time {last.timestamp}"
                )
            if should_start_episode(episode.ep_timestamp, last.timestamp, now, self.encoding):
                episode = self._open_episode(now)
            else:
                previous = last

        instance = Instance(
            instance_id=self._next_id(),
            sketch=sketch,
            timestamp=now,
            episode_id=episode.ep_id,
            touched_at=now,
        )
        if previous is not None:
            previous.next = instance.instance_id
        episode.instances.append(instance)
        return instance.instance_id

    def _open_episode(self, now: int) -> Episode:
        episode = Episode(ep_id=self._next_id(), ep_timestamp=now)
        if self.episodes:
            self.episodes[-1].ep_next = episode.ep_id
        self.episodes.append(episode)
        return episode

    def add_link(self, from_instance: int, to_instance: int, now: int) -> Link:
        """Create a similarity link with initial weight 1.

        Endpoints must exist, differ, and not already be linked (one link
        per unordered pair).
        """
        if from_instance == to_instance:
            raise ValueError("cannot link an instance to itself")
        self.get_instance(from_instance)
        self.get_instance(to_instance)
        pair = {from_instance, to_instance}
        for link in self.links:
            if {link.from_instance, link.to_instance} == pair:
                raise ValueError(f"instances {pair} are already linked")
        link = Link(from_instance, to_instance, 1.0, created_at=now, touched_at=now)
        self.links.append(link)
        return link
