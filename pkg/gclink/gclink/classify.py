#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Classification of great circle links with at most five components """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import typing
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from gclink.constants import SCHEMA
from gclink.enums import Handedness
from gclink.errors import (
    DegenerateTriple,
    GCLinkError,
    IndeterminateConfiguration,
    NotAFiber,
    NotOrthonormal,
    NotTransverse,
    TangentCircles,
    UnsupportedSize,
)
from gclink.gclink_core import MIRROR, GCLink, GreatCircle, triple_sign
from gclink.hopf_proj import Configuration, HopfBundle, configuration
from gclink.quat_s3 import I

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
MAX_COMPONENTS = 5
CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 7}
CENSUS_CHUNK = 250


# ---------------------------------------------------------------------------
# Classes of links
# ---------------------------------------------------------------------------
def _signed(sign: int) -> str:
    return '+' if sign > 0 else '-'


@dataclass(frozen=True)
class HopfClass:
    """The +n or -n Hopf link (n fibers of one bundle)"""

    sign: int
    n: int

    def __post_init__(self):
        if self.n <= 2:
            object.__setattr__(self, 'sign', 1)

    def __str__(self) -> str:
        return f'{_signed(self.sign)}{self.n}'

    @property
    def components(self) -> int:
        return self.n

    def mirror(self) -> 'HopfClass':
        return HopfClass(-self.sign, self.n)


@dataclass(frozen=True)
class TorusSumTree:
    """Iterated torus sum rooted at its central piece"""

    root: HopfClass
    children: tuple = ()

    def __str__(self) -> str:
        parts = [str(self.root)]
        for child in self.children:
            parts.append(str(child.root) if not child.children else str(child))
        return 'T(' + ','.join(parts) + ')'

    @property
    def components(self) -> int:
        slots = self.root.n - len(self.children)
        return slots + sum(child.components - 1 for child in self.children)

    def mirror(self) -> 'LinkClass':
        return Decomposition.from_tree(self, flip=-1).link_class()


@dataclass(frozen=True)
class Hyperbolic5:
    """The hyperbolic five-component class, represented by D(2/5)"""

    def __str__(self) -> str:
        return 'HYP5'

    @property
    def components(self) -> int:
        return 5

    def mirror(self) -> 'Hyperbolic5':
        return self


LinkClass = typing.Union[HopfClass, TorusSumTree, Hyperbolic5]


def _tree_key(tree: TorusSumTree):
    return (-tree.root.sign, -tree.root.n, str(tree))


# ---------------------------------------------------------------------------
# Decompositions
# ---------------------------------------------------------------------------
@dataclass
class Decomposition:
    """
    Hopf pieces glued along tori, with the piece holding each component

    Components are kept in the order the geometric torus sum produces them, so a
    decomposition can follow a concrete link through repeated torus sums.
    """

    signs: dict = field(default_factory=dict)
    owner: dict = field(default_factory=dict)
    edges: set = field(default_factory=set)
    order: list = field(default_factory=list)

    @classmethod
    def hopf(cls, sign: int, n: int) -> 'Decomposition':
        return cls(signs={0: sign}, owner={k: 0 for k in range(n)}, order=list(range(n)))

    @classmethod
    def from_tree(cls, tree: TorusSumTree, flip: int = 1) -> 'Decomposition':
        result = cls()

        def attach(sub: TorusSumTree, parent) -> None:
            node = len(result.signs)
            result.signs[node] = flip * sub.root.sign
            if parent is not None:
                result.edges.add(frozenset((node, parent)))
            degree = len(sub.children) + (parent is not None)
            for _ in range(sub.root.n - degree):
                label = len(result.order)
                result.owner[label] = node
                result.order.append(label)
            for child in sub.children:
                attach(child, node)

        attach(tree, None)
        return result

    def size(self, node: int) -> int:
        held = sum(1 for owner in self.owner.values() if owner == node)
        return held + sum(1 for edge in self.edges if node in edge)

    def neighbors(self, node: int) -> list:
        return sorted(next(iter(edge - {node})) for edge in self.edges if node in edge)

    def torus_sum(self, i: int, other: 'Decomposition', j: int) -> 'Decomposition':
        """Decomposition of the torus sum along order[i] here and order[j] in other"""
        shift = max(self.signs) + 1
        relabel = {node: node + shift for node in other.signs}
        tag = max(list(self.owner) + [-1]) + 1
        result = Decomposition(
            signs={**self.signs, **{relabel[n]: s for n, s in other.signs.items()}},
            owner=dict(self.owner),
            edges=set(self.edges) | {frozenset(relabel[n] for n in e) for e in other.edges},
        )
        other_labels = {label: tag + k for k, label in enumerate(other.order)}
        for label, node in other.owner.items():
            result.owner[other_labels[label]] = relabel[node]
        cut_a = self.order[i]
        cut_b = other_labels[other.order[j]]
        node_a = result.owner.pop(cut_a)
        node_b = result.owner.pop(cut_b)
        result.edges.add(frozenset((node_a, node_b)))
        result.order = [lbl for lbl in self.order if lbl != cut_a] + [
            other_labels[lbl] for lbl in other.order if other_labels[lbl] != cut_b
        ]
        result.simplify()
        return result

    def simplify(self) -> None:
        changed = True
        while changed:
            changed = self._absorb_small() or self._merge_equal()

    def _absorb_small(self) -> bool:
        for node in sorted(self.signs):
            links = [edge for edge in self.edges if node in edge]
            if not links:
                continue
            held = [label for label, owner in self.owner.items() if owner == node]
            if len(held) + len(links) > 2:
                continue
            others = [next(iter(edge - {node})) for edge in links]
            for edge in links:
                self.edges.discard(edge)
            if len(others) == 2:
                self.edges.add(frozenset(others))
            elif held:
                self.owner[held[0]] = others[0]
            del self.signs[node]
            return True
        return False

    def _merge_equal(self) -> bool:
        for edge in sorted(self.edges, key=sorted):
            a, b = sorted(edge)
            if self.signs[a] != self.signs[b] or self.size(a) < 3 or self.size(b) < 3:
                continue
            self.edges.discard(edge)
            self.edges = {
                frozenset(a if n == b else n for n in e) if b in e else e for e in self.edges
            }
            for label, owner in self.owner.items():
                if owner == b:
                    self.owner[label] = a
            del self.signs[b]
            return True
        return False

    def _path(self, start: int, stop: int) -> list:
        previous = {start: None}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in self.neighbors(node):
                if nxt not in previous:
                    previous[nxt] = node
                    queue.append(nxt)
        path = [stop]
        while path[-1] != start:
            path.append(previous[path[-1]])
        return path

    def median(self, a: int, b: int, c: int) -> int:
        """The piece shared by the three paths between the owners of a, b, c"""
        x, y, z = self.owner[a], self.owner[b], self.owner[c]
        common = set(self._path(x, y)) & set(self._path(y, z)) & set(self._path(x, z))
        return next(iter(common))

    def triple_sign(self, a: int, b: int, c: int) -> int:
        return self.signs[self.median(a, b, c)]

    def signature(self) -> int:
        """Number of positively handed triples"""
        return sum(1 for t in combinations(self.order, 3) if self.triple_sign(*t) > 0)

    def _subtree(self, node: int, parent) -> TorusSumTree:
        children = [self._subtree(n, node) for n in self.neighbors(node) if n != parent]
        return TorusSumTree(
            HopfClass(self.signs[node], self.size(node)),
            tuple(sorted(children, key=_tree_key)),
        )

    def _eccentricity(self, node: int) -> int:
        return max(len(self._path(node, other)) for other in self.signs)

    def link_class(self) -> LinkClass:
        """Normal form: the tree rooted at its center, larger and positive pieces first"""
        if len(self.signs) == 1:
            (node,) = self.signs
            return HopfClass(self.signs[node], self.size(node))
        center = min(
            self.signs,
            key=lambda n: (self._eccentricity(n), -self.size(n), -self.signs[n], n),
        )
        return self._subtree(center, None)


def _hopf(sign: int, n: int) -> Decomposition:
    return Decomposition.hopf(sign, n)


def _build_class_table() -> dict:
    plus_minus = _hopf(1, 3).torus_sum(2, _hopf(-1, 3), 0)
    table = {
        (1, 1): _hopf(1, 1),
        (2, 1): _hopf(1, 2),
        (3, 1): _hopf(1, 3),
        (3, 0): _hopf(-1, 3),
        (4, 4): _hopf(1, 4),
        (4, 0): _hopf(-1, 4),
        (4, 2): plus_minus,
        (5, 10): _hopf(1, 5),
        (5, 0): _hopf(-1, 5),
        (5, 7): _hopf(1, 4).torus_sum(3, _hopf(-1, 3), 0),
        (5, 3): _hopf(-1, 4).torus_sum(3, _hopf(1, 3), 0),
        (5, 6): plus_minus.torus_sum(3, _hopf(1, 3), 0),
        (5, 4): plus_minus.torus_sum(0, _hopf(-1, 3), 0),
    }
    classes = {key: decomposition.link_class() for key, decomposition in table.items()}
    classes[(5, 5)] = Hyperbolic5()
    return classes


CLASS_TABLE = _build_class_table()


def class_from_signature(n: int, positive: int) -> LinkClass:
    """
    The class of an n-component link with the given number of positive triples

    Raises:
        IndeterminateConfiguration: For counts no great circle link realises
    """
    try:
        return CLASS_TABLE[(n, positive)]
    except KeyError:
        raise IndeterminateConfiguration(f'No {n}-component class with {positive} positive triples')


def mirror_class(link_class: LinkClass) -> LinkClass:
    return link_class.mirror()


# ---------------------------------------------------------------------------
# Triples
# ---------------------------------------------------------------------------
def triple_handedness(link: GCLink, idx) -> int:
    """
    Whether three components form a +3 or a -3 Hopf link

    Args:
        link (GCLink): Link holding the components
        idx (tuple): Three distinct component indices

    Raises:
        ValueError: When the indices are not three distinct components
        DegenerateTriple: When no ordering of the roles gives a graph

    Returns:
        sign (int): +1 or -1
    """
    idx = tuple(idx)
    if len(set(idx)) != 3 or any(not 0 <= k < len(link) for k in idx):
        raise ValueError(f'Invalid triple: {idx}')
    a, b, c = idx
    for first, second, third in ((a, b, c), (b, c, a), (c, a, b)):
        sign = triple_sign(link[first], link[second], link[third])
        if sign is not None:
            return sign
        logger.debug('triple %s degenerate with roles %s', idx, (first, second, third))
    raise DegenerateTriple(f'Triple {idx} is degenerate in every role order')


def signature(link: GCLink) -> dict:
    """Handedness of every triple, keyed by sorted index triples"""
    return {t: triple_handedness(link, t) for t in combinations(range(len(link)), 3)}


def standardizing_map(link: GCLink, idx) -> tuple:
    """
    Linear map taking a triple to the fibers through 1, j and (1+j)/sqrt(2)

    Positive triples land on left i-fibers; negative ones are mirrored onto right
    i-fibers, so the map always preserves orientation.

    Returns:
        standard (tuple): (matrix, bundle) with the bundle the triple is fibered by
    """
    a, b, c = idx
    basis = np.column_stack([link[a].u, link[a].v, link[b].u, link[b].v])
    inverse = np.linalg.inv(basis)
    coords = inverse @ link[c].matrix
    graph = coords[2:] @ np.linalg.inv(coords[:2])
    straighten = np.eye(4)
    straighten[2:, 2:] = np.linalg.inv(graph)
    matrix = straighten @ inverse
    sign = 1 if np.linalg.det(matrix) > 0 else -1
    if sign < 0:
        matrix = MIRROR @ matrix
    handedness = Handedness.RIGHT if sign > 0 else Handedness.LEFT
    return matrix, HopfBundle(I, handedness)


def standard_configuration(link: GCLink, idx) -> Configuration:
    """Configuration of the link seen from the bundle fibering the triple idx"""
    matrix, bundle = standardizing_map(link, idx)
    return configuration(link.transformed(matrix), bundle, set(idx))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Classification:
    link_class: LinkClass
    positive_triples: int = 0
    triple: typing.Optional[tuple] = None
    config: typing.Optional[Configuration] = None

    def to_dict(self) -> dict:
        evidence = {'positive_triples': self.positive_triples}
        if self.triple is not None:
            evidence['triple'] = list(self.triple)
            evidence['configuration'] = self.config.to_dict()
        return {'schema': SCHEMA, 'class': str(self.link_class), 'evidence': evidence}


def _check_configuration(config: Configuration, signs: dict, triple) -> None:
    for t, sign in signs.items():
        predicted = config.triple_sign(*t)
        if predicted is not None and predicted != sign:
            raise IndeterminateConfiguration(
                f'Configuration from triple {triple} predicts {predicted} for {t}, found {sign}'
            )


def classify_with_evidence(link: GCLink, exhaustive: bool = False) -> Classification:
    """
    Classify a link and keep the configuration that confirms the class

    Args:
        link (GCLink): Link with 1 to 5 components
        exhaustive (bool): Check every decidable triple, not only the first

    Raises:
        UnsupportedSize: For more than five components
        IndeterminateConfiguration: When no triple gives a decidable picture, or
            a picture disagrees with the triple handedness of the link

    Returns:
        classification (Classification): Class and evidence
    """
    n = len(link)
    if n > MAX_COMPONENTS:
        raise UnsupportedSize(f'Cannot classify {n} components (at most {MAX_COMPONENTS})')
    if n == 0:
        raise UnsupportedSize('Cannot classify the empty link')
    if n <= 2:
        return Classification(HopfClass(1, n))
    signs = signature(link)
    positive = sum(1 for sign in signs.values() if sign > 0)
    link_class = class_from_signature(n, positive)
    if n == 3:
        return Classification(link_class, positive)
    found = None
    for triple in combinations(range(n), 3):
        try:
            config = standard_configuration(link, triple)
        except (
            TangentCircles, NotAFiber, NotTransverse, NotOrthonormal, np.linalg.LinAlgError
        ) as err:
            logger.warning('skipping triple %s: %s', triple, err)
            continue
        _check_configuration(config, signs, triple)
        if found is None:
            found = Classification(link_class, positive, triple, config)
        if not exhaustive:
            break
    if found is None:
        raise IndeterminateConfiguration('Every triple gave an undecidable configuration')
    return found


def classify(link: GCLink) -> LinkClass:
    return classify_with_evidence(link).link_class


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ClassCensus:
    n: int
    samples: int
    seed: int
    counts: dict
    indeterminate: int = 0

    @property
    def classes(self) -> list:
        return sorted(self.counts)

    def to_dict(self) -> dict:
        return {
            'schema': SCHEMA,
            'n': self.n,
            'samples': self.samples,
            'seed': self.seed,
            'distinct': len(self.counts),
            'counts': dict(self.counts),
            'indeterminate': self.indeterminate,
        }


def random_link(n: int, rng: np.random.Generator) -> GCLink:
    """Orthonormalized Gaussian frames, redrawn until pairwise transverse"""
    while True:
        circles = []
        for _ in range(n):
            frame, _ = np.linalg.qr(rng.standard_normal((4, 2)))
            circles.append(GreatCircle.from_vectors(frame[:, 0], frame[:, 1]))
        try:
            return GCLink(tuple(circles))
        except NotTransverse:
            continue


def _census_chunk(job: tuple) -> list:
    n, seed, start, stop = job
    labels = []
    for index in range(start, stop):
        rng = np.random.default_rng([seed, index])
        try:
            labels.append(str(classify(random_link(n, rng))))
        except GCLinkError as err:
            logger.warning('sample %d unclassified: %s', index, err)
            labels.append(None)
    return labels


def census(n: int, samples: int, seed: int = 0, workers: int = 1) -> ClassCensus:
    """
    Classify random links, reproducibly for a fixed seed

    Sample k draws from a generator seeded with (seed, k), so the counts do not
    depend on how samples are spread over workers.

    Args:
        n (int): Component count, 2 to 5
        samples (int): Number of links to draw
        seed (int): Base seed
        workers (int): Worker processes; 1 runs inline

    Returns:
        census (ClassCensus): Counts per class label
    """
    if not 2 <= n <= MAX_COMPONENTS:
        raise UnsupportedSize(f'Census supports 2 to {MAX_COMPONENTS} components, got {n}')
    if samples < 1:
        raise ValueError(f'Invalid sample count: {samples}')
    jobs = [
        (n, seed, start, min(start + CENSUS_CHUNK, samples))
        for start in range(0, samples, CENSUS_CHUNK)
    ]
    logger.info('census n=%d samples=%d seed=%d workers=%d', n, samples, seed, workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_census_chunk, jobs))
    else:
        chunks = [_census_chunk(job) for job in jobs]
    labels = [label for chunk in chunks for label in chunk]
    tally = Counter(label for label in labels if label is not None)
    return ClassCensus(
        n=n,
        samples=samples,
        seed=seed,
        counts={label: tally[label] for label in sorted(tally)},
        indeterminate=sum(1 for label in labels if label is None),
    )
