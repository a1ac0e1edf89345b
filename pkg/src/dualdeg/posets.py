"""The root poset of positive noncompact roots for the dual-pair families,
antichain widths, facets of the width-k order complex as unions of k
nonintersecting lattice paths, and the bijection with bounded plane
partitions."""

import itertools
from dataclasses import dataclass

import networkx as nx

from . import diagrams
from .diagrams import PlanePartition
from .dualpair import DUAL_PAIR_FAMILIES, MP, OSTAR, UPQ, real_rank


def _require_dual_pair(setting):
    if setting.family not in DUAL_PAIR_FAMILIES:
        raise ValueError(
            f"lattice-path machinery is only implemented for {DUAL_PAIR_FAMILIES}"
        )


class RootPoset:
    """The poset of positive noncompact roots, held in depicted coordinates:
    the minimal element sits in the northwest corner and covers point east and
    south."""

    def __init__(self, setting):
        _require_dual_pair(setting)
        self.setting = setting
        f = setting.family
        if f == UPQ:
            pts = {(r, c) for r in range(1, setting.p + 1) for c in range(1, setting.q + 1)}
        elif f == MP:
            n = setting.n
            pts = {(r, c) for r in range(1, n + 1) for c in range(1, n - r + 2)}
        else:  # OSTAR
            n = setting.n
            pts = {(r, c) for r in range(1, n) for c in range(r, n)}
        self.points = frozenset(pts)

    def label(self, point):
        """The root label (i, j) of a depicted point."""
        r, c = point
        if self.setting.family == UPQ:
            return (r, c)
        if self.setting.family == MP:
            return (c, self.setting.n + 1 - r)
        return (r, c + 1)

    @staticmethod
    def leq(a, b):
        """Order relation in depicted coordinates (product order)."""
        return a[0] <= b[0] and a[1] <= b[1]


def build_poset(setting):
    return RootPoset(setting)


def width(poset, subset=None):
    """Largest antichain inside the subset (whole poset by default), computed
    as size minus a maximum matching of the comparability relation."""
    pts = sorted(poset.points if subset is None else subset)
    graph = nx.Graph()
    left = {p: ("L", p) for p in pts}
    right = {p: ("R", p) for p in pts}
    graph.add_nodes_from(left.values(), bipartite=0)
    graph.add_nodes_from(right.values(), bipartite=1)
    for a, b in itertools.permutations(pts, 2):
        if a != b and RootPoset.leq(a, b):
            graph.add_edge(left[a], right[b])
    matching = nx.bipartite.maximum_matching(graph, top_nodes=list(left.values()))
    return len(pts) - len(matching) // 2


@dataclass(frozen=True)
class PathFamily:
    """A facet: a union of k nonintersecting lattice paths in the poset."""

    points: frozenset
    paths: tuple = None  # optional decomposition, northeast to southwest

    def __len__(self):
        return len(self.points)


def _west_col(setting, row):
    """First column of the given depicted row."""
    return row if setting.family == OSTAR else 1


def _anchor_points(setting, k):
    """The forced path anchors: start a_t on the k-th antidiagonal (2k-th for
    the ostar family) and, where defined, its translate b_t."""
    f = setting.family
    if f in (UPQ, MP):
        a = [(t, k + 1 - t) for t in range(1, k + 1)]
    else:
        a = [(t, 2 * k + 1 - t) for t in range(1, k + 1)]
    if f == UPQ:
        b = [(r + setting.p - k, c + setting.q - k) for r, c in a]
    elif f == OSTAR:
        m = setting.n - 2 * k - 1
        b = [(r + m, c + m) for r, c in a]
    else:
        b = None
    return a, b


def _forced_paths(setting, k):
    """The K_t prefixes (west of a_t) and M_t suffixes (south of b_t)."""
    a, b = _anchor_points(setting, k)
    prefixes, suffixes = [], []
    for t in range(1, k + 1):
        ar, ac = a[t - 1]
        prefixes.append(tuple((ar, c) for c in range(_west_col(setting, ar), ac)))
        if b is None:
            suffixes.append(())
            continue
        br, bc = b[t - 1]
        if setting.family == UPQ:
            bottom = setting.p
        else:  # OSTAR: column c is occupied by rows 1..c
            bottom = bc
        suffixes.append(tuple((r, bc) for r in range(br + 1, bottom + 1)))
    return a, b, prefixes, suffixes


def _free_paths(setting, k, t, points):
    """All monotone lattice paths the t-th free segment can take, from a_t to
    b_t (or to the main antidiagonal for the metaplectic family)."""
    a, b = _anchor_points(setting, k)
    start = a[t - 1]
    n = setting.n
    out = []

    def walk(path):
        r, c = path[-1]
        if setting.family == MP:
            if r + c == n + 1:
                out.append(tuple(path))
                return
        elif (r, c) == b[t - 1]:
            out.append(tuple(path))
            return
        for nxt in ((r, c + 1), (r + 1, c)):
            ok = nxt in points
            if setting.family != MP and ok:
                ok = RootPoset.leq(nxt, b[t - 1])
            if ok:
                path.append(nxt)
                walk(path)
                path.pop()

    walk([start])
    return out


def enumerate_facets(setting, k):
    """All facets of the width-k order complex of the root poset."""
    _require_dual_pair(setting)
    if k < 1:
        raise ValueError("k must be >= 1")
    poset = build_poset(setting)
    if k >= real_rank(setting):
        return [PathFamily(poset.points)]
    _, _, prefixes, suffixes = _forced_paths(setting, k)
    candidates = [_free_paths(setting, k, t, poset.points) for t in range(1, k + 1)]
    seen = set()
    out = []
    for combo in itertools.product(*candidates):
        pts = set()
        ok = True
        for segment in combo:
            for p in segment:
                if p in pts:
                    ok = False
                    break
                pts.add(p)
            if not ok:
                break
        if not ok:
            continue
        for fixed in prefixes + suffixes:
            pts.update(fixed)
        pts = frozenset(pts)
        if pts not in seen:
            seen.add(pts)
            paths = tuple(
                prefixes[t] + combo[t] + suffixes[t] for t in range(k)
            )
            out.append(PathFamily(pts, paths))
    return out


def _validate_plane_partition(setting, k, pp):
    if pp.diagram != diagrams.diagram_D(setting, k):
        raise ValueError("plane partition lives on the wrong diagram")
    if pp.bound() > k or min(pp.entries.values(), default=0) < 0:
        raise ValueError(f"plane partition is not bounded by {k}")
    if not pp.is_monotone():
        raise ValueError("filling is not a plane partition")


def theta(setting, k, pp):
    """The facet attached to a plane partition: for each threshold t, the
    t-th free path traces the southwest boundary of the boxes with entry
    exceeding k - t."""
    _require_dual_pair(setting)
    _validate_plane_partition(setting, k, pp)
    poset = build_poset(setting)
    if k >= real_rank(setting):
        return PathFamily(poset.points)
    a, b, prefixes, suffixes = _forced_paths(setting, k)
    n = setting.n
    paths = []
    for t in range(1, k + 1):
        tall = {box for box, v in pp.entries.items() if v > k - t}
        ar, ac = a[t - 1]
        dr = dc = 0
        segment = [(ar, ac)]
        while True:
            r, c = segment[-1]
            if setting.family == MP:
                if r + c == n + 1:
                    break
            elif (r, c) == b[t - 1]:
                break
            clamp = setting.family != MP and c == b[t - 1][1]
            if (dr + 1, dc + 1) in tall or clamp:
                dr += 1
                segment.append((r + 1, c))
            else:
                dc += 1
                segment.append((r, c + 1))
        paths.append(prefixes[t - 1] + tuple(segment) + suffixes[t - 1])
    points = frozenset(p for path in paths for p in path)
    return PathFamily(points, tuple(paths))


def decompose(setting, k, points):
    """Canonical decomposition of a facet point set into k paths: peel from
    the northeast, preferring east steps."""
    remaining = set(points)
    paths = []
    for t in range(1, k + 1):
        start = (t, _west_col(setting, t))
        if start not in remaining:
            raise ValueError("point set is not a union of k anchored paths")
        path = [start]
        remaining.discard(start)
        while True:
            r, c = path[-1]
            if (r, c + 1) in remaining:
                nxt = (r, c + 1)
            elif (r + 1, c) in remaining:
                nxt = (r + 1, c)
            else:
                break
            path.append(nxt)
            remaining.discard(nxt)
        paths.append(tuple(path))
    if remaining:
        raise ValueError("point set is not a union of k anchored paths")
    return tuple(paths)


def theta_inverse(setting, k, family):
    """The plane partition whose boundary paths trace the given facet; the
    entry of a box counts the free paths passing to its southwest."""
    _require_dual_pair(setting)
    poset = build_poset(setting)
    diagram = diagrams.diagram_D(setting, k)
    if k >= real_rank(setting):
        if family.points != poset.points:
            raise ValueError("for k >= r the only facet is the whole poset")
        return PlanePartition(frozenset(), {})
    a, b = _anchor_points(setting, k)
    paths = family.paths or decompose(setting, k, family.points)
    entries = {}
    rel_segments = []
    for t in range(1, k + 1):
        path = paths[t - 1]
        ar, ac = a[t - 1]
        if (ar, ac) not in path:
            raise ValueError("path misses its anchor")
        i0 = path.index((ar, ac))
        if setting.family == MP:
            i1 = next(
                (i for i, (r, c) in enumerate(path) if r + c == setting.n + 1), None
            )
            if i1 is None:
                raise ValueError("path misses its terminal anchor")
        else:
            if b[t - 1] not in path:
                raise ValueError("path misses its terminal anchor")
            i1 = path.index(b[t - 1])
        rel_segments.append([(r - ar, c - ac) for r, c in path[i0 : i1 + 1]])
    for box in diagram:
        x, y = box
        entries[box] = sum(
            1
            for seg in rel_segments
            if any(dr >= x and dc <= y - 1 for dr, dc in seg)
        )
    pp = PlanePartition(diagram, entries)
    _validate_plane_partition(setting, k, pp)
    if theta(setting, k, pp).points != family.points:
        raise ValueError("point set is not a facet")
    return pp


def corners(setting, k, family):
    """South-to-east turning points, counted path by path on the canonical
    decomposition.  A metaplectic path arriving at the main antidiagonal by a
    south step contributes its terminal point as well."""
    _require_dual_pair(setting)
    poset = build_poset(setting)
    if k >= real_rank(setting) and family.points == poset.points:
        return set()
    paths = decompose(setting, k, family.points)
    found = set()
    for path in paths:
        for prev, cur, nxt in zip(path, path[1:], path[2:]):
            if prev == (cur[0] - 1, cur[1]) and nxt == (cur[0], cur[1] + 1):
                found.add(cur)
        if setting.family == MP and len(path) >= 2:
            last, before = path[-1], path[-2]
            if sum(last) == setting.n + 1 and before == (last[0] - 1, last[1]):
                found.add(last)
    return found
