"""Syndrome measurement: link-operator decompositions, round schedules and
stabilizer-tableau verification.

Every stabilizer generator is decomposed into an ordered product of derived
link operators grouped r, then g, then b, with every prefix commuting with
the next operator.  The schedule measures the full gauge generator set: in
the relaxed model the three color rounds suffice (links sharing a qubit in
the b round commute); in the exclusive model the b round splits in two so no
qubit is touched twice in a time step.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import hypergraph, pauli
from .analyzer import Generator, SubsystemCode
from .errors import (
    InconsistentOutcome,
    NoValidDecomposition,
    ScheduleConflict,
)
from .pauli import Pauli

COLOR_ORDER = ("r", "g", "b")


class _Decomposer:
    def __init__(self, code: SubsystemCode) -> None:
        self.code = code
        self.h = code.hypergraph
        self.dg = code.derived
        self.index = self.dg.link_index()
        self.tov = self.h.triangle_of_vertex()

    def link(self, hyperedge: int) -> int:
        return self.index[(hyperedge, None)]

    def side_links(self, tri_edge: int, a: int, b: int) -> List[int]:
        """Links realizing the ZZ pair (a, b) inside a triangle; the third
        side is the product of the two independent ones."""
        v0, v1, v2 = self.h.edges[tri_edge].vertices
        want = tuple(sorted((a, b)))
        if want == (v0, v1):
            return [self.index[(tri_edge, 0)]]
        if want == (v1, v2):
            return [self.index[(tri_edge, 1)]]
        if want == (v0, v2):
            return [self.index[(tri_edge, 0)], self.index[(tri_edge, 1)]]
        raise NoValidDecomposition(f"{want} is not a side of triangle {tri_edge}")

    def grouped(self, groups: Dict[str, List[int]]) -> List[int]:
        out: List[int] = []
        for c in COLOR_ORDER:
            out.extend(sorted(set(groups.get(c, []))))
        return out

    def by_color(self, hyperedges: Sequence[int]) -> Dict[str, List[int]]:
        groups: Dict[str, List[int]] = {c: [] for c in COLOR_ORDER}
        for e in sorted(hyperedges):
            color = self.h.edges[e].color
            if color not in groups:
                raise NoValidDecomposition(f"edge {e} has no usable color")
            groups[color].append(self.link(e))
        return groups

    def decompose(self, gen: Generator) -> List[int]:
        h = self.h
        if gen.kind in ("sigma1_fprime", "sigma1_boundary", "loop2"):
            edges = [i for i in range(h.num_edges) if (gen.cycle >> i) & 1]
            if any(h.edges[e].rank != 2 for e in edges):
                raise NoValidDecomposition("boundary cycle contains a triangle")
            return self.grouped(self.by_color(edges))
        if gen.kind == "sigma2_promoted":
            return self._promoted(gen)
        if gen.kind == "sigma2_necklace":
            return self._necklace(gen)
        if gen.kind == "sigma2_bridged":
            return self._bridged(gen)
        raise NoValidDecomposition(f"unknown generator kind {gen.kind!r}")

    def _promoted(self, gen: Generator) -> List[int]:
        """Inner edges of the class missing from the cycle, the kept boundary
        edges, and the outer triangle sides."""
        rec = self.h.faces[gen.face]
        groups: Dict[str, List[int]] = {c: [] for c in COLOR_ORDER}
        used_class = {
            self.h.edges[e].color for e in rec.fprime if (gen.cycle >> e) & 1
        }
        other = "r" if used_class == {"g"} else "g"
        for e in rec.fprime:
            if self.h.edges[e].color == other:
                groups[other].append(self.link(e))
        for e in rec.kept:
            groups[self.h.edges[e].color].append(self.link(e))
        for t in rec.triangles:
            groups["b"].extend(self.side_links(t.edge_id, t.u_first, t.u_second))
        return self.grouped(groups)

    def _necklace(self, gen: Generator) -> List[int]:
        """Boundary edges toward the promoted neighbors, opposite survivors
        of the broken 4-gons, the inner connectors, and one inner triangle
        side per boundary vertex."""
        h = self.h
        rec = h.faces[gen.face]
        groups: Dict[str, List[int]] = {c: [] for c in COLOR_ORDER}
        for e in rec.boundary:
            partner = hypergraph._other_face(h, e, gen.face)
            kind = h.faces[partner].kind
            if kind == "promoted":
                groups[h.edges[e].color].append(self.link(e))
            elif kind == "broken":
                survivors = [
                    be
                    for be in h.faces[partner].boundary
                    if h.edges[be].rank == 2
                ]
                opposite = survivors[0] if survivors[1] == e else survivors[1]
                groups[h.edges[opposite].color].append(self.link(opposite))
            else:
                raise NoValidDecomposition("necklace face with a plain neighbor")
        for e in range(h.num_edges):
            if (gen.cycle >> e) & 1 and h.edges[e].provenance[0] == "fprime":
                groups[h.edges[e].color].append(self.link(e))
        for v in rec.boundary_vertices:
            t = self.tov[v]
            groups["b"].extend(self.side_links(t.edge_id, t.w, t.far(v)))
        return self.grouped(groups)

    def _bridged(self, gen: Generator) -> List[int]:
        """Inner edges over the corner triangles, the chain edges, the third
        edge at each of this face's vertices, this face's own boundary, and
        one triangle side toward each chain."""
        h = self.h
        bs = hypergraph.bridged_structure(h, gen.face)
        if bs is None:
            raise NoValidDecomposition("face lost its bridged structure")
        rec = h.faces[gen.face]
        groups: Dict[str, List[int]] = {c: [] for c in COLOR_ORDER}
        for e in bs.inner:
            groups[h.edges[e].color].append(self.link(e))
        for (e1, e2, e3) in bs.paths:
            for e in (e1, e2, e3):
                groups[h.edges[e].color].append(self.link(e))
        nb = len(rec.boundary)
        for v in rec.boundary_vertices:
            own = {
                rec.boundary[j]
                for j in range(nb)
                if v
                in (
                    rec.boundary_vertices[j],
                    rec.boundary_vertices[(j + 1) % nb],
                )
            }
            third = [i for i in h.incident_edges(v) if i not in own]
            if len(third) != 1:
                raise NoValidDecomposition("boundary vertex without a third edge")
            groups[h.edges[third[0]].color].append(self.link(third[0]))
        for e in rec.boundary:
            groups[h.edges[e].color].append(self.link(e))
        for (a_far, (ta, tb)) in zip(bs.kept, bs.triangles):
            ends = set(h.edges[a_far].vertices)
            for t in (ta, tb):
                anchor = t.u_first if t.u_first in ends else t.u_second
                groups["b"].extend(
                    self.side_links(t.edge_id, t.w, t.far(anchor))
                )
        return self.grouped(groups)


def decompose(code: SubsystemCode, gen: Generator) -> List[int]:
    """Ordered link-operator decomposition of one stabilizer generator,
    grouped r, g, b; validated against the generator and the prefix rule."""
    seq = _Decomposer(code).decompose(gen)
    target = pauli.cycle_operator(code.hypergraph, gen.cycle)
    paulis = [link_pauli(code, i) for i in seq]
    prod, phase = pauli.phase_product(paulis)
    if prod != target or phase % 2 != 0:
        raise NoValidDecomposition(
            f"decomposition of generator {gen.gid} does not reproduce it"
        )
    if not validate_prefixes(paulis):
        raise NoValidDecomposition(
            f"decomposition of generator {gen.gid} breaks the prefix rule"
        )
    return seq


def link_pauli(code: SubsystemCode, link_id: int) -> Pauli:
    lk = code.derived.links[link_id]
    return pauli.link_operator(lk.vertices, lk.color, code.n)


def validate_prefixes(ops: Sequence[Pauli]) -> bool:
    """Every prefix product commutes with the operator that follows it."""
    return first_bad_prefix(ops) is None


def first_bad_prefix(ops: Sequence[Pauli]) -> Optional[int]:
    if not ops:
        return None
    prefix = ops[0]
    for j in range(1, len(ops)):
        if not pauli.commutes(ops[j], prefix):
            return j
        prefix = prefix.mul(ops[j])
    return None


@dataclass(frozen=True)
class ScheduledLink:
    link: int
    vertices: Tuple[int, int]
    pauli: str
    stabilizers: Tuple[int, ...]


@dataclass(frozen=True)
class MeasurementSchedule:
    model: str  # "relaxed" | "exclusive"
    time_steps: int
    rounds: Tuple[Tuple[ScheduledLink, ...], ...]
    per_stabilizer: Tuple[Tuple[int, ...], ...]  # ordered link ids
    signs: Tuple[int, ...]  # +-1 sign of each generator's ordered product

    def ordered_links(self) -> List[int]:
        return [sl.link for rnd in self.rounds for sl in rnd]


def build_schedule(
    code: SubsystemCode, model: str = "relaxed"
) -> MeasurementSchedule:
    """Rounds r, g, b (relaxed) or r, g, b1, b2 (exclusive).

    The b round holds every rank-2 "b" link plus the two independent sides
    of each triangle; those sides share one qubit, so the exclusive model
    needs the extra step.  The full gauge generator set is scheduled;
    decompositions pick their outcomes out of the shared rounds.
    """
    if model not in ("relaxed", "exclusive"):
        raise ScheduleConflict(f"unknown model {model!r}")
    if not code.generators_complete:
        raise NoValidDecomposition(
            "stabilizer generators are incomplete for this hypergraph"
        )
    per_stab: List[List[int]] = []
    owners: Dict[int, List[int]] = {}
    signs: List[int] = []
    for gen in code.generators:
        seq = decompose(code, gen)
        per_stab.append(seq)
        prod, phase = pauli.phase_product([link_pauli(code, i) for i in seq])
        signs.append(1 if phase % 4 == 0 else -1)
        for i in seq:
            owners.setdefault(i, []).append(gen.gid)

    buckets: Dict[str, List[int]] = {"r": [], "g": [], "b1": [], "b2": []}
    for i, lk in enumerate(code.derived.links):
        if lk.origin[1] == 2:
            continue  # dependent side: the product of the other two
        if lk.color in ("r", "g"):
            buckets[lk.color].append(i)
        elif lk.origin[1] is None:
            buckets["b1"].append(i)
        else:
            buckets["b1" if lk.origin[1] == 0 else "b2"].append(i)
    if model == "relaxed":
        round_keys = [["r"], ["g"], ["b1", "b2"]]
    else:
        round_keys = [["r"], ["g"], ["b1"], ["b2"]]
    rounds: List[Tuple[ScheduledLink, ...]] = []
    for keys in round_keys:
        ids = sorted(i for k in keys for i in buckets[k])
        if not ids:
            continue
        rounds.append(
            tuple(
                ScheduledLink(
                    i,
                    code.derived.links[i].vertices,
                    code.derived.links[i].pauli,
                    tuple(sorted(owners.get(i, []))),
                )
                for i in ids
            )
        )
    _check_conflicts(code, rounds, model)
    # Per-generator sequences must respect the round order and stay valid
    # under the prefix rule when sorted by measurement time.
    time_of = {
        sl.link: (t, sl.link) for t, rnd in enumerate(rounds) for sl in rnd
    }
    ordered_stabs: List[Tuple[int, ...]] = []
    for gid, seq in enumerate(per_stab):
        temporal = tuple(sorted(seq, key=lambda i: time_of[i]))
        if not validate_prefixes([link_pauli(code, i) for i in temporal]):
            raise ScheduleConflict(
                f"generator {gid} breaks the prefix rule in time order"
            )
        ordered_stabs.append(temporal)
    return MeasurementSchedule(
        model=model,
        time_steps=len(rounds),
        rounds=tuple(rounds),
        per_stabilizer=tuple(ordered_stabs),
        signs=tuple(signs),
    )


def _check_conflicts(
    code: SubsystemCode,
    rounds: Sequence[Sequence[ScheduledLink]],
    model: str,
) -> None:
    for t, rnd in enumerate(rounds):
        seen: Dict[int, int] = {}
        for sl in rnd:
            for v in sl.vertices:
                if v in seen:
                    if model == "exclusive":
                        raise ScheduleConflict(
                            f"qubit {v} measured twice in time step {t}"
                        )
                    other = code.derived.links[seen[v]]
                    a = pauli.link_operator(other.vertices, other.color, code.n)
                    b = link_pauli(code, sl.link)
                    if not pauli.commutes(a, b):
                        raise ScheduleConflict(
                            f"anticommuting links share qubit {v} in round {t}"
                        )
                seen[v] = sl.link


class Tableau:
    """Stabilizer tableau with destabilizers and sign tracking.

    Rows are stored as raw (x, z) int pairs; only stabilizer signs matter
    for outcomes, so destabilizer phases are not tracked.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.sx: List[int] = [0] * n
        self.sz: List[int] = [1 << i for i in range(n)]
        self.dx: List[int] = [1 << i for i in range(n)]
        self.dz: List[int] = [0] * n
        self.sign: List[int] = [0] * n  # i-exponent (0 or 2) per stabilizer

    @property
    def stab(self) -> List[Pauli]:
        return [Pauli(self.n, x, z) for x, z in zip(self.sx, self.sz)]

    @property
    def destab(self) -> List[Pauli]:
        return [Pauli(self.n, x, z) for x, z in zip(self.dx, self.dz)]

    def apply_h(self, q: int) -> None:
        bit = 1 << q
        for xs, zs, track in ((self.sx, self.sz, True), (self.dx, self.dz, False)):
            for i in range(self.n):
                xb, zb = xs[i] & bit, zs[i] & bit
                if xb and zb and track:
                    self.sign[i] ^= 2
                if bool(xb) != bool(zb):
                    xs[i] ^= bit
                    zs[i] ^= bit

    def apply_s(self, q: int) -> None:
        bit = 1 << q
        for xs, zs, track in ((self.sx, self.sz, True), (self.dx, self.dz, False)):
            for i in range(self.n):
                if xs[i] & bit:
                    if zs[i] & bit and track:
                        self.sign[i] ^= 2
                    zs[i] ^= bit

    def apply_cnot(self, c: int, t: int) -> None:
        cb, tb = 1 << c, 1 << t
        for xs, zs, track in ((self.sx, self.sz, True), (self.dx, self.dz, False)):
            for i in range(self.n):
                xc, zc = xs[i] & cb, zs[i] & cb
                xt, zt = xs[i] & tb, zs[i] & tb
                if track and xc and zt and (bool(xt) == bool(zc)):
                    self.sign[i] ^= 2
                if xc:
                    xs[i] ^= tb
                if zt:
                    zs[i] ^= cb

    def measure(self, op: Pauli, sign: int, rng: random.Random) -> int:
        """Measure (+-1) * op; returns the outcome bit (0 for the +1
        projector)."""
        ox, oz = op.x, op.z
        sx, sz = self.sx, self.sz
        anti = [
            i
            for i in range(self.n)
            if ((sx[i] & oz).bit_count() ^ (sz[i] & ox).bit_count()) & 1
        ]
        if anti:
            p0 = anti[0]
            px, pz = sx[p0], sz[p0]
            for i in anti[1:]:
                ph = pauli._phase_exponent(sx[i], sz[i], px, pz)
                self.sign[i] = (self.sign[i] + self.sign[p0] + ph) % 4
                sx[i] ^= px
                sz[i] ^= pz
            dx, dz = self.dx, self.dz
            for i in range(self.n):
                if i != p0 and ((dx[i] & oz).bit_count() ^ (dz[i] & ox).bit_count()) & 1:
                    dx[i] ^= px
                    dz[i] ^= pz
            dx[p0], dz[p0] = px, pz
            outcome = rng.randrange(2)
            sx[p0], sz[p0] = ox, oz
            self.sign[p0] = (2 * outcome + (0 if sign == 1 else 2)) % 4
            return outcome
        acc_x = acc_z = 0
        phase = 0
        for i in range(self.n):
            if ((self.dx[i] & oz).bit_count() ^ (self.dz[i] & ox).bit_count()) & 1:
                phase = (
                    phase
                    + pauli._phase_exponent(acc_x, acc_z, sx[i], sz[i])
                    + self.sign[i]
                ) % 4
                acc_x ^= sx[i]
                acc_z ^= sz[i]
        if acc_x != ox or acc_z != oz or phase % 2 != 0:
            raise InconsistentOutcome("deterministic measurement mismatch")
        value = 0 if phase % 4 == 0 else 1
        return value ^ (0 if sign == 1 else 1)

    def randomize(self, rng: random.Random, depth: int = 3) -> None:
        for _ in range(depth * self.n):
            gate = rng.randrange(3)
            if gate == 0:
                self.apply_h(rng.randrange(self.n))
            elif gate == 1:
                self.apply_s(rng.randrange(self.n))
            else:
                c = rng.randrange(self.n)
                t = rng.randrange(self.n)
                if c != t:
                    self.apply_cnot(c, t)


@dataclass(frozen=True)
class SyndromeReport:
    trials: int
    agreement: float
    direct_agreement: float
    idempotent: bool
    varying_links: int
    failures: Tuple[Tuple[int, int], ...] = ()  # (generator, trial) witnesses

    @property
    def consistent(self) -> bool:
        return self.agreement == 1.0 and self.direct_agreement == 1.0


def simulate_syndrome(
    code: SubsystemCode,
    schedule: MeasurementSchedule,
    trials: int = 100,
    seed: int = 0,
    strict: bool = True,
) -> SyndromeReport:
    """Per random stabilizer state, measure every stabilizer twice through
    its ordered link sequence and XOR-combine the outcomes; the two combined
    values must agree, and a direct measurement of the signed generator must
    reproduce them.  With strict=True any disagreement raises
    InconsistentOutcome; otherwise the fractions are reported (useful for
    the adversarial broken-schedule fixtures)."""
    rng = random.Random(seed)
    n = code.n
    gen_paulis = []
    for seq in schedule.per_stabilizer:
        prod, phase = pauli.phase_product([link_pauli(code, i) for i in seq])
        if phase % 2 and strict:
            raise InconsistentOutcome("generator product has imaginary phase")
        gen_paulis.append((prod, 1 if phase % 4 == 0 else -1))
    link_ops = {
        i: link_pauli(code, i)
        for seq in schedule.per_stabilizer
        for i in seq
    }
    agree = 0
    direct_agree = 0
    total = 0
    idempotent = True
    failures: List[Tuple[int, int]] = []
    link_outcomes: Dict[int, set] = {i: set() for i in link_ops}

    def sweep(tab: Tableau, record: bool) -> List[int]:
        out = []
        for seq in schedule.per_stabilizer:
            b = 0
            for i in seq:
                o = tab.measure(link_ops[i], 1, rng)
                b ^= o
                if record:
                    link_outcomes[i].add(o)
            out.append(b)
        return out

    for trial in range(trials):
        tab = Tableau(n)
        tab.randomize(rng)
        syn1 = sweep(tab, True)
        syn2 = sweep(tab, False)
        if syn1 != syn2:
            idempotent = False
        for gid, (b1, b2) in enumerate(zip(syn1, syn2)):
            total += 1
            if b1 == b2:
                agree += 1
            elif strict:
                raise InconsistentOutcome(
                    f"generator {gid} trial {trial}: {b1} != {b2}"
                )
            else:
                failures.append((gid, trial))
            wop, wsign = gen_paulis[gid]
            direct = tab.measure(wop, wsign, rng)
            if direct == b2:
                direct_agree += 1
            elif strict:
                raise InconsistentOutcome(
                    f"generator {gid} trial {trial}: direct {direct} != {b2}"
                )
            elif (gid, trial) not in failures:
                failures.append((gid, trial))
    varying = sum(1 for i in link_ops if len(link_outcomes[i]) == 2)
    return SyndromeReport(
        trials=trials,
        agreement=agree / max(total, 1),
        direct_agreement=direct_agree / max(total, 1),
        idempotent=idempotent,
        varying_links=varying,
        failures=tuple(failures[:32]),
    )


def schedule_json_dict(schedule: MeasurementSchedule) -> dict:
    return {
        "model": schedule.model,
        "time_steps": schedule.time_steps,
        "rounds": [
            [
                {
                    "edge": sl.link,
                    "pauli": sl.pauli,
                    "vertices": list(sl.vertices),
                    "stabilizers": list(sl.stabilizers),
                }
                for sl in rnd
            ]
            for rnd in schedule.rounds
        ],
        "per_stabilizer": [list(seq) for seq in schedule.per_stabilizer],
    }


def schedule_json(schedule: MeasurementSchedule) -> str:
    return json.dumps(schedule_json_dict(schedule), indent=2, sort_keys=True)
